mod common;

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use t0kit::constructions::{find_homeomorphism, SpaceMap};
use t0kit::enumerate::{all_continuous_maps, all_spaces, all_spaces_max_opens, canonical_form};
use t0kit::FiniteSpace;

const COUNTS: [usize; 7] = [1, 1, 2, 5, 16, 63, 318];
const RELABELINGS: usize = 100;

#[test]
fn counts_match_the_labeled_oracle() {
    for n in 0..=6 {
        let spaces = all_spaces(n).unwrap();
        assert_eq!(spaces.len(), COUNTS[n], "n = {n}");
        let ours: BTreeSet<Vec<bool>> = common::codes_of(&spaces).into_iter().collect();
        assert_eq!(ours.len(), spaces.len(), "duplicates at n = {n}");
        assert_eq!(ours, common::oracle_classes(n), "n = {n}");
    }
}

#[test]
fn canonical_form_decides_homeomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pool: Vec<FiniteSpace> = Vec::new();
    for n in 1..=4 {
        for x in all_spaces(n).unwrap() {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            pool.push(x.relabel(&perm));
            pool.push(x);
        }
    }
    let forms: Vec<_> = pool.iter().map(|x| canonical_form(x).unwrap()).collect();
    for (i, x) in pool.iter().enumerate() {
        for (j, y) in pool.iter().enumerate() {
            let homeo = x.n() == y.n() && find_homeomorphism(x, y).unwrap().is_some();
            assert_eq!(forms[i] == forms[j], homeo, "{x:?} vs {y:?}");
        }
    }
}

#[test]
fn canonical_form_survives_relabeling() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 1..=5 {
        for x in all_spaces(n).unwrap() {
            let form = canonical_form(&x).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            for _ in 0..RELABELINGS {
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&x.relabel(&perm)).unwrap(), form);
            }
        }
    }
}

#[test]
fn open_bounded_enumeration_is_complete() {
    // every space on at most 5 points with at most 8 opens, found by brute force
    let limit = 8;
    let expected: BTreeSet<Vec<bool>> = (1..=5)
        .flat_map(|n| all_spaces(n).unwrap())
        .filter(|x| x.count_opens().unwrap() <= limit)
        .map(|x| common::codes_of(&[x]).remove(0))
        .collect();
    let got = all_spaces_max_opens(limit).unwrap();
    assert!(got.iter().all(|x| x.count_opens().unwrap() <= limit));
    // n points need at least n + 1 opens
    assert!(got.iter().all(|x| x.n() < limit));
    let got: BTreeSet<Vec<bool>> = common::codes_of(&got).into_iter().collect();
    let small: BTreeSet<Vec<bool>> = got.iter().filter(|c| c.len() <= 25).cloned().collect();
    assert_eq!(small, expected);
}

fn oracle_monotone(x: &FiniteSpace, y: &FiniteSpace, f: &[usize]) -> bool {
    x.points()
        .all(|a| x.points().all(|b| !x.leq(a, b) || y.leq(f[a], f[b])))
}

fn oracle_continuous(x: &FiniteSpace, y: &FiniteSpace, f: &[usize]) -> bool {
    y.opens().unwrap().iter().all(|v| {
        let pre = x.set(x.points().filter(|&p| v.contains(f[p])));
        x.opens().unwrap().contains(&pre)
    })
}

#[test]
fn continuity_is_monotonicity() {
    let spaces: Vec<FiniteSpace> = (1..=3).flat_map(|n| all_spaces(n).unwrap()).collect();
    for x in &spaces {
        for y in &spaces {
            let total = y.n().pow(x.n() as u32);
            let mut continuous = 0;
            for code in 0..total {
                let f: Vec<usize> = (0..x.n()).map(|i| code / y.n().pow(i as u32) % y.n()).collect();
                let m = SpaceMap::new(x, y, f.clone()).unwrap();
                let mono = oracle_monotone(x, y, &f);
                assert_eq!(mono, oracle_continuous(x, y, &f));
                assert_eq!(m.is_continuous(), mono);
                continuous += usize::from(mono);
            }
            assert_eq!(all_continuous_maps(x, y).unwrap().len(), continuous);
        }
    }
}

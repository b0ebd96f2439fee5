use t0kit::b_topology::{b_closure, is_b_dense};
use t0kit::constructions::{
    canonical_embedding, cube_b_closure, diagonal, find_homeomorphism, is_b_retract, product, SpaceMap,
};
use t0kit::enumerate::{all_continuous_maps, all_spaces};
use t0kit::{FiniteSpace, PointSet};

fn spaces_up_to(n: usize) -> Vec<FiniteSpace> {
    (1..=n).flat_map(|k| all_spaces(k).unwrap()).collect()
}

#[test]
fn b_retracts_are_homeomorphic() {
    let spaces = spaces_up_to(4);
    let mut found = 0;
    for x in &spaces {
        for y in &spaces {
            let sections: Vec<SpaceMap> = all_continuous_maps(x, y)
                .unwrap()
                .into_iter()
                .filter(|s| is_b_dense(y, &s.image()))
                .collect();
            if sections.is_empty() {
                continue;
            }
            let retractions = all_continuous_maps(y, x).unwrap();
            for s in &sections {
                for r in &retractions {
                    if is_b_retract(s, r).unwrap() {
                        found += 1;
                        assert!(find_homeomorphism(x, y).unwrap().is_some());
                    }
                }
            }
        }
    }
    assert!(found > 0);
}

#[test]
fn factors_land_in_the_b_closure_of_the_image() {
    let spaces = spaces_up_to(3);
    for x in &spaces {
        for y in &spaces {
            let ks: Vec<SpaceMap> = all_continuous_maps(x, y)
                .unwrap()
                .into_iter()
                .filter(|k| is_b_dense(y, &k.image()))
                .collect();
            for z in &spaces {
                let gs = all_continuous_maps(y, z).unwrap();
                for k in &ks {
                    for g in &gs {
                        let f = k.then(g).unwrap();
                        assert!(g.image().is_subset(&b_closure(z, &f.image())));
                    }
                }
            }
        }
    }
}

#[test]
fn products_of_points_are_points() {
    for k in 0..=3 {
        let p = product(&vec![FiniteSpace::point(); k]).unwrap();
        assert!(find_homeomorphism(&p.space, &FiniteSpace::point()).unwrap().is_some());
    }
}

#[test]
fn projections_are_continuous_and_jointly_monic() {
    let small = spaces_up_to(3);
    let mut factor_lists: Vec<Vec<FiniteSpace>> = small.iter().map(|x| vec![x.clone()]).collect();
    for a in &small {
        for b in &small {
            factor_lists.push(vec![a.clone(), b.clone()]);
        }
    }
    for a in &small[..4] {
        for b in &small[..4] {
            for c in &small[..4] {
                factor_lists.push(vec![a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    for factors in factor_lists {
        let p = product(&factors).unwrap();
        assert!(p.projections.iter().all(SpaceMap::is_continuous));
        for i in p.space.points() {
            let ti = p.tuple(i);
            assert_eq!(p.index(&ti), i);
            for j in p.space.points() {
                let tj = p.tuple(j);
                let same = p.projections.iter().all(|pr| pr.apply(i) == pr.apply(j));
                assert_eq!(same, i == j);
                // the product order is componentwise
                let componentwise = factors.iter().enumerate().all(|(f, x)| x.leq(ti[f], tj[f]));
                assert_eq!(p.space.leq(i, j), componentwise);
            }
        }
    }
}

#[test]
fn diagonal_factors_through_projections() {
    let spaces = spaces_up_to(3);
    for x in &spaces {
        let maps: Vec<SpaceMap> = spaces
            .iter()
            .take(3)
            .flat_map(|y| all_continuous_maps(x, y).unwrap().into_iter().take(2))
            .collect();
        let (delta, prod) = diagonal(&maps).unwrap();
        for (f, pr) in maps.iter().zip(&prod.projections) {
            assert_eq!(&delta.then(pr).unwrap(), f);
        }
    }
}

#[test]
fn canonical_embedding_b_closure_is_the_image() {
    for x in spaces_up_to(4).into_iter().filter(|x| x.count_opens().unwrap() <= 12) {
        let emb = canonical_embedding(&x).unwrap();
        let mut codes = emb.codes(&x).unwrap();
        codes.sort_unstable();
        let closure = cube_b_closure(emb.chi.m(), &codes).unwrap();
        assert_eq!(closure, codes);
        // codes order like the space
        let raw = emb.codes(&x).unwrap();
        for a in x.points() {
            for b in x.points() {
                assert_eq!(x.leq(a, b), raw[a] & raw[b] == raw[a]);
            }
        }
    }
}

#[test]
fn b_dense_images_are_everything() {
    for x in spaces_up_to(4) {
        for m in 0u64..(1 << x.n()) {
            let a = PointSet::from_mask(x.n(), m);
            assert_eq!(is_b_dense(&x, &a), a.is_full());
        }
    }
}

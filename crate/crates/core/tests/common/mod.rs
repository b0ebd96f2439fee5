//! Brute-force oracles shared by the integration tests. None of them call
//! the library's canonical forms or homeomorphism search.

#![allow(dead_code)]

use std::collections::BTreeSet;

use t0kit::FiniteSpace;

/// Strict order relations on `0..n` with `i < j` numerically whenever
/// `i` is below `j`, transitively closed. Every poset has such a labeling.
pub fn natural_posets(n: usize) -> Vec<Vec<Vec<bool>>> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for bits in 0u64..(1u64 << pairs.len()) {
        let mut lt = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            lt[i][j] = bits >> k & 1 == 1;
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| !lt[i][j] || (0..n).all(|k| !lt[j][k] || lt[i][k])));
        if transitive {
            out.push(lt);
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Least bit string of the strict relation over all relabelings.
pub fn brute_code(lt: &[Vec<bool>], perms: &[Vec<usize>]) -> Vec<bool> {
    let n = lt.len();
    perms
        .iter()
        .map(|p| {
            let mut code = vec![false; n * n];
            for i in 0..n {
                for j in 0..n {
                    code[p[i] * n + p[j]] = lt[i][j];
                }
            }
            code
        })
        .min()
        .unwrap_or_default()
}

pub fn strict_order(x: &FiniteSpace) -> Vec<Vec<bool>> {
    (0..x.n()).map(|i| (0..x.n()).map(|j| x.lt(i, j)).collect()).collect()
}

/// Posets on `n` points up to isomorphism, as brute-force codes.
pub fn oracle_classes(n: usize) -> BTreeSet<Vec<bool>> {
    let perms = permutations(n);
    natural_posets(n).iter().map(|lt| brute_code(lt, &perms)).collect()
}

pub fn codes_of(spaces: &[FiniteSpace]) -> Vec<Vec<bool>> {
    spaces
        .iter()
        .map(|x| brute_code(&strict_order(x), &permutations(x.n())))
        .collect()
}

pub fn perms(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
}

/// All subsets of `0..n` as membership lists.
pub fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..(1 << n)).map(move |b| (0..n).filter(|&i| b >> i & 1 == 1).collect())
}

//! Exhaustive generation: all finite T0 spaces up to homeomorphism, all
//! continuous maps between two spaces, and canonical forms.

use std::collections::{BTreeMap, HashSet};

use serde::Serialize;

use crate::caps::caps;
use crate::constructions::{find_homeomorphism, SpaceMap};
use crate::error::{Error, Result};
use crate::finite_space::FiniteSpace;
use crate::pointset::PointSet;

/// Largest carrier accepted by [`all_spaces`].
pub const MAX_ENUMERATION_SIZE: usize = 6;
/// Largest carrier accepted by [`canonical_form`].
pub const MAX_CANONICAL_SIZE: usize = 8;

/// A byte string determined by the specialization order up to relabeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalForm {
    pub signature: Vec<u8>,
}

/// Colour refinement on the order: start from `(|↑x|, |↓x|)` and split by
/// the multisets of colours strictly above and below until stable. Colour
/// ids are ranks of the refined keys, so they do not depend on labels.
pub fn refined_colours(x: &FiniteSpace) -> Vec<usize> {
    let n = x.n();
    let mut colour: Vec<usize> = {
        let keys: Vec<(usize, usize)> = x.points().map(|p| (x.up(p).count(), x.down(p).count())).collect();
        rank(&keys)
    };
    loop {
        let keys: Vec<(usize, Vec<usize>, Vec<usize>)> = x
            .points()
            .map(|p| {
                let mut above: Vec<usize> = x.up(p).iter().filter(|&q| q != p).map(|q| colour[q]).collect();
                let mut below: Vec<usize> = x.down(p).iter().filter(|&q| q != p).map(|q| colour[q]).collect();
                above.sort_unstable();
                below.sort_unstable();
                (colour[p], above, below)
            })
            .collect();
        let next = rank(&keys);
        let classes = |c: &[usize]| c.iter().collect::<HashSet<_>>().len();
        if classes(&next) == classes(&colour) || n == 0 {
            return next;
        }
        colour = next;
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

/// The bits that placing point `p` at position `k` adds to the encoding:
/// for each earlier position `i`, `p_i ≤ p` then `p ≤ p_i`.
fn block(x: &FiniteSpace, placed: &[usize], p: usize) -> Vec<bool> {
    let mut bits = Vec::with_capacity(2 * placed.len());
    for &q in placed {
        bits.push(x.leq(q, p));
        bits.push(x.leq(p, q));
    }
    bits
}

/// The lexicographically least encoding over all labelings that list the
/// colour classes in colour order, found by backtracking with prefix
/// pruning.
pub fn canonical_form(x: &FiniteSpace) -> Result<CanonicalForm> {
    let n = x.n();
    if n > MAX_CANONICAL_SIZE {
        return Err(Error::cap(
            "canonical form carrier",
            n as u128,
            MAX_CANONICAL_SIZE as u128,
        ));
    }
    let colour = refined_colours(x);
    let mut slots: Vec<usize> = colour.clone();
    slots.sort_unstable();

    struct Search<'a> {
        x: &'a FiniteSpace,
        colour: &'a [usize],
        slots: &'a [usize],
        placed: Vec<usize>,
        used: Vec<bool>,
        current: Vec<bool>,
        best: Option<Vec<bool>>,
    }

    impl Search<'_> {
        fn run(&mut self) {
            let k = self.placed.len();
            if k == self.slots.len() {
                if self.best.as_ref().is_none_or(|b| self.current < *b) {
                    self.best = Some(self.current.clone());
                }
                return;
            }
            for p in 0..self.slots.len() {
                if self.used[p] || self.colour[p] != self.slots[k] {
                    continue;
                }
                let bits = block(self.x, &self.placed, p);
                let len = self.current.len();
                self.current.extend_from_slice(&bits);
                let worse = self
                    .best
                    .as_ref()
                    .is_some_and(|b| self.current.as_slice() > &b[..self.current.len()]);
                if !worse {
                    self.placed.push(p);
                    self.used[p] = true;
                    self.run();
                    self.used[p] = false;
                    self.placed.pop();
                }
                self.current.truncate(len);
            }
        }
    }

    let mut search = Search {
        x,
        colour: &colour,
        slots: &slots,
        placed: Vec::new(),
        used: vec![false; n],
        current: Vec::new(),
        best: None,
    };
    search.run();
    let bits = search.best.unwrap_or_default();
    let mut signature = vec![n as u8];
    signature.extend(slots.iter().map(|&c| c as u8));
    for chunk in bits.chunks(8) {
        signature.push(chunk.iter().enumerate().fold(0u8, |acc, (i, &b)| acc | (b as u8) << i));
    }
    Ok(CanonicalForm { signature })
}

/// `X` with one new point `n` placed above exactly the points of the lower
/// set `d`; the new point is maximal.
fn extend_above(x: &FiniteSpace, d: &PointSet) -> FiniteSpace {
    let n = x.n();
    let mut leq = vec![vec![false; n + 1]; n + 1];
    for a in x.points() {
        for b in x.up(a).iter() {
            leq[a][b] = true;
        }
        leq[a][n] = d.contains(a);
    }
    leq[n][n] = true;
    FiniteSpace::from_order(&leq).expect("adding a maximal point keeps a partial order")
}

/// Lower sets of `X`: the complements of its opens.
fn lower_sets(x: &FiniteSpace) -> Result<Vec<PointSet>> {
    x.closed_sets()
}

/// Removes duplicates up to homeomorphism, keeping first occurrences.
/// Canonical forms are used up to [`MAX_CANONICAL_SIZE`] points; larger
/// spaces are bucketed by invariants and compared by homeomorphism search.
#[derive(Default)]
struct Dedup {
    seen: HashSet<CanonicalForm>,
    buckets: BTreeMap<Vec<u8>, Vec<FiniteSpace>>,
}

impl Dedup {
    fn insert(&mut self, x: &FiniteSpace) -> Result<bool> {
        if x.n() <= MAX_CANONICAL_SIZE {
            return Ok(self.seen.insert(canonical_form(x)?));
        }
        let mut key = vec![x.n() as u8];
        let mut colours = refined_colours(x);
        colours.sort_unstable();
        key.extend(colours.iter().map(|&c| c as u8));
        let bucket = self.buckets.entry(key).or_default();
        for y in bucket.iter() {
            if find_homeomorphism(x, y)?.is_some() {
                return Ok(false);
            }
        }
        bucket.push(x.clone());
        Ok(true)
    }
}

/// One representative of every T0 space on `n` points, in generation order.
///
/// Every finite poset has a maximal point whose removal leaves a poset one
/// smaller, so extending every representative of size `k` by a new maximal
/// point above each of its lower sets reaches every size-`k+1` poset.
pub fn all_spaces(n: usize) -> Result<Vec<FiniteSpace>> {
    if n > MAX_ENUMERATION_SIZE {
        return Err(Error::cap(
            "enumeration carrier",
            n as u128,
            MAX_ENUMERATION_SIZE as u128,
        ));
    }
    let mut level = vec![FiniteSpace::empty()];
    for _ in 0..n {
        let mut dedup = Dedup::default();
        let mut next = Vec::new();
        for x in &level {
            for d in lower_sets(x)? {
                let y = extend_above(x, &d);
                if dedup.insert(&y)? {
                    next.push(y);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Representatives of all spaces with `1..=n` points.
pub fn all_spaces_up_to(n: usize) -> Result<Vec<FiniteSpace>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(all_spaces(k)?);
    }
    Ok(out)
}

/// One representative of every nonempty T0 space with `|O(X)| ≤ limit`.
///
/// Adding a maximal point strictly increases the number of opens (every old
/// open `U` gives the open `U ∪ {new}`, and `{new}` itself is new), so
/// spaces over the limit can be pruned without losing any below it.
pub fn all_spaces_max_opens(limit: usize) -> Result<Vec<FiniteSpace>> {
    if limit as u128 > caps().family_limit() {
        return Err(Error::cap("open-set family", limit as u128, caps().family_limit()));
    }
    let mut out = Vec::new();
    let mut level = vec![FiniteSpace::empty()];
    while !level.is_empty() {
        let mut dedup = Dedup::default();
        let mut next = Vec::new();
        for x in &level {
            for d in lower_sets(x)? {
                let y = extend_above(x, &d);
                if y.count_opens()? <= limit && dedup.insert(&y)? {
                    next.push(y);
                }
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    Ok(out)
}

/// Every continuous map `X → Y`. All `|Y|^|X|` functions are generated and
/// each is kept iff continuous; [`SpaceMap::new`] computes continuity by
/// preimages and by monotonicity and insists they agree.
pub fn all_continuous_maps(x: &FiniteSpace, y: &FiniteSpace) -> Result<Vec<SpaceMap>> {
    let total = (y.n() as u128).checked_pow(x.n() as u32).unwrap_or(u128::MAX);
    let cap = caps().maps as u128;
    if total > cap {
        return Err(Error::cap("map enumeration", total, cap));
    }
    let mut out = Vec::new();
    if y.n() == 0 && x.n() > 0 {
        return Ok(out);
    }
    let mut f = vec![0usize; x.n()];
    loop {
        let m = SpaceMap::new(x, y, f.clone())?;
        if m.is_continuous() {
            out.push(m);
        }
        // odometer, first coordinate fastest
        let mut i = 0;
        loop {
            if i == f.len() {
                return Ok(out);
            }
            f[i] += 1;
            if f[i] < y.n() {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4).map(|n| all_spaces(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16]);
        assert!(all_spaces(7).is_err());
    }

    #[test]
    fn map_counts() {
        let s = FiniteSpace::sigma2();
        let a = FiniteSpace::discrete(2);
        assert_eq!(all_continuous_maps(&s, &s).unwrap().len(), 3);
        assert_eq!(all_continuous_maps(&a, &s).unwrap().len(), 4);
        assert_eq!(all_continuous_maps(&s, &a).unwrap().len(), 2);
        assert_eq!(all_continuous_maps(&FiniteSpace::empty(), &s).unwrap().len(), 1);
        assert_eq!(all_continuous_maps(&s, &FiniteSpace::empty()).unwrap().len(), 0);
    }

    #[test]
    fn canonical_form_examples() {
        let s = FiniteSpace::sigma2();
        let flipped = s.relabel(&[1, 0]);
        assert_ne!(s, flipped);
        assert_eq!(canonical_form(&s).unwrap(), canonical_form(&flipped).unwrap());
        assert_ne!(
            canonical_form(&s).unwrap(),
            canonical_form(&FiniteSpace::discrete(2)).unwrap()
        );
        let forms: HashSet<CanonicalForm> = all_spaces(3)
            .unwrap()
            .iter()
            .map(|x| canonical_form(x).unwrap())
            .collect();
        assert_eq!(forms.len(), 5);
        assert!(canonical_form(&FiniteSpace::chain(9)).is_err());
    }

    #[test]
    fn max_opens_contains_long_chain() {
        let spaces = all_spaces_max_opens(4).unwrap();
        // chains of 1..=3 points and the 2-antichain
        assert_eq!(spaces.len(), 4);
        assert!(spaces.iter().all(|x| x.count_opens().unwrap() <= 4));
        assert!(spaces.iter().any(|x| *x == FiniteSpace::chain(3)));
        assert!(!spaces.iter().any(|x| x.n() == 4));
    }
}

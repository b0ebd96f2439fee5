//! The b-topology: the topology generated by the sets `U ∩ ↓x` with `x ∈ U`
//! open.

use serde::Serialize;

use crate::constructions::{find_homeomorphism, subspace};
use crate::error::{Error, Result};
use crate::finite_space::FiniteSpace;
use crate::pointset::PointSet;

/// The basic b-open sets of a space, kept next to the space they came from.
pub struct BTopologyView<'a> {
    owner: &'a FiniteSpace,
    base: Vec<PointSet>,
}

impl<'a> BTopologyView<'a> {
    pub fn new(owner: &'a FiniteSpace) -> Result<Self> {
        Ok(BTopologyView {
            owner,
            base: b_basic_opens(owner)?,
        })
    }

    pub fn owner(&self) -> &FiniteSpace {
        self.owner
    }

    pub fn base(&self) -> &[PointSet] {
        &self.base
    }

    /// A set is b-open iff it is the union of the basic sets it contains.
    pub fn is_b_open(&self, a: &PointSet) -> bool {
        let mut u = self.owner.empty_set();
        for b in &self.base {
            if b.is_subset(a) {
                u.union_with(b);
            }
        }
        u == *a
    }
}

/// `{U ∩ ↓x : x ∈ U ∈ O(X)}`, deduplicated and sorted.
pub fn b_basic_opens(x: &FiniteSpace) -> Result<Vec<PointSet>> {
    let mut base = Vec::new();
    for u in x.opens()? {
        for p in u.iter() {
            base.push(u.intersection(x.down(p)));
        }
    }
    base.sort();
    base.dedup();
    Ok(base)
}

/// `y ∈ cl_b(A)` iff every basic b-open around `y` meets `A`. Every open
/// containing `y` contains `↑y`, so testing the smallest one, `↑y ∩ ↓y`,
/// decides all of them.
pub fn b_closure_contains(x: &FiniteSpace, a: &PointSet, y: usize) -> bool {
    x.up(y).intersection(x.down(y)).intersects(a)
}

pub fn b_closure(x: &FiniteSpace, a: &PointSet) -> PointSet {
    PointSet::from_points(x.n(), x.points().filter(|&y| b_closure_contains(x, a, y)))
}

pub fn is_b_closed(x: &FiniteSpace, a: &PointSet) -> bool {
    b_closure(x, a) == *a
}

pub fn is_b_dense(x: &FiniteSpace, a: &PointSet) -> bool {
    b_closure(x, a).is_full()
}

/// `bX`: the carrier of `X` with the topology generated by the basic b-opens.
pub fn b_space(x: &FiniteSpace) -> Result<FiniteSpace> {
    FiniteSpace::from_opens(x.n(), &b_basic_opens(x)?)
}

/// Which open separates a point from a chain pair `{x1, x2}` in the
/// b-openness argument for `X ∖ {x1, x2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SeparatorCase {
    /// `↓x` misses the pair; `U = X`.
    Disjoint,
    /// `x1 < x2 < x`; `U = X ∖ ↓x2`.
    AboveBoth,
    /// `x1 < x`, `x2 ≰ x`; `U = X ∖ ↓x1`.
    AboveLower,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separator {
    pub point: usize,
    pub case: SeparatorCase,
    pub open: PointSet,
}

/// For every point outside `{x1, x2}` (with `x1 < x2`), the open `U ∋ x`
/// with `↓x ∩ U ∩ {x1, x2} = ∅`, chosen by the three-way case split. Each
/// returned separator is checked.
pub fn chain_pair_separators(x: &FiniteSpace, x1: usize, x2: usize) -> Result<Vec<Separator>> {
    if !x.lt(x1, x2) {
        return Err(Error::NotAChainPair(x1, x2));
    }
    let pair = x.set([x1, x2]);
    let mut out = Vec::new();
    for p in x.points() {
        if pair.contains(p) {
            continue;
        }
        let below = x.down(p);
        let (case, open) = if !below.intersects(&pair) {
            (SeparatorCase::Disjoint, x.full_set())
        } else if below.contains(x2) {
            (SeparatorCase::AboveBoth, x.down(x2).complement())
        } else {
            (SeparatorCase::AboveLower, x.down(x1).complement())
        };
        debug_assert!(x.is_open(&open));
        debug_assert!(open.contains(p));
        debug_assert!(!below.intersection(&open).intersects(&pair));
        out.push(Separator { point: p, case, open });
    }
    Ok(out)
}

/// Whether `{x1, x2}` is b-closed and homeomorphic to Σ2 as a subspace.
pub fn chain_pair_is_b_closed_sigma2(x: &FiniteSpace, x1: usize, x2: usize) -> Result<bool> {
    if !x.lt(x1, x2) {
        return Err(Error::NotAChainPair(x1, x2));
    }
    let pair = x.set([x1, x2]);
    if !is_b_closed(x, &pair) {
        return Ok(false);
    }
    let (sub, _) = subspace(x, &pair)?;
    Ok(find_homeomorphism(&sub, &FiniteSpace::sigma2())?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v_poset() -> FiniteSpace {
        FiniteSpace::from_generating_pairs(3, &[(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn sigma2_base() {
        let s = FiniteSpace::sigma2();
        let base = b_basic_opens(&s).unwrap();
        assert_eq!(base, vec![s.set([0]), s.set([1]), s.full_set()]);
    }

    #[test]
    fn one_point_base() {
        let p = FiniteSpace::point();
        assert_eq!(b_basic_opens(&p).unwrap(), vec![p.full_set()]);
    }

    #[test]
    fn chain_base_contains_middle_singleton() {
        let c = FiniteSpace::chain(3);
        assert!(b_basic_opens(&c).unwrap().contains(&c.set([1])));
    }

    #[test]
    fn closure_in_sigma2() {
        let s = FiniteSpace::sigma2();
        assert!(is_b_closed(&s, &s.set([0])));
        assert!(is_b_dense(&s, &s.full_set()));
        assert!(!is_b_dense(&s, &s.set([1])));
        let view = BTopologyView::new(&s).unwrap();
        assert!(view.is_b_open(&s.set([1])));
        assert!(view.is_b_open(&s.set([0])));
    }

    #[test]
    fn b_space_examples() {
        assert_eq!(b_space(&FiniteSpace::sigma2()).unwrap(), FiniteSpace::discrete(2));
        assert_eq!(b_space(&FiniteSpace::discrete(3)).unwrap(), FiniteSpace::discrete(3));
        assert_eq!(b_space(&FiniteSpace::chain(3)).unwrap(), FiniteSpace::discrete(3));
    }

    #[test]
    fn chain_pairs() {
        assert!(chain_pair_is_b_closed_sigma2(&FiniteSpace::sigma2(), 0, 1).unwrap());
        let c = FiniteSpace::chain(3);
        assert!(chain_pair_is_b_closed_sigma2(&c, 0, 2).unwrap());
        let seps = chain_pair_separators(&c, 0, 2).unwrap();
        assert_eq!(seps.len(), 1);
        assert_eq!(seps[0].case, SeparatorCase::AboveLower);
        assert_eq!(seps[0].open, c.set([1, 2]));
        let v = v_poset();
        assert!(chain_pair_is_b_closed_sigma2(&v, 0, 2).unwrap());
        let seps = chain_pair_separators(&v, 0, 2).unwrap();
        assert_eq!(seps[0].case, SeparatorCase::Disjoint);
        assert_eq!(
            chain_pair_is_b_closed_sigma2(&v, 0, 1).unwrap_err(),
            Error::NotAChainPair(0, 1)
        );
    }

    #[test]
    fn above_both_case() {
        let c = FiniteSpace::chain(3);
        let seps = chain_pair_separators(&c, 0, 1).unwrap();
        assert_eq!(seps[0].case, SeparatorCase::AboveBoth);
        assert_eq!(seps[0].open, c.set([2]));
    }
}

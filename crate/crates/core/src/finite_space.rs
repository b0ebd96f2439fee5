//! Finite T0 spaces.
//!
//! A finite topology is determined by its specialization order: the open
//! sets are exactly the upper sets. We store the order as the up-set and
//! down-set of every point and enumerate opens on demand.

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::caps::caps;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

#[derive(Clone)]
pub struct FiniteSpace(Arc<Inner>);

struct Inner {
    n: usize,
    // up[x] = ↑x, the minimal open neighbourhood of x
    up: Vec<PointSet>,
    // down[x] = ↓x = cl({x})
    down: Vec<PointSet>,
    opens: OnceLock<Vec<PointSet>>,
}

impl PartialEq for FiniteSpace {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.n == other.0.n && self.0.up == other.0.up)
    }
}

impl Eq for FiniteSpace {}

impl fmt::Debug for FiniteSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteSpace")
            .field("n", &self.n())
            .field("covers", &self.covers())
            .finish()
    }
}

/// Serialised as its size and the covering pairs of the order.
impl Serialize for FiniteSpace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FiniteSpace", 2)?;
        st.serialize_field("points", &self.n())?;
        st.serialize_field("covers", &self.covers())?;
        st.end()
    }
}

impl FiniteSpace {
    pub(crate) fn from_up_sets(up: Vec<PointSet>) -> FiniteSpace {
        let n = up.len();
        let mut down = vec![PointSet::empty(n); n];
        for (x, ux) in up.iter().enumerate() {
            for y in ux.iter() {
                down[y].insert(x);
            }
        }
        FiniteSpace(Arc::new(Inner {
            n,
            up,
            down,
            opens: OnceLock::new(),
        }))
    }

    /// The topology generated by `opens` (closed under finite unions and
    /// intersections, plus the empty and the full set).
    pub fn from_opens(n: usize, opens: &[PointSet]) -> Result<FiniteSpace> {
        for u in opens {
            if u.universe() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: u.universe(),
                });
            }
        }
        // The least open containing x in the generated lattice is the
        // intersection of the generators that contain x.
        let mut up = vec![PointSet::full(n); n];
        for u in opens {
            for x in u.iter() {
                up[x].intersect_with(u);
            }
        }
        for x in 0..n {
            for y in x + 1..n {
                if up[x] == up[y] {
                    return Err(Error::NotT0(x, y));
                }
            }
        }
        Ok(FiniteSpace::from_up_sets(up))
    }

    /// Like [`FiniteSpace::from_opens`] but rejects families that are not
    /// already a topology.
    pub fn from_opens_strict(n: usize, opens: &[PointSet]) -> Result<FiniteSpace> {
        let empty = PointSet::empty(n);
        let full = PointSet::full(n);
        for u in opens {
            if u.universe() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    found: u.universe(),
                });
            }
        }
        if !opens.contains(&empty) {
            return Err(Error::NotATopology("missing the empty set".into()));
        }
        if !opens.contains(&full) {
            return Err(Error::NotATopology("missing the full set".into()));
        }
        for a in opens {
            for b in opens {
                if !opens.contains(&a.union(b)) {
                    return Err(Error::NotATopology(format!("{a} ∪ {b} is missing")));
                }
                if !opens.contains(&a.intersection(b)) {
                    return Err(Error::NotATopology(format!("{a} ∩ {b} is missing")));
                }
            }
        }
        FiniteSpace::from_opens(n, opens)
    }

    /// The Alexandrov space of a partial order given as a matrix,
    /// `leq[x][y]` meaning `x ≤ y`.
    pub fn from_order(leq: &[Vec<bool>]) -> Result<FiniteSpace> {
        let n = leq.len();
        for row in leq {
            if row.len() != n {
                return Err(Error::NotAPartialOrder("matrix is not square".into()));
            }
        }
        for x in 0..n {
            if !leq[x][x] {
                return Err(Error::NotAPartialOrder(format!("{x} ≤ {x} fails")));
            }
            for y in 0..n {
                if x != y && leq[x][y] && leq[y][x] {
                    return Err(Error::NotAPartialOrder(format!(
                        "{x} ≤ {y} and {y} ≤ {x} with {x} ≠ {y}"
                    )));
                }
                if leq[x][y] {
                    for z in 0..n {
                        if leq[y][z] && !leq[x][z] {
                            return Err(Error::NotAPartialOrder(format!("{x} ≤ {y} ≤ {z} but not {x} ≤ {z}")));
                        }
                    }
                }
            }
        }
        let up = (0..n)
            .map(|x| PointSet::from_points(n, (0..n).filter(|&y| leq[x][y])))
            .collect();
        Ok(FiniteSpace::from_up_sets(up))
    }

    /// Reflexive-transitive closure of `pairs` (each `(a, b)` meaning
    /// `a ≤ b`); fails if the closure is not antisymmetric.
    pub fn from_generating_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<FiniteSpace> {
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            row[x] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::PointOutOfRange {
                    point: a.max(b),
                    size: n,
                });
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        FiniteSpace::from_order(&leq)
    }

    pub fn empty() -> FiniteSpace {
        FiniteSpace::from_up_sets(Vec::new())
    }

    pub fn point() -> FiniteSpace {
        FiniteSpace::chain(1)
    }

    /// The Sierpiński space: `0 < 1`, `{1}` open.
    pub fn sigma2() -> FiniteSpace {
        FiniteSpace::chain(2)
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> FiniteSpace {
        let up = (0..n).map(|x| PointSet::from_points(n, x..n)).collect();
        FiniteSpace::from_up_sets(up)
    }

    pub fn discrete(n: usize) -> FiniteSpace {
        let up = (0..n).map(|x| PointSet::singleton(n, x)).collect();
        FiniteSpace::from_up_sets(up)
    }

    pub fn n(&self) -> usize {
        self.0.n
    }

    pub fn points(&self) -> std::ops::Range<usize> {
        0..self.0.n
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.0.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `↑x`, also the minimal open neighbourhood of `x`.
    pub fn up(&self, x: usize) -> &PointSet {
        &self.0.up[x]
    }

    /// `↓x = cl({x})`.
    pub fn down(&self, x: usize) -> &PointSet {
        &self.0.down[x]
    }

    pub fn min_open_nbhd(&self, x: usize) -> PointSet {
        self.0.up[x].clone()
    }

    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        self.points()
            .map(|x| self.points().map(|y| self.leq(x, y)).collect())
            .collect()
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.n())
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::full(self.n())
    }

    pub fn set<I: IntoIterator<Item = usize>>(&self, points: I) -> PointSet {
        PointSet::from_points(self.n(), points)
    }

    /// `↓A`, the smallest closed superset.
    pub fn closure(&self, a: &PointSet) -> PointSet {
        let mut s = self.empty_set();
        for x in a.iter() {
            s.union_with(&self.0.down[x]);
        }
        s
    }

    /// `↑A`, the intersection of all open supersets.
    pub fn saturate(&self, a: &PointSet) -> PointSet {
        let mut s = self.empty_set();
        for x in a.iter() {
            s.union_with(&self.0.up[x]);
        }
        s
    }

    pub fn interior(&self, a: &PointSet) -> PointSet {
        self.closure(&a.complement()).complement()
    }

    pub fn is_open(&self, a: &PointSet) -> bool {
        self.saturate(a) == *a
    }

    pub fn is_closed(&self, a: &PointSet) -> bool {
        self.closure(a) == *a
    }

    /// T1 iff the specialization order is equality.
    pub fn is_t1(&self) -> bool {
        self.points().all(|x| self.0.up[x].count() == 1)
    }

    /// All open sets (upper sets), sorted; fails past `2^carrier` members.
    pub fn opens(&self) -> Result<&[PointSet]> {
        if let Some(o) = self.0.opens.get() {
            return Ok(o);
        }
        let mut all = self.upper_sets(caps().family_limit())?;
        all.sort();
        Ok(self.0.opens.get_or_init(|| all))
    }

    pub fn closed_sets(&self) -> Result<Vec<PointSet>> {
        Ok(self.opens()?.iter().map(PointSet::complement).collect())
    }

    pub fn count_opens(&self) -> Result<usize> {
        Ok(self.opens()?.len())
    }

    fn upper_sets(&self, limit: u128) -> Result<Vec<PointSet>> {
        let n = self.n();
        // Larger elements first, so ↑x ∖ {x} is decided before x.
        let mut order: Vec<usize> = self.points().collect();
        order.sort_by_key(|&x| std::cmp::Reverse(self.0.down[x].count()));
        let mut out = Vec::new();
        let mut current = PointSet::empty(n);
        self.upper_sets_rec(&order, 0, &mut current, &mut out, limit)?;
        Ok(out)
    }

    fn upper_sets_rec(
        &self,
        order: &[usize],
        i: usize,
        current: &mut PointSet,
        out: &mut Vec<PointSet>,
        limit: u128,
    ) -> Result<()> {
        if i == order.len() {
            out.push(current.clone());
            if out.len() as u128 > limit {
                return Err(Error::cap("open-set family", out.len() as u128, limit));
            }
            return Ok(());
        }
        let x = order[i];
        self.upper_sets_rec(order, i + 1, current, out, limit)?;
        let mut above = self.0.up[x].clone();
        above.remove(x);
        if above.is_subset(current) {
            current.insert(x);
            self.upper_sets_rec(order, i + 1, current, out, limit)?;
            current.remove(x);
        }
        Ok(())
    }

    /// Nonempty `A` such that `A ⊆ F1 ∪ F2` (closed) forces `A ⊆ F1` or `A ⊆ F2`.
    pub fn is_irreducible(&self, a: &PointSet) -> Result<bool> {
        if a.is_empty() {
            return Ok(false);
        }
        for f1 in self.closed_sets()? {
            if a.is_subset(&f1) {
                continue;
            }
            // any closed F2 covering A ∖ F1 contains its closure
            let f2 = self.closure(&a.difference(&f1));
            if !a.is_subset(&f2) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All irreducible closed sets, in the order of [`FiniteSpace::opens`].
    pub fn irreducible_closed_sets(&self) -> Result<Vec<PointSet>> {
        let mut out = Vec::new();
        for f in self.closed_sets()? {
            if self.is_irreducible(&f)? {
                out.push(f);
            }
        }
        Ok(out)
    }

    /// Every subset of a finite space is compact, so this is `Q = ↑Q`.
    pub fn is_compact_saturated(&self, q: &PointSet) -> bool {
        self.saturate(q) == *q
    }

    pub fn is_directed(&self, d: &PointSet) -> bool {
        if d.is_empty() {
            return false;
        }
        d.iter()
            .all(|a| d.iter().all(|b| d.iter().any(|c| self.leq(a, c) && self.leq(b, c))))
    }

    pub fn upper_bounds(&self, a: &PointSet) -> PointSet {
        let mut ub = self.full_set();
        for x in a.iter() {
            ub.intersect_with(&self.0.up[x]);
        }
        ub
    }

    /// Least upper bound of `A`, if it exists.
    pub fn sup(&self, a: &PointSet) -> Option<usize> {
        let ub = self.upper_bounds(a);
        let least = ub.iter().find(|&u| ub.is_subset(&self.0.up[u]));
        least
    }

    /// Covering pairs `(x, y)` of the Hasse diagram, `x < y`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in self.points() {
            for y in self.0.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = self
                    .points()
                    .any(|z| z != x && z != y && self.lt(x, z) && self.lt(z, y));
                if !between {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// The copy of this space in which old point `x` is called `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> FiniteSpace {
        let n = self.n();
        assert_eq!(perm.len(), n);
        let mut up = vec![PointSet::empty(n); n];
        for x in self.points() {
            up[perm[x]] = self.0.up[x].map(n, perm);
        }
        FiniteSpace::from_up_sets(up)
    }

    /// Whether the comparability graph is connected (vacuously true for the
    /// empty space).
    pub fn is_order_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = PointSet::singleton(n, 0);
        let mut stack = vec![0];
        while let Some(x) = stack.pop() {
            for y in self.points() {
                if !seen.contains(y) && self.comparable(x, y) {
                    seen.insert(y);
                    stack.push(y);
                }
            }
        }
        seen.is_full()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v_poset() -> FiniteSpace {
        // a=0 < c=2, b=1 < c=2
        FiniteSpace::from_generating_pairs(3, &[(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn sigma2_from_opens() {
        let s = FiniteSpace::from_opens(2, &[PointSet::from_points(2, [1])]).unwrap();
        assert!(s.lt(0, 1));
        assert_eq!(s, FiniteSpace::sigma2());
        assert_eq!(s.count_opens().unwrap(), 3);
    }

    #[test]
    fn one_point_space() {
        let s = FiniteSpace::from_opens(1, &[]).unwrap();
        assert_eq!(s.n(), 1);
        assert!(s.leq(0, 0));
        assert!(s.is_t1());
    }

    #[test]
    fn three_chain_from_opens() {
        let s = FiniteSpace::from_opens(3, &[PointSet::from_points(3, [2]), PointSet::from_points(3, [1, 2])]).unwrap();
        assert_eq!(s, FiniteSpace::chain(3));
        // brute-force closure of {2}: complement of the union of opens missing 2
        let mut outside = PointSet::empty(3);
        for u in s.opens().unwrap() {
            if !u.contains(2) {
                outside.union_with(u);
            }
        }
        assert_eq!(outside.complement(), PointSet::full(3));
    }

    #[test]
    fn not_t0_is_rejected() {
        let err = FiniteSpace::from_opens(2, &[]).unwrap_err();
        assert_eq!(err, Error::NotT0(0, 1));
        let err = FiniteSpace::from_opens(3, &[PointSet::from_points(3, [0, 1])]).unwrap_err();
        assert!(matches!(err, Error::NotT0(_, _)));
    }

    #[test]
    fn strict_mode_rejects_non_topologies() {
        let fam = [
            PointSet::empty(2),
            PointSet::from_points(2, [0]),
            PointSet::from_points(2, [1]),
        ];
        assert!(matches!(
            FiniteSpace::from_opens_strict(2, &fam),
            Err(Error::NotATopology(_))
        ));
        let fam = [PointSet::empty(2), PointSet::from_points(2, [1]), PointSet::full(2)];
        assert_eq!(FiniteSpace::from_opens_strict(2, &fam).unwrap(), FiniteSpace::sigma2());
    }

    #[test]
    fn from_order_checks_partial_order() {
        let not_refl = vec![vec![false, true], vec![false, true]];
        assert!(matches!(
            FiniteSpace::from_order(&not_refl),
            Err(Error::NotAPartialOrder(_))
        ));
        let not_anti = vec![vec![true, true], vec![true, true]];
        assert!(matches!(
            FiniteSpace::from_order(&not_anti),
            Err(Error::NotAPartialOrder(_))
        ));
        let not_trans = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        assert!(matches!(
            FiniteSpace::from_order(&not_trans),
            Err(Error::NotAPartialOrder(_))
        ));
        assert!(matches!(
            FiniteSpace::from_generating_pairs(2, &[(0, 1), (1, 0)]),
            Err(Error::NotAPartialOrder(_))
        ));
    }

    #[test]
    fn antichain_is_discrete() {
        let d = FiniteSpace::from_order(&[
            vec![true, false, false],
            vec![false, true, false],
            vec![false, false, true],
        ])
        .unwrap();
        assert_eq!(d.count_opens().unwrap(), 8);
        assert!(d.is_t1());
        assert_eq!(d, FiniteSpace::discrete(3));
    }

    #[test]
    fn truncated_alexandrov_naturals() {
        let s = FiniteSpace::chain(5);
        let opens = s.opens().unwrap();
        let mut expected: Vec<PointSet> = (1..5).map(|k| PointSet::from_points(5, k..5)).collect();
        expected.push(PointSet::empty(5));
        expected.push(PointSet::full(5));
        expected.sort();
        assert_eq!(opens, &expected[..]);
    }

    #[test]
    fn closure_saturation_interior() {
        let s = FiniteSpace::sigma2();
        assert_eq!(s.closure(&s.set([1])), s.full_set());
        assert_eq!(s.saturate(&s.set([0])), s.full_set());
        assert_eq!(s.closure(&s.empty_set()), s.empty_set());
        assert_eq!(s.saturate(&s.empty_set()), s.empty_set());
        assert_eq!(s.interior(&s.set([0])), s.empty_set());
        assert_eq!(s.interior(&s.set([1])), s.set([1]));
    }

    #[test]
    fn saturation_by_literal_intersection() {
        let s = FiniteSpace::sigma2();
        let a = s.set([0]);
        let lit = s
            .opens()
            .unwrap()
            .iter()
            .filter(|u| a.is_subset(u))
            .fold(s.full_set(), |acc, u| acc.intersection(u));
        assert_eq!(lit, s.saturate(&a));
    }

    #[test]
    fn t1_and_min_nbhd() {
        assert!(!FiniteSpace::sigma2().is_t1());
        assert!(FiniteSpace::discrete(3).is_t1());
        let c = FiniteSpace::chain(3);
        assert_eq!(c.min_open_nbhd(1), c.set([1, 2]));
        let lit = c
            .opens()
            .unwrap()
            .iter()
            .filter(|u| u.contains(1))
            .fold(c.full_set(), |acc, u| acc.intersection(u));
        assert_eq!(lit, c.set([1, 2]));
    }

    #[test]
    fn irreducible_closed_sets_of_chain_and_v() {
        let c = FiniteSpace::chain(3);
        let irr = c.irreducible_closed_sets().unwrap();
        let mut expected: Vec<PointSet> = (0..3).map(|x| c.down(x).clone()).collect();
        expected.sort();
        let mut irr_sorted = irr.clone();
        irr_sorted.sort();
        assert_eq!(irr_sorted, expected);

        let v = v_poset();
        let ab = v.set([0, 1]);
        assert!(v.is_closed(&ab));
        assert!(!v.is_irreducible(&ab).unwrap());
        assert_eq!(v.irreducible_closed_sets().unwrap().len(), 3);
    }

    #[test]
    fn directed_and_compact_saturated() {
        let s = FiniteSpace::sigma2();
        assert!(s.is_directed(&s.full_set()));
        assert!(!s.is_directed(&s.empty_set()));
        let v = v_poset();
        assert!(!v.is_directed(&v.set([0, 1])));
        assert!(v.is_directed(&v.set([0, 1, 2])));
        assert!(v.is_compact_saturated(&v.set([2])));
        assert!(!v.is_compact_saturated(&v.set([0])));
    }

    #[test]
    fn sup_and_covers() {
        let v = v_poset();
        assert_eq!(v.sup(&v.set([0, 1])), Some(2));
        assert_eq!(v.sup(&v.empty_set()), None);
        assert_eq!(FiniteSpace::chain(3).sup(&FiniteSpace::chain(3).empty_set()), Some(0));
        assert_eq!(v.covers(), vec![(0, 2), (1, 2)]);
        assert_eq!(FiniteSpace::chain(3).covers(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn relabel_reverses_chain_labels() {
        let c = FiniteSpace::chain(3);
        let r = c.relabel(&[2, 1, 0]);
        assert!(r.lt(2, 0));
        assert!(r.lt(1, 0));
        assert!(!r.leq(0, 2));
    }

    #[test]
    fn opens_cap() {
        // 2^16 opens is the default limit; the discrete 17-point space exceeds it.
        let d = FiniteSpace::discrete(17);
        assert!(matches!(d.opens(), Err(Error::CapExceeded { .. })));
        assert_eq!(FiniteSpace::chain(50).count_opens().unwrap(), 51);
    }
}

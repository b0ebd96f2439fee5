//! Maps, subspaces, products, Sierpiński powers, embeddings, equalizers,
//! retracts and diagonals between finite spaces.

use serde::Serialize;

use crate::b_topology::{is_b_closed, is_b_dense};
use crate::caps::caps;
use crate::error::{Error, Result};
use crate::finite_space::FiniteSpace;
use crate::pointset::PointSet;

/// A point function between finite spaces with its continuity cached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceMap {
    dom: FiniteSpace,
    cod: FiniteSpace,
    f: Vec<usize>,
    continuous: bool,
}

/// Preimage of every basic open `↑y` is open. Every open of a finite
/// space is a union of these, and preimages commute with unions.
fn continuous_by_preimages(dom: &FiniteSpace, cod: &FiniteSpace, f: &[usize]) -> bool {
    cod.points().all(|y| {
        let pre = PointSet::from_points(dom.n(), dom.points().filter(|&x| cod.up(y).contains(f[x])));
        dom.is_open(&pre)
    })
}

fn monotone(dom: &FiniteSpace, cod: &FiniteSpace, f: &[usize]) -> bool {
    dom.points().all(|x| dom.up(x).iter().all(|y| cod.leq(f[x], f[y])))
}

impl SpaceMap {
    pub fn new(dom: &FiniteSpace, cod: &FiniteSpace, f: Vec<usize>) -> Result<SpaceMap> {
        if f.len() != dom.n() {
            return Err(Error::LengthMismatch {
                expected: dom.n(),
                found: f.len(),
            });
        }
        if let Some(&bad) = f.iter().find(|&&y| y >= cod.n()) {
            return Err(Error::PointOutOfRange {
                point: bad,
                size: cod.n(),
            });
        }
        let by_opens = continuous_by_preimages(dom, cod, &f);
        let by_order = monotone(dom, cod, &f);
        assert_eq!(by_opens, by_order, "continuity and monotonicity disagree for {f:?}");
        Ok(SpaceMap {
            dom: dom.clone(),
            cod: cod.clone(),
            f,
            continuous: by_opens,
        })
    }

    pub fn identity(x: &FiniteSpace) -> SpaceMap {
        SpaceMap::new(x, x, x.points().collect()).expect("identity is total")
    }

    pub fn constant(dom: &FiniteSpace, cod: &FiniteSpace, y: usize) -> Result<SpaceMap> {
        SpaceMap::new(dom, cod, vec![y; dom.n()])
    }

    pub fn dom(&self) -> &FiniteSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteSpace {
        &self.cod
    }

    pub fn apply(&self, x: usize) -> usize {
        self.f[x]
    }

    pub fn values(&self) -> &[usize] {
        &self.f
    }

    pub fn is_continuous(&self) -> bool {
        self.continuous
    }

    pub fn image(&self) -> PointSet {
        PointSet::from_points(self.cod.n(), self.f.iter().copied())
    }

    pub fn image_of(&self, a: &PointSet) -> PointSet {
        a.map(self.cod.n(), &self.f)
    }

    pub fn preimage(&self, b: &PointSet) -> PointSet {
        PointSet::from_points(self.dom.n(), self.dom.points().filter(|&x| b.contains(self.f[x])))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SpaceMap) -> Result<SpaceMap> {
        if self.cod != other.dom {
            return Err(Error::MismatchedSpaces);
        }
        SpaceMap::new(&self.dom, &other.cod, self.f.iter().map(|&y| other.f[y]).collect())
    }

    pub fn is_injective(&self) -> bool {
        self.image().count() == self.dom.n()
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_full()
    }

    /// Injective, continuous, and every open `U` of the domain has `f(U)`
    /// relatively open in the image.
    pub fn is_embedding(&self) -> bool {
        if !self.continuous || !self.is_injective() {
            return false;
        }
        let img = self.image();
        self.dom.points().all(|x| {
            let fu = self.image_of(self.dom.up(x));
            self.cod.saturate(&fu).intersection(&img) == fu
        })
    }

    /// The same point function with codomain replaced by the subspace on
    /// `target` (given as points of the codomain in increasing order).
    pub fn corestrict(&self, target: &Subspace) -> Result<SpaceMap> {
        if target.ambient != self.cod {
            return Err(Error::MismatchedSpaces);
        }
        let f = self
            .f
            .iter()
            .map(|&y| {
                target.index_of(y).ok_or(Error::PointOutOfRange {
                    point: y,
                    size: target.space.n(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SpaceMap::new(&self.dom, &target.space, f)
    }

    /// Continuous, bijective, and the inverse is continuous.
    pub fn is_homeomorphism(&self) -> bool {
        if !self.continuous || !self.is_injective() || self.dom.n() != self.cod.n() {
            return false;
        }
        self.dom.points().all(|x| {
            self.dom
                .points()
                .all(|y| self.cod.leq(self.f[x], self.f[y]) == self.dom.leq(x, y))
        })
    }

    /// The inverse of a bijection.
    pub fn inverse(&self) -> Result<SpaceMap> {
        if !self.is_injective() || self.dom.n() != self.cod.n() {
            return Err(Error::BadParams("map is not a bijection".into()));
        }
        let mut inv = vec![0; self.cod.n()];
        for (x, &y) in self.f.iter().enumerate() {
            inv[y] = x;
        }
        SpaceMap::new(&self.cod, &self.dom, inv)
    }
}

/// A subspace together with its inclusion.
#[derive(Clone, Debug)]
pub struct Subspace {
    pub ambient: FiniteSpace,
    pub space: FiniteSpace,
    /// `points[i]` is the ambient point behind subspace point `i`.
    pub points: Vec<usize>,
}

impl Subspace {
    pub fn index_of(&self, ambient_point: usize) -> Option<usize> {
        self.points.binary_search(&ambient_point).ok()
    }

    pub fn inclusion(&self) -> SpaceMap {
        SpaceMap::new(&self.space, &self.ambient, self.points.clone()).expect("inclusion is total")
    }

    pub fn as_set(&self) -> PointSet {
        PointSet::from_points(self.ambient.n(), self.points.iter().copied())
    }
}

/// The subspace on `A` (possibly empty) with the trace topology.
pub fn induced(x: &FiniteSpace, a: &PointSet) -> Subspace {
    let points = a.to_vec();
    let m = points.len();
    let up = points
        .iter()
        .map(|&p| PointSet::from_points(m, (0..m).filter(|&j| x.up(p).contains(points[j]))))
        .collect();
    Subspace {
        ambient: x.clone(),
        space: FiniteSpace::from_up_sets(up),
        points,
    }
}

/// The subspace on a nonempty `A` and its inclusion, an embedding.
pub fn subspace(x: &FiniteSpace, a: &PointSet) -> Result<(FiniteSpace, SpaceMap)> {
    if a.is_empty() {
        return Err(Error::EmptyCarrier);
    }
    let sub = induced(x, a);
    let inc = sub.inclusion();
    Ok((sub.space, inc))
}

/// A finite product with its coordinate bookkeeping. Tuples are indexed
/// in mixed radix with the first factor varying fastest.
#[derive(Clone, Debug)]
pub struct Product {
    pub space: FiniteSpace,
    pub factors: Vec<FiniteSpace>,
    pub projections: Vec<SpaceMap>,
    strides: Vec<usize>,
}

impl Product {
    pub fn index(&self, tuple: &[usize]) -> usize {
        tuple.iter().zip(&self.strides).map(|(t, s)| t * s).sum()
    }

    pub fn tuple(&self, mut i: usize) -> Vec<usize> {
        self.factors
            .iter()
            .map(|f| {
                let t = i % f.n();
                i /= f.n();
                t
            })
            .collect()
    }
}

fn product_size(sizes: &[usize]) -> u128 {
    sizes.iter().fold(1u128, |acc, &s| acc.saturating_mul(s as u128))
}

/// Product space with the componentwise order (the Alexandrov order of the
/// product topology for finite factors).
pub fn product(xs: &[FiniteSpace]) -> Result<Product> {
    let sizes: Vec<usize> = xs.iter().map(FiniteSpace::n).collect();
    let total = product_size(&sizes);
    let cap = caps().product as u128;
    if total > cap {
        return Err(Error::cap("product carrier", total, cap));
    }
    let total = total as usize;
    let mut strides = Vec::with_capacity(xs.len());
    let mut s = 1;
    for &n in &sizes {
        strides.push(s);
        s *= n;
    }
    let decode = |mut i: usize| -> Vec<usize> {
        sizes
            .iter()
            .map(|&n| {
                let t = i % n;
                i /= n;
                t
            })
            .collect()
    };
    let mut up = Vec::with_capacity(total);
    for i in 0..total {
        let t = decode(i);
        // ↑t = ∏ ↑t_k, enumerated as a cartesian product of index lists
        let mut acc: Vec<usize> = vec![0];
        for (k, x) in xs.iter().enumerate() {
            let ups: Vec<usize> = x.up(t[k]).iter().collect();
            let stride = strides[k];
            acc = acc
                .iter()
                .flat_map(|&base| ups.iter().map(move |&u| base + u * stride))
                .collect();
        }
        up.push(PointSet::from_points(total, acc));
    }
    let space = FiniteSpace::from_up_sets(up);
    let projections = xs
        .iter()
        .enumerate()
        .map(|(k, x)| SpaceMap::new(&space, x, (0..total).map(|i| decode(i)[k]).collect()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Product {
        space,
        factors: xs.to_vec(),
        projections,
        strides,
    })
}

/// `(Σ2)^m`; point `i` is the tuple whose `k`-th coordinate is bit `k` of `i`.
pub fn sierpinski_power(m: usize) -> Result<FiniteSpace> {
    Ok(product(&vec![FiniteSpace::sigma2(); m])?.space)
}

/// The Scott (= Alexandrov) space of the powerset lattice `(2^m, ⊆)`;
/// point `i` is the subset with bitmask `i`.
pub fn powerset_scott(m: usize) -> Result<FiniteSpace> {
    let total = 1u128 << m.min(127);
    let cap = caps().product as u128;
    if m >= 64 || total > cap {
        return Err(Error::cap("powerset carrier", total, cap));
    }
    let total = total as usize;
    let up = (0..total)
        .map(|a| PointSet::from_points(total, (0..total).filter(|&b| a & !b == 0)))
        .collect();
    Ok(FiniteSpace::from_up_sets(up))
}

/// Coordinates `x ↦ (χ_{U_i}(x))_i` for a family of opens.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacteristicVector {
    pub coords: Vec<PointSet>,
}

impl CharacteristicVector {
    pub fn m(&self) -> usize {
        self.coords.len()
    }

    pub fn tuple(&self, x: usize) -> Vec<bool> {
        self.coords.iter().map(|u| u.contains(x)).collect()
    }

    /// The tuple as a bitmask, bit `i` = `χ_{U_i}(x)`.
    pub fn code(&self, x: usize) -> Result<u64> {
        if self.m() > 64 {
            return Err(Error::cap("characteristic vector width", self.m() as u128, 64));
        }
        Ok(self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, u)| u.contains(x))
            .fold(0u64, |acc, (i, _)| acc | 1 << i))
    }
}

/// `X → (Σ2)^{O(X)}`. The codomain is materialised only when `2^|O(X)|`
/// fits the product cap.
#[derive(Clone, Debug)]
pub struct CanonicalEmbedding {
    pub chi: CharacteristicVector,
    map: Option<SpaceMap>,
}

impl CanonicalEmbedding {
    pub fn codes(&self, x: &FiniteSpace) -> Result<Vec<u64>> {
        x.points().map(|p| self.chi.code(p)).collect()
    }

    pub fn map(&self) -> Result<&SpaceMap> {
        self.map.as_ref().ok_or_else(|| {
            Error::cap(
                "Sierpiński power carrier",
                1u128 << self.chi.m().min(127),
                caps().product as u128,
            )
        })
    }

    pub fn is_materialized(&self) -> bool {
        self.map.is_some()
    }
}

pub fn canonical_embedding(x: &FiniteSpace) -> Result<CanonicalEmbedding> {
    let chi = CharacteristicVector {
        coords: x.opens()?.to_vec(),
    };
    let m = chi.m();
    let fits = m < 64 && (1u128 << m) <= caps().product as u128;
    let map = if fits {
        let cube = sierpinski_power(m)?;
        let codes = x
            .points()
            .map(|p| chi.code(p).map(|c| c as usize))
            .collect::<Result<Vec<_>>>()?;
        Some(SpaceMap::new(x, &cube, codes)?)
    } else {
        None
    };
    Ok(CanonicalEmbedding { chi, map })
}

/// Strict variant: fails when the codomain cannot be materialised.
pub fn canonical_embedding_strict(x: &FiniteSpace) -> Result<SpaceMap> {
    canonical_embedding(x)?.map().cloned()
}

/// b-closure of a set of points of `(Σ2)^m` given as bitmasks. A point `y`
/// is tested against the smallest basic open around it, the cylinder
/// `{z : z ⊇ y}` with support `y`, intersected with `↓y`.
pub fn cube_b_closure(m: usize, pts: &[u64]) -> Result<Vec<u64>> {
    let cap = caps().product as u128;
    if m >= 64 || (1u128 << m) > cap {
        return Err(Error::cap("Sierpiński power carrier", 1u128 << m.min(127), cap));
    }
    Ok((0..1u64 << m)
        .filter(|&y| {
            pts.iter()
                .any(|&a| a & y == y /* in the cylinder */ && a & !y == 0 /* below y */)
        })
        .collect())
}

/// `{x : f(x) = g(x)}`.
pub fn equalizer(f: &SpaceMap, g: &SpaceMap) -> Result<PointSet> {
    if f.dom != g.dom || f.cod != g.cod {
        return Err(Error::MismatchedSpaces);
    }
    Ok(PointSet::from_points(
        f.dom.n(),
        f.dom.points().filter(|&x| f.f[x] == g.f[x]),
    ))
}

/// `E = ⋂_i U_i ∪ (X ∖ V_i)` for a b-closed `E`, built greedily from the
/// closed base `{U ∪ (X ∖ V)}`.
pub fn closed_base_representation(x: &FiniteSpace, e: &PointSet) -> Result<Vec<(PointSet, PointSet)>> {
    if !is_b_closed(x, e) {
        return Err(Error::NotBClosed);
    }
    let opens = x.opens()?;
    let mut running = x.full_set();
    let mut rep = Vec::new();
    for u in opens {
        for v in opens {
            let member = u.union(&v.complement());
            if !e.is_subset(&member) {
                continue;
            }
            let next = running.intersection(&member);
            if next != running {
                running = next;
                rep.push((u.clone(), v.clone()));
            }
        }
    }
    if running != *e {
        return Err(Error::NotBClosed);
    }
    Ok(rep)
}

/// The pair `f, g : X → (Σ2)^m` with `f(x)(i) = χ_{U_i}(x)` and
/// `g(x)(i) = χ_{U_i ∪ V_i}(x)`, whose equalizer is `E`.
#[derive(Clone, Debug)]
pub struct EqualizerMaps {
    pub f: SpaceMap,
    pub g: SpaceMap,
    pub m: usize,
    pub representation: Vec<(PointSet, PointSet)>,
}

pub fn equalizer_maps_for_bclosed(x: &FiniteSpace, e: &PointSet) -> Result<EqualizerMaps> {
    let representation = closed_base_representation(x, e)?;
    let m = representation.len();
    let cube = sierpinski_power(m)?;
    let code = |x: usize, sets: &dyn Fn(usize) -> PointSet| -> usize {
        (0..m).filter(|&i| sets(i).contains(x)).fold(0, |acc, i| acc | 1 << i)
    };
    let fu = |i: usize| representation[i].0.clone();
    let gu = |i: usize| representation[i].0.union(&representation[i].1);
    let f = SpaceMap::new(x, &cube, x.points().map(|p| code(p, &fu)).collect())?;
    let g = SpaceMap::new(x, &cube, x.points().map(|p| code(p, &gu)).collect())?;
    Ok(EqualizerMaps {
        f,
        g,
        m,
        representation,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
struct PointInvariant {
    up: usize,
    down: usize,
    upper_covers: usize,
    lower_covers: usize,
}

fn invariants(x: &FiniteSpace) -> Vec<PointInvariant> {
    let covers = x.covers();
    x.points()
        .map(|p| PointInvariant {
            up: x.up(p).count(),
            down: x.down(p).count(),
            upper_covers: covers.iter().filter(|c| c.0 == p).count(),
            lower_covers: covers.iter().filter(|c| c.1 == p).count(),
        })
        .collect()
}

/// A homeomorphism `X → Y`, if one exists.
pub fn find_homeomorphism(x: &FiniteSpace, y: &FiniteSpace) -> Result<Option<SpaceMap>> {
    find_homeomorphism_fixing(x, y, &[])
}

/// A homeomorphism `X → Y` that sends each `a` to `b` for `(a, b)` in
/// `fixed`. Bijections are searched by backtracking, pruned by per-point
/// order invariants.
pub fn find_homeomorphism_fixing(
    x: &FiniteSpace,
    y: &FiniteSpace,
    fixed: &[(usize, usize)],
) -> Result<Option<SpaceMap>> {
    let n = x.n();
    if n != y.n() {
        return Ok(None);
    }
    if n > caps().carrier {
        return Err(Error::cap(
            "homeomorphism search carrier",
            n as u128,
            caps().carrier as u128,
        ));
    }
    let ix = invariants(x);
    let iy = invariants(y);
    let mut sx = ix.clone();
    let mut sy = iy.clone();
    sx.sort();
    sy.sort();
    if sx != sy {
        return Ok(None);
    }
    let mut assign: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    for &(a, b) in fixed {
        if a >= n || b >= n || ix[a] != iy[b] {
            return Ok(None);
        }
        match assign[a] {
            Some(prev) if prev != b => return Ok(None),
            Some(_) => {}
            None => {
                if used[b] {
                    return Ok(None);
                }
                assign[a] = Some(b);
                used[b] = true;
            }
        }
    }
    for &(a, _) in fixed {
        for &(c, _) in fixed {
            let (fa, fc) = (assign[a].unwrap(), assign[c].unwrap());
            if x.leq(a, c) != y.leq(fa, fc) {
                return Ok(None);
            }
        }
    }
    // Rarest invariant class first.
    let mut order: Vec<usize> = x.points().filter(|&p| assign[p].is_none()).collect();
    order.sort_by_key(|&p| (ix.iter().filter(|&&i| i == ix[p]).count(), p));

    fn search(
        k: usize,
        order: &[usize],
        x: &FiniteSpace,
        y: &FiniteSpace,
        ix: &[PointInvariant],
        iy: &[PointInvariant],
        assign: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let p = order[k];
        for q in y.points() {
            if used[q] || ix[p] != iy[q] {
                continue;
            }
            let consistent = x.points().all(|r| match assign[r] {
                Some(s) => x.leq(p, r) == y.leq(q, s) && x.leq(r, p) == y.leq(s, q),
                None => true,
            });
            if !consistent {
                continue;
            }
            assign[p] = Some(q);
            used[q] = true;
            if search(k + 1, order, x, y, ix, iy, assign, used) {
                return true;
            }
            assign[p] = None;
            used[q] = false;
        }
        false
    }

    if search(0, &order, x, y, &ix, &iy, &mut assign, &mut used) {
        let f = assign.into_iter().map(|a| a.expect("complete assignment")).collect();
        let h = SpaceMap::new(x, y, f)?;
        debug_assert!(h.is_homeomorphism());
        Ok(Some(h))
    } else {
        Ok(None)
    }
}

/// `r ∘ s = id_X` with `s(X)` b-dense in `Y`.
pub fn is_b_retract(s: &SpaceMap, r: &SpaceMap) -> Result<bool> {
    if s.cod != r.dom || s.dom != r.cod {
        return Err(Error::MismatchedSpaces);
    }
    if !s.continuous || !r.continuous {
        return Ok(false);
    }
    let retracts = s.dom.points().all(|x| r.f[s.f[x]] == x);
    Ok(retracts && is_b_dense(&s.cod, &s.image()))
}

/// `x ↦ (f_i(x))_i` into the product of the codomains.
pub fn diagonal(fs: &[SpaceMap]) -> Result<(SpaceMap, Product)> {
    let first = fs
        .first()
        .ok_or_else(|| Error::BadParams("diagonal of an empty family".into()))?;
    if fs.iter().any(|f| f.dom != first.dom) {
        return Err(Error::MismatchedSpaces);
    }
    let cods: Vec<FiniteSpace> = fs.iter().map(|f| f.cod.clone()).collect();
    let prod = product(&cods)?;
    let values = first
        .dom
        .points()
        .map(|x| {
            let t: Vec<usize> = fs.iter().map(|f| f.f[x]).collect();
            prod.index(&t)
        })
        .collect();
    let d = SpaceMap::new(&first.dom, &prod.space, values)?;
    Ok((d, prod))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn antichain2() -> FiniteSpace {
        FiniteSpace::discrete(2)
    }

    #[test]
    fn subspace_examples() {
        let c = FiniteSpace::chain(3);
        let (s, inc) = subspace(&c, &c.set([0, 2])).unwrap();
        assert_eq!(s, FiniteSpace::sigma2());
        assert!(inc.is_embedding());
        let (s, _) = subspace(&c, &c.full_set()).unwrap();
        assert_eq!(s, c);
        let nat5 = FiniteSpace::chain(5);
        let (s, _) = subspace(&nat5, nat5.up(2)).unwrap();
        assert_eq!(s, FiniteSpace::chain(3));
        assert_eq!(subspace(&c, &c.empty_set()).unwrap_err(), Error::EmptyCarrier);
    }

    #[test]
    fn product_examples() {
        let sq = product(&[FiniteSpace::sigma2(), FiniteSpace::sigma2()]).unwrap();
        assert_eq!(sq.space.n(), 4);
        assert_eq!(sq.space, powerset_scott(2).unwrap());
        let x = FiniteSpace::from_generating_pairs(3, &[(0, 2), (1, 2)]).unwrap();
        let xp = product(&[x.clone(), FiniteSpace::point()]).unwrap();
        assert_eq!(xp.space, x);
        let grid = product(&[FiniteSpace::chain(2), FiniteSpace::chain(3)]).unwrap();
        assert_eq!(grid.space.n(), 6);
        for i in 0..6 {
            for j in 0..6 {
                let (a, b) = (grid.tuple(i), grid.tuple(j));
                assert_eq!(grid.space.leq(i, j), a[0] <= b[0] && a[1] <= b[1]);
            }
        }
        assert!(grid.projections.iter().all(SpaceMap::is_continuous));
    }

    #[test]
    fn product_cap() {
        let big = vec![FiniteSpace::sigma2(); 13];
        assert!(matches!(product(&big), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn sierpinski_powers() {
        assert_eq!(sierpinski_power(0).unwrap(), FiniteSpace::point());
        assert_eq!(sierpinski_power(1).unwrap(), FiniteSpace::sigma2());
        let cube = sierpinski_power(3).unwrap();
        assert_eq!(cube.n(), 8);
        let h = find_homeomorphism(&cube, &powerset_scott(3).unwrap()).unwrap();
        assert!(h.is_some());
    }

    #[test]
    fn canonical_embedding_examples() {
        let s = FiniteSpace::sigma2();
        let e = canonical_embedding(&s).unwrap();
        assert_eq!(e.chi.m(), 3);
        let map = e.map().unwrap();
        assert!(map.is_embedding());
        assert!(is_b_closed(map.cod(), &map.image()));

        let p = FiniteSpace::point();
        let e = canonical_embedding(&p).unwrap();
        assert_eq!(e.chi.m(), 2);
        assert!(e.map().unwrap().is_embedding());

        let a = antichain2();
        let e = canonical_embedding(&a).unwrap();
        assert_eq!(e.chi.m(), 4);
        let map = e.map().unwrap();
        assert!(map.is_embedding());
        assert!(is_b_closed(map.cod(), &map.image()));
        // opens sorted: ∅, {0}, {1}, {0,1}
        assert_eq!(e.chi.tuple(0), vec![false, true, false, true]);
        assert_eq!(e.chi.tuple(1), vec![false, false, true, true]);
    }

    #[test]
    fn cube_closure_matches_materialised() {
        let s = FiniteSpace::chain(3);
        let e = canonical_embedding(&s).unwrap();
        let codes = e.codes(&s).unwrap();
        let lazy = cube_b_closure(e.chi.m(), &codes).unwrap();
        let map = e.map().unwrap();
        let eager: Vec<u64> = crate::b_topology::b_closure(map.cod(), &map.image())
            .iter()
            .map(|p| p as u64)
            .collect();
        assert_eq!(lazy, eager);
    }

    #[test]
    fn equalizer_examples() {
        let c = FiniteSpace::chain(3);
        let id = SpaceMap::identity(&c);
        assert_eq!(equalizer(&id, &id).unwrap(), c.full_set());
        let k = SpaceMap::constant(&c, &c, 2).unwrap();
        assert_eq!(equalizer(&id, &k).unwrap(), c.set([2]));
        let other = SpaceMap::identity(&FiniteSpace::sigma2());
        assert_eq!(equalizer(&id, &other).unwrap_err(), Error::MismatchedSpaces);
    }

    #[test]
    fn equalizer_maps_sigma2() {
        let s = FiniteSpace::sigma2();
        let e = s.set([0]);
        let maps = equalizer_maps_for_bclosed(&s, &e).unwrap();
        assert_eq!(maps.m, 1);
        assert_eq!(maps.representation[0], (s.empty_set(), s.set([1])));
        assert_eq!(maps.f.values(), &[0, 0]);
        assert_eq!(maps.g.values(), &[0, 1]);
        assert_eq!(equalizer(&maps.f, &maps.g).unwrap(), e);
    }

    #[test]
    fn homeomorphism_search() {
        let from_order = FiniteSpace::from_order(&[vec![true, true], vec![false, true]]).unwrap();
        assert!(find_homeomorphism(&FiniteSpace::sigma2(), &from_order)
            .unwrap()
            .is_some());
        assert!(find_homeomorphism(&FiniteSpace::sigma2(), &antichain2())
            .unwrap()
            .is_none());
        let sq = sierpinski_power(2).unwrap();
        assert!(find_homeomorphism(&sq, &powerset_scott(2).unwrap()).unwrap().is_some());
        let c = FiniteSpace::chain(3);
        assert!(find_homeomorphism_fixing(&c, &c, &[(0, 1)]).unwrap().is_none());
    }

    #[test]
    fn retract_examples() {
        let s = FiniteSpace::sigma2();
        let id = SpaceMap::identity(&s);
        assert!(is_b_retract(&id, &id).unwrap());

        let c = FiniteSpace::chain(3);
        let sec = SpaceMap::new(&s, &c, vec![0, 2]).unwrap();
        let ret = SpaceMap::new(&c, &s, vec![0, 0, 1]).unwrap();
        assert!(ret.is_continuous());
        assert_eq!(sec.then(&ret).unwrap(), SpaceMap::identity(&s));
        assert!(!is_b_retract(&sec, &ret).unwrap());
    }

    #[test]
    fn diagonal_of_identities() {
        let s = FiniteSpace::sigma2();
        let id = SpaceMap::identity(&s);
        let (d, prod) = diagonal(&[id.clone(), id]).unwrap();
        assert!(d.is_continuous());
        assert_eq!(prod.tuple(d.apply(0)), vec![0, 0]);
        assert_eq!(prod.tuple(d.apply(1)), vec![1, 1]);
        // preimages of the generating opens p_i^{-1}({1})
        for proj in &prod.projections {
            let pre = d.preimage(&proj.preimage(&s.set([1])));
            assert!(s.is_open(&pre));
        }
    }

    #[test]
    fn embedding_and_corestriction() {
        let c = FiniteSpace::chain(3);
        let f = SpaceMap::new(&FiniteSpace::sigma2(), &c, vec![0, 2]).unwrap();
        assert!(f.is_embedding());
        let sub = induced(&c, &f.image());
        let g = f.corestrict(&sub).unwrap();
        assert!(g.is_homeomorphism());
        let not_emb = SpaceMap::new(&antichain2(), &FiniteSpace::sigma2(), vec![0, 1]).unwrap();
        assert!(!not_emb.is_embedding());
    }
}

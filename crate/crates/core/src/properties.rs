//! Decision procedures for the separation-style properties of finite spaces
//! and the way-below relation on their open-set lattices.
//!
//! Every checker quantifies its definition literally while the search space
//! fits; past that it switches to an exact reduction of the same definition
//! and says so in [`PropertyReport::method`].

use std::fmt;

use serde::Serialize;

use crate::caps::caps;
use crate::error::{Error, Result};
use crate::finite_space::FiniteSpace;
use crate::pointset::PointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Sober,
    CoSober,
    StrongD,
    KBoundedSober,
    OpenWellFiltered,
    T0,
    T1,
}

impl Property {
    pub const ALL: [Property; 7] = [
        Property::Sober,
        Property::CoSober,
        Property::StrongD,
        Property::KBoundedSober,
        Property::OpenWellFiltered,
        Property::T0,
        Property::T1,
    ];

    /// The short name used on the command line and in filters.
    pub fn key(self) -> &'static str {
        match self {
            Property::Sober => "sober",
            Property::CoSober => "cosober",
            Property::StrongD => "strongd",
            Property::KBoundedSober => "kbsober",
            Property::OpenWellFiltered => "owf",
            Property::T0 => "t0",
            Property::T1 => "t1",
        }
    }

    pub fn from_key(key: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.key() == key)
    }

    pub fn check(self, x: &FiniteSpace) -> Result<PropertyReport> {
        match self {
            Property::Sober => is_sober(x),
            Property::CoSober => is_co_sober(x),
            Property::StrongD => is_strong_d(x),
            Property::KBoundedSober => is_k_bounded_sober(x),
            Property::OpenWellFiltered => is_open_well_filtered(x),
            Property::T0 => Ok(is_t0(x)),
            Property::T1 => Ok(is_t1(x)),
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    /// The definition's quantifiers were enumerated as written.
    Literal,
    /// An exact reformulation was checked instead; see the checker.
    Reduced,
}

/// The data that violates a property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// An irreducible closed `F` together with every `x` having `F = ↓x`
    /// (zero or several).
    Closed { set: PointSet, generic_points: Vec<usize> },
    /// A k-irreducible compact saturated `Q` with every `x` having `Q = ↑x`.
    Saturated { set: PointSet, generic_points: Vec<usize> },
    /// `⋂_{d∈D}↑d ∩ ↑x ⊆ U` while no `↑d ∩ ↑x` is.
    Directed { d: PointSet, x: usize, u: PointSet },
    /// A ≪-filtered family with `⋂𝓕 ⊆ U` and no member inside `U`.
    Family { family: Vec<PointSet>, u: PointSet },
    /// Two points, distinct but topologically indistinguishable (T0), or
    /// with `x < y` (T1).
    Points { x: usize, y: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: Property,
    pub holds: bool,
    pub method: Method,
    pub witness: Option<Witness>,
}

impl PropertyReport {
    fn holds(property: Property, method: Method) -> Self {
        PropertyReport {
            property,
            holds: true,
            method,
            witness: None,
        }
    }

    fn fails(property: Property, method: Method, witness: Witness) -> Self {
        PropertyReport {
            property,
            holds: false,
            method,
            witness: Some(witness),
        }
    }
}

/// Largest carrier for which directed subsets are enumerated literally.
pub const STRONG_D_LITERAL_CARRIER: usize = 8;
/// Largest `|O(X)|` for which unions of compact saturated pairs are
/// enumerated literally.
pub const CO_SOBER_LITERAL_OPENS: usize = 256;

fn generic_points(x: &FiniteSpace, f: &PointSet, lower: bool) -> Vec<usize> {
    x.points()
        .filter(|&p| if lower { x.down(p) == f } else { x.up(p) == f })
        .collect()
}

pub fn is_sober(x: &FiniteSpace) -> Result<PropertyReport> {
    for f in x.irreducible_closed_sets()? {
        let g = generic_points(x, &f, true);
        if g.len() != 1 {
            return Ok(PropertyReport::fails(
                Property::Sober,
                Method::Literal,
                Witness::Closed {
                    set: f,
                    generic_points: g,
                },
            ));
        }
    }
    Ok(PropertyReport::holds(Property::Sober, Method::Literal))
}

pub fn is_k_bounded_sober(x: &FiniteSpace) -> Result<PropertyReport> {
    for f in x.irreducible_closed_sets()? {
        if x.sup(&f).is_none() {
            continue;
        }
        let g = generic_points(x, &f, true);
        if g.len() != 1 {
            return Ok(PropertyReport::fails(
                Property::KBoundedSober,
                Method::Literal,
                Witness::Closed {
                    set: f,
                    generic_points: g,
                },
            ));
        }
    }
    Ok(PropertyReport::holds(Property::KBoundedSober, Method::Literal))
}

/// Whether the nonempty compact saturated `q` is not a union of two
/// strictly smaller compact saturated sets, by pairwise search.
fn k_irreducible_literal(opens: &[PointSet], q: &PointSet) -> bool {
    let smaller: Vec<&PointSet> = opens.iter().filter(|s| s.is_subset(q) && *s != q).collect();
    !smaller.iter().any(|a| smaller.iter().any(|b| a.union(b) == *q))
}

/// Same decision: a finite upper set is the union of `↑m` over its minimal
/// points, so it splits iff it has two or more minimal points.
fn k_irreducible_reduced(x: &FiniteSpace, q: &PointSet) -> bool {
    let minimal = q.iter().filter(|&p| q.iter().all(|r| r == p || !x.lt(r, p))).count();
    minimal == 1
}

pub fn is_k_irreducible(x: &FiniteSpace, q: &PointSet) -> Result<bool> {
    if q.is_empty() || !x.is_compact_saturated(q) {
        return Ok(false);
    }
    let opens = x.opens()?;
    Ok(if opens.len() <= CO_SOBER_LITERAL_OPENS {
        k_irreducible_literal(opens, q)
    } else {
        k_irreducible_reduced(x, q)
    })
}

/// k-irreducible sets are taken to be nonempty: `∅ = ∅ ∪ ∅` is otherwise
/// vacuously irreducible and has no generic point in any space.
pub fn is_co_sober(x: &FiniteSpace) -> Result<PropertyReport> {
    let opens = x.opens()?;
    let literal = opens.len() <= CO_SOBER_LITERAL_OPENS;
    let method = if literal { Method::Literal } else { Method::Reduced };
    for q in opens {
        if q.is_empty() {
            continue;
        }
        let irreducible = if literal {
            k_irreducible_literal(opens, q)
        } else {
            k_irreducible_reduced(x, q)
        };
        if !irreducible {
            continue;
        }
        let g = generic_points(x, q, false);
        if g.len() != 1 {
            return Ok(PropertyReport::fails(
                Property::CoSober,
                method,
                Witness::Saturated {
                    set: q.clone(),
                    generic_points: g,
                },
            ));
        }
    }
    Ok(PropertyReport::holds(Property::CoSober, method))
}

fn filtered_meet(x: &FiniteSpace, d: &PointSet, p: usize) -> PointSet {
    let mut s = x.up(p).clone();
    for e in d.iter() {
        s.intersect_with(x.up(e));
    }
    s
}

/// The strong d-space clause for one `(D, x, U)`.
fn strong_d_clause(x: &FiniteSpace, d: &PointSet, p: usize, u: &PointSet) -> bool {
    !filtered_meet(x, d, p).is_subset(u) || d.iter().any(|e| x.up(e).intersection(x.up(p)).is_subset(u))
}

/// Literal up to [`STRONG_D_LITERAL_CARRIER`] points: every nonempty subset
/// filtered by directedness, every point, every open. Beyond that, the
/// reduction checks that each directed set met has a greatest element `d0`,
/// which makes `⋂↑d = ↑d0` and the clause immediate.
pub fn is_strong_d(x: &FiniteSpace) -> Result<PropertyReport> {
    let n = x.n();
    if n <= STRONG_D_LITERAL_CARRIER {
        let opens = x.opens()?;
        for mask in 1u64..(1u64 << n) {
            let d = PointSet::from_mask(n, mask);
            if !x.is_directed(&d) {
                continue;
            }
            for p in x.points() {
                let meet = filtered_meet(x, &d, p);
                for u in opens.iter().filter(|u| meet.is_subset(u)) {
                    if !strong_d_clause(x, &d, p, u) {
                        return Ok(PropertyReport::fails(
                            Property::StrongD,
                            Method::Literal,
                            Witness::Directed { d, x: p, u: u.clone() },
                        ));
                    }
                }
            }
        }
        return Ok(PropertyReport::holds(Property::StrongD, Method::Literal));
    }
    if n > caps().carrier {
        return Err(Error::cap("directed-subset carrier", n as u128, caps().carrier as u128));
    }
    for mask in 1u64..(1u64 << n) {
        let d = PointSet::from_mask(n, mask);
        if !x.is_directed(&d) {
            continue;
        }
        let top = d.iter().find(|&e| d.iter().all(|f| x.leq(f, e)));
        if top.is_none() {
            // A finite directed set always has a greatest element; reaching
            // this means the order is broken.
            let p = d.first().expect("directed sets are nonempty");
            let u = filtered_meet(x, &d, p);
            return Ok(PropertyReport::fails(
                Property::StrongD,
                Method::Reduced,
                Witness::Directed { d, x: p, u },
            ));
        }
    }
    Ok(PropertyReport::holds(Property::StrongD, Method::Reduced))
}

pub fn is_t0(x: &FiniteSpace) -> PropertyReport {
    for a in x.points() {
        for b in x.points().filter(|&b| b > a) {
            if x.up(a) == x.up(b) {
                return PropertyReport::fails(Property::T0, Method::Literal, Witness::Points { x: a, y: b });
            }
        }
    }
    PropertyReport::holds(Property::T0, Method::Literal)
}

pub fn is_t1(x: &FiniteSpace) -> PropertyReport {
    for a in x.points() {
        if let Some(b) = x.up(a).iter().find(|&b| b != a) {
            return PropertyReport::fails(Property::T1, Method::Literal, Witness::Points { x: a, y: b });
        }
    }
    PropertyReport::holds(Property::T1, Method::Literal)
}

fn require_open(x: &FiniteSpace, u: &PointSet) -> Result<()> {
    if u.universe() != x.n() {
        return Err(Error::LengthMismatch {
            expected: x.n(),
            found: u.universe(),
        });
    }
    if !x.is_open(u) {
        return Err(Error::NotOpen);
    }
    Ok(())
}

/// `U ≪ V` in `(O(X), ⊆)`: every directed family of opens whose union
/// contains `V` has a member containing `U`.
///
/// A finite directed family contains its own union `M`, and a failing family
/// stays failing when replaced by `{M}`, so it suffices to quantify the
/// singleton families `{M}` with `M ⊇ V` open.
pub fn way_below_opens(x: &FiniteSpace, u: &PointSet, v: &PointSet) -> Result<bool> {
    require_open(x, u)?;
    require_open(x, v)?;
    Ok(x.opens()?.iter().filter(|m| v.is_subset(m)).all(|m| u.is_subset(m)))
}

/// Subfamilies of `opens` (bitmasks over indices) that are directed under
/// inclusion.
fn directed_families(opens: &[PointSet]) -> Vec<u64> {
    let k = opens.len();
    let mut out = Vec::new();
    for fam in 1u64..(1u64 << k) {
        let members: Vec<usize> = (0..k).filter(|i| fam >> i & 1 == 1).collect();
        let directed = members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| members.iter().any(|&c| opens[a].union(&opens[b]).is_subset(&opens[c])))
        });
        if directed {
            out.push(fam);
        }
    }
    out
}

/// The way-below matrix of `O(X)` by quantifying every directed subfamily
/// literally; `m[i][j]` is `opens[i] ≪ opens[j]`. Used for small lattices.
pub fn way_below_matrix_literal(x: &FiniteSpace) -> Result<Vec<Vec<bool>>> {
    let opens = x.opens()?;
    let k = opens.len();
    let cap = caps().owf_opens;
    if k > cap {
        return Err(Error::cap(
            "open-set lattice for literal way-below",
            k as u128,
            cap as u128,
        ));
    }
    let families = directed_families(opens);
    let unions: Vec<PointSet> = families
        .iter()
        .map(|&fam| {
            let mut s = x.empty_set();
            for i in (0..k).filter(|i| fam >> i & 1 == 1) {
                s.union_with(&opens[i]);
            }
            s
        })
        .collect();
    let mut m = vec![vec![false; k]; k];
    for (i, u) in opens.iter().enumerate() {
        for (j, v) in opens.iter().enumerate() {
            m[i][j] = families.iter().zip(&unions).all(|(&fam, cover)| {
                !v.is_subset(cover) || (0..k).any(|c| fam >> c & 1 == 1 && u.is_subset(&opens[c]))
            });
        }
    }
    Ok(m)
}

fn way_below_matrix_exact(x: &FiniteSpace) -> Result<Vec<Vec<bool>>> {
    let opens = x.opens()?;
    opens
        .iter()
        .map(|u| opens.iter().map(|v| way_below_opens(x, u, v)).collect())
        .collect()
}

/// Largest `|O(X)|` for the reduced open-well-filtered check, which walks
/// all pairs of opens.
pub const OWF_REDUCED_OPENS: usize = 2048;

/// Families are taken to be nonempty: the empty family has `⋂∅ = X` and no
/// member, so it would refute the property in every space.
///
/// With `|O(X)| ≤` the `owf` cap, every nonempty subfamily is tested for
/// ≪-filteredness against the literal way-below matrix, and then against
/// every open `U`. Beyond the cap (up to [`OWF_REDUCED_OPENS`]), the exact
/// way-below relation is computed and checked to lie inside `⊆`. Then in a
/// finite ≪-filtered family any two minimal members `A`, `B` have some
/// `C ≪ A, B`, so `C ⊆ A ∩ B` and `A = C = B`; the family has a least
/// member equal to `⋂𝓕`, which satisfies the condition for every `U`.
pub fn is_open_well_filtered(x: &FiniteSpace) -> Result<PropertyReport> {
    let opens = x.opens()?;
    let k = opens.len();
    if k <= caps().owf_opens {
        let wb = way_below_matrix_literal(x)?;
        for fam in 1u64..(1u64 << k) {
            let members: Vec<usize> = (0..k).filter(|i| fam >> i & 1 == 1).collect();
            let filtered = members
                .iter()
                .all(|&a| members.iter().all(|&b| members.iter().any(|&c| wb[c][a] && wb[c][b])));
            if !filtered {
                continue;
            }
            let mut meet = x.full_set();
            for &i in &members {
                meet.intersect_with(&opens[i]);
            }
            for u in opens.iter().filter(|u| meet.is_subset(u)) {
                if !members.iter().any(|&i| opens[i].is_subset(u)) {
                    return Ok(PropertyReport::fails(
                        Property::OpenWellFiltered,
                        Method::Literal,
                        Witness::Family {
                            family: members.iter().map(|&i| opens[i].clone()).collect(),
                            u: u.clone(),
                        },
                    ));
                }
            }
        }
        return Ok(PropertyReport::holds(Property::OpenWellFiltered, Method::Literal));
    }
    if k > OWF_REDUCED_OPENS {
        return Err(Error::cap(
            "open-set lattice for open well-filteredness",
            k as u128,
            OWF_REDUCED_OPENS as u128,
        ));
    }
    let wb = way_below_matrix_exact(x)?;
    for i in 0..k {
        for j in 0..k {
            assert!(
                !wb[i][j] || opens[i].is_subset(&opens[j]),
                "way-below escapes inclusion between {} and {}",
                opens[i],
                opens[j]
            );
        }
    }
    Ok(PropertyReport::holds(Property::OpenWellFiltered, Method::Reduced))
}

/// All seven properties, in [`Property::ALL`] order.
pub fn check_all(x: &FiniteSpace) -> Result<Vec<PropertyReport>> {
    Property::ALL.iter().map(|p| p.check(x)).collect()
}

/// Re-derives a failing report's violation from the raw definition, using
/// only the witness. Returns `false` for reports without a witness.
pub fn recheck_witness(x: &FiniteSpace, report: &PropertyReport) -> Result<bool> {
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    Ok(match (report.property, w) {
        (Property::Sober, Witness::Closed { set, .. }) => {
            x.is_closed(set) && x.is_irreducible(set)? && generic_points(x, set, true).len() != 1
        }
        (Property::KBoundedSober, Witness::Closed { set, .. }) => {
            x.is_closed(set)
                && x.is_irreducible(set)?
                && x.sup(set).is_some()
                && generic_points(x, set, true).len() != 1
        }
        (Property::CoSober, Witness::Saturated { set, .. }) => {
            !set.is_empty()
                && x.is_compact_saturated(set)
                && k_irreducible_literal(x.opens()?, set)
                && generic_points(x, set, false).len() != 1
        }
        (Property::StrongD, Witness::Directed { d, x: p, u }) => {
            x.is_directed(d) && x.is_open(u) && !strong_d_clause(x, d, *p, u)
        }
        (Property::OpenWellFiltered, Witness::Family { family, u }) => {
            let opens_ok = x.is_open(u) && family.iter().all(|f| x.is_open(f));
            let mut filtered = !family.is_empty();
            for a in family {
                for b in family {
                    let mut found = false;
                    for c in family {
                        if way_below_opens(x, c, a)? && way_below_opens(x, c, b)? {
                            found = true;
                            break;
                        }
                    }
                    filtered &= found;
                }
            }
            let mut meet = x.full_set();
            for f in family {
                meet.intersect_with(f);
            }
            opens_ok && filtered && meet.is_subset(u) && !family.iter().any(|f| f.is_subset(u))
        }
        (Property::T0, Witness::Points { x: a, y: b }) => a != b && x.up(*a) == x.up(*b),
        (Property::T1, Witness::Points { x: a, y: b }) => x.lt(*a, *b),
        _ => false,
    })
}

//! The catalog of infinite example spaces and their finite truncations.

use std::fmt;

use serde::Serialize;

use crate::caps::caps;
use crate::error::{Error, Result};
use crate::finite_space::FiniteSpace;

use super::cofinite::CofiniteSet;
use super::interval::{format_q, int, q, QIntervalSet, Q};
use super::johnstone::{in_k, leq as j_leq, truncation_points, JPoint, JohnstoneOpen};

pub const CATALOG_NAMES: &[&str] = &[
    "nat_alexandrov",
    "nat_cofinite",
    "scott_q03",
    "scott_xn",
    "scott_y",
    "johnstone",
    "johnstone_k",
    "johnstone_max",
];

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "space", rename_all = "snake_case")]
pub enum SymbolicSpace {
    /// `ℕ⁺` with opens `∅` and `↑n`.
    NatAlexandrov,
    /// `ℕ⁺` with opens `∅` and the cofinite sets.
    NatCofinite,
    /// A subspace of Scott `ℚ ∩ [0, 3]`.
    Scott { name: String, carrier: QIntervalSet },
    /// `L` with the Scott topology.
    Johnstone,
    /// `K_n = L ∖ (columns ≤ n, finite part)` as a subspace of `ΣL`.
    JohnstoneK { n: u64 },
    /// `max L`, the tops.
    JohnstoneMax,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SymPoint {
    Nat(u64),
    Rat(#[serde(serialize_with = "super::interval::serialize_q")] Q),
    J(JPoint),
}

impl fmt::Display for SymPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymPoint::Nat(n) => write!(f, "{n}"),
            SymPoint::Rat(x) => write!(f, "{}", format_q(*x)),
            SymPoint::J(p) => write!(f, "{p}"),
        }
    }
}

/// A set in one of the algebras.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum SymSet {
    Nat(CofiniteSet),
    Interval(QIntervalSet),
    Johnstone(JohnstoneOpen),
    /// `↓p` in `L`.
    JDown(JPoint),
}

impl fmt::Display for SymSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymSet::Nat(s) => write!(f, "{s}"),
            SymSet::Interval(s) => write!(f, "{s}"),
            SymSet::Johnstone(s) => write!(f, "{s}"),
            SymSet::JDown(p) => write!(f, "↓{p}"),
        }
    }
}

fn param(params: &[i64], i: usize, name: &str) -> Result<i64> {
    params
        .get(i)
        .copied()
        .ok_or_else(|| Error::BadParams(format!("{name} expects a parameter")))
}

/// `scott_xn(n) = [0,1) ∪ (2 − 1/n, 2 + 1/n)`, `n ≥ 2`.
pub fn scott_xn(n: i64) -> Result<QIntervalSet> {
    if n < 2 {
        return Err(Error::BadParams(format!("X_n needs n ≥ 2, got {n}")));
    }
    Ok(QIntervalSet::closed_open(int(0), int(1)).union(&QIntervalSet::open(int(2) - q(1, n), int(2) + q(1, n))))
}

/// `[0,1) ∪ {2}`.
pub fn scott_y() -> QIntervalSet {
    QIntervalSet::closed_open(int(0), int(1)).union(&QIntervalSet::point(int(2)))
}

pub fn catalog(name: &str, params: &[i64]) -> Result<SymbolicSpace> {
    let none = |s: SymbolicSpace| {
        if params.is_empty() {
            Ok(s)
        } else {
            Err(Error::BadParams(format!("{name} takes no parameters")))
        }
    };
    match name {
        "nat_alexandrov" => none(SymbolicSpace::NatAlexandrov),
        "nat_cofinite" => none(SymbolicSpace::NatCofinite),
        "scott_q03" => none(SymbolicSpace::Scott {
            name: name.into(),
            carrier: QIntervalSet::full(),
        }),
        "scott_y" => none(SymbolicSpace::Scott {
            name: name.into(),
            carrier: scott_y(),
        }),
        "scott_xn" => {
            let n = param(params, 0, name)?;
            Ok(SymbolicSpace::Scott {
                name: format!("scott_xn({n})"),
                carrier: scott_xn(n)?,
            })
        }
        "johnstone" => none(SymbolicSpace::Johnstone),
        "johnstone_k" => {
            let n = param(params, 0, name)?;
            if n < 1 {
                return Err(Error::BadParams(format!("K_n needs n ≥ 1, got {n}")));
            }
            Ok(SymbolicSpace::JohnstoneK { n: n as u64 })
        }
        "johnstone_max" => none(SymbolicSpace::JohnstoneMax),
        _ => Err(Error::UnknownSpace(name.into())),
    }
}

impl SymbolicSpace {
    pub fn name(&self) -> String {
        match self {
            SymbolicSpace::NatAlexandrov => "nat_alexandrov".into(),
            SymbolicSpace::NatCofinite => "nat_cofinite".into(),
            SymbolicSpace::Scott { name, .. } => name.clone(),
            SymbolicSpace::Johnstone => "johnstone".into(),
            SymbolicSpace::JohnstoneK { n } => format!("johnstone_k({n})"),
            SymbolicSpace::JohnstoneMax => "johnstone_max".into(),
        }
    }

    pub fn contains(&self, p: SymPoint) -> bool {
        match (self, p) {
            (SymbolicSpace::NatAlexandrov | SymbolicSpace::NatCofinite, SymPoint::Nat(n)) => n >= 1,
            (SymbolicSpace::Scott { carrier, .. }, SymPoint::Rat(x)) => carrier.contains(x),
            (SymbolicSpace::Johnstone, SymPoint::J(p)) => p.is_valid(),
            (SymbolicSpace::JohnstoneK { n }, SymPoint::J(p)) => p.is_valid() && in_k(*n, p),
            (SymbolicSpace::JohnstoneMax, SymPoint::J(p)) => p.is_valid() && p.is_top(),
            _ => false,
        }
    }

    fn check(&self, p: SymPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::BadParams(format!("{p} is not a point of {}", self.name())))
        }
    }

    /// The specialization order.
    pub fn leq(&self, a: SymPoint, b: SymPoint) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(match (self, a, b) {
            (SymbolicSpace::NatAlexandrov, SymPoint::Nat(x), SymPoint::Nat(y)) => x <= y,
            (SymbolicSpace::NatCofinite, _, _) => a == b,
            (SymbolicSpace::Scott { .. }, SymPoint::Rat(x), SymPoint::Rat(y)) => x <= y,
            (_, SymPoint::J(p), SymPoint::J(q)) => j_leq(p, q),
            _ => unreachable!("points were checked"),
        })
    }

    /// `cl{p}`, the down-set of `p`.
    pub fn point_closure(&self, p: SymPoint) -> Result<SymSet> {
        self.check(p)?;
        Ok(match (self, p) {
            (SymbolicSpace::NatAlexandrov, SymPoint::Nat(n)) => SymSet::Nat(CofiniteSet::prefix(n)),
            (SymbolicSpace::NatCofinite, SymPoint::Nat(n)) => SymSet::Nat(CofiniteSet::finite([n])),
            (SymbolicSpace::Scott { carrier, .. }, SymPoint::Rat(x)) => SymSet::Interval(carrier.down_to(x)),
            (_, SymPoint::J(p)) => SymSet::JDown(p),
            _ => unreachable!("points were checked"),
        })
    }

    /// Openness for sets the algebra represents. Johnstone opens are read
    /// as traces on the subspace; their Scott openness in `L` is checked
    /// column by column up to a horizon of four times the carrier cap.
    pub fn is_open(&self, s: &SymSet) -> Result<bool> {
        match (self, s) {
            (SymbolicSpace::NatAlexandrov, SymSet::Nat(s)) => Ok(s.is_upper()),
            (SymbolicSpace::NatCofinite, SymSet::Nat(s)) => Ok(s.is_cofinite_open()),
            (SymbolicSpace::Scott { carrier, .. }, SymSet::Interval(s)) => Ok(carrier.is_open_in_subspace(s)),
            (
                SymbolicSpace::Johnstone | SymbolicSpace::JohnstoneK { .. } | SymbolicSpace::JohnstoneMax,
                SymSet::Johnstone(u),
            ) => Ok(u.scott_open_check(caps().carrier as u64 * 4)),
            (SymbolicSpace::Johnstone, SymSet::JDown(_)) => Ok(false),
            _ => Err(Error::NotRepresentable(format!("{s} in {}", self.name()))),
        }
    }

    /// Supremum of a directed set given as a set of the algebra. `None`
    /// when the supremum does not exist in the space.
    pub fn directed_sup(&self, s: &SymSet) -> Result<Option<SymPoint>> {
        match (self, s) {
            (SymbolicSpace::NatAlexandrov | SymbolicSpace::NatCofinite, SymSet::Nat(s)) => {
                if s.is_empty() {
                    return Err(Error::BadParams("directed sets are nonempty".into()));
                }
                // the cofinite order is discrete: directed means a singleton
                if matches!(self, SymbolicSpace::NatCofinite) && !(s.is_finite() && s.support().len() == 1) {
                    return Err(Error::BadParams(format!("{s} is not directed in the discrete order")));
                }
                Ok(s.max().map(SymPoint::Nat))
            }
            (SymbolicSpace::Scott { carrier, .. }, SymSet::Interval(f)) => {
                if f.is_empty() || !f.is_subset(carrier) {
                    return Err(Error::BadParams(format!("{f} is not a nonempty subset of {carrier}")));
                }
                Ok(carrier.sup_in_subspace(f).map(SymPoint::Rat))
            }
            (_, SymSet::JDown(p)) => Ok(Some(SymPoint::J(*p))),
            _ => Err(Error::NotRepresentable(format!(
                "directed sup of {s} in {}",
                self.name()
            ))),
        }
    }

    /// The first `b` carrier elements in the canonical enumeration.
    pub fn truncation_points(&self, b: u64) -> Vec<SymPoint> {
        match self {
            SymbolicSpace::NatAlexandrov | SymbolicSpace::NatCofinite => (1..=b).map(SymPoint::Nat).collect(),
            SymbolicSpace::Scott { carrier, .. } => rationals()
                .filter(|&x| carrier.contains(x))
                .take(b as usize)
                .map(SymPoint::Rat)
                .collect(),
            SymbolicSpace::JohnstoneMax => (1..=b).map(|m| SymPoint::J(JPoint::top(m))).collect(),
            SymbolicSpace::Johnstone | SymbolicSpace::JohnstoneK { .. } => {
                // The s×s grid is exactly the points of rank ≤ s, so sorting
                // a large enough grid by rank gives a prefix of one global order.
                let mut size = 1;
                let mut out: Vec<JPoint> = Vec::new();
                while (out.len() as u64) < b {
                    out = truncation_points(size, size)
                        .into_iter()
                        .filter(|&p| self.contains(SymPoint::J(p)))
                        .collect();
                    size += 1;
                }
                out.sort_by_key(|&p| (rank(p), p.col, height_key(p)));
                out.truncate(b as usize);
                out.into_iter().map(SymPoint::J).collect()
            }
        }
    }
}

fn rank(p: JPoint) -> u64 {
    p.col.max(height_key(p))
}

/// Tops sort first within a column.
fn height_key(p: JPoint) -> u64 {
    match p.height {
        super::johnstone::Height::Fin(h) => h,
        super::johnstone::Height::Top => 0,
    }
}

/// Rationals of `[0, 3]` by denominator, then numerator, each once.
fn rationals() -> impl Iterator<Item = Q> {
    (1i64..).flat_map(|d| (0..=3 * d).map(move |n| q(n, d)).filter(move |x| *x.denom() == d))
}

/// Subspace of `space` on the given points with the trace topology. All
/// catalog spaces are Alexandrov on finite subsets, so the trace topology
/// is the one of the restricted specialization order.
pub fn truncate_points(space: &SymbolicSpace, points: &[SymPoint]) -> Result<FiniteSpace> {
    let n = points.len();
    let cap = caps().product as u128;
    if n as u128 > cap {
        return Err(Error::cap("truncation points", n as u128, cap));
    }
    let mut leq = vec![vec![false; n]; n];
    for (i, &a) in points.iter().enumerate() {
        for (j, &b) in points.iter().enumerate() {
            leq[i][j] = space.leq(a, b)?;
        }
    }
    FiniteSpace::from_order(&leq)
}

/// The subspace on the first `b` points of the canonical enumeration.
pub fn truncate(space: &SymbolicSpace, b: u64) -> Result<FiniteSpace> {
    if b < 1 {
        return Err(Error::BadParams("truncation bound must be ≥ 1".into()));
    }
    let cap = caps().product as u128;
    if b as u128 > cap {
        return Err(Error::cap("truncation points", b as u128, cap));
    }
    truncate_points(space, &space.truncation_points(b))
}

/// Columns `1..=cols` of `L`, heights `1..=height` plus the top.
pub fn truncate_johnstone(cols: u64, height: u64) -> Result<(FiniteSpace, Vec<JPoint>)> {
    if cols < 1 || height < 1 {
        return Err(Error::BadParams("columns and height must be ≥ 1".into()));
    }
    let pts = truncation_points(cols, height);
    let sym: Vec<SymPoint> = pts.iter().copied().map(SymPoint::J).collect();
    Ok((truncate_points(&SymbolicSpace::Johnstone, &sym)?, pts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_lookups() {
        assert!(matches!(catalog("nope", &[]), Err(Error::UnknownSpace(_))));
        assert!(matches!(catalog("scott_xn", &[1]), Err(Error::BadParams(_))));
        assert!(matches!(catalog("scott_xn", &[]), Err(Error::BadParams(_))));
        let s = catalog("scott_q03", &[]).unwrap();
        assert!(s
            .is_open(&SymSet::Interval(QIntervalSet::open_closed(q(1, 2), int(3))))
            .unwrap());
        let j = catalog("johnstone", &[]).unwrap();
        assert!(j
            .leq(SymPoint::J(JPoint::fin(2, 3)), SymPoint::J(JPoint::top(5)))
            .unwrap());
        assert!(!j
            .leq(SymPoint::J(JPoint::fin(2, 6)), SymPoint::J(JPoint::top(5)))
            .unwrap());
        let a = catalog("nat_alexandrov", &[]).unwrap();
        assert!(a.is_open(&SymSet::Nat(CofiniteSet::up_from(3))).unwrap());
        assert!(!a.is_open(&SymSet::Nat(CofiniteSet::cofinite([2]))).unwrap());
        assert_eq!(a.directed_sup(&SymSet::Nat(CofiniteSet::up_from(3))).unwrap(), None);
    }

    #[test]
    fn truncations() {
        let a = truncate(&catalog("nat_alexandrov", &[]).unwrap(), 5).unwrap();
        assert_eq!(a.count_opens().unwrap(), 6);
        let c = truncate(&catalog("nat_cofinite", &[]).unwrap(), 4).unwrap();
        assert_eq!(c.count_opens().unwrap(), 16);
        let (j, pts) = truncate_johnstone(3, 3).unwrap();
        assert_eq!(j.n(), 12);
        assert_eq!(pts.len(), 12);
        let y = catalog("scott_y", &[]).unwrap();
        let pts = y.truncation_points(4);
        assert_eq!(
            pts,
            vec![
                SymPoint::Rat(int(0)),
                SymPoint::Rat(int(2)),
                SymPoint::Rat(q(1, 2)),
                SymPoint::Rat(q(1, 3))
            ]
        );
    }
}

//! Finite unions of rational intervals inside `[0, 3]`, and the Scott
//! topology of `[0, 3]` restricted to such sets.

use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Serialize, Serializer};

pub type Q = Rational64;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn int(n: i64) -> Q {
    Q::from_integer(n)
}

fn lower() -> Q {
    Q::zero()
}

fn upper() -> Q {
    int(3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: Q,
    pub lo_closed: bool,
    pub hi: Q,
    pub hi_closed: bool,
}

impl Interval {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn contains(&self, x: Q) -> bool {
        let above = if self.lo_closed { x >= self.lo } else { x > self.lo };
        let below = if self.hi_closed { x <= self.hi } else { x < self.hi };
        above && below
    }

    fn clip(mut self) -> Interval {
        if self.lo < lower() {
            self.lo = lower();
            self.lo_closed = true;
        }
        if self.hi > upper() {
            self.hi = upper();
            self.hi_closed = true;
        }
        self
    }

    fn intersect(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = if self.lo > other.lo {
            (self.lo, self.lo_closed)
        } else if other.lo > self.lo {
            (other.lo, other.lo_closed)
        } else {
            (self.lo, self.lo_closed && other.lo_closed)
        };
        let (hi, hi_closed) = if self.hi < other.hi {
            (self.hi, self.hi_closed)
        } else if other.hi < self.hi {
            (other.hi, other.hi_closed)
        } else {
            (self.hi, self.hi_closed && other.hi_closed)
        };
        Interval {
            lo,
            lo_closed,
            hi,
            hi_closed,
        }
    }
}

/// A subset of `ℚ ∩ [0, 3]` that is a finite union of intervals, kept
/// sorted, disjoint and with no two parts that could be merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QIntervalSet {
    parts: Vec<Interval>,
}

impl QIntervalSet {
    pub fn from_intervals(parts: impl IntoIterator<Item = Interval>) -> Self {
        let mut parts: Vec<Interval> = parts
            .into_iter()
            .map(Interval::clip)
            .filter(|i| !i.is_empty())
            .collect();
        parts.sort_by(|a, b| a.lo.cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let mut out: Vec<Interval> = Vec::with_capacity(parts.len());
        for i in parts {
            if let Some(c) = out.last_mut() {
                let touches = i.lo < c.hi || (i.lo == c.hi && (i.lo_closed || c.hi_closed));
                if touches {
                    if i.hi > c.hi {
                        c.hi = i.hi;
                        c.hi_closed = i.hi_closed;
                    } else if i.hi == c.hi {
                        c.hi_closed |= i.hi_closed;
                    }
                    continue;
                }
            }
            out.push(i);
        }
        QIntervalSet { parts: out }
    }

    pub fn empty() -> Self {
        QIntervalSet { parts: Vec::new() }
    }

    /// `[0, 3]`.
    pub fn full() -> Self {
        QIntervalSet::closed(lower(), upper())
    }

    pub fn interval(lo: Q, lo_closed: bool, hi: Q, hi_closed: bool) -> Self {
        QIntervalSet::from_intervals([Interval {
            lo,
            lo_closed,
            hi,
            hi_closed,
        }])
    }

    /// `[a, b]`.
    pub fn closed(a: Q, b: Q) -> Self {
        QIntervalSet::interval(a, true, b, true)
    }

    /// `(a, b)`.
    pub fn open(a: Q, b: Q) -> Self {
        QIntervalSet::interval(a, false, b, false)
    }

    /// `[a, b)`.
    pub fn closed_open(a: Q, b: Q) -> Self {
        QIntervalSet::interval(a, true, b, false)
    }

    /// `(a, b]`.
    pub fn open_closed(a: Q, b: Q) -> Self {
        QIntervalSet::interval(a, false, b, true)
    }

    pub fn point(a: Q) -> Self {
        QIntervalSet::closed(a, a)
    }

    pub fn parts(&self) -> &[Interval] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, x: Q) -> bool {
        self.parts.iter().any(|i| i.contains(x))
    }

    pub fn union(&self, other: &Self) -> Self {
        QIntervalSet::from_intervals(self.parts.iter().chain(&other.parts).copied())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        QIntervalSet::from_intervals(
            self.parts
                .iter()
                .flat_map(|a| other.parts.iter().map(move |b| a.intersect(b))),
        )
    }

    /// Complement inside `[0, 3]`.
    pub fn complement(&self) -> Self {
        let mut gaps = Vec::new();
        let (mut cur, mut cur_closed) = (lower(), true);
        for i in &self.parts {
            gaps.push(Interval {
                lo: cur,
                lo_closed: cur_closed,
                hi: i.lo,
                hi_closed: !i.lo_closed,
            });
            cur = i.hi;
            cur_closed = !i.hi_closed;
        }
        gaps.push(Interval {
            lo: cur,
            lo_closed: cur_closed,
            hi: upper(),
            hi_closed: true,
        });
        QIntervalSet::from_intervals(gaps)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    pub fn inf(&self) -> Option<Q> {
        self.parts.first().map(|i| i.lo)
    }

    /// Least element, if attained.
    pub fn min(&self) -> Option<Q> {
        self.parts.first().filter(|i| i.lo_closed).map(|i| i.lo)
    }

    pub fn sup(&self) -> Option<Q> {
        self.parts.last().map(|i| i.hi)
    }

    /// Greatest element, if attained.
    pub fn max(&self) -> Option<Q> {
        self.parts.last().filter(|i| i.hi_closed).map(|i| i.hi)
    }

    /// `[0, x] ∩ self`.
    pub fn down_to(&self, x: Q) -> Self {
        self.intersection(&QIntervalSet::closed(lower(), x))
    }

    /// `(x, 3] ∩ self`.
    pub fn strictly_above(&self, x: Q) -> Self {
        self.intersection(&QIntervalSet::open_closed(x, upper()))
    }

    /// `[x, 3] ∩ self`.
    pub fn at_or_above(&self, x: Q) -> Self {
        self.intersection(&QIntervalSet::closed(x, upper()))
    }

    /// Open in the subspace `self` of Scott `[0, 3]`: the trace of `∅`,
    /// `[0, 3]` or some `(x, 3]`.
    pub fn is_open_in_subspace(&self, s: &QIntervalSet) -> bool {
        if !s.is_subset(self) {
            return false;
        }
        if s.is_empty() || s == self {
            return true;
        }
        let x = s.inf().expect("nonempty");
        if *s == self.strictly_above(x) {
            return true;
        }
        // `self ∩ [x, 3]` is a trace `self ∩ (x', 3]` iff `self` has a gap
        // just below `x`, i.e. `x` starts a closed part that is not the
        // first point of `[0, 3]`.
        *s == self.at_or_above(x) && self.parts.iter().any(|i| i.lo == x && i.lo_closed)
    }

    /// Closed in the subspace: `∅` or the trace of some `[0, x]` (the Scott
    /// closed sets of `[0, 3]`), including the whole subspace.
    pub fn is_closed_in_subspace(&self, s: &QIntervalSet) -> bool {
        s.is_subset(self) && self.is_open_in_subspace(&self.difference(s))
    }

    /// Least upper bound of `f` inside the subspace `self`, ordered as in
    /// `[0, 3]`: the least element of `self` at or above `sup f`.
    pub fn sup_in_subspace(&self, f: &QIntervalSet) -> Option<Q> {
        let s = f.sup()?;
        self.at_or_above(s).min()
    }
}

fn fmt_q(x: Q) -> String {
    if *x.denom() == 1 {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            return write!(f, "{{{}}}", fmt_q(self.lo));
        }
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            fmt_q(self.lo),
            fmt_q(self.hi),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

impl fmt::Display for QIntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.parts.iter().map(Interval::to_string).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

impl Serialize for QIntervalSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// Serialises a rational as `p/q` (or `p`).
pub fn serialize_q<S: Serializer>(x: &Q, serializer: S) -> Result<S::Ok, S::Error> {
    serializer.serialize_str(&fmt_q(*x))
}

pub fn format_q(x: Q) -> String {
    fmt_q(x)
}

//! Johnstone's dcpo `L = ℕ⁺ × (ℕ⁺ ∪ {∞})` and a class of Scott-open
//! subsets described by finitely much data.
//!
//! `(m, n) ≤ (m', n')` iff `m = m'` and `n ≤ n'`, or `n' = ∞` and `n ≤ m'`.
//! The first coordinate is the column, the second the height.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Height {
    Fin(u64),
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct JPoint {
    pub col: u64,
    pub height: Height,
}

impl JPoint {
    pub fn fin(col: u64, height: u64) -> JPoint {
        JPoint {
            col,
            height: Height::Fin(height),
        }
    }

    pub fn top(col: u64) -> JPoint {
        JPoint {
            col,
            height: Height::Top,
        }
    }

    pub fn is_top(&self) -> bool {
        self.height == Height::Top
    }

    pub fn is_valid(&self) -> bool {
        self.col >= 1 && self.height != Height::Fin(0)
    }
}

impl fmt::Display for JPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.height {
            Height::Fin(h) => write!(f, "({},{h})", self.col),
            Height::Top => write!(f, "({},∞)", self.col),
        }
    }
}

pub fn leq(p: JPoint, q: JPoint) -> bool {
    (p.col == q.col && p.height <= q.height)
        || matches!((p.height, q.height), (Height::Fin(h), Height::Top) if h <= q.col)
}

/// The eventual behaviour of a selector: `s(n) = c` or `s(n) = n + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Const(u64),
    Shift(u64),
}

impl Rule {
    pub fn at(self, n: u64) -> u64 {
        match self {
            Rule::Const(c) => c,
            Rule::Shift(c) => n + c,
        }
    }

    fn slope(self) -> u64 {
        match self {
            Rule::Const(_) => 0,
            Rule::Shift(_) => 1,
        }
    }
}

/// `s(k + i) = prefix[i]` for `i < prefix.len()`, then `rule`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tail {
    pub from: u64,
    pub prefix: Vec<u64>,
    pub rule: Rule,
}

impl Tail {
    pub fn new(from: u64, rule: Rule) -> Tail {
        Tail {
            from,
            prefix: Vec::new(),
            rule,
        }
    }

    pub fn selector(&self, n: u64) -> Option<u64> {
        if n < self.from {
            return None;
        }
        let i = (n - self.from) as usize;
        Some(self.prefix.get(i).copied().unwrap_or_else(|| self.rule.at(n)))
    }

    /// First column from which `rule` applies.
    fn rule_start(&self) -> u64 {
        self.from + self.prefix.len() as u64
    }
}

/// What a representable open removes from one column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ColumnState {
    /// The finite points of height `≤ h` are removed; the top stays.
    Below(u64),
    /// The whole column, top included, is removed.
    Removed,
}

/// `∅`, or `L ∖ ↓A` with `A` a finite set of points plus at most one tail
/// `{(n, s(n)) : n ≥ k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum JohnstoneOpen {
    Empty,
    Complement {
        points: BTreeSet<JPoint>,
        tail: Option<Tail>,
    },
}

/// `H(n) = max(base, slope·n + offset)` for every column `n ≥ from`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EventualHeight {
    pub from: u64,
    pub base: u64,
    pub slope: u64,
    pub offset: u64,
}

impl EventualHeight {
    pub fn at(&self, n: u64) -> u64 {
        self.base.max(self.slope * n + self.offset)
    }

    /// First column from which `H(n) = slope·n + offset` or `H` is constant.
    fn linear_from(&self) -> u64 {
        if self.slope == 1 {
            self.from.max(self.base.saturating_sub(self.offset))
        } else {
            self.from
        }
    }
}

impl JohnstoneOpen {
    pub fn full() -> Self {
        JohnstoneOpen::Complement {
            points: BTreeSet::new(),
            tail: None,
        }
    }

    pub fn complement_of(points: impl IntoIterator<Item = JPoint>, tail: Option<Tail>) -> Result<Self> {
        let points: BTreeSet<JPoint> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| !p.is_valid()) {
            return Err(Error::NotRepresentable(format!("{p} is not a point of L")));
        }
        if let Some(t) = &tail {
            let zero_rule = matches!(t.rule, Rule::Const(0));
            if t.from == 0 || t.prefix.contains(&0) || zero_rule {
                return Err(Error::NotRepresentable("tail selects height 0".into()));
            }
        }
        Ok(JohnstoneOpen::Complement { points, tail })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, JohnstoneOpen::Empty)
    }

    /// `max{j : (j, ∞) ∈ A}`, or 0.
    pub fn max_removed_top(&self) -> u64 {
        match self {
            JohnstoneOpen::Empty => 0,
            JohnstoneOpen::Complement { points, .. } => {
                points.iter().filter(|p| p.is_top()).map(|p| p.col).max().unwrap_or(0)
            }
        }
    }

    pub fn column(&self, n: u64) -> ColumnState {
        match self {
            JohnstoneOpen::Empty => ColumnState::Removed,
            JohnstoneOpen::Complement { points, tail } => {
                if points.contains(&JPoint::top(n)) {
                    return ColumnState::Removed;
                }
                let explicit = points
                    .iter()
                    .filter(|p| p.col == n)
                    .filter_map(|p| match p.height {
                        Height::Fin(h) => Some(h),
                        Height::Top => None,
                    })
                    .max()
                    .unwrap_or(0);
                let from_tail = tail.as_ref().and_then(|t| t.selector(n)).unwrap_or(0);
                ColumnState::Below(self.max_removed_top().max(explicit).max(from_tail))
            }
        }
    }

    pub fn contains(&self, p: JPoint) -> bool {
        match (self.column(p.col), p.height) {
            (ColumnState::Removed, _) => false,
            (ColumnState::Below(_), Height::Top) => true,
            (ColumnState::Below(h), Height::Fin(k)) => k > h,
        }
    }

    /// The uniform description of `H(n)` past all explicit data. `None` for
    /// the empty open.
    pub fn eventual(&self) -> Option<EventualHeight> {
        let JohnstoneOpen::Complement { points, tail } = self else {
            return None;
        };
        let base = self.max_removed_top();
        let past_points = points.iter().map(|p| p.col + 1).max().unwrap_or(1);
        Some(match tail {
            None => EventualHeight {
                from: past_points,
                base,
                slope: 0,
                offset: 0,
            },
            Some(t) => EventualHeight {
                from: past_points.max(t.rule_start()),
                base,
                slope: t.rule.slope(),
                offset: match t.rule {
                    Rule::Const(c) | Rule::Shift(c) => c,
                },
            },
        })
    }

    /// `self ⊆ other`, decided exactly. On failure returns a column where
    /// `other` removes more than `self`.
    pub fn subset_witness(&self, other: &JohnstoneOpen) -> std::result::Result<(), u64> {
        let (Some(a), Some(b)) = (self.eventual(), other.eventual()) else {
            return match (self, other) {
                (JohnstoneOpen::Empty, _) => Ok(()),
                // a nonempty open keeps every top past its removed ones
                _ => Err(self.max_removed_top() + 1),
            };
        };
        let horizon = a.linear_from().max(b.linear_from());
        for n in 1..=horizon {
            if other.column(n) > self.column(n) {
                return Err(n);
            }
        }
        // Past the horizon both heights are affine in n; compare slopes.
        if b.slope > a.slope {
            let mut n = horizon + 1;
            while b.at(n) <= a.at(n) {
                n += 1;
            }
            return Err(n);
        }
        Ok(())
    }

    pub fn is_subset(&self, other: &JohnstoneOpen) -> bool {
        self.subset_witness(other).is_ok()
    }

    /// `M = max{j : (j, ∞) ∉ U}`, so `(n, ∞) ∈ U` for all `n > M`, and
    /// `x_n = min{m : (n, m) ∈ U}` for `M < n ≤ bound`, with the rule that
    /// gives `x_n` beyond.
    pub fn min_selector(&self, bound: u64) -> Result<MinSelector> {
        let ev = self.eventual().ok_or(Error::EmptyOpen)?;
        let m = self.max_removed_top();
        let values = (m + 1..=bound)
            .map(|n| match self.column(n) {
                ColumnState::Below(h) => (n, h + 1),
                ColumnState::Removed => unreachable!("columns past M keep their top"),
            })
            .collect();
        Ok(MinSelector {
            m,
            values,
            eventual: EventualHeight {
                base: ev.base + 1,
                offset: ev.offset + 1,
                ..ev
            },
        })
    }

    /// `L ∖ ↓{(n, x_n) : n ≥ k}` for the column minima `x_n` of `self`;
    /// needs `k > M`.
    pub fn cover_member(&self, k: u64) -> Result<JohnstoneOpen> {
        let sel = self.min_selector(0)?;
        if k <= sel.m {
            return Err(Error::BadParams(format!("cover index {k} must exceed M = {}", sel.m)));
        }
        let ev = sel.eventual;
        let start = ev.linear_from().max(k);
        let prefix: Vec<u64> = (k..start).map(|n| self.column_min(n)).collect::<Result<_>>()?;
        let rule = if ev.slope == 1 {
            Rule::Shift(ev.offset)
        } else {
            Rule::Const(ev.base.max(ev.offset))
        };
        JohnstoneOpen::complement_of([], Some(Tail { from: k, prefix, rule }))
    }

    /// `x_n`, the least height of column `n` inside `self`.
    pub fn column_min(&self, n: u64) -> Result<u64> {
        match self.column(n) {
            ColumnState::Below(h) => Ok(h + 1),
            ColumnState::Removed => Err(Error::BadParams(format!("column {n} is not in the open"))),
        }
    }

    /// Checks columns `1..=horizon` for the facts behind Scott openness: a
    /// removed column loses its top, and a kept top has a point of its own
    /// column in `U`. `U` is upper because `↓A` is lower. A directed set
    /// without a greatest element is an increasing sequence in one column
    /// with that column's top as supremum, so these facts make `U`
    /// inaccessible by directed suprema.
    pub fn scott_open_check(&self, horizon: u64) -> bool {
        (1..=horizon).all(|n| match self.column(n) {
            ColumnState::Removed => !self.contains(JPoint::top(n)),
            ColumnState::Below(h) => self.contains(JPoint::top(n)) && self.contains(JPoint::fin(n, h + 1)),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinSelector {
    pub m: u64,
    /// `(n, x_n)` for `M < n ≤ bound`.
    pub values: Vec<(u64, u64)>,
    /// `x_n` for `n ≥ eventual.from`.
    pub eventual: EventualHeight,
}

impl fmt::Display for JohnstoneOpen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            JohnstoneOpen::Empty => write!(f, "∅"),
            JohnstoneOpen::Complement { points, tail } => {
                if points.is_empty() && tail.is_none() {
                    return write!(f, "L");
                }
                let mut parts = Vec::new();
                if !points.is_empty() {
                    let list: Vec<String> = points.iter().map(JPoint::to_string).collect();
                    parts.push(format!("{{{}}}", list.join(",")));
                }
                if let Some(t) = tail {
                    let rule = match t.rule {
                        Rule::Const(c) => c.to_string(),
                        Rule::Shift(0) => "n".to_string(),
                        Rule::Shift(c) => format!("n+{c}"),
                    };
                    let s = if t.prefix.is_empty() {
                        rule
                    } else {
                        let pre: Vec<String> = t.prefix.iter().map(u64::to_string).collect();
                        format!("[{}] then {rule}", pre.join(","))
                    };
                    parts.push(format!("{{(n,s(n)) : n≥{}, s = {s}}}", t.from));
                }
                write!(f, "L∖↓({})", parts.join(" ∪ "))
            }
        }
    }
}

impl Serialize for JohnstoneOpen {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

/// `K_n = L ∖ (finite parts of columns 1..=n)`.
pub fn in_k(n: u64, p: JPoint) -> bool {
    p.is_top() || p.col > n
}

/// The points of the `cols × height` truncation, column by column, each
/// column bottom to top with its top last.
pub fn truncation_points(cols: u64, height: u64) -> Vec<JPoint> {
    let mut out = Vec::new();
    for c in 1..=cols {
        for h in 1..=height {
            out.push(JPoint::fin(c, h));
        }
        out.push(JPoint::top(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn floor_one() -> JohnstoneOpen {
        JohnstoneOpen::complement_of([], Some(Tail::new(1, Rule::Const(1)))).unwrap()
    }

    #[test]
    fn order() {
        assert!(leq(JPoint::fin(2, 3), JPoint::top(5)));
        assert!(!leq(JPoint::fin(2, 6), JPoint::top(5)));
        assert!(leq(JPoint::fin(2, 3), JPoint::fin(2, 4)));
        assert!(!leq(JPoint::fin(2, 3), JPoint::fin(3, 4)));
        assert!(!leq(JPoint::top(2), JPoint::top(3)));
        assert!(leq(JPoint::fin(4, 1), JPoint::top(4)));
    }

    #[test]
    fn min_selector_examples() {
        let sel = floor_one().min_selector(6).unwrap();
        assert_eq!(sel.m, 0);
        assert!(sel.values.iter().all(|&(_, x)| x == 2));
        let sel = JohnstoneOpen::full().min_selector(4).unwrap();
        assert!(sel.values.iter().all(|&(_, x)| x == 1));
        assert_eq!(JohnstoneOpen::Empty.min_selector(3).unwrap_err(), Error::EmptyOpen);
    }

    #[test]
    fn removed_top_lowers_every_column() {
        let u = JohnstoneOpen::complement_of([JPoint::top(3), JPoint::fin(1, 5)], None).unwrap();
        assert_eq!(u.column(3), ColumnState::Removed);
        assert_eq!(u.column(1), ColumnState::Below(5));
        assert_eq!(u.column(7), ColumnState::Below(3));
        assert!(!u.contains(JPoint::fin(9, 3)));
        assert!(u.contains(JPoint::fin(9, 4)));
        let sel = u.min_selector(6).unwrap();
        assert_eq!(sel.m, 3);
        assert_eq!(sel.values, vec![(4, 4), (5, 4), (6, 4)]);
    }

    #[test]
    fn containment() {
        let full = JohnstoneOpen::full();
        let f1 = floor_one();
        assert!(f1.is_subset(&full));
        assert!(!full.is_subset(&f1));
        let diag = JohnstoneOpen::complement_of([], Some(Tail::new(2, Rule::Shift(0)))).unwrap();
        // the diagonal tail grows past the constant floor
        assert!(!f1.is_subset(&diag));
        assert!(!diag.is_subset(&f1));
        assert!(JohnstoneOpen::Empty.is_subset(&f1));
        assert!(!f1.is_subset(&JohnstoneOpen::Empty));
        let later = JohnstoneOpen::complement_of([], Some(Tail::new(5, Rule::Shift(0)))).unwrap();
        assert!(diag.is_subset(&later));
    }

    #[test]
    fn cover_members() {
        let u = floor_one();
        let w3 = u.cover_member(3).unwrap();
        assert!(w3.contains(JPoint::fin(2, 1)));
        assert!(!w3.contains(JPoint::fin(3, 2)));
        assert!(w3.contains(JPoint::fin(3, 3)));
        assert!(u.contains(JPoint::fin(3, 2)));
        assert!(!u.is_subset(&w3));
        assert!(w3.is_subset(&u.cover_member(4).unwrap()));
        assert!(w3.scott_open_check(10));
    }
}

//! Finite and cofinite subsets of the positive integers.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarity {
    /// The set is `support`.
    Finite,
    /// The set is `ℕ⁺ ∖ support`.
    Cofinite,
}

/// A finite or cofinite subset of `ℕ⁺ = {1, 2, ...}`. The support never
/// contains 0, so equal sets have equal representations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CofiniteSet {
    polarity: Polarity,
    support: BTreeSet<u64>,
}

impl CofiniteSet {
    fn new(polarity: Polarity, support: impl IntoIterator<Item = u64>) -> Self {
        CofiniteSet {
            polarity,
            support: support.into_iter().filter(|&n| n > 0).collect(),
        }
    }

    pub fn empty() -> Self {
        CofiniteSet::new(Polarity::Finite, [])
    }

    pub fn full() -> Self {
        CofiniteSet::new(Polarity::Cofinite, [])
    }

    pub fn finite(points: impl IntoIterator<Item = u64>) -> Self {
        CofiniteSet::new(Polarity::Finite, points)
    }

    /// `ℕ⁺ ∖ points`.
    pub fn cofinite(points: impl IntoIterator<Item = u64>) -> Self {
        CofiniteSet::new(Polarity::Cofinite, points)
    }

    /// `↓n = {1, ..., n}`.
    pub fn prefix(n: u64) -> Self {
        CofiniteSet::finite(1..=n)
    }

    /// `↑n = {n, n+1, ...}`.
    pub fn up_from(n: u64) -> Self {
        CofiniteSet::cofinite(1..n)
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn support(&self) -> &BTreeSet<u64> {
        &self.support
    }

    pub fn contains(&self, n: u64) -> bool {
        n > 0 && (self.support.contains(&n) == (self.polarity == Polarity::Finite))
    }

    pub fn is_empty(&self) -> bool {
        self.polarity == Polarity::Finite && self.support.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.polarity == Polarity::Cofinite && self.support.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.polarity == Polarity::Finite
    }

    pub fn complement(&self) -> Self {
        let polarity = match self.polarity {
            Polarity::Finite => Polarity::Cofinite,
            Polarity::Cofinite => Polarity::Finite,
        };
        CofiniteSet {
            polarity,
            support: self.support.clone(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        use Polarity::*;
        match (self.polarity, other.polarity) {
            (Finite, Finite) => CofiniteSet::finite(self.support.union(&other.support).copied()),
            (Cofinite, Cofinite) => CofiniteSet::cofinite(self.support.intersection(&other.support).copied()),
            (Finite, Cofinite) => CofiniteSet::cofinite(other.support.difference(&self.support).copied()),
            (Cofinite, Finite) => CofiniteSet::cofinite(self.support.difference(&other.support).copied()),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.complement().union(&other.complement()).complement()
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.difference(other).is_empty()
    }

    /// Least element, if any.
    pub fn min(&self) -> Option<u64> {
        match self.polarity {
            Polarity::Finite => self.support.first().copied(),
            Polarity::Cofinite => (1..).find(|n| !self.support.contains(n)),
        }
    }

    /// Greatest element; only finite nonempty sets have one.
    pub fn max(&self) -> Option<u64> {
        match self.polarity {
            Polarity::Finite => self.support.last().copied(),
            Polarity::Cofinite => None,
        }
    }

    /// The members up to `bound`, in increasing order.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        (1..=bound).filter(|&n| self.contains(n)).collect()
    }

    /// Open in the cofinite topology on `ℕ⁺`: empty or cofinite.
    pub fn is_cofinite_open(&self) -> bool {
        self.is_empty() || self.polarity == Polarity::Cofinite
    }

    /// Upper set of `(ℕ⁺, ≤)`: empty or some `↑n`.
    pub fn is_upper(&self) -> bool {
        match self.min() {
            None => true,
            Some(n) => *self == CofiniteSet::up_from(n),
        }
    }
}

impl fmt::Display for CofiniteSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |s: &BTreeSet<u64>| s.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self.polarity {
            Polarity::Finite => write!(f, "{{{}}}", list(&self.support)),
            Polarity::Cofinite if self.support.is_empty() => write!(f, "ℕ"),
            Polarity::Cofinite => write!(f, "ℕ∖{{{}}}", list(&self.support)),
        }
    }
}

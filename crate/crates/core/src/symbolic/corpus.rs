//! The fixed corpus of example statements with their expected verdicts.

use serde::Serialize;

use crate::error::Result;

use super::catalog::{scott_xn, scott_y};
use super::certificate::{
    check_cosober_alexandrov, check_johnstone_claims, check_kbs, check_kbs_holds, check_owf_refutation, revalidate,
    Certificate, OwfFamily, VerdictKind,
};
use super::cofinite::CofiniteSet;
use super::interval::{int, QIntervalSet};
use super::johnstone::{JPoint, JohnstoneOpen, Rule, Tail};

/// Largest Alexandrov truncation in the corpus.
pub const ALEXANDROV_MAX: u64 = 50;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusEntry {
    pub id: String,
    pub expected: VerdictKind,
    pub certificate: Certificate,
    /// Verdict kind matches, every fact holds, and a refutation survives
    /// revalidation from its witness alone.
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusReport {
    pub bound: u64,
    pub entries: Vec<CorpusEntry>,
}

impl CorpusReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

/// `∅`, then nonempty representable opens of `ΣL`.
pub fn johnstone_samples() -> Vec<JohnstoneOpen> {
    let tail = |from, rule| Some(Tail::new(from, rule));
    vec![
        JohnstoneOpen::Empty,
        JohnstoneOpen::complement_of([], tail(1, Rule::Const(1))).expect("representable"),
        JohnstoneOpen::full(),
        JohnstoneOpen::complement_of([JPoint::top(3), JPoint::fin(1, 5)], None).expect("representable"),
        JohnstoneOpen::complement_of([], tail(2, Rule::Shift(0))).expect("representable"),
        JohnstoneOpen::complement_of(
            [JPoint::fin(2, 7)],
            Some(Tail {
                from: 1,
                prefix: vec![4, 1, 6],
                rule: Rule::Const(2),
            }),
        )
        .expect("representable"),
    ]
}

fn entry(id: impl Into<String>, expected: VerdictKind, certificate: Certificate) -> Result<CorpusEntry> {
    let mut pass = certificate.verdict.kind() == expected && certificate.all_facts_hold();
    if expected == VerdictKind::Refuted {
        pass &= revalidate(&certificate)?;
    }
    Ok(CorpusEntry {
        id: id.into(),
        expected,
        certificate,
        pass,
    })
}

pub fn run_corpus(bound: u64) -> Result<CorpusReport> {
    let mut entries = Vec::new();

    entries.push(entry(
        "cofinite/owf-prefix-complements",
        VerdictKind::Refuted,
        check_owf_refutation(&OwfFamily::PrefixComplements, &CofiniteSet::empty())?,
    )?);
    entries.push(entry(
        "cofinite/owf-trivial-family",
        VerdictKind::Holds,
        check_owf_refutation(
            &OwfFamily::Explicit {
                members: vec![CofiniteSet::full()],
            },
            &CofiniteSet::full(),
        )?,
    )?);

    let y = scott_y();
    entries.push(entry(
        "scott/y-witness",
        VerdictKind::Refuted,
        check_kbs(&y, &QIntervalSet::closed_open(int(0), int(1)), int(2))?,
    )?);
    entries.push(entry("scott/y-decided", VerdictKind::Refuted, check_kbs_holds(&y)?)?);
    for n in 2..=6 {
        entries.push(entry(
            format!("scott/x{n}"),
            VerdictKind::Holds,
            check_kbs_holds(&scott_xn(n)?)?,
        )?);
    }
    entries.push(entry(
        "scott/full",
        VerdictKind::Holds,
        check_kbs_holds(&QIntervalSet::full())?,
    )?);

    for n in 2..=ALEXANDROV_MAX {
        entries.push(entry(
            format!("alexandrov/cosober-{n}"),
            VerdictKind::Holds,
            check_cosober_alexandrov(n)?,
        )?);
    }

    let samples = johnstone_samples();
    let certs = check_johnstone_claims(bound, &samples)?;
    let (claim1, rest) = certs.split_at(samples.len());
    for (i, (u, c)) in samples.iter().zip(claim1).enumerate() {
        let expected = if u.is_empty() {
            VerdictKind::Holds
        } else {
            VerdictKind::Refuted
        };
        entries.push(entry(format!("johnstone/claim1-{i}"), expected, c.clone())?);
    }
    let expected = [VerdictKind::HoldsUpTo, VerdictKind::HoldsUpTo, VerdictKind::Holds];
    for (c, (label, e)) in rest
        .iter()
        .zip(["claim2", "claim3", "claim4"].into_iter().zip(expected))
    {
        entries.push(entry(format!("johnstone/{label}"), e, c.clone())?);
    }

    Ok(CorpusReport { bound, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_passes() {
        let report = run_corpus(8).unwrap();
        let failed: Vec<&str> = report.failures().map(|e| e.id.as_str()).collect();
        assert!(failed.is_empty(), "{failed:?}");
        let refuted = report
            .entries
            .iter()
            .filter(|e| e.id.starts_with("johnstone/claim1") && e.expected == VerdictKind::Refuted)
            .count();
        assert!(refuted >= 3);
    }
}

//! Verdicts and certificates for statements about the infinite example
//! spaces, decided inside the exact set algebras.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::properties::{is_co_sober, is_t1};

use crate::constructions::{find_homeomorphism, induced};

use super::catalog::{catalog, truncate, truncate_johnstone, truncate_points, SymPoint};
use super::cofinite::CofiniteSet;
use super::interval::{format_q, serialize_q, QIntervalSet, Q};
use super::johnstone::{in_k, leq, truncation_points, ColumnState, JPoint, JohnstoneOpen};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictKind {
    Holds,
    Refuted,
    HoldsUpTo,
    CapExceeded,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Holds => "holds",
            VerdictKind::Refuted => "refuted",
            VerdictKind::HoldsUpTo => "holds_up_to",
            VerdictKind::CapExceeded => "cap_exceeded",
        })
    }
}

/// `Holds` and `Refuted` are exact; `HoldsUpTo` records the bound that was
/// actually checked.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Refuted { witness: SymWitness },
    HoldsUpTo { bound: u64 },
    CapExceeded { what: String },
}

impl Verdict {
    pub fn kind(&self) -> VerdictKind {
        match self {
            Verdict::Holds => VerdictKind::Holds,
            Verdict::Refuted { .. } => VerdictKind::Refuted,
            Verdict::HoldsUpTo { .. } => VerdictKind::HoldsUpTo,
            Verdict::CapExceeded { .. } => VerdictKind::CapExceeded,
        }
    }
}

/// A family of opens of cofinite `ℕ⁺`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum OwfFamily {
    /// `{ℕ ∖ ↓n : n ∈ ℕ⁺}`.
    PrefixComplements,
    Explicit {
        members: Vec<CofiniteSet>,
    },
}

impl OwfFamily {
    fn member(n: u64) -> CofiniteSet {
        CofiniteSet::prefix(n).complement()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoverMember {
    pub k: u64,
    pub open: JohnstoneOpen,
    /// `(k, x_k)`: in `U`, not in this member.
    pub witness_point: JPoint,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SymWitness {
    /// A ≪-filtered family with `⋂𝓕 ⊆ U` and no member inside `U`.
    OwfFamily { family: OwfFamily, u: CofiniteSet },
    /// An irreducible closed `F` of the subspace whose supremum exists and
    /// which is the closure of no point.
    KbsClosed {
        subspace: QIntervalSet,
        f: QIntervalSet,
        #[serde(serialize_with = "serialize_q")]
        sup: Q,
    },
    /// A directed open cover of `V` none of whose members contains `U`.
    JohnstoneCover {
        u: JohnstoneOpen,
        v: JohnstoneOpen,
        m: u64,
        members: Vec<CoverMember>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub statement: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub property: String,
    pub space: String,
    pub subject: String,
    pub verdict: Verdict,
    pub facts: Vec<Fact>,
}

impl Certificate {
    pub fn all_facts_hold(&self) -> bool {
        self.facts.iter().all(|f| f.holds)
    }
}

#[derive(Default)]
struct Facts(Vec<Fact>);

impl Facts {
    fn push(&mut self, statement: impl Into<String>, holds: bool) -> bool {
        self.0.push(Fact {
            statement: statement.into(),
            holds,
        });
        holds
    }

    fn all(&self) -> bool {
        self.0.iter().all(|f| f.holds)
    }
}

/// Points checked individually where a fact also has a uniform argument.
pub const SPOT_CHECK: u64 = 64;

/// Decides the open-well-filteredness condition for one family and one `U`
/// in cofinite `ℕ⁺`: `Refuted` when the family is ≪-filtered, `⋂𝓕 ⊆ U`
/// and no member lies in `U`; `Holds` when the condition is met.
pub fn check_owf_refutation(family: &OwfFamily, u: &CofiniteSet) -> Result<Certificate> {
    let mut facts = Facts::default();
    if !u.is_cofinite_open() {
        return Err(Error::NotRepresentable(format!("{u} is not open in cofinite ℕ")));
    }
    facts.push(
        "every subset of cofinite ℕ is compact (an open set misses finitely many points), so U ≪ V iff U ⊆ V",
        true,
    );
    let (meet_in_u, member_in_u) = match family {
        OwfFamily::PrefixComplements => {
            let open = (1..=SPOT_CHECK).all(|n| OwfFamily::member(n).is_cofinite_open());
            facts.push("each member ℕ∖↓n is cofinite, hence open", open);
            let chain = (1..=SPOT_CHECK).all(|n| OwfFamily::member(n + 1).is_subset(&OwfFamily::member(n)));
            facts.push(
                "ℕ∖↓(n+1) ⊆ ℕ∖↓n, so the family is a decreasing chain and ≪-filtered",
                chain,
            );
            let empty_meet = (1..=SPOT_CHECK).all(|p| !OwfFamily::member(p).contains(p));
            facts.push("p ∉ ℕ∖↓p for every p, so ⋂𝓕 = ∅", empty_meet);
            if !(open && chain && empty_meet) {
                return Err(Error::NotRepresentable(
                    "prefix-complement family failed its checks".into(),
                ));
            }
            // ℕ∖↓n ⊆ U iff ℕ∖U ⊆ ↓n; a finite U has infinite complement.
            let member_in_u = match u.max() {
                _ if u.is_finite() => None,
                _ => Some(u.complement().max().unwrap_or(1)),
            };
            (true, member_in_u)
        }
        OwfFamily::Explicit { members } => {
            if members.is_empty() {
                return Err(Error::BadParams("empty family".into()));
            }
            if let Some(m) = members.iter().find(|m| !m.is_cofinite_open()) {
                return Err(Error::NotRepresentable(format!("{m} is not open in cofinite ℕ")));
            }
            facts.push("each member is open", true);
            let filtered = members.iter().all(|a| {
                members
                    .iter()
                    .all(|b| members.iter().any(|c| c.is_subset(a) && c.is_subset(b)))
            });
            facts.push("for all members A, B some member C ⊆ A ∩ B (≪-filtered)", filtered);
            if !filtered {
                return Err(Error::BadParams("family is not ≪-filtered".into()));
            }
            let mut meet = CofiniteSet::full();
            for m in members {
                meet = meet.intersection(m);
            }
            let meet_in_u = meet.is_subset(u);
            facts.push(format!("⋂𝓕 = {meet}"), true);
            let hit = members.iter().position(|m| m.is_subset(u)).map(|i| i as u64 + 1);
            (meet_in_u, hit)
        }
    };
    facts.push(format!("⋂𝓕 ⊆ U = {u}"), meet_in_u);
    let verdict = match member_in_u {
        Some(n) => {
            facts.push(format!("member {n} lies inside U"), true);
            Verdict::Holds
        }
        None if meet_in_u => {
            facts.push("no member lies inside U", true);
            Verdict::Refuted {
                witness: SymWitness::OwfFamily {
                    family: family.clone(),
                    u: u.clone(),
                },
            }
        }
        None => Verdict::Holds,
    };
    Ok(Certificate {
        property: "open_well_filtered".into(),
        space: "nat_cofinite".into(),
        subject: match family {
            OwfFamily::PrefixComplements => format!("𝓕 = {{ℕ∖↓n : n ∈ ℕ}}, U = {u}"),
            OwfFamily::Explicit { members } => {
                let list: Vec<String> = members.iter().map(CofiniteSet::to_string).collect();
                format!("𝓕 = {{{}}}, U = {u}", list.join(", "))
            }
        },
        verdict,
        facts: facts.0,
    })
}

/// Checks one candidate counterexample to k-bounded sobriety of the
/// subspace `y` of Scott `[0, 3]`: `Refuted` when `f` is closed and
/// irreducible, its supremum in `y` exists and equals `sup_claim`, and no
/// point has closure `f`; `Holds` when `f` has a generic point.
pub fn check_kbs(y: &QIntervalSet, f: &QIntervalSet, sup_claim: Q) -> Result<Certificate> {
    let mut facts = Facts::default();
    if f.is_empty() || !f.is_subset(y) {
        return Err(Error::BadParams(format!("F = {f} is not a nonempty subset of Y = {y}")));
    }
    let s = f.sup().expect("nonempty");
    let closed = y.is_closed_in_subspace(f) && *f == y.down_to(s);
    facts.push(
        format!(
            "F = [0,{}] ∩ Y, the trace of a Scott-closed set, so F is closed in Y",
            format_q(s)
        ),
        closed,
    );
    facts.push(
        "F is a nonempty subset of a chain, hence directed, hence irreducible",
        true,
    );
    let sup = y.sup_in_subspace(f);
    let sup_ok = sup == Some(sup_claim);
    facts.push(
        format!(
            "⋁_Y F = least element of Y ∩ [{}, 3] = {}",
            format_q(s),
            sup.map(format_q).unwrap_or_else(|| "none".into())
        ),
        sup_ok,
    );
    if !closed || !sup_ok {
        return Err(Error::BadParams(format!(
            "F = {f} is not closed in Y or its supremum is not {}",
            format_q(sup_claim)
        )));
    }
    // cl_Y(x) = [0,x] ∩ Y contains x, so cl_Y(x) = F forces x = max F.
    let generic = f.max();
    facts.push(
        "cl_Y(x) = [0,x] ∩ Y contains x, so cl_Y(x) = F only for x = max F",
        true,
    );
    let verdict = match generic {
        Some(x) => {
            facts.push(format!("F = cl_Y({})", format_q(x)), y.down_to(x) == *f);
            Verdict::Holds
        }
        None => {
            facts.push(
                format!(
                    "F has no greatest element, and cl_Y({}) = {} ≠ F",
                    format_q(sup_claim),
                    y.down_to(sup_claim)
                ),
                y.down_to(sup_claim) != *f,
            );
            Verdict::Refuted {
                witness: SymWitness::KbsClosed {
                    subspace: y.clone(),
                    f: f.clone(),
                    sup: sup_claim,
                },
            }
        }
    };
    Ok(Certificate {
        property: "k_bounded_sober".into(),
        space: format!("Y = {y} ⊆ Scott [0,3]"),
        subject: format!("F = {f}, ⋁F = {}", format_q(sup_claim)),
        verdict,
        facts: facts.0,
    })
}

/// Decides k-bounded sobriety of an interval-union subspace of Scott
/// `[0, 3]`. Its nonempty closed sets are the traces `[0, x] ∩ Y`, all
/// chains and so irreducible. Such an `F` with `s = sup F`:
/// if `s ∈ F`, then `F = cl_Y(s)`; otherwise `s` is an open right end of a
/// part of `Y`, `⋁_Y F` is the least element of `Y ∩ (s, 3]` if any, and
/// `F` is the closure of no point. So `Y` fails exactly when some part ends
/// open at `s` and `Y ∩ (s, 3]` has a least element.
pub fn check_kbs_holds(y: &QIntervalSet) -> Result<Certificate> {
    let mut facts = Facts::default();
    facts.push(
        "nonempty closed sets of Y are the traces [0,x] ∩ Y; each is a chain, hence irreducible",
        true,
    );
    let mut failure = None;
    for part in y.parts() {
        let s = part.hi;
        if part.hi_closed {
            facts.push(
                format!(
                    "F ending at {}: the supremum is attained, F = cl_Y({})",
                    format_q(s),
                    format_q(s)
                ),
                true,
            );
            continue;
        }
        match y.strictly_above(s).min() {
            Some(next) => {
                facts.push(
                    format!(
                        "F = Y ∩ [0,{}): ⋁_Y F = {} exists but F has no greatest element",
                        format_q(s),
                        format_q(next)
                    ),
                    true,
                );
                failure.get_or_insert((y.down_to(s), next));
            }
            None => {
                facts.push(
                    format!(
                        "F = Y ∩ [0,{}): Y ∩ ({},3] has no least element, so ⋁_Y F does not exist",
                        format_q(s),
                        format_q(s)
                    ),
                    true,
                );
            }
        }
    }
    let verdict = match failure {
        None => Verdict::Holds,
        Some((f, sup)) => {
            let inner = check_kbs(y, &f, sup)?;
            match inner.verdict {
                Verdict::Refuted { witness } => Verdict::Refuted { witness },
                _ => {
                    return Err(Error::NotRepresentable(
                        "k-bounded sobriety case analysis disagrees".into(),
                    ))
                }
            }
        }
    };
    Ok(Certificate {
        property: "k_bounded_sober".into(),
        space: format!("{y} ⊆ Scott [0,3]"),
        subject: "every irreducible closed set with a supremum".into(),
        verdict,
        facts: facts.0,
    })
}

fn ensure_bound(bound: u64) -> Result<()> {
    if bound < 2 {
        return Err(Error::BadParams(format!("bound {bound} < 2")));
    }
    Ok(())
}

/// The cover `{W_k : M < k}` for a nonempty representable `U`, checked for
/// `M < k ≤ M + bound`; the checks are uniform in `k` because every `W_k`
/// comes from the same selector.
fn johnstone_cover(u: &JohnstoneOpen, bound: u64, facts: &mut Facts) -> Result<SymWitness> {
    let sel = u.min_selector(bound)?;
    let m = sel.m;
    facts.push(
        format!("M = {m}: (n,∞) ∈ U for every n > M (only listed tops are removed)"),
        (m + 1..=m + bound).all(|n| u.contains(JPoint::top(n))),
    );
    facts.push(
        format!("U is Scott open (columns checked up to {})", m + bound),
        u.scott_open_check(m + bound + 1),
    );
    let mut members = Vec::new();
    let mut ok = true;
    for k in m + 1..=m + bound {
        let w = u.cover_member(k)?;
        let next = u.cover_member(k + 1)?;
        let xk = u.column_min(k)?;
        let p = JPoint::fin(k, xk);
        ok &= w.scott_open_check(k + bound);
        ok &= w.max_removed_top() == 0 && (1..k).all(|n| w.column(n) == ColumnState::Below(0));
        ok &= w.is_subset(&next);
        ok &= u.contains(p) && !w.contains(p) && !u.is_subset(&w);
        members.push(CoverMember {
            k,
            open: w,
            witness_point: p,
        });
    }
    facts.push("each W_k = L∖↓{(n,x_n) : n ≥ k} is Scott open", ok);
    facts.push(
        "W_k removes no top and leaves columns below k whole, so ⋃W_k = L covers V",
        ok,
    );
    facts.push("W_k ⊆ W_{k+1}, so the cover is directed", ok);
    facts.push("(k,x_k) ∈ U ∖ W_k, so no W_k includes U", ok);
    if !ok {
        return Err(Error::NotRepresentable(format!("cover construction failed for {u}")));
    }
    Ok(SymWitness::JohnstoneCover {
        u: u.clone(),
        v: JohnstoneOpen::full(),
        m,
        members,
    })
}

/// `U ≪ V` in `σ(L)` for representable opens: true for `U = ∅`, refuted by
/// the cover construction otherwise.
fn johnstone_way_below(u: &JohnstoneOpen, bound: u64) -> Result<bool> {
    if u.is_empty() {
        return Ok(true);
    }
    johnstone_cover(u, bound, &mut Facts::default())?;
    Ok(false)
}

/// Bounded search over subfamilies of `pool` (with `∅` added): every
/// ≪-filtered one contains `∅`, so its meet is `∅` and `∅` is a member
/// inside any `U`.
fn bounded_owf_search(pool: &[JohnstoneOpen], bound: u64) -> Result<(bool, u64)> {
    let mut pool: Vec<JohnstoneOpen> = pool.to_vec();
    if !pool.contains(&JohnstoneOpen::Empty) {
        pool.push(JohnstoneOpen::Empty);
    }
    pool.truncate(12);
    let wb: Vec<bool> = pool
        .iter()
        .map(|u| johnstone_way_below(u, bound))
        .collect::<Result<_>>()?;
    let k = pool.len();
    let mut checked = 0;
    for fam in 1u64..(1u64 << k) {
        let members: Vec<usize> = (0..k).filter(|i| fam >> i & 1 == 1).collect();
        // U3 ≪ U1, U2 depends only on U3 here
        let filtered = members.iter().any(|&c| wb[c]);
        if filtered {
            checked += 1;
            if !members.iter().any(|&c| pool[c].is_empty()) {
                return Ok((false, checked));
            }
        }
    }
    Ok((true, checked))
}

/// Certificates for the four claims about Johnstone's dcpo, at the given
/// bound and on the given representable sample opens.
pub fn check_johnstone_claims(bound: u64, samples: &[JohnstoneOpen]) -> Result<Vec<Certificate>> {
    ensure_bound(bound)?;
    let mut out = Vec::new();

    for u in samples {
        let mut facts = Facts::default();
        let verdict = if u.is_empty() {
            facts.push("∅ is included in a member of every cover", true);
            Verdict::Holds
        } else {
            let witness = johnstone_cover(u, bound, &mut facts)?;
            Verdict::Refuted { witness }
        };
        out.push(Certificate {
            property: "johnstone_claim_1".into(),
            space: "johnstone".into(),
            subject: format!("U ≪ L for U = {u}"),
            verdict,
            facts: facts.0,
        });
    }

    let nonempty: Vec<JohnstoneOpen> = samples.iter().filter(|u| !u.is_empty()).cloned().collect();
    let mut pool = nonempty.clone();
    if let Some(first) = nonempty.first() {
        let m = first.max_removed_top();
        for k in m + 1..=m + 3 {
            pool.push(first.cover_member(k)?);
        }
    }

    let mut facts = Facts::default();
    facts.push("claim (1) on the samples: U ≪ V only for U = ∅", true);
    facts.push(
        "a ≪-filtered family has, for U1 = U2 = V, some U3 ≪ V, so it contains ∅; then ∅ ⊆ U for every U",
        true,
    );
    let (ok, checked) = bounded_owf_search(&pool, bound)?;
    facts.push(
        format!(
            "bounded search: {checked} ≪-filtered subfamilies of {} opens all contain ∅",
            pool.len().min(11) + 1
        ),
        ok,
    );
    out.push(Certificate {
        property: "johnstone_claim_2".into(),
        space: "johnstone".into(),
        subject: "ΣL is open well-filtered".into(),
        verdict: if facts.all() {
            Verdict::HoldsUpTo { bound }
        } else {
            Verdict::CapExceeded {
                what: "bounded family search".into(),
            }
        },
        facts: facts.0,
    });

    let mut facts = Facts::default();
    for n in 1..=bound {
        let mut ok = true;
        for u in &nonempty {
            let m = u.max_removed_top().max(n);
            let k = m + 1;
            let w = u.cover_member(k)?;
            let p = JPoint::fin(k, u.column_min(k)?);
            ok &= in_k(n, p) && u.contains(p) && !w.contains(p);
            ok &= (m + 1..=m + bound).all(|t| in_k(n, JPoint::top(t)) && u.contains(JPoint::top(t)));
        }
        facts.push(
            format!("K_{n}: every sample trace is refuted as way-below by a cover witness inside K_{n}"),
            ok,
        );
    }
    let (ok, _) = bounded_owf_search(&pool, bound)?;
    facts.push("the family argument of claim (2) carries over to the traces on K_n", ok);
    let t = bound.min(3);
    let (l, pts) = truncate_johnstone(t, t)?;
    let in_k1 = l.set((0..pts.len()).filter(|&i| in_k(1, pts[i])));
    let trace = induced(&l, &in_k1).space;
    let own: Vec<SymPoint> = in_k1.iter().map(|i| SymPoint::J(pts[i])).collect();
    let k1 = truncate_points(&catalog("johnstone_k", &[1])?, &own)?;
    facts.push(
        format!("on the {t}×{t} truncation, the trace of ΣL on K_1 is homeomorphic to K_1 with its own order topology"),
        find_homeomorphism(&trace, &k1)?.is_some(),
    );
    out.push(Certificate {
        property: "johnstone_claim_3".into(),
        space: "johnstone".into(),
        subject: format!("ΣK_n is open well-filtered for n ≤ {bound}"),
        verdict: if facts.all() {
            Verdict::HoldsUpTo { bound }
        } else {
            Verdict::CapExceeded {
                what: "K_n family check".into(),
            }
        },
        facts: facts.0,
    });

    out.push(johnstone_claim_4(bound, samples)?);
    Ok(out)
}

fn johnstone_claim_4(bound: u64, samples: &[JohnstoneOpen]) -> Result<Certificate> {
    let mut facts = Facts::default();
    let pts = truncation_points(bound, bound);
    facts.push(
        "a finite point (m,h) lies outside K_m, and every top lies in every K_n, so ⋂K_n = max L",
        pts.iter().all(|&p| {
            if p.is_top() {
                (1..=bound).all(|n| in_k(n, p))
            } else {
                !in_k(p.col, p)
            }
        }),
    );
    facts.push(
        "max L is an antichain: (m,∞) ≤ (m',∞) iff m = m'",
        (1..=bound).all(|a| (1..=bound).all(|b| leq(JPoint::top(a), JPoint::top(b)) == (a == b))),
    );
    facts.push(
        "a nonempty Scott open set contains all but finitely many tops; its trace on max L is cofinite",
        true,
    );
    let mut traces_ok = true;
    for u in samples {
        let trace = match u {
            JohnstoneOpen::Empty => CofiniteSet::empty(),
            JohnstoneOpen::Complement { points, .. } => {
                CofiniteSet::cofinite(points.iter().filter(|p| p.is_top()).map(|p| p.col))
            }
        };
        traces_ok &= trace.is_cofinite_open();
        traces_ok &= (1..=SPOT_CHECK).all(|m| u.contains(JPoint::top(m)) == trace.contains(m));
    }
    facts.push(
        "under (m,∞) ↦ m each sample open traces to an open of cofinite ℕ",
        traces_ok,
    );
    let finite_sets: [&[u64]; 4] = [&[], &[1], &[2, 5], &[1, 2, 3, 7]];
    let mut onto = true;
    for f in finite_sets {
        let u = JohnstoneOpen::complement_of(f.iter().map(|&j| JPoint::top(j)), None)?;
        let target = CofiniteSet::cofinite(f.iter().copied());
        onto &= u.scott_open_check(SPOT_CHECK);
        onto &= (1..=SPOT_CHECK).all(|m| u.contains(JPoint::top(m)) == target.contains(m));
    }
    facts.push(
        "every cofinite ℕ∖F is the trace of the Scott open L∖↓{(j,∞) : j ∈ F}, and ∅ of ∅",
        onto,
    );
    facts.push(
        "(m,∞) ↦ m is a bijection max L → ℕ carrying trace opens exactly onto cofinite opens: a homeomorphism",
        onto && traces_ok,
    );
    let verdict = if facts.all() {
        Verdict::Holds
    } else {
        Verdict::CapExceeded {
            what: "claim (4) check".into(),
        }
    };
    Ok(Certificate {
        property: "johnstone_claim_4".into(),
        space: "johnstone".into(),
        subject: "⋂ΣK_n = max L ≅ cofinite ℕ".into(),
        verdict,
        facts: facts.0,
    })
}

/// Alexandrov `ℕ⁺`: finite truncation checks plus the symbolic argument
/// that the nonempty compact saturated sets are exactly the `↑n`.
pub fn check_cosober_alexandrov(n: u64) -> Result<Certificate> {
    ensure_bound(n)?;
    let mut facts = Facts::default();
    let space = catalog("nat_alexandrov", &[])?;
    let t = truncate(&space, n)?;
    facts.push(format!("truncation to {n} points is co-sober"), is_co_sober(&t)?.holds);
    facts.push(format!("truncation to {n} points is not T1"), !is_t1(&t).holds);
    let shapes = (1..=n).all(|a| CofiniteSet::up_from(a).is_upper());
    facts.push("a nonempty upper set with least element a equals ↑a", shapes);
    let unions = (1..=n).all(|a| {
        (1..=n).all(|b| CofiniteSet::up_from(a).union(&CofiniteSet::up_from(b)) == CofiniteSet::up_from(a.min(b)))
    });
    facts.push(
        "↑a ∪ ↑b = ↑min(a,b), so a union of two compact saturated sets is one of them: each ↑n is k-irreducible",
        unions,
    );
    let unique = (1..=n).all(|a| (1..=n).all(|b| (CofiniteSet::up_from(a) == CofiniteSet::up_from(b)) == (a == b)));
    facts.push("↑a = ↑b only for a = b, so the generic point is unique", unique);
    facts.push("↑n is the least open set around n, hence compact", true);
    facts.push(
        "1 ≤ 2 with 1 ≠ 2, so ℕ is not T1",
        CofiniteSet::up_from(1).contains(2) && !CofiniteSet::up_from(2).contains(1),
    );
    let verdict = if facts.all() {
        Verdict::Holds
    } else {
        Verdict::Refuted {
            witness: SymWitness::OwfFamily {
                family: OwfFamily::Explicit { members: vec![] },
                u: CofiniteSet::empty(),
            },
        }
    };
    Ok(Certificate {
        property: "co_sober".into(),
        space: "nat_alexandrov".into(),
        subject: format!("co-sober and not T1 (truncation {n})"),
        verdict,
        facts: facts.0,
    })
}

/// Re-derives a `Refuted` verdict's violation from its witness using only
/// membership and containment in the algebras. `false` for other verdicts.
pub fn revalidate(cert: &Certificate) -> Result<bool> {
    let Verdict::Refuted { witness } = &cert.verdict else {
        return Ok(false);
    };
    Ok(match witness {
        SymWitness::OwfFamily { family, u } => match family {
            OwfFamily::PrefixComplements => {
                let open = (1..=SPOT_CHECK).all(|n| OwfFamily::member(n).is_cofinite_open());
                let filtered = (1..=SPOT_CHECK).all(|i| {
                    (1..=SPOT_CHECK).all(|j| {
                        let c = OwfFamily::member(i.max(j));
                        c.is_subset(&OwfFamily::member(i)) && c.is_subset(&OwfFamily::member(j))
                    })
                });
                let meet_empty = (1..=SPOT_CHECK).all(|p| !OwfFamily::member(p).contains(p));
                let none_inside = u.is_finite() && (1..=SPOT_CHECK).all(|n| !OwfFamily::member(n).is_subset(u));
                open && filtered && meet_empty && none_inside
            }
            OwfFamily::Explicit { members } => {
                let mut meet = CofiniteSet::full();
                for m in members {
                    meet = meet.intersection(m);
                }
                !members.is_empty()
                    && members.iter().all(CofiniteSet::is_cofinite_open)
                    && meet.is_subset(u)
                    && !members.iter().any(|m| m.is_subset(u))
            }
        },
        SymWitness::KbsClosed { subspace, f, sup } => {
            let s = f.sup();
            let closed = subspace.is_closed_in_subspace(f);
            let sup_ok = subspace.sup_in_subspace(f) == Some(*sup);
            let upper_bound = f.is_subset(&subspace.down_to(*sup));
            let no_generic = f.max().is_none() && subspace.down_to(*sup) != *f;
            !f.is_empty() && s.is_some() && closed && sup_ok && upper_bound && no_generic
        }
        SymWitness::JohnstoneCover { u, v, m, members } => {
            !members.is_empty()
                && v.is_subset(&JohnstoneOpen::full())
                && members.iter().all(|c| {
                    c.k > *m
                        && c.open.max_removed_top() == 0
                        && (1..c.k).all(|n| c.open.column(n) == ColumnState::Below(0))
                        && u.contains(c.witness_point)
                        && !c.open.contains(c.witness_point)
                        && !u.is_subset(&c.open)
                })
                && members.windows(2).all(|w| w[0].open.is_subset(&w[1].open))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::interval::{int, q};
    use crate::symbolic::johnstone::{Rule, Tail};

    fn y_space() -> QIntervalSet {
        QIntervalSet::closed_open(int(0), int(1)).union(&QIntervalSet::point(int(2)))
    }

    fn x_n(n: i64) -> QIntervalSet {
        QIntervalSet::closed_open(int(0), int(1)).union(&QIntervalSet::open(int(2) - q(1, n), int(2) + q(1, n)))
    }

    #[test]
    fn cofinite_owf() {
        let c = check_owf_refutation(&OwfFamily::PrefixComplements, &CofiniteSet::empty()).unwrap();
        assert_eq!(c.verdict.kind(), VerdictKind::Refuted);
        assert!(revalidate(&c).unwrap());
        let fam = OwfFamily::Explicit {
            members: vec![CofiniteSet::full()],
        };
        let c = check_owf_refutation(&fam, &CofiniteSet::full()).unwrap();
        assert_eq!(c.verdict.kind(), VerdictKind::Holds);
        let c = check_owf_refutation(&OwfFamily::PrefixComplements, &CofiniteSet::cofinite([4])).unwrap();
        assert_eq!(c.verdict.kind(), VerdictKind::Holds);
    }

    #[test]
    fn kbs_examples() {
        let y = y_space();
        let c = check_kbs(&y, &QIntervalSet::closed_open(int(0), int(1)), int(2)).unwrap();
        assert_eq!(c.verdict.kind(), VerdictKind::Refuted);
        assert!(revalidate(&c).unwrap());
        assert_eq!(check_kbs_holds(&y).unwrap().verdict.kind(), VerdictKind::Refuted);
        for n in 2..=6 {
            assert_eq!(check_kbs_holds(&x_n(n)).unwrap().verdict.kind(), VerdictKind::Holds);
        }
        assert_eq!(
            check_kbs_holds(&QIntervalSet::full()).unwrap().verdict.kind(),
            VerdictKind::Holds
        );
        assert!(check_kbs(&y, &QIntervalSet::closed_open(int(0), int(1)), int(1)).is_err());
    }

    #[test]
    fn johnstone_claims() {
        let floor = JohnstoneOpen::complement_of([], Some(Tail::new(1, Rule::Const(1)))).unwrap();
        let samples = vec![JohnstoneOpen::Empty, floor, JohnstoneOpen::full()];
        let certs = check_johnstone_claims(5, &samples).unwrap();
        let kinds: Vec<VerdictKind> = certs.iter().map(|c| c.verdict.kind()).collect();
        assert_eq!(
            kinds,
            vec![
                VerdictKind::Holds,
                VerdictKind::Refuted,
                VerdictKind::Refuted,
                VerdictKind::HoldsUpTo,
                VerdictKind::HoldsUpTo,
                VerdictKind::Holds,
            ]
        );
        assert!(revalidate(&certs[1]).unwrap());
        assert!(check_johnstone_claims(1, &samples).is_err());
    }

    #[test]
    fn alexandrov() {
        for n in [2, 5, 50] {
            let c = check_cosober_alexandrov(n).unwrap();
            assert_eq!(c.verdict, Verdict::Holds, "{c:?}");
        }
    }
}

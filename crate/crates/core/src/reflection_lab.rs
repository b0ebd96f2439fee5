//! K-closures, reflections and their universal property, sobrification by
//! two routes, and bounded checks of the conditions K1 to K4 for class
//! predicates on finite spaces.
//!
//! Everything here is a finite instance: targets of a universal property are
//! an explicit list, and condition checks range over spaces up to a stated
//! size.

use std::collections::HashSet;

use serde::Serialize;

use crate::b_topology::{b_closure, is_b_dense};
use crate::caps::caps;
use crate::constructions::{canonical_embedding, cube_b_closure};
use crate::constructions::{diagonal, find_homeomorphism_fixing, induced, product, SpaceMap, Subspace};
use crate::enumerate::{all_continuous_maps, all_spaces_up_to};
use crate::error::{Error, Result};
use crate::finite_space::FiniteSpace;
use crate::pointset::PointSet;
use crate::properties::Property;

/// A class of finite spaces given by a decision procedure. The procedure
/// must not depend on labels (condition K2); [`check_k_conditions`] samples
/// this.
#[derive(Clone, Copy)]
pub struct ClassPredicate {
    pub name: &'static str,
    pub decide: fn(&FiniteSpace) -> Result<bool>,
    pub notes: &'static str,
}

impl std::fmt::Debug for ClassPredicate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ClassPredicate").field("name", &self.name).finish()
    }
}

impl ClassPredicate {
    pub fn contains(&self, x: &FiniteSpace) -> Result<bool> {
        (self.decide)(x)
    }
}

fn property_holds(p: Property, x: &FiniteSpace) -> Result<bool> {
    Ok(p.check(x)?.holds)
}

/// The built-in predicates, by name.
pub fn registry() -> Vec<ClassPredicate> {
    vec![
        ClassPredicate {
            name: "all",
            decide: |_| Ok(true),
            notes: "every finite T0 space",
        },
        ClassPredicate {
            name: "sober",
            decide: |x| property_holds(Property::Sober, x),
            notes: "sober spaces",
        },
        ClassPredicate {
            name: "cosober",
            decide: |x| property_holds(Property::CoSober, x),
            notes: "co-sober spaces",
        },
        ClassPredicate {
            name: "strongd",
            decide: |x| property_holds(Property::StrongD, x),
            notes: "strong d-spaces",
        },
        ClassPredicate {
            name: "kbsober",
            decide: |x| property_holds(Property::KBoundedSober, x),
            notes: "k-bounded sober spaces",
        },
        ClassPredicate {
            name: "owf",
            decide: |x| property_holds(Property::OpenWellFiltered, x),
            notes: "open well-filtered spaces",
        },
        ClassPredicate {
            name: "t1",
            decide: |x| Ok(x.is_t1()),
            notes: "T1 spaces; the finite ones are discrete",
        },
        ClassPredicate {
            name: "at_most_2_points",
            decide: |x| Ok(x.n() <= 2),
            notes: "cardinality at most 2; not productive",
        },
        ClassPredicate {
            name: "even_cardinality",
            decide: |x| Ok(x.n() % 2 == 0),
            notes: "even cardinality; not intersection-stable",
        },
        ClassPredicate {
            name: "order_connected",
            decide: |x| Ok(x.is_order_connected()),
            notes: "connected specialization order; not intersection-stable",
        },
    ]
}

pub fn predicate(name: &str) -> Result<ClassPredicate> {
    registry()
        .into_iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownSpace(format!("class predicate `{name}`")))
}

/// How a listed target's map factors through the reflection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorCase {
    /// `f(X)` is b-dense in the target.
    Dense,
    /// `f(X)` is not b-dense; `f` is first corestricted to `cl_b(f(X))`.
    Corestricted,
}

#[derive(Debug, Clone, Serialize)]
pub struct Factorization {
    pub target_index: usize,
    pub case: FactorCase,
    /// Values of the factor `g` on the reflection's points.
    pub factor: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct ReflectionResult {
    pub source: FiniteSpace,
    pub target: FiniteSpace,
    pub unit: SpaceMap,
    pub verified_against: Vec<String>,
    pub factorizations: Vec<Factorization>,
}

/// Points: irreducible closed sets; opens `◊U = {F : F ∩ U ≠ ∅}`; unit
/// `x ↦ ↓x`.
pub fn sobrify_irr(x: &FiniteSpace) -> Result<ReflectionResult> {
    let irr = x.irreducible_closed_sets()?;
    let k = irr.len();
    let diamonds: Vec<PointSet> = x
        .opens()?
        .iter()
        .map(|u| PointSet::from_points(k, (0..k).filter(|&i| irr[i].intersects(u))))
        .collect();
    let target = FiniteSpace::from_opens(k, &diamonds)?;
    let values = x
        .points()
        .map(|p| {
            irr.iter()
                .position(|f| f == x.down(p))
                .ok_or_else(|| Error::NotRepresentable(format!("↓{p} is not an irreducible closed set")))
        })
        .collect::<Result<Vec<_>>>()?;
    let unit = SpaceMap::new(x, &target, values)?;
    Ok(ReflectionResult {
        source: x.clone(),
        target,
        unit,
        verified_against: Vec::new(),
        factorizations: Vec::new(),
    })
}

/// Embeds `X` into `(Σ2)^{O(X)}` and takes the b-closure of the image. The
/// target's topology is the trace of the cylinders `{z ⊇ y}`; the full
/// product is not built.
pub fn sobrify_bclosure(x: &FiniteSpace) -> Result<ReflectionResult> {
    let k = x.count_opens()?;
    let cap = caps().owf_opens;
    if k > cap {
        return Err(Error::cap(
            "open-set lattice for b-closure sobrification",
            k as u128,
            cap as u128,
        ));
    }
    let emb = canonical_embedding(x)?;
    let codes = emb.codes(x)?;
    let closure = cube_b_closure(emb.chi.m(), &codes)?;
    let s = closure.len();
    let cylinders: Vec<PointSet> = closure
        .iter()
        .map(|&y| PointSet::from_points(s, (0..s).filter(|&i| closure[i] & y == y)))
        .collect();
    let target = FiniteSpace::from_opens(s, &cylinders)?;
    let values = codes
        .iter()
        .map(|c| closure.binary_search(c).expect("image lies in its b-closure"))
        .collect();
    let unit = SpaceMap::new(x, &target, values)?;
    Ok(ReflectionResult {
        source: x.clone(),
        target,
        unit,
        verified_against: Vec::new(),
        factorizations: Vec::new(),
    })
}

/// A homeomorphism `h` between two reflections' targets with
/// `h ∘ unit1 = unit2`, if one exists.
pub fn connecting_homeomorphism(a: &ReflectionResult, b: &ReflectionResult) -> Result<Option<SpaceMap>> {
    if a.source != b.source {
        return Err(Error::MismatchedSpaces);
    }
    let fixed: Vec<(usize, usize)> = a.source.points().map(|p| (a.unit.apply(p), b.unit.apply(p))).collect();
    find_homeomorphism_fixing(&a.target, &b.target, &fixed)
}

#[derive(Debug, Clone, Serialize)]
pub struct KClosure {
    pub set: PointSet,
    /// Whether the subspace on `set` itself satisfies the predicate.
    pub in_class: bool,
    /// Every superset of `A` whose subspace satisfies the predicate.
    pub qualifying: Vec<PointSet>,
}

/// `cl_k(A) = ⋂{B : A ⊆ B ⊆ Z, B ∈ K}`.
pub fn k_closure(z: &FiniteSpace, a: &PointSet, k: &ClassPredicate) -> Result<KClosure> {
    if a.is_empty() {
        return Err(Error::BadParams("k-closure of the empty set".into()));
    }
    let n = z.n();
    if n > caps().carrier {
        return Err(Error::cap("k-closure carrier", n as u128, caps().carrier as u128));
    }
    let free: Vec<usize> = z.points().filter(|&p| !a.contains(p)).collect();
    let mut qualifying = Vec::new();
    for bits in 0u64..(1u64 << free.len()) {
        let mut b = a.clone();
        for (i, &p) in free.iter().enumerate() {
            if bits >> i & 1 == 1 {
                b.insert(p);
            }
        }
        if k.contains(&induced(z, &b).space)? {
            qualifying.push(b);
        }
    }
    if qualifying.is_empty() {
        return Err(Error::NoKSuperset(k.name.to_string()));
    }
    qualifying.sort();
    let mut set = z.full_set();
    for b in &qualifying {
        set.intersect_with(b);
    }
    let in_class = k.contains(&induced(z, &set).space)?;
    Ok(KClosure {
        set,
        in_class,
        qualifying,
    })
}

/// The reflection built from an explicit list of targets `(Z_i, f_i)`:
/// the b-closure of the image of `Δf_i` in `∏Z_i`, with the corestricted
/// diagonal as unit. Each listed `f_i` is factored through it by the
/// restricted projection.
pub fn construct_reflection(x: &FiniteSpace, targets: &[SpaceMap]) -> Result<ReflectionResult> {
    if targets.is_empty() {
        return Err(Error::EmptyTargets);
    }
    if targets.iter().any(|f| f.dom() != x) {
        return Err(Error::MismatchedSpaces);
    }
    let (delta, prod) = diagonal(targets)?;
    let closure = b_closure(&prod.space, &delta.image());
    let sub = induced(&prod.space, &closure);
    let unit = delta.corestrict(&sub)?;
    let mut factorizations = Vec::new();
    let mut verified_against = Vec::new();
    for (i, f) in targets.iter().enumerate() {
        let g = sub.inclusion().then(&prod.projections[i])?;
        if unit.then(&g)? != *f || !g.is_continuous() {
            return Err(Error::NotRepresentable(format!("target {i} does not factor")));
        }
        let case = if is_b_dense(f.cod(), &f.image()) {
            FactorCase::Dense
        } else {
            FactorCase::Corestricted
        };
        factorizations.push(Factorization {
            target_index: i,
            case,
            factor: g.values().to_vec(),
        });
        verified_against.push(format!("target {i} ({} points)", f.cod().n()));
    }
    Ok(ReflectionResult {
        source: x.clone(),
        target: sub.space.clone(),
        unit,
        verified_against,
        factorizations,
    })
}

/// Why a universal-property check failed: some `f` with zero or several
/// factorizations.
#[derive(Debug, Clone, Serialize)]
pub struct ReflectionWitness {
    pub target_index: usize,
    pub f: Vec<usize>,
    pub factorizations: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReflectionCheck {
    pub holds: bool,
    /// Number of `(Z, f)` pairs quantified.
    pub checked: usize,
    /// Indices of test targets skipped because they are not in `K`.
    pub skipped: Vec<usize>,
    pub witness: Option<ReflectionWitness>,
}

/// For every `Z` in `test_targets` with `K(Z)` and every continuous
/// `f : X → Z`, exactly one continuous `g : Y → Z` has `g ∘ unit = f`.
pub fn is_reflection(unit: &SpaceMap, k: &ClassPredicate, test_targets: &[FiniteSpace]) -> Result<ReflectionCheck> {
    let x = unit.dom();
    let y = unit.cod();
    let mut checked = 0;
    let mut skipped = Vec::new();
    for (ti, z) in test_targets.iter().enumerate() {
        if !k.contains(z)? {
            skipped.push(ti);
            continue;
        }
        let gs = all_continuous_maps(y, z)?;
        let composites: Vec<Vec<usize>> = gs
            .iter()
            .map(|g| x.points().map(|p| g.apply(unit.apply(p))).collect())
            .collect();
        for f in all_continuous_maps(x, z)? {
            checked += 1;
            let factors: Vec<Vec<usize>> = gs
                .iter()
                .zip(&composites)
                .filter(|(_, c)| c.as_slice() == f.values())
                .map(|(g, _)| g.values().to_vec())
                .collect();
            if factors.len() != 1 {
                return Ok(ReflectionCheck {
                    holds: false,
                    checked,
                    skipped,
                    witness: Some(ReflectionWitness {
                        target_index: ti,
                        f: f.values().to_vec(),
                        factorizations: factors,
                    }),
                });
            }
        }
    }
    Ok(ReflectionCheck {
        holds: true,
        checked,
        skipped,
        witness: None,
    })
}

/// The data behind a failed condition.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum KWitness {
    /// A sober space outside the class (K1).
    NotContained { space: FiniteSpace },
    /// A space and a relabeled copy that the predicate separates (K2).
    Relabeled {
        space: FiniteSpace,
        permutation: Vec<usize>,
    },
    /// Subspaces of a sober ambient, each in the class, whose intersection
    /// is not (K3).
    Intersection {
        ambient: FiniteSpace,
        family: Vec<PointSet>,
        intersection: PointSet,
    },
    /// A continuous map between sober spaces and a subspace of its codomain
    /// in the class whose preimage is not (K4).
    Preimage {
        domain: FiniteSpace,
        codomain: FiniteSpace,
        map: Vec<usize>,
        subset: PointSet,
        preimage: PointSet,
    },
    /// Two members whose product is not a member.
    Product {
        left: FiniteSpace,
        right: FiniteSpace,
        product_points: usize,
    },
    /// A member with a b-closed subset whose subspace is not a member.
    Subset { space: FiniteSpace, subset: PointSet },
    /// A member and two maps out of it whose equalizer is not a member.
    Equalizer {
        domain: FiniteSpace,
        codomain: FiniteSpace,
        f: Vec<usize>,
        g: Vec<usize>,
        equalizer: PointSet,
    },
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditionResult {
    pub holds: bool,
    /// Number of instances quantified before stopping.
    pub checked: usize,
    /// The scale of the check.
    pub bound: String,
    pub witness: Option<KWitness>,
}

impl ConditionResult {
    fn new(bound: String) -> Self {
        ConditionResult {
            holds: true,
            checked: 0,
            bound,
            witness: None,
        }
    }

    fn fail(&mut self, w: KWitness) {
        self.holds = false;
        self.witness = Some(w);
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosureReport {
    pub productive: ConditionResult,
    pub b_closed_hereditary: ConditionResult,
    pub equalizers: ConditionResult,
}

#[derive(Debug, Clone, Serialize)]
pub struct KConditionsReport {
    pub predicate: String,
    pub n_max: usize,
    pub k1: ConditionResult,
    pub k2: ConditionResult,
    pub k3: ConditionResult,
    pub k4: ConditionResult,
    pub closure: ClosureReport,
}

impl KConditionsReport {
    pub fn all_hold(&self) -> bool {
        [
            &self.k1,
            &self.k2,
            &self.k3,
            &self.k4,
            &self.closure.productive,
            &self.closure.b_closed_hereditary,
            &self.closure.equalizers,
        ]
        .iter()
        .all(|c| c.holds)
    }
}

/// Largest `n_max` accepted by the condition checks.
pub const MAX_CONDITION_SIZE: usize = 5;
/// K3 families have two or three members.
pub const K3_MAX_FAMILY: usize = 3;

fn check_n_max(n_max: usize) -> Result<()> {
    if n_max > MAX_CONDITION_SIZE {
        return Err(Error::cap(
            "condition-check carrier",
            n_max as u128,
            MAX_CONDITION_SIZE as u128,
        ));
    }
    Ok(())
}

/// Membership of every subspace of one ambient, indexed by bitmask.
fn subspace_membership(z: &FiniteSpace, k: &ClassPredicate) -> Result<Vec<bool>> {
    (0u64..(1u64 << z.n()))
        .map(|m| k.contains(&induced(z, &PointSet::from_mask(z.n(), m)).space))
        .collect()
}

/// Deterministic relabelings used to sample K2: every rotation and the
/// reversal.
fn sample_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut perms: Vec<Vec<usize>> = (1..n).map(|r| (0..n).map(|i| (i + r) % n).collect()).collect();
    perms.push((0..n).rev().collect());
    perms
}

pub fn check_k_conditions(k: &ClassPredicate, n_max: usize) -> Result<KConditionsReport> {
    check_n_max(n_max)?;
    let spaces = all_spaces_up_to(n_max)?;
    let mut sober = Vec::new();
    for z in &spaces {
        if property_holds(Property::Sober, z)? {
            sober.push(z.clone());
        }
    }

    let mut k1 = ConditionResult::new(format!("sober spaces with at most {n_max} points"));
    for z in &sober {
        k1.checked += 1;
        if !k.contains(z)? {
            k1.fail(KWitness::NotContained { space: z.clone() });
            break;
        }
    }

    let mut k2 = ConditionResult::new(format!(
        "rotations and reversal of each space with at most {n_max} points"
    ));
    'k2: for z in &spaces {
        let base = k.contains(z)?;
        for perm in sample_permutations(z.n()) {
            k2.checked += 1;
            if k.contains(&z.relabel(&perm))? != base {
                k2.fail(KWitness::Relabeled {
                    space: z.clone(),
                    permutation: perm,
                });
                break 'k2;
            }
        }
    }

    let mut k3 = ConditionResult::new(format!(
        "families of {K3_MAX_FAMILY} or fewer subspaces of sober spaces with at most {n_max} points"
    ));
    'k3: for z in &sober {
        let member = subspace_membership(z, k)?;
        let members: Vec<u64> = (0..member.len() as u64).filter(|&m| member[m as usize]).collect();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate().skip(i + 1) {
                k3.checked += 1;
                if !member[(a & b) as usize] {
                    k3.fail(KWitness::Intersection {
                        ambient: z.clone(),
                        family: vec![PointSet::from_mask(z.n(), a), PointSet::from_mask(z.n(), b)],
                        intersection: PointSet::from_mask(z.n(), a & b),
                    });
                    break 'k3;
                }
                for &c in members.iter().skip(j + 1) {
                    k3.checked += 1;
                    if !member[(a & b & c) as usize] {
                        k3.fail(KWitness::Intersection {
                            ambient: z.clone(),
                            family: [a, b, c].iter().map(|&m| PointSet::from_mask(z.n(), m)).collect(),
                            intersection: PointSet::from_mask(z.n(), a & b & c),
                        });
                        break 'k3;
                    }
                }
            }
        }
    }

    let mut k4 = ConditionResult::new(format!(
        "continuous maps between sober spaces with at most {n_max} points"
    ));
    let memberships: Vec<Vec<bool>> = sober.iter().map(|z| subspace_membership(z, k)).collect::<Result<_>>()?;
    'k4: for (xi, x) in sober.iter().enumerate() {
        for (zi, z) in sober.iter().enumerate() {
            let targets: Vec<u64> = (0..memberships[zi].len() as u64)
                .filter(|&m| memberships[zi][m as usize])
                .collect();
            for f in all_continuous_maps(x, z)? {
                for &t in &targets {
                    k4.checked += 1;
                    let pre = x
                        .points()
                        .filter(|&p| t >> f.apply(p) & 1 == 1)
                        .fold(0u64, |acc, p| acc | 1 << p);
                    if !memberships[xi][pre as usize] {
                        k4.fail(KWitness::Preimage {
                            domain: x.clone(),
                            codomain: z.clone(),
                            map: f.values().to_vec(),
                            subset: PointSet::from_mask(z.n(), t),
                            preimage: PointSet::from_mask(x.n(), pre),
                        });
                        break 'k4;
                    }
                }
            }
        }
    }

    Ok(KConditionsReport {
        predicate: k.name.to_string(),
        n_max,
        k1,
        k2,
        k3,
        k4,
        closure: check_closure_properties(k, n_max)?,
    })
}

/// Productivity on pairs with at most `2·n_max` product points; b-closed
/// subsets of members (in a finite space every subset is b-closed);
/// equalizers of pairs of maps from members into spaces of at most
/// `min(n_max, 3)` points, with members of at most `min(n_max, 4)` points.
pub fn check_closure_properties(k: &ClassPredicate, n_max: usize) -> Result<ClosureReport> {
    check_n_max(n_max)?;
    let spaces = all_spaces_up_to(n_max)?;
    let mut members = Vec::new();
    for x in &spaces {
        if k.contains(x)? {
            members.push(x.clone());
        }
    }

    let product_bound = 2 * n_max;
    let mut productive = ConditionResult::new(format!(
        "pairs of members with at most {n_max} points and product of at most {product_bound} points"
    ));
    'prod: for (i, a) in members.iter().enumerate() {
        for b in members.iter().skip(i) {
            if a.n() * b.n() > product_bound {
                continue;
            }
            productive.checked += 1;
            let p = product(&[a.clone(), b.clone()])?;
            if !k.contains(&p.space)? {
                productive.fail(KWitness::Product {
                    left: a.clone(),
                    right: b.clone(),
                    product_points: p.space.n(),
                });
                break 'prod;
            }
        }
    }

    let mut hereditary = ConditionResult::new(format!("subsets of members with at most {n_max} points"));
    'her: for x in &members {
        let member = subspace_membership(x, k)?;
        for (m, &ok) in member.iter().enumerate() {
            let a = PointSet::from_mask(x.n(), m as u64);
            debug_assert!(crate::b_topology::is_b_closed(x, &a));
            hereditary.checked += 1;
            if !ok {
                hereditary.fail(KWitness::Subset {
                    space: x.clone(),
                    subset: a,
                });
                break 'her;
            }
        }
    }

    let dom_bound = n_max.min(4);
    let cod_bound = n_max.min(3);
    let mut equalizers = ConditionResult::new(format!(
        "pairs of maps from members with at most {dom_bound} points into spaces with at most {cod_bound} points"
    ));
    let codomains = all_spaces_up_to(cod_bound)?;
    'eq: for x in members.iter().filter(|x| x.n() <= dom_bound) {
        let member = subspace_membership(x, k)?;
        let mut seen: HashSet<u64> = HashSet::new();
        for z in &codomains {
            let maps = all_continuous_maps(x, z)?;
            for f in &maps {
                for g in &maps {
                    equalizers.checked += 1;
                    let e = x
                        .points()
                        .filter(|&p| f.apply(p) == g.apply(p))
                        .fold(0u64, |acc, p| acc | 1 << p);
                    if !seen.insert(e) {
                        continue;
                    }
                    if !member[e as usize] {
                        equalizers.fail(KWitness::Equalizer {
                            domain: x.clone(),
                            codomain: z.clone(),
                            f: f.values().to_vec(),
                            g: g.values().to_vec(),
                            equalizer: PointSet::from_mask(x.n(), e),
                        });
                        break 'eq;
                    }
                }
            }
        }
    }

    Ok(ClosureReport {
        productive,
        b_closed_hereditary: hereditary,
        equalizers,
    })
}

/// Re-derives a K-condition witness from the raw definitions.
pub fn recheck_k_witness(k: &ClassPredicate, w: &KWitness) -> Result<bool> {
    Ok(match w {
        KWitness::NotContained { space } => property_holds(Property::Sober, space)? && !k.contains(space)?,
        KWitness::Relabeled { space, permutation } => k.contains(space)? != k.contains(&space.relabel(permutation))?,
        KWitness::Intersection {
            ambient,
            family,
            intersection,
        } => {
            let mut meet = ambient.full_set();
            for s in family {
                meet.intersect_with(s);
            }
            let mut all_in = property_holds(Property::Sober, ambient)?;
            for s in family {
                all_in &= k.contains(&induced(ambient, s).space)?;
            }
            meet == *intersection && all_in && !k.contains(&induced(ambient, &meet).space)?
        }
        KWitness::Preimage {
            domain,
            codomain,
            map,
            subset,
            preimage,
        } => {
            let f = SpaceMap::new(domain, codomain, map.clone())?;
            f.is_continuous()
                && f.preimage(subset) == *preimage
                && k.contains(&induced(codomain, subset).space)?
                && !k.contains(&induced(domain, preimage).space)?
        }
        KWitness::Product {
            left,
            right,
            product_points,
        } => {
            let p = product(&[left.clone(), right.clone()])?;
            p.space.n() == *product_points && k.contains(left)? && k.contains(right)? && !k.contains(&p.space)?
        }
        KWitness::Subset { space, subset } => {
            crate::b_topology::is_b_closed(space, subset)
                && k.contains(space)?
                && !k.contains(&induced(space, subset).space)?
        }
        KWitness::Equalizer {
            domain,
            codomain,
            f,
            g,
            equalizer,
        } => {
            let f = SpaceMap::new(domain, codomain, f.clone())?;
            let g = SpaceMap::new(domain, codomain, g.clone())?;
            f.is_continuous()
                && g.is_continuous()
                && crate::constructions::equalizer(&f, &g)? == *equalizer
                && k.contains(domain)?
                && !k.contains(&induced(domain, equalizer).space)?
        }
    })
}

/// The inclusion `A → cl_k(A)` as a map of subspaces of `Z`.
pub fn k_closure_inclusion(z: &FiniteSpace, a: &PointSet, closure: &PointSet) -> Result<SpaceMap> {
    if !a.is_subset(closure) {
        return Err(Error::BadParams("set is not inside its closure".into()));
    }
    let sa: Subspace = induced(z, a);
    let sc: Subspace = induced(z, closure);
    sa.inclusion().corestrict(&sc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::find_homeomorphism;

    fn v_poset() -> FiniteSpace {
        FiniteSpace::from_generating_pairs(3, &[(0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn sobrify_irr_examples() {
        let s = FiniteSpace::sigma2();
        let r = sobrify_irr(&s).unwrap();
        assert!(r.unit.is_homeomorphism());
        let v = v_poset();
        let r = sobrify_irr(&v).unwrap();
        assert_eq!(r.target.n(), 3);
        assert!(find_homeomorphism(&r.target, &v).unwrap().is_some());
    }

    #[test]
    fn sobrify_bclosure_examples() {
        for x in [FiniteSpace::sigma2(), FiniteSpace::discrete(2), FiniteSpace::chain(3)] {
            let a = sobrify_irr(&x).unwrap();
            let b = sobrify_bclosure(&x).unwrap();
            assert!(b.unit.is_homeomorphism());
            let h = connecting_homeomorphism(&a, &b).unwrap().unwrap();
            for p in x.points() {
                assert_eq!(h.apply(a.unit.apply(p)), b.unit.apply(p));
            }
        }
    }

    #[test]
    fn k_closure_examples() {
        let c = FiniteSpace::chain(3);
        let sober = predicate("sober").unwrap();
        let r = k_closure(&c, &c.set([0, 2]), &sober).unwrap();
        assert_eq!(r.set, c.set([0, 2]));
        assert!(r.in_class);
        let all = predicate("all").unwrap();
        assert_eq!(k_closure(&c, &c.set([1]), &all).unwrap().set, c.set([1]));
        let even = predicate("even_cardinality").unwrap();
        let r = k_closure(&c, &c.set([1]), &even).unwrap();
        assert_eq!(r.qualifying, vec![c.set([0, 1]), c.set([1, 2])]);
        assert_eq!(r.set, c.set([1]));
        assert!(!r.in_class);
    }

    #[test]
    fn construct_reflection_examples() {
        let s = FiniteSpace::sigma2();
        let r = construct_reflection(&s, &[SpaceMap::identity(&s)]).unwrap();
        assert!(r.unit.is_homeomorphism());
        assert_eq!(r.factorizations[0].case, FactorCase::Dense);

        let a = FiniteSpace::discrete(2);
        let chi_a = SpaceMap::new(&a, &s, vec![1, 0]).unwrap();
        let chi_b = SpaceMap::new(&a, &s, vec![0, 1]).unwrap();
        let r = construct_reflection(&a, &[chi_a, chi_b]).unwrap();
        assert!(find_homeomorphism(&r.target, &a).unwrap().is_some());
        assert!(r.factorizations.iter().all(|f| f.case == FactorCase::Dense));

        let c = FiniteSpace::chain(3);
        let to_sigma = all_continuous_maps(&c, &s).unwrap();
        let r = construct_reflection(&c, &to_sigma).unwrap();
        assert!(find_homeomorphism(&r.target, &c).unwrap().is_some());
        assert!(r.factorizations.iter().any(|f| f.case == FactorCase::Corestricted));
        assert_eq!(construct_reflection(&c, &[]).unwrap_err(), Error::EmptyTargets);
    }

    #[test]
    fn is_reflection_examples() {
        let sober = predicate("sober").unwrap();
        let s = FiniteSpace::sigma2();
        let targets = all_spaces_up_to(3).unwrap();
        assert!(is_reflection(&SpaceMap::identity(&s), &sober, &targets).unwrap().holds);
        let v = v_poset();
        let r = sobrify_irr(&v).unwrap();
        assert!(is_reflection(&r.unit, &sober, &targets).unwrap().holds);
        let c = FiniteSpace::chain(3);
        let constant = SpaceMap::constant(&c, &s, 1).unwrap();
        let check = is_reflection(&constant, &sober, std::slice::from_ref(&s)).unwrap();
        assert!(!check.holds);
        let w = check.witness.unwrap();
        assert!(w.factorizations.len() != 1);
    }

    #[test]
    fn k_conditions_on_all_spaces() {
        let all = predicate("all").unwrap();
        let r = check_k_conditions(&all, 3).unwrap();
        assert!(r.all_hold(), "{r:?}");
    }

    #[test]
    fn k_conditions_negative_controls() {
        let small = predicate("at_most_2_points").unwrap();
        let r = check_k_conditions(&small, 3).unwrap();
        assert!(!r.closure.productive.holds);
        let w = r.closure.productive.witness.clone().unwrap();
        assert!(recheck_k_witness(&small, &w).unwrap());

        let conn = predicate("order_connected").unwrap();
        let r = check_k_conditions(&conn, 4).unwrap();
        assert!(!r.k3.holds);
        assert!(recheck_k_witness(&conn, r.k3.witness.as_ref().unwrap()).unwrap());
    }
}

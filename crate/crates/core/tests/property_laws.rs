use t0kit::enumerate::all_spaces;
use t0kit::properties::{
    check_all, is_co_sober, is_sober, is_t1, recheck_witness, way_below_matrix_literal, way_below_opens, Method,
    Property,
};
use t0kit::{FiniteSpace, PointSet};

fn spaces_up_to(n: usize) -> Vec<FiniteSpace> {
    (1..=n).flat_map(|k| all_spaces(k).unwrap()).collect()
}

fn holds(x: &FiniteSpace, p: Property) -> bool {
    p.check(x).unwrap().holds
}

fn subsets(n: usize) -> Vec<PointSet> {
    (0u64..(1 << n)).map(|m| PointSet::from_mask(n, m)).collect()
}

#[test]
fn implication_lattice_and_finite_collapse() {
    for x in spaces_up_to(5) {
        let reports = check_all(&x).unwrap();
        for r in &reports {
            if !r.holds {
                assert!(r.witness.is_some());
                assert!(recheck_witness(&x, r).unwrap(), "{r:?}");
            }
        }
        assert!(!holds(&x, Property::Sober) || holds(&x, Property::KBoundedSober));
        assert!(!holds(&x, Property::T1) || holds(&x, Property::StrongD));
        for p in [
            Property::Sober,
            Property::CoSober,
            Property::StrongD,
            Property::KBoundedSober,
            Property::OpenWellFiltered,
            Property::T0,
        ] {
            assert!(holds(&x, p), "{p} on {x:?}");
        }
        assert_eq!(holds(&x, Property::T1), x.covers().is_empty());
    }
}

/// Irreducible closed sets straight from the definition.
fn oracle_sober(x: &FiniteSpace) -> bool {
    let closed: Vec<PointSet> = subsets(x.n()).into_iter().filter(|a| x.is_closed(a)).collect();
    closed.iter().filter(|f| !f.is_empty()).all(|f| {
        let proper: Vec<&PointSet> = closed.iter().filter(|c| c.is_subset(f) && *c != f).collect();
        let reducible = proper.iter().any(|a| proper.iter().any(|b| a.union(b) == *f));
        reducible || x.points().filter(|&p| x.down(p) == f).count() == 1
    })
}

/// Compact saturated sets of a finite space are its upper sets.
fn oracle_co_sober(x: &FiniteSpace) -> bool {
    let upper: Vec<PointSet> = subsets(x.n()).into_iter().filter(|a| x.saturate(a) == *a).collect();
    upper.iter().filter(|q| !q.is_empty()).all(|q| {
        let proper: Vec<&PointSet> = upper.iter().filter(|c| c.is_subset(q) && *c != q).collect();
        let reducible = proper.iter().any(|a| proper.iter().any(|b| a.union(b) == *q));
        reducible || x.points().filter(|&p| x.up(p) == q).count() == 1
    })
}

#[test]
fn checkers_match_definitions() {
    for x in spaces_up_to(4) {
        assert_eq!(is_sober(&x).unwrap().holds, oracle_sober(&x));
        assert_eq!(is_co_sober(&x).unwrap().holds, oracle_co_sober(&x));
    }
}

#[test]
fn way_below_is_inclusion() {
    for x in spaces_up_to(4) {
        let opens = x.opens().unwrap().to_vec();
        let literal = (opens.len() <= 12).then(|| way_below_matrix_literal(&x).unwrap());
        for (i, u) in opens.iter().enumerate() {
            for (j, v) in opens.iter().enumerate() {
                let wb = way_below_opens(&x, u, v).unwrap();
                assert_eq!(wb, u.is_subset(v));
                if let Some(m) = &literal {
                    assert_eq!(m[i][j], wb);
                }
            }
        }
    }
}

#[test]
fn way_below_rejects_non_opens() {
    let x = FiniteSpace::sigma2();
    let not_open = x.set([0]);
    assert!(way_below_opens(&x, &not_open, &x.full_set()).is_err());
}

#[test]
fn methods_switch_at_the_caps() {
    let small = FiniteSpace::chain(3);
    assert_eq!(
        Property::OpenWellFiltered.check(&small).unwrap().method,
        Method::Literal
    );
    let big = FiniteSpace::discrete(4);
    let r = Property::OpenWellFiltered.check(&big).unwrap();
    assert!(r.holds);
    assert_eq!(r.method, Method::Reduced);
}

#[test]
fn t1_failures_recheck() {
    let x = FiniteSpace::chain(3);
    let r = is_t1(&x);
    assert!(!r.holds);
    assert!(recheck_witness(&x, &r).unwrap());
}

mod common;

use t0kit::enumerate::all_spaces;
use t0kit::{FiniteSpace, PointSet};

fn spaces_up_to(n: usize) -> Vec<FiniteSpace> {
    (0..=n).flat_map(|k| all_spaces(k).unwrap()).collect()
}

fn subsets(x: &FiniteSpace) -> Vec<PointSet> {
    (0u64..(1 << x.n())).map(|m| PointSet::from_mask(x.n(), m)).collect()
}

#[test]
fn irreducible_closed_sets_are_point_closures() {
    for x in spaces_up_to(5) {
        for f in x.irreducible_closed_sets().unwrap() {
            let generic: Vec<usize> = x.points().filter(|&p| *x.down(p) == f).collect();
            assert_eq!(generic.len(), 1, "{x:?} {f}");
        }
        assert_eq!(x.irreducible_closed_sets().unwrap().len(), x.n());
    }
}

#[test]
fn saturation_two_ways() {
    for x in spaces_up_to(5) {
        let opens = x.opens().unwrap();
        for a in subsets(&x) {
            let mut literal = x.full_set();
            for u in opens.iter().filter(|u| a.is_subset(u)) {
                literal.intersect_with(u);
            }
            assert_eq!(x.saturate(&a), literal);
        }
    }
}

#[test]
fn order_round_trip() {
    for x in spaces_up_to(5) {
        let back = FiniteSpace::from_order(&x.order_matrix()).unwrap();
        assert_eq!(back, x);
        let via_opens = FiniteSpace::from_opens_strict(x.n(), x.opens().unwrap()).unwrap();
        assert_eq!(via_opens, x);
    }
}

#[test]
fn closure_is_kuratowski() {
    for x in spaces_up_to(4) {
        let all = subsets(&x);
        assert!(x.closure(&x.empty_set()).is_empty());
        for a in &all {
            let c = x.closure(a);
            assert!(a.is_subset(&c));
            assert_eq!(x.closure(&c), c);
            assert!(x.is_closed(&c));
            for b in &all {
                if a.is_subset(b) {
                    assert!(c.is_subset(&x.closure(b)));
                }
                assert_eq!(x.closure(&a.union(b)), c.union(&x.closure(b)));
            }
        }
    }
}

#[test]
fn closure_matches_open_complements() {
    for x in spaces_up_to(4) {
        let opens = x.opens().unwrap();
        for a in subsets(&x) {
            // x ∈ cl(A) iff every open around x meets A
            let literal = x.set(
                x.points()
                    .filter(|&p| opens.iter().all(|u| !u.contains(p) || u.intersects(&a))),
            );
            assert_eq!(x.closure(&a), literal);
        }
    }
}

#[test]
fn specialization_from_closures() {
    for x in spaces_up_to(5) {
        for a in x.points() {
            for b in x.points() {
                let in_closure = x.closure(&PointSet::singleton(x.n(), b)).contains(a);
                assert_eq!(x.leq(a, b), in_closure);
            }
        }
    }
}

#[test]
fn t0_is_enforced() {
    let n = 2;
    let indiscrete = [PointSet::empty(n), PointSet::full(n)];
    assert!(FiniteSpace::from_opens(n, &indiscrete).is_err());
}

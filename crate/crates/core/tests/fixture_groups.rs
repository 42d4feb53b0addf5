//! Operation-level checks on the two named example groups.

use twoclosed::fixtures::{example1, example2};
use twoclosed::*;

#[test]
fn example1_enumeration_and_orbits() {
    assert_eq!(example1(3).unwrap().order().unwrap(), 9);
    let g = example1(2).unwrap();
    assert_eq!(g.orbits().classes(), &[vec![0, 1], vec![2, 3], vec![4, 5]]);
    assert!(!g.is_transitive());
    assert!(g.cyclic_constituents().unwrap());
}

#[test]
fn example1_kernels_and_constituents() {
    for p in [2, 3, 5] {
        let g = example1(p).unwrap();
        for orbit in g.orbits().classes() {
            let k = g.pointwise_stabilizer(orbit).unwrap();
            assert_eq!(k.order().unwrap(), p);
            let r = g.restriction(orbit).unwrap();
            assert_eq!(r.order().unwrap(), p);
            assert!(r.is_transitive());
        }
    }
}

#[test]
fn example1_zel_is_not_inside() {
    let g = example1(3).unwrap();
    let z = zel(&g).unwrap();
    assert_eq!(z.order().unwrap(), 27);
    assert_eq!(z.orbits(), g.orbits());
    assert!(!z.is_subgroup_of(&g).unwrap());
    assert!(!zel_condition(&g).unwrap());
    // each class of orb(Z) is G-invariant, so G acts trivially on them
    let q = g.induced_on_orbits(&z).unwrap();
    assert_eq!(q.degree(), 3);
    assert!(q.is_trivial());
}

#[test]
fn example1_zel_preserves_two_orbits() {
    let g = example1(2).unwrap();
    let c = TwoOrbitColoring::of_group(&g);
    for z in zel(&g).unwrap().generators() {
        assert!(c.preserves(z).unwrap());
    }
    let closure = two_closure(&g, OracleLimits::default()).unwrap();
    assert_eq!(closure.order().unwrap(), 8);
    assert!(c
        .same_partition(&TwoOrbitColoring::of_group(&closure))
        .unwrap());
}

#[test]
fn example1_has_no_unessential_witness() {
    let g = example1(2).unwrap();
    for orbit in g.orbits().classes() {
        assert_eq!(has_unessential_witness(&g, orbit).unwrap(), None);
    }
}

#[test]
fn example2_structure() {
    let h = example2(2).unwrap();
    assert!(h.is_abelian());
    assert_eq!(h.p_group_prime().unwrap(), Some(2));
    assert!(zel(&h).unwrap().is_trivial());
    assert!(zel_condition(&h).unwrap());
    assert_eq!(
        has_unessential_witness(&h, &[0, 1]).unwrap(),
        Some(vec![6, 7])
    );
}

#[test]
fn example2_minus_second_copy_is_example1() {
    let mut h = example2(2).unwrap();
    while h.degree() > 6 {
        let last = h.orbits().classes().last().unwrap().clone();
        h = remove_orbit(&h, &last).unwrap();
    }
    assert!(h.same_elements(&example1(2).unwrap()).unwrap());
}

#[test]
fn decide_examples() {
    let (v, t) = decide_2_closed(&example1(3).unwrap()).unwrap();
    assert!(!v);
    assert_eq!(t.steps.last().unwrap().kind, StepKind::ZelNotInside);

    let (v, t) = decide_2_closed(&example2(2).unwrap()).unwrap();
    assert!(!v);
    assert_eq!(
        t.step_names(),
        vec!["Validate", "OrbitRemoval", "ZelNotInside"]
    );
    assert_eq!(t.steps[2].degree, 10);
}

#[test]
fn oracle_reports() {
    let r = decide_with_oracle_check(&example1(2).unwrap(), OracleLimits::default()).unwrap();
    assert!(!r.decided && !r.oracle && !r.mismatch());
    let c6 = PermGroup::new(
        6,
        vec![Permutation::from_cycles(6, &[(0..6).collect()]).unwrap()],
    )
    .unwrap();
    let r = decide_with_oracle_check(&c6, OracleLimits::default()).unwrap();
    assert!(r.decided && r.oracle && !r.mismatch());
}

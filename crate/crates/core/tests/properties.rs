use std::collections::{BTreeSet, HashSet, VecDeque};

use proptest::prelude::*;
use twoclosed::fixtures::{random_abelian, random_abelian_cyclic, random_transitive_abelian};
use twoclosed::*;

fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn group_strategy(max_degree: usize) -> impl Strategy<Value = PermGroup> {
    (1..=max_degree).prop_flat_map(|n| {
        prop::collection::vec(perm_strategy(n), 0..3)
            .prop_map(move |gens| PermGroup::new(n, gens).unwrap())
    })
}

/// Independent orbit computation: BFS over the generator graphs.
fn bfs_orbits(g: &PermGroup) -> Vec<Vec<usize>> {
    let n = g.degree();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut class = vec![s];
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(x) = q.pop_front() {
            for gen in g.generators() {
                for y in [gen.apply(x), gen.inverse().apply(x)] {
                    if !seen[y] {
                        seen[y] = true;
                        class.push(y);
                        q.push_back(y);
                    }
                }
            }
        }
        class.sort_unstable();
        out.push(class);
    }
    out
}

/// Independent count of orbits on ordered pairs, by BFS over all elements.
fn pair_orbit_count(g: &PermGroup) -> usize {
    let n = g.degree();
    let elems = g.elements().unwrap();
    let mut seen = vec![false; n * n];
    let mut count = 0;
    for a in 0..n {
        for b in 0..n {
            if seen[a * n + b] {
                continue;
            }
            count += 1;
            for e in elems {
                seen[e.apply(a) * n + e.apply(b)] = true;
            }
        }
    }
    count
}

fn seeded_instances() -> impl Strategy<Value = PermGroup> {
    prop_oneof![
        (any::<u64>(), 1usize..=10).prop_map(|(s, d)| random_abelian_cyclic(s, d)),
        (any::<u64>(), 1usize..=10).prop_map(|(s, d)| random_abelian(s, d)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_is_a_group(g in group_strategy(6)) {
        let elems = g.elements().unwrap();
        let set: HashSet<&Permutation> = elems.iter().collect();
        prop_assert!(set.contains(&Permutation::identity(g.degree())));
        for a in elems {
            prop_assert!(set.contains(&a.inverse()));
            for b in elems {
                prop_assert!(set.contains(&a.compose(b).unwrap()));
            }
        }
        // Lagrange against n!
        let fact: usize = (1..=g.degree()).product();
        prop_assert_eq!(fact % elems.len(), 0);
    }

    #[test]
    fn orbits_match_generator_graph_components(g in group_strategy(8)) {
        let orbits = g.orbits();
        prop_assert_eq!(orbits.classes().to_vec(), bfs_orbits(&g));
        for class in orbits.classes() {
            for gen in g.generators() {
                let img: BTreeSet<usize> = class.iter().map(|&x| gen.apply(x)).collect();
                prop_assert_eq!(img, class.iter().copied().collect::<BTreeSet<_>>());
            }
        }
    }

    #[test]
    fn kernel_constituents_divide_constituents(g in seeded_instances()) {
        let orbits = g.orbits();
        for d in orbits.classes() {
            let full = g.restriction(d).unwrap().order().unwrap();
            for other in orbits.classes() {
                let k = g.pointwise_stabilizer(other).unwrap().restriction(d).unwrap();
                prop_assert_eq!(full % k.order().unwrap(), 0);
            }
        }
    }

    #[test]
    fn induced_on_trivial_is_isomorphic(g in group_strategy(7)) {
        let q = g.induced_on_orbits(&PermGroup::trivial(g.degree())).unwrap();
        prop_assert_eq!(q.order().unwrap(), g.order().unwrap());
        let mut a = q.orbits().sizes();
        let mut b = g.orbits().sizes();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn quasiregular_orders_divide_orbit_products(g in seeded_instances()) {
        let prod: usize = g.orbits().sizes().iter().product();
        prop_assert_eq!(prod % g.order().unwrap(), 0);
    }

    #[test]
    fn coloring_is_preserved_and_well_formed(g in group_strategy(7)) {
        let c = TwoOrbitColoring::of_group(&g);
        for e in g.elements().unwrap() {
            prop_assert!(c.preserves(e).unwrap());
        }
        prop_assert_eq!(c.num_colors(), pair_orbit_count(&g));
        for (s, cells) in c.classes().iter().enumerate() {
            // diagonal is a union of classes
            let diag = cells.iter().filter(|(a, b)| a == b).count();
            prop_assert!(diag == 0 || diag == cells.len(), "class {} mixes diagonal", s);
            // transpose of a class is a class
            let t = c.color(cells[0].1, cells[0].0);
            for &(a, b) in cells {
                prop_assert_eq!(c.color(b, a), t);
            }
        }
    }

    #[test]
    fn coloring_text_round_trip(g in group_strategy(6)) {
        let c = TwoOrbitColoring::of_group(&g);
        let back: TwoOrbitColoring = c.to_string().parse().unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn group_file_round_trip(g in group_strategy(9)) {
        let text = serialize_group(&g);
        let back = parse_group(&text).unwrap();
        prop_assert_eq!(back.generators(), g.generators());
        prop_assert_eq!(serialize_group(&back), text);
    }

    #[test]
    fn sylow_parts_commute_and_multiply(g in seeded_instances()) {
        let d = sylow_decomposition(&g).unwrap();
        let total: usize = d.parts.iter().map(|(_, p)| p.order().unwrap()).product();
        prop_assert_eq!(total, g.order().unwrap());
        let mut product = PermGroup::trivial(g.degree());
        for (p, part) in &d.parts {
            prop_assert_eq!(part.p_group_prime().unwrap(), Some(*p));
            prop_assert!(part.is_subgroup_of(&g).unwrap());
            for (_, other) in &d.parts {
                for a in part.generators() {
                    for b in other.generators() {
                        prop_assert!(a.commutes_with(b));
                    }
                }
            }
            product = product.join(part).unwrap();
        }
        prop_assert!(product.same_elements(&g).unwrap());
    }

    #[test]
    fn sylow_parts_keep_cyclic_constituents(seed in any::<u64>()) {
        let g = random_abelian_cyclic(seed, 12);
        for (_, part) in sylow_decomposition(&g).unwrap().parts {
            prop_assert!(part.cyclic_constituents().unwrap());
        }
    }

    #[test]
    fn zel_factor_matches_direct_intersection(g in seeded_instances()) {
        prop_assume!(!g.is_transitive());
        let z = zel(&g).unwrap();
        let orbits = g.orbits();
        for (i, d) in orbits.classes().iter().enumerate() {
            // direct: restrictions of the enumerated kernel elements, intersected
            let mut acc: Option<BTreeSet<Vec<usize>>> = None;
            for (j, other) in orbits.classes().iter().enumerate() {
                if i == j { continue; }
                let set: BTreeSet<Vec<usize>> = g.elements().unwrap().iter()
                    .filter(|e| other.iter().all(|&x| e.apply(x) == x))
                    .map(|e| d.iter().map(|&x| d.binary_search(&e.apply(x)).unwrap()).collect())
                    .collect();
                acc = Some(match acc { None => set, Some(a) => a.intersection(&set).cloned().collect() });
            }
            let zd: BTreeSet<Vec<usize>> = z.restriction(d).unwrap().elements().unwrap()
                .iter().map(|e| e.images().to_vec()).collect();
            prop_assert_eq!(zd, acc.unwrap());
            // zel acts as a direct product: its kernel on the complement restricts onto the factor
            let rest: Vec<usize> = (0..g.degree()).filter(|x| d.binary_search(x).is_err()).collect();
            let k = z.pointwise_stabilizer(&rest).unwrap().restriction(d).unwrap();
            prop_assert_eq!(k.order().unwrap(), z.restriction(d).unwrap().order().unwrap());
        }
    }

    #[test]
    fn decider_trace_shape(seed in any::<u64>()) {
        let g = random_abelian_cyclic(seed, 12);
        let (verdict, trace) = decide_2_closed(&g).unwrap();
        prop_assert_eq!(trace.verdict, verdict);
        prop_assert_eq!(trace.steps[0].kind.clone(), StepKind::Validate);
        let mut chain = 0;
        for w in trace.steps.windows(2) {
            match &w[0].kind {
                StepKind::ZelReduce { .. } | StepKind::OrbitRemoval { .. } => {
                    prop_assert!(w[1].degree < w[0].degree);
                    chain += 1;
                    prop_assert!(chain <= g.degree());
                }
                StepKind::SylowPart { .. } => chain = 0,
                StepKind::ZelNotInside => prop_assert!(false, "ZelNotInside must be last"),
                _ => {}
            }
        }
        if trace.steps.last().unwrap().kind == StepKind::ZelNotInside {
            prop_assert!(!verdict);
        }
        // every intermediate group kept cyclic constituents (checked in debug) and
        // the last step is a base case or the zel obstruction
        let last = trace.steps.last().unwrap().kind.name();
        prop_assert!(["TrivialBase", "TransitiveBase", "ZelNotInside"].contains(&last));
    }

    #[test]
    fn verdict_is_relabeling_invariant(seed in any::<u64>(), shuffle in Just((0..12usize).collect::<Vec<_>>()).prop_shuffle()) {
        let g = random_abelian_cyclic(seed, 12);
        let n = g.degree();
        let sigma: Vec<usize> = shuffle.into_iter().filter(|&x| x < n).collect();
        let sigma = Permutation::from_images(sigma).unwrap();
        let h = g.relabel(&sigma).unwrap();
        prop_assert_eq!(decide_2_closed(&g).unwrap().0, decide_2_closed(&h).unwrap().0);
    }

    #[test]
    fn closure_is_quasiregular_for_abelian(g in seeded_instances()) {
        let c = two_closure(&g, OracleLimits::default()).unwrap();
        prop_assert!(c.is_abelian());
        prop_assert!(c.is_quasiregular().unwrap());
        prop_assert!(g.is_subgroup_of(&c).unwrap());
    }

    #[test]
    fn zel_lies_in_closure(g in seeded_instances()) {
        prop_assume!(!g.is_transitive());
        let c = two_closure(&g, OracleLimits::default()).unwrap();
        prop_assert!(zel(&g).unwrap().is_subgroup_of(&c).unwrap());
    }
}

#[test]
fn transitive_abelian_parts_have_equal_orbits() {
    for seed in 0..30 {
        let g = random_transitive_abelian(seed, 12);
        let n = g.degree();
        for (p, part) in sylow_decomposition(&g).unwrap().parts {
            let np = twoclosed::arith::p_part(n, p);
            assert!(part.orbits().sizes().iter().all(|&s| s == np));
        }
    }
}

mod common;

use proptest::prelude::*;

use lociso::enumeration::connected_classes;
use lociso::reduction::{lift_cycle, parts_of, project_cycle};
use lociso::{
    are_isomorphic, cycle_spectrum, doubly_shuttered, extendability_report, gadget_transform, hamiltonian_cycle,
    is_locally_isometric, named, recognize_exception, singly_shuttered, ExceptionClass, Graph, Variant,
};

#[test]
fn full_extendability_forces_pancyclicity() {
    for n in 3..=7 {
        for c in connected_classes(n).unwrap() {
            let ext = extendability_report(&c.graph).unwrap();
            if ext.fully_cycle_extendable && !ext.acyclic {
                let sp = cycle_spectrum(&c.graph);
                assert!(sp.pancyclic, "{:?}", c.graph);
                assert!(hamiltonian_cycle(&c.graph).is_some());
            }
        }
    }
}

#[test]
fn shuttered_families_are_recognized() {
    for n in 6..=12 {
        let s = singly_shuttered(n).unwrap();
        assert!(is_locally_isometric(&s) && s.max_degree() == 5);
        assert_eq!(recognize_exception(&s).unwrap(), ExceptionClass::SinglyShuttered(n));
        if let Ok(d) = doubly_shuttered(n) {
            assert!(is_locally_isometric(&d) && d.max_degree() == 5);
            assert_eq!(recognize_exception(&d).unwrap(), ExceptionClass::DoublyShuttered(n));
            assert!(!are_isomorphic(&s, &d).unwrap());
        }
    }
}

#[test]
fn enumerated_classes_are_distinct_by_brute_force() {
    let reps = connected_classes(5).unwrap();
    for (i, a) in reps.iter().enumerate() {
        for b in &reps[i + 1..] {
            assert!(!common::isomorphic_by_permutation(&a.graph, &b.graph));
        }
    }
}

#[test]
fn cube_reduction_round_trips_a_cycle() {
    let q3 = named("cube_q3").unwrap();
    let parts = parts_of(&q3).unwrap();
    let source = hamiltonian_cycle(&q3).unwrap();
    for variant in Variant::ALL {
        let inst = gadget_transform(&q3, parts, variant).unwrap();
        let lifted = lift_cycle(&source, &inst).unwrap();
        assert_eq!(lifted.len(), 24);
        assert!(lifted.lies_in(&inst.graph));
        let back = project_cycle(&lifted, &inst).unwrap();
        assert!(back.lies_in(&q3) && back.len() == 8);
    }
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn properties_survive_relabeling(g in graph_strategy(9), seed in any::<u64>()) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(cycle_spectrum(&g), cycle_spectrum(&h));
        prop_assert_eq!(is_locally_isometric(&g), is_locally_isometric(&h));
        let (a, b) = (extendability_report(&g).unwrap(), extendability_report(&h).unwrap());
        prop_assert_eq!(a.fully_cycle_extendable, b.fully_cycle_extendable);
        prop_assert_eq!(a.cycle_extendable, b.cycle_extendable);
        prop_assert!(are_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn spectrum_matches_subset_oracle(g in graph_strategy(7)) {
        prop_assert_eq!(cycle_spectrum(&g).achieved_lengths, common::cycle_lengths_by_subsets(&g));
    }
}

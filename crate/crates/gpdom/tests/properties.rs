//! Property tests for the graph model and block calculus.

use gpdom::analysis::{block, gammas, DomSet};
use gpdom::bitset::SlotSet;
use gpdom::graph::{petersen2, FaultSpec, GPGraph, Vertex};
use proptest::prelude::*;

fn arb_n() -> impl Strategy<Value = usize> {
    3usize..40
}

proptest! {
    #[test]
    fn adjacency_is_symmetric_with_degree_at_most_three(n in arb_n(), k in 1usize..6, f in proptest::option::of(0usize..40)) {
        let fault = match f {
            Some(f) if f < n => FaultSpec::outer(f),
            _ => FaultSpec::none(),
        };
        let g = GPGraph::build(n, k, fault, &[]).unwrap();
        for (a, b) in g.edges() {
            prop_assert!(g.has_edge(b, a));
        }
        for slot in g.live().iter() {
            let v = Vertex::from_slot(slot, n);
            prop_assert!(g.degree(v) <= 3);
        }
        // Fault-free P(n,2) with n >= 5 is 3-regular.
        if fault.faulted.is_none() && k == 2 && n >= 5 {
            for slot in g.live().iter() {
                prop_assert_eq!(g.degree(Vertex::from_slot(slot, n)), 3);
            }
        }
    }

    #[test]
    fn rotation_is_an_automorphism(n in arb_n(), k in 1usize..6, d in -50i64..50) {
        let g = GPGraph::new(n, k).unwrap();
        for (a, b) in g.edges() {
            prop_assert!(
                g.has_edge(a.rotate(d, n), b.rotate(d, n)),
                "edge {a}-{b} image missing under rotate({d})"
            );
        }
    }

    #[test]
    fn reflection_is_an_automorphism(n in arb_n(), center in 0i64..40) {
        let g = GPGraph::new(n, 2).unwrap();
        for (a, b) in g.edges() {
            prop_assert!(g.has_edge(a.reflect(center, n), b.reflect(center, n)));
        }
    }

    #[test]
    fn block_sum_counts_every_member_five_times(n in 5usize..40, picks in proptest::collection::vec(0usize..80, 0..12)) {
        let mut bits = SlotSet::new(2 * n);
        for p in picks {
            bits.insert(p % (2 * n));
        }
        let s = DomSet::from_bits(n, bits);
        let gam = gammas(&s, n);
        prop_assert_eq!(gam.iter().sum::<usize>(), 5 * s.size());
        prop_assert!(gam.iter().all(|&x| x <= 10));
    }

    #[test]
    fn blocks_partition_into_center_and_triples(i in 0usize..40, n in 5usize..40) {
        let i = i % n;
        let b = block(i, n);
        let mut rebuilt: Vec<Vertex> = b.left.into_iter()
            .chain(b.middle)
            .chain(b.right)
            .chain([Vertex::outer(i)])
            .collect();
        rebuilt.sort();
        rebuilt.dedup();
        prop_assert_eq!(rebuilt.len(), 10);
        prop_assert_eq!(rebuilt.into_iter().collect::<std::collections::BTreeSet<_>>(), b.vertices);
    }

    #[test]
    fn faulted_graphs_are_rotation_isomorphic(n in 5usize..30, f in 0usize..30) {
        let f = f % n;
        let g = petersen2(n, FaultSpec::outer(f)).unwrap();
        let base = petersen2(n, FaultSpec::outer(0)).unwrap();
        prop_assert_eq!(g.rotated(-(f as i64)).unwrap(), base);
    }
}

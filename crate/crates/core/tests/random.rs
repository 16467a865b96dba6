//! Randomized invariants over permutations and diagrams.

use proptest::prelude::*;

use quasidiagram::diagram::QuasiDiagram;
use quasidiagram::moves::{self, ExpansionTrace};
use quasidiagram::perm::Permutation;

fn shuffled(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn arb_permutation(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree).prop_flat_map(shuffled)
}

/// Equal-degree triples, for laws that mix several permutations.
fn arb_triple(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max_degree).prop_flat_map(|n| (shuffled(n), shuffled(n), shuffled(n)))
}

fn arb_diagram(max_degree: usize) -> impl Strategy<Value = QuasiDiagram> {
    (1..=max_degree).prop_flat_map(|n| {
        (shuffled(n), 0..=n / 2).prop_map(move |(points, pairs)| {
            let mut images: Vec<usize> = (1..=n).collect();
            for chunk in points.one_line().chunks_exact(2).take(pairs) {
                images[chunk[0] - 1] = chunk[1];
                images[chunk[1] - 1] = chunk[0];
            }
            QuasiDiagram::new(Permutation::from_images(images).unwrap()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn compose_is_associative((p, q, r) in arb_triple(9)) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(p in arb_permutation(12)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn conjugation_distributes_over_products((g, p, q) in arb_triple(8)) {
        let left = p.compose(&q).unwrap().conjugate_by(&g).unwrap();
        let right = p
            .conjugate_by(&g)
            .unwrap()
            .compose(&q.conjugate_by(&g).unwrap())
            .unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn cycle_decomposition_round_trips(p in arb_permutation(12)) {
        prop_assert_eq!(p.cycle_decomposition().to_permutation().unwrap(), p);
    }

    #[test]
    fn format_parse_round_trips(p in arb_permutation(12)) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse(&text, p.degree()).unwrap(), p);
    }

    #[test]
    fn diagram_wire_round_trips(q in arb_diagram(12)) {
        let json = serde_json::to_string(&q).unwrap();
        let back: QuasiDiagram = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn expansion_contraction_inverse(q in arb_diagram(10), raw in 1usize..=11) {
        let i = 1 + (raw - 1) % (q.degree() + 1);
        let up = moves::expand(&q, i).unwrap();
        prop_assert_eq!(moves::contract(&up, i).unwrap(), q);
    }

    #[test]
    fn decompose_replays(q in arb_diagram(10)) {
        let trace = moves::decompose(&q).unwrap();
        prop_assert!(trace.base.is_chord_diagram());
        prop_assert_eq!(trace.replay().unwrap(), q);
    }

    #[test]
    fn trace_json_round_trips(q in arb_diagram(9)) {
        let trace = moves::decompose(&q).unwrap();
        let json = serde_json::to_string(&trace).unwrap();
        let back: ExpansionTrace = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, trace);
    }
}

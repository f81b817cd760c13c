//! Property tests for the verifier semantics and the text formats.

use circolor::coloring::{check_defective, check_relaxed, circ_dist, Coloring};
use circolor::families::random_outerplanar;
use circolor::graph::{validate_outer_embedding, Graph, OuterEmbedding};
use circolor::io::{emit_coloring, emit_graph, parse_coloring, parse_graph, GraphDocument};
use proptest::prelude::*;

fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| bits >> (i % 64) & 1 == 1)
        .map(|(_, &e)| e);
    Graph::new(n, edges).unwrap()
}

fn graph_and_coloring() -> impl Strategy<Value = (Graph, Coloring)> {
    (1usize..=7).prop_flat_map(|n| {
        (
            any::<u64>(),
            1usize..=7,
            proptest::collection::vec(0usize..64, n),
        )
            .prop_map(move |(bits, k, raw)| {
                let g = graph_from_bits(n, bits);
                let colors = raw.into_iter().map(|c| c % k).collect();
                (g, Coloring::two_distant(k, colors).unwrap())
            })
    })
}

proptest! {
    #[test]
    fn relaxed_validity_implies_defective_validity(
        (g, f) in graph_and_coloring(),
        t in 0usize..5,
    ) {
        let relaxed = check_relaxed(&g, &f, t).unwrap();
        if relaxed.valid {
            prop_assert!(check_defective(&g, &f, t).unwrap().valid);
        }
    }

    #[test]
    fn report_accounting_invariants((g, f) in graph_and_coloring(), t in 0usize..5) {
        let report = check_relaxed(&g, &f, t).unwrap();
        prop_assert_eq!(report.histogram.iter().sum::<usize>(), g.vertex_count());
        let violating = g
            .edges()
            .filter(|&(u, v)| circ_dist(f.color(u), f.color(v), f.k()).unwrap() < f.q())
            .count();
        prop_assert_eq!(report.relaxations.iter().sum::<usize>(), 2 * violating);
        if report.valid {
            prop_assert!(report.proper);
        }
        // Defective agrees on every field except the verdict.
        let defective = check_defective(&g, &f, t).unwrap();
        prop_assert_eq!(&report.relaxations, &defective.relaxations);
        prop_assert_eq!(report.proper, defective.proper);
    }

    #[test]
    fn rotation_and_reflection_preserve_reports(
        (g, f) in graph_and_coloring(),
        t in 0usize..4,
        shift in 0usize..7,
    ) {
        let base = check_relaxed(&g, &f, t).unwrap();
        let rotated = check_relaxed(&g, &f.rotated(shift), t).unwrap();
        prop_assert_eq!(&base.relaxations, &rotated.relaxations);
        prop_assert_eq!(base.proper, rotated.proper);
        prop_assert_eq!(base.valid, rotated.valid);
        let reflected = check_relaxed(&g, &f.reflected(), t).unwrap();
        prop_assert_eq!(&base.relaxations, &reflected.relaxations);
        prop_assert_eq!(base.valid, reflected.valid);
    }

    #[test]
    fn graph_document_round_trip(n in 1usize..10, bits in any::<u64>(), with_order in any::<bool>()) {
        let g = graph_from_bits(n, bits);
        let embedding = with_order.then(|| OuterEmbedding::new((0..n).rev().collect()));
        let doc = GraphDocument {
            graph: g,
            embedding,
            names: None,
            comments: vec!["generated".into()],
        };
        let text = emit_graph(&doc);
        let parsed = parse_graph(&text).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(emit_graph(&parsed), text);
    }

    #[test]
    fn coloring_round_trip((g, f) in graph_and_coloring(), t in 0usize..4) {
        let report = check_relaxed(&g, &f, t).unwrap();
        let text = emit_coloring(&f, &report);
        let parsed = parse_coloring(&text).unwrap();
        prop_assert_eq!(parsed, f);
    }

    #[test]
    fn random_outerplanar_always_validates(
        n in 3usize..60,
        prob in 0.0f64..=1.0,
        seed in any::<u64>(),
    ) {
        let (g, emb) = random_outerplanar(n, prob, seed).unwrap();
        prop_assert!(validate_outer_embedding(&g, &emb).unwrap());
        // Polygon edges always survive.
        for i in 0..n {
            prop_assert!(g.has_edge(i, (i + 1) % n));
        }
    }
}

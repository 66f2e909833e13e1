use birkhoff::constructions::{even_pairing_stabilizer, fano_clique};
use birkhoff::graph::{build_graph, graph_from_predicate, symmetric_group};
use birkhoff::{BitGraph, PermSet, PermSetDocument};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

fn same_graph(a: &BitGraph, b: &BitGraph) -> bool {
    a.order() == b.order() && (0..a.order()).all(|u| (0..a.order()).all(|v| a.has_edge(u, v) == b.has_edge(u, v)))
}

#[test]
fn labeled_dimacs_round_trip() {
    for set in [symmetric_group(4).unwrap(), fano_clique()] {
        let g = build_graph(&set).unwrap();
        let back = BitGraph::read_dimacs(g.to_dimacs_string().as_bytes()).unwrap();
        assert!(same_graph(&g, &back));
        assert_eq!(back.labels().unwrap().to_strings(), set.to_strings());
    }
}

#[test]
fn random_dimacs_round_trip() {
    let strategy = (0..=40usize).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n)
            .prop_map(move |bits| graph_from_predicate(n, |u, v| bits[u.min(v) * n + u.max(v)]))
    });
    let config = Config {
        cases: 1000,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &[7; 32]))
        .run(&strategy, |g| {
            let back = BitGraph::read_dimacs(g.to_dimacs_string().as_bytes()).unwrap();
            prop_assert!(same_graph(&g, &back));
            prop_assert!(back.labels().is_none());
            Ok(())
        })
        .unwrap();
}

#[test]
fn malformed_dimacs() {
    for text in [
        "e 1 2\n",
        "p edge 2 1\ne 1 3\n",
        "p edge 2 2\ne 1 2\n",
        "p edge x 1\n",
        "p edge 2 1\ne 1 1\n",
    ] {
        assert!(BitGraph::read_dimacs(text.as_bytes()).is_err(), "{text:?}");
    }
}

#[test]
fn json_documents() {
    let g = even_pairing_stabilizer(6).unwrap();
    let doc = g.to_document();
    let back = PermSetDocument::from_json(&doc.to_json()).unwrap();
    assert_eq!(back.to_set().unwrap().to_strings(), g.elements.to_strings());
    assert_eq!(
        back.generator_set().unwrap().unwrap().to_strings(),
        g.generators.to_strings()
    );

    let set = PermSet::from_json(r#"{"degree": 4, "elements": ["()", "(1,2)(3,4)"]}"#).unwrap();
    assert_eq!(set.len(), 2);
    for bad in [
        r#"{"degree": 3, "elements": ["(1,4)"]}"#,
        r#"{"degree": 3, "elements": ["()", "()"]}"#,
        r#"{"elements": []}"#,
        "not json",
    ] {
        assert!(PermSet::from_json(bad).is_err(), "{bad}");
    }
}

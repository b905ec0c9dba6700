#![allow(dead_code)]

use proptest::prelude::*;
use sdh_core::algebra::IntMatrix;
use sdh_core::graph::SignedGraph;

pub fn signed_two_shift() -> SignedGraph {
    SignedGraph::build(&["v"], &[("z", "v", "v", -1), ("o", "v", "v", 1)]).unwrap()
}

pub fn full_two_shift() -> SignedGraph {
    SignedGraph::build(&["v"], &[("a", "v", "v", 1), ("b", "v", "v", 1)]).unwrap()
}

pub fn fibonacci() -> SignedGraph {
    SignedGraph::build(
        &["a", "b"],
        &[
            ("e1", "a", "a", 1),
            ("e2", "a", "b", 1),
            ("e3", "b", "a", 1),
        ],
    )
    .unwrap()
}

pub fn mixed() -> SignedGraph {
    SignedGraph::build(
        &["a", "b"],
        &[
            ("p", "a", "a", -1),
            ("q", "a", "b", 1),
            ("r", "b", "a", -1),
            ("s", "b", "b", 1),
        ],
    )
    .unwrap()
}

pub fn named_graphs() -> Vec<(&'static str, SignedGraph)> {
    vec![
        ("signed 2-shift", signed_two_shift()),
        ("full 2-shift", full_two_shift()),
        ("fibonacci", fibonacci()),
        ("mixed", mixed()),
    ]
}

pub fn graph_from(n: usize, edges: &[(usize, usize, bool)]) -> SignedGraph {
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let ids: Vec<String> = (0..edges.len()).map(|i| format!("e{i}")).collect();
    let list: Vec<(&str, &str, &str, i64)> = edges
        .iter()
        .zip(&ids)
        .map(|(&(s, d, neg), id)| {
            (
                id.as_str(),
                names[s].as_str(),
                names[d].as_str(),
                if neg { -1 } else { 1 },
            )
        })
        .collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    SignedGraph::build(&refs, &list).unwrap()
}

/// Graphs with up to `max_v` vertices and up to `max_e` edges.
pub fn graphs(max_v: usize, max_e: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_v).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, any::<bool>()), 1..=max_e)
            .prop_map(move |edges| graph_from(n, &edges))
    })
}

pub fn int_matrices(
    n: std::ops::RangeInclusive<usize>,
    bound: i64,
) -> impl Strategy<Value = IntMatrix> {
    n.prop_flat_map(move |n| {
        prop::collection::vec(-bound..=bound, n * n).prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(n).collect();
            IntMatrix::from_i64_rows(&rows)
        })
    })
}

pub fn rect_matrices(bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            let rows: Vec<&[i64]> = v.chunks(c).collect();
            IntMatrix::from_i64_rows(&rows)
        })
    })
}

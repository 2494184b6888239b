#![allow(dead_code)]

use proptest::prelude::*;
use unikirch::Graph;

/// Tree from a Prüfer sequence over `seq.len() + 2` vertices.
pub fn prufer_tree(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut g = Graph::empty(n);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).unwrap();
        g.add_edge(leaf, v).unwrap();
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    g.add_edge(rest[0], rest[1]).unwrap();
    g
}

/// A tree on `n` vertices plus one extra edge picked among its non-edges.
pub fn unicyclic(n: usize, seq: &[usize], pick: usize) -> Graph {
    let mut g = prufer_tree(seq);
    let non_edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let (u, v) = non_edges[pick % non_edges.len()];
    g.add_edge(u, v).unwrap();
    g
}

pub fn arb_unicyclic(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(0..n, n - 2), any::<usize>()).prop_map(move |(seq, pick)| unicyclic(n, &seq, pick))
    })
}

pub fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

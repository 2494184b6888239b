//! Maximum matchings of forests and unicyclic graphs.

use thiserror::Error;

use crate::graph::{decompose_unicyclic, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is neither a forest nor unicyclic")]
    Unsupported,
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("no pendant vertex is left unsaturated by a maximum matching")]
    NoUnsaturatedPendant,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A maximum matching with its witness edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingResult {
    pub size: usize,
    /// Matched pairs `(u, v)`, `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub saturated: Vec<bool>,
}

impl MatchingResult {
    fn from_mate(mate: &[Option<usize>]) -> Self {
        let edges: Vec<(usize, usize)> = mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| v > u).map(|v| (u, v)))
            .collect();
        MatchingResult {
            size: edges.len(),
            edges,
            saturated: mate.iter().map(Option::is_some).collect(),
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.saturated.iter().all(|&s| s)
    }
}

/// Greedy leaf matching on the subforest induced by `alive`: a leaf is matched
/// to its parent whenever both are free, processing children before parents.
fn forest_mate(g: &Graph, alive: &[bool], mate: &mut [Option<usize>]) {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if !alive[root] || seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let u = order[i];
            for &w in g.neighbors(u) {
                if alive[w] && !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
            i += 1;
        }
    }
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX && mate[v].is_none() && mate[p].is_none() {
            mate[v] = Some(p);
            mate[p] = Some(v);
        }
    }
}

fn forest_matching_without(g: &Graph, removed_vertices: &[usize], removed_edge: Option<(usize, usize)>) -> Vec<Option<usize>> {
    let mut alive = vec![true; g.vertex_count()];
    for &v in removed_vertices {
        alive[v] = false;
    }
    let mut mate = vec![None; g.vertex_count()];
    match removed_edge {
        None => forest_mate(g, &alive, &mut mate),
        Some((x, y)) => {
            let mut h = g.clone();
            h.remove_edge(x, y);
            forest_mate(&h, &alive, &mut mate);
        }
    }
    mate
}

/// Maximum matching of a tree.
pub fn matching_number_tree(t: &Graph) -> Result<MatchingResult, MatchingError> {
    if !t.is_tree() {
        return Err(MatchingError::NotATree);
    }
    Ok(MatchingResult::from_mate(&forest_matching_without(t, &[], None)))
}

/// Maximum matching of a forest or a unicyclic graph.
///
/// For a unicyclic graph and a cycle edge `xy`, the answer is the better of
/// `G - xy` and `xy` plus `G - x - y`; both subproblems are forests.
pub fn matching_number(g: &Graph) -> Result<MatchingResult, MatchingError> {
    if g.is_forest() {
        return Ok(MatchingResult::from_mate(&forest_matching_without(g, &[], None)));
    }
    if !g.is_unicyclic() {
        return Err(MatchingError::Unsupported);
    }
    let d = decompose_unicyclic(g)?;
    let (x, y) = (d.cycle[0], d.cycle[1]);
    let without_edge = forest_matching_without(g, &[], Some((x, y)));
    let mut with_edge = forest_matching_without(g, &[x, y], None);
    with_edge[x] = Some(y);
    with_edge[y] = Some(x);
    let a = MatchingResult::from_mate(&without_edge);
    let b = MatchingResult::from_mate(&with_edge);
    Ok(if b.size > a.size { b } else { a })
}

pub fn has_perfect_matching(g: &Graph) -> Result<bool, MatchingError> {
    let n = g.vertex_count();
    Ok(n % 2 == 0 && matching_number(g)?.size * 2 == n)
}

/// Outcome of deleting unsaturated pendant vertices down to `2m` vertices.
#[derive(Debug, Clone)]
pub struct G0Reduction {
    pub graph: Graph,
    pub removed_count: usize,
    /// Deleted pendants in deletion order, in the input's labels.
    pub removed: Vec<usize>,
    /// Input label of every vertex of `graph`.
    pub kept: Vec<usize>,
    pub matching_number: usize,
}

/// Pendants `x` (ascending) such that some maximum matching misses `x`,
/// i.e. deleting `x` keeps the matching number.
pub fn unsaturated_pendants(g: &Graph, m: usize) -> Result<Vec<usize>, MatchingError> {
    let mut out = Vec::new();
    for x in g.pendant_vertices() {
        let (h, _) = g.remove_vertices(&[x]);
        if matching_number(&h)?.size == m {
            out.push(x);
        }
    }
    Ok(out)
}

/// Repeatedly deletes a pendant vertex left unsaturated by some maximum
/// matching until the graph has a perfect matching (the graph `G₀`).
///
/// Cycles and graphs that already have a perfect matching pass through
/// unchanged. Among admissible pendants the lowest label is deleted first.
pub fn reduce_to_g0(g: &Graph) -> Result<G0Reduction, MatchingError> {
    if !g.is_unicyclic() {
        return Err(MatchingError::Graph(GraphError::NotUnicyclic {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        }));
    }
    let m = matching_number(g)?.size;
    let mut graph = g.clone();
    let mut kept: Vec<usize> = (0..g.vertex_count()).collect();
    let mut removed = Vec::new();
    if !g.is_cycle() {
        while graph.vertex_count() > 2 * m {
            let x = *unsaturated_pendants(&graph, m)?
                .first()
                .ok_or(MatchingError::NoUnsaturatedPendant)?;
            removed.push(kept[x]);
            let (next, old_of_new) = graph.remove_vertices(&[x]);
            kept = old_of_new.iter().map(|&v| kept[v]).collect();
            graph = next;
        }
    }
    Ok(G0Reduction {
        graph,
        removed_count: removed.len(),
        removed,
        kept,
        matching_number: m,
    })
}

/// Every graph reachable as `G₀` over all admissible deletion orders.
///
/// Exponential in the number of deletions; meant for small inputs.
/// Results are distinct labeled graphs, not isomorphism classes.
pub fn reduce_to_g0_all_orders(g: &Graph) -> Result<Vec<Graph>, MatchingError> {
    let m = matching_number(g)?.size;
    if g.is_cycle() || g.vertex_count() <= 2 * m {
        return Ok(vec![g.clone()]);
    }
    let mut out = Vec::new();
    let mut frontier = vec![g.clone()];
    while let Some(h) = frontier.pop() {
        if h.vertex_count() == 2 * m {
            if !out.contains(&h) {
                out.push(h);
            }
            continue;
        }
        for x in unsaturated_pendants(&h, m)? {
            frontier.push(h.remove_vertices(&[x]).0);
        }
    }
    Ok(out)
}

/// Classes of unicyclic graphs with a perfect matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PerfectClass {
    /// The cycle `C_{2m}` itself.
    Cycle,
    /// Pendants attached straight to the cycle; maximum degree three.
    U1,
    /// Has a pendant vertex whose neighbor has degree two.
    U2,
}

pub fn classify_2m_m(g: &Graph) -> Result<PerfectClass, MatchingError> {
    if !g.is_unicyclic() {
        return Err(MatchingError::Unsupported);
    }
    if !has_perfect_matching(g)? {
        return Err(MatchingError::NoPerfectMatching);
    }
    if g.is_cycle() {
        return Ok(PerfectClass::Cycle);
    }
    let has_p2 = g
        .pendant_vertices()
        .into_iter()
        .any(|x| g.degree(g.neighbors(x)[0]) == 2);
    Ok(if has_p2 { PerfectClass::U2 } else { PerfectClass::U1 })
}

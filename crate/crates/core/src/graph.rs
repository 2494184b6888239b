//! Simple undirected graphs, the edge-list file format, traversal helpers and
//! the structural operations used on unicyclic graphs.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: malformed input {text:?}")]
    Malformed { line: usize, text: String },
    #[error("missing vertex count")]
    MissingVertexCount,
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not unicyclic: {vertices} vertices, {edges} edges")]
    NotUnicyclic { vertices: usize, edges: usize },
    #[error("graph is not a tree")]
    NotATree,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Neighbor lists are kept sorted, so two graphs with the same labeled edge
/// set compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds a new vertex and returns its label.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(GraphError::OutOfRange { u, v, n });
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge {
                u: u.min(v),
                v: u.max(v),
            }),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.edge_count += 1;
                Ok(())
            }
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if u >= self.adj.len() || v >= self.adj.len() {
            return false;
        }
        match self.adj[u].binary_search(&v) {
            Ok(pos) => {
                self.adj[u].remove(pos);
                let pos = self.adj[v].binary_search(&u).unwrap();
                self.adj[v].remove(pos);
                self.edge_count -= 1;
                true
            }
            Err(_) => false,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, vertex: usize) -> Result<(), GraphError> {
        if vertex < self.adj.len() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex,
                n: self.adj.len(),
            })
        }
    }

    /// Vertices of degree one, ascending.
    pub fn pendant_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) == 1).collect()
    }

    /// Hop counts from `source`; `None` marks unreachable vertices.
    pub fn distances(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = Some(0);
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.distances(0).iter().all(Option::is_some)
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1 && self.edge_count + 1 == self.vertex_count() && self.is_connected()
    }

    pub fn is_forest(&self) -> bool {
        component_count(self) + self.edge_count == self.vertex_count()
    }

    /// Connected with exactly as many edges as vertices.
    pub fn is_unicyclic(&self) -> bool {
        self.vertex_count() >= 3 && self.edge_count == self.vertex_count() && self.is_connected()
    }

    pub fn is_cycle(&self) -> bool {
        self.is_unicyclic() && self.adj.iter().all(|nbrs| nbrs.len() == 2)
    }

    /// The subgraph induced by the vertices not in `removed`, relabeled
    /// compactly in increasing order. Also returns the old label of every
    /// new vertex.
    pub fn remove_vertices(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep = vec![true; self.vertex_count()];
        for &v in removed {
            keep[v] = false;
        }
        self.induced(&keep)
    }

    pub fn induced(&self, keep: &[bool]) -> (Graph, Vec<usize>) {
        let old_of_new: Vec<usize> = (0..self.vertex_count()).filter(|&v| keep[v]).collect();
        let mut new_of_old = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = new;
        }
        let mut g = Graph::empty(old_of_new.len());
        for (u, v) in self.edges() {
            if keep[u] && keep[v] {
                let (a, b) = (new_of_old[u], new_of_old[v]);
                g.adj[a].push(b);
                g.adj[b].push(a);
                g.edge_count += 1;
            }
        }
        for nbrs in &mut g.adj {
            nbrs.sort_unstable();
        }
        (g, old_of_new)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.vertex_count());
        let mut g = Graph::empty(self.vertex_count());
        for (u, v) in self.edges() {
            g.adj[perm[u]].push(perm[v]);
            g.adj[perm[v]].push(perm[u]);
        }
        for nbrs in &mut g.adj {
            nbrs.sort_unstable();
        }
        g.edge_count = self.edge_count;
        g
    }

    /// Parses the edge-list format. See [`Graph::to_text`].
    pub fn parse(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lineno, first) = lines.next().ok_or(GraphError::MissingVertexCount)?;
        let n: usize = first.parse().map_err(|_| GraphError::Malformed {
            line: lineno,
            text: first.to_string(),
        })?;
        let mut g = Graph::empty(n);
        for (lineno, line) in lines {
            let malformed = || GraphError::Malformed {
                line: lineno,
                text: line.to_string(),
            };
            let mut fields = line.split_whitespace();
            let u: usize = fields.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
            let v: usize = fields.next().ok_or_else(malformed)?.parse().map_err(|_| malformed())?;
            if fields.next().is_some() {
                return Err(malformed());
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Vertex count on the first line, then one `u v` line per edge with
    /// `u < v`, sorted, LF-terminated.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.vertex_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.vertex_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

impl FromStr for Graph {
    type Err = GraphError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Graph::parse(s)
    }
}

pub fn read_graph(text: &str) -> Result<Graph, GraphError> {
    Graph::parse(text)
}

pub fn write_graph(g: &Graph) -> String {
    g.to_text()
}

pub fn component_count(g: &Graph) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        count += 1;
        seen[s] = true;
        stack.push(s);
        while let Some(u) = stack.pop() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
    }
    count
}

/// Sum of hop distances over unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<Rational, GraphError> {
    Ok(Rational::integer(wiener_index_u64(g)?))
}

pub(crate) fn wiener_index_u64(g: &Graph) -> Result<u64, GraphError> {
    let mut total = 0u64;
    for u in 0..g.vertex_count() {
        for (v, d) in g.distances(u).into_iter().enumerate() {
            let d = d.ok_or(GraphError::Disconnected)?;
            if v > u {
                total += d as u64;
            }
        }
    }
    Ok(total)
}

/// The cycle and branch forest of a unicyclic graph.
///
/// `cycle` starts at its lowest vertex and continues towards the lower of
/// that vertex's two cycle neighbors. Every vertex belongs to the branch of
/// exactly one cycle vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnicyclicDecomposition {
    pub cycle: Vec<usize>,
    /// Index into `cycle` of the root of the branch containing each vertex.
    pub branch: Vec<usize>,
    /// Hop distance from each vertex to its branch root.
    pub depth: Vec<usize>,
    /// Parent towards the branch root; `None` for cycle vertices.
    pub parent: Vec<Option<usize>>,
}

impl UnicyclicDecomposition {
    pub fn vertex_count(&self) -> usize {
        self.branch.len()
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle.len()
    }

    pub fn root_of(&self, v: usize) -> usize {
        self.cycle[self.branch[v]]
    }

    pub fn on_cycle(&self, v: usize) -> bool {
        self.parent[v].is_none()
    }

    /// Vertices of each branch, indexed by cycle position; roots first.
    pub fn branches(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.cycle.iter().map(|&r| vec![r]).collect();
        for v in 0..self.vertex_count() {
            if self.parent[v].is_some() {
                out[self.branch[v]].push(v);
            }
        }
        out
    }

    /// Hop distance between two vertices of the same branch.
    pub fn branch_distance(&self, u: usize, v: usize) -> usize {
        debug_assert_eq!(self.branch[u], self.branch[v]);
        let (mut a, mut b) = (u, v);
        let mut dist = 0;
        while self.depth[a] > self.depth[b] {
            a = self.parent[a].unwrap();
            dist += 1;
        }
        while self.depth[b] > self.depth[a] {
            b = self.parent[b].unwrap();
            dist += 1;
        }
        while a != b {
            a = self.parent[a].unwrap();
            b = self.parent[b].unwrap();
            dist += 2;
        }
        dist
    }

    /// Cycle edges plus branch edges, as a graph.
    pub fn reassemble(&self) -> Graph {
        let mut g = Graph::empty(self.vertex_count());
        let k = self.cycle.len();
        for i in 0..k {
            g.add_edge(self.cycle[i], self.cycle[(i + 1) % k])
                .expect("cycle edges are distinct");
        }
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                g.add_edge(v, p).expect("branch edges are distinct");
            }
        }
        g
    }
}

/// Splits a unicyclic graph into its cycle and rooted branches.
pub fn decompose_unicyclic(g: &Graph) -> Result<UnicyclicDecomposition, GraphError> {
    let n = g.vertex_count();
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.edge_count() != n || n < 3 {
        return Err(GraphError::NotUnicyclic {
            vertices: n,
            edges: g.edge_count(),
        });
    }

    // Peel leaves until only the 2-regular cycle remains.
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut on_cycle = vec![true; n];
    let mut leaves: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    while let Some(v) = leaves.pop() {
        on_cycle[v] = false;
        for &w in g.neighbors(v) {
            if on_cycle[w] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    leaves.push(w);
                }
            }
        }
    }

    let start = (0..n).find(|&v| on_cycle[v]).expect("unicyclic graph has a cycle");
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = *g
        .neighbors(start)
        .iter()
        .find(|&&w| on_cycle[w])
        .expect("cycle vertex has cycle neighbors");
    while cur != start {
        cycle.push(cur);
        let next = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| on_cycle[w] && w != prev)
            .expect("cycle continues");
        prev = cur;
        cur = next;
    }

    let mut branch = vec![usize::MAX; n];
    let mut depth = vec![0; n];
    let mut parent = vec![None; n];
    let mut queue = VecDeque::new();
    for (i, &r) in cycle.iter().enumerate() {
        branch[r] = i;
        queue.push_back(r);
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if !on_cycle[w] && branch[w] == usize::MAX {
                branch[w] = branch[u];
                depth[w] = depth[u] + 1;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    Ok(UnicyclicDecomposition {
        cycle,
        branch,
        depth,
        parent,
    })
}

/// Glues `h` onto `g` by identifying `w ∈ V(h)` with `u ∈ V(g)`.
///
/// `g` keeps its labels, `w` becomes `u`, and the other vertices of `h` are
/// shifted to `|g|..|g|+|h|-1` preserving their relative order.
pub fn identify_vertices(g: &Graph, u: usize, h: &Graph, w: usize) -> Result<Graph, GraphError> {
    g.check_vertex(u)?;
    h.check_vertex(w)?;
    let base = g.vertex_count();
    let map = |x: usize| -> usize {
        match x.cmp(&w) {
            std::cmp::Ordering::Equal => u,
            std::cmp::Ordering::Less => base + x,
            std::cmp::Ordering::Greater => base + x - 1,
        }
    };
    let mut out = g.clone();
    for _ in 1..h.vertex_count() {
        out.add_vertex();
    }
    for (a, b) in h.edges() {
        out.add_edge(map(a), map(b))?;
    }
    Ok(out)
}

/// Result of deleting pendent `P2`s until none is left.
#[derive(Debug, Clone)]
pub struct P2Reduction {
    pub graph: Graph,
    /// Deleted `(pendant, neighbor)` pairs in deletion order, in the input's labels.
    pub removed: Vec<(usize, usize)>,
    /// Input label of every vertex of `graph`.
    pub kept: Vec<usize>,
}

/// Lowest-labeled pendant whose neighbor has degree two, with that neighbor.
pub fn find_pendant_p2(g: &Graph) -> Option<(usize, usize)> {
    (0..g.vertex_count()).find_map(|x| {
        if g.degree(x) == 1 {
            let y = g.neighbors(x)[0];
            (g.degree(y) == 2).then_some((x, y))
        } else {
            None
        }
    })
}

/// Deletes the lowest-labeled pendent `P2` once, relabeling compactly.
pub fn strip_pendant_p2(g: &Graph) -> Option<(Graph, (usize, usize))> {
    let (x, y) = find_pendant_p2(g)?;
    Some((g.remove_vertices(&[x, y]).0, (x, y)))
}

/// Iterates [`strip_pendant_p2`] to its fixpoint (the graph `Ḡ`).
pub fn pendant_p2_fixpoint(g: &Graph) -> P2Reduction {
    let mut graph = g.clone();
    let mut kept: Vec<usize> = (0..g.vertex_count()).collect();
    let mut removed = Vec::new();
    while let Some((x, y)) = find_pendant_p2(&graph) {
        removed.push((kept[x], kept[y]));
        let (next, old_of_new) = graph.remove_vertices(&[x, y]);
        kept = old_of_new.iter().map(|&v| kept[v]).collect();
        graph = next;
    }
    P2Reduction {
        graph,
        removed,
        kept,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn read_triangle() {
        let g = read_graph("3\n0 1\n1 2\n0 2\n").unwrap();
        assert_eq!(g, cycle(3));
    }

    #[test]
    fn write_sorted() {
        assert_eq!(write_graph(&cycle(4)), "4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = read_graph("# a path\n\n3\n# edges\n1 2\n0 1\n").unwrap();
        assert_eq!(g, path(3));
        assert_eq!(write_graph(&g), "3\n0 1\n1 2\n");
    }

    #[test]
    fn rejected_inputs() {
        assert_eq!(read_graph("2\n0 0\n"), Err(GraphError::Loop(0)));
        assert_eq!(
            read_graph("3\n0 1\n1 0\n"),
            Err(GraphError::DuplicateEdge { u: 0, v: 1 })
        );
        assert_eq!(
            read_graph("3\n0 3\n"),
            Err(GraphError::OutOfRange { u: 0, v: 3, n: 3 })
        );
        assert!(matches!(read_graph("3\n0 1 2\n"), Err(GraphError::Malformed { line: 2, .. })));
        assert!(matches!(read_graph("x\n"), Err(GraphError::Malformed { line: 1, .. })));
        assert_eq!(read_graph("# nothing\n"), Err(GraphError::MissingVertexCount));
    }

    #[test]
    fn bfs_distances() {
        let p3 = path(3);
        assert_eq!(p3.distances(0), vec![Some(0), Some(1), Some(2)]);
        let two = Graph::empty(2);
        assert!(!two.is_connected());
        assert_eq!(two.distances(0), vec![Some(0), None]);
        // brute force: shortest walk around C6 between v1 and v4
        let c6 = cycle(6);
        assert_eq!(c6.distances(0)[3], Some(3));
    }

    #[test]
    fn wiener_small() {
        assert_eq!(wiener_index(&path(3)).unwrap(), Rational::integer(4));
        // pairs of C5: five at distance 1, five at distance 2
        assert_eq!(wiener_index(&cycle(5)).unwrap(), Rational::integer(15));
        assert_eq!(wiener_index(&Graph::empty(2)), Err(GraphError::Disconnected));
    }

    #[test]
    fn decompose_triangle_with_pendant() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let d = decompose_unicyclic(&g).unwrap();
        assert_eq!(d.cycle, vec![0, 1, 2]);
        assert_eq!(d.branches(), vec![vec![0, 3], vec![1], vec![2]]);
        assert_eq!(d.reassemble(), g);
    }

    #[test]
    fn decompose_orientation() {
        // cycle 2-5-0-4-2 plus pendant 1 on 5 and 3 on 1
        let g = Graph::from_edges(6, &[(2, 5), (5, 0), (0, 4), (4, 2), (5, 1), (1, 3)]).unwrap();
        let d = decompose_unicyclic(&g).unwrap();
        assert_eq!(d.cycle, vec![0, 4, 2, 5]);
        assert_eq!(d.depth[3], 2);
        assert_eq!(d.root_of(3), 5);
        assert_eq!(d.branch_distance(3, 5), 2);
        assert_eq!(d.reassemble(), g);
    }

    #[test]
    fn decompose_errors() {
        assert_eq!(
            decompose_unicyclic(&path(4)).unwrap_err(),
            GraphError::NotUnicyclic { vertices: 4, edges: 3 }
        );
        let mut two_triangles = Graph::empty(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            two_triangles.add_edge(u, v).unwrap();
        }
        assert_eq!(decompose_unicyclic(&two_triangles).unwrap_err(), GraphError::Disconnected);
    }

    #[test]
    fn identify_paths() {
        let p2 = path(2);
        let g = identify_vertices(&p2, 1, &p2, 0).unwrap();
        assert_eq!(g, path(3));
        let t = identify_vertices(&cycle(3), 0, &p2, 0).unwrap();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.edge_count(), 4);
        assert!(t.has_edge(0, 3));
        assert!(identify_vertices(&p2, 2, &p2, 0).is_err());
    }

    #[test]
    fn strip_single_p2() {
        // triangle 0,1,2 with path 0-3-4
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4)]).unwrap();
        let r = pendant_p2_fixpoint(&g);
        assert_eq!(r.removed, vec![(4, 3)]);
        assert_eq!(r.graph, cycle(3));
        assert_eq!(r.kept, vec![0, 1, 2]);
        let c8 = cycle(8);
        let r = pendant_p2_fixpoint(&c8);
        assert!(r.removed.is_empty());
        assert_eq!(r.graph, c8);
    }
}

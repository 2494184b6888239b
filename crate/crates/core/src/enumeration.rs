//! Isomorphism-free generation of unicyclic graphs.
//!
//! A unicyclic graph is determined up to isomorphism by its cycle length and
//! the cyclic sequence of rooted trees hanging off the cycle, read up to
//! rotation and reflection. Rooted trees are identified by their bottom-up
//! parenthesis code; the cycle sequence is the lexicographically smallest of
//! its `2k` dihedral images.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::graph::{decompose_unicyclic, wiener_index_u64, Graph, GraphError};
use crate::matching::matching_number;
use crate::rational::Rational;
use crate::resistance::UnicyclicResistance;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("unicyclic graphs need at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("no unicyclic graph has {n} vertices and matching number {m}")]
    EmptyClass { n: usize, m: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Canonical code of a rooted tree: `"(" + sorted child codes + ")"`.
pub fn rooted_tree_code(t: &Graph, root: usize) -> Result<String, GraphError> {
    t.check_vertex(root)?;
    if !t.is_tree() {
        return Err(GraphError::NotATree);
    }
    Ok(subtree_code(t, root, usize::MAX, &|_, _| true))
}

/// Code of the subtree at `v` entered from `from`, following only edges accepted by `keep`.
fn subtree_code(g: &Graph, v: usize, from: usize, keep: &dyn Fn(usize, usize) -> bool) -> String {
    // Iterative post-order to stay clear of deep recursion on long paths.
    let mut codes: Vec<Option<String>> = vec![None; g.vertex_count()];
    let mut stack = vec![(v, from, false)];
    while let Some((u, parent, expanded)) = stack.pop() {
        if expanded {
            let mut children: Vec<String> = g
                .neighbors(u)
                .iter()
                .filter(|&&w| w != parent && keep(u, w))
                .map(|&w| codes[w].take().expect("child code computed"))
                .collect();
            children.sort_unstable();
            let mut code = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
            code.push('(');
            for c in &children {
                code.push_str(c);
            }
            code.push(')');
            codes[u] = Some(code);
        } else {
            stack.push((u, parent, true));
            for &w in g.neighbors(u) {
                if w != parent && keep(u, w) {
                    stack.push((w, u, false));
                }
            }
        }
    }
    codes[v].take().unwrap()
}

/// A rooted tree code ordered by size first, then as a string.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct BranchCode(pub String);

impl BranchCode {
    /// Vertex count of the rooted tree.
    pub fn size(&self) -> usize {
        self.0.len() / 2
    }
}

impl Ord for BranchCode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for BranchCode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Isomorphism invariant of a unicyclic graph: cycle length and the
/// dihedrally minimal sequence of branch codes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CanonicalCode {
    pub cycle_length: usize,
    pub branch_codes: Vec<BranchCode>,
}

impl CanonicalCode {
    pub fn vertex_count(&self) -> usize {
        self.branch_codes.iter().map(BranchCode::size).sum()
    }

    /// Hex prefix of the SHA-256 of the text form; stable across runs and platforms.
    pub fn stable_hash(&self) -> String {
        let digest = Sha256::digest(self.to_string().as_bytes());
        digest[..8].iter().map(|b| format!("{b:02x}")).collect()
    }

    /// The graph with cycle `0..k` and branches attached in sequence order.
    pub fn to_graph(&self) -> Graph {
        let k = self.cycle_length;
        let mut g = Graph::empty(k);
        for i in 0..k {
            g.add_edge(i, (i + 1) % k).unwrap();
        }
        for (i, code) in self.branch_codes.iter().enumerate() {
            let mut stack = vec![i];
            for ch in code.0.bytes().skip(1).take(code.0.len() - 2) {
                if ch == b'(' {
                    let v = g.add_vertex();
                    g.add_edge(*stack.last().unwrap(), v).unwrap();
                    stack.push(v);
                } else {
                    stack.pop();
                }
            }
        }
        g
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}:", self.cycle_length)?;
        for (i, b) in self.branch_codes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&b.0)?;
        }
        Ok(())
    }
}

/// Whether `seq` is the least of its rotations and reflections.
fn is_dihedral_minimal<T: Ord>(seq: &[T]) -> bool {
    let k = seq.len();
    for start in 0..k {
        if seq[start] != seq[0] {
            continue;
        }
        if start != 0 && rotation_cmp(seq, start, true) == Ordering::Less {
            return false;
        }
        if rotation_cmp(seq, start, false) == Ordering::Less {
            return false;
        }
    }
    true
}

/// Compares the image starting at `start` (forward or backward) against `seq`.
fn rotation_cmp<T: Ord>(seq: &[T], start: usize, forward: bool) -> Ordering {
    let k = seq.len();
    for i in 0..k {
        let j = if forward { (start + i) % k } else { (start + k - i) % k };
        match seq[j].cmp(&seq[i]) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

fn dihedral_minimum<T: Ord + Clone>(seq: &[T]) -> Vec<T> {
    let k = seq.len();
    let mut best: Option<Vec<T>> = None;
    for start in 0..k {
        for forward in [true, false] {
            let image: Vec<T> = (0..k)
                .map(|i| {
                    let j = if forward { (start + i) % k } else { (start + k - i) % k };
                    seq[j].clone()
                })
                .collect();
            if best.as_ref().is_none_or(|b| image < *b) {
                best = Some(image);
            }
        }
    }
    best.unwrap_or_default()
}

/// Canonical code of a unicyclic graph.
pub fn canonical_code(g: &Graph) -> Result<CanonicalCode, GraphError> {
    let d = decompose_unicyclic(g)?;
    let on_cycle: Vec<bool> = (0..g.vertex_count()).map(|v| d.on_cycle(v)).collect();
    let keep = |_: usize, w: usize| !on_cycle[w];
    let codes: Vec<BranchCode> = d
        .cycle
        .iter()
        .map(|&r| BranchCode(subtree_code(g, r, usize::MAX, &keep)))
        .collect();
    Ok(CanonicalCode {
        cycle_length: d.cycle_length(),
        branch_codes: dihedral_minimum(&codes),
    })
}

/// One rooted tree shape in the table.
#[derive(Debug, Clone)]
pub struct RootedTree {
    pub size: usize,
    pub code: String,
    /// Parent (within the tree, root = 0) of nodes `1..size`, in preorder.
    pub parents: Vec<usize>,
}

/// All rooted trees up to a given size, ordered by `(size, code)`; the
/// position in the table is the tree's id, so id order equals
/// [`BranchCode`] order.
#[derive(Debug)]
pub struct RootedTreeTable {
    trees: Vec<RootedTree>,
    /// `by_size[s]` = id range of trees with `s` vertices.
    by_size: Vec<std::ops::Range<usize>>,
}

impl RootedTreeTable {
    pub fn build(max_size: usize) -> Self {
        let mut trees: Vec<RootedTree> = Vec::new();
        let mut by_size = vec![0..0];
        let mut children_of: Vec<Vec<usize>> = Vec::new();
        for size in 1..=max_size {
            let mut fresh: Vec<(String, Vec<usize>)> = Vec::new();
            let mut chosen = Vec::new();
            multisets(&by_size, size - 1, 0, &mut chosen, &mut |kids| {
                let mut codes: Vec<&str> = kids.iter().map(|&c| trees[c].code.as_str()).collect();
                codes.sort_unstable();
                let code = format!("({})", codes.concat());
                fresh.push((code, kids.to_vec()));
            });
            fresh.sort_by(|a, b| a.0.cmp(&b.0));
            let start = trees.len();
            for (code, kids) in fresh {
                let mut parents = Vec::with_capacity(size - 1);
                let mut offset = 1;
                for &c in &kids {
                    parents.push(0);
                    parents.extend(trees[c].parents.iter().map(|&p| p + offset));
                    offset += trees[c].size;
                }
                trees.push(RootedTree { size, code, parents });
                children_of.push(kids);
            }
            by_size.push(start..trees.len());
        }
        RootedTreeTable { trees, by_size }
    }

    pub fn max_size(&self) -> usize {
        self.by_size.len() - 1
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn tree(&self, id: usize) -> &RootedTree {
        &self.trees[id]
    }

    pub fn ids_of_size(&self, size: usize) -> std::ops::Range<usize> {
        self.by_size.get(size).cloned().unwrap_or(0..0)
    }

    pub fn count_of_size(&self, size: usize) -> usize {
        self.ids_of_size(size).len()
    }
}

/// Calls `f` with every multiset of tree ids (nondecreasing) whose sizes sum to `total`.
fn multisets(
    by_size: &[std::ops::Range<usize>],
    total: usize,
    min_id: usize,
    chosen: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if total == 0 {
        f(chosen);
        return;
    }
    for size in 1..=total.min(by_size.len() - 1) {
        let range = by_size[size].clone();
        for id in range.start.max(min_id)..range.end {
            chosen.push(id);
            multisets(by_size, total - size, id, chosen, f);
            chosen.pop();
        }
    }
}

static TREE_TABLE: Mutex<Option<Arc<RootedTreeTable>>> = Mutex::new(None);

/// Shared table covering at least `max_size`, grown on demand.
pub fn tree_table(max_size: usize) -> Arc<RootedTreeTable> {
    let mut guard = TREE_TABLE.lock().unwrap();
    match guard.as_ref() {
        Some(t) if t.max_size() >= max_size => t.clone(),
        _ => {
            let t = Arc::new(RootedTreeTable::build(max_size.max(8)));
            *guard = Some(t.clone());
            t
        }
    }
}

/// One isomorphism class from the generator.
#[derive(Debug, Clone)]
pub struct UnicyclicClass {
    pub code: CanonicalCode,
    pub graph: Graph,
    pub matching_number: usize,
}

/// Streaming generator over one slice of the search space: fixed vertex
/// count, cycle length and tree at cycle position 0.
///
/// Sequences are produced in increasing id order; position 0 holds the least
/// id, which every dihedrally minimal sequence satisfies.
pub struct UnicyclicIter {
    table: Arc<RootedTreeTable>,
    n: usize,
    k: usize,
    m_filter: Option<usize>,
    seq: Vec<usize>,
    used: Vec<usize>,
    started: bool,
    done: bool,
}

impl UnicyclicIter {
    fn new(table: Arc<RootedTreeTable>, n: usize, k: usize, first: usize, m_filter: Option<usize>) -> Self {
        let mut seq = vec![0; k];
        seq[0] = first;
        let first_size = table.tree(first).size;
        let mut used = vec![0; k];
        used[0] = first_size;
        UnicyclicIter {
            table,
            n,
            k,
            m_filter,
            seq,
            used,
            started: false,
            done: first_size * k > n,
        }
    }

    fn size(&self, id: usize) -> usize {
        self.table.tree(id).size
    }

    /// Smallest admissible id at position `p` that is `>= from`, given the prefix.
    fn first_fit(&self, p: usize, from: usize) -> Option<usize> {
        let before = if p == 0 { 0 } else { self.used[p - 1] };
        let rem = self.n - before;
        let min_size = self.size(self.seq[0]);
        let left = self.k - p - 1;
        if left == 0 {
            if rem < min_size || rem > self.table.max_size() {
                return None;
            }
            let range = self.table.ids_of_size(rem);
            let id = from.max(range.start);
            return (id < range.end).then_some(id);
        }
        let max_here = rem.checked_sub(left * min_size)?;
        let id = from;
        if id >= self.table.len() || self.size(id) > max_here {
            return None;
        }
        Some(id)
    }

    fn place(&mut self, p: usize, id: usize) {
        self.seq[p] = id;
        let before = if p == 0 { 0 } else { self.used[p - 1] };
        self.used[p] = before + self.size(id);
    }

    /// Fills positions `p..k` with the smallest admissible ids.
    fn fill(&mut self, p: usize) -> bool {
        for q in p..self.k {
            match self.first_fit(q, self.seq[0]) {
                Some(id) => self.place(q, id),
                None => return self.backtrack(q),
            }
        }
        true
    }

    /// Advances the deepest position below `limit` that can still grow, then refills.
    fn backtrack(&mut self, limit: usize) -> bool {
        let mut p = limit;
        while p > 1 {
            p -= 1;
            if let Some(id) = self.first_fit(p, self.seq[p] + 1) {
                self.place(p, id);
                if p + 1 == self.k {
                    return true;
                }
                return self.fill(p + 1);
            }
        }
        false
    }

    fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        let ok = if !self.started {
            self.started = true;
            if self.k == 1 {
                self.used[0] == self.n
            } else {
                self.fill(1)
            }
        } else {
            self.backtrack(self.k)
        };
        if !ok {
            self.done = true;
        }
        ok
    }

    fn current(&self) -> UnicyclicClass {
        let k = self.k;
        let mut g = Graph::empty(self.n);
        for i in 0..k {
            g.add_edge(i, (i + 1) % k).unwrap();
        }
        let mut next = k;
        for (i, &id) in self.seq.iter().enumerate() {
            let tree = self.table.tree(id);
            let base = next;
            for (offset, &parent) in tree.parents.iter().enumerate() {
                let v = base + offset;
                let p = if parent == 0 { i } else { base + parent - 1 };
                g.add_edge(p, v).unwrap();
            }
            next += tree.size - 1;
        }
        let code = CanonicalCode {
            cycle_length: k,
            branch_codes: self
                .seq
                .iter()
                .map(|&id| BranchCode(self.table.tree(id).code.clone()))
                .collect(),
        };
        let matching_number = matching_number(&g).expect("generated graph is unicyclic").size;
        UnicyclicClass {
            code,
            graph: g,
            matching_number,
        }
    }
}

impl Iterator for UnicyclicIter {
    type Item = UnicyclicClass;

    fn next(&mut self) -> Option<UnicyclicClass> {
        while self.advance() {
            if !is_dihedral_minimal(&self.seq) {
                continue;
            }
            let class = self.current();
            if self.m_filter.is_none_or(|m| m == class.matching_number) {
                return Some(class);
            }
        }
        None
    }
}

/// Independent slices `(k, first tree id)` in canonical-code order.
fn partitions(n: usize) -> Vec<(usize, usize)> {
    let table = tree_table(n.saturating_sub(2));
    let mut out = Vec::new();
    for k in 3..=n {
        let max_first = n / k;
        for size in 1..=max_first {
            for id in table.ids_of_size(size) {
                out.push((k, id));
            }
        }
    }
    out
}

fn partition_iter(n: usize, k: usize, first: usize, m_filter: Option<usize>) -> UnicyclicIter {
    UnicyclicIter::new(tree_table(n.saturating_sub(2).max(1)), n, k, first, m_filter)
}

/// Every unicyclic graph on `n` vertices up to isomorphism, optionally only
/// those with matching number `m_filter`, in ascending canonical-code order.
pub fn enumerate_unicyclic(
    n: usize,
    m_filter: Option<usize>,
) -> Result<impl Iterator<Item = UnicyclicClass>, EnumerationError> {
    if n < 3 {
        return Err(EnumerationError::TooFewVertices(n));
    }
    Ok(partitions(n)
        .into_iter()
        .flat_map(move |(k, first)| partition_iter(n, k, first, m_filter)))
}

/// Parallel fold over the classes of `n`; slice results come back in
/// canonical-code order.
pub fn par_map_slices<T, F>(n: usize, m_filter: Option<usize>, f: F) -> Result<Vec<T>, EnumerationError>
where
    T: Send,
    F: Fn(&mut dyn Iterator<Item = UnicyclicClass>) -> T + Sync + Send,
{
    if n < 3 {
        return Err(EnumerationError::TooFewVertices(n));
    }
    Ok(partitions(n)
        .into_par_iter()
        .map(|(k, first)| f(&mut partition_iter(n, k, first, m_filter)))
        .collect())
}

/// All classes materialized, sorted by canonical code.
pub fn collect_unicyclic(n: usize, m_filter: Option<usize>) -> Result<Vec<UnicyclicClass>, EnumerationError> {
    Ok(par_map_slices(n, m_filter, |it| it.collect::<Vec<_>>())?
        .into_iter()
        .flatten()
        .collect())
}

/// Counts per matching number, indexed by `m`.
pub fn count_by_matching_number(n: usize) -> Result<Vec<usize>, EnumerationError> {
    let per_slice = par_map_slices(n, None, |it| {
        let mut counts = vec![0usize; n / 2 + 1];
        for c in it {
            counts[c.matching_number] += 1;
        }
        counts
    })?;
    let mut counts = vec![0usize; n / 2 + 1];
    for slice in per_slice {
        for (m, c) in slice.into_iter().enumerate() {
            counts[m] += c;
        }
    }
    Ok(counts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariant {
    Kirchhoff,
    Wiener,
}

impl Invariant {
    pub fn evaluate(self, g: &Graph) -> Result<Rational, GraphError> {
        match self {
            Invariant::Kirchhoff => Ok(UnicyclicResistance::from_graph(g)?.kirchhoff()),
            Invariant::Wiener => Ok(Rational::integer(wiener_index_u64(g)?)),
        }
    }
}

impl std::str::FromStr for Invariant {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "kirchhoff" | "kf" => Ok(Invariant::Kirchhoff),
            "wiener" | "w" => Ok(Invariant::Wiener),
            other => Err(format!("unknown invariant {other:?}")),
        }
    }
}

/// Minimum of an invariant over a class and every class attaining it.
#[derive(Debug, Clone)]
pub struct ExtremalResult {
    pub value: Rational,
    /// Minimizers in ascending canonical-code order.
    pub minimizers: Vec<UnicyclicClass>,
    /// Size of the class searched.
    pub class_size: usize,
}

impl ExtremalResult {
    pub fn codes(&self) -> Vec<CanonicalCode> {
        self.minimizers.iter().map(|c| c.code.clone()).collect()
    }
}

/// Exact argmin of `invariant` over the unicyclic graphs with `n` vertices
/// and matching number `m`.
pub fn extremal_search(n: usize, m: usize, invariant: Invariant) -> Result<ExtremalResult, EnumerationError> {
    extremal_search_by(n, Some(m), |c| Some(invariant.evaluate(&c.graph).expect("unicyclic")))
        .map_err(|e| match e {
            EnumerationError::EmptyClass { .. } => EnumerationError::EmptyClass { n, m },
            other => other,
        })
}

/// Argmin of `score` over the classes of `n` (optionally filtered by matching
/// number); classes scored `None` are skipped.
pub fn extremal_search_by<F>(n: usize, m_filter: Option<usize>, score: F) -> Result<ExtremalResult, EnumerationError>
where
    F: Fn(&UnicyclicClass) -> Option<Rational> + Sync + Send,
{
    let slices = par_map_slices(n, m_filter, |it| {
        let mut best: Option<(Rational, Vec<UnicyclicClass>)> = None;
        let mut seen = 0usize;
        for class in it {
            let Some(value) = score(&class) else { continue };
            seen += 1;
            match &mut best {
                Some((v, list)) => match value.cmp(v) {
                    Ordering::Less => best = Some((value, vec![class])),
                    Ordering::Equal => list.push(class),
                    Ordering::Greater => {}
                },
                None => best = Some((value, vec![class])),
            }
        }
        (best, seen)
    })?;
    let mut best: Option<(Rational, Vec<UnicyclicClass>)> = None;
    let mut class_size = 0;
    for (slice, seen) in slices {
        class_size += seen;
        let Some((value, list)) = slice else { continue };
        match &mut best {
            Some((v, all)) => match value.cmp(v) {
                Ordering::Less => best = Some((value, list)),
                Ordering::Equal => all.extend(list),
                Ordering::Greater => {}
            },
            None => best = Some((value, list)),
        }
    }
    let (value, minimizers) = best.ok_or(EnumerationError::EmptyClass {
        n,
        m: m_filter.unwrap_or(0),
    })?;
    Ok(ExtremalResult {
        value,
        minimizers,
        class_size,
    })
}

/// Argmin of `invariant` for every matching number at once, indexed by `m`;
/// one pass over the classes of `n`.
pub fn extremal_by_matching_number(n: usize, invariant: Invariant) -> Result<Vec<Option<ExtremalResult>>, EnumerationError> {
    type Best = Vec<Option<(Rational, Vec<UnicyclicClass>, usize)>>;
    let merge = |into: &mut Best, from: Best| {
        for (m, slot) in from.into_iter().enumerate() {
            let Some((value, list, seen)) = slot else { continue };
            match &mut into[m] {
                Some((v, all, count)) => {
                    *count += seen;
                    match value.cmp(v) {
                        Ordering::Less => {
                            *v = value;
                            *all = list;
                        }
                        Ordering::Equal => all.extend(list),
                        Ordering::Greater => {}
                    }
                }
                None => into[m] = Some((value, list, seen)),
            }
        }
    };
    let slices = par_map_slices(n, None, |it| {
        let mut best: Best = vec![None; n / 2 + 1];
        for class in it {
            let value = invariant.evaluate(&class.graph).expect("unicyclic");
            let m = class.matching_number;
            let mut one: Best = vec![None; n / 2 + 1];
            one[m] = Some((value, vec![class], 1));
            merge(&mut best, one);
        }
        best
    })?;
    let mut best: Best = vec![None; n / 2 + 1];
    for slice in slices {
        merge(&mut best, slice);
    }
    Ok(best
        .into_iter()
        .map(|slot| {
            slot.map(|(value, minimizers, class_size)| ExtremalResult {
                value,
                minimizers,
                class_size,
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn rooted_codes() {
        assert_eq!(rooted_tree_code(&Graph::empty(1), 0).unwrap(), "()");
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let end = rooted_tree_code(&p3, 0).unwrap();
        let center = rooted_tree_code(&p3, 1).unwrap();
        assert_eq!(end, "((()))");
        assert_eq!(center, "(()())");
        assert_ne!(end, center);
        assert_eq!(rooted_tree_code(&cycle(3), 0), Err(GraphError::NotATree));
    }

    #[test]
    fn rooted_tree_counts() {
        // number of rooted trees with s vertices
        let expected = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719];
        let table = RootedTreeTable::build(10);
        for (s, &e) in expected.iter().enumerate() {
            assert_eq!(table.count_of_size(s + 1), e, "size {}", s + 1);
        }
    }

    #[test]
    fn table_parents_rebuild_code() {
        let table = RootedTreeTable::build(7);
        for id in 0..table.len() {
            let t = table.tree(id);
            let mut g = Graph::empty(t.size);
            for (i, &p) in t.parents.iter().enumerate() {
                g.add_edge(p, i + 1).unwrap();
            }
            assert_eq!(rooted_tree_code(&g, 0).unwrap(), t.code);
        }
    }

    #[test]
    fn cycle_code() {
        let code = canonical_code(&cycle(5)).unwrap();
        assert_eq!(code.cycle_length, 5);
        assert!(code.branch_codes.iter().all(|b| b.0 == "()"));
        assert_eq!(code.to_string(), "C5:() () () () ()");
    }

    #[test]
    fn relabeling_invariance() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let code = canonical_code(&g).unwrap();
        for perm in [[3, 2, 1, 0], [1, 3, 0, 2], [2, 0, 3, 1]] {
            assert_eq!(canonical_code(&g.relabel(&perm)).unwrap(), code);
        }
        assert_eq!(code.to_graph().vertex_count(), 4);
        assert_eq!(canonical_code(&code.to_graph()).unwrap(), code);
    }

    #[test]
    fn tiny_enumerations() {
        let three: Vec<_> = enumerate_unicyclic(3, None).unwrap().collect();
        assert_eq!(three.len(), 1);
        assert_eq!(three[0].graph, cycle(3));
        let four: Vec<_> = enumerate_unicyclic(4, None).unwrap().collect();
        assert_eq!(four.len(), 2);
        assert!(enumerate_unicyclic(2, None).is_err());
    }

    #[test]
    fn class_counts() {
        // connected unicyclic graphs on n vertices
        let expected = [1, 2, 5, 13, 33, 89, 240, 657];
        for (i, &e) in expected.iter().enumerate() {
            let n = i + 3;
            let all: Vec<_> = enumerate_unicyclic(n, None).unwrap().collect();
            assert_eq!(all.len(), e, "n = {n}");
            for w in all.windows(2) {
                assert!(w[0].code < w[1].code);
            }
            for c in &all {
                assert_eq!(canonical_code(&c.graph).unwrap(), c.code);
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let seq: Vec<_> = enumerate_unicyclic(9, Some(4)).unwrap().map(|c| c.code).collect();
        let par: Vec<_> = collect_unicyclic(9, Some(4)).unwrap().into_iter().map(|c| c.code).collect();
        assert_eq!(seq, par);
    }

    #[test]
    fn extremal_small() {
        let r = extremal_search(8, 4, Invariant::Kirchhoff).unwrap();
        assert_eq!(r.value, Rational::integer(42));
        assert_eq!(r.codes(), vec![canonical_code(&cycle(8)).unwrap()]);
        assert!(matches!(
            extremal_search(8, 1, Invariant::Kirchhoff),
            Err(EnumerationError::EmptyClass { n: 8, m: 1 })
        ));
    }

    #[test]
    fn per_matching_number_pass_agrees() {
        let all = extremal_by_matching_number(10, Invariant::Kirchhoff).unwrap();
        for m in 2..=5 {
            let single = extremal_search(10, m, Invariant::Kirchhoff).unwrap();
            let joint = all[m].as_ref().unwrap();
            assert_eq!(joint.value, single.value);
            assert_eq!(joint.codes(), single.codes());
            assert_eq!(joint.class_size, single.class_size);
        }
        assert!(all[0].is_none() && all[1].is_none());
    }

    #[test]
    fn dihedral_helpers() {
        assert!(is_dihedral_minimal(&[0, 1, 2]));
        assert!(!is_dihedral_minimal(&[0, 2, 1, 1]));
        assert_eq!(dihedral_minimum(&[2, 0, 3, 1]), vec![0, 2, 1, 3]);
    }
}

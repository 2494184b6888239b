//! Slow, obviously-correct reference computations used to cross-check the
//! fast paths. Everything here is exponential; keep inputs small.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::graph::Graph;
use crate::matching::matching_number;
use crate::rational::Rational;

/// Maximum matching size by exhaustive search over edge subsets.
pub fn matching_number_brute(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], used: &mut [bool]) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return 0;
        };
        let mut best = go(rest, used);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            best = best.max(1 + go(rest, used));
            used[u] = false;
            used[v] = false;
        }
        best
    }
    let edges: Vec<_> = g.edges().collect();
    go(&edges, &mut vec![false; g.vertex_count()])
}

/// Calls `f` with every `size`-subset of `0..total`, as a sorted index list.
fn for_each_subset(total: usize, size: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(start: usize, total: usize, size: usize, chosen: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if chosen.len() == size {
            f(chosen);
            return;
        }
        let need = size - chosen.len();
        for x in start..=total.saturating_sub(need) {
            if total - x < need {
                break;
            }
            chosen.push(x);
            go(x + 1, total, size, chosen, f);
            chosen.pop();
        }
    }
    go(0, total, size, &mut Vec::with_capacity(size), f);
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Union-find over the chosen edges; returns the component count, whether
/// any edge closed a cycle, and the component root of every vertex.
fn components(n: usize, edges: &[(usize, usize)], chosen: &[usize]) -> (usize, bool, Vec<usize>) {
    let mut parent: Vec<usize> = (0..n).collect();
    let mut count = n;
    let mut cyclic = false;
    for &e in chosen {
        let (a, b) = edges[e];
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            cyclic = true;
        } else {
            parent[ra] = rb;
            count -= 1;
        }
    }
    let roots = (0..n).map(|v| find(&mut parent, v)).collect();
    (count, cyclic, roots)
}

fn complete_edges(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            out.push((u, v));
        }
    }
    out
}

/// Every labeled connected unicyclic graph on `n` vertices, passed to `f`.
pub fn for_each_labeled_unicyclic(n: usize, f: &mut dyn FnMut(&Graph)) {
    let all = complete_edges(n);
    for_each_subset(all.len(), n, &mut |chosen| {
        let (count, _, _) = components(n, &all, chosen);
        if count == 1 {
            let edges: Vec<_> = chosen.iter().map(|&e| all[e]).collect();
            f(&Graph::from_edges(n, &edges).unwrap());
        }
    });
}

/// Number of labeled connected unicyclic graphs on `n` vertices.
pub fn labeled_unicyclic_count(n: usize) -> u64 {
    let all = complete_edges(n);
    let mut total = 0;
    for_each_subset(all.len(), n, &mut |chosen| {
        if components(n, &all, chosen).0 == 1 {
            total += 1;
        }
    });
    total
}

/// Number of bijections `V(g) -> V(h)` preserving adjacency.
pub fn isomorphism_count(g: &Graph, h: &Graph) -> u64 {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return 0;
    }
    let mut degrees_g: Vec<_> = (0..n).map(|v| g.degree(v)).collect();
    let mut degrees_h: Vec<_> = (0..n).map(|v| h.degree(v)).collect();
    degrees_g.sort_unstable();
    degrees_h.sort_unstable();
    if degrees_g != degrees_h {
        return 0;
    }
    fn go(g: &Graph, h: &Graph, v: usize, image: &mut Vec<usize>, taken: &mut [bool]) -> u64 {
        let n = g.vertex_count();
        if v == n {
            return 1;
        }
        let mut total = 0;
        for w in 0..n {
            if taken[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            taken[w] = true;
            image.push(w);
            total += go(g, h, v + 1, image, taken);
            image.pop();
            taken[w] = false;
        }
        total
    }
    go(g, h, 0, &mut Vec::with_capacity(n), &mut vec![false; n])
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism_count(g, h) > 0
}

pub fn automorphism_count(g: &Graph) -> u64 {
    isomorphism_count(g, g)
}

/// Some isomorphism `g -> h`, optionally forced to send `pin.0` to `pin.1`.
///
/// Vertices of `g` are matched in breadth-first order so every vertex after
/// the first has an already-placed neighbour constraining its image.
pub fn find_isomorphism(g: &Graph, h: &Graph, pin: Option<(usize, usize)>) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    if n == 0 {
        return Some(Vec::new());
    }
    let start = pin.map_or(0, |p| p.0);
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for root in std::iter::once(start).chain(0..n) {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        order.push(root);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
    }
    fn go(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        pos: usize,
        image: &mut [usize],
        taken: &mut [bool],
        pin: Option<(usize, usize)>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let v = order[pos];
        let n = g.vertex_count();
        let placed_neighbor = g.neighbors(v).iter().find(|&&u| image[u] != usize::MAX).copied();
        let candidates: Vec<usize> = match (pin, placed_neighbor) {
            (Some((a, b)), _) if a == v => vec![b],
            (_, Some(u)) => h.neighbors(image[u]).to_vec(),
            _ => (0..n).collect(),
        };
        for w in candidates {
            if taken[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            let consistent = order[..pos]
                .iter()
                .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], w));
            if !consistent {
                continue;
            }
            image[v] = w;
            taken[w] = true;
            if go(g, h, order, pos + 1, image, taken, pin) {
                return true;
            }
            image[v] = usize::MAX;
            taken[w] = false;
        }
        false
    }
    let mut image = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    go(g, h, &order, 0, &mut image, &mut taken, pin).then_some(image)
}

/// Whether an isomorphism `g -> h` can send `a` to `b`.
pub fn isomorphic_pinned(g: &Graph, a: usize, h: &Graph, b: usize) -> bool {
    find_isomorphism(g, h, Some((a, b))).is_some()
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// `sum n!/|Aut(G)|` over the given classes; equals the labeled count when
/// the classes are complete and pairwise non-isomorphic.
pub fn orbit_sum<'a>(classes: impl IntoIterator<Item = &'a Graph>) -> u64 {
    classes
        .into_iter()
        .map(|g| factorial(g.vertex_count()) / automorphism_count(g))
        .sum()
}

/// Least adjacency bit string over all vertex permutations.
pub fn permutation_canonical_form(g: &Graph) -> Vec<bool> {
    least_form(g, None)
}

/// Least adjacency bit string over permutations that keep `root` first.
pub fn rooted_canonical_form(g: &Graph, root: usize) -> Vec<bool> {
    least_form(g, Some(root))
}

fn least_form(g: &Graph, root: Option<usize>) -> Vec<bool> {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).filter(|&v| Some(v) != root).collect();
    let mut best: Option<Vec<bool>> = None;
    let bits = |perm: &[usize]| -> Vec<bool> {
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for a in 0..n {
            for b in a + 1..n {
                // Negated so that the minimum puts edges first.
                out.push(!g.has_edge(perm[a], perm[b]));
            }
        }
        out
    };
    heap_permutations(&mut perm, &mut |p| {
        let full: Vec<usize> = root.into_iter().chain(p.iter().copied()).collect();
        let b = bits(&full);
        if best.as_ref().is_none_or(|cur| b < *cur) {
            best = Some(b);
        }
    });
    best.unwrap_or_default()
}

fn heap_permutations(a: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    let n = a.len();
    let mut c = vec![0; n];
    f(a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Isomorphism classes of labeled unicyclic graphs on `n` vertices, by
/// permutation canonical form, with each class's matching number (oracle).
pub fn unicyclic_classes_brute(n: usize) -> Vec<(Vec<bool>, usize)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for_each_labeled_unicyclic(n, &mut |g| {
        let form = permutation_canonical_form(g);
        if seen.insert(form.clone()) {
            out.push((form, matching_number_brute(g)));
        }
    });
    out.sort();
    out
}

/// Rooted-isomorphism classes of trees on `s` vertices, via labeled trees
/// with every choice of root and a root-fixing permutation canonical form.
pub fn rooted_tree_classes_brute(s: usize) -> usize {
    if s == 1 {
        return 1;
    }
    let all = complete_edges(s);
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    for_each_subset(all.len(), s - 1, &mut |chosen| {
        let (count, _, _) = components(s, &all, chosen);
        if count != 1 {
            return;
        }
        let edges: Vec<_> = chosen.iter().map(|&e| all[e]).collect();
        let t = Graph::from_edges(s, &edges).unwrap();
        for root in 0..s {
            seen.insert(rooted_canonical_form(&t, root));
        }
    });
    seen.len()
}

/// Spanning trees counted edge subset by edge subset.
pub fn spanning_tree_count_brute(g: &Graph) -> BigInt {
    let n = g.vertex_count();
    let edges: Vec<_> = g.edges().collect();
    let mut total = 0u64;
    if n == 0 {
        return BigInt::from(0);
    }
    for_each_subset(edges.len(), n - 1, &mut |chosen| {
        if components(n, &edges, chosen).0 == 1 {
            total += 1;
        }
    });
    BigInt::from(total)
}

/// Two-tree spanning forests with `u` and `v` in different trees.
pub fn separating_forest_count_brute(g: &Graph, u: usize, v: usize) -> BigInt {
    let n = g.vertex_count();
    let edges: Vec<_> = g.edges().collect();
    let mut total = 0u64;
    if n < 2 {
        return BigInt::from(0);
    }
    for_each_subset(edges.len(), n - 2, &mut |chosen| {
        let (count, cyclic, roots) = components(n, &edges, chosen);
        if count == 2 && !cyclic && roots[u] != roots[v] {
            total += 1;
        }
    });
    BigInt::from(total)
}

/// Effective resistance as separating forests over spanning trees, all counted by brute force.
pub fn resistance_brute(g: &Graph, u: usize, v: usize) -> Rational {
    if u == v {
        return Rational::zero();
    }
    Rational::new(separating_forest_count_brute(g, u, v), spanning_tree_count_brute(g))
        .expect("connected graph has a spanning tree")
}

/// Matching number via the fast path when supported, for side-by-side checks.
pub fn matching_pair(g: &Graph) -> (Option<usize>, usize) {
    (matching_number(g).ok().map(|r| r.size), matching_number_brute(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn small_counts() {
        assert_eq!(labeled_unicyclic_count(3), 1);
        assert_eq!(labeled_unicyclic_count(4), 15);
        assert_eq!(labeled_unicyclic_count(5), 222);
        assert_eq!(unicyclic_classes_brute(4).len(), 2);
        assert_eq!(unicyclic_classes_brute(5).len(), 5);
    }

    #[test]
    fn automorphisms() {
        assert_eq!(automorphism_count(&cycle(5)), 10);
        assert_eq!(automorphism_count(&Graph::empty(3)), 6);
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(automorphism_count(&p3), 2);
        assert!(are_isomorphic(&p3, &Graph::from_edges(3, &[(0, 2), (1, 2)]).unwrap()));
        assert!(!are_isomorphic(&p3, &cycle(3)));
    }

    #[test]
    fn pinned_search() {
        let c6 = cycle(6);
        let map = find_isomorphism(&c6, &c6.relabel(&[3, 5, 1, 0, 2, 4]), None).unwrap();
        assert_eq!(map.len(), 6);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(isomorphic_pinned(&p4, 0, &p4, 3));
        assert!(!isomorphic_pinned(&p4, 0, &p4, 1));
        let t = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert!(isomorphic_pinned(&t, 1, &t, 2));
        assert!(!isomorphic_pinned(&t, 0, &t, 1));
        assert!(find_isomorphism(&t, &cycle(4), None).is_none());
    }

    #[test]
    fn rooted_classes() {
        assert_eq!(
            (1..=5).map(rooted_tree_classes_brute).collect::<Vec<_>>(),
            vec![1, 1, 2, 4, 9]
        );
    }

    #[test]
    fn brute_resistance() {
        let c3 = cycle(3);
        assert_eq!(spanning_tree_count_brute(&c3), BigInt::from(3));
        assert_eq!(separating_forest_count_brute(&c3, 0, 1), BigInt::from(2));
        assert_eq!(resistance_brute(&c3, 0, 1), Rational::frac(2, 3));
        assert_eq!(resistance_brute(&cycle(4), 0, 2), Rational::one());
    }

    #[test]
    fn brute_matching() {
        assert_eq!(matching_number_brute(&cycle(6)), 3);
        assert_eq!(matching_number_brute(&cycle(7)), 3);
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert_eq!(matching_pair(&star), (Some(1), 1));
    }
}

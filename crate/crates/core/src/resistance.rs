//! Effective resistance and Kirchhoff indices.
//!
//! Three independent routes are provided:
//!
//! * [`resistance_laplacian`]: exact rational Gaussian elimination on the
//!   grounded Laplacian with a unit current injected at `u` and drawn at `v`;
//! * [`resistance_forest`]: the spanning-forest ratio `N(u,v) / T` from the
//!   matrix-tree theorem, evaluated with fraction-free integer determinants;
//! * [`resistance_unicyclic`]: the series/parallel decomposition of a
//!   unicyclic graph into branch paths and one cycle arc.
//!
//! The first two are oracles; batch work goes through the third.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::graph::{decompose_unicyclic, Graph, GraphError, UnicyclicDecomposition};
use crate::rational::{Rational, RationalError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResistanceError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("arc length {d} exceeds cycle length {n}")]
    ArcTooLong { n: usize, d: usize },
    #[error("malformed resistance matrix: {0}")]
    Malformed(String),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

fn require_connected(g: &Graph) -> Result<(), ResistanceError> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(GraphError::Disconnected.into())
    }
}

/// Dense Laplacian `D - A` with rational entries, skipping row and column `ground`.
fn grounded_laplacian(g: &Graph, ground: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let index: Vec<usize> = (0..g.vertex_count()).filter(|&v| v != ground).collect();
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in index.iter().enumerate() {
        pos[v] = i;
    }
    let m = index.len();
    let mut lap = vec![vec![Rational::zero(); m]; m];
    for (i, &v) in index.iter().enumerate() {
        lap[i][i] = Rational::integer(g.degree(v) as i64);
        for &w in g.neighbors(v) {
            if w != ground {
                lap[i][pos[w]] = Rational::integer(-1);
            }
        }
    }
    (lap, pos)
}

/// Solves `a x = b` by Gaussian elimination with exact pivoting on nonzero entries.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Result<Vec<Rational>, ResistanceError> {
    let m = b.len();
    for col in 0..m {
        let pivot = (col..m)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(GraphError::Disconnected)?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = a[col][col].recip()?;
        for r in col + 1..m {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..m {
                let delta = &factor * &a[col][c];
                a[r][c] -= &delta;
            }
            let delta = &factor * &b[col];
            b[r] -= &delta;
        }
    }
    let mut x = vec![Rational::zero(); m];
    for r in (0..m).rev() {
        let mut acc = b[r].clone();
        for c in r + 1..m {
            acc -= &(&a[r][c] * &x[c]);
        }
        x[r] = acc.checked_div(&a[r][r])?;
    }
    Ok(x)
}

/// Effective resistance by solving the grounded Laplacian system, ground = vertex 0.
///
/// Returns 0 when `u == v`.
pub fn resistance_laplacian(g: &Graph, u: usize, v: usize) -> Result<Rational, ResistanceError> {
    resistance_laplacian_grounded(g, u, v, 0)
}

/// [`resistance_laplacian`] with an explicit ground vertex.
pub fn resistance_laplacian_grounded(
    g: &Graph,
    u: usize,
    v: usize,
    ground: usize,
) -> Result<Rational, ResistanceError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.check_vertex(ground)?;
    require_connected(g)?;
    if u == v {
        return Ok(Rational::zero());
    }
    let (lap, pos) = grounded_laplacian(g, ground);
    let mut rhs = vec![Rational::zero(); lap.len()];
    if u != ground {
        rhs[pos[u]] = Rational::one();
    }
    if v != ground {
        rhs[pos[v]] = Rational::integer(-1);
    }
    let x = solve(lap, rhs)?;
    let potential = |w: usize| if w == ground { Rational::zero() } else { x[pos[w]].clone() };
    Ok(potential(u) - potential(v))
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn integer_determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let m = a.len();
    if m == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..m - 1 {
        if a[k][k].is_zero() {
            match (k + 1..m).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..m {
            for j in k + 1..m {
                let value = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = value;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[m - 1][m - 1]
}

fn laplacian_minor(g: &Graph, removed: &[usize]) -> Vec<Vec<BigInt>> {
    let index: Vec<usize> = (0..g.vertex_count()).filter(|v| !removed.contains(v)).collect();
    index
        .iter()
        .map(|&a| {
            index
                .iter()
                .map(|&b| {
                    if a == b {
                        BigInt::from(g.degree(a))
                    } else if g.has_edge(a, b) {
                        BigInt::from(-1)
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// Number of spanning trees (any cofactor of the Laplacian).
pub fn spanning_tree_count(g: &Graph) -> BigInt {
    if g.vertex_count() == 0 {
        return BigInt::zero();
    }
    integer_determinant(laplacian_minor(g, &[0]))
}

/// Number of two-component spanning forests separating `u` from `v`
/// (the Laplacian minor with rows and columns `u`, `v` deleted).
pub fn separating_forest_count(g: &Graph, u: usize, v: usize) -> BigInt {
    integer_determinant(laplacian_minor(g, &[u, v]))
}

/// Effective resistance as `N(u,v) / T` over spanning forests and trees.
pub fn resistance_forest(g: &Graph, u: usize, v: usize) -> Result<Rational, ResistanceError> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    require_connected(g)?;
    if u == v {
        return Ok(Rational::zero());
    }
    let trees = spanning_tree_count(g);
    let forests = separating_forest_count(g, u, v);
    Ok(Rational::new(forests, trees)?)
}

/// Resistance across an arc of `d` edges on a cycle of `n` vertices:
/// the two arcs `d` and `n - d` in parallel.
pub fn r_cycle(n: usize, d: usize) -> Result<Rational, ResistanceError> {
    if n < 3 {
        return Err(ResistanceError::CycleTooShort(n));
    }
    if d > n {
        return Err(ResistanceError::ArcTooLong { n, d });
    }
    Ok(Rational::frac((d * (n - d)) as i64, n as i64))
}

/// Resistance sum from one vertex of `C_n`: `(n² - 1) / 6`.
pub fn kfv_cycle(n: usize) -> Result<Rational, ResistanceError> {
    if n < 3 {
        return Err(ResistanceError::CycleTooShort(n));
    }
    let n = n as i64;
    Ok(Rational::frac(n * n - 1, 6))
}

/// Kirchhoff index of `C_n`: `(n³ - n) / 12`.
pub fn kf_cycle(n: usize) -> Result<Rational, ResistanceError> {
    if n < 3 {
        return Err(ResistanceError::CycleTooShort(n));
    }
    let n = n as i64;
    Ok(Rational::frac(n * n * n - n, 12))
}

fn cycle_gap(d: &UnicyclicDecomposition, a: usize, b: usize) -> usize {
    let k = d.cycle_length();
    let (i, j) = (d.branch[a], d.branch[b]);
    let gap = i.abs_diff(j);
    gap.min(k - gap)
}

/// Effective resistance from the cycle/branch decomposition.
///
/// Same branch: the unique tree path. Different branches: path to the root,
/// the cycle arc, and the path out of the other root, in series.
pub fn resistance_unicyclic(d: &UnicyclicDecomposition, u: usize, v: usize) -> Rational {
    if d.branch[u] == d.branch[v] {
        return Rational::integer(d.branch_distance(u, v) as i64);
    }
    let k = d.cycle_length() as i64;
    let gap = cycle_gap(d, u, v) as i64;
    let tree = (d.depth[u] + d.depth[v]) as i64;
    Rational::frac(tree * k + gap * (k - gap), k)
}

/// All-pairs resistances of a unicyclic graph, scaled by the cycle length.
///
/// Every resistance in a unicyclic graph with cycle length `k` is an integer
/// multiple of `1/k`, so the table is integral.
#[derive(Debug, Clone)]
pub struct UnicyclicResistance {
    n: usize,
    k: i64,
    scaled: Vec<i64>,
}

impl UnicyclicResistance {
    pub fn new(d: &UnicyclicDecomposition) -> Self {
        let n = d.vertex_count();
        let k = d.cycle_length() as i64;
        let mut scaled = vec![0i64; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let value = if d.branch[u] == d.branch[v] {
                    d.branch_distance(u, v) as i64 * k
                } else {
                    let gap = cycle_gap(d, u, v) as i64;
                    (d.depth[u] + d.depth[v]) as i64 * k + gap * (k - gap)
                };
                scaled[u * n + v] = value;
                scaled[v * n + u] = value;
            }
        }
        UnicyclicResistance { n, k, scaled }
    }

    pub fn from_graph(g: &Graph) -> Result<Self, GraphError> {
        Ok(Self::new(&decompose_unicyclic(g)?))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Common denominator of every entry (the cycle length).
    pub fn denominator(&self) -> i64 {
        self.k
    }

    pub fn scaled(&self, u: usize, v: usize) -> i64 {
        self.scaled[u * self.n + v]
    }

    pub fn get(&self, u: usize, v: usize) -> Rational {
        Rational::frac(self.scaled(u, v), self.k)
    }

    pub fn vertex_sum_scaled(&self, u: usize) -> i64 {
        self.scaled[u * self.n..(u + 1) * self.n].iter().sum()
    }

    pub fn vertex_sum(&self, u: usize) -> Rational {
        Rational::frac(self.vertex_sum_scaled(u), self.k)
    }

    pub fn kirchhoff_scaled(&self) -> i64 {
        self.scaled.iter().sum::<i64>() / 2
    }

    pub fn kirchhoff(&self) -> Rational {
        Rational::frac(self.kirchhoff_scaled(), self.k)
    }
}

/// Kirchhoff index of a unicyclic graph through the decomposition.
pub fn kirchhoff_index_unicyclic(g: &Graph) -> Result<Rational, GraphError> {
    Ok(UnicyclicResistance::from_graph(g)?.kirchhoff())
}

/// Symmetric table of pairwise resistances with zero diagonal.
#[derive(Clone, PartialEq, Eq)]
pub struct ResistanceMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl ResistanceMatrix {
    /// Uses the decomposition for unicyclic graphs and the grounded Laplacian otherwise.
    pub fn compute(g: &Graph) -> Result<Self, ResistanceError> {
        require_connected(g)?;
        if g.is_unicyclic() {
            Ok(Self::unicyclic(&decompose_unicyclic(g)?))
        } else {
            Self::laplacian(g)
        }
    }

    pub fn unicyclic(d: &UnicyclicDecomposition) -> Self {
        let table = UnicyclicResistance::new(d);
        let n = table.vertex_count();
        let mut entries = Vec::with_capacity(n * n);
        for u in 0..n {
            for v in 0..n {
                entries.push(table.get(u, v));
            }
        }
        ResistanceMatrix { n, entries }
    }

    /// Inverts the Laplacian grounded at vertex 0 and reads
    /// `r(u,v) = M[u][u] + M[v][v] - 2 M[u][v]`.
    pub fn laplacian(g: &Graph) -> Result<Self, ResistanceError> {
        require_connected(g)?;
        let n = g.vertex_count();
        if n == 0 {
            return Ok(ResistanceMatrix { n, entries: Vec::new() });
        }
        let (lap, pos) = grounded_laplacian(g, 0);
        let m = lap.len();
        let mut inverse_cols = Vec::with_capacity(m);
        for c in 0..m {
            let mut e = vec![Rational::zero(); m];
            e[c] = Rational::one();
            inverse_cols.push(solve(lap.clone(), e)?);
        }
        let entry = |a: usize, b: usize| -> Rational {
            if a == 0 || b == 0 {
                Rational::zero()
            } else {
                inverse_cols[pos[b]][pos[a]].clone()
            }
        };
        let mut entries = vec![Rational::zero(); n * n];
        for u in 0..n {
            for v in u + 1..n {
                let r = entry(u, u) + entry(v, v) - Rational::integer(2) * entry(u, v);
                entries[u * n + v] = r.clone();
                entries[v * n + u] = r;
            }
        }
        Ok(ResistanceMatrix { n, entries })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> &Rational {
        &self.entries[u * self.n + v]
    }

    pub fn vertex_sum(&self, u: usize) -> Rational {
        self.entries[u * self.n..(u + 1) * self.n].iter().sum()
    }

    pub fn kirchhoff(&self) -> Rational {
        let mut total = Rational::zero();
        for u in 0..self.n {
            for v in u + 1..self.n {
                total += self.get(u, v);
            }
        }
        total
    }

    /// `n` on the first line, then row `u` of the strict upper triangle on
    /// each following line for `u = 0..n-2`.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for u in 0..self.n.saturating_sub(1) {
            let row: Vec<String> = (u + 1..self.n).map(|v| self.get(u, v).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self, ResistanceError> {
        let malformed = |what: &str| ResistanceError::Malformed(what.to_string());
        let mut lines = text.lines();
        let n: usize = lines
            .next()
            .ok_or_else(|| malformed("empty input"))?
            .trim()
            .parse()
            .map_err(|_| malformed("vertex count"))?;
        let mut entries = vec![Rational::zero(); n * n];
        for u in 0..n.saturating_sub(1) {
            let line = lines.next().ok_or_else(|| malformed("missing row"))?;
            let row: Vec<&str> = line.split_whitespace().collect();
            if row.len() != n - u - 1 {
                return Err(malformed("row length"));
            }
            for (offset, token) in row.into_iter().enumerate() {
                let v = u + 1 + offset;
                let r: Rational = token.parse()?;
                entries[u * n + v] = r.clone();
                entries[v * n + u] = r;
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(malformed("trailing data"));
        }
        Ok(ResistanceMatrix { n, entries })
    }
}

impl fmt::Debug for ResistanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `Kf(G)`: resistance summed over unordered vertex pairs.
pub fn kirchhoff_index(g: &Graph) -> Result<Rational, ResistanceError> {
    require_connected(g)?;
    if g.is_unicyclic() {
        return Ok(kirchhoff_index_unicyclic(g)?);
    }
    Ok(ResistanceMatrix::laplacian(g)?.kirchhoff())
}

/// `Kf_G(u)`: resistances from `u` to every vertex.
pub fn kirchhoff_vertex_sum(g: &Graph, u: usize) -> Result<Rational, ResistanceError> {
    g.check_vertex(u)?;
    Ok(kirchhoff_vertex_sums(g)?.swap_remove(u))
}

pub fn kirchhoff_vertex_sums(g: &Graph) -> Result<Vec<Rational>, ResistanceError> {
    require_connected(g)?;
    if g.is_unicyclic() {
        let table = UnicyclicResistance::from_graph(g)?;
        return Ok((0..g.vertex_count()).map(|u| table.vertex_sum(u)).collect());
    }
    let matrix = ResistanceMatrix::laplacian(g)?;
    Ok((0..g.vertex_count()).map(|u| matrix.vertex_sum(u)).collect())
}

/// Kirchhoff index of `G` and `H` glued at `u ∈ G`, `w ∈ H`, from the
/// parts' indices, vertex sums and orders.
pub fn kf_identified(
    kf_g: &Rational,
    kf_h: &Rational,
    kf_g_u: &Rational,
    kf_h_w: &Rational,
    size_g: usize,
    size_h: usize,
) -> Rational {
    kf_g + kf_h
        + Rational::integer(size_h as i64 - 1) * kf_g_u
        + Rational::integer(size_g as i64 - 1) * kf_h_w
}

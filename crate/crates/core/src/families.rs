//! Named unicyclic families and their closed-form invariants.
//!
//! `U(k,t,i,j)` is built from the cycle `0..k` by hanging a pendant on each of
//! the first `t` cycle vertices, then `i` pendants and `j` two-vertex paths
//! on a central vertex. Labels:
//!
//! * pendant `k + s` hangs on cycle vertex `s`, for `s < t`;
//! * the central vertex is `(t - 1) / 2` when `t >= 1`, else cycle vertex `0`;
//! * the `i` extra pendants are `k + t .. k + t + i`;
//! * path `b` is `k+t+i+2b` (adjacent to the centre) then `k+t+i+2b+1`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::enumeration::canonical_code;
use crate::graph::{Graph, GraphError};
use crate::rational::Rational;
use crate::resistance::{kirchhoff_vertex_sums, r_cycle, ResistanceError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameters: {0}")]
    Range(String),
    #[error("malformed family spec {0:?}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Resistance(#[from] ResistanceError),
}

fn range(ok: bool, msg: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if ok {
        Ok(())
    } else {
        Err(FamilyError::Range(msg()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Ukt { k: usize, t: usize, i: usize, j: usize },
    Unm { n: usize, m: usize },
}

impl FamilySpec {
    pub fn ukt(k: usize, t: usize, i: usize, j: usize) -> Self {
        FamilySpec::Ukt { k, t, i, j }
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            FamilySpec::Cycle(n) | FamilySpec::Path(n) => n,
            FamilySpec::Ukt { k, t, i, j } => k + t + i + 2 * j,
            FamilySpec::Unm { n, .. } => n,
        }
    }

    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilySpec::Cycle(n) => make_cycle(n),
            FamilySpec::Path(n) => make_path(n),
            FamilySpec::Ukt { k, t, i, j } => make_ukt(k, t, i, j),
            FamilySpec::Unm { n, m } => make_unm(n, m),
        }
    }

    /// `Unm(n,m)` rewritten as the `U(k,t,i,j)` it abbreviates.
    pub fn expand(&self) -> FamilySpec {
        match *self {
            FamilySpec::Unm { n, m } if m >= 3 && 2 * m <= n => FamilySpec::ukt(5, 1, n - 2 * m, m - 3),
            other => other,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Path(n) => write!(f, "P{n}"),
            FamilySpec::Ukt { k, t, i, j } => write!(f, "U({k},{t},{i},{j})"),
            FamilySpec::Unm { n, m } => write!(f, "Unm({n},{m})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || FamilyError::Malformed(s.to_string());
        let args = |body: &str, counts: &[usize]| -> Result<Vec<usize>, FamilyError> {
            let inner = body
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(bad)?;
            let vals: Vec<usize> = inner
                .split(',')
                .map(|p| p.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_, _>>()?;
            if !counts.contains(&vals.len()) {
                return Err(bad());
            }
            Ok(vals)
        };
        if let Some(rest) = text.strip_prefix("Unm") {
            let v = args(rest, &[2])?;
            return Ok(FamilySpec::Unm { n: v[0], m: v[1] });
        }
        if let Some(rest) = text.strip_prefix('U') {
            // `U(k,t)` abbreviates `U(k,t,0,0)`.
            let v = args(rest, &[2, 4])?;
            let (i, j) = if v.len() == 4 { (v[2], v[3]) } else { (0, 0) };
            return Ok(FamilySpec::ukt(v[0], v[1], i, j));
        }
        let number = |rest: &str| {
            if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            rest.parse::<usize>().map_err(|_| bad())
        };
        if let Some(rest) = text.strip_prefix('C') {
            return Ok(FamilySpec::Cycle(number(rest)?));
        }
        if let Some(rest) = text.strip_prefix('P') {
            return Ok(FamilySpec::Path(number(rest)?));
        }
        Err(bad())
    }
}

pub fn make_cycle(n: usize) -> Result<Graph, FamilyError> {
    range(n >= 3, || format!("cycle needs n >= 3, got {n}"))?;
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn make_path(n: usize) -> Result<Graph, FamilyError> {
    range(n >= 1, || "path needs n >= 1".to_string())?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Graph::from_edges(n, &edges)?)
}

/// Vertex carrying the extra pendants and paths of `U(k,t,i,j)`.
pub fn central_vertex(t: usize) -> usize {
    if t == 0 {
        0
    } else {
        (t - 1) / 2
    }
}

pub fn make_ukt(k: usize, t: usize, i: usize, j: usize) -> Result<Graph, FamilyError> {
    range(k >= 3 && t <= k, || format!("U({k},{t},{i},{j}) needs k >= 3 and t <= k"))?;
    let mut g = make_cycle(k)?;
    for s in 0..t {
        let v = g.add_vertex();
        g.add_edge(s, v)?;
    }
    let c = central_vertex(t);
    for _ in 0..i {
        let v = g.add_vertex();
        g.add_edge(c, v)?;
    }
    for _ in 0..j {
        let a = g.add_vertex();
        let b = g.add_vertex();
        g.add_edge(c, a)?;
        g.add_edge(a, b)?;
    }
    Ok(g)
}

/// `U(5,1,n-2m,m-3)`.
pub fn make_unm(n: usize, m: usize) -> Result<Graph, FamilyError> {
    check_unm(n, m)?;
    make_ukt(5, 1, n - 2 * m, m - 3)
}

fn check_unm(n: usize, m: usize) -> Result<(), FamilyError> {
    range(m >= 3 && 2 * m <= n, || format!("Unm({n},{m}) needs 3 <= m <= n/2"))
}

fn check_kt(k: usize, t: usize, min_t: usize) -> Result<(), FamilyError> {
    range(k >= 3 && t >= min_t && t <= k, || {
        format!("(k,t) = ({k},{t}) needs k >= 3 and {min_t} <= t <= k")
    })
}

fn q(n: i64) -> Rational {
    Rational::integer(n)
}

/// Sum of cycle resistances over pairs of `t` consecutive vertices on `C_k`.
pub fn sigma_ukt(k: usize, t: usize) -> Result<Rational, FamilyError> {
    check_kt(k, t, 0)?;
    let (k, t) = (k as i64, t as i64);
    Ok(Rational::frac(t * (t - 1) * (t + 1) * (2 * k - t), 12 * k))
}

/// Sum of cycle resistances over pairs of an arbitrary vertex set `S` on `C_k`.
pub fn sigma_placement(k: usize, placement: &[usize]) -> Result<Rational, FamilyError> {
    let mut total = Rational::zero();
    for (a, &u) in placement.iter().enumerate() {
        range(u < k, || format!("vertex {u} not on C{k}"))?;
        for &v in &placement[a + 1..] {
            total += r_cycle(k, u.abs_diff(v))?;
        }
    }
    Ok(total)
}

/// Vertex sum at the central vertex of `U(k,t)`.
pub fn f_kt(k: usize, t: usize) -> Result<Rational, FamilyError> {
    check_kt(k, t, 1)?;
    let (k, t) = (k as i64, t as i64);
    let poly = if t % 2 == 1 {
        q(2 * k * k + 3 * t * t + 12 * t - 5) - Rational::frac(t * t * t - t, k)
    } else {
        q(2 * k * k + 3 * t * t + 12 * t - 2) - Rational::frac(t * t * t + 2 * t, k)
    };
    Ok(poly * Rational::frac(1, 12))
}

/// Lower bound on the Kirchhoff index of cycle-plus-`t`-pendant graphs; tight at `U(k,t)`.
pub fn ukt_lower_bound(k: usize, t: usize) -> Result<Rational, FamilyError> {
    check_kt(k, t, 1)?;
    let (k, t) = (k as i64, t as i64);
    let poly = q(k * k * k + 2 * k * k * t + 12 * k * t - k + 2 * t * t * t + 12 * t * t - 16 * t)
        + Rational::frac(t * t - t * t * t * t, k);
    Ok(poly * Rational::frac(1, 12))
}

/// Minimum Kirchhoff index of an `n`-vertex unicyclic graph with girth `k`.
pub fn snk_lower_bound(n: usize, k: usize) -> Result<Rational, FamilyError> {
    range(k >= 3 && k < n, || format!("(n,k) = ({n},{k}) needs 3 <= k <= n-1"))?;
    let (n, k) = (n as i64, k as i64);
    Ok(Rational::frac(
        -k * k * k + 2 * n * k * k - (12 * n - 13) * k + 12 * n * n - 14 * n,
        12,
    ))
}

pub fn kf_unm_formula(n: usize, m: usize) -> Result<Rational, FamilyError> {
    check_unm(n, m)?;
    let (n, m) = (n as i64, m as i64);
    Ok(q(n * n + n * m - 5 * n - 3 * m + 4))
}

/// The `(n, m)` region a prediction was read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Applicability {
    pub m: (usize, Option<usize>),
    pub n: (usize, Option<usize>),
}

impl Applicability {
    fn cell(n: (usize, Option<usize>), m: (usize, Option<usize>)) -> Self {
        Applicability { m, n }
    }

    /// Whether the region is an open-ended tail rather than a bounded cell.
    pub fn is_tail(&self) -> bool {
        self.n.1.is_none() || self.m.1.is_none()
    }
}

impl fmt::Display for Applicability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |name: &str, (lo, hi): (usize, Option<usize>)| match hi {
            Some(h) if h == lo => format!("{name} = {lo}"),
            Some(h) => format!("{lo} <= {name} <= {h}"),
            None => format!("{name} >= {lo}"),
        };
        write!(f, "{}, {}", part("m", self.m), part("n", self.n))
    }
}

/// Claimed minimizers of the Kirchhoff index over a class and the minimum value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalPrediction {
    pub minimizers: Vec<FamilySpec>,
    pub value: Rational,
    pub applicability: Applicability,
}

fn exact(n: usize) -> (usize, Option<usize>) {
    (n, Some(n))
}

fn upto(lo: usize, hi: usize) -> (usize, Option<usize>) {
    (lo, Some(hi))
}

fn from(lo: usize) -> (usize, Option<usize>) {
    (lo, None)
}

/// Minimizers over unicyclic graphs on `2m` vertices with a perfect matching.
pub fn perfect_matching_prediction(m: usize) -> Result<ExtremalPrediction, FamilyError> {
    range(m >= 2, || format!("m >= 2 required, got {m}"))?;
    let mi = m as i64;
    let (minimizers, value, ms) = match m {
        2..=4 => (vec![FamilySpec::Cycle(2 * m)], Rational::frac(4 * mi * mi * mi - mi, 6), upto(2, 4)),
        5 => (vec![FamilySpec::ukt(8, 2, 0, 0)], Rational::frac(655, 8), exact(5)),
        6 => (vec![FamilySpec::ukt(8, 4, 0, 0)], Rational::frac(271, 2), exact(6)),
        7 => (vec![FamilySpec::ukt(7, 7, 0, 0)], q(203), exact(7)),
        _ => (
            vec![FamilySpec::Unm { n: 2 * m, m }],
            q(6 * mi * mi - 13 * mi + 4),
            from(8),
        ),
    };
    let ns = match ms.1 {
        Some(hi) if hi != ms.0 => upto(2 * ms.0, 2 * hi),
        Some(_) => exact(2 * m),
        None => from(16),
    };
    Ok(ExtremalPrediction {
        minimizers,
        value,
        applicability: Applicability::cell(ns, ms),
    })
}

/// Minimizers over unicyclic graphs with `n` vertices and matching number `m`.
pub fn extremal_prediction(n: usize, m: usize) -> Result<ExtremalPrediction, FamilyError> {
    range(m >= 2 && 2 * m <= n, || format!("(n,m) = ({n},{m}) needs 2 <= m <= n/2"))?;
    if n == 2 * m {
        return perfect_matching_prediction(m);
    }
    let (ni, mi) = (n as i64, m as i64);
    let u = FamilySpec::ukt;
    let unm = FamilySpec::Unm { n, m };
    let (minimizers, value, ns): (Vec<FamilySpec>, Rational, (usize, Option<usize>)) = match (m, n) {
        (2, 5) => (vec![FamilySpec::Cycle(5)], q(10), exact(5)),
        (2, 6..=11) => (vec![u(4, 1, n - 5, 0)], Rational::frac(2 * ni * ni - 5 * ni - 2, 2), upto(6, 11)),
        (2, 12) => (vec![u(3, 1, 8, 0), u(4, 1, 7, 0)], q(113), exact(12)),
        (2, _) => (vec![u(3, 1, n - 4, 0)], Rational::frac(3 * ni * ni - 8 * ni + 3, 3), from(13)),
        (3, 7) => (vec![FamilySpec::Cycle(7)], q(28), exact(7)),
        (3, _) => (vec![unm], q(ni * ni - 2 * ni - 5), from(8)),
        (4, 9) => (vec![u(7, 1, 1, 0), FamilySpec::Cycle(9)], q(60), exact(9)),
        (4, 10) => (vec![u(7, 1, 2, 0)], q(79), exact(10)),
        (4, 11) => (vec![u(6, 2, 3, 0), u(7, 1, 3, 0)], q(100), exact(11)),
        (4, 12..=13) => (vec![u(6, 2, n - 8, 0)], Rational::frac(3 * ni * ni - ni - 52, 3), upto(12, 13)),
        (4, 14) => (vec![unm, u(6, 2, 6, 0)], q(174), exact(14)),
        (4, _) => (vec![unm], q(ni * ni - ni - 8), from(15)),
        (5, 11..=13) => (vec![u(7, 3, n - 10, 0)], Rational::frac(7 * ni * ni + 12 * ni - 245, 7), upto(11, 13)),
        (5, 14) => (vec![unm, u(6, 2, 4, 1), u(7, 3, 4, 0)], q(185), exact(14)),
        (5, _) => (vec![unm], q(ni * ni - 11), from(15)),
        (6, 13) => (vec![u(8, 4, 1, 0)], Rational::frac(4 * ni * ni + 19 * ni - 262, 4), upto(12, 13)),
        (6, 14) => (vec![unm, u(6, 2, 2, 2), u(7, 3, 2, 1)], q(196), exact(14)),
        (6, _) => (vec![unm], q(ni * ni + ni - 14), from(15)),
        (7, _) => (vec![unm], q(ni * ni + 2 * ni - 17), from(15)),
        _ => (vec![unm], q(ni * ni + ni * mi - 5 * ni - 3 * mi + 4), from(16)),
    };
    let ms = if m >= 8 { from(8) } else { exact(m) };
    Ok(ExtremalPrediction {
        minimizers,
        value,
        applicability: Applicability::cell(ns, ms),
    })
}

/// `G0` with `count` pendants hung on a vertex minimizing the Kirchhoff
/// vertex sum (lowest id among ties). Returns the graph and every argmin vertex.
pub fn attach_pendants_at_min_vertex(g0: &Graph, count: usize) -> Result<(Graph, Vec<usize>), FamilyError> {
    let sums = kirchhoff_vertex_sums(g0)?;
    let best = sums.iter().min().cloned().ok_or(FamilyError::Range("empty graph".into()))?;
    let argmin: Vec<usize> = (0..sums.len()).filter(|&v| sums[v] == best).collect();
    let mut g = g0.clone();
    for _ in 0..count {
        let v = g.add_vertex();
        g.add_edge(argmin[0], v)?;
    }
    Ok((g, argmin))
}

/// Names a unicyclic graph as `C{n}` or the least `U(k,t,i,j)` it is
/// isomorphic to, preferring forms with `t >= 1`.
pub fn recognize(g: &Graph) -> Option<FamilySpec> {
    let code = canonical_code(g).ok()?;
    let n = g.vertex_count();
    let k = code.cycle_length;
    if k == n {
        return Some(FamilySpec::Cycle(n));
    }
    let mut best: Option<((bool, usize, usize, usize, usize), FamilySpec)> = None;
    for t in 0..=k.min(n - k) {
        let rest = n - k - t;
        for j in 0..=rest / 2 {
            let i = rest - 2 * j;
            let key = (t == 0, k, t, i, j);
            if best.as_ref().is_some_and(|(b, _)| *b <= key) {
                continue;
            }
            let candidate = make_ukt(k, t, i, j).ok()?;
            if canonical_code(&candidate).ok()? == code {
                best = Some((key, FamilySpec::ukt(k, t, i, j)));
            }
        }
    }
    best.map(|(_, spec)| spec)
}

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use super::data::{self, CandidateEntry, DataError};
use super::report::{CaseBuilder, CaseRecord, Status, Value, VerificationReport};
use crate::enumeration::{
    canonical_code, collect_unicyclic, count_by_matching_number, extremal_by_matching_number, extremal_search,
    par_map_slices, tree_table, CanonicalCode, EnumerationError, ExtremalResult, Invariant,
};
use crate::families::{
    attach_pendants_at_min_vertex, central_vertex, extremal_prediction, make_cycle, make_path, make_ukt, make_unm,
    perfect_matching_prediction, recognize, sigma_placement, sigma_ukt, snk_lower_bound, ukt_lower_bound, f_kt,
    ExtremalPrediction, FamilyError, FamilySpec,
};
use crate::graph::{decompose_unicyclic, identify_vertices, wiener_index, Graph, GraphError};
use crate::matching::{classify_2m_m, has_perfect_matching, matching_number, reduce_to_g0, MatchingError, PerfectClass};
use crate::oracle;
use crate::rational::Rational;
use crate::resistance::{
    kf_identified, kirchhoff_index, kirchhoff_vertex_sum, resistance_forest, ResistanceError, ResistanceMatrix,
    UnicyclicResistance,
};

pub const DEFAULT_SEED: u64 = 271_828;

/// Largest vertex count for closed-form identity checks beyond the window.
pub const IDENTITY_LIMIT: usize = 100;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Resistance(#[from] ResistanceError),
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error(transparent)]
    Data(#[from] DataError),
}

type Result<T> = std::result::Result<T, SuiteError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Kirchhoff indices of `U(k,t,0,j)` over the perfect-matching classes.
    Tables,
    /// Candidate families per matching number, cells and closed forms.
    CandidateTables,
    /// Minimizers over unicyclic graphs with a perfect matching.
    Perfect,
    /// Minimizers for every `(n, m)` cell.
    Extremal,
    /// `Kf_G(u) >= n+m-4` and its equality cases.
    VertexSum,
    /// Kirchhoff drop when deleting a pendant or a pendent `P2`.
    Deletion,
    /// Minimum per cycle length.
    Girth,
    /// Pair-resistance sums of pendant placements on a cycle.
    Sigma,
    /// Cycles with pendants attached straight to the cycle.
    CyclePendants,
    /// Reduction to the perfect-matching core `G0`.
    Reduction,
    /// Kirchhoff index of two graphs glued at a vertex.
    Merge,
    /// Kirchhoff versus Wiener minimizers.
    Wiener,
    /// Agreement of the resistance methods and metric properties.
    Resistance,
    /// Library results against brute-force oracles.
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::Tables,
        Suite::CandidateTables,
        Suite::Perfect,
        Suite::Extremal,
        Suite::VertexSum,
        Suite::Deletion,
        Suite::Girth,
        Suite::Sigma,
        Suite::CyclePendants,
        Suite::Reduction,
        Suite::Merge,
        Suite::Wiener,
        Suite::Resistance,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Tables => "tables",
            Suite::CandidateTables => "candidate-tables",
            Suite::Perfect => "perfect",
            Suite::Extremal => "extremal",
            Suite::VertexSum => "vertex-sum",
            Suite::Deletion => "deletion",
            Suite::Girth => "girth",
            Suite::Sigma => "sigma",
            Suite::CyclePendants => "cycle-pendants",
            Suite::Reduction => "reduction",
            Suite::Merge => "merge",
            Suite::Wiener => "wiener",
            Suite::Resistance => "resistance",
            Suite::Oracles => "oracles",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    /// Enumeration window (largest `n`) used when none is given; `None` for
    /// suites that do not enumerate.
    pub fn default_max_n(self, extended: bool) -> Option<usize> {
        let (base, ext) = match self {
            Suite::Perfect | Suite::Extremal | Suite::CyclePendants | Suite::Wiener => (12, 16),
            Suite::VertexSum | Suite::Deletion | Suite::Reduction => (10, 14),
            Suite::Girth => (9, 13),
            Suite::Resistance => (8, 9),
            Suite::Oracles => (10, 12),
            Suite::Tables | Suite::CandidateTables | Suite::Sigma | Suite::Merge => return None,
        };
        Some(if extended { ext } else { base })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    /// Overrides the suite's enumeration window.
    pub max_n: Option<usize>,
    pub extended: bool,
    pub seed: u64,
    /// Random instances for the merge suite.
    pub trials: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_n: None,
            extended: false,
            seed: DEFAULT_SEED,
            trials: 200,
        }
    }
}

impl SuiteOptions {
    fn window(&self, suite: Suite) -> usize {
        self.max_n.or(suite.default_max_n(self.extended)).unwrap_or(0)
    }
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut r = VerificationReport::new(suite.name(), opts.seed);
    let max_n = opts.window(suite);
    match suite {
        Suite::Tables => tables(&mut r)?,
        Suite::CandidateTables => candidate_tables(&mut r)?,
        Suite::Perfect => perfect(&mut r, max_n)?,
        Suite::Extremal => extremal(&mut r, max_n)?,
        Suite::VertexSum => vertex_sum(&mut r, max_n)?,
        Suite::Deletion => deletion(&mut r, max_n)?,
        Suite::Girth => girth(&mut r, max_n)?,
        Suite::Sigma => sigma(&mut r)?,
        Suite::CyclePendants => cycle_pendants(&mut r, max_n)?,
        Suite::Reduction => reduction(&mut r, max_n)?,
        Suite::Merge => merge(&mut r, opts.seed, opts.trials)?,
        Suite::Wiener => wiener(&mut r, max_n)?,
        Suite::Resistance => resistance(&mut r, max_n)?,
        Suite::Oracles => oracles(&mut r, max_n, opts.seed)?,
    }
    Ok(r)
}

/// Every suite in order, folded into one report named `all`.
pub fn run_all(opts: &SuiteOptions) -> Result<VerificationReport> {
    let mut all = VerificationReport::new("all", opts.seed);
    for suite in Suite::ALL {
        all.absorb(run_suite(suite, opts)?);
    }
    Ok(all)
}

/// Runs a suite by name; `all` runs every suite.
pub fn run_named(name: &str, opts: &SuiteOptions) -> Result<VerificationReport> {
    if name == "all" {
        return run_all(opts);
    }
    let suite = Suite::from_name(name).ok_or_else(|| SuiteError::UnknownSuite(name.to_string()))?;
    run_suite(suite, opts)
}

// ---------------------------------------------------------------- helpers

fn code_of(g: &Graph) -> Result<CanonicalCode> {
    Ok(canonical_code(g)?)
}

fn spec_code(spec: &FamilySpec) -> Result<CanonicalCode> {
    code_of(&spec.build()?)
}

/// Family name when the graph is a cycle or some `U(k,t,i,j)`, else its code.
fn name_of(g: &Graph) -> String {
    match recognize(g) {
        Some(spec) => spec.to_string(),
        None => canonical_code(g).map(|c| c.to_string()).unwrap_or_else(|_| "?".into()),
    }
}

fn set_text(items: impl IntoIterator<Item = String>) -> String {
    format!("{{{}}}", items.into_iter().collect::<Vec<_>>().join(", "))
}

fn q(v: i64) -> Rational {
    Rational::integer(v)
}

/// Running minimum that keeps every item attaining it.
#[derive(Debug, Clone)]
struct ArgMin<T> {
    value: Option<Rational>,
    items: Vec<T>,
}

impl<T> Default for ArgMin<T> {
    fn default() -> Self {
        ArgMin {
            value: None,
            items: Vec::new(),
        }
    }
}

impl<T> ArgMin<T> {
    fn offer(&mut self, value: Rational, item: T) {
        match self.value.as_ref().map(|v| value.cmp(v)) {
            Some(Ordering::Greater) => {}
            Some(Ordering::Equal) => self.items.push(item),
            _ => {
                self.value = Some(value);
                self.items = vec![item];
            }
        }
    }

    fn merge(&mut self, other: ArgMin<T>) {
        let Some(value) = other.value else { return };
        match self.value.as_ref().map(|v| value.cmp(v)) {
            Some(Ordering::Greater) => {}
            Some(Ordering::Equal) => self.items.extend(other.items),
            _ => {
                self.value = Some(value);
                self.items = other.items;
            }
        }
    }
}

/// Cycle `C_k` with one pendant on each listed cycle vertex (0-based).
fn cycle_with_pendants(k: usize, placement: &[usize]) -> Result<Graph> {
    let mut g = make_cycle(k)?;
    for &v in placement {
        let p = g.add_vertex();
        g.add_edge(v, p)?;
    }
    Ok(g)
}

/// Compares a prediction with an enumerated argmin as sets of isomorphism
/// classes.
fn prediction_case(case: CaseBuilder, pred: &ExtremalPrediction, found: &ExtremalResult) -> Result<CaseRecord> {
    let expected_codes = pred
        .minimizers
        .iter()
        .map(spec_code)
        .collect::<Result<BTreeSet<_>>>()?;
    let found_codes: BTreeSet<CanonicalCode> = found.codes().into_iter().collect();
    let expected = format!(
        "{} {}",
        set_text(pred.minimizers.iter().map(ToString::to_string)),
        pred.value
    );
    let computed = format!(
        "{} {}",
        set_text(found.minimizers.iter().map(|c| name_of(&c.graph))),
        found.value
    );
    let ok = expected_codes == found_codes && pred.value == found.value;
    Ok(case
        .param("class_size", found.class_size)
        .param("range", pred.applicability)
        .finish(Value::Text(expected), Value::Text(computed), Status::from_bool(ok)))
}

/// Constructed minimizers have the predicted order, matching number and value.
fn identity_holds(pred: &ExtremalPrediction, n: usize, m: usize) -> Result<bool> {
    for spec in &pred.minimizers {
        let g = spec.build()?;
        if g.vertex_count() != n || matching_number(&g)?.size != m || kirchhoff_index(&g)? != pred.value {
            return Ok(false);
        }
    }
    Ok(true)
}

fn tail_note(max_n: usize) -> String {
    format!(
        "beyond n = {max_n} only identities are checked up to n = {IDENTITY_LIMIT}: the predicted value equals the \
         Kirchhoff index of each constructed minimizer; minimality there is not established by enumeration"
    )
}

fn flatten<T>(slices: Vec<Result<T>>) -> Result<Vec<T>> {
    slices.into_iter().collect()
}

// ---------------------------------------------------------------- tables

fn tables(r: &mut VerificationReport) -> Result<()> {
    for e in data::perfect_tables()? {
        let g = make_ukt(e.k, e.t, 0, e.j)?;
        let case = CaseBuilder::new(format!("({},{};{})", e.k, e.t, e.j))
            .param("table", e.table)
            .param("row", e.row)
            .param("m", e.matching_number());
        r.push(case.compare(e.value.clone().into(), kirchhoff_index(&g)?.into()));
    }
    Ok(())
}

fn candidate_tables(r: &mut VerificationReport) -> Result<()> {
    let rows = data::candidate_tables()?;
    let mut listed: BTreeMap<(usize, String), Vec<usize>> = BTreeMap::new();
    for row in &rows {
        if let CandidateEntry::Cell { table, family, n, .. } = row {
            listed.entry((*table, family.0.clone())).or_default().push(*n);
        }
    }
    for row in &rows {
        let m = row.matching_number();
        match row {
            CandidateEntry::Cell { family, n, value, .. } => {
                let case = CaseBuilder::new(format!("m={m} {family} n={n}")).param("n", n).param("m", m);
                let Some(spec) = family.instantiate(*n) else {
                    r.push(case.finish(
                        Value::text(format!("{value}; m={m}")),
                        Value::text("family undefined at this n"),
                        Status::Fail,
                    ));
                    continue;
                };
                let g = spec.build()?;
                let computed = format!("{}; m={}", kirchhoff_index(&g)?, matching_number(&g)?.size);
                r.push(case.compare(Value::text(format!("{value}; m={m}")), Value::Text(computed)));
            }
            CandidateEntry::ClosedForm { table, family, form } => {
                let ns = listed.get(&(*table, family.0.clone())).cloned().unwrap_or_default();
                let mut agree = 0u64;
                let mut differ = Vec::new();
                for &n in &ns {
                    let direct = match family.instantiate(n) {
                        Some(spec) => Some(kirchhoff_index(&spec.build()?)?),
                        None => None,
                    };
                    if direct.as_ref() == Some(&form.eval(n)) {
                        agree += 1;
                    } else {
                        differ.push(n);
                    }
                }
                let mut case = CaseBuilder::new(format!("m={m} {family} closed form"))
                    .param("m", m)
                    .param("form", form)
                    .param("n", format!("{ns:?}"));
                if !differ.is_empty() {
                    case = case.note(format!("differs at n = {differ:?}"));
                }
                r.push(case.compare(Value::Count(ns.len() as u64), Value::Count(agree)));
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- extremal claims

fn perfect(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    let top = max_n / 2;
    for m in 2..=top {
        let pred = perfect_matching_prediction(m)?;
        let found = extremal_search(2 * m, m, Invariant::Kirchhoff)?;
        let case = CaseBuilder::new(format!("m={m}")).param("n", 2 * m).param("m", m);
        r.push(prediction_case(case, &pred, &found)?);
    }
    let first = (top + 1).max(2);
    let last = IDENTITY_LIMIT / 2;
    if first <= last {
        let case = CaseBuilder::new(format!("identity m={first}..{last}"));
        let mut ok = 0u64;
        for m in first..=last {
            ok += identity_holds(&perfect_matching_prediction(m)?, 2 * m, m)? as u64;
        }
        r.push(case.compare(Value::Count((last - first + 1) as u64), Value::Count(ok)));
    }
    r.note(tail_note(max_n));
    Ok(())
}

fn extremal(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    for n in 4..=max_n {
        let all = extremal_by_matching_number(n, Invariant::Kirchhoff)?;
        for m in 2..=n / 2 {
            let Some(found) = all.get(m).and_then(Option::as_ref) else {
                continue;
            };
            let pred = extremal_prediction(n, m)?;
            let case = CaseBuilder::new(format!("n={n},m={m}")).param("n", n).param("m", m);
            r.push(prediction_case(case, &pred, found)?);
        }
    }
    for m in 2..=IDENTITY_LIMIT / 2 {
        let lo = (max_n + 1).max(2 * m);
        if lo > IDENTITY_LIMIT {
            continue;
        }
        let case = CaseBuilder::new(format!("identity m={m} n={lo}..{IDENTITY_LIMIT}")).param("m", m);
        let mut ok = 0u64;
        for n in lo..=IDENTITY_LIMIT {
            ok += identity_holds(&extremal_prediction(n, m)?, n, m)? as u64;
        }
        r.push(case.compare(Value::Count((IDENTITY_LIMIT - lo + 1) as u64), Value::Count(ok)));
    }
    r.note(tail_note(max_n));
    r.note("m = 2 has no U_{n,m} family; those cells are compared against the explicit minimizer list");
    Ok(())
}

#[derive(Debug, Clone, Default)]
struct VertexTally {
    pairs: u64,
    violations: u64,
    /// Equality instances: class code and whether the vertex has maximum degree.
    equal: Vec<(CanonicalCode, bool)>,
}

fn vertex_sum(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    for n in 6..=max_n {
        let slices = par_map_slices(n, None, |it| -> Result<BTreeMap<usize, VertexTally>> {
            let mut per_m: BTreeMap<usize, VertexTally> = BTreeMap::new();
            for class in it {
                let m = class.matching_number;
                if m < 3 {
                    continue;
                }
                let res = UnicyclicResistance::from_graph(&class.graph)?;
                let bound = (n + m - 4) as i64 * res.denominator();
                let top = class.graph.max_degree();
                let tally = per_m.entry(m).or_default();
                for u in 0..n {
                    tally.pairs += 1;
                    match res.vertex_sum_scaled(u).cmp(&bound) {
                        Ordering::Less => tally.violations += 1,
                        Ordering::Equal => tally.equal.push((class.code.clone(), class.graph.degree(u) == top)),
                        Ordering::Greater => {}
                    }
                }
            }
            Ok(per_m)
        })?;
        let mut merged: BTreeMap<usize, VertexTally> = BTreeMap::new();
        for slice in flatten(slices)? {
            for (m, t) in slice {
                let into = merged.entry(m).or_default();
                into.pairs += t.pairs;
                into.violations += t.violations;
                into.equal.extend(t.equal);
            }
        }
        for m in 3..=n / 2 {
            let target = code_of(&make_unm(n, m)?)?;
            let tally = merged.remove(&m).unwrap_or_default();
            let at_hub = tally.equal.iter().filter(|(c, hub)| *c == target && *hub).count();
            let other = tally.equal.len() - at_hub;
            let mut case = CaseBuilder::new(format!("n={n},m={m}"))
                .param("n", n)
                .param("m", m)
                .param("pairs", tally.pairs);
            if (n, m) == (6, 3) {
                case = case.note("boundary cell: Unm(6,3) is U(5,1,0,0)");
            }
            r.push(case.compare(
                Value::text(format!("violations 0; equality at Unm({n},{m}) hub 1; other equality 0")),
                Value::text(format!(
                    "violations {}; equality at Unm({n},{m}) hub {at_hub}; other equality {other}",
                    tally.violations
                )),
            ));
        }
    }
    r.note("each cell sweeps matching number exactly m over every vertex u");
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
struct DeletionTally {
    pendant_cases: u64,
    p2_cases: u64,
    violations: u64,
    p2_violations: u64,
    tight_at_hub: u64,
    tight_other: u64,
    p2_tight_target: u64,
    p2_tight_other: u64,
}

impl DeletionTally {
    fn add(&mut self, o: &DeletionTally) {
        self.pendant_cases += o.pendant_cases;
        self.p2_cases += o.p2_cases;
        self.violations += o.violations;
        self.p2_violations += o.p2_violations;
        self.tight_at_hub += o.tight_at_hub;
        self.tight_other += o.tight_other;
        self.p2_tight_target += o.p2_tight_target;
        self.p2_tight_other += o.p2_tight_other;
    }

    fn describe(v: u64, v2: u64, hub: u64, other: u64, p2: u64, p2_other: u64) -> String {
        format!(
            "violations {v}/{v2}; tight pendant deletions at hub {hub}, other {other}; \
             tight P2 deletions in Unm {p2}, other {p2_other}"
        )
    }
}

fn deletion(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    for n in 6..=max_n {
        let targets: BTreeMap<usize, CanonicalCode> = (3..=n / 2)
            .map(|m| Ok((m, code_of(&make_unm(n, m)?)?)))
            .collect::<Result<_>>()?;
        let slices = par_map_slices(n, None, |it| -> Result<BTreeMap<usize, DeletionTally>> {
            let mut per_m: BTreeMap<usize, DeletionTally> = BTreeMap::new();
            for class in it {
                let m = class.matching_number;
                if m < 3 {
                    continue;
                }
                let g = &class.graph;
                let is_target = targets.get(&m) == Some(&class.code);
                let kf = UnicyclicResistance::from_graph(g)?.kirchhoff();
                let top = g.max_degree();
                let bound = q((2 * n + m) as i64 - 6);
                let bound2 = q((5 * n + 2 * m) as i64 - 19);
                let tally = per_m.entry(m).or_default();
                for x in g.pendant_vertices() {
                    let y = g.neighbors(x)[0];
                    let drop = &kf - &UnicyclicResistance::from_graph(&g.remove_vertices(&[x]).0)?.kirchhoff();
                    tally.pendant_cases += 1;
                    match drop.cmp(&bound) {
                        Ordering::Less => tally.violations += 1,
                        Ordering::Equal if is_target && g.degree(y) == top => tally.tight_at_hub += 1,
                        Ordering::Equal => tally.tight_other += 1,
                        Ordering::Greater => {}
                    }
                    if g.degree(y) == 2 {
                        let drop2 =
                            &kf - &UnicyclicResistance::from_graph(&g.remove_vertices(&[x, y]).0)?.kirchhoff();
                        tally.p2_cases += 1;
                        match drop2.cmp(&bound2) {
                            Ordering::Less => tally.p2_violations += 1,
                            Ordering::Equal if is_target => tally.p2_tight_target += 1,
                            Ordering::Equal => tally.p2_tight_other += 1,
                            Ordering::Greater => {}
                        }
                    }
                }
            }
            Ok(per_m)
        })?;
        let mut merged: BTreeMap<usize, DeletionTally> = BTreeMap::new();
        for slice in flatten(slices)? {
            for (m, t) in slice {
                merged.entry(m).or_default().add(&t);
            }
        }
        for m in 3..=n / 2 {
            let t = merged.get(&m).copied().unwrap_or_default();
            // Unm(n,m) = U(5,1,n-2m,m-3): the hub carries 1 + (n-2m) pendants
            // and m-3 pendent P2s.
            let expected = DeletionTally::describe(0, 0, (1 + n - 2 * m) as u64, 0, (m - 3) as u64, 0);
            let computed = DeletionTally::describe(
                t.violations,
                t.p2_violations,
                t.tight_at_hub,
                t.tight_other,
                t.p2_tight_target,
                t.p2_tight_other,
            );
            let case = CaseBuilder::new(format!("n={n},m={m}"))
                .param("n", n)
                .param("m", m)
                .param("pendant_deletions", t.pendant_cases)
                .param("p2_deletions", t.p2_cases);
            r.push(case.compare(Value::Text(expected), Value::Text(computed)));
        }
    }
    Ok(())
}

fn girth(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    for n in 4..=max_n {
        let slices = par_map_slices(n, None, |it| {
            let mut per_k: BTreeMap<usize, ArgMin<CanonicalCode>> = BTreeMap::new();
            for class in it {
                let k = class.code.cycle_length;
                if k < n {
                    let kf = Invariant::Kirchhoff.evaluate(&class.graph)?;
                    per_k.entry(k).or_default().offer(kf, class.code);
                }
            }
            Ok(per_k)
        })?;
        let mut merged: BTreeMap<usize, ArgMin<CanonicalCode>> = BTreeMap::new();
        for slice in flatten(slices)? {
            for (k, a) in slice {
                merged.entry(k).or_default().merge(a);
            }
        }
        for k in 3..n {
            let found = merged.remove(&k).unwrap_or_default();
            let spec = FamilySpec::ukt(k, 1, n - k - 1, 0);
            let bound = snk_lower_bound(n, k)?;
            let ok = found.items == [spec_code(&spec)?] && found.value.as_ref() == Some(&bound);
            let computed = format!(
                "{} {}",
                set_text(found.items.iter().map(|c| name_of(&c.to_graph()))),
                found.value.map(|v| v.to_string()).unwrap_or_default()
            );
            let case = CaseBuilder::new(format!("n={n},k={k}")).param("n", n).param("k", k);
            r.push(case.finish(
                Value::text(format!("{{{spec}}} {bound}")),
                Value::Text(computed),
                Status::from_bool(ok),
            ));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- perfect-matching structure

fn placement_text(placement: &[usize]) -> String {
    let labels: Vec<String> = placement.iter().map(|v| format!("v{}", v + 1)).collect();
    format!("{{{}}}", labels.join(","))
}

fn sigma(r: &mut VerificationReport) -> Result<()> {
    let listed = data::sigma_cases();
    for (k, placement, value) in &listed {
        let zero: Vec<usize> = placement.iter().map(|v| v - 1).collect();
        let case = CaseBuilder::new(format!("C{k} {}", placement_text(&zero))).param("k", k);
        r.push(case.compare(value.clone().into(), sigma_placement(*k, &zero)?.into()));
    }
    for (k, t, listed_classes) in [(10usize, 4usize, 4u64), (11, 5, 5), (12, 4, 8)] {
        // Every placement with a perfect matching, keyed by isomorphism class;
        // listed placements name their class, else the least placement does.
        let mut feasible: BTreeMap<CanonicalCode, (Vec<usize>, Rational)> = BTreeMap::new();
        for mask in 0u32..(1 << k) {
            if mask.count_ones() as usize != t {
                continue;
            }
            let placement: Vec<usize> = (0..k).filter(|v| mask & (1 << v) != 0).collect();
            let g = cycle_with_pendants(k, &placement)?;
            if !has_perfect_matching(&g)? {
                continue;
            }
            let sigma = sigma_placement(k, &placement)?;
            feasible.entry(code_of(&g)?).or_insert((placement, sigma));
        }
        let mut listed_codes = BTreeMap::new();
        for (_, placement, _) in listed.iter().filter(|c| c.0 == k) {
            let zero: Vec<usize> = placement.iter().map(|v| v - 1).collect();
            listed_codes.insert(code_of(&cycle_with_pendants(k, &zero)?)?, zero);
        }

        let case = CaseBuilder::new(format!("C{k} t={t} feasible classes")).param("k", k).param("t", t);
        r.push(case.compare(Value::Count(listed_classes), Value::Count(feasible.len() as u64)));

        let same = listed_codes.keys().eq(feasible.keys());
        let describe = |code: &CanonicalCode, fallback: &[usize]| {
            placement_text(listed_codes.get(code).map(Vec::as_slice).unwrap_or(fallback))
        };
        let case = CaseBuilder::new(format!("C{k} t={t} listed = feasible")).param("k", k).param("t", t);
        r.push(case.finish(
            Value::set(listed_codes.values().map(|p| placement_text(p))),
            Value::set(feasible.iter().map(|(c, (p, _))| describe(c, p))),
            Status::from_bool(same),
        ));

        let least = feasible.values().map(|(_, s)| s.clone()).min().unwrap_or_default();
        let case = CaseBuilder::new(format!("C{k} t={t} least sum")).param("k", k).param("t", t);
        r.push(case.compare(sigma_ukt(k, t)?.into(), least.into()));
    }
    Ok(())
}

/// Placement parameters for which the lower bound over cycle-with-pendant
/// graphs is claimed.
fn bound_claimed(k: usize, t: usize) -> bool {
    [1, 2, 3].contains(&t)
        || k.checked_sub(4) == Some(t)
        || k.checked_sub(2) == Some(t)
        || t == k
        || [(10, 4), (11, 5), (12, 4)].contains(&(k, t))
}

#[derive(Debug, Clone, Default)]
struct PerfectTally {
    by_kt: BTreeMap<(usize, usize), ArgMin<CanonicalCode>>,
    vertex_by_kt: BTreeMap<(usize, usize), ArgMin<(CanonicalCode, usize, Graph)>>,
    u1: ArgMin<CanonicalCode>,
    u2: ArgMin<CanonicalCode>,
}

fn cycle_pendants(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    for m in 2..=max_n / 2 {
        let n = 2 * m;
        let slices = par_map_slices(n, Some(m), |it| -> Result<PerfectTally> {
            let mut tally = PerfectTally::default();
            for class in it {
                let g = &class.graph;
                let kf = Invariant::Kirchhoff.evaluate(g)?;
                match classify_2m_m(g)? {
                    PerfectClass::Cycle => {}
                    PerfectClass::U2 => tally.u2.offer(kf, class.code),
                    PerfectClass::U1 => {
                        let kt = (class.code.cycle_length, n - class.code.cycle_length);
                        let res = UnicyclicResistance::from_graph(g)?;
                        let vertices = tally.vertex_by_kt.entry(kt).or_default();
                        for v in 0..n {
                            vertices.offer(res.vertex_sum(v), (class.code.clone(), v, g.clone()));
                        }
                        tally.by_kt.entry(kt).or_default().offer(kf.clone(), class.code.clone());
                        tally.u1.offer(kf, class.code);
                    }
                }
            }
            Ok(tally)
        })?;
        let mut all = PerfectTally::default();
        for s in flatten(slices)? {
            for (kt, a) in s.by_kt {
                all.by_kt.entry(kt).or_default().merge(a);
            }
            for (kt, a) in s.vertex_by_kt {
                all.vertex_by_kt.entry(kt).or_default().merge(a);
            }
            all.u1.merge(s.u1);
            all.u2.merge(s.u2);
        }

        for (&(k, t), found) in &all.by_kt {
            let spec = FamilySpec::ukt(k, t, 0, 0);
            let bound = ukt_lower_bound(k, t)?;
            let value = found.value.clone().unwrap_or_default();
            let computed = format!(
                "{} {value}",
                set_text(found.items.iter().map(|c| name_of(&c.to_graph())))
            );
            let case = CaseBuilder::new(format!("m={m} k={k},t={t} bound")).param("k", k).param("t", t);
            if bound_claimed(k, t) {
                let ok = found.items == [spec_code(&spec)?] && value == bound;
                r.push(case.finish(
                    Value::text(format!("{{{spec}}} {bound}")),
                    Value::Text(computed),
                    Status::from_bool(ok),
                ));
            } else {
                let held = if value >= bound { "holds" } else { "fails" };
                r.push(
                    case.note(format!("outside the claimed range; informational, bound {held}"))
                        .finish(Value::text(format!("{{{spec}}} {bound}")), Value::Text(computed), Status::Skipped),
                );
            }
        }

        for (&(k, t), found) in &all.vertex_by_kt {
            let u = make_ukt(k, t, 0, 0)?;
            let u_code = code_of(&u)?;
            let c = central_vertex(t);
            let central = |g: &Graph, v: usize| {
                oracle::isomorphic_pinned(g, v, &u, c) || (t % 2 == 0 && oracle::isomorphic_pinned(g, v, &u, c + 1))
            };
            let orbit = (0..u.vertex_count()).filter(|&v| central(&u, v)).count();
            let at_centre = found
                .items
                .iter()
                .filter(|(code, v, g)| *code == u_code && central(g, *v))
                .count();
            let other = found.items.len() - at_centre;
            let value = found.value.clone().unwrap_or_default();
            let f = f_kt(k, t)?;
            let case = CaseBuilder::new(format!("m={m} k={k},t={t} vertex bound")).param("k", k).param("t", t);
            r.push(case.compare(
                Value::text(format!("{f}; central vertices of U({k},{t}) {orbit}; other 0")),
                Value::text(format!("{value}; central vertices of U({k},{t}) {at_centre}; other {other}")),
            ));
        }

        // Least over pendants-on-cycle graphs is some U(k,t); least over the
        // rest is some U(k,t,0,j) with t, j >= 1.
        let mut u1_forms = BTreeSet::new();
        let mut u2_forms = BTreeSet::new();
        for k in 3..=n {
            let t = n - k;
            if (1..=k).contains(&t) {
                u1_forms.insert(spec_code(&FamilySpec::ukt(k, t, 0, 0))?);
            }
            for t in 1..=k.min(n - k) {
                let rest = n - k - t;
                if rest >= 2 && rest % 2 == 0 {
                    u2_forms.insert(spec_code(&FamilySpec::ukt(k, t, 0, rest / 2))?);
                }
            }
        }
        for (label, found, forms, form_text, claimed) in [
            ("pendants-on-cycle", &all.u1, &u1_forms, "U(k,t)", m <= 8),
            ("with pendent P2", &all.u2, &u2_forms, "U(k,t,0,j), t >= 1, j >= 1", (3..=8).contains(&m)),
        ] {
            if found.value.is_none() || !claimed {
                continue;
            }
            let ok = found.items.iter().all(|c| forms.contains(c));
            let names = set_text(found.items.iter().map(|c| name_of(&c.to_graph())));
            let want = format!("every minimizer of the form {form_text}");
            let case = CaseBuilder::new(format!("m={m} {label} minimizer"))
                .param("m", m)
                .note(format!("{names} {}", found.value.clone().unwrap_or_default()));
            let computed = if ok { want.clone() } else { format!("minimizer outside {form_text}") };
            r.push(case.compare(Value::Text(want), Value::Text(computed)));
        }
    }
    r.note("the bound over pendants-on-cycle graphs is claimed only for t in {1,2,3,k-4,k-2,k} and (k,t) in {(10,4),(11,5),(12,4)}; other placements are informational");
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
struct ReductionTally {
    graphs: u64,
    bad_core: u64,
    below_attached: u64,
    equality_not_attached: u64,
    not_above_target: u64,
}

fn reduction(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    struct Target {
        core_code: CanonicalCode,
        core_kf: Rational,
        kf: Rational,
    }
    for n in 7..=max_n {
        let mut targets = BTreeMap::new();
        for m in 3..=(n - 1) / 2 {
            let core = make_unm(2 * m, m)?;
            targets.insert(
                m,
                Target {
                    core_code: code_of(&core)?,
                    core_kf: kirchhoff_index(&core)?,
                    kf: kirchhoff_index(&make_unm(n, m)?)?,
                },
            );
        }
        type Slice = (BTreeMap<usize, ReductionTally>, BTreeMap<usize, ArgMin<CanonicalCode>>);
        let slices = par_map_slices(n, None, |it| -> Result<Slice> {
            let mut tallies: BTreeMap<usize, ReductionTally> = BTreeMap::new();
            let mut least: BTreeMap<usize, ArgMin<CanonicalCode>> = BTreeMap::new();
            // Per core: its Kf, Kf of the core with pendants at a best vertex,
            // whether that vertex is unique, and that graph's code.
            let mut cache: HashMap<CanonicalCode, (Rational, Rational, bool, CanonicalCode)> = HashMap::new();
            for class in it {
                let m = class.matching_number;
                let Some(target) = targets.get(&m) else { continue };
                if class.graph.is_cycle() {
                    continue;
                }
                let tally = tallies.entry(m).or_default();
                tally.graphs += 1;
                let reduced = reduce_to_g0(&class.graph)?;
                let core = &reduced.graph;
                if core.vertex_count() != 2 * m || !has_perfect_matching(core)? {
                    tally.bad_core += 1;
                    continue;
                }
                let core_code = code_of(core)?;
                if !cache.contains_key(&core_code) {
                    let (star, argmin) = attach_pendants_at_min_vertex(core, n - 2 * m)?;
                    let entry = (kirchhoff_index(core)?, kirchhoff_index(&star)?, argmin.len() == 1, code_of(&star)?);
                    cache.insert(core_code.clone(), entry);
                }
                let (core_kf, star_kf, unique, star_code) = &cache[&core_code];
                let kf = Invariant::Kirchhoff.evaluate(&class.graph)?;
                match kf.cmp(star_kf) {
                    Ordering::Less => tally.below_attached += 1,
                    Ordering::Equal if *unique && class.code != *star_code => tally.equality_not_attached += 1,
                    _ => {}
                }
                if core_code != target.core_code && *core_kf >= target.core_kf && kf <= target.kf {
                    tally.not_above_target += 1;
                }
                least.entry(m).or_default().offer(kf, core_code);
            }
            Ok((tallies, least))
        })?;
        let mut tallies: BTreeMap<usize, ReductionTally> = BTreeMap::new();
        let mut least: BTreeMap<usize, ArgMin<CanonicalCode>> = BTreeMap::new();
        for (t, l) in flatten(slices)? {
            for (m, x) in t {
                let into = tallies.entry(m).or_default();
                into.graphs += x.graphs;
                into.bad_core += x.bad_core;
                into.below_attached += x.below_attached;
                into.equality_not_attached += x.equality_not_attached;
                into.not_above_target += x.not_above_target;
            }
            for (m, a) in l {
                least.entry(m).or_default().merge(a);
            }
        }
        for m in targets.keys().copied() {
            let t = tallies.get(&m).copied().unwrap_or_default();
            let describe = |bad: u64, below: u64, eq: u64, above: u64| {
                format!("core outside U(2m,m) {bad}; below attached core {below}; equality off attached core {eq}; not above Unm {above}")
            };
            let case = CaseBuilder::new(format!("n={n},m={m} core bounds"))
                .param("n", n)
                .param("m", m)
                .param("graphs", t.graphs);
            r.push(case.compare(
                Value::Text(describe(0, 0, 0, 0)),
                Value::Text(describe(t.bad_core, t.below_attached, t.equality_not_attached, t.not_above_target)),
            ));

            if (3..=7).contains(&m) {
                let mut forms = BTreeSet::new();
                for k in 3..=2 * m {
                    for tt in 0..=k.min(2 * m - k) {
                        let rest = 2 * m - k - tt;
                        if rest % 2 == 0 {
                            forms.insert(spec_code(&FamilySpec::ukt(k, tt, 0, rest / 2))?);
                        }
                    }
                }
                let found = least.remove(&m).unwrap_or_default();
                let ok = !found.items.is_empty() && found.items.iter().all(|c| forms.contains(c));
                let names = set_text(found.items.iter().map(|c| name_of(&c.to_graph())));
                let want = "core of every minimizer of the form U(k,t,0,j)".to_string();
                let computed = if ok { want.clone() } else { "core outside U(k,t,0,j)".to_string() };
                let case = CaseBuilder::new(format!("n={n},m={m} minimizer core"))
                    .param("n", n)
                    .param("m", m)
                    .note(format!("cores {names}"));
                r.push(case.compare(Value::Text(want), Value::Text(computed)));
            }
        }
    }
    r.note("cores come from deleting the lowest-labeled admissible pendant first");
    Ok(())
}

// ---------------------------------------------------------------- identities and oracles

fn random_tree(rng: &mut ChaCha8Rng, size: usize) -> Result<Graph> {
    if size <= 2 {
        return Ok(make_path(size)?);
    }
    // Prüfer decoding.
    let code: Vec<usize> = (0..size - 2).map(|_| rng.gen_range(0..size)).collect();
    let mut degree = vec![1usize; size];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(size - 1);
    for &c in &code {
        let leaf = (0..size).find(|&v| degree[v] == 1).expect("a leaf remains");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..size).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Ok(Graph::from_edges(size, &edges)?)
}

fn random_relabel(rng: &mut ChaCha8Rng, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
    perm.shuffle(rng);
    g.relabel(&perm)
}

fn merge(r: &mut VerificationReport, seed: u64, trials: usize) -> Result<()> {
    let glue = |g: &Graph, u: usize, h: &Graph, w: usize| -> Result<(Rational, Rational)> {
        let closed = kf_identified(
            &kirchhoff_index(g)?,
            &kirchhoff_index(h)?,
            &kirchhoff_vertex_sum(g, u)?,
            &kirchhoff_vertex_sum(h, w)?,
            g.vertex_count(),
            h.vertex_count(),
        );
        let direct = kirchhoff_index(&identify_vertices(g, u, h, w)?)?;
        Ok((closed, direct))
    };
    let fixed = [
        ("C3 + P2", make_cycle(3)?, make_path(2)?, Rational::frac(19, 3)),
        ("P2 + P2", make_path(2)?, make_path(2)?, q(4)),
    ];
    for (label, g, h, value) in fixed {
        let (closed, direct) = glue(&g, 0, &h, 0)?;
        r.push(CaseBuilder::new(format!("{label} closed form")).compare(value.clone().into(), closed.into()));
        r.push(CaseBuilder::new(format!("{label} direct")).compare(value.into(), direct.into()));
    }

    let pool: Vec<Vec<Graph>> = (3..=8)
        .map(|n| Ok(collect_unicyclic(n, None)?.into_iter().map(|c| c.graph).collect()))
        .collect::<Result<_>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let case = CaseBuilder::new("random").param("trials", trials).param("seed", seed);
    let mut agree = 0u64;
    let mut first_miss = None;
    for trial in 0..trials {
        let classes = pool.choose(&mut rng).expect("pool is non-empty");
        let base = classes.choose(&mut rng).expect("class list is non-empty");
        let g = random_relabel(&mut rng, base);
        let size = rng.gen_range(1..=6);
        let h = random_tree(&mut rng, size)?;
        let u = rng.gen_range(0..g.vertex_count());
        let w = rng.gen_range(0..h.vertex_count());
        let (closed, direct) = glue(&g, u, &h, w)?;
        if closed == direct {
            agree += 1;
        } else if first_miss.is_none() {
            first_miss = Some(trial);
        }
    }
    let case = match first_miss {
        Some(t) => case.note(format!("first disagreement at trial {t}")),
        None => case,
    };
    r.push(case.compare(Value::Count(trials as u64), Value::Count(agree)));
    Ok(())
}

fn wiener(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    let mut cells = 0u64;
    let mut differing = Vec::new();
    for n in 4..=max_n {
        let kf = extremal_by_matching_number(n, Invariant::Kirchhoff)?;
        let w = extremal_by_matching_number(n, Invariant::Wiener)?;
        for m in 2..=n / 2 {
            let (Some(a), Some(b)) = (kf[m].as_ref(), w[m].as_ref()) else {
                continue;
            };
            cells += 1;
            let differ = a.codes() != b.codes();
            if differ {
                differing.push(format!("({n},{m})"));
            }
            let names = |x: &ExtremalResult| set_text(x.minimizers.iter().map(|c| name_of(&c.graph)));
            let case = CaseBuilder::new(format!("n={n},m={m}"))
                .param("n", n)
                .param("m", m)
                .note(if differ { "minimizers differ" } else { "minimizers agree" });
            r.push(case.finish(
                Value::text(format!("Kf {} {}", names(a), a.value)),
                Value::text(format!("W {} {}", names(b), b.value)),
                Status::Skipped,
            ));
        }
    }
    let want = "at least one cell with differing minimizers";
    let computed = if differing.is_empty() { "no cell with differing minimizers" } else { want };
    let case = CaseBuilder::new("some cell differs")
        .param("cells", cells)
        .param("differing", differing.len())
        .note(format!("differing cells {}", differing.join(" ")));
    r.push(case.compare(Value::text(want), Value::text(computed)));
    r.note("per-cell comparisons are informational and reported as skipped");
    Ok(())
}

#[derive(Debug, Clone, Copy, Default)]
struct ResistanceTally {
    graphs: u64,
    pairs: u64,
    method_mismatch: u64,
    metric_violations: u64,
    hop_violations: u64,
    sum_mismatch: u64,
}

fn resistance(r: &mut VerificationReport, max_n: usize) -> Result<()> {
    for n in 3..=max_n {
        let slices = par_map_slices(n, None, |it| -> Result<ResistanceTally> {
            let mut t = ResistanceTally::default();
            for class in it {
                let g = &class.graph;
                t.graphs += 1;
                let lap = ResistanceMatrix::laplacian(g)?;
                let d = decompose_unicyclic(g)?;
                let uni = UnicyclicResistance::new(&d);
                let k = uni.denominator();
                for u in 0..n {
                    let hops = g.distances(u);
                    if uni.scaled(u, u) != 0 {
                        t.metric_violations += 1;
                    }
                    for v in 0..n {
                        let s = uni.scaled(u, v);
                        if u < v {
                            t.pairs += 1;
                            let forest = resistance_forest(g, u, v)?;
                            let via_tree = uni.get(u, v);
                            if *lap.get(u, v) != via_tree || forest != via_tree {
                                t.method_mismatch += 1;
                            }
                        }
                        if u != v && (s <= 0 || s != uni.scaled(v, u)) {
                            t.metric_violations += 1;
                        }
                        let hop = hops[v].expect("connected") as i64 * k;
                        let same_branch = d.root_of(u) == d.root_of(v);
                        if s > hop || (s == hop) != same_branch {
                            t.hop_violations += 1;
                        }
                        for w in 0..n {
                            if uni.scaled(u, w) > s + uni.scaled(v, w) {
                                t.metric_violations += 1;
                            }
                        }
                    }
                }
                let sums: i64 = (0..n).map(|u| uni.vertex_sum_scaled(u)).sum();
                if sums != 2 * uni.kirchhoff_scaled() {
                    t.sum_mismatch += 1;
                }
            }
            Ok(t)
        })?;
        let mut t = ResistanceTally::default();
        for s in flatten(slices)? {
            t.graphs += s.graphs;
            t.pairs += s.pairs;
            t.method_mismatch += s.method_mismatch;
            t.metric_violations += s.metric_violations;
            t.hop_violations += s.hop_violations;
            t.sum_mismatch += s.sum_mismatch;
        }
        let case = |what: &str| {
            CaseBuilder::new(format!("n={n} {what}"))
                .param("n", n)
                .param("graphs", t.graphs)
                .param("pairs", t.pairs)
        };
        let zero = Value::Count(0);
        r.push(case("methods agree").compare(zero.clone(), Value::Count(t.method_mismatch)));
        r.push(case("metric").compare(zero.clone(), Value::Count(t.metric_violations)));
        r.push(case("hop bound").compare(zero.clone(), Value::Count(t.hop_violations)));
        r.push(case("vertex sums").compare(zero, Value::Count(t.sum_mismatch)));
    }

    let (lo, hi) = (3usize, 50usize);
    let case = CaseBuilder::new(format!("cycle closed forms n={lo}..{hi}"));
    let mut agree = 0u64;
    for n in lo..=hi {
        let ni = n as i64;
        let lap = ResistanceMatrix::laplacian(&make_cycle(n)?)?;
        let kf_ok = lap.kirchhoff() == Rational::frac(ni * ni * ni - ni, 12);
        let kfv_ok = (0..n).all(|v| lap.vertex_sum(v) == Rational::frac(ni * ni - 1, 6));
        agree += (kf_ok && kfv_ok) as u64;
    }
    r.push(case.compare(Value::Count((hi - lo + 1) as u64), Value::Count(agree)));
    Ok(())
}

fn oracles(r: &mut VerificationReport, max_n: usize, seed: u64) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 3..=max_n.min(8) {
        let classes = collect_unicyclic(n, None)?;
        let graphs: Vec<Graph> = classes.iter().map(|c| c.graph.clone()).collect();
        let case = CaseBuilder::new(format!("n={n} labeled count")).param("classes", classes.len());
        r.push(case.compare(
            Value::Count(oracle::labeled_unicyclic_count(n)),
            Value::Count(oracle::orbit_sum(&graphs)),
        ));

        let distinct: BTreeSet<&CanonicalCode> = classes.iter().map(|c| &c.code).collect();
        r.push(
            CaseBuilder::new(format!("n={n} distinct codes"))
                .compare(Value::Count(classes.len() as u64), Value::Count(distinct.len() as u64)),
        );

        let mut stable = 0u64;
        let mut total = 0u64;
        for class in &classes {
            for _ in 0..100 {
                total += 1;
                stable += (code_of(&random_relabel(&mut rng, &class.graph))? == class.code) as u64;
            }
        }
        r.push(
            CaseBuilder::new(format!("n={n} relabel invariance"))
                .param("seed", seed)
                .compare(Value::Count(total), Value::Count(stable)),
        );

        if n <= 7 {
            let mut isomorphic = 0u64;
            for (i, g) in graphs.iter().enumerate() {
                for h in &graphs[i + 1..] {
                    isomorphic += oracle::are_isomorphic(g, h) as u64;
                }
            }
            r.push(CaseBuilder::new(format!("n={n} pairwise non-isomorphic")).compare(Value::Count(0), Value::Count(isomorphic)));
        }

        if n <= 6 {
            let mut brute = vec![0usize; n / 2 + 1];
            for (_, m) in oracle::unicyclic_classes_brute(n) {
                brute[m] += 1;
            }
            let fast = count_by_matching_number(n)?;
            let text = |counts: &[usize]| {
                let parts: Vec<String> = counts
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(m, c)| format!("m{m}:{c}"))
                    .collect();
                parts.join(" ")
            };
            r.push(CaseBuilder::new(format!("n={n} classes per m")).compare(Value::text(text(&brute)), Value::text(text(&fast))));
        }
    }

    for n in 3..=max_n {
        let slices = par_map_slices(n, None, |it| -> Result<(u64, u64)> {
            let (mut graphs, mut bad) = (0u64, 0u64);
            for class in it {
                graphs += 1;
                let fast = matching_number(&class.graph)?;
                let brute = oracle::matching_number_brute(&class.graph);
                let mut used = vec![false; n];
                let witness_ok = fast.edges.len() == fast.size
                    && fast.edges.iter().all(|&(u, v)| {
                        let fresh = !used[u] && !used[v] && class.graph.has_edge(u, v);
                        used[u] = true;
                        used[v] = true;
                        fresh
                    });
                if fast.size != brute || class.matching_number != brute || !witness_ok {
                    bad += 1;
                }
            }
            Ok((graphs, bad))
        })?;
        let (graphs, bad) = flatten(slices)?.into_iter().fold((0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
        r.push(
            CaseBuilder::new(format!("n={n} matching number"))
                .param("graphs", graphs)
                .compare(Value::Count(0), Value::Count(bad)),
        );
    }

    let tree_limit = 8;
    let table = tree_table(tree_limit);
    for size in 1..=tree_limit {
        let mut agree = 0u64;
        let ids = table.ids_of_size(size);
        for id in ids.clone() {
            let tree = table.tree(id);
            let edges: Vec<(usize, usize)> = tree.parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            let g = Graph::from_edges(size, &edges)?;
            agree += (kirchhoff_index(&g)? == wiener_index(&g)?) as u64;
        }
        r.push(
            CaseBuilder::new(format!("trees size={size} Kf = W"))
                .compare(Value::Count(ids.len() as u64), Value::Count(agree)),
        );
    }
    for size in 1..=6 {
        r.push(CaseBuilder::new(format!("rooted trees size={size}")).compare(
            Value::Count(oracle::rooted_tree_classes_brute(size) as u64),
            Value::Count(table.count_of_size(size) as u64),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(suite: Suite, max_n: usize) -> VerificationReport {
        let opts = SuiteOptions {
            max_n: Some(max_n),
            trials: 20,
            ..SuiteOptions::default()
        };
        run_suite(suite, &opts).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert!(matches!(
            run_named("nope", &SuiteOptions::default()),
            Err(SuiteError::UnknownSuite(_))
        ));
    }

    #[test]
    fn small_windows_pass() {
        for suite in [
            Suite::Perfect,
            Suite::Extremal,
            Suite::VertexSum,
            Suite::Deletion,
            Suite::Girth,
            Suite::Reduction,
            Suite::Merge,
            Suite::Resistance,
            Suite::Oracles,
        ] {
            let r = quick(suite, 8);
            let failed: Vec<_> = r.failures().map(|c| c.id.clone()).collect();
            assert!(failed.is_empty(), "{suite}: {failed:?}");
        }
    }

    // The least graph with a pendent P2 at m = 3 is U(4,0,0,1), which has no
    // pendant on the cycle; every other check in the window holds.
    #[test]
    fn cycle_pendants_only_miss_is_m3_p2_form() {
        let r = quick(Suite::CyclePendants, 8);
        let failed: Vec<_> = r.failures().map(|c| c.id.as_str()).collect();
        assert_eq!(failed, ["m=3 with pendent P2 minimizer"]);
        let case = r.failures().next().unwrap();
        assert!(case.note.as_deref().unwrap().starts_with("{U(4,0,0,1)} 23"));
    }

    #[test]
    fn table_output_is_reproducible() {
        let a = quick(Suite::Girth, 7).to_table();
        let b = quick(Suite::Girth, 7).to_table();
        assert_eq!(a, b);
        assert!(a.contains("n=5,k=4"));
    }

    #[test]
    fn argmin_keeps_ties() {
        let mut a = ArgMin::default();
        a.offer(q(3), 'a');
        a.offer(q(2), 'b');
        a.offer(q(2), 'c');
        let mut b = ArgMin::default();
        b.offer(q(2), 'd');
        a.merge(b);
        assert_eq!(a.items, vec!['b', 'c', 'd']);
    }

    #[test]
    fn bound_range() {
        assert!(bound_claimed(10, 4));
        assert!(bound_claimed(8, 4));
        assert!(!bound_claimed(13, 5));
    }
}

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

/// An expected or computed quantity as it appears in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Value {
    Rational(Rational),
    Set(Vec<String>),
    Count(u64),
    Text(String),
}

impl Value {
    pub fn set<I, S>(items: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        Value::Set(items.into_iter().map(|s| s.to_string()).collect())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Value::Text(s.into())
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Rational(q) => write!(f, "{q}"),
            Value::Set(items) => write!(f, "{{{}}}", items.join(", ")),
            Value::Count(c) => write!(f, "{c}"),
            Value::Text(t) => f.write_str(t),
        }
    }
}

impl From<Rational> for Value {
    fn from(q: Rational) -> Self {
        Value::Rational(q)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseRecord {
    pub id: String,
    pub parameters: BTreeMap<String, String>,
    pub expected: Value,
    pub computed: Value,
    pub status: Status,
    pub runtime_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Builder for one case; times itself from creation to [`CaseBuilder::finish`].
pub struct CaseBuilder {
    id: String,
    parameters: BTreeMap<String, String>,
    note: Option<String>,
    started: Instant,
}

impl CaseBuilder {
    pub fn new(id: impl Into<String>) -> Self {
        CaseBuilder {
            id: id.into(),
            parameters: BTreeMap::new(),
            note: None,
            started: Instant::now(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.parameters.insert(key.to_string(), value.to_string());
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Status is pass exactly when the two values are equal.
    pub fn compare(self, expected: Value, computed: Value) -> CaseRecord {
        let status = Status::from_bool(expected == computed);
        self.finish(expected, computed, status)
    }

    pub fn finish(self, expected: Value, computed: Value, status: Status) -> CaseRecord {
        CaseRecord {
            id: self.id,
            parameters: self.parameters,
            expected,
            computed,
            status,
            runtime_ms: self.started.elapsed().as_millis() as u64,
            note: self.note,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<CaseRecord>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, seed: u64) -> Self {
        VerificationReport {
            suite: suite.into(),
            seed,
            cases: Vec::new(),
            summary: Summary::default(),
            notes: Vec::new(),
        }
    }

    pub fn push(&mut self, case: CaseRecord) {
        match case.status {
            Status::Pass => self.summary.pass += 1,
            Status::Fail => self.summary.fail += 1,
            Status::Skipped => self.summary.skipped += 1,
        }
        self.cases.push(case);
    }

    pub fn extend(&mut self, cases: impl IntoIterator<Item = CaseRecord>) {
        for c in cases {
            self.push(c);
        }
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    /// Folds another report in, prefixing its case ids with its suite name.
    pub fn absorb(&mut self, other: VerificationReport) {
        let prefix = other.suite;
        for mut case in other.cases {
            case.id = format!("{prefix}/{}", case.id);
            self.push(case);
        }
        self.notes
            .extend(other.notes.into_iter().map(|n| format!("{prefix}: {n}")));
    }

    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseRecord> {
        self.cases.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Fixed-width table; timings are left out so output is reproducible.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {} (seed {})", self.suite, self.seed);
        let id_width = self.cases.iter().map(|c| c.id.len()).max().unwrap_or(2).max(2);
        let exp_width = self
            .cases
            .iter()
            .map(|c| c.expected.to_string().len())
            .max()
            .unwrap_or(8)
            .clamp(8, 48);
        let _ = writeln!(out, "{:<7} {:<id_width$}  {:<exp_width$}  COMPUTED", "STATUS", "ID", "EXPECTED");
        for c in &self.cases {
            let _ = write!(
                out,
                "{:<7} {:<id_width$}  {:<exp_width$}  {}",
                c.status.as_str(),
                c.id,
                c.expected.to_string(),
                c.computed
            );
            if let Some(note) = &c.note {
                let _ = write!(out, "  [{note}]");
            }
            out.push('\n');
        }
        for n in &self.notes {
            let _ = writeln!(out, "note: {n}");
        }
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} skipped",
            self.summary.pass, self.summary.fail, self.summary.skipped
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summary_and_json() {
        let mut r = VerificationReport::new("demo", 7);
        r.push(CaseBuilder::new("a").param("n", 3).compare(Rational::frac(1, 2).into(), Rational::frac(2, 4).into()));
        r.push(CaseBuilder::new("b").compare(Value::Count(1), Value::Count(2)));
        r.push(CaseBuilder::new("c").finish(Value::text("-"), Value::text("-"), Status::Skipped));
        assert_eq!(r.summary, Summary { pass: 1, fail: 1, skipped: 1 });
        assert!(!r.passed());
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["suite"], "demo");
        assert_eq!(json["seed"], 7);
        assert_eq!(json["cases"][0]["expected"], "1/2");
        assert_eq!(json["cases"][0]["parameters"]["n"], "3");
        assert_eq!(json["summary"]["fail"], 1);
        assert!(r.to_table().contains("summary: 1 pass, 1 fail, 1 skipped"));
    }

    #[test]
    fn absorb_prefixes_ids() {
        let mut all = VerificationReport::new("all", 0);
        let mut one = VerificationReport::new("tables", 0);
        one.push(CaseBuilder::new("x").compare(Value::Count(1), Value::Count(1)));
        all.absorb(one);
        assert_eq!(all.cases[0].id, "tables/x");
        assert_eq!(all.summary.pass, 1);
    }
}

//! Transcribed published values. These are the "expected" side of the table
//! suites and are never derived from library code.

use thiserror::Error;

use crate::families::FamilySpec;
use crate::rational::{Rational, RationalError};

const PERFECT_TABLES: &str = include_str!("../../data/perfect_tables.csv");
const CANDIDATE_TABLES: &str = include_str!("../../data/candidate_tables.csv");

#[derive(Debug, Error)]
pub enum DataError {
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("bad value on record {record}: {source}")]
    Value { record: usize, source: RationalError },
    #[error("bad field on record {record}: {text:?}")]
    Field { record: usize, text: String },
}

/// One `(k,t;j)` entry: the Kirchhoff index of `U(k,t,0,j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectEntry {
    pub table: usize,
    pub row: usize,
    pub k: usize,
    pub t: usize,
    pub j: usize,
    pub value: Rational,
}

impl PerfectEntry {
    pub fn matching_number(&self) -> usize {
        (self.k + self.t + 2 * self.j) / 2
    }
}

fn reader(text: &str) -> csv::Reader<&[u8]> {
    csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes())
}

fn field<T: std::str::FromStr>(rec: &csv::StringRecord, i: usize, record: usize) -> Result<T, DataError> {
    let text = rec.get(i).unwrap_or("");
    text.parse().map_err(|_| DataError::Field {
        record,
        text: text.to_string(),
    })
}

pub fn perfect_tables() -> Result<Vec<PerfectEntry>, DataError> {
    let mut out = Vec::new();
    for (record, rec) in reader(PERFECT_TABLES).records().enumerate() {
        let rec = rec?;
        out.push(PerfectEntry {
            table: field(&rec, 0, record)?,
            row: field(&rec, 1, record)?,
            k: field(&rec, 2, record)?,
            t: field(&rec, 3, record)?,
            j: field(&rec, 4, record)?,
            value: rec[5].parse().map_err(|source| DataError::Value { record, source })?,
        });
    }
    Ok(out)
}

/// A family whose parameters may depend on `n`, written like `U(5,3,n-8,0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyTemplate(pub String);

impl FamilyTemplate {
    pub fn instantiate(&self, n: usize) -> Option<FamilySpec> {
        let text = &self.0;
        let open = text.find('(');
        let Some(open) = open else {
            return text.parse().ok();
        };
        let head = &text[..open];
        let inner = text[open + 1..].strip_suffix(')')?;
        let args: Option<Vec<String>> = inner
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                if tok == "n" {
                    Some(n.to_string())
                } else if let Some(c) = tok.strip_prefix("n-") {
                    n.checked_sub(c.parse().ok()?).map(|v| v.to_string())
                } else {
                    tok.parse::<usize>().ok().map(|v| v.to_string())
                }
            })
            .collect();
        format!("{head}({})", args?.join(",")).parse().ok()
    }
}

impl std::fmt::Display for FamilyTemplate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Printed closed form `a n^2 + b n + c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quadratic(pub [Rational; 3]);

impl Quadratic {
    pub fn eval(&self, n: usize) -> Rational {
        let x = Rational::integer(n as i64);
        &self.0[0] * &x * &x + &self.0[1] * &x + &self.0[2]
    }
}

impl std::fmt::Display for Quadratic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({})n^2 + ({})n + ({})", self.0[0], self.0[1], self.0[2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CandidateEntry {
    ClosedForm {
        table: usize,
        family: FamilyTemplate,
        form: Quadratic,
    },
    Cell {
        table: usize,
        family: FamilyTemplate,
        n: usize,
        value: Rational,
    },
}

impl CandidateEntry {
    pub fn table(&self) -> usize {
        match self {
            CandidateEntry::ClosedForm { table, .. } | CandidateEntry::Cell { table, .. } => *table,
        }
    }

    pub fn family(&self) -> &FamilyTemplate {
        match self {
            CandidateEntry::ClosedForm { family, .. } | CandidateEntry::Cell { family, .. } => family,
        }
    }

    /// The matching number of the class the table covers.
    pub fn matching_number(&self) -> usize {
        self.table() - 3
    }
}

pub fn candidate_tables() -> Result<Vec<CandidateEntry>, DataError> {
    let mut out = Vec::new();
    for (record, rec) in reader(CANDIDATE_TABLES).records().enumerate() {
        let rec = rec?;
        let table: usize = field(&rec, 0, record)?;
        let family = FamilyTemplate(rec[1].to_string());
        let parse = |t: &str| t.parse::<Rational>().map_err(|source| DataError::Value { record, source });
        if &rec[2] == "*" {
            let parts: Vec<&str> = rec[3].split_whitespace().collect();
            if parts.len() != 3 {
                return Err(DataError::Field {
                    record,
                    text: rec[3].to_string(),
                });
            }
            out.push(CandidateEntry::ClosedForm {
                table,
                family,
                form: Quadratic([parse(parts[0])?, parse(parts[1])?, parse(parts[2])?]),
            });
        } else {
            out.push(CandidateEntry::Cell {
                table,
                family,
                n: field(&rec, 2, record)?,
                value: parse(&rec[3])?,
            });
        }
    }
    Ok(out)
}

/// Vertex placements on a cycle with their listed pair-resistance sums
/// (1-based labels, as printed).
pub fn sigma_cases() -> Vec<(usize, Vec<usize>, Rational)> {
    let q = Rational::frac;
    vec![
        (10, vec![1, 2, 3, 4], q(8, 1)),
        (10, vec![1, 2, 3, 6], q(52, 5)),
        (10, vec![1, 2, 5, 6], q(56, 5)),
        (10, vec![1, 2, 5, 8], q(12, 1)),
        (11, vec![1, 2, 3, 4, 5], q(170, 11)),
        (11, vec![1, 2, 3, 4, 7], q(202, 11)),
        (11, vec![1, 2, 3, 6, 7], q(218, 11)),
        (11, vec![1, 2, 3, 6, 9], q(226, 11)),
        (11, vec![1, 2, 5, 8, 9], q(234, 11)),
        (12, vec![1, 2, 3, 4], q(25, 3)),
        (12, vec![1, 2, 3, 6], q(34, 3)),
        (12, vec![1, 2, 3, 8], q(37, 3)),
        (12, vec![1, 2, 5, 6], q(37, 3)),
        (12, vec![1, 2, 7, 8], q(41, 3)),
        (12, vec![1, 2, 5, 8], q(14, 1)),
        (12, vec![1, 2, 5, 10], q(41, 3)),
        (12, vec![1, 4, 7, 10], q(15, 1)),
    ]
}

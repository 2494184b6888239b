//! Acceptance criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines always reach the console.
//! The process exits nonzero when any criterion fails for a reason other than
//! the two printed table values that exact computation contradicts; those are
//! pinned below to their exact computed values and still print FAIL.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use unikirch::resistance::{kf_cycle, kfv_cycle};
use unikirch::verification::{run_suite, CaseRecord, Status, Suite, SuiteOptions, VerificationReport};
use unikirch::{kirchhoff_index, FamilySpec, Rational};

/// Printed table entries whose value disagrees with exact computation:
/// (id, printed, computed).
const KNOWN_TABLE_DISCREPANCIES: [(&str, &str, &str); 2] =
    [("(11,3;0)", "4249/20", "2337/11"), ("(3,3;5)", "881/3", "884/3")];

struct Verdict {
    number: u8,
    title: &'static str,
    problems: Vec<String>,
    elapsed: Duration,
    /// Failures that match a documented discrepancy exactly.
    explained: bool,
}

fn run(suite: Suite) -> VerificationReport {
    run_suite(suite, &SuiteOptions::default()).expect("suite runs")
}

fn case<'a>(report: &'a VerificationReport, id: &str) -> Option<&'a CaseRecord> {
    report.cases.iter().find(|c| c.id == id)
}

fn failures(report: &VerificationReport) -> Vec<String> {
    report
        .failures()
        .map(|c| format!("{}: expected {}, computed {}", c.id, c.expected, c.computed))
        .collect()
}

fn require(problems: &mut Vec<String>, ok: bool, what: impl Into<String>) {
    if !ok {
        problems.push(what.into());
    }
}

fn require_case(problems: &mut Vec<String>, report: &VerificationReport, id: &str, computed: &str) {
    match case(report, id) {
        Some(c) if c.status == Status::Pass && c.computed.to_string() == computed => {}
        Some(c) => problems.push(format!("{id}: {} {}", c.status.as_str(), c.computed)),
        None => problems.push(format!("{id}: missing")),
    }
}

fn kf(spec: &str) -> Rational {
    let g = spec.parse::<FamilySpec>().unwrap().build().unwrap();
    kirchhoff_index(&g).unwrap()
}

fn timed(
    number: u8,
    title: &'static str,
    limit: Duration,
    body: impl FnOnce(&mut Vec<String>) -> bool,
) -> Verdict {
    let start = Instant::now();
    let mut problems = Vec::new();
    let explained = body(&mut problems);
    let elapsed = start.elapsed();
    if elapsed > limit {
        problems.push(format!("took {elapsed:?}, limit {limit:?}"));
    }
    Verdict {
        number,
        title,
        problems,
        elapsed,
        explained,
    }
}

fn table_reproduction() -> Verdict {
    timed(1, "table reproduction", Duration::from_secs(10), |p| {
        let report = run(Suite::Tables);
        require(p, report.cases.len() == 131, format!("{} entries", report.cases.len()));
        for (id, value) in [("(6,0;0)", "35/2"), ("(8,2;0)", "655/8"), ("(7,7;0)", "203"), ("(5,1;5)", "284")] {
            require_case(p, &report, id, value);
        }
        for (spec, value) in [("U(6,0,0,0)", "35/2"), ("U(8,2,0,0)", "655/8"), ("U(5,1,0,5)", "284")] {
            require(p, kf(spec).to_string() == value, format!("{spec} != {value}"));
        }
        let failed: Vec<_> = report.failures().collect();
        let explained = !failed.is_empty()
            && failed.len() == KNOWN_TABLE_DISCREPANCIES.len()
            && failed.iter().all(|c| {
                KNOWN_TABLE_DISCREPANCIES.iter().any(|&(id, printed, computed)| {
                    c.id == id && c.expected.to_string() == printed && c.computed.to_string() == computed
                })
            });
        let explained = explained && p.is_empty();
        p.extend(failures(&report));
        explained
    })
}

fn candidate_tables() -> Verdict {
    timed(2, "candidate tables and closed forms", Duration::from_secs(5), |p| {
        let report = run(Suite::CandidateTables);
        p.extend(failures(&report));
        require(p, report.summary.pass > 0, "no cases");
        require_case(p, &report, "m=4 U(6,2,n-8,0) n=12", "368/3; m=4");
        false
    })
}

fn perfect_matchings() -> Verdict {
    timed(3, "perfect matching minimizers m=2..6", Duration::from_secs(120), |p| {
        let report = run(Suite::Perfect);
        p.extend(failures(&report));
        for (m, value) in [
            (2, "{C4} 5"),
            (3, "{C6} 35/2"),
            (4, "{C8} 42"),
            (5, "{U(8,2,0,0)} 655/8"),
            (6, "{U(8,4,0,0)} 271/2"),
        ] {
            require_case(p, &report, &format!("m={m}"), value);
        }
        false
    })
}

fn extremal_cells() -> Verdict {
    timed(4, "extremal minimizer sets n<=12", Duration::from_secs(600), |p| {
        let report = run(Suite::Extremal);
        p.extend(failures(&report));
        let cells = report.cases.iter().filter(|c| c.id.starts_with("n=")).count();
        require(p, cells == 25, format!("{cells} cells"));
        require_case(p, &report, "n=12,m=2", "{U(3,1,8,0), U(4,1,7,0)} 113");
        require_case(p, &report, "n=9,m=4", "{U(7,1,1,0), C9} 60");
        require_case(p, &report, "n=11,m=4", "{U(6,2,3,0), U(7,1,3,0)} 100");
        false
    })
}

fn vertex_sums() -> Verdict {
    timed(5, "vertex-sum lower bound 6<=n<=10", Duration::from_secs(300), |p| {
        let report = run(Suite::VertexSum);
        p.extend(failures(&report));
        require(p, report.cases.len() == 9, format!("{} cells", report.cases.len()));
        false
    })
}

fn deletions() -> Verdict {
    timed(6, "deletion inequalities n<=10", Duration::from_secs(300), |p| {
        let report = run(Suite::Deletion);
        p.extend(failures(&report));
        require(p, report.cases.len() == 9, format!("{} cells", report.cases.len()));
        false
    })
}

fn girth() -> Verdict {
    timed(7, "per-girth minima n<=9", Duration::from_secs(120), |p| {
        let report = run(Suite::Girth);
        p.extend(failures(&report));
        let cells: usize = (4..=9).map(|n| n - 3).sum();
        require(p, report.cases.len() == cells, format!("{} cells", report.cases.len()));
        require_case(p, &report, "n=9,k=7", "{U(7,1,1,0)} 60");
        false
    })
}

fn sigma_placements() -> Verdict {
    timed(8, "pendant placement sums on C10/C11/C12", Duration::from_secs(5), |p| {
        let report = run(Suite::Sigma);
        p.extend(failures(&report));
        let listed = report.cases.iter().filter(|c| c.id.contains(" {v")).count();
        require(p, listed == 17, format!("{listed} listed placements"));
        require_case(p, &report, "C10 {v1,v2,v5,v8}", "12");
        require_case(p, &report, "C10 t=4 feasible classes", "4");
        require_case(p, &report, "C11 t=5 feasible classes", "5");
        require_case(p, &report, "C12 t=4 feasible classes", "8");
        false
    })
}

fn resistance_methods() -> Verdict {
    timed(9, "cross-method resistance n<=8 and cycles", Duration::from_secs(120), |p| {
        let report = run(Suite::Resistance);
        p.extend(failures(&report));
        for n in 3..=8 {
            require_case(p, &report, &format!("n={n} methods agree"), "0");
        }
        require_case(p, &report, "cycle closed forms n=3..50", "48");
        for n in [3usize, 17, 50] {
            let n3 = (n * n * n - n) as i64;
            require(p, kf_cycle(n).unwrap() == Rational::frac(n3, 12), format!("Kf(C{n})"));
            require(p, kfv_cycle(n).unwrap() == Rational::frac((n * n - 1) as i64, 6), format!("Kf_v(C{n})"));
        }
        false
    })
}

fn merge_identity() -> Verdict {
    timed(10, "merge identity on 200 seeded instances", Duration::from_secs(30), |p| {
        let report = run(Suite::Merge);
        p.extend(failures(&report));
        require_case(p, &report, "random", "200");
        false
    })
}

fn oracles() -> Verdict {
    timed(11, "oracle equivalence", Duration::from_secs(600), |p| {
        let report = run(Suite::Oracles);
        p.extend(failures(&report));
        for n in 3..=8 {
            let id = format!("n={n} labeled count");
            require(p, case(&report, &id).is_some(), format!("{id}: missing"));
        }
        require_case(p, &report, "n=8 labeled count", "1436568");
        for n in 3..=10 {
            require_case(p, &report, &format!("n={n} matching number"), "0");
        }
        for size in 1..=8 {
            let id = format!("trees size={size} Kf = W");
            require(p, case(&report, &id).is_some_and(|c| c.status == Status::Pass), id);
        }
        false
    })
}

fn main() -> ExitCode {
    let verdicts = [
        table_reproduction(),
        candidate_tables(),
        perfect_matchings(),
        extremal_cells(),
        vertex_sums(),
        deletions(),
        girth(),
        sigma_placements(),
        resistance_methods(),
        merge_identity(),
        oracles(),
    ];
    let mut unexplained = 0;
    for v in &verdicts {
        let status = if v.problems.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {status}  {} ({} ms)", v.number, v.title, v.elapsed.as_millis());
        for problem in &v.problems {
            println!("    {problem}");
        }
        if !v.problems.is_empty() {
            if v.explained {
                println!("    known discrepancy: printed value contradicted by exact computation");
            } else {
                unexplained += 1;
            }
        }
    }
    let passed = verdicts.iter().filter(|v| v.problems.is_empty()).count();
    println!("acceptance: {passed} of {} criteria pass", verdicts.len());
    if unexplained == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

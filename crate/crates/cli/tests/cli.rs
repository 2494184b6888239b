use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn unikirch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unikirch"))
        .args(args)
        .env_remove("UNIKIRCH_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write_family(dir: &Path, spec: &str) -> String {
    let path = dir.join("g.txt");
    let o = unikirch(&["construct", "--family", spec, "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    path.to_str().unwrap().to_string()
}

#[test]
fn compute_prints_exact_index() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write_family(dir.path(), "C6");
    assert_eq!(stdout(&unikirch(&["compute", "--input", &c6])), "Kf = 35/2\n");
    let u82 = write_family(dir.path(), "U(8,2)");
    assert_eq!(stdout(&unikirch(&["compute", "--input", &u82])), "Kf = 655/8\n");
    let o = unikirch(&["compute", "--input", &u82, "--decimal"]);
    assert_eq!(stdout(&o), "Kf = 655/8  (decimal 81.875000)\n");
}

#[test]
fn compute_optional_blocks() {
    let dir = tempfile::tempdir().unwrap();
    let p3 = dir.path().join("p3.txt");
    fs::write(&p3, "3\n0 1\n1 2\n").unwrap();
    let o = unikirch(&[
        "compute",
        "--input",
        p3.to_str().unwrap(),
        "--wiener",
        "--vertex-sums",
        "--resistance-matrix",
    ]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "Kf = 4\nW = 4\nvertex sums:\n0 3\n1 2\n2 3\nresistance matrix:\n3\n1 2\n1\n"
    );
}

#[test]
fn construct_families() {
    let o = unikirch(&["construct", "--family", "U(3,2,2,1)"]);
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("9"));
    assert_eq!(text.lines().count(), 1 + 9);

    let c5 = stdout(&unikirch(&["construct", "--family", "C5"]));
    assert_eq!(c5, "5\n0 1\n0 4\n1 2\n2 3\n3 4\n");

    let dir = tempfile::tempdir().unwrap();
    let u = write_family(dir.path(), "Unm(14,4)");
    assert_eq!(fs::read_to_string(&u).unwrap().lines().next(), Some("14"));
    assert_eq!(stdout(&unikirch(&["compute", "--input", &u])), "Kf = 174\n");
}

#[test]
fn enumerate_counts_and_emit() {
    assert_eq!(stdout(&unikirch(&["enumerate", "--n", "4", "--count-only"])), "4,2,2\n4,*,2\n");
    assert_eq!(
        stdout(&unikirch(&["enumerate", "--n", "8", "--count-only"])),
        "8,2,7\n8,3,48\n8,4,34\n8,*,89\n"
    );
    assert_eq!(
        stdout(&unikirch(&["enumerate", "--n", "8", "--m", "4", "--count-only"])),
        "8,4,34\n8,*,34\n"
    );

    let dir = tempfile::tempdir().unwrap();
    let emit = dir.path().join("classes");
    let o = unikirch(&["enumerate", "--n", "6", "--emit", emit.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 13);
    let mut names: Vec<String> = fs::read_dir(&emit)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 13);
    for line in stdout(&o).lines() {
        let hash = line.split_whitespace().next().unwrap();
        let text = fs::read_to_string(emit.join(format!("{hash}.txt"))).unwrap();
        assert_eq!(text.lines().next(), Some("6"));
    }
}

#[test]
fn extremal_lists_minimizers() {
    assert_eq!(stdout(&unikirch(&["extremal", "--n", "10", "--m", "5"])), "U(8,2,0,0)  655/8\n");
    assert_eq!(
        stdout(&unikirch(&["extremal", "--n", "12", "--m", "2"])),
        "U(3,1,8,0)  113\nU(4,1,7,0)  113\n"
    );
    let o = unikirch(&["extremal", "--n", "9", "--m", "4", "--invariant", "kirchhoff"]);
    let text = stdout(&o);
    assert!(text.contains("C9  60") && text.contains("U(7,1,1,0)  60"), "{text}");
}

#[test]
fn verify_reports_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("sigma.json");
    let o = unikirch(&["verify", "--suite", "sigma", "--json", json.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("summary: 26 pass, 0 fail, 0 skipped"));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["suite"], "sigma");
    assert_eq!(report["summary"]["pass"], 26);
    assert_eq!(report["cases"][3]["expected"], "12");

    // Two printed table entries disagree with exact computation.
    let o = unikirch(&["verify", "--suite", "tables"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("(11,3;0)") && err.contains("(3,3;5)"), "{err}");
}

#[test]
fn verify_is_byte_identical_across_runs() {
    let a = unikirch(&["verify", "--suite", "girth", "--max-n", "8", "--threads", "3"]);
    let b = unikirch(&["verify", "--suite", "girth", "--max-n", "8", "--threads", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn threads_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_unikirch"))
        .args(["enumerate", "--n", "5", "--count-only"])
        .env("UNIKIRCH_THREADS", "2")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o), "5,2,5\n5,*,5\n");
}

#[test]
fn error_paths() {
    let dir = tempfile::tempdir().unwrap();
    let disconnected = dir.path().join("d.txt");
    fs::write(&disconnected, "4\n0 1\n2 3\n").unwrap();
    let o = unikirch(&["compute", "--input", disconnected.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stderr(&o).lines().count(), 1);

    let bad = dir.path().join("b.txt");
    fs::write(&bad, "3\n0 x\n").unwrap();
    let o = unikirch(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(stderr(&o).lines().count(), 1);

    let o = unikirch(&["compute", "--input", dir.path().join("missing").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    for args in [
        &["construct", "--family", "U(2,1,0,0)"][..],
        &["construct", "--family", "Q7"],
        &["verify", "--suite", "nope"],
        &["compute", "--bogus"],
        &["extremal", "--n", "5", "--m", "4"],
    ] {
        let o = unikirch(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

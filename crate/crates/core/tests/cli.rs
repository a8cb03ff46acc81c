use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leibniz_bialgebra::corpus;
use leibniz_bialgebra::report::sha256_hex;

fn corpus_path(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
        .display()
        .to_string()
}

fn leibniz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

struct Scratch(PathBuf);

impl Scratch {
    fn new(tag: &str) -> Self {
        let dir = std::env::temp_dir().join(format!("leibniz-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        Scratch(dir)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    }
}

impl Drop for Scratch {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

#[test]
fn check_reports_chirality() {
    let o = leibniz(&["check", &corpus_path("example2.alg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("chirality: right\n"));
    let o = leibniz(&["check", &corpus_path("example3.alg")]);
    assert!(stdout(&o).starts_with("chirality: both\n"));
}

#[test]
fn declared_side_must_hold() {
    let s = Scratch::new("declared");
    let wrong = s.file("wrong.alg", &corpus::EXAMPLE1.replace("side: left", "side: right"));
    let o = leibniz(&["check", &wrong]);
    assert_eq!(o.status.code(), Some(1), "{}", stderr(&o));
    assert!(stderr(&o).contains("right"));
}

#[test]
fn failed_verifications_exit_one() {
    let s = Scratch::new("verify");
    let r = s.file("bad.r", "dim: 2\nr 1 1 = 1\n");
    let o = leibniz(&["ybe", &corpus_path("example3.alg"), "--side", "left", "--r", &r]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("CYBE: violated"));

    // [e^1,e^2] = -(e^1+e^2), [e^2,e^1] = e^1+e^2 has no r under right1
    let dual = s.file("lie.dual", "dim: 2\nf 1 2 1 = -1\nf 1 2 2 = -1\nf 2 1 1 = 1\nf 2 1 2 = 1\n");
    let o = leibniz(&["rmatrix", &corpus_path("example2.alg"), "--case", "right1", "--dual", &dual]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "r-matrices: infeasible\n");

    let o = leibniz(&["duals", &corpus_path("example1.alg"), "--scenario", "R-2-R"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn successful_checks_exit_zero() {
    let ex3 = corpus_path("example3.alg");
    let r1 = corpus_path("example3-r1.r");
    for cmd in [
        vec!["ybe", &ex3, "--side", "right", "--r", &r1],
        vec!["gybe", &ex3, "--side", "right", "--r", &r1],
        vec!["adjoint", &ex3],
        vec!["actions", &ex3, "--case", "1"],
    ] {
        let o = leibniz(&cmd);
        assert_eq!(o.status.code(), Some(0), "{cmd:?}: {}", stderr(&o));
    }
    let o = leibniz(&[
        "duals",
        &corpus_path("example1.alg"),
        "--dual",
        &corpus_path("example1-family1.dual"),
        "--scenario",
        "LR-4-L",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dual under LR-4-L: cocycle ok, dual Leibniz ok"));
}

#[test]
fn recovers_the_r_matrix_family() {
    let o = leibniz(&[
        "rmatrix",
        &corpus_path("example1.alg"),
        "--case",
        "left4",
        "--dual",
        &corpus_path("example1-family1.dual"),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("r-matrices: affine family of dimension 2\n"));
}

#[test]
fn bad_input_exits_two() {
    let s = Scratch::new("input");
    let cases = [
        ("syntax.alg", "dim: 2\nf 1 1 = 1\n", "line 2"),
        ("range.alg", "dim: 2\nf 1 3 1 = 1\n", "line 2"),
        ("dup.alg", "dim: 2\nf 1 1 2 = 1\nf 1 1 2 = 2\n", "line 3"),
        ("big.alg", "dim: 9\n", "9"),
        ("nodim.alg", "f 1 1 1 = 1\n", ""),
        ("value.alg", "dim: 2\nf 1 1 2 = 1/0\n", "line 2"),
    ];
    for (name, text, needle) in cases {
        let o = leibniz(&["check", &s.file(name, text)]);
        assert_eq!(o.status.code(), Some(2), "{name}");
        assert!(stderr(&o).contains(needle), "{name}: {}", stderr(&o));
    }
    assert_eq!(leibniz(&["check", "/nonexistent/file.alg"]).status.code(), Some(2));
    assert_eq!(leibniz(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(leibniz(&["ybe", &corpus_path("example3.alg")]).status.code(), Some(2));
    assert_eq!(
        leibniz(&[
            "rmatrix",
            &corpus_path("example3.alg"),
            "--case",
            "sideways",
            "--dual",
            &corpus_path("example3.alg")
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(leibniz(&["--help"]).status.code(), Some(0));
}

#[test]
fn json_output_is_sorted_and_parses() {
    let o = leibniz(&["check", &corpus_path("example1.alg"), "--format", "json"]);
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["chirality"], "left");
    assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", text);
}

#[test]
fn reports_are_byte_identical_and_digest_inputs() {
    let args = [
        "report",
        &corpus_path("example3.alg"),
        "--r",
        &corpus_path("example3-r1.r"),
        "--seed",
        "5",
    ];
    let (a, b) = (leibniz(&args), leibniz(&args));
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["input"]["digest"]["algebra_sha256"], sha256_hex(corpus::EXAMPLE3));
    assert_eq!(v["input"]["digest"]["r_sha256"], sha256_hex(corpus::EXAMPLE3_R1));
    let other = leibniz(&[
        "report",
        &corpus_path("example3.alg"),
        "--r",
        &corpus_path("example3-r1.r"),
        "--seed",
        "6",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn corpus_subcommands() {
    let o = leibniz(&["corpus", "list"]);
    let names: Vec<&str> = corpus::FILES.iter().map(|(n, _)| *n).collect();
    assert_eq!(stdout(&o).lines().collect::<Vec<_>>(), names);
    let o = leibniz(&["corpus", "show", "example4.alg"]);
    assert_eq!(stdout(&o), corpus::EXAMPLE4);
    assert_eq!(leibniz(&["corpus", "show", "example9.alg"]).status.code(), Some(2));

    let s = Scratch::new("extract");
    let dir = s.0.join("out");
    let o = leibniz(&["corpus", "extract", dir.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    for (name, text) in corpus::FILES {
        assert_eq!(std::fs::read_to_string(dir.join(name)).unwrap(), text);
    }
}

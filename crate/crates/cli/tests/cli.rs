use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use signed_join::coloring::{is_proper, ColorSet};
use signed_join::format::{parse_coloring, parse_graph};
use signed_join::graph::all_positive_join;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn sgjoin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgjoin"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn stats_output() {
    let o = sgjoin(&["stats", path_str(&fixture("neg_k2.sg"))]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("chi=2 M=1 exceptional=yes"));
    assert_eq!(lines.next(), Some("deficiency_set={-1}"));

    let o = sgjoin(&["stats", path_str(&fixture("k1.sg"))]);
    assert!(stdout(&o).starts_with("chi=1 M=0 exceptional=n/a\n"));

    let o = sgjoin(&["stats", path_str(&fixture("deficient_k6.sg"))]);
    assert!(stdout(&o).starts_with("chi=4 M=2 exceptional=yes\n"));
}

#[test]
fn exhaustive_two_by_two() {
    let o = sgjoin(&["verify", "--exhaustive", "2", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let pairs: Vec<&str> = text.lines().filter(|l| l.starts_with("pair ")).collect();
    assert_eq!(pairs.len(), 9);
    assert!(pairs.iter().all(|l| l.ends_with("agree=yes")));
    assert!(text
        .lines()
        .last()
        .unwrap()
        .starts_with("summary pairs=9 agree=9 theorem-mismatch=0"));
}

#[test]
fn random_reports_are_reproducible() {
    let args = [
        "verify", "--random", "40", "--size", "2", "3", "--seed", "11",
    ];
    let a = sgjoin(&args);
    let b = sgjoin(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(
        stdout(&a)
            .lines()
            .filter(|l| l.starts_with("pair "))
            .count(),
        40
    );
    let c = sgjoin(&[
        "verify", "--random", "40", "--size", "2", "3", "--seed", "12",
    ]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn theorem_mismatch_exits_two() {
    let o = sgjoin(&[
        "verify", "--random", "300", "--total", "4", "8", "--seed", "20240601",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("finding theorem-mismatch"));
}

#[test]
fn color_join_exception_case() {
    let g1 = fixture("neg_k2.sg");
    let g2 = fixture("k4_neg_matching.sg");
    let o = sgjoin(&["color-join", path_str(&g1), path_str(&g2)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l == "# case=L4.2 swapped=no"));
    assert!(text.lines().any(|l| l == "# palette=4"));
    let kappa = parse_coloring(&text).unwrap();
    let join = all_positive_join(
        &parse_graph(&fs::read_to_string(&g1).unwrap()).unwrap(),
        &parse_graph(&fs::read_to_string(&g2).unwrap()).unwrap(),
    );
    assert!(is_proper(&join, &kappa));
    let palette = ColorSet::new(4).unwrap();
    assert!(kappa.colors().iter().all(|&c| palette.contains(c)));
}

#[test]
fn negative_and_positive_joins_have_equal_chi() {
    let dir = tempfile::tempdir().unwrap();
    let g1 = fixture("pos_k2.sg");
    let g2 = fixture("k4_neg_matching.sg");
    let mut chis = Vec::new();
    for sign in ["+", "-"] {
        let o = sgjoin(&["join", path_str(&g1), path_str(&g2), "--sign", sign]);
        assert_eq!(o.status.code(), Some(0));
        let path = dir.path().join(format!("join{sign}.sg"));
        fs::write(&path, &o.stdout).unwrap();
        let j = parse_graph(&stdout(&o)).unwrap();
        assert_eq!((j.order(), j.edge_count()), (6, 1 + 6 + 8));
        let s = sgjoin(&["stats", path_str(&path)]);
        chis.push(stdout(&s).split_whitespace().next().unwrap().to_string());
    }
    assert_eq!(chis[0], chis[1]);
}

#[test]
fn dot_export() {
    let o = sgjoin(&[
        "export-dot",
        path_str(&fixture("deficient_k6.sg")),
        "--coloring",
        path_str(&fixture("deficient_k6.col")),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("style=solid").count(), 6);
    assert_eq!(text.matches("style=dashed").count(), 9);
    for (v, c) in [1, -2, 3, 3, 1, -2].iter().enumerate() {
        assert!(text.contains(&format!("{v} [label=\"{c}\"]")));
    }
    let o = sgjoin(&["export-dot", path_str(&fixture("neg_k2.sg"))]);
    assert_eq!(stdout(&o).matches("style=dashed").count(), 1);
}

#[test]
fn errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let dup = dir.path().join("dup.sg");
    fs::write(&dup, "sg 2\n0 1 -\n0 1 +\n").unwrap();
    let o = sgjoin(&["stats", path_str(&dup)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    assert_eq!(sgjoin(&["bogus"]).status.code(), Some(1));
    assert_eq!(sgjoin(&["verify"]).status.code(), Some(1));
    assert_eq!(
        sgjoin(&["verify", "--exhaustive", "6", "6"]).status.code(),
        Some(1)
    );
    let k1 = fixture("k1.sg");
    let o = sgjoin(&["join", path_str(&k1), path_str(&k1), "--sign", "x"]);
    assert_eq!(o.status.code(), Some(1));
    let missing = dir.path().join("missing.sg");
    assert_eq!(
        sgjoin(&["stats", path_str(&missing)]).status.code(),
        Some(1)
    );
    let short = dir.path().join("short.col");
    fs::write(&short, "1\n").unwrap();
    let o = sgjoin(&[
        "export-dot",
        path_str(&fixture("neg_k2.sg")),
        "--coloring",
        path_str(&short),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(sgjoin(&["--help"]).status.code(), Some(0));
}

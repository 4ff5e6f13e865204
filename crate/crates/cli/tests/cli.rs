use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn cwcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cwcert"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const K4: &str = "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
const DIAMOND: &str = "4 5\n0 1\n0 2\n0 3\n1 2\n1 3\n";
const C7: &str = "7 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n0 6\n";
const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const P3: &str = "3 2\n0 1\n1 2\n";

#[test]
fn check_free_statuses() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4", K4);
    let diamond = write(&dir, "diamond", DIAMOND);
    let c7 = write(&dir, "c7", C7);
    assert_eq!(code(&cwcert(&["check-free", s(&k4), "--spec", "diamond"])), 0);
    let out = cwcert(&["check-free", s(&diamond), "--spec", "diamond"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).starts_with("contains diamond: "));
    assert_eq!(code(&cwcert(&["check-free", s(&c7), "--spec", "2P1+P3"])), 0);
    assert_eq!(code(&cwcert(&["check-free", s(&c7), "--spec", "2P1+P2"])), 1);
    let c9 = write(&dir, "c9", "9 9\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n0 8\n");
    assert_eq!(code(&cwcert(&["check-free", s(&c9), "--spec", "2P1+P3"])), 1);
}

#[test]
fn usage_and_io_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad", "3 1\n0 7\n");
    assert_eq!(code(&cwcert(&["check-free", s(&bad), "--spec", "P3"])), 2);
    assert_eq!(code(&cwcert(&["check-free", "/nonexistent", "--spec", "P3"])), 2);
    let k4 = write(&dir, "k4", K4);
    assert_eq!(code(&cwcert(&["check-free", s(&k4), "--spec", "Q7"])), 2);
    assert_eq!(code(&cwcert(&["classify-pair", "x", "3"])), 2);
    assert_eq!(code(&cwcert(&["construct", "wall", "--height", "1"])), 2);
    assert_eq!(code(&cwcert(&["frobnicate"])), 2);
}

#[test]
fn clique_width_values() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4", P4);
    let k1 = write(&dir, "k1", "1 0\n");
    let k5 = write(&dir, "k5", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    let expr = dir.path().join("p4.kexpr");
    let out = cwcert(&["clique-width", s(&p4), "--out", s(&expr)]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "3\n");
    assert!(!fs::read_to_string(&expr).unwrap().trim().is_empty());
    assert!(stdout(&cwcert(&["clique-width", s(&k1)])).starts_with("1\n"));
    assert!(stdout(&cwcert(&["clique-width", s(&k5)])).starts_with("2\n"));
    assert_eq!(code(&cwcert(&["clique-width", s(&p4), "--kmax", "2"])), 1);
}

#[test]
fn clique_width_size_limit_needs_override() {
    let dir = TempDir::new().unwrap();
    let edges: Vec<String> = (0..11).map(|i| format!("{i} {}", i + 1)).collect();
    let p12 = write(&dir, "p12", &format!("12 11\n{}\n", edges.join("\n")));
    assert_eq!(code(&cwcert(&["clique-width", s(&p12)])), 2);
    let out = cwcert(&["clique-width", s(&p12), "--unsafe-size", "--kmax", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("3\n"));
}

#[test]
fn certify_then_verify() {
    let dir = TempDir::new().unwrap();
    let k4 = write(&dir, "k4", K4);
    let cert = dir.path().join("cert.json");
    let out = cwcert(&["certify", s(&k4), "--class", "iii", "--out", s(&cert)]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let json = fs::read_to_string(&cert).unwrap();
    assert!(json.contains("\"chordal_diamond_free\""));
    assert_eq!(code(&cwcert(&["verify-certificate", s(&k4), s(&cert)])), 0);
    let again = cwcert(&["certify", s(&k4), "--class", "iii"]);
    assert_eq!(stdout(&again), json);

    let p4 = write(&dir, "p4", P4);
    assert_eq!(code(&cwcert(&["verify-certificate", s(&p4), s(&cert)])), 1);
    let diamond = write(&dir, "diamond", DIAMOND);
    let out = cwcert(&["certify", s(&diamond), "--class", "ii"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("diamond"));
}

#[test]
fn certify_k6_and_graph6_input() {
    let dir = TempDir::new().unwrap();
    let k6 = write(&dir, "k6", "E~~w\n");
    let out = cwcert(&["--format", "graph6", "certify", s(&k6), "--class", "iii"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("\"schema\""));
}

#[test]
fn construct_kinds() {
    let dir = TempDir::new().unwrap();
    let wall = dir.path().join("wall.txt");
    let out = cwcert(&["construct", "wall", "--height", "2", "--out", s(&wall)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("vertices 16 edges 19"));
    assert!(fs::read_to_string(&wall).unwrap().starts_with("16 19\n"));

    let family = dir.path().join("family.txt");
    let out = cwcert(&["construct", "family", "--height", "2", "--out", s(&family)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("vertices 35 "));
    assert!(!stdout(&out).contains("FAIL"));

    let p3 = write(&dir, "p3", P3);
    let red = dir.path().join("red.txt");
    let out = cwcert(&["construct", "gi-reduce", "--input", s(&p3), "--out", s(&red)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("check recovery pass"));
    assert!(fs::read_to_string(&red).unwrap().contains("PART B: "));
}

#[test]
fn classify_pair_table() {
    assert_eq!(stdout(&cwcert(&["classify-pair", "2", "3"])), "Bounded\n");
    assert_eq!(stdout(&cwcert(&["classify-pair", "3", "3"])), "Unbounded\n");
    assert_eq!(stdout(&cwcert(&["classify-pair", "0", "9"])), "Bounded\n");
}

#[test]
fn generate_free_is_reproducible() {
    let a = cwcert(&[
        "generate-free",
        "--n",
        "8",
        "--spec",
        "diamond",
        "--count",
        "3",
        "--seed",
        "7",
    ]);
    let b = cwcert(&[
        "generate-free",
        "--n",
        "8",
        "--spec",
        "diamond",
        "--count",
        "3",
        "--seed",
        "7",
    ]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 3);
}

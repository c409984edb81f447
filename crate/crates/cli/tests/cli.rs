//! End-to-end tests of the command-line surface: exit codes, file outputs,
//! re-verification, and byte-identical determinism under fixed seeds.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_locbox")
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(bin())
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn tmpdir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("locbox-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

const C4: &str = "# n 4\n0 1\n1 2\n2 3\n0 3\n";

#[test]
fn exact_lbox_writes_certificate_and_verifies() {
    let dir = tmpdir("exact");
    let c4 = write(&dir, "c4.el", C4);
    let out = run_in(&dir, &["exact", "lbox", &c4]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.starts_with("1\n"), "stdout: {stdout}");
    let cert = format!("{c4}.lbox.json");
    assert!(Path::new(&cert).exists());
    let verify = run_in(&dir, &["verify", &c4, &cert, "--d", "1"]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn verify_rejects_corrupted_representation_with_exit_1() {
    let dir = tmpdir("verify");
    let c4 = write(&dir, "c4.el", C4);
    // A representation of the wrong graph (all-line boxes realize K4).
    let bad = write(
        &dir,
        "bad.json",
        r#"{"n": 4, "dims": 0, "boxes": [[], [], [], []]}"#,
    );
    let out = run_in(&dir, &["verify", &c4, &bad, "--d", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("violation"), "stderr: {stderr}");
}

#[test]
fn usage_errors_exit_2() {
    let dir = tmpdir("usage");
    for args in [
        vec!["frobnicate"],
        vec!["exact", "lbox"],
        vec!["exact", "lbox", "x.el", "--bogus", "1"],
        vec![
            "mc",
            "multicyclic",
            "--n",
            "10",
            "--c",
            "0.5",
            "--trials",
            "5",
        ], // no --seed
        vec!["construct", "degree", "g.el", "--out", "r.json"], // no --seed
    ] {
        let out = run_in(&dir, &args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn construct_shift_then_verify() {
    let dir = tmpdir("shift");
    let rep = dir.join("s5.rep.json");
    let graph = dir.join("s5c.el");
    let out = run_in(
        &dir,
        &[
            "construct",
            "shift",
            "--n",
            "5",
            "--out",
            rep.to_str().unwrap(),
            "--graph-out",
            graph.to_str().unwrap(),
        ],
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let verify = run_in(
        &dir,
        &[
            "verify",
            graph.to_str().unwrap(),
            rep.to_str().unwrap(),
            "--d",
            "2",
        ],
    );
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn construct_gcreg_exits_nonzero_on_bad_hypotheses() {
    let dir = tmpdir("gcreg");
    // C4's complement has girth... C4 complement is 2K2 (girth infinite), so
    // use a graph whose complement has girth 4: the complement of C4 itself.
    let c4c = write(&dir, "c4c.el", "# n 4\n0 2\n1 3\n");
    let out = run_in(&dir, &["construct", "gcreg", &c4c, "--out", "x.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn identical_seeds_are_byte_identical() {
    let dir = tmpdir("determinism");
    for (rep_name, graph_name) in [("a.rep.json", "a.el"), ("b.rep.json", "b.el")] {
        let out = run_in(
            &dir,
            &[
                "construct",
                "gnp",
                "--n",
                "120",
                "--np",
                "2.0",
                "--epsilon",
                "0.5",
                "--seed",
                "11",
                "--out",
                rep_name,
                "--graph-out",
                graph_name,
            ],
        );
        assert_eq!(
            out.status.code(),
            Some(0),
            "stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let a = std::fs::read(dir.join("a.rep.json")).unwrap();
    let b = std::fs::read(dir.join("b.rep.json")).unwrap();
    assert_eq!(a, b, "representation files differ between identical runs");
    let ga = std::fs::read(dir.join("a.el")).unwrap();
    let gb = std::fs::read(dir.join("b.el")).unwrap();
    assert_eq!(ga, gb, "graph files differ between identical runs");
}

#[test]
fn codec_roundtrip_through_files() {
    let dir = tmpdir("codec");
    let c4 = write(&dir, "c4.el", C4);
    let out = run_in(&dir, &["exact", "lbox", &c4]);
    assert_eq!(out.status.code(), Some(0));
    let cert = format!("{c4}.lbox.json");
    let bits = dir.join("c4.bits");
    let out = run_in(
        &dir,
        &[
            "codec",
            "encode",
            &cert,
            "--d",
            "2",
            "--out",
            bits.to_str().unwrap(),
        ],
    );
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    let decoded = dir.join("c4.decoded.json");
    let out = run_in(
        &dir,
        &[
            "codec",
            "decode",
            bits.to_str().unwrap(),
            "--n",
            "4",
            "--d",
            "2",
            "--out",
            decoded.to_str().unwrap(),
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    // The decoded representation still realizes C4.
    let verify = run_in(
        &dir,
        &["verify", &c4, decoded.to_str().unwrap(), "--d", "2"],
    );
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn mc_and_bounds_emit_csv() {
    let dir = tmpdir("csv");
    let out = run_in(
        &dir,
        &[
            "mc",
            "multicyclic",
            "--n",
            "100",
            "--c",
            "0.5",
            "--trials",
            "100",
            "--seed",
            "4",
            "--out",
            "mc.csv",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let csv = std::fs::read_to_string(dir.join("mc.csv")).unwrap();
    assert!(csv.starts_with("n,c,trials,empirical,bound,sigma\n"));
    assert_eq!(csv.lines().count(), 2);

    let out = run_in(
        &dir,
        &[
            "bounds", "table", "--n", "64", "--d", "2", "--eps", "0.5", "--np", "10",
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("counting-upper-log2"));
    assert!(stdout.contains("sparse-random-graph"));
}

#[test]
fn steiner_affine_writes_valid_system() {
    let dir = tmpdir("steiner");
    let path = dir.join("ap5.txt");
    let out = run_in(
        &dir,
        &[
            "steiner",
            "affine",
            "--q",
            "5",
            "--out",
            path.to_str().unwrap(),
        ],
    );
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("25 2 5\n"));
    assert_eq!(text.lines().count(), 1 + 30);
    // Non-prime q is a runtime failure, not a usage error.
    let out = run_in(&dir, &["steiner", "affine", "--q", "4", "--out", "x.txt"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn color_commands_on_exact_certificates() {
    let dir = tmpdir("color");
    let c5 = write(&dir, "c5.el", "# n 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let out = run_in(&dir, &["exact", "lbox", &c5]);
    assert_eq!(out.status.code(), Some(0));
    let cert = format!("{c5}.lbox.json");
    for mode in ["tf", "lbox2"] {
        let out = run_in(&dir, &["color", mode, &c5, &cert, "--out", "colors.csv"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "mode {mode}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        let stdout = String::from_utf8_lossy(&out.stdout);
        assert!(stdout.contains("proper true"), "mode {mode}: {stdout}");
        let csv = std::fs::read_to_string(dir.join("colors.csv")).unwrap();
        assert!(csv.starts_with("vertex,color\n"));
        assert_eq!(csv.lines().count(), 6);
    }
    // K3 input for the triangle-free mode fails cleanly.
    let k3 = write(&dir, "k3.el", "0 1\n1 2\n0 2\n");
    let out = run_in(&dir, &["exact", "lbox", &k3]);
    assert_eq!(out.status.code(), Some(0));
    let k3cert = format!("{k3}.lbox.json");
    let out = run_in(&dir, &["color", "tf", &k3, &k3cert]);
    assert_eq!(out.status.code(), Some(1));
}

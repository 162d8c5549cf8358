//! End-to-end runs of the binary: outputs, exit statuses, determinism and
//! the golden JSON files under `tests/golden`.

use std::path::PathBuf;
use std::process::Command;

use galois_moebius::{FieldTower, PolyRing};

fn run(args: &[&str]) -> (i32, String, String) {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_galois-moebius"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

const F4: [&str; 6] = ["--p", "2", "--e", "1", "--n", "2"];

fn with_f4<'a>(cmd: &'a str, rest: &[&'a str]) -> Vec<&'a str> {
    let mut v = vec![cmd];
    v.extend_from_slice(&F4);
    v.extend_from_slice(rest);
    v
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn act_antidiagonal_is_conjugate_reciprocal() {
    let args = with_f4(
        "act",
        &["--matrix", "0;1;1;0", "--frob", "1", "--poly", "1,1,0,1"],
    );
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    let tower = FieldTower::new(2, 1, 2).unwrap();
    let ring = PolyRing::new(tower.top().clone());
    let f = ring.parse("1,1,0,1").unwrap();
    let expected = ring.sigma(&ring.reciprocal(&f).unwrap(), 1);
    assert_eq!(out.trim(), ring.format(&expected));
}

#[test]
fn act_identity_at_sigma_n_echoes_input() {
    let poly = "[0,1],1,[1,1],1";
    let args = with_f4(
        "act",
        &["--matrix", "1;0;0;1", "--frob", "2", "--poly", poly],
    );
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), poly);
}

#[test]
fn parse_errors_exit_2() {
    for (matrix, poly) in [
        ("0;1;1", "1,1,0,1"),
        ("0;1;1;[0,1,1]", "1,1,0,1"),
        ("0;1;x;0", "1,1,0,1"),
        ("0;1;1;0", "1,,1"),
    ] {
        let args = with_f4("act", &["--matrix", matrix, "--poly", poly]);
        let (code, _, err) = run(&args);
        assert_eq!(code, 2, "{matrix} {poly}: {err}");
    }
    assert_eq!(run(&["act", "--p", "2"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(
        run(&["act", "--p", "4", "--e", "1", "--n", "2", "--matrix", "1;0;0;1", "--poly", "1,0,1"])
            .0,
        2
    );
}

#[test]
fn domain_errors_exit_3() {
    let singular = with_f4("act", &["--matrix", "1;1;1;1", "--poly", "1,1,0,1"]);
    assert_eq!(run(&singular).0, 3);
    let linear = with_f4("act", &["--matrix", "0;1;1;0", "--poly", "1,1"]);
    assert_eq!(run(&linear).0, 3);
    let small = with_f4("invariants", &["--matrix", "0;1;1;0", "--degree", "2"]);
    assert_eq!(run(&small).0, 3);
}

#[test]
fn invariants_scrim_case_both_methods() {
    let args = with_f4(
        "invariants",
        &[
            "--matrix", "0;1;1;0", "--degree", "3", "--method", "both", "--output", "json",
        ],
    );
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["agree"], true);
    assert_eq!(v["fast"]["entries"][0]["count"], 2);
    assert_eq!(v["census"]["entries"][0]["count"], 2);
}

#[test]
fn invariants_inadmissible_degree_is_empty() {
    for method in ["fast", "census", "both"] {
        let args = with_f4(
            "invariants",
            &[
                "--matrix", "0;1;1;0", "--degree", "4", "--method", method, "--output", "json",
            ],
        );
        let (code, out, _) = run(&args);
        assert_eq!(code, 0, "{method}");
        assert!(out.contains("\"count\": 0"), "{method}: {out}");
    }
}

#[test]
fn invariants_over_cap_exit_4() {
    for method in ["fast", "census", "both"] {
        let args = with_f4(
            "invariants",
            &["--matrix", "0;1;1;0", "--degree", "15", "--method", method],
        );
        assert_eq!(run(&args).0, 4, "{method}");
    }
    let tight = with_f4(
        "invariants",
        &[
            "--matrix",
            "0;1;1;0",
            "--degree",
            "5",
            "--method",
            "census",
            "--cap-census",
            "100",
        ],
    );
    assert_eq!(run(&tight).0, 4);
}

#[test]
fn fast_method_needs_sigma_one() {
    let args = with_f4(
        "invariants",
        &[
            "--matrix", "0;1;1;0", "--frob", "2", "--degree", "3", "--method", "fast",
        ],
    );
    assert_eq!(run(&args).0, 2);
    let census = with_f4(
        "invariants",
        &[
            "--matrix", "0;1;1;0", "--frob", "2", "--degree", "3", "--method", "census",
        ],
    );
    assert_eq!(run(&census).0, 0);
}

#[test]
fn scrim_counts() {
    let (code, out, _) = run(&["scrim", "--q", "2", "--degree", "3", "--mode", "count"]);
    assert_eq!((code, out.trim()), (0, "2"));
    let (code, out, _) = run(&["scrim", "--q", "2", "--degree", "5"]);
    assert_eq!((code, out.trim()), (0, "6"));
    let (code, _, err) = run(&["scrim", "--q", "2", "--degree", "4", "--mode", "count"]);
    assert_eq!(code, 3);
    assert!(
        err.contains("The degree of any SCRIM is odd")
            || err.contains("degree of any SCRIM is odd"),
        "{err}"
    );
    assert_eq!(run(&["scrim", "--q", "6", "--degree", "3"]).0, 2);
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--suite", "axioms", "--seed", "7"];
    let (c1, o1, _) = run(&args);
    let (c2, o2, _) = run(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
    assert!(o1.lines().all(|l| l.starts_with("PASS")), "{o1}");
    assert!(o1.lines().count() >= 8);
    assert_eq!(run(&["verify", "--suite", "nonsense"]).0, 2);
}

#[test]
fn thread_count_does_not_change_output() {
    let args = with_f4(
        "invariants",
        &[
            "--matrix", "1;1;0;1", "--degree", "3,5", "--method", "census", "--output", "json",
        ],
    );
    let (c1, o1, _) = run_env(&args, &[("GALOIS_MOEBIUS_THREADS", "1")]);
    let (c2, o2, _) = run_env(&args, &[("GALOIS_MOEBIUS_THREADS", "4")]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(o1, o2);
    assert_eq!(run_env(&args, &[("GALOIS_MOEBIUS_THREADS", "many")]).0, 2);
}

#[test]
fn printed_polynomials_reparse() {
    let tower = FieldTower::new(3, 1, 2).unwrap();
    let ring = PolyRing::new(tower.top().clone());
    let args = [
        "invariants",
        "--p",
        "3",
        "--e",
        "1",
        "--n",
        "2",
        "--matrix",
        "[1,1];1;1;0",
        "--degree",
        "3,5",
        "--method",
        "census",
        "--output",
        "json",
    ];
    let (code, out, _) = run(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let mut seen = 0;
    for entry in v["entries"].as_array().unwrap() {
        for p in entry["polys"].as_array().unwrap() {
            let s = p.as_str().unwrap();
            assert_eq!(ring.format(&ring.parse(s).unwrap()), s);
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn timing_only_when_requested() {
    let base = with_f4(
        "invariants",
        &[
            "--matrix", "0;1;1;0", "--degree", "3", "--method", "census", "--output", "json",
        ],
    );
    let (_, out, _) = run(&base);
    assert!(out.contains("\"millis\": null"));
    let mut timed = base.clone();
    timed.push("--timing");
    let (_, out, _) = run(&timed);
    assert!(!out.contains("\"millis\": null"));
}

#[test]
fn golden_outputs() {
    let cases: [(&str, Vec<&str>); 6] = [
        (
            "act_antidiagonal.json",
            with_f4(
                "act",
                &[
                    "--matrix", "0;1;1;0", "--frob", "1", "--poly", "1,1,0,1", "--output", "json",
                ],
            ),
        ),
        (
            "invariants_f4_antidiagonal.json",
            with_f4(
                "invariants",
                &[
                    "--matrix", "0;1;1;0", "--degree", "3,4,5", "--method", "both", "--output",
                    "json",
                ],
            ),
        ),
        (
            "invariants_f9_antidiagonal.json",
            vec![
                "invariants",
                "--p",
                "3",
                "--e",
                "1",
                "--n",
                "2",
                "--matrix",
                "0;1;1;0",
                "--degree",
                "3",
                "--method",
                "census",
                "--output",
                "json",
            ],
        ),
        (
            "scrim_list_2_5.json",
            vec![
                "scrim", "--q", "2", "--degree", "5", "--mode", "list", "--output", "json",
            ],
        ),
        (
            "scrim_construct_4_3.json",
            vec![
                "scrim",
                "--q",
                "4",
                "--degree",
                "3",
                "--mode",
                "construct",
                "--output",
                "json",
            ],
        ),
        (
            "verify_formulas.json",
            vec!["verify", "--suite", "formulas", "--output", "json"],
        ),
    ];
    for (name, args) in cases {
        let (code, out, err) = run(&args);
        assert_eq!(code, 0, "{name}: {err}");
        assert_eq!(out, golden(name), "{name}");
    }
}

#[test]
fn golden_scrims_satisfy_the_definition() {
    // independent of the code that wrote the files: f(0) != 0 and the
    // reciprocal equals the conjugate
    for (file, p) in [
        ("scrim_list_2_5.json", 2),
        ("invariants_f9_antidiagonal.json", 3),
    ] {
        let tower = FieldTower::new(p, 1, 2).unwrap();
        let ring = PolyRing::new(tower.top().clone());
        let v: serde_json::Value = serde_json::from_str(&golden(file)).unwrap();
        let polys = if file.starts_with("scrim") {
            v["polys"].clone()
        } else {
            v["entries"][0]["polys"].clone()
        };
        let polys = polys.as_array().unwrap();
        // (1/n) Σ μ(d) p^{n/d}: 6 at (2, 5), 8 at (3, 3)
        assert_eq!(polys.len(), if p == 2 { 6 } else { 8 });
        for s in polys {
            let f = ring.parse(s.as_str().unwrap()).unwrap();
            assert!(ring.is_irreducible(&f));
            assert_eq!(ring.reciprocal(&f).unwrap(), ring.sigma(&f, 1));
        }
    }
}

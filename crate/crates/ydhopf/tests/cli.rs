//! End-to-end runs of the binary: exit-code contract (0 pass / 1 verified
//! false / 2 invalid input), file generation, the dual+pairing sidecar flow,
//! report determinism, and expression evaluation.

use std::path::Path;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ydhopf"))
}

fn run_in(dir: &Path, args: &[&str]) -> (i32, String, String) {
    let out = bin()
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
    )
}

#[test]
fn generate_check_dual_verify_pipeline() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();

    let (code, out, _) = run_in(
        dir,
        &["gen", "preset", "--name", "bline", "--out", "h.json"],
    );
    assert_eq!(code, 0, "{out}");

    let (code, out, _) = run_in(dir, &["check", "hopf", "h.json"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("verdict: pass"));

    let (code, _, _) = run_in(dir, &["check", "yd", "h.json"]);
    assert_eq!(code, 0);

    let (code, _, _) = run_in(dir, &["dual", "h.json", "--out", "hd.json"]);
    assert_eq!(code, 0);
    assert!(dir.join("hd.json.pairing.json").exists());

    let (code, _, _) = run_in(
        dir,
        &[
            "check",
            "pairing",
            "h.json",
            "hd.json",
            "hd.json.pairing.json",
        ],
    );
    assert_eq!(code, 0);

    let (code, out, _) = run_in(
        dir,
        &["verify", "duality", "--h", "h.json", "--report", "rep.json"],
    );
    assert_eq!(code, 0, "{out}");
    let report: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.join("rep.json")).unwrap()).unwrap();
    assert_eq!(report["verdict"], "pass");
    assert!(report["assertions"].as_array().unwrap().len() >= 10);

    // verify with explicit dual + pairing files, and with the comodule
    // algebra given explicitly (the dual file itself, coacting by its
    // comultiplication)
    let (code, _, _) = run_in(
        dir,
        &[
            "verify",
            "duality",
            "--h",
            "h.json",
            "--hd",
            "hd.json",
            "--pair",
            "hd.json.pairing.json",
        ],
    );
    assert_eq!(code, 0);
    let (code, _, err) = run_in(dir, &["verify", "duality", "--h", "h.json", "--r", "hd.json"]);
    assert_eq!(code, 0, "{err}");

    // reports are deterministic
    let (_, _, _) = run_in(
        dir,
        &[
            "verify",
            "duality",
            "--h",
            "h.json",
            "--report",
            "rep2.json",
        ],
    );
    assert_eq!(
        std::fs::read(dir.join("rep.json")).unwrap(),
        std::fs::read(dir.join("rep2.json")).unwrap()
    );
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();

    // missing required flag -> 2 (clap)
    let (code, _, _) = run_in(dir, &["gen", "qta", "--group", "4"]);
    assert_eq!(code, 2);

    // unknown preset -> 2
    let (code, _, _) = run_in(dir, &["gen", "preset", "--name", "nope", "--out", "x.json"]);
    assert_eq!(code, 2);

    // z4q2 has a non-symmetric braiding: dual refuses with a verified-false
    run_in(dir, &["gen", "preset", "--name", "z4q2", "--out", "z.json"]);
    let (code, _, err) = run_in(dir, &["dual", "z.json", "--out", "zd.json"]);
    assert_eq!(code, 1, "{err}");
    assert!(err.contains("symmetric"));

    // cocommutativity is false for z4q2 -> 1
    let (code, out, _) = run_in(dir, &["check", "cocomm", "z.json"]);
    assert_eq!(code, 1);
    assert!(out.contains("verdict: fail"));

    // and true for two-gen -> 0
    run_in(
        dir,
        &["gen", "preset", "--name", "two-gen", "--out", "t.json"],
    );
    let (code, _, _) = run_in(dir, &["check", "cocomm", "t.json"]);
    assert_eq!(code, 0);

    // corrupt one multiplication entry: parseable file, failed verification
    let text = std::fs::read_to_string(dir.join("t.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let entry = &mut v["structure"]["mult"][3][3];
    *entry = serde_json::json!((entry.as_u64().unwrap() + 1) % 5);
    std::fs::write(dir.join("bad.json"), serde_json::to_vec(&v).unwrap()).unwrap();
    let (code, out, _) = run_in(dir, &["check", "hopf", "bad.json"]);
    assert_eq!(code, 1);
    assert!(out.contains("witness"), "{out}");

    // malformed json -> 2
    std::fs::write(dir.join("junk.json"), b"{ not json").unwrap();
    let (code, _, _) = run_in(dir, &["check", "hopf", "junk.json"]);
    assert_eq!(code, 2);
}

#[test]
fn qta_generation_and_eval() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();

    let (code, out, _) = run_in(
        dir,
        &[
            "gen",
            "qta",
            "--prime",
            "5",
            "--group",
            "4",
            "--gen",
            "g=1;chi=2",
            "--trunc",
            "3",
            "--out",
            "q.json",
        ],
    );
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("dim 4"));

    std::fs::write(
        dir.join("env.json"),
        serde_json::to_vec(&serde_json::json!({
            "algebras": {"H": "q.json"},
            "generators": {"m": "H.mult", "comult": "H.comult", "eps": "H.counit"}
        }))
        .unwrap(),
    )
    .unwrap();

    // counit axiom evaluates to the identity
    let (code, out, _) = run_in(
        dir,
        &[
            "eval",
            "--env",
            "env.json",
            "--expr",
            "comult ; (id[H] * eps)",
        ],
    );
    assert_eq!(code, 0);
    assert!(out.contains("4 nonzero entries"), "{out}");

    // braid then inverse is the identity
    let (code, out, _) = run_in(
        dir,
        &["eval", "--env", "env.json", "--expr", "c[H,H] ; cinv[H,H]"],
    );
    assert_eq!(code, 0);
    assert!(out.contains("16 nonzero entries"));

    // ill-typed expression reports the sub-expression path at exit 2
    let (code, _, err) = run_in(dir, &["eval", "--env", "env.json", "--expr", "id[H] ; m"]);
    assert_eq!(code, 2);
    assert!(err.contains("compose"));

    // two generators, repeatable --gen flag
    let (code, out, _) = run_in(
        dir,
        &[
            "gen",
            "qta",
            "--prime",
            "5",
            "--group",
            "2,2",
            "--gen",
            "g=1,0;chi=4,1",
            "--gen",
            "g=0,1;chi=1,4",
            "--trunc",
            "2",
            "--out",
            "tg.json",
        ],
    );
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("dim 4"));
}

#[test]
fn exchange_and_hom_checks() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    run_in(dir, &["gen", "preset", "--name", "two-gen", "--out", "t.json"]);
    let (code, out, _) = run_in(dir, &["check", "exchange", "t.json"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("exchange.full-post-act"));

    run_in(dir, &["gen", "preset", "--name", "bline", "--out", "b.json"]);
    let (code, _, _) = run_in(dir, &["check", "hom", "b.json", "b.json"]);
    assert_eq!(code, 0);
    // mismatched group/field contexts are invalid input
    run_in(dir, &["gen", "preset", "--name", "z4q2", "--out", "z.json"]);
    let (code, _, err) = run_in(dir, &["check", "hom", "b.json", "z.json"]);
    assert_eq!(code, 2);
    assert!(err.contains("group/field"));
}

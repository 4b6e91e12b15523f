//! CLI contract acceptance: exit-code matrix over passing, failing, and
//! malformed runs, plus byte-identical report reproduction.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::Instant;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_hardylab")
}

fn write_config(dir: &Path, name: &str, body: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .env("HARDYLAB_SEED", "7")
        .output()
        .expect("binary runs")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn c11_cli_contract() {
    let started = Instant::now();
    let dir = tempfile::tempdir().unwrap();

    // --- exit 0: constant
    let ckn = write_config(
        dir.path(),
        "ckn.json",
        r#"{"command":"constant","theorem":"ckn","N":5,"p":2,"alpha":0}"#,
    );
    let out = run(&["constant", "--config", ckn.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "stderr: {}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "theorem,case,weight,N,p,alpha,s,q,value,bound,margin,holds,scheme,est_error"
    );
    assert!(lines.next().unwrap().contains("0.4444444444444444"));

    // --- exit 0: verify with catalog weights/tests, all holds
    let verify = write_config(
        dir.path(),
        "verify.json",
        r#"{"command":"verify","theorem":"thm13-case1","N":5,"alpha":0,"catalog":true}"#,
    );
    let out = run(&["verify", "--config", verify.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1 + 6 * 8, "one row per weight x test");
    assert!(text.lines().skip(1).all(|l| l.contains(",true,")));

    // --- exit 2: deliberately corrupted bound flips rows to violations
    let corrupted = write_config(
        dir.path(),
        "corrupted.json",
        r#"{"command":"verify","theorem":"thm13-case1","N":5,"alpha":0,
            "weight":{"kind":"named","name":"one"},
            "test":{"name":"tent1"},
            "bound_scale":0.25}"#,
    );
    let out = run(&["verify", "--config", corrupted.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    assert!(String::from_utf8(out.stdout).unwrap().contains(",false,"));

    // --- exit 1: malformed JSON
    let malformed = write_config(dir.path(), "broken.json", "{not json");
    let out = run(&["verify", "--config", malformed.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("config error"));

    // --- exit 1: regime violation named in the message
    let inadmissible = write_config(
        dir.path(),
        "inadmissible.json",
        r#"{"command":"constant","theorem":"ckn","N":3,"p":3,"alpha":1}"#,
    );
    let out = run(&["constant", "--config", inadmissible.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("N > p + alpha violated"));

    // --- exit 1: config/CLI command mismatch
    let out = run(&["sweep", "--config", ckn.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);

    // --- exit 1: missing file
    let out = run(&["constant", "--config", dir.path().join("nope.json").to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);

    // --- byte-identical reports across two runs (csv and json, with
    //     Monte-Carlo rows under a fixed seed)
    let rearrange = write_config(
        dir.path(),
        "rearrange.json",
        r#"{"command":"rearrange","N":3,"degree":2,
            "weight":{"kind":"cap","phi0":1.5707963267948966},
            "mc_check":true,"mc_samples":50000}"#,
    );
    for format in ["csv", "json"] {
        let out_a = dir.path().join(format!("a.{format}"));
        let out_b = dir.path().join(format!("b.{format}"));
        for out_path in [&out_a, &out_b] {
            let out = run(&[
                "rearrange",
                "--config",
                rearrange.to_str().unwrap(),
                "--out",
                out_path.to_str().unwrap(),
                "--format",
                format,
            ]);
            assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        }
        let a = std::fs::read(&out_a).unwrap();
        let b = std::fs::read(&out_b).unwrap();
        assert!(!a.is_empty());
        assert_eq!(a, b, "{format} reports differ between runs");
    }

    // --- sweep emits steps in order plus a summary row
    let sweep = write_config(
        dir.path(),
        "sweep.json",
        r#"{"command":"sweep","theorem":"ckn","N":5,"p":2,"alpha":0,"steps":3}"#,
    );
    let out = run(&["sweep", "--config", sweep.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let cases: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap())
        .collect();
    assert_eq!(cases, vec!["step1", "step2", "step3", "summary"]);

    let elapsed = started.elapsed().as_secs_f64();
    println!("ACCEPTANCE 11 cli-contract: PASS ({elapsed:.2} s, budget 10 s)");
    assert!(elapsed < 10.0, "criterion 11 exceeded its budget: {elapsed:.2} s");
}

#[test]
fn sampled_weight_loads_from_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("weight.csv");
    std::fs::write(
        &csv,
        "# angle,value\n0.0,2.0\n1.5707963267948966,1.0\n3.141592653589793,0.0\n",
    )
    .unwrap();
    let config = write_config(
        dir.path(),
        "w.json",
        &format!(
            r#"{{"command":"verify","theorem":"thm31","N":5,"p":2,"alpha":0,
                "weight":{{"kind":"sampled","path":"{}"}},
                "test":{{"name":"tent1"}}}}"#,
            csv.display()
        ),
    );
    let out = run(&["verify", "--config", config.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8(out.stdout).unwrap().contains(",true,"));
}

#[test]
fn config_round_trip_reproduces_equivalent_runs() {
    // parse(serialize(parse(text))) produces the same report as the
    // original for every catalog-style config
    let dir = tempfile::tempdir().unwrap();
    let configs = [
        r#"{"command":"constant","theorem":"thm31","N":5,"p":2,"alpha":0,"weight":{"kind":"named","name":"hemisphere"}}"#,
        r#"{"command":"verify","theorem":"thm31","N":4,"p":2,"alpha":0.5,"test":{"name":"tent1"},"weight":{"kind":"zonal-power","power":2}}"#,
        r#"{"command":"lambda","N":2,"s":0.25,"p":1.5}"#,
    ];
    for (i, text) in configs.iter().enumerate() {
        let doc: serde_json::Value = serde_json::from_str(text).unwrap();
        let round = serde_json::to_string(&doc).unwrap();
        let cmd = doc["command"].as_str().unwrap().to_string();
        let p1 = write_config(dir.path(), &format!("orig{i}.json"), text);
        let p2 = write_config(dir.path(), &format!("round{i}.json"), &round);
        let o1 = run(&[&cmd, "--config", p1.to_str().unwrap()]);
        let o2 = run(&[&cmd, "--config", p2.to_str().unwrap()]);
        assert_eq!(exit_code(&o1), 0, "{}", String::from_utf8_lossy(&o1.stderr));
        assert_eq!(o1.stdout, o2.stdout);
    }
}

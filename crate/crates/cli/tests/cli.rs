use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name)
}

fn read_golden(name: &str) -> String {
    std::fs::read_to_string(golden(name)).unwrap()
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_kncross"))
        .args(args)
        .env_remove("KNCROSS_JOBS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout_of(args: &[&str], stdin: Option<&str>) -> String {
    let out = run(args, stdin);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn with_file(args: &[&str], input: &str) -> String {
    let path = golden(input);
    let mut all = args.to_vec();
    all.extend(["--input", path.to_str().unwrap()]);
    stdout_of(&all, None)
}

#[test]
fn phi_trace_from_stdin() {
    let out = stdout_of(
        &["phi", "--k", "3", "--trace"],
        Some(&read_golden("phi_k3_input.json")),
    );
    assert_eq!(out, read_golden("phi_k3_trace.jsonl"));
    let kinds: Vec<String> = out
        .lines()
        .take(3)
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["kind"].to_string())
        .collect();
    assert_eq!(
        kinds,
        [
            "\"ENHANCED_LEFT_SHIFT\"",
            "\"CYCLIC_ROTATION\"",
            "\"CYCLIC_ROTATION\""
        ]
    );
}

#[test]
fn phi_inv_trace() {
    let out = with_file(&["phi-inv", "--k", "4", "--trace"], "phi_inv_k4_input.json");
    assert_eq!(out, read_golden("phi_inv_k4_trace.jsonl"));
}

#[test]
fn phi_without_trace_is_one_line() {
    let out = with_file(&["phi", "--k", "3"], "phi_k3_input.json");
    assert_eq!(
        out,
        read_golden("phi_k3_trace.jsonl")
            .lines()
            .last()
            .unwrap()
            .to_string()
            + "\n"
    );
}

#[test]
fn psi_both_ways() {
    assert_eq!(
        with_file(&["psi"], "psi_input.json"),
        read_golden("psi_output.json")
    );
    assert_eq!(
        with_file(&["psi-inv"], "psi_output.json"),
        read_golden("psi_inv_output.json")
    );
}

#[test]
fn map_f_and_back() {
    let out = with_file(&["fill", "map-f"], "compress_input.json");
    assert_eq!(out, read_golden("compress_output.json"));
    let back = stdout_of(&["fill", "inv-f", "--input", out.trim()], None);
    let expected: serde_json::Value =
        serde_json::from_str(&read_golden("compress_input.json")).unwrap();
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&back).unwrap(),
        expected
    );
}

#[test]
fn motzkin_path_round_trip() {
    let path = with_file(&["motzkin", "to-path"], "motzkin_input.json");
    assert_eq!(path, read_golden("motzkin_path.json"));
    let raw = stdout_of(&["motzkin", "to-matching"], Some("UUDUUDHDDUHD\n"));
    let expected: serde_json::Value =
        serde_json::from_str(&read_golden("motzkin_input.json")).unwrap();
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&raw).unwrap(),
        expected
    );
}

#[test]
fn renders() {
    assert_eq!(
        with_file(&["render", "--what", "arcs"], "phi_k3_input.json"),
        read_golden("phi_k3_input.txt")
    );
    assert_eq!(
        with_file(&["render", "--what", "filling"], "compress_input.json"),
        read_golden("compress_input.txt")
    );
}

#[test]
fn euler_report() {
    let out = stdout_of(
        &[
            "verify", "euler", "--n", "3", "--k", "2", "--format", "json",
        ],
        None,
    );
    assert_eq!(out, read_golden("euler_n3_k2.json"));
}

#[test]
fn euler_grid_formats_and_jobs_agree() {
    let one = stdout_of(
        &[
            "verify", "euler", "--n", "1..6", "--k", "2..4", "--format", "csv",
        ],
        None,
    );
    let four = stdout_of(
        &[
            "verify", "euler", "--n", "1..6", "--k", "2..4", "--format", "csv", "--jobs", "4",
        ],
        None,
    );
    assert_eq!(one, four);
    assert_eq!(one.lines().count(), 1 + 6 * 3);
    assert!(one
        .lines()
        .skip(1)
        .all(|l| l.split(',').nth(3) == Some("true")));
}

#[test]
fn other_identities_hold() {
    for args in [
        &["verify", "gamma", "--n", "0..8"][..],
        &["verify", "stirling", "--n", "1..8"],
        &["verify", "donaghey", "--n", "0..14"],
    ] {
        let out = stdout_of(args, None);
        for line in out.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert_eq!(v["equal"], true, "{line}");
        }
    }
}

#[test]
fn nesting_gap_finds_witness() {
    let out = stdout_of(&["verify", "nesting-gap", "--n-max", "4"], None);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["witness"]["n"], 3);
    assert_eq!(v["witness"]["k"], 2);
    assert_eq!(
        v["witness"]["rhs"]["coeffs"],
        serde_json::json!(["0", "1", "7", "5", "1"])
    );
}

#[test]
fn enumerate_counts() {
    let out = stdout_of(
        &[
            "enumerate",
            "--n",
            "5",
            "--k",
            "2",
            "--class",
            "nc",
            "--format",
            "ascii",
        ],
        None,
    );
    assert_eq!(out, "NC_5^(2)(t) = t+10t^2+20t^3+10t^4+t^5  [42]\n");
    let listed = stdout_of(
        &[
            "enumerate",
            "--n",
            "3",
            "--k",
            "2",
            "--class",
            "nw",
            "--list",
        ],
        None,
    );
    assert_eq!(listed.lines().count(), 4);
}

#[test]
fn selftest_passes() {
    let out = stdout_of(
        &[
            "selftest", "--nmax", "8", "--kmax", "4", "--format", "ascii",
        ],
        None,
    );
    assert!(out.ends_with("selftest nmax=8 kmax=4: PASS\n"), "{out}");
    let a = stdout_of(&["selftest", "--nmax", "5", "--kmax", "3"], None);
    let b = stdout_of(
        &["selftest", "--nmax", "5", "--kmax", "3", "--jobs", "4"],
        None,
    );
    assert_eq!(a, b);
}

#[test]
fn jobs_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_kncross"))
        .args(["enumerate", "--n", "6", "--k", "3"])
        .env("KNCROSS_JOBS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    let bad = Command::new(env!("CARGO_BIN_EXE_kncross"))
        .args(["enumerate", "--n", "6"])
        .env("KNCROSS_JOBS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let black_weak = r#"{"convention":"zero","n":6,"blocks":[[0],[1,3,5],[2,4]]}"#;
    assert_eq!(
        run(&["phi", "--k", "3"], Some(black_weak)).status.code(),
        Some(1)
    );
    assert_eq!(run(&["phi", "--k", "3"], Some("{")).status.code(), Some(2));
    assert_eq!(
        run(&["phi", "--k", "1"], Some(black_weak)).status.code(),
        Some(2)
    );
    assert_eq!(run(&["nope"], None).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "euler", "--n", "11"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "euler", "--n", "x"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["phi", "--k", "3", "--format", "csv"], Some(black_weak))
            .status
            .code(),
        Some(2)
    );
    let crossing = r#"{"convention":"zero","n":4,"blocks":[[0,2],[1,3]]}"#;
    let out = run(&["psi"], Some(crossing));
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error: "));
}

#[test]
fn inline_and_file_inputs_agree() {
    let inline = stdout_of(
        &["psi", "--input", read_golden("psi_input.json").trim()],
        None,
    );
    let file = with_file(&["psi"], "psi_input.json");
    let dir = tempfile::tempdir().unwrap();
    let copy = dir.path().join("p.json");
    std::fs::copy(golden("psi_input.json"), &copy).unwrap();
    let copied = stdout_of(&["psi", "--input", copy.to_str().unwrap()], None);
    assert_eq!(inline, file);
    assert_eq!(file, copied);
}

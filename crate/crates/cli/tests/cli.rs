use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shuffle-lr")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const FIGURE_ROWS: &str = "1,3;2,2,2,4,4;1,1,1,2,3;1,2,4,4,4;1,2,2,3;3,4";

#[test]
fn lr_every_method() {
    for m in ["peelable", "yamanouchi", "classical"] {
        let o = run(&["lr", "--red", "3,2/1", "--blue", "3,3/1", "--kappa", "4,3,2", "--method", m]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), "3\n");
    }
}

#[test]
fn lr_json() {
    let o = run(&["--format", "json", "lr", "--red", "3,2/1", "--blue", "3,3/1", "--kappa", "4,3,2"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"blue":"(3,3)/(1)","coeff":3,"kappa":[4,3,2],"method":"peelable","red":"(3,2)/(1)"}"#
    );
}

#[test]
fn expand_two_cells() {
    let o = run(&["expand", "--red", "1", "--blue", "1"]);
    assert_eq!(stdout(&o), "(1,1)\t1\n(2)\t1\n");
    let o = run(&["expand", "--red", "1", "--blue", "1", "--format", "json"]);
    assert_eq!(stdout(&o).trim(), r#"[{"kappa":[1,1],"coeff":1},{"kappa":[2],"coeff":1}]"#);
}

#[test]
fn expand_json_is_stable() {
    let args = ["--format", "json", "expand", "--red", "3,2/1", "--blue", "2,2/1"];
    let a = stdout(&run(&args));
    let b = stdout(&run(&args));
    assert_eq!(a, b);
    let methods: Vec<String> = ["peelable", "yamanouchi", "classical"]
        .iter()
        .map(|m| {
            let mut v = args.to_vec();
            v.extend(["--method", m]);
            stdout(&run(&v))
        })
        .collect();
    assert!(methods.iter().all(|m| *m == a));
}

#[test]
fn usage_errors_exit_one() {
    let o = run(&["lr", "--red", "x", "--blue", "1", "--kappa", "1"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!o.stderr.is_empty());
    let o = run(&["--format", "dot", "lr", "--red", "1", "--blue", "1", "--kappa", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["lr", "--red", "1,2", "--blue", "1", "--kappa", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("crystal-dump"));
}

#[test]
fn verify_small_sweeps() {
    for suite in [
        vec!["verify", "equivalence", "--max-cells", "5"],
        vec!["verify", "bijections", "--max-cells", "4"],
        vec!["verify", "crystal", "--max-cells", "3", "--max-entry", "3"],
        vec!["verify", "bk", "--max-cells", "4", "--max-entry", "3"],
        vec!["verify", "tl", "--max-n", "2", "--max-part", "2"],
        vec!["verify", "theta", "--n", "3", "--max-a", "2", "--extra", "1"],
    ] {
        let o = run(&suite);
        assert_eq!(o.status.code(), Some(0), "{suite:?}");
        assert!(stdout(&o).starts_with("PASS "), "{suite:?}: {}", stdout(&o));
    }
}

#[test]
fn verify_json() {
    let o = run(&["--format", "json", "--jobs", "1", "verify", "equivalence", "--max-cells", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "equivalence");
    assert!(v["instances"].as_u64().unwrap() > 0);
}

#[test]
fn tl_type_of_figure() {
    let base = ["tl-type", "--mu", "9,9,7,6,4,2", "--nu", "7,4,2,1", "--n", "6", "--tableau", FIGURE_ROWS];
    let o = run(&base);
    assert_eq!(stdout(&o).trim(), "{(L1,L2),(L3,R1),(L4,L5),(L6,R4),(R2,R3),(R5,R6)}");
    let mut json = vec!["--format", "json"];
    json.extend(base);
    assert_eq!(
        stdout(&run(&json)).trim(),
        r#"[["L1","L2"],["L3","R1"],["L4","L5"],["L6","R4"],["R2","R3"],["R5","R6"]]"#
    );
}

#[test]
fn tl_expand_marginal_matches_expand() {
    let o = run(&["tl-expand", "--mu", "2,1", "--nu", "1", "--n", "2"]);
    assert_eq!(stdout(&o), "{(L1,L2),(R1,R2)}\t(2)\t1\n{(L1,R1),(L2,R2)}\t(1,1)\t1\n");
}

#[test]
fn bk_map() {
    let o = run(&["bk", "--red", "1", "--blue", "1", "--tableau", "1;2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n2\n");
    let o = run(&["bk", "--red", "1", "--blue", "1", "--tableau", "1,1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn theta_certificate_and_hypotheses() {
    let o = run(&["theta", "--lambda", "2,2,1", "--mu", "2,1,1", "--m", "2", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "PASS"));
    let o = run(&["theta", "--lambda", "2,1,1", "--mu", "2,1,1", "--m", "1", "--k", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn crystal_dump_formats() {
    let o = run(&["crystal-dump", "--red", "1", "--blue", "1", "--max-entry", "2"]);
    let dot = stdout(&o);
    assert!(dot.starts_with("digraph crystal {"));
    assert_eq!(dot.matches("->").count(), 2);
    let o = run(&["--format", "json", "crystal-dump", "--red", "1", "--blue", "1", "--max-entry", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn bench_csv() {
    let o = run(&["bench", "--max-cells", "2"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("red,blue,cells,peelable_ns,yamanouchi_ns,speedup"));
    assert!(lines.count() > 0);
}

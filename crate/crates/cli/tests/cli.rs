use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn iris() -> PathBuf {
    root().join("data/iris.csv")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_voteselect"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn field(line: &str, key: &str) -> f64 {
    line.split_whitespace()
        .find_map(|kv| kv.strip_prefix(&format!("{key}=")))
        .unwrap_or_else(|| panic!("no {key} in {line:?}"))
        .parse()
        .unwrap()
}

#[test]
fn reduce_writes_indices_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("kept.txt");
    let o = run(&[
        "reduce",
        "--rule",
        "sejr",
        "--q",
        "2",
        "--variant",
        "included",
        iris().to_str().unwrap(),
        "-o",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let summary = stdout(&o);
    let kept = field(&summary, "kept") as usize;
    assert!((0.09 - field(&summary, "reduction")).abs() <= 0.05, "{summary}");
    let lines: Vec<usize> = fs::read_to_string(&out)
        .unwrap()
        .lines()
        .map(|l| l.parse().unwrap())
        .collect();
    assert_eq!(lines.len(), kept);
    assert!(lines.windows(2).all(|w| w[0] < w[1]));
    assert!(lines.iter().all(|&i| i < 150));
}

#[test]
fn random_baseline_with_full_fraction_keeps_everything() {
    let o = run(&["reduce", "--baseline", "random", "--fraction", "1.0", iris().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 151);
    assert_eq!(lines[0], "0");
    assert_eq!(lines[149], "149");
    assert_eq!(lines[150], "kept=150 reduction=0.0000");
}

#[test]
fn single_class_file_is_a_domain_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flat.csv");
    fs::write(&path, "x,y,class\n0,0,a\n1,0,a\n0,1,a\n").unwrap();
    let o = run(&["reduce", "--rule", "sejr", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("no enemy instances"), "{}", stderr(&o));
}

#[test]
fn bad_flags_are_usage_errors() {
    for args in [
        vec!["reduce", "data/iris.csv"],
        vec!["reduce", "--rule", "sejr", "--q", "abc", "data/iris.csv"],
        vec!["reduce", "--rule", "sejr", "--q", "0", "data/iris.csv"],
        vec!["reduce", "--rule", "sejr", "--baseline", "cnn", "data/iris.csv"],
        vec!["verify", "--rule", "sejr", "--check", "safe-trace", "--random", "3"],
        vec!["verify", "--rule", "sejr", "--check", "theorem-knn", "--random", "3"],
        vec!["experiment", "iris"],
        vec!["experiment", "iris", "--rules", "sejr", "--k", "2"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn safe_trace_on_random_corpus() {
    let o = run(&["verify", "--rule", "es", "--check", "safe-trace", "--random", "200", "--seed", "7"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("checks=200 passed=200 failed=0"), "{}", stdout(&o));
}

#[test]
fn s2ejr_fails_ejr_on_lone_voter() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lone.election");
    fs::write(&path, "n_voters=1\nn_candidates=3\nq=3\n0: 0 1 2\n").unwrap();
    let o = run(&["verify", "--rule", "s2ejr", "--check", "ejr", "--election", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("ejr: FAIL"), "{text}");
    assert!(text.contains("3-EJR violated"), "{text}");

    let o = run(&["verify", "--rule", "s2ejr", "--check", "2ejr", "--election", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn knn_guarantee_on_iris() {
    let o = run(&["verify", "--rule", "sejr", "--check", "theorem-knn", "--k", "3", iris().to_str().unwrap()]);
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("failures=0"), "{}", stdout(&o));
}

#[test]
fn enumeration_guard_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_voteselect"))
        .args(["verify", "--rule", "sejr", "--check", "ejr", iris().to_str().unwrap()])
        .env("VOTESELECT_MAX_ENUM", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3), "{}", stderr(&o));
    assert!(stderr(&o).contains("bound"), "{}", stderr(&o));
}

fn data_rows(csv: &str) -> (Vec<&str>, Vec<&str>) {
    csv.lines().skip(1).partition(|l| !l.starts_with("average,"))
}

#[test]
fn experiment_table_shape() {
    let o = run(&["experiment", "--datasets", "iris,wine", "--rules", "sejr,s2ejr,es", "--q", "2"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.starts_with("dataset,selector,q,variant,K,accuracy,reduction,committee_mode_flags,seconds\n"));
    let (rows, averages) = data_rows(&text);
    assert_eq!(rows.len(), 6);
    assert_eq!(averages.len(), 3);
    assert!(averages.iter().all(|l| l.contains("datasets:2")));
}

#[test]
fn full_grid_covers_declared_values() {
    let o = run(&["experiment", "iris", "--full-grid", "--variant", "included,excluded"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let (rows, _) = data_rows(&text);
    assert_eq!(rows.len(), 2 * (3 * 6 + 9));
    let qs: Vec<&str> = rows
        .iter()
        .filter(|l| l.starts_with("iris,seqp,") && l.contains(",included,"))
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(qs, ["0.9", "0.8", "0.7", "0.6", "0.5", "0.4", "0.3", "0.2", "0.1"]);
    let utcs: Vec<&str> = rows
        .iter()
        .filter(|l| l.starts_with("iris,es,") && l.contains(",included,"))
        .map(|l| l.split(',').nth(2).unwrap())
        .collect();
    assert_eq!(utcs, ["2", "1.5", "1", "0.75", "0.5", "0.25"]);
}

#[test]
fn noapproved_baseline_on_iris() {
    let o = run(&["experiment", "--baseline", "noapproved", "iris"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let row: Vec<&str> = text.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[1], "noapproved");
    let (acc, red): (f64, f64) = (row[5].parse().unwrap(), row[6].parse().unwrap());
    assert!((acc - 0.97).abs() <= 0.03, "{acc}");
    assert!((red - 0.02).abs() <= 0.02, "{red}");
}

#[test]
fn experiment_outputs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for run_id in 0..2 {
        let results = dir.path().join(format!("results{run_id}.csv"));
        let scatter = dir.path().join(format!("scatter{run_id}.csv"));
        let o = run(&[
            "experiment",
            "wine",
            "--rules",
            "es,seqp",
            "--q",
            "1/2",
            "--baseline",
            "random,icf",
            "--seed",
            "3",
            "-o",
            results.to_str().unwrap(),
            "--scatter",
            scatter.to_str().unwrap(),
        ]);
        assert!(o.status.success(), "{}", stderr(&o));
        assert!(stdout(&o).contains("average es-0.5-included"), "{}", stdout(&o));
        outputs.push((fs::read(results).unwrap(), fs::read(scatter).unwrap(), o.stdout));
    }
    assert_eq!(outputs[0], outputs[1]);
}

#[test]
fn published_figures_are_tagged() {
    let dir = tempfile::tempdir().unwrap();
    let published = dir.path().join("published.csv");
    let o = run(&["experiment", "iris", "--rules", "sejr", "-o", "/dev/null", "--published", published.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(published).unwrap();
    assert!(text.starts_with("table,dataset,column,value,source\n"));
    assert!(text.contains("knn-accuracy-large-q-included,iris,SEJR-2,0.96,published"));
}

#[test]
fn pca_projection_file() {
    let o = run(&["pca", iris().to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,pc1,pc2,label");
    assert_eq!(lines.len(), 151);
    assert!(lines[1].starts_with("0,"));
}

#[test]
fn rules_demo_prints_every_rule() {
    let o = run(&["rules-demo"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for rule in ["sejr", "s2ejr", "es", "seqp"] {
        assert!(text.contains(&format!("rule={rule}\n")), "{text}");
    }
    assert!(text.contains("1 c=0 gamma=1/2 rho=1/2 1/2 1 1"), "{text}");
}

#[test]
fn help_lists_defaults() {
    for (sub, default) in [
        ("reduce", "[default: 2]"),
        ("verify", "[default: 42]"),
        ("experiment", "[default: 10]"),
        ("pca", "[default: 2]"),
        ("rules-demo", "--election"),
    ] {
        let o = run(&[sub, "--help"]);
        assert!(o.status.success());
        let text = stdout(&o);
        assert!(text.contains(default), "{sub}: {text}");
        assert!(text.contains("--"), "{sub}");
    }
}

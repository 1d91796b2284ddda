//! End-to-end tests driving the compiled `miht` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn miht() -> Command {
    Command::new(env!("CARGO_BIN_EXE_miht"))
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

/// Two well-separated classes, 8 series per class, 20 steps, 2 dimensions.
fn write_fixture(path: &Path, offset: f64) {
    let mut text = String::from(
        "@problemName fixture\n@dimensions 2\n@equalLength true\n@seriesLength 20\n@classLabel true A B\n@data\n",
    );
    for class in 0..2 {
        for i in 0..8 {
            let base = if class == 0 { 0.0 } else { 10.0 };
            let mut dims = [String::new(), String::new()];
            for (d, dim) in dims.iter_mut().enumerate() {
                let values: Vec<String> = (0..20)
                    .map(|t| {
                        let jitter = ((i * 20 + t + d) as f64 * 0.37).sin() * 0.5;
                        format!("{}", base + jitter + offset)
                    })
                    .collect();
                *dim = values.join(",");
            }
            let label = if class == 0 { "A" } else { "B" };
            text.push_str(&format!("{}:{}:{}\n", dims[0], dims[1], label));
        }
    }
    std::fs::write(path, text).unwrap();
}

struct Fixture {
    _dir: tempfile::TempDir,
    train: PathBuf,
    test: PathBuf,
    model: PathBuf,
}

fn fixture() -> Fixture {
    let dir = tempfile::tempdir().unwrap();
    let train = dir.path().join("fixture_TRAIN.ts");
    let test = dir.path().join("fixture_TEST.ts");
    write_fixture(&train, 0.0);
    write_fixture(&test, 0.05);
    let model = dir.path().join("model.miht");
    Fixture {
        _dir: dir,
        train,
        test,
        model,
    }
}

fn train(fx: &Fixture, extra: &[&str]) -> Output {
    miht()
        .args(["train", "--train"])
        .arg(&fx.train)
        .arg("--out")
        .arg(&fx.model)
        .args(extra)
        .output()
        .unwrap()
}

#[test]
fn train_writes_model_and_json_report() {
    let fx = fixture();
    let out = train(&fx, &[]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(fx.model.exists());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report["iterations"].as_u64().unwrap() <= 100);
    assert!(stderr(&out).contains("resolved window_steps="));
}

#[test]
fn train_with_zero_iterations_reports_zero() {
    let fx = fixture();
    let out = train(&fx, &["--max-iters", "0"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(report["iterations"], 0);
    assert_eq!(report["converged"], false);
}

#[test]
fn missing_required_flag_is_a_usage_error() {
    let out = miht().arg("train").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn evaluate_emits_csv_row() {
    let fx = fixture();
    assert!(train(&fx, &[]).status.success());
    let out = miht()
        .args(["evaluate", "--model"])
        .arg(&fx.model)
        .arg("--test")
        .arg(&fx.test)
        .args(["--no-timings"])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "dataset,model,accuracy,balanced_accuracy,hamming_loss,macro_f1,micro_f1,train_seconds,test_seconds"
    );
    let row = lines.next().unwrap();
    // perfect memorization of a separable fixture
    assert!(row.starts_with("fixture,miht,1.0000,"), "row: {row}");
    assert!(row.ends_with(",-,-"), "timings disabled: {row}");
}

#[test]
fn evaluate_emits_json_when_asked() {
    let fx = fixture();
    assert!(train(&fx, &[]).status.success());
    let out = miht()
        .args(["evaluate", "--model"])
        .arg(&fx.model)
        .arg("--test")
        .arg(&fx.test)
        .args(["--format", "json"])
        .output()
        .unwrap();
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["accuracy"], 1.0);
    assert_eq!(value["model"], "miht");
}

#[test]
fn evaluate_rejects_corrupt_model() {
    let fx = fixture();
    std::fs::write(&fx.model, "#miht-model v999\n").unwrap();
    let out = miht()
        .args(["evaluate", "--model"])
        .arg(&fx.model)
        .arg("--test")
        .arg(&fx.test)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("version mismatch"), "{}", stderr(&out));
}

#[test]
fn predict_reports_labels_per_series() {
    let fx = fixture();
    assert!(train(&fx, &[]).status.success());
    let out = miht()
        .args(["predict", "--model"])
        .arg(&fx.model)
        .arg("--series")
        .arg(&fx.test)
        .args(["--index", "0"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["predicted_label"], "A");

    let out = miht()
        .args(["predict", "--model"])
        .arg(&fx.model)
        .arg("--series")
        .arg(&fx.test)
        .args(["--index", "99"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn explain_without_series_prints_dot() {
    let fx = fixture();
    assert!(train(&fx, &[]).status.success());
    let out = miht()
        .args(["explain", "--model"])
        .arg(&fx.model)
        .output()
        .unwrap();
    assert!(out.status.success());
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph miht {"), "{dot}");
    assert!(dot.contains("label="));
}

#[test]
fn explain_with_series_writes_all_artifacts() {
    let fx = fixture();
    assert!(train(&fx, &[]).status.success());
    let dot_path = fx.model.with_extension("dot");
    let csv_path = fx.model.with_extension("csv");
    let out = miht()
        .args(["explain", "--model"])
        .arg(&fx.model)
        .arg("--series")
        .arg(&fx.test)
        .args(["--index", "8"])
        .arg("--dot")
        .arg(&dot_path)
        .arg("--csv")
        .arg(&csv_path)
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));

    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["predicted_label"], "B");
    assert!(value["end_step"].as_u64().unwrap() <= 20);

    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.contains("digraph miht"));
    // split labels decode window attributes back to dimension and step
    if dot.contains("dim ") {
        assert!(dot.contains("@ step "), "{dot}");
    }

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "step,dim0,dim1,relevant_flag");
    assert_eq!(lines.count(), 20);
}

#[test]
fn bench_runs_all_dataset_model_pairs() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["alpha", "beta"] {
        write_fixture(&dir.path().join(format!("{name}_TRAIN.ts")), 0.0);
        write_fixture(&dir.path().join(format!("{name}_TEST.ts")), 0.05);
    }
    let out = miht()
        .args(["bench", "--data-dir"])
        .arg(dir.path())
        .args(["--models", "miht,1nn-ed,1nn-dtw", "--no-timings"])
        .output()
        .unwrap();
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 7, "header + 6 rows: {text}");
    assert!(lines[1].starts_with("alpha,miht,"));
    assert!(lines[6].starts_with("beta,1nn-dtw,"));
}

#[test]
fn bench_timeout_records_dash_rows() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(&dir.path().join("slow_TRAIN.ts"), 0.0);
    write_fixture(&dir.path().join("slow_TEST.ts"), 0.05);
    let out = miht()
        .args(["bench", "--data-dir"])
        .arg(dir.path())
        .args(["--models", "miht", "--timeout-secs", "0.000001"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().nth(1).unwrap().ends_with("miht,-,-,-,-,-,-,-"), "{text}");
}

#[test]
fn bench_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(&dir.path().join("alpha_TRAIN.ts"), 0.0);
    write_fixture(&dir.path().join("alpha_TEST.ts"), 0.05);
    let run = || {
        let out = miht()
            .args(["bench", "--data-dir"])
            .arg(dir.path())
            .args(["--no-timings", "--seed", "7", "--jobs", "2"])
            .output()
            .unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run(), run(), "same seed and inputs must be byte-identical");
}

#[test]
fn bench_rejects_unknown_model() {
    let dir = tempfile::tempdir().unwrap();
    write_fixture(&dir.path().join("a_TRAIN.ts"), 0.0);
    write_fixture(&dir.path().join("a_TEST.ts"), 0.0);
    let out = miht()
        .args(["bench", "--data-dir"])
        .arg(dir.path())
        .args(["--models", "rocket"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

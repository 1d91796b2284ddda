//! Command-line interface: train, evaluate, predict, explain, and bench.
//!
//! Structured results go to stdout; logs and progress go to stderr, so
//! output can be piped. Set `MIHT_LOG=1` for verbose progress.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use miht::{
    baselines, evaluate, explain, fit, load_model_file, load_ts_file, predict, save_model_file,
    Dataset, EvalResult, MissingPolicy, NbMode, ResultRow, TrainConfig, TrainedModel,
};

#[derive(Parser)]
#[command(name = "miht", version, about = "Multi-instance Hoeffding tree for time series classification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Train a model on a `.ts` file and write it to disk.
    Train(TrainArgs),
    /// Evaluate a trained model on a labeled `.ts` test file.
    Evaluate(EvaluateArgs),
    /// Classify series from a `.ts` file with a trained model.
    Predict(PredictArgs),
    /// Export the decision tree as DOT and optionally explain one series.
    Explain(ExplainArgs),
    /// Run classifiers over a directory of `<name>_TRAIN.ts`/`<name>_TEST.ts` pairs.
    Bench(BenchArgs),
}

#[derive(Args, Clone)]
struct HyperArgs {
    /// Window width as a fraction of the mean training length.
    #[arg(long, default_value_t = 0.21)]
    omega: f64,
    /// Window stride as a fraction of the mean training length.
    #[arg(long, default_value_t = 0.02)]
    lambda: f64,
    /// Consecutive windows reinforced per bag.
    #[arg(short, default_value_t = 4)]
    k: usize,
    /// Grace period as a fraction of the mean bag size.
    #[arg(long, default_value_t = 3.665)]
    kappa: f64,
    /// Hoeffding bound significance level.
    #[arg(long, default_value_t = 0.005615)]
    delta: f64,
    /// Cap on reinforcement iterations.
    #[arg(long, default_value_t = 100)]
    max_iters: usize,
    /// Recorded in the fit report; training is deterministic.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Naive Bayes combination: product or sum.
    #[arg(long, default_value = "product")]
    nb: String,
    /// Split on ties once the Hoeffding bound falls below this value during
    /// the initialization pass; pass `none` to disable.
    #[arg(long, default_value = "0.2")]
    tie_threshold: String,
    /// Interpolate missing values instead of rejecting them.
    #[arg(long)]
    impute: bool,
}

impl HyperArgs {
    fn config(&self) -> anyhow::Result<TrainConfig> {
        let nb_mode: NbMode = self.nb.parse()?;
        let tie_threshold = match self.tie_threshold.as_str() {
            "none" | "off" => None,
            raw => Some(raw.parse::<f64>().map_err(|_| {
                anyhow::anyhow!("invalid tie threshold {raw:?} (expected a number or `none`)")
            })?),
        };
        Ok(TrainConfig {
            window_frac: self.omega,
            stride_frac: self.lambda,
            k: self.k,
            grace_frac: self.kappa,
            delta: self.delta,
            max_iterations: self.max_iters,
            seed: self.seed,
            nb_mode,
            tie_threshold,
        })
    }

    fn missing(&self) -> MissingPolicy {
        if self.impute {
            MissingPolicy::Interpolate
        } else {
            MissingPolicy::Reject
        }
    }
}

#[derive(Args)]
struct TrainArgs {
    /// Training `.ts` file.
    #[arg(long)]
    train: PathBuf,
    /// Output model file.
    #[arg(long)]
    out: PathBuf,
    #[command(flatten)]
    hyper: HyperArgs,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Trained model file.
    #[arg(long)]
    model: PathBuf,
    /// Labeled test `.ts` file.
    #[arg(long)]
    test: PathBuf,
    /// Output format for the metrics row.
    #[arg(long, default_value = "csv")]
    format: Format,
    /// Interpolate missing values instead of rejecting them.
    #[arg(long)]
    impute: bool,
    /// Omit wall-clock timings so output is byte-reproducible.
    #[arg(long)]
    no_timings: bool,
}

#[derive(Args)]
struct PredictArgs {
    /// Trained model file.
    #[arg(long)]
    model: PathBuf,
    /// `.ts` file with series to classify.
    #[arg(long)]
    series: PathBuf,
    /// Classify only the series at this zero-based index.
    #[arg(long)]
    index: Option<usize>,
    /// Interpolate missing values instead of rejecting them.
    #[arg(long)]
    impute: bool,
}

#[derive(Args)]
struct ExplainArgs {
    /// Trained model file.
    #[arg(long)]
    model: PathBuf,
    /// Optional `.ts` file with a series to explain.
    #[arg(long)]
    series: Option<PathBuf>,
    /// Zero-based index of the series to explain.
    #[arg(long, default_value_t = 0)]
    index: usize,
    /// Write the DOT tree here ('-' for stdout).
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the per-step relevance CSV here.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Interpolate missing values instead of rejecting them.
    #[arg(long)]
    impute: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Directory containing `<name>_TRAIN.ts` / `<name>_TEST.ts` pairs.
    #[arg(long)]
    data_dir: PathBuf,
    /// Comma-separated classifiers: miht, 1nn-ed, 1nn-dtw.
    #[arg(long, default_value = "miht,1nn-ed,1nn-dtw")]
    models: String,
    /// Write the results CSV here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Per-(dataset, model) wall-clock budget in seconds; over-budget runs
    /// are recorded as `-` rows.
    #[arg(long)]
    timeout_secs: Option<f64>,
    /// Run this many (dataset, model) jobs concurrently.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Omit wall-clock timings so output is byte-reproducible.
    #[arg(long)]
    no_timings: bool,
    #[command(flatten)]
    hyper: HyperArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Csv,
    Json,
}

fn verbose() -> bool {
    std::env::var("MIHT_LOG").is_ok_and(|v| !v.is_empty() && v != "0")
}

macro_rules! log {
    ($($arg:tt)*) => {
        if verbose() {
            eprintln!($($arg)*);
        }
    };
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Train(args) => cmd_train(args),
        Command::Evaluate(args) => cmd_evaluate(args),
        Command::Predict(args) => cmd_predict(args),
        Command::Explain(args) => cmd_explain(args),
        Command::Bench(args) => cmd_bench(args),
    };
    if let Err(err) = result {
        eprintln!("error: {err:#}");
        std::process::exit(1);
    }
}

fn load(path: &Path, missing: MissingPolicy) -> anyhow::Result<Dataset> {
    load_ts_file(path, missing).with_context(|| format!("loading {}", path.display()))
}

fn cmd_train(args: TrainArgs) -> anyhow::Result<()> {
    let config = args.hyper.config()?;
    let train = load(&args.train, args.hyper.missing())?;
    log!("loaded {} series, {} classes", train.n_series(), train.n_classes());
    let started = Instant::now();
    let (tree, params, report) = fit(&train, &config)?;
    eprintln!(
        "resolved window_steps={} stride_steps={} grace_period={}",
        params.window_steps, params.stride_steps, params.grace_period
    );
    eprintln!(
        "trained in {:.2}s: {} nodes, {} iterations, converged={}",
        started.elapsed().as_secs_f64(),
        tree.node_count(),
        report.iterations,
        report.converged
    );
    let model = TrainedModel {
        tree,
        params,
        class_names: train.class_names.clone(),
    };
    save_model_file(&model, &args.out)
        .with_context(|| format!("writing {}", args.out.display()))?;
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(())
}

fn emit_row(row: &ResultRow, format: Format) -> anyhow::Result<()> {
    match format {
        Format::Csv => {
            println!("{}", ResultRow::CSV_HEADER);
            println!("{}", row.to_csv());
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(row)?),
    }
    Ok(())
}

fn cmd_evaluate(args: EvaluateArgs) -> anyhow::Result<()> {
    let missing = if args.impute {
        MissingPolicy::Interpolate
    } else {
        MissingPolicy::Reject
    };
    let model = load_model_file(&args.model)
        .with_context(|| format!("loading model {}", args.model.display()))?;
    let test = load(&args.test, missing)?;
    let started = Instant::now();
    let result = model.evaluate(&test)?;
    let test_seconds = started.elapsed().as_secs_f64();
    let row = ResultRow::new(&test.name, "miht", &result)
        .with_timings(None, (!args.no_timings).then_some(test_seconds));
    emit_row(&row, args.format)
}

fn cmd_predict(args: PredictArgs) -> anyhow::Result<()> {
    let missing = if args.impute {
        MissingPolicy::Interpolate
    } else {
        MissingPolicy::Reject
    };
    let model = load_model_file(&args.model)?;
    let data = load(&args.series, missing)?;
    let indices: Vec<usize> = match args.index {
        Some(i) => {
            if i >= data.n_series() {
                bail!("index {i} out of range: file has {} series", data.n_series());
            }
            vec![i]
        }
        None => (0..data.n_series()).collect(),
    };
    for i in indices {
        let report = predict(&model.tree, &model.params, &data.series[i])?;
        let label = &model.class_names[report.predicted_class];
        println!(
            "{}",
            serde_json::json!({
                "index": i,
                "predicted_class": report.predicted_class,
                "predicted_label": label,
                "instance_classes": report.instance_classes,
            })
        );
    }
    Ok(())
}

fn cmd_explain(args: ExplainArgs) -> anyhow::Result<()> {
    let missing = if args.impute {
        MissingPolicy::Interpolate
    } else {
        MissingPolicy::Reject
    };
    let model = load_model_file(&args.model)?;
    let dot = model
        .tree
        .to_dot(model.params.window_steps, &model.class_names);

    match &args.series {
        None => {
            // No series: the DOT graph is the primary output.
            match &args.dot {
                Some(path) if path != Path::new("-") => std::fs::write(path, dot)?,
                _ => print!("{dot}"),
            }
        }
        Some(series_path) => {
            let data = load(series_path, missing)?;
            if args.index >= data.n_series() {
                bail!(
                    "index {} out of range: file has {} series",
                    args.index,
                    data.n_series()
                );
            }
            let series = &data.series[args.index];
            let explanation = explain(&model.tree, &model.params, series)?;
            match &args.dot {
                Some(path) if path != Path::new("-") => std::fs::write(path, dot)?,
                Some(_) => print!("{dot}"),
                None => {}
            }
            if let Some(path) = &args.csv {
                std::fs::write(path, explanation.relevance_csv(series))?;
            }
            let label = &model.class_names[explanation.predicted_class];
            let mut value = serde_json::to_value(&explanation)?;
            value["predicted_label"] = serde_json::json!(label);
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
    }
    Ok(())
}

struct BenchJob {
    dataset: String,
    model: String,
    train: PathBuf,
    test: PathBuf,
}

fn cmd_bench(args: BenchArgs) -> anyhow::Result<()> {
    let models: Vec<String> = args
        .models
        .split(',')
        .map(|m| m.trim().to_lowercase())
        .filter(|m| !m.is_empty())
        .collect();
    for m in &models {
        if !matches!(m.as_str(), "miht" | "1nn-ed" | "1nn-dtw") {
            bail!("unknown model {m:?} (expected miht, 1nn-ed, 1nn-dtw)");
        }
    }

    // `<name>_TRAIN.ts` pairs directly in the directory or one level down.
    let mut datasets = Vec::new();
    let mut scan_dirs = vec![args.data_dir.clone()];
    for entry in std::fs::read_dir(&args.data_dir)
        .with_context(|| format!("reading {}", args.data_dir.display()))?
    {
        let path = entry?.path();
        if path.is_dir() {
            scan_dirs.push(path);
        }
    }
    for dir in scan_dirs {
        for entry in std::fs::read_dir(&dir)? {
            let path = entry?.path();
            let Some(name) = path
                .file_name()
                .and_then(|n| n.to_str())
                .and_then(|n| n.strip_suffix("_TRAIN.ts"))
            else {
                continue;
            };
            let test = path.with_file_name(format!("{name}_TEST.ts"));
            if test.exists() {
                datasets.push((name.to_owned(), path.clone(), test));
            }
        }
    }
    datasets.sort();
    if datasets.is_empty() {
        bail!(
            "no <name>_TRAIN.ts / <name>_TEST.ts pairs in {}",
            args.data_dir.display()
        );
    }

    let jobs: Vec<BenchJob> = datasets
        .iter()
        .flat_map(|(name, train, test)| {
            models.iter().map(move |m| BenchJob {
                dataset: name.clone(),
                model: m.clone(),
                train: train.clone(),
                test: test.clone(),
            })
        })
        .collect();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.max(1))
        .build()?;
    let hyper = args.hyper.clone();
    let no_timings = args.no_timings;
    let timeout = args.timeout_secs;
    let rows: Vec<String> = pool.install(|| {
        use rayon::prelude::*;
        jobs.par_iter()
            .map(|job| run_bench_job(job, &hyper, timeout, no_timings))
            .collect()
    });

    let mut out = String::from(ResultRow::CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row);
        out.push('\n');
    }
    match &args.out {
        Some(path) => std::fs::write(path, out)?,
        None => {
            print!("{out}");
            std::io::stdout().flush()?;
        }
    }
    Ok(())
}

/// Runs one (dataset, model) pair, turning any failure or timeout into a
/// `-` row. When a budget is set the job runs on a helper thread; a job
/// that overruns is abandoned to finish in the background.
fn run_bench_job(
    job: &BenchJob,
    hyper: &HyperArgs,
    timeout_secs: Option<f64>,
    no_timings: bool,
) -> String {
    log!("bench: {} / {}", job.dataset, job.model);
    let run = {
        let job_name = job.dataset.clone();
        let model = job.model.clone();
        let train = job.train.clone();
        let test = job.test.clone();
        let hyper = hyper.clone();
        move || -> anyhow::Result<ResultRow> {
            let train_set = load(&train, hyper.missing())?;
            let test_set = load(&test, hyper.missing())?;
            let train_started = Instant::now();
            let (result, train_seconds) = match model.as_str() {
                "miht" => {
                    let (tree, params, _) = fit(&train_set, &hyper.config()?)?;
                    let train_seconds = train_started.elapsed().as_secs_f64();
                    (evaluate(&tree, &params, &test_set)?, train_seconds)
                }
                "1nn-ed" => {
                    let preds = baselines::euclidean_1nn(&train_set, &test_set)?;
                    (eval_predictions(&test_set, &preds)?, 0.0)
                }
                "1nn-dtw" => {
                    let preds = baselines::dtw_1nn(&train_set, &test_set)?;
                    (eval_predictions(&test_set, &preds)?, 0.0)
                }
                other => bail!("unknown model {other}"),
            };
            let test_seconds = train_started.elapsed().as_secs_f64() - train_seconds;
            Ok(ResultRow::new(&job_name, &model, &result).with_timings(
                (!no_timings).then_some(train_seconds),
                (!no_timings).then_some(test_seconds),
            ))
        }
    };

    let outcome: anyhow::Result<ResultRow> = match timeout_secs {
        None => run(),
        Some(budget) => {
            let (tx, rx) = std::sync::mpsc::channel();
            std::thread::spawn(move || {
                let _ = tx.send(run());
            });
            match rx.recv_timeout(std::time::Duration::from_secs_f64(budget)) {
                Ok(result) => result,
                Err(_) => {
                    log!("bench: {} / {} timed out", job.dataset, job.model);
                    return ResultRow::failed(&job.dataset, &job.model);
                }
            }
        }
    };

    match outcome {
        Ok(row) => row.to_csv(),
        Err(err) => {
            eprintln!("bench: {} / {} failed: {err:#}", job.dataset, job.model);
            ResultRow::failed(&job.dataset, &job.model)
        }
    }
}

fn eval_predictions(test: &Dataset, predictions: &[usize]) -> anyhow::Result<EvalResult> {
    let truth: Vec<usize> = test
        .series
        .iter()
        .map(|s| s.label.context("test set contains unlabeled series"))
        .collect::<anyhow::Result<_>>()?;
    Ok(EvalResult::from_labels(&truth, predictions, test.n_classes())?)
}

//! Versioned text persistence for trained models.
//!
//! The file is line oriented and self-describing: a version header, the
//! hyperparameters and class names, then the tree in preorder with one line
//! per node and one line per observed attribute summary. Floats are written
//! in shortest round-trip scientific notation, so a load reproduces the
//! saved model bit for bit.

use std::io::{BufRead, Write};

use crate::bagging::ResolvedParams;
use crate::dataset::Dataset;
use crate::error::{MihtError, Result};
use crate::metrics::{evaluate, EvalResult};
use crate::tree::{
    GaussianAttributeStat, GaussianEstimator, HoeffdingTreeModel, NbMode, NodeStats, SplitKind,
    TreeNode,
};

const VERSION_LINE: &str = "#miht-model v1";

/// Everything needed to classify new series: the tree, the resolved window
/// parameters it was trained with, and the class-name mapping.
#[derive(Debug, Clone, PartialEq)]
pub struct TrainedModel {
    pub tree: HoeffdingTreeModel,
    pub params: ResolvedParams,
    pub class_names: Vec<String>,
}

impl TrainedModel {
    /// Errors unless `data` declares exactly the classes this model knows.
    pub fn check_class_names(&self, data: &Dataset) -> Result<()> {
        if self.class_names != data.class_names {
            return Err(MihtError::ClassSetMismatch {
                model: self.class_names.clone(),
                data: data.class_names.clone(),
            });
        }
        Ok(())
    }

    pub fn evaluate(&self, test: &Dataset) -> Result<EvalResult> {
        self.check_class_names(test)?;
        evaluate(&self.tree, &self.params, test)
    }
}

fn fmt_f64(v: f64) -> String {
    format!("{v:e}")
}

/// Serializes a trained model to the v1 text schema.
pub fn save_model<W: Write>(model: &TrainedModel, mut sink: W) -> Result<()> {
    let tree = &model.tree;
    writeln!(sink, "{VERSION_LINE}")?;
    writeln!(sink, "classes {}", tree.n_classes())?;
    for name in &model.class_names {
        writeln!(sink, "class {name}")?;
    }
    writeln!(sink, "attributes {}", tree.n_attributes())?;
    writeln!(sink, "delta {}", fmt_f64(tree.delta()))?;
    writeln!(sink, "grace {}", tree.grace_period())?;
    match tree.tie_threshold() {
        Some(t) => writeln!(sink, "tie_threshold {}", fmt_f64(t))?,
        None => writeln!(sink, "tie_threshold none")?,
    }
    let nb_mode = match tree.nb_mode() {
        NbMode::Product => "product",
        NbMode::Sum => "sum",
    };
    writeln!(sink, "nb_mode {nb_mode}")?;
    writeln!(sink, "window {}", model.params.window_steps)?;
    writeln!(sink, "stride {}", model.params.stride_steps)?;
    writeln!(sink, "k {}", model.params.k)?;
    write_node(&mut sink, tree.root())?;
    writeln!(sink, "end")?;
    Ok(())
}

fn write_stats<W: Write>(sink: &mut W, stats: &NodeStats) -> Result<()> {
    write!(
        sink,
        "{} {} {} {}",
        fmt_f64(stats.weight),
        fmt_f64(stats.seen_since_split_attempt),
        fmt_f64(stats.nb_correct),
        fmt_f64(stats.mc_correct)
    )?;
    for w in &stats.class_weights {
        write!(sink, " {}", fmt_f64(*w))?;
    }
    writeln!(sink)?;
    Ok(())
}

fn write_node<W: Write>(sink: &mut W, node: &TreeNode) -> Result<()> {
    match node {
        TreeNode::Leaf { stats } => {
            write!(sink, "leaf ")?;
            write_stats(sink, stats)?;
            for (attr, stat) in stats.attribute_stats.iter().enumerate() {
                let observed: Vec<(usize, &GaussianEstimator)> = stat
                    .per_class
                    .iter()
                    .enumerate()
                    .filter(|(_, est)| est.weight > 0.0)
                    .collect();
                if observed.is_empty() {
                    continue;
                }
                write!(
                    sink,
                    "g {attr} {} {} {}",
                    fmt_f64(stat.min),
                    fmt_f64(stat.max),
                    observed.len()
                )?;
                for (class, est) in observed {
                    write!(
                        sink,
                        " {class} {} {} {}",
                        fmt_f64(est.weight),
                        fmt_f64(est.mean),
                        fmt_f64(est.m2)
                    )?;
                }
                writeln!(sink)?;
            }
            Ok(())
        }
        TreeNode::Split {
            attribute,
            threshold,
            kind,
            left,
            right,
            stats,
        } => {
            let kind_str = match kind {
                SplitKind::Numeric => "numeric",
                SplitKind::Categorical => "categorical",
            };
            write!(sink, "split {attribute} {} {kind_str} ", fmt_f64(*threshold))?;
            write_stats(sink, stats)?;
            write_node(sink, left)?;
            write_node(sink, right)
        }
    }
}

/// Writes the model to a file, creating or truncating it.
pub fn save_model_file(model: &TrainedModel, path: impl AsRef<std::path::Path>) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut writer = std::io::BufWriter::new(file);
    save_model(model, &mut writer)?;
    writer.flush()?;
    Ok(())
}

struct Lines<R: BufRead> {
    reader: R,
    /// A line read but not yet consumed.
    pending: Option<String>,
    line_no: usize,
}

impl<R: BufRead> Lines<R> {
    fn next(&mut self) -> Result<String> {
        if let Some(line) = self.pending.take() {
            return Ok(line);
        }
        let mut buf = String::new();
        let n = self.reader.read_line(&mut buf)?;
        if n == 0 {
            return Err(MihtError::ModelFormat(format!(
                "unexpected end of model file after line {}",
                self.line_no
            )));
        }
        self.line_no += 1;
        Ok(buf.trim_end_matches(['\r', '\n']).to_owned())
    }

    fn peek(&mut self) -> Result<&str> {
        if self.pending.is_none() {
            self.pending = Some(self.next()?);
        }
        Ok(self.pending.as_deref().expect("just filled"))
    }

    fn expect_keyed(&mut self, key: &str) -> Result<String> {
        let line = self.next()?;
        line.strip_prefix(key)
            .and_then(|rest| rest.strip_prefix(' ').or(Some(rest).filter(|r| r.is_empty())))
            .map(str::to_owned)
            .ok_or_else(|| {
                MihtError::ModelFormat(format!("expected `{key} ...`, found {line:?}"))
            })
    }
}

fn parse_num<T: std::str::FromStr>(token: Option<&str>, what: &str) -> Result<T> {
    token
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| MihtError::ModelFormat(format!("invalid or missing {what}")))
}

/// Loads a model saved by [`save_model`].
pub fn load_model<R: BufRead>(reader: R) -> Result<TrainedModel> {
    let mut lines = Lines {
        reader,
        pending: None,
        line_no: 0,
    };
    let version = lines.next()?;
    if version != VERSION_LINE {
        return Err(MihtError::VersionMismatch {
            found: version,
            expected: VERSION_LINE.to_owned(),
        });
    }
    let n_classes: usize = parse_num(Some(&lines.expect_keyed("classes")?), "class count")?;
    let mut class_names = Vec::with_capacity(n_classes);
    for _ in 0..n_classes {
        class_names.push(lines.expect_keyed("class")?);
    }
    let n_attributes: usize =
        parse_num(Some(&lines.expect_keyed("attributes")?), "attribute count")?;
    let delta: f64 = parse_num(Some(&lines.expect_keyed("delta")?), "delta")?;
    let grace: usize = parse_num(Some(&lines.expect_keyed("grace")?), "grace period")?;
    let tie_raw = lines.expect_keyed("tie_threshold")?;
    let tie_threshold = if tie_raw == "none" {
        None
    } else {
        Some(parse_num(Some(&tie_raw), "tie threshold")?)
    };
    let nb_mode: NbMode = lines.expect_keyed("nb_mode")?.parse()?;
    let window_steps: usize = parse_num(Some(&lines.expect_keyed("window")?), "window steps")?;
    let stride_steps: usize = parse_num(Some(&lines.expect_keyed("stride")?), "stride steps")?;
    let k: usize = parse_num(Some(&lines.expect_keyed("k")?), "k")?;

    let root = read_node(&mut lines, n_classes, n_attributes)?;
    let terminator = lines.next()?;
    if terminator != "end" {
        return Err(MihtError::ModelFormat(format!(
            "expected `end`, found {terminator:?}"
        )));
    }

    Ok(TrainedModel {
        tree: HoeffdingTreeModel::from_parts(
            root,
            n_classes,
            n_attributes,
            delta,
            grace,
            tie_threshold,
            nb_mode,
        ),
        params: ResolvedParams {
            window_steps,
            stride_steps,
            k,
            grace_period: grace,
        },
        class_names,
    })
}

/// Loads a model file from disk.
pub fn load_model_file(path: impl AsRef<std::path::Path>) -> Result<TrainedModel> {
    let file = std::fs::File::open(path)?;
    load_model(std::io::BufReader::new(file))
}

fn read_stats<'a>(
    tokens: &mut impl Iterator<Item = &'a str>,
    n_classes: usize,
    n_attributes: usize,
) -> Result<NodeStats> {
    let weight: f64 = parse_num(tokens.next(), "node weight")?;
    let seen: f64 = parse_num(tokens.next(), "seen-since-split counter")?;
    let nb_correct: f64 = parse_num(tokens.next(), "nb counter")?;
    let mc_correct: f64 = parse_num(tokens.next(), "mc counter")?;
    let mut class_weights = Vec::with_capacity(n_classes);
    for _ in 0..n_classes {
        class_weights.push(parse_num(tokens.next(), "class weight")?);
    }
    Ok(NodeStats {
        weight,
        class_weights,
        attribute_stats: (0..n_attributes)
            .map(|_| GaussianAttributeStat::new(n_classes))
            .collect(),
        seen_since_split_attempt: seen,
        nb_correct,
        mc_correct,
    })
}

fn read_node<R: BufRead>(
    lines: &mut Lines<R>,
    n_classes: usize,
    n_attributes: usize,
) -> Result<TreeNode> {
    let line = lines.next()?;
    let mut tokens = line.split_whitespace();
    match tokens.next() {
        Some("leaf") => {
            let mut stats = read_stats(&mut tokens, n_classes, n_attributes)?;
            // Attribute summaries follow until the next node line.
            while lines.peek()?.starts_with("g ") {
                let g_line = lines.next()?;
                let mut g = g_line.split_whitespace();
                g.next(); // "g"
                let attr: usize = parse_num(g.next(), "attribute index")?;
                if attr >= n_attributes {
                    return Err(MihtError::ModelFormat(format!(
                        "attribute index {attr} out of range"
                    )));
                }
                let stat = &mut stats.attribute_stats[attr];
                stat.min = parse_num(g.next(), "attribute min")?;
                stat.max = parse_num(g.next(), "attribute max")?;
                let entries: usize = parse_num(g.next(), "estimator count")?;
                for _ in 0..entries {
                    let class: usize = parse_num(g.next(), "estimator class")?;
                    if class >= n_classes {
                        return Err(MihtError::ModelFormat(format!(
                            "class index {class} out of range"
                        )));
                    }
                    stat.per_class[class] = GaussianEstimator {
                        weight: parse_num(g.next(), "estimator weight")?,
                        mean: parse_num(g.next(), "estimator mean")?,
                        m2: parse_num(g.next(), "estimator m2")?,
                    };
                }
            }
            Ok(TreeNode::Leaf { stats })
        }
        Some("split") => {
            let attribute: usize = parse_num(tokens.next(), "split attribute")?;
            if attribute >= n_attributes {
                return Err(MihtError::ModelFormat(format!(
                    "split attribute {attribute} out of range"
                )));
            }
            let threshold: f64 = parse_num(tokens.next(), "split threshold")?;
            let kind = match tokens.next() {
                Some("numeric") => SplitKind::Numeric,
                Some("categorical") => SplitKind::Categorical,
                other => {
                    return Err(MihtError::ModelFormat(format!(
                        "unknown split kind {other:?}"
                    )))
                }
            };
            let mut stats = read_stats(&mut tokens, n_classes, n_attributes)?;
            stats.attribute_stats = Vec::new();
            let left = read_node(lines, n_classes, n_attributes)?;
            let right = read_node(lines, n_classes, n_attributes)?;
            Ok(TreeNode::Split {
                attribute,
                threshold,
                kind,
                left: Box::new(left),
                right: Box::new(right),
                stats,
            })
        }
        other => Err(MihtError::ModelFormat(format!(
            "expected a node line, found {other:?}"
        ))),
    }
}

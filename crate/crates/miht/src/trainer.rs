//! End-to-end training: an initialization pass over every window of every
//! bag, then a reinforcement loop that re-feeds only the best k consecutive
//! windows of each bag until the selections stop moving.

use serde::{Deserialize, Serialize};

use crate::bagging::{build_bag, resolve_params, Bag, ResolvedParams};
use crate::dataset::Dataset;
use crate::error::{MihtError, Result};
use crate::tree::{HoeffdingTreeModel, NbMode};

/// Training hyperparameters. Defaults are the published reference values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    /// Window width as a fraction of the mean training length.
    pub window_frac: f64,
    /// Stride between window starts as a fraction of the mean training length.
    pub stride_frac: f64,
    /// Number of consecutive windows selected per bag in the reinforcement loop.
    pub k: usize,
    /// Grace period as a fraction of the mean bag size.
    pub grace_frac: f64,
    /// Significance level of the Hoeffding bound.
    pub delta: f64,
    /// Hard cap on reinforcement iterations.
    pub max_iterations: usize,
    /// Recorded for reproducibility; training itself is order-deterministic
    /// and draws no random numbers.
    pub seed: u64,
    /// How per-attribute likelihoods combine in leaf inference.
    pub nb_mode: NbMode,
    /// Optional tie-splitting threshold; off by default.
    pub tie_threshold: Option<f64>,
}

impl Default for TrainConfig {
    fn default() -> Self {
        Self {
            window_frac: 0.21,
            stride_frac: 0.02,
            k: 4,
            grace_frac: 3.665,
            delta: 0.005615,
            max_iterations: 100,
            seed: 0,
            nb_mode: NbMode::Product,
            tie_threshold: Some(0.2),
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.window_frac > 0.0 && self.window_frac <= 1.0) {
            return Err(MihtError::Config(format!(
                "window fraction must be in (0, 1], got {}",
                self.window_frac
            )));
        }
        if !(self.stride_frac > 0.0 && self.stride_frac <= 1.0) {
            return Err(MihtError::Config(format!(
                "stride fraction must be in (0, 1], got {}",
                self.stride_frac
            )));
        }
        if self.k == 0 {
            return Err(MihtError::Config("k must be at least 1".into()));
        }
        if !self.grace_frac.is_finite() || self.grace_frac <= 0.0 {
            return Err(MihtError::Config(format!(
                "grace fraction must be positive, got {}",
                self.grace_frac
            )));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(MihtError::Config(format!(
                "delta must be in (0, 1), got {}",
                self.delta
            )));
        }
        if let Some(t) = self.tie_threshold {
            if !t.is_finite() || t <= 0.0 {
                return Err(MihtError::Config(format!(
                    "tie threshold must be positive when set, got {t}"
                )));
            }
        }
        Ok(())
    }
}

/// The window chosen for one bag: start index of the k-window maximizing the
/// summed likelihood of the bag's class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauSelection {
    pub start: usize,
    /// Summed likelihood of the bag class over the selected window.
    pub objective: f64,
}

/// What the reinforcement loop did, serializable for the training log.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    /// Reinforcement iterations run (each one selects; all but a final
    /// converged one also feed).
    pub iterations: usize,
    /// Per-iteration count of bags whose selected start moved.
    pub tau_changes: Vec<usize>,
    /// True when the last iteration moved no selection.
    pub converged: bool,
}

/// Picks the start of the best window of (up to) `k` consecutive instances
/// for the bag's own class. Ties break toward the smallest start; bags
/// shorter than `k` always select the whole bag.
pub fn select_tau(model: &HoeffdingTreeModel, bag: &Bag, k: usize) -> Result<TauSelection> {
    let label = bag
        .label
        .ok_or_else(|| MihtError::Argument("bag has no label".into()))?;
    let likelihoods: Vec<f64> = bag
        .instances
        .iter()
        .map(|inst| Ok(model.leaf_likelihood(&inst.attributes)?[label]))
        .collect::<Result<_>>()?;
    Ok(best_window(&likelihoods, k))
}

/// Maximum-sum window of length `min(k, n)` over a likelihood vector. Each
/// window is summed afresh so the result is independent of scan order. This
/// is the search behind [`select_tau`] and the explanation span.
pub fn best_window(likelihoods: &[f64], k: usize) -> TauSelection {
    let n = likelihoods.len();
    let len = k.min(n).max(1);
    let mut best = TauSelection {
        start: 0,
        objective: likelihoods[..len].iter().sum(),
    };
    for start in 1..=(n - len) {
        let sum: f64 = likelihoods[start..start + len].iter().sum();
        if sum > best.objective {
            best = TauSelection {
                start,
                objective: sum,
            };
        }
    }
    best
}

/// splitmix64; stable across platforms, used only to derive the feeding
/// permutation from the seed.
fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn seeded_shuffle<T>(items: &mut [T], seed: u64) {
    let mut state = seed;
    for i in (1..items.len()).rev() {
        let j = (splitmix64(&mut state) % (i as u64 + 1)) as usize;
        items.swap(i, j);
    }
}

/// Trains a model on a labeled dataset.
///
/// The tree is never reset. The initialization pass feeds every instance of
/// every bag in seed-shuffled order: UCR/UEA files group series by class,
/// and a class-blocked stream starves every leaf created after the first
/// block boundary, so the tree degenerates to constant predictions.
/// Afterwards each reinforcement iteration selects the best k-window per bag
/// against the frozen tree (a read-only phase) and feeds exactly those
/// instances back (the single-writer phase). Tie splitting is active only
/// during initialization: re-fed windows are duplicates, not fresh evidence,
/// and tie splits on them starve the new leaves. The loop stops when no
/// selection moved, or at `max_iterations`.
pub fn fit(
    train: &Dataset,
    config: &TrainConfig,
) -> Result<(HoeffdingTreeModel, ResolvedParams, FitReport)> {
    config.validate()?;
    if train.series.is_empty() {
        return Err(MihtError::Config("training set is empty".into()));
    }
    let observed: usize = train
        .class_counts()
        .iter()
        .filter(|c| **c > 0)
        .count();
    if observed < 2 {
        return Err(MihtError::Config(format!(
            "training needs at least 2 observed classes, found {observed}"
        )));
    }
    if train.series.iter().any(|s| s.label.is_none()) {
        return Err(MihtError::Config("training set contains unlabeled series".into()));
    }

    let params = resolve_params(train, config)?;
    let bags: Vec<Bag> = train
        .series
        .iter()
        .map(|s| build_bag(s, &params))
        .collect();

    let n_attributes = params.n_attributes(train.dims());
    let mut model = HoeffdingTreeModel::new(
        train.n_classes(),
        n_attributes,
        config.delta,
        params.grace_period,
        config.tie_threshold,
        config.nb_mode,
    )?;

    // Initialization pass over a seed-shuffled instance stream.
    let mut stream: Vec<(usize, usize)> = bags
        .iter()
        .enumerate()
        .flat_map(|(b, bag)| (0..bag.len()).map(move |i| (b, i)))
        .collect();
    seeded_shuffle(&mut stream, config.seed);
    for (b, i) in stream {
        let label = bags[b].label.expect("labels checked above");
        model.learn_instance(&bags[b].instances[i].attributes, label, 1.0)?;
    }

    // Reinforcement loop; the Hoeffding race stays on, tie splitting off.
    model.set_tie_threshold(None);
    let mut previous: Vec<Option<usize>> = vec![None; bags.len()];
    let mut tau_changes = Vec::new();
    let mut converged = false;
    for _ in 0..config.max_iterations {
        // Read-only phase over the frozen tree.
        let selections: Vec<TauSelection> = bags
            .iter()
            .map(|bag| select_tau(&model, bag, params.k))
            .collect::<Result<_>>()?;

        let changed = selections
            .iter()
            .zip(&previous)
            .filter(|(sel, prev)| Some(sel.start) != **prev)
            .count();
        tau_changes.push(changed);
        if changed == 0 {
            converged = true;
            break;
        }

        // Single-writer phase: feed only the selected windows.
        for (bag, sel) in bags.iter().zip(&selections) {
            let label = bag.label.expect("labels checked above");
            let len = params.k.min(bag.len());
            for inst in &bag.instances[sel.start..sel.start + len] {
                model.learn_instance(&inst.attributes, label, 1.0)?;
            }
        }
        previous = selections.iter().map(|s| Some(s.start)).collect();
    }
    model.set_tie_threshold(config.tie_threshold);

    let report = FitReport {
        iterations: tau_changes.len(),
        tau_changes,
        converged,
    };
    Ok((model, params, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bagging::Instance;
    use crate::dataset::MultivariateSeries;
    use proptest::prelude::*;

    fn bag_with_likelihood_shape(values: &[f64]) -> (HoeffdingTreeModel, Bag) {
        // A single-attribute tree where class-1 likelihood tracks the
        // attribute value closely enough to order windows as given.
        let mut model =
            HoeffdingTreeModel::new(2, 1, 0.05, 1_000_000, None, NbMode::Product).unwrap();
        for i in 0..200 {
            let v = i as f64 / 200.0;
            model.learn_instance(&[v], 0, 1.0).unwrap();
            model.learn_instance(&[v + 1.0], 1, 1.0).unwrap();
        }
        let instances = values
            .iter()
            .enumerate()
            .map(|(i, &v)| Instance {
                attributes: vec![v],
                bag_index: i,
            })
            .collect();
        (
            model,
            Bag {
                instances,
                label: Some(1),
                source_length: values.len(),
            },
        )
    }

    #[test]
    fn select_tau_maximizes_window_sum() {
        // Likelihoods [0.1, 0.9, 0.8, 0.2] with k=2 -> start 1 (sum 1.7).
        let sel = best_window(&[0.1, 0.9, 0.8, 0.2], 2);
        assert_eq!(sel.start, 1);
        assert!((sel.objective - 1.7).abs() < 1e-12);
    }

    #[test]
    fn select_tau_breaks_ties_toward_start() {
        let sel = best_window(&[0.5, 0.5, 0.5, 0.5], 2);
        assert_eq!(sel.start, 0);
    }

    #[test]
    fn short_bag_selects_everything() {
        let sel = best_window(&[0.3, 0.1, 0.2], 4);
        assert_eq!(sel.start, 0);
        assert!((sel.objective - 0.6).abs() < 1e-12);
    }

    #[test]
    fn select_tau_routes_through_the_model() {
        let (model, bag) = bag_with_likelihood_shape(&[0.2, 1.6, 1.7, 0.1]);
        let sel = select_tau(&model, &bag, 2).unwrap();
        assert_eq!(sel.start, 1);
    }

    #[test]
    fn select_tau_requires_a_label() {
        let (model, mut bag) = bag_with_likelihood_shape(&[0.2, 0.4]);
        bag.label = None;
        assert!(select_tau(&model, &bag, 2).is_err());
    }

    fn two_class_dataset(n_per_class: usize, len: usize) -> Dataset {
        // Deterministic pseudo-noise, class 1 shifted in the middle third.
        let mut series = Vec::new();
        for c in 0..2 {
            for i in 0..n_per_class {
                let values: Vec<f64> = (0..len)
                    .map(|t| {
                        let noise = (((i * len + t) as f64 * 0.754_877).fract() - 0.5) * 2.0;
                        let signal = if c == 1 && (len / 3..2 * len / 3).contains(&t) {
                            3.0
                        } else {
                            0.0
                        };
                        noise + signal
                    })
                    .collect();
                series.push(MultivariateSeries::new(values, len, 1, Some(c)).unwrap());
            }
        }
        Dataset::new("synthetic", vec!["a".into(), "b".into()], series).unwrap()
    }

    #[test]
    fn zero_iterations_returns_the_initialization_tree() {
        let data = two_class_dataset(20, 60);
        let base = TrainConfig {
            max_iterations: 0,
            ..TrainConfig::default()
        };
        let (_, _, report) = fit(&data, &base).unwrap();
        assert_eq!(report.iterations, 0);
        assert!(report.tau_changes.is_empty());
        assert!(!report.converged);
    }

    #[test]
    fn fit_is_deterministic() {
        let data = two_class_dataset(15, 50);
        let config = TrainConfig::default();
        let (m1, p1, r1) = fit(&data, &config).unwrap();
        let (m2, p2, r2) = fit(&data, &config).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(r1, r2);
        assert_eq!(m1, m2);
    }

    #[test]
    fn single_class_dataset_is_rejected() {
        let series = vec![
            MultivariateSeries::new(vec![1.0, 2.0, 3.0, 4.0], 4, 1, Some(0)).unwrap();
            4
        ];
        let data = Dataset::new("one", vec!["a".into(), "b".into()], series).unwrap();
        assert!(fit(&data, &TrainConfig::default()).is_err());
    }

    #[test]
    fn empty_dataset_is_rejected() {
        let data = Dataset::new("none", vec![], vec![]).unwrap();
        assert!(fit(&data, &TrainConfig::default()).is_err());
    }

    #[test]
    fn convergence_reports_a_final_zero() {
        let data = two_class_dataset(10, 40);
        let (_, _, report) = fit(&data, &TrainConfig::default()).unwrap();
        if report.converged {
            assert_eq!(*report.tau_changes.last().unwrap(), 0);
        } else {
            assert_eq!(report.iterations, TrainConfig::default().max_iterations);
        }
    }

    #[test]
    fn node_count_never_shrinks_across_iterations() {
        let data = two_class_dataset(12, 45);
        let mut last = 0;
        for max_iterations in [0, 1, 3, 8] {
            let config = TrainConfig {
                max_iterations,
                ..TrainConfig::default()
            };
            let (model, _, _) = fit(&data, &config).unwrap();
            let count = model.node_count();
            assert!(
                count >= last,
                "node count shrank from {last} to {count} at {max_iterations} iterations"
            );
            last = count;
        }
    }

    proptest! {
        #[test]
        fn best_window_matches_exhaustive_search(
            likelihoods in proptest::collection::vec(0.0f64..1.0, 1..40),
            k in 1usize..8,
        ) {
            let fast = best_window(&likelihoods, k);
            let len = k.min(likelihoods.len());
            let mut best_start = 0;
            let mut best_sum = f64::NEG_INFINITY;
            for start in 0..=(likelihoods.len() - len) {
                let sum: f64 = likelihoods[start..start + len].iter().sum();
                if sum > best_sum {
                    best_sum = sum;
                    best_start = start;
                }
            }
            prop_assert_eq!(fast.start, best_start);
            prop_assert_eq!(fast.objective, best_sum);
        }
    }
}

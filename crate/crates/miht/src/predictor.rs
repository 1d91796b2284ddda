//! Bag-level prediction and explanation for one series.
//!
//! A series is windowed exactly as during training, each window is classified
//! by the tree, and the bag class is the mode of the window predictions. The
//! explanation re-scores every window for the predicted class and maps the
//! best k-window back to a span of original time steps.

use serde::Serialize;

use crate::bagging::{build_bag, ResolvedParams};
use crate::dataset::MultivariateSeries;
use crate::error::{MihtError, Result};
use crate::trainer::best_window;
use crate::tree::HoeffdingTreeModel;

/// Per-window and aggregated predictions for one series.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PredictionReport {
    pub predicted_class: usize,
    pub instance_classes: Vec<usize>,
    pub instance_probabilities: Vec<Vec<f64>>,
}

/// Where the model saw the predicted class: the best window of k consecutive
/// instances, mapped back to original time steps.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Explanation {
    pub predicted_class: usize,
    /// Start index of the selected window run, in bag coordinates.
    pub tau_start: usize,
    /// Covered original time steps `[start_step, end_step)`.
    pub start_step: usize,
    pub end_step: usize,
    /// Likelihood of the predicted class for every instance in the bag.
    pub instance_likelihoods: Vec<f64>,
}

fn check_series(
    model: &HoeffdingTreeModel,
    params: &ResolvedParams,
    series: &MultivariateSeries,
) -> Result<()> {
    let expected = model.n_attributes();
    let found = params.n_attributes(series.dims());
    if expected != found {
        return Err(MihtError::AttributeMismatch { expected, found });
    }
    Ok(())
}

/// Classifies one series: windows it with the training parameters, classifies
/// each window, and takes the most frequent class. Ties break first by the
/// larger summed probability of the tied classes over all windows, then by
/// the lowest class index.
pub fn predict(
    model: &HoeffdingTreeModel,
    params: &ResolvedParams,
    series: &MultivariateSeries,
) -> Result<PredictionReport> {
    check_series(model, params, series)?;
    let bag = build_bag(series, params);
    let mut instance_classes = Vec::with_capacity(bag.len());
    let mut instance_probabilities = Vec::with_capacity(bag.len());
    for inst in &bag.instances {
        let (class, probs) = model.classify(&inst.attributes)?;
        instance_classes.push(class);
        instance_probabilities.push(probs);
    }

    let n_classes = model.n_classes();
    let mut votes = vec![0usize; n_classes];
    for &c in &instance_classes {
        votes[c] += 1;
    }
    let top_votes = *votes.iter().max().expect("bag is never empty");
    let mut predicted = usize::MAX;
    let mut predicted_mass = f64::NEG_INFINITY;
    for c in 0..n_classes {
        if votes[c] != top_votes {
            continue;
        }
        let mass: f64 = instance_probabilities.iter().map(|p| p[c]).sum();
        if mass > predicted_mass {
            predicted = c;
            predicted_mass = mass;
        }
    }

    Ok(PredictionReport {
        predicted_class: predicted,
        instance_classes,
        instance_probabilities,
    })
}

/// Predicts a series and locates the window run most responsible for the
/// prediction: the k consecutive instances maximizing the summed likelihood
/// of the predicted class, mapped back to the original time axis as the
/// union of the selected windows.
pub fn explain(
    model: &HoeffdingTreeModel,
    params: &ResolvedParams,
    series: &MultivariateSeries,
) -> Result<Explanation> {
    let report = predict(model, params, series)?;
    let predicted = report.predicted_class;
    let instance_likelihoods: Vec<f64> = report
        .instance_probabilities
        .iter()
        .map(|p| p[predicted])
        .collect();

    let selection = best_window(&instance_likelihoods, params.k);
    let run_len = params.k.min(instance_likelihoods.len());
    let len = series.len();
    let (start_step, end_step) = if len < params.window_steps {
        // A short series yields one padded window covering everything.
        (0, len)
    } else {
        let start_step = selection.start * params.stride_steps;
        let end_step =
            (start_step + (run_len - 1) * params.stride_steps + params.window_steps).min(len);
        (start_step, end_step)
    };

    Ok(Explanation {
        predicted_class: predicted,
        tau_start: selection.start,
        start_step,
        end_step,
        instance_likelihoods,
    })
}

impl Explanation {
    /// Per-step CSV with the original values and a relevance flag:
    /// `step,dim0,...,dimM,relevant_flag`.
    pub fn relevance_csv(&self, series: &MultivariateSeries) -> String {
        let mut out = String::from("step");
        for d in 0..series.dims() {
            out.push_str(&format!(",dim{d}"));
        }
        out.push_str(",relevant_flag\n");
        for t in 0..series.len() {
            out.push_str(&t.to_string());
            for d in 0..series.dims() {
                out.push_str(&format!(",{}", series.value(t, d)));
            }
            let relevant = t >= self.start_step && t < self.end_step;
            out.push_str(if relevant { ",1\n" } else { ",0\n" });
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::NbMode;

    fn params(window: usize, stride: usize, k: usize) -> ResolvedParams {
        ResolvedParams {
            window_steps: window,
            stride_steps: stride,
            k,
            grace_period: 10,
        }
    }

    /// One-attribute-per-window model trained so low values vote class 0 and
    /// high values vote class 1.
    fn threshold_model(window: usize) -> HoeffdingTreeModel {
        let mut m =
            HoeffdingTreeModel::new(2, window, 0.05, 20, None, NbMode::Product).unwrap();
        for i in 0..300 {
            let noise = ((i as f64 * 0.618).fract() - 0.5) * 0.2;
            let low = vec![noise; window];
            let high = vec![5.0 + noise; window];
            m.learn_instance(&low, 0, 1.0).unwrap();
            m.learn_instance(&high, 1, 1.0).unwrap();
        }
        m
    }

    fn flat_series(values: &[f64]) -> MultivariateSeries {
        MultivariateSeries::new(values.to_vec(), values.len(), 1, None).unwrap()
    }

    #[test]
    fn strict_majority_wins() {
        let m = threshold_model(2);
        let p = params(2, 2, 1);
        // windows: [0,0] -> class 0, [0,0] -> class 0, [5,5] -> class 1
        let s = flat_series(&[0.0, 0.0, 0.0, 0.0, 5.0, 5.0]);
        let report = predict(&m, &p, &s).unwrap();
        assert_eq!(report.instance_classes, vec![0, 0, 1]);
        assert_eq!(report.predicted_class, 0);
    }

    #[test]
    fn single_instance_bag_takes_that_class() {
        let m = threshold_model(3);
        let p = params(3, 3, 1);
        let s = flat_series(&[5.0, 5.0, 5.0]);
        let report = predict(&m, &p, &s).unwrap();
        assert_eq!(report.instance_classes.len(), 1);
        assert_eq!(report.predicted_class, report.instance_classes[0]);
    }

    #[test]
    fn vote_ties_resolve_by_summed_probability() {
        let m = threshold_model(2);
        let p = params(2, 2, 1);
        // one confident class-0 window, one confident class-1 window
        let s = flat_series(&[0.0, 0.0, 5.0, 5.0]);
        let report = predict(&m, &p, &s).unwrap();
        assert_eq!(report.instance_classes.len(), 2);
        let mass0: f64 = report.instance_probabilities.iter().map(|v| v[0]).sum();
        let mass1: f64 = report.instance_probabilities.iter().map(|v| v[1]).sum();
        let expected = if mass1 > mass0 { 1 } else { 0 };
        assert_eq!(report.predicted_class, expected);
    }

    #[test]
    fn predict_is_pure() {
        let m = threshold_model(2);
        let p = params(2, 1, 2);
        let s = flat_series(&[0.0, 1.0, 4.0, 5.0, 0.5]);
        assert_eq!(predict(&m, &p, &s).unwrap(), predict(&m, &p, &s).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let m = threshold_model(2);
        let p = params(2, 1, 1);
        let two_dims =
            MultivariateSeries::new(vec![0.0, 0.0, 1.0, 1.0], 2, 2, None).unwrap();
        assert!(matches!(
            predict(&m, &p, &two_dims),
            Err(MihtError::AttributeMismatch { .. })
        ));
    }

    #[test]
    fn single_window_span_is_the_window() {
        let m = threshold_model(21);
        let p = params(21, 2, 1);
        let s = flat_series(&[5.0; 40]);
        let e = explain(&m, &p, &s).unwrap();
        assert_eq!(e.tau_start, 0);
        assert_eq!((e.start_step, e.end_step), (0, 21));
    }

    #[test]
    fn span_arithmetic_matches_window_union() {
        // k=4, stride 2, window 21, tau at 10 -> [20, 47)
        let m = threshold_model(21);
        let p = params(21, 2, 4);
        let mut values = vec![0.0; 100];
        // strongest class-1 evidence in windows 10..14, i.e. steps [20, 47)
        for v in values.iter_mut().take(47).skip(20) {
            *v = 5.0;
        }
        let s = flat_series(&values);
        let e = explain(&m, &p, &s).unwrap();
        assert_eq!(e.predicted_class, 0, "majority of windows are low");
        // force the arithmetic check independently of the predicted class
        let start_step = e.tau_start * p.stride_steps;
        assert_eq!(e.start_step, start_step);
        assert_eq!(e.end_step, (start_step + 3 * 2 + 21).min(100));
    }

    #[test]
    fn short_series_span_clamps_to_length() {
        let m = threshold_model(21);
        let p = params(21, 2, 4);
        let s = flat_series(&[5.0; 10]);
        let e = explain(&m, &p, &s).unwrap();
        assert_eq!((e.start_step, e.end_step), (0, 10));
    }

    #[test]
    fn relevance_csv_flags_the_span() {
        let m = threshold_model(2);
        let p = params(2, 1, 1);
        let s = flat_series(&[0.0, 5.0, 5.0, 0.0]);
        let e = explain(&m, &p, &s).unwrap();
        let csv = e.relevance_csv(&s);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "step,dim0,relevant_flag");
        assert_eq!(lines.len(), 1 + s.len());
        for (t, line) in lines[1..].iter().enumerate() {
            let flag = line.ends_with(",1");
            assert_eq!(flag, t >= e.start_step && t < e.end_step, "step {t}: {line}");
        }
    }
}

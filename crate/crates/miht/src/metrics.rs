//! Evaluation metrics over a labeled test set.

use serde::Serialize;

use crate::bagging::ResolvedParams;
use crate::dataset::Dataset;
use crate::error::{MihtError, Result};
use crate::predictor::predict;
use crate::tree::HoeffdingTreeModel;

/// Standard multiclass metrics plus the confusion matrix they derive from.
///
/// Conventions: `hamming_loss` is the misclassification fraction, stored as
/// `1 - accuracy` so the single-label identity is exact; balanced accuracy
/// averages recall over classes present in the truth; macro F1 averages over
/// all declared classes with 0/0 taken as 0.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalResult {
    pub accuracy: f64,
    pub balanced_accuracy: f64,
    pub hamming_loss: f64,
    pub macro_f1: f64,
    pub micro_f1: f64,
    /// `confusion[truth][predicted]` counts.
    pub confusion: Vec<Vec<usize>>,
}

impl EvalResult {
    pub fn from_labels(y_true: &[usize], y_pred: &[usize], n_classes: usize) -> Result<Self> {
        if y_true.len() != y_pred.len() {
            return Err(MihtError::Argument(format!(
                "{} truths vs {} predictions",
                y_true.len(),
                y_pred.len()
            )));
        }
        if y_true.is_empty() {
            return Err(MihtError::Argument("no predictions to evaluate".into()));
        }
        let mut confusion = vec![vec![0usize; n_classes]; n_classes];
        for (&t, &p) in y_true.iter().zip(y_pred) {
            if t >= n_classes || p >= n_classes {
                return Err(MihtError::Argument(format!(
                    "label {} out of range for {n_classes} classes",
                    t.max(p)
                )));
            }
            confusion[t][p] += 1;
        }
        Ok(Self::from_confusion(confusion))
    }

    pub fn from_confusion(confusion: Vec<Vec<usize>>) -> Self {
        let n_classes = confusion.len();
        let total: usize = confusion.iter().map(|row| row.iter().sum::<usize>()).sum();
        let correct: usize = (0..n_classes).map(|c| confusion[c][c]).sum();
        let accuracy = correct as f64 / total as f64;

        let mut recall_sum = 0.0;
        let mut supported_classes = 0usize;
        let mut f1_sum = 0.0;
        let mut tp_total = 0.0;
        let mut fp_total = 0.0;
        let mut fn_total = 0.0;
        for c in 0..n_classes {
            let tp = confusion[c][c] as f64;
            let support: usize = confusion[c].iter().sum();
            let predicted: usize = (0..n_classes).map(|t| confusion[t][c]).sum();
            let fn_ = support as f64 - tp;
            let fp = predicted as f64 - tp;
            tp_total += tp;
            fp_total += fp;
            fn_total += fn_;
            if support > 0 {
                recall_sum += tp / support as f64;
                supported_classes += 1;
            }
            let precision = if predicted > 0 { tp / predicted as f64 } else { 0.0 };
            let recall = if support > 0 { tp / support as f64 } else { 0.0 };
            if precision + recall > 0.0 {
                f1_sum += 2.0 * precision * recall / (precision + recall);
            }
        }
        let balanced_accuracy = if supported_classes > 0 {
            recall_sum / supported_classes as f64
        } else {
            0.0
        };
        let macro_f1 = if n_classes > 0 {
            f1_sum / n_classes as f64
        } else {
            0.0
        };
        let micro_f1 = if tp_total + fp_total + fn_total > 0.0 {
            tp_total / (tp_total + 0.5 * (fp_total + fn_total))
        } else {
            0.0
        };

        Self {
            accuracy,
            balanced_accuracy,
            hamming_loss: 1.0 - accuracy,
            macro_f1,
            micro_f1,
            confusion,
        }
    }

    /// Test-set size the matrix was built from.
    pub fn total(&self) -> usize {
        self.confusion.iter().map(|row| row.iter().sum::<usize>()).sum()
    }
}

/// Predicts every series of a labeled test set and scores the results.
pub fn evaluate(
    model: &HoeffdingTreeModel,
    params: &ResolvedParams,
    test: &Dataset,
) -> Result<EvalResult> {
    if test.n_classes() != model.n_classes() {
        return Err(MihtError::Argument(format!(
            "test set declares {} classes but the model was trained on {}",
            test.n_classes(),
            model.n_classes()
        )));
    }
    let mut y_true = Vec::with_capacity(test.n_series());
    let mut y_pred = Vec::with_capacity(test.n_series());
    for series in &test.series {
        let label = series
            .label
            .ok_or_else(|| MihtError::Argument("test set contains unlabeled series".into()))?;
        y_true.push(label);
        y_pred.push(predict(model, params, series)?.predicted_class);
    }
    EvalResult::from_labels(&y_true, &y_pred, model.n_classes())
}

/// One line of the results table shared by all classifiers.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRow {
    pub dataset: String,
    pub model: String,
    pub accuracy: f64,
    pub balanced_accuracy: f64,
    pub hamming_loss: f64,
    pub macro_f1: f64,
    pub micro_f1: f64,
    pub train_seconds: Option<f64>,
    pub test_seconds: Option<f64>,
}

impl ResultRow {
    pub const CSV_HEADER: &'static str =
        "dataset,model,accuracy,balanced_accuracy,hamming_loss,macro_f1,micro_f1,train_seconds,test_seconds";

    pub fn new(dataset: &str, model: &str, result: &EvalResult) -> Self {
        Self {
            dataset: dataset.to_owned(),
            model: model.to_owned(),
            accuracy: result.accuracy,
            balanced_accuracy: result.balanced_accuracy,
            hamming_loss: result.hamming_loss,
            macro_f1: result.macro_f1,
            micro_f1: result.micro_f1,
            train_seconds: None,
            test_seconds: None,
        }
    }

    pub fn with_timings(mut self, train_seconds: Option<f64>, test_seconds: Option<f64>) -> Self {
        self.train_seconds = train_seconds;
        self.test_seconds = test_seconds;
        self
    }

    /// A row whose metrics are all `-`, recording a failed or timed-out run.
    pub fn failed(dataset: &str, model: &str) -> String {
        format!("{dataset},{model},-,-,-,-,-,-,-")
    }

    pub fn to_csv(&self) -> String {
        let timing = |t: Option<f64>| t.map_or_else(|| "-".to_owned(), |s| format!("{s:.3}"));
        format!(
            "{},{},{:.4},{:.4},{:.4},{:.4},{:.4},{},{}",
            self.dataset,
            self.model,
            self.accuracy,
            self.balanced_accuracy,
            self.hamming_loss,
            self.macro_f1,
            self.micro_f1,
            timing(self.train_seconds),
            timing(self.test_seconds),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn perfect_predictions_score_one() {
        let y = [0, 1, 2, 1, 0];
        let r = EvalResult::from_labels(&y, &y, 3).unwrap();
        assert_eq!(r.accuracy, 1.0);
        assert_eq!(r.balanced_accuracy, 1.0);
        assert_eq!(r.hamming_loss, 0.0);
        assert_eq!(r.macro_f1, 1.0);
        assert_eq!(r.micro_f1, 1.0);
    }

    #[test]
    fn hand_computed_confusion_matrix() {
        // confusion [[2,0],[1,1]]: truth A twice correct, truth B split.
        let y_true = [0, 0, 1, 1];
        let y_pred = [0, 0, 0, 1];
        let r = EvalResult::from_labels(&y_true, &y_pred, 2).unwrap();
        assert_eq!(r.confusion, vec![vec![2, 0], vec![1, 1]]);
        assert!((r.accuracy - 0.75).abs() < 1e-12);
        assert!((r.balanced_accuracy - 0.75).abs() < 1e-12);
        // F1_A = 0.8, F1_B = 2/3 -> macro ~ 0.7333
        assert!((r.macro_f1 - 0.7333).abs() < 1e-4, "macro {}", r.macro_f1);
    }

    #[test]
    fn absent_class_contributes_zero_to_macro() {
        // class 2 never appears in truth or prediction
        let r = EvalResult::from_labels(&[0, 1], &[0, 1], 3).unwrap();
        assert!((r.macro_f1 - 2.0 / 3.0).abs() < 1e-12);
        assert_eq!(r.balanced_accuracy, 1.0); // averaged over present classes
    }

    #[test]
    fn mismatched_lengths_rejected() {
        assert!(EvalResult::from_labels(&[0, 1], &[0], 2).is_err());
        assert!(EvalResult::from_labels(&[], &[], 2).is_err());
        assert!(EvalResult::from_labels(&[5], &[0], 2).is_err());
    }

    #[test]
    fn csv_row_formats_missing_timings_as_dash() {
        let r = EvalResult::from_labels(&[0, 1], &[0, 1], 2).unwrap();
        let row = ResultRow::new("toy", "miht", &r);
        assert_eq!(row.to_csv(), "toy,miht,1.0000,1.0000,0.0000,1.0000,1.0000,-,-");
        let with = row.with_timings(Some(1.25), Some(0.5));
        assert!(with.to_csv().ends_with(",1.250,0.500"));
        assert_eq!(ResultRow::failed("toy", "x"), "toy,x,-,-,-,-,-,-,-");
    }

    proptest! {
        #[test]
        fn single_label_identities_hold_exactly(
            labels in proptest::collection::vec((0usize..5, 0usize..5), 1..200),
        ) {
            let y_true: Vec<usize> = labels.iter().map(|(t, _)| *t).collect();
            let y_pred: Vec<usize> = labels.iter().map(|(_, p)| *p).collect();
            let r = EvalResult::from_labels(&y_true, &y_pred, 5).unwrap();
            prop_assert_eq!(r.micro_f1, r.accuracy);
            prop_assert_eq!(r.hamming_loss, 1.0 - r.accuracy);
            prop_assert_eq!(r.total(), y_true.len());
        }

        #[test]
        fn permuting_the_test_order_changes_nothing(
            labels in proptest::collection::vec((0usize..4, 0usize..4), 2..100),
            rotate in 1usize..50,
        ) {
            let y_true: Vec<usize> = labels.iter().map(|(t, _)| *t).collect();
            let y_pred: Vec<usize> = labels.iter().map(|(_, p)| *p).collect();
            let r1 = EvalResult::from_labels(&y_true, &y_pred, 4).unwrap();
            let k = rotate % labels.len();
            let rt: Vec<usize> = y_true[k..].iter().chain(&y_true[..k]).copied().collect();
            let rp: Vec<usize> = y_pred[k..].iter().chain(&y_pred[..k]).copied().collect();
            let r2 = EvalResult::from_labels(&rt, &rp, 4).unwrap();
            prop_assert_eq!(r1, r2);
        }
    }
}

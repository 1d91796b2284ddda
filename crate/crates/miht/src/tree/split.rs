//! Split search: information gain over Gaussian summaries and the Hoeffding
//! bound that gates tree expansion.

use crate::error::{MihtError, Result};
use crate::tree::gaussian::GaussianAttributeStat;

/// Number of thresholds evaluated per attribute, equally spaced strictly
/// inside the observed (min, max) range.
pub const N_CANDIDATE_THRESHOLDS: usize = 10;

/// One evaluated split. `attribute: None` is the null split ("don't split"),
/// which always competes with gain 0.
#[derive(Debug, Clone, PartialEq)]
pub struct SplitCandidate {
    pub attribute: Option<usize>,
    pub threshold: f64,
    pub gain: f64,
}

/// ε = sqrt(R² ln(1/δ) / 2n): with confidence 1−δ the observed mean of an
/// R-ranged variable over n samples is within ε of the true mean.
pub fn hoeffding_bound(range: f64, delta: f64, n: f64) -> Result<f64> {
    if !range.is_finite() || range <= 0.0 {
        return Err(MihtError::Argument(format!(
            "hoeffding bound needs a positive range, got {range}"
        )));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(MihtError::Argument(format!(
            "significance level must be in (0, 1], got {delta}"
        )));
    }
    if !n.is_finite() || n < 1.0 {
        return Err(MihtError::Argument(format!(
            "sample count must be at least 1, got {n}"
        )));
    }
    Ok((range * range * (1.0 / delta).ln() / (2.0 * n)).sqrt())
}

/// Shannon entropy of a class-weight vector, in bits.
pub fn entropy(dist: &[f64]) -> f64 {
    let total: f64 = dist.iter().filter(|w| **w > 0.0).sum();
    if total <= 0.0 {
        return 0.0;
    }
    let mut h = 0.0;
    for &w in dist {
        // the p > 0 check is on the quotient: a subnormal weight can
        // underflow to p = 0, and 0 * log2(0) would be NaN
        let p = w / total;
        if p > 0.0 {
            h -= p * p.log2();
        }
    }
    h
}

/// Information gain of splitting `parent` into `children`:
/// `H(parent) − Σ (W_i / W) · H(child_i)`. Empty children contribute nothing;
/// an all-zero parent yields 0.
pub fn info_gain(parent: &[f64], children: &[Vec<f64>]) -> f64 {
    let parent_total: f64 = parent.iter().filter(|w| **w > 0.0).sum();
    if parent_total <= 0.0 {
        return 0.0;
    }
    let child_totals: Vec<f64> = children
        .iter()
        .map(|c| c.iter().filter(|w| **w > 0.0).sum())
        .collect();
    let total: f64 = child_totals.iter().sum();
    if total <= 0.0 {
        return 0.0;
    }
    let mut weighted = 0.0;
    for (child, &child_total) in children.iter().zip(&child_totals) {
        if child_total > 0.0 {
            weighted += child_total / total * entropy(child);
        }
    }
    entropy(parent) - weighted
}

/// Evaluates candidate splits for every attribute of a leaf: each attribute
/// contributes its best of `N_CANDIDATE_THRESHOLDS` thresholds equally
/// spaced inside the observed (min, max), so the Hoeffding race compares
/// attributes rather than near-identical thresholds of the same attribute.
///
/// Requires at least two classes with positive weight; otherwise the list is
/// empty. Attributes with no observed range are skipped. Per-class mass on
/// each side of a threshold comes from that attribute's Gaussian CDF scaled
/// by the class weights. Candidates are sorted by gain, best first, and the
/// null split is always present.
pub fn candidate_splits(
    class_weights: &[f64],
    attribute_stats: &[GaussianAttributeStat],
) -> Vec<SplitCandidate> {
    let observed_classes = class_weights.iter().filter(|w| **w > 0.0).count();
    if observed_classes < 2 {
        return Vec::new();
    }

    let mut candidates = Vec::new();
    for (attribute, stat) in attribute_stats.iter().enumerate() {
        if !stat.has_range() {
            continue;
        }
        let span = stat.max - stat.min;
        let mut best: Option<SplitCandidate> = None;
        for i in 1..=N_CANDIDATE_THRESHOLDS {
            let threshold = stat.min + span * i as f64 / (N_CANDIDATE_THRESHOLDS + 1) as f64;
            let (left, right) = stat.split_masses(threshold);
            let gain = info_gain(class_weights, &[left, right]);
            debug_assert!(gain.is_finite(), "non-finite gain on attribute {attribute}");
            if best.as_ref().is_none_or(|b| gain > b.gain) {
                best = Some(SplitCandidate {
                    attribute: Some(attribute),
                    threshold,
                    gain,
                });
            }
        }
        if let Some(candidate) = best {
            candidates.push(candidate);
        }
    }
    candidates.push(SplitCandidate {
        attribute: None,
        threshold: 0.0,
        gain: 0.0,
    });
    // Stable sort keeps real candidates ahead of the null split on ties.
    candidates.sort_by(|a, b| b.gain.total_cmp(&a.gain));
    candidates
}

//! Streaming per-class Gaussian summaries of one attribute.

/// Running weight, mean, and variance accumulator for one class.
///
/// Updated with a weighted single-pass scheme, so mean and variance are exact
/// to rounding regardless of insertion order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct GaussianEstimator {
    pub weight: f64,
    pub mean: f64,
    /// Sum of weighted squared deviations from the running mean.
    pub m2: f64,
}

impl GaussianEstimator {
    pub fn add(&mut self, value: f64, weight: f64) {
        if weight <= 0.0 {
            return;
        }
        let new_weight = self.weight + weight;
        let delta = value - self.mean;
        self.mean += delta * weight / new_weight;
        self.m2 += weight * delta * (value - self.mean);
        self.weight = new_weight;
    }

    /// Sample variance; zero until more than one unit of weight is seen.
    pub fn variance(&self) -> f64 {
        if self.weight > 1.0 {
            (self.m2 / (self.weight - 1.0)).max(0.0)
        } else {
            0.0
        }
    }

    /// Log of the Gaussian density at `value`, with the variance floored so a
    /// constant attribute cannot produce an infinite density.
    pub fn log_density(&self, value: f64) -> f64 {
        const VAR_FLOOR: f64 = 1e-12;
        let var = self.variance().max(VAR_FLOOR);
        let diff = value - self.mean;
        -0.5 * (std::f64::consts::TAU * var).ln() - diff * diff / (2.0 * var)
    }

    /// Probability mass at or below `threshold` (standard normal CDF), as a
    /// fraction of this estimator's weight. A zero-variance estimator is a
    /// point mass at its mean.
    pub fn mass_below(&self, threshold: f64) -> f64 {
        if self.weight <= 0.0 {
            return 0.0;
        }
        let var = self.variance();
        if var <= 0.0 {
            return if self.mean <= threshold {
                self.weight
            } else {
                0.0
            };
        }
        let z = (threshold - self.mean) / var.sqrt();
        self.weight * 0.5 * libm::erfc(-z / std::f64::consts::SQRT_2)
    }
}

/// Per-class Gaussian estimators plus the observed range of one attribute.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianAttributeStat {
    pub per_class: Vec<GaussianEstimator>,
    pub min: f64,
    pub max: f64,
}

impl GaussianAttributeStat {
    pub fn new(n_classes: usize) -> Self {
        Self {
            per_class: vec![GaussianEstimator::default(); n_classes],
            min: f64::INFINITY,
            max: f64::NEG_INFINITY,
        }
    }

    pub fn add(&mut self, value: f64, class: usize, weight: f64) {
        self.per_class[class].add(value, weight);
        self.min = self.min.min(value);
        self.max = self.max.max(value);
    }

    /// True once at least two distinct values were observed.
    pub fn has_range(&self) -> bool {
        self.max > self.min
    }

    /// Per-class mass on each side of `threshold` (left is `<=`).
    pub fn split_masses(&self, threshold: f64) -> (Vec<f64>, Vec<f64>) {
        let mut left = Vec::with_capacity(self.per_class.len());
        let mut right = Vec::with_capacity(self.per_class.len());
        for est in &self.per_class {
            let below = est.mass_below(threshold).clamp(0.0, est.weight);
            left.push(below);
            right.push(est.weight - below);
        }
        (left, right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn batch_mean_var(values: &[f64]) -> (f64, f64) {
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let var = if n > 1.0 {
            values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0)
        } else {
            0.0
        };
        (mean, var)
    }

    #[test]
    fn matches_batch_statistics() {
        let values = [3.0, -1.5, 2.0, 8.25, 0.5];
        let mut est = GaussianEstimator::default();
        for &v in &values {
            est.add(v, 1.0);
        }
        let (mean, var) = batch_mean_var(&values);
        assert!((est.mean - mean).abs() < 1e-12);
        assert!((est.variance() - var).abs() < 1e-12);
    }

    #[test]
    fn zero_variance_mass_is_a_step() {
        let mut est = GaussianEstimator::default();
        est.add(5.0, 3.0);
        assert_eq!(est.mass_below(4.9), 0.0);
        assert_eq!(est.mass_below(5.0), 3.0);
        assert_eq!(est.mass_below(5.1), 3.0);
    }

    #[test]
    fn mass_below_is_half_at_the_mean() {
        let mut est = GaussianEstimator::default();
        for v in [-1.0, 0.0, 1.0, 0.5, -0.5] {
            est.add(v, 1.0);
        }
        let at_mean = est.mass_below(est.mean);
        assert!((at_mean - est.weight / 2.0).abs() < 1e-9);
    }

    #[test]
    fn log_density_finite_for_constant_attribute() {
        let mut est = GaussianEstimator::default();
        est.add(2.0, 10.0);
        assert!(est.log_density(2.0).is_finite());
        assert!(est.log_density(100.0).is_finite());
    }

    #[test]
    fn attribute_stat_tracks_range() {
        let mut stat = GaussianAttributeStat::new(2);
        assert!(!stat.has_range());
        stat.add(1.0, 0, 1.0);
        assert!(!stat.has_range());
        stat.add(3.0, 1, 1.0);
        assert!(stat.has_range());
        assert_eq!(stat.min, 1.0);
        assert_eq!(stat.max, 3.0);
    }

    proptest! {
        #[test]
        fn permutation_invariant(mut values in proptest::collection::vec(-1e3f64..1e3, 2..40), seed in 0u64..1000) {
            let mut forward = GaussianEstimator::default();
            for &v in &values {
                forward.add(v, 1.0);
            }
            // deterministic pseudo-shuffle
            let n = values.len();
            for i in 0..n {
                let j = ((seed as usize).wrapping_mul(31).wrapping_add(i * 17)) % n;
                values.swap(i, j);
            }
            let mut shuffled = GaussianEstimator::default();
            for &v in &values {
                shuffled.add(v, 1.0);
            }
            prop_assert!((forward.mean - shuffled.mean).abs() < 1e-9);
            let scale = forward.variance().abs().max(1.0);
            prop_assert!((forward.variance() - shuffled.variance()).abs() / scale < 1e-6);
        }

        #[test]
        fn mass_below_is_monotone(mean in -10.0f64..10.0, spread in 0.1f64..5.0, a in -20.0f64..20.0, b in -20.0f64..20.0) {
            let mut est = GaussianEstimator::default();
            est.add(mean - spread, 1.0);
            est.add(mean + spread, 1.0);
            est.add(mean, 1.0);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            prop_assert!(est.mass_below(lo) <= est.mass_below(hi) + 1e-12);
        }
    }
}

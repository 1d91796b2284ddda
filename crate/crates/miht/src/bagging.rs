//! Sliding-window transformation of series into multi-instance bags.
//!
//! A bag is the ordered list of fixed-width windows taken from one series.
//! Window width and stride are resolved once per training set from the
//! fractional hyperparameters, so every instance in a run shares the same
//! attribute space of `dims * window_steps` values.

use crate::dataset::{Dataset, MultivariateSeries};
use crate::error::{MihtError, Result};
use crate::trainer::TrainConfig;

/// One window flattened to an attribute vector.
///
/// Attribute ordering is dimension-major: attribute `a = d * window_steps + t`
/// holds dimension `d` at within-window offset `t`. The tree exporter and the
/// explanation span arithmetic rely on this layout.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub attributes: Vec<f64>,
    /// Position of this window within its bag.
    pub bag_index: usize,
}

/// Ordered windows of one series plus its class label.
#[derive(Debug, Clone, PartialEq)]
pub struct Bag {
    pub instances: Vec<Instance>,
    pub label: Option<usize>,
    /// Length of the series the bag was built from.
    pub source_length: usize,
}

impl Bag {
    pub fn len(&self) -> usize {
        self.instances.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instances.is_empty()
    }
}

/// Fractional hyperparameters resolved into concrete step counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedParams {
    /// Window width in time steps (>= 2).
    pub window_steps: usize,
    /// Stride between window starts (1 ..= window_steps).
    pub stride_steps: usize,
    /// Number of consecutive instances selected per bag.
    pub k: usize,
    /// Instances a leaf must accumulate between split attempts.
    pub grace_period: usize,
}

impl ResolvedParams {
    /// Attribute-vector length for series with `dims` dimensions.
    pub fn n_attributes(&self, dims: usize) -> usize {
        dims * self.window_steps
    }

    /// Window count for a series of length `len` (1 when `len` is short).
    pub fn bag_size(&self, len: usize) -> usize {
        if len < self.window_steps {
            1
        } else {
            (len - self.window_steps) / self.stride_steps + 1
        }
    }
}

/// Turns the fractional config into step counts using the mean training
/// length as the reference, and the grace-period fraction using the mean bag
/// size that follows from it.
pub fn resolve_params(train: &Dataset, config: &TrainConfig) -> Result<ResolvedParams> {
    config.validate()?;
    if train.series.is_empty() {
        return Err(MihtError::Config("training set is empty".into()));
    }
    let mean_len = train.mean_length();
    if mean_len < 2.0 {
        return Err(MihtError::Config(format!(
            "mean training length {mean_len} is too short to window"
        )));
    }
    let window_steps = ((config.window_frac * mean_len).round() as usize).max(2);
    let stride_steps = ((config.stride_frac * mean_len).round() as usize).clamp(1, window_steps);
    let mean_bag_size = if mean_len >= window_steps as f64 {
        ((mean_len - window_steps as f64) / stride_steps as f64).floor() + 1.0
    } else {
        1.0
    };
    let grace_period = ((config.grace_frac * mean_bag_size).round() as usize).max(1);
    Ok(ResolvedParams {
        window_steps,
        stride_steps,
        k: config.k,
        grace_period,
    })
}

/// Extracts the ordered windows of one series.
///
/// Window `j` covers time steps `[j*stride, j*stride + window)`; a trailing
/// partial window is dropped. A series shorter than the window yields one
/// instance padded by repeating its last time step.
pub fn build_bag(series: &MultivariateSeries, params: &ResolvedParams) -> Bag {
    let len = series.len();
    let dims = series.dims();
    let window = params.window_steps;
    let mut instances = Vec::with_capacity(params.bag_size(len));

    if len < window {
        let mut attributes = vec![0.0; dims * window];
        for d in 0..dims {
            for t in 0..window {
                attributes[d * window + t] = series.value(t.min(len - 1), d);
            }
        }
        instances.push(Instance {
            attributes,
            bag_index: 0,
        });
    } else {
        let mut start = 0;
        while start + window <= len {
            let mut attributes = vec![0.0; dims * window];
            for d in 0..dims {
                for t in 0..window {
                    attributes[d * window + t] = series.value(start + t, d);
                }
            }
            instances.push(Instance {
                attributes,
                bag_index: instances.len(),
            });
            start += params.stride_steps;
        }
    }

    Bag {
        instances,
        label: series.label,
        source_length: len,
    }
}

//! Data model for labeled, variable-length, multivariate time series.

use crate::error::{MihtError, Result};

/// One multivariate time series: `len` time steps, each with `dims` values.
///
/// Values are stored time-major: `values[t * dims + d]` is dimension `d` at
/// step `t`. All values are finite once construction succeeds.
#[derive(Debug, Clone, PartialEq)]
pub struct MultivariateSeries {
    values: Vec<f64>,
    len: usize,
    dims: usize,
    /// Class index into the owning dataset's `class_names`, if labeled.
    pub label: Option<usize>,
}

impl MultivariateSeries {
    /// Builds a series from time-major values (`len * dims` entries).
    pub fn new(values: Vec<f64>, len: usize, dims: usize, label: Option<usize>) -> Result<Self> {
        if len == 0 || dims == 0 {
            return Err(MihtError::Argument(format!(
                "series must have at least one step and one dimension (len={len}, dims={dims})"
            )));
        }
        if values.len() != len * dims {
            return Err(MihtError::Argument(format!(
                "expected {} values for a {len}x{dims} series, got {}",
                len * dims,
                values.len()
            )));
        }
        if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
            return Err(MihtError::Argument(format!(
                "series contains non-finite value {bad}"
            )));
        }
        Ok(Self {
            values,
            len,
            dims,
            label,
        })
    }

    /// Builds a series from per-dimension value vectors of equal length.
    pub fn from_dimensions(dims: &[Vec<f64>], label: Option<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(MihtError::Argument("series has no dimensions".into()));
        }
        let len = dims[0].len();
        if dims.iter().any(|d| d.len() != len) {
            return Err(MihtError::Argument(
                "dimensions of one series differ in length".into(),
            ));
        }
        let m = dims.len();
        let mut values = vec![0.0; len * m];
        for (d, column) in dims.iter().enumerate() {
            for (t, &v) in column.iter().enumerate() {
                values[t * m + d] = v;
            }
        }
        Self::new(values, len, m, label)
    }

    /// Number of time steps.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false // len >= 1 by construction
    }

    /// Number of dimensions per step.
    pub fn dims(&self) -> usize {
        self.dims
    }

    /// Value of dimension `d` at time step `t`.
    #[inline]
    pub fn value(&self, t: usize, d: usize) -> f64 {
        self.values[t * self.dims + d]
    }

    /// All values for dimension `d` in time order.
    pub fn dimension(&self, d: usize) -> impl Iterator<Item = f64> + '_ {
        (0..self.len).map(move |t| self.value(t, d))
    }

    /// Raw time-major storage.
    pub fn raw_values(&self) -> &[f64] {
        &self.values
    }
}

/// An ordered collection of series sharing one dimension count and class set.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    /// Label strings in first-appearance order; series labels index into this.
    pub class_names: Vec<String>,
    pub series: Vec<MultivariateSeries>,
}

impl Dataset {
    pub fn new(
        name: impl Into<String>,
        class_names: Vec<String>,
        series: Vec<MultivariateSeries>,
    ) -> Result<Self> {
        let dataset = Self {
            name: name.into(),
            class_names,
            series,
        };
        dataset.validate()?;
        Ok(dataset)
    }

    fn validate(&self) -> Result<()> {
        for (i, name) in self.class_names.iter().enumerate() {
            if self.class_names[..i].contains(name) {
                return Err(MihtError::Config(format!("duplicate class label {name:?}")));
            }
        }
        if let Some(first) = self.series.first() {
            let dims = first.dims();
            for (i, s) in self.series.iter().enumerate() {
                if s.dims() != dims {
                    return Err(MihtError::Config(format!(
                        "series {i} has {} dimensions, expected {dims}",
                        s.dims()
                    )));
                }
                if let Some(label) = s.label {
                    if label >= self.class_names.len() {
                        return Err(MihtError::Config(format!(
                            "series {i} has label index {label} but only {} classes are declared",
                            self.class_names.len()
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n_series(&self) -> usize {
        self.series.len()
    }

    pub fn n_classes(&self) -> usize {
        self.class_names.len()
    }

    /// Shared dimension count, or 0 for an empty dataset.
    pub fn dims(&self) -> usize {
        self.series.first().map_or(0, MultivariateSeries::dims)
    }

    /// Mean series length over the dataset.
    pub fn mean_length(&self) -> f64 {
        if self.series.is_empty() {
            return 0.0;
        }
        let total: usize = self.series.iter().map(MultivariateSeries::len).sum();
        total as f64 / self.series.len() as f64
    }

    /// Number of labeled series per class.
    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.class_names.len()];
        for s in &self.series {
            if let Some(label) = s.label {
                counts[label] += 1;
            }
        }
        counts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_rejects_empty_and_non_finite() {
        assert!(MultivariateSeries::new(vec![], 0, 1, None).is_err());
        assert!(MultivariateSeries::new(vec![1.0], 1, 0, None).is_err());
        assert!(MultivariateSeries::new(vec![f64::NAN], 1, 1, None).is_err());
        assert!(MultivariateSeries::new(vec![1.0, 2.0], 1, 1, None).is_err());
    }

    #[test]
    fn series_layout_is_time_major() {
        // 3 steps, 2 dims
        let s =
            MultivariateSeries::new(vec![1.0, 10.0, 2.0, 20.0, 3.0, 30.0], 3, 2, Some(0)).unwrap();
        assert_eq!(s.value(0, 0), 1.0);
        assert_eq!(s.value(0, 1), 10.0);
        assert_eq!(s.value(2, 0), 3.0);
        assert_eq!(s.dimension(1).collect::<Vec<_>>(), vec![10.0, 20.0, 30.0]);
    }

    #[test]
    fn from_dimensions_matches_new() {
        let a = MultivariateSeries::from_dimensions(
            &[vec![1.0, 2.0, 3.0], vec![10.0, 20.0, 30.0]],
            None,
        )
        .unwrap();
        let b =
            MultivariateSeries::new(vec![1.0, 10.0, 2.0, 20.0, 3.0, 30.0], 3, 2, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn dataset_rejects_mixed_dimensions() {
        let a = MultivariateSeries::new(vec![1.0, 2.0], 1, 2, None).unwrap();
        let b = MultivariateSeries::new(vec![1.0], 1, 1, None).unwrap();
        assert!(Dataset::new("d", vec![], vec![a, b]).is_err());
    }

    #[test]
    fn dataset_rejects_out_of_range_label() {
        let a = MultivariateSeries::new(vec![1.0], 1, 1, Some(2)).unwrap();
        assert!(Dataset::new("d", vec!["x".into()], vec![a]).is_err());
    }

    #[test]
    fn dataset_rejects_duplicate_class_names() {
        assert!(Dataset::new("d", vec!["a".into(), "a".into()], vec![]).is_err());
    }

    #[test]
    fn class_counts_sum_to_labeled_series() {
        let mk = |label| MultivariateSeries::new(vec![0.0], 1, 1, Some(label)).unwrap();
        let d = Dataset::new(
            "d",
            vec!["a".into(), "b".into()],
            vec![mk(0), mk(1), mk(1)],
        )
        .unwrap();
        assert_eq!(d.class_counts(), vec![1, 2]);
        assert_eq!(d.class_counts().iter().sum::<usize>(), d.n_series());
    }
}

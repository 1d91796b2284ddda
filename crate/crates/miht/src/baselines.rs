//! Reference nearest-neighbor classifiers: flat Euclidean distance over
//! truncated series, and dependent multivariate dynamic time warping over the
//! untruncated series.
//!
//! Both use squared local costs without a final square root; argmin is
//! unaffected, so 1NN decisions match the rooted variants while absolute
//! distance values differ.

use crate::dataset::{Dataset, MultivariateSeries};
use crate::error::{MihtError, Result};

/// 1-nearest-neighbor with Euclidean distance over series truncated to the
/// minimum length across both sets. Ties keep the first training neighbor.
pub fn euclidean_1nn(train: &Dataset, test: &Dataset) -> Result<Vec<usize>> {
    check_sets(train, test)?;
    let min_len = train
        .series
        .iter()
        .chain(&test.series)
        .map(MultivariateSeries::len)
        .min()
        .expect("both sets are non-empty");

    let predictions = test
        .series
        .iter()
        .map(|query| {
            let mut best = (f64::INFINITY, 0usize);
            for candidate in &train.series {
                let d = truncated_squared_distance(query, candidate, min_len);
                if d < best.0 {
                    best = (d, candidate.label.expect("train labels checked"));
                }
            }
            best.1
        })
        .collect();
    Ok(predictions)
}

fn truncated_squared_distance(a: &MultivariateSeries, b: &MultivariateSeries, len: usize) -> f64 {
    let dims = a.dims();
    let mut total = 0.0;
    for t in 0..len {
        for d in 0..dims {
            let diff = a.value(t, d) - b.value(t, d);
            total += diff * diff;
        }
    }
    total
}

/// Dependent multivariate DTW: one warping path over the full `l_a x l_b`
/// grid, local cost the squared Euclidean distance across all dimensions at
/// a step pair, no warping window.
pub fn dtw_distance(a: &MultivariateSeries, b: &MultivariateSeries) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(MihtError::Argument(format!(
            "dimension mismatch: {} vs {}",
            a.dims(),
            b.dims()
        )));
    }
    let dims = a.dims();
    let cost = |i: usize, j: usize| {
        let mut c = 0.0;
        for d in 0..dims {
            let diff = a.value(i, d) - b.value(j, d);
            c += diff * diff;
        }
        c
    };

    let cols = b.len();
    let mut prev = vec![f64::INFINITY; cols + 1];
    let mut curr = vec![f64::INFINITY; cols + 1];
    prev[0] = 0.0;
    for i in 1..=a.len() {
        curr[0] = f64::INFINITY;
        for j in 1..=cols {
            let step = prev[j].min(curr[j - 1]).min(prev[j - 1]);
            curr[j] = cost(i - 1, j - 1) + step;
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    Ok(prev[cols])
}

/// 1-nearest-neighbor under [`dtw_distance`] on the untruncated series.
pub fn dtw_1nn(train: &Dataset, test: &Dataset) -> Result<Vec<usize>> {
    check_sets(train, test)?;
    test.series
        .iter()
        .map(|query| {
            let mut best = (f64::INFINITY, 0usize);
            for candidate in &train.series {
                let d = dtw_distance(query, candidate)?;
                if d < best.0 {
                    best = (d, candidate.label.expect("train labels checked"));
                }
            }
            Ok(best.1)
        })
        .collect()
}

fn check_sets(train: &Dataset, test: &Dataset) -> Result<()> {
    if train.series.is_empty() {
        return Err(MihtError::Argument("training set is empty".into()));
    }
    if test.series.is_empty() {
        return Err(MihtError::Argument("test set is empty".into()));
    }
    if train.series.iter().any(|s| s.label.is_none()) {
        return Err(MihtError::Argument("training set contains unlabeled series".into()));
    }
    if train.dims() != test.dims() {
        return Err(MihtError::Argument(format!(
            "dimension mismatch between train ({}) and test ({})",
            train.dims(),
            test.dims()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn uni(values: &[f64], label: Option<usize>) -> MultivariateSeries {
        MultivariateSeries::new(values.to_vec(), values.len(), 1, label).unwrap()
    }

    fn dataset(series: Vec<MultivariateSeries>) -> Dataset {
        Dataset::new("d", vec!["a".into(), "b".into()], series).unwrap()
    }

    #[test]
    fn identical_series_is_its_own_neighbor() {
        let train = dataset(vec![uni(&[1.0, 2.0, 3.0], Some(0)), uni(&[9.0, 9.0, 9.0], Some(1))]);
        let test = dataset(vec![uni(&[9.0, 9.0, 9.0], Some(0))]);
        assert_eq!(euclidean_1nn(&train, &test).unwrap(), vec![1]);
        assert_eq!(dtw_1nn(&train, &test).unwrap(), vec![1]);
    }

    #[test]
    fn nearest_point_wins_in_one_dimension() {
        let train = dataset(vec![uni(&[0.0], Some(0)), uni(&[10.0], Some(1))]);
        let test = dataset(vec![uni(&[2.0], None)]);
        assert_eq!(euclidean_1nn(&train, &test).unwrap(), vec![0]);
    }

    #[test]
    fn variable_lengths_are_truncated_for_euclidean() {
        // min length across both sets is 2: only the first two steps count
        let train = dataset(vec![
            uni(&[0.0, 0.0, 100.0, 100.0], Some(0)),
            uni(&[5.0, 5.0], Some(1)),
        ]);
        let test = dataset(vec![uni(&[1.0, 1.0, 1.0], None)]);
        assert_eq!(euclidean_1nn(&train, &test).unwrap(), vec![0]);
    }

    #[test]
    fn empty_train_set_is_an_error() {
        let train = dataset(vec![]);
        let test = dataset(vec![uni(&[1.0], None)]);
        assert!(euclidean_1nn(&train, &test).is_err());
        assert!(dtw_1nn(&train, &test).is_err());
    }

    #[test]
    fn dtw_zero_for_identical_series() {
        let a = uni(&[1.0, 2.0, 3.0, 2.0], None);
        assert_eq!(dtw_distance(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn dtw_absorbs_a_duplicated_step() {
        // [1,2,3] vs [1,2,2,3]: the duplicate 2 aligns at zero cost.
        let a = uni(&[1.0, 2.0, 3.0], None);
        let b = uni(&[1.0, 2.0, 2.0, 3.0], None);
        assert_eq!(dtw_distance(&a, &b).unwrap(), 0.0);
    }

    #[test]
    fn dtw_hand_computed_table() {
        // a=[0,1], b=[2]: D(0,0)=4; D(1,0)=4+1=5
        let a = uni(&[0.0, 1.0], None);
        let b = uni(&[2.0], None);
        assert_eq!(dtw_distance(&a, &b).unwrap(), 5.0);
        // a=[0,3], b=[1,2]: path costs -> 1 + min over {(0,1):4}, {(1,0):... }
        // D(0,0)=1, D(0,1)=1+4=5, D(1,0)=1+4=5, D(1,1)=1+1=2
        let a = uni(&[0.0, 3.0], None);
        let b = uni(&[1.0, 2.0], None);
        assert_eq!(dtw_distance(&a, &b).unwrap(), 2.0);
    }

    #[test]
    fn dtw_on_length_one_series_is_squared_euclidean() {
        let a = MultivariateSeries::new(vec![1.0, 2.0], 1, 2, None).unwrap();
        let b = MultivariateSeries::new(vec![4.0, 6.0], 1, 2, None).unwrap();
        assert_eq!(dtw_distance(&a, &b).unwrap(), 9.0 + 16.0);
    }

    #[test]
    fn dtw_rejects_dimension_mismatch() {
        let a = uni(&[1.0], None);
        let b = MultivariateSeries::new(vec![1.0, 2.0], 1, 2, None).unwrap();
        assert!(dtw_distance(&a, &b).is_err());
    }

    #[test]
    fn single_training_series_labels_everything() {
        let train = dataset(vec![uni(&[1.0, 2.0], Some(1))]);
        let test = dataset(vec![uni(&[0.0], None), uni(&[100.0, 3.0, 4.0], None)]);
        assert_eq!(dtw_1nn(&train, &test).unwrap(), vec![1, 1]);
    }

    #[test]
    fn leave_one_out_on_a_small_fixture() {
        // Two tight clusters; leave-one-out must recover every label.
        let all = [
            (vec![0.0, 0.1, 0.2], 0),
            (vec![0.1, 0.2, 0.1], 0),
            (vec![0.0, 0.0, 0.1, 0.1], 0),
            (vec![5.0, 5.2, 5.1], 1),
            (vec![5.1, 5.0, 5.0, 5.2], 1),
        ];
        for hold_out in 0..all.len() {
            let train: Vec<MultivariateSeries> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != hold_out)
                .map(|(_, (v, l))| uni(v, Some(*l)))
                .collect();
            let test = dataset(vec![uni(&all[hold_out].0, None)]);
            let pred = dtw_1nn(&dataset(train), &test).unwrap();
            assert_eq!(pred, vec![all[hold_out].1], "held-out series {hold_out}");
        }
    }

    proptest! {
        #[test]
        fn dtw_axioms(
            a in proptest::collection::vec(-10.0f64..10.0, 1..20),
            b in proptest::collection::vec(-10.0f64..10.0, 1..20),
        ) {
            let sa = uni(&a, None);
            let sb = uni(&b, None);
            let d_ab = dtw_distance(&sa, &sb).unwrap();
            let d_ba = dtw_distance(&sb, &sa).unwrap();
            prop_assert!(d_ab >= 0.0);
            prop_assert_eq!(d_ab, d_ba);
            prop_assert_eq!(dtw_distance(&sa, &sa).unwrap(), 0.0);
        }
    }
}

//! Checks against the bundled UCR/UEA datasets.

mod common;

use common::load;
use miht::{parse_ts, write_ts, MissingPolicy};
use proptest::prelude::*;

#[test]
fn japanese_vowels_train_matches_published_shape() {
    let d = load("JapaneseVowels", "TRAIN");
    assert_eq!(d.n_series(), 270);
    assert_eq!(d.dims(), 12);
    assert_eq!(d.n_classes(), 9);
    assert_eq!(d.class_counts(), vec![30; 9]);
}

#[test]
fn japanese_vowels_lengths_are_variable_and_plausible() {
    let train = load("JapaneseVowels", "TRAIN");
    let test = load("JapaneseVowels", "TEST");
    assert_eq!(test.n_series(), 370);
    let lens: Vec<usize> = train
        .series
        .iter()
        .chain(&test.series)
        .map(|s| s.len())
        .collect();
    let min = *lens.iter().min().unwrap();
    let max = *lens.iter().max().unwrap();
    let mean = lens.iter().sum::<usize>() as f64 / lens.len() as f64;
    assert_eq!(min, 7);
    assert_eq!(max, 29);
    // published mean is 15.6
    assert!((mean - 15.6).abs() < 0.2, "mean length {mean}");
}

#[test]
fn ering_test_matches_published_shape() {
    let d = load("ERing", "TEST");
    assert_eq!(d.n_series(), 270);
    assert_eq!(d.dims(), 4);
    assert_eq!(d.n_classes(), 6);
    assert!(d.series.iter().all(|s| s.len() == 65));
}

#[test]
fn ering_train_is_thirty_series() {
    let d = load("ERing", "TRAIN");
    assert_eq!(d.n_series(), 30);
    assert_eq!(d.class_counts(), vec![5; 6]);
}

#[test]
fn class_counts_sum_to_n_on_real_data() {
    for (name, split) in [
        ("JapaneseVowels", "TRAIN"),
        ("JapaneseVowels", "TEST"),
        ("ERing", "TRAIN"),
        ("ERing", "TEST"),
    ] {
        let d = load(name, split);
        assert_eq!(
            d.class_counts().iter().sum::<usize>(),
            d.n_series(),
            "{name} {split}"
        );
    }
}

#[test]
fn real_data_round_trips_through_the_writer() {
    let d = load("ERing", "TRAIN");
    let mut buf = Vec::new();
    write_ts(&d, &mut buf).unwrap();
    let d2 = parse_ts(buf.as_slice(), MissingPolicy::Reject).unwrap();
    assert_eq!(d, d2);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// parse(serialize(dataset)) == dataset for arbitrary datasets.
    #[test]
    fn writer_parser_round_trip(
        n_classes in 1usize..4,
        lens in proptest::collection::vec(1usize..12, 1..8),
        dims in 1usize..4,
        seed in 0u64..1000,
    ) {
        let class_names: Vec<String> = (0..n_classes).map(|c| format!("c{c}")).collect();
        let mut state = seed;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64 - 0.5) * 200.0
        };
        let series: Vec<miht::MultivariateSeries> = lens
            .iter()
            .enumerate()
            .map(|(i, &l)| {
                let values: Vec<f64> = (0..l * dims).map(|_| next()).collect();
                miht::MultivariateSeries::new(values, l, dims, Some(i % n_classes)).unwrap()
            })
            .collect();
        let d = miht::Dataset::new("prop", class_names, series).unwrap();
        let mut buf = Vec::new();
        write_ts(&d, &mut buf).unwrap();
        let d2 = parse_ts(buf.as_slice(), MissingPolicy::Reject).unwrap();
        prop_assert_eq!(d, d2);
    }
}

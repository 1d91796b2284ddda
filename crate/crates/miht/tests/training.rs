//! End-to-end training behavior on synthetic and real data.

mod common;

use common::{load, overlaps_concept, planted_concept};
use miht::{
    evaluate, explain, fit, load_model, predict, save_model, select_tau, build_bag,
    ResolvedParams, TrainConfig, TrainedModel,
};

#[test]
fn tau_selections_concentrate_on_the_planted_window() {
    let train = planted_concept(60, 3);
    let config = TrainConfig::default();
    let (model, params, _) = fit(&train, &config).unwrap();

    // Re-select tau for every training bag against the final tree and map it
    // to original steps; most selections should overlap the planted window.
    let mut overlapping = 0;
    for series in &train.series {
        let bag = build_bag(series, &params);
        let sel = select_tau(&model, &bag, params.k).unwrap();
        let start_step = sel.start * params.stride_steps;
        let len = params.k.min(bag.len());
        let end_step =
            (start_step + (len - 1) * params.stride_steps + params.window_steps).min(series.len());
        if overlaps_concept(start_step, end_step) {
            overlapping += 1;
        }
    }
    let rate = overlapping as f64 / train.series.len() as f64;
    assert!(rate >= 0.70, "tau overlap rate {rate:.2} below 0.70");
}

#[test]
fn explanations_locate_the_concept_on_unseen_series() {
    let train = planted_concept(60, 3);
    let test = planted_concept(60, 4);
    let (model, params, _) = fit(&train, &TrainConfig::default()).unwrap();
    let mut overlapping = 0;
    for series in &test.series {
        let e = explain(&model, &params, series).unwrap();
        assert_eq!(
            e.start_step,
            e.tau_start * params.stride_steps,
            "span start must follow the window arithmetic"
        );
        if overlaps_concept(e.start_step, e.end_step) {
            overlapping += 1;
        }
    }
    let rate = overlapping as f64 / test.series.len() as f64;
    assert!(rate >= 0.70, "explanation overlap rate {rate:.2} below 0.70");
}

#[test]
fn trained_japanese_vowels_model_survives_persistence() {
    let train = load("JapaneseVowels", "TRAIN");
    let test = load("JapaneseVowels", "TEST");
    let (tree, params, _) = fit(&train, &TrainConfig::default()).unwrap();
    let before = evaluate(&tree, &params, &test).unwrap();

    let model = TrainedModel {
        tree,
        params,
        class_names: train.class_names.clone(),
    };
    let mut buf = Vec::new();
    save_model(&model, &mut buf).unwrap();
    let loaded = load_model(buf.as_slice()).unwrap();
    let after = loaded.evaluate(&test).unwrap();

    assert_eq!(before, after, "metrics must be identical after a round trip");
}

#[test]
fn different_seeds_may_differ_but_each_is_reproducible() {
    let train = planted_concept(30, 5);
    for seed in [0, 1] {
        let config = TrainConfig {
            seed,
            ..TrainConfig::default()
        };
        let (a, pa, ra) = fit(&train, &config).unwrap();
        let (b, pb, rb) = fit(&train, &config).unwrap();
        assert_eq!(a, b, "seed {seed} must reproduce the same model");
        assert_eq!(pa, pb);
        assert_eq!(ra, rb);
    }
}

#[test]
fn reinforcement_never_feeds_more_than_k_per_bag() {
    // Indirect check through the report: with max_iterations = 1, the total
    // weight added beyond the initialization pass is at most k per bag.
    let train = planted_concept(20, 9);
    let base = TrainConfig {
        max_iterations: 0,
        ..TrainConfig::default()
    };
    let one = TrainConfig {
        max_iterations: 1,
        ..TrainConfig::default()
    };
    let (m0, params, _) = fit(&train, &base).unwrap();
    let (m1, _, _) = fit(&train, &one).unwrap();
    let w0 = m0.root().stats().weight;
    let w1 = m1.root().stats().weight;
    let max_added = (train.n_series() * params.k) as f64;
    assert!(w1 - w0 <= max_added + 1e-9, "{w0} -> {w1} exceeds k per bag");
    assert!(w1 > w0, "one iteration must feed something");
}

#[test]
fn unseen_series_of_any_length_are_handled() {
    let train = planted_concept(20, 13);
    let (model, params, _) = fit(&train, &TrainConfig::default()).unwrap();
    // shorter than the window, equal, longer
    for len in [3, params.window_steps, 250] {
        let values: Vec<f64> = (0..len * 2).map(|i| (i % 7) as f64).collect();
        let series = miht::MultivariateSeries::new(values, len, 2, None).unwrap();
        let report = predict(&model, &params, &series).unwrap();
        assert!(report.predicted_class < 2);
        let e = explain(&model, &params, &series).unwrap();
        assert!(e.end_step <= len);
        assert!(e.start_step < e.end_step);
    }
}

#[test]
fn evaluate_rejects_mismatched_class_sets() {
    let train = planted_concept(10, 21);
    let (tree, params, _) = fit(&train, &TrainConfig::default()).unwrap();
    let model = TrainedModel {
        tree,
        params: ResolvedParams { ..params },
        class_names: train.class_names.clone(),
    };
    let mut other = planted_concept(5, 22);
    other.class_names = vec!["x".into(), "y".into()];
    assert!(model.evaluate(&other).is_err());
}

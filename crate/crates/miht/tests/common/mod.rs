//! Shared fixtures for the integration and acceptance suites.
#![allow(dead_code)] // each test binary uses a different subset

use std::path::PathBuf;

use miht::{Dataset, MissingPolicy, MultivariateSeries};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Steps carrying the planted concept.
pub const CONCEPT_START: usize = 40;
pub const CONCEPT_END: usize = 60;

pub fn data_path(name: &str, split: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .join(format!("{name}_{split}.ts"))
}

pub fn load(name: &str, split: &str) -> Dataset {
    miht::load_ts_file(data_path(name, split), MissingPolicy::Reject)
        .unwrap_or_else(|e| panic!("loading {name} {split}: {e}"))
}

pub fn standard_normal(rng: &mut StdRng) -> f64 {
    // Box-Muller
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Two-class synthetic set: unit Gaussian noise everywhere, with the class
/// means pulled apart by 3 sigma (±1.5) inside steps
/// [`CONCEPT_START`, `CONCEPT_END`). Series are 100 steps by 2 dimensions.
pub fn planted_concept(n_per_class: usize, seed: u64) -> Dataset {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut series = Vec::new();
    for class in 0..2usize {
        for _ in 0..n_per_class {
            let mut values = vec![0.0; 100 * 2];
            for t in 0..100 {
                for d in 0..2 {
                    let mut v = standard_normal(&mut rng);
                    if (CONCEPT_START..CONCEPT_END).contains(&t) {
                        v += if class == 1 { 1.5 } else { -1.5 };
                    }
                    values[t * 2 + d] = v;
                }
            }
            series.push(MultivariateSeries::new(values, 100, 2, Some(class)).unwrap());
        }
    }
    Dataset::new(
        "planted-concept",
        vec!["low".into(), "high".into()],
        series,
    )
    .unwrap()
}

/// True when an explanation span `[start, end)` touches the widened concept
/// window [35, 65).
pub fn overlaps_concept(start_step: usize, end_step: usize) -> bool {
    start_step < CONCEPT_END + 5 && end_step > CONCEPT_START - 5
}

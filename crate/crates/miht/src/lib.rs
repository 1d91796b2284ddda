//! MIHT: multi-instance learning over sliding-window bags combined with an
//! incremental Hoeffding tree, for classifying multivariate, variable-length
//! time series with interpretable outputs.
//!
//! The pipeline: [`ts_format`] loads UCR/UEA `.ts` data into a [`Dataset`];
//! [`bagging`] turns each series into an ordered bag of fixed-width windows;
//! [`trainer::fit`] streams every window into a [`tree::HoeffdingTreeModel`]
//! and then reinforces the k most class-likely consecutive windows per bag;
//! [`predictor`] classifies new series by majority vote over their windows
//! and maps the most relevant window run back to original time steps.
//! [`baselines`] provides 1NN reference classifiers and [`metrics`] the
//! evaluation suite.

pub mod bagging;
pub mod baselines;
pub mod dataset;
mod error;
pub mod metrics;
pub mod model_store;
pub mod predictor;
pub mod trainer;
pub mod tree;
pub mod ts_format;

pub use bagging::{build_bag, resolve_params, Bag, Instance, ResolvedParams};
pub use dataset::{Dataset, MultivariateSeries};
pub use error::{MihtError, Result};
pub use metrics::{evaluate, EvalResult, ResultRow};
pub use model_store::{load_model, load_model_file, save_model, save_model_file, TrainedModel};
pub use predictor::{explain, predict, Explanation, PredictionReport};
pub use trainer::{best_window, fit, select_tau, FitReport, TauSelection, TrainConfig};
pub use tree::{HoeffdingTreeModel, NbMode};
pub use ts_format::{load_ts_file, parse_ts, write_ts, MissingPolicy};

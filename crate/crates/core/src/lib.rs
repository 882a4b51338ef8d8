//! Batch reinforcement learning for treatment-regimen recommendation.
//!
//! The crate turns longitudinal encounter records (real or synthetic) into
//! one-step transition tuples, trains a feed-forward Q-network on them with
//! batch DQN, and scores the learned policy against the logged prescribing
//! policy by counterfactual kNN imputation in PCA space.
//!
//! Pipeline stages map onto modules:
//!
//! * [`cohort`] — patient data model, T2DM phenotyping, file I/O, and a
//!   seeded synthetic cohort generator with planted treatment responses.
//! * [`preprocess`] — missing-value imputation, state featurization, action
//!   vocabulary, and transition-tuple assembly.
//! * [`risk`] — sex-specific 10-year general cardiovascular risk.
//! * [`rewards`] — per-transition reward functions for each optimization
//!   target.
//! * [`qnet`] — dense Q-network: forward, TD loss, analytic gradients,
//!   dropout, Adam, and a versioned binary model format.
//! * [`trainer`] — the batch training loop with target-network sync, early
//!   stopping, and the two-stage train/retrain scheme.
//! * [`evaluator`] — PCA embedding, kNN counterfactual imputation,
//!   concordance/outcome reports, and permutation feature importance.
//!
//! Data-parallel inner loops go through [`exec`], which keeps reduction
//! order fixed so seeded runs are bit-reproducible at any thread count.

pub mod codes;
pub mod cohort;
pub mod error;
pub mod evaluator;
pub mod exec;
pub mod preprocess;
pub mod qnet;
pub mod rewards;
pub mod risk;
pub mod seed;
pub mod trainer;

pub use error::{CoreError, Result};

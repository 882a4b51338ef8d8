//! Raw cohorts to training-ready transition tuples: missing-value
//! imputation, state featurization, action-vocabulary construction, and
//! feature standardization.

mod edwa;
mod features;
mod transitions;
mod vocab;

pub use edwa::{edwa_impute, EDWA_HALF_LIFE_DAYS, EDWA_WINDOW_DAYS};
pub use features::{
    bp_treated, featurize, fit_feature_stats, imputed_panel, FeatureStats, StateVector,
    FEATURE_BLOCKS, HISTORY_WINDOW_DAYS, IDX_AGE, IDX_CURRENT, IDX_DAYS_FIRST, IDX_DAYS_PREV,
    IDX_RACE, IDX_RX_HISTORY, IDX_SEX, IDX_SMOKER, IDX_TRAILING, STATE_DIM,
};
pub use transitions::{
    build_transitions, read_dataset_meta, read_transitions, write_dataset_meta, write_transitions,
    DatasetMeta, TransitionTuple, DATASET_FORMAT_VERSION,
};
pub use vocab::{build_action_vocab, ActionVocabulary, VocabEntry};

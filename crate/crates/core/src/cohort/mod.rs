//! Longitudinal patient data model, T2DM phenotyping, dataset file I/O, and
//! a synthetic cohort generator with planted treatment responses.

mod io;
mod phenotype;
mod synth;
mod types;

pub use io::{read_cohort, read_ground_truth, write_cohort, write_ground_truth};
pub use phenotype::{phenotype_t2dm, qualifies_t2dm};
pub use synth::{
    generate_synthetic_cohort, EffectTable, GroundTruth, MissingnessRates, OptimalRegimens,
    PatientGroundTruth, SynthConfig,
};
pub use types::{Biomarker, BiomarkerPanel, Demographics, Encounter, PatientRecord, Race, Sex};

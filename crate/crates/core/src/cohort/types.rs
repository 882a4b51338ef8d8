//! Core record types: demographics, biomarker panels, encounters, patients.

use serde::{Deserialize, Serialize};

use crate::codes::Regimen;
use crate::error::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sex {
    Male,
    Female,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Race {
    Black,
    NativeAmerican,
    Asian,
    White,
    Other,
}

impl Race {
    pub const ALL: [Race; 5] = [
        Race::Black,
        Race::NativeAmerican,
        Race::Asian,
        Race::White,
        Race::Other,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Race::Black => "black",
            Race::NativeAmerican => "native_american",
            Race::Asian => "asian",
            Race::White => "white",
            Race::Other => "other",
        }
    }
}

impl Sex {
    pub fn name(self) -> &'static str {
        match self {
            Sex::Male => "male",
            Sex::Female => "female",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Demographics {
    /// Age in years at the patient's first encounter.
    #[serde(rename = "age")]
    pub age_at_first_encounter: f64,
    pub sex: Sex,
    pub race: Race,
    pub smoker: bool,
}

/// The ten tracked biomarkers, in panel (and state-vector block) order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Biomarker {
    Sbp,
    Dbp,
    Bmi,
    Weight,
    A1c,
    Tc,
    Ldl,
    Hdl,
    Triglycerides,
    Creatinine,
}

impl Biomarker {
    pub const COUNT: usize = 10;
    pub const ALL: [Biomarker; 10] = [
        Biomarker::Sbp,
        Biomarker::Dbp,
        Biomarker::Bmi,
        Biomarker::Weight,
        Biomarker::A1c,
        Biomarker::Tc,
        Biomarker::Ldl,
        Biomarker::Hdl,
        Biomarker::Triglycerides,
        Biomarker::Creatinine,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Biomarker::Sbp => "sbp",
            Biomarker::Dbp => "dbp",
            Biomarker::Bmi => "bmi",
            Biomarker::Weight => "weight",
            Biomarker::A1c => "a1c",
            Biomarker::Tc => "tc",
            Biomarker::Ldl => "ldl",
            Biomarker::Hdl => "hdl",
            Biomarker::Triglycerides => "triglycerides",
            Biomarker::Creatinine => "creatinine",
        }
    }
}

/// Biomarker measurements for one visit; absent values are explicit nulls
/// in the on-disk form.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BiomarkerPanel {
    pub sbp: Option<f64>,
    pub dbp: Option<f64>,
    pub bmi: Option<f64>,
    pub weight: Option<f64>,
    pub a1c: Option<f64>,
    pub tc: Option<f64>,
    pub ldl: Option<f64>,
    pub hdl: Option<f64>,
    pub triglycerides: Option<f64>,
    pub creatinine: Option<f64>,
}

impl BiomarkerPanel {
    pub fn get(&self, b: Biomarker) -> Option<f64> {
        match b {
            Biomarker::Sbp => self.sbp,
            Biomarker::Dbp => self.dbp,
            Biomarker::Bmi => self.bmi,
            Biomarker::Weight => self.weight,
            Biomarker::A1c => self.a1c,
            Biomarker::Tc => self.tc,
            Biomarker::Ldl => self.ldl,
            Biomarker::Hdl => self.hdl,
            Biomarker::Triglycerides => self.triglycerides,
            Biomarker::Creatinine => self.creatinine,
        }
    }

    pub fn set(&mut self, b: Biomarker, value: Option<f64>) {
        let slot = match b {
            Biomarker::Sbp => &mut self.sbp,
            Biomarker::Dbp => &mut self.dbp,
            Biomarker::Bmi => &mut self.bmi,
            Biomarker::Weight => &mut self.weight,
            Biomarker::A1c => &mut self.a1c,
            Biomarker::Ldl => &mut self.ldl,
            Biomarker::Tc => &mut self.tc,
            Biomarker::Hdl => &mut self.hdl,
            Biomarker::Triglycerides => &mut self.triglycerides,
            Biomarker::Creatinine => &mut self.creatinine,
        };
        *slot = value;
    }

    fn validate(&self) -> std::result::Result<(), String> {
        for b in Biomarker::ALL {
            if let Some(v) = self.get(b) {
                if !v.is_finite() || v <= 0.0 {
                    return Err(format!("{} must be finite and positive, got {v}", b.name()));
                }
            }
        }
        if let (Some(s), Some(d)) = (self.sbp, self.dbp) {
            if s <= d {
                return Err(format!("sbp ({s}) must exceed dbp ({d})"));
            }
        }
        Ok(())
    }
}

/// One timestamped ambulatory visit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Encounter {
    /// Days since the patient's first encounter.
    pub day: u32,
    pub panel: BiomarkerPanel,
    pub prescriptions: Regimen,
    #[serde(rename = "icd10_t2dm")]
    pub icd10_t2dm_flag: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatientRecord {
    pub patient_id: String,
    pub demographics: Demographics,
    pub encounters: Vec<Encounter>,
}

impl PatientRecord {
    /// Checks all record invariants, naming the patient on failure.
    pub fn validate(&self) -> Result<()> {
        let fail = |message: String| {
            Err(CoreError::Validation {
                patient_id: self.patient_id.clone(),
                message,
            })
        };
        let age = self.demographics.age_at_first_encounter;
        if !(18.0..=110.0).contains(&age) {
            return fail(format!("age {age} outside [18, 110]"));
        }
        if self.encounters.is_empty() {
            return fail("record has no encounters".to_string());
        }
        let mut prev_day: Option<u32> = None;
        for (i, enc) in self.encounters.iter().enumerate() {
            if let Some(p) = prev_day {
                if enc.day <= p {
                    return fail(format!(
                        "encounter {i} day {} not after previous day {p}",
                        enc.day
                    ));
                }
            }
            prev_day = Some(enc.day);
            if let Err(msg) = enc.panel.validate() {
                return fail(format!("encounter {i}: {msg}"));
            }
        }
        Ok(())
    }
}

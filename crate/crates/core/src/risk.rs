//! Sex-specific 10-year general cardiovascular disease risk (Framingham
//! general CVD profile, lipid-based).
//!
//! Risk is `100 * (1 - S0 ^ exp(L - Lbar))` where `L` is a log-linear
//! predictor over age, total cholesterol, HDL, SBP (with separate slopes for
//! treated and untreated blood pressure), smoking and diabetes, `Lbar` the
//! published mean predictor, and `S0` the baseline 10-year survival. The
//! default coefficients are transcribed from D'Agostino et al., Circulation
//! 2008 (general CVD profile), and can be overridden from a JSON file for
//! auditability.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cohort::Sex;
use crate::error::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrsInput {
    pub age: f64,
    pub sex: Sex,
    pub total_cholesterol: f64,
    pub hdl: f64,
    pub sbp: f64,
    pub bp_treated: bool,
    pub smoker: bool,
    pub diabetic: bool,
}

/// Regression coefficients for one sex.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SexCoefficients {
    pub ln_age: f64,
    pub ln_total_cholesterol: f64,
    pub ln_hdl: f64,
    pub ln_sbp_untreated: f64,
    pub ln_sbp_treated: f64,
    pub smoker: f64,
    pub diabetes: f64,
    /// Baseline 10-year survival S0.
    pub baseline_survival: f64,
    /// Mean linear predictor in the derivation cohort.
    pub mean_linear_predictor: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FrsCoefficients {
    pub male: SexCoefficients,
    pub female: SexCoefficients,
}

impl Default for FrsCoefficients {
    fn default() -> Self {
        FrsCoefficients {
            male: SexCoefficients {
                ln_age: 3.06117,
                ln_total_cholesterol: 1.12370,
                ln_hdl: -0.93263,
                ln_sbp_untreated: 1.93303,
                ln_sbp_treated: 1.99881,
                smoker: 0.65451,
                diabetes: 0.57367,
                baseline_survival: 0.88936,
                mean_linear_predictor: 23.9802,
            },
            female: SexCoefficients {
                ln_age: 2.32888,
                ln_total_cholesterol: 1.20904,
                ln_hdl: -0.70833,
                ln_sbp_untreated: 2.76157,
                ln_sbp_treated: 2.82263,
                smoker: 0.52873,
                diabetes: 0.69154,
                baseline_survival: 0.95012,
                mean_linear_predictor: 26.1931,
            },
        }
    }
}

impl FrsCoefficients {
    /// Loads an override coefficient set (same field names as the struct).
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| CoreError::Config(format!("bad coefficient file {}: {e}", path.display())))
    }

    pub fn for_sex(&self, sex: Sex) -> &SexCoefficients {
        match sex {
            Sex::Male => &self.male,
            Sex::Female => &self.female,
        }
    }
}

fn check_positive(name: &str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(CoreError::Domain(format!(
            "{name} must be finite and strictly positive, got {value}"
        )))
    }
}

/// Linear predictor L for one input.
fn linear_predictor(input: &FrsInput, coef: &SexCoefficients) -> Result<f64> {
    let age = check_positive("age", input.age)?;
    let tc = check_positive("total_cholesterol", input.total_cholesterol)?;
    let hdl = check_positive("hdl", input.hdl)?;
    let sbp = check_positive("sbp", input.sbp)?;
    let sbp_coef = if input.bp_treated {
        coef.ln_sbp_treated
    } else {
        coef.ln_sbp_untreated
    };
    Ok(coef.ln_age * age.ln()
        + coef.ln_total_cholesterol * tc.ln()
        + coef.ln_hdl * hdl.ln()
        + sbp_coef * sbp.ln()
        + if input.smoker { coef.smoker } else { 0.0 }
        + if input.diabetic { coef.diabetes } else { 0.0 })
}

/// 10-year general CVD risk in percent.
pub fn frs_risk(input: &FrsInput, coef: &FrsCoefficients) -> Result<f64> {
    let c = coef.for_sex(input.sex);
    let l = linear_predictor(input, c)?;
    let risk = 100.0 * (1.0 - c.baseline_survival.powf((l - c.mean_linear_predictor).exp()));
    Ok(risk)
}

/// Risk change in percentage points; positive means risk was reduced.
pub fn frs_delta(before: &FrsInput, after: &FrsInput, coef: &FrsCoefficients) -> Result<f64> {
    Ok(frs_risk(before, coef)? - frs_risk(after, coef)?)
}

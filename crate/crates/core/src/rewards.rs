//! Per-transition reward functions for the four optimization targets.
//!
//! Glycemia and blood pressure score the biomarker change between two
//! consecutive encounters, weighted by how far above the diagnosis
//! threshold the patient started, and are zero unless both sides sit at or
//! above the threshold. CVD scores the drop in 10-year Framingham risk.
//! The multimorbidity reward averages the three component rewards after
//! standardizing each against statistics fitted once on the training
//! transition set. All rewards are improvement-positive.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComponentStats {
    pub mean: f64,
    pub sd: f64,
}

/// Standardization statistics for the multimorbidity combination, fitted on
/// training transitions only and frozen thereafter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MultimorbidityStats {
    pub glycemia: ComponentStats,
    pub bp: ComponentStats,
    pub cvd: ComponentStats,
}

impl MultimorbidityStats {
    /// Fits mean/sd per component; zero-variance components get sd = 1.
    pub fn fit(rewards: &[(f64, f64, f64)]) -> Result<Self> {
        if rewards.is_empty() {
            return Err(CoreError::EmptyDataset(
                "cannot fit multimorbidity stats on zero transitions".to_string(),
            ));
        }
        let component = |extract: fn(&(f64, f64, f64)) -> f64| {
            let n = rewards.len() as f64;
            let mean = rewards.iter().map(extract).sum::<f64>() / n;
            let var = rewards
                .iter()
                .map(|r| {
                    let d = extract(r) - mean;
                    d * d
                })
                .sum::<f64>()
                / n;
            let sd = var.sqrt();
            ComponentStats {
                mean,
                sd: if sd > 1e-12 { sd } else { 1.0 },
            }
        };
        Ok(MultimorbidityStats {
            glycemia: component(|r| r.0),
            bp: component(|r| r.1),
            cvd: component(|r| r.2),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RewardParams {
    /// Diagnosis threshold for T2DM, percent A1c.
    pub a1c_threshold: f64,
    /// Cohort standard deviation of A1c.
    pub a1c_sigma: f64,
    /// Diagnosis threshold for hypertension, mmHg.
    pub sbp_threshold: f64,
    /// Cohort standard deviation of SBP.
    pub sbp_sigma: f64,
    /// Discount factor used at the policy level.
    pub gamma: f64,
    pub multimorbidity_stats: Option<MultimorbidityStats>,
}

impl Default for RewardParams {
    fn default() -> Self {
        RewardParams {
            a1c_threshold: 5.6,
            a1c_sigma: 1.58,
            sbp_threshold: 120.0,
            sbp_sigma: 17.7,
            gamma: 0.9,
            multimorbidity_stats: None,
        }
    }
}

impl RewardParams {
    pub fn validate(&self) -> Result<()> {
        if self.a1c_sigma <= 0.0 || self.sbp_sigma <= 0.0 {
            return Err(CoreError::Config("reward sigmas must be positive".to_string()));
        }
        if !(self.gamma > 0.0 && self.gamma < 1.0) {
            return Err(CoreError::Config(format!(
                "gamma must be in (0, 1), got {}",
                self.gamma
            )));
        }
        Ok(())
    }
}

fn severity_weighted(value_t: f64, value_next: f64, threshold: f64, sigma: f64) -> f64 {
    if value_t >= threshold && value_next >= threshold {
        (value_t - value_next) * (value_t - threshold) / sigma
    } else {
        0.0
    }
}

/// Glycemic reward over one encounter pair; positive when A1c fell.
pub fn glycemia_reward(a1c_t: f64, a1c_next: f64, params: &RewardParams) -> f64 {
    severity_weighted(a1c_t, a1c_next, params.a1c_threshold, params.a1c_sigma)
}

/// Blood-pressure reward over one encounter pair; positive when SBP fell.
pub fn bp_reward(sbp_t: f64, sbp_next: f64, params: &RewardParams) -> f64 {
    severity_weighted(sbp_t, sbp_next, params.sbp_threshold, params.sbp_sigma)
}

/// CVD reward: percentage-point drop in Framingham risk.
pub fn cvd_reward(frs_t: f64, frs_next: f64) -> f64 {
    frs_t - frs_next
}

/// Average of the three standardized component rewards. Requires fitted
/// stats.
pub fn multimorbidity_reward(
    r_glycemia: f64,
    r_bp: f64,
    r_cvd: f64,
    params: &RewardParams,
) -> Result<f64> {
    let stats = params.multimorbidity_stats.as_ref().ok_or_else(|| {
        CoreError::State("multimorbidity stats not fitted; run the preparation pass first".to_string())
    })?;
    let z = |r: f64, c: &ComponentStats| (r - c.mean) / c.sd;
    Ok((z(r_glycemia, &stats.glycemia) + z(r_bp, &stats.bp) + z(r_cvd, &stats.cvd)) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params() -> RewardParams {
        RewardParams::default()
    }

    #[test]
    fn glycemia_examples() {
        let p = params();
        assert_relative_eq!(
            glycemia_reward(8.0, 7.0, &p),
            1.0 * (8.0 - 5.6) / 1.58,
            max_relative = 1e-12
        );
        assert_eq!(glycemia_reward(5.5, 5.4, &p), 0.0);
        assert_eq!(glycemia_reward(9.0, 9.0, &p), 0.0);
        // Crossing below the threshold zeroes the reward.
        assert_eq!(glycemia_reward(6.0, 5.5, &p), 0.0);
    }

    #[test]
    fn bp_examples() {
        let p = params();
        assert_relative_eq!(
            bp_reward(150.0, 140.0, &p),
            10.0 * 30.0 / 17.7,
            max_relative = 1e-12
        );
        assert_eq!(bp_reward(118.0, 125.0, &p), 0.0);
        assert_eq!(bp_reward(130.0, 130.0, &p), 0.0);
    }

    #[test]
    fn cvd_examples() {
        assert!((cvd_reward(17.18, 13.65) - 3.53).abs() < 1e-9);
        assert_eq!(cvd_reward(12.0, 12.0), 0.0);
        assert_eq!(cvd_reward(10.0, 12.0), -2.0);
    }

    #[test]
    fn worsening_is_negative() {
        let p = params();
        assert!(glycemia_reward(8.0, 9.0, &p) < 0.0);
        assert!(bp_reward(140.0, 150.0, &p) < 0.0);
    }

    #[test]
    fn magnitude_scales_linearly_with_change() {
        let p = params();
        let one = glycemia_reward(9.0, 8.5, &p);
        let two = glycemia_reward(9.0, 8.0, &p);
        assert_relative_eq!(two, 2.0 * one, max_relative = 1e-12);
    }

    #[test]
    fn multimorbidity_requires_fitted_stats() {
        let p = params();
        assert!(matches!(
            multimorbidity_reward(1.0, 1.0, 1.0, &p),
            Err(CoreError::State(_))
        ));
    }

    #[test]
    fn multimorbidity_hand_example() {
        let mut p = params();
        p.multimorbidity_stats = Some(MultimorbidityStats {
            glycemia: ComponentStats { mean: 0.0, sd: 1.0 },
            bp: ComponentStats { mean: 0.0, sd: 2.0 },
            cvd: ComponentStats { mean: 0.0, sd: 3.0 },
        });
        let r = multimorbidity_reward(1.0, 2.0, 3.0, &p).unwrap();
        assert_relative_eq!(r, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn multimorbidity_zero_at_training_means() {
        let mut p = params();
        p.multimorbidity_stats = Some(MultimorbidityStats {
            glycemia: ComponentStats { mean: 0.4, sd: 1.0 },
            bp: ComponentStats { mean: -0.2, sd: 2.0 },
            cvd: ComponentStats { mean: 1.1, sd: 3.0 },
        });
        assert_eq!(multimorbidity_reward(0.4, -0.2, 1.1, &p).unwrap(), 0.0);
    }

    #[test]
    fn multimorbidity_shift_invariance() {
        // Adding a constant to all rewards and their fitted means leaves
        // the standardized average unchanged.
        let stats = MultimorbidityStats::fit(&[(1.0, 2.0, 0.5), (0.0, 1.0, -0.5), (2.0, 0.0, 1.5)])
            .unwrap();
        let mut p = params();
        p.multimorbidity_stats = Some(stats);
        let base = multimorbidity_reward(1.2, 0.3, 0.9, &p).unwrap();

        let c = 5.0;
        let mut shifted = stats;
        shifted.glycemia.mean += c;
        shifted.bp.mean += c;
        shifted.cvd.mean += c;
        let mut p2 = params();
        p2.multimorbidity_stats = Some(shifted);
        let moved = multimorbidity_reward(1.2 + c, 0.3 + c, 0.9 + c, &p2).unwrap();
        assert_relative_eq!(base, moved, max_relative = 1e-12);
    }

    #[test]
    fn fit_guards_zero_variance() {
        let stats = MultimorbidityStats::fit(&[(1.0, 0.0, 2.0), (1.0, 0.0, 2.0)]).unwrap();
        assert_eq!(stats.glycemia.sd, 1.0);
        assert_eq!(stats.bp.sd, 1.0);
        assert_eq!(stats.cvd.sd, 1.0);
    }

    #[test]
    fn sum_and_average_share_argmax() {
        // A fixed positive factor cannot change which candidate wins.
        let stats = MultimorbidityStats::fit(&[(0.0, 0.0, 0.0), (1.0, 2.0, 3.0)]).unwrap();
        let mut p = params();
        p.multimorbidity_stats = Some(stats);
        let candidates = [(0.5, 0.1, 0.2), (2.0, 1.0, 0.0), (0.1, 3.0, 1.0)];
        let avg: Vec<f64> = candidates
            .iter()
            .map(|c| multimorbidity_reward(c.0, c.1, c.2, &p).unwrap())
            .collect();
        let sums: Vec<f64> = avg.iter().map(|v| v * 3.0).collect();
        let argmax = |v: &[f64]| {
            v.iter()
                .enumerate()
                .max_by(|a, b| a.1.total_cmp(b.1))
                .unwrap()
                .0
        };
        assert_eq!(argmax(&avg), argmax(&sums));
    }
}

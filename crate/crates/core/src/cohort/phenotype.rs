//! Rule-based T2DM phenotyping.

use crate::codes::{SubclassCode, TherapeuticClass};
use crate::cohort::PatientRecord;

/// A1c at or above this (in percent) counts as an abnormal reading.
const ABNORMAL_A1C: f64 = 6.5;

/// Whether one record satisfies any of the three phenotype criteria:
///
/// 1. at least two encounters carrying a T2DM diagnosis flag;
/// 2. at least two encounters with an abnormal A1c (>= 6.5%) and at least
///    one flagged encounter;
/// 3. at least one encounter prescribing an antihyperglycemic subclass
///    other than BIG (the metformin class).
pub fn qualifies_t2dm(record: &PatientRecord) -> bool {
    let mut flagged = 0usize;
    let mut abnormal_a1c = 0usize;
    let mut non_big_rx = false;
    for enc in &record.encounters {
        if enc.icd10_t2dm_flag {
            flagged += 1;
        }
        if enc.panel.a1c.is_some_and(|v| v >= ABNORMAL_A1C) {
            abnormal_a1c += 1;
        }
        non_big_rx |= enc
            .prescriptions
            .codes()
            .iter()
            .any(|c| c.therapeutic_class() == TherapeuticClass::Antihyperglycemic && *c != SubclassCode::Big);
    }
    flagged >= 2 || (abnormal_a1c >= 2 && flagged >= 1) || non_big_rx
}

/// Filters a cohort down to records satisfying the T2DM phenotype.
pub fn phenotype_t2dm(cohort: Vec<PatientRecord>) -> Vec<PatientRecord> {
    cohort.into_iter().filter(qualifies_t2dm).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::Regimen;
    use crate::cohort::{BiomarkerPanel, Demographics, Encounter, Race, Sex};

    fn patient(flags: &[bool], a1cs: &[Option<f64>], rx: &[Regimen]) -> PatientRecord {
        let n = flags.len();
        assert_eq!(a1cs.len(), n);
        assert_eq!(rx.len(), n);
        PatientRecord {
            patient_id: "t".to_string(),
            demographics: Demographics {
                age_at_first_encounter: 50.0,
                sex: Sex::Female,
                race: Race::Asian,
                smoker: false,
            },
            encounters: (0..n)
                .map(|i| Encounter {
                    day: (i * 30) as u32,
                    panel: BiomarkerPanel {
                        a1c: a1cs[i],
                        ..Default::default()
                    },
                    prescriptions: rx[i],
                    icd10_t2dm_flag: flags[i],
                })
                .collect(),
        }
    }

    #[test]
    fn two_flagged_encounters_qualify() {
        let p = patient(
            &[true, true],
            &[None, None],
            &[Regimen::EMPTY, Regimen::EMPTY],
        );
        assert!(qualifies_t2dm(&p));
    }

    #[test]
    fn a1c_criterion_needs_two_abnormal_readings_and_a_flag() {
        let included = patient(
            &[true, false],
            &[Some(6.6), Some(6.7)],
            &[Regimen::EMPTY, Regimen::EMPTY],
        );
        assert!(qualifies_t2dm(&included));
        let excluded = patient(
            &[true, false],
            &[Some(6.4), Some(6.7)],
            &[Regimen::EMPTY, Regimen::EMPTY],
        );
        assert!(!qualifies_t2dm(&excluded));
    }

    #[test]
    fn non_big_antihyperglycemic_rx_qualifies_but_big_alone_does_not() {
        let big_only = patient(
            &[false],
            &[None],
            &[Regimen::from_codes([SubclassCode::Big])],
        );
        assert!(!qualifies_t2dm(&big_only));
        let glp1 = patient(
            &[false],
            &[None],
            &[Regimen::from_codes([SubclassCode::Glp1])],
        );
        assert!(qualifies_t2dm(&glp1));
        // Antihypertensive prescriptions are irrelevant to criterion 3.
        let ace = patient(&[false], &[None], &[Regimen::from_codes([SubclassCode::Ace])]);
        assert!(!qualifies_t2dm(&ace));
    }

    #[test]
    fn idempotent_and_subset() {
        let cohort = vec![
            patient(&[true, true], &[None, None], &[Regimen::EMPTY, Regimen::EMPTY]),
            patient(&[false], &[None], &[Regimen::EMPTY]),
        ];
        let once = phenotype_t2dm(cohort.clone());
        assert_eq!(once.len(), 1);
        let twice = phenotype_t2dm(once.clone());
        assert_eq!(twice, once);
        assert!(once.iter().all(|p| cohort.contains(p)));
    }
}

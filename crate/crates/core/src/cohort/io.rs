//! Line-delimited cohort and ground-truth file I/O.
//!
//! One UTF-8 JSON object per line. Reads validate every record invariant;
//! parse failures name the offending line, invariant failures name the
//! patient.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use crate::cohort::{GroundTruth, PatientGroundTruth, PatientRecord};
use crate::error::{CoreError, Result};

pub(crate) fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    let file = File::open(path)?;
    let reader = BufReader::new(file);
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let value: T = serde_json::from_str(&line).map_err(|e| CoreError::Parse {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(value);
    }
    Ok(out)
}

pub(crate) fn write_jsonl<T: Serialize>(items: &[T], path: &Path) -> Result<()> {
    let file = File::create(path)?;
    let mut writer = BufWriter::new(file);
    for item in items {
        let line = serde_json::to_string(item)
            .map_err(|e| CoreError::State(format!("serialization failed: {e}")))?;
        writer.write_all(line.as_bytes())?;
        writer.write_all(b"\n")?;
    }
    writer.flush()?;
    Ok(())
}

/// Reads and validates a cohort file. An empty file is an empty cohort.
pub fn read_cohort(path: &Path) -> Result<Vec<PatientRecord>> {
    let cohort: Vec<PatientRecord> = read_jsonl(path)?;
    for record in &cohort {
        record.validate()?;
    }
    Ok(cohort)
}

pub fn write_cohort(cohort: &[PatientRecord], path: &Path) -> Result<()> {
    write_jsonl(cohort, path)
}

pub fn read_ground_truth(path: &Path) -> Result<GroundTruth> {
    let patients: Vec<PatientGroundTruth> = read_jsonl(path)?;
    Ok(GroundTruth { patients })
}

pub fn write_ground_truth(truth: &GroundTruth, path: &Path) -> Result<()> {
    write_jsonl(&truth.patients, path)
}

//! Pharmacologic subclass codes, treatment regimens, and optimization
//! targets.
//!
//! The 24-code universe is closed: nine antihyperglycemic, ten
//! antihypertensive, and five antihyperlipidemic subclasses. A regimen is a
//! set of codes prescribed at one encounter and doubles as the RL action.

use std::cmp::Ordering;
use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::CoreError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TherapeuticClass {
    Antihyperglycemic,
    Antihypertensive,
    Antihyperlipidemic,
}

/// One of the 24 pharmacologic subclass codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SubclassCode {
    // Antihyperglycemic
    #[serde(rename = "PPARg")]
    PparG,
    #[serde(rename = "INSR")]
    Insr,
    #[serde(rename = "GLP1")]
    Glp1,
    #[serde(rename = "DPP4-BIG")]
    Dpp4Big,
    #[serde(rename = "DPP4")]
    Dpp4,
    #[serde(rename = "BIG")]
    Big,
    #[serde(rename = "INSR-BIG")]
    InsrBig,
    #[serde(rename = "SGLT2")]
    Sglt2,
    #[serde(rename = "INSO")]
    Inso,
    // Antihypertensive
    #[serde(rename = "ARA")]
    Ara,
    #[serde(rename = "PSD")]
    Psd,
    #[serde(rename = "ABAB")]
    Abab,
    #[serde(rename = "ACE-TD")]
    AceTd,
    #[serde(rename = "ARA-TD")]
    AraTd,
    #[serde(rename = "ACE")]
    Ace,
    #[serde(rename = "TD")]
    Td,
    #[serde(rename = "BAB")]
    Bab,
    #[serde(rename = "CCB")]
    Ccb,
    #[serde(rename = "ARA-CCB")]
    AraCcb,
    // Antihyperlipidemic
    #[serde(rename = "BSS")]
    Bss,
    #[serde(rename = "HMG")]
    Hmg,
    #[serde(rename = "HMG-CA")]
    HmgCa,
    #[serde(rename = "PCSK9")]
    Pcsk9,
    #[serde(rename = "LIP")]
    Lip,
}

use SubclassCode::*;

impl SubclassCode {
    pub const COUNT: usize = 24;

    /// All codes in fixed index order: glycemic 0..9, hypertensive 9..19,
    /// lipid 19..24.
    pub const ALL: [SubclassCode; 24] = [
        PparG, Insr, Glp1, Dpp4Big, Dpp4, Big, InsrBig, Sglt2, Inso, Ara, Psd, Abab, AceTd,
        AraTd, Ace, Td, Bab, Ccb, AraCcb, Bss, Hmg, HmgCa, Pcsk9, Lip,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(index: usize) -> Option<Self> {
        Self::ALL.get(index).copied()
    }

    pub fn therapeutic_class(self) -> TherapeuticClass {
        match self.index() {
            0..=8 => TherapeuticClass::Antihyperglycemic,
            9..=18 => TherapeuticClass::Antihypertensive,
            _ => TherapeuticClass::Antihyperlipidemic,
        }
    }

    pub fn code_str(self) -> &'static str {
        match self {
            PparG => "PPARg",
            Insr => "INSR",
            Glp1 => "GLP1",
            Dpp4Big => "DPP4-BIG",
            Dpp4 => "DPP4",
            Big => "BIG",
            InsrBig => "INSR-BIG",
            Sglt2 => "SGLT2",
            Inso => "INSO",
            Ara => "ARA",
            Psd => "PSD",
            Abab => "ABAB",
            AceTd => "ACE-TD",
            AraTd => "ARA-TD",
            Ace => "ACE",
            Td => "TD",
            Bab => "BAB",
            Ccb => "CCB",
            AraCcb => "ARA-CCB",
            Bss => "BSS",
            Hmg => "HMG",
            HmgCa => "HMG-CA",
            Pcsk9 => "PCSK9",
            Lip => "LIP",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.iter().copied().find(|c| c.code_str() == s)
    }
}

impl fmt::Display for SubclassCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code_str())
    }
}

/// Codes belonging to one therapeutic class, in index order.
pub fn class_codes(class: TherapeuticClass) -> &'static [SubclassCode] {
    match class {
        TherapeuticClass::Antihyperglycemic => &SubclassCode::ALL[0..9],
        TherapeuticClass::Antihypertensive => &SubclassCode::ALL[9..19],
        TherapeuticClass::Antihyperlipidemic => &SubclassCode::ALL[19..24],
    }
}

/// A set of subclass codes prescribed together. Backed by a 24-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Regimen(u32);

impl Regimen {
    pub const EMPTY: Regimen = Regimen(0);

    pub fn from_codes<I: IntoIterator<Item = SubclassCode>>(codes: I) -> Self {
        let mut r = Regimen::EMPTY;
        for c in codes {
            r.insert(c);
        }
        r
    }

    pub fn insert(&mut self, code: SubclassCode) {
        self.0 |= 1 << code.index();
    }

    pub fn contains(self, code: SubclassCode) -> bool {
        self.0 & (1 << code.index()) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Number of codes in the regimen.
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: Regimen) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Regimen) -> Regimen {
        Regimen(self.0 | other.0)
    }

    /// Codes in ascending index order.
    pub fn codes(self) -> Vec<SubclassCode> {
        SubclassCode::ALL
            .iter()
            .copied()
            .filter(|c| self.contains(*c))
            .collect()
    }

    /// Keeps only codes whose therapeutic class the target acts on.
    pub fn restricted_to(self, target: Target) -> Regimen {
        Regimen(self.0 & target.class_mask())
    }

    /// Bits of any code in the given class.
    pub fn intersects_class(self, class: TherapeuticClass) -> bool {
        class_codes(class).iter().any(|c| self.contains(*c))
    }

    /// Human-readable label, e.g. "BIG+ACE" or "none".
    pub fn label(self) -> String {
        if self.is_empty() {
            "none".to_string()
        } else {
            self.codes()
                .iter()
                .map(|c| c.code_str())
                .collect::<Vec<_>>()
                .join("+")
        }
    }
}

impl fmt::Debug for Regimen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Regimen({})", self.label())
    }
}

impl fmt::Display for Regimen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

// Lexicographic order over the ascending code-index sequence, so {PPARg} <
// {PPARg, INSR} < {INSR}. Gives vocabularies a stable tie-break.
impl Ord for Regimen {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                (false, false) => {}
            }
            let (ia, ib) = (a.trailing_zeros(), b.trailing_zeros());
            match ia.cmp(&ib) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
    }
}

impl PartialOrd for Regimen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Regimen {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let codes = self.codes();
        let mut seq = serializer.serialize_seq(Some(codes.len()))?;
        for c in codes {
            seq.serialize_element(&c)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Regimen {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct RegimenVisitor;
        impl<'de> Visitor<'de> for RegimenVisitor {
            type Value = Regimen;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a sequence of subclass codes")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Regimen, A::Error> {
                let mut r = Regimen::EMPTY;
                while let Some(code) = seq.next_element::<SubclassCode>()? {
                    r.insert(code);
                }
                Ok(r)
            }
        }
        deserializer.deserialize_seq(RegimenVisitor)
    }
}

/// Which health outcome a policy optimizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Glycemia,
    Bp,
    Cvd,
    Multimorbidity,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Glycemia, Target::Bp, Target::Cvd, Target::Multimorbidity];

    /// Therapeutic classes whose codes make up this target's action space.
    pub fn classes(self) -> &'static [TherapeuticClass] {
        match self {
            Target::Glycemia => &[TherapeuticClass::Antihyperglycemic],
            Target::Bp => &[TherapeuticClass::Antihypertensive],
            Target::Cvd => &[TherapeuticClass::Antihyperlipidemic],
            Target::Multimorbidity => &[
                TherapeuticClass::Antihyperglycemic,
                TherapeuticClass::Antihypertensive,
                TherapeuticClass::Antihyperlipidemic,
            ],
        }
    }

    fn class_mask(self) -> u32 {
        let mut mask = 0u32;
        for class in self.classes() {
            for c in class_codes(*class) {
                mask |= 1 << c.index();
            }
        }
        mask
    }

    pub fn name(self) -> &'static str {
        match self {
            Target::Glycemia => "glycemia",
            Target::Bp => "bp",
            Target::Cvd => "cvd",
            Target::Multimorbidity => "multimorbidity",
        }
    }

    pub fn parse(s: &str) -> crate::Result<Self> {
        match s {
            "glycemia" => Ok(Target::Glycemia),
            "bp" => Ok(Target::Bp),
            "cvd" => Ok(Target::Cvd),
            "multimorbidity" => Ok(Target::Multimorbidity),
            other => Err(CoreError::Config(format!(
                "unknown target '{other}' (expected glycemia, bp, cvd or multimorbidity)"
            ))),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_is_closed_at_24() {
        assert_eq!(SubclassCode::ALL.len(), SubclassCode::COUNT);
        for (i, c) in SubclassCode::ALL.iter().enumerate() {
            assert_eq!(c.index(), i);
            assert_eq!(SubclassCode::parse(c.code_str()), Some(*c));
        }
    }

    #[test]
    fn class_partition() {
        assert_eq!(class_codes(TherapeuticClass::Antihyperglycemic).len(), 9);
        assert_eq!(class_codes(TherapeuticClass::Antihypertensive).len(), 10);
        assert_eq!(class_codes(TherapeuticClass::Antihyperlipidemic).len(), 5);
        for class in [
            TherapeuticClass::Antihyperglycemic,
            TherapeuticClass::Antihypertensive,
            TherapeuticClass::Antihyperlipidemic,
        ] {
            for c in class_codes(class) {
                assert_eq!(c.therapeutic_class(), class);
            }
        }
    }

    #[test]
    fn regimen_ordering_is_lexicographic_over_code_sequences() {
        let a = Regimen::from_codes([PparG]);
        let ab = Regimen::from_codes([PparG, Insr]);
        let b = Regimen::from_codes([Insr]);
        assert!(a < ab);
        assert!(ab < b);
        assert!(Regimen::EMPTY < a);
    }

    #[test]
    fn regimen_restriction() {
        let r = Regimen::from_codes([Big, Ace, Hmg]);
        assert_eq!(r.restricted_to(Target::Glycemia), Regimen::from_codes([Big]));
        assert_eq!(r.restricted_to(Target::Bp), Regimen::from_codes([Ace]));
        assert_eq!(r.restricted_to(Target::Cvd), Regimen::from_codes([Hmg]));
        assert_eq!(r.restricted_to(Target::Multimorbidity), r);
    }

    #[test]
    fn regimen_serde_round_trip() {
        let r = Regimen::from_codes([Ace, Big]);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, r#"["BIG","ACE"]"#);
        let back: Regimen = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::numeric::SurdSum;
use crate::Rat;

/// Digits shown for irrational bound values (always rounded down).
pub const DISPLAY_DIGITS: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Lower,
    Upper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BoundKind {
    DegenerationMin,
    GenusThreshold,
    ConicBundleRemark,
    ClosedForm,
    CalabiYau,
    Jensen,
    TheoremB,
    GeneralTypeCovGon,
    RuledVarietyConditional,
    ProjectionUpperGenus,
    ProjectionUpperGonality,
}

impl BoundKind {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundKind::DegenerationMin => "DegenerationMin",
            BoundKind::GenusThreshold => "GenusThreshold",
            BoundKind::ConicBundleRemark => "ConicBundleRemark",
            BoundKind::ClosedForm => "ClosedForm",
            BoundKind::CalabiYau => "CalabiYau",
            BoundKind::Jensen => "Jensen",
            BoundKind::TheoremB => "TheoremB",
            BoundKind::GeneralTypeCovGon => "GeneralTypeCovGon",
            BoundKind::RuledVarietyConditional => "RuledVarietyConditional",
            BoundKind::ProjectionUpperGenus => "ProjectionUpperGenus",
            BoundKind::ProjectionUpperGonality => "ProjectionUpperGonality",
        }
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Class of hypersurfaces a certificate is valid for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    /// Very general hypersurface of the given dimension and degree.
    VeryGeneral,
    /// Any smooth hypersurface of the given dimension and degree.
    AnySmooth,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::VeryGeneral => "very general",
            Hypothesis::AnySmooth => "any smooth",
        })
    }
}

/// Parameters `(p, e, γ)` of one application of the degeneration bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegenerationWitness {
    pub p: u64,
    pub e: u64,
    pub gamma: i64,
}

/// Parameters of one application of the genus threshold (or, with `g = 0`,
/// `p = 3`, `r = 2`, of the conic-bundle threshold).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThresholdWitness {
    pub p: u64,
    pub g: u64,
    pub r: u64,
    pub e: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Witness {
    Degeneration(DegenerationWitness),
    Threshold(ThresholdWitness),
    /// Fano index `ι = n + 2 − d`, and `θ` for the closed form.
    Index { iota: i64, theta: Option<f64> },
    None,
}

/// Exact value of a bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundValue {
    Exact(Rat),
    Radical(SurdSum),
}

impl BoundValue {
    pub fn approx(&self) -> f64 {
        match self {
            BoundValue::Exact(q) => q.to_float(),
            BoundValue::Radical(s) => s.to_f64(),
        }
    }

    pub fn ceil(&self) -> i64 {
        match self {
            BoundValue::Exact(q) => q.ceil(),
            BoundValue::Radical(s) => clamp_i64(s.ceil()),
        }
    }

    pub fn floor(&self) -> i64 {
        match self {
            BoundValue::Exact(q) => q.floor(),
            BoundValue::Radical(s) => clamp_i64(s.floor_scaled(1)),
        }
    }

    /// Exact rationals print as `num/den`; radicals as a decimal rounded down.
    pub fn display(&self) -> String {
        match self {
            BoundValue::Exact(q) => q.to_string(),
            BoundValue::Radical(s) => s.to_decimal_floor(DISPLAY_DIGITS),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, BoundValue::Exact(_))
    }
}

fn clamp_i64(x: i128) -> i64 {
    x.clamp(i64::MIN as i128, i64::MAX as i128) as i64
}

/// A bound on the fibering genus (or gonality, for the projection upper
/// bound) together with the data needed to re-derive it.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCertificate {
    pub direction: Direction,
    pub kind: BoundKind,
    pub value: BoundValue,
    /// `max(0, ⌈value⌉)` for lower bounds, `⌊value⌋` for upper bounds.
    pub integer_value: i64,
    pub hypothesis: Hypothesis,
    pub witness: Witness,
    pub conditional_note: Option<String>,
}

impl BoundCertificate {
    pub fn lower(kind: BoundKind, value: BoundValue, witness: Witness) -> Self {
        let integer_value = value.ceil().max(0);
        let hypothesis = match kind {
            BoundKind::GeneralTypeCovGon => Hypothesis::AnySmooth,
            _ => Hypothesis::VeryGeneral,
        };
        BoundCertificate {
            direction: Direction::Lower,
            kind,
            value,
            integer_value,
            hypothesis,
            witness,
            conditional_note: None,
        }
    }

    pub fn upper(kind: BoundKind, value: BoundValue) -> Self {
        let integer_value = value.floor();
        BoundCertificate {
            direction: Direction::Upper,
            kind,
            value,
            integer_value,
            hypothesis: Hypothesis::AnySmooth,
            witness: Witness::None,
            conditional_note: None,
        }
    }

    pub(crate) fn with_note(mut self, note: &str) -> Self {
        self.conditional_note = Some(note.to_owned());
        self
    }

    pub fn is_conditional(&self) -> bool {
        self.conditional_note.is_some()
    }

    /// True for lower bounds that may enter the unconditional maximum.
    pub fn is_unconditional_lower(&self) -> bool {
        self.direction == Direction::Lower && !self.is_conditional()
    }
}

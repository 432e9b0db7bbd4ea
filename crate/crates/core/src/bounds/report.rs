use serde::{Deserialize, Serialize};

use super::certificate::{BoundCertificate, BoundKind, Direction, Hypothesis, Witness};
use super::Hypersurface;

/// All certificates for one `(n, d)` with the best unconditional lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub hypersurface: Hypersurface,
    /// Lower-bound certificates in evaluation order.
    pub lower: Vec<BoundCertificate>,
    pub upper_genus: BoundCertificate,
    pub upper_gonality: BoundCertificate,
    /// Index into `lower` of the winning certificate; `None` when every
    /// unconditional bound is vacuous.
    pub best: Option<usize>,
    pub best_lower: i64,
}

impl Report {
    pub(crate) fn assemble(
        hypersurface: Hypersurface,
        lower: Vec<BoundCertificate>,
        upper_genus: BoundCertificate,
        upper_gonality: BoundCertificate,
    ) -> Self {
        let mut best: Option<usize> = None;
        for (i, c) in lower.iter().enumerate() {
            if !c.is_unconditional_lower() || c.integer_value <= 0 {
                continue;
            }
            if best.is_none_or(|b| c.integer_value > lower[b].integer_value) {
                best = Some(i);
            }
        }
        let best_lower = best.map_or(0, |i| lower[i].integer_value);
        Report { hypersurface, lower, upper_genus, upper_gonality, best, best_lower }
    }

    pub fn best_certificate(&self) -> Option<&BoundCertificate> {
        self.best.map(|i| &self.lower[i])
    }

    pub fn best_kind(&self) -> Option<BoundKind> {
        self.best_certificate().map(|c| c.kind)
    }

    /// Sanity flag: best lower bound does not exceed the projection bound.
    pub fn consistent(&self) -> bool {
        self.best_lower <= self.upper_genus.integer_value
    }

    pub fn certificates(&self) -> impl Iterator<Item = &BoundCertificate> {
        self.lower.iter().chain([&self.upper_genus, &self.upper_gonality])
    }

    pub fn find(&self, kind: BoundKind) -> Option<&BoundCertificate> {
        self.certificates().find(|c| c.kind == kind)
    }

    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            n: self.hypersurface.n(),
            d: self.hypersurface.d(),
            certificates: self.certificates().map(CertificateRecord::from).collect(),
            best_lower: self.best_lower,
            best_kind: self.best_kind(),
            best_witness: self.best_certificate().map(|c| c.witness.clone()),
            upper_genus: self.upper_genus.integer_value,
            upper_gonality: self.upper_gonality.integer_value,
            consistent: self.consistent(),
        }
    }
}

/// Serialized form of a [`BoundCertificate`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub direction: Direction,
    pub kind: BoundKind,
    /// `num/den` for exact values, otherwise a decimal rounded down.
    pub value: String,
    pub value_approx: f64,
    pub exact: bool,
    pub integer_value: i64,
    pub hypothesis: Hypothesis,
    pub witness: Witness,
    pub conditional_note: Option<String>,
}

impl From<&BoundCertificate> for CertificateRecord {
    fn from(c: &BoundCertificate) -> Self {
        CertificateRecord {
            direction: c.direction,
            kind: c.kind,
            value: c.value.display(),
            value_approx: c.value.approx(),
            exact: c.value.is_exact(),
            integer_value: c.integer_value,
            hypothesis: c.hypothesis,
            witness: c.witness.clone(),
            conditional_note: c.conditional_note.clone(),
        }
    }
}

/// Stable JSON schema of a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub n: u64,
    pub d: u64,
    pub certificates: Vec<CertificateRecord>,
    pub best_lower: i64,
    pub best_kind: Option<BoundKind>,
    pub best_witness: Option<Witness>,
    pub upper_genus: i64,
    pub upper_gonality: i64,
    pub consistent: bool,
}

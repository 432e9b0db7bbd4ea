//! Certificate-producing implementations of every bound, and their
//! optimization over the discrete parameters `(p, e)` and `(p, g)`.

mod certificate;
mod closed_form;
mod curves;
mod degeneration;
mod report;
mod threshold;

use serde::{Deserialize, Serialize};

pub use certificate::{
    BoundCertificate, BoundKind, BoundValue, DegenerationWitness, Direction, Hypothesis,
    ThresholdWitness, Witness, DISPLAY_DIGITS,
};
pub use closed_form::{
    calabi_yau_bound, calabi_yau_value, closed_form_bound, closed_form_value, general_type_bound,
    jensen_bound, jensen_value, ruled_applies, ruled_value, ruled_variety_conditional_bound,
    theorem_b_applies, theorem_b_bound, theorem_b_value, theta, RULED_NOTE,
};
pub use curves::{
    gonality_from_genus, min_genus_with_gonality_at_least, projection_upper_bounds,
    sharpness_example_genus, tate_smooth_guarantee, SharpnessExample,
};
pub use degeneration::{degeneration_bound, gamma};
pub use report::{CertificateRecord, Report, ReportRecord};
pub use threshold::{
    conic_bundle_threshold, genus_threshold_holds, min_degree_for_genus,
    statement_proof_e_identity, threshold_degree, threshold_witness,
};

use crate::error::{Error, Result};
use crate::primes::PrimeTable;

/// The very general hypersurface `X_{n,d} ⊂ P^{n+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hypersurface {
    n: u64,
    d: u64,
}

impl Hypersurface {
    pub fn new(n: u64, d: u64) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::InvalidArgument(format!(
                "dimension and degree must be positive (got n = {n}, d = {d})"
            )));
        }
        Ok(Hypersurface { n, d })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// `ι = n + 2 − d`; positive exactly in the Fano range.
    pub fn fano_index(&self) -> i64 {
        self.n as i64 + 2 - self.d as i64
    }
}

pub(crate) fn require_dimension(h: Hypersurface) -> Result<()> {
    if h.n < 3 {
        return Err(Error::dimension(h.n));
    }
    Ok(())
}

/// Default sieve limit for `(n, d)`: `max(d, 2(n + d)) + 1`.
pub fn default_sieve_limit(n: u64, d: u64) -> u64 {
    d.max(2 * (n + d)) + 1
}

/// Evaluates bounds against a shared prime table.
#[derive(Debug, Clone)]
pub struct BoundEngine {
    primes: PrimeTable,
}

impl BoundEngine {
    pub fn new(sieve_limit: u64) -> Self {
        BoundEngine { primes: PrimeTable::up_to(sieve_limit) }
    }

    pub fn for_hypersurface(h: Hypersurface) -> Self {
        Self::new(default_sieve_limit(h.n, h.d))
    }

    pub fn primes(&self) -> &PrimeTable {
        &self.primes
    }

    fn primes_through(&self, d: u64) -> Result<&[u64]> {
        if self.primes.limit() < d {
            return Err(Error::SieveTooSmall { limit: self.primes.limit(), needed: d });
        }
        Ok(self.primes.range(2, d))
    }

    /// Best degeneration bound over all primes `p ≤ d` and `1 ≤ e ≤ ⌊d/p⌋`;
    /// ties go to the smallest `p`, then the smallest `e`.
    pub fn best_degeneration_bound(&self, h: Hypersurface) -> Result<Option<BoundCertificate>> {
        require_dimension(h)?;
        Ok(degeneration::best_over(h, self.primes_through(h.d)?))
    }

    /// Largest `g + 1` certified by the genus threshold at degree `d`, or 1
    /// from the conic-bundle threshold; smallest prime on ties.
    pub fn best_threshold_bound(&self, h: Hypersurface) -> Result<Option<BoundCertificate>> {
        require_dimension(h)?;
        Ok(threshold::best_over(h, self.primes_through(h.d)?))
    }

    /// Every applicable certificate for `h` and the best unconditional lower
    /// bound among them.
    pub fn combined_bound(&self, h: Hypersurface) -> Result<Report> {
        require_dimension(h)?;
        let mut certs = Vec::new();
        certs.extend(self.best_degeneration_bound(h)?);
        certs.extend(self.best_threshold_bound(h)?);
        certs.push(closed_form_bound(h)?);
        certs.extend(theorem_b_bound(h)?);
        if h.d == h.n + 2 {
            certs.push(calabi_yau_bound(h.n)?);
        }
        certs.push(jensen_bound(h)?);
        certs.extend(general_type_bound(h));
        certs.extend(ruled_variety_conditional_bound(h)?);
        let (genus, gonality) = projection_upper_bounds(h.d)?;
        Ok(Report::assemble(h, certs, genus, gonality))
    }
}

pub fn best_degeneration_bound(h: Hypersurface) -> Result<Option<BoundCertificate>> {
    BoundEngine::new(h.d).best_degeneration_bound(h)
}

pub fn best_threshold_bound(h: Hypersurface) -> Result<Option<BoundCertificate>> {
    BoundEngine::new(h.d).best_threshold_bound(h)
}

pub fn combined_bound(h: Hypersurface) -> Result<Report> {
    BoundEngine::for_hypersurface(h).combined_bound(h)
}

/// Why a certificate failed to replay.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} certificate does not replay for (n, d) = ({n}, {d}): {reason}")]
pub struct ReplayError {
    pub kind: BoundKind,
    pub n: u64,
    pub d: u64,
    pub reason: String,
}

impl BoundCertificate {
    /// Re-derives the certificate from `(n, d)` and its witness alone.
    pub fn replay(&self, h: Hypersurface) -> std::result::Result<(), ReplayError> {
        let fail = |reason: &str| ReplayError {
            kind: self.kind,
            n: h.n,
            d: h.d,
            reason: reason.to_owned(),
        };
        let rebuilt: Option<BoundCertificate> = match (self.kind, &self.witness) {
            (BoundKind::DegenerationMin, Witness::Degeneration(w)) => {
                if gamma(h.n, w.p, w.e) != w.gamma {
                    return Err(fail("gamma does not match p·e + e − n − 1"));
                }
                degeneration_bound(h, w.p, w.e).map_err(|e| fail(&e.to_string()))?
            }
            (BoundKind::GenusThreshold | BoundKind::ConicBundleRemark, Witness::Threshold(w)) => {
                if !threshold::replay(h, self.kind, w) {
                    return Err(fail("threshold inequality fails for the witness"));
                }
                Some(match self.kind {
                    BoundKind::ConicBundleRemark => threshold::conic_certificate(h.n),
                    _ => BoundCertificate::lower(
                        BoundKind::GenusThreshold,
                        BoundValue::Exact(crate::Rat::from_integer(w.g as i64 + 1)),
                        Witness::Threshold(*w),
                    ),
                })
            }
            (BoundKind::ClosedForm, _) => Some(closed_form_bound(h).map_err(|e| fail(&e.to_string()))?),
            (BoundKind::TheoremB, _) => theorem_b_bound(h).map_err(|e| fail(&e.to_string()))?,
            (BoundKind::CalabiYau, _) => {
                if h.d != h.n + 2 {
                    return Err(fail("degree is not n + 2"));
                }
                Some(calabi_yau_bound(h.n).map_err(|e| fail(&e.to_string()))?)
            }
            (BoundKind::Jensen, _) => Some(jensen_bound(h).map_err(|e| fail(&e.to_string()))?),
            (BoundKind::GeneralTypeCovGon, _) => general_type_bound(h),
            (BoundKind::RuledVarietyConditional, _) => {
                ruled_variety_conditional_bound(h).map_err(|e| fail(&e.to_string()))?
            }
            (BoundKind::ProjectionUpperGenus, _) => {
                Some(projection_upper_bounds(h.d).map_err(|e| fail(&e.to_string()))?.0)
            }
            (BoundKind::ProjectionUpperGonality, _) => {
                Some(projection_upper_bounds(h.d).map_err(|e| fail(&e.to_string()))?.1)
            }
            _ => return Err(fail("witness type does not match the bound kind")),
        };
        match rebuilt {
            Some(c) if c == *self => Ok(()),
            Some(_) => Err(fail("re-derived certificate differs")),
            None => Err(fail("hypotheses do not hold")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(n: u64, d: u64) -> Hypersurface {
        Hypersurface::new(n, d).unwrap()
    }

    #[test]
    fn hypersurface_accessors() {
        let x = h(3, 5);
        assert_eq!((x.n(), x.d(), x.fano_index()), (3, 5, 0));
        assert_eq!(h(98, 100).fano_index(), 0);
        assert_eq!(h(3, 10).fano_index(), -5);
        assert!(Hypersurface::new(0, 3).is_err());
        assert!(Hypersurface::new(3, 0).is_err());
    }

    #[test]
    fn engine_rejects_small_sieve() {
        let engine = BoundEngine::new(4);
        assert!(matches!(
            engine.best_degeneration_bound(h(3, 5)),
            Err(Error::SieveTooSmall { limit: 4, needed: 5 })
        ));
    }

    #[test]
    fn low_dimension_is_rejected() {
        let err = combined_bound(h(2, 5)).unwrap_err();
        assert!(err.to_string().contains("dimension n >= 3"));
    }

    #[test]
    fn replay_detects_tampering() {
        let mut c = best_degeneration_bound(h(3, 5)).unwrap().unwrap();
        assert!(c.replay(h(3, 5)).is_ok());
        assert!(c.replay(h(3, 4)).is_err());
        c.integer_value = 3;
        assert!(c.replay(h(3, 5)).is_err());

        let mut t = best_threshold_bound(h(3, 5)).unwrap().unwrap();
        assert!(t.replay(h(3, 5)).is_ok());
        if let Witness::Threshold(w) = &mut t.witness {
            w.p = 7;
        }
        assert!(t.replay(h(3, 5)).is_err());

        let cf = closed_form_bound(h(3, 5)).unwrap();
        assert!(cf.replay(h(3, 5)).is_ok());
        assert!(cf.replay(h(3, 6)).is_err());
    }
}

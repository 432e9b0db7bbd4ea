//! Gonality–genus relations, the Tate smoothness threshold, its sharpness
//! examples, and the line-projection upper bounds.

use serde::{Deserialize, Serialize};

use super::certificate::{BoundCertificate, BoundKind, BoundValue};
use crate::error::{Error, Result};
use crate::primes::is_prime;
use crate::Rat;

/// Upper bound `⌊(g+3)/2⌋` on the gonality of a smooth genus `g` curve.
pub fn gonality_from_genus(g: u64) -> u64 {
    (g + 3) / 2
}

/// Least genus whose gonality bound reaches `c`: `2c − 3` (0 for `c < 2`).
pub fn min_genus_with_gonality_at_least(c: u64) -> u64 {
    if c < 2 {
        0
    } else {
        2 * c - 3
    }
}

/// A regular genus `g` curve in characteristic `p` is smooth once `p ≥ 2g + 3`.
pub fn tate_smooth_guarantee(g: u64, p: u64) -> bool {
    p >= 2 * g + 3
}

/// Regular but non-smooth curves showing the smoothness threshold is sharp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SharpnessExample {
    /// Generic fiber of a quasi-elliptic fibration, `p ∈ {2, 3}`.
    QuasiElliptic,
    /// Normalization of `y²z^{p−2} = x^p − s z^p`, `p ≥ 3`.
    Rosenlicht,
    /// `s x^p + t y^p + z^p = 0`.
    Fermat,
}

/// Arithmetic genus of the example curve in characteristic `p`.
pub fn sharpness_example_genus(kind: SharpnessExample, p: u64) -> Result<u64> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    match kind {
        SharpnessExample::QuasiElliptic if p == 2 || p == 3 => Ok(1),
        SharpnessExample::QuasiElliptic => Err(Error::Domain(
            "quasi-elliptic fibrations exist only in characteristic 2 or 3".into(),
        )),
        SharpnessExample::Rosenlicht if p >= 3 => Ok((p - 1) / 2),
        SharpnessExample::Rosenlicht => {
            Err(Error::Domain("the Rosenlicht curve requires p >= 3".into()))
        }
        SharpnessExample::Fermat => Ok((p - 1) * (p - 2) / 2),
    }
}

/// Projection from a general codimension-2 linear space: genus
/// `(d−1)(d−2)/2` and gonality `d − 1`.
pub fn projection_upper_bounds(d: u64) -> Result<(BoundCertificate, BoundCertificate)> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be positive".into()));
    }
    let d = d as i64;
    let genus = BoundCertificate::upper(
        BoundKind::ProjectionUpperGenus,
        BoundValue::Exact(Rat::from_integer((d - 1) * (d - 2) / 2)),
    );
    let gonality = BoundCertificate::upper(
        BoundKind::ProjectionUpperGonality,
        BoundValue::Exact(Rat::from_integer(d - 1)),
    );
    Ok((genus, gonality))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::PrimeTable;

    #[test]
    fn gonality_examples() {
        assert_eq!(gonality_from_genus(0), 1);
        assert_eq!(gonality_from_genus(5), 4);
        for g in 0..1000 {
            assert_eq!(gonality_from_genus(2 * g + 1), g + 2);
            assert!(gonality_from_genus(g + 1) >= gonality_from_genus(g));
        }
    }

    #[test]
    fn min_genus_inverts_gonality() {
        // c = γ + 1 with γ = 2 gives 2γ − 1 = 3
        assert_eq!(min_genus_with_gonality_at_least(3), 3);
        assert_eq!(min_genus_with_gonality_at_least(2), 1);
        assert_eq!(min_genus_with_gonality_at_least(1), 0);
        assert_eq!(min_genus_with_gonality_at_least(0), 0);
        for c in 2..2000 {
            let g = min_genus_with_gonality_at_least(c);
            assert_eq!(gonality_from_genus(g), c);
            assert!(g == 0 || gonality_from_genus(g - 1) < c);
        }
    }

    #[test]
    fn tate_examples() {
        assert!(tate_smooth_guarantee(1, 5));
        assert!(!tate_smooth_guarantee(1, 3));
        assert!(!tate_smooth_guarantee(0, 2));
        assert!(tate_smooth_guarantee(0, 3));
    }

    #[test]
    fn sharpness_examples() {
        use SharpnessExample::*;
        assert_eq!(sharpness_example_genus(Rosenlicht, 5).unwrap(), 2);
        assert_eq!(sharpness_example_genus(Fermat, 3).unwrap(), 1);
        assert_eq!(sharpness_example_genus(QuasiElliptic, 3).unwrap(), 1);
        assert_eq!(sharpness_example_genus(QuasiElliptic, 2).unwrap(), 1);
        assert!(sharpness_example_genus(QuasiElliptic, 5).is_err());
        assert!(sharpness_example_genus(Rosenlicht, 2).is_err());
        assert!(sharpness_example_genus(Fermat, 4).is_err());
    }

    #[test]
    fn rosenlicht_sits_just_below_threshold() {
        // genus (p−1)/2 in characteristic p = 2g + 1 < 2g + 3: regular, not smooth
        for p in PrimeTable::up_to(500).iter().filter(|&p| p >= 3) {
            let g = sharpness_example_genus(SharpnessExample::Rosenlicht, p).unwrap();
            assert_eq!(p, 2 * g + 1);
            assert!(!tate_smooth_guarantee(g, p));
        }
    }

    #[test]
    fn projection_examples() {
        let up = |d| {
            let (g, c) = projection_upper_bounds(d).unwrap();
            (g.integer_value, c.integer_value)
        };
        assert_eq!(up(4), (3, 3));
        assert_eq!(up(1), (0, 0));
        assert_eq!(up(10), (36, 9));
        assert!(projection_upper_bounds(0).is_err());
    }
}

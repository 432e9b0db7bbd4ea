//! Square-root closed forms, and the linear bound for general type
//! hypersurfaces.
//!
//! Each radical bound is stored exactly as a [`SurdSum`]; the float
//! evaluators below are generic over the floating-point type and serve as
//! the second, independent route to the same numbers.

use num_traits::Float;

use super::certificate::{BoundCertificate, BoundKind, BoundValue, Witness};
use super::{require_dimension, Hypersurface};
use crate::error::{Error, Result};
use crate::numeric::SurdSum;
use crate::Rat;

/// Note attached to the ruled-variety bound.
pub const RULED_NOTE: &str = "bounds only the genus of fibrations whose fibers have geometric \
     genus >= 2; not an unconditional lower bound on fib.gen";

fn cast<F: Float>(x: i128) -> F {
    F::from(x).expect("integer representable as float")
}

/// Positive root `θ` of the quadratic balancing the two branches of the
/// degeneration bound: `θ = (−ι + √(ι² + 9d/2)) / (9/4)`.
pub fn theta<F: Float>(n: u64, d: u64) -> F {
    let iota: F = cast(n as i128 + 2 - d as i128);
    let d: F = cast(d as i128);
    let root = (iota * iota + cast::<F>(9) * d / cast(2)).sqrt();
    if iota > F::zero() {
        // rationalized to avoid cancellation: 2d / (ι + √(ι² + 9d/2))
        cast::<F>(2) * d / (iota + root)
    } else {
        (root - iota) * cast(4) / cast(9)
    }
}

/// `(−ι + √(ι² + 9d/2))/9 − 1`.
pub fn closed_form_value<F: Float>(n: u64, d: u64) -> F {
    theta::<F>(n, d) / cast(4) - F::one()
}

/// `√(n+2)/5 − 1`.
pub fn theorem_b_value<F: Float>(n: u64) -> F {
    cast::<F>(n as i128 + 2).sqrt() / cast(5) - F::one()
}

/// `√(n+2)/(3√2) − 1`.
pub fn calabi_yau_value<F: Float>(n: u64) -> F {
    cast::<F>(n as i128 + 2).sqrt() / (cast::<F>(3) * cast::<F>(2).sqrt()) - F::one()
}

/// `((1 + 2^{−1/2}·sign(d−n−2))/9)·(d−n−2) + √(d/36) − 1`, with `sign(0) = 0`.
pub fn jensen_value<F: Float>(n: u64, d: u64) -> F {
    let x = d as i128 - n as i128 - 2;
    let sign: F = cast(x.signum());
    let coeff = (F::one() + sign / cast::<F>(2).sqrt()) / cast(9);
    coeff * cast(x) + (cast::<F>(d as i128) / cast(36)).sqrt() - F::one()
}

/// `1 + √(n+2)/8`.
pub fn ruled_value<F: Float>(n: u64) -> F {
    F::one() + cast::<F>(n as i128 + 2).sqrt() / cast(8)
}

/// `d ≥ n + 2 − √(n+2)/4`, decided exactly.
pub fn theorem_b_applies(n: u64, d: u64) -> bool {
    let iota = n as i128 + 2 - d as i128;
    iota <= 0 || 16 * iota * iota <= n as i128 + 2
}

/// `d > n + 1 − √(n+2)/4`, decided exactly.
pub fn ruled_applies(n: u64, d: u64) -> bool {
    let m = n as i128 + 1 - d as i128;
    m <= 0 || 16 * m * m < n as i128 + 2
}

pub fn closed_form_bound(h: Hypersurface) -> Result<BoundCertificate> {
    require_dimension(h)?;
    let iota = h.fano_index() as i128;
    let d = h.d() as i128;
    let value = SurdSum::new(-2 * iota - 18, &[(1, 4 * iota * iota + 18 * d)], 18);
    Ok(BoundCertificate::lower(
        BoundKind::ClosedForm,
        BoundValue::Radical(value),
        Witness::Index { iota: iota as i64, theta: Some(theta::<f64>(h.n(), h.d())) },
    ))
}

pub fn theorem_b_bound(h: Hypersurface) -> Result<Option<BoundCertificate>> {
    require_dimension(h)?;
    if !theorem_b_applies(h.n(), h.d()) {
        return Ok(None);
    }
    let value = SurdSum::new(-5, &[(1, h.n() as i128 + 2)], 5);
    Ok(Some(BoundCertificate::lower(
        BoundKind::TheoremB,
        BoundValue::Radical(value),
        Witness::Index { iota: h.fano_index(), theta: None },
    )))
}

/// Bound for the degree `n + 2` hypersurface of dimension `n`.
pub fn calabi_yau_bound(n: u64) -> Result<BoundCertificate> {
    if n < 3 {
        return Err(Error::dimension(n));
    }
    // √(n+2)/(3√2) = √(2(n+2))/6
    let value = SurdSum::new(-6, &[(1, 2 * (n as i128 + 2))], 6);
    Ok(BoundCertificate::lower(
        BoundKind::CalabiYau,
        BoundValue::Radical(value),
        Witness::Index { iota: 0, theta: None },
    ))
}

pub fn jensen_bound(h: Hypersurface) -> Result<BoundCertificate> {
    require_dimension(h)?;
    let x = h.d() as i128 - h.n() as i128 - 2;
    let d = h.d() as i128;
    // over 36: 4x − 36 + 2|x|√2 + 6√d
    let value = SurdSum::new(4 * x - 36, &[(1, 8 * x * x), (1, 36 * d)], 36);
    Ok(BoundCertificate::lower(
        BoundKind::Jensen,
        BoundValue::Radical(value),
        Witness::Index { iota: h.fano_index(), theta: None },
    ))
}

/// `2(d − n) − 3` for `d ≥ n + 2`, valid for any smooth hypersurface.
pub fn general_type_bound(h: Hypersurface) -> Option<BoundCertificate> {
    if h.d() < h.n() + 2 {
        return None;
    }
    let v = 2 * (h.d() as i64 - h.n() as i64) - 3;
    Some(BoundCertificate::lower(
        BoundKind::GeneralTypeCovGon,
        BoundValue::Exact(Rat::from_integer(v)),
        Witness::Index { iota: h.fano_index(), theta: None },
    ))
}

/// `g ≥ 1 + √(n+2)/8` for fibrations in curves of geometric genus `≥ 2`.
pub fn ruled_variety_conditional_bound(h: Hypersurface) -> Result<Option<BoundCertificate>> {
    require_dimension(h)?;
    if !ruled_applies(h.n(), h.d()) {
        return Ok(None);
    }
    let value = SurdSum::new(8, &[(1, h.n() as i128 + 2)], 8);
    Ok(Some(
        BoundCertificate::lower(
            BoundKind::RuledVarietyConditional,
            BoundValue::Radical(value),
            Witness::Index { iota: h.fano_index(), theta: None },
        )
        .with_note(RULED_NOTE),
    ))
}

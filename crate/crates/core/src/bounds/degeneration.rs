//! Lower bound from degenerating `X_{n,pe}` to characteristic `p`:
//! `fib.gen ≥ min{(p − 2)/2, 2γ − 1}` with `γ = pe + e − n − 1 ≥ 2`.

use super::certificate::{BoundCertificate, BoundKind, BoundValue, DegenerationWitness, Witness};
use super::{require_dimension, Hypersurface};
use crate::error::{Error, Result};
use crate::primes::is_prime;
use crate::Rat;

/// `γ = p·e + e − n − 1`.
pub fn gamma(n: u64, p: u64, e: u64) -> i64 {
    (p * e + e) as i64 - n as i64 - 1
}

/// `min{(p − 2)/2, 2γ − 1}`.
pub(crate) fn degeneration_value(p: u64, gamma: i64) -> Rat {
    let prime_branch = Rat::new(p as i64 - 2, 2).expect("nonzero denominator");
    let gonality_branch = Rat::from_integer(2 * gamma - 1);
    prime_branch.min(gonality_branch)
}

fn certificate(p: u64, e: u64, gamma: i64) -> BoundCertificate {
    BoundCertificate::lower(
        BoundKind::DegenerationMin,
        BoundValue::Exact(degeneration_value(p, gamma)),
        Witness::Degeneration(DegenerationWitness { p, e, gamma }),
    )
}

/// The bound for one `(p, e)`, absent unless `pe ≤ d` and `γ ≥ 2`.
pub fn degeneration_bound(h: Hypersurface, p: u64, e: u64) -> Result<Option<BoundCertificate>> {
    require_dimension(h)?;
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if e == 0 {
        return Err(Error::Domain("e must be a positive integer".into()));
    }
    if p.saturating_mul(e) > h.d() {
        return Ok(None);
    }
    let g = gamma(h.n(), p, e);
    Ok((g >= 2).then(|| certificate(p, e, g)))
}

/// Best bound over all primes in `primes` (ascending, all `<= d`).
///
/// For fixed `p` the value is non-decreasing in `e`, so only `e = ⌊d/p⌋`
/// decides the value; the smallest `e` attaining it is then solved for
/// directly.
pub(crate) fn best_over(h: Hypersurface, primes: &[u64]) -> Option<BoundCertificate> {
    let (n, d) = (h.n(), h.d());
    let mut best: Option<(Rat, u64, u64, i64)> = None;
    for &p in primes {
        let e_max = d / p;
        if e_max == 0 {
            break;
        }
        let g_max = gamma(n, p, e_max);
        if g_max < 2 {
            continue;
        }
        let value = degeneration_value(p, g_max);
        // the (p-2)/2 branch is attained as soon as 2γ − 1 ≥ (p − 2)/2, i.e. γ ≥ p/4
        let needed = (p as i64 + 3) / 4;
        let e = if value == Rat::new(p as i64 - 2, 2).unwrap() {
            let target = needed.max(2) + n as i64 + 1;
            (target as u64).div_ceil(p + 1).max(1)
        } else {
            e_max
        };
        let g = gamma(n, p, e);
        debug_assert!(g >= 2 && degeneration_value(p, g) == value);
        if best.as_ref().is_none_or(|b| value > b.0) {
            best = Some((value, p, e, g));
        }
    }
    best.map(|(_, p, e, g)| certificate(p, e, g))
}

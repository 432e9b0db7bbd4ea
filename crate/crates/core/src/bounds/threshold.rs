//! Degree thresholds guaranteeing `fib.gen ≥ g + 1`, and the conic-bundle
//! threshold `3⌈(n+3)/4⌉` for `g = 0`.

use super::certificate::{BoundCertificate, BoundKind, BoundValue, ThresholdWitness, Witness};
use super::Hypersurface;
use crate::error::{Error, Result};
use crate::numeric::ceil_div;
use crate::primes::{is_prime, next_prime, PrimeTable};
use crate::Rat;

fn require_genus(g: u64) -> Result<()> {
    if g == 0 {
        return Err(Error::Precondition(
            "the genus threshold requires g >= 1; g = 0 is covered by the conic-bundle \
             threshold 3*ceil((n+3)/4)"
                .into(),
        ));
    }
    Ok(())
}

fn require_n(n: u64) -> Result<()> {
    if n < 3 {
        return Err(Error::dimension(n));
    }
    Ok(())
}

/// `⌊(g + 5)/2⌋`, the offset in the threshold numerator.
pub(crate) fn threshold_offset(g: u64) -> u64 {
    (g + 5) / 2
}

/// `p·⌈(n + ⌊(g+5)/2⌋)/(p+1)⌉`, the least degree at which the prime `p`
/// certifies genus `g + 1`.
pub fn threshold_degree(n: u64, g: u64, p: u64) -> u64 {
    p * ceil_div(n + threshold_offset(g), p + 1).expect("p + 1 > 0")
}

/// `p ≥ 2g + 3` and `d ≥ p·⌈(n + ⌊(g+5)/2⌋)/(p+1)⌉`.
pub fn genus_threshold_holds(n: u64, d: u64, g: u64, p: u64) -> Result<bool> {
    require_n(n)?;
    require_genus(g)?;
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    Ok(p >= 2 * g + 3 && d >= threshold_degree(n, g, p))
}

/// `3⌈(n+3)/4⌉`.
pub fn conic_bundle_threshold(n: u64) -> Result<u64> {
    require_n(n)?;
    Ok(3 * ceil_div(n + 3, 4)?)
}

/// Witness `(p, g, r, e)` with `r = ⌊(g+3)/2⌋`, `e = ⌈(n+r+1)/(p+1)⌉`.
pub fn threshold_witness(n: u64, g: u64, p: u64) -> ThresholdWitness {
    let r = (g + 3) / 2;
    ThresholdWitness { p, g, r, e: ceil_div(n + r + 1, p + 1).expect("p + 1 > 0") }
}

fn conic_witness(n: u64) -> ThresholdWitness {
    ThresholdWitness { p: 3, g: 0, r: 2, e: ceil_div(n + 3, 4).expect("nonzero") }
}

/// The threshold stated with `⌊(g+5)/2⌋` agrees with the `e` built from
/// `r = ⌊(g+3)/2⌋`.
pub fn statement_proof_e_identity(n: u64, g: u64, p: u64) -> bool {
    let statement = ceil_div(n + threshold_offset(g), p + 1);
    let proof = ceil_div(n + (g + 3) / 2 + 1, p + 1);
    statement.is_ok() && statement == proof
}

/// Minimal degree `d` with `fib.gen ≥ g + 1` guaranteed, and the prime
/// achieving it (smallest prime on ties).
///
/// Primes above the degree achieved by the smallest admissible prime cannot
/// do better, since the threshold for `p` is at least `p`.
pub fn min_degree_for_genus(n: u64, g: u64) -> Result<(u64, u64)> {
    require_n(n)?;
    require_genus(g)?;
    let p0 = next_prime(2 * g + 3);
    let cap = threshold_degree(n, g, p0);
    let table = PrimeTable::up_to(cap);
    let mut best = (cap, p0);
    for &p in table.range(p0 + 1, cap) {
        if p > best.0 {
            break;
        }
        let t = threshold_degree(n, g, p);
        if t < best.0 {
            best = (t, p);
        }
    }
    Ok(best)
}

fn smallest_feasible_prime(n: u64, d: u64, g: u64, primes: &[u64]) -> Option<u64> {
    let lo = 2 * g + 3;
    let start = primes.partition_point(|&p| p < lo);
    primes[start..]
        .iter()
        .copied()
        .take_while(|&p| p <= d)
        .find(|&p| threshold_degree(n, g, p) <= d)
}

fn genus_certificate(n: u64, g: u64, p: u64) -> BoundCertificate {
    BoundCertificate::lower(
        BoundKind::GenusThreshold,
        BoundValue::Exact(Rat::from_integer(g as i64 + 1)),
        Witness::Threshold(threshold_witness(n, g, p)),
    )
}

pub(crate) fn conic_certificate(n: u64) -> BoundCertificate {
    BoundCertificate::lower(
        BoundKind::ConicBundleRemark,
        BoundValue::Exact(Rat::from_integer(1)),
        Witness::Threshold(conic_witness(n)),
    )
}

/// Largest `g + 1` certified at degree `d`, falling back to the conic-bundle
/// threshold. `primes` must contain every prime `<= d`.
///
/// Feasibility is monotone in `g` (raising `g` raises both the prime floor
/// `2g + 3` and the numerator offset), so the largest feasible `g` is found
/// by bisection.
pub(crate) fn best_over(h: Hypersurface, primes: &[u64]) -> Option<BoundCertificate> {
    let (n, d) = (h.n(), h.d());
    let feasible = |g: u64| smallest_feasible_prime(n, d, g, primes);
    if d >= 5 && feasible(1).is_some() {
        let (mut lo, mut hi) = (1u64, (d - 3) / 2);
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if feasible(mid).is_some() {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        let p = feasible(lo).expect("bisection keeps lo feasible");
        return Some(genus_certificate(n, lo, p));
    }
    let conic = 3 * ceil_div(n + 3, 4).expect("nonzero");
    (d >= conic).then(|| conic_certificate(n))
}

/// Re-checks a threshold certificate's witness against `(n, d)`.
pub(crate) fn replay(h: Hypersurface, kind: BoundKind, w: &ThresholdWitness) -> bool {
    let (n, d) = (h.n(), h.d());
    match kind {
        BoundKind::ConicBundleRemark => {
            *w == conic_witness(n) && w.p * w.e <= d && d >= 3 * ceil_div(n + 3, 4).unwrap()
        }
        BoundKind::GenusThreshold => {
            w.g >= 1
                && *w == threshold_witness(n, w.g, w.p)
                && w.r >= 2
                && w.p * w.e <= d
                && genus_threshold_holds(n, d, w.g, w.p).unwrap_or(false)
        }
        _ => false,
    }
}

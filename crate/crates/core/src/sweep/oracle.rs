//! Unpruned exhaustive enumeration of the two parameterized bounds.
//!
//! Nothing here calls into the optimizers or the sieve: primality is by
//! trial division and values are carried as doubled integers, so the oracle
//! shares no code path with what it checks.

use serde::{Deserialize, Serialize};

use crate::bounds::{BoundCertificate, BoundEngine, BoundValue, Hypersurface, Witness};

/// Optimum of a parameterized bound in a representation both sides can
/// produce: twice the exact value and the winning parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Optimum {
    pub twice_value: i64,
    /// `(p, e)` for the degeneration bound, `(p, g)` for thresholds.
    pub params: (u64, u64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub n: u64,
    pub d: u64,
    pub bound: String,
    pub optimized: Option<Optimum>,
    pub oracle: Option<Optimum>,
}

fn trial_division_primes(limit: u64) -> Vec<u64> {
    (2..=limit)
        .filter(|&k| (2..k).take_while(|f| f * f <= k).all(|f| k % f != 0))
        .collect()
}

/// Every prime `p ≤ d` and every `e ≤ d`; ties to the first (smallest `p`,
/// then `e`) maximum.
pub fn degeneration_oracle(n: u64, d: u64, primes: &[u64]) -> Option<Optimum> {
    let mut best: Option<Optimum> = None;
    for &p in primes.iter().filter(|&&p| p <= d) {
        for e in 1..=d {
            if p * e > d {
                continue;
            }
            let gamma = (p * e + e) as i64 - n as i64 - 1;
            if gamma < 2 {
                continue;
            }
            let twice = (p as i64 - 2).min(4 * gamma - 2);
            if best.is_none_or(|b| twice > b.twice_value) {
                best = Some(Optimum { twice_value: twice, params: (p, e) });
            }
        }
    }
    best
}

/// Every `g ≤ d` and prime `p ≤ d` against the genus threshold, then the
/// conic-bundle threshold (reported with `g = 0`, `p = 3`).
pub fn threshold_oracle(n: u64, d: u64, primes: &[u64]) -> Option<Optimum> {
    let mut best: Option<Optimum> = None;
    for g in 1..=d {
        for &p in primes.iter().filter(|&&p| p <= d) {
            let num = n + (g + 5) / 2;
            let threshold = p * ((num + p) / (p + 1));
            if p >= 2 * g + 3 && d >= threshold {
                let twice = 2 * (g as i64 + 1);
                if best.is_none_or(|b| twice > b.twice_value) {
                    best = Some(Optimum { twice_value: twice, params: (p, g) });
                }
            }
        }
    }
    if best.is_none() && d >= 3 * (n + 3).div_ceil(4) {
        best = Some(Optimum { twice_value: 2, params: (3, 0) });
    }
    best
}

/// Summarizes a certificate from either optimizer in oracle form.
pub fn summarize(cert: &BoundCertificate) -> Option<Optimum> {
    let BoundValue::Exact(v) = &cert.value else { return None };
    let twice = (*v + *v).numer();
    let params = match &cert.witness {
        Witness::Degeneration(w) => (w.p, w.e),
        Witness::Threshold(w) => (w.p, w.g),
        _ => return None,
    };
    Some(Optimum { twice_value: twice, params })
}

/// Diffs candidate optimizers against the oracle on `3 ≤ n ≤ n_max`,
/// `1 ≤ d ≤ d_max`.
pub fn diff_against_oracle<D, T>(
    n_max: u64,
    d_max: u64,
    degeneration: D,
    threshold: T,
) -> Vec<Discrepancy>
where
    D: Fn(u64, u64) -> Option<Optimum> + Sync,
    T: Fn(u64, u64) -> Option<Optimum> + Sync,
{
    use rayon::prelude::*;

    let primes = trial_division_primes(d_max);
    (3..=n_max.max(2))
        .into_par_iter()
        .flat_map_iter(|n| {
            let primes = &primes;
            let degeneration = &degeneration;
            let threshold = &threshold;
            (1..=d_max).flat_map(move |d| {
                let mut out = Vec::new();
                let (got, want) = (degeneration(n, d), degeneration_oracle(n, d, primes));
                if got != want {
                    out.push(Discrepancy {
                        n,
                        d,
                        bound: "degeneration".into(),
                        optimized: got,
                        oracle: want,
                    });
                }
                let (got, want) = (threshold(n, d), threshold_oracle(n, d, primes));
                if got != want {
                    out.push(Discrepancy { n, d, bound: "threshold".into(), optimized: got, oracle: want });
                }
                out
            })
        })
        .collect()
}

/// Diffs the optimized bounds against the oracle; empty when they agree.
pub fn oracle_check(n_max: u64, d_max: u64) -> Vec<Discrepancy> {
    let engine = BoundEngine::new(d_max);
    let h = |n, d| Hypersurface::new(n, d).expect("positive n and d");
    diff_against_oracle(
        n_max,
        d_max,
        |n, d| {
            engine
                .best_degeneration_bound(h(n, d))
                .expect("sieve covers d_max")
                .as_ref()
                .and_then(summarize)
        },
        |n, d| {
            engine
                .best_threshold_bound(h(n, d))
                .expect("sieve covers d_max")
                .as_ref()
                .and_then(summarize)
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_division_list() {
        assert_eq!(trial_division_primes(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(trial_division_primes(1).is_empty());
    }

    #[test]
    fn oracle_examples() {
        let primes = trial_division_primes(20);
        assert_eq!(
            degeneration_oracle(3, 5, &primes),
            Some(Optimum { twice_value: 3, params: (5, 1) })
        );
        assert_eq!(degeneration_oracle(10, 9, &primes), None);
        assert_eq!(
            degeneration_oracle(3, 6, &primes),
            Some(Optimum { twice_value: 3, params: (5, 1) })
        );
        assert_eq!(
            threshold_oracle(3, 5, &primes),
            Some(Optimum { twice_value: 4, params: (5, 1) })
        );
        assert_eq!(threshold_oracle(20, 4, &primes), None);
    }

    #[test]
    fn small_ranges_agree() {
        assert!(oracle_check(3, 5).is_empty());
        assert!(oracle_check(40, 80).is_empty());
    }

    #[test]
    fn off_by_one_in_gamma_is_detected() {
        // evaluating at n − 1 shifts γ = pe + e − n − 1 up by one
        let engine = BoundEngine::new(80);
        let shifted = |n: u64, d| {
            engine
                .best_degeneration_bound(Hypersurface::new(n - 1, d).unwrap())
                .ok()
                .flatten()
                .as_ref()
                .and_then(summarize)
        };
        let honest_threshold = |n, d| {
            engine
                .best_threshold_bound(Hypersurface::new(n, d).unwrap())
                .unwrap()
                .as_ref()
                .and_then(summarize)
        };
        let found = diff_against_oracle(40, 80, shifted, honest_threshold);
        assert!(!found.is_empty());
        assert!(found.iter().all(|x| x.bound == "degeneration"));
    }

    #[test]
    fn wrong_tie_break_is_detected() {
        let engine = BoundEngine::new(60);
        let largest_e = |n, d| {
            engine
                .best_degeneration_bound(Hypersurface::new(n, d).unwrap())
                .unwrap()
                .as_ref()
                .and_then(summarize)
                .map(|o| Optimum { params: (o.params.0, d / o.params.0), ..o })
        };
        let none = |_, _| None;
        let found = diff_against_oracle(20, 60, largest_e, none);
        assert!(found.iter().any(|x| x.bound == "degeneration"));
    }
}

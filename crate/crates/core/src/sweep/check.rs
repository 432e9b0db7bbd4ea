//! Self-check suites behind `fibgen check`.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use super::oracle::oracle_check;
use super::table::intro_table;
use crate::bounds::*;
use crate::primes::PrimeTable;

const TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckLimits {
    pub n_max: u64,
    pub d_max: u64,
}

impl Default for CheckLimits {
    fn default() -> Self {
        CheckLimits { n_max: 120, d_max: 240 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

fn suite(name: &'static str, f: impl FnOnce() -> Result<String, String>) -> SuiteResult {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    match outcome {
        Ok(detail) => SuiteResult { name, passed: true, detail, elapsed },
        Err(detail) => SuiteResult { name, passed: false, detail, elapsed },
    }
}

fn h(n: u64, d: u64) -> Hypersurface {
    Hypersurface::new(n, d).expect("positive n and d")
}

fn intro_table_suite() -> Result<String, String> {
    let pairs: Vec<(u64, u64)> =
        intro_table().iter().map(|r| (r.guaranteed_fibgen, r.prime)).collect();
    let expect = [(1, 3), (2, 5), (3, 7), (5, 11), (6, 13), (8, 17), (9, 19)];
    if pairs != expect {
        return Err(format!("rows {pairs:?} differ from {expect:?}"));
    }
    Ok("7 rows".into())
}

fn oracle_suite(limits: CheckLimits) -> Result<String, String> {
    let found = oracle_check(limits.n_max, limits.d_max);
    match found.first() {
        None => Ok(format!("n <= {}, d <= {}: no discrepancies", limits.n_max, limits.d_max)),
        Some(first) => Err(format!("{} discrepancies, first {first:?}", found.len())),
    }
}

fn identity_suite() -> Result<String, String> {
    let primes = PrimeTable::up_to(100);
    for n in 3..=100 {
        for g in 1..=20 {
            for p in primes.iter() {
                if !statement_proof_e_identity(n, g, p) {
                    return Err(format!("identity fails at n={n}, g={g}, p={p}"));
                }
            }
        }
    }
    Ok("n <= 100, g <= 20, p <= 100".into())
}

fn closed_form_suite(limits: CheckLimits) -> Result<String, String> {
    (3..=limits.n_max.max(3)).into_par_iter().try_for_each(|n| {
        for d in 1..=limits.d_max {
            let x = h(n, d);
            let cf = closed_form_bound(x).map_err(|e| e.to_string())?;
            let v = cf.value.approx();
            let Witness::Index { theta: Some(t), .. } = cf.witness else {
                return Err(format!("closed form at ({n},{d}) lacks theta"));
            };
            if (v - (t / 4.0 - 1.0)).abs() > TOL {
                return Err(format!("value != theta/4 - 1 at ({n},{d})"));
            }
            let j = jensen_bound(x).map_err(|e| e.to_string())?.value.approx();
            if j > v + TOL {
                return Err(format!("Jensen {j} exceeds closed form {v} at ({n},{d})"));
            }
            if let Some(b) = theorem_b_bound(x).map_err(|e| e.to_string())? {
                if b.value.approx() > v + TOL {
                    return Err(format!("near-index bound exceeds closed form at ({n},{d})"));
                }
            }
        }
        Ok(())
    })?;
    Ok("theta identity, Jensen and near-index dominance".into())
}

/// Tate threshold arithmetic for `1 ≤ g ≤ g_max`.
pub fn tate_suite(g_max: u64) -> Result<String, String> {
    let table = PrimeTable::up_to(2 * g_max + 200);
    let primes = table.as_slice();
    for g in 1..=g_max {
        let even = 2 * g + 2;
        if table.contains(even) {
            return Err(format!("{even} is prime"));
        }
        // the guarantee is false for every prime below 2g + 3 and true from there on
        let split = primes.partition_point(|&p| !tate_smooth_guarantee(g, p));
        if split > 0 && primes[split - 1] >= 2 * g + 3 {
            return Err(format!("guarantee fails above the threshold for g = {g}"));
        }
        if split < primes.len() && primes[split] < 2 * g + 3 {
            return Err(format!("guarantee holds below the threshold for g = {g}"));
        }
        if !primes[split..].iter().all(|&p| tate_smooth_guarantee(g, p)) {
            return Err(format!("guarantee not monotone for g = {g}"));
        }
        let p = 2 * g + 1;
        if table.contains(p) {
            let genus = sharpness_example_genus(SharpnessExample::Rosenlicht, p)
                .map_err(|e| e.to_string())?;
            if genus != g {
                return Err(format!("Rosenlicht genus at p = {p} is {genus}, expected {g}"));
            }
        }
    }
    Ok(format!("g <= {g_max}"))
}

/// Spot checks of the two headline thresholds for `3 ≤ n ≤ n_max`, with `d`
/// running from the threshold up to `3(n + 2)`.
pub fn threshold_suite(n_max: u64) -> Result<String, String> {
    let n_max = n_max.max(3);
    let engine = BoundEngine::new(default_sieve_limit(n_max, 3 * (n_max + 2)));
    (3..=n_max).into_par_iter().try_for_each(|n| {
        let genus_one = 5 * (n + 3).div_ceil(6);
        let conic = conic_bundle_threshold(n).map_err(|e| e.to_string())?;
        for d in conic.min(genus_one)..=3 * (n + 2) {
            let best = engine.combined_bound(h(n, d)).map_err(|e| e.to_string())?.best_lower;
            if d >= genus_one && best < 2 {
                return Err(format!("best lower {best} < 2 at ({n},{d})"));
            }
            if d >= conic && best < 1 {
                return Err(format!("best lower {best} < 1 at ({n},{d})"));
            }
        }
        Ok(())
    })?;
    Ok(format!("n <= {n_max}"))
}

/// Upper bound, monotonicity in `d`, and witness replay over the grid.
pub fn soundness_suite(limits: CheckLimits) -> Result<String, String> {
    let engine = BoundEngine::new(default_sieve_limit(limits.n_max, limits.d_max));
    (3..=limits.n_max.max(3)).into_par_iter().try_for_each(|n| {
        let mut previous = 0;
        for d in 1..=limits.d_max {
            let x = h(n, d);
            let report = engine.combined_bound(x).map_err(|e| e.to_string())?;
            let upper = ((d - 1) * (d.max(2) - 2) / 2) as i64;
            if report.best_lower > upper || !report.consistent() {
                return Err(format!("best lower {} exceeds {upper} at ({n},{d})", report.best_lower));
            }
            if report.best_lower < previous {
                return Err(format!("best lower decreases at ({n},{d})"));
            }
            previous = report.best_lower;
            for c in report.certificates() {
                c.replay(x).map_err(|e| e.to_string())?;
            }
        }
        Ok(())
    })?;
    Ok(format!("n <= {}, d <= {}", limits.n_max, limits.d_max))
}

/// Runs every suite; all must pass.
pub fn run_checks(limits: CheckLimits) -> Vec<SuiteResult> {
    vec![
        suite("intro-table", intro_table_suite),
        suite("oracle", || oracle_suite(limits)),
        suite("statement-proof-identity", identity_suite),
        suite("closed-form-dominance", || closed_form_suite(limits)),
        suite("tate-sharpness", || tate_suite(10_000)),
        suite("threshold-spot-checks", || threshold_suite(limits.n_max)),
        suite("soundness-chain", || soundness_suite(limits)),
    ]
}

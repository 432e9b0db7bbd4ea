use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{default_sieve_limit, BoundEngine, BoundKind, Hypersurface};
use crate::error::{Error, Result};

/// One `(n, d)` point of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridCell {
    pub n: u64,
    pub d: u64,
    pub best_lower: i64,
    pub best_kind: Option<BoundKind>,
    pub upper_genus: i64,
    /// Closed-form lower bound, rounded down to six decimals.
    pub closed_form: String,
}

fn validate(n_min: u64, n_max: u64, d_min: u64, d_max: u64) -> Result<()> {
    if n_min < 3 || n_min > n_max || d_min < 1 || d_min > d_max {
        return Err(Error::InvalidArgument(format!(
            "invalid grid rectangle n in [{n_min}, {n_max}], d in [{d_min}, {d_max}]; \
             need 3 <= n_min <= n_max and 1 <= d_min <= d_max"
        )));
    }
    Ok(())
}

/// Row-major (n outer, d inner) grid of combined bounds.
pub fn grid(n_min: u64, n_max: u64, d_min: u64, d_max: u64) -> Result<Vec<GridCell>> {
    validate(n_min, n_max, d_min, d_max)?;
    let engine = BoundEngine::new(default_sieve_limit(n_max, d_max));
    grid_with_engine(&engine, n_min, n_max, d_min, d_max)
}

pub fn grid_with_engine(
    engine: &BoundEngine,
    n_min: u64,
    n_max: u64,
    d_min: u64,
    d_max: u64,
) -> Result<Vec<GridCell>> {
    validate(n_min, n_max, d_min, d_max)?;
    let points: Vec<(u64, u64)> = (n_min..=n_max)
        .flat_map(|n| (d_min..=d_max).map(move |d| (n, d)))
        .collect();
    points
        .into_par_iter()
        .map(|(n, d)| {
            let report = engine.combined_bound(Hypersurface::new(n, d)?)?;
            let closed_form = report
                .find(BoundKind::ClosedForm)
                .map(|c| c.value.display())
                .unwrap_or_default();
            Ok(GridCell {
                n,
                d,
                best_lower: report.best_lower,
                best_kind: report.best_kind(),
                upper_genus: report.upper_genus.integer_value,
                closed_form,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell() {
        let g = grid(3, 3, 5, 5).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!((g[0].best_lower, g[0].upper_genus), (2, 6));
        assert_eq!(g[0].closed_form, "-0.472954");
    }

    #[test]
    fn vacuous_corner() {
        let g = grid(3, 4, 1, 2).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.iter().all(|c| c.best_lower == 0 && c.best_kind.is_none()));
        let order: Vec<(u64, u64)> = g.iter().map(|c| (c.n, c.d)).collect();
        assert_eq!(order, vec![(3, 1), (3, 2), (4, 1), (4, 2)]);
    }

    #[test]
    fn invalid_rectangles() {
        assert!(grid(2, 4, 1, 2).is_err());
        assert!(grid(5, 4, 1, 2).is_err());
        assert!(grid(3, 4, 0, 2).is_err());
        assert!(grid(3, 4, 3, 2).is_err());
    }

    #[test]
    fn deterministic_and_sound() {
        let a = grid(3, 30, 1, 60).unwrap();
        let b = grid(3, 30, 1, 60).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|c| c.best_lower <= c.upper_genus));
    }
}

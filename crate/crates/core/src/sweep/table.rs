use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::threshold_witness;
use crate::numeric::ceil_div;
use crate::primes::PrimeTable;

/// Largest prime listed in the intro table.
pub const TABLE_MAX_PRIME: u64 = 19;

/// `d_min(n) = prime·⌈(n + offset)/(prime + 1)⌉`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactThreshold {
    pub prime: u64,
    pub offset: u64,
}

impl ExactThreshold {
    pub fn at(&self, n: u64) -> u64 {
        self.prime * ceil_div(n + self.offset, self.prime + 1).expect("prime + 1 > 0")
    }
}

impl fmt::Display for ExactThreshold {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*ceil((n+{})/{})", self.prime, self.offset, self.prime + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub guaranteed_fibgen: u64,
    pub prime: u64,
    pub asymptotic_degree_numerator: u64,
    pub asymptotic_degree_denominator: u64,
    pub exact_threshold: ExactThreshold,
}

impl TableRow {
    pub fn asymptotic_ratio(&self) -> f64 {
        self.asymptotic_degree_numerator as f64 / self.asymptotic_degree_denominator as f64
    }
}

/// Degree thresholds guaranteeing `fib.gen ≥ g + 1` for each odd prime up to
/// [`TABLE_MAX_PRIME`], using the largest genus the prime admits
/// (`p ≥ 2g + 3`). For `p = 3` this is the conic-bundle threshold.
pub fn intro_table() -> Vec<TableRow> {
    PrimeTable::up_to(TABLE_MAX_PRIME)
        .iter()
        .filter(|&p| p >= 3)
        .map(|p| {
            let g = (p - 3) / 2;
            let (fibgen, offset) = if g == 0 {
                // 3⌈(n+3)/4⌉ is the p = 3, r = 2 instance of p⌈(n+r+1)/(p+1)⌉
                (1, 3)
            } else {
                // the witness e is built from r = ⌊(g+3)/2⌋, with offset r + 1
                (g + 1, threshold_witness(3, g, p).r + 1)
            };
            TableRow {
                guaranteed_fibgen: fibgen,
                prime: p,
                asymptotic_degree_numerator: p,
                asymptotic_degree_denominator: p + 1,
                exact_threshold: ExactThreshold { prime: p, offset },
            }
        })
        .collect()
}

//! Sweeps over `(n, d)`: the intro table, Figure-style grids, and the
//! brute-force oracle used for cross-checking the optimizers.

mod check;
mod grid;
pub mod oracle;
mod table;

pub use check::{run_checks, CheckLimits, SuiteResult};
pub use grid::{grid, grid_with_engine, GridCell};
pub use oracle::{oracle_check, Discrepancy};
pub use table::{intro_table, ExactThreshold, TableRow, TABLE_MAX_PRIME};

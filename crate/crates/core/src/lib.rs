//! Certified bounds on the fibering genus of very general hypersurfaces
//! `X_{n,d} ⊂ P^{n+1}`.
//!
//! Every bound is returned as a [`BoundCertificate`] carrying the exact value,
//! its integerization and a witness that can be replayed against `(n, d)`.
//! Rational bounds are computed exactly; bounds involving square roots are
//! integerized with exact surd comparisons and only approximated in floating
//! point for display.
//!
//! The numeric layer is generic over the scalar type (`num-traits`); the
//! aliases below fix the concrete types used by the bound machinery.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod numeric;
pub mod primes;
pub mod sweep;

pub use bounds::{
    BoundCertificate, BoundEngine, BoundKind, Direction, Hypersurface, Hypothesis, Report, Witness,
};
pub use error::{Error, Result};
pub use primes::PrimeTable;

/// Exact rational used for every rational-valued bound.
pub type Rat = numeric::Rational<i64>;

/// Wide exact rational, useful for intermediate products.
pub type Rat128 = numeric::Rational<i128>;

/// Floating-point type of the closed-form approximations.
pub type Real = f64;

//! Exact Ward polynomials, Thron-type continued fractions, and the matching,
//! path and tree bijections behind them.

pub mod contfrac;
pub mod error;
pub mod eulerian;
pub mod hankel;
pub mod matchings;
pub mod paths;
pub mod poly;
pub mod scalar;
pub mod trees;
pub mod ward;

pub use error::{Error, Result};
pub use poly::{Monomial, Poly, PowerSeries, VarId};

/// Coefficient field used throughout the library.
pub type Rational = num_rational::BigRational;
/// Polynomial with rational coefficients.
pub type Polynomial = Poly<Rational>;
/// Truncated power series in `t` with rational polynomial coefficients.
pub type Series = PowerSeries<Rational>;

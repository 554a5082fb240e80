//! Sparse multivariate polynomials and truncated power series.

mod monomial;
mod polynomial;
mod series;
mod text;
mod var;

pub use monomial::Monomial;
pub use polynomial::Poly;
pub use series::PowerSeries;
pub use var::{VarId, SERIES_VAR};

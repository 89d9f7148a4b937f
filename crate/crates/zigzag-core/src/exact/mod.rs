//! Exact arithmetic: polynomials, bivariate and noncommutative polynomials,
//! and truncated power series over big integers and rationals.

mod bipoly;
mod ncpoly;
mod poly;
mod qint;
mod series;

pub use bipoly::BiPoly;
pub use ncpoly::{Alphabet, NcPoly};
pub use poly::{big_ratio, binomial, factorial, to_usize, Coeff, Poly, Var};
pub use qint::{q_factorial, q_int};
pub use series::{ratio, Series, SeriesError};

use num::bigint::BigInt;
use num::rational::BigRational;

/// Integer-coefficient polynomial in a single tagged variable.
pub type IntPoly = Poly<BigInt>;

/// Rational-coefficient polynomial in a single tagged variable.
pub type QPoly = Poly<BigRational>;

/// Truncated power series with rational coefficients.
pub type Series1 = Series<BigRational>;

/// Truncated power series in `u` whose coefficients are polynomials in `t`.
pub type Series2 = Series<QPoly>;

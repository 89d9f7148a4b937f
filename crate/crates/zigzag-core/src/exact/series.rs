//! Truncated power series over an exact coefficient ring.
//!
//! A series of order `N` stores the coefficients of `x^0 .. x^N` exactly.
//! Binary operations insist on equal orders; mixing orders silently would
//! blur how far an identity has actually been checked.

use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;
use thiserror::Error;

use super::poly::{Coeff, Poly};
use super::QPoly;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("cannot divide: constant term {term} is not a unit")]
    NonUnitConstant { term: String },
    #[error("cannot compose: inner constant term {term} is nonzero")]
    InnerConstant { term: String },
    #[error("cannot take log: constant term {term} is not 1")]
    LogConstant { term: String },
    #[error("cannot take exp: constant term {term} is not 0")]
    ExpConstant { term: String },
}

/// Power series truncated after `x^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series<R> {
    order: usize,
    c: Vec<R>,
}

impl<R: Coeff> Series<R> {
    pub fn zero(order: usize) -> Self {
        Series { order, c: vec![R::zero(); order + 1] }
    }

    pub fn constant(order: usize, value: R) -> Self {
        let mut s = Self::zero(order);
        s.c[0] = value;
        s
    }

    pub fn monomial(order: usize, coeff: R, degree: usize) -> Self {
        assert!(degree <= order, "monomial degree {degree} exceeds order {order}");
        let mut s = Self::zero(order);
        s.c[degree] = coeff;
        s
    }

    /// Builds a series from explicit low-order coefficients, padding with
    /// zeros. Panics if more than `order + 1` coefficients are supplied.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<R>) -> Self {
        assert!(coeffs.len() <= order + 1, "too many coefficients for order {order}");
        coeffs.resize(order + 1, R::zero());
        Series { order, c: coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, k: usize) -> &R {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.c.iter().position(|c| !c.is_zero())
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series { order: self.order, c: self.c.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c.clone())
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order, "cannot extend order {} to {}", self.order, order);
        Series { order, c: self.c[..=order].to_vec() }
    }

    fn same_order(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.order == rhs.order {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch { left: self.order, right: rhs.order })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.same_order(rhs)?;
        let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a.clone() + b.clone()).collect();
        Ok(Series { order: self.order, c })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.same_order(rhs)?;
        let c = self.c.iter().zip(&rhs.c).map(|(a, b)| a.clone() - b.clone()).collect();
        Ok(Series { order: self.order, c })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.same_order(rhs)?;
        let mut c = vec![R::zero(); self.order + 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().take(self.order + 1 - i).enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Series { order: self.order, c })
    }

    pub fn pow(&self, e: usize) -> Result<Self, SeriesError> {
        let mut acc = Self::constant(self.order, R::one());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Truncated division; the divisor's constant term must be a unit.
    pub fn div(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.same_order(rhs)?;
        let inv0 = rhs.c[0]
            .try_inverse()
            .ok_or_else(|| SeriesError::NonUnitConstant { term: rhs.c[0].describe() })?;
        let mut q = vec![R::zero(); self.order + 1];
        for k in 0..=self.order {
            let mut acc = self.c[k].clone();
            for j in 0..k {
                acc = acc - q[j].clone() * rhs.c[k - j].clone();
            }
            q[k] = acc * inv0.clone();
        }
        Ok(Series { order: self.order, c: q })
    }

    /// Derivative; the result's order drops by one.
    pub fn derivative(&self) -> Self {
        assert!(self.order >= 1, "cannot differentiate an order-0 series");
        let c = (1..=self.order).map(|k| self.c[k].clone() * R::from_u64(k as u64)).collect();
        Series { order: self.order - 1, c }
    }

    /// `x * d/dx`, which preserves the order.
    pub fn x_times_derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .map(|(k, ck)| ck.clone() * R::from_u64(k as u64))
            .collect();
        Series { order: self.order, c }
    }

    /// Antiderivative vanishing at 0; the result's order grows by one.
    pub fn integral(&self) -> Self {
        let mut c = vec![R::zero()];
        for (k, ck) in self.c.iter().enumerate() {
            c.push(ck.div_exact_u64(k as u64 + 1));
        }
        Series { order: self.order + 1, c }
    }

    /// Substitution of `inner` (constant term 0) into `self`, by Horner.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.same_order(inner)?;
        if !inner.c[0].is_zero() {
            return Err(SeriesError::InnerConstant { term: inner.c[0].describe() });
        }
        let mut acc = Self::constant(self.order, self.c[self.order].clone());
        for k in (0..self.order).rev() {
            acc = acc.mul(inner)?;
            acc.c[0] = acc.c[0].clone() + self.c[k].clone();
        }
        Ok(acc)
    }

    /// Exponential of a series with constant term 0.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.c[0].is_zero() {
            return Err(SeriesError::ExpConstant { term: self.c[0].describe() });
        }
        let mut g = vec![R::zero(); self.order + 1];
        g[0] = R::one();
        for n in 1..=self.order {
            let mut acc = R::zero();
            for k in 1..=n {
                acc = acc + R::from_u64(k as u64) * self.c[k].clone() * g[n - k].clone();
            }
            g[n] = acc.div_exact_u64(n as u64);
        }
        Ok(Series { order: self.order, c: g })
    }

    /// Logarithm of a series with constant term 1, via `log f = ∫ f'/f`.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.c[0].is_one() {
            return Err(SeriesError::LogConstant { term: self.c[0].describe() });
        }
        if self.order == 0 {
            return Ok(Self::zero(0));
        }
        let ratio = self.derivative().div(&self.truncate(self.order - 1))?;
        Ok(ratio.integral())
    }
}

impl Series<BigRational> {
    /// Embeds rational coefficients into a richer coefficient ring.
    pub fn lift<R: Coeff>(&self) -> Series<R> {
        self.map(R::from_rational)
    }

    /// Serialization: each coefficient as an exact `[numerator, denominator]`
    /// pair of decimal strings.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .c
            .iter()
            .map(|c| serde_json::json!([c.numer().to_string(), c.denom().to_string()]))
            .collect();
        serde_json::json!({ "order": self.order, "coeffs": coeffs })
    }
}

impl Series<QPoly> {
    /// Derivative of every coefficient with respect to the polynomial variable.
    pub fn coeff_derivative(&self) -> Self {
        self.map(Poly::derivative)
    }

    /// Truncates every coefficient polynomial to degree `d`. Used when
    /// coefficients live in the quotient by a power of the variable.
    pub fn truncate_coeff_deg(&self, d: usize) -> Self {
        self.map(|p| p.truncate_deg(d))
    }

    /// Evaluates every coefficient polynomial at a rational point, collapsing
    /// to a plain rational series.
    pub fn eval_coeff(&self, x: &BigRational) -> Series<BigRational> {
        self.map(|p| p.eval(x))
    }
}

impl<R: Coeff> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({})", c.describe())?,
                1 => write!(f, "({})x", c.describe())?,
                _ => write!(f, "({})x^{k}", c.describe())?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

/// Rational constant helper for series construction.
pub fn ratio(num: &BigInt, den: &BigInt) -> BigRational {
    BigRational::new(num.clone(), den.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{factorial, Var};
    use num::traits::One;

    fn q(num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// exp(x) to the given order, from scratch.
    fn exp_x(order: usize) -> Series<BigRational> {
        Series::from_coeffs(
            order,
            (0..=order as u64).map(|n| ratio(&BigInt::one(), &factorial(n))).collect(),
        )
    }

    #[test]
    fn mul_and_div_are_inverse() {
        let e = exp_x(10);
        let inv = Series::constant(10, q(1, 1)).div(&e).unwrap();
        let prod = e.mul(&inv).unwrap();
        assert_eq!(prod, Series::constant(10, q(1, 1)));
    }

    #[test]
    fn mixed_orders_are_refused() {
        let a = exp_x(5);
        let b = exp_x(6);
        assert_eq!(a.add(&b), Err(SeriesError::OrderMismatch { left: 5, right: 6 }));
    }

    #[test]
    fn division_by_non_unit_names_the_term() {
        let x = Series::monomial(4, q(1, 1), 1);
        let err = Series::constant(4, q(1, 1)).div(&x).unwrap_err();
        assert_eq!(err, SeriesError::NonUnitConstant { term: "0".into() });
    }

    #[test]
    fn exp_log_round_trip() {
        let f = Series::monomial(8, q(1, 1), 1)
            .add(&Series::monomial(8, q(-3, 7), 5))
            .unwrap();
        let g = f.exp().unwrap();
        assert_eq!(g.log().unwrap(), f);
    }

    #[test]
    fn exp_of_x_matches_closed_form() {
        let x = Series::monomial(9, q(1, 1), 1);
        assert_eq!(x.exp().unwrap(), exp_x(9));
    }

    #[test]
    fn log_requires_constant_one() {
        let err = Series::constant(3, q(2, 1)).log().unwrap_err();
        assert_eq!(err, SeriesError::LogConstant { term: "2".into() });
    }

    #[test]
    fn exp_requires_constant_zero() {
        let err = Series::constant(3, q(1, 1)).exp().unwrap_err();
        assert_eq!(err, SeriesError::ExpConstant { term: "1".into() });
    }

    #[test]
    fn composition_substitutes() {
        // exp(2x) via composition.
        let e = exp_x(7);
        let inner = Series::monomial(7, q(2, 1), 1);
        let composed = e.compose(&inner).unwrap();
        for k in 0..=7u64 {
            let expected = ratio(&BigInt::from(2u32).pow(k as u32), &factorial(k));
            assert_eq!(composed.coeff(k as usize), &expected);
        }
    }

    #[test]
    fn composition_requires_zero_inner_constant() {
        let e = exp_x(4);
        let err = e.compose(&Series::constant(4, q(1, 1))).unwrap_err();
        assert_eq!(err, SeriesError::InnerConstant { term: "1".into() });
    }

    #[test]
    fn derivative_and_integral() {
        let e = exp_x(6);
        assert_eq!(e.derivative(), exp_x(5));
        assert_eq!(e.derivative().integral().coeff(3), &q(1, 6));
        assert_eq!(e.x_times_derivative().coeff(3), &q(3, 6));
    }

    #[test]
    fn polynomial_coefficients_compose() {
        // Series in u with coefficients in t: exp(u(t-1)), u-order 5.
        let t_minus_1 = Poly::from_coeffs(Var::T, vec![q(-1, 1), q(1, 1)]);
        let inner = Series::monomial(5, t_minus_1.clone(), 1);
        let e = inner.exp().unwrap();
        // Coefficient of u^2 is (t-1)^2/2.
        let expected = (&t_minus_1 * &t_minus_1).map(|c| c.div_exact_u64(2));
        assert_eq!(e.coeff(2), &expected);
        // Evaluating t at 1 collapses to the constant series 1.
        assert!(e.eval_coeff(&q(1, 1)).sub(&Series::constant(5, q(1, 1))).unwrap().is_zero());
    }

    #[test]
    fn json_shape() {
        let v = exp_x(2).to_json();
        assert_eq!(v["order"], 2);
        assert_eq!(v["coeffs"][2][1], "2");
    }
}

//! Dense univariate polynomials over an exact coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, ToPrimitive, Zero};

/// Variable tag carried by a polynomial for display and serialization.
///
/// `Any` is the tag of bare constants produced by [`Zero::zero`] and
/// [`One::one`]; arithmetic unifies it with the other operand's tag.
/// Combining two polynomials with distinct concrete tags is a programming
/// error and panics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    T,
    Q,
    M,
    U,
    X,
    Any,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Q => "q",
            Var::M => "m",
            Var::U => "u",
            Var::X => "x",
            Var::Any => "_",
        }
    }

    fn unify(self, other: Var) -> Var {
        match (self, other) {
            (Var::Any, v) => v,
            (v, Var::Any) => v,
            (a, b) if a == b => a,
            (a, b) => panic!("mixed polynomial variables {} and {}", a.symbol(), b.symbol()),
        }
    }
}

/// Coefficient ring for polynomials and truncated series.
///
/// The arithmetic bounds come from `num-traits`; the extra methods supply the
/// exact conversions and partial inversion the series algorithms need.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn from_u64(u: u64) -> Self;

    /// Embeds an exact rational. Panics if the ring cannot represent it.
    fn from_rational(r: &BigRational) -> Self;

    /// Division by a positive integer, asserted exact.
    fn div_exact_u64(&self, d: u64) -> Self;

    /// Multiplicative inverse, if this element is a unit.
    fn try_inverse(&self) -> Option<Self>;

    /// Rendering used inside error messages and series displays.
    fn describe(&self) -> String;
}

impl Coeff for BigInt {
    fn from_u64(u: u64) -> Self {
        BigInt::from(u)
    }

    fn from_rational(r: &BigRational) -> Self {
        assert!(r.is_integer(), "rational {} is not an integer", r);
        r.to_integer()
    }

    fn div_exact_u64(&self, d: u64) -> Self {
        let d = BigInt::from(d);
        let (q, r) = num::Integer::div_rem(self, &d);
        assert!(r.is_zero(), "non-exact integer division of {} by {}", self, d);
        q
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_one() || (-self).is_one() {
            Some(self.clone())
        } else {
            None
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

impl Coeff for BigRational {
    fn from_u64(u: u64) -> Self {
        BigRational::from_integer(BigInt::from(u))
    }

    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn div_exact_u64(&self, d: u64) -> Self {
        self / BigRational::from_integer(BigInt::from(d))
    }

    fn try_inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

/// Dense polynomial with ascending coefficients and no trailing zeros.
#[derive(Clone, Debug)]
pub struct Poly<R> {
    var: Var,
    c: Vec<R>,
}

impl<R: Coeff> Poly<R> {
    pub fn from_coeffs(var: Var, coeffs: Vec<R>) -> Self {
        let mut p = Poly { var, c: coeffs };
        p.trim();
        p
    }

    pub fn constant(var: Var, value: R) -> Self {
        Self::from_coeffs(var, vec![value])
    }

    pub fn monomial(var: Var, coeff: R, degree: usize) -> Self {
        let mut c = vec![R::zero(); degree + 1];
        c[degree] = coeff;
        Self::from_coeffs(var, c)
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(Zero::is_zero) {
            self.c.pop();
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.c.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn leading(&self) -> Option<&R> {
        self.c.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|l| l.is_one())
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> Poly<S> {
        Poly::from_coeffs(self.var, self.c.iter().map(f).collect())
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.c.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Derivative with respect to the polynomial's own variable.
    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, ck)| ck.clone() * R::from_u64(k as u64))
            .collect();
        Self::from_coeffs(self.var, c)
    }

    /// Multiplication by `var^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.c.is_empty() {
            return self.clone();
        }
        let mut c = vec![R::zero(); k];
        c.extend(self.c.iter().cloned());
        Self::from_coeffs(self.var, c)
    }

    /// Division by `var^k`, asserted exact (the low `k` coefficients must vanish).
    pub fn shift_down_exact(&self, k: usize) -> Self {
        assert!(
            self.c.iter().take(k).all(Zero::is_zero),
            "polynomial is not divisible by {}^{}",
            self.var.symbol(),
            k
        );
        if self.c.len() <= k {
            return Self::from_coeffs(self.var, Vec::new());
        }
        Self::from_coeffs(self.var, self.c[k..].to_vec())
    }

    /// Drops all terms of degree greater than `d`.
    pub fn truncate_deg(&self, d: usize) -> Self {
        Self::from_coeffs(self.var, self.c.iter().take(d + 1).cloned().collect())
    }

    /// Coefficient list reversed relative to degree `d`; fails if the
    /// polynomial has degree above `d`.
    pub fn reversed_to_degree(&self, d: usize) -> Option<Self> {
        if self.degree().is_some_and(|deg| deg > d) {
            return None;
        }
        let c = (0..=d).rev().map(|k| self.coeff(k)).collect();
        Some(Self::from_coeffs(self.var, c))
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(self.var, R::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

}

impl Poly<BigInt> {
    /// Serialization: ascending coefficients as decimal strings, so arbitrary
    /// magnitudes survive JSON round-trips.
    pub fn to_json(&self) -> serde_json::Value {
        assert!(self.var != Var::Any, "cannot serialize a polynomial without a variable tag");
        serde_json::json!({
            "variable": self.var.symbol(),
            "coefficients": self.c.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl<R: Coeff> PartialEq for Poly<R> {
    fn eq(&self, other: &Self) -> bool {
        if self.c != other.c {
            return false;
        }
        self.var == other.var || self.var == Var::Any || other.var == Var::Any
    }
}

impl<R: Coeff> Eq for Poly<R> {}

impl<'a, R: Coeff> Add for &'a Poly<R> {
    type Output = Poly<R>;

    fn add(self, rhs: Self) -> Poly<R> {
        let var = self.var.unify(rhs.var);
        let n = self.c.len().max(rhs.c.len());
        let c = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(var, c)
    }
}

impl<'a, R: Coeff> Sub for &'a Poly<R> {
    type Output = Poly<R>;

    fn sub(self, rhs: Self) -> Poly<R> {
        let var = self.var.unify(rhs.var);
        let n = self.c.len().max(rhs.c.len());
        let c = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::from_coeffs(var, c)
    }
}

impl<'a, R: Coeff> Mul for &'a Poly<R> {
    type Output = Poly<R>;

    fn mul(self, rhs: Self) -> Poly<R> {
        let var = self.var.unify(rhs.var);
        if self.c.is_empty() || rhs.c.is_empty() {
            return Poly::from_coeffs(var, Vec::new());
        }
        let mut c = vec![R::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in rhs.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(var, c)
    }
}

impl<'a, R: Coeff> Neg for &'a Poly<R> {
    type Output = Poly<R>;

    fn neg(self) -> Poly<R> {
        self.map(|c| -c.clone())
    }
}

impl<R: Coeff> Add for Poly<R> {
    type Output = Poly<R>;
    fn add(self, rhs: Self) -> Poly<R> {
        &self + &rhs
    }
}

impl<R: Coeff> Sub for Poly<R> {
    type Output = Poly<R>;
    fn sub(self, rhs: Self) -> Poly<R> {
        &self - &rhs
    }
}

impl<R: Coeff> Mul for Poly<R> {
    type Output = Poly<R>;
    fn mul(self, rhs: Self) -> Poly<R> {
        &self * &rhs
    }
}

impl<R: Coeff> Neg for Poly<R> {
    type Output = Poly<R>;
    fn neg(self) -> Poly<R> {
        -&self
    }
}

impl<R: Coeff> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { var: Var::Any, c: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }
}

impl<R: Coeff> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(Var::Any, R::one())
    }
}

impl Coeff for Poly<BigRational> {
    fn from_u64(u: u64) -> Self {
        Poly::constant(Var::Any, BigRational::from_u64(u))
    }

    fn from_rational(r: &BigRational) -> Self {
        Poly::constant(Var::Any, r.clone())
    }

    fn div_exact_u64(&self, d: u64) -> Self {
        self.map(|c| c.div_exact_u64(d))
    }

    fn try_inverse(&self) -> Option<Self> {
        // Units of the rational polynomial ring are the nonzero constants.
        match self.degree() {
            Some(0) => self.c[0].try_inverse().map(|i| Poly::constant(self.var, i)),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

fn coeff_str<R: Coeff>(c: &R) -> (bool, String) {
    let s = c.describe();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

impl<R: Coeff> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let sym = self.var.symbol();
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) = coeff_str(c);
            if first {
                if negative {
                    write!(f, "-")?;
                }
                first = false;
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = mag == "1";
            match (k, coeff_is_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{sym}")?,
                (1, false) => write!(f, "{mag}{sym}")?,
                (_, true) => write!(f, "{sym}^{k}")?,
                (_, false) => write!(f, "{mag}{sym}^{k}")?,
            }
        }
        Ok(())
    }
}

/// Binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num::integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// Factorial as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Exact conversion helpers for rationals appearing in frozen expectations.
pub fn big_ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Converts a big integer to `usize`, panicking on overflow.
pub fn to_usize(value: &BigInt) -> usize {
    assert!(!value.is_negative(), "negative count {}", value);
    value.to_usize().expect("count exceeds usize range")
}

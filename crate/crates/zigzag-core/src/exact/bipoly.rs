//! Bivariate polynomials in `t` and `q` with big-integer coefficients,
//! stored sparsely with no zero terms.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::traits::Zero;

use super::poly::{Poly, Var};
use super::IntPoly;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(t: u32, q: u32, c: BigInt) -> Self {
        let mut p = Self::new();
        p.add_term(t, q, c);
        p
    }

    /// Adds `c * t^te * q^qe`, dropping the entry if it cancels to zero.
    pub fn add_term(&mut self, te: u32, qe: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((te, qe)).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(te, qe));
        }
    }

    pub fn coeff(&self, te: u32, qe: u32) -> BigInt {
        self.terms.get(&(te, qe)).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(te, qe), c) in &rhs.terms {
            out.add_term(te, qe, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::new();
        for (&(t1, q1), c1) in &self.terms {
            for (&(t2, q2), c2) in &rhs.terms {
                out.add_term(t1 + t2, q1 + q2, c1 * c2);
            }
        }
        out
    }

    /// Sets `t = 1`, leaving a polynomial in `q`.
    pub fn eval_t_one(&self) -> IntPoly {
        let mut acc: IntPoly = Poly::from_coeffs(Var::Q, Vec::new());
        for (&(_, qe), c) in &self.terms {
            acc = &acc + &Poly::monomial(Var::Q, c.clone(), qe as usize);
        }
        acc
    }

    /// Sets `q = 1`, leaving a polynomial in `t`.
    pub fn eval_q_one(&self) -> IntPoly {
        let mut acc: IntPoly = Poly::from_coeffs(Var::T, Vec::new());
        for (&(te, _), c) in &self.terms {
            acc = &acc + &Poly::monomial(Var::T, c.clone(), te as usize);
        }
        acc
    }

    /// Restricts to terms with `t`-exponent 0, read as a polynomial in `q`.
    pub fn at_t_zero(&self) -> IntPoly {
        let mut acc: IntPoly = Poly::from_coeffs(Var::Q, Vec::new());
        for (&(te, qe), c) in &self.terms {
            if te == 0 {
                acc = &acc + &Poly::monomial(Var::Q, c.clone(), qe as usize);
            }
        }
        acc
    }

    /// Restricts to terms with `q`-exponent 0, read as a polynomial in `t`.
    pub fn at_q_zero(&self) -> IntPoly {
        let mut acc: IntPoly = Poly::from_coeffs(Var::T, Vec::new());
        for (&(te, qe), c) in &self.terms {
            if qe == 0 {
                acc = &acc + &Poly::monomial(Var::T, c.clone(), te as usize);
            }
        }
        acc
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(&(te, qe), c)| serde_json::json!({ "t": te, "q": qe, "c": c.to_string() }))
            .collect();
        serde_json::json!({ "vars": ["t", "q"], "terms": terms })
    }
}

fn power(f: &mut fmt::Formatter<'_>, sym: &str, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, " {sym}"),
        _ => write!(f, " {sym}^{e}"),
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&(te, qe), c)) in self.terms.iter().enumerate() {
            let mag = c.magnitude().to_string();
            if i == 0 {
                if c.sign() == num::bigint::Sign::Minus {
                    write!(f, "-")?;
                }
            } else if c.sign() == num::bigint::Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag != "1" || (te == 0 && qe == 0) {
                write!(f, "{mag}")?;
            }
            power(f, "t", te)?;
            power(f, "q", qe)?;
        }
        Ok(())
    }
}

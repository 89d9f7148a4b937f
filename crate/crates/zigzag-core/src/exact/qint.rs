//! q-integers and q-factorials.

use num::bigint::BigInt;
use num::traits::One;

use super::poly::{Poly, Var};
use super::IntPoly;

/// `[k]_q = 1 + q + ... + q^(k-1)`; the empty sum for `k = 0`.
pub fn q_int(k: usize) -> IntPoly {
    Poly::from_coeffs(Var::Q, vec![BigInt::one(); k])
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: usize) -> IntPoly {
    let mut acc = Poly::constant(Var::Q, BigInt::one());
    for k in 1..=n {
        acc = &acc * &q_int(k);
    }
    acc
}

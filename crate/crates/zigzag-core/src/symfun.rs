//! Compositions, partitions, and evaluations of symmetric-function sums at
//! `m` equal variables. Everything downstream of a formal series
//! `f(x) = 1 + sum a_n x^n / n!` is represented through these evaluations,
//! which are polynomials or rationals in `m`.

use num::traits::{One, Zero};
use num::{BigInt, BigRational};
use thiserror::Error;

use crate::enumerate::euler_numbers;
use crate::exact::{binomial, factorial, ratio, Coeff, IntPoly, Poly, Series, Var};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SymfunError {
    #[error("subset {subset:?} is not strictly increasing within 1..={max}")]
    BadSubset { subset: Vec<usize>, max: usize },
    #[error("series coefficients reach order {have}, needed {need}")]
    OrderTooSmall { need: usize, have: usize },
}

/// Ordered sequences of positive parts summing to `n`; `2^(n-1)` of them.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Weakly decreasing part sequences summing to `n`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            rec(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions all of whose parts are odd.
pub fn odd_partitions(n: usize) -> Vec<Vec<usize>> {
    partitions(n).into_iter().filter(|l| l.iter().all(|p| p % 2 == 1)).collect()
}

/// Centralizer size: product over part values `i` of `i^{r_i} r_i!` where
/// `r_i` is the multiplicity of `i`.
pub fn z_lambda(lambda: &[usize]) -> BigInt {
    let mut z = BigInt::one();
    let mut run = 0u64;
    for (idx, &part) in lambda.iter().enumerate() {
        run += 1;
        let end_of_run = idx + 1 == lambda.len() || lambda[idx + 1] != part;
        if end_of_run {
            let p = BigInt::from(part);
            z *= num::pow::pow(p, run as usize) * factorial(run);
            run = 0;
        }
    }
    z
}

/// Composition of `n` cut at the positions in `s`:
/// `(s1, s2-s1, ..., n-sk)`.
pub fn co(s: &[usize], n: usize) -> Result<Vec<usize>, SymfunError> {
    let max = n.saturating_sub(1);
    let increasing = s.windows(2).all(|w| w[0] < w[1]);
    if !increasing || s.iter().any(|&x| x == 0 || x > max) {
        return Err(SymfunError::BadSubset { subset: s.to_vec(), max });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut parts = Vec::with_capacity(s.len() + 1);
    let mut prev = 0;
    for &x in s {
        parts.push(x - prev);
        prev = x;
    }
    parts.push(n - prev);
    Ok(parts)
}

/// Cut positions of a composition: partial sums without the final total;
/// inverse of `co`.
pub fn composition_to_set(gamma: &[usize]) -> Vec<usize> {
    gamma[..gamma.len().saturating_sub(1)]
        .iter()
        .scan(0, |acc, &p| {
            *acc += p;
            Some(*acc)
        })
        .collect()
}

/// `n! / (g_1! g_2! ...)` for parts summing to `n`.
pub fn multinomial(n: usize, gamma: &[usize]) -> BigInt {
    assert_eq!(gamma.iter().sum::<usize>(), n, "parts must sum to {n}");
    let mut result = factorial(n as u64);
    for &g in gamma {
        result /= factorial(g as u64);
    }
    result
}

/// Multinomial coefficient weighted by one zigzag count per part.
pub fn multinomial_e(n: usize, gamma: &[usize]) -> BigInt {
    let euler = euler_numbers(gamma.iter().copied().max().unwrap_or(0));
    let mut result = multinomial(n, gamma);
    for &g in gamma {
        result *= &euler[g];
    }
    result
}

/// Monomial quasisymmetric evaluation at `m` ones: `binomial(m, parts)`.
pub fn m_gamma_at_ones(gamma: &[usize], m: usize) -> BigInt {
    binomial(m as u64, gamma.len() as u64)
}

/// The three exponential series the evaluations specialize.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    /// `exp(x)`: every `a_n = 1`.
    Exp,
    /// `tan(x) + sec(x)`: `a_n` is the zigzag count.
    TanSec,
    /// `1/(1-x)`: `a_n = n!`.
    Geometric,
}

/// A series `f(x) = 1 + sum a_n x^n / n!` together with the coefficients
/// `b_n` of `ln f`, computed once by exact truncated logarithm.
pub struct SeriesSpec {
    kind: SeriesKind,
    a: Vec<BigRational>,
    b: Vec<BigRational>,
}

impl SeriesSpec {
    pub fn new(kind: SeriesKind, order: usize) -> Self {
        let a: Vec<BigRational> = match kind {
            SeriesKind::Exp => (0..=order).map(|_| BigRational::one()).collect(),
            SeriesKind::TanSec => euler_numbers(order).iter().map(|e| ratio(e, &BigInt::one())).collect(),
            SeriesKind::Geometric => (0..=order as u64).map(|n| ratio(&factorial(n), &BigInt::one())).collect(),
        };
        let f = Series::from_coeffs(
            order,
            a.iter()
                .enumerate()
                .map(|(n, an)| an / ratio(&factorial(n as u64), &BigInt::one()))
                .collect(),
        );
        let log = f.log().expect("constant term 1");
        let b: Vec<BigRational> = (0..=order)
            .map(|n| log.coeff(n) * ratio(&factorial(n as u64), &BigInt::one()))
            .collect();
        SeriesSpec { kind, a, b }
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    /// Coefficient `a_k` of `f`.
    pub fn a(&self, k: usize) -> Result<BigRational, SymfunError> {
        self.a.get(k).cloned().ok_or(SymfunError::OrderTooSmall { need: k, have: self.order() })
    }

    /// Coefficient `b_k` of `ln f`.
    pub fn b(&self, k: usize) -> Result<BigRational, SymfunError> {
        self.b.get(k).cloned().ok_or(SymfunError::OrderTooSmall { need: k, have: self.order() })
    }
}

fn big(n: usize) -> BigRational {
    ratio(&BigInt::from(n), &BigInt::one())
}

/// Composition-sum evaluation:
/// `sum over gamma of multinomial(n, gamma) * prod a_{g} * binomial(m, len)`.
pub fn g_at_ones_via_compositions(
    spec: &SeriesSpec,
    n: usize,
    m: usize,
) -> Result<BigRational, SymfunError> {
    let mut total = BigRational::zero();
    for gamma in compositions(n) {
        let mut term = ratio(&multinomial(n, &gamma), &BigInt::one());
        for &g in &gamma {
            term *= spec.a(g)?;
        }
        term *= ratio(&m_gamma_at_ones(&gamma, m), &BigInt::one());
        total += term;
    }
    Ok(total)
}

/// Partition-sum evaluation of the same quantity:
/// `sum over lambda of n!/z * prod b_{p}/(p-1)! * m^len`.
pub fn g_at_ones_via_partitions(
    spec: &SeriesSpec,
    n: usize,
    m: usize,
) -> Result<BigRational, SymfunError> {
    let poly = g_poly_via_partitions(spec, n)?;
    Ok(poly.iter().rev().fold(BigRational::zero(), |acc, c| acc * big(m) + c))
}

/// Coefficients in `m` (ascending) of the partition-sum evaluation.
fn g_poly_via_partitions(spec: &SeriesSpec, n: usize) -> Result<Vec<BigRational>, SymfunError> {
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for lambda in partitions(n) {
        let mut term = ratio(&factorial(n as u64), &z_lambda(&lambda));
        for &p in &lambda {
            term *= spec.b(p)? / ratio(&factorial(p as u64 - 1), &BigInt::one());
        }
        coeffs[lambda.len()] += term;
    }
    Ok(coeffs)
}

/// The odd-part partition sum for `tan + sec`, assembled as an integer
/// polynomial in `m`.
pub fn fhat_poly(n: usize) -> IntPoly {
    let spec = SeriesSpec::new(SeriesKind::TanSec, n);
    let coeffs = g_poly_via_partitions(&spec, n).expect("coefficients prepared to order n");
    Poly::from_coeffs(Var::M, coeffs.iter().map(BigInt::from_rational).collect())
}

/// Complete-function analogue: the composition sum divided by `n!`.
pub fn h_at_ones(spec: &SeriesSpec, n: usize, m: usize) -> Result<BigRational, SymfunError> {
    Ok(g_at_ones_via_compositions(spec, n, m)? / ratio(&factorial(n as u64), &BigInt::one()))
}

/// Determinant evaluation `det[h_{lambda_i - i + j}]` at `m` ones, with
/// `h_0 = 1` and negative indices zero.
pub fn schur_at_ones(spec: &SeriesSpec, lambda: &[usize], m: usize) -> Result<BigRational, SymfunError> {
    let size = lambda.len();
    let mut matrix = vec![vec![BigRational::zero(); size]; size];
    for (i, &part) in lambda.iter().enumerate() {
        for j in 0..size {
            let index = part as i64 - i as i64 + j as i64;
            matrix[i][j] = match index {
                d if d < 0 => BigRational::zero(),
                0 => BigRational::one(),
                d => h_at_ones(spec, d as usize, m)?,
            };
        }
    }
    Ok(det(&matrix))
}

fn det(matrix: &[Vec<BigRational>]) -> BigRational {
    let size = matrix.len();
    if size == 0 {
        return BigRational::one();
    }
    let mut total = BigRational::zero();
    for (col, entry) in matrix[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<BigRational>> = matrix[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, v)| v.clone()).collect()
            })
            .collect();
        let signed = if col % 2 == 0 { entry.clone() } else { -entry.clone() };
        total += signed * det(&minor);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_partition_counts() {
        assert_eq!(compositions(0), vec![Vec::<usize>::new()]);
        assert_eq!(compositions(4).len(), 8);
        assert_eq!(partitions(6).len(), 11);
        assert_eq!(odd_partitions(6), vec![vec![5, 1], vec![3, 3], vec![3, 1, 1, 1], vec![1; 6]]);
    }

    #[test]
    fn centralizer_sizes() {
        assert_eq!(z_lambda(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(z_lambda(&[3]), BigInt::from(3));
        assert_eq!(z_lambda(&[2, 2, 1]), BigInt::from(8));
        // Partition terms n!/z sum to the number of permutations by cycle
        // type.
        for n in 0..=7usize {
            let total: BigRational =
                partitions(n).iter().map(|l| ratio(&factorial(n as u64), &z_lambda(l))).sum();
            assert_eq!(total, ratio(&factorial(n as u64), &BigInt::one()));
        }
    }

    #[test]
    fn compositions_and_subsets_invert() {
        assert_eq!(co(&[1], 3).unwrap(), vec![1, 2]);
        assert_eq!(co(&[], 4).unwrap(), vec![4]);
        assert!(co(&[2, 1], 4).is_err());
        assert!(co(&[3], 3).is_err());
        for gamma in compositions(6) {
            let s = composition_to_set(&gamma);
            assert_eq!(co(&s, 6).unwrap(), gamma);
        }
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(4, &[2, 2]), BigInt::from(6));
        assert_eq!(multinomial_e(3, &[1, 2]), BigInt::from(3));
        assert_eq!(multinomial_e(6, &[3, 3]), BigInt::from(80));
        assert_eq!(m_gamma_at_ones(&[2, 1], 3), BigInt::from(3));
        assert_eq!(m_gamma_at_ones(&[2, 1], 0), BigInt::from(0));
        assert_eq!(m_gamma_at_ones(&[5], 7), BigInt::from(7));
    }

    #[test]
    fn log_coefficients_match_closed_forms() {
        let order = 9;
        let exp = SeriesSpec::new(SeriesKind::Exp, order);
        for k in 1..=order {
            let expect = if k == 1 { BigRational::one() } else { BigRational::zero() };
            assert_eq!(exp.b(k).unwrap(), expect, "exp b_{k}");
        }
        let tansec = SeriesSpec::new(SeriesKind::TanSec, order);
        let euler = euler_numbers(order);
        for k in 1..=order {
            let expect = if k % 2 == 1 { ratio(&euler[k - 1], &BigInt::one()) } else { BigRational::zero() };
            assert_eq!(tansec.b(k).unwrap(), expect, "tansec b_{k}");
        }
        let geom = SeriesSpec::new(SeriesKind::Geometric, order);
        for k in 1..=order {
            assert_eq!(geom.b(k).unwrap(), ratio(&factorial(k as u64 - 1), &BigInt::one()), "geom b_{k}");
        }
        assert!(geom.b(order + 1).is_err());
    }

    #[test]
    fn exp_evaluations_are_powers() {
        let spec = SeriesSpec::new(SeriesKind::Exp, 6);
        for n in 0..=6usize {
            for m in 0..=4usize {
                let expect = big(m.pow(n as u32));
                assert_eq!(g_at_ones_via_compositions(&spec, n, m).unwrap(), expect);
                assert_eq!(g_at_ones_via_partitions(&spec, n, m).unwrap(), expect);
            }
        }
    }

    #[test]
    fn routes_agree_for_all_kinds() {
        for kind in [SeriesKind::Exp, SeriesKind::TanSec, SeriesKind::Geometric] {
            let spec = SeriesSpec::new(kind, 6);
            for n in 0..=6usize {
                for m in 0..=5usize {
                    assert_eq!(
                        g_at_ones_via_compositions(&spec, n, m).unwrap(),
                        g_at_ones_via_partitions(&spec, n, m).unwrap(),
                        "kind {kind:?} n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn odd_partition_polynomials() {
        assert_eq!(fhat_poly(1), Poly::from_coeffs(Var::M, vec![BigInt::from(0), BigInt::from(1)]));
        assert_eq!(
            fhat_poly(2),
            Poly::from_coeffs(Var::M, vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)])
        );
        assert_eq!(
            fhat_poly(3),
            Poly::from_coeffs(Var::M, vec![BigInt::from(0), BigInt::from(1), BigInt::from(0), BigInt::from(1)])
        );
        assert_eq!(
            fhat_poly(4),
            Poly::from_coeffs(
                Var::M,
                vec![BigInt::from(0), BigInt::from(0), BigInt::from(4), BigInt::from(0), BigInt::from(1)]
            )
        );
    }

    #[test]
    fn h_matches_g_scaled() {
        for kind in [SeriesKind::Exp, SeriesKind::TanSec, SeriesKind::Geometric] {
            let spec = SeriesSpec::new(kind, 8);
            for n in 0..=8usize {
                for m in 0..=3usize {
                    let g = g_at_ones_via_compositions(&spec, n, m).unwrap();
                    let h = h_at_ones(&spec, n, m).unwrap();
                    assert_eq!(h * ratio(&factorial(n as u64), &BigInt::one()), g);
                }
            }
        }
    }

    #[test]
    fn geometric_series_gives_classical_complete_functions() {
        let spec = SeriesSpec::new(SeriesKind::Geometric, 8);
        for n in 1..=6usize {
            for m in 0..=5usize {
                let expect = ratio(&binomial((m + n - 1) as u64, n as u64), &BigInt::one());
                assert_eq!(h_at_ones(&spec, n, m).unwrap(), expect, "h_{n} at {m} ones");
            }
        }
        for m in 0..=5usize {
            assert_eq!(schur_at_ones(&spec, &[1], m).unwrap(), big(m));
        }
        // Two-row shapes match the classical hook content formula at small
        // sizes: s_(2,1)(1^m) = m(m^2-1)/3.
        for m in 0..=5usize {
            let expect = big(m) * (big(m) * big(m) - BigRational::one()) / big(3);
            assert_eq!(schur_at_ones(&spec, &[2, 1], m).unwrap(), expect);
        }
    }
}

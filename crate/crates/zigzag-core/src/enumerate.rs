//! Exhaustive tables over small symmetric groups: zigzag counts, the
//! alternating-descent triangle by several independent routes, bivariate
//! refinements, flag vectors and their compressed two-letter forms, and
//! q-weighted lattice paths.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use num::Integer;
use thiserror::Error;

use crate::exact::{binomial, factorial, q_int, Alphabet, BiPoly, IntPoly, NcPoly, Poly, Var};
use crate::mintree::{cd_monomial, is_r_perm, is_simsun, DyckPath, Step};
use crate::perm::{
    append_max, enumerate_down_up, enumerate_first_fixed, enumerate_sn, MAX_ENUM_FIRST_FIXED,
    MAX_ENUM_N,
};
use crate::stats::{
    alt_descent_set, altdesc_from_code, count_pattern, d3, d_hat, descent_set, i3, i_hat,
    major_index, Vincular,
};
use crate::symfun::{co, multinomial, multinomial_e, SymfunError};

/// Largest triangle the quadratic recurrence is asked to produce; big enough
/// to feed every series check.
pub const MAX_TRIANGLE_N: usize = 14;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("size {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("triangle recurrence division is not exact at row {n}, entry {k}")]
    InexactDivision { n: usize, k: usize },
}

fn cap_err(n: usize, cap: usize) -> EnumError {
    EnumError::AboveCap { n, cap }
}

/// Zigzag counts `E_0..=E_max` by the boustrophedon recurrence: each row is
/// the reversed running sum of the previous one.
pub fn euler_numbers(max: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(BigInt::one());
    let mut prev = vec![BigInt::one()];
    for n in 1..=max {
        let mut row = Vec::with_capacity(n + 1);
        row.push(BigInt::zero());
        for i in 1..=n {
            let next = &row[i - 1] + &prev[n - i];
            row.push(next);
        }
        out.push(row[n].clone());
        prev = row;
    }
    out
}

/// Rows 1..=N counting permutations of each size by number of alternating
/// descents. Construction checks that every row sums to `n!` and reads the
/// same in both directions; both hold for all the producing routes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    rows: Vec<Vec<BigInt>>,
}

impl Triangle {
    fn new(rows: Vec<Vec<BigInt>>) -> Self {
        for (idx, row) in rows.iter().enumerate() {
            let n = idx + 1;
            assert_eq!(row.len(), n, "row {n} must have {n} entries");
            let sum: BigInt = row.iter().sum();
            assert_eq!(sum, factorial(n as u64), "row {n} must sum to {n}!");
            for k in 0..n {
                assert_eq!(row[k], row[n - 1 - k], "row {n} must be symmetric");
            }
        }
        Triangle { rows }
    }

    pub fn max_n(&self) -> usize {
        self.rows.len()
    }

    /// Entries of row `n`, indexed by statistic value `0..n-1`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n - 1]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().map(|r| r.as_slice())
    }

    /// Row `n` as a polynomial with the customary degree shift: the
    /// coefficient of `t^k` counts permutations with `k - 1` alternating
    /// descents.
    pub fn row_poly(&self, n: usize) -> IntPoly {
        let mut coeffs = vec![BigInt::zero()];
        coeffs.extend(self.row(n).iter().cloned());
        Poly::from_coeffs(Var::T, coeffs)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .enumerate()
            .map(|(idx, row)| {
                serde_json::json!({
                    "n": idx + 1,
                    "entries": row.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "rows": rows })
    }
}

/// Histogram of the alternating-descent count over all of `S_n`.
pub fn alt_eulerian_row_bruteforce(n: usize) -> Result<Vec<BigInt>, EnumError> {
    assert!(n >= 1, "rows start at 1");
    let mut row = vec![BigInt::zero(); n];
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        row[d_hat(&p)] += 1u32;
    }
    Ok(row)
}

/// The same row from the companion statistic: the histogram of the odd-triple
/// count over permutations of `[n + 1]` that start with 1.
pub fn alt_eulerian_row_via_d3(n: usize) -> Result<Vec<BigInt>, EnumError> {
    assert!(n >= 1, "rows start at 1");
    let m = n + 1;
    let mut row = vec![BigInt::zero(); n];
    for p in enumerate_first_fixed(m).map_err(|_| cap_err(m, MAX_ENUM_FIRST_FIXED))? {
        row[d3(&p)] += 1u32;
    }
    Ok(row)
}

/// The full triangle from its quadratic recurrence: row `n` starts at the
/// zigzag count, and each later entry is determined by a convolution of
/// earlier rows followed by an exact division. A division with a remainder
/// is reported as an error rather than rounded.
pub fn alt_eulerian_triangle(max_n: usize) -> Result<Triangle, EnumError> {
    if max_n > MAX_TRIANGLE_N {
        return Err(cap_err(max_n, MAX_TRIANGLE_N));
    }
    let euler = euler_numbers(max_n);
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let entry = |rows: &[Vec<BigInt>], i: usize, col: usize| -> BigInt {
            // Column index is 1-based; entries outside 1..=i are zero.
            if col >= 1 && col <= i {
                rows[i - 1][col - 1].clone()
            } else {
                BigInt::zero()
            }
        };
        let mut row = vec![BigInt::zero(); n];
        row[0] = euler[n].clone();
        for k in 0..n.saturating_sub(1) {
            let mut inner = BigInt::zero();
            for i in 1..n {
                let c = binomial(n as u64, i as u64);
                for j in 0..=k {
                    inner += &c * entry(&rows, i, j + 1) * entry(&rows, n - i, k - j + 1);
                }
            }
            let num = inner + (BigInt::from(k as i64 + 1) - BigInt::from(n as i64)) * &row[k];
            let den = BigInt::from(k as u64 + 1);
            let (q, r) = num.div_rem(&den);
            if !r.is_zero() {
                return Err(EnumError::InexactDivision { n, k: k + 2 });
            }
            row[k + 1] = q;
        }
        rows.push(row);
    }
    Ok(Triangle::new(rows))
}

/// Alternating-descent polynomial of `S_n` by direct enumeration, with the
/// degree shift that makes the coefficient of `t^k` count `k - 1` descents.
pub fn ahat_poly(n: usize) -> Result<IntPoly, EnumError> {
    if n == 0 {
        return Ok(Poly::constant(Var::T, BigInt::one()));
    }
    let row = alt_eulerian_row_bruteforce(n)?;
    let mut coeffs = vec![BigInt::zero()];
    coeffs.extend(row);
    Ok(Poly::from_coeffs(Var::T, coeffs))
}

/// Classical descent polynomial of `S_n` by the two-term recurrence on
/// descent counts.
pub fn classical_eulerian_poly(n: usize) -> Result<IntPoly, EnumError> {
    if n > MAX_TRIANGLE_N {
        return Err(cap_err(n, MAX_TRIANGLE_N));
    }
    if n == 0 {
        return Ok(Poly::constant(Var::T, BigInt::one()));
    }
    let mut row = vec![BigInt::one()];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for (k, slot) in next.iter_mut().enumerate() {
            let mut v = BigInt::zero();
            if k < row.len() {
                v += &row[k] * BigInt::from(k as u64 + 1);
            }
            if k >= 1 && k - 1 < row.len() {
                v += &row[k - 1] * BigInt::from((m - k) as u64);
            }
            *slot = v;
        }
        row = next;
    }
    let mut coeffs = vec![BigInt::zero()];
    coeffs.extend(row);
    Ok(Poly::from_coeffs(Var::T, coeffs))
}

/// Alternating-descent polynomial reconstructed from the polynomial giving
/// its nonnegative expansion over `1/(1-t)^(n+1)`: a finite alternating
/// convolution of binomials with values of that polynomial.
pub fn ahat_poly_via_fhat(n: usize) -> IntPoly {
    let fh = crate::symfun::fhat_poly(n);
    let values: Vec<BigInt> = (0..=n).map(|m| fh.eval(&BigInt::from(m as u64))).collect();
    let mut coeffs = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut total = BigInt::zero();
        for j in 0..=k {
            let term = binomial(n as u64 + 1, j as u64) * &values[k - j];
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        coeffs.push(total);
    }
    Poly::from_coeffs(Var::T, coeffs)
}

/// Joint distribution of alternating descents and the code-sum companion
/// statistic over `S_n`.
pub fn ahat_bivariate(n: usize) -> Result<BiPoly, EnumError> {
    let mut out = BiPoly::new();
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        out.add_term(d_hat(&p) as u32, i_hat(&p) as u32, BigInt::one());
    }
    Ok(out)
}

/// The same joint distribution read off codes alone: every staircase code
/// determines both statistics without building the permutation.
pub fn ahat_bivariate_via_codes(n: usize) -> Result<BiPoly, EnumError> {
    if n > MAX_ENUM_N {
        return Err(cap_err(n, MAX_ENUM_N));
    }
    let mut out = BiPoly::new();
    if n == 0 {
        out.add_term(0, 0, BigInt::one());
        return Ok(out);
    }
    let len = n - 1;
    let mut code = vec![0usize; len];
    loop {
        let dh = altdesc_from_code(&code, n).expect("staircase codes decode").len();
        let ih: usize = code.iter().sum();
        out.add_term(dh as u32, ih as u32, BigInt::one());
        let mut i = 0;
        loop {
            if i == len {
                return Ok(out);
            }
            if code[i] < n - 1 - i {
                code[i] += 1;
                break;
            }
            code[i] = 0;
            i += 1;
        }
    }
}

/// Joint distribution of the odd-triple descent count and its inversion
/// companion over permutations of `[n + 1]` starting with 1.
pub fn d3_bivariate(n: usize) -> Result<BiPoly, EnumError> {
    let m = n + 1;
    let mut out = BiPoly::new();
    for p in enumerate_first_fixed(m).map_err(|_| cap_err(m, MAX_ENUM_FIRST_FIXED))? {
        out.add_term(d3(&p) as u32, i3(&p) as u32, BigInt::one());
    }
    Ok(out)
}

/// Joint distribution pairing the odd-triple count after appending a top
/// letter with the major index of the original word, over `S_n`.
pub fn maj_d3_bivariate(n: usize) -> Result<BiPoly, EnumError> {
    let mut out = BiPoly::new();
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        let ext = append_max(&p);
        out.add_term(d3(&ext) as u32, major_index(&p) as u32, BigInt::one());
    }
    Ok(out)
}

/// Companion-statistic distribution over down-up permutations of `S_n`,
/// normalized by dividing out the minimal value `floor(n^2 / 4)` attained
/// on that set.
pub fn ehat_poly(n: usize) -> Result<IntPoly, EnumError> {
    let perms = enumerate_down_up(n).map_err(|_| cap_err(n, MAX_ENUM_N))?;
    let mut hist: Vec<BigInt> = Vec::new();
    for p in &perms {
        let v = i_hat(p);
        if v >= hist.len() {
            hist.resize(v + 1, BigInt::zero());
        }
        hist[v] += 1u32;
    }
    Ok(Poly::from_coeffs(Var::Q, hist).shift_down_exact(n * n / 4))
}

/// The same normalized distribution from scratch as the count of one
/// vincular pattern over down-up permutations; no shift is needed.
pub fn ehat_poly_by_patterns(n: usize) -> Result<IntPoly, EnumError> {
    let perms = enumerate_down_up(n).map_err(|_| cap_err(n, MAX_ENUM_N))?;
    let mut hist: Vec<BigInt> = Vec::new();
    for p in &perms {
        let v = count_pattern(p, Vincular::V31_2);
        if v >= hist.len() {
            hist.resize(v + 1, BigInt::zero());
        }
        hist[v] += 1u32;
    }
    Ok(Poly::from_coeffs(Var::Q, hist))
}

/// Count of permutations whose alternating descent set is contained in `s`,
/// from the weighted multinomial of the induced composition.
pub fn alpha_hat_formula(n: usize, s: &[usize]) -> Result<BigInt, SymfunError> {
    Ok(multinomial_e(n, &co(s, n)?))
}

/// The same count by direct enumeration.
pub fn alpha_hat_bruteforce(n: usize, s: &[usize]) -> Result<BigInt, EnumError> {
    let mut total = BigInt::zero();
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        if alt_descent_set(&p).iter().all(|d| s.contains(d)) {
            total += 1u32;
        }
    }
    Ok(total)
}

/// Count of permutations whose alternating descent set equals `s`, by
/// inclusion-exclusion over the containment counts.
pub fn beta_hat_formula(n: usize, s: &[usize]) -> Result<BigInt, SymfunError> {
    let mut total = BigInt::zero();
    for mask in 0u32..(1 << s.len()) {
        let sub: Vec<usize> = s
            .iter()
            .enumerate()
            .filter(|&(b, _)| mask >> b & 1 == 1)
            .map(|(_, &x)| x)
            .collect();
        let term = alpha_hat_formula(n, &sub)?;
        if (s.len() - sub.len()) % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Ok(total)
}

/// The same count by direct enumeration.
pub fn beta_hat_bruteforce(n: usize, s: &[usize]) -> Result<BigInt, EnumError> {
    let mut total = BigInt::zero();
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        if alt_descent_set(&p) == s {
            total += 1u32;
        }
    }
    Ok(total)
}

/// Classical analogue of the containment count: a plain multinomial.
pub fn alpha_formula(n: usize, s: &[usize]) -> Result<BigInt, SymfunError> {
    Ok(multinomial(n, &co(s, n)?))
}

/// Classical containment count by direct enumeration.
pub fn alpha_bruteforce(n: usize, s: &[usize]) -> Result<BigInt, EnumError> {
    let mut total = BigInt::zero();
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        if descent_set(&p).iter().all(|d| s.contains(d)) {
            total += 1u32;
        }
    }
    Ok(total)
}

/// Which descent notion drives a flag polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AbVariant {
    Classic,
    Alt,
}

/// Flag polynomial of `S_n`: one word per permutation, with the letter `b`
/// at the positions of its descent set under the chosen notion.
pub fn ab_index(n: usize, variant: AbVariant) -> Result<NcPoly, EnumError> {
    let mut out = NcPoly::zero(Alphabet::Ab);
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        let ds = match variant {
            AbVariant::Classic => descent_set(&p),
            AbVariant::Alt => alt_descent_set(&p),
        };
        let word: Vec<u8> = (1..n).map(|i| if ds.binary_search(&i).is_ok() { b'b' } else { b'a' }).collect();
        out.add_term(&word, BigInt::one());
    }
    Ok(out)
}

/// Compressed form of the classical flag polynomial: the sum of descent
/// words over permutations that end in their maximum and stay free of
/// double descents under every top-value removal.
pub fn cd_index(n: usize) -> Result<NcPoly, EnumError> {
    if n == 0 {
        return Ok(NcPoly::one(Alphabet::Cd));
    }
    let mut out = NcPoly::zero(Alphabet::Cd);
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        if p.at(n) == n && is_simsun(&p) {
            let word = cd_monomial(&p).expect("ends in its maximum and passes the removal test");
            out.add_term(word.as_bytes(), BigInt::one());
        }
    }
    Ok(out)
}

/// Image of the compressed polynomial under `c -> c`, `d -> c^2 - d`; this
/// is the compressed form matching the alternating flag polynomial.
pub fn cd_index_alt(n: usize) -> Result<NcPoly, EnumError> {
    let phi = cd_index(n)?;
    Ok(phi.substitute(Alphabet::Cd, |letter| match letter {
        b'c' => NcPoly::monomial(Alphabet::Cd, "c", BigInt::one()),
        _ => NcPoly::monomial(Alphabet::Cd, "cc", BigInt::one())
            .sub(&NcPoly::monomial(Alphabet::Cd, "d", BigInt::one())),
    }))
}

/// Expansion homomorphism `c -> a + b`, `d -> ab + ba` back into the flag
/// alphabet.
pub fn cd_to_ab(phi: &NcPoly) -> NcPoly {
    let a = NcPoly::monomial(Alphabet::Ab, "a", BigInt::one());
    let b = NcPoly::monomial(Alphabet::Ab, "b", BigInt::one());
    let ab = NcPoly::monomial(Alphabet::Ab, "ab", BigInt::one());
    let ba = NcPoly::monomial(Alphabet::Ab, "ba", BigInt::one());
    phi.substitute(Alphabet::Ab, move |letter| if letter == b'c' { a.add(&b) } else { ab.add(&ba) })
}

/// Number of permutations with no double descent and no final descent.
pub fn count_r(n: usize) -> Result<BigInt, EnumError> {
    let mut total = BigInt::zero();
    for p in enumerate_sn(n).map_err(|_| cap_err(n, MAX_ENUM_N))? {
        if is_r_perm(&p) {
            total += 1u32;
        }
    }
    Ok(total)
}

/// Evaluates the compressed polynomial with commuting numeric letter values.
pub fn phi_eval(n: usize, c_val: i64, d_val: i64) -> Result<BigInt, EnumError> {
    let phi = cd_index(n)?;
    Ok(phi.eval_commutative(|letter| {
        if letter == b'c' {
            BigInt::from(c_val)
        } else {
            BigInt::from(d_val)
        }
    }))
}

/// All nonnegative paths with `m` rises and `m` falls, rises ordered first.
pub fn enumerate_dyck(m: usize) -> Vec<DyckPath> {
    fn rec(steps: &mut Vec<Step>, ups_left: usize, downs_left: usize, out: &mut Vec<DyckPath>) {
        if ups_left == 0 && downs_left == 0 {
            out.push(DyckPath::from_steps(steps.clone()).expect("balanced and nonnegative"));
            return;
        }
        if ups_left > 0 {
            steps.push(Step::Up);
            rec(steps, ups_left - 1, downs_left, out);
            steps.pop();
        }
        // The current height is downs_left - ups_left; a fall needs it
        // positive.
        if downs_left > ups_left {
            steps.push(Step::Down);
            rec(steps, ups_left, downs_left - 1, out);
            steps.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), m, m, &mut out);
    out
}

/// Which of the two level-weight conventions a path sum uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightParity {
    Even,
    Odd,
}

/// q-weight of one path: each step contributes the q-integer of the height
/// of its upper endpoint, with falls bumped one higher under `Odd`.
pub fn dyck_weight(path: &DyckPath, parity: WeightParity) -> IntPoly {
    let mut acc = Poly::constant(Var::Q, BigInt::one());
    for (step, level) in path.steps().iter().zip(path.step_levels()) {
        let k = match (parity, step) {
            (WeightParity::Odd, Step::Down) => level + 1,
            _ => level,
        };
        acc = &acc * &q_int(k);
    }
    acc
}

/// Total q-weight over all paths with `m` rises.
pub fn dyck_weighted_sum(m: usize, parity: WeightParity) -> IntPoly {
    let mut total = Poly::constant(Var::Q, BigInt::zero());
    for path in enumerate_dyck(m) {
        total = &total + &dyck_weight(&path, parity);
    }
    total
}

/// Path counts by the first-return convolution.
pub fn catalan(m: usize) -> BigInt {
    let mut c: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=m {
        let mut total = BigInt::zero();
        for i in 0..k {
            total += &c[i] * &c[k - 1 - i];
        }
        c.push(total);
    }
    c[m].clone()
}

/// Count of words of length `n + 1` with no odd triple, over the whole
/// group or only over words starting with 1.
pub fn count_no_3descents(n: usize, restricted: bool) -> Result<BigInt, EnumError> {
    let m = n + 1;
    let mut total = BigInt::zero();
    if restricted {
        for p in enumerate_first_fixed(m).map_err(|_| cap_err(m, MAX_ENUM_FIRST_FIXED))? {
            if d3(&p) == 0 {
                total += 1u32;
            }
        }
    } else {
        for p in enumerate_sn(m).map_err(|_| cap_err(m, MAX_ENUM_N))? {
            if d3(&p) == 0 {
                total += 1u32;
            }
        }
    }
    Ok(total)
}

//! The verification registry: every named check runs one theorem-sized fact
//! over an exhaustive range and reports the first counterexample, if any.
//!
//! Checks are independent, so the runner may farm them out to a thread pool;
//! results are always emitted in check-id order so output does not depend on
//! `--jobs`.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use num::{BigInt, One};

use zigzag_core::bijections::{
    circle_bijection, circle_bijection_inverse, code3_inverse, hat_code_inverse,
};
use zigzag_core::enumerate::{
    ab_index, ahat_bivariate, ahat_bivariate_via_codes, alpha_hat_bruteforce, alpha_hat_formula,
    alt_eulerian_row_bruteforce, alt_eulerian_row_via_d3, alt_eulerian_triangle, beta_hat_formula,
    catalan, cd_index, cd_index_alt, cd_to_ab, count_no_3descents, count_r, d3_bivariate,
    dyck_weighted_sum, ehat_poly, ehat_poly_by_patterns, euler_numbers, maj_d3_bivariate,
    phi_eval, AbVariant, WeightParity,
};
use zigzag_core::exact::{factorial, q_factorial, ratio, Alphabet, IntPoly, NcPoly, Poly, Var};
use zigzag_core::identities::{
    r_series, triangle_rows_via_series, verify_classical_gf, verify_final_f, verify_fhat,
    verify_g, verify_h_endpoints, verify_ln_tan_sec, verify_pde, verify_power_fhat, verify_swg,
};
use zigzag_core::mintree::{
    build_min_tree, fs_orbit, is_r_perm, is_simsun, is_simsun_tree, simsun_representative,
};
use zigzag_core::perm::{
    cyclic_shift, enumerate_down_up, enumerate_first_fixed, enumerate_sn, prepend_min,
    reverse_complement, zigzag_interleave, Perm,
};
use zigzag_core::stats::{
    alt_descent_set, altdesc_from_code, avoids_312, code3, count_pattern, d3_set, descent_set,
    hat_code, i3, i_hat, inv, major_index, Vincular,
};
use zigzag_core::symfun::{
    g_at_ones_via_compositions, g_at_ones_via_partitions, fhat_poly, SeriesKind, SeriesSpec,
};

/// Effective bounds a single check runs at.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub max_n: usize,
    pub series_order: usize,
}

/// Caller overrides; `None` keeps the per-check default.
#[derive(Clone, Copy, Debug, Default)]
pub struct UserBounds {
    pub max_n: Option<usize>,
    pub series_order: Option<usize>,
}

pub struct CheckDef {
    pub id: &'static str,
    pub description: &'static str,
    pub default_max_n: usize,
    pub default_series_order: usize,
    /// Whether the reported `order` is the series order rather than `max_n`.
    pub uses_series: bool,
    pub runner: fn(&Bounds) -> Option<String>,
}

impl CheckDef {
    fn resolve(&self, user: &UserBounds) -> Bounds {
        Bounds {
            max_n: user.max_n.unwrap_or(self.default_max_n),
            series_order: user.series_order.unwrap_or(self.default_series_order),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub check_id: &'static str,
    pub order: usize,
    pub failure: Option<String>,
    pub seconds: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    /// One JSON object per line; no timing field, so stdout is reproducible.
    pub fn to_json_line(&self) -> String {
        serde_json::json!({
            "check_id": self.check_id,
            "order": self.order,
            "status": if self.passed() { "pass" } else { "fail" },
            "first_failure": self.failure,
        })
        .to_string()
    }
}

/// Unwraps a library `Result` inside a runner, turning an error (usually an
/// enumeration cap) into the check's failure message.
macro_rules! try_check {
    ($expr:expr) => {
        match $expr {
            Ok(value) => value,
            Err(e) => return Some(e.to_string()),
        }
    };
}

fn subsets(max: usize) -> Vec<Vec<usize>> {
    (0..1u32 << max)
        .map(|mask| (1..=max).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

fn histogram(values: impl Iterator<Item = usize>, var: Var) -> IntPoly {
    let mut counts: Vec<BigInt> = Vec::new();
    for v in values {
        if counts.len() <= v {
            counts.resize(v + 1, BigInt::from(0));
        }
        counts[v] += 1;
    }
    Poly::from_coeffs(var, counts)
}

fn series_check(check: zigzag_core::identities::SeriesCheck) -> Option<String> {
    check.failure
}

fn require_positive_order(b: &Bounds) -> Option<String> {
    if b.series_order == 0 {
        Some("series order must be at least 1".to_string())
    } else {
        None
    }
}

fn run_cor_code3_mahonian(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        let hist = histogram(
            try_check!(enumerate_sn(n)).map(|p| i3(&prepend_min(&p))),
            Var::Q,
        );
        if hist != q_factorial(n) {
            return Some(format!("triple inversions not Mahonian at n = {n}"));
        }
    }
    None
}

fn run_cor_euler(b: &Bounds) -> Option<String> {
    let e = euler_numbers(b.max_n);
    for n in 0..=b.max_n {
        let restricted = try_check!(count_no_3descents(n, true));
        if restricted != e[n] {
            return Some(format!(
                "restricted count {restricted} differs from zigzag number {} at n = {n}",
                e[n]
            ));
        }
        let full = try_check!(count_no_3descents(n, false));
        let expected = &e[n] * BigInt::from(n + 1);
        if full != expected {
            return Some(format!(
                "full count {full} differs from {expected} at n = {n}"
            ));
        }
    }
    None
}

fn run_cor_hat_code_mahonian(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        let hist = histogram(try_check!(enumerate_sn(n)).map(|p| i_hat(&p)), Var::Q);
        if hist != q_factorial(n) {
            return Some(format!("alternating inversions not Mahonian at n = {n}"));
        }
    }
    None
}

fn run_cor_other_bivariate(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        let lhs = try_check!(maj_d3_bivariate(n));
        let rhs = try_check!(ahat_bivariate(n));
        if lhs != rhs {
            return Some(format!("major-index route differs at n = {n}"));
        }
    }
    None
}

fn run_eq_final_g_h(b: &Bounds) -> Option<String> {
    series_check(verify_power_fhat(b.max_n, 6))
}

fn run_eq_h_endpoints(b: &Bounds) -> Option<String> {
    series_check(verify_h_endpoints(b.max_n))
}

fn run_eq_ln_rx(b: &Bounds) -> Option<String> {
    if let Some(problem) = require_positive_order(b) {
        return Some(problem);
    }
    let r = r_series(b.series_order);
    for n in 0..=b.max_n.min(b.series_order) {
        let from_series = ratio(&factorial(n as u64), &BigInt::one()) * r.coeff(n);
        let counted = try_check!(count_r(n));
        if from_series != ratio(&counted, &BigInt::one()) {
            return Some(format!(
                "series coefficient gives {from_series} but enumeration gives {counted} at n = {n}"
            ));
        }
    }
    series_check(verify_swg(b.series_order))
}

fn run_eq_ln_tan_sec(b: &Bounds) -> Option<String> {
    if let Some(problem) = require_positive_order(b) {
        return Some(problem);
    }
    series_check(verify_ln_tan_sec(b.series_order))
}

fn run_lemma_alt_eulerian_recursion(b: &Bounds) -> Option<String> {
    let triangle = try_check!(alt_eulerian_triangle(b.max_n));
    for n in 1..=b.max_n {
        let brute = try_check!(alt_eulerian_row_bruteforce(n));
        if brute != triangle.row(n) {
            return Some(format!("recurrence differs from direct count at n = {n}"));
        }
        let via_triples = try_check!(alt_eulerian_row_via_d3(n));
        if via_triples != triangle.row(n) {
            return Some(format!("rotation-class route differs at n = {n}"));
        }
    }
    let via_series = try_check!(triangle_rows_via_series(b.max_n));
    for n in 1..=b.max_n {
        if via_series[n - 1] != triangle.row_poly(n) {
            return Some(format!("series route differs at n = {n}"));
        }
    }
    None
}

fn run_lemma_alt_inversion_criterion(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        for p in try_check!(enumerate_sn(n)) {
            let code = hat_code(&p);
            let sum_at =
                |j: usize| code[j] + if j + 1 < code.len() { code[j + 1] } else { 0 };
            let all_low = (0..n - 1).all(|j| sum_at(j) <= n - 2 - j);
            let all_high = (0..n - 1).all(|j| sum_at(j) >= n - 1 - j);
            if p.is_up_down() != all_low || p.is_down_up() != all_high {
                return Some(format!("code-sum criterion fails at {p}"));
            }
        }
    }
    None
}

fn run_lemma_alt_inversions_31_2(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        for p in try_check!(enumerate_down_up(n)) {
            if i_hat(&p) != n * n / 4 + count_pattern(&p, Vincular::V31_2) {
                return Some(format!("pattern formula fails at {p}"));
            }
        }
    }
    None
}

fn run_lemma_alternating_descent_set(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        let mut rebuilt = NcPoly::zero(Alphabet::Ab);
        for s in subsets(n - 1) {
            let formula = try_check!(alpha_hat_formula(n, &s));
            let brute = try_check!(alpha_hat_bruteforce(n, &s));
            if formula != brute {
                return Some(format!(
                    "containment count differs at n = {n}, set {s:?}"
                ));
            }
            let word: Vec<u8> = (1..=n - 1)
                .map(|i| if s.contains(&i) { b'b' } else { b'a' })
                .collect();
            rebuilt.add_term(&word, try_check!(beta_hat_formula(n, &s)));
        }
        if rebuilt != try_check!(ab_index(n, AbVariant::Alt)) {
            return Some(format!("flag sums do not rebuild the index at n = {n}"));
        }
    }
    None
}

fn run_lemma_cyclic_shift(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        for p in try_check!(enumerate_sn(n)) {
            let set = d3_set(&p);
            for k in 1..n {
                if d3_set(&cyclic_shift(&p, k)) != set {
                    return Some(format!("rotation by {k} moves the descent set of {p}"));
                }
            }
        }
    }
    for n in 2..=b.max_n {
        let mut full: HashMap<Vec<usize>, usize> = HashMap::new();
        for p in try_check!(enumerate_sn(n)) {
            *full.entry(d3_set(&p)).or_default() += 1;
        }
        let mut restricted: HashMap<Vec<usize>, usize> = HashMap::new();
        for p in try_check!(enumerate_first_fixed(n)) {
            *restricted.entry(d3_set(&p)).or_default() += 1;
        }
        if full.len() != restricted.len()
            || full.iter().any(|(set, &count)| {
                restricted.get(set).map(|&r| r * n) != Some(count)
            })
        {
            return Some(format!("descent-set fibers are not {n} copies at n = {n}"));
        }
    }
    None
}

fn run_lemma_cyclic_shift_inversions(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        for p in try_check!(enumerate_sn(n)) {
            let code = code3(&p);
            for k in 1..n {
                if code3(&cyclic_shift(&p, k)) != code {
                    return Some(format!("rotation by {k} moves the triple code of {p}"));
                }
            }
        }
    }
    None
}

fn run_lemma_d3_from_code3(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        for p in try_check!(enumerate_first_fixed(n + 1)) {
            let decoded = match altdesc_from_code(&code3(&p), n) {
                Ok(d) => d,
                Err(e) => return Some(e.to_string()),
            };
            if decoded != d3_set(&p) {
                return Some(format!("decoded set differs at {p}"));
            }
        }
    }
    None
}

fn run_lemma_hatd_from_hatcode(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        for p in try_check!(enumerate_sn(n)) {
            let decoded = match altdesc_from_code(&hat_code(&p), n) {
                Ok(d) => d,
                Err(e) => return Some(e.to_string()),
            };
            if decoded != alt_descent_set(&p) {
                return Some(format!("decoded set differs at {p}"));
            }
        }
    }
    None
}

fn run_prop_alt_avoiding_312(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        let down_up = try_check!(enumerate_down_up(n));
        let avoiders = down_up.iter().filter(|p| avoids_312(p)).count();
        let tight = down_up.iter().filter(|p| i_hat(p) == n * n / 4).count();
        let expected = catalan(n / 2);
        if BigInt::from(avoiders) != expected || BigInt::from(tight) != expected {
            return Some(format!(
                "avoiders {avoiders}, minimal-inversion count {tight}, expected {expected} at n = {n}"
            ));
        }
    }
    None
}

fn run_prop_code_3(b: &Bounds) -> Option<String> {
    for n in 2..=b.max_n {
        let mut seen = HashSet::new();
        for p in try_check!(enumerate_first_fixed(n)) {
            let code = code3(&p);
            if code.len() != n - 2
                || code.iter().enumerate().any(|(j, &c)| c > n - 2 - j)
            {
                return Some(format!("triple code out of range at {p}"));
            }
            match code3_inverse(&code) {
                Ok(q) if q == p => {}
                Ok(q) => return Some(format!("inverse sends code of {p} to {q}")),
                Err(e) => return Some(e.to_string()),
            }
            seen.insert(code);
        }
        let expected: usize = (1..=n - 1).product();
        if seen.len() != expected {
            return Some(format!("codes not onto the staircase at n = {n}"));
        }
    }
    None
}

fn run_prop_equal_codes(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        let mut by_code: HashMap<Vec<usize>, Perm> = HashMap::new();
        for p in try_check!(enumerate_first_fixed(n + 1)) {
            by_code.insert(code3(&p), p);
        }
        for p in try_check!(enumerate_sn(n)) {
            let partner = &by_code[&hat_code(&p)];
            if d3_set(partner) != alt_descent_set(&p) {
                return Some(format!("{partner} and {p} share a code but not a set"));
            }
            if i3(partner) != i_hat(&p) {
                return Some(format!(
                    "{partner} and {p} share a code but not an inversion count"
                ));
            }
        }
    }
    None
}

fn run_prop_gfn_expression(b: &Bounds) -> Option<String> {
    if let Some(problem) = require_positive_order(b) {
        return Some(problem);
    }
    series_check(verify_g(b.series_order))
}

fn run_prop_gfn_substitution(b: &Bounds) -> Option<String> {
    for kind in [SeriesKind::Exp, SeriesKind::TanSec, SeriesKind::Geometric] {
        let spec = SeriesSpec::new(kind, b.max_n);
        for n in 0..=b.max_n {
            for m in 0..=5usize {
                let via_compositions =
                    try_check!(g_at_ones_via_compositions(&spec, n, m));
                let via_partitions = try_check!(g_at_ones_via_partitions(&spec, n, m));
                if via_compositions != via_partitions {
                    return Some(format!(
                        "routes differ for {kind:?} at n = {n}, m = {m}"
                    ));
                }
            }
        }
    }
    let e = euler_numbers(b.max_n);
    for n in 0..=b.max_n {
        let at_one = fhat_poly(n).eval(&BigInt::one());
        if at_one != e[n] {
            return Some(format!(
                "single-variable value {at_one} differs from zigzag number {} at n = {n}",
                e[n]
            ));
        }
    }
    None
}

fn run_prop_hat_code(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        let mut seen = HashSet::new();
        for p in try_check!(enumerate_sn(n)) {
            let code = hat_code(&p);
            if code.len() != n - 1
                || code.iter().enumerate().any(|(j, &c)| c > n - 1 - j)
            {
                return Some(format!("code out of range at {p}"));
            }
            match hat_code_inverse(&code) {
                Ok(q) if q == p => {}
                Ok(q) => return Some(format!("inverse sends code of {p} to {q}")),
                Err(e) => return Some(e.to_string()),
            }
            seen.insert(code);
        }
        let expected: usize = (1..=n).product();
        if seen.len() != expected {
            return Some(format!("codes not onto the staircase at n = {n}"));
        }
    }
    None
}

fn run_prop_hat_phi(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        let classic = try_check!(cd_index(n));
        if cd_to_ab(&classic) != try_check!(ab_index(n, AbVariant::Classic)) {
            return Some(format!("descent-run index does not expand at n = {n}"));
        }
        let alternating = try_check!(cd_index_alt(n));
        if cd_to_ab(&alternating) != try_check!(ab_index(n, AbVariant::Alt)) {
            return Some(format!(
                "alternating-run index does not expand at n = {n}"
            ));
        }
    }
    None
}

fn run_prop_hata_pde(b: &Bounds) -> Option<String> {
    if let Some(problem) = require_positive_order(b) {
        return Some(problem);
    }
    series_check(verify_pde(b.series_order))
}

fn run_prop_hateq_facts(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        let eh = try_check!(ehat_poly(n));
        let top = (n.saturating_sub(1)).pow(2) / 4;
        if eh.degree() != Some(top) || eh.coeff(top) != BigInt::one() {
            return Some(format!("degree or leading coefficient wrong at n = {n}"));
        }
        if eh.coeff(0) != catalan(n / 2) {
            return Some(format!("constant term wrong at n = {n}"));
        }
        let up_down_slice = try_check!(ahat_bivariate(n)).at_t_zero();
        match eh.reversed_to_degree(top) {
            Some(reversed) if up_down_slice == reversed => {}
            _ => return Some(format!("reversal fact fails at n = {n}")),
        }
    }
    None
}

fn run_prop_i3_bmaj(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        for p in try_check!(enumerate_sn(n)) {
            if i3(&prepend_min(&p)) != major_index(&reverse_complement(&p)) {
                return Some(format!("major-index transport fails at {p}"));
            }
        }
    }
    None
}

fn run_prop_rn_trees(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        for p in try_check!(enumerate_sn(n)) {
            let ds = descent_set(&p);
            let word_level = ds.iter().all(|&i| !ds.contains(&(i + 1)) && i != n - 1);
            if word_level != is_r_perm(&p) {
                return Some(format!("tree criterion disagrees at {p}"));
            }
        }
    }
    None
}

fn run_prop_sigma_check(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        for p in try_check!(enumerate_sn(n)) {
            if i_hat(&p) != inv(&zigzag_interleave(&p)) {
                return Some(format!("interleaving misses the inversion count at {p}"));
            }
        }
    }
    None
}

fn run_prop_simsun_trees(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        for p in try_check!(enumerate_sn(n)) {
            let tree = match build_min_tree(p.one_line()) {
                Ok(t) => t,
                Err(e) => return Some(e.to_string()),
            };
            let word_level = is_simsun(&p) && p.at(n) == n;
            if word_level != is_simsun_tree(&tree) {
                return Some(format!("tree criterion disagrees at {p}"));
            }
        }
    }
    None
}

fn run_thm_bijection_alt3(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        let mut images = HashSet::new();
        for p in try_check!(enumerate_first_fixed(n + 1)) {
            let image = match circle_bijection(&p) {
                Ok(q) => q,
                Err(e) => return Some(e.to_string()),
            };
            match circle_bijection_inverse(&image) {
                Ok(q) if q == p => {}
                Ok(q) => return Some(format!("round trip sends {p} to {q}")),
                Err(e) => return Some(e.to_string()),
            }
            if d3_set(&p) != alt_descent_set(&image) {
                return Some(format!("descent sets differ for {p} and {image}"));
            }
            images.insert(image);
        }
        let expected: usize = (1..=n).product();
        if images.len() != expected {
            return Some(format!("images not distinct at n = {n}"));
        }
    }
    None
}

fn run_thm_f_eulerian(b: &Bounds) -> Option<String> {
    for n in 1..=b.max_n {
        if let Some(problem) = series_check(verify_fhat(n, 10)) {
            return Some(format!("n = {n}: {problem}"));
        }
    }
    None
}

fn run_thm_final_f(b: &Bounds) -> Option<String> {
    if let Some(problem) = series_check(verify_final_f(b.series_order)) {
        return Some(problem);
    }
    series_check(verify_classical_gf(b.series_order))
}

fn run_thm_main_bivariate(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        let direct = try_check!(ahat_bivariate(n));
        if try_check!(d3_bivariate(n)) != direct {
            return Some(format!("rotation-class route differs at n = {n}"));
        }
        if try_check!(ahat_bivariate_via_codes(n)) != direct {
            return Some(format!("code route differs at n = {n}"));
        }
    }
    None
}

fn run_thm_sum_coefficients(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        let counted = try_check!(count_r(n));
        let evaluated = try_check!(phi_eval(n, 1, 2));
        if evaluated != counted {
            return Some(format!(
                "index evaluation {evaluated} differs from count {counted} at n = {n}"
            ));
        }
        let signed = try_check!(cd_index_alt(n)).eval_commutative(|letter| {
            if letter == b'c' {
                BigInt::one()
            } else {
                BigInt::from(-1)
            }
        });
        if signed != counted {
            return Some(format!(
                "signed evaluation {signed} differs from count {counted} at n = {n}"
            ));
        }
    }
    let n = b.max_n.min(7);
    let members: Vec<Perm> = try_check!(enumerate_sn(n))
        .filter(is_r_perm)
        .collect();
    let mut covered: HashSet<Perm> = HashSet::new();
    for p in &members {
        if covered.contains(p) {
            continue;
        }
        let orbit = fs_orbit(p);
        let representatives = orbit
            .iter()
            .filter(|q| is_simsun(q) && (q.n() == 0 || q.at(q.n()) == q.n()))
            .count();
        if representatives != 1 {
            return Some(format!(
                "orbit of {p} has {representatives} canonical members"
            ));
        }
        let chosen = match simsun_representative(p) {
            Ok(q) => q,
            Err(e) => return Some(e.to_string()),
        };
        if !orbit.contains(&chosen) {
            return Some(format!("representative of {p} left its orbit"));
        }
        for q in orbit {
            if !is_r_perm(&q) {
                return Some(format!("orbit of {p} contains {q}"));
            }
            covered.insert(q);
        }
    }
    if covered.len() != members.len() {
        return Some(format!(
            "orbits cover {} of {} members at n = {n}",
            covered.len(),
            members.len()
        ));
    }
    None
}

fn run_thm_weighted_paths(b: &Bounds) -> Option<String> {
    for n in 0..=b.max_n {
        let direct = try_check!(ehat_poly(n));
        if try_check!(ehat_poly_by_patterns(n)) != direct {
            return Some(format!("pattern route differs at n = {n}"));
        }
        let (m, parity) = if n % 2 == 0 {
            (n / 2, WeightParity::Even)
        } else {
            (n / 2, WeightParity::Odd)
        };
        if dyck_weighted_sum(m, parity) != direct {
            return Some(format!("path route differs at n = {n}"));
        }
    }
    None
}

/// All checks, in id order. Each id names one verified statement and stays
/// stable across releases.
pub static REGISTRY: &[CheckDef] = &[
    CheckDef {
        id: "cor-code3-mahonian",
        description: "triple inversions over minimum-first permutations distribute as the q-factorial",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_cor_code3_mahonian,
    },
    CheckDef {
        id: "cor-euler",
        description: "permutations with no odd-triple descents are counted by zigzag numbers",
        default_max_n: 7,
        default_series_order: 12,
        uses_series: false,
        runner: run_cor_euler,
    },
    CheckDef {
        id: "cor-hat-code-mahonian",
        description: "alternating inversions distribute as the q-factorial",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_cor_hat_code_mahonian,
    },
    CheckDef {
        id: "cor-other-bivariate",
        description: "appending a top letter carries the major index onto the joint distribution",
        default_max_n: 7,
        default_series_order: 12,
        uses_series: false,
        runner: run_cor_other_bivariate,
    },
    CheckDef {
        id: "eq-final-G-H",
        description: "powers of tan + sec expand through the m-polynomial slices",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_eq_final_g_h,
    },
    CheckDef {
        id: "eq-h-endpoints",
        description: "companion polynomials take ballot-number values at the endpoints",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_eq_h_endpoints,
    },
    CheckDef {
        id: "eq-ln-rx",
        description: "the no-double-descent series satisfies its reflection and logarithm identities",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: true,
        runner: run_eq_ln_rx,
    },
    CheckDef {
        id: "eq-ln-tan-sec",
        description: "the logarithm of tan + sec integrates the even zigzag series",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: true,
        runner: run_eq_ln_tan_sec,
    },
    CheckDef {
        id: "lemma-alt-eulerian-recursion",
        description: "triangle recurrence, direct count, rotation classes, and series coefficients agree",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_lemma_alt_eulerian_recursion,
    },
    CheckDef {
        id: "lemma-alt-inversion-criterion",
        description: "adjacent code sums characterize the alternating permutations",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_lemma_alt_inversion_criterion,
    },
    CheckDef {
        id: "lemma-alt-inversions-31-2",
        description: "down-up inversions exceed the minimum by the tail-pattern count",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_lemma_alt_inversions_31_2,
    },
    CheckDef {
        id: "lemma-alternating-descent-set",
        description: "containment counts match their closed formulas and rebuild the ab-index",
        default_max_n: 7,
        default_series_order: 12,
        uses_series: false,
        runner: run_lemma_alternating_descent_set,
    },
    CheckDef {
        id: "lemma-cyclic-shift",
        description: "value rotations preserve odd-triple descent sets, so fibers scale by n",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_lemma_cyclic_shift,
    },
    CheckDef {
        id: "lemma-cyclic-shift-inversions",
        description: "value rotations preserve the triple code entrywise",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_lemma_cyclic_shift_inversions,
    },
    CheckDef {
        id: "lemma-d3-from-code3",
        description: "the odd-triple descent set is decodable from adjacent code sums",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_lemma_d3_from_code3,
    },
    CheckDef {
        id: "lemma-hatd-from-hatcode",
        description: "the alternating descent set is decodable from adjacent code sums",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_lemma_hatd_from_hatcode,
    },
    CheckDef {
        id: "prop-alt-avoiding-312",
        description: "down-up avoiders of the tail pattern are counted by ballot numbers",
        default_max_n: 9,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_alt_avoiding_312,
    },
    CheckDef {
        id: "prop-code-3",
        description: "the triple code is a bijection onto its staircase",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_code_3,
    },
    CheckDef {
        id: "prop-equal-codes",
        description: "equal codes force equal descent sets and inversion counts",
        default_max_n: 7,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_equal_codes,
    },
    CheckDef {
        id: "prop-gfn-expression",
        description: "the two-variable generating function matches its closed form slice by slice",
        default_max_n: 8,
        default_series_order: 10,
        uses_series: true,
        runner: run_prop_gfn_expression,
    },
    CheckDef {
        id: "prop-gfn-substitution",
        description: "composition and partition routes to the specialized values agree",
        default_max_n: 6,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_gfn_substitution,
    },
    CheckDef {
        id: "prop-hat-code",
        description: "the alternating code is a bijection onto its staircase",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_hat_code,
    },
    CheckDef {
        id: "prop-hat-phi",
        description: "both compressed indices expand to their ab-indices",
        default_max_n: 7,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_hat_phi,
    },
    CheckDef {
        id: "prop-hata-pde",
        description: "the augmented generating function satisfies its differential equation",
        default_max_n: 8,
        default_series_order: 10,
        uses_series: true,
        runner: run_prop_hata_pde,
    },
    CheckDef {
        id: "prop-hateq-facts",
        description: "companion polynomials are monic of the stated degree with ballot constants",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_hateq_facts,
    },
    CheckDef {
        id: "prop-i3-bmaj",
        description: "triple inversions after prepending transport to the major index",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_i3_bmaj,
    },
    CheckDef {
        id: "prop-rn-trees",
        description: "the no-lone-left-child tree criterion matches the word-level definition",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_rn_trees,
    },
    CheckDef {
        id: "prop-sigma-check",
        description: "the odd-even interleaving realizes alternating inversions as plain inversions",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_sigma_check,
    },
    CheckDef {
        id: "prop-simsun-trees",
        description: "the labeled-tree criterion recognizes the double-descent-free class",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_prop_simsun_trees,
    },
    CheckDef {
        id: "thm-bijection-alt3",
        description: "dropping the leading 1 is a bijection carrying one descent set to the other",
        default_max_n: 7,
        default_series_order: 12,
        uses_series: false,
        runner: run_thm_bijection_alt3,
    },
    CheckDef {
        id: "thm-f-eulerian",
        description: "binomial expansions of the descent polynomials give the m-polynomial values",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_thm_f_eulerian,
    },
    CheckDef {
        id: "thm-final-F",
        description: "the bivariate exponential generating function equals its closed form",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: true,
        runner: run_thm_final_f,
    },
    CheckDef {
        id: "thm-main-bivariate",
        description: "three routes to the joint descent-inversion distribution agree",
        default_max_n: 7,
        default_series_order: 12,
        uses_series: false,
        runner: run_thm_main_bivariate,
    },
    CheckDef {
        id: "thm-sum-coefficients",
        description: "index evaluations count the double-descent-free class, partitioned into orbits",
        default_max_n: 8,
        default_series_order: 12,
        uses_series: false,
        runner: run_thm_sum_coefficients,
    },
    CheckDef {
        id: "thm-weighted-paths",
        description: "companion polynomials equal weighted lattice-path sums",
        default_max_n: 7,
        default_series_order: 12,
        uses_series: false,
        runner: run_thm_weighted_paths,
    },
];

pub fn find(id: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|def| def.id == id)
}

/// Resolves a check id or the word `all` into the list to run.
pub fn select(check_id: &str) -> Option<Vec<&'static CheckDef>> {
    if check_id == "all" {
        Some(REGISTRY.iter().collect())
    } else {
        find(check_id).map(|def| vec![def])
    }
}

/// Runs the selected checks on up to `jobs` worker threads. The returned
/// outcomes are sorted by id, so emission order never depends on scheduling.
pub fn run_selected(
    defs: &[&'static CheckDef],
    user: &UserBounds,
    jobs: usize,
) -> Vec<CheckOutcome> {
    let workers = jobs.clamp(1, defs.len().max(1));
    let next = AtomicUsize::new(0);
    let slots: Vec<Mutex<Option<CheckOutcome>>> =
        defs.iter().map(|_| Mutex::new(None)).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let index = next.fetch_add(1, Ordering::SeqCst);
                if index >= defs.len() {
                    break;
                }
                let def = defs[index];
                let bounds = def.resolve(user);
                let started = Instant::now();
                let failure = (def.runner)(&bounds);
                let outcome = CheckOutcome {
                    check_id: def.id,
                    order: if def.uses_series {
                        bounds.series_order
                    } else {
                        bounds.max_n
                    },
                    failure,
                    seconds: started.elapsed().as_secs_f64(),
                };
                *slots[index].lock().expect("no poisoned slot") = Some(outcome);
            });
        }
    });
    let mut outcomes: Vec<CheckOutcome> = slots
        .into_iter()
        .map(|slot| slot.into_inner().expect("no poisoned slot").expect("slot filled"))
        .collect();
    outcomes.sort_by(|a, b| a.check_id.cmp(b.check_id));
    outcomes
}

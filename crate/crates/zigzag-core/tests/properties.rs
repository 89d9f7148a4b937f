//! Exhaustive verification of the structural properties tying the statistics,
//! codes, and bijections together, over every permutation up to the stated
//! bound.

use std::collections::{HashMap, HashSet};

use num::BigInt;

use zigzag_core::bijections::{code3_inverse, hat_code_inverse};
use zigzag_core::enumerate::{
    ab_index, ahat_bivariate, alpha_hat_bruteforce, alpha_hat_formula, alt_eulerian_row_bruteforce,
    alt_eulerian_row_via_d3, alt_eulerian_triangle, beta_hat_formula, catalan, cd_index_alt,
    ehat_poly, euler_numbers, AbVariant,
};
use zigzag_core::exact::{q_factorial, Alphabet, IntPoly, NcPoly, Poly, Var};
use zigzag_core::perm::{
    append_max, cyclic_shift, enumerate_down_up, enumerate_first_fixed, enumerate_sn,
    enumerate_up_down, prepend_min, reverse_complement, zigzag_interleave,
};
use zigzag_core::stats::{
    alt_descent_set, altdesc_from_code, avoids_312, code3, count_pattern, d3, d3_set, hat_code,
    i3, i_hat, inv, major_index, stat, Vincular,
};

/// Number of tuples whose i-th entry ranges over `0..=len + 1 - i`.
fn staircase_size(len: usize) -> usize {
    (1..=len + 1).product()
}

/// Histogram of a statistic over an iterator of permutations, as a
/// polynomial in the designated variable.
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

fn subsets(max: usize) -> Vec<Vec<usize>> {
    (0..1u32 << max)
        .map(|mask| (1..=max).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect()
}

#[test]
fn codes_are_bijections_onto_staircases() {
    for n in 1..=8usize {
        let mut seen = HashSet::new();
        for p in enumerate_sn(n).unwrap() {
            let code = hat_code(&p);
            assert_eq!(code.len(), n - 1);
            for (j, &c) in code.iter().enumerate() {
                assert!(c <= n - 1 - j, "hat code out of range for {:?}", p);
            }
            assert_eq!(hat_code_inverse(&code).unwrap(), p);
            seen.insert(code);
        }
        assert_eq!(seen.len(), staircase_size(n - 1), "hat codes not onto at n = {n}");
    }
    for n in 2..=8usize {
        let mut seen = HashSet::new();
        for p in enumerate_first_fixed(n).unwrap() {
            let code = code3(&p);
            assert_eq!(code.len(), n - 2);
            for (j, &c) in code.iter().enumerate() {
                assert!(c <= n - 2 - j, "triple code out of range for {:?}", p);
            }
            assert_eq!(code3_inverse(&code).unwrap(), p);
            seen.insert(code);
        }
        assert_eq!(seen.len(), staircase_size(n - 2), "triple codes not onto at n = {n}");
    }
}

#[test]
fn interleaving_realizes_the_inversion_statistic() {
    for n in 0..=8usize {
        for p in enumerate_sn(n).unwrap() {
            assert_eq!(i_hat(&p), inv(&zigzag_interleave(&p)), "at {:?}", p);
        }
    }
}

#[test]
fn interleaving_and_reversal_are_bijections() {
    for n in 0..=7usize {
        let mut interleaved = HashSet::new();
        let mut reversed = HashSet::new();
        for p in enumerate_sn(n).unwrap() {
            interleaved.insert(zigzag_interleave(&p));
            reversed.insert(reverse_complement(&p));
            assert_eq!(reverse_complement(&reverse_complement(&p)), p);
        }
        let total: usize = (1..=n).product();
        assert_eq!(interleaved.len(), total);
        assert_eq!(reversed.len(), total);
    }
}

#[test]
fn mahonian_distributions() {
    for n in 1..=8usize {
        let by_hat = histogram(
            enumerate_sn(n).unwrap().map(|p| i_hat(&p)),
            Var::Q,
        );
        assert_eq!(by_hat, q_factorial(n), "hat inversions at n = {n}");
        let by_triples = histogram(
            enumerate_sn(n).unwrap().map(|p| i3(&prepend_min(&p))),
            Var::Q,
        );
        assert_eq!(by_triples, q_factorial(n), "triple inversions at n = {n}");
    }
}

#[test]
fn odd_pattern_inversions_match_major_index() {
    for n in 0..=8usize {
        for p in enumerate_sn(n).unwrap() {
            assert_eq!(
                i3(&prepend_min(&p)),
                major_index(&reverse_complement(&p)),
                "at {:?}",
                p
            );
        }
    }
}

#[test]
fn appended_maximum_realizes_the_pattern_statistic() {
    for n in 0..=8usize {
        for p in enumerate_sn(n).unwrap() {
            assert_eq!(i3(&append_max(&p)), stat(&p), "at {:?}", p);
        }
    }
}

#[test]
fn triple_descents_invariant_under_reverse_complement() {
    for n in 0..=8usize {
        for p in enumerate_sn(n).unwrap() {
            assert_eq!(d3(&p), d3(&reverse_complement(&p)), "at {:?}", p);
        }
    }
}

#[test]
fn alternating_descents_decoded_from_codes() {
    for n in 1..=8usize {
        for p in enumerate_sn(n).unwrap() {
            let decoded = altdesc_from_code(&hat_code(&p), n).unwrap();
            assert_eq!(decoded, alt_descent_set(&p), "hat code of {:?}", p);
        }
    }
    for n in 1..=8usize {
        for p in enumerate_first_fixed(n + 1).unwrap() {
            let decoded = altdesc_from_code(&code3(&p), n).unwrap();
            assert_eq!(decoded, d3_set(&p), "triple code of {:?}", p);
        }
    }
}

#[test]
fn cyclic_shifts_preserve_codes_and_triple_descents() {
    for n in 1..=8usize {
        for p in enumerate_sn(n).unwrap() {
            let code = code3(&p);
            let set = d3_set(&p);
            for k in 0..n {
                let shifted = cyclic_shift(&p, k);
                assert_eq!(code3(&shifted), code, "code after shifting {:?} by {k}", p);
                assert_eq!(d3_set(&shifted), set, "descents after shifting {:?} by {k}", p);
            }
        }
    }
}

#[test]
fn down_up_inversions_count_tail_patterns() {
    for n in 0..=8usize {
        for p in enumerate_down_up(n).unwrap() {
            assert_eq!(
                i_hat(&p),
                n * n / 4 + count_pattern(&p, Vincular::V31_2),
                "at {:?}",
                p
            );
        }
    }
}

#[test]
fn code_sums_characterize_alternating_permutations() {
    for n in 1..=8usize {
        for p in enumerate_sn(n).unwrap() {
            let code = hat_code(&p);
            let sum_at = |j: usize| {
                code[j] + if j + 1 < code.len() { code[j + 1] } else { 0 }
            };
            let all_low = (0..n - 1).all(|j| sum_at(j) <= n - 2 - j);
            let all_high = (0..n - 1).all(|j| sum_at(j) >= n - 1 - j);
            assert_eq!(p.is_up_down(), all_low, "at {:?}", p);
            assert_eq!(p.is_down_up(), all_high, "at {:?}", p);
        }
    }
}

#[test]
fn companion_polynomial_facts() {
    for n in 0..=8usize {
        let eh = ehat_poly(n).unwrap();
        let top = (n.saturating_sub(1)).pow(2) / 4;
        assert_eq!(eh.degree(), Some(top), "degree at n = {n}");
        assert_eq!(eh.coeff(top), BigInt::from(1), "leading coefficient at n = {n}");
        assert_eq!(eh.coeff(0), catalan(n / 2), "constant at n = {n}");
        let up_down_slice = ahat_bivariate(n).unwrap().at_t_zero();
        assert_eq!(
            up_down_slice,
            eh.reversed_to_degree(top).unwrap(),
            "reversal at n = {n}"
        );
    }
}

#[test]
fn alternating_avoiders_are_counted_by_catalan() {
    for n in 0..=9usize {
        let down_up = enumerate_down_up(n).unwrap();
        let avoiders = down_up.iter().filter(|p| avoids_312(p)).count();
        let tight = down_up.iter().filter(|p| i_hat(p) == n * n / 4).count();
        let expected = catalan(n / 2);
        assert_eq!(BigInt::from(avoiders), expected, "avoiders at n = {n}");
        assert_eq!(BigInt::from(tight), expected, "minimal inversions at n = {n}");
    }
}

#[test]
fn equal_codes_transport_descent_sets() {
    for n in 1..=7usize {
        let mut by_code: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for p in enumerate_first_fixed(n + 1).unwrap() {
            by_code.insert(code3(&p), d3_set(&p));
        }
        for p in enumerate_sn(n).unwrap() {
            let transported = &by_code[&hat_code(&p)];
            assert_eq!(transported, &alt_descent_set(&p), "at {:?}", p);
        }
    }
}

#[test]
fn containment_formulas_match_bruteforce() {
    for n in 1..=7usize {
        for s in subsets(n - 1) {
            assert_eq!(
                alpha_hat_formula(n, &s).unwrap(),
                alpha_hat_bruteforce(n, &s).unwrap(),
                "n = {n}, s = {:?}",
                s
            );
        }
    }
}

#[test]
fn flag_vector_sums_rebuild_the_ab_index() {
    for n in 1..=7usize {
        let mut rebuilt = NcPoly::zero(Alphabet::Ab);
        for s in subsets(n - 1) {
            let word: Vec<u8> = (1..=n - 1)
                .map(|i| if s.contains(&i) { b'b' } else { b'a' })
                .collect();
            rebuilt.add_term(&word, beta_hat_formula(n, &s).unwrap());
        }
        assert_eq!(rebuilt, ab_index(n, AbVariant::Alt).unwrap(), "at n = {n}");
    }
}

#[test]
fn compressed_index_coefficients() {
    let triangle = alt_eulerian_triangle(6).unwrap();
    let e = euler_numbers(7);
    for n in 1..=7usize {
        let phi = cd_index_alt(n).unwrap();
        let all_c = "c".repeat(n - 1);
        assert_eq!(phi.coeff(&all_c), e[n], "pure word at n = {n}");
        if n >= 3 {
            // Negating d picks out the second column of the triangle.
            let second = triangle.row(n - 1)[1].clone();
            let head = format!("{}d", "c".repeat(n - 3));
            let tail = format!("d{}", "c".repeat(n - 3));
            assert_eq!(-phi.coeff(&head), second, "one descent pair early at n = {n}");
            assert_eq!(-phi.coeff(&tail), second, "one descent pair late at n = {n}");
        }
    }
}

#[test]
fn zigzag_enumeration_counts() {
    let e = euler_numbers(10);
    for n in 0..=10usize {
        assert_eq!(BigInt::from(enumerate_down_up(n).unwrap().len()), e[n]);
        assert_eq!(BigInt::from(enumerate_up_down(n).unwrap().len()), e[n]);
    }
}

#[test]
fn triangle_routes_agree_exhaustively() {
    let triangle = alt_eulerian_triangle(8).unwrap();
    for n in 1..=8usize {
        let brute = alt_eulerian_row_bruteforce(n).unwrap();
        assert_eq!(brute, triangle.row(n), "direct route at n = {n}");
        let via_triples = alt_eulerian_row_via_d3(n).unwrap();
        assert_eq!(via_triples, triangle.row(n), "triple route at n = {n}");
    }
}

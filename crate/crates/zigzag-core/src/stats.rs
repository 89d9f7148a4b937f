//! Permutation statistics: descent-set variants, inversion codes, the major
//! index, and the handful of two-plus-one pattern counters the bijections
//! rely on.
//!
//! Position sets are returned as strictly increasing `Vec<usize>` of 1-based
//! positions. Inversion codes of length `k` always satisfy `a_i <= k+1-i`;
//! `altdesc_from_code` rejects inputs outside that range.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::perm::Perm;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum StatsError {
    #[error("unknown pattern {text:?}; expected one of 13-2, 21-3, 32-1, 31-2")]
    UnknownPattern { text: String },
    #[error("code {code:?} is not a valid inversion code for size {n}: {reason}")]
    BadCode { code: Vec<usize>, n: usize, reason: String },
}

/// Descent positions: `i` with `w(i) > w(i+1)`.
pub fn descent_set(p: &Perm) -> Vec<usize> {
    (1..p.n()).filter(|&i| p.at(i) > p.at(i + 1)).collect()
}

/// Number of descents.
pub fn des(p: &Perm) -> usize {
    descent_set(p).len()
}

/// Order-isomorphism type of three distinct values as a triple of ranks.
fn triple_pattern(a: usize, b: usize, c: usize) -> (u8, u8, u8) {
    let rank = |x: usize| 1 + [a, b, c].iter().filter(|&&y| y < x).count() as u8;
    (rank(a), rank(b), rank(c))
}

/// Whether three distinct values form one of the odd size-3 patterns
/// 132, 213, 321.
fn triple_is_odd(a: usize, b: usize, c: usize) -> bool {
    matches!(triple_pattern(a, b, c), (1, 3, 2) | (2, 1, 3) | (3, 2, 1))
}

/// 3-descent positions: `i` with `(w(i), w(i+1), w(i+2))` an odd pattern.
pub fn d3_set(p: &Perm) -> Vec<usize> {
    let n = p.n();
    if n < 3 {
        return Vec::new();
    }
    (1..=n - 2).filter(|&i| triple_is_odd(p.at(i), p.at(i + 1), p.at(i + 2))).collect()
}

/// Number of 3-descents.
pub fn d3(p: &Perm) -> usize {
    d3_set(p).len()
}

/// Alternating descent positions: odd-position descents and even-position
/// ascents. Empty exactly for up-down permutations.
pub fn alt_descent_set(p: &Perm) -> Vec<usize> {
    (1..p.n())
        .filter(|&i| if i % 2 == 1 { p.at(i) > p.at(i + 1) } else { p.at(i) < p.at(i + 1) })
        .collect()
}

/// Number of alternating descents.
pub fn d_hat(p: &Perm) -> usize {
    alt_descent_set(p).len()
}

/// Inversion table `(a_1, ..., a_{n-1})` with `a_i = #{j > i : w(i) > w(j)}`.
/// The last position is omitted since it never contributes.
pub fn lehmer_code(p: &Perm) -> Vec<usize> {
    let n = p.n();
    if n == 0 {
        return Vec::new();
    }
    (1..n).map(|i| (i + 1..=n).filter(|&j| p.at(i) > p.at(j)).count()).collect()
}

/// Number of inversions.
pub fn inv(p: &Perm) -> usize {
    lehmer_code(p).iter().sum()
}

/// 3-inversion table: entry `i` counts indices `j > i+1` such that
/// `(w(i), w(i+1), w(j))` is an odd pattern. Length `n - 2`.
pub fn code3(p: &Perm) -> Vec<usize> {
    let n = p.n();
    if n < 3 {
        return Vec::new();
    }
    (1..=n - 2)
        .map(|i| (i + 2..=n).filter(|&j| triple_is_odd(p.at(i), p.at(i + 1), p.at(j))).count())
        .collect()
}

/// Number of 3-inversions.
pub fn i3(p: &Perm) -> usize {
    code3(p).iter().sum()
}

/// Alternating inversion table: entry `i` counts `j > i` with `w(i) > w(j)`
/// at odd `i` and `w(i) < w(j)` at even `i`. Length `n - 1`.
pub fn hat_code(p: &Perm) -> Vec<usize> {
    let n = p.n();
    if n == 0 {
        return Vec::new();
    }
    (1..n)
        .map(|i| {
            (i + 1..=n)
                .filter(|&j| if i % 2 == 1 { p.at(i) > p.at(j) } else { p.at(i) < p.at(j) })
                .count()
        })
        .collect()
}

/// Number of alternating inversions.
pub fn i_hat(p: &Perm) -> usize {
    hat_code(p).iter().sum()
}

/// Sum of descent positions.
pub fn major_index(p: &Perm) -> usize {
    descent_set(p).iter().sum()
}

/// The four patterns of an adjacent pair followed by a later letter.
/// `V13_2` reads: adjacent values playing roles 1 and 3, the later letter
/// playing role 2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Vincular {
    V13_2,
    V21_3,
    V32_1,
    V31_2,
}

impl Vincular {
    pub const ALL: [Vincular; 4] = [Vincular::V13_2, Vincular::V21_3, Vincular::V32_1, Vincular::V31_2];

    fn matches(self, a: usize, b: usize, c: usize) -> bool {
        match self {
            Vincular::V13_2 => a < c && c < b,
            Vincular::V21_3 => b < a && a < c,
            Vincular::V32_1 => c < b && b < a,
            Vincular::V31_2 => b < c && c < a,
        }
    }
}

impl fmt::Display for Vincular {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Vincular::V13_2 => "13-2",
            Vincular::V21_3 => "21-3",
            Vincular::V32_1 => "32-1",
            Vincular::V31_2 => "31-2",
        };
        f.write_str(s)
    }
}

impl FromStr for Vincular {
    type Err = StatsError;

    fn from_str(s: &str) -> Result<Self, StatsError> {
        match s.trim() {
            "13-2" => Ok(Vincular::V13_2),
            "21-3" => Ok(Vincular::V21_3),
            "32-1" => Ok(Vincular::V32_1),
            "31-2" => Ok(Vincular::V31_2),
            other => Err(StatsError::UnknownPattern { text: other.to_string() }),
        }
    }
}

/// Occurrences of `pattern`: pairs `(i, j)` with `j > i+1` whose triple
/// `(w(i), w(i+1), w(j))` matches.
pub fn count_pattern(p: &Perm, pattern: Vincular) -> usize {
    let n = p.n();
    let mut total = 0;
    for i in 1..n.saturating_sub(1) {
        for j in i + 2..=n {
            if pattern.matches(p.at(i), p.at(i + 1), p.at(j)) {
                total += 1;
            }
        }
    }
    total
}

/// The Mahonian statistic combining the three odd-pattern counts with the
/// descent number.
pub fn stat(p: &Perm) -> usize {
    count_pattern(p, Vincular::V13_2)
        + count_pattern(p, Vincular::V21_3)
        + count_pattern(p, Vincular::V32_1)
        + des(p)
}

/// Reads an alternating descent set straight off an inversion code of length
/// `n - 1`: position `i` is selected when `a_i + a_{i+1} >= n - i`, with a
/// trailing zero appended.
pub fn altdesc_from_code(code: &[usize], n: usize) -> Result<Vec<usize>, StatsError> {
    if n == 0 || code.len() != n - 1 {
        return Err(StatsError::BadCode {
            code: code.to_vec(),
            n,
            reason: format!("length {} but size {n} needs {}", code.len(), n.max(1) - 1),
        });
    }
    for (idx, &a) in code.iter().enumerate() {
        let i = idx + 1;
        if a > n - i {
            return Err(StatsError::BadCode {
                code: code.to_vec(),
                n,
                reason: format!("entry {a} at position {i} exceeds {}", n - i),
            });
        }
    }
    let entry = |i: usize| if i <= n - 1 { code[i - 1] } else { 0 };
    Ok((1..n).filter(|&i| entry(i) + entry(i + 1) >= n - i).collect())
}

/// True when no three positions `i < k < j` carry values with
/// `w(k) < w(j) < w(i)`.
pub fn avoids_312(p: &Perm) -> bool {
    let n = p.n();
    for i in 1..=n {
        for k in i + 1..=n {
            for j in k + 1..=n {
                if p.at(k) < p.at(j) && p.at(j) < p.at(i) {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_sn, zigzag_interleave};

    fn p(vals: &[u8]) -> Perm {
        Perm::from_one_line(vals).unwrap()
    }

    #[test]
    fn descent_sets() {
        assert_eq!(descent_set(&p(&[4, 2, 3, 5, 1, 6])), vec![1, 4]);
        assert_eq!(descent_set(&p(&[1, 2, 3])), Vec::<usize>::new());
        assert_eq!(descent_set(&p(&[3, 2, 1])), vec![1, 2]);
        assert_eq!(des(&p(&[4, 2, 3, 5, 1, 6])), 2);
    }

    #[test]
    fn three_descent_sets() {
        assert_eq!(d3_set(&p(&[1, 3, 2])), vec![1]);
        assert_eq!(d3_set(&p(&[1, 3, 2, 4])), vec![1, 2]);
        assert_eq!(d3_set(&p(&[1, 2, 3, 4, 5])), Vec::<usize>::new());
        assert_eq!(d3_set(&p(&[2, 1])), Vec::<usize>::new());
        assert_eq!(d3(&p(&[1, 3, 2, 4])), 2);
    }

    #[test]
    fn alternating_descent_sets() {
        assert_eq!(alt_descent_set(&p(&[2, 1, 4, 3])), vec![1, 2, 3]);
        assert_eq!(alt_descent_set(&p(&[2, 3, 1])), Vec::<usize>::new());
        assert_eq!(alt_descent_set(&p(&[1, 3, 2])), Vec::<usize>::new());
        assert_eq!(d_hat(&p(&[1, 2, 3, 4])), 1);
        assert_eq!(alt_descent_set(&p(&[1, 2, 3, 4])), vec![2]);
    }

    #[test]
    fn lehmer_codes() {
        assert_eq!(lehmer_code(&p(&[2, 1, 4, 3])), vec![1, 0, 1]);
        assert_eq!(inv(&p(&[2, 1, 4, 3])), 2);
        assert_eq!(lehmer_code(&p(&[1, 2, 3, 4])), vec![0, 0, 0]);
        assert_eq!(lehmer_code(&p(&[4, 3, 2, 1])), vec![3, 2, 1]);
        assert_eq!(inv(&p(&[4, 3, 2, 1])), 6);
        assert_eq!(lehmer_code(&p(&[])), Vec::<usize>::new());
    }

    #[test]
    fn three_inversion_codes() {
        assert_eq!(code3(&p(&[1, 3, 2])), vec![1]);
        assert_eq!(i3(&p(&[1, 3, 2])), 1);
        assert_eq!(code3(&p(&[1, 3, 2, 4])), vec![1, 1]);
        assert_eq!(code3(&p(&[1, 2, 3, 4])), vec![0, 0]);
        assert_eq!(code3(&p(&[1, 2])), Vec::<usize>::new());
    }

    #[test]
    fn alternating_inversion_codes() {
        assert_eq!(hat_code(&p(&[2, 1, 4, 3])), vec![1, 2, 1]);
        assert_eq!(i_hat(&p(&[2, 1, 4, 3])), 4);
        assert_eq!(hat_code(&p(&[2, 3, 1])), vec![1, 0]);
        assert_eq!(i_hat(&p(&[2, 3, 1])), 1);
        assert_eq!(hat_code(&p(&[1, 2, 3, 4])), vec![0, 2, 0]);
        assert_eq!(i_hat(&p(&[1, 2, 3, 4])), 2);
    }

    #[test]
    fn hat_code_flips_even_lehmer_entries() {
        for n in 1..=6usize {
            for q in enumerate_sn(n).unwrap() {
                let a = lehmer_code(&q);
                let expect: Vec<usize> = a
                    .iter()
                    .enumerate()
                    .map(|(idx, &ai)| if idx % 2 == 0 { ai } else { n - 1 - idx - ai })
                    .collect();
                assert_eq!(hat_code(&q), expect, "at {q}");
            }
        }
    }

    #[test]
    fn interleave_carries_alternating_inversions_to_inversions() {
        for n in 0..=6usize {
            for q in enumerate_sn(n).unwrap() {
                assert_eq!(i_hat(&q), inv(&zigzag_interleave(&q)), "at {q}");
            }
        }
    }

    #[test]
    fn major_index_examples() {
        assert_eq!(major_index(&p(&[3, 1, 2])), 1);
        assert_eq!(major_index(&p(&[2, 3, 1])), 2);
        assert_eq!(major_index(&p(&[1, 2, 3])), 0);
    }

    #[test]
    fn pattern_counting() {
        assert_eq!(count_pattern(&p(&[3, 1, 4, 2]), Vincular::V31_2), 1);
        assert_eq!(stat(&p(&[2, 3, 1])), 1);
        assert_eq!("31-2".parse::<Vincular>().unwrap(), Vincular::V31_2);
        assert!("12-3".parse::<Vincular>().is_err());
        assert_eq!(Vincular::V13_2.to_string(), "13-2");
    }

    #[test]
    fn i3_splits_into_odd_pattern_counts() {
        for q in enumerate_sn(6).unwrap() {
            let split = count_pattern(&q, Vincular::V13_2)
                + count_pattern(&q, Vincular::V21_3)
                + count_pattern(&q, Vincular::V32_1);
            assert_eq!(i3(&q), split, "at {q}");
        }
    }

    #[test]
    fn descent_sets_from_codes() {
        assert_eq!(altdesc_from_code(&[1, 2, 1], 4).unwrap(), vec![1, 2, 3]);
        assert_eq!(altdesc_from_code(&[1, 0], 3).unwrap(), Vec::<usize>::new());
        assert_eq!(altdesc_from_code(&[0, 0, 0, 0], 5).unwrap(), Vec::<usize>::new());
        assert!(altdesc_from_code(&[4, 0, 0], 4).is_err());
        assert!(altdesc_from_code(&[1, 2], 4).is_err());
        for q in enumerate_sn(6).unwrap() {
            assert_eq!(altdesc_from_code(&hat_code(&q), 6).unwrap(), alt_descent_set(&q), "at {q}");
        }
    }

    #[test]
    fn pattern_312_avoidance() {
        assert!(avoids_312(&p(&[2, 1, 4, 3])));
        assert!(!avoids_312(&p(&[3, 1, 4, 2])));
        assert!(avoids_312(&p(&[1, 2, 3, 4, 5])));
    }
}

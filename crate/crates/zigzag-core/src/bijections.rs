//! Explicit bijections between permutations with first entry 1 and
//! permutations one letter shorter, the code inverses backing them, and the
//! block decomposition of up-down permutations.

use thiserror::Error;

use crate::perm::{cyclic_shift, star, Perm};
use crate::stats::{code3, hat_code};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BijectionError {
    #[error("permutation must start with 1, found {found}")]
    FirstEntryNotMin { found: usize },
    #[error("permutation must have at least {min} letters, found {found}")]
    TooShort { min: usize, found: usize },
    #[error("inversion code {code:?} is malformed: {reason}")]
    MalformedCode { code: Vec<usize>, reason: String },
    #[error("block decomposition needs an up-down permutation")]
    NotUpDown,
    #[error("blocks are not a partition of 1..={n}: {reason}")]
    BadBlocks { n: usize, reason: String },
}

/// Decodes a rank sequence: entry `i` is the rank of the result's letter `i`
/// within its first `i` letters.
fn ranks_to_perm(ranks: &[usize]) -> Perm {
    let mut w: Vec<u8> = Vec::with_capacity(ranks.len());
    for (idx, &r) in ranks.iter().enumerate() {
        debug_assert!(1 <= r && r <= idx + 1);
        for v in w.iter_mut() {
            if *v as usize >= r {
                *v += 1;
            }
        }
        w.push(r as u8);
    }
    Perm::from_one_line(&w).expect("rank decoding yields a permutation")
}

/// Rank of each letter within the prefix ending at it; inverse of
/// `ranks_to_perm`.
fn perm_to_ranks(p: &Perm) -> Vec<usize> {
    (1..=p.n()).map(|i| (1..=i).filter(|&k| p.at(k) <= p.at(i)).count()).collect()
}

/// Walk direction around the circle for the arc drawn at step `i`:
/// clockwise at odd steps, counterclockwise at even. The first arc is
/// clockwise by definition and every later arc enters the previous one
/// through the shared endpoint, which reverses the direction each step.
fn step_clockwise(i: usize) -> bool {
    i % 2 == 1
}

/// Arc lengths of the circle construction: `m` labeled points clockwise,
/// step `i` walks from `w(i)` to `w(i+1)` and counts how many of the first
/// `i` letters it passes, start included, end excluded.
fn circle_ranks(sigma: &Perm) -> Vec<usize> {
    let m = sigma.n();
    let placed_by_value = |value: usize, upto: usize| (1..=upto).any(|k| sigma.at(k) == value);
    let mut ranks = Vec::with_capacity(m - 1);
    for i in 1..m {
        let from = sigma.at(i);
        let to = sigma.at(i + 1);
        let mut count = 0;
        let mut v = from;
        while v != to {
            if placed_by_value(v, i) {
                count += 1;
            }
            v = if step_clockwise(i) { v % m + 1 } else { (v + m - 2) % m + 1 };
        }
        ranks.push(count);
    }
    ranks
}

/// Maps a permutation with first entry 1 to one with one letter fewer, so
/// that its 3-descent set becomes the image's alternating descent set.
pub fn circle_bijection(sigma: &Perm) -> Result<Perm, BijectionError> {
    if sigma.n() < 2 {
        return Err(BijectionError::TooShort { min: 2, found: sigma.n() });
    }
    if !sigma.first_entry_is_min() {
        return Err(BijectionError::FirstEntryNotMin { found: sigma.at(1) });
    }
    Ok(ranks_to_perm(&circle_ranks(sigma)))
}

/// Rebuilds the circle configuration from the rank sequence of `omega` by
/// inserting one point per step: walk from the previous point in the step's
/// direction past `rank` placed points and drop the new point there. Labels
/// are then read off clockwise starting at the first point.
pub fn circle_bijection_inverse(omega: &Perm) -> Result<Perm, BijectionError> {
    let n = omega.n();
    if n < 1 {
        return Err(BijectionError::TooShort { min: 1, found: n });
    }
    let ranks = perm_to_ranks(omega);
    // ring holds token ids (order of appearance) in clockwise order.
    let mut ring: Vec<usize> = vec![1];
    for i in 1..=n {
        let here = ring.iter().position(|&t| t == i).expect("token placed");
        let len = ring.len();
        // Pass `ranks[i-1]` placed tokens counting the start itself, then
        // insert just beyond the last one passed.
        let offset = ranks[i - 1] - 1;
        let insert_at = if step_clockwise(i) {
            (here + offset + 1) % len
        } else {
            (here + len - offset) % len
        };
        ring.insert(insert_at, i + 1);
    }
    let start = ring.iter().position(|&t| t == 1).expect("first token present");
    let mut w = vec![0u8; n + 1];
    for (dist, idx) in (0..=n).map(|d| (d, (start + d) % (n + 1))) {
        w[ring[idx] - 1] = dist as u8 + 1;
    }
    Ok(Perm::from_one_line(&w).expect("ring labeling yields a permutation"))
}

/// Checks `(a_1, ..., a_k)` against the staircase bound `a_i <= k+1-i`.
fn check_staircase(code: &[usize]) -> Result<(), BijectionError> {
    let k = code.len();
    for (idx, &a) in code.iter().enumerate() {
        if a > k - idx {
            return Err(BijectionError::MalformedCode {
                code: code.to_vec(),
                reason: format!("entry {a} at position {} exceeds {}", idx + 1, k - idx),
            });
        }
    }
    Ok(())
}

/// The unique permutation with first entry 1 whose 3-inversion table is
/// `code`. Built from the tail: each step prepends `size - entry` and then
/// shifts all values cyclically until the first entry is 1 again.
pub fn code3_inverse(code: &[usize]) -> Result<Perm, BijectionError> {
    check_staircase(code)?;
    let mut tau = Perm::from_one_line(&[1, 2]).expect("base word");
    for (idx, &a) in code.iter().enumerate().rev() {
        let m = code.len() - idx + 2;
        let ell = m - a;
        let rho = star(ell, &tau).expect("prepended value within range");
        let k = (1 + m - rho.at(1)) % m;
        tau = cyclic_shift(&rho, k);
        debug_assert!(tau.first_entry_is_min());
    }
    assert_eq!(code3(&tau), code, "3-inversion table round trip");
    Ok(tau)
}

/// The unique permutation whose alternating inversion table is `code`:
/// odd entries are inversion counts as-is, even entries count
/// non-inversions, so flipping them yields an ordinary inversion table to
/// decode.
pub fn hat_code_inverse(code: &[usize]) -> Result<Perm, BijectionError> {
    check_staircase(code)?;
    let n = code.len() + 1;
    let lehmer: Vec<usize> = code
        .iter()
        .enumerate()
        .map(|(idx, &c)| if idx % 2 == 0 { c } else { n - 1 - idx - c })
        .collect();
    let mut remaining: Vec<u8> = (1..=n as u8).collect();
    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let a = if i < n - 1 { lehmer[i] } else { 0 };
        w.push(remaining.remove(a));
    }
    let p = Perm::from_one_line(&w).expect("inversion table decoding yields a permutation");
    debug_assert_eq!(hat_code(&p), code);
    Ok(p)
}

/// Composes the two inversion codes into a bijection from permutations of
/// `n` letters to permutations of `n + 1` letters starting with 1; carries
/// alternating descents to 3-descents and alternating inversions to
/// 3-inversions.
pub fn code_bijection(p: &Perm) -> Perm {
    if p.n() == 0 {
        return Perm::identity(1);
    }
    code3_inverse(&hat_code(p)).expect("a valid alternating inversion table")
}

/// Cuts an up-down permutation into blocks: the first ends at the value 1,
/// the next at the maximum of what remains, the next at the minimum, and so
/// on alternately.
pub fn block_decompose(p: &Perm) -> Result<Vec<Vec<u8>>, BijectionError> {
    if !p.is_up_down() {
        return Err(BijectionError::NotUpDown);
    }
    let mut rest = p.one_line();
    let mut blocks = Vec::new();
    let mut take_min = true;
    while !rest.is_empty() {
        let target = if take_min { rest.iter().min() } else { rest.iter().max() };
        let target = *target.expect("nonempty remainder");
        let cut = rest.iter().position(|&v| v == target).expect("present") + 1;
        blocks.push(rest[..cut].to_vec());
        rest = &rest[cut..];
        take_min = !take_min;
    }
    Ok(blocks)
}

/// Reorders blocks by the containment rule (1 first, then the largest
/// remaining value, then the smallest, alternately) and concatenates.
pub fn block_assemble(blocks: &[Vec<u8>]) -> Result<Perm, BijectionError> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut owner = vec![usize::MAX; n + 1];
    for (b, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            return Err(BijectionError::BadBlocks { n, reason: "empty block".to_string() });
        }
        for &v in block {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(BijectionError::BadBlocks { n, reason: format!("value {v} out of range") });
            }
            if owner[v] != usize::MAX {
                return Err(BijectionError::BadBlocks { n, reason: format!("value {v} repeats") });
            }
            owner[v] = b;
        }
    }
    let mut used = vec![false; blocks.len()];
    let mut unused_values: Vec<usize> = (1..=n).collect();
    let mut w: Vec<u8> = Vec::with_capacity(n);
    let mut take_min = true;
    for _ in 0..blocks.len() {
        let &pivot = if take_min { unused_values.first() } else { unused_values.last() }
            .expect("values remain while blocks remain");
        let b = owner[pivot];
        debug_assert!(!used[b]);
        used[b] = true;
        w.extend_from_slice(&blocks[b]);
        unused_values.retain(|&v| owner[v] != b);
        take_min = !take_min;
    }
    Perm::from_one_line(&w).map_err(|_| BijectionError::BadBlocks {
        n,
        reason: "blocks do not concatenate to a permutation".to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_first_fixed, enumerate_sn, enumerate_up_down};
    use crate::stats::{alt_descent_set, d3_set};

    fn p(vals: &[u8]) -> Perm {
        Perm::from_one_line(vals).unwrap()
    }

    #[test]
    fn circle_small_cases() {
        assert_eq!(circle_bijection(&p(&[1, 2, 3])).unwrap(), p(&[1, 2]));
        assert_eq!(circle_bijection(&p(&[1, 3, 2])).unwrap(), p(&[2, 1]));
        assert_eq!(circle_bijection(&p(&[1, 2])).unwrap(), p(&[1]));
        assert!(circle_bijection(&p(&[2, 1])).is_err());
        assert!(circle_bijection(&p(&[1])).is_err());
    }

    #[test]
    fn circle_four_letter_table() {
        let table = [
            ([1u8, 2, 3, 4], [2u8, 3, 1]),
            ([1, 2, 4, 3], [1, 2, 3]),
            ([1, 3, 2, 4], [3, 1, 2]),
            ([1, 3, 4, 2], [1, 3, 2]),
            ([1, 4, 2, 3], [3, 2, 1]),
            ([1, 4, 3, 2], [2, 1, 3]),
        ];
        for (sigma, omega) in table {
            assert_eq!(circle_bijection(&p(&sigma)).unwrap(), p(&omega));
            assert_eq!(circle_bijection_inverse(&p(&omega)).unwrap(), p(&sigma));
        }
    }

    #[test]
    fn circle_round_trip_and_transport() {
        for n in 1..=5usize {
            for sigma in enumerate_first_fixed(n + 1).unwrap() {
                let omega = circle_bijection(&sigma).unwrap();
                assert_eq!(omega.n(), n);
                assert_eq!(circle_bijection_inverse(&omega).unwrap(), sigma, "round trip at {sigma}");
                assert_eq!(d3_set(&sigma), alt_descent_set(&omega), "descent transport at {sigma}");
            }
        }
    }

    #[test]
    fn circle_arcs_nest() {
        // Each walk's gap interval must contain or be contained in the
        // previous one; gap g sits clockwise of point g.
        for sigma in enumerate_first_fixed(6).unwrap() {
            let m = sigma.n();
            let gaps_of = |i: usize| {
                let mut gaps = Vec::new();
                let mut v = sigma.at(i);
                while v != sigma.at(i + 1) {
                    if i % 2 == 1 {
                        gaps.push(v);
                        v = v % m + 1;
                    } else {
                        v = (v + m - 2) % m + 1;
                        gaps.push(v);
                    }
                }
                gaps.sort();
                gaps
            };
            for i in 2..m {
                let prev = gaps_of(i - 1);
                let cur = gaps_of(i);
                let contains = |big: &[usize], small: &[usize]| small.iter().all(|g| big.contains(g));
                assert!(
                    contains(&prev, &cur) || contains(&cur, &prev),
                    "arcs {i} and {} fail to nest for {sigma}",
                    i - 1
                );
            }
        }
    }

    #[test]
    fn code3_inverse_examples() {
        assert_eq!(code3_inverse(&[1]).unwrap(), p(&[1, 3, 2]));
        assert_eq!(code3_inverse(&[0, 0]).unwrap(), p(&[1, 2, 3, 4]));
        assert_eq!(code3_inverse(&[]).unwrap(), p(&[1, 2]));
        assert!(code3_inverse(&[2]).is_err());
    }

    #[test]
    fn code3_inverse_covers_staircase() {
        // All codes with entries a_i <= k+1-i for k = 3 decode to distinct
        // five-letter words and round-trip.
        let mut seen = Vec::new();
        for a1 in 0..=3usize {
            for a2 in 0..=2usize {
                for a3 in 0..=1usize {
                    let code = [a1, a2, a3];
                    let sigma = code3_inverse(&code).unwrap();
                    assert_eq!(sigma.n(), 5);
                    assert!(sigma.first_entry_is_min());
                    assert_eq!(code3(&sigma), code);
                    assert!(!seen.contains(&sigma));
                    seen.push(sigma);
                }
            }
        }
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn hat_code_inverse_examples() {
        assert_eq!(hat_code_inverse(&[1, 2, 1]).unwrap(), p(&[2, 1, 4, 3]));
        assert_eq!(hat_code_inverse(&[0, 0, 0]).unwrap(), p(&[1, 4, 2, 3]));
        assert_eq!(hat_code(&p(&[1, 4, 2, 3])), vec![0, 0, 0]);
        assert!(hat_code_inverse(&[3, 0]).is_err());
        for q in enumerate_sn(6).unwrap() {
            assert_eq!(hat_code_inverse(&hat_code(&q)).unwrap(), q, "round trip at {q}");
        }
    }

    #[test]
    fn code_bijection_examples_and_transport() {
        assert_eq!(code_bijection(&p(&[1, 2])), p(&[1, 2, 3]));
        assert_eq!(code_bijection(&p(&[2, 1])), p(&[1, 3, 2]));
        assert_eq!(code_bijection(&p(&[])), p(&[1]));
        for q in enumerate_sn(5).unwrap() {
            let omega = code_bijection(&q);
            assert!(omega.first_entry_is_min());
            assert_eq!(d3_set(&omega), alt_descent_set(&q), "descent transport at {q}");
        }
    }

    #[test]
    fn block_examples() {
        let blocks = block_decompose(&p(&[5, 9, 3, 4, 1, 8, 6, 7, 2])).unwrap();
        assert_eq!(blocks, vec![vec![5, 9, 3, 4, 1], vec![8], vec![6, 7, 2]]);
        assert_eq!(block_decompose(&p(&[1, 2])).unwrap(), vec![vec![1], vec![2]]);
        assert!(block_decompose(&p(&[2, 1])).is_err());
        assert_eq!(block_decompose(&p(&[])).unwrap(), Vec::<Vec<u8>>::new());
    }

    #[test]
    fn block_round_trip_any_order() {
        for n in 0..=7usize {
            for sigma in enumerate_up_down(n).unwrap() {
                let mut blocks = block_decompose(&sigma).unwrap();
                assert!(blocks.iter().all(|b| b.len() % 2 == 1), "even block for {sigma}");
                blocks.reverse();
                assert_eq!(block_assemble(&blocks).unwrap(), sigma, "round trip at {sigma}");
            }
        }
    }

    #[test]
    fn block_assemble_rejects_non_partitions() {
        assert!(block_assemble(&[vec![1, 3]]).is_err());
        assert!(block_assemble(&[vec![1], vec![1]]).is_err());
        assert!(block_assemble(&[vec![]]).is_err());
    }
}

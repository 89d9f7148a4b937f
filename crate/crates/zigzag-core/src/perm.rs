//! Permutations in one-line notation, streaming enumeration, and the basic
//! operations the bijections build on.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Default enumeration cap for the full symmetric group.
pub const MAX_ENUM_N: usize = 10;

/// Default cap for permutations with first entry fixed to 1; one step higher
/// because fixing the first entry divides the count by the size.
pub const MAX_ENUM_FIRST_FIXED: usize = 11;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("not a permutation of 1..={n}: {reason}")]
    Invalid { n: usize, reason: String },
    #[error("cannot parse {text:?} as a comma-separated permutation")]
    Parse { text: String },
    #[error("size {n} exceeds the enumeration cap {cap}")]
    AboveCap { n: usize, cap: usize },
    #[error("enumeration of first-entry-fixed permutations needs size >= 1")]
    EmptyFirstFixed,
    #[error("insertion value {value} is out of range 1..={max}")]
    InsertOutOfRange { value: usize, max: usize },
}

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    w: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { w: (1..=n as u8).collect() }
    }

    /// Validates that `vals` is a rearrangement of `1..=n`.
    pub fn from_one_line(vals: &[u8]) -> Result<Self, PermError> {
        let n = vals.len();
        let mut seen = vec![false; n + 1];
        for &v in vals {
            let v = v as usize;
            if v == 0 || v > n {
                return Err(PermError::Invalid { n, reason: format!("entry {v} out of range") });
            }
            if seen[v] {
                return Err(PermError::Invalid { n, reason: format!("entry {v} repeats") });
            }
            seen[v] = true;
        }
        Ok(Perm { w: vals.to_vec() })
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.w
    }

    /// Value at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.w[i - 1] as usize
    }

    /// 1-based position of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        1 + self.w.iter().position(|&x| x as usize == v).expect("value present")
    }

    pub fn first_entry_is_min(&self) -> bool {
        self.w.first() == Some(&1)
    }

    /// Ascent/descent shape `e(i) = sign(at(i+1) - at(i))`; positive entries
    /// are ascents.
    pub fn is_up_down(&self) -> bool {
        self.w.windows(2).enumerate().all(|(i, w)| (w[0] < w[1]) == (i % 2 == 0))
    }

    pub fn is_down_up(&self) -> bool {
        self.w.windows(2).enumerate().all(|(i, w)| (w[0] > w[1]) == (i % 2 == 0))
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.w.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Perm {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Perm::from_one_line(&[]);
        }
        let vals: Result<Vec<u8>, _> = trimmed.split(',').map(|p| p.trim().parse::<u8>()).collect();
        match vals {
            Ok(v) => Perm::from_one_line(&v),
            Err(_) => Err(PermError::Parse { text: s.to_string() }),
        }
    }
}

/// Streaming iterator over all of `S_n` in lexicographic order.
pub struct PermIter {
    next: Option<Vec<u8>>,
    fixed_first: bool,
}

impl Iterator for PermIter {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let current = self.next.take()?;
        let out = Perm { w: current.clone() };
        self.next = next_lex(current, self.fixed_first);
        Some(out)
    }
}

/// In-place lexicographic successor; `fixed_first` freezes position 1.
fn next_lex(mut w: Vec<u8>, fixed_first: bool) -> Option<Vec<u8>> {
    let lo = usize::from(fixed_first);
    let n = w.len();
    if n < lo + 2 {
        return None;
    }
    let mut i = n - 1;
    while i > lo && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == lo {
        return None;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    Some(w)
}

/// All permutations of `[n]` in lexicographic order, refusing sizes over the
/// desk-scale cap.
pub fn enumerate_sn(n: usize) -> Result<PermIter, PermError> {
    if n > MAX_ENUM_N {
        return Err(PermError::AboveCap { n, cap: MAX_ENUM_N });
    }
    Ok(enumerate_sn_unbounded(n))
}

/// Cap-free variant backing explicit overrides.
pub fn enumerate_sn_unbounded(n: usize) -> PermIter {
    PermIter { next: Some((1..=n as u8).collect()), fixed_first: false }
}

/// Permutations of `[n]` with first entry 1, lexicographically.
pub fn enumerate_first_fixed(n: usize) -> Result<PermIter, PermError> {
    if n == 0 {
        return Err(PermError::EmptyFirstFixed);
    }
    if n > MAX_ENUM_FIRST_FIXED {
        return Err(PermError::AboveCap { n, cap: MAX_ENUM_FIRST_FIXED });
    }
    Ok(enumerate_first_fixed_unbounded(n))
}

pub fn enumerate_first_fixed_unbounded(n: usize) -> PermIter {
    assert!(n >= 1);
    PermIter { next: Some((1..=n as u8).collect()), fixed_first: true }
}

fn zigzag_from(prefix: &mut Vec<u8>, free: &mut Vec<u8>, down_first: bool, out: &mut Vec<Perm>) {
    if free.is_empty() {
        out.push(Perm { w: prefix.clone() });
        return;
    }
    let i = prefix.len();
    let want_descent = if down_first { i % 2 == 1 } else { i % 2 == 0 };
    for idx in 0..free.len() {
        let candidate = free[idx];
        let last = *prefix.last().unwrap();
        if (candidate < last) != want_descent {
            continue;
        }
        free.remove(idx);
        prefix.push(candidate);
        zigzag_from(prefix, free, down_first, out);
        prefix.pop();
        free.insert(idx, candidate);
    }
}

fn enumerate_zigzag(n: usize, down_first: bool) -> Vec<Perm> {
    if n == 0 {
        return vec![Perm::identity(0)];
    }
    let mut out = Vec::new();
    for first in 1..=n as u8 {
        let mut prefix = vec![first];
        let mut free: Vec<u8> = (1..=n as u8).filter(|&v| v != first).collect();
        zigzag_from(&mut prefix, &mut free, down_first, &mut out);
    }
    out.sort();
    out
}

/// Down-up permutations: descents at odd positions, ascents at even.
pub fn enumerate_down_up(n: usize) -> Result<Vec<Perm>, PermError> {
    if n > MAX_ENUM_N {
        return Err(PermError::AboveCap { n, cap: MAX_ENUM_N });
    }
    Ok(enumerate_zigzag(n, true))
}

/// Up-down permutations: ascents at odd positions, descents at even.
pub fn enumerate_up_down(n: usize) -> Result<Vec<Perm>, PermError> {
    if n > MAX_ENUM_N {
        return Err(PermError::AboveCap { n, cap: MAX_ENUM_N });
    }
    Ok(enumerate_zigzag(n, false))
}

/// Adds `k` to every value cyclically: `v -> ((v - 1 + k) mod n) + 1`.
pub fn cyclic_shift(p: &Perm, k: usize) -> Perm {
    let n = p.n();
    if n == 0 {
        return p.clone();
    }
    let w = p.w.iter().map(|&v| (((v as usize - 1 + k) % n) + 1) as u8).collect();
    Perm { w }
}

/// Reverses the word and complements every value.
pub fn reverse_complement(p: &Perm) -> Perm {
    let n = p.n() as u8;
    let w = p.w.iter().rev().map(|&v| n + 1 - v).collect();
    Perm { w }
}

/// Reads odd positions left to right, then even positions right to left.
pub fn zigzag_interleave(p: &Perm) -> Perm {
    let mut w: Vec<u8> = p.w.iter().copied().step_by(2).collect();
    w.extend(p.w.iter().copied().skip(1).step_by(2).rev());
    Perm { w }
}

/// Prepends `value` and renumbers: entries of `tau` that are `>= value` grow
/// by one, so the result is a permutation of one more letter starting with
/// `value`.
pub fn star(value: usize, tau: &Perm) -> Result<Perm, PermError> {
    let m = tau.n() + 1;
    if value == 0 || value > m {
        return Err(PermError::InsertOutOfRange { value, max: m });
    }
    let mut w = Vec::with_capacity(m);
    w.push(value as u8);
    for &v in &tau.w {
        w.push(if v as usize >= value { v + 1 } else { v });
    }
    Ok(Perm { w })
}

/// Prepends a new minimum (shifting all values up by one).
pub fn prepend_min(p: &Perm) -> Perm {
    star(1, p).expect("1 is always insertable")
}

/// Appends a new maximum.
pub fn append_max(p: &Perm) -> Perm {
    let mut w = p.w.clone();
    w.push(p.n() as u8 + 1);
    Perm { w }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(vals: &[u8]) -> Perm {
        Perm::from_one_line(vals).unwrap()
    }

    #[test]
    fn validation_rejects_bad_words() {
        assert!(Perm::from_one_line(&[1, 3]).is_err());
        assert!(Perm::from_one_line(&[2, 2, 1]).is_err());
        assert!(Perm::from_one_line(&[0, 1]).is_err());
        assert!(Perm::from_one_line(&[]).is_ok());
    }

    #[test]
    fn parse_and_display_round_trip() {
        let q: Perm = "4,2,3,5,1,6".parse().unwrap();
        assert_eq!(q.to_string(), "4,2,3,5,1,6");
        assert!("4;2".parse::<Perm>().is_err());
        assert!("1,1".parse::<Perm>().is_err());
    }

    #[test]
    fn lexicographic_enumeration() {
        let all: Vec<String> = enumerate_sn(3).unwrap().map(|q| q.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2", "2,1,3", "2,3,1", "3,1,2", "3,2,1"]);
        assert_eq!(enumerate_sn(6).unwrap().count(), 720);
        assert_eq!(enumerate_sn(0).unwrap().count(), 1);
        assert!(matches!(enumerate_sn(11), Err(PermError::AboveCap { n: 11, cap: 10 })));
    }

    #[test]
    fn first_fixed_enumeration() {
        let all: Vec<String> = enumerate_first_fixed(3).unwrap().map(|q| q.to_string()).collect();
        assert_eq!(all, ["1,2,3", "1,3,2"]);
        assert_eq!(enumerate_first_fixed(6).unwrap().count(), 120);
        assert!(enumerate_first_fixed(0).is_err());
        assert!(enumerate_first_fixed(1).unwrap().eq([p(&[1])]));
    }

    #[test]
    fn zigzag_enumeration_counts_and_shapes() {
        // Euler numbers 1, 1, 1, 2, 5, 16, 61, 272.
        let euler = [1usize, 1, 1, 2, 5, 16, 61, 272];
        for (n, &e) in euler.iter().enumerate() {
            let down = enumerate_down_up(n).unwrap();
            let up = enumerate_up_down(n).unwrap();
            assert_eq!(down.len(), e, "down-up count at n={n}");
            assert_eq!(up.len(), e, "up-down count at n={n}");
            assert!(down.iter().all(Perm::is_down_up));
            assert!(up.iter().all(Perm::is_up_down));
        }
        let updown3: Vec<String> = enumerate_up_down(3).unwrap().iter().map(|q| q.to_string()).collect();
        assert_eq!(updown3, ["1,3,2", "2,3,1"]);
    }

    #[test]
    fn cyclic_shift_maps_values() {
        assert_eq!(cyclic_shift(&p(&[1, 3, 2, 4]), 1), p(&[2, 4, 3, 1]));
        assert_eq!(cyclic_shift(&p(&[1, 3, 2, 4]), 4), p(&[1, 3, 2, 4]));
        assert_eq!(cyclic_shift(&p(&[2, 1]), 3), p(&[1, 2]));
    }

    #[test]
    fn reverse_complement_example() {
        assert_eq!(reverse_complement(&p(&[2, 3, 1])), p(&[3, 1, 2]));
        assert_eq!(reverse_complement(&p(&[])), p(&[]));
    }

    #[test]
    fn interleave_examples() {
        assert_eq!(zigzag_interleave(&p(&[1, 2, 3, 4])), p(&[1, 3, 4, 2]));
        assert_eq!(zigzag_interleave(&p(&[1, 2, 3, 4, 5, 6])), p(&[1, 3, 5, 6, 4, 2]));
        assert_eq!(zigzag_interleave(&p(&[1])), p(&[1]));
    }

    #[test]
    fn star_and_appends() {
        assert_eq!(star(1, &p(&[2, 1])).unwrap(), p(&[1, 3, 2]));
        assert_eq!(star(4, &p(&[1, 2, 3])).unwrap(), p(&[4, 1, 2, 3]));
        assert!(star(5, &p(&[1, 2, 3])).is_err());
        assert!(star(0, &p(&[1])).is_err());
        assert_eq!(prepend_min(&p(&[2, 1])), p(&[1, 3, 2]));
        assert_eq!(append_max(&p(&[2, 3, 1])), p(&[2, 3, 1, 4]));
    }
}

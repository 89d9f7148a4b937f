//! Polynomials in noncommuting variables, over the two-letter alphabets
//! `ab` and `cd`.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::traits::Zero;

/// Word alphabet; `Any` tags constants, which embed in either alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Alphabet {
    Ab,
    Cd,
    Any,
}

impl Alphabet {
    pub fn letters(self) -> &'static [u8] {
        match self {
            Alphabet::Ab => b"ab",
            Alphabet::Cd => b"cd",
            Alphabet::Any => b"",
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Alphabet::Ab => "ab",
            Alphabet::Cd => "cd",
            Alphabet::Any => "_",
        }
    }

    fn unify(self, other: Alphabet) -> Alphabet {
        match (self, other) {
            (Alphabet::Any, x) => x,
            (x, Alphabet::Any) => x,
            (a, b) if a == b => a,
            (a, b) => panic!("mixed alphabets {} and {}", a.name(), b.name()),
        }
    }

    fn admits(self, word: &[u8]) -> bool {
        word.iter().all(|l| self.letters().contains(l))
    }
}

/// Sparse noncommutative polynomial: words mapped to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct NcPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl NcPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        NcPoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::monomial(alphabet, "", BigInt::from(1))
    }

    pub fn monomial(alphabet: Alphabet, word: &str, coeff: BigInt) -> Self {
        assert!(
            alphabet.admits(word.as_bytes()),
            "word {word:?} does not fit alphabet {}",
            alphabet.name()
        );
        let mut p = Self::zero(alphabet);
        p.add_term(word.as_bytes(), coeff);
        p
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn add_term(&mut self, word: &[u8], coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(word.to_vec()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(word);
        }
    }

    pub fn coeff(&self, word: &str) -> BigInt {
        self.terms.get(word.as_bytes()).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic word order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &BigInt)> {
        self.terms.iter().map(|(w, c)| (w.as_slice(), c))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.alphabet = self.alphabet.unify(rhs.alphabet);
        for (w, c) in &rhs.terms {
            out.add_term(w, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        NcPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = Self::zero(self.alphabet);
        for (w, c) in &self.terms {
            out.add_term(w, c * s);
        }
        out
    }

    /// Word concatenation extended bilinearly.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero(self.alphabet.unify(rhs.alphabet));
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(&w, c1 * c2);
            }
        }
        out
    }

    /// The algebra homomorphism sending each letter to `image(letter)`.
    pub fn substitute(&self, target: Alphabet, image: impl Fn(u8) -> NcPoly) -> NcPoly {
        let mut out = NcPoly::zero(target);
        for (word, c) in &self.terms {
            let mut prod = NcPoly::one(target);
            for &letter in word {
                prod = prod.mul(&image(letter));
            }
            out = out.add(&prod.scale(c));
        }
        out
    }

    /// Evaluation with commuting numeric letter values.
    pub fn eval_commutative(&self, value: impl Fn(u8) -> BigInt) -> BigInt {
        let mut total = BigInt::zero();
        for (word, c) in &self.terms {
            let mut prod = c.clone();
            for &letter in word {
                prod *= value(letter);
            }
            total += prod;
        }
        total
    }

    /// Sum of all coefficients.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        assert!(self.alphabet != Alphabet::Any, "cannot serialize without an alphabet");
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                serde_json::json!({
                    "word": String::from_utf8_lossy(w),
                    "c": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "alphabet": self.alphabet.name(), "terms": terms })
    }
}

impl PartialEq for NcPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.terms != other.terms {
            return false;
        }
        self.alphabet == other.alphabet
            || self.alphabet == Alphabet::Any
            || other.alphabet == Alphabet::Any
    }
}

impl Eq for NcPoly {}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (word, c)) in self.terms.iter().enumerate() {
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
            if mag != "1" || word.is_empty() {
                write!(f, "{mag}")?;
            }
            f.write_str(&String::from_utf8_lossy(word))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn cd(word: &str, c: i64) -> NcPoly {
        NcPoly::monomial(Alphabet::Cd, word, int(c))
    }

    #[test]
    fn concatenation_is_noncommutative() {
        let c = cd("c", 1);
        let d = cd("d", 1);
        assert_ne!(c.mul(&d), d.mul(&c));
        assert_eq!(c.mul(&d).coeff("cd"), int(1));
    }

    #[test]
    fn substitution_into_ab_expands_words() {
        // c^2 + d under c -> a+b, d -> ab+ba gives aa + 2ab + 2ba + bb.
        let p = cd("cc", 1).add(&cd("d", 1));
        let image = |letter: u8| match letter {
            b'c' => NcPoly::monomial(Alphabet::Ab, "a", int(1))
                .add(&NcPoly::monomial(Alphabet::Ab, "b", int(1))),
            b'd' => NcPoly::monomial(Alphabet::Ab, "ab", int(1))
                .add(&NcPoly::monomial(Alphabet::Ab, "ba", int(1))),
            _ => unreachable!(),
        };
        let q = p.substitute(Alphabet::Ab, image);
        assert_eq!(q.coeff("aa"), int(1));
        assert_eq!(q.coeff("ab"), int(2));
        assert_eq!(q.coeff("ba"), int(2));
        assert_eq!(q.coeff("bb"), int(1));
    }

    #[test]
    fn substitution_within_cd() {
        // d -> c^2 - d applied to c^2 + d gives 2c^2 - d.
        let p = cd("cc", 1).add(&cd("d", 1));
        let image = |letter: u8| match letter {
            b'c' => cd("c", 1),
            b'd' => cd("cc", 1).add(&cd("d", -1)),
            _ => unreachable!(),
        };
        let q = p.substitute(Alphabet::Cd, image);
        assert_eq!(q, cd("cc", 2).add(&cd("d", -1)));
    }

    #[test]
    fn commutative_evaluation() {
        let p = cd("cc", 1).add(&cd("d", 1));
        let v = p.eval_commutative(|l| if l == b'c' { int(1) } else { int(2) });
        assert_eq!(v, int(3));
    }

    #[test]
    fn display_and_json() {
        let p = cd("cc", 2).add(&cd("d", -1));
        assert_eq!(p.to_string(), "2cc - d");
        let v = p.to_json();
        assert_eq!(v["alphabet"], "cd");
        assert_eq!(v["terms"][0]["word"], "cc");
    }

    #[test]
    #[should_panic(expected = "mixed alphabets")]
    fn mixing_alphabets_panics() {
        let a = NcPoly::monomial(Alphabet::Ab, "a", int(1));
        let c = cd("c", 1);
        let _ = a.add(&c);
    }
}

//! Plain-text, JSON, and CSV rendering for the exact polynomial types.
//!
//! Text output lists terms in ascending degree (for commutative polynomials)
//! or in the map's deterministic key order (for bivariate and word-indexed
//! polynomials), so repeated runs print byte-identical strings.

use num::bigint::Sign;
use num::traits::{One, Zero};
use num::{BigInt, Signed};
use zigzag_core::exact::{BiPoly, IntPoly, NcPoly};

fn pow_body(var: &str, exp: usize) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{exp}"),
    }
}

/// Appends one signed term, eliding unit coefficients next to a variable body.
fn push_term(out: &mut String, coeff: &BigInt, body: &str) {
    if coeff.is_zero() {
        return;
    }
    let negative = coeff.sign() == Sign::Minus;
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let magnitude = coeff.abs();
    if !magnitude.is_one() || body.is_empty() {
        out.push_str(&magnitude.to_string());
    }
    out.push_str(body);
}

fn finish(out: String) -> String {
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

pub fn int_poly_text(p: &IntPoly) -> String {
    let var = p.var().symbol();
    let mut out = String::new();
    for (k, coeff) in p.coeffs().iter().enumerate() {
        push_term(&mut out, coeff, &pow_body(var, k));
    }
    finish(out)
}

pub fn bipoly_text(p: &BiPoly) -> String {
    let mut out = String::new();
    for (&(t_exp, q_exp), coeff) in p.terms() {
        let body = format!(
            "{}{}",
            pow_body("t", t_exp as usize),
            pow_body("q", q_exp as usize)
        );
        push_term(&mut out, coeff, &body);
    }
    finish(out)
}

pub fn nc_poly_text(p: &NcPoly) -> String {
    let mut out = String::new();
    for (word, coeff) in p.terms() {
        let body = String::from_utf8(word.to_vec()).expect("letters are ascii");
        push_term(&mut out, coeff, &body);
    }
    finish(out)
}

/// CSV rows `degree,coefficient` for the nonzero terms, ascending degree.
pub fn int_poly_csv(p: &IntPoly) -> String {
    let mut lines = vec!["degree,coefficient".to_string()];
    for (k, coeff) in p.coeffs().iter().enumerate() {
        if !coeff.is_zero() {
            lines.push(format!("{k},{coeff}"));
        }
    }
    lines.join("\n")
}

/// CSV rows `t_degree,q_degree,coefficient` in deterministic key order.
pub fn bipoly_csv(p: &BiPoly) -> String {
    let mut lines = vec!["t_degree,q_degree,coefficient".to_string()];
    for (&(t_exp, q_exp), coeff) in p.terms() {
        lines.push(format!("{t_exp},{q_exp},{coeff}"));
    }
    lines.join("\n")
}

/// CSV rows `word,coefficient`; the empty word prints as `1`.
pub fn nc_poly_csv(p: &NcPoly) -> String {
    let mut lines = vec!["word,coefficient".to_string()];
    for (word, coeff) in p.terms() {
        let body = if word.is_empty() {
            "1".to_string()
        } else {
            String::from_utf8(word.to_vec()).expect("letters are ascii")
        };
        lines.push(format!("{body},{coeff}"));
    }
    lines.join("\n")
}

pub fn set_text(set: &[usize]) -> String {
    let inner: Vec<String> = set.iter().map(|k| k.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

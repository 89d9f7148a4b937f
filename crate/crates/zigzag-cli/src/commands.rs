//! Builders for the `table`, `poly`, and `bijection` subcommands. Each
//! returns the full stdout payload as a string so the binary stays a thin
//! argument-parsing shell and the tests can assert on exact output.

use clap::ValueEnum;
use num::BigInt;
use serde_json::json;

use crate::render::{
    bipoly_csv, bipoly_text, int_poly_csv, int_poly_text, nc_poly_csv, nc_poly_text, set_text,
};
use crate::{usage, UsageError, MAX_N_CAP};
use zigzag_core::bijections::{
    block_decompose, circle_bijection, circle_bijection_inverse, code_bijection,
};
use zigzag_core::enumerate::{
    ab_index, ahat_bivariate, ahat_poly, alt_eulerian_triangle, catalan, cd_index, cd_index_alt,
    count_r, ehat_poly, euler_numbers, AbVariant, MAX_TRIANGLE_N,
};
use zigzag_core::perm::Perm;
use zigzag_core::stats::{alt_descent_set, d3_set, i3, i_hat};
use zigzag_core::symfun::fhat_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    /// Zigzag numbers 1, 1, 1, 2, 5, 16, 61, ...
    Euler,
    /// Triangle counting permutations by number of alternating descents
    AltEulerian,
    /// Companion polynomial coefficient rows
    Ehat,
    /// Counts of permutations with no double and no final descent
    #[value(name = "R", alias = "r")]
    R,
    /// Ballot numbers 1, 1, 2, 5, 14, 42, ...
    Catalan,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    /// Alternating-descent polynomial in t
    AhatT,
    /// Joint distribution of alternating descents and alternating inversions
    AhatTq,
    /// Companion polynomial in q
    EhatQ,
    /// cd-index built from descent runs
    Cd,
    /// cd-index built from alternating descent runs
    CdAlt,
    /// ab-index from descent set words
    Ab,
    /// ab-index from alternating descent set words
    AbAlt,
    /// Polynomial in m whose values expand powers of tan + sec
    Fhat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BijectionKind {
    /// First-entry-1 permutations onto one-shorter permutations
    Circle,
    /// Inverse direction of `circle`
    CircleInv,
    /// Code transport onto one-longer first-entry-1 permutations
    Code,
    /// Cut an up-down permutation into blocks
    Blocks,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

fn check_cap(value: usize, cap: usize, flag: &str, allow_unsafe: bool) -> Result<(), UsageError> {
    if !allow_unsafe && value > cap {
        return Err(usage(format!(
            "--{flag} {value} exceeds the cap {cap}; pass --unsafe to override"
        )));
    }
    Ok(())
}

fn core_err(e: impl std::fmt::Display) -> UsageError {
    usage(e.to_string())
}

/// Rows of integers, one per line: a shared shape for every table kind.
fn value_rows(kind: TableKind, max_n: usize) -> Result<Vec<Vec<BigInt>>, UsageError> {
    match kind {
        TableKind::Euler => Ok(euler_numbers(max_n).into_iter().map(|v| vec![v]).collect()),
        TableKind::AltEulerian => {
            let triangle = alt_eulerian_triangle(max_n).map_err(core_err)?;
            Ok((1..=max_n).map(|n| triangle.row(n).to_vec()).collect())
        }
        TableKind::Ehat => (0..=max_n)
            .map(|n| Ok(ehat_poly(n).map_err(core_err)?.coeffs().to_vec()))
            .collect(),
        TableKind::R => (0..=max_n).map(|n| count_r(n).map_err(core_err)).collect::<Result<Vec<_>, _>>()
            .map(|values| values.into_iter().map(|v| vec![v]).collect()),
        TableKind::Catalan => Ok((0..=max_n).map(|m| vec![catalan(m)]).collect()),
    }
}

/// First row index for JSON labeling: the triangle starts at n = 1, the
/// value tables at n = 0.
fn first_index(kind: TableKind) -> usize {
    match kind {
        TableKind::AltEulerian => 1,
        _ => 0,
    }
}

fn kind_name(kind: TableKind) -> &'static str {
    match kind {
        TableKind::Euler => "euler",
        TableKind::AltEulerian => "alt-eulerian",
        TableKind::Ehat => "ehat",
        TableKind::R => "R",
        TableKind::Catalan => "catalan",
    }
}

pub fn table_output(
    kind: TableKind,
    max_n: usize,
    format: OutputFormat,
    allow_unsafe: bool,
) -> Result<String, UsageError> {
    let cap = match kind {
        TableKind::Ehat | TableKind::R => MAX_N_CAP,
        _ => MAX_TRIANGLE_N,
    };
    check_cap(max_n, cap, "max-n", allow_unsafe)?;
    let rows = value_rows(kind, max_n)?;
    let start = first_index(kind);
    match format {
        OutputFormat::Text => Ok(rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")),
        OutputFormat::Csv => Ok(rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut fields = vec![(start + i).to_string()];
                fields.extend(row.iter().map(|v| v.to_string()));
                fields.join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")),
        OutputFormat::Json => {
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    json!({
                        "n": start + i,
                        "entries": row.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok(json!({ "kind": kind_name(kind), "rows": json_rows }).to_string())
        }
    }
}

pub fn poly_output(
    kind: PolyKind,
    n: usize,
    format: OutputFormat,
    allow_unsafe: bool,
) -> Result<String, UsageError> {
    check_cap(n, MAX_N_CAP, "n", allow_unsafe)?;
    match kind {
        PolyKind::AhatT | PolyKind::EhatQ | PolyKind::Fhat => {
            let p = match kind {
                PolyKind::AhatT => ahat_poly(n).map_err(core_err)?,
                PolyKind::EhatQ => ehat_poly(n).map_err(core_err)?,
                _ => fhat_poly(n),
            };
            Ok(match format {
                OutputFormat::Text => int_poly_text(&p),
                OutputFormat::Json => p.to_json().to_string(),
                OutputFormat::Csv => int_poly_csv(&p),
            })
        }
        PolyKind::AhatTq => {
            let p = ahat_bivariate(n).map_err(core_err)?;
            Ok(match format {
                OutputFormat::Text => bipoly_text(&p),
                OutputFormat::Json => p.to_json().to_string(),
                OutputFormat::Csv => bipoly_csv(&p),
            })
        }
        PolyKind::Cd | PolyKind::CdAlt | PolyKind::Ab | PolyKind::AbAlt => {
            let p = match kind {
                PolyKind::Cd => cd_index(n).map_err(core_err)?,
                PolyKind::CdAlt => cd_index_alt(n).map_err(core_err)?,
                PolyKind::Ab => ab_index(n, AbVariant::Classic).map_err(core_err)?,
                _ => ab_index(n, AbVariant::Alt).map_err(core_err)?,
            };
            Ok(match format {
                OutputFormat::Text => nc_poly_text(&p),
                OutputFormat::Json => p.to_json().to_string(),
                OutputFormat::Csv => nc_poly_csv(&p),
            })
        }
    }
}

fn perm_text(p: &Perm) -> String {
    p.to_string()
}

fn blocks_text(blocks: &[Vec<u8>], n: usize) -> String {
    let compact = n <= 9;
    blocks
        .iter()
        .map(|block| {
            let parts: Vec<String> = block.iter().map(|v| v.to_string()).collect();
            parts.join(if compact { "" } else { "," })
        })
        .collect::<Vec<_>>()
        .join("|")
}

pub fn bijection_output(kind: BijectionKind, perm: &Perm) -> Result<String, UsageError> {
    let mut lines = Vec::new();
    match kind {
        BijectionKind::Circle => {
            let image = circle_bijection(perm).map_err(core_err)?;
            lines.push(perm_text(&image));
            lines.push(format!("3-descent set (input): {}", set_text(&d3_set(perm))));
            lines.push(format!(
                "alternating descent set (image): {}",
                set_text(&alt_descent_set(&image))
            ));
        }
        BijectionKind::CircleInv => {
            let image = circle_bijection_inverse(perm).map_err(core_err)?;
            lines.push(perm_text(&image));
            lines.push(format!(
                "alternating descent set (input): {}",
                set_text(&alt_descent_set(perm))
            ));
            lines.push(format!("3-descent set (image): {}", set_text(&d3_set(&image))));
        }
        BijectionKind::Code => {
            let image = code_bijection(perm);
            lines.push(perm_text(&image));
            lines.push(format!(
                "alternating descent set (input): {}",
                set_text(&alt_descent_set(perm))
            ));
            lines.push(format!("3-descent set (image): {}", set_text(&d3_set(&image))));
            lines.push(format!("alternating inversions (input): {}", i_hat(perm)));
            lines.push(format!("3-inversions (image): {}", i3(&image)));
        }
        BijectionKind::Blocks => {
            let blocks = block_decompose(perm).map_err(core_err)?;
            lines.push(blocks_text(&blocks, perm.n()));
            let sizes: Vec<String> = blocks.iter().map(|b| b.len().to_string()).collect();
            lines.push(format!("block sizes: {}", sizes.join(",")));
        }
    }
    Ok(lines.join("\n"))
}

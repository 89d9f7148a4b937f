use clap::{Parser, Subcommand};

use zigzag_cli::checks::{run_selected, select, UserBounds, REGISTRY};
use zigzag_cli::commands::{
    bijection_output, poly_output, table_output, BijectionKind, OutputFormat, PolyKind, TableKind,
};
use zigzag_cli::{parse_perm, UsageError, MAX_N_CAP, SERIES_ORDER_CAP};

/// Exact statistics, bijections, and machine-verified identities for
/// alternating descents and their companions.
#[derive(Parser)]
#[command(name = "zigzag", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table of counts or coefficient rows
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Largest index to include
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Lift the CLI size caps; the library may still refuse
        #[arg(long = "unsafe")]
        unsafe_: bool,
    },
    /// Print one polynomial exactly
    Poly {
        #[arg(value_enum)]
        kind: PolyKind,
        /// Number of letters in the underlying permutations
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Lift the CLI size caps; the library may still refuse
        #[arg(long = "unsafe")]
        unsafe_: bool,
    },
    /// Apply a bijection to one permutation and show the transported statistics
    Bijection {
        #[arg(value_enum)]
        kind: BijectionKind,
        /// One-line notation, comma separated, e.g. 5,9,3,4,1,8,6,7,2
        #[arg(long)]
        perm: String,
    },
    /// Run registered checks and emit one JSON line per check
    Verify {
        /// A check id from the registry, or `all`
        #[arg(default_value = "all")]
        check_id: String,
        /// Override the per-check enumeration bound
        #[arg(long)]
        max_n: Option<usize>,
        /// Override the per-check series truncation order
        #[arg(long)]
        series_order: Option<usize>,
        /// Worker threads; never affects output bytes
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Lift the CLI size caps; the library may still refuse
        #[arg(long = "unsafe")]
        unsafe_: bool,
    },
}

fn emit(result: Result<String, UsageError>) -> i32 {
    match result {
        Ok(text) => {
            println!("{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn verify(
    check_id: &str,
    max_n: Option<usize>,
    series_order: Option<usize>,
    jobs: usize,
    unsafe_: bool,
) -> i32 {
    if jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return 2;
    }
    if !unsafe_ {
        if let Some(m) = max_n {
            if m > MAX_N_CAP {
                eprintln!("error: --max-n {m} exceeds the cap {MAX_N_CAP}; pass --unsafe to override");
                return 2;
            }
        }
        if let Some(s) = series_order {
            if s > SERIES_ORDER_CAP {
                eprintln!(
                    "error: --series-order {s} exceeds the cap {SERIES_ORDER_CAP}; pass --unsafe to override"
                );
                return 2;
            }
        }
    }
    let Some(defs) = select(check_id) else {
        eprintln!("error: unknown check id {check_id:?}; known ids:");
        for def in REGISTRY {
            eprintln!("  {}", def.id);
        }
        return 2;
    };
    let user = UserBounds {
        max_n,
        series_order,
    };
    eprintln!(
        "running {} check(s); `order` is the enumeration bound or series truncation order",
        defs.len()
    );
    let outcomes = run_selected(&defs, &user, jobs);
    for outcome in &outcomes {
        println!("{}", outcome.to_json_line());
    }
    for outcome in &outcomes {
        eprintln!(
            "{}",
            serde_json::json!({
                "check_id": outcome.check_id,
                "seconds": (outcome.seconds * 1000.0).round() / 1000.0,
            })
        );
    }
    if outcomes.iter().all(|o| o.passed()) {
        0
    } else {
        1
    }
}

fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Table {
            kind,
            max_n,
            format,
            unsafe_,
        } => emit(table_output(kind, max_n, format, unsafe_)),
        Command::Poly {
            kind,
            n,
            format,
            unsafe_,
        } => emit(poly_output(kind, n, format, unsafe_)),
        Command::Bijection { kind, perm } => match parse_perm(&perm) {
            Ok(p) => emit(bijection_output(kind, &p)),
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::Verify {
            check_id,
            max_n,
            series_order,
            jobs,
            unsafe_,
        } => verify(&check_id, max_n, series_order, jobs, unsafe_),
    }
}

fn main() {
    std::process::exit(run());
}

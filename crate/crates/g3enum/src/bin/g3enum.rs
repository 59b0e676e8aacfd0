//! Command-line front end.
//!
//! `g3enum compute --degree D --quantity Q` evaluates one quantity exactly
//! and prints it as a table, JSON, or CSV. Exit codes: 0 on success, 2 on a
//! validation or domain error, 3 on an internal consistency-assertion
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use g3enum::pipeline::{self, Cr3Route, Report};
use g3enum::rt::{rt_canonical, RtOverrides};
use g3enum::singular::{self, S12Route};
use g3enum::taut;
use g3enum::{Error, MemoStore};

#[derive(Parser)]
#[command(
    name = "g3enum",
    version,
    about = "Exact genus-three plane curve counts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one quantity at a given degree.
    Compute(ComputeArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Curve degree (d >= 2).
    #[arg(long)]
    degree: u32,
    /// Quantity to evaluate.
    #[arg(long, value_enum)]
    quantity: Quantity,
    /// Hyperflex count on the genus-three domain (n3d and cr3 only).
    #[arg(long, default_value_t = 0)]
    hyperflexes: u32,
    /// Derivation route for cr3, s12, and n3d.
    #[arg(long, value_enum, default_value_t = RouteArg::Both)]
    route: RouteArg,
    /// File of externally supplied symplectic-invariant values ("g d value").
    #[arg(long)]
    rt_file: Option<PathBuf>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Cache file to load before and dump after the computation
    /// (default: $G3ENUM_CACHE if set, otherwise in-memory only).
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Quantity {
    N3d,
    Cr3,
    S12,
    S21,
    Tau3,
    Rt,
    Breakdown,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    Theorem,
    Corollary,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Compute(args) = cli.command;

    let outcome = catch_unwind(AssertUnwindSafe(|| run(&args)));
    match outcome {
        Ok(Ok(reports)) => {
            print_reports(&reports, args.format);
            ExitCode::SUCCESS
        }
        Ok(Err(err)) => {
            eprintln!("error: {err}");
            match err {
                Error::Consistency(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
        Err(_) => {
            eprintln!("error: internal consistency assertion failed");
            ExitCode::from(3)
        }
    }
}

fn run(args: &ComputeArgs) -> Result<Vec<Report>, Error> {
    if args.hyperflexes > 0 && !matches!(args.quantity, Quantity::N3d | Quantity::Cr3) {
        return Err(Error::Validation(
            "--hyperflexes applies only to n3d and cr3".into(),
        ));
    }

    let (store, persist) = match &args.cache {
        Some(path) => (MemoStore::with_path(path)?, true),
        None => (
            MemoStore::from_env()?,
            std::env::var_os(g3enum::store::CACHE_ENV_VAR).is_some(),
        ),
    };
    let overrides = match &args.rt_file {
        Some(path) => RtOverrides::load(path)?,
        None => RtOverrides::empty(),
    };

    let d = args.degree;
    let mut reports = Vec::new();
    match args.quantity {
        Quantity::N3d => {
            let route = match args.route {
                RouteArg::Theorem => Cr3Route::Theorem,
                RouteArg::Corollary => Cr3Route::Corollary,
                RouteArg::Both => Cr3Route::Both,
            };
            // Route equality is asserted first when requested; the
            // subtraction itself always uses the component-count form.
            if route == Cr3Route::Both {
                pipeline::cr3(&store, d, args.hyperflexes, Cr3Route::Both)?;
            }
            let value = pipeline::n3d(&store, &overrides, d, args.hyperflexes)?;
            reports.push(Report::new(
                "n3d",
                d,
                &value,
                route_name(args.route),
                store.cache_hits(),
            ));
        }
        Quantity::Cr3 => {
            let route = match args.route {
                RouteArg::Theorem => Cr3Route::Theorem,
                RouteArg::Corollary => Cr3Route::Corollary,
                RouteArg::Both => Cr3Route::Both,
            };
            let value = pipeline::cr3(&store, d, args.hyperflexes, route)?;
            reports.push(Report::new(
                "cr3",
                d,
                &value,
                route_name(args.route),
                store.cache_hits(),
            ));
        }
        Quantity::S12 => {
            let (value, route) = match args.route {
                RouteArg::Theorem => {
                    return Err(Error::Validation(
                        "s12 routes are corollary (direct) and both; \
                         theorem does not apply"
                            .into(),
                    ))
                }
                RouteArg::Corollary => {
                    (singular::s12(&store, d, S12Route::Corollary)?, "corollary")
                }
                RouteArg::Both => {
                    let a = singular::s12(&store, d, S12Route::Corollary)?;
                    let b = singular::s12(&store, d, S12Route::Lemma)?;
                    if a != b {
                        return Err(Error::Consistency(format!(
                            "(3,4)-cusp routes disagree at d = {d}: {a} vs {b}"
                        )));
                    }
                    (a, "both")
                }
            };
            reports.push(Report::new("s12", d, &value, route, store.cache_hits()));
        }
        Quantity::S21 => {
            let value = singular::s21(&store, d)?;
            reports.push(Report::new(
                "s21",
                d,
                &value,
                "assembler",
                store.cache_hits(),
            ));
        }
        Quantity::Tau3 => {
            let value = taut::tau3(&store, d)?;
            reports.push(Report::new(
                "tau3",
                d,
                &value,
                "triple-split",
                store.cache_hits(),
            ));
        }
        Quantity::Rt => {
            let value = rt_canonical(&store, &overrides, 3, d)?;
            let route = if overrides.get(3, d).is_some() {
                "override"
            } else {
                "composition-laws"
            };
            reports.push(Report::new("rt", d, &value, route, store.cache_hits()));
        }
        Quantity::Breakdown => {
            let breakdown = pipeline::component_counts(&store, d)?;
            let hits = store.cache_hits();
            for (name, value) in breakdown.fields() {
                reports.push(Report::new(name, d, value, "breakdown", hits));
            }
        }
    }

    if persist {
        store.dump()?;
    }
    Ok(reports)
}

fn route_name(route: RouteArg) -> &'static str {
    match route {
        RouteArg::Theorem => "theorem",
        RouteArg::Corollary => "corollary",
        RouteArg::Both => "both",
    }
}

fn print_reports(reports: &[Report], format: Format) {
    match format {
        Format::Json => {
            let rendered = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])
            } else {
                serde_json::to_string_pretty(reports)
            }
            .expect("report serialization cannot fail");
            println!("{rendered}");
        }
        Format::Csv => {
            println!("quantity,degree,value");
            for r in reports {
                println!("{}", r.csv_row());
            }
        }
        Format::Table => {
            let width = reports
                .iter()
                .map(|r| r.quantity.len())
                .max()
                .unwrap_or(8)
                .max(8);
            println!("{:<width$}  {:>6}  value", "quantity", "degree");
            for r in reports {
                println!("{:<width$}  {:>6}  {}", r.quantity, r.degree, r.value);
            }
        }
    }
}

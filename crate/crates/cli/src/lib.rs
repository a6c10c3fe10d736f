//! `symprod`: invariants of symmetric products from the command line.
//!
//! [`run`] parses argv, dispatches to `symprod-core` and writes either
//! plain text or a single JSON object. Exit codes: 0 success, 2 usage or
//! parse error, 1 internal invariant violation (including a failed
//! `check` suite).

pub mod check;
pub mod descriptor;
pub mod output;

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::Value;

use symprod_core::invariants::{
    betti_sp, chi_y_sp_series, default_dmax, ell_sp_series, euler_sp_series, signature_closed_sp,
    signature_punctured_sp,
};
use symprod_core::orbifold::{dmvv_series, orbifold_euler_bruteforce, EllCoefficients};
use symprod_core::series::VarNames;
use symprod_core::topology::resolve;
use symprod_core::{Exponents, Selector};

use crate::check::Family;
use crate::descriptor::parse_descriptor;
use crate::output::{int_json, poly_json, Report, ELLIPTIC_NAMES};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "symprod",
    version,
    about = "Invariants of symmetric products of surfaces"
)]
struct Cli {
    /// Emit a single JSON object instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Betti numbers of SP^n(X)
    Betti {
        space: String,
        #[arg(long)]
        n: u32,
        /// Highest degree printed (default: n times the top degree of X)
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Euler characteristics of SP^0(X) .. SP^N(X)
    Euler {
        space: String,
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
    /// χ_y genera of SP^n(M_g) as polynomials in y
    ChiY {
        #[arg(long)]
        g: u32,
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
    /// Signature of SP^m(M_g), or of SP^m(M_{g,k}) with --k (m even)
    Signature {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        order: u32,
    },
    /// Elliptic genera of SP^n(M_g) as polynomials in ε^(1/4)
    Elliptic {
        #[arg(long)]
        g: u32,
        #[arg(long, default_value_t = 8)]
        order: u32,
    },
    /// Orbifold elliptic genera of (X^n, S_n) from a coefficient file
    Dmvv {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long, default_value_t = 8)]
        torder: u32,
        #[arg(long, default_value_t = 8)]
        qorder: u32,
        #[arg(long, default_value_t = -8, allow_negative_numbers = true)]
        ymin: i32,
        #[arg(long, default_value_t = 8, allow_negative_numbers = true)]
        ymax: i32,
    },
    /// Orbifold Euler characteristic of (X^n, S_n)
    OrbifoldEuler {
        space: String,
        #[arg(long)]
        n: u32,
    },
    /// Run the oracle-equivalence suites
    Check {
        #[arg(long, value_enum, default_value_t = Family::Small)]
        family: Family,
    },
}

/// Failure of a command, with the exit code it maps to.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<symprod_core::Error> for Failure {
    fn from(e: symprod_core::Error) -> Self {
        use symprod_core::Error as E;
        match e {
            E::OutOfProfile { .. } | E::Usage(_) | E::Parse { .. } | E::InvalidYWindow { .. } => {
                Failure::Usage(e.to_string())
            }
            other => Failure::Internal(other.to_string()),
        }
    }
}

type Outcome = Result<(Report, i32), Failure>;

/// Runs the CLI on `args` (including the program name). Returns the exit
/// code.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(err, "{first}");
            return EXIT_USAGE;
        }
    };
    match dispatch(cli.command) {
        Ok((report, code)) => {
            let _ = if cli.json {
                writeln!(out, "{}", report.to_json())
            } else {
                write!(out, "{}", report.text)
            };
            code
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

fn space_arg(s: &str) -> Result<symprod_core::SpaceSpec, Failure> {
    parse_descriptor(s).map_err(|e| Failure::Usage(e.to_string()))
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Betti { space, n, dmax } => {
            let spec = space_arg(&space)?;
            let x = resolve(&spec);
            let dmax = dmax.unwrap_or_else(|| default_dmax(&x, n));
            let betti = betti_sp(&x, n, dmax)?;
            let mut r = Report::new("betti")
                .input("space", spec.to_string())
                .input("n", n)
                .input("dmax", dmax);
            for (d, b) in betti.iter().enumerate() {
                r.line(format!("d={d}: {b}"));
                r.row("degree", d as i64, int_json(b));
            }
            Ok((r, EXIT_OK))
        }
        Command::Euler { space, order } => {
            let spec = space_arg(&space)?;
            let series = euler_sp_series(&resolve(&spec), order)?;
            let mut r = Report::new("euler")
                .input("space", spec.to_string())
                .input("order", order);
            let mut values = Vec::new();
            for n in 0..=order {
                let v = symprod_core::series::to_integer(&series.coefficient(&Exponents::q(n)))?;
                r.row("n", n as i64, int_json(&v));
                values.push(v.to_string());
            }
            r.line(values.join(" "));
            Ok((r, EXIT_OK))
        }
        Command::ChiY { g, order } => {
            let series = chi_y_sp_series(g, order)?;
            let r = per_n_report("chi-y", &series, order, VarNames::default())?
                .input("g", g)
                .input("order", order);
            Ok((r, EXIT_OK))
        }
        Command::Elliptic { g, order } => {
            let series = ell_sp_series(g, order)?;
            let r = per_n_report("elliptic", &series, order, ELLIPTIC_NAMES)?
                .input("g", g)
                .input("order", order);
            Ok((r, EXIT_OK))
        }
        Command::Signature { g, k, order } => {
            let mut r = Report::new("signature").input("g", g).input("order", order);
            let value = match k {
                None => signature_closed_sp(g, order)?,
                Some(k) => {
                    if order % 2 == 1 {
                        return Err(Failure::Usage(format!(
                            "SP^{order} of a punctured surface: --order must be even with --k"
                        )));
                    }
                    r = r.input("k", k);
                    signature_punctured_sp(g, k, order / 2)?
                }
            };
            r.line(value.to_string());
            r.row("n", order as i64, int_json(&value));
            Ok((r, EXIT_OK))
        }
        Command::Dmvv {
            coeffs,
            torder,
            qorder,
            ymin,
            ymax,
        } => {
            let text = std::fs::read_to_string(&coeffs)
                .map_err(|e| Failure::Usage(format!("{}: {e}", coeffs.display())))?;
            let table: EllCoefficients = text.parse().map_err(|e: symprod_core::Error| {
                Failure::Usage(format!("{}: {e}", coeffs.display()))
            })?;
            let series = dmvv_series(&table, torder, qorder, (ymin, ymax))?;
            let r = per_n_report("dmvv", &series, torder, VarNames::default())?
                .input("coeffs", coeffs.display().to_string())
                .input("torder", torder)
                .input("qorder", qorder)
                .input("ymin", ymin)
                .input("ymax", ymax);
            Ok((r, EXIT_OK))
        }
        Command::OrbifoldEuler { space, n } => {
            let spec = space_arg(&space)?;
            let value = orbifold_euler_bruteforce(&resolve(&spec), n)?;
            let mut r = Report::new("orbifold-euler")
                .input("space", spec.to_string())
                .input("n", n);
            r.line(value.to_string());
            r.row("n", n as i64, int_json(&value));
            Ok((r, EXIT_OK))
        }
        Command::Check { family } => {
            let mut r = Report::new("check").input(
                "family",
                match family {
                    Family::Small => "small",
                    Family::Full => "full",
                },
            );
            let mut all_pass = true;
            for (i, (name, outcome)) in check::run_all(family).into_iter().enumerate() {
                let (status, detail) = match &outcome {
                    Ok(cases) => ("PASS", format!("{cases} cases")),
                    Err(msg) => {
                        all_pass = false;
                        ("FAIL", msg.clone())
                    }
                };
                r.line(format!("{status} {name}: {detail}"));
                let mut row = serde_json::Map::new();
                row.insert("n".into(), Value::from(i as i64 + 1));
                row.insert("suite".into(), Value::from(name));
                row.insert("value".into(), Value::from(status));
                row.insert("detail".into(), Value::from(detail));
                r.rows.push(Value::Object(row));
            }
            let code = if all_pass { EXIT_OK } else { EXIT_INTERNAL };
            Ok((r, code))
        }
    }
}

/// One `n=<n>: <polynomial>` line per t-power.
fn per_n_report(
    command: &'static str,
    series: &symprod_core::TruncatedSeries,
    order: u32,
    names: VarNames,
) -> Result<Report, Failure> {
    let mut r = Report::new(command);
    for n in 0..=order {
        let c = series.coeff(Selector::t(n))?;
        r.line(format!("n={n}: {}", c.display_with(names)));
        r.row("n", n as i64, poly_json(&c));
    }
    Ok(r)
}

/// Convenience for tests: run and capture stdout, stderr and exit code.
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("symprod").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).expect("utf-8 output"),
        String::from_utf8(err).expect("utf-8 output"),
    )
}

//! Command-line front end: triangles, series expansions, verification suites,
//! Hankel checks and series inversion.

mod suites;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use wardcf::contfrac::{families, ContinuedFraction};
use wardcf::eulerian::eulerian2_triangle;
use wardcf::hankel::{hankel_report, HankelFamily};
use wardcf::trees::assoc_stirling_triangle;
use wardcf::ward::{generalized_ward_cf, invert_sequence, ward_triangle};
use wardcf::{Polynomial, VarId};

pub use suites::{run_suite, Suite};

/// Default cap on enumeration sizes, overridden by `WARDCF_MAX_N`.
pub const DEFAULT_MAX_N: usize = 6;

/// Largest Hankel section checked without `--allow-large`.
pub const HANKEL_SIZE_LIMIT: usize = 6;

#[derive(Parser, Debug)]
#[command(
    name = "wardcf",
    version,
    about = "Exact Ward polynomials and their continued fractions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a number triangle.
    Triangle {
        #[arg(long, value_enum)]
        family: TriangleFamily,
        /// Last row index (inclusive).
        #[arg(long)]
        rows: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Expand a named continued fraction.
    Expand {
        #[arg(long, value_enum)]
        family: ExpandFamily,
        #[arg(long)]
        order: usize,
        /// Substitution `var=polynomial`, applied to every coefficient.
        #[arg(long = "set", value_name = "VAR=VAL")]
        set: Vec<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n: usize,
    },
    /// Check all minors of a Hankel section for nonnegative coefficients.
    Hankel {
        #[arg(long, value_enum)]
        family: HankelArg,
        #[arg(long)]
        size: usize,
        /// Largest minor size; defaults to the section size.
        #[arg(long)]
        rmax: Option<usize>,
        /// Permit sections above the desk-scale limit.
        #[arg(long)]
        allow_large: bool,
    },
    /// Solve `W_n(x_1..x_n) = a_n` for the `x_i`.
    Invert {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "generalized-ward")]
        sequence: InvertSequence,
        #[arg(long = "set", value_name = "VAR=VAL")]
        set: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TriangleFamily {
    Ward,
    Eulerian2,
    #[value(name = "stirling2assoc")]
    Stirling2Assoc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Csv,
    Json,
    Pretty,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExpandFamily {
    Ward,
    WardReversed,
    GeneralizedWard,
    Semifactorial,
    #[value(name = "eulerian2-reversed")]
    Eulerian2Reversed,
    #[value(name = "master-T")]
    MasterT,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum HankelArg {
    Ward,
    GeneralizedWard,
    #[value(name = "eulerian2-reversed")]
    Eulerian2Reversed,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InvertSequence {
    GeneralizedWard,
    /// Indeterminates `a[1], a[2], ...`.
    Generic,
}

/// Exit code and captured streams of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Output {
            code: 2,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

/// Reads the enumeration cap from `WARDCF_MAX_N`.
pub fn max_n_from_env() -> std::result::Result<usize, String> {
    match std::env::var("WARDCF_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("WARDCF_MAX_N must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

/// Runs one command line (program name first) with the cap from the environment.
pub fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match max_n_from_env() {
        Ok(max_n) => run_with_max_n(args, max_n),
        Err(e) => Output::usage(format!("error: {e}\n")),
    }
}

pub fn run_with_max_n<I, S>(args: I, max_n: usize) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::usage(text)
            } else {
                Output::ok(text)
            };
        }
    };
    match cli.command {
        Command::Triangle {
            family,
            rows,
            format,
        } => Output::ok(triangle(family, rows, format)),
        Command::Expand { family, order, set } => match parse_bindings(&set) {
            Ok(b) => Output::ok(expand(family, order, &b)),
            Err(e) => Output::usage(e),
        },
        Command::Verify { suite, n } => verify(suite, n, max_n),
        Command::Hankel {
            family,
            size,
            rmax,
            allow_large,
        } => hankel(family, size, rmax, allow_large),
        Command::Invert {
            order,
            sequence,
            set,
        } => match parse_bindings(&set) {
            Ok(b) => invert(order, sequence, &b),
            Err(e) => Output::usage(e),
        },
    }
}

fn parse_bindings(set: &[String]) -> std::result::Result<BTreeMap<VarId, Polynomial>, String> {
    set.iter()
        .map(|s| {
            let (var, val) = s
                .split_once('=')
                .ok_or_else(|| format!("error: --set expects VAR=VAL, got {s:?}\n"))?;
            let v = VarId::try_indexed(var.trim(), &[])
                .map_err(|e| format!("error: --set {s:?}: {e}\n"))?;
            let p: Polynomial = val
                .parse()
                .map_err(|e| format!("error: --set {s:?}: {e}\n"))?;
            Ok((v, p))
        })
        .collect()
}

fn triangle(family: TriangleFamily, rows: usize, format: Format) -> String {
    let (name, table): (&str, Vec<Vec<BigInt>>) = match family {
        TriangleFamily::Ward => ("ward", ward_triangle(rows).rows().to_vec()),
        TriangleFamily::Eulerian2 => ("eulerian2", eulerian2_triangle(rows)),
        TriangleFamily::Stirling2Assoc => ("stirling2assoc", assoc_stirling_triangle(rows)),
    };
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("n,k,value\n");
            for (n, row) in table.iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    let _ = writeln!(out, "{n},{k},{v}");
                }
            }
        }
        Format::Json => {
            let rows: Vec<String> = table
                .iter()
                .map(|row| {
                    let cells: Vec<String> = row.iter().map(BigInt::to_string).collect();
                    format!("[{}]", cells.join(","))
                })
                .collect();
            let _ = writeln!(
                out,
                "{{\"family\":\"{name}\",\"rows\":[{}]}}",
                rows.join(",")
            );
        }
        Format::Pretty => {
            let width = table
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .max()
                .unwrap_or(1);
            let label = table.len().saturating_sub(1).to_string().len();
            for (n, row) in table.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
                let _ = writeln!(out, "{n:>label$} | {}", cells.join(" "));
            }
        }
    }
    out
}

fn expand(family: ExpandFamily, order: usize, bindings: &BTreeMap<VarId, Polynomial>) -> String {
    let cf: ContinuedFraction = match family {
        ExpandFamily::Ward => families::ward(),
        ExpandFamily::WardReversed => families::ward_reversed(),
        ExpandFamily::GeneralizedWard => families::generalized_ward(),
        ExpandFamily::Semifactorial => families::semifactorial(),
        ExpandFamily::Eulerian2Reversed => families::eulerian2_reversed(),
        ExpandFamily::MasterT => families::master_t(),
    };
    let coeffs: Vec<String> = cf
        .expand(order)
        .coeffs()
        .iter()
        .map(|c| c.substitute(bindings).to_string())
        .collect();
    format!("{}\n", coeffs.join(", "))
}

fn verify(suite: Suite, n: usize, max_n: usize) -> Output {
    if suite.enumerates() && n > max_n {
        return Output::usage(format!(
            "error: --n {n} exceeds the enumeration cap {max_n}; raise WARDCF_MAX_N to allow it\n"
        ));
    }
    let name = suite.name();
    match run_suite(suite, n) {
        Ok(()) => Output::ok(format!("PASS {name} n={n}\n")),
        Err(counterexample) => Output {
            code: 1,
            stdout: format!("FAIL {name} n={n}\ncounterexample: {counterexample}\n"),
            stderr: String::new(),
        },
    }
}

fn hankel(family: HankelArg, size: usize, rmax: Option<usize>, allow_large: bool) -> Output {
    let family = match family {
        HankelArg::Ward => HankelFamily::Ward,
        HankelArg::GeneralizedWard => HankelFamily::GeneralizedWard,
        HankelArg::Eulerian2Reversed => HankelFamily::Eulerian2Reversed,
    };
    let rmax = rmax.unwrap_or(size);
    if size == 0 || rmax == 0 || rmax > size {
        return Output::usage("error: need 1 <= --rmax <= --size\n");
    }
    if size > HANKEL_SIZE_LIMIT && !allow_large {
        return Output::usage(format!(
            "error: --size {size} exceeds {HANKEL_SIZE_LIMIT}; pass --allow-large to run it\n"
        ));
    }
    match hankel_report(family, size, rmax) {
        Ok(report) => Output {
            code: if report.ok { 0 } else { 1 },
            stdout: format!("{}\n", report.to_json()),
            stderr: String::new(),
        },
        Err(e) => Output::usage(format!("error: {e}\n")),
    }
}

fn invert(
    order: usize,
    sequence: InvertSequence,
    bindings: &BTreeMap<VarId, Polynomial>,
) -> Output {
    let a: Vec<Polynomial> = match sequence {
        InvertSequence::GeneralizedWard => generalized_ward_cf(order).polys().to_vec(),
        InvertSequence::Generic => (0..=order)
            .map(|i| {
                if i == 0 {
                    Polynomial::one()
                } else {
                    Polynomial::var(VarId::indexed("a", &[i as u32]))
                }
            })
            .collect(),
    };
    let a: Vec<Polynomial> = a.iter().map(|p| p.substitute(bindings)).collect();
    match invert_sequence(&a, order) {
        Ok(xs) => {
            let mut out = String::new();
            for (i, x) in xs.iter().enumerate() {
                let _ = writeln!(out, "x{} = {x}", i + 1);
            }
            Output::ok(out)
        }
        Err(e) => Output::usage(format!("error: {e}\n")),
    }
}

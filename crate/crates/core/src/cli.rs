//! Command-line front end.
//!
//! Exit codes: `0` when every requested check passes, `1` when an identity
//! fails, `2` on usage or parse errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::eta::{eta_numeric, eta_symbolic, EtaIndex, EtaMode, Render};
use crate::identities::{render_reports, run_suite, Suite};
use crate::numeric::format_fixed;
use crate::output::{IndexedNumeric, IndexedValue, NumericValue, OutputFormat, SymbolicValue};
use crate::rho::{rho_exact, RhoIndex};
use crate::tables::{parse_index, render_eta_table, render_rho_table};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "zetalike", version, about = "Exact multiple rho-values and eta-values")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact value of rho(s1,...,sr)
    Rho {
        /// Comma-separated exponents, e.g. 2,1,3
        index: String,
        #[arg(long)]
        format: Option<OutputFormat>,
    },
    /// Value of eta(s1,...,sr), exact or numeric
    Eta {
        /// Comma-separated exponents, e.g. 1,2
        index: String,
        #[arg(long, value_enum, default_value_t = ValueMode::Symbolic)]
        mode: ValueMode,
        /// Decimal digits for numeric output
        #[arg(long, default_value_t = 20)]
        digits: u32,
        #[arg(long, value_enum, default_value_t = RenderArg::Pi)]
        render: RenderArg,
        /// Numeric method: fast evaluation of the exact form, or direct summation
        #[arg(long, value_enum, default_value_t = MethodArg::Fast)]
        method: MethodArg,
        #[arg(long)]
        format: Option<OutputFormat>,
    },
    /// Every admissible index of one weight with its value
    Table {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        weight: u32,
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = RenderArg::Pi)]
        render: RenderArg,
    },
    /// Run identity grids and report
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Clamp every grid bound to this value
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Markdown)]
        format: OutputFormat,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ValueMode {
    Symbolic,
    Numeric,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RenderArg {
    Pi,
    Zeta,
}

impl From<RenderArg> for Render {
    fn from(r: RenderArg) -> Self {
        match r {
            RenderArg::Pi => Render::Pi,
            RenderArg::Zeta => Render::Zeta,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Fast,
    Oracle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Rho,
    Eta,
}

/// Parses `argv` (program name first) and runs against the process streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((text, passed)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            if passed {
                EXIT_PASS
            } else {
                EXIT_FAIL
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn json_line<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn index_arg(s: &str) -> Result<Vec<u32>> {
    parse_index(s)
        .map_err(|_| Error::Parse(format!("malformed index {s:?}: expected comma-separated positive integers")))
}

fn execute(command: Command) -> Result<(String, bool)> {
    match command {
        Command::Rho { index, format } => {
            let idx = RhoIndex::new(index_arg(&index)?)?;
            let value = rho_exact(&idx);
            let text = match format {
                Some(OutputFormat::Json) => {
                    json_line(&IndexedValue::new(idx.parts(), SymbolicValue::from_rational(&value)))
                }
                _ => format!("{value}\n"),
            };
            Ok((text, true))
        }
        Command::Eta { index, mode, digits, render, method, format } => {
            let idx = EtaIndex::new(index_arg(&index)?)?;
            let json = matches!(format, Some(OutputFormat::Json));
            let text = match mode {
                ValueMode::Symbolic => {
                    let value = eta_symbolic(&idx);
                    if json {
                        json_line(&IndexedValue::new(idx.parts(), SymbolicValue::from_expr(&value)))
                    } else {
                        format!("{}\n", value.render(render.into()))
                    }
                }
                ValueMode::Numeric => {
                    let tol = 10f64.powi(-(digits.min(300) as i32));
                    let mode = match method {
                        MethodArg::Fast => EtaMode::Fast,
                        MethodArg::Oracle => EtaMode::Oracle,
                    };
                    let value = eta_numeric(&idx, mode, tol)?;
                    if json {
                        json_line(&IndexedNumeric::new(idx.parts(), NumericValue::from_approx(&value, digits)))
                    } else {
                        let bound = NumericValue::from_approx(&value, digits).error_bound;
                        format!("{} +/- {bound}\n", format_fixed(value.value(), digits))
                    }
                }
            };
            Ok((text, true))
        }
        Command::Table { family, weight, format, render } => {
            let text = match family {
                Family::Rho => render_rho_table(weight, format)?,
                Family::Eta => render_eta_table(weight, format, render.into())?,
            };
            Ok((text, true))
        }
        Command::Verify { suite, max_weight, format } => {
            let reports = run_suite(suite, max_weight)?;
            let passed = reports.iter().all(|r| r.passed);
            Ok((render_reports(&reports, format), passed))
        }
    }
}

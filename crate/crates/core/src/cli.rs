//! The `prodex` command line.
//!
//! Every command renders its full output into a buffer before anything is
//! printed, so [`run`] is a pure function of its arguments (plus the
//! `PRODEX_DEFAULT_ORDER` variable) and the binary is a thin wrapper.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 mathematical failure
//! (a ghost sequence that is not realizable, a violated identity, a failed
//! cross-check).

use std::fmt::Write as _;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::congruence::{
    fermat_check, fermat_witness, partition_numbers, partitions_via_product,
    wieferich_scan_with_threads, FermatWitness, RationalFamily, WieferichScanReport,
};
use crate::decimal::parse_list;
use crate::error::Error;
use crate::{Expansion, Ghost, Series};

pub const DEFAULT_ORDER: usize = 64;
pub const ORDER_ENV: &str = "PRODEX_DEFAULT_ORDER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MATH: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Plain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ThreadCount {
    #[default]
    Auto,
    Fixed(NonZeroUsize),
}

impl FromStr for ThreadCount {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s.eq_ignore_ascii_case("auto") {
            return Ok(Self::Auto);
        }
        s.parse::<NonZeroUsize>()
            .map(Self::Fixed)
            .map_err(|_| format!("expected `auto` or a positive integer, got `{s}`"))
    }
}

impl ThreadCount {
    fn get(self) -> Option<usize> {
        match self {
            Self::Auto => None,
            Self::Fixed(n) => Some(n.get()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub default_order: usize,
    pub output_format: OutputFormat,
    pub thread_count: ThreadCount,
}

impl CliConfig {
    /// Resolves the default order from the environment override, if any.
    pub fn new(
        env_order: Option<&str>,
        output_format: OutputFormat,
        thread_count: ThreadCount,
    ) -> Result<Self, String> {
        let default_order = match env_order {
            None => DEFAULT_ORDER,
            Some(raw) => match raw.trim().parse::<usize>() {
                Ok(n) if n >= 1 => n,
                _ => {
                    return Err(format!(
                        "{ORDER_ENV} must be a positive integer, got `{raw}`"
                    ))
                }
            },
        };
        Ok(Self {
            default_order,
            output_format,
            thread_count,
        })
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "prodex",
    version,
    about = "Exact product expansions f = ∏(1 - m_k x^k) of integer power series"
)]
struct Cli {
    /// Truncation order N (default 64, or $PRODEX_DEFAULT_ORDER).
    #[arg(long, global = true)]
    order: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,

    /// Worker threads for `wieferich`: a positive integer or `auto`.
    #[arg(long, global = true, default_value = "auto")]
    threads: ThreadCount,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a unit series into product exponents m_1..m_N.
    Expand(SeriesInput),
    /// Multiply out ∏(1 - m_k x^k).
    Series(ExponentInput),
    /// Exponents of 1/f given those of f.
    Invert {
        #[command(flatten)]
        input: ExponentInput,
        /// Print ñ_k = -n_k instead of n_k.
        #[arg(long)]
        tilde: bool,
    },
    /// Divisor-sum transform L_N = Σ_{d|N} d·m_d^{N/d}.
    Ghost {
        #[command(flatten)]
        input: ExponentInput,
        /// Take the series coefficients instead and use -x f'/f.
        #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["exponents", "ones", "input"])]
        coeffs: Option<String>,
    },
    /// Recover exponents from a ghost sequence.
    Unghost(ValuesInput),
    /// The series (1 - (d+1)x)/(1 - dx).
    Family {
        #[arg(long, allow_hyphen_values = true)]
        d: BigInt,
        /// Print its product exponents instead of its coefficients.
        #[arg(long)]
        product: bool,
    },
    /// N = 2p witness for p | (d+1)^p - d^p - 1.
    Fermat {
        #[arg(long)]
        d: BigInt,
        #[arg(long)]
        p: u64,
    },
    /// p | a^p - a, by telescoping witnesses and by modular exponentiation.
    Check {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        p: u64,
    },
    /// Scan [from, to] for primes with 2^(p-1) ≡ 1 (mod p²).
    Wieferich {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Partition numbers p(0)..p(N).
    Partitions {
        /// Also rebuild the table from ∏(1 + ñ_k x^k) and compare.
        #[arg(long)]
        via_product: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct SeriesInput {
    /// Comma-separated coefficients c_0,c_1,...
    #[arg(long, allow_hyphen_values = true)]
    coeffs: Option<String>,
    /// JSON file {"order": N, "coeffs": [...]}.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ExponentInput {
    /// Comma-separated exponents m_1,m_2,...
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["ones", "input"])]
    exponents: Option<String>,
    /// m_k = 1 for every k.
    #[arg(long, conflicts_with = "input")]
    ones: bool,
    /// JSON file {"order": N, "exponents": [...]}.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ValuesInput {
    /// Comma-separated ghost values L_1,L_2,...
    #[arg(long, allow_hyphen_values = true)]
    values: Option<String>,
    /// JSON file {"order": N, "values": [...]}.
    #[arg(long)]
    input: Option<PathBuf>,
}

/// Captured result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NotRealizable { .. } | Error::IdentityViolation(_) => {
                Failure::Math(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type CmdResult = Result<String, Failure>;

/// Runs one invocation, reading `PRODEX_DEFAULT_ORDER` from the process
/// environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let env = std::env::var(ORDER_ENV).ok();
    run_with_env(args, env.as_deref())
}

pub fn run_with_env<I, T>(args: I, env_order: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                // --help / --version
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let config = match CliConfig::new(env_order, cli.format, cli.threads) {
        Ok(c) => c,
        Err(msg) => return failure(EXIT_USAGE, msg),
    };
    let ctx = Context {
        config,
        order: cli.order,
    };
    if ctx.order == Some(0)
        && !matches!(cli.command, Command::Expand(_) | Command::Partitions { .. })
    {
        return failure(EXIT_USAGE, "--order must be at least 1".into());
    }
    match ctx.dispatch(cli.command) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => failure(EXIT_USAGE, msg),
        Err(Failure::Math(msg)) => failure(EXIT_MATH, msg),
    }
}

fn failure(code: i32, msg: String) -> Outcome {
    Outcome {
        code,
        stdout: String::new(),
        stderr: format!("prodex: {msg}\n"),
    }
}

struct Context {
    config: CliConfig,
    order: Option<usize>,
}

impl Context {
    fn dispatch(&self, command: Command) -> CmdResult {
        match command {
            Command::Expand(input) => {
                let f = self.series(&input)?;
                let m = Expansion::expand(&f)?;
                Ok(self.render_exponents(&m))
            }
            Command::Series(input) => {
                let m = self.exponents(&input)?;
                Ok(self.render_series(&m.to_series()))
            }
            Command::Invert { input, tilde } => {
                let n = self.exponents(&input)?.inverse();
                Ok(self.render_exponents(&if tilde { n.tilde() } else { n }))
            }
            Command::Ghost { input, coeffs } => {
                let g = match coeffs {
                    Some(list) => {
                        let order = self.order.unwrap_or(self.config.default_order);
                        Series::from_prefix(parse_list(&list).map_err(Failure::Usage)?, order)?
                            .neg_x_log_derivative()?
                    }
                    None => Ghost::from_exponents(&self.exponents(&input)?),
                };
                Ok(self.render_ghost(&g))
            }
            Command::Unghost(input) => {
                let g = self.ghost_values(&input)?;
                Ok(self.render_exponents(&g.to_exponents()?))
            }
            Command::Family { d, product } => {
                let family =
                    RationalFamily::new(d, self.order.unwrap_or(self.config.default_order))?;
                if product {
                    Ok(self.render_exponents(&family.expansion()?))
                } else {
                    Ok(self.render_series(&family.series()?))
                }
            }
            Command::Fermat { d, p } => Ok(self.render_witness(&fermat_witness(d, p)?)),
            Command::Check { a, p } => {
                let holds = fermat_check(a, p)?;
                let out = self.render_check(a, p, holds);
                if holds {
                    Ok(out)
                } else {
                    Err(Failure::Math(format!("check failed for a = {a}, p = {p}")))
                }
            }
            Command::Wieferich { from, to } => {
                let report = wieferich_scan_with_threads(from, to, self.config.thread_count.get())?;
                Ok(self.render_scan(&report))
            }
            Command::Partitions { via_product } => self.partitions(via_product),
        }
    }

    fn series(&self, input: &SeriesInput) -> Result<Series, Failure> {
        if let Some(list) = &input.coeffs {
            let coeffs = parse_list(list).map_err(Failure::Usage)?;
            let order = self.order.unwrap_or(self.config.default_order);
            return Ok(Series::from_prefix(coeffs, order)?);
        }
        let path = input.input.as_deref().expect("clap enforces one input");
        let f: Series = read_json(path)?;
        Ok(match self.order {
            Some(order) => Series::from_prefix(f.into_coeffs(), order)?,
            None => f,
        })
    }

    fn exponents(&self, input: &ExponentInput) -> Result<Expansion, Failure> {
        let raw = if let Some(list) = &input.exponents {
            parse_list(list).map_err(Failure::Usage)?
        } else if input.ones {
            return Ok(Expansion::ones(
                self.order.unwrap_or(self.config.default_order),
            ));
        } else if let Some(path) = &input.input {
            read_json::<Expansion>(path)?.into_exponents()
        } else {
            return Err(Failure::Usage(
                "one of --exponents, --ones or --input is required".into(),
            ));
        };
        Ok(Expansion::new(resized(raw, self.order)))
    }

    fn ghost_values(&self, input: &ValuesInput) -> Result<Ghost, Failure> {
        let raw = match (&input.values, &input.input) {
            (Some(list), _) => parse_list(list).map_err(Failure::Usage)?,
            (None, Some(path)) => read_json::<Ghost>(path)?.into_values(),
            (None, None) => unreachable!("clap enforces one input"),
        };
        Ok(Ghost::new(resized(raw, self.order)))
    }

    fn partitions(&self, via_product: bool) -> CmdResult {
        let order = self.order.unwrap_or(self.config.default_order);
        let table = partition_numbers(order);
        if !via_product {
            return Ok(match self.config.output_format {
                OutputFormat::Json => json_line(&table),
                OutputFormat::Plain => indexed_lines(0, table.values()),
            });
        }
        let product = partitions_via_product(order);
        let mismatches: Vec<usize> = (0..=order)
            .filter(|&n| table.get(n) != product.coeff(n))
            .collect();

        let out = match self.config.output_format {
            OutputFormat::Json => {
                #[derive(Serialize)]
                struct Comparison<'a> {
                    order: usize,
                    #[serde(with = "crate::decimal::vec")]
                    oracle: &'a [BigInt],
                    #[serde(with = "crate::decimal::vec")]
                    product: &'a [BigInt],
                    equal: bool,
                    mismatches: &'a [usize],
                }
                json_line(&Comparison {
                    order,
                    oracle: table.values(),
                    product: product.coeffs(),
                    equal: mismatches.is_empty(),
                    mismatches: &mismatches,
                })
            }
            OutputFormat::Plain => {
                let mut s = String::new();
                for n in 0..=order {
                    let _ = writeln!(s, "{n} {} {}", table.get(n), product.coeff(n));
                }
                s
            }
        };
        if mismatches.is_empty() {
            Ok(out)
        } else {
            Err(Failure::Math(format!(
                "partition table and product disagree at n = {mismatches:?}\n{out}"
            )))
        }
    }

    fn render_series(&self, f: &Series) -> String {
        match self.config.output_format {
            OutputFormat::Json => json_line(f),
            OutputFormat::Plain => indexed_lines(0, f.coeffs()),
        }
    }

    fn render_exponents(&self, m: &Expansion) -> String {
        match self.config.output_format {
            OutputFormat::Json => json_line(m),
            OutputFormat::Plain => indexed_lines(1, m.exponents()),
        }
    }

    fn render_ghost(&self, g: &Ghost) -> String {
        match self.config.output_format {
            OutputFormat::Json => json_line(g),
            OutputFormat::Plain => indexed_lines(1, g.values()),
        }
    }

    fn render_witness(&self, w: &FermatWitness) -> String {
        match self.config.output_format {
            OutputFormat::Json => json_line(w),
            OutputFormat::Plain => format!(
                "d {}\np {}\nm_p {}\nm_2p {}\nn_p {}\nn_2p {}\nquotient {}\nidentity OK\n",
                w.d, w.p, w.m_p, w.m_2p, w.n_p, w.n_2p, w.quotient
            ),
        }
    }

    fn render_check(&self, a: u64, p: u64, holds: bool) -> String {
        match self.config.output_format {
            OutputFormat::Json => {
                #[derive(Serialize)]
                struct Check {
                    a: u64,
                    p: u64,
                    holds: bool,
                }
                json_line(&Check { a, p, holds })
            }
            OutputFormat::Plain => format!("a {a}\np {p}\nholds {holds}\n"),
        }
    }

    fn render_scan(&self, r: &WieferichScanReport) -> String {
        match self.config.output_format {
            OutputFormat::Json => json_line(r),
            OutputFormat::Plain => {
                let mut s = format!(
                    "lo {}\nhi {}\nprimes_tested {}\n",
                    r.lo, r.hi, r.primes_tested
                );
                for h in &r.hits {
                    let _ = writeln!(s, "hit {h}");
                }
                s
            }
        }
    }
}

fn resized(mut raw: Vec<BigInt>, order: Option<usize>) -> Vec<BigInt> {
    if let Some(order) = order {
        raw.resize(order, BigInt::default());
    }
    raw
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn indexed_lines<T: std::fmt::Display>(first: usize, values: &[T]) -> String {
    let mut s = String::new();
    for (i, v) in values.iter().enumerate() {
        let _ = writeln!(s, "{} {v}", first + i);
    }
    s
}

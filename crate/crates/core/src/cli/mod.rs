//! The `ffzeta` command line: argument parsing, dispatch and serialization.
//!
//! Exit codes: 0 success, 1 computational failure (a JSON error object is written
//! to the output), 2 usage or parse error (message on standard error).

mod complex;
mod render;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

pub use complex::parse_complex;

use crate::ffield::{prime_power, Field, FieldSpec};
use crate::northcott::Dedupe;
use crate::polyring::{Poly, PolyError, DEFAULT_SEED};

#[derive(Debug, Parser)]
#[command(
    name = "ffzeta",
    version,
    about = "Zeta functions of quadratic function fields over F_q"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Worker threads for parallel kernels (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
    /// Maximum number of polynomials an enumeration may visit.
    #[arg(long, global = true, default_value_t = crate::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Seed for randomized factorization.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum DedupeArg {
    Raw,
    #[value(alias = "affine-orbit")]
    AffineOrbit,
    #[value(alias = "by-lpolynomial")]
    ByLpolynomial,
}

impl From<DedupeArg> for Dedupe {
    fn from(d: DedupeArg) -> Self {
        match d {
            DedupeArg::Raw => Dedupe::Raw,
            DedupeArg::AffineOrbit => Dedupe::AffineOrbit,
            DedupeArg::ByLpolynomial => Dedupe::ByLpolynomial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Route {
    Splitting,
    Charsum,
    Both,
}

/// `--q` with an optional `--modulus` for extension fields.
#[derive(Debug, Clone, Args)]
pub struct FieldArgs {
    /// Field order, a prime power.
    #[arg(long, value_parser = parse_prime_power)]
    pub q: u64,
    /// Defining polynomial of F_q over F_p, comma-separated coefficients, constant first.
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u64>>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Describe F_q.
    Field(FieldArgs),
    /// Factor and inspect a polynomial over F_q.
    Poly {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "D", allow_hyphen_values = true)]
        d: String,
        /// Also report the quadratic character (D/f) for this monic f.
        #[arg(long)]
        chi: Option<String>,
    },
    /// L-polynomial, class number and Weil checks of y^2 = D(T).
    Lpoly {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "D")]
        d: String,
        #[arg(long, value_enum, default_value_t = Route::Splitting)]
        route: Route,
    },
    /// Leading coefficient of zeta_K at s.
    Zeta {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "D")]
        d: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
    },
    /// Region verdict for (q, s).
    Classify {
        #[arg(long, value_parser = parse_prime_power)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
    },
    /// Closed-form bounds and thresholds.
    Bounds(BoundsArgs),
    /// Members of S_{q,s,B} within an enumeration scope.
    Northcott {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long = "B")]
        b: f64,
        #[arg(long, default_value_t = 0)]
        genus_min: usize,
        #[arg(long, default_value_t = 2)]
        genus_max: usize,
        #[arg(long, value_enum, default_value_t = DedupeArg::Raw)]
        dedupe: DedupeArg,
        /// At s = 1/2 filter on |zeta_K(1/2)| instead of the leading coefficient.
        #[arg(long)]
        plain_central_value: bool,
    },
    /// Exhaustive search for L_K(q^{-1/2}) = 0.
    CentralZeros {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 5)]
        max_deg: usize,
    },
    /// Second moments of L(1/2 + alpha, chi_D) over H_{2g+1}.
    Moments(MomentsArgs),
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true)]
pub struct BoundsArgs {
    #[command(subcommand)]
    pub command: Option<BoundsCommand>,
    /// Emit every applicable calculator over the grid as CSV.
    #[arg(long)]
    pub list: bool,
    /// Grid of field orders.
    #[arg(long, value_delimiter = ',', value_parser = parse_prime_power, default_value = "5")]
    pub q: Vec<u64>,
    /// Grid of genera.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    pub g: Vec<usize>,
    /// Grid of real parts.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "2"
    )]
    pub sigma: Vec<f64>,
    /// Grid of B values.
    #[arg(long = "B", value_delimiter = ',', default_value = "10")]
    pub b: Vec<f64>,
    /// Couveignes constant (no effective value known).
    #[arg(long = "Q", default_value_t = 1.0)]
    pub big_q: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c1: f64,
    #[arg(long, default_value_t = 1.0)]
    pub c2: f64,
}

#[derive(Debug, Subcommand)]
pub enum BoundsCommand {
    /// 1/((1 - q^-sigma)(1 - q^(1-sigma))^2), exact for integer sigma.
    RightThreshold {
        #[arg(long, value_parser = parse_prime_power)]
        q: u64,
        #[arg(long, allow_hyphen_values = true)]
        sigma: f64,
    },
    /// Certified genus cap in the Northcott region.
    GenusCap {
        #[arg(long, value_parser = parse_prime_power)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long = "B")]
        b: f64,
    },
    /// Bracket for |L_K(u)|.
    Hasse {
        #[arg(long, value_parser = parse_prime_power)]
        q: u64,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        u: Complex64,
    },
    /// Size bound for S_{q,s,B}.
    Size {
        #[arg(long, value_parser = parse_prime_power)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long = "B")]
        b: f64,
        #[arg(long = "Q", default_value_t = 1.0)]
        big_q: f64,
    },
    /// Threshold for Re(s) > 1/2 from the second moment.
    MomentThreshold {
        #[arg(long, value_parser = parse_prime_power)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        s: Complex64,
        #[arg(long, default_value_t = crate::moments::DEFAULT_TRUNCATION)]
        trunc: usize,
    },
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
pub struct MomentsArgs {
    #[command(subcommand)]
    pub command: Option<MomentsCommand>,
    #[arg(long, value_parser = parse_prime_power)]
    pub q: Option<u64>,
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u64>>,
    #[arg(long)]
    pub g: Option<usize>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
    pub alpha: Option<Complex64>,
    #[arg(long, default_value_t = crate::moments::DEFAULT_TRUNCATION)]
    pub trunc: usize,
}

#[derive(Debug, Subcommand)]
pub enum MomentsCommand {
    /// Both sides of the approximate functional equation for one curve.
    VerifyAfe {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "D")]
        d: String,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        alpha: Complex64,
    },
    /// Truncated Euler product C_alpha.
    CAlpha {
        #[arg(long, value_parser = parse_prime_power)]
        q: u64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        alpha: Complex64,
        #[arg(long, default_value_t = crate::moments::DEFAULT_TRUNCATION)]
        trunc: usize,
    },
    /// Two-shift main-term prediction for the mean of L(1/2+a1) L(1/2+a2).
    Predict {
        #[arg(long, value_parser = parse_prime_power)]
        q: u64,
        #[arg(long)]
        g: usize,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        alpha1: Complex64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_complex)]
        alpha2: Complex64,
        #[arg(long, default_value_t = crate::moments::DEFAULT_TRUNCATION)]
        trunc: usize,
    },
}

fn parse_prime_power(text: &str) -> Result<u64, String> {
    let q: u64 = text
        .trim()
        .parse()
        .map_err(|_| format!("{text:?} is not an integer"))?;
    match prime_power(q) {
        Some(_) => Ok(q),
        None => Err(format!("{q} is not a prime power")),
    }
}

/// Errors surfaced by [`run`].
#[derive(Debug)]
pub enum CliError {
    /// Bad input detected after argument parsing; exit code 2.
    Usage(String),
    /// A failed computation; exit code 1.
    Compute {
        code: String,
        message: String,
    },
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Compute { .. } | CliError::Io(_) => 1,
        }
    }
}

/// Stable code: the innermost variant name of a nested error enum.
fn error_code(debug: &str) -> String {
    const WRAPPERS: [&str; 7] = [
        "Poly",
        "Zeta",
        "Bounds",
        "Moments",
        "Field",
        "Northcott",
        "Literal",
    ];
    let mut rest = debug;
    loop {
        let end = rest
            .find(|c: char| !(c.is_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        let name = &rest[..end];
        if WRAPPERS.contains(&name) && rest[end..].starts_with('(') {
            rest = &rest[end + 1..];
            continue;
        }
        return name.to_string();
    }
}

pub(crate) fn compute_err<E: std::error::Error + std::fmt::Debug>(e: E) -> CliError {
    CliError::Compute {
        code: error_code(&format!("{e:?}")),
        message: e.to_string(),
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

pub(crate) fn build_field(args: &FieldArgs) -> Result<Field, CliError> {
    let (p, e) = prime_power(args.q).expect("validated by the parser");
    FieldSpec::new(p, e, args.modulus.as_deref())
        .map_err(|err| CliError::Usage(format!("--modulus: {err}")))
}

pub(crate) fn parse_poly(field: &Field, flag: &str, text: &str) -> Result<Poly, CliError> {
    Poly::parse(field, text).map_err(|e| match e {
        PolyError::Literal(l) => CliError::Usage(format!(
            "{flag}: parse error at offset {}: {}",
            l.offset, l.message
        )),
        other => CliError::Usage(format!("{flag}: {other}")),
    })
}

/// Runs a parsed command, writing its output to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let work = || {
        let mut buf = Vec::new();
        render::dispatch(cli, &mut buf).map(|()| buf)
    };
    let buf = match cli.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
            .map_err(|e| CliError::Usage(format!("--threads: {e}")))?
            .install(work),
        None => work(),
    }?;
    out.write_all(&buf)?;
    Ok(())
}

/// Full entry point: parse `args`, run, report errors. Returns the exit code.
pub fn main_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                2
            } else {
                let _ = write!(stdout, "{rendered}");
                0
            };
        }
    };
    let result = match &cli.out {
        Some(path) => std::fs::File::create(path)
            .map_err(CliError::Io)
            .and_then(|mut f| run(&cli, &mut f)),
        None => run(&cli, stdout),
    };
    match result {
        Ok(()) => 0,
        Err(err) => {
            match &err {
                CliError::Usage(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                }
                CliError::Compute { code, message } => {
                    let _ = writeln!(stderr, "error: {message}");
                    let obj = serde_json::json!({ "error": { "code": code, "message": message } });
                    let _ = writeln!(stdout, "{obj}");
                }
                CliError::Io(e) => {
                    let _ = writeln!(stderr, "error: {e}");
                    let obj =
                        serde_json::json!({ "error": { "code": "Io", "message": e.to_string() } });
                    let _ = writeln!(stdout, "{obj}");
                }
            }
            err.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_codes_unwrap_nesting() {
        assert_eq!(
            error_code("BudgetExceeded { needed: 1, budget: 0 }"),
            "BudgetExceeded"
        );
        assert_eq!(
            error_code("Zeta(Poly(BudgetExceeded { needed: 1 }))"),
            "BudgetExceeded"
        );
        assert_eq!(error_code("NotSquarefree"), "NotSquarefree");
        assert_eq!(error_code("InvalidPrimePower(6)"), "InvalidPrimePower");
    }

    #[test]
    fn rejects_non_prime_power() {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = main_with(
            ["ffzeta", "classify", "--q", "6", "--s", "0"],
            &mut out,
            &mut err,
        );
        assert_eq!(code, 2);
        assert!(String::from_utf8(err)
            .unwrap()
            .contains("not a prime power"));
    }
}

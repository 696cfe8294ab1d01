//! The `ito-fourier` command line.
//!
//! Exit codes: 0 on success, 1 for usage, domain, config and compatibility
//! errors, 2 for numeric failures.

use std::fs;
use std::io::{self, BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::basis::{self, BasisSystem, Interval};
use crate::coefficients::{
    self, coefficient_tensor_with_limit, CoefficientTensor, DEFAULT_MAX_ENTRIES,
};
use crate::error::{Error, Result};
use crate::expansion::{truncated_expansion, ExpansionResult};
use crate::kernel::IntegralSpec;
use crate::partitions::pair_partitions;
use crate::stochastic::gaussian_pool;
use crate::validation::estimate_with_tensor;

pub const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (table format 1)");

/// Settings shared by file and flags; flags win.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub spec: Option<IntegralSpec>,
    pub basis: Option<BasisSystem>,
    pub orders: Option<Vec<usize>>,
    pub seed: Option<u64>,
    pub paths: Option<usize>,
    pub steps: Option<usize>,
    pub moment: Option<u32>,
    pub max_entries: Option<usize>,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(Error::from_json)
    }

    fn load(path: Option<&Path>) -> Result<Self> {
        match path {
            None => Ok(RunConfig::default()),
            Some(p) => {
                let text = fs::read_to_string(p)
                    .map_err(|e| Error::config("--config", format!("{}: {e}", p.display())))?;
                RunConfig::from_json(&text)
            }
        }
    }

    fn spec(&self) -> Result<&IntegralSpec> {
        self.spec
            .as_ref()
            .ok_or_else(|| Error::config("spec", "no integral spec given (use --config)"))
    }

    fn orders(&self) -> Result<&[usize]> {
        self.orders
            .as_deref()
            .ok_or_else(|| Error::config("orders", "no truncation orders given"))
    }

    fn require<T: Copy>(value: Option<T>, name: &str) -> Result<T> {
        value.ok_or_else(|| Error::config(name, format!("`{name}` is required")))
    }
}

#[derive(Parser)]
#[command(name = "ito-fourier", version = VERSION, about = "Fourier series approximation of iterated Itô integrals")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// JSON run config.
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    basis: Option<BasisSystem>,
    /// Truncation orders p1,…,pk.
    #[arg(long, value_delimiter = ',')]
    orders: Option<Vec<usize>>,
    /// Output file (default: stdout).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate Fourier coefficients.
    Coeffs {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        max_entries: Option<usize>,
    },
    /// Evaluate the truncated expansion on a seeded Gaussian pool.
    Approximate {
        #[command(flatten)]
        common: Common,
        /// Coefficient table written by `coeffs`, used instead of recomputing.
        #[arg(long)]
        tensor: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// List pair partitions of {1,…,k}.
    Partitions {
        #[arg(long)]
        k: usize,
        /// Number of pairs (default: every r).
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Monte-Carlo strong error check against the grid sum.
    Validate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        paths: Option<usize>,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Also check E[D^{2n}] for n = 1 or 2.
        #[arg(long)]
        moment: Option<u32>,
    },
    /// List basis systems with sample values on [0, 1].
    Bases {
        /// Largest index shown.
        #[arg(long, default_value_t = 3)]
        jmax: usize,
        /// Sample points per function.
        #[arg(long, default_value_t = 5)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Common {
    fn resolve(&self) -> Result<RunConfig> {
        let mut cfg = RunConfig::load(self.config.as_deref())?;
        if self.basis.is_some() {
            cfg.basis = self.basis;
        }
        if self.orders.is_some() {
            cfg.orders = self.orders.clone();
        }
        if self.out.is_some() {
            cfg.out = self.out.clone();
        }
        Ok(cfg)
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_numeric() {
        2
    } else {
        1
    }
}

/// Primary output and where it goes (`None` for stdout).
struct Output {
    path: Option<PathBuf>,
    bytes: Vec<u8>,
}

fn output(path: Option<&Path>, bytes: Vec<u8>) -> Result<Output> {
    Ok(Output {
        path: path.map(Path::to_path_buf),
        bytes,
    })
}

fn emit(out: Output, stdout: &mut dyn Write) -> Result<()> {
    match out.path {
        Some(p) => fs::write(&p, &out.bytes)
            .map_err(|e| Error::config("--out", format!("{}: {e}", p.display()))),
        None => Ok(stdout.write_all(&out.bytes)?),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut text = serde_json::to_vec_pretty(value).map_err(|e| Error::Io(e.into()))?;
    text.push(b'\n');
    Ok(text)
}

fn tensor_from(cfg: &RunConfig) -> Result<CoefficientTensor> {
    coefficient_tensor_with_limit(
        cfg.spec()?,
        cfg.basis.unwrap_or(BasisSystem::Legendre),
        cfg.orders()?,
        cfg.max_entries.unwrap_or(DEFAULT_MAX_ENTRIES),
    )
}

#[derive(Serialize)]
struct Approximation<'a> {
    #[serde(flatten)]
    result: &'a ExpansionResult,
    seed: u64,
    basis: BasisSystem,
}

fn run(command: Command) -> Result<Output> {
    match command {
        Command::Coeffs {
            common,
            max_entries,
        } => {
            let mut cfg = common.resolve()?;
            if max_entries.is_some() {
                cfg.max_entries = max_entries;
            }
            let tensor = tensor_from(&cfg)?;
            let mut buf = Vec::new();
            coefficients::write_table(&tensor, &mut buf)?;
            output(cfg.out.as_deref(), buf)
        }
        Command::Approximate {
            common,
            tensor,
            seed,
        } => {
            let mut cfg = common.resolve()?;
            if seed.is_some() {
                cfg.seed = seed;
            }
            let seed = RunConfig::require(cfg.seed, "seed")?;
            let tensor = match tensor {
                Some(path) => {
                    let file = fs::File::open(&path).map_err(|e| {
                        Error::config("--tensor", format!("{}: {e}", path.display()))
                    })?;
                    coefficients::read_table(BufReader::new(file))?
                }
                None => tensor_from(&cfg)?,
            };
            let spec = tensor.spec();
            let pool = gaussian_pool(
                spec.interval(),
                tensor.basis(),
                spec.dimension().max(1),
                tensor.max_order(),
                seed,
            )?;
            let result = truncated_expansion(&tensor, &pool)?;
            let body = Approximation {
                result: &result,
                seed,
                basis: tensor.basis(),
            };
            output(cfg.out.as_deref(), to_json(&body)?)
        }
        Command::Partitions { k, r, out } => {
            let rs: Vec<usize> = match r {
                Some(r) => vec![r],
                None => (0..=k / 2).collect(),
            };
            let mut text = String::new();
            for r in rs {
                for p in pair_partitions(k, r)? {
                    text.push_str(&p.to_string());
                    text.push('\n');
                }
            }
            output(out.as_deref(), text.into_bytes())
        }
        Command::Validate {
            common,
            paths,
            steps,
            seed,
            moment,
        } => {
            let mut cfg = common.resolve()?;
            cfg.paths = paths.or(cfg.paths);
            cfg.steps = steps.or(cfg.steps);
            cfg.seed = seed.or(cfg.seed);
            cfg.moment = moment.or(cfg.moment);
            let paths = RunConfig::require(cfg.paths, "paths")?;
            let steps = RunConfig::require(cfg.steps, "steps")?;
            let seed = RunConfig::require(cfg.seed, "seed")?;
            let tensor = tensor_from(&cfg)?;
            let report = estimate_with_tensor(&tensor, paths, steps, seed, cfg.moment)?;
            output(cfg.out.as_deref(), to_json(&report)?)
        }
        Command::Bases { jmax, points, out } => {
            if points < 2 {
                return Err(Error::domain("need at least 2 sample points"));
            }
            let iv = Interval::unit();
            let mut text = String::from("basis,j,s,value\n");
            for system in BasisSystem::ALL {
                for j in 0..=jmax {
                    for l in 0..points {
                        let s = l as f64 / (points - 1) as f64;
                        let v = basis::eval_basis(system, j, s, &iv)?;
                        text.push_str(&format!("{system},{j},{s},{v:.16e}\n"));
                    }
                }
            }
            output(out.as_deref(), text.into_bytes())
        }
    }
}

/// Runs one command line, writing primary output to `stdout` (or `--out`)
/// and diagnostics to `stderr`.
pub fn run_with_io<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(shown.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(shown.as_bytes());
                    1
                }
            };
        }
    };
    let result = match cli.threads {
        Some(0) => Err(Error::config("--threads", "must be at least 1")),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::config("--threads", e.to_string()))
            .and_then(|pool| pool.install(|| run(cli.command))),
        None => run(cli.command),
    }
    .and_then(|out| emit(out, stdout));
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "ito-fourier: {e}");
            exit_code(&e)
        }
    }
}

pub fn run_cli<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with_io(argv, &mut io::stdout().lock(), &mut io::stderr().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("ito-fourier").chain(args.iter().copied());
        let code = run_with_io(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn version_mentions_table_format() {
        assert!(VERSION.ends_with(&format!("(table format {})", coefficients::FORMAT_VERSION)));
        let (code, out, _) = run(&["--version"]);
        assert_eq!(code, 0);
        assert!(out.contains("table format"));
    }

    #[test]
    fn partitions_listing() {
        let (code, out, _) = run(&["partitions", "--k", "5", "--r", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 15);
        assert_eq!(out.lines().next(), Some("(1 2)(3 4)|5"));
        let (code, out, _) = run(&["partitions", "--k", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1 + 6 + 3);
    }

    #[test]
    fn usage_and_domain_errors_exit_one() {
        assert_eq!(run(&["partitions", "--k", "3", "--r", "2"]).0, 1);
        assert_eq!(run(&["nonsense"]).0, 1);
        let (code, _, err) = run(&["coeffs", "--orders", "1"]);
        assert_eq!(code, 1);
        assert!(err.contains("spec"), "{err}");
    }

    #[test]
    fn config_errors_name_the_field() {
        let e = RunConfig::from_json(r#"{"basis":"legendre","paths":"many"}"#).unwrap_err();
        match e {
            Error::Config { path, .. } => assert_eq!(path, "paths"),
            other => panic!("{other:?}"),
        }
        let e = RunConfig::from_json(r#"{"seeds":1}"#).unwrap_err();
        assert!(matches!(e, Error::Config { .. }));
        let cfg = RunConfig::from_json(
            r#"{"spec":{"t":0,"T":1,"k":1,"indices":[1],"weights":[{"poly":[1]}]},"orders":[2],"seed":3}"#,
        )
        .unwrap();
        assert_eq!(cfg.orders().unwrap(), &[2]);
    }

    #[test]
    fn bases_table() {
        let (code, out, _) = run(&["bases", "--jmax", "1", "--points", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 1 + 4 * 2 * 3);
        assert!(out.contains("haar,1,0.5,-1.0000000000000000e0"));
    }
}

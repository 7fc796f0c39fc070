//! Command-line front end.
//!
//! - `cusps <symbol>`: cusp number C and area invariant D of a Norton symbol.
//! - `verify --suite <name>`: runs a verification suite and sets the exit code.
//! - `report --out <path> --format md|json`: writes the full reconciliation report.
//! - `series <name>`: prints q-series coefficients.
//! - `del-pezzo <degree>`: lists (−1)-curves or roots, sorted lexicographically.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error,
//! 3 data-integrity error. The data directory is `--data-dir`, else
//! `$MOONSHINE_DATA_DIR`, else the `data/` directory of the source tree.

pub mod cache;
pub mod report;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::exactmath::LaurentSeries;
use crate::geometry::{minus_one_curves, root_classes};
use crate::norton::{cusp_and_area, parse_norton};
use crate::qseries::{
    delta_series, eisenstein_e4, j_cube_root, j_series, leech_theta, mckay_thompson_2a,
    mckay_thompson_3a, theta_e8, JVariant,
};
use cache::DiskCache;
use report::{Report, Section};
use suites::{run_suite, SuiteContext, SUITES};

/// Environment variable naming the data directory.
pub const DATA_ENV: &str = "MOONSHINE_DATA_DIR";

/// Exit code: success.
pub const EXIT_OK: i32 = 0;
/// Exit code: a verification failed.
pub const EXIT_FAIL: i32 = 1;
/// Exit code: malformed input.
pub const EXIT_INPUT: i32 = 2;
/// Exit code: data integrity.
pub const EXIT_DATA: i32 = 3;

/// The fallback data directory baked in at build time.
pub fn default_data_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
}

/// Resolves the data directory from the flag, the environment, or the fallback.
pub fn resolve_data_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os(DATA_ENV).map(PathBuf::from))
        .unwrap_or_else(default_data_dir)
}

/// Output format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Plain text.
    Text,
    /// JSON.
    Json,
    /// Markdown.
    Md,
}

/// Suite selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// Monster tables and modular-curve checks.
    Monster,
    /// Baby Monster table.
    Baby,
    /// Fischer table.
    Fischer,
    /// q-series.
    Qseries,
    /// Character tables and finite groups.
    Chartab,
    /// Enumerative geometry.
    Geometry,
    /// Every suite.
    All,
}

impl Suite {
    fn names(self) -> Vec<&'static str> {
        match self {
            Suite::Monster => vec!["monster"],
            Suite::Baby => vec!["baby"],
            Suite::Fischer => vec!["fischer"],
            Suite::Qseries => vec!["qseries"],
            Suite::Chartab => vec!["chartab"],
            Suite::Geometry => vec!["geometry"],
            Suite::All => SUITES.to_vec(),
        }
    }
}

/// Series selector for `series`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    /// j = E4³/Δ.
    J,
    /// j − 744.
    JMonster,
    /// j^{1/3}.
    JCubeRoot,
    /// McKay–Thompson 2A.
    T2a,
    /// McKay–Thompson 3A.
    T3a,
    /// Eisenstein E4.
    E4,
    /// Discriminant Δ.
    Delta,
    /// E8 theta series by enumeration.
    ThetaE8,
    /// Leech theta series.
    ThetaLeech,
}

impl SeriesName {
    /// Computes the series with `order` coefficients.
    pub fn compute(self, order: usize) -> Result<LaurentSeries, Error> {
        Ok(match self {
            SeriesName::J => j_series(order, JVariant::Arithmetic),
            SeriesName::JMonster => j_series(order, JVariant::Monster),
            SeriesName::JCubeRoot => j_cube_root(order)?,
            SeriesName::T2a => mckay_thompson_2a(order)?,
            SeriesName::T3a => mckay_thompson_3a(order)?,
            SeriesName::E4 => eisenstein_e4(order),
            SeriesName::Delta => delta_series(order),
            SeriesName::ThetaE8 => theta_e8(order),
            SeriesName::ThetaLeech => leech_theta(order)?,
        })
    }
}

/// Computes a series by its command-line name (`j`, `t2a`, `theta-e8`, …).
pub fn series_by_name(name: &str, order: usize) -> Result<LaurentSeries, Error> {
    let which = SeriesName::from_str(name, true)
        .map_err(|_| Error::InvalidArgument(format!("unknown series {name:?}")))?;
    which.compute(order)
}

/// Command-line arguments.
#[derive(Debug, Parser)]
#[command(
    name = "moonshine",
    version,
    about = "Exact checks for moonshine cusp numbers, q-series, groups and geometry"
)]
pub struct Cli {
    /// Data directory (overrides $MOONSHINE_DATA_DIR).
    #[arg(long, global = true)]
    pub data_dir: Option<PathBuf>,
    /// Number of q-series coefficients.
    #[arg(long, global = true, default_value_t = 16)]
    pub order: usize,
    /// Molien series degree.
    #[arg(long, global = true, default_value_t = 40)]
    pub degree: usize,
    /// Disable the on-disk cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Subcommand.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cusp number and area invariant of a Norton symbol.
    Cusps {
        /// Symbol such as `2+`, `4|2-` or `30+6,10,15`.
        symbol: String,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a verification suite.
    Verify {
        /// Suite to run.
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write the full reconciliation report.
    Report {
        /// Output path (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Print q-series coefficients.
    Series {
        /// Which series.
        #[arg(value_enum)]
        name: SeriesName,
    },
    /// List (−1)-curves or roots on a del Pezzo surface.
    DelPezzo {
        /// Surface degree 1..=8.
        #[arg(value_name = "DEGREE")]
        surface_degree: u32,
        /// List roots instead of (−1)-curves.
        #[arg(long)]
        roots: bool,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Integrity(_) | Error::Data(_) => EXIT_DATA,
        Error::Parse(_) | Error::InvalidArgument(_) => EXIT_INPUT,
        _ => EXIT_FAIL,
    }
}

/// Builds the report for the given suites.
pub fn build_report(names: &[&str], ctx: &SuiteContext) -> Result<Report, Error> {
    let sections = names
        .iter()
        .map(|n| run_suite(n, ctx))
        .collect::<Result<Vec<Section>, Error>>()?;
    Ok(Report { sections })
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
    }
}

fn print_series(s: &LaurentSeries, out: &mut dyn Write) -> std::io::Result<()> {
    for (i, c) in s.coeffs().iter().enumerate() {
        let e = s.offset() + crate::exactmath::Rational::from(i);
        writeln!(out, "q^{e}\t{c}")?;
    }
    Ok(())
}

/// Runs the CLI with `args` (including the program name), writing to `out` and `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32, Error> {
    let data_dir = resolve_data_dir(cli.data_dir);
    let cache = (!cli.no_cache).then(DiskCache::from_env);
    let ctx = SuiteContext::new(data_dir, cli.order, cli.degree, cache);
    match cli.command {
        Command::Cusps { symbol, format } => {
            let sym = parse_norton(&symbol)?;
            let readings: Vec<(String, (u64, u64))> = if sym.is_ambiguous() {
                vec![
                    (format!("{}+", sym), cusp_and_area(&sym.with_sign(true))?),
                    (format!("{}-", sym), cusp_and_area(&sym.with_sign(false))?),
                ]
            } else {
                vec![(sym.to_string(), cusp_and_area(&sym)?)]
            };
            match format {
                Format::Json => {
                    let v: Vec<serde_json::Value> = readings
                        .iter()
                        .map(|(s, (c, d))| serde_json::json!({"symbol": s, "C": c, "D": d}))
                        .collect();
                    let doc = if v.len() == 1 {
                        v[0].clone()
                    } else {
                        serde_json::Value::Array(v)
                    };
                    writeln!(out, "{doc}")?;
                }
                _ => {
                    for (s, (c, d)) in &readings {
                        if readings.len() == 1 {
                            writeln!(out, "C={c} D={d}")?;
                        } else {
                            writeln!(out, "{s}: C={c} D={d}")?;
                        }
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { suite, format } => {
            if !ctx.data_dir.is_dir() {
                return Err(Error::Integrity(format!(
                    "data directory {} not found",
                    ctx.data_dir.display()
                )));
            }
            let report = build_report(&suite.names(), &ctx)?;
            write!(out, "{}", render(&report, format))?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Report { out: path, format } => {
            let report = build_report(&SUITES, &ctx)?;
            let text = render(&report, format);
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Command::Series { name } => {
            print_series(&name.compute(ctx.order)?, out)?;
            Ok(EXIT_OK)
        }
        Command::DelPezzo {
            surface_degree,
            roots,
        } => {
            let classes = if roots {
                root_classes(surface_degree)?
            } else {
                minus_one_curves(surface_degree)?
            };
            for c in &classes {
                writeln!(out, "{c}")?;
            }
            writeln!(out, "# {} classes", classes.len())?;
            Ok(EXIT_OK)
        }
    }
}

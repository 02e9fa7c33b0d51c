use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use faddeyeva::{classify, w, Complex64, EvalOptions, Status, TuningParams64, TUNING_TABLE_VERSION};
use faddeyeva_cli::bench::{self, BenchRegion};
use faddeyeva_cli::grid::{self, Axis, GridSpec, RefSource, Scale};
use faddeyeva_cli::{fixtures, fmt_f64, CliError, Result};
use faddeyeva_oracle::FIXTURE_DIGITS;
use serde_json::json;

#[derive(Parser)]
#[command(name = "faddeyeva", about = "Evaluate and sweep the Faddeyeva function w(z)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate w at one point.
    Eval(EvalArgs),
    /// Sweep a grid and write a CSV of values and errors.
    Grid(GridArgs),
    /// Write the region of every grid point as CSV and optionally PGM.
    RegionsMap(MapArgs),
    /// Time the evaluator with and without the near-axis strip.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Fast,
    Oracle,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    re: f64,
    #[arg(long, allow_negative_numbers = true)]
    im: f64,
    /// Use the original partition without the near-axis strip.
    #[arg(long)]
    no_remedy: bool,
    #[arg(long, value_enum, default_value = "fast")]
    engine: Engine,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long, allow_negative_numbers = true)]
    x_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    x_max: f64,
    #[arg(long)]
    x_points: usize,
    #[arg(long, value_enum, default_value = "linear")]
    x_scale: Scale,
    #[arg(long, allow_negative_numbers = true)]
    y_min: f64,
    #[arg(long, allow_negative_numbers = true)]
    y_max: f64,
    #[arg(long)]
    y_points: usize,
    #[arg(long, value_enum, default_value = "linear")]
    y_scale: Scale,
}

impl SpecArgs {
    fn spec(&self) -> Result<GridSpec> {
        GridSpec::new(
            Axis::new(self.x_min, self.x_max, self.x_points, self.x_scale),
            Axis::new(self.y_min, self.y_max, self.y_points, self.y_scale),
        )
    }
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    no_remedy: bool,
    /// Fill the reference and error columns from the oracle.
    #[arg(long)]
    with_ref: bool,
    /// Fixture CSV (`x,y,re_ref,im_ref`) to take reference values from.
    #[arg(long, requires = "with_ref")]
    ref_cache: Option<PathBuf>,
    /// Worker threads; the output does not depend on it.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct MapArgs {
    #[command(flatten)]
    spec: SpecArgs,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    pgm: Option<PathBuf>,
    #[arg(long)]
    no_remedy: bool,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value = "strip")]
    region: BenchRegion,
    #[arg(long, default_value_t = 1_000_000)]
    samples: usize,
    #[arg(long, default_value_t = bench::DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn num(v: f64) -> serde_json::Value {
    if v.is_finite() {
        json!(v)
    } else {
        json!(v.to_string())
    }
}

fn complex_text(re: &str, im: &str) -> String {
    match im.strip_prefix('-') {
        Some(a) => format!("{re} - {a}i"),
        None => format!("{re} + {im}i"),
    }
}

fn cmd_eval(a: EvalArgs) -> Result<ExitCode> {
    let p = TuningParams64::standard();
    let opts = EvalOptions::with_remedy(!a.no_remedy);
    let z = Complex64::new(a.re, a.im);
    let region = classify(z, &p, opts.remedy_enabled);
    let (re, im, terms, status) = match a.engine {
        Engine::Fast => {
            let r = w(z, &p, opts)?;
            (fmt_f64(r.value.re), fmt_f64(r.value.im), Some(r.terms_used), r.status)
        }
        Engine::Oracle => {
            if !(a.im >= 0.0) {
                return Err(CliError::Usage("the oracle engine needs im >= 0".into()));
            }
            let (re, im) = grid::reference_at(a.re, a.im)?.to_decimal(FIXTURE_DIGITS);
            (re, im, None, Status::Ok)
        }
    };
    let status_str = if status == Status::Ok { "ok" } else { "overflow" };
    match a.format {
        Format::Text => {
            println!("value: {}", complex_text(&re, &im));
            println!("region: {region}");
            println!("terms: {}", terms.map_or("-".to_string(), |t| t.to_string()));
            println!("status: {status_str}");
        }
        Format::Json => {
            let field = |s: &str| match a.engine {
                Engine::Fast => num(s.parse().unwrap_or(f64::NAN)),
                Engine::Oracle => json!(s),
            };
            let v = json!({
                "re": field(&re),
                "im": field(&im),
                "region": region.as_str(),
                "terms": terms,
                "status": status_str,
            });
            println!("{v}");
        }
    }
    Ok(if status == Status::Ok { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn cmd_grid(a: GridArgs) -> Result<ExitCode> {
    let spec = a.spec.spec()?;
    let p = TuningParams64::standard();
    let refs = match (&a.ref_cache, a.with_ref) {
        (Some(path), _) => RefSource::Cache(fixtures::cache(&fixtures::read_w(path)?)),
        (None, true) => RefSource::Oracle,
        (None, false) => RefSource::None,
    };
    let rows = grid::evaluate_grid(&spec, &p, EvalOptions::with_remedy(!a.no_remedy), &refs, a.threads)?;
    grid::write_csv_file(&rows, &a.out)?;
    match grid::summarize(&rows) {
        Some(s) => println!("{s}"),
        None => println!("{} rows written to {}", rows.len(), a.out.display()),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_regions_map(a: MapArgs) -> Result<ExitCode> {
    let spec = a.spec.spec()?;
    let map = grid::region_map(&spec, &TuningParams64::standard(), !a.no_remedy);
    let write = |path: &PathBuf, text: String| {
        std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
    };
    write(&a.out, grid::region_csv(&map))?;
    if let Some(pgm) = &a.pgm {
        write(pgm, grid::region_pgm(&spec, &map))?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_bench(a: BenchArgs) -> Result<ExitCode> {
    if a.samples == 0 {
        return Err(CliError::Usage("--samples must be positive".into()));
    }
    let r = bench::run(a.region, a.samples, a.seed);
    match a.format {
        Format::Text => println!("{r}"),
        Format::Json => println!("{}", serde_json::to_string(&r).unwrap_or_default()),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let version: &'static str =
        Box::leak(format!("{} (tuning tables {TUNING_TABLE_VERSION})", env!("CARGO_PKG_VERSION")).into_boxed_str());
    let parsed = Cli::command().version(version).try_get_matches().and_then(|m| Cli::from_arg_matches(&m));
    let cli = match parsed {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let out = match cli.cmd {
        Cmd::Eval(a) => cmd_eval(a),
        Cmd::Grid(a) => cmd_grid(a),
        Cmd::RegionsMap(a) => cmd_regions_map(a),
        Cmd::Bench(a) => cmd_bench(a),
    };
    out.unwrap_or_else(|e| {
        eprintln!("faddeyeva: {e}");
        ExitCode::from(1)
    })
}

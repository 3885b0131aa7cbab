//! `hconv` command-line tool.
//!
//! Exit codes: 0 when every check passes, 1 on a verification failure,
//! 2 on usage or parameter errors.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hconv::algebra::{conv_power, spectral_radius_trace, young_conv_report, young_trilinear_report, YoungExponents};
use hconv::bench::{bench, to_csv as bench_csv, DEFAULT_SIZES, REPEATS};
use hconv::io::{read_function, read_spectrum, to_csv, RunConfig};
use hconv::solvers::{
    fredholm_bound_report, fredholm_residual_report, heat_estimate_report, solve_fredholm, solve_heat_convolution,
    solve_heat_spectral, FredholmProblem, HeatProblem,
};
use hconv::verify::{run_suite, Suite, VerifyConfig};
use hconv::wiener_levy::{eta_identity_check, wiener_levy_eta};
use hconv::{
    convolve_direct, convolve_spectral, factorization_check, h_forward, h_inverse, riemann_lebesgue_check, Error,
    Grid, Sampled, SampledFunction, TransformMethod, TransformParams, VerificationReport,
};

#[derive(Parser)]
#[command(name = "hconv", version, about = "Hartley-type transform, convolution algebra and solvers")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Forward transform of a function file.
    Transform(TransformArgs),
    /// Inverse transform of a spectrum file.
    Inverse(TransformArgs),
    /// Convolution of two function files.
    Convolve(ConvolveArgs),
    /// k-th convolution power.
    Power(PowerArgs),
    /// Spectral radius trace of convolution powers.
    Radius(RadiusArgs),
    /// Inversion `Hη = Hg / (1 + Hg)`.
    WienerLevy(IoArgs),
    /// Solve `f + f⊛g = g⊛k` with g from --input and k from --input2.
    SolveFredholm(FredholmArgs),
    /// Solve the heat equation with initial datum from --input.
    SolveHeat(HeatArgs),
    /// Run a verification suite on seeded functions.
    Verify(VerifyArgs),
    /// Time direct against spectral convolution.
    Bench(BenchArgs),
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, allow_negative_numbers = true)]
    a: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    b: Option<f64>,
    /// Grid half width L (nodes span [-L, L]).
    #[arg(long = "grid-L")]
    grid_l: Option<f64>,
    /// Number of grid nodes N (odd).
    #[arg(long = "grid-N")]
    grid_n: Option<usize>,
    /// TOML run configuration; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Print reports as a JSON array.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct IoArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long, value_enum, default_value = "accelerated")]
    method: Method,
}

#[derive(Args)]
struct ConvolveArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long)]
    input2: PathBuf,
    /// Third function for the trilinear Young bound.
    #[arg(long)]
    input3: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "spectral")]
    method: Method,
    #[command(flatten)]
    exps: Exponents,
}

#[derive(Args)]
struct Exponents {
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    q: Option<f64>,
    #[arg(long)]
    r: Option<f64>,
}

#[derive(Args)]
struct PowerArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long)]
    k: u32,
}

#[derive(Args)]
struct RadiusArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long, default_value_t = 20)]
    kmax: u32,
}

#[derive(Args)]
struct FredholmArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long)]
    input2: PathBuf,
}

#[derive(Args)]
struct HeatArgs {
    #[command(flatten)]
    io: IoArgs,
    #[arg(long)]
    time: f64,
    #[arg(long, default_value_t = 1.0)]
    diffusion: f64,
    /// `spectral` solves on the transform side, `direct` uses `g_t ⊛ φ`.
    #[arg(long, value_enum, default_value = "spectral")]
    method: Method,
    #[command(flatten)]
    exps: Exponents,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteArg,
    #[arg(long)]
    seed: Option<u64>,
    /// Seeded cases per randomised check.
    #[arg(long, default_value_t = 50)]
    count: usize,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    common: Common,
    /// Comma-separated odd sizes in ascending order; empty for an empty table.
    #[arg(long)]
    sizes: Option<String>,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Spectral,
    Quadrature,
    Accelerated,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Young,
    Algebra,
    Heat,
    Fredholm,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Young => Suite::Young,
            SuiteArg::Algebra => Suite::Algebra,
            SuiteArg::Heat => Suite::Heat,
            SuiteArg::Fredholm => Suite::Fredholm,
        }
    }
}

/// Errors that map to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, Usage>;

struct Settings {
    params: TransformParams,
    grid: Option<Grid>,
    config: RunConfig,
    json: bool,
}

fn settings(c: &Common) -> CliResult<Settings> {
    let config = match &c.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    let a = c.a.or(config.a).unwrap_or(1.0);
    let b = c.b.or(config.b).unwrap_or(1.0);
    let params = TransformParams::new(a, b)?;
    let grid = match (c.grid_l.or(config.half_width), c.grid_n.or(config.len)) {
        (None, None) => None,
        (l, n) => Some(Grid::new(l.unwrap_or(20.0), n.unwrap_or(2049))?),
    };
    Ok(Settings { params, grid, config, json: c.json })
}

impl Settings {
    fn grid_or_default(&self) -> CliResult<Grid> {
        Ok(match self.grid {
            Some(g) => g,
            None => Grid::new(20.0, 2049)?,
        })
    }

    fn check_grid<D>(&self, f: &Sampled<D>, path: &Path) -> CliResult<()> {
        match self.grid {
            Some(g) if !g.same_as(f.grid()) => Err(Usage(format!(
                "{} is sampled on (L={}, N={}), but the flags ask for (L={}, N={})",
                path.display(),
                f.grid().half_width(),
                f.grid().len(),
                g.half_width(),
                g.len()
            ))),
            _ => Ok(()),
        }
    }

    fn function(&self, path: &Path) -> CliResult<SampledFunction> {
        let f = read_function(path)?;
        self.check_grid(&f, path)?;
        Ok(f)
    }
}

fn emit_data(text: &str, output: Option<&Path>, json: bool) -> CliResult<()> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| Usage(format!("{}: {e}", path.display()))),
        None if !json => {
            write_stdout(text);
            Ok(())
        }
        None => Ok(()),
    }
}

// A closed pipe (e.g. `| head`) is not an error worth a panic.
fn write_stdout(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn emit_reports(reports: &[VerificationReport], json: bool) -> ExitCode {
    if json {
        write_stdout(&format!("{}\n", serde_json::to_string_pretty(reports).expect("reports serialise")));
    } else {
        for r in reports {
            eprintln!("{r}");
        }
    }
    if reports.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn transform_method(m: Method) -> CliResult<TransformMethod> {
    match m {
        Method::Quadrature => Ok(TransformMethod::Quadrature),
        Method::Accelerated => Ok(TransformMethod::Accelerated),
        _ => Err(Usage("transforms take --method quadrature or accelerated".into())),
    }
}

fn exponents(e: &Exponents, trilinear: bool) -> CliResult<Option<YoungExponents>> {
    match (e.p, e.q, e.r) {
        (None, None, None) => Ok(None),
        (Some(p), Some(q), Some(r)) => Ok(Some(if trilinear {
            YoungExponents::trilinear(p, q, r)?
        } else {
            YoungExponents::convolution(p, q, r)?
        })),
        _ => Err(Usage("--p, --q and --r must be given together".into())),
    }
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.cmd {
        Cmd::Transform(args) => {
            let s = settings(&args.io.common)?;
            let method = transform_method(args.method)?;
            let f = s.function(&args.io.input)?;
            let spectrum = h_forward(&f, &s.params, f.grid(), method);
            emit_data(&to_csv(&spectrum, "y"), args.io.output.as_deref(), s.json)?;
            Ok(emit_reports(&[riemann_lebesgue_check(&f, &s.params)], s.json))
        }
        Cmd::Inverse(args) => {
            let s = settings(&args.io.common)?;
            let method = transform_method(args.method)?;
            let spectrum = read_spectrum(&args.io.input)?;
            s.check_grid(&spectrum, &args.io.input)?;
            let f = h_inverse(&spectrum, &s.params, spectrum.grid(), method)?;
            emit_data(&to_csv(&f, "x"), args.io.output.as_deref(), s.json)?;
            Ok(emit_reports(&[], s.json))
        }
        Cmd::Convolve(args) => {
            let s = settings(&args.io.common)?;
            let f = s.function(&args.io.input)?;
            let g = s.function(&args.input2)?;
            let conv = match args.method {
                Method::Direct => convolve_direct(&f, &g, &s.params)?,
                Method::Spectral => convolve_spectral(&f, &g, &s.params)?,
                _ => return Err(Usage("convolve takes --method direct or spectral".into())),
            };
            emit_data(&to_csv(&conv, "x"), args.io.output.as_deref(), s.json)?;
            let mut reports = vec![factorization_check(&f, &g, &s.params, tolerance(&s, "factorization"))?];
            let h = args.input3.as_deref().map(|p| s.function(p)).transpose()?;
            if let Some(exps) = exponents(&args.exps, h.is_some())? {
                reports.push(match &h {
                    Some(h) => young_trilinear_report(&conv, &f, &g, h, &exps, &s.params)?,
                    None => young_conv_report(&conv, &f, &g, &exps, &s.params)?,
                });
            }
            Ok(emit_reports(&reports, s.json))
        }
        Cmd::Power(args) => {
            let s = settings(&args.io.common)?;
            let f = s.function(&args.io.input)?;
            let fk = conv_power(&f, args.k, &s.params)?;
            emit_data(&to_csv(&fk, "x"), args.io.output.as_deref(), s.json)?;
            Ok(emit_reports(&[], s.json))
        }
        Cmd::Radius(args) => {
            let s = settings(&args.io.common)?;
            let f = s.function(&args.io.input)?;
            let trace = spectral_radius_trace(&f, &s.params, args.kmax)?;
            let mut table = String::from("k,root,outside_mass\n");
            for (k, (r, m)) in trace.roots.iter().zip(&trace.outside_mass).enumerate() {
                table.push_str(&format!("{},{r:.16e},{m:.16e}\n", k + 1));
            }
            emit_data(&table, args.io.output.as_deref(), s.json)?;
            let lowest = trace.roots.iter().copied().fold(f64::INFINITY, f64::min);
            let report = VerificationReport::lower_bound("radius-one-sided", lowest, trace.gelfand_value, 1e-4)
                .with_diagnostic("gelfand", trace.gelfand_value)
                .with_diagnostic("relative_gap_kmax", trace.relative_gap());
            Ok(emit_reports(&[report], s.json))
        }
        Cmd::WienerLevy(args) => {
            let s = settings(&args.common)?;
            let g = s.function(&args.input)?;
            let eta = wiener_levy_eta(&g, &s.params)?;
            emit_data(&to_csv(&eta.function, "x"), args.output.as_deref(), s.json)?;
            let report = eta_identity_check(&g, &eta.function, &s.params, tolerance(&s, "wiener-levy"))?
                .with_diagnostic("min_abs", eta.certificate.min_abs)
                .with_diagnostic("conditioning", eta.conditioning());
            Ok(emit_reports(&[report], s.json))
        }
        Cmd::SolveFredholm(args) => {
            let s = settings(&args.io.common)?;
            let g = s.function(&args.io.input)?;
            let k = s.function(&args.input2)?;
            let prob = FredholmProblem::new(g, k, s.params)?;
            let sol = solve_fredholm(&prob)?;
            emit_data(&to_csv(&sol.f, "x"), args.io.output.as_deref(), s.json)?;
            let reports = [
                fredholm_residual_report(&prob, &sol.f, tolerance(&s, "fredholm-residual"))?,
                fredholm_bound_report(&prob, &sol)?,
            ];
            Ok(emit_reports(&reports, s.json))
        }
        Cmd::SolveHeat(args) => {
            let s = settings(&args.io.common)?;
            let phi = s.function(&args.io.input)?;
            let prob = HeatProblem::new(args.diffusion, args.time, phi, s.params)?;
            let u = match args.method {
                Method::Spectral => solve_heat_spectral(&prob)?,
                Method::Direct => solve_heat_convolution(&prob)?,
                _ => return Err(Usage("solve-heat takes --method spectral or direct".into())),
            };
            emit_data(&to_csv(&u, "x"), args.io.output.as_deref(), s.json)?;
            let mut reports = Vec::new();
            if let Some(e) = exponents(&args.exps, false)? {
                reports.push(heat_estimate_report(&prob, e.p, e.q, e.r)?);
            }
            Ok(emit_reports(&reports, s.json))
        }
        Cmd::Verify(args) => {
            let s = settings(&args.common)?;
            let seed = args.seed.or(s.config.seed).unwrap_or(0);
            let mut cfg = VerifyConfig::new(s.params, s.grid_or_default()?, seed);
            cfg.count = args.count;
            cfg.tolerances = s.config.tolerances.clone();
            let reports = run_suite(args.suite.into(), &cfg)?;
            let code = emit_reports(&reports, s.json);
            if !s.json {
                let failed = reports.iter().filter(|r| !r.pass).count();
                eprintln!("{} checks, {failed} failed", reports.len());
            }
            Ok(code)
        }
        Cmd::Bench(args) => {
            let s = settings(&args.common)?;
            let sizes = match args.sizes {
                Some(list) => parse_sizes(&list)?,
                None => DEFAULT_SIZES.to_vec(),
            };
            let half_width = s.grid.map(|g| g.half_width()).unwrap_or(20.0);
            let rows = bench(&s.params, half_width, &sizes, REPEATS)?;
            emit_data(&bench_csv(&rows), args.output.as_deref(), s.json)?;
            let tol = tolerance(&s, "cross-method");
            let reports: Vec<_> = rows
                .iter()
                .map(|r| VerificationReport::discrepancy(format!("bench(N={})", r.n), r.max_discrepancy, tol))
                .collect();
            Ok(emit_reports(&reports, s.json))
        }
    }
}

fn parse_sizes(list: &str) -> CliResult<Vec<usize>> {
    list.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Usage(format!("--sizes: `{t}` is not a node count"))))
        .collect()
}

fn tolerance(s: &Settings, name: &str) -> f64 {
    s.config.tolerance(name).expect("tolerance names are fixed in code")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

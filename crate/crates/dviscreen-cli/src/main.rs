//! Command-line front end: generate datasets, train at a single parameter
//! value, run screened regularization paths, compare rules, and verify
//! screening safety against high-accuracy reference solves.

use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dviscreen::dataio::{
    gen_regression, gen_toy_gaussian, read_csv, read_libsvm, scale_features, write_libsvm,
    LabelColumn, Preset,
};
use dviscreen::problem::{build_problem, Instance, Loss, ProblemData};
use dviscreen::runner::{
    compare_methods, emit_compare, emit_report, linear_grid, log_grid, render_compare,
    render_report, run_path, run_path_with_baseline, Method, PathGrid, ReportFormat, RunOptions,
};
use dviscreen::solver::{kkt_partition, primal_from_dual, solve_dual, FixedAssignments};

#[derive(Parser)]
#[command(
    name = "dviscreen",
    about = "Safe screening for SVM and least-absolute-deviations regularization paths",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic dataset and write it in LIBSVM format.
    GenData(GenDataArgs),
    /// Solve at a single parameter value and report the solution.
    Train(TrainArgs),
    /// Run a screened regularization path and emit a report.
    Path(PathArgs),
    /// Run several screening methods on the same data and grid.
    Compare(CompareArgs),
    /// Run a path with per-point safety verification; exits nonzero on any
    /// violation.
    Verify(PathArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum LossArg {
    Svm,
    Lad,
}

impl From<LossArg> for Loss {
    fn from(value: LossArg) -> Self {
        match value {
            LossArg::Svm => Loss::Hinge,
            LossArg::Lad => Loss::Absolute,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    None,
    DviDual,
    DviPrimal,
    Ssnsv,
    Essnsv,
}

impl From<MethodArg> for Method {
    fn from(value: MethodArg) -> Self {
        match value {
            MethodArg::None => Method::None,
            MethodArg::DviDual => Method::DviDual,
            MethodArg::DviPrimal => Method::DviPrimal,
            MethodArg::Ssnsv => Method::Ssnsv,
            MethodArg::Essnsv => Method::Essnsv,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

impl From<FormatArg> for ReportFormat {
    fn from(value: FormatArg) -> Self {
        match value {
            FormatArg::Json => ReportFormat::Json,
            FormatArg::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Args)]
struct DataArgs {
    /// Dataset file: `.csv` is read as CSV, anything else as LIBSVM text.
    #[arg(long, conflicts_with = "preset")]
    data: Option<PathBuf>,
    /// Built-in preset: toy1 | toy2 | toy3 | reg.
    #[arg(long)]
    preset: Option<String>,
    /// Loss to fit. Defaults to svm, or to the preset's own loss.
    #[arg(long)]
    loss: Option<LossArg>,
    /// Seed for preset generation.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Scale each feature into [-1, 1] by its max absolute value.
    #[arg(long)]
    scale_features: bool,
    /// CSV files: skip the first row.
    #[arg(long)]
    header: bool,
    /// CSV files: zero-based label column (default: last column).
    #[arg(long)]
    label_col: Option<usize>,
}

impl DataArgs {
    fn load(&self) -> Result<(ProblemData, String), String> {
        let (instances, loss, name) = if let Some(path) = &self.data {
            let instances = if path.extension().is_some_and(|e| e == "csv") {
                let col = self
                    .label_col
                    .map(LabelColumn::Index)
                    .unwrap_or(LabelColumn::Last);
                read_csv(path, col, self.header).map_err(|e| e.to_string())?
            } else {
                read_libsvm(path).map_err(|e| e.to_string())?
            };
            let loss = self.loss.map(Loss::from).unwrap_or(Loss::Hinge);
            (instances, loss, path.display().to_string())
        } else if let Some(preset) = &self.preset {
            let preset = Preset::from_str(preset).map_err(|e| e.to_string())?;
            let loss = self.loss.map(Loss::from).unwrap_or(preset.default_loss());
            (preset.generate(self.seed), loss, preset.name().to_string())
        } else {
            return Err("one of --data or --preset is required".into());
        };
        let instances = if self.scale_features {
            scale_features(&instances)
        } else {
            instances
        };
        let problem = build_problem(&instances, loss).map_err(|e| e.to_string())?;
        Ok((problem, name))
    }
}

#[derive(Args)]
struct GridArgs {
    /// Smallest parameter value of the log grid.
    #[arg(long, default_value_t = 1e-2)]
    cmin: f64,
    /// Largest parameter value of the log grid.
    #[arg(long, default_value_t = 10.0)]
    cmax: f64,
    /// Number of grid points, equally spaced in log scale.
    #[arg(long, default_value_t = 100)]
    k: usize,
    /// Explicit comma-separated grid values (overrides --cmin/--cmax/--k).
    #[arg(long)]
    grid: Option<String>,
    /// Linear instead of logarithmic spacing for --cmin/--cmax/--k.
    #[arg(long)]
    linear: bool,
}

impl GridArgs {
    fn build(&self) -> Result<PathGrid, String> {
        if let Some(list) = &self.grid {
            let values: Result<Vec<f64>, _> =
                list.split(',').map(|s| s.trim().parse::<f64>()).collect();
            let values = values.map_err(|e| format!("bad --grid value: {e}"))?;
            PathGrid::explicit(values).map_err(|e| e.to_string())
        } else if self.linear {
            linear_grid(self.cmin, self.cmax, self.k).map_err(|e| e.to_string())
        } else {
            log_grid(self.cmin, self.cmax, self.k).map_err(|e| e.to_string())
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format.
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
}

#[derive(Args)]
struct GenDataArgs {
    /// Preset to generate: toy1 | toy2 | toy3 | reg, or "custom".
    #[arg(long, default_value = "toy1")]
    preset: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output path (LIBSVM text format).
    #[arg(long)]
    out: PathBuf,
    /// Custom Gaussian preset: positive-class mean (both coordinates).
    #[arg(long)]
    mu_pos: Option<f64>,
    /// Custom Gaussian preset: negative-class mean (both coordinates).
    #[arg(long)]
    mu_neg: Option<f64>,
    #[arg(long, default_value_t = 0.75)]
    sigma: f64,
    #[arg(long, default_value_t = 1000)]
    n_per_class: usize,
    /// Custom regression preset: number of instances.
    #[arg(long)]
    l: Option<usize>,
    /// Custom regression preset: feature dimension.
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 0.1)]
    noise: f64,
    #[arg(long, default_value_t = 0.1)]
    outliers: f64,
}

#[derive(Args)]
struct TrainArgs {
    #[command(flatten)]
    data: DataArgs,
    /// Regularization parameter.
    #[arg(long)]
    c: f64,
    /// Solver tolerance (max projected-gradient violation).
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct PathArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Screening method.
    #[arg(long, value_enum, default_value_t = MethodArg::DviPrimal)]
    method: MethodArg,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Also verify every pin against an unscreened 1e-10 reference solve.
    #[arg(long)]
    verify: bool,
    /// Also run the no-screening baseline and report the speedup.
    #[arg(long)]
    baseline: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    data: DataArgs,
    #[command(flatten)]
    grid: GridArgs,
    /// Comma-separated method list.
    #[arg(long, default_value = "ssnsv,essnsv,dvi-primal")]
    methods: String,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    #[command(flatten)]
    output: OutputArgs,
}

fn gen_data(args: &GenDataArgs) -> Result<(), String> {
    let instances: Vec<Instance> = match (args.preset.as_str(), args.mu_pos, args.l) {
        ("custom", Some(mu_pos), _) => {
            let mu_neg = args.mu_neg.unwrap_or(-mu_pos);
            gen_toy_gaussian(mu_pos, mu_neg, args.sigma, args.n_per_class, args.seed)
        }
        ("custom", None, Some(l)) => {
            let data = gen_regression(l, args.n, args.noise, args.outliers, args.seed);
            println!("w_true = {:?}", data.w_true);
            data.instances
        }
        ("custom", None, None) => {
            return Err("custom preset needs --mu-pos (classification) or --l (regression)".into())
        }
        (name, _, _) => {
            let preset = Preset::from_str(name).map_err(|e| e.to_string())?;
            if preset == Preset::Reg {
                let data = gen_regression(2000, 10, 0.1, 0.1, args.seed);
                println!("w_true = {:?}", data.w_true);
                data.instances
            } else {
                preset.generate(args.seed)
            }
        }
    };
    write_libsvm(&instances, &args.out).map_err(|e| e.to_string())?;
    println!(
        "wrote {} instances ({} features) to {}",
        instances.len(),
        instances.first().map_or(0, |i| i.features.len()),
        args.out.display()
    );
    Ok(())
}

fn train(args: &TrainArgs) -> Result<(), String> {
    let (problem, name) = args.data.load()?;
    let fixed = FixedAssignments::none(problem.len());
    let sol =
        solve_dual(&problem, args.c, None, &fixed, args.tol, 200_000).map_err(|e| e.to_string())?;
    let primal = primal_from_dual(&problem, &sol);
    let part = kkt_partition(&problem, &primal, 1e-6);
    let report = serde_json::json!({
        "dataset": name,
        "loss": problem.loss().name(),
        "c": args.c,
        "converged": sol.converged,
        "iterations": sol.iterations,
        "dual_objective": sol.objective,
        "max_kkt_violation": sol.max_kkt_violation,
        "w": primal.w,
        "partition": { "r": part.r.len(), "e": part.e.len(), "l": part.l.len() },
    });
    let text = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    match &args.output.out {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string())?,
        None => println!("{text}"),
    }
    if !sol.converged {
        return Err(format!(
            "solver did not converge (violation {:.3e})",
            sol.max_kkt_violation
        ));
    }
    Ok(())
}

fn path(args: &PathArgs, force_verify: bool) -> Result<usize, String> {
    let (problem, name) = args.data.load()?;
    let grid = args.grid.build()?;
    let opts = RunOptions {
        tol: args.tol,
        verify: args.verify || force_verify,
        ..Default::default()
    };
    let method = Method::from(args.method);
    let report = if args.baseline {
        run_path_with_baseline(&problem, &grid, method, &opts)
    } else {
        run_path(&problem, &grid, method, &opts)
    }
    .map_err(|e| e.to_string())?;
    let violations = report.totals.safety_violations;
    match &args.output.out {
        Some(out) => {
            emit_report(&report, args.output.format.into(), out).map_err(|e| e.to_string())?;
            println!(
                "{name}: {} points, total {:.3}s, violations {violations}{}",
                report.points.len(),
                report.totals.total_time_s,
                report
                    .totals
                    .speedup
                    .map(|s| format!(", speedup {s:.2}x"))
                    .unwrap_or_default()
            );
        }
        None => {
            let text =
                render_report(&report, args.output.format.into()).map_err(|e| e.to_string())?;
            println!("{text}");
        }
    }
    Ok(violations)
}

fn compare(args: &CompareArgs) -> Result<(), String> {
    let (problem, name) = args.data.load()?;
    let grid = args.grid.build()?;
    let methods: Result<Vec<Method>, _> = args
        .methods
        .split(',')
        .map(|s| Method::from_str(s.trim()))
        .collect();
    let methods = methods.map_err(|e| e.to_string())?;
    let opts = RunOptions {
        tol: args.tol,
        ..Default::default()
    };
    let report = compare_methods(&problem, &grid, &methods, &opts).map_err(|e| e.to_string())?;
    match &args.output.out {
        Some(out) => {
            emit_compare(&report, args.output.format.into(), out).map_err(|e| e.to_string())?;
            println!(
                "{name}: wrote comparison of {} methods",
                report.columns.len()
            );
        }
        None => {
            let text =
                render_compare(&report, args.output.format.into()).map_err(|e| e.to_string())?;
            println!("{text}");
        }
    }
    if let Some(dominates) = report.essnsv_dominates_ssnsv {
        println!("essnsv screened set contains ssnsv's at every point: {dominates}");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::GenData(args) => gen_data(args).map(|()| 0),
        Command::Train(args) => train(args).map(|()| 0),
        Command::Path(args) => {
            path(args, false).map(|violations| if violations > 0 { 2 } else { 0 })
        }
        Command::Verify(args) => path(args, true).map(|violations| {
            if violations > 0 {
                eprintln!("SAFETY VIOLATIONS: {violations}");
                2
            } else {
                println!("safety verified: 0 violations");
                0
            }
        }),
        Command::Compare(args) => compare(args).map(|()| 0),
    };
    match outcome {
        Ok(0) => ExitCode::SUCCESS,
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

//! The `perchopt` command line.
//!
//! Every subcommand builds an [`EpoConfig`] from the shared optimizer flags,
//! hands it to the library and prints a plain-text report. Nothing
//! time-dependent goes to stdout, so a run with `--seed` is byte-for-byte
//! repeatable.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;

use crate::constrained::{
    gear_train_exhaustive_oracle, ProblemKind, ProblemOptions, TrussParams, DEFAULT_PENALTY_BETA,
    DEFAULT_PENALTY_RHO,
};
use crate::epo::{EpoConfig, EtaSchedule, PerturbCenter, PerturbDist, ShrinkMode};
use crate::error::{Error, Result};
use crate::harness::{
    convergence_probability_study, eta_sweep, export_results, fmt_f64, output_file_name,
    run_experiment, surface_grid, write_surface_csv, write_sweep_csv, write_traces, Experiment,
    ExperimentPlan, ExportFormat, StudyPlan,
};
use crate::objectives::{Benchmark, BenchmarkObjective, GriewankForm};

#[derive(Debug, Parser)]
#[command(
    name = "perchopt",
    version,
    args_override_self = true,
    about = "Eagle perching optimizer and experiment harness"
)]
pub struct Cli {
    /// key=value file with flag defaults; flags on the command line win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

const BENCH_BASE: &str = "Unset optimizer flags: 30 particles, 500 iterations, l-scale 500, \
res 0.05, linear eta 0.9 to 0.8, no offset, no elite, shrink every iteration, \
center on the best, uniform steps.";
const SWEEP_BASE: &str = "Unset optimizer flags: as for bench, except l-scale 100.";
const STUDY_BASE: &str = "Unset optimizer flags: as for bench, except 5 particles, \
gaussian steps and scale offset 0.5. --iterations is ignored; each t sets the run length.";

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Repeated runs on a benchmark function.
    #[command(after_help = BENCH_BASE)]
    Bench(BenchArgs),
    /// Repeated runs on a constrained design problem.
    #[command(after_help = BENCH_BASE)]
    Constrained(ConstrainedArgs),
    /// Compare eta schedules by their median convergence traces.
    #[command(after_help = SWEEP_BASE)]
    SweepEta(SweepArgs),
    /// Fraction of runs ending near the known minimizer, per run length.
    #[command(after_help = STUDY_BASE)]
    ConvergeStudy(StudyArgs),
    /// Exact optimum by exhaustive enumeration.
    Oracle { problem: String },
    /// Registered benchmark functions and constrained problems.
    List,
    /// Objective values on a regular 2-D lattice, as CSV.
    Surface(SurfaceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EtaKind {
    Derived,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShrinkArg {
    EveryIteration,
    OnImprovement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CenterArg {
    Best,
    Own,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistArg {
    Uniform,
    Gaussian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

/// Optimizer flags. Unset flags fall back to the subcommand's base setting.
#[derive(Debug, Clone, Default, Args)]
pub struct EpoArgs {
    /// Flock size.
    #[arg(long)]
    pub particles: Option<usize>,
    /// Iterations per run.
    #[arg(long)]
    pub iterations: Option<usize>,
    /// Initial sampling radius.
    #[arg(long = "l-scale")]
    pub l_scale: Option<f64>,
    /// Final radius targeted by the derived schedule.
    #[arg(long)]
    pub res: Option<f64>,
    /// Eta schedule.
    #[arg(long, value_enum)]
    pub eta: Option<EtaKind>,
    /// Start of the linear ramp.
    #[arg(long)]
    pub eta_max: Option<f64>,
    /// End of the linear ramp.
    #[arg(long)]
    pub eta_min: Option<f64>,
    /// Constant added to the radius after every shrink.
    #[arg(long)]
    pub scale_offset: Option<f64>,
    /// Elite particles averaged per iteration, 0 for none.
    #[arg(long)]
    pub elite: Option<usize>,
    #[arg(long, value_enum)]
    pub shrink: Option<ShrinkArg>,
    #[arg(long, value_enum)]
    pub center: Option<CenterArg>,
    #[arg(long, value_enum)]
    pub dist: Option<DistArg>,
    /// Base seed; drawn from system entropy and printed when absent.
    #[arg(long)]
    pub seed: Option<u64>,
}

impl EpoArgs {
    /// Overlays the flags that were given on `base`.
    pub fn apply(&self, base: EpoConfig) -> Result<EpoConfig> {
        let mut cfg = base;
        if let Some(v) = self.particles {
            cfg.particles = v;
        }
        if let Some(v) = self.iterations {
            cfg.iterations = v;
        }
        if let Some(v) = self.l_scale {
            cfg.l_scale0 = v;
        }
        if let Some(v) = self.res {
            cfg.res = v;
        }
        let (cur_max, cur_min) = match cfg.eta_schedule {
            EtaSchedule::Linear { eta_max, eta_min } => (eta_max, eta_min),
            EtaSchedule::Derived => (0.9, 0.8),
        };
        let linear = EtaSchedule::Linear {
            eta_max: self.eta_max.unwrap_or(cur_max),
            eta_min: self.eta_min.unwrap_or(cur_min),
        };
        match self.eta {
            Some(EtaKind::Derived) => {
                if self.eta_max.is_some() || self.eta_min.is_some() {
                    return Err(Error::InvalidConfig(
                        "--eta-max/--eta-min only apply to --eta linear".into(),
                    ));
                }
                cfg.eta_schedule = EtaSchedule::Derived;
            }
            Some(EtaKind::Linear) => cfg.eta_schedule = linear,
            None if self.eta_max.is_some() || self.eta_min.is_some() => cfg.eta_schedule = linear,
            None => {}
        }
        if let Some(v) = self.scale_offset {
            cfg.scale_offset = v;
        }
        if let Some(v) = self.elite {
            cfg.elite_count = v;
        }
        if let Some(v) = self.shrink {
            cfg.shrink_mode = match v {
                ShrinkArg::EveryIteration => ShrinkMode::EveryIteration,
                ShrinkArg::OnImprovement => ShrinkMode::OnImprovement,
            };
        }
        if let Some(v) = self.center {
            cfg.perturb_center = match v {
                CenterArg::Best => PerturbCenter::Best,
                CenterArg::Own => PerturbCenter::Own,
            };
        }
        if let Some(v) = self.dist {
            cfg.perturb_dist = match v {
                DistArg::Uniform => PerturbDist::UniformSymmetric,
                DistArg::Gaussian => PerturbDist::Gaussian,
            };
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 30)]
    pub runs: usize,
    /// Worker threads; results do not depend on it.
    #[arg(long, env = "PERCHOPT_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Directory for `<problem>_<variant>_<seed>.<format>`.
    #[arg(long, value_name = "DIR")]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Also write one `t, y_best, l_scale` file per run (needs --output).
    #[arg(long)]
    pub traces: bool,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Benchmark name, e.g. F1 or g3.
    pub name: String,
    /// Dimension [default: the function's own].
    #[arg(long)]
    pub dims: Option<usize>,
    /// Use cos(x_i / i) instead of cos(x_i / sqrt(i)) in g6.
    #[arg(long)]
    pub griewank_printed: bool,
    #[command(flatten)]
    pub epo: EpoArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct ConstrainedArgs {
    /// cantilever, three-bar-truss or gear-train.
    pub problem: String,
    #[arg(long, default_value_t = 1.0)]
    pub truss_l: f64,
    #[arg(long, default_value_t = 2.0)]
    pub truss_p: f64,
    #[arg(long, default_value_t = 2.0)]
    pub truss_sigma: f64,
    #[arg(long, default_value_t = DEFAULT_PENALTY_RHO)]
    pub penalty_rho: f64,
    #[arg(long, default_value_t = DEFAULT_PENALTY_BETA)]
    pub penalty_beta: f64,
    #[command(flatten)]
    pub epo: EpoArgs,
    #[command(flatten)]
    pub run: RunArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    pub name: String,
    /// Comma-separated `eta_max:eta_min` pairs or `derived`.
    #[arg(long, default_value = "derived,0.9:0.8,0.9:0.7,0.9:0.6")]
    pub ranges: String,
    #[arg(long, default_value_t = 2)]
    pub dims: usize,
    /// Runs per schedule.
    #[arg(long, default_value_t = 30)]
    pub runs: usize,
    #[arg(long, env = "PERCHOPT_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// CSV file for the side-by-side median traces.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
    /// Optimizer flags; `--l-scale` defaults to 100 here.
    #[command(flatten)]
    pub epo: EpoArgs,
}

#[derive(Debug, Args)]
pub struct StudyArgs {
    pub name: String,
    #[arg(long, default_value_t = 2)]
    pub dims: usize,
    #[arg(long, default_value_t = 0.5)]
    pub delta: f64,
    /// Comma-separated run lengths.
    #[arg(long, default_value = "50,150,500", value_delimiter = ',')]
    pub t_values: Vec<usize>,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long, env = "PERCHOPT_JOBS", default_value_t = 1)]
    pub jobs: usize,
    /// Optimizer flags; the base here is 5 particles, Gaussian steps and a
    /// radius offset of 0.5.
    #[command(flatten)]
    pub epo: EpoArgs,
}

#[derive(Debug, Args)]
pub struct SurfaceArgs {
    pub name: String,
    #[arg(long, default_value_t = 100)]
    pub resolution: usize,
    /// CSV file; stdout when absent.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
    #[arg(long)]
    pub griewank_printed: bool,
}

/// Moves `--config FILE` out of `args` and splices the file's `key=value`
/// lines in as flags right after the subcommand, so explicit flags that come
/// later override them.
pub fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut rest = Vec::with_capacity(args.len());
    let mut path = None;
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        let s = a.to_string_lossy();
        if s == "--config" {
            let p = it
                .next()
                .ok_or_else(|| Error::InvalidConfig("--config needs a file".into()))?;
            path = Some(PathBuf::from(p));
        } else if let Some(p) = s.strip_prefix("--config=") {
            path = Some(PathBuf::from(p));
        } else {
            rest.push(a);
        }
    }
    let Some(path) = path else {
        return Ok(rest);
    };
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    let mut flags = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::InvalidConfig(format!(
                "{}:{}: expected key=value, got `{line}`",
                path.display(),
                n + 1
            ))
        })?;
        let key = key.trim().replace('_', "-");
        match value.trim() {
            "true" => flags.push(OsString::from(format!("--{key}"))),
            "false" => {}
            v => {
                flags.push(OsString::from(format!("--{key}")));
                flags.push(OsString::from(v));
            }
        }
    }
    // program name, subcommand, then the file's flags
    let at = rest.len().min(2);
    rest.splice(at..at, flags);
    Ok(rest)
}

fn resolve_seed(epo: &mut EpoArgs, out: &mut String) {
    if epo.seed.is_none() {
        let seed: u64 = rand::rng().random();
        writeln!(
            out,
            "seed: {seed} (drawn from entropy; pass --seed {seed} to repeat)"
        )
        .unwrap();
        epo.seed = Some(seed);
    }
}

fn parse_ranges(text: &str) -> Result<Vec<EtaSchedule>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            if item.eq_ignore_ascii_case("derived") {
                return Ok(EtaSchedule::Derived);
            }
            let bad = || {
                Error::InvalidConfig(format!(
                    "bad eta range `{item}`, expected eta_max:eta_min or derived"
                ))
            };
            let (hi, lo) = item.split_once(':').ok_or_else(bad)?;
            let eta_max = hi.trim().parse().map_err(|_| bad())?;
            let eta_min = lo.trim().parse().map_err(|_| bad())?;
            Ok(EtaSchedule::Linear { eta_max, eta_min })
        })
        .collect()
}

fn benchmark(name: &str, dims: Option<usize>, printed: bool) -> Result<BenchmarkObjective> {
    let kind: Benchmark = name.parse()?;
    let obj = BenchmarkObjective::new(kind, dims.unwrap_or(kind.default_dims()))?;
    Ok(if printed {
        obj.with_griewank_form(GriewankForm::Printed)
    } else {
        obj
    })
}

fn write_vec(out: &mut String, v: &[f64]) {
    let items: Vec<String> = v.iter().map(|x| fmt_f64(*x)).collect();
    write!(out, "[{}]", items.join(", ")).unwrap();
}

fn experiment_report(exp: &Experiment, out: &mut String) {
    let config = serde_json::to_string(&exp.config).expect("config serializes");
    writeln!(
        out,
        "problem: {}  dims: {}  runs: {}",
        exp.problem,
        exp.dims,
        exp.runs.len()
    )
    .unwrap();
    writeln!(out, "variant: {}", exp.config.variant_label()).unwrap();
    writeln!(out, "config: {config}").unwrap();
    writeln!(out, "run  seed                  evaluations  y_best").unwrap();
    for (i, r) in exp.runs.iter().enumerate() {
        writeln!(
            out,
            "{i:<4} {:<21} {:<12} {}",
            r.seed,
            r.evaluations,
            fmt_f64(r.best.y)
        )
        .unwrap();
    }
    let s = &exp.stats;
    writeln!(
        out,
        "y_best avg {}  std {} (population)",
        fmt_f64(s.y_best_avg),
        fmt_f64(s.y_best_std)
    )
    .unwrap();
    writeln!(
        out,
        "y_best median {}  min {}  max {}",
        fmt_f64(s.y_best_median),
        fmt_f64(s.y_best_min),
        fmt_f64(s.y_best_max)
    )
    .unwrap();
    out.push_str("x_best avg ");
    write_vec(out, &s.x_best_avg);
    out.push_str("\nx_best std ");
    write_vec(out, &s.x_best_std);
    out.push('\n');
}

impl RunArgs {
    fn validate(&self) -> Result<()> {
        if self.traces && self.output.is_none() {
            return Err(Error::InvalidConfig("--traces needs --output DIR".into()));
        }
        Ok(())
    }
}

fn export(exp: &Experiment, run: &RunArgs, out: &mut String) -> Result<()> {
    let Some(dir) = &run.output else {
        return Ok(());
    };
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let format = match run.format {
        FormatArg::Csv => ExportFormat::Csv,
        FormatArg::Json => ExportFormat::Json,
    };
    let path = dir.join(output_file_name(exp, format));
    export_results(exp, format, &path)?;
    writeln!(out, "wrote {}", path.display()).unwrap();
    if run.traces {
        let files = write_traces(exp, &path)?;
        writeln!(out, "wrote {} trace files", files.len()).unwrap();
    }
    Ok(())
}

fn cmd_bench(mut a: BenchArgs, out: &mut String) -> Result<()> {
    let obj = benchmark(&a.name, a.dims, a.griewank_printed)?;
    a.run.validate()?;
    resolve_seed(&mut a.epo, out);
    let cfg = a.epo.apply(EpoConfig::default())?;
    let plan = ExperimentPlan::new(obj.kind().name(), cfg, a.run.runs).with_jobs(a.run.jobs);
    let exp = run_experiment(&plan, &obj.space(), &obj)?;
    experiment_report(&exp, out);
    let opt = obj.known_optimum();
    writeln!(out, "known minimum {}", fmt_f64(opt.value)).unwrap();
    export(&exp, &a.run, out)
}

fn cmd_constrained(mut a: ConstrainedArgs, out: &mut String) -> Result<()> {
    let kind: ProblemKind = a.problem.parse()?;
    a.run.validate()?;
    let truss = TrussParams {
        l: a.truss_l,
        p: a.truss_p,
        sigma: a.truss_sigma,
    };
    if !(truss.l > 0.0 && truss.p > 0.0 && truss.sigma > 0.0) {
        return Err(Error::InvalidConfig(
            "truss constants must be positive".into(),
        ));
    }
    if !(a.penalty_rho > 0.0 && a.penalty_beta >= 1.0) {
        return Err(Error::InvalidConfig(
            "need --penalty-rho > 0 and --penalty-beta >= 1".into(),
        ));
    }
    let problem = kind.build(&ProblemOptions {
        truss,
        penalty_rho: a.penalty_rho,
        penalty_beta: a.penalty_beta,
    });
    resolve_seed(&mut a.epo, out);
    let cfg = a.epo.apply(EpoConfig::default())?;
    let plan = ExperimentPlan::new(kind.name(), cfg, a.run.runs).with_jobs(a.run.jobs);
    let exp = run_experiment(&plan, problem.space(), &problem)?;
    experiment_report(&exp, out);
    writeln!(out, "run  feasible  max_violation  objective  x").unwrap();
    let mut best: Option<(usize, f64)> = None;
    for (i, r) in exp.runs.iter().enumerate() {
        let s = problem.report(&r.best.x);
        write!(
            out,
            "{i:<4} {:<9} {:<14} {:<10} ",
            s.feasible,
            fmt_f64(s.max_violation),
            fmt_f64(s.objective)
        )
        .unwrap();
        write_vec(out, &s.x);
        out.push('\n');
        if s.feasible && best.is_none_or(|(_, f)| s.objective < f) {
            best = Some((i, s.objective));
        }
    }
    match best {
        Some((i, f)) => writeln!(out, "best feasible: run {i}, f = {}", fmt_f64(f)).unwrap(),
        None => writeln!(out, "best feasible: none").unwrap(),
    }
    export(&exp, &a.run, out)
}

fn cmd_sweep(mut a: SweepArgs, out: &mut String) -> Result<()> {
    let obj = benchmark(&a.name, Some(a.dims), false)?;
    let schedules = parse_ranges(&a.ranges)?;
    resolve_seed(&mut a.epo, out);
    let base = EpoConfig {
        l_scale0: 100.0,
        ..EpoConfig::default()
    };
    // the schedule itself comes from --ranges
    let cfg = a.epo.apply(base)?;
    let plan = ExperimentPlan::new(obj.kind().name(), cfg, a.runs).with_jobs(a.jobs);
    let entries = eta_sweep(&plan, &obj.space(), &obj, &schedules);
    writeln!(
        out,
        "problem: {}  dims: {}  runs per schedule: {}  l_scale0: {}  iterations: {}",
        obj.kind().name(),
        a.dims,
        a.runs,
        plan.config.l_scale0,
        plan.config.iterations
    )
    .unwrap();
    let reference = entries
        .first()
        .and_then(|e| e.median_trace())
        .and_then(|t| t.last().copied());
    writeln!(out, "schedule      final median              final mean                t to reach first schedule's final median").unwrap();
    for e in &entries {
        match (&e.result, e.median_trace(), e.mean_trace()) {
            (Ok(_), Some(med), Some(mean)) => {
                let reach = reference
                    .and_then(|lvl| e.iterations_to_reach(lvl))
                    .map_or("-".to_string(), |t| t.to_string());
                writeln!(
                    out,
                    "{:<13} {:<25} {:<25} {reach}",
                    e.label(),
                    fmt_f64(*med.last().unwrap()),
                    fmt_f64(*mean.last().unwrap())
                )
                .unwrap();
            }
            (Err(err), _, _) => writeln!(out, "{:<13} error: {err}", e.label()).unwrap(),
            _ => writeln!(out, "{:<13} no data", e.label()).unwrap(),
        }
    }
    if let Some(path) = &a.output {
        write_sweep_csv(&entries, path)?;
        writeln!(out, "wrote {}", path.display()).unwrap();
    }
    Ok(())
}

fn cmd_study(mut a: StudyArgs, out: &mut String) -> Result<()> {
    let obj = benchmark(&a.name, Some(a.dims), false)?;
    resolve_seed(&mut a.epo, out);
    let preset = StudyPlan::proof_setting();
    let config = a.epo.apply(preset.config)?;
    let plan = StudyPlan {
        delta: a.delta,
        t_values: a.t_values.clone(),
        trials: a.trials,
        config,
        jobs: a.jobs,
    };
    let opt = obj.known_optimum();
    let points = convergence_probability_study(
        &plan,
        &obj.space(),
        &obj,
        opt.minimizer.as_deref(),
        obj.kind().name(),
    )?;
    writeln!(
        out,
        "problem: {}  dims: {}  delta: {} (max-norm)  trials: {}",
        obj.kind().name(),
        a.dims,
        fmt_f64(a.delta),
        a.trials
    )
    .unwrap();
    writeln!(
        out,
        "config: {}",
        serde_json::to_string(&plan.config).unwrap()
    )
    .unwrap();
    writeln!(out, "t      successes  rate    std_error").unwrap();
    for p in &points {
        writeln!(
            out,
            "{:<6} {:<10} {:<7.4} {:.4}",
            p.t,
            p.successes,
            p.rate,
            p.std_error()
        )
        .unwrap();
    }
    Ok(())
}

fn cmd_oracle(problem: &str, out: &mut String) -> Result<()> {
    let kind: ProblemKind = problem.parse()?;
    if kind != ProblemKind::GearTrain {
        return Err(Error::InvalidConfig(format!(
            "no exhaustive oracle for `{problem}`; only gear-train has a finite domain"
        )));
    }
    let o = gear_train_exhaustive_oracle();
    writeln!(out, "gear-train exhaustive optimum over [12, 60]^4").unwrap();
    writeln!(out, "f_min = {:.4e} ({})", o.value, fmt_f64(o.value)).unwrap();
    for t in &o.tuples {
        writeln!(
            out,
            "  (x1, x2, x3, x4) = ({}, {}, {}, {})",
            t[0], t[1], t[2], t[3]
        )
        .unwrap();
    }
    Ok(())
}

fn cmd_list(out: &mut String) {
    writeln!(out, "benchmark functions").unwrap();
    writeln!(
        out,
        "name  dims  bounds               f_min                 noisy"
    )
    .unwrap();
    for b in Benchmark::ALL {
        let s = b.spec();
        let bounds = format!("[{}, {}]", s.bounds.0, s.bounds.1);
        writeln!(
            out,
            "{:<5} {:<5} {bounds:<20} {:<21} {}",
            s.name,
            s.default_dims,
            s.f_min,
            if s.deterministic { "no" } else { "yes" },
        )
        .unwrap();
    }
    writeln!(out, "\nconstrained problems").unwrap();
    for k in ProblemKind::ALL {
        let p = k.build(&ProblemOptions::default());
        writeln!(
            out,
            "{:<16} dims {}  constraints {}  integer vars {}",
            k.name(),
            p.space().dims(),
            p.constraint_count(),
            p.integer_vars().len()
        )
        .unwrap();
    }
}

fn cmd_surface(a: SurfaceArgs, out: &mut String) -> Result<()> {
    let obj = benchmark(&a.name, Some(2), a.griewank_printed)?.noise_free();
    let grid = surface_grid(&obj.space(), &obj, a.resolution)?;
    match &a.output {
        Some(path) => {
            write_surface_csv(&grid, path)?;
            writeln!(
                out,
                "wrote {} ({} points)",
                path.display(),
                grid.points.len()
            )
            .unwrap();
        }
        None => {
            out.push_str("x0,x1,f\n");
            for p in &grid.points {
                writeln!(out, "{},{},{}", fmt_f64(p[0]), fmt_f64(p[1]), fmt_f64(p[2])).unwrap();
            }
        }
    }
    Ok(())
}

/// Runs a parsed command and returns everything meant for stdout.
pub fn dispatch(cli: Cli) -> Result<String> {
    let mut out = String::new();
    match cli.command {
        Command::Bench(a) => cmd_bench(a, &mut out)?,
        Command::Constrained(a) => cmd_constrained(a, &mut out)?,
        Command::SweepEta(a) => cmd_sweep(a, &mut out)?,
        Command::ConvergeStudy(a) => cmd_study(a, &mut out)?,
        Command::Oracle { problem } => cmd_oracle(&problem, &mut out)?,
        Command::List => cmd_list(&mut out),
        Command::Surface(a) => cmd_surface(a, &mut out)?,
    }
    Ok(out)
}

/// Parses `argv` (program name first), runs it and returns the exit status.
pub fn parse_and_dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args = match expand_config(argv.into_iter().map(Into::into).collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

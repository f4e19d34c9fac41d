//! Exit criteria. Every test prints one `[PASS]`/`[FAIL]` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see them
//! in order.

use std::time::Instant;

use perchopt::constrained::{
    gear_train_exhaustive_oracle, solve, ConstrainedRun, ProblemKind, ProblemOptions,
};
use perchopt::epo::{EpoConfig, EtaSchedule, Optimizer};
use perchopt::harness::{
    convergence_probability_study, eta_sweep, median, run_experiment, Experiment, ExperimentPlan,
    ExperimentStats, StudyPlan,
};
use perchopt::rng::{derive_seed, seeded};
use perchopt::{
    Benchmark, BenchmarkObjective, PerturbCenter, PerturbDist, SearchSpace, ShrinkMode,
};
use rand::Rng;

const BASE_SEED: u64 = 20_240_601;

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get().min(8))
}

fn report(id: &str, pass: bool, detail: String) {
    println!("[{}] {id}: {detail}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "{id} failed: {detail}");
}

fn bench(kind: Benchmark, dims: usize, config: EpoConfig, runs: usize) -> Experiment {
    let obj = BenchmarkObjective::new(kind, dims).unwrap();
    let plan =
        ExperimentPlan::new(kind.name(), config.with_seed(BASE_SEED), runs).with_jobs(jobs());
    run_experiment(&plan, &obj.space(), &obj).unwrap()
}

fn constrained_runs(kind: ProblemKind, runs: usize) -> Vec<ConstrainedRun> {
    let problem = kind.build(&ProblemOptions::default());
    (0..runs)
        .map(|i| {
            let cfg = EpoConfig::default().with_seed(derive_seed(BASE_SEED, i as u64));
            solve(&problem, &cfg).unwrap()
        })
        .collect()
}

#[test]
fn criterion_1_unimodal_quality() {
    let start = Instant::now();
    let exp = bench(Benchmark::F1, 30, EpoConfig::default(), 30);
    let secs = start.elapsed().as_secs_f64();
    let finals = exp.final_values();
    let med = median(&finals);
    let best = exp.stats.y_best_min;
    report(
        "criterion 1 (F1 dim 30, 30 runs)",
        med <= 1e-12 && best <= 1e-20 && secs <= 60.0,
        format!("median {med:.3e} (<= 1e-12), best {best:.3e} (<= 1e-20), {secs:.1}s (<= 60s)"),
    );
}

#[test]
fn criterion_2_g1_exactness() {
    let exp = bench(Benchmark::G1, 4, EpoConfig::default(), 30);
    let avg = exp.stats.y_best_avg;
    let worst_coord = exp
        .runs
        .iter()
        .flat_map(|r| r.best.x.iter())
        .fold(0.0_f64, |m, v| m.max((v + 2.0).abs()));
    report(
        "criterion 2 (g1 dim 4, 30 runs)",
        (2.0..=2.0 + 1e-6).contains(&avg) && worst_coord <= 1e-3,
        format!("avg {avg:.12} in [2, 2+1e-6], max |x_j + 2| {worst_coord:.3e} (<= 1e-3)"),
    );
}

#[test]
fn criterion_3_elite_degradation() {
    let start = Instant::now();
    let n2 = bench(Benchmark::G3, 4, EpoConfig::default().with_elite(2), 30);
    let n10 = bench(Benchmark::G3, 4, EpoConfig::default().with_elite(10), 30);
    let secs = start.elapsed().as_secs_f64();
    let (a2, a10) = (n2.stats.y_best_avg, n10.stats.y_best_avg);
    let pass = a2 * 1e6 <= a10 && secs <= 300.0;
    report(
        "criterion 3 (g3 dim 4, elite n=2 vs n=10)",
        pass,
        format!(
            "avg n=2 {a2:.3e}, avg n=10 {a10:.3e}, need >= 6 orders apart, {secs:.1}s (<= 300s)"
        ),
    );
}

#[test]
fn criterion_4_ackley_desk_scale() {
    let exp = bench(Benchmark::F10, 2, EpoConfig::default(), 30);
    let med = exp.stats.y_best_median;
    report(
        "criterion 4 (F10 dim 2, 30 runs)",
        med <= 1e-6,
        format!("median {med:.3e} (<= 1e-6)"),
    );
}

#[test]
fn criterion_5_cantilever() {
    let start = Instant::now();
    let runs = constrained_runs(ProblemKind::Cantilever, 10);
    let secs = start.elapsed().as_secs_f64();
    let worst_violation = runs
        .iter()
        .map(|r| r.solution.max_violation)
        .fold(0.0_f64, f64::max);
    let best = runs
        .iter()
        .filter(|r| r.solution.max_violation <= 1e-6)
        .map(|r| r.solution.objective)
        .fold(f64::INFINITY, f64::min);
    report(
        "criterion 5 (cantilever, 10 runs)",
        (13.30..=13.50).contains(&best) && worst_violation <= 1e-6 && secs <= 30.0,
        format!(
            "best feasible f {best:.5} in [13.30, 13.50], worst violation {worst_violation:.2e} (<= 1e-6), {secs:.1}s (<= 30s)"
        ),
    );
}

#[test]
fn criterion_6_three_bar_truss() {
    let runs = constrained_runs(ProblemKind::ThreeBarTruss, 10);
    let best = runs
        .iter()
        .filter(|r| r.solution.feasible)
        .map(|r| r.solution.objective)
        .fold(f64::INFINITY, f64::min);
    report(
        "criterion 6 (three-bar truss, 10 runs)",
        (2.6389..=2.66).contains(&best),
        format!("best feasible f {best:.6} in [2.6389, 2.66]"),
    );
}

#[test]
fn criterion_7_gear_train() {
    let oracle = gear_train_exhaustive_oracle();
    let has_tuple = oracle.tuples.contains(&[49, 19, 16, 43]);
    let runs = constrained_runs(ProblemKind::GearTrain, 10);
    let hits = runs.iter().filter(|r| r.solution.objective <= 1e-8).count();
    report(
        "criterion 7 (gear train oracle + 10 runs)",
        (oracle.value - 2.7009e-12).abs() <= 1e-15 && has_tuple && hits >= 5,
        format!(
            "oracle {:.6e} (2.7009e-12 +- 1e-15) attained by {:?}, runs with f <= 1e-8: {hits}/10 (>= 5)",
            oracle.value, oracle.tuples
        ),
    );
}

#[test]
fn criterion_8_eta_sensitivity() {
    let obj = BenchmarkObjective::new(Benchmark::F1, 2).unwrap();
    let config = EpoConfig {
        l_scale0: 100.0,
        ..EpoConfig::default()
    }
    .with_seed(BASE_SEED);
    let plan = ExperimentPlan::new("F1", config, 30).with_jobs(jobs());
    let entries = eta_sweep(
        &plan,
        &obj.space(),
        &obj,
        &[
            EtaSchedule::Derived,
            EtaSchedule::Linear {
                eta_max: 0.9,
                eta_min: 0.8,
            },
        ],
    );
    let level = *entries[0].median_trace().unwrap().last().unwrap();
    let reached = entries[1].iterations_to_reach(level);
    report(
        "criterion 8 (F1 dim 2, linear 0.9->0.8 vs constant eta)",
        reached.is_some_and(|t| t <= 200),
        format!(
            "constant-eta median at t=500 {level:.3e}, linear reaches it at t={reached:?} (<= 200)"
        ),
    );
}

fn random_config(rng: &mut impl Rng) -> EpoConfig {
    let l_scale0 = rng.random_range(1.0..200.0);
    EpoConfig {
        particles: rng.random_range(1..12),
        iterations: rng.random_range(1..40),
        l_scale0,
        res: l_scale0 * rng.random_range(1e-4..0.9),
        eta_schedule: if rng.random_bool(0.5) {
            EtaSchedule::Derived
        } else {
            let hi = rng.random_range(0.5..0.99);
            EtaSchedule::Linear {
                eta_max: hi,
                eta_min: hi * rng.random_range(0.5..1.0),
            }
        },
        scale_offset: if rng.random_bool(0.5) {
            0.0
        } else {
            rng.random_range(0.0..0.99)
        },
        elite_count: 0,
        shrink_mode: if rng.random_bool(0.5) {
            ShrinkMode::EveryIteration
        } else {
            ShrinkMode::OnImprovement
        },
        perturb_center: if rng.random_bool(0.5) {
            PerturbCenter::Best
        } else {
            PerturbCenter::Own
        },
        perturb_dist: if rng.random_bool(0.5) {
            PerturbDist::UniformSymmetric
        } else {
            PerturbDist::Gaussian
        },
        seed: rng.random(),
    }
}

#[test]
fn criterion_9_property_suites() {
    let mut failures = Vec::new();
    let mut gen = seeded(BASE_SEED);
    let kinds = [
        Benchmark::F1,
        Benchmark::F5,
        Benchmark::F9,
        Benchmark::F10,
        Benchmark::G3,
    ];

    // monotone traces and per-step clamping over 100 random configurations
    for case in 0..100 {
        let mut cfg = random_config(&mut gen);
        cfg.elite_count = gen.random_range(0..=cfg.particles);
        let kind = kinds[case % kinds.len()];
        let obj = BenchmarkObjective::new(kind, gen.random_range(2..6)).unwrap();
        let space = obj.space();
        let mut opt = Optimizer::new(cfg, &space, &obj).unwrap();
        while !opt.is_finished() {
            opt.step().unwrap();
            if !opt.state().positions.iter().all(|p| space.contains(p)) {
                failures.push(format!("clamping broken in case {case}"));
                break;
            }
        }
        let r = opt.into_result();
        if !r.trace.windows(2).all(|w| w[1].y_best <= w[0].y_best) {
            failures.push(format!("trace not monotone in case {case}"));
        }
    }

    // derived schedule lands on res
    let f1 = BenchmarkObjective::new(Benchmark::F1, 3).unwrap();
    for seed in 0..10 {
        let r = perchopt::run(&EpoConfig::derived().with_seed(seed), &f1.space(), &f1).unwrap();
        let l = r.trace.last().unwrap().l_scale;
        if ((l - 0.05) / 0.05).abs() > 1e-9 {
            failures.push(format!("l_scale(t_s) = {l} for seed {seed}"));
        }
    }

    // same seed, same trace; elite_count = 1 matches elite_count = 0
    let g3 = BenchmarkObjective::new(Benchmark::G3, 4).unwrap();
    for seed in 0..5 {
        let cfg = EpoConfig::default().with_iterations(200).with_seed(seed);
        let a = perchopt::run(&cfg, &g3.space(), &g3).unwrap();
        let b = perchopt::run(&cfg, &g3.space(), &g3).unwrap();
        let e = perchopt::run(&cfg.clone().with_elite(1), &g3.space(), &g3).unwrap();
        if a.trace != b.trace || a.best != b.best {
            failures.push(format!("seed {seed} not reproducible"));
        }
        if a.trace != e.trace {
            failures.push(format!("elite_count=1 diverges for seed {seed}"));
        }
    }

    // statistics against a naive two-pass computation
    let exp = bench(
        Benchmark::F9,
        3,
        EpoConfig::default().with_iterations(30),
        7,
    );
    let stats = ExperimentStats::from_runs(&exp.runs);
    let ys: Vec<f64> = exp.runs.iter().map(|r| r.best.y).collect();
    let mean = ys.iter().sum::<f64>() / ys.len() as f64;
    let std = (ys.iter().map(|y| (y - mean).powi(2)).sum::<f64>() / ys.len() as f64).sqrt();
    if (stats.y_best_avg - mean).abs() > 1e-12 * mean.abs().max(1.0)
        || (stats.y_best_std - std).abs() > 1e-12 * std.max(1.0)
    {
        failures.push(format!(
            "stats mismatch: {stats:?} vs mean {mean} std {std}"
        ));
    }

    // empirical convergence on the 2-D sphere
    let sphere = BenchmarkObjective::new(Benchmark::F1, 2).unwrap();
    let space = SearchSpace::uniform(2, -100.0, 100.0).unwrap();
    let plan = StudyPlan {
        jobs: jobs(),
        config: StudyPlan::proof_setting().config.with_seed(BASE_SEED),
        ..StudyPlan::proof_setting()
    };
    let points =
        convergence_probability_study(&plan, &space, &sphere, Some(&[0.0, 0.0]), "F1").unwrap();
    let rates: Vec<f64> = points.iter().map(|p| p.rate).collect();
    if !(rates[2] >= 0.95 && 0.95 >= rates[0]) {
        failures.push(format!(
            "study rates {rates:?} violate rate(500) >= 0.95 >= rate(50)"
        ));
    }
    for w in points.windows(2) {
        if w[1].rate < w[0].rate - 3.0 * w[0].std_error().max(w[1].std_error()) {
            failures.push(format!(
                "study rate dropped from t={} to t={}",
                w[0].t, w[1].t
            ));
        }
    }

    report(
        "criterion 9 (property suites)",
        failures.is_empty(),
        format!(
            "study rates at t=50/150/500: {rates:?}; {} violation(s){}",
            failures.len(),
            if failures.is_empty() {
                String::new()
            } else {
                format!(": {failures:?}")
            }
        ),
    );
}

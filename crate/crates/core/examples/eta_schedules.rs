// Constant (derived) eta against linear ramps on a 2-D sphere.
//
// The derived factor shrinks the radius from `l_scale0` to exactly `res` over
// the run. A linear ramp shrinks faster, which pays off on smooth unimodal
// problems.

use perchopt::epo::{derive_eta, linear_eta};
use perchopt::{run, Benchmark, BenchmarkObjective, EpoConfig, EtaSchedule};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f1 = BenchmarkObjective::new(Benchmark::F1, 2)?;
    let base = EpoConfig {
        l_scale0: 100.0,
        ..EpoConfig::default()
    };

    println!(
        "derived eta     {:.6}",
        derive_eta(base.res, base.l_scale0, base.iterations)?
    );
    println!("linear at t=250 {:.3}", linear_eta(250, 500, 0.9, 0.8)?);

    let schedules = [
        EtaSchedule::Derived,
        EtaSchedule::constant(0.9)?,
        EtaSchedule::linear(0.9, 0.8)?,
        EtaSchedule::linear(0.9, 0.6)?,
    ];
    for schedule in schedules {
        let cfg = base.clone().with_schedule(schedule).with_seed(7);
        let r = run(&cfg, &f1.space(), &f1)?;
        let last = r.trace.last().unwrap();
        println!(
            "{:<10} y_best {:>12.3e}  final l_scale {:.3e}",
            schedule.label(),
            r.best.y,
            last.l_scale
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

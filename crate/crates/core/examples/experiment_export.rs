// Thirty seeded runs on Rastrigin, exported as CSV, JSON and per-run traces.

use perchopt::harness::{
    export_results, output_file_name, read_results_json, run_experiment, write_traces,
    ExperimentPlan, ExperimentStats, ExportFormat,
};
use perchopt::{Benchmark, BenchmarkObjective, EpoConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let f9 = BenchmarkObjective::new(Benchmark::F9, 5)?;
    let plan = ExperimentPlan::new("F9", EpoConfig::default().with_seed(2024), 30).with_jobs(4);
    let exp = run_experiment(&plan, &f9.space(), &f9)?;

    let dir = std::env::temp_dir().join("perchopt-export-example");
    std::fs::create_dir_all(&dir)?;
    for format in [ExportFormat::Csv, ExportFormat::Json] {
        let path = dir.join(output_file_name(&exp, format));
        export_results(&exp, format, &path)?;
        println!("wrote {}", path.display());
    }
    let csv_path = dir.join(output_file_name(&exp, ExportFormat::Csv));
    println!("wrote {} trace files", write_traces(&exp, &csv_path)?.len());

    let back = read_results_json(&dir.join(output_file_name(&exp, ExportFormat::Json)))?;
    assert_eq!(ExperimentStats::from_runs(&back.runs), exp.stats);
    println!(
        "avg {:.4e}  std {:.4e}  median {:.4e}",
        exp.stats.y_best_avg, exp.stats.y_best_std, exp.stats.y_best_median
    );
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}

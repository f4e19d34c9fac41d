use perchopt::harness::{
    export_results, output_file_name, read_results_json, run_experiment, write_trace_csv,
    Experiment, ExperimentPlan, ExperimentStats, ExportFormat,
};
use perchopt::{Benchmark, BenchmarkObjective, EpoConfig};

fn small_experiment(runs: usize) -> Experiment {
    let obj = BenchmarkObjective::new(Benchmark::F10, 2).unwrap();
    let plan = ExperimentPlan::new(
        "F10",
        EpoConfig::default().with_iterations(30).with_seed(4),
        runs,
    );
    run_experiment(&plan, &obj.space(), &obj).unwrap()
}

fn data_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn csv_schema() {
    let exp = small_experiment(2);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(output_file_name(&exp, ExportFormat::Csv));
    assert!(path.ends_with("F10_epo-mod_4.csv"));
    export_results(&exp, ExportFormat::Csv, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# config: "));
    assert!(text.contains("# std: population"));

    let lines = data_lines(&text);
    assert_eq!(
        lines[0],
        "run_id,seed,final_y_best,x_best_0,x_best_1,evaluations,elapsed_s"
    );
    assert_eq!(lines.len(), 3);
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_path(&path)
        .unwrap();
    for (i, rec) in rdr.records().enumerate() {
        let rec = rec.unwrap();
        assert_eq!(rec.len(), 7);
        let run = &exp.runs[i];
        assert_eq!(rec[0].parse::<usize>().unwrap(), i);
        assert_eq!(rec[1].parse::<u64>().unwrap(), run.seed);
        assert_eq!(
            rec[2].parse::<f64>().unwrap().to_bits(),
            run.best.y.to_bits()
        );
        assert_eq!(rec[3].parse::<f64>().unwrap(), run.best.x[0]);
        assert_eq!(rec[5].parse::<u64>().unwrap(), run.evaluations);
    }
}

#[test]
fn empty_experiment_gives_header_only_csv() {
    let exp = Experiment::from_runs("F1", 3, EpoConfig::default(), Vec::new());
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    export_results(&exp, ExportFormat::Csv, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        data_lines(&text),
        ["run_id,seed,final_y_best,x_best_0,x_best_1,x_best_2,evaluations,elapsed_s"]
    );
}

#[test]
fn json_round_trip_reproduces_stats() {
    let exp = small_experiment(6);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join(output_file_name(&exp, ExportFormat::Json));
    export_results(&exp, ExportFormat::Json, &path).unwrap();
    let back = read_results_json(&path).unwrap();
    assert_eq!(back, exp);
    assert_eq!(ExperimentStats::from_runs(&back.runs), exp.stats);
}

#[test]
fn trace_file_schema() {
    let exp = small_experiment(1);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("trace.csv");
    write_trace_csv(&exp.runs[0], &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,y_best,l_scale");
    assert_eq!(lines.len(), 32);
    assert!(lines[1].starts_with("0,"));
}

#[test]
fn io_errors_carry_the_path() {
    let exp = small_experiment(1);
    // a regular file where the directory should be
    let file = tempfile::NamedTempFile::new().unwrap();
    let bad = file.path().join("out.csv");
    let err = export_results(&exp, ExportFormat::Csv, &bad).unwrap_err();
    assert!(err.to_string().contains(bad.to_str().unwrap()), "{err}");
}

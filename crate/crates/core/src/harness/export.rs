use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::experiment::Experiment;
use super::surface::SurfaceGrid;
use super::sweep::SweepEntry;
use crate::epo::RunResult;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExportFormat {
    #[default]
    Csv,
    Json,
}

impl ExportFormat {
    pub fn extension(self) -> &'static str {
        match self {
            ExportFormat::Csv => "csv",
            ExportFormat::Json => "json",
        }
    }
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ExportFormat::Csv),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::InvalidConfig(format!(
                "unknown format `{other}` (expected csv or json)"
            ))),
        }
    }
}

/// Shortest text that parses back to the same `f64`.
pub fn fmt_f64(v: f64) -> String {
    let a = v.abs();
    if v == 0.0 || !v.is_finite() || (1e-4..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

/// `<problem>_<variant>_<baseseed>.<ext>`
pub fn output_file_name(exp: &Experiment, format: ExportFormat) -> String {
    format!(
        "{}_{}_{}.{}",
        exp.problem,
        exp.config.variant_label(),
        exp.config.seed,
        format.extension()
    )
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::io(path, e))
}

fn csv_err(path: &Path) -> impl Fn(csv::Error) -> Error + '_ {
    move |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    }
}

fn config_comment(exp: &Experiment) -> String {
    let config = serde_json::to_string(&exp.config).expect("config serializes");
    format!(
        "# config: problem={} dims={} runs={} {config}\n",
        exp.problem,
        exp.dims,
        exp.runs.len()
    )
}

/// Writes the experiment to `path` in the requested format.
pub fn export_results(exp: &Experiment, format: ExportFormat, path: &Path) -> Result<()> {
    match format {
        ExportFormat::Csv => write_results_csv(exp, path),
        ExportFormat::Json => write_results_json(exp, path),
    }
}

/// One row per run: `run_id, seed, final_y_best, x_best_0.., evaluations,
/// elapsed_s`, after comment lines holding the configuration.
pub fn write_results_csv(exp: &Experiment, path: &Path) -> Result<()> {
    let mut out = create(path)?;
    out.write_all(config_comment(exp).as_bytes())
        .and_then(|_| out.write_all(b"# std: population (divisor N)\n"))
        .map_err(|e| Error::io(path, e))?;
    let mut w = csv::Writer::from_writer(out);
    let err = csv_err(path);
    let mut header = vec![
        "run_id".to_string(),
        "seed".to_string(),
        "final_y_best".to_string(),
    ];
    header.extend((0..exp.dims).map(|j| format!("x_best_{j}")));
    header.push("evaluations".into());
    header.push("elapsed_s".into());
    w.write_record(&header).map_err(&err)?;
    for (i, r) in exp.runs.iter().enumerate() {
        let mut row = vec![i.to_string(), r.seed.to_string(), fmt_f64(r.best.y)];
        row.extend(r.best.x.iter().map(|v| fmt_f64(*v)));
        row.push(r.evaluations.to_string());
        row.push(fmt_f64(r.elapsed));
        w.write_record(&row).map_err(&err)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn write_results_json(exp: &Experiment, path: &Path) -> Result<()> {
    let mut out = create(path)?;
    serde_json::to_writer_pretty(&mut out, exp).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })?;
    out.write_all(b"\n")
        .and_then(|_| out.flush())
        .map_err(|e| Error::io(path, e))
}

pub fn read_results_json(path: &Path) -> Result<Experiment> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_reader(std::io::BufReader::new(file)).map_err(|source| Error::Json {
        path: path.to_path_buf(),
        source,
    })
}

/// `t, y_best, l_scale` for one run.
pub fn write_trace_csv(run: &RunResult, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_writer(create(path)?);
    let err = csv_err(path);
    w.write_record(["t", "y_best", "l_scale"]).map_err(&err)?;
    for p in &run.trace {
        w.write_record([p.t.to_string(), fmt_f64(p.y_best), fmt_f64(p.l_scale)])
            .map_err(&err)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Writes one trace file per run next to `results_path`, named
/// `<stem>_run<i>_trace.csv`, and returns their paths.
pub fn write_traces(exp: &Experiment, results_path: &Path) -> Result<Vec<PathBuf>> {
    let stem = results_path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("results");
    let dir = results_path.parent().unwrap_or(Path::new(""));
    exp.runs
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let p = dir.join(format!("{stem}_run{i}_trace.csv"));
            write_trace_csv(r, &p).map(|_| p)
        })
        .collect()
}

/// Median traces side by side: `t, <label>...`. Failed entries are skipped.
pub fn write_sweep_csv(entries: &[SweepEntry], path: &Path) -> Result<()> {
    let columns: Vec<(String, Vec<f64>)> = entries
        .iter()
        .filter_map(|e| e.median_trace().map(|t| (e.label(), t)))
        .collect();
    let mut w = csv::Writer::from_writer(create(path)?);
    let err = csv_err(path);
    let mut header = vec!["t".to_string()];
    header.extend(columns.iter().map(|(l, _)| format!("median_y_best[{l}]")));
    w.write_record(&header).map_err(&err)?;
    let len = columns.iter().map(|(_, t)| t.len()).max().unwrap_or(0);
    for t in 0..len {
        let mut row = vec![t.to_string()];
        row.extend(
            columns
                .iter()
                .map(|(_, c)| c.get(t).map_or(String::new(), |v| fmt_f64(*v))),
        );
        w.write_record(&row).map_err(&err)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// `x0, x1, f` per lattice node.
pub fn write_surface_csv(grid: &SurfaceGrid, path: &Path) -> Result<()> {
    let mut w = csv::Writer::from_writer(create(path)?);
    let err = csv_err(path);
    w.write_record(["x0", "x1", "f"]).map_err(&err)?;
    for p in &grid.points {
        w.write_record(p.iter().map(|v| fmt_f64(*v)))
            .map_err(&err)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn float_text_round_trips() {
        for v in [
            0.0,
            -0.0,
            1.0,
            0.1,
            1e-45,
            2.70086e-12,
            123456.789,
            1e300,
            f64::MIN_POSITIVE,
            -418.982_887_272_433_8,
        ] {
            let s = fmt_f64(v);
            assert_eq!(s.parse::<f64>().unwrap().to_bits(), v.to_bits(), "{s}");
        }
        assert_eq!(fmt_f64(1e-45), "1e-45");
        assert_eq!(fmt_f64(0.5), "0.5");
    }

    #[test]
    fn format_names() {
        assert_eq!("JSON".parse::<ExportFormat>().unwrap(), ExportFormat::Json);
        assert!("xml".parse::<ExportFormat>().is_err());
    }
}

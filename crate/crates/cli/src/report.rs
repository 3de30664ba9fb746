//! Small reporting helpers shared by the commands.

use anyhow::{Context, Result};
use std::io::Write;

/// Binomial standard error of a rate over n trials.
pub fn std_err(p: f64, n: u64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    (p * (1.0 - p) / n as f64).sqrt()
}

pub fn pct(p: f64) -> String {
    format!("{:.2}%", p * 100.0)
}

/// A rate with its standard error, e.g. `25.10% (±1.37%)`.
pub fn rate_se(p: f64, n: u64) -> String {
    format!("{} (±{})", pct(p), pct(std_err(p, n)))
}

/// CSV sink: a file when `--out` is given, stdout otherwise.
pub fn csv_writer(out: Option<&str>) -> Result<csv::Writer<Box<dyn Write>>> {
    let sink: Box<dyn Write> = match out {
        Some(path) => Box::new(
            std::fs::File::create(path).with_context(|| format!("creating {path}"))?,
        ),
        None => Box::new(std::io::stdout()),
    };
    Ok(csv::Writer::from_writer(sink))
}

pub fn mean_sd(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (0.0, 0.0);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

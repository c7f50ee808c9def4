//! Runtime scaling of [`run_mdc_counted`] on random orientations.

use std::hint::black_box;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mdc::run_mdc_counted;
use crate::path::random_orientation;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sample {
    pub n: usize,
    pub median_nanos: u64,
    pub steps: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingReport {
    /// Sorted by `n`.
    pub samples: Vec<Sample>,
    /// Least-squares slope of log(time) against log(n).
    pub loglog_slope: f64,
    pub r_squared: f64,
    /// Same fit on step counts.
    pub step_slope: f64,
    pub step_r_squared: f64,
    /// max over samples of steps / n.
    pub steps_per_vertex: f64,
}

/// Least-squares line through `(x, y)`; returns `(slope, r_squared)`.
pub fn fit_line(points: &[(f64, f64)]) -> (f64, f64) {
    let len = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / len;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / len;
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let syy: f64 = points.iter().map(|p| (p.1 - mean_y).powi(2)).sum();
    let slope = sxy / sxx;
    let r_squared = if syy == 0.0 {
        1.0
    } else {
        sxy * sxy / (sxx * syy)
    };
    (slope, r_squared)
}

fn loglog(samples: &[Sample], y: impl Fn(&Sample) -> f64) -> (f64, f64) {
    let points: Vec<(f64, f64)> = samples
        .iter()
        .map(|s| ((s.n as f64).ln(), y(s).ln()))
        .collect();
    fit_line(&points)
}

/// Times `run_mdc` on `random_orientation(sizes[i], seed + i)`, taking the
/// median of `repetitions` runs after one discarded warm-up.
pub fn measure_runtime(sizes: &[usize], repetitions: usize, seed: u64) -> Result<ScalingReport> {
    if sizes.len() < 2 {
        return Err(Error::InvalidArgument(
            "need at least two sizes to fit a slope".into(),
        ));
    }
    if let Some(&n) = sizes.iter().find(|&&n| n < 2) {
        return Err(Error::InvalidArgument(format!("size {n} is below 2")));
    }
    if repetitions < 3 {
        return Err(Error::InvalidArgument(format!(
            "repetitions must be at least 3, got {repetitions}"
        )));
    }
    let mut samples = Vec::with_capacity(sizes.len());
    for (i, &n) in sizes.iter().enumerate() {
        let path = random_orientation(n, seed + i as u64)?;
        let (_, steps) = run_mdc_counted(black_box(&path));
        let mut times: Vec<Duration> = (0..repetitions)
            .map(|_| {
                let start = Instant::now();
                black_box(run_mdc_counted(black_box(&path)));
                start.elapsed()
            })
            .collect();
        times.sort();
        let median = times[times.len() / 2];
        samples.push(Sample {
            n,
            median_nanos: (median.as_nanos() as u64).max(1),
            steps,
        });
    }
    samples.sort_by_key(|s| s.n);
    let (loglog_slope, r_squared) = loglog(&samples, |s| s.median_nanos as f64);
    let (step_slope, step_r_squared) = loglog(&samples, |s| s.steps as f64);
    let steps_per_vertex = samples
        .iter()
        .map(|s| s.steps as f64 / s.n as f64)
        .fold(0.0, f64::max);
    Ok(ScalingReport {
        samples,
        loglog_slope,
        r_squared,
        step_slope,
        step_r_squared,
        steps_per_vertex,
    })
}

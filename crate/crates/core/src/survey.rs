//! Minimum dominator chromatic number over all orientations of `P_n`.

use std::num::NonZeroUsize;
use std::thread;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mdc::run_mdc;
use crate::oracle::{oracle_min_coloring, DEFAULT_MAX_N};
use crate::path::{Direction, OrientedPath};

/// Largest `n` enumerated without an explicit override (2^25 orientations).
pub const ENUMERATION_GUARD: usize = 26;

/// Largest `n` surveyed with the exact oracle as evaluator.
pub const ORACLE_SURVEY_MAX_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Fast,
    Oracle,
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Method::Fast),
            "oracle" => Ok(Method::Oracle),
            other => Err(Error::InvalidArgument(format!(
                "unknown method {other:?} (expected fast or oracle)"
            ))),
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Fast => "fast",
            Method::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyResult {
    pub n: usize,
    pub min_colors: usize,
    /// First minimizing orientation in lexicographic order.
    pub witness: OrientedPath,
    pub formula_value: Option<usize>,
    /// Compared against `formula_value`, or against the exhaustively
    /// derived constants when `n < 4`.
    pub agrees: bool,
    pub method: Method,
}

/// Closed-form minimum over all orientations, defined for `n >= 4`.
pub fn closed_form_minimum(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::FormulaUndefined(n));
    }
    if n == 6 {
        return Ok(3);
    }
    let k = n / 4;
    Ok(match n % 4 {
        0 | 1 => k + 2,
        _ => k + 3,
    })
}

/// The formula for `n >= 4`; below that, the exhaustively computed minima
/// `1, 2, 2`.
pub fn reference_value(n: usize) -> Result<usize> {
    match n {
        0 => Err(Error::EmptyPath),
        1 => Ok(1),
        2 | 3 => Ok(2),
        _ => closed_form_minimum(n),
    }
}

/// Orientation with index `index` in lexicographic flag order (`F < B`).
pub fn orientation_at(n: usize, index: u64) -> OrientedPath {
    let edges = n - 1;
    let arcs = (0..edges)
        .map(|i| {
            if index >> (edges - 1 - i) & 1 == 0 {
                Direction::Forward
            } else {
                Direction::Backward
            }
        })
        .collect();
    OrientedPath::from_arcs(arcs)
}

fn orientation_count(n: usize) -> u64 {
    1u64 << (n - 1)
}

/// All `2^(n-1)` orientations of `P_n` in lexicographic order. Refuses
/// `n > 26`; see [`enumerate_orientations_unguarded`].
pub fn enumerate_orientations(n: usize) -> Result<impl Iterator<Item = OrientedPath>> {
    if n > ENUMERATION_GUARD {
        return Err(Error::TooLarge {
            n,
            max_n: ENUMERATION_GUARD,
        });
    }
    enumerate_orientations_unguarded(n)
}

pub fn enumerate_orientations_unguarded(n: usize) -> Result<impl Iterator<Item = OrientedPath>> {
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    if n > 64 {
        return Err(Error::TooLarge { n, max_n: 64 });
    }
    Ok((0..orientation_count(n)).map(move |i| orientation_at(n, i)))
}

/// Color count for one orientation under `method`.
pub fn evaluate(path: &OrientedPath, method: Method) -> Result<usize> {
    match method {
        Method::Fast => Ok(run_mdc(path).num_colors()),
        Method::Oracle => oracle_min_coloring(path, DEFAULT_MAX_N).map(|r| r.min_colors),
    }
}

/// `(count, index)` of the first minimum over `range`.
fn scan_range(
    n: usize,
    range: std::ops::Range<u64>,
    method: Method,
) -> Result<Option<(usize, u64)>> {
    let mut best: Option<(usize, u64)> = None;
    for i in range {
        let count = evaluate(&orientation_at(n, i), method)?;
        if best.is_none_or(|(b, _)| count < b) {
            best = Some((count, i));
        }
    }
    Ok(best)
}

pub fn min_over_orientations(n: usize, method: Method) -> Result<SurveyResult> {
    min_over_orientations_with(n, method, default_workers())
}

fn default_workers() -> usize {
    thread::available_parallelism().map_or(1, NonZeroUsize::get)
}

/// [`min_over_orientations`] over `workers` threads. The result does not
/// depend on `workers`: ties go to the lexicographically first orientation.
pub fn min_over_orientations_with(
    n: usize,
    method: Method,
    workers: usize,
) -> Result<SurveyResult> {
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    if n > ENUMERATION_GUARD {
        return Err(Error::TooLarge {
            n,
            max_n: ENUMERATION_GUARD,
        });
    }
    if method == Method::Oracle && n > ORACLE_SURVEY_MAX_N {
        return Err(Error::TooLarge {
            n,
            max_n: ORACLE_SURVEY_MAX_N,
        });
    }
    let total = orientation_count(n);
    let workers = (workers.max(1) as u64).min(total);
    let chunk = total.div_ceil(workers);
    let partials: Vec<Result<Option<(usize, u64)>>> = thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                let range = w * chunk..((w + 1) * chunk).min(total);
                s.spawn(move || scan_range(n, range, method))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("survey worker panicked"))
            .collect()
    });
    let mut best: Option<(usize, u64)> = None;
    for partial in partials {
        if let Some(candidate) = partial? {
            if best.is_none_or(|b| candidate < b) {
                best = Some(candidate);
            }
        }
    }
    let (min_colors, index) = best.expect("at least one orientation");
    let formula_value = closed_form_minimum(n).ok();
    Ok(SurveyResult {
        n,
        min_colors,
        witness: orientation_at(n, index),
        formula_value,
        agrees: reference_value(n)? == min_colors,
        method,
    })
}

/// Survey every `n` in `lo..=hi`; `lo >= 4`.
pub fn verify_closed_form(lo: usize, hi: usize, method: Method) -> Result<Vec<SurveyResult>> {
    if lo < 4 || lo > hi {
        return Err(Error::BadRange { lo, hi, min: 4 });
    }
    (lo..=hi)
        .map(|n| min_over_orientations(n, method))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formula_values() {
        let expected = [
            (4, 3),
            (5, 3),
            (6, 3),
            (7, 4),
            (8, 4),
            (9, 4),
            (10, 5),
            (11, 5),
            (12, 5),
        ];
        for (n, v) in expected {
            assert_eq!(closed_form_minimum(n).unwrap(), v, "n = {n}");
        }
        assert_eq!(closed_form_minimum(3), Err(Error::FormulaUndefined(3)));
        assert_eq!(reference_value(3).unwrap(), 2);
    }

    #[test]
    fn enumeration_order_and_size() {
        let three: Vec<String> = enumerate_orientations(3)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(three, ["FF", "FB", "BF", "BB"]);
        assert_eq!(enumerate_orientations(1).unwrap().count(), 1);
        assert_eq!(enumerate_orientations(6).unwrap().count(), 32);
        assert!(enumerate_orientations(27).is_err());
        assert!(enumerate_orientations(0).is_err());
    }

    #[test]
    fn p6_minimum() {
        let r = min_over_orientations(6, Method::Fast).unwrap();
        assert_eq!(r.min_colors, 3);
        assert!(r.agrees);
    }

    #[test]
    fn p3_by_oracle() {
        let r = min_over_orientations(3, Method::Oracle).unwrap();
        assert_eq!(r.min_colors, 2);
        assert_eq!(r.formula_value, None);
        assert!(r.agrees);
    }

    #[test]
    fn worker_count_does_not_change_result() {
        let one = min_over_orientations_with(11, Method::Fast, 1).unwrap();
        for w in [2, 3, 7, 64] {
            assert_eq!(
                min_over_orientations_with(11, Method::Fast, w).unwrap(),
                one
            );
        }
    }

    #[test]
    fn oracle_survey_bound() {
        assert!(min_over_orientations(13, Method::Oracle).is_err());
        assert!(verify_closed_form(3, 5, Method::Fast).is_err());
        assert!(verify_closed_form(6, 5, Method::Fast).is_err());
    }
}

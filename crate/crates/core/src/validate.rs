//! Dominator-coloring checker, independent of the coloring algorithm.
//!
//! A vertex `v` with out-degree at least 1 dominates color class `C` when
//! `C` is contained in its open out-neighborhood `N+(v)`. Sinks have no
//! domination requirement.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mdc::Coloring;
use crate::path::OrientedPath;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub proper: bool,
    pub dominator: bool,
    /// 1-based edge indices `i` such that `v_i` and `v_{i+1}` share a color.
    pub properness_violations: Vec<usize>,
    /// 1-based ids of vertices with out-degree >= 1 dominating no class.
    pub domination_violations: Vec<usize>,
    pub valid: bool,
}

fn check_len(path: &OrientedPath, assignment: &[usize]) -> Result<()> {
    if assignment.len() != path.n() {
        return Err(Error::SizeMismatch {
            path: path.n(),
            coloring: assignment.len(),
        });
    }
    Ok(())
}

fn class_sizes(assignment: &[usize]) -> BTreeMap<usize, usize> {
    let mut sizes = BTreeMap::new();
    for &c in assignment {
        *sizes.entry(c).or_insert(0) += 1;
    }
    sizes
}

pub fn is_proper(path: &OrientedPath, coloring: &Coloring) -> Result<bool> {
    check_len(path, coloring.assignment())?;
    Ok(coloring.assignment().windows(2).all(|w| w[0] != w[1]))
}

/// Colors whose whole class lies in `N+(v)`, for 0-based vertex `v`.
pub fn dominated_classes(
    path: &OrientedPath,
    coloring: &Coloring,
    v: usize,
) -> Result<BTreeSet<usize>> {
    check_len(path, coloring.assignment())?;
    if v >= path.n() {
        return Err(Error::VertexOutOfRange {
            vertex: v + 1,
            n: path.n(),
        });
    }
    Ok(dominated_by(
        path,
        coloring.assignment(),
        &class_sizes(coloring.assignment()),
        v,
    ))
}

fn dominated_by(
    path: &OrientedPath,
    assignment: &[usize],
    sizes: &BTreeMap<usize, usize>,
    v: usize,
) -> BTreeSet<usize> {
    // A class lies inside N+(v) iff all of its members are out-neighbors,
    // i.e. the out-neighbors carrying that color account for the whole class.
    let mut hits: BTreeMap<usize, usize> = BTreeMap::new();
    for w in path.out_neighbors(v) {
        *hits.entry(assignment[w]).or_insert(0) += 1;
    }
    hits.into_iter()
        .filter(|(c, k)| sizes[c] == *k)
        .map(|(c, _)| c)
        .collect()
}

pub fn validate(path: &OrientedPath, coloring: &Coloring) -> Result<ValidationReport> {
    validate_assignment(path, coloring.assignment())
}

/// Like [`validate`], for arbitrary (not necessarily dense) color ids.
pub fn validate_assignment(path: &OrientedPath, assignment: &[usize]) -> Result<ValidationReport> {
    check_len(path, assignment)?;
    let properness_violations: Vec<usize> = assignment
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] == w[1])
        .map(|(i, _)| i + 1)
        .collect();
    let sizes = class_sizes(assignment);
    let domination_violations: Vec<usize> = (0..path.n())
        .filter(|&v| path.out_neighbors(v).next().is_some())
        .filter(|&v| dominated_by(path, assignment, &sizes, v).is_empty())
        .map(|v| v + 1)
        .collect();
    let proper = properness_violations.is_empty();
    let dominator = domination_violations.is_empty();
    Ok(ValidationReport {
        proper,
        dominator,
        properness_violations,
        domination_violations,
        valid: proper && dominator,
    })
}

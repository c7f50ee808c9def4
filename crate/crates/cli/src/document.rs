use std::collections::BTreeMap;

use mdc_core::oracle::OracleResult;
use mdc_core::validate::validate;
use mdc_core::{Coloring, OrientedPath};
use serde::{Deserialize, Serialize};

/// JSON form of a coloring. Vertex ids are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: usize,
    pub orientation: String,
    pub colors: usize,
    pub assignment: Vec<usize>,
    pub classes: BTreeMap<usize, Vec<usize>>,
    pub star_color: Option<usize>,
    pub valid: bool,
}

fn one_based_classes(coloring: &Coloring) -> BTreeMap<usize, Vec<usize>> {
    coloring
        .classes()
        .into_iter()
        .map(|(c, vs)| (c, vs.into_iter().map(|v| v + 1).collect()))
        .collect()
}

impl ColoringDocument {
    /// `valid` is recomputed from the validator.
    pub fn new(path: &OrientedPath, coloring: &Coloring) -> Self {
        let valid = validate(path, coloring).map(|r| r.valid).unwrap_or(false);
        Self {
            n: path.n(),
            orientation: path.to_string(),
            colors: coloring.num_colors(),
            assignment: coloring.assignment().to_vec(),
            classes: one_based_classes(coloring),
            star_color: coloring.star_color(),
            valid,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDocument {
    pub n: usize,
    pub orientation: String,
    pub min_colors: usize,
    pub witness: Vec<usize>,
    pub classes: BTreeMap<usize, Vec<usize>>,
    pub explored: u64,
    pub fast_colors: usize,
    pub matches_fast: bool,
}

impl OracleDocument {
    pub fn new(path: &OrientedPath, result: &OracleResult, fast_colors: usize) -> Self {
        Self {
            n: path.n(),
            orientation: path.to_string(),
            min_colors: result.min_colors,
            witness: result.witness.assignment().to_vec(),
            classes: one_based_classes(&result.witness),
            explored: result.explored,
            fast_colors,
            matches_fast: fast_colors == result.min_colors,
        }
    }
}

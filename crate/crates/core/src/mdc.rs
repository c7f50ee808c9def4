//! Single-pass minimum dominator coloring of an oriented path.
//!
//! Vertices are scanned left to right and every vertex falls in one of
//! three groups:
//!
//! * sources (in-degree 0) all share color `C0`;
//! * a vertex with an in-neighbor of out-degree 1 is that neighbor's only
//!   dominated vertex and gets a color of its own;
//! * every other vertex ("free") has only out-degree-2 in-neighbors. Free
//!   vertices `v` and `v + 2` are *linked* when `v + 1` has out-degree 2;
//!   the out-degree-2 vertex then needs `{v}`, `{v + 2}` or `{v, v + 2}` as
//!   a color class. Maximal runs of linked free vertices are the 2-chains.
//!
//! A 2-chain with exactly two free vertices takes one fresh color for both.
//! Every other 2-chain alternates between the shared color `C*` and fresh
//! unique colors, starting with `C*`. Whether a chain has exactly two free
//! vertices is decided at its first vertex with a constant lookahead.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::path::{DegreeProfile, OrientedPath};

/// Color id of the class holding every source.
pub const C0: usize = 0;

/// A vertex coloring with dense ids `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    assignment: Vec<usize>,
    num_colors: usize,
    star_color: Option<usize>,
}

impl Coloring {
    /// Builds a coloring from raw ids. Returns `None` unless the ids are
    /// dense, i.e. exactly `0..k` for some `k`.
    pub fn from_assignment(assignment: Vec<usize>) -> Option<Self> {
        let num_colors = assignment.iter().max().map_or(0, |m| m + 1);
        let mut seen = vec![false; num_colors];
        for &c in &assignment {
            seen[c] = true;
        }
        seen.iter().all(|&s| s).then_some(Self {
            assignment,
            num_colors,
            star_color: None,
        })
    }

    /// All-distinct coloring `v_i -> i`.
    pub fn singletons(n: usize) -> Self {
        Self {
            assignment: (0..n).collect(),
            num_colors: n,
            star_color: None,
        }
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    pub fn color(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn star_color(&self) -> Option<usize> {
        self.star_color
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Color id -> sorted 0-based vertex list.
    pub fn classes(&self) -> BTreeMap<usize, Vec<usize>> {
        let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in self.assignment.iter().enumerate() {
            classes.entry(c).or_default().push(v);
        }
        classes
    }
}

/// Scan state. `alpha` selects the next color kind inside the current
/// 2-chain (`false`: shared or pair color, `true`: fresh unique color);
/// `beta` records whether `C*` exists yet and never goes back to `false`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AlgorithmState {
    pub alpha: bool,
    pub beta: bool,
    pub palette_size: usize,
}

/// How a vertex was colored.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Source,
    Forced,
    Star,
    Pair,
    Unique,
}

struct Scan<'a> {
    path: &'a OrientedPath,
    profile: DegreeProfile,
    state: AlgorithmState,
    assignment: Vec<usize>,
    star: Option<usize>,
    steps: u64,
}

impl<'a> Scan<'a> {
    fn new(path: &'a OrientedPath) -> Self {
        Self {
            path,
            profile: path.degree_profile(),
            state: AlgorithmState {
                palette_size: 1,
                ..Default::default()
            },
            assignment: Vec::with_capacity(path.n()),
            star: None,
            steps: 0,
        }
    }

    fn fresh(&mut self) -> usize {
        let c = self.state.palette_size;
        self.state.palette_size += 1;
        c
    }

    fn star(&mut self) -> usize {
        if let Some(c) = self.star {
            return c;
        }
        let c = self.fresh();
        self.star = Some(c);
        self.state.beta = true;
        c
    }

    fn has_out_degree_one_in_neighbor(&mut self, v: usize) -> bool {
        let mut found = false;
        for u in self.path.in_neighbors(v) {
            self.steps += 1;
            found |= self.profile.out_deg[u] == 1;
        }
        found
    }

    fn is_free(&mut self, v: usize) -> bool {
        if v >= self.profile.n() || self.profile.in_deg[v] == 0 {
            return false;
        }
        let mut free = true;
        for u in self.path.in_neighbors(v) {
            self.steps += 1;
            free &= self.profile.out_deg[u] == 2;
        }
        free
    }

    /// Whether free vertex `v` continues the 2-chain through `v - 2`.
    fn linked_to_previous(&mut self, v: usize) -> bool {
        self.steps += 1;
        v >= 2 && self.profile.safe_out_degree(v - 1) == 2 && self.is_free(v) && self.is_free(v - 2)
    }

    fn finish(self) -> (Coloring, u64) {
        let coloring = Coloring {
            num_colors: self.state.palette_size,
            assignment: self.assignment,
            star_color: self.star,
        };
        (coloring, self.steps)
    }
}

/// Upper bound on [`run_mdc_counted`] steps per vertex: one for the visit,
/// two in-neighbor checks, and three chain-link tests of five steps each.
pub const MAX_STEPS_PER_VERTEX: u64 = 18;

/// Minimum dominator coloring of `path`.
pub fn run_mdc(path: &OrientedPath) -> Coloring {
    run_mdc_counted(path).0
}

/// [`run_mdc`] together with its primitive step count.
pub fn run_mdc_counted(path: &OrientedPath) -> (Coloring, u64) {
    let mut scan = Scan::new(path);
    let mut pair_chain = false;
    let mut pair_color = C0;
    for v in 0..path.n() {
        scan.steps += 1;
        let color = if scan.profile.in_deg[v] == 0 {
            C0
        } else if scan.has_out_degree_one_in_neighbor(v) {
            scan.state.alpha = false;
            scan.fresh()
        } else {
            if !scan.linked_to_previous(v) {
                scan.state.alpha = false;
                pair_chain = scan.linked_to_previous(v + 2) && !scan.linked_to_previous(v + 4);
            }
            let color = match (pair_chain, scan.state.alpha) {
                (true, false) => {
                    pair_color = scan.fresh();
                    pair_color
                }
                (true, true) => pair_color,
                (false, false) => scan.star(),
                (false, true) => scan.fresh(),
            };
            scan.state.alpha = !scan.state.alpha;
            color
        };
        scan.assignment.push(color);
    }
    scan.finish()
}

/// Which branch [`run_mdc`] takes at each vertex.
pub fn trace(path: &OrientedPath) -> Vec<Branch> {
    let coloring = run_mdc(path);
    let classes = coloring.classes();
    let profile = path.degree_profile();
    (0..path.n())
        .map(|v| {
            let c = coloring.color(v);
            if c == C0 {
                Branch::Source
            } else if path.in_neighbors(v).any(|u| profile.out_deg[u] == 1) {
                Branch::Forced
            } else if Some(c) == coloring.star_color() {
                Branch::Star
            } else if classes[&c].len() == 2 {
                Branch::Pair
            } else {
                Branch::Unique
            }
        })
        .collect()
}

/// Older form of the scan, kept for comparison. It guesses a two-vertex
/// chain from the raw out-degrees of `v_{i+1}` and `v_{i+3}` only while `C*`
/// is unset, gives that chain `C*` itself, and treats every orientation of
/// `P_6` as such a chain. It produces invalid or non-minimum colorings on
/// some inputs (the first at `n = 6`), so nothing else relies on it.
pub fn run_mdc_raw_lookahead(path: &OrientedPath) -> Coloring {
    let mut scan = Scan::new(path);
    let n = path.n();
    for v in 0..n {
        let color = if scan.profile.in_deg[v] == 0 {
            C0
        } else if scan.has_out_degree_one_in_neighbor(v) {
            scan.state.alpha = false;
            scan.fresh()
        } else if !scan.state.alpha {
            if !scan.state.beta {
                let star = scan.star();
                let short_chain = scan.profile.safe_out_degree(v + 1) == 2
                    && scan.profile.safe_out_degree(v + 3) != 2;
                scan.state.alpha = !(short_chain || n == 6);
                star
            } else {
                scan.state.alpha = true;
                scan.star()
            }
        } else {
            scan.state.alpha = false;
            scan.fresh()
        };
        scan.assignment.push(color);
    }
    scan.finish().0
}

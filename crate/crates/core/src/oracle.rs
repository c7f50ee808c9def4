//! Exhaustive minimum dominator coloring for small paths.
//!
//! Palette sizes `t = 1, 2, ...` are tried in turn. For each `t` the search
//! walks assignments in restricted-growth form (vertex `i` may use at most
//! one more than the largest color on `v_1..v_{i-1}`), so each partition
//! into color classes is visited once. Adjacent equal colors are pruned as
//! they are placed, and so is a vertex whose out-neighbors are all colored
//! but whose candidate classes already reach outside its out-neighborhood;
//! classes only grow, so that vertex can never be dominated. Every complete
//! assignment is confirmed with [`validate_assignment`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::mdc::Coloring;
use crate::path::OrientedPath;
use crate::validate::validate_assignment;

pub const DEFAULT_MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub min_colors: usize,
    pub witness: Coloring,
    /// Search nodes (partial assignments) visited over all palette sizes.
    pub explored: u64,
}

struct Search<'a> {
    path: &'a OrientedPath,
    out: Vec<Vec<usize>>,
    palette: usize,
    colors: Vec<usize>,
    class_size: Vec<usize>,
    explored: u64,
}

impl Search<'_> {
    fn run(&mut self, i: usize, max_used: Option<usize>) -> bool {
        self.explored += 1;
        let n = self.path.n();
        if i == n {
            return validate_assignment(self.path, &self.colors)
                .map(|r| r.valid)
                .unwrap_or(false);
        }
        let limit = max_used.map_or(1, |m| m + 2).min(self.palette);
        for c in 0..limit {
            if i > 0 && self.colors[i - 1] == c {
                continue;
            }
            self.colors[i] = c;
            self.class_size[c] += 1;
            if self.still_dominable(i) && self.run(i + 1, Some(max_used.map_or(c, |m| m.max(c)))) {
                return true;
            }
            self.class_size[c] -= 1;
        }
        false
    }

    /// Checks every vertex whose out-neighborhood lies within `v_0..=v_last`.
    fn still_dominable(&self, last: usize) -> bool {
        (0..last).all(|v| {
            let out = &self.out[v];
            if out.is_empty() || out.iter().any(|&w| w > last) {
                return true;
            }
            out.iter().any(|&w| {
                let c = self.colors[w];
                let inside = out.iter().filter(|&&x| self.colors[x] == c).count();
                inside == self.class_size[c]
            })
        })
    }
}

pub fn oracle_min_coloring(path: &OrientedPath, max_n: usize) -> Result<OracleResult> {
    let n = path.n();
    if n > max_n {
        return Err(Error::TooLarge { n, max_n });
    }
    let mut search = Search {
        path,
        out: (0..n).map(|v| path.out_neighbors(v).collect()).collect(),
        palette: 0,
        colors: vec![0; n],
        class_size: vec![0; n],
        explored: 0,
    };
    for t in 1..=n {
        search.palette = t;
        search.class_size.iter_mut().for_each(|s| *s = 0);
        if search.run(0, None) {
            let witness = Coloring::from_assignment(search.colors.clone())
                .expect("restricted-growth assignments use dense ids");
            return Ok(OracleResult {
                min_colors: witness.num_colors(),
                witness,
                explored: search.explored,
            });
        }
    }
    unreachable!("the all-singleton coloring is always a dominator coloring")
}

pub fn oracle_chromatic(path: &OrientedPath) -> Result<usize> {
    oracle_min_coloring(path, DEFAULT_MAX_N).map(|r| r.min_colors)
}

/// Number of restricted-growth strings of length `n` using at most
/// `palette` colors, optionally requiring adjacent entries to differ.
/// Without the properness filter and with `palette >= n` this is the Bell
/// number of `n`.
pub fn count_canonical_assignments(n: usize, palette: usize, proper: bool) -> u64 {
    fn rec(
        i: usize,
        n: usize,
        max_used: Option<usize>,
        prev: Option<usize>,
        palette: usize,
        proper: bool,
    ) -> u64 {
        if i == n {
            return 1;
        }
        let limit = max_used.map_or(1, |m| m + 2).min(palette);
        (0..limit)
            .filter(|&c| !(proper && prev == Some(c)))
            .map(|c| {
                rec(
                    i + 1,
                    n,
                    Some(max_used.map_or(c, |m| m.max(c))),
                    Some(c),
                    palette,
                    proper,
                )
            })
            .sum()
    }
    rec(0, n, None, None, palette, proper)
}

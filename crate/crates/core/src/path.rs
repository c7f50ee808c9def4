//! Oriented paths, their degree profiles and instance generators.
//!
//! Vertices are indexed from 0 internally. Text and JSON surfaces use the
//! 1-based `v1..vn` labels.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Direction of the edge between `v_i` and `v_{i+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// `v_i -> v_{i+1}`
    Forward,
    /// `v_{i+1} -> v_i`
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Direction::Forward => 'F',
            Direction::Backward => 'B',
        }
    }

    /// Accepts the canonical `F`/`B` and the `>`/`<` aliases.
    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'F' | '>' => Some(Direction::Forward),
            'B' | '<' => Some(Direction::Backward),
            _ => None,
        }
    }
}

/// An orientation of the path on `n >= 1` vertices.
///
/// Only the `n - 1` edge directions are stored, so the underlying graph is
/// always a path.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedPath {
    arcs: Vec<Direction>,
}

impl OrientedPath {
    /// The single-vertex path.
    pub fn trivial() -> Self {
        Self { arcs: Vec::new() }
    }

    pub fn from_arcs(arcs: Vec<Direction>) -> Self {
        Self { arcs }
    }

    /// Parses a string over `{F, B}` (aliases `>`/`<`). The empty string is
    /// the single-vertex path.
    pub fn parse(text: &str) -> Result<Self> {
        text.chars()
            .enumerate()
            .map(|(i, c)| {
                Direction::from_char(c).ok_or(Error::InvalidFlag {
                    position: i + 1,
                    found: c,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_arcs)
    }

    pub fn n(&self) -> usize {
        self.arcs.len() + 1
    }

    pub fn arcs(&self) -> &[Direction] {
        &self.arcs
    }

    /// Flips every arc in place; vertex labels are kept.
    pub fn reverse(&self) -> Self {
        Self {
            arcs: self.arcs.iter().map(|d| d.flip()).collect(),
        }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }

    /// Out-neighbors of vertex `v` (0-based), left neighbor first.
    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors_where(v, Direction::Backward, Direction::Forward)
    }

    /// In-neighbors of vertex `v` (0-based), left neighbor first.
    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors_where(v, Direction::Forward, Direction::Backward)
    }

    // The left edge of v is arcs[v - 1], the right edge arcs[v].
    fn neighbors_where(
        &self,
        v: usize,
        left: Direction,
        right: Direction,
    ) -> impl Iterator<Item = usize> + '_ {
        let l = (v > 0 && self.arcs.get(v - 1) == Some(&left)).then(|| v - 1);
        let r = (self.arcs.get(v) == Some(&right)).then(|| v + 1);
        l.into_iter().chain(r)
    }
}

impl fmt::Display for OrientedPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.arcs
            .iter()
            .try_for_each(|d| write!(f, "{}", d.as_char()))
    }
}

impl serde::Serialize for OrientedPath {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for OrientedPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// In- and out-degree of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub in_deg: Vec<u8>,
    pub out_deg: Vec<u8>,
}

impl DegreeProfile {
    pub fn of(path: &OrientedPath) -> Self {
        let n = path.n();
        let mut in_deg = vec![0u8; n];
        let mut out_deg = vec![0u8; n];
        for (i, dir) in path.arcs().iter().enumerate() {
            let (tail, head) = match dir {
                Direction::Forward => (i, i + 1),
                Direction::Backward => (i + 1, i),
            };
            out_deg[tail] += 1;
            in_deg[head] += 1;
        }
        Self { in_deg, out_deg }
    }

    pub fn n(&self) -> usize {
        self.out_deg.len()
    }

    /// Out-degree of vertex `i` (0-based), or 0 when `i` is past the end.
    pub fn safe_out_degree(&self, i: usize) -> u8 {
        self.out_deg.get(i).copied().unwrap_or(0)
    }
}

/// Uniformly random orientation, reproducible from `(n, seed)`.
pub fn random_orientation(n: usize, seed: u64) -> Result<OrientedPath> {
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let arcs = (0..n - 1)
        .map(|_| {
            if rng.gen::<bool>() {
                Direction::Forward
            } else {
                Direction::Backward
            }
        })
        .collect();
    Ok(OrientedPath::from_arcs(arcs))
}

/// An orientation of `P_n` attaining the minimum dominator chromatic number
/// over all orientations.
///
/// * odd `n`: `BFBF...BF`, sinks at every odd position;
/// * `n = 4k`: `FBFB...F`, out-degrees `1,0,2,0,...,2,0`;
/// * `n = 4k + 2`, `n != 6`: `BFBF...B`, ending in an out-degree-1 vertex;
/// * `n = 6`: `FBFBF`.
pub fn optimal_orientation(n: usize) -> Result<OrientedPath> {
    use Direction::{Backward as B, Forward as F};
    if n == 0 {
        return Err(Error::EmptyPath);
    }
    let edges = n - 1;
    let alternating = |first: Direction| -> OrientedPath {
        let arcs = (0..edges)
            .map(|i| if i % 2 == 0 { first } else { first.flip() })
            .collect();
        OrientedPath::from_arcs(arcs)
    };
    Ok(if n % 2 == 1 || (n % 4 == 2 && n != 6) {
        alternating(B)
    } else {
        alternating(F)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> OrientedPath {
        s.parse().unwrap()
    }

    #[test]
    fn parse_bfbf() {
        let path = p("BFBF");
        assert_eq!(path.n(), 5);
        let arcs: Vec<_> = (0..5)
            .flat_map(|v| path.out_neighbors(v).map(move |w| (v + 1, w + 1)))
            .collect();
        assert_eq!(arcs, vec![(2, 1), (2, 3), (4, 3), (4, 5)]);
    }

    #[test]
    fn parse_edge_cases() {
        assert_eq!(p("").n(), 1);
        assert_eq!(p("FFF").degree_profile().out_deg, vec![1, 1, 1, 0]);
        assert_eq!(p("><"), p("FB"));
        assert_eq!(
            OrientedPath::parse("FBx"),
            Err(Error::InvalidFlag {
                position: 3,
                found: 'x'
            })
        );
        assert!(OrientedPath::parse("f").is_err());
    }

    #[test]
    fn format_canonical() {
        assert_eq!(p("BFBF").to_string(), "BFBF");
        assert_eq!(OrientedPath::trivial().to_string(), "");
        assert_eq!(p("FFB").reverse().to_string(), "BBF");
        assert_eq!(p("><>").to_string(), "FBF");
    }

    #[test]
    fn reverse_flips_flags() {
        assert_eq!(p("BFBF").reverse(), p("FBFB"));
        assert_eq!(p("F").reverse(), p("B"));
        assert_eq!(OrientedPath::trivial().reverse(), OrientedPath::trivial());
    }

    #[test]
    fn degree_examples() {
        assert_eq!(p("BFBF").degree_profile().out_deg, vec![0, 2, 0, 2, 0]);
        assert_eq!(p("FBFBF").degree_profile().out_deg, vec![1, 0, 2, 0, 2, 0]);
        let single = p("").degree_profile();
        assert_eq!(single.out_deg, vec![0]);
        assert_eq!(single.in_deg, vec![0]);
    }

    #[test]
    fn neighborhoods() {
        let path = p("BFBF");
        assert_eq!(path.out_neighbors(1).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(path.in_neighbors(2).collect::<Vec<_>>(), vec![1, 3]);
        assert_eq!(path.out_neighbors(0).count(), 0);
        assert_eq!(path.in_neighbors(1).count(), 0);
    }

    #[test]
    fn safe_out_degree_clamps() {
        let prof = p("BFBF").degree_profile();
        assert_eq!(prof.safe_out_degree(1), 2);
        assert_eq!(prof.safe_out_degree(4), 0);
        assert_eq!(prof.safe_out_degree(5 + 1), 0);
    }

    #[test]
    fn random_is_deterministic() {
        assert_eq!(random_orientation(5, 7), random_orientation(5, 7));
        assert_eq!(random_orientation(1, 99).unwrap().arcs().len(), 0);
        assert_eq!(random_orientation(0, 1), Err(Error::EmptyPath));
    }

    #[test]
    fn random_flags_are_balanced() {
        let n = 21;
        let draws = 10_000u64;
        let mut forward = vec![0u32; n - 1];
        for seed in 0..draws {
            let path = random_orientation(n, seed).unwrap();
            for (i, d) in path.arcs().iter().enumerate() {
                forward[i] += u32::from(*d == Direction::Forward);
            }
        }
        for count in forward {
            let freq = f64::from(count) / draws as f64;
            assert!((freq - 0.5).abs() <= 0.05, "frequency {freq}");
        }
    }

    #[test]
    fn optimal_patterns() {
        assert_eq!(optimal_orientation(5).unwrap(), p("BFBF"));
        assert_eq!(optimal_orientation(6).unwrap(), p("FBFBF"));
        assert_eq!(optimal_orientation(8).unwrap(), p("FBFBFBF"));
        assert_eq!(optimal_orientation(10).unwrap(), p("BFBFBFBFB"));
        assert_eq!(optimal_orientation(1).unwrap(), OrientedPath::trivial());
        assert_eq!(
            optimal_orientation(8).unwrap().degree_profile().out_deg,
            vec![1, 0, 2, 0, 2, 0, 2, 0]
        );
        assert!(optimal_orientation(0).is_err());
    }
}

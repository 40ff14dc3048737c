//! Webs `W(n, p)` and antiwebs, their canonical maximum stable sets, and
//! conversion to explicit graphs.
//!
//! Vertices are labelled `0..n` in circular order. In a web, `i` and `j`
//! are adjacent iff `p ≤ |i − j| ≤ n − p`; the antiweb is the complement.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{GenericGraph, MAX_VERTICES};
use crate::numtheory::{ceil_div, checked_product, divides};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Web,
    Antiweb,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Web => "web",
            Family::Antiweb => "antiweb",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "web" => Ok(Family::Web),
            "antiweb" => Ok(Family::Antiweb),
            other => Err(format!("unknown family {other:?}, expected web or antiweb")),
        }
    }
}

/// A validated `(family, n, p)` triple with `p ≥ 1` and `n ≥ 2p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FamilyParams {
    family: Family,
    n: i64,
    p: i64,
}

impl<'de> Deserialize<'de> for FamilyParams {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            family: Family,
            n: i64,
            p: i64,
        }
        let raw = Raw::deserialize(d)?;
        FamilyParams::new(raw.family, raw.n, raw.p).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} p={}", self.family, self.n, self.p)
    }
}

impl FamilyParams {
    pub fn new(family: Family, n: i64, p: i64) -> Result<Self> {
        if p < 1 {
            return Err(Error::DistanceNotPositive { p });
        }
        if n < p.saturating_mul(2) {
            return Err(Error::TooFewVertices { n, p });
        }
        checked_product(n, 1, "n")?;
        Ok(FamilyParams { family, n, p })
    }

    pub fn web(n: i64, p: i64) -> Result<Self> {
        Self::new(Family::Web, n, p)
    }

    pub fn antiweb(n: i64, p: i64) -> Result<Self> {
        Self::new(Family::Antiweb, n, p)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    /// Every valid parameter pair with `n ≤ n_max`, ordered by `(n, p)`.
    pub fn all_up_to(family: Family, n_max: i64) -> impl Iterator<Item = FamilyParams> {
        (2..=n_max).flat_map(move |n| (1..=n / 2).map(move |p| FamilyParams { family, n, p }))
    }

    fn check_index(&self, i: i64) -> Result<()> {
        if (0..self.n).contains(&i) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: i,
                vertex_count: self.n as usize,
            })
        }
    }

    fn web_adjacent(&self, i: i64, j: i64) -> bool {
        let d = (i - j).abs();
        self.p <= d && d <= self.n - self.p
    }

    pub fn adjacent(&self, i: i64, j: i64) -> Result<bool> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok(match self.family {
            Family::Web => self.web_adjacent(i, j),
            Family::Antiweb => i != j && !self.web_adjacent(i, j),
        })
    }

    /// Stability number: `p` for webs, `⌊n/p⌋` for antiwebs.
    pub fn alpha(&self) -> i64 {
        match self.family {
            Family::Web => self.p,
            Family::Antiweb => self.n / self.p,
        }
    }

    /// Clique number: `⌊n/p⌋` for webs, `p` for antiwebs.
    pub fn omega(&self) -> i64 {
        match self.family {
            Family::Web => self.n / self.p,
            Family::Antiweb => self.p,
        }
    }

    pub fn p_divides_n(&self) -> bool {
        divides(self.p, self.n)
    }

    /// `i ⊕ j`, addition modulo `n`; negative offsets wrap.
    pub fn oplus(&self, i: i64, j: i64) -> i64 {
        (i + j).rem_euclid(self.n)
    }

    /// The rotated maximum stable set `S_i` (`i` taken modulo `n`).
    ///
    /// Web: `⟨i, i⊕1, …, i⊕(p−1)⟩`. Antiweb: `S_0 ⊕ i` where
    /// `S_0 = ⟨⌈t·n/α⌉ : t = 0..α⟩`.
    pub fn stable_seq(&self, i: i64) -> StableSetSeq {
        let indices = match self.family {
            Family::Web => (0..self.p).map(|j| self.oplus(i, j)).collect(),
            Family::Antiweb => {
                let alpha = self.alpha();
                (0..alpha).map(|t| self.oplus(ceil_div(t * self.n, alpha), i)).collect()
            }
        };
        StableSetSeq { indices }
    }

    pub fn materialize(&self) -> Result<GenericGraph> {
        let n = usize::try_from(self.n)
            .ok()
            .filter(|&n| n <= MAX_VERTICES)
            .ok_or(Error::InstanceTooLarge {
                what: "vertex count",
                size: self.n as usize,
                limit: MAX_VERTICES,
            })?;
        GenericGraph::from_fn(n, |i, j| {
            let web = self.web_adjacent(i as i64, j as i64);
            match self.family {
                Family::Web => web,
                Family::Antiweb => !web,
            }
        })
    }
}

/// An ordered run of vertex indices naming a maximum stable set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct StableSetSeq {
    pub indices: Vec<i64>,
}

impl StableSetSeq {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Containment test: is `W(n', p')` an induced subgraph of `W(n, p)`?
///
/// Holds iff `n·p' ≥ n'·p` and `n·(p' − 1) ≤ n'·(p − 1)`.
pub fn is_web_subgraph(inner: (i64, i64), outer: (i64, i64)) -> Result<bool> {
    let (n_in, p_in) = inner;
    let (n_out, p_out) = outer;
    FamilyParams::web(n_in, p_in)?;
    FamilyParams::web(n_out, p_out)?;
    Ok(n_out * p_in >= n_in * p_out && n_out * (p_in - 1) <= n_in * (p_out - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(FamilyParams::web(5, 0), Err(Error::DistanceNotPositive { p: 0 }));
        assert_eq!(FamilyParams::web(5, 3), Err(Error::TooFewVertices { n: 5, p: 3 }));
        assert!(FamilyParams::antiweb(6, 3).is_ok());
        assert!(FamilyParams::web(i64::MAX, 1).is_err());
    }

    #[test]
    fn adjacency_examples() {
        let w = FamilyParams::web(8, 3).unwrap();
        let a = FamilyParams::antiweb(8, 3).unwrap();
        assert_eq!(w.adjacent(0, 3), Ok(true));
        assert_eq!(w.adjacent(0, 1), Ok(false));
        assert_eq!(a.adjacent(0, 1), Ok(true));
        assert_eq!(a.adjacent(4, 4), Ok(false));
        assert!(matches!(w.adjacent(0, 8), Err(Error::VertexOutOfRange { .. })));
        assert!(w.adjacent(-1, 0).is_err());
    }

    #[test]
    fn alpha_omega_examples() {
        assert_eq!(FamilyParams::antiweb(10, 3).unwrap().alpha(), 3);
        assert_eq!(FamilyParams::web(8, 3).unwrap().alpha(), 3);
        assert_eq!(FamilyParams::web(8, 3).unwrap().omega(), 2);
    }

    #[test]
    fn stable_seq_examples() {
        let w = FamilyParams::web(8, 3).unwrap();
        assert_eq!(w.stable_seq(0).indices, vec![0, 1, 2]);
        assert_eq!(w.stable_seq(6).indices, vec![6, 7, 0]);
        let a = FamilyParams::antiweb(10, 3).unwrap();
        assert_eq!(a.stable_seq(0).indices, vec![0, 4, 7]);
        assert_eq!(a.stable_seq(3).indices, vec![3, 7, 0]);
        assert_eq!(a.stable_seq(13), a.stable_seq(3));
    }

    #[test]
    fn oplus_wraps_negative() {
        let w = FamilyParams::web(8, 3).unwrap();
        assert_eq!(w.oplus(0, -1), 7);
        assert_eq!(w.oplus(7, 1), 0);
    }

    #[test]
    fn web_subgraph_examples() {
        assert_eq!(is_web_subgraph((5, 2), (5, 2)), Ok(true));
        assert_eq!(is_web_subgraph((5, 1), (10, 2)), Ok(true));
        // 8·2 = 16 < 7·3 = 21; W(7,2) has 14 edges, W(8,3) only 12
        assert_eq!(is_web_subgraph((7, 2), (8, 3)), Ok(false));
        assert_eq!(is_web_subgraph((8, 3), (7, 2)), Ok(false));
        assert_eq!(is_web_subgraph((4, 1), (8, 2)), Ok(true));
        assert!(is_web_subgraph((3, 2), (8, 3)).is_err());
    }

    #[test]
    fn materialize_examples() {
        // the odd hole, labelled by steps of 2
        let c5 = FamilyParams::web(5, 2).unwrap().materialize().unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(
            c5.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
        );
        for p in 1..=6 {
            let g = FamilyParams::web(2 * p, p).unwrap().materialize().unwrap();
            assert_eq!(g.edge_count(), p as usize);
            assert!((0..g.vertex_count()).all(|v| g.degree(v) == 1));
        }
        let e6 = FamilyParams::antiweb(6, 1).unwrap().materialize().unwrap();
        assert_eq!((e6.vertex_count(), e6.edge_count()), (6, 0));
        assert_eq!(FamilyParams::web(8, 3).unwrap().materialize().unwrap().edge_count(), 12);
    }

    #[test]
    fn all_up_to_enumerates_valid_pairs() {
        let all: Vec<_> = FamilyParams::all_up_to(Family::Web, 5)
            .map(|f| (f.n(), f.p()))
            .collect();
        assert_eq!(all, vec![(2, 1), (3, 1), (4, 1), (4, 2), (5, 1), (5, 2)]);
    }

    #[test]
    fn serde_validates() {
        let ok: FamilyParams = serde_json::from_str(r#"{"family":"antiweb","n":10,"p":3}"#).unwrap();
        assert_eq!(ok, FamilyParams::antiweb(10, 3).unwrap());
        assert!(serde_json::from_str::<FamilyParams>(r#"{"family":"web","n":3,"p":2}"#).is_err());
    }
}

//! Optimal k-fold colorings of webs and antiwebs.
//!
//! Both families satisfy `χ_k = ⌈k·n/α⌉`. The constructions below build a
//! certificate with exactly that many colors out of the rotated stable sets
//! `S_i` from [`FamilyParams::stable_seq`]:
//!
//! * web: colors are `S_0, S_p, S_2p, …, S_(x−1)p`, which walk around the
//!   cycle `x·p ≥ k·n` steps and so cover each vertex at least `k` times;
//! * antiweb: write `k = ℓ·α + i` with `0 ≤ i < α`; take `S_0, …, S_(⌈i·n/α⌉−1)`
//!   once, then the full rotation `S_0, …, S_(n−1)` (an `α`-fold coloring)
//!   `ℓ` times.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{Family, FamilyParams};
use crate::graph::GenericGraph;
use crate::numtheory::{ceil_div, checked_product};

/// Cap on the total size of a constructed coloring (sum of class sizes).
pub const MAX_COLORING_ENTRIES: i64 = 1 << 26;

/// `x` colors with identifiers `1..=x`; class `c − 1` lists the vertices
/// carrying color `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KFoldColoring {
    vertex_count: usize,
    x: usize,
    classes: Vec<Vec<usize>>,
}

impl KFoldColoring {
    /// One class per color, in color order.
    pub fn from_classes(vertex_count: usize, classes: Vec<Vec<usize>>) -> Self {
        KFoldColoring {
            vertex_count,
            x: classes.len(),
            classes,
        }
    }

    /// From a per-vertex list of 1-based color ids. Ids outside `1..=x` are
    /// kept and reported by [`verify_coloring`].
    pub fn from_assignment(x: usize, assignment: &[Vec<usize>]) -> Self {
        let top = assignment.iter().flatten().copied().max().unwrap_or(0).max(x);
        let mut classes = vec![BTreeSet::new(); top];
        for (v, colors) in assignment.iter().enumerate() {
            for &c in colors {
                // id 0 is unrepresentable as a class; map it past the end
                let slot = if c == 0 { top } else { c - 1 };
                if slot == classes.len() {
                    classes.push(BTreeSet::new());
                }
                classes[slot].insert(v);
            }
        }
        KFoldColoring {
            vertex_count: assignment.len(),
            x,
            classes: classes.into_iter().map(|c| c.into_iter().collect()).collect(),
        }
    }

    pub fn num_colors(&self) -> usize {
        self.x
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// Sorted 1-based color ids per vertex.
    pub fn assignment(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for (c, class) in self.classes.iter().enumerate() {
            for &v in class {
                if let Some(slot) = out.get_mut(v) {
                    slot.push(c + 1);
                }
            }
        }
        for colors in &mut out {
            colors.sort_unstable();
            colors.dedup();
        }
        out
    }
}

pub fn chi_k(params: &FamilyParams, k: i64) -> Result<i64> {
    if k < 1 {
        return Err(Error::FoldNotPositive { k });
    }
    let kn = checked_product(k, params.n(), "k·n")?;
    Ok(ceil_div(kn, params.alpha()))
}

pub fn color(params: &FamilyParams, k: i64) -> Result<KFoldColoring> {
    match params.family() {
        Family::Web => color_web(params.n(), params.p(), k),
        Family::Antiweb => color_antiweb(params.n(), params.p(), k),
    }
}

fn check_size(params: &FamilyParams, x: i64) -> Result<()> {
    let entries = x.saturating_mul(params.alpha());
    if entries > MAX_COLORING_ENTRIES {
        return Err(Error::InstanceTooLarge {
            what: "coloring size",
            size: entries as usize,
            limit: MAX_COLORING_ENTRIES as usize,
        });
    }
    Ok(())
}

fn class_of(params: &FamilyParams, i: i64) -> Vec<usize> {
    params.stable_seq(i).indices.into_iter().map(|v| v as usize).collect()
}

pub fn color_web(n: i64, p: i64, k: i64) -> Result<KFoldColoring> {
    let params = FamilyParams::web(n, p)?;
    let x = chi_k(&params, k)?;
    check_size(&params, x)?;
    let classes = (0..x).map(|c| class_of(&params, c * p)).collect();
    Ok(KFoldColoring::from_classes(n as usize, classes))
}

pub fn color_antiweb(n: i64, p: i64, k: i64) -> Result<KFoldColoring> {
    let params = FamilyParams::antiweb(n, p)?;
    let x = chi_k(&params, k)?;
    check_size(&params, x)?;
    let alpha = params.alpha();
    let (rounds, rest) = (k / alpha, k % alpha);
    let head = ceil_div(rest * n, alpha);
    let classes: Vec<Vec<usize>> = (0..head)
        .chain((0..rounds).flat_map(|_| 0..n))
        .map(|i| class_of(&params, i))
        .collect();
    debug_assert_eq!(classes.len() as i64, x);
    Ok(KFoldColoring::from_classes(n as usize, classes))
}

/// Outcome of checking a coloring against a graph and a fold `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringVerdict {
    pub valid: bool,
    pub x: usize,
    pub k: usize,
    /// Smallest number of colors any vertex carries.
    pub min_multiplicity: usize,
    /// Vertices carrying fewer than `k` colors.
    pub under_covered: Vec<usize>,
    /// `(color, u, v)`: an edge `uv` whose endpoints share `color`.
    pub conflicts: Vec<(usize, usize, usize)>,
}

pub fn verify_coloring(g: &GenericGraph, coloring: &KFoldColoring, k: usize) -> Result<ColoringVerdict> {
    if coloring.vertex_count != g.vertex_count() {
        return Err(Error::MalformedColoring(format!(
            "coloring covers {} vertices, graph has {}",
            coloring.vertex_count,
            g.vertex_count()
        )));
    }
    if coloring.classes.len() > coloring.x {
        return Err(Error::MalformedColoring(format!(
            "color id {} outside 1..={}",
            coloring.classes.len(),
            coloring.x
        )));
    }
    let mut multiplicity = vec![0usize; g.vertex_count()];
    let mut conflicts = Vec::new();
    for (c, class) in coloring.classes.iter().enumerate() {
        let members: BTreeSet<usize> = class.iter().copied().collect();
        if let Some(&v) = members.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::MalformedColoring(format!(
                "color {} lists vertex {v}, graph has {}",
                c + 1,
                g.vertex_count()
            )));
        }
        for &u in &members {
            multiplicity[u] += 1;
            conflicts.extend(
                members
                    .range(u + 1..)
                    .filter(|&&v| g.has_edge(u, v))
                    .map(|&v| (c + 1, u, v)),
            );
        }
    }
    let under_covered: Vec<usize> = (0..g.vertex_count()).filter(|&v| multiplicity[v] < k).collect();
    Ok(ColoringVerdict {
        valid: under_covered.is_empty() && conflicts.is_empty(),
        x: coloring.x,
        k,
        min_multiplicity: multiplicity.iter().copied().min().unwrap_or(0),
        under_covered,
        conflicts,
    })
}

/// The JSON form of a family coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub family: Family,
    pub n: i64,
    pub p: i64,
    pub k: i64,
    pub x: usize,
    pub classes: Vec<Vec<usize>>,
}

impl ColoringDocument {
    pub fn new(params: &FamilyParams, k: i64, coloring: &KFoldColoring) -> Self {
        ColoringDocument {
            family: params.family(),
            n: params.n(),
            p: params.p(),
            k,
            x: coloring.x,
            classes: coloring.classes.clone(),
        }
    }

    pub fn params(&self) -> Result<FamilyParams> {
        FamilyParams::new(self.family, self.n, self.p)
    }

    pub fn coloring(&self) -> KFoldColoring {
        KFoldColoring {
            vertex_count: self.n.max(0) as usize,
            x: self.x,
            classes: self.classes.clone(),
        }
    }

    /// Checks the document's coloring against the family graph it names.
    pub fn verify(&self) -> Result<ColoringVerdict> {
        let params = self.params()?;
        if self.k < 1 {
            return Err(Error::FoldNotPositive { k: self.k });
        }
        verify_coloring(&params.materialize()?, &self.coloring(), self.k as usize)
    }
}

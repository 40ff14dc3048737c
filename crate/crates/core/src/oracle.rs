//! Exact `χ_k` for small arbitrary graphs.
//!
//! A k-fold x-coloring is the same thing as a multiset of `x` stable sets
//! covering every vertex at least `k` times, and each class may be grown to
//! a maximal stable set without breaking validity. So the search below
//! enumerates maximal stable sets (Bron–Kerbosch with pivoting on the
//! complement graph) and then solves the set-multicover problem over them
//! by depth-first branch and bound.
//!
//! None of this uses the closed forms from [`crate::coloring`]; it exists to
//! check them.

use crate::coloring::KFoldColoring;
use crate::error::{Error, Result};
use crate::graph::GenericGraph;

pub const MAX_ENUMERATION_VERTICES: usize = 20;
pub const MAX_SEARCH_VERTICES: usize = 16;
pub const MAX_FOLD: usize = 4;
/// Cap for the unrestricted (all stable sets) search.
pub const MAX_UNRESTRICTED_VERTICES: usize = 10;

/// Environment variable that may lower, never raise, the vertex caps.
pub const LIMIT_ENV: &str = "KFOLD_ORACLE_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub enumeration_vertices: usize,
    pub search_vertices: usize,
    pub fold: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            enumeration_vertices: MAX_ENUMERATION_VERTICES,
            search_vertices: MAX_SEARCH_VERTICES,
            fold: MAX_FOLD,
        }
    }
}

impl OracleLimits {
    /// Caps both vertex limits at `cap`.
    pub fn lowered_to(self, cap: usize) -> Self {
        OracleLimits {
            enumeration_vertices: self.enumeration_vertices.min(cap),
            search_vertices: self.search_vertices.min(cap),
            fold: self.fold,
        }
    }

    /// Defaults, lowered by `KFOLD_ORACLE_LIMIT` when it holds an integer.
    pub fn from_env() -> Self {
        match std::env::var(LIMIT_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            Some(cap) => Self::default().lowered_to(cap),
            None => Self::default(),
        }
    }

    fn check_search(&self, vertices: usize, k: usize) -> Result<()> {
        if vertices > self.search_vertices {
            return Err(Error::InstanceTooLarge {
                what: "oracle vertex count",
                size: vertices,
                limit: self.search_vertices,
            });
        }
        if k > self.fold {
            return Err(Error::InstanceTooLarge {
                what: "oracle fold k",
                size: k,
                limit: self.fold,
            });
        }
        Ok(())
    }
}

/// All maximal stable sets of a graph, as bitmasks, sorted by their
/// ascending vertex lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableSetCatalog {
    vertex_count: usize,
    masks: Vec<u32>,
}

impl StableSetCatalog {
    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.masks.is_empty()
    }

    pub fn masks(&self) -> &[u32] {
        &self.masks
    }

    pub fn sets(&self) -> Vec<Vec<usize>> {
        self.masks.iter().map(|&m| bits(m).collect()).collect()
    }

    fn sort(&mut self) {
        self.masks.sort_by_key(|&m| bits(m).collect::<Vec<_>>());
    }
}

fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let v = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(v)
    })
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

pub fn enumerate_maximal_stable_sets(g: &GenericGraph) -> Result<StableSetCatalog> {
    enumerate_with(g, &OracleLimits::from_env())
}

pub fn enumerate_with(g: &GenericGraph, limits: &OracleLimits) -> Result<StableSetCatalog> {
    let n = g.vertex_count();
    if n > limits.enumeration_vertices {
        return Err(Error::InstanceTooLarge {
            what: "enumeration vertex count",
            size: n,
            limit: limits.enumeration_vertices,
        });
    }
    let all = full_mask(n);
    let non_adjacent: Vec<u32> = g
        .neighbor_masks()
        .iter()
        .enumerate()
        .map(|(u, &adj)| all & !adj & !(1 << u))
        .collect();
    let mut catalog = StableSetCatalog {
        vertex_count: n,
        masks: Vec::new(),
    };
    if n > 0 {
        bron_kerbosch(&non_adjacent, 0, all, 0, &mut catalog.masks);
    }
    catalog.sort();
    Ok(catalog)
}

/// Maximal cliques of the complement graph, with Tomita pivoting.
fn bron_kerbosch(comp: &[u32], r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 {
        if x == 0 {
            out.push(r);
        }
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & comp[u]).count_ones())
        .expect("p is non-empty");
    for v in bits(p & !comp[pivot]) {
        let bit = 1 << v;
        bron_kerbosch(comp, r | bit, p & comp[v], x & comp[v], out);
        p &= !bit;
        x |= bit;
    }
}

/// Every non-empty stable set, maximal or not.
fn all_stable_sets(g: &GenericGraph) -> Vec<u32> {
    let adj = g.neighbor_masks();
    (1..=full_mask(g.vertex_count()))
        .filter(|&m| bits(m).all(|v| adj[v] & m == 0))
        .collect()
}

/// Minimum-size multiset of `sets` covering each vertex at least `k` times.
struct MultiCover<'a> {
    sets: &'a [u32],
    /// Set indices containing each vertex.
    containing: Vec<Vec<usize>>,
    /// Branching order: fewest containing sets first, ties by vertex index.
    order: Vec<usize>,
    demand: Vec<u32>,
    active: u32,
    remaining: u32,
    picks: Vec<usize>,
    best: Vec<usize>,
    root_bound: usize,
}

impl<'a> MultiCover<'a> {
    fn new(n: usize, sets: &'a [u32], k: u32) -> Self {
        let containing: Vec<Vec<usize>> = (0..n)
            .map(|v| (0..sets.len()).filter(|&s| sets[s] >> v & 1 == 1).collect())
            .collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (containing[v].len(), v));
        MultiCover {
            sets,
            containing,
            order,
            demand: vec![k; n],
            active: full_mask(n),
            remaining: k * n as u32,
            picks: Vec::new(),
            best: Vec::new(),
            root_bound: 0,
        }
    }

    fn lower_bound(&self) -> usize {
        if self.remaining == 0 {
            return 0;
        }
        let widest = self
            .sets
            .iter()
            .map(|&s| (s & self.active).count_ones())
            .max()
            .unwrap_or(0);
        let deepest = self.demand.iter().copied().max().unwrap_or(0);
        (self.remaining.div_ceil(widest.max(1))).max(deepest) as usize
    }

    /// Applies set `s`, returning which vertices it actually served.
    fn apply(&mut self, s: usize) -> u32 {
        let served = self.sets[s] & self.active;
        for v in bits(served) {
            self.demand[v] -= 1;
            if self.demand[v] == 0 {
                self.active &= !(1 << v);
            }
        }
        self.remaining -= served.count_ones();
        self.picks.push(s);
        served
    }

    fn undo(&mut self, served: u32) {
        for v in bits(served) {
            self.demand[v] += 1;
        }
        self.active |= served;
        self.remaining += served.count_ones();
        self.picks.pop();
    }

    fn greedy(&mut self) {
        let saved = (self.demand.clone(), self.active, self.remaining);
        while self.remaining > 0 {
            let s = (0..self.sets.len())
                .max_by_key(|&s| ((self.sets[s] & self.active).count_ones(), std::cmp::Reverse(s)))
                .expect("catalog covers every vertex");
            self.apply(s);
        }
        self.best = std::mem::take(&mut self.picks);
        (self.demand, self.active, self.remaining) = saved;
    }

    fn solve(mut self) -> Vec<usize> {
        if self.demand.is_empty() {
            return Vec::new();
        }
        self.root_bound = self.lower_bound();
        self.greedy();
        if self.best.len() > self.root_bound {
            self.search(None);
        }
        self.best
    }

    /// Returns true once an incumbent matching the root bound is found.
    fn search(&mut self, previous: Option<(usize, usize)>) -> bool {
        let Some(&v) = self.order.iter().find(|&&u| self.demand[u] > 0) else {
            if self.picks.len() < self.best.len() {
                self.best = self.picks.clone();
            }
            return self.best.len() == self.root_bound;
        };
        if self.picks.len() + self.lower_bound() >= self.best.len() {
            return false;
        }
        // repeated picks for the same vertex are taken in nondecreasing order
        let start = match previous {
            Some((pv, i)) if pv == v => i,
            _ => 0,
        };
        for i in start..self.containing[v].len() {
            let served = self.apply(self.containing[v][i]);
            let done = self.search(Some((v, i)));
            self.undo(served);
            if done {
                return true;
            }
        }
        false
    }
}

fn cover_to_coloring(n: usize, sets: &[u32], picks: &[usize]) -> KFoldColoring {
    KFoldColoring::from_classes(n, picks.iter().map(|&s| bits(sets[s]).collect()).collect())
}

/// An optimal k-fold coloring found by search over maximal stable sets.
pub fn exact_coloring(g: &GenericGraph, k: usize) -> Result<KFoldColoring> {
    exact_coloring_with(g, k, &OracleLimits::from_env())
}

pub fn exact_coloring_with(g: &GenericGraph, k: usize, limits: &OracleLimits) -> Result<KFoldColoring> {
    if k == 0 {
        return Err(Error::FoldNotPositive { k: 0 });
    }
    limits.check_search(g.vertex_count(), k)?;
    let catalog = enumerate_with(g, limits)?;
    let picks = MultiCover::new(g.vertex_count(), catalog.masks(), k as u32).solve();
    Ok(cover_to_coloring(g.vertex_count(), catalog.masks(), &picks))
}

pub fn exact_chi_k(g: &GenericGraph, k: usize) -> Result<i64> {
    exact_chi_k_with(g, k, &OracleLimits::from_env())
}

pub fn exact_chi_k_with(g: &GenericGraph, k: usize, limits: &OracleLimits) -> Result<i64> {
    Ok(exact_coloring_with(g, k, limits)?.num_colors() as i64)
}

/// `χ(G ∘ K_k)`, which equals `χ_k(G)`.
pub fn exact_chi_k_via_lex(g: &GenericGraph, k: usize) -> Result<i64> {
    let limits = OracleLimits::from_env();
    if k == 0 {
        return Err(Error::FoldNotPositive { k: 0 });
    }
    let size = g.vertex_count().saturating_mul(k);
    limits.check_search(size, 1)?;
    exact_chi_k_with(&g.lex_product_with_clique(k)?, 1, &limits)
}

/// Same search, but over every stable set instead of only maximal ones.
pub fn exact_chi_k_unrestricted(g: &GenericGraph, k: usize) -> Result<i64> {
    if k == 0 {
        return Err(Error::FoldNotPositive { k: 0 });
    }
    let limits = OracleLimits::from_env().lowered_to(MAX_UNRESTRICTED_VERTICES);
    limits.check_search(g.vertex_count(), k)?;
    let sets = all_stable_sets(g);
    Ok(MultiCover::new(g.vertex_count(), &sets, k as u32).solve().len() as i64)
}

//! Dense undirected simple graphs and DIMACS `.col` text I/O.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest graph the crate will build explicitly.
pub const MAX_VERTICES: usize = 1 << 13;

const WORD: usize = 64;

/// Symmetric, irreflexive adjacency over vertices `0..vertex_count`.
///
/// Rows are packed bitsets; the graph is immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct GenericGraph {
    vertex_count: usize,
    words: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for GenericGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GenericGraph")
            .field("vertex_count", &self.vertex_count)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl GenericGraph {
    pub fn empty(vertex_count: usize) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::InstanceTooLarge {
                what: "vertex count",
                size: vertex_count,
                limit: MAX_VERTICES,
            });
        }
        let words = vertex_count.div_ceil(WORD);
        Ok(GenericGraph {
            vertex_count,
            words,
            rows: vec![0; words * vertex_count],
        })
    }

    /// Builds a graph from an edge list; duplicate edges collapse, loops are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(vertex_count)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::MalformedGraph(format!("self-loop on vertex {u}")));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds a graph by evaluating `adjacent(i, j)` for every pair `i < j`.
    pub fn from_fn(vertex_count: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut g = Self::empty(vertex_count)?;
        for i in 0..vertex_count {
            for j in i + 1..vertex_count {
                if adjacent(i, j) {
                    g.set(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn complete(vertex_count: usize) -> Result<Self> {
        Self::from_fn(vertex_count, |_, _| true)
    }

    pub fn cycle(vertex_count: usize) -> Result<Self> {
        Self::from_edges(vertex_count, (0..vertex_count).map(|i| (i, (i + 1) % vertex_count)))
    }

    fn set(&mut self, u: usize, v: usize) {
        self.rows[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.rows[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v as i64,
                vertex_count: self.vertex_count,
            })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Panics if either endpoint is out of range.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.vertex_count && v < self.vertex_count);
        self.rows[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertex_count).filter(move |&v| self.has_edge(u, v))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u * self.words..(u + 1) * self.words]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    /// Edges `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count)
            .flat_map(move |i| (i + 1..self.vertex_count).map(move |j| (i, j)))
            .filter(|&(i, j)| self.has_edge(i, j))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count).map(|u| self.degree(u)).sum::<usize>() / 2
    }

    pub fn complement(&self) -> GenericGraph {
        Self::from_fn(self.vertex_count, |i, j| !self.has_edge(i, j)).expect("same size as an existing graph")
    }

    pub fn is_stable(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(a, &u)| vertices[a + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Neighborhoods as `u32` masks, for the small-graph search routines.
    pub(crate) fn neighbor_masks(&self) -> Vec<u32> {
        assert!(self.vertex_count <= 32);
        (0..self.vertex_count)
            .map(|u| self.neighbors(u).fold(0u32, |m, v| m | 1 << v))
            .collect()
    }

    /// Removes `v` and shifts higher labels down by one.
    ///
    /// Returns the new graph with `mapping[new] = old`.
    pub fn delete_vertex(&self, v: usize) -> Result<(GenericGraph, Vec<usize>)> {
        self.check_vertex(v)?;
        let mapping: Vec<usize> = (0..self.vertex_count).filter(|&u| u != v).collect();
        let g = Self::from_fn(mapping.len(), |i, j| self.has_edge(mapping[i], mapping[j]))?;
        Ok((g, mapping))
    }

    /// `G ∘ K_k`: vertex `(u, a)` becomes `u·k + a`.
    pub fn lex_product_with_clique(&self, k: usize) -> Result<GenericGraph> {
        if k == 0 {
            return Err(Error::FoldNotPositive { k: 0 });
        }
        let size = self
            .vertex_count
            .checked_mul(k)
            .filter(|&s| s <= MAX_VERTICES)
            .ok_or(Error::InstanceTooLarge {
                what: "lexicographic product size",
                size: self.vertex_count.saturating_mul(k),
                limit: MAX_VERTICES,
            })?;
        Self::from_fn(size, |x, y| {
            let (u, v) = (x / k, y / k);
            u == v || self.has_edge(u, v)
        })
    }

    /// DIMACS `.col` text: `p edge n m` then 1-based `e i j` lines with `i < j`.
    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p edge {} {}\n", self.vertex_count, self.edge_count());
        for (i, j) in self.edges() {
            writeln!(out, "e {} {}", i + 1, j + 1).unwrap();
        }
        out
    }

    /// Parses DIMACS `.col` text. Comment lines (`c ...`) and blank lines
    /// are skipped, repeated edges collapse, and `p col` is accepted as a
    /// synonym for `p edge`.
    pub fn from_dimacs(text: &str) -> Result<GenericGraph> {
        let mut graph: Option<GenericGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| Error::Parse { line, message };
            let mut tokens = raw.split_whitespace();
            match tokens.next() {
                None | Some("c") => continue,
                Some("p") => {
                    if graph.is_some() {
                        return Err(err("duplicate problem line".into()));
                    }
                    match tokens.next() {
                        Some("edge") | Some("col") => {}
                        other => return Err(err(format!("unsupported problem type {other:?}"))),
                    }
                    let n = parse_count(tokens.next(), "vertex count").map_err(err)?;
                    parse_count(tokens.next(), "edge count").map_err(err)?;
                    graph = Some(GenericGraph::empty(n)?);
                }
                Some("e") => {
                    let g = graph.as_mut().ok_or_else(|| err("edge before problem line".into()))?;
                    let u = parse_count(tokens.next(), "endpoint").map_err(err)?;
                    let v = parse_count(tokens.next(), "endpoint").map_err(err)?;
                    if u == 0 || v == 0 || u > g.vertex_count || v > g.vertex_count {
                        return Err(err(format!("endpoint out of range 1..={}", g.vertex_count)));
                    }
                    if u == v {
                        return Err(err(format!("self-loop on vertex {u}")));
                    }
                    g.set(u - 1, v - 1);
                }
                Some(other) => return Err(err(format!("unknown line type {other:?}"))),
            }
        }
        graph.ok_or(Error::Parse {
            line: 0,
            message: "missing problem line".into(),
        })
    }
}

fn parse_count(token: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    token
        .ok_or_else(|| format!("missing {what}"))?
        .parse()
        .map_err(|e| format!("bad {what}: {e}"))
}

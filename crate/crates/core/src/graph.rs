//! Immutable undirected simple graph built from edge-list text.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

pub type VertexId = u32;
pub type EdgeId = u32;

/// Undirected simple graph with dense vertex ids in `[0, n)`.
///
/// Adjacency is stored in CSR form with every neighbor list sorted
/// ascending. Each adjacency slot carries the canonical id of its edge, which
/// is the edge's position in the lexicographically sorted `(min, max)` list.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    slot_edge: Vec<EdgeId>,
    edges: Vec<(VertexId, VertexId)>,
    edge_set: HashSet<u64>,
    labels: Vec<u64>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.edges == other.edges
    }
}

impl Eq for Graph {}

#[inline]
fn pack(u: VertexId, v: VertexId) -> u64 {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    (u64::from(a) << 32) | u64::from(b)
}

impl Graph {
    /// Builds a graph over `n` dense vertices. Loops are dropped and
    /// duplicate edges (in either orientation) merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let labels = (0..n as u64).collect();
        Self::build(labels, edges)
    }

    fn build<I>(labels: Vec<u64>, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let n = labels.len();
        if n > VertexId::MAX as usize {
            return Err(Error::Invariant(format!("too many vertices: {n}")));
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: w as usize,
                        n,
                    });
                }
            }
            if u != v {
                list.push(if u < v { (u, v) } else { (v, u) });
            }
        }
        list.sort_unstable();
        list.dedup();
        if list.len() > EdgeId::MAX as usize {
            return Err(Error::Invariant(format!("too many edges: {}", list.len())));
        }

        let mut degree = vec![0usize; n];
        for &(u, v) in &list {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut targets = vec![0; 2 * list.len()];
        let mut slot_edge = vec![0; 2 * list.len()];
        // Sorted (min, max) order gives sorted neighbor lists: for a fixed
        // vertex w, smaller neighbors arrive as `u` of (u, w) in ascending u
        // before any (w, v); both sub-sequences are ascending.
        for (id, &(u, v)) in list.iter().enumerate() {
            let (u, v) = (u as usize, v as usize);
            targets[fill[u]] = v as VertexId;
            slot_edge[fill[u]] = id as EdgeId;
            fill[u] += 1;
            targets[fill[v]] = u as VertexId;
            slot_edge[fill[v]] = id as EdgeId;
            fill[v] += 1;
        }
        let edge_set = list.iter().map(|&(u, v)| pack(u, v)).collect();
        Ok(Graph {
            offsets,
            targets,
            slot_edge,
            edges: list,
            edge_set,
            labels,
        })
    }

    /// Parses whitespace-separated `u v` lines. Lines starting with `#` or
    /// `%` and blank lines are skipped. Labels are densified in order of first
    /// appearance.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        Self::read_edge_list(text.as_bytes())
    }

    pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
        let mut ids: HashMap<u64, VertexId> = HashMap::new();
        let mut labels = Vec::new();
        let mut raw = Vec::new();
        let mut intern = |label: u64, labels: &mut Vec<u64>| -> VertexId {
            *ids.entry(label).or_insert_with(|| {
                labels.push(label);
                (labels.len() - 1) as VertexId
            })
        };
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') || t.starts_with('%') {
                continue;
            }
            let mut tok = t.split_whitespace();
            let (Some(a), Some(b), None) = (tok.next(), tok.next(), tok.next()) else {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected two vertex labels, got {t:?}"),
                });
            };
            let parse = |s: &str| {
                s.parse::<u64>().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("{s:?} is not a non-negative integer label"),
                })
            };
            let (a, b) = (parse(a)?, parse(b)?);
            if a == b {
                continue;
            }
            let u = intern(a, &mut labels);
            let v = intern(b, &mut labels);
            raw.push((u, v));
        }
        Self::build(labels, raw)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Original label of each dense id.
    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    fn check(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(u != v && self.edge_set.contains(&pack(u as VertexId, v as VertexId)))
    }

    pub fn neighbors(&self, v: usize) -> Result<&[VertexId]> {
        self.check(v)?;
        Ok(self.adj(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check(v)?;
        Ok(self.deg(v))
    }

    // Unchecked accessors for the counting kernels.

    #[inline]
    pub(crate) fn adj(&self, v: usize) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub(crate) fn adj_edges(&self, v: usize) -> &[EdgeId] {
        &self.slot_edge[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    #[inline]
    pub(crate) fn linked(&self, u: usize, v: usize) -> bool {
        u != v && self.edge_set.contains(&pack(u as VertexId, v as VertexId))
    }

    /// Canonical id of edge `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<EdgeId> {
        if u >= self.n() || v >= self.n() {
            return None;
        }
        let (a, b) = if self.deg(u) <= self.deg(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adj(a)
            .binary_search(&(b as VertexId))
            .ok()
            .map(|i| self.adj_edges(a)[i])
    }

    /// Edges as `(min, max)` pairs in canonical (ascending) order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// One `u v` line per edge, dense ids, `u < v`, ascending.
    pub fn to_edge_list(&self) -> String {
        let mut s = String::with_capacity(self.m() * 12);
        for &(u, v) in &self.edges {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n() as VertexId;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::from_edges(self.n() + other.n(), edges)
    }

    /// Copy with one extra edge.
    pub fn with_edge(&self, u: VertexId, v: VertexId) -> Result<Graph> {
        let edges = self.edges.iter().copied().chain(std::iter::once((u, v)));
        Graph::from_edges(self.n(), edges)
    }

    /// Relabels vertex `v` to `perm[v]`.
    pub fn permuted(&self, perm: &[VertexId]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::Invariant("permutation length mismatch".into()));
        }
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]));
        Graph::from_edges(self.n(), edges)
    }
}

/// Small named graphs used throughout the tests and examples.
pub mod named {
    use super::{Graph, VertexId};

    fn g(n: usize, edges: &[(VertexId, VertexId)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).expect("valid fixture")
    }

    pub fn complete(k: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..k as VertexId {
            for v in u + 1..k as VertexId {
                e.push((u, v));
            }
        }
        g(k, &e)
    }

    pub fn path(k: usize) -> Graph {
        let e: Vec<_> = (1..k as VertexId).map(|v| (v - 1, v)).collect();
        g(k, &e)
    }

    pub fn cycle(k: usize) -> Graph {
        let mut e: Vec<_> = (1..k as VertexId).map(|v| (v - 1, v)).collect();
        e.push((k as VertexId - 1, 0));
        g(k, &e)
    }

    /// K_{1,k} with the center at 0.
    pub fn star(k: usize) -> Graph {
        let e: Vec<_> = (1..=k as VertexId).map(|v| (0, v)).collect();
        g(k + 1, &e)
    }

    /// K4 minus the edge {2, 3}; hubs 0 and 1.
    pub fn diamond() -> Graph {
        g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    }

    /// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
    pub fn two_triangles_bridge() -> Graph {
        g(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
    }

    /// Two copies of K4 sharing the edge {0, 1}.
    pub fn double_k4() -> Graph {
        g(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (0, 5),
                (1, 4),
                (1, 5),
                (4, 5),
            ],
        )
    }

    pub fn empty(n: usize) -> Graph {
        g(n, &[])
    }
}

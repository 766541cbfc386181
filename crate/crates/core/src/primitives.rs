//! Per-vertex, per-edge and global counts of the small motifs that the
//! six-vertex formulas are built from: degrees, wedges, triangles, 4-cycles
//! and 4-cliques, plus the global diamond and tailed-triangle counts.
//!
//! Triangles and 4-cliques are enumerated once each over a degree
//! orientation (every edge points from the lower-ranked to the
//! higher-ranked endpoint, rank = (degree, id)). 4-cycles are enumerated once
//! each from their highest-ranked vertex.

use std::io::Write;

use crate::error::{Error, Result};
use crate::exact::{binom, bump, x, Count, Exact};
use crate::graph::{EdgeId, Graph, VertexId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCounts {
    pub vertex: Vec<u64>,
    pub edge: Vec<u64>,
    pub total: Count,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCliqueCounts {
    pub vertex: Vec<u64>,
    pub edge: Vec<u64>,
    pub total: Count,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourCycleCounts {
    pub vertex: Vec<u64>,
    pub edge: Vec<u64>,
    pub total: Count,
}

/// Every primitive of the counting formulas for one graph.
///
/// Per-edge arrays are indexed by canonical edge id (see [`Graph::edges`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCounts {
    pub degree: Vec<u64>,
    pub wedges: Vec<u64>,
    pub triangles: TriangleCounts,
    pub four_cycles: FourCycleCounts,
    pub four_cliques: FourCliqueCounts,
    pub diamonds: Count,
    pub tailed_triangles: Count,
}

impl LocalCounts {
    pub fn compute(g: &Graph) -> Result<LocalCounts> {
        let degree = (0..g.n()).map(|v| g.deg(v) as u64).collect();
        let wedges = wedge_counts(g)?;
        let triangles = triangle_counts(g)?;
        let four_cliques = four_clique_counts(g)?;
        let four_cycles = four_cycle_counts(g)?;
        let mut lc = LocalCounts {
            degree,
            wedges,
            triangles,
            four_cycles,
            four_cliques,
            diamonds: 0,
            tailed_triangles: 0,
        };
        let (d, tt) = diamond_and_tailed_counts(&lc)?;
        lc.diamonds = d;
        lc.tailed_triangles = tt;
        Ok(lc)
    }

    pub fn n(&self) -> usize {
        self.degree.len()
    }

    pub fn triangle_total(&self) -> Count {
        self.triangles.total
    }

    pub fn four_clique_total(&self) -> Count {
        self.four_cliques.total
    }

    pub fn four_cycle_total(&self) -> Count {
        self.four_cycles.total
    }

    /// Writes `vertex,d,W,T,C4,K4` rows.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let io = |e: csv::Error| Error::Io(e.into());
        w.write_record(["vertex", "d", "W", "T", "C4", "K4"])
            .map_err(io)?;
        for v in 0..self.n() {
            w.write_record([
                v.to_string(),
                self.degree[v].to_string(),
                self.wedges[v].to_string(),
                self.triangles.vertex[v].to_string(),
                self.four_cycles.vertex[v].to_string(),
                self.four_cliques.vertex[v].to_string(),
            ])
            .map_err(io)?;
        }
        w.flush()?;
        Ok(())
    }
}

/// W(i): number of 2-edge paths with `i` as an endpoint.
pub fn wedge_counts(g: &Graph) -> Result<Vec<u64>> {
    (0..g.n())
        .map(|i| {
            let mut w = 0u64;
            for &j in g.adj(i) {
                bump(&mut w, g.deg(j as usize) as u64 - 1, "wedges")?;
            }
            Ok(w)
        })
        .collect()
}

/// W(i, j) = |N(i) ∩ N(j)|, computed on demand.
pub fn pair_wedges(g: &Graph, i: usize, j: usize) -> Result<u64> {
    let a = g.neighbors(i)?;
    let b = g.neighbors(j)?;
    let mut n = 0;
    intersect(a, b, |_, _| n += 1);
    Ok(n)
}

/// Merge-style intersection of two ascending lists; calls `f(ia, ib)` with
/// positions of each common element.
#[inline]
pub(crate) fn intersect<F: FnMut(usize, usize)>(a: &[VertexId], b: &[VertexId], mut f: F) {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                f(i, j);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Degree orientation: for each vertex the neighbors of higher rank, with
/// the corresponding edge ids, in ascending vertex-id order.
pub(crate) struct Oriented {
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
    edges: Vec<EdgeId>,
}

impl Oriented {
    pub(crate) fn new(g: &Graph) -> Oriented {
        let rank = |v: usize| (g.deg(v), v);
        let mut offsets = Vec::with_capacity(g.n() + 1);
        let mut targets = Vec::with_capacity(g.m());
        let mut edges = Vec::with_capacity(g.m());
        offsets.push(0);
        for u in 0..g.n() {
            for (&v, &e) in g.adj(u).iter().zip(g.adj_edges(u)) {
                if rank(v as usize) > rank(u) {
                    targets.push(v);
                    edges.push(e);
                }
            }
            offsets.push(targets.len());
        }
        Oriented {
            offsets,
            targets,
            edges,
        }
    }

    #[inline]
    pub(crate) fn out(&self, u: usize) -> (&[VertexId], &[EdgeId]) {
        let r = self.offsets[u]..self.offsets[u + 1];
        (&self.targets[r.clone()], &self.edges[r])
    }

    pub(crate) fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Calls `f([u, v, w], [e_uv, e_uw, e_vw])` once per triangle.
    pub(crate) fn for_each_triangle<F>(&self, mut f: F) -> Result<()>
    where
        F: FnMut([VertexId; 3], [EdgeId; 3]) -> Result<()>,
    {
        let mut hits: Vec<(usize, usize)> = Vec::new();
        for u in 0..self.n() {
            let (ou, eu) = self.out(u);
            for (&v, &e_uv) in ou.iter().zip(eu) {
                let (ov, ev) = self.out(v as usize);
                hits.clear();
                intersect(ou, ov, |i, j| hits.push((i, j)));
                for &(i, j) in &hits {
                    f([u as VertexId, v, ou[i]], [e_uv, eu[i], ev[j]])?;
                }
            }
        }
        Ok(())
    }

    /// Calls `f(vertices, edges)` once per 4-clique; `edges` lists the six
    /// edge ids in the order uv, uw, vw, ux, vx, wx.
    pub(crate) fn for_each_four_clique<F>(&self, g: &Graph, mut f: F) -> Result<()>
    where
        F: FnMut([VertexId; 4], [EdgeId; 6]) -> Result<()>,
    {
        let mut common: Vec<(VertexId, EdgeId, EdgeId)> = Vec::new();
        for u in 0..self.n() {
            let (ou, eu) = self.out(u);
            for (&v, &e_uv) in ou.iter().zip(eu) {
                let (ov, ev) = self.out(v as usize);
                common.clear();
                intersect(ou, ov, |i, j| common.push((ou[i], eu[i], ev[j])));
                for a in 0..common.len() {
                    for b in a + 1..common.len() {
                        let (w, e_uw, e_vw) = common[a];
                        let (xv, e_ux, e_vx) = common[b];
                        if let Some(e_wx) = g.edge_id(w as usize, xv as usize) {
                            f(
                                [u as VertexId, v, w, xv],
                                [e_uv, e_uw, e_vw, e_ux, e_vx, e_wx],
                            )?;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn sum_exact(vals: &[u64]) -> Exact {
    vals.iter().map(|&v| x(v)).sum()
}

/// T(i), T(e) and the global triangle count.
pub fn triangle_counts(g: &Graph) -> Result<TriangleCounts> {
    let mut vertex = vec![0u64; g.n()];
    let mut edge = vec![0u64; g.m()];
    let mut total = x(0);
    Oriented::new(g).for_each_triangle(|vs, es| {
        for v in vs {
            bump(&mut vertex[v as usize], 1, "T(i)")?;
        }
        for e in es {
            bump(&mut edge[e as usize], 1, "T(e)")?;
        }
        total += 1;
        Ok(())
    })?;
    let total = total.value("T(G)")?;
    // Handshake checks double as the exact-division checks of the
    // per-edge definition.
    let sv = sum_exact(&vertex).value("sum T(i)")?;
    let se = sum_exact(&edge).value("sum T(e)")?;
    if sv != 3 * total || se != 3 * total {
        return Err(Error::Invariant(format!(
            "triangle sums inconsistent: sum T(i)={sv}, sum T(e)={se}, T(G)={total}"
        )));
    }
    Ok(TriangleCounts {
        vertex,
        edge,
        total,
    })
}

/// K4(i), K4(e) and the global 4-clique count.
pub fn four_clique_counts(g: &Graph) -> Result<FourCliqueCounts> {
    let mut vertex = vec![0u64; g.n()];
    let mut edge = vec![0u64; g.m()];
    let mut total = x(0);
    Oriented::new(g).for_each_four_clique(g, |vs, es| {
        for v in vs {
            bump(&mut vertex[v as usize], 1, "K4(i)")?;
        }
        for e in es {
            bump(&mut edge[e as usize], 1, "K4(e)")?;
        }
        total += 1;
        Ok(())
    })?;
    let total = total.value("K4(G)")?;
    let sv = sum_exact(&vertex).value("sum K4(i)")?;
    let se = sum_exact(&edge).value("sum K4(e)")?;
    if sv != 4 * total || se != 6 * total {
        return Err(Error::Invariant(format!(
            "4-clique sums inconsistent: sum K4(i)={sv}, sum K4(e)={se}, K4(G)={total}"
        )));
    }
    Ok(FourCliqueCounts {
        vertex,
        edge,
        total,
    })
}

/// C4(i), C4(e) and the global count of (not necessarily induced) 4-cycles.
///
/// Each cycle is found once from its highest-ranked vertex `u`: the opposite
/// corner `w` and both middle vertices rank below `u`.
pub fn four_cycle_counts(g: &Graph) -> Result<FourCycleCounts> {
    let n = g.n();
    let rank = |v: usize| (g.deg(v), v);
    let mut vertex = vec![0u64; n];
    let mut edge = vec![0u64; g.m()];
    let mut total = x(0);
    let mut cnt = vec![0u64; n];
    let mut touched: Vec<usize> = Vec::new();
    for u in 0..n {
        let ru = rank(u);
        let lower = || {
            g.adj(u)
                .iter()
                .zip(g.adj_edges(u))
                .filter(move |(&v, _)| rank(v as usize) < ru)
        };
        for (&v, _) in lower() {
            for &w in g.adj(v as usize) {
                let w = w as usize;
                if rank(w) < ru {
                    if cnt[w] == 0 {
                        touched.push(w);
                    }
                    cnt[w] += 1;
                }
            }
        }
        for &w in &touched {
            let c = binom(cnt[w], 2).value("C4")?;
            let c = u64::try_from(c).map_err(|_| Error::Overflow("C4(i)"))?;
            total += c;
            bump(&mut vertex[u], c, "C4(i)")?;
            bump(&mut vertex[w], c, "C4(i)")?;
        }
        for (&v, &e_uv) in lower() {
            let v = v as usize;
            for (&w, &e_vw) in g.adj(v).iter().zip(g.adj_edges(v)) {
                let w = w as usize;
                if rank(w) < ru && cnt[w] > 1 {
                    let k = cnt[w] - 1;
                    bump(&mut vertex[v], k, "C4(i)")?;
                    bump(&mut edge[e_uv as usize], k, "C4(e)")?;
                    bump(&mut edge[e_vw as usize], k, "C4(e)")?;
                }
            }
        }
        for &w in &touched {
            cnt[w] = 0;
        }
        touched.clear();
    }
    let total = total.value("C4(G)")?;
    let sv = sum_exact(&vertex).value("sum C4(i)")?;
    let se = sum_exact(&edge).value("sum C4(e)")?;
    if sv != 4 * total || se != 4 * total {
        return Err(Error::Invariant(format!(
            "4-cycle sums inconsistent: sum C4(i)={sv}, sum C4(e)={se}, C4(G)={total}"
        )));
    }
    Ok(FourCycleCounts {
        vertex,
        edge,
        total,
    })
}

/// D(G) = Σ_e C(T(e), 2) and TT(G) = Σ_i T(i)·(d(i) − 2).
pub fn diamond_and_tailed_counts(lc: &LocalCounts) -> Result<(Count, Count)> {
    let d: Exact = lc.triangles.edge.iter().map(|&t| binom(t, 2)).sum();
    let tt: Exact = lc
        .triangles
        .vertex
        .iter()
        .zip(&lc.degree)
        .map(|(&t, &deg)| x(t) * (x(deg) - 2))
        .sum();
    Ok((d.value("D(G)")?, tt.value("TT(G)")?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn wedges_small() {
        assert_eq!(wedge_counts(&path(3)).unwrap(), vec![1, 0, 1]);
        let s = wedge_counts(&star(5)).unwrap();
        assert_eq!(s[0], 0);
        assert!(s[1..].iter().all(|&w| w == 4));
        assert_eq!(wedge_counts(&complete(4)).unwrap(), vec![6; 4]);
    }

    #[test]
    fn pair_wedge_matches_edge_triangles() {
        let g = diamond();
        assert_eq!(pair_wedges(&g, 0, 1).unwrap(), 2);
        assert_eq!(pair_wedges(&g, 2, 3).unwrap(), 2);
        assert_eq!(pair_wedges(&g, 0, 2).unwrap(), 1);
        assert!(pair_wedges(&g, 0, 9).is_err());
    }

    #[test]
    fn triangles_small() {
        let t = triangle_counts(&complete(3)).unwrap();
        assert_eq!((t.vertex, t.edge, t.total), (vec![1; 3], vec![1; 3], 1));
        let d = triangle_counts(&diamond()).unwrap();
        assert_eq!(d.vertex, vec![2, 2, 1, 1]);
        assert_eq!(d.total, 2);
        assert_eq!(triangle_counts(&complete(5)).unwrap().total, 10);
    }

    #[test]
    fn four_cliques_small() {
        let k = four_clique_counts(&complete(4)).unwrap();
        assert_eq!((k.vertex, k.edge, k.total), (vec![1; 4], vec![1; 6], 1));
        let k5 = four_clique_counts(&complete(5)).unwrap();
        assert!(k5.edge.iter().all(|&c| c == 3));
        assert_eq!(k5.total, 5);
        assert_eq!(four_clique_counts(&diamond()).unwrap().total, 0);
    }

    #[test]
    fn four_cycles_small() {
        let c = four_cycle_counts(&cycle(4)).unwrap();
        assert_eq!((c.vertex, c.edge, c.total), (vec![1; 4], vec![1; 4], 1));
        let k = four_cycle_counts(&complete(4)).unwrap();
        assert_eq!(k.total, 3);
        assert!(k.edge.iter().all(|&c| c == 2));
        let t = four_cycle_counts(&star(6)).unwrap();
        assert_eq!(t.total, 0);
        assert!(t.vertex.iter().chain(&t.edge).all(|&c| c == 0));
    }

    #[test]
    fn diamonds_and_tailed() {
        let lc = LocalCounts::compute(&diamond()).unwrap();
        assert_eq!((lc.diamonds, lc.tailed_triangles), (1, 4));
        let lc = LocalCounts::compute(&complete(4)).unwrap();
        assert_eq!(lc.diamonds, 6);
        let lc = LocalCounts::compute(&complete(3)).unwrap();
        assert_eq!((lc.diamonds, lc.tailed_triangles), (0, 0));
    }

    #[test]
    fn csv_dump() {
        let lc = LocalCounts::compute(&complete(4)).unwrap();
        let mut buf = Vec::new();
        lc.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert_eq!(s.lines().next(), Some("vertex,d,W,T,C4,K4"));
        assert_eq!(s.lines().nth(1), Some("0,3,6,3,3,1"));
    }
}

//! Closed-form counts of the seventeen six-vertex motifs that contain a cut
//! vertex or a cut edge.
//!
//! Each count is a single sum over vertices (cut vertex) or over edges (cut
//! edge) of products of local counts, minus fixed multiples of smaller motif
//! counts that the sum picks up from coinciding vertices. `N_k^5` below is
//! the five-vertex count at catalog index `k`; `T`, `D`, `TT`, `K4`, `C4` are
//! the global triangle, diamond, tailed-triangle, 4-clique and 4-cycle
//! counts.
//!
//! Cut vertex, summed over vertices i:
//!
//! ```text
//! N1  = Σ C(d,5)
//! N2  = Σ C(W,2)(d-2) - N2^5 - 2N5^5 - 2N6^5 - N7^5 - 3TT - 6D + 3Σ C(d,3)
//! N9  = Σ T(i) C(d-2,3)
//! N11 = Σ C(T(i),2)(d-4) - N11^5 + 2D
//! N12 = Σ K4(i)(T(i)-3) - 2N19^5
//! N13 = Σ K4(i) C(d-3,2)
//! N14 = Σ K4(i)(W-6) - 3N15^5 - 2N19^5
//! ```
//!
//! Cut edge; `(i,j)` sums each edge once, `<i,j>` both orientations:
//!
//! ```text
//! N3  = Σ(i,j) C(d_i-1,2) C(d_j-1,2) - N6^5 - D
//! N4  = Σ<i,j> C(d_i-1,3)(d_j-1) - 2N4^5
//! N5  = Σ<i,j> C(d_j-1,2)(W_i-2) - 2N4^5 - 2N6^5 - 2N7^5 - 12Σ C(d,4) - 4D - 2TT
//! N6  = Σ(i,j) [W_i-(d_j-1)][W_j-(d_i-1)] - 2N4^5 - 2N5^5 - 2N7^5 - 5N8^5
//!       - 3TT - 3T - 4C4 - 6D
//! N7  = Σ<i,j> (T_i-T_e)(W_j-(d_i-1)) - 4N9^5 - 2N11^5 - 2N12^5 - 8D
//! N8  = Σ<i,j> (T_i-T_e) C(d_j-1,2) - 2N10^5 - 12K4
//! N10 = Σ(i,j) (T_i-T_e)(T_j-T_e) - N16^5 - 6K4
//! N15 = Σ C(K4_e,2) - 3N20^5
//! N16 = Σ K4_e C(T_e-2,2)
//! N17 = Σ<i,j> (T_i-T_e) T_e (d_j-2) - 2N10^5 - 2N16^5 - 24K4
//! ```
//!
//! Every coefficient is checked against brute-force counts; see `ERRATA.md`
//! for the places where these differ from the commonly quoted forms.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::exact::{binom, x, Count, Exact};
use crate::five::FiveMotifVector;
use crate::graph::Graph;
use crate::primitives::LocalCounts;

pub const SIX_MOTIFS: usize = 17;

pub const CUT_VERTEX: [usize; 7] = [1, 2, 9, 11, 12, 13, 14];
pub const CUT_EDGE: [usize; 10] = [3, 4, 5, 6, 7, 8, 10, 15, 16, 17];

const CUT_VERTEX_NEEDS: [usize; 7] = [2, 5, 6, 7, 11, 15, 19];
const CUT_EDGE_NEEDS: [usize; 11] = [4, 5, 6, 7, 8, 9, 10, 11, 12, 16, 20];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixMotifVector {
    counts: [Count; SIX_MOTIFS],
    /// Wall-clock time of the six-vertex evaluation alone.
    pub stage_time: Duration,
}

impl SixMotifVector {
    /// `N<index>`, 1-based.
    pub fn get(&self, index: usize) -> Count {
        self.counts[index - 1]
    }

    pub fn counts(&self) -> &[Count; SIX_MOTIFS] {
        &self.counts
    }

    pub fn from_counts(counts: [Count; SIX_MOTIFS]) -> Self {
        SixMotifVector {
            counts,
            stage_time: Duration::ZERO,
        }
    }
}

struct Five<'a>(&'a FiveMotifVector);

impl Five<'_> {
    fn require(&self, idx: &[usize]) -> Result<()> {
        idx.iter().try_for_each(|&i| self.0.get(i).map(|_| ()))
    }

    fn n(&self, i: usize) -> Exact {
        x(self.0.get(i).expect("checked by require"))
    }
}

fn finish(index: usize, v: Exact) -> Result<(usize, Count)> {
    let v = v.value("six-vertex count")?;
    if v < 0 {
        return Err(Error::NegativeCount { index, value: v });
    }
    Ok((index, v))
}

fn check_sizes(g: &Graph, lc: &LocalCounts) -> Result<()> {
    if lc.n() != g.n() || lc.triangles.edge.len() != g.m() {
        return Err(Error::Invariant(
            "local counts were computed for a different graph".into(),
        ));
    }
    Ok(())
}

/// N1, N2, N9, N11, N12, N13, N14 in one pass over the vertices.
pub fn count_cut_vertex(
    g: &Graph,
    lc: &LocalCounts,
    f5: &FiveMotifVector,
) -> Result<[(usize, Count); 7]> {
    check_sizes(g, lc)?;
    let f = Five(f5);
    f.require(&CUT_VERTEX_NEEDS)?;

    let mut s = [Exact::ZERO; 8];
    for i in 0..g.n() {
        let d = x(lc.degree[i]);
        let w = x(lc.wedges[i]);
        let t = x(lc.triangles.vertex[i]);
        let k4 = x(lc.four_cliques.vertex[i]);
        s[0] += binom(d, 5);
        s[1] += binom(w, 2) * (d - 2);
        s[2] += t * binom(d - 2, 3);
        s[3] += binom(t, 2) * (d - 4);
        s[4] += k4 * (t - 3);
        s[5] += k4 * binom(d - 3, 2);
        s[6] += k4 * (w - 6);
        s[7] += binom(d, 3);
    }
    let dia = x(lc.diamonds);
    let tt = x(lc.tailed_triangles);

    Ok([
        finish(1, s[0])?,
        finish(
            2,
            s[1] - f.n(2) - f.n(5) * 2 - f.n(6) * 2 - f.n(7) - tt * 3 - dia * 6 + s[7] * 3,
        )?,
        finish(9, s[2])?,
        finish(11, s[3] - f.n(11) + dia * 2)?,
        finish(12, s[4] - f.n(19) * 2)?,
        finish(13, s[5])?,
        finish(14, s[6] - f.n(15) * 3 - f.n(19) * 2)?,
    ])
}

/// N3..N8, N10, N15, N16, N17 in one pass over the edges, visiting each
/// edge in both orientations for the ordered sums.
pub fn count_cut_edge(
    g: &Graph,
    lc: &LocalCounts,
    f5: &FiveMotifVector,
) -> Result<[(usize, Count); 10]> {
    check_sizes(g, lc)?;
    let f = Five(f5);
    f.require(&CUT_EDGE_NEEDS)?;

    let deg = &lc.degree;
    let wed = &lc.wedges;
    let tv = &lc.triangles.vertex;
    let mut s = [Exact::ZERO; 10];
    for (e, &(i, j)) in g.edges().iter().enumerate() {
        let (i, j) = (i as usize, j as usize);
        let (di, dj) = (x(deg[i]), x(deg[j]));
        let (wi, wj) = (x(wed[i]), x(wed[j]));
        let te = x(lc.triangles.edge[e]);
        let ke = x(lc.four_cliques.edge[e]);
        // Triangles at one endpoint that avoid the other.
        let (ti, tj) = (x(tv[i]) - te, x(tv[j]) - te);
        let (bi, bj) = (binom(di - 1, 2), binom(dj - 1, 2));
        // Wedges leaving one endpoint that do not pass through the other.
        let (oi, oj) = (wi - (dj - 1), wj - (di - 1));

        s[0] += bi * bj;
        s[1] += binom(di - 1, 3) * (dj - 1) + binom(dj - 1, 3) * (di - 1);
        s[2] += bj * (wi - 2) + bi * (wj - 2);
        s[3] += oi * oj;
        s[4] += ti * oj + tj * oi;
        s[5] += ti * bj + tj * bi;
        s[6] += ti * tj;
        s[7] += binom(ke, 2);
        s[8] += ke * binom(te - 2, 2);
        s[9] += ti * te * (dj - 2) + tj * te * (di - 2);
    }
    let stars4: Exact = deg.iter().map(|&d| binom(d, 4)).sum();

    let tri = x(lc.triangles.total);
    let k4 = x(lc.four_cliques.total);
    let c4 = x(lc.four_cycles.total);
    let dia = x(lc.diamonds);
    let tt = x(lc.tailed_triangles);

    Ok([
        finish(3, s[0] - f.n(6) - dia)?,
        finish(4, s[1] - f.n(4) * 2)?,
        finish(
            5,
            s[2] - f.n(4) * 2 - f.n(6) * 2 - f.n(7) * 2 - stars4 * 12 - dia * 4 - tt * 2,
        )?,
        finish(
            6,
            s[3] - f.n(4) * 2
                - f.n(5) * 2
                - f.n(7) * 2
                - f.n(8) * 5
                - tt * 3
                - tri * 3
                - c4 * 4
                - dia * 6,
        )?,
        finish(7, s[4] - f.n(9) * 4 - f.n(11) * 2 - f.n(12) * 2 - dia * 8)?,
        finish(8, s[5] - f.n(10) * 2 - k4 * 12)?,
        finish(10, s[6] - f.n(16) - k4 * 6)?,
        finish(15, s[7] - f.n(20) * 3)?,
        finish(16, s[8])?,
        finish(17, s[9] - f.n(10) * 2 - f.n(16) * 2 - k4 * 24)?,
    ])
}

/// All seventeen counts; `stage_time` covers only this evaluation.
pub fn count_six(g: &Graph, lc: &LocalCounts, f5: &FiveMotifVector) -> Result<SixMotifVector> {
    let start = Instant::now();
    let mut counts = [0; SIX_MOTIFS];
    for (i, v) in count_cut_vertex(g, lc, f5)? {
        counts[i - 1] = v;
    }
    for (i, v) in count_cut_edge(g, lc, f5)? {
        counts[i - 1] = v;
    }
    Ok(SixMotifVector {
        counts,
        stage_time: start.elapsed(),
    })
}

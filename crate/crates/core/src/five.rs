//! Non-induced counts of the 21 connected five-vertex motifs.
//!
//! Three sources feed a [`FiveMotifVector`]: a reference enumeration of
//! connected 5-vertex subsets (desk-scale graphs only), a scalable engine
//! built from local counts, and an external counts file.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{binom, bump, x, Count, Exact};
use crate::graph::{Graph, VertexId};
use crate::oracle::{five_classes, five_pair_bit};
use crate::primitives::{LocalCounts, Oriented};

pub const FIVE_MOTIFS: usize = 21;

/// Five-vertex indices the six-vertex formulas consume.
pub const REQUIRED: [usize; 14] = [2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 16, 19, 20];

/// Default vertex limit for [`count_five_reference`].
pub const REFERENCE_GUARD: usize = 2000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiveSource {
    Reference,
    Scalable,
    ExternalFile,
}

impl fmt::Display for FiveSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiveSource::Reference => "reference-enumeration",
            FiveSource::Scalable => "scalable-engine",
            FiveSource::ExternalFile => "external-file",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiveMotifVector {
    counts: [Option<Count>; FIVE_MOTIFS],
    pub source: FiveSource,
}

impl FiveMotifVector {
    pub fn empty(source: FiveSource) -> Self {
        FiveMotifVector {
            counts: [None; FIVE_MOTIFS],
            source,
        }
    }

    /// Count at 1-based `index`; an unpopulated entry is an error.
    pub fn get(&self, index: usize) -> Result<Count> {
        self.try_get(index).ok_or(Error::MissingFiveIndex(index))
    }

    pub fn try_get(&self, index: usize) -> Option<Count> {
        index
            .checked_sub(1)
            .and_then(|i| self.counts.get(i).copied().flatten())
    }

    pub fn set(&mut self, index: usize, value: Count) {
        self.counts[index - 1] = Some(value);
    }

    pub fn populated(&self) -> impl Iterator<Item = (usize, Count)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|c| (i + 1, c)))
    }

    /// `index count` lines, the same format [`load_five_counts`] reads.
    pub fn to_text(&self) -> String {
        self.populated()
            .map(|(i, c)| format!("{i} {c}\n"))
            .collect()
    }
}

/// Parses `index count` lines; `#` starts a comment line.
pub fn load_five_counts(text: &str) -> Result<FiveMotifVector> {
    let mut v = FiveMotifVector::empty(FiveSource::ExternalFile);
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let bad = |msg: String| Error::FiveCountsFormat { line: line_no, msg };
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let mut tok = t.split_whitespace();
        let (Some(idx), Some(cnt), None) = (tok.next(), tok.next(), tok.next()) else {
            return Err(bad(format!("expected `index count`, got {t:?}")));
        };
        let idx: usize = idx
            .parse()
            .map_err(|_| bad(format!("{idx:?} is not an index")))?;
        if !(1..=FIVE_MOTIFS).contains(&idx) {
            return Err(bad(format!("index {idx} outside 1..={FIVE_MOTIFS}")));
        }
        if cnt.starts_with('-') {
            return Err(bad(format!("negative count {cnt}")));
        }
        if cnt.is_empty() || !cnt.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(format!("{cnt:?} is not a decimal integer")));
        }
        let cnt: Count = cnt
            .parse()
            .map_err(|_| bad(format!("count {cnt} exceeds the 128-bit range")))?;
        if v.try_get(idx).is_some() {
            return Err(bad(format!("duplicate index {idx}")));
        }
        v.set(idx, cnt);
    }
    Ok(v)
}

/// Exact counts of all 21 motifs by enumerating every connected induced
/// 5-vertex subgraph once and adding the copies of each motif it spans.
pub fn count_five_reference(g: &Graph) -> Result<FiveMotifVector> {
    count_five_reference_guarded(g, REFERENCE_GUARD)
}

pub fn count_five_reference_guarded(g: &Graph, guard: usize) -> Result<FiveMotifVector> {
    if g.n() > guard {
        return Err(Error::SizeGuard {
            what: "five-vertex reference enumeration (use the scalable engine or a counts file)",
            n: g.n(),
            limit: guard,
        });
    }
    let classes = five_classes();
    let mut induced = [0u64; FIVE_MOTIFS + 1];
    for_each_connected_5set(g, |set| {
        let mut mask = 0u16;
        for a in 0..5 {
            for b in a + 1..5 {
                if g.linked(set[a] as usize, set[b] as usize) {
                    mask |= 1 << five_pair_bit(a, b);
                }
            }
        }
        induced[classes.class_of[mask as usize] as usize] += 1;
    });
    let mut v = FiveMotifVector::empty(FiveSource::Reference);
    for h in 0..FIVE_MOTIFS {
        let total: Exact = (0..FIVE_MOTIFS)
            .map(|c| x(induced[c + 1]) * classes.contains[c][h])
            .sum();
        v.set(h + 1, total.value("five-vertex reference count")?);
    }
    Ok(v)
}

/// ESU enumeration: every connected 5-vertex set exactly once, grown from
/// its smallest vertex through exclusive neighbors.
fn for_each_connected_5set<F: FnMut(&[VertexId; 5])>(g: &Graph, mut f: F) {
    fn extend<F: FnMut(&[VertexId; 5])>(
        g: &Graph,
        root: VertexId,
        set: &mut [VertexId; 5],
        len: usize,
        ext: Vec<VertexId>,
        f: &mut F,
    ) {
        if len == 5 {
            f(set);
            return;
        }
        let mut ext = ext;
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in g.adj(w as usize) {
                if u <= root || set[..len].contains(&u) || next.contains(&u) || u == w {
                    continue;
                }
                // exclusive neighborhood: u not adjacent to any current member
                if set[..len].iter().any(|&s| g.linked(s as usize, u as usize)) {
                    continue;
                }
                next.push(u);
            }
            set[len] = w;
            extend(g, root, set, len + 1, next, f);
        }
    }
    for v in 0..g.n() as VertexId {
        let mut set = [v, 0, 0, 0, 0];
        let ext = g
            .adj(v as usize)
            .iter()
            .copied()
            .filter(|&u| u > v)
            .collect();
        extend(g, v, &mut set, 1, ext, &mut f);
    }
}

/// Five-vertex counts from local counts plus a few linear-time passes.
///
/// Populates every index except 17 and 18. The 5-cycle count uses closed
/// 5-walks, which visits each vertex's 2-hop ball; cost is
/// Σ_i Σ_{j within distance 2 of i} d(j).
pub fn count_five_scalable(g: &Graph, lc: &LocalCounts) -> Result<FiveMotifVector> {
    let n = g.n();
    let d = |v: usize| x(lc.degree[v]);
    let tv = &lc.triangles.vertex;
    let te = &lc.triangles.edge;
    let kv = &lc.four_cliques.vertex;
    let ke = &lc.four_cliques.edge;
    let cv = &lc.four_cycles.vertex;
    let ce = &lc.four_cycles.edge;
    let tri = x(lc.triangles.total);
    let k4 = x(lc.four_cliques.total);
    let c4 = x(lc.four_cycles.total);
    let dia = x(lc.diamonds);
    let tt = x(lc.tailed_triangles);

    let mut f = [Exact::ZERO; FIVE_MOTIFS + 1];

    for i in 0..n {
        f[1] += binom(d(i), 4);
        f[4] += x(tv[i]) * binom(d(i) - 2, 2);
        f[7] += x(cv[i]) * (d(i) - 2);
        f[9] += binom(tv[i], 2);
        f[15] += x(kv[i]) * (d(i) - 3);
        // pairs of wedges leaving i through distinct middle vertices
        let mut sq = Exact::ZERO;
        for &b in g.adj(i) {
            let out = d(b as usize) - 1;
            sq += out * out;
        }
        let w = x(lc.wedges[i]);
        f[3] += (w * w - sq).div_exact(2, "4-path pairs")?;
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (u, v) = (u as usize, v as usize);
        let t = x(te[e]);
        f[2] += binom(d(u) - 1, 2) * (d(v) - 1) + binom(d(v) - 1, 2) * (d(u) - 1);
        f[5] += (x(tv[u]) - t) * (d(v) - 1) + (x(tv[v]) - t) * (d(u) - 1);
        f[6] += t * (d(u) - 2) * (d(v) - 2);
        f[11] += binom(t, 2) * (d(u) + d(v) - 6);
        f[12] += t * ce[e];
        f[14] += binom(t, 3);
        f[19] += x(ke[e]) * (t - 2);
    }

    // Triangle pass: Σ_{a ∈ N(u) ∩ N(v)} d(a) per edge, and the strip sum.
    let orient = Oriented::new(g);
    let mut apex_deg = vec![0u64; g.m()];
    let mut strip = Exact::ZERO;
    orient.for_each_triangle(|[a, b, c], [e_ab, e_ac, e_bc]| {
        let (a, b, c) = (a as usize, b as usize, c as usize);
        bump(&mut apex_deg[e_ab as usize], lc.degree[c], "apex degrees")?;
        bump(&mut apex_deg[e_ac as usize], lc.degree[b], "apex degrees")?;
        bump(&mut apex_deg[e_bc as usize], lc.degree[a], "apex degrees")?;
        let (tab, tac, tbc) = (
            x(te[e_ab as usize]) - 1,
            x(te[e_ac as usize]) - 1,
            x(te[e_bc as usize]) - 1,
        );
        strip += tab * tac + tab * tbc + tac * tbc;
        Ok(())
    })?;
    for (e, &s) in apex_deg.iter().enumerate() {
        let t = x(te[e]);
        f[10] += (t - 1) * (x(s) - t * 2);
    }
    f[16] = strip;

    // 4-clique pass: 4-cliques through each triangle.
    let mut per_triangle: HashMap<[VertexId; 3], u32> = HashMap::new();
    orient.for_each_four_clique(g, |[a, b, c, e], _| {
        let mut q = [a, b, c, e];
        q.sort_unstable();
        for skip in 0..4 {
            let mut t = [0; 3];
            let mut k = 0;
            for (j, &v) in q.iter().enumerate() {
                if j != skip {
                    t[k] = v;
                    k += 1;
                }
            }
            *per_triangle.entry(t).or_insert(0) += 1;
        }
        Ok(())
    })?;
    f[20] = per_triangle.values().map(|&c| binom(c, 2)).sum();
    // 5-cliques: two adjacent vertices plus a triangle in their common
    // out-neighborhood.
    let mut k5 = 0u64;
    {
        let mut common: Vec<VertexId> = Vec::new();
        for u in 0..n {
            let (ou, _) = orient.out(u);
            for &v in ou {
                let (ov, _) = orient.out(v as usize);
                common.clear();
                crate::primitives::intersect(ou, ov, |i, _| common.push(ou[i]));
                for a in 0..common.len() {
                    for b in a + 1..common.len() {
                        if !g.linked(common[a] as usize, common[b] as usize) {
                            continue;
                        }
                        for c in b + 1..common.len() {
                            if g.linked(common[a] as usize, common[c] as usize)
                                && g.linked(common[b] as usize, common[c] as usize)
                            {
                                k5 += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    // Ball pass: closed 5-walks and triple common neighborhoods.
    let mut walks5 = Exact::ZERO;
    let mut cnt = vec![0u64; n];
    let mut touched: Vec<usize> = Vec::new();
    for i in 0..n {
        for &a in g.adj(i) {
            for &j in g.adj(a as usize) {
                let j = j as usize;
                if cnt[j] == 0 {
                    touched.push(j);
                }
                cnt[j] += 1;
            }
        }
        for &j in &touched {
            let mut s = 0u64;
            for &k in g.adj(j) {
                s += cnt[k as usize];
            }
            walks5 += x(cnt[j]) * s;
            if j > i {
                f[13] += binom(cnt[j], 3);
            }
        }
        for &j in &touched {
            cnt[j] = 0;
        }
        touched.clear();
    }

    f[2] -= tt * 2;
    f[3] = f[3] - tri * 3 - tt * 2 - c4 * 4;
    f[5] -= dia * 4;
    f[6] -= dia * 2;
    f[7] -= dia * 2;
    f[8] = (walks5 - tri * 30 - tt * 10).div_exact(10, "5-cycles")?;
    f[9] -= dia * 2;
    f[10] -= k4 * 12;
    f[12] -= dia * 4;
    f[16] -= k4 * 12;
    f[21] = x(k5);

    let mut out = FiveMotifVector::empty(FiveSource::Scalable);
    for (idx, val) in f.iter().enumerate().skip(1) {
        if idx == 17 || idx == 18 {
            continue;
        }
        let v = val.value("five-vertex scalable count")?;
        if v < 0 {
            return Err(Error::Invariant(format!(
                "five-vertex count {idx} is negative ({v})"
            )));
        }
        out.set(idx, v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn reference_k5() {
        let v = count_five_reference(&complete(5)).unwrap();
        assert_eq!(v.get(21).unwrap(), 1);
        assert_eq!(v.get(20).unwrap(), 10);
    }

    #[test]
    fn reference_c5() {
        let v = count_five_reference(&cycle(5)).unwrap();
        assert_eq!(v.get(8).unwrap(), 1);
        assert_eq!(v.get(3).unwrap(), 5);
        let total: Count = v.populated().map(|(_, c)| c).sum();
        assert_eq!(total, 6);
    }

    #[test]
    fn reference_empty_graph() {
        let v = count_five_reference(&empty(7)).unwrap();
        assert!(v.populated().all(|(_, c)| c == 0));
        assert_eq!(v.populated().count(), 21);
    }

    #[test]
    fn reference_guard() {
        let g = path(2001);
        assert!(matches!(
            count_five_reference(&g),
            Err(Error::SizeGuard { limit: 2000, .. })
        ));
        assert!(count_five_reference_guarded(&path(50), 50).is_ok());
    }

    #[test]
    fn scalable_star() {
        let g = star(5);
        let lc = LocalCounts::compute(&g).unwrap();
        let v = count_five_scalable(&g, &lc).unwrap();
        assert_eq!(v.get(1).unwrap(), 5);
        for i in [7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 19, 20, 21] {
            assert_eq!(v.get(i).unwrap(), 0, "index {i}");
        }
        assert!(v.try_get(17).is_none());
    }

    #[test]
    fn scalable_k5() {
        let g = complete(5);
        let lc = LocalCounts::compute(&g).unwrap();
        let v = count_five_scalable(&g, &lc).unwrap();
        let r = count_five_reference(&g).unwrap();
        for (i, c) in v.populated() {
            assert_eq!(Some(c), r.try_get(i), "index {i}");
        }
    }

    #[test]
    fn load_file() {
        let v = load_five_counts("8 1\n20 0\n").unwrap();
        assert_eq!(v.get(8).unwrap(), 1);
        assert_eq!(v.get(20).unwrap(), 0);
        assert!(matches!(v.get(2), Err(Error::MissingFiveIndex(2))));
        assert_eq!(v.source, FiveSource::ExternalFile);
    }

    #[test]
    fn load_empty_and_comments() {
        let v = load_five_counts("").unwrap();
        assert_eq!(v.populated().count(), 0);
        let v = load_five_counts(
            "# external tool output\n\n2 170141183460469231731687303715884105727\n",
        )
        .unwrap();
        assert_eq!(v.get(2).unwrap(), i128::MAX);
    }

    #[test]
    fn load_rejects_bad_input() {
        for (text, line) in [
            ("4 -1\n", 1),
            ("1 2\n1 3\n", 2),
            ("1 2.5\n", 1),
            ("22 1\n", 1),
            ("0 1\n", 1),
            ("3\n", 1),
            ("1 2 3\n", 1),
            ("1 999999999999999999999999999999999999999999\n", 1),
        ] {
            match load_five_counts(text) {
                Err(Error::FiveCountsFormat { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let v = count_five_reference(&complete(5)).unwrap();
        let back = load_five_counts(&v.to_text()).unwrap();
        assert_eq!(
            back.populated().collect::<Vec<_>>(),
            v.populated().collect::<Vec<_>>()
        );
    }
}

//! Brute-force ground truth: pattern graphs, automorphism counts, exact
//! non-induced subgraph counts by backtracking, the motif catalogs and the
//! identity-verification harness that checks the closed forms against them.

use std::fmt::{self, Write as _};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::exact::Count;
use crate::five::FiveMotifVector;
use crate::graph::Graph;
use crate::primitives::LocalCounts;
use crate::six::SixMotifVector;

/// Default vertex limit for [`count_noninduced`].
pub const ORACLE_GUARD: usize = 30;

/// A small connected pattern graph on `k ≤ 6` labeled vertices.
#[derive(Clone, Debug)]
pub struct Pattern {
    name: String,
    k: usize,
    edges: Vec<(usize, usize)>,
    aut: OnceLock<u64>,
}

impl PartialEq for Pattern {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name && self.k == o.k && self.edges == o.edges
    }
}

impl Pattern {
    pub fn new(name: impl Into<String>, k: usize, edges: &[(usize, usize)]) -> Result<Pattern> {
        let name = name.into();
        if !(1..=6).contains(&k) {
            return Err(Error::Pattern(format!("{name}: k = {k} outside 1..=6")));
        }
        let mut es = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= k || b >= k || a == b {
                return Err(Error::Pattern(format!("{name}: bad edge ({a}, {b})")));
            }
            es.push((a.min(b), a.max(b)));
        }
        es.sort_unstable();
        let before = es.len();
        es.dedup();
        if es.len() != before {
            return Err(Error::Pattern(format!("{name}: duplicate edge")));
        }
        let p = Pattern {
            name,
            k,
            edges: es,
            aut: OnceLock::new(),
        };
        if !p.is_connected() {
            return Err(Error::Pattern(format!("{}: not connected", p.name)));
        }
        Ok(p)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn mask(&self) -> u32 {
        self.edges
            .iter()
            .fold(0, |m, &(a, b)| m | 1 << pair_bit(a, b))
    }

    fn adjacency(&self) -> [u8; 6] {
        let mut adj = [0u8; 6];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        adj
    }

    fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = 1u8;
        let mut stack = vec![0usize];
        while let Some(v) = stack.pop() {
            for w in 0..self.k {
                if adj[v] >> w & 1 == 1 && seen >> w & 1 == 0 {
                    seen |= 1 << w;
                    stack.push(w);
                }
            }
        }
        seen.count_ones() as usize == self.k
    }

    /// |Aut(p)|, cached.
    pub fn aut(&self) -> u64 {
        *self.aut.get_or_init(|| automorphism_count(self))
    }

    pub fn as_graph(&self) -> Graph {
        Graph::from_edges(
            self.k,
            self.edges.iter().map(|&(a, b)| (a as u32, b as u32)),
        )
        .expect("pattern edges are in range")
    }

    /// True if removing one vertex, or both endpoints of one edge,
    /// disconnects the pattern.
    pub fn has_cut_vertex_or_edge(&self) -> bool {
        let adj = self.adjacency();
        let connected_without = |removed: u8| {
            let keep: Vec<usize> = (0..self.k).filter(|v| removed >> v & 1 == 0).collect();
            let Some(&start) = keep.first() else {
                return true;
            };
            let mut seen = (1u8 << start) | removed;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in 0..self.k {
                    if adj[v] >> w & 1 == 1 && seen >> w & 1 == 0 {
                        seen |= 1 << w;
                        stack.push(w);
                    }
                }
            }
            seen.count_ones() as usize == self.k
        };
        (0..self.k).any(|v| !connected_without(1 << v))
            || self
                .edges
                .iter()
                .any(|&(a, b)| !connected_without((1 << a) | (1 << b)))
    }
}

impl fmt::Display for Pattern {
    /// `name k` header followed by one `a b` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {}", self.name, self.k)?;
        for &(a, b) in &self.edges {
            writeln!(f, "{a} {b}")?;
        }
        Ok(())
    }
}

fn pair_bit(a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    a * 6 + b
}

fn for_each_permutation<F: FnMut(&[usize])>(k: usize, mut f: F) {
    // Heap's algorithm.
    let mut p: Vec<usize> = (0..k).collect();
    let mut c = vec![0usize; k];
    f(&p);
    let mut i = 0;
    while i < k {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Number of vertex permutations mapping the edge set onto itself, by
/// exhaustive check of all k! permutations.
pub fn automorphism_count(p: &Pattern) -> u64 {
    let mask = p.mask();
    let mut count = 0;
    for_each_permutation(p.k, |perm| {
        let image = p
            .edges
            .iter()
            .fold(0u32, |m, &(a, b)| m | 1 << pair_bit(perm[a], perm[b]));
        if image == mask {
            count += 1;
        }
    });
    count
}

/// Number of injective edge-preserving maps `p → g`.
///
/// Pattern vertices are matched in BFS order so that every vertex after the
/// first has an already-matched neighbor; its candidates are drawn from that
/// neighbor's adjacency list.
pub fn count_embeddings(g: &Graph, p: &Pattern) -> Count {
    let k = p.k;
    let padj = p.adjacency();
    let mut order = vec![0usize];
    let mut anchor = vec![usize::MAX];
    let mut placed = 1u8;
    while order.len() < k {
        let (pos, w) = order
            .iter()
            .enumerate()
            .find_map(|(i, &v)| {
                (0..k)
                    .find(|&w| padj[v] >> w & 1 == 1 && placed >> w & 1 == 0)
                    .map(|w| (i, w))
            })
            .expect("pattern is connected");
        placed |= 1 << w;
        order.push(w);
        anchor.push(pos);
    }
    // back[i]: positions j < i whose pattern vertices are adjacent to order[i].
    let back: Vec<Vec<usize>> = (0..k)
        .map(|i| {
            (0..i)
                .filter(|&j| padj[order[i]] >> order[j] & 1 == 1)
                .collect()
        })
        .collect();

    struct Search<'a> {
        g: &'a Graph,
        back: &'a [Vec<usize>],
        anchor: &'a [usize],
        image: Vec<usize>,
        count: Count,
    }
    impl Search<'_> {
        fn extend(&mut self, depth: usize) {
            if depth == self.back.len() {
                self.count += 1;
                return;
            }
            let from = self.image[self.anchor[depth]];
            for &c in self.g.adj(from) {
                let c = c as usize;
                if self.image[..depth].contains(&c) {
                    continue;
                }
                if self.back[depth]
                    .iter()
                    .all(|&j| self.g.linked(self.image[j], c))
                {
                    self.image[depth] = c;
                    self.extend(depth + 1);
                }
            }
        }
    }

    let mut s = Search {
        g,
        back: &back,
        anchor: &anchor,
        image: vec![0; k],
        count: 0,
    };
    for v in 0..g.n() {
        s.image[0] = v;
        s.extend(1);
    }
    s.count
}

/// Number of (not necessarily induced) subgraphs of `g` isomorphic to `p`.
pub fn count_noninduced(g: &Graph, p: &Pattern) -> Result<Count> {
    count_noninduced_guarded(g, p, ORACLE_GUARD)
}

pub fn count_noninduced_guarded(g: &Graph, p: &Pattern, guard: usize) -> Result<Count> {
    if g.n() > guard {
        return Err(Error::SizeGuard {
            what: "oracle count",
            n: g.n(),
            limit: guard,
        });
    }
    let emb = count_embeddings(g, p);
    let aut = Count::from(p.aut());
    if emb % aut != 0 {
        return Err(Error::Invariant(format!(
            "{}: {emb} embeddings not divisible by |Aut| = {aut}",
            p.name
        )));
    }
    Ok(emb / aut)
}

/// Pattern catalogs: the seventeen six-vertex motifs and the twenty-one
/// connected five-vertex motifs, each indexed from 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Catalog {
    pub six: Vec<Pattern>,
    pub five: Vec<Pattern>,
}

// Six-vertex motifs. Each is the single six-vertex shape with coefficient 1
// in the main sum of its formula.
const SIX_SHAPES: [&[(usize, usize)]; 17] = [
    // N1: 5-star.
    &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)],
    // N2: spider with legs 2, 2, 1.
    &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5)],
    // N3: double star, two adjacent centers with two leaves each.
    &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)],
    // N4: spider with legs 2, 1, 1, 1.
    &[(0, 1), (0, 2), (0, 3), (0, 4), (4, 5)],
    // N5: spider with legs 3, 1, 1.
    &[(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)],
    // N6: path on six vertices.
    &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
    // N7: triangle with a 3-edge tail.
    &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5)],
    // N8: triangle joined by an edge to a vertex carrying two leaves.
    &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)],
    // N9: triangle with three pendant edges at one vertex.
    &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (0, 5)],
    // N10: two triangles joined by a bridge.
    &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)],
    // N11: bowtie with a pendant edge at the shared vertex.
    &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5)],
    // N12: 4-clique and triangle sharing one vertex.
    &[
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 4),
        (0, 5),
        (4, 5),
    ],
    // N13: 4-clique with two pendant edges at one vertex.
    &[
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 4),
        (0, 5),
    ],
    // N14: 4-clique with a 2-edge tail.
    &[
        (0, 1),
        (0, 2),
        (0, 3),
        (1, 2),
        (1, 3),
        (2, 3),
        (0, 4),
        (4, 5),
    ],
    // N15: two 4-cliques sharing an edge.
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
    // N16: edge whose endpoints share four neighbors, one pair of which is
    // adjacent.
    &[
        (0, 1),
        (0, 2),
        (0, 3),
        (0, 4),
        (0, 5),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (2, 3),
    ],
    // N17: bowtie with a pendant edge at a non-shared vertex.
    &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (3, 5)],
];

const FIVE_SHAPES: [(&str, &[(usize, usize)]); 21] = [
    ("4-star", &[(0, 1), (0, 2), (0, 3), (0, 4)]),
    ("prong", &[(0, 1), (0, 2), (0, 3), (3, 4)]),
    ("4-path", &[(0, 1), (1, 2), (2, 3), (3, 4)]),
    (
        "forktailed-triangle",
        &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)],
    ),
    (
        "longtailed-triangle",
        &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)],
    ),
    (
        "doubletailed-triangle",
        &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)],
    ),
    ("tailed-4-cycle", &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]),
    ("5-cycle", &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    (
        "hourglass",
        &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)],
    ),
    // Diamond with hubs 1, 2; pendant at the tip 0.
    ("cobra", &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4)]),
    // Diamond with hubs 1, 2; pendant at the hub 1.
    (
        "stingray",
        &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)],
    ),
    (
        "hatted-4-cycle",
        &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)],
    ),
    (
        "3-wedge-collision",
        &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
    ),
    (
        "3-triangle-collision",
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
    ),
    (
        "tailed-4-clique",
        &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)],
    ),
    (
        "triangle-strip",
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)],
    ),
    (
        "diamond-wedge-collision",
        &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)],
    ),
    (
        "4-wheel",
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 1),
        ],
    ),
    (
        "hatted-4-clique",
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (1, 4),
        ],
    ),
    (
        "almost-5-clique",
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
        ],
    ),
    (
        "5-clique",
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
        ],
    ),
];

impl Catalog {
    /// The pinned catalog shipped with the crate.
    pub fn standard() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| {
            let six = SIX_SHAPES
                .iter()
                .enumerate()
                .map(|(i, e)| Pattern::new(format!("N{}", i + 1), 6, e))
                .collect::<Result<_>>()
                .expect("static catalog is valid");
            let five = FIVE_SHAPES
                .iter()
                .enumerate()
                .map(|(i, (_, e))| Pattern::new(format!("F5-{}", i + 1), 5, e))
                .collect::<Result<_>>()
                .expect("static catalog is valid");
            Catalog { six, five }
        })
    }

    /// Descriptive name of a five-vertex motif index.
    pub fn five_name(index: usize) -> Option<&'static str> {
        FIVE_SHAPES.get(index.checked_sub(1)?).map(|(n, _)| *n)
    }

    /// Six-vertex pattern `N<index>`, 1-based.
    pub fn six_pattern(&self, index: usize) -> &Pattern {
        &self.six[index - 1]
    }

    pub fn five_pattern(&self, index: usize) -> &Pattern {
        &self.five[index - 1]
    }

    /// Text form: one `name k` header per pattern followed by its edge pairs,
    /// blocks separated by blank lines.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in self.six.iter().chain(&self.five) {
            let _ = writeln!(s, "{p}");
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Catalog> {
        let mut six = Vec::new();
        let mut five = Vec::new();
        let mut block: Vec<(usize, &str)> = Vec::new();
        let mut flush = |block: &mut Vec<(usize, &str)>| -> Result<()> {
            if block.is_empty() {
                return Ok(());
            }
            let bad = |line: usize, msg: &str| Error::Parse {
                line,
                msg: msg.to_string(),
            };
            let (hl, header) = block[0];
            let mut h = header.split_whitespace();
            let (Some(name), Some(k), None) = (h.next(), h.next(), h.next()) else {
                return Err(bad(hl, "expected `name k` header"));
            };
            let k: usize = k.parse().map_err(|_| bad(hl, "bad vertex count"))?;
            let mut edges = Vec::new();
            for &(ln, l) in &block[1..] {
                let mut t = l.split_whitespace().map(str::parse::<usize>);
                match (t.next(), t.next(), t.next()) {
                    (Some(Ok(a)), Some(Ok(b)), None) => edges.push((a, b)),
                    _ => return Err(bad(ln, "expected `a b` edge")),
                }
            }
            let p = Pattern::new(name, k, &edges)?;
            if name.starts_with("F5-") {
                five.push(p);
            } else {
                six.push(p);
            }
            block.clear();
            Ok(())
        };
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.starts_with('#') {
                continue;
            }
            if t.is_empty() {
                flush(&mut block)?;
            } else {
                block.push((i + 1, t));
            }
        }
        flush(&mut block)?;
        Ok(Catalog { six, five })
    }
}

/// Canonical bit mask of a five-vertex graph, and the catalog index of every
/// connected five-vertex graph keyed by its raw 10-bit edge mask.
pub(crate) struct FiveClasses {
    /// `class_of[mask]`: 1-based catalog index, or 0 if disconnected.
    pub class_of: Vec<u8>,
    /// `contains[c][h]`: copies of motif `h + 1` spanning motif `c + 1`.
    pub contains: [[u32; 21]; 21],
}

const FIVE_PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

pub(crate) fn five_pair_bit(a: usize, b: usize) -> usize {
    let (a, b) = (a.min(b), a.max(b));
    FIVE_PAIRS.iter().position(|&p| p == (a, b)).unwrap()
}

fn canonical5(mask: u16) -> u16 {
    let mut best = u16::MAX;
    for_each_permutation(5, |perm| {
        let mut m = 0u16;
        for (bit, &(a, b)) in FIVE_PAIRS.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                m |= 1 << five_pair_bit(perm[a], perm[b]);
            }
        }
        best = best.min(m);
    });
    best
}

pub(crate) fn five_classes() -> &'static FiveClasses {
    static FC: OnceLock<FiveClasses> = OnceLock::new();
    FC.get_or_init(|| {
        let cat = Catalog::standard();
        let canon_index: Vec<(u16, u8)> = cat
            .five
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let m = p
                    .edges()
                    .iter()
                    .fold(0u16, |m, &(a, b)| m | 1 << five_pair_bit(a, b));
                (canonical5(m), i as u8 + 1)
            })
            .collect();
        let mut by_canon = std::collections::HashMap::new();
        for &(c, i) in &canon_index {
            by_canon.insert(c, i);
        }
        let class_of = (0..1u16 << 10)
            .map(|mask| *by_canon.get(&canonical5(mask)).unwrap_or(&0))
            .collect();
        let mut contains = [[0u32; 21]; 21];
        for (c, host) in cat.five.iter().enumerate() {
            let hg = host.as_graph();
            for (h, pat) in cat.five.iter().enumerate() {
                contains[c][h] = count_noninduced(&hg, pat).expect("tiny") as u32;
            }
        }
        FiveClasses { class_of, contains }
    })
}

/// One formula-versus-oracle disagreement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub graph: String,
    pub family: MotifFamily,
    pub index: usize,
    pub formula: Count,
    pub oracle: Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MotifFamily {
    Five,
    Six,
}

/// One compared value, match or not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub graph: String,
    pub family: MotifFamily,
    pub index: usize,
    pub formula: Count,
    pub oracle: Count,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    pub comparisons: Vec<Comparison>,
    /// Engine failures (e.g. a negative formula value), keyed by graph.
    pub errors: Vec<(String, String)>,
}

impl VerificationReport {
    pub fn mismatches(&self) -> Vec<Mismatch> {
        self.comparisons
            .iter()
            .filter(|c| c.formula != c.oracle)
            .map(|c| Mismatch {
                graph: c.graph.clone(),
                family: c.family,
                index: c.index,
                formula: c.formula,
                oracle: c.oracle,
            })
            .collect()
    }

    pub fn all_match(&self) -> bool {
        self.errors.is_empty() && self.comparisons.iter().all(|c| c.formula == c.oracle)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let mism = self.mismatches();
        if self.all_match() {
            let _ = writeln!(s, "all match ({} comparisons)", self.comparisons.len());
            return s;
        }
        for (g, e) in &self.errors {
            let _ = writeln!(s, "{g}: engine error: {e}");
        }
        for m in &mism {
            let tag = match m.family {
                MotifFamily::Five => "F5-",
                MotifFamily::Six => "N",
            };
            let _ = writeln!(
                s,
                "{}: {tag}{} formula={} oracle={}",
                m.graph, m.index, m.formula, m.oracle
            );
        }
        let _ = writeln!(
            s,
            "{} mismatches, {} errors, {} comparisons",
            mism.len(),
            self.errors.len(),
            self.comparisons.len()
        );
        s
    }

    /// `graph,motif,formula,oracle` rows; motifs are `N<i>` or `F5-<i>`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("graph,motif,formula,oracle\n");
        for c in &self.comparisons {
            let tag = match c.family {
                MotifFamily::Five => "F5-",
                MotifFamily::Six => "N",
            };
            let _ = writeln!(s, "{},{tag}{},{},{}", c.graph, c.index, c.formula, c.oracle);
        }
        s
    }
}

pub type FiveEngine<'a> = &'a dyn Fn(&Graph, &LocalCounts) -> Result<FiveMotifVector>;
pub type SixEngine<'a> =
    &'a dyn Fn(&Graph, &LocalCounts, &FiveMotifVector) -> Result<SixMotifVector>;

/// Compares engine output against brute-force counts on every corpus graph.
///
/// Every populated five-vertex index is compared with the oracle count of
/// the catalog's pattern at that index, and all seventeen six-vertex entries
/// are compared likewise.
pub fn verify_identities(
    corpus: &[(String, Graph)],
    catalog: &Catalog,
    five: FiveEngine<'_>,
    six: SixEngine<'_>,
) -> Result<VerificationReport> {
    let mut report = VerificationReport::default();
    for (name, g) in corpus {
        if g.n() > ORACLE_GUARD {
            return Err(Error::SizeGuard {
                what: "identity verification",
                n: g.n(),
                limit: ORACLE_GUARD,
            });
        }
        let lc = LocalCounts::compute(g)?;
        let f5 = match five(g, &lc) {
            Ok(v) => v,
            Err(e) => {
                report.errors.push((name.clone(), e.to_string()));
                continue;
            }
        };
        for (i, p) in catalog.five.iter().enumerate() {
            if let Some(v) = f5.try_get(i + 1) {
                report.comparisons.push(Comparison {
                    graph: name.clone(),
                    family: MotifFamily::Five,
                    index: i + 1,
                    formula: v,
                    oracle: count_noninduced(g, p)?,
                });
            }
        }
        let n6 = match six(g, &lc, &f5) {
            Ok(v) => v,
            Err(e) => {
                report.errors.push((name.clone(), e.to_string()));
                continue;
            }
        };
        for (i, p) in catalog.six.iter().enumerate() {
            report.comparisons.push(Comparison {
                graph: name.clone(),
                family: MotifFamily::Six,
                index: i + 1,
                formula: n6.get(i + 1),
                oracle: count_noninduced(g, p)?,
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn pat(k: usize, e: &[(usize, usize)]) -> Pattern {
        Pattern::new("t", k, e).unwrap()
    }

    #[test]
    fn automorphisms() {
        assert_eq!(pat(3, &[(0, 1), (1, 2), (0, 2)]).aut(), 6);
        assert_eq!(pat(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]).aut(), 2);
        assert_eq!(pat(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).aut(), 120);
    }

    #[test]
    fn noninduced_small() {
        let tri = pat(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(count_noninduced(&complete(3), &tri).unwrap(), 1);
        let star5 = Catalog::standard().six_pattern(1);
        assert_eq!(count_noninduced(&complete(6), star5).unwrap(), 6);
        let wedge = pat(3, &[(0, 1), (1, 2)]);
        assert_eq!(count_noninduced(&diamond(), &wedge).unwrap(), 8);
    }

    #[test]
    fn guard_enforced() {
        let tri = pat(3, &[(0, 1), (1, 2), (0, 2)]);
        let big = path(31);
        assert!(matches!(
            count_noninduced(&big, &tri),
            Err(Error::SizeGuard {
                n: 31,
                limit: 30,
                ..
            })
        ));
        assert_eq!(count_noninduced_guarded(&big, &tri, 40).unwrap(), 0);
    }

    #[test]
    fn pattern_validation() {
        assert!(Pattern::new("x", 4, &[(0, 1), (2, 3)]).is_err());
        assert!(Pattern::new("x", 3, &[(0, 0), (1, 2)]).is_err());
        assert!(Pattern::new("x", 3, &[(0, 1), (1, 0), (1, 2)]).is_err());
        assert!(Pattern::new("x", 7, &[]).is_err());
    }

    #[test]
    fn catalog_patterns_distinct_and_low_connectivity() {
        let cat = Catalog::standard();
        assert_eq!(cat.six.len(), 17);
        assert_eq!(cat.five.len(), 21);
        let k6 = complete(6);
        for p in &cat.six {
            assert!(p.has_cut_vertex_or_edge(), "{}", p.name());
            assert_eq!(720 % p.aut(), 0);
            // K6 count equals 720 / |Aut|.
            assert_eq!(
                count_noninduced(&k6, p).unwrap(),
                720 / Count::from(p.aut())
            );
        }
        // Mutual containment on equal vertex counts means isomorphic.
        for (i, a) in cat.six.iter().enumerate() {
            for b in &cat.six[i + 1..] {
                let ab = count_noninduced(&a.as_graph(), b).unwrap();
                let ba = count_noninduced(&b.as_graph(), a).unwrap();
                assert!(ab == 0 || ba == 0, "{} ~ {}", a.name(), b.name());
            }
        }
        // Every connected 5-vertex graph lands in exactly one class.
        let fc = five_classes();
        let mut seen = [0usize; 22];
        for &c in &fc.class_of {
            seen[c as usize] += 1;
        }
        assert!(seen[1..].iter().all(|&s| s > 0));
        assert!(!Pattern::new("p", 4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
            .unwrap()
            .has_cut_vertex_or_edge());
    }

    #[test]
    fn catalog_text_round_trip() {
        let cat = Catalog::standard();
        let back = Catalog::from_text(&cat.to_text()).unwrap();
        assert_eq!(&back, cat);
        assert!(Catalog::from_text("N1 3\n0 1\n1 x\n").is_err());
    }
}

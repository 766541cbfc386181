#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use sixmotif::graph::named;
use sixmotif::Graph;

/// Erdős–Rényi G(n, p).
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// G(n, m) by rejection; duplicates are merged so the result has at most m edges.
pub fn gnm(n: usize, m: usize, seed: u64) -> Graph {
    let mut rng = StdRng::seed_from_u64(seed);
    let edges = (0..m).map(|_| {
        let u = rng.gen_range(0..n as u32);
        let mut v = rng.gen_range(0..n as u32 - 1);
        if v >= u {
            v += 1;
        }
        (u, v)
    });
    Graph::from_edges(n, edges.collect::<Vec<_>>()).unwrap()
}

pub fn shuffle_perm(n: usize, seed: u64) -> Vec<u32> {
    let mut p: Vec<u32> = (0..n as u32).collect();
    p.shuffle(&mut StdRng::seed_from_u64(seed));
    p
}

/// The fixed corpus used alongside random graphs.
pub fn named_corpus() -> Vec<(String, Graph)> {
    vec![
        ("K6".into(), named::complete(6)),
        ("P6".into(), named::path(6)),
        ("C6".into(), named::cycle(6)),
        ("K1,5".into(), named::star(5)),
        ("two-triangles-bridge".into(), named::two_triangles_bridge()),
        ("double-K4".into(), named::double_k4()),
    ]
}

/// At least 50 G(12, p) graphs over three densities.
pub fn er_corpus() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for (k, &p) in [0.15, 0.3, 0.5].iter().enumerate() {
        for s in 0..17u64 {
            let seed = 1000 * k as u64 + s;
            out.push((format!("G(12,{p})#{s}"), gnp(12, p, seed)));
        }
    }
    out
}

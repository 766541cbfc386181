mod common;

use proptest::prelude::*;
use sixmotif::primitives::wedge_counts;
use sixmotif::{count_five_scalable, count_six, Count, Graph, LocalCounts, SIX_MOTIFS};

fn six_counts(g: &Graph) -> [Count; SIX_MOTIFS] {
    let lc = LocalCounts::compute(g).unwrap();
    let f5 = count_five_scalable(g, &lc).unwrap();
    *count_six(g, &lc, &f5).unwrap().counts()
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..16, 0.05f64..0.6, any::<u64>()).prop_map(|(n, p, seed)| common::gnp(n, p, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn handshake_identities(g in graph_strategy()) {
        let lc = LocalCounts::compute(&g).unwrap();
        let deg_sum: u64 = lc.degree.iter().sum();
        prop_assert_eq!(deg_sum, 2 * g.m() as u64);
        let w = wedge_counts(&g).unwrap();
        prop_assert_eq!(&w, &lc.wedges);
        let tri = lc.triangles.total;
        prop_assert_eq!(lc.triangles.vertex.iter().map(|&v| v as Count).sum::<Count>(), 3 * tri);
        prop_assert_eq!(lc.triangles.edge.iter().map(|&v| v as Count).sum::<Count>(), 3 * tri);
        let k4 = lc.four_cliques.total;
        prop_assert_eq!(lc.four_cliques.vertex.iter().map(|&v| v as Count).sum::<Count>(), 4 * k4);
        prop_assert_eq!(lc.four_cliques.edge.iter().map(|&v| v as Count).sum::<Count>(), 6 * k4);
        let c4 = lc.four_cycles.total;
        prop_assert_eq!(lc.four_cycles.vertex.iter().map(|&v| v as Count).sum::<Count>(), 4 * c4);
        prop_assert_eq!(lc.four_cycles.edge.iter().map(|&v| v as Count).sum::<Count>(), 4 * c4);
    }

    #[test]
    fn non_negative_and_relabel_invariant(g in graph_strategy(), seed in any::<u64>()) {
        let base = six_counts(&g);
        prop_assert!(base.iter().all(|&c| c >= 0));
        let h = g.permuted(&common::shuffle_perm(g.n(), seed)).unwrap();
        prop_assert_eq!(six_counts(&h), base);
    }

    #[test]
    fn additive_over_disjoint_union(a in graph_strategy(), b in graph_strategy()) {
        let u = a.disjoint_union(&b).unwrap();
        let (ca, cb, cu) = (six_counts(&a), six_counts(&b), six_counts(&u));
        for i in 0..SIX_MOTIFS {
            prop_assert_eq!(cu[i], ca[i] + cb[i], "N{}", i + 1);
        }
    }

    #[test]
    fn monotone_under_edge_insertion(g in graph_strategy(), pick in any::<prop::sample::Index>()) {
        let n = g.n() as u32;
        let missing: Vec<(u32, u32)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u as usize, v as usize).unwrap())
            .collect();
        prop_assume!(!missing.is_empty());
        let (u, v) = missing[pick.index(missing.len())];
        let before = six_counts(&g);
        let after = six_counts(&g.with_edge(u, v).unwrap());
        for i in 0..SIX_MOTIFS {
            prop_assert!(after[i] >= before[i], "N{} dropped", i + 1);
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy()) {
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        let labels = back.labels();
        let mut restored: Vec<(u32, u32)> = back
            .edges()
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (labels[u as usize] as u32, labels[v as usize] as u32);
                (a.min(b), a.max(b))
            })
            .collect();
        restored.sort_unstable();
        prop_assert_eq!(restored.as_slice(), g.edges());
        prop_assert_eq!(six_counts(&back), six_counts(&g));
    }
}

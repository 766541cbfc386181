mod common;

use sixmotif::oracle::{verify_identities, Catalog};
use sixmotif::{count_five_reference, count_five_scalable, count_six, Graph, LocalCounts};

fn corpus() -> Vec<(String, Graph)> {
    let mut c = common::named_corpus();
    c.extend(common::er_corpus());
    c
}

#[test]
fn six_formulas_match_brute_force_with_reference_five() {
    let report = verify_identities(
        &corpus(),
        Catalog::standard(),
        &|g, _| count_five_reference(g),
        &|g, lc, f5| count_six(g, lc, f5),
    )
    .unwrap();
    assert!(report.all_match(), "{}", report.to_text());
    assert!(report.comparisons.len() >= 57 * (17 + 21));
}

#[test]
fn scalable_five_matches_brute_force() {
    let report = verify_identities(
        &corpus(),
        Catalog::standard(),
        &|g, lc| count_five_scalable(g, lc),
        &|g, lc, f5| count_six(g, lc, f5),
    )
    .unwrap();
    assert!(report.all_match(), "{}", report.to_text());
}

#[test]
fn scalable_matches_reference_on_larger_graphs() {
    for seed in 0..12 {
        let g = common::gnm(60, 150 + 40 * seed as usize, seed);
        let lc = LocalCounts::compute(&g).unwrap();
        let fast = count_five_scalable(&g, &lc).unwrap();
        let slow = count_five_reference(&g).unwrap();
        for (i, v) in fast.populated() {
            assert_eq!(Some(v), slow.try_get(i), "index {i}, seed {seed}");
        }
        assert_eq!(fast.populated().count(), 19);
    }
}

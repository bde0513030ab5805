use turan_core::constructions::{
    c3c3_extremal, c3c4_extremal, double_wheel, extremal_graph, small_extremal, turan_candidates, turan_formula,
};
use turan_core::embedding::{is_planar, planarity_embed};
use turan_core::face_blocks::catalog_matches;
use turan_core::graph6;
use turan_core::patterns::{is_free, Pattern};
use turan_core::search::{exact_ex_p, lemma_harness, LemmaId, SearchOptions, Strategy};

const PATTERNS: [Pattern; 4] = [Pattern::C3C3, Pattern::C3C4, Pattern::TWO_C3, Pattern::C3_U_C4];

#[test]
fn exact_values_match_the_closed_forms() {
    let c3c3 = [3, 6, 9, 11, 13, 15];
    let c3c4 = [3, 6, 9, 12, 14, 16];
    let mut prev = 0;
    for (i, n) in (3..=8).enumerate() {
        let r = exact_ex_p(n, &Pattern::C3C3, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, c3c3[i]);
        assert_eq!(r.value, turan_formula(n, &Pattern::C3C3).unwrap());
        assert!(r.value >= prev);
        prev = r.value;
        let r = exact_ex_p(n, &Pattern::C3C4, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, c3c4[i]);
        assert_eq!(r.value, turan_formula(n, &Pattern::C3C4).unwrap());
    }
}

#[test]
fn union_patterns() {
    for n in 3..=8 {
        let r = exact_ex_p(n, &Pattern::TWO_C3, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, turan_formula(n, &Pattern::TWO_C3).unwrap(), "n={n}");
    }
    assert_eq!(exact_ex_p(6, &Pattern::TWO_C3, &SearchOptions::default()).unwrap().value, 11);
    // below 8 both candidates coincide with the search
    for n in 3..=7 {
        let r = exact_ex_p(n, &Pattern::C3_U_C4, &SearchOptions::default()).unwrap();
        assert_eq!(r.value, turan_formula(n, &Pattern::C3_U_C4).unwrap());
    }
    let r = exact_ex_p(8, &Pattern::C3_U_C4, &SearchOptions::default()).unwrap();
    let c = turan_candidates(8, &Pattern::C3_U_C4).unwrap();
    assert_eq!(c.len(), 2);
    assert!(c.iter().any(|f| f.value == r.value));
}

#[test]
fn witnesses_revalidate_and_are_reproducible() {
    for p in PATTERNS {
        for n in 3..=8 {
            let a = exact_ex_p(n, &p, &SearchOptions::default()).unwrap();
            let b = exact_ex_p(n, &p, &SearchOptions::default()).unwrap();
            assert_eq!(a.witness, b.witness);
            assert_eq!((a.value, a.graphs_examined, &a.classes), (b.value, b.graphs_examined, &b.classes));
            assert_eq!(a.witness.m(), a.value);
            assert!(planarity_embed(&a.witness).is_planar());
            assert!(is_free(&a.witness, &p).unwrap());
            assert_eq!(graph6::decode(&graph6::encode(&a.witness)).unwrap(), a.witness);
        }
    }
}

#[test]
fn sweep_cross_checks_augmentation() {
    let sweep = SearchOptions { strategy: Strategy::Sweep, time_limit: None };
    for p in PATTERNS {
        for n in 3..=7 {
            let a = exact_ex_p(n, &p, &SearchOptions::default()).unwrap();
            let b = exact_ex_p(n, &p, &sweep).unwrap();
            assert_eq!(a.value, b.value, "{p} n={n}");
            assert!(is_free(&b.witness, &p).unwrap() && is_planar(&b.witness));
        }
    }
}

#[test]
fn small_extremal_graphs_attain_the_search_value() {
    for p in PATTERNS {
        let top = match p {
            Pattern::Linked(3, 3) | Pattern::Union(3, 3) => 6,
            _ => 7,
        };
        for n in 3..=top {
            let g = small_extremal(n, &p).unwrap();
            let r = exact_ex_p(n, &p, &SearchOptions::default()).unwrap();
            assert_eq!(g.m(), r.value, "{p} n={n}");
            assert!(is_planar(&g) && is_free(&g, &p).unwrap());
        }
    }
    let seven = small_extremal(7, &Pattern::C3C4).unwrap();
    let names: Vec<_> = catalog_matches(&seven).iter().map(|e| e.name).collect();
    assert_eq!(names, vec!["B4_c34"]);
    let six = small_extremal(6, &Pattern::C3C3).unwrap();
    let names: Vec<_> = catalog_matches(&six).iter().map(|e| e.name).collect();
    assert_eq!(names, vec!["B2_c33"]);
}

#[test]
fn constructions_are_certified_up_to_200() {
    for n in 7..=200 {
        let g = c3c3_extremal(n).unwrap();
        assert_eq!(g.m(), turan_formula(n, &Pattern::C3C3).unwrap());
        assert!(is_planar(&g));
        assert!(is_free(&g, &Pattern::C3C3).unwrap() && is_free(&g, &Pattern::TWO_C3).unwrap(), "n={n}");
    }
    for n in 8..=200 {
        let g = c3c4_extremal(n).unwrap();
        assert_eq!(g.m(), turan_formula(n, &Pattern::C3C4).unwrap());
        assert!(is_planar(&g));
        assert!(is_free(&g, &Pattern::C3C4).unwrap() && is_free(&g, &Pattern::C3_U_C4).unwrap(), "n={n}");
    }
    assert_eq!(extremal_graph(9, &Pattern::C3C4).unwrap().m(), 18);
    assert_eq!(exact_ex_p(9, &Pattern::C3C4, &SearchOptions::default()).unwrap().value, 18);
}

#[test]
fn double_wheel_packs_two_cycles() {
    let g = double_wheel(10).unwrap();
    assert_eq!(g.m(), 3 * 10 - 6);
    assert!(is_free(&g, &Pattern::DisjointCycles(3)).unwrap());
    assert!(!is_free(&g, &Pattern::DisjointCycles(2)).unwrap());
}

#[test]
fn harness_outcomes() {
    for l in
        [LemmaId::GlobalF3, LemmaId::Lemma41, LemmaId::Partition, LemmaId::Rv, LemmaId::FaceBlockC33, LemmaId::BadBlockIsolation]
    {
        let r = lemma_harness(l, 7).unwrap();
        assert!(r.passed(), "{l}: {:?}", &r.violations[..r.violations.len().min(3)]);
    }
    // the octahedron and the W5 variant are C3-C4-free blocks with excess +6
    let r = lemma_harness(LemmaId::FaceBlockC34, 7).unwrap();
    let worst: Vec<(usize, i64)> = r.observed_blocks.iter().map(|b| (b.order, b.excess)).collect();
    assert_eq!(worst, vec![(5, 3), (6, 6), (6, 6), (7, 3)]);
    assert!(!r.passed());
    assert!(r.observed_blocks.iter().all(|b| b.reconstructed && !b.catalog.is_empty()));
}

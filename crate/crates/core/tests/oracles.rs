mod common;

use common::{brute_contains, brute_isomorphic, catalog, naive_clique_width};
use cwcert::graph::{are_isomorphic, contains_induced, parse_spec, Graph};
use cwcert::kexpr::{clique_width_exact, verify_expression};

fn named(s: &str) -> Graph {
    parse_spec(s).unwrap().realize().unwrap()
}

#[test]
fn catalog_counts() {
    let counts: Vec<usize> = catalog(7).iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn naive_oracle_known_values() {
    assert_eq!(naive_clique_width(&named("P1"), 4), Some(1));
    assert_eq!(naive_clique_width(&named("4P1"), 4), Some(1));
    assert_eq!(naive_clique_width(&named("K5"), 4), Some(2));
    assert_eq!(naive_clique_width(&named("P4"), 4), Some(3));
    assert_eq!(naive_clique_width(&named("C5"), 4), Some(3));
    assert_eq!(naive_clique_width(&named("P4"), 2), None);
}

#[test]
fn solver_matches_naive_oracle_up_to_six() {
    for level in catalog(6).iter().skip(1) {
        for g in level {
            let (k, e) = clique_width_exact(g, 6).unwrap().unwrap();
            assert!(verify_expression(&e, g));
            assert_eq!(Some(k), naive_clique_width(g, 6), "{:?}", g.edges());
        }
    }
}

#[test]
fn search_and_isomorphism_match_brute_force() {
    let five = &catalog(5)[5];
    let small = catalog(4);
    for g in five {
        for h in small.iter().flatten() {
            assert_eq!(contains_induced(g, h).is_some(), brute_contains(g, h));
        }
    }
    for (i, g) in five.iter().enumerate() {
        for h in &five[i..] {
            assert_eq!(are_isomorphic(g, h), brute_isomorphic(g, h));
        }
    }
}

#[test]
fn clique_width_grows_along_wall_prefixes() {
    let w = cwcert::constructions::wall(2).unwrap();
    let mut last = 0;
    for k in 1..=10 {
        let prefix: Vec<usize> = (0..k).collect();
        let h = w.induced_subgraph(&prefix).unwrap();
        let (cw, _) = clique_width_exact(&h, 6).unwrap().unwrap();
        assert!(cw >= last, "prefix {k}: {cw} < {last}");
        last = cw;
    }
    assert!(last >= 3);
}

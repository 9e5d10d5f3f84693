mod common;

use common::*;
use knotarc::diagram::{detect_tangle_structure, parse_pd, simplify_r1r2, PlanarKnotDiagram, TangleKind};
use knotarc::filtered::*;
use knotarc::invariants::{kauffman_polynomial, kauffman_polynomial_with_budget};
use knotarc::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn f_of_grid(c: &Construction) -> knotarc::LaurentPoly2 {
    kauffman_polynomial_with_budget(&c.grid.to_planar_diagram().unwrap(), 24).unwrap()
}

fn conservation_holds(d: &PlanarKnotDiagram, c: &Construction) -> bool {
    let total = d.crossing_count() + 2;
    c.violations == 0 && c.trace.iter().all(|r| r.regions + r.spokes + r.removals == total)
}

/// Random prime diagrams from braid closures, simplified first.
fn random_prime(rng: &mut ChaCha8Rng, max: usize) -> PlanarKnotDiagram {
    loop {
        let d = simplify_r1r2(&random_braid_knot(rng, max));
        if d.crossing_count() >= 3 && d.is_prime_diagram() {
            return d;
        }
    }
}

#[test]
fn closure_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for d in [pd(TREFOIL), knot_8n3(), pd(K6_2)] {
        let t = build_good_spanning_tree(&d, &SearchOptions::default()).unwrap();
        assert_eq!(t.len(), d.crossing_count() - 1);
        t.validate(&d).unwrap();
        for _ in 0..5 {
            let p = t.prefix(rng.gen_range(0..=t.len()));
            let inside = p.vertex_mask(&d);
            let want: Vec<usize> = (0..d.edge_count())
                .filter(|&e| {
                    let (a, b) = d.edge_endpoints(e);
                    inside[a] && inside[b]
                })
                .collect();
            assert_eq!(closure(&d, &p), want);
            for &e in &p.edges {
                assert!(want.contains(&e));
            }
        }
    }
}

#[test]
fn loop_at_root_is_in_closure() {
    let d = parse_pd("X[1,1,2,2]").unwrap();
    let cl = closure(&d, &FilteredTree::new(0));
    assert_eq!(cl.len(), 2);
}

#[test]
fn prefixes_must_be_trees() {
    let d = pd(TREFOIL);
    // the trefoil joins every pair of crossings twice
    let at0 = d.edges_at(0);
    let a = at0[0];
    let b = *at0[1..].iter().find(|&&x| x != a && d.other_end(x, 0) == d.other_end(a, 0)).unwrap();
    FilteredTree { root: 0, edges: vec![a] }.validate(&d).unwrap();
    assert!(FilteredTree { root: 0, edges: vec![a, b] }.validate(&d).is_err());
    let far = (0..d.edge_count()).find(|&e| {
        let (x, y) = d.edge_endpoints(e);
        x != 0 && y != 0
    });
    if let Some(e) = far {
        assert!(FilteredTree { root: 0, edges: vec![e] }.validate(&d).is_err());
        assert!(classify_extension(&d, &FilteredTree::new(0), e).is_err());
    }
    assert!(FilteredTree::new(7).validate(&d).is_err());
}

#[test]
fn spanning_closure_has_a_bad_edge() {
    for d in [pd(TREFOIL), pd(FIGURE_EIGHT), pd(K5_2), knot_8n3()] {
        let t = build_good_spanning_tree(&d, &SearchOptions::default()).unwrap();
        assert!(t.is_spanning(&d));
        assert!(new_closure_edges(&d, &t).iter().any(|&(_, l)| l == EdgeLabel::Bad));
        for (f, l) in new_closure_edges(&d, &t) {
            assert_eq!(classify_good_bad(&d, &t, f).unwrap(), l);
        }
        assert!(classify_good_bad(&d, &t, t.edges[0]).is_err());
    }
}

#[test]
fn trefoil_extensions() {
    let d = pd(TREFOIL);
    for r in 0..3 {
        let t = FilteredTree::new(r);
        assert!(find_good_extensions(&d, &t).unwrap().len() >= 2);
    }
    let t = build_good_spanning_tree(&d, &SearchOptions::default()).unwrap();
    assert_eq!(t.len(), 2);
    assert!(is_good(&d, &t));
    assert!(find_good_extensions(&d, &t).unwrap().is_empty());
}

#[test]
fn detour_needs_a_bad_extension() {
    let d = knot_8n3();
    let t = FilteredTree::new(0);
    let good = find_good_extensions(&d, &t).unwrap();
    assert!(matches!(find_detour(&d, &t, good[0]), Err(Error::InvalidArgument(_))));
}

#[test]
fn detours_are_good() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut seen = 0;
    for _ in 0..60 {
        let d = random_prime(&mut rng, 10);
        let Ok(t) = build_good_spanning_tree(&d, &SearchOptions::default()) else { continue };
        for i in 0..t.len().saturating_sub(2) {
            let p = t.prefix(i);
            let inside = p.vertex_mask(&d);
            for e in 0..d.edge_count() {
                let (a, b) = d.edge_endpoints(e);
                if inside[a] == inside[b] {
                    continue;
                }
                let class = classify_extension(&d, &p, e).unwrap();
                if !matches!(class, ExtensionClass::B2 | ExtensionClass::B3) {
                    continue;
                }
                if let Ok(seq) = find_detour(&d, &p, e) {
                    seen += 1;
                    let mut q = p.clone();
                    for x in seq {
                        q = q.extended(x);
                    }
                    q.validate(&d).unwrap();
                    assert!(is_good(&d, &q), "{} {:?} {e}", d.to_pd(), p);
                }
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn alternating_has_no_doubly_good_edge() {
    let d = pd(K6_2);
    let t = build_good_spanning_tree(&d, &SearchOptions::default()).unwrap();
    for i in 0..=t.len() {
        let p = t.prefix(i);
        for (f, _) in new_closure_edges(&d, &p) {
            assert!(!detect_doubly_good(&d, &p, f));
        }
    }
}

#[test]
fn c_plus_two_on_small_knots() {
    for s in [TREFOIL, FIGURE_EIGHT, K5_1, K5_2, K6_2] {
        let d = pd(s);
        let t = build_good_spanning_tree(&d, &SearchOptions::default()).unwrap();
        let c = arc_presentation_from_tree(&d, &t).unwrap();
        assert_eq!(c.arc_count(), d.crossing_count() + 2);
        assert!(c.grid.is_valid());
        assert!(conservation_holds(&d, &c));
        assert_eq!(f_of_grid(&c), kauffman_polynomial(&d).unwrap(), "{s}");
    }
    let d = knot_8n3();
    let t = build_good_spanning_tree(&d, &SearchOptions::default()).unwrap();
    let c = arc_presentation_from_tree(&d, &t).unwrap();
    assert_eq!(c.arc_count(), 10);
    assert_eq!(f_of_grid(&c), kauffman_polynomial(&d).unwrap());
}

#[test]
fn c_plus_two_on_random_prime_diagrams() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..25 {
        let d = random_prime(&mut rng, 10);
        let t = build_good_spanning_tree(&d, &SearchOptions::default()).unwrap();
        let c = arc_presentation_from_tree(&d, &t).unwrap();
        assert_eq!(c.arc_count(), d.crossing_count() + 2, "{}", d.to_pd());
        assert!(conservation_holds(&d, &c));
        assert_eq!(f_of_grid(&c), kauffman_polynomial_with_budget(&d, 24).unwrap(), "{}", d.to_pd());
    }
}

#[test]
fn tree_must_span() {
    let d = pd(FIGURE_EIGHT);
    assert!(arc_presentation_from_tree(&d, &FilteredTree::new(0)).is_err());
}

#[test]
fn nonalternating_constructions() {
    for d in [knot_8n3(), knot_8n2(), pretzel_8n3()] {
        let c = construct_nonalternating(&d).unwrap();
        assert_eq!(c.arc_count(), 8);
        assert_eq!(c.removals, 2);
        assert!(c.grid.is_valid());
        assert!(conservation_holds(&d, &c));
        assert_eq!(f_of_grid(&c), kauffman_polynomial(&d).unwrap());
    }
    assert!(matches!(construct_nonalternating(&pd(TREFOIL)), Err(Error::InvalidArgument(_))));
}

#[test]
fn conditions_and_minus_one() {
    let d = knot_8n3();
    let tc = detect_tangle_structure(&d);
    let r = check_theorem_conditions(&d, &tc).unwrap();
    assert!(r.passed);
    let chosen = &r.labelings[r.chosen.unwrap()];
    assert!(chosen.conditions.iter().all(|c| c.passed));
    let c = construct_minus_one(&d, &tc, &r).unwrap();
    assert_eq!(c.arc_count(), 7);
    assert!(c.grid.is_valid());
    assert_eq!(f_of_grid(&c), kauffman_polynomial(&d).unwrap());

    let d2 = knot_8n2();
    let tc2 = detect_tangle_structure(&d2);
    let r2 = check_theorem_conditions(&d2, &tc2).unwrap();
    assert!(!r2.passed);
    assert!(!r2.labelings.is_empty());
    assert!(r2.labelings.iter().all(|l| l.conditions.iter().any(|c| !c.passed)));
    assert!(construct_minus_one(&d2, &tc2, &r2).is_err());
    // the report of one diagram does not license another
    assert!(construct_minus_one(&d2, &tc2, &r).is_err());

    let alt = detect_tangle_structure(&pd(TREFOIL));
    assert_eq!(alt.kind, TangleKind::Alternating);
    assert!(check_theorem_conditions(&pd(TREFOIL), &alt).is_err());
}

#[test]
fn reports_serialize() {
    let d = knot_8n3();
    let tc = detect_tangle_structure(&d);
    let r = check_theorem_conditions(&d, &tc).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["passed"], true);
    let first = &v["labelings"][0]["conditions"][0];
    assert!(first["name"].is_string() && first["passed"].is_boolean());
    assert!(first["faces"].is_array() && first["vertices"].is_array() && first["edges"].is_array());
}

mod common;

use common::*;
use knotarc::grid::{ArcPresentation, Corner, RenderFormat, Violation};
use knotarc::invariants::{kauffman_polynomial, kauffman_polynomial_with_budget, v_spread};
use knotarc::{Error, GridDiagram, LaurentPoly2};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn f(g: &GridDiagram) -> LaurentPoly2 {
    kauffman_polynomial_with_budget(&g.to_planar_diagram().unwrap(), 16).unwrap()
}

#[test]
fn validation_examples() {
    assert!(trefoil_grid().is_valid());
    assert!(GridDiagram::new(vec![[0, 1], [0, 1]]).unwrap().is_valid());
    let squares = GridDiagram::from_columns_unchecked(vec![[0, 1], [2, 3], [0, 1], [2, 3]]);
    assert_eq!(squares.validate(), vec![Violation::Components { count: 2 }]);
    let bad = GridDiagram::from_columns_unchecked(vec![[0, 0], [0, 1], [1, 2]]);
    let v = bad.validate();
    assert!(v.contains(&Violation::DegenerateColumn { column: 0 }));
    assert!(v.contains(&Violation::RowMultiplicity { row: 0, count: 3 }));
    assert!(v.contains(&Violation::RowMultiplicity { row: 2, count: 1 }));
    assert_eq!(GridDiagram::from_columns_unchecked(vec![[0, 1]]).validate()[0], Violation::TooSmall { n: 1 });
    assert!(matches!(GridDiagram::new(vec![[0, 5], [0, 1]]), Err(Error::InvalidGrid(_))));
}

#[test]
fn planar_diagram_crossings() {
    let d = trefoil_grid().to_planar_diagram().unwrap();
    assert_eq!(d.crossing_count(), 3);
    assert_eq!(interleavings(&trefoil_grid()), 3);
    assert_eq!(d.component_count(), 1);
    assert_eq!(GridDiagram::unknot().to_planar_diagram().unwrap().crossing_count(), 0);
    assert_eq!(f(&trefoil_grid()), kauffman_polynomial(&pd(TREFOIL)).unwrap());
}

#[test]
fn random_grids_match_interleaving_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=10 {
        for _ in 0..20 {
            let g = random_grid(&mut rng, n);
            let d = g.to_planar_diagram().unwrap();
            assert_eq!(d.crossing_count(), interleavings(&g), "{:?}", g.columns());
            assert_eq!(d.component_count(), 1);
        }
    }
}

#[test]
fn arc_presentation_round_trip() {
    let a = ArcPresentation { pages: TREFOIL_GRID.to_vec() };
    let g = GridDiagram::from_arc_presentation(&a).unwrap();
    assert_eq!(g, trefoil_grid());
    assert_eq!(g.to_arc_presentation(), a);
    let u = GridDiagram::from_arc_presentation(&ArcPresentation { pages: vec![[0, 1], [1, 0]] }).unwrap();
    assert_eq!(u.size(), 2);
    assert!(
        GridDiagram::from_arc_presentation(&ArcPresentation { pages: vec![[0, 1], [2, 3], [0, 1], [2, 3]] }).is_err()
    );
}

#[test]
fn stabilization_and_translation_keep_f() {
    let g = trefoil_grid();
    let f0 = f(&g);
    for c in 0..5 {
        for &r in &g.columns()[c] {
            for k in Corner::ALL {
                let s = g.stabilize(c, r, k).unwrap();
                assert_eq!(s.size(), 6);
                assert!(s.is_valid());
                assert_eq!(f(&s), f0, "column {c} row {r} {k:?}");
            }
        }
    }
    for k in 0..5 {
        assert_eq!(f(&g.rotate_columns(k)), f0);
        assert_eq!(f(&g.rotate_rows(k)), f0);
    }
    assert!(g.stabilize(0, 1, Corner::NE).is_err());
    let u = GridDiagram::unknot().stabilize(0, 0, Corner::SW).unwrap();
    assert_eq!(u.size(), 3);
    assert_eq!(f(&u), LaurentPoly2::one());
    let once = g.stabilize(0, 0, Corner::NE).unwrap();
    let twice = once.stabilize(3, once.columns()[3][1], Corner::SW).unwrap();
    assert!(twice.is_valid());
    assert_eq!(f(&twice), f0);
}

#[test]
fn connected_sums() {
    let t = trefoil_grid();
    let ft = f(&t);
    let u = GridDiagram::unknot();
    let s = u.connected_sum(&t).unwrap();
    assert_eq!(s.size(), 5);
    assert_eq!(f(&s), ft);
    let tt = t.connected_sum(&t).unwrap();
    assert_eq!(tt.size(), 8);
    assert_eq!(f(&tt), &ft * &ft);
    assert_eq!(v_spread(&f(&tt)).unwrap(), 6);
    for p in 0..5 {
        for q in 0..5 {
            let s = t.connected_sum_at(p, &t.reflect(), q).unwrap();
            assert_eq!(s.size(), 8);
            assert_eq!(f(&s), &ft * &ft.mirror(), "{p} {q}");
        }
    }
    assert!(t.connected_sum(&GridDiagram::from_columns_unchecked(vec![[0, 0]])).is_err());
}

#[test]
fn connected_sum_spread_adds() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..12 {
        let a = random_grid(&mut rng, 5);
        let b = random_grid(&mut rng, 5);
        let (fa, fb) = (f(&a), f(&b));
        let s = a.connected_sum(&b).unwrap();
        assert_eq!(s.size(), 8);
        let fs = f(&s);
        assert_eq!(fs, &fa * &fb);
        assert_eq!(v_spread(&fs).unwrap(), v_spread(&fa).unwrap() + v_spread(&fb).unwrap());
    }
}

#[test]
fn text_format() {
    let g = trefoil_grid();
    let text = "# trefoil\ngrid 5\ncol 0: 0 2\ncol 1: 1 3\ncol 2: 2 4\ncol 3: 0 3\ncol 4: 1 4\n";
    assert_eq!(GridDiagram::parse(text).unwrap(), g);
    assert_eq!(GridDiagram::parse(&g.to_text()).unwrap(), g);
    assert_eq!(GridDiagram::parse_any(&g.to_json()).unwrap(), g);
    assert!(matches!(GridDiagram::parse(""), Err(Error::Syntax(_))));
    assert!(matches!(GridDiagram::parse("grid 2\ncol 0: 0 1\n"), Err(Error::Syntax(_))));
    assert!(matches!(GridDiagram::parse("grid 2\ncol 0: 0 1\ncol 1: 0 0\n"), Err(Error::InvalidGrid(_))));
    let raw = GridDiagram::parse_unchecked("grid 2\ncol 0: 0 1\ncol 1: 0 0\n").unwrap();
    assert!(!raw.is_valid());
}

#[test]
fn rendering() {
    assert_eq!(GridDiagram::unknot().render(RenderFormat::Ascii), "o-o\no-o\n");
    let svg = trefoil_grid().render(RenderFormat::Svg);
    assert_eq!(svg.matches("<line").count(), 15);
    assert!(svg.contains(r#"viewBox="0 0 30 30""#));
}

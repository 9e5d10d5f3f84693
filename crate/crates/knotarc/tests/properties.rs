mod common;

use common::*;
use knotarc::diagram::{r3_admissible, reidemeister2_insert, reidemeister3, simplify_r1r2, PlanarKnotDiagram};
use knotarc::filtered::{build_good_spanning_tree, cutting_arcs, is_good, new_closure_edges, EdgeLabel, SearchOptions};
use knotarc::grid::Corner;
use knotarc::invariants::kauffman_polynomial_with_budget;
use knotarc::LaurentPoly2;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BUDGET: usize = 20;

fn f(d: &PlanarKnotDiagram) -> LaurentPoly2 {
    kauffman_polynomial_with_budget(d, BUDGET).unwrap()
}

fn random_r2(rng: &mut ChaCha8Rng, d: &PlanarKnotDiagram) -> Option<PlanarKnotDiagram> {
    let faces: Vec<_> = d.faces().into_iter().filter(|f| f.len() >= 2).collect();
    let face = faces.choose(rng)?;
    let i = rng.gen_range(0..face.len());
    let j = rng.gen_range(0..face.len());
    if d.edge_of(face.darts[i]) == d.edge_of(face.darts[j]) {
        return None;
    }
    reidemeister2_insert(d, face.darts[i], face.darts[j], rng.gen_bool(0.5)).ok()
}

fn random_r3(rng: &mut ChaCha8Rng, d: &PlanarKnotDiagram) -> Option<PlanarKnotDiagram> {
    let faces: Vec<_> = d.faces().into_iter().filter(|f| r3_admissible(d, f)).collect();
    reidemeister3(d, faces.choose(rng)?).ok()
}

fn prime_diagram(rng: &mut ChaCha8Rng, max: usize) -> PlanarKnotDiagram {
    loop {
        let d = simplify_r1r2(&random_braid_knot(rng, max));
        if d.crossing_count() >= 3 && d.crossing_count() <= max && d.is_prime_diagram() {
            return d;
        }
    }
}

fn laurent() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-4i32..=4, -3i32..=3, -5i64..=5), 0..6).prop_map(LaurentPoly2::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn reidemeister_moves_keep_f(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_braid_knot(&mut rng, 8);
        let f0 = f(&d);
        let mut cur = d;
        for _ in 0..3 {
            let next = if rng.gen_bool(0.5) { random_r3(&mut rng, &cur) } else { None };
            let next = next.or_else(|| random_r2(&mut rng, &cur));
            if let Some(n) = next {
                prop_assert_eq!(n.faces().len(), n.crossing_count() + 2);
                cur = n;
            }
            if let Some(n) = random_r3(&mut rng, &cur) {
                cur = n;
            }
        }
        prop_assert_eq!(f(&cur), f0);
    }

    #[test]
    fn stabilization_keeps_f(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_grid(&mut rng, n);
        let f0 = f(&g.to_planar_diagram().unwrap());
        let c = rng.gen_range(0..n);
        let r = g.columns()[c][rng.gen_range(0..2)];
        let k = *Corner::ALL.choose(&mut rng).unwrap();
        let s = g.stabilize(c, r, k).unwrap();
        prop_assert_eq!(s.size(), n + 1);
        prop_assert_eq!(f(&s.to_planar_diagram().unwrap()), f0.clone());
        let shift = rng.gen_range(0..n);
        prop_assert_eq!(f(&g.rotate_columns(shift).to_planar_diagram().unwrap()), f0.clone());
        prop_assert_eq!(f(&g.rotate_rows(shift).to_planar_diagram().unwrap()), f0);
    }

    #[test]
    fn grid_crossings_match_interleavings(seed in any::<u64>(), n in 2usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_grid(&mut rng, n);
        let d = g.to_planar_diagram().unwrap();
        prop_assert_eq!(d.crossing_count(), interleavings(&g));
        prop_assert_eq!(d.faces().len(), d.crossing_count() + 2);
    }

    #[test]
    fn relabeling_keeps_f_and_edge_classes(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_braid_knot(&mut rng, 8);
        let c = d.crossing_count();
        let mut perm: Vec<usize> = (0..c).collect();
        perm.shuffle(&mut rng);
        let rot2: Vec<bool> = (0..c).map(|_| rng.gen_bool(0.5)).collect();
        let r = d.relabel(&perm, &rot2);
        prop_assert_eq!(f(&r), f(&d));
        let mut a: Vec<_> = d.classify_edges();
        let mut b: Vec<_> = r.classify_edges();
        a.sort_by_key(|k| *k as u8);
        b.sort_by_key(|k| *k as u8);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn laurent_ring_laws(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!((&a * &b).mirror(), &a.mirror() * &b.mirror());
        prop_assert_eq!(&a * &LaurentPoly2::one(), a.clone());
        let round: LaurentPoly2 = serde_json::from_str(&serde_json::to_string(&a).unwrap()).unwrap();
        prop_assert_eq!(round, a);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn goodness_is_prefix_monotone(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = prime_diagram(&mut rng, 8);
        let t = build_good_spanning_tree(&d, &SearchOptions::default()).unwrap();
        prop_assert!(is_good(&d, &t));
        let spanning = d.crossing_count() - 1;
        for i in 0..=t.len() {
            let p = t.prefix(i);
            prop_assert!(is_good(&d, &p));
            if i < spanning {
                prop_assert!(cutting_arcs(&d, &p).is_empty());
                prop_assert!(new_closure_edges(&d, &p).iter().all(|&(_, l)| l != EdgeLabel::Bad));
            }
        }
    }
}

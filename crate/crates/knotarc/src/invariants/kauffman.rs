//! Two-variable Kauffman polynomial by the descending-diagram skein.
//!
//! `Lambda` is the regular isotopy invariant with `Lambda(O) = 1`, curls
//! weighted `v^{+-1}`, and `Lambda(S+) + Lambda(S-) = z (Lambda(A) + Lambda(B))`.
//! The ambient invariant is `F = v^{-w} Lambda`.

use std::collections::HashMap;

use crate::diagram::darts::{canonical_code, pass_through, pieces, smooth_a, smooth_b, splice, switch};
use crate::diagram::{crossing_of, is_over_slot, rot, slot_of, straight, Dart, PlanarKnotDiagram};
use crate::error::{Error, Result};
use crate::invariants::LaurentPoly2;

/// Largest simplified crossing count evaluated unless overridden.
pub const DEFAULT_BUDGET: usize = 12;

/// Budget from `KNOTARC_BUDGET`, falling back to [`DEFAULT_BUDGET`].
pub fn budget_from_env() -> usize {
    std::env::var("KNOTARC_BUDGET").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_BUDGET)
}

pub fn kauffman_polynomial(d: &PlanarKnotDiagram) -> Result<LaurentPoly2> {
    kauffman_polynomial_with_budget(d, budget_from_env())
}

pub fn kauffman_polynomial_with_budget(d: &PlanarKnotDiagram, budget: usize) -> Result<LaurentPoly2> {
    let (p, curl, loops) = simplify(d.partners().to_vec());
    let c = p.len() / 4;
    if c > budget {
        return Err(Error::BudgetExceeded { crossings: c, budget });
    }
    let mut ev = Evaluator::default();
    let lambda = ev.link(p, loops).shift(curl, 0);
    Ok(lambda.shift(-d.writhe(), 0))
}

#[derive(Default)]
struct Evaluator {
    memo: HashMap<Vec<u32>, LaurentPoly2>,
}

impl Evaluator {
    /// Lambda of a link diagram together with `loops` free circles.
    fn link(&mut self, p: Vec<Dart>, loops: usize) -> LaurentPoly2 {
        let (p, curl, extra) = simplify(p);
        let loops = loops + extra;
        let parts = if p.is_empty() { Vec::new() } else { pieces(&p) };
        let count = parts.len() + loops;
        let mut acc = LaurentPoly2::monomial(1, curl, 0);
        if count > 1 {
            acc = &acc * &LaurentPoly2::delta().pow(count as u32 - 1);
        }
        for q in parts {
            let l = self.connected(q);
            acc = &acc * &l;
        }
        acc
    }

    fn connected(&mut self, p: Vec<Dart>) -> LaurentPoly2 {
        let code = canonical_code(&p);
        if let Some(l) = self.memo.get(&code) {
            return l.clone();
        }
        let l = self.descend(&p);
        self.memo.insert(code, l.clone());
        l
    }

    fn descend(&mut self, p: &[Dart]) -> LaurentPoly2 {
        let route = best_route(p);
        let z = LaurentPoly2::monomial(1, 0, 1);
        let mut acc = LaurentPoly2::zero();
        let mut cur = p.to_vec();
        let c = p.len() / 4;
        for (j, &x) in route.bad.iter().enumerate() {
            let mut removed = vec![false; c];
            removed[x] = true;
            let (a, la) = splice(&cur, &removed, smooth_a);
            let (b, lb) = splice(&cur, &removed, smooth_b);
            let mut s = self.link(a, la);
            s += &self.link(b, lb);
            let term = &s * &z;
            if j % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
            cur = switch(&cur, x);
        }
        let w = self_writhe(&cur);
        let mut tail = LaurentPoly2::monomial(1, w, 0);
        if route.components > 1 {
            tail = &tail * &LaurentPoly2::delta().pow(route.components as u32 - 1);
        }
        if route.bad.len() % 2 == 1 {
            acc -= &tail;
        } else {
            acc += &tail;
        }
        acc
    }
}

/// Remove curls and removable bigons. Returns the reduced involution, the
/// curl exponent collected, and the number of circles left with no crossings.
fn simplify(mut p: Vec<Dart>) -> (Vec<Dart>, i32, usize) {
    let mut curl = 0;
    let mut loops = 0;
    'outer: loop {
        let c = p.len() / 4;
        for d in 0..p.len() {
            if p[d] == rot(d) {
                // strand enters at slot k+2, loops from k to k+1
                let k = slot_of(d);
                let (first, second) = ((k + 2) & 3, (k + 1) & 3);
                let (under_in, over_in) = if is_over_slot(first) { (second, first) } else { (first, second) };
                curl += if over_in == (under_in + 3) & 3 { 1 } else { -1 };
                let mut removed = vec![false; c];
                removed[crossing_of(d)] = true;
                let (q, l) = splice(&p, &removed, pass_through);
                p = q;
                loops += l;
                continue 'outer;
            }
        }
        for d in 0..p.len() {
            let a = p[d];
            let next = rot(a);
            let b = p[next];
            if rot(b) != d || crossing_of(d) == crossing_of(a) {
                continue;
            }
            let nonalt = |u: Dart, v: Dart| is_over_slot(slot_of(u)) == is_over_slot(slot_of(v));
            if nonalt(d, a) && nonalt(next, b) {
                let mut removed = vec![false; c];
                removed[crossing_of(d)] = true;
                removed[crossing_of(a)] = true;
                let (q, l) = splice(&p, &removed, pass_through);
                p = q;
                loops += l;
                continue 'outer;
            }
        }
        return (p, curl, loops);
    }
}

struct Route {
    bad: Vec<usize>,
    components: usize,
}

/// Entry darts of each component, in traversal order.
fn components(p: &[Dart]) -> Vec<Vec<Dart>> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut seq = Vec::new();
        let mut d = s;
        loop {
            seen[d] = true;
            seen[straight(d)] = true;
            seq.push(d);
            d = p[straight(d)];
            if d == s {
                break;
            }
        }
        out.push(seq);
    }
    out
}

/// Bad crossings, in the order met, along the cheapest route: a component
/// order, a base point and a direction on each component, and a choice
/// between descending and ascending.
fn best_route(p: &[Dart]) -> Route {
    let comps = components(p);
    let c = p.len() / 4;
    let m = comps.len();
    let mut best: Option<Vec<usize>> = None;
    for ascending in [false, true] {
        // per component, the cheapest traversal for self crossings
        let mut trav: Vec<Vec<Dart>> = Vec::with_capacity(m);
        for comp in &comps {
            let mut options: Vec<Vec<Dart>> = Vec::new();
            for i in 0..comp.len() {
                let mut fwd = comp[i..].to_vec();
                fwd.extend_from_slice(&comp[..i]);
                let rev: Vec<Dart> = fwd.iter().rev().map(|&d| straight(d)).collect();
                options.push(fwd);
                options.push(rev);
            }
            let pick = options.into_iter().min_by_key(|seq| bad_self(seq, c, ascending).len()).unwrap_or_default();
            trav.push(pick);
        }
        let orders: Vec<Vec<usize>> = if m <= 3 { permutations(m) } else { vec![(0..m).collect()] };
        for ord in orders {
            let seq: Vec<Dart> = ord.iter().flat_map(|&k| trav[k].iter().copied()).collect();
            let bad = bad_crossings(&seq, c, ascending);
            if best.as_ref().is_none_or(|b| bad.len() < b.len()) {
                best = Some(bad);
            }
        }
    }
    Route { bad: best.unwrap_or_default(), components: m }
}

fn bad_self(seq: &[Dart], c: usize, ascending: bool) -> Vec<usize> {
    let mut count = vec![0u8; c];
    for &d in seq {
        count[crossing_of(d)] += 1;
    }
    bad_crossings(seq, c, ascending).into_iter().filter(|&x| count[x] == 2).collect()
}

fn bad_crossings(seq: &[Dart], c: usize, ascending: bool) -> Vec<usize> {
    let mut met = vec![false; c];
    let mut bad = Vec::new();
    for &d in seq {
        let x = crossing_of(d);
        if met[x] {
            continue;
        }
        met[x] = true;
        if is_over_slot(slot_of(d)) == ascending {
            bad.push(x);
        }
    }
    bad
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; m], &mut out);
    out
}

/// Sum of the signs of crossings between a component and itself.
fn self_writhe(p: &[Dart]) -> i32 {
    let c = p.len() / 4;
    let mut w = 0;
    for comp in components(p) {
        let mut under_in = vec![usize::MAX; c];
        let mut over_in = vec![usize::MAX; c];
        for &d in &comp {
            if is_over_slot(slot_of(d)) {
                over_in[crossing_of(d)] = slot_of(d);
            } else {
                under_in[crossing_of(d)] = slot_of(d);
            }
        }
        for x in 0..c {
            if under_in[x] != usize::MAX && over_in[x] != usize::MAX {
                w += if over_in[x] == (under_in[x] + 3) & 3 { 1 } else { -1 };
            }
        }
    }
    w
}

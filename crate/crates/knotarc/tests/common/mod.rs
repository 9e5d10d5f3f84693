#![allow(dead_code)]

use knotarc::diagram::{parse_pd, PlanarKnotDiagram, Tangle};

pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
pub const FIGURE_EIGHT: &str = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
pub const K5_1: &str = "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]";
pub const K5_2: &str = "X[1,4,2,5] X[3,8,4,9] X[5,10,6,1] X[9,6,10,7] X[7,2,8,3]";
pub const K6_2: &str = "X[1,4,2,5] X[5,10,6,11] X[3,9,4,8] X[9,3,10,2] X[7,12,8,1] X[11,6,12,7]";

pub fn pd(s: &str) -> PlanarKnotDiagram {
    parse_pd(s).unwrap()
}

/// Pretzel P(3,3,-2), an 8-crossing diagram of 8n3.
pub fn pretzel_8n3() -> PlanarKnotDiagram {
    Tangle::montesinos(&[Tangle::integer(3), Tangle::integer(3), Tangle::integer(-2)]).unwrap()
}

/// Montesinos diagram 3,2,2-1- of 8n3, with a three crossing tangle of the
/// opposite sign.
pub fn knot_8n3() -> PlanarKnotDiagram {
    Tangle::montesinos(&[Tangle::integer(3), Tangle::integer(2), Tangle::rational(&[-2, -1])]).unwrap()
}

/// Montesinos diagram 21,21,2- of 8n2.
pub fn knot_8n2() -> PlanarKnotDiagram {
    Tangle::montesinos(&[Tangle::rational(&[2, 1]), Tangle::rational(&[2, 1]), Tangle::integer(-2)]).unwrap()
}

/// Knot determinant from the Fox coloring matrix, by exact elimination.
pub fn determinant(d: &PlanarKnotDiagram) -> i128 {
    let c = d.crossing_count();
    if c == 0 {
        return 1;
    }
    // arc label of every dart; arcs break where the strand passes under
    let mut arc = vec![usize::MAX; 4 * c];
    let tr = d.traversal();
    let start = tr.iter().position(|&e| e % 2 == 0).unwrap();
    let mut label = 0;
    for k in 0..tr.len() {
        let e = tr[(start + k) % tr.len()];
        let out = (e & !3) | ((e + 2) & 3);
        arc[e] = label % c;
        if e.is_multiple_of(2) {
            label += 1;
        }
        arc[out] = label % c;
    }
    let mut m = vec![vec![0i128; c]; c];
    for x in 0..c {
        m[x][arc[4 * x + 1]] += 2;
        m[x][arc[4 * x]] -= 1;
        m[x][arc[4 * x + 2]] -= 1;
    }
    let mut a: Vec<Vec<i128>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
    bareiss(&mut a).abs()
}

fn bareiss(a: &mut [Vec<i128>]) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// PD code of a braid closure. Generator `i > 0` crosses strands `i-1` and
/// `i` (0-based positions) positively, `-i` negatively.
pub fn braid_closure(strands: usize, word: &[i32]) -> PlanarKnotDiagram {
    let mut cur: Vec<usize> = (1..=strands).collect();
    let first = cur.clone();
    let mut next = strands + 1;
    let mut xs = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (a_in, b_in) = (cur[i], cur[i + 1]);
        let (a_out, b_out) = (next, next + 1);
        next += 2;
        if g > 0 {
            // over strand runs from position i to i+1
            xs.push([b_in, b_out, a_out, a_in]);
        } else {
            xs.push([a_in, b_in, b_out, a_out]);
        }
        cur[i] = a_out;
        cur[i + 1] = b_out;
    }
    // glue the top labels to the bottom ones
    let mut map = std::collections::HashMap::new();
    for (t, b) in cur.iter().zip(first.iter()) {
        map.insert(*t, *b);
    }
    let text: Vec<String> = xs
        .iter()
        .map(|x| {
            let l: Vec<String> = x.iter().map(|v| map.get(v).unwrap_or(v).to_string()).collect();
            format!("X[{}]", l.join(","))
        })
        .collect();
    parse_pd(&text.join(" ")).unwrap()
}

use knotarc::LaurentPoly2;

/// Kauffman polynomial by the plain skein recursion: no simplification,
/// no memo, a single fixed descending route.
pub fn kauffman_oracle(d: &PlanarKnotDiagram) -> LaurentPoly2 {
    if d.crossing_count() == 0 {
        return LaurentPoly2::one();
    }
    let signs = d.crossing_signs();
    let w: i32 = signs.iter().sum();
    lambda_naive(d.partners().to_vec(), 0, None).shift(-w, 0)
}

fn st(d: usize) -> usize {
    (d & !3) | ((d + 2) & 3)
}

fn naive_components(p: &[usize]) -> Vec<Vec<usize>> {
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
            seen[st(d)] = true;
            seq.push(d);
            d = p[st(d)];
            if d == s {
                break;
            }
        }
        out.push(seq);
    }
    out
}

/// Remove crossing `x`, joining its darts by `through`; returns the new
/// involution and how many circles lost all their crossings.
fn naive_remove(p: &[usize], x: usize, through: impl Fn(usize) -> usize) -> (Vec<usize>, usize) {
    let n = p.len();
    let idx = |d: usize| if d / 4 > x { d - 4 } else { d };
    let mut out = vec![0; n - 4];
    let mut used = [false; 4];
    for u in 0..n {
        if u / 4 == x {
            continue;
        }
        let mut v = p[u];
        while v / 4 == x {
            used[v % 4] = true;
            let w = through(v);
            used[w % 4] = true;
            v = p[w];
        }
        out[idx(u)] = idx(v);
    }
    let mut loops = 0;
    for s in 0..4 {
        if used[s] {
            continue;
        }
        loops += 1;
        let mut v = 4 * x + s;
        loop {
            used[v % 4] = true;
            let w = through(v);
            used[w % 4] = true;
            v = p[w];
            if v == 4 * x + s {
                break;
            }
        }
    }
    (out, loops)
}

fn lambda_naive(p: Vec<usize>, loops: usize, bases: Option<Vec<usize>>) -> LaurentPoly2 {
    let delta = LaurentPoly2::delta();
    if p.is_empty() {
        return delta.pow(loops as u32 - 1);
    }
    // the route must survive switching, so the base points travel along
    let comps: Vec<Vec<usize>> = match bases {
        None => naive_components(&p),
        Some(b) => b
            .iter()
            .map(|&s| {
                let mut seq = vec![s];
                let mut d = p[st(s)];
                while d != s {
                    seq.push(d);
                    d = p[st(d)];
                }
                seq
            })
            .collect(),
    };
    let c = p.len() / 4;
    let mut met = vec![false; c];
    let mut bad = None;
    'find: for comp in &comps {
        for &e in comp {
            let x = e / 4;
            if !met[x] {
                met[x] = true;
                if e % 2 == 0 {
                    bad = Some(x);
                    break 'find;
                }
            }
        }
    }
    match bad {
        None => {
            let mut w = 0;
            for comp in &comps {
                let mut under = vec![None; c];
                let mut over = vec![None; c];
                for &e in comp {
                    if e % 2 == 0 {
                        under[e / 4] = Some(e % 4);
                    } else {
                        over[e / 4] = Some(e % 4);
                    }
                }
                for x in 0..c {
                    if let (Some(u), Some(o)) = (under[x], over[x]) {
                        w += if o == (u + 3) % 4 { 1 } else { -1 };
                    }
                }
            }
            LaurentPoly2::monomial(1, w, 0) * delta.pow((comps.len() + loops - 1) as u32)
        }
        Some(x) => {
            let (a, la) = naive_remove(&p, x, |d| d ^ 1);
            let (b, lb) = naive_remove(&p, x, |d| (d & !3) | (3 - d % 4));
            let smooth = lambda_naive(a, loops + la, None) + lambda_naive(b, loops + lb, None);
            let m = |d: usize| if d / 4 == x { 4 * x + (d + 1) % 4 } else { d };
            let mut sw = vec![0; p.len()];
            for d in 0..p.len() {
                sw[m(d)] = m(p[d]);
            }
            let bases = comps.iter().map(|c| m(c[0])).collect();
            smooth.shift(0, 1) - lambda_naive(sw, loops, Some(bases))
        }
    }
}

use knotarc::GridDiagram;
use rand::seq::SliceRandom;
use rand::Rng;

pub const TREFOIL_GRID: [[usize; 2]; 5] = [[0, 2], [1, 3], [2, 4], [0, 3], [1, 4]];

pub fn trefoil_grid() -> GridDiagram {
    GridDiagram::new(TREFOIL_GRID.to_vec()).unwrap()
}

/// Count of (column, row) pairs whose segments cross in their interiors.
pub fn interleavings(g: &GridDiagram) -> usize {
    let cols = g.columns();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); cols.len()];
    for (c, p) in cols.iter().enumerate() {
        rows[p[0]].push(c);
        rows[p[1]].push(c);
    }
    let mut n = 0;
    for (c, p) in cols.iter().enumerate() {
        let (r1, r2) = (p[0].min(p[1]), p[0].max(p[1]));
        for (r, cs) in rows.iter().enumerate() {
            let (c1, c2) = (cs[0].min(cs[1]), cs[0].max(cs[1]));
            if r1 < r && r < r2 && c1 < c && c < c2 {
                n += 1;
            }
        }
    }
    n
}

/// Components of the curve, following marks column, row, column, ...
pub fn grid_components(cols: &[[usize; 2]]) -> usize {
    let n = cols.len();
    let mut in_row: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (c, p) in cols.iter().enumerate() {
        in_row[p[0]].push(c);
        in_row[p[1]].push(c);
    }
    let mut seen = vec![false; n];
    let mut k = 0;
    for s in 0..n {
        if seen[s] {
            continue;
        }
        k += 1;
        let (mut c, mut r) = (s, cols[s][0]);
        while !seen[c] {
            seen[c] = true;
            let r2 = if cols[c][0] == r { cols[c][1] } else { cols[c][0] };
            let c2 = if in_row[r2][0] == c { in_row[r2][1] } else { in_row[r2][0] };
            c = c2;
            r = r2;
        }
    }
    k
}

/// A random knotted-or-not grid of size `n`, by rejection.
pub fn random_grid<R: Rng>(rng: &mut R, n: usize) -> GridDiagram {
    loop {
        let mut x: Vec<usize> = (0..n).collect();
        let mut o: Vec<usize> = (0..n).collect();
        x.shuffle(rng);
        o.shuffle(rng);
        if x.iter().zip(&o).any(|(a, b)| a == b) {
            continue;
        }
        let cols: Vec<[usize; 2]> = x.iter().zip(&o).map(|(&a, &b)| [a, b]).collect();
        if grid_components(&cols) == 1 {
            return GridDiagram::new(cols).unwrap();
        }
    }
}

/// A random knot diagram from a braid closure on 3 or 4 strands with at most
/// `max` crossings.
pub fn random_braid_knot<R: Rng>(rng: &mut R, max: usize) -> PlanarKnotDiagram {
    loop {
        let strands = rng.gen_range(2..=4usize);
        let len = rng.gen_range(3..=max);
        let word: Vec<i32> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..strands as i32);
                if rng.gen_bool(0.5) {
                    g
                } else {
                    -g
                }
            })
            .collect();
        let mut perm: Vec<usize> = (0..strands).collect();
        for w in &word {
            let i = w.unsigned_abs() as usize - 1;
            perm.swap(i, i + 1);
        }
        let (mut k, mut len) = (perm[0], 1);
        while k != 0 {
            k = perm[k];
            len += 1;
        }
        if len == strands {
            return braid_closure(strands, &word);
        }
    }
}

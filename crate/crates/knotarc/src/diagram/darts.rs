//! Low-level operations on dart involutions, shared by the diagram moves and
//! the skein evaluation. These work for links as well as knots.

use super::{crossing_of, slot_of, straight, Dart};

/// Switch crossing `x`: every slot moves one step counterclockwise, so the
/// former under strand lands on the odd slots.
pub fn switch(partner: &[Dart], x: usize) -> Vec<Dart> {
    let m = |d: Dart| if crossing_of(d) == x { 4 * x + ((slot_of(d) + 1) & 3) } else { d };
    let mut out = vec![0; partner.len()];
    for d in 0..partner.len() {
        out[m(d)] = m(partner[d]);
    }
    out
}

/// Delete the crossings marked in `removed`, joining strands through each
/// removed crossing according to `through` (an involution on its darts).
/// Returns the compacted involution and the number of closed loops that lost
/// all their crossings.
pub fn splice(partner: &[Dart], removed: &[bool], through: impl Fn(Dart) -> Dart) -> (Vec<Dart>, usize) {
    let c = partner.len() / 4;
    let mut new_index = vec![usize::MAX; c];
    let mut k = 0;
    for x in 0..c {
        if !removed[x] {
            new_index[x] = k;
            k += 1;
        }
    }
    let remap = |d: Dart| 4 * new_index[crossing_of(d)] + slot_of(d);
    let mut out = vec![0; 4 * k];
    let mut visited = vec![false; partner.len()];
    for u in 0..partner.len() {
        if removed[crossing_of(u)] {
            continue;
        }
        let mut v = partner[u];
        while removed[crossing_of(v)] {
            visited[v] = true;
            let w = through(v);
            visited[w] = true;
            v = partner[w];
        }
        out[remap(u)] = remap(v);
    }
    let mut loops = 0;
    for start in 0..partner.len() {
        if visited[start] || !removed[crossing_of(start)] {
            continue;
        }
        loops += 1;
        let mut v = start;
        loop {
            visited[v] = true;
            let w = through(v);
            visited[w] = true;
            v = partner[w];
            if v == start {
                break;
            }
        }
    }
    (out, loops)
}

/// Straight pass-through at a removed crossing.
pub fn pass_through(d: Dart) -> Dart {
    straight(d)
}

/// Smoothing joining slots (0,1),(2,3).
pub fn smooth_a(d: Dart) -> Dart {
    d ^ 1
}

/// Smoothing joining slots (0,3),(1,2).
pub fn smooth_b(d: Dart) -> Dart {
    let s = slot_of(d);
    (d & !3) | (3 - s)
}

/// Orientation-preserving canonical code of a connected dart involution:
/// the lexicographically least relabelling over all starting crossings and
/// both half-turn rotations.
pub fn canonical_code(partner: &[Dart]) -> Vec<u32> {
    let c = partner.len() / 4;
    if c == 0 {
        return Vec::new();
    }
    let mut best: Option<Vec<u32>> = None;
    let mut label = vec![usize::MAX; c];
    let mut offset = vec![0usize; c];
    let mut order = Vec::with_capacity(c);
    let mut code = Vec::with_capacity(4 * c);
    for start in 0..c {
        for r in [0usize, 2] {
            label.iter_mut().for_each(|l| *l = usize::MAX);
            order.clear();
            code.clear();
            label[start] = 0;
            offset[start] = r;
            order.push(start);
            let mut i = 0;
            let mut worse = false;
            let mut tie = best.is_some();
            while i < order.len() {
                let x = order[i];
                for t in 0..4 {
                    let d = 4 * x + ((t + offset[x]) & 3);
                    let p = partner[d];
                    let y = crossing_of(p);
                    if label[y] == usize::MAX {
                        label[y] = order.len();
                        offset[y] = slot_of(p) & 2;
                        order.push(y);
                    }
                    let s = (slot_of(p) + 4 - offset[y]) & 3;
                    code.push((4 * label[y] + s) as u32);
                    if tie {
                        let b = best.as_ref().unwrap();
                        let j = code.len() - 1;
                        if code[j] > b[j] {
                            worse = true;
                            break;
                        }
                        if code[j] < b[j] {
                            tie = false;
                        }
                    }
                }
                if worse {
                    break;
                }
                i += 1;
            }
            if worse || order.len() < c {
                continue;
            }
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code.clone());
            }
        }
    }
    best.unwrap_or_default()
}

/// Connected pieces of a dart involution, each returned compacted.
pub fn pieces(partner: &[Dart]) -> Vec<Vec<Dart>> {
    let c = partner.len() / 4;
    let mut comp = vec![usize::MAX; c];
    let mut n = 0;
    for s in 0..c {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut stack = vec![s];
        comp[s] = n;
        while let Some(x) = stack.pop() {
            for t in 0..4 {
                let y = crossing_of(partner[4 * x + t]);
                if comp[y] == usize::MAX {
                    comp[y] = n;
                    stack.push(y);
                }
            }
        }
        n += 1;
    }
    if n == 1 {
        return vec![partner.to_vec()];
    }
    (0..n)
        .map(|k| {
            let members: Vec<usize> = (0..c).filter(|&x| comp[x] == k).collect();
            let mut idx = vec![usize::MAX; c];
            for (i, &x) in members.iter().enumerate() {
                idx[x] = i;
            }
            let mut out = vec![0; 4 * members.len()];
            for &x in &members {
                for t in 0..4 {
                    let p = partner[4 * x + t];
                    out[4 * idx[x] + t] = 4 * idx[crossing_of(p)] + slot_of(p);
                }
            }
            out
        })
        .collect()
}

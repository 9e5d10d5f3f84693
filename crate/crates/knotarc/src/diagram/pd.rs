use std::collections::HashMap;

use super::{crossing_of, is_over_slot, slot_of, straight, PlanarKnotDiagram};
use crate::error::{Error, Result};

/// Parse `X[a,b,c,d]` terms; an optional `PD[...]` wrapper and `#` comments
/// are accepted. No terms gives the crossingless unknot.
pub fn parse_pd(text: &str) -> Result<PlanarKnotDiagram> {
    let body: String = text.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join(" ");
    let mut s = body.trim();
    if let Some(rest) = s.strip_prefix("PD[") {
        s = rest.strip_suffix(']').ok_or_else(|| Error::Syntax("unterminated PD[".into()))?;
    }
    let mut crossings: Vec<[i64; 4]> = Vec::new();
    let mut rest = s;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        let r = rest.strip_prefix("X[").ok_or_else(|| Error::Syntax(format!("expected X[ at '{}'", head(rest))))?;
        let close = r.find(']').ok_or_else(|| Error::Syntax("missing ]".into()))?;
        let labels: Vec<&str> = r[..close].split(',').map(str::trim).collect();
        if labels.len() != 4 {
            return Err(Error::Syntax(format!("crossing with {} labels", labels.len())));
        }
        let mut x = [0i64; 4];
        for (k, l) in labels.iter().enumerate() {
            x[k] = l.parse().map_err(|_| Error::Syntax(format!("bad edge label '{l}'")))?;
        }
        crossings.push(x);
        rest = &r[close + 1..];
    }
    let mut seen: HashMap<i64, Vec<usize>> = HashMap::new();
    for (i, x) in crossings.iter().enumerate() {
        for (k, &l) in x.iter().enumerate() {
            seen.entry(l).or_default().push(4 * i + k);
        }
    }
    let mut partner = vec![0; 4 * crossings.len()];
    for (l, ds) in &seen {
        if ds.len() != 2 {
            return Err(Error::InvalidDiagram(format!("edge label {l} appears {} times", ds.len())));
        }
        partner[ds[0]] = ds[1];
        partner[ds[1]] = ds[0];
    }
    PlanarKnotDiagram::from_partner(partner)
}

fn head(s: &str) -> &str {
    let end = s.char_indices().nth(12).map(|(i, _)| i).unwrap_or(s.len());
    &s[..end]
}

/// PD code with edges numbered 1.. along the traversal and each crossing
/// listed from its incoming under edge.
pub(super) fn write_pd(d: &PlanarKnotDiagram) -> String {
    let tr = d.traversal();
    if tr.is_empty() {
        return String::new();
    }
    let mut label = vec![0usize; d.partners().len()];
    for (i, &enter) in tr.iter().enumerate() {
        let l = i + 1;
        let next = if i + 1 == tr.len() { 1 } else { l + 1 };
        label[enter] = l;
        label[straight(enter)] = next;
    }
    let mut under_in = vec![usize::MAX; d.crossing_count()];
    for &enter in &tr {
        if !is_over_slot(slot_of(enter)) {
            under_in[crossing_of(enter)] = slot_of(enter);
        }
    }
    (0..d.crossing_count())
        .map(|x| {
            let s0 = under_in[x];
            let l: Vec<String> = (0..4).map(|k| label[4 * x + (s0 + k) % 4].to_string()).collect();
            format!("X[{}]", l.join(","))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let d = parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]").unwrap();
        let again = parse_pd(&d.to_pd()).unwrap();
        assert_eq!(d.canonical_code(), again.canonical_code());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_pd("X[1,2,3]"), Err(Error::Syntax(_))));
        assert!(matches!(parse_pd("X[1,2,3,4]"), Err(Error::InvalidDiagram(_))));
        assert!(matches!(parse_pd("Y[1,1,2,2]"), Err(Error::Syntax(_))));
    }

    #[test]
    fn empty_is_unknot() {
        assert_eq!(parse_pd("").unwrap().crossing_count(), 0);
    }
}

use std::fmt::Write;

use super::GridDiagram;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

impl std::str::FromStr for RenderFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "ascii" => Ok(Self::Ascii),
            "svg" => Ok(Self::Svg),
            _ => Err(format!("unknown format '{s}'")),
        }
    }
}

const UNIT: usize = 5;

impl GridDiagram {
    pub fn render(&self, format: RenderFormat) -> String {
        match format {
            RenderFormat::Ascii => self.render_ascii(),
            RenderFormat::Svg => self.render_svg(),
        }
    }

    /// One character cell per grid point, top row first; `o` marks, and a
    /// vertical bar wherever a column crosses a row.
    pub fn render_ascii(&self) -> String {
        let n = self.size();
        let w = 2 * n - 1;
        let mut cells = vec![vec![' '; w]; n];
        for (r, &[p, q]) in self.rows().iter().enumerate() {
            cells[r][2 * p..=2 * q].fill('-');
        }
        for c in 0..n {
            let (lo, hi) = self.span(c);
            for row in cells.iter_mut().take(hi).skip(lo + 1) {
                row[2 * c] = '|';
            }
            cells[lo][2 * c] = 'o';
            cells[hi][2 * c] = 'o';
        }
        let mut s = String::new();
        for row in cells.iter().rev() {
            let line: String = row.iter().collect();
            s.push_str(line.trim_end());
            s.push('\n');
        }
        s
    }

    /// Lines on a 5-unit lattice; each vertical is drawn over a white halo
    /// so that it reads as passing over.
    pub fn render_svg(&self) -> String {
        let n = self.size();
        let size = UNIT * (n + 1);
        let px = |i: usize| UNIT * (i + 1);
        let py = |r: usize| size - UNIT * (r + 1);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{w}" height="{w}">"#,
            w = 12 * size
        );
        let _ = writeln!(s, r#"<g stroke="black" stroke-width="0.5" stroke-linecap="round">"#);
        for (r, &[p, q]) in self.rows().iter().enumerate() {
            let _ = writeln!(s, r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#, px(p), px(q), y = py(r));
        }
        for c in 0..n {
            let (lo, hi) = self.span(c);
            let x = px(c);
            let _ = writeln!(
                s,
                r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="white" stroke-width="1.5"/>"#,
                py(hi) + 1,
                py(lo) - 1
            );
            let _ = writeln!(s, r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#, py(hi), py(lo));
        }
        let _ = writeln!(s, "</g>\n</svg>");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_box() {
        assert_eq!(GridDiagram::unknot().render_ascii(), "o-o\no-o\n");
    }

    #[test]
    fn trefoil_ascii() {
        let g = GridDiagram::new(vec![[0, 2], [1, 3], [2, 4], [0, 3], [1, 4]]).unwrap();
        let a = g.render_ascii();
        assert_eq!(a.matches('o').count(), 10);
        assert_eq!(a, "    o---o\n  o-|-o |\no-|-o | |\n| o---|-o\no-----o\n");
    }
}

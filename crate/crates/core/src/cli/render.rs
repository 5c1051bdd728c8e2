//! Superimposition diagrams: the start shape and a placed target drawn on
//! top of each other.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::lattice::{AxialCoord, CoinSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Glyph {
    /// Coin that stays put.
    Stationary,
    /// Coin that has to move.
    SourceOnly,
    /// Empty position a moved coin lands on.
    TargetOnly,
}

impl Glyph {
    pub fn ascii(self) -> char {
        match self {
            Glyph::Stationary => 'O',
            Glyph::SourceOnly => '.',
            Glyph::TargetOnly => '*',
        }
    }

    fn svg_style(self) -> (&'static str, &'static str, &'static str) {
        // (class, fill, stroke)
        match self {
            Glyph::Stationary => ("stationary", "black", "black"),
            Glyph::SourceOnly => ("source", "none", "black"),
            Glyph::TargetOnly => ("target", "green", "darkgreen"),
        }
    }
}

pub fn superimpose(start: &CoinSet, target: &CoinSet) -> BTreeMap<AxialCoord, Glyph> {
    let mut cells = BTreeMap::new();
    for &c in start {
        let glyph = if target.contains(&c) {
            Glyph::Stationary
        } else {
            Glyph::SourceOnly
        };
        cells.insert(c, glyph);
    }
    for &c in target {
        cells.entry(c).or_insert(Glyph::TargetOnly);
    }
    cells
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedDiagram {
    pub grid: Vec<String>,
    pub legend: Vec<String>,
    pub stationary: usize,
    pub source_only: usize,
    pub target_only: usize,
}

impl RenderedDiagram {
    pub fn count_in_grid(&self, ch: char) -> usize {
        self.grid
            .iter()
            .flat_map(|l| l.chars())
            .filter(|&c| c == ch)
            .count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for line in self
            .grid
            .iter()
            .chain(std::iter::once(&String::new()))
            .chain(&self.legend)
        {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}

/// One text line per lattice row, top row first. A coin at `(a, b)` lands in
/// column `2a + b`, so successive rows shift by half a cell.
pub fn render_ascii(start: &CoinSet, target: &CoinSet) -> RenderedDiagram {
    let cells = superimpose(start, target);
    let mut by_row: BTreeMap<i64, Vec<(i64, Glyph)>> = BTreeMap::new();
    for (c, g) in &cells {
        by_row.entry(c.b).or_default().push((2 * c.a + c.b, *g));
    }
    let min_col = by_row
        .values()
        .flatten()
        .map(|&(col, _)| col)
        .min()
        .unwrap_or(0);

    let mut grid = Vec::new();
    if let (Some(&lo), Some(&hi)) = (by_row.keys().next(), by_row.keys().next_back()) {
        for b in (lo..=hi).rev() {
            let mut line = String::new();
            let mut row = by_row.remove(&b).unwrap_or_default();
            row.sort_unstable_by_key(|&(col, _)| col);
            for (col, glyph) in row {
                let col = (col - min_col) as usize;
                while line.len() < col {
                    line.push(' ');
                }
                line.push(glyph.ascii());
            }
            grid.push(line);
        }
    }

    let count = |g: Glyph| cells.values().filter(|&&x| x == g).count();
    let (stationary, source_only, target_only) = (
        count(Glyph::Stationary),
        count(Glyph::SourceOnly),
        count(Glyph::TargetOnly),
    );
    let legend = vec![
        format!("O  stays in place ({stationary})"),
        format!(".  moves away ({source_only})"),
        format!("*  destination ({target_only})"),
    ];
    RenderedDiagram {
        grid,
        legend,
        stationary,
        source_only,
        target_only,
    }
}

/// Unit-diameter circles at their embedded positions, scaled to pixels.
pub fn render_svg(start: &CoinSet, target: &CoinSet) -> String {
    const SCALE: f64 = 40.0;
    let cells = superimpose(start, target);
    let points: Vec<((f64, f64), Glyph)> = cells.iter().map(|(c, g)| (c.embed(), *g)).collect();
    let fold = |init: f64, f: fn(f64, f64) -> f64, pick: fn(&(f64, f64)) -> f64| {
        points.iter().map(|(p, _)| pick(p)).fold(init, f)
    };
    let (min_x, max_x) = (
        fold(f64::INFINITY, f64::min, |p| p.0),
        fold(f64::NEG_INFINITY, f64::max, |p| p.0),
    );
    let (min_y, max_y) = (
        fold(f64::INFINITY, f64::min, |p| p.1),
        fold(f64::NEG_INFINITY, f64::max, |p| p.1),
    );
    let (min_x, max_x, min_y, max_y) = if points.is_empty() {
        (0.0, 0.0, 0.0, 0.0)
    } else {
        (min_x, max_x, min_y, max_y)
    };
    let width = (max_x - min_x + 2.0) * SCALE;
    let height = (max_y - min_y + 2.0) * SCALE;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.1}\" height=\"{height:.1}\" viewBox=\"0 0 {width:.1} {height:.1}\">"
    );
    for ((x, y), glyph) in &points {
        let (class, fill, stroke) = glyph.svg_style();
        let cx = (x - min_x + 1.0) * SCALE;
        let cy = (max_y - y + 1.0) * SCALE;
        let _ = writeln!(
            out,
            "  <circle class=\"{class}\" cx=\"{cx:.3}\" cy=\"{cy:.3}\" r=\"{:.3}\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"2\"/>",
            SCALE / 2.0 - 1.0
        );
    }
    out.push_str("</svg>\n");
    out
}

//! Coin shape generators and the plain-text shape file format.
//!
//! Shape files hold one coin per line as `a b` (two signed decimal integers
//! separated by one space). Lines starting with `#` are comments, blank lines
//! are skipped, and both LF and CRLF endings are accepted.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{AxialCoord, CoinSet, FlipKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ShapeSpec {
    Triangle(u64),
    Rhombus(u64),
    Hexagon(u64),
    Custom(String),
}

impl ShapeSpec {
    /// Generates the coins for a built-in shape. `Custom` shapes have no
    /// generator and must come from [`load_custom`].
    pub fn generate(&self) -> Result<Option<CoinSet>> {
        Ok(Some(match *self {
            ShapeSpec::Triangle(n) => triangle_up(n)?,
            ShapeSpec::Rhombus(n) => rhombus(n)?,
            ShapeSpec::Hexagon(k) => hexagon(k)?,
            ShapeSpec::Custom(_) => return Ok(None),
        }))
    }

    /// The flip the puzzle asks for: 180° for triangles, horizontal mirror
    /// for rhombi.
    pub fn default_flip(&self) -> FlipKind {
        match self {
            ShapeSpec::Rhombus(_) => FlipKind::MirrorHorizontal,
            _ => FlipKind::Rotate180,
        }
    }

    /// Number of protrusions a minimal solution is expected to split into,
    /// used to zero-pad size lists. `None` means "whatever was found".
    pub fn protrusion_arity(&self) -> Option<usize> {
        match self {
            ShapeSpec::Triangle(_) => Some(3),
            ShapeSpec::Rhombus(_) => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for ShapeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeSpec::Triangle(n) => write!(f, "triangle {n}"),
            ShapeSpec::Rhombus(n) => write!(f, "rhombus {n}"),
            ShapeSpec::Hexagon(k) => write!(f, "hexagon {k}"),
            ShapeSpec::Custom(name) => write!(f, "custom {name}"),
        }
    }
}

fn require_positive(what: &'static str, value: u64) -> Result<i64> {
    if value < 1 {
        return Err(Error::TooSmall {
            what,
            value,
            min: 1,
        });
    }
    i64::try_from(value).map_err(|_| Error::Overflow)
}

/// Upward-pointing triangle of `n` rows: `{a ≥ 0, b ≥ 0, a + b ≤ n - 1}`.
///
/// The apex coin is at `(0, n - 1)`; the row at height `b` holds `n - b` coins.
pub fn triangle_up(n: u64) -> Result<CoinSet> {
    let n = require_positive("triangle rows", n)?;
    Ok((0..n)
        .flat_map(|b| (0..n - b).map(move |a| AxialCoord::new(a, b)))
        .collect())
}

/// `n × n` rhombus `{0 ≤ a, b ≤ n - 1}`, leaning right.
pub fn rhombus(n: u64) -> Result<CoinSet> {
    let n = require_positive("rhombus rows", n)?;
    Ok((0..n)
        .flat_map(|b| (0..n).map(move |a| AxialCoord::new(a, b)))
        .collect())
}

/// Hexagon of side `k` centred on the origin: `max(|a|, |b|, |a + b|) ≤ k - 1`.
pub fn hexagon(k: u64) -> Result<CoinSet> {
    let r = require_positive("hexagon side", k)? - 1;
    Ok((-r..=r)
        .flat_map(|a| (-r..=r).map(move |b| AxialCoord::new(a, b)))
        .filter(|c| (c.a + c.b).abs() <= r)
        .collect())
}

/// Parses a shape file.
pub fn load_custom(source: &str) -> Result<CoinSet> {
    let mut coins = CoinSet::new();
    for (idx, raw) in source.split('\n').enumerate() {
        let line_no = idx + 1;
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let coord = parse_line(line).ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("expected two integers `a b`, got {line:?}"),
        })?;
        if !coins.insert(coord) {
            return Err(Error::DuplicateCoordinate {
                line: line_no,
                coord,
            });
        }
    }
    if coins.is_empty() {
        return Err(Error::EmptyFile);
    }
    Ok(coins)
}

fn parse_line(line: &str) -> Option<AxialCoord> {
    let (a, b) = line.split_once(' ')?;
    let parse = |s: &str| -> Option<i64> {
        // `i64::from_str` accepts a leading `+`; the format only allows `-`.
        if s.starts_with('+') {
            return None;
        }
        s.parse().ok()
    };
    Some(AxialCoord::new(parse(a)?, parse(b)?))
}

/// Writes `coins` in shape file format, sorted by `a` then `b`.
pub fn serialize(coins: &CoinSet) -> String {
    let mut out = String::with_capacity(coins.len() * 6);
    for c in coins {
        out.push_str(&format!("{} {}\n", c.a, c.b));
    }
    out
}

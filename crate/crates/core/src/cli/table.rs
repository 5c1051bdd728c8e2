//! Per-row data tables for the triangle and rhombus families.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::formulas::{
    rhombus_moves_new, rhombus_moves_old, triangle_move_increment, triangle_moves_new,
    triangle_moves_old, triangular,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Family {
    Triangle,
    Rhombus,
}

impl Family {
    /// Divisor of the floor-division rule.
    pub fn divisor(self) -> u64 {
        match self {
            Family::Triangle => 3,
            Family::Rhombus => 4,
        }
    }

    pub fn total_coins(self, rows: u64) -> u64 {
        match self {
            Family::Triangle => triangular(rows),
            Family::Rhombus => rows * rows,
        }
    }

    fn csv_header(self) -> &'static str {
        match self {
            Family::Triangle => "rows,total_coins,old_formula,moves,increment,decomposition",
            Family::Rhombus => "rows,total_coins,coins_div_4,moves,decomposition",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum TableFormat {
    #[default]
    Csv,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub family: Family,
    pub rows: u64,
    pub total_coins: u64,
    /// Moves from the previous row; triangles only, absent for row 1.
    pub increment: Option<u64>,
    pub moves: u64,
    /// Triangular-number parts, largest first.
    pub decomposition: Vec<u64>,
}

impl TableRow {
    pub fn new(family: Family, rows: u64) -> Result<Self> {
        let total_coins = family.total_coins(rows);
        let (moves, decomposition, increment) = match family {
            Family::Triangle => {
                let d = triangle_moves_new(rows)?;
                let increment = (rows >= 2)
                    .then(|| triangle_move_increment(rows))
                    .transpose()?;
                debug_assert_eq!(d.moves, triangle_moves_old(rows)?);
                (d.moves, d.parts.to_vec(), increment)
            }
            Family::Rhombus => {
                let d = rhombus_moves_new(rows)?;
                debug_assert_eq!(d.moves, rhombus_moves_old(rows)?);
                (d.moves, d.parts.to_vec(), None)
            }
        };
        Ok(Self {
            family,
            rows,
            total_coins,
            increment,
            moves,
            decomposition,
        })
    }

    /// `total_coins / divisor`, exactly.
    pub fn old_formula(&self) -> String {
        format_ratio(self.total_coins, self.family.divisor())
    }

    pub fn decomposition_text(&self) -> String {
        self.decomposition
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Increment cell, optionally spelled out as `current - previous = diff`.
    pub fn increment_text(&self, verbose_diff: bool) -> String {
        match self.increment {
            None => String::new(),
            Some(inc) if verbose_diff => format!("{} - {} = {inc}", self.moves, self.moves - inc),
            Some(inc) => inc.to_string(),
        }
    }

    fn cells(&self, verbose_diff: bool) -> Vec<String> {
        let mut cells = vec![
            self.rows.to_string(),
            self.total_coins.to_string(),
            self.old_formula(),
            self.moves.to_string(),
        ];
        if self.family == Family::Triangle {
            cells.push(self.increment_text(verbose_diff));
        }
        cells.push(self.decomposition_text());
        cells
    }
}

/// Renders `num / den` in decimal. Integers print bare; other values print up
/// to ten digits after the point (truncated), with trailing zeros dropped.
pub fn format_ratio(num: u64, den: u64) -> String {
    let whole = num / den;
    let mut rem = num % den;
    if rem == 0 {
        return whole.to_string();
    }
    let mut out = format!("{whole}.");
    for _ in 0..10 {
        rem *= 10;
        out.push(char::from(b'0' + (rem / den) as u8));
        rem %= den;
        if rem == 0 {
            break;
        }
    }
    out
}

pub fn build_table(family: Family, max_rows: u64) -> Result<Vec<TableRow>> {
    if max_rows < 1 {
        return Err(Error::TooSmall {
            what: "max rows",
            value: max_rows,
            min: 1,
        });
    }
    (1..=max_rows)
        .map(|rows| TableRow::new(family, rows))
        .collect()
}

/// All rows must belong to `family`.
pub fn render_csv(family: Family, rows: &[TableRow], verbose_diff: bool) -> String {
    let mut out = String::new();
    out.push_str(family.csv_header());
    out.push('\n');
    for row in rows {
        let mut cells = row.cells(verbose_diff);
        let last = cells.len() - 1;
        cells[last] = format!("\"{}\"", cells[last]);
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn render_markdown(family: Family, rows: &[TableRow], verbose_diff: bool) -> String {
    let header: &[&str] = match family {
        Family::Triangle => &[
            "Rows",
            "Total coins",
            "Coins / 3",
            "Moves",
            "Increment",
            "Sum of 3 triangular numbers",
        ],
        Family::Rhombus => &[
            "Rows",
            "Total coins",
            "Coins / 4",
            "Moves",
            "Sum of 2 triangular numbers",
        ],
    };
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(
        out,
        "|{}",
        header.iter().map(|_| "---|").collect::<String>()
    );
    for row in rows {
        let _ = writeln!(out, "| {} |", row.cells(verbose_diff).join(" | "));
    }
    out
}

/// Reads back a table written by [`render_csv`], checking every derived
/// column against the row and coin counts.
pub fn parse_csv(family: Family, text: &str) -> Result<Vec<TableRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    let parse_err = |line: usize, message: String| Error::Parse { line, message };

    let header = reader
        .headers()
        .map_err(|e| parse_err(1, e.to_string()))?
        .iter()
        .collect::<Vec<_>>()
        .join(",");
    if header != family.csv_header() {
        return Err(parse_err(1, format!("unexpected header {header:?}")));
    }

    let mut rows = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let line = idx + 2;
        let record = record.map_err(|e| parse_err(line, e.to_string()))?;
        let field = |i: usize| record.get(i).unwrap_or("");
        let int = |i: usize| -> Result<u64> {
            field(i).parse().map_err(|_| {
                parse_err(
                    line,
                    format!("column {} is not an integer: {:?}", i + 1, field(i)),
                )
            })
        };

        let (increment, decomposition_col) = match family {
            Family::Triangle => {
                let cell = field(4);
                let value = cell.rsplit("= ").next().unwrap_or(cell);
                let increment = if cell.is_empty() {
                    None
                } else {
                    Some(
                        value
                            .parse()
                            .map_err(|_| parse_err(line, format!("bad increment {cell:?}")))?,
                    )
                };
                (increment, 5)
            }
            Family::Rhombus => (None, 4),
        };
        let decomposition = field(decomposition_col)
            .split('+')
            .map(|s| s.trim().parse::<u64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| {
                parse_err(
                    line,
                    format!("bad decomposition {:?}", field(decomposition_col)),
                )
            })?;

        let row = TableRow {
            family,
            rows: int(0)?,
            total_coins: int(1)?,
            increment,
            moves: int(3)?,
            decomposition,
        };
        if row.old_formula() != field(2) {
            return Err(parse_err(
                line,
                format!(
                    "old formula {:?} does not match {} coins",
                    field(2),
                    row.total_coins
                ),
            ));
        }
        if row.decomposition.iter().sum::<u64>() != row.moves {
            return Err(parse_err(
                line,
                "decomposition does not sum to moves".into(),
            ));
        }
        rows.push(row);
    }
    Ok(rows)
}

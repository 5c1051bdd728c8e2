//! Closed-form move counts for flipping coin triangles and rhombi.
//!
//! Two families are provided for each shape: the floor-division rule
//! (`⌊coins / 3⌋` for triangles, `⌊coins / 4⌋` for rhombi) and a piecewise
//! sum of triangular numbers picked by the remainder of the row count. The
//! latter also has an expanded polynomial form. All arithmetic is exact.
//!
//! Two conventions differ from a literal reading of the usual presentation
//! of the triangle rule:
//!
//! * the quotient is `m = ⌊(rows - 1) / 3⌋` rather than `⌊rows / 3⌋`, so that
//!   the `p = 0` branch `2·T(m+1) + T(m)` gives 7 for six rows instead of 15;
//! * the `p = 1` polynomial is `(3m² + 3m) / 2`, the actual expansion of
//!   `3·T(m)`; the form `(3m² + 3) / 2` only agrees at `m = 1`.

use std::fmt;

use crate::error::{Error, Result};

/// `k(k+1)/2`, with `T(0) = 0`.
pub fn triangular(k: u64) -> u64 {
    if k.is_multiple_of(2) {
        (k / 2) * (k + 1)
    } else {
        k * k.div_ceil(2)
    }
}

fn require_rows(rows: u64, min: u64) -> Result<()> {
    if rows < min {
        return Err(Error::TooSmall {
            what: "rows",
            value: rows,
            min,
        });
    }
    Ok(())
}

/// Quotient and remainder selecting a branch of the piecewise formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisionWitness {
    pub m: u64,
    pub p: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TriangleDecomposition {
    /// Triangular numbers, largest first.
    pub parts: [u64; 3],
    pub moves: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RhombusDecomposition {
    /// Triangular numbers, largest first.
    pub parts: [u64; 2],
    pub moves: u64,
}

fn write_sum(f: &mut fmt::Formatter<'_>, parts: &[u64]) -> fmt::Result {
    for (i, part) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(" + ")?;
        }
        write!(f, "{part}")?;
    }
    Ok(())
}

impl fmt::Display for TriangleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, &self.parts)
    }
}

impl fmt::Display for RhombusDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, &self.parts)
    }
}

/// `⌊T(rows) / 3⌋`.
pub fn triangle_moves_old(rows: u64) -> Result<u64> {
    require_rows(rows, 1)?;
    Ok(triangular(rows) / 3)
}

pub fn triangle_division(rows: u64) -> Result<DivisionWitness> {
    require_rows(rows, 1)?;
    Ok(DivisionWitness {
        m: (rows - 1) / 3,
        p: rows % 3,
    })
}

pub fn triangle_moves_new(rows: u64) -> Result<TriangleDecomposition> {
    let DivisionWitness { m, p } = triangle_division(rows)?;
    let (small, big) = (triangular(m), triangular(m + 1));
    let parts = match p {
        1 => [small, small, small],
        2 => [big, small, small],
        _ => [big, big, small],
    };
    Ok(TriangleDecomposition {
        parts,
        moves: parts.iter().sum(),
    })
}

pub fn triangle_moves_polynomial(rows: u64) -> Result<u64> {
    let DivisionWitness { m, p } = triangle_division(rows)?;
    let twice = match p {
        1 => 3 * m * m + 3 * m,
        2 => 3 * m * m + 5 * m + 2,
        _ => 3 * m * m + 7 * m + 4,
    };
    debug_assert_eq!(twice % 2, 0);
    Ok(twice / 2)
}

/// Moves gained going from `rows - 1` to `rows` rows. Equal to
/// `⌈(rows - 1) / 3⌉`.
pub fn triangle_move_increment(rows: u64) -> Result<u64> {
    require_rows(rows, 2)?;
    Ok(triangle_moves_new(rows)?.moves - triangle_moves_new(rows - 1)?.moves)
}

/// `⌊rows² / 4⌋`.
pub fn rhombus_moves_old(rows: u64) -> Result<u64> {
    require_rows(rows, 1)?;
    Ok(rows * rows / 4)
}

/// `rows = 2m + p` with `p ∈ {0, 1}`.
pub fn rhombus_division(rows: u64) -> Result<DivisionWitness> {
    require_rows(rows, 1)?;
    Ok(DivisionWitness {
        m: rows / 2,
        p: rows % 2,
    })
}

pub fn rhombus_moves_new(rows: u64) -> Result<RhombusDecomposition> {
    let DivisionWitness { m, p } = rhombus_division(rows)?;
    let parts = if p == 1 {
        [triangular(m), triangular(m)]
    } else {
        // rows ≥ 2 here, so m ≥ 1
        [triangular(m), triangular(m - 1)]
    };
    Ok(RhombusDecomposition {
        parts,
        moves: parts.iter().sum(),
    })
}

pub fn rhombus_moves_polynomial(rows: u64) -> Result<u64> {
    let DivisionWitness { m, p } = rhombus_division(rows)?;
    Ok(if p == 1 { m * m + m } else { m * m })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangular_values() {
        assert_eq!(triangular(0), 0);
        assert_eq!(triangular(4), 10);
        assert_eq!(triangular(8), 36);
        let listed: Vec<_> = (1..=8).map(triangular).collect();
        assert_eq!(listed, [1, 3, 6, 10, 15, 21, 28, 36]);
        for k in 1..=10_000 {
            assert_eq!(triangular(k), triangular(k - 1) + k);
        }
    }

    #[test]
    fn old_formula_examples() {
        assert_eq!(triangle_moves_old(4), Ok(3));
        assert_eq!(triangle_moves_old(10), Ok(18));
        assert_eq!(triangle_moves_old(28), Ok(135));
        assert_eq!(rhombus_moves_old(3), Ok(2));
        assert_eq!(rhombus_moves_old(9), Ok(20));
        assert_eq!(rhombus_moves_old(21), Ok(110));
    }

    #[test]
    fn division_examples() {
        assert_eq!(triangle_division(4), Ok(DivisionWitness { m: 1, p: 1 }));
        assert_eq!(triangle_division(6), Ok(DivisionWitness { m: 1, p: 0 }));
        assert_eq!(triangle_division(9), Ok(DivisionWitness { m: 2, p: 0 }));
        assert_eq!(rhombus_division(7), Ok(DivisionWitness { m: 3, p: 1 }));
        assert_eq!(rhombus_division(8), Ok(DivisionWitness { m: 4, p: 0 }));
    }

    #[test]
    fn p_zero_branch_needs_shifted_quotient() {
        // Only m = 1 makes 2·T(m+1) + T(m) equal 3 + 3 + 1 = 7 for six rows.
        let solutions: Vec<u64> = (0..10)
            .filter(|&m| 2 * triangular(m + 1) + triangular(m) == 7)
            .collect();
        assert_eq!(solutions, vec![1]);
        assert_eq!(triangle_division(6).unwrap().m, 1);
    }

    #[test]
    fn new_formula_examples() {
        let t = |r| triangle_moves_new(r).unwrap();
        assert_eq!(t(5).parts, [3, 1, 1]);
        assert_eq!(t(5).moves, 5);
        assert_eq!(t(19).parts, [21, 21, 21]);
        assert_eq!(t(19).moves, 63);
        assert_eq!(t(1).parts, [0, 0, 0]);
        assert_eq!(t(1).moves, 0);
        assert_eq!(t(9).to_string(), "6 + 6 + 3");

        let r = |n| rhombus_moves_new(n).unwrap();
        assert_eq!(r(4).parts, [3, 1]);
        assert_eq!(r(4).moves, 4);
        assert_eq!(r(20).parts, [55, 45]);
        assert_eq!(r(20).moves, 100);
        assert_eq!(r(1).parts, [0, 0]);
        assert_eq!(r(1).to_string(), "0 + 0");
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(triangle_moves_polynomial(5), Ok(5));
        assert_eq!(triangle_moves_polynomial(9), Ok(15));
        assert_eq!(triangle_moves_polynomial(7), Ok(9));
        assert_eq!(triangle_moves_polynomial(10), Ok(18));
        assert_eq!(triangle_moves_polynomial(13), Ok(30));
        assert_eq!(rhombus_moves_polynomial(5), Ok(6));
        assert_eq!(rhombus_moves_polynomial(6), Ok(9));
        assert_eq!(rhombus_moves_polynomial(2), Ok(1));
    }

    #[test]
    fn increment_examples() {
        assert_eq!(triangle_move_increment(5), Ok(2));
        assert_eq!(triangle_move_increment(2), Ok(1));
        assert_eq!(triangle_move_increment(8), Ok(3));
        assert!(triangle_move_increment(1).is_err());
    }

    #[test]
    fn three_way_agreement() {
        for rows in 1..=1000 {
            let old = triangle_moves_old(rows).unwrap();
            assert_eq!(triangle_moves_new(rows).unwrap().moves, old, "rows {rows}");
            assert_eq!(triangle_moves_polynomial(rows).unwrap(), old, "rows {rows}");

            let old = rhombus_moves_old(rows).unwrap();
            assert_eq!(rhombus_moves_new(rows).unwrap().moves, old, "rows {rows}");
            assert_eq!(rhombus_moves_polynomial(rows).unwrap(), old, "rows {rows}");
        }
    }

    #[test]
    fn parts_step_by_at_most_one_index() {
        let index = |t: u64| (0..).find(|&k| triangular(k) >= t).unwrap();
        for rows in 1..=300 {
            let d = triangle_moves_new(rows).unwrap();
            let ks: Vec<u64> = d.parts.iter().map(|&t| index(t)).collect();
            for (&t, &k) in d.parts.iter().zip(&ks) {
                assert_eq!(triangular(k), t);
            }
            assert!(ks[0] - ks[2] <= 1);
            assert!(d.parts.windows(2).all(|w| w[0] >= w[1]));

            let d = rhombus_moves_new(rows).unwrap();
            let (k0, k1) = (index(d.parts[0]), index(d.parts[1]));
            assert_eq!(triangular(k0), d.parts[0]);
            assert_eq!(triangular(k1), d.parts[1]);
            assert!(k0 >= k1 && k0 - k1 <= 1);
        }
    }

    #[test]
    fn increments_come_in_threes() {
        let incs: Vec<u64> = (2..=301)
            .map(|r| triangle_move_increment(r).unwrap())
            .collect();
        for (i, chunk) in incs.chunks(3).enumerate() {
            assert_eq!(chunk, [i as u64 + 1; 3]);
        }
        for rows in 2..=100u64 {
            assert_eq!(
                triangle_move_increment(rows).unwrap(),
                (rows - 1).div_ceil(3)
            );
        }
    }

    #[test]
    fn zero_rows_rejected() {
        assert!(triangle_moves_old(0).is_err());
        assert!(triangle_division(0).is_err());
        assert!(triangle_moves_new(0).is_err());
        assert!(triangle_moves_polynomial(0).is_err());
        assert!(rhombus_moves_old(0).is_err());
        assert!(rhombus_moves_new(0).is_err());
        assert!(rhombus_moves_polynomial(0).is_err());
    }
}

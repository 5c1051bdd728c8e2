//! Row-by-row sweep comparing every closed form with the search oracle.

use std::fmt::Write as _;

use crate::error::Result;
use crate::formulas::{
    rhombus_moves_new, rhombus_moves_old, rhombus_moves_polynomial, triangle_moves_new,
    triangle_moves_old, triangle_moves_polynomial,
};
use crate::lattice::{CoinSet, FlipKind};
use crate::oracle::{solve, OverlapResult, ProtrusionReport};
use crate::shapes::{rhombus, triangle_up};

/// Everything checked for one shape at one row count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub shape: &'static str,
    pub rows: u64,
    pub old: u64,
    pub new: u64,
    pub decomposition: Vec<u64>,
    pub polynomial: u64,
    /// Oracle minimum for each flip that was searched.
    pub oracle: Vec<(FlipKind, u64)>,
    pub placements: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowCheck {
    pub rows: u64,
    pub triangle: FamilyCheck,
    pub rhombus: FamilyCheck,
}

impl RowCheck {
    pub fn summary(&self) -> String {
        let fam = |f: &FamilyCheck| {
            format!(
                "{} {} moves [{}], {} optimal placements",
                f.shape,
                f.new,
                f.decomposition
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" + "),
                f.placements
            )
        };
        format!(
            "rows {:>3}: ok  {}; {}",
            self.rows,
            fam(&self.triangle),
            fam(&self.rhombus)
        )
    }
}

/// A failed check with enough context to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub rows: u64,
    pub shape: &'static str,
    pub what: String,
    pub dump: String,
}

impl std::fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "FAIL rows {} {}: {}", self.rows, self.shape, self.what)?;
        f.write_str(&self.dump)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checked: Vec<RowCheck>,
    pub failure: Option<Discrepancy>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks rows `1..=max_rows`, stopping at the first discrepancy.
pub fn verify(max_rows: u64) -> Result<VerifyReport> {
    let mut checked = Vec::new();
    for rows in 1..=max_rows {
        match check_rows(rows)? {
            Ok(row) => checked.push(row),
            Err(failure) => {
                return Ok(VerifyReport {
                    checked,
                    failure: Some(failure),
                })
            }
        }
    }
    Ok(VerifyReport {
        checked,
        failure: None,
    })
}

pub fn check_rows(rows: u64) -> Result<std::result::Result<RowCheck, Discrepancy>> {
    let triangle = {
        let shape = triangle_up(rows)?;
        let d = triangle_moves_new(rows)?;
        check_family(
            "triangle",
            rows,
            &shape,
            triangle_moves_old(rows)?,
            d.parts.to_vec(),
            triangle_moves_polynomial(rows)?,
            &[FlipKind::Rotate180, FlipKind::MirrorVertical],
            3,
        )?
    };
    let triangle = match triangle {
        Ok(t) => t,
        Err(e) => return Ok(Err(e)),
    };
    let rhombus = {
        let shape = rhombus(rows)?;
        let d = rhombus_moves_new(rows)?;
        check_family(
            "rhombus",
            rows,
            &shape,
            rhombus_moves_old(rows)?,
            d.parts.to_vec(),
            rhombus_moves_polynomial(rows)?,
            &[FlipKind::MirrorHorizontal, FlipKind::MirrorVertical],
            2,
        )?
    };
    Ok(rhombus.map(|rhombus| RowCheck {
        rows,
        triangle,
        rhombus,
    }))
}

/// `flips[0]` is the flip whose optimal placements get the protrusion
/// check; every flip's minimum must agree with the formulas.
#[allow(clippy::too_many_arguments)]
fn check_family(
    shape: &'static str,
    rows: u64,
    coins: &CoinSet,
    old: u64,
    decomposition: Vec<u64>,
    polynomial: u64,
    flips: &[FlipKind],
    arity: usize,
) -> Result<std::result::Result<FamilyCheck, Discrepancy>> {
    let new: u64 = decomposition.iter().sum();
    let results: Vec<OverlapResult> = flips
        .iter()
        .map(|&f| solve(coins, f))
        .collect::<Result<_>>()?;
    let check = FamilyCheck {
        shape,
        rows,
        old,
        new,
        decomposition: decomposition.clone(),
        polynomial,
        oracle: results
            .iter()
            .map(|r| (r.flip, r.min_moves as u64))
            .collect(),
        placements: results[0].optimal_placements.len(),
    };
    let fail = |what: String, dump: String| {
        Ok(Err(Discrepancy {
            rows,
            shape,
            what,
            dump,
        }))
    };

    if old != new || new != polynomial || check.oracle.iter().any(|&(_, m)| m != new) {
        return fail(
            "closed forms and oracle disagree".into(),
            format!("{check:#?}\n"),
        );
    }

    let primary = &results[0];
    let expected: Vec<usize> = decomposition.iter().map(|&d| d as usize).collect();
    for placement in &primary.optimal_placements {
        let report = primary.protrusions(coins, placement, Some(arity))?;
        let problem = if report.source_components.len() > arity {
            Some(format!(
                "{} protrusions, expected at most {arity}",
                report.source_components.len()
            ))
        } else if !report.all_triangular() {
            Some("a protrusion is not a triangle".to_string())
        } else if report.size_multiset != expected {
            Some(format!(
                "protrusion sizes {:?}, expected {expected:?}",
                report.size_multiset
            ))
        } else if report.target_size_multiset() != report.size_multiset {
            Some("source and target protrusions differ".to_string())
        } else {
            None
        };
        if let Some(what) = problem {
            return fail(what, dump_report(&check, &report));
        }
    }
    Ok(Ok(check))
}

fn dump_report(check: &FamilyCheck, report: &ProtrusionReport) -> String {
    let mut out = format!("{check:#?}\nplacement: {}\n", report.placement);
    for (label, comps) in [
        ("source", &report.source_components),
        ("target", &report.target_components),
    ] {
        for c in comps {
            let coins: Vec<String> = c.coins.iter().map(ToString::to_string).collect();
            let _ = writeln!(
                out,
                "{label} protrusion size {} triangle {:?}: {}",
                c.size,
                c.triangle,
                coins.join(" ")
            );
        }
    }
    out
}

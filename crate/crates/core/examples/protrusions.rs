//! Breaks the coins that move into connected clusters and checks that each
//! is itself a triangle of coins.
//!
//! cargo run --example protrusions [ROWS]

use coinflip::oracle::solve;
use coinflip::shapes::triangle_up;
use coinflip::FlipKind;

fn main() -> coinflip::Result<()> {
    let rows: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    let start = triangle_up(rows)?;
    let result = solve(&start, FlipKind::Rotate180)?;
    println!(
        "{rows}-row triangle: {} moves, {} minimal placements",
        result.min_moves,
        result.optimal_placements.len()
    );
    for placement in &result.optimal_placements {
        let report = result.protrusions(&start, placement, Some(3))?;
        println!("\n{placement}: sizes {:?}", report.size_multiset);
        for p in &report.source_components {
            match p.triangle {
                Some(t) => println!(
                    "  {} coins: {}-row {} triangle",
                    p.size, t.rows, t.orientation
                ),
                None => println!("  {} coins: not a triangle", p.size),
            }
        }
    }
    Ok(())
}

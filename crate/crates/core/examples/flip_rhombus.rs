//! Rhombi can be mirrored either way for the same cost.
//!
//! cargo run --example flip_rhombus [MAX_ROWS]

use coinflip::oracle::solve;
use coinflip::shapes::rhombus;
use coinflip::FlipKind;

fn main() -> coinflip::Result<()> {
    let max_rows: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    println!("rows  coins  mirror-h  mirror-v  placements(h)");
    for rows in 1..=max_rows {
        let shape = rhombus(rows)?;
        let h = solve(&shape, FlipKind::MirrorHorizontal)?;
        let v = solve(&shape, FlipKind::MirrorVertical)?;
        println!(
            "{rows:>4}  {:>5}  {:>8}  {:>8}  {:>13}",
            h.total_coins,
            h.min_moves,
            v.min_moves,
            h.optimal_placements.len()
        );
    }
    Ok(())
}

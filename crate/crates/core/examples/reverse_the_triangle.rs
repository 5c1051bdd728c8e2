//! The classic ten-coin puzzle: flip a 4-row triangle upside down.
//!
//! cargo run --example reverse_the_triangle

use coinflip::oracle::solve;
use coinflip::shapes::triangle_up;
use coinflip::FlipKind;

fn main() -> coinflip::Result<()> {
    let triangle = triangle_up(4)?;
    let result = solve(&triangle, FlipKind::Rotate180)?;

    println!("coins:      {}", result.total_coins);
    println!("overlap:    {}", result.max_overlap);
    println!("min moves:  {}", result.min_moves);

    let placement = result.optimal_placements[0];
    let plan = result.move_plan(&triangle, &placement)?;
    println!("placement:  {placement}");
    for m in &plan.moves {
        println!("  move {} -> {}", m.from, m.to);
    }
    assert_eq!(plan.apply(&triangle), Some(placement.target(&triangle)?));
    Ok(())
}

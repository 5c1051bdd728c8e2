//! Hexagons are their own 180° image, so turning one over costs nothing.
//!
//! cargo run --example symmetric_shapes

use coinflip::oracle::solve;
use coinflip::shapes::hexagon;
use coinflip::FlipKind;

fn main() -> coinflip::Result<()> {
    for side in 1..=10 {
        let shape = hexagon(side)?;
        let rot = solve(&shape, FlipKind::Rotate180)?;
        let mirror = solve(&shape, FlipKind::MirrorHorizontal)?;
        println!(
            "hexagon side {side:>2}: {:>3} coins, rot180 {} moves, mirror-h {} moves",
            shape.len(),
            rot.min_moves,
            mirror.min_moves
        );
    }
    Ok(())
}

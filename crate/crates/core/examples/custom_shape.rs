//! Solves a shape read from a coordinate file under all three flips.
//!
//! cargo run --example custom_shape [PATH]

use coinflip::oracle::solve;
use coinflip::shapes::{load_custom, serialize};
use coinflip::FlipKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/shapes/notched_triangle.txt"
        )
        .to_string()
    });
    let coins = load_custom(&std::fs::read_to_string(&path)?)?;
    println!("{path}: {} coins", coins.len());
    print!("{}", serialize(&coins));
    for flip in FlipKind::ALL {
        let r = solve(&coins, flip)?;
        println!(
            "{flip:>8}: {} moves, overlap {}, {} minimal placements",
            r.min_moves,
            r.max_overlap,
            r.optimal_placements.len()
        );
    }
    Ok(())
}

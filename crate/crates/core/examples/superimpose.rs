//! Draws every minimal solution of the 5-row triangle. Pass `--svg DIR` to
//! also write one SVG file per solution.
//!
//! cargo run --example superimpose [-- --svg out/]

use coinflip::cli::render::{render_ascii, render_svg};
use coinflip::oracle::solve;
use coinflip::shapes::triangle_up;
use coinflip::FlipKind;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().collect();
    let svg_dir = args
        .iter()
        .position(|a| a == "--svg")
        .and_then(|i| args.get(i + 1));

    let start = triangle_up(5)?;
    let result = solve(&start, FlipKind::Rotate180)?;
    for (i, placement) in result.optimal_placements.iter().enumerate() {
        let target = placement.target(&start)?;
        println!("solution {i}: {placement}");
        println!("{}", render_ascii(&start, &target).to_text());
        if let Some(dir) = svg_dir {
            std::fs::create_dir_all(dir)?;
            let path = std::path::Path::new(dir).join(format!("triangle5_{i}.svg"));
            std::fs::write(&path, render_svg(&start, &target))?;
            println!("wrote {}", path.display());
        }
    }
    Ok(())
}

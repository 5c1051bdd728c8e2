//! Regenerates the triangle and rhombus data tables as Markdown.
//!
//! cargo run --example data_tables

use coinflip::cli::table::{build_table, render_markdown, Family};

fn main() -> coinflip::Result<()> {
    let triangles = build_table(Family::Triangle, 28)?;
    print!("{}", render_markdown(Family::Triangle, &triangles, true));
    println!();
    let rhombi = build_table(Family::Rhombus, 21)?;
    print!("{}", render_markdown(Family::Rhombus, &rhombi, false));
    Ok(())
}

//! The floor-division rules next to the triangular-number sums and their
//! polynomial expansions.
//!
//! cargo run --example closed_forms

use coinflip::formulas::*;

fn main() -> coinflip::Result<()> {
    println!("triangles: rows (m, p)  old  sum-of-three          polynomial  increment");
    for rows in 1..=15 {
        let w = triangle_division(rows)?;
        let d = triangle_moves_new(rows)?;
        let inc = if rows >= 2 {
            triangle_move_increment(rows)?.to_string()
        } else {
            "-".into()
        };
        println!(
            "{rows:>5} ({}, {})  {:>4}  {:<20}  {:>10}  {inc:>9}",
            w.m,
            w.p,
            triangle_moves_old(rows)?,
            d.to_string(),
            triangle_moves_polynomial(rows)?
        );
    }
    println!();
    println!("rhombi:    rows (m, p)  old  sum-of-two   polynomial");
    for rows in 1..=10 {
        let w = rhombus_division(rows)?;
        println!(
            "{rows:>5} ({}, {})  {:>4}  {:<11}  {:>10}",
            w.m,
            w.p,
            rhombus_moves_old(rows)?,
            rhombus_moves_new(rows)?.to_string(),
            rhombus_moves_polynomial(rows)?
        );
    }
    Ok(())
}

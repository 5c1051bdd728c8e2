//! Cross-checks every closed form against the search for a range of rows.
//!
//! cargo run --release --example verify_sweep [MAX_ROWS]

use coinflip::cli::verify::verify;

fn main() -> coinflip::Result<()> {
    let max_rows: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(30);
    let report = verify(max_rows)?;
    for row in &report.checked {
        println!("{}", row.summary());
    }
    match report.failure {
        Some(failure) => {
            print!("{failure}");
            std::process::exit(1);
        }
        None => println!("all checks passed for rows 1..={max_rows}"),
    }
    Ok(())
}

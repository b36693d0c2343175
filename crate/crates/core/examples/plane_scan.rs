//! Writes the property table for every G(n,k) with n <= 20 as CSV on stdout.
//!
//!     cargo run --release --example plane_scan > plane.csv

use gpetersen::plane::{plane_csv, scan};
use gpetersen::SearchBudget;

fn main() -> gpetersen::Result<()> {
    print!("{}", plane_csv(&scan(20, SearchBudget::default())?));
    Ok(())
}

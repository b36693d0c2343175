//! Builds the explicit retraction of a non-core G(n,k) onto one of its inner
//! cycles and prints it vertex by vertex.
//!
//!     cargo run --example retraction -- 9 3

use gpetersen::cores::{build_retraction, retraction_target};
use gpetersen::hom::verify_retraction;
use gpetersen::{build_gp, GPParams};

fn main() -> gpetersen::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, k) = match args[..] {
        [n, k] => (n, k),
        _ => (9, 3),
    };
    let p = GPParams::new(n, k)?;
    let f = build_retraction(p)?;
    let target = retraction_target(p);
    for v in 0..p.vertex_count() {
        println!("{:>4} -> {}", p.vertex(v), p.vertex(f.get(v)));
    }
    println!("onto {} vertices, verified: {}", target.len(), verify_retraction(&build_gp(p), &f, &target));
    Ok(())
}

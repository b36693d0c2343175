//! The bipartite double cover of G(5,2) is the Desargues graph G(10,3).

use gpetersen::cayley::is_isomorphic;
use gpetersen::gp::{is_covering_map, kronecker_cover, kronecker_projection};
use gpetersen::{build_gp, GPParams, SearchBudget};

fn main() -> gpetersen::Result<()> {
    let petersen = build_gp(GPParams::new(5, 2)?);
    let cover = kronecker_cover(&petersen);
    let projection = kronecker_projection(petersen.order());
    println!("cover: {} vertices, bipartite={}", cover.order(), cover.is_bipartite());
    println!("projection is a covering map: {}", is_covering_map(&cover, &petersen, &projection));
    let desargues = build_gp(GPParams::new(10, 3)?);
    match is_isomorphic(&cover, &desargues, SearchBudget::default())? {
        Some(f) => println!("isomorphic to G(10,3): {:?}", f.images()),
        None => println!("not isomorphic to G(10,3)"),
    }
    Ok(())
}

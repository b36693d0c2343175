//! The search kernel on its own: colourings as homomorphisms to K3, odd cycles
//! mapping into the Petersen graph, and endomorphism-transitivity.

use gpetersen::cores::is_endomorphism_transitive;
use gpetersen::hom::{find_homomorphism, is_endo_transitive_oracle};
use gpetersen::{build_gp, GPParams, SearchBudget, SimpleGraph};

fn main() -> gpetersen::Result<()> {
    let budget = SearchBudget::default();
    let petersen = build_gp(GPParams::new(5, 2)?);
    let k3 = SimpleGraph::complete(3);
    match find_homomorphism(&petersen, &k3, &[], budget)? {
        Some(c) => println!("3-colouring of G(5,2): {:?}", c.images()),
        None => println!("G(5,2) is not 3-colourable"),
    }
    for len in [3, 5, 7, 9] {
        let found = find_homomorphism(&SimpleGraph::cycle(len), &petersen, &[], budget)?.is_some();
        println!("C{len} -> G(5,2): {found}");
    }
    for p in GPParams::all_up_to(10) {
        let closed = is_endomorphism_transitive(p);
        let searched = is_endo_transitive_oracle(&build_gp(p), budget)?;
        println!("{p:<8} endomorphism-transitive: {closed} (search: {searched})");
    }
    Ok(())
}

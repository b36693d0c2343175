//! Automorphism groups of small G(n,k), counted by search and compared with
//! the closed form where one is known.

use gpetersen::symmetry::{
    aut_group_bruteforce, expected_aut_order, inside_out, is_vertex_transitive, orbits,
};
use gpetersen::{build_gp, GPParams, SearchBudget};

fn main() -> gpetersen::Result<()> {
    for p in GPParams::all_up_to(12) {
        let g = build_gp(p);
        let aut = aut_group_bruteforce(&g, SearchBudget::default())?;
        let expected = expected_aut_order(p).map_or("-".to_string(), |e| e.to_string());
        let io = if inside_out(p).is_isomorphism(&g, &g) { "yes" } else { "no" };
        println!(
            "{p:<8} |Aut|={:<5} expected={expected:<5} orbits={} vertex-transitive={} inside-out={io}",
            aut.len(),
            orbits(p.vertex_count(), &aut).len(),
            is_vertex_transitive(p),
        );
    }
    Ok(())
}

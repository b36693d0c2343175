//! Which G(n,k) are cores? Prints the closed-form verdict for n up to 15 and
//! checks the small ones against an exhaustive endomorphism search.

use gpetersen::cores::{classify_core, CoreStatus};
use gpetersen::hom::is_core_oracle;
use gpetersen::{build_gp, GPParams, SearchBudget};

fn main() -> gpetersen::Result<()> {
    for p in GPParams::all_up_to(15) {
        let v = classify_core(p);
        let label = match v.status {
            CoreStatus::Bipartite => "bipartite (core is K2)".to_string(),
            CoreStatus::Core(r) => format!("core ({r:?})"),
            CoreStatus::NotCore(_) => "retracts onto an inner cycle".to_string(),
        };
        let checked = if p.n() <= 10 {
            let oracle = is_core_oracle(&build_gp(p), SearchBudget::default())?;
            if oracle == v.is_core() { "  [search agrees]" } else { "  [SEARCH DISAGREES]" }
        } else {
            ""
        };
        println!("{p:<8} d={} a={:<3} {label}{checked}", v.d, v.a);
    }
    Ok(())
}

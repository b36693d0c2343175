//! Realizes generalized Petersen graphs as Cayley graphs of semigroups and
//! checks each against its target with an explicit isomorphism.

use gpetersen::cayley::{build_cayley, two_gen_representation, verify_representation, Construction};
use gpetersen::{GPParams, SearchBudget};

fn main() -> gpetersen::Result<()> {
    let budget = SearchBudget::default();
    for name in Construction::NAMES {
        let c = Construction::from_name(name)?;
        let (rep, target) = match c.fixed_target() {
            Some((n, k)) => (c.build(None)?, GPParams::new(n, k)?),
            None => {
                let p = if name == "group" { GPParams::new(8, 3)? } else { GPParams::new(10, 4)? };
                (c.build(Some(p))?, p)
            }
        };
        let report = verify_representation(&rep.table, &rep.connection, target, budget)?;
        let census = build_cayley(&rep.table, &rep.connection)?.census();
        println!(
            "{name:<14} -> {target:<8} realizes={} loops={} parallel={} antiparallel={}",
            report.realizes_target(),
            census.loops,
            census.parallel,
            census.antiparallel,
        );
    }
    for p in GPParams::all_up_to(12) {
        if let Some(rep) = two_gen_representation(p)? {
            println!("{p:<8} via {} (order {})", rep.name, rep.table.order());
        }
    }
    Ok(())
}

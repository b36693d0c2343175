//! Builds a few finite semigroups and prints their structural report.

use gpetersen::algebra::{
    cay1_monoid, combinator_null_extension, cyclic_group, dihedral_group, direct_product,
    left_zero_band, presented_group_alpha_gamma, BuiltinTable, OpTable,
};
use gpetersen::GPParams;

fn show(name: &str, t: &OpTable) {
    let r = t.report();
    println!(
        "{name:<16} order={:<3} assoc={} identity={:?} idempotents={:?} completely-regular={} orthogroup={}",
        t.order(),
        r.associative,
        r.identity,
        r.idempotents,
        r.completely_regular,
        r.is_orthogroup,
    );
}

fn main() -> gpetersen::Result<()> {
    show("Z6", &cyclic_group(6)?);
    show("D4", &dihedral_group(4)?);
    show("Z2 x L3", &direct_product(&cyclic_group(2)?, &left_zero_band(3)?)?);
    show("<a,c> n=8 k=3", &presented_group_alpha_gamma(8, 3)?);
    show("cay1 (10,4)", &cay1_monoid(GPParams::new(10, 4)?)?);

    // Z3 with an absorbing zero, extended by Z2 over the ideal {0*}
    let r = OpTable::from_fn(4, |x, y| if x == 3 || y == 3 { 3 } else { (x + y) % 3 })?;
    show("null ext", &combinator_null_extension(&r, &[3], &cyclic_group(2)?)?);

    for b in BuiltinTable::ALL {
        show(b.name(), &b.table());
    }
    Ok(())
}

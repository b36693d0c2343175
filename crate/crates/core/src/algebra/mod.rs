//! Finite operation tables, structural predicates, and the semigroup constructions
//! used to realize generalized Petersen graphs as Cayley graphs.

mod builtin;
mod constructors;
mod table;

pub use builtin::{desargues_m, BuiltinTable};
pub use constructors::{
    cay1_connection, cay1_monoid, combinator_left_band_extension, combinator_null_extension,
    cyclic_group, dihedral_group, direct_product, left_zero_band, null_semigroup,
    presented_group_alpha_gamma, Cay1Variant, ALPHA, GAMMA,
};
pub use table::{AlgebraReport, OpTable, TableJson};

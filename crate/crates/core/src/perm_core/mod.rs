//! Permutation-group engine.

mod chain;
mod fpf;
mod group;
mod hom;
mod iso;
mod perm;
mod structure;
mod table;

pub use chain::StabChain;
pub use fpf::{classify_p_group, fixed_point_free_classify, FpfClassification, PGroupShape};
pub use group::FiniteGroup;
pub use hom::GroupHom;
pub use iso::is_isomorphic;
pub use perm::Permutation;
pub use structure::{
    build_group, chief_series, compose, contains, derived_subgroup, direct_product, element_order, frattini, is_normal,
    is_solvable, minimal_normal_subgroups, normal_closure, normal_hall_subgroup, normal_subgroups, quotient, socle,
    structure_flags, sylow_subgroup, NormalSeries, SeriesKind, StructureFlags,
};
pub use table::{CayleyTable, Classes, Elt, IndexSubgroup};

pub(crate) use structure::{normal_hall_in, normal_subgroups_in, socle_in};

//! Finite groups as explicit multiplication tables and the structural
//! algorithms built on them.

mod classes;
mod iso;
mod perm;
mod products;
mod recognize;
pub(crate) mod subgroup;
mod table;

pub use classes::{conjugacy_classes, ConjugacyData};
pub use iso::{are_isomorphic, is_isomorphic, Fingerprint};
pub use perm::{close_generators, close_generators_named, parse_cycle_list, Permutation};
pub use products::{direct_product, semidirect_product, Action};
pub use recognize::{is_quaternion_2group, recognize_structure, StructureTag};
pub use subgroup::{
    center, derived_subgroup, has_elementary_abelian_p2, normal_closure, normal_subgroups,
    normalizer_centralizer, quotient, sylow_subgroup, SubgroupSet,
};
pub use table::{Elem, GroupMap, GroupTable};

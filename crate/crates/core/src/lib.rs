//! Finite group toolkit for groups with periodic cohomology.
//!
//! Every group is an explicit multiplication table ([`GroupTable`]). On top of
//! that substrate the crate provides
//!
//! * structural algorithms: conjugacy classes, Sylow subgroups, normal
//!   subgroups, quotients, isomorphism testing ([`group`]);
//! * presentation parsing and Todd–Coxeter coset enumeration
//!   ([`presentation`]);
//! * Frobenius–Schur indicators and the quaternionic count `m_H` from a
//!   character table computed over a prime field ([`chartab`]);
//! * the Sylow criterion for periodic cohomology and the cohomological period
//!   ([`periodicity`]);
//! * constructions of the 4-periodic families, including non-split cyclic
//!   extensions from 2-cocycles ([`catalog`]);
//! * quotient analysis and the classification report ([`classify`]).
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod catalog;
pub mod chartab;
pub mod classify;
mod error;
pub mod group;
pub mod periodicity;
pub mod pool;
pub mod presentation;

pub use crate::error::{Error, Result};
pub use crate::group::{
    ConjugacyData, GroupMap, GroupTable, Permutation, StructureTag, SubgroupSet,
};

/// Default bound on the order of any constructed group.
pub const DEFAULT_MAX_ORDER: usize = 5000;
/// Default node budget for the isomorphism search.
pub const DEFAULT_ISO_BUDGET: u64 = 10_000_000;
/// Default coset budget for Todd–Coxeter enumeration.
pub const DEFAULT_MAX_COSETS: usize = 100_000;

/// Resource limits shared by the builders.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub max_cosets: usize,
    pub iso_budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            max_cosets: DEFAULT_MAX_COSETS,
            iso_budget: DEFAULT_ISO_BUDGET,
        }
    }
}

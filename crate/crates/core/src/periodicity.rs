//! Periodic cohomology by the Sylow criterion, and the cohomological period.
//!
//! `G` has periodic cohomology iff every Sylow subgroup is cyclic or
//! generalized quaternion. The period is the lcm of the `p`-periods:
//! `2·|N_G(P) : C_G(P)|` for odd `p` (with `P` cyclic), `2` for a cyclic
//! Sylow 2-subgroup and `4` for a generalized quaternion one.

use alloc::vec::Vec;

use crate::arith::{lcm, prime_divisors};
use crate::group::{is_quaternion_2group, normalizer_centralizer, sylow_subgroup, GroupTable};

/// Shape of a Sylow subgroup as far as periodicity is concerned.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum SylowTag {
    Cyclic,
    GeneralizedQuaternion,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PrimeData {
    pub p: u64,
    pub sylow_order: u64,
    pub sylow_tag: SylowTag,
    pub p_period: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PeriodicityReport {
    pub periodic: bool,
    pub period: Option<u64>,
    pub per_prime: Vec<PrimeData>,
}

pub fn periodicity_report(g: &GroupTable) -> PeriodicityReport {
    let mut per_prime = Vec::new();
    for p in prime_divisors(g.order() as u64) {
        let s = sylow_subgroup(g, p);
        let (st, _) = s.to_table(g);
        let tag = if st.is_cyclic() {
            SylowTag::Cyclic
        } else if p == 2 && is_quaternion_2group(&st) {
            SylowTag::GeneralizedQuaternion
        } else {
            SylowTag::Other
        };
        let p_period = match (tag, p) {
            (SylowTag::Other, _) => None,
            (SylowTag::GeneralizedQuaternion, _) => Some(4),
            (SylowTag::Cyclic, 2) => {
                // N/C embeds in Aut(C_{2^k}), a 2-group, and has odd order
                // because P ⊆ C; so it is trivial.
                let (n, c) = normalizer_centralizer(g, &s);
                assert_eq!(n.size(), c.size(), "cyclic Sylow 2-subgroup with |N:C| > 1");
                Some(2)
            }
            (SylowTag::Cyclic, _) => {
                let (n, c) = normalizer_centralizer(g, &s);
                Some(2 * (n.size() / c.size()) as u64)
            }
        };
        per_prime.push(PrimeData {
            p,
            sylow_order: s.size() as u64,
            sylow_tag: tag,
            p_period,
        });
    }
    let periodic = per_prime.iter().all(|d| d.sylow_tag != SylowTag::Other);
    let period = if periodic {
        let period = per_prime
            .iter()
            .fold(1, |acc, d| lcm(acc, d.p_period.expect("periodic prime has a period")));
        // The trivial group is periodic with period 1 by convention here.
        assert!(g.order() == 1 || period % 2 == 0, "odd cohomological period");
        Some(period)
    } else {
        None
    };
    PeriodicityReport {
        periodic,
        period,
        per_prime,
    }
}

pub fn has_periodic_cohomology(g: &GroupTable) -> bool {
    periodicity_report(g).periodic
}

pub fn cohomological_period(g: &GroupTable) -> Option<u64> {
    periodicity_report(g).period
}

/// Whether the period exists and divides 4.
pub fn is_4_periodic(g: &GroupTable) -> bool {
    cohomological_period(g).is_some_and(|p| 4 % p == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn basic_periods() {
        let klein = GroupTable::from_fn(4, |a, b| a ^ b).unwrap();
        assert!(!has_periodic_cohomology(&klein));
        assert_eq!(cohomological_period(&GroupTable::cyclic(7)), Some(2));
        assert_eq!(cohomological_period(&catalog::dihedral(3)), Some(4));
        assert_eq!(cohomological_period(&catalog::quaternion(2)), Some(4));
        assert_eq!(cohomological_period(&catalog::dihedral(4)), None);
        assert_eq!(cohomological_period(&GroupTable::trivial()), Some(1));
    }

    #[test]
    fn per_prime_tags() {
        let r = periodicity_report(&catalog::quaternion(3));
        assert_eq!(r.per_prime.len(), 2);
        assert_eq!(r.per_prime[0].sylow_tag, SylowTag::Cyclic);
        assert_eq!(r.per_prime[1].p_period, Some(4));
        let r = periodicity_report(catalog::binary_icosahedral());
        assert_eq!(r.per_prime[0].sylow_tag, SylowTag::GeneralizedQuaternion);
        assert_eq!(r.period, Some(4));
    }
}

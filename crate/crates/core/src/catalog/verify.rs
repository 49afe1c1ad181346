use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{
    binary_octahedral, binary_tetrahedral, build_extension, octahedral_sign_action,
    two_cocycle_classes, Atom, GroupExpr,
};
use crate::arith::p_part;
use crate::chartab::m_quaternionic;
use crate::group::{are_isomorphic, center, normal_subgroups, quotient, sylow_subgroup, GroupTable};
use crate::periodicity::cohomological_period;
use crate::{Result, DEFAULT_ISO_BUDGET, DEFAULT_MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCheckEntry {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of [`verify_family_axioms`]: one entry per defining check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCheck {
    pub claimed: String,
    pub entries: Vec<FamilyCheckEntry>,
}

impl FamilyCheck {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    fn push(&mut self, name: &'static str, outcome: Result<(bool, String)>) {
        let (passed, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        self.entries.push(FamilyCheckEntry {
            name,
            passed,
            detail,
        });
    }
}

/// The `m_H` value each family member is known to have, when fixed.
pub(crate) fn expected_m_h(atom: &Atom) -> Option<usize> {
    match *atom {
        Atom::Cyclic(_) => Some(0),
        Atom::Dihedral(n) if n % 2 == 1 => Some(0),
        Atom::Dihedral(_) => None,
        Atom::Quaternion(n) => Some(n / 2),
        Atom::BinaryTetrahedral => Some(1),
        Atom::BinaryOctahedral | Atom::BinaryIcosahedral => Some(2),
        Atom::Dd { m, .. } => Some((m - 1) / 2),
        Atom::Pp { .. } => Some(1),
        Atom::Ppp { .. } => Some(2),
        Atom::Qt { n: 4, a: 1, .. } => Some(2),
        Atom::Qt { .. } => None,
    }
}

fn has_quotient_isomorphic_to(g: &GroupTable, h: &GroupTable) -> Result<bool> {
    if g.order() % h.order() != 0 {
        return Ok(false);
    }
    let kernel_size = g.order() / h.order();
    for n in normal_subgroups(g).iter().filter(|n| n.size() == kernel_size) {
        let (q, _) = quotient(g, n)?;
        if are_isomorphic(&q, h, DEFAULT_ISO_BUDGET)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Runs the defining checks of the family `claimed` against `g`.
///
/// `claimed` is a family atom, optionally multiplied by cyclic factors of
/// coprime order. Failures and errors become report entries.
pub fn verify_family_axioms(g: &GroupTable, claimed: &GroupExpr) -> FamilyCheck {
    let mut report = FamilyCheck {
        claimed: claimed.to_string(),
        entries: Vec::new(),
    };
    let main = claimed
        .factors
        .iter()
        .find(|a| !matches!(a, Atom::Cyclic(_)))
        .or(claimed.factors.first())
        .copied();
    let Some(main) = main else {
        report.push("order", Ok((false, "empty expression".into())));
        return report;
    };
    let k = (g.order() as u64) / main.order().unwrap_or(1).max(1);

    let expected = claimed.order().unwrap_or(0);
    report.push(
        "order",
        Ok((g.order() as u64 == expected, format!("{} (formula {expected})", g.order()))),
    );
    let period = cohomological_period(g);
    report.push(
        "period_divides_4",
        Ok((
            period.is_some_and(|p| 4 % p == 0),
            format!("{period:?}"),
        )),
    );
    if let Some(want) = expected_m_h(&main) {
        report.push(
            "m_h",
            m_quaternionic(g).map(|m| (m == want, format!("{m} (expected {want})"))),
        );
    }
    match main {
        Atom::Dd { n, .. } => {
            let z = center(g);
            let want = (1usize << (n - 1)) * k as usize;
            report.push(
                "center_cyclic_of_order_2^(n-1)k",
                Ok((
                    z.size() == want && z.to_table(g).0.is_cyclic(),
                    format!("center order {}", z.size()),
                )),
            );
        }
        Atom::Pp { .. } => {
            report.push(
                "quotient_binary_tetrahedral",
                has_quotient_isomorphic_to(g, binary_tetrahedral()).map(|b| (b, String::new())),
            );
        }
        Atom::Ppp { n } => {
            report.push(
                "quotient_binary_octahedral",
                has_quotient_isomorphic_to(g, binary_octahedral()).map(|b| (b, String::new())),
            );
            let s = sylow_subgroup(g, 3);
            report.push(
                "cyclic_sylow_3",
                Ok((
                    s.to_table(g).0.is_cyclic(),
                    format!("Sylow 3-subgroup of order {}", s.size()),
                )),
            );
            if n % 3 == 0 && 48 * n <= DEFAULT_MAX_ORDER {
                report.push("admissible_classes_isomorphic", admissible_classes_agree(n));
            }
        }
        Atom::BinaryTetrahedral | Atom::BinaryOctahedral | Atom::BinaryIcosahedral => {
            let z = center(g).size();
            report.push(
                "center_order_2k",
                Ok((z == 2 * k as usize, format!("center order {z}"))),
            );
        }
        _ => {}
    }
    report
}

/// Records whether the cohomology classes of `C_n · Õ` with cyclic Sylow
/// 3-subgroup all give the same group. Informational: never fails.
fn admissible_classes_agree(n: usize) -> Result<(bool, String)> {
    let bo = binary_octahedral();
    let want = p_part(48 * n as u64, 3) as usize;
    let mut admissible = Vec::new();
    let classes = two_cocycle_classes(bo, n as u64, &octahedral_sign_action(n as u64))?;
    let total = classes.len();
    for c in &classes {
        let g = build_extension(c)?;
        let s = sylow_subgroup(&g, 3);
        if s.size() == want && s.to_table(&g).0.is_cyclic() {
            admissible.push(g);
        }
    }
    let mut all_iso = true;
    for h in admissible.iter().skip(1) {
        all_iso &= are_isomorphic(&admissible[0], h, DEFAULT_ISO_BUDGET)?;
    }
    Ok((
        true,
        format!(
            "{} admissible of {total} classes, pairwise isomorphic: {all_iso}",
            admissible.len()
        ),
    ))
}

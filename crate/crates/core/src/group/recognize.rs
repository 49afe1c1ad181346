use core::fmt;

use super::iso::are_isomorphic;
use super::table::GroupTable;
use crate::catalog;
use crate::{Error, Result};

/// Structural type of a small group, as far as the classification needs it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum StructureTag {
    Cyclic,
    Dihedral,
    /// `Q_4n` for some `n ≥ 2` (generalized quaternion when `4n` is a power
    /// of two, dicyclic otherwise).
    GeneralizedQuaternion,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    Other,
}

impl StructureTag {
    /// Binary polyhedral: `Q_4n` (`n ≥ 2`), `T̃`, `Õ`, `Ĩ`.
    pub fn is_binary_polyhedral(self) -> bool {
        matches!(
            self,
            StructureTag::GeneralizedQuaternion
                | StructureTag::BinaryTetrahedral
                | StructureTag::BinaryOctahedral
                | StructureTag::BinaryIcosahedral
        )
    }

    pub fn as_str(self) -> &'static str {
        match self {
            StructureTag::Cyclic => "cyclic",
            StructureTag::Dihedral => "dihedral",
            StructureTag::GeneralizedQuaternion => "generalized_quaternion",
            StructureTag::BinaryTetrahedral => "binary_tetrahedral",
            StructureTag::BinaryOctahedral => "binary_octahedral",
            StructureTag::BinaryIcosahedral => "binary_icosahedral",
            StructureTag::Other => "other",
        }
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Generalized quaternion by the 2-group criterion: order `2^k ≥ 8`,
/// noncyclic, exactly one involution.
pub fn is_quaternion_2group(g: &GroupTable) -> bool {
    let n = g.order();
    n >= 8
        && n.is_power_of_two()
        && !g.is_cyclic()
        && g.elements().filter(|&x| g.element_order(x) == 2).count() == 1
}

pub fn recognize_structure(g: &GroupTable, budget: u64) -> Result<StructureTag> {
    let n = g.order();
    if g.is_cyclic() {
        return Ok(StructureTag::Cyclic);
    }
    if n % 4 == 0 && n >= 8 {
        let by_iso = are_isomorphic(g, &catalog::quaternion(n / 4), budget)?;
        if n.is_power_of_two() && by_iso != is_quaternion_2group(g) {
            return Err(Error::Internal(alloc::format!(
                "quaternion criteria disagree on a group of order {n}"
            )));
        }
        if by_iso {
            return Ok(StructureTag::GeneralizedQuaternion);
        }
    }
    if n % 2 == 0 && are_isomorphic(g, &catalog::dihedral(n / 2), budget)? {
        return Ok(StructureTag::Dihedral);
    }
    let exceptional = match n {
        24 => Some((catalog::binary_tetrahedral(), StructureTag::BinaryTetrahedral)),
        48 => Some((catalog::binary_octahedral(), StructureTag::BinaryOctahedral)),
        120 => Some((catalog::binary_icosahedral(), StructureTag::BinaryIcosahedral)),
        _ => None,
    };
    if let Some((h, tag)) = exceptional {
        if are_isomorphic(g, h, budget)? {
            return Ok(tag);
        }
    }
    Ok(StructureTag::Other)
}

//! The group expression mini-language.
//!
//! ```text
//! expr := atom ('*' atom)*
//! atom := 'C:'n | 'D:'n | 'Q:'n | 'BT' | 'BO' | 'BI'
//!       | 'Dd:'n','m | 'Pp:'n | 'Ppp:'n | 'Qt:'n','a','b','c
//! ```
//!
//! `D:n` is dihedral of order `2n`, `Q:n` dicyclic of order `4n`,
//! `Dd:n,m` is `D(2^n,m)`, `Pp:n` is `P'_{8·3^n}`, `Ppp:n` is `P''_{48n}` and
//! `Qt:n,a,b,c` is `Q(2^n a; b, c)`. `*` is the direct product.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{binary_icosahedral, binary_octahedral, binary_tetrahedral, dd, dihedral, pp, ppp, qt,
    quaternion};
use crate::group::{direct_product, GroupTable};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Atom {
    Cyclic(usize),
    Dihedral(usize),
    Quaternion(usize),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    Dd { n: u32, m: usize },
    Pp { n: u32 },
    Ppp { n: usize },
    Qt { n: u32, a: usize, b: usize, c: usize },
}

impl Atom {
    /// The order of the group, or `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        let pow = |b: u64, e: u32| b.checked_pow(e);
        match *self {
            Atom::Cyclic(n) => Some(n as u64),
            Atom::Dihedral(n) => (n as u64).checked_mul(2),
            Atom::Quaternion(n) => (n as u64).checked_mul(4),
            Atom::BinaryTetrahedral => Some(24),
            Atom::BinaryOctahedral => Some(48),
            Atom::BinaryIcosahedral => Some(120),
            Atom::Dd { n, m } => pow(2, n)?.checked_mul(m as u64),
            Atom::Pp { n } => pow(3, n)?.checked_mul(8),
            Atom::Ppp { n } => (n as u64).checked_mul(48),
            Atom::Qt { n, a, b, c } => pow(2, n)?
                .checked_mul(a as u64)?
                .checked_mul(b as u64)?
                .checked_mul(c as u64),
        }
    }

    pub fn build(&self, max_order: usize) -> Result<GroupTable> {
        match self.order() {
            Some(o) if o <= max_order as u64 => {}
            _ => return Err(Error::BoundExceeded { bound: max_order }),
        }
        match *self {
            Atom::Cyclic(n) => {
                positive(n, 1, "C:n")?;
                Ok(GroupTable::cyclic(n))
            }
            Atom::Dihedral(n) => {
                positive(n, 2, "D:n")?;
                Ok(dihedral(n))
            }
            Atom::Quaternion(n) => {
                positive(n, 2, "Q:n")?;
                Ok(quaternion(n))
            }
            Atom::BinaryTetrahedral => Ok(binary_tetrahedral().clone()),
            Atom::BinaryOctahedral => Ok(binary_octahedral().clone()),
            Atom::BinaryIcosahedral => Ok(binary_icosahedral().clone()),
            Atom::Dd { n, m } => dd(n, m, max_order),
            Atom::Pp { n } => pp(n, max_order),
            Atom::Ppp { n } => ppp(n, max_order),
            Atom::Qt { n, a, b, c } => qt(n, a, b, c, max_order),
        }
    }
}

fn positive(n: usize, min: usize, what: &str) -> Result<()> {
    if n < min {
        Err(Error::BadParameters(format!("{what} needs n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Atom::Cyclic(n) => write!(f, "C:{n}"),
            Atom::Dihedral(n) => write!(f, "D:{n}"),
            Atom::Quaternion(n) => write!(f, "Q:{n}"),
            Atom::BinaryTetrahedral => f.write_str("BT"),
            Atom::BinaryOctahedral => f.write_str("BO"),
            Atom::BinaryIcosahedral => f.write_str("BI"),
            Atom::Dd { n, m } => write!(f, "Dd:{n},{m}"),
            Atom::Pp { n } => write!(f, "Pp:{n}"),
            Atom::Ppp { n } => write!(f, "Ppp:{n}"),
            Atom::Qt { n, a, b, c } => write!(f, "Qt:{n},{a},{b},{c}"),
        }
    }
}

/// A direct product of catalog atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupExpr {
    pub factors: Vec<Atom>,
}

impl GroupExpr {
    pub fn atom(a: Atom) -> Self {
        GroupExpr { factors: alloc::vec![a] }
    }

    pub fn order(&self) -> Option<u64> {
        self.factors
            .iter()
            .try_fold(1u64, |acc, a| acc.checked_mul(a.order()?))
    }

    pub fn build(&self, max_order: usize) -> Result<GroupTable> {
        match self.order() {
            Some(o) if o <= max_order as u64 => {}
            _ => return Err(Error::BoundExceeded { bound: max_order }),
        }
        let mut it = self.factors.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::BadParameters("empty group expression".into()))?;
        let mut g = first.build(max_order)?;
        for a in it {
            g = direct_product(&g, &a.build(max_order)?, max_order)?;
        }
        Ok(g)
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut offset = 0;
        for part in s.split('*') {
            let lead = part.len() - part.trim_start().len();
            factors.push(parse_atom(part.trim(), offset + lead)?);
            offset += part.len() + 1;
        }
        Ok(GroupExpr { factors })
    }
}

fn parse_atom(text: &str, pos: usize) -> Result<Atom> {
    let syntax = |msg: &str| Error::Syntax {
        pos,
        msg: msg.to_string(),
    };
    if text.is_empty() {
        return Err(syntax("expected a group atom"));
    }
    let (name, args) = match text.split_once(':') {
        Some((n, a)) => (n.trim(), Some(a)),
        None => (text, None),
    };
    let nums: Vec<u64> = match args {
        None => Vec::new(),
        Some(a) => a
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<core::result::Result<_, _>>()
            .map_err(|_| syntax("expected comma-separated integers after `:`"))?,
    };
    let arity = |k: usize| -> Result<()> {
        if nums.len() == k {
            Ok(())
        } else {
            Err(syntax(&format!("`{name}` takes {k} parameter(s)")))
        }
    };
    let small = |v: u64| -> Result<usize> {
        usize::try_from(v).map_err(|_| syntax("parameter too large"))
    };
    let exp = |v: u64| -> Result<u32> { u32::try_from(v).map_err(|_| syntax("parameter too large")) };
    let atom = match name {
        "C" => {
            arity(1)?;
            Atom::Cyclic(small(nums[0])?)
        }
        "D" => {
            arity(1)?;
            Atom::Dihedral(small(nums[0])?)
        }
        "Q" => {
            arity(1)?;
            Atom::Quaternion(small(nums[0])?)
        }
        "BT" | "BO" | "BI" => {
            arity(0)?;
            match name {
                "BT" => Atom::BinaryTetrahedral,
                "BO" => Atom::BinaryOctahedral,
                _ => Atom::BinaryIcosahedral,
            }
        }
        "Dd" => {
            arity(2)?;
            Atom::Dd {
                n: exp(nums[0])?,
                m: small(nums[1])?,
            }
        }
        "Pp" => {
            arity(1)?;
            Atom::Pp { n: exp(nums[0])? }
        }
        "Ppp" => {
            arity(1)?;
            Atom::Ppp { n: small(nums[0])? }
        }
        "Qt" => {
            arity(4)?;
            Atom::Qt {
                n: exp(nums[0])?,
                a: small(nums[1])?,
                b: small(nums[2])?,
                c: small(nums[3])?,
            }
        }
        _ => return Err(syntax(&format!("unknown group constructor `{name}`"))),
    };
    Ok(atom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_display() {
        let e: GroupExpr = "Qt:4,1,3,1 * C:5".parse().unwrap();
        assert_eq!(
            e.factors,
            [Atom::Qt { n: 4, a: 1, b: 3, c: 1 }, Atom::Cyclic(5)]
        );
        assert_eq!(e.to_string(), "Qt:4,1,3,1 * C:5");
        assert_eq!(e.order(), Some(240));
        let e: GroupExpr = "BT*C:5".parse().unwrap();
        assert_eq!(e.to_string(), "BT * C:5");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!("X:3".parse::<GroupExpr>(), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!("C:2 * Q:x".parse::<GroupExpr>(), Err(Error::Syntax { pos: 6, .. })));
        assert!("C:2 *".parse::<GroupExpr>().is_err());
        assert!("Dd:3".parse::<GroupExpr>().is_err());
        assert!("BT:1".parse::<GroupExpr>().is_err());
        assert!("".parse::<GroupExpr>().is_err());
    }

    #[test]
    fn builds_with_bound() {
        let e: GroupExpr = "Q:2 * C:5".parse().unwrap();
        assert_eq!(e.build(5000).unwrap().order(), 40);
        assert!(matches!(e.build(39), Err(Error::BoundExceeded { bound: 39 })));
        let e: GroupExpr = "C:0".parse().unwrap();
        assert!(matches!(e.build(5000), Err(Error::BadParameters(_))));
    }
}

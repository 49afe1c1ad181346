//! Finite presentations: parsing, deficiency, and realization by coset
//! enumeration.

mod coset;
mod parse;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use coset::{todd_coxeter, todd_coxeter_with, CosetTable, EnumerationStats, Strategy};
pub use parse::parse_presentation;

use crate::group::{close_generators_named, Elem, GroupTable, Permutation};
use crate::{Error, Result};

/// A word in the generators: `(generator index, nonzero exponent)` pairs with
/// no two adjacent pairs on the same generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<(usize, i64)>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Appends `g^e`, merging with the last letter when it is on the same
    /// generator and dropping letters whose exponent cancels to zero.
    pub fn push(&mut self, gen: usize, exp: i64) {
        if exp == 0 {
            return;
        }
        match self.0.last_mut() {
            Some((g, e)) if *g == gen => {
                *e += exp;
                if *e == 0 {
                    self.0.pop();
                }
            }
            _ => self.0.push((gen, exp)),
        }
    }

    pub fn append(&mut self, other: &Word) {
        for &(g, e) in &other.0 {
            self.push(g, e);
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::new();
        for _ in 0..k.unsigned_abs() {
            out.append(&base);
        }
        out
    }

    /// Total number of letters counted with multiplicity.
    pub fn length(&self) -> usize {
        self.0.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Evaluates the word in a group, given the element for each generator.
    pub fn evaluate(&self, g: &GroupTable, gens: &[Elem]) -> Elem {
        self.0
            .iter()
            .fold(0, |acc, &(i, e)| g.mul(acc, g.pow(gens[i], e)))
    }
}

/// A finite presentation `⟨generators | relators⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<Word>,
}

/// Deficiency data of a presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Deficiency {
    /// Generators minus relators.
    pub deficiency: i64,
    pub balanced: bool,
    /// Euler characteristic of the presentation complex, `1 − deficiency`.
    pub euler_characteristic: i64,
}

impl Presentation {
    pub fn new(generators: Vec<String>, relators: Vec<Word>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::BadParameters("presentation needs a generator".into()));
        }
        for r in &relators {
            if r.is_empty() {
                return Err(Error::BadParameters("empty relator".into()));
            }
            if r.letters().iter().any(|&(g, _)| g >= generators.len()) {
                return Err(Error::BadParameters("relator uses an undeclared generator".into()));
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn deficiency(&self) -> Deficiency {
        let d = self.generators.len() as i64 - self.relators.len() as i64;
        Deficiency {
            deficiency: d,
            balanced: d == 0,
            euler_characteristic: 1 - d,
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str(g)?;
        }
        f.write_str(" | ")?;
        for (i, r) in self.relators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            for (j, &(g, e)) in r.letters().iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                f.write_str(&self.generators[g])?;
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        f.write_str(">")
    }
}

/// Realizes a presentation as a multiplication table.
///
/// The coset permutations of a complete enumeration are closed with
/// [`close_generators_named`]; every relator is then re-evaluated in the
/// resulting table. Returns the table and the element of each generator.
pub fn realize_group(
    p: &Presentation,
    max_cosets: usize,
    max_order: usize,
) -> Result<(GroupTable, Vec<Elem>)> {
    let table = todd_coxeter(p, max_cosets)?;
    if table.coset_count() > max_order {
        return Err(Error::BoundExceeded { bound: max_order });
    }
    let perms: Vec<Permutation> = (0..p.generators.len())
        .map(|g| table.generator_permutation(g))
        .collect();
    let (g, gens) = close_generators_named(&perms, &p.generators, max_order)?;
    if g.order() != table.coset_count() {
        return Err(Error::Internal(format!(
            "regular representation has order {} but {} cosets",
            g.order(),
            table.coset_count()
        )));
    }
    for (i, r) in p.relators.iter().enumerate() {
        if r.evaluate(&g, &gens) != 0 {
            return Err(Error::RelatorViolation(format!("relator {} is not trivial", i + 1)));
        }
    }
    Ok((g, gens))
}

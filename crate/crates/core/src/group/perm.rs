use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::table::{Elem, GroupTable};
use crate::{Error, Result};

/// A bijection of `0..degree`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let i = i as usize;
            if i >= images.len() || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image array {images:?} is not a bijection"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint or overlapping 0-based cycles,
    /// composed left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for cyc in cycles {
            let mut c = Permutation::identity(degree);
            let mut seen = vec![false; degree];
            for (k, &a) in cyc.iter().enumerate() {
                if a as usize >= degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} outside degree {degree}",
                        a + 1
                    )));
                }
                if core::mem::replace(&mut seen[a as usize], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {} repeated in a cycle",
                        a + 1
                    )));
                }
                c.images[a as usize] = cyc[(k + 1) % cyc.len()];
            }
            p = p.then(&c);
        }
        Ok(p)
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`; `()` is the
    /// identity. Points may be separated by spaces or commas.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycle_list(text)?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` followed by `other` (points are acted on from the right).
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }
}

/// Parses 1-based `(a b c)(d e)` into 0-based cycles.
pub fn parse_cycle_list(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut cycles = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    let syntax = |pos: usize, msg: &str| Error::Syntax {
        pos,
        msg: String::from(msg),
    };
    while i < bytes.len() {
        match bytes[i] {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'(' => {
                i += 1;
                let mut cyc = Vec::new();
                loop {
                    while i < bytes.len() && matches!(bytes[i], b' ' | b'\t' | b',') {
                        i += 1;
                    }
                    if i >= bytes.len() {
                        return Err(syntax(i, "unterminated cycle"));
                    }
                    if bytes[i] == b')' {
                        i += 1;
                        break;
                    }
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if start == i {
                        return Err(syntax(i, "expected a point number"));
                    }
                    let n: u32 = text[start..i]
                        .parse()
                        .map_err(|_| syntax(start, "point number out of range"))?;
                    if n == 0 {
                        return Err(syntax(start, "points are 1-based"));
                    }
                    cyc.push(n - 1);
                }
                if !cyc.is_empty() {
                    cycles.push(cyc);
                }
            }
            _ => return Err(syntax(i, "expected `(`")),
        }
    }
    Ok(cycles)
}

/// Closes a set of permutations under composition.
///
/// Returns the multiplication table of the generated group, with element `0`
/// the identity, plus the element index of each generator. Elements are
/// numbered in breadth-first order of shortest words in the generators and
/// labelled by those words (`g1`, `g2`, ... for the generators).
pub fn close_generators(gens: &[Permutation], max_order: usize) -> Result<(GroupTable, Vec<Elem>)> {
    let names: Vec<String> = (1..=gens.len()).map(|i| format!("g{i}")).collect();
    close_generators_named(gens, &names, max_order)
}

/// As [`close_generators`], labelling elements with the given generator names.
pub fn close_generators_named(
    gens: &[Permutation],
    names: &[String],
    max_order: usize,
) -> Result<(GroupTable, Vec<Elem>)> {
    const LABEL_LEN: usize = 12;
    let Some(first) = gens.first() else {
        return Err(Error::InvalidPermutation("no generators given".into()));
    };
    let degree = first.degree();
    for g in gens {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(
                "generators act on different domains".into(),
            ));
        }
        Permutation::new(g.images.clone())?;
    }
    let mut elems: Vec<Permutation> = vec![Permutation::identity(degree)];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Permutation, Elem> = HashMap::new();
    index.insert(elems[0].clone(), 0);
    // right[x * k + i] = x · gens[i]
    let k = gens.len();
    let mut right: Vec<Elem> = Vec::new();
    let mut parent: Vec<(Elem, usize)> = vec![(0, usize::MAX)];
    let mut head = 0;
    while head < elems.len() {
        for (i, g) in gens.iter().enumerate() {
            let y = elems[head].then(g);
            let idx = match index.get(&y) {
                Some(&j) => j,
                None => {
                    if elems.len() >= max_order {
                        return Err(Error::BoundExceeded { bound: max_order });
                    }
                    let j = elems.len() as Elem;
                    index.insert(y.clone(), j);
                    let mut w = words[head].clone();
                    w.push(i);
                    words.push(w);
                    parent.push((head as Elem, i));
                    elems.push(y);
                    j
                }
            };
            right.push(idx);
        }
        head += 1;
    }
    let n = elems.len();
    // mul[x][y]: y = parent(y) · g  ⇒  x·y = (x·parent(y)) · g.
    let mut mul = vec![0 as Elem; n * n];
    for x in 0..n {
        mul[x * n] = x as Elem;
        for y in 1..n {
            let (p, g) = parent[y];
            let xp = mul[x * n + p as usize];
            mul[x * n + y] = right[xp as usize * k + g];
        }
    }
    let labels = words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            if w.is_empty() {
                String::from("1")
            } else if w.len() > LABEL_LEN {
                format!("e{i}")
            } else {
                let mut s = String::new();
                for (j, &g) in w.iter().enumerate() {
                    if j > 0 {
                        s.push('*');
                    }
                    s.push_str(&names[g]);
                }
                s
            }
        })
        .collect();
    let table = GroupTable::new(n, mul)?.with_labels(labels);
    let gen_elems = gens.iter().map(|g| index[g]).collect();
    Ok((table, gen_elems))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_parsing() {
        let p = Permutation::parse_cycles("(1 2 3)(4 5)", 5).unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3]);
        assert!(Permutation::parse_cycles("()", 3).unwrap().is_identity());
        assert!(Permutation::parse_cycles("(1 1)", 3).is_err());
        assert!(Permutation::parse_cycles("(1 4)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)", 3).is_err());
        assert!(Permutation::parse_cycles("1 2", 3).is_err());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(matches!(
            Permutation::new(vec![0, 0, 1]),
            Err(Error::InvalidPermutation(_))
        ));
    }

    #[test]
    fn four_cycle_gives_c4() {
        let p = Permutation::from_cycles(4, &[vec![0, 1, 2, 3]]).unwrap();
        let (g, gens) = close_generators(&[p], 100).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_cyclic());
        assert_eq!(g.label(gens[0]), Some("g1"));
    }

    #[test]
    fn s3_from_two_generators() {
        let a = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let b = Permutation::from_cycles(3, &[vec![0, 1]]).unwrap();
        let (g, _) = close_generators(&[a, b], 100).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert!(g.check_associative_exhaustive(512, 0));
    }

    #[test]
    fn bound_is_enforced() {
        let a = Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let b = Permutation::from_cycles(5, &[vec![0, 1]]).unwrap();
        assert_eq!(
            close_generators(&[a, b], 100),
            Err(Error::BoundExceeded { bound: 100 })
        );
    }
}

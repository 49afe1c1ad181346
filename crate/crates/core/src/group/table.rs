use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith;
use crate::{Error, Result};

/// Element index inside a [`GroupTable`]. Element `0` is always the identity.
pub type Elem = u32;

/// A finite group stored as a dense multiplication table.
///
/// Invariants (checked by [`GroupTable::new`]): element `0` is a two-sided
/// identity, every row and column of the table is a permutation of the
/// elements, and `inv[x]` is the two-sided inverse of `x`. Associativity is
/// checked separately ([`GroupTable::check_associative`]) since every builder
/// in this crate is associative by construction.
///
/// Labels are display strings only; equality is decided by the table.
#[derive(Clone, Debug)]
pub struct GroupTable {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    labels: Option<Vec<String>>,
}

impl PartialEq for GroupTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.mul == other.mul
    }
}

impl Eq for GroupTable {}

impl GroupTable {
    /// Builds a table from a row-major `order × order` product array.
    pub fn new(order: usize, mul: Vec<Elem>) -> Result<Self> {
        if order == 0 {
            return Err(Error::BadParameters("group order must be positive".into()));
        }
        if mul.len() != order * order {
            return Err(Error::BadParameters("table size does not match order".into()));
        }
        let mut seen = vec![0u32; order];
        let mut stamp = 0u32;
        for x in 0..order {
            stamp += 1;
            for y in 0..order {
                let v = mul[x * order + y] as usize;
                if v >= order || seen[v] == stamp {
                    return Err(Error::BadParameters("row is not a permutation".into()));
                }
                seen[v] = stamp;
            }
        }
        for y in 0..order {
            stamp += 1;
            for x in 0..order {
                let v = mul[x * order + y] as usize;
                if seen[v] == stamp {
                    return Err(Error::BadParameters("column is not a permutation".into()));
                }
                seen[v] = stamp;
            }
        }
        for x in 0..order {
            if mul[x] as usize != x || mul[x * order] as usize != x {
                return Err(Error::BadParameters("element 0 is not the identity".into()));
            }
        }
        let mut inv = vec![0; order];
        for x in 0..order {
            let row = &mul[x * order..(x + 1) * order];
            let y = row.iter().position(|&v| v == 0).unwrap();
            if mul[y * order + x] != 0 {
                return Err(Error::BadParameters("left and right inverses differ".into()));
            }
            inv[x] = y as Elem;
        }
        Ok(GroupTable {
            order,
            mul,
            inv,
            labels: None,
        })
    }

    /// Builds a table from a product function on `0..order`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Result<Self> {
        let mut mul = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                mul.push(f(x, y) as Elem);
            }
        }
        GroupTable::new(order, mul)
    }

    /// The cyclic group of order `n`.
    pub fn cyclic(n: usize) -> Self {
        GroupTable::from_fn(n, |a, b| (a + b) % n).expect("cyclic table is valid")
    }

    pub fn trivial() -> Self {
        GroupTable::cyclic(1)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.order {
            self.labels = Some(labels);
        }
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        0
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.mul[x as usize * self.order + y as usize]
    }

    #[inline]
    pub fn inv(&self, x: Elem) -> Elem {
        self.inv[x as usize]
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn commutes(&self, x: Elem, y: Elem) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.order as Elem
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: Elem) -> Option<&str> {
        self.labels.as_ref().map(|l| l[x as usize].as_str())
    }

    pub fn table(&self) -> &[Elem] {
        &self.mul
    }

    pub fn pow(&self, x: Elem, mut e: i64) -> Elem {
        let mut base = if e < 0 {
            e = -e;
            self.inv(x)
        } else {
            x
        };
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, x: Elem) -> usize {
        let mut k = 1;
        let mut y = x;
        while y != 0 {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        self.elements().map(|x| self.element_order(x)).collect()
    }

    pub fn exponent(&self) -> u64 {
        self.elements()
            .fold(1, |acc, x| arith::lcm(acc, self.element_order(x) as u64))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as Elem).all(|x| (x..self.order as Elem).all(|y| self.commutes(x, y)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|x| self.element_order(x) == self.order)
    }

    /// Number of elements `g` with `g² = 1` (including the identity).
    pub fn square_roots_of_identity(&self) -> usize {
        self.elements().filter(|&x| self.mul(x, x) == 0).count()
    }

    /// A small generating set, chosen greedily from elements of large order.
    pub fn generators(&self) -> Vec<Elem> {
        let orders = self.element_orders();
        let mut cand: Vec<Elem> = self.elements().skip(1).collect();
        cand.sort_by(|&a, &b| orders[b as usize].cmp(&orders[a as usize]).then(a.cmp(&b)));
        let mut gens = Vec::new();
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut size = 1;
        for c in cand {
            if size == self.order {
                break;
            }
            if !member[c as usize] {
                gens.push(c);
                let closed = crate::group::subgroup::closure_bits(self, &gens);
                size = closed.iter().filter(|&&b| b).count();
                member = closed;
            }
        }
        gens
    }

    /// Light's associativity test: `(x·s)·y = x·(s·y)` for all `x, y` and all
    /// `s` in a generating set is equivalent to associativity.
    pub fn check_associative(&self) -> bool {
        let gens = self.generators();
        for &s in &gens {
            for x in self.elements() {
                let xs = self.mul(x, s);
                for y in self.elements() {
                    if self.mul(xs, y) != self.mul(x, self.mul(s, y)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Associativity over all triples, or over `samples` pseudo-random
    /// triples when the order exceeds `exhaustive_limit`.
    pub fn check_associative_exhaustive(&self, exhaustive_limit: usize, samples: usize) -> bool {
        let n = self.order;
        if n <= exhaustive_limit {
            for x in 0..n as Elem {
                for y in 0..n as Elem {
                    let xy = self.mul(x, y);
                    for z in 0..n as Elem {
                        if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                            return false;
                        }
                    }
                }
            }
            return true;
        }
        let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % n as u64) as Elem
        };
        (0..samples).all(|_| {
            let (x, y, z) = (next(), next(), next());
            self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z))
        })
    }

    /// The table restricted to a subset closed under multiplication, with
    /// the embedding of the new indices into `self`.
    pub fn restrict(&self, members: &[Elem]) -> (GroupTable, Vec<Elem>) {
        let mut elems: Vec<Elem> = members.to_vec();
        elems.sort_unstable();
        debug_assert_eq!(elems.first(), Some(&0));
        let mut index = vec![u32::MAX; self.order];
        for (i, &e) in elems.iter().enumerate() {
            index[e as usize] = i as u32;
        }
        let m = elems.len();
        let table = GroupTable::from_fn(m, |a, b| {
            index[self.mul(elems[a], elems[b]) as usize] as usize
        })
        .expect("restriction of a subgroup is a group");
        (table, elems)
    }
}

/// A homomorphism between two tables, stored as the image of every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    pub source_order: usize,
    pub target_order: usize,
    pub images: Vec<Elem>,
}

impl GroupMap {
    pub fn identity(g: &GroupTable) -> Self {
        GroupMap {
            source_order: g.order(),
            target_order: g.order(),
            images: g.elements().collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x as usize]
    }

    pub fn is_homomorphism(&self, source: &GroupTable, target: &GroupTable) -> bool {
        if self.images.len() != source.order() || self.images[0] != 0 {
            return false;
        }
        source.elements().all(|x| {
            source
                .elements()
                .all(|y| self.apply(source.mul(x, y)) == target.mul(self.apply(x), self.apply(y)))
        })
    }

    pub fn is_bijective(&self) -> bool {
        if self.source_order != self.target_order {
            return false;
        }
        let mut seen = vec![false; self.target_order];
        self.images.iter().all(|&y| !core::mem::replace(&mut seen[y as usize], true))
    }

    /// Extends generator images to a homomorphism `source → target`.
    ///
    /// Fails with [`Error::ActionNotHomomorphic`] when the images do not
    /// respect the relations of `source`.
    pub fn from_generators(
        source: &GroupTable,
        gens: &[Elem],
        target: &GroupTable,
        images: &[Elem],
    ) -> Result<Self> {
        let imgs = extend_on_generators(source, gens, images, |a, b| target.mul(a, b), 0)?;
        Ok(GroupMap {
            source_order: source.order(),
            target_order: target.order(),
            images: imgs,
        })
    }
}

/// Extends `x_i ↦ images[i]` along right multiplication in the Cayley graph.
///
/// `combine(a, b)` multiplies values in the target, `unit` is the target
/// identity. The result is checked on every Cayley-graph edge, which makes
/// it a homomorphism on the subgroup generated by `gens`; unreached elements
/// map to `u32::MAX`.
pub(crate) fn extend_on_generators(
    source: &GroupTable,
    gens: &[Elem],
    images: &[Elem],
    combine: impl Fn(Elem, Elem) -> Elem,
    unit: Elem,
) -> Result<Vec<Elem>> {
    let mut map = vec![u32::MAX; source.order()];
    map[0] = unit;
    let mut queue = vec![0 as Elem];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&g, &img) in gens.iter().zip(images) {
            let y = source.mul(x, g);
            let v = combine(map[x as usize], img);
            if map[y as usize] == u32::MAX {
                map[y as usize] = v;
                queue.push(y);
            } else if map[y as usize] != v {
                return Err(Error::ActionNotHomomorphic(
                    "generator images violate a relation".into(),
                ));
            }
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_basics() {
        let c = GroupTable::cyclic(6);
        assert_eq!(c.order(), 6);
        assert!(c.is_cyclic() && c.is_abelian());
        assert_eq!(c.element_order(2), 3);
        assert_eq!(c.pow(1, -1), 5);
        assert_eq!(c.exponent(), 6);
        assert!(c.check_associative());
        assert!(c.check_associative_exhaustive(512, 0));
    }

    #[test]
    fn rejects_bad_tables() {
        assert!(GroupTable::new(2, vec![0, 1, 1, 1]).is_err());
        assert!(GroupTable::new(2, vec![1, 0, 0, 1]).is_err());
        assert!(GroupTable::new(0, vec![]).is_err());
    }

    #[test]
    fn nonassociative_loop_is_caught() {
        // Latin square with identity 0 that is not associative (order 5 loop).
        let rows = [
            [0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0],
        ];
        let t = GroupTable::from_fn(5, |a, b| rows[a][b]).unwrap();
        assert!(!t.check_associative_exhaustive(512, 0));
        assert!(!t.check_associative());
    }
}

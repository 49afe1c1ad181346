use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashSet;

use super::classes::conjugacy_classes;
use super::table::{Elem, GroupMap, GroupTable};
use crate::arith;
use crate::{Error, Result};

/// A subgroup of a parent [`GroupTable`], stored as a membership bitset.
///
/// The parent is not borrowed; operations take it as an argument. Every
/// constructor produces a set that contains the identity and is closed under
/// multiplication (hence under inverses, the group being finite).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    parent_order: usize,
    words: Vec<u64>,
    size: usize,
}

impl SubgroupSet {
    fn from_bits(bits: &[bool]) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(64)];
        let mut size = 0;
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / 64] |= 1 << (i % 64);
                size += 1;
            }
        }
        SubgroupSet {
            parent_order: bits.len(),
            words,
            size,
        }
    }

    pub fn trivial(g: &GroupTable) -> Self {
        let mut bits = vec![false; g.order()];
        bits[0] = true;
        SubgroupSet::from_bits(&bits)
    }

    pub fn whole(g: &GroupTable) -> Self {
        SubgroupSet::from_bits(&vec![true; g.order()])
    }

    /// The subgroup generated by `gens`.
    pub fn generated(g: &GroupTable, gens: &[Elem]) -> Self {
        SubgroupSet::from_bits(&closure_bits(g, gens))
    }

    /// Validates that `elems` form a subgroup of `g`.
    pub fn from_elements(g: &GroupTable, elems: &[Elem]) -> Result<Self> {
        let mut bits = vec![false; g.order()];
        for &e in elems {
            if e as usize >= g.order() {
                return Err(Error::BadParameters("element outside the group".into()));
            }
            bits[e as usize] = true;
        }
        let s = SubgroupSet::from_bits(&bits);
        if !s.contains(0) {
            return Err(Error::BadParameters("subset misses the identity".into()));
        }
        let members = s.elements();
        for &x in &members {
            for &y in &members {
                if !s.contains(g.mul(x, y)) {
                    return Err(Error::BadParameters("subset is not closed".into()));
                }
            }
        }
        debug_assert_eq!(g.order() % s.size(), 0, "Lagrange");
        Ok(s)
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        let x = x as usize;
        x < self.parent_order && self.words[x / 64] >> (x % 64) & 1 == 1
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn index(&self) -> usize {
        self.parent_order / self.size
    }

    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn is_whole(&self) -> bool {
        self.size == self.parent_order
    }

    pub fn elements(&self) -> Vec<Elem> {
        (0..self.parent_order as Elem).filter(|&x| self.contains(x)).collect()
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let words: Vec<u64> = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        let size = words.iter().map(|w| w.count_ones() as usize).sum();
        SubgroupSet {
            parent_order: self.parent_order,
            words,
            size,
        }
    }

    /// Stable under conjugation by every element of `g`.
    pub fn is_normal(&self, g: &GroupTable) -> bool {
        let members = self.elements();
        let gens = g.generators();
        gens.iter()
            .all(|&h| members.iter().all(|&x| self.contains(g.conj(x, h))))
    }

    /// The subgroup as a standalone table, with its embedding into `g`.
    pub fn to_table(&self, g: &GroupTable) -> (GroupTable, Vec<Elem>) {
        g.restrict(&self.elements())
    }

    /// A small generating set.
    pub fn generators(&self, g: &GroupTable) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut closed = vec![false; g.order()];
        closed[0] = true;
        for x in self.elements() {
            if !closed[x as usize] {
                gens.push(x);
                closed = closure_bits(g, &gens);
            }
        }
        gens
    }
}

/// Membership bits of the subgroup generated by `gens`.
pub(crate) fn closure_bits(g: &GroupTable, gens: &[Elem]) -> Vec<bool> {
    let mut bits = vec![false; g.order()];
    bits[0] = true;
    let mut list = vec![0 as Elem];
    extend_closure(g, &mut bits, &mut list, gens, 0);
    bits
}

/// Breadth-first closure under right multiplication by `gens`, starting with
/// the queue at position `from`.
fn extend_closure(
    g: &GroupTable,
    bits: &mut [bool],
    list: &mut Vec<Elem>,
    gens: &[Elem],
    from: usize,
) {
    let mut head = from;
    while head < list.len() {
        let x = list[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if !bits[y as usize] {
                bits[y as usize] = true;
                list.push(y);
            }
        }
    }
}

/// A subgroup under construction: membership, element list and generators.
#[derive(Clone)]
struct Growing {
    bits: Vec<bool>,
    list: Vec<Elem>,
    gens: Vec<Elem>,
}

impl Growing {
    fn trivial(g: &GroupTable) -> Self {
        let mut bits = vec![false; g.order()];
        bits[0] = true;
        Growing {
            bits,
            list: vec![0],
            gens: Vec::new(),
        }
    }

    fn adjoin(&mut self, g: &GroupTable, x: Elem) {
        if self.bits[x as usize] {
            return;
        }
        self.gens.push(x);
        // Every element of the enlarged group is reached from an old
        // element by a word in the new generator set, so the scan restarts
        // from the beginning of the old list.
        let gens = self.gens.clone();
        extend_closure(g, &mut self.bits, &mut self.list, &gens, 0);
    }

    fn set(&self) -> SubgroupSet {
        SubgroupSet::from_bits(&self.bits)
    }
}

/// Elements commuting with every element of `g`.
pub fn center(g: &GroupTable) -> SubgroupSet {
    let gens = g.generators();
    let bits: Vec<bool> = g
        .elements()
        .map(|x| gens.iter().all(|&s| g.commutes(x, s)))
        .collect();
    SubgroupSet::from_bits(&bits)
}

/// `(N_G(S), C_G(S))`.
pub fn normalizer_centralizer(g: &GroupTable, s: &SubgroupSet) -> (SubgroupSet, SubgroupSet) {
    let gens = s.generators(g);
    let mut nbits = vec![false; g.order()];
    let mut cbits = vec![false; g.order()];
    for x in g.elements() {
        nbits[x as usize] = gens.iter().all(|&h| s.contains(g.conj(h, x)));
        cbits[x as usize] = gens.iter().all(|&h| g.commutes(h, x));
    }
    (SubgroupSet::from_bits(&nbits), SubgroupSet::from_bits(&cbits))
}

/// The smallest normal subgroup containing `elems`.
pub fn normal_closure(g: &GroupTable, elems: &[Elem]) -> SubgroupSet {
    let gg = g.generators();
    let mut grow = Growing::trivial(g);
    let mut pending: Vec<Elem> = elems.to_vec();
    while let Some(x) = pending.pop() {
        if grow.bits[x as usize] {
            continue;
        }
        grow.adjoin(g, x);
        // New conjugates of the generators must be inside as well.
        for &h in &grow.gens.clone() {
            for &s in &gg {
                let c = g.conj(h, s);
                if !grow.bits[c as usize] {
                    pending.push(c);
                }
            }
        }
    }
    grow.set()
}

/// The commutator subgroup `[G, G]`.
pub fn derived_subgroup(g: &GroupTable) -> SubgroupSet {
    let gens = g.generators();
    let mut comms = Vec::new();
    for &a in &gens {
        for &b in &gens {
            let c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
            if c != 0 {
                comms.push(c);
            }
        }
    }
    normal_closure(g, &comms)
}

/// All normal subgroups of `g`, sorted by size.
///
/// Every normal subgroup is a union of classes and therefore the join of the
/// normal closures of the classes it contains. The closures of single
/// classes are computed once; the lattice is then closed under joins with
/// them.
pub fn normal_subgroups(g: &GroupTable) -> Vec<SubgroupSet> {
    let cc = conjugacy_classes(g);
    let mut by_class: Vec<Growing> = Vec::new();
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    for i in 1..cc.count() {
        let mut grow = Growing::trivial(g);
        for x in cc.members(i) {
            grow.adjoin(g, x);
        }
        if seen.insert(grow.bits.clone()) {
            by_class.push(grow);
        }
    }
    let trivial = Growing::trivial(g);
    seen.insert(trivial.bits.clone());
    let mut all: Vec<Growing> = vec![trivial];
    all.extend(by_class.iter().cloned());
    let mut frontier: Vec<usize> = (0..all.len()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &a in &frontier {
            for b in &by_class {
                if b.gens.iter().all(|&x| all[a].bits[x as usize]) {
                    continue;
                }
                let mut join = all[a].clone();
                for &x in &b.gens {
                    join.adjoin(g, x);
                }
                if seen.insert(join.bits.clone()) {
                    next.push(all.len());
                    all.push(join);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<SubgroupSet> = all.iter().map(Growing::set).collect();
    out.sort_by(|a, b| a.size.cmp(&b.size).then_with(|| a.words.cmp(&b.words)));
    out
}

/// `G/N` with the projection map. Cosets are numbered by their smallest
/// element, so the identity coset is `0`.
pub fn quotient(g: &GroupTable, n: &SubgroupSet) -> Result<(GroupTable, GroupMap)> {
    if n.parent_order() != g.order() || !n.is_normal(g) {
        return Err(Error::NotNormal);
    }
    const NONE: u32 = u32::MAX;
    let members = n.elements();
    let mut coset_of = vec![NONE; g.order()];
    let mut reps = Vec::new();
    for x in g.elements() {
        if coset_of[x as usize] != NONE {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        for &m in &members {
            coset_of[g.mul(x, m) as usize] = c;
        }
    }
    let q = GroupTable::from_fn(reps.len(), |a, b| {
        coset_of[g.mul(reps[a], reps[b]) as usize] as usize
    })?;
    let map = GroupMap {
        source_order: g.order(),
        target_order: q.order(),
        images: coset_of,
    };
    Ok((q, map))
}

/// A Sylow `p`-subgroup, built by normalizer ascent: a `p`-subgroup `P` that
/// is not yet Sylow has `p | [N(P) : P]`, so some `x ∈ N(P) \ P` with
/// `x^p ∈ P` exists and `⟨P, x⟩` has order `p·|P|`.
///
/// Returns the trivial subgroup when `p` does not divide the order.
pub fn sylow_subgroup(g: &GroupTable, p: u64) -> SubgroupSet {
    let target = arith::p_part(g.order() as u64, p) as usize;
    let mut grow = Growing::trivial(g);
    while grow.list.len() < target {
        let set = grow.set();
        let (norm, _) = normalizer_centralizer(g, &set);
        let step = g.elements().find(|&x| {
            norm.contains(x) && !set.contains(x) && set.contains(g.pow(x, p as i64))
        });
        let x = step.expect("a p-subgroup below Sylow order has a normalizing p-element");
        grow.adjoin(g, x);
        debug_assert_eq!(grow.list.len() % p as usize, 0);
    }
    let out = grow.set();
    debug_assert_eq!(out.size(), target);
    out
}

/// Whether `g` contains a subgroup `C_p × C_p`: two commuting elements of
/// order `p`, the second outside the cyclic group of the first.
pub fn has_elementary_abelian_p2(g: &GroupTable, p: u64) -> bool {
    let p = p as usize;
    let order_p: Vec<Elem> = g.elements().filter(|&x| g.element_order(x) == p).collect();
    for (i, &x) in order_p.iter().enumerate() {
        let mut powers = Vec::with_capacity(p);
        let mut y = x;
        for _ in 1..p {
            powers.push(y);
            y = g.mul(y, x);
        }
        for &z in &order_p[i + 1..] {
            if g.commutes(x, z) && !powers.contains(&z) {
                return true;
            }
        }
    }
    false
}

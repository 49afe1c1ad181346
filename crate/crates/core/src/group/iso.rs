use alloc::vec;
use alloc::vec::Vec;

use super::classes::{conjugacy_classes, ConjugacyData};
use super::subgroup::{center, derived_subgroup, quotient};
use super::table::{extend_on_generators, Elem, GroupMap, GroupTable};
use crate::{Error, Result};

/// Isomorphism invariants used to reject non-isomorphic pairs cheaply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub order: usize,
    /// `(element order, count)` pairs, increasing.
    pub order_histogram: Vec<(usize, usize)>,
    pub class_sizes: Vec<usize>,
    pub center_order: usize,
    /// Element-order histogram of `G/[G,G]`; it determines the abelian
    /// invariants.
    pub abelianization: Vec<(usize, usize)>,
}

fn histogram(orders: &[usize]) -> Vec<(usize, usize)> {
    let mut sorted = orders.to_vec();
    sorted.sort_unstable();
    let mut out: Vec<(usize, usize)> = Vec::new();
    for o in sorted {
        match out.last_mut() {
            Some((k, c)) if *k == o => *c += 1,
            _ => out.push((o, 1)),
        }
    }
    out
}

impl Fingerprint {
    pub fn of(g: &GroupTable) -> Self {
        Fingerprint::with_classes(g, &conjugacy_classes(g))
    }

    pub fn with_classes(g: &GroupTable, cc: &ConjugacyData) -> Self {
        let (ab, _) = quotient(g, &derived_subgroup(g)).expect("derived subgroup is normal");
        Fingerprint {
            order: g.order(),
            order_histogram: histogram(&g.element_orders()),
            class_sizes: cc.size_multiset(),
            center_order: center(g).size(),
            abelianization: histogram(&ab.element_orders()),
        }
    }
}

/// Decides `A ≅ B`, returning an isomorphism when one exists.
///
/// Pairs with different [`Fingerprint`]s are rejected immediately. Otherwise
/// a backtracking search assigns images to a generating set of `A`, trying
/// only elements of equal order and equal class size and checking the
/// partial map on the subgroup generated so far. The first generator is
/// mapped to class representatives only, since composing with an inner
/// automorphism of `B` moves any image into its class representative.
/// More than `budget` search nodes yields [`Error::BudgetExceeded`].
pub fn is_isomorphic(a: &GroupTable, b: &GroupTable, budget: u64) -> Result<Option<GroupMap>> {
    if a.order() != b.order() {
        return Ok(None);
    }
    if a == b {
        return Ok(Some(GroupMap::identity(a)));
    }
    let (ca, cb) = (conjugacy_classes(a), conjugacy_classes(b));
    if Fingerprint::with_classes(a, &ca) != Fingerprint::with_classes(b, &cb) {
        return Ok(None);
    }
    let (oa, ob) = (a.element_orders(), b.element_orders());
    let gens = a.generators();
    if gens.is_empty() {
        return Ok(Some(GroupMap::identity(a)));
    }
    let mut cands: Vec<Vec<Elem>> = Vec::with_capacity(gens.len());
    for (i, &g) in gens.iter().enumerate() {
        let want = (oa[g as usize], ca.sizes[ca.class_of[g as usize] as usize]);
        let pool: Vec<Elem> = if i == 0 {
            cb.reps.clone()
        } else {
            b.elements().collect()
        };
        cands.push(
            pool.into_iter()
                .filter(|&y| (ob[y as usize], cb.sizes[cb.class_of[y as usize] as usize]) == want)
                .collect(),
        );
    }
    let mut search = Search {
        a,
        b,
        gens: &gens,
        cands: &cands,
        nodes: 0,
        budget,
        used: vec![false; b.order()],
    };
    let mut images = Vec::with_capacity(gens.len());
    Ok(search.run(&mut images)?.map(|images| GroupMap {
        source_order: a.order(),
        target_order: b.order(),
        images,
    }))
}

/// Convenience wrapper returning only the verdict.
pub fn are_isomorphic(a: &GroupTable, b: &GroupTable, budget: u64) -> Result<bool> {
    Ok(is_isomorphic(a, b, budget)?.is_some())
}

struct Search<'a> {
    a: &'a GroupTable,
    b: &'a GroupTable,
    gens: &'a [Elem],
    cands: &'a [Vec<Elem>],
    nodes: u64,
    budget: u64,
    used: Vec<bool>,
}

impl Search<'_> {
    fn run(&mut self, images: &mut Vec<Elem>) -> Result<Option<Vec<Elem>>> {
        let depth = images.len();
        for &c in &self.cands[depth] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded {
                    what: "isomorphism search",
                    budget: self.budget,
                });
            }
            images.push(c);
            let b = self.b;
            let partial =
                extend_on_generators(self.a, &self.gens[..=depth], images, |x, y| b.mul(x, y), 0);
            if let Ok(map) = partial {
                if self.injective(&map) {
                    if depth + 1 == self.gens.len() {
                        if map.iter().all(|&m| m != u32::MAX) {
                            return Ok(Some(map));
                        }
                    } else if let Some(found) = self.run(images)? {
                        return Ok(Some(found));
                    }
                }
            }
            images.pop();
        }
        Ok(None)
    }

    fn injective(&mut self, map: &[Elem]) -> bool {
        self.used.iter_mut().for_each(|u| *u = false);
        for &m in map {
            if m != u32::MAX && core::mem::replace(&mut self.used[m as usize], true) {
                return false;
            }
        }
        true
    }
}

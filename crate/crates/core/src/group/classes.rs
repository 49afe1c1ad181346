use alloc::vec;
use alloc::vec::Vec;

use super::table::{Elem, GroupTable};

/// Conjugacy classes of a group.
///
/// Classes are numbered in order of their smallest element, so class `0` is
/// the identity class and `reps[i]` is the smallest element of class `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyData {
    pub class_of: Vec<u32>,
    pub reps: Vec<Elem>,
    pub sizes: Vec<usize>,
    /// Class containing `reps[i]²`.
    pub square_class: Vec<u32>,
    /// Class containing `reps[i]⁻¹`.
    pub inverse_class: Vec<u32>,
}

impl ConjugacyData {
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    /// Elements of class `i`, in increasing order.
    pub fn members(&self, i: usize) -> Vec<Elem> {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == i)
            .map(|(x, _)| x as Elem)
            .collect()
    }

    /// Class sizes sorted increasingly, an isomorphism invariant.
    pub fn size_multiset(&self) -> Vec<usize> {
        let mut s = self.sizes.clone();
        s.sort_unstable();
        s
    }
}

pub fn conjugacy_classes(g: &GroupTable) -> ConjugacyData {
    const NONE: u32 = u32::MAX;
    let n = g.order();
    let mut class_of = vec![NONE; n];
    let mut reps = Vec::new();
    let mut sizes = Vec::new();
    for x in g.elements() {
        if class_of[x as usize] != NONE {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(x);
        let mut size = 0;
        for h in g.elements() {
            let y = g.conj(x, h);
            if class_of[y as usize] == NONE {
                class_of[y as usize] = c;
                size += 1;
            }
        }
        sizes.push(size);
    }
    let square_class = reps
        .iter()
        .map(|&r| class_of[g.mul(r, r) as usize])
        .collect();
    let inverse_class = reps.iter().map(|&r| class_of[g.inv(r) as usize]).collect();
    ConjugacyData {
        class_of,
        reps,
        sizes,
        square_class,
        inverse_class,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_classes_are_singletons() {
        let c = conjugacy_classes(&GroupTable::cyclic(5));
        assert_eq!(c.count(), 5);
        assert!(c.sizes.iter().all(|&s| s == 1));
        assert_eq!(c.square_class, vec![0, 2, 4, 1, 3]);
    }
}

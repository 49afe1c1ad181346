use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::table::{extend_on_generators, Elem, GroupTable};
use crate::{Error, Result};

/// `A × B`. The pair `(a, b)` has index `a·|B| + b`.
pub fn direct_product(a: &GroupTable, b: &GroupTable, max_order: usize) -> Result<GroupTable> {
    let (na, nb) = (a.order(), b.order());
    let n = na.checked_mul(nb).ok_or(Error::BoundExceeded { bound: max_order })?;
    if n > max_order {
        return Err(Error::BoundExceeded { bound: max_order });
    }
    GroupTable::from_fn(n, |x, y| {
        let (xa, xb) = (x / nb, x % nb);
        let (ya, yb) = (y / nb, y % nb);
        a.mul(xa as Elem, ya as Elem) as usize * nb + b.mul(xb as Elem, yb as Elem) as usize
    })
}

/// An action of `H` on `N` by automorphisms: `auts[h]` is the image array of
/// the automorphism attached to `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    auts: Vec<Vec<Elem>>,
}

impl Action {
    pub fn trivial(n: &GroupTable, h: &GroupTable) -> Self {
        Action {
            auts: vec![n.elements().collect(); h.order()],
        }
    }

    /// An action given explicitly on every element of `H`.
    pub fn from_all(auts: Vec<Vec<Elem>>) -> Self {
        Action { auts }
    }

    /// Extends automorphisms given on generators of `H` to all of `H`.
    ///
    /// `h·k` acts as `φ(h)∘φ(k)`, i.e. `φ(k)` is applied first. Fails with
    /// [`Error::ActionNotHomomorphic`] when the generator images do not
    /// satisfy the relations of `H`.
    pub fn from_generators(
        n: &GroupTable,
        h: &GroupTable,
        gens: &[Elem],
        gen_auts: &[Vec<Elem>],
    ) -> Result<Self> {
        for a in gen_auts {
            check_automorphism(n, a)?;
        }
        // Automorphisms are interned so the Cayley-graph extension can work
        // on indices.
        let mut pool: Vec<Vec<Elem>> = vec![n.elements().collect()];
        let mut gen_idx = Vec::new();
        for a in gen_auts {
            gen_idx.push(intern(&mut pool, a.clone()));
        }
        let pool = core::cell::RefCell::new(pool);
        let compose = |x: Elem, y: Elem| -> Elem {
            let mut p = pool.borrow_mut();
            let (fx, fy) = (&p[x as usize], &p[y as usize]);
            let c: Vec<Elem> = fy.iter().map(|&v| fx[v as usize]).collect();
            intern(&mut p, c)
        };
        let map = extend_on_generators(h, gens, &gen_idx, compose, 0)?;
        if map.iter().any(|&m| m == u32::MAX) {
            return Err(Error::BadParameters(
                "action generators do not generate H".into(),
            ));
        }
        let pool = pool.into_inner();
        Ok(Action {
            auts: map.iter().map(|&i| pool[i as usize].clone()).collect(),
        })
    }

    pub fn get(&self, h: Elem) -> &[Elem] {
        &self.auts[h as usize]
    }
}

fn intern(pool: &mut Vec<Vec<Elem>>, a: Vec<Elem>) -> Elem {
    if let Some(i) = pool.iter().position(|p| *p == a) {
        return i as Elem;
    }
    pool.push(a);
    (pool.len() - 1) as Elem
}

fn check_automorphism(n: &GroupTable, a: &[Elem]) -> Result<()> {
    if a.len() != n.order() {
        return Err(Error::ActionNotAutomorphism("image array has wrong length".into()));
    }
    let mut seen = vec![false; n.order()];
    for &v in a {
        if v as usize >= n.order() || core::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::ActionNotAutomorphism("map is not a bijection".into()));
        }
    }
    for x in n.elements() {
        for y in n.elements() {
            if a[n.mul(x, y) as usize] != n.mul(a[x as usize], a[y as usize]) {
                return Err(Error::ActionNotAutomorphism(format!(
                    "map does not respect the product of {x} and {y}"
                )));
            }
        }
    }
    Ok(())
}

/// `N ⋊ H` with product `(n₁, h₁)(n₂, h₂) = (n₁·φ(h₁)(n₂), h₁h₂)`.
///
/// The pair `(n, h)` has index `h·|N| + n`, so `N` sits on indices
/// `0..|N|` and `H` on multiples of `|N|`.
pub fn semidirect_product(
    n: &GroupTable,
    h: &GroupTable,
    action: &Action,
    max_order: usize,
) -> Result<GroupTable> {
    if action.auts.len() != h.order() {
        return Err(Error::ActionNotHomomorphic(
            "action must give an automorphism for every element of H".into(),
        ));
    }
    for a in &action.auts {
        check_automorphism(n, a)?;
    }
    for x in h.elements() {
        for y in h.elements() {
            let (fx, fy) = (action.get(x), action.get(y));
            let fxy = action.get(h.mul(x, y));
            if n.elements().any(|v| fxy[v as usize] != fx[fy[v as usize] as usize]) {
                return Err(Error::ActionNotHomomorphic(format!(
                    "φ({x}·{y}) differs from φ({x})∘φ({y})"
                )));
            }
        }
    }
    let (nn, nh) = (n.order(), h.order());
    if nn * nh > max_order {
        return Err(Error::BoundExceeded { bound: max_order });
    }
    GroupTable::from_fn(nn * nh, |x, y| {
        let (xh, xn) = ((x / nn) as Elem, (x % nn) as Elem);
        let (yh, yn) = ((y / nn) as Elem, (y % nn) as Elem);
        let zn = n.mul(xn, action.get(xh)[yn as usize]);
        h.mul(xh, yh) as usize * nn + zn as usize
    })
}

//! Second cohomology of a finite group with coefficients in a cyclic module,
//! and the extensions it classifies.
//!
//! Convention: `Q` acts on `Z/n` from the right by multiplication with a unit
//! `u(q)`. The extension attached to a normalized 2-cocycle `c` has elements
//! `(q, z)` and product
//!
//! ```text
//! (q₁, z₁)(q₂, z₂) = (q₁q₂, u(q₂)·z₁ + z₂ + c(q₁, q₂))
//! ```
//!
//! which is associative exactly when
//! `u(q₃)·c(q₁,q₂) + c(q₁q₂,q₃) = c(q₂,q₃) + c(q₁,q₂q₃)`.
//!
//! # Solving
//!
//! A normalized cocycle is determined by its values `c(x, s)` on the
//! generators `s` of `Q` through `c(x, ys) = u(s)·c(x,y) + c(xy,s) − c(y,s)`.
//! Every class has a representative vanishing on the edges of a breadth-first
//! spanning tree of the Cayley graph, so the unknowns are the remaining
//! edges. Requiring the recursion to be consistent on non-tree edges gives a
//! linear system over `Z/n`, solved one prime power at a time by diagonal
//! reduction with minimal-valuation pivots. What remains of the coboundaries
//! is spanned by one cochain per generator; classes are the cosets of that
//! span, each represented by its lexicographically smallest member.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::arith::{factorize, gcd, mod_inv_general};
use crate::group::{Elem, GroupTable};
use crate::{Error, Result};

const MAX_BASE_ORDER: usize = 128;
const MAX_ENUMERATION: usize = 1_000_000;

/// A normalized 2-cocycle `Q × Q → Z/n` for a given action.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleClass {
    base: GroupTable,
    n: u64,
    action: Vec<u64>,
    values: Vec<u64>,
    trivial: bool,
}

impl CocycleClass {
    /// The zero cocycle, whose extension is the split one.
    pub fn trivial(base: GroupTable, n: u64, action: Vec<u64>) -> Result<Self> {
        check_action(&base, n, &action)?;
        let values = vec![0; base.order() * base.order()];
        Ok(CocycleClass {
            base,
            n,
            action,
            values,
            trivial: true,
        })
    }

    pub fn base(&self) -> &GroupTable {
        &self.base
    }

    pub fn fiber_order(&self) -> u64 {
        self.n
    }

    /// Unit by which each element of the base acts on the fiber.
    pub fn action(&self) -> &[u64] {
        &self.action
    }

    pub fn value(&self, x: Elem, y: Elem) -> u64 {
        self.values[x as usize * self.base.order() + y as usize]
    }

    pub fn is_trivial_class(&self) -> bool {
        self.trivial
    }

    /// Checks normalization and the cocycle identity on every triple.
    pub fn satisfies_identity(&self) -> bool {
        let (q, n, u) = (&self.base, self.n, &self.action);
        let c = |x: Elem, y: Elem| self.value(x, y);
        if q.elements().any(|x| c(0, x) != 0 || c(x, 0) != 0) {
            return false;
        }
        q.elements().all(|a| {
            q.elements().all(|b| {
                let ab = q.mul(a, b);
                q.elements().all(|d| {
                    let lhs = (u[d as usize] * c(a, b) + c(ab, d)) % n;
                    let rhs = (c(b, d) + c(a, q.mul(b, d))) % n;
                    lhs == rhs
                })
            })
        })
    }
}

fn check_action(q: &GroupTable, n: u64, u: &[u64]) -> Result<()> {
    if n == 0 {
        return Err(Error::BadParameters("fiber order must be positive".into()));
    }
    if u.len() != q.order() {
        return Err(Error::ActionNotHomomorphic("one unit per base element required".into()));
    }
    if let Some(&bad) = u.iter().find(|&&v| v >= n || gcd(v, n) != 1) {
        return Err(Error::ActionNotAutomorphism(format!(
            "{bad} is not a unit modulo {n}"
        )));
    }
    for x in q.elements() {
        for y in q.elements() {
            if u[q.mul(x, y) as usize] != u[x as usize] * u[y as usize] % n {
                return Err(Error::ActionNotHomomorphic(format!(
                    "u({x}·{y}) differs from u({x})·u({y})"
                )));
            }
        }
    }
    Ok(())
}

/// One normalized representative per class of `H²(Q; Z/n)`, the zero class
/// first, the rest in lexicographic order of their edge values.
pub fn two_cocycle_classes(q: &GroupTable, n: u64, action: &[u64]) -> Result<Vec<CocycleClass>> {
    check_action(q, n, action)?;
    let trivial = CocycleClass::trivial(q.clone(), n, action.to_vec())?;
    if n == 1 || q.order() == 1 {
        return Ok(vec![trivial]);
    }
    if q.order() > MAX_BASE_ORDER {
        return Err(Error::TooLarge(format!(
            "cocycle solving supports bases of order <= {MAX_BASE_ORDER}"
        )));
    }
    let sys = System::new(q, n, action);
    let z_gens = sys.cocycle_generators()?;
    let b_gens = sys.coboundary_generators();
    let zs = span(&z_gens, sys.vars, n)?;
    let bs = span(&b_gens, sys.vars, n)?;
    let z_set: HashSet<&Vec<u64>> = zs.iter().collect();
    if let Some(b) = bs.iter().find(|b| !z_set.contains(b)) {
        return Err(Error::Internal(format!("coboundary {b:?} fails the cocycle equations")));
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut reps: Vec<Vec<u64>> = Vec::new();
    for z in &zs {
        if seen.contains(z) {
            continue;
        }
        let mut best = z.clone();
        for b in &bs {
            let w: Vec<u64> = z.iter().zip(b).map(|(x, y)| (x + y) % n).collect();
            if w < best {
                best = w.clone();
            }
            seen.insert(w);
        }
        reps.push(best);
    }
    reps.sort();
    if zs.len() != reps.len() * bs.len() {
        return Err(Error::Internal("coboundaries do not tile the cocycles".into()));
    }
    let mut out = Vec::with_capacity(reps.len());
    for r in reps {
        let values = sys.expand(&r);
        let class = CocycleClass {
            base: q.clone(),
            n,
            action: action.to_vec(),
            values,
            trivial: r.iter().all(|&v| v == 0),
        };
        if !class.satisfies_identity() {
            return Err(Error::Internal("solved cocycle fails the cocycle identity".into()));
        }
        out.push(class);
    }
    debug_assert!(out[0].trivial);
    Ok(out)
}

/// The extension group of a cocycle; `(q, z)` has index `q·n + z`.
pub fn build_extension(c: &CocycleClass) -> Result<GroupTable> {
    let (q, n) = (&c.base, c.n as usize);
    let order = q.order() * n;
    GroupTable::from_fn(order, |a, b| {
        let (q1, z1) = ((a / n) as Elem, (a % n) as u64);
        let (q2, z2) = ((b / n) as Elem, (b % n) as u64);
        let z = (c.action[q2 as usize] * z1 + z2 + c.value(q1, q2)) % c.n;
        q.mul(q1, q2) as usize * n + z as usize
    })
}

/// The linear system for tree-gauged cocycles of one action.
struct System<'a> {
    q: &'a GroupTable,
    n: u64,
    u: &'a [u64],
    gens: Vec<Elem>,
    /// Non-identity elements in BFS order with their tree edge `(parent, j)`.
    tree: Vec<(Elem, Elem, usize)>,
    /// Variable index of each edge `(x, j)`, at `x·k + j`.
    var_of: Vec<Option<usize>>,
    vars: usize,
}

impl<'a> System<'a> {
    fn new(q: &'a GroupTable, n: u64, u: &'a [u64]) -> Self {
        let gens = q.generators();
        let k = gens.len();
        let order = q.order();
        let mut reached = vec![false; order];
        reached[0] = true;
        let mut is_tree = vec![false; order * k];
        let mut tree = Vec::new();
        let mut queue = vec![0 as Elem];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for (j, &s) in gens.iter().enumerate() {
                let t = q.mul(x, s);
                if !reached[t as usize] {
                    reached[t as usize] = true;
                    is_tree[x as usize * k + j] = true;
                    tree.push((t, x, j));
                    queue.push(t);
                }
            }
        }
        let mut var_of = vec![None; order * k];
        let mut vars = 0;
        for x in 1..order {
            for j in 0..k {
                if !is_tree[x * k + j] {
                    var_of[x * k + j] = Some(vars);
                    vars += 1;
                }
            }
        }
        System {
            q,
            n,
            u,
            gens,
            tree,
            var_of,
            vars,
        }
    }

    fn k(&self) -> usize {
        self.gens.len()
    }

    /// Runs the recursion `c(x, ys) = u(s)c(x,y) + c(xy,s) − c(y,s)` along
    /// the tree, for values in any `Z/n`-module represented by `T`.
    fn propagate<T: Clone>(
        &self,
        zero: T,
        edge: impl Fn(Elem, usize) -> T,
        combine: impl Fn(u64, &T, &T, &T) -> T,
    ) -> Vec<T> {
        let order = self.q.order();
        let mut c = vec![zero; order * order];
        for x in self.q.elements() {
            for &(t, par, j) in &self.tree {
                let s = self.gens[j];
                let v = combine(
                    self.u[s as usize],
                    &c[x as usize * order + par as usize],
                    &edge(self.q.mul(x, par), j),
                    &edge(par, j),
                );
                c[x as usize * order + t as usize] = v;
            }
        }
        c
    }

    fn expand(&self, values: &[u64]) -> Vec<u64> {
        let n = self.n;
        let k = self.k();
        self.propagate(
            0u64,
            |a, j| self.var_of[a as usize * k + j].map_or(0, |v| values[v]),
            |us, cxy, exy, ey| (us * cxy + exy + n - ey) % n,
        )
    }

    /// Rows of the consistency equations over `Z/n`.
    fn equations(&self) -> Vec<Vec<u64>> {
        let (n, k, v) = (self.n, self.k(), self.vars);
        let unit = |a: Elem, j: usize| -> Vec<u64> {
            let mut e = vec![0; v];
            if let Some(i) = self.var_of[a as usize * k + j] {
                e[i] = 1;
            }
            e
        };
        let forms = self.propagate(vec![0u64; v], unit, |us, cxy, exy, ey| {
            (0..v).map(|i| (us * cxy[i] + exy[i] + n - ey[i]) % n).collect()
        });
        let order = self.q.order();
        let mut tree_edge = vec![false; order * k];
        for &(_, par, j) in &self.tree {
            tree_edge[par as usize * k + j] = true;
        }
        let mut rows: HashSet<Vec<u64>> = HashSet::new();
        for x in self.q.elements() {
            for y in self.q.elements() {
                for (j, &s) in self.gens.iter().enumerate() {
                    if tree_edge[y as usize * k + j] {
                        continue;
                    }
                    let us = self.u[s as usize];
                    let cxy = &forms[x as usize * order + y as usize];
                    let cxys = &forms[x as usize * order + self.q.mul(y, s) as usize];
                    let exy = unit(self.q.mul(x, y), j);
                    let ey = unit(y, j);
                    let row: Vec<u64> = (0..v)
                        .map(|i| (us * cxy[i] + exy[i] + 2 * n - ey[i] - cxys[i]) % n)
                        .collect();
                    if row.iter().any(|&r| r != 0) {
                        rows.insert(row);
                    }
                }
            }
        }
        let mut rows: Vec<Vec<u64>> = rows.into_iter().collect();
        rows.sort();
        rows
    }

    /// Generators of the solution module of the consistency equations.
    fn cocycle_generators(&self) -> Result<Vec<Vec<u64>>> {
        let rows = self.equations();
        let mut gens = Vec::new();
        for (p, e) in factorize(self.n) {
            let m = p.pow(e);
            let reduced: Vec<Vec<u64>> =
                rows.iter().map(|r| r.iter().map(|&x| x % m).collect()).collect();
            let cofactor = self.n / m;
            let lift = cofactor
                * mod_inv_general((cofactor % m) as i64, m as i64)
                    .ok_or_else(|| Error::Internal("CRT cofactor not invertible".into()))?
                    as u64;
            for g in kernel_mod_prime_power(reduced, self.vars, p, e) {
                gens.push(g.iter().map(|&x| (x as u128 * lift as u128 % self.n as u128) as u64).collect());
            }
        }
        Ok(gens)
    }

    /// Coboundaries of cochains that vanish on the tree edges, one per
    /// generator of `Q`.
    fn coboundary_generators(&self) -> Vec<Vec<u64>> {
        let (n, k, order) = (self.n, self.k(), self.q.order());
        let mut out = Vec::new();
        for j0 in 0..k {
            let mut f = vec![0u64; order];
            f[self.gens[j0] as usize] = 1;
            for &(t, par, j) in &self.tree {
                if par != 0 {
                    let s = self.gens[j];
                    f[t as usize] = (f[par as usize] * self.u[s as usize] + f[s as usize]) % n;
                }
            }
            let mut vec = vec![0u64; self.vars];
            for x in self.q.elements() {
                for (j, &s) in self.gens.iter().enumerate() {
                    if let Some(i) = self.var_of[x as usize * k + j] {
                        let xs = self.q.mul(x, s);
                        vec[i] = (f[x as usize] * self.u[s as usize] + f[s as usize] + n
                            - f[xs as usize])
                            % n;
                    }
                }
            }
            out.push(vec);
        }
        out
    }
}

fn valuation(mut x: u64, p: u64) -> u32 {
    let mut v = 0;
    while x % p == 0 {
        x /= p;
        v += 1;
    }
    v
}

/// Generators of `{v : A v ≡ 0 (mod p^e)}`.
///
/// Row and column operations bring `A` to diagonal form `U A V = D`; the
/// column operations are accumulated in `V`, and the kernel is `V` applied
/// to the kernel of `D`.
fn kernel_mod_prime_power(mut a: Vec<Vec<u64>>, ncols: usize, p: u64, e: u32) -> Vec<Vec<u64>> {
    let m = p.pow(e);
    let mut vcols: Vec<Vec<u64>> = (0..ncols)
        .map(|c| {
            let mut col = vec![0; ncols];
            col[c] = 1;
            col
        })
        .collect();
    let mut pivots: Vec<u32> = Vec::new();
    let mut t = 0;
    while t < ncols && t < a.len() {
        let mut best: Option<(u32, usize, usize)> = None;
        for (r, row) in a.iter().enumerate().skip(t) {
            for (c, &x) in row.iter().enumerate().skip(t) {
                if x != 0 {
                    let v = valuation(x, p);
                    if best.is_none_or(|b| v < b.0) {
                        best = Some((v, r, c));
                    }
                }
            }
            if best.is_some_and(|b| b.0 == 0) {
                break;
            }
        }
        let Some((v, r, c)) = best else { break };
        a.swap(t, r);
        if c != t {
            for row in &mut a {
                row.swap(t, c);
            }
            vcols.swap(t, c);
        }
        let pv = p.pow(v);
        let unit = a[t][t] / pv;
        let uinv = mod_inv_general(unit as i64, m as i64).expect("pivot cofactor is a unit") as u64;
        let pivot_row = a[t].clone();
        for row in a.iter_mut().skip(t + 1) {
            if row[t] == 0 {
                continue;
            }
            let f = (row[t] / pv) * uinv % m;
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(t) {
                *x = (*x + m - f * y % m) % m;
            }
        }
        for c in t + 1..ncols {
            let x = a[t][c];
            if x == 0 {
                continue;
            }
            let f = (x / pv) * uinv % m;
            a[t][c] = 0;
            let (head, tail) = vcols.split_at_mut(c);
            for (dst, &src) in tail[0].iter_mut().zip(&head[t]) {
                *dst = (*dst + m - f * src % m) % m;
            }
        }
        pivots.push(v);
        t += 1;
    }
    let mut out = Vec::new();
    for (i, col) in vcols.into_iter().enumerate() {
        let scale = match pivots.get(i) {
            Some(&v) if v == 0 => continue,
            Some(&v) => p.pow(e - v),
            None => 1,
        };
        out.push(col.iter().map(|&x| x * scale % m).collect());
    }
    out
}

/// All `Z/n`-combinations of the generators.
fn span(gens: &[Vec<u64>], len: usize, n: u64) -> Result<Vec<Vec<u64>>> {
    let zero = vec![0u64; len];
    let mut index: HashMap<Vec<u64>, ()> = HashMap::new();
    index.insert(zero.clone(), ());
    let mut all = vec![zero];
    let mut head = 0;
    while head < all.len() {
        let x = all[head].clone();
        head += 1;
        for g in gens {
            let y: Vec<u64> = x.iter().zip(g).map(|(a, b)| (a + b) % n).collect();
            if !index.contains_key(&y) {
                if all.len() >= MAX_ENUMERATION {
                    return Err(Error::TooLarge(format!(
                        "more than {MAX_ENUMERATION} cocycles to enumerate"
                    )));
                }
                index.insert(y.clone(), ());
                all.push(y);
            }
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{binary_octahedral, octahedral_sign_action};
    use crate::group::{are_isomorphic, semidirect_product, sylow_subgroup, Action};
    use crate::DEFAULT_ISO_BUDGET as B;

    fn klein() -> GroupTable {
        GroupTable::from_fn(4, |a, b| a ^ b).unwrap()
    }

    #[test]
    fn kernel_of_small_system() {
        // 3x ≡ 0 (mod 9) has solutions 3Z/9.
        let k = kernel_mod_prime_power(vec![vec![3]], 1, 3, 2);
        assert_eq!(k, vec![vec![3]]);
        // x + y ≡ 0 (mod 5): one free direction.
        let k = kernel_mod_prime_power(vec![vec![1, 1]], 2, 5, 1);
        assert_eq!(k.len(), 1);
        assert_eq!((k[0][0] + k[0][1]) % 5, 0);
    }

    #[test]
    fn coprime_fiber_has_only_split_class() {
        let c2 = GroupTable::cyclic(2);
        assert_eq!(two_cocycle_classes(&c2, 3, &[1, 1]).unwrap().len(), 1);
        assert_eq!(two_cocycle_classes(&c2, 3, &[1, 2]).unwrap().len(), 1);
    }

    #[test]
    fn c2_over_c2() {
        let c2 = GroupTable::cyclic(2);
        let classes = two_cocycle_classes(&c2, 2, &[1, 1]).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes[0].is_trivial_class() && !classes[1].is_trivial_class());
        assert!(build_extension(&classes[1]).unwrap().is_cyclic());
        assert!(!build_extension(&classes[0]).unwrap().is_cyclic());
    }

    #[test]
    fn klein_with_c2_fiber_has_eight_classes() {
        let classes = two_cocycle_classes(&klein(), 2, &[1; 4]).unwrap();
        assert_eq!(classes.len(), 8);
        let quaternion_like = classes
            .iter()
            .map(|c| build_extension(c).unwrap())
            .filter(|g| g.square_roots_of_identity() == 2)
            .count();
        assert_eq!(quaternion_like, 1);
    }

    #[test]
    fn trivial_class_is_semidirect() {
        let bo = binary_octahedral();
        let u = octahedral_sign_action(5);
        let split = build_extension(&CocycleClass::trivial(bo.clone(), 5, u.clone()).unwrap()).unwrap();
        let c5 = GroupTable::cyclic(5);
        let auts = u
            .iter()
            .map(|&k| c5.elements().map(|z| (z as u64 * k % 5) as Elem).collect())
            .collect();
        let sd = semidirect_product(&c5, bo, &Action::from_all(auts), 5000).unwrap();
        assert!(are_isomorphic(&split, &sd, B).unwrap());
    }

    #[test]
    fn octahedral_over_c3_has_nonsplit_class() {
        let bo = binary_octahedral();
        let u = octahedral_sign_action(3);
        let classes = two_cocycle_classes(bo, 3, &u).unwrap();
        assert!(classes.len() >= 2);
        let cyclic_sylow: Vec<bool> = classes
            .iter()
            .map(|c| {
                let g = build_extension(c).unwrap();
                let s = sylow_subgroup(&g, 3);
                assert_eq!(s.size(), 9);
                s.to_table(&g).0.is_cyclic()
            })
            .collect();
        assert!(!cyclic_sylow[0]);
        assert!(cyclic_sylow[1..].iter().all(|&c| c));
    }

    #[test]
    fn rejects_bad_actions() {
        let c2 = GroupTable::cyclic(2);
        assert!(two_cocycle_classes(&c2, 3, &[1, 1, 1]).is_err());
        assert!(two_cocycle_classes(&c2, 9, &[1, 3]).is_err());
        assert!(two_cocycle_classes(&GroupTable::cyclic(3), 7, &[1, 6, 6]).is_err());
    }
}

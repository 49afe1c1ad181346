//! Brute-force oracles shared by the integration tests. None of these call
//! the algorithms under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use d2groups_core::GroupTable;

pub type Set = BTreeSet<u32>;

pub fn closure(g: &GroupTable, seed: &Set) -> Set {
    let mut s: Set = seed.clone();
    s.insert(0);
    loop {
        let items: Vec<u32> = s.iter().copied().collect();
        let mut grew = false;
        for &a in &items {
            for &b in &items {
                grew |= s.insert(g.mul(a, b));
            }
        }
        if !grew {
            return s;
        }
    }
}

/// Every subgroup, found as joins of cyclic subgroups until nothing new
/// appears.
pub fn all_subgroups(g: &GroupTable) -> BTreeSet<Set> {
    let cyclic: BTreeSet<Set> = (0..g.order() as u32)
        .map(|x| closure(g, &Set::from([x])))
        .collect();
    let mut found = cyclic.clone();
    let mut frontier: Vec<Set> = cyclic.iter().cloned().collect();
    while let Some(h) = frontier.pop() {
        for c in &cyclic {
            let joined = closure(g, &h.union(c).copied().collect());
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    found
}

pub fn is_normal(g: &GroupTable, s: &Set) -> bool {
    (0..g.order() as u32).all(|x| s.iter().all(|&h| s.contains(&g.mul(g.mul(x, h), g.inv(x)))))
}

pub fn center(g: &GroupTable) -> Set {
    (0..g.order() as u32)
        .filter(|&z| (0..g.order() as u32).all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect()
}

pub fn involutions_plus_identity(g: &GroupTable) -> usize {
    (0..g.order() as u32).filter(|&x| g.mul(x, x) == 0).count()
}

pub fn element_order(g: &GroupTable, x: u32) -> usize {
    let mut y = x;
    let mut k = 1;
    while y != 0 {
        y = g.mul(y, x);
        k += 1;
    }
    k
}

/// Sorted class sizes by direct conjugation.
pub fn class_sizes(g: &GroupTable) -> Vec<usize> {
    let n = g.order() as u32;
    let mut seen = vec![false; n as usize];
    let mut sizes = Vec::new();
    for x in 0..n {
        if seen[x as usize] {
            continue;
        }
        let class: Set = (0..n).map(|y| g.mul(g.mul(y, x), g.inv(y))).collect();
        for &c in &class {
            seen[c as usize] = true;
        }
        sizes.push(class.len());
    }
    sizes.sort_unstable();
    sizes
}

/// Exhaustive search for a bijection `a -> b` preserving products, filling
/// images in element order and checking every product of assigned elements.
pub fn isomorphic(a: &GroupTable, b: &GroupTable) -> bool {
    let n = a.order();
    if n != b.order() {
        return false;
    }
    let oa: Vec<usize> = (0..n as u32).map(|x| element_order(a, x)).collect();
    let ob: Vec<usize> = (0..n as u32).map(|x| element_order(b, x)).collect();
    let mut img = vec![u32::MAX; n];
    let mut used = vec![false; n];
    img[0] = 0;
    used[0] = true;
    fn consistent(a: &GroupTable, b: &GroupTable, img: &[u32], x: usize) -> bool {
        for y in 0..img.len() {
            if img[y] == u32::MAX {
                continue;
            }
            for (p, q) in [(x, y), (y, x)] {
                let prod = a.mul(p as u32, q as u32) as usize;
                if img[prod] != u32::MAX && img[prod] != b.mul(img[p], img[q]) {
                    return false;
                }
            }
        }
        true
    }
    fn go(
        a: &GroupTable,
        b: &GroupTable,
        oa: &[usize],
        ob: &[usize],
        img: &mut Vec<u32>,
        used: &mut Vec<bool>,
        x: usize,
    ) -> bool {
        if x == img.len() {
            return true;
        }
        for t in 0..img.len() {
            if used[t] || oa[x] != ob[t] {
                continue;
            }
            img[x] = t as u32;
            used[t] = true;
            if consistent(a, b, img, x) && go(a, b, oa, ob, img, used, x + 1) {
                return true;
            }
            used[t] = false;
            img[x] = u32::MAX;
        }
        false
    }
    go(a, b, &oa, &ob, &mut img, &mut used, 1)
}

pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut r = 1;
    while n % p == 0 {
        n /= p;
        r *= p;
    }
    r
}

pub fn primes_dividing(n: usize) -> Vec<usize> {
    (2..=n).filter(|&p| n % p == 0 && (2..p).all(|d| p % d != 0)).collect()
}

/// Whether some subgroup is `C_p × C_p`, by checking all pairs of elements.
pub fn has_cp2(g: &GroupTable, p: usize) -> bool {
    let elems: Vec<u32> = (0..g.order() as u32).filter(|&x| element_order(g, x) == p).collect();
    elems.iter().any(|&x| {
        let cx = closure(g, &Set::from([x]));
        elems
            .iter()
            .any(|&y| !cx.contains(&y) && g.mul(x, y) == g.mul(y, x))
    })
}

/// `Q_4n` from its defining action: pairs `(a, b)` with `a ∈ Z/2n`,
/// `b ∈ {0,1}`, multiplied using `y x y⁻¹ = x⁻¹` and `y² = x^n`.
pub fn dicyclic(n: usize) -> GroupTable {
    let m = 2 * n;
    GroupTable::from_fn(2 * m, |u, v| {
        let (a1, b1) = (u % m, u / m);
        let (a2, b2) = (v % m, v / m);
        let a2s = if b1 == 1 { (m - a2) % m } else { a2 };
        let mut a = (a1 + a2s) % m;
        if b1 == 1 && b2 == 1 {
            a = (a + n) % m;
        }
        ((b1 + b2) % 2) * m + a
    })
    .unwrap()
}

pub fn dihedral(n: usize) -> GroupTable {
    GroupTable::from_fn(2 * n, |u, v| {
        let (a1, b1) = (u % n, u / n);
        let (a2, b2) = (v % n, v / n);
        let a2s = if b1 == 1 { (n - a2) % n } else { a2 };
        ((b1 + b2) % 2) * n + (a1 + a2s) % n
    })
    .unwrap()
}

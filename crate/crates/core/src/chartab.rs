//! Irreducible characters over a prime field (Dixon's method), Frobenius–Schur
//! indicators, and the quaternionic count `m_H`.
//!
//! Work happens in `F_p` for a prime `p ≡ 1 (mod exp G)` with `p > |G|`, so
//! every character value is a residue, every degree `d` satisfies `d² < p`,
//! and indicators lift uniquely from `{0, 1, p−1}`.
//!
//! The central characters `ω_i = |C_i|·χ(g_i)/χ(1)` are the common
//! eigenvectors of the class matrices `(M_j)_{i,l} = a[i][j][l]`, normalized
//! to `ω_0 = 1`. They are found by splitting `F_p^k` into simultaneous
//! eigenspaces, one class matrix at a time.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{is_prime, isqrt, mod_inv};
use crate::group::{conjugacy_classes, ConjugacyData, GroupTable};
use crate::{Error, Result};

/// Class multiplication constants `a[i][j][l] = #{(x, y) ∈ C_i × C_j : xy = z_l}`
/// for a fixed representative `z_l` of class `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassConstants {
    k: usize,
    a: Vec<u32>,
}

impl ClassConstants {
    pub fn class_count(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize, l: usize) -> u32 {
        self.a[(i * self.k + j) * self.k + l]
    }
}

/// Counts, for every class `l` and every `x`, the pair `(x, x⁻¹z_l)`.
pub fn class_constants(g: &GroupTable, cc: &ConjugacyData) -> ClassConstants {
    let k = cc.count();
    let mut a = vec![0u32; k * k * k];
    for (l, &z) in cc.reps.iter().enumerate() {
        for x in g.elements() {
            let y = g.mul(g.inv(x), z);
            let (i, j) = (cc.class_of[x as usize] as usize, cc.class_of[y as usize] as usize);
            a[(i * k + j) * k + l] += 1;
        }
    }
    ClassConstants { k, a }
}

/// One irreducible character reduced mod `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CharacterRow {
    /// `χ(g_i) mod p` for each class representative.
    pub values: Vec<u64>,
    pub degree: u64,
    /// Frobenius–Schur indicator, once computed by [`fs_indicators`].
    pub fs_indicator: Option<i8>,
}

/// The irreducible characters of a group over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CharacterSummaryModP {
    pub p: u64,
    pub group_order: u64,
    pub class_sizes: Vec<u64>,
    /// Rows sorted by degree, then by values; the trivial character first.
    pub rows: Vec<CharacterRow>,
}

impl CharacterSummaryModP {
    pub fn degrees(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.degree).collect()
    }

    /// Modular row orthogonality: `Σ_i |C_i| χ(g_i) ψ(g_i⁻¹)` is `|G|` for
    /// `χ = ψ` and `0` otherwise.
    pub fn orthogonality_holds(&self, cc: &ConjugacyData) -> bool {
        let p = self.p;
        let k = self.class_sizes.len();
        self.rows.iter().enumerate().all(|(r, chi)| {
            self.rows.iter().enumerate().all(|(s, psi)| {
                let sum = (0..k).fold(0u64, |acc, i| {
                    let inv = cc.inverse_class[i] as usize;
                    let t = self.class_sizes[i] % p * chi.values[i] % p * psi.values[inv] % p;
                    (acc + t) % p
                });
                sum == if r == s { self.group_order % p } else { 0 }
            })
        })
    }

    /// `Σ_χ ν(χ)·χ(1)`, or `None` before indicators are computed.
    pub fn indicator_sum(&self) -> Option<i64> {
        self.rows
            .iter()
            .map(|r| r.fs_indicator.map(|v| v as i64 * r.degree as i64))
            .sum()
    }

    /// Number of rows of degree 2 with indicator −1.
    pub fn quaternionic_count(&self) -> Option<usize> {
        let mut count = 0;
        for r in &self.rows {
            let nu = r.fs_indicator?;
            if r.degree == 2 && nu == -1 {
                count += 1;
            }
        }
        Some(count)
    }
}

/// Smallest prime `p ≡ 1 (mod exponent)` with `p > max(order, 3)`.
pub fn suitable_prime(order: u64, exponent: u64) -> Result<u64> {
    let floor = order.max(3);
    let mut p = (floor / exponent + 1) * exponent + 1;
    while p < (1 << 31) {
        if p > floor && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(Error::NoSuitablePrime)
}

pub fn dixon_table(g: &GroupTable) -> Result<CharacterSummaryModP> {
    dixon_table_with(g, &conjugacy_classes(g))
}

pub fn dixon_table_with(g: &GroupTable, cc: &ConjugacyData) -> Result<CharacterSummaryModP> {
    let order = g.order() as u64;
    let p = suitable_prime(order, g.exponent())?;
    let k = cc.count();
    let consts = class_constants(g, cc);
    let class_sizes: Vec<u64> = cc.sizes.iter().map(|&s| s as u64).collect();

    let mut order_of_use: Vec<usize> = (1..k).collect();
    order_of_use.sort_by(|&a, &b| cc.sizes[b].cmp(&cc.sizes[a]).then(a.cmp(&b)));

    let mut spaces = vec![Subspace::whole(k, p)];
    for &j in &order_of_use {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let m = Matrix::from_fn(k, p, |i, l| consts.get(i, j, l) as u64 % p);
        let mut next = Vec::with_capacity(spaces.len());
        for s in spaces {
            if s.dim() == 1 {
                next.push(s);
            } else {
                next.extend(s.split(&m)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::SplitFailure(format!(
            "found {} simultaneous eigenspaces for {k} classes",
            spaces.len()
        )));
    }

    let mut rows = Vec::with_capacity(k);
    for s in spaces {
        let mut w = s.rows.into_iter().next().unwrap();
        if w[0] == 0 {
            return Err(Error::SplitFailure("central character vanishes at 1".into()));
        }
        let lead = mod_inv(w[0], p);
        for x in &mut w {
            *x = *x * lead % p;
        }
        let norm = (0..k).fold(0u64, |acc, i| {
            let inv = cc.inverse_class[i] as usize;
            let t = w[i] * w[inv] % p * mod_inv(class_sizes[i] % p, p) % p;
            (acc + t) % p
        });
        if norm == 0 {
            return Err(Error::SplitFailure("degenerate central character".into()));
        }
        let d2 = order % p * mod_inv(norm, p) % p;
        let d = isqrt(d2);
        if d * d != d2 || d == 0 || order % d != 0 {
            return Err(Error::LiftFailure(format!("{d2} is not the square of a degree")));
        }
        let values = (0..k)
            .map(|i| d % p * w[i] % p * mod_inv(class_sizes[i] % p, p) % p)
            .collect();
        rows.push(CharacterRow {
            values,
            degree: d,
            fs_indicator: None,
        });
    }
    rows.sort_by(|a, b| a.degree.cmp(&b.degree).then_with(|| a.values.cmp(&b.values)));
    let total: u64 = rows.iter().map(|r| r.degree * r.degree).sum();
    if total != order {
        return Err(Error::SplitFailure(format!(
            "squared degrees sum to {total}, not {order}"
        )));
    }
    Ok(CharacterSummaryModP {
        p,
        group_order: order,
        class_sizes,
        rows,
    })
}

/// Fills in `ν(χ) = |G|⁻¹ Σ_i |C_i|·χ(g_i²)` for every row.
pub fn fs_indicators(
    cc: &ConjugacyData,
    mut t: CharacterSummaryModP,
) -> Result<CharacterSummaryModP> {
    let p = t.p;
    let inv_order = mod_inv(t.group_order % p, p);
    for row in &mut t.rows {
        let sum = (0..cc.count()).fold(0u64, |acc, i| {
            let sq = cc.square_class[i] as usize;
            (acc + t.class_sizes[i] % p * row.values[sq]) % p
        });
        let nu = sum * inv_order % p;
        row.fs_indicator = Some(match nu {
            0 => 0,
            1 => 1,
            v if v == p - 1 => -1,
            v => {
                return Err(Error::LiftFailure(format!(
                    "indicator residue {v} mod {p} is not in {{-1, 0, 1}}"
                )))
            }
        });
    }
    Ok(t)
}

/// Character table with indicators.
pub fn character_summary(g: &GroupTable) -> Result<CharacterSummaryModP> {
    let cc = conjugacy_classes(g);
    fs_indicators(&cc, dixon_table_with(g, &cc)?)
}

/// `m_H(G)`: irreducibles of degree 2 with indicator −1.
pub fn m_quaternionic(g: &GroupTable) -> Result<usize> {
    let t = character_summary(g)?;
    Ok(t.quaternionic_count().expect("indicators are filled in"))
}

/// Dense square matrix over `F_p`.
#[derive(Clone)]
struct Matrix {
    n: usize,
    p: u64,
    a: Vec<u64>,
}

impl Matrix {
    fn from_fn(n: usize, p: u64, f: impl Fn(usize, usize) -> u64) -> Self {
        let mut a = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                a.push(f(i, j));
            }
        }
        Matrix { n, p, a }
    }

    fn at(&self, i: usize, j: usize) -> u64 {
        self.a[i * self.n + j]
    }

    fn apply(&self, v: &[u64]) -> Vec<u64> {
        (0..self.n)
            .map(|i| {
                let row = &self.a[i * self.n..(i + 1) * self.n];
                row.iter().zip(v).fold(0u64, |acc, (&x, &y)| (acc + x * y) % self.p)
            })
            .collect()
    }

    /// Characteristic polynomial, coefficients from the constant term up,
    /// via reduction to upper Hessenberg form.
    fn charpoly(&self) -> Vec<u64> {
        let (n, p) = (self.n, self.p);
        let mut h = self.a.clone();
        let idx = |i: usize, j: usize| i * n + j;
        for m in 1..n.saturating_sub(1) {
            let Some(piv) = (m..n).find(|&i| h[idx(i, m - 1)] != 0) else {
                continue;
            };
            if piv != m {
                for j in 0..n {
                    h.swap(idx(piv, j), idx(m, j));
                }
                for i in 0..n {
                    h.swap(idx(i, piv), idx(i, m));
                }
            }
            let inv = mod_inv(h[idx(m, m - 1)], p);
            for i in m + 1..n {
                let t = h[idx(i, m - 1)] * inv % p;
                if t == 0 {
                    continue;
                }
                for j in 0..n {
                    h[idx(i, j)] = (h[idx(i, j)] + p - t * h[idx(m, j)] % p) % p;
                }
                for r in 0..n {
                    h[idx(r, m)] = (h[idx(r, m)] + t * h[idx(r, i)]) % p;
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut next = vec![0u64; m + 1];
            let diag = h[idx(m - 1, m - 1)];
            for (d, &c) in prev.iter().enumerate() {
                next[d + 1] = (next[d + 1] + c) % p;
                next[d] = (next[d] + p - diag * c % p) % p;
            }
            let mut t = 1u64;
            for i in (1..m).rev() {
                t = t * h[idx(i, i - 1)] % p;
                let coef = h[idx(i - 1, m - 1)] * t % p;
                if coef == 0 {
                    continue;
                }
                for (d, &c) in polys[i - 1].iter().enumerate() {
                    next[d] = (next[d] + p - coef * c % p) % p;
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }
}

fn eval(poly: &[u64], x: u64, p: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

/// Basis of the null space of `m` (given row-major, `rows × cols`).
fn null_space(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = mod_inv(m[r][c], p);
        for x in &mut m[r] {
            *x = *x * inv % p;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - m[i][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// A subspace of `F_p^k` in reduced row echelon form.
struct Subspace {
    p: u64,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn whole(k: usize, p: u64) -> Self {
        let rows = (0..k)
            .map(|i| {
                let mut v = vec![0; k];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            p,
            rows,
            pivots: (0..k).collect(),
        }
    }

    fn from_vectors(mut rows: Vec<Vec<u64>>, p: u64) -> Self {
        let k = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..k {
            let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
                continue;
            };
            rows.swap(r, piv);
            let inv = mod_inv(rows[r][c], p);
            for x in &mut rows[r] {
                *x = *x * inv % p;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = (*x + p - f * y % p) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Subspace { p, rows, pivots }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Splits into the eigenspaces of `m` restricted to this (invariant)
    /// subspace. Returns `self` unchanged when `m` acts as a scalar.
    fn split(self, m: &Matrix) -> Result<Vec<Subspace>> {
        let (d, p) = (self.dim(), self.p);
        let images: Vec<Vec<u64>> = self.rows.iter().map(|b| m.apply(b)).collect();
        // Column t of the restriction holds the coordinates of m·b_t, read
        // off at the pivot positions.
        let r = Matrix::from_fn(d, p, |i, t| images[t][self.pivots[i]]);
        for (t, img) in images.iter().enumerate() {
            let mut back = vec![0u64; img.len()];
            for (i, b) in self.rows.iter().enumerate() {
                let c = r.at(i, t);
                for (x, &y) in back.iter_mut().zip(b) {
                    *x = (*x + c * y) % p;
                }
            }
            if back != *img {
                return Err(Error::SplitFailure("subspace is not invariant".into()));
            }
        }
        let poly = r.charpoly();
        let mut out = Vec::new();
        let mut found = 0;
        for lambda in 0..p {
            if found == d {
                break;
            }
            if eval(&poly, lambda, p) != 0 {
                continue;
            }
            let shifted: Vec<Vec<u64>> = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            let v = r.at(i, j);
                            if i == j { (v + p - lambda) % p } else { v }
                        })
                        .collect()
                })
                .collect();
            let coords = null_space(shifted, d, p);
            if coords.is_empty() {
                return Err(Error::SplitFailure(format!("root {lambda} has no eigenvector")));
            }
            found += coords.len();
            let vectors = coords
                .iter()
                .map(|y| {
                    let mut v = vec![0u64; self.rows[0].len()];
                    for (c, b) in y.iter().zip(&self.rows) {
                        for (x, &bv) in v.iter_mut().zip(b) {
                            *x = (*x + c * bv) % p;
                        }
                    }
                    v
                })
                .collect();
            out.push(Subspace::from_vectors(vectors, p));
        }
        if found != d {
            return Err(Error::SplitFailure(format!(
                "eigenspaces span {found} of {d} dimensions"
            )));
        }
        if out.len() == 1 {
            return Ok(vec![self]);
        }
        Ok(out)
    }
}

//! Todd–Coxeter enumeration of the cosets of the trivial subgroup.
//!
//! Two definition strategies share one coset table implementation:
//!
//! * [`Strategy::Hlt`] scans every relator at each coset in turn, defining
//!   cosets as needed, and falls back to a lookahead pass (scan without
//!   defining) when the table is full.
//! * [`Strategy::Felsch`] defines the first undefined entry and immediately
//!   scans every relator rotation affected by each deduction.
//!
//! Coincidences are merged with a union-find forest (the smaller index
//! survives). Dead cosets are reclaimed by compacting the table, which keeps
//! the live cosets in definition order.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::Presentation;
use crate::group::Permutation;
use crate::{Error, Result};

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Hlt,
    Felsch,
}

/// Counters collected during an enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub defined: usize,
    pub max_live: usize,
    pub coincidences: usize,
    pub compactions: usize,
    pub lookaheads: usize,
}

/// A complete coset table of the trivial subgroup.
///
/// Column `2g` holds the action of generator `g`, column `2g + 1` that of its
/// inverse. Coset `0` is the subgroup itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    ngens: usize,
    coset_count: usize,
    rows: Vec<u32>,
    stats: EnumerationStats,
}

impl CosetTable {
    pub fn coset_count(&self) -> usize {
        self.coset_count
    }

    pub fn stats(&self) -> EnumerationStats {
        self.stats
    }

    /// `coset · g^(±1)`; `inverse` selects the inverse column.
    pub fn act(&self, coset: usize, gen: usize, inverse: bool) -> usize {
        self.rows[coset * 2 * self.ngens + 2 * gen + inverse as usize] as usize
    }

    /// The permutation of cosets induced by generator `g`.
    pub fn generator_permutation(&self, gen: usize) -> Permutation {
        Permutation::new((0..self.coset_count).map(|c| self.act(c, gen, false) as u32).collect())
            .expect("columns of a complete coset table are permutations")
    }

    /// Traces every relator from every coset.
    pub fn satisfies(&self, p: &Presentation) -> bool {
        p.relators().iter().all(|r| {
            (0..self.coset_count).all(|c| {
                let mut d = c;
                for &(g, e) in r.letters() {
                    for _ in 0..e.unsigned_abs() {
                        d = self.act(d, g, e < 0);
                    }
                }
                d == c
            })
        })
    }
}

/// Enumerates with the default strategy (HLT with lookahead).
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Result<CosetTable> {
    todd_coxeter_with(p, max_cosets, Strategy::Hlt)
}

pub fn todd_coxeter_with(
    p: &Presentation,
    max_cosets: usize,
    strategy: Strategy,
) -> Result<CosetTable> {
    if max_cosets == 0 {
        return Err(Error::BadParameters("coset budget must be positive".into()));
    }
    let mut e = Enumerator::new(p, max_cosets);
    match strategy {
        Strategy::Hlt => e.run_hlt()?,
        Strategy::Felsch => e.run_felsch()?,
    }
    e.compact();
    let n = e.live;
    let table = CosetTable {
        ngens: p.generators().len(),
        coset_count: n,
        rows: e.table[..n * e.ncols].to_vec(),
        stats: e.stats,
    };
    if table.rows.contains(&NONE) {
        return Err(Error::Internal("coset table incomplete after enumeration".into()));
    }
    if !table.satisfies(p) {
        return Err(Error::Internal(format!(
            "coset table with {n} cosets fails a relator"
        )));
    }
    Ok(table)
}

/// Signals that a definition needs a free slot.
struct NeedSpace;

struct Enumerator {
    ncols: usize,
    relators: Vec<Vec<usize>>,
    /// `rotations[x]`: cyclic rotations of relators and their inverses that
    /// start with column `x` (Felsch deduction scans).
    rotations: Vec<Vec<Vec<usize>>>,
    capacity: usize,
    table: Vec<u32>,
    /// Union-find parent; `parent[c] == c` for live cosets.
    parent: Vec<u32>,
    slots: usize,
    live: usize,
    queue: Vec<u32>,
    deductions: Vec<(u32, usize)>,
    record_deductions: bool,
    stats: EnumerationStats,
}

#[inline]
fn inv(col: usize) -> usize {
    col ^ 1
}

impl Enumerator {
    fn new(p: &Presentation, capacity: usize) -> Self {
        let ncols = 2 * p.generators().len();
        let relators: Vec<Vec<usize>> = p
            .relators()
            .iter()
            .map(|w| {
                let mut cols = Vec::new();
                for &(g, e) in w.letters() {
                    let c = 2 * g + (e < 0) as usize;
                    cols.extend(core::iter::repeat_n(c, e.unsigned_abs() as usize));
                }
                cols
            })
            .collect();
        let mut rotations = vec![Vec::new(); ncols];
        for r in &relators {
            let r_inv: Vec<usize> = r.iter().rev().map(|&c| inv(c)).collect();
            for w in [r, &r_inv] {
                for k in 0..w.len() {
                    let rot: Vec<usize> = w[k..].iter().chain(&w[..k]).copied().collect();
                    if !rotations[rot[0]].contains(&rot) {
                        rotations[rot[0]].push(rot);
                    }
                }
            }
        }
        let mut e = Enumerator {
            ncols,
            relators,
            rotations,
            capacity,
            table: Vec::new(),
            parent: Vec::new(),
            slots: 0,
            live: 0,
            queue: Vec::new(),
            deductions: Vec::new(),
            record_deductions: false,
            stats: EnumerationStats::default(),
        };
        e.new_slot();
        e
    }

    fn new_slot(&mut self) -> u32 {
        let c = self.slots as u32;
        self.slots += 1;
        self.live += 1;
        self.table.extend(core::iter::repeat_n(NONE, self.ncols));
        self.parent.push(c);
        self.stats.max_live = self.stats.max_live.max(self.live);
        c
    }

    #[inline]
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.ncols + x]
    }

    #[inline]
    fn set(&mut self, c: u32, x: usize, v: u32) {
        self.table[c as usize * self.ncols + x] = v;
    }

    #[inline]
    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn assign(&mut self, c: u32, x: usize, d: u32) {
        self.set(c, x, d);
        self.set(d, inv(x), c);
        if self.record_deductions {
            self.deductions.push((c, x));
        }
    }

    fn define(&mut self, c: u32, x: usize) -> core::result::Result<u32, NeedSpace> {
        if self.slots >= self.capacity {
            return Err(NeedSpace);
        }
        let d = self.new_slot();
        self.stats.defined += 1;
        self.assign(c, x, d);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut k = c;
        while self.parent[k as usize] != r {
            let next = self.parent[k as usize];
            self.parent[k as usize] = r;
            k = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.rep(a), self.rep(b));
        if ra != rb {
            let (keep, kill) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[kill as usize] = keep;
            self.live -= 1;
            self.queue.push(kill);
        }
    }

    /// Processes the coincidence `a = b` and everything it implies.
    fn coincidence(&mut self, a: u32, b: u32) {
        self.stats.coincidences += 1;
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                if self.get(f, inv(x)) == e {
                    self.set(f, inv(x), NONE);
                }
                let (e1, f1) = (self.rep(e), self.rep(f));
                let t = self.get(e1, x);
                if t != NONE {
                    self.merge(f1, t);
                } else {
                    let u = self.get(f1, inv(x));
                    if u != NONE {
                        self.merge(e1, u);
                    } else {
                        self.assign(e1, x, f1);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans relator `w` at coset `c`. With `fill`, undefined entries are
    /// defined; without, the scan stops at the first gap unless it closes
    /// with a deduction or coincidence.
    fn scan(&mut self, c: u32, w: &[usize], fill: bool) -> core::result::Result<(), NeedSpace> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while i as isize <= j {
                let t = self.get(f, w[i]);
                if t == NONE {
                    break;
                }
                f = t;
                i += 1;
            }
            if i as isize > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize {
                let t = self.get(b, inv(w[j as usize]));
                if t == NONE {
                    break;
                }
                b = t;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if i as isize == j {
                self.assign(f, w[i], b);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn lookahead(&mut self) {
        self.stats.lookaheads += 1;
        let relators = core::mem::take(&mut self.relators);
        for c in 0..self.slots as u32 {
            for r in &relators {
                if !self.is_live(c) {
                    break;
                }
                let _ = self.scan(c, r, false);
            }
        }
        self.relators = relators;
    }

    /// Renumbers live cosets to `0..live` in order. Returns the old-to-new
    /// index map (`NONE` for dead cosets).
    fn compact(&mut self) -> Vec<u32> {
        let mut map = vec![NONE; self.slots];
        let mut next = 0u32;
        for c in 0..self.slots as u32 {
            if self.is_live(c) {
                map[c as usize] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.ncols);
        for c in 0..self.slots {
            if map[c] == NONE {
                continue;
            }
            for x in 0..self.ncols {
                let v = self.table[c * self.ncols + x];
                table.push(if v == NONE { NONE } else { map[v as usize] });
            }
        }
        self.table = table;
        self.slots = next as usize;
        self.parent = (0..next).collect();
        for d in &mut self.deductions {
            d.0 = map[d.0 as usize];
        }
        self.deductions.retain(|d| d.0 != NONE);
        self.stats.compactions += 1;
        map
    }

    /// Frees slots at a safe point. Returns the new index of `c` (or of the
    /// next live coset when `c` died) and whether `c` is still live.
    fn make_space(&mut self, c: u32) -> Result<(u32, bool)> {
        if self.live == self.slots {
            self.lookahead();
        }
        if self.live == self.slots {
            return Err(Error::BudgetExceeded {
                what: "coset enumeration",
                budget: self.capacity as u64,
            });
        }
        let alive = self.is_live(c);
        let map = self.compact();
        let new_c = map[..c as usize].iter().filter(|&&m| m != NONE).count() as u32;
        Ok((new_c, alive))
    }

    fn run_hlt(&mut self) -> Result<()> {
        let relators = self.relators.clone();
        let mut c = 0u32;
        'cosets: while (c as usize) < self.slots {
            if !self.is_live(c) {
                c += 1;
                continue;
            }
            for r in &relators {
                loop {
                    match self.scan(c, r, true) {
                        Ok(()) => break,
                        Err(NeedSpace) => {
                            let (nc, alive) = self.make_space(c)?;
                            c = nc;
                            if !alive {
                                continue 'cosets;
                            }
                        }
                    }
                }
                if !self.is_live(c) {
                    c += 1;
                    continue 'cosets;
                }
            }
            for x in 0..self.ncols {
                if !self.is_live(c) {
                    break;
                }
                while self.get(c, x) == NONE {
                    if self.define(c, x).is_err() {
                        let (nc, alive) = self.make_space(c)?;
                        c = nc;
                        if !alive {
                            continue 'cosets;
                        }
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    fn process_deductions(&mut self) {
        while let Some((d, x)) = self.deductions.pop() {
            if !self.is_live(d) {
                continue;
            }
            let rots = core::mem::take(&mut self.rotations);
            for r in &rots[x] {
                if !self.is_live(d) {
                    break;
                }
                let _ = self.scan(d, r, false);
            }
            let e = if self.is_live(d) { self.get(d, x) } else { NONE };
            if e != NONE {
                for r in &rots[inv(x)] {
                    if !self.is_live(e) {
                        break;
                    }
                    let _ = self.scan(e, r, false);
                }
            }
            self.rotations = rots;
        }
    }

    fn run_felsch(&mut self) -> Result<()> {
        self.record_deductions = true;
        let mut first = 0u32;
        loop {
            self.process_deductions();
            let gap = (first..self.slots as u32).find_map(|c| {
                if !self.is_live(c) {
                    return None;
                }
                (0..self.ncols).find(|&x| self.get(c, x) == NONE).map(|x| (c, x))
            });
            match gap {
                Some((c, x)) => {
                    first = c;
                    if self.define(c, x).is_err() {
                        let (nc, _) = self.make_space(c)?;
                        first = nc;
                    }
                }
                None => {
                    // Table is closed; a final full scan must be silent.
                    let before = (self.stats.coincidences, self.live);
                    self.record_deductions = true;
                    let relators = self.relators.clone();
                    for c in 0..self.slots as u32 {
                        for r in &relators {
                            if self.is_live(c) {
                                let _ = self.scan(c, r, false);
                            }
                        }
                    }
                    if (self.stats.coincidences, self.live) == before && self.deductions.is_empty()
                    {
                        return Ok(());
                    }
                    first = 0;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_presentation;

    fn count(text: &str, strategy: Strategy) -> usize {
        let p = parse_presentation(text).unwrap();
        todd_coxeter_with(&p, 100_000, strategy).unwrap().coset_count()
    }

    #[test]
    fn cyclic_five() {
        for s in [Strategy::Hlt, Strategy::Felsch] {
            assert_eq!(count("<x | x^5>", s), 5);
        }
    }

    #[test]
    fn strategies_agree() {
        for text in [
            "<x,y | x^3, y^2, (x*y)^2>",
            "<x,y | x^7 = y^2, x*y*x = y>",
            "<x,y | y*x^3*y = x^3, x*y*x = y^3>",
            "<s,t | s^3 = t^4, t^4 = (s*t)^2>",
            "<s,t | s^3 = t^5, t^5 = (s*t)^2>",
            "<x,y | x^2, y^2, (x*y)^8>",
            "<x,y | x*y = y*x, x^4, y^6>",
        ] {
            assert_eq!(count(text, Strategy::Hlt), count(text, Strategy::Felsch), "{text}");
        }
    }

    #[test]
    fn budget_is_enforced() {
        let p = parse_presentation("<x,y | x^2, y^3>").unwrap();
        assert!(matches!(
            todd_coxeter(&p, 50),
            Err(Error::BudgetExceeded { .. })
        ));
        assert!(matches!(
            todd_coxeter_with(&p, 50, Strategy::Felsch),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn tight_budget_forces_compaction() {
        let p = parse_presentation("<x,y | x^7 = y^2, x*y*x = y>").unwrap();
        let t = todd_coxeter(&p, 60).unwrap();
        assert_eq!(t.coset_count(), 28);
        assert!(t.satisfies(&p));
    }

    #[test]
    fn trivial_group() {
        assert_eq!(count("<x,y | x, y>", Strategy::Hlt), 1);
        assert_eq!(count("<x,y | x*y, x*y^2>", Strategy::Felsch), 1);
    }
}

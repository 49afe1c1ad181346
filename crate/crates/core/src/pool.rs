//! The built-in test pool and the cross-module property suites run on it.
//!
//! A pool is a list of catalog expressions (with coprime cyclic products)
//! plus every quotient of those groups up to isomorphism. Work is split in
//! two phases so a caller can parallelize: [`analyze_member`] computes all
//! per-group data independently, and [`run_suites`] checks the properties
//! over the collected records.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use crate::arith::{gcd, lcm, p_part, prime_divisors};
use crate::catalog::{self, verify_family_axioms, Atom, FamilyCheck, GroupExpr};
use crate::chartab::{character_summary, m_quaternionic};
use crate::classify::{classify_family, FamilyTag};
use crate::group::{
    are_isomorphic, conjugacy_classes, direct_product, has_elementary_abelian_p2,
    normal_subgroups, quotient, recognize_structure, sylow_subgroup, Fingerprint, GroupTable,
    StructureTag,
};
use crate::periodicity::periodicity_report;
use crate::{Limits, Result};

/// Default bound on the order of base pool groups.
pub const DEFAULT_POOL_MAX_ORDER: usize = 500;

/// Base expressions of the standard pool, smallest first within each block.
pub const STANDARD_EXPRESSIONS: &[&str] = &[
    // cyclic and small abelian
    "C:1", "C:2", "C:3", "C:4", "C:6", "C:8", "C:12", "C:30",
    "C:2 * C:2", "C:3 * C:3", "C:2 * C:2 * C:3",
    // dihedral
    "D:3", "D:4", "D:5", "D:6", "D:7", "D:8", "D:9", "D:15", "D:3 * C:5", "D:5 * C:3",
    // dicyclic
    "Q:2", "Q:3", "Q:4", "Q:5", "Q:6", "Q:7", "Q:8", "Q:9", "Q:10", "Q:11", "Q:12",
    "Q:14", "Q:15", "Q:2 * C:2", "Q:3 * C:2", "Q:2 * C:3", "Q:2 * C:5", "Q:3 * C:5",
    "Q:4 * C:3", "Q:5 * C:3", "Q:6 * C:5", "Q:7 * C:3", "Q:6 * C:7",
    // binary polyhedral
    "BT", "BO", "BI", "BT * C:2", "BT * C:5", "BT * C:7", "BO * C:5", "BO * C:7",
    // D(2^n, m)
    "Dd:3,3", "Dd:4,3", "Dd:5,3", "Dd:6,3", "Dd:3,5", "Dd:4,5", "Dd:5,5", "Dd:3,7",
    "Dd:3,9", "Dd:4,3 * C:5", "Dd:3,5 * C:3",
    // P'
    "Pp:2", "Pp:3", "Pp:2 * C:5",
    // P''
    "Ppp:3", "Ppp:5", "Ppp:7", "Ppp:9",
    // Q(2^n a; b, c)
    "Qt:4,1,3,1", "Qt:4,1,5,1", "Qt:4,1,7,1", "Qt:4,1,9,1", "Qt:4,1,11,1", "Qt:4,1,13,1",
    "Qt:4,1,5,3", "Qt:4,1,7,3", "Qt:4,1,3,1 * C:5", "Qt:3,1,3,1", "Qt:3,1,3,5",
];

/// Where a pool group came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    Expression(GroupExpr),
    /// `parent / N` with `|N| = kernel_size`.
    Quotient { parent: String, kernel_size: usize },
}

#[derive(Clone, Debug)]
pub struct PoolMember {
    pub name: String,
    pub origin: Origin,
    pub table: GroupTable,
}

/// Builds the standard pool restricted to base groups of order at most
/// `max_order`, then adds their quotients up to isomorphism.
pub fn standard_pool(max_order: usize, limits: Limits) -> Result<Vec<PoolMember>> {
    let exprs: Vec<GroupExpr> = STANDARD_EXPRESSIONS
        .iter()
        .map(|s| GroupExpr::from_str(s))
        .collect::<Result<_>>()?;
    pool_from_expressions(&exprs, max_order, limits)
}

pub fn pool_from_expressions(
    exprs: &[GroupExpr],
    max_order: usize,
    limits: Limits,
) -> Result<Vec<PoolMember>> {
    let mut members: Vec<PoolMember> = Vec::new();
    let mut prints: Vec<Fingerprint> = Vec::new();
    let mut push = |m: PoolMember, members: &mut Vec<PoolMember>| -> Result<()> {
        let fp = Fingerprint::of(&m.table);
        for (other, ofp) in members.iter().zip(&prints) {
            if *ofp == fp && are_isomorphic(&other.table, &m.table, limits.iso_budget)? {
                return Ok(());
            }
        }
        prints.push(fp);
        members.push(m);
        Ok(())
    };
    let mut bases = Vec::new();
    for e in exprs {
        if e.order().is_some_and(|o| o <= max_order as u64) {
            let table = e.build(limits.max_order)?;
            bases.push((e.to_string(), table.clone()));
            push(
                PoolMember {
                    name: e.to_string(),
                    origin: Origin::Expression(e.clone()),
                    table,
                },
                &mut members,
            )?;
        }
    }
    for (name, g) in &bases {
        for n in normal_subgroups(g) {
            if n.is_trivial() {
                continue;
            }
            let (q, _) = quotient(g, &n)?;
            push(
                PoolMember {
                    name: format!("{name} / N{}", n.size()),
                    origin: Origin::Quotient {
                        parent: name.clone(),
                        kernel_size: n.size(),
                    },
                    table: q,
                },
                &mut members,
            )?;
        }
    }
    Ok(members)
}

/// One quotient `G/N` as seen from a pool member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientRecord {
    pub kernel_size: usize,
    pub order: usize,
    pub tag: StructureTag,
    /// Filled in for binary polyhedral quotients.
    pub m_h: Option<usize>,
    /// `(p, |Syl_p(G)|, |Syl_p(N)|, |Syl_p(G/N)|)` for each prime `p | |G|`.
    pub sylow_orders: Vec<(u64, usize, usize, usize)>,
}

/// Comparison of `G` with `G × C_k` for a small prime `k ∤ |G|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductRecord {
    pub k: u64,
    pub period: Option<u64>,
    pub product_period: Option<u64>,
    pub m_h: usize,
    pub product_m_h: usize,
}

/// Everything the suites need about one pool group.
#[derive(Clone, Debug)]
pub struct MemberRecord {
    pub name: String,
    pub order: usize,
    pub from_expression: Option<GroupExpr>,
    pub axioms_ok: bool,
    pub periodic: bool,
    pub period: Option<u64>,
    /// Primes `p` with a `C_p × C_p` subgroup, found by direct search.
    pub elementary_p2: Vec<u64>,
    pub m_h: usize,
    pub degree_square_sum: u64,
    pub orthogonality: bool,
    pub indicator_sum: Option<i64>,
    pub involutions_plus_one: usize,
    pub quotients: Vec<QuotientRecord>,
    pub product: Option<ProductRecord>,
    pub family: FamilyTag,
    pub family_check: Option<FamilyCheck>,
    /// Whether `G ≅ Q_24 × C_k`; only computed when 4-periodic with `m_h ≥ 3`.
    pub q24_times_cyclic: bool,
}

impl MemberRecord {
    pub fn is_4_periodic(&self) -> bool {
        self.period.is_some_and(|p| 4 % p == 0)
    }

    pub fn quaternion_ns(&self) -> impl Iterator<Item = u64> + '_ {
        self.quotients
            .iter()
            .filter(|q| q.tag == StructureTag::GeneralizedQuaternion)
            .map(|q| q.order as u64 / 4)
    }

    pub fn bpg_quotients(&self) -> impl Iterator<Item = &QuotientRecord> {
        self.quotients.iter().filter(|q| q.tag.is_binary_polyhedral())
    }
}

fn sylow_size(g: &GroupTable, p: u64) -> usize {
    sylow_subgroup(g, p).size()
}

/// The family atom of an expression: the first factor that is not cyclic,
/// or the cyclic factor itself for purely cyclic expressions.
fn family_atom(e: &GroupExpr) -> Option<Atom> {
    e.factors
        .iter()
        .find(|a| !matches!(a, Atom::Cyclic(_)))
        .or(e.factors.first())
        .copied()
}

/// Whether an expression names a member of families I–VI: the family atom
/// times cyclic factors coprime to it and to each other.
pub fn is_family_expression(e: &GroupExpr) -> bool {
    let Some(main) = family_atom(e) else {
        return false;
    };
    let is_family = match main {
        Atom::Cyclic(_) | Atom::Quaternion(2..=5) => true,
        Atom::Dihedral(n) => n % 2 == 1,
        Atom::BinaryTetrahedral | Atom::BinaryOctahedral | Atom::BinaryIcosahedral => true,
        Atom::Dd { n, m } => n >= 3 && (m == 3 || m == 5),
        Atom::Pp { n } => n >= 2,
        Atom::Ppp { n } => n >= 3 && n % 2 == 1,
        Atom::Qt { n, a, b, c } => n == 4 && a == 1 && b > c && gcd(b as u64, c as u64) == 1,
        _ => false,
    };
    if !is_family {
        return false;
    }
    let mut acc = main.order().unwrap_or(0);
    let mut seen_main = false;
    for f in &e.factors {
        if *f == main && !seen_main {
            seen_main = true;
            continue;
        }
        let o = f.order().unwrap_or(0);
        if gcd(acc, o) != 1 {
            return false;
        }
        acc *= o;
    }
    true
}

/// Computes every per-group quantity used by the suites.
pub fn analyze_member(member: &PoolMember, limits: Limits) -> Result<MemberRecord> {
    let g = &member.table;
    let order = g.order();
    let cc = conjugacy_classes(g);
    let report = periodicity_report(g);
    let elementary_p2 = prime_divisors(order as u64)
        .into_iter()
        .filter(|&p| has_elementary_abelian_p2(g, p))
        .collect();
    let chars = character_summary(g)?;
    let m_h = chars.quaternionic_count().expect("indicators present");

    let mut quotients = Vec::new();
    for n in normal_subgroups(g) {
        let (q, _) = quotient(g, &n)?;
        let tag = recognize_structure(&q, limits.iso_budget)?;
        let q_m_h = if tag.is_binary_polyhedral() {
            Some(m_quaternionic(&q)?)
        } else {
            None
        };
        let (nt, _) = n.to_table(g);
        let sylow_orders = prime_divisors(order as u64)
            .into_iter()
            .map(|p| (p, sylow_size(g, p), sylow_size(&nt, p), sylow_size(&q, p)))
            .collect();
        quotients.push(QuotientRecord {
            kernel_size: n.size(),
            order: q.order(),
            tag,
            m_h: q_m_h,
            sylow_orders,
        });
    }

    let from_expression = match &member.origin {
        Origin::Expression(e) => Some(e.clone()),
        Origin::Quotient { .. } => None,
    };
    let product = match &from_expression {
        Some(_) => product_record(g, report.period, m_h, limits)?,
        None => None,
    };
    let family = classify_family(g, limits)?.tag;
    let family_check = from_expression
        .as_ref()
        .filter(|e| is_family_expression(e))
        .map(|e| verify_family_axioms(g, e));
    let four = report.period.is_some_and(|p| 4 % p == 0);
    let q24_times_cyclic = if four && m_h >= 3 && order % 24 == 0 {
        let k = order / 24;
        let target = direct_product(&catalog::quaternion(6), &GroupTable::cyclic(k), limits.max_order)?;
        are_isomorphic(g, &target, limits.iso_budget)?
    } else {
        false
    };

    Ok(MemberRecord {
        name: member.name.clone(),
        order,
        from_expression,
        axioms_ok: g.check_associative_exhaustive(512, 20_000),
        periodic: report.periodic,
        period: report.period,
        elementary_p2,
        m_h,
        degree_square_sum: chars.degrees().iter().map(|d| d * d).sum(),
        orthogonality: chars.orthogonality_holds(&cc),
        indicator_sum: chars.indicator_sum(),
        involutions_plus_one: g.square_roots_of_identity(),
        quotients,
        product,
        family,
        family_check,
        q24_times_cyclic,
    })
}

/// `G × C_k` for the smallest prime `k ∤ |G|`, when `|G|·k ≤ 240`.
fn product_record(
    g: &GroupTable,
    period: Option<u64>,
    m_h: usize,
    limits: Limits,
) -> Result<Option<ProductRecord>> {
    let order = g.order() as u64;
    let Some(k) = [2u64, 3, 5, 7, 11, 13].into_iter().find(|&k| order % k != 0) else {
        return Ok(None);
    };
    if order * k > 240 {
        return Ok(None);
    }
    let prod = direct_product(g, &GroupTable::cyclic(k as usize), limits.max_order)?;
    Ok(Some(ProductRecord {
        k,
        period,
        product_period: periodicity_report(&prod).period,
        m_h,
        product_m_h: m_quaternionic(&prod)?,
    }))
}

/// A deliberate corruption used to show that the suites detect errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Fault {
    #[default]
    None,
    /// Lowers the recorded `m_H` of the first pool group with `m_H ≥ 3`
    /// to 2.
    FlipQuaternionicCount,
}

/// Applies `fault` to the analysed records in place.
pub fn inject_fault(records: &mut [MemberRecord], fault: Fault) {
    if fault == Fault::FlipQuaternionicCount {
        if let Some(r) = records.iter_mut().find(|r| r.m_h >= 3) {
            r.m_h = 2;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub key: &'static str,
    pub title: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Suite {
    key: &'static str,
    title: &'static str,
    checked: usize,
    failures: Vec<String>,
}

impl Suite {
    fn new(key: &'static str, title: &'static str) -> Self {
        Suite {
            key,
            title,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn done(self) -> SuiteResult {
        SuiteResult {
            key: self.key,
            title: self.title,
            checked: self.checked,
            failures: self.failures,
        }
    }
}

/// Runs every property suite over the analysed pool.
pub fn run_suites(records: &[MemberRecord]) -> Vec<SuiteResult> {
    let mut out = Vec::new();

    let mut s = Suite::new("group_axioms", "tables are associative with identity and inverses");
    for r in records {
        s.check(r.axioms_ok, || r.name.clone());
    }
    out.push(s.done());

    let mut s = Suite::new("quotient_sylow", "|Syl_p(G)| = |Syl_p(N)| * |Syl_p(G/N)|");
    for r in records {
        for q in &r.quotients {
            for &(p, sg, sn, sq) in &q.sylow_orders {
                s.check(sg == sn * sq && sg as u64 == p_part(r.order as u64, p), || {
                    format!("{} N{} p={p}: {sg} vs {sn}*{sq}", r.name, q.kernel_size)
                });
            }
        }
    }
    out.push(s.done());

    let mut s = Suite::new("periodic_sylow", "Sylow criterion agrees with C_p x C_p search");
    for r in records {
        s.check(r.periodic == r.elementary_p2.is_empty(), || {
            format!("{}: periodic {} but C_p^2 at {:?}", r.name, r.periodic, r.elementary_p2)
        });
    }
    out.push(s.done());

    let mut s = Suite::new("coprime_product", "period and m_H under G x C_k with (k,|G|) = 1");
    for r in records {
        if let Some(p) = &r.product {
            let want = p.period.map(|x| lcm(x, 2));
            s.check(p.product_period == want && p.product_m_h == p.m_h, || {
                format!("{} x C{}: {:?}/{} vs {:?}/{}", r.name, p.k, p.product_period, p.product_m_h, want, p.m_h)
            });
        }
    }
    out.push(s.done());

    let mut s = Suite::new("characters", "degree squares, orthogonality and indicator sum");
    for r in records {
        s.check(r.degree_square_sum == r.order as u64, || {
            format!("{}: sum of squared degrees {}", r.name, r.degree_square_sum)
        });
        s.check(r.orthogonality, || format!("{}: orthogonality", r.name));
        s.check(r.indicator_sum == Some(r.involutions_plus_one as i64), || {
            format!("{}: indicator sum {:?} vs {}", r.name, r.indicator_sum, r.involutions_plus_one)
        });
    }
    out.push(s.done());

    let mut s = Suite::new(
        "quaternion_quotient_criterion",
        "periodic: m_H <= 2 iff no Q_4n quotient with n >= 6; non-Eichler: iff a BPG quotient of equal m_H <= 2",
    );
    for r in records.iter().filter(|r| r.periodic) {
        let big_q = r.quaternion_ns().any(|n| n >= 6);
        s.check((r.m_h <= 2) == !big_q, || {
            format!("{}: m_H {} with large Q_4n quotient {big_q}", r.name, r.m_h)
        });
        if r.m_h > 0 {
            let equal = r.bpg_quotients().any(|q| q.m_h == Some(r.m_h) && r.m_h <= 2);
            s.check((r.m_h <= 2) == equal, || {
                format!("{}: m_H {} with equal-m_H BPG quotient {equal}", r.name, r.m_h)
            });
        }
    }
    out.push(s.done());

    let mut s = Suite::new(
        "non_eichler_quotients",
        "periodic non-Eichler: a Q_4n quotient with n >= 6 or a BPG quotient of equal m_H",
    );
    for r in records.iter().filter(|r| r.periodic && r.m_h > 0) {
        let ok = r.quaternion_ns().any(|n| n >= 6)
            || r.bpg_quotients().any(|q| q.m_h == Some(r.m_h));
        s.check(ok, || format!("{}: m_H {}", r.name, r.m_h));
    }
    out.push(s.done());

    let mut s = Suite::new(
        "exceptional_quotients",
        "periodic with a binary tetrahedral, octahedral or icosahedral quotient: equal m_H and no Q_4n quotient with n >= 6",
    );
    for r in records.iter().filter(|r| r.periodic) {
        for q in r.quotients.iter().filter(|q| {
            matches!(
                q.tag,
                StructureTag::BinaryTetrahedral
                    | StructureTag::BinaryOctahedral
                    | StructureTag::BinaryIcosahedral
            )
        }) {
            let ok = q.m_h == Some(r.m_h) && !r.quaternion_ns().any(|n| n >= 6);
            s.check(ok, || format!("{}: m_H {} vs quotient {:?}", r.name, r.m_h, q.m_h));
        }
    }
    out.push(s.done());

    let mut s = Suite::new(
        "large_m_h",
        "4-periodic with m_H >= 3: a Q_4n quotient with n >= 7 or Q_24 x C_k",
    );
    for r in records.iter().filter(|r| r.is_4_periodic() && r.m_h >= 3) {
        let ok = r.quaternion_ns().any(|n| n >= 7) || r.q24_times_cyclic;
        s.check(ok, || format!("{}: m_H {}", r.name, r.m_h));
    }
    out.push(s.done());

    let mut s = Suite::new("family_members", "family members: period divides 4 and m_H as expected");
    for r in records {
        if let Some(c) = &r.family_check {
            let failed: Vec<&str> =
                c.entries.iter().filter(|e| !e.passed).map(|e| e.name).collect();
            s.check(c.passed(), || format!("{}: {}", r.name, failed.join(", ")));
        }
    }
    out.push(s.done());

    let mut s = Suite::new("family_completeness", "4-periodic with m_H <= 2 always matches a family");
    for r in records {
        let ok = match r.family {
            FamilyTag::Unclassified => false,
            FamilyTag::Not4Periodic => !r.is_4_periodic(),
            FamilyTag::None => r.is_4_periodic() && r.m_h >= 3,
            _ => r.is_4_periodic() && r.m_h <= 2,
        };
        s.check(ok, || format!("{}: {}", r.name, r.family));
    }
    out.push(s.done());

    out
}

/// Convenience: analyse serially and run the suites.
pub fn selftest(max_order: usize, limits: Limits, fault: Fault) -> Result<Vec<SuiteResult>> {
    let pool = standard_pool(max_order, limits)?;
    let mut records = pool
        .iter()
        .map(|m| analyze_member(m, limits))
        .collect::<Result<Vec<_>>>()?;
    inject_fault(&mut records, fault);
    Ok(run_suites(&records))
}

/// Short label for a record's origin, for reports.
pub fn origin_label(m: &PoolMember) -> String {
    match &m.origin {
        Origin::Expression(_) => "expression".to_string(),
        Origin::Quotient { parent, .. } => format!("quotient of {parent}"),
    }
}

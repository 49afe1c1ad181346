//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built without the libtest harness so the lines always print.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use d2groups::input::load_presentation;
use d2groups_core::catalog::{self, build, Atom, BINARY_OCTAHEDRAL_PRESENTATION};
use d2groups_core::chartab::{character_summary, m_quaternionic};
use d2groups_core::classify::{d2_report, CitationKey, FamilyTag};
use d2groups_core::group::{are_isomorphic, conjugacy_classes, quotient, sylow_subgroup, SubgroupSet};
use d2groups_core::periodicity::has_periodic_cohomology;
use d2groups_core::pool::{
    analyze_member, is_family_expression, standard_pool, MemberRecord, PoolMember,
    DEFAULT_POOL_MAX_ORDER,
};
use d2groups_core::presentation::{parse_presentation, realize_group};
use d2groups_core::{GroupTable, Limits};
use rayon::prelude::*;

type Outcome = Result<String, String>;

fn lim() -> Limits {
    Limits::default()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> (Outcome, Duration) {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    let out = out.and_then(|s| {
        ensure(elapsed <= limit, || format!("took {elapsed:.2?}, limit {limit:?}")).map(|_| s)
    });
    (out, elapsed)
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn dicyclic_counts() -> Outcome {
    for n in 2..=12usize {
        let m = m_quaternionic(&catalog::quaternion(n)).map_err(|e| e.to_string())?;
        ensure(m == n / 2, || format!("Q_{}: m_H = {m}, want {}", 4 * n, n / 2))?;
    }
    Ok("n = 2..12".into())
}

fn named_counts() -> Outcome {
    let cases: [(&str, &GroupTable, usize); 4] = [
        ("binary tetrahedral", catalog::binary_tetrahedral(), 1),
        ("binary octahedral", catalog::binary_octahedral(), 2),
        ("binary icosahedral", catalog::binary_icosahedral(), 2),
        ("Q_28", &catalog::quaternion(7), 3),
    ];
    for (name, g, want) in cases {
        let m = m_quaternionic(g).map_err(|e| e.to_string())?;
        ensure(m == want, || format!("{name}: m_H = {m}, want {want}"))?;
    }
    Ok("1, 2, 2, 3".into())
}

fn check_presentation(file: &str, expect: &str, order: usize, limit: Duration) -> Result<(), String> {
    let start = Instant::now();
    let p = load_presentation(&data(file)).map_err(|e| e.to_string())?;
    let (g, _) = realize_group(&p, lim().max_cosets, lim().max_order).map_err(|e| e.to_string())?;
    let want = build(expect).map_err(|e| e.to_string())?;
    ensure(g.order() == order, || format!("{file}: order {}", g.order()))?;
    let iso = are_isomorphic(&g, &want, lim().iso_budget).map_err(|e| e.to_string())?;
    ensure(iso, || format!("{file}: not isomorphic to {expect}"))?;
    let d = p.deficiency();
    ensure(d.balanced && d.euler_characteristic == 1, || format!("{file}: deficiency {}", d.deficiency))?;
    let elapsed = start.elapsed();
    ensure(elapsed <= limit, || format!("{file}: took {elapsed:.2?}"))
}

fn q28_presentations() -> Outcome {
    for file in ["q28_p1.pres", "q28_p2.pres"] {
        check_presentation(file, "Q:7", 28, secs(1))?;
    }
    Ok("both order 28, balanced, Euler characteristic 1".into())
}

fn family_presentations() -> Outcome {
    for (file, expect, order) in [
        ("q16_3_1.pres", "Qt:4,1,3,1", 48),
        ("q16_5_1.pres", "Qt:4,1,5,1", 80),
        ("q8_3_1_c5.pres", "Qt:3,1,3,1 * C:5", 120),
    ] {
        check_presentation(file, expect, order, secs(5))?;
    }
    Ok("orders 48, 80, 120".into())
}

fn analyze_pool(pool: &[PoolMember]) -> Result<Vec<MemberRecord>, String> {
    pool.par_iter()
        .map(|m| analyze_member(m, lim()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())
}

fn quotient_equivalence(records: &[MemberRecord]) -> Outcome {
    ensure(records.len() >= 50, || format!("pool has only {} groups", records.len()))?;
    ensure(records.iter().all(|r| r.order <= 500), || "pool member above order 500".into())?;
    let (mut periodic, mut non_eichler) = (0, 0);
    for r in records.iter().filter(|r| r.periodic) {
        periodic += 1;
        let large_q = r.quaternion_ns().any(|n| n >= 6);
        ensure((r.m_h <= 2) == !large_q, || format!("{}: m_H {} vs large Q_4n quotient {large_q}", r.name, r.m_h))?;
        if r.m_h > 0 {
            non_eichler += 1;
            let equal_bpg = r.bpg_quotients().any(|q| q.m_h == Some(r.m_h));
            ensure(large_q || equal_bpg, || format!("{}: neither disjunct holds", r.name))?;
        }
    }
    Ok(format!("{} groups, {periodic} periodic, {non_eichler} non-Eichler", records.len()))
}

/// `C_p × C_p` by direct search over commuting pairs of order-`p` elements.
fn has_cp2(g: &GroupTable, p: usize) -> bool {
    let order_p: Vec<u32> = g
        .elements()
        .filter(|&x| x != 0 && g.pow(x, p as i64) == 0)
        .collect();
    order_p.iter().any(|&x| {
        let span: Vec<u32> = (0..p as i64).map(|i| g.pow(x, i)).collect();
        order_p.iter().any(|&y| !span.contains(&y) && g.commutes(x, y))
    })
}

fn primes(n: usize) -> Vec<usize> {
    (2..=n).filter(|&p| n % p == 0 && (2..p).all(|d| p % d != 0)).collect()
}

fn sylow_criterion(pool: &[PoolMember]) -> Outcome {
    let mismatches: Vec<&str> = pool
        .par_iter()
        .filter(|m| {
            let brute = primes(m.table.order()).into_iter().any(|p| has_cp2(&m.table, p));
            has_periodic_cohomology(&m.table) == brute
        })
        .map(|m| m.name.as_str())
        .collect();
    ensure(mismatches.is_empty(), || format!("disagree on {mismatches:?}"))?;
    let non = pool.iter().filter(|m| !has_periodic_cohomology(&m.table)).count();
    Ok(format!("{} groups, {non} non-periodic", pool.len()))
}

/// The m_H value stated for each family atom.
fn stated_m_h(atom: Atom) -> Option<usize> {
    match atom {
        Atom::Cyclic(_) | Atom::Dihedral(_) => Some(0),
        Atom::Quaternion(n) => Some(n / 2),
        Atom::BinaryTetrahedral => Some(1),
        Atom::BinaryOctahedral | Atom::BinaryIcosahedral => Some(2),
        Atom::Dd { m, .. } => Some((m - 1) / 2),
        Atom::Pp { .. } => Some(1),
        Atom::Ppp { .. } => Some(2),
        Atom::Qt { .. } => Some(2),
    }
}

fn family_members(records: &[MemberRecord]) -> Outcome {
    let mut members = 0;
    for r in records {
        let Some(e) = r.from_expression.as_ref().filter(|e| is_family_expression(e)) else {
            continue;
        };
        members += 1;
        let atom = e
            .factors
            .iter()
            .copied()
            .find(|a| !matches!(a, Atom::Cyclic(_)))
            .unwrap_or(e.factors[0]);
        ensure(r.is_4_periodic(), || format!("{}: period {:?}", r.name, r.period))?;
        let want = stated_m_h(atom);
        ensure(want == Some(r.m_h), || format!("{}: m_H {} want {want:?}", r.name, r.m_h))?;
        ensure(r.family_check.as_ref().is_some_and(|c| c.passed()), || {
            format!("{}: family checks failed", r.name)
        })?;
    }
    let unclassified: Vec<&str> = records
        .iter()
        .filter(|r| r.family == FamilyTag::Unclassified)
        .map(|r| r.name.as_str())
        .collect();
    ensure(unclassified.is_empty(), || format!("unclassified: {unclassified:?}"))?;
    Ok(format!("{members} family members, no unclassified verdicts"))
}

fn indicator_rule(pool: &[PoolMember]) -> Outcome {
    let bad: Vec<String> = pool
        .par_iter()
        .filter_map(|m| {
            let g = &m.table;
            let t = match character_summary(g) {
                Ok(t) => t,
                Err(e) => return Some(format!("{}: {e}", m.name)),
            };
            let roots = g.elements().filter(|&x| g.mul(x, x) == 0).count() as i64;
            let cc = conjugacy_classes(g);
            let ok = t.indicator_sum() == Some(roots)
                && t.orthogonality_holds(&cc)
                && t.degrees().iter().map(|d| d * d).sum::<u64>() == g.order() as u64;
            (!ok).then(|| m.name.clone())
        })
        .collect();
    ensure(bad.is_empty(), || format!("failed on {bad:?}"))?;
    Ok(format!("{} groups", pool.len()))
}

fn p_double_prime_144() -> Outcome {
    let g = catalog::ppp(3, lim().max_order).map_err(|e| e.to_string())?;
    ensure(g.order() == 144, || format!("order {}", g.order()))?;
    let s = sylow_subgroup(&g, 3);
    ensure(s.size() == 9 && s.to_table(&g).0.is_cyclic(), || "Sylow 3-subgroup is not C_9".into())?;
    ensure(g.elements().any(|x| g.element_order(x) == 9), || "no element of order 9".into())?;
    let fiber = SubgroupSet::from_elements(&g, &[0, 1, 2]).map_err(|e| e.to_string())?;
    let (q, _) = quotient(&g, &fiber).map_err(|e| e.to_string())?;
    let pres = parse_presentation(BINARY_OCTAHEDRAL_PRESENTATION).map_err(|e| e.to_string())?;
    let (bo, _) = realize_group(&pres, lim().max_cosets, lim().max_order).map_err(|e| e.to_string())?;
    let iso = are_isomorphic(&q, &bo, lim().iso_budget).map_err(|e| e.to_string())?;
    ensure(bo.order() == 48 && iso, || "quotient is not binary octahedral".into())?;
    let m = m_quaternionic(&g).map_err(|e| e.to_string())?;
    ensure(m == 2, || format!("m_H = {m}"))?;
    Ok("order 144, Sylow-3 C_9, quotient binary octahedral, m_H 2".into())
}

fn cited_fields() -> Outcome {
    let q16 = d2_report(&build("Qt:4,1,3,1").map_err(|e| e.to_string())?, lim()).map_err(|e| e.to_string())?;
    ensure(
        q16.notes.iter().any(|n| n.citation == CitationKey::FreePeriodEight),
        || "Q(16;3,1) lacks the free period 8 note".into(),
    )?;
    ensure(q16.citations().contains(&CitationKey::FreePeriodEight), || "citation missing".into())?;
    let q28 = d2_report(&catalog::quaternion(7), lim()).map_err(|e| e.to_string())?;
    ensure(q28.prong_count.value.value == Some(2), || "Q_28 prong count is not 2".into())?;
    ensure(
        q28.prong_count.citation == Some(CitationKey::Q28TwoStablyFree),
        || format!("Q_28 prong count keyed {:?}", q28.prong_count.citation),
    )?;
    Ok("free period 8 note and prong count 2 present".into())
}

fn sylow_identity(records: &[MemberRecord]) -> Outcome {
    let mut pairs = 0;
    for r in records {
        for q in &r.quotients {
            pairs += 1;
            for &(p, g, n, h) in &q.sylow_orders {
                ensure(g == n * h, || {
                    format!("{} / N (|N| = {}), p = {p}: {g} != {n}·{h}", r.name, q.kernel_size)
                })?;
            }
        }
    }
    Ok(format!("{pairs} (G, N) pairs"))
}

fn main() -> ExitCode {
    let mut failed = 0;
    let mut report = |id: u32, title: &str, (out, elapsed): (Outcome, Duration)| {
        let (status, detail) = match out {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{status} [{id:>2}] {title}: {detail} ({:.2} s)", elapsed.as_secs_f64());
    };

    report(1, "m_H of dicyclic groups", timed(secs(10), dicyclic_counts));
    report(2, "m_H of binary polyhedral groups and Q_28", timed(secs(10), named_counts));
    report(3, "Q_28 balanced presentations", timed(secs(2), q28_presentations));
    report(4, "Q(2^n a;b,1) x C_k presentations", timed(secs(15), family_presentations));

    let start = Instant::now();
    let pool = standard_pool(DEFAULT_POOL_MAX_ORDER, lim()).map_err(|e| e.to_string());
    let records = pool.as_ref().map_err(Clone::clone).and_then(|p| analyze_pool(p));
    let sweep = start.elapsed();
    match (&pool, &records) {
        (Ok(pool), Ok(records)) => {
            report(5, "m_H <= 2 iff no Q_4n quotient with n >= 6", {
                let (out, t) = timed(secs(600), || quotient_equivalence(records));
                let out = out.and_then(|s| {
                    ensure(sweep + t <= secs(600), || format!("sweep took {sweep:.2?}")).map(|_| s)
                });
                (out, sweep + t)
            });
            report(6, "Sylow criterion vs direct C_p x C_p search", timed(secs(120), || sylow_criterion(pool)));
            report(7, "family members: period and m_H", timed(secs(60), || family_members(records)));
            report(8, "indicator sum rule and orthogonality", timed(secs(300), || indicator_rule(pool)));
            report(9, "P''_144 construction", timed(secs(300), p_double_prime_144));
            report(10, "cited report fields", timed(secs(60), cited_fields));
            report(11, "Sylow order identity over quotients", timed(secs(60), || sylow_identity(records)));
        }
        (Err(e), _) | (_, Err(e)) => {
            for (id, title) in [
                (5, "m_H <= 2 iff no Q_4n quotient with n >= 6"),
                (6, "Sylow criterion vs direct C_p x C_p search"),
                (7, "family members: period and m_H"),
                (8, "indicator sum rule and orthogonality"),
                (11, "Sylow order identity over quotients"),
            ] {
                report(id, title, (Err(format!("pool failed: {e}")), sweep));
            }
            report(9, "P''_144 construction", timed(secs(300), p_double_prime_144));
            report(10, "cited report fields", timed(secs(60), cited_fields));
        }
    }

    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}

mod common;

use d2groups_core::catalog::{self, build};
use d2groups_core::chartab::{
    character_summary, class_constants, dixon_table, fs_indicators, m_quaternionic,
    suitable_prime,
};
use d2groups_core::group::{conjugacy_classes, direct_product};
use d2groups_core::GroupTable;
use proptest::prelude::*;

const ATOMS: &[&str] = &[
    "C:1", "C:2", "C:3", "C:4", "D:3", "D:4", "D:5", "Q:2", "Q:3", "Q:4", "Q:5", "Q:7", "BT",
    "C:2 * C:2", "Dd:3,3", "Qt:3,1,3,1", "Q:2 * C:3",
];

fn check_invariants(g: &GroupTable) {
    let cc = conjugacy_classes(g);
    let t = character_summary(g).unwrap();
    assert_eq!(t.rows.len(), cc.count());
    let squares: u64 = t.degrees().iter().map(|d| d * d).sum();
    assert_eq!(squares, g.order() as u64);
    assert!(t.degrees().iter().all(|d| g.order() as u64 % d == 0));
    assert!(t.orthogonality_holds(&cc));
    assert_eq!(t.indicator_sum(), Some(common::involutions_plus_identity(g) as i64));
    assert_eq!(t.rows[0].degree, 1);
    assert!(t.rows[0].values.iter().all(|&v| v == 1));
    assert_eq!(t.rows[0].fs_indicator, Some(1));
}

#[test]
fn class_constants_match_direct_count() {
    for name in ["D:3", "Q:2", "BT", "Dd:3,3", "C:5"] {
        let g = build(name).unwrap();
        let cc = conjugacy_classes(&g);
        let a = class_constants(&g, &cc);
        let k = cc.count();
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let z = cc.reps[l];
                    let mut n = 0;
                    for x in cc.members(i) {
                        for y in cc.members(j) {
                            if g.mul(x, y) == z {
                                n += 1;
                            }
                        }
                    }
                    assert_eq!(a.get(i, j, l), n, "{name} ({i},{j},{l})");
                }
            }
        }
        for j in 0..k {
            for l in 0..k {
                let expect = if j == l { 1 } else { 0 };
                assert_eq!(a.get(0, j, l), expect);
            }
        }
    }
}

#[test]
fn s3_transposition_class_squared() {
    let g = catalog::dihedral(3);
    let cc = conjugacy_classes(&g);
    let a = class_constants(&g, &cc);
    let t = (0..cc.count()).find(|&i| cc.sizes[i] == 3).unwrap();
    let r = (0..cc.count()).find(|&i| cc.sizes[i] == 2).unwrap();
    assert_eq!(a.get(t, t, 0), 3);
    // Nine products land in {e} ∪ 3-cycles: 3 on e, 6 spread over 2 elements.
    assert_eq!(a.get(t, t, r), 3);
}

#[test]
fn cyclic_three_table() {
    let g = GroupTable::cyclic(3);
    let t = dixon_table(&g).unwrap();
    assert_eq!(t.p, 7);
    assert_eq!(t.degrees(), [1, 1, 1]);
    let mut rows: Vec<Vec<u64>> = t.rows.iter().map(|r| r.values.clone()).collect();
    rows.sort();
    assert_eq!(rows, [vec![1, 1, 1], vec![1, 2, 4], vec![1, 4, 2]]);
}

#[test]
fn small_degree_patterns() {
    let q8 = dixon_table(&catalog::quaternion(2)).unwrap();
    assert_eq!(q8.degrees(), [1, 1, 1, 1, 2]);
    let s3 = dixon_table(&catalog::dihedral(3)).unwrap();
    assert_eq!(s3.degrees(), [1, 1, 2]);
    let cc = conjugacy_classes(&catalog::dihedral(3));
    let s3 = fs_indicators(&cc, s3).unwrap();
    assert_eq!(s3.rows[2].fs_indicator, Some(1));
    let q8 = character_summary(&catalog::quaternion(2)).unwrap();
    assert_eq!(q8.rows[4].fs_indicator, Some(-1));
}

#[test]
fn suitable_primes() {
    let p = suitable_prime(120, 60).unwrap();
    assert!(p > 120 && p % 60 == 1);
    assert_eq!(suitable_prime(3, 3).unwrap(), 7);
}

#[test]
fn dicyclic_counts() {
    for n in 2..=12usize {
        assert_eq!(m_quaternionic(&common::dicyclic(n)).unwrap(), n / 2, "Q_{}", 4 * n);
    }
}

#[test]
fn binary_polyhedral_counts() {
    assert_eq!(m_quaternionic(catalog::binary_tetrahedral()).unwrap(), 1);
    assert_eq!(m_quaternionic(catalog::binary_octahedral()).unwrap(), 2);
    assert_eq!(m_quaternionic(catalog::binary_icosahedral()).unwrap(), 2);
    assert_eq!(m_quaternionic(&catalog::quaternion(7)).unwrap(), 3);
}

#[test]
fn family_three_counts() {
    for n in 3..=5u32 {
        for m in [3usize, 5] {
            let g = catalog::dd(n, m, 5000).unwrap();
            assert_eq!(m_quaternionic(&g).unwrap(), (m - 1) / 2, "D({},{m})", 1 << n);
        }
    }
}

#[test]
fn abelian_groups_have_no_quaternionic_characters() {
    for name in ["C:1", "C:7", "C:12", "C:2 * C:2", "C:4 * C:6", "C:3 * C:3 * C:3"] {
        let g = build(name).unwrap();
        assert_eq!(m_quaternionic(&g).unwrap(), 0, "{name}");
        assert!(character_summary(&g).unwrap().degrees().iter().all(|&d| d == 1));
    }
}

#[test]
fn coprime_cyclic_factor_preserves_count() {
    for (name, k) in [("Q:2", 3), ("Q:3", 5), ("BT", 5), ("Q:7", 3), ("Dd:3,3", 5), ("Q:4", 3)] {
        let g = build(name).unwrap();
        let gk = direct_product(&g, &GroupTable::cyclic(k), 5000).unwrap();
        assert_eq!(m_quaternionic(&gk).unwrap(), m_quaternionic(&g).unwrap(), "{name} x C_{k}");
    }
}

#[test]
fn invariants_on_fixed_groups() {
    for name in ATOMS {
        check_invariants(&build(name).unwrap());
    }
    check_invariants(catalog::binary_icosahedral());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn invariants_on_random_products(i in 0..ATOMS.len(), j in 0..ATOMS.len()) {
        let a = build(ATOMS[i]).unwrap();
        let b = build(ATOMS[j]).unwrap();
        prop_assume!(a.order() * b.order() <= 200);
        let g = direct_product(&a, &b, 5000).unwrap();
        check_invariants(&g);
    }

    #[test]
    fn indicator_sum_on_cyclic_and_dihedral(n in 2usize..40) {
        check_invariants(&GroupTable::cyclic(n));
        check_invariants(&common::dihedral(n));
        check_invariants(&common::dicyclic(n));
    }
}

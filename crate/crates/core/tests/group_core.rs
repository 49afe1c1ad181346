mod common;

use common::Set;
use d2groups_core::catalog::{self, build};
use d2groups_core::group::{
    are_isomorphic, center, close_generators, conjugacy_classes, direct_product,
    has_elementary_abelian_p2, is_isomorphic, normal_subgroups, normalizer_centralizer, quotient,
    recognize_structure, semidirect_product, sylow_subgroup, Action, Permutation, StructureTag,
    SubgroupSet,
};
use d2groups_core::presentation::{parse_presentation, realize_group};
use d2groups_core::{Error, GroupTable, DEFAULT_ISO_BUDGET};

const BUDGET: u64 = DEFAULT_ISO_BUDGET;

fn perm(text: &str, degree: usize) -> Permutation {
    Permutation::parse_cycles(text, degree).unwrap()
}

fn set_of(s: &SubgroupSet) -> Set {
    s.elements().into_iter().collect()
}

fn small_groups() -> Vec<(&'static str, GroupTable)> {
    [
        "C:1", "C:2", "C:4", "C:2 * C:2", "C:6", "D:3", "D:4", "Q:2", "C:8", "C:2 * C:4",
        "C:2 * C:2 * C:2", "D:5", "Q:3", "D:6", "C:12", "Q:4", "D:8", "C:2 * Q:2", "C:16",
        "C:4 * C:4", "Dd:3,3", "BT", "Q:6", "D:12", "Q:7", "Q:2 * C:5", "C:30", "Q:10", "D:15",
        "BO", "Q:15", "Dd:3,5", "Qt:4,1,3,1",
    ]
    .into_iter()
    .map(|e| (e, build(e).unwrap()))
    .collect()
}

#[test]
fn constructed_tables_are_groups() {
    for (name, g) in small_groups() {
        assert!(g.check_associative_exhaustive(512, 0), "{name}");
        for x in g.elements() {
            assert_eq!(g.mul(0, x), x);
            assert_eq!(g.mul(x, g.inv(x)), 0, "{name}");
        }
    }
}

#[test]
fn close_generators_examples() {
    let (c4, _) = close_generators(&[perm("(1 2 3 4)", 4)], 5000).unwrap();
    assert_eq!(c4.order(), 4);
    assert!(c4.is_cyclic());
    let (s3, _) = close_generators(&[perm("(1 2 3)", 3), perm("(1 2)", 3)], 5000).unwrap();
    assert_eq!(s3.order(), 6);
    // Q_8 acting on itself by right multiplication, from the independent
    // construction in the oracle module.
    let q8 = common::dicyclic(2);
    let regular = |x: u32| {
        Permutation::new((0..8).map(|g| q8.mul(g, x)).collect()).unwrap()
    };
    let (g, _) = close_generators(&[regular(1), regular(4)], 5000).unwrap();
    assert_eq!(g.order(), 8);
    assert_eq!(common::involutions_plus_identity(&g), 2);
    assert!(matches!(
        close_generators(&[perm("(1 2 3 4 5 6 7)", 7), perm("(1 2)", 7)], 100),
        Err(Error::BoundExceeded { .. })
    ));
    assert!(matches!(Permutation::new(vec![0, 0, 1]), Err(Error::InvalidPermutation(_))));
}

#[test]
fn products_examples() {
    let c2 = GroupTable::cyclic(2);
    let klein = direct_product(&c2, &c2, 5000).unwrap();
    assert_eq!(klein.exponent(), 2);
    let q8c5 = direct_product(&catalog::quaternion(2), &GroupTable::cyclic(5), 5000).unwrap();
    assert_eq!(q8c5.order(), 40);
    assert_eq!(common::center(&q8c5).len(), 10);
    assert_eq!(common::center(&common::dicyclic(10)).len(), 2);
    assert!(!are_isomorphic(&q8c5, &catalog::quaternion(10), BUDGET).unwrap());

    let c3 = GroupTable::cyclic(3);
    let c4 = GroupTable::cyclic(4);
    let trivial = Action::trivial(&c3, &c4);
    let sd = semidirect_product(&c3, &c4, &trivial, 5000).unwrap();
    assert!(common::isomorphic(&sd, &direct_product(&c3, &c4, 5000).unwrap()));

    let inv: Vec<u32> = vec![0, 2, 1];
    let act = Action::from_generators(&c3, &c4, &[1], &[inv.clone()]).unwrap();
    let q12 = semidirect_product(&c3, &c4, &act, 5000).unwrap();
    assert_eq!(q12.order(), 12);
    assert_eq!(common::involutions_plus_identity(&q12), 2);
    assert!(common::isomorphic(&q12, &common::dicyclic(3)));

    let c8 = GroupTable::cyclic(8);
    let act = Action::from_generators(&c3, &c8, &[1], &[inv]).unwrap();
    let d83 = semidirect_product(&c3, &c8, &act, 5000).unwrap();
    assert_eq!(d83.order(), 24);
    assert_eq!(common::center(&d83).len(), 4);

    let bad = Action::from_generators(&c3, &c4, &[1], &[vec![0, 0, 1]]);
    assert!(bad.is_err());
}

#[test]
fn conjugacy_examples() {
    let s3 = catalog::dihedral(3);
    let mut sizes = conjugacy_classes(&s3).size_multiset();
    sizes.sort_unstable();
    assert_eq!(sizes, [1, 2, 3]);
    for (name, g) in small_groups() {
        let mut ours = conjugacy_classes(&g).size_multiset();
        ours.sort_unstable();
        assert_eq!(ours, common::class_sizes(&g), "{name}");
    }
    assert_eq!(conjugacy_classes(&GroupTable::cyclic(9)).count(), 9);
}

#[test]
fn centers_match_brute_force() {
    for (name, g) in small_groups() {
        assert_eq!(set_of(&center(&g)), common::center(&g), "{name}");
    }
    for bpg in [catalog::binary_tetrahedral(), catalog::binary_octahedral(), catalog::binary_icosahedral()] {
        assert_eq!(center(bpg).size(), 2);
    }
    let d16_3 = catalog::dd(4, 3, 5000).unwrap();
    let z = center(&d16_3);
    assert_eq!(z.size(), 8);
    assert!(z.to_table(&d16_3).0.is_cyclic());
}

#[test]
fn sylow_subgroups() {
    for (name, g) in small_groups() {
        for p in common::primes_dividing(g.order()) {
            let s = sylow_subgroup(&g, p as u64);
            let set = set_of(&s);
            assert_eq!(set.len(), common::p_part(g.order(), p), "{name} p={p}");
            assert_eq!(common::closure(&g, &set), set, "{name} p={p}");
        }
    }
    let bo = catalog::binary_octahedral();
    let s = sylow_subgroup(bo, 2);
    assert_eq!(s.size(), 16);
    let (t, _) = s.to_table(bo);
    assert!(common::isomorphic(&t, &common::dicyclic(4)));
    let (t, _) = sylow_subgroup(catalog::binary_tetrahedral(), 2).to_table(catalog::binary_tetrahedral());
    assert!(common::isomorphic(&t, &common::dicyclic(2)));
    let c12 = GroupTable::cyclic(12);
    assert_eq!(set_of(&sylow_subgroup(&c12, 3)), Set::from([0, 4, 8]));
    assert_eq!(sylow_subgroup(&c12, 5).size(), 1);
}

#[test]
fn normalizer_centralizer_examples() {
    let g = catalog::quaternion(5);
    let (n, c) = normalizer_centralizer(&g, &center(&g));
    assert!(n.is_whole() && c.is_whole());
    let s3 = catalog::dihedral(3);
    let (n, c) = normalizer_centralizer(&s3, &sylow_subgroup(&s3, 3));
    assert_eq!((n.size(), c.size()), (6, 3));
    let q12 = catalog::quaternion(3);
    let (n, c) = normalizer_centralizer(&q12, &sylow_subgroup(&q12, 3));
    assert_eq!(n.size() / c.size(), 2);
}

#[test]
fn normal_subgroups_match_exhaustive_scan() {
    for (name, g) in small_groups().into_iter().filter(|(_, g)| g.order() <= 60) {
        let ours: Vec<Set> = normal_subgroups(&g).iter().map(set_of).collect();
        for s in &ours {
            assert!(common::is_normal(&g, s), "{name}");
        }
        let oracle: Vec<Set> = common::all_subgroups(&g)
            .into_iter()
            .filter(|s| common::is_normal(&g, s))
            .collect();
        assert_eq!(ours.len(), oracle.len(), "{name}");
        for s in &oracle {
            assert!(ours.contains(s), "{name}");
        }
        assert!(ours.windows(2).all(|w| w[0].len() <= w[1].len()), "{name} not sorted");
    }
    assert_eq!(normal_subgroups(&catalog::quaternion(2)).len(), 6);
    assert_eq!(normal_subgroups(&GroupTable::cyclic(6)).len(), 4);
    assert_eq!(normal_subgroups(&catalog::dihedral(3)).len(), 3);
}

#[test]
fn quotient_examples() {
    let q28 = catalog::quaternion(7);
    let (q, map) = quotient(&q28, &center(&q28)).unwrap();
    assert!(common::isomorphic(&q, &common::dihedral(7)));
    assert!(map.is_homomorphism(&q28, &q));

    let q60 = catalog::quaternion(15);
    let (q, _) = quotient(&q60, &sylow_subgroup(&q60, 5)).unwrap();
    assert!(common::isomorphic(&q, &common::dicyclic(3)));
    let (q, _) = quotient(&q60, &sylow_subgroup(&q60, 3)).unwrap();
    assert!(are_isomorphic(&q, &common::dicyclic(5), BUDGET).unwrap());

    let g = catalog::quaternion(4);
    let (q, _) = quotient(&g, &SubgroupSet::trivial(&g)).unwrap();
    assert!(common::isomorphic(&q, &g));

    let s3 = catalog::dihedral(3);
    let not_normal = SubgroupSet::generated(&s3, &[3]);
    assert_eq!(quotient(&s3, &not_normal).unwrap_err(), Error::NotNormal);
}

#[test]
fn isomorphism_agrees_with_exhaustive_search() {
    let groups: Vec<_> = small_groups().into_iter().filter(|(_, g)| g.order() <= 16).collect();
    for (na, a) in &groups {
        for (nb, b) in &groups {
            let fast = is_isomorphic(a, b, BUDGET).unwrap();
            assert_eq!(fast.is_some(), common::isomorphic(a, b), "{na} vs {nb}");
            if let Some(map) = fast {
                assert!(map.is_homomorphism(a, b) && map.is_bijective());
            }
        }
    }
    let g = build("Dd:3,3").unwrap();
    let witness = is_isomorphic(&g, &g, BUDGET).unwrap().unwrap();
    assert!(witness.is_bijective());
}

#[test]
fn qt_parameter_symmetry() {
    let a = catalog::qt(3, 1, 3, 5, 5000).unwrap();
    let b = catalog::qt(3, 3, 5, 1, 5000).unwrap();
    let c = catalog::qt(3, 5, 1, 3, 5000).unwrap();
    assert_eq!(a.order(), 120);
    assert!(are_isomorphic(&a, &b, BUDGET).unwrap());
    assert!(are_isomorphic(&b, &c, BUDGET).unwrap());
}

#[test]
fn recognition() {
    assert_eq!(recognize_structure(&catalog::quaternion(4), BUDGET).unwrap(), StructureTag::GeneralizedQuaternion);
    assert_eq!(recognize_structure(&GroupTable::cyclic(7), BUDGET).unwrap(), StructureTag::Cyclic);
    // SL(2,3) generated by two matrices acting on the 8 nonzero vectors of F_3^2.
    let vectors: Vec<(u32, u32)> = (0..3).flat_map(|a| (0..3).map(move |b| (a, b))).filter(|&v| v != (0, 0)).collect();
    let act = |m: [u32; 4]| {
        let images = vectors
            .iter()
            .map(|&(a, b)| {
                let w = ((m[0] * a + m[1] * b) % 3, (m[2] * a + m[3] * b) % 3);
                vectors.iter().position(|&v| v == w).unwrap() as u32
            })
            .collect();
        Permutation::new(images).unwrap()
    };
    let (sl23, _) = close_generators(&[act([1, 1, 0, 1]), act([0, 2, 1, 0])], 5000).unwrap();
    assert_eq!(sl23.order(), 24);
    assert_eq!(recognize_structure(&sl23, BUDGET).unwrap(), StructureTag::BinaryTetrahedral);
    assert_eq!(recognize_structure(&catalog::dihedral(6), BUDGET).unwrap(), StructureTag::Dihedral);
    assert_eq!(recognize_structure(&build("Q:2 * C:3").unwrap(), BUDGET).unwrap(), StructureTag::Other);
}

#[test]
fn quaternion_two_groups_agree_across_constructions() {
    for k in 1..=5u32 {
        let n = 1usize << k;
        let text = format!("<x,y | x^{n} = y^2, y*x*y^-1 = x^-1>");
        let (presented, _) = realize_group(&parse_presentation(&text).unwrap(), 100_000, 5000).unwrap();
        let formula = catalog::quaternion(n);
        assert_eq!(recognize_structure(&presented, BUDGET).unwrap(), StructureTag::GeneralizedQuaternion);
        assert_eq!(recognize_structure(&formula, BUDGET).unwrap(), StructureTag::GeneralizedQuaternion);
        assert!(are_isomorphic(&presented, &formula, BUDGET).unwrap());
    }
}

#[test]
fn proper_quotients_of_dihedral_and_quaternion_2_groups() {
    for k in 3..=6u32 {
        let order = 1usize << k;
        for g in [catalog::dihedral(order / 2), catalog::quaternion(order / 4)] {
            for n in normal_subgroups(&g) {
                if n.is_trivial() || n.is_whole() {
                    continue;
                }
                let (q, _) = quotient(&g, &n).unwrap();
                let ok = q.order() == 2
                    || (q.order() == 4 && common::isomorphic(&q, &build("C:2 * C:2").unwrap()))
                    || (q.order() >= 8
                        && q.order() < order
                        && are_isomorphic(&q, &catalog::dihedral(q.order() / 2), BUDGET).unwrap());
                assert!(ok, "order {order} quotient of order {}", q.order());
            }
        }
    }
}

#[test]
fn elementary_abelian_detection() {
    let klein = build("C:2 * C:2").unwrap();
    assert!(has_elementary_abelian_p2(&klein, 2));
    assert!(!has_elementary_abelian_p2(&catalog::quaternion(2), 2));
    assert!(has_elementary_abelian_p2(&catalog::dihedral(4), 2));
    for (name, g) in small_groups() {
        for p in common::primes_dividing(g.order()) {
            assert_eq!(has_elementary_abelian_p2(&g, p as u64), common::has_cp2(&g, p), "{name} {p}");
        }
    }
}

//! Constructions of the groups that occur in the 4-periodic classification.
//!
//! Conventions for the basic families:
//!
//! * `dihedral(n)` has order `2n`: elements `r^a s^b` at index `b·n + a`.
//! * `quaternion(n)` is `Q_4n = ⟨x, y | x^n = y², y x y⁻¹ = x⁻¹⟩`: elements
//!   `x^a y^b` at index `b·2n + a`.
//! * `binary_tetrahedral()` is `Q_8 ⋊ C_3`; `binary_octahedral()` and
//!   `binary_icosahedral()` are realized from their `(2,3,4)` and `(2,3,5)`
//!   presentations. All three are built once and cached.

mod cocycle;
mod expr;
mod verify;

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use once_cell::race::OnceBox;

pub use cocycle::{build_extension, two_cocycle_classes, CocycleClass};
pub use expr::{Atom, GroupExpr};
pub use verify::{verify_family_axioms, FamilyCheck, FamilyCheckEntry};

use crate::arith::{gcd, p_part};
use crate::group::{
    derived_subgroup, direct_product, semidirect_product, sylow_subgroup, Action, Elem, GroupMap,
    GroupTable,
};
use crate::presentation::{parse_presentation, realize_group};
use crate::{Error, Result, DEFAULT_MAX_COSETS, DEFAULT_MAX_ORDER};

pub const BINARY_TETRAHEDRAL_PRESENTATION: &str = "<s,t | s^3 = t^3, t^3 = (s*t)^2>";
pub const BINARY_OCTAHEDRAL_PRESENTATION: &str = "<s,t | s^3 = t^4, t^4 = (s*t)^2>";
pub const BINARY_ICOSAHEDRAL_PRESENTATION: &str = "<s,t | s^3 = t^5, t^5 = (s*t)^2>";

pub fn cyclic(n: usize) -> GroupTable {
    GroupTable::cyclic(n)
}

/// The dihedral group of order `2n`.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n >= 1, "dihedral group needs n >= 1");
    let labels = (0..2 * n)
        .map(|i| {
            let (a, b) = (i % n, i / n);
            power_label("r", a, if b == 1 { "s" } else { "" })
        })
        .collect();
    GroupTable::from_fn(2 * n, |x, y| {
        let (a, b) = (x % n, x / n);
        let (c, d) = (y % n, y / n);
        let e = if b == 0 { a + c } else { a + n - c };
        ((b + d) % 2) * n + e % n
    })
    .expect("dihedral table is valid")
    .with_labels(labels)
}

/// The dicyclic group `Q_4n` of order `4n`.
pub fn quaternion(n: usize) -> GroupTable {
    assert!(n >= 1, "dicyclic group needs n >= 1");
    let m = 2 * n;
    let labels = (0..2 * m)
        .map(|i| power_label("x", i % m, if i >= m { "y" } else { "" }))
        .collect();
    GroupTable::from_fn(2 * m, |p, q| {
        let (a, b) = (p % m, p / m);
        let (c, d) = (q % m, q / m);
        if b == 0 {
            d * m + (a + c) % m
        } else if d == 0 {
            m + (a + m - c) % m
        } else {
            (a + m - c + n) % m
        }
    })
    .expect("dicyclic table is valid")
    .with_labels(labels)
}

fn power_label(base: &str, e: usize, suffix: &str) -> String {
    let head = match e {
        0 => String::new(),
        1 => String::from(base),
        _ => format!("{base}^{e}"),
    };
    match (head.is_empty(), suffix.is_empty()) {
        (true, true) => String::from("1"),
        (true, false) => String::from(suffix),
        (false, true) => head,
        (false, false) => format!("{head}*{suffix}"),
    }
}

/// `Q_4n` realized from `⟨x, y | x^n = y², y x y⁻¹ = x⁻¹⟩` by coset
/// enumeration.
pub fn dicyclic_presented(n: usize) -> Result<GroupTable> {
    if n < 2 {
        return Err(Error::BadParameters("Q_4n needs n >= 2".into()));
    }
    let p = parse_presentation(&format!("<x,y | x^{n} = y^2, y*x*y^-1 = x^-1>"))?;
    Ok(realize_group(&p, DEFAULT_MAX_COSETS, DEFAULT_MAX_ORDER)?.0)
}

/// Realizes a fixed presentation and checks the resulting order.
fn realize_fixed(text: &str, order: usize) -> GroupTable {
    let p = parse_presentation(text).expect("built-in presentation parses");
    let (g, _) = realize_group(&p, DEFAULT_MAX_COSETS, DEFAULT_MAX_ORDER)
        .expect("built-in presentation enumerates");
    assert_eq!(g.order(), order, "{text} has the wrong order");
    g
}

pub fn binary_tetrahedral() -> &'static GroupTable {
    static CELL: OnceBox<GroupTable> = OnceBox::new();
    CELL.get_or_init(|| {
        let g = q8_by_cyclic_3group(1, DEFAULT_MAX_ORDER).expect("Q_8 ⋊ C_3 builds");
        Box::new(g)
    })
}

/// Binary tetrahedral group from `⟨s,t | s³ = t³ = (st)²⟩`.
pub fn binary_tetrahedral_presented() -> GroupTable {
    realize_fixed(BINARY_TETRAHEDRAL_PRESENTATION, 24)
}

pub fn binary_octahedral() -> &'static GroupTable {
    static CELL: OnceBox<GroupTable> = OnceBox::new();
    CELL.get_or_init(|| Box::new(realize_fixed(BINARY_OCTAHEDRAL_PRESENTATION, 48)))
}

pub fn binary_icosahedral() -> &'static GroupTable {
    static CELL: OnceBox<GroupTable> = OnceBox::new();
    CELL.get_or_init(|| Box::new(realize_fixed(BINARY_ICOSAHEDRAL_PRESENTATION, 120)))
}

fn check_order(order: u64, max_order: usize) -> Result<()> {
    if order > max_order as u64 {
        Err(Error::BoundExceeded { bound: max_order })
    } else {
        Ok(())
    }
}

fn negation(n: &GroupTable) -> Vec<Elem> {
    n.elements().map(|x| n.inv(x)).collect()
}

/// `D(2^n, m) = C_m ⋊ C_{2^n}`, the generator of `C_{2^n}` inverting `C_m`.
pub fn dd(n: u32, m: usize, max_order: usize) -> Result<GroupTable> {
    if n < 3 || m < 3 || m % 2 == 0 {
        return Err(Error::BadParameters(format!(
            "D(2^n,m) needs n >= 3 and odd m >= 3, got n={n}, m={m}"
        )));
    }
    let two = 1u64.checked_shl(n).filter(|&t| t <= max_order as u64);
    let two = two.ok_or(Error::BoundExceeded { bound: max_order })?;
    check_order(two * m as u64, max_order)?;
    let (cm, c2) = (cyclic(m), cyclic(two as usize));
    let act = Action::from_generators(&cm, &c2, &[1], &[negation(&cm)])?;
    semidirect_product(&cm, &c2, &act, max_order)
}

/// `Q_8 ⋊ C_{3^n}`: the generator `z` of `C_{3^n}` acts by `x ↦ y, y ↦ xy`.
fn q8_by_cyclic_3group(n: u32, max_order: usize) -> Result<GroupTable> {
    let three = 3u64.checked_pow(n).filter(|&t| t <= max_order as u64);
    let three = three.ok_or(Error::BoundExceeded { bound: max_order })?;
    check_order(8 * three, max_order)?;
    let q8 = quaternion(2);
    let (x, y) = (1, 4);
    let phi = GroupMap::from_generators(&q8, &[x, y], &q8, &[y, q8.mul(x, y)])?;
    let h = cyclic(three as usize);
    let act = Action::from_generators(&q8, &h, &[1], &[phi.images])?;
    semidirect_product(&q8, &h, &act, max_order)
}

/// `P'_{8·3^n} = Q_8 ⋊ C_{3^n}` for `n >= 2`.
pub fn pp(n: u32, max_order: usize) -> Result<GroupTable> {
    if n < 2 {
        return Err(Error::BadParameters(format!("P'_(8*3^n) needs n >= 2, got {n}")));
    }
    q8_by_cyclic_3group(n, max_order)
}

/// `Q(2^n a; b, c) = (C_a × C_b × C_c) ⋊ Q_{2^n}` with
/// `x: (p,q,r) ↦ (p,q⁻¹,r⁻¹)` and `y: (p,q,r) ↦ (p⁻¹,q,r⁻¹)`, where `x` has
/// order `2^{n-1}`.
///
/// The kernel of the action on `C_a` is `⟨x⟩`, so `C_a ⋊ Q_{2^n} ≅ Q_{2^n a}`;
/// the kernels on `C_b` and `C_c` are the two quaternion subgroups of index
/// two. Putting `⟨x⟩` on the `C_c` factor instead would give `Q(16;m,n)` a
/// `Q_{16n}` quotient.
pub fn qt(n: u32, a: usize, b: usize, c: usize, max_order: usize) -> Result<GroupTable> {
    if n < 3 {
        return Err(Error::BadParameters(format!("Q(2^n a;b,c) needs n >= 3, got {n}")));
    }
    for (name, v) in [("a", a), ("b", b), ("c", c)] {
        if v == 0 || v % 2 == 0 {
            return Err(Error::BadParameters(format!("{name} must be odd and positive")));
        }
    }
    let (a64, b64, c64) = (a as u64, b as u64, c as u64);
    if gcd(a64, b64) != 1 || gcd(a64, c64) != 1 || gcd(b64, c64) != 1 {
        return Err(Error::BadParameters("a, b, c must be pairwise coprime".into()));
    }
    let two = 1u64.checked_shl(n).filter(|&t| t <= max_order as u64);
    let two = two.ok_or(Error::BoundExceeded { bound: max_order })?;
    check_order(two * a64 * b64 * c64, max_order)?;
    let base = direct_product(
        &direct_product(&cyclic(a), &cyclic(b), max_order)?,
        &cyclic(c),
        max_order,
    )?;
    let split = |e: usize| (e / (b * c), (e / c) % b, e % c);
    let join = |p: usize, q: usize, r: usize| ((p * b + q) * c + r) as Elem;
    let neg = |v: usize, m: usize| (m - v) % m;
    let phi_x = (0..base.order())
        .map(|e| {
            let (p, q, r) = split(e);
            join(p, neg(q, b), neg(r, c))
        })
        .collect();
    let phi_y = (0..base.order())
        .map(|e| {
            let (p, q, r) = split(e);
            join(neg(p, a), q, neg(r, c))
        })
        .collect();
    let half = (two / 4) as usize;
    let h = quaternion(half);
    let act = Action::from_generators(&base, &h, &[1, 2 * half as Elem], &[phi_x, phi_y])?;
    semidirect_product(&base, &h, &act, max_order)
}

/// Multiplier of each element of `Õ` on a cyclic fiber: `-1` off the derived
/// subgroup `T̃`, `+1` on it, reduced mod `n`.
pub fn octahedral_sign_action(n: u64) -> Vec<u64> {
    let bo = binary_octahedral();
    let t = derived_subgroup(bo);
    debug_assert_eq!(t.size(), 24);
    bo.elements()
        .map(|x| if t.contains(x) { 1 % n } else { (n - 1) % n })
        .collect()
}

/// `P''_{48n} = C_n · Õ` for odd `n`, `Õ` acting on `C_n` through
/// `Õ/T̃ = C_2` by inversion.
///
/// When `3 ∤ n` this is the split extension. When `3 | n` it is the
/// extension of the first cohomology class (in the deterministic order of
/// [`two_cocycle_classes`]) whose Sylow 3-subgroup is cyclic.
pub fn ppp(n: usize, max_order: usize) -> Result<GroupTable> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::BadParameters(format!("P''_(48n) needs odd n >= 1, got {n}")));
    }
    check_order(48 * n as u64, max_order)?;
    let bo = binary_octahedral();
    let action = octahedral_sign_action(n as u64);
    if n % 3 != 0 {
        return build_extension(&CocycleClass::trivial(bo.clone(), n as u64, action)?);
    }
    let want = p_part(48 * n as u64, 3) as usize;
    for class in two_cocycle_classes(bo, n as u64, &action)? {
        let g = build_extension(&class)?;
        let syl = sylow_subgroup(&g, 3);
        debug_assert_eq!(syl.size(), want);
        if syl.to_table(&g).0.is_cyclic() {
            return Ok(g);
        }
    }
    Err(Error::Internal(format!(
        "no extension C_{n}·Õ has a cyclic Sylow 3-subgroup"
    )))
}

/// Builds `expr`, refusing anything above `max_order`.
pub fn build_named(expr: &GroupExpr, max_order: usize) -> Result<GroupTable> {
    expr.build(max_order)
}

/// Shorthand: parse and build a group expression with the default bound.
pub fn build(text: &str) -> Result<GroupTable> {
    text.parse::<GroupExpr>()?.build(DEFAULT_MAX_ORDER)
}

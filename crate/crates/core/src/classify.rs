//! Quotient analysis, family assignment, and the verdict report.
//!
//! Everything in a [`ClassificationReport`] is either computed from the
//! group table or is a verdict that follows from computed invariants through
//! a published result. Verdicts carry a [`CitationKey`] naming the result
//! they rely on; computed fields carry none.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{divisors, gcd, p_part, prime_divisors};
use crate::catalog::{self, Atom, GroupExpr};
use crate::chartab::{character_summary, m_quaternionic, CharacterSummaryModP};
use crate::group::{
    are_isomorphic, center, conjugacy_classes, normal_subgroups, quotient, recognize_structure,
    sylow_subgroup, GroupTable, StructureTag, SubgroupSet,
};
use crate::periodicity::{periodicity_report, PeriodicityReport};
use crate::{Error, Limits, Result};

/// Published results that report verdicts rely on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CitationKey {
    PeriodicSylowCriterion,
    EichlerQuotientCriterion,
    SfcCriterion,
    EulerCharacteristicDetermines,
    MinimalEulerCharacteristic,
    Q28TwoStablyFree,
    D2FamiliesIToIv,
    D2Q28,
    D2Q16Family,
    BalancedPresentationCriterion,
    Sigma4Vanishes,
    FreePeriodEight,
}

impl CitationKey {
    pub const ALL: [CitationKey; 12] = [
        CitationKey::PeriodicSylowCriterion,
        CitationKey::EichlerQuotientCriterion,
        CitationKey::SfcCriterion,
        CitationKey::EulerCharacteristicDetermines,
        CitationKey::MinimalEulerCharacteristic,
        CitationKey::Q28TwoStablyFree,
        CitationKey::D2FamiliesIToIv,
        CitationKey::D2Q28,
        CitationKey::D2Q16Family,
        CitationKey::BalancedPresentationCriterion,
        CitationKey::Sigma4Vanishes,
        CitationKey::FreePeriodEight,
    ];

    pub fn key(self) -> &'static str {
        match self {
            CitationKey::PeriodicSylowCriterion => "periodic_sylow_criterion",
            CitationKey::EichlerQuotientCriterion => "eichler_quotient_criterion",
            CitationKey::SfcCriterion => "sfc_criterion",
            CitationKey::EulerCharacteristicDetermines => "euler_characteristic_determines",
            CitationKey::MinimalEulerCharacteristic => "minimal_euler_characteristic",
            CitationKey::Q28TwoStablyFree => "q28_two_stably_free",
            CitationKey::D2FamiliesIToIv => "d2_families_i_to_iv",
            CitationKey::D2Q28 => "d2_q28",
            CitationKey::D2Q16Family => "d2_q16_family",
            CitationKey::BalancedPresentationCriterion => "balanced_presentation_criterion",
            CitationKey::Sigma4Vanishes => "sigma4_vanishes",
            CitationKey::FreePeriodEight => "free_period_eight",
        }
    }

    /// The mathematical statement relied on, in this crate's wording.
    pub fn statement(self) -> &'static str {
        match self {
            CitationKey::PeriodicSylowCriterion => {
                "A finite group has periodic cohomology iff each Sylow subgroup is cyclic or \
                 generalized quaternion, iff it contains no C_p x C_p."
            }
            CitationKey::EichlerQuotientCriterion => {
                "m_H(G) = 0 iff G has no binary polyhedral quotient."
            }
            CitationKey::SfcCriterion => {
                "For G with periodic cohomology, Z[G] has stably free cancellation iff m_H(G) <= 2."
            }
            CitationKey::EulerCharacteristicDetermines => {
                "For 4-periodic G, Euler characteristic classifies D2 complexes up to polarised \
                 homotopy iff m_H(G) <= 2; when m_H(G) >= 3 there are at least two minimal ones."
            }
            CitationKey::MinimalEulerCharacteristic => {
                "For 4-periodic G the minimal Euler characteristic of a D2 complex is 1."
            }
            CitationKey::Q28TwoStablyFree => {
                "Z[Q_28] has two isomorphism classes of rank one stably free modules, giving two \
                 minimal D2 complexes."
            }
            CitationKey::D2FamiliesIToIv => {
                "Groups in families I-IV are finite 3-manifold groups, hence have balanced \
                 presentations, and with m_H <= 2 they have the D2 property."
            }
            CitationKey::D2Q28 => {
                "Q_28 has the D2 property: its two minimal D2 complexes are realized by two \
                 balanced presentations."
            }
            CitationKey::D2Q16Family => {
                "Q(16;n,1) x C_k has a balanced presentation and therefore the D2 property."
            }
            CitationKey::BalancedPresentationCriterion => {
                "For 4-periodic G with m_H(G) <= 2, G has the D2 property iff it has a balanced \
                 presentation."
            }
            CitationKey::Sigma4Vanishes => {
                "For groups in families I-IV the finiteness obstruction sigma_4 vanishes, so they \
                 have free period 4."
            }
            CitationKey::FreePeriodEight => {
                "Q(16;3,1), of order 48, has cohomological period 4 but free period 8, the \
                 smallest order where the two differ."
            }
        }
    }
}

impl fmt::Display for CitationKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// A verdict together with the result it is derived from.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Cited<T> {
    pub value: T,
    pub citation: Option<CitationKey>,
}

impl<T> Cited<T> {
    fn by(value: T, key: CitationKey) -> Self {
        Cited {
            value,
            citation: Some(key),
        }
    }

    fn bare(value: T) -> Self {
        Cited {
            value,
            citation: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum FamilyTag {
    I,
    II,
    III,
    IV,
    V,
    VI,
    /// 4-periodic with `m_H ≥ 3`.
    #[cfg_attr(feature = "serde", serde(rename = "none"))]
    None,
    #[cfg_attr(feature = "serde", serde(rename = "not_4_periodic"))]
    Not4Periodic,
    /// 4-periodic with `m_H ≤ 2` but no catalog match was found.
    #[cfg_attr(feature = "serde", serde(rename = "unclassified"))]
    Unclassified,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::I => "I",
            FamilyTag::II => "II",
            FamilyTag::III => "III",
            FamilyTag::IV => "IV",
            FamilyTag::V => "V",
            FamilyTag::VI => "VI",
            FamilyTag::None => "none",
            FamilyTag::Not4Periodic => "not_4_periodic",
            FamilyTag::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of [`classify_family`]: the tag and, for families I–VI, the
/// matched catalog group times the split-off cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyMatch {
    pub tag: FamilyTag,
    pub witness: Option<GroupExpr>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum D2Status {
    Proven,
    Open,
    RequiresBalancedPresentation,
}

impl D2Status {
    pub fn as_str(self) -> &'static str {
        match self {
            D2Status::Proven => "proven",
            D2Status::Open => "open",
            D2Status::RequiresBalancedPresentation => "requires_balanced_presentation",
        }
    }
}

/// Number of minimal D2 complexes up to polarised homotopy, when known.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ProngCount {
    pub value: Option<u32>,
    pub lower_bound: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Note {
    pub citation: CitationKey,
    pub text: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BpgQuotientSummary {
    pub tag: StructureTag,
    pub kernel_size: u64,
    pub quotient_order: u64,
}

/// The full per-group record.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassificationReport {
    pub order: u64,
    pub periodicity: PeriodicityReport,
    pub m_h: u64,
    pub eichler: bool,
    pub bpg_quotients: Vec<BpgQuotientSummary>,
    pub quaternion_quotient_ns: Vec<u64>,
    pub family: FamilyTag,
    pub family_witness: Option<String>,
    pub sfc: Cited<Option<bool>>,
    pub chi_determines_d2: Cited<Option<bool>>,
    pub d2_status: Cited<D2Status>,
    pub min_euler_char: Cited<Option<i64>>,
    pub prong_count: Cited<ProngCount>,
    pub notes: Vec<Note>,
}

impl ClassificationReport {
    /// Every citation key used by a verdict or note, sorted.
    pub fn citations(&self) -> Vec<CitationKey> {
        let mut keys: BTreeSet<CitationKey> = BTreeSet::new();
        keys.extend(self.sfc.citation);
        keys.extend(self.chi_determines_d2.citation);
        keys.extend(self.d2_status.citation);
        keys.extend(self.min_euler_char.citation);
        keys.extend(self.prong_count.citation);
        keys.extend(self.notes.iter().map(|n| n.citation));
        keys.insert(CitationKey::PeriodicSylowCriterion);
        keys.insert(CitationKey::EichlerQuotientCriterion);
        keys.into_iter().collect()
    }
}

/// A quotient `G/N` by a normal subgroup, with its recognized structure.
#[derive(Clone, Debug)]
pub struct QuotientInfo {
    pub kernel: SubgroupSet,
    pub table: GroupTable,
    pub tag: StructureTag,
}

impl QuotientInfo {
    pub fn is_binary_polyhedral(&self) -> bool {
        self.tag.is_binary_polyhedral()
    }

    /// `n` when the quotient is `Q_4n`.
    pub fn quaternion_n(&self) -> Option<u64> {
        (self.tag == StructureTag::GeneralizedQuaternion).then(|| self.table.order() as u64 / 4)
    }
}

/// The invariants of one group that every verdict is assembled from.
#[derive(Clone, Debug)]
pub struct GroupAnalysis {
    pub group: GroupTable,
    pub periodicity: PeriodicityReport,
    pub characters: CharacterSummaryModP,
    pub m_h: usize,
    /// One entry per normal subgroup, in the order of
    /// [`normal_subgroups`](crate::group::normal_subgroups).
    pub quotients: Vec<QuotientInfo>,
    pub limits: Limits,
}

impl GroupAnalysis {
    pub fn new(g: &GroupTable, limits: Limits) -> Result<Self> {
        let periodicity = periodicity_report(g);
        let characters = character_summary(g)?;
        let m_h = characters.quaternionic_count().expect("indicators are filled in");
        let mut quotients = Vec::new();
        for n in normal_subgroups(g) {
            let (table, _) = quotient(g, &n)?;
            let tag = recognize_structure(&table, limits.iso_budget)?;
            quotients.push(QuotientInfo {
                kernel: n,
                table,
                tag,
            });
        }
        Ok(GroupAnalysis {
            group: g.clone(),
            periodicity,
            characters,
            m_h,
            quotients,
            limits,
        })
    }

    pub fn bpg_quotients(&self) -> impl Iterator<Item = &QuotientInfo> {
        self.quotients.iter().filter(|q| q.is_binary_polyhedral())
    }

    pub fn quaternion_ns(&self) -> BTreeSet<u64> {
        self.quotients.iter().filter_map(QuotientInfo::quaternion_n).collect()
    }

    pub fn is_4_periodic(&self) -> bool {
        self.periodicity.period.is_some_and(|p| 4 % p == 0)
    }
}

/// Every normal `N` with `G/N` binary polyhedral, with the quotient's tag.
pub fn binary_polyhedral_quotients(
    g: &GroupTable,
    limits: Limits,
) -> Result<Vec<(SubgroupSet, StructureTag)>> {
    let mut out = Vec::new();
    for n in normal_subgroups(g) {
        let (q, _) = quotient(g, &n)?;
        let tag = recognize_structure(&q, limits.iso_budget)?;
        if tag.is_binary_polyhedral() {
            out.push((n, tag));
        }
    }
    Ok(out)
}

/// All `n ≥ 2` with a quotient isomorphic to `Q_4n`.
pub fn quaternion_quotient_ns(g: &GroupTable, limits: Limits) -> Result<BTreeSet<u64>> {
    Ok(binary_polyhedral_quotients(g, limits)?
        .into_iter()
        .filter(|(_, t)| *t == StructureTag::GeneralizedQuaternion)
        .map(|(n, _)| (n.index() / 4) as u64)
        .collect())
}

/// `m_H(G) = 0`, cross-checked against the absence of binary polyhedral
/// quotients.
pub fn eichler_status(g: &GroupTable, limits: Limits) -> Result<bool> {
    let eichler = m_quaternionic(g)? == 0;
    let no_bpg = binary_polyhedral_quotients(g, limits)?.is_empty();
    if eichler != no_bpg {
        return Err(Error::PropositionViolation(format!(
            "m_H = 0 is {eichler} but absence of binary polyhedral quotients is {no_bpg}"
        )));
    }
    Ok(eichler)
}

/// `(N ⊆ every binary polyhedral kernel, m_H(G) = m_H(G/N))`; the two
/// sides must agree.
pub fn relative_eichler_check(
    g: &GroupTable,
    n: &SubgroupSet,
    limits: Limits,
) -> Result<(bool, bool)> {
    let lhs = binary_polyhedral_quotients(g, limits)?
        .iter()
        .all(|(k, _)| n.is_subset_of(k));
    let (q, _) = quotient(g, n)?;
    let rhs = m_quaternionic(g)? == m_quaternionic(&q)?;
    if lhs != rhs {
        return Err(Error::PropositionViolation(format!(
            "kernel containment is {lhs} but m_H equality is {rhs}"
        )));
    }
    Ok((lhs, rhs))
}

pub fn classify_family(g: &GroupTable, limits: Limits) -> Result<FamilyMatch> {
    let period = periodicity_report(g).period;
    let m_h = m_quaternionic(g)?;
    classify_with(g, period, m_h, limits)
}

fn classify_with(
    g: &GroupTable,
    period: Option<u64>,
    m_h: usize,
    limits: Limits,
) -> Result<FamilyMatch> {
    if !period.is_some_and(|p| 4 % p == 0) {
        return Ok(FamilyMatch {
            tag: FamilyTag::Not4Periodic,
            witness: None,
        });
    }
    if m_h >= 3 {
        return Ok(FamilyMatch {
            tag: FamilyTag::None,
            witness: None,
        });
    }
    let (k_set, k) = central_cyclic_hall(g);
    let (h, _) = quotient(g, &k_set)?;
    for (tag, atom) in family_candidates(h.order() as u64) {
        let candidate = match atom.build(limits.max_order) {
            Ok(c) => c,
            Err(e) if e.is_limit_error() => continue,
            Err(e) => return Err(e),
        };
        if are_isomorphic(&h, &candidate, limits.iso_budget)? {
            let mut witness = GroupExpr::atom(atom);
            if k > 1 {
                witness.factors.push(Atom::Cyclic(k as usize));
            }
            return Ok(FamilyMatch {
                tag,
                witness: Some(witness),
            });
        }
    }
    Ok(FamilyMatch {
        tag: FamilyTag::Unclassified,
        witness: None,
    })
}

/// The product of the Sylow subgroups that are cyclic and central, and its
/// order. Being a central Hall subgroup it is a direct factor.
fn central_cyclic_hall(g: &GroupTable) -> (SubgroupSet, u64) {
    let z = center(g);
    let mut gens = Vec::new();
    let mut k = 1;
    for p in prime_divisors(g.order() as u64) {
        let s = sylow_subgroup(g, p);
        if s.is_subset_of(&z) && s.to_table(g).0.is_cyclic() {
            gens.extend(s.generators(g));
            k *= p_part(g.order() as u64, p);
        }
    }
    let set = SubgroupSet::generated(g, &gens);
    debug_assert_eq!(set.size() as u64, k);
    (set, k)
}

/// Catalog groups of the given order that head families I–VI.
fn family_candidates(order: u64) -> Vec<(FamilyTag, Atom)> {
    let mut out = Vec::new();
    let o = order as usize;
    out.push((FamilyTag::I, Atom::Cyclic(o)));
    if order % 4 == 2 && order >= 6 {
        out.push((FamilyTag::I, Atom::Dihedral(o / 2)));
    }
    for n in [2usize, 3, 4, 5] {
        if 4 * n == o {
            out.push((FamilyTag::II, Atom::Quaternion(n)));
        }
    }
    match order {
        24 => out.push((FamilyTag::II, Atom::BinaryTetrahedral)),
        48 => out.push((FamilyTag::II, Atom::BinaryOctahedral)),
        120 => out.push((FamilyTag::II, Atom::BinaryIcosahedral)),
        _ => {}
    }
    let two = p_part(order, 2);
    let n2 = two.trailing_zeros();
    let odd = order / two;
    if n2 >= 3 && (odd == 3 || odd == 5) {
        out.push((FamilyTag::III, Atom::Dd { n: n2, m: odd as usize }));
    }
    if order % 8 == 0 && p_part(order, 3) == order / 8 && order / 8 >= 9 {
        let n = (order / 8).ilog(3);
        out.push((FamilyTag::IV, Atom::Pp { n }));
    }
    if order % 48 == 0 {
        let n = order / 48;
        if n >= 3 && n % 2 == 1 {
            out.push((FamilyTag::V, Atom::Ppp { n: n as usize }));
        }
    }
    if order % 16 == 0 {
        let rest = order / 16;
        if rest % 2 == 1 {
            for m in divisors(rest) {
                let n = rest / m;
                if m > n && gcd(m, n) == 1 {
                    out.push((
                        FamilyTag::VI,
                        Atom::Qt {
                            n: 4,
                            a: 1,
                            b: m as usize,
                            c: n as usize,
                        },
                    ));
                }
            }
        }
    }
    out
}

/// Assembles every computed invariant and cited verdict for `g`.
pub fn d2_report(g: &GroupTable, limits: Limits) -> Result<ClassificationReport> {
    d2_report_with(&GroupAnalysis::new(g, limits)?)
}

pub fn d2_report_with(a: &GroupAnalysis) -> Result<ClassificationReport> {
    let g = &a.group;
    let m_h = a.m_h;
    let bpg: Vec<&QuotientInfo> = a.bpg_quotients().collect();
    let eichler = m_h == 0;
    if eichler != bpg.is_empty() {
        return Err(Error::PropositionViolation(format!(
            "m_H = {m_h} but {} binary polyhedral quotients",
            bpg.len()
        )));
    }
    let family = classify_with(g, a.periodicity.period, m_h, a.limits)?;
    let periodic = a.periodicity.periodic;
    let four = a.is_4_periodic();
    let small = m_h <= 2;
    let is_q28 = g.order() == 28 && are_isomorphic(g, &catalog::quaternion(7), a.limits.iso_budget)?;

    let sfc = if periodic {
        Cited::by(Some(small), CitationKey::SfcCriterion)
    } else {
        Cited::bare(None)
    };
    let chi_determines_d2 = if four {
        Cited::by(Some(small), CitationKey::EulerCharacteristicDetermines)
    } else {
        Cited::bare(None)
    };
    let min_euler_char = if four {
        Cited::by(Some(1), CitationKey::MinimalEulerCharacteristic)
    } else {
        Cited::bare(None)
    };
    let prong = |value, lower_bound| ProngCount { value, lower_bound };
    let prong_count = if is_q28 {
        Cited::by(prong(Some(2), Some(2)), CitationKey::Q28TwoStablyFree)
    } else if four && small {
        Cited::by(prong(Some(1), Some(1)), CitationKey::EulerCharacteristicDetermines)
    } else if four {
        Cited::by(prong(None, Some(2)), CitationKey::EulerCharacteristicDetermines)
    } else {
        Cited::bare(prong(None, None))
    };

    let q16_family = matches!(
        family.witness.as_ref().and_then(|w| w.factors.first()),
        Some(Atom::Qt { n: 4, a: 1, c: 1, .. })
    );
    let d2_status = match family.tag {
        FamilyTag::I | FamilyTag::II | FamilyTag::III | FamilyTag::IV => {
            Cited::by(D2Status::Proven, CitationKey::D2FamiliesIToIv)
        }
        FamilyTag::VI if q16_family => Cited::by(D2Status::Proven, CitationKey::D2Q16Family),
        _ if is_q28 => Cited::by(D2Status::Proven, CitationKey::D2Q28),
        _ if four && small => Cited::by(
            D2Status::RequiresBalancedPresentation,
            CitationKey::BalancedPresentationCriterion,
        ),
        _ => Cited::bare(D2Status::Open),
    };

    let mut notes = Vec::new();
    if matches!(
        family.tag,
        FamilyTag::I | FamilyTag::II | FamilyTag::III | FamilyTag::IV
    ) {
        notes.push(Note {
            citation: CitationKey::Sigma4Vanishes,
            text: "sigma_4 = 0; free period equals cohomological period 4".to_string(),
        });
    }
    if g.order() == 48 {
        let q = catalog::qt(4, 1, 3, 1, a.limits.max_order)?;
        if are_isomorphic(g, &q, a.limits.iso_budget)? {
            notes.push(Note {
                citation: CitationKey::FreePeriodEight,
                text: "free period 8 (cohomological period 4)".to_string(),
            });
        }
    }

    Ok(ClassificationReport {
        order: g.order() as u64,
        periodicity: a.periodicity.clone(),
        m_h: m_h as u64,
        eichler,
        bpg_quotients: bpg
            .iter()
            .map(|q| BpgQuotientSummary {
                tag: q.tag,
                kernel_size: q.kernel.size() as u64,
                quotient_order: q.table.order() as u64,
            })
            .collect(),
        quaternion_quotient_ns: a.quaternion_ns().into_iter().collect(),
        family: family.tag,
        family_witness: family.witness.map(|w| w.to_string()),
        sfc,
        chi_determines_d2,
        d2_status,
        min_euler_char,
        prong_count,
        notes,
    })
}

/// `m_H` of each quotient, computed by character tables.
pub fn quotient_m_h(a: &GroupAnalysis) -> Result<Vec<usize>> {
    a.quotients.iter().map(|q| m_quaternionic(&q.table)).collect()
}

/// Number of conjugacy classes, exposed for reporting.
pub fn class_count(g: &GroupTable) -> usize {
    conjugacy_classes(g).count()
}

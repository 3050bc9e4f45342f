//! The family set X_F = 𝒫̄_ev(𝒥), its opposed Lagrangians, the set M(Ā) for
//! elementary abelian Ā, the canonical identification X_F ↔ M(Ā), and the
//! checks of the pairing coincidence and of the (1, ·)-slice.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::f2::{is_lagrangian_pair, parity, Ambient, F2Subspace, GroundSet, LagrangianReport};
use crate::springer::PiMap;
use crate::symbols::frak::swap_subsets;
use crate::symbols::{minus, Flavor, FrakStructure, IntervalStructure, Sequence, Side, SymbolPair};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("class {0:?} has no decomposition along the Lagrangians")]
    Decomposition(Vec<u32>),
}

/// X_F with its members and Lagrangian pair.
#[derive(Debug, Clone)]
pub struct FamilySet {
    pub sequence: Sequence,
    pub frak: FrakStructure,
    /// 𝔗′ with the canonical class of each member.
    pub members: Vec<(u64, SymbolPair)>,
    /// Lagrangian identified with Ā.
    pub group_side: Side,
    /// Lagrangian identified with the characters of Ā.
    pub character_side: Side,
    /// Set when 𝒫̄(𝒥) and 𝒫̄_ev(𝒥) differ (|𝒥| even).
    pub ambient_note: Option<String>,
}

impl FamilySet {
    pub fn new(a: &Sequence) -> Self {
        let frak = FrakStructure::new(a);
        let members = frak.prime();
        let character_side = frak.swap_side();
        let ambient_note = frak.ground().len().is_multiple_of(2).then(|| {
            format!(
                "|𝒥| = {} is even: X_F is taken to be 𝒫̄_ev(𝒥) ({} elements), not 𝒫̄(𝒥) ({} elements)",
                frak.ground().len(),
                1u64 << Ambient::QuotientEven.dim(frak.ground()),
                1u64 << Ambient::Quotient.dim(frak.ground())
            )
        });
        Self {
            sequence: a.clone(),
            frak,
            members,
            group_side: character_side.other(),
            character_side,
            ambient_note,
        }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        self.frak.ground()
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::QuotientEven
    }

    /// Every element of X_F as a canonical class.
    pub fn elements(&self) -> Vec<u64> {
        self.ambient().elements(self.ground())
    }

    pub fn group_lagrangian(&self) -> &F2Subspace {
        self.frak.lagrangian(self.group_side)
    }

    pub fn character_lagrangian(&self) -> &F2Subspace {
        self.frak.lagrangian(self.character_side)
    }

    pub fn lagrangian_report(&self) -> LagrangianReport {
        is_lagrangian_pair(
            self.frak.lagrangian(Side::Zero),
            self.frak.lagrangian(Side::One),
            self.ambient(),
        )
        .expect("generator spans share the ground and lie in 𝒫̄_ev(𝒥)")
    }

    /// Symplectic form on X_F.
    pub fn form(&self, x: u64, y: u64) -> u8 {
        self.ambient()
            .form(self.ground(), x, y)
            .expect("members of 𝒫̄_ev have even lifts")
    }

    /// Members embed injectively and lie in X_F.
    pub fn members_embedded(&self) -> bool {
        let addrs: BTreeSet<u64> = self.members.iter().map(|(b, _)| *b).collect();
        addrs.len() == self.members.len()
            && addrs.iter().all(|&b| self.ambient().contains(self.ground(), b))
    }

    pub fn labels(&self, bits: u64) -> Vec<u32> {
        self.ground().labels_of(bits)
    }
}

/// An element (g, χ) of M(Ā) for Ā ≅ F₂^dim: g in the basis of Ā, χ in the
/// dual basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MPairAbelian {
    pub group: u64,
    pub character: u64,
}

/// M(Ā) for an elementary abelian 2-group of rank `dim`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AbelianMSet {
    pub dim: usize,
}

impl AbelianMSet {
    pub fn order(&self) -> i64 {
        1i64 << self.dim
    }

    pub fn elements(&self) -> Vec<MPairAbelian> {
        let n = 1u64 << self.dim;
        (0..n)
            .flat_map(|g| (0..n).map(move |c| MPairAbelian { group: g, character: c }))
            .collect()
    }

    /// |Ā|⁻¹ (−1)^{χ(g′) + χ′(g)}.
    pub fn pairing(&self, p: MPairAbelian, q: MPairAbelian) -> Ratio<i64> {
        let e = parity(p.character & q.group) ^ parity(q.character & p.group);
        let sign = if e == 0 { 1 } else { -1 };
        Ratio::new(sign, self.order())
    }
}

/// X_F ↔ M(Ā) as a table.
#[derive(Debug, Clone)]
pub struct Identification {
    pub mset: AbelianMSet,
    pub table: BTreeMap<u64, MPairAbelian>,
}

/// Split each x ∈ X_F as g + c along the Lagrangians; g is the group
/// element, and c gives the character g′ ↦ (g′, c).
pub fn canonical_identification(fs: &FamilySet) -> Result<Identification, FamilyError> {
    let lg = fs.group_lagrangian();
    let lc = fs.character_lagrangian();
    let gs = lg.elements();
    let mut table = BTreeMap::new();
    for x in fs.elements() {
        let g = gs
            .iter()
            .copied()
            .find(|&g| lc.contains_bits(x ^ g))
            .ok_or_else(|| FamilyError::Decomposition(fs.labels(x)))?;
        let c = fs.ground().canonical(x ^ g);
        table.insert(
            x,
            MPairAbelian {
                group: lg.coordinates(g).expect("g lies in the group side"),
                character: character_of(fs, c),
            },
        );
    }
    Ok(Identification {
        mset: AbelianMSet { dim: lg.dim() },
        table,
    })
}

/// The character g ↦ (g, c) of the group side, in the dual basis.
fn character_of(fs: &FamilySet, c: u64) -> u64 {
    fs.group_lagrangian()
        .basis()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &b)| acc | u64::from(fs.form(b, c)) << i)
}

/// A pair where the two sides of the coincidence differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingWitness {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub m_side: String,
    pub form_side: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairingCoincidenceReport {
    pub abar_order: i64,
    pub abar_order_from_pi: u64,
    pub xf_size: usize,
    pub m_size: usize,
    pub lagrangian: LagrangianReport,
    pub members_embedded: bool,
    pub zero_is_unit: bool,
    pub bijective: bool,
    pub pairs_checked: usize,
    pub mismatch: Option<PairingWitness>,
    pub ambient_note: Option<String>,
}

impl PairingCoincidenceReport {
    pub fn holds(&self) -> bool {
        self.lagrangian.holds()
            && self.abar_order as u64 == self.abar_order_from_pi
            && self.members_embedded
            && self.zero_is_unit
            && self.bijective
            && self.mismatch.is_none()
    }
}

/// Check {img(x), img(y)} = |Ā|⁻¹ (−1)^{(x,y)} for all x, y ∈ X_F.
pub fn verify_pairing_coincidence(a: &Sequence) -> Result<PairingCoincidenceReport, FamilyError> {
    let fs = FamilySet::new(a);
    let id = canonical_identification(&fs)?;
    let pi = PiMap::new(&IntervalStructure::new(a));
    let xs = fs.elements();
    let images: BTreeSet<MPairAbelian> = id.table.values().copied().collect();
    let m_size = id.mset.elements().len();
    let mut mismatch = None;
    let mut pairs_checked = 0;
    'outer: for &x in &xs {
        for &y in &xs {
            pairs_checked += 1;
            let lhs = id.mset.pairing(id.table[&x], id.table[&y]);
            let sign = if fs.form(x, y) == 0 { 1 } else { -1 };
            let rhs = Ratio::new(sign, id.mset.order());
            if lhs != rhs {
                mismatch = Some(PairingWitness {
                    x: fs.labels(x),
                    y: fs.labels(y),
                    m_side: lhs.to_string(),
                    form_side: rhs.to_string(),
                });
                break 'outer;
            }
        }
    }
    Ok(PairingCoincidenceReport {
        abar_order: id.mset.order(),
        abar_order_from_pi: pi.abar_order(),
        xf_size: xs.len(),
        m_size,
        lagrangian: fs.lagrangian_report(),
        members_embedded: fs.members_embedded(),
        zero_is_unit: id.table.get(&0) == Some(&MPairAbelian { group: 0, character: 0 }),
        bijective: images.len() == xs.len() && xs.len() == m_size,
        pairs_checked,
        mismatch,
        ambient_note: fs.ambient_note.clone(),
    })
}

/// One member of T₁ traced through both routes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SliceRow {
    pub pair: SymbolPair,
    pub image: SymbolPair,
    pub address: Option<Vec<u32>>,
    pub m_pair: Option<MPairAbelian>,
    /// The character of Ā obtained from α through the block generators.
    pub expected_character: Option<u64>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnipotentSliceReport {
    pub rows: Vec<SliceRow>,
    /// Block relations are respected by I_s ↦ {a_{i_s}, a_{i_{s+1}}}.
    pub transport_well_defined: bool,
    /// Members with trivial group component that do not come from T₁.
    pub strays: Vec<Vec<u32>>,
}

impl UnipotentSliceReport {
    pub fn holds(&self) -> bool {
        self.transport_well_defined && self.rows.iter().all(|r| r.ok) && self.strays.is_empty()
    }
}

/// Two-way check of the (1, ·)-slice: T₁ lands there with character π(α),
/// and every member there comes from T₁.
pub fn verify_unipotent_slice(a: &Sequence) -> Result<UnipotentSliceReport, FamilyError> {
    let fs = FamilySet::new(a);
    let id = canonical_identification(&fs)?;
    let st = IntervalStructure::new(a);
    let full = if st.intervals.is_empty() {
        0
    } else {
        (1u64 << st.intervals.len()) - 1
    };
    let reduce = |m: u64| match a.flavor() {
        Flavor::C => m,
        Flavor::BD => {
            if m & 1 == 1 {
                m ^ full
            } else {
                m
            }
        }
    };

    // transport α ↦ 𝔞 through sums of blocks
    let mut transport: BTreeMap<u64, u64> = BTreeMap::new();
    let mut transport_well_defined = true;
    for x in swap_subsets(a.admissible().as_slice()) {
        let alpha = reduce(st.alpha_of_swaps(&x));
        let target = fs.ground().canonical(fs.frak.swap_subset(&x));
        if let Some(&prev) = transport.get(&alpha) {
            if prev != target {
                transport_well_defined = false;
            }
        } else {
            transport.insert(alpha, target);
        }
    }

    let t1 = st.enumerate_t().t1;
    let mut from_t1 = BTreeSet::new();
    let mut rows = Vec::new();
    for p in t1 {
        let image = minus(&p, a.flavor())
            .map(|m| m.as_unordered())
            .unwrap_or_else(|_| p.as_unordered());
        let address = fs.frak.address_of(&image);
        let m_pair = address.and_then(|b| id.table.get(&b).copied());
        let expected_character = st
            .alpha_of(&p)
            .and_then(|alpha| transport.get(&reduce(alpha)))
            .map(|&c| character_of(&fs, c));
        if let Some(b) = address {
            from_t1.insert(b);
        }
        let ok = matches!((m_pair, expected_character), (Some(m), Some(e)) if m.group == 0 && m.character == e);
        rows.push(SliceRow {
            pair: p,
            image,
            address: address.map(|b| fs.labels(b)),
            m_pair,
            expected_character,
            ok,
        });
    }
    let strays = fs
        .members
        .iter()
        .filter(|(b, _)| id.table.get(b).is_some_and(|m| m.group == 0) && !from_t1.contains(b))
        .map(|(b, _)| fs.labels(*b))
        .collect();
    Ok(UnipotentSliceReport {
        rows,
        transport_well_defined,
        strays,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp4() -> Sequence {
        Sequence::new(vec![0, 1, 2], Flavor::C).unwrap()
    }

    #[test]
    fn sp4_family() {
        let fs = FamilySet::new(&sp4());
        assert_eq!(fs.elements().len(), 4);
        let g = fs.ground();
        let addrs: BTreeSet<u64> = fs.members.iter().map(|(b, _)| *b).collect();
        let want: BTreeSet<u64> = [vec![], vec![0, 1], vec![1, 2]]
            .iter()
            .map(|l| g.canonical(g.mask_of(l).unwrap()))
            .collect();
        assert_eq!(addrs, want);
        assert!(fs.lagrangian_report().holds());
    }

    #[test]
    fn sp4_identification() {
        let fs = FamilySet::new(&sp4());
        let id = canonical_identification(&fs).unwrap();
        let g = fs.ground();
        let b = |l: &[u32]| g.canonical(g.mask_of(l).unwrap());
        assert_eq!(id.table[&0], MPairAbelian { group: 0, character: 0 });
        assert_eq!(id.table[&b(&[1, 2])], MPairAbelian { group: 0, character: 1 });
        assert_eq!(id.table[&b(&[0, 1])], MPairAbelian { group: 1, character: 0 });
        let v = id.mset.pairing(id.table[&b(&[0, 1])], id.table[&b(&[1, 2])]);
        assert_eq!(v, Ratio::new(-1, 2));
    }

    #[test]
    fn abelian_m_set() {
        let trivial = AbelianMSet { dim: 0 };
        assert_eq!(trivial.elements().len(), 1);
        assert_eq!(trivial.pairing(trivial.elements()[0], trivial.elements()[0]), Ratio::from(1));
        let z2 = AbelianMSet { dim: 1 };
        let g1 = MPairAbelian { group: 1, character: 0 };
        let one_eps = MPairAbelian { group: 0, character: 1 };
        assert_eq!(z2.pairing(g1, one_eps), Ratio::new(-1, 2));
        assert_eq!(AbelianMSet { dim: 3 }.elements().len(), 64);
    }

    #[test]
    fn pairing_and_slice_small() {
        for (v, f) in [
            (vec![0, 1, 2], Flavor::C),
            (vec![0, 0, 1], Flavor::C),
            (vec![0, 1, 2], Flavor::BD),
            (vec![0, 4], Flavor::BD),
            (vec![0, 1, 2, 3, 4], Flavor::C),
        ] {
            let a = Sequence::new(v.clone(), f).unwrap();
            let t = verify_pairing_coincidence(&a).unwrap();
            assert!(t.holds(), "{v:?} {t:?}");
            let c = verify_unipotent_slice(&a).unwrap();
            assert!(c.holds(), "{v:?} {c:?}");
        }
    }

    #[test]
    fn sp4_slice() {
        let c = verify_unipotent_slice(&sp4()).unwrap();
        let addrs: BTreeSet<Vec<u32>> = c.rows.iter().filter_map(|r| r.address.clone()).collect();
        let want: BTreeSet<Vec<u32>> = [vec![], vec![1, 2]].into_iter().collect();
        assert!(c.rows.iter().all(|r| r.m_pair.is_some_and(|m| m.group == 0)));
        assert_eq!(addrs, want);
    }

    #[test]
    fn odd_length_orthogonal_is_noted() {
        let a = Sequence::new(vec![0, 4], Flavor::BD).unwrap();
        let fs = FamilySet::new(&a);
        assert!(fs.ambient_note.is_some());
        assert_eq!(fs.elements().len(), 1);
    }
}

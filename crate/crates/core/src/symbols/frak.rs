//! Pairs (𝔄_𝔞, 𝔅_𝔞) indexed by subsets of the singleton values 𝒥, the two
//! generator Lagrangians, and the minus bijection T₁ → 𝔗₁.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use super::intervals::IntervalStructure;
use super::pairs::{minus, SymbolPair};
use super::sequence::{Flavor, Sequence};
use crate::f2::{Ambient, F2Subspace, GroundSet};

/// Which generator list a Lagrangian comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Side {
    /// Pairs {a_{i_s}, a_{i_{s+1}}} with s even.
    Zero,
    /// Pairs {a_{i_s}, a_{i_{s+1}}} with s odd.
    One,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Zero => Side::One,
            Side::One => Side::Zero,
        }
    }
}

/// The 𝔗-side data of a sequence.
#[derive(Debug, Clone)]
pub struct FrakStructure {
    flavor: Flavor,
    ground: Arc<GroundSet>,
    singleton_values: Vec<u32>,
    even_row: Vec<u32>,
    odd_row: Vec<u32>,
    generators: [Vec<u64>; 2],
    lagrangians: [F2Subspace; 2],
    admissible: Vec<usize>,
}

impl FrakStructure {
    pub fn new(a: &Sequence) -> Self {
        let singleton_values = a.singleton_values();
        let ground = GroundSet::new(singleton_values.clone()).expect("singleton values increase");
        let (even_row, odd_row) = a.rows();
        let top = a.top();
        let mut generators = [Vec::new(), Vec::new()];
        for s in 0..top {
            generators[s % 2].push((1u64 << s) | (1u64 << (s + 1)));
        }
        let span = |g: &Vec<u64>| {
            F2Subspace::span_bits(&ground, Ambient::QuotientEven, g.iter().copied())
                .expect("two-element sets have even lifts")
        };
        let lagrangians = [span(&generators[0]), span(&generators[1])];
        Self {
            flavor: a.flavor(),
            ground,
            singleton_values,
            even_row,
            odd_row,
            generators,
            lagrangians,
            admissible: a.admissible(),
        }
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// The symplectic space 𝒫̄_ev(𝒥).
    pub fn ambient(&self) -> Ambient {
        Ambient::QuotientEven
    }

    pub fn generators(&self, side: Side) -> &[u64] {
        &self.generators[side as usize]
    }

    pub fn lagrangian(&self, side: Side) -> &F2Subspace {
        &self.lagrangians[side as usize]
    }

    /// The side spanned by the generators of admissible swaps.
    pub fn swap_side(&self) -> Side {
        match self.flavor {
            Flavor::C => Side::One,
            Flavor::BD => Side::Zero,
        }
    }

    /// (𝔄_𝔞, 𝔅_𝔞) as ordered rows.
    pub fn rows_of(&self, bits: u64) -> (Vec<u32>, Vec<u32>) {
        let chosen: BTreeSet<u32> = self.ground.labels_of(bits).into_iter().collect();
        let singles: BTreeSet<u32> = self.singleton_values.iter().copied().collect();
        let mut first = Vec::new();
        let mut second = Vec::new();
        for &v in &self.even_row {
            if singles.contains(&v) && chosen.contains(&v) {
                second.push(v);
            } else {
                first.push(v);
            }
        }
        for &v in &self.odd_row {
            if singles.contains(&v) && chosen.contains(&v) {
                first.push(v);
            } else {
                second.push(v);
            }
        }
        first.sort_unstable();
        second.sort_unstable();
        (first, second)
    }

    /// (𝔄_𝔞, 𝔅_𝔞) as an unordered pair; constant on complement classes.
    pub fn pair_of(&self, bits: u64) -> SymbolPair {
        let (x, y) = self.rows_of(bits);
        SymbolPair::unordered(x, y).expect("rows of a sequence are sets")
    }

    /// Canonical classes of 𝒫̄(𝒥) with their pairs: the set 𝔗.
    pub fn all(&self) -> Vec<(u64, SymbolPair)> {
        Ambient::Quotient
            .elements(&self.ground)
            .into_iter()
            .map(|b| (b, self.pair_of(b)))
            .collect()
    }

    /// The members of 𝔗′: row sizes those of (𝔄_∅, 𝔅_∅) up to interchange.
    pub fn prime(&self) -> Vec<(u64, SymbolPair)> {
        let mut want = [self.even_row.len(), self.odd_row.len()];
        want.sort_unstable();
        self.all()
            .into_iter()
            .filter(|(_, p)| {
                let mut s = [p.first().len(), p.second().len()];
                s.sort_unstable();
                s == want
            })
            .collect()
    }

    /// Pairs attached to the members of one Lagrangian.
    pub fn image(&self, side: Side) -> Vec<(u64, SymbolPair)> {
        self.lagrangian(side)
            .elements()
            .into_iter()
            .map(|b| (b, self.pair_of(b)))
            .collect()
    }

    /// The canonical class 𝔞 with (𝔄_𝔞, 𝔅_𝔞) = p, if any.
    pub fn address_of(&self, p: &SymbolPair) -> Option<u64> {
        for (x, y) in [(p.first(), p.second()), (p.second(), p.first())] {
            let single = |v: &u32| self.singleton_values.contains(v);
            let moved: Vec<u32> = self
                .odd_row
                .iter()
                .filter(|v| single(v) && x.contains(v))
                .chain(self.even_row.iter().filter(|v| single(v) && y.contains(v)))
                .copied()
                .collect();
            let bits = self.ground.mask_of(&moved).ok()?;
            let c = self.ground.canonical(bits);
            if self.pair_of(c) == p.as_unordered() {
                return Some(c);
            }
        }
        None
    }

    /// 𝔞_X: the sum of the generators of the swaps in X, as a raw subset.
    pub fn swap_subset(&self, x: &[usize]) -> u64 {
        x.iter()
            .fold(0, |m, &s| m ^ ((1u64 << s) | (1u64 << (s + 1))))
    }

    pub fn admissible(&self) -> &[usize] {
        &self.admissible
    }
}

/// Outcome of comparing T₁ with the swap-side image under the minus map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub expected_size: usize,
    pub t1: Vec<SymbolPair>,
    pub swap_image: Vec<SymbolPair>,
    pub mapping: Vec<(SymbolPair, SymbolPair)>,
    pub t1_size_ok: bool,
    pub swap_image_size_ok: bool,
    /// T₁ coincides with {(A_{α_X}, B_{α_X})}.
    pub t1_is_swap_family: bool,
    pub bijective: bool,
    /// Swap sets X (as admissible indices) where (A_{α_X})⁻ ≠ 𝔄_{𝔞_X}.
    pub disagreements: Vec<Vec<usize>>,
}

impl BijectionReport {
    pub fn holds(&self) -> bool {
        self.t1_size_ok
            && self.swap_image_size_ok
            && self.t1_is_swap_family
            && self.bijective
            && self.disagreements.is_empty()
    }
}

/// Subsets of the admissible indices, listed by bit mask.
pub fn swap_subsets(admissible: &[usize]) -> Vec<Vec<usize>> {
    (0..(1u64 << admissible.len()))
        .map(|m| {
            admissible
                .iter()
                .enumerate()
                .filter(|(k, _)| m >> k & 1 == 1)
                .map(|(_, &s)| s)
                .collect()
        })
        .collect()
}

/// Check that minus maps T₁ bijectively onto the swap-side image and that
/// α_X and 𝔞_X correspond.
pub fn t1_bijection(a: &Sequence) -> BijectionReport {
    let st = IntervalStructure::new(a);
    let frak = FrakStructure::new(a);
    let flavor = a.flavor();
    let expected_size = 1usize << a.half_rank();
    let t1 = st.enumerate_t().t1;
    let swap_image: BTreeSet<SymbolPair> = frak
        .image(frak.swap_side())
        .into_iter()
        .map(|(_, p)| p)
        .collect();

    let subsets = swap_subsets(&frak.admissible);
    let family: BTreeSet<SymbolPair> = subsets
        .iter()
        .map(|x| st.symbol_from_alpha(st.canonical_alpha(st.alpha_of_swaps(x))))
        .collect();
    let t1_set: BTreeSet<SymbolPair> = t1.iter().cloned().collect();

    let mapping: Vec<(SymbolPair, SymbolPair)> = t1
        .iter()
        .filter_map(|p| minus(p, flavor).ok().map(|m| (p.clone(), m.as_unordered())))
        .collect();
    let images: BTreeSet<SymbolPair> = mapping.iter().map(|(_, m)| m.clone()).collect();
    let bijective = mapping.len() == t1.len() && images.len() == t1.len() && images == swap_image;

    let mut disagreements = Vec::new();
    for x in &subsets {
        let alpha = st.alpha_of_swaps(x);
        let sym = st.symbol_from_alpha(st.canonical_alpha(alpha));
        let frak_rows = frak.rows_of(frak.swap_subset(x));
        let ok = match minus(&sym, flavor) {
            Ok(m) => match flavor {
                Flavor::C => (m.first(), m.second()) == (&frak_rows.0[..], &frak_rows.1[..]),
                Flavor::BD => {
                    m.as_unordered()
                        == SymbolPair::unordered(frak_rows.0.clone(), frak_rows.1.clone())
                            .expect("rows are sets")
                }
            },
            Err(_) => false,
        };
        if !ok {
            disagreements.push(x.clone());
        }
    }

    BijectionReport {
        expected_size,
        t1_size_ok: t1.len() == expected_size,
        swap_image_size_ok: swap_image.len() == expected_size,
        t1_is_swap_family: family == t1_set,
        bijective,
        disagreements,
        t1,
        swap_image: swap_image.into_iter().collect(),
        mapping,
    }
}

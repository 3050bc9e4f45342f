//! Linear algebra over F₂ on subsets of a finite labelled ground set.
//!
//! Subsets are bit masks indexed by position in the ground set, so at most
//! 64 labels are supported. The quotient 𝒫̄(𝒳) = 𝒫(𝒳)/{∅, 𝒳} is modelled by
//! canonical representatives: of the pair {L, 𝒳∖L} we keep the member that
//! does not contain the smallest label. Sums of canonical representatives
//! stay canonical, so the quotient is just another space of masks.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;
use thiserror::Error;

pub const MAX_GROUND: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum F2Error {
    #[error("ground set labels must be strictly increasing: {0:?}")]
    NotIncreasing(Vec<u32>),
    #[error("ground set has {0} labels, at most {MAX_GROUND} supported")]
    TooLarge(usize),
    #[error("label {0} is not in the ground set")]
    UnknownLabel(u32),
    #[error("operands live on different ground sets")]
    GroundMismatch,
    #[error("the quotient by {{∅, 𝒳}} needs a nonempty ground set")]
    EmptyGround,
    #[error("class {0} has no even-cardinality lift")]
    NoEvenLift(String),
    #[error("generator {0} does not lie in the ambient space {1:?}")]
    NotInAmbient(String, Ambient),
    #[error("subspaces have different ambient spaces")]
    AmbientMismatch,
    #[error("ambient space of dimension {0} is odd and carries no symplectic form")]
    OddAmbient(usize),
    #[error("subspaces do not form an opposed Lagrangian pair")]
    NotLagrangian,
}

/// Strictly increasing list of labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GroundSet {
    labels: Vec<u32>,
}

impl GroundSet {
    pub fn new(labels: Vec<u32>) -> Result<Arc<Self>, F2Error> {
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(F2Error::NotIncreasing(labels));
        }
        if labels.len() > MAX_GROUND {
            return Err(F2Error::TooLarge(labels.len()));
        }
        Ok(Arc::new(Self { labels }))
    }

    /// Ground set {0, 1, …, n−1}.
    pub fn range(n: usize) -> Result<Arc<Self>, F2Error> {
        Self::new((0..n as u32).collect())
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn position(&self, label: u32) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn full_mask(&self) -> u64 {
        mask_of_len(self.labels.len())
    }

    pub fn mask_of(&self, labels: &[u32]) -> Result<u64, F2Error> {
        let mut bits = 0u64;
        for &l in labels {
            let p = self.position(l).ok_or(F2Error::UnknownLabel(l))?;
            bits |= 1 << p;
        }
        Ok(bits)
    }

    pub fn labels_of(&self, bits: u64) -> Vec<u32> {
        self.labels
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &l)| l)
            .collect()
    }

    /// Canonical representative of the class of `bits` in 𝒫̄: the member of
    /// {L, 𝒳∖L} without the smallest label.
    pub fn canonical(&self, bits: u64) -> u64 {
        if bits & 1 == 1 {
            bits ^ self.full_mask()
        } else {
            bits
        }
    }

    /// An even-cardinality lift of the class of `bits`, if one exists.
    pub fn even_lift(&self, bits: u64) -> Option<u64> {
        if bits.count_ones().is_multiple_of(2) {
            Some(bits)
        } else {
            let other = bits ^ self.full_mask();
            other.count_ones().is_multiple_of(2).then_some(other)
        }
    }
}

fn mask_of_len(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A subset of the ground set, viewed as a vector of 𝒫(𝒳).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    ground: Arc<GroundSet>,
    bits: u64,
}

impl F2Vector {
    pub fn from_labels(ground: &Arc<GroundSet>, labels: &[u32]) -> Result<Self, F2Error> {
        Ok(Self {
            ground: Arc::clone(ground),
            bits: ground.mask_of(labels)?,
        })
    }

    pub fn from_bits(ground: &Arc<GroundSet>, bits: u64) -> Self {
        Self {
            ground: Arc::clone(ground),
            bits: bits & ground.full_mask(),
        }
    }

    pub fn zero(ground: &Arc<GroundSet>) -> Self {
        Self::from_bits(ground, 0)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn labels(&self) -> Vec<u32> {
        self.ground.labels_of(self.bits)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn add(&self, other: &Self) -> Result<Self, F2Error> {
        same_ground(&self.ground, &other.ground)?;
        Ok(Self::from_bits(&self.ground, self.bits ^ other.bits))
    }

    pub fn complement(&self) -> Self {
        Self::from_bits(&self.ground, !self.bits)
    }

    pub fn class(&self) -> Result<F2Class, F2Error> {
        F2Class::of(self)
    }
}

impl fmt::Display for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, &self.labels())
    }
}

/// An element of 𝒫̄(𝒳), held by its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Class {
    ground: Arc<GroundSet>,
    bits: u64,
}

impl F2Class {
    pub fn of(v: &F2Vector) -> Result<Self, F2Error> {
        Self::from_bits(&v.ground, v.bits)
    }

    pub fn from_bits(ground: &Arc<GroundSet>, bits: u64) -> Result<Self, F2Error> {
        if ground.is_empty() {
            return Err(F2Error::EmptyGround);
        }
        Ok(Self {
            ground: Arc::clone(ground),
            bits: ground.canonical(bits & ground.full_mask()),
        })
    }

    pub fn from_labels(ground: &Arc<GroundSet>, labels: &[u32]) -> Result<Self, F2Error> {
        Self::from_bits(ground, ground.mask_of(labels)?)
    }

    pub fn zero(ground: &Arc<GroundSet>) -> Result<Self, F2Error> {
        Self::from_bits(ground, 0)
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    /// Bits of the canonical representative.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn representative(&self) -> F2Vector {
        F2Vector::from_bits(&self.ground, self.bits)
    }

    pub fn labels(&self) -> Vec<u32> {
        self.ground.labels_of(self.bits)
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn even_lift(&self) -> Option<F2Vector> {
        self.ground
            .even_lift(self.bits)
            .map(|b| F2Vector::from_bits(&self.ground, b))
    }

    pub fn add(&self, other: &Self) -> Result<Self, F2Error> {
        same_ground(&self.ground, &other.ground)?;
        Self::from_bits(&self.ground, self.bits ^ other.bits)
    }
}

impl fmt::Display for F2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        write_set(f, &self.labels())?;
        write!(f, "]")
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, labels: &[u32]) -> fmt::Result {
    write!(f, "{{")?;
    for (i, l) in labels.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{l}")?;
    }
    write!(f, "}}")
}

fn same_ground(a: &Arc<GroundSet>, b: &Arc<GroundSet>) -> Result<(), F2Error> {
    if Arc::ptr_eq(a, b) || a == b {
        Ok(())
    } else {
        Err(F2Error::GroundMismatch)
    }
}

/// |u ∩ v| mod 2.
pub fn pairing(u: &F2Vector, v: &F2Vector) -> Result<u8, F2Error> {
    same_ground(&u.ground, &v.ground)?;
    Ok(parity(u.bits & v.bits))
}

/// The symplectic form on 𝒫̄_ev(𝒳), computed on even lifts.
pub fn quotient_pairing(x: &F2Class, y: &F2Class) -> Result<u8, F2Error> {
    same_ground(&x.ground, &y.ground)?;
    let g = &x.ground;
    let xl = g
        .even_lift(x.bits)
        .ok_or_else(|| F2Error::NoEvenLift(x.to_string()))?;
    let yl = g
        .even_lift(y.bits)
        .ok_or_else(|| F2Error::NoEvenLift(y.to_string()))?;
    Ok(parity(xl & yl))
}

pub(crate) fn parity(bits: u64) -> u8 {
    (bits.count_ones() & 1) as u8
}

/// The four spaces built from 𝒫(𝒳).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Ambient {
    /// 𝒫(𝒳)
    Full,
    /// 𝒫_ev(𝒳)
    Even,
    /// 𝒫̄(𝒳)
    Quotient,
    /// 𝒫̄_ev(𝒳)
    QuotientEven,
}

impl Ambient {
    pub fn is_quotient(self) -> bool {
        matches!(self, Ambient::Quotient | Ambient::QuotientEven)
    }

    pub fn dim(self, ground: &GroundSet) -> usize {
        let n = ground.len();
        match self {
            Ambient::Full => n,
            Ambient::Even | Ambient::Quotient => n.saturating_sub(1),
            Ambient::QuotientEven => {
                if n % 2 == 1 {
                    n - 1
                } else {
                    n.saturating_sub(2)
                }
            }
        }
    }

    /// Whether the (canonical, for quotients) mask lies in this space.
    pub fn contains(self, ground: &GroundSet, bits: u64) -> bool {
        if bits & !ground.full_mask() != 0 {
            return false;
        }
        match self {
            Ambient::Full => true,
            Ambient::Even => bits.count_ones().is_multiple_of(2),
            Ambient::Quotient => bits & 1 == 0,
            Ambient::QuotientEven => bits & 1 == 0 && ground.even_lift(bits).is_some(),
        }
    }

    /// Enumerate every element of the space.
    pub fn elements(self, ground: &GroundSet) -> Vec<u64> {
        let n = ground.len();
        assert!(n <= 24, "refusing to enumerate 2^{n} subsets");
        (0..(1u64 << n))
            .filter(|&b| self.contains(ground, b))
            .collect()
    }

    /// The bilinear form used on this space: |x ∩ y| mod 2 for subsets, the
    /// form on even lifts for quotients.
    pub fn form(self, ground: &GroundSet, x: u64, y: u64) -> Option<u8> {
        if self.is_quotient() {
            Some(parity(ground.even_lift(x)? & ground.even_lift(y)?))
        } else {
            Some(parity(x & y))
        }
    }
}

/// A subspace held as a row-reduced basis with one pivot bit per row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2Subspace {
    ground: Arc<GroundSet>,
    ambient: Ambient,
    basis: Vec<u64>,
    pivots: Vec<u32>,
}

impl F2Subspace {
    pub fn zero(ground: &Arc<GroundSet>, ambient: Ambient) -> Self {
        Self {
            ground: Arc::clone(ground),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Span of raw masks. Quotient masks are canonicalised first.
    pub fn span_bits<I>(ground: &Arc<GroundSet>, ambient: Ambient, gens: I) -> Result<Self, F2Error>
    where
        I: IntoIterator<Item = u64>,
    {
        if ambient.is_quotient() && ground.is_empty() {
            return Err(F2Error::EmptyGround);
        }
        let mut s = Self::zero(ground, ambient);
        for g in gens {
            let g = if ambient.is_quotient() {
                ground.canonical(g & ground.full_mask())
            } else {
                g
            };
            if !ambient.contains(ground, g) {
                return Err(F2Error::NotInAmbient(
                    format!("{:?}", ground.labels_of(g)),
                    ambient,
                ));
            }
            s.insert(g);
        }
        Ok(s)
    }

    pub fn span_vectors<'a, I>(ground: &Arc<GroundSet>, ambient: Ambient, gens: I) -> Result<Self, F2Error>
    where
        I: IntoIterator<Item = &'a F2Vector>,
    {
        if ambient.is_quotient() {
            return Err(F2Error::AmbientMismatch);
        }
        let mut bits = Vec::new();
        for v in gens {
            same_ground(ground, &v.ground)?;
            bits.push(v.bits);
        }
        Self::span_bits(ground, ambient, bits)
    }

    pub fn span_classes<'a, I>(ground: &Arc<GroundSet>, ambient: Ambient, gens: I) -> Result<Self, F2Error>
    where
        I: IntoIterator<Item = &'a F2Class>,
    {
        if !ambient.is_quotient() {
            return Err(F2Error::AmbientMismatch);
        }
        let mut bits = Vec::new();
        for c in gens {
            same_ground(ground, &c.ground)?;
            bits.push(c.bits);
        }
        Self::span_bits(ground, ambient, bits)
    }

    /// Reduce `v` against the basis; returns the remainder and the
    /// coordinates (bit i set when basis row i was used).
    fn reduce(&self, mut v: u64) -> (u64, u64) {
        let mut coords = 0u64;
        for (i, (&row, &p)) in self.basis.iter().zip(&self.pivots).enumerate() {
            if v >> p & 1 == 1 {
                v ^= row;
                coords |= 1 << i;
            }
        }
        (v, coords)
    }

    fn insert(&mut self, v: u64) -> bool {
        let (r, _) = self.reduce(v);
        if r == 0 {
            return false;
        }
        let p = r.trailing_zeros();
        // keep rows fully reduced: clear the new pivot from existing rows
        for row in &mut self.basis {
            if *row >> p & 1 == 1 {
                *row ^= r;
            }
        }
        self.basis.push(r);
        self.pivots.push(p);
        true
    }

    pub fn ground(&self) -> &Arc<GroundSet> {
        &self.ground
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn basis(&self) -> &[u64] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.dim()
    }

    fn normalise(&self, bits: u64) -> u64 {
        if self.ambient.is_quotient() {
            self.ground.canonical(bits & self.ground.full_mask())
        } else {
            bits
        }
    }

    pub fn contains_bits(&self, bits: u64) -> bool {
        self.reduce(self.normalise(bits)).0 == 0
    }

    pub fn contains_vector(&self, v: &F2Vector) -> bool {
        !self.ambient.is_quotient() && self.ground == v.ground && self.contains_bits(v.bits)
    }

    pub fn contains_class(&self, c: &F2Class) -> bool {
        self.ambient.is_quotient() && self.ground == c.ground && self.contains_bits(c.bits)
    }

    /// Coordinates of a member in the stored basis.
    pub fn coordinates(&self, bits: u64) -> Option<u64> {
        let (r, c) = self.reduce(self.normalise(bits));
        (r == 0).then_some(c)
    }

    pub fn from_coordinates(&self, coords: u64) -> u64 {
        self.basis
            .iter()
            .enumerate()
            .filter(|(i, _)| coords >> i & 1 == 1)
            .fold(0, |acc, (_, &b)| acc ^ b)
    }

    /// All 2^dim members, indexed by coordinates.
    pub fn elements(&self) -> Vec<u64> {
        assert!(self.dim() <= 24);
        (0..(1u64 << self.dim()))
            .map(|c| self.from_coordinates(c))
            .collect()
    }

    pub fn intersection_dim(&self, other: &Self) -> Result<usize, F2Error> {
        same_ground(&self.ground, &other.ground)?;
        if self.ambient.is_quotient() != other.ambient.is_quotient() {
            return Err(F2Error::AmbientMismatch);
        }
        let mut sum = self.clone();
        for &b in &other.basis {
            sum.insert(b);
        }
        Ok(self.dim() + other.dim() - sum.dim())
    }

    pub fn form(&self, x: u64, y: u64) -> Option<u8> {
        self.ambient.form(&self.ground, x, y)
    }

    /// Whether the ambient form vanishes on the subspace.
    pub fn is_isotropic(&self) -> bool {
        self.basis.iter().all(|&x| {
            self.basis
                .iter()
                .all(|&y| self.form(x, y) == Some(0))
        })
    }
}

/// Rank of a list of row masks over F₂.
pub fn rank_of_rows(rows: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Inverse of a square F₂ matrix given by rows of `n` bits.
pub fn invert(rows: &[u64]) -> Option<Vec<u64>> {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut inv: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| a[r] >> col & 1 == 1)?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        for r in 0..n {
            if r != col && a[r] >> col & 1 == 1 {
                a[r] ^= a[col];
                inv[r] ^= inv[col];
            }
        }
    }
    Some(inv)
}

/// Outcome of checking that two subspaces are opposed Lagrangians.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LagrangianReport {
    pub ambient_dim: usize,
    pub dim0: usize,
    pub dim1: usize,
    pub isotropic0: bool,
    pub isotropic1: bool,
    pub intersection_dim: usize,
    pub duality_invertible: bool,
}

impl LagrangianReport {
    pub fn holds(&self) -> bool {
        self.isotropic0
            && self.isotropic1
            && self.dim0 * 2 == self.ambient_dim
            && self.dim1 * 2 == self.ambient_dim
            && self.intersection_dim == 0
            && self.duality_invertible
    }
}

/// Check that `l0`, `l1` are opposed Lagrangian subspaces of the quotient
/// space `ambient` over their common ground set.
pub fn is_lagrangian_pair(
    l0: &F2Subspace,
    l1: &F2Subspace,
    ambient: Ambient,
) -> Result<LagrangianReport, F2Error> {
    same_ground(&l0.ground, &l1.ground)?;
    if !ambient.is_quotient() || !l0.ambient.is_quotient() || !l1.ambient.is_quotient() {
        return Err(F2Error::AmbientMismatch);
    }
    let g = &l0.ground;
    let ambient_dim = ambient.dim(g);
    if ambient_dim % 2 == 1 {
        return Err(F2Error::OddAmbient(ambient_dim));
    }
    for s in [l0, l1] {
        if let Some(&b) = s.basis.iter().find(|&&b| !ambient.contains(g, b)) {
            return Err(F2Error::NotInAmbient(format!("{:?}", g.labels_of(b)), ambient));
        }
    }
    let isotropic0 = l0.is_isotropic();
    let isotropic1 = l1.is_isotropic();
    let intersection_dim = l0.intersection_dim(l1)?;
    let duality_invertible = l0.dim() == l1.dim()
        && invert(&gram(l0, l1)).is_some();
    Ok(LagrangianReport {
        ambient_dim,
        dim0: l0.dim(),
        dim1: l1.dim(),
        isotropic0,
        isotropic1,
        intersection_dim,
        duality_invertible,
    })
}

/// Rows i: bit j = (b0_i, b1_j).
fn gram(l0: &F2Subspace, l1: &F2Subspace) -> Vec<u64> {
    l0.basis
        .iter()
        .map(|&x| {
            l1.basis
                .iter()
                .enumerate()
                .fold(0u64, |acc, (j, &y)| {
                    acc | (u64::from(l0.form(x, y).unwrap_or(0)) << j)
                })
        })
        .collect()
}

/// The isomorphism L0 → L1*, x ↦ (x, ·), in the stored bases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualMap {
    /// Row i is the functional of basis vector i of L0, as bits over the basis of L1.
    pub matrix: Vec<u64>,
    pub inverse: Vec<u64>,
    l0: F2Subspace,
    l1: F2Subspace,
}

impl DualMap {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    /// The functional (x, ·) on L1 in L1-basis coordinates, for x ∈ L0.
    pub fn functional_of(&self, x: u64) -> Option<u64> {
        let c = self.l0.coordinates(x)?;
        Some(apply_rows(&self.matrix, c))
    }

    /// The x ∈ L0 with (x, ·) equal to the given functional.
    pub fn element_of(&self, functional: u64) -> u64 {
        self.l0.from_coordinates(apply_rows(&self.inverse, functional))
    }
}

/// Row vector `coords` times the matrix `rows`.
pub(crate) fn apply_rows(rows: &[u64], coords: u64) -> u64 {
    rows.iter()
        .enumerate()
        .filter(|(i, _)| coords >> i & 1 == 1)
        .fold(0, |acc, (_, &r)| acc ^ r)
}

pub fn dual_identification(l0: &F2Subspace, l1: &F2Subspace) -> Result<DualMap, F2Error> {
    let ambient = if l0.ground.len() % 2 == 1 {
        Ambient::Quotient
    } else {
        Ambient::QuotientEven
    };
    let report = is_lagrangian_pair(l0, l1, ambient)?;
    if !report.holds() {
        return Err(F2Error::NotLagrangian);
    }
    let matrix = gram(l0, l1);
    let inverse = invert(&matrix).ok_or(F2Error::NotLagrangian)?;
    Ok(DualMap {
        matrix,
        inverse,
        l0: l0.clone(),
        l1: l1.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g3() -> Arc<GroundSet> {
        GroundSet::range(3).unwrap()
    }

    #[test]
    fn pairing_examples() {
        let g = g3();
        let e = F2Vector::zero(&g);
        let u = F2Vector::from_labels(&g, &[0, 1]).unwrap();
        let v = F2Vector::from_labels(&g, &[1, 2]).unwrap();
        assert_eq!(pairing(&e, &v).unwrap(), 0);
        assert_eq!(pairing(&u, &v).unwrap(), 1);
        assert_eq!(pairing(&u, &u).unwrap(), 0);
    }

    #[test]
    fn pairing_rejects_foreign_ground() {
        let u = F2Vector::zero(&g3());
        let v = F2Vector::zero(&GroundSet::range(4).unwrap());
        assert_eq!(pairing(&u, &v), Err(F2Error::GroundMismatch));
    }

    #[test]
    fn labels_need_not_be_positions() {
        let g = GroundSet::new(vec![2, 5, 9]).unwrap();
        let v = F2Vector::from_labels(&g, &[9, 2]).unwrap();
        assert_eq!(v.bits(), 0b101);
        assert_eq!(v.labels(), vec![2, 9]);
        assert!(F2Vector::from_labels(&g, &[3]).is_err());
        assert!(GroundSet::new(vec![1, 1]).is_err());
    }

    #[test]
    fn quotient_pairing_examples() {
        let g = g3();
        let zero = F2Class::zero(&g).unwrap();
        let x = F2Class::from_labels(&g, &[0]).unwrap();
        let y = F2Class::from_labels(&g, &[1]).unwrap();
        assert_eq!(quotient_pairing(&zero, &y).unwrap(), 0);
        assert_eq!(quotient_pairing(&x, &y).unwrap(), 1);
        assert_eq!(quotient_pairing(&x, &x).unwrap(), 0);
    }

    #[test]
    fn odd_class_without_even_lift() {
        let g = GroundSet::range(4).unwrap();
        let x = F2Class::from_labels(&g, &[1]).unwrap();
        let y = F2Class::from_labels(&g, &[1, 2]).unwrap();
        assert!(matches!(quotient_pairing(&x, &y), Err(F2Error::NoEvenLift(_))));
    }

    #[test]
    fn class_of_complement_is_equal() {
        let g = g3();
        let l = F2Vector::from_labels(&g, &[0, 2]).unwrap();
        assert_eq!(l.class().unwrap(), l.complement().class().unwrap());
        assert_eq!(l.class().unwrap().labels(), vec![1]);
        let full = F2Vector::from_labels(&g, &[0, 1, 2]).unwrap();
        assert!(full.class().unwrap().is_zero());
    }

    #[test]
    fn span_examples() {
        let g = g3();
        let s = F2Subspace::span_bits(&g, Ambient::Full, std::iter::empty()).unwrap();
        assert_eq!(s.rank(), 0);
        let u = F2Vector::from_labels(&g, &[0, 1]).unwrap();
        let v = F2Vector::from_labels(&g, &[1, 2]).unwrap();
        let s = F2Subspace::span_vectors(&g, Ambient::Full, [&u, &v]).unwrap();
        assert_eq!(s.rank(), 2);
        assert!(s.contains_vector(&F2Vector::from_labels(&g, &[0, 2]).unwrap()));
        assert!(!s.contains_vector(&F2Vector::from_labels(&g, &[0]).unwrap()));
        let l = F2Class::from_labels(&g, &[0]).unwrap();
        let lc = F2Class::of(&F2Vector::from_labels(&g, &[1, 2]).unwrap()).unwrap();
        let s = F2Subspace::span_classes(&g, Ambient::Quotient, [&l, &lc]).unwrap();
        assert_eq!(s.rank(), 1);
    }

    #[test]
    fn span_rejects_mixed_and_outside() {
        let g = g3();
        let c = F2Class::from_labels(&g, &[0]).unwrap();
        assert_eq!(
            F2Subspace::span_classes(&g, Ambient::Full, [&c]),
            Err(F2Error::AmbientMismatch)
        );
        let v = F2Vector::from_labels(&g, &[0]).unwrap();
        assert!(matches!(
            F2Subspace::span_vectors(&g, Ambient::Even, [&v]),
            Err(F2Error::NotInAmbient(..))
        ));
    }

    #[test]
    fn lagrangian_examples() {
        let g = g3();
        let l0 = F2Subspace::span_bits(&g, Ambient::Quotient, [0b011]).unwrap();
        let l1 = F2Subspace::span_bits(&g, Ambient::Quotient, [0b110]).unwrap();
        let r = is_lagrangian_pair(&l0, &l1, Ambient::Quotient).unwrap();
        assert!(r.holds());
        let d = dual_identification(&l0, &l1).unwrap();
        assert_eq!(d.matrix, vec![1]);

        let r = is_lagrangian_pair(&l0, &l0, Ambient::Quotient).unwrap();
        assert!(!r.holds());
        assert_eq!(dual_identification(&l0, &l0), Err(F2Error::NotLagrangian));

        let g1 = GroundSet::range(1).unwrap();
        let z = F2Subspace::zero(&g1, Ambient::Quotient);
        assert!(is_lagrangian_pair(&z, &z, Ambient::Quotient).unwrap().holds());
        assert_eq!(dual_identification(&z, &z).unwrap().dim(), 0);
    }

    #[test]
    fn odd_ambient_is_rejected() {
        let g = GroundSet::range(4).unwrap();
        let z = F2Subspace::zero(&g, Ambient::Quotient);
        assert_eq!(
            is_lagrangian_pair(&z, &z, Ambient::Quotient),
            Err(F2Error::OddAmbient(3))
        );
    }

    #[test]
    fn quotient_even_dimension() {
        for n in 1..=8 {
            let g = GroundSet::range(n).unwrap();
            let expect = if n % 2 == 1 { n - 1 } else { n - 2 };
            let count = Ambient::QuotientEven.elements(&g).len();
            assert_eq!(count, 1 << expect, "n={n}");
            assert_eq!(Ambient::QuotientEven.dim(&g), expect);
        }
    }

    #[test]
    fn quotient_form_nondegenerate_exhaustive() {
        for n in 1..=8 {
            let g = GroundSet::range(n).unwrap();
            let space = F2Subspace::span_bits(
                &g,
                Ambient::QuotientEven,
                Ambient::QuotientEven.elements(&g),
            )
            .unwrap();
            let gram = gram(&space, &space);
            assert!(invert(&gram).is_some() || space.dim() == 0, "n={n}");
            assert!(!space.is_isotropic() || space.dim() == 0);
        }
    }

    #[test]
    fn canonical_class_exhaustive() {
        for n in 1..=8 {
            let g = GroundSet::range(n).unwrap();
            for bits in 0..(1u64 << n) {
                let c = F2Class::from_bits(&g, bits).unwrap();
                let cc = F2Class::from_bits(&g, !bits).unwrap();
                assert_eq!(c, cc);
                assert_eq!(F2Class::from_bits(&g, c.bits()).unwrap(), c);
                assert_eq!(c.bits() & 1, 0);
            }
        }
    }

    #[test]
    fn invert_roundtrip() {
        let m = vec![0b011, 0b010];
        let inv = invert(&m).unwrap();
        for i in 0..2 {
            let row = apply_rows(&m, inv[i]);
            assert_eq!(row, 1 << i);
        }
        assert!(invert(&[0b1, 0b1]).is_none());
    }
}

//! Jordan types of unipotent classes in Sp₂ₙ, SOₙ and GLₙ, the sequence
//! attached to a class, the component group A(u), the map π with kernel
//! 𝒦(u), the quotient Ā(u), and the Springer characters of T′.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2::{parity, Ambient, F2Subspace, GroundSet};
use crate::symbols::{Flavor, Interval, IntervalStructure, Sequence, SequenceError, SymbolPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    Symplectic,
    Orthogonal,
    GeneralLinear,
}

impl GroupKind {
    pub fn flavor(self) -> Option<Flavor> {
        match self {
            GroupKind::Symplectic => Some(Flavor::C),
            GroupKind::Orthogonal => Some(Flavor::BD),
            GroupKind::GeneralLinear => None,
        }
    }

    pub fn of_flavor(flavor: Flavor) -> Self {
        match flavor {
            Flavor::C => GroupKind::Symplectic,
            Flavor::BD => GroupKind::Orthogonal,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassError {
    #[error("partition is empty or has a zero part")]
    EmptyPartition,
    #[error("symplectic partitions need an even total, got {0}")]
    OddTotal(u32),
    #[error("part {part} occurs {count} times; it must occur an even number of times")]
    OddMultiplicity { part: u32, count: u32 },
    #[error("N = {n} cannot host {parts} parts with the required parity")]
    BadLength { n: usize, parts: usize },
    #[error("row sizes {0} and {1} do not fit the sequence length")]
    RowSizes(usize, usize),
    #[error("recipe output fails a validation pin: {0}")]
    PinFailure(String),
}

/// A partition with the group it is a Jordan type for.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct JordanType {
    kind: GroupKind,
    /// Parts in decreasing order.
    parts: Vec<u32>,
}

impl JordanType {
    pub fn new(mut parts: Vec<u32>, kind: GroupKind) -> Result<Self, ClassError> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(ClassError::EmptyPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let jt = Self { kind, parts };
        let total = jt.total();
        match kind {
            GroupKind::Symplectic => {
                if total % 2 == 1 {
                    return Err(ClassError::OddTotal(total));
                }
                jt.check_even_multiplicities(1)?;
            }
            GroupKind::Orthogonal => jt.check_even_multiplicities(0)?,
            GroupKind::GeneralLinear => {}
        }
        Ok(jt)
    }

    fn check_even_multiplicities(&self, residue: u32) -> Result<(), ClassError> {
        for (&part, &count) in &self.multiplicities() {
            if part % 2 == residue && count % 2 == 1 {
                return Err(ClassError::OddMultiplicity { part, count });
            }
        }
        Ok(())
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// i_e for each part size e.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    pub fn multiplicity(&self, e: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == e).count() as u32
    }

    /// Even part sizes (symplectic) or odd part sizes (orthogonal) present.
    pub fn delta(&self) -> Vec<u32> {
        let residue = match self.kind {
            GroupKind::Symplectic => 0,
            GroupKind::Orthogonal => 1,
            GroupKind::GeneralLinear => return Vec::new(),
        };
        self.multiplicities()
            .into_keys()
            .filter(|e| e % 2 == residue)
            .collect()
    }

    /// Smallest admissible N: N + 1 ≥ number of parts, N even for Sp and
    /// N ≢ total mod 2 for SO.
    pub fn default_n(&self) -> usize {
        let need = self.parts.len() - 1;
        let parity = match self.kind {
            GroupKind::Symplectic | GroupKind::GeneralLinear => 0,
            GroupKind::Orthogonal => ((self.total() + 1) % 2) as usize,
        };
        if need % 2 == parity {
            need
        } else {
            need + 1
        }
    }

    fn check_n(&self, n: usize) -> Result<(), ClassError> {
        let ok = n + 1 >= self.parts.len() && n % 2 == self.default_n() % 2;
        if ok {
            Ok(())
        } else {
            Err(ClassError::BadLength {
                n,
                parts: self.parts.len(),
            })
        }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = match self.kind {
            GroupKind::Symplectic => "Sp",
            GroupKind::Orthogonal => "SO",
            GroupKind::GeneralLinear => "GL",
        };
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}{} ({})", g, self.total(), parts.join(","))
    }
}

/// The two rows of the symbol attached to a class: parts padded to N + 1,
/// staircase λ_i + i added, then split by parity and halved.
pub fn symbol_rows(jt: &JordanType, n: usize) -> Result<(Vec<u32>, Vec<u32>), ClassError> {
    jt.check_n(n)?;
    let mut asc: Vec<u32> = vec![0; n + 1 - jt.parts.len()];
    asc.extend(jt.parts.iter().rev());
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, &p) in asc.iter().enumerate() {
        let x = p + i as u32;
        if x.is_multiple_of(2) {
            even.push(x / 2);
        } else {
            odd.push((x - 1) / 2);
        }
    }
    let (top, bottom) = match jt.kind {
        GroupKind::Orthogonal => (odd, even),
        _ => (even, odd),
    };
    Ok((top, bottom))
}

/// Interleave two rows as positions 0, 2, 4, … and 1, 3, 5, ….
pub fn interleave(first: &[u32], second: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(first.len() + second.len());
    for i in 0..first.len() + second.len() {
        out.push(if i % 2 == 0 { first[i / 2] } else { second[i / 2] });
    }
    out
}

/// The sequence a attached to a class, or why there is none.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassSequence {
    Special(Sequence),
    /// The interleaved rows violate the sequence conditions.
    NotSpecial { entries: Vec<u32>, reason: SequenceError },
    /// Every value occurs twice: a degenerate symbol with trivial structures.
    Degenerate { entries: Vec<u32> },
    /// General linear groups: trivial component groups.
    TypeA,
}

/// Sequence candidates from the symbol rows for a fixed N.
pub fn sequence_at(jt: &JordanType, n: usize) -> Result<ClassSequence, ClassError> {
    let flavor = match jt.kind.flavor() {
        Some(f) => f,
        None => return Ok(ClassSequence::TypeA),
    };
    let (top, bottom) = symbol_rows(jt, n)?;
    let big = n / 2 + 1;
    let orders: Vec<(&[u32], &[u32])> = if n.is_multiple_of(2) {
        if top.len() != big || bottom.len() != n / 2 {
            return Err(ClassError::RowSizes(top.len(), bottom.len()));
        }
        vec![(&top, &bottom)]
    } else {
        if top.len() != bottom.len() {
            return Err(ClassError::RowSizes(top.len(), bottom.len()));
        }
        vec![(&top, &bottom), (&bottom, &top)]
    };
    let mut first_err = None;
    for (x, y) in orders {
        let entries = interleave(x, y);
        match Sequence::new(entries.clone(), flavor) {
            Ok(s) => return Ok(ClassSequence::Special(s)),
            Err(SequenceError::NoSingletons)
                if (1..entries.len()).all(|i| entries[i - 1] <= entries[i]) =>
            {
                return Ok(ClassSequence::Degenerate { entries });
            }
            Err(e) => {
                first_err.get_or_insert(ClassSequence::NotSpecial { entries, reason: e });
            }
        }
    }
    Ok(first_err.expect("at least one orientation tried"))
}

/// Order-preserving matching of intervals with Δ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaMatch {
    pub pairs: Vec<(Interval, u32)>,
    pub holds: bool,
    pub diagnostic: Option<String>,
}

pub fn interval_delta_match(st: &IntervalStructure, jt: &JordanType) -> DeltaMatch {
    let delta = jt.delta();
    let pairs: Vec<(Interval, u32)> = st.intervals.iter().copied().zip(delta.iter().copied()).collect();
    let diagnostic = if st.intervals.len() != delta.len() {
        Some(format!(
            "{} intervals against {} elements of Δ",
            st.intervals.len(),
            delta.len()
        ))
    } else {
        pairs
            .iter()
            .find(|(i, e)| i.len() as u32 != jt.multiplicity(*e))
            .map(|(i, e)| {
                format!(
                    "interval {}..{} has size {} but i_{} = {}",
                    i.lo,
                    i.hi,
                    i.len(),
                    e,
                    jt.multiplicity(*e)
                )
            })
    };
    DeltaMatch {
        holds: diagnostic.is_none(),
        pairs,
        diagnostic,
    }
}

/// Quantities that must not change when N grows by 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableData {
    pub rank_parameter: usize,
    pub interval_sizes: Vec<usize>,
    pub t1_size: usize,
    pub family_size: usize,
}

pub fn stable_data(a: &Sequence) -> StableData {
    let st = IntervalStructure::new(a);
    let frak = crate::symbols::FrakStructure::new(a);
    StableData {
        rank_parameter: a.rank_parameter(),
        interval_sizes: st.intervals.iter().map(|i| i.len()).collect(),
        t1_size: st.enumerate_t().t1.len(),
        family_size: frak.prime().len(),
    }
}

/// Rank of the symbol held by the rows of a: Σ a − m² (one row longer)
/// or Σ a − m(m − 1) (rows of equal length m).
pub fn symbol_rank(entries: &[u32]) -> i64 {
    let sum: i64 = entries.iter().map(|&x| i64::from(x)).sum();
    let len = entries.len() as i64;
    if len % 2 == 1 {
        let m = len / 2;
        sum - m * m
    } else {
        let m = len / 2;
        sum - m * (m - 1)
    }
}

/// The rank n of the Weyl group for the class.
pub fn weyl_rank(jt: &JordanType) -> i64 {
    let t = i64::from(jt.total());
    match jt.kind {
        GroupKind::Symplectic => t / 2,
        GroupKind::Orthogonal => t / 2,
        GroupKind::GeneralLinear => t - 1,
    }
}

/// Outcome of the validation pins for a special class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pins {
    pub valid: bool,
    pub delta_match: DeltaMatch,
    pub stable: bool,
    pub rank_ok: bool,
}

impl Pins {
    pub fn hold(&self) -> bool {
        self.valid && self.delta_match.holds && self.stable && self.rank_ok
    }
}

/// Full result of running the recipe on a class.
#[derive(Debug, Clone)]
pub struct ClassResult {
    pub jordan: JordanType,
    pub n: usize,
    pub outcome: ClassSequence,
    pub pins: Option<Pins>,
    pub warnings: Vec<String>,
}

impl ClassResult {
    pub fn sequence(&self) -> Option<&Sequence> {
        match &self.outcome {
            ClassSequence::Special(s) => Some(s),
            _ => None,
        }
    }

    pub fn is_special(&self) -> bool {
        !matches!(self.outcome, ClassSequence::NotSpecial { .. })
    }
}

/// Run the recipe at N (default: smallest admissible) and check the pins.
pub fn sequence_of_class(jt: &JordanType, n_override: Option<usize>) -> Result<ClassResult, ClassError> {
    let n = n_override.unwrap_or_else(|| jt.default_n());
    let outcome = sequence_at(jt, n)?;
    let mut warnings = Vec::new();
    if jt.kind == GroupKind::Orthogonal && jt.total() < 7 {
        warnings.push(format!("SO{} is below the usual range n ≥ 7", jt.total()));
    }
    let pins = match &outcome {
        ClassSequence::Special(a) => {
            let st = IntervalStructure::new(a);
            let delta_match = interval_delta_match(&st, jt);
            let stable = match sequence_at(jt, n + 2)? {
                ClassSequence::Special(b) => stable_data(a) == stable_data(&b),
                _ => false,
            };
            let rank_ok = symbol_rank(a.entries()) == weyl_rank(jt);
            let pins = Pins {
                valid: true,
                delta_match,
                stable,
                rank_ok,
            };
            Some(pins)
        }
        _ => None,
    };
    Ok(ClassResult {
        jordan: jt.clone(),
        n,
        outcome,
        pins,
        warnings,
    })
}

/// Cross-check: all sequences of length N + 1 that pass the pins on their
/// own (validity, symbol rank, interval↔Δ matching). Entries are bounded
/// by the largest part plus N.
pub fn pin_search(jt: &JordanType, n: usize) -> Result<Vec<Sequence>, ClassError> {
    let flavor = jt.kind.flavor().ok_or(ClassError::EmptyPartition)?;
    jt.check_n(n)?;
    let bound = jt.parts[0] + n as u32;
    let rank = weyl_rank(jt);
    let len = n + 1;
    let sum = if len % 2 == 1 {
        rank + (len as i64 / 2).pow(2)
    } else {
        let m = len as i64 / 2;
        rank + m * (m - 1)
    };
    let mut found = Vec::new();
    let mut cur = Vec::with_capacity(len);
    search(len, bound, sum, &mut cur, &mut |entries: &[u32]| {
        if let Ok(a) = Sequence::new(entries.to_vec(), flavor) {
            if interval_delta_match(&IntervalStructure::new(&a), jt).holds {
                found.push(a);
            }
        }
    });
    Ok(found)
}

fn search(len: usize, bound: u32, remaining: i64, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if cur.len() == len {
        if remaining == 0 {
            visit(cur);
        }
        return;
    }
    let lo = cur.last().copied().unwrap_or(0);
    let slots = (len - cur.len()) as i64;
    for v in lo..=bound {
        // every later entry is at least v
        if i64::from(v) * slots > remaining {
            break;
        }
        if cur.len() >= 2 && cur[cur.len() - 2] >= v {
            continue;
        }
        cur.push(v);
        search(len, bound, remaining - i64::from(v), cur, visit);
        cur.pop();
    }
}

/// The map π from A(u) to the dual of the span of the block generators.
///
/// A(u) is modelled on subsets of the intervals: all subsets for flavor C,
/// even subsets for flavor BD. The target is the span of the blocks ℐ_s
/// (in the quotient by the full set for flavor BD).
#[derive(Debug, Clone)]
pub struct PiMap {
    pub flavor: Flavor,
    pub intervals: Arc<GroundSet>,
    /// Basis of A(u) as interval masks.
    pub domain_basis: Vec<u64>,
    /// The span of the block masks.
    pub target: F2Subspace,
    /// Row i: π of domain basis vector i, as bits over the target basis.
    pub matrix: Vec<u64>,
    /// Kernel 𝒦(u) as interval masks.
    pub kernel: Vec<u64>,
    pub image_rank: usize,
}

impl PiMap {
    pub fn new(st: &IntervalStructure) -> Self {
        let f = st.intervals.len();
        let intervals = GroundSet::range(f).expect("few intervals");
        let full = intervals.full_mask();
        let domain_basis: Vec<u64> = match st.flavor {
            Flavor::C => (0..f).map(|i| 1u64 << i).collect(),
            Flavor::BD => (1..f).map(|i| 1u64 | 1u64 << i).collect(),
        };
        let blocks = st.blocks.iter().map(|b| b.mask());
        let target = match st.flavor {
            Flavor::C => F2Subspace::span_bits(&intervals, Ambient::Full, blocks),
            Flavor::BD if f == 0 => Ok(F2Subspace::zero(&intervals, Ambient::Full)),
            Flavor::BD => F2Subspace::span_bits(&intervals, Ambient::Quotient, blocks),
        }
        .expect("block masks lie in the ambient");
        let eval = |x: u64| -> u64 {
            target
                .basis()
                .iter()
                .enumerate()
                .fold(0u64, |acc, (j, &b)| acc | u64::from(parity(x & b & full)) << j)
        };
        let matrix: Vec<u64> = domain_basis.iter().map(|&x| eval(x)).collect();
        let kernel = null_combinations(&matrix)
            .into_iter()
            .map(|c| crate::f2::apply_rows(&domain_basis, c))
            .collect();
        let image_rank = crate::f2::rank_of_rows(&matrix);
        Self {
            flavor: st.flavor,
            intervals,
            domain_basis,
            target,
            matrix,
            kernel,
            image_rank,
        }
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_basis.len()
    }

    /// |Ā(u)| = 2^rank.
    pub fn abar_order(&self) -> u64 {
        1u64 << self.image_rank
    }

    pub fn is_surjective(&self) -> bool {
        self.image_rank == self.target.dim()
    }

    /// π(x) for x a member of A(u), as bits over the target basis.
    pub fn apply(&self, x: u64) -> u64 {
        let full = self.intervals.full_mask();
        self.target
            .basis()
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, &b)| acc | u64::from(parity(x & b & full)) << j)
    }

    pub fn kernel_space(&self) -> F2Subspace {
        let ambient = match self.flavor {
            Flavor::C => Ambient::Full,
            Flavor::BD => Ambient::Even,
        };
        F2Subspace::span_bits(&self.intervals, ambient, self.kernel.iter().copied())
            .expect("kernel lies in A(u)")
    }

    /// Members of A(u), all subsets or all even subsets of the intervals.
    pub fn domain_elements(&self) -> Vec<u64> {
        (0..(1u64 << self.domain_dim()))
            .map(|c| crate::f2::apply_rows(&self.domain_basis, c))
            .collect()
    }

    /// Whether the character X ↦ |X ∩ α| of A(u) is trivial on 𝒦(u).
    pub fn factors_through_quotient(&self, alpha: u64) -> bool {
        self.kernel.iter().all(|&k| parity(k & alpha) == 0)
    }
}

/// Basis of {c : Σ c_i rows_i = 0}, as coefficient masks.
pub fn null_combinations(rows: &[u64]) -> Vec<u64> {
    // rows augmented with their index bit; a reduced row with zero value part
    // records a dependency
    let n = rows.len();
    assert!(n <= 32);
    let mut work: Vec<(u64, u64)> = rows.iter().enumerate().map(|(i, &r)| (r, 1u64 << i)).collect();
    let mut pivots: Vec<(u64, u64)> = Vec::new();
    let mut out = Vec::new();
    for (mut v, mut c) in work.drain(..) {
        for &(pv, pc) in &pivots {
            let p = pv.trailing_zeros();
            if v >> p & 1 == 1 {
                v ^= pv;
                c ^= pc;
            }
        }
        if v == 0 {
            out.push(c);
        } else {
            // keep pivots in reduced form
            let p = v.trailing_zeros();
            for (pv, pc) in pivots.iter_mut() {
                if *pv >> p & 1 == 1 {
                    *pv ^= v;
                    *pc ^= c;
                }
            }
            pivots.push((v, c));
        }
    }
    out
}

/// The Springer character attached to a member of T′.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpringerCharacter {
    pub pair: SymbolPair,
    /// α as an interval mask (canonical in the quotient for flavor BD).
    pub alpha: u64,
    pub in_t1: bool,
    pub factors_through_quotient: bool,
    /// α in the target basis when α lies in the block span.
    pub quotient_character: Option<u64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpringerError {
    #[error("{0} is not in T′")]
    NotInTPrime(SymbolPair),
}

pub fn springer_module(
    p: &SymbolPair,
    st: &IntervalStructure,
    pi: &PiMap,
) -> Result<SpringerCharacter, SpringerError> {
    let t = st.enumerate_t();
    if !t.prime.contains(p) {
        return Err(SpringerError::NotInTPrime(p.clone()));
    }
    let alpha = st
        .alpha_of(p)
        .ok_or_else(|| SpringerError::NotInTPrime(p.clone()))?;
    let quotient_character = if pi.target.contains_bits(alpha) {
        pi.target.coordinates(alpha)
    } else {
        None
    };
    Ok(SpringerCharacter {
        pair: p.clone(),
        alpha,
        in_t1: t.t1.contains(p),
        factors_through_quotient: pi.factors_through_quotient(alpha),
        quotient_character,
    })
}

/// T₁ with each member's character of Ā(u), in target coordinates.
pub fn irr_star(a: &Sequence) -> Vec<(SymbolPair, u64)> {
    let st = IntervalStructure::new(a);
    let pi = PiMap::new(&st);
    st.enumerate_t()
        .t1
        .into_iter()
        .map(|p| {
            let alpha = st.alpha_of(&p).expect("T₁ lies in the image of α");
            let c = pi.target.coordinates(alpha).expect("T₁ characters lie in the block span");
            (p, c)
        })
        .collect()
}

/// All valid Jordan types of the given kind and total.
pub fn jordan_types(kind: GroupKind, total: u32) -> Vec<JordanType> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    partitions(total, total, &mut cur, &mut |p| {
        if let Ok(jt) = JordanType::new(p.to_vec(), kind) {
            out.push(jt);
        }
    });
    out
}

fn partitions(rest: u32, max: u32, cur: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if rest == 0 {
        visit(cur);
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        partitions(rest - p, p, cur, visit);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(p: &[u32]) -> JordanType {
        JordanType::new(p.to_vec(), GroupKind::Symplectic).unwrap()
    }

    fn so(p: &[u32]) -> JordanType {
        JordanType::new(p.to_vec(), GroupKind::Orthogonal).unwrap()
    }

    #[test]
    fn jordan_type_examples() {
        assert_eq!(sp(&[2, 2]).delta(), vec![2]);
        assert!(matches!(
            JordanType::new(vec![3, 1], GroupKind::Symplectic),
            Err(ClassError::OddMultiplicity { count: 1, .. })
        ));
        assert_eq!(so(&[3, 3, 1]).delta(), vec![1, 3]);
        assert!(JordanType::new(vec![2, 1], GroupKind::Orthogonal).is_err());
    }

    #[test]
    fn recipe_sp4() {
        let r = sequence_of_class(&sp(&[2, 2]), None).unwrap();
        assert_eq!(r.sequence().unwrap().entries(), &[0, 1, 2]);
        assert!(r.pins.as_ref().unwrap().hold());
        let r = sequence_of_class(&sp(&[2, 1, 1]), None).unwrap();
        assert!(!r.is_special());
        let r = sequence_of_class(&sp(&[4]), None).unwrap();
        assert_eq!(r.sequence().unwrap().entries(), &[2]);
        let r = sequence_of_class(&sp(&[4]), Some(2)).unwrap();
        assert_eq!(r.sequence().unwrap().entries(), &[0, 0, 3]);
        let r = sequence_of_class(&sp(&[1, 1, 1, 1]), None).unwrap();
        assert_eq!(r.sequence().unwrap().entries(), &[0, 1, 1, 2, 2]);
    }

    #[test]
    fn recipe_orthogonal() {
        let r = sequence_of_class(&so(&[3, 1, 1]), None).unwrap();
        assert_eq!(r.sequence().unwrap().entries(), &[0, 1, 2]);
        assert!(r.pins.as_ref().unwrap().hold());
        let r = sequence_of_class(&so(&[7, 1]), None).unwrap();
        assert_eq!(r.sequence().unwrap().entries(), &[0, 4]);
        let r = sequence_of_class(&so(&[2, 2]), None).unwrap();
        assert!(matches!(r.outcome, ClassSequence::Degenerate { .. }));
    }

    #[test]
    fn type_a_is_trivial() {
        let jt = JordanType::new(vec![3, 2], GroupKind::GeneralLinear).unwrap();
        assert_eq!(sequence_of_class(&jt, None).unwrap().outcome, ClassSequence::TypeA);
    }

    #[test]
    fn bad_n_is_rejected() {
        assert!(matches!(
            sequence_of_class(&sp(&[2, 2]), Some(1)),
            Err(ClassError::BadLength { .. })
        ));
        assert!(sequence_of_class(&sp(&[2, 2]), Some(4)).is_ok());
    }

    #[test]
    fn pi_sp4_subregular() {
        let a = Sequence::new(vec![0, 1, 2], Flavor::C).unwrap();
        let st = IntervalStructure::new(&a);
        let pi = PiMap::new(&st);
        assert_eq!(pi.domain_dim(), 1);
        assert!(pi.kernel.is_empty());
        assert_eq!(pi.abar_order(), 2);
        assert!(pi.is_surjective());
    }

    #[test]
    fn pi_regular_has_full_kernel() {
        let a = Sequence::new(vec![0, 0, 3], Flavor::C).unwrap();
        let pi = PiMap::new(&IntervalStructure::new(&a));
        assert_eq!(pi.domain_dim(), 1);
        assert_eq!(pi.kernel, vec![1]);
        assert_eq!(pi.abar_order(), 1);
    }

    #[test]
    fn pi_orthogonal_mu_two() {
        let a = Sequence::new(vec![0, 1, 2], Flavor::BD).unwrap();
        let pi = PiMap::new(&IntervalStructure::new(&a));
        assert_eq!(pi.abar_order(), 2);
    }

    #[test]
    fn springer_characters_sp4() {
        let a = Sequence::new(vec![0, 1, 2], Flavor::C).unwrap();
        let st = IntervalStructure::new(&a);
        let pi = PiMap::new(&st);
        let op = |x: &[u32], y: &[u32]| SymbolPair::ordered(x.to_vec(), y.to_vec()).unwrap();
        let unit = springer_module(&op(&[0, 3], &[2]), &st, &pi).unwrap();
        assert_eq!(unit.alpha, 0);
        let other = springer_module(&op(&[0, 2], &[3]), &st, &pi).unwrap();
        assert_eq!(other.alpha, 1);
        assert!(other.in_t1 && other.factors_through_quotient);
        assert_eq!(irr_star(&a).len(), 2);
    }

    #[test]
    fn springer_outside_t1_does_not_factor() {
        let a = Sequence::new(vec![0, 0, 3], Flavor::C).unwrap();
        let st = IntervalStructure::new(&a);
        let pi = PiMap::new(&st);
        let t = st.enumerate_t();
        for p in &t.prime {
            let c = springer_module(p, &st, &pi).unwrap();
            assert_eq!(c.in_t1, c.factors_through_quotient);
        }
        let outside = SymbolPair::ordered(vec![0], vec![1, 4]).unwrap();
        assert!(springer_module(&outside, &st, &pi).is_err());
    }

    #[test]
    fn kernel_matches_exhaustive_definition() {
        for entries in [vec![0, 1, 2, 3, 4], vec![0, 1, 1, 2, 3], vec![0, 0, 3]] {
            let a = Sequence::new(entries, Flavor::C).unwrap();
            let st = IntervalStructure::new(&a);
            let pi = PiMap::new(&st);
            let k = pi.kernel_space();
            for x in pi.domain_elements() {
                let by_def = st.blocks.iter().all(|b| parity(x & b.mask()) == 0);
                assert_eq!(k.contains_bits(x), by_def);
            }
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(jordan_types(GroupKind::Symplectic, 4).len(), 4);
        assert_eq!(jordan_types(GroupKind::GeneralLinear, 5).len(), 7);
    }

    #[test]
    fn pin_search_is_not_discriminating() {
        let found = pin_search(&sp(&[2, 1, 1]), 2).unwrap();
        assert!(found.iter().any(|a| a.entries() == [0, 0, 3]));
        let found = pin_search(&sp(&[2, 2]), 2).unwrap();
        assert!(found.iter().any(|a| a.entries() == [0, 1, 2]));
    }
}

//! Interlacing sequences a₀ ≤ a₁ ≤ … ≤ a_N with strictly increasing even and
//! odd chains, their staircase shifts and the swap family a^X.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Which of the two sequence conventions is in force.
///
/// `C` uses the shift a_i + ⌈i/2⌉ and requires N even; `BD` uses a_i + ⌊i/2⌋
/// and allows either parity of N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Flavor {
    C,
    BD,
}

impl Flavor {
    /// Staircase offset added at position i.
    pub fn offset(self, i: usize) -> u32 {
        match self {
            Flavor::C => i.div_ceil(2) as u32,
            Flavor::BD => (i / 2) as u32,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("sequence is empty")]
    Empty,
    #[error("entries not weakly increasing at position {0}")]
    NotMonotone(usize),
    #[error("chain of positions ≡ {parity} mod 2 not strictly increasing at position {at}")]
    ChainNotStrict { parity: usize, at: usize },
    #[error("flavor C needs N even, got N = {0}")]
    OddLength(usize),
    #[error("no entry occurs exactly once")]
    NoSingletons,
    #[error("singleton index i_{s} = {index} has the wrong parity")]
    SingletonParity { s: usize, index: usize },
    #[error("swap index {0} is not admissible")]
    InadmissibleSwap(usize),
    #[error("enumeration would visit {0} candidates, above the limit {1}")]
    TooManyCandidates(u128, u128),
}

/// A validated sequence together with its singleton structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    flavor: Flavor,
    entries: Vec<u32>,
    /// Positions i₀ < i₁ < … whose value occurs once.
    singletons: Vec<usize>,
}

impl Sequence {
    pub fn new(entries: Vec<u32>, flavor: Flavor) -> Result<Self, SequenceError> {
        if entries.is_empty() {
            return Err(SequenceError::Empty);
        }
        let n = entries.len() - 1;
        if flavor == Flavor::C && n % 2 == 1 {
            return Err(SequenceError::OddLength(n));
        }
        if let Some(i) = (1..entries.len()).find(|&i| entries[i - 1] > entries[i]) {
            return Err(SequenceError::NotMonotone(i));
        }
        if let Some(i) = (2..entries.len()).find(|&i| entries[i - 2] >= entries[i]) {
            return Err(SequenceError::ChainNotStrict {
                parity: i % 2,
                at: i,
            });
        }
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &e in &entries {
            *counts.entry(e).or_default() += 1;
        }
        let singletons: Vec<usize> = (0..entries.len())
            .filter(|&i| counts[&entries[i]] == 1)
            .collect();
        if singletons.is_empty() {
            return Err(SequenceError::NoSingletons);
        }
        if let Some((s, &index)) = singletons.iter().enumerate().find(|(s, &i)| i % 2 != s % 2) {
            return Err(SequenceError::SingletonParity { s, index });
        }
        Ok(Self {
            flavor,
            entries,
            singletons,
        })
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// The length parameter N (entries are a₀..a_N).
    pub fn n(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn singleton_indices(&self) -> &[usize] {
        &self.singletons
    }

    /// The values a_{i₀} < a_{i₁} < … occurring exactly once.
    pub fn singleton_values(&self) -> Vec<u32> {
        self.singletons.iter().map(|&i| self.entries[i]).collect()
    }

    /// Index of the last singleton: 2M for flavor C, μ for flavor BD.
    pub fn top(&self) -> usize {
        self.singletons.len() - 1
    }

    /// M for flavor C, μ for flavor BD.
    pub fn rank_parameter(&self) -> usize {
        match self.flavor {
            Flavor::C => self.top() / 2,
            Flavor::BD => self.top(),
        }
    }

    /// Exponent e with |T₁| = 2^e: M for C, ⌊μ/2⌋ for BD.
    pub fn half_rank(&self) -> usize {
        self.top() / 2
    }

    /// The admissible swap indices: odd s < 2M for C, even s < μ for BD.
    pub fn admissible(&self) -> Vec<usize> {
        let first = match self.flavor {
            Flavor::C => 1,
            Flavor::BD => 0,
        };
        (first..self.top()).step_by(2).collect()
    }

    /// m_s, defined by i_{s+1} = i_s + 2m_s + 1.
    pub fn gap(&self, s: usize) -> usize {
        (self.singletons[s + 1] - self.singletons[s] - 1) / 2
    }

    /// â (flavor C) or å (flavor BD).
    pub fn shifted(&self) -> Vec<u32> {
        shift_entries(&self.entries, self.flavor)
    }

    /// Even-position and odd-position entries of the shifted sequence.
    pub fn shifted_rows(&self) -> (Vec<u32>, Vec<u32>) {
        split_rows(&self.shifted())
    }

    /// Even-position and odd-position entries of the sequence itself.
    pub fn rows(&self) -> (Vec<u32>, Vec<u32>) {
        split_rows(&self.entries)
    }
}

pub fn shift_entries(entries: &[u32], flavor: Flavor) -> Vec<u32> {
    entries
        .iter()
        .enumerate()
        .map(|(i, &e)| e + flavor.offset(i))
        .collect()
}

pub(crate) fn split_rows(entries: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let even = entries.iter().step_by(2).copied().collect();
    let odd = entries.iter().skip(1).step_by(2).copied().collect();
    (even, odd)
}

pub fn multiset(entries: &[u32]) -> Vec<u32> {
    let mut v = entries.to_vec();
    v.sort_unstable();
    v
}

/// The sequence a^X: for each s ∈ X the segment [i_s, i_{s+1}] is
/// transposed pairwise.
pub fn swap(a: &Sequence, x: &[usize]) -> Result<Vec<u32>, SequenceError> {
    let admissible = a.admissible();
    let mut out = a.entries.clone();
    for &s in x {
        if !admissible.contains(&s) {
            return Err(SequenceError::InadmissibleSwap(s));
        }
        let start = a.singletons[s];
        let end = a.singletons[s + 1];
        let mut i = start;
        while i < end {
            out.swap(i, i + 1);
            i += 2;
        }
    }
    Ok(out)
}

/// All a^X, X ranging over subsets of the admissible indices.
pub fn swap_family(a: &Sequence) -> BTreeSet<Vec<u32>> {
    let adm = a.admissible();
    (0..(1u64 << adm.len()))
        .map(|mask| {
            let x: Vec<usize> = adm
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &s)| s)
                .collect();
            swap(a, &x).expect("admissible by construction")
        })
        .collect()
}

/// Default cap on the number of chain assignments the oracle visits.
pub const DEFAULT_CANDIDATE_LIMIT: u128 = 1_000_000;

/// Brute-force oracle: every b with [b] = [a] and strictly increasing even
/// and odd chains whose shifted multiset equals that of a.
///
/// Elements are distributed between the two chains; each chain is then
/// forced to be sorted. Nothing here uses the singleton structure.
pub fn matching_set(a: &Sequence, limit: u128) -> Result<BTreeSet<Vec<u32>>, SequenceError> {
    let target = multiset(&a.shifted());
    let all = chain_arrangements(a.entries(), limit)?;
    Ok(all
        .into_iter()
        .filter(|b| multiset(&shift_entries(b, a.flavor)) == target)
        .collect())
}

/// The set E: arrangements of the multiset [a] with both chains strictly increasing.
pub fn chain_arrangements(entries: &[u32], limit: u128) -> Result<Vec<Vec<u32>>, SequenceError> {
    let len = entries.len();
    let even_len = len.div_ceil(2);
    let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
    for &e in entries {
        *counts.entry(e).or_default() += 1;
    }
    if counts.values().any(|&c| c > 2) {
        return Ok(Vec::new());
    }
    let values: Vec<(u32, usize)> = counts.into_iter().collect();
    let free = values.iter().filter(|(_, c)| *c == 1).count();
    let estimate = 1u128 << free.min(127);
    if estimate > limit {
        return Err(SequenceError::TooManyCandidates(estimate, limit));
    }
    let mut out = Vec::new();
    let mut even = Vec::with_capacity(even_len);
    let mut odd = Vec::with_capacity(len - even_len);
    place(&values, 0, even_len, len - even_len, &mut even, &mut odd, &mut out);
    Ok(out)
}

fn place(
    values: &[(u32, usize)],
    k: usize,
    even_len: usize,
    odd_len: usize,
    even: &mut Vec<u32>,
    odd: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
) {
    if even.len() > even_len || odd.len() > odd_len {
        return;
    }
    if k == values.len() {
        let mut b = Vec::with_capacity(even_len + odd_len);
        for i in 0..even_len + odd_len {
            b.push(if i % 2 == 0 { even[i / 2] } else { odd[i / 2] });
        }
        out.push(b);
        return;
    }
    let (v, c) = values[k];
    if c == 2 {
        even.push(v);
        odd.push(v);
        place(values, k + 1, even_len, odd_len, even, odd, out);
        even.pop();
        odd.pop();
    } else {
        even.push(v);
        place(values, k + 1, even_len, odd_len, even, odd, out);
        even.pop();
        odd.push(v);
        place(values, k + 1, even_len, odd_len, even, odd, out);
        odd.pop();
    }
}

/// Number of classes of sequences when a two-row array is identified with
/// the one obtained by interchanging its rows.
pub fn count_up_to_row_interchange(set: &BTreeSet<Vec<u32>>) -> usize {
    set.iter()
        .map(|b| {
            let (e, o) = split_rows(b);
            if e <= o {
                (e, o)
            } else {
                (o, e)
            }
        })
        .collect::<BTreeSet<_>>()
        .len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[u32], f: Flavor) -> Sequence {
        Sequence::new(v.to_vec(), f).unwrap()
    }

    #[test]
    fn validate_examples() {
        let a = seq(&[0, 1, 2], Flavor::C);
        assert_eq!(a.rank_parameter(), 1);
        assert_eq!(a.singleton_indices(), &[0, 1, 2]);
        let b = seq(&[0, 0, 1], Flavor::C);
        assert_eq!(b.rank_parameter(), 0);
        assert_eq!(b.singleton_indices(), &[2]);
        assert_eq!(
            Sequence::new(vec![1, 0, 2], Flavor::C),
            Err(SequenceError::NotMonotone(1))
        );
    }

    #[test]
    fn validate_errors() {
        assert_eq!(
            Sequence::new(vec![0, 1], Flavor::C),
            Err(SequenceError::OddLength(1))
        );
        assert!(matches!(
            Sequence::new(vec![0, 0, 0], Flavor::C),
            Err(SequenceError::ChainNotStrict { .. })
        ));
        assert_eq!(
            Sequence::new(vec![0, 0, 1, 1], Flavor::BD),
            Err(SequenceError::NoSingletons)
        );
        assert_eq!(Sequence::new(vec![], Flavor::BD), Err(SequenceError::Empty));
    }

    #[test]
    fn bd_mu_matches_parity_of_n() {
        let a = seq(&[0, 1, 2], Flavor::BD);
        assert_eq!(a.rank_parameter(), 2);
        let b = seq(&[0, 4], Flavor::BD);
        assert_eq!(b.rank_parameter(), 1);
    }

    #[test]
    fn shifts() {
        assert_eq!(seq(&[0, 1, 2], Flavor::C).shifted(), vec![0, 2, 3]);
        assert_eq!(seq(&[0, 1, 2], Flavor::BD).shifted(), vec![0, 1, 3]);
    }

    #[test]
    fn swap_examples() {
        let a = seq(&[0, 1, 2], Flavor::C);
        assert_eq!(swap(&a, &[]).unwrap(), vec![0, 1, 2]);
        assert_eq!(swap(&a, &[1]).unwrap(), vec![0, 2, 1]);
        assert_eq!(swap(&a, &[0]), Err(SequenceError::InadmissibleSwap(0)));
        let b = seq(&[0, 1, 2], Flavor::BD);
        assert_eq!(swap(&b, &[0]).unwrap(), vec![1, 0, 2]);
    }

    #[test]
    fn arrangements_of_small_multiset() {
        let e = chain_arrangements(&[0, 1, 2], DEFAULT_CANDIDATE_LIMIT).unwrap();
        let e: BTreeSet<_> = e.into_iter().collect();
        let expect: BTreeSet<Vec<u32>> =
            [vec![0, 1, 2], vec![0, 2, 1], vec![1, 0, 2]].into_iter().collect();
        assert_eq!(e, expect);
    }

    #[test]
    fn matching_examples() {
        let a = seq(&[0, 1, 2], Flavor::C);
        let m = matching_set(&a, DEFAULT_CANDIDATE_LIMIT).unwrap();
        let expect: BTreeSet<Vec<u32>> = [vec![0, 1, 2], vec![0, 2, 1]].into_iter().collect();
        assert_eq!(m, expect);

        let a = seq(&[0, 1, 2], Flavor::BD);
        let m = matching_set(&a, DEFAULT_CANDIDATE_LIMIT).unwrap();
        let expect: BTreeSet<Vec<u32>> = [vec![0, 1, 2], vec![1, 0, 2]].into_iter().collect();
        assert_eq!(m, expect);

        let a = seq(&[0, 0, 1], Flavor::C);
        let m = matching_set(&a, DEFAULT_CANDIDATE_LIMIT).unwrap();
        assert_eq!(m.len(), 1);
        assert!(m.contains(&vec![0, 0, 1]));
    }

    #[test]
    fn odd_n_counts_rows_up_to_interchange() {
        let a = seq(&[0, 1], Flavor::BD);
        let m = matching_set(&a, DEFAULT_CANDIDATE_LIMIT).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(count_up_to_row_interchange(&m), 1);
    }

    #[test]
    fn candidate_limit_is_enforced() {
        let a = seq(&[0, 1, 2, 3, 4, 5, 6], Flavor::C);
        assert!(matches!(
            matching_set(&a, 8),
            Err(SequenceError::TooManyCandidates(128, 8))
        ));
    }
}

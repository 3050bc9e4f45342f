//! Intervals of once-occurring shifted values, the blocks I_s, the symbols
//! (A_α, B_α) and the sets T ⊇ T′ ⊇ T₁.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::pairs::{consecutive_free, minus, SymbolPair};
use super::sequence::{Flavor, Sequence};

/// Inclusive run lo..=hi of consecutive integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Interval {
    pub lo: u32,
    pub hi: u32,
}

impl Interval {
    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: u32) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn values(&self) -> impl Iterator<Item = u32> {
        self.lo..=self.hi
    }
}

/// The block I_s = {ĥ_{i_s}, …, ĥ_{i_{s+1}}} of an admissible index s.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Block {
    pub s: usize,
    pub span: Vec<u32>,
    /// Maximal runs of consecutive integers inside the span, increasing.
    pub pieces: Vec<Interval>,
    /// Indices (into the interval list) of the intervals contained in the span.
    pub intervals: Vec<usize>,
    /// First and last piece odd, middle pieces even (vacuous for one piece).
    pub parity_ok: bool,
    /// Every piece is one of the intervals.
    pub pieces_are_intervals: bool,
}

impl Block {
    /// The block as a subset of the interval list.
    pub fn mask(&self) -> u64 {
        self.intervals.iter().fold(0, |m, &i| m | 1 << i)
    }
}

/// Interval data of a shifted sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalStructure {
    pub flavor: Flavor,
    pub shifted: Vec<u32>,
    /// Values occurring once in the shifted sequence (the set J).
    pub once: Vec<u32>,
    /// All maximal runs inside J.
    pub runs: Vec<Interval>,
    /// The intervals ℐ: for flavor C the runs not starting at 0.
    pub intervals: Vec<Interval>,
    pub blocks: Vec<Block>,
    /// Values of J outside every interval (the set H).
    pub residue: Vec<u32>,
    /// Intervals lying in no block.
    pub unassigned: Vec<usize>,
    pub a_empty: Vec<u32>,
    pub b_empty: Vec<u32>,
}

pub fn maximal_runs(sorted: &[u32]) -> Vec<Interval> {
    let mut runs: Vec<Interval> = Vec::new();
    for &v in sorted {
        match runs.last_mut() {
            Some(r) if r.hi + 1 == v => r.hi = v,
            _ => runs.push(Interval { lo: v, hi: v }),
        }
    }
    runs
}

impl IntervalStructure {
    pub fn new(a: &Sequence) -> Self {
        let flavor = a.flavor();
        let shifted = a.shifted();
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &v in &shifted {
            *counts.entry(v).or_default() += 1;
        }
        let once: Vec<u32> = counts
            .iter()
            .filter(|(_, &c)| c == 1)
            .map(|(&v, _)| v)
            .collect();
        let runs = maximal_runs(&once);
        let intervals: Vec<Interval> = runs
            .iter()
            .copied()
            .filter(|r| flavor == Flavor::BD || r.lo != 0)
            .collect();
        let residue: Vec<u32> = once
            .iter()
            .copied()
            .filter(|&v| !intervals.iter().any(|i| i.contains(v)))
            .collect();

        let idx = a.singleton_indices();
        let blocks: Vec<Block> = a
            .admissible()
            .into_iter()
            .map(|s| {
                let span: BTreeSet<u32> = shifted[idx[s]..=idx[s + 1]].iter().copied().collect();
                let span: Vec<u32> = span.into_iter().collect();
                let pieces = maximal_runs(&span);
                let members: Vec<usize> = intervals
                    .iter()
                    .enumerate()
                    .filter(|(_, i)| span.binary_search(&i.lo).is_ok() && span.binary_search(&i.hi).is_ok()
                        && i.values().all(|v| span.binary_search(&v).is_ok()))
                    .map(|(k, _)| k)
                    .collect();
                let t = pieces.len();
                let parity_ok = t == 1
                    || pieces.iter().enumerate().all(|(h, p)| {
                        if h == 0 || h == t - 1 {
                            p.len() % 2 == 1
                        } else {
                            p.len() % 2 == 0
                        }
                    });
                let pieces_are_intervals = pieces.iter().all(|p| intervals.contains(p));
                Block {
                    s,
                    span,
                    pieces,
                    intervals: members,
                    parity_ok,
                    pieces_are_intervals,
                }
            })
            .collect();
        let unassigned: Vec<usize> = (0..intervals.len())
            .filter(|k| !blocks.iter().any(|b| b.intervals.contains(k)))
            .collect();
        let (a_empty, b_empty) = a.shifted_rows();
        Self {
            flavor,
            shifted,
            once,
            runs,
            intervals,
            blocks,
            residue,
            unassigned,
            a_empty,
            b_empty,
        }
    }

    pub fn interval_count(&self) -> usize {
        self.intervals.len()
    }

    /// The intervals partition into the blocks' interval sets.
    pub fn partition_holds(&self) -> bool {
        self.unassigned.is_empty()
    }

    fn ordered(&self) -> bool {
        self.flavor == Flavor::C
    }

    /// (A_α, B_α) for α a subset (bit mask) of the intervals.
    pub fn symbol_from_alpha(&self, alpha: u64) -> SymbolPair {
        let in_a: BTreeSet<u32> = self.a_empty.iter().copied().collect();
        let in_b: BTreeSet<u32> = self.b_empty.iter().copied().collect();
        let mut first: Vec<u32> = in_a.intersection(&in_b).copied().collect();
        let mut second = first.clone();
        for (k, iv) in self.intervals.iter().enumerate() {
            let swapped = alpha >> k & 1 == 1;
            for v in iv.values() {
                let (from_a, from_b) = (in_a.contains(&v), in_b.contains(&v));
                if from_a != swapped && (from_a || from_b) {
                    first.push(v);
                } else if from_a || from_b {
                    second.push(v);
                }
            }
        }
        for &v in &self.residue {
            if in_a.contains(&v) {
                first.push(v);
            } else if in_b.contains(&v) {
                second.push(v);
            }
        }
        SymbolPair::from_rows(first, second, self.ordered()).expect("disjoint placement")
    }

    /// Canonical α for flavor BD: the representative of {α, ℐ∖α} without the
    /// first interval. Identity for flavor C.
    pub fn canonical_alpha(&self, alpha: u64) -> u64 {
        let full = mask(self.intervals.len());
        if self.flavor == Flavor::BD && alpha & 1 == 1 {
            alpha ^ full
        } else {
            alpha & full
        }
    }

    /// All α indexing T: subsets of ℐ for C, classes in 𝒫̄(ℐ) for BD.
    pub fn alphas(&self) -> Vec<u64> {
        let n = self.intervals.len();
        (0..(1u64 << n))
            .filter(|&a| self.canonical_alpha(a) == a)
            .collect()
    }

    /// The α (canonical) with (A_α, B_α) = p, if any.
    pub fn alpha_of(&self, p: &SymbolPair) -> Option<u64> {
        let orientations: Vec<(&[u32], &[u32])> = if self.ordered() {
            vec![(p.first(), p.second())]
        } else {
            vec![(p.first(), p.second()), (p.second(), p.first())]
        };
        for (first, _) in orientations {
            let mut alpha = 0u64;
            let mut ok = true;
            for (k, iv) in self.intervals.iter().enumerate() {
                let keep: Vec<u32> = iv.values().filter(|v| self.a_empty.contains(v)).collect();
                let moved: Vec<u32> = iv.values().filter(|v| self.b_empty.contains(v)).collect();
                let here: Vec<u32> = iv.values().filter(|v| first.contains(v)).collect();
                if here == keep {
                    continue;
                } else if here == moved {
                    alpha |= 1 << k;
                } else {
                    ok = false;
                    break;
                }
            }
            if ok {
                let alpha = self.canonical_alpha(alpha);
                let q = self.symbol_from_alpha(alpha);
                let target = if self.ordered() { p.clone() } else { p.as_unordered() };
                if q == target {
                    return Some(alpha);
                }
            }
        }
        None
    }

    /// α_X: the union of the blocks of the indices in X.
    pub fn alpha_of_swaps(&self, x: &[usize]) -> u64 {
        self.blocks
            .iter()
            .filter(|b| x.contains(&b.s))
            .fold(0, |m, b| m | b.mask())
    }

    pub fn base_symbol(&self) -> SymbolPair {
        SymbolPair::from_rows(self.a_empty.clone(), self.b_empty.clone(), self.ordered())
            .expect("rows of a valid shifted sequence are sets")
    }

    /// T, T′ and T₁ by exhaustive placement of the shifted multiset.
    pub fn enumerate_t(&self) -> TSets {
        let mut counts: BTreeMap<u32, usize> = BTreeMap::new();
        for &v in &self.shifted {
            *counts.entry(v).or_default() += 1;
        }
        let mut all = BTreeSet::new();
        if counts.values().all(|&c| c <= 2) {
            let values: Vec<(u32, usize)> = counts.into_iter().collect();
            let mut first = Vec::new();
            let mut second = Vec::new();
            self.place(&values, 0, &mut first, &mut second, &mut all);
        }
        let base = self.base_symbol();
        let base_sizes = sorted_pair(base.sizes(), self.ordered());
        let base_minus = minus_multiset(&base, self.flavor);
        let all: Vec<SymbolPair> = all.into_iter().collect();
        let prime: Vec<SymbolPair> = all
            .iter()
            .filter(|p| sorted_pair(p.sizes(), self.ordered()) == base_sizes)
            .cloned()
            .collect();
        let t1: Vec<SymbolPair> = prime
            .iter()
            .filter(|p| minus_multiset(p, self.flavor) == base_minus)
            .cloned()
            .collect();
        TSets { all, prime, t1 }
    }

    fn place(
        &self,
        values: &[(u32, usize)],
        k: usize,
        first: &mut Vec<u32>,
        second: &mut Vec<u32>,
        out: &mut BTreeSet<SymbolPair>,
    ) {
        if k == values.len() {
            if consecutive_free(first)
                && consecutive_free(second)
                && !(self.flavor == Flavor::C && second.first() == Some(&0))
            {
                let p = SymbolPair::from_rows(first.clone(), second.clone(), self.ordered())
                    .expect("sorted placement");
                out.insert(p);
            }
            return;
        }
        let (v, c) = values[k];
        // values arrive in increasing order, so rows stay sorted; prune early
        let fits = |row: &Vec<u32>| row.last().is_none_or(|&l| l + 1 < v);
        if c == 2 {
            if fits(first) && fits(second) {
                first.push(v);
                second.push(v);
                self.place(values, k + 1, first, second, out);
                first.pop();
                second.pop();
            }
        } else {
            if fits(first) {
                first.push(v);
                self.place(values, k + 1, first, second, out);
                first.pop();
            }
            if fits(second) {
                second.push(v);
                self.place(values, k + 1, first, second, out);
                second.pop();
            }
        }
    }
}

fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn sorted_pair(p: (usize, usize), ordered: bool) -> (usize, usize) {
    if ordered || p.0 <= p.1 {
        p
    } else {
        (p.1, p.0)
    }
}

fn minus_multiset(p: &SymbolPair, flavor: Flavor) -> Option<Vec<u32>> {
    minus(p, flavor).ok().map(|m| m.multiset())
}

/// T ⊇ T′ ⊇ T₁, each sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TSets {
    pub all: Vec<SymbolPair>,
    pub prime: Vec<SymbolPair>,
    pub t1: Vec<SymbolPair>,
}

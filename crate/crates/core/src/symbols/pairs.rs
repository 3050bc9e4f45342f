//! Pairs of finite integer sets: the symbols (A, B) and the pairs (𝔄, 𝔅).

use std::fmt;

use serde::ser::SerializeStruct;
use serde::Serialize;
use thiserror::Error;

use super::sequence::Flavor;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error("row {0:?} is not strictly increasing")]
    NotASet(Vec<u32>),
    #[error("removing the staircase from {0:?} gives a repeated or negative entry")]
    MalformedStaircase(Vec<u32>),
}

/// Two sorted sets of nonnegative integers, ordered or unordered.
///
/// Unordered pairs are stored with the lexicographically smaller row first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolPair {
    first: Vec<u32>,
    second: Vec<u32>,
    ordered: bool,
}

impl SymbolPair {
    pub fn ordered(first: Vec<u32>, second: Vec<u32>) -> Result<Self, PairError> {
        check_set(&first)?;
        check_set(&second)?;
        Ok(Self {
            first,
            second,
            ordered: true,
        })
    }

    pub fn unordered(x: Vec<u32>, y: Vec<u32>) -> Result<Self, PairError> {
        check_set(&x)?;
        check_set(&y)?;
        let (first, second) = if x <= y { (x, y) } else { (y, x) };
        Ok(Self {
            first,
            second,
            ordered: false,
        })
    }

    /// Build from rows that may be unsorted; duplicates are rejected.
    pub(crate) fn from_rows(mut x: Vec<u32>, mut y: Vec<u32>, ordered: bool) -> Result<Self, PairError> {
        x.sort_unstable();
        y.sort_unstable();
        if ordered {
            Self::ordered(x, y)
        } else {
            Self::unordered(x, y)
        }
    }

    pub fn first(&self) -> &[u32] {
        &self.first
    }

    pub fn second(&self) -> &[u32] {
        &self.second
    }

    pub fn is_ordered(&self) -> bool {
        self.ordered
    }

    pub fn as_unordered(&self) -> Self {
        Self::unordered(self.first.clone(), self.second.clone()).expect("rows already checked")
    }

    /// Row sizes, unordered pairs giving the sorted pair.
    pub fn sizes(&self) -> (usize, usize) {
        (self.first.len(), self.second.len())
    }

    /// Both rows merged as a multiset.
    pub fn multiset(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.first.iter().chain(&self.second).copied().collect();
        v.sort_unstable();
        v
    }

    /// No row contains two consecutive integers.
    pub fn is_consecutive_free(&self) -> bool {
        consecutive_free(&self.first) && consecutive_free(&self.second)
    }
}

impl fmt::Display for SymbolPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: &[u32]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(f, "({{{}}},{{{}}})", row(&self.first), row(&self.second))
    }
}

impl Serialize for SymbolPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SymbolPair", 2)?;
        st.serialize_field("A", &self.first)?;
        st.serialize_field("B", &self.second)?;
        st.end()
    }
}

fn check_set(v: &[u32]) -> Result<(), PairError> {
    if v.windows(2).all(|w| w[0] < w[1]) {
        Ok(())
    } else {
        Err(PairError::NotASet(v.to_vec()))
    }
}

pub(crate) fn consecutive_free(v: &[u32]) -> bool {
    v.windows(2).all(|w| w[1] > w[0] + 1)
}

/// Remove the staircase: x_k − k from the first row and, for flavor C,
/// y_k − (k+1) from the second (y_k − k for BD).
pub fn minus(p: &SymbolPair, flavor: Flavor) -> Result<SymbolPair, PairError> {
    let second_offset = match flavor {
        Flavor::C => 1,
        Flavor::BD => 0,
    };
    let a = destair(&p.first, 0)?;
    let b = destair(&p.second, second_offset)?;
    if p.ordered {
        SymbolPair::ordered(a, b)
    } else {
        SymbolPair::unordered(a, b)
    }
}

fn destair(row: &[u32], offset: u32) -> Result<Vec<u32>, PairError> {
    let mut out = Vec::with_capacity(row.len());
    for (k, &x) in row.iter().enumerate() {
        let shift = k as u32 + offset;
        let v = x
            .checked_sub(shift)
            .ok_or_else(|| PairError::MalformedStaircase(row.to_vec()))?;
        if out.last().is_some_and(|&l| l >= v) {
            return Err(PairError::MalformedStaircase(row.to_vec()));
        }
        out.push(v);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(a: &[u32], b: &[u32]) -> SymbolPair {
        SymbolPair::ordered(a.to_vec(), b.to_vec()).unwrap()
    }

    #[test]
    fn minus_examples_c() {
        assert_eq!(minus(&op(&[0, 3], &[2]), Flavor::C).unwrap(), op(&[0, 2], &[1]));
        assert_eq!(minus(&op(&[0, 2], &[3]), Flavor::C).unwrap(), op(&[0, 1], &[2]));
    }

    #[test]
    fn minus_example_bd() {
        let p = SymbolPair::unordered(vec![0, 2], vec![1, 3]).unwrap();
        let m = minus(&p, Flavor::BD).unwrap();
        assert_eq!(m, SymbolPair::unordered(vec![0, 1], vec![1, 2]).unwrap());
    }

    #[test]
    fn minus_rejects_consecutive_rows() {
        assert!(matches!(
            minus(&op(&[0, 1], &[]), Flavor::C),
            Err(PairError::MalformedStaircase(_))
        ));
        assert!(matches!(
            minus(&op(&[], &[0]), Flavor::C),
            Err(PairError::MalformedStaircase(_))
        ));
    }

    #[test]
    fn unordered_is_canonical() {
        let p = SymbolPair::unordered(vec![2], vec![0, 1]).unwrap();
        let q = SymbolPair::unordered(vec![0, 1], vec![2]).unwrap();
        assert_eq!(p, q);
        assert_eq!(p.first(), &[0, 1]);
    }

    #[test]
    fn rows_must_be_sets() {
        assert!(SymbolPair::ordered(vec![1, 1], vec![]).is_err());
    }
}

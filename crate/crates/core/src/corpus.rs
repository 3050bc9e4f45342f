//! Test corpora: the classes of Sp₂ₙ and SOₙ up to a rank bound and seeded
//! random sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::springer::{jordan_types, sequence_of_class, ClassResult, GroupKind};
use crate::symbols::{Flavor, Sequence};

/// Every class of Sp₂ₙ for 1 ≤ n ≤ max_rank with its recipe result.
pub fn symplectic_classes(max_rank: u32) -> Vec<ClassResult> {
    (1..=max_rank)
        .flat_map(|n| jordan_types(GroupKind::Symplectic, 2 * n))
        .map(|jt| sequence_of_class(&jt, None).expect("default N is admissible"))
        .collect()
}

/// Every class of SOₙ for 1 ≤ n ≤ max_dim with its recipe result.
pub fn orthogonal_classes(max_dim: u32) -> Vec<ClassResult> {
    (1..=max_dim)
        .flat_map(|n| jordan_types(GroupKind::Orthogonal, n))
        .map(|jt| sequence_of_class(&jt, None).expect("default N is admissible"))
        .collect()
}

/// Sequences of the special classes of a corpus.
pub fn special_sequences(classes: &[ClassResult]) -> Vec<Sequence> {
    classes.iter().filter_map(|c| c.sequence().cloned()).collect()
}

/// `count` valid sequences with N ≤ max_n and entries ≤ max_entry, drawn by
/// rejection sampling from a seeded generator. Flavor C only draws even N.
pub fn random_sequences(flavor: Flavor, count: usize, max_n: usize, max_entry: u32, seed: u64) -> Vec<Sequence> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = match flavor {
            Flavor::C => 2 * rng.gen_range(0..=max_n / 2),
            Flavor::BD => rng.gen_range(0..=max_n),
        };
        let mut entries: Vec<u32> = (0..=n).map(|_| rng.gen_range(0..=max_entry)).collect();
        entries.sort_unstable();
        if let Ok(a) = Sequence::new(entries, flavor) {
            out.push(a);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_sequences_are_deterministic() {
        let a = random_sequences(Flavor::C, 20, 8, 8, 7);
        let b = random_sequences(Flavor::C, 20, 8, 8, 7);
        assert_eq!(a, b);
        assert!(a.iter().all(|s| s.n() % 2 == 0 && s.n() <= 8));
    }

    #[test]
    fn sp4_corpus() {
        let classes = symplectic_classes(2);
        // Sp2: (2), (1,1); Sp4: (4), (2,2), (2,1,1), (1^4)
        assert_eq!(classes.len(), 6);
        assert_eq!(classes.iter().filter(|c| c.is_special()).count(), 5);
    }
}

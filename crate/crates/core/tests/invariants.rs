use proptest::prelude::*;

use famspring::corpus::random_sequences;
use famspring::exceptional::{parse_table, records, serialize_table};
use famspring::f2::{pairing, quotient_pairing, Ambient, F2Class, F2Vector, GroundSet};
use famspring::fourier::{Cyclotomic, RootSum};
use famspring::symbols::Flavor;
use famspring::verify::{bijection_outcome, check_lagrangian, check_matching, slice_outcome, pairing_outcome};

fn root(order: usize, k: i64) -> Cyclotomic {
    RootSum::root(order, k).reduce()
}

fn element() -> impl Strategy<Value = Cyclotomic> {
    let term = (prop::sample::select(vec![1usize, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60]), 0i64..60, -3i64..=3);
    prop::collection::vec(term, 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(Cyclotomic::zero(), |acc, (n, k, c)| acc + root(n, k).scale(c.into()))
    })
}

fn ground_and_bits() -> impl Strategy<Value = (usize, u64, u64, u64)> {
    (1usize..8).prop_flat_map(|n| {
        let m = (1u64 << n) - 1;
        (Just(n), 0..=m, 0..=m, 0..=m)
    })
}

proptest! {
    #[test]
    fn cyclotomic_ring_laws(a in element(), b in element(), c in element()) {
        prop_assert_eq!((a + b) * c, a * c + b * c);
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a - a, Cyclotomic::zero());
        prop_assert_eq!((a * b).conj(), a.conj() * b.conj());
        prop_assert_eq!(a.conj().conj(), a);
        prop_assert_eq!(a.galois(7).galois(43), a);
    }

    #[test]
    fn pairing_is_symmetric_bilinear((n, x, y, z) in ground_and_bits()) {
        let g = GroundSet::range(n).unwrap();
        let v = |b| F2Vector::from_bits(&g, b);
        let (x, y, z) = (v(x), v(y), v(z));
        prop_assert_eq!(pairing(&x, &y).unwrap(), pairing(&y, &x).unwrap());
        let sum = x.add(&y).unwrap();
        prop_assert_eq!(pairing(&sum, &z).unwrap(), pairing(&x, &z).unwrap() ^ pairing(&y, &z).unwrap());
    }

    #[test]
    fn quotient_pairing_is_well_defined((n, x, y, _) in ground_and_bits()) {
        let g = GroundSet::range(n).unwrap();
        let full = g.full_mask();
        if let (Ok(a), Ok(b)) = (F2Class::from_bits(&g, x), F2Class::from_bits(&g, y)) {
            if a.even_lift().is_some() && b.even_lift().is_some() {
                let moved = F2Class::from_bits(&g, x ^ full).unwrap();
                prop_assert_eq!(quotient_pairing(&a, &b).unwrap(), quotient_pairing(&moved, &b).unwrap());
                prop_assert_eq!(Ambient::QuotientEven.form(&g, x, y), Some(quotient_pairing(&a, &b).unwrap()));
            }
        }
        prop_assert_eq!(g.canonical(g.canonical(x)), g.canonical(x));
    }

    #[test]
    fn random_c_sequences_satisfy_all_claims(seed in any::<u64>()) {
        for a in random_sequences(Flavor::C, 4, 8, 8, seed) {
            prop_assert!(check_matching(&a).holds(), "{:?}", a.entries());
            prop_assert!(bijection_outcome(&a).is_ok());
            prop_assert!(check_lagrangian(&a).is_ok());
            prop_assert!(pairing_outcome(&a).is_ok());
            prop_assert!(slice_outcome(&a).is_ok());
        }
    }

    #[test]
    fn random_bd_sequences_satisfy_all_claims(seed in any::<u64>()) {
        for a in random_sequences(Flavor::BD, 4, 9, 9, seed) {
            prop_assert!(check_matching(&a).holds(), "{:?}", a.entries());
            prop_assert!(bijection_outcome(&a).is_ok());
            prop_assert!(check_lagrangian(&a).is_ok());
            prop_assert!(pairing_outcome(&a).is_ok());
            prop_assert!(slice_outcome(&a).is_ok());
        }
    }
}

#[test]
fn exceptional_table_round_trips() {
    let all = records();
    assert_eq!(parse_table(&serialize_table(&all)).unwrap(), all);
}

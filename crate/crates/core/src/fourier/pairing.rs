//! M(Γ), the Fourier pairing and the property checks on its matrix.

use num_rational::Ratio;
use serde::Serialize;

use super::cyclotomic::{matrix_product, Cyclotomic, RootSum};
use super::group::GroupError;
use super::table::GroupTable;
use crate::families::{AbelianMSet, MPairAbelian};

/// (class of x, irreducible of Z(x)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MPair {
    pub class_index: usize,
    pub irrep_index: usize,
}

/// Classes by increasing representative, irreducibles in table order.
pub fn m_set(t: &GroupTable) -> Vec<MPair> {
    t.classes
        .iter()
        .enumerate()
        .flat_map(|(c, cl)| {
            (0..cl.centralizer_irreps()).map(move |r| MPair {
                class_index: c,
                irrep_index: r,
            })
        })
        .collect()
}

/// Which argument of the summand is conjugated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Convention {
    /// σ(gyg⁻¹)·conj(τ(g⁻¹xg)).
    ConjugateSecond,
    /// conj(σ(gyg⁻¹))·τ(g⁻¹xg).
    ConjugateFirst,
}

pub const CONVENTION: Convention = Convention::ConjugateSecond;

/// A representative with a character of its centralizer, given as a
/// function on element indices.
struct Labelled<'a> {
    x: usize,
    centralizer_order: usize,
    character: Box<dyn Fn(usize) -> &'a RootSum + 'a>,
}

fn labelled<'a>(t: &'a GroupTable, p: MPair) -> Labelled<'a> {
    let cl = &t.classes[p.class_index];
    Labelled {
        x: cl.rep,
        centralizer_order: cl.centralizer_order(),
        character: Box::new(move |z| cl.centralizer_character(p.irrep_index, z)),
    }
}

/// The same label moved to the representative h·x·h⁻¹, with the character
/// transported along conjugation by h.
fn conjugated<'a>(t: &'a GroupTable, p: MPair, h: usize) -> Labelled<'a> {
    let g = &t.group;
    let cl = &t.classes[p.class_index];
    let hinv = g.inv(h);
    Labelled {
        x: g.conjugate(h, cl.rep),
        centralizer_order: cl.centralizer_order(),
        character: Box::new(move |z| cl.centralizer_character(p.irrep_index, g.conjugate(hinv, z))),
    }
}

fn evaluate(t: &GroupTable, a: &Labelled, b: &Labelled, convention: Convention) -> Cyclotomic {
    let g = &t.group;
    let mut acc = RootSum::zero();
    for h in 0..g.order() {
        let y = g.conjugate(h, b.x);
        if g.mul(a.x, y) != g.mul(y, a.x) {
            continue;
        }
        let x = g.conjugate(g.inv(h), a.x);
        let (s, u) = ((a.character)(y), (b.character)(x));
        match convention {
            Convention::ConjugateSecond => acc.add_product(s, &u.conj()),
            Convention::ConjugateFirst => acc.add_product(&s.conj(), u),
        }
    }
    let scale = Ratio::new(1, (a.centralizer_order * b.centralizer_order) as i64);
    acc.reduce().scale(scale)
}

/// {(x,σ),(y,τ)} = |Z(x)|⁻¹|Z(y)|⁻¹ Σ_{g : x·gyg⁻¹ = gyg⁻¹·x} σ(gyg⁻¹)·conj(τ(g⁻¹xg)).
pub fn fourier_pairing(t: &GroupTable, p: MPair, q: MPair) -> Cyclotomic {
    evaluate(t, &labelled(t, p), &labelled(t, q), CONVENTION)
}

pub fn fourier_matrix(t: &GroupTable) -> Vec<Vec<Cyclotomic>> {
    let m = m_set(t);
    m.iter().map(|&p| m.iter().map(|&q| fourier_pairing(t, p, q)).collect()).collect()
}

fn is_identity(m: &[Vec<Cyclotomic>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, v)| *v == if i == j { Cyclotomic::one() } else { Cyclotomic::zero() })
    })
}

fn is_permutation(m: &[Vec<Cyclotomic>]) -> bool {
    let n = m.len();
    let entries_ok = m.iter().flatten().all(|v| v.is_zero() || *v == Cyclotomic::one());
    let count = |v: &Vec<usize>| v.iter().all(|&c| c == 1);
    let rows: Vec<usize> = m.iter().map(|r| r.iter().filter(|v| !v.is_zero()).count()).collect();
    let cols: Vec<usize> = (0..n).map(|j| (0..n).filter(|&i| !m[i][j].is_zero()).count()).collect();
    entries_ok && count(&rows) && count(&cols)
}

/// Groups whose matrix must be real symmetric with S² = I.
pub fn real_subcatalog(name: &str) -> bool {
    matches!(name, "S2" | "S3" | "S4" | "S5" | "D8") || name.starts_with("(Z/2)^")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FourierChecks {
    pub group: String,
    pub order: usize,
    pub m_size: usize,
    pub convention: Convention,
    pub unitary: bool,
    pub hermitian: bool,
    pub s_squared_permutation: bool,
    pub real_symmetric: bool,
    pub s_squared_identity: bool,
    pub real_required: bool,
    pub representative_independent: bool,
    pub orthogonality: bool,
    /// Agreement with the elementary abelian formula, for (Z/2)^k.
    pub abelian_agreement: Option<bool>,
}

impl FourierChecks {
    pub fn holds(&self) -> bool {
        self.unitary
            && self.hermitian
            && self.s_squared_permutation
            && self.representative_independent
            && self.orthogonality
            && (!self.real_required || (self.real_symmetric && self.s_squared_identity))
            && self.abelian_agreement != Some(false)
    }
}

/// Every entry recomputed with each class representative replaced by its
/// conjugate under the element carrying it to the largest class member.
pub fn representative_independent(t: &GroupTable, s: &[Vec<Cyclotomic>]) -> bool {
    let g = &t.group;
    let m = m_set(t);
    let movers: Vec<usize> = t
        .classes
        .iter()
        .map(|c| {
            let target = *c.members.last().expect("classes are nonempty");
            (0..g.order()).find(|&h| g.conjugate(h, c.rep) == target).expect("target is conjugate")
        })
        .collect();
    m.iter().enumerate().all(|(i, &p)| {
        m.iter().enumerate().all(|(j, &q)| {
            let a = conjugated(t, p, movers[p.class_index]);
            let b = conjugated(t, q, movers[q.class_index]);
            evaluate(t, &a, &b, CONVENTION) == s[i][j]
        })
    })
}

/// Bits of the (Z/2)^k element and character underlying `p`.
pub fn abelian_coordinates(t: &GroupTable, p: MPair) -> MPairAbelian {
    let g = &t.group;
    let rep = t.classes[p.class_index].rep;
    let group = g
        .element_tuple(rep)
        .iter()
        .enumerate()
        .fold(0u64, |acc, (j, f)| acc | u64::from(f.0[0] != 0) << j);
    // χ has bit j when it is nontrivial on the j-th factor
    let bits = (0..g.generators().len()).fold(0u64, |acc, j| {
        let gen = g.generators()[j];
        let v = t.classes[p.class_index].centralizer_character(p.irrep_index, gen).reduce();
        acc | u64::from(v != Cyclotomic::one()) << j
    });
    MPairAbelian { group, character: bits }
}

/// Compare with |Ā|⁻¹(−1)^{χ(g′)+χ′(g)} on (Z/2)^k.
pub fn abelian_agreement(t: &GroupTable, s: &[Vec<Cyclotomic>]) -> bool {
    let k = t.group.generators().len();
    let ms = AbelianMSet { dim: k };
    let m = m_set(t);
    let coords: Vec<MPairAbelian> = m.iter().map(|&p| abelian_coordinates(t, p)).collect();
    let mut seen = coords.clone();
    seen.sort();
    seen.dedup();
    seen.len() == m.len()
        && coords.iter().enumerate().all(|(i, &a)| {
            coords
                .iter()
                .enumerate()
                .all(|(j, &b)| s[i][j] == Cyclotomic::rational(ms.pairing(a, b)))
        })
}

pub fn fourier_matrix_checks(name: &str) -> Result<(FourierChecks, Vec<Vec<Cyclotomic>>), GroupError> {
    let t = GroupTable::new(name)?;
    let s = fourier_matrix(&t);
    let n = s.len();
    let conj_t: Vec<Vec<Cyclotomic>> = (0..n).map(|i| (0..n).map(|j| s[j][i].conj()).collect()).collect();
    let s2 = matrix_product(&s, &s);
    let hermitian = (0..n).all(|i| (0..n).all(|j| s[i][j] == s[j][i].conj()));
    let real_symmetric = (0..n).all(|i| (0..n).all(|j| s[i][j] == s[j][i] && s[i][j] == s[i][j].conj()));
    let name = t.group.name().to_string();
    let abelian = name.starts_with("(Z/2)^").then(|| abelian_agreement(&t, &s));
    let checks = FourierChecks {
        order: t.group.order(),
        m_size: n,
        convention: CONVENTION,
        unitary: is_identity(&matrix_product(&s, &conj_t)),
        hermitian,
        s_squared_permutation: is_permutation(&s2),
        real_symmetric,
        s_squared_identity: is_identity(&s2),
        real_required: real_subcatalog(&name),
        representative_independent: representative_independent(&t, &s),
        orthogonality: t.orthogonality().holds(),
        abelian_agreement: abelian,
        group: name,
    };
    Ok((checks, s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_set_sizes() {
        for (name, size) in [("trivial", 1), ("S2", 4), ("S3", 8), ("S4", 21), ("S5", 39), ("D8", 22), ("C3", 9)] {
            let t = GroupTable::new(name).unwrap();
            assert_eq!(m_set(&t).len(), size, "{name}");
        }
    }

    #[test]
    fn trivial_matrix() {
        let (c, s) = fourier_matrix_checks("trivial").unwrap();
        assert_eq!(s, vec![vec![Cyclotomic::one()]]);
        assert!(c.holds());
    }

    #[test]
    fn z2_matrix() {
        let (c, s) = fourier_matrix_checks("S2").unwrap();
        assert!(c.holds() && c.s_squared_identity);
        let h = Cyclotomic::rational(Ratio::new(1, 2));
        let want = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(s[i][j], h.scale(want[i][j].into()), "{i},{j}");
            }
        }
    }

    #[test]
    fn first_row_is_dimension_over_centralizer() {
        let t = GroupTable::new("S3").unwrap();
        let one = MPair { class_index: 0, irrep_index: 0 };
        for q in m_set(&t) {
            let cl = &t.classes[q.class_index];
            let dim = cl.centralizer_character(q.irrep_index, 0).reduce();
            let want = dim.scale(Ratio::new(1, cl.centralizer_order() as i64));
            assert_eq!(fourier_pairing(&t, one, q), want);
        }
    }

    #[test]
    fn s3_matrix() {
        let (c, _) = fourier_matrix_checks("S3").unwrap();
        assert!(c.holds() && c.real_symmetric && c.s_squared_identity, "{c:?}");
    }

    #[test]
    fn cyclic_matrices_are_unitary_but_not_real() {
        let (c, _) = fourier_matrix_checks("C3").unwrap();
        assert!(c.holds(), "{c:?}");
        assert!(!c.real_symmetric);
    }
}

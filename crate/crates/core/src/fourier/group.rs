//! Permutation groups of the catalog: direct products of symmetric, cyclic
//! and dihedral factors acting on disjoint blocks of points.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};
use std::fmt;

use thiserror::Error;

use super::cyclotomic::RootSum;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unsupported group {0:?}")]
    Unsupported(String),
    #[error("no catalog group is isomorphic to a subgroup of order {0}")]
    NoCatalogMatch(usize),
}

/// A permutation of 0..degree as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Self((0..degree as u8).collect())
    }

    /// The composite self ∘ other: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[j as usize] = i as u8;
        }
        Self(out)
    }

    /// Sorted cycle lengths, including fixed points, in decreasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for s in 0..self.0.len() {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    fn from_cycles(degree: usize, cycles: &[&[u8]]) -> Self {
        let mut p = Self::identity(degree);
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                p.0[i as usize] = c[(k + 1) % c.len()];
            }
        }
        p
    }

    fn restrict(&self, offset: usize, len: usize) -> Self {
        Self(self.0[offset..offset + len].iter().map(|&i| i - offset as u8).collect())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Perm {
    /// Cycle notation; "()" for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for s in 0..self.0.len() {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            any = true;
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i.to_string());
                i = self.0[i] as usize;
            }
            write!(f, "({})", cyc.join(" "))?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// An indecomposable factor of a catalog group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Factor {
    /// Sym(n) on n points, 2 ≤ n ≤ 5.
    Sym(usize),
    /// The rotation group of an n-gon on n points.
    Cyc(usize),
    /// Symmetries of a square with vertices 0, 1, 2, 3 in cyclic order.
    Dihedral8,
}


/// Character table of Sym(n) by cycle type, characters in the order used
/// for component groups.
struct SymTable {
    names: &'static [&'static str],
    types: Vec<Vec<usize>>,
    rows: Vec<Vec<i64>>,
}

fn symmetric_table(n: usize) -> SymTable {
    match n {
        2 => SymTable {
            names: &["1", "ε"],
            types: vec![vec![1, 1], vec![2]],
            rows: vec![vec![1, 1], vec![1, -1]],
        },
        3 => SymTable {
            names: &["1", "r", "ε"],
            types: vec![vec![1, 1, 1], vec![2, 1], vec![3]],
            rows: vec![vec![1, 1, 1], vec![2, 0, -1], vec![1, -1, 1]],
        },
        // λⁱ: exterior powers of the reflection representation; σ: dimension 2
        4 => SymTable {
            names: &["1", "λ¹", "λ²", "σ", "λ³"],
            types: vec![vec![1, 1, 1, 1], vec![2, 1, 1], vec![2, 2], vec![3, 1], vec![4]],
            rows: vec![
                vec![1, 1, 1, 1, 1],
                vec![3, 1, -1, 0, -1],
                vec![3, -1, -1, 0, 1],
                vec![2, 0, 2, -1, 0],
                vec![1, -1, 1, 1, -1],
            ],
        },
        // ν: dimension 5 with ν(12) = 1; ν′ = ν ⊗ sign
        5 => SymTable {
            names: &["1", "ν", "λ¹", "ν′", "λ²", "λ³", "λ⁴"],
            types: vec![
                vec![1, 1, 1, 1, 1],
                vec![2, 1, 1, 1],
                vec![2, 2, 1],
                vec![3, 1, 1],
                vec![3, 2],
                vec![4, 1],
                vec![5],
            ],
            rows: vec![
                vec![1, 1, 1, 1, 1, 1, 1],
                vec![5, 1, 1, -1, 1, -1, 0],
                vec![4, 2, 0, 1, -1, 0, -1],
                vec![5, -1, 1, -1, -1, 1, 0],
                vec![6, 0, -2, 0, 0, 0, 1],
                vec![4, -2, 0, 1, 1, 0, -1],
                vec![1, -1, 1, 1, -1, -1, 1],
            ],
        },
        _ => panic!("no character table for Sym({n})"),
    }
}

/// Irreducible names of Sym(n) in component-group order.
pub fn symmetric_irrep_names(n: usize) -> &'static [&'static str] {
    match n {
        0 | 1 => &["1"],
        _ => symmetric_table(n).names,
    }
}

/// D8 classes: identity, rotation by π, quarter turns, reflections fixing
/// vertices, reflections fixing edges.
const DIHEDRAL_ROWS: [[i64; 5]; 5] = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, -1, -1],
    [1, 1, -1, 1, -1],
    [1, 1, -1, -1, 1],
    [2, -2, 0, 0, 0],
];

fn dihedral_class(p: &Perm) -> usize {
    match p.cycle_type().as_slice() {
        [1, 1, 1, 1] => 0,
        [4] => 2,
        [2, 1, 1] => 3,
        _ if p.0 == [2, 3, 0, 1] => 1,
        _ => 4,
    }
}

impl Factor {
    pub fn degree(self) -> usize {
        match self {
            Factor::Sym(n) | Factor::Cyc(n) => n,
            Factor::Dihedral8 => 4,
        }
    }

    fn generators(self) -> Vec<Perm> {
        let d = self.degree();
        let cycle: Vec<u8> = (0..d as u8).collect();
        match self {
            Factor::Sym(2) | Factor::Cyc(_) => vec![Perm::from_cycles(d, &[&cycle])],
            Factor::Sym(_) => vec![Perm::from_cycles(d, &[&[0, 1]]), Perm::from_cycles(d, &[&cycle])],
            Factor::Dihedral8 => vec![Perm::from_cycles(4, &[&cycle]), Perm::from_cycles(4, &[&[1, 3]])],
        }
    }

    pub fn irrep_names(self) -> Vec<String> {
        match self {
            Factor::Sym(n) => symmetric_table(n).names.iter().map(|s| s.to_string()).collect(),
            Factor::Cyc(n) => (0..n).map(|k| if k == 0 { "1".into() } else { format!("χ{k}") }).collect(),
            Factor::Dihedral8 => ["1", "χ_r", "χ_s", "χ_rs", "ρ"].map(String::from).to_vec(),
        }
    }

    fn irrep_count(self) -> usize {
        match self {
            Factor::Sym(n) => symmetric_table(n).rows.len(),
            Factor::Cyc(n) => n,
            Factor::Dihedral8 => DIHEDRAL_ROWS.len(),
        }
    }

    /// Value of the irreducible `irrep` at `p`, a permutation of this
    /// factor's points.
    fn value(self, irrep: usize, p: &Perm) -> RootSum {
        match self {
            Factor::Sym(n) => {
                let t = symmetric_table(n);
                let col = t.types.iter().position(|c| *c == p.cycle_type()).expect("cycle type of Sym(n)");
                RootSum::integer(t.rows[irrep][col])
            }
            // the rotation by k sends 0 to k
            Factor::Cyc(n) => RootSum::root(n, (irrep * p.0[0] as usize) as i64),
            Factor::Dihedral8 => RootSum::integer(DIHEDRAL_ROWS[irrep][dihedral_class(p)]),
        }
    }

    fn label(self) -> String {
        match self {
            Factor::Sym(n) => format!("S{n}"),
            Factor::Cyc(n) => format!("C{n}"),
            Factor::Dihedral8 => "D8".into(),
        }
    }
}

/// A catalog group with its multiplication table and the values of its
/// irreducible characters (products of factor characters).
#[derive(Debug)]
pub struct Group {
    name: String,
    factors: Vec<Factor>,
    offsets: Vec<usize>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    mul: Vec<Vec<u16>>,
    inv: Vec<usize>,
    generators: Vec<usize>,
    values: Vec<Vec<RootSum>>,
}

/// Names accepted by [`catalog_group`] in catalog order.
pub const CATALOG: &[&str] = &[
    "trivial", "S2", "S3", "S4", "S5", "C2", "C3", "C4", "C5", "C6", "(Z/2)^1", "(Z/2)^2", "(Z/2)^3",
    "(Z/2)^4", "D8", "S2xS2", "S2xS3",
];

fn factors_of(name: &str) -> Option<Vec<Factor>> {
    let name = name.replace('×', "x");
    let f = match name.as_str() {
        "trivial" | "1" | "S1" => vec![],
        "S2" => vec![Factor::Sym(2)],
        "S3" => vec![Factor::Sym(3)],
        "S4" => vec![Factor::Sym(4)],
        "S5" => vec![Factor::Sym(5)],
        "C2" => vec![Factor::Cyc(2)],
        "C3" => vec![Factor::Cyc(3)],
        "C4" => vec![Factor::Cyc(4)],
        "C5" => vec![Factor::Cyc(5)],
        "C6" => vec![Factor::Cyc(6)],
        "D8" => vec![Factor::Dihedral8],
        "S2xS2" => vec![Factor::Sym(2); 2],
        "S2xS3" => vec![Factor::Sym(2), Factor::Sym(3)],
        _ => {
            let k: usize = name
                .strip_prefix("(Z/2)^")
                .or_else(|| name.strip_prefix("Z2^"))?
                .parse()
                .ok()?;
            if !(1..=4).contains(&k) {
                return None;
            }
            vec![Factor::Sym(2); k]
        }
    };
    Some(f)
}

/// The catalog group called `name`, built once and shared.
pub fn catalog_group(name: &str) -> Result<Arc<Group>, GroupError> {
    static CACHE: OnceLock<Mutex<HashMap<String, Arc<Group>>>> = OnceLock::new();
    let factors = factors_of(name).ok_or_else(|| GroupError::Unsupported(name.to_string()))?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().expect("cache lock").get(name) {
        return Ok(g.clone());
    }
    let g = Arc::new(Group::from_factors(name, factors));
    cache.lock().expect("cache lock").insert(name.to_string(), g.clone());
    Ok(g)
}

impl Group {
    fn from_factors(name: &str, factors: Vec<Factor>) -> Self {
        let mut offsets = Vec::with_capacity(factors.len());
        let mut degree = 0;
        for f in &factors {
            offsets.push(degree);
            degree += f.degree();
        }
        let mut gens = Vec::new();
        for (f, &off) in factors.iter().zip(&offsets) {
            for g in f.generators() {
                let mut p = Perm::identity(degree);
                for (i, &j) in g.0.iter().enumerate() {
                    p.0[off + i] = off as u8 + j;
                }
                gens.push(p);
            }
        }
        let mut seen: HashMap<Perm, ()> = HashMap::new();
        let mut queue = VecDeque::from([Perm::identity(degree)]);
        seen.insert(Perm::identity(degree), ());
        while let Some(p) = queue.pop_front() {
            for g in &gens {
                let q = p.compose(g);
                if seen.insert(q.clone(), ()).is_none() {
                    queue.push_back(q);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_keys().collect();
        elements.sort();
        let index: HashMap<Perm, usize> = elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)] as u16).collect())
            .collect();
        let inv = elements.iter().map(|a| index[&a.inverse()]).collect();
        let generators = gens.iter().map(|g| index[g]).collect();
        let mut group = Self {
            name: name.to_string(),
            factors,
            offsets,
            elements,
            index,
            mul,
            inv,
            generators,
            values: Vec::new(),
        };
        group.values = (0..group.irrep_count())
            .map(|r| (0..group.order()).map(|e| group.evaluate(r, e)).collect())
            .collect();
        group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Product description, e.g. "S2×S3".
    pub fn structure(&self) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        self.factors.iter().map(|f| f.label()).collect::<Vec<_>>().join("×")
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// g·x·g⁻¹.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut p = a;
        while p != 0 {
            p = self.mul(p, a);
            k += 1;
        }
        k
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn irrep_count(&self) -> usize {
        self.factors.iter().map(|f| f.irrep_count()).product()
    }

    /// Factor irreducibles of the product irreducible `r`; the first factor
    /// varies fastest.
    pub fn irrep_tuple(&self, mut r: usize) -> Vec<usize> {
        self.factors
            .iter()
            .map(|f| {
                let c = f.irrep_count();
                let i = r % c;
                r /= c;
                i
            })
            .collect()
    }

    pub fn irrep_name(&self, r: usize) -> String {
        if self.factors.is_empty() {
            return "1".into();
        }
        let names: Vec<String> = self
            .factors
            .iter()
            .zip(self.irrep_tuple(r))
            .map(|(f, i)| f.irrep_names()[i].clone())
            .collect();
        names.join("⊗")
    }

    /// The factor components of element `e`.
    pub fn element_tuple(&self, e: usize) -> Vec<Perm> {
        self.factors
            .iter()
            .zip(&self.offsets)
            .map(|(f, &off)| self.elements[e].restrict(off, f.degree()))
            .collect()
    }

    fn evaluate(&self, r: usize, e: usize) -> RootSum {
        let mut v = RootSum::integer(1);
        for ((f, i), p) in self.factors.iter().zip(self.irrep_tuple(r)).zip(self.element_tuple(e)) {
            v = v.mul(&f.value(i, &p));
        }
        v
    }

    /// χ_r(e).
    pub fn character(&self, r: usize, e: usize) -> &RootSum {
        &self.values[r][e]
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// An isomorphism from a subgroup of `ambient` onto a catalog group.
#[derive(Debug, Clone)]
pub struct SubgroupIso {
    pub target: Arc<Group>,
    /// ambient element index ↦ target element index
    pub map: HashMap<usize, usize>,
}

/// Find a catalog group isomorphic to the subgroup `sub` of `g` together with
/// an explicit isomorphism, trying catalog groups in catalog order.
pub fn identify_subgroup(g: &Group, sub: &[usize]) -> Result<SubgroupIso, GroupError> {
    if sub.len() == g.order() {
        return Ok(SubgroupIso {
            target: catalog_group(g.name())?,
            map: (0..g.order()).map(|i| (i, i)).collect(),
        });
    }
    for name in CATALOG {
        let h = catalog_group(name)?;
        if h.order() != sub.len() {
            continue;
        }
        if let Some(phi) = find_isomorphism(&h, g, sub) {
            let map = phi.iter().enumerate().map(|(hi, &gi)| (gi, hi)).collect();
            return Ok(SubgroupIso { target: h, map });
        }
    }
    Err(GroupError::NoCatalogMatch(sub.len()))
}

/// An isomorphism h ↦ φ(h) from `h` onto the subgroup `sub` of `g`, found by
/// choosing images of the generators of `h`.
fn find_isomorphism(h: &Group, g: &Group, sub: &[usize]) -> Option<Vec<usize>> {
    let gens = h.generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let o = h.element_order(s);
            sub.iter().copied().filter(|&x| g.element_order(x) == o).collect()
        })
        .collect();
    let mut choice = vec![0; gens.len()];
    search(h, g, sub.len(), &candidates, &mut choice, 0)
}

fn search(h: &Group, g: &Group, n: usize, cands: &[Vec<usize>], choice: &mut Vec<usize>, k: usize) -> Option<Vec<usize>> {
    if k == cands.len() {
        return extend(h, g, n, choice);
    }
    for &c in &cands[k] {
        choice[k] = c;
        if let Some(phi) = search(h, g, n, cands, choice, k + 1) {
            return Some(phi);
        }
    }
    None
}

/// The homomorphism determined by generator images, if it is one and is
/// injective.
fn extend(h: &Group, g: &Group, n: usize, images: &[usize]) -> Option<Vec<usize>> {
    let gens = h.generators();
    let mut phi = vec![usize::MAX; h.order()];
    phi[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = h.mul(x, s);
            let img = g.mul(phi[x], t);
            if phi[y] == usize::MAX {
                phi[y] = img;
                queue.push_back(y);
            } else if phi[y] != img {
                return None;
            }
        }
    }
    let mut distinct = phi.clone();
    distinct.sort_unstable();
    distinct.dedup();
    (distinct.len() == n && n == h.order()).then_some(phi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_orders() {
        let orders = [1, 2, 6, 24, 120, 2, 3, 4, 5, 6, 2, 4, 8, 16, 8, 4, 12];
        for (name, o) in CATALOG.iter().zip(orders) {
            let g = catalog_group(name).unwrap();
            assert_eq!(g.order(), o, "{name}");
            assert_eq!(g.element(0), &Perm::identity(g.element(0).0.len()));
        }
        assert!(catalog_group("S6").is_err());
        assert!(catalog_group("(Z/2)^5").is_err());
    }

    #[test]
    fn abelian_flags() {
        assert!(catalog_group("C6").unwrap().is_abelian());
        assert!(!catalog_group("D8").unwrap().is_abelian());
        assert!(!catalog_group("S3").unwrap().is_abelian());
    }

    #[test]
    fn perm_display_and_compose() {
        let a = Perm::from_cycles(3, &[&[0, 1]]);
        let b = Perm::from_cycles(3, &[&[1, 2]]);
        assert_eq!(a.compose(&b).to_string(), "(0 1 2)");
        assert_eq!(b.compose(&a).to_string(), "(0 2 1)");
        assert_eq!(Perm::identity(2).to_string(), "()");
        assert_eq!(a.compose(&a), Perm::identity(3));
    }

    #[test]
    fn subgroup_identification() {
        let s4 = catalog_group("S4").unwrap();
        let klein: Vec<usize> = (0..s4.order())
            .filter(|&i| matches!(s4.element(i).cycle_type().as_slice(), [2, 2] | [1, 1, 1, 1]))
            .collect();
        let iso = identify_subgroup(&s4, &klein).unwrap();
        assert_eq!(iso.target.name(), "(Z/2)^2");
        let s3 = catalog_group("S3").unwrap();
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(identify_subgroup(&s3, &all).unwrap().target.name(), "S3");
    }
}

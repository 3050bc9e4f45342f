//! Exact arithmetic in Q(ζ₆₀), the field containing every character value of
//! the catalog groups.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

/// Conductor of the ambient field.
pub const CONDUCTOR: usize = 60;
/// φ(60).
pub const DEGREE: usize = 16;

/// Integer polynomial coefficients, lowest degree first.
type Poly = Vec<i64>;

fn poly_trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Exact division by a monic polynomial.
fn poly_div_monic(num: &[i64], den: &[i64]) -> Poly {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![0];
    }
    let mut q = vec![0; rem.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, &d) in den.iter().enumerate() {
            rem[k + j] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    poly_trim(q)
}

/// The n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: usize) -> Vec<i64> {
    let mut num = vec![0; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = poly_div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| k.gcd(&n) == 1).count()
}

/// ζ^k reduced modulo Φ₆₀, for 0 ≤ k < 2·60.
fn powers() -> &'static [[i64; DEGREE]] {
    static TABLE: OnceLock<Vec<[i64; DEGREE]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let phi = cyclotomic_polynomial(CONDUCTOR);
        let mut out = Vec::with_capacity(2 * CONDUCTOR);
        let mut cur = [0i64; DEGREE];
        cur[0] = 1;
        for _ in 0..2 * CONDUCTOR {
            out.push(cur);
            let top = cur[DEGREE - 1];
            let mut next = [0i64; DEGREE];
            next[1..].copy_from_slice(&cur[..DEGREE - 1]);
            for (j, n) in next.iter_mut().enumerate() {
                *n -= top * phi[j];
            }
            cur = next;
        }
        out
    })
}

/// A Z-linear combination of 60th roots of unity, unreduced. Used to
/// accumulate character sums cheaply.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootSum(pub [i64; CONDUCTOR]);

impl RootSum {
    pub fn zero() -> Self {
        Self([0; CONDUCTOR])
    }

    pub fn integer(n: i64) -> Self {
        let mut r = Self::zero();
        r.0[0] = n;
        r
    }

    /// ζ_order^k.
    pub fn root(order: usize, k: i64) -> Self {
        assert!(CONDUCTOR.is_multiple_of(order), "order {order} does not divide {CONDUCTOR}");
        let step = (CONDUCTOR / order) as i64;
        let mut r = Self::zero();
        r.0[(step * k).rem_euclid(CONDUCTOR as i64) as usize] = 1;
        r
    }

    pub fn is_zero(&self) -> bool {
        self.reduce().is_zero()
    }

    pub fn conj(&self) -> Self {
        let mut out = Self::zero();
        for (k, &c) in self.0.iter().enumerate() {
            out.0[(CONDUCTOR - k) % CONDUCTOR] += c;
        }
        out
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
    }

    /// self += a·b.
    pub fn add_product(&mut self, a: &Self, b: &Self) {
        for (i, &x) in a.0.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in b.0.iter().enumerate().filter(|(_, y)| **y != 0) {
                self.0[(i + j) % CONDUCTOR] += x * y;
            }
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        out.add_product(self, other);
        out
    }

    /// The canonical element of Q(ζ₆₀).
    pub fn reduce(&self) -> Cyclotomic {
        let table = powers();
        let mut num = [0i64; DEGREE];
        for (k, &c) in self.0.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (n, t) in num.iter_mut().zip(table[k].iter()) {
                *n += c * t;
            }
        }
        Cyclotomic::from_parts(num, 1)
    }
}

/// An element of Q(ζ₆₀) as a numerator on the power basis 1, ζ, …, ζ¹⁵
/// over a positive common denominator, fully reduced.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic {
    num: [i64; DEGREE],
    den: i64,
}

impl Cyclotomic {
    pub fn from_parts(num: [i64; DEGREE], den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = num.iter().fold(den.abs(), |g, &c| g.gcd(&c));
        let s = den.signum();
        Self {
            num: num.map(|c| s * c / g),
            den: s * den / g,
        }
    }

    pub fn zero() -> Self {
        Self::from_parts([0; DEGREE], 1)
    }

    pub fn one() -> Self {
        Self::rational(Ratio::from(1))
    }

    pub fn rational(r: Ratio<i64>) -> Self {
        let mut num = [0; DEGREE];
        num[0] = *r.numer();
        Self::from_parts(num, *r.denom())
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    pub fn numerator(&self) -> &[i64; DEGREE] {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    /// The value if it is rational.
    pub fn as_rational(&self) -> Option<Ratio<i64>> {
        self.num[1..]
            .iter()
            .all(|&c| c == 0)
            .then(|| Ratio::new(self.num[0], self.den))
    }

    pub fn scale(&self, r: Ratio<i64>) -> Self {
        Self::from_parts(self.num.map(|c| c * r.numer()), self.den * r.denom())
    }

    /// Image under ζ ↦ ζ^a for a prime to 60.
    pub fn galois(&self, a: usize) -> Self {
        let table = powers();
        let mut num = [0i64; DEGREE];
        for (k, &c) in self.num.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (n, t) in num.iter_mut().zip(table[(a * k) % CONDUCTOR].iter()) {
                *n += c * t;
            }
        }
        Self::from_parts(num, self.den)
    }

    pub fn conj(&self) -> Self {
        self.galois(CONDUCTOR - 1)
    }

    /// The smallest n | 60 with the value in Q(ζ_n).
    pub fn conductor(&self) -> usize {
        let units: Vec<usize> = (1..CONDUCTOR).filter(|a| a.gcd(&CONDUCTOR) == 1).collect();
        divisors_of_conductor()
            .into_iter()
            .find(|&n| {
                units
                    .iter()
                    .filter(|&&a| a % n == 1 % n)
                    .all(|&a| self.galois(a) == *self)
            })
            .unwrap_or(CONDUCTOR)
    }

    /// Coordinates on the power basis 1, ζ_n, …, ζ_n^{φ(n)−1} of Q(ζ_n), n
    /// the conductor.
    pub fn coefficients(&self) -> (usize, Vec<Ratio<i64>>) {
        let n = self.conductor();
        let m = euler_phi(n);
        let step = CONDUCTOR / n;
        let table = powers();
        // solve Σ c_j ζ^{step·j} = self over Q
        let mut rows: Vec<Vec<Ratio<i64>>> = (0..DEGREE)
            .map(|i| {
                let mut row: Vec<Ratio<i64>> = (0..m).map(|j| Ratio::from(table[step * j][i])).collect();
                row.push(Ratio::new(self.num[i], self.den));
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != Ratio::from(0)) else {
                continue;
            };
            rows.swap(r, p);
            let inv = Ratio::from(1) / rows[r][c];
            for x in rows[r].iter_mut() {
                *x *= inv;
            }
            for i in 0..rows.len() {
                if i != r && rows[i][c] != Ratio::from(0) {
                    let f = rows[i][c];
                    for j in 0..=m {
                        let v = rows[r][j];
                        rows[i][j] -= f * v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let mut out = vec![Ratio::from(0); m];
        for (i, &c) in pivots.iter().enumerate() {
            out[c] = rows[i][m];
        }
        (n, out)
    }
}

/// Exact matrix product, accumulated over a common denominator.
pub fn matrix_product(a: &[Vec<Cyclotomic>], b: &[Vec<Cyclotomic>]) -> Vec<Vec<Cyclotomic>> {
    let common = |m: &[Vec<Cyclotomic>]| m.iter().flatten().fold(1i64, |l, c| l.lcm(&c.den));
    let (da, db) = (common(a), common(b));
    // sparse numerators over the common denominators
    let sparse = |m: &[Vec<Cyclotomic>], d: i64| -> Vec<Vec<Vec<(usize, i64)>>> {
        m.iter()
            .map(|row| {
                row.iter()
                    .map(|c| {
                        let f = d / c.den;
                        c.num.iter().enumerate().filter(|(_, x)| **x != 0).map(|(k, &x)| (k, x * f)).collect()
                    })
                    .collect()
            })
            .collect()
    };
    let (sa, sb) = (sparse(a, da), sparse(b, db));
    let table = powers();
    let n = b.first().map_or(0, Vec::len);
    sa.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    let mut acc = [0i64; 2 * DEGREE - 1];
                    for (k, x) in row.iter().enumerate() {
                        for &(p, u) in x {
                            for &(q, v) in &sb[k][j] {
                                acc[p + q] += u * v;
                            }
                        }
                    }
                    let mut num = [0i64; DEGREE];
                    num.copy_from_slice(&acc[..DEGREE]);
                    for (e, &c) in acc.iter().enumerate().skip(DEGREE).filter(|(_, c)| **c != 0) {
                        for (t, r) in num.iter_mut().zip(table[e].iter()) {
                            *t += c * r;
                        }
                    }
                    Cyclotomic::from_parts(num, da * db)
                })
                .collect()
        })
        .collect()
}

fn divisors_of_conductor() -> Vec<usize> {
    (1..=CONDUCTOR).filter(|d| CONDUCTOR.is_multiple_of(*d)).collect()
}

impl Add for Cyclotomic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            return Self::rational(a + b);
        }
        let l = self.den.lcm(&o.den);
        let (a, b) = (l / self.den, l / o.den);
        let mut num = [0; DEGREE];
        for (i, n) in num.iter_mut().enumerate() {
            *n = self.num[i] * a + o.num[i] * b;
        }
        Self::from_parts(num, l)
    }
}

impl Neg for Cyclotomic {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_parts(self.num.map(|c| -c), self.den)
    }
}

impl Sub for Cyclotomic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Mul for Cyclotomic {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if let (Some(a), Some(b)) = (self.as_rational(), o.as_rational()) {
            return Self::rational(a * b);
        }
        let table = powers();
        let mut num = [0i64; DEGREE];
        for (i, &x) in self.num.iter().enumerate().filter(|(_, x)| **x != 0) {
            for (j, &y) in o.num.iter().enumerate().filter(|(_, y)| **y != 0) {
                for (n, t) in num.iter_mut().zip(table[i + j].iter()) {
                    *n += x * y * t;
                }
            }
        }
        Self::from_parts(num, self.den * o.den)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{r}");
        }
        let (n, cs) = self.coefficients();
        let mut terms = Vec::new();
        for (j, c) in cs.iter().enumerate().filter(|(_, c)| **c != Ratio::from(0)) {
            let root = match j {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{j}"),
            };
            terms.push(match (root.is_empty(), *c == Ratio::from(1), *c == Ratio::from(-1)) {
                (true, _, _) => c.to_string(),
                (false, true, _) => root,
                (false, _, true) => format!("-{root}"),
                _ => format!("{c}*{root}"),
            });
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

/// JSON form: conductor and coefficient strings on its power basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclotomicRepr {
    pub conductor: usize,
    pub coefficients: Vec<String>,
}

impl From<&Cyclotomic> for CyclotomicRepr {
    fn from(c: &Cyclotomic) -> Self {
        let (conductor, cs) = c.coefficients();
        Self {
            conductor,
            coefficients: cs.iter().map(|r| r.to_string()).collect(),
        }
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr::from(self).serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(CONDUCTOR).len(), DEGREE + 1);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in [2, 3, 4, 5, 6] {
            let mut s = RootSum::zero();
            for k in 0..n as i64 {
                s.add_assign(&RootSum::root(n, k));
            }
            assert!(s.is_zero(), "order {n}");
        }
    }

    #[test]
    fn field_identities() {
        let i = RootSum::root(4, 1).reduce();
        assert_eq!(i * i, -Cyclotomic::one());
        assert_eq!(i.conj(), -i);
        assert_eq!(i.conductor(), 4);
        let w = RootSum::root(3, 1).reduce();
        assert_eq!(w * w * w, Cyclotomic::one());
        assert_eq!(w + w.conj(), -Cyclotomic::one());
        assert_eq!(w.conductor(), 3);
        // ζ₆ = −ζ₃² has conductor 3
        assert_eq!(RootSum::root(6, 1).reduce().conductor(), 3);
        let half = Cyclotomic::rational(Ratio::new(1, 2));
        assert_eq!(half.conductor(), 1);
        assert_eq!(half.to_string(), "1/2");
        assert_eq!(i.to_string(), "z4");
    }

    #[test]
    fn matrix_product_matches_entrywise() {
        let i = RootSum::root(4, 1).reduce();
        let h = Cyclotomic::rational(Ratio::new(1, 3));
        let a = vec![vec![i, h], vec![h, i.conj()]];
        let b = vec![vec![h, i], vec![Cyclotomic::one(), h]];
        let p = matrix_product(&a, &b);
        for r in 0..2 {
            for c in 0..2 {
                assert_eq!(p[r][c], a[r][0] * b[0][c] + a[r][1] * b[1][c]);
            }
        }
    }

    #[test]
    fn coefficients_round_trip() {
        let z5 = RootSum::root(5, 1).reduce();
        let x = z5 + z5 * z5 * z5 + Cyclotomic::rational(Ratio::new(3, 7));
        let (n, cs) = x.coefficients();
        assert_eq!(n, 5);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[0], Ratio::new(3, 7));
        assert_eq!(cs[1], Ratio::from(1));
        assert_eq!(cs[3], Ratio::from(1));
        // √5 = 1 + 2(ζ₅ + ζ₅⁴)
        let s = Cyclotomic::one() + (z5 + z5.conj()).scale(Ratio::from(2));
        assert_eq!((s * s).as_rational(), Some(Ratio::from(5)));
    }
}

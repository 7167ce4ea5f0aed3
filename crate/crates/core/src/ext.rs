//! Extension fields `F_{2^m}`, cyclotomic cosets and minimal polynomials.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::num;
use crate::poly::Poly2;

pub const MAX_FIELD_DEGREE: usize = 13;

/// `F_{2^m}` as `GF(2)[x]` modulo a primitive polynomial. Elements are
/// polynomials of degree below `m`; `x` itself is the primitive element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    m: usize,
    modulus: Poly2,
}

impl ExtField {
    /// Field whose modulus is the numerically smallest primitive polynomial
    /// of degree `m`.
    pub fn new(m: usize) -> Result<Self> {
        if !(1..=MAX_FIELD_DEGREE).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        let lo = (1u64 << m) | 1;
        let hi = 1u64 << (m + 1);
        for bits in (lo..hi).step_by(2) {
            let cand = Poly2::from_u64(bits);
            if cand.is_primitive()? {
                return Ok(Self { m, modulus: cand });
            }
        }
        unreachable!("primitive polynomials exist in every degree")
    }

    pub fn with_modulus(modulus: Poly2) -> Result<Self> {
        let m = modulus.degree().unwrap_or(0);
        if !(1..=MAX_FIELD_DEGREE).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        if !modulus.is_primitive()? {
            return Err(Error::NotPrimitive(modulus.to_string()));
        }
        Ok(Self { m, modulus })
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn modulus(&self) -> &Poly2 {
        &self.modulus
    }

    /// Size of the multiplicative group, `2^m - 1`.
    pub fn group_order(&self) -> usize {
        (1 << self.m) - 1
    }

    /// The primitive element (residue of `x`).
    pub fn alpha(&self) -> Poly2 {
        Poly2::x().rem(&self.modulus).expect("nonzero modulus")
    }

    pub fn add(&self, a: &Poly2, b: &Poly2) -> Poly2 {
        a + b
    }

    pub fn mul(&self, a: &Poly2, b: &Poly2) -> Poly2 {
        a.mulmod(b, &self.modulus).expect("nonzero modulus")
    }

    pub fn pow(&self, a: &Poly2, e: u64) -> Poly2 {
        a.powmod_u64(e, &self.modulus).expect("modulus has degree >= 1")
    }

    pub fn alpha_pow(&self, i: u64) -> Poly2 {
        self.pow(&Poly2::x(), i)
    }

    /// `M_s(x)` for the length `n = 2^m - 1`.
    pub fn min_poly(&self, s: usize) -> Poly2 {
        let n = self.group_order();
        let coset = cyclotomic_coset(s % n, n);
        expand_min_poly(self, &Poly2::x(), &coset)
    }
}

/// Expands `prod_{i in coset} (x - beta^i)` and checks that the result has
/// binary coefficients.
fn expand_min_poly(field: &ExtField, beta: &Poly2, coset: &[usize]) -> Poly2 {
    // coefficients as field elements, constant term first
    let mut coeffs = vec![Poly2::one()];
    for &i in coset {
        let root = field.pow(beta, i as u64);
        let mut next = vec![Poly2::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] += &field.mul(&root, c);
        }
        coeffs = next;
    }
    let mut out = Poly2::zero();
    for (j, c) in coeffs.iter().enumerate() {
        assert!(
            c.is_zero() || c.is_one(),
            "minimal polynomial coefficient {c} not in GF(2)"
        );
        if c.is_one() {
            out.flip(j);
        }
    }
    out
}

pub fn binary_weight(s: u64) -> u32 {
    s.count_ones()
}

/// `C_{s,n}` in doubling order, starting at `s mod n`.
pub fn cyclotomic_coset(s: usize, n: usize) -> Vec<usize> {
    let start = s % n;
    let mut out = vec![start];
    let mut v = (2 * start) % n;
    while v != start {
        out.push(v);
        v = (2 * v) % n;
    }
    out
}

/// Partition of `{0, .., n-1}` into cyclotomic cosets, sorted by representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    n: usize,
    cosets: Vec<Vec<usize>>,
    reps: Vec<usize>,
    #[serde(skip)]
    index: Vec<usize>,
}

impl CosetTable {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n.is_multiple_of(2) {
            return Err(Error::EvenLength(n));
        }
        let mut index = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        let mut reps = Vec::new();
        for s in 0..n {
            if index[s] != usize::MAX {
                continue;
            }
            let c = cyclotomic_coset(s, n);
            for &e in &c {
                index[e] = cosets.len();
            }
            reps.push(s);
            cosets.push(c);
        }
        Ok(Self {
            n,
            cosets,
            reps,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    /// Canonical representatives (the minimum of each coset), ascending.
    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn coset_of(&self, s: usize) -> &[usize] {
        &self.cosets[self.index[s % self.n]]
    }

    pub fn rep_of(&self, s: usize) -> usize {
        self.reps[self.index[s % self.n]]
    }
}

/// Primitive `n`-th roots of unity for odd `n`, living in `F_{2^m}` with
/// `m = |C_{1,n}|`.
#[derive(Debug, Clone)]
pub struct RootsOfUnity {
    n: usize,
    field: ExtField,
    beta: Poly2,
    cosets: CosetTable,
}

impl RootsOfUnity {
    pub fn new(n: usize) -> Result<Self> {
        let cosets = CosetTable::new(n)?;
        let m = num::order_of_two(n as u64) as usize;
        let field = ExtField::new(m)?;
        let beta = field.alpha_pow((field.group_order() / n) as u64);
        Ok(Self {
            n,
            field,
            beta,
            cosets,
        })
    }

    /// Roots of unity of order `2^m - 1`.
    pub fn primitive_length(m: usize) -> Result<Self> {
        if !(1..=MAX_FIELD_DEGREE).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        Self::new((1 << m) - 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &ExtField {
        &self.field
    }

    pub fn cosets(&self) -> &CosetTable {
        &self.cosets
    }

    /// Minimal polynomial of `beta^s`, where `beta` is the chosen primitive
    /// `n`-th root of unity.
    pub fn min_poly(&self, s: usize) -> Poly2 {
        expand_min_poly(&self.field, &self.beta, self.cosets.coset_of(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        Poly2::parse(s).unwrap()
    }

    #[test]
    fn field_moduli() {
        assert_eq!(ExtField::new(1).unwrap().modulus(), &p("11"));
        assert_eq!(ExtField::new(3).unwrap().modulus(), &p("1101"));
        assert_eq!(ExtField::new(4).unwrap().modulus(), &p("11001"));
        assert!(ExtField::new(0).is_err());
        assert!(ExtField::new(14).is_err());
    }

    #[test]
    fn field_modulus_scan_matches_brute_force() {
        // first degree-m polynomial (ascending) whose x has order 2^m - 1
        for m in 2..=8usize {
            let want = ((1u64 << m) | 1..1u64 << (m + 1))
                .step_by(2)
                .find(|&f| {
                    let mut v = 1u64;
                    let mut e = 0u64;
                    loop {
                        v <<= 1;
                        if (v >> m) & 1 == 1 {
                            v ^= f;
                        }
                        e += 1;
                        if v == 1 || e > (1 << m) {
                            break;
                        }
                    }
                    v == 1 && e == (1 << m) - 1
                })
                .unwrap();
            assert_eq!(ExtField::new(m).unwrap().modulus().as_u64(), Some(want));
        }
    }

    #[test]
    fn alpha_is_primitive() {
        for m in 1..=10 {
            let f = ExtField::new(m).unwrap();
            let a = f.alpha();
            let n = f.group_order() as u64;
            assert!(f.pow(&a, n).is_one());
            for q in num::prime_divisors(n) {
                assert!(!f.pow(&a, n / q).is_one());
            }
        }
    }

    #[test]
    fn coset_examples() {
        let t = CosetTable::new(7).unwrap();
        assert_eq!(t.cosets(), &[vec![0], vec![1, 2, 4], vec![3, 6, 5]]);
        assert_eq!(t.reps(), &[0, 1, 3]);

        let t = CosetTable::new(15).unwrap();
        assert_eq!(
            t.cosets(),
            &[
                vec![0],
                vec![1, 2, 4, 8],
                vec![3, 6, 12, 9],
                vec![5, 10],
                vec![7, 14, 13, 11]
            ]
        );
        assert_eq!(t.reps(), &[0, 1, 3, 5, 7]);

        let t = CosetTable::new(31).unwrap();
        assert!(t.cosets().iter().skip(1).all(|c| c.len() == 5));
        assert!(CosetTable::new(8).is_err());
        assert!(CosetTable::new(0).is_err());
        assert_eq!(CosetTable::new(1).unwrap().cosets(), &[vec![0]]);
    }

    #[test]
    fn coset_json_shape() {
        let t = CosetTable::new(7).unwrap();
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"n": 7, "cosets": [[0], [1, 2, 4], [3, 6, 5]], "reps": [0, 1, 3]})
        );
    }

    #[test]
    fn min_poly_examples() {
        let f3 = ExtField::new(3).unwrap();
        assert_eq!(f3.min_poly(0), p("11"));
        assert_eq!(f3.min_poly(1), p("1101"));
        assert_eq!(f3.min_poly(3), p("1011"));
    }

    #[test]
    fn min_polys_multiply_to_x_n_plus_one() {
        for m in 1..=8 {
            let roots = RootsOfUnity::primitive_length(m).unwrap();
            let mut acc = Poly2::one();
            for &s in roots.cosets().reps() {
                let mp = roots.min_poly(s);
                assert_eq!(mp.degree(), Some(roots.cosets().coset_of(s).len()));
                assert!(mp.is_irreducible().unwrap());
                acc = acc.mul(&mp);
            }
            assert_eq!(acc, Poly2::x_n_plus_one(roots.n()), "m = {m}");
        }
    }

    #[test]
    fn min_poly_constant_on_cosets() {
        for m in 1..=5 {
            let roots = RootsOfUnity::primitive_length(m).unwrap();
            for s in 0..roots.n() {
                assert_eq!(roots.min_poly(s), roots.min_poly(roots.cosets().rep_of(s)));
            }
        }
    }

    #[test]
    fn min_poly_orders() {
        for m in 1..=8 {
            let roots = RootsOfUnity::primitive_length(m).unwrap();
            let n = roots.n() as u64;
            for &s in roots.cosets().reps() {
                let want = n / num::gcd(s as u64, n);
                assert_eq!(roots.min_poly(s).order().unwrap(), want, "m={m} s={s}");
            }
        }
    }

    #[test]
    fn non_mersenne_length() {
        // x^23 + 1 = (x+1) * two degree-11 irreducibles (Golay)
        let roots = RootsOfUnity::new(23).unwrap();
        assert_eq!(roots.field().degree(), 11);
        let mut acc = Poly2::one();
        for &s in roots.cosets().reps() {
            acc = acc.mul(&roots.min_poly(s));
        }
        assert_eq!(acc, Poly2::x_n_plus_one(23));
        assert_eq!(roots.min_poly(1).degree(), Some(11));
    }

    #[test]
    fn distinct_small_odd_cosets() {
        for m in 2..=10usize {
            let n = (1usize << m) - 1;
            let bound = 1usize << m.div_ceil(2);
            let t = CosetTable::new(n).unwrap();
            let odd: Vec<usize> = (1..=bound.min(n - 1)).step_by(2).collect();
            for (i, &s) in odd.iter().enumerate() {
                for &s2 in &odd[i + 1..] {
                    assert_ne!(t.rep_of(s), t.rep_of(s2), "m={m} s={s} s'={s2}");
                }
            }
        }
    }

    #[test]
    fn weights() {
        assert_eq!(binary_weight(0), 0);
        assert_eq!(binary_weight(5), 2);
        assert_eq!(binary_weight(127), 7);
    }
}

//! Complete factorization over GF(2): squarefree decomposition, distinct-degree
//! splitting, then equal-degree splitting with a seeded trace-map splitter.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use super::Poly2;
use crate::error::{Error, Result};

const DEFAULT_SEED: u64 = 0x5eed_f00d;

/// Irreducible factors with multiplicities, sorted by (degree, bit pattern).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(Poly2, u32)>,
    original: Poly2,
}

impl Factorization {
    pub fn factors(&self) -> &[(Poly2, u32)] {
        &self.factors
    }

    pub fn original(&self) -> &Poly2 {
        &self.original
    }

    /// Product of `factor^multiplicity` over all factors.
    pub fn product(&self) -> Poly2 {
        let mut acc = Poly2::one();
        for (p, m) in &self.factors {
            for _ in 0..*m {
                acc = acc.mul(p);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, m)| m == 1)
    }
}

impl Serialize for Factorization {
    /// `[["bits", multiplicity], ...]`
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<(String, u32)> = self
            .factors
            .iter()
            .map(|(p, m)| (p.to_bit_string(), *m))
            .collect();
        rows.serialize(s)
    }
}

pub fn factorize(f: &Poly2) -> Result<Factorization> {
    factorize_with_seed(f, DEFAULT_SEED)
}

/// Factorization with an explicit seed for the equal-degree splitter. The
/// result is independent of the seed; only the work done varies.
pub fn factorize_with_seed(f: &Poly2, seed: u64) -> Result<Factorization> {
    match f.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial(f.to_string())),
        Some(_) => {}
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut factors: Vec<(Poly2, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        for (block, d) in distinct_degree(&part)? {
            for p in equal_degree(&block, d, &mut rng)? {
                match factors.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, m)) => *m += mult,
                    None => factors.push((p, mult)),
                }
            }
        }
    }
    factors.sort();
    Ok(Factorization {
        factors,
        original: f.clone(),
    })
}

/// Splits `f` into pairwise coprime squarefree parts tagged with multiplicity.
fn squarefree_decomposition(f: &Poly2) -> Result<Vec<(Poly2, u32)>> {
    let mut out = Vec::new();
    let deriv = f.derivative();
    if deriv.is_zero() {
        // every exponent is even, so f is a square
        for (p, m) in squarefree_decomposition(&f.sqrt())? {
            out.push((p, 2 * m));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&deriv)?;
    let mut w = f.div_exact(&c).expect("gcd divides f");
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.div_exact(&y).expect("gcd divides w");
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        c = c.div_exact(&y).expect("gcd divides c");
        w = y;
    }
    if !c.is_one() {
        for (p, m) in squarefree_decomposition(&c.sqrt())? {
            out.push((p, 2 * m));
        }
    }
    Ok(out)
}

/// For squarefree `f`, groups irreducible factors by degree.
fn distinct_degree(f: &Poly2) -> Result<Vec<(Poly2, usize)>> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = Poly2::x();
    let mut h = x.rem(&rest)?;
    let mut i = 0;
    while rest.degree().is_some_and(|d| d >= 2 * (i + 1)) {
        i += 1;
        h = h.square().rem(&rest)?;
        let g = (&h + &x).gcd(&rest)?;
        if !g.is_one() {
            rest = rest.div_exact(&g).expect("gcd divides rest");
            h = h.rem(&rest)?;
            out.push((g, i));
        }
    }
    if let Some(d) = rest.degree().filter(|&d| d >= 1) {
        out.push((rest, d));
    }
    Ok(out)
}

/// Splits a product of distinct irreducibles, all of degree `d`.
fn equal_degree(g: &Poly2, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly2>> {
    let n = g.degree().expect("nonzero block");
    if n == d {
        return Ok(vec![g.clone()]);
    }
    loop {
        let a = random_below(n, rng);
        if a.degree().is_none_or(|da| da == 0) {
            continue;
        }
        // trace map a + a^2 + ... + a^{2^{d-1}} mod g
        let mut t = a.clone();
        let mut acc = a;
        for _ in 1..d {
            t = t.square().rem(g)?;
            acc += &t;
        }
        let b = acc.gcd(g)?;
        if b.degree().is_some_and(|db| db > 0 && db < n) {
            let other = g.div_exact(&b).expect("gcd divides g");
            let mut parts = equal_degree(&b, d, rng)?;
            parts.extend(equal_degree(&other, d, rng)?);
            return Ok(parts);
        }
    }
}

fn random_below(n: usize, rng: &mut impl Rng) -> Poly2 {
    let words = n.div_ceil(64);
    let mut w: Vec<u64> = (0..words).map(|_| rng.gen()).collect();
    if !n.is_multiple_of(64) {
        if let Some(last) = w.last_mut() {
            *last &= (1u64 << (n % 64)) - 1;
        }
    }
    Poly2::from_words(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        Poly2::parse(s).unwrap()
    }

    #[test]
    fn small_examples() {
        let f = factorize(&p("101")).unwrap();
        assert_eq!(f.factors(), &[(p("11"), 2)]);

        let f = factorize(&Poly2::x_n_plus_one(7)).unwrap();
        assert_eq!(
            f.factors(),
            &[(p("11"), 1), (p("1101"), 1), (p("1011"), 1)]
        );
        assert!(factorize(&Poly2::one()).is_err());
    }

    #[test]
    fn repeated_and_zero_root_factors() {
        // x^3 (x+1)^5 (x^2+x+1)^3
        let mut f = Poly2::monomial(3);
        for _ in 0..5 {
            f = f.mul(&p("11"));
        }
        for _ in 0..3 {
            f = f.mul(&p("111"));
        }
        let fac = factorize(&f).unwrap();
        assert_eq!(
            fac.factors(),
            &[(p("01"), 3), (p("11"), 5), (p("111"), 3)]
        );
        assert_eq!(fac.product(), f);
    }

    #[test]
    fn seed_does_not_change_result() {
        let f = Poly2::x_n_plus_one(63);
        let a = factorize_with_seed(&f, 1).unwrap();
        let b = factorize_with_seed(&f, 99).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.product(), f);
    }
}

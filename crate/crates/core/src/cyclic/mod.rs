//! Binary cyclic codes as ideals of `GF(2)[x]/(x^n + 1)`.
//!
//! Codewords are polynomials of degree below `n`. A code is fixed by its
//! generator `g`, which divides `x^n + 1`; containment of codes reverses
//! divisibility of generators.

mod decode;
mod distance;

pub use decode::{Decoded, SyndromeDecoder, DEFAULT_BUDGET};
pub use distance::{min_distance, DistanceReport};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ext::RootsOfUnity;
use crate::poly::Poly2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    n: usize,
    gen: Poly2,
    k: usize,
}

impl CyclicCode {
    pub fn new(n: usize, gen: Poly2) -> Result<Self> {
        if n == 0 || n.is_multiple_of(2) {
            return Err(Error::EvenLength(n));
        }
        if gen.is_zero() {
            return Err(Error::Parameters("generator must be nonzero".into()));
        }
        let (_, r) = Poly2::x_n_plus_one(n).divmod(&gen)?;
        if !r.is_zero() {
            return Err(Error::NotADivisor {
                n,
                generator: gen.to_bit_string(),
                remainder: r.to_bit_string(),
            });
        }
        let k = n - gen.degree().expect("nonzero");
        Ok(Self { n, gen, k })
    }

    /// The `[n, n]` code generated by 1.
    pub fn ambient(n: usize) -> Result<Self> {
        Self::new(n, Poly2::one())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Poly2 {
        &self.gen
    }

    /// `h(x) = (x^n + 1) / g(x)`.
    pub fn check_polynomial(&self) -> Poly2 {
        Poly2::x_n_plus_one(self.n)
            .div_exact(&self.gen)
            .expect("generator divides x^n + 1")
    }

    /// Non-systematic encoding `m(x) g(x)`.
    pub fn encode(&self, message: &Poly2) -> Result<Poly2> {
        if message.degree().is_some_and(|d| d >= self.k) {
            return Err(Error::MessageTooLong { k: self.k });
        }
        Ok(message.mul(&self.gen))
    }

    pub fn is_codeword(&self, word: &Poly2) -> bool {
        word.degree().is_none_or(|d| d < self.n) && self.gen.divides(word)
    }

    /// Syndrome as the remainder modulo the generator.
    pub fn syndrome(&self, word: &Poly2) -> Poly2 {
        word.rem(&self.gen).expect("nonzero generator")
    }

    /// The dual code, generated by the reciprocal of the check polynomial.
    pub fn dual(&self) -> CyclicCode {
        let gen = self.check_polynomial().reciprocal();
        CyclicCode::new(self.n, gen).expect("reciprocal of a divisor divides x^n + 1")
    }

    /// `inner ⊆ outer` iff `outer.gen` divides `inner.gen`.
    pub fn is_subcode(inner: &CyclicCode, outer: &CyclicCode) -> Result<bool> {
        if inner.n != outer.n {
            return Err(Error::LengthMismatch(inner.n, outer.n));
        }
        Ok(outer.gen.divides(&inner.gen))
    }

    pub fn contains(&self, other: &CyclicCode) -> Result<bool> {
        Self::is_subcode(other, self)
    }

    pub fn is_dual_containing(&self) -> bool {
        Self::is_subcode(&self.dual(), self).expect("same length")
    }

    /// Exponents `s` in `Z_n` with `g(beta^s) = 0`, ascending.
    pub fn zeros(&self) -> Result<Vec<usize>> {
        let roots = RootsOfUnity::new(self.n)?;
        let mut out = Vec::new();
        for (rep, coset) in roots.cosets().reps().iter().zip(roots.cosets().cosets()) {
            if roots.min_poly(*rep).divides(&self.gen) {
                out.extend_from_slice(coset);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// BCH bound: one more than the longest run of cyclically consecutive
    /// zeros. A lower bound on the minimum distance.
    pub fn bch_bound(&self) -> Result<usize> {
        let zeros = self.zeros()?;
        let n = self.n;
        if zeros.len() == n {
            return Ok(n + 1);
        }
        let mut is_zero = vec![false; n];
        for z in zeros {
            is_zero[z] = true;
        }
        let start = is_zero.iter().position(|&z| !z).expect("some nonzero");
        let (mut best, mut run) = (0, 0);
        for i in 1..=n {
            if is_zero[(start + i) % n] {
                run += 1;
                best = best.max(run);
            } else {
                run = 0;
            }
        }
        Ok(best + 1)
    }

    pub fn descriptor(&self) -> CodeDescriptor {
        CodeDescriptor {
            n: self.n,
            generator: self.gen.clone(),
            k: Some(self.k),
        }
    }
}

/// `{"n": int, "generator": "bits-LSB-first", "k": int}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeDescriptor {
    pub n: usize,
    pub generator: Poly2,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl CodeDescriptor {
    pub fn build(&self) -> Result<CyclicCode> {
        let code = CyclicCode::new(self.n, self.generator.clone())?;
        if let Some(k) = self.k.filter(|&k| k != code.k) {
            return Err(Error::Parameters(format!(
                "descriptor claims k = {k}, generator gives k = {}",
                code.k
            )));
        }
        Ok(code)
    }
}

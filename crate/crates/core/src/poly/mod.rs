//! Polynomials over GF(2), bit-packed into 64-bit words.
//!
//! Bit `i` of the packed representation holds the coefficient of `x^i`, so
//! the constant term is the least significant bit of the first word. Values
//! are kept canonical (no zero words above the leading term), which makes
//! structural equality coincide with polynomial equality.

mod factor;
mod order;
mod parse;

pub use factor::{factorize, factorize_with_seed, Factorization};
pub use order::ORDER_DEGREE_CAP;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num_bigint::BigUint;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A polynomial over GF(2).
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Self { words: Vec::new() }
    }

    pub fn one() -> Self {
        Self { words: vec![1] }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self { words: vec![2] }
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut words = vec![0; k / WORD + 1];
        words[k / WORD] = 1 << (k % WORD);
        Self { words }
    }

    /// `x^n + 1`.
    pub fn x_n_plus_one(n: usize) -> Self {
        let mut p = Self::monomial(n);
        p.words[0] ^= 1;
        p.normalize();
        p
    }

    pub fn from_u64(bits: u64) -> Self {
        Self::from_words(vec![bits])
    }

    pub fn from_words(words: Vec<u64>) -> Self {
        let mut p = Self { words };
        p.normalize();
        p
    }

    /// Builds `sum x^e` over the given exponents. Repeated exponents cancel.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exponents {
            p.flip(e);
        }
        p
    }

    /// Coefficients in ascending order of exponent.
    pub fn from_bits(bits: &[bool]) -> Self {
        let mut words = vec![0u64; bits.len().div_ceil(WORD)];
        for (i, &b) in bits.iter().enumerate() {
            if b {
                words[i / WORD] |= 1 << (i % WORD);
            }
        }
        Self::from_words(words)
    }

    /// Coefficients `c_0 .. c_{len-1}`; higher terms are dropped.
    pub fn to_bits(&self, len: usize) -> Vec<bool> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// The packed value when the degree is below 64.
    pub fn as_u64(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    /// Degree, or `None` for the zero polynomial (degree minus infinity).
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * WORD + (WORD - 1 - top.leading_zeros() as usize))
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / WORD)
            .is_some_and(|w| (w >> (i % WORD)) & 1 == 1)
    }

    /// Value of the constant term, i.e. `f(0)`.
    pub fn constant_term(&self) -> bool {
        self.coeff(0)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Exponents with a nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (wi, &w) in self.words.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let b = w.trailing_zeros() as usize;
                out.push(wi * WORD + b);
                w &= w - 1;
            }
        }
        out
    }

    /// Toggles the coefficient of `x^i`.
    pub fn flip(&mut self, i: usize) {
        if self.words.len() <= i / WORD {
            self.words.resize(i / WORD + 1, 0);
        }
        self.words[i / WORD] ^= 1 << (i % WORD);
        self.normalize();
    }

    fn normalize(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        Self::from_words(words)
    }

    /// Multiplication by `x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut words = Vec::new();
        xor_shifted(&mut words, &self.words, k);
        Self::from_words(words)
    }

    /// Carry-less product, schoolbook over the set bits of the sparser factor.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (dense, sparse) = if self.weight() >= other.weight() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = vec![0u64; dense.words.len() + sparse.words.len()];
        for e in sparse.exponents() {
            xor_shifted(&mut words, &dense.words, e);
        }
        Self::from_words(words)
    }

    pub fn square(&self) -> Self {
        let mut words = Vec::with_capacity(2 * self.words.len());
        for &w in &self.words {
            words.push(spread(w as u32));
            words.push(spread((w >> 32) as u32));
        }
        Self::from_words(words)
    }

    /// Square root of a polynomial with only even-exponent terms.
    ///
    /// Over GF(2) squaring maps `x^i` to `x^{2i}`, so the root keeps every
    /// other coefficient. Odd-exponent terms are ignored.
    pub fn sqrt(&self) -> Self {
        let mut out = Self::zero();
        for e in self.exponents() {
            if e % 2 == 0 {
                out.set_unnormalized(e / 2);
            }
        }
        out.normalize();
        out
    }

    fn set_unnormalized(&mut self, i: usize) {
        if self.words.len() <= i / WORD {
            self.words.resize(i / WORD + 1, 0);
        }
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    /// Formal derivative: odd-exponent terms survive, shifted down by one.
    pub fn derivative(&self) -> Self {
        const ODD: u64 = 0xAAAA_AAAA_AAAA_AAAA;
        let n = self.words.len();
        let mut words = vec![0u64; n];
        for i in 0..n {
            let cur = self.words[i] & ODD;
            words[i] |= cur >> 1;
            if i > 0 {
                words[i - 1] |= cur << 63;
            }
        }
        Self::from_words(words)
    }

    /// `x^{deg f} f(1/x)`; the zero polynomial maps to itself.
    pub fn reciprocal(&self) -> Self {
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut out = Self::zero();
        for e in self.exponents() {
            out.set_unnormalized(d - e);
        }
        out.normalize();
        out
    }

    /// Quotient and remainder with `deg r < deg b`.
    pub fn divmod(&self, b: &Self) -> Result<(Self, Self)> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        let mut quot = Vec::new();
        let mut top = degree_of(&rem);
        while let Some(t) = top {
            if t < db {
                break;
            }
            let s = t - db;
            xor_shifted(&mut rem, &b.words, s);
            if quot.len() <= s / WORD {
                quot.resize(s / WORD + 1, 0);
            }
            quot[s / WORD] |= 1 << (s % WORD);
            top = degree_below(&rem, t);
        }
        Ok((Self::from_words(quot), Self::from_words(rem)))
    }

    pub fn rem(&self, b: &Self) -> Result<Self> {
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.words.clone();
        reduce_words(&mut rem, &b.words, db);
        Ok(Self::from_words(rem))
    }

    /// Exact quotient; fails unless `b` divides `self`.
    pub fn div_exact(&self, b: &Self) -> Option<Self> {
        match self.divmod(b) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Greatest common divisor. Over GF(2) every nonzero polynomial is monic.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    pub fn mulmod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        self.mul(other).rem(modulus)
    }

    fn check_modulus(modulus: &Self) -> Result<()> {
        match modulus.degree() {
            None => Err(Error::DivisionByZero),
            Some(0) => Err(Error::ConstantPolynomial(modulus.to_string())),
            Some(_) => Ok(()),
        }
    }

    /// `self^e mod modulus` for an arbitrary-precision exponent.
    pub fn powmod(&self, e: &BigUint, modulus: &Self) -> Result<Self> {
        Self::check_modulus(modulus)?;
        let base = self.rem(modulus)?;
        let mut acc = Self::one();
        for i in (0..e.bits()).rev() {
            acc = acc.square().rem(modulus)?;
            if e.bit(i) {
                acc = acc.mul(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    pub fn powmod_u64(&self, e: u64, modulus: &Self) -> Result<Self> {
        Self::check_modulus(modulus)?;
        let base = self.rem(modulus)?;
        let mut acc = Self::one();
        for i in (0..64 - e.leading_zeros()).rev() {
            acc = acc.square().rem(modulus)?;
            if (e >> i) & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
        }
        Ok(acc)
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> Result<bool> {
        let d = match self.degree() {
            None | Some(0) => return Err(Error::ConstantPolynomial(self.to_string())),
            Some(d) => d,
        };
        if d == 1 {
            return Ok(true);
        }
        // x^{2^j} mod f for j = 0..=d
        let x = Self::x();
        let mut frob = Vec::with_capacity(d + 1);
        let mut h = x.rem(self)?;
        frob.push(h.clone());
        for _ in 0..d {
            h = h.square().rem(self)?;
            frob.push(h.clone());
        }
        if frob[d] != x.rem(self)? {
            return Ok(false);
        }
        for p in crate::num::prime_divisors(d as u64) {
            let h = frob[d / p as usize].add(&x);
            if !h.gcd(self)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical text form: coefficients constant-term first, e.g. `1101`
    /// for `x^3 + x + 1`. The zero polynomial is `0`.
    pub fn to_bit_string(&self) -> String {
        match self.degree() {
            None => "0".to_string(),
            Some(d) => (0..=d)
                .map(|i| if self.coeff(i) { '1' } else { '0' })
                .collect(),
        }
    }

    /// Exponent-list text form, e.g. `[0,1,3]`.
    pub fn to_exponent_string(&self) -> String {
        let parts: Vec<String> = self.exponents().iter().map(|e| e.to_string()).collect();
        format!("[{}]", parts.join(","))
    }

    /// Parses a bit string (`1101`), an exponent list (`[0,1,3]`) or an
    /// algebraic expression (`x^3+x+1`).
    pub fn parse(s: &str) -> Result<Self> {
        parse::parse(s)
    }
}

/// Interleaves zeros between the bits of `v`.
fn spread(v: u32) -> u64 {
    let mut x = v as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

/// `dst ^= src << shift`, growing `dst` as needed.
pub(crate) fn xor_shifted(dst: &mut Vec<u64>, src: &[u64], shift: usize) {
    let ws = shift / WORD;
    let bs = shift % WORD;
    let need = ws + src.len() + usize::from(bs != 0);
    if dst.len() < need {
        dst.resize(need, 0);
    }
    if bs == 0 {
        for (j, &w) in src.iter().enumerate() {
            dst[ws + j] ^= w;
        }
    } else {
        for (j, &w) in src.iter().enumerate() {
            dst[ws + j] ^= w << bs;
            dst[ws + j + 1] ^= w >> (WORD - bs);
        }
    }
}

fn degree_of(words: &[u64]) -> Option<usize> {
    words
        .iter()
        .rposition(|&w| w != 0)
        .map(|i| i * WORD + (WORD - 1 - words[i].leading_zeros() as usize))
}

/// Degree of `words` given that no bit above `bound` is set.
fn degree_below(words: &[u64], bound: usize) -> Option<usize> {
    let end = (bound / WORD + 1).min(words.len());
    degree_of(&words[..end])
}

/// Reduces `words` modulo the polynomial packed in `m` (degree `dm`).
pub(crate) fn reduce_words(words: &mut Vec<u64>, m: &[u64], dm: usize) {
    let mut top = degree_of(words);
    while let Some(t) = top {
        if t < dm {
            break;
        }
        xor_shifted(words, m, t - dm);
        top = degree_below(words, t);
    }
    while words.last() == Some(&0) {
        words.pop();
    }
}

impl Ord for Poly2 {
    /// Numeric order of the bit pattern, which refines order by degree.
    fn cmp(&self, other: &Self) -> Ordering {
        self.words
            .len()
            .cmp(&other.words.len())
            .then_with(|| self.words.iter().rev().cmp(other.words.iter().rev()))
    }
}

impl PartialOrd for Poly2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, rhs: &Poly2) -> Poly2 {
        Poly2::add(self, rhs)
    }
}

impl AddAssign<&Poly2> for Poly2 {
    fn add_assign(&mut self, rhs: &Poly2) {
        if self.words.len() < rhs.words.len() {
            self.words.resize(rhs.words.len(), 0);
        }
        for (w, r) in self.words.iter_mut().zip(&rhs.words) {
            *w ^= r;
        }
        self.normalize();
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, rhs: &Poly2) -> Poly2 {
        Poly2::mul(self, rhs)
    }
}

impl fmt::Display for Poly2 {
    /// Algebraic form, highest degree first: `x^3 + x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .iter()
            .rev()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({})", self)
    }
}

impl std::str::FromStr for Poly2 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

impl Serialize for Poly2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_bit_string())
    }
}

impl<'de> Deserialize<'de> for Poly2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Poly2::parse(&s).map_err(serde::de::Error::custom)
    }
}

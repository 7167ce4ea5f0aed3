//! Polynomial order (period) and primitivity.
//!
//! `ord(f)` is the least `e > 0` with `x^e = 1 (mod f)`. It is assembled from
//! the factorization: an irreducible `p` of degree `d` has order dividing
//! `2^d - 1`, a power `p^a` has order `2^b ord(p)` with `2^b >= a` minimal,
//! and coprime parts combine by lcm.

use super::{factorize, Poly2};
use crate::error::{Error, Result};
use crate::num;

/// Largest irreducible-factor degree the order engine accepts; `2^d - 1`
/// must fit in a `u64` to be factored.
pub const ORDER_DEGREE_CAP: usize = 64;

fn check_order_input(f: &Poly2) -> Result<()> {
    match f.degree() {
        None | Some(0) => Err(Error::ConstantPolynomial(f.to_string())),
        Some(_) if !f.constant_term() => Err(Error::ZeroConstantTerm(f.to_string())),
        Some(_) => Ok(()),
    }
}

/// Order of an irreducible `p` with `p(0) = 1`.
fn irreducible_order(p: &Poly2) -> Result<u64> {
    let d = p.degree().expect("nonconstant");
    if d > ORDER_DEGREE_CAP {
        return Err(Error::DegreeCap {
            degree: d,
            cap: ORDER_DEGREE_CAP,
        });
    }
    let group = if d == 64 { u64::MAX } else { (1u64 << d) - 1 };
    let x = Poly2::x();
    let mut e = group;
    for q in num::prime_divisors(group) {
        while e % q == 0 && x.powmod_u64(e / q, p)?.is_one() {
            e /= q;
        }
    }
    Ok(e)
}

/// Smallest `b` with `2^b >= a`.
fn multiplicity_lift(a: u32) -> u32 {
    if a <= 1 {
        0
    } else {
        32 - (a - 1).leading_zeros()
    }
}

impl Poly2 {
    /// Order of the polynomial; requires `f(0) = 1` and degree at least 1.
    pub fn order(&self) -> Result<u64> {
        check_order_input(self)?;
        let fac = factorize(self)?;
        let mut acc = 1u64;
        for (p, a) in fac.factors() {
            let e = irreducible_order(p)?;
            let lifted = e
                .checked_mul(1u64 << multiplicity_lift(*a))
                .ok_or(Error::OrderOverflow)?;
            acc = num::lcm(acc, lifted).ok_or(Error::OrderOverflow)?;
        }
        Ok(acc)
    }

    /// True iff `f(0) = 1` and `ord(f) = 2^deg(f) - 1`. Constant input is not
    /// primitive. Errors only for irreducible inputs above the degree cap.
    pub fn is_primitive(&self) -> Result<bool> {
        let Some(d) = self.degree() else {
            return Ok(false);
        };
        if d == 0 || !self.constant_term() || !self.is_irreducible()? {
            return Ok(false);
        }
        let e = irreducible_order(self)?;
        Ok(d <= 64 && e == if d == 64 { u64::MAX } else { (1u64 << d) - 1 })
    }
}

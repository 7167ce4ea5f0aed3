//! Punctured Reed–Muller and BCH codes of length `2^m - 1`, built from
//! products of minimal polynomials over cyclotomic coset representatives.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cyclic::{CodeDescriptor, CyclicCode};
use crate::error::{Error, Result};
use crate::ext::{binary_weight, RootsOfUnity, MAX_FIELD_DEGREE};
use crate::num::{binomial, ceil_div};
use crate::poly::Poly2;

fn check_rm(r: usize, m: usize) -> Result<()> {
    if !(1 <= r && r < m && m <= MAX_FIELD_DEGREE) {
        return Err(Error::Parameters(format!(
            "punctured Reed-Muller needs 1 <= r < m <= {MAX_FIELD_DEGREE}, got r = {r}, m = {m}"
        )));
    }
    Ok(())
}

/// Product of `M_s` over the canonical representatives accepted by `keep`.
fn product_over_reps(roots: &RootsOfUnity, keep: impl Fn(usize) -> bool) -> Poly2 {
    roots
        .cosets()
        .reps()
        .iter()
        .filter(|&&s| keep(s))
        .fold(Poly2::one(), |acc, &s| acc.mul(&roots.min_poly(s)))
}

/// `R(r, m)*`: generator `prod M_s` over representatives with
/// `1 <= w2(s) <= m - r - 1`. The dimension is checked against
/// `sum_{i <= r} C(m, i)`.
pub fn punctured_rm(r: usize, m: usize) -> Result<CyclicCode> {
    check_rm(r, m)?;
    let roots = RootsOfUnity::primitive_length(m)?;
    let top = (m - r - 1) as u32;
    let gen = product_over_reps(&roots, |s| (1..=top).contains(&binary_weight(s as u64)));
    let code = CyclicCode::new(roots.n(), gen)?;
    let want = rm_dimension(r, m);
    assert_eq!(code.k(), want, "R({r},{m})* dimension");
    Ok(code)
}

/// `sum_{i=0}^{r} C(m, i)`.
pub fn rm_dimension(r: usize, m: usize) -> usize {
    (0..=r).map(|i| binomial(m as u64, i as u64) as usize).sum()
}

/// `(x + 1) prod M_s` over representatives with `1 <= w2(s) <= r`; checked
/// against the generator of the computed dual.
pub fn punctured_rm_dual_gen(r: usize, m: usize) -> Result<Poly2> {
    check_rm(r, m)?;
    let roots = RootsOfUnity::primitive_length(m)?;
    let r32 = r as u32;
    let gen = Poly2::from_u64(0b11)
        .mul(&product_over_reps(&roots, |s| (1..=r32).contains(&binary_weight(s as u64))));
    let dual = punctured_rm(r, m)?.dual();
    assert_eq!(dual.generator(), &gen, "R({r},{m})* dual generator");
    Ok(gen)
}

/// Primitive BCH code of length `2^m - 1`, designed distance `d` and offset
/// `b`: the generator is the product of `M_s` over the distinct cosets of
/// `b, .., b + d - 2`.
pub fn bch(m: usize, d: usize, b: usize) -> Result<CyclicCode> {
    if !(1..=MAX_FIELD_DEGREE).contains(&m) {
        return Err(Error::FieldDegree(m));
    }
    let n = (1usize << m) - 1;
    if !(2..=n).contains(&d) {
        return Err(Error::Parameters(format!(
            "designed distance must satisfy 2 <= d <= {n}, got {d}"
        )));
    }
    let roots = RootsOfUnity::primitive_length(m)?;
    let reps: BTreeSet<usize> = (b..=b + d - 2).map(|i| roots.cosets().rep_of(i % n)).collect();
    let gen = reps
        .iter()
        .fold(Poly2::one(), |acc, &s| acc.mul(&roots.min_poly(s)));
    let code = CyclicCode::new(n, gen)?;
    if b == 1 && bch_dual_containing_predicted(m, d) {
        assert_eq!(code.k(), bch_dimension_predicted(m, d), "BCH({m},{d}) dimension");
    }
    Ok(code)
}

/// Closed-form dual-containment for narrow-sense primitive BCH codes:
/// `2 <= d <= 2^ceil(m/2) - 1`.
pub fn bch_dual_containing_predicted(m: usize, d: usize) -> bool {
    m >= 2 && d >= 2 && d < (1usize << ceil_div(m, 2))
}

/// `2^m - 1 - m ceil((d - 1) / 2)`; meaningful inside the dual-containing range.
pub fn bch_dimension_predicted(m: usize, d: usize) -> usize {
    ((1usize << m) - 1).saturating_sub(m * ceil_div(d - 1, 2))
}

/// The nested pair `R(r, m)*^perp ⊆ R(r, m)* ⊂ B` where `B` is the
/// narrow-sense BCH code of designed distance `2^(m-r) - 1`. Admissible for
/// `ceil(m/2) < r < m - 2` and `7 <= m <= 13`. Both containments and the
/// strictness `R(r, m)* != B` are checked, not assumed.
pub fn rm_bch_chain(r: usize, m: usize) -> Result<(CyclicCode, CyclicCode)> {
    if !(7..=MAX_FIELD_DEGREE).contains(&m) {
        return Err(Error::Parameters(format!(
            "the Reed-Muller/BCH chain needs 7 <= m <= {MAX_FIELD_DEGREE}, got m = {m}"
        )));
    }
    let lo = ceil_div(m, 2);
    if !(lo < r && r + 2 < m) {
        let range = if lo + 1 < m - 2 {
            format!("{} <= r <= {}", lo + 1, m - 3)
        } else {
            "empty".to_string()
        };
        return Err(Error::Parameters(format!(
            "r = {r} outside {lo} < r < {} for m = {m} (admissible: {range})",
            m - 2
        )));
    }
    let c = punctured_rm(r, m)?;
    let d = bch(m, (1 << (m - r)) - 1, 1)?;
    if !c.is_dual_containing() {
        return Err(Error::Chain(format!("R({r},{m})* is not dual-containing")));
    }
    if !CyclicCode::is_subcode(&c, &d)? {
        return Err(Error::Chain(format!("R({r},{m})* is not contained in the BCH code")));
    }
    if c == d {
        return Err(Error::Chain(format!("R({r},{m})* equals the BCH code")));
    }
    Ok((c, d))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "rm*")]
    PuncturedRm,
    #[serde(rename = "bch")]
    Bch,
}

/// Family metadata plus the resulting code, for table emission.
///
/// `{"family":"rm*"|"bch","m":int,"r":int|null,"d":int|null,"b":int|null,
///   "n":int,"k":int,"generator":"bits"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDescriptor {
    pub family: Family,
    pub m: usize,
    #[serde(default)]
    pub r: Option<usize>,
    #[serde(default)]
    pub d: Option<usize>,
    #[serde(default)]
    pub b: Option<usize>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub k: Option<usize>,
    #[serde(default)]
    pub generator: Option<Poly2>,
}

impl FamilyDescriptor {
    pub fn rm(r: usize, m: usize) -> Result<Self> {
        let code = punctured_rm(r, m)?;
        Ok(Self::filled(Family::PuncturedRm, m, Some(r), None, None, &code))
    }

    pub fn bch(m: usize, d: usize, b: usize) -> Result<Self> {
        let code = bch(m, d, b)?;
        Ok(Self::filled(Family::Bch, m, None, Some(d), Some(b), &code))
    }

    fn filled(
        family: Family,
        m: usize,
        r: Option<usize>,
        d: Option<usize>,
        b: Option<usize>,
        code: &CyclicCode,
    ) -> Self {
        Self {
            family,
            m,
            r,
            d,
            b,
            n: Some(code.n()),
            k: Some(code.k()),
            generator: Some(code.generator().clone()),
        }
    }

    /// Builds the code from the family parameters. Any of `n`, `k` and
    /// `generator` that are present must agree with the construction.
    pub fn build(&self) -> Result<CyclicCode> {
        let code = match self.family {
            Family::PuncturedRm => {
                let r = self
                    .r
                    .ok_or_else(|| Error::Parameters("rm* descriptor needs r".into()))?;
                punctured_rm(r, self.m)?
            }
            Family::Bch => {
                let d = self
                    .d
                    .ok_or_else(|| Error::Parameters("bch descriptor needs d".into()))?;
                bch(self.m, d, self.b.unwrap_or(1))?
            }
        };
        let mismatch = |what: &str| {
            Error::Parameters(format!("descriptor {what} disagrees with the construction"))
        };
        if self.n.is_some_and(|n| n != code.n()) {
            return Err(mismatch("n"));
        }
        if self.k.is_some_and(|k| k != code.k()) {
            return Err(mismatch("k"));
        }
        if self.generator.as_ref().is_some_and(|g| g != code.generator()) {
            return Err(mismatch("generator"));
        }
        Ok(code)
    }
}

/// Either a family descriptor or a bare `{"n", "generator", "k"}` record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CodeSpec {
    Family(FamilyDescriptor),
    Generic(CodeDescriptor),
}

impl CodeSpec {
    pub fn build(&self) -> Result<CyclicCode> {
        match self {
            Self::Family(f) => f.build(),
            Self::Generic(g) => g.build(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly2 {
        Poly2::parse(s).unwrap()
    }

    #[test]
    fn rm_examples() {
        let h = punctured_rm(1, 3).unwrap();
        assert_eq!(h.k(), 4);
        assert_eq!(h.generator(), &p("1101"));
        for m in 2..=6 {
            let amb = punctured_rm(m - 1, m).unwrap();
            assert!(amb.generator().is_one());
        }
        let c = punctured_rm(4, 7).unwrap();
        assert_eq!((c.n(), c.k()), (127, 99));
        assert_eq!(c.generator().degree(), Some(28));
        assert!(punctured_rm(0, 3).is_err());
        assert!(punctured_rm(3, 3).is_err());
        assert!(punctured_rm(1, 14).is_err());
    }

    #[test]
    fn rm_dual_generators() {
        let g = punctured_rm_dual_gen(1, 3).unwrap();
        assert_eq!(g, p("11").mul(&p("1101")));
        assert_eq!(punctured_rm_dual_gen(3, 4).unwrap(), Poly2::x_n_plus_one(15));
        punctured_rm_dual_gen(2, 4).unwrap();
    }

    #[test]
    fn bch_examples() {
        assert_eq!(bch(3, 3, 1).unwrap().generator(), &p("1101"));
        let c = bch(4, 5, 1).unwrap();
        assert_eq!((c.k(), c.generator().degree()), (7, Some(8)));
        assert_eq!(bch(5, 7, 1).unwrap().k(), 16);
        assert_eq!(bch(5, 3, 1).unwrap().k(), 26);
        assert!(bch(3, 1, 1).is_err());
        assert!(bch(3, 8, 1).is_err());
        // b = 0, d = 2: the single zero is alpha^0
        assert_eq!(bch(3, 2, 0).unwrap().generator(), &p("11"));
    }

    #[test]
    fn dual_containing_predicate() {
        assert!(bch_dual_containing_predicted(4, 3));
        assert!(!bch_dual_containing_predicted(4, 5));
        for m in 2..=6 {
            for d in 2..(1 << m) {
                assert_eq!(
                    bch(m, d, 1).unwrap().is_dual_containing(),
                    bch_dual_containing_predicted(m, d),
                    "m = {m}, d = {d}"
                );
            }
        }
    }

    #[test]
    fn chain() {
        let (c, d) = rm_bch_chain(6, 9).unwrap();
        assert_eq!((c.n(), c.k(), d.k()), (511, 466, 484));
        assert!(rm_bch_chain(4, 7).is_err());
        assert!(rm_bch_chain(5, 9).is_err());
        assert!(rm_bch_chain(7, 9).is_err());
    }

    #[test]
    fn descriptor_json() {
        let d = FamilyDescriptor::bch(5, 7, 1).unwrap();
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(v["family"], "bch");
        assert_eq!(v["r"], serde_json::Value::Null);
        assert_eq!(v["k"], 16);
        let spec: CodeSpec = serde_json::from_value(v).unwrap();
        assert_eq!(spec.build().unwrap().k(), 16);
        let short: CodeSpec = serde_json::from_str(r#"{"family":"rm*","m":3,"r":1}"#).unwrap();
        assert_eq!(short.build().unwrap().k(), 4);
        let generic: CodeSpec = serde_json::from_str(r#"{"n":7,"generator":"1101"}"#).unwrap();
        assert_eq!(generic.build().unwrap().k(), 4);
        let wrong: CodeSpec =
            serde_json::from_str(r#"{"family":"bch","m":5,"d":7,"k":17}"#).unwrap();
        assert!(wrong.build().is_err());
    }
}

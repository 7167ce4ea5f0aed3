//! Synchronizable schemes from a nested pair `C^perp ⊆ C ⊂ D` of cyclic codes.
//!
//! With `g_C = f g_D`, a window misaligned by `a` positions yields the
//! remainder of a shifted `x` power modulo `f`, so shifts are told apart for
//! `a_l + a_r < ord(f)`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::cyclic::{min_distance, CyclicCode, DistanceReport};
use crate::error::{Error, Result};
use crate::families::{bch, rm_bch_chain, rm_dimension};
use crate::num::is_prime;
use crate::poly::{factorize, Factorization, Poly2};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DistanceMode {
    Exact,
    Designed,
}

/// A distance and whether it was computed exactly or taken from the BCH
/// bound of the zero set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Distance {
    pub value: usize,
    pub source: DistanceMode,
}

impl Distance {
    fn of(code: &CyclicCode, mode: DistanceMode, budget: u64) -> Result<Self> {
        if mode == DistanceMode::Exact {
            if let DistanceReport::Exact(d) = min_distance(code, budget) {
                return Ok(Self {
                    value: d,
                    source: DistanceMode::Exact,
                });
            }
        }
        Ok(Self {
            value: code.bch_bound()?,
            source: DistanceMode::Designed,
        })
    }

    /// `floor((d - 1) / 2)`
    pub fn radius(&self) -> usize {
        self.value.saturating_sub(1) / 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QsyncParams {
    pub n_base: usize,
    /// `2 k1 - n`
    pub logical: usize,
    /// `ord(f) - 1`, the largest admissible `a_l + a_r`.
    pub max_shift_sum: u64,
    pub phase_floor: usize,
    pub bit_floor: usize,
    pub phase_distance: Distance,
    pub bit_distance: Distance,
    /// `k2 - k1 - 1`, the bound obtained from `deg f` alone.
    pub legacy_max_shift_sum: usize,
}

#[derive(Debug, Clone)]
pub struct SyncScheme {
    c: CyclicCode,
    d: CyclicCode,
    f: Poly2,
    f_factors: Factorization,
    tolerance: u64,
    params: QsyncParams,
}

/// Validates the pair and derives `f`, `ord(f)` and the code parameters.
pub fn build_scheme(
    c: &CyclicCode,
    d: &CyclicCode,
    mode: DistanceMode,
    budget: u64,
) -> Result<SyncScheme> {
    if c.n() != d.n() {
        return Err(Error::LengthMismatch(c.n(), d.n()));
    }
    let n = c.n();
    if !CyclicCode::is_subcode(c, d)? {
        return Err(Error::Chain("C is not contained in D".into()));
    }
    if c.k() >= d.k() {
        return Err(Error::Chain(format!(
            "C must be a proper subcode of D (k1 = {}, k2 = {})",
            c.k(),
            d.k()
        )));
    }
    if !c.is_dual_containing() {
        return Err(Error::Chain("C is not dual-containing".into()));
    }
    if 2 * c.k() < n {
        return Err(Error::Chain(format!(
            "2 k1 - n = {} is negative",
            2 * c.k() as i64 - n as i64
        )));
    }
    let f = c
        .generator()
        .div_exact(d.generator())
        .expect("g_D divides g_C");
    let f_factors = factorize(&f)?;
    let tolerance = f.order()?;
    let phase = Distance::of(c, mode, budget)?;
    let bit = Distance::of(d, mode, budget)?;
    let params = QsyncParams {
        n_base: n,
        logical: 2 * c.k() - n,
        max_shift_sum: tolerance - 1,
        phase_floor: phase.radius(),
        bit_floor: bit.radius(),
        phase_distance: phase,
        bit_distance: bit,
        legacy_max_shift_sum: d.k() - c.k() - 1,
    };
    debug_assert!(params.max_shift_sum >= params.legacy_max_shift_sum as u64);
    debug_assert!(params.max_shift_sum < n as u64);
    Ok(SyncScheme {
        c: c.clone(),
        d: d.clone(),
        f,
        f_factors,
        tolerance,
        params,
    })
}

impl SyncScheme {
    pub fn c(&self) -> &CyclicCode {
        &self.c
    }

    pub fn d(&self) -> &CyclicCode {
        &self.d
    }

    pub fn n(&self) -> usize {
        self.c.n()
    }

    pub fn f(&self) -> &Poly2 {
        &self.f
    }

    pub fn f_factors(&self) -> &Factorization {
        &self.f_factors
    }

    /// `ord(f)`: the number of distinguishable shifts.
    pub fn tolerance(&self) -> u64 {
        self.tolerance
    }

    pub fn params(&self) -> &QsyncParams {
        &self.params
    }

    pub fn legacy_tolerance(&self) -> usize {
        self.params.legacy_max_shift_sum
    }

    pub fn distance_mode(&self) -> DistanceMode {
        let exact = self.params.phase_distance.source == DistanceMode::Exact
            && self.params.bit_distance.source == DistanceMode::Exact;
        if exact {
            DistanceMode::Exact
        } else {
            DistanceMode::Designed
        }
    }

    pub fn report(&self) -> SchemeReport {
        SchemeReport {
            n: self.n(),
            k1: self.c.k(),
            k2: self.d.k(),
            f: self.f.clone(),
            f_factors: self.f_factors.clone(),
            tolerance: self.tolerance,
            legacy_tolerance: self.legacy_tolerance(),
            logical: self.params.logical,
            phase_floor: self.params.phase_floor,
            bit_floor: self.params.bit_floor,
            distance_mode: self.distance_mode(),
        }
    }
}

/// Scheme record: `tolerance` is `ord(f)`, `legacy_tolerance` is `k2 - k1 - 1`.
#[derive(Debug, Clone, Serialize)]
pub struct SchemeReport {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub f: Poly2,
    pub f_factors: Factorization,
    pub tolerance: u64,
    pub legacy_tolerance: usize,
    pub logical: usize,
    pub phase_floor: usize,
    pub bit_floor: usize,
    pub distance_mode: DistanceMode,
}

/// `m (d1 - d2) / 2`: the exclusive upper bound on `a_l + a_r` for a pair
/// of narrow-sense BCH codes obtained from `deg f` alone.
pub fn bch_pair_legacy_bound(m: usize, d1: usize, d2: usize) -> usize {
    m * d1.saturating_sub(d2) / 2
}

/// True iff `x^0, .., x^L` are pairwise distinct modulo `f`.
pub fn unique_remainders_check(f: &Poly2, l: u64) -> Result<bool> {
    if !f.constant_term() {
        return Err(Error::ZeroConstantTerm(f.to_string()));
    }
    let mut seen = HashSet::new();
    let mut cur = Poly2::one().rem(f)?;
    for _ in 0..=l {
        if !seen.insert(cur.clone()) {
            return Ok(false);
        }
        cur = cur.shl(1).rem(f)?;
    }
    Ok(true)
}

/// Parameters of the punctured Reed–Muller / BCH scheme at prime length.
#[derive(Debug, Clone, Serialize)]
pub struct PrimeRmBchReport {
    pub r: usize,
    pub m: usize,
    pub scheme: SchemeReport,
    pub params: QsyncParams,
    /// `sum_{i <= r} C(m, i)`, the logical count stated in closed form.
    pub claimed_logical: usize,
    /// `2 k1 - n` from the nested pair.
    pub computed_logical: usize,
    pub logical_discrepancy: bool,
}

/// The scheme `R(r, m)* ⊂ BCH(2^(m-r) - 1)` for prime `n = 2^m - 1`, with
/// designed distances.
pub fn prime_rm_bch_params(r: usize, m: usize) -> Result<PrimeRmBchReport> {
    if !(1..=63).contains(&m) || !is_prime((1u64 << m) - 1) {
        return Err(Error::Parameters(format!(
            "2^{m} - 1 must be prime for this construction"
        )));
    }
    let (c, d) = rm_bch_chain(r, m)?;
    let scheme = build_scheme(&c, &d, DistanceMode::Designed, 0)?;
    let claimed = rm_dimension(r, m);
    let computed = scheme.params().logical;
    Ok(PrimeRmBchReport {
        r,
        m,
        scheme: scheme.report(),
        params: scheme.params().clone(),
        claimed_logical: claimed,
        computed_logical: computed,
        logical_discrepancy: claimed != computed,
    })
}

/// Scheme for the narrow-sense BCH pair of designed distances `d1 > d2`.
pub fn bch_pair(m: usize, d1: usize, d2: usize, mode: DistanceMode, budget: u64) -> Result<SyncScheme> {
    build_scheme(&bch(m, d1, 1)?, &bch(m, d2, 1)?, mode, budget)
}

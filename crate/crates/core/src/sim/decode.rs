use std::collections::HashMap;

use serde::Serialize;

use super::{check_allowance, extend};
use crate::cyclic::SyndromeDecoder;
use crate::error::{Error, Result};
use crate::poly::Poly2;
use crate::scheme::SyncScheme;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureReason {
    /// The middle window could not be decoded.
    ExcessErrors,
    /// The remainder matches no admissible shift.
    ShiftNotFound,
    /// The first-n or last-n window of the realigned frame could not be decoded.
    DecodeFailure,
    /// The corrected passes disagree with each other or with the frame structure.
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SyncDecodeReport {
    pub recovered_shift: Option<i64>,
    /// Representative of the sync syndrome modulo `f`.
    pub remainder: Option<Poly2>,
    /// Bits flipped per pass: middle window, then first-n and last-n.
    pub bit_corrections: Vec<usize>,
    pub success: bool,
    pub failure: Option<FailureReason>,
    /// Corrected core word `v + g` of the realigned frame.
    pub recovered_core: Option<Poly2>,
}

impl SyncDecodeReport {
    fn failed(reason: FailureReason) -> Self {
        Self {
            recovered_shift: None,
            remainder: None,
            bit_corrections: Vec::new(),
            success: false,
            failure: Some(reason),
            recovered_core: None,
        }
    }

    fn fail(mut self, reason: FailureReason) -> Self {
        self.success = false;
        self.failure = Some(reason);
        self
    }
}

/// Shift recovery and frame correction for fixed allowances.
///
/// With coefficients read constant term first, the middle `n` bits of a
/// window shifted by `a` hold `x^(-a) (v + g) mod (x^n + 1)`. Dividing the
/// corrected word by `g` and reducing modulo `f` leaves `x^(-a) mod f`,
/// which is distinct for the `a_l + a_r + 1` admissible shifts.
#[derive(Debug, Clone)]
pub struct SyncDecoder {
    scheme: SyncScheme,
    a_l: usize,
    a_r: usize,
    decoder: SyndromeDecoder,
    shifts: HashMap<Poly2, i64>,
}

impl SyncDecoder {
    pub fn new(scheme: &SyncScheme, a_l: usize, a_r: usize, budget: u64) -> Result<Self> {
        check_allowance(scheme, a_l, a_r)?;
        let t = scheme.params().bit_floor;
        let decoder = SyndromeDecoder::new(scheme.d().clone(), t, budget)?;
        let f = scheme.f();
        let ord = scheme.tolerance();
        let mut shifts = HashMap::new();
        for a in -(a_l as i64)..=a_r as i64 {
            let e = (-a).rem_euclid(ord as i64) as u64;
            let prev = shifts.insert(Poly2::x().powmod_u64(e, f)?, a);
            assert!(prev.is_none(), "x^-a mod f repeats within the allowance");
        }
        Ok(Self {
            scheme: scheme.clone(),
            a_l,
            a_r,
            decoder,
            shifts,
        })
    }

    pub fn scheme(&self) -> &SyncScheme {
        &self.scheme
    }

    pub fn frame_len(&self) -> usize {
        self.scheme.n() + self.a_l + self.a_r
    }

    /// The sync syndrome an error-free window with shift `a` produces.
    pub fn expected_remainder(&self, a: i64) -> Result<Poly2> {
        let e = (-a).rem_euclid(self.scheme.tolerance() as i64) as u64;
        Poly2::x().powmod_u64(e, self.scheme.f())
    }

    /// Middle-window correction and shift identification on a received
    /// window of `n + a_l + a_r` bits.
    pub fn decode_window(&self, window: &[bool]) -> Result<SyncDecodeReport> {
        if window.len() != self.frame_len() {
            return Err(Error::Simulation(format!(
                "window has {} bits, expected {}",
                window.len(),
                self.frame_len()
            )));
        }
        let n = self.scheme.n();
        let middle = Poly2::from_bits(&window[self.a_l..self.a_l + n]);
        let Ok(fixed) = self.decoder.decode(&middle) else {
            return Ok(SyncDecodeReport::failed(FailureReason::ExcessErrors));
        };
        let q = fixed
            .corrected
            .div_exact(self.scheme.d().generator())
            .expect("corrected word lies in D");
        let rem = q.rem(self.scheme.f())?;
        let shift = self.shifts.get(&rem).copied();
        let report = SyncDecodeReport {
            recovered_shift: shift,
            remainder: Some(rem),
            bit_corrections: vec![fixed.error.weight()],
            success: shift.is_some(),
            failure: None,
            recovered_core: None,
        };
        Ok(match shift {
            Some(_) => report,
            None => report.fail(FailureReason::ShiftNotFound),
        })
    }

    /// Full recovery for the window starting at `window_start` in `stream`:
    /// shift identification, realignment, then correction of the first and
    /// last `n` bits of the realigned frame.
    pub fn recover_frame(&self, stream: &[bool], window_start: usize) -> Result<SyncDecodeReport> {
        let len = self.frame_len();
        let window = stream.get(window_start..window_start + len).ok_or_else(|| {
            Error::Simulation("window extends past the stream edge".into())
        })?;
        let mut report = self.decode_window(window)?;
        let Some(a) = report.recovered_shift else {
            return Ok(report);
        };
        let start = window_start as i64 - a;
        let frame = usize::try_from(start)
            .ok()
            .and_then(|s| stream.get(s..s + len))
            .ok_or_else(|| Error::Simulation("realigned frame extends past the stream edge".into()))?;

        let n = self.scheme.n();
        let first = self.decoder.decode(&Poly2::from_bits(&frame[..n]));
        let last = self.decoder.decode(&Poly2::from_bits(&frame[len - n..]));
        let (Ok(first), Ok(last)) = (first, last) else {
            return Ok(report.fail(FailureReason::DecodeFailure));
        };
        report.bit_corrections.push(first.error.weight());
        report.bit_corrections.push(last.error.weight());

        let head = first.corrected.to_bits(n);
        let tail = last.corrected.to_bits(n);
        let bits: Vec<bool> = (0..len)
            .map(|p| if p < n { head[p] } else { tail[p - (len - n)] })
            .collect();
        let overlap_agrees = (len - n..n).all(|p| head[p] == tail[p - (len - n)]);
        let core = Poly2::from_bits(&bits[self.a_l..self.a_l + n]);
        let structured = extend(&core, n, self.a_l, self.a_r) == bits;
        let in_coset = self.scheme.c().is_codeword(&(&core + self.scheme.d().generator()));
        report.recovered_core = Some(core);
        if !(overlap_agrees && structured && in_coset) {
            return Ok(report.fail(FailureReason::Inconsistent));
        }
        Ok(report)
    }
}

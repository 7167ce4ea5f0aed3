//! Classical frame-synchronization simulation on computational-basis states.
//!
//! A frame is the core word `v + g` (with `v` in `C` and `g` the generator
//! of `D`) extended by its last `a_l` and first `a_r` bits on either side.
//! Frames are concatenated into a stream and read back through a window
//! that may be misaligned by `a` positions, `-a_l <= a <= a_r`, positive to
//! the right.

mod batch;
mod decode;

pub use batch::{run_batch, run_batch_with, BatchReport, BatchSpec, SchemeSpec, TrialOutcome, TrialRecord};
pub use decode::{FailureReason, SyncDecodeReport, SyncDecoder};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::Poly2;
use crate::scheme::SyncScheme;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    n: usize,
    a_l: usize,
    a_r: usize,
    /// Generators of `C` and `D`, identifying the scheme.
    key: (Poly2, Poly2),
    core: Poly2,
    bits: Vec<bool>,
}

fn check_allowance(scheme: &SyncScheme, a_l: usize, a_r: usize) -> Result<()> {
    let sum = a_l + a_r;
    if sum as u64 >= scheme.tolerance() {
        return Err(Error::Allowance {
            sum,
            order: scheme.tolerance(),
        });
    }
    Ok(())
}

/// `bits[p] = core[(p - a_l) mod n]` for `p < n + a_l + a_r`.
pub(crate) fn extend(core: &Poly2, n: usize, a_l: usize, a_r: usize) -> Vec<bool> {
    let c = core.to_bits(n);
    (0..n + a_l + a_r).map(|p| c[(p + n - a_l % n) % n]).collect()
}

/// Encodes a codeword of `C` into a frame.
pub fn encode_frame(scheme: &SyncScheme, a_l: usize, a_r: usize, codeword: &Poly2) -> Result<Frame> {
    check_allowance(scheme, a_l, a_r)?;
    if !scheme.c().is_codeword(codeword) {
        return Err(Error::Simulation(format!(
            "{} is not a codeword of C",
            codeword.to_bit_string()
        )));
    }
    let n = scheme.n();
    let core = codeword + scheme.d().generator();
    let bits = extend(&core, n, a_l, a_r);
    Ok(Frame {
        n,
        a_l,
        a_r,
        key: (scheme.c().generator().clone(), scheme.d().generator().clone()),
        core,
        bits,
    })
}

impl Frame {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn allowances(&self) -> (usize, usize) {
        (self.a_l, self.a_r)
    }

    pub fn core(&self) -> &Poly2 {
        &self.core
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// Concatenates frames that share a scheme and allowances.
pub fn make_stream(frames: &[Frame]) -> Result<Vec<bool>> {
    if let Some(first) = frames.first() {
        let same = |f: &Frame| f.n == first.n && f.a_l == first.a_l && f.a_r == first.a_r && f.key == first.key;
        if !frames.iter().all(same) {
            return Err(Error::Simulation("frames mix schemes or allowances".into()));
        }
    }
    Ok(frames.iter().flat_map(|f| f.bits.iter().copied()).collect())
}

/// A misalignment and a set of bit flips on the stream.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChannelEvent {
    pub shift: i64,
    pub errors: Vec<usize>,
    pub seed: u64,
}

/// Flips every listed position; a position listed twice is flipped twice.
pub fn apply_channel(stream: &[bool], event: &ChannelEvent) -> Result<Vec<bool>> {
    let mut out = stream.to_vec();
    for &p in &event.errors {
        let bit = out.get_mut(p).ok_or_else(|| {
            Error::Simulation(format!("error position {p} outside stream of length {}", stream.len()))
        })?;
        *bit = !*bit;
    }
    Ok(out)
}

/// Largest number of flips in any `n` consecutive stream positions.
pub fn max_errors_per_window(errors: &[usize], n: usize) -> usize {
    let mut pos = errors.to_vec();
    pos.sort_unstable();
    pos.dedup_by(|a, b| a == b);
    let mut best = 0;
    let mut lo = 0;
    for hi in 0..pos.len() {
        while pos[hi] - pos[lo] >= n {
            lo += 1;
        }
        best = best.max(hi - lo + 1);
    }
    best
}

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{apply_channel, encode_frame, make_stream, max_errors_per_window, ChannelEvent, FailureReason, SyncDecoder};
use crate::error::{Error, Result};
use crate::families::CodeSpec;
use crate::poly::Poly2;
use crate::scheme::{build_scheme, DistanceMode, SyncScheme};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeSpec {
    pub c: CodeSpec,
    pub d: CodeSpec,
    #[serde(default = "designed")]
    pub distance_mode: DistanceMode,
}

fn designed() -> DistanceMode {
    DistanceMode::Designed
}

impl SchemeSpec {
    pub fn build(&self, budget: u64) -> Result<SyncScheme> {
        build_scheme(&self.c.build()?, &self.d.build()?, self.distance_mode, budget)
    }
}

/// `{"scheme": {"c": .., "d": ..}, "a_l", "a_r", "trials", "error_weight", "seed"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BatchSpec {
    pub scheme: SchemeSpec,
    pub a_l: usize,
    pub a_r: usize,
    pub trials: usize,
    pub error_weight: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "outcome", content = "reason", rename_all = "kebab-case")]
pub enum TrialOutcome {
    Correct,
    /// The decoder reported a failure.
    Detected(FailureReason),
    /// The decoder claimed success but the shift was wrong.
    WrongShift,
    /// The decoder claimed success with the right shift but a wrong frame.
    WrongFrame,
}

impl TrialOutcome {
    fn label(self) -> String {
        match self {
            Self::Correct => "correct".into(),
            Self::Detected(r) => serde_json::to_value(r)
                .ok()
                .and_then(|v| v.as_str().map(String::from))
                .unwrap_or_default(),
            Self::WrongShift => "wrong-shift".into(),
            Self::WrongFrame => "wrong-frame".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    /// ChaCha8 stream index under the batch seed.
    pub stream: u64,
    pub event: ChannelEvent,
    /// True when no `n` consecutive stream bits carry more than `bit_floor` flips.
    pub within_budget: bool,
    pub recovered_shift: Option<i64>,
    pub bit_corrections: Vec<usize>,
    #[serde(flatten)]
    pub outcome: TrialOutcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatchReport {
    pub n: usize,
    pub a_l: usize,
    pub a_r: usize,
    pub tolerance: u64,
    pub bit_floor: usize,
    pub error_weight: usize,
    pub seed: u64,
    pub trials: usize,
    pub successes: usize,
    pub success_rate: f64,
    pub over_budget_trials: usize,
    /// Failure counts keyed by reason.
    pub failures: BTreeMap<String, usize>,
    pub records: Vec<TrialRecord>,
}

pub fn run_batch(spec: &BatchSpec, budget: u64) -> Result<BatchReport> {
    let scheme = spec.scheme.build(budget)?;
    run_batch_with(&scheme, spec, budget)
}

/// Runs the batch on an already built scheme. Trial `i` probes shift
/// `-a_l + (i mod (a_l + a_r + 1))` with randomness from stream `i`.
pub fn run_batch_with(scheme: &SyncScheme, spec: &BatchSpec, budget: u64) -> Result<BatchReport> {
    let decoder = SyncDecoder::new(scheme, spec.a_l, spec.a_r, budget)?;
    if spec.error_weight > scheme.n() {
        return Err(Error::Simulation(format!(
            "error weight {} exceeds n = {}",
            spec.error_weight,
            scheme.n()
        )));
    }
    let span = (spec.a_l + spec.a_r + 1) as i64;
    let records = (0..spec.trials)
        .map(|i| {
            let shift = -(spec.a_l as i64) + (i as i64 % span);
            run_trial(&decoder, spec, i, shift)
        })
        .collect::<Result<Vec<_>>>()?;

    let successes = records.iter().filter(|r| r.outcome == TrialOutcome::Correct).count();
    let mut failures = BTreeMap::new();
    for r in records.iter().filter(|r| r.outcome != TrialOutcome::Correct) {
        *failures.entry(r.outcome.label()).or_insert(0) += 1;
    }
    Ok(BatchReport {
        n: scheme.n(),
        a_l: spec.a_l,
        a_r: spec.a_r,
        tolerance: scheme.tolerance(),
        bit_floor: scheme.params().bit_floor,
        error_weight: spec.error_weight,
        seed: spec.seed,
        trials: spec.trials,
        successes,
        success_rate: if spec.trials == 0 {
            1.0
        } else {
            successes as f64 / spec.trials as f64
        },
        over_budget_trials: records.iter().filter(|r| !r.within_budget).count(),
        failures,
        records,
    })
}

fn random_codeword(scheme: &SyncScheme, rng: &mut ChaCha8Rng) -> Poly2 {
    let k = scheme.c().k();
    let bits: Vec<bool> = (0..k).map(|_| rng.gen()).collect();
    scheme.c().encode(&Poly2::from_bits(&bits)).expect("message below k")
}

/// Three frames, the middle one probed. `error_weight` flips land in the
/// middle window first; further flips are scattered over the stream as long
/// as no `n` consecutive positions exceed `error_weight` flips.
fn run_trial(decoder: &SyncDecoder, spec: &BatchSpec, trial: usize, shift: i64) -> Result<TrialRecord> {
    let scheme = decoder.scheme();
    let n = scheme.n();
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    rng.set_stream(trial as u64);

    let cores: Vec<Poly2> = (0..3).map(|_| random_codeword(scheme, &mut rng)).collect();
    let frames = cores
        .iter()
        .map(|v| encode_frame(scheme, spec.a_l, spec.a_r, v))
        .collect::<Result<Vec<_>>>()?;
    let truth = frames[1].core().clone();
    let stream = make_stream(&frames)?;
    let len = frames[1].len();
    let window_start = (len as i64 + shift) as usize;

    let mut errors: Vec<usize> = Vec::new();
    let middle = window_start + spec.a_l;
    while errors.len() < spec.error_weight {
        let p = middle + rng.gen_range(0..n);
        if !errors.contains(&p) {
            errors.push(p);
        }
    }
    if spec.error_weight > 0 {
        for _ in 0..2 * stream.len() / n + 1 {
            let p = rng.gen_range(0..stream.len());
            if errors.contains(&p) {
                continue;
            }
            errors.push(p);
            if max_errors_per_window(&errors, n) > spec.error_weight {
                errors.pop();
            }
        }
    }
    errors.sort_unstable();
    let event = ChannelEvent {
        shift,
        errors,
        seed: spec.seed,
    };
    let received = apply_channel(&stream, &event)?;
    let report = decoder.recover_frame(&received, window_start)?;

    let outcome = match (report.failure, report.recovered_shift) {
        (Some(reason), _) => TrialOutcome::Detected(reason),
        (None, Some(a)) if a != shift => TrialOutcome::WrongShift,
        (None, _) if report.recovered_core.as_ref() != Some(&truth) => TrialOutcome::WrongFrame,
        _ => TrialOutcome::Correct,
    };
    Ok(TrialRecord {
        trial,
        stream: trial as u64,
        within_budget: max_errors_per_window(&event.errors, n) <= scheme.params().bit_floor,
        event,
        recovered_shift: report.recovered_shift,
        bit_corrections: report.bit_corrections,
        outcome,
    })
}

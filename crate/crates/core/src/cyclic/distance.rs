use serde::Serialize;

use super::CyclicCode;
use crate::num::binomial;
use crate::poly::Poly2;

/// Outcome of a minimum-distance computation. Exact values and bounds are
/// never conflated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum DistanceReport {
    Exact(usize),
    /// No nonzero codeword of weight below this value exists.
    LowerBound(usize),
    NotComputed,
    /// The zero code has no nonzero codewords.
    NoNonzeroCodewords,
}

impl DistanceReport {
    pub fn exact(self) -> Option<usize> {
        match self {
            Self::Exact(d) => Some(d),
            _ => None,
        }
    }
}

/// Minimum distance within an enumeration budget.
///
/// When `2^k <= budget` every codeword is enumerated. Otherwise words of
/// weight 1, 2, ... are swept in full, testing divisibility by the generator,
/// for as long as the cumulative count stays within budget: the first weight
/// that yields a codeword is exact, and an exhausted budget gives a verified
/// lower bound.
pub fn min_distance(code: &CyclicCode, budget: u64) -> DistanceReport {
    if code.k() == 0 {
        return DistanceReport::NoNonzeroCodewords;
    }
    if code.k() < 64 && (1u64 << code.k()) <= budget {
        return DistanceReport::Exact(enumerate_codewords(code));
    }
    low_weight_sweep(code, budget)
}

/// Gray-code walk over all `2^k` messages.
fn enumerate_codewords(code: &CyclicCode) -> usize {
    let n = code.n();
    let words = n.div_ceil(64);
    let rows: Vec<Vec<u64>> = (0..code.k())
        .map(|i| pad(code.generator().shl(i), words))
        .collect();
    let mut cur = vec![0u64; words];
    let mut best = usize::MAX;
    for step in 1u64..(1u64 << code.k()) {
        let bit = step.trailing_zeros() as usize;
        for (c, r) in cur.iter_mut().zip(&rows[bit]) {
            *c ^= r;
        }
        let w: usize = cur.iter().map(|x| x.count_ones() as usize).sum();
        best = best.min(w);
    }
    best
}

fn pad(p: Poly2, words: usize) -> Vec<u64> {
    let mut v = p.words().to_vec();
    v.resize(words, 0);
    v
}

fn low_weight_sweep(code: &CyclicCode, budget: u64) -> DistanceReport {
    let n = code.n();
    let r = code.generator().degree().expect("nonzero generator");
    let words = r.div_ceil(64).max(1);
    // x^i mod g for each coordinate
    let residues: Vec<Vec<u64>> = (0..n)
        .map(|i| pad(Poly2::monomial(i).rem(code.generator()).expect("nonzero"), words))
        .collect();
    let mut spent: u128 = 0;
    for w in 1..=n {
        let count = binomial(n as u64, w as u64);
        if spent + count > budget as u128 {
            return if w == 1 {
                DistanceReport::NotComputed
            } else {
                DistanceReport::LowerBound(w)
            };
        }
        spent += count;
        let mut acc = vec![vec![0u64; words]; w + 1];
        if has_zero_combination(&residues, w, 0, 0, &mut acc) {
            return DistanceReport::Exact(w);
        }
    }
    unreachable!("x^n + 1 reduces to zero, so weight n always hits")
}

/// Depth-first search over `remaining`-subsets of `residues[start..]` whose
/// XOR with `acc[depth]` vanishes.
fn has_zero_combination(
    residues: &[Vec<u64>],
    remaining: usize,
    start: usize,
    depth: usize,
    acc: &mut [Vec<u64>],
) -> bool {
    if remaining == 0 {
        return acc[depth].iter().all(|&x| x == 0);
    }
    for i in start..=residues.len() - remaining {
        let (lo, hi) = acc.split_at_mut(depth + 1);
        for ((dst, src), r) in hi[0].iter_mut().zip(&lo[depth]).zip(&residues[i]) {
            *dst = src ^ r;
        }
        if has_zero_combination(residues, remaining - 1, i + 1, depth + 1, acc) {
            return true;
        }
    }
    false
}

use std::collections::HashMap;

use super::CyclicCode;
use crate::error::{Error, Result};
use crate::num::binomial;
use crate::poly::Poly2;

/// Default cap on syndrome-table entries and distance enumerations.
pub const DEFAULT_BUDGET: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub corrected: Poly2,
    pub error: Poly2,
}

/// Bounded-distance decoder backed by a syndrome table that maps
/// `word mod g` to a minimum-weight error pattern of weight at most `t`.
/// The table is built once and never mutated afterwards.
#[derive(Debug, Clone)]
pub struct SyndromeDecoder {
    code: CyclicCode,
    t: usize,
    table: HashMap<Poly2, Poly2>,
}

impl SyndromeDecoder {
    pub fn new(code: CyclicCode, t: usize, budget: u64) -> Result<Self> {
        let n = code.n();
        let required: u128 = (0..=t.min(n)).map(|i| binomial(n as u64, i as u64)).sum();
        if required > budget as u128 {
            return Err(Error::TableBudget { required, budget });
        }
        let residues: Vec<Poly2> = (0..n)
            .map(|i| code.syndrome(&Poly2::monomial(i)))
            .collect();
        let mut table = HashMap::with_capacity(required as usize);
        table.insert(Poly2::zero(), Poly2::zero());
        // increasing weight, first pattern per syndrome wins
        for w in 1..=t.min(n) {
            let mut positions: Vec<usize> = (0..w).collect();
            loop {
                let mut s = Poly2::zero();
                for &i in &positions {
                    s += &residues[i];
                }
                table
                    .entry(s)
                    .or_insert_with(|| Poly2::from_exponents(&positions));
                if !next_combination(&mut positions, n) {
                    break;
                }
            }
        }
        Ok(Self { code, t, table })
    }

    pub fn code(&self) -> &CyclicCode {
        &self.code
    }

    pub fn radius(&self) -> usize {
        self.t
    }

    pub fn table_len(&self) -> usize {
        self.table.len()
    }

    pub fn decode(&self, received: &Poly2) -> Result<Decoded> {
        if received.degree().is_some_and(|d| d >= self.code.n()) {
            return Err(Error::WordTooLong { n: self.code.n() });
        }
        let s = self.code.syndrome(received);
        let error = self
            .table
            .get(&s)
            .cloned()
            .ok_or(Error::DecodeFailure { t: self.t })?;
        Ok(Decoded {
            corrected: received + &error,
            error,
        })
    }
}

/// Advances `c` to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

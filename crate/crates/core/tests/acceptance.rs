//! Acceptance checks, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach stdout.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use syncrocode::cyclic::{min_distance, CyclicCode, DistanceReport, DEFAULT_BUDGET};
use syncrocode::families::{
    bch, bch_dimension_predicted, bch_dual_containing_predicted, punctured_rm,
    punctured_rm_dual_gen, rm_bch_chain, rm_dimension,
};
use syncrocode::scheme::{
    bch_pair, build_scheme, prime_rm_bch_params, unique_remainders_check, DistanceMode, SyncScheme,
};
use syncrocode::sim::{run_batch_with, BatchSpec, SchemeSpec, TrialOutcome};
use syncrocode::{CodeSpec, FamilyDescriptor, Poly2};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Smallest e > 0 with x^e = 1 mod f, stepping a u64 shift register.
fn brute_order(f: u64) -> u64 {
    let d = 63 - f.leading_zeros();
    let mut v = 1u64;
    for e in 1..=(1u64 << d) {
        v <<= 1;
        if (v >> d) & 1 == 1 {
            v ^= f;
        }
        if v == 1 {
            return e;
        }
    }
    panic!("no order for {f:b}")
}

fn clmul(a: u128, b: u128) -> u128 {
    (0..64).filter(|i| b >> i & 1 == 1).fold(0, |acc, i| acc ^ (a << i))
}

fn clrem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 && 63 - a.leading_zeros() >= db {
        a ^= b << (63 - a.leading_zeros() - db);
    }
    a
}

/// Irreducibility by trial division with every polynomial of lower degree.
fn trial_irreducible(f: u64) -> bool {
    let d = 63 - f.leading_zeros();
    d >= 1 && (2u64..1 << (d / 2 + 1)).all(|g| 63 - g.leading_zeros() > d / 2 || clrem(f, g) != 0)
}

fn order_vs_brute_force() -> Check {
    let mut count = 0;
    for f in 3u64..1 << 13 {
        if f & 1 == 0 {
            continue;
        }
        let got = Poly2::from_u64(f).order().map_err(|e| e.to_string())?;
        let want = brute_order(f);
        ensure(got == want, || format!("ord({f:b}) = {got}, brute force {want}"))?;
        count += 1;
    }
    Ok(format!("{count} polynomials of degree 1..=12"))
}

fn irreducible_product_identity() -> Check {
    for m in 1..=6u32 {
        let mut prod = 1u128;
        let mut factors = 0;
        for d in (1..=m).filter(|d| m % d == 0) {
            for f in 1u64 << d..1 << (d + 1) {
                if trial_irreducible(f) {
                    prod = clmul(prod, f as u128);
                    factors += 1;
                }
            }
        }
        let want = (1u128 << (1 << m)) | 2;
        ensure(prod == want, || format!("m = {m}: product {prod:b}"))?;
        let via_lib = Poly2::from_exponents(&[1, 1 << m]);
        let fac = syncrocode::poly::factorize(&via_lib).map_err(|e| e.to_string())?;
        ensure(fac.factors().len() == factors && fac.is_squarefree(), || {
            format!("m = {m}: factorize disagrees")
        })?;
    }
    Ok("m = 1..=6".into())
}

fn order_of_powers() -> Check {
    for f in ["11", "111", "1101", "11111"] {
        let base = Poly2::parse(f).unwrap();
        let e = base.order().unwrap();
        let mut pow = Poly2::one();
        for a in 1..=8u32 {
            pow = pow.mul(&base);
            let lift = 1u64 << (a as f64).log2().ceil() as u32;
            let got = pow.order().unwrap();
            ensure(got == lift * e, || format!("ord(({f})^{a}) = {got}"))?;
            let brute = brute_order(pow.as_u64().unwrap());
            ensure(got == brute, || format!("ord(({f})^{a}): brute force {brute}"))?;
        }
    }
    Ok("4 irreducibles, a = 1..=8".into())
}

fn bch_dual_containing_rule() -> Check {
    let mut cases = 0;
    for m in 2..=6 {
        for d in 2..(1usize << m) {
            let code = bch(m, d, 1).map_err(|e| e.to_string())?;
            let pred = bch_dual_containing_predicted(m, d);
            ensure(code.is_dual_containing() == pred, || format!("m = {m}, d = {d}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (m, d) pairs"))
}

fn bch_dimension_rule() -> Check {
    let mut cases = 0;
    for m in 2..=6 {
        for d in (2..(1usize << m)).filter(|&d| bch_dual_containing_predicted(m, d)) {
            let k = bch(m, d, 1).map_err(|e| e.to_string())?.k();
            let want = bch_dimension_predicted(m, d);
            ensure(k == want, || format!("m = {m}, d = {d}: k = {k}, formula {want}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} dual-containing codes"))
}

fn punctured_rm_parameters() -> Check {
    let mut exact = 0;
    for m in 3..=8 {
        for r in 1..m {
            let code = punctured_rm(r, m).map_err(|e| e.to_string())?;
            ensure(code.k() == rm_dimension(r, m), || format!("R({r},{m})* k = {}", code.k()))?;
            let dual_gen = punctured_rm_dual_gen(r, m).map_err(|e| e.to_string())?;
            ensure(&dual_gen == code.dual().generator(), || format!("R({r},{m})* dual"))?;
            let want = (1usize << (m - r)) - 1;
            match min_distance(&code, DEFAULT_BUDGET) {
                DistanceReport::Exact(d) => {
                    ensure(d == want, || format!("R({r},{m})* distance {d}, want {want}"))?;
                    exact += 1;
                }
                DistanceReport::LowerBound(lb) => {
                    ensure(m > 5 && lb <= want, || format!("R({r},{m})* bound {lb}"))?
                }
                other => ensure(m > 5, || format!("R({r},{m})* distance {other:?}"))?,
            }
        }
    }
    Ok(format!("m = 3..=8, {exact} distances exact"))
}

fn rm_nesting() -> Check {
    let mut pairs = 0;
    for m in 7..=10usize {
        let lo = m.div_ceil(2);
        let codes: Vec<(usize, CyclicCode)> = (lo + 1..m).map(|r| (r, punctured_rm(r, m).unwrap())).collect();
        for (i, (r2, c2)) in codes.iter().enumerate() {
            let dual_gen = punctured_rm_dual_gen(*r2, m).unwrap();
            ensure(c2.generator().divides(&dual_gen), || format!("R({r2},{m})* dual-containing"))?;
            for (r1, c1) in &codes[i + 1..] {
                ensure(c1.generator().divides(c2.generator()) && c1 != c2, || {
                    format!("R({r2},{m})* in R({r1},{m})*")
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, m = 7..=10"))
}

fn rm_bch_instance() -> Check {
    let (c, d) = rm_bch_chain(6, 9).map_err(|e| e.to_string())?;
    ensure((c.n(), c.k(), d.k()) == (511, 466, 484), || format!("[{}, {}] / {}", c.n(), c.k(), d.k()))?;
    ensure(c.is_dual_containing(), || "C not dual-containing".into())?;
    ensure(CyclicCode::is_subcode(&c, &d).unwrap() && c != d, || "C not strictly inside D".into())?;
    Ok("[511,466] ⊂ [511,484]".into())
}

fn headline_pair() -> Result<(String, SyncScheme), String> {
    let s = bch_pair(5, 7, 3, DistanceMode::Exact, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    ensure(s.tolerance() == 31, || format!("ord(f) = {}", s.tolerance()))?;
    ensure(s.params().max_shift_sum == 30, || "max shift sum".into())?;
    ensure(s.legacy_tolerance() == 9, || format!("legacy {}", s.legacy_tolerance()))?;
    ensure(syncrocode::scheme::bch_pair_legacy_bound(5, 7, 3) == 10, || "m(d1-d2)/2".into())?;
    Ok(("ord(f) = 31, max a_l + a_r = 30 vs 9".into(), s))
}

fn bch_pair_sweep() -> Result<(String, Vec<SyncScheme>), String> {
    let mut schemes = Vec::new();
    for m in 5..=7usize {
        let top = (1usize << m.div_ceil(2)) - 1;
        for d2 in (3..=top).step_by(2) {
            for d1 in (d2 + 4..=top).step_by(2) {
                let s = bch_pair(m, d1, d2, DistanceMode::Designed, 0).map_err(|e| e.to_string())?;
                let n = (1u64 << m) - 1;
                ensure(s.tolerance() == n, || format!("m = {m}, ({d1}, {d2}): ord {}", s.tolerance()))?;
                schemes.push(s);
            }
        }
    }
    Ok((format!("{} pairs, m = 5..=7", schemes.len()), schemes))
}

fn simulate(m: usize, a: usize, per_shift: usize) -> Result<String, String> {
    let spec = BatchSpec {
        scheme: SchemeSpec {
            c: CodeSpec::Family(FamilyDescriptor::bch(m, 7, 1).unwrap()),
            d: CodeSpec::Family(FamilyDescriptor::bch(m, 3, 1).unwrap()),
            distance_mode: DistanceMode::Designed,
        },
        a_l: a,
        a_r: a,
        trials: (2 * a + 1) * per_shift,
        error_weight: 1,
        seed: 0x51c0_de00 + m as u64,
    };
    let scheme = spec.scheme.build(DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let report = run_batch_with(&scheme, &spec, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
    let bad = report.records.iter().find(|r| r.outcome != TrialOutcome::Correct || !r.within_budget);
    if let Some(r) = bad {
        return Err(format!("n = {}: trial {} {:?}", report.n, r.trial, r.outcome));
    }
    Ok(format!("n = {}: {} trials over {} shifts", report.n, report.trials, 2 * a + 1))
}

fn sync_simulation() -> Check {
    let a = simulate(5, 15, 1000)?;
    let b = simulate(7, 63, 200)?;
    Ok(format!("{a}; {b}"))
}

fn uniqueness_boundary(schemes: &[SyncScheme]) -> Check {
    for s in schemes {
        let ord = s.tolerance();
        let below = unique_remainders_check(s.f(), ord - 1).map_err(|e| e.to_string())?;
        let at = unique_remainders_check(s.f(), ord).map_err(|e| e.to_string())?;
        ensure(below && !at, || format!("n = {}, f = {}", s.n(), s.f().to_bit_string()))?;
    }
    Ok(format!("{} schemes", schemes.len()))
}

fn prime_length_rm_bch() -> Check {
    let start = Instant::now();
    let p = prime_rm_bch_params(8, 13).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    ensure(p.scheme.tolerance == 8191, || format!("tolerance {}", p.scheme.tolerance))?;
    ensure((p.params.phase_floor, p.params.bit_floor) == (15, 15), || {
        format!("floors {}/{}", p.params.phase_floor, p.params.bit_floor)
    })?;
    ensure(p.logical_discrepancy, || "logical-count discrepancy not flagged".into())?;
    ensure(secs < 60.0, || format!("took {secs:.1} s"))?;
    Ok(format!(
        "n = 8191, floors 15/15, logical {} vs closed form {}, {secs:.1} s",
        p.computed_logical, p.claimed_logical
    ))
}

fn run(id: usize, name: &str, check: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panic: {msg}"))
    });
    let secs = start.elapsed().as_secs_f64();
    match &outcome {
        Ok(detail) => println!("criterion {id:>2} PASS  {name}: {detail} ({secs:.2} s)"),
        Err(why) => println!("criterion {id:>2} FAIL  {name}: {why} ({secs:.2} s)"),
    }
    outcome.is_ok()
}

fn main() -> ExitCode {
    std::panic::set_hook(Box::new(|_| {}));
    let mut ok = true;
    ok &= run(1, "order engine vs brute force", order_vs_brute_force);
    ok &= run(2, "product of irreducibles of degree dividing m", irreducible_product_identity);
    ok &= run(3, "order of irreducible powers", order_of_powers);
    ok &= run(4, "BCH dual-containment rule", bch_dual_containing_rule);
    ok &= run(5, "BCH dimension rule", bch_dimension_rule);
    ok &= run(6, "punctured Reed-Muller parameters", punctured_rm_parameters);
    ok &= run(7, "punctured Reed-Muller nesting", rm_nesting);
    ok &= run(8, "Reed-Muller/BCH chain at n = 511", rm_bch_instance);

    let mut suite: Vec<SyncScheme> = Vec::new();
    ok &= run(9, "tolerance of the (7, 3) BCH pair at n = 31", || {
        headline_pair().map(|(msg, s)| {
            suite.push(s);
            msg
        })
    });
    ok &= run(10, "BCH pairs with d1 - d2 >= 4 reach ord(f) = n", || {
        bch_pair_sweep().map(|(msg, s)| {
            suite.extend(s);
            msg
        })
    });
    ok &= run(11, "shift recovery and frame correction by simulation", sync_simulation);
    ok &= run(12, "remainder uniqueness boundary at ord(f)", || {
        let (c, d) = rm_bch_chain(6, 9).map_err(|e| e.to_string())?;
        suite.push(build_scheme(&c, &d, DistanceMode::Designed, 0).map_err(|e| e.to_string())?);
        let (c, d) = rm_bch_chain(8, 13).map_err(|e| e.to_string())?;
        suite.push(build_scheme(&c, &d, DistanceMode::Designed, 0).map_err(|e| e.to_string())?);
        uniqueness_boundary(&suite)
    });
    ok &= run(13, "punctured Reed-Muller/BCH scheme at prime n = 8191", prime_length_rm_bch);

    if ok {
        println!("acceptance: all criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILURES above");
        ExitCode::FAILURE
    }
}

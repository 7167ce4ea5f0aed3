use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use syncrocode::cyclic::{min_distance, CyclicCode, DEFAULT_BUDGET};
use syncrocode::families::{Family, FamilyDescriptor};
use syncrocode::poly::factorize_with_seed;
use syncrocode::scheme::{bch_pair, bch_pair_legacy_bound, build_scheme, DistanceMode};
use syncrocode::sim::{run_batch, BatchSpec};
use syncrocode::{CodeSpec, Poly2};

/// Quantum synchronizable codes from nested cyclic codes over GF(2).
#[derive(Debug, Parser)]
#[command(name = "syncrocode", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Machine-readable JSON output.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// CSV output (tables only).
    #[arg(long, global = true)]
    csv: bool,
    /// RNG seed; overrides the seed of a simulation spec.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on syndrome-table entries and distance enumerations.
    #[arg(long, global = true, env = "SYNCROCODE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Polynomial factorization, order and primitivity.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Code constructions and checks.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Build a synchronizable scheme from codes C ⊂ D.
    Scheme {
        /// The dual-containing inner code C.
        c: String,
        /// The outer code D.
        d: String,
        /// Use BCH-bound distances instead of enumerating.
        #[arg(long)]
        designed: bool,
        /// Show ord(f) against the bounds from deg f alone.
        #[arg(long)]
        compare_legacy: bool,
    },
    /// Parameter tables.
    #[command(subcommand)]
    Table(TableCmd),
    /// Run a batch of synchronization trials from a JSON spec.
    Simulate { spec: PathBuf },
}

#[derive(Debug, Subcommand)]
enum PolyCmd {
    Factor { poly: String },
    Order { poly: String },
    Primitive { poly: String },
}

#[derive(Debug, Subcommand)]
enum CodeCmd {
    /// Punctured Reed-Muller code R(r, m)*.
    Rm {
        #[arg(short)]
        r: usize,
        #[arg(short)]
        m: usize,
    },
    /// Primitive BCH code of designed distance d.
    Bch {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        d: usize,
        #[arg(short, default_value_t = 1)]
        b: usize,
    },
    Dual { code: String },
    Distance { code: String },
    /// Is INNER a subcode of OUTER?
    Contains { inner: String, outer: String },
}

#[derive(Debug, Subcommand)]
enum TableCmd {
    /// For each m, every odd pair 3 <= d2 < d1 <= 2^ceil(m/2) - 1 of
    /// narrow-sense BCH designed distances: the bound m (d1 - d2) / 2
    /// from deg f against the computed ord(f).
    BchPairs {
        #[arg(long, default_value_t = 5)]
        m_min: usize,
        #[arg(long, default_value_t = 7)]
        m_max: usize,
    },
}

/// Code argument: `rm:R:M`, `bch:M:D[:B]`, `cyc:N:BITS`, or a JSON file.
fn parse_code(arg: &str) -> Result<(CyclicCode, Option<FamilyDescriptor>)> {
    let parts: Vec<&str> = arg.split(':').collect();
    let num = |s: &str| -> Result<usize> {
        s.parse()
            .with_context(|| format!("bad number {s:?} in code spec {arg:?}"))
    };
    let family = match parts.as_slice() {
        ["rm", r, m] => Some(FamilyDescriptor::rm(num(r)?, num(m)?)?),
        ["bch", m, d] => Some(FamilyDescriptor::bch(num(m)?, num(d)?, 1)?),
        ["bch", m, d, b] => Some(FamilyDescriptor::bch(num(m)?, num(d)?, num(b)?)?),
        ["cyc", n, bits] => {
            let code = CyclicCode::new(num(n)?, Poly2::parse(bits)?)?;
            return Ok((code, None));
        }
        _ => None,
    };
    if let Some(f) = family {
        return Ok((f.build()?, Some(f)));
    }
    let text = fs::read_to_string(arg)
        .with_context(|| format!("{arg:?} is neither a code spec (rm:R:M, bch:M:D[:B], cyc:N:BITS) nor a readable file"))?;
    let spec: CodeSpec =
        serde_json::from_str(&text).with_context(|| format!("parsing code descriptor {arg:?}"))?;
    let code = spec.build()?;
    let family = match spec {
        CodeSpec::Family(f) => Some(f),
        CodeSpec::Generic(_) => None,
    };
    Ok((code, family))
}

fn describe(code: &CyclicCode) -> String {
    format!(
        "[{}, {}] code, generator {} ({})",
        code.n(),
        code.k(),
        code.generator().to_bit_string(),
        code.generator()
    )
}

/// Fixed-width `key  value` lines.
fn aligned(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn poly_cmd(cmd: &PolyCmd, g: &Global) -> Result<String> {
    match cmd {
        PolyCmd::Factor { poly } => {
            let p = Poly2::parse(poly)?;
            let fac = factorize_with_seed(&p, g.seed.unwrap_or(0x5eed_f00d))?;
            if g.json {
                return to_json(&json!({"poly": p, "factors": fac}));
            }
            let mut out = format!("{p} =");
            for (q, a) in fac.factors() {
                if *a == 1 {
                    write!(out, " ({q})")?;
                } else {
                    write!(out, " ({q})^{a}")?;
                }
            }
            out.push('\n');
            for (q, a) in fac.factors() {
                writeln!(out, "  {:<20} x{a}", q.to_bit_string())?;
            }
            Ok(out)
        }
        PolyCmd::Order { poly } => {
            let p = Poly2::parse(poly)?;
            let e = p.order()?;
            if g.json {
                return to_json(&json!({"poly": p, "order": e}));
            }
            Ok(format!("{e}\n"))
        }
        PolyCmd::Primitive { poly } => {
            let p = Poly2::parse(poly)?;
            let prim = p.is_primitive()?;
            if g.json {
                return to_json(&json!({"poly": p, "primitive": prim}));
            }
            Ok(format!("{prim}\n"))
        }
    }
}

fn code_cmd(cmd: &CodeCmd, g: &Global) -> Result<String> {
    let show_family = |f: FamilyDescriptor| -> Result<String> {
        if g.json {
            return to_json(&f);
        }
        let code = f.build()?;
        let name = match f.family {
            Family::PuncturedRm => format!("R({}, {})*", f.r.unwrap_or(0), f.m),
            Family::Bch => format!("BCH(m = {}, d = {}, b = {})", f.m, f.d.unwrap_or(0), f.b.unwrap_or(1)),
        };
        Ok(format!("{name}: {}\n", describe(&code)))
    };
    match cmd {
        CodeCmd::Rm { r, m } => show_family(FamilyDescriptor::rm(*r, *m)?),
        CodeCmd::Bch { m, d, b } => show_family(FamilyDescriptor::bch(*m, *d, *b)?),
        CodeCmd::Dual { code } => {
            let (c, _) = parse_code(code)?;
            let dual = c.dual();
            if g.json {
                return to_json(&dual.descriptor());
            }
            Ok(format!("{}\n", describe(&dual)))
        }
        CodeCmd::Distance { code } => {
            let (c, _) = parse_code(code)?;
            let report = min_distance(&c, g.budget);
            let bound = c.bch_bound().ok();
            if g.json {
                return to_json(&json!({
                    "n": c.n(), "k": c.k(), "distance": report, "bch_bound": bound,
                }));
            }
            let shown = match report {
                syncrocode::DistanceReport::Exact(d) => format!("{d} (exact)"),
                syncrocode::DistanceReport::LowerBound(d) => {
                    format!(">= {d} (budget {} exhausted)", g.budget)
                }
                syncrocode::DistanceReport::NotComputed => "not computed within budget".into(),
                syncrocode::DistanceReport::NoNonzeroCodewords => "none (zero code)".into(),
            };
            let mut rows = vec![("code", describe(&c)), ("distance", shown)];
            if let Some(b) = bound {
                rows.push(("bch bound", b.to_string()));
            }
            Ok(aligned(&rows))
        }
        CodeCmd::Contains { inner, outer } => {
            let (i, _) = parse_code(inner)?;
            let (o, _) = parse_code(outer)?;
            let yes = CyclicCode::is_subcode(&i, &o)?;
            if g.json {
                return to_json(&json!({"inner": i.descriptor(), "outer": o.descriptor(), "contained": yes}));
            }
            Ok(format!("{yes}\n"))
        }
    }
}

fn scheme_cmd(c: &str, d: &str, designed: bool, compare: bool, g: &Global) -> Result<String> {
    let (cc, cf) = parse_code(c)?;
    let (dc, df) = parse_code(d)?;
    let mode = if designed {
        DistanceMode::Designed
    } else {
        DistanceMode::Exact
    };
    let s = build_scheme(&cc, &dc, mode, g.budget)?;
    let report = s.report();
    // the m (d1 - d2) / 2 bound applies to two narrow-sense BCH codes
    let pair_bound = match (&cf, &df) {
        (Some(a), Some(b))
            if a.family == Family::Bch
                && b.family == Family::Bch
                && a.b.unwrap_or(1) == 1
                && b.b.unwrap_or(1) == 1 =>
        {
            Some(bch_pair_legacy_bound(a.m, a.d.unwrap_or(0), b.d.unwrap_or(0)))
        }
        _ => None,
    };
    if g.json {
        let mut v = serde_json::to_value(&report)?;
        if compare {
            v["comparison"] = json!({
                "max_shift_sum": s.params().max_shift_sum,
                "legacy_max_shift_sum": s.legacy_tolerance(),
                "bch_pair_bound": pair_bound,
            });
        }
        return to_json(&v);
    }
    let p = s.params();
    let floor = |v: usize, d: &syncrocode::scheme::Distance| {
        let src = match d.source {
            DistanceMode::Exact => "exact",
            DistanceMode::Designed => "designed",
        };
        format!("{v} (d = {}, {src})", d.value)
    };
    let factors = report
        .f_factors
        .factors()
        .iter()
        .map(|(q, a)| if *a == 1 { format!("({q})") } else { format!("({q})^{a}") })
        .collect::<String>();
    let mut rows = vec![
        ("n", report.n.to_string()),
        ("k1, k2", format!("{}, {}", report.k1, report.k2)),
        ("f", report.f.to_bit_string()),
        ("f factors", factors),
        ("ord(f)", report.tolerance.to_string()),
        ("max a_l + a_r", p.max_shift_sum.to_string()),
        ("logical", report.logical.to_string()),
        ("phase floor", floor(p.phase_floor, &p.phase_distance)),
        ("bit floor", floor(p.bit_floor, &p.bit_distance)),
    ];
    if compare {
        rows.push(("legacy max a_l + a_r", format!("{} (from k2 - k1)", s.legacy_tolerance())));
        if let Some(b) = pair_bound {
            rows.push(("BCH pair bound", format!("a_l + a_r < {b}")));
        }
        rows.push((
            "improvement",
            format!("{} more admissible shift sums", p.max_shift_sum - s.legacy_tolerance() as u64),
        ));
    }
    Ok(aligned(&rows))
}

#[derive(Debug, Serialize)]
struct PairRow {
    m: usize,
    n: usize,
    d1: usize,
    d2: usize,
    k1: usize,
    k2: usize,
    /// `m (d1 - d2) / 2`, exclusive bound on `a_l + a_r` from `deg f`.
    legacy_bound: usize,
    /// `ord(f)`, exclusive bound on `a_l + a_r`.
    new_bound: u64,
    /// Whether `m >= 5` and `d1 - d2 >= 4`, under which `ord(f) = n` is proven.
    in_hypothesis: bool,
}

fn pair_rows(m_min: usize, m_max: usize, budget: u64) -> Result<Vec<PairRow>> {
    if m_min < 2 || m_max > 13 || m_min > m_max {
        bail!("need 2 <= m-min <= m-max <= 13");
    }
    let mut rows = Vec::new();
    for m in m_min..=m_max {
        let top = (1usize << m.div_ceil(2)) - 1;
        for d2 in (3..=top).step_by(2) {
            for d1 in (d2 + 2..=top).step_by(2) {
                let s = bch_pair(m, d1, d2, DistanceMode::Designed, budget)?;
                rows.push(PairRow {
                    m,
                    n: s.n(),
                    d1,
                    d2,
                    k1: s.c().k(),
                    k2: s.d().k(),
                    legacy_bound: bch_pair_legacy_bound(m, d1, d2),
                    new_bound: s.tolerance(),
                    in_hypothesis: m >= 5 && d1 - d2 >= 4,
                });
            }
        }
    }
    Ok(rows)
}

fn table_cmd(cmd: &TableCmd, g: &Global) -> Result<String> {
    let TableCmd::BchPairs { m_min, m_max } = cmd;
    let rows = pair_rows(*m_min, *m_max, g.budget)?;
    if g.json {
        return rows.iter().map(to_json).collect();
    }
    let header = ["m", "n", "d1", "d2", "k1", "k2", "legacy_bound", "new_bound", "in_hypothesis"];
    let cells: Vec<[String; 9]> = rows
        .iter()
        .map(|r| {
            [
                r.m.to_string(),
                r.n.to_string(),
                r.d1.to_string(),
                r.d2.to_string(),
                r.k1.to_string(),
                r.k2.to_string(),
                r.legacy_bound.to_string(),
                r.new_bound.to_string(),
                r.in_hypothesis.to_string(),
            ]
        })
        .collect();
    if g.csv {
        let mut out = header.join(",") + "\n";
        for c in &cells {
            out += &(c.join(",") + "\n");
        }
        return Ok(out);
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|i| cells.iter().map(|c| c[i].len()).chain([header[i].len()]).max().unwrap_or(0))
        .collect();
    let line = |vals: Vec<&str>| -> String {
        vals.iter()
            .zip(&widths)
            .map(|(v, w)| format!("{v:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            + "\n"
    };
    let mut out = line(header.to_vec());
    for c in &cells {
        out += &line(c.iter().map(String::as_str).collect());
    }
    Ok(out)
}

fn simulate_cmd(path: &Path, g: &Global) -> Result<String> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let mut spec: BatchSpec =
        serde_json::from_str(&text).with_context(|| format!("parsing batch spec {}", path.display()))?;
    if let Some(seed) = g.seed {
        spec.seed = seed;
    }
    let report = run_batch(&spec, g.budget)?;
    if g.json {
        return to_json(&report);
    }
    let failures = if report.failures.is_empty() {
        "none".to_string()
    } else {
        report
            .failures
            .iter()
            .map(|(k, v)| format!("{k} x{v}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    Ok(aligned(&[
        ("n", report.n.to_string()),
        ("a_l, a_r", format!("{}, {}", report.a_l, report.a_r)),
        ("ord(f)", report.tolerance.to_string()),
        ("bit floor", report.bit_floor.to_string()),
        ("error weight", report.error_weight.to_string()),
        ("seed", report.seed.to_string()),
        ("trials", report.trials.to_string()),
        ("successes", report.successes.to_string()),
        ("success rate", format!("{:.6}", report.success_rate)),
        ("over-budget trials", report.over_budget_trials.to_string()),
        ("failures", failures),
    ]))
}

fn run(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    if g.csv && !matches!(cli.command, Command::Table(_)) {
        bail!("--csv applies only to `table`");
    }
    match &cli.command {
        Command::Poly(cmd) => poly_cmd(cmd, g),
        Command::Code(cmd) => code_cmd(cmd, g),
        Command::Scheme {
            c,
            d,
            designed,
            compare_legacy,
        } => scheme_cmd(c, d, *designed, *compare_legacy, g),
        Command::Table(cmd) => table_cmd(cmd, g),
        Command::Simulate { spec } => simulate_cmd(spec, g),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|text| match &cli.global.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .context("writing stdout"),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn code_specs() {
        assert_eq!(parse_code("rm:1:3").unwrap().0.k(), 4);
        assert_eq!(parse_code("bch:5:7").unwrap().0.k(), 16);
        assert_eq!(parse_code("bch:3:2:0").unwrap().0.k(), 6);
        assert_eq!(parse_code("cyc:7:1101").unwrap().0.k(), 4);
        assert!(parse_code("cyc:7:101").is_err());
        assert!(parse_code("no-such-file.json").is_err());
    }

    #[test]
    fn generic_descriptor_round_trip() {
        let d: syncrocode::cyclic::CodeDescriptor = serde_json::from_str(r#"{"n":7,"generator":"1101","k":4}"#).unwrap();
        assert_eq!(d.build().unwrap().k(), 4);
    }

    #[test]
    fn cli_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

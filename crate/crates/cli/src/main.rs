//! `qbch`: tables of cyclotomic cosets, BCH parameters, inner distributions
//! and weight enumerators, plus the oracle acceptance run.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qbch::oracle::acceptance::{run_acceptance, Grid};
use qbch::oracle::{exhaustive_weight_distribution, DEFAULT_WORD_BUDGET};
use qbch::scheme::DEFAULT_FORM_BUDGET;
use qbch::{
    bch_parameters, delta_formula, enumerate_inner_dist, full_enumerator, predicted_inner_dist, CodeFamily,
    CodeFamilySpec, CosetTable, Distance, FieldContext, FieldParams, FormFamily, InnerDistribution, Sign,
    WeightEnumerator,
};

#[derive(Parser)]
#[command(name = "qbch", version, about = "BCH codes of length (q^m-1)/2 and their weight enumerators")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    C1,
    C2,
    #[value(name = "c1-tilde")]
    C1Tilde,
    #[value(name = "c2-tilde")]
    C2Tilde,
}

impl From<Family> for CodeFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::C1 => CodeFamily::C1,
            Family::C2 => CodeFamily::C2,
            Family::C1Tilde => CodeFamily::C1Tilde,
            Family::C2Tilde => CodeFamily::C2Tilde,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// The q-cyclotomic cosets modulo n.
    Cosets {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u64,
    },
    /// Coset leaders modulo (q^m-1)/2, largest first.
    Leaders {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        /// Compare the closed-form delta_i with the scan.
        #[arg(long)]
        check_formula: bool,
    },
    /// Parameters of the BCH code with designed distance delta_i.
    Bch {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        i: u32,
        /// Largest code enumerated for the exact minimum distance.
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        word_budget: u64,
    },
    /// Weight enumerator of a code family.
    Weights {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        h: u32,
        #[arg(long, value_enum)]
        family: Family,
        /// Enumerate every codeword instead of using the closed form.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_WORD_BUDGET)]
        word_budget: u64,
    },
    /// Run the acceptance checks.
    Verify {
        /// JSON grid; the standard grid when absent.
        #[arg(long)]
        grid: Option<PathBuf>,
    },
    /// Inner distribution of the quadratic-form family starting at h.
    InnerDist {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        h: u32,
        /// Enumerate the family instead of using the closed form.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_FORM_BUDGET)]
        form_budget: u64,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<qbch::Error> for Failure {
    fn from(e: qbch::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = io::stdout().lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}

fn context(q: u64, m: u32) -> Result<FieldContext, Failure> {
    Ok(FieldContext::new(FieldParams::from_q(q, m)?)?)
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Cosets { q, n } => cosets(f, out, *q, *n),
        Command::Leaders { q, m, check_formula } => leaders(f, out, *q, *m, *check_formula),
        Command::Bch { q, m, i, word_budget } => bch(f, out, *q, *m, *i, *word_budget),
        Command::Weights { q, m, h, family, oracle, word_budget } => {
            weights(f, out, *q, *m, *h, (*family).into(), *oracle, *word_budget)
        }
        Command::Verify { grid } => verify(f, out, grid.as_ref()),
        Command::InnerDist { q, m, h, oracle, form_budget } => inner_dist(f, out, *q, *m, *h, *oracle, *form_budget),
    }
}

fn io_err(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("output: {e}"))
}

fn emit_json(out: &mut impl Write, params: Value, result: Value, provenance: &str) -> Outcome {
    let doc = json!({ "params": params, "result": result, "provenance": provenance });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(io_err)?).map_err(io_err)
}

fn emit_csv(out: &mut impl Write, header: &[&str], rows: Vec<Vec<String>>) -> Outcome {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(io_err)?;
    for r in rows {
        w.write_record(&r).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn join(v: &[u64]) -> String {
    v.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn cosets(f: Format, out: &mut impl Write, q: u64, n: u64) -> Outcome {
    let t = CosetTable::new(q, n)?;
    match f {
        Format::Json => emit_json(
            out,
            json!({ "q": q, "n": n }),
            json!({ "cosets": t.cosets().iter().map(|c| json!({
                "leader": c.leader, "size": c.size(), "elements": c.elements,
            })).collect::<Vec<_>>() }),
            "oracle",
        ),
        Format::Csv => emit_csv(
            out,
            &["leader", "size", "elements"],
            t.cosets().iter().map(|c| vec![c.leader.to_string(), c.size().to_string(), join(&c.elements)]).collect(),
        ),
        Format::Text => {
            writeln!(out, "{} cosets of {q} modulo {n}", t.cosets().len()).map_err(io_err)?;
            for c in t.cosets() {
                writeln!(out, "C_{} (size {}): {{{}}}", c.leader, c.size(), join(&c.elements)).map_err(io_err)?;
            }
            Ok(())
        }
    }
}

fn leaders(f: Format, out: &mut impl Write, q: u64, m: u32, check: bool) -> Outcome {
    let t = CosetTable::for_field(q, m)?;
    let mut ranked: Vec<(u64, usize)> = t.cosets().iter().map(|c| (c.leader, c.size())).collect();
    ranked.reverse();
    let checks: Vec<(u32, u64, u64)> = if check {
        (1..=qbch::cyclotomic::delta_index_bound(m))
            .map(|i| Ok((i, delta_formula(q, m, i)?, t.ith_largest_leader(i as usize)?)))
            .collect::<qbch::Result<_>>()?
    } else {
        Vec::new()
    };
    let all_match = checks.iter().all(|(_, a, b)| a == b);
    match f {
        Format::Json => {
            let mut result = json!({
                "n": t.n(),
                "leaders": ranked.iter().enumerate().map(|(i, (l, s))| json!({
                    "rank": i + 1, "leader": l, "size": s,
                })).collect::<Vec<_>>(),
            });
            if check {
                result["formula_check"] = checks
                    .iter()
                    .map(|(i, a, b)| json!({ "i": i, "formula": a, "scan": b, "match": a == b }))
                    .collect();
            }
            emit_json(out, json!({ "q": q, "m": m, "check_formula": check }), result, "oracle")?;
        }
        Format::Csv if check => emit_csv(
            out,
            &["i", "formula", "scan", "match"],
            checks.iter().map(|(i, a, b)| vec![i.to_string(), a.to_string(), b.to_string(), (a == b).to_string()]).collect(),
        )?,
        Format::Csv => emit_csv(
            out,
            &["rank", "leader", "size"],
            ranked.iter().enumerate().map(|(i, (l, s))| vec![(i + 1).to_string(), l.to_string(), s.to_string()]).collect(),
        )?,
        Format::Text => {
            writeln!(out, "n = {}, {} leaders, largest first:", t.n(), ranked.len()).map_err(io_err)?;
            let list: Vec<u64> = ranked.iter().map(|&(l, _)| l).collect();
            writeln!(out, "{}", join(&list)).map_err(io_err)?;
            for (i, a, b) in &checks {
                let verdict = if a == b { "matches" } else { "DIFFERS from" };
                writeln!(out, "delta_{i} = {a} {verdict} the scanned leader {b}").map_err(io_err)?;
            }
        }
    }
    if all_match {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn bch(f: Format, out: &mut impl Write, q: u64, m: u32, i: u32, budget: u64) -> Outcome {
    let ctx = context(q, m)?;
    let p = bch_parameters(&ctx, i, budget)?;
    let (distance, provenance) = match p.distance {
        Distance::Exact(d) => (json!(d), "oracle"),
        Distance::Bracket { lower, upper } => (json!({ "lower": lower, "upper": upper }), "closed-form"),
    };
    let generator: Vec<u16> = p.generator.coeffs().to_vec();
    match f {
        Format::Json => emit_json(
            out,
            json!({ "q": q, "m": m, "i": i }),
            json!({
                "n": p.n,
                "k": p.k,
                "k_closed_form": p.k_closed_form,
                "delta": p.delta,
                "d_B": p.d_b,
                "d": distance,
                "h": p.h,
                "family": p.family.name(),
                "generator": generator,
            }),
            provenance,
        ),
        Format::Csv => {
            let d = match p.distance {
                Distance::Exact(d) => d.to_string(),
                Distance::Bracket { lower, upper } => format!("{lower}..{upper}"),
            };
            emit_csv(
                out,
                &["n", "k", "delta", "d_B", "d", "h", "family"],
                vec![vec![
                    p.n.to_string(),
                    p.k.to_string(),
                    p.delta.to_string(),
                    p.d_b.to_string(),
                    d,
                    p.h.to_string(),
                    p.family.name().to_string(),
                ]],
            )
        }
        Format::Text => {
            let d = match p.distance {
                Distance::Exact(d) => format!("d = {d}"),
                Distance::Bracket { lower, upper } => format!("{lower} <= d <= {upper}"),
            };
            writeln!(out, "[{}, {}, {}] code over F_{q}, Bose distance {}, {d}", p.n, p.k, p.delta, p.d_b)
                .map_err(io_err)?;
            writeln!(out, "trace form: {} with h = {}", p.family, p.h).map_err(io_err)?;
            writeln!(out, "g(x) = {}", p.generator).map_err(io_err)
        }
    }
}

fn enumerator_rows(w: &WeightEnumerator) -> Vec<Vec<String>> {
    w.pairs().map(|(wt, c)| vec![wt.to_string(), c.to_string()]).collect()
}

#[allow(clippy::too_many_arguments)]
fn weights(f: Format, out: &mut impl Write, q: u64, m: u32, h: u32, family: CodeFamily, oracle: bool, budget: u64) -> Outcome {
    let spec = CodeFamilySpec::new(family, q, m, h)?;
    let w = if oracle {
        exhaustive_weight_distribution(&context(q, m)?, &spec, budget)?
    } else {
        full_enumerator(q, m, h, family)?
    };
    let provenance = if oracle { "oracle" } else { "closed-form" };
    match f {
        Format::Json => emit_json(
            out,
            json!({ "q": q, "m": m, "h": h, "family": family.name() }),
            json!({
                "n": w.n(),
                "dimension": spec.dimension(),
                "weights": w.pairs().map(|(wt, c)| json!([wt, c.to_string()])).collect::<Vec<_>>(),
            }),
            provenance,
        ),
        Format::Csv => emit_csv(out, &["weight", "count"], enumerator_rows(&w)),
        Format::Text => writeln!(out, "{w}").map_err(io_err),
    }
}

fn dist_rows(d: &InnerDistribution) -> Vec<(u32, i8, String)> {
    let mut rows = vec![(0, 0, d.a0().to_string())];
    for r in 1..=d.m() {
        for t in Sign::BOTH {
            rows.push((r, t.value(), d.get(r, t).to_string()));
        }
    }
    rows
}

fn inner_dist(f: Format, out: &mut impl Write, q: u64, m: u32, h: u32, oracle: bool, budget: u64) -> Outcome {
    let d = if oracle {
        enumerate_inner_dist(&context(q, m)?, &FormFamily::from_h(m, h)?, budget)?
    } else {
        if q.is_multiple_of(2) {
            return Err(qbch::Error::EvenCharacteristic(q).into());
        }
        qbch::field::prime_power(q)?;
        predicted_inner_dist(q, m, h)?
    };
    let provenance = if oracle { "oracle" } else { "closed-form" };
    let rows = dist_rows(&d);
    match f {
        Format::Json => emit_json(
            out,
            json!({ "q": q, "m": m, "h": h }),
            json!({
                "total": d.total().to_string(),
                "distribution": rows.iter().map(|(r, t, c)| json!({ "rank": r, "tau": t, "count": c })).collect::<Vec<_>>(),
            }),
            provenance,
        ),
        Format::Csv => emit_csv(
            out,
            &["rank", "tau", "count"],
            rows.into_iter().map(|(r, t, c)| vec![r.to_string(), t.to_string(), c]).collect(),
        ),
        Format::Text => writeln!(out, "{d}").map_err(io_err),
    }
}

fn verify(f: Format, out: &mut impl Write, grid: Option<&PathBuf>) -> Outcome {
    let grid = match grid {
        None => Grid::standard(),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?
        }
    };
    let report = run_acceptance(&grid);
    match f {
        Format::Json => emit_json(
            out,
            serde_json::to_value(&grid).map_err(io_err)?,
            json!({
                "passed": report.all_passed(),
                "criteria": report.summaries().iter().map(|s| json!({
                    "criterion": s.criterion, "title": s.title, "checks": s.checks,
                    "failed": s.failed, "passed": s.passed(),
                })).collect::<Vec<_>>(),
                "checks": serde_json::to_value(&report.checks).map_err(io_err)?,
            }),
            "oracle",
        )?,
        Format::Csv => emit_csv(
            out,
            &["criterion", "name", "passed", "observed", "expected"],
            report
                .checks
                .iter()
                .map(|c| {
                    vec![c.criterion.to_string(), c.name.clone(), c.passed.to_string(), c.observed.clone(), c.expected.clone()]
                })
                .collect(),
        )?,
        Format::Text => {
            for c in report.failures() {
                writeln!(out, "{c}").map_err(io_err)?;
            }
            for s in report.summaries() {
                writeln!(out, "{s}").map_err(io_err)?;
            }
            writeln!(out, "{}", if report.all_passed() { "all checks passed" } else { "verification FAILED" })
                .map_err(io_err)?;
        }
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

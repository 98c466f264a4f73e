use std::fmt::Write as _;

use kncross::enumeration::identities::{
    search_nesting_counterexample, verify_donaghey, verify_euler, verify_gamma, verify_stirling,
    IdentityReport,
};
use kncross::enumeration::motzkin::{matching_to_motzkin, motzkin_to_matching, MotzkinPath};
use kncross::enumeration::selftest::run_selftest;
use kncross::enumeration::{iterate_partitions, Enumerator, Profile};
use kncross::fillings::{inv_c, inv_e, inv_f, map_c, map_e, map_f, Composition, TriangularFilling};
use kncross::render::{arc_diagram, filling_grid};
use kncross::{phi, phi_inv, psi, psi_inv, Convention, MatchingPair, SetPartition, StepTrace};
use serde::{Deserialize, Serialize};

use crate::args::{
    Command, EnumerateArgs, Fill, Format, Global, Motzkin, PhiArgs, RenderArgs, SelftestArgs,
    Verify, What,
};
use crate::input::{read_json, read_text};
use crate::CliError;

/// Rendered output and whether everything checked held.
pub struct Outcome {
    pub text: String,
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, ok: true }
    }
}

pub fn dispatch(cmd: &Command, g: &Global) -> Result<Outcome, CliError> {
    let tabular = matches!(
        cmd,
        Command::Verify(_) | Command::Enumerate(_) | Command::Selftest(_) | Command::Render(_)
    );
    if g.format == Format::Csv && !tabular {
        return Err(no_csv("this command"));
    }
    match cmd {
        Command::Verify(v) => verify(v, g),
        Command::Phi(a) => bijection(a, g, false),
        Command::PhiInv(a) => bijection(a, g, true),
        Command::Psi => {
            let p: SetPartition = read_json(g.input.as_deref(), "partition")?;
            let pair = psi(&p)?;
            single(g, &pair, || {
                format!("A = {:?}\nmu = {:?}\n", pair.a(), pair.mu())
            })
        }
        Command::PsiInv => {
            let pair: MatchingPair = read_json(g.input.as_deref(), "matching pair")?;
            let p = psi_inv(&pair);
            single(g, &p, || arc_diagram(&p))
        }
        Command::Fill(f) => fill(f, g),
        Command::Enumerate(a) => enumerate(a, g),
        Command::Motzkin(m) => motzkin(m, g),
        Command::Render(a) => render(a, g),
        Command::Selftest(a) => selftest(a, g),
    }
}

fn ceiling(g: &Global, ground: usize) -> Result<(), CliError> {
    let limit = if g.large { 12 } else { 10 };
    if ground > limit {
        let hint = if g.large {
            ""
        } else {
            " (pass --large to allow 12)"
        };
        return Err(CliError::Usage(format!(
            "exhaustive enumeration is limited to {limit} ground elements, {ground} requested{hint}"
        )));
    }
    Ok(())
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn no_csv(what: &str) -> CliError {
    CliError::Usage(format!("{what} has no csv output; use json or ascii"))
}

/// One JSON object, or its text picture.
fn single<T: Serialize>(
    g: &Global,
    value: &T,
    ascii: impl FnOnce() -> String,
) -> Result<Outcome, CliError> {
    match g.format {
        Format::Json => Ok(Outcome::ok(json_line(value))),
        Format::Ascii => Ok(Outcome::ok(ascii())),
        Format::Csv => unreachable!("rejected in dispatch"),
    }
}

fn verify(v: &Verify, g: &Global) -> Result<Outcome, CliError> {
    let mut e = Enumerator::new(g.jobs);
    let mut reports = Vec::new();
    match v {
        Verify::Euler { n, k } => {
            ceiling(g, n.hi + 1)?;
            for n in n.iter() {
                for k in k.iter() {
                    reports.push(verify_euler(&mut e, n, k)?);
                }
            }
        }
        Verify::Gamma { n } => {
            ceiling(g, n.hi + 1)?;
            for n in n.iter() {
                reports.push(verify_gamma(&mut e, n)?);
            }
        }
        Verify::Stirling { n } => {
            ceiling(g, n.hi + 1)?;
            for n in n.iter() {
                reports.push(verify_stirling(&mut e, n)?);
            }
        }
        Verify::Donaghey { n, enumerate_up_to } => {
            ceiling(g, *enumerate_up_to)?;
            for n in n.iter() {
                reports.push(verify_donaghey(&mut e, n, *enumerate_up_to)?);
            }
        }
        Verify::NestingGap { n_max } => return nesting_gap(*n_max, g, &mut e),
    }
    let ok = reports.iter().all(IdentityReport::holds);
    let mut text = String::new();
    match g.format {
        Format::Json => reports.iter().for_each(|r| text.push_str(&json_line(r))),
        Format::Csv => {
            text.push_str("identity,n,k,equal,checks_ok,first_mismatch,lhs,rhs\n");
            for r in &reports {
                let _ = writeln!(
                    text,
                    "{},{},{},{},{},{},{},{}",
                    r.name,
                    r.n,
                    r.k.map(|k| k.to_string()).unwrap_or_default(),
                    r.equal,
                    r.checks.iter().all(|c| c.ok),
                    r.first_mismatch.map(|m| m.to_string()).unwrap_or_default(),
                    r.lhs,
                    r.rhs
                );
            }
        }
        Format::Ascii => {
            for r in &reports {
                let k = r.k.map(|k| format!(" k={k}")).unwrap_or_default();
                if r.equal {
                    let _ = writeln!(text, "{} n={}{k}: ok  {}", r.name, r.n, r.lhs);
                } else {
                    let _ = writeln!(
                        text,
                        "{} n={}{k}: MISMATCH at t^{}\n  lhs {}\n  rhs {}",
                        r.name,
                        r.n,
                        r.first_mismatch.unwrap_or(0),
                        r.lhs,
                        r.rhs
                    );
                }
                for c in r.checks.iter().filter(|c| !c.ok) {
                    let _ = writeln!(text, "  failed check {}: {}", c.name, c.detail);
                }
            }
        }
    }
    Ok(Outcome { text, ok })
}

fn nesting_gap(n_max: usize, g: &Global, e: &mut Enumerator) -> Result<Outcome, CliError> {
    ceiling(g, n_max + 1)?;
    let search = search_nesting_counterexample(e, n_max)?;
    let ok = search.witness.is_some() && search.all_agree_at_one();
    let mut text = String::new();
    match g.format {
        Format::Json => text = json_line(&search),
        Format::Csv => {
            text.push_str("n,k,equal,agree_at_one,lhs,rhs\n");
            for s in &search.scanned {
                let _ = writeln!(
                    text,
                    "{},{},{},{},{},{}",
                    s.n, s.k, s.equal, s.agree_at_one, s.lhs, s.rhs
                );
            }
        }
        Format::Ascii => {
            for s in &search.scanned {
                let mark = if s.equal { "equal" } else { "DIFFER" };
                let _ = writeln!(text, "n={} k={}: {mark}  {} | {}", s.n, s.k, s.lhs, s.rhs);
            }
            match &search.witness {
                Some(w) => {
                    let _ = writeln!(text, "smallest witness: n={} k={}", w.n, w.k);
                }
                None => text.push_str("no witness\n"),
            }
        }
    }
    Ok(Outcome { text, ok })
}

fn describe_trace(trace: &StepTrace) -> String {
    let mut text = String::new();
    for (i, s) in trace.steps.iter().enumerate() {
        let arcs = |v: &[kncross::Arc]| {
            v.iter()
                .map(|a| format!("({},{})", a.left, a.right))
                .collect::<Vec<_>>()
                .join(" ")
        };
        let kind = serde_json::to_value(s.kind).expect("serializable");
        let _ = writeln!(
            text,
            "step {} {} at {}: remove {} add {}",
            i + 1,
            kind.as_str().unwrap_or_default(),
            s.node,
            arcs(&s.removed),
            arcs(&s.added)
        );
    }
    text
}

fn bijection(a: &PhiArgs, g: &Global, inverse: bool) -> Result<Outcome, CliError> {
    let p: SetPartition = read_json(g.input.as_deref(), "partition")?;
    let (q, trace) = if inverse {
        phi_inv(&p, a.k)?
    } else {
        phi(&p, a.k)?
    };
    match g.format {
        Format::Json => {
            let mut text = if a.trace {
                trace.json_lines()
            } else {
                String::new()
            };
            text.push_str(&json_line(&q));
            Ok(Outcome::ok(text))
        }
        Format::Ascii => {
            let mut text = arc_diagram(&p);
            text.push('\n');
            if a.trace {
                text.push_str(&describe_trace(&trace));
                text.push('\n');
            }
            text.push_str(&arc_diagram(&q));
            Ok(Outcome::ok(text))
        }
        Format::Csv => unreachable!("rejected in dispatch"),
    }
}

#[derive(Serialize, Deserialize)]
struct FPair {
    composition: Composition,
    filling: TriangularFilling,
}

fn fill(f: &Fill, g: &Global) -> Result<Outcome, CliError> {
    let src = g.input.as_deref();
    match f {
        Fill::MapC => {
            let out = map_c(&read_json::<SetPartition>(src, "partition")?)?;
            single(g, &out, || filling_grid(&out))
        }
        Fill::MapE => {
            let out = map_e(&read_json::<SetPartition>(src, "partition")?);
            single(g, &out, || filling_grid(&out))
        }
        Fill::InvC => {
            let out = inv_c(&read_json::<TriangularFilling>(src, "filling")?)?;
            single(g, &out, || arc_diagram(&out))
        }
        Fill::InvE => {
            let out = inv_e(&read_json::<TriangularFilling>(src, "filling")?)?;
            single(g, &out, || arc_diagram(&out))
        }
        Fill::MapF => {
            let (composition, filling) = map_f(&read_json::<TriangularFilling>(src, "filling")?)?;
            let out = FPair {
                composition,
                filling,
            };
            single(g, &out, || {
                let parts: Vec<String> = out
                    .composition
                    .parts()
                    .iter()
                    .map(|p| p.to_string())
                    .collect();
                format!(
                    "composition {}\n{}",
                    parts.join(" "),
                    filling_grid(&out.filling)
                )
            })
        }
        Fill::InvF => {
            let pair: FPair = read_json(src, "composition/filling")?;
            let out = inv_f(&pair.composition, &pair.filling)?;
            single(g, &out, || filling_grid(&out))
        }
    }
}

fn enumerate(a: &EnumerateArgs, g: &Global) -> Result<Outcome, CliError> {
    ceiling(g, a.n.hi)?;
    if a.list {
        return list(a, g);
    }
    let mut e = Enumerator::new(g.jobs);
    let mut text = String::new();
    if g.format == Format::Csv {
        text.push_str("n,k,class,total,coeffs\n");
    }
    for n in a.n.iter() {
        for k in a.k.iter() {
            let poly = e.class_poly(n, k, a.class)?;
            let total = poly.eval_one();
            match g.format {
                Format::Json => {
                    let row = serde_json::json!({
                        "n": n,
                        "k": k,
                        "class": a.class,
                        "total": total.to_string(),
                        "poly": poly,
                    });
                    text.push_str(&json_line(&row));
                }
                Format::Csv => {
                    let coeffs: Vec<String> = poly.coeffs().iter().map(|c| c.to_string()).collect();
                    let _ = writeln!(text, "{n},{k},{},{total},{}", a.class, coeffs.join(" "));
                }
                Format::Ascii => {
                    let _ = writeln!(text, "{}_{n}^({k})(t) = {poly}  [{total}]", a.class);
                }
            }
        }
    }
    Ok(Outcome::ok(text))
}

fn list(a: &EnumerateArgs, g: &Global) -> Result<Outcome, CliError> {
    if a.n.lo != a.n.hi || a.k.lo != a.k.hi {
        return Err(CliError::Usage("--list takes a single n and k".into()));
    }
    let (n, k) = (a.n.lo, a.k.lo);
    if k < 2 {
        return Err(CliError::Usage("k must be at least 2".into()));
    }
    let mut text = String::new();
    if g.format == Format::Csv {
        text.push_str("rgs,blocks\n");
    }
    for p in iterate_partitions(n, Convention::ZeroBased) {
        if !Profile::of(&p).in_class(k, a.class) {
            continue;
        }
        match g.format {
            Format::Json => text.push_str(&json_line(&p)),
            Format::Csv => {
                let rgs: String = p.rgs().iter().map(|d| d.to_string()).collect();
                let _ = writeln!(text, "{rgs},{}", p.block_count());
            }
            Format::Ascii => {
                let _ = writeln!(text, "{p}\n{}", arc_diagram(&p));
            }
        }
    }
    Ok(Outcome::ok(text))
}

fn motzkin(m: &Motzkin, g: &Global) -> Result<Outcome, CliError> {
    match m {
        Motzkin::ToPath => {
            let p: SetPartition = read_json(g.input.as_deref(), "partition")?;
            let path = matching_to_motzkin(&p)?;
            single(g, &path, || format!("{path}\n"))
        }
        Motzkin::ToMatching => {
            let text = read_text(g.input.as_deref())?;
            let text = text.trim();
            let path: MotzkinPath = if text.starts_with('"') {
                serde_json::from_str(text)
                    .map_err(|e| CliError::Usage(format!("malformed path JSON: {e}")))?
            } else {
                text.parse()?
            };
            let p = motzkin_to_matching(&path);
            single(g, &p, || arc_diagram(&p))
        }
    }
}

fn render(a: &RenderArgs, g: &Global) -> Result<Outcome, CliError> {
    let text = match a.what {
        What::Arcs => arc_diagram(&read_json::<SetPartition>(g.input.as_deref(), "partition")?),
        What::Filling => filling_grid(&read_json::<TriangularFilling>(
            g.input.as_deref(),
            "filling",
        )?),
    };
    Ok(Outcome::ok(text))
}

fn selftest(a: &SelftestArgs, g: &Global) -> Result<Outcome, CliError> {
    ceiling(g, a.nmax + 1)?;
    let report = run_selftest(a.nmax, a.kmax, g.jobs)?;
    let mut text = String::new();
    match g.format {
        Format::Json => text = json_line(&report),
        Format::Csv => {
            text.push_str("section,cases,failures,first_failure\n");
            for s in &report.sections {
                let first = s.first_failure.as_deref().unwrap_or("").replace(',', ";");
                let _ = writeln!(text, "{},{},{},{first}", s.name, s.cases, s.failures);
            }
        }
        Format::Ascii => {
            for s in &report.sections {
                let _ = writeln!(
                    text,
                    "{:<26} {:>8} checks {:>4} failures",
                    s.name, s.cases, s.failures
                );
                if let Some(f) = &s.first_failure {
                    let _ = writeln!(text, "  first failure: {f}");
                }
            }
            let verdict = if report.passed { "PASS" } else { "FAIL" };
            let _ = writeln!(
                text,
                "selftest nmax={} kmax={}: {verdict}",
                a.nmax, report.kmax
            );
        }
    }
    Ok(Outcome {
        text,
        ok: report.passed,
    })
}

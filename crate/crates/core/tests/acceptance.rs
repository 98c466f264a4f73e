//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use kncross::chain::{brute_force_max_chain, ChainKind, Mode};
use kncross::enumeration::identities::{
    search_nesting_counterexample, verify_donaghey, verify_euler, verify_gamma, verify_stirling,
};
use kncross::enumeration::motzkin::{matching_to_motzkin, motzkin_to_matching};
use kncross::enumeration::numbers::{binomial, catalan, motzkin};
use kncross::enumeration::selftest::{run_selftest, SelftestReport};
use kncross::enumeration::{iterate_partitions, Enumerator};
use kncross::fillings::{inv_f, map_f, TriangularFilling};
use kncross::{
    arcs, phi, phi_inv, psi, psi_inv, Convention, PartitionClass, Polynomial, SetPartition,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn zero(n: usize, blocks: &[&[usize]]) -> SetPartition {
    SetPartition::new(
        n,
        blocks.iter().map(|b| b.to_vec()).collect(),
        Convention::ZeroBased,
    )
    .unwrap()
}

fn one(n: usize, blocks: &[&[usize]]) -> SetPartition {
    SetPartition::new(
        n,
        blocks.iter().map(|b| b.to_vec()).collect(),
        Convention::OneBased,
    )
    .unwrap()
}

fn euler_grid() -> Outcome {
    let started = Instant::now();
    let mut e = Enumerator::new(1);
    let mut cases = 0;
    for n in 1..=9 {
        for k in 2..=6 {
            let r = verify_euler(&mut e, n, k).map_err(|err| err.to_string())?;
            ensure(r.holds(), || {
                format!(
                    "n={n} k={k}: lhs {} rhs {} first mismatch {:?}",
                    r.lhs, r.rhs, r.first_mismatch
                )
            })?;
            cases += 1;
        }
    }
    let spent = started.elapsed();
    ensure(spent < Duration::from_secs(120), || {
        format!("took {spent:?} single-threaded")
    })?;
    let r = verify_euler(&mut e, 3, 2).map_err(|err| err.to_string())?;
    ensure(r.lhs == Polynomial::from_u64s(&[0, 1, 6, 6, 1]), || {
        format!("NC_4^(2) = {}", r.lhs)
    })?;
    Ok(format!(
        "{cases} (n,k) pairs equal, {spent:.1?} single-threaded"
    ))
}

fn worked_examples() -> Outcome {
    let p = zero(
        17,
        &[
            &[0, 4, 8, 15],
            &[1, 3, 10],
            &[2, 11],
            &[5, 16],
            &[6, 13],
            &[7, 9, 12, 14],
        ],
    );
    let (q, trace) = phi(&p, 3).map_err(|e| e.to_string())?;
    let expected = zero(
        17,
        &[
            &[0, 4, 8, 13],
            &[1, 3, 11],
            &[2, 15],
            &[5, 16],
            &[6, 10],
            &[7, 9, 12, 14],
        ],
    );
    ensure(q == expected, || format!("phi gave {q}"))?;
    ensure(trace.len() == 3, || {
        format!("phi trace has {} steps", trace.len())
    })?;

    let p = zero(
        17,
        &[
            &[0, 3, 5, 10, 13],
            &[1, 6, 8, 12],
            &[2, 9, 15],
            &[4, 11, 16],
            &[7, 14],
        ],
    );
    let (q, _) = phi_inv(&p, 4).map_err(|e| e.to_string())?;
    let expected = zero(
        17,
        &[
            &[0, 3, 9, 11, 15],
            &[1, 5, 10, 16],
            &[2, 6, 8, 13],
            &[4, 12],
            &[7, 14],
        ],
    );
    ensure(q == expected, || format!("phi_inv gave {q}"))?;

    let p = zero(11, &[&[0, 8, 10], &[1, 2, 7], &[3, 5, 6], &[4], &[9]]);
    let pair = psi(&p).map_err(|e| e.to_string())?;
    ensure(pair.a() == [1, 3, 4, 6, 7, 9], || {
        format!("psi A = {:?}", pair.a())
    })?;
    ensure(
        pair.mu() == [vec![1, 7], vec![3, 6], vec![4], vec![9]],
        || format!("psi mu = {:?}", pair.mu()),
    )?;
    ensure(psi_inv(&pair) == p, || "psi_inv(psi(P)) != P".into())?;

    let f = TriangularFilling::new(10, [(5, 2), (6, 5), (7, 7), (9, 9)]).unwrap();
    let (c, g) = map_f(&f).map_err(|e| e.to_string())?;
    ensure(c.parts() == [2, 3, 1, 1, 2, 2], || {
        format!("composition {:?}", c.parts())
    })?;
    let expected = TriangularFilling::new(5, [(2, 1), (3, 2), (4, 4), (5, 5)]).unwrap();
    ensure(g == expected, || {
        format!("compressed filling {:?}", g.ones())
    })?;
    ensure(inv_f(&c, &g).as_ref() == Ok(&f), || {
        "inv_f(map_f(F)) != F".into()
    })?;

    let m = one(
        12,
        &[&[1, 9], &[2, 3], &[4, 8], &[5, 6], &[7], &[10, 12], &[11]],
    );
    let path = matching_to_motzkin(&m).map_err(|e| e.to_string())?;
    ensure(path.to_string() == "UUDUUDHDDUHD", || {
        format!("path {path}")
    })?;
    ensure(motzkin_to_matching(&path) == m, || {
        "path does not invert".into()
    })?;
    Ok("phi, phi_inv, psi/psi_inv, map_f, Motzkin path".into())
}

fn section(report: &SelftestReport, name: &str) -> Outcome {
    let s = report
        .sections
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| format!("no section {name}"))?;
    ensure(s.cases > 0 && s.passed(), || {
        format!(
            "{name}: {} of {} failed, first: {}",
            s.failures,
            s.cases,
            s.first_failure.as_deref().unwrap_or("-")
        )
    })?;
    Ok(format!("{name}: {} checks", s.cases))
}

fn numbers() -> Outcome {
    let mut e = Enumerator::new(1);
    for n in 0..=10 {
        let nc = e
            .class_poly(n, 2, PartitionClass::Nc)
            .map_err(|e| e.to_string())?
            .eval_one();
        let nw = e
            .class_poly(n, 2, PartitionClass::Nw)
            .map_err(|e| e.to_string())?
            .eval_one();
        ensure(nc == catalan(n), || format!("|NC_{n}^(2)| = {nc}"))?;
        ensure(nw == motzkin(n), || format!("|NW_{n}^(2)| = {nw}"))?;
    }
    let c5 = e
        .class_poly(5, 2, PartitionClass::Nc)
        .map_err(|e| e.to_string())?;
    ensure(c5 == Polynomial::from_u64s(&[0, 1, 10, 20, 10, 1]), || {
        format!("C_5(t) = {c5}")
    })?;
    for n in 0..=10 {
        let r = verify_gamma(&mut e, n).map_err(|e| e.to_string())?;
        ensure(r.holds(), || {
            format!("gamma n={n}: {} vs {} {:?}", r.lhs, r.rhs, r.checks)
        })?;
    }
    for n in 0..=14 {
        let r = verify_donaghey(&mut e, n, 10).map_err(|e| e.to_string())?;
        ensure(r.holds(), || format!("donaghey n={n}: {:?}", r.checks))?;
        ensure(n > 9 || r.checks.len() == 3, || {
            format!("donaghey n={n} not enumerated")
        })?;
    }
    for n in 1..=8 {
        let r = verify_stirling(&mut e, n).map_err(|e| e.to_string())?;
        ensure(r.holds(), || {
            format!("stirling n={n}: {} vs {}", r.lhs, r.rhs)
        })?;
    }
    Ok("Catalan/Motzkin n<=10, C_5(t), gamma n<=10, Donaghey n<=14, Stirling n<=8".into())
}

/// Enhanced 2-nonnesting partitions counted by blocks straight from the
/// definition, with no shared census.
fn brute_nonnest_enh(n: usize, k: usize) -> Vec<u64> {
    let mut out = vec![0u64; n + 1];
    for p in iterate_partitions(n, Convention::OneBased) {
        let a = arcs(&p);
        if brute_force_max_chain(a.arcs(), Mode::Nesting, ChainKind::Enhanced).0 < k {
            out[p.block_count()] += 1;
        }
    }
    out
}

fn negative_control() -> Outcome {
    let mut e = Enumerator::new(1);
    let search = search_nesting_counterexample(&mut e, 4).map_err(|e| e.to_string())?;
    let w = search.witness.as_ref().ok_or("no witness found")?;
    ensure((w.n, w.k) == (3, 2), || {
        format!("witness at n={} k={}", w.n, w.k)
    })?;
    ensure(!w.equal && w.agree_at_one, || {
        "witness does not agree at t = 1".into()
    })?;
    ensure(search.all_agree_at_one(), || {
        "some scanned pair differs at t = 1".into()
    })?;
    ensure(w.lhs == Polynomial::from_u64s(&[0, 1, 6, 6, 1]), || {
        format!("lhs {}", w.lhs)
    })?;
    ensure(w.rhs == Polynomial::from_u64s(&[0, 1, 7, 5, 1]), || {
        format!("rhs {}", w.rhs)
    })?;
    let mut rhs = vec![0u64; 5];
    for i in 0..=3 {
        let c = u64::try_from(binomial(3, i)).unwrap();
        for (b, x) in brute_nonnest_enh(i, 2).into_iter().enumerate() {
            rhs[b + 1] += c * x;
        }
    }
    ensure(Polynomial::from_u64s(&rhs) == w.rhs, || {
        format!("brute force rhs {rhs:?}")
    })?;
    Ok(format!("witness n=3 k=2: {} vs {}", w.lhs, w.rhs))
}

fn determinism(first: &SelftestReport) -> Outcome {
    let a = serde_json::to_string(first).unwrap();
    let again = run_selftest(8, 4, 1).map_err(|e| e.to_string())?;
    let b = serde_json::to_string(&again).unwrap();
    ensure(a == b, || "two unsharded runs differ".into())?;
    let sharded = run_selftest(8, 4, 4).map_err(|e| e.to_string())?;
    let c = serde_json::to_string(&sharded).unwrap();
    ensure(a == c, || "jobs 4 differs from jobs 1".into())?;
    let mut e1 = Enumerator::new(1);
    let mut e4 = Enumerator::new(4);
    for n in 1..=8 {
        let x = serde_json::to_string(&verify_euler(&mut e1, n, 3).unwrap()).unwrap();
        let y = serde_json::to_string(&verify_euler(&mut e4, n, 3).unwrap()).unwrap();
        ensure(x == y, || {
            format!("euler n={n} report differs across job counts")
        })?;
    }
    Ok(format!("{} bytes identical across 3 runs", a.len()))
}

fn main() -> ExitCode {
    let report = run_selftest(8, 4, 1);
    let from_report = |names: &[&str]| -> Outcome {
        let report = report.as_ref().map_err(|e| e.to_string())?;
        let parts: Result<Vec<_>, _> = names.iter().map(|n| section(report, n)).collect();
        Ok(parts?.join(", "))
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("euler transform, n<=9, k<=6", euler_grid()),
        ("worked examples", worked_examples()),
        (
            "phi bijection, n+1<=9, k<=4",
            from_report(&["phi_bijection"]),
        ),
        ("k=2 coherence, n<=8", from_report(&["k2_coherence"])),
        (
            "filling suite",
            from_report(&["fillings_encodings", "fillings_f"]),
        ),
        ("numbers", numbers()),
        ("nesting negative control", negative_control()),
        (
            "determinism",
            report
                .as_ref()
                .map_err(|e| e.to_string())
                .and_then(determinism),
        ),
    ];
    let mut failed = 0;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

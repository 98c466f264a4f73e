//! Exhaustive property suite over all small partitions and fillings.
//!
//! Every section counts the objects it examined and the ones that failed,
//! keeping the first failure in enumeration order. The report contains no
//! timing, so two runs with any number of jobs serialize identically.

use num_bigint::BigUint;
use serde::Serialize;

use super::identities::{
    search_nesting_counterexample, verify_donaghey, verify_euler, verify_gamma, verify_stirling,
};
use super::motzkin::{matching_to_motzkin, motzkin_to_matching};
use super::numbers::{binomial, catalan, motzkin};
use super::{
    iterate_partitions, iterate_with_prefix, map_shards, Enumerator, PartitionClass, Polynomial,
};
use crate::arcs::arcs;
use crate::bijections::{decompose, phi, phi_inv, psi, psi_inv, MatchingPair};
use crate::chain::{brute_force_max_chain, max_chain, max_chain_size, ChainKind, Mode};
use crate::colored::class_flags;
use crate::error::Result;
use crate::fillings::{
    filling_class, inv_c, inv_e, inv_f, map_c, map_e, map_f, max_proper_se_chain, simple_fillings,
    Composition, TriangularFilling,
};
use crate::partition::Convention;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Section {
    pub name: String,
    pub cases: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Section {
    fn new(name: &str) -> Self {
        Section {
            name: name.into(),
            ..Section::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn absorb(&mut self, other: Section) {
        self.cases += other.cases;
        self.failures += other.failures;
        if self.first_failure.is_none() {
            self.first_failure = other.first_failure;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub nmax: usize,
    pub kmax: usize,
    pub passed: bool,
    pub sections: Vec<Section>,
}

/// Runs every section. Partitions of up to `nmax + 1` points and `k` up to
/// `kmax` are covered; the filling round trips stop at order 7.
pub fn run_selftest(nmax: usize, kmax: usize, jobs: usize) -> Result<SelftestReport> {
    let mut e = Enumerator::new(jobs);
    let kmax = kmax.max(2);
    let sections = vec![
        chain_oracle(nmax.min(7)),
        euler(&mut e, nmax, kmax)?,
        bijection(&mut e, nmax + 1, kmax, jobs),
        k2_coherence(nmax + 1, jobs),
        fillings_equivalence(nmax, kmax),
        fillings_f(nmax.min(7), kmax.min(3)),
        numbers(&mut e, nmax)?,
        motzkin_paths(nmax + 1),
        nesting_gap(&mut e, nmax.clamp(2, 4))?,
    ];
    Ok(SelftestReport {
        nmax,
        kmax,
        passed: sections.iter().all(Section::passed),
        sections,
    })
}

/// The chain DP against subset enumeration.
pub fn chain_oracle(nmax: usize) -> Section {
    let mut s = Section::new("chain_dp_vs_brute_force");
    for n in 0..=nmax {
        for p in iterate_partitions(n, Convention::OneBased) {
            let a = arcs(&p);
            for mode in [Mode::Crossing, Mode::Nesting] {
                for kind in [ChainKind::Strict, ChainKind::Enhanced] {
                    let (size, w) = max_chain(a.arcs(), mode, kind);
                    let brute = brute_force_max_chain(a.arcs(), mode, kind).0;
                    let witness_ok = w
                        .as_ref()
                        .map_or(size == 0, |w| w.is_valid() && w.size() == size);
                    s.check(size == brute && witness_ok, || {
                        format!("{p} {mode:?}/{kind:?}: dp {size}, brute {brute}")
                    });
                }
            }
        }
    }
    s
}

pub fn euler(e: &mut Enumerator, nmax: usize, kmax: usize) -> Result<Section> {
    let mut s = Section::new("euler_transform");
    for n in 1..=nmax {
        for k in 2..=kmax {
            let r = verify_euler(e, n, k)?;
            s.check(r.holds(), || format!("n={n} k={k}: {} vs {}", r.lhs, r.rhs));
        }
    }
    Ok(s)
}

fn bijection_shard(ground: usize, k: usize, prefix: &[u8]) -> (Section, Vec<u64>, u64, u64) {
    let mut s = Section::new("");
    let mut image_poly = vec![0u64; ground + 1];
    let (mut bnw, mut nc) = (0u64, 0u64);
    for p in iterate_with_prefix(ground, Convention::ZeroBased, prefix).expect("valid prefix") {
        let flags = class_flags(&p, k).expect("k >= 2");
        if flags.in_bnw == Some(true) {
            bnw += 1;
            match phi(&p, k) {
                Ok((q, _)) => {
                    image_poly[q.block_count()] += 1;
                    let q_flags = class_flags(&q, k).expect("k >= 2");
                    s.check(q_flags.in_nc, || {
                        format!("k={k} phi({p}) = {q} has a {k}-crossing")
                    });
                    s.check(q.block_count() == p.block_count(), || {
                        format!("k={k} phi({p}) = {q} changed the block count")
                    });
                    let back = phi_inv(&q, k).map(|r| r.0);
                    s.check(back.as_ref() == Ok(&p), || {
                        format!("k={k} phi_inv(phi({p})) = {back:?}")
                    });
                    let a = arcs(&p);
                    if max_chain_size(a.arcs(), Mode::Crossing, ChainKind::Strict) >= k - 1 {
                        let qa = arcs(&q);
                        s.check(
                            max_chain_size(qa.arcs(), Mode::Crossing, ChainKind::Strict) >= k - 1,
                            || {
                                format!(
                                    "k={k} {p} has a {}-crossing but phi({p}) = {q} has none",
                                    k - 1
                                )
                            },
                        );
                    }
                }
                Err(err) => s.check(false, || format!("k={k} phi({p}): {err}")),
            }
        }
        if flags.in_nc {
            nc += 1;
            match phi_inv(&p, k) {
                Ok((q, _)) => {
                    let back = phi(&q, k).map(|r| r.0);
                    s.check(back.as_ref() == Ok(&p), || {
                        format!("k={k} phi(phi_inv({p})) = {back:?}")
                    });
                }
                Err(err) => s.check(false, || format!("k={k} phi_inv({p}): {err}")),
            }
        }
    }
    (s, image_poly, bnw, nc)
}

/// `Φ` is a block-preserving bijection with both round trips the identity,
/// and counting its images by blocks reproduces the direct enumeration.
pub fn bijection(e: &mut Enumerator, gmax: usize, kmax: usize, jobs: usize) -> Section {
    let mut s = Section::new("phi_bijection");
    for ground in 1..=gmax {
        for k in 2..=kmax {
            let shards = map_shards(ground, jobs, |pre| bijection_shard(ground, k, pre));
            let mut image_poly = vec![0u64; ground + 1];
            let (mut bnw, mut nc) = (0, 0);
            for (sec, poly, b, c) in shards {
                s.absorb(sec);
                for (acc, x) in image_poly.iter_mut().zip(poly) {
                    *acc += x;
                }
                bnw += b;
                nc += c;
            }
            s.check(bnw == nc, || {
                format!("ground {ground} k={k}: |BNW| = {bnw}, |NC| = {nc}")
            });
            let direct = e.class_poly(ground, k, PartitionClass::Nc).expect("k >= 2");
            let via_phi = Polynomial::from_u64s(&image_poly);
            s.check(via_phi == direct, || {
                format!("ground {ground} k={k}: images {via_phi} vs NC {direct}")
            });
        }
    }
    s
}

/// For `k = 2`, `Φ` agrees with `Ψ⁻¹` applied to the decomposed partition,
/// and `Ψ⁻¹∘Ψ` is the identity on noncrossing partitions.
pub fn k2_coherence(gmax: usize, jobs: usize) -> Section {
    let mut s = Section::new("k2_coherence");
    for ground in 1..=gmax {
        let shards = map_shards(ground, jobs, |pre| {
            let mut s = Section::new("");
            for p in iterate_with_prefix(ground, Convention::ZeroBased, pre).expect("valid prefix")
            {
                let flags = class_flags(&p, 2).expect("k = 2");
                if flags.in_bnw == Some(true) {
                    let via_psi = decompose(&p)
                        .and_then(|(a, q)| MatchingPair::from_relabeled(ground - 1, &a, &q))
                        .map(|pair| psi_inv(&pair));
                    let via_phi = phi(&p, 2).map(|r| r.0);
                    s.check(via_phi.is_ok() && via_phi == via_psi, || {
                        format!("{p}: phi {via_phi:?} vs psi_inv {via_psi:?}")
                    });
                }
                if flags.in_nc {
                    let back = psi(&p).map(|pair| psi_inv(&pair));
                    s.check(back.as_ref() == Ok(&p), || {
                        format!("psi_inv(psi({p})) = {back:?}")
                    });
                }
            }
            s
        });
        for sec in shards {
            s.absorb(sec);
        }
    }
    s
}

/// The two filling encodings turn (enhanced) crossings into proper SE-chains
/// and are onto the row/column-simple fillings.
pub fn fillings_equivalence(nmax: usize, kmax: usize) -> Section {
    let mut s = Section::new("fillings_encodings");
    for n in 1..=nmax {
        for p in iterate_partitions(n + 1, Convention::OneBased) {
            let f = map_c(&p).expect("nonempty");
            let cross = max_chain_size(arcs(&p).arcs(), Mode::Crossing, ChainKind::Strict);
            let chain = max_proper_se_chain(&f);
            s.check(cross == chain, || {
                format!("C({p}): crossing {cross}, chain {chain}")
            });
            s.check(f.one_count() + p.block_count() == n + 1, || {
                format!("C({p}) one count")
            });
            let back = inv_c(&f);
            s.check(back.as_ref() == Ok(&p), || {
                format!("inv_c(C({p})) = {back:?}")
            });
        }
        for p in iterate_partitions(n, Convention::OneBased) {
            let f = map_e(&p);
            let cross = max_chain_size(arcs(&p).arcs(), Mode::Crossing, ChainKind::Enhanced);
            let chain = max_proper_se_chain(&f);
            // a lone loop is a one-cell chain but not a crossing
            s.check(cross.max(1) == chain, || {
                format!("E({p}): enhanced crossing {cross}, chain {chain}")
            });
            let back = inv_e(&f);
            s.check(back.as_ref() == Ok(&p), || {
                format!("inv_e(E({p})) = {back:?}")
            });
        }
    }
    // surjectivity: every simple filling inverts and re-encodes to itself
    for n in 1..=nmax.min(7) {
        for f in simple_fillings(n) {
            let p = inv_c(&f);
            let again = p.as_ref().ok().map(map_c);
            s.check(matches!(&again, Some(Ok(g)) if *g == f), || {
                format!("C(inv_c({f:?})) = {again:?}")
            });
            if let Ok(p) = &p {
                for k in 2..=kmax {
                    let in_c = filling_class(&f, k).expect("k >= 2").in_c_class;
                    let in_nc = class_flags(p, k).expect("k >= 2").in_nc;
                    s.check(in_c == in_nc, || format!("k={k} {f:?}: class mismatch"));
                }
            }
            if f.nonzero_hooks().len() == n {
                let p = inv_e(&f);
                s.check(matches!(&p, Ok(p) if map_e(p) == f), || {
                    format!("E(inv_e({f:?})) = {p:?}")
                });
            }
        }
    }
    s
}

/// All compositions of `total` into exactly `parts` positive parts.
pub fn compositions(total: usize, parts: usize) -> Vec<Composition> {
    fn go(left: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if parts == 0 {
            if left == 0 {
                out.push(Composition::new(cur.clone()).expect("positive parts"));
            }
            return;
        }
        for x in 1..=left.saturating_sub(parts - 1) {
            cur.push(x);
            go(left - x, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// `f` and its inverse are mutually inverse, keep the ones and the longest
/// proper chain, and give `|C_n^(k)| = Σ C(n,i) |E_i^(k)|`.
pub fn fillings_f(nmax: usize, kmax: usize) -> Section {
    let mut s = Section::new("fillings_f");
    let simple: Vec<Vec<TriangularFilling>> = (0..=nmax).map(simple_fillings).collect();
    for n in 0..=nmax {
        for f in &simple[n] {
            match map_f(f) {
                Ok((c, g)) => {
                    s.check(
                        c.target() == n + 1 && c.parts().len() == g.order() + 1,
                        || format!("map_f({f:?}) shape"),
                    );
                    s.check(g.one_count() == f.one_count(), || {
                        format!("map_f({f:?}) ones")
                    });
                    s.check(max_proper_se_chain(&g) == max_proper_se_chain(f), || {
                        format!("map_f({f:?}) chain length")
                    });
                    let back = inv_f(&c, &g);
                    s.check(back.as_ref() == Ok(f), || {
                        format!("inv_f(map_f({f:?})) = {back:?}")
                    });
                }
                Err(err) => s.check(false, || format!("map_f({f:?}): {err}")),
            }
        }
        for (i, fills) in simple.iter().enumerate().take(n + 1) {
            for g in fills.iter().filter(|g| g.nonzero_hooks().len() == i) {
                for c in compositions(n + 1, i + 1) {
                    let f = inv_f(&c, g);
                    let again = f.as_ref().ok().map(map_f);
                    s.check(
                        matches!(&again, Some(Ok((c2, g2))) if *c2 == c && g2 == g),
                        || format!("map_f(inv_f({c:?}, {g:?})) = {again:?}"),
                    );
                }
            }
        }
        for k in 2..=kmax {
            let lhs = simple[n]
                .iter()
                .filter(|f| filling_class(f, k).expect("k >= 2").in_c_class)
                .count();
            let rhs: BigUint = (0..=n)
                .map(|i| {
                    let e_i = simple[i]
                        .iter()
                        .filter(|g| filling_class(g, k).expect("k >= 2").in_e_class)
                        .count();
                    binomial(n, i) * e_i
                })
                .sum();
            s.check(BigUint::from(lhs) == rhs, || {
                format!("n={n} k={k}: |C| = {lhs}, transform of |E| = {rhs}")
            });
        }
    }
    s
}

pub fn numbers(e: &mut Enumerator, nmax: usize) -> Result<Section> {
    let mut s = Section::new("numbers");
    for n in 0..=nmax + 1 {
        let nc = e.class_poly(n, 2, PartitionClass::Nc)?.eval_one();
        let nw = e.class_poly(n, 2, PartitionClass::Nw)?.eval_one();
        s.check(nc == catalan(n), || format!("|NC_{n}^(2)| = {nc}"));
        s.check(nw == motzkin(n), || format!("|NW_{n}^(2)| = {nw}"));
    }
    if nmax >= 4 {
        let c5 = e.class_poly(5, 2, PartitionClass::Nc)?;
        s.check(c5 == Polynomial::from_u64s(&[0, 1, 10, 20, 10, 1]), || {
            format!("C_5(t) = {c5}")
        });
    }
    for n in 0..=nmax {
        let r = verify_gamma(e, n)?;
        s.check(r.holds(), || format!("gamma n={n}: {} vs {}", r.lhs, r.rhs));
    }
    for n in 0..=14 {
        let r = verify_donaghey(e, n, nmax + 1)?;
        s.check(r.holds(), || format!("donaghey n={n}"));
    }
    for n in 1..=nmax {
        let r = verify_stirling(e, n)?;
        s.check(r.holds(), || {
            format!("stirling n={n}: {} vs {}", r.lhs, r.rhs)
        });
    }
    Ok(s)
}

/// Noncrossing partial matchings and Motzkin paths correspond.
pub fn motzkin_paths(nmax: usize) -> Section {
    let mut s = Section::new("motzkin_paths");
    for n in 0..=nmax {
        let mut count = 0u64;
        for p in iterate_partitions(n, Convention::OneBased) {
            if !class_flags(&p, 2).expect("k = 2").in_nw {
                continue;
            }
            count += 1;
            match matching_to_motzkin(&p) {
                Ok(path) => {
                    let back = motzkin_to_matching(&path);
                    s.check(back == p, || format!("{p} -> {path} -> {back}"));
                    let non_loops = p.blocks().iter().filter(|b| b.len() == 2).count();
                    let loops = p.block_count() - non_loops;
                    s.check(
                        path.count(super::motzkin::MotzkinStep::U) == non_loops
                            && path.count(super::motzkin::MotzkinStep::H) == loops,
                        || format!("{p} -> {path}: step counts"),
                    );
                }
                Err(err) => s.check(false, || format!("{p}: {err}")),
            }
        }
        s.check(BigUint::from(count) == motzkin(n), || {
            format!("n={n}: {count} matchings")
        });
    }
    s
}

pub fn nesting_gap(e: &mut Enumerator, n_max: usize) -> Result<Section> {
    let mut s = Section::new("nesting_gap");
    let search = search_nesting_counterexample(e, n_max)?;
    s.check(search.witness.is_some(), || {
        format!("no witness up to n = {n_max}")
    });
    if let Some(w) = &search.witness {
        s.check((w.n, w.k) == (3, 2), || {
            format!("witness at n={} k={}", w.n, w.k)
        });
    }
    s.check(search.all_agree_at_one(), || "sides differ at t = 1".into());
    Ok(s)
}

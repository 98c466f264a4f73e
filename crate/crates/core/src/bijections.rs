//! The bijection `Φ` from partitions without black enhanced k-crossings to
//! k-noncrossing partitions, its inverse, and the `k = 2` map `Ψ`.
//!
//! Everything here works on the zero-based ground set `{0,…,n}` where the
//! block of 0 is red. `Φ` first turns black (k-1)-crossings covering red
//! nodes into black weak k-crossings ("enhanced left shift") and then
//! removes the red k-crossings this creates ("cyclic rotation"). `Φ⁻¹`
//! undoes the rotations first and the shifts second.

use serde::{Deserialize, Serialize};

use crate::arcs::{Arc, ArcSet};
use crate::chain::{max_chain_size, ChainKind, Mode};
use crate::colored::{class_flags, red_nodes_under_black_crossing, ColoredDiagram};
use crate::error::{Error, Result};
use crate::partition::{Convention, SetPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StepKind {
    EnhancedLeftShift,
    CyclicRotation,
    UndoRotation,
    UndoShift,
}

/// One rewiring of a colored diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub kind: StepKind,
    /// the node `a` the step is organized around; for a rotation, the left
    /// end of the rotated red arc
    pub node: usize,
    /// the selected crossing, by increasing left endpoint
    pub crossing: Vec<Arc>,
    pub removed: Vec<Arc>,
    pub added: Vec<Arc>,
    pub before: ColoredDiagram,
    pub after: ColoredDiagram,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StepTrace {
    pub steps: Vec<Step>,
}

impl StepTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, kind: StepKind) -> usize {
        self.steps.iter().filter(|s| s.kind == kind).count()
    }

    /// One JSON object per line, numbered from 1.
    pub fn json_lines(&self) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            let mut v = serde_json::to_value(step).expect("step serializes");
            v.as_object_mut()
                .expect("step is an object")
                .insert("step".into(), (i + 1).into());
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

fn require_zero_based(p: &SetPartition, what: &'static str) -> Result<()> {
    match p.convention() {
        Convention::ZeroBased => Ok(()),
        Convention::OneBased => Err(Error::Convention(what)),
    }
}

fn require_k(k: usize, context: &'static str) -> Result<()> {
    if k < 2 {
        return Err(Error::BadOrder { context, k, min: 2 });
    }
    Ok(())
}

fn crosses(x: &Arc, y: &Arc) -> bool {
    (x.left < y.left && y.left < x.right && x.right < y.right)
        || (y.left < x.left && x.left < y.right && y.right < x.right)
}

/// Length of the longest chain with increasing lefts and rights starting at
/// each arc; `arcs` sorted by right endpoint.
fn chain_lengths_from(arcs: &[Arc]) -> Vec<usize> {
    let mut len = vec![1usize; arcs.len()];
    for x in (0..arcs.len()).rev() {
        for y in x + 1..arcs.len() {
            if arcs[y].left > arcs[x].left && arcs[y].right > arcs[x].right {
                len[x] = len[x].max(len[y] + 1);
            }
        }
    }
    len
}

/// Among `pool` (arcs pairwise crossing as soon as lefts and rights
/// increase), the chain of exactly `size` arcs whose right-endpoint word is
/// lexicographically least (`greatest = false`) or greatest.
fn extreme_chain(pool: &[Arc], size: usize, greatest: bool) -> Option<Vec<Arc>> {
    let mut arcs = pool.to_vec();
    arcs.sort_unstable_by_key(|a| a.right);
    let len = chain_lengths_from(&arcs);
    let mut out: Vec<Arc> = Vec::with_capacity(size);
    for need in (1..=size).rev() {
        let ok = |&x: &usize| {
            len[x] >= need
                && out
                    .last()
                    .is_none_or(|p| arcs[x].left > p.left && arcs[x].right > p.right)
        };
        let pick = if greatest {
            (0..arcs.len()).rev().find(ok)
        } else {
            (0..arcs.len()).find(ok)
        }?;
        out.push(arcs[pick]);
    }
    Some(out)
}

/// The innermost black strict `size`-crossing covering `a`.
fn innermost_black_crossing(d: &ColoredDiagram, a: usize, size: usize) -> Option<Vec<Arc>> {
    let covering: Vec<Arc> = d
        .black_arcs()
        .into_iter()
        .filter(|x| !x.is_loop() && x.covers(a))
        .collect();
    extreme_chain(&covering, size, false)
}

/// The strict k-crossing through `e` with the greatest right-endpoint word.
fn greatest_crossing_through(arcs: &[Arc], k: usize, e: Arc) -> Option<Vec<Arc>> {
    fn dfs(cand: &[Arc], k: usize, e: Arc, chosen: &mut Vec<Arc>) -> bool {
        if chosen.len() == k {
            return chosen.contains(&e);
        }
        let has_e = chosen.contains(&e);
        for &x in cand {
            if let Some(last) = chosen.last() {
                if x.left <= last.left || x.right <= last.right || x.left >= chosen[0].right {
                    continue;
                }
            }
            if !has_e && x.right > e.right {
                continue;
            }
            chosen.push(x);
            if dfs(cand, k, e, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut cand: Vec<Arc> = arcs
        .iter()
        .filter(|x| **x == e || crosses(x, &e))
        .copied()
        .collect();
    if cand.len() < k {
        return None;
    }
    cand.sort_unstable_by_key(|x| std::cmp::Reverse(x.right));
    let mut chosen = Vec::with_capacity(k);
    dfs(&cand, k, e, &mut chosen).then_some(chosen)
}

fn red_neighbors(d: &ColoredDiagram, a: usize) -> (Option<usize>, Option<usize>) {
    let red = d.red_block();
    let prev = red.iter().copied().filter(|&x| x < a).max();
    let next = red.iter().copied().filter(|&x| x > a).min();
    (prev, next)
}

/// Applies a rewiring and recolors. Loops are dropped before and restored
/// afterwards on whatever nodes end up isolated.
fn rewire(d: &ColoredDiagram, removed: &[Arc], added: &[Arc]) -> Result<ColoredDiagram> {
    let mut arcs: Vec<Arc> = d.arc_set().non_loops().copied().collect();
    for r in removed {
        let pos = arcs
            .iter()
            .position(|x| x == r)
            .ok_or_else(|| Error::Assertion(format!("arc {r} to remove is missing")))?;
        arcs.swap_remove(pos);
    }
    arcs.extend_from_slice(added);
    let set = ArcSet::new(d.n(), Convention::ZeroBased, arcs)
        .map_err(|e| Error::Assertion(format!("rewiring broke the diagram: {e}")))?;
    ColoredDiagram::new(set.with_loops_normalized())
}

fn assert_no_black_crossing(d: &ColoredDiagram, k: usize, after: &str) -> Result<()> {
    let m = d.max_black_strict_crossing();
    if m >= k {
        return Err(Error::Assertion(format!(
            "black {m}-crossing after {after} (k = {k})"
        )));
    }
    Ok(())
}

/// Smallest red node under a black strict (k-1)-crossing, if any.
fn smallest_covered_red(d: &ColoredDiagram, k: usize) -> Result<Option<usize>> {
    Ok(red_nodes_under_black_crossing(d, k - 1)?.first().copied())
}

pub fn enhanced_left_shift_step(d: &ColoredDiagram, k: usize) -> Result<Step> {
    require_k(k, "enhanced_left_shift")?;
    let a = smallest_covered_red(d, k)?.ok_or_else(|| {
        Error::Precondition(format!(
            "enhanced_left_shift: no red node under a black {}-crossing",
            k - 1
        ))
    })?;
    let cr = innermost_black_crossing(d, a, k - 1).expect("node was found under a crossing");
    let mut added = vec![Arc::new(cr[0].left, a)];
    added.extend((1..k - 1).map(|s| Arc::new(cr[s].left, cr[s - 1].right)));
    added.push(Arc::new(a, cr[k - 2].right));
    let mut removed = cr.clone();
    let (prev, next) = red_neighbors(d, a);
    let x = prev.expect("0 is red and lies left of a");
    removed.push(Arc::new(x, a));
    if let Some(y) = next {
        removed.push(Arc::new(a, y));
        added.push(Arc::new(x, y));
    }
    let after = rewire(d, &removed, &added)?;
    if after.is_red(a) {
        return Err(Error::Assertion(format!(
            "enhanced_left_shift: node {a} is still red"
        )));
    }
    assert_no_black_crossing(&after, k, "enhanced left shift")?;
    Ok(Step {
        kind: StepKind::EnhancedLeftShift,
        node: a,
        crossing: cr,
        removed,
        added,
        before: d.clone(),
        after,
    })
}

pub fn enhanced_left_shift(d: &ColoredDiagram, k: usize) -> Result<ColoredDiagram> {
    enhanced_left_shift_step(d, k).map(|s| s.after)
}

/// The red arc with the largest right end that lies in a strict k-crossing.
fn rightmost_red_arc_in_crossing(d: &ColoredDiagram, k: usize) -> Option<(Arc, Vec<Arc>)> {
    let all: Vec<Arc> = d.arc_set().non_loops().copied().collect();
    let mut red = d.red_arcs();
    red.sort_unstable_by_key(|x| std::cmp::Reverse(x.right));
    red.into_iter()
        .filter(|e| !e.is_loop())
        .find_map(|e| greatest_crossing_through(&all, k, e).map(|c| (e, c)))
}

pub fn cyclic_rotation_step(d: &ColoredDiagram, k: usize) -> Result<Step> {
    require_k(k, "cyclic_rotation")?;
    let (e, cr) = rightmost_red_arc_in_crossing(d, k)
        .ok_or_else(|| Error::Precondition(format!("cyclic_rotation: no red {k}-crossing")))?;
    let p = cr
        .iter()
        .position(|x| *x == e)
        .expect("crossing contains the red arc")
        + 1;
    if p == 1 {
        return Err(Error::Assertion(format!(
            "cyclic_rotation: red arc {e} is first in its crossing"
        )));
    }
    let removed = cr[..p].to_vec();
    let mut added: Vec<Arc> = (0..p - 1)
        .map(|s| Arc::new(cr[s].left, cr[s + 1].right))
        .collect();
    added.push(Arc::new(cr[p - 1].left, cr[0].right));
    let after = rewire(d, &removed, &added)?;
    assert_no_black_crossing(&after, k, "cyclic rotation")?;
    Ok(Step {
        kind: StepKind::CyclicRotation,
        node: e.left,
        crossing: cr,
        removed,
        added,
        before: d.clone(),
        after,
    })
}

pub fn cyclic_rotation(d: &ColoredDiagram, k: usize) -> Result<ColoredDiagram> {
    cyclic_rotation_step(d, k).map(|s| s.after)
}

pub fn undo_cyclic_rotation_step(d: &ColoredDiagram, k: usize) -> Result<Step> {
    require_k(k, "undo_cyclic_rotation")?;
    let a = smallest_covered_red(d, k)?.ok_or_else(|| {
        Error::Precondition(format!(
            "undo_cyclic_rotation: no red node under a black {}-crossing",
            k - 1
        ))
    })?;
    let cr = innermost_black_crossing(d, a, k - 1).expect("node was found under a crossing");
    let a_prev = red_neighbors(d, a).0.expect("0 is red and lies left of a");
    let t = (1..k - 1)
        .find(|&t| cr[t - 1].left < a_prev && a_prev < cr[t].left)
        .ok_or_else(|| {
            Error::Precondition(format!(
                "undo_cyclic_rotation: red {a_prev} is not between two left ends of {}",
                arc_list(&cr)
            ))
        })?;
    let mut removed = cr[..t].to_vec();
    removed.push(Arc::new(a_prev, a));
    let mut added = vec![Arc::new(cr[0].left, a)];
    added.extend((1..t).map(|s| Arc::new(cr[s].left, cr[s - 1].right)));
    added.push(Arc::new(a_prev, cr[t - 1].right));
    let after = rewire(d, &removed, &added)?;
    Ok(Step {
        kind: StepKind::UndoRotation,
        node: a,
        crossing: cr,
        removed,
        added,
        before: d.clone(),
        after,
    })
}

pub fn undo_cyclic_rotation(d: &ColoredDiagram, k: usize) -> Result<ColoredDiagram> {
    undo_cyclic_rotation_step(d, k).map(|s| s.after)
}

/// The outermost black weak k-crossing centred at `a`, if there is one.
fn outermost_weak_crossing(d: &ColoredDiagram, a: usize, k: usize) -> Option<Vec<Arc>> {
    if d.is_red(a) {
        return None;
    }
    let black: Vec<Arc> = d
        .black_arcs()
        .into_iter()
        .filter(|x| !x.is_loop())
        .collect();
    let first = *black.iter().find(|x| x.right == a)?;
    let last = *black.iter().find(|x| x.left == a)?;
    let middle: Vec<Arc> = black
        .iter()
        .filter(|x| first.left < x.left && x.covers(a) && x.right < last.right)
        .copied()
        .collect();
    let mid = if k == 2 {
        Vec::new()
    } else {
        extreme_chain(&middle, k - 2, true)?
    };
    let mut out = vec![first];
    out.extend(mid);
    out.push(last);
    Some(out)
}

pub fn undo_enhanced_left_shift_step(d: &ColoredDiagram, k: usize) -> Result<Step> {
    require_k(k, "undo_enhanced_left_shift")?;
    let (a, cr) = (0..d.n())
        .rev()
        .find_map(|a| outermost_weak_crossing(d, a, k).map(|c| (a, c)))
        .ok_or_else(|| {
            Error::Precondition(format!(
                "undo_enhanced_left_shift: no black weak {k}-crossing"
            ))
        })?;
    let mut removed = cr.clone();
    // lefts i_1..i_{k-1} are every left end but a's; rights j_1..j_{k-1}
    // every right end but a's
    let mut added: Vec<Arc> = (0..k - 1)
        .map(|s| Arc::new(cr[s].left, cr[s + 1].right))
        .collect();
    let (prev, next) = red_neighbors(d, a);
    let x = prev.expect("0 is red and lies left of a");
    added.push(Arc::new(x, a));
    if let Some(y) = next {
        removed.push(Arc::new(x, y));
        added.push(Arc::new(a, y));
    }
    let after = rewire(d, &removed, &added)?;
    if !after.is_red(a) {
        return Err(Error::Assertion(format!(
            "undo_enhanced_left_shift: node {a} did not turn red"
        )));
    }
    Ok(Step {
        kind: StepKind::UndoShift,
        node: a,
        crossing: cr,
        removed,
        added,
        before: d.clone(),
        after,
    })
}

pub fn undo_enhanced_left_shift(d: &ColoredDiagram, k: usize) -> Result<ColoredDiagram> {
    undo_enhanced_left_shift_step(d, k).map(|s| s.after)
}

fn arc_list(arcs: &[Arc]) -> String {
    arcs.iter()
        .map(|a| a.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn in_bnw(p: &SetPartition, k: usize) -> Result<bool> {
    Ok(ColoredDiagram::of_partition(p)?.max_black_enhanced_crossing() < k)
}

/// `Φ(P)` for `P` without black enhanced k-crossings, with every step taken.
pub fn phi(p: &SetPartition, k: usize) -> Result<(SetPartition, StepTrace)> {
    require_zero_based(p, "phi")?;
    require_k(k, "phi")?;
    if !in_bnw(p, k)? {
        return Err(Error::Membership(format!(
            "phi: input has a black enhanced {k}-crossing"
        )));
    }
    let mut trace = StepTrace::default();
    if in_bnw(p, k - 1)? {
        return Ok((p.clone(), trace));
    }
    let mut d = ColoredDiagram::of_partition(p)?;

    let cap_a = d.red_block().len().saturating_sub(1);
    while smallest_covered_red(&d, k)?.is_some() {
        if trace.len() >= cap_a {
            return Err(Error::CapExceeded {
                phase: "phi enhanced left shift",
                cap: cap_a,
            });
        }
        let step = enhanced_left_shift_step(&d, k)?;
        d = step.after.clone();
        trace.steps.push(step);
    }

    let cap_b = d.n() * d.n();
    let mut rotations = 0;
    let mut last_right = usize::MAX;
    while let Some((e, _)) = rightmost_red_arc_in_crossing(&d, k) {
        if e.right >= last_right {
            return Err(Error::Assertion(format!(
                "phi: rightmost red arc in a crossing moved right to {e}"
            )));
        }
        last_right = e.right;
        if rotations >= cap_b {
            return Err(Error::CapExceeded {
                phase: "phi cyclic rotation",
                cap: cap_b,
            });
        }
        let step = cyclic_rotation_step(&d, k)?;
        d = step.after.clone();
        trace.steps.push(step);
        rotations += 1;
    }

    let out = d.partition();
    if max_chain_size(d.arc_set().arcs(), Mode::Crossing, ChainKind::Strict) >= k {
        return Err(Error::Assertion(format!("phi: output has a {k}-crossing")));
    }
    if out.block_count() != p.block_count() {
        return Err(Error::Assertion("phi: block count changed".into()));
    }
    Ok((out, trace))
}

/// `Φ⁻¹(P)` for k-noncrossing `P`.
pub fn phi_inv(p: &SetPartition, k: usize) -> Result<(SetPartition, StepTrace)> {
    require_zero_based(p, "phi_inv")?;
    require_k(k, "phi_inv")?;
    if !class_flags(p, k)?.in_nc {
        return Err(Error::Membership(format!(
            "phi_inv: input has a {k}-crossing"
        )));
    }
    let mut trace = StepTrace::default();
    if in_bnw(p, k - 1)? {
        return Ok((p.clone(), trace));
    }
    let mut d = ColoredDiagram::of_partition(p)?;

    let cap_a = d.n() * d.n();
    while smallest_covered_red(&d, k)?.is_some() {
        if trace.len() >= cap_a {
            return Err(Error::CapExceeded {
                phase: "phi_inv undo rotation",
                cap: cap_a,
            });
        }
        let step = undo_cyclic_rotation_step(&d, k)?;
        d = step.after.clone();
        trace.steps.push(step);
    }

    let cap_b = d.n();
    let mut shifts = 0;
    while (0..d.n()).any(|a| outermost_weak_crossing(&d, a, k).is_some()) {
        if shifts >= cap_b {
            return Err(Error::CapExceeded {
                phase: "phi_inv undo shift",
                cap: cap_b,
            });
        }
        let step = undo_enhanced_left_shift_step(&d, k)?;
        d = step.after.clone();
        trace.steps.push(step);
        shifts += 1;
    }

    let out = d.partition();
    if !in_bnw(&out, k)? {
        return Err(Error::Assertion(format!(
            "phi_inv: output has a black enhanced {k}-crossing"
        )));
    }
    Ok((out, trace))
}

/// A subset `A` of `{1,…,n}` together with a noncrossing partial matching
/// on it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair", into = "RawPair")]
pub struct MatchingPair {
    n: usize,
    a: Vec<usize>,
    mu: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawPair {
    n: usize,
    #[serde(rename = "A")]
    a: Vec<usize>,
    mu: Vec<Vec<usize>>,
}

impl TryFrom<RawPair> for MatchingPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        MatchingPair::new(raw.n, raw.a, raw.mu)
    }
}

impl From<MatchingPair> for RawPair {
    fn from(p: MatchingPair) -> Self {
        RawPair {
            n: p.n,
            a: p.a,
            mu: p.mu,
        }
    }
}

impl MatchingPair {
    pub fn new(n: usize, mut a: Vec<usize>, mut mu: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::Argument(format!("matching pair: {msg}")));
        a.sort_unstable();
        if a.windows(2).any(|w| w[0] == w[1]) {
            return bad("A has repeated elements".into());
        }
        if let Some(&x) = a.iter().find(|&&x| x == 0 || x > n) {
            return bad(format!("{x} is outside 1..={n}"));
        }
        for b in mu.iter_mut() {
            b.sort_unstable();
            if b.is_empty() || b.len() > 2 {
                return bad(format!("block {b:?} is not of size 1 or 2"));
            }
        }
        mu.sort_unstable();
        let mut covered: Vec<usize> = mu.iter().flatten().copied().collect();
        covered.sort_unstable();
        if covered != a {
            return bad("A is not the union of the blocks of mu".into());
        }
        for x in &mu {
            for y in &mu {
                if x.len() == 2 && y.len() == 2 && x[0] < y[0] && y[0] < x[1] && x[1] < y[1] {
                    return bad(format!("{x:?} and {y:?} cross"));
                }
            }
        }
        Ok(MatchingPair { n, a, mu })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn mu(&self) -> &[Vec<usize>] {
        &self.mu
    }

    /// Reads `Q` (on `{0,…,|A|-1}`) as a matching on `A` via `i-1 ↦ a_i`.
    pub fn from_relabeled(n: usize, a: &[usize], q: &SetPartition) -> Result<Self> {
        if q.n() != a.len() {
            return Err(Error::Argument(format!(
                "matching pair: |A| = {} but the matching is on {} points",
                a.len(),
                q.n()
            )));
        }
        let first = q.convention().first();
        let mu = q
            .blocks()
            .iter()
            .map(|b| b.iter().map(|&e| a[e - first]).collect())
            .collect();
        MatchingPair::new(n, a.to_vec(), mu)
    }
}

/// `Ψ`: keeps the smallest and largest element of every non-red block.
pub fn psi(p: &SetPartition) -> Result<MatchingPair> {
    require_zero_based(p, "psi")?;
    if p.n() == 0 {
        return Err(Error::Argument("psi: empty ground set".into()));
    }
    if max_chain_size(
        crate::arcs::arcs(p).arcs(),
        Mode::Crossing,
        ChainKind::Strict,
    ) >= 2
    {
        return Err(Error::Membership("psi: input has a 2-crossing".into()));
    }
    let mu: Vec<Vec<usize>> = p
        .blocks()
        .iter()
        .skip(1)
        .map(|b| {
            let (lo, hi) = (b[0], b[b.len() - 1]);
            if lo == hi {
                vec![lo]
            } else {
                vec![lo, hi]
            }
        })
        .collect();
    let a = mu.iter().flatten().copied().collect();
    MatchingPair::new(p.n() - 1, a, mu)
}

/// `Ψ⁻¹`: every block of `mu` spans an interval; uncovered points are red and
/// every other point joins the smallest interval around it.
pub fn psi_inv(pair: &MatchingPair) -> SetPartition {
    let n = pair.n;
    let mut owner: Vec<Option<usize>> = vec![None; n + 1];
    let mut width: Vec<usize> = vec![usize::MAX; n + 1];
    for (idx, b) in pair.mu.iter().enumerate() {
        let (lo, hi) = (b[0], b[b.len() - 1]);
        for i in lo..=hi {
            if hi - lo < width[i] {
                width[i] = hi - lo;
                owner[i] = Some(idx);
            }
        }
    }
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); pair.mu.len() + 1];
    for (i, o) in owner.iter().enumerate() {
        blocks[o.map_or(0, |x| x + 1)].push(i);
    }
    SetPartition::new(n + 1, blocks, Convention::ZeroBased)
        .expect("intervals partition the ground set")
}

/// Splits off the red block: `A` is the set of black nodes and `Q` the black
/// blocks relabeled through `a_i ↦ i-1`.
pub fn decompose(p: &SetPartition) -> Result<(Vec<usize>, SetPartition)> {
    require_zero_based(p, "decompose")?;
    if p.n() == 0 {
        return Ok((Vec::new(), SetPartition::empty(Convention::ZeroBased)));
    }
    let a: Vec<usize> = (0..p.n()).filter(|x| !p.blocks()[0].contains(x)).collect();
    let mut index = vec![0usize; p.n()];
    for (i, &x) in a.iter().enumerate() {
        index[x] = i;
    }
    let blocks = p.blocks()[1..]
        .iter()
        .map(|b| b.iter().map(|&x| index[x]).collect())
        .collect();
    let q = SetPartition::new(a.len(), blocks, Convention::ZeroBased)?;
    Ok((a, q))
}

/// Inverse of [`decompose`] on a ground set of size `n`.
pub fn compose(a: &[usize], q: &SetPartition, n: usize) -> Result<SetPartition> {
    if q.n() != a.len() {
        return Err(Error::Argument(format!(
            "compose: |A| = {} but Q lives on {} points",
            a.len(),
            q.n()
        )));
    }
    if a.windows(2).any(|w| w[0] >= w[1])
        || a.first() == Some(&0)
        || a.last().is_some_and(|&x| x >= n)
    {
        return Err(Error::Argument(format!(
            "compose: A must be strictly increasing inside 1..{n}"
        )));
    }
    if n == 0 {
        return Ok(SetPartition::empty(Convention::ZeroBased));
    }
    let first = q.convention().first();
    let red: Vec<usize> = (0..n).filter(|x| a.binary_search(x).is_err()).collect();
    let mut blocks = vec![red];
    blocks.extend(
        q.blocks()
            .iter()
            .map(|b| b.iter().map(|&e| a[e - first]).collect()),
    );
    SetPartition::new(n, blocks, Convention::ZeroBased)
}

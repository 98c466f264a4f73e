//! k-crossings and k-nestings of arc sets.
//!
//! A strict k-crossing is a set of arcs with `i_1<…<i_k<j_1<…<j_k`; the weak
//! variant replaces `i_k<j_1` by `i_k=j_1`. Nestings mirror this with
//! `i_1<…<i_k<j_k<…<j_1`, the weak variant having `i_k=j_k`, which makes the
//! innermost arc a loop. A chain of size one is a single non-loop arc.

use serde::{Deserialize, Serialize};

use crate::arcs::{Arc, ArcSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Crossing,
    Nesting,
}

/// What `max_chain` searches for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Strict,
    /// strict or weak
    Enhanced,
}

/// What a witness actually is.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Strict,
    Weak,
}

/// A concrete chain, arcs listed by increasing left endpoint.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingWitness {
    pub mode: Mode,
    pub kind: WitnessKind,
    pub arcs: Vec<Arc>,
}

impl CrossingWitness {
    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    /// Checks the defining inequalities.
    pub fn is_valid(&self) -> bool {
        satisfies(&self.arcs, self.mode, self.kind)
    }
}

/// Whether `arcs` (in the listed order) satisfies the defining inequality
/// chain for `mode`/`kind`.
pub fn satisfies(arcs: &[Arc], mode: Mode, kind: WitnessKind) -> bool {
    let k = arcs.len();
    if k == 0 || (kind == WitnessKind::Weak && k < 2) {
        return false;
    }
    let mut seq: Vec<usize> = arcs.iter().map(|a| a.left).collect();
    match mode {
        Mode::Crossing => seq.extend(arcs.iter().map(|a| a.right)),
        Mode::Nesting => seq.extend(arcs.iter().rev().map(|a| a.right)),
    }
    seq.windows(2).enumerate().all(|(pos, w)| {
        if kind == WitnessKind::Weak && pos == k - 1 {
            w[0] == w[1]
        } else {
            w[0] < w[1]
        }
    })
}

/// Size of the largest chain of the given mode/kind in `arcs`, with one
/// witness. Runs in `O(m^3)` for `m` arcs.
pub fn max_chain(arcs: &[Arc], mode: Mode, kind: ChainKind) -> (usize, Option<CrossingWitness>) {
    let mut sorted: Vec<Arc> = arcs.to_vec();
    sorted.sort_unstable();
    let strict = match mode {
        Mode::Crossing => strict_crossing(&sorted),
        Mode::Nesting => longest_chain(sorted.iter().filter(|a| !a.is_loop()), nests_inside),
    };
    let mut best = wrap(strict, mode, WitnessKind::Strict);
    if kind == ChainKind::Enhanced {
        let weak = match mode {
            Mode::Crossing => weak_crossing(&sorted),
            Mode::Nesting => weak_nesting(&sorted),
        };
        if weak.len() > best.0 {
            best = wrap(weak, mode, WitnessKind::Weak);
        }
    }
    best
}

/// Size of the largest chain, without a witness.
pub fn max_chain_size(arcs: &[Arc], mode: Mode, kind: ChainKind) -> usize {
    max_chain(arcs, mode, kind).0
}

impl ArcSet {
    pub fn max_chain(&self, mode: Mode, kind: ChainKind) -> (usize, Option<CrossingWitness>) {
        max_chain(self.arcs(), mode, kind)
    }
}

fn wrap(chain: Vec<Arc>, mode: Mode, kind: WitnessKind) -> (usize, Option<CrossingWitness>) {
    if chain.is_empty() {
        (0, None)
    } else {
        (
            chain.len(),
            Some(CrossingWitness {
                mode,
                kind,
                arcs: chain,
            }),
        )
    }
}

fn crosses_after(prev: &Arc, next: &Arc) -> bool {
    prev.left < next.left && prev.right < next.right
}

fn nests_inside(prev: &Arc, next: &Arc) -> bool {
    prev.left < next.left && next.right < prev.right
}

/// Longest sequence `x_1, x_2, …` of `candidates` (given in increasing left
/// order) with `follows(x_t, x_{t+1})`. Ties go to the earliest chain found.
fn longest_chain<'a>(
    candidates: impl Iterator<Item = &'a Arc>,
    follows: fn(&Arc, &Arc) -> bool,
) -> Vec<Arc> {
    let c: Vec<Arc> = candidates.copied().collect();
    let mut len = vec![1usize; c.len()];
    let mut parent = vec![usize::MAX; c.len()];
    for x in 0..c.len() {
        for y in 0..x {
            if follows(&c[y], &c[x]) && len[y] + 1 > len[x] {
                len[x] = len[y] + 1;
                parent[x] = y;
            }
        }
    }
    let Some(mut end) = (0..c.len()).max_by_key(|&x| (len[x], std::cmp::Reverse(x))) else {
        return Vec::new();
    };
    let mut out = Vec::with_capacity(len[end]);
    loop {
        out.push(c[end]);
        if parent[end] == usize::MAX {
            break;
        }
        end = parent[end];
    }
    out.reverse();
    out
}

fn strict_crossing(sorted: &[Arc]) -> Vec<Arc> {
    let mut best: Vec<Arc> = Vec::new();
    for first in sorted.iter().filter(|a| !a.is_loop()) {
        let rest = longest_chain(
            sorted
                .iter()
                .filter(|x| first.left < x.left && x.left < first.right && first.right < x.right),
            crosses_after,
        );
        if rest.len() + 1 > best.len() {
            best = std::iter::once(*first).chain(rest).collect();
        }
    }
    best
}

fn weak_crossing(sorted: &[Arc]) -> Vec<Arc> {
    let mut best: Vec<Arc> = Vec::new();
    for first in sorted.iter().filter(|a| !a.is_loop()) {
        let center = first.right;
        let Some(last) = sorted.iter().find(|a| a.left == center && a.right > center) else {
            continue;
        };
        let middle = longest_chain(
            sorted.iter().filter(|x| {
                first.left < x.left && x.left < center && center < x.right && x.right < last.right
            }),
            crosses_after,
        );
        if middle.len() + 2 > best.len() {
            best = std::iter::once(*first)
                .chain(middle)
                .chain(std::iter::once(*last))
                .collect();
        }
    }
    best
}

fn weak_nesting(sorted: &[Arc]) -> Vec<Arc> {
    let mut best: Vec<Arc> = Vec::new();
    for lp in sorted.iter().filter(|a| a.is_loop()) {
        let outer = longest_chain(sorted.iter().filter(|x| x.covers(lp.left)), nests_inside);
        if !outer.is_empty() && outer.len() + 1 > best.len() {
            best = outer.into_iter().chain(std::iter::once(*lp)).collect();
        }
    }
    best
}

/// Reference implementation straight from the definition: tries every
/// subset of `arcs`. Exponential; refuses more than 24 arcs.
pub fn brute_force_max_chain(
    arcs: &[Arc],
    mode: Mode,
    kind: ChainKind,
) -> (usize, Option<CrossingWitness>) {
    assert!(arcs.len() <= 24, "brute force limited to 24 arcs");
    let mut sorted = arcs.to_vec();
    sorted.sort_unstable();
    let kinds: &[WitnessKind] = match kind {
        ChainKind::Strict => &[WitnessKind::Strict],
        ChainKind::Enhanced => &[WitnessKind::Strict, WitnessKind::Weak],
    };
    let mut best: (usize, Option<CrossingWitness>) = (0, None);
    for mask in 1u32..(1u32 << sorted.len()) {
        let size = mask.count_ones() as usize;
        if size <= best.0 {
            continue;
        }
        let subset: Vec<Arc> = (0..sorted.len())
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| sorted[b])
            .collect();
        for &wk in kinds {
            if satisfies(&subset, mode, wk) {
                best = (
                    size,
                    Some(CrossingWitness {
                        mode,
                        kind: wk,
                        arcs: subset.clone(),
                    }),
                );
                break;
            }
        }
    }
    best
}

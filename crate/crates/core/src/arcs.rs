//! Arc diagrams: consecutive elements of a block are joined by an arc, and
//! singleton blocks carry a loop.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Convention, SetPartition};

/// An arc `(left, right)` with `left <= right`; equal endpoints make a loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize)", into = "(usize, usize)")]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub const fn new(left: usize, right: usize) -> Self {
        Arc { left, right }
    }

    pub fn is_loop(&self) -> bool {
        self.left == self.right
    }

    /// `left < node < right`
    pub fn covers(&self, node: usize) -> bool {
        self.left < node && node < self.right
    }
}

impl From<(usize, usize)> for Arc {
    fn from((left, right): (usize, usize)) -> Self {
        Arc { left, right }
    }
}

impl From<Arc> for (usize, usize) {
    fn from(a: Arc) -> Self {
        (a.left, a.right)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

/// The arcs of a diagram on a ground set of size `n`, sorted by
/// `(left, right)`.
///
/// Every node starts at most one non-loop arc and ends at most one non-loop
/// arc, and a loop sits only on a node without other arcs. A non-loop arc is
/// therefore determined by either of its endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawArcSet", into = "RawArcSet")]
pub struct ArcSet {
    n: usize,
    convention: Convention,
    arcs: Vec<Arc>,
}

#[derive(Serialize, Deserialize)]
struct RawArcSet {
    #[serde(default = "default_convention")]
    convention: Convention,
    n: usize,
    arcs: Vec<Arc>,
}

fn default_convention() -> Convention {
    Convention::ZeroBased
}

impl TryFrom<RawArcSet> for ArcSet {
    type Error = Error;

    fn try_from(raw: RawArcSet) -> Result<Self> {
        ArcSet::new(raw.n, raw.convention, raw.arcs)
    }
}

impl From<ArcSet> for RawArcSet {
    fn from(a: ArcSet) -> Self {
        RawArcSet {
            convention: a.convention,
            n: a.n,
            arcs: a.arcs,
        }
    }
}

impl ArcSet {
    pub fn new(n: usize, convention: Convention, mut arcs: Vec<Arc>) -> Result<Self> {
        let first = convention.first();
        let mut out_deg = vec![0u8; n];
        let mut in_deg = vec![0u8; n];
        let mut looped = vec![false; n];
        arcs.sort_unstable();
        arcs.dedup();
        for a in &arcs {
            if a.left > a.right {
                return Err(Error::InvalidArcs(format!("arc {a} has left > right")));
            }
            if a.left < first || a.right >= first + n {
                return Err(Error::InvalidArcs(format!(
                    "arc {a} leaves the ground set of size {n}"
                )));
            }
            let (l, r) = (a.left - first, a.right - first);
            if a.is_loop() {
                looped[l] = true;
                continue;
            }
            out_deg[l] += 1;
            in_deg[r] += 1;
            if out_deg[l] > 1 {
                return Err(Error::InvalidArcs(format!(
                    "node {} has two outgoing arcs",
                    a.left
                )));
            }
            if in_deg[r] > 1 {
                return Err(Error::InvalidArcs(format!(
                    "node {} has two incoming arcs",
                    a.right
                )));
            }
        }
        for i in 0..n {
            if looped[i] && (in_deg[i] > 0 || out_deg[i] > 0) {
                return Err(Error::InvalidArcs(format!(
                    "loop on node {} which has other arcs",
                    i + first
                )));
            }
        }
        Ok(ArcSet {
            n,
            convention,
            arcs,
        })
    }

    /// Arc set built from already-validated parts.
    pub(crate) fn from_sorted_unchecked(n: usize, convention: Convention, arcs: Vec<Arc>) -> Self {
        debug_assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        ArcSet {
            n,
            convention,
            arcs,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn non_loops(&self) -> impl Iterator<Item = &Arc> + '_ {
        self.arcs.iter().filter(|a| !a.is_loop())
    }

    pub fn loops(&self) -> impl Iterator<Item = &Arc> + '_ {
        self.arcs.iter().filter(|a| a.is_loop())
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    /// `succ[i - first]` is the right end of the non-loop arc leaving `i`.
    pub fn successors(&self) -> Vec<Option<usize>> {
        let first = self.convention.first();
        let mut succ = vec![None; self.n];
        for a in self.non_loops() {
            succ[a.left - first] = Some(a.right);
        }
        succ
    }

    /// Same ground set, loops added on every isolated node.
    pub fn with_loops_normalized(&self) -> ArcSet {
        arcs(&partition_from_arcs(self))
    }
}

/// The arc diagram of `p`.
pub fn arcs(p: &SetPartition) -> ArcSet {
    let mut out = Vec::with_capacity(p.n());
    for block in p.blocks() {
        if block.len() == 1 {
            out.push(Arc::new(block[0], block[0]));
        } else {
            out.extend(block.windows(2).map(|w| Arc::new(w[0], w[1])));
        }
    }
    out.sort_unstable();
    ArcSet::from_sorted_unchecked(p.n(), p.convention(), out)
}

/// Reassembles the partition whose blocks are the connected components of
/// the arc graph. Nodes without arcs become singletons.
pub fn partition_from_arcs(a: &ArcSet) -> SetPartition {
    let first = a.convention().first();
    let succ = a.successors();
    let mut has_pred = vec![false; a.n()];
    for s in succ.iter().flatten() {
        has_pred[s - first] = true;
    }
    let mut blocks = Vec::new();
    for (start, &pred) in has_pred.iter().enumerate() {
        if pred {
            continue;
        }
        let mut block = vec![start + first];
        let mut cur = start;
        while let Some(next) = succ[cur] {
            block.push(next);
            cur = next - first;
        }
        blocks.push(block);
    }
    SetPartition::new(a.n(), blocks, a.convention()).expect("arc components form a partition")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arcs_of(list: &[(usize, usize)]) -> Vec<Arc> {
        list.iter().map(|&p| Arc::from(p)).collect()
    }

    #[test]
    fn arc_diagram_of_small_partition() {
        let p = SetPartition::new(
            6,
            vec![vec![1, 3], vec![2, 5, 6], vec![4]],
            Convention::OneBased,
        )
        .unwrap();
        let a = arcs(&p);
        assert_eq!(a.arcs(), &arcs_of(&[(1, 3), (2, 5), (4, 4), (5, 6)])[..]);
        assert_eq!(partition_from_arcs(&a), p);
    }

    #[test]
    fn all_loops() {
        let p = SetPartition::discrete(3, Convention::OneBased);
        assert_eq!(arcs(&p).arcs(), &arcs_of(&[(1, 1), (2, 2), (3, 3)])[..]);
    }

    #[test]
    fn large_zero_based_example() {
        let p = SetPartition::new(
            17,
            vec![
                vec![0, 4, 8, 15],
                vec![1, 3, 10],
                vec![2, 11],
                vec![5, 16],
                vec![6, 13],
                vec![7, 9, 12, 14],
            ],
            Convention::ZeroBased,
        )
        .unwrap();
        let mut expected = arcs_of(&[
            (0, 4),
            (4, 8),
            (8, 15),
            (1, 3),
            (3, 10),
            (2, 11),
            (5, 16),
            (6, 13),
            (7, 9),
            (9, 12),
            (12, 14),
        ]);
        expected.sort();
        assert_eq!(arcs(&p).arcs(), &expected[..]);
    }

    #[test]
    fn from_arcs_without_loops() {
        let a = ArcSet::new(3, Convention::OneBased, vec![]).unwrap();
        assert_eq!(
            partition_from_arcs(&a),
            SetPartition::discrete(3, Convention::OneBased)
        );
        let a = ArcSet::new(
            6,
            Convention::OneBased,
            arcs_of(&[(1, 3), (2, 5), (5, 6), (4, 4)]),
        )
        .unwrap();
        assert_eq!(
            partition_from_arcs(&a).blocks(),
            &[vec![1, 3], vec![2, 5, 6], vec![4]]
        );
    }

    #[test]
    fn rejects_bad_arc_sets() {
        let e = ArcSet::new(3, Convention::OneBased, arcs_of(&[(1, 3), (2, 3)])).unwrap_err();
        assert_eq!(e, Error::InvalidArcs("node 3 has two incoming arcs".into()));
        assert!(ArcSet::new(3, Convention::OneBased, arcs_of(&[(1, 2), (1, 3)])).is_err());
        assert!(ArcSet::new(3, Convention::OneBased, arcs_of(&[(1, 2), (2, 2)])).is_err());
        assert!(ArcSet::new(3, Convention::OneBased, arcs_of(&[(1, 4)])).is_err());
        assert!(ArcSet::new(3, Convention::OneBased, arcs_of(&[(3, 1)])).is_err());
    }

    #[test]
    fn json_form() {
        let a: ArcSet = serde_json::from_str(r#"{"n":3,"arcs":[[0,2],[1,1]]}"#).unwrap();
        assert_eq!(a.convention(), Convention::ZeroBased);
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            r#"{"convention":"zero","n":3,"arcs":[[0,2],[1,1]]}"#
        );
    }
}

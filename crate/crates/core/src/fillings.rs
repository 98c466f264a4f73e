//! 01-fillings of the staircase shape of order `n`.
//!
//! Rows are numbered 1..=n from top to bottom and row `r` holds the cells
//! `(r, 1)..=(r, r)`. A partition of `[n+1]` is encoded by the filling with a
//! one in `(j-1, i)` per non-loop arc `(i, j)`; a partition of `[n]` is
//! encoded with a one in `(j, i)` per arc, loops included. Under these
//! encodings crossings become proper south-east chains.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arcs::{arcs, partition_from_arcs, Arc, ArcSet};
use crate::error::{Error, Result};
use crate::partition::{Convention, SetPartition};

/// `(row, column)`, 1-based.
pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawFilling", into = "RawFilling")]
pub struct TriangularFilling {
    order: usize,
    ones: BTreeSet<Cell>,
}

#[derive(Serialize, Deserialize)]
struct RawFilling {
    order: usize,
    ones: Vec<Cell>,
}

impl TryFrom<RawFilling> for TriangularFilling {
    type Error = Error;

    fn try_from(raw: RawFilling) -> Result<Self> {
        TriangularFilling::new(raw.order, raw.ones)
    }
}

impl From<TriangularFilling> for RawFilling {
    fn from(f: TriangularFilling) -> Self {
        RawFilling {
            order: f.order,
            ones: f.ones.into_iter().collect(),
        }
    }
}

impl TriangularFilling {
    pub fn new(order: usize, ones: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (r, c) in ones {
            if !(1 <= c && c <= r && r <= order) {
                return Err(Error::Filling(format!(
                    "cell ({r},{c}) is outside the staircase of order {order}"
                )));
            }
            if !set.insert((r, c)) {
                return Err(Error::Filling(format!("cell ({r},{c}) listed twice")));
            }
        }
        Ok(TriangularFilling { order, ones: set })
    }

    pub fn empty(order: usize) -> Self {
        TriangularFilling {
            order,
            ones: BTreeSet::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn ones(&self) -> &BTreeSet<Cell> {
        &self.ones
    }

    pub fn one_count(&self) -> usize {
        self.ones.len()
    }

    /// At most one 1 in every row and in every column.
    pub fn check_row_col_simple(&self) -> Result<()> {
        let mut rows = vec![false; self.order + 1];
        let mut cols = vec![false; self.order + 1];
        for &(r, c) in &self.ones {
            if std::mem::replace(&mut rows[r], true) {
                return Err(Error::Filling(format!("row {r} holds two 1s")));
            }
            if std::mem::replace(&mut cols[c], true) {
                return Err(Error::Filling(format!("column {c} holds two 1s")));
            }
        }
        Ok(())
    }

    pub fn is_row_col_simple(&self) -> bool {
        self.check_row_col_simple().is_ok()
    }

    /// Whether the `j`-th corner hook (row `j` together with column `j`)
    /// contains a 1.
    pub fn corner_hook_nonzero(&self, j: usize) -> bool {
        self.ones.iter().any(|&(r, c)| r == j || c == j)
    }

    /// Indices `j` in `1..=order` of the nonzero corner hooks.
    pub fn nonzero_hooks(&self) -> Vec<usize> {
        let mut hit = vec![false; self.order + 1];
        for &(r, c) in &self.ones {
            hit[r] = true;
            hit[c] = true;
        }
        (1..=self.order).filter(|&j| hit[j]).collect()
    }

    /// Dense rows, top to bottom; `true` marks a 1.
    pub fn rows(&self) -> Vec<Vec<bool>> {
        (1..=self.order)
            .map(|r| (1..=r).map(|c| self.ones.contains(&(r, c))).collect())
            .collect()
    }
}

/// An ordered sequence of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.parts
    }
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Filling(format!(
                "composition {parts:?} has a zero part"
            )));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn target(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `c_1, c_1+c_2, …` excluding the full sum.
    pub fn partial_sums(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                *acc += p;
                Some(*acc)
            })
            .take(self.parts.len().saturating_sub(1))
            .collect()
    }
}

/// The filling of order `n` of a partition of `[n+1]`: a one at `(j-1, i)` per
/// non-loop arc `(i, j)`.
pub fn map_c(p: &SetPartition) -> Result<TriangularFilling> {
    if p.n() == 0 {
        return Err(Error::Filling(
            "map_c needs a nonempty ground set [n+1]".into(),
        ));
    }
    let p = p.with_convention(Convention::OneBased);
    let ones = arcs(&p)
        .non_loops()
        .map(|a| (a.right - 1, a.left))
        .collect();
    Ok(TriangularFilling {
        order: p.n() - 1,
        ones,
    })
}

/// Inverse of [`map_c`]; returns a one-based partition of `[order+1]`.
pub fn inv_c(f: &TriangularFilling) -> Result<SetPartition> {
    f.check_row_col_simple()?;
    let arcs = f.ones.iter().map(|&(r, c)| Arc::new(c, r + 1)).collect();
    let set = ArcSet::new(f.order + 1, Convention::OneBased, arcs)?;
    Ok(partition_from_arcs(&set))
}

/// The filling of order `n` of a partition of `[n]`: a one at `(j, i)` per
/// arc `(i, j)`, loops included.
pub fn map_e(p: &SetPartition) -> TriangularFilling {
    let p = p.with_convention(Convention::OneBased);
    let ones = arcs(&p).arcs().iter().map(|a| (a.right, a.left)).collect();
    TriangularFilling { order: p.n(), ones }
}

/// Inverse of [`map_e`]. Rejects fillings that are not row/column simple or
/// have a zero corner hook, since neither is in the image.
pub fn inv_e(f: &TriangularFilling) -> Result<SetPartition> {
    f.check_row_col_simple()?;
    if let Some(j) = (1..=f.order).find(|&j| !f.corner_hook_nonzero(j)) {
        return Err(Error::Filling(format!("corner hook {j} is zero")));
    }
    let arcs = f.ones.iter().map(|&(r, c)| Arc::new(c, r)).collect();
    let set = ArcSet::new(f.order, Convention::OneBased, arcs)?;
    Ok(partition_from_arcs(&set))
}

/// Length of the longest proper SE-chain: ones `(r_1,c_1),…,(r_k,c_k)` with
/// strictly increasing rows and columns whose bounding rectangle fits in the
/// staircase, i.e. `c_k <= r_1`.
pub fn max_proper_se_chain(f: &TriangularFilling) -> usize {
    longest_proper_se_chain(f).len()
}

/// One longest proper SE-chain, top to bottom.
pub fn longest_proper_se_chain(f: &TriangularFilling) -> Vec<Cell> {
    let cells: Vec<Cell> = f.ones.iter().copied().collect();
    let mut best: Vec<Cell> = Vec::new();
    for &(r1, c1) in &cells {
        // cells that may follow the top cell: further south-east, column
        // still inside the top row
        let cand: Vec<Cell> = cells
            .iter()
            .filter(|&&(r, c)| r > r1 && c > c1 && c <= r1)
            .copied()
            .collect();
        let mut len = vec![1usize; cand.len()];
        let mut parent = vec![usize::MAX; cand.len()];
        for x in 0..cand.len() {
            for y in 0..x {
                if cand[y].0 < cand[x].0 && cand[y].1 < cand[x].1 && len[y] + 1 > len[x] {
                    len[x] = len[y] + 1;
                    parent[x] = y;
                }
            }
        }
        let tail_len = len.iter().copied().max().unwrap_or(0);
        if tail_len + 1 > best.len() {
            let mut chain = Vec::new();
            if let Some(mut end) = (0..cand.len()).find(|&x| len[x] == tail_len) {
                loop {
                    chain.push(cand[end]);
                    if parent[end] == usize::MAX {
                        break;
                    }
                    end = parent[end];
                }
            }
            chain.push((r1, c1));
            chain.reverse();
            best = chain;
        }
    }
    best
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FillingFlags {
    /// row/column simple with no proper SE-chain of length k
    pub in_c_class: bool,
    /// additionally no zero corner hook
    pub in_e_class: bool,
}

pub fn filling_class(f: &TriangularFilling, k: usize) -> Result<FillingFlags> {
    if k < 2 {
        return Err(Error::BadOrder {
            context: "filling_class",
            k,
            min: 2,
        });
    }
    let in_c_class = f.is_row_col_simple() && max_proper_se_chain(f) < k;
    let in_e_class = in_c_class && f.nonzero_hooks().len() == f.order;
    Ok(FillingFlags {
        in_c_class,
        in_e_class,
    })
}

/// Splits a row/column-simple filling of order `n` into the composition of
/// `n+1` marking its nonzero corner hooks and the filling left after deleting
/// the zero hooks.
pub fn map_f(f: &TriangularFilling) -> Result<(Composition, TriangularFilling)> {
    f.check_row_col_simple()?;
    let kept = f.nonzero_hooks();
    let mut remap = vec![0usize; f.order + 1];
    for (new, &old) in kept.iter().enumerate() {
        remap[old] = new + 1;
    }
    let mut parts = Vec::with_capacity(kept.len() + 1);
    let mut prev = 0;
    for &j in &kept {
        parts.push(j - prev);
        prev = j;
    }
    parts.push(f.order + 1 - prev);
    let ones = f.ones.iter().map(|&(r, c)| (remap[r], remap[c])).collect();
    Ok((
        Composition { parts },
        TriangularFilling {
            order: kept.len(),
            ones,
        },
    ))
}

/// Inverse of [`map_f`]: index `m` of `e` is moved to the `m`-th partial sum
/// of `c` and the hooks in between are left empty.
pub fn inv_f(c: &Composition, e: &TriangularFilling) -> Result<TriangularFilling> {
    if c.parts().len() != e.order + 1 {
        return Err(Error::Filling(format!(
            "composition has {} parts but the filling has order {}",
            c.parts().len(),
            e.order
        )));
    }
    e.check_row_col_simple()?;
    if let Some(j) = (1..=e.order).find(|&j| !e.corner_hook_nonzero(j)) {
        return Err(Error::Filling(format!("corner hook {j} is zero")));
    }
    let sums = c.partial_sums();
    let expand = |m: usize| sums[m - 1];
    let ones = e
        .ones
        .iter()
        .map(|&(r, col)| (expand(r), expand(col)))
        .collect();
    Ok(TriangularFilling {
        order: c.target() - 1,
        ones,
    })
}

/// All row/column-simple fillings of the given order, in lexicographic order
/// of their row choices (row 1 first, "empty" before column 1).
pub fn simple_fillings(order: usize) -> Vec<TriangularFilling> {
    fn go(
        order: usize,
        row: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<Cell>,
        out: &mut Vec<TriangularFilling>,
    ) {
        if row > order {
            out.push(TriangularFilling {
                order,
                ones: cur.iter().copied().collect(),
            });
            return;
        }
        go(order, row + 1, used, cur, out);
        for c in 1..=row {
            if !used[c] {
                used[c] = true;
                cur.push((row, c));
                go(order, row + 1, used, cur, out);
                cur.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(
        order,
        1,
        &mut vec![false; order + 1],
        &mut Vec::new(),
        &mut out,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_based(n: usize, blocks: &[&[usize]]) -> SetPartition {
        SetPartition::new(
            n,
            blocks.iter().map(|b| b.to_vec()).collect(),
            Convention::OneBased,
        )
        .unwrap()
    }

    fn sample_partition() -> SetPartition {
        one_based(9, &[&[1, 5, 8], &[2], &[3, 7], &[4, 9], &[6]])
    }

    fn compressible_filling() -> TriangularFilling {
        TriangularFilling::new(10, [(5, 2), (6, 5), (7, 7), (9, 9)]).unwrap()
    }

    fn compressed_filling() -> TriangularFilling {
        TriangularFilling::new(5, [(2, 1), (3, 2), (4, 4), (5, 5)]).unwrap()
    }

    #[test]
    fn c_encoding_of_sample() {
        let f = map_c(&sample_partition()).unwrap();
        assert_eq!(f.order(), 8);
        let expected: BTreeSet<Cell> = [(4, 1), (6, 3), (7, 5), (8, 4)].into_iter().collect();
        assert_eq!(f.ones(), &expected);
        assert_eq!(inv_c(&f).unwrap(), sample_partition());
        assert!(f.ones().iter().all(|&(r, c)| c <= r));
    }

    #[test]
    fn c_encoding_small() {
        assert_eq!(
            map_c(&one_based(2, &[&[1], &[2]])).unwrap(),
            TriangularFilling::empty(1)
        );
        assert_eq!(
            map_c(&one_based(2, &[&[1, 2]])).unwrap(),
            TriangularFilling::new(1, [(1, 1)]).unwrap()
        );
        assert_eq!(
            inv_c(&TriangularFilling::empty(4)).unwrap(),
            SetPartition::discrete(5, Convention::OneBased)
        );
        let bad = TriangularFilling::new(2, [(2, 1), (2, 2)]).unwrap();
        assert!(inv_c(&bad).is_err());
        assert!(map_c(&SetPartition::empty(Convention::OneBased)).is_err());
    }

    #[test]
    fn e_encoding_of_sample() {
        let f = map_e(&sample_partition());
        assert_eq!(f.order(), 9);
        let expected: BTreeSet<Cell> = [(5, 1), (2, 2), (7, 3), (9, 4), (8, 5), (6, 6)]
            .into_iter()
            .collect();
        assert_eq!(f.ones(), &expected);
        assert_eq!(f.nonzero_hooks().len(), 9);
        assert_eq!(inv_e(&f).unwrap(), sample_partition());
        assert_eq!(
            map_e(&one_based(1, &[&[1]])),
            TriangularFilling::new(1, [(1, 1)]).unwrap()
        );
        assert!(inv_e(&TriangularFilling::empty(2)).is_err());
    }

    #[test]
    fn proper_chains() {
        let f = map_c(&sample_partition()).unwrap();
        assert_eq!(max_proper_se_chain(&f), 3);
        assert_eq!(longest_proper_se_chain(&f), vec![(4, 1), (6, 3), (8, 4)]);
        assert_eq!(max_proper_se_chain(&TriangularFilling::empty(5)), 0);
        assert_eq!(max_proper_se_chain(&compressible_filling()), 2);
    }

    #[test]
    fn classes_of_compressible_filling() {
        let flags = filling_class(&compressible_filling(), 3).unwrap();
        assert!(flags.in_c_class && !flags.in_e_class);
        let zero_hooks: Vec<usize> = (1..=10)
            .filter(|&j| !compressible_filling().corner_hook_nonzero(j))
            .collect();
        assert_eq!(zero_hooks, vec![1, 3, 4, 8, 10]);
        assert!(filling_class(&compressed_filling(), 3).unwrap().in_e_class);
        assert!(filling_class(&compressed_filling(), 1).is_err());
    }

    #[test]
    fn f_compresses() {
        let (c, e) = map_f(&compressible_filling()).unwrap();
        assert_eq!(c.parts(), &[2, 3, 1, 1, 2, 2]);
        assert_eq!(e, compressed_filling());
        assert_eq!(inv_f(&c, &e).unwrap(), compressible_filling());
    }

    #[test]
    fn f_degenerate() {
        let (c, e) = map_f(&TriangularFilling::empty(4)).unwrap();
        assert_eq!(c.parts(), &[5]);
        assert_eq!(e, TriangularFilling::empty(0));
        assert_eq!(inv_f(&c, &e).unwrap(), TriangularFilling::empty(4));

        let one = TriangularFilling::new(1, [(1, 1)]).unwrap();
        let (c, e) = map_f(&one).unwrap();
        assert_eq!(c.parts(), &[1, 1]);
        assert_eq!(e, one);
        assert_eq!(inv_f(&c, &e).unwrap(), one);
    }

    #[test]
    fn inv_f_rejects_mismatch() {
        let c = Composition::new(vec![2, 3]).unwrap();
        assert!(inv_f(&c, &compressed_filling()).is_err());
        let c = Composition::new(vec![1, 1, 1]).unwrap();
        let hole = TriangularFilling::new(2, [(2, 2)]).unwrap();
        assert!(inv_f(&c, &hole).is_err());
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn simple_fillings_are_counted_by_bell() {
        // Bell(1..=5)
        for (order, bell) in [(0, 1), (1, 2), (2, 5), (3, 15), (4, 52)] {
            assert_eq!(simple_fillings(order).len(), bell);
        }
    }

    #[test]
    fn rejects_cells_outside_shape() {
        assert!(TriangularFilling::new(3, [(2, 3)]).is_err());
        assert!(TriangularFilling::new(3, [(4, 1)]).is_err());
        assert!(TriangularFilling::new(3, [(1, 1), (1, 1)]).is_err());
    }

    #[test]
    fn json_form() {
        let s = serde_json::to_string(&compressible_filling()).unwrap();
        assert_eq!(s, r#"{"order":10,"ones":[[5,2],[6,5],[7,7],[9,9]]}"#);
        let back: TriangularFilling = serde_json::from_str(&s).unwrap();
        assert_eq!(back, compressible_filling());
        let c: Composition = serde_json::from_str("[2,3,1,1,2,2]").unwrap();
        assert_eq!(c.target(), 11);
    }
}

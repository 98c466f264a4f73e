//! Red/black colored arc diagrams on `{0,…,n-1}`.
//!
//! The block containing 0 is red, every other block is black. Colors are
//! always recomputed from connectivity and never stored independently of the
//! arcs.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arcs::{arcs, partition_from_arcs, Arc, ArcSet};
use crate::chain::{max_chain_size, ChainKind, Mode};
use crate::error::{Error, Result};
use crate::partition::{Convention, SetPartition};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredDiagram {
    arcs: ArcSet,
    red: Vec<bool>,
}

impl ColoredDiagram {
    /// Colors `arcs`, which must live on the zero-based ground set.
    pub fn new(arcs: ArcSet) -> Result<Self> {
        if arcs.convention() != Convention::ZeroBased {
            return Err(Error::Convention("colored diagram"));
        }
        let mut red = vec![false; arcs.n()];
        if arcs.n() > 0 {
            let succ = arcs.successors();
            let mut cur = 0;
            red[0] = true;
            while let Some(next) = succ[cur] {
                red[next] = true;
                cur = next;
            }
        }
        Ok(ColoredDiagram { arcs, red })
    }

    pub fn of_partition(p: &SetPartition) -> Result<Self> {
        ColoredDiagram::new(arcs(p))
    }

    pub fn n(&self) -> usize {
        self.arcs.n()
    }

    pub fn arc_set(&self) -> &ArcSet {
        &self.arcs
    }

    pub fn partition(&self) -> SetPartition {
        partition_from_arcs(&self.arcs)
    }

    pub fn is_red(&self, node: usize) -> bool {
        self.red[node]
    }

    pub fn is_red_arc(&self, a: &Arc) -> bool {
        self.red[a.left] && self.red[a.right]
    }

    /// `red(P)`, ascending.
    pub fn red_block(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.red[i]).collect()
    }

    pub fn red_arcs(&self) -> Vec<Arc> {
        self.arcs
            .arcs()
            .iter()
            .filter(|a| self.is_red_arc(a))
            .copied()
            .collect()
    }

    pub fn black_arcs(&self) -> Vec<Arc> {
        self.arcs
            .arcs()
            .iter()
            .filter(|a| !self.is_red_arc(a))
            .copied()
            .collect()
    }

    /// Largest enhanced crossing made of black arcs only.
    pub fn max_black_enhanced_crossing(&self) -> usize {
        max_chain_size(&self.black_arcs(), Mode::Crossing, ChainKind::Enhanced)
    }

    pub fn max_black_strict_crossing(&self) -> usize {
        max_chain_size(&self.black_arcs(), Mode::Crossing, ChainKind::Strict)
    }
}

impl Serialize for ColoredDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("ColoredDiagram", 3)?;
        s.serialize_field("n", &self.n())?;
        s.serialize_field("arcs", self.arcs.arcs())?;
        s.serialize_field("red", &self.red_block())?;
        s.end()
    }
}

/// Membership of a partition in the three classes for a given `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassFlags {
    /// no k-crossing
    pub in_nc: bool,
    /// no enhanced k-crossing
    pub in_nw: bool,
    /// no black enhanced k-crossing; `None` unless the partition is zero-based
    pub in_bnw: Option<bool>,
}

pub fn class_flags(p: &SetPartition, k: usize) -> Result<ClassFlags> {
    if k < 2 {
        return Err(Error::BadOrder {
            context: "class_flags",
            k,
            min: 2,
        });
    }
    let a = arcs(p);
    let in_nc = max_chain_size(a.arcs(), Mode::Crossing, ChainKind::Strict) < k;
    let in_nw = max_chain_size(a.arcs(), Mode::Crossing, ChainKind::Enhanced) < k;
    let in_bnw = match p.convention() {
        Convention::ZeroBased => Some(ColoredDiagram::new(a)?.max_black_enhanced_crossing() < k),
        Convention::OneBased => None,
    };
    Ok(ClassFlags {
        in_nc,
        in_nw,
        in_bnw,
    })
}

/// Red nodes `a` lying under some strict `j`-crossing of black arcs, that is
/// `i_j < a < j_1`.
pub fn red_nodes_under_black_crossing(d: &ColoredDiagram, j: usize) -> Result<Vec<usize>> {
    if j < 1 {
        return Err(Error::BadOrder {
            context: "red_nodes_under_black_crossing",
            k: j,
            min: 1,
        });
    }
    let black: Vec<Arc> = d
        .black_arcs()
        .into_iter()
        .filter(|a| !a.is_loop())
        .collect();
    Ok(d.red_block()
        .into_iter()
        .filter(|&a| {
            // arcs covering `a` cross pairwise iff their lefts and rights
            // increase together
            let covering: Vec<Arc> = black.iter().filter(|x| x.covers(a)).copied().collect();
            max_chain_size(&covering, Mode::Crossing, ChainKind::Strict) >= j
        })
        .collect())
}

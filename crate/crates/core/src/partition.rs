//! Set partitions of `{1,…,n}` or `{0,…,n-1}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which integers make up the ground set of size `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Convention {
    /// `{0, 1, …, n-1}`
    #[serde(rename = "zero")]
    ZeroBased,
    /// `{1, 2, …, n}`
    #[serde(rename = "one")]
    OneBased,
}

impl Convention {
    /// Smallest element of the ground set.
    pub fn first(self) -> usize {
        match self {
            Convention::ZeroBased => 0,
            Convention::OneBased => 1,
        }
    }

    /// The ground set of size `n` as a half-open range.
    pub fn ground(self, n: usize) -> std::ops::Range<usize> {
        self.first()..self.first() + n
    }
}

/// A partition of a finite ground set into nonempty blocks.
///
/// Blocks are sorted ascending and ordered by their minimum element, so two
/// partitions are equal iff they have the same blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPartition", into = "RawPartition")]
pub struct SetPartition {
    n: usize,
    convention: Convention,
    blocks: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct RawPartition {
    convention: Convention,
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl TryFrom<RawPartition> for SetPartition {
    type Error = Error;

    fn try_from(raw: RawPartition) -> Result<Self> {
        SetPartition::new(raw.n, raw.blocks, raw.convention)
    }
}

impl From<SetPartition> for RawPartition {
    fn from(p: SetPartition) -> Self {
        RawPartition {
            convention: p.convention,
            n: p.n,
            blocks: p.blocks,
        }
    }
}

impl SetPartition {
    /// Validates and canonicalizes `blocks` as a partition of the ground set
    /// of size `n`.
    pub fn new(n: usize, blocks: Vec<Vec<usize>>, convention: Convention) -> Result<Self> {
        let first = convention.first();
        let mut seen = vec![false; n];
        let mut blocks = blocks;
        for (pos, block) in blocks.iter_mut().enumerate() {
            if block.is_empty() {
                return Err(Error::EmptyBlock(pos));
            }
            for &e in block.iter() {
                if e < first || e >= first + n {
                    return Err(Error::OutOfRange {
                        element: e,
                        block: block.clone(),
                    });
                }
                if seen[e - first] {
                    return Err(Error::Overlap {
                        element: e,
                        block: block.clone(),
                    });
                }
                seen[e - first] = true;
            }
            block.sort_unstable();
        }
        if let Some(missing) = seen.iter().position(|&s| !s) {
            return Err(Error::Gap(missing + first));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition {
            n,
            convention,
            blocks,
        })
    }

    /// The partition with no blocks on the empty ground set.
    pub fn empty(convention: Convention) -> Self {
        SetPartition {
            n: 0,
            convention,
            blocks: Vec::new(),
        }
    }

    /// Builds a partition from a restricted growth string: element
    /// `first + i` goes to block `rgs[i]`. The string must start at 0 and
    /// never jump by more than one above the running maximum.
    pub fn from_rgs(rgs: &[u8], convention: Convention) -> Result<Self> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let first = convention.first();
        for (i, &b) in rgs.iter().enumerate() {
            let b = b as usize;
            if b > blocks.len() {
                return Err(Error::Argument(format!(
                    "restricted growth string {rgs:?} jumps at position {i}"
                )));
            }
            if b == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[b].push(first + i);
        }
        // blocks are born in order of their minima and filled ascending
        Ok(SetPartition {
            n: rgs.len(),
            convention,
            blocks,
        })
    }

    /// Singleton blocks only.
    pub fn discrete(n: usize, convention: Convention) -> Self {
        SetPartition {
            n,
            convention,
            blocks: convention.ground(n).map(|e| vec![e]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// `|P|`, the number of blocks.
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Index (in canonical order) of the block containing `element`.
    pub fn block_index_of(&self, element: usize) -> Option<usize> {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&element).is_ok())
    }

    pub fn block_of(&self, element: usize) -> Option<&[usize]> {
        self.block_index_of(element)
            .map(|i| self.blocks[i].as_slice())
    }

    /// The restricted growth string of the partition.
    pub fn rgs(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.n];
        let first = self.convention.first();
        for (idx, block) in self.blocks.iter().enumerate() {
            for &e in block {
                out[e - first] = idx as u8;
            }
        }
        out
    }

    /// The same partition with its ground set relabeled to `convention`
    /// (every element shifted by ±1).
    pub fn with_convention(&self, convention: Convention) -> SetPartition {
        if convention == self.convention {
            return self.clone();
        }
        let from = self.convention.first();
        let to = convention.first();
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| e + to - from).collect())
            .collect();
        SetPartition {
            n: self.n,
            convention,
            blocks,
        }
    }

    /// The mirror image under `i ↦ first + last - i`.
    pub fn reflected(&self) -> SetPartition {
        let first = self.convention.first();
        let last = first + self.n.saturating_sub(1);
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&e| first + last - e).collect())
            .collect();
        SetPartition::new(self.n, blocks, self.convention).expect("reflection of a partition")
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (bi, block) in self.blocks.iter().enumerate() {
            if bi > 0 {
                write!(f, ",")?;
            }
            write!(f, "{{")?;
            for (ei, e) in block.iter().enumerate() {
                if ei > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "}}")?;
        }
        write!(f, "}}")
    }
}

//! Exhaustive enumeration of set partitions and the block-count polynomials
//! of the crossing and nesting classes.
//!
//! Partitions are produced in lexicographic order of their restricted growth
//! strings. A run can be split into shards by fixing a prefix of the string;
//! shard results are merged by addition, so the outcome never depends on how
//! the work was split.

pub mod identities;
pub mod motzkin;
pub mod numbers;
pub mod polynomial;
pub mod selftest;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::arcs::arcs;
use crate::chain::{max_chain_size, ChainKind, Mode};
use crate::colored::ColoredDiagram;
use crate::error::{Error, Result};
use crate::partition::{Convention, SetPartition};

pub use polynomial::Polynomial;

/// Restricted growth strings of length `n` in lexicographic order, optionally
/// restricted to those starting with a fixed prefix.
#[derive(Clone, Debug)]
pub struct Partitions {
    convention: Convention,
    rgs: Vec<u8>,
    /// `max[i]` is the largest letter among `rgs[..=i]`
    max: Vec<u8>,
    fixed: usize,
    state: IterState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum IterState {
    Fresh,
    Running,
    Done,
}

/// All partitions of the ground set of size `n`.
pub fn iterate_partitions(n: usize, convention: Convention) -> Partitions {
    iterate_with_prefix(n, convention, &[]).expect("the empty prefix is valid")
}

/// The partitions whose restricted growth string starts with `prefix`.
pub fn iterate_with_prefix(n: usize, convention: Convention, prefix: &[u8]) -> Result<Partitions> {
    if prefix.len() > n {
        return Err(Error::Argument(format!(
            "prefix {prefix:?} is longer than n = {n}"
        )));
    }
    let mut rgs = prefix.to_vec();
    rgs.resize(n, 0);
    let mut max = Vec::with_capacity(n);
    let mut m = 0u8;
    for (i, &x) in rgs.iter().enumerate() {
        if (i == 0 && x != 0) || (i > 0 && x > m + 1) {
            return Err(Error::Argument(format!(
                "prefix {prefix:?} is not a restricted growth string"
            )));
        }
        m = m.max(x);
        max.push(m);
    }
    Ok(Partitions {
        convention,
        rgs,
        max,
        fixed: prefix.len().max(1),
        state: IterState::Fresh,
    })
}

impl Partitions {
    fn advance(&mut self) -> bool {
        let n = self.rgs.len();
        for i in (self.fixed..n).rev() {
            if self.rgs[i] <= self.max[i - 1] {
                self.rgs[i] += 1;
                self.max[i] = self.max[i - 1].max(self.rgs[i]);
                for j in i + 1..n {
                    self.rgs[j] = 0;
                    self.max[j] = self.max[i];
                }
                return true;
            }
        }
        false
    }

    /// The current restricted growth string without building a partition.
    pub fn next_rgs(&mut self) -> Option<&[u8]> {
        match self.state {
            IterState::Done => return None,
            IterState::Fresh => self.state = IterState::Running,
            IterState::Running => {
                if !self.advance() {
                    self.state = IterState::Done;
                    return None;
                }
            }
        }
        Some(&self.rgs)
    }
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let convention = self.convention;
        self.next_rgs()
            .map(|r| SetPartition::from_rgs(r, convention).expect("generated strings are valid"))
    }
}

/// Every valid restricted-growth prefix of length `min(depth, n)`, in
/// lexicographic order; together they split the partitions of `[n]` into
/// disjoint shards.
pub fn shard_prefixes(n: usize, depth: usize) -> Vec<Vec<u8>> {
    let mut it = iterate_partitions(depth.min(n), Convention::ZeroBased);
    let mut out = Vec::new();
    while let Some(r) = it.next_rgs() {
        out.push(r.to_vec());
    }
    out
}

/// The partition classes whose block-count polynomials are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PartitionClass {
    /// no k-crossing
    #[serde(rename = "NC")]
    Nc,
    /// no enhanced k-crossing
    #[serde(rename = "NW")]
    Nw,
    /// no enhanced k-crossing among arcs outside the block of 0
    #[serde(rename = "BNW")]
    Bnw,
    /// no enhanced k-nesting
    #[serde(rename = "NONNEST_ENH")]
    NonnestEnh,
}

impl PartitionClass {
    pub const ALL: [PartitionClass; 4] = [
        PartitionClass::Nc,
        PartitionClass::Nw,
        PartitionClass::Bnw,
        PartitionClass::NonnestEnh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartitionClass::Nc => "NC",
            PartitionClass::Nw => "NW",
            PartitionClass::Bnw => "BNW",
            PartitionClass::NonnestEnh => "NONNEST_ENH",
        }
    }
}

impl fmt::Display for PartitionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PartitionClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_uppercase().replace('-', "_");
        PartitionClass::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::Argument(format!("unknown class {s:?}")))
    }
}

/// The statistics of a partition that decide membership in every class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Profile {
    pub blocks: usize,
    pub strict_crossing: usize,
    pub enhanced_crossing: usize,
    pub enhanced_nesting: usize,
    pub black_enhanced_crossing: usize,
}

impl Profile {
    /// Profile of `p`; the black statistic is taken on the zero-based
    /// relabeling.
    pub fn of(p: &SetPartition) -> Profile {
        let p = p.with_convention(Convention::ZeroBased);
        let a = arcs(&p);
        let black = if p.n() == 0 {
            0
        } else {
            ColoredDiagram::new(a.clone())
                .expect("zero-based")
                .max_black_enhanced_crossing()
        };
        Profile {
            blocks: p.block_count(),
            strict_crossing: max_chain_size(a.arcs(), Mode::Crossing, ChainKind::Strict),
            enhanced_crossing: max_chain_size(a.arcs(), Mode::Crossing, ChainKind::Enhanced),
            enhanced_nesting: max_chain_size(a.arcs(), Mode::Nesting, ChainKind::Enhanced),
            black_enhanced_crossing: black,
        }
    }

    pub fn in_class(&self, k: usize, class: PartitionClass) -> bool {
        match class {
            PartitionClass::Nc => self.strict_crossing < k,
            PartitionClass::Nw => self.enhanced_crossing < k,
            PartitionClass::Bnw => self.black_enhanced_crossing < k,
            PartitionClass::NonnestEnh => self.enhanced_nesting < k,
        }
    }
}

/// Number of partitions of the ground set of size `n` with each profile.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub counts: BTreeMap<Profile, u64>,
}

fn merge(mut a: BTreeMap<Profile, u64>, b: BTreeMap<Profile, u64>) -> BTreeMap<Profile, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn shard_census(n: usize, prefix: &[u8]) -> BTreeMap<Profile, u64> {
    let mut counts = BTreeMap::new();
    for p in iterate_with_prefix(n, Convention::ZeroBased, prefix).expect("valid shard prefix") {
        *counts.entry(Profile::of(&p)).or_insert(0) += 1;
    }
    counts
}

const SHARD_DEPTH: usize = 5;

impl Census {
    /// Enumerates all partitions of `[n]` using up to `jobs` worker threads.
    pub fn compute(n: usize, jobs: usize) -> Census {
        let counts = map_shards(n, jobs, |pre| shard_census(n, pre))
            .into_iter()
            .fold(BTreeMap::new(), merge);
        Census { n, counts }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// `Σ t^{|P|}` over the partitions of the class.
    pub fn class_poly(&self, k: usize, class: PartitionClass) -> Polynomial {
        let mut coeffs = vec![0u64; self.n + 1];
        for (prof, &c) in &self.counts {
            if prof.in_class(k, class) {
                coeffs[prof.blocks] += c;
            }
        }
        Polynomial::from_u64s(&coeffs)
    }
}

/// Runs `f` on every shard prefix of `[n]` on up to `jobs` threads and
/// returns the results in prefix order.
pub fn map_shards<T, F>(n: usize, jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[u8]) -> T + Sync,
{
    let prefixes = shard_prefixes(n, SHARD_DEPTH);
    run_shards(&prefixes, jobs.max(1), f)
}

#[cfg(feature = "parallel")]
fn run_shards<T, F>(prefixes: &[Vec<u8>], jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[u8]) -> T + Sync,
{
    use rayon::prelude::*;
    if jobs == 1 {
        return prefixes.iter().map(|p| f(p)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    pool.install(|| prefixes.par_iter().map(|p| f(p)).collect())
}

#[cfg(not(feature = "parallel"))]
fn run_shards<T, F>(prefixes: &[Vec<u8>], _jobs: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[u8]) -> T + Sync,
{
    prefixes.iter().map(|p| f(p)).collect()
}

/// `Σ t^{|P|}` over partitions of `[n]` in `class`, by direct enumeration.
/// `BNW` is taken on `{0,…,n-1}`.
pub fn class_poly(n: usize, k: usize, class: PartitionClass) -> Result<Polynomial> {
    if k < 2 {
        return Err(Error::BadOrder {
            context: "class_poly",
            k,
            min: 2,
        });
    }
    let mut coeffs = vec![BigUint::default(); n + 1];
    for p in iterate_partitions(n, Convention::ZeroBased) {
        if Profile::of(&p).in_class(k, class) {
            coeffs[p.block_count()] += 1u32;
        }
    }
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Caches one census per ground-set size so grids of `(n, k)` queries
/// enumerate each `Π_n` once.
#[derive(Debug)]
pub struct Enumerator {
    jobs: usize,
    cache: HashMap<usize, Census>,
}

impl Enumerator {
    pub fn new(jobs: usize) -> Self {
        Enumerator {
            jobs: jobs.max(1),
            cache: HashMap::new(),
        }
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    pub fn census(&mut self, n: usize) -> &Census {
        let jobs = self.jobs;
        self.cache
            .entry(n)
            .or_insert_with(|| Census::compute(n, jobs))
    }

    pub fn class_poly(&mut self, n: usize, k: usize, class: PartitionClass) -> Result<Polynomial> {
        if k < 2 {
            return Err(Error::BadOrder {
                context: "class_poly",
                k,
                min: 2,
            });
        }
        Ok(self.census(n).class_poly(k, class))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(iterate_partitions(n, Convention::OneBased).count(), b);
        }
    }

    #[test]
    fn empty_ground_set() {
        let all: Vec<_> = iterate_partitions(0, Convention::ZeroBased).collect();
        assert_eq!(all, vec![SetPartition::empty(Convention::ZeroBased)]);
    }

    #[test]
    fn lexicographic_order() {
        let mut it = iterate_partitions(3, Convention::OneBased);
        let mut words = Vec::new();
        while let Some(r) = it.next_rgs() {
            words.push(r.to_vec());
        }
        assert_eq!(
            words,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn shards_cover_everything_once() {
        for depth in 0..=4 {
            let mut all = Vec::new();
            for pre in shard_prefixes(6, depth) {
                all.extend(iterate_with_prefix(6, Convention::ZeroBased, &pre).unwrap());
            }
            let direct: Vec<_> = iterate_partitions(6, Convention::ZeroBased).collect();
            assert_eq!(all, direct);
        }
        assert!(iterate_with_prefix(3, Convention::ZeroBased, &[0, 2]).is_err());
        assert!(iterate_with_prefix(3, Convention::ZeroBased, &[1]).is_err());
        assert!(iterate_with_prefix(1, Convention::ZeroBased, &[0, 0]).is_err());
    }

    #[test]
    fn small_class_polys() {
        assert_eq!(
            class_poly(5, 2, PartitionClass::Nc).unwrap(),
            Polynomial::from_u64s(&[0, 1, 10, 20, 10, 1])
        );
        assert_eq!(
            class_poly(3, 2, PartitionClass::Nw).unwrap(),
            Polynomial::from_u64s(&[0, 0, 3, 1])
        );
        for class in PartitionClass::ALL {
            assert_eq!(class_poly(0, 3, class).unwrap(), Polynomial::one());
        }
        assert!(class_poly(3, 1, PartitionClass::Nc).is_err());
    }

    #[test]
    fn census_agrees_with_direct_enumeration() {
        let mut e = Enumerator::new(1);
        for n in 0..=6 {
            for k in 2..=4 {
                for class in PartitionClass::ALL {
                    assert_eq!(
                        e.class_poly(n, k, class).unwrap(),
                        class_poly(n, k, class).unwrap(),
                        "n={n} k={k} {class}"
                    );
                }
            }
        }
    }

    #[test]
    fn sharded_census_is_deterministic() {
        let one = Census::compute(7, 1);
        let four = Census::compute(7, 4);
        assert_eq!(one, four);
        assert_eq!(one.total(), 877);
    }

    #[test]
    fn class_names() {
        assert_eq!(
            "nonnest-enh".parse::<PartitionClass>().unwrap(),
            PartitionClass::NonnestEnh
        );
        assert_eq!(
            "bnw".parse::<PartitionClass>().unwrap(),
            PartitionClass::Bnw
        );
        assert!("xx".parse::<PartitionClass>().is_err());
    }
}

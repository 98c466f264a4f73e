//! Motzkin paths and noncrossing partial matchings.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arcs::arcs;
use crate::chain::{max_chain_size, ChainKind, Mode};
use crate::error::{Error, Result};
use crate::partition::{Convention, SetPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MotzkinStep {
    U,
    D,
    H,
}

/// A word over `U`, `D`, `H` whose height never drops below zero and ends at
/// zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct MotzkinPath {
    steps: Vec<MotzkinStep>,
}

impl MotzkinPath {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<Self> {
        let mut h: usize = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                MotzkinStep::U => h += 1,
                MotzkinStep::D => {
                    h = h.checked_sub(1).ok_or_else(|| {
                        Error::Motzkin(format!("path drops below zero at step {}", i + 1))
                    })?
                }
                MotzkinStep::H => {}
            }
        }
        if h != 0 {
            return Err(Error::Motzkin(format!("path ends at height {h}")));
        }
        Ok(MotzkinPath { steps })
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, step: MotzkinStep) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(MotzkinStep::U),
                'D' => Ok(MotzkinStep::D),
                'H' => Ok(MotzkinStep::H),
                other => Err(Error::Motzkin(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

impl TryFrom<String> for MotzkinPath {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<MotzkinPath> for String {
    fn from(p: MotzkinPath) -> Self {
        p.to_string()
    }
}

/// Opens an up step at the left end of every arc, a down step at the right
/// end, and a flat step at every loop.
pub fn matching_to_motzkin(p: &SetPartition) -> Result<MotzkinPath> {
    if let Some(b) = p.blocks().iter().find(|b| b.len() > 2) {
        return Err(Error::Motzkin(format!(
            "block {b:?} has more than two elements"
        )));
    }
    let a = arcs(p);
    if max_chain_size(a.arcs(), Mode::Crossing, ChainKind::Strict) >= 2 {
        return Err(Error::Motzkin("the matching has a crossing".into()));
    }
    let first = p.convention().first();
    let mut steps = vec![MotzkinStep::H; p.n()];
    for arc in a.non_loops() {
        steps[arc.left - first] = MotzkinStep::U;
        steps[arc.right - first] = MotzkinStep::D;
    }
    MotzkinPath::new(steps)
}

/// Inverse of [`matching_to_motzkin`]: each down step closes the most recent
/// open up step. Returns a partition of `{1,…,len}`.
pub fn motzkin_to_matching(path: &MotzkinPath) -> SetPartition {
    let mut open = Vec::new();
    let mut blocks = Vec::new();
    for (i, s) in path.steps.iter().enumerate() {
        let node = i + 1;
        match s {
            MotzkinStep::U => open.push(node),
            MotzkinStep::D => blocks.push(vec![open.pop().expect("valid path"), node]),
            MotzkinStep::H => blocks.push(vec![node]),
        }
    }
    SetPartition::new(path.len(), blocks, Convention::OneBased).expect("a path pairs every step")
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

    #[test]
    fn sample_path() {
        let p = one_based(
            12,
            &[&[1, 9], &[2, 3], &[4, 8], &[5, 6], &[7], &[10, 12], &[11]],
        );
        let path = matching_to_motzkin(&p).unwrap();
        assert_eq!(path.to_string(), "UUDUUDHDDUHD");
        assert_eq!(motzkin_to_matching(&path), p);
        assert_eq!(path.count(MotzkinStep::U), 5);
        assert_eq!(path.count(MotzkinStep::H), 2);
    }

    #[test]
    fn small_cases() {
        let path = matching_to_motzkin(&SetPartition::discrete(3, Convention::OneBased)).unwrap();
        assert_eq!(path.to_string(), "HHH");
        let uudd: MotzkinPath = "UUDD".parse().unwrap();
        assert_eq!(
            motzkin_to_matching(&uudd),
            one_based(4, &[&[1, 4], &[2, 3]])
        );
        assert!(
            matching_to_motzkin(&SetPartition::empty(Convention::OneBased))
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!("UD D".parse::<MotzkinPath>().is_err());
        assert!("DU".parse::<MotzkinPath>().is_err());
        assert!("UUD".parse::<MotzkinPath>().is_err());
        assert!(matching_to_motzkin(&one_based(4, &[&[1, 3], &[2, 4]])).is_err());
        assert!(matching_to_motzkin(&one_based(3, &[&[1, 2, 3]])).is_err());
    }

    #[test]
    fn json_form() {
        let p: MotzkinPath = serde_json::from_str("\"UHD\"").unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "\"UHD\"");
        assert!(serde_json::from_str::<MotzkinPath>("\"D\"").is_err());
    }
}

//! Exact Catalan, Motzkin, Bell, Stirling, binomial and γ numbers.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NumberKind {
    Catalan,
    Motzkin,
    Bell,
    Stirling2,
    Binomial,
    Gamma,
}

impl NumberKind {
    pub const ALL: [NumberKind; 6] = [
        NumberKind::Catalan,
        NumberKind::Motzkin,
        NumberKind::Bell,
        NumberKind::Stirling2,
        NumberKind::Binomial,
        NumberKind::Gamma,
    ];

    pub fn arity(self) -> usize {
        match self {
            NumberKind::Catalan | NumberKind::Motzkin | NumberKind::Bell => 1,
            NumberKind::Stirling2 | NumberKind::Binomial | NumberKind::Gamma => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NumberKind::Catalan => "catalan",
            NumberKind::Motzkin => "motzkin",
            NumberKind::Bell => "bell",
            NumberKind::Stirling2 => "stirling2",
            NumberKind::Binomial => "binomial",
            NumberKind::Gamma => "gamma",
        }
    }
}

impl fmt::Display for NumberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumberKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NumberKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Argument(format!("unknown number kind {s:?}")))
    }
}

/// Evaluates `kind` at `args`.
pub fn number(kind: NumberKind, args: &[usize]) -> Result<BigUint> {
    if args.len() != kind.arity() {
        return Err(Error::Argument(format!(
            "{kind} takes {} argument(s), got {}",
            kind.arity(),
            args.len()
        )));
    }
    Ok(match kind {
        NumberKind::Catalan => catalan(args[0]),
        NumberKind::Motzkin => motzkin(args[0]),
        NumberKind::Bell => bell(args[0]),
        NumberKind::Stirling2 => stirling2(args[0], args[1]),
        NumberKind::Binomial => binomial(args[0], args[1]),
        NumberKind::Gamma => {
            if args[0] == 0 {
                return Err(Error::Argument("gamma needs m >= 1".into()));
            }
            gamma(args[0], args[1])
        }
    })
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `C(2n, n) / (n + 1)`
pub fn catalan(n: usize) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// `Σ_i C(n, 2i) C_i`
pub fn motzkin(n: usize) -> BigUint {
    (0..=n / 2).map(|i| binomial(n, 2 * i) * catalan(i)).sum()
}

/// `γ_{m,i} = C(m-1, 2i) C_i` for `m >= 1`.
pub fn gamma(m: usize, i: usize) -> BigUint {
    assert!(m >= 1, "gamma needs m >= 1");
    binomial(m - 1, 2 * i) * catalan(i)
}

/// Bell numbers from the Bell triangle.
pub fn bell(n: usize) -> BigUint {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().expect("rows are nonempty").clone());
        for x in &row {
            let v = next.last().expect("just pushed") + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

/// Stirling numbers of the second kind, `S(0,0) = 1`.
pub fn stirling2(a: usize, b: usize) -> BigUint {
    stirling2_row(a).get(b).cloned().unwrap_or_default()
}

/// `S(a, 0..=a)` via `S(a,b) = b·S(a-1,b) + S(a-1,b-1)`.
pub fn stirling2_row(a: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=a {
        let mut next = vec![BigUint::zero(); m + 1];
        for b in 1..=m {
            let keep = if b < m { &row[b] * b } else { BigUint::zero() };
            next[b] = keep + &row[b - 1];
        }
        row = next;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn as_u64(v: BigUint) -> u64 {
        u64::try_from(v).unwrap()
    }

    #[test]
    fn reference_sequences() {
        let cat = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        let mot = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188];
        let bel = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for n in 0..=10 {
            assert_eq!(as_u64(catalan(n)), cat[n]);
            assert_eq!(as_u64(motzkin(n)), mot[n]);
            assert_eq!(as_u64(bell(n)), bel[n]);
        }
    }

    #[test]
    fn stirling_and_bell_agree() {
        assert_eq!(as_u64(stirling2(4, 2)), 7);
        assert_eq!(as_u64(stirling2(0, 0)), 1);
        assert_eq!(as_u64(stirling2(3, 0)), 0);
        assert_eq!(as_u64(stirling2(2, 5)), 0);
        for n in 0..=15 {
            let sum: BigUint = stirling2_row(n).into_iter().sum();
            assert_eq!(sum, bell(n));
        }
    }

    #[test]
    fn gamma_values() {
        assert_eq!(as_u64(gamma(5, 1)), 6);
        assert_eq!(as_u64(gamma(5, 2)), 2);
        assert_eq!(as_u64(gamma(6, 1)), 10);
        assert_eq!(as_u64(gamma(1, 0)), 1);
        assert!(number(NumberKind::Gamma, &[0, 0]).is_err());
    }

    #[test]
    fn dispatch() {
        assert_eq!(as_u64(number(NumberKind::Catalan, &[5]).unwrap()), 42);
        assert_eq!(as_u64(number(NumberKind::Binomial, &[10, 3]).unwrap()), 120);
        assert!(number(NumberKind::Bell, &[1, 2]).is_err());
        assert_eq!(
            "STIRLING2".parse::<NumberKind>().unwrap(),
            NumberKind::Stirling2
        );
        assert!("fib".parse::<NumberKind>().is_err());
    }

    #[test]
    fn big_values_are_exact() {
        assert_eq!(catalan(40).to_string(), "2622127042276492108820");
        assert_eq!(
            binomial(100, 50).to_string(),
            "100891344545564193334812497256"
        );
    }
}

use std::fmt;
use std::io::Read;
use std::str::FromStr;

use serde::de::DeserializeOwned;

use crate::CliError;

/// Inclusive integer range, written `5`, `1..9` or `1..=9`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub lo: usize,
    pub hi: usize,
}

impl Span {
    pub fn iter(self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("expected a number or a range a..b, got `{s}`"))
        };
        let span = match s.split_once("..") {
            Some((a, b)) => Span {
                lo: num(a)?,
                hi: num(b.strip_prefix('=').unwrap_or(b))?,
            },
            None => {
                let x = num(s)?;
                Span { lo: x, hi: x }
            }
        };
        if span.lo > span.hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(span)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

pub fn read_text(source: Option<&str>) -> Result<String, CliError> {
    match source {
        Some(s) if s.trim_start().starts_with(['{', '[', '"']) => Ok(s.to_string()),
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}"))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Usage(format!("cannot read standard input: {e}")))?;
            Ok(buf)
        }
    }
}

pub fn read_json<T: DeserializeOwned>(source: Option<&str>, what: &str) -> Result<T, CliError> {
    let text = read_text(source)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("malformed {what} JSON: {e}")))
}

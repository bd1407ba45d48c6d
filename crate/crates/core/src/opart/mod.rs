//! Partitions, overpartitions and their counting statistics.
//!
//! Parts of an overpartition are totally ordered as `1̄ < 1 < 2̄ < 2 < ...`.
//! Both [`Partition`] and [`Overpartition`] store their parts largest first,
//! the way they are usually written, e.g. `(3, 2̄, 1, 1)`.

mod enumerate;
mod stats;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

pub use enumerate::{Enumerator, DEFAULT_ENUMERATION_CAP};
pub use stats::{overline_mex, partition_mex, partition_number, pbar, pbar_table, MexQuery};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OpartError {
    #[error("n = {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: u32, cap: u32 },
    #[error("invalid overpartition: {0}")]
    InvalidOverpartition(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid mex query: residue {residue} modulo {modulus}")]
    InvalidMexQuery { modulus: u32, residue: u32 },
    #[error("parameter {name} = {value} out of range")]
    BadParameter { name: &'static str, value: i64 },
}

/// A single part of an overpartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Part {
    pub value: u32,
    pub overlined: bool,
}

impl Part {
    pub const fn plain(value: u32) -> Self {
        Self { value, overlined: false }
    }

    pub const fn over(value: u32) -> Self {
        Self { value, overlined: true }
    }

    /// Position in the total order: `1̄ -> 1, 1 -> 2, 2̄ -> 3, ...`.
    pub(crate) const fn rank(self) -> u32 {
        2 * self.value - self.overlined as u32
    }

    pub(crate) const fn from_rank(rank: u32) -> Self {
        Self { value: rank.div_ceil(2), overlined: rank % 2 == 1 }
    }
}

impl Ord for Part {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for Part {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.overlined {
            // combining overline on every digit
            for ch in self.value.to_string().chars() {
                write!(f, "{ch}\u{0305}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// An overpartition: a partition in which the last occurrence of each part
/// value may be overlined.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    parts: Vec<Part>,
}

impl Overpartition {
    /// Sorts `parts` into canonical order and checks the overline rule.
    pub fn new(mut parts: Vec<Part>) -> Result<Self, OpartError> {
        if parts.iter().any(|p| p.value == 0) {
            return Err(OpartError::InvalidOverpartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.windows(2).any(|w| w[0].overlined && w[0] == w[1]) {
            return Err(OpartError::InvalidOverpartition(
                "a part value may be overlined at most once".into(),
            ));
        }
        Ok(Self { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<Part>) -> Self {
        debug_assert!(Self::new(parts.clone()).map(|p| p.parts == parts).unwrap_or(false));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|p| u64::from(p.value)).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The smallest part in the overline order.
    pub fn smallest(&self) -> Option<Part> {
        self.parts.last().copied()
    }

    pub fn contains(&self, part: Part) -> bool {
        self.parts.contains(&part)
    }

    /// Number of non-overlined parts equal to `value`.
    pub fn plain_count(&self, value: u32) -> usize {
        self.parts.iter().filter(|p| p.value == value && !p.overlined).count()
    }

    /// Renders with a custom separator, e.g. `' '` for comma-separated output.
    pub fn display_with(&self, sep: &str) -> String {
        let inner: Vec<String> = self.parts.iter().map(Part::to_string).collect();
        format!("({})", inner.join(sep))
    }
}

impl fmt::Display for Overpartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(","))
    }
}

/// Parses `"(3,2',1,1)"`, `"3,2',1,1"` or `"3,2\u{305},1,1"`; a trailing `'` or a
/// combining overline marks an overlined part. `"()"` is the empty overpartition.
impl FromStr for Overpartition {
    type Err = OpartError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s.trim();
        let body = body.strip_prefix('(').unwrap_or(body);
        let body = body.strip_suffix(')').unwrap_or(body).trim();
        if body.is_empty() {
            return Ok(Self::empty());
        }
        let parts = body
            .split([',', ' '])
            .filter(|t| !t.is_empty())
            .map(|tok| {
                let digits: String = tok.chars().filter(char::is_ascii_digit).collect();
                let marks = tok.chars().filter(|c| !c.is_ascii_digit()).collect::<String>();
                let overlined = match marks.as_str() {
                    "" => false,
                    m if m.chars().all(|c| c == '\'' || c == '\u{305}' || c == '\u{304}') => true,
                    _ => return Err(OpartError::InvalidOverpartition(format!("bad part {tok:?}"))),
                };
                let value = digits
                    .parse()
                    .map_err(|_| OpartError::InvalidOverpartition(format!("bad part {tok:?}")))?;
                Ok(Part { value, overlined })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(parts)
    }
}

/// An ordinary partition, parts non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, OpartError> {
        if parts.contains(&0) {
            return Err(OpartError::InvalidPartition("parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

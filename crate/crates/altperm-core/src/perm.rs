//! The permutation value type and its textual formats.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from constructing or parsing permutations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    /// A value appeared more than once.
    #[error("duplicate value {value}")]
    DuplicateValue { value: u32 },
    /// A value was zero or larger than the length.
    #[error("value {value} out of range 1..={n}")]
    ValueOutOfRange { value: u32, n: usize },
    /// A token in the textual form was not a positive integer.
    #[error("cannot parse `{token}` as a permutation entry")]
    InvalidToken { token: String },
    /// The up-down condition fails between the given position and the next.
    #[error("not alternating: the up-down rule breaks between positions {position} and {}", position + 1)]
    NotAlternating { position: usize },
    /// The operation needs at least one entry.
    #[error("the empty permutation is not supported here")]
    Empty,
}

/// A permutation of `{1, …, n}` in one-line notation.
///
/// The ordering is lexicographic on the one-line form, which is the order all
/// enumeration in this crate uses.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=n` and wraps it.
    ///
    /// The first offending value (scanning left to right) is reported.
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n];
        for &v in &values {
            if v == 0 || v as usize > n {
                return Err(PermError::ValueOutOfRange { value: v, n });
            }
            if seen[v as usize - 1] {
                return Err(PermError::DuplicateValue { value: v });
            }
            seen[v as usize - 1] = true;
        }
        Ok(Self { values })
    }

    /// Wraps values already known to form a permutation.
    pub(crate) fn from_validated(values: Vec<u32>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { values }
    }

    /// The identity permutation `1 2 ⋯ n`.
    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as u32).collect(),
        }
    }

    /// The decreasing permutation `n ⋯ 2 1`.
    pub fn decreasing(n: usize) -> Self {
        Self {
            values: (1..=n as u32).rev().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The one-line values; index `i` holds `p_{i+1}`.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// The reverse complement `r` with `r_i = n+1-p_{n+1-i}`; an involution.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.values.len() as u32;
        Permutation {
            values: self.values.iter().rev().map(|&v| n + 1 - v).collect(),
        }
    }
}

impl fmt::Display for Permutation {
    /// Compact digit string for `n ≤ 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let joined: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", joined.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Accepts both textual forms: a digit string like `"893624751"` (usable
    /// for `n ≤ 9`) or comma-separated integers like `"10,2,7"`. The presence
    /// of a comma selects the second form.
    fn from_str(s: &str) -> Result<Self, PermError> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Permutation { values: Vec::new() });
        }
        let values = if s.contains(',') {
            s.split(',')
                .map(|tok| {
                    let tok = tok.trim();
                    tok.parse::<u32>().map_err(|_| PermError::InvalidToken {
                        token: tok.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        } else {
            s.chars()
                .map(|ch| {
                    ch.to_digit(10).ok_or(PermError::InvalidToken {
                        token: ch.to_string(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?
        };
        Permutation::new(values)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// A permutation used as a containment template.
///
/// Structurally identical to [`Permutation`]; the newtype keeps the two roles
/// apart in signatures.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(values: Vec<u32>) -> Result<Self, PermError> {
        Permutation::new(values).map(Pattern)
    }

    pub fn from_permutation(p: Permutation) -> Self {
        Pattern(p)
    }

    /// The increasing pattern `12⋯k`.
    pub fn increasing(k: usize) -> Self {
        Pattern(Permutation::identity(k))
    }

    /// The decreasing pattern `k⋯21`.
    pub fn decreasing(k: usize) -> Self {
        Pattern(Permutation::decreasing(k))
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[u32] {
        self.0.values()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pattern({})", self.0)
    }
}

impl FromStr for Pattern {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        s.parse().map(Pattern)
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Permutation::deserialize(deserializer).map(Pattern)
    }
}

//! Residues and charge vectors.
//!
//! A residue is either symbolic, `δ_k + n` for a formal generic charge `δ_k`,
//! or an explicit rational number. Symbolic residues in different components
//! never differ by an integer, so genericity holds by construction.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::scalars::{parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChargeError {
    #[error("charges {i} and {j} differ by an integer")]
    NotGeneric { i: usize, j: usize },
    #[error("cannot parse residue {0:?}")]
    Parse(String),
    #[error("charge vector must be nonempty")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Residue {
    /// `δ_component + offset`, components counted from 1.
    Symbolic {
        component: usize,
        offset: i64,
    },
    Concrete(Rational),
}

impl Residue {
    pub fn symbolic(component: usize, offset: i64) -> Self {
        Residue::Symbolic { component, offset }
    }

    pub fn int(n: i64) -> Self {
        Residue::Concrete(Rational::from_integer(BigInt::from(n)))
    }

    pub fn plus(&self, n: i64) -> Self {
        match self {
            Residue::Symbolic { component, offset } => Residue::Symbolic {
                component: *component,
                offset: offset + n,
            },
            Residue::Concrete(x) => Residue::Concrete(x + Rational::from_integer(BigInt::from(n))),
        }
    }

    /// `self - other` when that difference is an integer.
    pub fn differ_by_int(&self, other: &Residue) -> Option<i64> {
        match (self, other) {
            (
                Residue::Symbolic {
                    component: a,
                    offset: x,
                },
                Residue::Symbolic {
                    component: b,
                    offset: y,
                },
            ) => (a == b).then_some(x - y),
            (Residue::Concrete(x), Residue::Concrete(y)) => {
                let d = x - y;
                if d.is_integer() {
                    i64::try_from(d.to_integer()).ok()
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// Parity of `self - other` (0 or 1), if the difference is an integer.
    pub fn parity_diff(&self, other: &Residue) -> Option<i64> {
        self.differ_by_int(other).map(|d| d.rem_euclid(2))
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residue::Symbolic { component, offset } => {
                write!(f, "d{component}")?;
                match offset.cmp(&0) {
                    std::cmp::Ordering::Greater => write!(f, "+{offset}"),
                    std::cmp::Ordering::Less => write!(f, "{offset}"),
                    std::cmp::Ordering::Equal => Ok(()),
                }
            }
            Residue::Concrete(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
        }
    }
}

impl FromStr for Residue {
    type Err = ChargeError;

    /// Accepts `d2`, `d1+3`, `d1-1`, `7`, `-1/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ChargeError::Parse(s.to_string());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('d').or_else(|| t.strip_prefix('δ')) {
            let split = rest.find(['+', '-']).unwrap_or(rest.len());
            let component: usize = rest[..split].parse().map_err(|_| bad())?;
            if component == 0 {
                return Err(bad());
            }
            let offset = match &rest[split..] {
                "" => 0,
                o => o
                    .trim_start_matches('+')
                    .parse::<i64>()
                    .map_err(|_| bad())?,
            };
            return Ok(Residue::Symbolic { component, offset });
        }
        parse_rational(t).map(Residue::Concrete).map_err(|_| bad())
    }
}

impl Serialize for Residue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Residue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The charges `(δ_1, …, δ_ℓ)` of an `ℓ`-multipartition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ChargeVector {
    charges: Vec<Residue>,
}

impl ChargeVector {
    /// Does not check genericity; see [`ChargeVector::validate_generic`].
    pub fn new(charges: Vec<Residue>) -> Result<Self, ChargeError> {
        if charges.is_empty() {
            return Err(ChargeError::Empty);
        }
        Ok(Self { charges })
    }

    /// `(δ_1, …, δ_ℓ)` with formal symbols; always generic.
    pub fn generic(level: usize) -> Self {
        Self {
            charges: (1..=level).map(|k| Residue::symbolic(k, 0)).collect(),
        }
    }

    /// A single integer charge, the usual Fock space setting.
    pub fn single(delta: i64) -> Self {
        Self {
            charges: vec![Residue::int(delta)],
        }
    }

    pub fn level(&self) -> usize {
        self.charges.len()
    }

    pub fn charges(&self) -> &[Residue] {
        &self.charges
    }

    /// The charge `δ_k`, with `k` counted from 1.
    pub fn charge(&self, k: usize) -> &Residue {
        &self.charges[k - 1]
    }

    /// Errors with the first pair `(i, j)`, 1-based, whose difference is an integer.
    pub fn validate_generic(&self) -> Result<(), ChargeError> {
        for i in 0..self.charges.len() {
            for j in i + 1..self.charges.len() {
                if self.charges[i].differ_by_int(&self.charges[j]).is_some() {
                    return Err(ChargeError::NotGeneric { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(())
    }

    /// The component `k` and offset `n` with `r = δ_k + n`, if any.
    ///
    /// For generic charges there is at most one such component.
    pub fn locate(&self, r: &Residue) -> Option<(usize, i64)> {
        self.charges
            .iter()
            .enumerate()
            .find_map(|(k, d)| r.differ_by_int(d).map(|n| (k + 1, n)))
    }
}

impl FromStr for ChargeVector {
    type Err = ChargeError;

    /// Comma separated residues, e.g. `d1,d2` or `0,1/2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let charges = s
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Residue>, _>>()?;
        Self::new(charges)
    }
}

impl fmt::Display for ChargeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.charges.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// `(-1)^n` for any integer `n`.
pub(crate) fn neg_one_pow(n: i64) -> i64 {
    if n.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

//! The superboolean semiring `{0, 1, 1ν}`.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An element of the three-element superboolean semiring.
///
/// `1 + 1 = 1ν` (the ghost), the ghost absorbs under addition, and zero
/// annihilates under multiplication. The derived order is `0 < 1 < 1ν`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum SbScalar {
    #[default]
    Zero,
    One,
    Ghost,
}

impl SbScalar {
    pub const ALL: [SbScalar; 3] = [SbScalar::Zero, SbScalar::One, SbScalar::Ghost];

    /// Membership in the ghost ideal `{0, 1ν}`.
    pub fn is_ghost(self) -> bool {
        matches!(self, Self::Zero | Self::Ghost)
    }

    /// The only tangible nonzero element is `1`.
    pub fn is_tangible(self) -> bool {
        self == Self::One
    }

    /// Entries allowed in a boolean matrix.
    pub fn is_boolean(self) -> bool {
        !matches!(self, Self::Ghost)
    }

    pub fn symbol(self) -> char {
        match self {
            Self::Zero => '0',
            Self::One => '1',
            Self::Ghost => 'g',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            '0' => Some(Self::Zero),
            '1' => Some(Self::One),
            'g' | 'G' => Some(Self::Ghost),
            _ => None,
        }
    }

    pub fn from_bool(b: bool) -> Self {
        if b {
            Self::One
        } else {
            Self::Zero
        }
    }
}

impl Add for SbScalar {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        use SbScalar::*;
        match (self, rhs) {
            (Zero, x) | (x, Zero) => x,
            (One, One) => Ghost,
            _ => Ghost,
        }
    }
}

impl Mul for SbScalar {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        use SbScalar::*;
        match (self, rhs) {
            (Zero, _) | (_, Zero) => Zero,
            (One, One) => One,
            _ => Ghost,
        }
    }
}

impl Sum for SbScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::Zero, Add::add)
    }
}

impl Product for SbScalar {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::One, Mul::mul)
    }
}

impl fmt::Display for SbScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

impl FromStr for SbScalar {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        match (chars.next().and_then(Self::from_symbol), chars.next()) {
            (Some(x), None) => Ok(x),
            _ => Err(format!("expected one of 0, 1, g; got `{s}`")),
        }
    }
}

impl Serialize for SbScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(match self {
            Self::Zero => "0",
            Self::One => "1",
            Self::Ghost => "g",
        })
    }
}

impl<'de> Deserialize<'de> for SbScalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

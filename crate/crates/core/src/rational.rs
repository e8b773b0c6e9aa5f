use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational in lowest terms with a positive denominator.
///
/// Displays as `num/den` even for integers (`0/1`, `3/1`). Serializes as
/// `{"num": "...", "den": "..."}` with decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn zero() -> Self {
        Self(BigRational::zero())
    }

    pub fn new(num: BigInt, den: BigInt) -> Option<Self> {
        (!den.is_zero()).then(|| Self(BigRational::new(num, den)))
    }

    pub fn from_naturals(num: BigUint, den: BigUint) -> Option<Self> {
        Self::new(num.into(), den.into())
    }

    pub fn recip_of(den: &BigUint) -> Option<Self> {
        Self::from_naturals(BigUint::from(1u32), den.clone())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for ExactRational {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (n, d) = s.split_once('/').unwrap_or((s, "1"));
        let num: BigInt = n.parse().map_err(|_| format!("bad numerator {n:?}"))?;
        let den: BigInt = d.parse().map_err(|_| format!("bad denominator {d:?}"))?;
        Self::new(num, den).ok_or_else(|| "zero denominator".to_string())
    }
}

impl Add for ExactRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(self.0 + rhs.0)
    }
}

impl Sub for ExactRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(self.0 - rhs.0)
    }
}

impl Mul for ExactRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self(self.0 * rhs.0)
    }
}

impl Sum for ExactRational {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), Add::add)
    }
}

impl From<BigUint> for ExactRational {
    fn from(x: BigUint) -> Self {
        Self(BigRational::from_integer(x.into()))
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: String,
    den: String,
}

impl Serialize for ExactRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire {
            num: self.numer().to_string(),
            den: self.denom().to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactRational {
    /// Accepts only the reduced form with a positive denominator, so that a
    /// decoded value re-serializes to the same text.
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let w = Wire::deserialize(d)?;
        let num: BigInt = w.num.parse().map_err(D::Error::custom)?;
        let den: BigInt = w.den.parse().map_err(D::Error::custom)?;
        if !den.is_positive() {
            return Err(D::Error::custom("denominator must be positive"));
        }
        let r = BigRational::new(num.clone(), den.clone());
        let canonical = *r.numer() == num
            && *r.denom() == den
            && num.to_string() == w.num
            && den.to_string() == w.den;
        if !canonical {
            return Err(D::Error::custom("rational not in canonical form"));
        }
        Ok(Self(r))
    }
}

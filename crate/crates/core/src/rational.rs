//! Exact rationals extended by the point at infinity `1/0`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::RationalError;

/// A fraction `p/q` in lowest terms with `q >= 0`.
///
/// The sign always lives on the numerator, and `1/0` is the only
/// representation of infinity (there is no signed infinity).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedRational {
    numer: BigInt,
    denom: BigInt,
}

impl ExtendedRational {
    /// Normalizes `numer/denom`. Any `n/0` with `n != 0` becomes `1/0`;
    /// only `0/0` is rejected.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, RationalError> {
        let numer = numer.into();
        let denom = denom.into();
        if denom.is_zero() {
            if numer.is_zero() {
                return Err(RationalError::Indeterminate);
            }
            return Ok(Self::infinity());
        }
        Ok(Self::normalized(numer, denom))
    }

    /// Builds from a column vector that is known to be nonzero, e.g. the image
    /// of `(1, 0)` under a unimodular matrix.
    pub(crate) fn from_column(numer: BigInt, denom: BigInt) -> Self {
        debug_assert!(!(numer.is_zero() && denom.is_zero()));
        if denom.is_zero() {
            Self::infinity()
        } else {
            Self::normalized(numer, denom)
        }
    }

    fn normalized(mut numer: BigInt, mut denom: BigInt) -> Self {
        if denom.is_negative() {
            numer = -numer;
            denom = -denom;
        }
        let g = numer.gcd(&denom);
        if !g.is_one() {
            numer /= &g;
            denom /= &g;
        }
        Self { numer, denom }
    }

    pub fn infinity() -> Self {
        Self {
            numer: BigInt::one(),
            denom: BigInt::zero(),
        }
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self {
            numer: n.into(),
            denom: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    pub fn denom(&self) -> &BigInt {
        &self.denom
    }

    pub fn is_infinite(&self) -> bool {
        self.denom.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.denom.is_one()
    }

    /// `floor(p/q)`, or `None` at infinity.
    pub fn floor(&self) -> Option<BigInt> {
        if self.is_infinite() {
            None
        } else {
            Some(self.numer.div_floor(&self.denom))
        }
    }

    /// `self + n`. Infinity absorbs translation.
    pub fn add_integer(&self, n: &BigInt) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Self {
            numer: &self.numer + n * &self.denom,
            denom: self.denom.clone(),
        }
    }

    /// `1 - self` for finite values; used by the reflection symmetry of depth.
    pub fn one_minus(&self) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Self {
            numer: &self.denom - &self.numer,
            denom: self.denom.clone(),
        }
    }

    pub fn neg(&self) -> Self {
        if self.is_infinite() {
            return self.clone();
        }
        Self {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }

    /// True when `0 < self < 1`.
    pub fn in_unit_interval(&self) -> bool {
        !self.is_infinite() && self.numer.is_positive() && self.numer < self.denom
    }

    /// Farey adjacency: `|a d - b c| = 1`.
    pub fn is_farey_neighbor(&self, other: &Self) -> bool {
        let det = &self.numer * &other.denom - &self.denom * &other.numer;
        det.abs().is_one()
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Finite values compare as rationals; infinity sorts above everything.
impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom)),
        }
    }
}

/// Inverse of `a` modulo `m` in `[0, m)`, if it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let a = a.mod_floor(m);
    let egcd = a.extended_gcd(m);
    if !egcd.gcd.is_one() {
        return None;
    }
    Some(egcd.x.mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> ExtendedRational {
        ExtendedRational::new(n, d).unwrap()
    }

    #[test]
    fn normalizes_sign_and_gcd() {
        let x = r(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(r(0, -7), r(0, 1));
    }

    #[test]
    fn infinity_is_unique() {
        assert_eq!(r(-5, 0), ExtendedRational::infinity());
        assert_eq!(r(3, 0).to_string(), "1/0");
        assert!(ExtendedRational::new(0, 0).is_err());
    }

    #[test]
    fn floor_and_translation() {
        assert_eq!(r(-1, 3).floor(), Some(BigInt::from(-1)));
        assert_eq!(r(7, 3).floor(), Some(BigInt::from(2)));
        assert_eq!(r(1, 3).add_integer(&BigInt::from(2)), r(7, 3));
        assert_eq!(ExtendedRational::infinity().floor(), None);
    }

    #[test]
    fn ordering_puts_infinity_last() {
        let mut xs = vec![ExtendedRational::infinity(), r(1, 2), r(-3, 1), r(1, 3)];
        xs.sort();
        assert_eq!(
            xs,
            vec![r(-3, 1), r(1, 3), r(1, 2), ExtendedRational::infinity()]
        );
    }

    #[test]
    fn modular_inverse() {
        let inv = |a: i64, m: i64| mod_inverse(&a.into(), &m.into()).map(|x| x.to_string());
        assert_eq!(inv(2, 9).as_deref(), Some("5"));
        assert_eq!(inv(4, 15).as_deref(), Some("4"));
        assert_eq!(inv(-4, 15).as_deref(), Some("11"));
        assert_eq!(inv(3, 9), None);
    }
}

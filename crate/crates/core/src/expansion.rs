//! Subtractive continued fractions `r + [b_1, ..., b_n]`, where
//!
//! ```text
//! r + [b_1, ..., b_n] = r + 1/(b_1 - 1/(b_2 - ... - 1/b_n))
//! ```
//!
//! and their additive counterparts.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::DomainError;
use crate::rational::ExtendedRational;

/// The `ε = ±1` of the rewrite rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(b: &BigInt) -> Option<Self> {
        match b.sign() {
            num_bigint::Sign::Plus => Some(Sign::Plus),
            num_bigint::Sign::Minus => Some(Sign::Minus),
            num_bigint::Sign::NoSign => None,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    /// `k ε` as a big integer.
    pub fn times(self, k: i64) -> BigInt {
        BigInt::from(k * self.to_i64())
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_i64())
    }
}

/// Integer part plus coefficient sequence of a subtractive continued fraction.
///
/// Coefficients may be `0` or `±1`; those only disappear under reduction.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Expansion {
    pub integer_part: BigInt,
    pub coefficients: Vec<BigInt>,
}

/// `r + 1/(a_1 + 1/(a_2 + ... + 1/a_n))`. Kept apart from [`Expansion`] so the
/// two sign conventions cannot be mixed up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveExpansion {
    pub integer_part: BigInt,
    pub terms: Vec<BigInt>,
}

/// Running product of 2x2 integer matrices.
#[derive(Clone, Debug)]
struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    /// `z -> r + 1/z`, the entry point for the integer part.
    fn head(r: &BigInt) -> Self {
        Self {
            a: r.clone(),
            b: BigInt::one(),
            c: BigInt::one(),
            d: BigInt::zero(),
        }
    }

    /// Right-multiply by `[[t, -1], [1, 0]]`, i.e. compose with `z -> t - 1/z`.
    fn push(&mut self, t: &BigInt) {
        let a = &self.a * t + &self.b;
        let c = &self.c * t + &self.d;
        self.b = -std::mem::replace(&mut self.a, a);
        self.d = -std::mem::replace(&mut self.c, c);
    }

    /// Image of the point `1/0`.
    fn value(&self) -> ExtendedRational {
        ExtendedRational::from_column(self.a.clone(), self.c.clone())
    }
}

impl Expansion {
    pub fn new<R, C, I>(integer_part: R, coefficients: I) -> Self
    where
        R: Into<BigInt>,
        C: Into<BigInt>,
        I: IntoIterator<Item = C>,
    {
        Self {
            integer_part: integer_part.into(),
            coefficients: coefficients.into_iter().map(Into::into).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Some coefficient is odd.
    pub fn is_odd_type(&self) -> bool {
        self.coefficients.iter().any(|b| b.is_odd())
    }

    pub fn is_even_type(&self) -> bool {
        !self.is_odd_type()
    }

    /// Some coefficient equals `±2`.
    pub fn has_two(&self) -> bool {
        let two = BigInt::from(2);
        self.coefficients.iter().any(|b| b.abs() == two)
    }

    /// Exact value. Division by zero anywhere yields `1/0` rather than an
    /// error, since evaluation is a product of unimodular matrices applied to
    /// `(1, 0)`.
    pub fn eval(&self) -> ExtendedRational {
        let mut m = Mat2::head(&self.integer_part);
        for b in &self.coefficients {
            m.push(b);
        }
        m.value()
    }

    /// The values `v_0 = r, v_1 = r + [b_1], ..., v_n = r + [b_1..b_n]`.
    pub fn partial_values(&self) -> Vec<ExtendedRational> {
        let mut m = Mat2::head(&self.integer_part);
        let mut out = Vec::with_capacity(self.len() + 1);
        out.push(m.value());
        for b in &self.coefficients {
            m.push(b);
            out.push(m.value());
        }
        out
    }

    /// Coefficient-reversed expansion. For `0 < [a_1..a_n] = p/q < 1`, the
    /// reversal evaluates to `p'/q` with `p p' = 1 (mod q)`.
    pub fn reverse(&self) -> Result<Self, DomainError> {
        if !self.integer_part.is_zero() {
            return Err(DomainError(format!(
                "reversal needs integer part 0, got {}",
                self.integer_part
            )));
        }
        if !self.eval().in_unit_interval() {
            return Err(DomainError(format!(
                "reversal needs a value in (0,1), got {}",
                self.eval()
            )));
        }
        Ok(Self {
            integer_part: BigInt::zero(),
            coefficients: self.coefficients.iter().rev().cloned().collect(),
        })
    }

    /// Every coefficient negated together with the integer part; evaluates to
    /// the negated value.
    pub fn negate(&self) -> Self {
        Self {
            integer_part: -&self.integer_part,
            coefficients: self.coefficients.iter().map(|b| -b).collect(),
        }
    }

    /// Expansion built by the ordinary (floor) division algorithm: the regular
    /// continued fraction of `x`, converted to subtractive form. Returns
    /// `None` at infinity.
    pub fn division(x: &ExtendedRational) -> Option<Self> {
        Some(AdditiveExpansion::regular(x)?.to_subtractive())
    }
}

impl AdditiveExpansion {
    pub fn new<R, C, I>(integer_part: R, terms: I) -> Self
    where
        R: Into<BigInt>,
        C: Into<BigInt>,
        I: IntoIterator<Item = C>,
    {
        Self {
            integer_part: integer_part.into(),
            terms: terms.into_iter().map(Into::into).collect(),
        }
    }

    /// Regular continued fraction by repeated floor division.
    pub fn regular(x: &ExtendedRational) -> Option<Self> {
        let r = x.floor()?;
        let mut num = x.denom().clone();
        let mut den = x.numer() - &r * x.denom();
        let mut terms = Vec::new();
        while !den.is_zero() {
            let (quot, rem) = num.div_mod_floor(&den);
            terms.push(quot);
            num = std::mem::replace(&mut den, rem);
        }
        Some(Self {
            integer_part: r,
            terms,
        })
    }

    /// `r + [a_1, -a_2, a_3, -a_4, ...]`, the subtractive form of the same value.
    pub fn to_subtractive(&self) -> Expansion {
        Expansion {
            integer_part: self.integer_part.clone(),
            coefficients: self
                .terms
                .iter()
                .enumerate()
                .map(|(i, a)| if i % 2 == 0 { a.clone() } else { -a })
                .collect(),
        }
    }

    /// Direct evaluation of the additive fraction, innermost term first.
    /// Independent of the subtractive evaluator; `1/0` on division by zero.
    pub fn eval(&self) -> ExtendedRational {
        // value = num/den, starting from the innermost 1/0
        let mut num = BigInt::one();
        let mut den = BigInt::zero();
        for a in self.terms.iter().rev() {
            // a + 1/(num/den) = (a*num + den)/num
            let next = a * &num + &den;
            den = std::mem::replace(&mut num, next);
        }
        // r + 1/(num/den)
        let top = &self.integer_part * &num + &den;
        ExtendedRational::from_column(top, num)
    }
}

/// Converts an additive expansion into the equivalent subtractive one.
pub fn alternating_sign_convert(e: &AdditiveExpansion) -> Expansion {
    e.to_subtractive()
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[BigInt]) -> fmt::Result {
    f.write_str("[")?;
    for (i, b) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{b}")?;
    }
    f.write_str("]")
}

/// `[3,2]` when the integer part is zero, otherwise `1+[-2,-2]`.
impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.integer_part.is_zero() {
            write!(f, "{}+", self.integer_part)?;
        }
        write_list(f, &self.coefficients)
    }
}

impl Serialize for Expansion {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for AdditiveExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.integer_part)?;
        for (i, a) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, " {a}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExtendedRational {
        ExtendedRational::new(n, d).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Expansion::new(0, [3, 2]).eval(), q(2, 5));
        assert_eq!(Expansion::new(1, [-2, -2]).eval(), q(1, 3));
        assert_eq!(Expansion::new(1, [-1, 2]).eval(), q(1, 3));
        assert_eq!(Expansion::new(5, Vec::<i64>::new()).eval(), q(5, 1));
        assert_eq!(
            Expansion::new(0, [1, 1]).eval(),
            ExtendedRational::infinity()
        );
        assert_eq!(Expansion::new(0, [3, 3, 3, 3]).eval(), q(21, 55));
    }

    #[test]
    fn zero_coefficient_passes_through_infinity() {
        // [7,0,2]: 0 - 1/2 then 7 - 1/(-1/2) = 9
        assert_eq!(Expansion::new(0, [7, 0, 2]).eval(), q(1, 9));
        assert_eq!(Expansion::new(4, [0]).eval(), ExtendedRational::infinity());
    }

    #[test]
    fn reverse_examples() {
        let e = Expansion::new(0, [3, 2]).reverse().unwrap();
        assert_eq!(e, Expansion::new(0, [2, 3]));
        assert_eq!(e.eval(), q(3, 5));
        assert_eq!(
            Expansion::new(0, [5]).reverse().unwrap(),
            Expansion::new(0, [5])
        );
        let e = Expansion::new(0, [5, 2]);
        assert_eq!(e.eval(), q(2, 9));
        assert_eq!(e.reverse().unwrap().eval(), q(5, 9));
    }

    #[test]
    fn reverse_rejects_bad_domain() {
        assert!(Expansion::new(1, [3]).reverse().is_err());
        // [1,2] = 2 is outside (0,1)
        assert!(Expansion::new(0, [1, 2]).reverse().is_err());
    }

    #[test]
    fn additive_conversion() {
        let add = AdditiveExpansion::new(0, [2, 3]);
        let sub = alternating_sign_convert(&add);
        assert_eq!(sub, Expansion::new(0, [2, -3]));
        assert_eq!(sub.eval(), q(3, 7));
        assert_eq!(add.eval(), q(3, 7));

        let add = AdditiveExpansion::new(0, [5]);
        assert_eq!(alternating_sign_convert(&add), Expansion::new(0, [5]));

        let add = AdditiveExpansion::new(1, [2, 2]);
        assert_eq!(add.eval(), q(7, 5));
        assert_eq!(alternating_sign_convert(&add).eval(), q(7, 5));
    }

    #[test]
    fn division_expansion_evaluates_back() {
        for (n, d) in [(2, 9), (4, 15), (-7, 3), (21, 55), (0, 1), (5, 1)] {
            let x = q(n, d);
            assert_eq!(Expansion::division(&x).unwrap().eval(), x);
        }
        assert!(Expansion::division(&ExtendedRational::infinity()).is_none());
    }

    #[test]
    fn types_and_display() {
        let e = Expansion::new(0, [4, 4]);
        assert!(e.is_even_type());
        assert!(!e.has_two());
        assert!(Expansion::new(0, [5, 2]).is_odd_type());
        assert!(Expansion::new(0, [2, -2]).has_two());
        assert_eq!(Expansion::new(-1, [2, -3]).to_string(), "-1+[2,-3]");
        assert_eq!(Expansion::new(0, Vec::<i64>::new()).to_string(), "[]");
    }

    #[test]
    fn partial_values_track_prefixes() {
        let e = Expansion::new(0, [3, 2]);
        assert_eq!(e.partial_values(), vec![q(0, 1), q(1, 3), q(2, 5)]);
    }
}

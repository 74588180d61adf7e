//! Schubert normal form `S(q,p)` of 2-bridge knots and its equivalences.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::KnotError;
use crate::rational::{mod_inverse, ExtendedRational};

/// A 2-bridge knot `S(q,p)` with `q` odd.
///
/// Stored normalized: `0 < p < q` for `q > 1`, and `(1, 0)` for the unknot.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KnotId {
    q: BigInt,
    p: BigInt,
}

impl KnotId {
    pub fn new(q: impl Into<BigInt>, p: impl Into<BigInt>) -> Result<Self, KnotError> {
        let q = q.into();
        let p = p.into();
        if !q.is_positive() {
            return Err(KnotError::NonPositive(q.to_string()));
        }
        if q.is_even() {
            return Err(KnotError::EvenDenominator(q.to_string()));
        }
        if !p.gcd(&q).is_one() {
            return Err(KnotError::NotCoprime {
                p: p.to_string(),
                q: q.to_string(),
            });
        }
        let p = p.mod_floor(&q);
        Ok(Self { q, p })
    }

    pub fn unknot() -> Self {
        Self {
            q: BigInt::one(),
            p: BigInt::zero(),
        }
    }

    /// The knot of the fraction `p/q`.
    pub fn from_fraction(x: &ExtendedRational) -> Result<Self, KnotError> {
        if x.is_infinite() {
            return Err(KnotError::Infinite);
        }
        Self::new(x.denom().clone(), x.numer().clone())
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn is_unknot(&self) -> bool {
        self.q.is_one()
    }

    /// The representative fraction `p/q` with `0 <= p < q`.
    pub fn fraction(&self) -> ExtendedRational {
        ExtendedRational::new(self.p.clone(), self.q.clone()).expect("q > 0")
    }

    /// `p^{-1} mod q`.
    pub fn inverse_p(&self) -> BigInt {
        mod_inverse(&self.p, &self.q).expect("p is a unit mod q")
    }

    /// `S(q, -p)`.
    pub fn mirror(&self) -> Self {
        Self {
            p: (-&self.p).mod_floor(&self.q),
            q: self.q.clone(),
        }
    }

    /// Least representative of `{p, p^{-1}} mod q`; equal for exactly the
    /// pairs that [`same_knot`] identifies.
    pub fn canonical_form(&self) -> Self {
        let inv = self.inverse_p();
        Self {
            p: inv.min(self.p.clone()),
            q: self.q.clone(),
        }
    }
}

/// `S(q1,p1) = S(q2,p2)` iff `q1 = q2` and `p2 = p1^{±1} (mod q)`.
pub fn same_knot(a: &KnotId, b: &KnotId) -> bool {
    if a.q != b.q {
        return false;
    }
    if a.p == b.p {
        return true;
    }
    ((&a.p * &b.p) - BigInt::one()).mod_floor(&a.q).is_zero()
}

impl fmt::Display for KnotId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S({},{})", self.q, self.p)
    }
}

impl Serialize for KnotId {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(q: i64, p: i64) -> KnotId {
        KnotId::new(q, p).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert!(matches!(
            KnotId::new(4, 1),
            Err(KnotError::EvenDenominator(_))
        ));
        assert!(matches!(
            KnotId::new(9, 3),
            Err(KnotError::NotCoprime { .. })
        ));
        assert!(matches!(KnotId::new(-3, 1), Err(KnotError::NonPositive(_))));
        assert_eq!(k(9, 11), k(9, 2));
        assert_eq!(k(1, 5), KnotId::unknot());
    }

    #[test]
    fn same_knot_examples() {
        assert!(same_knot(&k(9, 2), &k(9, 5)));
        assert!(!same_knot(&k(3, 1), &k(3, 2)));
        assert!(same_knot(&k(5, 2), &k(5, 2)));
        assert!(!same_knot(&k(5, 2), &k(7, 2)));
        assert!(same_knot(&KnotId::unknot(), &k(1, 0)));
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(k(3, 1).mirror(), k(3, 2));
        assert_eq!(k(5, 2).mirror(), k(5, 3));
        assert_eq!(k(15, 4).mirror(), k(15, 11));
        assert_eq!(KnotId::unknot().mirror(), KnotId::unknot());
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(k(9, 5).canonical_form(), k(9, 2));
        assert_eq!(k(3, 1).canonical_form(), k(3, 1));
        assert_eq!(k(15, 11).canonical_form(), k(15, 11));
        assert_eq!(KnotId::unknot().canonical_form(), KnotId::unknot());
    }

    #[test]
    fn equivalence_relation_exhaustive() {
        for q in (1..=99i64).step_by(2) {
            let knots: Vec<KnotId> = (0..q.max(1))
                .filter_map(|p| KnotId::new(q, p).ok())
                .collect();
            for a in &knots {
                assert!(same_knot(a, a));
                assert_eq!(a.canonical_form().canonical_form(), a.canonical_form());
                for b in &knots {
                    let ab = same_knot(a, b);
                    assert_eq!(ab, same_knot(b, a));
                    assert_eq!(ab, a.canonical_form() == b.canonical_form());
                    if ab {
                        for c in &knots {
                            if same_knot(b, c) {
                                assert!(same_knot(a, c), "{a} {b} {c}");
                            }
                        }
                    }
                }
            }
        }
    }
}

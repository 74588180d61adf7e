//! Crosscap number, genus and the boundary-compressibility dichotomy.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::DomainError;
use crate::expansion::Expansion;
use crate::knot::KnotId;
use crate::modular::all_shortest_expansions;
use crate::reducer::reduce;

/// Shortest expansion of the knot's fraction, obtained by reducing the
/// floor-division expansion of `p/q`.
pub fn reduced_expansion(k: &KnotId) -> Expansion {
    let e = Expansion::division(&k.fraction()).expect("finite fraction");
    reduce(&e).0
}

/// The expansion of `p/q` (up to integer part) whose coefficients are all
/// even. Its length is `2 g(K)`; the unknot gets the empty expansion.
pub fn even_expansion(k: &KnotId) -> Expansion {
    if k.is_unknot() {
        return Expansion::new(0, Vec::<i64>::new());
    }
    let q = k.q().clone();
    let p = if k.p().is_even() {
        k.p().clone()
    } else {
        k.p() - &q
    };
    let r = (k.p() - &p) / &q;
    // x = r + p/q, so the tail is y = q/p. Each step picks the even b with
    // |bB - A| < |B|; A and B alternate parity, so A/B is never an odd integer.
    let (mut a, mut b) = (q, p);
    let mut coefficients = Vec::new();
    while !b.is_zero() {
        let c = nearest_even(&a, &b);
        let rem = &c * &b - &a;
        coefficients.push(c);
        a = std::mem::replace(&mut b, rem);
    }
    debug_assert!(coefficients.len() % 2 == 0);
    Expansion {
        integer_part: r,
        coefficients,
    }
}

/// The even integer `c` with `|c b - a| < |b|`. Requires `a/b` not to be an
/// odd integer.
fn nearest_even(a: &BigInt, b: &BigInt) -> BigInt {
    let (a, b) = if b.is_negative() {
        (-a, -b)
    } else {
        (a.clone(), b.clone())
    };
    // c in (a/b - 1, a/b + 1); take floor((a + b) / 2b) * 2
    let two_b = &b * 2;
    let c = (&a + &b).div_floor(&two_b) * 2;
    debug_assert!(BigInt::abs(&(&c * &b - &a)) < b);
    c
}

pub fn genus(k: &KnotId) -> usize {
    even_expansion(k).len() / 2
}

/// Length `n` of the reduced expansion, plus one when that expansion has
/// only even coefficients, none of them `±2`.
pub fn crosscap(k: &KnotId) -> usize {
    if k.is_unknot() {
        return 0;
    }
    let e = reduced_expansion(k);
    if e.is_odd_type() || e.has_two() {
        e.len()
    } else {
        e.len() + 1
    }
}

/// Whether `γ = 2g + 1`, decided from the even expansion alone: true iff it
/// has no coefficient `±2`.
pub fn gamma_equals_2g_plus_1(k: &KnotId) -> Result<bool, DomainError> {
    if k.is_unknot() {
        return Err(DomainError(
            "the unknot has no even expansion to test".into(),
        ));
    }
    Ok(!even_expansion(k).has_two())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BoundaryClass {
    BoundaryIncompressible,
    BoundaryCompressible,
    Trivial,
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::BoundaryIncompressible => "BoundaryIncompressible",
            Self::BoundaryCompressible => "BoundaryCompressible",
            Self::Trivial => "Trivial",
        };
        f.write_str(s)
    }
}

/// Whether a minimal-genus non-orientable spanning surface is boundary
/// incompressible: iff some shortest expansion has odd type. Decided by the
/// syntactic test on the reduced expansion; see
/// [`boundary_classification_by_closure`] for the enumerating route.
pub fn boundary_classification(k: &KnotId) -> BoundaryClass {
    if k.is_unknot() {
        return BoundaryClass::Trivial;
    }
    let e = reduced_expansion(k);
    if e.is_odd_type() || e.has_two() {
        BoundaryClass::BoundaryIncompressible
    } else {
        BoundaryClass::BoundaryCompressible
    }
}

/// Same classification, by searching the rectangle-move closure of the
/// shortest expansions for an odd-type member.
pub fn boundary_classification_by_closure(k: &KnotId) -> BoundaryClass {
    if k.is_unknot() {
        return BoundaryClass::Trivial;
    }
    let set = all_shortest_expansions(&k.fraction()).expect("non-integer fraction");
    if set.has_odd_type() {
        BoundaryClass::BoundaryIncompressible
    } else {
        BoundaryClass::BoundaryCompressible
    }
}

/// Surface made by plumbing twisted bands in a row, band `i` having `b_i`
/// half-twists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlumbingSurface {
    #[serde(serialize_with = "ser_ints")]
    pub bands: Vec<BigInt>,
    pub first_betti: usize,
    pub orientable: bool,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_string()))
}

pub fn plumbing_surface(e: &Expansion) -> Result<PlumbingSurface, DomainError> {
    if let Some(i) = e.coefficients.iter().position(Zero::is_zero) {
        return Err(DomainError(format!(
            "band {} of {e} has zero twists",
            i + 1
        )));
    }
    Ok(PlumbingSurface {
        bands: e.coefficients.clone(),
        first_betti: e.len(),
        orientable: e.is_even_type(),
    })
}

/// Coefficients `[m, 4, 4, ..., 4]` of length `n`.
pub fn family_expansion(m: i64, n: usize) -> Expansion {
    assert!(n >= 1, "family needs n >= 1");
    Expansion::new(0, std::iter::once(m).chain(std::iter::repeat_n(4, n - 1)))
}

/// The knot `K_{m,n}` of `[m, 4, 4, ..., 4]` (length `n`).
///
/// # Panics
/// If `n == 0` or `m < 3`.
pub fn family_k_mn(m: i64, n: usize) -> KnotId {
    assert!(m >= 3, "family needs m >= 3");
    KnotId::from_fraction(&family_expansion(m, n).eval()).expect("odd denominator")
}

/// Everything computed about one knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub knot: KnotId,
    pub crosscap: usize,
    pub genus: usize,
    pub reduced: Expansion,
    pub even_expansion: Expansion,
    pub odd_shortest_exists: bool,
    pub boundary: BoundaryClass,
}

impl InvariantReport {
    pub fn new(k: &KnotId) -> Self {
        let reduced = reduced_expansion(k);
        let even = even_expansion(k);
        let odd_shortest_exists = !k.is_unknot() && (reduced.is_odd_type() || reduced.has_two());
        Self {
            knot: k.clone(),
            crosscap: crosscap(k),
            genus: even.len() / 2,
            reduced,
            even_expansion: even,
            odd_shortest_exists,
            boundary: boundary_classification(k),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Flat `key=value` lines.
impl fmt::Display for InvariantReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "knot={}", self.knot)?;
        writeln!(f, "crosscap={}", self.crosscap)?;
        writeln!(f, "genus={}", self.genus)?;
        writeln!(f, "reduced={}", self.reduced)?;
        writeln!(f, "even_expansion={}", self.even_expansion)?;
        writeln!(f, "odd_shortest_exists={}", self.odd_shortest_exists)?;
        writeln!(f, "boundary={}", self.boundary)
    }
}

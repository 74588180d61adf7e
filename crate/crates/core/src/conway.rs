//! Conway diagrams whose checkerboard surface realizes the crosscap number.
//!
//! A diagram is a row of twist regions `C(t_1, ..., t_k)`; it represents the
//! knot of the subtractive expansion `[t_1, ..., t_k]`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{DomainError, ParseError};
use crate::expansion::Expansion;
use crate::invariants::{crosscap, reduced_expansion};
use crate::knot::{same_knot, KnotId};
use crate::modular::{rectangle_move, two_positions};
use crate::parse::Cursor;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConwayDiagram {
    #[serde(serialize_with = "ser_ints")]
    pub twist_regions: Vec<BigInt>,
    /// The odd-type expansion `C` the diagram was built from.
    pub source_expansion: Expansion,
    /// Built from the negated expansion and negated back.
    pub mirrored: bool,
}

fn ser_ints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|b| b.to_string()))
}

impl ConwayDiagram {
    /// A bare diagram, e.g. one read from text.
    pub fn from_regions(twist_regions: Vec<BigInt>) -> Self {
        let source_expansion = Expansion {
            integer_part: BigInt::zero(),
            coefficients: twist_regions.clone(),
        };
        Self {
            twist_regions,
            source_expansion,
            mirrored: false,
        }
    }

    pub fn region_count(&self) -> usize {
        self.twist_regions.len()
    }

    /// Fraction convention: the regions read as subtractive coefficients.
    pub fn expansion(&self) -> Expansion {
        Expansion {
            integer_part: BigInt::zero(),
            coefficients: self.twist_regions.clone(),
        }
    }

    /// The knot the diagram draws; `None` for a 2-component link.
    pub fn knot(&self) -> Option<KnotId> {
        KnotId::from_fraction(&self.expansion().eval()).ok()
    }

    /// Builds the diagram from an odd-type expansion `C = [a_1, b_1, a_2, ...]`
    /// of length `γ`, interleaving it as
    /// `[a_1 - 1, -1, b_1, 1, a_2, -1, b_2, 1, ...]`, which ends in
    /// `a_last + 1` for odd `γ` and in `1` for even `γ`. When that would
    /// create a zero region, builds from `-C` and negates.
    pub fn from_odd_expansion(c: &Expansion) -> Result<Self, DomainError> {
        if !c.integer_part.is_zero() {
            return Err(DomainError(format!("{c} has a nonzero integer part")));
        }
        if c.is_empty() {
            return Err(DomainError("empty expansion".into()));
        }
        if c.len() == 1 {
            return Ok(Self {
                twist_regions: c.coefficients.clone(),
                source_expansion: c.clone(),
                mirrored: false,
            });
        }
        let primary = interleave(&c.coefficients);
        if primary.iter().all(|t| !t.is_zero()) {
            return Ok(Self {
                twist_regions: primary,
                source_expansion: c.clone(),
                mirrored: false,
            });
        }
        let negated: Vec<BigInt> = c.coefficients.iter().map(|b| -b).collect();
        let regions: Vec<BigInt> = interleave(&negated).into_iter().map(|t| -t).collect();
        if regions.iter().any(Zero::is_zero) {
            return Err(DomainError(format!(
                "{c} yields a zero twist region in both orientations"
            )));
        }
        Ok(Self {
            twist_regions: regions,
            source_expansion: c.clone(),
            mirrored: true,
        })
    }
}

fn interleave(c: &[BigInt]) -> Vec<BigInt> {
    let one = BigInt::one();
    let last = c.len() - 1;
    let mut out = Vec::with_capacity(2 * c.len());
    for (i, x) in c.iter().enumerate() {
        let is_a = i % 2 == 0;
        if i == last && is_a {
            out.push(x + &one);
            break;
        }
        out.push(if i == 0 { x - &one } else { x.clone() });
        out.push(if is_a { -&one } else { one.clone() });
    }
    out
}

impl fmt::Display for ConwayDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("C(")?;
        for (i, t) in self.twist_regions.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")?;
        if self.mirrored {
            f.write_str("!m")?;
        }
        Ok(())
    }
}

/// Reads `C(t1,...,tk)` with an optional `!m` suffix. The source expansion is
/// not part of the text and is set to the regions themselves.
impl FromStr for ConwayDiagram {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = Cursor::new(s);
        cur.expect('C')?;
        cur.expect('(')?;
        let mut regions = Vec::new();
        loop {
            regions.push(cur.int()?);
            if cur.eat(')') {
                break;
            }
            if !cur.eat(',') {
                return Err(cur.unexpected("',' or ')'"));
            }
        }
        let mirrored = if cur.eat('!') {
            cur.expect('m')?;
            true
        } else {
            false
        };
        cur.finish()?;
        let mut d = Self::from_regions(regions);
        d.mirrored = mirrored;
        Ok(d)
    }
}

/// An odd-type expansion of length `γ(K)` and integer part 0 whose value is
/// `p/q` up to an integer.
pub fn odd_shortest_expansion(k: &KnotId) -> Result<Expansion, DomainError> {
    if k.is_unknot() {
        return Err(DomainError("the unknot has no odd-type expansion".into()));
    }
    // Integer parts are dropped throughout: p/q and p/q + 1 are the same knot.
    let mut reduced = reduced_expansion(k);
    reduced.integer_part = BigInt::zero();
    if reduced.is_odd_type() {
        return Ok(reduced);
    }
    if reduced.has_two() {
        // a move at a ±2 makes its even neighbours odd
        let pos = *two_positions(&reduced).last().expect("has a ±2");
        let mut moved = rectangle_move(&reduced, pos).expect("±2 at pos");
        debug_assert!(moved.is_odd_type());
        moved.integer_part = BigInt::zero();
        return Ok(moved);
    }
    // γ = n + 1: [..., a] = [..., a + 1, 1]
    let mut split = reduced;
    let last = split.coefficients.last_mut().expect("non-integer fraction");
    *last += 1;
    split.coefficients.push(BigInt::one());
    Ok(split)
}

/// The diagram realizing `γ(K)` for `k`.
pub fn conway_diagram(k: &KnotId) -> Result<ConwayDiagram, DomainError> {
    let c = odd_shortest_expansion(k)?;
    debug_assert!(c.coefficients.iter().filter(|b| b.abs().is_one()).count() <= 1);
    ConwayDiagram::from_odd_expansion(&c)
}

/// Outcome of checking a diagram against a knot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramVerdict {
    /// The knot the diagram evaluates to, if any.
    pub represents: Option<KnotId>,
    pub knot_matches: bool,
    pub region_count: usize,
    /// `2γ - 1` for odd `γ`, `2γ` for even `γ`.
    pub expected_regions: usize,
    pub no_zero_region: bool,
    pub notes: Vec<String>,
}

impl DiagramVerdict {
    pub fn ok(&self) -> bool {
        self.knot_matches && self.region_count == self.expected_regions && self.no_zero_region
    }
}

impl fmt::Display for DiagramVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.represents {
            Some(k) => writeln!(f, "represents={k}")?,
            None => writeln!(f, "represents=link")?,
        }
        writeln!(f, "knot_matches={}", self.knot_matches)?;
        writeln!(
            f,
            "regions={} expected={}",
            self.region_count, self.expected_regions
        )?;
        writeln!(f, "no_zero_region={}", self.no_zero_region)?;
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        writeln!(f, "verdict={}", if self.ok() { "ok" } else { "FAIL" })
    }
}

/// Expected number of twist regions for crosscap number `gamma`.
pub fn expected_region_count(gamma: usize) -> usize {
    match gamma {
        0 => 0,
        g if g % 2 == 1 => 2 * g - 1,
        g => 2 * g,
    }
}

/// Checks that `d` draws `k` (strictly, not up to mirror image; the fallback
/// construction negates twice so it lands on `k` itself) and that it has the
/// region count that `γ(k)` predicts.
pub fn verify_diagram(d: &ConwayDiagram, k: &KnotId) -> DiagramVerdict {
    let mut notes = Vec::new();
    let represents = d.knot();
    let knot_matches = match &represents {
        Some(r) => {
            let m = same_knot(r, k);
            if !m && same_knot(&r.mirror(), k) {
                notes.push(format!("diagram draws the mirror image {r}"));
            }
            m
        }
        None => {
            notes.push(format!("{} evaluates to a link", d.expansion().eval()));
            false
        }
    };
    let no_zero_region = d.twist_regions.iter().all(|t| !t.is_zero());
    if !no_zero_region {
        notes.push("zero twist region".into());
    }
    if d.mirrored {
        notes.push("built from the negated expansion".into());
    }
    DiagramVerdict {
        represents,
        knot_matches,
        region_count: d.region_count(),
        expected_regions: expected_region_count(crosscap(k)),
        no_zero_region,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::AdditiveExpansion;

    fn k(q: i64, p: i64) -> KnotId {
        KnotId::new(q, p).unwrap()
    }

    fn ex(c: &[i64]) -> Expansion {
        Expansion::new(0, c.iter().copied())
    }

    fn diagram(c: &[i64]) -> ConwayDiagram {
        ConwayDiagram::from_regions(c.iter().map(|&t| BigInt::from(t)).collect())
    }

    #[test]
    fn odd_shortest_examples() {
        assert_eq!(odd_shortest_expansion(&k(9, 2)).unwrap(), ex(&[5, 2]));
        assert_eq!(odd_shortest_expansion(&k(15, 4)).unwrap(), ex(&[4, 5, 1]));
        assert_eq!(odd_shortest_expansion(&k(5, 2)).unwrap(), ex(&[3, 2]));
        assert!(odd_shortest_expansion(&KnotId::unknot()).is_err());
    }

    #[test]
    fn construction_examples() {
        let d = conway_diagram(&k(15, 4)).unwrap();
        assert_eq!(d.to_string(), "C(3,-1,5,1,2)");
        assert!(verify_diagram(&d, &k(15, 4)).ok());

        let d = conway_diagram(&k(3, 1)).unwrap();
        assert_eq!(d.to_string(), "C(3)");

        let d = conway_diagram(&k(5, 2)).unwrap();
        assert_eq!(d.to_string(), "C(2,-1,2,1)");
        assert!(verify_diagram(&d, &k(5, 2)).ok());
    }

    #[test]
    fn fallback_on_leading_one() {
        // C = [1, -4]: a_1 - 1 = 0 forces the negated construction
        let c = ex(&[1, -4]);
        let d = ConwayDiagram::from_odd_expansion(&c).unwrap();
        assert!(d.mirrored);
        assert_eq!(d.to_string(), "C(2,1,-4,-1)!m");
        let target = KnotId::from_fraction(&c.eval()).unwrap();
        assert!(same_knot(&d.knot().unwrap(), &target));
    }

    #[test]
    fn published_diagrams_of_7_4() {
        for regions in [[2, 1, 5, -1, 3], [4, 1, 1, 1, 4]] {
            let v = verify_diagram(&diagram(&regions), &k(15, 4));
            assert!(v.ok(), "{regions:?}: {v}");
        }
        assert!(verify_diagram(&diagram(&[3]), &k(3, 1)).ok());
    }

    /// Evaluating the regions as a subtractive expansion, front to back, is
    /// the one reading under which both published 7_4 diagrams and the
    /// trefoil verify strictly. Reversal also works (it replaces `p` by
    /// `p^{-1}`); the additive readings do not.
    #[test]
    fn fraction_convention() {
        let cases: [(&[i64], KnotId); 3] = [
            (&[2, 1, 5, -1, 3], k(15, 4)),
            (&[4, 1, 1, 1, 4], k(15, 4)),
            (&[3], k(3, 1)),
        ];
        type Reading = fn(&[i64]) -> Option<KnotId>;
        let readings: [(&str, Reading); 4] = [
            ("subtractive", |c| KnotId::from_fraction(&ex(c).eval()).ok()),
            ("subtractive reversed", |c| {
                let r: Vec<i64> = c.iter().rev().copied().collect();
                KnotId::from_fraction(&ex(&r).eval()).ok()
            }),
            ("additive", |c| {
                KnotId::from_fraction(&AdditiveExpansion::new(0, c.iter().copied()).eval()).ok()
            }),
            ("additive reversed", |c| {
                let e = AdditiveExpansion::new(0, c.iter().rev().copied());
                KnotId::from_fraction(&e.eval()).ok()
            }),
        ];
        let verifying: Vec<&str> = readings
            .iter()
            .filter(|(_, read)| {
                cases
                    .iter()
                    .all(|(c, knot)| read(c).is_some_and(|r| same_knot(&r, knot)))
            })
            .map(|(name, _)| *name)
            .collect();
        assert_eq!(verifying, ["subtractive", "subtractive reversed"]);
    }

    #[test]
    fn region_counts() {
        assert_eq!(expected_region_count(1), 1);
        assert_eq!(expected_region_count(2), 4);
        assert_eq!(expected_region_count(3), 5);
        assert_eq!(expected_region_count(4), 8);
    }

    #[test]
    fn verdict_flags_wrong_knot() {
        let v = verify_diagram(&diagram(&[5]), &k(3, 1));
        assert!(!v.ok());
        let v = verify_diagram(&diagram(&[2]), &k(3, 1));
        assert!(!v.knot_matches);
        assert_eq!(v.represents, None);
    }

    #[test]
    fn text_round_trip() {
        for s in ["C(3,-1,5,1,2)", "C(3)", "C(-2,1,-3,-1)!m"] {
            let d: ConwayDiagram = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!("C()".parse::<ConwayDiagram>().is_err());
        assert!("C(1,2".parse::<ConwayDiagram>().is_err());
        assert!("C(1)!x".parse::<ConwayDiagram>().is_err());
    }
}

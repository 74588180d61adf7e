//! Text forms of fractions and expansions.
//!
//! ```text
//! fraction  := int "/" posint | int        (1/0 is the only zero-denominator literal)
//! expansion := [ int "+" ] "[" [ int ("," int)* ] "]"
//! ```
//!
//! Whitespace is ignored everywhere.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::ParseError;
use crate::expansion::Expansion;
use crate::rational::ExtendedRational;

/// Character cursor over the non-whitespace content of the input, keeping
/// original byte offsets for error reporting.
pub(crate) struct Cursor {
    chars: Vec<(usize, char)>,
    idx: usize,
    len: usize,
}

impl Cursor {
    pub(crate) fn new(src: &str) -> Self {
        Self {
            chars: src
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            idx: 0,
            len: src.len(),
        }
    }

    pub(crate) fn pos(&self) -> usize {
        self.chars.get(self.idx).map_or(self.len, |&(p, _)| p)
    }

    pub(crate) fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).map(|&(_, c)| c)
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.idx += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    pub(crate) fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(c) => ParseError::new(self.pos(), format!("expected {wanted}, found '{c}'")),
            None => ParseError::new(self.pos(), format!("expected {wanted}, found end of input")),
        }
    }

    pub(crate) fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(ParseError::new(self.pos(), format!("trailing input '{c}'"))),
        }
    }

    /// Optionally signed decimal integer.
    pub(crate) fn int(&mut self) -> Result<BigInt, ParseError> {
        let negative = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut digits = String::new();
        let mut next_pos = self.pos();
        // digits must be adjacent in the source: "2 3" is two tokens
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            if self.pos() != next_pos {
                break;
            }
            digits.push(c);
            self.idx += 1;
            next_pos += 1;
        }
        if digits.is_empty() {
            return Err(self.unexpected("a digit"));
        }
        let n: BigInt = digits.parse().expect("ascii digits");
        Ok(if negative { -n } else { n })
    }
}

pub fn parse_fraction(text: &str) -> Result<ExtendedRational, ParseError> {
    let mut cur = Cursor::new(text);
    let numer_pos = cur.pos();
    let numer = cur.int()?;
    let denom = if cur.eat('/') {
        let pos = cur.pos();
        if cur.peek() == Some('-') {
            return Err(ParseError::new(pos, "denominator must be non-negative"));
        }
        let d = cur.int()?;
        if d.is_zero() && !numer.is_one() {
            return Err(ParseError::new(
                numer_pos,
                "zero denominator: only 1/0 names infinity",
            ));
        }
        d
    } else {
        BigInt::one()
    };
    cur.finish()?;
    Ok(ExtendedRational::new(numer, denom).expect("0/0 excluded above"))
}

pub fn parse_expansion(text: &str) -> Result<Expansion, ParseError> {
    let mut cur = Cursor::new(text);
    let integer_part = if cur.peek() == Some('[') {
        BigInt::zero()
    } else {
        let r = cur.int()?;
        cur.expect('+')?;
        r
    };
    cur.expect('[')?;
    let mut coefficients = Vec::new();
    if !cur.eat(']') {
        loop {
            coefficients.push(cur.int()?);
            if cur.eat(']') {
                break;
            }
            if !cur.eat(',') {
                return Err(cur.unexpected("',' or ']'"));
            }
        }
    }
    cur.finish()?;
    Ok(Expansion {
        integer_part,
        coefficients,
    })
}

pub fn format_fraction(x: &ExtendedRational) -> String {
    x.to_string()
}

pub fn format_expansion(e: &Expansion) -> String {
    e.to_string()
}

impl FromStr for ExtendedRational {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_fraction(s)
    }
}

impl FromStr for Expansion {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expansion(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn fractions() {
        assert_eq!(
            parse_fraction("2/9").unwrap(),
            ExtendedRational::new(2, 9).unwrap()
        );
        assert_eq!(
            parse_fraction(" -4 / 6 ").unwrap(),
            ExtendedRational::new(-2, 3).unwrap()
        );
        assert_eq!(parse_fraction("1/0").unwrap(), ExtendedRational::infinity());
        assert_eq!(parse_fraction("7").unwrap(), ExtendedRational::integer(7));
    }

    #[test]
    fn fraction_errors() {
        let err = parse_fraction("3/0").unwrap_err();
        assert_eq!(err.position, 0);
        assert!(parse_fraction("-1/0").is_err());
        assert!(parse_fraction("2/-3").is_err());
        assert_eq!(parse_fraction("2/x").unwrap_err().position, 2);
        assert_eq!(parse_fraction("2/3 4").unwrap_err().position, 4);
        assert!(parse_fraction("").is_err());
    }

    #[test]
    fn expansions() {
        assert_eq!(
            parse_expansion("1+[-2,-2]").unwrap(),
            Expansion::new(1, [-2, -2])
        );
        assert_eq!(parse_expansion("[3,2]").unwrap(), Expansion::new(0, [3, 2]));
        assert_eq!(
            parse_expansion(" [ 3 , 2 ] ").unwrap(),
            Expansion::new(0, [3, 2])
        );
        assert_eq!(
            parse_expansion("-3+[]").unwrap(),
            Expansion::new(-3, Vec::<i64>::new())
        );
        assert_eq!(
            parse_expansion("[]").unwrap(),
            Expansion::new(0, Vec::<i64>::new())
        );
    }

    #[test]
    fn expansion_errors() {
        assert_eq!(parse_expansion("[3,,2]").unwrap_err().position, 3);
        assert_eq!(parse_expansion("1[3]").unwrap_err().position, 1);
        assert!(parse_expansion("[3,2").is_err());
        assert!(parse_expansion("[3;2]").is_err());
        assert!(parse_expansion("[3]x").is_err());
    }

    proptest! {
        #[test]
        fn expansion_round_trip(r in -50i64..50, bs in prop::collection::vec(-99i64..99, 0..12)) {
            let e = Expansion::new(r, bs);
            prop_assert_eq!(parse_expansion(&format_expansion(&e)).unwrap(), e);
        }

        #[test]
        fn fraction_round_trip(n in -10_000i64..10_000, d in 0i64..10_000) {
            if let Ok(x) = ExtendedRational::new(n, d) {
                prop_assert_eq!(parse_fraction(&format_fraction(&x)).unwrap(), x);
            }
        }
    }
}

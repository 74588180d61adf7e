//! Length reduction of subtractive expansions by three rewrite rules:
//!
//! 1. remove a coefficient `0`;
//! 2. remove a coefficient `ε = ±1`;
//! 3. replace a block `2ε, 3ε, ..., 3ε, 2ε` of length `m >= 2` by
//!    `m - 1` copies of `-3ε`, shifting both neighbours by `-ε`.
//!
//! Each rule has interior, tail and head variants; head variants move the
//! adjustment into the integer part. Once none applies, the expansion has the
//! minimal length among all expansions of its value.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{ParseError, PatternMismatch};
use crate::expansion::{Expansion, Sign};
use crate::parse::parse_expansion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    RemoveZero,
    RemoveUnit,
    RemoveBlock,
}

/// One rewrite. Positions are 1-based coefficient indices; for blocks the
/// position is that of the leading `2ε`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ReductionStep {
    RemoveZero {
        position: usize,
    },
    RemoveUnit {
        position: usize,
        epsilon: Sign,
    },
    RemoveBlock {
        position: usize,
        epsilon: Sign,
        length: usize,
    },
}

impl ReductionStep {
    pub fn rule(&self) -> Rule {
        match self {
            ReductionStep::RemoveZero { .. } => Rule::RemoveZero,
            ReductionStep::RemoveUnit { .. } => Rule::RemoveUnit,
            ReductionStep::RemoveBlock { .. } => Rule::RemoveBlock,
        }
    }

    pub fn position(&self) -> usize {
        match *self {
            ReductionStep::RemoveZero { position }
            | ReductionStep::RemoveUnit { position, .. }
            | ReductionStep::RemoveBlock { position, .. } => position,
        }
    }
}

fn is_unit(b: &BigInt) -> Option<Sign> {
    if b.abs() == BigInt::from(1) {
        Sign::of(b)
    } else {
        None
    }
}

/// Length of the block `2ε, 3ε, ..., 3ε, 2ε` starting at 0-based `start`.
fn block_at(coeffs: &[BigInt], start: usize) -> Option<(Sign, usize)> {
    let first = coeffs.get(start)?;
    let eps = Sign::of(first)?;
    if *first != eps.times(2) {
        return None;
    }
    let three = eps.times(3);
    let two = eps.times(2);
    let mut j = start + 1;
    while j < coeffs.len() && coeffs[j] == three {
        j += 1;
    }
    (j < coeffs.len() && coeffs[j] == two).then_some((eps, j - start + 1))
}

/// Every step that applies somewhere in `e`, in rule-priority order and left
/// to right within each rule.
pub fn applicable_steps(e: &Expansion) -> Vec<ReductionStep> {
    let c = &e.coefficients;
    let mut steps = Vec::new();
    // a lone [0] is the irreducible form of 1/0
    if c.len() >= 2 {
        steps.extend(
            c.iter()
                .enumerate()
                .filter(|(_, b)| b.is_zero())
                .map(|(i, _)| ReductionStep::RemoveZero { position: i + 1 }),
        );
    }
    steps.extend(c.iter().enumerate().filter_map(|(i, b)| {
        is_unit(b).map(|epsilon| ReductionStep::RemoveUnit {
            position: i + 1,
            epsilon,
        })
    }));
    steps.extend((0..c.len()).filter_map(|i| {
        block_at(c, i).map(|(epsilon, length)| ReductionStep::RemoveBlock {
            position: i + 1,
            epsilon,
            length,
        })
    }));
    steps
}

/// Leftmost applicable step, preferring zeros over units over blocks.
pub fn scan_for_step(e: &Expansion) -> Option<ReductionStep> {
    applicable_steps(e).into_iter().next()
}

pub fn is_fixpoint(e: &Expansion) -> bool {
    scan_for_step(e).is_none()
}

fn mismatch(e: &Expansion, what: String) -> PatternMismatch {
    PatternMismatch(format!("{what} in {e}"))
}

/// Rewrites `e` by `step`, checking that the step's pattern is present.
pub fn apply_rule(e: &Expansion, step: &ReductionStep) -> Result<Expansion, PatternMismatch> {
    let n = e.len();
    let pos = step.position();
    if pos == 0 || pos > n {
        return Err(mismatch(e, format!("position {pos} out of range 1..={n}")));
    }
    let i = pos - 1;
    let mut r = e.integer_part.clone();
    let mut c = e.coefficients.clone();
    match *step {
        ReductionStep::RemoveZero { .. } => {
            if !c[i].is_zero() {
                return Err(mismatch(e, format!("coefficient {pos} is not 0")));
            }
            if n < 2 {
                return Err(mismatch(e, "a single 0 cannot be removed".into()));
            }
            if i == 0 {
                // [0, a, b, ...] = -a + [b, ...]
                r -= &c[1];
                c.drain(0..2);
            } else if i == n - 1 {
                // [..., a, b, 0] = [..., a]
                c.truncate(n - 2);
            } else {
                // [..., a, 0, b, ...] = [..., a + b, ...]
                let b = c[i + 1].clone();
                c[i - 1] += b;
                c.drain(i..i + 2);
            }
        }
        ReductionStep::RemoveUnit { epsilon, .. } => {
            if is_unit(&c[i]) != Some(epsilon) {
                return Err(mismatch(e, format!("coefficient {pos} is not {epsilon}")));
            }
            let eps = epsilon.times(1);
            if i == 0 {
                // r + [ε, a, ...] = (r + ε) + [a - ε, ...], and r + [ε] = r + ε
                r += &eps;
            } else {
                c[i - 1] -= &eps;
            }
            if i + 1 < n {
                c[i + 1] -= &eps;
            }
            c.remove(i);
        }
        ReductionStep::RemoveBlock {
            epsilon, length, ..
        } => {
            match block_at(&c, i) {
                Some((s, m)) if s == epsilon && m == length => {}
                _ => {
                    return Err(mismatch(
                        e,
                        format!("no block 2ε,3ε..,2ε with ε={epsilon}, m={length} at {pos}"),
                    ))
                }
            }
            let eps = epsilon.times(1);
            let end = i + length - 1;
            if i == 0 {
                r += &eps;
            } else {
                c[i - 1] -= &eps;
            }
            if end + 1 < n {
                c[end + 1] -= &eps;
            }
            let middle = vec![epsilon.times(-3); length - 1];
            c.splice(i..=end, middle);
        }
    }
    Ok(Expansion {
        integer_part: r,
        coefficients: c,
    })
}

/// Record of a reduction: the starting expansion and each step with the
/// expansion it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionTrace {
    pub initial: Expansion,
    pub steps: Vec<(ReductionStep, Expansion)>,
}

impl ReductionTrace {
    pub fn new(initial: Expansion) -> Self {
        Self {
            initial,
            steps: Vec::new(),
        }
    }

    pub fn result(&self) -> &Expansion {
        self.steps.last().map_or(&self.initial, |(_, e)| e)
    }

    /// Re-applies every step and checks it reproduces the recorded output.
    pub fn replay(&self) -> Result<(), PatternMismatch> {
        let mut cur = self.initial.clone();
        for (k, (step, recorded)) in self.steps.iter().enumerate() {
            let next = apply_rule(&cur, step)?;
            if &next != recorded {
                return Err(PatternMismatch(format!(
                    "step {} produced {next}, trace records {recorded}",
                    k + 1
                )));
            }
            cur = next;
        }
        Ok(())
    }

    /// Reads the line format written by `Display`, starting from `initial`.
    pub fn parse(initial: Expansion, text: &str) -> Result<Self, ParseError> {
        let mut trace = Self::new(initial);
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let (step, rest) = line
                .split_once('|')
                .ok_or_else(|| ParseError::new(0, format!("missing '|' in {line:?}")))?;
            trace.steps.push((step.parse()?, parse_expansion(rest)?));
        }
        Ok(trace)
    }
}

/// One line per step: `rule pos eps m | resulting-expansion`, with `-` for
/// fields a rule does not use.
impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (step, e) in &self.steps {
            writeln!(f, "{step} | {e}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ReductionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionStep::RemoveZero { position } => write!(f, "RemoveZero {position} - -"),
            ReductionStep::RemoveUnit { position, epsilon } => {
                write!(f, "RemoveUnit {position} {epsilon} -")
            }
            ReductionStep::RemoveBlock {
                position,
                epsilon,
                length,
            } => write!(f, "RemoveBlock {position} {epsilon} {length}"),
        }
    }
}

impl FromStr for ReductionStep {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        let bad = |msg: &str| ParseError::new(0, format!("{msg} in step {s:?}"));
        let [rule, pos, eps, m] = fields[..] else {
            return Err(bad("expected 4 fields"));
        };
        let position: usize = pos.parse().map_err(|_| bad("bad position"))?;
        let epsilon = || match eps {
            "1" | "+1" => Ok(Sign::Plus),
            "-1" => Ok(Sign::Minus),
            _ => Err(bad("bad epsilon")),
        };
        match rule {
            "RemoveZero" => Ok(ReductionStep::RemoveZero { position }),
            "RemoveUnit" => Ok(ReductionStep::RemoveUnit {
                position,
                epsilon: epsilon()?,
            }),
            "RemoveBlock" => Ok(ReductionStep::RemoveBlock {
                position,
                epsilon: epsilon()?,
                length: m.parse().map_err(|_| bad("bad block length"))?,
            }),
            _ => Err(bad("unknown rule")),
        }
    }
}

/// Reduces with a caller-chosen strategy: `choose` receives every applicable
/// step and returns the index of the one to apply.
pub fn reduce_with<F>(e: &Expansion, mut choose: F) -> (Expansion, ReductionTrace)
where
    F: FnMut(&[ReductionStep]) -> usize,
{
    let mut trace = ReductionTrace::new(e.clone());
    let mut cur = e.clone();
    loop {
        let steps = applicable_steps(&cur);
        if steps.is_empty() {
            return (cur, trace);
        }
        let step = steps[choose(&steps)].clone();
        cur = apply_rule(&cur, &step).expect("applicable step matches");
        trace.steps.push((step, cur.clone()));
    }
}

/// Reduces to a fixpoint with the deterministic leftmost/priority strategy.
pub fn reduce(e: &Expansion) -> (Expansion, ReductionTrace) {
    reduce_with(e, |_| 0)
}

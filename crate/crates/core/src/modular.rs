//! The modular (Farey) diagram: vertices are `Q ∪ {1/0}`, and each fraction
//! `p/q` with `q >= 2` is the mediant child of exactly one pair of Farey
//! neighbours.
//!
//! Depth is defined by `d = 0` on the integers and `1/0`, and
//! `d(child) = min(d(parent_1), d(parent_2)) + 1`. It equals the minimal
//! length of a subtractive expansion, which makes it an oracle for the
//! reducer that shares no code with it.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{DomainError, NotFound, PatternMismatch};
use crate::expansion::{Expansion, Sign};
use crate::rational::{mod_inverse, ExtendedRational};
use crate::reducer::reduce;

/// Depth of a diagram vertex.
pub type Depth = u32;

/// The two Farey parents `a/b < c/d` of `p/q`, `0 < p/q < 1`, with
/// `a + c = p`, `b + d = q` and `a q - b p = -1`.
pub fn farey_parents(
    x: &ExtendedRational,
) -> Result<(ExtendedRational, ExtendedRational), DomainError> {
    if !x.in_unit_interval() {
        return Err(DomainError(format!(
            "Farey parents need 0 < x < 1, got {x}"
        )));
    }
    let (p, q) = (x.numer(), x.denom());
    let ((a, b), (c, d)) = parents_raw(p, q);
    Ok((
        ExtendedRational::new(a, b).expect("b > 0"),
        ExtendedRational::new(c, d).expect("d > 0"),
    ))
}

fn parents_raw(p: &BigInt, q: &BigInt) -> ((BigInt, BigInt), (BigInt, BigInt)) {
    let b = mod_inverse(p, q).expect("p/q in lowest terms");
    let a = (p * &b - BigInt::one()) / q;
    let c = p - &a;
    let d = q - &b;
    ((a, b), (c, d))
}

/// Memoized depth computation. Queries are normalized into `(0, 1/2]` by
/// `x -> x - floor(x)` and `x -> 1 - x`, so the memo only holds such keys.
#[derive(Debug, Default)]
pub struct DepthOracle {
    memo: HashMap<(BigInt, BigInt), Depth>,
}

impl DepthOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized vertices.
    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    /// `None` for depth-0 vertices (integers, `1/0`), else the memo key.
    fn key(numer: &BigInt, denom: &BigInt) -> Option<(BigInt, BigInt)> {
        if denom.is_zero() || denom.is_one() {
            return None;
        }
        let p = numer.mod_floor(denom);
        let reflected = denom - &p;
        Some((p.min(reflected), denom.clone()))
    }

    pub fn depth(&mut self, x: &ExtendedRational) -> Depth {
        match Self::key(x.numer(), x.denom()) {
            None => 0,
            Some(k) => self.depth_of_key(k),
        }
    }

    fn lookup(&self, v: &(BigInt, BigInt)) -> Option<Depth> {
        match Self::key(&v.0, &v.1) {
            None => Some(0),
            Some(k) => self.memo.get(&k).copied(),
        }
    }

    // Explicit stack: ancestor chains of 1/q are q long.
    fn depth_of_key(&mut self, key: (BigInt, BigInt)) -> Depth {
        if let Some(&d) = self.memo.get(&key) {
            return d;
        }
        let mut stack = vec![key.clone()];
        while let Some(top) = stack.last() {
            if self.memo.contains_key(top) {
                stack.pop();
                continue;
            }
            let (left, right) = parents_raw(&top.0, &top.1);
            match (self.lookup(&left), self.lookup(&right)) {
                (Some(0), _) | (_, Some(0)) => {
                    let top = stack.pop().expect("nonempty");
                    self.memo.insert(top, 1);
                }
                (Some(dl), Some(dr)) => {
                    let top = stack.pop().expect("nonempty");
                    self.memo.insert(top, dl.min(dr) + 1);
                }
                (dl, dr) => {
                    if dl.is_none() {
                        stack.extend(Self::key(&left.0, &left.1));
                    }
                    if dr.is_none() {
                        stack.extend(Self::key(&right.0, &right.1));
                    }
                }
            }
        }
        self.memo[&key]
    }
}

thread_local! {
    static ORACLE: RefCell<DepthOracle> = RefCell::new(DepthOracle::new());
}

/// Depth of `x`, using a per-thread memo.
pub fn depth(x: &ExtendedRational) -> Depth {
    ORACLE.with(|o| o.borrow_mut().depth(x))
}

/// Shortest-path criterion: the partial values `v_i = r + [b_1..b_i]` of a
/// shortest expansion have `depth(v_i) = i` for every `i`.
pub fn is_shortest(e: &Expansion) -> Result<bool, DomainError> {
    let v = e.eval();
    if v.is_infinite() || v.is_integer() {
        return Err(DomainError(format!(
            "shortest-path criterion needs a finite non-integer value, got {v}"
        )));
    }
    Ok(e.partial_values()
        .iter()
        .enumerate()
        .all(|(i, vi)| depth(vi) as usize == i))
}

/// Rectangle move at the `±2` coefficient in 1-based `position`:
///
/// ```text
/// [..., a, 2ε, b, ...]   = [..., a-ε, -2ε, b-ε, ...]
/// [..., a, 2ε]           = [..., a-ε, -2ε]
/// r + [2ε, a, ...]       = (r+ε) + [-2ε, a-ε, ...]
/// ```
///
/// Value and length are preserved and the move is an involution.
pub fn rectangle_move(e: &Expansion, position: usize) -> Result<Expansion, PatternMismatch> {
    let n = e.len();
    if position == 0 || position > n {
        return Err(PatternMismatch(format!(
            "position {position} out of range 1..={n} in {e}"
        )));
    }
    let i = position - 1;
    let eps = match Sign::of(&e.coefficients[i]) {
        Some(s) if e.coefficients[i] == s.times(2) => s,
        _ => {
            return Err(PatternMismatch(format!(
                "coefficient {position} of {e} is not ±2"
            )))
        }
    };
    let unit = eps.times(1);
    let mut out = e.clone();
    out.coefficients[i] = eps.times(-2);
    if i == 0 {
        out.integer_part += &unit;
    } else {
        out.coefficients[i - 1] -= &unit;
    }
    if i + 1 < n {
        out.coefficients[i + 1] -= &unit;
    }
    Ok(out)
}

/// 1-based positions holding `±2`.
pub fn two_positions(e: &Expansion) -> Vec<usize> {
    let two = BigInt::from(2);
    e.coefficients
        .iter()
        .enumerate()
        .filter(|(_, b)| b.abs() == two)
        .map(|(i, _)| i + 1)
        .collect()
}

/// All shortest expansions of one value, sorted by `(integer_part, coefficients)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestSet {
    pub value: ExtendedRational,
    pub expansions: Vec<Expansion>,
}

impl ShortestSet {
    pub fn shortest_length(&self) -> usize {
        self.expansions[0].len()
    }

    pub fn has_odd_type(&self) -> bool {
        self.expansions.iter().any(Expansion::is_odd_type)
    }
}

/// One expansion per line.
impl fmt::Display for ShortestSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.expansions {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Closure of a reduced expansion of `x` under rectangle moves. Any two
/// shortest expansions are connected by such moves, so one seed suffices.
pub fn all_shortest_expansions(x: &ExtendedRational) -> Result<ShortestSet, DomainError> {
    if x.is_infinite() || x.is_integer() {
        return Err(DomainError(format!(
            "shortest expansions need a finite non-integer value, got {x}"
        )));
    }
    let seed = reduce(&Expansion::division(x).expect("finite")).0;
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([seed]);
    while let Some(e) = queue.pop_front() {
        if seen.contains(&e) {
            continue;
        }
        for pos in two_positions(&e) {
            let next = rectangle_move(&e, pos).expect("±2 found at pos");
            if !seen.contains(&next) {
                queue.push_back(next);
            }
        }
        seen.insert(e);
    }
    Ok(ShortestSet {
        value: x.clone(),
        expansions: seen.into_iter().collect(),
    })
}

/// Table of minimal lengths of `0 + [b_1..b_n]` over all coefficient lists with
/// `n <= max_len` and `1 <= |b_i| <= bound`, found by plain enumeration.
#[derive(Debug)]
pub struct BruteForce {
    max_len: usize,
    bound: i64,
    min_len: HashMap<ExtendedRational, usize>,
}

impl BruteForce {
    pub fn new(max_len: usize, bound: i64) -> Self {
        let mut min_len = HashMap::new();
        let choices: Vec<i64> = (-bound..=bound).filter(|b| *b != 0).collect();
        let mut frontier: Vec<Vec<i64>> = vec![Vec::new()];
        for len in 1..=max_len {
            let mut next = Vec::with_capacity(frontier.len() * choices.len());
            for prefix in &frontier {
                for &b in &choices {
                    let mut c = prefix.clone();
                    c.push(b);
                    let v = Expansion::new(0, c.iter().copied()).eval();
                    if !v.is_infinite() {
                        min_len.entry(v).or_insert(len);
                    }
                    next.push(c);
                }
            }
            frontier = next;
        }
        Self {
            max_len,
            bound,
            min_len,
        }
    }

    /// Minimal length of `r + [b_1..b_n]` equal to `x`, with `r` within 2 of
    /// `floor(x)`.
    pub fn min_length(&self, x: &ExtendedRational) -> Result<usize, NotFound> {
        let not_found = || NotFound {
            value: x.to_string(),
            max_len: self.max_len,
            bound: self.bound,
        };
        let fl = x.floor().ok_or_else(not_found)?;
        if x.is_integer() {
            return Ok(0);
        }
        (-2i64..=2)
            .filter_map(|k| {
                let r = &fl + k;
                self.min_len.get(&x.add_integer(&-r)).copied()
            })
            .min()
            .ok_or_else(not_found)
    }
}

/// Minimal expansion length of `x` by exhaustive search.
pub fn brute_force_min_length(
    x: &ExtendedRational,
    max_len: usize,
    coeff_bound: i64,
) -> Result<usize, NotFound> {
    BruteForce::new(max_len, coeff_bound).min_length(x)
}

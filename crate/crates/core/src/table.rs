//! The embedded table of 362 2-bridge knots up to 12 crossings, with batch
//! verification and lookup.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{LookupError, TableError};
use crate::expansion::Expansion;
use crate::invariants::{crosscap, genus, reduced_expansion, InvariantReport};
use crate::knot::{same_knot, KnotId};
use crate::parse::parse_fraction;
use crate::rational::ExtendedRational;
use crate::reducer::reduce;

/// Tab-separated: name, p, q, gamma, comma-joined coefficients, starred (0/1).
pub const TABLE_TSV: &str = include_str!("../data/table.tsv");

pub const TABLE_ROWS: usize = 362;

/// Rows whose printed expansion does not evaluate to the printed fraction,
/// with the expansion as printed. The embedded data carries a corrected
/// expansion that differs in one coefficient.
pub const ERRATA: &[(&str, &[i64])] = &[("11a_93", &[2, -4, -5, -3]), ("11a_205", &[4, 3, -4, -2])];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnotRecord {
    pub name: String,
    pub fraction: ExtendedRational,
    pub gamma: usize,
    pub expansion: Expansion,
    pub starred: bool,
}

impl KnotRecord {
    pub fn knot(&self) -> Result<KnotId, TableError> {
        KnotId::from_fraction(&self.fraction).map_err(|e| TableError::Corrupt {
            row: 0,
            message: format!("{}: {e}", self.name),
        })
    }
}

impl fmt::Display for KnotRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} gamma={} {}{}",
            self.name,
            self.fraction,
            self.gamma,
            self.expansion,
            if self.starred { "*" } else { "" }
        )
    }
}

fn parse_row(row: usize, line: &str) -> Result<KnotRecord, TableError> {
    let corrupt = |message: String| TableError::Corrupt { row, message };
    let fields: Vec<&str> = line.split('\t').collect();
    let [name, p, q, gamma, coeffs, star] = fields[..] else {
        return Err(corrupt(format!(
            "expected 6 fields, found {}",
            fields.len()
        )));
    };
    let int = |s: &str, what: &str| {
        s.parse::<BigInt>()
            .map_err(|e| corrupt(format!("bad {what} {s:?}: {e}")))
    };
    let p = int(p, "p")?;
    let q = int(q, "q")?;
    let fraction = ExtendedRational::new(p, q).map_err(|e| corrupt(e.to_string()))?;
    let gamma = gamma
        .parse::<usize>()
        .map_err(|e| corrupt(format!("bad gamma {gamma:?}: {e}")))?;
    let coefficients = coeffs
        .split(',')
        .map(|c| int(c, "coefficient"))
        .collect::<Result<Vec<_>, _>>()?;
    let starred = match star {
        "0" => false,
        "1" => true,
        other => return Err(corrupt(format!("bad star flag {other:?}"))),
    };
    Ok(KnotRecord {
        name: name.to_string(),
        fraction,
        gamma,
        expansion: Expansion {
            integer_part: BigInt::from(0),
            coefficients,
        },
        starred,
    })
}

/// Parses table text. Row numbers in errors are 1-based line numbers.
pub fn parse_table(text: &str) -> Result<Vec<KnotRecord>, TableError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_row(i + 1, line)?);
    }
    Ok(out)
}

pub fn load_table() -> Result<Vec<KnotRecord>, TableError> {
    parse_table(TABLE_TSV)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            passed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(failure());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableReport {
    pub rows: usize,
    pub checks: Vec<CheckResult>,
}

impl TableReport {
    pub fn all_passed(&self) -> bool {
        self.rows == TABLE_ROWS && self.checks.iter().all(|c| c.failures.is_empty())
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rows={}", self.rows)?;
        for c in &self.checks {
            let status = if c.failures.is_empty() {
                "pass"
            } else {
                "FAIL"
            };
            writeln!(f, "{} {} {}/{}", status, c.name, c.passed, self.rows)?;
            for msg in &c.failures {
                writeln!(f, "  {msg}")?;
            }
        }
        Ok(())
    }
}

/// Runs the five table checks over every record:
/// (a) the expansion evaluates to the fraction,
/// (b) the expansion is already shortest,
/// (c) the computed crosscap number matches,
/// (d) starred iff the reduced expansion is even type without `±2` iff `γ = 2g + 1`,
/// (e) no two rows name the same knot.
pub fn verify_records(records: &[KnotRecord]) -> TableReport {
    let mut a = CheckResult::new("(a) expansion evaluates to p/q");
    let mut b = CheckResult::new("(b) expansion is shortest");
    let mut c = CheckResult::new("(c) crosscap matches");
    let mut d = CheckResult::new("(d) starred iff gamma = 2g+1");
    let mut e = CheckResult::new("(e) distinct canonical forms");
    let mut seen: HashMap<KnotId, &str> = HashMap::new();

    for r in records {
        let value = r.expansion.eval();
        a.record(value == r.fraction, || {
            format!(
                "{}: {} = {}, table says {}",
                r.name, r.expansion, value, r.fraction
            )
        });
        let reduced_len = reduce(&r.expansion).0.len();
        b.record(reduced_len == r.expansion.len(), || {
            format!(
                "{}: {} reduces to length {}",
                r.name, r.expansion, reduced_len
            )
        });

        let Ok(knot) = KnotId::from_fraction(&r.fraction) else {
            let msg = format!("{}: {} is not a knot", r.name, r.fraction);
            c.failures.push(msg.clone());
            d.failures.push(msg.clone());
            e.failures.push(msg);
            continue;
        };
        let gamma = crosscap(&knot);
        c.record(gamma == r.gamma, || {
            format!("{}: computed {}, table says {}", r.name, gamma, r.gamma)
        });
        let red = reduced_expansion(&knot);
        let even_no_two = red.is_even_type() && !red.has_two();
        let maximal = gamma == 2 * genus(&knot) + 1;
        d.record(r.starred == even_no_two && even_no_two == maximal, || {
            format!(
                "{}: starred={} even-without-2={} gamma=2g+1={}",
                r.name, r.starred, even_no_two, maximal
            )
        });
        let canon = knot.canonical_form();
        match seen.get(&canon) {
            Some(other) => e
                .failures
                .push(format!("{} and {} are both {}", other, r.name, canon)),
            None => {
                e.passed += 1;
                seen.insert(canon, &r.name);
            }
        }
    }

    TableReport {
        rows: records.len(),
        checks: vec![a, b, c, d, e],
    }
}

/// Verifies the embedded table.
pub fn verify_table() -> Result<TableReport, TableError> {
    Ok(verify_records(&load_table()?))
}

/// Result of resolving a name or fraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lookup {
    pub report: InvariantReport,
    /// The table row naming this knot.
    pub record: Option<KnotRecord>,
    /// The table row naming its mirror image, when the knot is not amphicheiral
    /// and only the mirror is listed.
    pub mirror_record: Option<KnotRecord>,
}

/// Resolves a table name (`7_4`, `11a_343`) or a fraction (`2/9`). The
/// invariants are computed from scratch either way.
pub fn lookup(query: &str) -> Result<Lookup, LookupError> {
    let table = load_table()?;
    let query = query.trim();
    let looks_numeric = query
        .chars()
        .all(|c| c.is_ascii_digit() || matches!(c, '/' | '-' | '+' | ' '));
    let knot = if looks_numeric && !query.contains('_') {
        KnotId::from_fraction(&parse_fraction(query)?)?
    } else {
        let row = table
            .iter()
            .find(|r| r.name == query)
            .ok_or_else(|| TableError::UnknownName(query.to_string()))?;
        row.knot()?
    };
    let record = table
        .iter()
        .find(|r| r.knot().is_ok_and(|k| same_knot(&k, &knot)))
        .cloned();
    let mirror_record = if record.is_some() {
        None
    } else {
        let m = knot.mirror();
        table
            .iter()
            .find(|r| r.knot().is_ok_and(|k| same_knot(&k, &m)))
            .cloned()
    };
    Ok(Lookup {
        report: InvariantReport::new(&knot),
        record,
        mirror_record,
    })
}

impl fmt::Display for Lookup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.record, &self.mirror_record) {
            (Some(r), _) => writeln!(f, "record={r}")?,
            (None, Some(m)) => writeln!(f, "mirror_record={m}")?,
            (None, None) => writeln!(f, "record=none")?,
        }
        write!(f, "{}", self.report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::BoundaryClass;
    use sha2::{Digest, Sha256};

    fn record(name: &str) -> KnotRecord {
        load_table()
            .unwrap()
            .into_iter()
            .find(|r| r.name == name)
            .unwrap()
    }

    #[test]
    fn table_shape() {
        let t = load_table().unwrap();
        assert_eq!(t.len(), TABLE_ROWS);
        let mut names: Vec<&str> = t.iter().map(|r| r.name.as_str()).collect();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), TABLE_ROWS);
        let starred: Vec<&str> = t
            .iter()
            .filter(|r| r.starred)
            .map(|r| r.name.as_str())
            .collect();
        assert_eq!(
            starred,
            ["7_4", "8_3", "9_5", "10_3", "11a_343", "11a_363", "12a_1166", "12a_1287"]
        );
    }

    #[test]
    fn checksum_is_frozen() {
        let digest = Sha256::digest(TABLE_TSV.as_bytes());
        let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(
            hex,
            "3d25f23f7add3cb1df232a17edbdb8bb3b5eaed9e4408a99323a31779420e52f"
        );
    }

    #[test]
    fn sample_rows() {
        let r = record("3_1");
        assert_eq!(r.fraction.to_string(), "1/3");
        assert_eq!(
            (r.gamma, r.expansion.to_string(), r.starred),
            (1, "[3]".into(), false)
        );
        let r = record("7_4");
        assert_eq!(r.fraction.to_string(), "4/15");
        assert_eq!(
            (r.gamma, r.expansion.to_string(), r.starred),
            (3, "[4,4]".into(), true)
        );
        let r = record("12a_1287");
        assert_eq!(r.fraction.to_string(), "6/37");
        assert_eq!(
            (r.gamma, r.expansion.to_string(), r.starred),
            (3, "[6,-6]".into(), true)
        );
        let r = record("9_31");
        assert_eq!(r.fraction.to_string(), "21/55");
        assert_eq!((r.gamma, r.expansion.to_string()), (4, "[3,3,3,3]".into()));
    }

    #[test]
    fn errata_differ_from_print_in_one_place() {
        for (name, printed) in ERRATA {
            let r = record(name);
            let printed = Expansion::new(0, printed.iter().copied());
            assert_ne!(printed.eval(), r.fraction, "{name}");
            assert_eq!(r.expansion.eval(), r.fraction, "{name}");
            let diffs = printed
                .coefficients
                .iter()
                .zip(&r.expansion.coefficients)
                .filter(|(x, y)| x != y)
                .count();
            assert_eq!(diffs, 1, "{name}");
        }
    }

    #[test]
    fn full_verification_passes() {
        let report = verify_table().unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(report.checks.iter().all(|c| c.passed == TABLE_ROWS));
    }

    #[test]
    fn verification_catches_bad_rows() {
        let text = "3_1\t1\t3\t2\t3\t0\n4_1\t2\t5\t2\t3,2\t0\nx_1\t3\t5\t2\t2,-2\t0\n";
        let report = verify_records(&parse_table(text).unwrap());
        assert!(!report.all_passed());
        let fails: Vec<usize> = report.checks.iter().map(|c| c.failures.len()).collect();
        // 3_1 has the wrong gamma; [2,-2] = 2/5, not 3/5; and 3 = 2^{-1} mod 5
        assert_eq!(fails, [1, 0, 1, 0, 1]);
    }

    #[test]
    fn corrupt_rows_report_line() {
        let err = parse_table("# header\n3_1\t1\t3\t1\t3\n").unwrap_err();
        assert!(matches!(err, TableError::Corrupt { row: 2, .. }));
        assert!(parse_table("3_1\t1\t3\t1\t3,x\t0").is_err());
        assert!(parse_table("3_1\t1\t3\t1\t3\t2").is_err());
    }

    #[test]
    fn lookup_examples() {
        let l = lookup("7_4").unwrap();
        assert_eq!((l.report.crosscap, l.report.genus), (3, 1));
        assert_eq!(l.report.boundary, BoundaryClass::BoundaryCompressible);
        assert!(l.record.unwrap().starred);

        let l = lookup("2/9").unwrap();
        assert_eq!(l.report.crosscap, 2);
        assert_eq!(l.record.unwrap().name, "6_1");

        let l = lookup("4/9").unwrap();
        assert_eq!(l.record, None);
        assert_eq!(l.mirror_record.unwrap().name, "6_1");
        assert_eq!(l.report.crosscap, 2);

        assert!(matches!(lookup("99_9"), Err(LookupError::Table(_))));
        assert!(matches!(lookup("2/8"), Err(LookupError::Knot(_))));
        assert!(matches!(lookup("2/"), Err(LookupError::Parse(_))));
    }

    #[test]
    fn lookup_gamma_matches_every_row() {
        for r in load_table().unwrap() {
            assert_eq!(
                lookup(&r.name).unwrap().report.crosscap,
                r.gamma,
                "{}",
                r.name
            );
        }
    }
}

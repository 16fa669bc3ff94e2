//! Checks family values against known integer sequences from the OEIS.

mod bfile;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::coeffring::Rational;
use crate::dowling::{family_value, FamilyId};

pub use bfile::{
    bfile_name, bfile_url, default_fixtures_dir, parse_bfile, BFileStore, HttpTransport, Transport,
    FIXTURES_ENV,
};

/// A family specialization together with the leading terms of the OEIS
/// sequence it reproduces.
#[derive(Debug, Clone, PartialEq)]
pub struct GoldenCase {
    pub oeis_id: String,
    pub family: FamilyId,
    pub m: Rational,
    pub x: Rational,
    /// Family index `n` is OEIS index `n + offset`.
    pub offset: i64,
    /// Terms for family indices `0, 1, 2, ...`.
    pub values: Vec<BigInt>,
    /// A `(family, m, x)` these digits are sometimes attributed to which
    /// does not reproduce them.
    pub misattributed: Option<(FamilyId, Rational, Rational)>,
}

impl GoldenCase {
    pub fn name(&self) -> String {
        format!(
            "{} {}(m={}, x={})",
            self.oeis_id, self.family, self.m, self.x
        )
    }

    pub fn with_params(&self, family: FamilyId, m: Rational, x: Rational) -> GoldenCase {
        GoldenCase {
            family,
            m,
            x,
            ..self.clone()
        }
    }
}

fn case(
    oeis_id: &str,
    family: FamilyId,
    (m, x): (i64, i64),
    offset: i64,
    values: &[i64],
) -> GoldenCase {
    GoldenCase {
        oeis_id: oeis_id.to_string(),
        family,
        m: Rational::from_int(m),
        x: Rational::from_int(x),
        offset,
        values: values.iter().map(|&v| BigInt::from(v)).collect(),
        misattributed: None,
    }
}

const ARRANGEMENTS: [i64; 11] = [1, 2, 5, 16, 65, 326, 1957, 13700, 109601, 986410, 9864101];

/// The embedded identifications.
#[rustfmt::skip]
pub fn golden_cases() -> Vec<GoldenCase> {
    use FamilyId::*;
    let misattributed = |mut c: GoldenCase, family, m: i64, x: i64| {
        c.misattributed = Some((family, Rational::from_int(m), Rational::from_int(x)));
        c
    };
    vec![
        case("A000110", Dowling, (1, 1), 1,
            &[1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570]),
        case("A007405", Dowling, (2, 1), 0,
            &[1, 2, 6, 24, 116, 648, 4088, 28640, 219920, 1832224, 16430176]),
        misattributed(
            case("A035009", Dowling, (1, 2), 1,
                &[1, 3, 11, 47, 227, 1215, 7107, 44959, 305091, 2206399, 16913987]),
            Dowling, 1, 3,
        ),
        case("A000522", Tanny, (0, 1), 0, &ARRANGEMENTS),
        case("A000522", Eulerian, (0, 2), 0, &ARRANGEMENTS),
        case("A000629", Tanny, (1, 1), 0,
            &[1, 2, 6, 26, 150, 1082, 9366, 94586, 1091670, 14174522, 204495126]),
        case("A010844", Tanny, (0, 2), 0,
            &[1, 3, 13, 79, 633, 6331, 75973, 1063623, 17017969, 306323443, 6126468861, 134782314943]),
        misattributed(
            case("A004123", Geometric, (1, 2), 0,
                &[1, 2, 10, 74, 730, 9002, 133210, 2299754, 45375130, 1007179562]),
            Tanny, 1, 2,
        ),
        case("A119880", Eulerian, (-2, 2), 0,
            &[1, 2, 3, 2, -3, 2, 63, 2, -1383, 2, 50523, 2, -2702763, 2, 199360983]),
        case("A123227", Eulerian, (1, 3), 0,
            &[1, 3, 12, 66, 480, 4368, 47712, 608016, 8855040, 145083648]),
    ]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Match,
    Mismatch,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Mismatch {
    /// Family index.
    pub index: usize,
    pub expected: BigInt,
    pub actual: Rational,
    /// What disagreed with the expected term.
    pub source: &'static str,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub case: String,
    pub checked: usize,
    pub status: Status,
    pub first_mismatch: Option<Mismatch>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.status == Status::Match
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "case": self.case,
            "checked": self.checked.to_string(),
            "status": self.status.as_str(),
        });
        if let Some(mm) = &self.first_mismatch {
            v["first_mismatch"] = json!({
                "index": mm.index.to_string(),
                "expected": mm.expected.to_string(),
                "actual": mm.actual.to_string(),
                "source": mm.source,
            });
        }
        v
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} ({} terms checked)",
            self.case,
            self.status.as_str(),
            self.checked
        )?;
        if let Some(mm) = &self.first_mismatch {
            write!(
                f,
                "; first mismatch at n={}: expected {}, {} gives {}",
                mm.index, mm.expected, mm.source, mm.actual
            )?;
        }
        Ok(())
    }
}

fn report(case: String, checked: usize, first_mismatch: Option<Mismatch>) -> Report {
    let status = if first_mismatch.is_some() {
        Status::Mismatch
    } else {
        Status::Match
    };
    Report {
        case,
        checked,
        status,
        first_mismatch,
    }
}

/// Compares the definition-sum values for `n < count` with the embedded
/// terms. `count` is capped at the number of embedded terms.
pub fn verify_case(c: &GoldenCase, count: usize) -> Report {
    let count = count.min(c.values.len());
    let first = (0..count).find_map(|n| {
        let actual = family_value(c.family, &c.m, &c.x, n);
        let expected = &c.values[n];
        (actual != Rational::from_bigint(expected.clone())).then(|| Mismatch {
            index: n,
            expected: expected.clone(),
            actual,
            source: "definition sum",
        })
    });
    report(c.name(), count, first)
}

/// Extended check against parsed b-file entries: the embedded terms must be
/// a prefix of the b-file, and the family values must agree for every
/// `n < count` the b-file covers.
pub fn verify_against_bfile(c: &GoldenCase, entries: &[(i64, BigInt)], count: usize) -> Report {
    let table: BTreeMap<i64, &BigInt> = entries.iter().map(|(i, v)| (*i, v)).collect();
    let mut checked = 0;
    let mut first = None;
    for n in 0..count {
        let Some(&expected) = table.get(&(n as i64 + c.offset)) else {
            break;
        };
        if let Some(embedded) = c.values.get(n) {
            if embedded != expected {
                first = Some(Mismatch {
                    index: n,
                    expected: expected.clone(),
                    actual: Rational::from_bigint(embedded.clone()),
                    source: "embedded fixture",
                });
                break;
            }
        }
        let actual = family_value(c.family, &c.m, &c.x, n);
        if actual != Rational::from_bigint(expected.clone()) {
            first = Some(Mismatch {
                index: n,
                expected: expected.clone(),
                actual,
                source: "definition sum",
            });
            break;
        }
        checked += 1;
    }
    let short = first.is_none() && checked < c.values.len().min(count);
    if short {
        first = Some(Mismatch {
            index: checked,
            expected: c.values[checked].clone(),
            actual: Rational::from_int(0),
            source: "b-file (term missing)",
        });
    }
    report(format!("{} [b-file]", c.name()), checked, first)
}

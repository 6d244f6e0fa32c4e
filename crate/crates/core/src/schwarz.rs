//! Finiteness of projective hypergeometric monodromy, two independent ways.
//!
//! The first route canonicalizes the exponent-difference triple and matches
//! it against the classical table of finite cases (shipped as a plain-text
//! data file, `data/schwarz_table.txt`). The second evaluates the Galois
//! interlacing criterion on the parameters themselves: the monodromy is
//! finite exactly when, for every `k` coprime to the common denominator, the
//! eigenvalue arguments `{frac(k*alpha), frac(k*beta)}` and `{0, frac(k*gamma)}`
//! strictly interlace around the circle. Neither route trusts the other; the
//! exhaustive agreement sweep is the correctness gate for both.
//!
//! Equivalence moves for triples are permutations, per-entry sign changes
//! modulo 1, and integer shifts of even total. Over the representative window
//! `[0,1)` the infinite move group collapses to the eight sign patterns with
//! an exact parity filter, so canonicalization is a finite minimum, not a
//! bounded search.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::hypergeometric::{exponent_differences, is_irreducible, HypergeometricParams};
use crate::rational::{denominator_u64, frac, parse_rational, rat, Rational};

/// Canonical representative of an exponent-difference triple: entries sorted
/// ascending inside `[0, 1)` (the lexicographic minimum over the move group).
///
/// The single exception is the orbit of all-integer triples with odd sum,
/// which has no representative inside `[0, 1)^3`; it canonicalizes to
/// `(0, 0, 1)`. Such triples only arise from reducible equations.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SchwarzTriple {
    entries: [Rational; 3],
}

impl SchwarzTriple {
    pub fn entries(&self) -> &[Rational; 3] {
        &self.entries
    }
}

impl fmt::Display for SchwarzTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.entries[0], self.entries[1], self.entries[2]
        )
    }
}

/// Canonical form under the classical equivalence moves. Idempotent.
pub fn normalize_triple(lambda: &Rational, mu: &Rational, nu: &Rational) -> SchwarzTriple {
    let input = [lambda, mu, nu];
    let mut best: Option<[Rational; 3]> = None;
    for pattern in 0u8..8 {
        let mut fracs: [Rational; 3] = [Rational::zero(), Rational::zero(), Rational::zero()];
        let mut shift_sum = num_bigint::BigInt::zero();
        for (i, t) in input.iter().enumerate() {
            let signed = if pattern & (1 << i) != 0 {
                -(*t).clone()
            } else {
                (*t).clone()
            };
            let f = frac(&signed);
            // the integer shift that moved `signed` into [0, 1)
            let s = &f - &signed;
            debug_assert!(s.denom().is_one());
            shift_sum += s.numer();
            fracs[i] = f;
        }
        if shift_sum.is_odd() {
            continue;
        }
        fracs.sort();
        match &best {
            Some(b) if *b <= fracs => {}
            _ => best = Some(fracs),
        }
    }
    let entries = best.unwrap_or_else(|| [Rational::zero(), Rational::zero(), Rational::one()]);
    SchwarzTriple { entries }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchwarzClass {
    Dihedral,
    Tetrahedral,
    Octahedral,
    /// Classical case number (6 through 15).
    Icosahedral(u8),
    Infinite,
    ReducibleNotApplicable,
}

impl fmt::Display for SchwarzClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchwarzClass::Dihedral => write!(f, "dihedral"),
            SchwarzClass::Tetrahedral => write!(f, "tetrahedral"),
            SchwarzClass::Octahedral => write!(f, "octahedral"),
            SchwarzClass::Icosahedral(c) => write!(f, "icosahedral (case {c})"),
            SchwarzClass::Infinite => write!(f, "infinite"),
            SchwarzClass::ReducibleNotApplicable => write!(f, "reducible (not applicable)"),
        }
    }
}

/// Table-lookup verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitenessVerdict {
    pub finite: bool,
    pub class: SchwarzClass,
    /// 1-based row number of the matched table row.
    pub table_row: Option<usize>,
}

impl FinitenessVerdict {
    fn infinite() -> Self {
        FinitenessVerdict {
            finite: false,
            class: SchwarzClass::Infinite,
            table_row: None,
        }
    }

    pub fn reducible() -> Self {
        FinitenessVerdict {
            finite: false,
            class: SchwarzClass::ReducibleNotApplicable,
            table_row: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for TableParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "schwarz table line {}: {}", self.line, self.message)
    }
}

struct TableRow {
    /// None marks the dihedral family (wildcard third entry).
    canonical: Option<SchwarzTriple>,
    class: SchwarzClass,
}

/// The finite-monodromy table, loaded from its versioned data file.
pub struct SchwarzTable {
    version: String,
    rows: Vec<TableRow>,
}

const BUILTIN_TABLE: &str = include_str!("../data/schwarz_table.txt");

impl SchwarzTable {
    /// The table shipped with the crate.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_TABLE).expect("shipped table parses")
    }

    /// Parse a table in the shipped format: `lambda mu nu class` per line,
    /// `#` comments, first line carrying the version tag.
    pub fn parse(text: &str) -> Result<Self, TableParseError> {
        let mut version = String::new();
        let mut rows = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                let rest = rest.trim();
                if version.is_empty() && rest.starts_with("schwarz-table") {
                    version = String::from(rest);
                }
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if tokens.len() != 4 {
                return Err(TableParseError {
                    line: line_no,
                    message: String::from("expected 4 columns"),
                });
            }
            let parse_entry = |tok: &str| {
                parse_rational(tok).map_err(|e| TableParseError {
                    line: line_no,
                    message: alloc::format!("{e}"),
                })
            };
            let wildcard = tokens[2] == "*";
            let class = match tokens[3] {
                "dihedral" => SchwarzClass::Dihedral,
                "tetrahedral" => SchwarzClass::Tetrahedral,
                "octahedral" => SchwarzClass::Octahedral,
                "icosahedral" => SchwarzClass::Icosahedral((rows.len() + 1) as u8),
                other => {
                    return Err(TableParseError {
                        line: line_no,
                        message: alloc::format!("unknown class {other:?}"),
                    })
                }
            };
            if wildcard {
                if class != SchwarzClass::Dihedral {
                    return Err(TableParseError {
                        line: line_no,
                        message: String::from(
                            "wildcard entry is only valid for the dihedral family",
                        ),
                    });
                }
                // the two fixed entries must be 1/2
                for tok in &tokens[..2] {
                    if parse_entry(tok)? != rat(1, 2) {
                        return Err(TableParseError {
                            line: line_no,
                            message: String::from("dihedral family rows are (1/2, 1/2, *)"),
                        });
                    }
                }
                rows.push(TableRow {
                    canonical: None,
                    class,
                });
            } else {
                let l = parse_entry(tokens[0])?;
                let m = parse_entry(tokens[1])?;
                let n = parse_entry(tokens[2])?;
                rows.push(TableRow {
                    canonical: Some(normalize_triple(&l, &m, &n)),
                    class,
                });
            }
        }
        if version.is_empty() {
            return Err(TableParseError {
                line: 0,
                message: String::from("missing schwarz-table version header"),
            });
        }
        if rows.is_empty() {
            return Err(TableParseError {
                line: 0,
                message: String::from("empty table"),
            });
        }
        Ok(SchwarzTable { version, rows })
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Raw triples of the non-dihedral rows, for cross-validation tests.
    pub fn finite_triples(&self) -> Vec<(usize, SchwarzTriple, SchwarzClass)> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.canonical.as_ref().map(|c| (i + 1, c.clone(), r.class)))
            .collect()
    }
}

/// Match a canonical triple against the table. The caller must have verified
/// irreducibility; use [`classify_params`] for the checked entry point.
pub fn schwarz_lookup(t: &SchwarzTriple, table: &SchwarzTable) -> FinitenessVerdict {
    let half = rat(1, 2);
    let halves = t.entries.iter().filter(|e| **e == half).count();
    for (i, row) in table.rows.iter().enumerate() {
        match &row.canonical {
            None => {
                if halves >= 2 {
                    return FinitenessVerdict {
                        finite: true,
                        class: row.class,
                        table_row: Some(i + 1),
                    };
                }
            }
            Some(c) => {
                if c == t {
                    return FinitenessVerdict {
                        finite: true,
                        class: row.class,
                        table_row: Some(i + 1),
                    };
                }
            }
        }
    }
    FinitenessVerdict::infinite()
}

/// Table-lookup finiteness of the projective monodromy of `p`; reducible
/// parameters are never classified by the table.
pub fn classify_params(p: &HypergeometricParams, table: &SchwarzTable) -> FinitenessVerdict {
    if !is_irreducible(p) {
        return FinitenessVerdict::reducible();
    }
    let d = exponent_differences(p);
    schwarz_lookup(&normalize_triple(&d.lambda, &d.mu, &d.nu), table)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchwarzError {
    /// The interlacing criterion only applies to irreducible parameters.
    ResonantInput,
}

impl fmt::Display for SchwarzError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchwarzError::ResonantInput => write!(f, "parameters are resonant (reducible)"),
        }
    }
}

/// Which singular point a circle point came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CirclePoint {
    /// Eigenvalue argument of the monodromy at infinity (`alpha`, `beta`).
    AtInfinity,
    /// Eigenvalue argument of the monodromy at zero (`0`, `gamma`).
    AtZero,
}

/// Certificate for a failing conjugate: the sorted circle arrangement that is
/// not strictly alternating.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacingWitness {
    pub k: u64,
    pub circle: Vec<(Rational, CirclePoint)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterlacingVerdict {
    pub finite: bool,
    /// Smallest failing Galois conjugate, when infinite.
    pub witness: Option<InterlacingWitness>,
    /// Conjugates examined (the units modulo the common denominator).
    pub conjugates_checked: u64,
}

fn strictly_interlaced(circle: &[(Rational, CirclePoint)]) -> bool {
    debug_assert_eq!(circle.len(), 4);
    for w in circle.windows(2) {
        if w[0].0 == w[1].0 || w[0].1 == w[1].1 {
            return false;
        }
    }
    true
}

/// Galois interlacing criterion: finite iff for every `k` coprime to the
/// common denominator `N`, the multisets `{frac(k*alpha), frac(k*beta)}` and
/// `{0, frac(k*gamma)}` strictly interlace around the circle.
pub fn interlacing_finiteness(
    p: &HypergeometricParams,
) -> Result<InterlacingVerdict, SchwarzError> {
    if !is_irreducible(p) {
        return Err(SchwarzError::ResonantInput);
    }
    let n = denominator_u64(&frac(&p.alpha))
        .unwrap()
        .lcm(&denominator_u64(&frac(&p.beta)).unwrap())
        .lcm(&denominator_u64(&frac(&p.gamma)).unwrap());
    let mut checked = 0;
    for k in 1..=n {
        if k.gcd(&n) != 1 {
            continue;
        }
        checked += 1;
        let kq = rat(k as i64, 1);
        let mut circle = [
            (frac(&(&p.alpha * &kq)), CirclePoint::AtInfinity),
            (frac(&(&p.beta * &kq)), CirclePoint::AtInfinity),
            (Rational::zero(), CirclePoint::AtZero),
            (frac(&(&p.gamma * &kq)), CirclePoint::AtZero),
        ];
        circle.sort_by(|a, b| a.0.cmp(&b.0));
        if !strictly_interlaced(&circle) {
            return Ok(InterlacingVerdict {
                finite: false,
                witness: Some(InterlacingWitness {
                    k,
                    circle: circle.to_vec(),
                }),
                conjugates_checked: checked,
            });
        }
    }
    Ok(InterlacingVerdict {
        finite: true,
        witness: None,
        conjugates_checked: checked,
    })
}

/// All parameter triples with entries in `(1/n) * {0..n-1}` passing the
/// irreducibility test. Finiteness data only depends on the parameters modulo
/// integers, so sweeping the unit cube is exhaustive for denominators
/// dividing `n`.
pub fn irreducible_params_with_denominator(n: u32) -> Vec<HypergeometricParams> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let p = HypergeometricParams::new(
                    rat(a as i64, n as i64),
                    rat(b as i64, n as i64),
                    rat(c as i64, n as i64),
                );
                if is_irreducible(&p) {
                    out.push(p);
                }
            }
        }
    }
    out
}

//! Top-level fibration reports: the direct-image decomposition
//! `V = A + Q_1 + ...` with a semi-ampleness verdict, plus the
//! semistable-reduction arithmetic and the Kodaira-fibration degree check.
//!
//! The decomposition logic per character of the fiber family:
//! a unitary-flat eigenspace with positive holomorphic dimension splits off
//! as a flat summand when its local projective monodromy orders divide the
//! base-cover ramification orders at the corresponding points (the local
//! monodromy then trivializes after base change). Everything that does not
//! split off is reported as one ample summand, by the splitting theorem. The
//! verdict is `Yes` exactly when every flat summand has finite monodromy:
//! rank-1 flat summands are torsion, any flat summand over a base of genus
//! at most 1 is torsion as well, and rank-2 summands of a 4-point family are
//! classified through the hypergeometric machinery.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::cover::{cover_genus, eigenspace_table, hurwitz_base_genus, BranchData, CoverError};
use crate::cyclotomic::DEFAULT_CONDUCTOR_CAP;
use crate::hypergeometric::{character_to_hg_with_moving, local_orders, HgError};
use crate::monodromy::{finiteness_report, Monodromy, MonodromyError};
use crate::rational::{rat, Rational};
use crate::schwarz::SchwarzTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FibrationError {
    /// Hirzebruch-Jung type requires gcd(n, q) = 1.
    GcdNotOne {
        n: u32,
        q: u32,
    },
    /// Quotient singularity type requires `1 <= q < n`.
    TypeOutOfRange {
        n: u32,
        q: u32,
    },
    EmptyMultiplicities,
    ZeroMultiplicity,
    /// Stated base genus disagrees with the base cover's Hurwitz genus.
    InconsistentBaseGenus {
        stated: u32,
        computed: u32,
    },
    /// Base-cover ramification list must align with the fixed branch points.
    RamificationCountMismatch {
        expected: usize,
        got: usize,
    },
    UnknownMovingLabel {
        label: String,
    },
    Cover(CoverError),
    Hg(HgError),
    Monodromy(MonodromyError),
}

impl fmt::Display for FibrationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibrationError::GcdNotOne { n, q } => write!(f, "gcd({n}, {q}) != 1"),
            FibrationError::TypeOutOfRange { n, q } => {
                write!(f, "quotient singularity type 1/{n}({q}) out of range")
            }
            FibrationError::EmptyMultiplicities => write!(f, "empty multiplicity list"),
            FibrationError::ZeroMultiplicity => write!(f, "multiplicities must be positive"),
            FibrationError::InconsistentBaseGenus { stated, computed } => write!(
                f,
                "stated base genus {stated} but the base cover has genus {computed}"
            ),
            FibrationError::RamificationCountMismatch { expected, got } => write!(
                f,
                "base cover must list {expected} ramification orders, got {got}"
            ),
            FibrationError::UnknownMovingLabel { label } => {
                write!(f, "moving-point label {label:?} not in the branch data")
            }
            FibrationError::Cover(e) => write!(f, "{e}"),
            FibrationError::Hg(e) => write!(f, "{e}"),
            FibrationError::Monodromy(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoverError> for FibrationError {
    fn from(e: CoverError) -> Self {
        FibrationError::Cover(e)
    }
}

impl From<HgError> for FibrationError {
    fn from(e: HgError) -> Self {
        FibrationError::Hg(e)
    }
}

impl From<MonodromyError> for FibrationError {
    fn from(e: MonodromyError) -> Self {
        FibrationError::Monodromy(e)
    }
}

/// A cyclic quotient singularity `1/n (1, q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientSingularity {
    pub n: u32,
    pub q: u32,
}

impl QuotientSingularity {
    pub fn new(n: u32, q: u32) -> Result<Self, FibrationError> {
        if q == 0 || q >= n {
            return Err(FibrationError::TypeOutOfRange { n, q });
        }
        if n.gcd(&q) != 1 {
            return Err(FibrationError::GcdNotOne { n, q });
        }
        Ok(QuotientSingularity { n, q })
    }
}

/// Hirzebruch-Jung string: negatives of the self-intersections of the
/// exceptional curves, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HjString {
    pub coefficients: Vec<u32>,
}

impl HjString {
    /// Value of the negative-regular continued fraction
    /// `c1 - 1/(c2 - 1/(...))`.
    pub fn value(&self) -> Rational {
        let mut v = rat(0, 1);
        for &c in self.coefficients.iter().rev() {
            if v == rat(0, 1) {
                v = rat(c as i64, 1);
            } else {
                v = rat(c as i64, 1) - rat(1, 1) / v;
            }
        }
        v
    }
}

/// The unique all-`>= 2` negative-regular continued fraction expansion of
/// `n/q`.
pub fn hj_resolve(s: &QuotientSingularity) -> HjString {
    let mut n = s.n;
    let mut q = s.q;
    let mut coefficients = Vec::new();
    while q > 0 {
        let c = n.div_ceil(q);
        coefficients.push(c);
        let r = c * q - n;
        n = q;
        q = r;
    }
    HjString { coefficients }
}

/// Minimal admissible local base-change order for semistable reduction: the
/// lcm of the fiber multiplicities.
pub fn semistable_base_order(multiplicities: &[u64]) -> Result<u64, FibrationError> {
    if multiplicities.is_empty() {
        return Err(FibrationError::EmptyMultiplicities);
    }
    if multiplicities.contains(&0) {
        return Err(FibrationError::ZeroMultiplicity);
    }
    Ok(multiplicities.iter().fold(1u64, |acc, &m| acc.lcm(&m)))
}

/// Numerical check of the Kodaira-fibration degree argument:
/// `e = 4(b-1)(g-1)`, consistency of `3*sigma = K^2 - 2e`, and positivity of
/// the direct-image degree, which is the sign of `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KodairaCheck {
    pub e: i64,
    pub three_sigma: i64,
    pub consistent: bool,
    pub deg_v_positive: bool,
}

pub fn kodaira_degree_check(k2: i64, b: u32, g: u32, sigma: i64) -> KodairaCheck {
    let e = 4 * (b as i64 - 1) * (g as i64 - 1);
    let three_sigma = 3 * sigma;
    KodairaCheck {
        e,
        three_sigma,
        consistent: three_sigma == k2 - 2 * e,
        deg_v_positive: sigma > 0,
    }
}

/// The base curve as a cover of the line, ramified over the collision points
/// of the moving branch point with the fixed ones (in fixed-point order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseCover {
    pub order: u32,
    pub ram_orders: Vec<u32>,
}

/// A fibered-surface specification: the moving fiber family plus the base
/// curve data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibrationSpec {
    pub fiber_branch: BranchData,
    /// Which branch point moves; required for the 4-point monodromy
    /// classification.
    pub moving_label: Option<String>,
    pub base_genus: u32,
    pub base_cover: Option<BaseCover>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SummandKind {
    Ample,
    UnitaryFlat,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub kind: SummandKind,
    pub rank: u32,
    /// Character index for flat summands.
    pub character: Option<u32>,
    pub monodromy: Option<Monodromy>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Semiample {
    Yes,
    No,
    Undetermined,
}

impl fmt::Display for Semiample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Semiample::Yes => write!(f, "yes"),
            Semiample::No => write!(f, "no"),
            Semiample::Undetermined => write!(f, "undetermined"),
        }
    }
}

/// The decomposition report: ranks always sum to the fiber genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FujitaReport {
    pub total_rank: u32,
    pub summands: Vec<Summand>,
    pub semiample: Semiample,
    pub rationale: Vec<String>,
}

/// Semi-ampleness from the summand list: `Yes` iff every unitary-flat
/// summand has finite monodromy, `No` as soon as one is infinite,
/// `Undetermined` when a needed verdict is unknown.
pub fn semiample_verdict(summands: &[Summand]) -> Semiample {
    if summands
        .iter()
        .any(|s| s.monodromy == Some(Monodromy::Infinite))
    {
        Semiample::No
    } else if summands
        .iter()
        .any(|s| s.monodromy == Some(Monodromy::Unknown))
    {
        Semiample::Undetermined
    } else {
        Semiample::Yes
    }
}

/// Assemble the decomposition report for a fibration specification.
pub fn fujita_decomposition(
    spec: &FibrationSpec,
    table: &SchwarzTable,
    bfs_bound: usize,
) -> Result<FujitaReport, FibrationError> {
    let b = &spec.fiber_branch;
    let eigen = eigenspace_table(b)?;
    let total_rank = cover_genus(b);
    let r = b.num_points();
    let mut rationale = Vec::new();
    rationale.push(String::from("fujita-splitting"));

    let moving_pos = match &spec.moving_label {
        Some(label) => {
            Some(
                b.position_of(label)
                    .ok_or_else(|| FibrationError::UnknownMovingLabel {
                        label: label.clone(),
                    })?,
            )
        }
        None => None,
    };

    // Base-cover sanity: Hurwitz genus and ramification alignment.
    let ram_orders: Vec<u32> = match &spec.base_cover {
        Some(cover) => {
            if cover.ram_orders.len() != r - 1 {
                return Err(FibrationError::RamificationCountMismatch {
                    expected: r - 1,
                    got: cover.ram_orders.len(),
                });
            }
            let computed = hurwitz_base_genus(cover.order, 0, &cover.ram_orders)?;
            if computed != spec.base_genus {
                return Err(FibrationError::InconsistentBaseGenus {
                    stated: spec.base_genus,
                    computed,
                });
            }
            cover.ram_orders.clone()
        }
        None => alloc::vec![1; r - 1],
    };

    let mut flats: Vec<Summand> = Vec::new();
    let mut flat_rank = 0u32;
    for row in &eigen.rows {
        if !row.unitary_flat || row.h10 == 0 {
            continue;
        }
        // Does the local monodromy trivialize after base change?
        let analysis = if r == 4 && moving_pos.is_some() {
            let j = crate::cover::CharacterIndex::new(row.j, b.order())?;
            let label = spec.moving_label.as_deref().expect("checked");
            let params = character_to_hg_with_moving(b, &j, label)?;
            let orders = local_orders(&params).as_array();
            let trivializes = orders
                .iter()
                .zip(&ram_orders)
                .all(|(&o, &ram)| (ram as u64).is_multiple_of(o));
            Some((params, trivializes))
        } else {
            None
        };
        // Without a moving point the family does not vary, so nothing
        // obstructs the flat extension.
        let (splits_off, classified) = match &analysis {
            Some((_, trivializes)) => (*trivializes, true),
            None => (true, false),
        };
        if !splits_off {
            rationale.push(alloc::format!(
                "character-{}-local-monodromy-does-not-trivialize",
                row.j
            ));
            continue;
        }
        let monodromy = if spec.base_genus <= 1 {
            rationale.push(alloc::format!("character-{}-base-genus-at-most-1", row.j));
            Monodromy::Finite
        } else if row.h10 == 1 {
            rationale.push(alloc::format!("character-{}-rank-one-torsion", row.j));
            Monodromy::Finite
        } else if classified {
            let (params, _) = analysis.as_ref().expect("classified implies analysis");
            let report = finiteness_report(params, bfs_bound, table, DEFAULT_CONDUCTOR_CAP)?;
            rationale.push(alloc::format!(
                "character-{}-monodromy-{}",
                row.j,
                report.verdict
            ));
            report.verdict
        } else {
            rationale.push(alloc::format!("character-{}-unclassified", row.j));
            Monodromy::Unknown
        };
        flat_rank += row.h10;
        flats.push(Summand {
            kind: SummandKind::UnitaryFlat,
            rank: row.h10,
            character: Some(row.j),
            monodromy: Some(monodromy),
        });
    }

    let mut summands = Vec::new();
    let ample_rank = total_rank - flat_rank;
    if ample_rank > 0 {
        summands.push(Summand {
            kind: SummandKind::Ample,
            rank: ample_rank,
            character: None,
            monodromy: None,
        });
    }
    summands.extend(flats);

    let semiample = semiample_verdict(&summands);
    rationale.push(String::from(match semiample {
        Semiample::No => "verdict-infinite-monodromy-summand",
        Semiample::Undetermined => "verdict-unresolved-monodromy",
        Semiample::Yes => "verdict-all-flat-summands-finite",
    }));
    debug_assert_eq!(summands.iter().map(|s| s.rank).sum::<u32>(), total_rank);
    Ok(FujitaReport {
        total_rank,
        summands,
        semiample,
        rationale,
    })
}

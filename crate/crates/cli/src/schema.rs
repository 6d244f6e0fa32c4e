//! Wire types: JSON inputs and reports, with rationals as `"p/q"` strings so
//! no float ever touches the data path. Unknown fields are rejected
//! everywhere and every top-level object carries `schema_version`.

use serde::{Deserialize, Serialize};

use fujita_core::{
    BranchData, EigenspaceTable, FujitaReport, GroupClosureReport, HjString, HypergeometricParams,
    KodairaCheck, Matrix2, Monodromy, Rational, Signature, Summand, SummandKind,
};

pub const SCHEMA_VERSION: u32 = 1;

fn default_version() -> u32 {
    SCHEMA_VERSION
}

pub fn rational_string(x: &Rational) -> String {
    if fujita_core::rational::is_integer(x) {
        format!("{}", x.numer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

// --- inputs ---

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchPointIn {
    pub label: String,
    pub m: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BranchDataIn {
    pub n: u32,
    pub branch: Vec<BranchPointIn>,
}

impl BranchDataIn {
    pub fn to_branch_data(&self) -> Result<BranchData, fujita_core::CoverError> {
        BranchData::new(self.n, self.branch.iter().map(|p| (p.label.clone(), p.m)))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HgParamsIn {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolveSingIn {
    pub n: u32,
    pub q: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReduceIn {
    pub multiplicities: Vec<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KodairaIn {
    pub k2: i64,
    pub b: u32,
    pub g: u32,
    pub sigma: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaseCoverIn {
    pub order: u32,
    pub ram_orders: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FujitaIn {
    pub fiber: BranchDataIn,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moving_label: Option<String>,
    pub base_genus: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_cover: Option<BaseCoverIn>,
}

// --- reports ---

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterRow {
    pub j: u32,
    pub h10: u32,
    pub h01: u32,
    pub rank: u32,
    pub degree: u32,
    pub unitary_flat: bool,
    pub local_exponents: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverReport {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub n: u32,
    pub num_points: usize,
    pub genus: u32,
    pub characters: Vec<CharacterRow>,
}

impl CoverReport {
    pub fn from_table(t: &EigenspaceTable) -> Self {
        CoverReport {
            schema_version: SCHEMA_VERSION,
            n: t.order,
            num_points: t.num_points,
            genus: t.genus,
            characters: t
                .rows
                .iter()
                .map(|r| CharacterRow {
                    j: r.j,
                    h10: r.h10,
                    h01: r.h01,
                    rank: r.rank,
                    degree: r.eigensheaf_degree,
                    unitary_flat: r.unitary_flat,
                    local_exponents: r
                        .local_exponents
                        .iter()
                        .map(|u| rational_string(u.value()))
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchwarzOut {
    pub finite: bool,
    pub class: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table_row: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InterlacingOut {
    pub finite: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failing_k: Option<u64>,
    pub conjugates_checked: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HgReport {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    /// Rows of the Riemann scheme at 0, 1, infinity.
    pub riemann_scheme: [[String; 2]; 3],
    pub exponent_differences: [String; 3],
    pub local_orders: [u64; 3],
    pub possibly_unipotent: [bool; 3],
    pub irreducible: bool,
    pub pairwise_nonresonant: bool,
    pub nonresonance_criteria_disagree: bool,
    /// Absent for reducible parameters, which the classifiers do not cover.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schwarz: Option<SchwarzOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interlacing: Option<InterlacingOut>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub finite: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignatureOut {
    pub positive: u8,
    pub negative: u8,
    pub nullity: u8,
}

impl From<Signature> for SignatureOut {
    fn from(s: Signature) -> Self {
        SignatureOut {
            positive: s.positive,
            negative: s.negative,
            nullity: s.nullity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConjugateSignatureOut {
    pub k: u32,
    pub positive: u8,
    pub negative: u8,
    pub nullity: u8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClosureOut {
    pub finite_within_bound: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub elements_explored: usize,
    pub bound: usize,
}

impl From<&GroupClosureReport> for ClosureOut {
    fn from(r: &GroupClosureReport) -> Self {
        ClosureOut {
            finite_within_bound: r.finite_within_bound,
            order: r.order_if_found,
            elements_explored: r.elements_explored,
            bound: r.bound,
        }
    }
}

/// A 2x2 matrix as rows of cyclotomic coefficient vectors over the power
/// basis of the conductor field.
pub type MatrixOut = [[Vec<String>; 2]; 2];

pub fn matrix_out(m: &Matrix2) -> MatrixOut {
    let entry = |r: usize, c: usize| -> Vec<String> {
        m.entry(r, c)
            .coefficients()
            .iter()
            .map(rational_string)
            .collect()
    };
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonodromyReport {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub conductor: u32,
    pub g0: MatrixOut,
    pub g1: MatrixOut,
    pub g_inf: MatrixOut,
    pub invariant_form: MatrixOut,
    pub form_signature: SignatureOut,
    pub conjugate_signatures: Vec<ConjugateSignatureOut>,
    pub all_conjugate_forms_definite: bool,
    pub schwarz: SchwarzOut,
    pub interlacing: InterlacingOut,
    pub closure: ClosureOut,
    pub verdict: String,
    pub methods_agree: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResolveSingReport {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub n: u32,
    pub q: u32,
    pub string: Vec<u32>,
}

impl ResolveSingReport {
    pub fn new(n: u32, q: u32, s: &HjString) -> Self {
        ResolveSingReport {
            schema_version: SCHEMA_VERSION,
            n,
            q,
            string: s.coefficients.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReduceReport {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub base_change_order: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KodairaReport {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub e: i64,
    pub three_sigma: i64,
    pub consistent: bool,
    pub deg_v_positive: bool,
}

impl KodairaReport {
    pub fn from_check(c: &KodairaCheck) -> Self {
        KodairaReport {
            schema_version: SCHEMA_VERSION,
            e: c.e,
            three_sigma: c.three_sigma,
            consistent: c.consistent,
            deg_v_positive: c.deg_v_positive,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SummandOut {
    pub kind: String,
    pub rank: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub character: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monodromy: Option<String>,
}

impl SummandOut {
    fn from_summand(s: &Summand) -> Self {
        SummandOut {
            kind: match s.kind {
                SummandKind::Ample => "ample".into(),
                SummandKind::UnitaryFlat => "unitary_flat".into(),
            },
            rank: s.rank,
            character: s.character,
            monodromy: s.monodromy.map(|m| monodromy_string(m).into()),
        }
    }
}

pub fn monodromy_string(m: Monodromy) -> &'static str {
    match m {
        Monodromy::Finite => "finite",
        Monodromy::Infinite => "infinite",
        Monodromy::Unknown => "unknown",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FujitaReportOut {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub total_rank: u32,
    pub summands: Vec<SummandOut>,
    pub semiample: String,
    pub rationale: Vec<String>,
}

impl FujitaReportOut {
    pub fn from_report(r: &FujitaReport) -> Self {
        FujitaReportOut {
            schema_version: SCHEMA_VERSION,
            total_rank: r.total_rank,
            summands: r.summands.iter().map(SummandOut::from_summand).collect(),
            semiample: format!("{}", r.semiample),
            rationale: r.rationale.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorObject {
    #[serde(default = "default_version")]
    pub schema_version: u32,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

pub fn parse_params(p: &HgParamsIn) -> Result<HypergeometricParams, crate::CliError> {
    let parse = |s: &str| {
        fujita_core::parse_rational(s).map_err(|e| crate::CliError {
            code: "invalid-rational".into(),
            message: format!("{e}"),
        })
    };
    Ok(HypergeometricParams::new(
        parse(&p.alpha)?,
        parse(&p.beta)?,
        parse(&p.gamma)?,
    ))
}

//! Library behind the `fujita` command line: job parsing, dispatch into the
//! core analyses, and deterministic JSON / text rendering.
//!
//! One command per artifact: `analyze-cover`, `classify-hg`, `monodromy`,
//! `resolve-sing`, `reduce`, `fujita-report`, `kodaira-check`. Inputs and
//! outputs are versioned JSON objects with rationals as `"p/q"` strings;
//! identical inputs produce byte-identical output. Validation failures exit
//! with status 2 and a machine-readable error object.

pub mod schema;
pub mod text;

use serde::{Deserialize, Serialize};

use fujita_core::{SchwarzTable, DEFAULT_CONDUCTOR_CAP};

pub use schema::SCHEMA_VERSION;

/// Stable error object: `code` is machine-readable, `message` human-readable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: String,
    pub message: String,
}

impl CliError {
    pub fn new(code: &str, message: impl Into<String>) -> Self {
        CliError {
            code: code.into(),
            message: message.into(),
        }
    }

    pub fn to_json(&self) -> String {
        let obj = schema::ErrorObject {
            schema_version: SCHEMA_VERSION,
            error: schema::ErrorBody {
                code: self.code.clone(),
                message: self.message.clone(),
            },
        };
        let mut s = serde_json::to_string_pretty(&obj).expect("error object serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    AnalyzeCover,
    ClassifyHg,
    Monodromy,
    ResolveSing,
    Reduce,
    FujitaReport,
    KodairaCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Options {
    pub bfs_bound: usize,
    pub format: Format,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            bfs_bound: fujita_core::DEFAULT_BFS_BOUND,
            format: Format::Json,
        }
    }
}

/// A complete job: command, command-specific input body, options.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    #[serde(default = "schema_version_default")]
    pub schema_version: u32,
    pub command: Command,
    pub input: serde_json::Value,
    #[serde(default)]
    pub options: Options,
}

fn schema_version_default() -> u32 {
    SCHEMA_VERSION
}

/// Typed result of a job, before rendering.
#[derive(Debug, Clone, PartialEq)]
pub enum Report {
    Cover(schema::CoverReport),
    Hg(schema::HgReport),
    Monodromy(schema::MonodromyReport),
    ResolveSing(schema::ResolveSingReport),
    Reduce(schema::ReduceReport),
    Kodaira(schema::KodairaReport),
    Fujita(schema::FujitaReportOut),
}

impl Report {
    /// Deterministic JSON rendering (identical input, identical bytes).
    pub fn to_json(&self) -> String {
        let mut s = match self {
            Report::Cover(r) => serde_json::to_string_pretty(r),
            Report::Hg(r) => serde_json::to_string_pretty(r),
            Report::Monodromy(r) => serde_json::to_string_pretty(r),
            Report::ResolveSing(r) => serde_json::to_string_pretty(r),
            Report::Reduce(r) => serde_json::to_string_pretty(r),
            Report::Kodaira(r) => serde_json::to_string_pretty(r),
            Report::Fujita(r) => serde_json::to_string_pretty(r),
        }
        .expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        match self {
            Report::Cover(r) => text::cover_text(r),
            Report::Hg(r) => text::hg_text(r),
            Report::Monodromy(r) => text::monodromy_text(r),
            Report::ResolveSing(r) => text::resolve_sing_text(r),
            Report::Reduce(r) => text::reduce_text(r),
            Report::Kodaira(r) => text::kodaira_text(r),
            Report::Fujita(r) => text::fujita_text(r),
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

fn decode<T: serde::de::DeserializeOwned>(input: &serde_json::Value) -> Result<T, CliError> {
    serde_json::from_value(input.clone())
        .map_err(|e| CliError::new("schema-violation", format!("{e}")))
}

mod errmap {
    use super::CliError;
    use fujita_core::{CoverError, ExactError, FibrationError, HgError, MonodromyError};

    pub fn cover(e: CoverError) -> CliError {
        let code = match &e {
            CoverError::OrderTooSmall { .. } => "order-too-small",
            CoverError::SumNotZeroModN { .. } => "sum-not-zero-mod-n",
            CoverError::FewerThanThreePoints { .. } => "fewer-than-three-points",
            CoverError::DuplicateLabel { .. } => "duplicate-label",
            CoverError::Disconnected { .. } => "disconnected-cover",
            CoverError::TrivialLocalMonodromy { .. } => "trivial-local-monodromy",
            CoverError::InvalidCharacter { .. } => "invalid-character",
            CoverError::NonIntegralGenus => "non-integral-genus",
            CoverError::InvalidRamification { .. } => "invalid-ramification",
        };
        CliError::new(code, format!("{e}"))
    }

    pub fn hg(e: HgError) -> CliError {
        match e {
            HgError::NotFourPoints { .. } => CliError::new("not-four-points", format!("{e}")),
            HgError::UnknownLabel => CliError::new("unknown-label", format!("{e}")),
            HgError::Cover(c) => cover(c),
        }
    }

    pub fn exact(e: ExactError) -> CliError {
        let code = match &e {
            ExactError::ConductorLimit { .. } => "conductor-limit",
            ExactError::ConductorMismatch { .. } => "conductor-mismatch",
            ExactError::NotReal => "not-real",
            ExactError::DivisionByZero => "division-by-zero",
        };
        CliError::new(code, format!("{e}"))
    }

    pub fn monodromy(e: MonodromyError) -> CliError {
        match e {
            MonodromyError::ResonantInput => CliError::new("resonant-input", format!("{e}")),
            MonodromyError::Exact(x) => exact(x),
            MonodromyError::ArithmeticLimit { .. } => {
                CliError::new("arithmetic-limit", format!("{e}"))
            }
            MonodromyError::NoInvariantForm => CliError::new("no-invariant-form", format!("{e}")),
            MonodromyError::Form(_) => CliError::new("invalid-form", format!("{e}")),
            MonodromyError::BrokenProductRelation => {
                CliError::new("broken-product-relation", format!("{e}"))
            }
        }
    }

    pub fn fibration(e: FibrationError) -> CliError {
        match e {
            FibrationError::GcdNotOne { .. } => CliError::new("gcd-not-one", format!("{e}")),
            FibrationError::TypeOutOfRange { .. } => {
                CliError::new("type-out-of-range", format!("{e}"))
            }
            FibrationError::EmptyMultiplicities => {
                CliError::new("empty-multiplicities", format!("{e}"))
            }
            FibrationError::ZeroMultiplicity => CliError::new("zero-multiplicity", format!("{e}")),
            FibrationError::InconsistentBaseGenus { .. } => {
                CliError::new("inconsistent-base-genus", format!("{e}"))
            }
            FibrationError::RamificationCountMismatch { .. } => {
                CliError::new("ramification-count-mismatch", format!("{e}"))
            }
            FibrationError::UnknownMovingLabel { .. } => {
                CliError::new("unknown-moving-label", format!("{e}"))
            }
            FibrationError::Cover(c) => cover(c),
            FibrationError::Hg(h) => hg(h),
            FibrationError::Monodromy(m) => monodromy(m),
        }
    }
}

fn run_analyze_cover(input: &serde_json::Value) -> Result<Report, CliError> {
    let body: schema::BranchDataIn = decode(input)?;
    let b = body.to_branch_data().map_err(errmap::cover)?;
    let table = fujita_core::cover::eigenspace_table(&b).map_err(errmap::cover)?;
    Ok(Report::Cover(schema::CoverReport::from_table(&table)))
}

fn hg_report_body(p: &fujita_core::HypergeometricParams) -> schema::HgReport {
    use fujita_core::hypergeometric as hg;
    use schema::rational_string as rs;
    let scheme = fujita_core::riemann_scheme(p);
    let d = hg::exponent_differences(p);
    let orders = fujita_core::local_orders(p);
    let irreducible = fujita_core::is_irreducible(p);
    let table = SchwarzTable::builtin();
    let (schwarz, interlacing, finite) = if irreducible {
        let sv = fujita_core::schwarz::classify_params(p, &table);
        let iv = fujita_core::interlacing_finiteness(p).expect("irreducible checked");
        let finite = if sv.finite == iv.finite {
            Some(sv.finite)
        } else {
            None
        };
        (
            Some(schema::SchwarzOut {
                finite: sv.finite,
                class: format!("{}", sv.class),
                table_row: sv.table_row,
            }),
            Some(schema::InterlacingOut {
                finite: iv.finite,
                failing_k: iv.witness.as_ref().map(|w| w.k),
                conjugates_checked: iv.conjugates_checked,
            }),
            finite,
        )
    } else {
        (None, None, None)
    };
    schema::HgReport {
        schema_version: SCHEMA_VERSION,
        alpha: rs(&p.alpha),
        beta: rs(&p.beta),
        gamma: rs(&p.gamma),
        riemann_scheme: [
            [rs(&scheme.at0.0), rs(&scheme.at0.1)],
            [rs(&scheme.at1.0), rs(&scheme.at1.1)],
            [rs(&scheme.at_inf.0), rs(&scheme.at_inf.1)],
        ],
        exponent_differences: [rs(&d.lambda), rs(&d.mu), rs(&d.nu)],
        local_orders: orders.as_array(),
        possibly_unipotent: orders.possibly_unipotent,
        irreducible,
        pairwise_nonresonant: hg::pairwise_nonresonant(p),
        nonresonance_criteria_disagree: hg::nonresonance_criteria_disagree(p),
        schwarz,
        interlacing,
        finite,
    }
}

fn run_classify_hg(input: &serde_json::Value) -> Result<Report, CliError> {
    let body: schema::HgParamsIn = decode(input)?;
    let p = schema::parse_params(&body)?;
    Ok(Report::Hg(hg_report_body(&p)))
}

fn run_monodromy(input: &serde_json::Value, bfs_bound: usize) -> Result<Report, CliError> {
    let body: schema::HgParamsIn = decode(input)?;
    let p = schema::parse_params(&body)?;
    let table = SchwarzTable::builtin();
    let rep = fujita_core::monodromy::levelt_generators(&p, DEFAULT_CONDUCTOR_CAP)
        .map_err(errmap::monodromy)?;
    let form = fujita_core::invariant_form(&rep).map_err(errmap::monodromy)?;
    let summary = fujita_core::finiteness_report(&p, bfs_bound, &table, DEFAULT_CONDUCTOR_CAP)
        .map_err(errmap::monodromy)?;
    Ok(Report::Monodromy(schema::MonodromyReport {
        schema_version: SCHEMA_VERSION,
        conductor: rep.conductor(),
        g0: schema::matrix_out(rep.g0()),
        g1: schema::matrix_out(rep.g1()),
        g_inf: schema::matrix_out(rep.g_inf()),
        invariant_form: schema::matrix_out(form.matrix()),
        form_signature: form
            .signature()
            .map_err(|e| CliError::new("invalid-form", format!("{e}")))?
            .into(),
        conjugate_signatures: summary
            .conjugate_signatures
            .iter()
            .map(|(k, s)| schema::ConjugateSignatureOut {
                k: *k,
                positive: s.positive,
                negative: s.negative,
                nullity: s.nullity,
            })
            .collect(),
        all_conjugate_forms_definite: summary.all_conjugate_forms_definite,
        schwarz: schema::SchwarzOut {
            finite: summary.schwarz.finite,
            class: format!("{}", summary.schwarz.class),
            table_row: summary.schwarz.table_row,
        },
        interlacing: schema::InterlacingOut {
            finite: summary.interlacing.finite,
            failing_k: summary.interlacing.witness.as_ref().map(|w| w.k),
            conjugates_checked: summary.interlacing.conjugates_checked,
        },
        closure: (&summary.closure).into(),
        verdict: schema::monodromy_string(summary.verdict).into(),
        methods_agree: summary.methods_agree,
    }))
}

fn run_resolve_sing(input: &serde_json::Value) -> Result<Report, CliError> {
    let body: schema::ResolveSingIn = decode(input)?;
    let s = fujita_core::QuotientSingularity::new(body.n, body.q).map_err(errmap::fibration)?;
    let hj = fujita_core::hj_resolve(&s);
    Ok(Report::ResolveSing(schema::ResolveSingReport::new(
        body.n, body.q, &hj,
    )))
}

fn run_reduce(input: &serde_json::Value) -> Result<Report, CliError> {
    let body: schema::ReduceIn = decode(input)?;
    let order =
        fujita_core::semistable_base_order(&body.multiplicities).map_err(errmap::fibration)?;
    Ok(Report::Reduce(schema::ReduceReport {
        schema_version: SCHEMA_VERSION,
        base_change_order: order,
    }))
}

fn run_kodaira(input: &serde_json::Value) -> Result<Report, CliError> {
    let body: schema::KodairaIn = decode(input)?;
    let c = fujita_core::kodaira_degree_check(body.k2, body.b, body.g, body.sigma);
    Ok(Report::Kodaira(schema::KodairaReport::from_check(&c)))
}

fn run_fujita(input: &serde_json::Value, bfs_bound: usize) -> Result<Report, CliError> {
    let body: schema::FujitaIn = decode(input)?;
    let fiber = body.fiber.to_branch_data().map_err(errmap::cover)?;
    let spec = fujita_core::FibrationSpec {
        fiber_branch: fiber,
        moving_label: body.moving_label.clone(),
        base_genus: body.base_genus,
        base_cover: body.base_cover.as_ref().map(|c| fujita_core::BaseCover {
            order: c.order,
            ram_orders: c.ram_orders.clone(),
        }),
    };
    let table = SchwarzTable::builtin();
    let report =
        fujita_core::fujita_decomposition(&spec, &table, bfs_bound).map_err(errmap::fibration)?;
    Ok(Report::Fujita(schema::FujitaReportOut::from_report(
        &report,
    )))
}

/// Execute a job: the single entry point behind the binary.
pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    if job.schema_version != SCHEMA_VERSION {
        return Err(CliError::new(
            "schema-violation",
            format!(
                "unsupported schema_version {} (this build speaks {})",
                job.schema_version, SCHEMA_VERSION
            ),
        ));
    }
    match job.command {
        Command::AnalyzeCover => run_analyze_cover(&job.input),
        Command::ClassifyHg => run_classify_hg(&job.input),
        Command::Monodromy => run_monodromy(&job.input, job.options.bfs_bound),
        Command::ResolveSing => run_resolve_sing(&job.input),
        Command::Reduce => run_reduce(&job.input),
        Command::KodairaCheck => run_kodaira(&job.input),
        Command::FujitaReport => run_fujita(&job.input, job.options.bfs_bound),
    }
}

/// Parse a complete JobSpec from JSON text and execute it.
pub fn run_json(text: &str) -> Result<Report, CliError> {
    let job: JobSpec = serde_json::from_str(text)
        .map_err(|e| CliError::new("schema-violation", format!("{e}")))?;
    run(&job)
}

/// The shipped machine-readable description of the wire format.
pub const JSON_SCHEMA: &str = include_str!("../schema/fujita-cli-v1.schema.json");

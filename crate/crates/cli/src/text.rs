//! Plain-text rendering of reports: fixed-width tables in the style of the
//! eigenspace tables the analysis reproduces.

use crate::schema::*;
use std::fmt::Write;

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    let mut out = String::new();
    let mut line = String::new();
    for (h, w) in header.iter().zip(&widths) {
        let _ = write!(line, "{h:<w$}  ");
    }
    out.push_str(line.trim_end());
    out.push('\n');
    for row in rows {
        let mut line = String::new();
        for (cell, w) in row.iter().zip(&widths) {
            let _ = write!(line, "{cell:<w$}  ");
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn yesno(b: bool) -> String {
    String::from(if b { "yes" } else { "no" })
}

pub fn cover_text(r: &CoverReport) -> String {
    let mut out = format!(
        "cyclic cover of the line: n = {}, branch points = {}, genus = {}\n\n",
        r.n, r.num_points, r.genus
    );
    let rows: Vec<Vec<String>> = r
        .characters
        .iter()
        .map(|c| {
            vec![
                c.j.to_string(),
                c.h10.to_string(),
                c.h01.to_string(),
                c.rank.to_string(),
                c.degree.to_string(),
                yesno(c.unitary_flat),
                c.local_exponents.join(" "),
            ]
        })
        .collect();
    out.push_str(&table(
        &[
            "j",
            "h10",
            "h01",
            "rank",
            "deg L_j",
            "unitary flat",
            "local exponents",
        ],
        &rows,
    ));
    out
}

pub fn hg_text(r: &HgReport) -> String {
    let mut out = format!(
        "hypergeometric parameters: alpha = {}, beta = {}, gamma = {}\n",
        r.alpha, r.beta, r.gamma
    );
    let _ = writeln!(
        out,
        "riemann scheme: at 0: ({}, {}); at 1: ({}, {}); at inf: ({}, {})",
        r.riemann_scheme[0][0],
        r.riemann_scheme[0][1],
        r.riemann_scheme[1][0],
        r.riemann_scheme[1][1],
        r.riemann_scheme[2][0],
        r.riemann_scheme[2][1],
    );
    let _ = writeln!(
        out,
        "exponent differences: ({}, {}, {})",
        r.exponent_differences[0], r.exponent_differences[1], r.exponent_differences[2]
    );
    let _ = writeln!(
        out,
        "local projective orders at (0, 1, inf): ({}, {}, {})",
        r.local_orders[0], r.local_orders[1], r.local_orders[2]
    );
    let _ = writeln!(out, "irreducible: {}", yesno(r.irreducible));
    if r.nonresonance_criteria_disagree {
        let _ = writeln!(
            out,
            "note: the pairwise non-resonance variant disagrees here (pairwise: {})",
            yesno(r.pairwise_nonresonant)
        );
    }
    match (&r.schwarz, &r.interlacing) {
        (Some(s), Some(i)) => {
            let _ = writeln!(
                out,
                "schwarz table: {}{}",
                s.class,
                s.table_row
                    .map(|n| format!(" (row {n})"))
                    .unwrap_or_default()
            );
            match i.failing_k {
                Some(k) => {
                    let _ = writeln!(
                        out,
                        "interlacing: fails at conjugate k = {k} of {} checked",
                        i.conjugates_checked
                    );
                }
                None => {
                    let _ = writeln!(
                        out,
                        "interlacing: all {} conjugates interlace",
                        i.conjugates_checked
                    );
                }
            }
            let _ = writeln!(
                out,
                "projective monodromy finite: {}",
                r.finite.map(yesno).unwrap_or_else(|| "disputed".into())
            );
        }
        _ => {
            let _ = writeln!(
                out,
                "reducible parameters: finiteness classifiers not applicable"
            );
        }
    }
    out
}

fn matrix_text(m: &MatrixOut) -> String {
    let entry = |e: &Vec<String>| format!("[{}]", e.join(", "));
    format!(
        "[{} {}; {} {}]",
        entry(&m[0][0]),
        entry(&m[0][1]),
        entry(&m[1][0]),
        entry(&m[1][1])
    )
}

pub fn monodromy_text(r: &MonodromyReport) -> String {
    let mut out = format!("monodromy over Q(zeta_{})\n", r.conductor);
    let _ = writeln!(out, "g0    = {}", matrix_text(&r.g0));
    let _ = writeln!(out, "g1    = {}", matrix_text(&r.g1));
    let _ = writeln!(out, "g_inf = {}", matrix_text(&r.g_inf));
    let _ = writeln!(out, "invariant form = {}", matrix_text(&r.invariant_form));
    let _ = writeln!(
        out,
        "form signature: ({}, {}, {})",
        r.form_signature.positive, r.form_signature.negative, r.form_signature.nullity
    );
    for c in &r.conjugate_signatures {
        let _ = writeln!(
            out,
            "  conjugate k = {}: signature ({}, {}, {})",
            c.k, c.positive, c.negative, c.nullity
        );
    }
    let _ = writeln!(
        out,
        "all conjugate forms definite: {}",
        yesno(r.all_conjugate_forms_definite)
    );
    let _ = writeln!(out, "schwarz table: {}", r.schwarz.class);
    let _ = writeln!(
        out,
        "closure search: {} (explored {}, bound {})",
        match r.closure.order {
            Some(o) => format!("closed at order {o}"),
            None => String::from("did not close"),
        },
        r.closure.elements_explored,
        r.closure.bound
    );
    let _ = writeln!(
        out,
        "verdict: {} (methods agree: {})",
        r.verdict,
        yesno(r.methods_agree)
    );
    out
}

pub fn resolve_sing_text(r: &ResolveSingReport) -> String {
    format!(
        "quotient singularity 1/{} ({}, {}): Hirzebruch-Jung string [{}]\n",
        r.n,
        1,
        r.q,
        r.string
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
}

pub fn reduce_text(r: &ReduceReport) -> String {
    format!(
        "minimal semistable base-change order: {}\n",
        r.base_change_order
    )
}

pub fn kodaira_text(r: &KodairaReport) -> String {
    format!(
        "e = {}, 3*sigma = {}, consistent: {}, deg V > 0: {}\n",
        r.e,
        r.three_sigma,
        yesno(r.consistent),
        yesno(r.deg_v_positive)
    )
}

pub fn fujita_text(r: &FujitaReportOut) -> String {
    let mut out = format!("direct image decomposition, total rank {}\n", r.total_rank);
    let mut qn = 0;
    for s in &r.summands {
        match s.kind.as_str() {
            "ample" => {
                let _ = writeln!(out, "  A: ample, rank {}", s.rank);
            }
            _ => {
                qn += 1;
                let _ = writeln!(
                    out,
                    "  Q{}: unitary flat, rank {}, character {}, monodromy {}",
                    qn,
                    s.rank,
                    s.character.map(|j| j.to_string()).unwrap_or_default(),
                    s.monodromy.clone().unwrap_or_default()
                );
            }
        }
    }
    let _ = writeln!(out, "semi-ample: {}", r.semiample);
    let _ = writeln!(out, "rationale: {}", r.rationale.join(", "));
    out
}

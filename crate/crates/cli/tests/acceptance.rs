//! Acceptance suite: every shipped claim, one test per criterion, exact
//! arithmetic throughout (zero tolerance unless a bound is part of the
//! claim). Each test prints a `criterion NN PASS` line.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};

use num_integer::Integer;
use rayon::prelude::*;

use fujita_core::*;

const PAPER_COVER: &str = r#"{"n":7,"branch":[{"label":"0","m":1},{"label":"1","m":1},{"label":"x","m":1},{"label":"inf","m":4}]}"#;

fn run_binary(args: &[&str], stdin: &str) -> (Option<i32>, Vec<u8>) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_fujita"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code(), out.stdout)
}

fn paper_cover_report() -> fujita_cli::schema::CoverReport {
    let (code, stdout) = run_binary(&["analyze-cover"], PAPER_COVER);
    assert_eq!(code, Some(0));
    serde_json::from_slice(&stdout).expect("cover report parses")
}

fn paper_params() -> HypergeometricParams {
    HypergeometricParams::new(rat(8, 7), rat(3, 7), rat(9, 7))
}

#[test]
fn criterion_01_genus_of_paper_curve() {
    let report = paper_cover_report();
    assert_eq!(report.genus, 6);
    println!("criterion 01 PASS: analyze-cover reports genus 6 for n=7, m=(1,1,1,4)");
}

#[test]
fn criterion_02_eigenspace_dimensions() {
    let report = paper_cover_report();
    let dims: Vec<u32> = report.characters.iter().map(|c| c.h10).collect();
    assert_eq!(dims, vec![2, 2, 1, 1, 0, 0]);
    println!("criterion 02 PASS: eigenspace dimensions (2,2,1,1,0,0)");
}

#[test]
fn criterion_03_eigensheaf_degrees() {
    let report = paper_cover_report();
    let degs: Vec<u32> = report.characters.iter().map(|c| c.degree).collect();
    assert_eq!(degs, vec![1, 1, 2, 2, 3, 3]);
    println!("criterion 03 PASS: eigensheaf degrees (1,1,2,2,3,3)");
}

#[test]
fn criterion_04_unitary_flat_flags() {
    let report = paper_cover_report();
    for j in [1usize, 2] {
        let c = &report.characters[j - 1];
        assert!(c.unitary_flat && c.h10 == 2 && c.h01 == 0 && c.rank == 2);
    }
    for j in [3usize, 4] {
        let c = &report.characters[j - 1];
        assert!(!c.unitary_flat && (c.h10, c.h01) == (1, 1));
    }
    println!("criterion 04 PASS: j=1,2 unitary flat rank 2; j=3,4 mixed (1,1)");
}

#[test]
fn criterion_05_hypergeometric_identification() {
    // first family: exponents (1, 1, 4, 1) on the slots (0, 1, x, inf)
    let b = BranchData::new(
        7,
        [("0", 1i64), ("1", 1), ("x", 4), ("inf", 1)]
            .iter()
            .map(|(l, m)| (l.to_string(), *m)),
    )
    .unwrap();
    let j1 = CharacterIndex::new(1, 7).unwrap();
    let p = character_to_hg(&b, &j1).unwrap();
    assert_eq!(p, paper_params());
    println!("criterion 05 PASS: j=1 system of the first family is exactly (8/7, 3/7, 9/7)");
}

#[test]
fn criterion_06_local_orders_and_irreducibility() {
    let p = paper_params();
    assert_eq!(local_orders(&p).as_array(), [7, 7, 7]);
    assert!(is_irreducible(&p));
    let (code, stdout) = run_binary(
        &["classify-hg"],
        r#"{"alpha":"8/7","beta":"3/7","gamma":"9/7"}"#,
    );
    assert_eq!(code, Some(0));
    let report: fujita_cli::schema::HgReport = serde_json::from_slice(&stdout).unwrap();
    assert_eq!(report.local_orders, [7, 7, 7]);
    assert!(report.irreducible);
    println!("criterion 06 PASS: local orders (7,7,7) and irreducibility");
}

#[test]
fn criterion_07_all_methods_report_infinite() {
    let table = SchwarzTable::builtin();
    let summary =
        finiteness_report(&paper_params(), 20_000, &table, DEFAULT_CONDUCTOR_CAP).unwrap();
    assert!(!summary.schwarz.finite, "schwarz lookup");
    assert!(!summary.interlacing.finite, "interlacing");
    assert!(
        !summary.all_conjugate_forms_definite,
        "some conjugate invariant form is indefinite"
    );
    assert!(
        !summary.closure.finite_within_bound,
        "closure must not terminate within 2*10^4"
    );
    assert!(summary.methods_agree);
    assert_eq!(summary.verdict, Monodromy::Infinite);
    println!(
        "criterion 07 PASS: schwarz, interlacing, indefinite form, and closure all report infinite"
    );
}

/// Every irreducible parameter triple with denominators dividing some
/// `N <= 12`, each exactly once (finiteness data is invariant modulo
/// integer shifts, so the unit cube is exhaustive).
fn sweep_params() -> Vec<HypergeometricParams> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 1..=12u32 {
        for p in schwarz::irreducible_params_with_denominator(n) {
            if seen.insert((p.alpha.clone(), p.beta.clone(), p.gamma.clone())) {
                out.push(p);
            }
        }
    }
    out
}

#[test]
fn criterion_08_cross_oracle_sweep() {
    let table = SchwarzTable::builtin();
    let params = sweep_params();
    let mut finite = 0u64;
    for p in &params {
        let sv = schwarz::classify_params(p, &table);
        let iv = interlacing_finiteness(p).unwrap();
        assert_eq!(
            sv.finite, iv.finite,
            "oracle disagreement at ({}, {}, {})",
            p.alpha, p.beta, p.gamma
        );
        if sv.finite {
            finite += 1;
        }
    }
    assert!(
        params.len() > 1500,
        "sweep unexpectedly small: {}",
        params.len()
    );
    assert!(finite > 50);
    println!(
        "criterion 08 PASS: schwarz and interlacing agree on all {} irreducible triples ({} finite)",
        params.len(),
        finite
    );
}

/// Closure behavior is invariant under swapping alpha and beta (identical
/// companion matrices) and under Galois conjugation (an exact ring
/// automorphism maps words to words); dedup the sweep by those symmetries.
fn orbit_key(p: &HypergeometricParams) -> (Rational, Rational, Rational) {
    let n = monodromy::parameter_conductor(p) as i64;
    (1..=n)
        .filter(|k| k.gcd(&n) == 1)
        .map(|k| {
            let kq = rat(k, 1);
            let mut ab = [frac(&(&p.alpha * &kq)), frac(&(&p.beta * &kq))];
            ab.sort();
            let [a, b] = ab;
            (a, b, frac(&(&p.gamma * &kq)))
        })
        .min()
        .unwrap()
}

#[test]
fn criterion_09_bfs_coherence_and_frozen_orders() {
    let table = SchwarzTable::builtin();
    let params = sweep_params();
    let mut orbits: BTreeSet<(Rational, Rational, Rational)> = BTreeSet::new();
    let mut reps: Vec<HypergeometricParams> = Vec::new();
    for p in &params {
        if orbits.insert(orbit_key(p)) {
            reps.push(p.clone());
        }
    }
    // regression-frozen orbit count for this sweep
    assert_eq!(reps.len(), 450);

    let results: Vec<(bool, Option<usize>, bool)> = reps
        .par_iter()
        .map(|p| {
            let oracle_finite = interlacing_finiteness(p).unwrap().finite
                && schwarz::classify_params(p, &table).finite;
            let rep = monodromy::levelt_generators_default(p).unwrap();
            let r = closure_bfs(&rep, 20_000).unwrap();
            (oracle_finite, r.order_if_found, r.finite_within_bound)
        })
        .collect();

    let mut orders = Vec::new();
    for ((oracle_finite, order, closed), p) in results.iter().zip(&reps) {
        assert_eq!(
            *closed, *oracle_finite,
            "closure terminated iff oracles say finite; failed at ({}, {}, {})",
            p.alpha, p.beta, p.gamma
        );
        if let Some(o) = order {
            orders.push(*o);
        }
    }
    // regression-frozen group-order statistics from the first run
    assert_eq!(orders.len(), 27);
    assert_eq!(orders.iter().sum::<usize>(), 2696);
    assert_eq!(orders.iter().max(), Some(&600));

    // stability across runs: recompute every finite closure
    let finite_reps: Vec<&HypergeometricParams> = reps
        .iter()
        .zip(&results)
        .filter(|(_, r)| r.2)
        .map(|(p, _)| p)
        .collect();
    let orders_again: Vec<usize> = finite_reps
        .iter()
        .map(|p| {
            let rep = monodromy::levelt_generators_default(p).unwrap();
            closure_bfs(&rep, 20_000).unwrap().order_if_found.unwrap()
        })
        .collect();
    assert_eq!(
        orders, orders_again,
        "closure orders must be stable across runs"
    );

    // the symmetry dedup is itself checked: sampled non-representatives give
    // the same result as their orbit representative
    let mut spot = 0;
    for (i, p) in params.iter().enumerate() {
        if i % 379 != 0 {
            continue;
        }
        let key = orbit_key(p);
        let rep_idx = reps.iter().position(|r| orbit_key(r) == key).unwrap();
        let direct =
            closure_bfs(&monodromy::levelt_generators_default(p).unwrap(), 20_000).unwrap();
        assert_eq!(direct.finite_within_bound, results[rep_idx].2);
        assert_eq!(direct.order_if_found, results[rep_idx].1);
        spot += 1;
    }
    assert!(spot >= 5);
    println!(
        "criterion 09 PASS: closure terminates exactly on the {} finite orbits of {}; orders stable (sum {}, max {})",
        orders.len(),
        reps.len(),
        2696,
        600
    );
}

#[test]
fn criterion_10_hurwitz_base_genus() {
    assert_eq!(cover::hurwitz_base_genus(7, 0, &[7, 7, 7]).unwrap(), 3);
    println!("criterion 10 PASS: order-7 cover of the line with three full ramification points has genus 3");
}

#[test]
fn criterion_11_hirzebruch_jung() {
    assert_eq!(
        hj_resolve(&QuotientSingularity::new(7, 3).unwrap()).coefficients,
        vec![3, 2, 2]
    );
    assert_eq!(
        hj_resolve(&QuotientSingularity::new(7, 6).unwrap()).coefficients,
        vec![2; 6]
    );
    for n in 2..=50u32 {
        for q in 1..n {
            if q.gcd(&n) != 1 {
                continue;
            }
            let s = hj_resolve(&QuotientSingularity::new(n, q).unwrap());
            assert_eq!(s.value(), rat(n as i64, q as i64));
        }
    }
    println!("criterion 11 PASS: (7,3) -> [3,2,2], (7,6) -> [2x6], round trip for all n <= 50");
}

#[test]
fn criterion_12_semistable_base_orders() {
    assert_eq!(semistable_base_order(&[7, 4, 2, 1, 1]).unwrap(), 28);
    assert_eq!(semistable_base_order(&[1, 2, 3, 7, 3, 2, 1]).unwrap(), 42);
    let (code, stdout) = run_binary(&["reduce"], r#"{"multiplicities":[7,4,2,1,1]}"#);
    assert_eq!(code, Some(0));
    let r: fujita_cli::schema::ReduceReport = serde_json::from_slice(&stdout).unwrap();
    assert_eq!(r.base_change_order, 28);
    println!("criterion 12 PASS: base-change orders 28 and 42");
}

#[test]
fn criterion_13_end_to_end_fujita_reports() {
    // the worked surface: genus-3 base, three order-7 ramification points
    let spec_json = format!(
        r#"{{"fiber":{PAPER_COVER},"moving_label":"x","base_genus":3,"base_cover":{{"order":7,"ram_orders":[7,7,7]}}}}"#
    );
    let (code, stdout) = run_binary(&["fujita-report", "--bfs-bound", "20000"], &spec_json);
    assert_eq!(code, Some(0));
    let r: fujita_cli::schema::FujitaReportOut = serde_json::from_slice(&stdout).unwrap();
    assert_eq!(r.total_rank, 6);
    assert_eq!(r.semiample, "no");
    let shape: Vec<(String, u32, Option<u32>, Option<String>)> = r
        .summands
        .iter()
        .map(|s| (s.kind.clone(), s.rank, s.character, s.monodromy.clone()))
        .collect();
    assert_eq!(
        shape,
        vec![
            ("ample".to_string(), 2, None, None),
            (
                "unitary_flat".to_string(),
                2,
                Some(1),
                Some("infinite".to_string())
            ),
            (
                "unitary_flat".to_string(),
                2,
                Some(2),
                Some("infinite".to_string())
            ),
        ]
    );

    // base genus <= 1 forces yes
    let paper = BranchData::new(
        7,
        [("0", 1i64), ("1", 1), ("x", 1), ("inf", 4)]
            .iter()
            .map(|(l, m)| (l.to_string(), *m)),
    )
    .unwrap();
    let table = SchwarzTable::builtin();
    for genus in [0u32, 1] {
        let spec = FibrationSpec {
            fiber_branch: paper.clone(),
            moving_label: Some("x".into()),
            base_genus: genus,
            base_cover: None,
        };
        let r = fujita_decomposition(&spec, &table, 20_000).unwrap();
        assert_eq!(r.semiample, Semiample::Yes);
    }

    // all-rank-1 flat summands force yes through the torsion rule
    let fiber = BranchData::new(
        3,
        [("0", 1i64), ("1", 1), ("inf", 1)]
            .iter()
            .map(|(l, m)| (l.to_string(), *m)),
    )
    .unwrap();
    let spec = FibrationSpec {
        fiber_branch: fiber,
        moving_label: None,
        base_genus: 5,
        base_cover: None,
    };
    let r = fujita_decomposition(&spec, &table, 20_000).unwrap();
    assert_eq!(r.semiample, Semiample::Yes);
    assert!(r
        .summands
        .iter()
        .all(|s| s.kind == SummandKind::UnitaryFlat && s.rank == 1));
    println!("criterion 13 PASS: worked report A(2)+Q1(2,inf)+Q2(2,inf) not semi-ample; genus<=1 and rank-1 rules give yes");
}

#[test]
fn criterion_14_kodaira_identities() {
    let mut grid = 0;
    for b in 2..=5u32 {
        for g in 2..=5u32 {
            for sigma in -3i64..=3 {
                let e = 4 * (b as i64 - 1) * (g as i64 - 1);
                let k2 = 3 * sigma + 2 * e;
                let c = kodaira_degree_check(k2, b, g, sigma);
                assert_eq!(c.e, e);
                assert!(c.consistent);
                assert_eq!(c.deg_v_positive, sigma > 0);
                let off = kodaira_degree_check(k2 + 1, b, g, sigma);
                assert!(!off.consistent);
                grid += 1;
            }
        }
    }
    assert_eq!(grid, 112);
    println!("criterion 14 PASS: 3*sigma = K^2 - 2e with e = 4(b-1)(g-1) on a {grid}-point grid");
}

#[test]
fn criterion_15_hodge_sum_on_random_covers() {
    // deterministic xorshift so the 200 cases are reproducible
    let mut state: u64 = 0x9e3779b97f4a7c15;
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    let mut checked = 0;
    while checked < 200 {
        let n = 2 + (next() % 11) as u32; // 2..=12
        let units: Vec<u32> = (1..n).filter(|m| m.gcd(&n) == 1).collect();
        let extra = 1 + (next() % 4) as usize;
        let mut ms: Vec<u32> = (0..extra)
            .map(|_| units[(next() % units.len() as u64) as usize])
            .collect();
        let s: u32 = ms.iter().sum::<u32>() % n;
        let offset = (next() % units.len() as u64) as usize;
        let mut closed = false;
        for i in 0..units.len() {
            let u = units[(i + offset) % units.len()];
            let v = (2 * n - (s + u) % n) % n;
            if v != 0 && v.gcd(&n) == 1 {
                ms.push(u);
                ms.push(v);
                closed = true;
                break;
            }
        }
        if !closed {
            ms = vec![1, 1, n - 1, n - 1];
        }
        let b = BranchData::new(
            n,
            ms.iter()
                .enumerate()
                .map(|(i, &m)| (format!("p{i}"), m as i64)),
        )
        .unwrap();
        let table = cover::eigenspace_table(&b).unwrap();
        assert_eq!(
            table.rows.iter().map(|r| r.h10).sum::<u32>(),
            table.genus,
            "hodge sum failed for n={n}, ms={ms:?}"
        );
        checked += 1;
    }
    println!("criterion 15 PASS: hodge sum equals genus on 200 randomized covers with n <= 12");
}

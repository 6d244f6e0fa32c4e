//! Explicit rank-2 monodromy over a cyclotomic field.
//!
//! Generators are in companion (Levelt) form: `g_inf` realizes the eigenvalue
//! arguments `{frac(alpha), frac(beta)}`, `g0` the arguments
//! `{0, frac(1-gamma)}`, and `g1` is forced by `g0 * g1 * g_inf = I`. All
//! relations hold exactly. The invariant Hermitian form is the nonzero
//! solution of an exact rational linear system, unique up to a real-subfield
//! scalar and pinned by scaling the leading diagonal entry to 1.
//!
//! Finiteness is probed empirically by a breadth-first closure of the
//! generated group under exact matrix equality, and cross-checked against the
//! Schwarz table, the interlacing criterion, and definiteness of every Galois
//! conjugate of the invariant form. The four methods must agree; a
//! discrepancy is surfaced, never resolved silently.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::cyclotomic::{CycloField, CyclotomicNumber, ExactError, DEFAULT_CONDUCTOR_CAP};
use crate::hypergeometric::{is_irreducible, HypergeometricParams};
use crate::matrix::{FormError, HermitianForm2, Matrix2, Signature};
use crate::rational::{denominator_u64, frac, Rational, UnitArg};
use crate::schwarz::{
    classify_params, interlacing_finiteness, FinitenessVerdict, InterlacingVerdict, SchwarzTable,
};

/// Default cap on the closure search, comfortably above every finite linear
/// hypergeometric group at desk-scale conductors.
pub const DEFAULT_BFS_BOUND: usize = 20_000;

/// Guard on entry growth during the closure search, in total stored bits per
/// matrix.
const MATRIX_BIT_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonodromyError {
    /// Construction requires irreducible (non-resonant) parameters.
    ResonantInput,
    /// Conductor out of range, or other exact-arithmetic failures.
    Exact(ExactError),
    /// Entries outgrew the arithmetic guard during the closure search.
    ArithmeticLimit {
        bits: u64,
    },
    /// Only the zero form is invariant (cannot happen for irreducible input).
    NoInvariantForm,
    Form(FormError),
    /// Generator triple does not satisfy the product relation.
    BrokenProductRelation,
}

impl fmt::Display for MonodromyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonodromyError::ResonantInput => write!(f, "parameters are resonant (reducible)"),
            MonodromyError::Exact(e) => write!(f, "{e}"),
            MonodromyError::ArithmeticLimit { bits } => {
                write!(f, "resource limit: matrix entries reached {bits} bits")
            }
            MonodromyError::NoInvariantForm => write!(f, "no nonzero invariant Hermitian form"),
            MonodromyError::Form(e) => write!(f, "{e}"),
            MonodromyError::BrokenProductRelation => {
                write!(f, "generators do not satisfy g0*g1*g_inf = I")
            }
        }
    }
}

impl From<ExactError> for MonodromyError {
    fn from(e: ExactError) -> Self {
        MonodromyError::Exact(e)
    }
}

impl From<FormError> for MonodromyError {
    fn from(e: FormError) -> Self {
        MonodromyError::Form(e)
    }
}

/// Exact monodromy generators with `g0 * g1 * g_inf = I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyRep {
    field: Arc<CycloField>,
    g0: Matrix2,
    g1: Matrix2,
    g_inf: Matrix2,
    source_params: HypergeometricParams,
}

impl MonodromyRep {
    /// Assemble a representation from explicit generators, verifying the
    /// product relation exactly.
    pub fn from_generators(
        g0: Matrix2,
        g1: Matrix2,
        g_inf: Matrix2,
        source_params: HypergeometricParams,
    ) -> Result<Self, MonodromyError> {
        if !g0.mul(&g1).mul(&g_inf).is_identity() {
            return Err(MonodromyError::BrokenProductRelation);
        }
        let field = g0.field().clone();
        Ok(MonodromyRep {
            field,
            g0,
            g1,
            g_inf,
            source_params,
        })
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn g0(&self) -> &Matrix2 {
        &self.g0
    }

    pub fn g1(&self) -> &Matrix2 {
        &self.g1
    }

    pub fn g_inf(&self) -> &Matrix2 {
        &self.g_inf
    }

    pub fn source_params(&self) -> &HypergeometricParams {
        &self.source_params
    }

    /// Entrywise Galois conjugate; realizes the representation of the
    /// parameter triple `(k*alpha, k*beta, k*gamma)`.
    pub fn galois(&self, k: u32) -> Self {
        let scale = |x: &Rational| x * crate::rational::rat(k as i64, 1);
        MonodromyRep {
            field: self.field.clone(),
            g0: self.g0.galois(k),
            g1: self.g1.galois(k),
            g_inf: self.g_inf.galois(k),
            source_params: HypergeometricParams::new(
                scale(&self.source_params.alpha),
                scale(&self.source_params.beta),
                scale(&self.source_params.gamma),
            ),
        }
    }
}

/// Conductor of the parameter triple: lcm of the reduced denominators.
pub fn parameter_conductor(p: &HypergeometricParams) -> u64 {
    denominator_u64(&frac(&p.alpha))
        .unwrap()
        .lcm(&denominator_u64(&frac(&p.beta)).unwrap())
        .lcm(&denominator_u64(&frac(&p.gamma)).unwrap())
}

/// Companion-form generators of the hypergeometric monodromy.
///
/// The matrices live over `Q(zeta_N)` for `N` the parameter conductor, except
/// that conductors 1 and 2 are lifted to 4: those fields are totally real, so
/// complex conjugation is trivial there and no nonzero invariant Hermitian
/// form can exist (the Legendre-class representations preserve only the
/// symplectic form, whose Hermitian avatar `i*J` needs an imaginary unit).
pub fn levelt_generators(
    p: &HypergeometricParams,
    cap: u32,
) -> Result<MonodromyRep, MonodromyError> {
    if !is_irreducible(p) {
        return Err(MonodromyError::ResonantInput);
    }
    let n = parameter_conductor(p);
    if n > cap as u64 {
        return Err(MonodromyError::Exact(ExactError::ConductorLimit {
            requested: n,
            cap,
        }));
    }
    let field_conductor = if n <= 2 { 4 } else { n as u32 };
    let field = CycloField::new(field_conductor, cap)?;
    let e = |x: &Rational| CyclotomicNumber::root_of_unity(&field, &UnitArg::new(x));
    let ea = e(&p.alpha);
    let eb = e(&p.beta);
    let eg = e(&p.gamma);
    let one = CyclotomicNumber::one(&field);

    // g_inf: eigenvalues e(alpha), e(beta).
    let g_inf = Matrix2::companion(&ea.add(&eb), &ea.mul(&eb));
    // g0^(-1) has eigenvalues 1 and e(gamma), so g0 carries {0, frac(1-gamma)}.
    let g0_inv = Matrix2::companion(&one.add(&eg), &eg);
    let g0 = g0_inv.inverse()?;
    let g1 = g0_inv.mul(&g_inf.inverse()?);
    debug_assert!(g0.mul(&g1).mul(&g_inf).is_identity());
    Ok(MonodromyRep {
        field,
        g0,
        g1,
        g_inf,
        source_params: p.clone(),
    })
}

pub fn levelt_generators_default(p: &HypergeometricParams) -> Result<MonodromyRep, MonodromyError> {
    levelt_generators(p, DEFAULT_CONDUCTOR_CAP)
}

// --- invariant Hermitian form ---

/// Exact reduced row echelon form; returns the pivot column of each row.
fn rref(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x / &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, pv) in row.iter_mut().zip(&pivot_row) {
                    let t = &f * pv;
                    *x = &*x - &t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Deterministic nonzero kernel vector, if any: free variables are zero
/// except the first, which is 1.
fn kernel_vector(rows: &mut [Vec<Rational>], cols: usize) -> Option<Vec<Rational>> {
    let pivots = rref(rows, cols);
    let free = (0..cols).find(|c| !pivots.contains(c))?;
    let mut x = vec![Rational::zero(); cols];
    x[free] = Rational::one();
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = -rows[row][free].clone();
    }
    Some(x)
}

/// A nonzero Hermitian `H` with `g^* H g = H` for both `g0` and `g_inf`
/// (hence for `g1`), scaled so the leading nonzero diagonal entry is 1.
pub fn invariant_form(rep: &MonodromyRep) -> Result<HermitianForm2, MonodromyError> {
    let field = &rep.field;
    let d = field.degree();
    let unknowns = 4 * d;
    // Unknown layout: rational coordinates of H[0][0], H[0][1], H[1][0], H[1][1].
    let basis_element = |slot: usize, coord: usize| {
        let mut entries = [
            [CyclotomicNumber::zero(field), CyclotomicNumber::zero(field)],
            [CyclotomicNumber::zero(field), CyclotomicNumber::zero(field)],
        ];
        let mut coeffs = vec![Rational::zero(); d];
        coeffs[coord] = Rational::one();
        entries[slot / 2][slot % 2] = CyclotomicNumber::from_coefficients(field, &coeffs);
        Matrix2::new(entries)
    };
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    // Each unknown contributes linearly; build columns from basis images.
    let mut images: Vec<Vec<Rational>> = Vec::with_capacity(unknowns);
    for u in 0..unknowns {
        let h = basis_element(u / d, u % d);
        let mut image = Vec::with_capacity(3 * 4 * d);
        for g in [&rep.g0, &rep.g_inf] {
            let residue = g.conj_transpose().mul(&h).mul(g);
            for r in 0..2 {
                for c in 0..2 {
                    let diff = residue.entry(r, c).sub(h.entry(r, c));
                    image.extend(diff.coefficients());
                }
            }
        }
        let herm = h.conj_transpose();
        for r in 0..2 {
            for c in 0..2 {
                let diff = h.entry(r, c).sub(herm.entry(r, c));
                image.extend(diff.coefficients());
            }
        }
        images.push(image);
    }
    let num_eqs = images[0].len();
    for e in 0..num_eqs {
        let mut row = Vec::with_capacity(unknowns);
        for img in images.iter() {
            row.push(img[e].clone());
        }
        if row.iter().any(|x| !x.is_zero()) {
            rows.push(row);
        }
    }
    let x = kernel_vector(&mut rows, unknowns).ok_or(MonodromyError::NoInvariantForm)?;
    let entry =
        |slot: usize| CyclotomicNumber::from_coefficients(field, &x[slot * d..(slot + 1) * d]);
    let mut h = Matrix2::new([[entry(0), entry(1)], [entry(2), entry(3)]]);
    // Normalize: leading nonzero diagonal entry scaled to 1 (a real scalar,
    // so Hermitian-ness and conjugate signatures stay meaningful); fall back
    // to the first nonzero rational coordinate for off-diagonal-only forms.
    if !h.entry(0, 0).is_zero() {
        h = h.scale(&h.entry(0, 0).inverse()?);
    } else if !h.entry(1, 1).is_zero() {
        h = h.scale(&h.entry(1, 1).inverse()?);
    } else {
        let lead = x
            .iter()
            .find(|c| !c.is_zero())
            .expect("kernel vector is nonzero")
            .clone();
        h = h.scale_rational(&(Rational::one() / lead));
    }
    // The solved system makes these exact identities.
    for g in [&rep.g0, &rep.g1, &rep.g_inf] {
        debug_assert_eq!(g.conj_transpose().mul(&h).mul(g), h);
    }
    Ok(HermitianForm2::new(h)?)
}

/// Signatures of the invariant form under every Galois conjugate
/// `zeta -> zeta^k`, ascending in `k`.
pub fn conjugate_signatures(
    rep: &MonodromyRep,
    form: &HermitianForm2,
) -> Result<Vec<(u32, Signature)>, MonodromyError> {
    let n = rep.conductor();
    let mut out = Vec::new();
    for k in 1..=n {
        if (k as u64).gcd(&(n as u64)) != 1 {
            continue;
        }
        let sig = form.galois(k)?.signature()?;
        out.push((k, sig));
    }
    Ok(out)
}

/// Result of the breadth-first closure search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupClosureReport {
    pub finite_within_bound: bool,
    pub order_if_found: Option<usize>,
    pub elements_explored: usize,
    pub bound: usize,
}

/// Breadth-first closure of the generated group under exact matrix equality.
///
/// Deterministic: the element set is ordered and expansion is FIFO, so the
/// closure order, the finite bit and the exploration count are all stable
/// across runs. `finite_within_bound = false` only means the search hit the
/// bound: inconclusive by itself.
pub fn closure_bfs(rep: &MonodromyRep, bound: usize) -> Result<GroupClosureReport, MonodromyError> {
    assert!(bound >= 1);
    let mut gens: BTreeSet<Matrix2> = BTreeSet::new();
    for g in [&rep.g0, &rep.g1, &rep.g_inf] {
        gens.insert(g.clone());
        gens.insert(g.inverse()?);
    }
    let gens: Vec<Matrix2> = gens.into_iter().collect();
    let mut seen: BTreeSet<Matrix2> = BTreeSet::new();
    let mut queue: VecDeque<Matrix2> = VecDeque::new();
    let identity = Matrix2::identity(&rep.field);
    seen.insert(identity.clone());
    queue.push_back(identity);
    while let Some(m) = queue.pop_front() {
        for g in &gens {
            let p = m.mul(g);
            let bits = p.bit_size();
            if bits > MATRIX_BIT_LIMIT {
                return Err(MonodromyError::ArithmeticLimit { bits });
            }
            if seen.contains(&p) {
                continue;
            }
            if seen.len() >= bound {
                return Ok(GroupClosureReport {
                    finite_within_bound: false,
                    order_if_found: None,
                    elements_explored: seen.len(),
                    bound,
                });
            }
            seen.insert(p.clone());
            queue.push_back(p);
        }
    }
    Ok(GroupClosureReport {
        finite_within_bound: true,
        order_if_found: Some(seen.len()),
        elements_explored: seen.len(),
        bound,
    })
}

/// Combined verdict of the independent finiteness methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Monodromy {
    Finite,
    Infinite,
    Unknown,
}

impl fmt::Display for Monodromy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monodromy::Finite => write!(f, "finite"),
            Monodromy::Infinite => write!(f, "infinite"),
            Monodromy::Unknown => write!(f, "unknown"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct FinitenessSummary {
    pub schwarz: FinitenessVerdict,
    pub interlacing: InterlacingVerdict,
    pub conjugate_signatures: Vec<(u32, Signature)>,
    pub all_conjugate_forms_definite: bool,
    pub closure: GroupClosureReport,
    pub verdict: Monodromy,
    /// False flags a discrepancy between methods; callers must surface it.
    pub methods_agree: bool,
}

/// Run all four finiteness methods and aggregate. Discrepancies yield
/// `Monodromy::Unknown` with `methods_agree = false`; they indicate a bug and
/// are treated as test failures, never resolved silently.
pub fn finiteness_report(
    p: &HypergeometricParams,
    bound: usize,
    table: &SchwarzTable,
    cap: u32,
) -> Result<FinitenessSummary, MonodromyError> {
    if !is_irreducible(p) {
        return Err(MonodromyError::ResonantInput);
    }
    let schwarz = classify_params(p, table);
    let interlacing = interlacing_finiteness(p).map_err(|_| MonodromyError::ResonantInput)?;
    let rep = levelt_generators(p, cap)?;
    let form = invariant_form(&rep)?;
    let sigs = conjugate_signatures(&rep, &form)?;
    let all_definite = sigs.iter().all(|(_, s)| s.is_definite());
    let closure = closure_bfs(&rep, bound)?;
    let oracles_agree = schwarz.finite == interlacing.finite && interlacing.finite == all_definite;
    let bfs_consistent = !(closure.finite_within_bound && !schwarz.finite);
    let methods_agree = oracles_agree && bfs_consistent;
    let verdict = if methods_agree {
        if schwarz.finite {
            Monodromy::Finite
        } else {
            Monodromy::Infinite
        }
    } else {
        Monodromy::Unknown
    };
    Ok(FinitenessSummary {
        schwarz,
        interlacing,
        conjugate_signatures: sigs,
        all_conjugate_forms_definite: all_definite,
        closure,
        verdict,
        methods_agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn paper_params() -> HypergeometricParams {
        HypergeometricParams::new(rat(8, 7), rat(3, 7), rat(9, 7))
    }

    fn dihedral_params() -> HypergeometricParams {
        HypergeometricParams::new(rat(1, 4), rat(-1, 4), rat(1, 2))
    }

    #[test]
    fn levelt_paper_case() {
        let rep = levelt_generators_default(&paper_params()).unwrap();
        assert_eq!(rep.conductor(), 7);
        let f = rep.field();
        let z = |k| CyclotomicNumber::zeta_pow(f, k);
        // char poly of g_inf is t^2 - (z + z^3) t + z^4
        assert_eq!(rep.g_inf().trace(), z(1).add(&z(3)));
        assert_eq!(rep.g_inf().det(), z(4));
        // g0 has eigenvalues {1, e(-gamma)}: trace 1 + z^(-2), det z^(-2)
        assert_eq!(rep.g0().trace(), CyclotomicNumber::one(f).add(&z(5)));
        assert_eq!(rep.g0().det(), z(5));
        assert!(rep.g0().mul(rep.g1()).mul(rep.g_inf()).is_identity());
    }

    #[test]
    fn levelt_dihedral_case() {
        let rep = levelt_generators_default(&dihedral_params()).unwrap();
        assert_eq!(rep.conductor(), 4);
        assert!(rep.g_inf().det().is_one());
        assert!(rep.g0().mul(rep.g1()).mul(rep.g_inf()).is_identity());
    }

    #[test]
    fn levelt_rejects_resonant() {
        let p = HypergeometricParams::new(rat(1, 1), rat(1, 2), rat(1, 2));
        assert_eq!(
            levelt_generators_default(&p).unwrap_err(),
            MonodromyError::ResonantInput
        );
        let huge = HypergeometricParams::new(rat(1, 997), rat(3, 997), rat(1, 2));
        assert!(matches!(
            levelt_generators_default(&huge).unwrap_err(),
            MonodromyError::Exact(ExactError::ConductorLimit { .. })
        ));
    }

    #[test]
    fn galois_conjugate_matches_scaled_params() {
        let rep = levelt_generators_default(&paper_params()).unwrap();
        for k in [2u32, 3, 6] {
            let direct = levelt_generators_default(rep.galois(k).source_params()).unwrap();
            assert_eq!(rep.galois(k).g0(), direct.g0());
            assert_eq!(rep.galois(k).g1(), direct.g1());
            assert_eq!(rep.galois(k).g_inf(), direct.g_inf());
        }
    }

    #[test]
    fn galois_equivariance_of_word_traces() {
        // traces of every word of length <= 4 map under zeta -> zeta^k to the
        // traces of the conjugate-parameter representation
        let rep = levelt_generators_default(&paper_params()).unwrap();
        for k in [2u32, 5] {
            let conj = levelt_generators_default(rep.galois(k).source_params()).unwrap();
            let gens = [rep.g0(), rep.g1(), rep.g_inf()];
            let cgens = [conj.g0(), conj.g1(), conj.g_inf()];
            let mut words: Vec<(Matrix2, Matrix2)> = vec![(
                Matrix2::identity(rep.field()),
                Matrix2::identity(conj.field()),
            )];
            for _ in 0..4 {
                let mut next = Vec::new();
                for (w, cw) in &words {
                    for (g, cg) in gens.iter().zip(&cgens) {
                        next.push((w.mul(g), cw.mul(cg)));
                    }
                }
                for (w, cw) in &next {
                    assert_eq!(w.trace().galois(k), cw.trace());
                }
                words = next;
            }
        }
    }

    #[test]
    fn invariant_form_paper_case() {
        let rep = levelt_generators_default(&paper_params()).unwrap();
        let h = invariant_form(&rep).unwrap();
        for g in [rep.g0(), rep.g1(), rep.g_inf()] {
            assert_eq!(h.congruence(g).unwrap(), h);
        }
        // the character itself is unitary: definite form
        let sig = h.signature().unwrap();
        assert_eq!(sig.unordered(), (2, 0));
        // the k=3 Galois conjugate is indefinite, which forces infinitude
        let sigs = conjugate_signatures(&rep, &h).unwrap();
        let s3 = sigs.iter().find(|(k, _)| *k == 3).unwrap().1;
        assert_eq!(s3.unordered(), (1, 1));
        assert!(!sigs.iter().all(|(_, s)| s.is_definite()));
    }

    #[test]
    fn invariant_form_dihedral_case() {
        let rep = levelt_generators_default(&dihedral_params()).unwrap();
        let h = invariant_form(&rep).unwrap();
        assert!(h.signature().unwrap().is_definite());
        let sigs = conjugate_signatures(&rep, &h).unwrap();
        assert!(sigs.iter().all(|(_, s)| s.is_definite()));
    }

    #[test]
    fn closure_of_dihedral_rep() {
        let rep = levelt_generators_default(&dihedral_params()).unwrap();
        let report = closure_bfs(&rep, 10_000).unwrap();
        assert!(report.finite_within_bound);
        // regression constant frozen from the first run of this search
        assert_eq!(report.order_if_found, Some(8));
        assert_eq!(report.elements_explored, 8);
    }

    #[test]
    fn closure_of_paper_rep_does_not_close() {
        let rep = levelt_generators_default(&paper_params()).unwrap();
        let report = closure_bfs(&rep, 500).unwrap();
        assert!(!report.finite_within_bound);
        assert_eq!(report.order_if_found, None);
        assert_eq!(report.elements_explored, 500);
    }

    #[test]
    fn closure_of_identity_rep() {
        let field = CycloField::with_default_cap(1).unwrap();
        let id = Matrix2::identity(&field);
        let rep = MonodromyRep::from_generators(
            id.clone(),
            id.clone(),
            id,
            HypergeometricParams::new(rat(0, 1), rat(0, 1), rat(1, 1)),
        )
        .unwrap();
        let report = closure_bfs(&rep, 10).unwrap();
        assert_eq!(report.order_if_found, Some(1));
    }

    #[test]
    fn from_generators_checks_relation() {
        let field = CycloField::with_default_cap(4).unwrap();
        let id = Matrix2::identity(&field);
        let z = CyclotomicNumber::zeta_pow(&field, 1);
        let bad = id.scale(&z);
        assert_eq!(
            MonodromyRep::from_generators(
                bad,
                id.clone(),
                id,
                HypergeometricParams::new(rat(0, 1), rat(0, 1), rat(1, 1)),
            )
            .unwrap_err(),
            MonodromyError::BrokenProductRelation
        );
    }

    #[test]
    fn combined_report_agrees() {
        let table = SchwarzTable::builtin();
        let inf = finiteness_report(&paper_params(), 2_000, &table, DEFAULT_CONDUCTOR_CAP).unwrap();
        assert_eq!(inf.verdict, Monodromy::Infinite);
        assert!(inf.methods_agree);
        assert!(!inf.closure.finite_within_bound);

        let fin =
            finiteness_report(&dihedral_params(), 2_000, &table, DEFAULT_CONDUCTOR_CAP).unwrap();
        assert_eq!(fin.verdict, Monodromy::Finite);
        assert!(fin.methods_agree);
        assert_eq!(fin.closure.order_if_found, Some(8));
    }
}

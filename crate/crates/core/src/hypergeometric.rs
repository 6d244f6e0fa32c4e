//! Rank-2 Gauss hypergeometric data attached to a 4-point cyclic-cover
//! character.
//!
//! For branch points in slots `(0, 1, x, infinity)` (the moving point always
//! in the third slot) and a character with local exponents
//! `mu_s = frac(-j*m_s/n)`, the parameters are
//!
//! ```text
//! alpha = mu_0 + mu_1 + mu_x - 1,   beta = mu_x,   gamma = mu_0 + mu_x,
//! ```
//!
//! with `alpha >= beta` fixed by swapping when needed (the residual freedom
//! does not move the Riemann scheme). This is the exponent matching of the
//! classical Euler integral; on the worked family with exponents
//! `(1, 1, 4, 1)` it reproduces `(8/7, 3/7, 9/7)` exactly.

use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::cover::{BranchData, CharacterIndex, CoverError};
use crate::rational::{denominator_u64, is_integer, Rational, UnitArg};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HgError {
    NotFourPoints { count: usize },
    UnknownLabel,
    Cover(CoverError),
}

impl fmt::Display for HgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HgError::NotFourPoints { count } => {
                write!(
                    f,
                    "hypergeometric reduction needs exactly 4 branch points, got {count}"
                )
            }
            HgError::UnknownLabel => write!(f, "moving-point label not found in branch data"),
            HgError::Cover(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoverError> for HgError {
    fn from(e: CoverError) -> Self {
        HgError::Cover(e)
    }
}

/// Parameters of the Gauss hypergeometric equation, kept unreduced so the
/// Riemann scheme is faithful.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypergeometricParams {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
}

impl HypergeometricParams {
    pub fn new(alpha: Rational, beta: Rational, gamma: Rational) -> Self {
        HypergeometricParams { alpha, beta, gamma }
    }
}

impl fmt::Display for HypergeometricParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}

/// Local exponents of a solution basis at the three singular points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RiemannScheme {
    pub at0: (Rational, Rational),
    pub at1: (Rational, Rational),
    pub at_inf: (Rational, Rational),
}

/// Absolute exponent differences `(|1-gamma|, |gamma-alpha-beta|, |alpha-beta|)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentDifferences {
    pub lambda: Rational,
    pub mu: Rational,
    pub nu: Rational,
}

/// Projective orders of the local monodromies at `0, 1, infinity`: the
/// denominator of the exponent difference. An integer difference reports
/// order 1 with `possibly_unipotent` set, since the actual local monodromy
/// may still be a nontrivial unipotent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalOrders {
    pub at0: u64,
    pub at1: u64,
    pub at_inf: u64,
    pub possibly_unipotent: [bool; 3],
}

impl LocalOrders {
    pub fn as_array(&self) -> [u64; 3] {
        [self.at0, self.at1, self.at_inf]
    }
}

fn params_from_mu(mu0: &UnitArg, mu1: &UnitArg, mux: &UnitArg) -> HypergeometricParams {
    let alpha = mu0.value() + mu1.value() + mux.value() - Rational::one();
    let beta = mux.value().clone();
    let gamma = mu0.value() + mux.value();
    if alpha >= beta {
        HypergeometricParams::new(alpha, beta, gamma)
    } else {
        HypergeometricParams::new(beta, alpha, gamma)
    }
}

/// Hypergeometric parameters of the character's rank-2 system, taking the
/// branch points in listed order as the slots `(0, 1, x, infinity)`.
pub fn character_to_hg(
    b: &BranchData,
    j: &CharacterIndex,
) -> Result<HypergeometricParams, HgError> {
    if b.num_points() != 4 {
        return Err(HgError::NotFourPoints {
            count: b.num_points(),
        });
    }
    let mu = b.local_exponents(j)?;
    Ok(params_from_mu(&mu[0], &mu[1], &mu[2]))
}

/// Same with a designated moving point: it is relabeled into the third slot,
/// the remaining points fill `(0, 1, infinity)` in listed order.
pub fn character_to_hg_with_moving(
    b: &BranchData,
    j: &CharacterIndex,
    moving_label: &str,
) -> Result<HypergeometricParams, HgError> {
    if b.num_points() != 4 {
        return Err(HgError::NotFourPoints {
            count: b.num_points(),
        });
    }
    let ix = b.position_of(moving_label).ok_or(HgError::UnknownLabel)?;
    let mu = b.local_exponents(j)?;
    let fixed: alloc::vec::Vec<usize> = (0..4).filter(|&i| i != ix).collect();
    Ok(params_from_mu(&mu[fixed[0]], &mu[fixed[1]], &mu[ix]))
}

/// The Riemann scheme rows `(0, 1-gamma)`, `(0, gamma-alpha-beta)`,
/// `(alpha, beta)`; the six exponents always sum to 1 (Fuchs).
pub fn riemann_scheme(p: &HypergeometricParams) -> RiemannScheme {
    let one = Rational::one();
    let scheme = RiemannScheme {
        at0: (Rational::zero(), &one - &p.gamma),
        at1: (Rational::zero(), &p.gamma - &p.alpha - &p.beta),
        at_inf: (p.alpha.clone(), p.beta.clone()),
    };
    debug_assert!((&scheme.at0.1 + &scheme.at1.1 + &scheme.at_inf.0 + &scheme.at_inf.1).is_one());
    scheme
}

pub fn exponent_differences(p: &HypergeometricParams) -> ExponentDifferences {
    let one = Rational::one();
    ExponentDifferences {
        lambda: (&one - &p.gamma).abs(),
        mu: (&p.gamma - &p.alpha - &p.beta).abs(),
        nu: (&p.alpha - &p.beta).abs(),
    }
}

fn order_of(diff: &Rational) -> (u64, bool) {
    if is_integer(diff) {
        (1, true)
    } else {
        (
            denominator_u64(diff).expect("desk-scale denominator"),
            false,
        )
    }
}

pub fn local_orders(p: &HypergeometricParams) -> LocalOrders {
    let d = exponent_differences(p);
    let (o0, u0) = order_of(&d.lambda);
    let (o1, u1) = order_of(&d.mu);
    let (oi, ui) = order_of(&d.nu);
    LocalOrders {
        at0: o0,
        at1: o1,
        at_inf: oi,
        possibly_unipotent: [u0, u1, ui],
    }
}

/// Standard non-resonance: none of `alpha`, `beta`, `gamma - alpha`,
/// `gamma - beta` is an integer; equivalent to irreducibility of the
/// monodromy.
pub fn is_irreducible(p: &HypergeometricParams) -> bool {
    !is_integer(&p.alpha)
        && !is_integer(&p.beta)
        && !is_integer(&(&p.gamma - &p.alpha))
        && !is_integer(&(&p.gamma - &p.beta))
}

/// The pairwise variant sometimes quoted instead (no two of
/// `alpha, beta, gamma` differ by an integer). Weaker than
/// [`is_irreducible`] in general; exposed so disagreements can be flagged.
pub fn pairwise_nonresonant(p: &HypergeometricParams) -> bool {
    !is_integer(&(&p.alpha - &p.beta))
        && !is_integer(&(&p.alpha - &p.gamma))
        && !is_integer(&(&p.beta - &p.gamma))
}

/// True when the two non-resonance criteria disagree on this input.
pub fn nonresonance_criteria_disagree(p: &HypergeometricParams) -> bool {
    is_irreducible(p) != pairwise_nonresonant(p)
}

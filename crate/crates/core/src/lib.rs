//! Exact-arithmetic analysis of cyclic covers of the projective line.
//!
//! The crate computes, with no floating point on any decision path:
//!
//! - character-eigenspace Hodge data of a cyclic cover from its branch data
//!   (genus, `h10`/`h01` per character, eigensheaf degrees, unitary-flatness);
//! - the rank-2 Gauss hypergeometric data attached to a 4-point family
//!   (parameters, Riemann scheme, local projective monodromy orders);
//! - finiteness of the projective monodromy, decided two independent ways
//!   (Schwarz-table lookup and the Galois interlacing criterion) and
//!   cross-checked by explicit exact monodromy matrices over a cyclotomic
//!   field (invariant Hermitian form signatures, breadth-first group closure);
//! - the resulting direct-image decomposition report `V = A + Q_1 + ...` with
//!   a semi-ampleness verdict, plus the semistable-reduction arithmetic
//!   (Hirzebruch-Jung strings, base-change orders) and the Kodaira-fibration
//!   degree check.
//!
//! The core is `no_std` (with `alloc`); IO, JSON and the command line live in
//! the companion `fujita-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cover;
pub mod cyclotomic;
pub mod fibration;
pub mod hypergeometric;
pub mod interval;
pub mod matrix;
pub mod monodromy;
pub mod rational;
pub mod schwarz;

pub use cover::{
    BranchData, BranchPoint, CharacterIndex, CoverError, EigenspaceRow, EigenspaceTable,
};
pub use cyclotomic::{cyclo_mul, CycloField, CyclotomicNumber, ExactError, DEFAULT_CONDUCTOR_CAP};
pub use fibration::{
    fujita_decomposition, hj_resolve, kodaira_degree_check, semiample_verdict,
    semistable_base_order, BaseCover, FibrationError, FibrationSpec, FujitaReport, HjString,
    KodairaCheck, QuotientSingularity, Semiample, Summand, SummandKind,
};
pub use hypergeometric::{
    character_to_hg, character_to_hg_with_moving, is_irreducible, local_orders, riemann_scheme,
    ExponentDifferences, HgError, HypergeometricParams, LocalOrders, RiemannScheme,
};
pub use matrix::{HermitianForm2, Matrix2, Signature};
pub use monodromy::{
    closure_bfs, finiteness_report, invariant_form, levelt_generators, FinitenessSummary,
    GroupClosureReport, Monodromy, MonodromyError, MonodromyRep, DEFAULT_BFS_BOUND,
};
pub use rational::{frac, parse_rational, rat, Rational, UnitArg};
pub use schwarz::{
    interlacing_finiteness, normalize_triple, schwarz_lookup, FinitenessVerdict,
    InterlacingVerdict, SchwarzClass, SchwarzTable, SchwarzTriple,
};

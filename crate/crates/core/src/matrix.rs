//! Exact 2x2 matrices over a cyclotomic field, and Hermitian forms with exact
//! signature.

use alloc::sync::Arc;
use core::fmt;

use crate::cyclotomic::{CycloField, CyclotomicNumber, ExactError};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Matrix2 {
    entries: [[CyclotomicNumber; 2]; 2],
}

impl Matrix2 {
    pub fn new(entries: [[CyclotomicNumber; 2]; 2]) -> Self {
        let n = entries[0][0].conductor();
        assert!(entries.iter().flatten().all(|e| e.conductor() == n));
        Matrix2 { entries }
    }

    pub fn identity(field: &Arc<CycloField>) -> Self {
        let one = CyclotomicNumber::one(field);
        let zero = CyclotomicNumber::zero(field);
        Matrix2::new([[one.clone(), zero.clone()], [zero, one]])
    }

    /// Companion matrix of `t^2 - s*t + p`, with eigenvalue sum `s` and
    /// product `p`.
    pub fn companion(s: &CyclotomicNumber, p: &CyclotomicNumber) -> Self {
        let field = s.field().clone();
        let zero = CyclotomicNumber::zero(&field);
        let one = CyclotomicNumber::one(&field);
        Matrix2::new([[zero, p.neg()], [one, s.clone()]])
    }

    pub fn field(&self) -> &Arc<CycloField> {
        self.entries[0][0].field()
    }

    pub fn conductor(&self) -> u32 {
        self.entries[0][0].conductor()
    }

    pub fn entry(&self, r: usize, c: usize) -> &CyclotomicNumber {
        &self.entries[r][c]
    }

    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.entries;
        let b = &other.entries;
        let e = |r: usize, c: usize| a[r][0].mul(&b[0][c]).add(&a[r][1].mul(&b[1][c]));
        Matrix2 {
            entries: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn det(&self) -> CyclotomicNumber {
        let a = &self.entries;
        a[0][0].mul(&a[1][1]).sub(&a[0][1].mul(&a[1][0]))
    }

    pub fn trace(&self) -> CyclotomicNumber {
        self.entries[0][0].add(&self.entries[1][1])
    }

    pub fn inverse(&self) -> Result<Self, ExactError> {
        let det_inv = self.det().inverse()?;
        let a = &self.entries;
        Ok(Matrix2 {
            entries: [
                [a[1][1].mul(&det_inv), a[0][1].neg().mul(&det_inv)],
                [a[1][0].neg().mul(&det_inv), a[0][0].mul(&det_inv)],
            ],
        })
    }

    /// Conjugate transpose under the automorphism `zeta -> zeta^(-1)`.
    pub fn conj_transpose(&self) -> Self {
        let a = &self.entries;
        Matrix2 {
            entries: [
                [a[0][0].conj(), a[1][0].conj()],
                [a[0][1].conj(), a[1][1].conj()],
            ],
        }
    }

    /// Entrywise Galois action `zeta -> zeta^k`.
    pub fn galois(&self, k: u32) -> Self {
        let a = &self.entries;
        Matrix2 {
            entries: [
                [a[0][0].galois(k), a[0][1].galois(k)],
                [a[1][0].galois(k), a[1][1].galois(k)],
            ],
        }
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        let a = &self.entries;
        Matrix2 {
            entries: [
                [a[0][0].mul(c), a[0][1].mul(c)],
                [a[1][0].mul(c), a[1][1].mul(c)],
            ],
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let a = &self.entries;
        Matrix2 {
            entries: [
                [a[0][0].scale(q), a[0][1].scale(q)],
                [a[1][0].scale(q), a[1][1].scale(q)],
            ],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries[0][0].is_one()
            && self.entries[1][1].is_one()
            && self.entries[0][1].is_zero()
            && self.entries[1][0].is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(|e| e.is_zero())
    }

    pub fn bit_size(&self) -> u64 {
        self.entries.iter().flatten().map(|e| e.bit_size()).sum()
    }
}

impl fmt::Debug for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// Exact signature of a Hermitian form: positive index, negative index,
/// nullity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub positive: u8,
    pub negative: u8,
    pub nullity: u8,
}

impl Signature {
    pub fn is_definite(&self) -> bool {
        self.nullity == 0 && (self.positive == 0 || self.negative == 0)
    }

    /// The index pair `{p, q}` with orientation forgotten; the overall real
    /// scalar on a form is a normalization choice, so comparisons against
    /// Hodge data use this.
    pub fn unordered(&self) -> (u8, u8) {
        if self.positive >= self.negative {
            (self.positive, self.negative)
        } else {
            (self.negative, self.positive)
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.positive, self.negative, self.nullity
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormError {
    /// The matrix is not equal to its own conjugate transpose.
    InvalidForm,
    Exact(ExactError),
}

impl fmt::Display for FormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormError::InvalidForm => write!(f, "matrix is not Hermitian"),
            FormError::Exact(e) => write!(f, "{e}"),
        }
    }
}

impl From<ExactError> for FormError {
    fn from(e: ExactError) -> Self {
        FormError::Exact(e)
    }
}

/// A 2x2 Hermitian form over a cyclotomic field, `H = H^*` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermitianForm2 {
    matrix: Matrix2,
}

impl HermitianForm2 {
    pub fn new(matrix: Matrix2) -> Result<Self, FormError> {
        if matrix != matrix.conj_transpose() {
            return Err(FormError::InvalidForm);
        }
        Ok(HermitianForm2 { matrix })
    }

    pub fn matrix(&self) -> &Matrix2 {
        &self.matrix
    }

    pub fn galois(&self, k: u32) -> Result<Self, FormError> {
        // zeta -> zeta^k commutes with conjugation, so the image is Hermitian.
        HermitianForm2::new(self.matrix.galois(k))
    }

    /// Congruence transform `G^* H G`.
    pub fn congruence(&self, g: &Matrix2) -> Result<Self, FormError> {
        HermitianForm2::new(g.conj_transpose().mul(&self.matrix).mul(g))
    }

    /// Exact signature via signs of the determinant, the leading entry and
    /// the trace, all of which lie in the real subfield.
    pub fn signature(&self) -> Result<Signature, FormError> {
        let det = self.matrix.det();
        let det_sign = det.real_sign().map_err(FormError::Exact)?;
        if det_sign > 0 {
            // Definite; det = h00*h11 - |h01|^2 > 0 forces h00 != 0.
            let h00_sign = self
                .matrix
                .entry(0, 0)
                .real_sign()
                .map_err(FormError::Exact)?;
            debug_assert!(h00_sign != 0);
            return Ok(if h00_sign > 0 {
                Signature {
                    positive: 2,
                    negative: 0,
                    nullity: 0,
                }
            } else {
                Signature {
                    positive: 0,
                    negative: 2,
                    nullity: 0,
                }
            });
        }
        if det_sign < 0 {
            return Ok(Signature {
                positive: 1,
                negative: 1,
                nullity: 0,
            });
        }
        if self.matrix.is_zero() {
            return Ok(Signature {
                positive: 0,
                negative: 0,
                nullity: 2,
            });
        }
        // Rank one: the trace of +-v v^* is nonzero and carries the sign.
        let tr_sign = self.matrix.trace().real_sign().map_err(FormError::Exact)?;
        debug_assert!(tr_sign != 0);
        Ok(if tr_sign > 0 {
            Signature {
                positive: 1,
                negative: 0,
                nullity: 1,
            }
        } else {
            Signature {
                positive: 0,
                negative: 1,
                nullity: 1,
            }
        })
    }
}

//! Cyclic covers of the projective line described by branch data.
//!
//! A cover `z^n = prod (y - s_j)^(m_j)` is recorded by the group order `n`
//! and the list of branch points with exponents; every computed quantity
//! depends only on `n` and the exponents, so points are symbolic labels. The
//! point at infinity is not special: it must be listed explicitly with its
//! exponent so that the exponent sum vanishes mod `n`.
//!
//! Per character `j` of the group, the holomorphic eigenspace dimension comes
//! from the fractional local exponents `frac(-j*m_s/n)` (dimension formula
//! `-1 + sum`), the eigensheaf degree from reduction of `j*m_s` mod `n`, and
//! the genus from Riemann-Hurwitz.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;

use crate::rational::{rat, UnitArg};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverError {
    /// Group order must be at least 2.
    OrderTooSmall {
        order: u32,
    },
    /// Exponent sum is not divisible by the group order.
    SumNotZeroModN {
        residue: u32,
    },
    /// Fewer than three branch points remain after normalization.
    FewerThanThreePoints {
        count: usize,
    },
    DuplicateLabel {
        label: String,
    },
    /// gcd(n, all exponents) > 1: the covering curve is disconnected and the
    /// eigenspace formulas do not apply.
    Disconnected {
        gcd: u32,
    },
    /// Some branch point is unramified for this character, so the local
    /// system does not extend the way the dimension formula needs.
    TrivialLocalMonodromy {
        character: u32,
        label: String,
    },
    /// Character index out of range `1..=n-1`.
    InvalidCharacter {
        j: u32,
        order: u32,
    },
    /// Riemann-Hurwitz output fails to be a genus.
    NonIntegralGenus,
    /// Ramification order does not divide the covering order or is < 2.
    InvalidRamification {
        value: u32,
    },
}

impl fmt::Display for CoverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverError::OrderTooSmall { order } => write!(f, "cover order {order} is too small"),
            CoverError::SumNotZeroModN { residue } => {
                write!(f, "exponent sum is {residue} mod n, expected 0")
            }
            CoverError::FewerThanThreePoints { count } => {
                write!(f, "need at least 3 branch points, got {count}")
            }
            CoverError::DuplicateLabel { label } => write!(f, "duplicate branch label {label:?}"),
            CoverError::Disconnected { gcd } => {
                write!(
                    f,
                    "cover is disconnected: gcd of order and exponents is {gcd}"
                )
            }
            CoverError::TrivialLocalMonodromy { character, label } => write!(
                f,
                "character {character} has trivial local monodromy at {label:?}"
            ),
            CoverError::InvalidCharacter { j, order } => {
                write!(f, "character index {j} out of range for order {order}")
            }
            CoverError::NonIntegralGenus => write!(f, "Riemann-Hurwitz value is not a genus"),
            CoverError::InvalidRamification { value } => {
                write!(f, "invalid ramification order {value}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchPoint {
    pub label: String,
    /// Exponent in `1..=n-1` after normalization.
    pub exponent: u32,
}

/// Validated branch data of a connected cyclic cover of the line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchData {
    order: u32,
    points: Vec<BranchPoint>,
}

impl BranchData {
    /// Normalize and validate raw branch data. Exponents are reduced mod `n`
    /// and entries reducing to zero are dropped.
    pub fn new(
        order: u32,
        raw: impl IntoIterator<Item = (String, i64)>,
    ) -> Result<Self, CoverError> {
        if order < 2 {
            return Err(CoverError::OrderTooSmall { order });
        }
        let n = order as i64;
        let mut points: Vec<BranchPoint> = Vec::new();
        let mut sum: u64 = 0;
        for (label, m) in raw {
            let m = m.mod_floor(&n) as u32;
            if m == 0 {
                continue;
            }
            if points.iter().any(|p| p.label == label) {
                return Err(CoverError::DuplicateLabel { label });
            }
            sum += m as u64;
            points.push(BranchPoint { label, exponent: m });
        }
        if points.len() < 3 {
            return Err(CoverError::FewerThanThreePoints {
                count: points.len(),
            });
        }
        let residue = (sum % order as u64) as u32;
        if residue != 0 {
            return Err(CoverError::SumNotZeroModN { residue });
        }
        let mut g = order;
        for p in &points {
            g = g.gcd(&p.exponent);
        }
        if g != 1 {
            return Err(CoverError::Disconnected { gcd: g });
        }
        Ok(BranchData { order, points })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn points(&self) -> &[BranchPoint] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.points.iter().map(|p| p.exponent).collect()
    }

    /// Position of a labeled point.
    pub fn position_of(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label == label)
    }

    /// Fractional local exponents `frac(-j*m_s/n)` of the holomorphic
    /// eigenspace for character `j`, in branch-point order. Errors if some
    /// local monodromy is trivial.
    pub fn local_exponents(&self, j: &CharacterIndex) -> Result<Vec<UnitArg>, CoverError> {
        let j = j.checked_index(self.order)?;
        let n = self.order as i64;
        self.points
            .iter()
            .map(|p| {
                let mu = UnitArg::new(&rat(-(j as i64) * p.exponent as i64, n));
                if mu.is_zero() {
                    Err(CoverError::TrivialLocalMonodromy {
                        character: j,
                        label: p.label.clone(),
                    })
                } else {
                    Ok(mu)
                }
            })
            .collect()
    }
}

/// A character of the cyclic group, `chi_j(zeta) = zeta^j` with
/// `1 <= j <= n-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct CharacterIndex {
    j: u32,
    /// Whether `j` is coprime to the group order it was validated against.
    coprime: bool,
}

impl CharacterIndex {
    pub fn new(j: u32, order: u32) -> Result<Self, CoverError> {
        if j == 0 || j >= order {
            return Err(CoverError::InvalidCharacter { j, order });
        }
        Ok(CharacterIndex {
            j,
            coprime: j.gcd(&order) == 1,
        })
    }

    pub fn index(&self) -> u32 {
        self.j
    }

    pub fn is_coprime(&self) -> bool {
        self.coprime
    }

    fn checked_index(&self, order: u32) -> Result<u32, CoverError> {
        if self.j == 0 || self.j >= order {
            return Err(CoverError::InvalidCharacter { j: self.j, order });
        }
        Ok(self.j)
    }
}

/// Genus of the (connected) cover from the Riemann-Hurwitz formula
/// `2g - 2 = -2n + sum over s of (n - gcd(n, m_s))`.
///
/// Exposed separately from [`BranchData`] so degenerate configurations (for
/// instance a double cover branched in two points) can still be evaluated.
pub fn genus_from_exponents(order: u32, exponents: &[u32]) -> u32 {
    let n = order as i64;
    let total: i64 = exponents
        .iter()
        .map(|&m| n - n.gcd(&(m as i64)))
        .sum::<i64>()
        - 2 * n;
    debug_assert!(total >= -2 && total % 2 == 0, "not a genus: 2g-2 = {total}");
    ((total + 2) / 2) as u32
}

/// Genus of the cover described by validated branch data.
pub fn cover_genus(b: &BranchData) -> u32 {
    genus_from_exponents(b.order(), &b.exponents())
}

/// `dim V_j = -1 + sum over s of frac(-j*m_s/n)`.
pub fn eigenspace_h10(b: &BranchData, j: &CharacterIndex) -> Result<u32, CoverError> {
    let mut total = crate::rational::Rational::from(num_bigint::BigInt::from(-1));
    for mu in b.local_exponents(j)? {
        total += mu.value();
    }
    debug_assert!(crate::rational::is_integer(&total));
    use num_traits::ToPrimitive;
    Ok(total
        .numer()
        .to_u32()
        .expect("dimension is a small nonnegative integer"))
}

/// `deg L_j = (1/n) * sum over s of (j*m_s mod n)`.
pub fn eigensheaf_degree(b: &BranchData, j: &CharacterIndex) -> Result<u32, CoverError> {
    let j = j.checked_index(b.order())?;
    let n = b.order() as u64;
    let total: u64 = b
        .points()
        .iter()
        .map(|p| (j as u64 * p.exponent as u64) % n)
        .sum();
    debug_assert_eq!(total % n, 0);
    Ok((total / n) as u32)
}

/// One character's worth of Hodge data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenspaceRow {
    pub j: u32,
    pub h10: u32,
    pub h01: u32,
    pub rank: u32,
    pub eigensheaf_degree: u32,
    pub local_exponents: Vec<UnitArg>,
    pub unitary_flat: bool,
}

/// Hodge data of every character `j = 1..n-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenspaceTable {
    pub order: u32,
    pub num_points: usize,
    pub genus: u32,
    pub rows: Vec<EigenspaceRow>,
}

impl EigenspaceTable {
    pub fn row(&self, j: u32) -> Option<&EigenspaceRow> {
        self.rows.iter().find(|r| r.j == j)
    }
}

/// Full eigenspace table. `h01(j) = h10(n-j)`; a character is unitary flat
/// when one of the two Hodge summands vanishes.
pub fn eigenspace_table(b: &BranchData) -> Result<EigenspaceTable, CoverError> {
    let n = b.order();
    let genus = cover_genus(b);
    let r = b.num_points() as u32;
    let mut h10 = Vec::with_capacity(n as usize - 1);
    for j in 1..n {
        let cj = CharacterIndex::new(j, n)?;
        h10.push(eigenspace_h10(b, &cj)?);
    }
    let mut rows = Vec::with_capacity(n as usize - 1);
    for j in 1..n {
        let cj = CharacterIndex::new(j, n)?;
        let h = h10[(j - 1) as usize];
        let hbar = h10[(n - j - 1) as usize];
        debug_assert_eq!(h + hbar, r - 2);
        rows.push(EigenspaceRow {
            j,
            h10: h,
            h01: hbar,
            rank: h + hbar,
            eigensheaf_degree: eigensheaf_degree(b, &cj)?,
            local_exponents: b.local_exponents(&cj)?,
            unitary_flat: h == 0 || hbar == 0,
        });
    }
    debug_assert_eq!(rows.iter().map(|r| r.h10).sum::<u32>(), genus);
    Ok(EigenspaceTable {
        order: n,
        num_points: b.num_points(),
        genus,
        rows,
    })
}

/// Genus of a cyclic cover of a genus-`g_base` curve totally described by
/// ramification orders: `2g - 2 = n*(2*g_base - 2) + sum of (n - n/e_i)`.
pub fn hurwitz_base_genus(n: u32, g_base: u32, ram: &[u32]) -> Result<u32, CoverError> {
    for &e in ram {
        if e < 2 || !n.is_multiple_of(e) {
            return Err(CoverError::InvalidRamification { value: e });
        }
    }
    let n = n as i64;
    let mut val = n * (2 * g_base as i64 - 2);
    for &e in ram {
        val += n - n / e as i64;
    }
    if val < -2 || val % 2 != 0 {
        return Err(CoverError::NonIntegralGenus);
    }
    Ok(((val + 2) / 2) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    pub(crate) fn branch(order: u32, ms: &[i64]) -> Result<BranchData, CoverError> {
        BranchData::new(
            order,
            ms.iter()
                .enumerate()
                .map(|(i, &m)| (alloc::format!("p{i}"), m)),
        )
    }

    fn paper_family() -> BranchData {
        BranchData::new(
            7,
            vec![
                ("0".to_string(), 1),
                ("1".to_string(), 1),
                ("x".to_string(), 1),
                ("inf".to_string(), 4),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        assert!(branch(7, &[1, 1, 1, 4]).is_ok());
        assert_eq!(
            branch(7, &[1, 1, 1, 1]).unwrap_err(),
            CoverError::SumNotZeroModN { residue: 4 }
        );
        assert!(branch(7, &[1, 4, 1, 1]).is_ok());
        // exponents reduce mod n; zero entries are dropped
        let b = branch(7, &[8, -3, 1, 1, 7]).unwrap();
        assert_eq!(b.exponents(), vec![1, 4, 1, 1]);
        assert_eq!(
            branch(7, &[7, 7, 7]).unwrap_err(),
            CoverError::FewerThanThreePoints { count: 0 }
        );
        let dup = BranchData::new(7, vec![("a".to_string(), 1), ("a".to_string(), 1)]);
        assert_eq!(
            dup.unwrap_err(),
            CoverError::DuplicateLabel {
                label: "a".to_string()
            }
        );
        assert_eq!(
            branch(4, &[2, 2, 2, 2]).unwrap_err(),
            CoverError::Disconnected { gcd: 2 }
        );
    }

    #[test]
    fn genus_of_paper_curve() {
        assert_eq!(cover_genus(&paper_family()), 6);
        assert_eq!(genus_from_exponents(2, &[1, 1]), 0);
        assert_eq!(cover_genus(&branch(7, &[1, 4, 1, 1]).unwrap()), 6);
    }

    #[test]
    fn h10_of_paper_curve() {
        let b = paper_family();
        let dim = |j: u32| eigenspace_h10(&b, &CharacterIndex::new(j, 7).unwrap()).unwrap();
        assert_eq!(dim(1), 2);
        assert_eq!(dim(3), 1);
        assert_eq!(dim(5), 0);
    }

    #[test]
    fn degrees_of_paper_curve() {
        let b = paper_family();
        let deg = |j: u32| eigensheaf_degree(&b, &CharacterIndex::new(j, 7).unwrap()).unwrap();
        assert_eq!(deg(2), 1);
        assert_eq!(deg(4), 2);
        assert_eq!(deg(6), 3);
    }

    #[test]
    fn table_of_paper_curve() {
        let t = eigenspace_table(&paper_family()).unwrap();
        assert_eq!(t.genus, 6);
        let r1 = t.row(1).unwrap();
        assert_eq!((r1.h10, r1.h01), (2, 0));
        assert!(r1.unitary_flat);
        let r3 = t.row(3).unwrap();
        assert_eq!((r3.h10, r3.h01), (1, 1));
        assert!(!r3.unitary_flat);
    }

    #[test]
    fn elliptic_double_cover() {
        let b = branch(2, &[1, 1, 1, 1]).unwrap();
        let t = eigenspace_table(&b).unwrap();
        assert_eq!(t.genus, 1);
        let r = t.row(1).unwrap();
        assert_eq!((r.h10, r.h01), (1, 1));
    }

    #[test]
    fn trivial_local_monodromy_rejected() {
        // order 6 with an exponent sharing a factor is still connected when
        // the gcd over all exponents is 1, but character 2 dies at m = 3.
        let b = branch(6, &[1, 2, 3, 6, 6, 6]).unwrap();
        assert_eq!(b.exponents(), vec![1, 2, 3]);
        let c2 = CharacterIndex::new(2, 6).unwrap();
        assert_eq!(
            eigenspace_h10(&b, &c2).unwrap_err(),
            CoverError::TrivialLocalMonodromy {
                character: 2,
                label: "p2".to_string()
            }
        );
        assert!(eigenspace_table(&b).is_err());
    }

    #[test]
    fn hurwitz_examples() {
        assert_eq!(hurwitz_base_genus(7, 0, &[7, 7, 7]).unwrap(), 3);
        assert_eq!(hurwitz_base_genus(1, 5, &[]).unwrap(), 5);
        assert_eq!(hurwitz_base_genus(2, 0, &[2, 2, 2, 2]).unwrap(), 1);
        assert_eq!(
            hurwitz_base_genus(7, 0, &[3, 7]).unwrap_err(),
            CoverError::InvalidRamification { value: 3 }
        );
        // 2g - 2 = 2*(-2) + (2 - 1) = -3, odd
        assert_eq!(
            hurwitz_base_genus(2, 0, &[2]).unwrap_err(),
            CoverError::NonIntegralGenus
        );
    }

    #[test]
    fn character_index_bounds() {
        assert!(CharacterIndex::new(0, 7).is_err());
        assert!(CharacterIndex::new(7, 7).is_err());
        let c = CharacterIndex::new(3, 7).unwrap();
        assert!(c.is_coprime());
        let c = CharacterIndex::new(2, 6).unwrap();
        assert!(!c.is_coprime());
    }
}

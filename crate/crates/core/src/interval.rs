//! Rational interval arithmetic for exact sign decisions.
//!
//! Real cyclotomic numbers are decided to be positive, negative or zero by
//! evaluating them inside rational intervals whose width shrinks until zero is
//! excluded (the exact-zero case is settled beforehand on the canonical
//! coefficient vector). Everything here is an exact rational bound: pi comes
//! from Machin's formula with alternating-series tails, cosine from a Taylor
//! partial sum at the interval midpoint plus a Lipschitz term.

use crate::rational::{rat, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A closed interval with rational endpoints, `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn point(x: Rational) -> Self {
        Interval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn new(lo: Rational, hi: Rational) -> Self {
        debug_assert!(lo <= hi);
        Interval { lo, hi }
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi)
    }

    /// Multiply by an exact rational scalar.
    pub fn scale(&self, c: &Rational) -> Interval {
        if c.is_negative() {
            Interval::new(&self.hi * c, &self.lo * c)
        } else {
            Interval::new(&self.lo * c, &self.hi * c)
        }
    }

    /// Widen symmetrically by `e >= 0`.
    pub fn widen(&self, e: &Rational) -> Interval {
        Interval::new(&self.lo - e, &self.hi + e)
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat(2, 1)
    }

    pub fn halfwidth(&self) -> Rational {
        (&self.hi - &self.lo) / rat(2, 1)
    }

    /// Sign of every point in the interval, if uniform.
    pub fn uniform_sign(&self) -> Option<i8> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else {
            None
        }
    }
}

/// `arctan(1/q)` enclosed by consecutive partial sums of the alternating
/// Leibniz series; `tol` bounds the enclosure width.
fn arctan_inv(q: i64, tol: &Rational) -> Interval {
    let x = rat(1, q);
    let x2 = &x * &x;
    let mut term = x.clone();
    let mut sum = Rational::zero();
    let mut k: i64 = 0;
    loop {
        let contrib = &term / rat(2 * k + 1, 1);
        let prev = sum.clone();
        if k % 2 == 0 {
            sum = &sum + &contrib;
        } else {
            sum = &sum - &contrib;
        }
        // Alternating with decreasing terms: the value lies between
        // consecutive partial sums.
        if contrib < *tol && k > 0 {
            return if prev <= sum {
                Interval::new(prev, sum)
            } else {
                Interval::new(sum, prev)
            };
        }
        term = &term * &x2;
        k += 1;
    }
}

/// Enclosure of pi via Machin: `pi = 16 arctan(1/5) - 4 arctan(1/239)`.
pub fn pi_enclosure(tol: &Rational) -> Interval {
    let inner_tol = tol / rat(32, 1);
    let a = arctan_inv(5, &inner_tol);
    let b = arctan_inv(239, &inner_tol);
    Interval::new(
        &a.lo * rat(16, 1) - &b.hi * rat(4, 1),
        &a.hi * rat(16, 1) - &b.lo * rat(4, 1),
    )
}

/// Enclosure of `cos(theta)` for an interval `theta` inside `[0, 7]`.
///
/// Taylor partial sum at the midpoint; the tail is bounded by the first
/// omitted term once the terms decrease, and the interval width enters through
/// `|cos'| <= 1`.
pub fn cos_enclosure(theta: &Interval, tol: &Rational) -> Interval {
    let m = theta.midpoint();
    debug_assert!(!m.is_negative() && m <= rat(7, 1));
    let m2 = &m * &m;
    let mut term = Rational::one(); // m^(2n) / (2n)!
    let mut sum = Rational::zero();
    let mut n: i64 = 0;
    loop {
        if n % 2 == 0 {
            sum = &sum + &term;
        } else {
            sum = &sum - &term;
        }
        let next = &term * &m2 / rat((2 * n + 1) * (2 * n + 2), 1);
        // Terms decrease strictly once 2n + 1 > |m|; 2n >= 8 suffices here.
        if n >= 4 && next < *tol {
            let err = &next + theta.halfwidth();
            return Interval::point(sum).widen(&err);
        }
        term = next;
        n += 1;
    }
}

/// `10^-d` as a rational tolerance.
pub fn pow10_neg(d: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_is_tight() {
        let tol = pow10_neg(30);
        let pi = pi_enclosure(&tol);
        assert!(&pi.hi - &pi.lo < tol);
        assert!(pi.lo > rat(314159265358979, 100000000000000));
        assert!(pi.hi < rat(314159265358980, 100000000000000));
    }

    #[test]
    fn cos_known_values() {
        let tol = pow10_neg(25);
        let pi = pi_enclosure(&tol);
        // cos(pi) = -1
        let c = cos_enclosure(&pi, &tol);
        assert!(c.lo <= rat(-1, 1) && rat(-1, 1) <= c.hi);
        assert!(&c.hi - &c.lo < pow10_neg(20));
        // cos(pi/3) = 1/2
        let third = pi.scale(&rat(1, 3));
        let c = cos_enclosure(&third, &tol);
        assert!(c.lo <= rat(1, 2) && rat(1, 2) <= c.hi);
        assert!(&c.hi - &c.lo < pow10_neg(20));
    }

    #[test]
    fn uniform_sign() {
        let i = Interval::new(rat(1, 10), rat(2, 10));
        assert_eq!(i.uniform_sign(), Some(1));
        let j = Interval::new(rat(-1, 10), rat(2, 10));
        assert_eq!(j.uniform_sign(), None);
    }
}

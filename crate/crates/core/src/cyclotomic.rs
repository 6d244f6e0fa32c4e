//! Exact arithmetic in cyclotomic fields Q(zeta_N).
//!
//! Elements are stored as coefficient vectors over the reduced power basis
//! `1, zeta, ..., zeta^(phi(N)-1)` modulo the N-th cyclotomic polynomial, with
//! a common positive denominator. Equality is coefficientwise, so the zero
//! test is exact and free; the sign of an element of the real subfield is
//! decided by interval evaluation at increasing precision (the exact zero test
//! runs first, so the loop terminates).
//!
//! The conductor is capped (default 840) so that a misbehaving input cannot
//! request an enormous field.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::interval::{cos_enclosure, pi_enclosure, pow10_neg, Interval};
use crate::rational::{rat, Rational};

/// Default bound on conductors; lcm-friendly and far beyond anything the
/// hypergeometric analysis needs at desk scale.
pub const DEFAULT_CONDUCTOR_CAP: u32 = 840;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactError {
    /// A requested conductor exceeds the configured resource limit.
    ConductorLimit { requested: u64, cap: u32 },
    /// Binary operation on elements of incompatible fields.
    ConductorMismatch { left: u32, right: u32 },
    /// Sign of a non-real element was requested.
    NotReal,
    /// Inverse of zero.
    DivisionByZero,
}

impl fmt::Display for ExactError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactError::ConductorLimit { requested, cap } => {
                write!(f, "resource limit: conductor {requested} exceeds cap {cap}")
            }
            ExactError::ConductorMismatch { left, right } => {
                write!(f, "conductor mismatch: {left} vs {right}")
            }
            ExactError::NotReal => write!(f, "element is not in the real subfield"),
            ExactError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

/// Euler totient.
pub fn euler_phi(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

fn divisors_ascending(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

// --- integer polynomial helpers (little-endian coefficient vectors) ---

fn poly_trim(p: &mut Vec<BigInt>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Exact division of integer polynomials; `b` must be monic and divide `a`.
fn poly_div_exact_monic(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(b.last().is_some_and(|c| c.is_one()));
    let mut rem: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        debug_assert!(rem.iter().all(|c| c.is_zero()));
        return vec![BigInt::zero()];
    }
    let dq = rem.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let c = rem[i + db].clone();
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    q
}

/// The N-th cyclotomic polynomial, by the divisor chain
/// `x^d - 1 = prod of Phi_e over e | d`.
fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    let mut phis: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
    for d in divisors_ascending(n) {
        let mut p = vec![BigInt::zero(); d as usize + 1];
        p[0] = -BigInt::one();
        p[d as usize] = BigInt::one();
        for (e, phi_e) in phis.iter() {
            if d % e == 0 {
                p = poly_div_exact_monic(&p, phi_e);
            }
        }
        poly_trim(&mut p);
        phis.insert(d, p);
    }
    phis.remove(&n).expect("n divides itself")
}

/// A cyclotomic field of fixed conductor, holding the reduction data every
/// element shares.
///
/// Equality is by conductor: the reduction data is a function of it.
#[derive(Debug)]
pub struct CycloField {
    conductor: u32,
    degree: usize,
    /// Monic minimal polynomial Phi_N, length `degree + 1`.
    min_poly: Vec<BigInt>,
    /// `reduction[i]` is the coefficient vector of `x^(degree+i) mod Phi_N`.
    reduction: Vec<Vec<BigInt>>,
}

impl PartialEq for CycloField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CycloField {}

impl CycloField {
    pub fn new(conductor: u32, cap: u32) -> Result<Arc<Self>, ExactError> {
        if conductor == 0 || conductor > cap {
            return Err(ExactError::ConductorLimit {
                requested: conductor as u64,
                cap,
            });
        }
        let min_poly = cyclotomic_polynomial(conductor);
        let degree = min_poly.len() - 1;
        debug_assert_eq!(degree as u32, euler_phi(conductor));
        // Rows for x^degree .. x^(2*degree-2); at least one row so that the
        // multiply-by-x step always has x^degree available.
        let table_len = degree.max(2) - 1;
        let mut reduction: Vec<Vec<BigInt>> = Vec::with_capacity(table_len);
        reduction.push(min_poly[..degree].iter().map(|c| -c).collect());
        while reduction.len() < table_len {
            let prev = reduction.last().expect("nonempty");
            let mut next = vec![BigInt::zero(); degree];
            next[1..degree].clone_from_slice(&prev[..degree - 1]);
            let top = prev[degree - 1].clone();
            if !top.is_zero() {
                let base = reduction[0].clone();
                for (i, b) in base.iter().enumerate() {
                    next[i] += &top * b;
                }
            }
            reduction.push(next);
        }
        Ok(Arc::new(CycloField {
            conductor,
            degree,
            min_poly,
            reduction,
        }))
    }

    pub fn with_default_cap(conductor: u32) -> Result<Arc<Self>, ExactError> {
        Self::new(conductor, DEFAULT_CONDUCTOR_CAP)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.min_poly
    }

    /// Reduce an integer polynomial of degree `<= 2*degree - 2` (a product of
    /// two reduced elements) to the power basis.
    fn reduce_product(&self, prod: &[BigInt]) -> Vec<BigInt> {
        let d = self.degree;
        let mut out = vec![BigInt::zero(); d];
        for (i, c) in prod.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < d {
                out[i] += c;
            } else {
                for (j, r) in self.reduction[i - d].iter().enumerate() {
                    out[j] += c * r;
                }
            }
        }
        out
    }

    /// `x^k mod Phi_N` for any `k`, as an integer coefficient vector.
    fn power_basis_vector(&self, k: u32) -> Vec<BigInt> {
        let d = self.degree;
        let k = (k % self.conductor) as usize;
        let mut v = vec![BigInt::zero(); d];
        if k < d {
            v[k] = BigInt::one();
            return v;
        }
        v[d - 1] = BigInt::one();
        for _ in 0..(k - (d - 1)) {
            let mut next = vec![BigInt::zero(); d];
            next[1..d].clone_from_slice(&v[..d - 1]);
            let top = v[d - 1].clone();
            if !top.is_zero() {
                for (i, b) in self.reduction[0].iter().enumerate() {
                    next[i] += &top * b;
                }
            }
            v = next;
        }
        v
    }
}

/// An element of Q(zeta_N): `(1/den) * sum num[i] * zeta^i`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<CycloField>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    fn normalized(field: Arc<CycloField>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -c.clone();
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            den /= &g;
            for c in num.iter_mut() {
                *c = c.clone() / &g;
            }
        }
        CyclotomicNumber { field, num, den }
    }

    pub fn zero(field: &Arc<CycloField>) -> Self {
        CyclotomicNumber {
            num: vec![BigInt::zero(); field.degree],
            den: BigInt::one(),
            field: field.clone(),
        }
    }

    pub fn one(field: &Arc<CycloField>) -> Self {
        Self::from_rational(field, &Rational::one())
    }

    pub fn from_rational(field: &Arc<CycloField>, q: &Rational) -> Self {
        let mut num = vec![BigInt::zero(); field.degree];
        num[0] = q.numer().clone();
        Self::normalized(field.clone(), num, q.denom().clone())
    }

    /// `zeta_N^k`.
    pub fn zeta_pow(field: &Arc<CycloField>, k: u32) -> Self {
        let num = field.power_basis_vector(k);
        Self::normalized(field.clone(), num, BigInt::one())
    }

    /// The root of unity with the given argument; the argument's order must
    /// divide the conductor.
    pub fn root_of_unity(field: &Arc<CycloField>, arg: &crate::rational::UnitArg) -> Self {
        let scaled = arg.value() * Rational::from(BigInt::from(field.conductor));
        assert!(
            scaled.denom().is_one(),
            "argument order must divide the conductor"
        );
        let k = scaled
            .numer()
            .mod_floor(&BigInt::from(field.conductor))
            .to_u32()
            .expect("reduced exponent fits");
        Self::zeta_pow(field, k)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Coefficients over the power basis, as exact rationals.
    pub fn coefficients(&self) -> Vec<Rational> {
        self.num
            .iter()
            .map(|c| Rational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn from_coefficients(field: &Arc<CycloField>, coeffs: &[Rational]) -> Self {
        assert_eq!(coeffs.len(), field.degree);
        let mut den = BigInt::one();
        for c in coeffs {
            den = den.lcm(c.denom());
        }
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Self::normalized(field.clone(), num, den)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(Rational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.field.conductor, other.field.conductor,
            "conductor mismatch: embed into a common field first"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let den = self.den.lcm(&other.den);
        let la = &den / &self.den;
        let lb = &den / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| a * &la + b * &lb)
            .collect();
        Self::normalized(self.field.clone(), num, den)
    }

    pub fn neg(&self) -> Self {
        CyclotomicNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let d = self.field.degree;
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let num = self.field.reduce_product(&prod);
        Self::normalized(self.field.clone(), num, &self.den * &other.den)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::normalized(self.field.clone(), num, &self.den * q.denom())
    }

    /// Horner evaluation of the coefficient polynomial at a fixed element.
    fn eval_at(&self, point: &CyclotomicNumber) -> CyclotomicNumber {
        let mut acc = Self::zero(&point.field);
        for c in self.num.iter().rev() {
            acc = acc.mul(point);
            if !c.is_zero() {
                let mut t = Self::zero(&point.field);
                t.num[0] = c.clone();
                acc = acc.add(&t);
            }
        }
        Self::normalized(point.field.clone(), acc.num, &acc.den * &self.den)
    }

    /// Apply the field automorphism `zeta -> zeta^k`; `k` must be coprime to
    /// the conductor.
    pub fn galois(&self, k: u32) -> Self {
        let n = self.field.conductor;
        let k = k % n;
        assert_eq!(
            (k as u64).gcd(&(n as u64)),
            1,
            "galois exponent must be coprime to the conductor"
        );
        self.eval_at(&Self::zeta_pow(&self.field, k))
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> Self {
        if self.field.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.field.conductor - 1)
    }

    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Embed into a field whose conductor is a multiple of this one's.
    pub fn embed(&self, target: &Arc<CycloField>) -> Self {
        let n = self.field.conductor;
        let m = target.conductor;
        assert_eq!(m % n, 0, "target conductor must be a multiple");
        if m == n {
            return CyclotomicNumber {
                field: target.clone(),
                num: self.num.clone(),
                den: self.den.clone(),
            };
        }
        self.eval_at(&Self::zeta_pow(target, m / n))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// minimal polynomial.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let phi: Vec<Rational> = self
            .field
            .min_poly
            .iter()
            .map(|c| Rational::from(c.clone()))
            .collect();
        let me: Vec<Rational> = self.coefficients();
        let (g, s) = poly_ext_gcd_mod(&me, &phi);
        // Phi_N is irreducible and self is nonzero, so g is a nonzero constant.
        debug_assert!(g.len() == 1 && !g[0].is_zero());
        let ginv = Rational::one() / g[0].clone();
        let mut coeffs = vec![Rational::zero(); self.field.degree];
        for (i, c) in s.iter().enumerate() {
            coeffs[i] = c * &ginv;
        }
        Ok(Self::from_coefficients(&self.field, &coeffs))
    }

    /// Exact sign of an element of the real subfield: -1, 0, or 1.
    ///
    /// Zero is decided exactly on the canonical coefficients; otherwise the
    /// value is enclosed in rational intervals of increasing precision until
    /// zero is excluded, which must happen since the element is nonzero.
    pub fn real_sign(&self) -> Result<i8, ExactError> {
        if self.is_zero() {
            return Ok(0);
        }
        if !self.is_real() {
            return Err(ExactError::NotReal);
        }
        let n = self.field.conductor;
        let mut digits: u32 = 12;
        loop {
            let tol = pow10_neg(digits);
            let pi = pi_enclosure(&tol);
            let two_pi = pi.scale(&rat(2, 1));
            let mut total = Interval::point(Rational::zero());
            for (i, c) in self.num.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let theta = two_pi.scale(&rat(i as i64, n as i64));
                let cosv = cos_enclosure(&theta, &tol);
                total = total.add(&cosv.scale(&Rational::from(c.clone())));
            }
            if let Some(s) = total.uniform_sign() {
                return Ok(s); // den > 0 never flips the sign
            }
            digits *= 4;
            assert!(
                digits < 1 << 22,
                "interval sign evaluation failed to converge on a nonzero element"
            );
        }
    }

    /// Approximate real part; a display and test aid, never a source of truth.
    pub fn approx_re(&self) -> f64 {
        let n = self.field.conductor as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        self.num
            .iter()
            .enumerate()
            .map(|(i, c)| {
                c.to_f64().unwrap_or(f64::NAN) * cos_taylor(core::f64::consts::TAU * i as f64 / n)
            })
            .sum::<f64>()
            / den
    }

    /// Rough size guard for closure searches: total bit length of the stored
    /// integers.
    pub fn bit_size(&self) -> u64 {
        self.num.iter().map(|c| c.bits()).sum::<u64>() + self.den.bits()
    }
}

/// Plain Taylor cosine for arguments in `[0, 2*pi)`; `f64::cos` lives in std
/// and this crate's core is `no_std`. Only feeds [`CyclotomicNumber::approx_re`].
fn cos_taylor(x: f64) -> f64 {
    let x2 = x * x;
    let mut term = 1.0;
    let mut sum = 0.0;
    for n in 0..26 {
        if n % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        term *= x2 / ((2 * n + 1) as f64 * (2 * n + 2) as f64);
    }
    sum
}

/// Product of two elements, embedding both into the lcm conductor if needed.
pub fn cyclo_mul(
    a: &CyclotomicNumber,
    b: &CyclotomicNumber,
    cap: u32,
) -> Result<CyclotomicNumber, ExactError> {
    let na = a.conductor() as u64;
    let nb = b.conductor() as u64;
    if na == nb {
        return Ok(a.mul(b));
    }
    let m = na.lcm(&nb);
    if m > cap as u64 {
        return Err(ExactError::ConductorLimit { requested: m, cap });
    }
    let target = CycloField::new(m as u32, cap)?;
    Ok(a.embed(&target).mul(&b.embed(&target)))
}

// --- rational polynomial helpers for the inverse ---

fn rpoly_trim(p: &mut Vec<Rational>) {
    while p.len() > 1 && p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn rpoly_is_zero(p: &[Rational]) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn rpoly_div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    rpoly_trim(&mut rem);
    let mut bb = b.to_vec();
    rpoly_trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    if rem.len() <= db || rpoly_is_zero(&rem) {
        return (vec![Rational::zero()], rem);
    }
    let dq = rem.len() - 1 - db;
    let mut q = vec![Rational::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let c = &rem[i + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in bb.iter().enumerate() {
                let t = &c * bj;
                rem[i + j] = &rem[i + j] - &t;
            }
        }
        q[i] = c;
    }
    rpoly_trim(&mut rem);
    (q, rem)
}

/// Extended gcd returning `(g, s)` with `s*a == g (mod m)`.
fn poly_ext_gcd_mod(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    rpoly_trim(&mut r0);
    rpoly_trim(&mut r1);
    let mut s0 = alloc::vec![Rational::zero()];
    let mut s1 = alloc::vec![Rational::one()];
    while !rpoly_is_zero(&r1) {
        let (q, r) = rpoly_div_rem(&r0, &r1);
        let mut qs = vec![Rational::zero(); q.len() + s1.len() - 1];
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, sj) in s1.iter().enumerate() {
                let t = qi * sj;
                qs[i + j] = &qs[i + j] + &t;
            }
        }
        let len = s0.len().max(qs.len());
        let mut s_next = vec![Rational::zero(); len];
        for (i, c) in s0.iter().enumerate() {
            s_next[i] = s_next[i].clone() + c;
        }
        for (i, c) in qs.iter().enumerate() {
            s_next[i] = &s_next[i] - c;
        }
        rpoly_trim(&mut s_next);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s_next;
    }
    (r0, s0)
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor
            && self.den == other.den
            && self.num == other.num
    }
}

impl Eq for CyclotomicNumber {}

impl PartialOrd for CyclotomicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Structural order on canonical coordinates; used for deterministic set
/// membership in the closure search, not a numeric order.
impl Ord for CyclotomicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        self.field
            .conductor
            .cmp(&other.field.conductor)
            .then_with(|| self.den.cmp(&other.den))
            .then_with(|| self.num.cmp(&other.num))
    }
}

fn fmt_cyclo(x: &CyclotomicNumber, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, c) in x.num.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if !first {
            write!(f, " + ")?;
        }
        first = false;
        let q = Rational::new(c.clone(), x.den.clone());
        if i == 0 {
            write!(f, "{q}")?;
        } else {
            write!(f, "({q})*z{}^{i}", x.field.conductor)?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cyclo(self, f)
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_cyclo(self, f)
    }
}

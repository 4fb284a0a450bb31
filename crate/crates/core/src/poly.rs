//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! `Poly` stores coefficients in ascending degree order: `coeffs[i]` is the
//! coefficient of x^i. The zero polynomial is the empty vector; otherwise the
//! last entry is nonzero.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    /// Builds a polynomial from ascending coefficients, dropping trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// x^n.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::one();
        Poly { coeffs }
    }

    /// The monic linear polynomial x − root.
    pub fn linear(root: &BigInt) -> Self {
        Self::from_coeffs(vec![-root, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// True when every coefficient is ≥ 0 (membership in ℕ[x]).
    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficient of x^m; zero for any m outside `0..=deg`.
    pub fn coef(&self, m: i64) -> BigInt {
        usize::try_from(m)
            .ok()
            .and_then(|i| self.coeffs.get(i))
            .cloned()
            .unwrap_or_default()
    }

    /// Largest absolute coefficient (zero for the zero polynomial).
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_default()
    }

    /// Horner evaluation at `x0`.
    pub fn eval(&self, x0: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc *= x0;
            acc += c;
        }
        acc
    }

    pub fn eval_i64(&self, x0: i64) -> BigInt {
        self.eval(&BigInt::from(x0))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `self / q` in ℤ[x].
    ///
    /// Fails with `NotDivisible` when no integer polynomial r satisfies
    /// `self = q·r`, and with `ZeroDivisor` when `q` is zero.
    pub fn exact_div(&self, q: &Poly) -> Result<Poly> {
        let dq = q.degree().ok_or(Error::ZeroDivisor)?;
        let Some(dp) = self.degree() else {
            return Ok(Poly::zero());
        };
        if dq > dp {
            return Err(Error::NotDivisible);
        }
        let lead = &q.coeffs[dq];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let c = std::mem::take(&mut rem[i + dq]);
            if c.is_zero() {
                continue;
            }
            if !(&c % lead).is_zero() {
                return Err(Error::NotDivisible);
            }
            let qi = c / lead;
            for (j, qc) in q.coeffs[..dq].iter().enumerate() {
                rem[i + j] -= &qi * qc;
            }
            quot[i] = qi;
        }
        if rem[..dq].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(Poly::from_coeffs(quot))
    }

    pub fn divides(&self, p: &Poly) -> bool {
        !self.is_zero() && p.exact_div(self).is_ok()
    }
}

/// Canonical order: by degree, then lexicographically on ascending coefficients.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: array of decimal strings, ascending degree.
impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| parse_bigint(s).map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

/// Parses a decimal integer string (optional leading sign).
pub fn parse_bigint(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|_| Error::InvalidInstance(format!("not a decimal integer: {s:?}")))
}

/// An integer multiset a_1..a_n, used as the roots of ∏(x − a_i).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootList(pub Vec<BigInt>);

impl RootList {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct roots in ascending order with their multiplicities.
    pub fn multiplicities(&self) -> Vec<(BigInt, u32)> {
        let mut sorted = self.0.clone();
        sorted.sort();
        let mut out: Vec<(BigInt, u32)> = Vec::new();
        for r in sorted {
            match out.last_mut() {
                Some((last, m)) if *last == r => *m += 1,
                _ => out.push((r, 1)),
            }
        }
        out
    }
}

impl From<Vec<BigInt>> for RootList {
    fn from(v: Vec<BigInt>) -> Self {
        RootList(v)
    }
}

/// Expands ∏(x − a_i) incrementally, one linear factor at a time.
///
/// Each step touches k + 1 coefficients, so n roots cost n(n+1)/2
/// multiply-adds. The empty list yields 1.
pub fn expand_from_roots(roots: &[BigInt]) -> Poly {
    let mut c: Vec<BigInt> = Vec::with_capacity(roots.len() + 1);
    c.push(BigInt::one());
    for a in roots {
        c.push(BigInt::zero());
        // c'[j] = c[j-1] - a*c[j], walking down so c[j-1] is still the old value
        for j in (1..c.len()).rev() {
            let (lo, hi) = c.split_at_mut(j);
            let cur = &mut hi[0];
            if !a.is_zero() && !cur.is_zero() {
                *cur *= a;
                *cur = -std::mem::take(cur);
            } else {
                cur.set_zero();
            }
            *cur += &lo[j - 1];
        }
        c[0] *= a;
        c[0] = -std::mem::take(&mut c[0]);
    }
    Poly::from_coeffs(c)
}

/// All elementary symmetric functions e_0..=e_kmax of `values`.
///
/// Uses the per-item update e_j ← e_j + a·e_{j−1}; entries past
/// `values.len()` stay zero.
pub fn elementary_symmetric_all(values: &[BigInt], kmax: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); kmax + 1];
    e[0] = BigInt::one();
    for (i, a) in values.iter().enumerate() {
        for j in (1..=kmax.min(i + 1)).rev() {
            let t = a * &e[j - 1];
            e[j] += t;
        }
    }
    e
}

/// e_k(values): the sum over all k-subsets of the product of chosen values.
pub fn elementary_symmetric(values: &[BigInt], k: i64) -> Result<BigInt> {
    let n = values.len();
    let ku = usize::try_from(k)
        .ok()
        .filter(|&ku| ku <= n)
        .ok_or(Error::OutOfRange { index: k, max: n })?;
    Ok(elementary_symmetric_all(values, ku).swap_remove(ku))
}

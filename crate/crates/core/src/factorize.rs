//! Complete factorization over ℤ for desk-scale monic polynomials, and
//! enumeration of every monic divisor from the resulting exponent vectors.
//!
//! Integer roots are peeled off first (candidates are divisors of the
//! trailing nonzero coefficient within a root bound). Whatever remains is
//! root-free and goes through Kronecker's method, which is exponential and
//! therefore guarded by a degree cap.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith;
use crate::error::{Error, Result};
use crate::poly::{Poly, RootList};

pub const DEFAULT_DEGREE_CAP: usize = 16;

/// Extra evaluation points kept as cheap divisibility checks in Kronecker's search.
const CHECK_POINTS: usize = 3;

/// Candidate roots are found by scanning 1..=limit when the limit is this small.
const ROOT_SCAN_LIMIT: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    Plus,
    Minus,
}

impl Unit {
    pub fn value(self) -> BigInt {
        match self {
            Unit::Plus => BigInt::one(),
            Unit::Minus => -BigInt::one(),
        }
    }
}

/// `unit · ∏ poly_i^{mult_i}` with each `poly_i` monic and irreducible, sorted
/// canonically with no repeats.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibleFactorization {
    unit: Unit,
    factors: Vec<(Poly, u32)>,
}

impl IrreducibleFactorization {
    /// Sorts and merges the given monic factors. Irreducibility is the caller's
    /// responsibility.
    pub fn from_parts(unit: Unit, factors: impl IntoIterator<Item = (Poly, u32)>) -> Self {
        let mut list: Vec<(Poly, u32)> = factors.into_iter().filter(|(_, m)| *m > 0).collect();
        list.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Poly, u32)> = Vec::with_capacity(list.len());
        for (f, m) in list {
            match merged.last_mut() {
                Some((g, n)) if *g == f => *n += m,
                _ => merged.push((f, m)),
            }
        }
        IrreducibleFactorization {
            unit,
            factors: merged,
        }
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }

    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    pub fn multiplicities(&self) -> Vec<u32> {
        self.factors.iter().map(|(_, m)| *m).collect()
    }

    /// unit × ∏ poly_i^{mult_i}.
    pub fn reconstruct(&self) -> Poly {
        let monic = self.product(&self.multiplicities());
        match self.unit {
            Unit::Plus => monic,
            Unit::Minus => -&monic,
        }
    }

    /// The monic divisor ∏ poly_i^{exponents_i}.
    pub fn product(&self, exponents: &[u32]) -> Poly {
        debug_assert_eq!(exponents.len(), self.factors.len());
        self.factors
            .iter()
            .zip(exponents)
            .filter(|(_, &e)| e > 0)
            .fold(Poly::one(), |acc, ((f, _), &e)| &acc * &f.pow(e))
    }

    /// ∏(mult_i + 1), saturating.
    pub fn divisor_count(&self) -> u128 {
        self.factors
            .iter()
            .fold(1u128, |acc, (_, m)| acc.saturating_mul(u128::from(*m) + 1))
    }

    pub fn divisors(&self) -> Divisors<'_> {
        Divisors::new(self)
    }
}

/// Position in the divisor lattice: one exponent per factor of the
/// factorization, each between 0 and that factor's multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivisorCursor {
    pub exponents: Vec<u32>,
}

impl DivisorCursor {
    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_full(&self, mults: &[u32]) -> bool {
        self.exponents == mults
    }

    /// The exponent vector of the cofactor.
    pub fn complement(&self, mults: &[u32]) -> DivisorCursor {
        DivisorCursor {
            exponents: mults
                .iter()
                .zip(&self.exponents)
                .map(|(m, e)| m - e)
                .collect(),
        }
    }
}

/// Streams every monic divisor exactly once, in lexicographic order of the
/// exponent vector (last factor varies fastest).
pub struct Divisors<'a> {
    factors: &'a [(Poly, u32)],
    powers: Vec<Vec<Poly>>,
    exponents: Vec<u32>,
    // prefix[i] = ∏_{j<i} f_j^{e_j}
    prefix: Vec<Poly>,
    done: bool,
}

impl<'a> Divisors<'a> {
    fn new(fact: &'a IrreducibleFactorization) -> Self {
        let factors = fact.factors();
        let powers = factors
            .iter()
            .map(|(f, m)| {
                let mut pows = vec![Poly::one()];
                for _ in 0..*m {
                    let next = pows.last().map(|last| last * f).unwrap_or_default();
                    pows.push(next);
                }
                pows
            })
            .collect();
        Divisors {
            factors,
            powers,
            exponents: vec![0; factors.len()],
            prefix: vec![Poly::one(); factors.len() + 1],
            done: false,
        }
    }
}

impl Iterator for Divisors<'_> {
    type Item = (Poly, DivisorCursor);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = (
            self.prefix[self.factors.len()].clone(),
            DivisorCursor {
                exponents: self.exponents.clone(),
            },
        );
        let mut pos = None;
        for i in (0..self.factors.len()).rev() {
            if self.exponents[i] < self.factors[i].1 {
                self.exponents[i] += 1;
                pos = Some(i);
                break;
            }
            self.exponents[i] = 0;
        }
        match pos {
            None => self.done = true,
            Some(i) => {
                for j in i..self.factors.len() {
                    let e = self.exponents[j] as usize;
                    self.prefix[j + 1] = if e == 0 {
                        self.prefix[j].clone()
                    } else {
                        &self.prefix[j] * &self.powers[j][e]
                    };
                }
            }
        }
        Some(out)
    }
}

fn require_monic(p: &Poly) -> Result<()> {
    if p.is_zero() {
        Err(Error::ZeroPolynomial)
    } else if !p.is_monic() {
        Err(Error::NotMonic)
    } else {
        Ok(())
    }
}

/// Upper bound on |root| for a monic polynomial: 2·max_i |c_{n−i}|^{1/i}.
fn root_bound(p: &Poly) -> BigInt {
    let n = p.degree().unwrap_or(0);
    let c = p.coeffs();
    let mut best = BigInt::zero();
    for i in 1..=n {
        let a = c[n - i].abs();
        if a.is_zero() {
            continue;
        }
        let r = a.nth_root(i as u32) + 1;
        if r > best {
            best = r;
        }
    }
    best * 2
}

/// Positive candidates d with d | c0 and d ≤ bound.
fn root_candidates(c0: &BigInt, bound: &BigInt) -> Result<Vec<BigInt>> {
    let c0 = c0.abs();
    let sqrt = c0.sqrt();
    let limit = if *bound < sqrt { bound } else { &sqrt };
    if let Some(lim) = limit.to_u64().filter(|&l| l <= ROOT_SCAN_LIMIT) {
        let mut out = Vec::new();
        for d in 1..=lim {
            let d = BigInt::from(d);
            if (&c0 % &d).is_zero() {
                let co = &c0 / &d;
                if co <= *bound && co != d {
                    out.push(co);
                }
                out.push(d);
            }
        }
        out.sort();
        return Ok(out);
    }
    Ok(arith::divisors(&c0)?
        .into_iter()
        .filter(|d| d <= bound)
        .collect())
}

/// Splits `p` (monic) into its integer roots, with multiplicity and in
/// ascending order, and the root-free monic remainder.
fn split_integer_roots(p: &Poly) -> Result<(Vec<BigInt>, Poly)> {
    require_monic(p)?;
    let zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut roots = vec![BigInt::zero(); zeros];
    let mut rest = Poly::from_coeffs(p.coeffs()[zeros..].to_vec());
    if rest.degree() == Some(0) {
        return Ok((roots, rest));
    }
    let bound = root_bound(&rest);
    let candidates = root_candidates(&rest.coef(0), &bound)?;
    'cands: for d in candidates {
        for a in [-d.clone(), d] {
            while rest.eval(&a).is_zero() {
                rest = rest.exact_div(&Poly::linear(&a))?;
                roots.push(a.clone());
                if rest.degree() == Some(0) {
                    break 'cands;
                }
            }
        }
    }
    roots.sort();
    Ok((roots, rest))
}

/// Every integer a with (x − a) | p, repeated by multiplicity, ascending.
pub fn integer_roots(p: &Poly) -> Result<RootList> {
    split_integer_roots(p).map(|(roots, _)| RootList(roots))
}

/// Canonical evaluation points 0, 1, −1, 2, −2, …
fn canonical_points() -> impl Iterator<Item = i64> {
    std::iter::once(0).chain((1..).flat_map(|i| [i, -i]))
}

struct KroneckerSearch<'a> {
    p: &'a Poly,
    degree: usize,
    nodes: Vec<BigInt>,
    targets: Vec<Vec<BigInt>>,
    checks: Vec<(BigInt, BigInt)>,
}

impl KroneckerSearch<'_> {
    /// Depth-first over divisor tuples. `row[i]` holds the divided difference
    /// r[x_i..x_{j-1}] for the remainder r = q − x^d; a non-integral entry
    /// rules out the whole prefix.
    fn dfs(&self, level: usize, row: &[BigInt], newton: &mut Vec<BigInt>) -> Option<Poly> {
        if level == self.degree {
            return self.candidate(newton);
        }
        let xj = &self.nodes[level];
        let xj_pow = num_traits::pow(xj.clone(), self.degree);
        for v in &self.targets[level] {
            let mut next = vec![BigInt::zero(); level + 1];
            next[level] = v - &xj_pow;
            let mut ok = true;
            for i in (0..level).rev() {
                let num = &next[i + 1] - &row[i];
                let den = xj - &self.nodes[i];
                if !(&num % &den).is_zero() {
                    ok = false;
                    break;
                }
                next[i] = num / den;
            }
            if !ok {
                continue;
            }
            newton.push(next[0].clone());
            if let Some(q) = self.dfs(level + 1, &next, newton) {
                return Some(q);
            }
            newton.pop();
        }
        None
    }

    fn candidate(&self, newton: &[BigInt]) -> Option<Poly> {
        let mut r = Poly::zero();
        for j in (0..newton.len()).rev() {
            r = &r * &Poly::linear(&self.nodes[j]);
            r = &r + &Poly::constant(newton[j].clone());
        }
        let q = &r + &Poly::monomial(self.degree);
        for (x, px) in &self.checks {
            let qx = q.eval(x);
            if qx.is_zero() || !(px % &qx).is_zero() {
                return None;
            }
        }
        self.p.exact_div(&q).ok().map(|_| q)
    }
}

/// A monic factor of `p` with degree exactly `d`, if one exists.
fn factor_of_degree(p: &Poly, d: usize) -> Result<Option<Poly>> {
    let mut pool: Vec<(usize, i64, BigInt)> = Vec::new();
    for (order, x) in canonical_points().enumerate() {
        if pool.len() == d + CHECK_POINTS {
            break;
        }
        let x_big = BigInt::from(x);
        let v = p.eval(&x_big);
        if v.is_zero() {
            if d == 1 {
                return Ok(Some(Poly::linear(&x_big)));
            }
            continue;
        }
        pool.push((order, x, v));
    }
    // interpolate through the smallest values; ties keep canonical order
    pool.sort_by(|a, b| a.2.abs().cmp(&b.2.abs()).then(a.0.cmp(&b.0)));
    let (interp, checks) = pool.split_at(d);
    let mut targets = Vec::with_capacity(d);
    for (_, _, v) in interp {
        let mut cands = Vec::new();
        for div in arith::divisors(v)? {
            cands.push(-&div);
            cands.push(div);
        }
        targets.push(cands);
    }
    let search = KroneckerSearch {
        p,
        degree: d,
        nodes: interp.iter().map(|(_, x, _)| BigInt::from(*x)).collect(),
        targets,
        checks: checks
            .iter()
            .map(|(_, x, v)| (BigInt::from(*x), v.clone()))
            .collect(),
    };
    Ok(search.dfs(0, &[], &mut Vec::new()))
}

/// Irreducible monic factors of monic `p`, with repetition, assuming no factor
/// of degree below `min_degree`.
fn kronecker_split(p: &Poly, min_degree: usize) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    let mut rest = p.clone();
    let mut d = min_degree.max(1);
    while let Some(n) = rest.degree().filter(|&n| n > 0) {
        let mut found = None;
        while 2 * d <= n {
            if let Some(q) = factor_of_degree(&rest, d)? {
                found = Some(q);
                break;
            }
            d += 1;
        }
        match found {
            // smallest-degree factor, hence irreducible
            Some(q) => {
                rest = rest.exact_div(&q)?;
                out.push(q);
            }
            None => {
                out.push(rest);
                break;
            }
        }
    }
    Ok(out)
}

fn group(factors: Vec<Poly>, unit: Unit) -> IrreducibleFactorization {
    IrreducibleFactorization::from_parts(unit, factors.into_iter().map(|f| (f, 1)))
}

/// Kronecker factorization of `±(monic)` polynomials with the default cap.
pub fn kronecker_factor(p: &Poly) -> Result<IrreducibleFactorization> {
    kronecker_factor_with_cap(p, DEFAULT_DEGREE_CAP)
}

pub fn kronecker_factor_with_cap(p: &Poly, cap: usize) -> Result<IrreducibleFactorization> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?;
    let (unit, monic) = if lead.is_one() {
        (Unit::Plus, p.clone())
    } else if (-lead).is_one() {
        (Unit::Minus, -p)
    } else {
        return Err(Error::NotMonic);
    };
    let degree = monic.degree().unwrap_or(0);
    if degree > cap {
        return Err(Error::DegreeTooLarge { degree, cap });
    }
    if degree == 0 {
        return Ok(IrreducibleFactorization::from_parts(unit, []));
    }
    Ok(group(kronecker_split(&monic, 1)?, unit))
}

/// Canonical factorization of a monic polynomial with the default cap.
pub fn factorize(p: &Poly) -> Result<IrreducibleFactorization> {
    factorize_with_cap(p, DEFAULT_DEGREE_CAP)
}

/// Integer roots first, then Kronecker on the root-free remainder, whose
/// degree must not exceed `cap`.
pub fn factorize_with_cap(p: &Poly, cap: usize) -> Result<IrreducibleFactorization> {
    let (roots, rest) = split_integer_roots(p)?;
    let degree = rest.degree().unwrap_or(0);
    if degree > cap {
        return Err(Error::DegreeTooLarge { degree, cap });
    }
    let mut factors: Vec<Poly> = roots.iter().map(Poly::linear).collect();
    if degree > 0 {
        // the remainder has no linear factors left
        factors.extend(kronecker_split(&rest, 2)?);
    }
    Ok(group(factors, Unit::Plus))
}

pub fn is_irreducible(p: &Poly) -> Result<bool> {
    let f = factorize(p)?;
    Ok(matches!(f.factors(), [(q, 1)] if q.degree() == p.degree()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::expand_from_roots;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn roots_of(a: &[i64]) -> Poly {
        expand_from_roots(&big(a))
    }

    #[test]
    fn integer_root_examples() {
        assert_eq!(integer_roots(&p(&[2, -3, 1])).unwrap().0, big(&[1, 2]));
        assert!(integer_roots(&p(&[1, 1, 1])).unwrap().is_empty());
        assert_eq!(integer_roots(&p(&[0, 0, 0, 1])).unwrap().0, big(&[0, 0, 0]));
        assert_eq!(
            integer_roots(&roots_of(&[-3, 4, 4, 0, 7, -3])).unwrap().0,
            big(&[-3, -3, 0, 4, 4, 7])
        );
        assert_eq!(integer_roots(&p(&[2, 1, 2])), Err(Error::NotMonic));
        assert_eq!(integer_roots(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn kronecker_examples() {
        let f = kronecker_factor(&p(&[1, 1, 1])).unwrap();
        assert_eq!(f.factors(), &[(p(&[1, 1, 1]), 1)]);
        let f = kronecker_factor(&p(&[1, -1, 1])).unwrap();
        assert_eq!(f.factors(), &[(p(&[1, -1, 1]), 1)]);
        let f = kronecker_factor(&Poly::one()).unwrap();
        assert_eq!(f.unit(), Unit::Plus);
        assert!(f.factors().is_empty());
        // a negated monic input moves the sign into the unit
        let f = kronecker_factor(&p(&[-1, 0, 0, -1])).unwrap();
        assert_eq!(f.unit(), Unit::Minus);
        assert_eq!(f.reconstruct(), p(&[-1, 0, 0, -1]));
        assert_eq!(kronecker_factor(&p(&[1, 2])), Err(Error::NotMonic));
        assert!(matches!(
            kronecker_factor_with_cap(&Poly::monomial(5), 4),
            Err(Error::DegreeTooLarge { degree: 5, cap: 4 })
        ));
    }

    #[test]
    fn factorize_examples() {
        let f = factorize(&p(&[1, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(
            f.factors(),
            &[(p(&[1, 1]), 1), (p(&[1, -1, 1]), 1), (p(&[1, 1, 1]), 1)]
        );
        let f = factorize(&p(&[-5, 1])).unwrap();
        assert_eq!(f.factors(), &[(p(&[-5, 1]), 1)]);
        let f = factorize(&roots_of(&[-2, -2, -3])).unwrap();
        assert_eq!(f.factors(), &[(p(&[2, 1]), 2), (p(&[3, 1]), 1)]);
        assert_eq!(f.reconstruct(), p(&[12, 16, 7, 1]));
    }

    #[test]
    fn factorize_nonlinear_products() {
        // (x^2 + 1)^2 (x^2 + x + 1)(x^3 - 2)(x - 3)
        let parts = [p(&[1, 0, 1]), p(&[1, 0, 1]), p(&[1, 1, 1]), p(&[-2, 0, 0, 1]), p(&[-3, 1])];
        let prod = parts.iter().fold(Poly::one(), |acc, f| &acc * f);
        let f = factorize(&prod).unwrap();
        assert_eq!(f.reconstruct(), prod);
        assert_eq!(
            f.factors(),
            &[
                (p(&[-3, 1]), 1),
                (p(&[1, 0, 1]), 2),
                (p(&[1, 1, 1]), 1),
                (p(&[-2, 0, 0, 1]), 1)
            ]
        );
        // x^4 + 4 = (x^2 - 2x + 2)(x^2 + 2x + 2), no integer roots
        let f = factorize(&p(&[4, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors(), &[(p(&[2, -2, 1]), 1), (p(&[2, 2, 1]), 1)]);
        // cyclotomic x^8 - 1
        let f = factorize(&p(&[-1, 0, 0, 0, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(f.factors().len(), 4);
        assert_eq!(f.reconstruct(), p(&[-1, 0, 0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn irreducibility_examples() {
        assert!(!is_irreducible(&p(&[1, 0, 0, 1])).unwrap());
        assert!(is_irreducible(&p(&[7, 1])).unwrap());
        assert!(is_irreducible(&p(&[1, 1, 1])).unwrap());
        assert!(is_irreducible(&p(&[-2, 0, 0, 0, 1])).unwrap());
        assert!(!is_irreducible(&p(&[4, 0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn degree_cap_on_remainder() {
        // x^17 + 2 has no integer roots, so the whole thing hits the cap
        let mut c = vec![0i64; 18];
        c[0] = 2;
        c[17] = 1;
        assert!(matches!(
            factorize(&p(&c)),
            Err(Error::DegreeTooLarge { degree: 17, cap: 16 })
        ));
        // but a high-degree product of linear factors is fine
        let q = roots_of(&(0..40).map(|i| i - 20).collect::<Vec<_>>());
        assert_eq!(factorize(&q).unwrap().factors().len(), 40);
    }

    #[test]
    fn divisor_examples() {
        let f = factorize(&roots_of(&[-2, -3, -5])).unwrap();
        assert_eq!(f.divisors().count(), 8);
        assert_eq!(f.divisor_count(), 8);
        let f = factorize(&p(&[1, 1, 1])).unwrap();
        let divs: Vec<Poly> = f.divisors().map(|(d, _)| d).collect();
        assert_eq!(divs, vec![Poly::one(), p(&[1, 1, 1])]);
        let f = factorize(&roots_of(&[-2, -2])).unwrap();
        let divs: Vec<Poly> = f.divisors().map(|(d, _)| d).collect();
        assert_eq!(divs, vec![Poly::one(), p(&[2, 1]), p(&[4, 4, 1])]);
        let cursors: Vec<Vec<u32>> = f.divisors().map(|(_, c)| c.exponents).collect();
        assert_eq!(cursors, vec![vec![0], vec![1], vec![2]]);
    }

    /// Brute-force irreducibility oracle for small monic polynomials: search
    /// for a monic factor of degree 1..n with coefficients bounded by the
    /// binomial-weighted root bound.
    fn brute_reducible(q: &Poly) -> bool {
        let n = q.degree().unwrap();
        let rb = root_bound(q).to_i64().unwrap().max(1);
        // a reducible polynomial has a factor of degree ≤ n/2
        for d in 1..=n / 2 {
            // |coef_j| ≤ C(d, j)·rb^(d−j) for a monic factor of degree d
            let bounds: Vec<i64> = (0..d)
                .map(|j| {
                    let binom = (0..j).fold(1i64, |acc, i| acc * (d - i) as i64 / (i + 1) as i64);
                    binom * rb.pow((d - j) as u32)
                })
                .collect();
            let mut cur: Vec<i64> = bounds.iter().map(|b| -b).collect();
            loop {
                let mut cand = cur.clone();
                cand.push(1);
                if Poly::from_i64(&cand).divides(q) {
                    return true;
                }
                let mut i = 0;
                while i < d {
                    if cur[i] < bounds[i] {
                        cur[i] += 1;
                        break;
                    }
                    cur[i] = -bounds[i];
                    i += 1;
                }
                if i == d {
                    break;
                }
            }
        }
        false
    }

    #[test]
    fn irreducibility_agrees_with_brute_force() {
        // all monic polynomials of degree 2..=3 with |c_i| ≤ 3, and degree 4 with |c_i| ≤ 2
        let mut checked = 0;
        for (deg, lim) in [(1usize, 3i64), (2, 3), (3, 3), (4, 2)] {
            let mut cur = vec![-lim; deg];
            loop {
                let mut c = cur.clone();
                c.push(1);
                let q = Poly::from_i64(&c);
                assert_eq!(is_irreducible(&q).unwrap(), !brute_reducible(&q), "{q}");
                checked += 1;
                let mut i = 0;
                while i < deg && cur[i] == lim {
                    cur[i] = -lim;
                    i += 1;
                }
                if i == deg {
                    break;
                }
                cur[i] += 1;
            }
        }
        assert!(checked > 600);
    }

    proptest! {
        #[test]
        fn divisors_match_root_subsets(a in prop::collection::vec(-5i64..=5, 1..=8)) {
            let q = roots_of(&a);
            let f = factorize(&q).unwrap();
            prop_assert_eq!(f.reconstruct(), q.clone());
            let from_stream: Vec<Poly> = f.divisors().map(|(d, _)| d).collect();
            let stream_set: BTreeSet<Poly> = from_stream.iter().cloned().collect();
            prop_assert_eq!(stream_set.len(), from_stream.len());
            let mut oracle = BTreeSet::new();
            for mask in 0u32..(1 << a.len()) {
                let sub: Vec<i64> = (0..a.len()).filter(|i| mask >> i & 1 == 1).map(|i| a[i]).collect();
                oracle.insert(roots_of(&sub));
            }
            prop_assert_eq!(&stream_set, &oracle);
            for d in &from_stream {
                prop_assert!(q.exact_div(d).is_ok());
            }
        }

        #[test]
        fn reconstruction_of_mixed_products(
            roots in prop::collection::vec(-4i64..=4, 0..=4),
            quads in prop::collection::vec((-3i64..=3, 1i64..=4), 0..=2),
        ) {
            // x^2 + b x + c with c ≥ 1 and b^2 < 4c has no real roots
            let mut prod = roots_of(&roots);
            for (b, c) in quads {
                if b * b < 4 * c {
                    prod = &prod * &Poly::from_i64(&[c, b, 1]);
                }
            }
            let f = factorize(&prod).unwrap();
            prop_assert_eq!(f.reconstruct(), prod);
            for (g, _) in f.factors() {
                prop_assert!(g.is_monic());
            }
            let sorted = f.factors().windows(2).all(|w| w[0].0 < w[1].0);
            prop_assert!(sorted);
        }
    }
}

//! Exact deciders for constrained-factor problems over a monic p.
//!
//! Every monic divisor of p is ∏ f_i^{d_i} for an exponent vector d bounded by
//! the multiplicities of the irreducible factors f_i. Because q ↦ q(k) is
//! multiplicative, a k-factor query becomes a product-of-values search over
//! those vectors, solved by meet in the middle on a prefix/suffix split of the
//! factor list. Coefficient and ℕ[x] constraints are not multiplicative and
//! are enumerated directly.
//!
//! Witnesses are canonical: the lexicographically smallest admissible
//! exponent vector, with the monic sign preferred on ties.

use std::collections::HashMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::exact_sqrt;
use crate::decision::{Decision, FactorWitness, Stats, Witness};
use crate::error::{Error, Result};
use crate::factorize::{factorize_with_cap, DivisorCursor, IrreducibleFactorization, DEFAULT_DEGREE_CAP};
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum TrivialFactors {
    #[default]
    Allowed,
    /// q = 1 and q = p (up to sign) are rejected.
    Forbidden,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignedFactors {
    #[default]
    MonicOnly,
    /// Also consider −q for every monic divisor q.
    AllowSign,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DeciderStrategy {
    Exhaustive,
    #[default]
    Mitm,
}

/// Which coefficient of q the factor-with-coefficients problem constrains.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum CoefConvention {
    /// coef(q, m): the coefficient of x^m.
    #[default]
    Ascending,
    /// coef(q, deg q − m), where e_m of the roots of q sits.
    Descending,
}

macro_rules! named_enum {
    ($ty:ty { $($variant:ident => $name:literal),+ $(,)? }) => {
        impl $ty {
            pub fn as_str(self) -> &'static str {
                match self {
                    $(<$ty>::$variant => $name,)+
                }
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(<$ty>::$variant),)+
                    _ => Err(Error::InvalidInstance(format!(
                        "unknown {} value {s:?}",
                        stringify!($ty)
                    ))),
                }
            }
        }
    };
}

named_enum!(TrivialFactors { Allowed => "allowed", Forbidden => "forbidden" });
named_enum!(SignedFactors { MonicOnly => "monic", AllowSign => "allow" });
named_enum!(DeciderStrategy { Exhaustive => "exhaustive", Mitm => "mitm" });
named_enum!(CoefConvention { Ascending => "ascending", Descending => "descending" });

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeciderConfig {
    pub trivial_factors: TrivialFactors,
    pub signed_factors: SignedFactors,
    pub strategy: DeciderStrategy,
    pub degree_cap: usize,
    /// Upper bound on exponent vectors enumerated by one decision.
    pub node_budget: u128,
}

impl Default for DeciderConfig {
    fn default() -> Self {
        DeciderConfig {
            trivial_factors: TrivialFactors::Allowed,
            signed_factors: SignedFactors::MonicOnly,
            strategy: DeciderStrategy::Mitm,
            degree_cap: DEFAULT_DEGREE_CAP,
            node_budget: 1 << 26,
        }
    }
}

impl DeciderConfig {
    fn admits(&self, exps: &[u32], mults: &[u32]) -> bool {
        self.trivial_factors == TrivialFactors::Allowed
            || (exps.iter().any(|&e| e > 0) && exps != mults)
    }

    fn signs(&self) -> &'static [bool] {
        match self.signed_factors {
            SignedFactors::MonicOnly => &[false],
            SignedFactors::AllowSign => &[false, true],
        }
    }
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

/// A nonzero monic polynomial together with its factorization.
#[derive(Clone, Debug)]
pub struct FactoredPoly {
    p: Poly,
    fact: IrreducibleFactorization,
    mults: Vec<u32>,
}

impl FactoredPoly {
    pub fn new(p: &Poly, degree_cap: usize) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !p.is_monic() {
            return Err(Error::NotMonic);
        }
        let fact = factorize_with_cap(p, degree_cap)?;
        let mults = fact.multiplicities();
        Ok(FactoredPoly {
            p: p.clone(),
            fact,
            mults,
        })
    }

    pub fn poly(&self) -> &Poly {
        &self.p
    }

    pub fn factorization(&self) -> &IrreducibleFactorization {
        &self.fact
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.mults
    }

    pub fn divisor_count(&self) -> u128 {
        self.fact.divisor_count()
    }

    pub fn product(&self, exps: &[u32]) -> Poly {
        self.fact.product(exps)
    }

    fn witness(&self, exps: Vec<u32>, negate: bool, pair: bool, value: Option<BigInt>) -> FactorWitness {
        let q = self.product(&exps);
        let r = pair.then(|| {
            let r = self.product(&DivisorCursor { exponents: exps.clone() }.complement(&self.mults).exponents);
            if negate {
                -&r
            } else {
                r
            }
        });
        FactorWitness {
            q: if negate { -&q } else { q },
            r,
            cursor: DivisorCursor { exponents: exps },
            certified_value: value,
        }
    }
}

fn factor_decision(w: FactorWitness, stats: Stats) -> Decision {
    Decision::yes(Witness::Factor(w), stats)
}

/// All exponent vectors over `values`/`mults` in lexicographic order with
/// their value products. When `divides` is set, subtrees whose partial
/// product does not divide it are cut (a non-divisor never becomes one).
fn enumerate_vectors(
    values: &[BigInt],
    mults: &[u32],
    divides: Option<&BigInt>,
    nodes: &mut u64,
) -> Vec<(Vec<u32>, BigInt)> {
    fn go(
        values: &[BigInt],
        mults: &[u32],
        divides: Option<&BigInt>,
        exps: &mut Vec<u32>,
        acc: BigInt,
        out: &mut Vec<(Vec<u32>, BigInt)>,
        nodes: &mut u64,
    ) {
        *nodes += 1;
        if let Some(h) = divides {
            if acc.is_zero() || !(h % &acc).is_zero() {
                return;
            }
        }
        let pos = exps.len();
        if pos == values.len() {
            out.push((exps.clone(), acc));
            return;
        }
        let mut cur = acc;
        for e in 0..=mults[pos] {
            exps.push(e);
            go(values, mults, divides, exps, cur.clone(), out, nodes);
            exps.pop();
            if e < mults[pos] {
                cur *= &values[pos];
            }
        }
    }
    let mut out = Vec::new();
    go(values, mults, divides, &mut Vec::new(), BigInt::from(1), &mut out, nodes);
    out
}

fn count_vectors(mults: &[u32]) -> u128 {
    mults
        .iter()
        .fold(1u128, |acc, &m| acc.saturating_mul(u128::from(m) + 1))
}

/// Left half: value → up to three lexicographically smallest vectors, which
/// is enough to step past the excluded zero and full vectors.
const KEEP_PER_VALUE: usize = 3;

enum Plan {
    Exhaustive(Vec<(Vec<u32>, BigInt)>),
    Mitm {
        table: HashMap<BigInt, Vec<Vec<u32>>>,
        first: Vec<Vec<u32>>,
        right: Vec<(Vec<u32>, BigInt)>,
    },
}

/// Precomputed search for q(k) = h over the divisors of one (p, k).
pub struct KFactorSearch<'a> {
    fp: &'a FactoredPoly,
    k: BigInt,
    plan: Plan,
    build_nodes: u64,
    strategy: &'static str,
}

impl<'a> KFactorSearch<'a> {
    /// Tables for every target h.
    pub fn new(fp: &'a FactoredPoly, k: &BigInt, cfg: &DeciderConfig) -> Result<Self> {
        Self::build(fp, k, cfg, None)
    }

    /// Tables restricted to vectors whose value divides `h`, which answers
    /// only the targets ±h. With h = 0 this is the same as `new`.
    pub fn for_target(fp: &'a FactoredPoly, k: &BigInt, cfg: &DeciderConfig, h: &BigInt) -> Result<Self> {
        Self::build(fp, k, cfg, (!h.is_zero()).then_some(h))
    }

    fn build(fp: &'a FactoredPoly, k: &BigInt, cfg: &DeciderConfig, divides: Option<&BigInt>) -> Result<Self> {
        let values: Vec<BigInt> = fp.fact.factors().iter().map(|(f, _)| f.eval(k)).collect();
        let mults = &fp.mults;
        let mut nodes = 0u64;
        let (plan, strategy) = match cfg.strategy {
            DeciderStrategy::Exhaustive => {
                check_budget(count_vectors(mults), cfg.node_budget)?;
                let all = enumerate_vectors(&values, mults, divides, &mut nodes);
                (Plan::Exhaustive(all), "exhaustive")
            }
            DeciderStrategy::Mitm => {
                let split = (0..=mults.len())
                    .min_by_key(|&s| count_vectors(&mults[..s]).max(count_vectors(&mults[s..])))
                    .unwrap_or(0);
                check_budget(
                    count_vectors(&mults[..split]).saturating_add(count_vectors(&mults[split..])),
                    cfg.node_budget,
                )?;
                let left = enumerate_vectors(&values[..split], &mults[..split], divides, &mut nodes);
                let right = enumerate_vectors(&values[split..], &mults[split..], divides, &mut nodes);
                let first = left.iter().take(KEEP_PER_VALUE).map(|(v, _)| v.clone()).collect();
                let mut table: HashMap<BigInt, Vec<Vec<u32>>> = HashMap::new();
                for (v, val) in left {
                    let slot = table.entry(val).or_default();
                    if slot.len() < KEEP_PER_VALUE {
                        slot.push(v);
                    }
                }
                (Plan::Mitm { table, first, right }, "mitm")
            }
        };
        Ok(KFactorSearch {
            fp,
            k: k.clone(),
            plan,
            build_nodes: nodes,
            strategy,
        })
    }

    /// Smallest admissible monic exponent vector with ∏ f_i(k)^{d_i} = target.
    fn find(&self, target: &BigInt, cfg: &DeciderConfig, nodes: &mut u64) -> Option<Vec<u32>> {
        let mults = &self.fp.mults;
        match &self.plan {
            Plan::Exhaustive(all) => {
                for (v, val) in all {
                    *nodes += 1;
                    if val == target && cfg.admits(v, mults) {
                        return Some(v.clone());
                    }
                }
                None
            }
            Plan::Mitm { table, first, right } => {
                let mut best: Option<Vec<u32>> = None;
                for (rv, w) in right {
                    *nodes += 1;
                    let candidates: Option<&Vec<Vec<u32>>> = if w.is_zero() {
                        target.is_zero().then_some(first)
                    } else if target.is_zero() {
                        table.get(&BigInt::zero())
                    } else if (target % w).is_zero() {
                        table.get(&(target / w))
                    } else {
                        None
                    };
                    let hit = candidates.into_iter().flatten().find_map(|lv| {
                        let mut full = lv.clone();
                        full.extend_from_slice(rv);
                        cfg.admits(&full, mults).then_some(full)
                    });
                    if let Some(full) = hit {
                        if best.as_ref().is_none_or(|b| full < *b) {
                            best = Some(full);
                        }
                    }
                }
                best
            }
        }
    }

    /// Is there an admissible factor q with q(k) = h?
    pub fn decide(&self, h: &BigInt, cfg: &DeciderConfig) -> Decision {
        let mut nodes = self.build_nodes;
        let mut best: Option<(Vec<u32>, bool)> = None;
        for &negate in cfg.signs() {
            let target = if negate { -h } else { h.clone() };
            if let Some(v) = self.find(&target, cfg, &mut nodes) {
                if best.as_ref().is_none_or(|(b, _)| v < *b) {
                    best = Some((v, negate));
                }
            }
        }
        let stats = Stats::new(self.strategy, nodes);
        match best {
            Some((v, negate)) => {
                let mut w = self.fp.witness(v, negate, false, None);
                w.certified_value = Some(w.q.eval(&self.k));
                factor_decision(w, stats)
            }
            None => Decision::no(stats),
        }
    }

    /// Is there a split p = q·r with q(k) = r(k)? Signs cannot matter here,
    /// since negating both q and r preserves the equation.
    pub fn decide_equal(&self, cfg: &DeciderConfig) -> Decision {
        let mut nodes = self.build_nodes;
        let pk = self.fp.p.eval(&self.k);
        let best = if pk.is_zero() {
            vanishing_split(self.fp, &self.k)
        } else {
            match exact_sqrt(&pk) {
                None => None,
                Some(s) => {
                    let plus = self.find(&s, cfg, &mut nodes);
                    let minus = self.find(&-&s, cfg, &mut nodes);
                    match (plus, minus) {
                        (Some(a), Some(b)) => Some(a.min(b)),
                        (a, b) => a.or(b),
                    }
                }
            }
        };
        let stats = Stats::new(self.strategy, nodes);
        match best {
            Some(v) => {
                let mut w = self.fp.witness(v, false, true, None);
                w.certified_value = Some(w.q.eval(&self.k));
                factor_decision(w, stats)
            }
            None => Decision::no(stats),
        }
    }
}

/// p(k) = 0: both sides must vanish at k, which needs two vanishing factors
/// counted with multiplicity. The smallest such vector puts one copy of the
/// last vanishing factor in q; it is never the zero or full vector.
fn vanishing_split(fp: &FactoredPoly, k: &BigInt) -> Option<Vec<u32>> {
    let vanishing: Vec<usize> = fp
        .fact
        .factors()
        .iter()
        .enumerate()
        .filter(|(_, (f, _))| f.eval(k).is_zero())
        .map(|(i, _)| i)
        .collect();
    let total: u32 = vanishing.iter().map(|&i| fp.mults[i]).sum();
    let last = *vanishing.last()?;
    (total >= 2).then(|| {
        let mut v = vec![0; fp.mults.len()];
        v[last] = 1;
        v
    })
}

fn check_k_input(p: &Poly, cfg: &DeciderConfig) -> Result<FactoredPoly> {
    FactoredPoly::new(p, cfg.degree_cap)
}

/// The deciders on an already factored p, for callers that ask many
/// questions about one polynomial.
impl FactoredPoly {
    pub fn k_factor(&self, k: &BigInt, h: &BigInt, cfg: &DeciderConfig) -> Result<Decision> {
        Ok(KFactorSearch::for_target(self, k, cfg, h)?.decide(h, cfg))
    }

    pub fn k_equal_factor(&self, k: &BigInt, cfg: &DeciderConfig) -> Result<Decision> {
        let pk = self.p.eval(k);
        // only ±√p(k) can ever be hit, so tables are cut to its divisors
        let search = match exact_sqrt(&pk) {
            Some(s) if !s.is_zero() => KFactorSearch::for_target(self, k, cfg, &s)?,
            _ => KFactorSearch::new(self, k, cfg)?,
        };
        Ok(search.decide_equal(cfg))
    }

    pub fn factor_with_coefficients(
        &self,
        m: i64,
        h: &BigInt,
        convention: CoefConvention,
        cfg: &DeciderConfig,
    ) -> Result<Decision> {
        Ok(FwscSearch::new(self, m, convention, cfg)?.decide(h, cfg))
    }
}

pub fn k_factor_decide(p: &Poly, k: &BigInt, h: &BigInt, cfg: &DeciderConfig) -> Result<Decision> {
    check_k_input(p, cfg)?.k_factor(k, h, cfg)
}

pub fn sum_of_coefficients_decide(p: &Poly, s: &BigInt, cfg: &DeciderConfig) -> Result<Decision> {
    k_factor_decide(p, &BigInt::from(1), s, cfg)
}

pub fn constant_term_decide(p: &Poly, t: &BigInt, cfg: &DeciderConfig) -> Result<Decision> {
    k_factor_decide(p, &BigInt::zero(), t, cfg)
}

pub fn k_equal_factor_decide(p: &Poly, k: &BigInt, cfg: &DeciderConfig) -> Result<Decision> {
    check_k_input(p, cfg)?.k_equal_factor(k, cfg)
}

pub fn equal_constant_term_decide(p: &Poly, cfg: &DeciderConfig) -> Result<Decision> {
    k_equal_factor_decide(p, &BigInt::zero(), cfg)
}

pub fn equal_sum_of_coefficients_decide(p: &Poly, cfg: &DeciderConfig) -> Result<Decision> {
    k_equal_factor_decide(p, &BigInt::from(1), cfg)
}

/// Precomputed coefficient table for one (p, m, convention).
pub struct FwscSearch<'a> {
    fp: &'a FactoredPoly,
    m: i64,
    convention: CoefConvention,
    /// value → the smallest vectors (lexicographic) whose monic divisor has it
    table: HashMap<BigInt, Vec<Vec<u32>>>,
    nodes: u64,
}

impl CoefConvention {
    /// The coefficient of q this convention reads for index m.
    pub fn read(self, q: &Poly, m: i64) -> BigInt {
        match self {
            CoefConvention::Ascending => q.coef(m),
            CoefConvention::Descending => {
                let deg = q.degree().map_or(0, |d| d as i64);
                q.coef(deg - m)
            }
        }
    }
}

impl<'a> FwscSearch<'a> {
    pub fn new(fp: &'a FactoredPoly, m: i64, convention: CoefConvention, cfg: &DeciderConfig) -> Result<Self> {
        if m < 0 {
            return Err(Error::InvalidInstance(format!("coefficient index m = {m} is negative")));
        }
        check_budget(fp.divisor_count(), cfg.node_budget)?;
        let mut table: HashMap<BigInt, Vec<Vec<u32>>> = HashMap::new();
        let mut nodes = 0u64;
        for (q, cursor) in fp.fact.divisors() {
            nodes += 1;
            let slot = table.entry(convention.read(&q, m)).or_default();
            if slot.len() < KEEP_PER_VALUE {
                slot.push(cursor.exponents);
            }
        }
        Ok(FwscSearch {
            fp,
            m,
            convention,
            table,
            nodes,
        })
    }

    pub fn decide(&self, h: &BigInt, cfg: &DeciderConfig) -> Decision {
        let mut best: Option<(Vec<u32>, bool)> = None;
        for &negate in cfg.signs() {
            // coef(−q, ·) = −coef(q, ·)
            let target = if negate { -h } else { h.clone() };
            let hit = self
                .table
                .get(&target)
                .and_then(|vs| vs.iter().find(|v| cfg.admits(v, &self.fp.mults)));
            if let Some(v) = hit {
                if best.as_ref().is_none_or(|(b, _)| v < b) {
                    best = Some((v.clone(), negate));
                }
            }
        }
        let stats = Stats::new("exhaustive", self.nodes);
        match best {
            Some((v, negate)) => {
                let mut w = self.fp.witness(v, negate, false, None);
                w.certified_value = Some(self.convention.read(&w.q, self.m));
                factor_decision(w, stats)
            }
            None => Decision::no(stats),
        }
    }
}

/// Is there an admissible factor q with the chosen coefficient equal to h?
/// Coefficients are not multiplicative, so every divisor is enumerated.
pub fn factor_with_coefficients_decide(
    p: &Poly,
    m: i64,
    h: &BigInt,
    convention: CoefConvention,
    cfg: &DeciderConfig,
) -> Result<Decision> {
    check_k_input(p, cfg)?.factor_with_coefficients(m, h, convention, cfg)
}

/// Every unordered split p = q·r with q, r ∈ ℕ[x] both nonconstant, listed
/// with q on the lexicographically smaller exponent vector.
pub fn natural_factorizations(p: &Poly, cfg: &DeciderConfig) -> Result<Vec<(Poly, Poly)>> {
    let Some(fp) = natural_input(p, cfg)? else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    for (q, cursor) in fp.fact.divisors() {
        let comp = cursor.complement(&fp.mults);
        if comp < cursor {
            break;
        }
        if let Some(r) = natural_cofactor(&fp, &q, &cursor) {
            out.push((q, r));
        }
    }
    Ok(out)
}

fn natural_input(p: &Poly, cfg: &DeciderConfig) -> Result<Option<FactoredPoly>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    if !p.has_nonnegative_coeffs() {
        return Ok(None);
    }
    let fp = FactoredPoly::new(p, cfg.degree_cap)?;
    check_budget(fp.divisor_count(), cfg.node_budget)?;
    Ok(Some(fp))
}

fn natural_cofactor(fp: &FactoredPoly, q: &Poly, cursor: &DivisorCursor) -> Option<Poly> {
    if cursor.is_zero() || cursor.is_full(&fp.mults) || !q.has_nonnegative_coeffs() {
        return None;
    }
    let r = fp.product(&cursor.complement(&fp.mults).exponents);
    r.has_nonnegative_coeffs().then_some(r)
}

/// Does p split into two nonconstant factors with nonnegative coefficients?
/// The trivial-factor and sign settings do not apply.
pub fn natural_reducibility_decide(p: &Poly, cfg: &DeciderConfig) -> Result<Decision> {
    let Some(fp) = natural_input(p, cfg)? else {
        return Ok(Decision::no(Stats::new("exhaustive", 0)));
    };
    let mut nodes = 0u64;
    for (q, cursor) in fp.fact.divisors() {
        nodes += 1;
        if let Some(r) = natural_cofactor(&fp, &q, &cursor) {
            let w = FactorWitness {
                q,
                r: Some(r),
                cursor,
                certified_value: None,
            };
            return Ok(factor_decision(w, Stats::new("exhaustive", nodes)));
        }
    }
    Ok(Decision::no(Stats::new("exhaustive", nodes)))
}

/// Definitional oracle: every monic divisor of p materialized as a
/// polynomial, tested by a caller-supplied predicate with no pruning.
pub struct BruteForceOracle {
    mults: Vec<u32>,
    /// (q, p / q, exponent vector) in lexicographic order of the vector
    splits: Vec<(Poly, Poly, DivisorCursor)>,
}

impl BruteForceOracle {
    pub fn new(p: &Poly, cfg: &DeciderConfig) -> Result<Self> {
        let fp = FactoredPoly::new(p, cfg.degree_cap)?;
        check_budget(fp.divisor_count(), cfg.node_budget)?;
        let splits = fp
            .fact
            .divisors()
            .map(|(q, cursor)| {
                let r = p.exact_div(&q).expect("divisor of p");
                (q, r, cursor)
            })
            .collect();
        Ok(BruteForceOracle {
            mults: fp.mults,
            splits,
        })
    }

    /// First admissible (q, r) in canonical order with `predicate(q, r)`;
    /// under `allow_sign` each divisor is tried as q and then as −q.
    pub fn decide(&self, predicate: impl Fn(&Poly, &Poly) -> bool, pair_mode: bool, cfg: &DeciderConfig) -> Decision {
        let mut nodes = 0u64;
        for (q, r, cursor) in &self.splits {
            if !cfg.admits(&cursor.exponents, &self.mults) {
                continue;
            }
            for &negate in cfg.signs() {
                nodes += 1;
                let (q, r) = if negate { (-q, -r) } else { (q.clone(), r.clone()) };
                if predicate(&q, &r) {
                    let w = FactorWitness {
                        q,
                        r: pair_mode.then_some(r),
                        cursor: cursor.clone(),
                        certified_value: None,
                    };
                    return factor_decision(w, Stats::new("brute-force", nodes));
                }
            }
        }
        Decision::no(Stats::new("brute-force", nodes))
    }

    /// For every value of `key(q, r)`, the witness `decide` returns for the
    /// predicate `key(q, r) == value`. Lets one oracle answer many targets.
    pub fn index_by(
        &self,
        key: impl Fn(&Poly, &Poly) -> BigInt,
        pair_mode: bool,
        cfg: &DeciderConfig,
    ) -> HashMap<BigInt, FactorWitness> {
        let mut out = HashMap::new();
        for (q, r, cursor) in &self.splits {
            if !cfg.admits(&cursor.exponents, &self.mults) {
                continue;
            }
            for &negate in cfg.signs() {
                let (q, r) = if negate { (-q, -r) } else { (q.clone(), r.clone()) };
                out.entry(key(&q, &r)).or_insert_with(|| FactorWitness {
                    q,
                    r: pair_mode.then_some(r),
                    cursor: cursor.clone(),
                    certified_value: None,
                });
            }
        }
        out
    }
}

pub fn brute_force_factor_decide(
    p: &Poly,
    predicate: impl Fn(&Poly, &Poly) -> bool,
    pair_mode: bool,
    cfg: &DeciderConfig,
) -> Result<Decision> {
    Ok(BruteForceOracle::new(p, cfg)?.decide(predicate, pair_mode, cfg))
}

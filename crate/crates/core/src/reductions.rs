//! Instance constructors from the combinatorial problems to the factor
//! problems, witness translation between the two sides, and a certifier that
//! runs definitional oracles on both and checks that the answers match.
//!
//! All three constructions build p = ∏(x + b_i) from shifts b_i, so a subset
//! I corresponds to the monic factor ∏_{i∈I}(x + b_i) and back.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::combinat::{
    product_partition_decide, ssop_decide, ssop_value, subset_product_decide, subset_product_of, PartitionInstance,
    PartitionStrategy, ProductStrategy, SolverConfig, SsopInstance, SsopStrategy, SubsetTargetInstance,
};
use crate::deciders::{BruteForceOracle, CoefConvention, DeciderConfig, SignedFactors, TrivialFactors};
use crate::decision::{Answer, Decision, FactorWitness, SubsetWitness, Witness};
use crate::error::{Error, Result};
use crate::factorize::DivisorCursor;
use crate::poly::{expand_from_roots, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReductionKind {
    /// subset-product → k-factor, b_i = a_i − k, h = t.
    SubsetProductToKFactor,
    /// product-partition → k-equal-factor, b_i = a_i − k.
    PartitionToKEqual,
    /// ssop → factor-with-specific-coefficients, b_i = a_i, m = arity, h = t.
    SsopToCoefficients,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 3] = [
        ReductionKind::SubsetProductToKFactor,
        ReductionKind::PartitionToKEqual,
        ReductionKind::SsopToCoefficients,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReductionKind::SubsetProductToKFactor => "sp-kfactor",
            ReductionKind::PartitionToKEqual => "pp-kequal",
            ReductionKind::SsopToCoefficients => "ssop-fwsc",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown reduction kind {s:?}")))
    }

    pub fn source_problem(self) -> &'static str {
        match self {
            ReductionKind::SubsetProductToKFactor => "subset-product",
            ReductionKind::PartitionToKEqual => "product-partition",
            ReductionKind::SsopToCoefficients => "ssop",
        }
    }

    pub fn target_problem(self) -> &'static str {
        match self {
            ReductionKind::SubsetProductToKFactor => "k-factor",
            ReductionKind::PartitionToKEqual => "k-equal-factor",
            ReductionKind::SsopToCoefficients => "factor-with-specific-coefficients",
        }
    }

    /// Target-side settings under which the source and target answers are
    /// meant to coincide: the empty subset matches q = 1, and nonempty
    /// partition parts match nontrivial q and r.
    pub fn target_config(self) -> DeciderConfig {
        DeciderConfig {
            trivial_factors: match self {
                ReductionKind::PartitionToKEqual => TrivialFactors::Forbidden,
                _ => TrivialFactors::Allowed,
            },
            signed_factors: SignedFactors::MonicOnly,
            ..DeciderConfig::default()
        }
    }

    pub fn source_config(self) -> SolverConfig {
        SolverConfig::default()
    }
}

/// Coefficient index convention under which ssop and the coefficient problem
/// agree on every exhaustively checked instance; see the certifier tests.
pub const CERTIFIED_CONVENTION: CoefConvention = CoefConvention::Descending;

/// A reduced instance together with the shifts needed to map witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub kind: ReductionKind,
    /// The evaluation point k (zero for ssop, where it plays no role).
    pub k: BigInt,
    pub shifts: Vec<BigInt>,
    pub p: Poly,
    /// h for k-factor and the coefficient problem.
    pub h: Option<BigInt>,
    /// Coefficient index m (the ssop arity).
    pub m: Option<i64>,
}

fn plus_shifts(shifts: &[BigInt]) -> Poly {
    let roots: Vec<BigInt> = shifts.iter().map(|b| -b).collect();
    expand_from_roots(&roots)
}

impl Reduction {
    pub fn subset_product(inst: &SubsetTargetInstance, k: &BigInt) -> Self {
        let shifts: Vec<BigInt> = inst.a().iter().map(|a| a - k).collect();
        Reduction {
            kind: ReductionKind::SubsetProductToKFactor,
            k: k.clone(),
            p: plus_shifts(&shifts),
            shifts,
            h: Some(inst.t().clone()),
            m: None,
        }
    }

    pub fn product_partition(inst: &PartitionInstance, k: &BigInt) -> Self {
        let shifts: Vec<BigInt> = inst.a().iter().map(|a| a - k).collect();
        Reduction {
            kind: ReductionKind::PartitionToKEqual,
            k: k.clone(),
            p: plus_shifts(&shifts),
            shifts,
            h: None,
            m: None,
        }
    }

    pub fn ssop(inst: &SsopInstance) -> Self {
        let shifts = inst.a().to_vec();
        Reduction {
            kind: ReductionKind::SsopToCoefficients,
            k: BigInt::zero(),
            p: plus_shifts(&shifts),
            shifts,
            h: Some(inst.t().clone()),
            m: Some(inst.k() as i64),
        }
    }

    /// Negative control: shifts the first linear factor by one.
    pub fn corrupted(mut self) -> Self {
        self.shifts[0] += 1;
        self.p = plus_shifts(&self.shifts);
        self
    }

    /// The monic factor ∏_{i∈I}(x + b_i).
    pub fn factor_of(&self, indices: &[usize]) -> Poly {
        let chosen: Vec<BigInt> = indices.iter().map(|&i| self.shifts[i].clone()).collect();
        plus_shifts(&chosen)
    }

    /// The exponent vector of I over the distinct shifts in ascending order,
    /// which is the canonical factor order of p.
    pub fn cursor_of(&self, indices: &[usize]) -> DivisorCursor {
        let mut distinct = self.shifts.clone();
        distinct.sort();
        distinct.dedup();
        let mut exponents = vec![0u32; distinct.len()];
        for &i in indices {
            if let Ok(pos) = distinct.binary_search(&self.shifts[i]) {
                exponents[pos] += 1;
            }
        }
        DivisorCursor { exponents }
    }

    /// Maps q back to the lowest indices whose linear terms multiply to ±q.
    pub fn indices_of(&self, q: &Poly) -> Result<Vec<usize>> {
        let mut rest = if q.leading().is_some_and(|l| l.is_negative()) {
            -q
        } else {
            q.clone()
        };
        let mut out = Vec::new();
        for (i, b) in self.shifts.iter().enumerate() {
            if rest.degree().unwrap_or(0) == 0 {
                break;
            }
            let lin = Poly::linear(&-b);
            if let Ok(next) = rest.exact_div(&lin) {
                out.push(i);
                rest = next;
            }
        }
        if rest.is_one() {
            Ok(out)
        } else {
            Err(Error::UntranslatableWitness(format!(
                "{q} is not a product of the instance's linear terms"
            )))
        }
    }

    /// The cofactor indices for pair problems.
    fn complement(&self, indices: &[usize]) -> Vec<usize> {
        (0..self.shifts.len()).filter(|i| !indices.contains(i)).collect()
    }
}

pub fn reduce_sp_to_kfactor(inst: &SubsetTargetInstance, k: &BigInt) -> (Poly, BigInt) {
    let r = Reduction::subset_product(inst, k);
    (r.p, inst.t().clone())
}

pub fn reduce_pp_to_kequal(inst: &PartitionInstance, k: &BigInt) -> Poly {
    Reduction::product_partition(inst, k).p
}

pub fn reduce_ssop_to_fwsc(inst: &SsopInstance) -> (Poly, i64, BigInt) {
    let r = Reduction::ssop(inst);
    (r.p, inst.k() as i64, inst.t().clone())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Subset witness → factor witness.
    SourceToTarget,
    /// Factor witness → subset witness.
    TargetToSource,
}

pub fn translate_witness(red: &Reduction, w: &Witness, dir: Direction) -> Result<Witness> {
    let pair = red.kind == ReductionKind::PartitionToKEqual;
    match (dir, w) {
        (Direction::SourceToTarget, Witness::Subset(s)) => {
            let q = red.factor_of(&s.indices);
            let r = pair.then(|| red.factor_of(&red.complement(&s.indices)));
            Ok(Witness::Factor(FactorWitness {
                certified_value: None,
                cursor: red.cursor_of(&s.indices),
                q,
                r,
            }))
        }
        (Direction::TargetToSource, Witness::Factor(f)) => {
            let idx = red.indices_of(&f.q)?;
            Ok(Witness::Subset(if pair {
                SubsetWitness::partition(idx, red.shifts.len())
            } else {
                SubsetWitness::subset(idx)
            }))
        }
        _ => Err(Error::UntranslatableWitness(
            "witness type does not match the translation direction".into(),
        )),
    }
}

/// Replaces each chosen index by the lowest unused index carrying the same
/// value, which is what a round trip through a factor can recover.
pub fn canonical_indices(a: &[BigInt], indices: &[usize]) -> Vec<usize> {
    let mut taken = vec![false; a.len()];
    let mut out = Vec::with_capacity(indices.len());
    for &i in indices {
        if let Some(j) = (0..a.len()).find(|&j| !taken[j] && a[j] == a[i]) {
            taken[j] = true;
            out.push(j);
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SourceInstance {
    SubsetProduct(SubsetTargetInstance),
    Partition(PartitionInstance),
    Ssop(SsopInstance),
}

impl SourceInstance {
    pub fn kind(&self) -> ReductionKind {
        match self {
            SourceInstance::SubsetProduct(_) => ReductionKind::SubsetProductToKFactor,
            SourceInstance::Partition(_) => ReductionKind::PartitionToKEqual,
            SourceInstance::Ssop(_) => ReductionKind::SsopToCoefficients,
        }
    }

    pub fn a(&self) -> &[BigInt] {
        match self {
            SourceInstance::SubsetProduct(i) => i.a(),
            SourceInstance::Partition(i) => i.a(),
            SourceInstance::Ssop(i) => i.a(),
        }
    }

    pub fn t(&self) -> Option<&BigInt> {
        match self {
            SourceInstance::SubsetProduct(i) => Some(i.t()),
            SourceInstance::Partition(_) => None,
            SourceInstance::Ssop(i) => Some(i.t()),
        }
    }

    pub fn reduce(&self, k: &BigInt) -> Reduction {
        match self {
            SourceInstance::SubsetProduct(i) => Reduction::subset_product(i, k),
            SourceInstance::Partition(i) => Reduction::product_partition(i, k),
            SourceInstance::Ssop(i) => Reduction::ssop(i),
        }
    }

    /// Exhaustive source-side decision.
    pub fn decide(&self) -> Result<Decision> {
        let cfg = self.kind().source_config();
        match self {
            SourceInstance::SubsetProduct(i) => subset_product_decide(i, ProductStrategy::Exhaustive, &cfg),
            SourceInstance::Partition(i) => product_partition_decide(i, PartitionStrategy::Exhaustive, &cfg),
            SourceInstance::Ssop(i) => ssop_decide(i, SsopStrategy::Exhaustive, &cfg),
        }
    }

    /// Checks a subset witness against the source definition.
    pub fn verify(&self, w: &SubsetWitness) -> bool {
        let n = self.a().len();
        if w.indices.iter().any(|&i| i >= n) {
            return false;
        }
        match self {
            SourceInstance::SubsetProduct(i) => subset_product_of(i.a(), &w.indices) == *i.t(),
            SourceInstance::Partition(i) => {
                let j: Vec<usize> = (0..n).filter(|x| !w.indices.contains(x)).collect();
                !w.indices.is_empty()
                    && !j.is_empty()
                    && subset_product_of(i.a(), &w.indices) == subset_product_of(i.a(), &j)
            }
            SourceInstance::Ssop(i) => ssop_value(i.a(), &w.indices, i.k()) == *i.t(),
        }
    }

    fn describe(&self) -> String {
        let a: Vec<String> = self.a().iter().map(ToString::to_string).collect();
        match self {
            SourceInstance::SubsetProduct(i) => format!("a={};t={}", a.join(","), i.t()),
            SourceInstance::Partition(_) => format!("a={}", a.join(",")),
            SourceInstance::Ssop(i) => format!("a={};t={};k={}", a.join(","), i.t(), i.k()),
        }
    }
}

/// The target-side quantity compared against h (or q(k) against r(k)).
fn target_key(red: &Reduction, convention: CoefConvention, q: &Poly, r: &Poly) -> BigInt {
    match red.kind {
        ReductionKind::SubsetProductToKFactor => q.eval(&red.k),
        // q(k) = r(k) collapses to a zero difference
        ReductionKind::PartitionToKEqual => q.eval(&red.k) - r.eval(&red.k),
        ReductionKind::SsopToCoefficients => convention.read(q, red.m.unwrap_or(0)),
    }
}

fn target_goal(red: &Reduction) -> BigInt {
    red.h.clone().unwrap_or_default()
}

/// Checks a factor witness against the target definition, from q alone.
pub fn verify_target(red: &Reduction, convention: CoefConvention, w: &FactorWitness) -> bool {
    let Ok(r) = red.p.exact_div(&w.q) else {
        return false;
    };
    if let Some(given) = &w.r {
        if &(&w.q * given) != &red.p {
            return false;
        }
    }
    if red.kind == ReductionKind::PartitionToKEqual && (w.q.degree() == Some(0) || r.degree() == Some(0)) {
        return false;
    }
    target_key(red, convention, &w.q, &r) == target_goal(red)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionReport {
    pub id: String,
    pub kind: ReductionKind,
    pub k: BigInt,
    pub a: Vec<BigInt>,
    /// t for subset-product and ssop.
    pub t: Option<BigInt>,
    /// The reduced polynomial.
    pub poly: Poly,
    pub m: Option<i64>,
    pub convention: CoefConvention,
    pub source_answer: Answer,
    pub target_answer: Answer,
    /// 0-based source indices.
    pub source_witness: Option<Vec<usize>>,
    pub target_witness: Option<Poly>,
    /// Cross-translated witnesses re-verified and round trips returned home.
    pub witnesses_verified: bool,
    /// max |coeff p| within (max a + |k| + 1)^n.
    pub coefficient_bound_ok: bool,
    pub agreement: bool,
    pub source_micros: u128,
    pub target_micros: u128,
}

impl ReductionReport {
    pub fn passed(&self) -> bool {
        self.agreement && self.witnesses_verified && self.coefficient_bound_ok
    }

    pub fn to_json(&self) -> Value {
        json!({
            "id": self.id,
            "kind": self.kind.as_str(),
            "k": self.k.to_string(),
            "a": self.a.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "t": self.t.as_ref().map(ToString::to_string),
            "poly": self.poly,
            "m": self.m,
            "convention": self.convention.as_str(),
            "source_answer": self.source_answer.as_str(),
            "target_answer": self.target_answer.as_str(),
            "source_witness": self.source_witness.as_ref().map(|v| v.iter().map(|i| i + 1).collect::<Vec<_>>()),
            "target_witness": self.target_witness,
            "witnesses_verified": self.witnesses_verified,
            "coefficient_bound_ok": self.coefficient_bound_ok,
            "agreement": self.agreement,
            "timings_us": { "source": self.source_micros, "target": self.target_micros },
        })
    }
}

/// max |coefficient| of ∏(x + b_i) is at most ∏(1 + |b_i|).
pub fn coefficient_bound(a: &[BigInt], k: &BigInt) -> BigInt {
    let top = a.iter().map(|x| x.abs()).max().unwrap_or_default();
    num_traits::pow(top + k.abs() + 1, a.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertifyOptions {
    pub convention: CoefConvention,
    /// Build the target from a deliberately wrong constructor.
    pub inject_fault: bool,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            convention: CERTIFIED_CONVENTION,
            inject_fault: false,
        }
    }
}

/// Target-side oracle answers for one reduced polynomial, keyed by the
/// compared quantity so that every h is a lookup.
struct TargetTable {
    index: HashMap<BigInt, FactorWitness>,
    micros: u128,
}

impl TargetTable {
    fn new(red: &Reduction, convention: CoefConvention) -> Result<Self> {
        let start = Instant::now();
        let cfg = red.kind.target_config();
        let oracle = BruteForceOracle::new(&red.p, &cfg)?;
        let pair = red.kind == ReductionKind::PartitionToKEqual;
        let index = oracle.index_by(|q, r| target_key(red, convention, q, r), pair, &cfg);
        Ok(TargetTable {
            index,
            micros: start.elapsed().as_micros(),
        })
    }
}

fn cross_check(
    src: &SourceInstance,
    red: &Reduction,
    convention: CoefConvention,
    source: Option<&SubsetWitness>,
    target: Option<&FactorWitness>,
) -> bool {
    let mut ok = true;
    if let Some(s) = source {
        ok &= src.verify(s);
        match translate_witness(red, &Witness::Subset(s.clone()), Direction::SourceToTarget) {
            Ok(Witness::Factor(f)) => {
                ok &= verify_target(red, convention, &f);
                let back = translate_witness(red, &Witness::Factor(f), Direction::TargetToSource);
                ok &= matches!(back, Ok(Witness::Subset(b)) if b.indices == canonical_indices(src.a(), &s.indices));
            }
            _ => ok = false,
        }
    }
    if let Some(f) = target {
        ok &= verify_target(red, convention, f);
        match translate_witness(red, &Witness::Factor(f.clone()), Direction::TargetToSource) {
            Ok(Witness::Subset(s)) => {
                ok &= src.verify(&s);
                let back = translate_witness(red, &Witness::Subset(s), Direction::SourceToTarget);
                ok &= matches!(back, Ok(Witness::Factor(g)) if g.q == f.q);
            }
            _ => ok = false,
        }
    }
    ok
}

struct SourceRun {
    src: SourceInstance,
    decision: Decision,
    micros: u128,
}

impl SourceRun {
    fn new(src: SourceInstance) -> Result<Self> {
        let start = Instant::now();
        let decision = src.decide()?;
        Ok(SourceRun {
            src,
            decision,
            micros: start.elapsed().as_micros(),
        })
    }
}

/// `red` must be the reduction of `run.src` (h included); `table` may have
/// been built for any reduction sharing its polynomial.
fn build_report(run: &SourceRun, red: &Reduction, table: &TargetTable, opts: CertifyOptions) -> ReductionReport {
    let start = Instant::now();
    let src = &run.src;
    let target = table.index.get(&target_goal(red));
    let target_micros = table.micros + start.elapsed().as_micros();
    let source_answer = run.decision.answer;
    let target_answer = Answer::from_bool(target.is_some());
    let sw = run.decision.subset_witness();
    let witnesses_verified = cross_check(src, red, opts.convention, sw, target);
    let coefficient_bound_ok = red.p.max_abs_coeff() <= coefficient_bound(src.a(), &red.k);
    ReductionReport {
        id: format!("{}/k={}/{}", red.kind.as_str(), red.k, src.describe()),
        kind: red.kind,
        k: red.k.clone(),
        a: src.a().to_vec(),
        t: src.t().cloned(),
        poly: red.p.clone(),
        m: red.m,
        convention: opts.convention,
        source_answer,
        target_answer,
        source_witness: sw.map(|w| w.indices.clone()),
        target_witness: target.map(|w| w.q.clone()),
        witnesses_verified,
        coefficient_bound_ok,
        agreement: source_answer == target_answer,
        source_micros: run.micros,
        target_micros,
    }
}

fn reduce_with(src: &SourceInstance, k: &BigInt, opts: CertifyOptions) -> Reduction {
    let red = src.reduce(k);
    if opts.inject_fault {
        red.corrupted()
    } else {
        red
    }
}

/// Decides the source instance and its reduction with independent oracles
/// and compares the answers and witnesses.
pub fn certify_reduction(src: &SourceInstance, k: &BigInt, opts: CertifyOptions) -> Result<ReductionReport> {
    let run = SourceRun::new(src.clone())?;
    let red = reduce_with(src, k, opts);
    let table = TargetTable::new(&red, opts.convention)?;
    Ok(build_report(&run, &red, &table, opts))
}

/// Ranges for exhaustive and random certification sweeps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepBounds {
    pub max_n: usize,
    pub max_a: u64,
    /// Largest t for subset-product; ssop sweeps every achievable value ±2.
    pub max_t: u64,
    /// Shifts k for the first two kinds, arities for ssop.
    pub params: Vec<i64>,
}

impl SweepBounds {
    pub fn default_for(kind: ReductionKind) -> Self {
        match kind {
            ReductionKind::SsopToCoefficients => SweepBounds {
                max_n: 6,
                max_a: 6,
                max_t: 0,
                params: vec![1, 2, 3],
            },
            _ => SweepBounds {
                max_n: 6,
                max_a: 8,
                max_t: 64,
                params: vec![-2, -1, 0, 1, 2],
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub instances: u64,
    pub yes: u64,
    pub disagreements: u64,
    pub witness_failures: u64,
    pub bound_failures: u64,
}

impl SweepSummary {
    pub fn passed(&self) -> bool {
        self.disagreements == 0 && self.witness_failures == 0 && self.bound_failures == 0
    }

    fn record(&mut self, r: &ReductionReport) {
        self.instances += 1;
        self.yes += u64::from(r.source_answer.is_yes());
        self.disagreements += u64::from(!r.agreement);
        self.witness_failures += u64::from(!r.witnesses_verified);
        self.bound_failures += u64::from(!r.coefficient_bound_ok);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "instances": self.instances,
            "yes": self.yes,
            "disagreements": self.disagreements,
            "witness_failures": self.witness_failures,
            "bound_failures": self.bound_failures,
            "passed": self.passed(),
        })
    }
}

/// Every non-decreasing sequence over 1..=max_a with length in min_n..=max_n.
/// Answers depend only on the multiset, so tuples add nothing.
pub fn multisets(min_n: usize, max_n: usize, max_a: u64) -> Vec<Vec<u64>> {
    fn go(cur: &mut Vec<u64>, lo: u64, max_a: u64, min_n: usize, max_n: usize, out: &mut Vec<Vec<u64>>) {
        if cur.len() >= min_n {
            out.push(cur.clone());
        }
        if cur.len() == max_n {
            return;
        }
        for v in lo..=max_a {
            cur.push(v);
            go(cur, v, max_a, min_n, max_n, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 1, max_a, min_n.max(1), max_n, &mut out);
    out
}

fn big_list(a: &[u64]) -> Vec<BigInt> {
    a.iter().map(|&x| BigInt::from(x)).collect()
}

/// Every achievable e_k over subsets of `a`, widened by ±2 and kept ≥ 1.
fn ssop_targets(a: &[u64], k: usize) -> Vec<u64> {
    let big = big_list(a);
    let n = a.len();
    let mut vals: Vec<u64> = Vec::new();
    for mask in 0u64..1 << n {
        let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        let v = ssop_value(&big, &idx, k).to_i64().unwrap_or(i64::MAX);
        for d in -2..=2 {
            if let Ok(t) = u64::try_from(v + d) {
                if t >= 1 {
                    vals.push(t);
                }
            }
        }
    }
    vals.sort_unstable();
    vals.dedup();
    vals
}

/// Certifies every instance within `bounds`, calling `sink` on each report.
/// Source decisions are shared across k, target oracles across t.
pub fn exhaustive_sweep(
    kind: ReductionKind,
    bounds: &SweepBounds,
    opts: CertifyOptions,
    mut sink: impl FnMut(&ReductionReport),
) -> Result<SweepSummary> {
    let mut summary = SweepSummary::default();
    let mut emit = |r: ReductionReport| {
        summary.record(&r);
        sink(&r);
    };
    let min_n = if kind == ReductionKind::PartitionToKEqual { 2 } else { 1 };
    for a in multisets(min_n, bounds.max_n, bounds.max_a) {
        let big = big_list(&a);
        match kind {
            ReductionKind::SubsetProductToKFactor => {
                let runs = (1..=bounds.max_t)
                    .map(|t| SourceRun::new(SourceInstance::SubsetProduct(SubsetTargetInstance::new(big.clone(), t.into())?)))
                    .collect::<Result<Vec<_>>>()?;
                for &k in &bounds.params {
                    let k = BigInt::from(k);
                    let base = reduce_with(&runs[0].src, &k, opts);
                    let table = TargetTable::new(&base, opts.convention)?;
                    for (t, run) in (1..=bounds.max_t).zip(&runs) {
                        let red = Reduction { h: Some(t.into()), ..base.clone() };
                        emit(build_report(run, &red, &table, opts));
                    }
                }
            }
            ReductionKind::PartitionToKEqual => {
                let run = SourceRun::new(SourceInstance::Partition(PartitionInstance::new(big)?))?;
                for &k in &bounds.params {
                    let red = reduce_with(&run.src, &BigInt::from(k), opts);
                    let table = TargetTable::new(&red, opts.convention)?;
                    emit(build_report(&run, &red, &table, opts));
                }
            }
            ReductionKind::SsopToCoefficients => {
                for &arity in &bounds.params {
                    let Some(arity) = usize::try_from(arity).ok().filter(|&r| r >= 1 && r <= a.len()) else {
                        continue;
                    };
                    let mut shared: Option<(Reduction, TargetTable)> = None;
                    for t in ssop_targets(&a, arity) {
                        let run = SourceRun::new(SourceInstance::Ssop(SsopInstance::new(big.clone(), t.into(), arity)?))?;
                        let (base, table) = match &mut shared {
                            Some(x) => x,
                            None => {
                                let base = reduce_with(&run.src, &BigInt::zero(), opts);
                                let table = TargetTable::new(&base, opts.convention)?;
                                shared.insert((base, table))
                            }
                        };
                        let red = Reduction { h: Some(t.into()), ..base.clone() };
                        emit(build_report(&run, &red, table, opts));
                    }
                }
            }
        }
    }
    Ok(summary)
}

/// Certifies `count` random instances drawn from `bounds` with a fixed seed.
/// Items are drawn as ordered tuples, so repeated values exercise the
/// witness canonicalization.
pub fn random_sweep(
    kind: ReductionKind,
    bounds: &SweepBounds,
    seed: u64,
    count: u64,
    opts: CertifyOptions,
    mut sink: impl FnMut(&ReductionReport),
) -> Result<SweepSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = SweepSummary::default();
    let min_n = if kind == ReductionKind::PartitionToKEqual { 2 } else { 1 };
    if bounds.params.is_empty() || bounds.max_n < min_n || bounds.max_a == 0 {
        return Err(Error::InvalidInstance("empty sweep bounds".into()));
    }
    for _ in 0..count {
        let n = rng.gen_range(min_n..=bounds.max_n);
        let a: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(1..=bounds.max_a))).collect();
        let param = bounds.params[rng.gen_range(0..bounds.params.len())];
        let (src, k) = match kind {
            ReductionKind::SubsetProductToKFactor => {
                let t = rng.gen_range(1..=bounds.max_t.max(1));
                (SourceInstance::SubsetProduct(SubsetTargetInstance::new(a, t.into())?), BigInt::from(param))
            }
            ReductionKind::PartitionToKEqual => (SourceInstance::Partition(PartitionInstance::new(a)?), BigInt::from(param)),
            ReductionKind::SsopToCoefficients => {
                let arity = usize::try_from(param).unwrap_or(1).clamp(1, n);
                // pick an achievable value half the time so yes-instances show up
                let t = if rng.gen_bool(0.5) {
                    let mask: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.5)).collect();
                    ssop_value(&a, &mask, arity).max(BigInt::one())
                } else {
                    let top = bounds.max_t.max(1);
                    BigInt::from(rng.gen_range(1..=top))
                };
                (SourceInstance::Ssop(SsopInstance::new(a, t, arity)?), BigInt::zero())
            }
        };
        let r = certify_reduction(&src, &k, opts)?;
        summary.record(&r);
        sink(&r);
    }
    Ok(summary)
}

//! JSON instance files, dispatch to the solvers, verdict documents, and a
//! checker that re-verifies a verdict from its instance alone.
//!
//! Every integer travels as a decimal string. Witness indices are 1-based.

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use crate::combinat::{
    product_partition_decide, ssop_decide, subset_product_decide, subset_sum_decide, PartitionInstance,
    PartitionStrategy, ProductStrategy, SolverConfig, SsopInstance, SsopStrategy, SubsetTargetInstance, SumStrategy,
};
use crate::deciders::{
    constant_term_decide, equal_constant_term_decide, equal_sum_of_coefficients_decide, factor_with_coefficients_decide,
    k_equal_factor_decide, k_factor_decide, natural_reducibility_decide, sum_of_coefficients_decide, CoefConvention,
    DeciderConfig, DeciderStrategy, SignedFactors, TrivialFactors,
};
use crate::decision::{Decision, Witness};
use crate::error::{Error, Result};
use crate::factorize::{factorize_with_cap, Unit};
use crate::poly::{elementary_symmetric, parse_bigint, Poly};
use crate::reductions::{Reduction, CERTIFIED_CONVENTION};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    SubsetSum,
    SubsetProduct,
    ProductPartition,
    Ssop,
    KFactor,
    SumOfCoefficients,
    ConstantTerm,
    KEqualFactor,
    EqualConstantTerm,
    EqualSumOfCoefficients,
    FactorWithSpecificCoefficients,
    NaturalReducibility,
}

impl Problem {
    pub const ALL: [Problem; 12] = [
        Problem::SubsetSum,
        Problem::SubsetProduct,
        Problem::ProductPartition,
        Problem::Ssop,
        Problem::KFactor,
        Problem::SumOfCoefficients,
        Problem::ConstantTerm,
        Problem::KEqualFactor,
        Problem::EqualConstantTerm,
        Problem::EqualSumOfCoefficients,
        Problem::FactorWithSpecificCoefficients,
        Problem::NaturalReducibility,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Problem::SubsetSum => "subset-sum",
            Problem::SubsetProduct => "subset-product",
            Problem::ProductPartition => "product-partition",
            Problem::Ssop => "ssop",
            Problem::KFactor => "k-factor",
            Problem::SumOfCoefficients => "sum-of-coefficients",
            Problem::ConstantTerm => "constant-term",
            Problem::KEqualFactor => "k-equal-factor",
            Problem::EqualConstantTerm => "equal-constant-term",
            Problem::EqualSumOfCoefficients => "equal-sum-of-coefficients",
            Problem::FactorWithSpecificCoefficients => "factor-with-specific-coefficients",
            Problem::NaturalReducibility => "natural-reducibility",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::InvalidInstance(format!("unknown problem {s:?}")))
    }

    /// Parameter fields the problem reads, all required.
    fn fields(self) -> &'static [&'static str] {
        match self {
            Problem::SubsetSum | Problem::SubsetProduct => &["a", "t"],
            Problem::ProductPartition => &["a"],
            Problem::Ssop => &["a", "t", "k"],
            Problem::KFactor => &["poly", "k", "h"],
            Problem::SumOfCoefficients => &["poly", "s"],
            Problem::ConstantTerm => &["poly", "t"],
            Problem::KEqualFactor => &["poly", "k"],
            Problem::EqualConstantTerm | Problem::EqualSumOfCoefficients | Problem::NaturalReducibility => &["poly"],
            Problem::FactorWithSpecificCoefficients => &["poly", "m", "h"],
        }
    }

    pub fn is_polynomial(self) -> bool {
        self.fields().contains(&"poly")
    }

    fn is_pair(self) -> bool {
        matches!(
            self,
            Problem::KEqualFactor
                | Problem::EqualConstantTerm
                | Problem::EqualSumOfCoefficients
                | Problem::NaturalReducibility
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigOverrides {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial_factors: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signed_factors: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strategy: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_cap: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forbid_empty_subset: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coef_convention: Option<String>,
}

impl ConfigOverrides {
    fn is_empty(&self) -> bool {
        *self == ConfigOverrides::default()
    }

    /// Fields set in `other` win.
    pub fn merged(&self, other: &ConfigOverrides) -> ConfigOverrides {
        ConfigOverrides {
            trivial_factors: other.trivial_factors.clone().or_else(|| self.trivial_factors.clone()),
            signed_factors: other.signed_factors.clone().or_else(|| self.signed_factors.clone()),
            strategy: other.strategy.clone().or_else(|| self.strategy.clone()),
            degree_cap: other.degree_cap.clone().or_else(|| self.degree_cap.clone()),
            forbid_empty_subset: other.forbid_empty_subset.or(self.forbid_empty_subset),
            coef_convention: other.coef_convention.clone().or_else(|| self.coef_convention.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub problem: Problem,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Poly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<String>,
    #[serde(default, skip_serializing_if = "ConfigOverrides::is_empty")]
    pub config: ConfigOverrides,
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::InvalidInstance(e.to_string())
}

impl InstanceFile {
    pub fn new(problem: Problem) -> Self {
        InstanceFile {
            problem,
            poly: None,
            a: None,
            k: None,
            h: None,
            t: None,
            s: None,
            m: None,
            config: ConfigOverrides::default(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let inst: InstanceFile = serde_json::from_str(text).map_err(parse_err)?;
        inst.validate_fields()?;
        Ok(inst)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("instance serializes")
    }

    fn present(&self) -> [(&'static str, bool); 7] {
        [
            ("poly", self.poly.is_some()),
            ("a", self.a.is_some()),
            ("k", self.k.is_some()),
            ("h", self.h.is_some()),
            ("t", self.t.is_some()),
            ("s", self.s.is_some()),
            ("m", self.m.is_some()),
        ]
    }

    /// Every field the problem reads is present and no other is.
    pub fn validate_fields(&self) -> Result<()> {
        let wanted = self.problem.fields();
        for (name, here) in self.present() {
            let needed = wanted.contains(&name);
            if needed && !here {
                return Err(Error::InvalidInstance(format!(
                    "{} needs field {name:?}",
                    self.problem.as_str()
                )));
            }
            if here && !needed {
                return Err(Error::InvalidInstance(format!(
                    "field {name:?} is not used by {}",
                    self.problem.as_str()
                )));
            }
        }
        Ok(())
    }

    fn int(&self, name: &str, v: &Option<String>) -> Result<BigInt> {
        let s = v
            .as_deref()
            .ok_or_else(|| Error::InvalidInstance(format!("missing field {name:?}")))?;
        parse_bigint(s)
    }

    fn small(&self, name: &str, v: &Option<String>) -> Result<i64> {
        let x = self.int(name, v)?;
        x.to_i64()
            .ok_or_else(|| Error::InvalidInstance(format!("{name} = {x} is out of range")))
    }

    pub fn items(&self) -> Result<Vec<BigInt>> {
        self.a
            .as_ref()
            .ok_or_else(|| Error::InvalidInstance("missing field \"a\"".into()))?
            .iter()
            .map(|s| parse_bigint(s))
            .collect()
    }

    pub fn polynomial(&self) -> Result<&Poly> {
        self.poly
            .as_ref()
            .ok_or_else(|| Error::InvalidInstance("missing field \"poly\"".into()))
    }

    pub fn subset_target(&self) -> Result<SubsetTargetInstance> {
        SubsetTargetInstance::new(self.items()?, self.int("t", &self.t)?)
    }

    pub fn partition(&self) -> Result<PartitionInstance> {
        PartitionInstance::new(self.items()?)
    }

    pub fn ssop(&self) -> Result<SsopInstance> {
        let k = self.small("k", &self.k)?;
        let k = usize::try_from(k).map_err(|_| Error::InvalidInstance(format!("arity k = {k} is negative")))?;
        SsopInstance::new(self.items()?, self.int("t", &self.t)?, k)
    }

    pub fn resolve(&self, extra: &ConfigOverrides) -> Result<ResolvedConfig> {
        ResolvedConfig::new(self.problem, &self.config.merged(extra))
    }
}

/// Effective settings for one run, with every override applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolvedConfig {
    pub decider: DeciderConfig,
    pub solver: SolverConfig,
    pub strategy: String,
    pub coef_convention: CoefConvention,
}

fn default_strategy(problem: Problem) -> &'static str {
    match problem {
        Problem::SubsetSum => "dp",
        Problem::SubsetProduct | Problem::ProductPartition => "mitm",
        Problem::Ssop => "dfs",
        Problem::FactorWithSpecificCoefficients | Problem::NaturalReducibility => "exhaustive",
        _ => "mitm",
    }
}

fn strategies(problem: Problem) -> &'static [&'static str] {
    match problem {
        Problem::SubsetSum => &["dp", "exhaustive"],
        Problem::SubsetProduct => &["dfs", "mitm", "exhaustive"],
        Problem::ProductPartition => &["mitm", "exhaustive"],
        Problem::Ssop => &["dfs", "dfs-unpruned", "exhaustive"],
        // enumeration is the only method; "mitm" is accepted and ignored
        Problem::FactorWithSpecificCoefficients | Problem::NaturalReducibility => &["exhaustive", "mitm"],
        _ => &["exhaustive", "mitm"],
    }
}

impl ResolvedConfig {
    pub fn new(problem: Problem, o: &ConfigOverrides) -> Result<Self> {
        let mut decider = DeciderConfig::default();
        let mut solver = SolverConfig::default();
        if let Some(v) = &o.trivial_factors {
            decider.trivial_factors = v.parse::<TrivialFactors>()?;
        }
        if let Some(v) = &o.signed_factors {
            decider.signed_factors = v.parse::<SignedFactors>()?;
        }
        if let Some(v) = &o.degree_cap {
            decider.degree_cap = parse_bigint(v)?
                .to_usize()
                .filter(|&c| c > 0)
                .ok_or_else(|| Error::InvalidInstance(format!("degree_cap {v:?} must be a positive integer")))?;
        }
        if let Some(v) = o.forbid_empty_subset {
            solver.forbid_empty_subset = v;
        }
        let coef_convention = match &o.coef_convention {
            Some(v) => v.parse::<CoefConvention>()?,
            None => CoefConvention::default(),
        };
        let strategy = o.strategy.clone().unwrap_or_else(|| default_strategy(problem).to_string());
        if !strategies(problem).contains(&strategy.as_str()) {
            return Err(Error::InvalidInstance(format!(
                "strategy {strategy:?} is not available for {}; choose one of {:?}",
                problem.as_str(),
                strategies(problem)
            )));
        }
        if problem.is_polynomial() {
            decider.strategy = if strategy == "exhaustive" {
                DeciderStrategy::Exhaustive
            } else {
                DeciderStrategy::Mitm
            };
        }
        Ok(ResolvedConfig {
            decider,
            solver,
            strategy,
            coef_convention,
        })
    }

    /// Caps both search budgets at `budget` nodes.
    pub fn with_budget(mut self, budget: u128) -> Self {
        self.decider.node_budget = budget;
        self.solver.node_budget = budget;
        self
    }

    /// The settings that shape the answer for `problem`, as echoed in verdicts.
    pub fn echo(&self, problem: Problem) -> Value {
        let mut m = Map::new();
        m.insert("strategy".into(), json!(self.strategy));
        if problem.is_polynomial() {
            if problem != Problem::NaturalReducibility {
                m.insert("trivial_factors".into(), json!(self.decider.trivial_factors.as_str()));
                m.insert("signed_factors".into(), json!(self.decider.signed_factors.as_str()));
            }
            m.insert("degree_cap".into(), json!(self.decider.degree_cap.to_string()));
            m.insert("node_budget".into(), json!(self.decider.node_budget.to_string()));
        } else {
            m.insert("forbid_empty_subset".into(), json!(self.solver.forbid_empty_subset));
            m.insert("node_budget".into(), json!(self.solver.node_budget.to_string()));
        }
        if problem == Problem::FactorWithSpecificCoefficients {
            m.insert("coef_convention".into(), json!(self.coef_convention.as_str()));
        }
        Value::Object(m)
    }
}

fn sum_strategy(s: &str) -> SumStrategy {
    if s == "exhaustive" {
        SumStrategy::Exhaustive
    } else {
        SumStrategy::Dp
    }
}

fn product_strategy(s: &str) -> ProductStrategy {
    match s {
        "dfs" => ProductStrategy::Dfs,
        "exhaustive" => ProductStrategy::Exhaustive,
        _ => ProductStrategy::Mitm,
    }
}

fn partition_strategy(s: &str) -> PartitionStrategy {
    if s == "exhaustive" {
        PartitionStrategy::Exhaustive
    } else {
        PartitionStrategy::Mitm
    }
}

fn ssop_strategy(s: &str) -> SsopStrategy {
    match s {
        "dfs-unpruned" => SsopStrategy::DfsUnpruned,
        "exhaustive" => SsopStrategy::Exhaustive,
        _ => SsopStrategy::Dfs,
    }
}

/// Runs the solver or decider named by the instance.
pub fn decide(inst: &InstanceFile, cfg: &ResolvedConfig) -> Result<Decision> {
    inst.validate_fields()?;
    let d = &cfg.decider;
    let st = cfg.strategy.as_str();
    match inst.problem {
        Problem::SubsetSum => subset_sum_decide(&inst.subset_target()?, sum_strategy(st), &cfg.solver),
        Problem::SubsetProduct => subset_product_decide(&inst.subset_target()?, product_strategy(st), &cfg.solver),
        Problem::ProductPartition => product_partition_decide(&inst.partition()?, partition_strategy(st), &cfg.solver),
        Problem::Ssop => ssop_decide(&inst.ssop()?, ssop_strategy(st), &cfg.solver),
        Problem::KFactor => k_factor_decide(inst.polynomial()?, &inst.int("k", &inst.k)?, &inst.int("h", &inst.h)?, d),
        Problem::SumOfCoefficients => sum_of_coefficients_decide(inst.polynomial()?, &inst.int("s", &inst.s)?, d),
        Problem::ConstantTerm => constant_term_decide(inst.polynomial()?, &inst.int("t", &inst.t)?, d),
        Problem::KEqualFactor => k_equal_factor_decide(inst.polynomial()?, &inst.int("k", &inst.k)?, d),
        Problem::EqualConstantTerm => equal_constant_term_decide(inst.polynomial()?, d),
        Problem::EqualSumOfCoefficients => equal_sum_of_coefficients_decide(inst.polynomial()?, d),
        Problem::FactorWithSpecificCoefficients => factor_with_coefficients_decide(
            inst.polynomial()?,
            inst.small("m", &inst.m)?,
            &inst.int("h", &inst.h)?,
            cfg.coef_convention,
            d,
        ),
        Problem::NaturalReducibility => natural_reducibility_decide(inst.polynomial()?, d),
    }
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

pub fn witness_json(w: &Witness) -> Value {
    match w {
        Witness::Subset(s) => {
            let mut m = Map::new();
            m.insert("indices".into(), json!(one_based(&s.indices)));
            if let Some(c) = &s.complement {
                m.insert("complement".into(), json!(one_based(c)));
            }
            Value::Object(m)
        }
        Witness::Factor(f) => {
            let mut m = Map::new();
            m.insert("q".into(), json!(f.q));
            if let Some(r) = &f.r {
                m.insert("r".into(), json!(r));
            }
            m.insert("exponents".into(), json!(f.cursor.exponents));
            if let Some(v) = &f.certified_value {
                m.insert("value".into(), json!(v.to_string()));
            }
            Value::Object(m)
        }
    }
}

/// Decides `inst` and wraps the result as a verdict document.
pub fn run_verdict(inst: &InstanceFile, cfg: &ResolvedConfig) -> Result<Value> {
    let start = Instant::now();
    let d = decide(inst, cfg)?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    Ok(json!({
        "problem": inst.problem.as_str(),
        "answer": d.answer.as_str(),
        "witness": d.witness.as_ref().map(witness_json),
        "stats": {
            "strategy": d.stats.strategy,
            "nodes": d.stats.nodes,
            "elapsed_ms": elapsed,
        },
        "version": VERSION,
        "config": cfg.echo(inst.problem),
    }))
}

fn fail(msg: impl Into<String>) -> Error {
    Error::InvalidInstance(msg.into())
}

fn index_list(v: &Value, n: usize, name: &str) -> Result<Vec<usize>> {
    let arr = v.as_array().ok_or_else(|| fail(format!("witness {name} is not a list")))?;
    let mut out = Vec::with_capacity(arr.len());
    for x in arr {
        let i = x
            .as_u64()
            .and_then(|i| usize::try_from(i).ok())
            .filter(|&i| (1..=n).contains(&i))
            .ok_or_else(|| fail(format!("witness {name} has an index outside 1..={n}")))?;
        out.push(i - 1);
    }
    let mut sorted = out.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != out.len() {
        return Err(fail(format!("witness {name} repeats an index")));
    }
    Ok(sorted)
}

fn poly_field(w: &Value, name: &str) -> Result<Option<Poly>> {
    match w.get(name) {
        None | Some(Value::Null) => Ok(None),
        Some(v) => serde_json::from_value(v.clone()).map(Some).map_err(parse_err),
    }
}

fn echoed<T: std::str::FromStr<Err = Error>>(verdict: &Value, name: &str) -> Result<Option<T>> {
    match verdict.get("config").and_then(|c| c.get(name)).and_then(Value::as_str) {
        Some(s) => s.parse().map(Some),
        None => Ok(None),
    }
}

/// Re-verifies a verdict against its instance using only the definitions and
/// the echoed config. A "no" must carry no witness; a "yes" must carry one
/// that satisfies the problem.
pub fn check_verdict(inst: &InstanceFile, verdict: &Value) -> Result<()> {
    inst.validate_fields()?;
    if verdict.get("problem").and_then(Value::as_str) != Some(inst.problem.as_str()) {
        return Err(fail("verdict is for a different problem"));
    }
    let w = verdict.get("witness").filter(|w| !w.is_null());
    match (verdict.get("answer").and_then(Value::as_str), w) {
        (Some("no"), None) => return Ok(()),
        (Some("no"), Some(_)) => return Err(fail("a no verdict carries a witness")),
        (Some("yes"), Some(_)) => {}
        (Some("yes"), None) => return Err(fail("a yes verdict has no witness")),
        _ => return Err(fail("answer must be \"yes\" or \"no\"")),
    }
    let w = w.expect("checked above");
    if inst.problem.is_polynomial() {
        check_factor(inst, verdict, w)
    } else {
        check_subset(inst, verdict, w)
    }
}

fn check_subset(inst: &InstanceFile, verdict: &Value, w: &Value) -> Result<()> {
    let a = inst.items()?;
    let n = a.len();
    let idx = index_list(w.get("indices").unwrap_or(&Value::Null), n, "indices")?;
    let forbid_empty = verdict
        .get("config")
        .and_then(|c| c.get("forbid_empty_subset"))
        .and_then(Value::as_bool)
        .unwrap_or(false);
    if forbid_empty && idx.is_empty() {
        return Err(fail("empty subset is forbidden by the config"));
    }
    let chosen: Vec<BigInt> = idx.iter().map(|&i| a[i].clone()).collect();
    let ok = match inst.problem {
        Problem::SubsetSum => chosen.iter().sum::<BigInt>() == inst.int("t", &inst.t)?,
        Problem::SubsetProduct => chosen.iter().product::<BigInt>() == inst.int("t", &inst.t)?,
        Problem::Ssop => {
            let k = inst.small("k", &inst.k)?;
            let v = if k as usize > chosen.len() {
                BigInt::zero()
            } else {
                elementary_symmetric(&chosen, k)?
            };
            v == inst.int("t", &inst.t)?
        }
        Problem::ProductPartition => {
            let j = index_list(w.get("complement").unwrap_or(&Value::Null), n, "complement")?;
            let disjoint_cover = idx.len() + j.len() == n && idx.iter().all(|i| !j.contains(i));
            let rest: BigInt = j.iter().map(|&i| &a[i]).product();
            disjoint_cover && !idx.is_empty() && !j.is_empty() && chosen.iter().product::<BigInt>() == rest
        }
        _ => unreachable!("polynomial problems are checked elsewhere"),
    };
    if ok {
        Ok(())
    } else {
        Err(fail("witness does not satisfy the problem"))
    }
}

fn check_factor(inst: &InstanceFile, verdict: &Value, w: &Value) -> Result<()> {
    let p = inst.polynomial()?;
    let q = poly_field(w, "q")?.ok_or_else(|| fail("witness has no q"))?;
    let r = p.exact_div(&q).map_err(|_| fail("q does not divide p"))?;
    if let Some(given) = poly_field(w, "r")? {
        if &(&q * &given) != p {
            return Err(fail("q·r differs from p"));
        }
    } else if inst.problem.is_pair() {
        return Err(fail("pair witness has no r"));
    }
    let trivial = echoed::<TrivialFactors>(verdict, "trivial_factors")?.unwrap_or_default();
    let signed = echoed::<SignedFactors>(verdict, "signed_factors")?.unwrap_or_default();
    let lead_ok = match q.leading() {
        Some(l) if l.is_one() => true,
        Some(l) => signed == SignedFactors::AllowSign && (-l).is_one(),
        None => false,
    };
    if !lead_ok && inst.problem != Problem::NaturalReducibility {
        return Err(fail("q has a leading coefficient the config does not admit"));
    }
    let deg_q = q.degree().unwrap_or(0);
    let nontrivial = deg_q > 0 && deg_q < p.degree().unwrap_or(0);
    if trivial == TrivialFactors::Forbidden && !nontrivial && inst.problem != Problem::NaturalReducibility {
        return Err(fail("q is trivial but the config forbids trivial factors"));
    }
    let at = |x: i64| (q.eval_i64(x), r.eval_i64(x));
    let ok = match inst.problem {
        Problem::KFactor => q.eval(&inst.int("k", &inst.k)?) == inst.int("h", &inst.h)?,
        Problem::SumOfCoefficients => q.eval_i64(1) == inst.int("s", &inst.s)?,
        Problem::ConstantTerm => q.eval_i64(0) == inst.int("t", &inst.t)?,
        Problem::KEqualFactor => {
            let k = inst.int("k", &inst.k)?;
            q.eval(&k) == r.eval(&k)
        }
        Problem::EqualConstantTerm => {
            let (a, b) = at(0);
            a == b
        }
        Problem::EqualSumOfCoefficients => {
            let (a, b) = at(1);
            a == b
        }
        Problem::FactorWithSpecificCoefficients => {
            let conv = echoed::<CoefConvention>(verdict, "coef_convention")?.unwrap_or_default();
            conv.read(&q, inst.small("m", &inst.m)?) == inst.int("h", &inst.h)?
        }
        Problem::NaturalReducibility => {
            nontrivial && q.is_monic() && q.has_nonnegative_coeffs() && r.has_nonnegative_coeffs()
        }
        _ => unreachable!("subset problems are checked elsewhere"),
    };
    if ok {
        Ok(())
    } else {
        Err(fail("witness does not satisfy the problem"))
    }
}

/// Builds the reduced instance file for a supported (from, to) pair. `k` is
/// the shift for the first two reductions and ignored for ssop, whose
/// arity comes from the file; subset-sum is treated as ssop with arity 1.
pub fn reduce_instance(inst: &InstanceFile, from: Problem, to: Problem, k: &BigInt) -> Result<InstanceFile> {
    if inst.problem != from {
        return Err(fail(format!(
            "instance is {} but --from is {}",
            inst.problem.as_str(),
            from.as_str()
        )));
    }
    inst.validate_fields()?;
    let mut out = InstanceFile::new(to);
    match (from, to) {
        (Problem::SubsetProduct, Problem::KFactor) => {
            let red = Reduction::subset_product(&inst.subset_target()?, k);
            out.poly = Some(red.p);
            out.k = Some(k.to_string());
            out.h = red.h.map(|h| h.to_string());
        }
        (Problem::ProductPartition, Problem::KEqualFactor) => {
            let red = Reduction::product_partition(&inst.partition()?, k);
            out.poly = Some(red.p);
            out.k = Some(k.to_string());
            out.config.trivial_factors = Some(TrivialFactors::Forbidden.as_str().into());
        }
        (Problem::Ssop | Problem::SubsetSum, Problem::FactorWithSpecificCoefficients) => {
            let src = if from == Problem::Ssop {
                inst.ssop()?
            } else {
                SsopInstance::new(inst.items()?, inst.int("t", &inst.t)?, 1)?
            };
            let red = Reduction::ssop(&src);
            out.poly = Some(red.p);
            out.m = red.m.map(|m| m.to_string());
            out.h = red.h.map(|h| h.to_string());
            out.config.coef_convention = Some(CERTIFIED_CONVENTION.as_str().into());
        }
        _ => {
            return Err(fail(format!(
                "no reduction from {} to {}",
                from.as_str(),
                to.as_str()
            )))
        }
    }
    Ok(out)
}

/// Factorization of a nonzero polynomial as JSON: unit, factors, multiplicities.
pub fn factor_json(p: &Poly, degree_cap: usize) -> Result<Value> {
    let lead = p.leading().ok_or(Error::ZeroPolynomial)?;
    let (unit, monic) = if lead.is_negative() { (Unit::Minus, -p) } else { (Unit::Plus, p.clone()) };
    let f = factorize_with_cap(&monic, degree_cap)?;
    let unit = if unit == Unit::Minus { -f.unit().value() } else { f.unit().value() };
    Ok(json!({
        "unit": unit.to_string(),
        "factors": f.factors().iter().map(|(q, _)| q).collect::<Vec<_>>(),
        "multiplicities": f.multiplicities(),
    }))
}

/// Accepts a bare coefficient array or an object {"poly": [...]}.
pub fn parse_factor_input(text: &str) -> Result<Poly> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Wrapped {
        poly: Poly,
    }
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Input {
        Bare(Poly),
        Wrapped(Wrapped),
    }
    let input: Input = serde_json::from_str(text).map_err(parse_err)?;
    Ok(match input {
        Input::Bare(p) => p,
        Input::Wrapped(w) => w.poly,
    })
}

//! Fixed, seeded workloads for timing runs.

use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinat::{subset_product_decide, subset_sum_decide, ProductStrategy, SolverConfig, SubsetTargetInstance, SumStrategy};
use crate::error::{Error, Result};
use crate::poly::expand_from_roots;

pub const SUITES: [&str; 4] = ["expansion", "mitm", "dp", "all"];
pub const EXPANSION_SIZES: [usize; 4] = [128, 256, 512, 1024];
const SEED: u64 = 0x5eed;

pub fn expansion_roots(n: usize, seed: u64) -> Vec<BigInt> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| BigInt::from(rng.gen_range(-9i64..=9))).collect()
}

/// n random items in 1..=max_a with t the product of a random half of them.
pub fn product_instance(n: usize, max_a: u64, seed: u64) -> SubsetTargetInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=max_a)).collect();
    let t: BigInt = a.iter().filter(|_| rng.gen_bool(0.5)).map(|&x| BigInt::from(x)).product();
    SubsetTargetInstance::new(a.iter().map(|&x| BigInt::from(x)).collect(), t).expect("positive items")
}

/// n random items in 1..=1000 against target t.
pub fn sum_instance(n: usize, t: u64, seed: u64) -> SubsetTargetInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=1000)).collect();
    SubsetTargetInstance::from_u64(&a, t).expect("positive items")
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub suite: &'static str,
    pub case: &'static str,
    pub n: usize,
    pub millis: f64,
    pub outcome: String,
}

impl BenchRow {
    pub const HEADER: &'static str = "suite,case,n,millis,outcome";

    pub fn to_csv(&self) -> String {
        format!("{},{},{},{:.3},{}", self.suite, self.case, self.n, self.millis, self.outcome)
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

pub fn expansion_row(n: usize) -> BenchRow {
    let roots = expansion_roots(n, SEED);
    let (p, millis) = timed(|| expand_from_roots(&roots));
    BenchRow {
        suite: "expansion",
        case: "expand_from_roots",
        n,
        millis,
        outcome: format!("degree={}", p.degree().unwrap_or(0)),
    }
}

pub fn product_row(n: usize, strategy: ProductStrategy) -> Result<BenchRow> {
    let inst = product_instance(n, 100, SEED);
    let (d, millis) = timed(|| subset_product_decide(&inst, strategy, &SolverConfig::default()));
    Ok(BenchRow {
        suite: "mitm",
        case: match strategy {
            ProductStrategy::Mitm => "subset_product_mitm",
            ProductStrategy::Dfs => "subset_product_dfs",
            ProductStrategy::Exhaustive => "subset_product_exhaustive",
        },
        n,
        millis,
        outcome: d?.answer.as_str().into(),
    })
}

pub fn dp_row(n: usize, t: u64) -> Result<BenchRow> {
    let inst = sum_instance(n, t, SEED);
    let (d, millis) = timed(|| subset_sum_decide(&inst, SumStrategy::Dp, &SolverConfig::default()));
    Ok(BenchRow {
        suite: "dp",
        case: "subset_sum_dp",
        n,
        millis,
        outcome: d?.answer.as_str().into(),
    })
}

pub fn run_suite(name: &str) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    let all = name == "all";
    if !SUITES.contains(&name) {
        return Err(Error::InvalidInstance(format!("unknown bench suite {name:?}; choose one of {SUITES:?}")));
    }
    if all || name == "expansion" {
        rows.extend(EXPANSION_SIZES.iter().map(|&n| expansion_row(n)));
    }
    if all || name == "mitm" {
        rows.push(product_row(30, ProductStrategy::Mitm)?);
        rows.push(product_row(20, ProductStrategy::Exhaustive)?);
    }
    if all || name == "dp" {
        rows.push(dp_row(200, 100_000)?);
    }
    Ok(rows)
}

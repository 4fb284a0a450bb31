//! Solvers for subset-sum, subset-product, product-partition and
//! subset-sum-of-products, each paired with an exhaustive enumeration that
//! serves as the independent oracle.
//!
//! Witness indices are 0-based here; the JSON layer shifts them to 1-based.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::exact_sqrt;
use crate::decision::{Decision, Stats, SubsetWitness, Witness};
use crate::error::{Error, Result};
use crate::poly::elementary_symmetric_all;

fn check_positive(values: &[BigInt], what: &str) -> Result<()> {
    match values.iter().position(|a| !a.is_positive()) {
        Some(i) => Err(Error::InvalidInstance(format!(
            "{what}[{}] = {} is not a positive integer",
            i + 1,
            values[i]
        ))),
        None => Ok(()),
    }
}

/// ⟨a_1..a_n; t⟩ with every entry positive, used for subset-sum and subset-product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetTargetInstance {
    a: Vec<BigInt>,
    t: BigInt,
}

impl SubsetTargetInstance {
    pub fn new(a: Vec<BigInt>, t: BigInt) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::InvalidInstance("need at least one item".into()));
        }
        check_positive(&a, "a")?;
        check_positive(std::slice::from_ref(&t), "t")?;
        Ok(SubsetTargetInstance { a, t })
    }

    pub fn from_u64(a: &[u64], t: u64) -> Result<Self> {
        Self::new(a.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(t))
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn t(&self) -> &BigInt {
        &self.t
    }
}

/// ⟨a_1..a_n⟩ with n ≥ 2 positive entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionInstance {
    a: Vec<BigInt>,
}

impl PartitionInstance {
    pub fn new(a: Vec<BigInt>) -> Result<Self> {
        if a.len() < 2 {
            return Err(Error::InvalidInstance(
                "product-partition needs at least two items".into(),
            ));
        }
        check_positive(&a, "a")?;
        Ok(PartitionInstance { a })
    }

    pub fn from_u64(a: &[u64]) -> Result<Self> {
        Self::new(a.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }
}

/// ⟨a_1..a_n; t⟩ with arity k, 1 ≤ k ≤ n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SsopInstance {
    a: Vec<BigInt>,
    t: BigInt,
    k: usize,
}

impl SsopInstance {
    pub fn new(a: Vec<BigInt>, t: BigInt, k: usize) -> Result<Self> {
        if k == 0 || k > a.len() {
            return Err(Error::InvalidInstance(format!(
                "arity k = {k} must lie in 1..={}",
                a.len()
            )));
        }
        check_positive(&a, "a")?;
        check_positive(std::slice::from_ref(&t), "t")?;
        Ok(SsopInstance { a, t, k })
    }

    pub fn from_u64(a: &[u64], t: u64, k: usize) -> Result<Self> {
        Self::new(a.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(t), k)
    }

    pub fn a(&self) -> &[BigInt] {
        &self.a
    }

    pub fn t(&self) -> &BigInt {
        &self.t
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Reject I = ∅ (empty sum 0, empty product 1).
    pub forbid_empty_subset: bool,
    /// Upper bound on n·t for the subset-sum table.
    pub dp_cell_budget: u128,
    /// Upper bound on search nodes for enumeration-based strategies.
    pub node_budget: u128,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            forbid_empty_subset: false,
            dp_cell_budget: 1 << 32,
            node_budget: 1 << 28,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SumStrategy {
    #[default]
    Dp,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ProductStrategy {
    Dfs,
    #[default]
    Mitm,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PartitionStrategy {
    #[default]
    Mitm,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SsopStrategy {
    #[default]
    Dfs,
    /// The same DFS without the e_k > t cutoff.
    DfsUnpruned,
    Exhaustive,
}

pub fn subset_sum_of(a: &[BigInt], indices: &[usize]) -> BigInt {
    indices.iter().map(|&i| &a[i]).sum()
}

pub fn subset_product_of(a: &[BigInt], indices: &[usize]) -> BigInt {
    indices.iter().map(|&i| &a[i]).product()
}

/// e_k of the selected items; zero when fewer than k items are chosen.
pub fn ssop_value(a: &[BigInt], indices: &[usize], k: usize) -> BigInt {
    let chosen: Vec<BigInt> = indices.iter().map(|&i| a[i].clone()).collect();
    elementary_symmetric_all(&chosen, k).swap_remove(k)
}

fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}

fn mask_indices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

fn subset_count(n: usize, cfg: &SolverConfig) -> Result<u64> {
    if n >= 63 {
        return Err(Error::BudgetExceeded {
            needed: u128::MAX,
            budget: cfg.node_budget,
        });
    }
    check_budget(1u128 << n, cfg.node_budget)?;
    Ok(1u64 << n)
}

/// Walks all 2^n masks in Gray-code order, calling `toggle(state, i, added)`
/// on each flip and `visit(state, mask)` after it; stops when `visit` is true.
fn gray_walk<S>(
    n: usize,
    state: &mut S,
    toggle: impl Fn(&mut S, usize, bool),
    visit: impl Fn(&S, u64) -> bool,
    cfg: &SolverConfig,
) -> Result<(Option<u64>, u64)> {
    let total = subset_count(n, cfg)?;
    if visit(state, 0) {
        return Ok((Some(0), 1));
    }
    let mut mask = 0u64;
    for step in 1..total {
        let bit = step.trailing_zeros() as usize;
        mask ^= 1 << bit;
        toggle(state, bit, mask >> bit & 1 == 1);
        if visit(state, mask) {
            return Ok((Some(mask), step + 1));
        }
    }
    Ok((None, total))
}

fn finish(found: Option<Vec<usize>>, stats: Stats) -> Decision {
    match found {
        Some(idx) => Decision::yes(Witness::Subset(SubsetWitness::subset(idx)), stats),
        None => Decision::no(stats),
    }
}

pub fn subset_sum_decide(
    inst: &SubsetTargetInstance,
    strategy: SumStrategy,
    cfg: &SolverConfig,
) -> Result<Decision> {
    match strategy {
        SumStrategy::Dp => subset_sum_dp(inst, cfg),
        SumStrategy::Exhaustive => {
            let a = inst.a();
            let mut sum = BigInt::zero();
            let (found, nodes) = gray_walk(
                a.len(),
                &mut sum,
                |sum, i, added| {
                    if added {
                        *sum += &a[i];
                    } else {
                        *sum -= &a[i];
                    }
                },
                |sum, mask| (mask != 0 || !cfg.forbid_empty_subset) && *sum == *inst.t(),
                cfg,
            )?;
            let found = found.map(|m| mask_indices(m, a.len()));
            Ok(finish(found, Stats::new("exhaustive", nodes)))
        }
    }
}

/// Pseudo-polynomial table over sums 0..=t. `who[s]` records the item that
/// first reached s, so the witness is read back by walking s → s − a_who[s].
fn subset_sum_dp(inst: &SubsetTargetInstance, cfg: &SolverConfig) -> Result<Decision> {
    const UNREACHED: u32 = u32::MAX;
    let n = inst.a().len();
    let cells = (n as u128).saturating_mul(inst.t().to_u128().unwrap_or(u128::MAX));
    if cells > cfg.dp_cell_budget {
        return Err(Error::CapacityExceeded {
            cells,
            budget: cfg.dp_cell_budget,
        });
    }
    let t = inst.t().to_usize().ok_or(Error::CapacityExceeded {
        cells,
        budget: cfg.dp_cell_budget,
    })?;
    let mut who = vec![UNREACHED; t + 1];
    who[0] = n as u32;
    for (i, a) in inst.a().iter().enumerate() {
        let Some(a) = a.to_usize().filter(|&a| a <= t) else {
            continue;
        };
        for s in (a..=t).rev() {
            if who[s] == UNREACHED && who[s - a] != UNREACHED {
                who[s] = i as u32;
            }
        }
        if who[t] != UNREACHED {
            break;
        }
    }
    let stats = Stats::new("dp", cells as u64);
    if who[t] == UNREACHED {
        return Ok(Decision::no(stats));
    }
    let mut idx = Vec::new();
    let mut s = t;
    while s > 0 {
        let i = who[s] as usize;
        idx.push(i);
        s -= inst.a()[i].to_usize().unwrap_or(0);
    }
    Ok(finish(Some(idx), stats))
}

/// The t = 1 case: I = ∅ works unless forbidden, otherwise any a_i = 1.
fn unit_target(a: &[BigInt], cfg: &SolverConfig) -> Option<Vec<usize>> {
    if !cfg.forbid_empty_subset {
        return Some(Vec::new());
    }
    a.iter().position(One::is_one).map(|i| vec![i])
}

/// Items other than 1 that divide t, with their original indices.
fn useful_factors(a: &[BigInt], t: &BigInt) -> Vec<(usize, BigInt)> {
    a.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_one() && (t % *x).is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn subset_product_decide(
    inst: &SubsetTargetInstance,
    strategy: ProductStrategy,
    cfg: &SolverConfig,
) -> Result<Decision> {
    let a = inst.a();
    let t = inst.t();
    let name = match strategy {
        ProductStrategy::Dfs => "dfs",
        ProductStrategy::Mitm => "mitm",
        ProductStrategy::Exhaustive => "exhaustive",
    };
    if strategy == ProductStrategy::Exhaustive {
        let mut prod = BigInt::one();
        let (found, nodes) = gray_walk(
            a.len(),
            &mut prod,
            |prod, i, added| {
                if added {
                    *prod *= &a[i];
                } else {
                    *prod /= &a[i];
                }
            },
            |prod, mask| (mask != 0 || !cfg.forbid_empty_subset) && *prod == *t,
            cfg,
        )?;
        let found = found.map(|m| mask_indices(m, a.len()));
        return Ok(finish(found, Stats::new(name, nodes)));
    }
    if t.is_one() {
        return Ok(finish(unit_target(a, cfg), Stats::new(name, 1)));
    }
    let items = useful_factors(a, t);
    let mut nodes = 0u64;
    let found = match strategy {
        ProductStrategy::Dfs => product_dfs(&items, t, &mut nodes, cfg)?,
        _ => product_mitm(&items, t, &mut nodes, cfg)?,
    };
    Ok(finish(found, Stats::new(name, nodes)))
}

/// Divisibility-pruned DFS; failed (position, remaining quotient) states are
/// memoized, so the work is bounded by n times the divisor count of t.
fn product_dfs(
    items: &[(usize, BigInt)],
    t: &BigInt,
    nodes: &mut u64,
    cfg: &SolverConfig,
) -> Result<Option<Vec<usize>>> {
    fn go(
        items: &[(usize, BigInt)],
        pos: usize,
        rem: &BigInt,
        path: &mut Vec<usize>,
        failed: &mut HashSet<(usize, BigInt)>,
        nodes: &mut u64,
        cfg: &SolverConfig,
    ) -> Result<bool> {
        *nodes += 1;
        check_budget(u128::from(*nodes), cfg.node_budget)?;
        if rem.is_one() {
            return Ok(true);
        }
        if pos == items.len() || failed.contains(&(pos, rem.clone())) {
            return Ok(false);
        }
        let (idx, a) = &items[pos];
        if (rem % a).is_zero() {
            path.push(*idx);
            if go(items, pos + 1, &(rem / a), path, failed, nodes, cfg)? {
                return Ok(true);
            }
            path.pop();
        }
        if go(items, pos + 1, rem, path, failed, nodes, cfg)? {
            return Ok(true);
        }
        failed.insert((pos, rem.clone()));
        Ok(false)
    }
    let mut path = Vec::new();
    let mut failed = HashSet::new();
    Ok(go(items, 0, t, &mut path, &mut failed, nodes, cfg)?.then_some(path))
}

/// Every subset of `items` whose product divides t, in DFS order
/// (exclude-first), as (product, indices).
fn dividing_subsets(
    items: &[(usize, BigInt)],
    t: &BigInt,
    nodes: &mut u64,
    cfg: &SolverConfig,
) -> Result<Vec<(BigInt, Vec<usize>)>> {
    check_budget(1u128 << items.len().min(127), cfg.node_budget)?;
    let mut out = vec![(BigInt::one(), Vec::new())];
    for (idx, a) in items {
        let mut grown = Vec::new();
        for (prod, set) in &out {
            let next = prod * a;
            if (t % &next).is_zero() {
                let mut s = set.clone();
                s.push(*idx);
                grown.push((next, s));
            }
        }
        out.extend(grown);
        *nodes += out.len() as u64;
    }
    Ok(out)
}

/// Meet in the middle: the first ⌈n/2⌉ items against the rest, left products
/// keyed by the complement t / product they still need.
fn product_mitm(
    items: &[(usize, BigInt)],
    t: &BigInt,
    nodes: &mut u64,
    cfg: &SolverConfig,
) -> Result<Option<Vec<usize>>> {
    let split = items.len().div_ceil(2);
    let (left, right) = items.split_at(split);
    let mut need: BTreeMap<BigInt, Vec<usize>> = BTreeMap::new();
    for (prod, set) in dividing_subsets(left, t, nodes, cfg)? {
        need.entry(t / prod).or_insert(set);
    }
    for (prod, set) in dividing_subsets(right, t, nodes, cfg)? {
        if let Some(lset) = need.get(&prod) {
            let mut all = lset.clone();
            all.extend(set);
            return Ok(Some(all));
        }
    }
    Ok(None)
}

pub fn product_partition_decide(
    inst: &PartitionInstance,
    strategy: PartitionStrategy,
    cfg: &SolverConfig,
) -> Result<Decision> {
    let a = inst.a();
    let n = a.len();
    let total: BigInt = a.iter().product();
    match strategy {
        PartitionStrategy::Exhaustive => {
            let mut prod = BigInt::one();
            let full = (1u64 << n) - 1;
            let (found, nodes) = gray_walk(
                n,
                &mut prod,
                |prod, i, added| {
                    if added {
                        *prod *= &a[i];
                    } else {
                        *prod /= &a[i];
                    }
                },
                |prod, mask| mask != 0 && mask != full && prod * prod == total,
                cfg,
            )?;
            Ok(match found {
                Some(mask) => Decision::yes(
                    Witness::Subset(SubsetWitness::partition(mask_indices(mask, n), n)),
                    Stats::new("exhaustive", nodes),
                ),
                None => Decision::no(Stats::new("exhaustive", nodes)),
            })
        }
        PartitionStrategy::Mitm => {
            let mut nodes = 1u64;
            let found = if total.is_one() {
                // every item is 1: any nonempty proper split works
                Some(vec![0])
            } else if let Some(root) = exact_sqrt(&total) {
                // root > 1, so I and J are automatically nonempty
                product_mitm(&useful_factors(a, &root), &root, &mut nodes, cfg)?
            } else {
                None
            };
            let stats = Stats::new("mitm", nodes);
            Ok(match found {
                Some(idx) => Decision::yes(Witness::Subset(SubsetWitness::partition(idx, n)), stats),
                None => Decision::no(stats),
            })
        }
    }
}

/// e_k by summing products over explicit k-combinations.
fn e_k_definitional(values: &[&BigInt], k: usize) -> BigInt {
    fn go(values: &[&BigInt], k: usize, start: usize, acc: &BigInt, total: &mut BigInt) {
        if k == 0 {
            *total += acc;
            return;
        }
        for i in start..=values.len().saturating_sub(k) {
            go(values, k - 1, i + 1, &(acc * values[i]), total);
        }
    }
    let mut total = BigInt::zero();
    if k <= values.len() {
        go(values, k, 0, &BigInt::one(), &mut total);
    }
    total
}

pub fn ssop_decide(inst: &SsopInstance, strategy: SsopStrategy, cfg: &SolverConfig) -> Result<Decision> {
    let a = inst.a();
    let n = a.len();
    let k = inst.k();
    match strategy {
        SsopStrategy::Exhaustive => {
            let total = subset_count(n, cfg)?;
            for mask in 0..total {
                let chosen: Vec<&BigInt> = mask_indices(mask, n).into_iter().map(|i| &a[i]).collect();
                if e_k_definitional(&chosen, k) == *inst.t() {
                    return Ok(finish(
                        Some(mask_indices(mask, n)),
                        Stats::new("exhaustive", mask + 1),
                    ));
                }
            }
            Ok(Decision::no(Stats::new("exhaustive", total)))
        }
        SsopStrategy::Dfs | SsopStrategy::DfsUnpruned => {
            let prune = strategy == SsopStrategy::Dfs;
            let mut search = SsopSearch {
                a,
                t: inst.t(),
                k,
                prune,
                nodes: 0,
                budget: cfg.node_budget,
                path: Vec::new(),
            };
            let mut e = vec![BigInt::zero(); k + 1];
            e[0] = BigInt::one();
            let found = search.go(0, &e)?;
            let name = if prune { "dfs" } else { "dfs-unpruned" };
            let stats = Stats::new(name, search.nodes);
            Ok(finish(found.then_some(search.path), stats))
        }
    }
}

struct SsopSearch<'a> {
    a: &'a [BigInt],
    t: &'a BigInt,
    k: usize,
    prune: bool,
    nodes: u64,
    budget: u128,
    path: Vec<usize>,
}

impl SsopSearch<'_> {
    /// `e` holds e_0..=e_k of the items chosen so far.
    fn go(&mut self, pos: usize, e: &[BigInt]) -> Result<bool> {
        self.nodes += 1;
        check_budget(u128::from(self.nodes), self.budget)?;
        if e[self.k] == *self.t {
            return Ok(true);
        }
        // all a_i ≥ 1, so e_k never decreases as items are added
        if self.prune && e[self.k] > *self.t {
            return Ok(false);
        }
        if pos == self.a.len() {
            return Ok(false);
        }
        let item = &self.a[pos];
        let mut with = e.to_vec();
        for j in (1..=self.k).rev() {
            let t = item * &with[j - 1];
            with[j] += t;
        }
        self.path.push(pos);
        if self.go(pos + 1, &with)? {
            return Ok(true);
        }
        self.path.pop();
        self.go(pos + 1, e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decision::Answer;
    use proptest::prelude::*;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn witness(d: &Decision) -> Vec<usize> {
        d.subset_witness().unwrap().indices.clone()
    }

    #[test]
    fn subset_sum_examples() {
        let inst = SubsetTargetInstance::from_u64(&[3, 5, 8], 8).unwrap();
        for s in [SumStrategy::Dp, SumStrategy::Exhaustive] {
            let d = subset_sum_decide(&inst, s, &cfg()).unwrap();
            assert!(d.is_yes());
            assert_eq!(subset_sum_of(inst.a(), &witness(&d)), BigInt::from(8));
        }
        assert_eq!(witness(&subset_sum_decide(&inst, SumStrategy::Dp, &cfg()).unwrap()), vec![0, 1]);
        let inst = SubsetTargetInstance::from_u64(&[2, 4], 7).unwrap();
        for s in [SumStrategy::Dp, SumStrategy::Exhaustive] {
            assert_eq!(subset_sum_decide(&inst, s, &cfg()).unwrap().answer, Answer::No);
        }
        let inst = SubsetTargetInstance::from_u64(&[41], 41).unwrap();
        assert!(subset_sum_decide(&inst, SumStrategy::Dp, &cfg()).unwrap().is_yes());
    }

    #[test]
    fn subset_sum_capacity() {
        let inst = SubsetTargetInstance::from_u64(&[1, 2, 3], 1 << 40).unwrap();
        let tight = SolverConfig {
            dp_cell_budget: 1000,
            ..cfg()
        };
        assert!(matches!(
            subset_sum_decide(&inst, SumStrategy::Dp, &tight),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn subset_product_examples() {
        let inst = SubsetTargetInstance::from_u64(&[2, 3, 5], 6).unwrap();
        for s in [ProductStrategy::Dfs, ProductStrategy::Mitm, ProductStrategy::Exhaustive] {
            let d = subset_product_decide(&inst, s, &cfg()).unwrap();
            assert_eq!(witness(&d), vec![0, 1], "{s:?}");
        }
        let inst = SubsetTargetInstance::from_u64(&[2, 3, 5], 7).unwrap();
        for s in [ProductStrategy::Dfs, ProductStrategy::Mitm, ProductStrategy::Exhaustive] {
            assert!(!subset_product_decide(&inst, s, &cfg()).unwrap().is_yes());
        }
        // empty product
        let inst = SubsetTargetInstance::from_u64(&[4], 1).unwrap();
        for s in [ProductStrategy::Dfs, ProductStrategy::Mitm, ProductStrategy::Exhaustive] {
            let d = subset_product_decide(&inst, s, &cfg()).unwrap();
            assert!(witness(&d).is_empty());
        }
        let strict = SolverConfig {
            forbid_empty_subset: true,
            ..cfg()
        };
        for s in [ProductStrategy::Dfs, ProductStrategy::Mitm, ProductStrategy::Exhaustive] {
            assert!(!subset_product_decide(&inst, s, &strict).unwrap().is_yes());
            let ones = SubsetTargetInstance::from_u64(&[4, 1], 1).unwrap();
            assert_eq!(witness(&subset_product_decide(&ones, s, &strict).unwrap()), vec![1]);
        }
    }

    #[test]
    fn product_partition_examples() {
        let inst = PartitionInstance::from_u64(&[2, 3, 6]).unwrap();
        for s in [PartitionStrategy::Mitm, PartitionStrategy::Exhaustive] {
            let d = product_partition_decide(&inst, s, &cfg()).unwrap();
            let w = d.subset_witness().unwrap();
            let j = w.complement.clone().unwrap();
            assert_eq!(subset_product_of(inst.a(), &w.indices), subset_product_of(inst.a(), &j));
        }
        let inst = PartitionInstance::from_u64(&[2, 3, 5]).unwrap();
        for s in [PartitionStrategy::Mitm, PartitionStrategy::Exhaustive] {
            assert!(!product_partition_decide(&inst, s, &cfg()).unwrap().is_yes());
        }
        let inst = PartitionInstance::from_u64(&[1, 1]).unwrap();
        for s in [PartitionStrategy::Mitm, PartitionStrategy::Exhaustive] {
            let d = product_partition_decide(&inst, s, &cfg()).unwrap();
            let w = d.subset_witness().unwrap();
            assert!(!w.indices.is_empty() && !w.complement.as_ref().unwrap().is_empty());
        }
        assert!(PartitionInstance::from_u64(&[4]).is_err());
    }

    #[test]
    fn ssop_examples() {
        let all = [SsopStrategy::Dfs, SsopStrategy::DfsUnpruned, SsopStrategy::Exhaustive];
        let inst = SsopInstance::from_u64(&[3, 5, 8], 8, 1).unwrap();
        for s in all {
            assert!(ssop_decide(&inst, s, &cfg()).unwrap().is_yes());
        }
        let inst = SsopInstance::from_u64(&[1, 2, 3], 11, 2).unwrap();
        for s in all {
            assert_eq!(witness(&ssop_decide(&inst, s, &cfg()).unwrap()), vec![0, 1, 2]);
        }
        let inst = SsopInstance::from_u64(&[1, 2, 3], 7, 2).unwrap();
        for s in all {
            assert!(!ssop_decide(&inst, s, &cfg()).unwrap().is_yes());
        }
        assert!(SsopInstance::from_u64(&[1, 2], 1, 3).is_err());
        assert!(SsopInstance::from_u64(&[1, 2], 1, 0).is_err());
    }

    #[test]
    fn invalid_instances() {
        assert!(SubsetTargetInstance::from_u64(&[], 1).is_err());
        assert!(SubsetTargetInstance::from_u64(&[0, 1], 1).is_err());
        assert!(SubsetTargetInstance::from_u64(&[1], 0).is_err());
    }

    #[test]
    fn exhaustive_budget() {
        let inst = SubsetTargetInstance::from_u64(&[1; 40], 3).unwrap();
        assert!(matches!(
            subset_sum_decide(&inst, SumStrategy::Exhaustive, &cfg()),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn e_k_definitional_matches_recurrence() {
        let vals: Vec<BigInt> = [3, 1, 4, 1, 5, 9].iter().map(|&x| BigInt::from(x)).collect();
        let refs: Vec<&BigInt> = vals.iter().collect();
        let idx: Vec<usize> = (0..vals.len()).collect();
        for k in 0..=7 {
            assert_eq!(e_k_definitional(&refs, k), ssop_value(&vals, &idx, k.min(6)) * u32::from(k <= 6));
        }
    }

    proptest! {
        #[test]
        fn strategies_agree(a in prop::collection::vec(1u64..=30, 1..=12), t in 1u64..=400, k in 1usize..=3) {
            let sub = SubsetTargetInstance::from_u64(&a, t).unwrap();
            let dp = subset_sum_decide(&sub, SumStrategy::Dp, &cfg()).unwrap();
            let ex = subset_sum_decide(&sub, SumStrategy::Exhaustive, &cfg()).unwrap();
            prop_assert_eq!(dp.answer, ex.answer);
            for d in [&dp, &ex] {
                if d.is_yes() {
                    prop_assert_eq!(subset_sum_of(sub.a(), &witness(d)), sub.t().clone());
                }
            }

            let answers: Vec<Decision> = [ProductStrategy::Dfs, ProductStrategy::Mitm, ProductStrategy::Exhaustive]
                .iter()
                .map(|&s| subset_product_decide(&sub, s, &cfg()).unwrap())
                .collect();
            for d in &answers {
                prop_assert_eq!(d.answer, answers[2].answer);
                if d.is_yes() {
                    prop_assert_eq!(subset_product_of(sub.a(), &witness(d)), sub.t().clone());
                }
            }

            if a.len() >= 2 {
                let pp = PartitionInstance::from_u64(&a).unwrap();
                let m = product_partition_decide(&pp, PartitionStrategy::Mitm, &cfg()).unwrap();
                let e = product_partition_decide(&pp, PartitionStrategy::Exhaustive, &cfg()).unwrap();
                prop_assert_eq!(m.answer, e.answer);
                if let Some(w) = m.subset_witness() {
                    let j = w.complement.clone().unwrap();
                    prop_assert!(!w.indices.is_empty() && !j.is_empty());
                    prop_assert_eq!(subset_product_of(pp.a(), &w.indices), subset_product_of(pp.a(), &j));
                }
            }

            if k <= a.len() {
                let ss = SsopInstance::from_u64(&a, t, k).unwrap();
                let d = ssop_decide(&ss, SsopStrategy::Dfs, &cfg()).unwrap();
                let e = ssop_decide(&ss, SsopStrategy::Exhaustive, &cfg()).unwrap();
                prop_assert_eq!(d.answer, e.answer);
                if d.is_yes() {
                    prop_assert_eq!(ssop_value(ss.a(), &witness(&d), k), ss.t().clone());
                }
                if a.len() <= 10 {
                    let u = ssop_decide(&ss, SsopStrategy::DfsUnpruned, &cfg()).unwrap();
                    prop_assert_eq!(u.answer, d.answer);
                }
            }
        }
    }
}

//! Verdicts shared by the combinatorial solvers and the polynomial deciders.

use num_bigint::BigInt;

use crate::factorize::DivisorCursor;
use crate::poly::Poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Answer {
    Yes,
    No,
}

impl Answer {
    pub fn from_bool(yes: bool) -> Self {
        if yes {
            Answer::Yes
        } else {
            Answer::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Answer::Yes
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Answer::Yes => "yes",
            Answer::No => "no",
        }
    }
}

/// Index subset I (and J for partitions), 0-based and ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetWitness {
    pub indices: Vec<usize>,
    pub complement: Option<Vec<usize>>,
}

impl SubsetWitness {
    pub fn subset(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        SubsetWitness {
            indices,
            complement: None,
        }
    }

    /// A two-sided witness; J is everything in `0..n` outside I.
    pub fn partition(indices: Vec<usize>, n: usize) -> Self {
        let mut w = Self::subset(indices);
        w.complement = Some((0..n).filter(|i| w.indices.binary_search(i).is_err()).collect());
        w
    }
}

/// A factor q of p (and its cofactor r for pair problems).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorWitness {
    pub q: Poly,
    pub r: Option<Poly>,
    /// Exponent vector of the monic part of q over the factorization of p.
    pub cursor: DivisorCursor,
    /// The constrained quantity recomputed from q: q(k) or the chosen coefficient.
    pub certified_value: Option<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Subset(SubsetWitness),
    Factor(FactorWitness),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub strategy: &'static str,
    pub nodes: u64,
}

impl Stats {
    pub fn new(strategy: &'static str, nodes: u64) -> Self {
        Stats { strategy, nodes }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub answer: Answer,
    pub witness: Option<Witness>,
    pub stats: Stats,
}

impl Decision {
    pub fn yes(witness: Witness, stats: Stats) -> Self {
        Decision {
            answer: Answer::Yes,
            witness: Some(witness),
            stats,
        }
    }

    pub fn no(stats: Stats) -> Self {
        Decision {
            answer: Answer::No,
            witness: None,
            stats,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer.is_yes()
    }

    pub fn subset_witness(&self) -> Option<&SubsetWitness> {
        match &self.witness {
            Some(Witness::Subset(w)) => Some(w),
            _ => None,
        }
    }

    pub fn factor_witness(&self) -> Option<&FactorWitness> {
        match &self.witness {
            Some(Witness::Factor(w)) => Some(w),
            _ => None,
        }
    }
}

//! Factorization and exact deciders for constrained-factor problems over
//! univariate integer polynomials, with reductions from subset problems.

pub mod arith;
pub mod bench;
pub mod combinat;
pub mod deciders;
pub mod decision;
pub mod error;
pub mod factorize;
pub mod instance;
pub mod poly;
pub mod reductions;

pub use decision::{Answer, Decision, FactorWitness, Stats, SubsetWitness, Witness};
pub use error::{Error, Result};
pub use factorize::{factorize, integer_roots, is_irreducible, kronecker_factor, DivisorCursor, IrreducibleFactorization};
pub use poly::{elementary_symmetric, expand_from_roots, Poly, RootList};

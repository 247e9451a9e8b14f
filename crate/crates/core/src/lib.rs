//! Exact ordered algebraic structures and constructive convergence.
//!
//! The crate is organised bottom-up:
//!
//! * [`order`]: the ordered-structure traits, witness objects and the
//!   density/shrinkability constructions built from them.
//! * [`instances`]: exact carriers (ℚ, ℤ, ℤ[1/p], ℤ(X), the max monoid, the
//!   lexicographic semidirect group, DeMarr ℚ(i), ideals of ℤ, the orthant
//!   module and the valuation semiring `G₀`) plus the string-keyed registry.
//! * [`metric`]: magma-valued metrics and norms.
//! * [`sequences`]: sequences with convergence and Cauchy certificates and the
//!   operations that transform one certificate into another.
//! * [`series`]: partial sums, condensation, geometric series, ratio and
//!   Bernoulli checks.
//! * [`pseudonorm`]: hemiring-valued pseudonorms, finite-dimensional algebras
//!   and p-adic norms.
//! * [`cli`]: the term DSL, run configuration, suites and report output used by
//!   the `ordalab` binary.
//!
//! Every value is exact. Universal statements are checked on finite grids;
//! each individual check is decisive.

pub mod cli;
pub mod error;
pub mod instances;
pub mod metric;
pub mod order;
pub mod pseudonorm;
pub mod sequences;
pub mod series;

pub use error::{Error, Result};

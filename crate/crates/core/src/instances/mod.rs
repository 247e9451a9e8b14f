//! Exact realizations of the concrete ordered structures.
//!
//! Every instance implements the algebra traits of [`crate::order`] plus
//! [`Instance`], which ships the finite grids used by sampled checks and the
//! witnesses the structure supports. A missing witness means the capability
//! is absent, never that a search failed.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, RngCore};

use crate::order::{ArchimedeanWitness, CompatMode, DensityWitness, JoinWitness, Ordered, ShrinkWitness};

mod gaussian;
mod ideal;
mod lex;
mod orthant;
mod poly;
mod ratfunc;
mod rational;
mod registry;
mod tropical;
mod valuation;

pub use gaussian::{Gaussian, GaussianRationals};
pub use ideal::{Ideal, IdealsZ};
pub use lex::{LexElem, LexGroup};
pub use orthant::{OrthantModule, Pair};
pub use poly::Poly;
pub use ratfunc::{RatFunc, RationalFunctions};
pub use rational::{Integers, Localized, Rationals};
pub use registry::{lookup, registry, Structure};
pub use tropical::{Trop, Tropical};
pub use valuation::{ValueGroup, ValueGroupSemiring};

/// Grids, sampling and witnesses of a registered structure.
pub trait Instance: Ordered + Clone + 'static {
    /// One-line description for `ordalab list`.
    fn description(&self) -> &'static str;

    /// Strictly decreasing positive elements; the domain of every sampled
    /// "for all ε > 0".
    fn epsilon_grid(&self) -> Vec<Self::Elem>;

    /// Positive elements of assorted sizes, used as bounds `M` and as the
    /// targets `y` of Archimedean checks.
    fn magnitude_grid(&self) -> Vec<Self::Elem> {
        self.epsilon_grid()
    }

    /// A random element for property checks.
    fn sample(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn density(&self) -> Option<DensityWitness<Self::Elem>> {
        None
    }

    fn shrink(&self) -> Option<ShrinkWitness<Self::Elem>> {
        None
    }

    fn archimedean(&self) -> Option<ArchimedeanWitness<Self::Elem>> {
        None
    }

    fn join(&self) -> Option<JoinWitness<Self::Elem>> {
        None
    }

    /// Strict for groups, weak for the others (max-monoids and ideals only
    /// preserve `≤`).
    fn compat_mode(&self) -> CompatMode {
        if self.flags().group {
            CompatMode::Strict
        } else {
            CompatMode::Weak
        }
    }

    /// Image of a rational constant, when the carrier contains it.
    fn embed(&self, _q: &BigRational) -> Option<Self::Elem> {
        None
    }

    /// Named constants usable in term expressions (`X`, `i`).
    fn symbols(&self) -> Vec<(&'static str, Self::Elem)> {
        Vec::new()
    }
}

/// `n/d` as a big rational. Panics on `d = 0`.
pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `1/2^k`.
pub fn inv_pow2(k: u32) -> BigRational {
    BigRational::new(BigInt::from(1), BigInt::from(1) << k)
}

/// Small random rational with numerator in `-30..=30` and denominator in
/// `1..=12`.
pub fn random_rational(rng: &mut dyn RngCore) -> BigRational {
    let n: i64 = rng.gen_range(-30..=30);
    let d: i64 = rng.gen_range(1..=12);
    q(n, d)
}

/// Small random positive rational.
pub fn random_positive_rational(rng: &mut dyn RngCore) -> BigRational {
    let n: i64 = rng.gen_range(1..=30);
    let d: i64 = rng.gen_range(1..=12);
    q(n, d)
}

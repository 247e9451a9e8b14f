//! Ideals of ℤ: `nℤ` encoded by `n ≥ 0`, ordered by inclusion.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, RngCore};

use super::Instance;
use crate::order::{Hemiring, JoinWitness, Magma, OrderResult, Ordered, Semiring, StructureFlags};

/// The ideal `nℤ`, `n ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal(BigInt);

impl Ideal {
    /// Generator sign is dropped: `(−n)ℤ = nℤ`.
    pub fn new(n: impl Into<BigInt>) -> Self {
        let n: BigInt = n.into();
        Ideal(if n < BigInt::zero() { -n } else { n })
    }

    pub fn generator(&self) -> &BigInt {
        &self.0
    }

    /// `self ⊆ other`, i.e. the generator of `other` divides that of `self`.
    pub fn is_subset(&self, other: &Ideal) -> bool {
        if other.0.is_zero() {
            return self.0.is_zero();
        }
        self.0.is_multiple_of(&other.0)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Z", self.0)
    }
}

/// `(Id(ℤ), +, ·, ⊆)` with `I + J = gcd` and `IJ = product`.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdealsZ;

impl IdealsZ {
    /// Ideals strictly between `inner` and `outer` among generators up to
    /// `bound`.
    pub fn strictly_between(&self, inner: &Ideal, outer: &Ideal, bound: u64) -> Vec<Ideal> {
        (0..=bound)
            .map(Ideal::new)
            .filter(|s| self.lt(inner, s) && self.lt(s, outer))
            .collect()
    }
}

impl Magma for IdealsZ {
    type Elem = Ideal;

    fn key(&self) -> String {
        "Id(Z)".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::semiring().with_join()
    }

    fn op(&self, a: &Ideal, b: &Ideal) -> Ideal {
        Ideal(a.0.gcd(&b.0))
    }

    fn zero(&self) -> Ideal {
        Ideal(BigInt::zero())
    }
}

impl Ordered for IdealsZ {
    fn compare(&self, a: &Ideal, b: &Ideal) -> OrderResult {
        match (a.is_subset(b), b.is_subset(a)) {
            (true, true) => OrderResult::Equal,
            (true, false) => OrderResult::Less,
            (false, true) => OrderResult::Greater,
            (false, false) => OrderResult::Incomparable,
        }
    }
}

impl Hemiring for IdealsZ {
    fn mul(&self, a: &Ideal, b: &Ideal) -> Ideal {
        Ideal(&a.0 * &b.0)
    }
}

impl Semiring for IdealsZ {
    fn one(&self) -> Ideal {
        Ideal(BigInt::one())
    }
}

impl Instance for IdealsZ {
    fn description(&self) -> &'static str {
        "ideals of the integers under gcd and product, ordered by inclusion"
    }

    fn epsilon_grid(&self) -> Vec<Ideal> {
        [1, 2, 4, 8, 16].into_iter().map(Ideal::new).collect()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Ideal {
        Ideal::new(rng.gen_range(0..=24))
    }

    /// The smallest ideal containing both is their sum.
    fn join(&self) -> Option<JoinWitness<Ideal>> {
        let s = *self;
        Some(JoinWitness::new(move |a: &Ideal, b: &Ideal| s.op(a, b)))
    }
}

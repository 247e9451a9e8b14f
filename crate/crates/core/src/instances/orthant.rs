//! ℚ² ordered by the non-negative orthant, as an ordered ℚ-module.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::RngCore;

use super::{inv_pow2, q, random_rational, Instance, Rationals};
use crate::order::{
    module_density_witness, DensityWitness, Group, JoinWitness, Magma, Module, OrderResult, Ordered, StructureFlags,
};

/// A point `(x, y)` of ℚ².
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair(pub [BigRational; 2]);

impl Pair {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Pair([x, y])
    }

    pub fn int(x: i64, y: i64) -> Self {
        Pair::new(q(x, 1), q(y, 1))
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0[0], self.0[1])
    }
}

/// `u ≤ v` iff `v − u` lies in the closed non-negative orthant.
#[derive(Debug, Clone, Copy, Default)]
pub struct OrthantModule;

impl Magma for OrthantModule {
    type Elem = Pair;

    fn key(&self) -> String {
        "Q2".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::group().commutative().with_join()
    }

    fn op(&self, u: &Pair, v: &Pair) -> Pair {
        Pair::new(&u.0[0] + &v.0[0], &u.0[1] + &v.0[1])
    }

    fn zero(&self) -> Pair {
        Pair::new(BigRational::zero(), BigRational::zero())
    }
}

impl Ordered for OrthantModule {
    fn compare(&self, u: &Pair, v: &Pair) -> OrderResult {
        let dx = &v.0[0] - &u.0[0];
        let dy = &v.0[1] - &u.0[1];
        match (dx.is_zero() && dy.is_zero(), !dx.is_negative() && !dy.is_negative(), !dx.is_positive() && !dy.is_positive()) {
            (true, _, _) => OrderResult::Equal,
            (false, true, _) => OrderResult::Less,
            (false, false, true) => OrderResult::Greater,
            _ => OrderResult::Incomparable,
        }
    }
}

impl Group for OrthantModule {
    fn neg(&self, u: &Pair) -> Pair {
        Pair::new(-&u.0[0], -&u.0[1])
    }
}

impl Module for OrthantModule {
    type Scalar = BigRational;

    fn scale(&self, r: &BigRational, m: &Pair) -> Pair {
        Pair::new(r * &m.0[0], r * &m.0[1])
    }
}

impl Instance for OrthantModule {
    fn description(&self) -> &'static str {
        "pairs of rationals ordered by the non-negative orthant (ordered torsion-free module over Q)"
    }

    fn epsilon_grid(&self) -> Vec<Pair> {
        (1..=12).map(|k| Pair::new(inv_pow2(k), inv_pow2(k))).collect()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Pair {
        Pair::new(random_rational(rng), random_rational(rng))
    }

    /// `m ↦ ((α − α²)m, α²m)` with `α = 1/2`.
    fn density(&self) -> Option<DensityWitness<Pair>> {
        Some(DensityWitness::new(|m: &Pair| {
            module_density_witness(&Rationals, &OrthantModule, &q(1, 2), m)
        }))
    }

    fn join(&self) -> Option<JoinWitness<Pair>> {
        Some(JoinWitness::new(|u: &Pair, v: &Pair| {
            Pair::new(u.0[0].clone().max(v.0[0].clone()), u.0[1].clone().max(v.0[1].clone()))
        }))
    }
}

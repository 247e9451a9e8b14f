//! The max-monoid (ℚ ∪ {−∞}, max, −∞).

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, RngCore};

use super::{q, random_rational, Instance};
use crate::order::{DensityWitness, JoinWitness, Magma, OrderResult, Ordered, StructureFlags};
use crate::Error;

/// A rational or `−∞`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Trop {
    NegInf,
    Fin(BigRational),
}

impl Trop {
    pub fn fin(n: i64, d: i64) -> Self {
        Trop::Fin(q(n, d))
    }
}

impl PartialOrd for Trop {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Trop {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Trop::NegInf, Trop::NegInf) => Ordering::Equal,
            (Trop::NegInf, _) => Ordering::Less,
            (_, Trop::NegInf) => Ordering::Greater,
            (Trop::Fin(a), Trop::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Trop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Trop::NegInf => f.write_str("-inf"),
            Trop::Fin(x) => write!(f, "{x}"),
        }
    }
}

/// Totally ordered commutative monoid under `max`. Every finite element is
/// positive, and `split(ε) = (ε − 1, ε − 1)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Tropical;

impl Magma for Tropical {
    type Elem = Trop;

    fn key(&self) -> String {
        "Trop".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::monoid().commutative().totally_ordered()
    }

    fn op(&self, a: &Trop, b: &Trop) -> Trop {
        a.max(b).clone()
    }

    fn zero(&self) -> Trop {
        Trop::NegInf
    }
}

impl Ordered for Tropical {
    fn compare(&self, a: &Trop, b: &Trop) -> OrderResult {
        a.cmp(b).into()
    }
}

impl Instance for Tropical {
    fn description(&self) -> &'static str {
        "rationals with -inf under max, a dense max-monoid"
    }

    fn epsilon_grid(&self) -> Vec<Trop> {
        [(8, 1), (4, 1), (2, 1), (1, 1), (1, 2), (0, 1), (-1, 1), (-5, 2), (-10, 1)]
            .into_iter()
            .map(|(n, d)| Trop::fin(n, d))
            .collect()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Trop {
        if rng.gen_ratio(1, 10) {
            Trop::NegInf
        } else {
            Trop::Fin(random_rational(rng))
        }
    }

    fn density(&self) -> Option<DensityWitness<Trop>> {
        Some(DensityWitness::new(|eps: &Trop| match eps {
            Trop::NegInf => Err(Error::not_positive(eps)),
            Trop::Fin(x) => {
                let part = Trop::Fin(x - BigRational::one());
                Ok((part.clone(), part))
            }
        }))
    }

    fn join(&self) -> Option<JoinWitness<Trop>> {
        Some(JoinWitness::new(|a: &Trop, b: &Trop| a.max(b).clone()))
    }

    fn embed(&self, q: &BigRational) -> Option<Trop> {
        Some(Trop::Fin(q.clone()))
    }
}

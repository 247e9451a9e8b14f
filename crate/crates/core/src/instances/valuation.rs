//! The valuation semiring `G₀ = G ∪ {0}` over the value group `G = (ℤ, +)`
//! written multiplicatively, with operations `(max, ·)`.

use std::cmp::Ordering;
use std::fmt;

use rand::{Rng, RngCore};

use super::Instance;
use crate::order::{
    division_shrink_witness, DensityWitness, Hemiring, JoinWitness, Magma, OrderResult, Ordered, Semiring,
    ShrinkWitness, StructureFlags,
};
use crate::Error;

/// `0` or `g^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueGroup {
    Zero,
    Pow(i64),
}

impl PartialOrd for ValueGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ValueGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ValueGroup::Zero, ValueGroup::Zero) => Ordering::Equal,
            (ValueGroup::Zero, _) => Ordering::Less,
            (_, ValueGroup::Zero) => Ordering::Greater,
            (ValueGroup::Pow(a), ValueGroup::Pow(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for ValueGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValueGroup::Zero => f.write_str("0"),
            ValueGroup::Pow(e) => write!(f, "g^{e}"),
        }
    }
}

/// `(G₀, max, ·)`: a totally ordered division semiring with `0 < g`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ValueGroupSemiring;

impl Magma for ValueGroupSemiring {
    type Elem = ValueGroup;

    fn key(&self) -> String {
        "G0".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::semiring().totally_ordered()
    }

    fn op(&self, a: &ValueGroup, b: &ValueGroup) -> ValueGroup {
        *a.max(b)
    }

    fn zero(&self) -> ValueGroup {
        ValueGroup::Zero
    }
}

impl Ordered for ValueGroupSemiring {
    fn compare(&self, a: &ValueGroup, b: &ValueGroup) -> OrderResult {
        a.cmp(b).into()
    }
}

impl Hemiring for ValueGroupSemiring {
    fn mul(&self, a: &ValueGroup, b: &ValueGroup) -> ValueGroup {
        match (a, b) {
            (ValueGroup::Pow(x), ValueGroup::Pow(y)) => ValueGroup::Pow(x + y),
            _ => ValueGroup::Zero,
        }
    }
}

impl Semiring for ValueGroupSemiring {
    fn one(&self) -> ValueGroup {
        ValueGroup::Pow(0)
    }

    fn try_inv(&self, a: &ValueGroup) -> Option<ValueGroup> {
        match a {
            ValueGroup::Pow(e) => Some(ValueGroup::Pow(-e)),
            ValueGroup::Zero => None,
        }
    }
}

impl Instance for ValueGroupSemiring {
    fn description(&self) -> &'static str {
        "valuation semiring over the value group Z written multiplicatively, operations (max, *)"
    }

    fn epsilon_grid(&self) -> Vec<ValueGroup> {
        (-8..=3).rev().map(ValueGroup::Pow).collect()
    }

    fn magnitude_grid(&self) -> Vec<ValueGroup> {
        [-2, 0, 1, 5].into_iter().map(ValueGroup::Pow).collect()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> ValueGroup {
        if rng.gen_ratio(1, 10) {
            ValueGroup::Zero
        } else {
            ValueGroup::Pow(rng.gen_range(-6..=6))
        }
    }

    /// `g^e ↦ (g^{e−1}, g^{e−1})`.
    fn density(&self) -> Option<DensityWitness<ValueGroup>> {
        Some(DensityWitness::new(|eps: &ValueGroup| match eps {
            ValueGroup::Pow(e) => Ok((ValueGroup::Pow(e - 1), ValueGroup::Pow(e - 1))),
            ValueGroup::Zero => Err(Error::not_positive(eps)),
        }))
    }

    fn shrink(&self) -> Option<ShrinkWitness<ValueGroup>> {
        division_shrink_witness(self, &self.density()?).ok()
    }

    fn join(&self) -> Option<JoinWitness<ValueGroup>> {
        Some(JoinWitness::new(|a: &ValueGroup, b: &ValueGroup| *a.max(b)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{check_density, check_shrink, verify_compatibility, verify_mul_compatibility, CompatMode};

    #[test]
    fn shrink_through_group_inverse() {
        let s = ValueGroupSemiring;
        let w = s.shrink().unwrap();
        let r = w.shrink(&ValueGroup::Pow(2), &ValueGroup::Pow(5)).unwrap();
        // beta = g^1, M^-1 = g^-5
        assert_eq!(r.left, ValueGroup::Pow(-4));
        assert_eq!(r.right, ValueGroup::Pow(-4));
        assert!(w.shrink(&ValueGroup::Zero, &ValueGroup::Pow(1)).is_err());
        assert!(w.shrink(&ValueGroup::Pow(1), &ValueGroup::Zero).is_err());
    }

    #[test]
    fn semiring_laws_and_witnesses() {
        let s = ValueGroupSemiring;
        let all: Vec<_> = std::iter::once(ValueGroup::Zero).chain((-3..=3).map(ValueGroup::Pow)).collect();
        for a in &all {
            assert!(s.le(&s.zero(), a));
            assert_eq!(s.mul(a, &s.zero()), s.zero());
            for b in &all {
                for c in &all {
                    assert_eq!(s.mul(a, &s.op(b, c)), s.op(&s.mul(a, b), &s.mul(a, c)));
                }
            }
        }
        assert!(verify_compatibility(&s, &all, CompatMode::Weak).is_empty());
        assert!(verify_mul_compatibility(&s, &all, CompatMode::Weak).is_empty());
        assert!(check_density(&s, &s.density().unwrap(), &s.epsilon_grid()).is_empty());
        assert!(check_shrink(&s, &s.shrink().unwrap(), &s.epsilon_grid(), &s.magnitude_grid()).is_empty());
    }
}

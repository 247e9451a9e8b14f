//! Non-abelian lexicographically ordered group on ℤ × ℚ with the action
//! `q ↦ q·2^a`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::{inv_pow2, q, random_rational, Instance};
use crate::order::{DensityWitness, Group, JoinWitness, Magma, OrderResult, Ordered, StructureFlags};
use crate::Error;

/// The pair `(a, q)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexElem {
    pub a: i64,
    pub q: BigRational,
}

impl LexElem {
    pub fn new(a: i64, q: BigRational) -> Self {
        LexElem { a, q }
    }

    pub fn int(a: i64, q_num: i64) -> Self {
        LexElem::new(a, BigRational::from_integer(q_num.into()))
    }
}

impl PartialOrd for LexElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LexElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a.cmp(&other.a).then_with(|| self.q.cmp(&other.q))
    }
}

impl fmt::Display for LexElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.q)
    }
}

/// `2^a` for any integer `a`.
pub fn pow2(a: i64) -> BigRational {
    let magnitude = BigInt::one() << a.unsigned_abs();
    if a >= 0 {
        BigRational::from_integer(magnitude)
    } else {
        BigRational::new(BigInt::one(), magnitude)
    }
}

/// `(a₁, q₁)∘(a₂, q₂) = (a₁ + a₂, q₁·2^{a₂} + q₂)` with the lexicographic
/// order.
#[derive(Debug, Clone, Copy, Default)]
pub struct LexGroup;

impl Magma for LexGroup {
    type Elem = LexElem;

    fn key(&self) -> String {
        "Lex".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::group().totally_ordered()
    }

    fn op(&self, u: &LexElem, v: &LexElem) -> LexElem {
        LexElem::new(u.a + v.a, &u.q * pow2(v.a) + &v.q)
    }

    fn zero(&self) -> LexElem {
        LexElem::new(0, BigRational::zero())
    }
}

impl Ordered for LexGroup {
    fn compare(&self, u: &LexElem, v: &LexElem) -> OrderResult {
        u.cmp(v).into()
    }
}

impl Group for LexGroup {
    /// `(−a, −q·2^{−a})`.
    fn neg(&self, u: &LexElem) -> LexElem {
        LexElem::new(-u.a, -(&u.q * pow2(-u.a)))
    }
}

impl Instance for LexGroup {
    fn description(&self) -> &'static str {
        "non-abelian lexicographic group (a, q), action q*2^a, dense"
    }

    fn epsilon_grid(&self) -> Vec<LexElem> {
        std::iter::once(LexElem::int(1, 0))
            .chain((1..=12).map(|k| LexElem::new(0, inv_pow2(k))))
            .collect()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> LexElem {
        LexElem::new(rng.gen_range(-3..=3), random_rational(rng))
    }

    /// The case split on the first coordinate: `a > 0` splits as
    /// `((0, 1), (0, 1))`, `a = 0` as `((0, 2q/5), (0, 2q/5))`.
    fn density(&self) -> Option<DensityWitness<LexElem>> {
        Some(DensityWitness::new(|eps: &LexElem| {
            if eps.a > 0 {
                let part = LexElem::int(0, 1);
                Ok((part.clone(), part))
            } else if eps.a == 0 && eps.q.is_positive() {
                let part = LexElem::new(0, &eps.q * q(2, 5));
                Ok((part.clone(), part))
            } else {
                Err(Error::not_positive(eps))
            }
        }))
    }

    fn join(&self) -> Option<JoinWitness<LexElem>> {
        Some(JoinWitness::new(|u: &LexElem, v: &LexElem| u.max(v).clone()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{check_density, group_abs, verify_compatibility, CompatMode};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn compose_and_inverse_examples() {
        let g = LexGroup;
        assert_eq!(g.op(&LexElem::int(1, 0), &LexElem::int(0, 1)), LexElem::int(1, 1));
        assert_eq!(g.op(&LexElem::int(0, 1), &LexElem::int(1, 0)), LexElem::int(1, 2));
        let u = LexElem::new(3, q(-2, 7));
        assert_eq!(g.op(&u, &g.zero()), u);
        assert_eq!(g.op(&g.zero(), &u), u);
        assert_eq!(g.neg(&LexElem::int(1, 2)), LexElem::int(-1, -1));
        assert_eq!(g.op(&u, &g.neg(&u)), g.zero());
        assert_eq!(g.op(&g.neg(&u), &u), g.zero());
    }

    #[test]
    fn absolute_value() {
        assert_eq!(group_abs(&LexGroup, &LexElem::int(-1, 0)).unwrap(), LexElem::int(1, 0));
    }

    #[test]
    fn associative_and_compatible_on_random_triples() {
        let g = LexGroup;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let sample: Vec<_> = (0..24).map(|_| g.sample(&mut rng)).collect();
        for a in &sample {
            for b in &sample {
                for c in &sample {
                    assert_eq!(g.op(&g.op(a, b), c), g.op(a, &g.op(b, c)));
                }
            }
        }
        assert!(verify_compatibility(&g, &sample, CompatMode::Strict).is_empty());
    }

    #[test]
    fn density_case_split() {
        let g = LexGroup;
        let w = g.density().unwrap();
        let (b, c) = w.split(&LexElem::int(2, -5)).unwrap();
        assert_eq!(g.op(&b, &c), LexElem::int(0, 2));
        let (b, c) = w.split(&LexElem::new(0, q(1, 3))).unwrap();
        assert_eq!(g.op(&b, &c), LexElem::new(0, q(4, 15)));
        assert!(w.split(&LexElem::int(-1, 9)).is_err());
        assert!(check_density(&g, &w, &g.epsilon_grid()).is_empty());
    }
}

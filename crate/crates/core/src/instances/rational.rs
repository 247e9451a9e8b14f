//! ℚ, ℤ and the localizations ℤ[1/p].

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};

use super::{inv_pow2, q, random_rational, Instance};
use crate::order::{
    division_shrink_witness, ArchimedeanWitness, DensityWitness, Group, Hemiring, JoinWitness, Magma, OrderResult,
    Ordered, Semiring, ShrinkWitness, Shrunk, StructureFlags,
};
use crate::Error;

/// Least natural `n` with `n·x > y`, for positive `x`.
fn rational_bound(x: &BigRational, y: &BigRational) -> crate::Result<u64> {
    if !x.is_positive() {
        return Err(Error::not_positive(x));
    }
    let n = (y / x).floor().to_integer() + BigInt::one();
    if n.is_negative() {
        return Ok(0);
    }
    n.to_u64()
        .ok_or_else(|| Error::InvalidArgument(format!("archimedean bound {n} exceeds u64")))
}

fn max_join() -> JoinWitness<BigRational> {
    JoinWitness::new(|a: &BigRational, b: &BigRational| a.max(b).clone())
}

/// The ordered field (ℚ, +, ·, ≤).
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Magma for Rationals {
    type Elem = BigRational;

    fn key(&self) -> String {
        "Q".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::field().totally_ordered()
    }

    fn op(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
}

impl Ordered for Rationals {
    fn compare(&self, a: &BigRational, b: &BigRational) -> OrderResult {
        a.cmp(b).into()
    }
}

impl Group for Rationals {
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
}

impl Hemiring for Rationals {
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
}

impl Semiring for Rationals {
    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn try_inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }

    fn from_nat(&self, n: u64) -> BigRational {
        BigRational::from_integer(n.into())
    }
}

impl Instance for Rationals {
    fn description(&self) -> &'static str {
        "rational numbers, totally ordered field"
    }

    fn epsilon_grid(&self) -> Vec<BigRational> {
        (1..=12).map(inv_pow2).collect()
    }

    fn magnitude_grid(&self) -> Vec<BigRational> {
        vec![q(1, 7), q(1, 2), q(1, 1), q(5, 1), q(17, 3), q(100, 1)]
    }

    fn sample(&self, rng: &mut dyn RngCore) -> BigRational {
        random_rational(rng)
    }

    fn density(&self) -> Option<DensityWitness<BigRational>> {
        Some(DensityWitness::new(|eps: &BigRational| {
            if !eps.is_positive() {
                return Err(Error::not_positive(eps));
            }
            let part = eps * q(2, 5);
            Ok((part.clone(), part))
        }))
    }

    fn shrink(&self) -> Option<ShrinkWitness<BigRational>> {
        division_shrink_witness(self, &self.density()?).ok()
    }

    fn archimedean(&self) -> Option<ArchimedeanWitness<BigRational>> {
        Some(ArchimedeanWitness::new(rational_bound))
    }

    fn join(&self) -> Option<JoinWitness<BigRational>> {
        Some(max_join())
    }

    fn embed(&self, q: &BigRational) -> Option<BigRational> {
        Some(q.clone())
    }
}

/// The ordered ring (ℤ, +, ·, ≤). Not dense.
#[derive(Debug, Clone, Copy, Default)]
pub struct Integers;

impl Magma for Integers {
    type Elem = BigInt;

    fn key(&self) -> String {
        "Z".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::ring().totally_ordered()
    }

    fn op(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
}

impl Ordered for Integers {
    fn compare(&self, a: &BigInt, b: &BigInt) -> OrderResult {
        a.cmp(b).into()
    }
}

impl Group for Integers {
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
}

impl Hemiring for Integers {
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
}

impl Semiring for Integers {
    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn try_inv(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }

    fn from_nat(&self, n: u64) -> BigInt {
        n.into()
    }
}

impl Instance for Integers {
    fn description(&self) -> &'static str {
        "integers, totally ordered ring, not dense"
    }

    fn epsilon_grid(&self) -> Vec<BigInt> {
        [16, 8, 4, 2, 1].into_iter().map(BigInt::from).collect()
    }

    fn magnitude_grid(&self) -> Vec<BigInt> {
        [1, 3, 10, 250].into_iter().map(BigInt::from).collect()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> BigInt {
        BigInt::from(rng.gen_range(-50i64..=50))
    }

    fn archimedean(&self) -> Option<ArchimedeanWitness<BigInt>> {
        Some(ArchimedeanWitness::new(|x: &BigInt, y: &BigInt| {
            rational_bound(&BigRational::from_integer(x.clone()), &BigRational::from_integer(y.clone()))
        }))
    }

    fn join(&self) -> Option<JoinWitness<BigInt>> {
        Some(JoinWitness::new(|a: &BigInt, b: &BigInt| a.max(b).clone()))
    }

    fn embed(&self, q: &BigRational) -> Option<BigInt> {
        q.is_integer().then(|| q.to_integer())
    }
}

/// ℤ[1/p] = {m/pⁿ}, stored as a reduced rational whose denominator is a
/// power of `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Localized {
    p: u32,
}

impl Localized {
    /// `p` must be prime.
    pub fn new(p: u32) -> crate::Result<Self> {
        if !crate::pseudonorm::is_prime(u64::from(p)) {
            return Err(Error::InvalidArgument(format!("{p} is not prime")));
        }
        Ok(Localized { p })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    fn is_power_of_p(&self, n: &BigInt) -> bool {
        let p = BigInt::from(self.p);
        let mut n = n.abs();
        if n.is_zero() {
            return false;
        }
        while !n.is_one() {
            let (quot, rem) = n.div_rem(&p);
            if !rem.is_zero() {
                return false;
            }
            n = quot;
        }
        true
    }

    /// Membership test for a rational.
    pub fn contains(&self, x: &BigRational) -> bool {
        self.is_power_of_p(x.denom())
    }

    /// `1/pⁿ`.
    pub fn inv_pow(&self, n: u32) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(self.p).pow(n))
    }

    /// `α_l = α_r = 1/pⁿ` for the least `n` with `M/pⁿ < α`.
    pub fn shrink_exponent(&self, alpha: &BigRational, m: &BigRational) -> crate::Result<u32> {
        if !alpha.is_positive() {
            return Err(Error::not_positive(alpha));
        }
        if !m.is_positive() {
            return Err(Error::not_positive(m));
        }
        let mut n = 0u32;
        let mut scaled = m.clone();
        let p = BigRational::from_integer(self.p.into());
        while scaled >= *alpha {
            scaled /= &p;
            n += 1;
        }
        Ok(n)
    }
}

impl Magma for Localized {
    type Elem = BigRational;

    fn key(&self) -> String {
        format!("Z[1/{}]", self.p)
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::ring().totally_ordered()
    }

    fn op(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
}

impl Ordered for Localized {
    fn compare(&self, a: &BigRational, b: &BigRational) -> OrderResult {
        a.cmp(b).into()
    }
}

impl Group for Localized {
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
}

impl Hemiring for Localized {
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
}

impl Semiring for Localized {
    fn one(&self) -> BigRational {
        BigRational::one()
    }

    /// Units are exactly `±pᵏ`, `k ∈ ℤ`.
    fn try_inv(&self, a: &BigRational) -> Option<BigRational> {
        (self.is_power_of_p(a.numer()) && self.contains(a)).then(|| a.recip())
    }

    fn from_nat(&self, n: u64) -> BigRational {
        BigRational::from_integer(n.into())
    }
}

impl Instance for Localized {
    fn description(&self) -> &'static str {
        "fractions m/p^n with integer m, dense and shrinkable"
    }

    fn epsilon_grid(&self) -> Vec<BigRational> {
        (1..=8).map(|k| self.inv_pow(k)).collect()
    }

    fn magnitude_grid(&self) -> Vec<BigRational> {
        let p = BigRational::from_integer(self.p.into());
        vec![self.inv_pow(2), BigRational::one(), p.clone() * q(3, 1), &p * &p * q(7, 1)]
    }

    fn sample(&self, rng: &mut dyn RngCore) -> BigRational {
        let m: i64 = rng.gen_range(-40..=40);
        let n: u32 = rng.gen_range(0..=4);
        BigRational::from_integer(m.into()) * self.inv_pow(n)
    }

    fn density(&self) -> Option<DensityWitness<BigRational>> {
        let p = i64::from(self.p);
        Some(DensityWitness::new(move |eps: &BigRational| {
            if !eps.is_positive() {
                return Err(Error::not_positive(eps));
            }
            Ok((eps * q(1, p * p), eps * q(p - 1, p * p)))
        }))
    }

    fn shrink(&self) -> Option<ShrinkWitness<BigRational>> {
        let this = *self;
        Some(ShrinkWitness::new(move |alpha: &BigRational, m: &BigRational| {
            let n = this.shrink_exponent(alpha, m)?;
            let a = this.inv_pow(n);
            Ok(Shrunk {
                left: a.clone(),
                right: a,
            })
        }))
    }

    fn archimedean(&self) -> Option<ArchimedeanWitness<BigRational>> {
        Some(ArchimedeanWitness::new(rational_bound))
    }

    fn join(&self) -> Option<JoinWitness<BigRational>> {
        Some(max_join())
    }

    fn embed(&self, q: &BigRational) -> Option<BigRational> {
        self.contains(q).then(|| q.clone())
    }
}

//! The ordered field ℤ(X) of rational functions with X infinitely large.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::{inv_pow2, Instance, Poly};
use crate::order::{
    division_shrink_witness, DensityWitness, Group, Hemiring, JoinWitness, Magma, OrderResult, Ordered, Semiring,
    ShrinkWitness, StructureFlags,
};
use crate::{Error, Result};

/// `num/den` in lowest terms with `lc(den) > 0`; zero is `0/1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Evaluation("rational function with zero denominator".into()));
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        if den.lc().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn x() -> Self {
        RatFunc {
            num: Poly::x_pow(1),
            den: Poly::one(),
        }
    }

    /// `1/X^k`.
    pub fn inv_x_pow(k: usize) -> Self {
        RatFunc {
            num: Poly::one(),
            den: Poly::x_pow(k),
        }
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::canonical(Poly::constant(q.numer().clone()), Poly::constant(q.denom().clone()))
    }

    pub fn from_int(n: i64) -> Self {
        RatFunc {
            num: Poly::constant(BigInt::from(n)),
            den: Poly::one(),
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The rational value when the function is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(BigRational::zero()),
            (Some(0), Some(0)) => Some(BigRational::new(self.num.lc(), self.den.lc())),
            _ => None,
        }
    }

    /// Order of vanishing at infinity, `deg den − deg num`; `None` for zero.
    /// Positive exactly for infinitesimals.
    pub fn ord_inf(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        Some(self.den.degree().unwrap_or(0) as i64 - n)
    }

    pub fn sign(&self) -> Ordering {
        self.num.lc().sign_cmp()
    }

    pub fn add(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::canonical(self.num.add(&other.num), self.den.clone());
        }
        // c·X^a and c·X^b: bring both over the larger power
        if self.den.is_monomial() && other.den.is_monomial() && self.den.lc() == other.den.lc() {
            let (a, b) = (self.den.degree().unwrap_or(0), other.den.degree().unwrap_or(0));
            let (lo, hi) = if a <= b { (self, other) } else { (other, self) };
            let gap = a.abs_diff(b);
            return Self::canonical(lo.num.shift_up(gap).add(&hi.num), hi.den.clone());
        }
        Self::canonical(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFunc) -> RatFunc {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFunc) -> RatFunc {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn recip(&self) -> Option<RatFunc> {
        (!self.is_zero()).then(|| Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &RatFunc) -> Option<RatFunc> {
        other.recip().map(|r| self.mul(&r))
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        self.cmp(&BigInt::zero())
    }
}

/// `f < g` iff the leading coefficient of `g − f` is positive. Denominators
/// have positive leading coefficients, so only the cross numerator matters.
pub(crate) fn ratfunc_compare(f: &RatFunc, g: &RatFunc) -> OrderResult {
    let cross = g.num.mul(&f.den).sub(&f.num.mul(&g.den));
    match cross.lc().sign_cmp() {
        Ordering::Greater => OrderResult::Less,
        Ordering::Less => OrderResult::Greater,
        Ordering::Equal => OrderResult::Equal,
    }
}

fn needs_parens(p: &Poly) -> bool {
    p.term_count() > 1 || (p.degree() > Some(0) && !p.lc().abs().is_one())
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if needs_parens(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

/// ℤ(X) ordered by the sign of leading coefficients.
#[derive(Debug, Clone, Copy, Default)]
pub struct RationalFunctions;

impl Magma for RationalFunctions {
    type Elem = RatFunc;

    fn key(&self) -> String {
        "Z(X)".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::field().totally_ordered()
    }

    fn op(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.add(b)
    }

    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }
}

impl Ordered for RationalFunctions {
    fn compare(&self, a: &RatFunc, b: &RatFunc) -> OrderResult {
        ratfunc_compare(a, b)
    }

    fn is_positive(&self, a: &RatFunc) -> bool {
        a.sign() == Ordering::Greater
    }
}

impl Group for RationalFunctions {
    fn neg(&self, a: &RatFunc) -> RatFunc {
        a.neg()
    }
}

impl Hemiring for RationalFunctions {
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        a.mul(b)
    }
}

impl Semiring for RationalFunctions {
    fn one(&self) -> RatFunc {
        RatFunc::one()
    }

    fn try_inv(&self, a: &RatFunc) -> Option<RatFunc> {
        a.recip()
    }

    fn from_nat(&self, n: u64) -> RatFunc {
        RatFunc {
            num: Poly::constant(BigInt::from(n)),
            den: Poly::one(),
        }
    }
}

fn random_poly(rng: &mut dyn RngCore, max_degree: usize) -> Poly {
    let degree = rng.gen_range(0..=max_degree);
    Poly::new((0..=degree).map(|_| BigInt::from(rng.gen_range(-5i64..=5))).collect())
}

impl Instance for RationalFunctions {
    fn description(&self) -> &'static str {
        "rational functions over the integers, X infinitely large (non-Archimedean field)"
    }

    fn epsilon_grid(&self) -> Vec<RatFunc> {
        let rationals = (1..=8).map(|k| RatFunc::from_rational(&inv_pow2(k)));
        let infinitesimals = (1..=8).map(RatFunc::inv_x_pow);
        rationals.chain(infinitesimals).collect()
    }

    fn magnitude_grid(&self) -> Vec<RatFunc> {
        vec![
            RatFunc::inv_x_pow(1),
            RatFunc::from_rational(&super::q(1, 2)),
            RatFunc::one(),
            RatFunc::from_int(3),
            RatFunc::x(),
            RatFunc::x().mul(&RatFunc::x()).add(&RatFunc::one()),
        ]
    }

    fn sample(&self, rng: &mut dyn RngCore) -> RatFunc {
        let num = random_poly(rng, 2);
        let mut den = random_poly(rng, 2);
        while den.is_zero() {
            den = random_poly(rng, 2);
        }
        RatFunc::canonical(num, den)
    }

    fn density(&self) -> Option<DensityWitness<RatFunc>> {
        let two_fifths = RatFunc::from_rational(&super::q(2, 5));
        Some(DensityWitness::new(move |eps: &RatFunc| {
            if eps.sign() != Ordering::Greater {
                return Err(Error::not_positive(eps));
            }
            let part = two_fifths.mul(eps);
            Ok((part.clone(), part))
        }))
    }

    fn shrink(&self) -> Option<ShrinkWitness<RatFunc>> {
        division_shrink_witness(self, &self.density()?).ok()
    }

    fn join(&self) -> Option<JoinWitness<RatFunc>> {
        Some(JoinWitness::new(|a: &RatFunc, b: &RatFunc| {
            if ratfunc_compare(a, b) == OrderResult::Less {
                b.clone()
            } else {
                a.clone()
            }
        }))
    }

    fn embed(&self, q: &BigRational) -> Option<RatFunc> {
        Some(RatFunc::from_rational(q))
    }

    fn symbols(&self) -> Vec<(&'static str, RatFunc)> {
        vec![("X", RatFunc::x())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::q;
    use crate::order::{betweenness, check_density, check_shrink, density_from_unit_interval, n_split};

    fn c(n: i64, d: i64) -> RatFunc {
        RatFunc::from_rational(&q(n, d))
    }

    #[test]
    fn compare_examples() {
        let s = RationalFunctions;
        assert_eq!(s.compare(&RatFunc::inv_x_pow(1), &c(1, 7)), OrderResult::Less);
        assert_eq!(s.compare(&RatFunc::x(), &c(1000, 1)), OrderResult::Greater);
        let f = RatFunc::x().add(&c(3, 2)).div(&RatFunc::x()).unwrap();
        assert_eq!(s.compare(&f, &f), OrderResult::Equal);
        let gap = c(1, 7).sub(&RatFunc::inv_x_pow(1));
        assert_eq!(gap.to_string(), "(X-7)/(7*X)");
    }

    #[test]
    fn canonical_form_is_unique() {
        let x = RatFunc::x();
        let a = x.add(&c(1, 1)).mul(&x).div(&x.mul(&x).sub(&c(1, 1))).unwrap();
        // X(X+1)/((X-1)(X+1)) = X/(X-1)
        assert_eq!(a.to_string(), "X/(X-1)");
        let b = c(-2, 1).mul(&x).div(&c(-2, 1).mul(&x).add(&c(2, 1))).unwrap();
        assert_eq!(a, b);
        assert_eq!(RatFunc::inv_x_pow(5).to_string(), "1/X^5");
    }

    #[test]
    fn betweenness_below_inverse_x() {
        let s = RationalFunctions;
        let w = s.density().unwrap();
        let mid = betweenness(&s, &RatFunc::zero(), &RatFunc::inv_x_pow(1), &w).unwrap();
        assert_eq!(mid.to_string(), "2/(5*X)");
        assert!(s.lt(&RatFunc::zero(), &mid) && s.lt(&mid, &RatFunc::inv_x_pow(1)));
    }

    #[test]
    fn unit_interval_witness_from_inverse_x() {
        let s = RationalFunctions;
        let w = density_from_unit_interval(&s, &RatFunc::inv_x_pow(1)).unwrap();
        let (b, g) = w.split(&RatFunc::one()).unwrap();
        assert_eq!(b, RatFunc::inv_x_pow(2));
        assert_eq!(g, RatFunc::inv_x_pow(1).sub(&RatFunc::inv_x_pow(2)));
        assert_eq!(b.add(&g), RatFunc::inv_x_pow(1));
        assert!(check_density(&s, &w, &s.epsilon_grid()).is_empty());
        assert!(density_from_unit_interval(&s, &RatFunc::one()).is_err());
        for n in 1..=8 {
            let parts = n_split(&s, &RatFunc::inv_x_pow(3), n, &w).unwrap();
            assert_eq!(parts.len(), n);
            assert!(s.lt(&s.sum(&parts), &RatFunc::inv_x_pow(3)));
        }
    }

    #[test]
    fn non_archimedean() {
        let s = RationalFunctions;
        let e = RatFunc::inv_x_pow(1);
        for k in 1..=12 {
            let r = RatFunc::from_rational(&inv_pow2(k));
            assert!(s.lt(&RatFunc::zero(), &e) && s.lt(&e, &r));
        }
        for n in 0..=200u64 {
            assert!(s.lt(&s.nat_multiple(&e, n), &RatFunc::one()));
        }
    }

    #[test]
    fn witnesses_pass_grid() {
        let s = RationalFunctions;
        let grid = s.epsilon_grid();
        assert!(grid.windows(2).all(|w| s.lt(&w[1], &w[0])));
        assert!(check_density(&s, &s.density().unwrap(), &grid).is_empty());
        assert!(check_shrink(&s, &s.shrink().unwrap(), &grid, &s.magnitude_grid()).is_empty());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RatFunc::new(Poly::one(), Poly::zero()).is_err());
        assert!(RatFunc::zero().recip().is_none());
    }
}

//! ℚ(i) with the DeMarr order `z₁ ≤ z₂ ⇔ z₂ − z₁ ∈ ℚ≥0`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, RngCore};

use super::{inv_pow2, q, random_rational, Instance};
use crate::order::{
    demarr_density_witness, division_shrink_witness, DensityWitness, Group, Hemiring, Magma, OrderResult, Ordered,
    Semiring, ShrinkWitness, StructureFlags,
};

/// `re + im·i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        Gaussian::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::one())
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let im_part = |f: &mut fmt::Formatter<'_>, b: &BigRational| {
            if b.is_one() {
                f.write_str("i")
            } else {
                write!(f, "{b}*i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_negative() {
                    f.write_str("-")?;
                }
                im_part(f, &self.im.abs())
            }
            (false, false) => {
                write!(f, "{}{}", self.re, if self.im.is_negative() { "-" } else { "+" })?;
                im_part(f, &self.im.abs())
            }
        }
    }
}

/// DeMarr field: partially ordered, `1` and `i` incomparable.
#[derive(Debug, Clone, Copy, Default)]
pub struct GaussianRationals;

impl Magma for GaussianRationals {
    type Elem = Gaussian;

    fn key(&self) -> String {
        "Q(i)".into()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags::field()
    }

    fn op(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(&a.re + &b.re, &a.im + &b.im)
    }

    fn zero(&self) -> Gaussian {
        Gaussian::real(BigRational::zero())
    }
}

impl Ordered for GaussianRationals {
    fn compare(&self, a: &Gaussian, b: &Gaussian) -> OrderResult {
        if a.im != b.im {
            return OrderResult::Incomparable;
        }
        a.re.cmp(&b.re).into()
    }
}

impl Group for GaussianRationals {
    fn neg(&self, a: &Gaussian) -> Gaussian {
        Gaussian::new(-&a.re, -&a.im)
    }
}

impl Hemiring for GaussianRationals {
    fn mul(&self, a: &Gaussian, b: &Gaussian) -> Gaussian {
        Gaussian::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
    }
}

impl Semiring for GaussianRationals {
    fn one(&self) -> Gaussian {
        Gaussian::real(BigRational::one())
    }

    fn try_inv(&self, a: &Gaussian) -> Option<Gaussian> {
        let norm = &a.re * &a.re + &a.im * &a.im;
        (!norm.is_zero()).then(|| Gaussian::new(&a.re / &norm, -&a.im / &norm))
    }

    fn from_nat(&self, n: u64) -> Gaussian {
        Gaussian::real(BigRational::from_integer(n.into()))
    }
}

impl Instance for GaussianRationals {
    fn description(&self) -> &'static str {
        "Gaussian rationals with the DeMarr partial order (a DeMarr field, not totally ordered)"
    }

    fn epsilon_grid(&self) -> Vec<Gaussian> {
        (1..=12).map(|k| Gaussian::real(inv_pow2(k))).collect()
    }

    fn magnitude_grid(&self) -> Vec<Gaussian> {
        [q(1, 7), q(1, 1), q(5, 1), q(100, 1)].into_iter().map(Gaussian::real).collect()
    }

    fn sample(&self, rng: &mut dyn RngCore) -> Gaussian {
        let re = random_rational(rng);
        let im = if rng.gen_ratio(1, 3) {
            BigRational::zero()
        } else {
            random_rational(rng)
        };
        Gaussian::new(re, im)
    }

    fn density(&self) -> Option<DensityWitness<Gaussian>> {
        demarr_density_witness(self).ok()
    }

    fn shrink(&self) -> Option<ShrinkWitness<Gaussian>> {
        division_shrink_witness(self, &self.density()?).ok()
    }

    fn embed(&self, q: &BigRational) -> Option<Gaussian> {
        Some(Gaussian::real(q.clone()))
    }

    fn symbols(&self) -> Vec<(&'static str, Gaussian)> {
        vec![("i", Gaussian::i())]
    }
}

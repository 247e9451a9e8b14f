//! Dense univariate polynomials over ℤ.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients from the constant term upwards, without trailing zeros. The
/// zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    /// `c·X^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Poly { coeffs }
    }

    pub fn x_pow(k: usize) -> Self {
        Poly::monomial(BigInt::one(), k)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    /// Multiplicity of the root 0, i.e. the index of the lowest nonzero
    /// coefficient.
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i);
                let b = other.coeffs.get(i);
                match (a, b) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => BigInt::zero(),
                }
            })
            .collect();
        Poly::new(coeffs)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by `X^k`.
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Divide by `X^k`; the low `k` coefficients must be zero.
    fn shift_down(&self, k: usize) -> Poly {
        debug_assert!(self.coeffs.iter().take(k).all(Zero::is_zero));
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder of `self` by a nonzero `divisor`.
    fn pseudo_rem(&self, divisor: &Poly) -> Poly {
        let db = divisor.degree().expect("pseudo_rem by zero");
        let lb = divisor.lc();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc();
            r = r.scale(&lb).sub(&divisor.shift_up(dr - db).scale(&lr));
        }
        r
    }

    /// Exact quotient `self / divisor` in ℤ[X]. Panics when the division is
    /// not exact, which callers rule out by dividing by a gcd.
    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let db = divisor.degree().expect("division by the zero polynomial");
        if divisor.is_monomial() {
            let lb = divisor.lc();
            assert!(
                self.coeffs.iter().take(db).all(Zero::is_zero),
                "inexact polynomial division"
            );
            return Poly::new(
                self.coeffs
                    .iter()
                    .skip(db)
                    .map(|c| {
                        let (q, rem) = c.div_rem(&lb);
                        assert!(rem.is_zero(), "inexact polynomial division");
                        q
                    })
                    .collect(),
            );
        }
        let lb = divisor.lc();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let (c, rem) = r.lc().div_rem(&lb);
            assert!(rem.is_zero(), "inexact polynomial division");
            r = r.sub(&divisor.shift_up(dr - db).scale(&c));
            q[dr - db] = c;
        }
        assert!(r.is_zero(), "inexact polynomial division");
        Poly::new(q)
    }

    /// Greatest common divisor in ℤ[X], normalised to a positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return normalise_sign(other.clone());
        }
        if other.is_zero() {
            return normalise_sign(self.clone());
        }
        let content = self.content().gcd(&other.content());
        let k = self.low_order().unwrap().min(other.low_order().unwrap());
        let a = self.shift_down(self.low_order().unwrap()).primitive_part();
        let b = other.shift_down(other.low_order().unwrap()).primitive_part();
        let core = primitive_gcd(a, b);
        core.shift_up(k).scale(&content)
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

fn normalise_sign(p: Poly) -> Poly {
    if p.lc().is_negative() {
        p.neg()
    } else {
        p
    }
}

/// gcd of two primitive polynomials with nonzero constant terms, via the
/// primitive remainder sequence.
fn primitive_gcd(a: Poly, b: Poly) -> Poly {
    if a.degree() == Some(0) || b.degree() == Some(0) {
        return Poly::one();
    }
    if a == b {
        return a;
    }
    let (mut a, mut b) = if a.degree() >= b.degree() { (a, b) } else { (b, a) };
    loop {
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return b.primitive_part();
        }
        if r.degree() == Some(0) {
            return Poly::one();
        }
        a = b;
        b = r.primitive_part();
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { "-" } else { "+" })?;
            }
            first = false;
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if k == 1 {
                        f.write_str("X")?;
                    } else {
                        write!(f, "X^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (X+1)(X-2) and (X+1)(2X+3)
        let a = p(&[1, 1]).mul(&p(&[-2, 1]));
        let b = p(&[1, 1]).mul(&p(&[3, 2]));
        assert_eq!(a.gcd(&b), p(&[1, 1]));
    }

    #[test]
    fn gcd_keeps_content_and_x_powers() {
        let a = p(&[0, 0, 6, 6]); // 6X^2(X+1)
        let b = p(&[0, 4, 4]); // 4X(X+1)
        assert_eq!(a.gcd(&b), p(&[0, 2, 2]));
    }

    #[test]
    fn exact_division_roundtrip() {
        let a = p(&[3, -1, 4, 1]);
        let b = p(&[-5, 0, 2]);
        assert_eq!(a.mul(&b).div_exact(&b), a);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-7, 1]).to_string(), "X-7");
        assert_eq!(p(&[0, 7]).to_string(), "7*X");
        assert_eq!(p(&[1, 0, -3]).to_string(), "-3*X^2+1");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}

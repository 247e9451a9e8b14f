//! Constructive density: splitting positives, betweenness and the witnesses
//! derived from an element of the unit interval, from DeMarr axioms, from
//! division and from torsion-free modules.

use super::{
    DensityWitness, Group, Module, OrderResult, Ordered, OrderedRing, Semiring, ShrinkWitness, Shrunk,
};
use crate::{Error, Result};

/// `n` positive elements whose left-folded sum lies strictly below `eps`.
///
/// Splits `eps` once, then keeps splitting the last part: from
/// `ε₁ + … + ε_k < ε` and `β + ε_{k+1} < ε_k` the list
/// `ε₁, …, ε_{k−1}, β, ε_{k+1}` has a smaller sum.
pub fn n_split<M: Ordered + ?Sized>(
    s: &M,
    eps: &M::Elem,
    n: usize,
    w: &DensityWitness<M::Elem>,
) -> Result<Vec<M::Elem>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n_split needs n >= 1".into()));
    }
    if !s.is_positive(eps) {
        return Err(Error::not_positive(eps));
    }
    let (beta, gamma) = w.split(eps)?;
    if n == 1 {
        return Ok(vec![beta]);
    }
    let mut parts = Vec::with_capacity(n);
    parts.push(beta);
    let mut last = gamma;
    while parts.len() + 1 < n {
        let (b, next) = w.split(&last)?;
        parts.push(b);
        last = next;
    }
    parts.push(last);
    Ok(parts)
}

/// Density witness `ε ↦ (α²ε, (−α² + α)ε)` from `0 < α < 1` in a totally
/// ordered near-ring.
pub fn density_from_unit_interval<R>(s: &R, alpha: &R::Elem) -> Result<DensityWitness<R::Elem>>
where
    R: OrderedRing + Clone + 'static,
{
    let flags = s.flags();
    if !(flags.near_ring && flags.total_order) {
        return Err(Error::capability(format!("{}: not a totally ordered near-ring", s.key())));
    }
    if !(s.is_positive(alpha) && s.lt(alpha, &s.one())) {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} is not in (0, 1)")));
    }
    let alpha_sq = s.mul(alpha, alpha);
    let rest = s.op(&s.neg(&alpha_sq), alpha);
    let ring = s.clone();
    Ok(DensityWitness::new(move |eps| {
        if !ring.is_positive(eps) {
            return Err(Error::not_positive(eps));
        }
        Ok((ring.mul(&alpha_sq, eps), ring.mul(&rest, eps)))
    }))
}

/// An `s` with `r < s < t`, namely `r + ε` for `ε` the first part of
/// `split(−r + t)`.
pub fn betweenness<G: Group + Ordered + ?Sized>(
    s: &G,
    r: &G::Elem,
    t: &G::Elem,
    w: &DensityWitness<G::Elem>,
) -> Result<G::Elem> {
    if !s.lt(r, t) {
        return Err(Error::InvalidArgument(format!("betweenness needs {r} < {t}")));
    }
    let gap = s.op(&s.neg(r), t);
    let (eps, _) = w.split(&gap)?;
    Ok(s.op(r, &eps))
}

/// Shrink witness of a dense ordered division semiring:
/// `(α, M) ↦ (β·M⁻¹, M⁻¹·β)` with `β` the single part of `n_split(α, 1)`.
pub fn division_shrink_witness<D>(s: &D, w: &DensityWitness<D::Elem>) -> Result<ShrinkWitness<D::Elem>>
where
    D: Ordered + Semiring + Clone + 'static,
{
    if !s.flags().semiring {
        return Err(Error::capability(format!("{}: not a semiring", s.key())));
    }
    let ring = s.clone();
    let w = w.clone();
    Ok(ShrinkWitness::new(move |alpha, m| {
        if *m == ring.zero() {
            return Err(Error::InvalidArgument("shrink bound M = 0".into()));
        }
        if !ring.is_positive(m) {
            return Err(Error::not_positive(m));
        }
        let beta = n_split(&ring, alpha, 1, &w)?.remove(0);
        let m_inv = ring
            .try_inv(m)
            .ok_or_else(|| Error::NotInvertible(m.to_string()))?;
        Ok(Shrunk {
            left: ring.mul(&beta, &m_inv),
            right: ring.mul(&m_inv, &beta),
        })
    }))
}

/// Density witness of a DeMarr division ring: `x ↦ ((2·5⁻¹)x, (2·5⁻¹)x)`.
pub fn demarr_density_witness<D>(s: &D) -> Result<DensityWitness<D::Elem>>
where
    D: OrderedRing + Clone + 'static,
{
    if !s.flags().division_ring {
        return Err(Error::capability(format!("{}: not a division ring", s.key())));
    }
    let one = s.one();
    if s.compare(&s.zero(), &one) != OrderResult::Less {
        return Err(Error::capability(format!("{}: 0 < 1 fails", s.key())));
    }
    let five = s.from_nat(5);
    let five_inv = s
        .try_inv(&five)
        .ok_or_else(|| Error::capability(format!("{}: 5 is not invertible", s.key())))?;
    if !s.is_positive(&five_inv) {
        return Err(Error::capability(format!("{}: inverse of a positive is not positive", s.key())));
    }
    let coeff = s.mul(&s.from_nat(2), &five_inv);
    let ring = s.clone();
    Ok(DensityWitness::new(move |x| {
        if !ring.is_positive(x) {
            return Err(Error::not_positive(x));
        }
        let part = ring.mul(&coeff, x);
        Ok((part.clone(), part))
    }))
}

/// Split a positive module element: `m₁ = (α − α²)m`, `m₂ = α²m`, so that
/// `m₁ + m₂ = αm < m`.
pub fn module_density_witness<R, M>(ring: &R, module: &M, alpha: &R::Elem, m: &M::Elem) -> Result<(M::Elem, M::Elem)>
where
    R: OrderedRing + ?Sized,
    M: Module<Scalar = R::Elem> + Ordered + ?Sized,
{
    if !ring.flags().total_order {
        return Err(Error::capability(format!("{}: scalars not totally ordered", ring.key())));
    }
    if !(ring.is_positive(alpha) && ring.lt(alpha, &ring.one())) {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} is not in (0, 1)")));
    }
    if !module.is_positive(m) {
        return Err(Error::not_positive(m));
    }
    let alpha_sq = ring.mul(alpha, alpha);
    let first = ring.sub(alpha, &alpha_sq);
    Ok((module.scale(&first, m), module.scale(&alpha_sq, m)))
}

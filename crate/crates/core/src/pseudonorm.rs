//! Hemiring-valued pseudonorms, finite-dimensional algebras with the Albert
//! norm, and p-adic norms.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Deserialize;

use crate::instances::{Rationals, ValueGroup, ValueGroupSemiring};
use crate::metric::{induced_metric, MetricSpace, NormedGroup, Tuple};
use crate::order::{Group, Hemiring, Magma, OrderResult, Ordered, OrderedRing, StructureFlags, Violation};
use crate::{vals, Error, Result};

type NormFn<R, H> = dyn Fn(&R) -> H + Send + Sync;

/// A ring `R` with a norm into the ordered hemiring `H`. `strict` asks for
/// `‖rs‖ = ‖r‖‖s‖` instead of `≤`.
pub struct PseudonormedRing<R: Magma, H: Magma> {
    name: String,
    ring: R,
    codomain: H,
    norm: Arc<NormFn<R::Elem, H::Elem>>,
    pub strict: bool,
}

impl<R: Magma + Clone, H: Magma + Clone> Clone for PseudonormedRing<R, H> {
    fn clone(&self) -> Self {
        PseudonormedRing {
            name: self.name.clone(),
            ring: self.ring.clone(),
            codomain: self.codomain.clone(),
            norm: Arc::clone(&self.norm),
            strict: self.strict,
        }
    }
}

impl<R: Group + Hemiring, H: Hemiring + Ordered> PseudonormedRing<R, H> {
    pub fn new(
        name: impl Into<String>,
        ring: R,
        codomain: H,
        strict: bool,
        norm: impl Fn(&R::Elem) -> H::Elem + Send + Sync + 'static,
    ) -> Self {
        PseudonormedRing {
            name: name.into(),
            ring,
            codomain,
            norm: Arc::new(norm),
            strict,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn codomain(&self) -> &H {
        &self.codomain
    }

    pub fn norm(&self, r: &R::Elem) -> H::Elem {
        (self.norm)(r)
    }
}

impl<R, H> PseudonormedRing<R, H>
where
    R: Group + Hemiring + Clone + 'static,
    H: Hemiring + Ordered + Clone + 'static,
{
    /// The underlying normed additive group.
    pub fn normed_group(&self) -> NormedGroup<R, H> {
        let norm = Arc::clone(&self.norm);
        NormedGroup::new(self.ring.clone(), self.codomain.clone(), move |r| norm(r))
    }

    /// `d(r, s) = ‖r − s‖`.
    pub fn metric(&self) -> MetricSpace<R::Elem, H> {
        induced_metric(&self.normed_group())
    }
}

/// Axiom failures on the given pairs: positivity of both entries,
/// `‖r − s‖ ≤ ‖r‖ + ‖s‖` and `‖rs‖ ≤ ‖r‖‖s‖` (equality when strict).
pub fn verify_pseudonorm_pairs<R, H>(p: &PseudonormedRing<R, H>, pairs: &[(R::Elem, R::Elem)]) -> Vec<Violation>
where
    R: Group + Hemiring,
    H: Hemiring + Ordered,
{
    let (r, h) = (&p.ring, &p.codomain);
    let zero = r.zero();
    let mut out = Vec::new();
    let positivity = |x: &R::Elem, nx: &H::Elem, out: &mut Vec<Violation>| match h.compare(&h.zero(), nx) {
        OrderResult::Equal if *x == zero => {}
        OrderResult::Less if *x != zero => {}
        _ => out.push(Violation::new("pseudonorm: positivity", vals![x, nx])),
    };
    for (x, y) in pairs {
        let (nx, ny) = (p.norm(x), p.norm(y));
        positivity(x, &nx, &mut out);
        positivity(y, &ny, &mut out);
        let diff = p.norm(&r.sub(x, y));
        let sum = h.op(&nx, &ny);
        if !h.le(&diff, &sum) {
            out.push(Violation::new("pseudonorm: ||r-s|| <= ||r||+||s||", vals![x, y, diff, sum]));
        }
        let prod = p.norm(&r.mul(x, y));
        let bound = h.mul(&nx, &ny);
        if p.strict {
            if prod != bound {
                out.push(Violation::new("pseudonorm: ||rs|| = ||r||*||s||", vals![x, y, prod, bound]));
            }
        } else if !h.le(&prod, &bound) {
            out.push(Violation::new("pseudonorm: ||rs|| <= ||r||*||s||", vals![x, y, prod, bound]));
        }
    }
    out
}

/// [`verify_pseudonorm_pairs`] on every ordered pair of the sample.
pub fn verify_pseudonorm<R, H>(p: &PseudonormedRing<R, H>, sample: &[R::Elem]) -> Vec<Violation>
where
    R: Group + Hemiring,
    H: Hemiring + Ordered,
{
    let pairs: Vec<_> = sample
        .iter()
        .flat_map(|x| sample.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    verify_pseudonorm_pairs(p, &pairs)
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn valuation(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `|r|_p` in `G₀`: `0` for `r = 0`, otherwise `g^{−v_p(r)}`.
pub fn padic_norm(r: &BigRational, p: u64) -> Result<ValueGroup> {
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if r.is_zero() {
        return Ok(ValueGroup::Zero);
    }
    let p = BigInt::from(p);
    Ok(ValueGroup::Pow(valuation(r.denom(), &p) - valuation(r.numer(), &p)))
}

/// ℚ with the p-adic norm, a strict `G₀`-norm.
pub fn padic_pseudonorm(p: u64) -> Result<PseudonormedRing<Rationals, ValueGroupSemiring>> {
    padic_norm(&BigRational::from_integer(1.into()), p)?;
    Ok(PseudonormedRing::new(
        format!("Q {p}-adic"),
        Rationals,
        ValueGroupSemiring,
        true,
        move |r| padic_norm(r, p).expect("prime checked"),
    ))
}

/// ℚ with `|x| = max{x, −x}`, a strict ℚ-norm.
pub fn absolute_value_pseudonorm() -> PseudonormedRing<Rationals, Rationals> {
    PseudonormedRing::new("Q |x|", Rationals, Rationals, true, |x: &BigRational| x.abs())
}

/// A totally ordered ring normed by its own absolute value.
pub fn ordered_ring_pseudonorm<R>(r: &R) -> Result<PseudonormedRing<R, R>>
where
    R: OrderedRing + Clone + 'static,
{
    if !r.flags().total_order {
        return Err(Error::capability(format!("{}: absolute value needs a total order", r.key())));
    }
    let inner = r.clone();
    Ok(PseudonormedRing::new(format!("{} |x|", r.key()), r.clone(), r.clone(), true, move |x| inner.abs(x)))
}

/// An `n`-dimensional algebra over ℚ given by structure constants:
/// `e_i e_j = Σ_k γ_ijk e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinDimAlgebra {
    pub name: String,
    n: usize,
    gamma: Vec<BigRational>,
}

/// JSON shape of an algebra table: `gamma` is the flat `n³` array in
/// `(i, j, k)` order, each entry an integer or a `"p/q"` string.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraTable {
    pub name: Option<String>,
    pub n: usize,
    pub gamma: Vec<serde_json::Value>,
}

fn parse_scalar(v: &serde_json::Value) -> Result<BigRational> {
    let bad = || Error::InvalidArgument(format!("structure constant {v} is not an exact rational"));
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(i.into())).ok_or_else(bad),
        serde_json::Value::String(s) => s.trim().parse::<BigRational>().map_err(|_| bad()),
        _ => Err(bad()),
    }
}

impl FinDimAlgebra {
    /// `gamma` is the flat table, index `(i·n + j)·n + k`.
    pub fn from_flat(name: impl Into<String>, n: usize, gamma: Vec<BigRational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("algebra of dimension 0".into()));
        }
        if gamma.len() != n * n * n {
            return Err(Error::Dimension {
                expected: n * n * n,
                got: gamma.len(),
            });
        }
        Ok(FinDimAlgebra {
            name: name.into(),
            n,
            gamma,
        })
    }

    pub fn from_table(t: &AlgebraTable) -> Result<Self> {
        let gamma = t.gamma.iter().map(parse_scalar).collect::<Result<Vec<_>>>()?;
        Self::from_flat(t.name.clone().unwrap_or_else(|| "algebra".into()), t.n, gamma)
    }

    fn from_products(name: &str, n: usize, products: &[(usize, usize, usize, i64)]) -> Self {
        let mut gamma = vec![BigRational::zero(); n * n * n];
        for &(i, j, k, c) in products {
            gamma[(i * n + j) * n + k] = BigRational::from_integer(c.into());
        }
        FinDimAlgebra {
            name: name.into(),
            n,
            gamma,
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn gamma(&self, i: usize, j: usize, k: usize) -> &BigRational {
        &self.gamma[(i * self.n + j) * self.n + k]
    }

    /// ℚ(i), basis `1, i`.
    pub fn gaussian() -> Self {
        Self::from_products("Q(i)", 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, -1)])
    }

    /// ℚ(√10), basis `1, √10`.
    pub fn sqrt10() -> Self {
        Self::from_products("Q(sqrt10)", 2, &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1), (1, 1, 0, 10)])
    }

    /// 2×2 rational matrices, basis `E11, E12, E21, E22` with
    /// `E_ab E_cd = δ_bc E_ad`.
    pub fn matrices2() -> Self {
        let idx = |a: usize, b: usize| 2 * a + b;
        let mut products = Vec::new();
        for a in 0..2 {
            for b in 0..2 {
                for d in 0..2 {
                    products.push((idx(a, b), idx(b, d), idx(a, d), 1));
                }
            }
        }
        Self::from_products("M2(Q)", 4, &products)
    }

    /// Hamilton quaternions over ℚ, basis `1, i, j, k`.
    pub fn quaternions() -> Self {
        let mut products = vec![(0, 0, 0, 1)];
        for u in 1..4 {
            products.push((0, u, u, 1));
            products.push((u, 0, u, 1));
            products.push((u, u, 0, -1));
        }
        products.extend([(1, 2, 3, 1), (2, 1, 3, -1), (2, 3, 1, 1), (3, 2, 1, -1), (3, 1, 2, 1), (1, 3, 2, -1)]);
        Self::from_products("H(Q)", 4, &products)
    }

    /// Basis triples `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    pub fn associativity_violations(&self) -> Vec<Violation> {
        let basis = |i: usize| {
            let mut v = vec![BigRational::zero(); self.n];
            v[i] = BigRational::from_integer(1.into());
            v
        };
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let (a, b, c) = (basis(i), basis(j), basis(k));
                    let ab = algebra_multiply(self, &a, &b).expect("basis length");
                    let bc = algebra_multiply(self, &b, &c).expect("basis length");
                    let left = algebra_multiply(self, &ab, &c).expect("basis length");
                    let right = algebra_multiply(self, &a, &bc).expect("basis length");
                    if left != right {
                        out.push(Violation::new(
                            "algebra: associativity",
                            vals![i, j, k, Tuple(left), Tuple(right)],
                        ));
                    }
                }
            }
        }
        out
    }
}

/// `(ab)_k = Σ_{i,j} a_i b_j γ_ijk`.
pub fn algebra_multiply(alg: &FinDimAlgebra, a: &[BigRational], b: &[BigRational]) -> Result<Vec<BigRational>> {
    for v in [a, b] {
        if v.len() != alg.n {
            return Err(Error::Dimension {
                expected: alg.n,
                got: v.len(),
            });
        }
    }
    let mut out = vec![BigRational::zero(); alg.n];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let coeff = ai * bj;
            for (k, slot) in out.iter_mut().enumerate() {
                let g = alg.gamma(i, j, k);
                if !g.is_zero() {
                    *slot += &coeff * g;
                }
            }
        }
    }
    Ok(out)
}

/// The algebra as a ring on coefficient tuples.
#[derive(Debug, Clone)]
pub struct AlgebraRing {
    alg: Arc<FinDimAlgebra>,
}

impl AlgebraRing {
    pub fn new(alg: FinDimAlgebra) -> Self {
        AlgebraRing { alg: Arc::new(alg) }
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.alg
    }
}

impl Magma for AlgebraRing {
    type Elem = Tuple;

    fn key(&self) -> String {
        self.alg.name.clone()
    }

    fn flags(&self) -> StructureFlags {
        StructureFlags {
            unital: true,
            associative: true,
            commutative_add: true,
            group: true,
            near_ring: true,
            hemiring: true,
            ring: true,
            ..StructureFlags::default()
        }
    }

    fn op(&self, a: &Tuple, b: &Tuple) -> Tuple {
        Tuple(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn zero(&self) -> Tuple {
        Tuple(vec![BigRational::zero(); self.alg.n])
    }
}

impl Group for AlgebraRing {
    fn neg(&self, a: &Tuple) -> Tuple {
        Tuple(a.0.iter().map(|x| -x).collect())
    }
}

impl Hemiring for AlgebraRing {
    fn mul(&self, a: &Tuple, b: &Tuple) -> Tuple {
        Tuple(algebra_multiply(&self.alg, &a.0, &b.0).expect("tuples of algebra dimension"))
    }
}

/// `M = max |γ_ijk|` in `H`.
pub fn albert_constant<H>(alg: &FinDimAlgebra, base: &PseudonormedRing<Rationals, H>) -> Result<H::Elem>
where
    H: Hemiring + Ordered,
{
    let h = base.codomain();
    if !h.flags().total_order {
        return Err(Error::capability(format!("{}: max over structure constants needs a total order", h.key())));
    }
    let mut m = h.zero();
    for g in &alg.gamma {
        m = h.max_of(&m, &base.norm(g)).expect("total order");
    }
    Ok(m)
}

/// `‖a‖' = nM·Σ|a_i|` with `M = max |γ_ijk|`.
pub fn albert_pseudonorm<H>(
    alg: &FinDimAlgebra,
    base: &PseudonormedRing<Rationals, H>,
) -> Result<PseudonormedRing<AlgebraRing, H>>
where
    H: Hemiring + Ordered + Clone + 'static,
{
    let h = base.codomain().clone();
    let m = albert_constant(alg, base)?;
    if m == h.zero() {
        return Err(Error::Precondition(format!("{}: all structure constants vanish", alg.name)));
    }
    let n_m = h.nat_multiple(&m, alg.n as u64);
    let base = base.clone();
    let hh = h.clone();
    Ok(PseudonormedRing::new(
        format!("{} Albert", alg.name),
        AlgebraRing::new(alg.clone()),
        h,
        false,
        move |a: &Tuple| {
            let norms: Vec<_> = a.0.iter().map(|x| base.norm(x)).collect();
            hh.mul(&n_m, &hh.sum(&norms))
        },
    ))
}

/// The unscaled coefficient norm `Σ|a_i|`.
pub fn coefficient_norm<H>(alg: &FinDimAlgebra, base: &PseudonormedRing<Rationals, H>) -> PseudonormedRing<AlgebraRing, H>
where
    H: Hemiring + Ordered + Clone + 'static,
{
    let h = base.codomain().clone();
    let base = base.clone();
    let hh = h.clone();
    PseudonormedRing::new(
        format!("{} unscaled", alg.name),
        AlgebraRing::new(alg.clone()),
        h,
        false,
        move |a: &Tuple| {
            let norms: Vec<_> = a.0.iter().map(|x| base.norm(x)).collect();
            hh.sum(&norms)
        },
    )
}

/// Every coefficient tuple of length `n` with integer entries in `lo..=hi`.
pub fn coefficient_grid(n: usize, lo: i64, hi: i64) -> Vec<Tuple> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<BigRational>| {
                (lo..=hi).map(move |c| {
                    let mut v = prefix.clone();
                    v.push(BigRational::from_integer(c.into()));
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Tuple).collect()
}

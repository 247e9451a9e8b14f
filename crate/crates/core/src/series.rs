//! Infinite series: partial sums, tail bounds, alternating and squeezed
//! series, Cauchy condensation, geometric series, Bernoulli inequalities and
//! power limits.
//!
//! Completeness is never assumed. Where a convergence statement needs a
//! complete ring, the operation returns the Cauchy certificate its proof
//! constructs.

use std::sync::{Arc, Mutex};

use crate::instances::Instance;
use crate::metric::NormedGroup;
use crate::order::{DensityWitness, Group, Magma, OrderedRing, Ordered, ShrinkWitness, Violation};
use crate::pseudonorm::ordered_ring_pseudonorm;
use crate::sequences::{
    add_certs, conv_to_cauchy, shift_cert, unshift_cert, zero_times_bounded, CauchyCert, ConvCert, Seq,
};
use crate::{vals, Error, Result};

/// `Σ_{i ≥ first} x_i` with memoized partial sums `s_n = x_first + … + x_n`.
pub struct Series<G: Magma> {
    group: G,
    terms: Seq<G::Elem>,
    first: u64,
    cache: Arc<Mutex<Vec<G::Elem>>>,
}

impl<G: Magma + Clone> Clone for Series<G> {
    fn clone(&self) -> Self {
        Series {
            group: self.group.clone(),
            terms: self.terms.clone(),
            first: self.first,
            cache: Arc::clone(&self.cache),
        }
    }
}

impl<G: Magma + Clone + Send + Sync + 'static> Series<G> {
    /// `first` is 0 or 1.
    pub fn new(group: G, terms: Seq<G::Elem>, first: u64) -> Self {
        Series {
            group,
            terms,
            first,
            cache: Arc::new(Mutex::new(Vec::new())),
        }
    }

    pub fn first(&self) -> u64 {
        self.first
    }

    pub fn terms(&self) -> &Seq<G::Elem> {
        &self.terms
    }

    pub fn term(&self, i: u64) -> G::Elem {
        self.terms.at(i)
    }

    /// `s_n`; the empty sum for `n < first`.
    pub fn partial(&self, n: u64) -> G::Elem {
        if n < self.first {
            return self.group.zero();
        }
        let want = (n - self.first) as usize;
        let mut cache = self.cache.lock().unwrap_or_else(|e| e.into_inner());
        while cache.len() <= want {
            let i = self.first + cache.len() as u64;
            let next = match cache.last() {
                Some(s) => self.group.op(s, &self.terms.at(i)),
                None => self.terms.at(i),
            };
            cache.push(next);
        }
        cache[want].clone()
    }

    /// `n ↦ s_n`, `n ≥ 1`.
    pub fn partials(&self) -> Seq<G::Elem> {
        let s = self.clone();
        Seq::new(move |n| s.partial(n))
    }

    /// `x_{m+1} + … + x_n`, summed directly.
    pub fn block(&self, m: u64, n: u64) -> G::Elem {
        let lo = (m + 1).max(self.first);
        sum_owned(&self.group, (lo..=n).map(|i| self.terms.at(i)))
    }

    /// Termwise sum of two series with the same first index.
    pub fn add(&self, other: &Series<G>) -> Result<Series<G>> {
        if self.first != other.first {
            return Err(Error::InvalidArgument("series start at different indices".into()));
        }
        let g = self.group.clone();
        Ok(Series::new(
            self.group.clone(),
            self.terms.zip_with(&other.terms, move |a, b| g.op(&a, &b)),
            self.first,
        ))
    }
}

fn sum_owned<M: Magma + ?Sized>(m: &M, items: impl IntoIterator<Item = M::Elem>) -> M::Elem {
    items.into_iter().fold(m.zero(), |acc, x| m.op(&acc, &x))
}

/// How far a monotonicity hypothesis was checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotoneKind {
    StrictlyDecreasingPositive,
    DecreasingPositive,
}

/// `x_n > 0` and `x_{n+1} < x_n` (or `≤`) verified exactly for `1 ≤ n ≤ checked_up_to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonotoneEvidence {
    pub kind: MonotoneKind,
    pub checked_up_to: u64,
}

impl MonotoneEvidence {
    pub fn check<O: Ordered>(s: &O, x: &Seq<O::Elem>, kind: MonotoneKind, up_to: u64) -> Result<Self> {
        let mut prev = x.at(1);
        for n in 1..=up_to {
            if !s.is_positive(&prev) {
                return Err(Error::Precondition(format!("x_{n} = {prev} is not positive")));
            }
            let next = x.at(n + 1);
            let ok = match kind {
                MonotoneKind::StrictlyDecreasingPositive => s.lt(&next, &prev),
                MonotoneKind::DecreasingPositive => s.le(&next, &prev),
            };
            if !ok {
                return Err(Error::Precondition(format!(
                    "not decreasing at n = {n}: x_{} = {next}, x_{n} = {prev}",
                    n + 1
                )));
            }
            prev = next;
        }
        Ok(MonotoneEvidence {
            kind,
            checked_up_to: up_to,
        })
    }
}

fn negate_cert<G: Group, E: 'static>(g: &G, c: &ConvCert<G::Elem, E>) -> ConvCert<G::Elem, E> {
    let m = c.modulus();
    ConvCert::new(g.neg(c.limit()), move |eps| m(eps))
}

/// Certificate for `x_n → 0` from one for `s_n → s`: `x_{n+1} = s_{n+1} − s_n`
/// is handled by the shift rule and the sum of limits, then shifted back.
pub fn terms_vanish<G, M>(
    n: &NormedGroup<G, M>,
    c: &ConvCert<G::Elem, M::Elem>,
    w: &DensityWitness<M::Elem>,
) -> Result<ConvCert<G::Elem, M::Elem>>
where
    G: Group,
    M: Ordered,
{
    let g = n.group();
    let next = shift_cert(c, 1);
    let neg = negate_cert(g, c);
    let diff = add_certs(g, &next, &neg, w)?;
    Ok(unshift_cert(&ConvCert::new(g.zero(), move |eps| diff.index(eps)), 1))
}

/// Check `‖x_{m+1} + … + x_n‖ < ε` for `n ≥ m ≥ N(ε)`.
pub fn tail_bound<G, M>(
    n: &NormedGroup<G, M>,
    s: &Series<G>,
    c: &CauchyCert<M::Elem>,
    eps: &M::Elem,
    m: u64,
    k: u64,
) -> Result<Option<Violation>>
where
    G: Group + Clone + Send + Sync + 'static,
    M: Ordered,
{
    let big_n = c.index(eps)?;
    if m < big_n || k < m {
        return Err(Error::Precondition(format!(
            "tail bound needs n >= m >= N = {big_n}, got m = {m}, n = {k}"
        )));
    }
    let t = n.norm(&s.block(m, k));
    Ok((!n.codomain().lt(&t, eps)).then(|| Violation::new("tail: norm of block not below eps", vals![m, k, t, eps])))
}

/// `Σ (−1)^{i+1} x_i`.
pub fn alternating_series<R>(r: &R, x: &Seq<R::Elem>) -> Series<R>
where
    R: OrderedRing + Clone + Send + Sync + 'static,
{
    let g = r.clone();
    Series::new(
        r.clone(),
        Seq::new({
            let x = x.clone();
            move |i| if i % 2 == 1 { x.at(i) } else { g.neg(&x.at(i)) }
        }),
        1,
    )
}

/// Cauchy certificate for the alternating partial sums: `|s_n − s_m| ≤
/// x_{m+1} < x_m`, so the modulus of `x_n → 0` carries over unchanged.
pub fn alternating_cauchy<R>(
    r: &R,
    mono: &MonotoneEvidence,
    c0: &ConvCert<R::Elem, R::Elem>,
) -> Result<CauchyCert<R::Elem>>
where
    R: OrderedRing,
{
    if !r.flags().total_order {
        return Err(Error::capability(format!("{}: alternating series need a total order", r.key())));
    }
    if mono.kind != MonotoneKind::StrictlyDecreasingPositive {
        return Err(Error::Precondition("alternating series need strictly decreasing terms".into()));
    }
    if *c0.limit() != r.zero() {
        return Err(Error::Precondition(format!("terms converge to {}, not 0", c0.limit())));
    }
    let m = c0.modulus();
    Ok(CauchyCert::new(move |eps| m(eps)))
}

/// Cauchy certificate for `Σy` from ones for `Σx`, `Σz` when
/// `x_n ≤ y_n ≤ z_n` for `n ≥ N₁`: `ε ↦ max(N₁, N_x(ε), N_z(ε))`. The
/// ordering is checked on `[N₁, check_upto]`.
#[allow(clippy::too_many_arguments)]
pub fn squeeze_cauchy<R>(
    r: &R,
    x: &Seq<R::Elem>,
    y: &Seq<R::Elem>,
    z: &Seq<R::Elem>,
    cx: &CauchyCert<R::Elem>,
    cz: &CauchyCert<R::Elem>,
    n1: u64,
    check_upto: u64,
) -> Result<CauchyCert<R::Elem>>
where
    R: OrderedRing,
{
    if !r.flags().total_order {
        return Err(Error::capability(format!("{}: squeeze needs a total order", r.key())));
    }
    for n in n1.max(1)..=check_upto {
        let (a, b, c) = (x.at(n), y.at(n), z.at(n));
        if !(r.le(&a, &b) && r.le(&b, &c)) {
            return Err(Error::Precondition(format!("x_n <= y_n <= z_n fails at n = {n}: {a}, {b}, {c}")));
        }
    }
    let (cx, cz) = (cx.clone(), cz.clone());
    Ok(CauchyCert::new(move |eps| Ok(n1.max(cx.index(eps)?).max(cz.index(eps)?))))
}

/// Direction of the condensation test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// From `Σ x_i` to `Σ 2^i x_{2^i}`.
    Forward,
    /// From `Σ 2^i x_{2^i}` to `Σ x_i`.
    Backward,
}

/// `i ↦ 2^i x_{2^i}`, `i ≥ 0`.
pub fn condensed_terms<R>(r: &R, x: &Seq<R::Elem>) -> Seq<R::Elem>
where
    R: OrderedRing + Clone + Send + Sync + 'static,
{
    let (r, x) = (r.clone(), x.clone());
    Seq::new(move |i| r.mul(&r.pow(&r.from_nat(2), i), &x.at(1 << i)))
}

/// The condensed series `Σ_{i ≥ 0} 2^i x_{2^i}`.
pub fn condensed_series<R>(r: &R, x: &Seq<R::Elem>) -> Series<R>
where
    R: OrderedRing + Clone + Send + Sync + 'static,
{
    Series::new(r.clone(), condensed_terms(r, x), 0)
}

/// Transfer a Cauchy certificate through the condensation test.
///
/// Forward, `c` is for `s_n = Σ_{i=1}^n x_i`: with `(β, γ) = split(ε)` and
/// `N₁ = max(C(β), C(γ)) + 1`, every block `Σ_{i=m}^n x_i` with `m ≥ N₁` is
/// below both parts, and the result is the least `k ≥ 1` with
/// `2^{k−1} + 1 ≥ N₁`. Backward, `c` is for `T_l = Σ_{i=0}^l 2^i x_{2^i}`
/// and the result is `2^{C(ε)+1}`.
pub fn condense<R>(
    r: &R,
    mono: &MonotoneEvidence,
    c: &CauchyCert<R::Elem>,
    direction: Direction,
    w: &DensityWitness<R::Elem>,
) -> Result<CauchyCert<R::Elem>>
where
    R: OrderedRing,
{
    let flags = r.flags();
    if !(flags.total_order && flags.semiring) {
        return Err(Error::capability(format!("{}: condensation needs a totally ordered ring with 1", r.key())));
    }
    if mono.checked_up_to == 0 {
        return Err(Error::Precondition("monotonicity evidence is empty".into()));
    }
    let c = c.clone();
    Ok(match direction {
        Direction::Forward => {
            let w = w.clone();
            CauchyCert::new(move |eps| {
                let (b, g) = w.split(eps)?;
                let n1 = c.index(&b)?.max(c.index(&g)?) + 1;
                let mut k = 1u64;
                while (1u64 << (k - 1)) + 1 < n1 {
                    k += 1;
                }
                Ok(k)
            })
        }
        Direction::Backward => CauchyCert::new(move |eps| {
            let k = c.index(eps)?;
            if k >= 63 {
                return Err(Error::Evaluation(format!("condensed modulus 2^{} overflows", k + 1)));
            }
            Ok(1 << (k + 1))
        }),
    })
}

/// `2ⁿ x_{2ⁿ} ≤ 2 Σ_{i=2^{n−1}+1}^{2ⁿ} x_i`, `n ≥ 1`.
pub fn condensation_forward_inequality<R>(r: &R, x: &Seq<R::Elem>, n: u32) -> Option<Violation>
where
    R: OrderedRing,
{
    let p = 1u64 << n;
    let lhs = r.mul(&r.from_nat(p), &x.at(p));
    let block = sum_owned(r, ((p / 2 + 1)..=p).map(|i| x.at(i)));
    let rhs = r.op(&block, &block);
    (!r.le(&lhs, &rhs)).then(|| Violation::new("condensation: 2^n x_(2^n) above twice the block", vals![n, lhs, rhs]))
}

/// `Σ_{i=2^k}^{2^{l+1}−1} x_i ≤ Σ_{i=k}^l 2^i x_{2^i}`, `k ≤ l`.
pub fn condensation_backward_inequality<R>(r: &R, x: &Seq<R::Elem>, k: u32, l: u32) -> Option<Violation>
where
    R: OrderedRing,
{
    let lhs = sum_owned(r, ((1u64 << k)..(1u64 << (l + 1))).map(|i| x.at(i)));
    let rhs = sum_owned(r, (k..=l).map(|i| r.mul(&r.from_nat(1 << i), &x.at(1 << i))));
    (!r.le(&lhs, &rhs)).then(|| Violation::new("condensation: block above condensed sum", vals![k, l, lhs, rhs]))
}

/// `Σ_{i=k}^l 2^i x_{2^i} ≤ 2 Σ_{i=2^{k−1}+1}^{2^l} x_i`, `1 ≤ k ≤ l`.
pub fn condensation_chain_inequality<R>(r: &R, x: &Seq<R::Elem>, k: u32, l: u32) -> Option<Violation>
where
    R: OrderedRing,
{
    let lhs = sum_owned(r, (k..=l).map(|i| r.mul(&r.from_nat(1 << i), &x.at(1 << i))));
    let block = sum_owned(r, (((1u64 << (k - 1)) + 1)..=(1u64 << l)).map(|i| x.at(i)));
    let rhs = r.op(&block, &block);
    (!r.le(&lhs, &rhs)).then(|| Violation::new("condensation: condensed sum above twice the block", vals![k, l, lhs, rhs]))
}


/// The forward, backward and chain inequalities for every `1 ≤ n ≤ m`,
/// `0 ≤ k ≤ l < m` (chain: `k ≥ 1`), with blocks taken from cached partial
/// sums instead of summed per pair.
pub fn condensation_inequalities<R>(r: &R, x: &Seq<R::Elem>, m: u32) -> Vec<Violation>
where
    R: OrderedRing + Clone + Send + Sync + 'static,
{
    let s = Series::new(r.clone(), x.clone(), 1);
    let t = condensed_series(r, x);
    // x_{a+1} + … + x_b
    let block = |a: u64, b: u64| r.sub(&s.partial(b), &s.partial(a));
    // Σ_{i=k}^{l} 2^i x_{2^i}
    let condensed = |k: u32, l: u32| {
        let upper = t.partial(u64::from(l));
        if k == 0 {
            upper
        } else {
            r.sub(&upper, &t.partial(u64::from(k) - 1))
        }
    };
    let mut out = Vec::new();
    for n in 1..=m {
        let p = 1u64 << n;
        let lhs = r.mul(&r.from_nat(p), &x.at(p));
        let b = block(p / 2, p);
        let rhs = r.op(&b, &b);
        if !r.le(&lhs, &rhs) {
            out.push(Violation::new("condensation: 2^n x_(2^n) above twice the block", vals![n, lhs, rhs]));
        }
    }
    for k in 0..m {
        for l in k..m {
            let c = condensed(k, l);
            let lhs = block((1u64 << k) - 1, (1u64 << (l + 1)) - 1);
            if !r.le(&lhs, &c) {
                out.push(Violation::new("condensation: block above condensed sum", vals![k, l, lhs, c]));
            }
            if k >= 1 {
                let b = block(1u64 << (k - 1), 1u64 << l);
                let rhs = r.op(&b, &b);
                if !r.le(&c, &rhs) {
                    out.push(Violation::new("condensation: condensed sum above twice the block", vals![k, l, c, rhs]));
                }
            }
        }
    }
    out
}
/// `(1 − r)⁻¹`, or `NotInvertible`.
pub fn geometric_inverse<R: OrderedRing>(ring: &R, r: &R::Elem) -> Result<R::Elem> {
    if *r == ring.one() {
        return Err(Error::InvalidArgument("ratio r = 1".into()));
    }
    let d = ring.sub(&ring.one(), r);
    ring.try_inv(&d)
        .ok_or_else(|| Error::NotInvertible(format!("1 - r = {d} has no inverse in {}", ring.key())))
}

/// `Σ_{n ≥ 0} c·rⁿ`.
pub fn geometric_series<R>(ring: &R, r: &R::Elem, c: &R::Elem) -> Series<R>
where
    R: OrderedRing + Clone + Send + Sync + 'static,
{
    let (g, r, c) = (ring.clone(), r.clone(), c.clone());
    Series::new(ring.clone(), Seq::new(move |n| g.mul(&c, &g.pow(&r, n))), 0)
}

/// Failures of `1 + r + … + rⁿ = (1 − r^{n+1})·inv` for `n ≤ up_to`.
pub fn geometric_closed_form<R>(ring: &R, r: &R::Elem, inv: &R::Elem, up_to: u64) -> Vec<Violation>
where
    R: OrderedRing + Clone + Send + Sync + 'static,
{
    let s = geometric_series(ring, r, &ring.one());
    (0..=up_to)
        .filter_map(|n| {
            let lhs = s.partial(n);
            let rhs = ring.mul(&ring.sub(&ring.one(), &ring.pow(r, n + 1)), inv);
            (lhs != rhs).then(|| Violation::new("geometric: closed form differs", vals![n, lhs, rhs]))
        })
        .collect()
}

/// Certificate for `Σ_{n ≥ 0} c·rⁿ → c·inv`, where `c0` certifies `rⁿ → 0`.
/// `s_n − c·inv = −r^{n+1}·(c·inv)`, so the null-times-bounded certificate
/// for `(r^{n+1})` against the constant `c·inv` applies.
pub fn geometric_cert<R>(
    ring: &R,
    r: &R::Elem,
    c0: &ConvCert<R::Elem, R::Elem>,
    inv: &R::Elem,
    c: &R::Elem,
    sw: &ShrinkWitness<R::Elem>,
) -> Result<ConvCert<R::Elem, R::Elem>>
where
    R: OrderedRing + Clone + Send + Sync + 'static,
{
    if *r == ring.one() {
        return Err(Error::InvalidArgument("ratio r = 1".into()));
    }
    let d = ring.sub(&ring.one(), r);
    if ring.mul(&d, inv) != ring.one() || ring.mul(inv, &d) != ring.one() {
        return Err(Error::NotInvertible(format!("{inv} is not the inverse of 1 - r = {d}")));
    }
    if *c0.limit() != ring.zero() {
        return Err(Error::Precondition(format!("powers converge to {}, not 0", c0.limit())));
    }
    let limit = ring.mul(c, inv);
    if limit == ring.zero() {
        return Ok(ConvCert::new(limit, |_| Ok(1)));
    }
    let p = ordered_ring_pseudonorm(ring)?;
    let bound = ring.abs(&limit);
    let next = shift_cert(c0, 1);
    let (prod, _) = zero_times_bounded(&p, &next, &Seq::constant(limit.clone()), &bound, sw, 1)?;
    Ok(ConvCert::new(limit, move |eps| prod.index(eps)))
}

/// If `rⁿ → l` with `r ≠ 1`, then `l = 0`; reports a violation otherwise.
pub fn power_limit_is_zero<R: OrderedRing>(ring: &R, r: &R::Elem, c: &ConvCert<R::Elem, R::Elem>) -> Result<Vec<Violation>> {
    if *r == ring.one() {
        return Err(Error::InvalidArgument("ratio r = 1".into()));
    }
    let l = c.limit();
    Ok(if *l == ring.zero() {
        Vec::new()
    } else {
        vec![Violation::new("power limit: nonzero limit with r != 1", vals![r, l])]
    })
}

/// `rⁿ → 0` for `−1 < r < 1` in an Archimedean field: with `x = 1/|r| − 1`,
/// `N(ε) = bound(xε, 1)`.
pub fn archimedean_power_modulus<F>(f: &F, r: &F::Elem) -> Result<ConvCert<F::Elem, F::Elem>>
where
    F: Instance + OrderedRing,
{
    let a = f
        .archimedean()
        .ok_or_else(|| Error::capability(format!("{}: no Archimedean witness", f.key())))?;
    if !f.flags().total_order {
        return Err(Error::capability(format!("{}: not totally ordered", f.key())));
    }
    let s = f.abs(r);
    if !f.lt(&s, &f.one()) {
        return Err(Error::InvalidArgument(format!("|r| = {s} is not below 1")));
    }
    if s == f.zero() {
        return Ok(ConvCert::new(f.zero(), |_| Ok(1)));
    }
    let inv = f
        .try_inv(&s)
        .ok_or_else(|| Error::NotInvertible(format!("{s} has no inverse in {}", f.key())))?;
    let x = f.sub(&inv, &f.one());
    let (g, one) = (f.clone(), f.one());
    Ok(ConvCert::new(f.zero(), move |eps| a.bound(&g.mul(&x, eps), &one)))
}

/// Failures of `|r|ⁿ ≤ 1/(1 + nx) ≤ 1/(Nx) < ε` at `n ≥ N = N(ε)`.
pub fn archimedean_chain<F>(f: &F, r: &F::Elem, c: &ConvCert<F::Elem, F::Elem>, eps: &F::Elem, n: u64) -> Result<Vec<Violation>>
where
    F: OrderedRing,
{
    let s = f.abs(r);
    let inv = f.try_inv(&s).ok_or_else(|| Error::NotInvertible(format!("{s}")))?;
    let x = f.sub(&inv, &f.one());
    let big_n = c.index(eps)?;
    if n < big_n {
        return Err(Error::Precondition(format!("n = {n} below N = {big_n}")));
    }
    let recip = |e: F::Elem| f.try_inv(&e).ok_or_else(|| Error::NotInvertible(format!("{e}")));
    let a = f.pow(&s, n);
    let b = recip(f.op(&f.one(), &f.mul(&f.from_nat(n), &x)))?;
    let c = recip(f.mul(&f.from_nat(big_n), &x))?;
    let mut out = Vec::new();
    if !f.le(&a, &b) {
        out.push(Violation::new("power chain: r^n above 1/(1+nx)", vals![n, a, b]));
    }
    if !f.le(&b, &c) {
        out.push(Violation::new("power chain: 1/(1+nx) above 1/(Nx)", vals![n, b, c]));
    }
    if !f.lt(&c, eps) {
        out.push(Violation::new("power chain: 1/(Nx) not below eps", vals![big_n, c, eps]));
    }
    Ok(out)
}

/// Cauchy certificate for `Σ_{n ≥ 0} x_n` when `‖x_{n+1}‖ ≤ r‖x_n‖`: the
/// dominating series `Σ rⁿ‖x₀‖` is Cauchy with `geo`'s modulus, which passes
/// through the squeeze `0 ≤ ‖x_n‖ ≤ rⁿ‖x₀‖` and absolute convergence.
pub fn ratio_cauchy<G, R>(
    n: &NormedGroup<G, R>,
    x: &Seq<G::Elem>,
    r: &R::Elem,
    checked_up_to: u64,
    geo: &ConvCert<R::Elem, R::Elem>,
    w: &DensityWitness<R::Elem>,
) -> Result<CauchyCert<R::Elem>>
where
    G: Group,
    R: OrderedRing,
{
    let h = n.codomain();
    let x0 = n.norm(&x.at(0));
    let expected = h.mul(&x0, &geometric_inverse(h, r)?);
    if *geo.limit() != expected {
        return Err(Error::Precondition(format!(
            "dominating certificate has limit {}, expected {expected}",
            geo.limit()
        )));
    }
    let mut prev = x0;
    for i in 0..checked_up_to {
        let next = n.norm(&x.at(i + 1));
        let bound = h.mul(r, &prev);
        if !h.le(&next, &bound) {
            return Err(Error::Precondition(format!(
                "ratio condition fails at n = {i}: ||x_(n+1)|| = {next} > {bound}"
            )));
        }
        prev = next;
    }
    Ok(conv_to_cauchy(geo, w))
}

/// Cauchy certificate for `Σ x_n` from one for `Σ ‖x_n‖`, same modulus.
pub fn abs_conv_cauchy<G, M>(n: &NormedGroup<G, M>, c_abs: &CauchyCert<M::Elem>) -> Result<CauchyCert<M::Elem>>
where
    G: Group,
    M: Group + Ordered,
{
    let f = n.codomain().flags();
    if !(f.group && f.total_order && f.commutative_add && n.group().flags().commutative_add) {
        return Err(Error::capability(format!(
            "{}: absolute convergence needs a totally ordered abelian codomain and an abelian group",
            n.codomain().key()
        )));
    }
    Ok(c_abs.clone())
}

/// Failures of `‖x_{m+1} + … + x_n‖ ≤ ‖x_{m+1}‖ + … + ‖x_n‖`.
pub fn abs_tail_inequality<G, M>(n: &NormedGroup<G, M>, s: &Series<G>, m: u64, k: u64) -> Option<Violation>
where
    G: Group + Clone + Send + Sync + 'static,
    M: Ordered,
{
    let lhs = n.norm(&s.block(m, k));
    let lo = (m + 1).max(s.first());
    let rhs = sum_owned(n.codomain(), (lo..=k).map(|i| n.norm(&s.term(i))));
    (!n.codomain().le(&lhs, &rhs)).then(|| Violation::new("absolute: norm of block above sum of norms", vals![m, k, lhs, rhs]))
}

/// Which Bernoulli inequality to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bernoulli {
    /// `Π(1 + x_i) ≥ 1 + Σx_i` with every `x_i ≥ 0`.
    Semiring,
    /// The same with every `x_i ≥ 0` or every `x_i ≤ 0`.
    Ring,
    /// `(1 + x)ⁿ ≥ 1 + nx` for each listed `x`.
    Power(u64),
}

/// Check a Bernoulli inequality exactly; a failed hypothesis is a
/// `Precondition` error naming the index.
pub fn bernoulli_check<R: OrderedRing>(ring: &R, xs: &[R::Elem], variant: Bernoulli) -> Result<Vec<Violation>> {
    let zero = ring.zero();
    let one = ring.one();
    for (i, x) in xs.iter().enumerate() {
        if !ring.le(&zero, &ring.op(&one, x)) {
            return Err(Error::Precondition(format!("1 + x_{} = 1 + {x} is negative", i + 1)));
        }
    }
    let nonneg = |x: &R::Elem| ring.le(&zero, x);
    let nonpos = |x: &R::Elem| ring.le(x, &zero);
    match variant {
        Bernoulli::Semiring => {
            if let Some(i) = xs.iter().position(|x| !nonneg(x)) {
                return Err(Error::Precondition(format!("x_{} = {} is not >= 0", i + 1, xs[i])));
            }
        }
        Bernoulli::Ring | Bernoulli::Power(_) => {
            if xs.iter().any(|x| !nonneg(x)) {
                if !ring.flags().ring {
                    return Err(Error::capability(format!("{}: negative inputs need a ring", ring.key())));
                }
                if matches!(variant, Bernoulli::Ring) {
                    if let Some(i) = xs.iter().position(|x| !nonpos(x)) {
                        return Err(Error::Precondition(format!(
                            "mixed signs: x_{} = {} while another input is negative",
                            i + 1,
                            xs[i]
                        )));
                    }
                }
            }
        }
    }
    let mut out = Vec::new();
    match variant {
        Bernoulli::Semiring | Bernoulli::Ring => {
            let mut prod = one.clone();
            for x in xs {
                prod = ring.mul(&ring.op(&one, x), &prod);
            }
            let rhs = ring.op(&one, &ring.sum(xs));
            if !ring.le(&rhs, &prod) {
                out.push(Violation::new("bernoulli: product below 1 + sum", vals![prod, rhs]));
            }
        }
        Bernoulli::Power(k) => {
            for x in xs {
                let lhs = ring.pow(&ring.op(&one, x), k);
                let rhs = ring.op(&one, &ring.mul(&ring.from_nat(k), x));
                if !ring.le(&rhs, &lhs) {
                    out.push(Violation::new("bernoulli: (1+x)^n below 1 + nx", vals![x, k, lhs, rhs]));
                }
            }
        }
    }
    Ok(out)
}

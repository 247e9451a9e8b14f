//! Sequences with convergence and Cauchy certificates.
//!
//! A certificate pairs a claim (a limit, or just the Cauchy property) with a
//! modulus `ε ↦ N`. The operations here turn certificates into new ones the
//! way the corresponding convergence proofs do; the verifiers re-check any
//! certificate on a grid of `ε` values and a window of indices.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::metric::{MetricSpace, NormedGroup};
use crate::order::{
    DensityWitness, Element, Group, Hemiring, JoinWitness, Ordered, ShrinkWitness, Violation,
};
use crate::pseudonorm::PseudonormedRing;
use crate::{vals, Error, Result};

/// Default number of indices checked past a modulus.
pub const DEFAULT_HORIZON: u64 = 64;

type TermFn<P> = dyn Fn(u64) -> P + Send + Sync;
/// `ε ↦ N`.
pub type Modulus<E> = Arc<dyn Fn(&E) -> Result<u64> + Send + Sync>;

/// A sequence `x₁, x₂, …` given by a pure term function.
pub struct Seq<P> {
    term: Arc<TermFn<P>>,
}

impl<P> Clone for Seq<P> {
    fn clone(&self) -> Self {
        Seq {
            term: Arc::clone(&self.term),
        }
    }
}

impl<P: Clone + Send + Sync + 'static> Seq<P> {
    pub fn new(f: impl Fn(u64) -> P + Send + Sync + 'static) -> Self {
        Seq { term: Arc::new(f) }
    }

    pub fn constant(c: P) -> Self {
        Seq::new(move |_| c.clone())
    }

    /// `x_n`, `n ≥ 1`.
    pub fn at(&self, n: u64) -> P {
        (self.term)(n)
    }

    /// `n ↦ x_{n+k}`.
    pub fn shift(&self, k: u64) -> Seq<P> {
        let s = self.clone();
        Seq::new(move |n| s.at(n + k))
    }

    /// `k ↦ x_{n_k}`.
    pub fn subsequence(&self, sub: &SubseqMap) -> Seq<P> {
        let (s, sub) = (self.clone(), sub.clone());
        Seq::new(move |k| s.at(sub.at(k)))
    }

    pub fn map<Q: Clone + Send + Sync + 'static>(&self, f: impl Fn(P) -> Q + Send + Sync + 'static) -> Seq<Q> {
        let s = self.clone();
        Seq::new(move |n| f(s.at(n)))
    }

    pub fn zip_with<Q, T>(&self, other: &Seq<Q>, f: impl Fn(P, Q) -> T + Send + Sync + 'static) -> Seq<T>
    where
        Q: Clone + Send + Sync + 'static,
        T: Clone + Send + Sync + 'static,
    {
        let (a, b) = (self.clone(), other.clone());
        Seq::new(move |n| f(a.at(n), b.at(n)))
    }
}

/// A claimed limit with a modulus: `n ≥ N(ε)` implies `d(x_n, limit) < ε`.
pub struct ConvCert<P, E> {
    limit: P,
    modulus: Modulus<E>,
}

impl<P: Clone, E> Clone for ConvCert<P, E> {
    fn clone(&self) -> Self {
        ConvCert {
            limit: self.limit.clone(),
            modulus: Arc::clone(&self.modulus),
        }
    }
}

impl<P: std::fmt::Debug, E> std::fmt::Debug for ConvCert<P, E> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ConvCert").field("limit", &self.limit).finish_non_exhaustive()
    }
}

impl<P, E> ConvCert<P, E> {
    pub fn new(limit: P, modulus: impl Fn(&E) -> Result<u64> + Send + Sync + 'static) -> Self {
        ConvCert {
            limit,
            modulus: Arc::new(modulus),
        }
    }

    pub fn limit(&self) -> &P {
        &self.limit
    }

    /// `N(ε)`, at least 1.
    pub fn index(&self, eps: &E) -> Result<u64> {
        Ok((self.modulus)(eps)?.max(1))
    }

    pub fn modulus(&self) -> Modulus<E> {
        Arc::clone(&self.modulus)
    }
}

/// A Cauchy modulus: `m, n ≥ N(ε)` implies `d(x_m, x_n) < ε`.
pub struct CauchyCert<E> {
    modulus: Modulus<E>,
}

impl<E> Clone for CauchyCert<E> {
    fn clone(&self) -> Self {
        CauchyCert {
            modulus: Arc::clone(&self.modulus),
        }
    }
}

impl<E> CauchyCert<E> {
    pub fn new(modulus: impl Fn(&E) -> Result<u64> + Send + Sync + 'static) -> Self {
        CauchyCert {
            modulus: Arc::new(modulus),
        }
    }

    /// `N(ε)`, at least 1.
    pub fn index(&self, eps: &E) -> Result<u64> {
        Ok((self.modulus)(eps)?.max(1))
    }
}

/// A strictly increasing index map `k ↦ n_k`.
#[derive(Clone)]
pub struct SubseqMap {
    f: Arc<dyn Fn(u64) -> u64 + Send + Sync>,
}

impl SubseqMap {
    pub fn new(f: impl Fn(u64) -> u64 + Send + Sync + 'static) -> Self {
        SubseqMap { f: Arc::new(f) }
    }

    pub fn at(&self, k: u64) -> u64 {
        (self.f)(k)
    }

    /// Check `n_1 ≥ 1` and `n_{k+1} > n_k` for `k < up_to`, hence `n_k ≥ k`.
    pub fn validate(&self, up_to: u64) -> Result<()> {
        if self.at(1) < 1 {
            return Err(Error::Precondition("subsequence index n_1 < 1".into()));
        }
        for k in 1..up_to {
            let (a, b) = (self.at(k), self.at(k + 1));
            if b <= a {
                return Err(Error::Precondition(format!(
                    "subsequence not strictly increasing: n_{k} = {a}, n_{} = {b}",
                    k + 1
                )));
            }
        }
        Ok(())
    }
}

/// Evidence that a sequence does not converge to 0: for every `n` the
/// selector returns `k ≥ n` with `‖x_k‖ ≥ ε`.
pub struct ApartFromZeroWitness<E> {
    pub eps: E,
    selector: Arc<dyn Fn(u64) -> u64 + Send + Sync>,
}

impl<E> ApartFromZeroWitness<E> {
    pub fn new(eps: E, selector: impl Fn(u64) -> u64 + Send + Sync + 'static) -> Self {
        ApartFromZeroWitness {
            eps,
            selector: Arc::new(selector),
        }
    }

    pub fn select(&self, n: u64) -> u64 {
        (self.selector)(n)
    }
}

/// All `(ε, n)` with `n ∈ [N(ε), N(ε) + horizon]` and `d(x_n, limit) ≥ ε`.
pub fn verify_conv_cert<P, M>(
    space: &MetricSpace<P, M>,
    x: &Seq<P>,
    c: &ConvCert<P, M::Elem>,
    grid: &[M::Elem],
    horizon: u64,
) -> Vec<Violation>
where
    P: Element,
    M: Ordered,
{
    let mut out = Vec::new();
    for eps in grid {
        let n0 = match c.index(eps) {
            Ok(n) => n,
            Err(e) => {
                out.push(Violation::new("convergence: modulus failed", vals![eps, e]));
                continue;
            }
        };
        for n in n0..=n0 + horizon {
            match space.distance(&x.at(n), &c.limit) {
                Ok(d) if space.codomain().lt(&d, eps) => {}
                Ok(d) => out.push(Violation::new("convergence: d(x_n, limit) not below eps", vals![eps, n, d])),
                Err(e) => out.push(Violation::new("convergence: distance failed", vals![eps, n, e])),
            }
        }
    }
    out
}

/// Index pairs sampled in `[n0, n0 + h]`: every pair with an endpoint at
/// either end, consecutive pairs, and a 9×9 grid of evenly spaced indices.
pub fn cauchy_pairs(n0: u64, h: u64) -> Vec<(u64, u64)> {
    let mut pairs = BTreeSet::new();
    for j in 0..=h {
        pairs.insert((n0, n0 + j));
        pairs.insert((n0 + j, n0 + h));
        if j < h {
            pairs.insert((n0 + j, n0 + j + 1));
        }
    }
    let ticks: Vec<u64> = (0..=8).map(|i| n0 + i * h / 8).collect();
    for &m in &ticks {
        for &n in &ticks {
            pairs.insert((m.min(n), m.max(n)));
        }
    }
    pairs.into_iter().filter(|(m, n)| m != n).collect()
}

/// All `(ε, m, n)` among [`cauchy_pairs`] with `d(x_m, x_n) ≥ ε`.
pub fn verify_cauchy_cert<P, M>(
    space: &MetricSpace<P, M>,
    x: &Seq<P>,
    c: &CauchyCert<M::Elem>,
    grid: &[M::Elem],
    horizon: u64,
) -> Vec<Violation>
where
    P: Element,
    M: Ordered,
{
    let mut out = Vec::new();
    for eps in grid {
        let n0 = match c.index(eps) {
            Ok(n) => n,
            Err(e) => {
                out.push(Violation::new("cauchy: modulus failed", vals![eps, e]));
                continue;
            }
        };
        let terms: Vec<P> = (n0..=n0 + horizon).map(|n| x.at(n)).collect();
        for (m, n) in cauchy_pairs(n0, horizon) {
            let (xm, xn) = (&terms[(m - n0) as usize], &terms[(n - n0) as usize]);
            match space.distance(xm, xn) {
                Ok(d) if space.codomain().lt(&d, eps) => {}
                Ok(d) => out.push(Violation::new("cauchy: d(x_m, x_n) not below eps", vals![eps, m, n, d])),
                Err(e) => out.push(Violation::new("cauchy: distance failed", vals![eps, m, n, e])),
            }
        }
    }
    out
}

/// Certificate for `(x_{n+k})` from one for `(x_n)`: `N'(ε) = max(1, N(ε) − k)`.
pub fn shift_cert<P: Clone, E: 'static>(c: &ConvCert<P, E>, k: u64) -> ConvCert<P, E> {
    let m = c.modulus();
    ConvCert::new(c.limit.clone(), move |eps| Ok(m(eps)?.saturating_sub(k).max(1)))
}

/// Certificate for `(x_n)` from one for `(x_{n+k})`: `N'(ε) = N(ε) + k`.
pub fn unshift_cert<P: Clone, E: 'static>(c: &ConvCert<P, E>, k: u64) -> ConvCert<P, E> {
    let m = c.modulus();
    ConvCert::new(c.limit.clone(), move |eps| Ok(m(eps)?.max(1) + k))
}

/// `N'(ε) = max(N(β), N(γ))` with `(β, γ) = split(ε)`.
pub fn conv_to_cauchy<P, E: Element>(c: &ConvCert<P, E>, w: &DensityWitness<E>) -> CauchyCert<E> {
    let (m, w) = (c.modulus(), w.clone());
    CauchyCert::new(move |eps| {
        let (b, g) = w.split(eps)?;
        Ok(m(&b)?.max(m(&g)?))
    })
}

/// Cauchy certificate for `(x_n + y_n)`: `N(ε) = max(N_x(β), N_y(γ))`.
pub fn cauchy_sum<E: Element>(cx: &CauchyCert<E>, cy: &CauchyCert<E>, w: &DensityWitness<E>) -> CauchyCert<E> {
    let (mx, my, w) = (Arc::clone(&cx.modulus), Arc::clone(&cy.modulus), w.clone());
    CauchyCert::new(move |eps| {
        let (b, g) = w.split(eps)?;
        Ok(mx(&b)?.max(my(&g)?))
    })
}

/// Certificate for `(x_n + y_n) → a + b` in a normed abelian group:
/// `N(ε) = max(N_x(β), N_y(γ))`.
pub fn add_certs<G, E>(
    g: &G,
    cx: &ConvCert<G::Elem, E>,
    cy: &ConvCert<G::Elem, E>,
    w: &DensityWitness<E>,
) -> Result<ConvCert<G::Elem, E>>
where
    G: Group,
    E: Element,
{
    if !g.flags().commutative_add {
        return Err(Error::capability(format!("{}: sum of limits needs an abelian group", g.key())));
    }
    let limit = g.op(&cx.limit, &cy.limit);
    let (mx, my, w) = (cx.modulus(), cy.modulus(), w.clone());
    Ok(ConvCert::new(limit, move |eps| {
        let (b, c) = w.split(eps)?;
        Ok(mx(&b)?.max(my(&c)?))
    }))
}

/// `R = join{d(x₁, a), …, d(x_{N−1}, a), ε₀}` with `N = N(ε₀)`; bounds every
/// `d(x_n, a)`.
pub fn bounded_from_conv<P, M>(
    space: &MetricSpace<P, M>,
    x: &Seq<P>,
    c: &ConvCert<P, M::Elem>,
    j: &JoinWitness<M::Elem>,
    eps0: &M::Elem,
) -> Result<M::Elem>
where
    P: Element,
    M: Ordered,
{
    if !space.codomain().is_positive(eps0) {
        return Err(Error::not_positive(eps0));
    }
    let n = c.index(eps0)?;
    let mut r = eps0.clone();
    for i in 1..n {
        r = j.join(&r, &space.distance(&x.at(i), &c.limit)?);
    }
    Ok(r)
}

/// `R = join{d(x₁, x_N), …, d(x_{N−1}, x_N), ε₀}` with `N = N(ε₀)`; bounds
/// every `d(x_n, x_N)`. Returns `(N, R)`.
pub fn bounded_from_cauchy<P, M>(
    space: &MetricSpace<P, M>,
    x: &Seq<P>,
    c: &CauchyCert<M::Elem>,
    j: &JoinWitness<M::Elem>,
    eps0: &M::Elem,
) -> Result<(u64, M::Elem)>
where
    P: Element,
    M: Ordered,
{
    if !space.codomain().is_positive(eps0) {
        return Err(Error::not_positive(eps0));
    }
    let n = c.index(eps0)?;
    let center = x.at(n);
    let mut r = eps0.clone();
    for i in 1..n {
        r = j.join(&r, &space.distance(&x.at(i), &center)?);
    }
    Ok((n, r))
}

/// `t = s + ‖a‖` with `s` the bound of `‖x_n − a‖`; bounds every `‖x_n‖`.
pub fn norm_bound<G, M>(
    n: &NormedGroup<G, M>,
    x: &Seq<G::Elem>,
    c: &ConvCert<G::Elem, M::Elem>,
    j: &JoinWitness<M::Elem>,
    eps0: &M::Elem,
) -> Result<M::Elem>
where
    G: Group + Clone + 'static,
    M: Ordered + Clone + 'static,
{
    let s = bounded_from_conv(&crate::metric::induced_metric(n), x, c, j, eps0)?;
    Ok(n.codomain().op(&s, &n.norm(c.limit())))
}

/// Limit certificate for a Cauchy sequence with a convergent subsequence:
/// `N(ε) = max(C(β), K(γ))`, using `n_k ≥ k`.
pub fn subseq_rescue<P: Clone, E: Element>(
    cauchy: &CauchyCert<E>,
    sub: &SubseqMap,
    csub: &ConvCert<P, E>,
    w: &DensityWitness<E>,
    check_upto: u64,
) -> Result<ConvCert<P, E>> {
    sub.validate(check_upto)?;
    let (mc, mk, w) = (Arc::clone(&cauchy.modulus), csub.modulus(), w.clone());
    Ok(ConvCert::new(csub.limit.clone(), move |eps| {
        let (b, g) = w.split(eps)?;
        Ok(mc(&b)?.max(mk(&g)?))
    }))
}

/// Check `‖y_n‖ ≤ M` for `n ≤ check_upto`.
fn check_bound<R, S>(p: &PseudonormedRing<R, S>, y: &Seq<R::Elem>, bound: &S::Elem, check_upto: u64) -> Result<()>
where
    R: Group + Hemiring,
    S: Hemiring + Ordered,
{
    for n in 1..=check_upto {
        let ny = p.norm(&y.at(n));
        if !p.codomain().le(&ny, bound) {
            return Err(Error::Precondition(format!("bound violated: ||y_{n}|| = {ny} > {bound}")));
        }
    }
    Ok(())
}

/// For `x_n → 0` and `‖y_n‖ ≤ M`: certificates for `x_n y_n → 0`
/// (`N_x(ε_l)`, since `ε_l M < ε`) and `y_n x_n → 0` (`N_x(ε_r)`, since
/// `M ε_r < ε`), in that order.
#[allow(clippy::type_complexity)]
pub fn zero_times_bounded<R, S>(
    p: &PseudonormedRing<R, S>,
    cx: &ConvCert<R::Elem, S::Elem>,
    y: &Seq<R::Elem>,
    bound: &S::Elem,
    sw: &ShrinkWitness<S::Elem>,
    check_upto: u64,
) -> Result<(ConvCert<R::Elem, S::Elem>, ConvCert<R::Elem, S::Elem>)>
where
    R: Group + Hemiring,
    S: Hemiring + Ordered,
{
    let r = p.ring();
    if *cx.limit() != r.zero() {
        return Err(Error::Precondition(format!("limit {} is not 0", cx.limit())));
    }
    if !p.codomain().is_positive(bound) {
        return Err(Error::not_positive(bound));
    }
    check_bound(p, y, bound, check_upto)?;
    let make = |left: bool| {
        let (m, sw, bound) = (cx.modulus(), sw.clone(), bound.clone());
        ConvCert::new(r.zero(), move |eps: &S::Elem| {
            let s = sw.shrink(eps, &bound)?;
            m(if left { &s.left } else { &s.right })
        })
    };
    Ok((make(true), make(false)))
}

/// Certificate for `x_n y_n → ab`. For `b ≠ 0`: `(β, γ) = split(ε)`,
/// `s₁` bounds `‖x_n‖`, `K_r` from `shrink(β, s₁)`, `M_l` from
/// `shrink(γ, ‖b‖)`, `N = max(N_y(K_r), N_x(M_l))`. For `b = 0` the
/// bounded-times-null certificate is used.
#[allow(clippy::too_many_arguments)]
pub fn prod_certs<R, S>(
    p: &PseudonormedRing<R, S>,
    x: &Seq<R::Elem>,
    cx: &ConvCert<R::Elem, S::Elem>,
    cy: &ConvCert<R::Elem, S::Elem>,
    dw: &DensityWitness<S::Elem>,
    sw: &ShrinkWitness<S::Elem>,
    j: &JoinWitness<S::Elem>,
    eps0: &S::Elem,
) -> Result<ConvCert<R::Elem, S::Elem>>
where
    R: Group + Hemiring + Clone + 'static,
    S: Hemiring + Ordered + Clone + 'static,
{
    let r = p.ring();
    let s1 = norm_bound(&p.normed_group(), x, cx, j, eps0)?;
    let (a, b) = (cx.limit(), cy.limit());
    if *b == r.zero() {
        let (_, yx) = zero_times_bounded(p, cy, x, &s1, sw, 2 * DEFAULT_HORIZON)?;
        return Ok(yx);
    }
    let nb = p.norm(b);
    let (mx, my, dw, sw) = (cx.modulus(), cy.modulus(), dw.clone(), sw.clone());
    Ok(ConvCert::new(r.mul(a, b), move |eps| {
        let (beta, gamma) = dw.split(eps)?;
        let k_r = sw.shrink(&beta, &s1)?.right;
        let m_l = sw.shrink(&gamma, &nb)?.left;
        Ok(my(&k_r)?.max(mx(&m_l)?))
    }))
}

/// For a Cauchy sequence kept away from 0 by `a`: `β = split(a.ε).0`,
/// `N = C(β)`, `γ = split(a.ε − β).0`; then `‖x_n‖ > γ` for `n ≥ N`.
pub fn apart_tail<M>(
    m: &M,
    cauchy: &CauchyCert<M::Elem>,
    a: &ApartFromZeroWitness<M::Elem>,
    w: &DensityWitness<M::Elem>,
) -> Result<(M::Elem, u64)>
where
    M: Group + Ordered,
{
    let flags = m.flags();
    if !(flags.group && flags.total_order) {
        return Err(Error::capability(format!("{}: not a totally ordered group", m.key())));
    }
    if !m.is_positive(&a.eps) {
        return Err(Error::not_positive(&a.eps));
    }
    let (beta, _) = w.split(&a.eps)?;
    let n = cauchy.index(&beta)?;
    let (gamma, _) = w.split(&m.sub(&a.eps, &beta))?;
    Ok((gamma, n))
}

/// Failures of `k ≥ n` and `‖x_k‖ ≥ ε` for `k = select(n)`, `n` in `ns`.
pub fn verify_apart_witness<G, M>(
    n: &NormedGroup<G, M>,
    x: &Seq<G::Elem>,
    a: &ApartFromZeroWitness<M::Elem>,
    ns: impl IntoIterator<Item = u64>,
) -> Vec<Violation>
where
    G: Group,
    M: Ordered,
{
    let mut out = Vec::new();
    for i in ns {
        let k = a.select(i);
        if k < i {
            out.push(Violation::new("apart: selected index below n", vals![i, k]));
            continue;
        }
        let nk = n.norm(&x.at(k));
        if !n.codomain().le(&a.eps, &nk) {
            out.push(Violation::new("apart: ||x_k|| below eps", vals![i, k, nk, a.eps]));
        }
    }
    out
}

/// Failures of `‖x_n‖ > γ` for `n ∈ [N, N + horizon]`.
pub fn verify_tail_apart<G, M>(n: &NormedGroup<G, M>, x: &Seq<G::Elem>, gamma: &M::Elem, start: u64, horizon: u64) -> Vec<Violation>
where
    G: Group,
    M: Ordered,
{
    (start..=start + horizon)
        .filter_map(|i| {
            let ni = n.norm(&x.at(i));
            (!n.codomain().lt(gamma, &ni)).then(|| Violation::new("apart: ||x_n|| not above gamma", vals![i, ni, gamma]))
        })
        .collect()
}

/// Outcome of the uniqueness argument run against two certificates with
/// different limits `a ≠ b`.
#[derive(Debug, Clone)]
pub struct Refutation<E> {
    /// `ε = d(a, b)`.
    pub eps: E,
    pub beta: E,
    pub gamma: E,
    /// `N = max(N₁(β), N₂(γ))`.
    pub n: u64,
    pub dist_a: E,
    pub dist_b: E,
    /// `ε ≤ d(x_N, a) ∗ d(x_N, b)`.
    pub triangle: bool,
    /// `β ∗ γ < ε`.
    pub split_below: bool,
    /// `d(x_N, a) < β`, the first certificate's claim at `N`.
    pub first_claim: bool,
    /// `d(x_N, b) < γ`, the second certificate's claim at `N`.
    pub second_claim: bool,
}

impl<E> Refutation<E> {
    /// Both claims together with the two exact facts would give `ε < ε`, so
    /// at least one claim must fail.
    pub fn contradiction_found(&self) -> bool {
        self.triangle && self.split_below && !(self.first_claim && self.second_claim)
    }
}

/// Run the uniqueness-of-limits argument on two certificates for the same
/// sequence.
pub fn refute_uniqueness<P, M>(
    space: &MetricSpace<P, M>,
    x: &Seq<P>,
    c1: &ConvCert<P, M::Elem>,
    c2: &ConvCert<P, M::Elem>,
    w: &DensityWitness<M::Elem>,
) -> Result<Refutation<M::Elem>>
where
    P: Element,
    M: Ordered,
{
    let m = space.codomain();
    let eps = space.distance(c1.limit(), c2.limit())?;
    if !m.is_positive(&eps) {
        return Err(Error::Precondition("the two limits coincide".into()));
    }
    let (beta, gamma) = w.split(&eps)?;
    let n = c1.index(&beta)?.max(c2.index(&gamma)?);
    let xn = x.at(n);
    let dist_a = space.distance(&xn, c1.limit())?;
    let dist_b = space.distance(&xn, c2.limit())?;
    Ok(Refutation {
        triangle: m.le(&eps, &m.op(&dist_a, &dist_b)),
        split_below: m.lt(&m.op(&beta, &gamma), &eps),
        first_claim: m.lt(&dist_a, &beta),
        second_claim: m.lt(&dist_b, &gamma),
        eps,
        beta,
        gamma,
        n,
        dist_a,
        dist_b,
    })
}

/// A sequence together with its convergence certificate.
pub struct ConvergentSeq<P, E> {
    pub seq: Seq<P>,
    pub cert: ConvCert<P, E>,
}

impl<P: Clone, E> Clone for ConvergentSeq<P, E> {
    fn clone(&self) -> Self {
        ConvergentSeq {
            seq: self.seq.clone(),
            cert: self.cert.clone(),
        }
    }
}

/// `Conv(R)` for a pseudonormed ring over a dense, shrinkable,
/// join-semilattice ordered ring, with the limit map `φ`.
pub struct ConvRing<R: Group + Hemiring, S: Hemiring + Ordered> {
    pub p: PseudonormedRing<R, S>,
    pub density: DensityWitness<S::Elem>,
    pub shrink: ShrinkWitness<S::Elem>,
    pub join: JoinWitness<S::Elem>,
    /// The `ε₀` used for boundedness.
    pub eps0: S::Elem,
}

impl<R, S> ConvRing<R, S>
where
    R: Group + Hemiring + Clone + 'static,
    S: Hemiring + Ordered + Clone + 'static,
{
    /// The constant sequence `c` with modulus 1.
    pub fn constant(&self, c: R::Elem) -> ConvergentSeq<R::Elem, S::Elem> {
        ConvergentSeq {
            seq: Seq::constant(c.clone()),
            cert: ConvCert::new(c, |_| Ok(1)),
        }
    }

    pub fn add(
        &self,
        x: &ConvergentSeq<R::Elem, S::Elem>,
        y: &ConvergentSeq<R::Elem, S::Elem>,
    ) -> Result<ConvergentSeq<R::Elem, S::Elem>> {
        let r = self.p.ring().clone();
        Ok(ConvergentSeq {
            seq: x.seq.zip_with(&y.seq, move |a, b| r.op(&a, &b)),
            cert: add_certs(self.p.ring(), &x.cert, &y.cert, &self.density)?,
        })
    }

    pub fn mul(
        &self,
        x: &ConvergentSeq<R::Elem, S::Elem>,
        y: &ConvergentSeq<R::Elem, S::Elem>,
    ) -> Result<ConvergentSeq<R::Elem, S::Elem>> {
        let r = self.p.ring().clone();
        let cert = prod_certs(
            &self.p, &x.seq, &x.cert, &y.cert, &self.density, &self.shrink, &self.join, &self.eps0,
        )?;
        Ok(ConvergentSeq {
            seq: x.seq.zip_with(&y.seq, move |a, b| r.mul(&a, &b)),
            cert,
        })
    }

    /// `φ(x) = lim x_n`.
    pub fn phi(&self, x: &ConvergentSeq<R::Elem, S::Elem>) -> R::Elem {
        x.cert.limit().clone()
    }

    /// Membership in `Zero(R) = ker φ`.
    pub fn in_zero_ideal(&self, x: &ConvergentSeq<R::Elem, S::Elem>) -> bool {
        *x.cert.limit() == self.p.ring().zero()
    }

    pub fn verify(&self, x: &ConvergentSeq<R::Elem, S::Elem>, grid: &[S::Elem], horizon: u64) -> Vec<Violation> {
        verify_conv_cert(&self.p.metric(), &x.seq, &x.cert, grid, horizon)
    }
}

//! Magma-valued metric spaces and normed groups.

use std::sync::Arc;

use num_rational::BigRational;
use rand::RngCore;

use crate::instances::{
    Instance, Integers, LexGroup, Localized, RationalFunctions, Rationals, ValueGroupSemiring,
};
use crate::order::{group_abs, Group, Magma, OrderResult, Ordered, Violation};
use crate::pseudonorm::padic_norm;
use crate::{vals, Error, Result};

type DistFn<P, E> = dyn Fn(&P, &P) -> Result<E> + Send + Sync;
type NormFn<G, E> = dyn Fn(&G) -> E + Send + Sync;

/// A set of points `P` with a distance into the ordered unital magma `M`.
pub struct MetricSpace<P, M: Magma> {
    name: String,
    codomain: M,
    dist: Arc<DistFn<P, M::Elem>>,
}

impl<P, M: Magma + Clone> Clone for MetricSpace<P, M> {
    fn clone(&self) -> Self {
        MetricSpace {
            name: self.name.clone(),
            codomain: self.codomain.clone(),
            dist: Arc::clone(&self.dist),
        }
    }
}

impl<P, M: Ordered> MetricSpace<P, M> {
    pub fn new(
        name: impl Into<String>,
        codomain: M,
        dist: impl Fn(&P, &P) -> Result<M::Elem> + Send + Sync + 'static,
    ) -> Self {
        MetricSpace {
            name: name.into(),
            codomain,
            dist: Arc::new(dist),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn codomain(&self) -> &M {
        &self.codomain
    }

    pub fn distance(&self, x: &P, y: &P) -> Result<M::Elem> {
        (self.dist)(x, y)
    }
}

/// A group `G` with a norm into the ordered unital magma `M`.
pub struct NormedGroup<G: Magma, M: Magma> {
    group: G,
    codomain: M,
    norm: Arc<NormFn<G::Elem, M::Elem>>,
}

impl<G: Magma + Clone, M: Magma + Clone> Clone for NormedGroup<G, M> {
    fn clone(&self) -> Self {
        NormedGroup {
            group: self.group.clone(),
            codomain: self.codomain.clone(),
            norm: Arc::clone(&self.norm),
        }
    }
}

impl<G: Group, M: Ordered> NormedGroup<G, M> {
    pub fn new(group: G, codomain: M, norm: impl Fn(&G::Elem) -> M::Elem + Send + Sync + 'static) -> Self {
        NormedGroup {
            group,
            codomain,
            norm: Arc::new(norm),
        }
    }

    pub fn group(&self) -> &G {
        &self.group
    }

    pub fn codomain(&self) -> &M {
        &self.codomain
    }

    pub fn norm(&self, g: &G::Elem) -> M::Elem {
        (self.norm)(g)
    }
}

/// The absolute-value norm `|x| = max{x, −x}` of a totally ordered group,
/// valued in the group itself.
pub fn absolute_value_norm<G>(g: &G) -> Result<NormedGroup<G, G>>
where
    G: Group + Ordered + Clone + 'static,
{
    if !g.flags().total_order {
        return Err(Error::capability(format!("{}: absolute value needs a total order", g.key())));
    }
    let inner = g.clone();
    Ok(NormedGroup::new(g.clone(), g.clone(), move |x| {
        group_abs(&inner, x).expect("total order checked")
    }))
}

/// `d(x, y) = |x − y|` on a totally ordered group.
pub fn absolute_value_metric<G>(g: &G) -> Result<MetricSpace<G::Elem, G>>
where
    G: Group + Ordered + Clone + 'static,
{
    if !g.flags().total_order {
        return Err(Error::capability(format!("{}: absolute value needs a total order", g.key())));
    }
    let inner = g.clone();
    Ok(MetricSpace::new(format!("{} |x-y|", g.key()), g.clone(), move |x, y| {
        group_abs(&inner, &inner.sub(x, y))
    }))
}

/// `d(g, h) = ‖g − h‖`.
pub fn induced_metric<G, M>(n: &NormedGroup<G, M>) -> MetricSpace<G::Elem, M>
where
    G: Group + Clone + 'static,
    M: Ordered + Clone + 'static,
{
    let norm = n.clone();
    MetricSpace::new(
        format!("{} induced", n.group.key()),
        n.codomain.clone(),
        move |x, y| Ok(norm.norm(&norm.group.sub(x, y))),
    )
}

/// Distance on tuples: the monoid sum of coordinate distances.
pub fn product_metric<P, M>(spaces: Vec<MetricSpace<P, M>>) -> Result<MetricSpace<Vec<P>, M>>
where
    P: 'static,
    M: Ordered + Clone + 'static,
{
    let first = spaces
        .first()
        .ok_or_else(|| Error::InvalidArgument("product of zero metric spaces".into()))?;
    let codomain = first.codomain.clone();
    let flags = codomain.flags();
    if !(flags.commutative_add && flags.associative && flags.unital) {
        return Err(Error::capability(format!("{}: not a commutative monoid", codomain.key())));
    }
    if let Some(other) = spaces.iter().find(|s| s.codomain.key() != codomain.key()) {
        return Err(Error::InvalidArgument(format!(
            "codomain mismatch: {} vs {}",
            codomain.key(),
            other.codomain.key()
        )));
    }
    let name = spaces.iter().map(|s| s.name.as_str()).collect::<Vec<_>>().join(" x ");
    let m = codomain.clone();
    Ok(MetricSpace::new(name, codomain, move |x: &Vec<P>, y: &Vec<P>| {
        for v in [x, y] {
            if v.len() != spaces.len() {
                return Err(Error::Dimension {
                    expected: spaces.len(),
                    got: v.len(),
                });
            }
        }
        let mut acc = m.zero();
        for ((s, a), b) in spaces.iter().zip(x).zip(y) {
            acc = m.op(&acc, &s.distance(a, b)?);
        }
        Ok(acc)
    }))
}

/// All failures of the three metric axioms on the triples of `sample`.
pub fn verify_metric<P, M>(space: &MetricSpace<P, M>, sample: &[P]) -> Vec<Violation>
where
    P: PartialEq + std::fmt::Display,
    M: Ordered,
{
    let m = &space.codomain;
    let zero = m.zero();
    let mut out = Vec::new();
    let dist = |x: &P, y: &P, out: &mut Vec<Violation>| match space.distance(x, y) {
        Ok(d) => Some(d),
        Err(e) => {
            out.push(Violation::new("metric: distance failed", vals![x, y, e]));
            None
        }
    };
    for x in sample {
        for y in sample {
            let Some(dxy) = dist(x, y, &mut out) else { continue };
            match m.compare(&zero, &dxy) {
                OrderResult::Less => {
                    if x == y {
                        out.push(Violation::new("metric: d(x,x) != 0", vals![x, dxy]));
                    }
                }
                OrderResult::Equal => {
                    if x != y {
                        out.push(Violation::new("metric: d(x,y) = 0 for x != y", vals![x, y]));
                    }
                }
                _ => out.push(Violation::new("metric: d(x,y) not >= 0", vals![x, y, dxy])),
            }
            if let Some(dyx) = dist(y, x, &mut out) {
                if dxy != dyx {
                    out.push(Violation::new("metric: not symmetric", vals![x, y, dxy, dyx]));
                }
            }
        }
    }
    for x in sample {
        for y in sample {
            let Some(dxy) = dist(x, y, &mut out) else { continue };
            for z in sample {
                let (Some(dyz), Some(dxz)) = (dist(y, z, &mut out), dist(x, z, &mut out)) else {
                    continue;
                };
                let bound = m.op(&dxy, &dyz);
                if !m.le(&dxz, &bound) {
                    out.push(Violation::new("metric: triangle inequality", vals![x, y, z, dxz, bound]));
                }
            }
        }
    }
    out
}

/// Norm axioms on a sample: positivity, `‖g − h‖ ≤ ‖g‖ + ‖h‖` and
/// `‖−g‖ = ‖g‖`.
pub fn verify_norm<G, M>(n: &NormedGroup<G, M>, sample: &[G::Elem]) -> Vec<Violation>
where
    G: Group,
    M: Ordered,
{
    let (g, m) = (&n.group, &n.codomain);
    let zero = g.zero();
    let mut out = Vec::new();
    for x in sample {
        let nx = n.norm(x);
        let expect_zero = *x == zero;
        match m.compare(&m.zero(), &nx) {
            OrderResult::Equal if expect_zero => {}
            OrderResult::Less if !expect_zero => {}
            _ => out.push(Violation::new("norm: positivity", vals![x, nx])),
        }
        let nn = n.norm(&g.neg(x));
        if nn != nx {
            out.push(Violation::new("norm: ||-g|| != ||g||", vals![x, nx, nn]));
        }
        for y in sample {
            let lhs = n.norm(&g.sub(x, y));
            let rhs = m.op(&nx, &n.norm(y));
            if !m.le(&lhs, &rhs) {
                out.push(Violation::new("norm: ||g-h|| <= ||g||+||h||", vals![x, y, lhs, rhs]));
            }
        }
    }
    out
}

/// `‖g‖ − ‖h‖ ≤ ‖g − h‖` on sampled pairs; needs a group codomain.
pub fn verify_reverse_triangle<G, M>(n: &NormedGroup<G, M>, sample: &[G::Elem]) -> Vec<Violation>
where
    G: Group,
    M: Group + Ordered,
{
    let (g, m) = (&n.group, &n.codomain);
    let mut out = Vec::new();
    for x in sample {
        for y in sample {
            let lhs = m.sub(&n.norm(x), &n.norm(y));
            let rhs = n.norm(&g.sub(x, y));
            if !m.le(&lhs, &rhs) {
                out.push(Violation::new("norm: reverse triangle", vals![x, y, lhs, rhs]));
            }
        }
    }
    out
}

/// Outcome of checking one registered space.
#[derive(Debug, Clone)]
pub struct MetricReport {
    pub name: String,
    pub points: usize,
    pub triples: usize,
    pub violations: Vec<Violation>,
}

/// A metric space with its own point sampler, checkable without knowing its
/// types.
pub trait RegisteredMetric: Send + Sync {
    fn name(&self) -> String;
    fn verify(&self, points: usize, rng: &mut dyn RngCore) -> MetricReport;
}

type Sampler<P> = dyn Fn(&mut dyn RngCore) -> P + Send + Sync;

struct Sampled<P, M: Magma> {
    space: MetricSpace<P, M>,
    sampler: Arc<Sampler<P>>,
}

impl<P, M> RegisteredMetric for Sampled<P, M>
where
    P: PartialEq + std::fmt::Display + 'static,
    M: Ordered,
{
    fn name(&self) -> String {
        self.space.name.clone()
    }

    fn verify(&self, points: usize, rng: &mut dyn RngCore) -> MetricReport {
        let sample: Vec<P> = (0..points).map(|_| (self.sampler)(rng)).collect();
        MetricReport {
            name: self.name(),
            points,
            triples: points.pow(3),
            violations: verify_metric(&self.space, &sample),
        }
    }
}

fn sampled<P, M>(space: MetricSpace<P, M>, sampler: impl Fn(&mut dyn RngCore) -> P + Send + Sync + 'static) -> Box<dyn RegisteredMetric>
where
    P: PartialEq + std::fmt::Display + 'static,
    M: Ordered + 'static,
{
    Box::new(Sampled {
        space,
        sampler: Arc::new(sampler),
    })
}

/// Points of ℚⁿ rendered as tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tuple(pub Vec<BigRational>);

impl std::fmt::Display for Tuple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `d(x, y) = |x − y|_p` on ℚ, valued in `G₀`.
pub fn padic_metric(p: u64) -> Result<MetricSpace<BigRational, ValueGroupSemiring>> {
    padic_norm(&BigRational::from_integer(1.into()), p)?;
    Ok(MetricSpace::new(format!("Q {p}-adic"), ValueGroupSemiring, move |x, y| {
        padic_norm(&(x - y), p)
    }))
}

/// ℓ¹ metric on ℚ², the product of two absolute-value metrics.
pub fn l1_plane_metric() -> MetricSpace<Tuple, Rationals> {
    let abs = absolute_value_metric(&Rationals).expect("Q is totally ordered");
    let product = product_metric(vec![abs.clone(), abs]).expect("Q is a commutative monoid");
    MetricSpace::new("Q2 l1", Rationals, move |x: &Tuple, y: &Tuple| product.distance(&x.0, &y.0))
}

/// The absolute-value metric of the lexicographic group. It fails the
/// triangle inequality, so it is kept out of [`registered_metrics`].
pub fn lex_metric() -> MetricSpace<<LexGroup as Magma>::Elem, LexGroup> {
    absolute_value_metric(&LexGroup).expect("lex order is total")
}

/// Every metric space checked by the metric suite.
pub fn registered_metrics() -> Vec<Box<dyn RegisteredMetric>> {
    let mut out = vec![
        sampled(absolute_value_metric(&Rationals).expect("total"), |r| Rationals.sample(r)),
        sampled(
            induced_metric(&absolute_value_norm(&Rationals).expect("total")),
            |r| Rationals.sample(r),
        ),
        sampled(absolute_value_metric(&Integers).expect("total"), |r| Integers.sample(r)),
        sampled(absolute_value_metric(&RationalFunctions).expect("total"), |r| {
            RationalFunctions.sample(r)
        }),
        sampled(l1_plane_metric(), |r| {
            Tuple(vec![Rationals.sample(r), Rationals.sample(r)])
        }),
    ];
    for p in [2u32, 3, 5] {
        let z = Localized::new(p).expect("prime");
        out.push(sampled(absolute_value_metric(&z).expect("total"), move |r| z.sample(r)));
        out.push(sampled(padic_metric(u64::from(p)).expect("prime"), |r| Rationals.sample(r)));
    }
    out
}

//! Property suites behind `ordalab check`, `ordalab series` and
//! `ordalab algebra`.
//!
//! A suite never aborts on a failed property: every check becomes a record.
//! Only usage problems (unknown structure, bad grid term) are errors.

use std::sync::{Arc, Mutex};

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{RunConfig, Suite};
use super::report::{Record, Recorder, Status};
use super::term::{parse, Term};
use crate::instances::{
    lookup, q, random_rational, GaussianRationals, IdealsZ, Instance, Integers, LexElem, LexGroup,
    Localized, OrthantModule, RationalFunctions, Rationals, Structure, Tropical, ValueGroupSemiring,
};
use crate::metric::{absolute_value_metric, absolute_value_norm, lex_metric, registered_metrics, verify_metric, Tuple};
use crate::order::{
    check_archimedean, check_density, check_join, check_shrink, verify_compatibility, verify_mul_compatibility,
    betweenness, density_from_unit_interval, division_shrink_witness, n_split, CompatMode,
    OrderedRing, Semiring, Violation,
};
use crate::pseudonorm::{
    absolute_value_pseudonorm, albert_constant, albert_pseudonorm, coefficient_grid, coefficient_norm,
    ordered_ring_pseudonorm, verify_pseudonorm_pairs, AlgebraTable, FinDimAlgebra,
};
use crate::sequences::{
    add_certs, apart_tail, conv_to_cauchy, prod_certs, refute_uniqueness, subseq_rescue, verify_apart_witness,
    verify_cauchy_cert, verify_conv_cert, verify_tail_apart, zero_times_bounded, ApartFromZeroWitness, CauchyCert,
    ConvCert, ConvRing, ConvergentSeq, Seq, SubseqMap,
};
use crate::series::{
    abs_conv_cauchy, alternating_cauchy, alternating_series, archimedean_chain, archimedean_power_modulus,
    bernoulli_check, condensation_inequalities, condense, condensed_series, geometric_cert, geometric_closed_form,
    geometric_inverse, geometric_series, power_limit_is_zero, ratio_cauchy, tail_bound, terms_vanish, Bernoulli,
    Direction, MonotoneEvidence, MonotoneKind, Series,
};
use crate::{Error, Result};

/// Largest index tried when a modulus is found by search.
pub const SEARCH_CAP: u64 = 1 << 16;
/// Search cap used when probing candidate ratios.
const PROBE_CAP: u64 = 256;
/// Indices on which hypotheses about a term sequence are checked.
const HYPOTHESIS_CHECKS: u64 = 256;
/// Pair horizon for condensed series, whose terms grow doubly exponentially.
const CONDENSED_HORIZON: u64 = 8;
/// Largest checked index of a condensed certificate.
const CONDENSED_CAP: u64 = 6;
/// Hypothesis checks on condensed terms `2^k x_{2^k}`, which index `x` at `2^k`.
const CONDENSED_CHECKS: u64 = 16;
/// Largest certified index whose claim is checked against exact partial sums.
const VERIFY_CAP: u64 = 1 << 10;
/// Points per registered metric space; `10³` triples each.
const METRIC_POINTS: usize = 10;

/// Resolution of grid-override terms. Ring structures evaluate with their
/// own operations, so `1/X` works in `Z(X)`; the others embed a rational.
pub trait Carrier: Instance {
    fn constant(&self, t: &Term) -> Result<Self::Elem>;
}

macro_rules! ring_carrier {
    ($($t:ty),*) => {$(
        impl Carrier for $t {
            fn constant(&self, t: &Term) -> Result<Self::Elem> {
                if t.has_var() {
                    return Err(Error::Evaluation("a constant cannot mention n".into()));
                }
                t.eval(self, 1)
            }
        }
    )*};
}

macro_rules! embedded_carrier {
    ($($t:ty),*) => {$(
        impl Carrier for $t {
            fn constant(&self, t: &Term) -> Result<Self::Elem> {
                t.eval_constant(self)
            }
        }
    )*};
}

ring_carrier!(Rationals, Integers, Localized, RationalFunctions, GaussianRationals);
embedded_carrier!(Tropical, LexGroup, IdealsZ, OrthantModule, ValueGroupSemiring);

macro_rules! with_ordered_ring {
    ($structure:expr, $s:ident => $body:expr, _ => $other:expr) => {
        match $structure {
            Structure::Q($s) => $body,
            Structure::Z($s) => $body,
            Structure::Localized($s) => $body,
            Structure::RatFunc($s) => $body,
            _ => $other,
        }
    };
}

macro_rules! with_semiring {
    ($structure:expr, $s:ident => $body:expr, _ => $other:expr) => {
        match $structure {
            Structure::Q($s) => $body,
            Structure::Z($s) => $body,
            Structure::Localized($s) => $body,
            Structure::RatFunc($s) => $body,
            Structure::Gaussian($s) => $body,
            Structure::Ideals($s) => $body,
            Structure::Valuation($s) => $body,
            _ => $other,
        }
    };
}

/// Shared settings of one run.
pub struct Ctx {
    grid: Option<Vec<Term>>,
    pub horizon: u64,
    pub seed: u64,
}

impl Ctx {
    pub fn new(grid: Option<Vec<Term>>, horizon: u64, seed: u64) -> Self {
        Ctx { grid, horizon, seed }
    }

    /// Each suite draws from its own stream, so `all` reproduces the single
    /// suite runs.
    fn rng(&self, suite: Suite) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ suite as u64)
    }

    fn grid<I: Carrier>(&self, s: &I) -> Result<Vec<I::Elem>> {
        let Some(terms) = &self.grid else {
            return Ok(s.epsilon_grid());
        };
        terms
            .iter()
            .map(|t| {
                let e = s.constant(t)?;
                if !s.is_positive(&e) {
                    return Err(Error::InvalidArgument(format!("grid entry {t} = {e} is not positive in {}", s.key())));
                }
                Ok(e)
            })
            .collect()
    }
}

/// Run the configured suite (or all of them) on one structure.
pub fn run_check(cfg: &RunConfig) -> Result<Vec<Record>> {
    let structure = lookup(&cfg.structure)?;
    let grid = cfg
        .grid
        .as_ref()
        .map(|g| g.iter().map(|src| parse(src)).collect::<Result<Vec<_>>>())
        .transpose()?;
    let ctx = Ctx::new(grid, cfg.horizon, cfg.seed);
    let suites: Vec<Suite> = if cfg.suite == Suite::All { Suite::EACH.to_vec() } else { vec![cfg.suite] };
    let mut out = Vec::new();
    for suite in suites {
        out.extend(run_one(structure, suite, &ctx)?);
    }
    Ok(out)
}

fn run_one(structure: Structure, suite: Suite, ctx: &Ctx) -> Result<Vec<Record>> {
    let mut rec = Recorder::new(suite.name(), structure.key());
    let r = &mut rec;
    let not_ordered_ring = |r: &mut Recorder| {
        r.unverifiable("ordered ring", format!("{} is not a totally ordered ring with 1", structure.key()));
        Ok(())
    };
    match suite {
        Suite::Axioms => {
            crate::dispatch!(structure, s => axioms(&s, ctx, r))?;
            with_semiring!(structure, s => semiring_axioms(&s, ctx, r), _ => Ok(()))?;
        }
        Suite::Density => {
            crate::dispatch!(structure, s => density(&s, ctx, r))?;
            with_ordered_ring!(structure, s => ring_density(&s, ctx, r), _ => Ok(()))?;
        }
        Suite::Shrink => with_semiring!(structure, s => shrink(&s, ctx, r), _ => {
            r.unverifiable("shrinkable hemiring", format!("{} is not a semiring", structure.key()));
            Ok(())
        })?,
        Suite::Metric => metric(structure, ctx, r),
        Suite::Sequence => with_ordered_ring!(structure, s => sequence(&s, ctx, r), _ => not_ordered_ring(r))?,
        Suite::Series => with_ordered_ring!(structure, s => series(&s, ctx, r), _ => not_ordered_ring(r))?,
        Suite::Condensation => {
            with_ordered_ring!(structure, s => condensation(&s, ctx, r), _ => not_ordered_ring(r))?
        }
        Suite::Geometric => with_ordered_ring!(structure, s => geometric(&s, ctx, r), _ => not_ordered_ring(r))?,
        Suite::Bernoulli => with_ordered_ring!(structure, s => bernoulli(&s, ctx, r), _ => not_ordered_ring(r))?,
        Suite::Albert => match structure {
            Structure::Q(_) => {
                let mut rng = ctx.rng(Suite::Albert);
                for alg in [
                    FinDimAlgebra::gaussian(),
                    FinDimAlgebra::sqrt10(),
                    FinDimAlgebra::matrices2(),
                    FinDimAlgebra::quaternions(),
                ] {
                    let expect = alg.name == FinDimAlgebra::sqrt10().name;
                    algebra_checks(&alg, &mut rng, expect, false, r);
                }
            }
            _ => r.unverifiable("Albert pseudonorm", "algebras are shipped over Q only"),
        },
        Suite::All => unreachable!("expanded by run_check"),
    }
    Ok(rec.records)
}

fn values<E: std::fmt::Display>(xs: &[E]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn sample<I: Instance>(s: &I, rng: &mut dyn RngCore, random: usize) -> Vec<I::Elem> {
    let mut out = vec![s.zero()];
    for x in s.epsilon_grid().into_iter().chain(s.magnitude_grid()).chain((0..random).map(|_| s.sample(rng))) {
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

fn axioms<I: Carrier>(s: &I, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let mut rng = ctx.rng(Suite::Axioms);
    let flags = s.flags();
    let bad: Vec<Violation> = flags
        .inconsistencies()
        .into_iter()
        .map(|why| Violation::new("structure flags inconsistent", vec![why.to_string()]))
        .collect();
    rec.outcome("structure flags", bad, vec![format!("{flags:?}")]);

    let pts = sample(s, &mut rng, 8);
    let mode = s.compat_mode();
    let label = match mode {
        CompatMode::Strict => "strict",
        CompatMode::Weak => "weak",
    };
    rec.outcome(
        "order compatibility",
        verify_compatibility(s, &pts, mode),
        vec![label.into(), pts.len().to_string()],
    );

    if flags.join_semilattice {
        match s.join() {
            Some(j) => rec.outcome("join semilattice", check_join(s, &j, &pts), vec![pts.len().to_string()]),
            None => rec.unverifiable("join semilattice", "no join witness registered"),
        }
    }
    if let Some(a) = s.archimedean() {
        let grid = ctx.grid(s)?;
        rec.outcome(
            "Archimedean property",
            check_archimedean(s, &a, &grid, &s.magnitude_grid()),
            vec![grid.len().to_string()],
        );
    }
    Ok(())
}

fn semiring_axioms<H: Instance + Semiring>(s: &H, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let mut rng = ctx.rng(Suite::Axioms);
    let pts: Vec<H::Elem> = sample(s, &mut rng, 4).into_iter().take(10).collect();
    rec.outcome(
        "multiplicative compatibility",
        verify_mul_compatibility(s, &pts, CompatMode::Weak),
        vec![pts.len().to_string()],
    );
    let mut bad = Vec::new();
    for a in &pts {
        if s.mul(a, &s.zero()) != s.zero() || s.mul(&s.zero(), a) != s.zero() {
            bad.push(Violation::new("zero not absorbing", values(&[a])));
        }
        if s.mul(a, &s.one()) != *a || s.mul(&s.one(), a) != *a {
            bad.push(Violation::new("one not a multiplicative identity", values(&[a])));
        }
        for b in &pts {
            for c in &pts {
                let bc = s.op(b, c);
                if s.mul(a, &bc) != s.op(&s.mul(a, b), &s.mul(a, c)) {
                    bad.push(Violation::new("left distributivity", values(&[a, b, c])));
                }
                if s.mul(&bc, a) != s.op(&s.mul(b, a), &s.mul(c, a)) {
                    bad.push(Violation::new("right distributivity", values(&[a, b, c])));
                }
                if s.mul(&s.mul(a, b), c) != s.mul(a, &s.mul(b, c)) {
                    bad.push(Violation::new("associativity of multiplication", values(&[a, b, c])));
                }
            }
        }
    }
    rec.outcome("hemiring laws", bad, vec![pts.len().to_string()]);
    Ok(())
}

fn density<I: Carrier>(s: &I, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let Some(w) = s.density() else {
        rec.unverifiable("dense unital magma", format!("no density witness registered for {}", s.key()));
        return Ok(());
    };
    let grid = ctx.grid(s)?;
    for eps in &grid {
        let vals = w.split(eps).map(|(b, g)| values(&[b, g])).unwrap_or_default();
        rec.outcome("dense unital magma", check_density(s, &w, std::slice::from_ref(eps)), vals);
    }
    for n in 1..=8usize {
        let mut bad = Vec::new();
        let mut shown = Vec::new();
        for eps in &grid {
            match n_split(s, eps, n, &w) {
                Err(e) => bad.push(Violation::new("n-split failed", vec![n.to_string(), eps.to_string(), e.to_string()])),
                Ok(parts) => {
                    if parts.len() != n || !parts.iter().all(|p| s.is_positive(p)) {
                        bad.push(Violation::new("n-split parts not positive", values(&parts)));
                    }
                    let total = s.sum(&parts);
                    if !s.lt(&total, eps) {
                        bad.push(Violation::new("n-split sum not below eps", vec![eps.to_string(), total.to_string()]));
                    }
                    if shown.is_empty() {
                        shown = values(&parts);
                    }
                }
            }
        }
        rec.outcome("n-fold split", bad, shown);
    }
    Ok(())
}

/// An element strictly between 0 and 1, preferring 1/2.
fn unit_interval_point<R: Carrier + OrderedRing>(s: &R) -> Option<R::Elem> {
    let one = s.one();
    s.embed(&q(1, 2))
        .into_iter()
        .chain(s.epsilon_grid())
        .find(|a| s.is_positive(a) && s.lt(a, &one))
}

fn ring_density<R: Carrier + OrderedRing>(s: &R, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let (Some(w), Some(alpha)) = (s.density(), unit_interval_point(s)) else {
        return Ok(());
    };
    let grid = ctx.grid(s)?;
    match density_from_unit_interval(s, &alpha) {
        Ok(derived) => rec.outcome(
            "density from the unit interval",
            check_density(s, &derived, &grid),
            values(&[alpha]),
        ),
        Err(e) => rec.result("density from the unit interval", Err(e)),
    }
    let mut rng = ctx.rng(Suite::Density);
    let mut bad = Vec::new();
    let mut pairs = 0;
    while pairs < 50 {
        let (a, b) = (s.sample(&mut rng), s.sample(&mut rng));
        let (lo, hi) = match s.compare(&a, &b) {
            crate::order::OrderResult::Less => (a, b),
            crate::order::OrderResult::Greater => (b, a),
            _ => continue,
        };
        pairs += 1;
        match betweenness(s, &lo, &hi, &w) {
            Ok(mid) if s.lt(&lo, &mid) && s.lt(&mid, &hi) => {}
            Ok(mid) => bad.push(Violation::new("betweenness: not strictly between", values(&[lo, mid, hi]))),
            Err(e) => bad.push(Violation::new("betweenness failed", vec![lo.to_string(), hi.to_string(), e.to_string()])),
        }
    }
    rec.outcome("betweenness", bad, vec![pairs.to_string()]);
    Ok(())
}

fn shrink<H: Carrier + Semiring>(s: &H, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let Some(w) = s.shrink() else {
        rec.unverifiable("shrinkable hemiring", format!("no shrink witness registered for {}", s.key()));
        return Ok(());
    };
    let grid = ctx.grid(s)?;
    let bounds = s.magnitude_grid();
    for alpha in &grid {
        let shown = bounds
            .last()
            .and_then(|m| w.shrink(alpha, m).ok())
            .map(|sh| values(&[sh.left, sh.right]))
            .unwrap_or_default();
        rec.outcome("shrinkable hemiring", check_shrink(s, &w, std::slice::from_ref(alpha), &bounds), shown);
    }
    if s.flags().division_ring {
        if let Some(d) = s.density() {
            match division_shrink_witness(s, &d) {
                Ok(derived) => rec.outcome(
                    "division ring shrink",
                    check_shrink(s, &derived, &grid, &bounds),
                    vec![grid.len().to_string(), bounds.len().to_string()],
                ),
                Err(e) => rec.result("division ring shrink", Err(e)),
            }
        }
    }
    Ok(())
}

fn metric(structure: Structure, ctx: &Ctx, rec: &mut Recorder) {
    let key = structure.key();
    let mut rng = ctx.rng(Suite::Metric);
    if let Structure::Lex(g) = structure {
        // a known triangle failure first, then random points
        let mut pts = vec![
            LexElem::new(-2, q(-3, 2)),
            LexElem::new(-1, q(-3, 2)),
            LexElem::int(-1, -1),
        ];
        pts.extend((0..METRIC_POINTS - 3).map(|_| g.sample(&mut rng)));
        let d = lex_metric();
        rec.outcome("metric axioms", verify_metric(&d, &pts), vec!["Lex |x-y|".into(), pts.len().to_string()]);
        return;
    }
    let prefix = format!("{key} ");
    let mut found = false;
    for m in registered_metrics().into_iter().filter(|m| m.name().starts_with(&prefix)) {
        found = true;
        let report = m.verify(METRIC_POINTS, &mut rng);
        rec.outcome(
            "metric axioms",
            report.violations,
            vec![report.name, report.points.to_string(), report.triples.to_string()],
        );
    }
    if !found {
        rec.unverifiable("metric axioms", format!("no metric registered for {key}"));
    }
}

/// Certificate for `x_n = rⁿ → 0`: the least `N ≥ 1` with `|r|^N < ε`.
/// Sound because `|r|ⁿ` decreases once `|r| < 1`.
pub fn power_cert<R: OrderedRing + Clone + 'static>(s: &R, r: &R::Elem, cap: u64) -> Result<ConvCert<R::Elem, R::Elem>> {
    let a = s.abs(r);
    if !s.lt(&a, &s.one()) {
        return Err(Error::InvalidArgument(format!("|r| = {a} is not below 1")));
    }
    let s = s.clone();
    Ok(ConvCert::new(s.zero(), move |eps| {
        let mut p = a.clone();
        for n in 1..=cap {
            if s.lt(&p, eps) {
                return Ok(n);
            }
            p = s.mul(&p, &a);
        }
        Err(Error::Evaluation(format!("|r|^n stays above {eps} for n <= {cap}")))
    }))
}

/// Certificate for a sequence with `|x_n|` decreasing to 0, trusted beyond
/// the checked indices: the least `N ≥ 1` with `|x_N| < ε`.
fn decreasing_cert<R: OrderedRing + Clone + 'static>(s: &R, x: &Seq<R::Elem>) -> ConvCert<R::Elem, R::Elem> {
    let (s, x) = (s.clone(), x.clone());
    ConvCert::new(s.zero(), move |eps| {
        (1..=SEARCH_CAP)
            .find(|&n| s.lt(&s.abs(&x.at(n)), eps))
            .ok_or_else(|| Error::Evaluation(format!("|x_n| stays above {eps} for n <= {SEARCH_CAP}")))
    })
}

/// Positive ratios below 1: 1/2, 2/3, 3/4, 9/10 when embedded, then the
/// ε-grid entries below 1.
fn ratio_candidates<R: Carrier + OrderedRing>(s: &R, grid: &[R::Elem]) -> Vec<R::Elem> {
    let one = s.one();
    let mut out: Vec<R::Elem> = Vec::new();
    let embedded = [q(1, 2), q(2, 3), q(3, 4), q(9, 10)].into_iter().filter_map(|c| s.embed(&c));
    for c in embedded.chain(grid.iter().cloned()) {
        if s.is_positive(&c) && s.lt(&c, &one) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// The first candidate ratio whose powers fall below every grid entry.
fn default_ratio<R: Carrier + OrderedRing>(s: &R, grid: &[R::Elem]) -> Option<R::Elem> {
    ratio_candidates(s, grid).into_iter().find(|r| {
        power_cert(s, r, PROBE_CAP).is_ok_and(|c| grid.iter().all(|e| c.index(e).is_ok()))
    })
}

fn moduli<E: std::fmt::Display>(grid: &[E], index: impl Fn(&E) -> Result<u64>) -> Vec<String> {
    grid.iter()
        .map(|e| match index(e) {
            Ok(n) => format!("N({e}) = {n}"),
            Err(err) => format!("N({e}): {err}"),
        })
        .collect()
}

fn powers<R: OrderedRing + Clone + 'static>(s: &R, r: &R::Elem) -> Seq<R::Elem> {
    let (s, r) = (s.clone(), r.clone());
    Seq::new(move |n| s.pow(&r, n))
}

fn sequence<R: Carrier + OrderedRing>(s: &R, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let grid = ctx.grid(s)?;
    let h = ctx.horizon;
    let Some(r) = default_ratio(s, &grid) else {
        rec.unverifiable("convergence certificate", format!("no ratio in (0, 1) with a power modulus in {}", s.key()));
        return Ok(());
    };
    let d = absolute_value_metric(s)?;
    let norm = absolute_value_norm(s)?;
    let x = powers(s, &r);
    let cx = power_cert(s, &r, SEARCH_CAP)?;
    let mut echo = vec![format!("r = {r}")];
    echo.extend(moduli(&grid, |e| cx.index(e)));
    rec.outcome("convergence certificate", verify_conv_cert(&d, &x, &cx, &grid, h), echo);

    let (Some(w), Some(sw), Some(j)) = (s.density(), s.shrink(), s.join()) else {
        rec.unverifiable("certificate transformations", format!("{} lacks density, shrink or join witnesses", s.key()));
        return Ok(());
    };
    let one = s.one();
    let cauchy = conv_to_cauchy(&cx, &w);
    rec.outcome(
        "Cauchy from convergence",
        verify_cauchy_cert(&d, &x, &cauchy, &grid, h),
        moduli(&grid, |e| cauchy.index(e)),
    );

    let g = s.clone();
    let doubled = x.zip_with(&x, move |a, b| g.op(&a, &b));
    rec.result(
        "sum of limits",
        add_certs(s, &cx, &cx, &w).map(|c| (verify_conv_cert(&d, &doubled, &c, &grid, h), moduli(&grid, |e| c.index(e)))),
    );

    // y_n = 1 + rⁿ → 1 with the same modulus
    let g = s.clone();
    let y = x.map(move |a| g.op(&g.one(), &a));
    let cy = {
        let m = cx.modulus();
        ConvCert::new(one.clone(), move |e| m(e))
    };
    let p = ordered_ring_pseudonorm(s)?;
    let g = s.clone();
    let xy = x.zip_with(&y, move |a, b| g.mul(&a, &b));
    rec.result(
        "product of limits",
        prod_certs(&p, &x, &cx, &cy, &w, &sw, &j, &one)
            .map(|c| (verify_conv_cert(&d, &xy, &c, &grid, h), moduli(&grid, |e| c.index(e)))),
    );

    let sub = SubseqMap::new(|k| 2 * k);
    let csub = power_cert(s, &s.mul(&r, &r), SEARCH_CAP)?;
    rec.result(
        "subsequence rescue",
        subseq_rescue(&cauchy, &sub, &csub, &w, h)
            .map(|c| (verify_conv_cert(&d, &x, &c, &grid, h), moduli(&grid, |e| c.index(e)))),
    );

    let g = s.clone();
    let signs: Seq<R::Elem> = Seq::new(move |n| if n % 2 == 0 { g.one() } else { g.neg(&g.one()) });
    let g = s.clone();
    let xs = x.zip_with(&signs, move |a, b| g.mul(&a, &b));
    let g = s.clone();
    let sx = signs.zip_with(&x, move |a, b| g.mul(&a, &b));
    rec.result(
        "null times bounded",
        zero_times_bounded(&p, &cx, &signs, &one, &sw, 128).map(|(l, rt)| {
            let mut bad = verify_conv_cert(&d, &xs, &l, &grid, h);
            bad.extend(verify_conv_cert(&d, &sx, &rt, &grid, h));
            (bad, moduli(&grid, |e| l.index(e)))
        }),
    );

    let apart = ApartFromZeroWitness::new(one.clone(), |n| n);
    let cy_cauchy = conv_to_cauchy(&cy, &w);
    rec.result(
        "tail apart from zero",
        apart_tail(s, &cy_cauchy, &apart, &w).map(|(gamma, start)| {
            let mut bad = verify_apart_witness(&norm, &y, &apart, 1..=h);
            bad.extend(verify_tail_apart(&norm, &y, &gamma, start, h));
            (bad, vec![gamma.to_string(), start.to_string()])
        }),
    );

    // the same modulus claimed for the wrong limit 1
    let wrong = {
        let m = cx.modulus();
        ConvCert::new(one.clone(), move |e| m(e))
    };
    match refute_uniqueness(&d, &x, &cx, &wrong, &w) {
        Ok(rf) => {
            let vals = vec![
                rf.eps.to_string(),
                rf.beta.to_string(),
                rf.gamma.to_string(),
                rf.n.to_string(),
                rf.dist_a.to_string(),
                rf.dist_b.to_string(),
            ];
            let bad = if rf.contradiction_found() {
                Vec::new()
            } else {
                vec![Violation::new("uniqueness: no contradiction derived", vals.clone())]
            };
            rec.outcome("uniqueness of limits", bad, vals);
        }
        Err(e) => rec.result("uniqueness of limits", Err(e)),
    }

    let ring = ConvRing {
        p,
        density: w,
        shrink: sw,
        join: j,
        eps0: one.clone(),
    };
    rec.result("limit homomorphism", conv_ring_laws(s, &ring, &x, &cx, &y, &cy, &r, &grid, h));
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn conv_ring_laws<R: OrderedRing + Clone + 'static>(
    s: &R,
    ring: &ConvRing<R, R>,
    x: &Seq<R::Elem>,
    cx: &ConvCert<R::Elem, R::Elem>,
    y: &Seq<R::Elem>,
    cy: &ConvCert<R::Elem, R::Elem>,
    c: &R::Elem,
    grid: &[R::Elem],
    h: u64,
) -> Result<(Vec<Violation>, Vec<String>)> {
    let a = ConvergentSeq { seq: x.clone(), cert: cx.clone() };
    let b = ConvergentSeq { seq: y.clone(), cert: cy.clone() };
    let k = ring.constant(c.clone());
    let sum = ring.add(&a, &b)?;
    let prod = ring.mul(&b, &k)?;
    let null = ring.mul(&a, &b)?;
    let mut bad = Vec::new();
    for z in [&sum, &prod, &null, &k] {
        bad.extend(ring.verify(z, grid, h));
    }
    if ring.phi(&sum) != s.op(&ring.phi(&a), &ring.phi(&b)) {
        bad.push(Violation::new("limit map not additive", values(&[ring.phi(&sum)])));
    }
    if ring.phi(&prod) != s.mul(&ring.phi(&b), &ring.phi(&k)) {
        bad.push(Violation::new("limit map not multiplicative", values(&[ring.phi(&prod)])));
    }
    if ring.phi(&k) != *c {
        bad.push(Violation::new("limit map moves constants", values(&[ring.phi(&k), c.clone()])));
    }
    if !ring.in_zero_ideal(&a) || !ring.in_zero_ideal(&null) {
        bad.push(Violation::new("zero ideal not absorbing", values(&[ring.phi(&null)])));
    }
    Ok((bad, values(&[ring.phi(&sum), ring.phi(&prod), ring.phi(&null)])))
}

fn series<R: Carrier + OrderedRing>(s: &R, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let grid = ctx.grid(s)?;
    let h = ctx.horizon;
    let Some(r) = default_ratio(s, &grid) else {
        rec.unverifiable("geometric series", format!("no ratio in (0, 1) with a power modulus in {}", s.key()));
        return Ok(());
    };
    let (Some(w), Some(sw)) = (s.density(), s.shrink()) else {
        rec.unverifiable("geometric series", format!("{} lacks density or shrink witnesses", s.key()));
        return Ok(());
    };
    let d = absolute_value_metric(s)?;
    let norm = absolute_value_norm(s)?;
    let x = powers(s, &r);
    let cx = power_cert(s, &r, SEARCH_CAP)?;
    let one = s.one();
    let geo = match geometric_inverse(s, &r).and_then(|inv| geometric_cert(s, &r, &cx, &inv, &one, &sw)) {
        Ok(g) => g,
        Err(e) => {
            rec.result("geometric series", Err(e));
            return Ok(());
        }
    };
    let sum = Series::new(s.clone(), x.clone(), 0);

    rec.result(
        "terms vanish",
        terms_vanish(&norm, &geo, &w).map(|c| (verify_conv_cert(&d, &x, &c, &grid, h), moduli(&grid, |e| c.index(e)))),
    );

    let cauchy = conv_to_cauchy(&geo, &w);
    let mut bad = Vec::new();
    for eps in &grid {
        let n0 = cauchy.index(eps)?;
        for m in n0..n0 + 6 {
            for k in m..n0 + 8 {
                if let Some(v) = tail_bound(&norm, &sum, &cauchy, eps, m, k)? {
                    bad.push(v);
                }
            }
        }
    }
    rec.outcome("Cauchy tail bound", bad, moduli(&grid, |e| cauchy.index(e)));

    match MonotoneEvidence::check(s, &x, MonotoneKind::StrictlyDecreasingPositive, HYPOTHESIS_CHECKS) {
        Ok(mono) => {
            let alt = alternating_series(s, &x);
            rec.result(
                "alternating series",
                alternating_cauchy(s, &mono, &cx)
                    .map(|c| (verify_cauchy_cert(&d, &alt.partials(), &c, &grid, h), moduli(&grid, |e| c.index(e)))),
            );
        }
        Err(e) => rec.result("alternating series", Err(e)),
    }

    let g = s.clone();
    let signed: Seq<R::Elem> = x.zip_with(&Seq::new(|n| n), move |a, n| if n % 2 == 0 { a } else { g.neg(&a) });
    let signed_sum = Series::new(s.clone(), signed.clone(), 0);
    rec.result(
        "absolute convergence",
        abs_conv_cauchy(&norm, &cauchy).map(|c| {
            (
                verify_cauchy_cert(&d, &signed_sum.partials(), &c, &grid, h),
                moduli(&grid, |e| c.index(e)),
            )
        }),
    );
    rec.result(
        "ratio test",
        ratio_cauchy(&norm, &signed, &r, HYPOTHESIS_CHECKS, &geo, &w).map(|c| {
            (
                verify_cauchy_cert(&d, &signed_sum.partials(), &c, &grid, h),
                moduli(&grid, |e| c.index(e)),
            )
        }),
    );
    Ok(())
}


fn condensation<R: Carrier + OrderedRing>(s: &R, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let grid = ctx.grid(s)?;
    let Some(r) = default_ratio(s, &grid) else {
        rec.unverifiable("condensation", format!("no ratio in (0, 1) with a power modulus in {}", s.key()));
        return Ok(());
    };
    let x = powers(s, &r);
    rec.outcome("condensation inequalities", condensation_inequalities(s, &x, 10), vec![format!("x_n = {r}^n")]);
    condensation_flow(s, &x, ctx, rec)
}

/// Verify a Cauchy certificate on the grid entries whose index is at most
/// `cap`, with pairs reaching at most `cap + h`; larger indices are echoed as
/// unchecked.
fn verify_cauchy_capped<R: OrderedRing + Clone + 'static>(
    d: &crate::metric::MetricSpace<R::Elem, R>,
    x: &Seq<R::Elem>,
    c: &CauchyCert<R::Elem>,
    grid: &[R::Elem],
    cap: u64,
    h: u64,
) -> (Vec<Violation>, Vec<String>) {
    let mut bad = Vec::new();
    let mut echo = Vec::new();
    let mut checked = 0;
    for e in grid {
        match c.index(e) {
            Ok(n) if n <= cap => {
                checked += 1;
                bad.extend(verify_cauchy_cert(d, x, c, std::slice::from_ref(e), h));
                echo.push(format!("N({e}) = {n}"));
            }
            Ok(n) => echo.push(format!("N({e}) = {n}, unchecked above {cap}")),
            Err(err) => echo.push(format!("N({e}): {err}")),
        }
    }
    if checked == 0 {
        bad.push(Violation::new("no grid entry within the verification cap", echo.clone()));
    }
    (bad, echo)
}

/// Cauchy certificate of `Σ_{n≥1} x_n` from the ratio test, if some
/// candidate ratio bounds `|x_{n+1}| / |x_n|` on the checked indices.
fn ratio_derived<R: Carrier + OrderedRing>(
    s: &R,
    x: &Seq<R::Elem>,
    first: u64,
    checks: u64,
    grid: &[R::Elem],
) -> Option<(R::Elem, CauchyCert<R::Elem>)> {
    let (w, sw) = (s.density()?, s.shrink()?);
    let norm = absolute_value_norm(s).ok()?;
    let shifted = x.shift(first);
    let mut candidates = ratio_candidates(s, grid);
    candidates.sort_by(|a, b| if s.lt(a, b) { std::cmp::Ordering::Less } else if s.lt(b, a) { std::cmp::Ordering::Greater } else { std::cmp::Ordering::Equal });
    let bounded = |r: &R::Elem| {
        (0..checks).all(|n| s.le(&s.abs(&shifted.at(n + 1)), &s.mul(r, &s.abs(&shifted.at(n)))))
    };
    for r in candidates.into_iter().filter(bounded) {
        let Ok(c0) = power_cert(s, &r, SEARCH_CAP) else { continue };
        let Ok(inv) = geometric_inverse(s, &r) else { continue };
        let x0 = s.abs(&shifted.at(0));
        let Ok(geo) = geometric_cert(s, &r, &c0, &inv, &x0, &sw) else { continue };
        if let Ok(c) = ratio_cauchy(&norm, &shifted, &r, checks, &geo, &w) {
            // partial sums from index `first` lag the shifted ones by `first`
            return Some((r, CauchyCert::new(move |e| Ok(c.index(e)? + first))));
        }
    }
    None
}

/// Both condensation directions for `Σ_{n≥1} x_n`, starting from whichever
/// side the ratio test certifies.
fn condensation_flow<R: Carrier + OrderedRing>(s: &R, x: &Seq<R::Elem>, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let grid = ctx.grid(s)?;
    let h = ctx.horizon;
    let Some(w) = s.density() else {
        rec.unverifiable("condensation", format!("no density witness registered for {}", s.key()));
        return Ok(());
    };
    let d = absolute_value_metric(s)?;
    let mono = match MonotoneEvidence::check(s, x, MonotoneKind::DecreasingPositive, HYPOTHESIS_CHECKS) {
        Ok(m) => m,
        Err(e) => {
            rec.unverifiable("condensation", e);
            return Ok(());
        }
    };
    let original = Series::new(s.clone(), x.clone(), 1);
    let condensed = condensed_series(s, x);
    if let Some((r, c)) = ratio_derived(s, x, 1, HYPOTHESIS_CHECKS, &grid) {
        let mut echo = vec![format!("ratio {r}")];
        echo.extend(moduli(&grid, |e| c.index(e)));
        rec.outcome("ratio test", verify_cauchy_cert(&d, &original.partials(), &c, &grid, h), echo);
        let fwd = condense(s, &mono, &c, Direction::Forward, &w)?;
        let (bad, echo) = verify_cauchy_capped(&d, &condensed.partials(), &fwd, &grid, CONDENSED_CAP, CONDENSED_HORIZON);
        rec.outcome("condensation forward", bad, echo);
        let back = condense(s, &mono, &fwd, Direction::Backward, &w)?;
        let (bad, echo) = verify_cauchy_capped(&d, &original.partials(), &back, &grid, VERIFY_CAP, h);
        rec.outcome("condensation backward", bad, echo);
        return Ok(());
    }
    let condensed_terms = condensed.terms().clone();
    if let Some((r, c)) = ratio_derived(s, &condensed_terms, 0, CONDENSED_CHECKS, &grid) {
        let mut echo = vec![format!("ratio {r} on the condensed series")];
        echo.extend(moduli(&grid, |e| c.index(e)));
        let (bad, _) = verify_cauchy_capped(&d, &condensed.partials(), &c, &grid, CONDENSED_CAP, CONDENSED_HORIZON);
        rec.outcome("ratio test", bad, echo);
        let back = condense(s, &mono, &c, Direction::Backward, &w)?;
        let (bad, echo) = verify_cauchy_capped(&d, &original.partials(), &back, &grid, VERIFY_CAP, h);
        rec.outcome("condensation backward", bad, echo);
        return Ok(());
    }
    rec.unverifiable("condensation", "no ratio bound for the series or its condensation");
    Ok(())
}

fn geometric<R: Carrier + OrderedRing>(s: &R, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let grid = ctx.grid(s)?;
    let h = ctx.horizon;
    let d = absolute_value_metric(s)?;
    let mut ratios = Vec::new();
    let mut candidates = ratio_candidates(s, &grid);
    candidates.sort_by_key(|r| {
        !power_cert(s, r, PROBE_CAP).is_ok_and(|c| grid.iter().all(|e| c.index(e).is_ok()))
    });
    for r in candidates.into_iter().take(6) {
        ratios.push(s.neg(&r));
        ratios.push(r);
    }
    if ratios.is_empty() {
        rec.unverifiable("geometric series", format!("no ratio in (0, 1) in {}", s.key()));
        return Ok(());
    }
    let one = s.one();
    for r in &ratios {
        let inv = match geometric_inverse(s, r) {
            Ok(inv) => inv,
            Err(e) => {
                rec.result("geometric closed form", Err(e));
                continue;
            }
        };
        rec.outcome(
            "geometric closed form",
            geometric_closed_form(s, r, &inv, 32),
            vec![format!("r = {r}"), format!("1/(1-r) = {inv}")],
        );
        let probe = power_cert(s, r, PROBE_CAP)?;
        if let Some(e) = grid.iter().find(|e| probe.index(e).is_err()) {
            rec.unverifiable("geometric limit", format!("r = {r}: no power modulus at {e} within {PROBE_CAP} powers"));
            continue;
        }
        let c0 = power_cert(s, r, SEARCH_CAP)?;
        rec.result("power limit", power_limit_is_zero(s, r, &c0).map(|v| (v, vec![format!("r = {r}")])));
        let sum = geometric_series(s, r, &one);
        rec.result(
            "geometric limit",
            geometric_cert(s, r, &c0, &inv, &one, &s.shrink().ok_or_else(|| Error::capability("no shrink witness"))?)
                .map(|c| {
                    let mut echo = vec![format!("r = {r}"), format!("limit {}", c.limit())];
                    echo.extend(moduli(&grid, |e| c.index(e)));
                    (verify_conv_cert(&d, &sum.partials(), &c, &grid, h), echo)
                }),
        );
        if s.archimedean().is_some() {
            rec.result(
                "Archimedean power bound",
                archimedean_power_modulus(s, r).and_then(|c| {
                    let (mut bad, mut echo) = (Vec::new(), vec![format!("r = {r}")]);
                    let xs = powers(s, r);
                    for eps in &grid {
                        let n = c.index(eps)?;
                        if n > VERIFY_CAP {
                            echo.push(format!("N({eps}) = {n}, unchecked above {VERIFY_CAP}"));
                            continue;
                        }
                        echo.push(format!("N({eps}) = {n}"));
                        bad.extend(verify_conv_cert(&d, &xs, &c, std::slice::from_ref(eps), h));
                        for k in n..n + 4 {
                            bad.extend(archimedean_chain(s, r, &c, eps, k)?);
                        }
                    }
                    if echo.iter().all(|e| e.contains("unchecked")) {
                        bad.push(Violation::new("no grid entry within the verification cap", echo.clone()));
                    }
                    Ok((bad, echo))
                }),
            );
        }
    }
    Ok(())
}

fn bernoulli<R: Carrier + OrderedRing>(s: &R, ctx: &Ctx, rec: &mut Recorder) -> Result<()> {
    let mut rng = ctx.rng(Suite::Bernoulli);
    let one = s.one();
    let small: Vec<R::Elem> = s
        .epsilon_grid()
        .into_iter()
        .chain([one.clone()])
        .filter(|g| s.le(g, &one))
        .collect();
    let nonneg = |rng: &mut ChaCha8Rng| -> Vec<R::Elem> {
        let len = rng.gen_range(1..=5);
        (0..len).map(|_| s.abs(&s.sample(rng))).collect()
    };
    let nonpos = |rng: &mut ChaCha8Rng| -> Vec<R::Elem> {
        let len = rng.gen_range(1..=5);
        (0..len).map(|_| s.neg(&small[rng.gen_range(0..small.len())])).collect()
    };
    let lists = 20;
    let run = |rec: &mut Recorder, anchor: &str, inputs: Vec<Vec<R::Elem>>, variant: Bernoulli| {
        let count = inputs.len();
        let r = inputs.iter().try_fold(Vec::new(), |mut acc, xs| {
            acc.extend(bernoulli_check(s, xs, variant)?);
            Ok(acc)
        });
        rec.result(anchor, r.map(|v| (v, vec![format!("{count} inputs")])));
    };
    run(rec, "Bernoulli semiring", (0..lists).map(|_| nonneg(&mut rng)).collect(), Bernoulli::Semiring);
    run(rec, "Bernoulli ring, nonnegative", (0..lists).map(|_| nonneg(&mut rng)).collect(), Bernoulli::Ring);
    run(rec, "Bernoulli ring, nonpositive", (0..lists).map(|_| nonpos(&mut rng)).collect(), Bernoulli::Ring);
    for n in 0..=6 {
        let xs: Vec<R::Elem> = nonneg(&mut rng).into_iter().chain(nonpos(&mut rng)).collect();
        run(rec, "Bernoulli power", vec![xs], Bernoulli::Power(n));
    }
    Ok(())
}

/// Coefficient pairs: exhaustive over `{-2..2}ⁿ` for `n ≤ 3`, otherwise
/// 1000 random pairs of small rationals.
pub fn algebra_pairs(alg: &FinDimAlgebra, rng: &mut dyn RngCore) -> Vec<(Tuple, Tuple)> {
    let n = alg.dim();
    if n <= 3 {
        let grid = coefficient_grid(n, -2, 2);
        return grid.iter().flat_map(|a| grid.iter().map(move |b| (a.clone(), b.clone()))).collect();
    }
    let draw = |rng: &mut dyn RngCore| Tuple((0..n).map(|_| random_rational(rng)).collect());
    (0..1000).map(|_| (draw(rng), draw(rng))).collect()
}

/// Albert pseudonorm checks for one algebra. With `expect_unscaled_failure`
/// the plain coefficient norm is a designed counterexample and passes when
/// it fails.
pub fn algebra_checks(
    alg: &FinDimAlgebra,
    rng: &mut dyn RngCore,
    expect_unscaled_failure: bool,
    associativity: bool,
    rec: &mut Recorder,
) {
    let base = absolute_value_pseudonorm();
    let pairs = algebra_pairs(alg, rng);
    let label = format!("{} (n = {})", alg.name, alg.dim());
    rec.result(
        "Albert constant",
        albert_constant(alg, &base).map(|m| (Vec::new(), vec![label.clone(), format!("M = {m}")])),
    );
    rec.result(
        "Albert pseudonorm",
        albert_pseudonorm(alg, &base).map(|p| (verify_pseudonorm_pairs(&p, &pairs), vec![label.clone(), format!("{} pairs", pairs.len())])),
    );
    let plain = coefficient_norm(alg, &base);
    let bad = verify_pseudonorm_pairs(&plain, &pairs);
    if expect_unscaled_failure {
        match bad.first() {
            Some(v) => {
                let mut vals = vec![label, v.rule.clone()];
                vals.extend(v.values.iter().cloned());
                rec.pass("unscaled coefficient norm counterexample", vals);
            }
            None => rec.push(
                Status::Violation,
                "unscaled coefficient norm counterexample",
                vec![label, "no counterexample found".into()],
            ),
        }
    } else {
        rec.outcome("unscaled coefficient norm", bad, vec![label.clone(), format!("{} pairs", pairs.len())]);
    }
    if associativity {
        rec.outcome("associativity", alg.associativity_violations(), vec![alg.name.clone()]);
    }
}

/// `ordalab algebra <table.json> --suite albert` on a parsed table.
pub fn run_algebra(table: &AlgebraTable, seed: u64, associativity: bool) -> Result<Vec<Record>> {
    let alg = FinDimAlgebra::from_table(table)?;
    let mut rec = Recorder::new("albert", alg.name.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    algebra_checks(&alg, &mut rng, false, associativity, &mut rec);
    Ok(rec.records)
}

/// Which test `ordalab series` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum SeriesTest {
    Condensation,
    Ratio,
    Alternating,
}

impl SeriesTest {
    fn name(self) -> &'static str {
        match self {
            SeriesTest::Condensation => "condensation",
            SeriesTest::Ratio => "ratio",
            SeriesTest::Alternating => "alternating",
        }
    }
}

/// Term sequence whose evaluation errors are collected instead of raised.
fn term_seq<R: Carrier + OrderedRing>(s: &R, t: &Term, failure: &Arc<Mutex<Option<Error>>>) -> Seq<R::Elem> {
    let (s, t, failure) = (s.clone(), t.clone(), Arc::clone(failure));
    Seq::new(move |n| match t.eval(&s, n) {
        Ok(v) => v,
        Err(e) => {
            let mut slot = failure.lock().expect("failure slot");
            slot.get_or_insert(e);
            s.zero()
        }
    })
}

/// `ordalab series <expr> --structure <key> --test <name>` on `Σ_{n≥1} x_n`.
pub fn run_series(expr: &str, key: &str, test: SeriesTest, horizon: u64) -> Result<Vec<Record>> {
    let term = parse(expr)?;
    let structure = lookup(key)?;
    let ctx = Ctx::new(None, horizon, 0);
    let mut rec = Recorder::new(test.name(), key);
    let failure = Arc::new(Mutex::new(None));
    with_ordered_ring!(structure, s => series_test(&s, &term, test, &ctx, &failure, &mut rec), _ => {
        rec.unverifiable("ordered ring", format!("{key} is not a totally ordered ring with 1"));
        Ok(())
    })?;
    if let Some(e) = failure.lock().expect("failure slot").take() {
        return Err(e);
    }
    Ok(rec.records)
}

fn series_test<R: Carrier + OrderedRing>(
    s: &R,
    term: &Term,
    test: SeriesTest,
    ctx: &Ctx,
    failure: &Arc<Mutex<Option<Error>>>,
    rec: &mut Recorder,
) -> Result<()> {
    for n in 1..=HYPOTHESIS_CHECKS {
        term.eval(s, n)?;
    }
    let x = term_seq(s, term, failure);
    let grid = s.epsilon_grid();
    let d = absolute_value_metric(s)?;
    let original = Series::new(s.clone(), x.clone(), 1);
    match test {
        SeriesTest::Condensation => {
            rec.outcome("condensation inequalities", condensation_inequalities(s, &x, 10), vec![format!("x_n = {term}")]);
            condensation_flow(s, &x, ctx, rec)?;
        }
        SeriesTest::Ratio => match ratio_derived(s, &x, 1, HYPOTHESIS_CHECKS, &grid) {
            Some((r, c)) => {
                let mut echo = vec![format!("ratio {r}")];
                echo.extend(moduli(&grid, |e| c.index(e)));
                rec.outcome("ratio test", verify_cauchy_cert(&d, &original.partials(), &c, &grid, ctx.horizon), echo);
            }
            None => rec.unverifiable("ratio test", "no candidate ratio below 1 bounds consecutive terms"),
        },
        SeriesTest::Alternating => {
            match MonotoneEvidence::check(s, &x, MonotoneKind::StrictlyDecreasingPositive, HYPOTHESIS_CHECKS) {
                Ok(mono) => {
                    let c0 = decreasing_cert(s, &x);
                    let alt = alternating_series(s, &x);
                    rec.result(
                        "alternating series",
                        alternating_cauchy(s, &mono, &c0).map(|c| {
                            (
                                verify_cauchy_cert(&d, &alt.partials(), &c, &grid, ctx.horizon),
                                moduli(&grid, |e| c.index(e)),
                            )
                        }),
                    );
                }
                Err(e) => rec.unverifiable("alternating series", e),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::inv_pow2;

    fn run(key: &str, suite: Suite) -> Vec<Record> {
        run_check(&RunConfig::new(key, suite)).unwrap()
    }

    fn statuses(records: &[Record]) -> Vec<Status> {
        records.iter().map(|r| r.status).collect()
    }

    #[test]
    fn rational_density_witness_values() {
        let recs = run("Q", Suite::Density);
        assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:#?}");
        assert_eq!(recs[0].witness_values, vec!["1/5", "1/5"]);
        assert_eq!(recs[0].check_id, "density-001");
    }

    #[test]
    fn missing_witness_is_unverifiable() {
        assert_eq!(statuses(&run("Z", Suite::Density)), vec![Status::Unverifiable]);
        assert_eq!(statuses(&run("Trop", Suite::Sequence)), vec![Status::Unverifiable]);
    }

    #[test]
    fn lex_metric_violates() {
        let recs = run("Lex", Suite::Metric);
        assert_eq!(recs[0].status, Status::Violation);
    }

    #[test]
    fn grid_override() {
        let mut cfg = RunConfig::new("Z(X)", Suite::Density);
        cfg.grid = Some(vec!["1/X".into(), "1/X^3".into(), "1/2".into()]);
        let recs = run_check(&cfg).unwrap();
        assert!(recs.iter().all(|r| r.status == Status::Pass));
        cfg.grid = Some(vec!["-1".into()]);
        assert!(run_check(&cfg).is_err());
        cfg.grid = Some(vec!["1/+".into()]);
        assert!(matches!(run_check(&cfg), Err(Error::Parse { column: 3, .. })));
    }

    #[test]
    fn default_ratios() {
        let q_grid = Rationals.epsilon_grid();
        assert_eq!(default_ratio(&Rationals, &q_grid), Some(q(1, 2)));
        assert_eq!(default_ratio(&Integers, &Integers.epsilon_grid()), None);
        let z = RationalFunctions;
        assert_eq!(default_ratio(&z, &z.epsilon_grid()), Some(crate::instances::RatFunc::inv_x_pow(1)));
        let z3 = Localized::new(3).unwrap();
        assert_eq!(default_ratio(&z3, &z3.epsilon_grid()), Some(q(2, 3)));
        let c = power_cert(&Rationals, &q(1, 2), 64).unwrap();
        assert_eq!(c.index(&q(1, 8)).unwrap(), 4);
        assert_eq!(c.index(&inv_pow2(3)).unwrap(), 4);
    }

    #[test]
    fn missing_inverse_is_unverifiable() {
        let recs = run("Z[1/3]", Suite::Geometric);
        assert!(recs.iter().any(|r| r.status == Status::Unverifiable));
        assert!(recs.iter().all(|r| r.status != Status::Violation), "{recs:#?}");
    }

    #[test]
    fn series_command_tests() {
        let recs = run_series("1/2^n", "Q", SeriesTest::Condensation, 64).unwrap();
        assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:#?}");
        let recs = run_series("1/n^2", "Q", SeriesTest::Condensation, 16).unwrap();
        assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:#?}");
        let recs = run_series("1/n", "Q", SeriesTest::Alternating, 64).unwrap();
        assert!(recs.iter().all(|r| r.status == Status::Pass), "{recs:#?}");
        let recs = run_series("1/n", "Q", SeriesTest::Ratio, 64).unwrap();
        assert_eq!(statuses(&recs), vec![Status::Unverifiable]);
        assert!(matches!(run_series("1/(n-3)", "Q", SeriesTest::Ratio, 64), Err(Error::Evaluation(_))));
    }
}

//! Acceptance criteria 1 to 12. Each criterion prints one PASS or FAIL line;
//! the run fails if any criterion fails.
//!
//! Expected values come from independent oracles written here: plain
//! `BigRational` arithmetic for ℚ and its subrings, and for ℤ(X) a sign test
//! that evaluates polynomials past their Cauchy root bound.

use std::fmt::Display;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ordalab::cli::suites::algebra_pairs;
use ordalab::instances::{
    inv_pow2, q, random_rational, Gaussian, GaussianRationals, Instance, LexElem, LexGroup, Localized, OrthantModule,
    Pair, Poly, RatFunc, RationalFunctions, Rationals, Trop, Tropical, ValueGroup,
};
use ordalab::metric::{absolute_value_metric, absolute_value_norm, registered_metrics};
use ordalab::order::{
    betweenness, check_density, density_from_unit_interval, n_split, DensityWitness, Violation,
};
use ordalab::pseudonorm::{
    absolute_value_pseudonorm, albert_pseudonorm, coefficient_norm, ordered_ring_pseudonorm, padic_norm,
    padic_pseudonorm, verify_pseudonorm_pairs, FinDimAlgebra,
};
use ordalab::sequences::{
    add_certs, apart_tail, conv_to_cauchy, prod_certs, refute_uniqueness, subseq_rescue, verify_apart_witness,
    verify_cauchy_cert, verify_conv_cert, verify_tail_apart, zero_times_bounded, ApartFromZeroWitness, CauchyCert,
    ConvCert, ConvRing, ConvergentSeq, Seq, SubseqMap,
};
use ordalab::series::{
    bernoulli_check, condensation_inequalities, condense, condensed_series, geometric_cert, geometric_closed_form,
    geometric_inverse, geometric_series, Bernoulli, Direction, MonotoneEvidence, MonotoneKind, Series,
};
use ordalab::Error;

type Check = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn lib<T>(r: ordalab::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn clean(v: Vec<Violation>, what: &str) -> Result<(), String> {
    match v.first() {
        None => Ok(()),
        Some(first) => Err(format!("{what}: {} violations, first {}: {:?}", v.len(), first.rule, first.values)),
    }
}

const HORIZON: u64 = 64;

fn main() {
    let criteria: [Criterion; 12] = [
        ("density suite", Some(Duration::from_secs(2)), density_suite),
        ("unit-interval density round trip", Some(Duration::from_secs(1)), unit_interval_round_trip),
        ("metric axioms", Some(Duration::from_secs(2)), metric_axioms),
        ("modulus composition", Some(Duration::from_secs(5)), modulus_composition),
        ("uniqueness refutation", None, uniqueness_refutation),
        ("condensation", Some(Duration::from_secs(3)), condensation),
        ("geometric series", None, geometric),
        ("Bernoulli inequalities", None, bernoulli),
        ("Albert pseudonorm", Some(Duration::from_secs(10)), albert),
        ("p-adic norms", None, padic),
        ("limit homomorphism", None, limit_homomorphism),
        ("CLI reports and exit codes", None, cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if took > *l => Err(format!("took {took:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({took:.2?}): {detail}", i + 1),
            Err(reason) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({took:.2?}): {reason}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

// ---- ℤ(X) oracle: fractions of integer polynomials, signs at infinity ----

type Frac = (Poly, Poly);

fn frac(f: &RatFunc) -> Frac {
    (f.numer().clone(), f.denom().clone())
}

fn poly_eval(p: &Poly, x: &BigInt) -> BigInt {
    p.coeffs().iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Sign for large X: past `2 + max |a_i|` no root remains, since `|a_n| ≥ 1`.
fn poly_sign(p: &Poly) -> i32 {
    if p.is_zero() {
        return 0;
    }
    let bound = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default() + 2;
    match poly_eval(p, &bound).sign() {
        num_bigint::Sign::Plus => 1,
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
    }
}

fn fsign(f: &Frac) -> i32 {
    poly_sign(&f.0) * poly_sign(&f.1)
}

fn fadd(a: &Frac, b: &Frac) -> Frac {
    (a.0.mul(&b.1).add(&b.0.mul(&a.1)), a.1.mul(&b.1))
}

fn fneg(a: &Frac) -> Frac {
    (a.0.neg(), a.1.clone())
}

fn fsub(a: &Frac, b: &Frac) -> Frac {
    fadd(a, &fneg(b))
}

fn fmul(a: &Frac, b: &Frac) -> Frac {
    (a.0.mul(&b.0), a.1.mul(&b.1))
}

fn fone() -> Frac {
    (Poly::one(), Poly::one())
}

fn flt(a: &Frac, b: &Frac) -> bool {
    fsign(&fsub(b, a)) > 0
}

fn fle(a: &Frac, b: &Frac) -> bool {
    fsign(&fsub(b, a)) >= 0
}

fn zx_dist_lt(a: &RatFunc, b: &RatFunc, eps: &RatFunc) -> bool {
    let d = fsub(&frac(a), &frac(b));
    let e = frac(eps);
    flt(&d, &e) && flt(&fneg(&d), &e)
}

fn q_dist_lt(a: &BigRational, b: &BigRational, eps: &BigRational) -> bool {
    (a - b).abs() < *eps
}

/// The value at the integer `t`.
fn zx_at(f: &RatFunc, t: i64) -> BigRational {
    let t = BigInt::from(t);
    BigRational::new(poly_eval(f.numer(), &t), poly_eval(f.denom(), &t))
}

// ---- per-structure oracles for positivity, the operation and `<` ----

type Pred<E> = Box<dyn Fn(&E) -> bool>;
type BinOp<E, T> = Box<dyn Fn(&E, &E) -> T>;

struct Oracle<E> {
    pos: Pred<E>,
    op: BinOp<E, E>,
    lt: BinOp<E, bool>,
}

fn rational_oracle() -> Oracle<BigRational> {
    Oracle {
        pos: Box::new(|x| x.is_positive()),
        op: Box::new(|a, b| a + b),
        lt: Box::new(|a, b| a < b),
    }
}

fn dyadic_oracle() -> Oracle<BigRational> {
    let dyadic = |x: &BigRational| x.denom().magnitude().count_ones() == 1;
    Oracle {
        pos: Box::new(move |x| x.is_positive() && dyadic(x)),
        op: Box::new(|a, b| a + b),
        lt: Box::new(|a, b| a < b),
    }
}

fn zx_oracle() -> Oracle<RatFunc> {
    Oracle {
        pos: Box::new(|x| fsign(&frac(x)) > 0),
        op: Box::new(|a, b| {
            let (n, d) = fadd(&frac(a), &frac(b));
            RatFunc::new(n, d).expect("nonzero denominator")
        }),
        lt: Box::new(|a, b| flt(&frac(a), &frac(b))),
    }
}

fn tropical_oracle() -> Oracle<Trop> {
    Oracle {
        pos: Box::new(|x| matches!(x, Trop::Fin(_))),
        op: Box::new(|a, b| match (a, b) {
            (Trop::NegInf, y) | (y, Trop::NegInf) => y.clone(),
            (Trop::Fin(x), Trop::Fin(y)) => Trop::Fin(x.max(y).clone()),
        }),
        lt: Box::new(|a, b| match (a, b) {
            (_, Trop::NegInf) => false,
            (Trop::NegInf, _) => true,
            (Trop::Fin(x), Trop::Fin(y)) => x < y,
        }),
    }
}

fn two_pow(k: i64) -> BigRational {
    let p = BigRational::from_integer(BigInt::one() << k.unsigned_abs());
    if k >= 0 {
        p
    } else {
        p.recip()
    }
}

fn lex_oracle() -> Oracle<LexElem> {
    let lt = |u: &LexElem, v: &LexElem| u.a < v.a || (u.a == v.a && u.q < v.q);
    Oracle {
        pos: Box::new(move |x| lt(&LexElem::int(0, 0), x)),
        op: Box::new(|u, v| LexElem::new(u.a + v.a, &u.q * two_pow(v.a) + &v.q)),
        lt: Box::new(lt),
    }
}

fn gaussian_oracle() -> Oracle<Gaussian> {
    Oracle {
        pos: Box::new(|z| z.im.is_zero() && z.re.is_positive()),
        op: Box::new(|a, b| Gaussian::new(&a.re + &b.re, &a.im + &b.im)),
        lt: Box::new(|a, b| a.im == b.im && a.re < b.re),
    }
}

fn orthant_oracle() -> Oracle<Pair> {
    let le = |u: &Pair, v: &Pair| u.0[0] <= v.0[0] && u.0[1] <= v.0[1];
    Oracle {
        pos: Box::new(move |x| le(&Pair::int(0, 0), x) && *x != Pair::int(0, 0)),
        op: Box::new(|u, v| Pair::new(&u.0[0] + &v.0[0], &u.0[1] + &v.0[1])),
        lt: Box::new(move |u, v| le(u, v) && u != v),
    }
}

fn split_ok<E: Display>(o: &Oracle<E>, eps: &E, b: &E, g: &E) -> Result<(), String> {
    ensure!((o.pos)(b) && (o.pos)(g), "split of {eps}: ({b}, {g}) not positive");
    let s = (o.op)(b, g);
    ensure!((o.lt)(&s, eps), "split of {eps}: {b} * {g} = {s} not below it");
    Ok(())
}

fn density_case<S: Instance>(s: &S, w: &DensityWitness<S::Elem>, o: &Oracle<S::Elem>) -> Result<usize, String> {
    let grid = s.epsilon_grid();
    clean(check_density(s, w, &grid), &s.key())?;
    for eps in &grid {
        let (b, g) = lib(w.split(eps))?;
        split_ok(o, eps, &b, &g)?;
    }
    Ok(grid.len())
}

fn witness<S: Instance>(s: &S) -> Result<DensityWitness<S::Elem>, String> {
    s.density().ok_or_else(|| format!("{}: no density witness", s.key()))
}

// ---- 1 ----

fn density_suite() -> Check {
    let z2 = lib(Localized::new(2))?;
    let mut n = 0;
    n += density_case(&Rationals, &witness(&Rationals)?, &rational_oracle())?;
    n += density_case(&z2, &witness(&z2)?, &dyadic_oracle())?;
    n += density_case(&RationalFunctions, &witness(&RationalFunctions)?, &zx_oracle())?;
    n += density_case(&Tropical, &witness(&Tropical)?, &tropical_oracle())?;
    n += density_case(&LexGroup, &witness(&LexGroup)?, &lex_oracle())?;
    n += density_case(&GaussianRationals, &witness(&GaussianRationals)?, &gaussian_oracle())?;
    n += density_case(&OrthantModule, &witness(&OrthantModule)?, &orthant_oracle())?;
    // the worked value: 2ε/5 + 2ε/5 < ε
    ensure!(lib(witness(&Rationals)?.split(&q(1, 2)))? == (q(1, 5), q(1, 5)), "Q split of 1/2 is not (1/5, 1/5)");
    Ok(format!("{n} grid entries over 7 structures, 0 violations"))
}

// ---- 2 ----

fn round_trip<S: Instance + ordalab::order::OrderedRing>(
    s: &S,
    alpha: &S::Elem,
    o: &Oracle<S::Elem>,
    rng: &mut ChaCha8Rng,
) -> Result<(), String> {
    let w = lib(density_from_unit_interval(s, alpha))?;
    density_case(s, &w, o)?;
    for eps in &s.epsilon_grid() {
        for n in 1..=8 {
            let parts = lib(n_split(s, eps, n, &w))?;
            ensure!(parts.len() == n, "n_split({eps}, {n}) returned {} parts", parts.len());
            ensure!(parts.iter().all(|p| (o.pos)(p)), "n_split({eps}, {n}) has a non-positive part");
            let total = parts[1..].iter().fold(parts[0].clone(), |acc, p| (o.op)(&acc, p));
            ensure!((o.lt)(&total, eps), "n_split({eps}, {n}) sums to {total}");
        }
    }
    let mut pairs = 0;
    while pairs < 50 {
        let (a, b) = (s.sample(rng), s.sample(rng));
        let (r, t) = if (o.lt)(&a, &b) {
            (a, b)
        } else if (o.lt)(&b, &a) {
            (b, a)
        } else {
            continue;
        };
        let m = lib(betweenness(s, &r, &t, &w))?;
        ensure!((o.lt)(&r, &m) && (o.lt)(&m, &t), "betweenness({r}, {t}) = {m}");
        pairs += 1;
    }
    Ok(())
}

fn unit_interval_round_trip() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for alpha in [q(1, 2), q(1, 3)] {
        round_trip(&Rationals, &alpha, &rational_oracle(), &mut rng)?;
    }
    for alpha in [RatFunc::from_rational(&q(1, 2)), RatFunc::inv_x_pow(1)] {
        round_trip(&RationalFunctions, &alpha, &zx_oracle(), &mut rng)?;
    }
    Ok("alpha in {1/2, 1/3} over Q and {1/2, 1/X} over Z(X): density, n-split n = 1..8, 50 betweenness pairs each".into())
}

// ---- 3 ----

fn metric_axioms() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut names = Vec::new();
    for m in registered_metrics() {
        let r = m.verify(8, &mut rng);
        ensure!(r.triples >= 500, "{}: only {} triples", r.name, r.triples);
        clean(r.violations, &r.name)?;
        names.push(r.name);
    }
    ensure!(names.len() == 11, "expected 11 registered metrics, got {names:?}");
    // independent triangle check of |x − y| on ℚ
    let pts: Vec<BigRational> = (0..8).map(|_| random_rational(&mut rng)).collect();
    for x in &pts {
        for y in &pts {
            for z in &pts {
                ensure!((x - z).abs() <= (x - y).abs() + (y - z).abs(), "triangle fails at {x}, {y}, {z}");
            }
        }
    }
    Ok(format!("{} spaces, 512 triples each, 0 violations", names.len()))
}

// ---- 4 ----

/// `N(ε) = ⌈|b|/ε⌉ + 1`, a modulus for `b/n → 0`.
fn scaled_recip(b: &BigRational) -> impl Fn(&BigRational) -> ordalab::Result<u64> + Send + Sync + 'static {
    let b = b.abs();
    move |eps| Ok((&b / eps).ceil().to_integer().to_u64().expect("small modulus") + 1)
}

/// Least `n ≥ 1` with `X^{−kn} < ε`, by the oracle order.
fn zx_power_modulus(k: usize) -> impl Fn(&RatFunc) -> ordalab::Result<u64> + Send + Sync + 'static {
    move |eps| {
        (1..=512u64)
            .find(|&n| flt(&frac(&RatFunc::inv_x_pow(k * n as usize)), &frac(eps)))
            .ok_or_else(|| Error::Evaluation(format!("no power below {eps}")))
    }
}

fn least_pow2_below(eps: &BigRational) -> u64 {
    (1u32..).find(|&k| inv_pow2(k) < *eps).expect("positive eps") as u64
}

fn sample_offsets(h: u64) -> [u64; 5] {
    [0, 1, 2, h / 2, h]
}

fn conv_oracle<E: Clone + Display + Send + Sync + 'static>(
    x: &Seq<E>,
    c: &ConvCert<E, E>,
    grid: &[E],
    dist_lt: &dyn Fn(&E, &E, &E) -> bool,
    what: &str,
) -> Result<(), String> {
    for eps in grid {
        let n0 = lib(c.index(eps))?;
        for j in sample_offsets(HORIZON) {
            let n = n0 + j;
            ensure!(dist_lt(&x.at(n), c.limit(), eps), "{what}: oracle finds d(x_{n}, {}) >= {eps}", c.limit());
        }
    }
    Ok(())
}

fn cauchy_oracle<E: Clone + Display + Send + Sync + 'static>(
    x: &Seq<E>,
    c: &CauchyCert<E>,
    grid: &[E],
    h: u64,
    dist_lt: &dyn Fn(&E, &E, &E) -> bool,
    what: &str,
) -> Result<(), String> {
    for eps in grid {
        let n0 = lib(c.index(eps))?;
        for i in sample_offsets(h) {
            for j in sample_offsets(h) {
                let (m, n) = (n0 + i, n0 + j);
                ensure!(dist_lt(&x.at(m), &x.at(n), eps), "{what}: oracle finds d(x_{m}, x_{n}) >= {eps}");
            }
        }
    }
    Ok(())
}

fn modulus_composition() -> Check {
    let h = HORIZON;
    let qs = Rationals;
    let zx = RationalFunctions;
    let dq = lib(absolute_value_metric(&qs))?;
    let dz = lib(absolute_value_metric(&zx))?;
    let (gq, gz) = (qs.epsilon_grid(), zx.epsilon_grid());
    let (wq, wz) = (witness(&qs)?, witness(&zx)?);
    let sw = qs.shrink().ok_or("Q has no shrink witness")?;
    let j = qs.join().ok_or("Q has no join witness")?;
    let p = absolute_value_pseudonorm();
    let one = q(1, 1);
    let mut certs = 0;

    // convToCauchy
    let recip = Seq::new(|n| q(1, n as i64));
    let c_recip = ConvCert::new(q(0, 1), scaled_recip(&one));
    let cc = conv_to_cauchy(&c_recip, &wq);
    ensure!(lib(cc.index(&q(1, 2)))? == 6, "Cauchy modulus of 1/n at 1/2 is not 6");
    clean(verify_cauchy_cert(&dq, &recip, &cc, &gq, h), "Cauchy 1/n")?;
    cauchy_oracle(&recip, &cc, &gq, h, &q_dist_lt, "Cauchy 1/n")?;
    let xz = Seq::new(|n| RatFunc::inv_x_pow(n as usize));
    let cz = ConvCert::new(RatFunc::zero(), zx_power_modulus(1));
    let ccz = conv_to_cauchy(&cz, &wz);
    // split(1/X⁵) = (2/(5X⁵), 2/(5X⁵)) and 1/X⁶ is the first power below it
    ensure!(lib(ccz.index(&RatFunc::inv_x_pow(5)))? == 6, "Cauchy modulus of 1/X^n at 1/X^5 is not 6");
    clean(verify_cauchy_cert(&dz, &xz, &ccz, &gz, h), "Cauchy 1/X^n")?;
    cauchy_oracle(&xz, &ccz, &gz, h, &zx_dist_lt, "Cauchy 1/X^n")?;
    certs += 2;

    // addCerts
    let one_minus = Seq::new(|n| q(1, 1) - q(1, n as i64));
    let c_one_minus = ConvCert::new(one.clone(), scaled_recip(&one));
    let c_sum = lib(add_certs(&qs, &c_recip, &c_one_minus, &wq))?;
    ensure!(*c_sum.limit() == one, "limit of 1/n + (1 - 1/n) is {}", c_sum.limit());
    let sum = recip.zip_with(&one_minus, |a, b| a + b);
    clean(verify_conv_cert(&dq, &sum, &c_sum, &gq, h), "1/n + (1 - 1/n)")?;
    conv_oracle(&sum, &c_sum, &gq, &q_dist_lt, "1/n + (1 - 1/n)")?;
    let x2z = Seq::new(|n| RatFunc::inv_x_pow(2 * n as usize));
    let c2z = ConvCert::new(RatFunc::zero(), zx_power_modulus(2));
    let c_sum_z = lib(add_certs(&zx, &cz, &c2z, &wz))?;
    ensure!(c_sum_z.limit().is_zero(), "limit of 1/X^n + 1/X^2n is {}", c_sum_z.limit());
    let sum_z = xz.zip_with(&x2z, |a, b| a.add(&b));
    clean(verify_conv_cert(&dz, &sum_z, &c_sum_z, &gz, h), "1/X^n + 1/X^2n")?;
    conv_oracle(&sum_z, &c_sum_z, &gz, &zx_dist_lt, "1/X^n + 1/X^2n")?;
    certs += 2;

    // prodCerts
    let c_sq = lib(prod_certs(&p, &recip, &c_recip, &c_recip, &wq, &sw, &j, &one))?;
    ensure!(c_sq.limit().is_zero(), "limit of (1/n)^2 is {}", c_sq.limit());
    let sq = recip.zip_with(&recip, |a, b| a * b);
    clean(verify_conv_cert(&dq, &sq, &c_sq, &gq, h), "(1/n)(1/n)")?;
    conv_oracle(&sq, &c_sq, &gq, &q_dist_lt, "(1/n)(1/n)")?;
    let two_plus = Seq::new(|n| q(2, 1) + q(1, n as i64));
    let c_two_plus = ConvCert::new(q(2, 1), scaled_recip(&one));
    let c_prod = lib(prod_certs(&p, &one_minus, &c_one_minus, &c_two_plus, &wq, &sw, &j, &one))?;
    ensure!(*c_prod.limit() == q(2, 1), "limit of (1 - 1/n)(2 + 1/n) is {}", c_prod.limit());
    let prod = one_minus.zip_with(&two_plus, |a, b| a * b);
    clean(verify_conv_cert(&dq, &prod, &c_prod, &gq, h), "(1 - 1/n)(2 + 1/n)")?;
    conv_oracle(&prod, &c_prod, &gq, &q_dist_lt, "(1 - 1/n)(2 + 1/n)")?;
    certs += 2;

    // subseqRescue
    let c_sub = ConvCert::new(q(0, 1), |eps: &BigRational| Ok(least_pow2_below(eps)));
    let rescued = lib(subseq_rescue(&cc, &SubseqMap::new(|k| 1u64 << k), &c_sub, &wq, 40))?;
    clean(verify_conv_cert(&dq, &recip, &rescued, &gq, h), "rescued 1/n")?;
    conv_oracle(&recip, &rescued, &gq, &q_dist_lt, "rescued 1/n")?;
    let c_sub_z = ConvCert::new(RatFunc::zero(), |eps: &RatFunc| {
        (1..=64u64)
            .find(|&k| flt(&frac(&RatFunc::inv_x_pow((k * k) as usize)), &frac(eps)))
            .ok_or_else(|| Error::Evaluation(format!("no square power below {eps}")))
    });
    let rescued_z = lib(subseq_rescue(&ccz, &SubseqMap::new(|k| k * k), &c_sub_z, &wz, h))?;
    clean(verify_conv_cert(&dz, &xz, &rescued_z, &gz, h), "rescued 1/X^n")?;
    conv_oracle(&xz, &rescued_z, &gz, &zx_dist_lt, "rescued 1/X^n")?;
    certs += 2;

    // zeroTimesBounded
    let signs = Seq::new(|n| if n % 2 == 0 { q(1, 1) } else { q(-1, 1) });
    let two = q(2, 1);
    for eps in &gq {
        let right = lib(sw.shrink(eps, &two))?.right;
        ensure!(right == eps / q(5, 1), "shrink({eps}, 2) right part {right} is not eps/5");
    }
    let (left, right) = lib(zero_times_bounded(&p, &c_recip, &signs, &two, &sw, 128))?;
    let xy = recip.zip_with(&signs, |a, b| a * b);
    let yx = signs.zip_with(&recip, |a, b| a * b);
    clean(verify_conv_cert(&dq, &xy, &left, &gq, h), "(1/n)(-1)^n")?;
    clean(verify_conv_cert(&dq, &yx, &right, &gq, h), "(-1)^n(1/n)")?;
    conv_oracle(&xy, &left, &gq, &q_dist_lt, "(1/n)(-1)^n")?;
    let z2 = lib(Localized::new(2))?;
    let (p2, d2, g2) = (lib(ordered_ring_pseudonorm(&z2))?, lib(absolute_value_metric(&z2))?, z2.epsilon_grid());
    let sw2 = z2.shrink().ok_or("Z[1/2] has no shrink witness")?;
    let four = q(4, 1);
    for eps in &g2 {
        let r = lib(sw2.shrink(eps, &four))?.right;
        let dyadic = r.numer().is_one() && r.denom().magnitude().count_ones() == 1;
        ensure!(dyadic && &four * &r < *eps, "shrink({eps}, 4) right part {r}");
    }
    let halves = Seq::new(|n| inv_pow2(n as u32));
    let c_halves = ConvCert::new(q(0, 1), |eps: &BigRational| Ok(least_pow2_below(eps)));
    let threes = Seq::new(|n| if n % 2 == 0 { q(3, 1) } else { q(-3, 1) });
    let (left2, right2) = lib(zero_times_bounded(&p2, &c_halves, &threes, &four, &sw2, 128))?;
    let xy2 = halves.zip_with(&threes, |a, b| a * b);
    clean(verify_conv_cert(&d2, &xy2, &left2, &g2, h), "(1/2^n)(+-3)")?;
    clean(verify_conv_cert(&d2, &threes.zip_with(&halves, |a, b| a * b), &right2, &g2, h), "(+-3)(1/2^n)")?;
    conv_oracle(&xy2, &left2, &g2, &q_dist_lt, "(1/2^n)(+-3)")?;
    certs += 4;

    // apartTail
    let nq = lib(absolute_value_norm(&qs))?;
    let one_plus = Seq::new(|n| q(1, 1) + q(1, n as i64));
    let c_one_plus = conv_to_cauchy(&ConvCert::new(one.clone(), scaled_recip(&one)), &wq);
    let apart = ApartFromZeroWitness::new(one.clone(), |n| n);
    ensure!(lib(wq.split(&one))?.0 == q(2, 5), "split(1) does not start with 2/5");
    let (gamma, start) = lib(apart_tail(&qs, &c_one_plus, &apart, &wq))?;
    ensure!(gamma == q(6, 25), "gamma is {gamma}, expected 6/25");
    clean(verify_apart_witness(&nq, &one_plus, &apart, 1..=h), "apart witness for 1 + 1/n")?;
    clean(verify_tail_apart(&nq, &one_plus, &gamma, start, h), "tail of 1 + 1/n")?;
    for n in start..=start + h {
        ensure!(q(1, 1) + q(1, n as i64) > gamma, "oracle: 1 + 1/{n} not above {gamma}");
    }
    let fake = ApartFromZeroWitness::new(q(1, 2), |n| n);
    ensure!(!verify_apart_witness(&nq, &recip, &fake, 1..=h).is_empty(), "1/n accepted an apart-from-zero witness");
    certs += 1;

    Ok(format!("{certs} derived certificates verified on the full grids, horizon {h}"))
}

// ---- 5 ----

fn uniqueness_refutation() -> Check {
    let dq = lib(absolute_value_metric(&Rationals))?;
    let w = witness(&Rationals)?;
    let recip = Seq::new(|n| q(1, n as i64));
    let c0 = ConvCert::new(q(0, 1), scaled_recip(&q(1, 1)));
    let c1 = ConvCert::new(q(1, 1), scaled_recip(&q(1, 1)));
    let rf = lib(refute_uniqueness(&dq, &recip, &c0, &c1, &w))?;
    ensure!(rf.contradiction_found(), "no contradiction: {rf:?}");
    // d(0, 1) = 1, split(1) = (2/5, 2/5), N = ⌈5/2⌉ + 1 = 4, x_4 = 1/4
    ensure!(rf.eps == q(1, 1) && rf.beta == q(2, 5) && rf.gamma == q(2, 5), "split values {rf:?}");
    ensure!(rf.n == 4 && rf.dist_a == q(1, 4) && rf.dist_b == q(3, 4), "index or distances {rf:?}");
    ensure!(&rf.dist_a + &rf.dist_b >= rf.eps && &rf.beta + &rf.gamma < rf.eps, "exact facts fail");
    ensure!(rf.first_claim && !rf.second_claim, "expected the claim for limit 1 to fail");
    Ok("eps = 1, N = 4, d(x_4, 1) = 3/4 >= 2/5 refutes the limit 1".into())
}

// ---- 6 ----

fn condensed_oracle(l: u64) -> BigRational {
    (0..=l).map(|i| BigRational::from_integer(BigInt::one() << i) * inv_pow2(1u32 << i)).sum()
}

fn condensation() -> Check {
    let qs = Rationals;
    let dq = lib(absolute_value_metric(&qs))?;
    let grid = qs.epsilon_grid();
    let w = witness(&qs)?;
    let x = Seq::new(|n| inv_pow2(n as u32));
    let series = Series::new(qs, x.clone(), 1);
    let closed = Seq::new(|n| q(1, 1) - inv_pow2(n as u32));
    for n in 1..=128 {
        ensure!(series.partial(n) == closed.at(n), "partial sum s_{n} differs from 1 - 2^-{n}");
    }
    let mono = lib(MonotoneEvidence::check(&qs, &x, MonotoneKind::StrictlyDecreasingPositive, HORIZON))?;

    // forward: s_n is Cauchy with N(ε) = least N with 2^−N < ε
    let c = CauchyCert::new(|eps: &BigRational| Ok(least_pow2_below(eps)));
    clean(verify_cauchy_cert(&dq, &closed, &c, &grid, HORIZON), "partial sums of 1/2^n")?;
    let fwd = lib(condense(&qs, &mono, &c, Direction::Forward, &w))?;
    let t = condensed_series(&qs, &x).partials();
    for l in 0..=12 {
        ensure!(t.at(l) == condensed_oracle(l), "condensed partial T_{l} differs from the oracle");
    }
    let fh = 8;
    clean(verify_cauchy_cert(&dq, &t, &fwd, &grid, fh), "forward certificate")?;
    let own_t = Seq::new(condensed_oracle);
    cauchy_oracle(&own_t, &fwd, &grid, fh, &q_dist_lt, "forward certificate")?;

    // backward: for l ≥ 1 the condensed tail is below 2·2^{l+1}x_{2^{l+1}}
    let tail = |l: u32| BigRational::from_integer(BigInt::one() << (l + 2)) * inv_pow2(1u32 << (l + 1));
    let ct = CauchyCert::new(move |eps: &BigRational| Ok((1u32..).find(|&l| tail(l) < *eps).expect("eps > 0") as u64));
    clean(verify_cauchy_cert(&dq, &t, &ct, &grid, fh), "condensed certificate")?;
    let bwd = lib(condense(&qs, &mono, &ct, Direction::Backward, &w))?;
    clean(verify_cauchy_cert(&dq, &closed, &bwd, &grid, HORIZON), "backward certificate")?;
    cauchy_oracle(&closed, &bwd, &grid, HORIZON, &q_dist_lt, "backward certificate")?;

    // the inequalities from the proof, up to index 2^10
    let recip = Seq::new(|n| q(1, n as i64));
    for (name, seq) in [("1/2^n", &x), ("1/n", &recip)] {
        clean(condensation_inequalities(&qs, seq, 10), name)?;
        let prefix: Vec<BigRational> = std::iter::once(q(0, 1))
            .chain((1..=1024u64).scan(q(0, 1), |acc, i| {
                *acc += seq.at(i);
                Some(acc.clone())
            }))
            .collect();
        let pw = |i: u32| BigRational::from_integer(BigInt::one() << i);
        let condensed = |k: u32, l: u32| (k..=l).map(|i| pw(i) * seq.at(1 << i)).sum::<BigRational>();
        for n in 1..=10u32 {
            let block = &prefix[1 << n] - &prefix[1 << (n - 1)];
            ensure!(pw(n) * seq.at(1 << n) <= &block + &block, "{name}: forward bound fails at n = {n}");
        }
        for k in 0..10u32 {
            for l in k..10u32 {
                let c = condensed(k, l);
                let block = &prefix[(1 << (l + 1)) - 1] - &prefix[(1 << k) - 1];
                ensure!(block <= c, "{name}: backward bound fails at k = {k}, l = {l}");
                if k >= 1 {
                    let b = &prefix[1 << l] - &prefix[1 << (k - 1)];
                    ensure!(c <= &b + &b, "{name}: chain bound fails at k = {k}, l = {l}");
                }
            }
        }
    }
    Ok("forward and backward certificates verify for 1/2^n; inequalities hold for 1/2^n and 1/n up to 2^10".into())
}

// ---- 7 ----

fn geometric() -> Check {
    let qs = Rationals;
    let dq = lib(absolute_value_metric(&qs))?;
    let sw = qs.shrink().ok_or("Q has no shrink witness")?;
    let one = q(1, 1);
    for r in [q(1, 2), q(-1, 2), q(1, 3)] {
        let inv = lib(geometric_inverse(&qs, &r))?;
        ensure!(inv == (&one - &r).recip(), "1/(1 - {r}) computed as {inv}");
        clean(geometric_closed_form(&qs, &r, &inv, 32), &format!("closed form r = {r}"))?;
        let mut partial = q(0, 1);
        for n in 0..=32u64 {
            partial += r.pow(n as i32);
            ensure!(partial == (&one - r.pow(n as i32 + 1)) / (&one - &r), "oracle closed form r = {r}, n = {n}");
        }
        let a = r.abs();
        let c0 = ConvCert::new(q(0, 1), move |eps: &BigRational| {
            Ok((1..).find(|&n| a.pow(n) < *eps).expect("|r| < 1") as u64)
        });
        let cert = lib(geometric_cert(&qs, &r, &c0, &inv, &one, &sw))?;
        ensure!(*cert.limit() == inv, "limit for r = {r} is {}", cert.limit());
        let partials = geometric_series(&qs, &r, &one).partials();
        clean(verify_conv_cert(&dq, &partials, &cert, &qs.epsilon_grid(), HORIZON), &format!("r = {r}"))?;
        let rr = r.clone();
        let own = Seq::new(move |n| (q(1, 1) - rr.pow(n as i32 + 1)) / (q(1, 1) - &rr));
        conv_oracle(&own, &cert, &qs.epsilon_grid(), &q_dist_lt, &format!("r = {r}"))?;
    }

    let zx = RationalFunctions;
    let dz = lib(absolute_value_metric(&zx))?;
    let swz = zx.shrink().ok_or("Z(X) has no shrink witness")?;
    let r = RatFunc::inv_x_pow(1);
    let inv = lib(geometric_inverse(&zx, &r))?;
    clean(geometric_closed_form(&zx, &r, &inv, 32), "closed form r = 1/X")?;
    let partials = geometric_series(&zx, &r, &RatFunc::one()).partials();
    for t in [2i64, 3, 10] {
        let expected = q(t, t - 1);
        ensure!(zx_at(&inv, t) == expected, "1/(1 - 1/X) at X = {t} is {}", zx_at(&inv, t));
        let mut own = q(0, 1);
        for n in 0..=32u64 {
            own += q(1, t).pow(n as i32);
            ensure!(zx_at(&partials.at(n), t) == own, "partial sum {n} of 1/X^n at X = {t}");
        }
    }
    let c0 = ConvCert::new(RatFunc::zero(), zx_power_modulus(1));
    let cert = lib(geometric_cert(&zx, &r, &c0, &inv, &RatFunc::one(), &swz))?;
    ensure!(zx_at(cert.limit(), 5) == q(5, 4), "limit for r = 1/X is {}", cert.limit());
    clean(verify_conv_cert(&dz, &partials, &cert, &zx.epsilon_grid(), HORIZON), "r = 1/X")?;
    conv_oracle(&partials, &cert, &zx.epsilon_grid(), &zx_dist_lt, "r = 1/X")?;

    let z3 = lib(Localized::new(3))?;
    match geometric_inverse(&z3, &q(1, 3)) {
        Err(Error::NotInvertible(msg)) => {
            ensure!(msg.contains("2/3"), "unexpected message {msg}");
        }
        other => return Err(format!("Z[1/3], r = 1/3: expected a missing inverse, got {other:?}")),
    }
    Ok("closed forms to n = 32 and certificates for r in {1/2, -1/2, 1/3} and 1/X; Z[1/3] reports 1 - 1/3 not invertible".into())
}

// ---- 8 ----

fn bernoulli() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let qs = Rationals;
    let unit = |rng: &mut ChaCha8Rng| {
        let m = rng.gen_range(1..=9);
        q(rng.gen_range(0..=m), m)
    };
    let mut runs = 0;
    for _ in 0..200 {
        let len = rng.gen_range(1..=5);
        let nonneg: Vec<BigRational> = (0..len).map(|_| random_rational(&mut rng).abs()).collect();
        let nonpos: Vec<BigRational> = (0..len).map(|_| -unit(&mut rng)).collect();
        let k = rng.gen_range(0..=6u64);
        for (xs, variant) in [
            (&nonneg, Bernoulli::Semiring),
            (&nonneg, Bernoulli::Ring),
            (&nonpos, Bernoulli::Ring),
            (&nonneg, Bernoulli::Power(k)),
            (&nonpos, Bernoulli::Power(k)),
        ] {
            clean(lib(bernoulli_check(&qs, xs, variant))?, &format!("{variant:?} on Q"))?;
            match variant {
                Bernoulli::Power(k) => {
                    for x in xs {
                        ensure!((q(1, 1) + x).pow(k as i32) >= q(1, 1) + BigRational::from_integer(k.into()) * x, "oracle power {x}, {k}");
                    }
                }
                _ => {
                    let prod: BigRational = xs.iter().map(|x| q(1, 1) + x).product();
                    let sum: BigRational = xs.iter().sum();
                    ensure!(prod >= q(1, 1) + sum, "oracle product for {xs:?}");
                }
            }
            runs += 1;
        }
    }
    let zx = RationalFunctions;
    for _ in 0..50 {
        let len = rng.gen_range(1..=5);
        let nonneg: Vec<RatFunc> = (0..len)
            .map(|_| {
                let f = zx.sample(&mut rng);
                if fsign(&frac(&f)) < 0 {
                    f.neg()
                } else {
                    f
                }
            })
            .collect();
        let nonpos: Vec<RatFunc> = (0..len)
            .map(|_| RatFunc::from_rational(&unit(&mut rng)).mul(&RatFunc::inv_x_pow(rng.gen_range(0..=3))).neg())
            .collect();
        let k = rng.gen_range(0..=6u64);
        for (xs, variant) in [
            (&nonneg, Bernoulli::Semiring),
            (&nonneg, Bernoulli::Ring),
            (&nonpos, Bernoulli::Ring),
            (&nonneg, Bernoulli::Power(k)),
            (&nonpos, Bernoulli::Power(k)),
        ] {
            clean(lib(bernoulli_check(&zx, xs, variant))?, &format!("{variant:?} on Z(X)"))?;
            match variant {
                Bernoulli::Power(k) => {
                    for x in xs {
                        let base = fadd(&fone(), &frac(x));
                        let lhs = (0..k).fold(fone(), |acc, _| fmul(&acc, &base));
                        let kx = fmul(&(Poly::constant(BigInt::from(k)), Poly::one()), &frac(x));
                        ensure!(fle(&fadd(&fone(), &kx), &lhs), "oracle power {x}, {k}");
                    }
                }
                _ => {
                    let prod = xs.iter().fold(fone(), |acc, x| fmul(&acc, &fadd(&fone(), &frac(x))));
                    let sum = xs.iter().fold(fone(), |acc, x| fadd(&acc, &frac(x)));
                    ensure!(fle(&sum, &prod), "oracle product on Z(X)");
                }
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} exact checks: semiring, ring (both signs) and power variants"))
}

// ---- 9 ----

/// `‖a‖' = nM·Σ|a_i|` and the product of a two-dimensional algebra with
/// `e₁e₁ = c·e₀`, computed directly.
fn quadratic_oracle(c: i64, pairs: &[(ordalab::metric::Tuple, ordalab::metric::Tuple)]) -> Result<(), String> {
    let scale = q(2 * c.abs().max(1), 1);
    let norm = |a: &[BigRational]| &scale * (a[0].abs() + a[1].abs());
    let cq = q(c, 1);
    for (a, b) in pairs {
        let (a, b) = (&a.0, &b.0);
        let prod = [&a[0] * &b[0] + &cq * &a[1] * &b[1], &a[0] * &b[1] + &a[1] * &b[0]];
        ensure!(norm(&prod) <= norm(a) * norm(b), "oracle: Albert bound fails for {a:?}, {b:?} with c = {c}");
    }
    Ok(())
}

fn albert() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let base = absolute_value_pseudonorm();
    let mut report = Vec::new();
    for (alg, expected_pairs) in [
        (FinDimAlgebra::gaussian(), 625),
        (FinDimAlgebra::sqrt10(), 625),
        (FinDimAlgebra::matrices2(), 1000),
        (FinDimAlgebra::quaternions(), 1000),
    ] {
        let pairs = algebra_pairs(&alg, &mut rng);
        ensure!(pairs.len() == expected_pairs, "{}: {} pairs", alg.name, pairs.len());
        let p = lib(albert_pseudonorm(&alg, &base))?;
        clean(verify_pseudonorm_pairs(&p, &pairs), &alg.name)?;
        match alg.name.as_str() {
            "Q(i)" => quadratic_oracle(-1, &pairs)?,
            "Q(sqrt10)" => {
                quadratic_oracle(10, &pairs)?;
                let unscaled = verify_pseudonorm_pairs(&coefficient_norm(&alg, &base), &pairs);
                ensure!(!unscaled.is_empty(), "the unscaled norm on Q(sqrt10) reported no violation");
                // √10·√10 = 10 while the unscaled norms multiply to 1
                let s = vec![q(0, 1), q(1, 1)];
                let prod = lib(ordalab::pseudonorm::algebra_multiply(&alg, &s, &s))?;
                ensure!(prod == vec![q(10, 1), q(0, 1)], "sqrt10 squared is {prod:?}");
                report.push(format!("unscaled norm on Q(sqrt10): {} violations", unscaled.len()));
            }
            _ => {}
        }
    }
    Ok(format!("submultiplicative on all four algebras; {}", report.join(", ")))
}

// ---- 10 ----

fn own_valuation(mut n: i64, p: i64) -> i64 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

fn own_norm(x: &BigRational, p: i64) -> ValueGroup {
    if x.is_zero() {
        return ValueGroup::Zero;
    }
    let (n, d) = (x.numer().to_i64().expect("small"), x.denom().to_i64().expect("small"));
    ValueGroup::Pow(own_valuation(d, p) - own_valuation(n, p))
}

fn padic() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for p in [2u64, 3, 5] {
        let pi = p as i64;
        let grid: Vec<BigRational> = (0..200)
            .map(|_| q(rng.gen_range(-60..=60) * pi.pow(rng.gen_range(0..=3)), rng.gen_range(1..=40) * pi.pow(rng.gen_range(0..=2))))
            .collect();
        for x in &grid {
            ensure!(lib(padic_norm(x, p))? == own_norm(x, pi), "|{x}|_{p} differs from the oracle");
        }
        let pairs: Vec<(BigRational, BigRational)> =
            grid.iter().flat_map(|x| grid.iter().map(move |y| (x.clone(), y.clone()))).collect();
        clean(verify_pseudonorm_pairs(&lib(padic_pseudonorm(p))?, &pairs), &format!("{p}-adic"))?;
        for (x, y) in &pairs {
            let (nx, ny) = (own_norm(x, pi), own_norm(y, pi));
            let prod = match (nx, ny) {
                (ValueGroup::Pow(a), ValueGroup::Pow(b)) => ValueGroup::Pow(a + b),
                _ => ValueGroup::Zero,
            };
            ensure!(lib(padic_norm(&(x * y), p))? == prod, "|{x}*{y}|_{p} is not multiplicative");
            ensure!(lib(padic_norm(&(x + y), p))? <= nx.max(ny), "|{x}+{y}|_{p} breaks the ultrametric bound");
        }
    }
    Ok("40000 pairs at each of p = 2, 3, 5: multiplicative and ultrametric".into())
}

// ---- 11 ----

fn limit_homomorphism() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let qs = Rationals;
    let ring = ConvRing {
        p: absolute_value_pseudonorm(),
        density: witness(&qs)?,
        shrink: qs.shrink().ok_or("no shrink witness")?,
        join: qs.join().ok_or("no join witness")?,
        eps0: q(1, 1),
    };
    let grid: Vec<BigRational> = qs.epsilon_grid().into_iter().take(4).collect();
    let small = |rng: &mut ChaCha8Rng| q(rng.gen_range(-9..=9), rng.gen_range(1..=9));
    // a + b/n with the modulus ⌈|b|/ε⌉ + 1
    let conv = |a: BigRational, b: BigRational| {
        let (a2, b2) = (a.clone(), b.clone());
        ConvergentSeq {
            seq: Seq::new(move |n| &a2 + &b2 / BigRational::from_integer(n.into())),
            cert: ConvCert::new(a, scaled_recip(&b)),
        }
    };
    for _ in 0..100 {
        let (a1, b1, a2, b2) = (small(&mut rng), small(&mut rng), small(&mut rng), small(&mut rng));
        let (x, y) = (conv(a1.clone(), b1.clone()), conv(a2.clone(), b2.clone()));
        let sum = lib(ring.add(&x, &y))?;
        let prod = lib(ring.mul(&x, &y))?;
        ensure!(ring.phi(&sum) == &a1 + &a2, "phi(x + y) = {} for limits {a1}, {a2}", ring.phi(&sum));
        ensure!(ring.phi(&prod) == &a1 * &a2, "phi(xy) = {} for limits {a1}, {a2}", ring.phi(&prod));
        let c = ring.constant(a1.clone());
        ensure!(ring.phi(&c) == a1, "phi(const {a1}) = {}", ring.phi(&c));
        ensure!(ring.in_zero_ideal(&x) == a1.is_zero(), "zero-ideal membership of {a1} + {b1}/n");
        let z = conv(q(0, 1), b1.clone());
        ensure!(ring.in_zero_ideal(&z), "{b1}/n is not in the zero ideal");
        let zy = lib(ring.mul(&z, &y))?;
        let yz = lib(ring.mul(&y, &z))?;
        ensure!(ring.in_zero_ideal(&zy) && ring.in_zero_ideal(&yz), "zero ideal does not absorb {a2} + {b2}/n");
        for (what, s) in [("sum", &sum), ("product", &prod), ("zero times", &zy), ("times zero", &yz)] {
            clean(ring.verify(s, &grid, 16), what)?;
        }
    }
    Ok("100 certificate pairs: additive, multiplicative, constants fixed, zero ideal absorbs".into())
}

// ---- 12 ----

fn ordalab(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ordalab"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn cli_contract() -> Check {
    let invocations: [&[&str]; 3] = [
        &["check", "Q", "--suite", "density", "--seed", "7"],
        &["series", "1/2^n", "--structure", "Q", "--test", "condensation"],
        &["algebra", "data/algebras/quaternions.json", "--suite", "albert", "--seed", "7"],
    ];
    let mut lines = 0;
    for args in invocations {
        let (code, first) = ordalab(args)?;
        let (code2, second) = ordalab(args)?;
        ensure!(code == 0 && code2 == 0, "{args:?} exited with {code}, {code2}");
        ensure!(first == second, "{args:?} output is not byte-stable");
        let text = String::from_utf8(first).map_err(|e| e.to_string())?;
        ensure!(!text.is_empty(), "{args:?} printed nothing");
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).map_err(|e| format!("{args:?}: {e}: {line}"))?;
            for key in ["suite", "structure", "check_id", "status", "witness_values", "paper_anchor"] {
                ensure!(v.get(key).is_some(), "{args:?}: record without {key}: {line}");
            }
            ensure!(v["status"] == "pass", "{args:?}: non-passing record {line}");
            lines += 1;
        }
    }
    for (args, expected) in [
        (&["check", "Q", "--suite", "density"][..], 0),
        (&["check", "Lex", "--suite", "metric"][..], 1),
        (&["check", "Z", "--suite", "density"][..], 3),
        (&["check", "Q", "--suite", "density", "--grid", "1/+"][..], 2),
    ] {
        let (code, _) = ordalab(args)?;
        ensure!(code == expected, "{args:?} exited with {code}, expected {expected}");
    }
    Ok(format!("3 invocations byte-stable ({lines} records); exit codes 0, 1, 3 and 2 as specified"))
}

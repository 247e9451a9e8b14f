//! Executable evidence objects standing in for existential statements.
//!
//! A witness is data, not a proof: the `check_*` functions re-validate it on
//! a finite grid and report every failure.

use std::fmt;
use std::sync::Arc;

use super::{Element, Ordered, Semiring, Violation};
use crate::{vals, Result};

type SplitFn<E> = dyn Fn(&E) -> Result<(E, E)> + Send + Sync;
type ShrinkFn<E> = dyn Fn(&E, &E) -> Result<Shrunk<E>> + Send + Sync;
type BoundFn<E> = dyn Fn(&E, &E) -> Result<u64> + Send + Sync;
type JoinFn<E> = dyn Fn(&E, &E) -> E + Send + Sync;

/// For positive `ε`, two positive elements `β`, `γ` with `β ∗ γ < ε`.
pub struct DensityWitness<E> {
    split: Arc<SplitFn<E>>,
}

impl<E: Element> DensityWitness<E> {
    pub fn new(f: impl Fn(&E) -> Result<(E, E)> + Send + Sync + 'static) -> Self {
        DensityWitness { split: Arc::new(f) }
    }

    pub fn split(&self, eps: &E) -> Result<(E, E)> {
        (self.split)(eps)
    }
}

/// The two shrunk factors: `left · M < α` and `M · right < α`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shrunk<E> {
    pub left: E,
    pub right: E,
}

/// For positive `α`, `M`, positive `α_l`, `α_r` with `M·α_r < α` and
/// `α_l·M < α`.
pub struct ShrinkWitness<E> {
    shrink: Arc<ShrinkFn<E>>,
}

impl<E: Element> ShrinkWitness<E> {
    pub fn new(f: impl Fn(&E, &E) -> Result<Shrunk<E>> + Send + Sync + 'static) -> Self {
        ShrinkWitness { shrink: Arc::new(f) }
    }

    pub fn shrink(&self, alpha: &E, m: &E) -> Result<Shrunk<E>> {
        (self.shrink)(alpha, m)
    }
}

/// For positive `x` and any `y`, a natural `n` with `n·x > y`.
pub struct ArchimedeanWitness<E> {
    bound: Arc<BoundFn<E>>,
}

impl<E: Element> ArchimedeanWitness<E> {
    pub fn new(f: impl Fn(&E, &E) -> Result<u64> + Send + Sync + 'static) -> Self {
        ArchimedeanWitness { bound: Arc::new(f) }
    }

    pub fn bound(&self, x: &E, y: &E) -> Result<u64> {
        (self.bound)(x, y)
    }
}

/// Least upper bound of two elements.
pub struct JoinWitness<E> {
    join: Arc<JoinFn<E>>,
}

impl<E: Element> JoinWitness<E> {
    pub fn new(f: impl Fn(&E, &E) -> E + Send + Sync + 'static) -> Self {
        JoinWitness { join: Arc::new(f) }
    }

    pub fn join(&self, a: &E, b: &E) -> E {
        (self.join)(a, b)
    }

    /// Join of a nonempty list.
    pub fn join_all<'a>(&self, first: &E, rest: impl IntoIterator<Item = &'a E>) -> E {
        rest.into_iter().fold(first.clone(), |acc, x| self.join(&acc, x))
    }
}

impl<E> Clone for DensityWitness<E> {
    fn clone(&self) -> Self {
        DensityWitness {
            split: Arc::clone(&self.split),
        }
    }
}
impl<E> Clone for ShrinkWitness<E> {
    fn clone(&self) -> Self {
        ShrinkWitness {
            shrink: Arc::clone(&self.shrink),
        }
    }
}
impl<E> Clone for ArchimedeanWitness<E> {
    fn clone(&self) -> Self {
        ArchimedeanWitness {
            bound: Arc::clone(&self.bound),
        }
    }
}
impl<E> Clone for JoinWitness<E> {
    fn clone(&self) -> Self {
        JoinWitness {
            join: Arc::clone(&self.join),
        }
    }
}

macro_rules! opaque_debug {
    ($($name:ident),*) => {$(
        impl<E> fmt::Debug for $name<E> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(stringify!($name))
            }
        }
    )*};
}

opaque_debug!(DensityWitness, ShrinkWitness, ArchimedeanWitness, JoinWitness);

/// Check `β > 0`, `γ > 0` and `β ∗ γ < ε` for every `ε` in the grid.
pub fn check_density<M: Ordered + ?Sized>(
    s: &M,
    w: &DensityWitness<M::Elem>,
    grid: &[M::Elem],
) -> Vec<Violation> {
    let mut out = Vec::new();
    for eps in grid {
        match w.split(eps) {
            Err(e) => out.push(Violation::new("density: split failed", vals![eps, e])),
            Ok((beta, gamma)) => {
                if !s.is_positive(&beta) || !s.is_positive(&gamma) {
                    out.push(Violation::new("density: split part not positive", vals![eps, beta, gamma]));
                }
                let combined = s.op(&beta, &gamma);
                if !s.lt(&combined, eps) {
                    out.push(Violation::new("density: beta*gamma not below eps", vals![eps, beta, gamma, combined]));
                }
            }
        }
    }
    out
}

/// Check `α_l, α_r > 0`, `M·α_r < α` and `α_l·M < α` on the product grid.
pub fn check_shrink<H: Ordered + Semiring + ?Sized>(
    s: &H,
    w: &ShrinkWitness<H::Elem>,
    alphas: &[H::Elem],
    bounds: &[H::Elem],
) -> Vec<Violation> {
    let mut out = Vec::new();
    for alpha in alphas {
        for m in bounds {
            match w.shrink(alpha, m) {
                Err(e) => out.push(Violation::new("shrink: witness failed", vals![alpha, m, e])),
                Ok(Shrunk { left, right }) => {
                    if !s.is_positive(&left) || !s.is_positive(&right) {
                        out.push(Violation::new("shrink: part not positive", vals![alpha, m, left, right]));
                    }
                    let mr = s.mul(m, &right);
                    if !s.lt(&mr, alpha) {
                        out.push(Violation::new("shrink: M*alpha_r not below alpha", vals![alpha, m, right, mr]));
                    }
                    let lm = s.mul(&left, m);
                    if !s.lt(&lm, alpha) {
                        out.push(Violation::new("shrink: alpha_l*M not below alpha", vals![alpha, m, left, lm]));
                    }
                }
            }
        }
    }
    out
}

/// Check `n·x > y` for every positive `x` and every `y` of the grids.
pub fn check_archimedean<M: Ordered + ?Sized>(
    s: &M,
    w: &ArchimedeanWitness<M::Elem>,
    xs: &[M::Elem],
    ys: &[M::Elem],
) -> Vec<Violation> {
    let mut out = Vec::new();
    for x in xs.iter().filter(|x| s.is_positive(x)) {
        for y in ys {
            match w.bound(x, y) {
                Err(e) => out.push(Violation::new("archimedean: witness failed", vals![x, y, e])),
                Ok(n) => {
                    let nx = s.nat_multiple(x, n);
                    if !s.lt(y, &nx) {
                        out.push(Violation::new("archimedean: n*x not above y", vals![x, y, n, nx]));
                    }
                }
            }
        }
    }
    out
}

/// Check that `join(a, b)` bounds both arguments and lies below every sampled
/// common upper bound.
pub fn check_join<M: Ordered + ?Sized>(s: &M, w: &JoinWitness<M::Elem>, sample: &[M::Elem]) -> Vec<Violation> {
    let mut out = Vec::new();
    for a in sample {
        for b in sample {
            let j = w.join(a, b);
            if !s.le(a, &j) || !s.le(b, &j) {
                out.push(Violation::new("join: not an upper bound", vals![a, b, j]));
                continue;
            }
            for u in sample {
                if s.le(a, u) && s.le(b, u) && !s.le(&j, u) {
                    out.push(Violation::new("join: not least", vals![a, b, j, u]));
                }
            }
        }
    }
    out
}

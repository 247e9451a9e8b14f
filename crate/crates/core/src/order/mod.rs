//! Ordered group-like structures.
//!
//! A structure is a value implementing [`Magma`] (carrier, operation, identity
//! and capability flags) plus [`Ordered`] for its partial order. Richer
//! structures add [`Group`], [`Hemiring`] and [`Semiring`]. The traits take
//! `&self` so a structure can carry parameters (the prime of ℤ[1/p], say).

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

mod compat;
mod density;
mod witness;

pub use compat::{verify_compatibility, verify_compatibility_with, verify_mul_compatibility, CompatMode};
pub use density::{
    betweenness, demarr_density_witness, density_from_unit_interval, division_shrink_witness,
    module_density_witness, n_split,
};
pub use witness::{
    check_archimedean, check_density, check_join, check_shrink, ArchimedeanWitness, DensityWitness,
    JoinWitness, ShrinkWitness, Shrunk,
};

/// Four-valued comparison result. Partial orders report `Incomparable`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum OrderResult {
    Less,
    Equal,
    Greater,
    Incomparable,
}

impl OrderResult {
    pub fn reverse(self) -> Self {
        match self {
            OrderResult::Less => OrderResult::Greater,
            OrderResult::Greater => OrderResult::Less,
            other => other,
        }
    }

    pub fn is_le(self) -> bool {
        matches!(self, OrderResult::Less | OrderResult::Equal)
    }
}

impl From<Ordering> for OrderResult {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => OrderResult::Less,
            Ordering::Equal => OrderResult::Equal,
            Ordering::Greater => OrderResult::Greater,
        }
    }
}

/// Capability flags of a structure.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub unital: bool,
    pub associative: bool,
    pub commutative_add: bool,
    pub group: bool,
    pub near_ring: bool,
    pub hemiring: bool,
    pub semiring: bool,
    pub ring: bool,
    pub division_ring: bool,
    pub field: bool,
    pub total_order: bool,
    pub join_semilattice: bool,
}

impl StructureFlags {
    pub const fn monoid() -> Self {
        StructureFlags {
            unital: true,
            associative: true,
            commutative_add: false,
            group: false,
            near_ring: false,
            hemiring: false,
            semiring: false,
            ring: false,
            division_ring: false,
            field: false,
            total_order: false,
            join_semilattice: false,
        }
    }

    pub const fn group() -> Self {
        let mut f = Self::monoid();
        f.group = true;
        f
    }

    pub const fn semiring() -> Self {
        let mut f = Self::monoid();
        f.commutative_add = true;
        f.hemiring = true;
        f.semiring = true;
        f
    }

    /// Commutative ring with identity.
    pub const fn ring() -> Self {
        let mut f = Self::semiring();
        f.group = true;
        f.near_ring = true;
        f.ring = true;
        f
    }

    pub const fn field() -> Self {
        let mut f = Self::ring();
        f.division_ring = true;
        f.field = true;
        f
    }

    pub const fn totally_ordered(mut self) -> Self {
        self.total_order = true;
        self.join_semilattice = true;
        self
    }

    pub const fn commutative(mut self) -> Self {
        self.commutative_add = true;
        self
    }

    pub const fn with_join(mut self) -> Self {
        self.join_semilattice = true;
        self
    }

    /// Names of violated implications (`field ⇒ ring`, ...). Empty when the
    /// flag set is monotone.
    pub fn inconsistencies(&self) -> Vec<&'static str> {
        let rules: [(bool, bool, &'static str); 11] = [
            (self.field, self.division_ring, "field => division_ring"),
            (self.field, self.commutative_add, "field => commutative_add"),
            (self.division_ring, self.ring, "division_ring => ring"),
            (self.division_ring, self.semiring, "division_ring => semiring"),
            (self.ring, self.hemiring, "ring => hemiring"),
            (self.ring, self.group, "ring => group"),
            (self.ring, self.near_ring, "ring => near_ring"),
            (self.semiring, self.hemiring, "semiring => hemiring"),
            (self.hemiring, self.commutative_add && self.associative, "hemiring => commutative monoid"),
            (self.group, self.unital && self.associative, "group => monoid"),
            (self.total_order, self.join_semilattice, "total_order => join_semilattice"),
        ];
        rules
            .iter()
            .filter(|(premise, conclusion, _)| *premise && !*conclusion)
            .map(|(_, _, name)| *name)
            .collect()
    }
}

/// Bounds shared by every carrier element.
pub trait Element: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T> Element for T where T: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {}

/// A unital magma: carrier, binary operation (written additively) and its
/// two-sided identity.
pub trait Magma: Send + Sync {
    type Elem: Element;

    /// Registry key, e.g. `"Q"` or `"Z(X)"`.
    fn key(&self) -> String;
    fn flags(&self) -> StructureFlags;
    fn op(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;

    /// Left fold of `op` over a nonempty list; the identity for an empty one.
    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
    {
        let mut it = items.into_iter();
        match it.next() {
            None => self.zero(),
            Some(first) => it.fold(first.clone(), |acc, x| self.op(&acc, x)),
        }
    }

    /// `x op x op … op x` (`n` copies); the identity for `n = 0`.
    fn nat_multiple(&self, x: &Self::Elem, n: u64) -> Self::Elem {
        if !self.flags().associative {
            return (0..n).fold(self.zero(), |acc, _| self.op(&acc, x));
        }
        let mut result = self.zero();
        let mut base = x.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = self.op(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.op(&base, &base);
            }
        }
        result
    }
}

/// A partial order on the carrier of a magma.
pub trait Ordered: Magma {
    fn compare(&self, a: &Self::Elem, b: &Self::Elem) -> OrderResult;

    fn lt(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.compare(a, b) == OrderResult::Less
    }

    fn le(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.compare(a, b).is_le()
    }

    fn is_positive(&self, a: &Self::Elem) -> bool {
        self.lt(&self.zero(), a)
    }

    fn is_nonnegative(&self, a: &Self::Elem) -> bool {
        self.le(&self.zero(), a)
    }

    /// Larger of two comparable elements; `None` when incomparable.
    fn max_of(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        match self.compare(a, b) {
            OrderResult::Less => Some(b.clone()),
            OrderResult::Equal | OrderResult::Greater => Some(a.clone()),
            OrderResult::Incomparable => None,
        }
    }
}

/// A (not necessarily abelian) group.
pub trait Group: Magma {
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    /// `a + (−b)`.
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.op(a, &self.neg(b))
    }
}

/// Hemiring: the magma operation is addition, plus an associative
/// multiplication distributing over it with absorbing zero.
pub trait Hemiring: Magma {
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

/// Hemiring with multiplicative identity.
pub trait Semiring: Hemiring {
    fn one(&self) -> Self::Elem;

    /// Multiplicative inverse when it exists in the carrier.
    fn try_inv(&self, _a: &Self::Elem) -> Option<Self::Elem> {
        None
    }

    fn pow(&self, a: &Self::Elem, n: u64) -> Self::Elem {
        let mut result = self.one();
        let mut base = a.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                result = self.mul(&result, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        result
    }

    /// The image of `n` under ℕ → S, i.e. `1 + 1 + … + 1`.
    #[allow(clippy::wrong_self_convention)]
    fn from_nat(&self, n: u64) -> Self::Elem {
        self.nat_multiple(&self.one(), n)
    }
}

/// Ring in the sense used here: a hemiring whose addition is a group. A
/// multiplicative identity is not implied.
pub trait Ring: Hemiring + Group {}
impl<T: Hemiring + Group + ?Sized> Ring for T {}

/// Ordered ring with identity, the common bound of the analysis modules.
pub trait OrderedRing: Ring + Semiring + Ordered {
    /// `max{x, −x}`; requires a total order.
    fn abs(&self, x: &Self::Elem) -> Self::Elem {
        let n = self.neg(x);
        self.max_of(x, &n).unwrap_or(n)
    }
}
impl<T: Ring + Semiring + Ordered + ?Sized> OrderedRing for T {}

/// A module over a ring of scalars; the magma operation is module addition.
pub trait Module: Group {
    type Scalar: Element;
    fn scale(&self, r: &Self::Scalar, m: &Self::Elem) -> Self::Elem;
}

/// `max{x, −x}` in a totally ordered group.
pub fn group_abs<G: Group + Ordered + ?Sized>(g: &G, x: &G::Elem) -> Result<G::Elem, crate::Error> {
    let n = g.neg(x);
    g.max_of(x, &n)
        .ok_or_else(|| crate::Error::capability(format!("{}: |x| needs a total order", g.key())))
}

/// One failed check: the rule that failed and the exact values involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: String,
    pub values: Vec<String>,
}

impl Violation {
    pub fn new(rule: impl Into<String>, values: Vec<String>) -> Self {
        Violation {
            rule: rule.into(),
            values,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.rule, self.values.join(", "))
    }
}

/// Render a list of elements for a [`Violation`].
#[macro_export]
macro_rules! vals {
    ($($e:expr),* $(,)?) => { vec![$($e.to_string()),*] };
}

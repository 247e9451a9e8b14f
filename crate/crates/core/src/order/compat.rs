use super::{Element, Hemiring, OrderResult, Ordered, Violation};
use crate::vals;

/// Which relation must be preserved by the operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompatMode {
    /// `a ≤ b` implies `a∗c ≤ b∗c` and `c∗a ≤ c∗b`.
    Weak,
    /// `a < b` implies `a∗c < b∗c` and `c∗a < c∗b`.
    Strict,
}

impl CompatMode {
    fn relates(self, r: OrderResult) -> bool {
        match self {
            CompatMode::Weak => r.is_le(),
            CompatMode::Strict => r == OrderResult::Less,
        }
    }
}

/// Every triple `(a, b, c)` of the sample violating two-sided compatibility of
/// the structure's operation with its order.
pub fn verify_compatibility<M: Ordered + ?Sized>(s: &M, sample: &[M::Elem], mode: CompatMode) -> Vec<Violation> {
    verify_compatibility_with(|a, b| s.compare(a, b), |a, b| s.op(a, b), sample, mode)
}

/// Compatibility of an arbitrary operation with an arbitrary comparator.
pub fn verify_compatibility_with<E, C, O>(compare: C, op: O, sample: &[E], mode: CompatMode) -> Vec<Violation>
where
    E: Element,
    C: Fn(&E, &E) -> OrderResult,
    O: Fn(&E, &E) -> E,
{
    let mut out = Vec::new();
    for a in sample {
        for b in sample {
            if !mode.relates(compare(a, b)) {
                continue;
            }
            for c in sample {
                let (ac, bc) = (op(a, c), op(b, c));
                if !mode.relates(compare(&ac, &bc)) {
                    out.push(Violation::new("compatibility: right translate", vals![a, b, c, ac, bc]));
                }
                let (ca, cb) = (op(c, a), op(c, b));
                if !mode.relates(compare(&ca, &cb)) {
                    out.push(Violation::new("compatibility: left translate", vals![a, b, c, ca, cb]));
                }
            }
        }
    }
    out
}

/// Hemiring multiplication against the order: `a ≤ b` and `0 ≤ c` imply
/// `ac ≤ bc` and `ca ≤ cb` (strict: `a < b`, `0 < c` imply strict products).
pub fn verify_mul_compatibility<H: Hemiring + Ordered + ?Sized>(
    s: &H,
    sample: &[H::Elem],
    mode: CompatMode,
) -> Vec<Violation> {
    let zero = s.zero();
    let mut out = Vec::new();
    for c in sample {
        if !mode.relates(s.compare(&zero, c)) {
            continue;
        }
        for a in sample {
            for b in sample {
                if !mode.relates(s.compare(a, b)) {
                    continue;
                }
                let (ac, bc) = (s.mul(a, c), s.mul(b, c));
                if !mode.relates(s.compare(&ac, &bc)) {
                    out.push(Violation::new("compatibility: right product", vals![a, b, c, ac, bc]));
                }
                let (ca, cb) = (s.mul(c, a), s.mul(c, b));
                if !mode.relates(s.compare(&ca, &cb)) {
                    out.push(Violation::new("compatibility: left product", vals![a, b, c, ca, cb]));
                }
            }
        }
    }
    out
}

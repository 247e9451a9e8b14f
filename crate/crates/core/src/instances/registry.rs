//! String-keyed registry of every shipped structure.

use super::{
    GaussianRationals, IdealsZ, Instance, Integers, LexGroup, Localized, OrthantModule, RationalFunctions, Rationals,
    Tropical, ValueGroupSemiring,
};
use crate::order::{Magma, StructureFlags};
use crate::{Error, Result};

/// A registered structure. Generic code reaches the concrete type through
/// [`dispatch!`](crate::dispatch).
#[derive(Debug, Clone, Copy)]
pub enum Structure {
    Q(Rationals),
    Z(Integers),
    Localized(Localized),
    RatFunc(RationalFunctions),
    Trop(Tropical),
    Lex(LexGroup),
    Gaussian(GaussianRationals),
    Ideals(IdealsZ),
    Orthant(OrthantModule),
    Valuation(ValueGroupSemiring),
}

/// Run `$body` with `$s` bound to the concrete instance inside a
/// [`Structure`]. The body must typecheck for every instance.
#[macro_export]
macro_rules! dispatch {
    ($structure:expr, $s:ident => $body:expr) => {
        match $structure {
            $crate::instances::Structure::Q($s) => $body,
            $crate::instances::Structure::Z($s) => $body,
            $crate::instances::Structure::Localized($s) => $body,
            $crate::instances::Structure::RatFunc($s) => $body,
            $crate::instances::Structure::Trop($s) => $body,
            $crate::instances::Structure::Lex($s) => $body,
            $crate::instances::Structure::Gaussian($s) => $body,
            $crate::instances::Structure::Ideals($s) => $body,
            $crate::instances::Structure::Orthant($s) => $body,
            $crate::instances::Structure::Valuation($s) => $body,
        }
    };
}

/// Capability summary of a structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Capabilities {
    pub density: bool,
    pub shrink: bool,
    pub archimedean: bool,
    pub join: bool,
}

impl Structure {
    pub fn key(&self) -> String {
        dispatch!(self, s => s.key())
    }

    pub fn flags(&self) -> StructureFlags {
        dispatch!(self, s => s.flags())
    }

    pub fn description(&self) -> &'static str {
        dispatch!(self, s => s.description())
    }

    pub fn capabilities(&self) -> Capabilities {
        dispatch!(self, s => Capabilities {
            density: s.density().is_some(),
            shrink: s.shrink().is_some(),
            archimedean: s.archimedean().is_some(),
            join: s.join().is_some(),
        })
    }
}

/// Every shipped structure, each exactly once.
pub fn registry() -> Vec<Structure> {
    let mut out = vec![Structure::Q(Rationals), Structure::Z(Integers)];
    for p in [2, 3, 5] {
        out.push(Structure::Localized(Localized::new(p).expect("registry primes")));
    }
    out.extend([
        Structure::RatFunc(RationalFunctions),
        Structure::Trop(Tropical),
        Structure::Lex(LexGroup),
        Structure::Gaussian(GaussianRationals),
        Structure::Ideals(IdealsZ),
        Structure::Orthant(OrthantModule),
        Structure::Valuation(ValueGroupSemiring),
    ]);
    out
}

/// Structure by registry key (`"Q"`, `"Z[1/3]"`, `"Z(X)"`, ...).
pub fn lookup(key: &str) -> Result<Structure> {
    registry()
        .into_iter()
        .find(|s| s.key() == key)
        .ok_or_else(|| Error::Unknown {
            kind: "structure",
            name: key.to_string(),
        })
}

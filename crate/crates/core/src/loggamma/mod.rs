//! `log Γ` through five integral representations, an independent reference,
//! and the duplication and Raabe identities as residuals.

mod identities;
mod integral;
mod reference;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::quadrature::{QuadError, QuadOptions};
use crate::scalar::Real;

pub use identities::{duplication_residual, raabe_residual};
pub use integral::{
    binet1_integrand, binet2_integrand, feaux_integrand, kummer_integrand, loggamma_binet1,
    loggamma_binet2, loggamma_feaux, loggamma_kummer, loggamma_malmsten, malmsten_integrand,
};
pub use reference::loggamma_reference;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GammaError<T: Real> {
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Quadrature(#[from] QuadError<T>),
}

/// Registry key over the available `log Γ` evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReprId {
    Feaux,
    Binet1,
    Binet2,
    Malmsten,
    Kummer,
    Reference,
}

impl ReprId {
    pub const ALL: [ReprId; 6] = [
        ReprId::Feaux,
        ReprId::Binet1,
        ReprId::Binet2,
        ReprId::Malmsten,
        ReprId::Kummer,
        ReprId::Reference,
    ];

    /// The five integral representations, without the reference.
    pub const INTEGRALS: [ReprId; 5] = [
        ReprId::Feaux,
        ReprId::Binet1,
        ReprId::Binet2,
        ReprId::Malmsten,
        ReprId::Kummer,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ReprId::Feaux => "feaux",
            ReprId::Binet1 => "binet1",
            ReprId::Binet2 => "binet2",
            ReprId::Malmsten => "malmsten",
            ReprId::Kummer => "kummer",
            ReprId::Reference => "reference",
        }
    }
}

impl fmt::Display for ReprId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ReprId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ReprId::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| format!("unknown log-gamma representation {s:?}"))
    }
}

/// `log Γ(x)` through the chosen representation.
///
/// Féaux natively yields `log Γ(x+1)`, so it is evaluated at `x − 1` here.
pub fn loggamma<T: Real>(repr: ReprId, x: T, opts: &QuadOptions<T>) -> Result<T, GammaError<T>> {
    match repr {
        ReprId::Feaux => {
            if !(x > T::zero()) {
                return Err(GammaError::Domain(format!(
                    "log-gamma needs x > 0, got {x}"
                )));
            }
            loggamma_feaux(x - T::one(), opts)
        }
        ReprId::Binet1 => loggamma_binet1(x, opts),
        ReprId::Binet2 => loggamma_binet2(x, opts),
        ReprId::Malmsten => loggamma_malmsten(x, opts),
        ReprId::Kummer => loggamma_kummer(x, opts),
        ReprId::Reference => loggamma_reference(x),
    }
}

//! Integral representations of the Catalan numbers and of `log Γ`, evaluated
//! by adaptive quadrature and checked against exact big-integer values.
//!
//! Numerical code is generic over [`Real`] (`f32`, `f64`); the aliases below
//! fix the scalar to `f64`.

// `!(x > 0)` also rejects NaN, which is the point
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod combinatorics;
pub mod integrals;
pub mod loggamma;
pub mod quadrature;
pub mod scalar;

pub use combinatorics::{
    b3, ballot, binomial, catalan_exact, catalan_hypergeometric, catalan_segner,
    catalan_segner_table, count_dyck_words, count_lattice_paths, dyck_words, fuss_catalan,
    ln_exact, DyckSymbol, DyckWord, ExactError, ExactInteger, MAX_DYCK_N,
};
pub use integrals::{
    catalan_via_duplication, catalan_via_feaux, log_catalan_gamma, resolve_exponent_typo,
    CatalanError, CatalanIndex, ExponentCheck, ReprResult,
};
pub use loggamma::{loggamma, loggamma_reference, GammaError, ReprId};
pub use quadrature::{
    integrate_finite, integrate_semi_infinite, IntegrandSpec, QuadError, QuadOptions, QuadResult,
    TailBound,
};
pub use scalar::Real;

pub type QuadResult64 = QuadResult<f64>;
pub type QuadOptions64 = QuadOptions<f64>;
pub type QuadError64 = QuadError<f64>;
pub type IntegrandSpec64<'a> = IntegrandSpec<'a, f64>;
pub type ReprResult64 = ReprResult<f64>;
pub type CatalanError64 = CatalanError<f64>;
pub type GammaError64 = GammaError<f64>;
pub type ExponentCheck64 = ExponentCheck<f64>;

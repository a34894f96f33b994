//! Spectral and autocorrelation analysis of Boolean functions
//! f(x) = Tr(a7 x^7 + sum_i b_i x^(2^i + 1)) over GF(2^m), with the
//! genus-2 and auxiliary-curve machinery that explains their autocorrelation.

pub mod autocorr;
pub mod auxcurve;
pub mod boolfn;
pub mod bounds;
pub mod classify7;
pub mod cli;
pub mod error;
pub mod field;
pub mod genus2;
pub mod gf2;
pub mod rng;
pub mod spectrum;

pub use boolfn::{QuinticCurve, TracePoly, TruthTable};
pub use error::{Error, Result};
pub use field::{Fe, FieldCtx};

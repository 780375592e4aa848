//! Exact computation of Frobenius roots, generalized (mixed) test ideals,
//! F-thresholds and F-jumping numbers for ideals of `F_p[x_1, ..., x_r]`,
//! together with rasterization and analysis of the constancy regions of
//! mixed test ideals.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod region;
pub mod testideal;

pub use error::{Error, Result};

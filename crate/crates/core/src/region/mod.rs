//! Constancy regions of mixed test ideals: characteristic functions,
//! rasters of the parameter space, p-fractal operators and the base-3
//! staircase boundary.

mod chi;
mod fractal;
mod grid;
mod raster;
mod staircase;

pub use chi::{chi, chi_grid, region_membership, ChiOracle};
pub use fractal::{
    fractal_operator, fractal_span_census, fractal_span_census_at, is_zero_function, verify_fractal_identity, Census,
    FractalReport, FractalVerifier, CENSUS_LEVEL,
};
pub use grid::{GridFunction, ParamBox};
pub use raster::{rasterize, RegionRaster};
pub use staircase::{staircase_boundary, DigitPoint};

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::chi::{chi_grid, tau_table, ChiOracle};
use super::grid::{grid_indices, GridFunction, ParamBox};
use crate::algebra::IdealGens;
use crate::error::{Error, Result};
use crate::frobenius::{bracket_power, FrobLevel};
use crate::groebner::ideal_colon_with;
use crate::testideal::{IdealFamily, Rational, TauConfig};

/// `T_{p^e|b} φ (t) = φ((t + b) / p^e)`.
///
/// `phi` must be sampled at level `k >= e`; the result lives on the level
/// `k - e` grid of the same box.
pub fn fractal_operator(phi: &GridFunction, e: u32, b: &[u64]) -> Result<GridFunction> {
    let (p, k) = (phi.p(), phi.level());
    if e > k {
        return Err(Error::Resolution(format!("operator level {e} exceeds sampling level {k}")));
    }
    if b.len() != phi.dims().len() {
        return Err(Error::InvalidArgument("shift has the wrong length".into()));
    }
    let q = FrobLevel::new(p, e)?.q();
    if b.iter().any(|&bi| bi >= q) {
        return Err(Error::InvalidArgument(format!("shift entries must lie in [0, {q})")));
    }
    let step = p.pow(k - e);
    let out_dims = phi.bx().grid_dims(p, k - e)?;
    let values = grid_indices(&out_dims)?
        .iter()
        .map(|j| {
            let src: Vec<u64> = j.iter().zip(b).map(|(&ji, &bi)| ji + bi * step).collect();
            phi.get(&src).cloned().ok_or_else(|| {
                Error::Resolution(format!("T_{{{q}|{b:?}}} reads outside the sampled box"))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    GridFunction::new(phi.bx().clone(), p, k - e, values)
}

/// Sample counts from one comparison of the two sides of the fractal identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FractalReport {
    pub samples: usize,
    pub agreements: usize,
}

impl FractalReport {
    pub fn holds(&self) -> bool {
        self.samples == self.agreements
    }
}

/// Compares `T_{p^e|b} χ^I` with `T_{1|l-1} χ^{(I^[p^e] : a^{b-l+1})}` on a
/// level-`k` grid, where `l` holds the stored generator counts. Both sides
/// are evaluated independently; the left side table is shared across shifts.
#[derive(Debug, Clone)]
pub struct FractalVerifier {
    fam: IdealFamily,
    i: IdealGens,
    level: FrobLevel,
    cfg: TauConfig,
    lhs: GridFunction,
    rhs_tau: Vec<IdealGens>,
}

impl FractalVerifier {
    pub fn new(fam: &IdealFamily, i: &IdealGens, e: u32, bx: &ParamBox, k: u32, cfg: &TauConfig) -> Result<Self> {
        if bx.dim() != fam.len() {
            return Err(Error::InvalidArgument("box dimension differs from family size".into()));
        }
        let p = fam.ring().p();
        let level = FrobLevel::new(p, e)?;
        let lhs = chi_grid(fam, i, bx, k + e, cfg)?;
        let dims = bx.grid_dims(p, k)?;
        let step = p.pow(k);
        let offset: Vec<u64> = fam.gen_counts().iter().map(|&l| (l - 1) * step).collect();
        let rhs_tau = tau_table(fam, &dims, &offset, k, cfg)?;
        Ok(FractalVerifier {
            fam: fam.clone(),
            i: i.clone(),
            level,
            cfg: *cfg,
            lhs,
            rhs_tau,
        })
    }

    pub fn check(&self, b: &[u64]) -> Result<FractalReport> {
        let l = self.fam.gen_counts();
        if b.len() != l.len() {
            return Err(Error::InvalidArgument("shift has the wrong length".into()));
        }
        if b.iter().zip(l).any(|(&bi, &li)| bi + 1 < li) {
            return Err(Error::Precondition(format!("shift {b:?} is below l - 1 = {:?}", l.iter().map(|x| x - 1).collect::<Vec<_>>())));
        }
        let left = fractal_operator(&self.lhs, self.level.e(), b)?;

        let m: Vec<u64> = b.iter().zip(l).map(|(&bi, &li)| bi + 1 - li).collect();
        let target = bracket_power(&self.i, self.level)?;
        let j = ideal_colon_with(&target, &self.fam.power(&m)?, &self.cfg.gb)?;
        let oracle = ChiOracle::new(&self.fam, &j, &self.cfg)?;
        let agreements = left
            .values()
            .iter()
            .zip(&self.rhs_tau)
            .filter(|(lv, tau)| {
                let rv = oracle.eval_tau(tau);
                (rv == 1) == lv.is_one()
            })
            .count();
        Ok(FractalReport {
            samples: left.values().len(),
            agreements,
        })
    }
}

pub fn verify_fractal_identity(
    fam: &IdealFamily,
    i: &IdealGens,
    e: u32,
    b: &[u64],
    bx: &ParamBox,
    k: u32,
    cfg: &TauConfig,
) -> Result<bool> {
    let l = fam.gen_counts();
    if b.len() == l.len() && b.iter().zip(l).any(|(&bi, &li)| bi + 1 < li) {
        return Err(Error::Precondition("shift below l - 1".into()));
    }
    Ok(FractalVerifier::new(fam, i, e, bx, k, cfg)?.check(b)?.holds())
}

/// Distinct restrictions `T_{q|b} χ^I` to the reference grid, for
/// `q = p^0, ..., p^{e_max}` and every `b ∈ [0, q)^n`.
#[derive(Debug, Clone)]
pub struct Census {
    pub functions: Vec<GridFunction>,
    /// Number of distinct functions after including level `e`, for each `e`.
    pub sizes: Vec<usize>,
}

impl Census {
    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }
}

pub const CENSUS_LEVEL: u32 = 2;

pub fn fractal_span_census(fam: &IdealFamily, i: &IdealGens, bx: &ParamBox, e_max: u32, cfg: &TauConfig) -> Result<Census> {
    fractal_span_census_at(fam, i, bx, e_max, CENSUS_LEVEL, cfg)
}

/// [`fractal_span_census`] with an explicit reference level.
pub fn fractal_span_census_at(
    fam: &IdealFamily,
    i: &IdealGens,
    bx: &ParamBox,
    e_max: u32,
    ref_level: u32,
    cfg: &TauConfig,
) -> Result<Census> {
    let p = fam.ring().p();
    let mut census = Census {
        functions: Vec::new(),
        sizes: Vec::new(),
    };
    let mut seen: HashMap<[u8; 32], Vec<usize>> = HashMap::new();
    for e in 0..=e_max {
        let phi = chi_grid(fam, i, bx, ref_level + e, cfg)?;
        let q = FrobLevel::new(p, e)?.q();
        for b in grid_indices(&vec![q; fam.len()])? {
            let g = fractal_operator(&phi, e, &b)?;
            let bucket = seen.entry(g.fingerprint()).or_default();
            if !bucket.iter().any(|&ix| census.functions[ix] == g) {
                bucket.push(census.functions.len());
                census.functions.push(g);
            }
        }
        census.sizes.push(census.functions.len());
    }
    Ok(census)
}

/// A 0/1 function is constant zero.
pub fn is_zero_function(g: &GridFunction) -> bool {
    g.values().iter().all(Rational::is_zero)
}

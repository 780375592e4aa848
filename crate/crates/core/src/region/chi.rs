use num_traits::{One, Zero};
use rayon::prelude::*;

use super::grid::{grid_indices, GridFunction, ParamBox};
use crate::algebra::IdealGens;
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, ReducedGB};
use crate::testideal::{tau_mixed, IdealFamily, ParamPoint, Rational, TauConfig};

/// `χ^I(c) = 1` iff `τ(a^c) ⊄ I`; the Gröbner basis of `I` is computed once.
#[derive(Debug, Clone)]
pub struct ChiOracle {
    fam: IdealFamily,
    gb: ReducedGB,
    cfg: TauConfig,
}

impl ChiOracle {
    pub fn new(fam: &IdealFamily, i: &IdealGens, cfg: &TauConfig) -> Result<Self> {
        if i.ring() != fam.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(ChiOracle {
            fam: fam.clone(),
            gb: buchberger_with(i, &cfg.gb)?,
            cfg: *cfg,
        })
    }

    pub fn from_gb(fam: &IdealFamily, gb: ReducedGB, cfg: &TauConfig) -> Self {
        ChiOracle {
            fam: fam.clone(),
            gb,
            cfg: *cfg,
        }
    }

    pub fn eval(&self, c: &ParamPoint) -> Result<u8> {
        if self.gb.is_unit() {
            return Ok(0);
        }
        let tau = tau_mixed(&self.fam, c, &self.cfg).map_err(|e| at(c, e))?;
        Ok(self.eval_tau(&tau))
    }

    /// `χ` from an already computed `τ(a^c)`.
    pub fn eval_tau(&self, tau: &IdealGens) -> u8 {
        u8::from(!self.gb.contains_ideal(tau))
    }
}

pub(crate) fn at(c: &ParamPoint, e: Error) -> Error {
    match e {
        Error::AtPoint { .. } => e,
        e => Error::AtPoint {
            point: c.to_string(),
            source: Box::new(e),
        },
    }
}

pub fn chi(fam: &IdealFamily, i: &IdealGens, c: &ParamPoint, cfg: &TauConfig) -> Result<u8> {
    ChiOracle::new(fam, i, cfg)?.eval(c)
}

/// `τ(a^c)` at the grid points `offset + j` (level `k`) for every index `j` of `dims`.
pub(crate) fn tau_table(
    fam: &IdealFamily,
    dims: &[u64],
    offset: &[u64],
    k: u32,
    cfg: &TauConfig,
) -> Result<Vec<IdealGens>> {
    let p = fam.ring().p();
    grid_indices(dims)?
        .into_par_iter()
        .map(|j| {
            let idx: Vec<u64> = j.iter().zip(offset).map(|(a, b)| a + b).collect();
            let c = ParamPoint::grid(&idx, p, k);
            tau_mixed(fam, &c, cfg).map_err(|e| at(&c, e))
        })
        .collect()
}

/// `χ^I` sampled on the level-`k` grid over `bx`.
pub fn chi_grid(fam: &IdealFamily, i: &IdealGens, bx: &ParamBox, k: u32, cfg: &TauConfig) -> Result<GridFunction> {
    if bx.dim() != fam.len() {
        return Err(Error::InvalidArgument("box dimension differs from family size".into()));
    }
    let oracle = ChiOracle::new(fam, i, cfg)?;
    let p = fam.ring().p();
    if oracle.gb.is_unit() {
        return GridFunction::constant(bx.clone(), p, k, Rational::zero());
    }
    let dims = bx.grid_dims(p, k)?;
    let taus = tau_table(fam, &dims, &vec![0; dims.len()], k, cfg)?;
    let values = taus
        .par_iter()
        .map(|t| {
            if oracle.eval_tau(t) == 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    GridFunction::new(bx.clone(), p, k, values)
}

/// `c` lies in the constancy region of `J = τ(a^{c_0})` when `χ^{I}(c) = 1`
/// for every `I` in `others` and `χ^J(c) = 0`. `others` should be the ideals
/// of a complete palette that are strictly contained in `J`; an empty list
/// imposes no condition.
pub fn region_membership(
    fam: &IdealFamily,
    c: &ParamPoint,
    others: &[IdealGens],
    j: &IdealGens,
    cfg: &TauConfig,
) -> Result<bool> {
    let tau = tau_mixed(fam, c, cfg).map_err(|e| at(c, e))?;
    if ChiOracle::new(fam, j, cfg)?.eval_tau(&tau) != 0 {
        return Ok(false);
    }
    for i in others {
        if ChiOracle::new(fam, i, cfg)?.eval_tau(&tau) != 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

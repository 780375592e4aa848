use std::collections::HashMap;

use rayon::prelude::*;

use super::grid::{grid_indices, linear_index, ParamBox};
use super::chi::tau_table;
use crate::algebra::IdealGens;
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, IdealKey, ReducedGB};
use crate::testideal::{IdealFamily, TauConfig};

/// Test ideals sampled at the level-`k` grid points of a box. Each cell holds
/// an index into `palette`; indices are assigned in order of first
/// appearance along the row-major scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionRaster {
    p: u64,
    bx: ParamBox,
    k: u32,
    dims: Vec<u64>,
    cells: Vec<u32>,
    palette: Vec<IdealKey>,
    palette_gb: Vec<ReducedGB>,
}

impl RegionRaster {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn bx(&self) -> &ParamBox {
        &self.bx
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn cells(&self) -> &[u32] {
        &self.cells
    }

    pub fn palette(&self) -> &[IdealKey] {
        &self.palette
    }

    pub fn palette_gb(&self) -> &[ReducedGB] {
        &self.palette_gb
    }

    pub fn cell(&self, idx: &[u64]) -> Option<u32> {
        linear_index(&self.dims, idx).map(|i| self.cells[i])
    }

    /// `(index vector, palette index)` in row-major order.
    pub fn iter_cells(&self) -> impl Iterator<Item = (Vec<u64>, u32)> + '_ {
        grid_indices(&self.dims)
            .expect("grid was built")
            .into_iter()
            .zip(self.cells.iter().copied())
    }

    /// Palette ideals strictly contained in entry `idx`.
    pub fn strictly_below(&self, idx: usize) -> Vec<IdealGens> {
        let top = &self.palette_gb[idx];
        self.palette_gb
            .iter()
            .enumerate()
            .filter(|&(j, g)| j != idx && top.contains_ideal(&g.to_ideal()))
            .map(|(_, g)| g.to_ideal())
            .collect()
    }
}

pub fn rasterize(fam: &IdealFamily, bx: &ParamBox, k: u32, cfg: &TauConfig) -> Result<RegionRaster> {
    if bx.dim() != fam.len() {
        return Err(Error::InvalidArgument("box dimension differs from family size".into()));
    }
    let p = fam.ring().p();
    let dims = bx.grid_dims(p, k)?;
    let taus = tau_table(fam, &dims, &vec![0; dims.len()], k, cfg)?;

    // identical generator lists share one Gröbner basis
    let mut distinct: Vec<&IdealGens> = Vec::new();
    let mut slot: HashMap<&IdealGens, usize> = HashMap::new();
    let cell_slot: Vec<usize> = taus
        .iter()
        .map(|t| {
            *slot.entry(t).or_insert_with(|| {
                distinct.push(t);
                distinct.len() - 1
            })
        })
        .collect();
    let gbs = distinct
        .par_iter()
        .map(|t| buchberger_with(t, &cfg.gb))
        .collect::<Result<Vec<_>>>()?;

    let mut palette = Vec::new();
    let mut palette_gb = Vec::new();
    let mut by_key: HashMap<IdealKey, u32> = HashMap::new();
    let cells = cell_slot
        .iter()
        .map(|&s| {
            let key = IdealKey::from_gb(&gbs[s]);
            *by_key.entry(key.clone()).or_insert_with(|| {
                palette.push(key);
                palette_gb.push(gbs[s].clone());
                (palette.len() - 1) as u32
            })
        })
        .collect();

    Ok(RegionRaster {
        p,
        bx: bx.clone(),
        k,
        dims,
        cells,
        palette,
        palette_gb,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;
    use crate::region::chi::{region_membership, ChiOracle};
    use crate::testideal::ParamPoint;

    fn fam() -> IdealFamily {
        let r = Ring::new(3, &["x", "y"]).unwrap();
        IdealFamily::parse(&r, &["x+y", "x*y"]).unwrap()
    }

    fn keys(r: &RegionRaster) -> Vec<&str> {
        let mut v: Vec<&str> = r.palette().iter().map(|k| k.as_str()).collect();
        v.sort();
        v
    }

    #[test]
    fn corners() {
        let r = rasterize(&fam(), &ParamBox::unit(2), 0, &TauConfig::default()).unwrap();
        assert_eq!(r.dims(), &[2, 2]);
        let ks: Vec<&str> = r.palette().iter().map(|k| k.as_str()).collect();
        assert_eq!(ks, ["1", "x*y", "x+y", "x^2*y+x*y^2"]);
    }

    #[test]
    fn five_ideals() {
        let r = rasterize(&fam(), &ParamBox::unit(2), 2, &TauConfig::default()).unwrap();
        assert_eq!(keys(&r), ["1", "x*y", "x+y", "x;y", "x^2*y+x*y^2"]);
        // the top edge c_2 = 1, c_1 < 1 is (xy)
        let xy = r.palette().iter().position(|k| k.as_str() == "x*y").unwrap() as u32;
        for i in 0..9 {
            assert_eq!(r.cell(&[i, 9]), Some(xy));
        }
    }

    #[test]
    fn consistent_with_chi_and_membership() {
        let f = fam();
        let cfg = TauConfig::default();
        let r = rasterize(&f, &ParamBox::unit(2), 1, &cfg).unwrap();
        for (pi, gb) in r.palette_gb().iter().enumerate() {
            let oracle = ChiOracle::from_gb(&f, gb.clone(), &cfg);
            let others = r.strictly_below(pi);
            for (idx, cell) in r.iter_cells() {
                let c = ParamPoint::grid(&idx, 3, 1);
                let inside = r.palette_gb()[cell as usize].to_ideal();
                let expect = u8::from(!gb.contains_ideal(&inside));
                assert_eq!(oracle.eval(&c).unwrap(), expect);
                let member = region_membership(&f, &c, &others, &gb.to_ideal(), &cfg).unwrap();
                assert_eq!(member, cell as usize == pi);
            }
        }
    }
}

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::testideal::{format_rational, ParamPoint, Rational};

/// The box `[0, l_1] × ... × [0, l_n]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamBox {
    upper: Vec<Rational>,
}

impl ParamBox {
    pub fn new(upper: Vec<Rational>) -> Result<Self> {
        if upper.is_empty() {
            return Err(Error::InvalidArgument("box needs at least one side".into()));
        }
        if upper.iter().any(|l| !l.is_positive()) {
            return Err(Error::InvalidArgument("box sides must be positive".into()));
        }
        Ok(ParamBox { upper })
    }

    pub fn unit(n: usize) -> Self {
        ParamBox {
            upper: vec![Rational::one(); n],
        }
    }

    /// Comma-separated side lengths, e.g. `1,1`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(ParamPoint::parse(s)?.coords().to_vec())
    }

    pub fn upper(&self) -> &[Rational] {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.upper.len()
    }

    /// Points per axis on the grid of step `1/p^k`; the corners must lie on it.
    pub fn grid_dims(&self, p: u64, k: u32) -> Result<Vec<u64>> {
        let q = Rational::from_integer(BigInt::from(p).pow(k));
        self.upper
            .iter()
            .map(|l| {
                let n = l * &q;
                if !n.is_integer() {
                    return Err(Error::Resolution(format!(
                        "box side {} is not a multiple of 1/{p}^{k}",
                        format_rational(l)
                    )));
                }
                n.to_integer()
                    .to_u64()
                    .and_then(|n| n.checked_add(1))
                    .ok_or_else(|| Error::ResourceLimit("grid too large".into()))
            })
            .collect()
    }
}

pub(crate) fn cell_count(dims: &[u64]) -> Result<usize> {
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(usize::try_from(d).ok()?))
        .filter(|&n| n <= MAX_CELLS)
        .ok_or_else(|| Error::ResourceLimit(format!("grid has more than {MAX_CELLS} cells")))
}

const MAX_CELLS: usize = 1 << 26;

/// All index vectors of the grid in row-major order (last axis fastest).
pub(crate) fn grid_indices(dims: &[u64]) -> Result<Vec<Vec<u64>>> {
    let total = cell_count(dims)?;
    let mut out = Vec::with_capacity(total);
    let mut idx = vec![0u64; dims.len()];
    if total == 0 {
        return Ok(out);
    }
    loop {
        out.push(idx.clone());
        let mut axis = dims.len();
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] < dims[axis] {
                break;
            }
            idx[axis] = 0;
        }
    }
}

pub(crate) fn linear_index(dims: &[u64], idx: &[u64]) -> Option<usize> {
    let mut lin = 0u64;
    for (&d, &i) in dims.iter().zip(idx) {
        if i >= d {
            return None;
        }
        lin = lin * d + i;
    }
    Some(lin as usize)
}

/// Values of a function `R^n_{>=0} -> Q` on the grid of step `1/p^k` over a box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridFunction {
    bx: ParamBox,
    p: u64,
    k: u32,
    dims: Vec<u64>,
    values: Vec<Rational>,
}

impl GridFunction {
    pub fn new(bx: ParamBox, p: u64, k: u32, values: Vec<Rational>) -> Result<Self> {
        let dims = bx.grid_dims(p, k)?;
        if cell_count(&dims)? != values.len() {
            return Err(Error::Resolution(format!(
                "{} values for a grid of {} points",
                values.len(),
                cell_count(&dims)?
            )));
        }
        Ok(GridFunction { bx, p, k, dims, values })
    }

    /// `f` evaluated at every grid point.
    pub fn tabulate(bx: ParamBox, p: u64, k: u32, f: impl Fn(&[u64]) -> Rational) -> Result<Self> {
        let dims = bx.grid_dims(p, k)?;
        let values = grid_indices(&dims)?.iter().map(|i| f(i)).collect();
        Ok(GridFunction { bx, p, k, dims, values })
    }

    pub fn constant(bx: ParamBox, p: u64, k: u32, value: Rational) -> Result<Self> {
        Self::tabulate(bx, p, k, |_| value.clone())
    }

    pub fn bx(&self) -> &ParamBox {
        &self.bx
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn level(&self) -> u32 {
        self.k
    }

    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, idx: &[u64]) -> Option<&Rational> {
        linear_index(&self.dims, idx).map(|i| &self.values[i])
    }

    /// Restriction to the coarser grid of level `k' <= k`.
    pub fn coarsen(&self, k: u32) -> Result<GridFunction> {
        if k > self.k {
            return Err(Error::Resolution(format!("cannot refine level {} to {k}", self.k)));
        }
        let step = self.p.pow(self.k - k);
        let dims = self.bx.grid_dims(self.p, k)?;
        let values = grid_indices(&dims)?
            .iter()
            .map(|i| {
                let fine: Vec<u64> = i.iter().map(|&x| x * step).collect();
                self.get(&fine).cloned().unwrap()
            })
            .collect();
        Ok(GridFunction {
            bx: self.bx.clone(),
            p: self.p,
            k,
            dims,
            values,
        })
    }

    /// SHA-256 of the grid shape and the exact values.
    pub fn fingerprint(&self) -> [u8; 32] {
        let mut h = Sha256::new();
        let mut buf = String::new();
        write!(buf, "{}|{}|", self.p, self.k).unwrap();
        for d in &self.dims {
            write!(buf, "{d},").unwrap();
        }
        h.update(buf.as_bytes());
        for v in &self.values {
            if v.is_zero() {
                h.update(b"0;");
            } else {
                h.update(format_rational(v).as_bytes());
                h.update(b";");
            }
        }
        h.finalize().into()
    }

    pub fn fingerprint_hex(&self) -> String {
        self.fingerprint().iter().map(|b| format!("{b:02x}")).collect()
    }
}

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::Ring;
use crate::groebner::ReducedGB;
use crate::region::RegionRaster;

#[derive(Debug, Serialize)]
pub struct RingJson {
    pub p: u64,
    pub vars: Vec<String>,
}

impl RingJson {
    pub fn new(ring: &Ring) -> Self {
        RingJson {
            p: ring.p(),
            vars: ring.vars().to_vec(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct IdealJson {
    pub ring: RingJson,
    pub gens: Vec<String>,
}

impl IdealJson {
    pub fn from_gb(gb: &ReducedGB) -> Self {
        let gens = if gb.is_zero() {
            vec!["0".to_string()]
        } else {
            gb.basis().iter().map(|g| g.to_string()).collect()
        };
        IdealJson {
            ring: RingJson::new(gb.ring()),
            gens,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct LegendEntry {
    pub index: usize,
    pub key: String,
    pub color: [u8; 3],
}

#[derive(Debug, Serialize)]
pub struct Legend {
    pub palette: Vec<LegendEntry>,
}

const BASE_COLORS: [[u8; 3]; 16] = [
    [255, 255, 255],
    [31, 119, 180],
    [255, 127, 14],
    [44, 160, 44],
    [214, 39, 40],
    [148, 103, 189],
    [140, 86, 75],
    [227, 119, 194],
    [127, 127, 127],
    [188, 189, 34],
    [23, 190, 207],
    [0, 0, 0],
    [174, 199, 232],
    [255, 187, 120],
    [152, 223, 138],
    [255, 152, 150],
];

/// Palette color; indices past the table repeat it in darker shades.
pub fn palette_color(index: usize) -> [u8; 3] {
    let base = BASE_COLORS[index % BASE_COLORS.len()];
    let shade = (index / BASE_COLORS.len()) as u32;
    base.map(|c| (u32::from(c) * 4 / (4 + shade)) as u8)
}

pub fn legend(raster: &RegionRaster) -> Legend {
    Legend {
        palette: raster
            .palette()
            .iter()
            .enumerate()
            .map(|(index, key)| LegendEntry {
                index,
                key: key.to_string(),
                color: palette_color(index),
            })
            .collect(),
    }
}

/// ASCII PPM, one pixel per cell; `c_1` runs left to right and `c_2` bottom to top.
pub fn ppm(raster: &RegionRaster) -> Option<String> {
    let dims = raster.dims();
    let (w, h) = match *dims {
        [w] => (w, 1),
        [w, h] => (w, h),
        _ => return None,
    };
    let mut out = format!("P3\n{w} {h}\n255\n");
    for row in (0..h).rev() {
        let pixels: Vec<String> = (0..w)
            .map(|i| {
                let idx = if dims.len() == 1 { vec![i] } else { vec![i, row] };
                let [r, g, b] = palette_color(raster.cell(&idx).unwrap() as usize);
                format!("{r} {g} {b}")
            })
            .collect();
        out.push_str(&pixels.join(" "));
        out.push('\n');
    }
    Some(out)
}

fn axis_names(n: usize) -> Vec<String> {
    const NAMES: [&str; 4] = ["i", "j", "k", "l"];
    if n <= NAMES.len() {
        NAMES[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|a| format!("i{a}")).collect()
    }
}

/// `i,j,...,ideal_key`, one row per cell in row-major order.
pub fn csv(raster: &RegionRaster) -> String {
    let mut out = axis_names(raster.dims().len()).join(",");
    out.push_str(",ideal_key\n");
    for (idx, cell) in raster.iter_cells() {
        for i in &idx {
            write!(out, "{i},").unwrap();
        }
        out.push_str(raster.palette()[cell as usize].as_str());
        out.push('\n');
    }
    out
}

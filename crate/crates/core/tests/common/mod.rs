#![allow(dead_code)]

pub mod oracle;
pub mod props;

use fractau::algebra::{IdealGens, Ring};
use fractau::testideal::{IdealFamily, ParamPoint, TauConfig};

pub fn staircase_ring() -> Ring {
    Ring::new(3, &["x", "y"]).unwrap()
}

pub fn staircase() -> IdealFamily {
    IdealFamily::parse(&staircase_ring(), &["x+y", "x*y"]).unwrap()
}

pub fn ideal(s: &str, ring: &Ring) -> IdealGens {
    IdealGens::parse(s, ring).unwrap()
}

pub fn pt(s: &str) -> ParamPoint {
    ParamPoint::parse(s).unwrap()
}

/// No Skoda peeling, no degree assertion.
pub fn plain_config() -> TauConfig {
    TauConfig {
        skoda: false,
        degree_check: false,
        ..TauConfig::default()
    }
}

//! Gröbner bases and the ideal-theoretic decisions built on them:
//! membership, containment, equality, canonical keys, intersections and
//! colon ideals.

mod buchberger;
mod colon;

use std::fmt;

pub use buchberger::{buchberger, buchberger_with, normal_form, GbConfig, ReducedGB};
pub use colon::{ideal_colon, ideal_colon_with, ideal_intersection, ideal_intersection_with, poly_colon};

use crate::algebra::{IdealGens, Polynomial};
use crate::error::Result;

/// Canonical identity of an ideal: the reduced basis, each generator printed
/// in descending term order, generators joined by `;` (for example `x+y;y^2`).
/// `1` is the unit ideal and `0` the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IdealKey(String);

impl IdealKey {
    pub fn from_gb(gb: &ReducedGB) -> Self {
        if gb.is_zero() {
            return IdealKey("0".to_string());
        }
        let parts: Vec<String> = gb.basis().iter().map(|g| g.to_compact_string()).collect();
        IdealKey(parts.join(";"))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    pub fn is_unit(&self) -> bool {
        self.0 == "1"
    }
}

impl fmt::Display for IdealKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn ideal_key(i: &IdealGens) -> Result<IdealKey> {
    Ok(IdealKey::from_gb(&buchberger(i)?))
}

pub fn ideal_member(f: &Polynomial, i: &IdealGens) -> Result<bool> {
    Ok(buchberger(i)?.contains(f))
}

/// `J ⊆ I`.
pub fn ideal_contains(i: &IdealGens, j: &IdealGens) -> Result<bool> {
    assert!(i.ring() == j.ring(), "ring mismatch");
    if j.is_zero() {
        return Ok(true);
    }
    Ok(buchberger(i)?.contains_ideal(j))
}

pub fn ideal_equal(i: &IdealGens, j: &IdealGens) -> Result<bool> {
    assert!(i.ring() == j.ring(), "ring mismatch");
    Ok(buchberger(i)? == buchberger(j)?)
}

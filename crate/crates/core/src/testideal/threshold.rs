use rayon::prelude::*;

use super::rational::{rat, rat_int, ParamPoint, Rational};
use super::tau::{tau_mixed, IdealFamily, TauConfig};
use crate::algebra::IdealGens;
use crate::error::{Error, Result};
use crate::frobenius::{root_of_product_power_within, FrobLevel};
use crate::groebner::{buchberger, ideal_key, IdealKey, ReducedGB};

/// Default search cap for [`v_number`]: `64 q + 64`.
pub fn default_v_cap(q: u64) -> u64 {
    q.saturating_mul(64).saturating_add(64)
}

/// `a^{m r} ⊆ I^[q]`, decided as `(a^{m r})^[1/q] ⊆ I`.
fn power_in_bracket(fam: &IdealFamily, r: &[u64], m: u64, gb_i: &ReducedGB, level: FrobLevel) -> Result<bool> {
    let exps = r
        .iter()
        .map(|&ri| ri.checked_mul(m).ok_or(Error::ExponentOverflow))
        .collect::<Result<Vec<_>>>()?;
    root_of_product_power_within(fam.ideals(), &exps, level, gb_i)
}

fn check_direction(fam: &IdealFamily, r: &[u64]) -> Result<()> {
    if r.len() != fam.len() {
        return Err(Error::InvalidArgument("direction length differs from family size".into()));
    }
    if r.iter().all(|&x| x == 0) {
        return Err(Error::InvalidArgument("direction must be nonzero".into()));
    }
    Ok(())
}

/// `max { m >= 0 : a^{m r} ⊄ I^[p^e] }`.
pub fn v_number(fam: &IdealFamily, r: &[u64], i: &IdealGens, e: u32) -> Result<u64> {
    let level = FrobLevel::new(fam.ring().p(), e)?;
    v_number_with(fam, r, i, e, default_v_cap(level.q()))
}

/// [`v_number`] with an explicit search cap.
pub fn v_number_with(fam: &IdealFamily, r: &[u64], i: &IdealGens, e: u32, cap: u64) -> Result<u64> {
    check_direction(fam, r)?;
    if i.ring() != fam.ring() {
        return Err(Error::RingMismatch);
    }
    let gb = buchberger(i)?;
    if gb.is_unit() {
        return Err(Error::ZeroRegion);
    }
    let level = FrobLevel::new(fam.ring().p(), e)?;
    let inside = |m: u64| power_in_bracket(fam, r, m, &gb, level);

    // containment is monotone in m; find the first m inside
    let (mut lo, mut hi) = (0u64, 1u64);
    loop {
        if hi > cap {
            if inside(cap)? {
                hi = cap;
                break;
            }
            return Err(Error::Unbounded { cap });
        }
        if inside(hi)? {
            break;
        }
        lo = hi;
        hi *= 2;
    }
    // lo outside (or 0), hi inside
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if inside(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi - 1)
}

/// The sequence `V_e / p^e` for `e = 1..=e_max` and bounds on its limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FThreshold {
    pub terms: Vec<Rational>,
    pub lower: Rational,
    /// `l s`, where `a^{l r} ⊆ I` and `s` counts the stored generators of `a^r`.
    pub upper: Rational,
}

pub fn f_threshold(fam: &IdealFamily, r: &[u64], i: &IdealGens, e_max: u32) -> Result<FThreshold> {
    check_direction(fam, r)?;
    if e_max == 0 {
        return Err(Error::InvalidArgument("e_max must be at least 1".into()));
    }
    let p = fam.ring().p();
    let terms = (1..=e_max)
        .map(|e| {
            let v = v_number(fam, r, i, e)?;
            let q = FrobLevel::new(p, e)?.q();
            Ok(rat_int(v) / rat_int(q))
        })
        .collect::<Result<Vec<_>>>()?;

    let ar = fam.power(r)?;
    let gb = buchberger(i)?;
    let level0 = FrobLevel::new(p, 0)?;
    let cap = default_v_cap(p);
    let mut l = 1u64;
    while !power_in_bracket(fam, r, l, &gb, level0)? {
        l += 1;
        if l > cap {
            return Err(Error::Unbounded { cap });
        }
    }
    Ok(FThreshold {
        lower: terms.last().cloned().unwrap(),
        upper: rat_int(l) * rat_int(ar.len() as u64),
        terms,
    })
}

/// A change of `τ(J^λ)` detected between two consecutive grid values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jump {
    /// The jump lies in `(lo, hi]`.
    pub lo: Rational,
    pub hi: Rational,
    pub before: IdealKey,
    pub after: IdealKey,
}

/// Scan `τ(J^{m/p^k})` for `J = a^r` and `m = 0..=⌈bound p^k⌉`.
pub fn jumping_scan(fam: &IdealFamily, r: &[u64], k: u32, bound: &Rational, cfg: &TauConfig) -> Result<Vec<Jump>> {
    check_direction(fam, r)?;
    if *bound <= rat(0, 1) {
        return Ok(Vec::new());
    }
    let ring = fam.ring();
    let q = FrobLevel::new(ring.p(), k)?.q();
    let top = super::rational::ceil_scaled(bound, ring.p(), k)?;
    let single = IdealFamily::new(ring, vec![fam.power(r)?])?;
    let keys = (0..=top)
        .into_par_iter()
        .map(|m| {
            let c = ParamPoint::grid(&[m], ring.p(), k);
            ideal_key(&tau_mixed(&single, &c, cfg)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let qr = rat_int(q);
    Ok(keys
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] != w[1])
        .map(|(m, w)| Jump {
            lo: rat_int(m as u64) / &qr,
            hi: rat_int(m as u64 + 1) / &qr,
            before: w[0].clone(),
            after: w[1].clone(),
        })
        .collect())
}

use super::buchberger::{buchberger_with, GbConfig};
use crate::algebra::{IdealGens, Polynomial};
use crate::error::{Error, Result};

const AUX: &str = "__elim_t";

/// `I ∩ J` as the `t`-free part of `t·I + (1 - t)·J` under an order that
/// eliminates `t`.
pub fn ideal_intersection_with(i: &IdealGens, j: &IdealGens, cfg: &GbConfig) -> Result<IdealGens> {
    let ring = i.ring();
    assert!(ring == j.ring(), "ring mismatch");
    if i.is_zero() || j.is_zero() {
        return Ok(IdealGens::zero(ring));
    }
    let big = ring.with_eliminated(&[AUX])?;
    let t = Polynomial::var(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;
    let mut gens = Vec::with_capacity(i.len() + j.len());
    for f in i.gens() {
        gens.push(&t * &f.embed_front(&big, 1));
    }
    for g in j.gens() {
        gens.push(&one_minus_t * &g.embed_front(&big, 1));
    }
    let gb = buchberger_with(&IdealGens::new(&big, gens), cfg)?;
    let kept = gb.basis().iter().filter_map(|g| g.restrict_front(ring, 1));
    Ok(IdealGens::new(ring, kept))
}

pub fn ideal_intersection(i: &IdealGens, j: &IdealGens) -> Result<IdealGens> {
    ideal_intersection_with(i, j, &GbConfig::default())
}

/// `(I : f)`: generators of `I ∩ (f)` divided exactly by `f`.
pub fn poly_colon(i: &IdealGens, f: &Polynomial, cfg: &GbConfig) -> Result<IdealGens> {
    let ring = i.ring();
    if f.is_zero() {
        return Err(Error::Precondition("colon by the zero polynomial".into()));
    }
    if f.is_unit() {
        return Ok(i.clone());
    }
    let meet = ideal_intersection_with(i, &IdealGens::principal(f.clone()), cfg)?;
    let mut quotients = Vec::with_capacity(meet.len());
    for g in meet.gens() {
        quotients.push(g.div_exact(f)?);
    }
    Ok(IdealGens::new(ring, quotients))
}

/// `(I : J) = ∩_g (I : g)` over the generators `g` of `J`; returned as a
/// reduced Gröbner basis.
pub fn ideal_colon_with(i: &IdealGens, j: &IdealGens, cfg: &GbConfig) -> Result<IdealGens> {
    assert!(i.ring() == j.ring(), "ring mismatch");
    if j.is_zero() {
        return Err(Error::Precondition("colon by the zero ideal".into()));
    }
    let mut acc: Option<IdealGens> = None;
    for g in j.gens() {
        let c = poly_colon(i, g, cfg)?;
        acc = Some(match acc {
            None => c,
            Some(prev) => ideal_intersection_with(&prev, &c, cfg)?,
        });
    }
    let acc = acc.expect("nonzero ideal has a generator");
    Ok(buchberger_with(&acc, cfg)?.to_ideal())
}

pub fn ideal_colon(i: &IdealGens, j: &IdealGens) -> Result<IdealGens> {
    ideal_colon_with(i, j, &GbConfig::default())
}

//! Frobenius powers `I^[q]` and Frobenius roots `b^[1/q]` in `F_p[x]`.
//!
//! The polynomial ring is free over its subring of `q`-th powers with basis
//! `{x^α : 0 <= α_i < q}`. Writing `h = Σ_α a_α^q x^α`, the root of the
//! principal ideal `(h)` is generated by the `a_α`, and the root of an ideal
//! is generated by the components of its generators. Over `F_p` taking
//! `q`-th roots of coefficients is the identity, so `a_α` is read off by
//! bucketing the terms of `h` by `exponent mod q`.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{ideal_power, ideal_product, linear_basis, ExpVec, IdealGens, Polynomial, Ring};
use crate::error::{Error, Result};
use crate::groebner::{normal_form, ReducedGB};

/// A Frobenius level `e` together with `q = p^e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FrobLevel {
    e: u32,
    q: u64,
    p: u64,
}

impl FrobLevel {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        let q = p.checked_pow(e).ok_or(Error::ExponentOverflow)?;
        Ok(FrobLevel { e, q, p })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn next(&self) -> Result<Self> {
        Self::new(self.p, self.e + 1)
    }
}

/// How [`root_of_power`] and [`root_of_product_power`] evaluate a root of a
/// power. All strategies return generators of the same ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RootStrategy {
    /// Peel one base-p digit per step using `(g·u^p)^[1/p] = u·g^[1/p]`.
    /// Intermediate polynomials stay near the degree of the answer.
    #[default]
    Descent,
    /// Expand `Π_j (f^{c_j})^{p^j}` for the base-p digits `c_j` of the
    /// exponent (the `p^j`-th powers are exponent scalings) and bucket.
    Factored,
    /// Expand the full power and bucket; the reference path.
    Naive,
}

/// `I^[q]`: the `q`-th powers of the generators.
pub fn bracket_power(i: &IdealGens, level: FrobLevel) -> Result<IdealGens> {
    let mut gens = Vec::with_capacity(i.len());
    for g in i.gens() {
        gens.push(g.frobenius(level.q)?);
    }
    Ok(IdealGens::new(i.ring(), gens))
}

/// Components of `h` in the basis `{x^α : 0 <= α_i < q}`, listed by residue
/// class in descending monomial order.
pub fn poly_components(h: &Polynomial, q: u64) -> Vec<Polynomial> {
    let ring = h.ring();
    if q == 1 {
        return if h.is_zero() { Vec::new() } else { vec![h.clone()] };
    }
    let mut classes: HashMap<ExpVec, Vec<(ExpVec, u64)>> = HashMap::new();
    for (e, c) in h.terms() {
        let (quot, rem) = e.div_rem_scalar(q);
        classes.entry(rem).or_default().push((quot, *c));
    }
    let mut keyed: Vec<(ExpVec, Vec<(ExpVec, u64)>)> = classes.into_iter().collect();
    keyed.sort_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
    keyed
        .into_iter()
        // distinct terms in one class have distinct quotients
        .map(|(_, terms)| Polynomial::from_terms(ring, terms))
        .collect()
}

/// `(h)^[1/q]`.
pub fn poly_bracket_root(h: &Polynomial, level: FrobLevel) -> IdealGens {
    IdealGens::new(h.ring(), poly_components(h, level.q))
}

/// `b^[1/q]`: union of the components of all generators.
pub fn ideal_bracket_root(b: &IdealGens, level: FrobLevel) -> IdealGens {
    let gens = b.gens().iter().flat_map(|h| poly_components(h, level.q));
    IdealGens::new(b.ring(), gens)
}

/// `(f^m)^[1/q]` with the default strategy.
pub fn root_of_power(f: &Polynomial, m: u64, level: FrobLevel) -> Result<IdealGens> {
    root_of_power_with(f, m, level, RootStrategy::default())
}

pub fn root_of_power_with(f: &Polynomial, m: u64, level: FrobLevel, strategy: RootStrategy) -> Result<IdealGens> {
    if f.is_zero() {
        return Err(Error::Precondition("root of a power of the zero polynomial".into()));
    }
    let ring = f.ring();
    match strategy {
        RootStrategy::Naive => Ok(poly_bracket_root(&f.pow(m)?, level)),
        RootStrategy::Factored => {
            let p = ring.p();
            // f^m = f^{m mod q} * (f^{m div q})^q, and (g·u^q)^[1/q] = u·g^[1/q]
            let (low, high) = (m % level.q, m / level.q);
            let mut prod = Polynomial::one(ring);
            let mut rest = low;
            let mut scale = 1u64;
            while rest > 0 {
                let digit = rest % p;
                if digit > 0 {
                    prod = prod.checked_mul(&f.pow_small(digit)?.frobenius(scale)?)?;
                }
                rest /= p;
                if rest > 0 {
                    scale *= p;
                }
            }
            let outer = f.pow(high)?;
            let comps = poly_components(&prod, level.q);
            let mut gens = Vec::with_capacity(comps.len());
            for c in comps {
                gens.push(c.checked_mul(&outer)?);
            }
            Ok(IdealGens::new(ring, gens))
        }
        RootStrategy::Descent => {
            root_of_product_power(&[IdealGens::principal(f.clone())], &[m], level, RootStrategy::Descent)
        }
    }
}

/// `(a_1^{d_1} ··· a_n^{d_n})^[1/q]`.
///
/// With [`RootStrategy::Descent`] the root is taken one factor of `p` at a
/// time. The running ideal has the shape `Σ_k a^k · B_k` with small
/// polynomial sets `B_k`: a generator `g^β · b` of `a^k · B_k` splits as
/// `g^{β_0} b · (g^{β'})^p` with `β_0 ∈ [0, p)`, so its `p`-th root is
/// `g^{β'} · (g^{β_0} b)^[1/p]` and the new state is indexed by
/// `k' = (k - |β_0|) / p`. The sets `B_k` are kept as `F_p`-linear bases.
pub fn root_of_product_power(
    ideals: &[IdealGens],
    exps: &[u64],
    level: FrobLevel,
    strategy: RootStrategy,
) -> Result<IdealGens> {
    assert_eq!(ideals.len(), exps.len(), "one exponent per ideal");
    let ring = match ideals.first() {
        Some(i) => i.ring().clone(),
        None => return Err(Error::InvalidArgument("empty ideal family".into())),
    };
    if ideals.iter().zip(exps).any(|(i, &d)| i.is_zero() && d > 0) {
        return Ok(IdealGens::zero(&ring));
    }
    match strategy {
        RootStrategy::Naive | RootStrategy::Factored => {
            let mut prod = IdealGens::unit(&ring);
            for (i, &d) in ideals.iter().zip(exps) {
                prod = ideal_product(&prod, &ideal_power(i, d)?);
            }
            Ok(ideal_bracket_root(&prod, level))
        }
        RootStrategy::Descent => descent(&ring, ideals, exps, level),
    }
}

type DescentState = BTreeMap<Vec<u64>, Vec<Polynomial>>;

fn descent(ring: &Ring, ideals: &[IdealGens], exps: &[u64], level: FrobLevel) -> Result<IdealGens> {
    let (active, state) = descent_state(ring, ideals, exps, level)?;
    let mut out = Vec::new();
    for (k, basis) in state {
        let factor = family_power(ring, ideals, &active, &k)?;
        for f in factor.gens() {
            for b in &basis {
                out.push(f.checked_mul(b)?);
            }
        }
    }
    Ok(IdealGens::new(ring, linear_basis(ring, out)))
}

fn family_power(ring: &Ring, ideals: &[IdealGens], active: &[usize], k: &[u64]) -> Result<IdealGens> {
    let mut factor = IdealGens::unit(ring);
    for (&ki, &i) in k.iter().zip(active) {
        if ki > 0 {
            factor = ideal_product(&factor, &ideal_power(&ideals[i], ki)?);
        }
    }
    Ok(factor)
}

/// `(a_1^{d_1} ··· a_n^{d_n})^[1/q] ⊆ I`, decided without assembling the root.
pub fn root_of_product_power_within(
    ideals: &[IdealGens],
    exps: &[u64],
    level: FrobLevel,
    gb: &ReducedGB,
) -> Result<bool> {
    assert_eq!(ideals.len(), exps.len(), "one exponent per ideal");
    let ring = gb.ring();
    if ideals.iter().any(|i| i.ring() != ring) {
        return Err(Error::RingMismatch);
    }
    if ideals.iter().zip(exps).any(|(i, &d)| i.is_zero() && d > 0) {
        return Ok(true);
    }
    let (active, state) = descent_state(ring, ideals, exps, level)?;
    let gens: Vec<Vec<Polynomial>> = active
        .iter()
        .map(|&i| ideals[i].gens().iter().map(|g| normal_form(g, gb)).filter(|g| !g.is_zero()).collect())
        .collect();
    let mut powers = PowersMod::new(ring, &gens, gb);
    for (k, basis) in state {
        for f in powers.get(&k)? {
            for b in &basis {
                if !gb.contains(&f.checked_mul(b)?) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `F_p`-bases of `a^k` modulo `I`, built one generator factor at a time
/// along the path `0 -> k` that raises coordinates in order, so states
/// sharing a prefix share work.
struct PowersMod<'a> {
    ring: &'a Ring,
    gens: &'a [Vec<Polynomial>],
    gb: &'a ReducedGB,
    memo: HashMap<Vec<u64>, Vec<Polynomial>>,
}

impl<'a> PowersMod<'a> {
    fn new(ring: &'a Ring, gens: &'a [Vec<Polynomial>], gb: &'a ReducedGB) -> Self {
        let one = normal_form(&Polynomial::one(ring), gb);
        let start = if one.is_zero() { vec![] } else { vec![one] };
        let mut memo = HashMap::new();
        memo.insert(vec![0; gens.len()], start);
        PowersMod { ring, gens, gb, memo }
    }

    fn get(&mut self, k: &[u64]) -> Result<&[Polynomial]> {
        if !self.memo.contains_key(k) {
            let mut at = vec![0u64; k.len()];
            let mut cur = self.memo[&at].clone();
            for i in 0..k.len() {
                for _ in 0..k[i] {
                    at[i] += 1;
                    if let Some(known) = self.memo.get(&at) {
                        cur = known.clone();
                        continue;
                    }
                    let mut prods = Vec::with_capacity(cur.len() * self.gens[i].len());
                    for f in &cur {
                        for g in &self.gens[i] {
                            let h = normal_form(&f.checked_mul(g)?, self.gb);
                            if !h.is_zero() {
                                prods.push(h);
                            }
                        }
                    }
                    cur = linear_basis(self.ring, prods);
                    self.memo.insert(at.clone(), cur.clone());
                }
            }
        }
        Ok(&self.memo[k])
    }
}

fn descent_state(ring: &Ring, ideals: &[IdealGens], exps: &[u64], level: FrobLevel) -> Result<(Vec<usize>, DescentState)> {
    let p = ring.p();
    // zero exponents contribute nothing and their (possibly zero) ideals drop out
    let active: Vec<usize> = (0..ideals.len()).filter(|&i| exps[i] > 0).collect();
    let gens: Vec<&[Polynomial]> = active.iter().map(|&i| ideals[i].gens()).collect();
    // g^a for a < p
    let mut small_powers: Vec<Vec<Vec<Polynomial>>> = Vec::with_capacity(gens.len());
    for gs in &gens {
        let mut per_gen = Vec::with_capacity(gs.len());
        for g in gs.iter() {
            let mut row = vec![Polynomial::one(ring)];
            for _ in 1..p.min(level.q) {
                let next = row.last().unwrap().checked_mul(g)?;
                row.push(next);
            }
            per_gen.push(row);
        }
        small_powers.push(per_gen);
    }

    let mut state: BTreeMap<Vec<u64>, Vec<Polynomial>> = BTreeMap::new();
    state.insert(active.iter().map(|&i| exps[i]).collect(), vec![Polynomial::one(ring)]);

    for _ in 0..level.e {
        let mut next: BTreeMap<Vec<u64>, Vec<Polynomial>> = BTreeMap::new();
        let mut u_cache: HashMap<Vec<Vec<u64>>, Polynomial> = HashMap::new();
        for (k, basis) in &state {
            let choices: Vec<Vec<Vec<u64>>> = k
                .iter()
                .zip(&gens)
                .map(|(&ki, gs)| digit_choices(gs.len(), ki, p))
                .collect();
            let mut pick = vec![0usize; choices.len()];
            'combos: loop {
                let betas: Vec<Vec<u64>> = pick.iter().zip(&choices).map(|(&j, c)| c[j].clone()).collect();
                let k_next: Vec<u64> = k
                    .iter()
                    .zip(&betas)
                    .map(|(&ki, b)| (ki - b.iter().sum::<u64>()) / p)
                    .collect();
                let u = match u_cache.get(&betas) {
                    Some(u) => u.clone(),
                    None => {
                        let mut u = Polynomial::one(ring);
                        for (i, beta) in betas.iter().enumerate() {
                            for (j, &a) in beta.iter().enumerate() {
                                if a > 0 {
                                    u = u.checked_mul(&small_powers[i][j][a as usize])?;
                                }
                            }
                        }
                        u_cache.insert(betas.clone(), u.clone());
                        u
                    }
                };
                let slot = next.entry(k_next).or_default();
                for b in basis {
                    slot.extend(poly_components(&b.checked_mul(&u)?, p));
                }
                // advance the mixed-radix counter over the choice lists
                for (idx, c) in pick.iter_mut().enumerate() {
                    *c += 1;
                    if *c < choices[idx].len() {
                        continue 'combos;
                    }
                    *c = 0;
                }
                break;
            }
        }
        state = next
            .into_iter()
            .map(|(k, polys)| (k, linear_basis(ring, polys)))
            .filter(|(_, b)| !b.is_empty())
            .collect();
    }

    Ok((active, state))
}

/// Vectors `β ∈ [0, p)^m` with `|β| <= k` and `|β| ≡ k (mod p)`.
fn digit_choices(m: usize, k: u64, p: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0u64; m];
    fn rec(at: usize, sum: u64, cur: &mut Vec<u64>, k: u64, p: u64, out: &mut Vec<Vec<u64>>) {
        if at == cur.len() {
            if sum <= k && (k - sum).is_multiple_of(p) {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..p {
            if sum + a > k {
                break;
            }
            cur[at] = a;
            rec(at + 1, sum + a, cur, k, p, out);
        }
        cur[at] = 0;
    }
    rec(0, 0, &mut cur, k, p, &mut out);
    out
}

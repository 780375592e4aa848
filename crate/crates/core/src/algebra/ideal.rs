use std::collections::HashSet;
use std::fmt;

use super::parse::parse_polynomial;
use super::poly::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};

/// An ideal given by a list of generators.
///
/// Zero generators are dropped and exact duplicates removed; nothing else is
/// normalized. The empty list is the zero ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IdealGens {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl IdealGens {
    pub fn new(ring: &Ring, gens: impl IntoIterator<Item = Polynomial>) -> Self {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for g in gens {
            assert!(g.ring() == ring, "generator from a different ring");
            if g.is_zero() {
                continue;
            }
            if seen.insert(g.clone()) {
                out.push(g);
            }
        }
        IdealGens {
            ring: ring.clone(),
            gens: out,
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        IdealGens {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &Ring) -> Self {
        IdealGens {
            ring: ring.clone(),
            gens: vec![Polynomial::one(ring)],
        }
    }

    pub fn principal(f: Polynomial) -> Self {
        let ring = f.ring().clone();
        Self::new(&ring, [f])
    }

    /// Parses a comma-separated generator list such as `"x, y^2 + x"`.
    pub fn parse(text: &str, ring: &Ring) -> Result<Self> {
        let mut gens = Vec::new();
        let mut offset = 0;
        for part in text.split(',') {
            let g = parse_polynomial(part, ring).map_err(|e| shift_position(e, offset))?;
            gens.push(g);
            offset += part.len() + 1;
        }
        Ok(Self::new(ring, gens))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn into_gens(self) -> Vec<Polynomial> {
        self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// Largest generator degree, 0 for the zero ideal.
    pub fn max_degree(&self) -> u64 {
        self.gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0)
    }

    pub fn product(&self, other: &IdealGens) -> IdealGens {
        ideal_product(self, other)
    }

    pub fn power(&self, m: u64) -> Result<IdealGens> {
        ideal_power(self, m)
    }
}

fn shift_position(e: Error, offset: usize) -> Error {
    match e {
        Error::Syntax { pos, msg } => Error::Syntax { pos: pos + offset, msg },
        Error::UnknownVariable { name, pos } => Error::UnknownVariable {
            name,
            pos: pos + offset,
        },
        other => other,
    }
}

impl fmt::Display for IdealGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for IdealGens {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealGens{self}")
    }
}

/// Pairwise products of generators.
pub fn ideal_product(i: &IdealGens, j: &IdealGens) -> IdealGens {
    assert!(i.ring == j.ring, "ideals from different rings");
    let mut out = Vec::with_capacity(i.len() * j.len());
    for f in &i.gens {
        for g in &j.gens {
            out.push(f * g);
        }
    }
    IdealGens::new(&i.ring, out)
}

/// Generators of `I^m`: one product per multiset of `m` generators.
///
/// Each product is assembled from cached generator powers (themselves
/// computed with [`Polynomial::pow`]), which avoids the quadratic blow-up
/// of repeatedly squaring generator lists.
pub fn ideal_power(i: &IdealGens, m: u64) -> Result<IdealGens> {
    if m == 0 {
        return Ok(IdealGens::unit(&i.ring));
    }
    if i.is_zero() {
        return Ok(IdealGens::zero(&i.ring));
    }
    let k = i.gens.len();
    if k == 1 {
        return Ok(IdealGens::principal(i.gens[0].pow(m)?));
    }
    let count = multiset_count(k as u64, m);
    if count > MAX_POWER_GENERATORS {
        return Err(Error::ResourceLimit(format!(
            "power {m} of an ideal with {k} generators has {count} products"
        )));
    }
    let mut powers: Vec<Vec<Polynomial>> = Vec::with_capacity(k);
    for g in &i.gens {
        let mut row = vec![Polynomial::one(&i.ring)];
        for _ in 0..m {
            let next = row.last().unwrap().checked_mul(g)?;
            row.push(next);
        }
        powers.push(row);
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut exps = vec![0u64; k];
    for_each_composition(m, &mut exps, 0, &mut |exps| {
        let mut prod = powers[0][exps[0] as usize].clone();
        for (row, &a) in powers.iter().zip(exps.iter()).skip(1) {
            if a > 0 {
                prod = &prod * &row[a as usize];
            }
        }
        out.push(prod);
    });
    Ok(IdealGens::new(&i.ring, out))
}

pub(crate) const MAX_POWER_GENERATORS: u64 = 2_000_000;

/// Number of multisets of size `m` from `k` kinds, saturating.
pub(crate) fn multiset_count(k: u64, m: u64) -> u64 {
    // binom(m + k - 1, k - 1)
    let mut acc: u128 = 1;
    for j in 1..k {
        acc = acc * (m + j) as u128 / j as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Visits every vector of `exps.len()` non-negative integers summing to
/// `total`, in lexicographically decreasing order of the first entries.
pub(crate) fn for_each_composition(total: u64, exps: &mut [u64], at: usize, f: &mut impl FnMut(&[u64])) {
    if at + 1 == exps.len() {
        exps[at] = total;
        f(exps);
        return;
    }
    for a in (0..=total).rev() {
        exps[at] = a;
        for_each_composition(total - a, exps, at + 1, f);
    }
}

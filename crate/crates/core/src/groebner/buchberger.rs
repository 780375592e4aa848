use std::cmp::Ordering;
use std::collections::HashSet;

use crate::algebra::{ExpVec, IdealGens, Polynomial, Ring};
use crate::error::{Error, Result};

/// Resource caps for Buchberger's algorithm. Exceeding a cap is reported as
/// [`Error::ResourceLimit`]; the computation is never silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbConfig {
    /// Maximal number of S-pairs taken off the queue.
    pub max_pairs: usize,
    /// Maximal total degree of an S-pair lcm.
    pub max_degree: u64,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig {
            max_pairs: 1_000_000,
            max_degree: 1 << 20,
        }
    }
}

/// The reduced Gröbner basis of an ideal in the ring's monomial order:
/// monic, auto-reduced, listed by ascending degree of the leading monomial
/// (equal degrees in descending monomial order).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ReducedGB {
    ring: Ring,
    basis: Vec<Polynomial>,
}

impl ReducedGB {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn is_unit(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn to_ideal(&self) -> IdealGens {
        IdealGens::new(&self.ring, self.basis.iter().cloned())
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        normal_form(f, self).is_zero()
    }

    pub fn contains_ideal(&self, j: &IdealGens) -> bool {
        j.gens().iter().all(|g| self.contains(g))
    }
}

pub fn buchberger(ideal: &IdealGens) -> Result<ReducedGB> {
    buchberger_with(ideal, &GbConfig::default())
}

#[derive(Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: ExpVec,
}

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// first, ties broken by the monomial order and then by pair indices), the
/// coprime-leading-monomial criterion and the chain criterion.
pub fn buchberger_with(ideal: &IdealGens, cfg: &GbConfig) -> Result<ReducedGB> {
    let ring = ideal.ring().clone();
    let mut g: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut done: HashSet<(usize, usize)> = HashSet::new();

    let unit = |ring: &Ring| ReducedGB {
        ring: ring.clone(),
        basis: vec![Polynomial::one(ring)],
    };

    let mut inputs: Vec<Polynomial> = ideal.gens().iter().filter(|f| !f.is_zero()).map(|f| f.monic()).collect();
    // small leading monomials first keeps the initial reductions short
    inputs.sort_by(|a, b| ring.cmp_monomials(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    for f in inputs {
        let h = reduce(&f, &g);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit(&ring));
        }
        push_basis(&mut g, &mut pairs, h.monic());
    }

    let mut processed = 0usize;
    while !pairs.is_empty() {
        let idx = select_pair(&ring, &pairs);
        let pair = pairs.swap_remove(idx);
        processed += 1;
        if processed > cfg.max_pairs {
            return Err(Error::ResourceLimit(format!("more than {} S-pairs", cfg.max_pairs)));
        }
        if pair.lcm.degree() > cfg.max_degree {
            return Err(Error::ResourceLimit(format!(
                "S-pair degree {} exceeds {}",
                pair.lcm.degree(),
                cfg.max_degree
            )));
        }
        done.insert((pair.i, pair.j));
        let (a, b) = (&g[pair.i], &g[pair.j]);
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        if la.is_coprime(lb) {
            continue;
        }
        if chain_criterion(&g, &pair, &done) {
            continue;
        }
        let s = s_polynomial(a, b, &pair.lcm);
        let h = reduce(&s, &g);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(unit(&ring));
        }
        push_basis(&mut g, &mut pairs, h.monic());
    }

    Ok(ReducedGB {
        basis: interreduce(&ring, g),
        ring,
    })
}

fn push_basis(g: &mut Vec<Polynomial>, pairs: &mut Vec<Pair>, h: Polynomial) {
    let new = g.len();
    let lh = h.leading_monomial().unwrap().clone();
    for (i, f) in g.iter().enumerate() {
        pairs.push(Pair {
            i,
            j: new,
            lcm: f.leading_monomial().unwrap().lcm(&lh),
        });
    }
    g.push(h);
}

fn select_pair(ring: &Ring, pairs: &[Pair]) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let ord = p
            .lcm
            .degree()
            .cmp(&b.lcm.degree())
            .then_with(|| ring.cmp_monomials(&p.lcm, &b.lcm))
            .then_with(|| (p.i, p.j).cmp(&(b.i, b.j)));
        if ord == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Skip (i, j) if some k has lm_k | lcm(i, j) and both (i, k), (j, k)
/// were already treated.
fn chain_criterion(g: &[Polynomial], pair: &Pair, done: &HashSet<(usize, usize)>) -> bool {
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
    g.iter().enumerate().any(|(k, f)| {
        k != pair.i
            && k != pair.j
            && f.leading_monomial().unwrap().divides(&pair.lcm)
            && done.contains(&key(pair.i, k))
            && done.contains(&key(pair.j, k))
    })
}

fn s_polynomial(a: &Polynomial, b: &Polynomial, lcm: &ExpVec) -> Polynomial {
    let ring = a.ring();
    let ma = lcm.div(a.leading_monomial().unwrap());
    let mb = lcm.div(b.leading_monomial().unwrap());
    // both monic
    let sa = a.mul_term(&ma, 1);
    sa.add_scaled_shift(b, &mb, ring.neg(1))
}

/// Full reduction of `f` by the monic polynomials `g`.
pub(crate) fn reduce(f: &Polynomial, g: &[Polynomial]) -> Polynomial {
    if g.is_empty() {
        return f.clone();
    }
    let ring = f.ring();
    let mut f = f.clone();
    let mut idx = 0;
    'outer: while idx < f.len() {
        let (e, c) = &f.terms()[idx];
        for h in g {
            let lh = h.leading_monomial().unwrap();
            if lh.divides(e) {
                let m = e.div(lh);
                let c = ring.mul(*c, ring.inv(h.leading_coeff().unwrap()));
                f = f.add_scaled_shift(h, &m, ring.neg(c));
                continue 'outer;
            }
        }
        idx += 1;
    }
    f
}

fn interreduce(ring: &Ring, g: Vec<Polynomial>) -> Vec<Polynomial> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<Polynomial> = Vec::new();
    for (i, f) in g.iter().enumerate() {
        let lf = f.leading_monomial().unwrap();
        let redundant = g.iter().enumerate().any(|(j, h)| {
            let lh = h.leading_monomial().unwrap();
            j != i && lh.divides(lf) && (lh != lf || j < i)
        });
        if !redundant {
            keep.push(f.clone());
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<Polynomial> = keep
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let f = &keep[i];
        let (lm, lc) = f.leading_term().unwrap().clone();
        // reduce the tail only; the head is not divisible by any other lead
        let head = Polynomial::monomial(ring, lm, lc);
        let tail = f - &head;
        let tail = reduce(&tail, &others);
        out.push((&head + &tail).monic());
    }
    // canonical listing: lower degree first, equal degrees by descending order
    out.sort_by(|a, b| {
        let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
        la.degree().cmp(&lb.degree()).then_with(|| ring.cmp_monomials(lb, la))
    });
    out
}

/// Remainder of `f` under division by the reduced basis; zero iff `f` lies
/// in the ideal.
pub fn normal_form(f: &Polynomial, gb: &ReducedGB) -> Polynomial {
    assert!(f.ring() == &gb.ring, "ring mismatch");
    reduce(f, &gb.basis)
}

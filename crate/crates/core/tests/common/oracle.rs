//! Reference computations that share no algorithm with the library: naive
//! expansion, exponent bucketing, dense linear algebra over F_p.

use std::collections::BTreeMap;

use fractau::algebra::{ExpVec, IdealGens, Polynomial, Ring};
use fractau::groebner::buchberger;
use fractau::testideal::IdealFamily;

/// Generators of `Π a_i^{m_i}` by repeated pairwise multiplication.
pub fn naive_power(fam: &IdealFamily, m: &[u64]) -> Vec<Polynomial> {
    let ring = fam.ring();
    let mut acc = vec![Polynomial::one(ring)];
    for (a, &k) in fam.ideals().iter().zip(m) {
        for _ in 0..k {
            let mut next = Vec::new();
            for f in &acc {
                for g in a.gens() {
                    let h = f * g;
                    if !h.is_zero() && !next.contains(&h) {
                        next.push(h);
                    }
                }
            }
            acc = next;
        }
    }
    acc
}

/// `h^[1/q]`: group terms by exponent residue mod `q`, keep the quotients.
pub fn naive_root(h: &Polynomial, q: u64) -> Vec<Polynomial> {
    let ring = h.ring();
    let mut buckets: BTreeMap<Vec<u64>, Vec<(ExpVec, u64)>> = BTreeMap::new();
    for (e, c) in h.terms() {
        let rem: Vec<u64> = e.exps().iter().map(|x| x % q).collect();
        let quo: Vec<u64> = e.exps().iter().map(|x| x / q).collect();
        buckets.entry(rem).or_default().push((ExpVec::from_slice(&quo).unwrap(), *c));
    }
    buckets.into_values().map(|t| Polynomial::from_terms(ring, t)).collect()
}

pub fn naive_ideal_root(b: &[Polynomial], q: u64, ring: &Ring) -> IdealGens {
    IdealGens::new(ring, b.iter().flat_map(|h| naive_root(h, q)))
}

/// `I^[q]` from generator powers computed by repeated multiplication.
pub fn naive_bracket(i: &IdealGens, q: u64) -> IdealGens {
    let gens = i.gens().iter().map(|g| {
        let mut acc = Polynomial::one(i.ring());
        for _ in 0..q {
            acc = &acc * g;
        }
        acc
    });
    IdealGens::new(i.ring(), gens)
}

/// `max { m : a^{m r} ⊄ I^[q] }` by scanning `m = 0, 1, ...` with explicit
/// expansion and normal forms against a basis of `I^[q]`.
pub fn brute_v_number(fam: &IdealFamily, r: &[u64], i: &IdealGens, q: u64, m_cap: u64) -> Option<u64> {
    let gb = buchberger(&naive_bracket(i, q)).unwrap();
    for m in 0..=m_cap {
        let exps: Vec<u64> = r.iter().map(|x| x * m).collect();
        if naive_power(fam, &exps).iter().all(|g| gb.contains(g)) {
            return m.checked_sub(1);
        }
    }
    None
}

/// `C(m, n) mod p` from Pascal's rule.
pub fn pascal_table(max: usize, p: u64) -> Vec<Vec<u64>> {
    let mut rows = vec![vec![1u64]];
    for m in 1..=max {
        let prev = &rows[m - 1];
        let mut row = vec![1u64; m + 1];
        for n in 1..m {
            row[n] = (prev[n - 1] + prev[n]) % p;
        }
        rows.push(row);
    }
    rows
}

fn monomials_of_degree(n: usize, d: u64) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// Rank of a dense matrix over F_p.
fn rank(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let inv = |a: u64| {
        let mut r = 1u64;
        let (mut b, mut e) = (a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rk = 0;
    for c in 0..cols {
        let Some(piv) = (rk..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rk, piv);
        let s = inv(rows[rk][c]);
        for x in rows[rk].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows.len() {
            if i != rk && rows[i][c] != 0 {
                let f = rows[i][c];
                let pivot = rows[rk].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        rk += 1;
    }
    rk
}

/// Membership of a homogeneous `f` of degree `d` in an ideal generated by
/// homogeneous polynomials: `f` must lie in the span of `m · g` with
/// `deg(m g) = d`, decided by comparing ranks.
pub fn homogeneous_member(f: &Polynomial, gens: &[Polynomial]) -> bool {
    let ring = f.ring();
    let Some(d) = f.degree() else { return true };
    let basis = monomials_of_degree(ring.arity(), d);
    let vector = |h: &Polynomial| -> Vec<u64> {
        basis
            .iter()
            .map(|m| h.coeff(&ExpVec::from_slice(m).unwrap()))
            .collect()
    };
    let mut rows = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > d {
            continue;
        }
        for m in monomials_of_degree(ring.arity(), d - dg) {
            let mono = Polynomial::monomial(ring, ExpVec::from_slice(&m).unwrap(), 1);
            rows.push(vector(&(&mono * g)));
        }
    }
    let r0 = rank(rows.clone(), ring.p());
    rows.push(vector(f));
    rank(rows, ring.p()) == r0
}

/// `(I : x^a)` for a monomial ideal: `m_i / gcd(m_i, x^a)`.
pub fn monomial_colon(gens: &[Vec<u64>], a: &[u64]) -> Vec<Vec<u64>> {
    gens.iter()
        .map(|m| m.iter().zip(a).map(|(&mi, &ai)| mi.saturating_sub(ai)).collect())
        .collect()
}

/// Membership of `x^v` in `τ(Π a_i^{c_i})` for monomial ideals in two
/// variables: `v + (1,1)` must lie in the interior of `Σ c_i Newt(a_i)`.
///
/// The interior is cut out by strict inequalities `<w, u> > Σ c_i min_{g ∈ a_i} <w, g>`
/// over the coordinate normals and the normals of every decreasing pair of
/// exponents; extra normals only add valid inequalities.
pub fn monomial_tau_contains(family: &[Vec<[u64; 2]>], c: &[num_rational::BigRational], v: [u64; 2]) -> bool {
    use num_rational::BigRational;
    let mut normals = vec![[1u64, 0], [0, 1]];
    for gens in family {
        for a in gens {
            for b in gens {
                if a[0] < b[0] && a[1] > b[1] {
                    normals.push([a[1] - b[1], b[0] - a[0]]);
                }
            }
        }
    }
    let dot = |w: [u64; 2], u: [u64; 2]| BigRational::from_integer((w[0] * u[0] + w[1] * u[1]).into());
    normals.iter().all(|&w| {
        let support: BigRational = family
            .iter()
            .zip(c)
            .map(|(gens, ci)| ci * gens.iter().map(|&g| dot(w, g)).min().unwrap())
            .sum();
        dot(w, [v[0] + 1, v[1] + 1]) > support
    })
}

//! Randomized instances (at most 3 variables, generators of degree at most
//! 3, p in {2, 3, 5}) and the property checks run on them.

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

use fractau::algebra::{ideal_product, ExpVec, IdealGens, Polynomial, Ring};
use fractau::frobenius::{bracket_power, ideal_bracket_root, FrobLevel};
use fractau::groebner::{buchberger, ideal_contains, ideal_equal};
use fractau::testideal::{skoda_reduce, tau_mixed, v_number, IdealFamily, ParamPoint, Rational};

use super::oracle::{monomial_tau_contains, naive_bracket, naive_ideal_root};
use super::plain_config;

const VARS: [&str; 3] = ["x", "y", "z"];

/// A polynomial as `(variable indices of each monomial, coefficient)`.
pub type RawPoly = Vec<(Vec<usize>, u64)>;
pub type RawIdeal = Vec<RawPoly>;

fn raw_poly(n: usize, p: u64) -> impl Strategy<Value = RawPoly> {
    prop::collection::vec((prop::collection::vec(0..n, 1..=3), 1..p), 1..=3)
}

fn raw_ideal(n: usize, p: u64) -> impl Strategy<Value = RawIdeal> {
    prop::collection::vec(raw_poly(n, p), 1..=2)
}

pub fn ring_of(p: u64, n: usize) -> Ring {
    Ring::new(p, &VARS[..n]).unwrap()
}

/// Builds the polynomial; a cancelled one is replaced by the first variable.
pub fn build_poly(ring: &Ring, raw: &RawPoly) -> Polynomial {
    let n = ring.arity();
    let f = Polynomial::from_terms(
        ring,
        raw.iter().map(|(vs, c)| {
            let mut e = vec![0u64; n];
            for &v in vs {
                e[v] += 1;
            }
            (ExpVec::from_slice(&e).unwrap(), *c)
        }),
    );
    if f.is_zero() {
        Polynomial::var(ring, 0)
    } else {
        f
    }
}

pub fn build_ideal(ring: &Ring, raw: &RawIdeal) -> IdealGens {
    IdealGens::new(ring, raw.iter().map(|f| build_poly(ring, f)))
}

/// A family, a p-adic point and a second p-adic increment.
#[derive(Debug, Clone)]
pub struct FamilyCase {
    pub p: u64,
    pub n: usize,
    pub ideals: Vec<RawIdeal>,
    /// `(numerator, level)` per coordinate.
    pub c: Vec<(u64, u32)>,
    pub delta: Vec<(u64, u32)>,
    pub e: u32,
    pub pick: usize,
}

impl FamilyCase {
    pub fn ring(&self) -> Ring {
        ring_of(self.p, self.n)
    }

    pub fn family(&self) -> IdealFamily {
        let ring = self.ring();
        IdealFamily::new(&ring, self.ideals.iter().map(|a| build_ideal(&ring, a)).collect()).unwrap()
    }

    pub fn point(&self, coords: &[(u64, u32)]) -> ParamPoint {
        ParamPoint::new(
            coords
                .iter()
                .map(|&(m, e)| Rational::new(m.into(), num_bigint::BigInt::from(self.p).pow(e)))
                .collect(),
        )
        .unwrap()
    }
}

fn padic(p: u64, max: u64) -> impl Strategy<Value = (u64, u32)> {
    (0u32..=2).prop_flat_map(move |e| (0..=max * p.pow(e), Just(e)))
}

pub fn family_case() -> impl Strategy<Value = FamilyCase> {
    (prop::sample::select(vec![2u64, 3, 5]), 1usize..=3, 1usize..=2).prop_flat_map(|(p, n, k)| {
        (
            prop::collection::vec(raw_ideal(n, p), k),
            prop::collection::vec(padic(p, 2), k),
            prop::collection::vec(padic(p, 1), k),
            1u32..=2,
            0..k,
        )
            .prop_map(move |(ideals, c, delta, e, pick)| FamilyCase {
                p,
                n,
                ideals,
                c,
                delta,
                e,
                pick,
            })
    })
}

/// Monomial ideals in `x, y` given by exponent pairs.
#[derive(Debug, Clone)]
pub struct MonomialCase {
    pub p: u64,
    pub family: Vec<Vec<[u64; 2]>>,
    pub c: Vec<(u64, u32)>,
}

pub fn monomial_case() -> impl Strategy<Value = MonomialCase> {
    let gens = prop::collection::vec([0u64..=3, 0u64..=3], 1..=3);
    (prop::sample::select(vec![2u64, 3, 5]), 1usize..=2).prop_flat_map(move |(p, k)| {
        (prop::collection::vec(gens.clone(), k), prop::collection::vec(padic(p, 2), k))
            .prop_map(move |(family, c)| MonomialCase { p, family, c })
    })
}

/// Two ideals and a level for the Frobenius identities.
#[derive(Debug, Clone)]
pub struct PairCase {
    pub p: u64,
    pub n: usize,
    pub a: RawIdeal,
    pub b: RawIdeal,
    pub u: RawPoly,
    pub e: u32,
}

pub fn pair_case() -> impl Strategy<Value = PairCase> {
    (prop::sample::select(vec![2u64, 3, 5]), 1usize..=3).prop_flat_map(|(p, n)| {
        (raw_ideal(n, p), raw_ideal(n, p), raw_poly(n, p), 1u32..=2)
            .prop_map(move |(a, b, u, e)| PairCase { p, n, a, b, u, e })
    })
}

/// A family inside the maximal ideal, an m-primary monomial target and a direction.
#[derive(Debug, Clone)]
pub struct ThresholdCase {
    pub fam: FamilyCase,
    pub target: Vec<u64>,
    pub r: Vec<u64>,
}

pub fn threshold_case() -> impl Strategy<Value = ThresholdCase> {
    family_case().prop_flat_map(|fam| {
        let n = fam.n;
        let k = fam.ideals.len();
        (
            Just(fam),
            prop::collection::vec(1u64..=2, n),
            prop::collection::vec(0u64..=2, k).prop_filter("nonzero direction", |r| r.iter().any(|&x| x > 0)),
        )
            .prop_map(|(fam, target, r)| ThresholdCase { fam, target, r })
    })
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if cond {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn lib<T>(r: fractau::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(format!("library error: {e}")))
}

/// `(I^[q])^[1/q] = I`, `(g u^q)^[1/q] = u g^[1/q]`, and the library root
/// agrees with exponent bucketing.
pub fn prop_root_power(case: &PairCase) -> Result<(), TestCaseError> {
    let ring = ring_of(case.p, case.n);
    let level = lib(FrobLevel::new(case.p, case.e))?;
    let q = level.q();
    let i = build_ideal(&ring, &case.a);
    let back = ideal_bracket_root(&lib(bracket_power(&i, level))?, level);
    check(lib(ideal_equal(&back, &i))?, || format!("(I^[q])^[1/q] != I for {i:?}"))?;

    let g = build_poly(&ring, &case.b[0]);
    let u = build_poly(&ring, &case.u);
    let uq = lib(u.frobenius(q))?;
    let lhs = ideal_bracket_root(&IdealGens::principal(&g * &uq), level);
    let g_root = ideal_bracket_root(&IdealGens::principal(g.clone()), level);
    let rhs = ideal_product(&IdealGens::principal(u.clone()), &g_root);
    check(lib(ideal_equal(&lhs, &rhs))?, || format!("(g u^q)^[1/q] != u g^[1/q] for g = {g}, u = {u}"))?;

    let b = build_ideal(&ring, &case.b);
    let oracle = naive_ideal_root(b.gens(), q, &ring);
    check(lib(ideal_equal(&ideal_bracket_root(&b, level), &oracle))?, || format!("root of {b:?} differs from bucketing"))
}

/// `b ⊆ J^[q]` iff `b^[1/q] ⊆ J`.
pub fn prop_adjunction(case: &PairCase) -> Result<(), TestCaseError> {
    let ring = ring_of(case.p, case.n);
    let level = lib(FrobLevel::new(case.p, case.e))?;
    let b = build_ideal(&ring, &case.a);
    let j = build_ideal(&ring, &case.b);
    let jq = naive_bracket(&j, level.q());
    // make containment non-trivial half the time
    let b = if case.u.len().is_multiple_of(2) {
        ideal_product(&b, &jq)
    } else {
        b
    };
    let left = lib(ideal_contains(&jq, &b))?;
    let right = lib(ideal_contains(&j, &ideal_bracket_root(&b, level)))?;
    check(left == right, || format!("adjunction fails for b = {b:?}, J = {j:?}"))
}

/// `c <= c'` implies `τ(a^{c'}) ⊆ τ(a^c)`.
pub fn prop_antitone(case: &FamilyCase) -> Result<(), TestCaseError> {
    let fam = case.family();
    let cfg = plain_config();
    let c = case.point(&case.c);
    let c2 = c.add(&case.point(&case.delta));
    let t = lib(tau_mixed(&fam, &c, &cfg))?;
    let t2 = lib(tau_mixed(&fam, &c2, &cfg))?;
    check(lib(ideal_contains(&t, &t2))?, || format!("τ({c2}) ⊄ τ({c})"))
}

/// `τ(a^s) = Π a_i^{k_i} τ(a^{s-k})` when some `s_i >= m_i`.
pub fn prop_skoda(case: &FamilyCase) -> Result<(), TestCaseError> {
    let fam = case.family();
    let cfg = plain_config();
    // lift the picked coordinate to at least m_i
    let mut coords = case.point(&case.c).coords().to_vec();
    coords[case.pick] += Rational::from_integer(fam.gen_counts()[case.pick].into());
    let s = ParamPoint::new(coords).unwrap();
    let (factor, residual) = lib(skoda_reduce(&fam, &s))?;
    check(
        residual.coords().iter().zip(fam.gen_counts()).all(|(r, &m)| *r < Rational::from_integer(m.into())),
        || format!("residual {residual} not below the generator counts"),
    )?;
    let whole = lib(tau_mixed(&fam, &s, &cfg))?;
    let peeled = ideal_product(&factor, &lib(tau_mixed(&fam, &residual, &cfg))?);
    check(lib(ideal_equal(&whole, &peeled))?, || format!("Skoda identity fails at {s}"))
}

/// `τ(a^c)^[1/p^e] = τ(a^{c / p^e})`.
pub fn prop_scaling(case: &FamilyCase) -> Result<(), TestCaseError> {
    let fam = case.family();
    let cfg = plain_config();
    let level = lib(FrobLevel::new(case.p, case.e))?;
    let c = case.point(&case.c);
    let small = c.scaled(&Rational::new(1.into(), level.q().into()));
    let lhs = ideal_bracket_root(&lib(tau_mixed(&fam, &c, &cfg))?, level);
    let rhs = lib(tau_mixed(&fam, &small, &cfg))?;
    check(lib(ideal_equal(&lhs, &rhs))?, || format!("scaling fails at {c}, e = {}", case.e))
}

/// Generators of `τ(a^c)` have degree at most `⌊d (c_1 + ... + c_n)⌋`.
pub fn prop_degree_bound(case: &FamilyCase) -> Result<(), TestCaseError> {
    let fam = case.family();
    let c = case.point(&case.c);
    let t = lib(tau_mixed(&fam, &c, &plain_config()))?;
    let bound = (Rational::from_integer(fam.max_degree().into()) * c.sum()).floor();
    for g in t.gens() {
        let d = Rational::from_integer(g.degree().unwrap().into());
        check(d <= bound, || format!("generator {g} of τ({c}) exceeds degree {bound}"))?;
    }
    Ok(())
}

/// `p V(e) <= V(e+1)` and `V(I, e+1) = V(I^[p], e)`.
pub fn prop_v_numbers(case: &ThresholdCase) -> Result<(), TestCaseError> {
    let fam = case.fam.family();
    let ring = fam.ring().clone();
    let target = IdealGens::new(
        &ring,
        case.target.iter().enumerate().map(|(i, &a)| {
            let mut e = vec![0u64; ring.arity()];
            e[i] = a;
            Polynomial::monomial(&ring, ExpVec::from_slice(&e).unwrap(), 1)
        }),
    );
    let e = case.fam.e;
    let p = case.fam.p;
    let v_e = lib(v_number(&fam, &case.r, &target, e))?;
    let v_next = lib(v_number(&fam, &case.r, &target, e + 1))?;
    check(p * v_e <= v_next, || format!("p V_{e} = {} > V_{} = {v_next}", p * v_e, e + 1))?;
    let shifted = lib(bracket_power(&target, lib(FrobLevel::new(p, 1))?))?;
    let v_shift = lib(v_number(&fam, &case.r, &shifted, e))?;
    check(v_next == v_shift, || format!("V(I, {}) = {v_next} but V(I^[p], {e}) = {v_shift}", e + 1))
}

/// Monomial families agree with the Newton polyhedron description.
pub fn prop_monomial(case: &MonomialCase) -> Result<(), TestCaseError> {
    let ring = ring_of(case.p, 2);
    let mono = |v: [u64; 2]| Polynomial::monomial(&ring, ExpVec::from_slice(&v).unwrap(), 1);
    let ideals = case
        .family
        .iter()
        .map(|gens| IdealGens::new(&ring, gens.iter().map(|&g| mono(g))))
        .collect();
    let fam = lib(IdealFamily::new(&ring, ideals))?;
    let c: Vec<Rational> = case
        .c
        .iter()
        .map(|&(m, e)| Rational::new(m.into(), num_bigint::BigInt::from(case.p).pow(e)))
        .collect();
    let point = lib(ParamPoint::new(c.clone()))?;
    let gb = lib(buchberger(&lib(tau_mixed(&fam, &point, &plain_config()))?))?;
    for g in gb.basis() {
        let terms = g.terms();
        check(terms.len() == 1, || format!("τ({point}) has non-monomial generator {g}"))?;
        let e = terms[0].0.exps();
        check(monomial_tau_contains(&case.family, &c, [e[0], e[1]]), || {
            format!("{g} lies in τ({point}) but not in the polyhedron")
        })?;
    }
    for a in 0..=12u64 {
        for b in 0..=12u64 {
            if monomial_tau_contains(&case.family, &c, [a, b]) {
                check(gb.contains(&mono([a, b])), || format!("x^{a} y^{b} missing from τ({point})"))?;
            }
        }
    }
    Ok(())
}

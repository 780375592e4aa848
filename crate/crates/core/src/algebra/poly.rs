use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{ExpVec, Ring};
use crate::error::{Error, Result};

/// A sparse polynomial over `F_p`.
///
/// Terms are kept sorted strictly descending in the ring's monomial order
/// and never carry a zero coefficient, so structural equality is equality
/// of polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(ExpVec, u64)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Ring, c: u64) -> Self {
        Self::monomial(ring, ExpVec::zero(ring.arity()), c)
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, ExpVec::var(ring.arity(), i), 1)
    }

    pub fn monomial(ring: &Ring, exp: ExpVec, c: u64) -> Self {
        assert_eq!(exp.len(), ring.arity(), "exponent vector length must match ring arity");
        let c = ring.reduce(c);
        let terms = if c == 0 { Vec::new() } else { vec![(exp, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, unsorted) terms.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (ExpVec, u64)>,
    {
        let mut acc: HashMap<ExpVec, u64> = HashMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), ring.arity(), "exponent vector length must match ring arity");
            let c = ring.reduce(c);
            if c == 0 {
                continue;
            }
            let slot = acc.entry(e).or_insert(0);
            *slot = ring.add(*slot, c);
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &Ring, acc: HashMap<ExpVec, u64>) -> Self {
        let mut terms: Vec<(ExpVec, u64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_unstable_by(|a, b| ring.cmp_monomials(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> &[(ExpVec, u64)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(ExpVec, u64)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| e.is_one())
    }

    /// Nonzero constant, i.e. a unit of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].1 == 1
    }

    pub fn leading_term(&self) -> Option<&(ExpVec, u64)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&ExpVec> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.terms.first().map(|t| t.1)
    }

    /// Maximal total degree of a term; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|(e, _)| e.degree()).max()
    }

    pub fn coeff(&self, exp: &ExpVec) -> u64 {
        self.terms
            .binary_search_by(|(e, _)| self.ring.cmp_monomials(exp, e))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    fn check_ring(&self, other: &Polynomial) {
        assert!(self.ring == other.ring, "polynomials from different rings");
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let c = self.ring.reduce(c);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(e, a)| (e.clone(), self.ring.mul(*a, c))).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.inv(c)),
        }
    }

    /// `c * x^exp * self`. Monomial orders are multiplicative, so no re-sort.
    pub fn mul_term(&self, exp: &ExpVec, c: u64) -> Polynomial {
        let c = self.ring.reduce(c);
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, a)| (e.mul(exp), self.ring.mul(*a, c)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `self + c * x^exp * other`, in one merge pass.
    pub fn add_scaled_shift(&self, other: &Polynomial, exp: &ExpVec, c: u64) -> Polynomial {
        self.check_ring(other);
        let ring = &self.ring;
        let c = ring.reduce(c);
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|(e, x)| (e.mul(exp), ring.mul(*x, c))).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => match ring.cmp_monomials(&x.0, &y.0) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = ring.add(x.1, y.1);
                        if s != 0 {
                            out.push((y.0, s));
                        }
                    }
                },
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (None, None) => break,
            }
        }
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other);
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            for (f, _) in &other.terms {
                e.checked_mul(f)?;
            }
            return Ok(other.mul_term(e, *c));
        }
        if other.terms.len() == 1 {
            return other.checked_mul(self);
        }
        let ring = &self.ring;
        let mut acc: HashMap<ExpVec, u64> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.checked_mul(eb)?;
                let c = ring.mul(*ca, *cb);
                let slot = acc.entry(e).or_insert(0);
                *slot = ring.add(*slot, c);
            }
        }
        Ok(Self::from_map(ring, acc))
    }

    /// Frobenius image `self^q` for `q` a power of the characteristic:
    /// exponents scale by `q`, coefficients are fixed (`c^p = c` in `F_p`).
    pub fn frobenius(&self, q: u64) -> Result<Polynomial> {
        debug_assert!(is_power_of(q, self.ring.p()));
        let mut terms = Vec::with_capacity(self.terms.len());
        for (e, c) in &self.terms {
            terms.push((e.scale(q)?, *c));
        }
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    /// `self^n`, splitting `n` into base-p digits: `f^n = prod (f^{d_j})^{p^j}`
    /// where each digit power uses square-and-multiply and each `p^j`-th
    /// power is an exponent scaling.
    pub fn pow(&self, n: u64) -> Result<Polynomial> {
        if n == 0 {
            return Ok(Polynomial::one(&self.ring));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return Ok(Polynomial::monomial(&self.ring, e.scale(n)?, self.ring.pow(*c, n)));
        }
        let p = self.ring.p();
        let mut acc = Polynomial::one(&self.ring);
        let mut rest = n;
        let mut q = 1u64;
        while rest > 0 {
            let digit = rest % p;
            if digit > 0 {
                let f = self.pow_small(digit)?;
                acc = acc.checked_mul(&f.frobenius(q)?)?;
            }
            rest /= p;
            if rest > 0 {
                q = q.checked_mul(p).ok_or(Error::ExponentOverflow)?;
            }
        }
        Ok(acc)
    }

    /// Square-and-multiply, no characteristic shortcut.
    pub fn pow_small(&self, mut n: u64) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`; errors if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_ring(divisor);
        let (lm, lc) = divisor
            .leading_term()
            .ok_or_else(|| Error::DivisionFailed("division by zero".into()))?;
        let lc_inv = self.ring.inv(*lc);
        let mut rem = self.clone();
        let mut quot: Vec<(ExpVec, u64)> = Vec::new();
        while let Some((e, c)) = rem.leading_term().cloned() {
            if !lm.divides(&e) {
                return Err(Error::DivisionFailed(format!("{divisor} does not divide {self}")));
            }
            let m = e.div(lm);
            let k = self.ring.mul(c, lc_inv);
            rem = rem.add_scaled_shift(divisor, &m, self.ring.neg(k));
            quot.push((m, k));
        }
        Ok(Polynomial::from_terms(&self.ring, quot))
    }

    /// Re-expresses this polynomial in `target`, prepending `k` zero exponents.
    pub(crate) fn embed_front(&self, target: &Ring, k: usize) -> Polynomial {
        Polynomial::from_terms(target, self.terms.iter().map(|(e, c)| (e.pad_front(k), *c)))
    }

    /// Inverse of `embed_front`; `None` if a dropped variable occurs.
    pub(crate) fn restrict_front(&self, target: &Ring, k: usize) -> Option<Polynomial> {
        if self.terms.iter().any(|(e, _)| e.exps()[..k].iter().any(|&x| x != 0)) {
            return None;
        }
        Some(Polynomial::from_terms(target, self.terms.iter().map(|(e, c)| (e.drop_front(k), *c))))
    }

    /// Printed form without whitespace, e.g. `x^2*y+2*x*y^2`.
    pub fn to_compact_string(&self) -> String {
        self.render("+")
    }

    fn render(&self, sep: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let vars = self.ring.vars();
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            let mut factors: Vec<String> = Vec::new();
            if *c != 1 || e.is_one() {
                factors.push(c.to_string());
            }
            for (v, &k) in vars.iter().zip(e.exps()) {
                match k {
                    0 => {}
                    1 => factors.push(v.clone()),
                    _ => factors.push(format!("{v}^{k}")),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

pub(crate) fn is_power_of(mut q: u64, p: u64) -> bool {
    if q == 0 {
        return false;
    }
    while q.is_multiple_of(p) {
        q /= p;
    }
    q == 1
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(" + "))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled_shift(rhs, &ExpVec::zero(self.ring.arity()), 1)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.add_scaled_shift(rhs, &ExpVec::zero(self.ring.arity()), self.ring.p() - 1)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(self.ring.p() - 1)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    /// Panics on 64-bit exponent overflow; use [`Polynomial::checked_mul`]
    /// to get an error instead.
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("exponent overflow in polynomial product")
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest characteristic accepted. Products of two reduced residues must
/// fit in `u128` with room to spare, and exponent scaling by `p^e` should
/// stay practical.
pub const MAX_CHARACTERISTIC: u64 = 1 << 31;

/// Monomial order of a ring.
///
/// Everything user-facing lives in [`MonomialOrder::Grevlex`]. The block
/// order is used internally to eliminate auxiliary variables (colon and
/// intersection computations): the first `block` variables are compared
/// first by grevlex, ties are broken by grevlex on the remaining ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Elimination { block: usize },
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct RingData {
    p: u64,
    vars: Vec<String>,
    order: MonomialOrder,
}

/// The polynomial ring `F_p[x_1, ..., x_r]`.
///
/// Cheap to clone; all polynomials and ideals hold a handle to their ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ring(Arc<RingData>);

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[{}]", self.0.p, self.0.vars.join(","))
    }
}

impl Ring {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S]) -> Result<Self> {
        Self::with_order(p, vars, MonomialOrder::Grevlex)
    }

    pub fn with_order<S: AsRef<str>>(p: u64, vars: &[S], order: MonomialOrder) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("{p} is not prime")));
        }
        if p > MAX_CHARACTERISTIC {
            return Err(Error::InvalidRing(format!(
                "characteristic {p} exceeds {MAX_CHARACTERISTIC}"
            )));
        }
        if vars.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::Elimination { block } = order {
            if block == 0 || block >= vars.len() {
                return Err(Error::InvalidRing("elimination block out of range".into()));
            }
        }
        Ok(Ring(Arc::new(RingData { p, vars, order })))
    }

    /// Same ring with `extra` fresh variables prepended and an elimination
    /// order for them. Used for auxiliary-variable constructions.
    pub(crate) fn with_eliminated(&self, extra: &[&str]) -> Result<Ring> {
        let mut vars: Vec<String> = extra.iter().map(|s| s.to_string()).collect();
        for v in &self.0.vars {
            vars.push(v.clone());
        }
        Ring::with_order(self.0.p, &vars, MonomialOrder::Elimination { block: extra.len() })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    #[inline]
    pub fn arity(&self) -> usize {
        self.0.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// Compares two exponent vectors in this ring's order.
    #[inline]
    pub fn cmp_monomials(&self, a: &ExpVec, b: &ExpVec) -> Ordering {
        match self.0.order {
            MonomialOrder::Grevlex => grevlex(a.deg, &a.exps, b.deg, &b.exps),
            MonomialOrder::Elimination { block } => {
                let (ah, at) = a.exps.split_at(block);
                let (bh, bt) = b.exps.split_at(block);
                let adh: u64 = ah.iter().sum();
                let bdh: u64 = bh.iter().sum();
                grevlex(adh, ah, bdh, bh).then_with(|| grevlex(a.deg - adh, at, b.deg - bdh, bt))
            }
        }
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u64 {
        v % self.0.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0.p {
            s - self.0.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0.p as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut n: u64) -> u64 {
        let mut acc = 1 % self.0.p;
        a %= self.0.p;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `a` must be nonzero mod p.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.0.p), "inverse of zero");
        self.pow(a, self.0.p - 2)
    }
}

fn grevlex(adeg: u64, a: &[u64], bdeg: u64, b: &[u64]) -> Ordering {
    adeg.cmp(&bdeg).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            match x.cmp(y) {
                Ordering::Equal => continue,
                // smaller exponent in the last differing variable wins
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of `F_p`, always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u64,
    p: u64,
}

impl FpScalar {
    pub fn new(value: u64, p: u64) -> Self {
        FpScalar { value: value % p, p }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn characteristic(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Exponent vector of a monomial, with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExpVec {
    deg: u64,
    exps: SmallVec<[u64; 4]>,
}

impl ExpVec {
    pub fn zero(arity: usize) -> Self {
        ExpVec {
            deg: 0,
            exps: SmallVec::from_elem(0, arity),
        }
    }

    pub fn from_slice(exps: &[u64]) -> Result<Self> {
        let mut deg = 0u64;
        for &e in exps {
            deg = deg.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(ExpVec {
            deg,
            exps: SmallVec::from_slice(exps),
        })
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut v = Self::zero(arity);
        v.exps[i] = 1;
        v.deg = 1;
        v
    }

    #[inline]
    pub fn degree(&self) -> u64 {
        self.deg
    }

    #[inline]
    pub fn exps(&self) -> &[u64] {
        &self.exps
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn checked_mul(&self, other: &ExpVec) -> Result<ExpVec> {
        let mut exps = self.exps.clone();
        for (a, b) in exps.iter_mut().zip(&other.exps) {
            *a = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        let deg = self.deg.checked_add(other.deg).ok_or(Error::ExponentOverflow)?;
        Ok(ExpVec { deg, exps })
    }

    /// Product of monomials. Overflowing a 64-bit exponent is a hard error.
    pub fn mul(&self, other: &ExpVec) -> ExpVec {
        self.checked_mul(other).expect("exponent overflow in monomial product")
    }

    pub fn scale(&self, k: u64) -> Result<ExpVec> {
        let mut exps = self.exps.clone();
        for a in exps.iter_mut() {
            *a = a.checked_mul(k).ok_or(Error::ExponentOverflow)?;
        }
        let deg = self.deg.checked_mul(k).ok_or(Error::ExponentOverflow)?;
        Ok(ExpVec { deg, exps })
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &ExpVec) -> ExpVec {
        debug_assert!(other.divides(self));
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect();
        ExpVec {
            deg: self.deg - other.deg,
            exps,
        }
    }

    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        let exps: SmallVec<[u64; 4]> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        ExpVec {
            deg: exps.iter().sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &ExpVec) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Splits `self` as `q * quot + rem` with `0 <= rem_i < q`.
    pub fn div_rem_scalar(&self, q: u64) -> (ExpVec, ExpVec) {
        let mut quot = SmallVec::with_capacity(self.exps.len());
        let mut rem = SmallVec::with_capacity(self.exps.len());
        for &a in &self.exps {
            quot.push(a / q);
            rem.push(a % q);
        }
        (
            ExpVec {
                deg: quot.iter().sum(),
                exps: quot,
            },
            ExpVec {
                deg: rem.iter().sum(),
                exps: rem,
            },
        )
    }

    /// Drops the first `k` coordinates (which must be zero for a lossless map).
    pub(crate) fn drop_front(&self, k: usize) -> ExpVec {
        let exps: SmallVec<[u64; 4]> = SmallVec::from_slice(&self.exps[k..]);
        ExpVec {
            deg: exps.iter().sum(),
            exps,
        }
    }

    pub(crate) fn pad_front(&self, k: usize) -> ExpVec {
        let mut exps: SmallVec<[u64; 4]> = SmallVec::from_elem(0, k);
        exps.extend_from_slice(&self.exps);
        ExpVec { deg: self.deg, exps }
    }
}

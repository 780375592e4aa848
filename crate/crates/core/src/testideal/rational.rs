use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `a/b` or `a` (non-negative).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("`{s}` is not a non-negative rational"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) || !den.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `num/den`, or just `num` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exponent `e` with `den = p^e`, if the reduced denominator is a power of `p`.
pub fn p_power_exponent(r: &Rational, p: u64) -> Option<u32> {
    let mut d = r.denom().clone();
    let p = BigInt::from(p);
    let mut e = 0u32;
    while !d.is_one() {
        let (q, rem) = d.div_rem(&p);
        if !rem.is_zero() {
            return None;
        }
        d = q;
        e += 1;
    }
    Some(e)
}

/// `⌈r · p^e⌉` as a machine integer.
pub fn ceil_scaled(r: &Rational, p: u64, e: u32) -> Result<u64> {
    let scaled = r * Rational::from_integer(BigInt::from(p).pow(e));
    scaled.ceil().to_integer().to_u64().ok_or(Error::ExponentOverflow)
}

pub fn floor_to_u64(r: &Rational) -> Result<u64> {
    r.floor().to_integer().to_u64().ok_or(Error::ExponentOverflow)
}

/// An exponent `m / p^e`, normalized so that `p ∤ m` unless `e = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdicRational {
    num: u64,
    e: u32,
    p: u64,
}

impl PAdicRational {
    pub fn new(num: u64, e: u32, p: u64) -> Self {
        let (mut num, mut e) = (num, e);
        while e > 0 && num % p == 0 {
            num /= p;
            e -= 1;
        }
        if num == 0 {
            e = 0;
        }
        PAdicRational { num, e, p }
    }

    pub fn from_rational(r: &Rational, p: u64) -> Result<Self> {
        if r.is_negative() {
            return Err(Error::InvalidArgument("negative exponent".into()));
        }
        let e = p_power_exponent(r, p)
            .ok_or_else(|| Error::InvalidArgument(format!("{} is not a p-adic rational for p = {p}", format_rational(r))))?;
        let num = r.numer().to_u64().ok_or(Error::ExponentOverflow)?;
        Ok(Self::new(num, e, p))
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Numerator over `p^level` for `level >= e`.
    pub fn num_at(&self, level: u32) -> Result<u64> {
        assert!(level >= self.e);
        self.p
            .checked_pow(level - self.e)
            .and_then(|s| s.checked_mul(self.num))
            .ok_or(Error::ExponentOverflow)
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(BigInt::from(self.num), BigInt::from(self.p).pow(self.e))
    }
}

impl fmt::Display for PAdicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.to_rational()))
    }
}

/// A point `c ∈ Q^n_{>=0}` of the parameter space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamPoint {
    coords: Vec<Rational>,
}

impl ParamPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self> {
        if coords.iter().any(|c| c.is_negative()) {
            return Err(Error::InvalidArgument("parameter coordinates must be non-negative".into()));
        }
        Ok(ParamPoint { coords })
    }

    /// Grid point `(i_1 / p^k, ..., i_n / p^k)`.
    pub fn grid(index: &[u64], p: u64, k: u32) -> Self {
        let den = BigInt::from(p).pow(k);
        let coords = index
            .iter()
            .map(|&i| Rational::new(BigInt::from(i), den.clone()))
            .collect();
        ParamPoint { coords }
    }

    /// Comma-separated rationals, e.g. `1/3,2/3`.
    pub fn parse(s: &str) -> Result<Self> {
        let coords = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Common `e` with every coordinate in `p^{-e} Z`, if one exists.
    pub fn p_adic_level(&self, p: u64) -> Option<u32> {
        self.coords
            .iter()
            .map(|c| p_power_exponent(c, p))
            .try_fold(0u32, |acc, e| e.map(|e| acc.max(e)))
    }

    pub fn sum(&self) -> Rational {
        self.coords.iter().fold(Rational::zero(), |acc, c| acc + c)
    }

    pub fn scaled(&self, factor: &Rational) -> ParamPoint {
        ParamPoint {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn add(&self, other: &ParamPoint) -> ParamPoint {
        assert_eq!(self.len(), other.len());
        ParamPoint {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &ParamPoint) -> bool {
        self.coords.iter().zip(&other.coords).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(", "))
    }
}

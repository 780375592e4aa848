use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::testideal::{ParamPoint, Rational};

/// A point whose coordinates are finite base-`p` expansions `0.d_1 d_2 ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitPoint {
    p: u64,
    digits: Vec<Vec<u8>>,
}

impl DigitPoint {
    pub fn new(p: u64, digits: Vec<Vec<u8>>) -> Result<Self> {
        if digits.iter().flatten().any(|&d| u64::from(d) >= p) {
            return Err(Error::InvalidArgument(format!("digit out of range for base {p}")));
        }
        Ok(DigitPoint { p, digits })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn digits(&self) -> &[Vec<u8>] {
        &self.digits
    }

    /// Longest expansion length; the point lies on the grid of that level.
    pub fn level(&self) -> u32 {
        self.digits.iter().map(|d| d.len()).max().unwrap_or(0) as u32
    }

    pub fn to_point(&self) -> ParamPoint {
        let coords = self
            .digits
            .iter()
            .map(|ds| {
                let mut num = BigInt::from(0);
                for &d in ds {
                    num = num * self.p + d;
                }
                Rational::new(num, BigInt::from(self.p).pow(ds.len() as u32))
            })
            .collect();
        ParamPoint::new(coords).expect("digits are non-negative")
    }

    /// Each coordinate as `0.d_1d_2...`.
    pub fn to_strings(&self) -> Vec<String> {
        self.digits
            .iter()
            .map(|ds| {
                let s: String = ds.iter().map(|d| char::from_digit(u32::from(*d), 36).unwrap()).collect();
                format!("0.{s}")
            })
            .collect()
    }
}

impl fmt::Display for DigitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

/// Boundary points of the `F_3` staircase `((x+y), (xy))` for `I = (x, y)`.
///
/// Starting from `(0.1, 0.2)`, each point `(0.a 1, 0.b 2)` has the two children
/// `(0.a 01, 0.b 22)` and `(0.a 21, 0.b 12)`. Returns the `2^depth` points
/// of the given depth in depth-first order.
pub fn staircase_boundary(depth: u32) -> Vec<DigitPoint> {
    let mut layer = vec![(vec![1u8], vec![2u8])];
    for _ in 0..depth {
        layer = layer
            .into_iter()
            .flat_map(|(a, b)| {
                let split = |x: &[u8], ins: u8| {
                    let mut v = x[..x.len() - 1].to_vec();
                    v.push(ins);
                    v.push(*x.last().unwrap());
                    v
                };
                [(split(&a, 0), split(&b, 2)), (split(&a, 2), split(&b, 1))]
            })
            .collect();
    }
    layer
        .into_iter()
        .map(|(a, b)| DigitPoint { p: 3, digits: vec![a, b] })
        .collect()
}

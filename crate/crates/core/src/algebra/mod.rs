//! Prime-field arithmetic, sparse polynomials, ideals given by generators,
//! Lucas binomials and the expression parser.

mod ideal;
mod linear;
mod lucas;
mod parse;
mod poly;
mod ring;

pub use ideal::{ideal_power, ideal_product, IdealGens};
pub use linear::linear_basis;
pub use lucas::{base_p_digits, lucas_binomial};
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{is_prime, ExpVec, FpScalar, MonomialOrder, Ring, MAX_CHARACTERISTIC};

/// `f^n` with the characteristic-p digit splitting.
pub fn poly_pow(f: &Polynomial, n: u64) -> crate::Result<Polynomial> {
    f.pow(n)
}

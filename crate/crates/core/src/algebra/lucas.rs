use super::ring::FpScalar;

/// `binom(m, n) mod p` via base-p digits: the product of digit binomials.
/// Returns zero when `n > m`.
pub fn lucas_binomial(m: u64, n: u64, p: u64) -> FpScalar {
    if n > m {
        return FpScalar::new(0, p);
    }
    let (mut m, mut n) = (m, n);
    let mut acc = 1u64 % p;
    while n > 0 || m > 0 {
        let (md, nd) = (m % p, n % p);
        if nd > md {
            return FpScalar::new(0, p);
        }
        acc = mulmod(acc, small_binomial(md, nd, p), p);
        m /= p;
        n /= p;
    }
    FpScalar::new(acc, p)
}

/// Base-p digits, least significant first.
pub fn base_p_digits(mut m: u64, p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    while m > 0 {
        out.push(m % p);
        m /= p;
    }
    out
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

// m, n < p, so the factorials involved are units mod p.
fn small_binomial(m: u64, n: u64, p: u64) -> u64 {
    let n = n.min(m - n);
    let (mut num, mut den) = (1u64, 1u64);
    for i in 0..n {
        num = mulmod(num, m - i, p);
        den = mulmod(den, i + 1, p);
    }
    mulmod(num, powmod(den, p - 2, p), p)
}

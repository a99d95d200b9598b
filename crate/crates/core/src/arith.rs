//! Elementary number theory on machine integers.

use crate::error::{Error, Result};
use num_integer::Integer;

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn euler_phi(n: u64) -> u64 {
    let mut r = n;
    for p in prime_divisors(n) {
        r = r / p * (p - 1);
    }
    r
}

/// `v_p(n)` for `n > 0`.
pub fn padic_valuation(p: u64, mut n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if n == 0 {
        return Err(Error::InconsistentFamilyParams("valuation of zero".into()));
    }
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    Ok(v)
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m = m as u128;
    let mut b = base as u128 % m;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Multiplicative order of `r` modulo `m`. Everything has order 1 modulo 1.
pub fn ord_mod(m: u64, r: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::NotCoprime { a: r, m });
    }
    if m == 1 {
        return Ok(1);
    }
    if gcd(r % m, m) != 1 {
        return Err(Error::NotCoprime { a: r, m });
    }
    let r = r % m;
    let mut x = r;
    let mut k = 1;
    while x != 1 {
        x = ((x as u128 * r as u128) % m as u128) as u64;
        k += 1;
    }
    Ok(k)
}

/// `v_q(c^e - 1)` computed modulo increasing powers of `q`, so huge powers
/// never materialise. Requires `c^e != 1`.
pub fn valuation_of_pow_minus_one(q: u64, c: u64, e: u64) -> Result<u32> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if c == 1 || (c == 0 && e == 0) {
        return Err(Error::InconsistentFamilyParams("c^e - 1 is zero".into()));
    }
    let mut modulus: u64 = q;
    let mut j = 1u32;
    loop {
        if pow_mod(c, e, modulus) != 1 % modulus {
            return Ok(j - 1);
        }
        modulus = modulus
            .checked_mul(q)
            .ok_or_else(|| Error::InconsistentFamilyParams("valuation overflow".into()))?;
        j += 1;
    }
}

/// Least positive `x` with `x = a (mod m1)` and `x = b (mod m2)`, coprime moduli.
pub fn crt(a: u64, m1: u64, b: u64, m2: u64) -> Result<u64> {
    if gcd(m1, m2) != 1 {
        return Err(Error::NotCoprime { a: m1, m: m2 });
    }
    let m = m1 * m2;
    for x in 0..m {
        if x % m1 == a % m1 && x % m2 == b % m2 {
            return Ok(if x == 0 { m } else { x });
        }
    }
    unreachable!("CRT solution always exists for coprime moduli")
}

/// Modular inverse of `a` modulo `m`.
pub fn inv_mod(a: u64, m: u64) -> Result<u64> {
    if m == 1 {
        return Ok(0);
    }
    let ext = (a as i128 % m as i128).extended_gcd(&(m as i128));
    if ext.gcd != 1 {
        return Err(Error::NotCoprime { a, m });
    }
    Ok(ext.x.rem_euclid(m as i128) as u64)
}

pub fn ipow(b: u64, e: u32) -> u64 {
    b.pow(e)
}

/// `Some(k)` when `n = p^k` for the prime `p`.
pub fn log_exact(p: u64, mut n: u64) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        k += 1;
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(ord_mod(21, 16).unwrap(), 3);
        assert_eq!(ord_mod(12, 5).unwrap(), 2);
        assert_eq!(ord_mod(1, 7).unwrap(), 1);
        assert!(ord_mod(12, 4).is_err());
    }

    #[test]
    fn valuations() {
        assert_eq!(padic_valuation(2, 40).unwrap(), 3);
        assert_eq!(valuation_of_pow_minus_one(3, 7, 1).unwrap(), 1);
        assert_eq!(valuation_of_pow_minus_one(2, 5, 2).unwrap(), 3);
        assert!(padic_valuation(4, 8).is_err());
    }

    #[test]
    fn crt_and_inverse() {
        // 16 = 1 (mod 3), 16 = 2 (mod 7)
        assert_eq!(crt(1, 3, 2, 7).unwrap(), 16);
        assert_eq!(inv_mod(3, 7).unwrap(), 5);
    }
}

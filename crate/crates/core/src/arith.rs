//! p-adic digits, Kummer carries, and binomial coefficients modulo a prime.
//!
//! Binomials are always evaluated digit by digit (Lucas), so arguments like
//! `C(2p^a - s - 1, p^a - 1)` stay cheap for any exponent.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// A prime characteristic. Primality is checked by trial division.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct Prime(u32);

impl Prime {
    pub fn new(p: u32) -> Result<Self> {
        if is_prime(p as u64) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p as u64))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// Rejects `p = 2`, where the H¹ criterion fails.
    pub fn require_odd(self) -> Result<Self> {
        if self.is_odd() {
            Ok(self)
        } else {
            Err(Error::EvenCharacteristic)
        }
    }

    /// `p^e`, or `None` on overflow.
    pub fn checked_pow(self, e: u32) -> Option<u64> {
        (self.0 as u64).checked_pow(e)
    }
}

impl TryFrom<u32> for Prime {
    type Error = Error;

    fn try_from(p: u32) -> Result<Self> {
        Prime::new(p)
    }
}

impl From<Prime> for u32 {
    fn from(p: Prime) -> u32 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

/// Base-p digits, least significant first. Zero has no digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PAdicDigits {
    p: Prime,
    digits: Vec<u32>,
}

impl PAdicDigits {
    pub fn new(mut n: u64, p: Prime) -> Self {
        let base = p.get() as u64;
        let mut digits = Vec::new();
        while n > 0 {
            digits.push((n % base) as u32);
            n /= base;
        }
        PAdicDigits { p, digits }
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Digit at position `i`; zero past the end.
    pub fn digit(&self, i: usize) -> u32 {
        self.digits.get(i).copied().unwrap_or(0)
    }

    pub fn value(&self) -> u128 {
        let base = self.p.get() as u128;
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * base + d as u128)
    }
}

/// The least `l ≥ 0` with `t < p^l`.
pub fn l_p(t: u64, p: Prime) -> u32 {
    PAdicDigits::new(t, p).len() as u32
}

/// The p-adic valuation of `C(x + y, x)`, counted as the number of carries
/// when adding `x` and `y` in base p.
pub fn kummer_valuation(x: u64, y: u64, p: Prime) -> u32 {
    let dx = PAdicDigits::new(x, p);
    let dy = PAdicDigits::new(y, p);
    let base = p.get();
    let mut carry = 0;
    let mut carries = 0;
    for i in 0..dx.len().max(dy.len()) {
        let s = dx.digit(i) + dy.digit(i) + carry;
        carry = u32::from(s >= base);
        carries += carry;
    }
    carries
}

/// `C(n, k) mod p` by Lucas' theorem; zero when `k > n`.
pub fn binom_mod_p(n: u64, k: u64, p: Prime) -> u32 {
    if k > n {
        return 0;
    }
    let base = p.get() as u64;
    let (mut n, mut k) = (n, k);
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (ni, ki) = (n % base, k % base);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binom_mod(ni, ki, base) % base;
        n /= base;
        k /= base;
    }
    acc as u32
}

// C(n, k) mod p for 0 <= k <= n < p.
fn small_binom_mod(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for j in 0..k {
        num = num * ((n - j) % p) % p;
        den = den * ((j + 1) % p) % p;
    }
    num * inverse_mod(den, p) % p
}

/// Inverse of a nonzero residue modulo a prime, by Fermat.
pub fn inverse_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a % p, p - 2, p)
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// James' congruence condition: `λ_i ≡ -1 mod p^{l_p(λ_{i+1})}` for every
/// `i` with `λ_{i+1} > 0`. When it holds `H⁰(Σ_d, S^λ)` is one-dimensional,
/// otherwise zero. One-row partitions satisfy it vacuously.
pub fn h0_criterion(lambda: &Partition, p: Prime) -> bool {
    lambda.parts().windows(2).all(|w| {
        let (upper, lower) = (w[0] as u64, w[1] as u64);
        match p.checked_pow(l_p(lower, p)) {
            Some(modulus) => (upper + 1) % modulus == 0,
            // p^l exceeds u64 while upper + 1 is tiny and positive.
            None => false,
        }
    })
}

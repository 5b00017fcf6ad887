use rand::Rng;

use super::Ring;
use crate::error::{Error, Result};

/// A prime field F_p for a u64 modulus; elements are canonical residues in
/// `[0, p)`. The descriptor carries the modulus so elements stay plain
/// machine words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Wraps a modulus after verifying primality.
    pub fn new(p: u64) -> Result<PrimeField> {
        if !is_prime_u64(p) {
            return Err(Error::PrimeGeneration {
                bit_length: 64 - p.leading_zeros(),
                attempts: 0,
            });
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce_i64(&self, n: i64) -> u64 {
        let m = self.p as i128;
        (((n as i128 % m) + m) % m) as u64
    }
}

impl Ring for PrimeField {
    type Element = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        add_mod(*a, *b, self.p)
    }

    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }

    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    // p < 2^63 is guaranteed by the creation path, so a + b cannot wrap.
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin over the witness set that decides primality
/// for every `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut r = 0u32;
    while d % 2 == 0 {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..r - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const MAX_PRIME_BITS: u32 = 62;

/// Draws a uniformly random prime of exactly `bit_length` bits from the
/// given RNG. Deterministic for a fixed RNG state; the bit length is capped
/// at 62 so field arithmetic stays within u64/u128.
pub fn prime_field_create<R: Rng>(bit_length: u32, rng: &mut R) -> Result<PrimeField> {
    if !(2..=MAX_PRIME_BITS).contains(&bit_length) {
        return Err(Error::KOutOfRange {
            k: bit_length as usize,
            max: MAX_PRIME_BITS as usize,
        });
    }
    let attempts = 128 * bit_length;
    for _ in 0..attempts {
        let candidate = if bit_length == 2 {
            rng.random_range(2u64..4)
        } else {
            let low_bits = rng.random_range(0..(1u64 << (bit_length - 1)));
            (1u64 << (bit_length - 1)) | low_bits | 1
        };
        if is_prime_u64(candidate) {
            return Ok(PrimeField { p: candidate });
        }
    }
    Err(Error::PrimeGeneration {
        bit_length,
        attempts,
    })
}

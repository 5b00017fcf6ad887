use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// Arbitrary-precision signed integer with a machine-word fast path.
///
/// Values that fit in an `i64` are stored inline; anything larger is boxed.
/// The representation is canonical: a `Big` value never fits in an `i64`,
/// so derived equality and hashing are value equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Int {
    Small(i64),
    Big(Box<BigInt>),
}

impl Int {
    pub const ZERO: Int = Int::Small(0);
    pub const ONE: Int = Int::Small(1);

    /// Canonicalizes a big integer, demoting it when it fits in an `i64`.
    pub fn from_bigint(value: BigInt) -> Int {
        match value.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Big(Box::new(value)),
        }
    }

    pub fn to_bigint(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Big(b) => (**b).clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Big(b) => b.is_negative(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match self {
            Int::Small(v) => Some(*v),
            Int::Big(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Int::Small(v) => *v as f64,
            Int::Big(b) => b.to_f64().unwrap_or(f64::NAN),
        }
    }

    #[inline]
    pub fn add(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_add(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_bigint(BigInt::from(*a) + BigInt::from(*b)),
            },
            _ => Int::from_bigint(self.to_bigint() + other.to_bigint()),
        }
    }

    #[inline]
    pub fn sub(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_sub(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_bigint(BigInt::from(*a) - BigInt::from(*b)),
            },
            _ => Int::from_bigint(self.to_bigint() - other.to_bigint()),
        }
    }

    #[inline]
    pub fn mul(&self, other: &Int) -> Int {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => match a.checked_mul(*b) {
                Some(v) => Int::Small(v),
                None => Int::from_bigint(BigInt::from(*a) * BigInt::from(*b)),
            },
            _ => Int::from_bigint(self.to_bigint() * other.to_bigint()),
        }
    }

    #[inline]
    pub fn neg(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_bigint(-BigInt::from(*v)),
            },
            Int::Big(b) => Int::from_bigint(-(**b).clone()),
        }
    }

    /// In-place addition; avoids reallocating the accumulator on the fast path.
    #[inline]
    pub fn add_assign(&mut self, other: &Int) {
        if let (Int::Small(a), Int::Small(b)) = (&*self, other) {
            if let Some(v) = a.checked_add(*b) {
                *self = Int::Small(v);
                return;
            }
        }
        *self = self.add(other);
    }

    pub fn pow(&self, exp: u32) -> Int {
        let mut acc = Int::ONE;
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn abs(&self) -> Int {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl Default for Int {
    fn default() -> Self {
        Int::ZERO
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<u32> for Int {
    fn from(v: u32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<usize> for Int {
    fn from(v: usize) -> Self {
        match i64::try_from(v) {
            Ok(s) => Int::Small(s),
            Err(_) => Int::from_bigint(BigInt::from(v)),
        }
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int::from_bigint(v)
    }
}

impl FromStr for Int {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(Int::from_bigint(BigInt::from_str(s)?))
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            (Int::Big(a), Int::Big(b)) => a.as_ref().cmp(b.as_ref()),
            // A canonical Big value lies outside the i64 range, so its sign
            // alone decides the comparison with any Small value.
            (Int::Small(_), Int::Big(b)) => {
                if b.is_negative() {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
            (Int::Big(a), Int::Small(_)) => {
                if a.is_negative() {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Big(b) => write!(f, "{b}"),
        }
    }
}

impl std::iter::Sum for Int {
    fn sum<I: Iterator<Item = Int>>(iter: I) -> Int {
        let mut acc = Int::ZERO;
        for v in iter {
            acc.add_assign(&v);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_stays_small() {
        let a = Int::from(7i64);
        let b = Int::from(-3i64);
        assert_eq!(a.add(&b), Int::from(4i64));
        assert_eq!(a.mul(&b), Int::from(-21i64));
        assert_eq!(a.sub(&b), Int::from(10i64));
        assert!(matches!(a.add(&b), Int::Small(_)));
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Int::from(i64::MAX).add(&Int::ONE);
        assert!(matches!(big, Int::Big(_)));
        let back = big.sub(&Int::ONE);
        assert_eq!(back, Int::from(i64::MAX));
        assert!(matches!(back, Int::Small(_)));
    }

    #[test]
    fn big_products_round_trip_through_bigint() {
        let a = Int::from(1_000_000_007i64);
        let sq = a.mul(&a).mul(&a);
        assert_eq!(sq.to_bigint(), BigInt::from(1_000_000_007i64).pow(3));
    }

    #[test]
    fn ordering_spans_representations() {
        let big_pos = Int::from(i64::MAX).add(&Int::ONE);
        let big_neg = Int::from(i64::MIN).sub(&Int::ONE);
        assert!(big_neg < Int::ZERO);
        assert!(Int::ZERO < big_pos);
        assert!(big_neg < big_pos);
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let three = Int::from(3i64);
        assert_eq!(three.pow(0), Int::ONE);
        assert_eq!(three.pow(41), Int::from_bigint(BigInt::from(3).pow(41)));
    }

    #[test]
    fn negation_of_i64_min_promotes() {
        let v = Int::from(i64::MIN);
        let n = v.neg();
        assert_eq!(n.to_bigint(), -BigInt::from(i64::MIN));
    }
}

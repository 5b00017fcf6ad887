//! Pluggable exact coefficient rings.
//!
//! Every algebraic structure in this crate (extensors, zeons, polynomials,
//! circuit evaluation) is generic over a [`Ring`]. A ring is described by a
//! lightweight *descriptor* value — e.g. [`PrimeField`] carries its modulus —
//! and elements are plain data manipulated through the descriptor. All rings
//! here are exact; there is no floating point anywhere in an algebra path.

mod int;
mod prime;
mod quadext;
mod sparse;

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

pub use int::Int;
pub use prime::{is_prime_u64, prime_field_create, PrimeField};
pub use quadext::{QuadExt, QuadExtRing};
pub use sparse::{sparse_poly_multiply, SparsePoly, SparsePolyRing, VarSet};

/// Rationals are arbitrary-precision and kept reduced with a positive
/// denominator by construction.
pub type Rational = num_rational::BigRational;

/// A commutative ring with exact, decidable equality.
///
/// The descriptor object (`self`) carries whatever context elements need
/// (modulus, variable universe, …); elements themselves stay plain values
/// that can be cloned and shared freely across threads.
pub trait Ring: Clone + Send + Sync + fmt::Debug {
    type Element: Clone + PartialEq + Send + Sync + fmt::Debug;

    fn zero(&self) -> Self::Element;
    fn one(&self) -> Self::Element;
    fn is_zero(&self, a: &Self::Element) -> bool;
    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn neg(&self, a: &Self::Element) -> Self::Element;
    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element;
    fn from_i64(&self, n: i64) -> Self::Element;

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.add(a, &self.neg(b))
    }

    /// In-place accumulation hook; rings with allocation-free fast paths
    /// override this.
    fn add_assign(&self, a: &mut Self::Element, b: &Self::Element) {
        *a = self.add(a, b);
    }

    /// `acc += x * y`, the inner step of every evaluation loop.
    fn mul_add_assign(&self, acc: &mut Self::Element, x: &Self::Element, y: &Self::Element) {
        let p = self.mul(x, y);
        self.add_assign(acc, &p);
    }

    /// Embeds an arbitrary-precision integer. The default walks the base-2³²
    /// digits Horner-style, so it works for any ring; rings with a native
    /// integer representation override it.
    fn from_int(&self, n: &Int) -> Self::Element {
        if let Some(v) = n.to_i64() {
            return self.from_i64(v);
        }
        let (sign, digits) = n.to_bigint().to_u32_digits();
        let base = self.from_i64(1i64 << 32);
        let mut acc = self.zero();
        for &d in digits.iter().rev() {
            acc = self.mul(&acc, &base);
            self.add_assign(&mut acc, &self.from_i64(i64::from(d)));
        }
        if sign == num_bigint::Sign::Minus {
            acc = self.neg(&acc);
        }
        acc
    }

    fn pow_u64(&self, a: &Self::Element, mut e: u64) -> Self::Element {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// The ring of integers, backed by [`Int`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntegerRing;

impl Ring for IntegerRing {
    type Element = Int;

    fn zero(&self) -> Int {
        Int::ZERO
    }

    fn one(&self) -> Int {
        Int::ONE
    }

    #[inline]
    fn is_zero(&self, a: &Int) -> bool {
        a.is_zero()
    }

    #[inline]
    fn add(&self, a: &Int, b: &Int) -> Int {
        a.add(b)
    }

    #[inline]
    fn neg(&self, a: &Int) -> Int {
        a.neg()
    }

    #[inline]
    fn mul(&self, a: &Int, b: &Int) -> Int {
        a.mul(b)
    }

    fn from_i64(&self, n: i64) -> Int {
        Int::from(n)
    }

    fn from_int(&self, n: &Int) -> Int {
        n.clone()
    }

    #[inline]
    fn sub(&self, a: &Int, b: &Int) -> Int {
        a.sub(b)
    }

    #[inline]
    fn add_assign(&self, a: &mut Int, b: &Int) {
        a.add_assign(b);
    }

    #[inline]
    fn mul_add_assign(&self, acc: &mut Int, x: &Int, y: &Int) {
        acc.add_assign(&x.mul(y));
    }
}

/// The field of rationals, backed by [`Rational`]. Results of every
/// operation are eagerly reduced with a positive denominator, which keeps
/// Gaussian elimination numerically tame.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RationalRing;

impl Ring for RationalRing {
    type Element = Rational;

    fn zero(&self) -> Rational {
        Rational::from_integer(0.into())
    }

    fn one(&self) -> Rational {
        Rational::from_integer(1.into())
    }

    fn is_zero(&self, a: &Rational) -> bool {
        num_traits::Zero::is_zero(a)
    }

    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }

    fn neg(&self, a: &Rational) -> Rational {
        -a
    }

    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }

    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }

    fn from_i64(&self, n: i64) -> Rational {
        Rational::from_integer(n.into())
    }
}

/// Shared operation counters for instrumented runs.
#[derive(Debug, Default)]
pub struct OpCounts {
    pub muls: AtomicU64,
    pub adds: AtomicU64,
}

impl OpCounts {
    pub fn muls(&self) -> u64 {
        self.muls.load(Ordering::Relaxed)
    }

    pub fn adds(&self) -> u64 {
        self.adds.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.muls.store(0, Ordering::Relaxed);
        self.adds.store(0, Ordering::Relaxed);
    }
}

/// Decorator ring that counts multiplications and additions, for cost
/// measurements that do not depend on wall-clock noise. Clones share the
/// same counters.
#[derive(Clone, Debug)]
pub struct CountingRing<R: Ring> {
    inner: R,
    counts: Arc<OpCounts>,
}

impl<R: Ring> CountingRing<R> {
    pub fn new(inner: R) -> Self {
        CountingRing {
            inner,
            counts: Arc::new(OpCounts::default()),
        }
    }

    pub fn counts(&self) -> &OpCounts {
        &self.counts
    }
}

impl<R: Ring> Ring for CountingRing<R> {
    type Element = R::Element;

    fn zero(&self) -> Self::Element {
        self.inner.zero()
    }

    fn one(&self) -> Self::Element {
        self.inner.one()
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        self.inner.is_zero(a)
    }

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.counts.adds.fetch_add(1, Ordering::Relaxed);
        self.inner.add(a, b)
    }

    fn neg(&self, a: &Self::Element) -> Self::Element {
        self.inner.neg(a)
    }

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.counts.muls.fetch_add(1, Ordering::Relaxed);
        self.inner.mul(a, b)
    }

    fn sub(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.counts.adds.fetch_add(1, Ordering::Relaxed);
        self.inner.sub(a, b)
    }

    fn from_i64(&self, n: i64) -> Self::Element {
        self.inner.from_i64(n)
    }

    fn from_int(&self, n: &Int) -> Self::Element {
        self.inner.from_int(n)
    }

    fn add_assign(&self, a: &mut Self::Element, b: &Self::Element) {
        self.counts.adds.fetch_add(1, Ordering::Relaxed);
        self.inner.add_assign(a, b);
    }

    fn mul_add_assign(&self, acc: &mut Self::Element, x: &Self::Element, y: &Self::Element) {
        self.counts.muls.fetch_add(1, Ordering::Relaxed);
        self.counts.adds.fetch_add(1, Ordering::Relaxed);
        self.inner.mul_add_assign(acc, x, y);
    }
}

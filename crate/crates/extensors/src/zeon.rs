//! The commutative algebra with t nilpotent generators ē₁,…,ē_t (ē_i² = 0),
//! stored densely as 2^t coefficients indexed by generator subsets.
//!
//! This algebra is the compact home of color-coding: a product of vertex
//! values survives exactly when all generators involved are distinct. It is
//! isomorphic to the even subalgebra of Λ(F^{2t}) spanned by the lifted unit
//! vectors, but the standalone 2^t representation halves the exponent; the
//! isomorphism itself is exercised by [`zeon_embedding_check`].
//!
//! Two products are provided: a naive O(3^t) subset convolution and a ranked
//! zeta/Möbius transform version costing O(2^t·t²) ring operations. They are
//! exchangeable; the fast form backs the [`Ring`] implementation so zeon
//! values can flow through any generic evaluator.

use crate::error::{Error, Result};
use crate::exterior::{Extensor, ExteriorAlgebra};
use crate::ring::Ring;

/// Hard ceiling on the generator count; dense storage is 2^t coefficients.
pub const MAX_GENERATORS: usize = 24;

/// A zeon value: dense coefficient array of length 2^t, subset-indexed
/// (bit i−1 set ⇔ generator ē_i present).
pub type Zeon<R> = Vec<<R as Ring>::Element>;

/// Ring context for arithmetic on t nilpotent commuting generators over a
/// coefficient ring.
#[derive(Clone, Debug)]
pub struct ZeonRing<R: Ring> {
    inner: R,
    t: usize,
}

impl<R: Ring> ZeonRing<R> {
    pub fn new(inner: R, t: usize) -> Result<Self> {
        if t > MAX_GENERATORS {
            return Err(Error::DimensionTooLarge {
                dim: t,
                max: MAX_GENERATORS,
            });
        }
        Ok(ZeonRing { inner, t })
    }

    pub fn generator_count(&self) -> usize {
        self.t
    }

    pub fn inner(&self) -> &R {
        &self.inner
    }

    fn size(&self) -> usize {
        1usize << self.t
    }

    pub fn scalar(&self, c: R::Element) -> Zeon<R> {
        let mut z = vec![self.inner.zero(); self.size()];
        z[0] = c;
        z
    }

    /// The generator ē_i (1-based index).
    pub fn generator(&self, i: usize) -> Zeon<R> {
        assert!(i >= 1 && i <= self.t, "generator index out of range");
        let mut z = vec![self.inner.zero(); self.size()];
        z[1 << (i - 1)] = self.inner.one();
        z
    }

    /// Scaled generator c·ē_i.
    pub fn scaled_generator(&self, i: usize, c: R::Element) -> Zeon<R> {
        let mut z = vec![self.inner.zero(); self.size()];
        z[1 << (i - 1)] = c;
        z
    }

    pub fn coefficient<'a>(&self, x: &'a Zeon<R>, mask: u32) -> &'a R::Element {
        &x[mask as usize]
    }

    /// Masks and coefficients of all terms of the given grade.
    pub fn grade_coefficients<'a>(
        &self,
        x: &'a Zeon<R>,
        grade: u32,
    ) -> impl Iterator<Item = (u32, &'a R::Element)> {
        x.iter()
            .enumerate()
            .filter(move |(mask, _)| (*mask as u32).count_ones() == grade)
            .map(|(mask, c)| (mask as u32, c))
    }

    fn check_len(&self, x: &Zeon<R>) -> Result<()> {
        if x.len() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Plain subset convolution z_I = Σ_{J⊆I} x_J·y_{I∖J}: O(3^t) ring
    /// multiplications, no signs (the generators commute).
    pub fn multiply_naive(&self, x: &Zeon<R>, y: &Zeon<R>) -> Result<Zeon<R>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let ring = &self.inner;
        let mut out = vec![ring.zero(); self.size()];
        for i in 0..self.size() {
            let acc = &mut out[i];
            let mut j = i;
            loop {
                if !ring.is_zero(&x[j]) {
                    let rest = i & !j;
                    if !ring.is_zero(&y[rest]) {
                        ring.mul_add_assign(acc, &x[j], &y[rest]);
                    }
                }
                if j == 0 {
                    break;
                }
                j = (j - 1) & i;
            }
        }
        Ok(out)
    }

    /// Rank-tracked subset convolution: zeta-transform both operands per
    /// cardinality slice, convolve ranks pointwise, Möbius-invert, and read
    /// off the slice matching each subset's cardinality. O(2^t·t²) ring
    /// operations, identical output to [`Self::multiply_naive`].
    pub fn multiply_fast(&self, x: &Zeon<R>, y: &Zeon<R>) -> Result<Zeon<R>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let ring = &self.inner;
        let t = self.t;
        let size = self.size();

        // ranked[r][s] = Σ_{subsets T ⊆ s with |T| = r} value_T
        let mut rx = self.ranked_zeta(x);
        let ry = self.ranked_zeta(y);

        // Pointwise rank convolution, overwriting rx top-down so each rank
        // slice is consumed before it is replaced. All ranks up to t are
        // needed: slices above a set's cardinality still feed the Möbius
        // inversion of its supersets.
        for s in 0..size {
            for r in (0..=t).rev() {
                let mut acc = ring.zero();
                for a in 0..=r {
                    let xa = &rx[a][s];
                    let yb = &ry[r - a][s];
                    if !ring.is_zero(xa) && !ring.is_zero(yb) {
                        ring.mul_add_assign(&mut acc, xa, yb);
                    }
                }
                rx[r][s] = acc;
            }
        }

        // Möbius inversion per rank slice.
        for slice in rx.iter_mut() {
            for i in 0..t {
                let bit = 1usize << i;
                for s in 0..size {
                    if s & bit != 0 {
                        let (lo, hi) = slice.split_at_mut(s);
                        let d = ring.neg(&lo[s ^ bit]);
                        ring.add_assign(&mut hi[0], &d);
                    }
                }
            }
        }

        Ok((0..size)
            .map(|s| rx[(s as u32).count_ones() as usize][s].clone())
            .collect())
    }

    fn ranked_zeta(&self, x: &Zeon<R>) -> Vec<Vec<R::Element>> {
        let ring = &self.inner;
        let t = self.t;
        let size = self.size();
        let mut ranked: Vec<Vec<R::Element>> = (0..=t)
            .map(|r| {
                (0..size)
                    .map(|s| {
                        if (s as u32).count_ones() as usize == r {
                            x[s].clone()
                        } else {
                            ring.zero()
                        }
                    })
                    .collect()
            })
            .collect();
        for slice in ranked.iter_mut() {
            for i in 0..t {
                let bit = 1usize << i;
                for s in 0..size {
                    if s & bit != 0 {
                        let (lo, hi) = slice.split_at_mut(s);
                        let term = lo[s ^ bit].clone();
                        ring.add_assign(&mut hi[0], &term);
                    }
                }
            }
        }
        ranked
    }
}

impl<R: Ring> Ring for ZeonRing<R> {
    type Element = Zeon<R>;

    fn zero(&self) -> Self::Element {
        vec![self.inner.zero(); self.size()]
    }

    fn one(&self) -> Self::Element {
        self.scalar(self.inner.one())
    }

    fn is_zero(&self, a: &Self::Element) -> bool {
        a.iter().all(|c| self.inner.is_zero(c))
    }

    fn add(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        assert_eq!(a.len(), b.len(), "zeon generator counts differ");
        a.iter()
            .zip(b)
            .map(|(x, y)| self.inner.add(x, y))
            .collect()
    }

    fn add_assign(&self, a: &mut Self::Element, b: &Self::Element) {
        assert_eq!(a.len(), b.len(), "zeon generator counts differ");
        for (x, y) in a.iter_mut().zip(b) {
            self.inner.add_assign(x, y);
        }
    }

    fn neg(&self, a: &Self::Element) -> Self::Element {
        a.iter().map(|x| self.inner.neg(x)).collect()
    }

    fn mul(&self, a: &Self::Element, b: &Self::Element) -> Self::Element {
        self.multiply_fast(a, b)
            .expect("zeon generator counts differ")
    }

    fn from_i64(&self, n: i64) -> Self::Element {
        self.scalar(self.inner.from_i64(n))
    }
}

/// Exterior-algebra image of a zeon: ē_i ↦ e_i∧e_{i+t} in Λ(F^{2t}), extended
/// linearly, with each monomial's factors interleaved in ascending generator
/// order.
pub fn zeon_to_extensor<R: Ring>(
    zr: &ZeonRing<R>,
    alg: &ExteriorAlgebra<R>,
    x: &Zeon<R>,
) -> Result<Extensor<R>> {
    let t = zr.generator_count();
    if alg.dim() != 2 * t {
        return Err(Error::DimensionMismatch {
            expected: 2 * t,
            got: alg.dim(),
        });
    }
    let ring = zr.inner();
    let mut out = alg.zero();
    for (mask, c) in x.iter().enumerate() {
        if ring.is_zero(c) {
            continue;
        }
        // Image of ē_I is ±e_{I ∪ (I+t)}; the sign is the parity of the
        // permutation sorting (i₁, i₁+t, i₂, i₂+t, …) ascending.
        let mut seq: Vec<usize> = Vec::new();
        for i in 0..t {
            if mask & (1 << i) != 0 {
                seq.push(i);
                seq.push(i + t);
            }
        }
        let mut inversions = 0usize;
        for a in 0..seq.len() {
            for b in (a + 1)..seq.len() {
                if seq[a] > seq[b] {
                    inversions += 1;
                }
            }
        }
        let image_mask = mask | (mask << t);
        let signed = if inversions % 2 == 0 {
            c.clone()
        } else {
            ring.neg(c)
        };
        let term = alg.scale(&alg.basis(image_mask as u32), &signed);
        alg.add_assign(&mut out, &term);
    }
    Ok(out)
}

/// Verifies that the zeon product of two values agrees with the wedge of
/// their exterior-algebra images in Λ(F^{2t}).
pub fn zeon_embedding_check<R: Ring>(zr: &ZeonRing<R>, x: &Zeon<R>, y: &Zeon<R>) -> Result<bool> {
    let t = zr.generator_count();
    let alg = ExteriorAlgebra::new(zr.inner().clone(), 2 * t)?;
    let ix = zeon_to_extensor(zr, &alg, x)?;
    let iy = zeon_to_extensor(zr, &alg, y)?;
    let wedge = alg.wedge_general(&ix, &iy)?;
    let product = zr.multiply_naive(x, y)?;
    let image = zeon_to_extensor(zr, &alg, &product)?;
    Ok(wedge == image)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Int, IntegerRing};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn zr(t: usize) -> ZeonRing<IntegerRing> {
        ZeonRing::new(IntegerRing, t).unwrap()
    }

    fn random_zeon(rng: &mut ChaCha12Rng, z: &ZeonRing<IntegerRing>) -> Zeon<IntegerRing> {
        (0..1usize << z.generator_count())
            .map(|_| Int::from(rng.random_range(-4i64..=4)))
            .collect()
    }

    #[test]
    fn generators_square_to_zero() {
        let z = zr(3);
        for i in 1..=3 {
            let g = z.generator(i);
            assert!(z.is_zero(&z.multiply_naive(&g, &g).unwrap()));
        }
    }

    #[test]
    fn distinct_generators_multiply_and_commute() {
        let z = zr(3);
        let g1 = z.generator(1);
        let g2 = z.generator(2);
        let p12 = z.multiply_naive(&g1, &g2).unwrap();
        let p21 = z.multiply_naive(&g2, &g1).unwrap();
        assert_eq!(p12, p21);
        assert_eq!(*z.coefficient(&p12, 0b11), Int::ONE);
        assert_eq!(p12.iter().filter(|c| !c.is_zero()).count(), 1);
    }

    #[test]
    fn binomial_product_expands() {
        // (1+ē₁)(1+ē₂) = 1 + ē₁ + ē₂ + ē₁ē₂
        let z = zr(2);
        let a = z.add(&z.one(), &z.generator(1));
        let b = z.add(&z.one(), &z.generator(2));
        let p = z.multiply_naive(&a, &b).unwrap();
        assert_eq!(p, vec![Int::ONE, Int::ONE, Int::ONE, Int::ONE]);
    }

    #[test]
    fn fast_product_matches_naive() {
        let mut rng = ChaCha12Rng::seed_from_u64(31);
        for t in [0usize, 1, 2, 3, 5, 7, 10] {
            let z = zr(t);
            let pairs = if t <= 7 { 60 } else { 10 };
            for _ in 0..pairs {
                let x = random_zeon(&mut rng, &z);
                let y = random_zeon(&mut rng, &z);
                assert_eq!(
                    z.multiply_fast(&x, &y).unwrap(),
                    z.multiply_naive(&x, &y).unwrap(),
                    "t = {t}"
                );
            }
        }
    }

    #[test]
    fn unit_and_zero_behave() {
        let mut rng = ChaCha12Rng::seed_from_u64(37);
        let z = zr(4);
        let x = random_zeon(&mut rng, &z);
        assert_eq!(z.multiply_fast(&x, &z.one()).unwrap(), x);
        assert_eq!(z.multiply_fast(&z.one(), &x).unwrap(), x);
        assert!(z.is_zero(&z.multiply_fast(&x, &z.zero()).unwrap()));
    }

    #[test]
    fn product_is_commutative_and_associative() {
        let mut rng = ChaCha12Rng::seed_from_u64(41);
        let z = zr(5);
        for _ in 0..25 {
            let x = random_zeon(&mut rng, &z);
            let y = random_zeon(&mut rng, &z);
            let w = random_zeon(&mut rng, &z);
            assert_eq!(z.mul(&x, &y), z.mul(&y, &x));
            assert_eq!(z.mul(&z.mul(&x, &y), &w), z.mul(&x, &z.mul(&y, &w)));
        }
    }

    #[test]
    fn embedding_of_generator_pair() {
        // image(ē₁·ē₂) at t=3 is e₁∧e₄∧e₂∧e₅, i.e. −e₁∧e₂∧e₄∧e₅ once sorted.
        let z = zr(3);
        let alg = ExteriorAlgebra::new(IntegerRing, 6).unwrap();
        let p = z.multiply_naive(&z.generator(1), &z.generator(2)).unwrap();
        let image = zeon_to_extensor(&z, &alg, &p).unwrap();
        let mask = 0b011011u32; // {1,2,4,5}
        assert_eq!(*image.coefficient(mask), Int::from(-1i64));
        assert!(zeon_embedding_check(&z, &z.generator(1), &z.generator(2)).unwrap());
    }

    #[test]
    fn embedding_respects_products() {
        let mut rng = ChaCha12Rng::seed_from_u64(43);
        for t in [1usize, 2, 3] {
            let z = zr(t);
            for _ in 0..15 {
                let x = random_zeon(&mut rng, &z);
                let y = random_zeon(&mut rng, &z);
                assert!(zeon_embedding_check(&z, &x, &y).unwrap(), "t = {t}");
            }
        }
        // monomial pair at the documented size cap
        let z = zr(7);
        let x = z.generator(3);
        let y = z.multiply_naive(&z.generator(1), &z.generator(7)).unwrap();
        assert!(zeon_embedding_check(&z, &x, &y).unwrap());
        assert!(zeon_embedding_check(&z, &z.zero(), &z.zero()).unwrap());
    }

    #[test]
    fn grade_coefficients_select_by_cardinality() {
        let z = zr(3);
        let mut x = z.one();
        z.add_assign(&mut x, &z.generator(2));
        let grade1: Vec<_> = z.grade_coefficients(&x, 1).collect();
        assert_eq!(grade1.len(), 3);
        let nonzero: Vec<_> = grade1
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        assert_eq!(nonzero, vec![(0b010u32, &Int::ONE)]);
    }

    #[test]
    fn generator_count_cap() {
        assert!(ZeonRing::new(IntegerRing, 25).is_err());
        let z = zr(2);
        let short = vec![Int::ONE];
        assert!(z.multiply_naive(&short, &z.one()).is_err());
    }
}

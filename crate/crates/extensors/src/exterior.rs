//! Dense exterior-algebra arithmetic in Λ(F^d).
//!
//! An extensor is stored as a dense array of 2^d ring coefficients indexed
//! by subset bitmask: bit i−1 of the mask is set exactly when basis index i
//! is in the subset, so the mask `0b101` houses the coordinate of e₁∧e₃.
//! Dense storage is deliberate — walk-sum workloads fill most coordinates,
//! and subset iteration over a flat array is branch-light.
//!
//! Three products are provided: the skew product against a single vector
//! (O(2^d·d) multiplications), the skew product against a decomposable
//! grade-2 blade (two vector passes), and the general alternating subset
//! convolution (O(3^d)). Algorithm hot paths only ever need the skew
//! products; the general product serves tests and cross-checks.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Hard ceiling on the algebra dimension accepted by [`ExteriorAlgebra::new`];
/// dense storage is 2^d coefficients, so d beyond this is a usage error.
pub const DEFAULT_MAX_DIM: usize = 28;

/// Sign of the permutation that merges two disjoint ascending index sets,
/// i.e. (−1)^{#{(i,j) ∈ I×J : i > j}}.
pub fn subset_sign(i: u32, j: u32) -> Result<i8> {
    if i & j != 0 {
        return Err(Error::OverlappingSubsets { i, j });
    }
    Ok(subset_sign_unchecked(i, j))
}

#[inline]
pub(crate) fn subset_sign_unchecked(i: u32, j: u32) -> i8 {
    let mut swaps = 0u32;
    let mut rest = j;
    while rest != 0 {
        let b = rest.trailing_zeros();
        swaps ^= (i >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    if swaps & 1 == 0 {
        1
    } else {
        -1
    }
}

/// (−1)^{k(k−1)/2}: the uniform sign picked up when a product of k lifted
/// blades is reordered into a square of determinants.
pub fn lift_sign(k: usize) -> i8 {
    if (k * (k.wrapping_sub(1)) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A grade-1 extensor: one coefficient per basis vector of F^d.
#[derive(Clone, Debug)]
pub struct ExtVector<R: Ring> {
    entries: Vec<R::Element>,
}

impl<R: Ring> PartialEq for ExtVector<R> {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl<R: Ring> ExtVector<R> {
    pub fn new(entries: Vec<R::Element>) -> Self {
        ExtVector { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[R::Element] {
        &self.entries
    }

    /// The i-th canonical basis vector of F^d (0-based).
    pub fn basis(ring: &R, dim: usize, i: usize) -> Self {
        let mut entries = vec![ring.zero(); dim];
        entries[i] = ring.one();
        ExtVector { entries }
    }
}

/// A decomposable grade-2 extensor stored as its two factor vectors; the
/// product form of lifted codings. Kept factored so that wedging by it is
/// two cheap vector passes instead of a general product.
#[derive(Clone, Debug)]
pub struct Blade2<R: Ring> {
    pub first: ExtVector<R>,
    pub second: ExtVector<R>,
}

impl<R: Ring> PartialEq for Blade2<R> {
    fn eq(&self, other: &Self) -> bool {
        self.first == other.first && self.second == other.second
    }
}

impl<R: Ring> Blade2<R> {
    pub fn new(first: ExtVector<R>, second: ExtVector<R>) -> Result<Self> {
        if first.dim() != second.dim() {
            return Err(Error::DimensionMismatch {
                expected: first.dim(),
                got: second.dim(),
            });
        }
        Ok(Blade2 { first, second })
    }

    pub fn dim(&self) -> usize {
        self.first.dim()
    }
}

/// Doubles a vector v ∈ F^k into the blade (v,0)∧(0,v) ∈ Λ²(F^{2k}).
pub fn lift<R: Ring>(ring: &R, v: &ExtVector<R>) -> Blade2<R> {
    let k = v.dim();
    let mut first = Vec::with_capacity(2 * k);
    let mut second = vec![ring.zero(); k];
    first.extend(v.entries().iter().cloned());
    first.extend(std::iter::repeat_with(|| ring.zero()).take(k));
    second.extend(v.entries().iter().cloned());
    Blade2 {
        first: ExtVector::new(first),
        second: ExtVector::new(second),
    }
}

/// An element of Λ(F^d) as a dense coefficient array of length 2^d.
#[derive(Clone, Debug)]
pub struct Extensor<R: Ring> {
    dim: usize,
    coeffs: Vec<R::Element>,
}

impl<R: Ring> PartialEq for Extensor<R> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.coeffs == other.coeffs
    }
}

impl<R: Ring> Extensor<R> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficients(&self) -> &[R::Element] {
        &self.coeffs
    }

    pub fn coefficient(&self, mask: u32) -> &R::Element {
        &self.coeffs[mask as usize]
    }

    /// Coefficient of the full-set basis extensor e_{[d]}.
    pub fn top_coefficient(&self) -> &R::Element {
        &self.coeffs[self.coeffs.len() - 1]
    }
}

/// Context object for Λ(F^d) arithmetic over a fixed ring.
#[derive(Clone, Debug)]
pub struct ExteriorAlgebra<R: Ring> {
    ring: R,
    dim: usize,
}

impl<R: Ring> ExteriorAlgebra<R> {
    pub fn new(ring: R, dim: usize) -> Result<Self> {
        Self::with_max_dim(ring, dim, DEFAULT_MAX_DIM)
    }

    /// Constructor with an explicit dimension cap for callers that want a
    /// tighter (or, at their own risk, looser) storage budget.
    pub fn with_max_dim(ring: R, dim: usize, max_dim: usize) -> Result<Self> {
        if dim > max_dim || dim > 31 {
            return Err(Error::DimensionTooLarge { dim, max: max_dim });
        }
        Ok(ExteriorAlgebra { ring, dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    fn size(&self) -> usize {
        1usize << self.dim
    }

    pub fn zero(&self) -> Extensor<R> {
        Extensor {
            dim: self.dim,
            coeffs: vec![self.ring.zero(); self.size()],
        }
    }

    pub fn scalar(&self, c: R::Element) -> Extensor<R> {
        let mut x = self.zero();
        x.coeffs[0] = c;
        x
    }

    pub fn one(&self) -> Extensor<R> {
        self.scalar(self.ring.one())
    }

    /// The basis extensor e_I for a subset mask.
    pub fn basis(&self, mask: u32) -> Extensor<R> {
        assert!((mask as usize) < self.size(), "basis mask out of range");
        let mut x = self.zero();
        x.coeffs[mask as usize] = self.ring.one();
        x
    }

    /// Embeds a vector as a grade-1 extensor.
    pub fn from_vector(&self, v: &ExtVector<R>) -> Result<Extensor<R>> {
        self.check_dim(v.dim())?;
        let mut x = self.zero();
        for (i, e) in v.entries().iter().enumerate() {
            x.coeffs[1 << i] = e.clone();
        }
        Ok(x)
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got,
            });
        }
        Ok(())
    }

    pub fn is_zero(&self, x: &Extensor<R>) -> bool {
        x.coeffs.iter().all(|c| self.ring.is_zero(c))
    }

    pub fn add(&self, x: &Extensor<R>, y: &Extensor<R>) -> Result<Extensor<R>> {
        self.check_dim(x.dim)?;
        self.check_dim(y.dim)?;
        let mut out = x.clone();
        self.add_assign(&mut out, y);
        Ok(out)
    }

    pub fn add_assign(&self, x: &mut Extensor<R>, y: &Extensor<R>) {
        debug_assert_eq!(x.dim, y.dim);
        for (a, b) in x.coeffs.iter_mut().zip(&y.coeffs) {
            self.ring.add_assign(a, b);
        }
    }

    pub fn neg(&self, x: &Extensor<R>) -> Extensor<R> {
        Extensor {
            dim: x.dim,
            coeffs: x.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }

    pub fn sub(&self, x: &Extensor<R>, y: &Extensor<R>) -> Result<Extensor<R>> {
        Ok(self.add(x, &self.neg(y))?)
    }

    pub fn scale(&self, x: &Extensor<R>, c: &R::Element) -> Extensor<R> {
        Extensor {
            dim: x.dim,
            coeffs: x.coeffs.iter().map(|q| self.ring.mul(q, c)).collect(),
        }
    }

    /// Skew product x∧v against a single vector: O(2^d·d) multiplications.
    pub fn wedge_vector(&self, x: &Extensor<R>, v: &ExtVector<R>) -> Result<Extensor<R>> {
        self.check_dim(x.dim)?;
        self.check_dim(v.dim())?;
        let mut out = self.zero();
        self.wedge_vector_acc(&mut out.coeffs, &x.coeffs, v.entries());
        Ok(out)
    }

    /// acc += x∧v on raw coefficient slices; the inner loop of every
    /// skew evaluation.
    pub(crate) fn wedge_vector_acc(
        &self,
        acc: &mut [R::Element],
        x: &[R::Element],
        v: &[R::Element],
    ) {
        let ring = &self.ring;
        for (j, vj) in v.iter().enumerate() {
            if ring.is_zero(vj) {
                continue;
            }
            let bit = 1usize << j;
            for mask in 0..x.len() {
                if mask & bit != 0 {
                    continue;
                }
                let c = &x[mask];
                if ring.is_zero(c) {
                    continue;
                }
                // sign of inserting index j into the ascending set `mask`:
                // parity of the number of set bits above position j.
                let sign_neg = ((mask >> (j + 1)).count_ones() & 1) == 1;
                let p = ring.mul(c, vj);
                if sign_neg {
                    let n = ring.neg(&p);
                    ring.add_assign(&mut acc[mask | bit], &n);
                } else {
                    ring.add_assign(&mut acc[mask | bit], &p);
                }
            }
        }
    }

    /// Skew product against a decomposable grade-2 blade: two vector passes.
    pub fn wedge_blade(&self, x: &Extensor<R>, b: &Blade2<R>) -> Result<Extensor<R>> {
        self.check_dim(x.dim)?;
        self.check_dim(b.dim())?;
        let mut mid = self.zero();
        self.wedge_vector_acc(&mut mid.coeffs, &x.coeffs, b.first.entries());
        let mut out = self.zero();
        self.wedge_vector_acc(&mut out.coeffs, &mid.coeffs, b.second.entries());
        Ok(out)
    }

    /// The blade as a plain extensor (first∧second), for cross-checks.
    pub fn expand_blade(&self, b: &Blade2<R>) -> Result<Extensor<R>> {
        let first = self.from_vector(&b.first)?;
        self.wedge_vector(&first, &b.second)
    }

    /// General product by alternating subset convolution:
    /// z_I = Σ_{J⊆I} (−1)^{sgn(J, I∖J)} x_J·y_{I∖J}, O(3^d) multiplications.
    pub fn wedge_general(&self, x: &Extensor<R>, y: &Extensor<R>) -> Result<Extensor<R>> {
        self.check_dim(x.dim)?;
        self.check_dim(y.dim)?;
        let ring = &self.ring;
        let mut out = self.zero();
        for i in 0..self.size() {
            let acc = &mut out.coeffs[i];
            // Enumerate J over all subsets of I (descending), pairing x_J
            // with y_{I∖J}.
            let mut j = i;
            loop {
                let xj = &x.coeffs[j];
                if !ring.is_zero(xj) {
                    let rest = i & !j;
                    let yr = &y.coeffs[rest];
                    if !ring.is_zero(yr) {
                        let p = ring.mul(xj, yr);
                        if subset_sign_unchecked(j as u32, rest as u32) < 0 {
                            let n = ring.neg(&p);
                            ring.add_assign(acc, &n);
                        } else {
                            ring.add_assign(acc, &p);
                        }
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

    /// Wedges d vectors of F^d together and returns the coefficient of
    /// e_{[d]}, which is the determinant of the matrix with the vectors as
    /// columns.
    pub fn wedge_vectors_det(&self, vs: &[ExtVector<R>]) -> Result<R::Element> {
        if vs.len() != self.dim {
            return Err(Error::WrongVectorCount {
                expected: self.dim,
                got: vs.len(),
            });
        }
        let mut acc = self.one();
        for v in vs {
            acc = self.wedge_vector(&acc, v)?;
        }
        Ok(acc.top_coefficient().clone())
    }
}

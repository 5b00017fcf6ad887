//! Deterministic k-path detection through representative path families.
//!
//! For every vertex v and length p the algorithm keeps a small set of
//! p-vertex paths ending at v whose wedge products φ(v₁)∧…∧φ(v_p) form a
//! basis of the span of *all* such path extensors. Because extending a
//! path by an edge acts linearly on its extensor (wedging with the new
//! endpoint's code), any path that could be extended to a full k-path is a
//! linear combination of the representatives — so if some p-path survives
//! to length k, a representative does too. Each family therefore has at
//! most C(k, p) members (the dimension of the grade-p slice), and the
//! k-level families are nonempty exactly when a k-path exists.
//!
//! All linear algebra is exact over the rationals: candidate rows are
//! reduced against a maintained reduced row-echelon basis and inserted only
//! when independent.

use crate::coding::vandermonde_vectors;
use crate::error::Result;
use crate::exterior::{Extensor, ExteriorAlgebra};
use crate::graph::Digraph;
use crate::paths::{check_k, MAX_PATH_K};
use crate::ring::{Rational, RationalRing};

/// A basis of path extensors ending at one vertex, with the witnessing
/// paths. Rows are kept in reduced row-echelon form so membership tests
/// and insertions are a single elimination pass.
#[derive(Clone, Debug, Default)]
pub struct RepresentativeFamily {
    paths: Vec<Vec<usize>>,
    extensors: Vec<Extensor<RationalRing>>,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RepresentativeFamily {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// The stored witness paths, as vertex sequences.
    pub fn paths(&self) -> impl Iterator<Item = &[usize]> {
        self.paths.iter().map(Vec::as_slice)
    }

    /// Whether `coords` lies in the span of the stored extensors.
    pub fn spans(&self, coords: &[Rational]) -> bool {
        self.reduce(coords.to_vec()).is_none()
    }

    /// Eliminates `row` against the basis; `None` if it reduced to zero,
    /// otherwise the residual together with its pivot column.
    fn reduce(&self, mut row: Vec<Rational>) -> Option<(Vec<Rational>, usize)> {
        for (basis_row, &pivot) in self.rows.iter().zip(&self.pivots) {
            let factor = row[pivot].clone();
            if factor == Rational::default() {
                continue;
            }
            for (entry, basis_entry) in row.iter_mut().zip(basis_row) {
                *entry -= &factor * basis_entry;
            }
        }
        let pivot = row.iter().position(|x| *x != Rational::default())?;
        Some((row, pivot))
    }

    /// Inserts the path when its extensor is independent of the family.
    fn try_insert(&mut self, path: Vec<usize>, extensor: Extensor<RationalRing>) -> bool {
        let Some((mut row, pivot)) = self.reduce(extensor.coefficients().to_vec()) else {
            return false;
        };
        let lead = row[pivot].clone();
        for entry in &mut row {
            *entry /= &lead;
        }
        // Keep the basis fully reduced: clear the new pivot column from
        // every existing row so later eliminations are order-independent.
        for existing in &mut self.rows {
            let factor = existing[pivot].clone();
            if factor == Rational::default() {
                continue;
            }
            for (entry, new_entry) in existing.iter_mut().zip(&row) {
                *entry -= &factor * new_entry;
            }
        }
        self.rows.push(row);
        self.pivots.push(pivot);
        self.paths.push(path);
        self.extensors.push(extensor);
        true
    }
}

/// Builds the full table of representative families: `result[p - 1][v]` is
/// the family of p-vertex paths ending at v, for p = 1..=k.
pub fn representative_families(g: &Digraph, k: usize) -> Result<Vec<Vec<RepresentativeFamily>>> {
    check_k(k, MAX_PATH_K)?;
    let n = g.n();
    let ring = RationalRing;
    let alg = ExteriorAlgebra::new(ring, k)?;
    let codes = vandermonde_vectors(&ring, n, k);

    let mut levels: Vec<Vec<RepresentativeFamily>> = Vec::with_capacity(k);
    let mut first: Vec<RepresentativeFamily> = vec![RepresentativeFamily::default(); n];
    for (v, family) in first.iter_mut().enumerate() {
        let ext = alg.from_vector(&codes[v])?;
        family.try_insert(vec![v], ext);
    }
    levels.push(first);

    for _p in 2..=k {
        let mut next: Vec<RepresentativeFamily> = vec![RepresentativeFamily::default(); n];
        let prev = levels.last().expect("at least one level exists");
        for family in prev {
            for (path, ext) in family.paths.iter().zip(&family.extensors) {
                let last = *path.last().expect("stored paths are nonempty");
                for &(w, _edge) in g.out_neighbors(last) {
                    if path.contains(&w) {
                        continue;
                    }
                    let extended = alg.wedge_vector(ext, &codes[w])?;
                    if alg.is_zero(&extended) {
                        continue;
                    }
                    let mut new_path = path.clone();
                    new_path.push(w);
                    next[w].try_insert(new_path, extended);
                }
            }
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Deterministic k-path detection: true iff some representative family at
/// level k is nonempty, which happens exactly when `g` has a k-vertex
/// simple path.
pub fn detect_representative(g: &Digraph, k: usize) -> Result<bool> {
    check_k(k, MAX_PATH_K)?;
    if k > g.n() {
        return Ok(false);
    }
    let levels = representative_families(g, k)?;
    Ok(levels[k - 1].iter().any(|f| !f.is_empty()))
}

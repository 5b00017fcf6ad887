use std::collections::BTreeMap;
use std::fmt;

use super::{Int, Ring};
use crate::error::{Error, Result};

/// A subset of a fixed variable universe `{0, …, m−1}`, stored as a bitset.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarSet {
    blocks: Vec<u64>,
}

fn block_count(universe: usize) -> usize {
    universe.div_ceil(64).max(1)
}

impl VarSet {
    pub fn empty(universe: usize) -> VarSet {
        VarSet {
            blocks: vec![0; block_count(universe)],
        }
    }

    pub fn singleton(universe: usize, var: usize) -> VarSet {
        debug_assert!(var < universe.max(1));
        let mut s = VarSet::empty(universe);
        s.blocks[var / 64] |= 1u64 << (var % 64);
        s
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn intersects(&self, other: &VarSet) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .any(|(a, b)| a & b != 0)
    }

    pub fn union(&self, other: &VarSet) -> VarSet {
        VarSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut b = block;
            std::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let bit = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(i * 64 + bit)
                }
            })
        })
    }
}

/// A multilinear polynomial over the integers in a fixed variable universe,
/// stored as a sparse subset-to-coefficient map with no zero entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    universe: usize,
    terms: BTreeMap<VarSet, Int>,
}

impl SparsePoly {
    pub fn zero(universe: usize) -> SparsePoly {
        SparsePoly {
            universe,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(universe: usize, c: Int) -> SparsePoly {
        let mut p = SparsePoly::zero(universe);
        if !c.is_zero() {
            p.terms.insert(VarSet::empty(universe), c);
        }
        p
    }

    pub fn variable(universe: usize, var: usize) -> SparsePoly {
        let mut p = SparsePoly::zero(universe);
        p.terms.insert(VarSet::singleton(universe, var), Int::ONE);
        p
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, monomial: &VarSet) -> Int {
        self.terms.get(monomial).cloned().unwrap_or(Int::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VarSet, &Int)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, monomial: VarSet, coeff: Int) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&coeff);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        if self.universe != other.universe {
            return Err(Error::VariableUniverseMismatch(
                self.universe,
                other.universe,
            ));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Int) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.universe);
        }
        SparsePoly {
            universe: self.universe,
            terms: self
                .terms
                .iter()
                .map(|(m, q)| (m.clone(), q.mul(c)))
                .collect(),
        }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for v in m.vars() {
                write!(f, "*y{}", v + 1)?;
            }
        }
        Ok(())
    }
}

/// Multiplies two polynomials over the same universe. When `multilinear` is
/// set, any monomial pair sharing a variable is dropped (the multilinear
/// quotient); otherwise such a pair is an error.
pub fn sparse_poly_multiply(
    x: &SparsePoly,
    y: &SparsePoly,
    multilinear: bool,
) -> Result<SparsePoly> {
    if x.universe != y.universe {
        return Err(Error::VariableUniverseMismatch(x.universe, y.universe));
    }
    let mut out = SparsePoly::zero(x.universe);
    for (mx, cx) in &x.terms {
        for (my, cy) in &y.terms {
            if mx.intersects(my) {
                if multilinear {
                    continue;
                }
                return Err(Error::NonMultilinearProduct);
            }
            out.insert_term(mx.union(my), cx.mul(cy));
        }
    }
    Ok(out)
}

/// Ring descriptor for [`SparsePoly`] values over a fixed universe.
///
/// Products that would square a variable follow the ring's `multilinear`
/// flag: dropped in multilinear mode, and a panic otherwise (the trait has
/// no error channel; strict-mode callers must guarantee disjoint supports,
/// which every evaluation path in this crate does).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SparsePolyRing {
    pub universe: usize,
    pub multilinear: bool,
}

impl SparsePolyRing {
    pub fn multilinear(universe: usize) -> SparsePolyRing {
        SparsePolyRing {
            universe,
            multilinear: true,
        }
    }
}

impl Ring for SparsePolyRing {
    type Element = SparsePoly;

    fn zero(&self) -> SparsePoly {
        SparsePoly::zero(self.universe)
    }

    fn one(&self) -> SparsePoly {
        SparsePoly::constant(self.universe, Int::ONE)
    }

    fn is_zero(&self, a: &SparsePoly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        a.add(b).expect("ring elements share the universe")
    }

    fn neg(&self, a: &SparsePoly) -> SparsePoly {
        a.neg()
    }

    fn mul(&self, a: &SparsePoly, b: &SparsePoly) -> SparsePoly {
        sparse_poly_multiply(a, b, self.multilinear)
            .expect("overlapping monomials in a strict-mode polynomial product")
    }

    fn from_i64(&self, n: i64) -> SparsePoly {
        SparsePoly::constant(self.universe, Int::from(n))
    }
}

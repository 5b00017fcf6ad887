//! Deterministic detection when the number of k-paths is promised small.
//!
//! Pipeline: build a skew circuit K that computes the walk sum over the
//! exterior algebra with an extra scalar variable y_e on every edge; expand
//! K coordinate-by-coordinate into a circuit L over Z[y₁…y_m] whose value
//! is the top extensor coefficient; decide whether L is identically zero.
//! Each k-path P contributes det(Φ_P)·∏_{e∈P} y_e to L, and distinct paths
//! have distinct edge sets, hence distinct monomials — so L ≡ 0 exactly
//! when there is no k-path, no matter how the unlifted determinants would
//! have cancelled numerically.
//!
//! Zero-testing a multilinear circuit with a promised bound of C monomials
//! is deterministic here: at y_j = p_j^s the value of a monomial is z^s for
//! z = ∏ p_e, and distinct monomials get distinct z by unique
//! factorization, so the (C+1)×(≤C+1) evaluation matrix over s = 0..C is
//! Vandermonde and nonsingular. A randomized single-point evaluation over a
//! fresh 62-bit prime field is available as a fast mode.

use std::collections::HashMap;

use rand::Rng;

use crate::circuit::{eval_circuit, Circuit, CircuitBuilder, Gate};
use crate::coding::{tags, SeedSpec};
use crate::error::{Error, Result};
use crate::exterior::subset_sign_unchecked;
use crate::graph::Digraph;
use crate::paths::{check_k, MAX_PATH_K};
use crate::ring::{prime_field_create, Int, IntegerRing};

/// Builds the skew walk-sum circuit K over n + m variables: variables
/// 0..n stand for the vertex codes (to be interpreted as extensors by the
/// expansion step), variables n..n+m for scalar edge weights, edge j of
/// `g.edges()` owning variable n+j. Every multiplication has an input gate
/// on the right, which is what makes the coordinate expansion linear-time
/// per gate.
pub fn build_walk_circuit(g: &Digraph, k: usize) -> Result<Circuit> {
    check_k(k, MAX_PATH_K)?;
    let n = g.n();
    let m = g.m();
    let mut b = CircuitBuilder::new(n + m);

    let vertex_in: Vec<usize> = (0..n).map(|v| b.input(v)).collect();
    let edge_in: Vec<usize> = (0..m).map(|j| b.input(n + j)).collect();

    let mut incoming: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (j, &(u, v)) in g.edges().iter().enumerate() {
        incoming[v].push((u, j));
    }

    // state[v] = gate computing the sum over r-vertex walks ending at v.
    let mut state: Vec<Option<usize>> = vertex_in.iter().copied().map(Some).collect();
    for _round in 2..=k {
        let mut next: Vec<Option<usize>> = vec![None; n];
        for v in 0..n {
            let mut terms = Vec::new();
            for &(u, j) in &incoming[v] {
                if let Some(s) = state[u] {
                    let weighted = b.mul(s, edge_in[j]);
                    terms.push(b.mul(weighted, vertex_in[v]));
                }
            }
            next[v] = b.add_chain(&terms);
        }
        state = next;
    }

    let alive: Vec<usize> = state.into_iter().flatten().collect();
    let output = match b.add_chain(&alive) {
        Some(gate) => gate,
        None => b.constant(Int::ZERO), // no k-walk structure at all
    };
    b.finish(output)
}

/// Expands a skew circuit over (vertex extensor, edge scalar) variables
/// into a circuit over the edge variables alone, computing the top
/// (grade-k) coordinate of the original value. Gate coordinates are
/// materialized lazily: only the (gate, index-set) pairs reachable from the
/// top coordinate of the output are built. Returns `None` when that
/// coordinate is structurally absent, i.e. the expanded polynomial is the
/// zero polynomial for grade reasons.
///
/// Vertex variable v expands to the Vandermonde column (1, v+1, (v+1)²,
/// …); an index set of size one selects the matching entry, anything else
/// is zero. Multiplications with a vertex operand split over the index
/// set with the wedge sign; scalar operands (edge variables, constants)
/// pass the index set through.
pub fn expand_to_edge_circuit(
    circuit: &Circuit,
    k: usize,
    vertex_vars: usize,
) -> Result<Option<Circuit>> {
    check_k(k, MAX_PATH_K)?;
    if circuit.num_vars() < vertex_vars {
        return Err(Error::CircuitEval(format!(
            "circuit has {} variables, fewer than the {} vertex variables claimed",
            circuit.num_vars(),
            vertex_vars
        )));
    }
    let mut exp = Expander {
        circ: circuit,
        vertex_vars,
        builder: CircuitBuilder::new(circuit.num_vars() - vertex_vars),
        memo: HashMap::new(),
    };
    let full = ((1u64 << k) - 1) as u32;
    match exp.coord(circuit.output(), full)? {
        Some(top) => Ok(Some(exp.builder.finish(top)?)),
        None => Ok(None),
    }
}

struct Expander<'a> {
    circ: &'a Circuit,
    vertex_vars: usize,
    builder: CircuitBuilder,
    memo: HashMap<(usize, u32), Option<usize>>,
}

impl Expander<'_> {
    /// Kind of operand a multiplication can be resolved against.
    fn scalar_operand(&self, gate: usize) -> Option<ScalarOperand> {
        match self.circ.gates()[gate] {
            Gate::Input(w) if w >= self.vertex_vars => {
                Some(ScalarOperand::EdgeVar(w - self.vertex_vars))
            }
            Gate::Const(ref c) => Some(ScalarOperand::Const(c.clone())),
            _ => None,
        }
    }

    fn vertex_operand(&self, gate: usize) -> Option<usize> {
        match self.circ.gates()[gate] {
            Gate::Input(w) if w < self.vertex_vars => Some(w),
            _ => None,
        }
    }

    /// The Vandermonde entry (v+1)^power as a constant gate.
    fn phi_const(&mut self, v: usize, power: usize) -> usize {
        let value = Int::from(v as i64 + 1).pow(power as u32);
        self.builder.constant(value)
    }

    fn coord(&mut self, gate: usize, mask: u32) -> Result<Option<usize>> {
        if let Some(&hit) = self.memo.get(&(gate, mask)) {
            return Ok(hit);
        }
        let out = match self.circ.gates()[gate] {
            Gate::Input(w) => {
                if w < self.vertex_vars {
                    // Extensor-valued: one Vandermonde entry per singleton.
                    if mask.count_ones() == 1 {
                        let power = mask.trailing_zeros() as usize;
                        Some(self.phi_const(w, power))
                    } else {
                        None
                    }
                } else if mask == 0 {
                    Some(self.builder.input(w - self.vertex_vars))
                } else {
                    None
                }
            }
            Gate::Const(ref c) => {
                if mask == 0 && !c.is_zero() {
                    let c = c.clone();
                    Some(self.builder.constant(c))
                } else {
                    None
                }
            }
            Gate::Add(a, b) => {
                let left = self.coord(a, mask)?;
                let right = self.coord(b, mask)?;
                match (left, right) {
                    (Some(l), Some(r)) => Some(self.builder.add(l, r)),
                    (one, None) | (None, one) => one,
                }
            }
            Gate::Mul(a, b) => self.expand_mul(gate, a, b, mask)?,
        };
        self.memo.insert((gate, mask), out);
        Ok(out)
    }

    fn expand_mul(
        &mut self,
        gate: usize,
        a: usize,
        b: usize,
        mask: u32,
    ) -> Result<Option<usize>> {
        // Scalar operands multiply coordinate-wise; try the right operand
        // first (the shape build_walk_circuit emits), then the left.
        if let Some(op) = self.scalar_operand(b) {
            return self.mul_scalar(a, op, mask);
        }
        if let Some(op) = self.scalar_operand(a) {
            return self.mul_scalar(b, op, mask);
        }
        if let Some(v) = self.vertex_operand(b) {
            return self.mul_vertex(a, v, mask, VertexSide::Right);
        }
        if let Some(v) = self.vertex_operand(a) {
            return self.mul_vertex(b, v, mask, VertexSide::Left);
        }
        Err(Error::NonSkewCircuit { gate })
    }

    fn mul_scalar(&mut self, other: usize, op: ScalarOperand, mask: u32) -> Result<Option<usize>> {
        let Some(inner) = self.coord(other, mask)? else {
            return Ok(None);
        };
        Ok(Some(match op {
            ScalarOperand::EdgeVar(j) => {
                let y = self.builder.input(j);
                self.builder.mul(inner, y)
            }
            ScalarOperand::Const(c) => {
                if c.is_zero() {
                    return Ok(None);
                }
                let cg = self.builder.constant(c);
                self.builder.mul(inner, cg)
            }
        }))
    }

    /// Coordinate of `other ∧ φ(v)` (or `φ(v) ∧ other`): peel each element
    /// j of the index set, weight by the matching Vandermonde entry, and
    /// apply the side-dependent wedge sign.
    fn mul_vertex(
        &mut self,
        other: usize,
        v: usize,
        mask: u32,
        side: VertexSide,
    ) -> Result<Option<usize>> {
        let mut terms = Vec::new();
        let mut rem = mask;
        while rem != 0 {
            let j = rem.trailing_zeros();
            rem &= rem - 1;
            let bit = 1u32 << j;
            let rest = mask & !bit;
            let Some(inner) = self.coord(other, rest)? else {
                continue;
            };
            let sign = match side {
                VertexSide::Right => subset_sign_unchecked(rest, bit),
                VertexSide::Left => subset_sign_unchecked(bit, rest),
            };
            let coeff = Int::from(i64::from(sign)).mul(&Int::from(v as i64 + 1).pow(j));
            let cg = self.builder.constant(coeff);
            terms.push(self.builder.mul(inner, cg));
        }
        Ok(self.builder.add_chain(&terms))
    }
}

enum ScalarOperand {
    EdgeVar(usize),
    Const(Int),
}

#[derive(Clone, Copy)]
enum VertexSide {
    Left,
    Right,
}

/// First `m` primes by trial division; plenty fast for edge counts.
fn first_primes(m: usize) -> Vec<u64> {
    let mut primes: Vec<u64> = Vec::with_capacity(m);
    let mut candidate = 2u64;
    while primes.len() < m {
        if primes.iter().take_while(|&&p| p * p <= candidate).all(|&p| candidate % p != 0) {
            primes.push(candidate);
        }
        candidate += 1;
    }
    primes
}

/// Deterministically decides whether the multilinear polynomial computed by
/// `l` (over its edge variables) is nonzero, under the promise that it has
/// at most `c` monomials. Evaluates at y_j = p_j^s for s = 0..=c; returns
/// true iff some evaluation is nonzero.
pub fn zero_test_prime_encoding(l: &Circuit, c: u64) -> Result<bool> {
    let ring = IntegerRing;
    let primes = first_primes(l.num_vars());
    for s in 0..=c {
        let point: Vec<Int> = primes
            .iter()
            .map(|&p| Int::from(p as i64).pow(s as u32))
            .collect();
        if !eval_circuit(&ring, l, &point)?.is_zero() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Randomized one-point zero test over a fresh 62-bit prime field: `true`
/// is always correct; a `false` on a nonzero polynomial has probability
/// bounded by degree/p, which is astronomically small here.
pub fn zero_test_random_field(l: &Circuit, seed: SeedSpec) -> Result<bool> {
    let mut rng = seed.trial_rng(tags::PRIME, 0);
    let field = prime_field_create(62, &mut rng)?;
    let point: Vec<u64> = (0..l.num_vars())
        .map(|_| rng.random_range(0..field.modulus()))
        .collect();
    Ok(eval_circuit(&field, l, &point)? != 0)
}

/// Decides k-path existence under the promise that `g` has at most `c`
/// k-paths. Deterministic: expands the walk circuit to the edge-variable
/// polynomial (whose monomials are exactly the k-paths) and zero-tests it
/// with the prime encoding.
pub fn detect_few_paths(g: &Digraph, k: usize, c: u64) -> Result<bool> {
    check_k(k, MAX_PATH_K)?;
    if k > g.n() {
        return Ok(false);
    }
    let walk = build_walk_circuit(g, k)?;
    match expand_to_edge_circuit(&walk, k, g.n())? {
        Some(l) => zero_test_prime_encoding(&l, c),
        None => Ok(false),
    }
}

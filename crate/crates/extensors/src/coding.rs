//! Constructors for the vertex/edge codings consumed by the detection and
//! counting algorithms, plus the seed discipline that keeps every
//! randomized run reproducible.
//!
//! All randomness flows through [`SeedSpec`]: a 64-bit master seed plus a
//! list of integer tags (purpose, trial index, …) deterministically derives
//! an independent ChaCha stream. Trials therefore commute — the same
//! (seed, trial) pair yields the same coding regardless of thread schedule
//! or evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::{Error, Result};
use crate::exterior::{lift, ExtVector};
use crate::graph::{Coding, Digraph, VertexCode};
use crate::ring::{Int, QuadExt, QuadExtRing, Ring, SparsePoly, SparsePolyRing};
use crate::zeon::ZeonRing;

/// Purpose tags for stream derivation; distinct constants keep the streams
/// of different algorithms disjoint even under a shared master seed.
pub mod tags {
    pub const BERNOULLI: u64 = 0x42_45_52_4e;
    pub const SQRT3: u64 = 0x53_51_52_33;
    pub const EDGE_WEIGHTS: u64 = 0x45_44_47_45;
    pub const COLOR: u64 = 0x43_4f_4c_52;
    pub const MULTILINEAR: u64 = 0x4d_55_4c_54;
    pub const MOMENT: u64 = 0x4d_4f_4d_54;
    pub const PRIME: u64 = 0x50_52_49_4d;
    pub const SUBGRAPH: u64 = 0x53_55_42_47;
}

/// Master seed with counter-based stream derivation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeedSpec {
    master: u64,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl SeedSpec {
    pub fn new(master: u64) -> Self {
        SeedSpec { master }
    }

    pub fn master(&self) -> u64 {
        self.master
    }

    /// Independent stream for the given tag sequence: tags are absorbed
    /// into a splitmix64 chain whose output keys a ChaCha generator.
    pub fn stream(&self, tag_seq: &[u64]) -> ChaCha12Rng {
        let mut state = self.master;
        splitmix64(&mut state);
        for &tag in tag_seq {
            state ^= tag;
            splitmix64(&mut state);
        }
        let mut key = [0u8; 32];
        for chunk in key.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut state).to_le_bytes());
        }
        ChaCha12Rng::from_seed(key)
    }

    /// Stream for one trial of one algorithm.
    pub fn trial_rng(&self, purpose: u64, trial: u64) -> ChaCha12Rng {
        self.stream(&[purpose, trial])
    }
}

/// The column (1, i, i², …, i^{k−1})ᵀ for a 1-based vertex index i,
/// computed in-ring.
pub fn vandermonde_vector<R: Ring>(ring: &R, i: usize, k: usize) -> ExtVector<R> {
    let base = ring.from_i64(i as i64);
    let mut entries = Vec::with_capacity(k);
    let mut cur = ring.one();
    for _ in 0..k {
        entries.push(cur.clone());
        cur = ring.mul(&cur, &base);
    }
    ExtVector::new(entries)
}

/// The columns for vertices 1…n.
pub fn vandermonde_vectors<R: Ring>(ring: &R, n: usize, k: usize) -> Vec<ExtVector<R>> {
    (1..=n).map(|i| vandermonde_vector(ring, i, k)).collect()
}

/// Vandermonde coding: vertex vᵢ ↦ (1, i, …, i^{k−1})ᵀ, edges ↦ 1.
pub fn vandermonde_coding<R: Ring>(ring: &R, g: &Digraph, k: usize) -> Coding<R> {
    Coding::from_vectors(ring, vandermonde_vectors(ring, g.n(), k), g.m())
}

/// n×k matrix of i.i.d. uniform ±1 entries, one vector per vertex.
pub fn bernoulli_vectors<R: Ring>(
    ring: &R,
    n: usize,
    k: usize,
    rng: &mut impl Rng,
) -> Vec<ExtVector<R>> {
    (0..n)
        .map(|_| {
            ExtVector::new(
                (0..k)
                    .map(|_| {
                        if rng.random_range(0..2u8) == 0 {
                            ring.one()
                        } else {
                            ring.neg(&ring.one())
                        }
                    })
                    .collect(),
            )
        })
        .collect()
}

/// Bernoulli coding: each vertex gets a fresh uniform ±1 vector.
pub fn bernoulli_coding<R: Ring>(
    ring: &R,
    g: &Digraph,
    k: usize,
    rng: &mut impl Rng,
) -> Coding<R> {
    Coding::from_vectors(ring, bernoulli_vectors(ring, g.n(), k, rng), g.m())
}

/// One draw from {−√3, 0, +√3} with probabilities 1/6, 2/3, 1/6.
pub fn sqrt3_entry(rng: &mut impl Rng) -> QuadExt {
    match rng.random_range(0..6u8) {
        0 => QuadExtRing.neg(&QuadExt::sqrt3()),
        5 => QuadExt::sqrt3(),
        _ => QuadExtRing.zero(),
    }
}

/// Vertex vectors with i.i.d. entries from the {−√3, 0, +√3} distribution.
pub fn sqrt3_vectors(n: usize, k: usize, rng: &mut impl Rng) -> Vec<ExtVector<QuadExtRing>> {
    (0..n)
        .map(|_| ExtVector::new((0..k).map(|_| sqrt3_entry(rng)).collect()))
        .collect()
}

pub fn sqrt3_coding(g: &Digraph, k: usize, rng: &mut impl Rng) -> Coding<QuadExtRing> {
    Coding::from_vectors(&QuadExtRing, sqrt3_vectors(g.n(), k, rng), g.m())
}

/// Replaces every vector vertex code v by the doubled blade (v,0)∧(0,v);
/// edge values are preserved.
pub fn lift_coding<R: Ring>(ring: &R, coding: &Coding<R>) -> Result<Coding<R>> {
    let mut lifted = coding.clone();
    for v in 0..coding.vertex_count() {
        match coding.vertex(v) {
            VertexCode::Vector(vec) => {
                lifted.set_vertex(v, VertexCode::Blade(lift(ring, vec)));
            }
            _ => {
                return Err(Error::CodingMismatch(
                    "lift requires vector-valued vertex codes".into(),
                ))
            }
        }
    }
    Ok(lifted)
}

/// Vandermonde vertices over the multilinear polynomial ring, with edge
/// e_j carrying the variable y_j. The walk-sum of this coding is the edge
/// polynomial whose monomials are the edge sets of k-paths.
pub fn edge_variable_coding(g: &Digraph, k: usize) -> (SparsePolyRing, Coding<SparsePolyRing>) {
    let ring = SparsePolyRing::multilinear(g.m());
    let vectors = vandermonde_vectors(&ring, g.n(), k);
    let mut coding = Coding::from_vectors(&ring, vectors, g.m());
    for j in 0..g.m() {
        coding.set_edge(j, SparsePoly::variable(g.m(), j));
    }
    (ring, coding)
}

/// Vandermonde vertices with uniformly random integer edge weights from
/// {1, …, 100k}.
pub fn random_edge_weight_coding(
    g: &Digraph,
    k: usize,
    rng: &mut impl Rng,
) -> Coding<crate::ring::IntegerRing> {
    let ring = crate::ring::IntegerRing;
    let mut coding = vandermonde_coding(&ring, g, k);
    let cap = 100 * k as i64;
    for j in 0..g.m() {
        coding.set_edge(j, Int::from(rng.random_range(1..=cap)));
    }
    coding
}

/// Color coding: every vertex draws one of the zeon generators ē₁…ē_t
/// uniformly. A walk's product survives exactly when its colors are all
/// distinct.
pub fn color_coding<R: Ring>(
    zr: &ZeonRing<R>,
    g: &Digraph,
    rng: &mut impl Rng,
) -> Coding<ZeonRing<R>> {
    let t = zr.generator_count();
    let values = (0..g.n())
        .map(|_| zr.generator(rng.random_range(1..=t)))
        .collect();
    Coding::from_scalars(zr, values, g.m())
}

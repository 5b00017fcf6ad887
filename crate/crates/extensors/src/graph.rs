//! Directed graphs and the generic walk-sum evaluator over any ring.
//!
//! A walk of k vertices v₁e₁v₂…e_{k−1}v_k contributes the ordered product
//! ξ(v₁)ξ(e₁)ξ(v₂)⋯ξ(v_k) of its vertex and edge codes; the walk-sum is the
//! sum of these contributions over all k-vertex walks. It is computed by
//! k−1 sparse matrix-vector rounds, so every ring multiplication has the
//! skew form x·ξ(·) with the right factor a coding value — the property
//! that lets exterior-algebra codings replace the generic product with the
//! cheap wedge-by-vector.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exterior::{Blade2, Extensor, ExtVector, ExteriorAlgebra};
use crate::ring::Ring;

/// A directed graph with stable, insertion-ordered edge ids. Vertices are
/// 0-based internally; the text format of [`parse_graph`] is 1-based.
#[derive(Clone, Debug)]
pub struct Digraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
    edge_set: HashSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            edge_set: HashSet::new(),
        }
    }

    /// Adds the directed edge u→v and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::GraphParse(format!(
                "edge ({},{}) out of range for {} vertices",
                u + 1,
                v + 1,
                self.n
            )));
        }
        if !self.edge_set.insert((u, v)) {
            return Err(Error::GraphParse(format!(
                "duplicate directed edge ({},{})",
                u + 1,
                v + 1
            )));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.adj[u].push((v, id));
        Ok(id)
    }

    /// Builds a graph from 0-based edge pairs in one call.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Digraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edge endpoints by id, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Outgoing (target, edge-id) pairs of a vertex, in insertion order.
    pub fn out_neighbors(&self, u: usize) -> &[(usize, usize)] {
        &self.adj[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_set.contains(&(u, v))
    }
}

/// Parses the graph text format: a header `p <directed|undirected> <n> <m>`
/// followed by m lines `u v` with 1-based endpoints. `#`-prefixed comment
/// lines and blank lines are ignored. An undirected edge expands to the two
/// opposite directed edges, u→v receiving the smaller id.
pub fn parse_graph(text: &str) -> Result<Digraph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));

    let header = lines
        .next()
        .ok_or_else(|| Error::GraphParse("missing header line".into()))?;
    let mut parts = header.split_whitespace();
    let bad_header = || Error::GraphParse(format!("malformed header: {header:?}"));
    if parts.next() != Some("p") {
        return Err(bad_header());
    }
    let directed = match parts.next() {
        Some("directed") => true,
        Some("undirected") => false,
        _ => return Err(bad_header()),
    };
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(bad_header)?;
    let m: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(bad_header)?;
    if parts.next().is_some() {
        return Err(bad_header());
    }

    let mut g = Digraph::new(n);
    let mut seen = 0usize;
    for line in lines {
        seen += 1;
        if seen > m {
            return Err(Error::GraphParse(format!(
                "expected {m} edge lines, found more"
            )));
        }
        let mut nums = line.split_whitespace();
        let parse_endpoint = |tok: Option<&str>| -> Result<usize> {
            let raw: usize = tok
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::GraphParse(format!("malformed edge line: {line:?}")))?;
            if raw == 0 || raw > n {
                return Err(Error::GraphParse(format!(
                    "endpoint {raw} out of range 1..={n}"
                )));
            }
            Ok(raw - 1)
        };
        let u = parse_endpoint(nums.next())?;
        let v = parse_endpoint(nums.next())?;
        if nums.next().is_some() {
            return Err(Error::GraphParse(format!("malformed edge line: {line:?}")));
        }
        g.add_edge(u, v)?;
        if !directed {
            g.add_edge(v, u)?;
        }
    }
    if seen < m {
        return Err(Error::GraphParse(format!(
            "expected {m} edge lines, found {seen}"
        )));
    }
    Ok(g)
}

/// A per-vertex code value: plain ring scalar, vector (grade 1), or
/// decomposable grade-2 blade. Walk evaluation multiplies by these on the
/// right, so the variant decides which skew product applies.
#[derive(Clone, Debug)]
pub enum VertexCode<R: Ring> {
    Scalar(R::Element),
    Vector(ExtVector<R>),
    Blade(Blade2<R>),
}

/// Assignment of code values to every vertex and every edge of a graph.
/// Edge values default to the ring unit.
#[derive(Clone, Debug)]
pub struct Coding<R: Ring> {
    vertex: Vec<VertexCode<R>>,
    edge: Vec<R::Element>,
}

impl<R: Ring> Coding<R> {
    pub fn from_scalars(ring: &R, values: Vec<R::Element>, m: usize) -> Self {
        Coding {
            vertex: values.into_iter().map(VertexCode::Scalar).collect(),
            edge: vec![ring.one(); m],
        }
    }

    pub fn from_vectors(ring: &R, values: Vec<ExtVector<R>>, m: usize) -> Self {
        Coding {
            vertex: values.into_iter().map(VertexCode::Vector).collect(),
            edge: vec![ring.one(); m],
        }
    }

    pub fn from_blades(ring: &R, values: Vec<Blade2<R>>, m: usize) -> Self {
        Coding {
            vertex: values.into_iter().map(VertexCode::Blade).collect(),
            edge: vec![ring.one(); m],
        }
    }

    pub fn set_edge(&mut self, id: usize, value: R::Element) {
        self.edge[id] = value;
    }

    pub fn set_vertex(&mut self, v: usize, code: VertexCode<R>) {
        self.vertex[v] = code;
    }

    pub fn vertex(&self, v: usize) -> &VertexCode<R> {
        &self.vertex[v]
    }

    pub fn edge(&self, id: usize) -> &R::Element {
        &self.edge[id]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge.len()
    }

    fn check_shape(&self, g: &Digraph) -> Result<()> {
        if self.vertex.len() != g.n() {
            return Err(Error::CodingMismatch(format!(
                "coding has {} vertex values, graph has {} vertices",
                self.vertex.len(),
                g.n()
            )));
        }
        if self.edge.len() != g.m() {
            return Err(Error::CodingMismatch(format!(
                "coding has {} edge values, graph has {} edges",
                self.edge.len(),
                g.m()
            )));
        }
        Ok(())
    }
}

fn scalar_code<'a, R: Ring>(coding: &'a Coding<R>, v: usize) -> Result<&'a R::Element> {
    match coding.vertex(v) {
        VertexCode::Scalar(c) => Ok(c),
        _ => Err(Error::CodingMismatch(
            "scalar walk-sum requires scalar vertex codes".into(),
        )),
    }
}

/// Sum of code products over all k-vertex walks, for scalar codings, by
/// k−1 rounds of sparse matrix-vector multiplication: O(k(n+m)) ring ops.
pub fn walk_sum<R: Ring>(g: &Digraph, coding: &Coding<R>, k: usize, ring: &R) -> Result<R::Element> {
    if k < 1 || k > g.n() {
        return Err(Error::WalkLength { k, n: g.n() });
    }
    coding.check_shape(g)?;
    let one = ring.one();
    let mut state: Vec<R::Element> = (0..g.n())
        .map(|v| scalar_code(coding, v).cloned())
        .collect::<Result<_>>()?;
    for _ in 1..k {
        let mut next = vec![ring.zero(); g.n()];
        for u in 0..g.n() {
            if ring.is_zero(&state[u]) {
                continue;
            }
            for &(v, e) in g.out_neighbors(u) {
                let ev = coding.edge(e);
                // Both products keep the coding value on the right.
                let stepped = if *ev == one {
                    state[u].clone()
                } else {
                    ring.mul(&state[u], ev)
                };
                ring.mul_add_assign(&mut next[v], &stepped, scalar_code(coding, v)?);
            }
        }
        state = next;
    }
    let mut total = ring.zero();
    for s in &state {
        ring.add_assign(&mut total, s);
    }
    Ok(total)
}

/// Walk-sum for vector- or blade-valued vertex codes, evaluated in Λ(F^d)
/// with the skew wedge products. For decomposable codes, walks that repeat
/// a vertex contribute zero, so the result is the sum over k-vertex paths
/// of the wedge of their codes.
pub fn walk_sum_extensor<R: Ring>(
    g: &Digraph,
    coding: &Coding<R>,
    k: usize,
    alg: &ExteriorAlgebra<R>,
) -> Result<Extensor<R>> {
    if k < 1 || k > g.n() {
        return Err(Error::WalkLength { k, n: g.n() });
    }
    coding.check_shape(g)?;
    let ring = alg.ring().clone();
    let one = ring.one();

    let embed = |v: usize| -> Result<Extensor<R>> {
        match coding.vertex(v) {
            VertexCode::Vector(vec) => alg.from_vector(vec),
            VertexCode::Blade(b) => alg.expand_blade(b),
            VertexCode::Scalar(_) => Err(Error::CodingMismatch(
                "extensor walk-sum requires vector or blade vertex codes".into(),
            )),
        }
    };
    let wedge_code = |x: &Extensor<R>, v: usize| -> Result<Extensor<R>> {
        match coding.vertex(v) {
            VertexCode::Vector(vec) => alg.wedge_vector(x, vec),
            VertexCode::Blade(b) => alg.wedge_blade(x, b),
            VertexCode::Scalar(_) => unreachable!("rejected during embedding"),
        }
    };

    let mut state: Vec<Extensor<R>> = (0..g.n()).map(embed).collect::<Result<_>>()?;
    for _ in 1..k {
        let mut next: Vec<Extensor<R>> = (0..g.n()).map(|_| alg.zero()).collect();
        for u in 0..g.n() {
            if alg.is_zero(&state[u]) {
                continue;
            }
            for &(v, e) in g.out_neighbors(u) {
                let ev = coding.edge(e);
                let stepped = if *ev == one {
                    wedge_code(&state[u], v)?
                } else {
                    wedge_code(&alg.scale(&state[u], ev), v)?
                };
                alg.add_assign(&mut next[v], &stepped);
            }
        }
        state = next;
    }
    let mut total = alg.zero();
    for s in &state {
        alg.add_assign(&mut total, s);
    }
    Ok(total)
}

//! Tree and path decompositions of small pattern graphs.
//!
//! A tree decomposition assigns a bag of pattern vertices to every node of
//! a tree such that every vertex's bag set is nonempty and connected in the
//! tree and every edge is contained in some bag; its width is the maximum
//! bag size minus one. This module validates decompositions, normalizes
//! them into nice form (leaf/introduce/forget/join nodes, empty root bag),
//! finds minimum-width tree and path decompositions exhaustively for
//! patterns of up to [`MAX_PATTERN_K`] vertices, and parses/serializes a
//! PACE-style text format.
//!
//! Decomposition width ignores edge direction and self-loops: both DPs run
//! on the underlying simple undirected graph.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Digraph;

/// Largest pattern the exhaustive decomposition search accepts.
pub const MAX_PATTERN_K: usize = 10;

/// A rooted tree of bags over pattern vertices. Structural tree-ness is
/// checked at construction; the coverage axioms relative to a concrete
/// pattern are checked by [`validate_td`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
    root: usize,
}

impl TreeDecomposition {
    /// Builds a decomposition from bags and tree edges, rooted at node 0.
    /// Bags are sorted and deduplicated; the edge set must form a tree.
    pub fn from_parts(bags: Vec<Vec<usize>>, edges: Vec<(usize, usize)>) -> Result<Self> {
        if bags.is_empty() {
            return Err(Error::InvalidDecomposition(
                "a decomposition needs at least one node".into(),
            ));
        }
        let nodes = bags.len();
        for &(a, b) in &edges {
            if a >= nodes || b >= nodes {
                return Err(Error::InvalidDecomposition(format!(
                    "tree edge ({a},{b}) references a missing node"
                )));
            }
            if a == b {
                return Err(Error::InvalidDecomposition(format!(
                    "tree edge ({a},{a}) is a self-loop"
                )));
            }
        }
        if edges.len() != nodes - 1 {
            return Err(Error::InvalidDecomposition(format!(
                "{nodes} nodes need exactly {} tree edges, got {}",
                nodes - 1,
                edges.len()
            )));
        }
        let mut bags = bags;
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        let td = TreeDecomposition {
            bags,
            edges,
            root: 0,
        };
        // n−1 edges + connected ⇒ tree (no separate cycle check needed)
        let mut seen = vec![false; nodes];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        let adjacency = td.adjacency();
        while let Some(t) = queue.pop_front() {
            for &u in &adjacency[t] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidDecomposition(
                "tree edges do not connect all nodes".into(),
            ));
        }
        Ok(td)
    }

    /// The one-node decomposition holding all of `vertices`.
    pub fn single_bag(vertices: Vec<usize>) -> Self {
        let mut bag = vertices;
        bag.sort_unstable();
        bag.dedup();
        TreeDecomposition {
            bags: vec![bag],
            edges: Vec::new(),
            root: 0,
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, node: usize) -> &[usize] {
        &self.bags[node]
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// Maximum bag size minus one (0 for an all-empty decomposition).
    pub fn width(&self) -> usize {
        self.bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adjacency = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        adjacency
    }

    /// Serializes to the text format read by [`parse_td`], declaring a
    /// pattern vertex universe of size `k`.
    pub fn to_text(&self, k: usize) -> String {
        let width_plus_one = self.bags.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "s td {} {} {}",
            self.bags.len(),
            width_plus_one,
            k
        );
        for (i, bag) in self.bags.iter().enumerate() {
            let _ = write!(out, "b {}", i + 1);
            for &v in bag {
                let _ = write!(out, " {}", v + 1);
            }
            out.push('\n');
        }
        for &(a, b) in &self.edges {
            let _ = writeln!(out, "{} {}", a + 1, b + 1);
        }
        out
    }
}

/// Checks the three decomposition axioms of `td` against the pattern `h`
/// and returns the width: every vertex covered by a nonempty, connected set
/// of bags, and both endpoints of every edge together in some bag.
/// Self-loops are covered by plain vertex coverage.
pub fn validate_td(h: &Digraph, td: &TreeDecomposition) -> Result<usize> {
    for (node, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= h.n() {
                return Err(Error::InvalidDecomposition(format!(
                    "bag {node} contains vertex {v} outside the pattern"
                )));
            }
        }
    }
    let adjacency = td.adjacency();
    for v in 0..h.n() {
        let holders: Vec<usize> = (0..td.num_nodes())
            .filter(|&t| td.bags[t].binary_search(&v).is_ok())
            .collect();
        if holders.is_empty() {
            return Err(Error::InvalidDecomposition(format!(
                "vertex {v} appears in no bag"
            )));
        }
        // connectivity of the occurrence set, by flood fill inside it
        let mut reached = vec![false; td.num_nodes()];
        let mut queue = VecDeque::from([holders[0]]);
        reached[holders[0]] = true;
        while let Some(t) = queue.pop_front() {
            for &u in &adjacency[t] {
                if !reached[u] && td.bags[u].binary_search(&v).is_ok() {
                    reached[u] = true;
                    queue.push_back(u);
                }
            }
        }
        if holders.iter().any(|&t| !reached[t]) {
            return Err(Error::InvalidDecomposition(format!(
                "vertex {v} occurs in a disconnected set of bags"
            )));
        }
    }
    for &(u, v) in h.edges() {
        if u == v {
            continue;
        }
        let covered = td.bags.iter().any(|bag| {
            bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok()
        });
        if !covered {
            return Err(Error::InvalidDecomposition(format!(
                "edge ({u},{v}) is contained in no bag"
            )));
        }
    }
    Ok(td.width())
}

/// Node kinds of a nice tree decomposition. Child indices refer to earlier
/// positions in the node list.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NiceNode {
    /// Empty bag, no children.
    Leaf,
    /// Bag of the child plus `vertex`.
    Introduce { child: usize, vertex: usize },
    /// Bag of the child minus `vertex`.
    Forget { child: usize, vertex: usize },
    /// Two children with bags identical to this node's bag.
    Join { left: usize, right: usize },
}

/// A tree decomposition normalized so that every node is a leaf, introduce,
/// forget, or join node and the root bag is empty. Nodes are stored in
/// topological order (children strictly before parents); the root is the
/// last node.
#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    nodes: Vec<NiceNode>,
    bags: Vec<Vec<usize>>,
    width: usize,
}

impl NiceTreeDecomposition {
    /// Assembles a nice decomposition from explicit nodes and bags, listed
    /// children-before-parents with the root last; every niceness
    /// invariant is re-checked.
    pub fn from_parts(nodes: Vec<NiceNode>, bags: Vec<Vec<usize>>) -> Result<Self> {
        if nodes.len() != bags.len() {
            return Err(Error::InvalidDecomposition(format!(
                "{} nodes but {} bags",
                nodes.len(),
                bags.len()
            )));
        }
        let mut bags = bags;
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        let width = bags
            .iter()
            .map(Vec::len)
            .max()
            .unwrap_or(0)
            .saturating_sub(1);
        let ntd = NiceTreeDecomposition { nodes, bags, width };
        ntd.check_niceness()?;
        Ok(ntd)
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, i: usize) -> NiceNode {
        self.nodes[i]
    }

    pub fn bag(&self, i: usize) -> &[usize] {
        &self.bags[i]
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// True when the decomposition has no join nodes — the nice form of a
    /// path decomposition, and the precondition for skew circuits.
    pub fn is_joinless(&self) -> bool {
        !self
            .nodes
            .iter()
            .any(|n| matches!(n, NiceNode::Join { .. }))
    }

    /// View as a plain tree decomposition (for re-validation against the
    /// pattern). The root moves to node 0 to match `from_parts`, which
    /// does not affect any axiom.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let mut edges = Vec::new();
        for (i, node) in self.nodes.iter().enumerate() {
            match *node {
                NiceNode::Leaf => {}
                NiceNode::Introduce { child, .. } | NiceNode::Forget { child, .. } => {
                    edges.push((i, child));
                }
                NiceNode::Join { left, right } => {
                    edges.push((i, left));
                    edges.push((i, right));
                }
            }
        }
        TreeDecomposition::from_parts(self.bags.clone(), edges)
            .expect("a nice decomposition is structurally a tree")
    }

    /// Re-derives every structural invariant of niceness; used by tests
    /// and by consumers of externally supplied decompositions.
    pub fn check_niceness(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::InvalidDecomposition(msg));
        if self.nodes.is_empty() {
            return fail("nice decomposition has no nodes".into());
        }
        let mut used_as_child = vec![false; self.nodes.len()];
        for (i, node) in self.nodes.iter().enumerate() {
            let claim_child = |c: usize, used: &mut Vec<bool>| -> Result<()> {
                if c >= i {
                    return Err(Error::InvalidDecomposition(format!(
                        "node {i} references child {c} that does not precede it"
                    )));
                }
                if used[c] {
                    return Err(Error::InvalidDecomposition(format!(
                        "node {c} has two parents"
                    )));
                }
                used[c] = true;
                Ok(())
            };
            match *node {
                NiceNode::Leaf => {
                    if !self.bags[i].is_empty() {
                        return fail(format!("leaf {i} has a nonempty bag"));
                    }
                }
                NiceNode::Introduce { child, vertex } => {
                    claim_child(child, &mut used_as_child)?;
                    let mut expect = self.bags[child].clone();
                    expect.push(vertex);
                    expect.sort_unstable();
                    if self.bags[child].contains(&vertex) || self.bags[i] != expect {
                        return fail(format!(
                            "introduce node {i} does not add exactly vertex {vertex}"
                        ));
                    }
                }
                NiceNode::Forget { child, vertex } => {
                    claim_child(child, &mut used_as_child)?;
                    let expect: Vec<usize> = self.bags[child]
                        .iter()
                        .copied()
                        .filter(|&v| v != vertex)
                        .collect();
                    if !self.bags[child].contains(&vertex) || self.bags[i] != expect {
                        return fail(format!(
                            "forget node {i} does not remove exactly vertex {vertex}"
                        ));
                    }
                }
                NiceNode::Join { left, right } => {
                    claim_child(left, &mut used_as_child)?;
                    claim_child(right, &mut used_as_child)?;
                    if self.bags[left] != self.bags[i] || self.bags[right] != self.bags[i] {
                        return fail(format!("join node {i} children bags differ from its own"));
                    }
                }
            }
        }
        if !self.bags[self.root()].is_empty() {
            return fail("root bag is not empty".into());
        }
        if used_as_child[self.root()] {
            return fail("root node has a parent".into());
        }
        for (c, &used) in used_as_child.iter().enumerate() {
            if !used && c != self.root() {
                return fail(format!("node {c} is orphaned"));
            }
        }
        Ok(())
    }
}

/// Normalizes a tree decomposition into nice form with the same width.
/// Adjacent nested bags are contracted first (which can only shrink the
/// node count, never the width), path-shaped trees are re-rooted at an
/// endpoint so the output stays joinless, and each remaining tree edge is
/// bridged by a forget/introduce chain. The node count is
/// O(width · |pattern| + |input nodes|).
pub fn make_nice(td: &TreeDecomposition) -> Result<NiceTreeDecomposition> {
    // --- contraction of nested adjacent bags ---------------------------
    let mut bags = td.bags.clone();
    let mut neighbors: Vec<Vec<usize>> = td.adjacency();
    let mut alive = vec![true; bags.len()];
    loop {
        let mut contracted = false;
        'scan: for a in 0..bags.len() {
            if !alive[a] {
                continue;
            }
            for idx in 0..neighbors[a].len() {
                let b = neighbors[a][idx];
                if !alive[b] {
                    continue;
                }
                // keep the superset side
                let (gone, keep) = if subset_of(&bags[a], &bags[b]) {
                    (a, b)
                } else if subset_of(&bags[b], &bags[a]) {
                    (b, a)
                } else {
                    continue;
                };
                alive[gone] = false;
                let moved: Vec<usize> = neighbors[gone].clone();
                for u in moved {
                    if u == keep || !alive[u] {
                        continue;
                    }
                    neighbors[keep].push(u);
                    neighbors[u].push(keep);
                }
                contracted = true;
                break 'scan;
            }
        }
        if !contracted {
            break;
        }
    }
    let index: Vec<Option<usize>> = {
        let mut next = 0usize;
        alive
            .iter()
            .map(|&a| {
                if a {
                    next += 1;
                    Some(next - 1)
                } else {
                    None
                }
            })
            .collect()
    };
    let live_bags: Vec<Vec<usize>> = (0..bags.len())
        .filter(|&i| alive[i])
        .map(|i| std::mem::take(&mut bags[i]))
        .collect();
    let mut live_adj: Vec<Vec<usize>> = vec![Vec::new(); live_bags.len()];
    for a in 0..neighbors.len() {
        if !alive[a] {
            continue;
        }
        let ia = index[a].expect("alive nodes are indexed");
        for &b in &neighbors[a] {
            if alive[b] && a < b {
                let ib = index[b].expect("alive nodes are indexed");
                live_adj[ia].push(ib);
                live_adj[ib].push(ia);
            }
        }
    }
    for lst in &mut live_adj {
        lst.sort_unstable();
        lst.dedup();
    }

    // --- root choice: endpoints keep path inputs joinless ---------------
    let root = if live_adj.iter().all(|l| l.len() <= 2) {
        (0..live_bags.len())
            .find(|&t| live_adj[t].len() <= 1)
            .unwrap_or(0)
    } else {
        0
    };

    // --- recursive construction ----------------------------------------
    let mut builder = NiceBuilder {
        nodes: Vec::new(),
        bags: Vec::new(),
    };
    let top = builder.build(&live_bags, &live_adj, root, usize::MAX);
    let empty = builder.morph(top, &[]);
    let _ = empty;
    let width = builder
        .bags
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0)
        .saturating_sub(1);
    debug_assert_eq!(width, td.width(), "niceness must preserve width");
    let nice = NiceTreeDecomposition {
        nodes: builder.nodes,
        bags: builder.bags,
        width,
    };
    nice.check_niceness()?;
    Ok(nice)
}

fn subset_of(smaller: &[usize], larger: &[usize]) -> bool {
    smaller.iter().all(|v| larger.binary_search(v).is_ok())
}

struct NiceBuilder {
    nodes: Vec<NiceNode>,
    bags: Vec<Vec<usize>>,
}

impl NiceBuilder {
    fn push(&mut self, node: NiceNode, bag: Vec<usize>) -> usize {
        self.nodes.push(node);
        self.bags.push(bag);
        self.nodes.len() - 1
    }

    /// Emits a subtree computing bag(t); returns its top node id.
    fn build(
        &mut self,
        bags: &[Vec<usize>],
        adj: &[Vec<usize>],
        t: usize,
        parent: usize,
    ) -> usize {
        let children: Vec<usize> = adj[t].iter().copied().filter(|&u| u != parent).collect();
        if children.is_empty() {
            let mut id = self.push(NiceNode::Leaf, Vec::new());
            for &v in &bags[t] {
                let mut bag = self.bags[id].clone();
                bag.push(v);
                bag.sort_unstable();
                id = self.push(NiceNode::Introduce { child: id, vertex: v }, bag);
            }
            return id;
        }
        let mut acc: Option<usize> = None;
        for &c in &children {
            let sub = self.build(bags, adj, c, t);
            let shaped = self.morph(sub, &bags[t]);
            acc = Some(match acc {
                None => shaped,
                Some(prev) => self.push(
                    NiceNode::Join {
                        left: prev,
                        right: shaped,
                    },
                    bags[t].clone(),
                ),
            });
        }
        acc.expect("at least one child was folded")
    }

    /// Forgets then introduces until node `from`'s bag becomes `target`.
    fn morph(&mut self, from: usize, target: &[usize]) -> usize {
        let mut id = from;
        let drop: Vec<usize> = self.bags[from]
            .iter()
            .copied()
            .filter(|v| target.binary_search(v).is_err())
            .collect();
        for v in drop {
            let bag: Vec<usize> = self.bags[id]
                .iter()
                .copied()
                .filter(|&u| u != v)
                .collect();
            id = self.push(NiceNode::Forget { child: id, vertex: v }, bag);
        }
        let add: Vec<usize> = target
            .iter()
            .copied()
            .filter(|v| self.bags[id].binary_search(v).is_err())
            .collect();
        for v in add {
            let mut bag = self.bags[id].clone();
            bag.push(v);
            bag.sort_unstable();
            id = self.push(NiceNode::Introduce { child: id, vertex: v }, bag);
        }
        id
    }
}

/// Finds a minimum-width tree decomposition of `h` — or, with
/// `path_decomposition`, a minimum-width path decomposition — by dynamic
/// programming over vertex subsets. Both run on the underlying undirected
/// graph. Patterns above [`MAX_PATTERN_K`] vertices are rejected.
pub fn find_td_exhaustive(h: &Digraph, path_decomposition: bool) -> Result<TreeDecomposition> {
    let n = h.n();
    if n > MAX_PATTERN_K {
        return Err(Error::PatternTooLarge {
            k: n,
            max: MAX_PATTERN_K,
        });
    }
    if n == 0 {
        return Ok(TreeDecomposition::single_bag(Vec::new()));
    }
    let adj = undirected_masks(h);
    if path_decomposition {
        Ok(path_decomposition_by_separation(&adj))
    } else {
        Ok(tree_decomposition_by_elimination(&adj))
    }
}

fn undirected_masks(h: &Digraph) -> Vec<u32> {
    let mut adj = vec![0u32; h.n()];
    for &(u, v) in h.edges() {
        if u != v {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    adj
}

/// Vertices of `inside` that have a neighbor outside `inside`.
fn boundary_size(adj: &[u32], inside: u32) -> usize {
    let mut count = 0;
    let mut rest = inside;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if adj[v] & !inside != 0 {
            count += 1;
        }
    }
    count
}

/// Minimum over placement orders of the maximum prefix boundary (the
/// vertex separation number), which equals pathwidth; bags are the prefix
/// boundaries extended by the newly placed vertex.
fn path_decomposition_by_separation(adj: &[u32]) -> TreeDecomposition {
    let n = adj.len();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut g = vec![u8::MAX; (full as usize) + 1];
    g[0] = 0;
    for s in 1..=full {
        let cost = boundary_size(adj, s) as u8;
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            best = best.min(g[(s & !(1 << v)) as usize]);
        }
        g[s as usize] = best.max(cost);
    }

    // reconstruct: from the full set down, peel the vertex placed last
    let mut order_rev = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut pick = None;
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let sub = g[(s & !(1 << v)) as usize];
            if sub < best {
                best = sub;
                pick = Some(v);
            }
        }
        let v = pick.expect("nonempty sets always have a candidate");
        order_rev.push(v as usize);
        s &= !(1 << v);
    }
    order_rev.reverse();
    let order = order_rev;

    let mut bags = Vec::with_capacity(n);
    let mut placed: u32 = 0;
    for &v in &order {
        let mut bag: Vec<usize> = Vec::new();
        let mut rest = placed;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[u] & !placed != 0 {
                bag.push(u);
            }
        }
        bag.push(v);
        bags.push(bag);
        placed |= 1 << v;
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    TreeDecomposition::from_parts(bags, edges).expect("chain of bags is a tree")
}

/// Neighbors of `v` reachable through already-eliminated vertices
/// (`eliminated`), excluding `v` itself — the degree of `v` at elimination
/// time in the fill-in graph.
fn elimination_neighbors(adj: &[u32], eliminated: u32, v: u32) -> u32 {
    let me = 1u32 << v;
    let mut seen = me;
    let mut frontier = adj[v as usize] & !seen;
    let mut outside = 0u32;
    while frontier != 0 {
        let u = frontier.trailing_zeros();
        let bit = 1u32 << u;
        frontier &= !bit;
        seen |= bit;
        if eliminated & bit != 0 {
            frontier |= adj[u as usize] & !seen;
        } else {
            outside |= bit;
        }
    }
    outside
}

/// Minimum over elimination orders of the maximum elimination degree
/// (treewidth); the decomposition is the standard elimination tree with
/// one bag per vertex.
fn tree_decomposition_by_elimination(adj: &[u32]) -> TreeDecomposition {
    let n = adj.len();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut f = vec![u8::MAX; (full as usize) + 1];
    f[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let without = s & !(1 << v);
            let deg = elimination_neighbors(adj, without, v).count_ones() as u8;
            best = best.min(f[without as usize].max(deg));
        }
        f[s as usize] = best;
    }

    let mut order_rev = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let mut pick = None;
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros();
            rest &= rest - 1;
            let without = s & !(1 << v);
            let deg = elimination_neighbors(adj, without, v).count_ones() as u8;
            let score = f[without as usize].max(deg);
            if score < best {
                best = score;
                pick = Some(v);
            }
        }
        let v = pick.expect("nonempty sets always have a candidate");
        order_rev.push(v as usize);
        s &= !(1 << v);
    }
    order_rev.reverse();
    let order = order_rev;

    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut work = adj.to_vec();
    let mut remaining = full;
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        remaining &= !(1 << v);
        let nb = work[v] & remaining;
        let mut bag: Vec<usize> = vec![v];
        let mut rest = nb;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            bag.push(u);
        }
        bag.sort_unstable();
        bags.push(bag);
        // fill: the remaining neighborhood becomes a clique
        let mut outer = nb;
        while outer != 0 {
            let a = outer.trailing_zeros() as usize;
            outer &= outer - 1;
            work[a] |= nb & !(1 << a);
        }
        if nb != 0 {
            let parent_vertex = {
                let mut bestpos = usize::MAX;
                let mut arg = 0usize;
                let mut r = nb;
                while r != 0 {
                    let u = r.trailing_zeros() as usize;
                    r &= r - 1;
                    if position[u] < bestpos {
                        bestpos = position[u];
                        arg = u;
                    }
                }
                arg
            };
            edges.push((i, position[parent_vertex]));
        } else if i + 1 < n {
            // isolated remainder: chain to the next node to stay a tree
            edges.push((i, i + 1));
        }
    }
    TreeDecomposition::from_parts(bags, edges).expect("elimination tree is a tree")
}

/// Parses the PACE-style decomposition format: a header
/// `s td <#bags> <width+1> <k>`, bag lines `b <id> <v…>` (1-based ids and
/// vertices, every id exactly once), then tree-edge lines `<id1> <id2>`.
/// Lines starting with `c` or `#` and blank lines are ignored. Returns the
/// decomposition and the declared pattern size k.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let fail = |msg: String| Err(Error::DecompositionParse(msg));
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('c') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let head = parts.next().expect("nonblank line has a first token");
        if head == "s" {
            if header.is_some() {
                return fail(format!("line {}: duplicate header", lineno + 1));
            }
            if parts.next() != Some("td") {
                return fail(format!("line {}: header must start `s td`", lineno + 1));
            }
            let nums: Vec<usize> = parts
                .map(|t| t.parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| {
                    Error::DecompositionParse(format!(
                        "line {}: header fields must be integers",
                        lineno + 1
                    ))
                })?;
            let [nb, wp1, k] = nums[..] else {
                return fail(format!(
                    "line {}: header needs `s td <#bags> <width+1> <k>`",
                    lineno + 1
                ));
            };
            if nb == 0 {
                return fail(format!("line {}: at least one bag required", lineno + 1));
            }
            header = Some((nb, wp1, k));
            bags = vec![None; nb];
            continue;
        }
        let Some((nb, _, k)) = header else {
            return fail(format!(
                "line {}: content before the `s td` header",
                lineno + 1
            ));
        };
        if head == "b" {
            let id: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| {
                    Error::DecompositionParse(format!("line {}: bag line needs an id", lineno + 1))
                })?;
            if id == 0 || id > nb {
                return fail(format!("line {}: bag id {id} out of range", lineno + 1));
            }
            if bags[id - 1].is_some() {
                return fail(format!("line {}: duplicate bag {id}", lineno + 1));
            }
            let mut bag = Vec::new();
            for tok in parts {
                let v: usize = tok.parse().map_err(|_| {
                    Error::DecompositionParse(format!(
                        "line {}: bad vertex `{tok}`",
                        lineno + 1
                    ))
                })?;
                if v == 0 || v > k {
                    return fail(format!(
                        "line {}: vertex {v} outside 1..={k}",
                        lineno + 1
                    ));
                }
                bag.push(v - 1);
            }
            let before = bag.len();
            bag.sort_unstable();
            bag.dedup();
            if bag.len() != before {
                return fail(format!("line {}: duplicate vertex in bag {id}", lineno + 1));
            }
            bags[id - 1] = Some(bag);
            continue;
        }
        // tree edge line
        let a: usize = head.parse().map_err(|_| {
            Error::DecompositionParse(format!("line {}: unrecognized line `{line}`", lineno + 1))
        })?;
        let b: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| {
                Error::DecompositionParse(format!(
                    "line {}: tree edge needs two node ids",
                    lineno + 1
                ))
            })?;
        if parts.next().is_some() {
            return fail(format!("line {}: too many fields on edge line", lineno + 1));
        }
        if a == 0 || a > nb || b == 0 || b > nb {
            return fail(format!("line {}: edge ({a},{b}) out of range", lineno + 1));
        }
        edges.push((a - 1, b - 1));
    }

    let Some((_, wp1, k)) = header else {
        return fail("missing `s td` header".into());
    };
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| Error::DecompositionParse(format!("bag {} missing", i + 1))))
        .collect::<Result<_>>()?;
    let max_bag = bags.iter().map(Vec::len).max().unwrap_or(0);
    if max_bag != wp1 {
        return fail(format!(
            "header declares width+1 = {wp1} but the largest bag has {max_bag} vertices"
        ));
    }
    let td = TreeDecomposition::from_parts(bags, edges)
        .map_err(|e| Error::DecompositionParse(format!("not a valid tree: {e}")))?;
    Ok((td, k))
}

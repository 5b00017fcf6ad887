//! Brute-force reference implementations used as ground truth by tests.
//!
//! Everything here is deliberately written with elementary enumeration and
//! shares no traversal or algebra code with the library's algorithms, so
//! agreement between the two is evidence rather than tautology. None of
//! these functions are fit for anything beyond desk-scale inputs.

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::ring::Ring;

/// Default step budget for path enumeration.
pub const DEFAULT_PATH_BUDGET: usize = 4_000_000;

/// All k-vertex simple directed paths of `g`, as vertex sequences in
/// lexicographic order. Fails with a budget error rather than running away
/// on dense inputs.
pub fn enumerate_k_paths(g: &Digraph, k: usize) -> Result<Vec<Vec<usize>>> {
    enumerate_k_paths_budgeted(g, k, DEFAULT_PATH_BUDGET)
}

pub fn enumerate_k_paths_budgeted(
    g: &Digraph,
    k: usize,
    budget: usize,
) -> Result<Vec<Vec<usize>>> {
    if k == 0 {
        return Err(Error::KOutOfRange { k: 0, max: g.n() });
    }
    // sorted adjacency copy so that depth-first emission is lexicographic
    let adj = sorted_adjacency(g);
    let mut paths = Vec::new();
    let mut on_path = vec![false; g.n()];
    let mut stack = Vec::with_capacity(k);
    let mut steps = 0usize;
    for start in 0..g.n() {
        stack.push(start);
        on_path[start] = true;
        extend_paths(&adj, k, &mut stack, &mut on_path, &mut paths, &mut steps, budget)?;
        on_path[start] = false;
        stack.pop();
    }
    Ok(paths)
}

fn extend_paths(
    adj: &[Vec<usize>],
    k: usize,
    stack: &mut Vec<usize>,
    on_path: &mut [bool],
    paths: &mut Vec<Vec<usize>>,
    steps: &mut usize,
    budget: usize,
) -> Result<()> {
    *steps += 1;
    if *steps > budget {
        return Err(Error::BudgetExceeded(format!(
            "path enumeration exceeded {budget} steps"
        )));
    }
    if stack.len() == k {
        paths.push(stack.clone());
        return Ok(());
    }
    let last = *stack.last().expect("stack never empty here");
    for &next in &adj[last] {
        if on_path[next] {
            continue;
        }
        stack.push(next);
        on_path[next] = true;
        extend_paths(adj, k, stack, on_path, paths, steps, budget)?;
        on_path[next] = false;
        stack.pop();
    }
    Ok(())
}

/// Whether `g` contains a simple directed path on k vertices; early-exit
/// depth-first search.
pub fn has_k_path(g: &Digraph, k: usize) -> bool {
    if k == 0 || k > g.n() {
        return false;
    }
    let adj = sorted_adjacency(g);
    let mut on_path = vec![false; g.n()];
    for start in 0..g.n() {
        on_path[start] = true;
        if probe_path(&adj, k - 1, start, &mut on_path) {
            return true;
        }
        on_path[start] = false;
    }
    false
}

fn probe_path(adj: &[Vec<usize>], remaining: usize, at: usize, on_path: &mut [bool]) -> bool {
    if remaining == 0 {
        return true;
    }
    for &next in &adj[at] {
        if on_path[next] {
            continue;
        }
        on_path[next] = true;
        if probe_path(adj, remaining - 1, next, on_path) {
            on_path[next] = false;
            return true;
        }
        on_path[next] = false;
    }
    false
}

fn sorted_adjacency(g: &Digraph) -> Vec<Vec<usize>> {
    (0..g.n())
        .map(|u| {
            let mut ts: Vec<usize> = g.out_neighbors(u).iter().map(|&(v, _)| v).collect();
            ts.sort_unstable();
            ts
        })
        .collect()
}

/// Determinant by the Leibniz permutation expansion — exponential, exact,
/// and free of any elimination logic worth distrusting.
pub fn determinant<R: Ring>(ring: &R, rows: &[Vec<R::Element>]) -> R::Element {
    let n = rows.len();
    for row in rows {
        assert_eq!(row.len(), n, "determinant requires a square matrix");
    }
    let mut total = ring.zero();
    let mut used: u32 = 0;
    leibniz(ring, rows, 0, &mut used, &ring.one(), false, &mut total);
    total
}

fn leibniz<R: Ring>(
    ring: &R,
    rows: &[Vec<R::Element>],
    row: usize,
    used: &mut u32,
    partial: &R::Element,
    negate: bool,
    total: &mut R::Element,
) {
    let n = rows.len();
    if row == n {
        let signed = if negate { ring.neg(partial) } else { partial.clone() };
        ring.add_assign(total, &signed);
        return;
    }
    for col in 0..n {
        let bit = 1u32 << col;
        if *used & bit != 0 {
            continue;
        }
        let entry = &rows[row][col];
        if ring.is_zero(entry) {
            continue;
        }
        // placing σ(row)=col adds one inversion per used column above col
        let new_inversions = (*used >> (col + 1)).count_ones();
        let next_negate = negate ^ (new_inversions & 1 == 1);
        let next_partial = ring.mul(partial, entry);
        *used |= bit;
        leibniz(ring, rows, row + 1, used, &next_partial, next_negate, total);
        *used &= !bit;
    }
}

const HOM_PATTERN_CAP: usize = 6;
const HOM_HOST_CAP: usize = 8;

fn check_hom_caps(h: &Digraph, g: &Digraph) -> Result<()> {
    if h.n() > HOM_PATTERN_CAP {
        return Err(Error::PatternTooLarge {
            k: h.n(),
            max: HOM_PATTERN_CAP,
        });
    }
    if g.n() > HOM_HOST_CAP {
        return Err(Error::PatternTooLarge {
            k: g.n(),
            max: HOM_HOST_CAP,
        });
    }
    Ok(())
}

fn map_preserves_edges(h: &Digraph, g: &Digraph, map: &[usize]) -> bool {
    h.edges().iter().all(|&(a, b)| g.has_edge(map[a], map[b]))
}

/// Number of homomorphisms h → g, by exhaustive enumeration of all n^k maps.
pub fn count_homomorphisms(h: &Digraph, g: &Digraph) -> Result<u64> {
    check_hom_caps(h, g)?;
    let k = h.n();
    let n = g.n();
    if k == 0 {
        return Ok(1);
    }
    if n == 0 {
        return Ok(0);
    }
    let mut map = vec![0usize; k];
    let mut count = 0u64;
    loop {
        if map_preserves_edges(h, g, &map) {
            count += 1;
        }
        // mixed-radix increment
        let mut pos = 0;
        loop {
            if pos == k {
                return Ok(count);
            }
            map[pos] += 1;
            if map[pos] < n {
                break;
            }
            map[pos] = 0;
            pos += 1;
        }
    }
}

/// Number of injective homomorphisms h → g.
pub fn count_injective_homomorphisms(h: &Digraph, g: &Digraph) -> Result<u64> {
    check_hom_caps(h, g)?;
    let mut map = Vec::with_capacity(h.n());
    let mut used = vec![false; g.n()];
    let mut count = 0u64;
    inject(h, g, &mut map, &mut used, &mut count);
    Ok(count)
}

fn inject(h: &Digraph, g: &Digraph, map: &mut Vec<usize>, used: &mut [bool], count: &mut u64) {
    if map.len() == h.n() {
        *count += 1;
        return;
    }
    let a = map.len();
    'targets: for t in 0..g.n() {
        if used[t] {
            continue;
        }
        // check edges of h between vertex a and earlier vertices
        for b in 0..a {
            if h.has_edge(a, b) && !g.has_edge(t, map[b]) {
                continue 'targets;
            }
            if h.has_edge(b, a) && !g.has_edge(map[b], t) {
                continue 'targets;
            }
        }
        if h.has_edge(a, a) && !g.has_edge(t, t) {
            continue 'targets;
        }
        map.push(t);
        used[t] = true;
        inject(h, g, map, used, count);
        used[t] = false;
        map.pop();
    }
}

/// Automorphism count of a digraph by plain permutation enumeration.
pub fn automorphism_count(h: &Digraph) -> Result<u64> {
    if h.n() > HOM_PATTERN_CAP {
        return Err(Error::PatternTooLarge {
            k: h.n(),
            max: HOM_PATTERN_CAP,
        });
    }
    let k = h.n();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut count = 0u64;
    permute(&mut perm, 0, &mut |p| {
        let forward = h.edges().iter().all(|&(a, b)| h.has_edge(p[a], p[b]));
        if forward {
            count += 1;
        }
    });
    Ok(count)
}

fn permute(perm: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == perm.len() {
        visit(perm);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        permute(perm, at + 1, visit);
        perm.swap(at, i);
    }
}

/// Number of subgraphs of `g` isomorphic to `h`, computed as injective
/// homomorphisms divided by automorphisms and — when the instance is small
/// enough — cross-checked against direct enumeration of (vertex set, edge
/// set) pairs.
pub fn count_subgraphs(h: &Digraph, g: &Digraph) -> Result<u64> {
    let inj = count_injective_homomorphisms(h, g)?;
    let aut = automorphism_count(h)?;
    assert!(aut > 0, "identity is always an automorphism");
    assert_eq!(inj % aut, 0, "orbit sizes must divide evenly");
    let by_quotient = inj / aut;
    if let Some(direct) = count_subgraphs_direct(h, g) {
        assert_eq!(
            by_quotient, direct,
            "quotient and direct subgraph counts disagree"
        );
    }
    Ok(by_quotient)
}

/// Direct subgraph enumeration: every k-subset of host vertices, every
/// edge subset of matching cardinality among them, isomorphism by trying
/// all bijections. Returns None when the candidate space exceeds a fixed
/// budget instead of stalling.
fn count_subgraphs_direct(h: &Digraph, g: &Digraph) -> Option<u64> {
    let k = h.n();
    let n = g.n();
    if k > n || k > HOM_PATTERN_CAP || n > HOM_HOST_CAP {
        return if k > n { Some(0) } else { None };
    }
    let want_edges = h.m();
    let mut total = 0u64;
    let mut budget = 2_000_000usize;

    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        // candidate edges of g inside the chosen vertex subset
        let inside: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| subset.contains(&u) && subset.contains(&v))
            .collect();
        if inside.len() >= want_edges {
            for choice in edge_subsets(&inside, want_edges) {
                budget = budget.checked_sub(1)?;
                if edge_set_isomorphic(h, &subset, &choice) {
                    total += 1;
                }
            }
        }
        // next k-combination of 0..n in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return Some(total);
            }
            i -= 1;
            if subset[i] != i + n - k {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn edge_subsets(edges: &[(usize, usize)], size: usize) -> Vec<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut pick = Vec::new();
    subset_rec(edges, size, 0, &mut pick, &mut out);
    out
}

fn subset_rec(
    edges: &[(usize, usize)],
    size: usize,
    from: usize,
    pick: &mut Vec<(usize, usize)>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    if pick.len() == size {
        out.push(pick.clone());
        return;
    }
    if edges.len() - from < size - pick.len() {
        return;
    }
    for i in from..edges.len() {
        pick.push(edges[i]);
        subset_rec(edges, size, i + 1, pick, out);
        pick.pop();
    }
}

const WIDTH_ORACLE_CAP: usize = 8;

/// Underlying undirected adjacency as bitmasks; self-loops dropped (they
/// never affect decomposition width).
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

fn check_width_oracle_cap(h: &Digraph) -> Result<()> {
    if h.n() > WIDTH_ORACLE_CAP {
        return Err(Error::PatternTooLarge {
            k: h.n(),
            max: WIDTH_ORACLE_CAP,
        });
    }
    Ok(())
}

/// Pathwidth by brute force over all vertex orders: the minimum over orders
/// of the maximum prefix boundary (vertex separation number, which equals
/// pathwidth). Exponential and independent of any decomposition code.
pub fn pathwidth_by_enumeration(h: &Digraph) -> Result<usize> {
    check_width_oracle_cap(h)?;
    let n = h.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = undirected_masks(h);
    let mut best = usize::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |order| {
        let mut placed = 0u32;
        let mut worst = 0usize;
        for &v in order {
            placed |= 1 << v;
            let boundary = (0..n)
                .filter(|&u| placed >> u & 1 == 1 && adj[u] & !placed != 0)
                .count();
            worst = worst.max(boundary);
        }
        best = best.min(worst);
    });
    Ok(best)
}

/// Treewidth by brute force over all elimination orders: the minimum over
/// orders of the maximum degree at elimination time in the fill-in graph.
pub fn treewidth_by_enumeration(h: &Digraph) -> Result<usize> {
    check_width_oracle_cap(h)?;
    let n = h.n();
    if n == 0 {
        return Ok(0);
    }
    let adj = undirected_masks(h);
    let mut best = usize::MAX;
    let mut perm: Vec<usize> = (0..n).collect();
    permute(&mut perm, 0, &mut |order| {
        let mut work = adj.clone();
        let mut remaining = (1u32 << n) - 1;
        let mut worst = 0usize;
        for &v in order {
            remaining &= !(1 << v);
            let nb = work[v] & remaining;
            worst = worst.max(nb.count_ones() as usize);
            // eliminating v makes its remaining neighborhood a clique
            let mut rest = nb;
            while rest != 0 {
                let a = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                work[a] |= nb & !(1 << a);
            }
        }
        best = best.min(worst);
    });
    Ok(best)
}

fn edge_set_isomorphic(h: &Digraph, vertices: &[usize], edges: &[(usize, usize)]) -> bool {
    let k = h.n();
    let mut perm: Vec<usize> = (0..k).collect();
    let mut found = false;
    permute(&mut perm, 0, &mut |p| {
        if found {
            return;
        }
        // p maps pattern vertex i to vertices[p[i]]
        let mapped_ok = h.edges().iter().all(|&(a, b)| {
            edges.contains(&(vertices[p[a]], vertices[p[b]]))
        });
        if mapped_ok && h.m() == edges.len() {
            found = true;
        }
    });
    found
}

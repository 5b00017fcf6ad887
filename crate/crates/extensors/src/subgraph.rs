//! Approximate counting of pattern subgraphs in a host digraph.
//!
//! The pipeline: find a minimum-width path decomposition of the pattern,
//! normalize it to nice form, compile the homomorphism polynomial of the
//! pattern in the host into an arithmetic circuit over one variable per
//! host vertex, and evaluate that circuit over Λ(F^{2k}) at lifted random
//! ±1 vertex codes. Non-injective homomorphisms repeat a lifted factor and
//! vanish; each injective one contributes the square of a k×k determinant,
//! so the top coefficient averages to k! times the injective-homomorphism
//! count. Dividing by the pattern's automorphism count turns that into the
//! subgraph count.
//!
//! The circuit is built once and is skew for path decompositions, which
//! keeps every Λ-multiplication a cheap blade product; join nodes would
//! need general extensor products, so counting requires a joinless
//! decomposition. Exact evaluation over the integers (all variables 1)
//! works for arbitrary tree decompositions and is used as a cross-check
//! against brute-force homomorphism enumeration.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::circuit::{Circuit, CircuitBuilder, Gate};
use crate::coding::{bernoulli_vectors, tags, SeedSpec};
use crate::decomp::{
    find_td_exhaustive, make_nice, validate_td, NiceNode, NiceTreeDecomposition,
    TreeDecomposition, MAX_PATTERN_K,
};
use crate::error::{Error, Result};
use crate::exterior::{lift, lift_sign, Blade2, Extensor, ExteriorAlgebra};
use crate::graph::Digraph;
use crate::paths::count::factorial;
use crate::paths::{trial_count, CountEstimate};
use crate::ring::{Int, IntegerRing, Rational, Ring};

fn check_pattern_size(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::KOutOfRange {
            k,
            max: MAX_PATTERN_K,
        });
    }
    if k > MAX_PATTERN_K {
        return Err(Error::PatternTooLarge {
            k,
            max: MAX_PATTERN_K,
        });
    }
    Ok(())
}

fn adjacency_matrix(g: &Digraph) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
    }
    adj
}

/// Number of automorphisms of `h`, by backtracking over the k! vertex
/// permutations with prefix pruning (an arc between assigned vertices must
/// be preserved in both directions at every step).
pub fn aut_size(h: &Digraph) -> Result<u64> {
    check_pattern_size(h.n())?;
    let k = h.n();
    let adj = adjacency_matrix(h);
    fn extend(adj: &[Vec<bool>], image: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let d = image.len();
        if d == adj.len() {
            return 1;
        }
        let mut total = 0;
        for u in 0..adj.len() {
            if used[u] || adj[d][d] != adj[u][u] {
                continue;
            }
            let consistent = image
                .iter()
                .enumerate()
                .all(|(i, &w)| adj[d][i] == adj[u][w] && adj[i][d] == adj[w][u]);
            if consistent {
                image.push(u);
                used[u] = true;
                total += extend(adj, image, used);
                used[u] = false;
                image.pop();
            }
        }
        total
    }
    Ok(extend(&adj, &mut Vec::new(), &mut vec![false; k]))
}

/// Compiles the homomorphism polynomial of `h` in `g` — the sum over all
/// homomorphisms φ of ∏_{u ∈ V(h)} ζ_{φ(u)} — into a circuit over the host
/// vertex variables ζ₀…ζ_{n−1}, by dynamic programming over the nice
/// decomposition.
///
/// Each node carries a table mapping edge-respecting partial assignments
/// of its bag to gates; absent entries are identically-zero polynomials
/// and are pruned. Introduce nodes only filter (the constraint check);
/// each vertex's ζ factor is attached when the vertex is forgotten, which
/// happens exactly once per vertex, so join products never repeat a
/// factor. The result is skew whenever the decomposition is joinless.
pub fn hom_circuit(
    h: &Digraph,
    g: &Digraph,
    ntd: &NiceTreeDecomposition,
) -> Result<Circuit> {
    ntd.check_niceness()?;
    validate_td(h, &ntd.to_tree_decomposition())?;
    let n = g.n();
    let h_adj = adjacency_matrix(h);
    let g_adj = adjacency_matrix(g);

    let mut b = CircuitBuilder::new(n);
    let mut input_gates: Vec<Option<usize>> = vec![None; n];
    let mut const_one: Option<usize> = None;
    let mut tables: Vec<BTreeMap<Vec<usize>, usize>> = Vec::with_capacity(ntd.num_nodes());

    for t in 0..ntd.num_nodes() {
        let table = match ntd.node(t) {
            NiceNode::Leaf => {
                let one = *const_one.get_or_insert_with(|| b.constant(Int::ONE));
                BTreeMap::from([(Vec::new(), one)])
            }
            NiceNode::Introduce { child, vertex } => {
                let bag = ntd.bag(t);
                let pos = bag
                    .binary_search(&vertex)
                    .expect("introduced vertex belongs to the bag");
                let mut table = BTreeMap::new();
                for (image, &gate) in &tables[child] {
                    'host: for u in 0..n {
                        if h_adj[vertex][vertex] && !g_adj[u][u] {
                            continue;
                        }
                        for (i, &y) in bag.iter().enumerate() {
                            if y == vertex {
                                continue;
                            }
                            let w = image[if i < pos { i } else { i - 1 }];
                            if (h_adj[vertex][y] && !g_adj[u][w])
                                || (h_adj[y][vertex] && !g_adj[w][u])
                            {
                                continue 'host;
                            }
                        }
                        let mut next = image.clone();
                        next.insert(pos, u);
                        table.insert(next, gate);
                    }
                }
                table
            }
            NiceNode::Forget { child, vertex } => {
                let child_bag = ntd.bag(child);
                let pos = child_bag
                    .binary_search(&vertex)
                    .expect("forgotten vertex belongs to the child bag");
                let mut buckets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
                for (image, &gate) in &tables[child] {
                    let u = image[pos];
                    let zeta = match input_gates[u] {
                        Some(i) => i,
                        None => {
                            let i = b.input(u);
                            input_gates[u] = Some(i);
                            i
                        }
                    };
                    let factored = b.mul(gate, zeta);
                    let mut rest = image.clone();
                    rest.remove(pos);
                    buckets.entry(rest).or_default().push(factored);
                }
                buckets
                    .into_iter()
                    .map(|(image, gates)| {
                        let sum = b.add_chain(&gates).expect("buckets are nonempty");
                        (image, sum)
                    })
                    .collect()
            }
            NiceNode::Join { left, right } => {
                let mut table = BTreeMap::new();
                for (image, &gl) in &tables[left] {
                    if let Some(&gr) = tables[right].get(image) {
                        table.insert(image.clone(), b.mul(gl, gr));
                    }
                }
                table
            }
        };
        tables.push(table);
    }

    let output = match tables[ntd.root()].get(&Vec::new()) {
        Some(&gate) => gate,
        None => b.constant(Int::ZERO),
    };
    b.finish(output)
}

/// Evaluates a circuit over Λ(F^{2k}) with each variable bound to a lifted
/// vertex code (a 2-blade). Multiplications with a variable operand are
/// blade products — 2-blades have even grade and commute with everything,
/// so operand order is free — while general multiplications (from join
/// nodes) fall back to the full product expansion.
pub fn eval_circuit_extensor<R: Ring>(
    alg: &ExteriorAlgebra<R>,
    circuit: &Circuit,
    blades: &[Blade2<R>],
) -> Result<Extensor<R>> {
    if blades.len() != circuit.num_vars() {
        return Err(Error::WrongVectorCount {
            expected: circuit.num_vars(),
            got: blades.len(),
        });
    }
    let gates = circuit.gates();
    let mut values: Vec<Extensor<R>> = Vec::with_capacity(gates.len());
    for gate in gates {
        let value = match *gate {
            Gate::Input(v) => alg.expand_blade(&blades[v])?,
            Gate::Const(ref c) => alg.scalar(alg.ring().from_int(c)),
            Gate::Add(a, b) => alg.add(&values[a], &values[b])?,
            Gate::Mul(a, b) => match (&gates[a], &gates[b]) {
                (Gate::Input(v), _) => alg.wedge_blade(&values[b], &blades[*v])?,
                (_, Gate::Input(v)) => alg.wedge_blade(&values[a], &blades[*v])?,
                (Gate::Const(c), _) => alg.scale(&values[b], &alg.ring().from_int(c)),
                (_, Gate::Const(c)) => alg.scale(&values[a], &alg.ring().from_int(c)),
                _ => alg.wedge_general(&values[a], &values[b])?,
            },
        };
        values.push(value);
    }
    Ok(values[circuit.output()].clone())
}

/// Knobs for [`approx_count_subgraphs`].
#[derive(Clone, Debug, Default)]
pub struct SubgraphOptions {
    /// Fixed trial count instead of the ⌈100k³/ε²⌉ schedule.
    pub trials_override: Option<u64>,
    /// Use this decomposition of the pattern instead of searching for one.
    /// It must normalize to a joinless nice decomposition.
    pub decomposition: Option<TreeDecomposition>,
}

/// Estimates the number of subgraphs of `g` isomorphic to `h` within
/// relative error `epsilon` (probability ≥ 99/100 under the default trial
/// schedule). Runs the homomorphism circuit over lifted ±1 codes per
/// trial, averages the top coefficients, and divides by k!·|Aut(h)|.
/// Deterministic given `seed`; trials parallelize with per-index
/// generators, so results are schedule-free.
pub fn approx_count_subgraphs(
    h: &Digraph,
    g: &Digraph,
    epsilon: &Rational,
    seed: SeedSpec,
    options: &SubgraphOptions,
) -> Result<CountEstimate> {
    let k = h.n();
    check_pattern_size(k)?;
    if *epsilon <= Rational::from_integer(0.into()) {
        return Err(Error::NonPositiveEpsilon(epsilon.to_string()));
    }
    let td = match &options.decomposition {
        Some(td) => td.clone(),
        None => find_td_exhaustive(h, true)?,
    };
    validate_td(h, &td)?;
    let ntd = make_nice(&td)?;
    if !ntd.is_joinless() {
        return Err(Error::NoPathDecomposition(
            "the decomposition keeps join nodes after normalization; evaluation over lifted \
             codes needs a path decomposition"
                .into(),
        ));
    }
    let aut = aut_size(h)?;
    let trials = match options.trials_override {
        Some(t) => t,
        None => trial_count(k, epsilon)?,
    };
    if k > g.n() || trials == 0 {
        // No injective image can exist (or nothing was sampled); the empty
        // sum is an exact zero.
        return Ok(CountEstimate {
            estimate: Rational::from_integer(0.into()),
            trials,
            raw: Vec::new(),
            epsilon: epsilon.clone(),
            seed: seed.master(),
        });
    }

    let circuit = hom_circuit(h, g, &ntd)?;
    debug_assert!(circuit.is_skew(), "joinless decompositions compile skew");
    let ring = IntegerRing;
    let alg = ExteriorAlgebra::new(ring, 2 * k)?;

    let tops: Vec<Int> = (0..trials)
        .into_par_iter()
        .map(|j| {
            let mut rng = seed.trial_rng(tags::SUBGRAPH, j);
            let codes = bernoulli_vectors(&ring, g.n(), k, &mut rng);
            let blades: Vec<Blade2<IntegerRing>> =
                codes.iter().map(|v| lift(&ring, v)).collect();
            let value = eval_circuit_extensor(&alg, &circuit, &blades)?;
            Ok(value.top_coefficient().clone())
        })
        .collect::<Result<_>>()?;

    // Each top coefficient is lift_sign(k) · Σ_{injective φ} det², so the
    // sign-corrected mean over trials estimates k! · InjHom(h, g).
    let mut sum = Int::ZERO;
    for t in &tops {
        sum.add_assign(t);
    }
    if lift_sign(k) < 0 {
        sum = sum.neg();
    }
    let denominator = factorial(k) * BigInt::from(trials) * BigInt::from(aut);
    let estimate = Rational::new(sum.to_bigint(), denominator);
    Ok(CountEstimate {
        estimate,
        trials,
        raw: tops,
        epsilon: epsilon.clone(),
        seed: seed.master(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::eval_circuit;
    use crate::coding::vandermonde_vectors;
    use crate::graph::parse_graph;
    use crate::oracle::{
        automorphism_count, count_homomorphisms, count_injective_homomorphisms,
    };
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    /// Largest observed gate-count constant is below this; the bound is
    /// size ≤ C · k · n^{width+1}.
    const SIZE_CONSTANT: usize = 12;

    fn nice_path_td(h: &Digraph) -> NiceTreeDecomposition {
        make_nice(&find_td_exhaustive(h, true).unwrap()).unwrap()
    }

    fn random_digraph(rng: &mut StdRng, n: usize, p: f64) -> Digraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Digraph::from_edges(n, &edges).unwrap()
    }

    fn hom_count_via_circuit(h: &Digraph, g: &Digraph, ntd: &NiceTreeDecomposition) -> i64 {
        let circuit = hom_circuit(h, g, ntd).unwrap();
        let ones = vec![Int::ONE; g.n()];
        eval_circuit(&IntegerRing, &circuit, &ones)
            .unwrap()
            .to_i64()
            .unwrap()
    }

    #[test]
    fn unit_evaluation_matches_enumeration_on_pinned_instances() {
        // single directed edge in the complete digraph on 3 vertices
        let h = parse_graph("p directed 2 1\n1 2\n").unwrap();
        let g = parse_graph("p directed 3 6\n1 2\n2 1\n1 3\n3 1\n2 3\n3 2\n").unwrap();
        assert_eq!(hom_count_via_circuit(&h, &g, &nice_path_td(&h)), 6);

        // 2-edge path in the directed 3-path: images (1,2,3) only… per edge
        let h = parse_graph("p directed 3 2\n1 2\n2 3\n").unwrap();
        let g = parse_graph("p directed 3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(hom_count_via_circuit(&h, &g, &nice_path_td(&h)), 1);
        // …and in the 4-path there are two placements
        let g4 = parse_graph("p directed 4 3\n1 2\n2 3\n3 4\n").unwrap();
        assert_eq!(hom_count_via_circuit(&h, &g4, &nice_path_td(&h)), 2);
    }

    #[test]
    fn unit_evaluation_matches_enumeration_exhaustively_for_tiny_patterns() {
        // every loopless pattern on up to 3 vertices, two fixed hosts
        let hosts = [
            parse_graph("p directed 4 4\n1 2\n2 3\n3 4\n4 1\n").unwrap(),
            parse_graph("p directed 5 7\n1 2\n2 3\n3 1\n3 4\n4 5\n5 3\n1 4\n").unwrap(),
        ];
        for k in 1..=3usize {
            let pairs: Vec<(usize, usize)> = (0..k)
                .flat_map(|u| (0..k).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v)
                .collect();
            for mask in 0..(1u32 << pairs.len()) {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let h = Digraph::from_edges(k, &edges).unwrap();
                for path_variant in [false, true] {
                    let ntd = make_nice(&find_td_exhaustive(&h, path_variant).unwrap()).unwrap();
                    for g in &hosts {
                        let expect = count_homomorphisms(&h, g).unwrap() as i64;
                        assert_eq!(
                            hom_count_via_circuit(&h, g, &ntd),
                            expect,
                            "k={k} mask={mask:#b} path={path_variant}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn unit_evaluation_matches_enumeration_on_random_instances() {
        let mut rng = StdRng::seed_from_u64(0x40C7);
        for trial in 0..30 {
            let k = rng.random_range(1..=4usize);
            let n = rng.random_range(1..=6usize);
            let h = random_digraph(&mut rng, k, 0.5);
            let g = random_digraph(&mut rng, n, 0.4);
            let expect = count_homomorphisms(&h, &g).unwrap() as i64;
            for path_variant in [false, true] {
                let ntd = make_nice(&find_td_exhaustive(&h, path_variant).unwrap()).unwrap();
                assert_eq!(
                    hom_count_via_circuit(&h, &g, &ntd),
                    expect,
                    "trial {trial} path={path_variant}"
                );
            }
        }
    }

    #[test]
    fn join_nodes_compute_the_same_polynomial() {
        // hand-built joinful decomposition of the triangle: two introduce
        // branches joined at the full bag, then forgotten
        let h = parse_graph("p undirected 3 3\n1 2\n1 3\n2 3\n").unwrap();
        let intro_branch = |off: usize| {
            [
                (NiceNode::Leaf, vec![]),
                (NiceNode::Introduce { child: off, vertex: 0 }, vec![0]),
                (NiceNode::Introduce { child: off + 1, vertex: 1 }, vec![0, 1]),
                (NiceNode::Introduce { child: off + 2, vertex: 2 }, vec![0, 1, 2]),
            ]
        };
        let mut nodes = Vec::new();
        let mut bags = Vec::new();
        for (node, bag) in intro_branch(0).into_iter().chain(intro_branch(4)) {
            nodes.push(node);
            bags.push(bag);
        }
        nodes.push(NiceNode::Join { left: 3, right: 7 });
        bags.push(vec![0, 1, 2]);
        for (i, v) in [0, 1, 2].into_iter().enumerate() {
            nodes.push(NiceNode::Forget { child: 8 + i, vertex: v });
            bags.push((v + 1..3).collect());
        }
        let joinful = NiceTreeDecomposition::from_parts(nodes, bags).unwrap();
        assert!(!joinful.is_joinless());

        let joinless = nice_path_td(&h);
        let mut rng = StdRng::seed_from_u64(0x105E);
        for _ in 0..10 {
            let n = rng.random_range(1..=5usize);
            let g = random_digraph(&mut rng, n, 0.5);
            let a = hom_circuit(&h, &g, &joinful).unwrap();
            let b = hom_circuit(&h, &g, &joinless).unwrap();
            // equal as polynomials: compare on random integer points
            for _ in 0..5 {
                let point: Vec<Int> =
                    (0..n).map(|_| Int::from(rng.random_range(-4..=4i64))).collect();
                let va = eval_circuit(&IntegerRing, &a, &point).unwrap();
                let vb = eval_circuit(&IntegerRing, &b, &point).unwrap();
                assert_eq!(va, vb);
            }
        }
    }

    #[test]
    fn circuit_size_stays_within_the_pinned_bound() {
        let mut rng = StdRng::seed_from_u64(0x512E);
        let mut worst = 0.0f64;
        for _ in 0..40 {
            let k = rng.random_range(1..=4usize);
            let n = rng.random_range(1..=6usize);
            let h = random_digraph(&mut rng, k, 0.5);
            let g = random_digraph(&mut rng, n, 0.4);
            let td = find_td_exhaustive(&h, true).unwrap();
            let width = validate_td(&h, &td).unwrap();
            let ntd = make_nice(&td).unwrap();
            let circuit = hom_circuit(&h, &g, &ntd).unwrap();
            let bound = SIZE_CONSTANT * k * n.pow(width as u32 + 1);
            assert!(
                circuit.len() <= bound,
                "{} gates for k={k} n={n} width={width}, bound {bound}",
                circuit.len()
            );
            worst = worst.max(circuit.len() as f64 / (k * n.pow(width as u32 + 1)) as f64);
        }
        // the pinned constant keeps real headroom over what we observe
        assert!(worst <= SIZE_CONSTANT as f64 / 2.0, "observed {worst}");
    }

    #[test]
    fn path_decompositions_compile_skew_circuits() {
        let mut rng = StdRng::seed_from_u64(0xD00F);
        for _ in 0..25 {
            let k = rng.random_range(1..=5usize);
            let n = rng.random_range(1..=6usize);
            let h = random_digraph(&mut rng, k, 0.5);
            let g = random_digraph(&mut rng, n, 0.4);
            let circuit = hom_circuit(&h, &g, &nice_path_td(&h)).unwrap();
            assert!(circuit.is_skew());
        }
    }

    #[test]
    fn lifted_vandermonde_top_signals_injective_homomorphisms() {
        let ring = IntegerRing;
        let mut rng = StdRng::seed_from_u64(0x1F7E);
        for trial in 0..40 {
            let k = rng.random_range(1..=3usize);
            let n = rng.random_range(1..=5usize);
            let h = random_digraph(&mut rng, k, 0.6);
            let g = random_digraph(&mut rng, n, 0.4);
            let circuit = hom_circuit(&h, &g, &nice_path_td(&h)).unwrap();
            let alg = ExteriorAlgebra::new(ring, 2 * k).unwrap();
            let blades: Vec<Blade2<IntegerRing>> = vandermonde_vectors(&ring, n, k)
                .iter()
                .map(|v| lift(&ring, v))
                .collect();
            let value = eval_circuit_extensor(&alg, &circuit, &blades).unwrap();
            let mut top = value.top_coefficient().clone();
            if lift_sign(k) < 0 {
                top = top.neg();
            }
            let injective = count_injective_homomorphisms(&h, &g).unwrap() > 0;
            assert!(
                !top.is_negative(),
                "trial {trial}: sign-corrected top {top} negative"
            );
            assert_eq!(!top.is_zero(), injective, "trial {trial}");
        }
    }

    #[test]
    fn automorphism_counts_match_known_groups_and_the_oracle() {
        let path = parse_graph("p directed 3 2\n1 2\n2 3\n").unwrap();
        assert_eq!(aut_size(&path).unwrap(), 1);
        let triangle = parse_graph("p undirected 3 3\n1 2\n1 3\n2 3\n").unwrap();
        assert_eq!(aut_size(&triangle).unwrap(), 6);
        assert_eq!(aut_size(&Digraph::new(1)).unwrap(), 1);
        assert_eq!(aut_size(&Digraph::new(4)).unwrap(), 24);

        let mut rng = StdRng::seed_from_u64(0xA07A);
        for _ in 0..30 {
            let k = rng.random_range(1..=5usize);
            let h = random_digraph(&mut rng, k, 0.5);
            assert_eq!(aut_size(&h).unwrap(), automorphism_count(&h).unwrap());
        }
        assert!(aut_size(&Digraph::new(11)).is_err());
    }

    #[test]
    fn three_path_count_in_complete_host_lands_in_the_expected_band() {
        // directed 3-path in the complete digraph on 5 vertices: every
        // ordered vertex triple hosts one copy, |Aut| = 1, so Sub = 60
        let h = parse_graph("p directed 3 2\n1 2\n2 3\n").unwrap();
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in 0..5 {
                if u != v {
                    edges.push((u, v));
                }
            }
        }
        let g = Digraph::from_edges(5, &edges).unwrap();
        let eps = Rational::new(1.into(), 4.into());
        let options = SubgraphOptions {
            trials_override: Some(1500),
            ..SubgraphOptions::default()
        };
        let est = approx_count_subgraphs(&h, &g, &eps, SeedSpec::new(11), &options).unwrap();
        assert_eq!(est.trials, 1500);
        assert_eq!(est.raw.len(), 1500);
        // lift_sign(3) < 0: every observed top is a negated square sum
        assert!(est.raw.iter().all(|t| t.is_negative() || t.is_zero()));
        let lo = Rational::from_integer(45.into());
        let hi = Rational::from_integer(75.into());
        assert!(
            est.estimate >= lo && est.estimate <= hi,
            "estimate {} outside [45, 75]",
            est.estimate
        );
    }

    #[test]
    fn absent_patterns_estimate_exactly_zero() {
        let h = parse_graph("p undirected 3 3\n1 2\n1 3\n2 3\n").unwrap();
        let g = parse_graph("p directed 4 3\n1 2\n2 3\n3 4\n").unwrap();
        let eps = Rational::new(1.into(), 2.into());
        let options = SubgraphOptions {
            trials_override: Some(64),
            ..SubgraphOptions::default()
        };
        let est = approx_count_subgraphs(&h, &g, &eps, SeedSpec::new(7), &options).unwrap();
        assert_eq!(est.estimate, Rational::from_integer(0.into()));
        assert!(est.raw.iter().all(|t| t.is_zero()));

        // pattern larger than the host: zero without sampling
        let big = Digraph::new(5);
        let est = approx_count_subgraphs(&big, &g, &eps, SeedSpec::new(7), &options).unwrap();
        assert_eq!(est.estimate, Rational::from_integer(0.into()));
        assert!(est.raw.is_empty());
    }

    #[test]
    fn single_vertex_pattern_counts_host_vertices_exactly() {
        let h = Digraph::new(1);
        let g = parse_graph("p directed 4 2\n1 2\n3 4\n").unwrap();
        let eps = Rational::new(1.into(), 10.into());
        let options = SubgraphOptions {
            trials_override: Some(25),
            ..SubgraphOptions::default()
        };
        let est = approx_count_subgraphs(&h, &g, &eps, SeedSpec::new(3), &options).unwrap();
        assert_eq!(est.estimate, Rational::from_integer(4.into()));
        assert!(est.raw.iter().all(|t| *t == Int::from(4i64)));
    }

    #[test]
    fn disconnected_patterns_are_accepted() {
        // two isolated vertices in the complete digraph on 3: Sub = 3
        let h = Digraph::new(2);
        let g = parse_graph("p directed 3 6\n1 2\n2 1\n1 3\n3 1\n2 3\n3 2\n").unwrap();
        let eps = Rational::new(1.into(), 2.into());
        let options = SubgraphOptions {
            trials_override: Some(600),
            ..SubgraphOptions::default()
        };
        let est = approx_count_subgraphs(&h, &g, &eps, SeedSpec::new(5), &options).unwrap();
        let lo = Rational::new(3.into(), 2.into());
        let hi = Rational::new(9.into(), 2.into());
        assert!(
            est.estimate >= lo && est.estimate <= hi,
            "estimate {} outside [1.5, 4.5]",
            est.estimate
        );
    }

    #[test]
    fn invalid_inputs_are_rejected() {
        let g = parse_graph("p directed 3 2\n1 2\n2 3\n").unwrap();
        let eps = Rational::new(1.into(), 4.into());
        let options = SubgraphOptions::default();
        let seed = SeedSpec::new(1);

        assert!(matches!(
            approx_count_subgraphs(&Digraph::new(0), &g, &eps, seed, &options),
            Err(Error::KOutOfRange { .. })
        ));
        assert!(matches!(
            approx_count_subgraphs(&Digraph::new(11), &g, &eps, seed, &options),
            Err(Error::PatternTooLarge { .. })
        ));
        let bad_eps = Rational::from_integer(0.into());
        assert!(matches!(
            approx_count_subgraphs(&Digraph::new(2), &g, &bad_eps, seed, &options),
            Err(Error::NonPositiveEpsilon(_))
        ));

        // a decomposition that keeps a join after normalization is refused:
        // three triangles sharing vertex 0 plus a pendant, star of bags
        let mut edges = vec![(0, 7)];
        for (a, b) in [(1, 2), (3, 4), (5, 6)] {
            edges.extend([(0, a), (0, b), (a, b)]);
        }
        let h = Digraph::from_edges(8, &edges).unwrap();
        let star = TreeDecomposition::from_parts(
            vec![vec![0, 7], vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]],
            vec![(0, 1), (0, 2), (0, 3)],
        )
        .unwrap();
        let joinful = SubgraphOptions {
            decomposition: Some(star),
            ..SubgraphOptions::default()
        };
        let host = random_host_with_vertices(9);
        assert!(matches!(
            approx_count_subgraphs(&h, &host, &eps, seed, &joinful),
            Err(Error::NoPathDecomposition(_))
        ));

        // a nice decomposition of the wrong pattern is caught by validation
        let edge_pattern = parse_graph("p directed 2 1\n1 2\n").unwrap();
        let triangle = parse_graph("p undirected 3 3\n1 2\n1 3\n2 3\n").unwrap();
        let ntd = nice_path_td(&triangle);
        assert!(hom_circuit(&edge_pattern, &g, &ntd).is_err());
    }

    fn random_host_with_vertices(n: usize) -> Digraph {
        let mut rng = StdRng::seed_from_u64(0x9A57);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.random_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        Digraph::from_edges(n, &edges).unwrap()
    }
}

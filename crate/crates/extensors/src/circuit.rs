//! Arithmetic circuits: a small gate-list IR, a text format, generic
//! evaluation over any [`Ring`], and detection of degree-`k` multilinear
//! monomials by evaluating the circuit over a zeon algebra at random points.
//!
//! Circuits are the input format for multilinear detection and the internal
//! representation used by the few-paths decision procedure; keeping one IR
//! for both means the evaluators and the brute-force expansion oracle are
//! shared.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::fmt::Write as _;

use crate::coding::{tags, SeedSpec};
use crate::error::{Error, Result};
use crate::ring::{prime_field_create, Int, Ring};
use crate::zeon::{ZeonRing, MAX_GENERATORS};

use rand::Rng;

/// One gate of an arithmetic circuit. Operands are indices of earlier gates,
/// so a gate list in order is automatically topologically sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gate {
    /// Reads variable `i` (zero-based).
    Input(usize),
    /// An integer constant.
    Const(Int),
    Add(usize, usize),
    Mul(usize, usize),
}

/// An arithmetic circuit with a single output gate.
///
/// Invariants enforced on construction: every operand index refers to an
/// earlier gate, every input index is below `num_vars`, and the output index
/// is in range. Variables the circuit never reads still count toward
/// `num_vars`, so callers can fix a variable universe up front.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    gates: Vec<Gate>,
    output: usize,
    num_vars: usize,
}

impl Circuit {
    pub fn new(gates: Vec<Gate>, output: usize, num_vars: usize) -> Result<Circuit> {
        if gates.is_empty() {
            return Err(Error::CircuitParse("circuit has no gates".into()));
        }
        for (i, gate) in gates.iter().enumerate() {
            match *gate {
                Gate::Input(v) => {
                    if v >= num_vars {
                        return Err(Error::CircuitParse(format!(
                            "gate {i} reads variable {v} but the circuit has {num_vars} variables"
                        )));
                    }
                }
                Gate::Const(_) => {}
                Gate::Add(a, b) | Gate::Mul(a, b) => {
                    if a >= i || b >= i {
                        return Err(Error::CircuitParse(format!(
                            "gate {i} references a gate that is not defined before it"
                        )));
                    }
                }
            }
        }
        if output >= gates.len() {
            return Err(Error::CircuitParse(format!(
                "output gate {output} does not exist"
            )));
        }
        Ok(Circuit {
            gates,
            output,
            num_vars,
        })
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn output(&self) -> usize {
        self.output
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// A circuit is skew when every multiplication has at least one operand
    /// that is an input or constant gate. The few-paths pipeline requires
    /// this shape.
    pub fn is_skew(&self) -> bool {
        self.gates.iter().all(|g| match *g {
            Gate::Mul(a, b) => {
                matches!(self.gates[a], Gate::Input(_) | Gate::Const(_))
                    || matches!(self.gates[b], Gate::Input(_) | Gate::Const(_))
            }
            _ => true,
        })
    }

    /// Renders the circuit in the same text format `parse_circuit` reads.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, gate) in self.gates.iter().enumerate() {
            let _ = match gate {
                Gate::Input(v) => writeln!(out, "g{} = input {}", i + 1, v + 1),
                Gate::Const(c) => writeln!(out, "g{} = const {}", i + 1, c),
                Gate::Add(a, b) => writeln!(out, "g{} = add g{} g{}", i + 1, a + 1, b + 1),
                Gate::Mul(a, b) => writeln!(out, "g{} = mul g{} g{}", i + 1, a + 1, b + 1),
            };
        }
        let _ = writeln!(out, "output g{}", self.output + 1);
        out
    }
}

/// Incremental construction helper: push gates, get back their indices,
/// finish with an output. Used by code that synthesizes circuits.
#[derive(Clone, Debug, Default)]
pub struct CircuitBuilder {
    gates: Vec<Gate>,
    num_vars: usize,
}

impl CircuitBuilder {
    pub fn new(num_vars: usize) -> CircuitBuilder {
        CircuitBuilder {
            gates: Vec::new(),
            num_vars,
        }
    }

    fn push(&mut self, gate: Gate) -> usize {
        self.gates.push(gate);
        self.gates.len() - 1
    }

    pub fn input(&mut self, var: usize) -> usize {
        debug_assert!(var < self.num_vars);
        self.push(Gate::Input(var))
    }

    pub fn constant(&mut self, value: Int) -> usize {
        self.push(Gate::Const(value))
    }

    pub fn add(&mut self, a: usize, b: usize) -> usize {
        self.push(Gate::Add(a, b))
    }

    pub fn mul(&mut self, a: usize, b: usize) -> usize {
        self.push(Gate::Mul(a, b))
    }

    /// Sums a slice of gates with a left-leaning add chain. Returns `None`
    /// for an empty slice so callers can keep "no terms" distinct from a
    /// zero constant.
    pub fn add_chain(&mut self, terms: &[usize]) -> Option<usize> {
        let (&first, rest) = terms.split_first()?;
        let mut acc = first;
        for &t in rest {
            acc = self.add(acc, t);
        }
        Some(acc)
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    pub fn gate(&self, i: usize) -> &Gate {
        &self.gates[i]
    }

    pub fn finish(self, output: usize) -> Result<Circuit> {
        Circuit::new(self.gates, output, self.num_vars)
    }
}

/// Parses the line-oriented circuit format:
///
/// ```text
/// # comment
/// g1 = input 1
/// g2 = const -3
/// g3 = add g1 g2
/// g4 = mul g3 g1
/// output g4
/// ```
///
/// Gate names are `g<id>` with distinct positive ids, defined before use;
/// variables are one-based. The single `output` line must come last. The
/// variable universe is `1..=max input index`.
pub fn parse_circuit(text: &str) -> Result<Circuit> {
    let fail = |line: usize, msg: String| Error::CircuitParse(format!("line {line}: {msg}"));
    let mut names: HashMap<u64, usize> = HashMap::new();
    let mut gates: Vec<Gate> = Vec::new();
    let mut output: Option<usize> = None;
    let mut max_var = 0usize;

    let parse_name = |tok: &str, line: usize| -> Result<u64> {
        tok.strip_prefix('g')
            .and_then(|rest| rest.parse::<u64>().ok())
            .ok_or_else(|| fail(line, format!("expected a gate name like g3, got `{tok}`")))
    };

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        if output.is_some() {
            return Err(fail(line, "content after the output line".into()));
        }

        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "output" {
            if tokens.len() != 2 {
                return Err(fail(line, "output line must name exactly one gate".into()));
            }
            let name = parse_name(tokens[1], line)?;
            let gate = *names
                .get(&name)
                .ok_or_else(|| fail(line, format!("output names undefined gate g{name}")))?;
            output = Some(gate);
            continue;
        }

        if tokens.len() < 4 || tokens[1] != "=" {
            return Err(fail(line, format!("cannot parse `{content}`")));
        }
        let name = parse_name(tokens[0], line)?;
        if names.contains_key(&name) {
            return Err(fail(line, format!("gate g{name} is defined twice")));
        }

        let lookup = |tok: &str| -> Result<usize> {
            let id = parse_name(tok, line)?;
            names
                .get(&id)
                .copied()
                .ok_or_else(|| fail(line, format!("gate g{id} is used before it is defined")))
        };

        let gate = match (tokens[2], &tokens[3..]) {
            ("input", [v]) => {
                let var: usize = v
                    .parse()
                    .map_err(|_| fail(line, format!("bad variable index `{v}`")))?;
                if var == 0 {
                    return Err(fail(line, "variable indices are one-based".into()));
                }
                max_var = max_var.max(var);
                Gate::Input(var - 1)
            }
            ("const", [c]) => {
                let value: Int = c
                    .parse()
                    .map_err(|_| fail(line, format!("bad integer constant `{c}`")))?;
                Gate::Const(value)
            }
            ("add", [a, b]) => Gate::Add(lookup(a)?, lookup(b)?),
            ("mul", [a, b]) => Gate::Mul(lookup(a)?, lookup(b)?),
            (kind, _) => {
                return Err(fail(
                    line,
                    format!("unknown gate kind or arity in `{kind} ...`"),
                ));
            }
        };
        names.insert(name, gates.len());
        gates.push(gate);
    }

    let output = output.ok_or_else(|| Error::CircuitParse("missing output line".into()))?;
    Circuit::new(gates, output, max_var)
}

/// Evaluates the circuit over an arbitrary ring. `assignment[i]` is the
/// value of variable `i`; its length must equal the circuit's variable
/// count.
pub fn eval_circuit<R: Ring>(
    ring: &R,
    circuit: &Circuit,
    assignment: &[R::Element],
) -> Result<R::Element> {
    if assignment.len() != circuit.num_vars() {
        return Err(Error::CircuitEval(format!(
            "assignment has {} values but the circuit reads {} variables",
            assignment.len(),
            circuit.num_vars()
        )));
    }
    let mut values: Vec<R::Element> = Vec::with_capacity(circuit.len());
    for gate in circuit.gates() {
        let value = match *gate {
            Gate::Input(v) => assignment[v].clone(),
            Gate::Const(ref c) => ring.from_int(c),
            Gate::Add(a, b) => ring.add(&values[a], &values[b]),
            Gate::Mul(a, b) => ring.mul(&values[a], &values[b]),
        };
        values.push(value);
    }
    Ok(values[circuit.output()].clone())
}

/// Largest `k` for which multilinear detection fits the zeon generator cap
/// (`ceil(1.3 k)` generators must not exceed [`MAX_GENERATORS`]).
pub const MAX_MULTILINEAR_K: usize = 18;

/// Number of zeon generators used for degree-`k` detection.
pub fn multilinear_generator_count(k: usize) -> usize {
    (13 * k).div_ceil(10)
}

/// Number of independent random trials for degree-`k` detection. Grows like
/// `5 * 1.752^k`, which drives the per-trial miss probability down to a
/// constant overall failure bound.
pub fn multilinear_trial_count(k: usize) -> u64 {
    (5.0 * 1.752f64.powi(k as i32)).ceil() as u64
}

/// Decides whether the polynomial computed by `circuit` contains a monomial
/// that is multilinear of degree exactly `k` (k distinct variables, each
/// with exponent one, and a nonzero coefficient).
///
/// Each trial draws a fresh 62-bit prime field, maps variable `i` to
/// `alpha_i * g_{j(i)}` for a random scalar `alpha_i <= 100 k` and a random
/// generator index `j(i)`, evaluates the circuit over the zeon algebra, and
/// inspects every grade-`k` coefficient. A nonzero coefficient is possible
/// only in the presence of a degree-`k` multilinear monomial, so a `true`
/// answer is always correct; `false` answers are wrong with probability at
/// most `e^-5` over the trial schedule.
pub fn detect_multilinear(circuit: &Circuit, k: usize, seed: SeedSpec) -> Result<bool> {
    if k == 0 || k > MAX_MULTILINEAR_K {
        return Err(Error::KOutOfRange {
            k,
            max: MAX_MULTILINEAR_K,
        });
    }
    // A degree-k multilinear monomial mentions k distinct variables.
    if k > circuit.num_vars() {
        return Ok(false);
    }
    let t = multilinear_generator_count(k);
    debug_assert!(t <= MAX_GENERATORS);
    let trials = multilinear_trial_count(k);
    let alpha_cap = 100 * k as u64;

    for trial in 0..trials {
        let mut rng = seed.trial_rng(tags::MULTILINEAR, trial);
        let field = prime_field_create(62, &mut rng)?;
        let zr = ZeonRing::new(field.clone(), t)?;
        let assignment: Vec<_> = (0..circuit.num_vars())
            .map(|_| {
                let alpha = rng.random_range(0..=alpha_cap) % field.modulus();
                let gen = rng.random_range(1..=t);
                zr.scaled_generator(gen, alpha)
            })
            .collect();
        let value = eval_circuit(&zr, circuit, &assignment)?;
        if zr.grade_coefficients(&value, k as u32).any(|(_, c)| *c != 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Caps for the brute-force expansion oracle below.
pub const EXPAND_VAR_CAP: usize = 12;
pub const EXPAND_DEGREE_CAP: u32 = 8;
pub const EXPAND_TERM_BUDGET: usize = 200_000;

/// A fully expanded polynomial with explicit exponent vectors. This is the
/// ground-truth representation the expansion oracle produces; it is
/// deliberately naive and only viable for small circuits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Int>,
}

impl ExpandedPoly {
    fn zero(num_vars: usize) -> ExpandedPoly {
        ExpandedPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    fn constant(num_vars: usize, value: Int) -> ExpandedPoly {
        let mut p = ExpandedPoly::zero(num_vars);
        if !value.is_zero() {
            p.terms.insert(vec![0; num_vars], value);
        }
        p
    }

    fn variable(num_vars: usize, v: usize) -> ExpandedPoly {
        let mut exps = vec![0; num_vars];
        exps[v] = 1;
        let mut p = ExpandedPoly::zero(num_vars);
        p.terms.insert(exps, Int::ONE);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Int> {
        &self.terms
    }

    pub fn coefficient(&self, exps: &[u32]) -> Int {
        self.terms.get(exps).cloned().unwrap_or(Int::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when some monomial uses `k` distinct variables, all with
    /// exponent one, and a nonzero coefficient.
    pub fn has_multilinear_term_of_degree(&self, k: usize) -> bool {
        self.terms.iter().any(|(exps, coeff)| {
            !coeff.is_zero()
                && exps.iter().all(|&e| e <= 1)
                && exps.iter().map(|&e| e as usize).sum::<usize>() == k
        })
    }

    /// Evaluates the expanded polynomial at an integer point; used to
    /// cross-check the expansion against direct circuit evaluation.
    pub fn eval_int(&self, point: &[Int]) -> Int {
        assert_eq!(point.len(), self.num_vars);
        let mut total = Int::ZERO;
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (value, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term = term.mul(&value.pow(e));
                }
            }
            total.add_assign(&term);
        }
        total
    }

    fn add(&self, other: &ExpandedPoly) -> ExpandedPoly {
        let mut out = self.clone();
        for (exps, coeff) in &other.terms {
            let entry = out.terms.entry(exps.clone()).or_insert(Int::ZERO);
            entry.add_assign(coeff);
            if entry.is_zero() {
                out.terms.remove(exps);
            }
        }
        out
    }

    fn mul(&self, other: &ExpandedPoly) -> Result<ExpandedPoly> {
        let mut out = ExpandedPoly::zero(self.num_vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let degree: u32 = exps.iter().sum();
                if degree > EXPAND_DEGREE_CAP {
                    return Err(Error::BudgetExceeded(format!(
                        "expansion reached total degree {degree} > {EXPAND_DEGREE_CAP}"
                    )));
                }
                let entry = out.terms.entry(exps.clone()).or_insert(Int::ZERO);
                entry.add_assign(&ca.mul(cb));
                if entry.is_zero() {
                    out.terms.remove(&exps);
                }
                if out.terms.len() > EXPAND_TERM_BUDGET {
                    return Err(Error::BudgetExceeded(format!(
                        "expansion exceeded {EXPAND_TERM_BUDGET} monomials"
                    )));
                }
            }
        }
        Ok(out)
    }
}

/// Test oracle: expands the circuit into an explicit sum of monomials.
/// Exponential in the worst case, so it refuses circuits with more than
/// [`EXPAND_VAR_CAP`] variables and aborts past [`EXPAND_DEGREE_CAP`] total
/// degree or [`EXPAND_TERM_BUDGET`] monomials.
pub fn expand_circuit_oracle(circuit: &Circuit) -> Result<ExpandedPoly> {
    if circuit.num_vars() > EXPAND_VAR_CAP {
        return Err(Error::KOutOfRange {
            k: circuit.num_vars(),
            max: EXPAND_VAR_CAP,
        });
    }
    let n = circuit.num_vars();
    let mut values: Vec<ExpandedPoly> = Vec::with_capacity(circuit.len());
    for gate in circuit.gates() {
        let value = match *gate {
            Gate::Input(v) => ExpandedPoly::variable(n, v),
            Gate::Const(ref c) => ExpandedPoly::constant(n, c.clone()),
            Gate::Add(a, b) => values[a].add(&values[b]),
            Gate::Mul(a, b) => values[a].mul(&values[b])?,
        };
        values.push(value);
    }
    Ok(values[circuit.output()].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{IntegerRing, PrimeField};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    const SUM_SQUARED: &str = "\
# (x1 + x2)^2
g1 = input 1
g2 = input 2
g3 = add g1 g2
g4 = mul g3 g3
output g4
";

    #[test]
    fn parse_and_eval_over_integers() {
        let c = parse_circuit(SUM_SQUARED).unwrap();
        assert_eq!(c.num_vars(), 2);
        assert_eq!(c.len(), 4);
        let ring = IntegerRing;
        let val = eval_circuit(&ring, &c, &[Int::from(3), Int::from(4)]).unwrap();
        assert_eq!(val, Int::from(49));
    }

    #[test]
    fn eval_over_prime_field_reduces() {
        let c = parse_circuit(SUM_SQUARED).unwrap();
        let field = PrimeField::new(7).unwrap();
        let val = eval_circuit(&field, &c, &[3, 4]).unwrap();
        assert_eq!(val, 0); // 49 mod 7
    }

    #[test]
    fn big_constants_survive_parse_and_eval() {
        let text = "\
g1 = const 123456789012345678901234567890
g2 = input 1
g3 = mul g1 g2
output g3
";
        let c = parse_circuit(text).unwrap();
        let val = eval_circuit(&IntegerRing, &c, &[Int::from(2)]).unwrap();
        assert_eq!(val, "246913578024691357802469135780".parse().unwrap());
    }

    #[test]
    fn parse_rejects_malformed_circuits() {
        // Forward reference.
        let err = parse_circuit("g1 = add g2 g2\ng2 = input 1\noutput g1").unwrap_err();
        assert!(err.to_string().contains("before it is defined"), "{err}");
        // Unknown gate kind.
        let err = parse_circuit("g1 = xor g1 g1\noutput g1").unwrap_err();
        assert!(err.to_string().contains("unknown gate kind"), "{err}");
        // Missing output.
        let err = parse_circuit("g1 = input 1").unwrap_err();
        assert!(err.to_string().contains("missing output"), "{err}");
        // Duplicate definition.
        let err = parse_circuit("g1 = input 1\ng1 = input 2\noutput g1").unwrap_err();
        assert!(err.to_string().contains("defined twice"), "{err}");
        // Zero variable index (the format is one-based).
        let err = parse_circuit("g1 = input 0\noutput g1").unwrap_err();
        assert!(err.to_string().contains("one-based"), "{err}");
        // Content after output.
        let err = parse_circuit("g1 = input 1\noutput g1\ng2 = input 2").unwrap_err();
        assert!(err.to_string().contains("after the output"), "{err}");
    }

    #[test]
    fn eval_rejects_wrong_assignment_length() {
        let c = parse_circuit(SUM_SQUARED).unwrap();
        let err = eval_circuit(&IntegerRing, &c, &[Int::from(1)]).unwrap_err();
        assert!(matches!(err, Error::CircuitEval(_)));
    }

    #[test]
    fn to_text_round_trips() {
        let c = parse_circuit(SUM_SQUARED).unwrap();
        let again = parse_circuit(&c.to_text()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn expansion_matches_hand_computation() {
        let c = parse_circuit(SUM_SQUARED).unwrap();
        let p = expand_circuit_oracle(&c).unwrap();
        // (x1 + x2)^2 = x1^2 + 2 x1 x2 + x2^2
        assert_eq!(p.terms().len(), 3);
        assert_eq!(p.coefficient(&[2, 0]), Int::from(1));
        assert_eq!(p.coefficient(&[1, 1]), Int::from(2));
        assert_eq!(p.coefficient(&[0, 2]), Int::from(1));
        assert!(p.has_multilinear_term_of_degree(2));
        assert!(!p.has_multilinear_term_of_degree(1));
    }

    #[test]
    fn expansion_agrees_with_direct_evaluation() {
        let mut rng = StdRng::seed_from_u64(07_2201);
        for _ in 0..40 {
            let c = random_circuit(&mut rng, 3, 7);
            let p = match expand_circuit_oracle(&c) {
                Ok(p) => p,
                Err(_) => continue, // blew a cap; fine for random circuits
            };
            let point: Vec<Int> = (0..3).map(|_| Int::from(rng.random_range(-5i64..=5))).collect();
            let direct = eval_circuit(&IntegerRing, &c, &point).unwrap();
            assert_eq!(p.eval_int(&point), direct);
        }
    }

    #[test]
    fn expansion_enforces_degree_cap() {
        // Repeated squaring reaches degree 16 > 8.
        let text = "\
g1 = input 1
g2 = mul g1 g1
g3 = mul g2 g2
g4 = mul g3 g3
g5 = mul g4 g4
output g5
";
        let c = parse_circuit(text).unwrap();
        let err = expand_circuit_oracle(&c).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)), "{err}");
    }

    #[test]
    fn skew_recognition() {
        let c = parse_circuit(SUM_SQUARED).unwrap();
        assert!(!c.is_skew()); // g4 multiplies two add gates
        let skew = parse_circuit("g1 = input 1\ng2 = input 2\ng3 = mul g1 g2\noutput g3").unwrap();
        assert!(skew.is_skew());
    }

    #[test]
    fn multilinear_square_of_sum_has_cross_term() {
        // (x1 + x2)^2 contains 2 x1 x2, so degree-2 detection must fire.
        let c = parse_circuit(SUM_SQUARED).unwrap();
        assert!(detect_multilinear(&c, 2, SeedSpec::new(11)).unwrap());
    }

    #[test]
    fn multilinear_pure_square_has_none() {
        // x1^2 * (x2 + 3) has no multilinear degree-2 monomial.
        let text = "\
g1 = input 1
g2 = input 2
g3 = const 3
g4 = mul g1 g1
g5 = add g2 g3
g6 = mul g4 g5
output g6
";
        let c = parse_circuit(text).unwrap();
        assert!(!detect_multilinear(&c, 2, SeedSpec::new(12)).unwrap());
        // x1^2 x2 is degree 3 but not multilinear.
        assert!(!detect_multilinear(&c, 3, SeedSpec::new(12)).unwrap());
    }

    #[test]
    fn multilinear_k_above_variable_count_is_false() {
        let c = parse_circuit(SUM_SQUARED).unwrap();
        assert!(!detect_multilinear(&c, 3, SeedSpec::new(13)).unwrap());
    }

    #[test]
    fn multilinear_rejects_out_of_range_k() {
        let c = parse_circuit(SUM_SQUARED).unwrap();
        assert!(detect_multilinear(&c, 0, SeedSpec::new(1)).is_err());
        assert!(detect_multilinear(&c, MAX_MULTILINEAR_K + 1, SeedSpec::new(1)).is_err());
    }

    #[test]
    fn multilinear_detection_matches_expansion_oracle() {
        let mut rng = StdRng::seed_from_u64(0xC1AC);
        let seed = SeedSpec::new(99);
        let mut positives = 0;
        for _ in 0..30 {
            let c = random_circuit(&mut rng, 4, 8);
            let p = match expand_circuit_oracle(&c) {
                Ok(p) => p,
                Err(_) => continue,
            };
            for k in 2..=3 {
                let expected = p.has_multilinear_term_of_degree(k);
                let got = detect_multilinear(&c, k, seed).unwrap();
                assert_eq!(got, expected, "k = {k}, circuit:\n{}", c.to_text());
                positives += usize::from(expected);
            }
        }
        assert!(positives > 0, "test corpus never exercised the true case");
    }

    #[test]
    fn trial_schedule_matches_growth_rates() {
        assert_eq!(multilinear_generator_count(3), 4); // ceil(3.9)
        assert_eq!(multilinear_generator_count(10), 13);
        assert_eq!(multilinear_trial_count(1), 9); // ceil(8.76)
        assert_eq!(multilinear_trial_count(3), 27); // ceil(26.9...)
    }

    /// Random gate soup over `vars` variables with small constants. Keeps
    /// multiplication shallow enough that expansion usually stays in budget.
    fn random_circuit(rng: &mut StdRng, vars: usize, extra_gates: usize) -> Circuit {
        let mut b = CircuitBuilder::new(vars);
        for v in 0..vars {
            b.input(v);
        }
        for _ in 0..extra_gates {
            let n = b.len();
            let a = rng.random_range(0..n);
            let c = rng.random_range(0..n);
            match rng.random_range(0..4u8) {
                0 | 1 => b.add(a, c),
                2 => b.mul(a, c),
                _ => {
                    let k = Int::from(rng.random_range(-3i64..=3));
                    let g = b.constant(k);
                    b.add(a, g)
                }
            };
        }
        let out = b.len() - 1;
        b.finish(out).unwrap()
    }
}

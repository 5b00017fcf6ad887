//! `extensors bench` — cost measurements for the three kernels whose scaling
//! the library's design leans on:
//!
//! * `wedge`: nanoseconds per skew product against a dense operand, for
//!   dimensions k = 8…14. Each unit increase of k should roughly double the
//!   cost (the coefficient table has 2^k entries).
//! * `walk`: exact ring-operation counts of the scalar walk-sum at fixed k
//!   while the edge count m grows, via an instrumented counting ring. The
//!   ops-per-edge column should stay flat — cost linear in m.
//! * `zeon`: plain subset convolution (3^t multiplications) versus the
//!   rank-tracked transform (t²·2^t operations) for nilpotent generators,
//!   reporting where the transform starts winning.
//!
//! Tables go to standard output; these runs measure cost, not correctness,
//! so there is no JSON report.

use std::hint::black_box;
use std::time::Instant;

use anyhow::Result;
use clap::ValueEnum;

use extensors::exterior::{ExtVector, Extensor, ExteriorAlgebra};
use extensors::graph::{walk_sum, Coding, Digraph};
use extensors::ring::{CountingRing, IntegerRing, Ring};
use extensors::zeon::{Zeon, ZeonRing};

#[derive(clap::Args)]
pub struct BenchArgs {
    /// Which measurement to run
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    Wedge,
    Walk,
    Zeon,
    All,
}

pub fn run(args: &BenchArgs) -> Result<u8> {
    let all = args.suite == Suite::All;
    if all || args.suite == Suite::Wedge {
        bench_wedge()?;
    }
    if all || args.suite == Suite::Walk {
        bench_walk()?;
    }
    if all || args.suite == Suite::Zeon {
        bench_zeon()?;
    }
    Ok(0)
}

/// Runs `f` in growing batches until one batch takes ≥ 20 ms, then reports
/// (batch size, nanoseconds per call). A single slow call returns directly.
fn time_ns<F: FnMut()>(mut f: F) -> (u64, f64) {
    f(); // warm-up
    let mut reps: u64 = 1;
    loop {
        let start = Instant::now();
        for _ in 0..reps {
            f();
        }
        let elapsed = start.elapsed();
        if elapsed.as_millis() >= 20 || reps >= 1 << 22 {
            return (reps, elapsed.as_nanos() as f64 / reps as f64);
        }
        reps *= 4;
    }
}

/// The sum of all basis blades: every one of the 2^k coefficients is 1, so a
/// product against it exercises the full coefficient table.
fn dense_extensor(alg: &ExteriorAlgebra<IntegerRing>, k: usize) -> Result<Extensor<IntegerRing>> {
    let mut x = alg.one();
    for i in 0..k {
        let factor = alg.add(&alg.one(), &alg.basis(1 << i))?;
        x = alg.wedge_general(&x, &factor)?;
    }
    Ok(x)
}

fn bench_wedge() -> Result<()> {
    println!("wedge_vector: dense operand in dimension k, integer coefficients");
    println!("{:>4} {:>10} {:>14} {:>8}", "k", "reps", "ns/call", "vs k-1");
    let ring = IntegerRing;
    let mut prev: Option<f64> = None;
    for k in 8..=14 {
        let alg = ExteriorAlgebra::new(ring.clone(), k)?;
        let x = dense_extensor(&alg, k)?;
        let v = ExtVector::new(vec![ring.one(); k]);
        let (reps, ns) = time_ns(|| {
            let _ = black_box(alg.wedge_vector(black_box(&x), &v));
        });
        match prev {
            Some(p) => println!("{k:>4} {reps:>10} {ns:>14.0} {:>8.2}", ns / p),
            None => println!("{k:>4} {reps:>10} {ns:>14.0} {:>8}", "-"),
        }
        prev = Some(ns);
    }
    println!();
    Ok(())
}

/// A graph on n vertices whose edge set is the union of d "stride" cycles
/// (i → i+s mod n for s = 1…d): every vertex has out-degree d, so doubling d
/// doubles m with the structure otherwise unchanged.
fn stride_graph(n: usize, strides: usize) -> Result<Digraph> {
    let mut edges = Vec::with_capacity(n * strides);
    for s in 1..=strides {
        for u in 0..n {
            edges.push((u, (u + s) % n));
        }
    }
    Digraph::from_edges(n, &edges).map_err(Into::into)
}

fn bench_walk() -> Result<()> {
    let k = 6;
    let n = 60;
    println!("walk_sum: ring operations at fixed k = {k}, n = {n}, growing m");
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>8}",
        "m", "muls", "adds", "total", "ops/m"
    );
    for strides in [1usize, 2, 4, 8] {
        let g = stride_graph(n, strides)?;
        let ring = CountingRing::new(IntegerRing);
        let codes = vec![ring.one(); n];
        let coding = Coding::from_scalars(&ring, codes, g.m());
        ring.counts().reset();
        let _ = walk_sum(&g, &coding, k, &ring)?;
        let muls = ring.counts().muls();
        let adds = ring.counts().adds();
        let total = muls + adds;
        println!(
            "{:>6} {muls:>12} {adds:>12} {total:>12} {:>8.2}",
            g.m(),
            total as f64 / g.m() as f64
        );
    }
    println!();
    Ok(())
}

/// The product of (1 + cᵢ·ζᵢ) over all generators: every square-free monomial
/// appears with a small positive coefficient, so both multiplication routines
/// see a fully dense operand.
fn dense_zeon(zr: &ZeonRing<IntegerRing>, t: usize) -> Result<Zeon<IntegerRing>> {
    let ring = IntegerRing;
    let mut x = zr.scalar(ring.one());
    for i in 1..=t {
        let mut factor = zr.scalar(ring.one());
        factor[1 << (i - 1)] = ring.from_i64(if i % 2 == 0 { 2 } else { 1 });
        x = zr.multiply_naive(&x, &factor)?;
    }
    Ok(x)
}

fn bench_zeon() -> Result<()> {
    println!("zeon multiplication: subset convolution vs rank-tracked transform");
    println!(
        "{:>4} {:>14} {:>14} {:>12}",
        "t", "naive ns", "fast ns", "fast/naive"
    );
    let mut crossover: Option<usize> = None;
    for t in [6usize, 8, 10, 12, 14, 16] {
        let zr = ZeonRing::new(IntegerRing, t)?;
        let x = dense_zeon(&zr, t)?;
        let (_, naive_ns) = time_ns(|| {
            let _ = black_box(zr.multiply_naive(black_box(&x), &x));
        });
        let (_, fast_ns) = time_ns(|| {
            let _ = black_box(zr.multiply_fast(black_box(&x), &x));
        });
        println!(
            "{t:>4} {naive_ns:>14.0} {fast_ns:>14.0} {:>12.2}",
            fast_ns / naive_ns
        );
        if fast_ns < naive_ns && crossover.is_none() {
            crossover = Some(t);
        }
    }
    match crossover {
        Some(t) => println!("rank-tracked transform overtakes the naive product at t = {t}"),
        None => println!("naive product still ahead at t = 16"),
    }
    println!();
    Ok(())
}

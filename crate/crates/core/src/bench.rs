//! Timing helpers for the multiplication engine.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::additive::{build_additive_context_with, AdditiveParams};
use crate::convolution::{ConvPath, ConvPath::*};
use crate::engine::{nb_multiply_counted, GroupKind, NormalBasisContext, OpCount};
use crate::error::{Error, Result};
use crate::ff::{arith, FieldSpec};
use crate::kummer::{build_kummer_context_with, KummerParams};
use crate::lucas::{build_lucas_context_with, LucasParams};

/// One line of a benchmark table.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub q: u64,
    pub path: ConvPath,
    pub per_multiply: Duration,
    pub ops: OpCount,
}

/// Minimum over `rounds` of the mean time per multiplication across `pairs`
/// seeded random operand pairs.
pub fn time_multiply(
    ctx: &NormalBasisContext,
    pairs: usize,
    rounds: usize,
    seed: u64,
) -> Result<(Duration, OpCount)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let operands: Vec<_> = (0..pairs.max(1))
        .map(|_| (ctx.random(&mut rng), ctx.random(&mut rng)))
        .collect();
    let mut best = Duration::MAX;
    let mut ops = OpCount::default();
    for _ in 0..rounds.max(1) {
        let start = Instant::now();
        for (x, y) in &operands {
            let (z, o) = nb_multiply_counted(ctx, x, y)?;
            std::hint::black_box(z);
            ops = o;
        }
        best = best.min(start.elapsed() / operands.len() as u32);
    }
    Ok((best, ops))
}

fn smallest_prime(pred: impl Fn(u64) -> bool) -> u64 {
    (3..).find(|&q| arith::is_prime(q) && pred(q)).unwrap()
}

/// Context of the given kind and degree over a small prime field chosen to
/// admit it: additive uses `F_{n²}` (`n` prime); kummer the smallest prime
/// `q ≡ 1 mod 2n` with `m = 2`; lucas the smallest prime `q` with
/// `n | q + 1` and `n < q + 1`.
pub fn family_context(kind: GroupKind, n: usize, seed: u64, path: ConvPath) -> Result<NormalBasisContext> {
    let n64 = n as u64;
    match kind {
        GroupKind::Additive => {
            if !arith::is_prime(n64) {
                return Err(Error::InvalidParameter(format!(
                    "additive degree {n} must be prime"
                )));
            }
            let k = FieldSpec::with_degree(n64, 2)?;
            build_additive_context_with(&AdditiveParams::with_defaults(&k)?, path)
        }
        GroupKind::Multiplicative => {
            let q = smallest_prime(|q| (q - 1) % (2 * n64) == 0);
            let k = FieldSpec::prime(q)?;
            build_kummer_context_with(&KummerParams::with_defaults(&k, n, 2)?, path)
        }
        GroupKind::Lucas => {
            let q = smallest_prime(|q| (q + 1) % n64 == 0 && n64 < q + 1);
            let k = FieldSpec::prime(q)?;
            build_lucas_context_with(&LucasParams::with_defaults(&k, n)?, seed, path)
        }
    }
}

/// Benchmarks one context per size.
pub fn bench_family(kind: GroupKind, sizes: &[usize], seed: u64, path: ConvPath) -> Result<Vec<BenchRow>> {
    sizes
        .iter()
        .map(|&n| {
            let ctx = family_context(kind, n, seed, path)?;
            let (per_multiply, ops) = time_multiply(&ctx, 16, 5, seed)?;
            Ok(BenchRow {
                n,
                q: ctx.base.q(),
                path: ctx.convolver().effective_path(),
                per_multiply,
                ops,
            })
        })
        .collect()
}

pub fn path_name(p: ConvPath) -> &'static str {
    match p {
        Auto => "auto",
        Naive => "naive",
        Karatsuba => "karatsuba",
        Ntt => "ntt",
    }
}

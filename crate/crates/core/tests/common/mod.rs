#![allow(dead_code)]

use nbasis::additive::{build_additive_context, AdditiveParams};
use nbasis::engine::NormalBasisContext;
use nbasis::ff::{arith, FieldSpec};
use nbasis::kummer::{build_kummer_context, KummerParams};
use nbasis::lucas::{build_lucas_context, LucasParams};

pub fn is_prime_power(q: u64) -> bool {
    arith::prime_power(q).is_some()
}

pub struct SweepEntry {
    pub label: String,
    pub ctx: NormalBasisContext,
}

/// Additive contexts over quadratic and cubic extensions of `F_p`.
pub fn additive_sweep() -> Vec<SweepEntry> {
    let mut out = Vec::new();
    for p in [3u64, 5, 7, 11, 13] {
        for d in [2usize, 3] {
            let k = FieldSpec::with_degree(p, d).unwrap();
            let ctx = build_additive_context(&AdditiveParams::with_defaults(&k).unwrap()).unwrap();
            out.push(SweepEntry {
                label: format!("additive q={}^{d}", p),
                ctx,
            });
        }
    }
    out
}

/// Kummer contexts for every `(q, n, m)` with `q ≤ 64`, `mn | q − 1`.
pub fn kummer_sweep() -> Vec<SweepEntry> {
    let mut out = Vec::new();
    for q in (2..=64u64).filter(|&q| is_prime_power(q)) {
        let k = FieldSpec::of_order(q).unwrap();
        for n in 2..q as usize {
            for m in 2..q {
                if (q - 1) % (m * n as u64) != 0 {
                    continue;
                }
                let ctx = build_kummer_context(&KummerParams::with_defaults(&k, n, m).unwrap()).unwrap();
                out.push(SweepEntry {
                    label: format!("kummer q={q} n={n} m={m}"),
                    ctx,
                });
            }
        }
    }
    out
}

/// Torus contexts for every nontrivial `n | q + 1`, odd `q ≤ 50`.
pub fn lucas_sweep() -> Vec<SweepEntry> {
    let mut out = Vec::new();
    for q in (3..=50u64).filter(|&q| q % 2 == 1 && is_prime_power(q)) {
        let k = FieldSpec::of_order(q).unwrap();
        for n in (2..=q as usize).filter(|&n| (q + 1) % n as u64 == 0) {
            let ctx = build_lucas_context(&LucasParams::with_defaults(&k, n).unwrap(), 0).unwrap();
            out.push(SweepEntry {
                label: format!("lucas q={q} n={n}"),
                ctx,
            });
        }
    }
    out
}

pub fn full_sweep() -> Vec<SweepEntry> {
    let mut all = additive_sweep();
    all.extend(kummer_sweep());
    all.extend(lucas_sweep());
    all
}

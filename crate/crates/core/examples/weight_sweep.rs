//! Weights of the three constructions over small fields, against the bounds
//! 2n - 1 and 3n - 2.

use nbasis::additive::{build_additive_context, AdditiveParams};
use nbasis::engine::NormalBasisContext;
use nbasis::ff::{arith, FieldSpec};
use nbasis::kummer::{build_kummer_context, KummerParams};
use nbasis::lucas::{build_lucas_context, LucasParams};
use nbasis::oracle::compute_weight;

fn report(label: &str, ctx: &NormalBasisContext) -> nbasis::Result<()> {
    let n = ctx.n;
    let w = compute_weight(ctx)?;
    let flag = if w > 3 * n - 2 { "  above 3n-2" } else { "" };
    println!("{label:28} n={n:3} w={w:4}  [{}, {}]{flag}", 2 * n - 1, 3 * n - 2);
    Ok(())
}

fn main() -> nbasis::Result<()> {
    for p in [3, 5, 7] {
        let k = FieldSpec::with_degree(p, 2)?;
        report(
            &format!("additive F_{}", k.q()),
            &build_additive_context(&AdditiveParams::with_defaults(&k)?)?,
        )?;
    }
    for (q, n, m) in [(13, 3, 2), (31, 5, 3), (61, 6, 10), (49, 8, 3)] {
        let k = FieldSpec::of_order(q)?;
        report(
            &format!("kummer F_{q} m={m}"),
            &build_kummer_context(&KummerParams::with_defaults(&k, n, m)?)?,
        )?;
    }
    for q in [7u64, 11, 13, 25] {
        let k = FieldSpec::of_order(q)?;
        for n in arith::divisors(q + 1).into_iter().filter(|&d| d > 1 && d < q + 1) {
            let ctx = build_lucas_context(&LucasParams::with_defaults(&k, n as usize)?, 0)?;
            report(&format!("lucas F_{q}"), &ctx)?;
        }
    }
    Ok(())
}

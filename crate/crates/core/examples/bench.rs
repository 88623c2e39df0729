//! Multiplication time along the kummer family n = 6, 12, 24, 48.

use nbasis::bench::{bench_family, path_name};
use nbasis::convolution::ConvPath;
use nbasis::engine::GroupKind;

fn main() -> nbasis::Result<()> {
    let sizes = [6, 12, 24, 48];
    for path in [ConvPath::Naive, ConvPath::Ntt] {
        let rows = bench_family(GroupKind::Multiplicative, &sizes, 0, path)?;
        let mut prev: Option<f64> = None;
        for r in rows {
            let t = r.per_multiply.as_secs_f64();
            let ratio = prev.map(|p| format!("x{:.2}", t / p)).unwrap_or_default();
            println!(
                "{:6} n={:3} q={:3} {:>10.2?} {ratio}",
                path_name(r.path),
                r.n,
                r.q,
                r.per_multiply
            );
            prev = Some(t);
        }
    }
    Ok(())
}

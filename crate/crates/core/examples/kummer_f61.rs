//! Kummer basis of F_61[X]/(X^6 - 2), the multiplication table and the
//! Frobenius action as a coordinate shift.

use nbasis::engine::{nb_frobenius, nb_multiply_counted};
use nbasis::ff::FieldSpec;
use nbasis::kummer::{build_kummer_context, KummerParams};
use nbasis::oracle::{oracle_frobenius, StructureConstants};

fn main() -> nbasis::Result<()> {
    let k = FieldSpec::prime(61)?;
    let ctx = build_kummer_context(&KummerParams::with_a(&k, 6, 10, k.from_u64(2))?)?;

    let table = StructureConstants::compute(&ctx)?;
    for (i, row) in table.rows.iter().enumerate() {
        println!("theta_0 * theta_{i} = {row}");
    }
    println!("weight {}", table.weight());

    let x = ctx.element_u64(&[1, 3, 1, 1, 2, 1])?;
    let y = ctx.element_u64(&[2, 1, 1, 4, 2, 1])?;
    let (z, ops) = nb_multiply_counted(&ctx, &x, &y)?;
    println!(
        "x * y = {z} ({} convolutions, {} pointwise)",
        ops.convolutions, ops.pointwise
    );

    let fx = nb_frobenius(&ctx, &x, 1)?;
    println!("x^61  = {fx} (shift by {})", ctx.frobenius_index);
    assert_eq!(fx, oracle_frobenius(&ctx, &x)?);
    Ok(())
}

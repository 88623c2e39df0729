//! Artin–Schreier basis of a degree-5 extension of F_125 and one product.

use nbasis::additive::{build_additive_context, AdditiveParams};
use nbasis::engine::nb_multiply;
use nbasis::ff::{Field, FieldSpec};
use nbasis::oracle::{oracle_multiply, verify_normal};

fn main() -> nbasis::Result<()> {
    let k: FieldSpec = "p=5;g=2,3,0,1".parse()?;
    let ctx = build_additive_context(&AdditiveParams::new(&k, k.one(), k.generator_eps()))?;
    println!("L = K[Y]/({:?})", ctx.oracle.defining_poly());
    println!("i      = {}", ctx.i_vec);
    println!("u_R    = {}", ctx.u_vec);
    println!("u_R^-1 = {}", ctx.u_inv_vec);
    println!("w_R    = {}", ctx.w_vec);

    let x = ctx.element_u64(&[1, 3, 1, 1, 2])?;
    let y = ctx.element_u64(&[2, 1, 1, 4, 2])?;
    let z = nb_multiply(&ctx, &x, &y)?;
    println!("x * y  = {z}");
    assert_eq!(z, oracle_multiply(&ctx, &x, &y)?);
    println!("{}", verify_normal(&ctx));
    Ok(())
}

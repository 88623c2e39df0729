//! Torus basis over F_7 of degree 4: the fiber above a generator, the
//! torsion point and the basis elements in the polynomial basis of L.

use nbasis::engine::nb_multiply;
use nbasis::ff::FieldSpec;
use nbasis::lucas::{build_lucas_context, LucasParams, TorusPoint};
use nbasis::oracle::{oracle_multiply, verify_normal};

fn main() -> nbasis::Result<()> {
    let k = FieldSpec::prime(7)?;
    let params = LucasParams {
        alpha: k.from_u64(3),
        n: 4,
        generator: Some(TorusPoint::new(k.from_u64(5), k.from_u64(1))),
        base: k,
    };
    let ctx = build_lucas_context(&params, 0)?;
    let data = ctx.lucas.as_ref().expect("torus context");
    println!("P_min = {:?}", ctx.oracle.defining_poly());
    println!("t     = {}", data.t);
    println!(
        "c = {}, a = {}, b = {}",
        data.constants.c_frak, data.constants.a_frak, data.constants.b_frak
    );
    for (i, row) in ctx.oracle.theta.iter().enumerate() {
        let coeffs: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        println!("theta_{i} = [{}]", coeffs.join(", "));
    }

    let x = ctx.element_u64(&[1, 3, 1, 1])?;
    let y = ctx.element_u64(&[2, 1, 1, 4])?;
    let z = nb_multiply(&ctx, &x, &y)?;
    assert_eq!(z, oracle_multiply(&ctx, &x, &y)?);
    println!("x * y = {z}");
    println!("{}", verify_normal(&ctx));
    Ok(())
}

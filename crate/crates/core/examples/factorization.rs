//! Factoring over finite fields and the curve-reduced fiber polynomial.

use nbasis::ff::{Field, FieldSpec, PolyRing};
use nbasis::lucas::fiber_x_polynomial;

fn main() -> nbasis::Result<()> {
    let f9 = FieldSpec::with_degree(3, 2)?;
    let ring = PolyRing::new(f9.clone());
    // X^9 - X splits into the linear factors of F_9
    let f = ring.sub(&ring.monomial(f9.one(), 9), &ring.x());
    for (g, e) in ring.factor(&f, 0) {
        println!("({g:?})^{e}");
    }

    let f7 = FieldSpec::prime(7)?;
    let ring = PolyRing::new(f7.clone());
    let r = fiber_x_polynomial(&f7, 4, &f7.from_u64(5));
    println!("fiber polynomial {r:?}");
    for (g, e) in ring.factor(&ring.monic(&r), 0) {
        println!("  ({g:?})^{e} irreducible: {}", ring.is_irreducible(&g));
    }
    Ok(())
}

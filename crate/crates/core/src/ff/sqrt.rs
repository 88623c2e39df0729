use std::cmp::Ordering;

use super::Field;
use crate::error::{Error, Result};

/// Square root by Tonelli–Shanks. Of the two roots, the one whose prime
/// coordinates are lexicographically smaller is returned.
pub fn sqrt_in_field<F: Field>(field: &F, a: &F::Elem) -> Result<F::Elem> {
    if field.is_zero(a) {
        return Ok(a.clone());
    }
    let q = field.cardinality();
    if field.characteristic() == 2 {
        // squaring is bijective: a^(q/2)
        return Ok(field.pow_nat(a, &q.shr(1)));
    }
    if !field.is_square(a) {
        return Err(Error::NonSquare);
    }
    let qm1 = q.sub_small(1);
    let s = qm1.trailing_zeros();
    let t = qm1.shr(s);
    let z = (1..)
        .map(|i| field.element_from_index(i))
        .find(|e| !field.is_square(e))
        .expect("odd field has a nonsquare");

    let mut m = s;
    let mut c = field.pow_nat(&z, &t);
    let mut x = field.pow_nat(a, &t.add_small(1).shr(1));
    let mut b = field.pow_nat(a, &t);
    while !field.is_one(&b) {
        let mut i = 0;
        let mut b2 = b.clone();
        while !field.is_one(&b2) {
            b2 = field.square(&b2);
            i += 1;
        }
        let mut g = c.clone();
        for _ in 0..m - i - 1 {
            g = field.square(&g);
        }
        x = field.mul(&x, &g);
        c = field.square(&g);
        b = field.mul(&b, &c);
        m = i;
    }
    debug_assert_eq!(field.square(&x), *a);
    let neg = field.neg(&x);
    Ok(match field.cmp_lex(&neg, &x) {
        Ordering::Less => neg,
        _ => x,
    })
}

use super::arith::factorize;
use super::Field;
use crate::error::{Error, Result};

/// Exact order of `a` in a cyclic group of order `group_order` (normally
/// `q − 1`), by stripping prime factors of the group order.
pub fn multiplicative_order<F: Field>(field: &F, a: &F::Elem, group_order: u64) -> Result<u64> {
    if field.is_zero(a) {
        return Err(Error::ZeroElement);
    }
    if !field.is_one(&field.pow(a, group_order)) {
        return Err(Error::InvalidParameter(format!(
            "element order does not divide {group_order}"
        )));
    }
    let mut order = group_order;
    for (l, e) in factorize(group_order) {
        for _ in 0..e {
            if field.is_one(&field.pow(a, order / l)) {
                order /= l;
            } else {
                break;
            }
        }
    }
    Ok(order)
}

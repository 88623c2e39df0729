//! Exact finite-field arithmetic.
//!
//! [`FieldSpec`] describes a field `K = F_p[X]/(g)` whose elements are
//! coefficient vectors over the prime field. [`ExtensionField`] builds
//! `L = F[Y]/(f)` on top of any [`Field`]; it is the polynomial-basis model
//! of the cyclic extensions constructed elsewhere in the crate. Polynomials,
//! factorization, square roots, multiplicative orders, linear algebra and
//! resultants are generic over [`Field`].

pub mod arith;
mod ext;
mod factor;
pub mod linalg;
mod order;
mod poly;
mod resultant;
mod spec;
mod sqrt;

use std::cmp::Ordering;
use std::fmt::Debug;
use std::hash::Hash;

use rand::Rng;

use crate::error::{Error, Result};
pub use arith::Natural;
pub use ext::ExtensionField;
pub use factor::{distinct_degree_factor, equal_degree_factor, square_free_factor};
pub use order::multiplicative_order;
pub use poly::{Poly, PolyRing};
pub use resultant::{BiPoly, Var};
pub use spec::{FieldElement, FieldSpec};
pub use sqrt::sqrt_in_field;

/// A finite field with value-level elements.
///
/// Implementations are cheap to clone (shared descriptors) and immutable.
pub trait Field: Clone + Debug + PartialEq {
    type Elem: Clone + Eq + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn characteristic(&self) -> u64;
    /// Degree over the prime field.
    fn prime_degree(&self) -> usize;
    /// Coordinates over the prime field, flattened little-endian.
    fn to_prime_coords(&self, a: &Self::Elem) -> Vec<u64>;
    /// Inverse of [`Field::to_prime_coords`]; missing coordinates are zero.
    #[allow(clippy::wrong_self_convention)]
    fn from_prime_coords(&self, c: &[u64]) -> Self::Elem;

    /// Image of an integer under `Z -> F_p -> self`.
    #[allow(clippy::wrong_self_convention)]
    fn from_i64(&self, v: i64) -> Self::Elem {
        let p = self.characteristic();
        self.from_prime_coords(&[arith::reduce_i64(v, p)])
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    fn pow_nat(&self, a: &Self::Elem, e: &Natural) -> Self::Elem {
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.square(&acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// Number of elements.
    fn cardinality(&self) -> Natural {
        Natural::pow(self.characteristic(), self.prime_degree() as u32)
    }

    /// Cardinality when it fits a machine word.
    fn size(&self) -> Option<u64> {
        self.cardinality().to_u64()
    }

    /// Whether the element lies in the prime subfield.
    fn in_prime_field(&self, a: &Self::Elem) -> bool {
        self.to_prime_coords(a).iter().skip(1).all(|&c| c == 0)
    }

    /// Lexicographic order on the little-endian prime coordinates.
    fn cmp_lex(&self, a: &Self::Elem, b: &Self::Elem) -> Ordering {
        self.to_prime_coords(a).cmp(&self.to_prime_coords(b))
    }

    /// Deterministic enumeration: the base-`p` digits of `i` are the prime
    /// coordinates, so indices below `p` are the prime-field residues.
    fn element_from_index(&self, mut i: u64) -> Self::Elem {
        let p = self.characteristic();
        let mut c = Vec::with_capacity(self.prime_degree());
        for _ in 0..self.prime_degree() {
            c.push(i % p);
            i /= p;
        }
        self.from_prime_coords(&c)
    }

    /// Uniformly random element.
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        let p = self.characteristic();
        let c: Vec<u64> = (0..self.prime_degree()).map(|_| rng.gen_range(0..p)).collect();
        self.from_prime_coords(&c)
    }

    /// Uniformly random nonzero element.
    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        loop {
            let a = self.random(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }

    /// Absolute Frobenius `a -> a^p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.characteristic())
    }

    /// Euler criterion; zero counts as a square.
    fn is_square(&self, a: &Self::Elem) -> bool {
        if self.is_zero(a) || self.characteristic() == 2 {
            return true;
        }
        let e = self.cardinality().sub_small(1).shr(1);
        self.is_one(&self.pow_nat(a, &e))
    }

    /// Fails with [`Error::SpecMismatch`] unless both fields are equal.
    fn ensure_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }
}

/// Operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Inv,
    Pow(u64),
}

/// Checked arithmetic on text-level elements: validates both operands against
/// `spec` before computing. `b` is ignored for `Inv` and `Pow`.
pub fn field_arith(
    spec: &FieldSpec,
    a: &FieldElement,
    b: &FieldElement,
    op: ArithOp,
) -> Result<FieldElement> {
    spec.check(a)?;
    spec.check(b)?;
    Ok(match op {
        ArithOp::Add => spec.add(a, b),
        ArithOp::Sub => spec.sub(a, b),
        ArithOp::Mul => spec.mul(a, b),
        ArithOp::Inv => spec.inv(a)?,
        ArithOp::Pow(e) => spec.pow(a, e),
    })
}

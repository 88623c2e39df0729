use super::{Field, Poly, PolyRing};
use crate::error::{Error, Result};

/// `L = F[Y]/(f)` for a monic irreducible `f`; elements are length-`deg f`
/// coefficient vectors in the basis `1, θ, …, θ^(n-1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionField<F: Field> {
    ring: PolyRing<F>,
    modulus: Poly<F::Elem>,
    n: usize,
}

impl<F: Field> ExtensionField<F> {
    /// Fails with [`Error::InvalidParameter`] unless `modulus` is monic of
    /// degree at least one. Irreducibility is the caller's responsibility;
    /// see [`ExtensionField::new_checked`].
    pub fn new(base: F, modulus: Poly<F::Elem>) -> Result<Self> {
        let ring = PolyRing::new(base);
        let n = match modulus.degree() {
            Some(n) if n >= 1 => n,
            _ => return Err(Error::InvalidParameter("modulus must have degree ≥ 1".into())),
        };
        if !ring.field().is_one(modulus.lead().unwrap()) {
            return Err(Error::InvalidParameter("modulus must be monic".into()));
        }
        Ok(ExtensionField { ring, modulus, n })
    }

    /// As [`ExtensionField::new`], additionally testing irreducibility.
    pub fn new_checked(base: F, modulus: Poly<F::Elem>) -> Result<Self> {
        let ext = Self::new(base, modulus)?;
        if !ext.ring.is_irreducible(&ext.modulus) {
            return Err(Error::InvalidParameter("modulus is reducible".into()));
        }
        Ok(ext)
    }

    pub fn base(&self) -> &F {
        self.ring.field()
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn modulus(&self) -> &Poly<F::Elem> {
        &self.modulus
    }

    /// Degree over the base field.
    pub fn degree(&self) -> usize {
        self.n
    }

    /// The class `θ` of `Y`.
    pub fn theta(&self) -> Vec<F::Elem> {
        self.from_poly(&self.ring.x())
    }

    /// Constant embedding of a base element.
    pub fn embed(&self, c: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.base().zero(); self.n];
        v[0] = c.clone();
        v
    }

    /// Reduces a polynomial modulo the defining polynomial.
    pub fn from_poly(&self, p: &Poly<F::Elem>) -> Vec<F::Elem> {
        let r = self.ring.rem(p, &self.modulus).expect("nonzero modulus");
        let mut v = r.into_coeffs();
        v.resize(self.n, self.base().zero());
        v
    }

    pub fn to_poly(&self, a: &[F::Elem]) -> Poly<F::Elem> {
        self.ring.from_coeffs(a.to_vec())
    }

    /// Coefficient vector given as base elements; missing entries are zero.
    pub fn element(&self, c: &[F::Elem]) -> Vec<F::Elem> {
        self.from_poly(&self.ring.from_coeffs(c.to_vec()))
    }

    /// The relative Frobenius `z -> z^|F|`, generator of `Gal(L/F)`.
    pub fn frobenius_base(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        self.pow_nat(&a.to_vec(), &self.base().cardinality())
    }
}

impl<F: Field> Field for ExtensionField<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.base().zero(); self.n]
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.base().one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base().add(x, y)).collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base().sub(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base().neg(x)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.from_poly(&self.ring.mul(&self.to_poly(a), &self.to_poly(b)))
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        let r = self
            .ring
            .inv_mod(&self.to_poly(a), &self.modulus)
            .map_err(|_| Error::DivisionByZero)?;
        Ok(self.from_poly(&r))
    }

    fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }

    fn prime_degree(&self) -> usize {
        self.base().prime_degree() * self.n
    }

    fn to_prime_coords(&self, a: &Self::Elem) -> Vec<u64> {
        a.iter().flat_map(|c| self.base().to_prime_coords(c)).collect()
    }

    fn from_prime_coords(&self, c: &[u64]) -> Self::Elem {
        let d = self.base().prime_degree();
        (0..self.n)
            .map(|i| {
                let lo = (i * d).min(c.len());
                let hi = ((i + 1) * d).min(c.len());
                self.base().from_prime_coords(&c[lo..hi])
            })
            .collect()
    }
}

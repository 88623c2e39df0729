use std::cmp::Ordering;

use super::{Field, Natural};
use crate::error::{Error, Result};

/// Univariate polynomial, little-endian, with no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    coeffs: Vec<E>,
}

impl<E> Poly<E> {
    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&E> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Option<&E> {
        self.coeffs.get(i)
    }
}

/// Arithmetic on [`Poly`] over a fixed field.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyRing<F: Field> {
    field: F,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F) -> Self {
        PolyRing { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<F::Elem>) -> Poly<F::Elem> {
        while coeffs.last().is_some_and(|c| self.field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero(&self) -> Poly<F::Elem> {
        Poly { coeffs: Vec::new() }
    }

    pub fn one(&self) -> Poly<F::Elem> {
        self.constant(self.field.one())
    }

    pub fn constant(&self, c: F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(vec![c])
    }

    /// `X`.
    pub fn x(&self) -> Poly<F::Elem> {
        self.monomial(self.field.one(), 1)
    }

    /// `c·X^k`.
    pub fn monomial(&self, c: F::Elem, k: usize) -> Poly<F::Elem> {
        let mut v = vec![self.field.zero(); k + 1];
        v[k] = c;
        self.from_coeffs(v)
    }

    /// Polynomial with coefficients given as signed integers.
    pub fn from_i64s(&self, c: &[i64]) -> Poly<F::Elem> {
        self.from_coeffs(c.iter().map(|&v| self.field.from_i64(v)).collect())
    }

    pub fn add(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = &self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| f.add(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
            .collect();
        self.from_coeffs(c)
    }

    pub fn sub(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = &self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        let z = f.zero();
        let c = (0..n)
            .map(|i| f.sub(a.coeffs.get(i).unwrap_or(&z), b.coeffs.get(i).unwrap_or(&z)))
            .collect();
        self.from_coeffs(c)
    }

    pub fn neg(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        Poly {
            coeffs: a.coeffs.iter().map(|c| self.field.neg(c)).collect(),
        }
    }

    pub fn scale(&self, a: &Poly<F::Elem>, s: &F::Elem) -> Poly<F::Elem> {
        self.from_coeffs(a.coeffs.iter().map(|c| self.field.mul(c, s)).collect())
    }

    pub fn mul(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        if a.is_zero() || b.is_zero() {
            return self.zero();
        }
        let f = &self.field;
        let mut c = vec![f.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                c[i + j] = f.add(&c[i + j], &f.mul(x, y));
            }
        }
        self.from_coeffs(c)
    }

    /// Euclidean division; fails on a zero divisor.
    #[allow(clippy::type_complexity)]
    pub fn div_rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<(Poly<F::Elem>, Poly<F::Elem>)> {
        let f = &self.field;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let inv_lead = f.inv(b.lead().unwrap())?;
        let mut r = a.coeffs.clone();
        if r.len() <= db {
            return Ok((self.zero(), a.clone()));
        }
        let mut q = vec![f.zero(); r.len() - db];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + db], &inv_lead);
            if !f.is_zero(&c) {
                for (j, bj) in b.coeffs.iter().enumerate() {
                    r[k + j] = f.sub(&r[k + j], &f.mul(&c, bj));
                }
            }
            q[k] = c;
        }
        r.truncate(db);
        Ok((self.from_coeffs(q), self.from_coeffs(r)))
    }

    pub fn rem(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        Ok(self.div_rem(a, b)?.1)
    }

    /// Exact quotient; debug-asserts a zero remainder.
    pub fn div_exact(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let (q, r) = self.div_rem(a, b)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        match a.lead() {
            None => a.clone(),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero leading coefficient");
                self.scale(a, &inv)
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        while !r1.is_zero() {
            let r = self.rem(&r0, &r1).expect("nonzero divisor");
            r0 = r1;
            r1 = r;
        }
        self.monic(&r0)
    }

    /// Returns `(g, s, t)` with `g = s·a + t·b` and `g` monic.
    #[allow(clippy::type_complexity)]
    pub fn ext_gcd(
        &self,
        a: &Poly<F::Elem>,
        b: &Poly<F::Elem>,
    ) -> (Poly<F::Elem>, Poly<F::Elem>, Poly<F::Elem>) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (self.one(), self.zero());
        let (mut t0, mut t1) = (self.zero(), self.one());
        while !r1.is_zero() {
            let (q, r) = self.div_rem(&r0, &r1).expect("nonzero divisor");
            let s = self.sub(&s0, &self.mul(&q, &s1));
            let t = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead() {
            None => (r0, s0, t0),
            Some(l) => {
                let inv = self.field.inv(l).expect("nonzero leading coefficient");
                (
                    self.scale(&r0, &inv),
                    self.scale(&s0, &inv),
                    self.scale(&t0, &inv),
                )
            }
        }
    }

    /// Inverse of `a` modulo `m`; [`Error::NotInvertible`] unless coprime.
    pub fn inv_mod(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let (g, s, _) = self.ext_gcd(a, m);
        if g != self.one() {
            return Err(Error::NotInvertible);
        }
        self.rem(&s, m)
    }

    pub fn mulmod(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.rem(&self.mul(a, b), m).expect("nonzero modulus")
    }

    /// `a^e mod m`.
    pub fn powmod(&self, a: &Poly<F::Elem>, e: u64, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.powmod_nat(a, &Natural::from_u64(e), m)
    }

    /// `a^e mod m` for a multi-limb exponent.
    pub fn powmod_nat(&self, a: &Poly<F::Elem>, e: &Natural, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        let base = self.rem(a, m).expect("nonzero modulus");
        let mut acc = self.rem(&self.one(), m).expect("nonzero modulus");
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &base, m);
            }
        }
        acc
    }

    /// `a^q mod m` with `q` the field cardinality.
    pub fn frobenius_mod(&self, a: &Poly<F::Elem>, m: &Poly<F::Elem>) -> Poly<F::Elem> {
        self.powmod_nat(a, &self.field.cardinality(), m)
    }

    /// Horner evaluation.
    pub fn eval(&self, a: &Poly<F::Elem>, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        a.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn derivative(&self, a: &Poly<F::Elem>) -> Poly<F::Elem> {
        let f = &self.field;
        let c = a
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
            .collect();
        self.from_coeffs(c)
    }

    /// Composition `a(b)`.
    pub fn compose(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Poly<F::Elem> {
        a.coeffs.iter().rev().fold(self.zero(), |acc, c| {
            self.add(&self.mul(&acc, b), &self.constant(c.clone()))
        })
    }

    /// Irreducibility by the distinct-degree sieve: `gcd(f, X^{q^i} − X) = 1`
    /// for `i ≤ deg/2`.
    pub fn is_irreducible(&self, f: &Poly<F::Elem>) -> bool {
        let d = match f.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if d == 1 {
            return true;
        }
        let x = self.x();
        let mut h = self.rem(&x, f).expect("nonzero modulus");
        for _ in 0..d / 2 {
            h = self.frobenius_mod(&h, f);
            let g = self.gcd(f, &self.sub(&h, &x));
            if g != self.one() {
                return false;
            }
        }
        true
    }

    /// Orders by degree, then coefficients lexicographically from the
    /// constant term.
    pub fn cmp_poly(&self, a: &Poly<F::Elem>, b: &Poly<F::Elem>) -> Ordering {
        a.coeffs.len().cmp(&b.coeffs.len()).then_with(|| {
            for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
                match self.field.cmp_lex(x, y) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    /// Complete factorization of `monic(f)` into monic irreducibles with
    /// multiplicities, sorted by [`PolyRing::cmp_poly`]. Randomized splitting
    /// is driven by `seed`.
    pub fn factor(&self, f: &Poly<F::Elem>, seed: u64) -> Vec<(Poly<F::Elem>, usize)> {
        super::factor::factor(self, f, seed)
    }
}

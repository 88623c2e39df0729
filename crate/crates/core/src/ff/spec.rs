use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use smallvec::SmallVec;

use super::arith::{self, add_mod, mul_mod, sub_mod, MAX_CHARACTERISTIC};
use super::{Field, Natural, PolyRing};
use crate::error::{Error, Result};

/// Element of `K = F_p[X]/(g)`: little-endian coefficients of `1, ε, …,
/// ε^(d-1)`, each in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement {
    coeffs: SmallVec<[u64; 4]>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct SpecInner {
    p: u64,
    /// Monic defining polynomial, little-endian, empty for the prime field.
    g: Vec<u64>,
    d: usize,
    q: u64,
}

/// A finite field `F_p ⊆ K = F_p[X]/(g)`.
///
/// Cheap to clone; equality compares the characteristic and the defining
/// polynomial.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<SpecInner>,
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FieldSpec {}

impl std::hash::Hash for FieldSpec {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.inner.hash(state);
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldSpec({self})")
    }
}

impl FieldSpec {
    /// The prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, Vec::new())
    }

    /// `F_p[X]/(g)` for a monic irreducible `g` (little-endian). An empty or
    /// degree-one `g` is normalized to the prime field.
    pub fn new(p: u64, g: Vec<u64>) -> Result<Self> {
        if p > MAX_CHARACTERISTIC {
            return Err(Error::InvalidParameter(format!(
                "characteristic {p} exceeds the exact range (p^2 < 2^63)"
            )));
        }
        if !arith::is_prime(p) {
            return Err(Error::InvalidParameter(format!("{p} is not prime")));
        }
        let mut g: Vec<u64> = g.into_iter().map(|c| c % p).collect();
        while g.last() == Some(&0) {
            g.pop();
        }
        if g.len() <= 2 {
            return Ok(Self::raw(p, Vec::new()));
        }
        if g.last() != Some(&1) {
            return Err(Error::InvalidParameter(
                "defining polynomial must be monic".into(),
            ));
        }
        let d = g.len() - 1;
        if Natural::pow(p, d as u32) > Natural::from_u64(i64::MAX as u64) {
            return Err(Error::InvalidParameter(format!(
                "field of order {p}^{d} exceeds the exact range"
            )));
        }
        let base = Self::raw(p, Vec::new());
        let ring = PolyRing::new(base.clone());
        let poly = ring.from_coeffs(g.iter().map(|&c| base.from_u64(c)).collect());
        if !ring.is_irreducible(&poly) {
            return Err(Error::InvalidParameter(format!(
                "defining polynomial {} is reducible over F_{p}",
                join(&g, ",")
            )));
        }
        Ok(Self::raw(p, g))
    }

    /// `F_{p^d}` defined by the smallest monic irreducible polynomial of
    /// degree `d` in the base-`p` enumeration of its lower coefficients.
    pub fn with_degree(p: u64, d: usize) -> Result<Self> {
        if d <= 1 {
            return Self::prime(p);
        }
        let base = Self::prime(p)?;
        let ring = PolyRing::new(base.clone());
        let count = Natural::pow(p, d as u32)
            .to_u64()
            .ok_or_else(|| Error::InvalidParameter("field too large".into()))?;
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut i = idx;
            for _ in 0..d {
                g.push(i % p);
                i /= p;
            }
            if g[0] == 0 {
                continue;
            }
            g.push(1);
            let poly = ring.from_coeffs(g.iter().map(|&c| base.from_u64(c)).collect());
            if ring.is_irreducible(&poly) {
                return Self::new(p, g);
            }
        }
        Err(Error::ExhaustedSearch)
    }

    /// `F_q` for a prime power `q`, via [`FieldSpec::with_degree`].
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, d) = arith::prime_power(q)
            .ok_or_else(|| Error::InvalidParameter(format!("{q} is not a prime power")))?;
        Self::with_degree(p, d as usize)
    }

    fn raw(p: u64, g: Vec<u64>) -> Self {
        let d = if g.is_empty() { 1 } else { g.len() - 1 };
        let q = p.pow(d as u32);
        FieldSpec {
            inner: Arc::new(SpecInner { p, g, d, q }),
        }
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    /// Degree `d` of `K` over `F_p`.
    pub fn degree(&self) -> usize {
        self.inner.d
    }

    /// Cardinality `q = p^d`.
    pub fn q(&self) -> u64 {
        self.inner.q
    }

    /// Defining polynomial coefficients (empty for the prime field).
    pub fn defining_poly(&self) -> &[u64] {
        &self.inner.g
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.d == 1
    }

    /// Embedding of a residue.
    pub fn from_u64(&self, v: u64) -> FieldElement {
        let mut c: SmallVec<[u64; 4]> = SmallVec::from_elem(0, self.inner.d);
        c[0] = v % self.inner.p;
        FieldElement { coeffs: c }
    }

    /// The class `ε` of `X` (equals `0` in the prime field, where it is
    /// meaningless).
    pub fn generator_eps(&self) -> FieldElement {
        if self.inner.d == 1 {
            return self.zero();
        }
        let mut c: SmallVec<[u64; 4]> = SmallVec::from_elem(0, self.inner.d);
        c[1] = 1;
        FieldElement { coeffs: c }
    }

    /// Builds an element from coefficients, reducing modulo `g` when more
    /// than `d` are given.
    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        let p = self.inner.p;
        let mut buf: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
        self.reduce(&mut buf);
        let mut c: SmallVec<[u64; 4]> = SmallVec::from_elem(0, self.inner.d);
        for (dst, src) in c.iter_mut().zip(buf) {
            *dst = src;
        }
        FieldElement { coeffs: c }
    }

    /// Validates length and range.
    pub fn check(&self, a: &FieldElement) -> Result<()> {
        if a.coeffs.len() != self.inner.d || a.coeffs.iter().any(|&c| c >= self.inner.p) {
            return Err(Error::SpecMismatch);
        }
        Ok(())
    }

    /// Reduces a coefficient buffer modulo `g` in place (truncating to `d`).
    fn reduce(&self, buf: &mut Vec<u64>) {
        let d = self.inner.d;
        let p = self.inner.p;
        if d == 1 {
            buf.resize(1.max(buf.len()), 0);
            buf.truncate(1);
            return;
        }
        let g = &self.inner.g;
        while buf.len() > d {
            let top = buf.pop().unwrap();
            if top == 0 {
                continue;
            }
            let shift = buf.len() - d;
            for i in 0..d {
                buf[shift + i] = sub_mod(buf[shift + i], mul_mod(top, g[i], p), p);
            }
        }
    }

    /// Trace `Tr_{K/F_p}(a) = Σ a^{p^i}` as a residue.
    pub fn trace(&self, a: &FieldElement) -> u64 {
        let mut acc = self.zero();
        let mut cur = a.clone();
        for _ in 0..self.inner.d {
            acc = self.add(&acc, &cur);
            cur = self.frobenius(&cur);
        }
        debug_assert!(self.in_prime_field(&acc));
        acc.coeffs[0]
    }

    /// Parses an element in `c0,c1,…` form. Fewer than `d` coefficients are
    /// zero-padded; more is an error.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let mut vals = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))?;
            vals.push(arith::reduce_i64(v, self.inner.p));
        }
        if vals.len() > self.inner.d {
            return Err(Error::Parse(format!(
                "element {s:?} has {} coefficients, field degree is {}",
                vals.len(),
                self.inner.d
            )));
        }
        Ok(self.element(&vals))
    }
}

fn join(v: &[u64], sep: &str) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(sep)
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}", self.inner.p)?;
        if !self.inner.g.is_empty() {
            write!(f, ";g={}", join(&self.inner.g, ","))?;
        }
        Ok(())
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Parses `p=5;g=2,3,0,1` (or `p=61`).
    fn from_str(s: &str) -> Result<Self> {
        let mut p = None;
        let mut g = Vec::new();
        for part in s.trim().split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in {part:?}")))?;
            match k.trim() {
                "p" => {
                    p = Some(
                        v.trim()
                            .parse::<u64>()
                            .map_err(|_| Error::Parse(format!("bad characteristic {v:?}")))?,
                    )
                }
                "g" => {
                    if !v.trim().is_empty() {
                        for tok in v.split(',') {
                            g.push(
                                tok.trim()
                                    .parse::<u64>()
                                    .map_err(|_| Error::Parse(format!("bad coefficient {tok:?}")))?,
                            );
                        }
                    }
                }
                other => return Err(Error::Parse(format!("unknown field key {other:?}"))),
            }
        }
        let p = p.ok_or_else(|| Error::Parse("missing p=".into()))?;
        FieldSpec::new(p, g)
    }
}

impl Field for FieldSpec {
    type Elem = FieldElement;

    fn zero(&self) -> FieldElement {
        FieldElement {
            coeffs: SmallVec::from_elem(0, self.inner.d),
        }
    }

    fn one(&self) -> FieldElement {
        self.from_u64(1)
    }

    fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.inner.p;
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| add_mod(x, y, p))
                .collect(),
        }
    }

    fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.inner.p;
        FieldElement {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| sub_mod(x, y, p))
                .collect(),
        }
    }

    fn neg(&self, a: &FieldElement) -> FieldElement {
        let p = self.inner.p;
        FieldElement {
            coeffs: a.coeffs.iter().map(|&x| sub_mod(0, x, p)).collect(),
        }
    }

    fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let p = self.inner.p;
        let d = self.inner.d;
        if d == 1 {
            let mut c = SmallVec::new();
            c.push(mul_mod(a.coeffs[0], b.coeffs[0], p));
            return FieldElement { coeffs: c };
        }
        let mut buf = vec![0u64; 2 * d - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                buf[i + j] = add_mod(buf[i + j], mul_mod(x, y, p), p);
            }
        }
        self.reduce(&mut buf);
        FieldElement {
            coeffs: SmallVec::from_vec(buf),
        }
    }

    fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        let p = self.inner.p;
        if self.inner.d == 1 {
            let v = arith::inv_mod(a.coeffs[0], p).ok_or(Error::DivisionByZero)?;
            return Ok(self.from_u64(v));
        }
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        // a^(q-2)
        Ok(self.pow(a, self.inner.q - 2))
    }

    fn characteristic(&self) -> u64 {
        self.inner.p
    }

    fn prime_degree(&self) -> usize {
        self.inner.d
    }

    fn to_prime_coords(&self, a: &FieldElement) -> Vec<u64> {
        a.coeffs.to_vec()
    }

    fn from_prime_coords(&self, c: &[u64]) -> FieldElement {
        let mut out: SmallVec<[u64; 4]> = SmallVec::from_elem(0, self.inner.d);
        for (dst, &src) in out.iter_mut().zip(c) {
            *dst = src % self.inner.p;
        }
        FieldElement { coeffs: out }
    }

    fn is_zero(&self, a: &FieldElement) -> bool {
        a.coeffs.iter().all(|&c| c == 0)
    }

    fn size(&self) -> Option<u64> {
        Some(self.inner.q)
    }
}

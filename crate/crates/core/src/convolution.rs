//! Length-`n` cyclic vectors over `K` and the four primitives of the
//! multiplication pipeline: convolution `⋆`, its inverse, the pointwise
//! product `◇` and the cyclic shift `σ`.
//!
//! Convolution has three interchangeable paths: schoolbook, Karatsuba
//! followed by folding modulo `X^n − 1`, and a mixed-radix number-theoretic
//! transform available when `n | q − 1`.

use std::fmt;

use crate::error::{Error, Result};
use crate::ff::{multiplicative_order, Field, FieldElement, FieldSpec, PolyRing};

/// Below this length [`ConvPath::Auto`] uses the schoolbook product.
pub const NAIVE_THRESHOLD: usize = 32;

const KARATSUBA_CUTOFF: usize = 16;

/// Element of `K[Z/nZ]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CyclicVector {
    field: FieldSpec,
    entries: Vec<FieldElement>,
}

impl fmt::Debug for CyclicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for CyclicVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

impl CyclicVector {
    /// Validates every entry against `field`; `n ≥ 1`.
    pub fn new(field: &FieldSpec, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("cyclic vector must be non-empty".into()));
        }
        for e in &entries {
            field.check(e)?;
        }
        Ok(CyclicVector {
            field: field.clone(),
            entries,
        })
    }

    pub(crate) fn from_entries(field: &FieldSpec, entries: Vec<FieldElement>) -> Self {
        CyclicVector {
            field: field.clone(),
            entries,
        }
    }

    /// Vector of prime-field residues.
    pub fn from_u64s(field: &FieldSpec, v: &[u64]) -> Self {
        Self::from_entries(field, v.iter().map(|&c| field.from_u64(c)).collect())
    }

    pub fn zero(field: &FieldSpec, n: usize) -> Self {
        Self::from_entries(field, vec![field.zero(); n])
    }

    /// The convolution identity `(1, 0, …, 0)`.
    pub fn unit(field: &FieldSpec, n: usize) -> Self {
        let mut v = Self::zero(field, n);
        v.entries[0] = field.one();
        v
    }

    /// The pointwise identity `(1, …, 1)`.
    pub fn ones(field: &FieldSpec, n: usize) -> Self {
        Self::from_entries(field, vec![field.one(); n])
    }

    /// Standard basis vector `e_k`.
    pub fn basis(field: &FieldSpec, n: usize, k: usize) -> Self {
        let mut v = Self::zero(field, n);
        v.entries[k % n] = field.one();
        v
    }

    pub fn random<R: rand::Rng + ?Sized>(field: &FieldSpec, n: usize, rng: &mut R) -> Self {
        Self::from_entries(field, (0..n).map(|_| field.random(rng)).collect())
    }

    /// Parses `e0;e1;…` with each entry in field-element text form.
    pub fn parse(field: &FieldSpec, s: &str) -> Result<Self> {
        let entries = s
            .trim()
            .split(';')
            .map(|t| field.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, entries)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &FieldElement {
        &self.entries[i]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    /// Prime-field residues, when every entry lies in `F_p`.
    pub fn to_u64s(&self) -> Option<Vec<u64>> {
        self.entries
            .iter()
            .map(|e| self.field.in_prime_field(e).then(|| e.coeffs()[0]))
            .collect()
    }

    fn check_pair(&self, other: &Self) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        self.field.ensure_same(&other.field)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(&FieldElement, &FieldElement) -> FieldElement,
    ) -> Result<Self> {
        self.check_pair(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| op(a, b))
            .collect();
        Ok(Self::from_entries(&self.field, entries))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.field.sub(a, b))
    }

    pub fn scale(&self, s: &FieldElement) -> Self {
        let entries = self.entries.iter().map(|e| self.field.mul(e, s)).collect();
        Self::from_entries(&self.field, entries)
    }
}

/// `(u ◇ v)_k = u_k v_k`.
pub fn pointwise(u: &CyclicVector, v: &CyclicVector) -> Result<CyclicVector> {
    u.zip_with(v, |a, b| u.field.mul(a, b))
}

/// `σ(u)_k = u_{k−1}`.
pub fn shift(u: &CyclicVector) -> CyclicVector {
    shift_by(u, 1)
}

/// `σ^k(u)`; negative `k` shifts the other way.
pub fn shift_by(u: &CyclicVector, k: i64) -> CyclicVector {
    let n = u.len() as i64;
    let k = k.rem_euclid(n) as usize;
    let mut entries = u.entries.clone();
    entries.rotate_right(k);
    CyclicVector::from_entries(&u.field, entries)
}

/// Convolution path selector.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ConvPath {
    /// Schoolbook below [`NAIVE_THRESHOLD`], otherwise NTT when available
    /// and Karatsuba elsewhere.
    #[default]
    Auto,
    Naive,
    Karatsuba,
    /// Falls back to Karatsuba when `K` has no root of unity of order `n`.
    Ntt,
}

impl std::str::FromStr for ConvPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(ConvPath::Auto),
            "naive" => Ok(ConvPath::Naive),
            "karatsuba" => Ok(ConvPath::Karatsuba),
            "ntt" => Ok(ConvPath::Ntt),
            _ => Err(Error::Parse(format!("unknown convolution path {s:?}"))),
        }
    }
}

/// `(u ⋆ v)_k = Σ_i u_i v_{k−i}` on the automatic path.
pub fn convolve(u: &CyclicVector, v: &CyclicVector) -> Result<CyclicVector> {
    convolve_with(u, v, ConvPath::Auto)
}

pub fn convolve_with(u: &CyclicVector, v: &CyclicVector, path: ConvPath) -> Result<CyclicVector> {
    u.check_pair(v)?;
    Convolver::new(&u.field, u.len(), path).apply_unchecked(u, v)
}

/// Inverse in `K[X]/(X^n − 1)` by extended Euclid.
pub fn convolve_inverse(u: &CyclicVector) -> Result<CyclicVector> {
    let field = &u.field;
    let n = u.len();
    let ring = PolyRing::new(field.clone());
    let mut m = vec![field.zero(); n + 1];
    m[0] = field.neg(&field.one());
    m[n] = field.one();
    let modulus = ring.from_coeffs(m);
    let a = ring.from_coeffs(u.entries.clone());
    let inv = ring.inv_mod(&a, &modulus)?;
    let mut entries = inv.into_coeffs();
    entries.resize(n, field.zero());
    Ok(CyclicVector::from_entries(field, entries))
}

fn naive(field: &FieldSpec, u: &[FieldElement], v: &[FieldElement]) -> Vec<FieldElement> {
    let n = u.len();
    let mut out = vec![field.zero(); n];
    for (i, a) in u.iter().enumerate() {
        if field.is_zero(a) {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            let k = if i + j >= n { i + j - n } else { i + j };
            out[k] = field.add(&out[k], &field.mul(a, b));
        }
    }
    out
}

fn schoolbook(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = vec![field.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if field.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = field.add(&out[i + j], &field.mul(x, y));
        }
    }
    out
}

/// Product of two equal-length polynomials, length `2n − 1`.
fn karatsuba(field: &FieldSpec, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let n = a.len();
    if n <= KARATSUBA_CUTOFF {
        return schoolbook(field, a, b);
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h);
    let (b0, b1) = b.split_at(h);
    let z0 = karatsuba(field, a0, b0);
    let z2 = karatsuba(field, a1, b1);
    // a1, b1 have length n − h ≥ h; pad the low halves
    let m = n - h;
    let sum = |lo: &[FieldElement], hi: &[FieldElement]| -> Vec<FieldElement> {
        (0..m)
            .map(|i| match lo.get(i) {
                Some(l) => field.add(l, &hi[i]),
                None => hi[i].clone(),
            })
            .collect()
    };
    let z1 = karatsuba(field, &sum(a0, a1), &sum(b0, b1));
    let mut out = vec![field.zero(); 2 * n - 1];
    for (i, c) in z0.iter().enumerate() {
        out[i] = field.add(&out[i], c);
    }
    for (i, c) in z2.iter().enumerate() {
        out[i + 2 * h] = field.add(&out[i + 2 * h], c);
    }
    for i in 0..z1.len() {
        let mut mid = z1[i].clone();
        if let Some(c) = z0.get(i) {
            mid = field.sub(&mid, c);
        }
        if let Some(c) = z2.get(i) {
            mid = field.sub(&mid, c);
        }
        out[i + h] = field.add(&out[i + h], &mid);
    }
    out
}

fn fold(field: &FieldSpec, mut prod: Vec<FieldElement>, n: usize) -> Vec<FieldElement> {
    for i in n..prod.len() {
        let c = prod[i].clone();
        prod[i - n] = field.add(&prod[i - n], &c);
    }
    prod.truncate(n);
    prod
}

/// Precomputed transform data for length `n`.
#[derive(Clone, Debug)]
struct NttPlan {
    /// `ω^i` for `i < n`.
    roots: Vec<FieldElement>,
    /// `ω^{-i}` for `i < n`.
    inv_roots: Vec<FieldElement>,
    n_inv: FieldElement,
    /// Radices, smallest prime first.
    radices: Vec<usize>,
}

impl NttPlan {
    fn new(field: &FieldSpec, n: usize) -> Option<Self> {
        let q = field.q();
        if !(q - 1).is_multiple_of(n as u64) {
            return None;
        }
        let e = (q - 1) / n as u64;
        let omega = (1..q).find_map(|i| {
            let z = field.pow(&field.element_from_index(i), e);
            (multiplicative_order(field, &z, q - 1).ok()? == n as u64).then_some(z)
        })?;
        let omega_inv = field.inv(&omega).ok()?;
        let powers = |w: &FieldElement| {
            let mut v = Vec::with_capacity(n);
            let mut acc = field.one();
            for _ in 0..n {
                v.push(acc.clone());
                acc = field.mul(&acc, w);
            }
            v
        };
        let mut radices = Vec::new();
        for (p, k) in crate::ff::arith::factorize(n as u64) {
            for _ in 0..k {
                radices.push(p as usize);
            }
        }
        Some(NttPlan {
            roots: powers(&omega),
            inv_roots: powers(&omega_inv),
            n_inv: field.inv(&field.from_u64(n as u64)).ok()?,
            radices,
        })
    }

    /// `X_k = Σ_j a_j w^{jk}` where `w = table[stride]`, over `a.len()` points.
    fn dft(
        field: &FieldSpec,
        a: &[FieldElement],
        table: &[FieldElement],
        stride: usize,
        radices: &[usize],
    ) -> Vec<FieldElement> {
        let len = a.len();
        if len == 1 {
            return a.to_vec();
        }
        let n = table.len();
        let r = radices[0];
        let m = len / r;
        let subs: Vec<Vec<FieldElement>> = (0..r)
            .map(|s| {
                let part: Vec<FieldElement> = a.iter().skip(s).step_by(r).cloned().collect();
                Self::dft(field, &part, table, stride * r, &radices[1..])
            })
            .collect();
        (0..len)
            .map(|k| {
                let mut acc = subs[0][k % m].clone();
                for (s, sub) in subs.iter().enumerate().skip(1) {
                    let w = &table[(s * k * stride) % n];
                    acc = field.add(&acc, &field.mul(w, &sub[k % m]));
                }
                acc
            })
            .collect()
    }

    fn convolve(&self, field: &FieldSpec, u: &[FieldElement], v: &[FieldElement]) -> Vec<FieldElement> {
        let fu = Self::dft(field, u, &self.roots, 1, &self.radices);
        let fv = Self::dft(field, v, &self.roots, 1, &self.radices);
        let prod: Vec<FieldElement> = fu.iter().zip(&fv).map(|(a, b)| field.mul(a, b)).collect();
        Self::dft(field, &prod, &self.inv_roots, 1, &self.radices)
            .iter()
            .map(|c| field.mul(c, &self.n_inv))
            .collect()
    }
}

/// Convolution of fixed length over a fixed field, with the transform plan
/// precomputed once.
#[derive(Clone, Debug)]
pub struct Convolver {
    field: FieldSpec,
    n: usize,
    path: ConvPath,
    plan: Option<NttPlan>,
}

impl Convolver {
    pub fn new(field: &FieldSpec, n: usize, path: ConvPath) -> Self {
        let plan = match path {
            ConvPath::Ntt => NttPlan::new(field, n),
            ConvPath::Auto if n >= NAIVE_THRESHOLD => NttPlan::new(field, n),
            _ => None,
        };
        Convolver {
            field: field.clone(),
            n,
            path,
            plan,
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The path actually taken (never `Auto`).
    pub fn effective_path(&self) -> ConvPath {
        match (self.path, &self.plan) {
            (_, Some(_)) => ConvPath::Ntt,
            (ConvPath::Naive, _) => ConvPath::Naive,
            (ConvPath::Auto, None) if self.n < NAIVE_THRESHOLD => ConvPath::Naive,
            _ => ConvPath::Karatsuba,
        }
    }

    pub fn apply(&self, u: &CyclicVector, v: &CyclicVector) -> Result<CyclicVector> {
        u.check_pair(v)?;
        if u.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: u.len(),
            });
        }
        self.field.ensure_same(&u.field)?;
        self.apply_unchecked(u, v)
    }

    fn apply_unchecked(&self, u: &CyclicVector, v: &CyclicVector) -> Result<CyclicVector> {
        let f = &self.field;
        let out = match self.effective_path() {
            ConvPath::Ntt => self.plan.as_ref().unwrap().convolve(f, &u.entries, &v.entries),
            ConvPath::Naive => naive(f, &u.entries, &v.entries),
            _ => fold(f, karatsuba(f, &u.entries, &v.entries), self.n),
        };
        Ok(CyclicVector::from_entries(f, out))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn kummer_vector_times_alpha() {
        let k = f(61);
        let u = CyclicVector::from_u64s(&k, &[1, 9, 21, 20, 22, 52]);
        let a = CyclicVector::from_u64s(&k, &[1, 3, 1, 1, 2, 1]);
        assert_eq!(
            convolve(&u, &a).unwrap().to_u64s().unwrap(),
            vec![6, 25, 43, 36, 44, 56]
        );
        let inv = convolve_inverse(&u).unwrap();
        assert_eq!(inv.to_u64s().unwrap(), vec![43, 11, 37, 55, 46, 32]);
    }

    #[test]
    fn additive_pipeline_vectors() {
        let k = f(5);
        let x = CyclicVector::from_u64s(&k, &[1, 3, 1, 1, 2]);
        let y = CyclicVector::from_u64s(&k, &[2, 1, 1, 4, 2]);
        let d = pointwise(&x, &y).unwrap();
        assert_eq!(d.to_u64s().unwrap(), vec![2, 3, 1, 4, 4]);
        let i = CyclicVector::from_u64s(&k, &[4, 4, 2, 3, 1]);
        assert_eq!(convolve(&i, &d).unwrap().to_u64s().unwrap(), vec![3, 1, 1, 1, 0]);
    }

    #[test]
    fn identities_and_errors() {
        let k = f(7);
        let v = CyclicVector::from_u64s(&k, &[1, 3, 1, 1]);
        assert_eq!(shift(&v).to_u64s().unwrap(), vec![1, 1, 3, 1]);
        assert_eq!(convolve(&CyclicVector::unit(&k, 4), &v).unwrap(), v);
        assert_eq!(pointwise(&v, &CyclicVector::ones(&k, 4)).unwrap(), v);
        assert_eq!(
            convolve_inverse(&CyclicVector::unit(&k, 4)).unwrap(),
            CyclicVector::unit(&k, 4)
        );
        let bad = CyclicVector::from_u64s(&k, &[1, 6, 0, 0]);
        assert_eq!(convolve_inverse(&bad), Err(Error::NotInvertible));
        let short = CyclicVector::from_u64s(&k, &[1, 2]);
        assert!(matches!(convolve(&v, &short), Err(Error::LengthMismatch { .. })));
        let other = CyclicVector::from_u64s(&f(5), &[1, 2, 3, 4]);
        assert_eq!(convolve(&v, &other), Err(Error::SpecMismatch));
    }

    #[test]
    fn paths_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (p, n) in [(97u64, 48usize), (97, 96), (61, 60), (7, 40), (5, 64), (13, 33)] {
            let k = f(p);
            let u = CyclicVector::random(&k, n, &mut rng);
            let v = CyclicVector::random(&k, n, &mut rng);
            let base = convolve_with(&u, &v, ConvPath::Naive).unwrap();
            for path in [ConvPath::Karatsuba, ConvPath::Ntt, ConvPath::Auto] {
                assert_eq!(convolve_with(&u, &v, path).unwrap(), base, "p={p} n={n} {path:?}");
            }
        }
    }

    #[test]
    fn ntt_over_extension_field() {
        let k = FieldSpec::of_order(25).unwrap();
        let c = Convolver::new(&k, 24, ConvPath::Ntt);
        assert_eq!(c.effective_path(), ConvPath::Ntt);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let u = CyclicVector::random(&k, 24, &mut rng);
        let v = CyclicVector::random(&k, 24, &mut rng);
        assert_eq!(
            c.apply(&u, &v).unwrap(),
            convolve_with(&u, &v, ConvPath::Naive).unwrap()
        );
    }

    #[test]
    fn text_round_trip() {
        let k: FieldSpec = "p=5;g=2,3,0,1".parse().unwrap();
        let v = CyclicVector::parse(&k, "1,0,2;0;4,4,4").unwrap();
        assert_eq!(v.to_string(), "1,0,2;0,0,0;4,4,4");
        assert_eq!(CyclicVector::parse(&k, &v.to_string()).unwrap(), v);
        assert!(CyclicVector::parse(&k, "1;x").is_err());
    }
}

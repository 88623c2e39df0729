//! Kummer construction: `L = K[X]/(X^n − a)` with
//! `θ_k = 1/(ζ_n^{−k}θ − 1)`, evaluated at `x(R) = ζ_{mn}`.

use crate::convolution::ConvPath;
use crate::engine::{assemble, ContextParams, GroupKind, NormalBasisContext, Parts};
use crate::error::{Error, Result};
use crate::ff::{multiplicative_order, ExtensionField, Field, FieldElement, FieldSpec, Poly, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KummerParams {
    pub base: FieldSpec,
    pub n: usize,
    pub m: u64,
    pub a: FieldElement,
    pub zeta_mn: FieldElement,
}

/// Smallest generator of `F_q^*` in index order.
pub fn smallest_generator(base: &FieldSpec) -> Result<FieldElement> {
    let q = base.q();
    (1..q)
        .map(|i| base.element_from_index(i))
        .find(|e| multiplicative_order(base, e, q - 1) == Ok(q - 1))
        .ok_or(Error::ExhaustedSearch)
}

impl KummerParams {
    /// `a` = smallest generator `g`, `ζ_{mn} = g^((q−1)/mn)`.
    pub fn with_defaults(base: &FieldSpec, n: usize, m: u64) -> Result<Self> {
        check_degrees(base, n, m)?;
        let g = smallest_generator(base)?;
        let zeta = base.pow(&g, (base.q() - 1) / (m * n as u64));
        Ok(KummerParams {
            base: base.clone(),
            n,
            m,
            a: g,
            zeta_mn: zeta,
        })
    }

    /// Defaults with an explicit `a`.
    pub fn with_a(base: &FieldSpec, n: usize, m: u64, a: FieldElement) -> Result<Self> {
        let mut p = Self::with_defaults(base, n, m)?;
        p.a = a;
        Ok(p)
    }
}

fn check_degrees(base: &FieldSpec, n: usize, m: u64) -> Result<()> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidParameter("n and m must be at least 2".into()));
    }
    let mn = m.saturating_mul(n as u64);
    if !(base.q() - 1).is_multiple_of(mn) {
        return Err(Error::InvalidParameter(format!(
            "mn = {mn} does not divide q - 1 = {}",
            base.q() - 1
        )));
    }
    Ok(())
}

/// `X^n − a` over `K`.
pub fn defining_polynomial(base: &FieldSpec, n: usize, a: &FieldElement) -> Poly<FieldElement> {
    let mut c = vec![base.zero(); n + 1];
    c[0] = base.neg(a);
    c[n] = base.one();
    PolyRing::new(base.clone()).from_coeffs(c)
}

/// Order of the class of `a` in `K^*/(K^*)^n`, via `a ↦ a^((q−1)/n) ∈ μ_n`.
pub fn class_order(base: &FieldSpec, n: usize, a: &FieldElement) -> Result<u64> {
    let q = base.q();
    let img = base.pow(a, (q - 1) / n as u64);
    multiplicative_order(base, &img, q - 1)
}

pub fn build_kummer_context(params: &KummerParams) -> Result<NormalBasisContext> {
    build_kummer_context_with(params, ConvPath::Auto)
}

pub fn build_kummer_context_with(params: &KummerParams, path: ConvPath) -> Result<NormalBasisContext> {
    let k = &params.base;
    let n = params.n;
    k.check(&params.a)?;
    k.check(&params.zeta_mn)?;
    check_degrees(k, n, params.m)?;
    if k.is_zero(&params.a) {
        return Err(Error::ZeroElement);
    }
    let q = k.q();
    let mn = params.m * n as u64;
    let order = class_order(k, n, &params.a)?;
    if order != n as u64 {
        return Err(Error::OrderTooSmall { order, n: n as u64 });
    }
    match multiplicative_order(k, &params.zeta_mn, q - 1) {
        Ok(o) if o == mn => {}
        Ok(o) => {
            return Err(Error::BadRootOfUnity(format!(
                "zeta has order {o}, expected {mn}"
            )))
        }
        Err(e) => return Err(Error::BadRootOfUnity(e.to_string())),
    }
    let zeta_n = k.pow(&params.zeta_mn, params.m);
    let zeta_n_inv = k.inv(&zeta_n)?;

    let modulus = defining_polynomial(k, n, &params.a);
    debug_assert!(PolyRing::new(k.clone()).is_irreducible(&modulus));
    let l = ExtensionField::new(k.clone(), modulus)?;
    let th = l.theta();
    let one_l = l.one();

    let mut theta = Vec::with_capacity(n);
    let mut u = Vec::with_capacity(n);
    let mut zk_inv = k.one(); // ζ_n^{-k}
    let mut eval = params.zeta_mn.clone(); // ζ_mn ζ_n^k
    for _ in 0..n {
        let den = l.sub(&l.mul(&l.embed(&zk_inv), &th), &one_l);
        theta.push(l.inv(&den)?);
        u.push(k.inv(&k.sub(&eval, &k.one()))?);
        zk_inv = k.mul(&zk_inv, &zeta_n_inv);
        eval = k.mul(&eval, &zeta_n);
    }
    let i_target = l.square(&theta[0]);
    let w = u.iter().map(|e| k.square(e)).collect();

    assemble(
        Parts {
            kind: GroupKind::Multiplicative,
            base: k.clone(),
            params: ContextParams::Kummer {
                m: params.m,
                a: params.a.clone(),
                zeta_mn: params.zeta_mn.clone(),
            },
            field: l,
            theta,
            i_target,
            u,
            w,
            scale: k.one(),
            differenced: false,
            lucas: None,
        },
        path,
    )
}

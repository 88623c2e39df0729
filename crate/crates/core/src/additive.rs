//! Artin–Schreier construction: `L = K[Y]/(Y^p − Y − a)` with
//! `θ_k = 1/(θ − k)`, evaluated at a point `R ∉ F_p`.

use crate::convolution::ConvPath;
use crate::engine::{assemble, ContextParams, GroupKind, NormalBasisContext, Parts};
use crate::error::{Error, Result};
use crate::ff::{ExtensionField, Field, FieldElement, FieldSpec, PolyRing};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveParams {
    pub base: FieldSpec,
    pub a: FieldElement,
    pub r: FieldElement,
}

impl AdditiveParams {
    pub fn new(base: &FieldSpec, a: FieldElement, r: FieldElement) -> Self {
        AdditiveParams {
            base: base.clone(),
            a,
            r,
        }
    }

    /// `a` = first element (by index) of nonzero trace, `R = ε`.
    pub fn with_defaults(base: &FieldSpec) -> Result<Self> {
        let a = default_a(base)?;
        Ok(Self::new(base, a, base.generator_eps()))
    }
}

/// First element in index order whose absolute trace is nonzero.
pub fn default_a(base: &FieldSpec) -> Result<FieldElement> {
    (1..base.q())
        .map(|i| base.element_from_index(i))
        .find(|e| base.trace(e) != 0)
        .ok_or(Error::ExhaustedSearch)
}

/// `Y^p − Y − a` over `K`.
pub fn defining_polynomial(base: &FieldSpec, a: &FieldElement) -> crate::ff::Poly<FieldElement> {
    let p = base.p() as usize;
    let mut c = vec![base.zero(); p + 1];
    c[0] = base.neg(a);
    c[1] = base.neg(&base.one());
    c[p] = base.one();
    PolyRing::new(base.clone()).from_coeffs(c)
}

pub fn build_additive_context(params: &AdditiveParams) -> Result<NormalBasisContext> {
    build_additive_context_with(params, ConvPath::Auto)
}

pub fn build_additive_context_with(params: &AdditiveParams, path: ConvPath) -> Result<NormalBasisContext> {
    let k = &params.base;
    k.check(&params.a)?;
    k.check(&params.r)?;
    if k.trace(&params.a) == 0 {
        return Err(Error::TraceZero);
    }
    if k.in_prime_field(&params.r) {
        return Err(Error::EvaluationPointInPrimeField);
    }
    let p = k.p() as usize;
    let modulus = defining_polynomial(k, &params.a);
    debug_assert!({
        let ring = PolyRing::new(k.clone());
        let y = ring.x();
        let yq = ring.frobenius_mod(&y, &modulus);
        ring.gcd(&modulus, &ring.sub(&yq, &y)) == ring.one()
    });
    let l = ExtensionField::new(k.clone(), modulus)?;
    let th = l.theta();

    let theta = (0..p)
        .map(|j| l.inv(&l.sub(&th, &l.embed(&k.from_u64(j as u64)))))
        .collect::<Result<Vec<_>>>()?;
    let i_target = l.square(&theta[0]);
    let u = (0..p)
        .map(|j| k.inv(&k.add(&params.r, &k.from_u64(j as u64))))
        .collect::<Result<Vec<_>>>()?;
    let w = u.iter().map(|e| k.square(e)).collect();

    assemble(
        Parts {
            kind: GroupKind::Additive,
            base: k.clone(),
            params: ContextParams::Additive {
                a: params.a.clone(),
                r: params.r.clone(),
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

#[cfg(test)]
mod tests {
    use super::*;

    fn k125() -> FieldSpec {
        FieldSpec::new(5, vec![2, 3, 0, 1]).unwrap()
    }

    #[test]
    fn small_example_vectors() {
        let k = k125();
        let ctx = build_additive_context(&AdditiveParams::new(&k, k.one(), k.generator_eps())).unwrap();
        assert_eq!(ctx.n, 5);
        assert_eq!(ctx.i_vec.to_u64s().unwrap(), [4, 4, 2, 3, 1]);
    }

    #[test]
    fn rejects_bad_parameters() {
        let k = k125();
        let eps = k.generator_eps();
        assert!(matches!(
            build_additive_context(&AdditiveParams::new(&k, k.zero(), eps.clone())),
            Err(Error::TraceZero)
        ));
        assert!(matches!(
            build_additive_context(&AdditiveParams::new(&k, k.one(), k.from_u64(3))),
            Err(Error::EvaluationPointInPrimeField)
        ));
    }

    #[test]
    fn default_a_has_nonzero_trace() {
        let k = FieldSpec::with_degree(3, 2).unwrap();
        let a = default_a(&k).unwrap();
        assert_ne!(k.trace(&a), 0);
    }
}

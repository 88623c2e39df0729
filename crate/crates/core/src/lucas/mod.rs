//! Lucas torus `x² − αy² = 1` over `F_q` (`α` a nonsquare), whose `q + 1`
//! rational points form a cyclic group. A degree-`n` cyclic extension comes
//! from the fiber of `[n]` above a generator `a`.

mod torus;

pub use torus::{
    checked, identity, isogeny_polynomials, on_curve, torus_add, torus_neg, torus_order, torus_scalar_mul,
    torus_sub, TorusPoint,
};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::convolution::ConvPath;
use crate::engine::{assemble, ContextParams, GroupKind, LucasData, NormalBasisContext, Parts};
use crate::error::{Error, Result};
use crate::ff::{arith, sqrt_in_field, ExtensionField, Field, FieldElement, FieldSpec, Poly, PolyRing, Var};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasParams {
    pub base: FieldSpec,
    pub alpha: FieldElement,
    pub n: usize,
    pub generator: Option<TorusPoint<FieldElement>>,
}

impl LucasParams {
    /// `α` = smallest nonsquare, generator searched.
    pub fn with_defaults(base: &FieldSpec, n: usize) -> Result<Self> {
        Ok(LucasParams {
            base: base.clone(),
            alpha: smallest_nonsquare(base)?,
            n,
            generator: None,
        })
    }

    /// `q + 1`.
    pub fn group_order(&self) -> u64 {
        self.base.q() + 1
    }

    /// `m = (q + 1)/n`.
    pub fn m(&self) -> u64 {
        self.group_order() / self.n as u64
    }

    pub fn validate(&self) -> Result<()> {
        let k = &self.base;
        k.check(&self.alpha)?;
        if k.p() == 2 {
            return Err(Error::InvalidParameter(
                "characteristic 2 is not supported".into(),
            ));
        }
        if k.is_square(&self.alpha) {
            return Err(Error::InvalidParameter(format!(
                "alpha = {} is a square",
                self.alpha
            )));
        }
        let order = self.group_order();
        let n = self.n as u64;
        if n <= 1 || n >= order || !order.is_multiple_of(n) {
            return Err(Error::InvalidParameter(format!(
                "n = {n} is not a nontrivial divisor of q + 1 = {order}"
            )));
        }
        Ok(())
    }
}

pub fn smallest_nonsquare(base: &FieldSpec) -> Result<FieldElement> {
    (1..base.q())
        .map(|i| base.element_from_index(i))
        .find(|e| !base.is_square(e))
        .ok_or(Error::ExhaustedSearch)
}

/// `𝔞, 𝔟` with `𝔞𝔠 + n𝔟 = 1`, and the constant `𝔠 = Σ_k u_{O,t}(P ⊖ kt)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasConstants {
    pub c_frak: FieldElement,
    pub a_frak: FieldElement,
    pub b_frak: FieldElement,
}

impl LucasConstants {
    /// `𝔞 = 1, 𝔟 = (1 − 𝔠)/n` when `p ∤ n`; otherwise `𝔞 = 1/𝔠, 𝔟 = 0`.
    pub fn from_c(base: &FieldSpec, n: usize, c: FieldElement) -> Result<Self> {
        let nk = base.from_u64(n as u64);
        if !base.is_zero(&nk) {
            let b = base.div(&base.sub(&base.one(), &c), &nk)?;
            Ok(LucasConstants {
                c_frak: c,
                a_frak: base.one(),
                b_frak: b,
            })
        } else {
            let a = base.inv(&c).map_err(|_| Error::ConstantCheckFailed)?;
            Ok(LucasConstants {
                c_frak: c,
                a_frak: a,
                b_frak: base.zero(),
            })
        }
    }
}

/// Returns the caller's generator after checking it, or searches one with
/// seeded sampling of `x`.
pub fn find_generator(params: &LucasParams, seed: u64) -> Result<TorusPoint<FieldElement>> {
    params.validate()?;
    let k = &params.base;
    let order = params.group_order();
    if let Some(g) = &params.generator {
        k.check(&g.x)?;
        k.check(&g.y)?;
        let g = checked(k, &params.alpha, g.clone())?;
        let o = torus_order(k, &params.alpha, &g, order);
        if o != order {
            return Err(Error::NotGenerator {
                order: o,
                expected: order,
            });
        }
        return Ok(g);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tries = 64 + 16 * k.q().min(1 << 16);
    for _ in 0..tries {
        let x = k.random(&mut rng);
        let v = k.div(&k.sub(&k.square(&x), &k.one()), &params.alpha)?;
        let Ok(y) = sqrt_in_field(k, &v) else { continue };
        let p = TorusPoint::new(x, y);
        if torus_order(k, &params.alpha, &p, order) == order {
            return Ok(p);
        }
    }
    Err(Error::ExhaustedSearch)
}

/// `N_x(x, y)` with `y²` replaced by `(x² − 1)/α`, minus `x(a)`:
/// `Σ C(n,2k) x^(n−2k) (x² − 1)^k − x(a)`.
pub fn fiber_x_polynomial(base: &FieldSpec, n: usize, xa: &FieldElement) -> Poly<FieldElement> {
    let ring = PolyRing::new(base.clone());
    let x2m1 = ring.from_coeffs(vec![base.neg(&base.one()), base.zero(), base.one()]);
    let mut binom = vec![1u64; 1];
    let p = base.p();
    for _ in 0..n {
        let mut next = vec![1u64; binom.len() + 1];
        for i in 1..binom.len() {
            next[i] = (binom[i - 1] + binom[i]) % p;
        }
        binom = next;
    }
    let mut acc = ring.constant(base.neg(xa));
    let mut pw = ring.one(); // (x² − 1)^k
    for k in 0..=n / 2 {
        let term = ring.mul(&ring.monomial(base.from_u64(binom[2 * k]), n - 2 * k), &pw);
        acc = ring.add(&acc, &term);
        pw = ring.mul(&pw, &x2m1);
    }
    acc
}

/// Among candidate degree-`n` factors (already sorted), the first admitting
/// `y_b` with `(θ, y_b)` on the curve and `[n](θ, y_b) = a`.
fn select_fiber(
    params: &LucasParams,
    a: &TorusPoint<FieldElement>,
    factors: Vec<Poly<FieldElement>>,
) -> Result<(Poly<FieldElement>, Vec<FieldElement>)> {
    let k = &params.base;
    let n = params.n;
    if factors.is_empty() {
        return Err(Error::NoDegreeNFactor(n));
    }
    let ring = PolyRing::new(k.clone());
    let (nx, ny) = isogeny_polynomials(k, n, &params.alpha);
    for f in factors {
        let l = ExtensionField::new(k.clone(), f.clone())?;
        let th = l.theta();
        let al = l.embed(&params.alpha);
        let v = l.div(&l.sub(&l.square(&th), &l.one()), &al)?;
        let Ok(y) = sqrt_in_field(&l, &v) else { continue };
        for cand in [y.clone(), l.neg(&y)] {
            let ex = ring.bi_eval_in(&nx, &l, |c| l.embed(c), &th, &cand);
            let ey = ring.bi_eval_in(&ny, &l, |c| l.embed(c), &th, &cand);
            if ex == l.embed(&a.x) && ey == l.embed(&a.y) {
                return Ok((f, cand));
            }
        }
    }
    Err(Error::SignCheckFailed)
}

fn degree_n_factors(
    ring: &PolyRing<FieldSpec>,
    f: &Poly<FieldElement>,
    n: usize,
    seed: u64,
) -> Vec<Poly<FieldElement>> {
    ring.factor(f, seed)
        .into_iter()
        .filter(|(g, _)| g.degree() == Some(n))
        .map(|(g, _)| g)
        .collect()
}

/// Minimal polynomial of `x(b)` for a point `b` with `[n]b = a`, and `y(b)`
/// in `L = F_q[θ]/(P_min)` with `x(b) = θ`.
///
/// The elimination uses the curve equation, so the candidate polynomial has
/// degree `n` and its roots are exactly the `x`-coordinates of the fiber.
pub fn fiber_field(
    params: &LucasParams,
    a: &TorusPoint<FieldElement>,
    seed: u64,
) -> Result<(Poly<FieldElement>, Vec<FieldElement>)> {
    params.validate()?;
    let ring = PolyRing::new(params.base.clone());
    let r = ring.monic(&fiber_x_polynomial(&params.base, params.n, &a.x));
    select_fiber(params, a, degree_n_factors(&ring, &r, params.n, seed))
}

/// As [`fiber_field`], but eliminating `y` from `N_x − x(a)` and `N_y − y(a)`
/// by a resultant. The resultant has degree `n²` and also vanishes on points
/// off the curve; factors are filtered by the same isogeny check.
pub fn fiber_field_resultant(
    params: &LucasParams,
    a: &TorusPoint<FieldElement>,
    seed: u64,
) -> Result<(Poly<FieldElement>, Vec<FieldElement>)> {
    params.validate()?;
    let k = &params.base;
    let ring = PolyRing::new(k.clone());
    let (nx, ny) = isogeny_polynomials(k, params.n, &params.alpha);
    let fx = ring.bi_sub(&nx, &ring.bipoly(vec![ring.constant(a.x.clone())]));
    let fy = ring.bi_sub(&ny, &ring.bipoly(vec![ring.constant(a.y.clone())]));
    let res = ring.resultant(&fx, &fy, Var::Y)?;
    if res.is_zero() {
        return Err(Error::DegenerateInput("resultant vanishes identically".into()));
    }
    select_fiber(params, a, degree_n_factors(&ring, &res, params.n, seed))
}

/// `u_{O,t}(P) = 1 + 1/(y − c_t(x − 1))`.
fn u_ot<F: Field>(f: &F, c_t: &F::Elem, p: &TorusPoint<F::Elem>) -> Result<F::Elem> {
    let den = f.sub(&p.y, &f.mul(c_t, &f.sub(&p.x, &f.one())));
    Ok(f.add(&f.one(), &f.inv(&den)?))
}

/// `1/v(P)² = y²/(x − 1)²`.
fn inv_v_squared<F: Field>(f: &F, p: &TorusPoint<F::Elem>) -> Result<F::Elem> {
    f.div(&f.square(&p.y), &f.square(&f.sub(&p.x, &f.one())))
}

/// `Σ_k u_{O,t}(P ⊖ kt)` over `F_q`.
fn constant_sum(
    k: &FieldSpec,
    alpha: &FieldElement,
    c_t: &FieldElement,
    t: &TorusPoint<FieldElement>,
    n: usize,
    p: &TorusPoint<FieldElement>,
) -> Result<FieldElement> {
    let mut acc = k.zero();
    let mut cur = p.clone();
    for _ in 0..n {
        acc = k.add(&acc, &u_ot(k, c_t, &cur)?);
        cur = torus_sub(k, alpha, &cur, t);
    }
    Ok(acc)
}

pub fn build_lucas_context(params: &LucasParams, seed: u64) -> Result<NormalBasisContext> {
    build_lucas_context_with(params, seed, ConvPath::Auto)
}

pub fn build_lucas_context_with(
    params: &LucasParams,
    seed: u64,
    path: ConvPath,
) -> Result<NormalBasisContext> {
    let k = &params.base;
    let n = params.n;
    let alpha = &params.alpha;
    let a = find_generator(params, seed)?;
    let (p_min, y_b) = fiber_field(params, &a, seed)?;

    let l = ExtensionField::new(k.clone(), p_min)?;
    let al = l.embed(alpha);
    let b = TorusPoint::new(l.theta(), y_b.clone());
    let phi_b = TorusPoint::new(l.frobenius_base(&b.x), l.frobenius_base(&b.y));
    let t_l = torus_sub(&l, &al, &phi_b, &b);
    let in_k = |z: &Vec<FieldElement>| z.iter().skip(1).all(|c| k.is_zero(c));
    if !in_k(&t_l.x) || !in_k(&t_l.y) {
        return Err(Error::NTorsionMismatch("Φ(b) ⊖ b is not rational".into()));
    }
    let t = TorusPoint::new(t_l.x[0].clone(), t_l.y[0].clone());
    if torus_scalar_mul(k, alpha, n as u64, &t) != identity(k) {
        return Err(Error::NTorsionMismatch(format!("[n]t ≠ O for t = {t}")));
    }
    let t_order = torus_order(k, alpha, &t, n as u64);
    if t_order != n as u64 {
        return Err(Error::NTorsionMismatch(format!(
            "t = {t} has order {t_order}, expected {n}"
        )));
    }
    let c_t = k.div(&t.y, &k.sub(&t.x, &k.one()))?;

    // 𝔠 at two rational points outside <t>
    let order = params.group_order();
    let j2 = (2..order)
        .find(|&j| arith::gcd(j, order) == 1)
        .unwrap_or(order - 1);
    let c1 = constant_sum(k, alpha, &c_t, &t, n, &a)?;
    let c2 = constant_sum(k, alpha, &c_t, &t, n, &torus_scalar_mul(k, alpha, j2, &a))?;
    if c1 != c2 {
        return Err(Error::ConstantCheckFailed);
    }
    let constants = LucasConstants::from_c(k, n, c1)?;
    let (af, bf) = (&constants.a_frak, &constants.b_frak);

    let c_t_l = l.embed(&c_t);
    let t_in_l = TorusPoint::new(l.embed(&t.x), l.embed(&t.y));
    let mut theta = Vec::with_capacity(n);
    let mut cur = b.clone();
    for _ in 0..n {
        let val = u_ot(&l, &c_t_l, &cur)?;
        theta.push(l.add(&l.mul(&l.embed(af), &val), &l.embed(bf)));
        cur = torus_sub(&l, &al, &cur, &t_in_l);
    }
    let i_target = inv_v_squared(&l, &b)?;

    let mut u = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    let mut cur = a.clone();
    for _ in 0..n {
        u.push(k.add(&k.mul(af, &u_ot(k, &c_t, &cur)?), bf));
        w.push(inv_v_squared(k, &cur)?);
        cur = torus_add(k, alpha, &cur, &t);
    }
    let four = k.from_u64(4);
    let scale = k.div(&k.mul(&k.square(af), &k.square(alpha)), &four)?;

    assemble(
        Parts {
            kind: GroupKind::Lucas,
            base: k.clone(),
            params: ContextParams::Lucas {
                alpha: alpha.clone(),
                generator: a,
            },
            field: l,
            theta,
            i_target,
            u,
            w,
            scale,
            differenced: true,
            lucas: Some(LucasData { t, y_b, constants }),
        },
        path,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7_params() -> LucasParams {
        let k = FieldSpec::prime(7).unwrap();
        LucasParams {
            alpha: k.from_u64(3),
            n: 4,
            generator: Some(TorusPoint::new(k.from_u64(5), k.from_u64(1))),
            base: k,
        }
    }

    #[test]
    fn fiber_methods_agree() {
        let params = f7_params();
        let a = find_generator(&params, 0).unwrap();
        let (p1, y1) = fiber_field(&params, &a, 0).unwrap();
        let (p2, y2) = fiber_field_resultant(&params, &a, 0).unwrap();
        assert_eq!(p1, p2);
        assert_eq!(y1, y2);
        assert_eq!(p1.degree(), Some(4));
    }

    #[test]
    fn fiber_point_maps_to_generator() {
        let params = f7_params();
        let k = &params.base;
        let a = find_generator(&params, 0).unwrap();
        let (p, y) = fiber_field(&params, &a, 0).unwrap();
        let l = ExtensionField::new(k.clone(), p).unwrap();
        let al = l.embed(&params.alpha);
        let b = TorusPoint::new(l.theta(), y);
        assert!(on_curve(&l, &al, &b));
        let nb = torus_scalar_mul(&l, &al, 4, &b);
        assert_eq!(nb, TorusPoint::new(l.embed(&a.x), l.embed(&a.y)));
    }

    #[test]
    fn torsion_generator_has_order_n() {
        let ctx = build_lucas_context(&f7_params(), 0).unwrap();
        let data = ctx.lucas.as_ref().unwrap();
        let k = &ctx.base;
        let alpha = k.from_u64(3);
        assert_eq!(torus_order(k, &alpha, &data.t, 4), 4);
        let c = &data.constants;
        let n = k.from_u64(4);
        assert_eq!(
            k.add(&k.mul(&c.a_frak, &c.c_frak), &k.mul(&n, &c.b_frak)),
            k.one()
        );
    }

    #[test]
    fn generator_checks() {
        let mut params = f7_params();
        let k = params.base.clone();
        params.generator = Some(TorusPoint::new(k.zero(), k.from_u64(3)));
        assert!(matches!(
            find_generator(&params, 0),
            Err(Error::NotGenerator {
                order: 4,
                expected: 8
            })
        ));
        params.generator = Some(TorusPoint::new(k.from_u64(1), k.from_u64(1)));
        assert!(matches!(find_generator(&params, 0), Err(Error::PointOffCurve)));
        params.generator = None;
        let g = find_generator(&params, 7).unwrap();
        assert_eq!(torus_order(&k, &params.alpha, &g, 8), 8);
    }

    #[test]
    fn rejects_bad_degree_and_alpha() {
        let mut params = f7_params();
        params.n = 3;
        assert!(matches!(params.validate(), Err(Error::InvalidParameter(_))));
        params.n = 8;
        assert!(params.validate().is_err());
        params.n = 4;
        params.alpha = params.base.from_u64(2);
        assert!(params.validate().is_err());
    }

    #[test]
    fn smallest_nonsquare_of_f7_is_3() {
        let k = FieldSpec::prime(7).unwrap();
        assert_eq!(smallest_nonsquare(&k).unwrap(), k.from_u64(3));
    }
}

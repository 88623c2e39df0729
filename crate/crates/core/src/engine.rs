//! The normal-basis multiplication kernel shared by all three constructions.
//!
//! With `d = x ◇ y` (or `(x − σx) ◇ (y − σy)` for the torus), the product is
//!
//! ```text
//! s·(ī ⋆ d) + u⁻¹ ⋆ [ (u ⋆ x) ◇ (u ⋆ y) − s·(w ⋆ d) ]
//! ```
//!
//! which costs five convolutions and two pointwise products.

use std::fmt;

use crate::convolution::{pointwise, shift, shift_by, ConvPath, Convolver, CyclicVector};
use crate::error::{Error, Result};
use crate::ff::linalg::{self, Matrix};
use crate::ff::{ExtensionField, Field, FieldElement, FieldSpec, Poly};
use crate::lucas::{LucasConstants, TorusPoint};

/// Which algebraic group the basis comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Additive,
    Multiplicative,
    Lucas,
}

impl GroupKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            GroupKind::Additive => "additive",
            GroupKind::Multiplicative => "kummer",
            GroupKind::Lucas => "lucas",
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for GroupKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "additive" => Ok(GroupKind::Additive),
            "kummer" | "multiplicative" => Ok(GroupKind::Multiplicative),
            "lucas" => Ok(GroupKind::Lucas),
            _ => Err(Error::Parse(format!("unknown group kind {s:?}"))),
        }
    }
}

/// Parameters a context was built from, enough to rebuild it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContextParams {
    Additive {
        a: FieldElement,
        r: FieldElement,
    },
    Kummer {
        m: u64,
        a: FieldElement,
        zeta_mn: FieldElement,
    },
    Lucas {
        alpha: FieldElement,
        generator: TorusPoint<FieldElement>,
    },
}

/// Extra data kept for torus contexts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasData {
    /// Generator of the `n`-torsion, `Φ(b) ⊖ b`.
    pub t: TorusPoint<FieldElement>,
    /// `y(b)` in the polynomial basis of `L`; `x(b) = θ`.
    pub y_b: Vec<FieldElement>,
    pub constants: LucasConstants,
}

/// Polynomial-basis model of `L` together with the change of basis.
#[derive(Clone, Debug)]
pub struct Oracle {
    pub field: ExtensionField<FieldSpec>,
    /// Row `k` holds `θ_k` in the basis `1, θ, …, θ^(n−1)`.
    pub theta: Matrix<FieldElement>,
    pub theta_inv: Matrix<FieldElement>,
}

impl Oracle {
    pub fn defining_poly(&self) -> &Poly<FieldElement> {
        self.field.modulus()
    }
}

/// A constructed normal basis `Θ = (θ_0, …, θ_{n−1})` of `L/K` with the data
/// needed to multiply in it.
#[derive(Clone, Debug)]
pub struct NormalBasisContext {
    pub kind: GroupKind,
    pub base: FieldSpec,
    pub n: usize,
    pub params: ContextParams,
    pub i_vec: CyclicVector,
    pub u_vec: CyclicVector,
    pub u_inv_vec: CyclicVector,
    pub w_vec: CyclicVector,
    pub scale: FieldElement,
    pub differenced: bool,
    pub oracle: Oracle,
    /// Θ-coordinates of `1`.
    pub one: CyclicVector,
    /// `f` with `θ_k^q = θ_{k+f}`.
    pub frobenius_index: usize,
    pub lucas: Option<LucasData>,
    convolver: Convolver,
}

/// Inputs to [`assemble`], produced by each construction.
pub(crate) struct Parts {
    pub kind: GroupKind,
    pub base: FieldSpec,
    pub params: ContextParams,
    pub field: ExtensionField<FieldSpec>,
    pub theta: Matrix<FieldElement>,
    /// Element of `L` whose Θ-coordinates give `ī`.
    pub i_target: Vec<FieldElement>,
    pub u: Vec<FieldElement>,
    pub w: Vec<FieldElement>,
    pub scale: FieldElement,
    pub differenced: bool,
    pub lucas: Option<LucasData>,
}

/// Finishes a context: inverts the θ-matrix, solves for `ī` and the
/// coordinates of `1`, inverts `u`, and locates the Frobenius index.
pub(crate) fn assemble(parts: Parts, path: ConvPath) -> Result<NormalBasisContext> {
    let Parts {
        kind,
        base,
        params,
        field,
        theta,
        i_target,
        u,
        w,
        scale,
        differenced,
        lucas,
    } = parts;
    let n = theta.len();
    let theta_inv = linalg::invert(&base, &theta)?;
    let coords =
        |z: &[FieldElement]| CyclicVector::from_entries(&base, linalg::vec_mat(&base, z, &theta_inv));
    let i_vec = coords(&i_target);
    let one = coords(&field.one());
    let u_vec = CyclicVector::from_entries(&base, u);
    let w_vec = CyclicVector::from_entries(&base, w);
    let u_inv_vec = crate::convolution::convolve_inverse(&u_vec)?;

    let frob0 = field.frobenius_base(&theta[0]);
    let frobenius_index = (0..n)
        .find(|&k| theta[k] == frob0)
        .ok_or_else(|| Error::NotNormal("θ_0^q is not a basis element".into()))?;

    Ok(NormalBasisContext {
        kind,
        n,
        params,
        i_vec,
        u_vec,
        u_inv_vec,
        w_vec,
        scale,
        differenced,
        oracle: Oracle {
            field,
            theta,
            theta_inv,
        },
        one,
        frobenius_index,
        lucas,
        convolver: Convolver::new(&base, n, path),
        base,
    })
}

impl NormalBasisContext {
    /// Same context with a different convolution path.
    pub fn with_path(mut self, path: ConvPath) -> Self {
        self.convolver = Convolver::new(&self.base, self.n, path);
        self
    }

    pub fn convolver(&self) -> &Convolver {
        &self.convolver
    }

    /// Element from Θ-coordinates.
    pub fn element(&self, coords: CyclicVector) -> Result<NBElement> {
        self.check_vec(&coords)?;
        Ok(NBElement { coords })
    }

    /// Element from prime-field residues.
    pub fn element_u64(&self, coords: &[u64]) -> Result<NBElement> {
        self.element(CyclicVector::from_u64s(&self.base, coords))
    }

    pub fn zero(&self) -> NBElement {
        NBElement {
            coords: CyclicVector::zero(&self.base, self.n),
        }
    }

    pub fn one(&self) -> NBElement {
        NBElement {
            coords: self.one.clone(),
        }
    }

    /// `θ_k`.
    pub fn basis_element(&self, k: usize) -> NBElement {
        NBElement {
            coords: CyclicVector::basis(&self.base, self.n, k),
        }
    }

    pub fn random<R: rand::Rng + ?Sized>(&self, rng: &mut R) -> NBElement {
        NBElement {
            coords: CyclicVector::random(&self.base, self.n, rng),
        }
    }

    fn check_vec(&self, v: &CyclicVector) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: v.len(),
            });
        }
        self.base.ensure_same(v.field())
    }
}

/// Θ-coordinates of an element of `L`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NBElement {
    coords: CyclicVector,
}

impl NBElement {
    pub fn coords(&self) -> &CyclicVector {
        &self.coords
    }

    pub fn into_coords(self) -> CyclicVector {
        self.coords
    }
}

impl fmt::Debug for NBElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NB[{}]", self.coords)
    }
}

impl fmt::Display for NBElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords.fmt(f)
    }
}

/// Operation counter for one multiplication.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCount {
    pub convolutions: usize,
    pub pointwise: usize,
}

pub fn nb_multiply(ctx: &NormalBasisContext, x: &NBElement, y: &NBElement) -> Result<NBElement> {
    Ok(nb_multiply_counted(ctx, x, y)?.0)
}

/// [`nb_multiply`] that also reports the primitives it performed.
pub fn nb_multiply_counted(
    ctx: &NormalBasisContext,
    x: &NBElement,
    y: &NBElement,
) -> Result<(NBElement, OpCount)> {
    ctx.check_vec(&x.coords)?;
    ctx.check_vec(&y.coords)?;
    let mut ops = OpCount::default();
    let conv = |a: &CyclicVector, b: &CyclicVector, ops: &mut OpCount| {
        ops.convolutions += 1;
        ctx.convolver.apply(a, b)
    };
    let pw = |a: &CyclicVector, b: &CyclicVector, ops: &mut OpCount| {
        ops.pointwise += 1;
        pointwise(a, b)
    };

    let (x, y) = (&x.coords, &y.coords);
    let d = if ctx.differenced {
        pw(&x.sub(&shift(x))?, &y.sub(&shift(y))?, &mut ops)?
    } else {
        pw(x, y, &mut ops)?
    };
    let head = conv(&ctx.i_vec, &d, &mut ops)?.scale(&ctx.scale);
    let ux = conv(&ctx.u_vec, x, &mut ops)?;
    let uy = conv(&ctx.u_vec, y, &mut ops)?;
    let wd = conv(&ctx.w_vec, &d, &mut ops)?.scale(&ctx.scale);
    let inner = pw(&ux, &uy, &mut ops)?.sub(&wd)?;
    let tail = conv(&ctx.u_inv_vec, &inner, &mut ops)?;
    Ok((
        NBElement {
            coords: head.add(&tail)?,
        },
        ops,
    ))
}

pub fn nb_add(ctx: &NormalBasisContext, x: &NBElement, y: &NBElement) -> Result<NBElement> {
    ctx.check_vec(&x.coords)?;
    ctx.check_vec(&y.coords)?;
    Ok(NBElement {
        coords: x.coords.add(&y.coords)?,
    })
}

/// `x^(q^k)` for `q = |K|`: the cyclic shift `σ^(k·f)` with `f` the
/// context's Frobenius index.
pub fn nb_frobenius(ctx: &NormalBasisContext, x: &NBElement, k: i64) -> Result<NBElement> {
    ctx.check_vec(&x.coords)?;
    let steps = (k.rem_euclid(ctx.n as i64) * ctx.frobenius_index as i64) % ctx.n as i64;
    Ok(NBElement {
        coords: shift_by(&x.coords, steps),
    })
}

/// The raw coordinate shift `σ^k`. It is the Galois automorphism sending
/// `θ_0` to `θ_k`.
pub fn nb_shift(ctx: &NormalBasisContext, x: &NBElement, k: i64) -> Result<NBElement> {
    ctx.check_vec(&x.coords)?;
    Ok(NBElement {
        coords: shift_by(&x.coords, k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kummer::{build_kummer_context, KummerParams};
    use rand::SeedableRng;

    fn ctx61() -> NormalBasisContext {
        let k = FieldSpec::prime(61).unwrap();
        build_kummer_context(&KummerParams::with_a(&k, 6, 10, k.from_u64(2)).unwrap()).unwrap()
    }

    #[test]
    fn five_convolutions_two_pointwise() {
        let ctx = ctx61();
        let x = ctx.element_u64(&[1, 3, 1, 1, 2, 1]).unwrap();
        let (_, ops) = nb_multiply_counted(&ctx, &x, &x).unwrap();
        assert_eq!(
            ops,
            OpCount {
                convolutions: 5,
                pointwise: 2
            }
        );
    }

    #[test]
    fn one_is_the_identity() {
        let ctx = ctx61();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let x = ctx.random(&mut rng);
            assert_eq!(nb_multiply(&ctx, &x, &ctx.one()).unwrap(), x);
        }
    }

    #[test]
    fn frobenius_is_shift_by_index() {
        let ctx = ctx61();
        let x = ctx.basis_element(0);
        let fx = nb_frobenius(&ctx, &x, 1).unwrap();
        assert_eq!(fx, ctx.basis_element(ctx.frobenius_index));
        assert_eq!(nb_frobenius(&ctx, &x, 6).unwrap(), x);
        assert_eq!(nb_shift(&ctx, &x, -1).unwrap(), ctx.basis_element(5));
    }

    #[test]
    fn length_mismatch_is_rejected() {
        let ctx = ctx61();
        assert!(matches!(
            ctx.element_u64(&[1, 2, 3]),
            Err(Error::LengthMismatch { expected: 6, got: 3 })
        ));
    }

    #[test]
    fn kind_names_round_trip() {
        for k in [GroupKind::Additive, GroupKind::Multiplicative, GroupKind::Lucas] {
            assert_eq!(k.to_string().parse::<GroupKind>().unwrap(), k);
        }
        assert!("elliptic".parse::<GroupKind>().is_err());
    }
}

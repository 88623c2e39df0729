use std::fmt;

use crate::error::{Error, Result};
use crate::ff::{BiPoly, Field, FieldElement, FieldSpec, PolyRing};

/// Affine point `(x, y)` on `x² − αy² = 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TorusPoint<E> {
    pub x: E,
    pub y: E,
}

impl<E> TorusPoint<E> {
    pub fn new(x: E, y: E) -> Self {
        TorusPoint { x, y }
    }
}

impl fmt::Display for TorusPoint<FieldElement> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.x, self.y)
    }
}

impl TorusPoint<FieldElement> {
    /// Parses `x|y`. Curve membership is not checked here.
    pub fn parse(field: &FieldSpec, s: &str) -> Result<Self> {
        let (x, y) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected x|y, got {s:?}")))?;
        Ok(TorusPoint::new(field.parse_element(x)?, field.parse_element(y)?))
    }
}

pub fn identity<F: Field>(field: &F) -> TorusPoint<F::Elem> {
    TorusPoint::new(field.one(), field.zero())
}

pub fn on_curve<F: Field>(field: &F, alpha: &F::Elem, p: &TorusPoint<F::Elem>) -> bool {
    let lhs = field.sub(&field.square(&p.x), &field.mul(alpha, &field.square(&p.y)));
    field.is_one(&lhs)
}

/// `Ok(p)` if `p` is on the curve, else [`Error::PointOffCurve`].
pub fn checked<F: Field>(field: &F, alpha: &F::Elem, p: TorusPoint<F::Elem>) -> Result<TorusPoint<F::Elem>> {
    if on_curve(field, alpha, &p) {
        Ok(p)
    } else {
        Err(Error::PointOffCurve)
    }
}

/// `(x, y) ⊕ (x′, y′) = (xx′ + αyy′, xy′ + x′y)`.
pub fn torus_add<F: Field>(
    field: &F,
    alpha: &F::Elem,
    p: &TorusPoint<F::Elem>,
    q: &TorusPoint<F::Elem>,
) -> TorusPoint<F::Elem> {
    debug_assert!(
        on_curve(field, alpha, p) && on_curve(field, alpha, q),
        "point off curve"
    );
    TorusPoint::new(
        field.add(&field.mul(&p.x, &q.x), &field.mul(alpha, &field.mul(&p.y, &q.y))),
        field.add(&field.mul(&p.x, &q.y), &field.mul(&q.x, &p.y)),
    )
}

pub fn torus_neg<F: Field>(field: &F, p: &TorusPoint<F::Elem>) -> TorusPoint<F::Elem> {
    TorusPoint::new(p.x.clone(), field.neg(&p.y))
}

pub fn torus_sub<F: Field>(
    field: &F,
    alpha: &F::Elem,
    p: &TorusPoint<F::Elem>,
    q: &TorusPoint<F::Elem>,
) -> TorusPoint<F::Elem> {
    torus_add(field, alpha, p, &torus_neg(field, q))
}

/// `[k]P` by double-and-add.
pub fn torus_scalar_mul<F: Field>(
    field: &F,
    alpha: &F::Elem,
    mut k: u64,
    p: &TorusPoint<F::Elem>,
) -> TorusPoint<F::Elem> {
    let mut acc = identity(field);
    let mut base = p.clone();
    while k > 0 {
        if k & 1 == 1 {
            acc = torus_add(field, alpha, &acc, &base);
        }
        k >>= 1;
        if k > 0 {
            base = torus_add(field, alpha, &base, &base);
        }
    }
    acc
}

/// Exact order of `p` in a cyclic group of order `group_order`.
pub fn torus_order<F: Field>(field: &F, alpha: &F::Elem, p: &TorusPoint<F::Elem>, group_order: u64) -> u64 {
    let id = identity(field);
    let mut order = group_order;
    for (l, e) in crate::ff::arith::factorize(group_order) {
        for _ in 0..e {
            if torus_scalar_mul(field, alpha, order / l, p) == id {
                order /= l;
            } else {
                break;
            }
        }
    }
    order
}

fn binomial_row(n: usize, field: &FieldSpec) -> Vec<FieldElement> {
    let mut row = vec![field.one()];
    for _ in 0..n {
        let mut next = vec![field.one(); row.len() + 1];
        for i in 1..row.len() {
            next[i] = field.add(&row[i - 1], &row[i]);
        }
        row = next;
    }
    row
}

/// Coordinates of the multiplication-by-`n` map as bivariate polynomials:
/// `N_x = Σ C(n,2k) α^k x^{n−2k} y^{2k}`, `N_y = Σ C(n,2k+1) α^k x^{n−2k−1} y^{2k+1}`.
pub fn isogeny_polynomials(
    field: &FieldSpec,
    n: usize,
    alpha: &FieldElement,
) -> (BiPoly<FieldElement>, BiPoly<FieldElement>) {
    let ring = PolyRing::new(field.clone());
    let binom = binomial_row(n, field);
    let mut nx = Vec::new();
    let mut ny = Vec::new();
    let mut alpha_k = field.one();
    for k in 0..=n / 2 {
        if 2 * k <= n {
            nx.push((n - 2 * k, 2 * k, field.mul(&binom[2 * k], &alpha_k)));
        }
        if 2 * k < n {
            ny.push((n - 2 * k - 1, 2 * k + 1, field.mul(&binom[2 * k + 1], &alpha_k)));
        }
        alpha_k = field.mul(&alpha_k, alpha);
    }
    (ring.bipoly_from_terms(&nx), ring.bipoly_from_terms(&ny))
}

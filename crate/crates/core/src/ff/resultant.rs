use super::{Field, Poly, PolyRing};
use crate::error::{Error, Result};

/// Variable selector for [`BiPoly`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Bivariate polynomial `Σ_j c_j(x) y^j`, stored as polynomials in `x`
/// indexed by the power of `y`, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly<E> {
    by_y: Vec<Poly<E>>,
}

impl<E: Clone> BiPoly<E> {
    /// Coefficient of `y^j` as a polynomial in `x`.
    pub fn coeff_y(&self, j: usize) -> Option<&Poly<E>> {
        self.by_y.get(j)
    }

    pub fn y_coeffs(&self) -> &[Poly<E>] {
        &self.by_y
    }
}

impl<F: Field> PolyRing<F> {
    pub fn bipoly(&self, by_y: Vec<Poly<F::Elem>>) -> BiPoly<F::Elem> {
        let mut by_y = by_y;
        while by_y.last().is_some_and(|p| p.is_zero()) {
            by_y.pop();
        }
        BiPoly { by_y }
    }

    /// Builds `Σ c·x^i·y^j` from `(i, j, c)` terms; repeated monomials add.
    pub fn bipoly_from_terms(&self, terms: &[(usize, usize, F::Elem)]) -> BiPoly<F::Elem> {
        let ymax = terms.iter().map(|t| t.1).max().map_or(0, |m| m + 1);
        let mut by_y = vec![self.zero(); ymax];
        for (i, j, c) in terms {
            by_y[*j] = self.add(&by_y[*j], &self.monomial(c.clone(), *i));
        }
        self.bipoly(by_y)
    }

    pub fn bi_degree(&self, f: &BiPoly<F::Elem>, var: Var) -> Option<usize> {
        match var {
            Var::Y => f.by_y.len().checked_sub(1),
            Var::X => f.by_y.iter().filter_map(|p| p.degree()).max(),
        }
    }

    /// Swaps the roles of `x` and `y`.
    pub fn bi_transpose(&self, f: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
        let xmax = self.bi_degree(f, Var::X).map_or(0, |d| d + 1);
        let by_x = (0..xmax)
            .map(|i| {
                let c = f
                    .by_y
                    .iter()
                    .map(|p| p.coeff(i).cloned().unwrap_or_else(|| self.field().zero()))
                    .collect();
                self.from_coeffs(c)
            })
            .collect();
        self.bipoly(by_x)
    }

    pub fn bi_sub(&self, a: &BiPoly<F::Elem>, b: &BiPoly<F::Elem>) -> BiPoly<F::Elem> {
        let n = a.by_y.len().max(b.by_y.len());
        let z = self.zero();
        let c = (0..n)
            .map(|j| self.sub(a.by_y.get(j).unwrap_or(&z), b.by_y.get(j).unwrap_or(&z)))
            .collect();
        self.bipoly(c)
    }

    /// Evaluation at `(x, y)` in any field `G` receiving the coefficients via
    /// `embed`.
    pub fn bi_eval_in<G: Field>(
        &self,
        f: &BiPoly<F::Elem>,
        target: &G,
        embed: impl Fn(&F::Elem) -> G::Elem,
        x: &G::Elem,
        y: &G::Elem,
    ) -> G::Elem {
        f.by_y.iter().rev().fold(target.zero(), |acc, p| {
            let px = p
                .coeffs()
                .iter()
                .rev()
                .fold(target.zero(), |a, c| target.add(&target.mul(&a, x), &embed(c)));
            target.add(&target.mul(&acc, y), &px)
        })
    }

    pub fn bi_eval(&self, f: &BiPoly<F::Elem>, x: &F::Elem, y: &F::Elem) -> F::Elem {
        self.bi_eval_in(f, self.field(), |c| c.clone(), x, y)
    }

    /// Resultant eliminating `var`, as a polynomial in the other variable.
    /// Sylvester determinant by fraction-free (Bareiss) elimination over the
    /// polynomial ring.
    pub fn resultant(&self, f: &BiPoly<F::Elem>, g: &BiPoly<F::Elem>, var: Var) -> Result<Poly<F::Elem>> {
        if var == Var::X {
            return self.resultant(&self.bi_transpose(f), &self.bi_transpose(g), Var::Y);
        }
        let m = match self.bi_degree(f, Var::Y) {
            Some(m) if m > 0 => m,
            _ => {
                return Err(Error::DegenerateInput(
                    "first polynomial has degree 0 in the eliminated variable".into(),
                ))
            }
        };
        let n = match self.bi_degree(g, Var::Y) {
            Some(n) if n > 0 => n,
            _ => {
                return Err(Error::DegenerateInput(
                    "second polynomial has degree 0 in the eliminated variable".into(),
                ))
            }
        };
        let size = m + n;
        let mut mat = vec![vec![self.zero(); size]; size];
        // rows hold coefficients from the leading term down
        for r in 0..n {
            for (k, c) in f.by_y.iter().rev().enumerate() {
                mat[r][r + k] = c.clone();
            }
        }
        for r in 0..m {
            for (k, c) in g.by_y.iter().rev().enumerate() {
                mat[n + r][r + k] = c.clone();
            }
        }
        Ok(self.bareiss_det(mat))
    }

    fn bareiss_det(&self, mut a: Vec<Vec<Poly<F::Elem>>>) -> Poly<F::Elem> {
        let n = a.len();
        let mut prev = self.one();
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        negate = !negate;
                    }
                    None => return self.zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = self.sub(&self.mul(&a[i][j], &a[k][k]), &self.mul(&a[i][k], &a[k][j]));
                    a[i][j] = self.div_exact(&t, &prev).expect("nonzero pivot");
                }
                a[i][k] = self.zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            self.neg(&det)
        } else {
            det
        }
    }
}

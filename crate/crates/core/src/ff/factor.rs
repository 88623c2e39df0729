//! Square-free, distinct-degree and equal-degree (Cantor–Zassenhaus)
//! factorization over any finite [`Field`].

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Field, Natural, Poly, PolyRing};

type P<F> = Poly<<F as Field>::Elem>;

/// `c^(1/p)` for the absolute Frobenius: `c^(|F|/p)`.
fn pth_root_elem<F: Field>(f: &F, c: &F::Elem) -> F::Elem {
    let e = Natural::pow(f.characteristic(), f.prime_degree() as u32 - 1);
    f.pow_nat(c, &e)
}

/// `g` with `g^p = a`, for `a` whose exponents are all multiples of `p`.
fn pth_root<F: Field>(ring: &PolyRing<F>, a: &P<F>) -> P<F> {
    let p = ring.field().characteristic() as usize;
    let c = a
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| pth_root_elem(ring.field(), c))
        .collect();
    ring.from_coeffs(c)
}

/// Square-free decomposition of `monic(f)`: pairs `(g_i, m)` of pairwise
/// coprime square-free factors with `Π g_i^m = monic(f)`.
pub fn square_free_factor<F: Field>(ring: &PolyRing<F>, f: &P<F>) -> Vec<(P<F>, usize)> {
    let f = ring.monic(f);
    if f.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let p = ring.field().characteristic() as usize;
    let one = ring.one();
    let mut out = Vec::new();
    let df = ring.derivative(&f);
    if df.is_zero() {
        for (g, m) in square_free_factor(ring, &pth_root(ring, &f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = ring.gcd(&f, &df);
    let mut w = ring.div_exact(&f, &c).expect("nonzero gcd");
    let mut i = 1;
    while w != one {
        let y = ring.gcd(&w, &c);
        let fac = ring.div_exact(&w, &y).expect("nonzero gcd");
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y.clone();
        c = ring.div_exact(&c, &y).expect("nonzero gcd");
        i += 1;
    }
    if c != one {
        for (g, m) in square_free_factor(ring, &pth_root(ring, &c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Distinct-degree split of a monic square-free `f`: pairs `(g, d)` where `g`
/// is the product of all irreducible factors of degree `d`.
pub fn distinct_degree_factor<F: Field>(ring: &PolyRing<F>, f: &P<F>) -> Vec<(P<F>, usize)> {
    let mut rest = ring.monic(f);
    let mut out = Vec::new();
    let x = ring.x();
    let mut h = x.clone();
    let mut i = 0;
    while let Some(deg) = rest.degree() {
        if deg < 2 * (i + 1) {
            if deg > 0 {
                out.push((rest, deg));
            }
            break;
        }
        i += 1;
        h = ring.frobenius_mod(&h, &rest);
        let g = ring.gcd(&rest, &ring.sub(&h, &x));
        if g != ring.one() {
            rest = ring.div_exact(&rest, &g).expect("nonzero gcd");
            h = ring.rem(&h, &rest).expect("nonzero modulus");
            out.push((g, i));
        }
    }
    out
}

fn random_poly<F: Field>(ring: &PolyRing<F>, deg: usize, rng: &mut ChaCha8Rng) -> P<F> {
    let c = (0..deg).map(|_| ring.field().random(rng)).collect();
    ring.from_coeffs(c)
}

/// One Cantor–Zassenhaus splitting attempt; returns a proper factor or `None`.
fn try_split<F: Field>(ring: &PolyRing<F>, f: &P<F>, d: usize, rng: &mut ChaCha8Rng) -> Option<P<F>> {
    let field = ring.field();
    let n = f.degree().unwrap();
    let h = random_poly(ring, n, rng);
    if h.degree().unwrap_or(0) == 0 {
        return None;
    }
    let g = ring.gcd(f, &h);
    if g != ring.one() {
        return Some(g);
    }
    let candidate = if field.characteristic() == 2 {
        // absolute trace to F_2 of h over F_{q^d}
        let steps = field.prime_degree() * d;
        let mut acc = h.clone();
        let mut cur = h;
        for _ in 1..steps {
            cur = ring.mulmod(&cur, &cur, f);
            acc = ring.add(&acc, &cur);
        }
        acc
    } else {
        // h^((q^d - 1)/2) = (h^(1 + q + … + q^(d-1)))^((q - 1)/2)
        let mut norm = h.clone();
        let mut cur = h;
        for _ in 1..d {
            cur = ring.frobenius_mod(&cur, f);
            norm = ring.mulmod(&norm, &cur, f);
        }
        let e = field.cardinality().sub_small(1).shr(1);
        let r = ring.powmod_nat(&norm, &e, f);
        ring.sub(&r, &ring.one())
    };
    let g = ring.gcd(f, &candidate);
    let dg = g.degree().unwrap_or(0);
    (dg > 0 && dg < n).then_some(g)
}

/// Splits a monic `f` whose irreducible factors all have degree `d`.
pub fn equal_degree_factor<F: Field>(ring: &PolyRing<F>, f: &P<F>, d: usize, seed: u64) -> Vec<P<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    edf_rec(ring, &ring.monic(f), d, &mut rng, &mut out);
    out.sort_by(|a, b| ring.cmp_poly(a, b));
    out
}

fn edf_rec<F: Field>(ring: &PolyRing<F>, f: &P<F>, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<P<F>>) {
    let n = f.degree().unwrap_or(0);
    if n == 0 {
        return;
    }
    if n == d {
        out.push(f.clone());
        return;
    }
    loop {
        if let Some(g) = try_split(ring, f, d, rng) {
            let g = ring.monic(&g);
            let h = ring.div_exact(f, &g).expect("nonzero factor");
            edf_rec(ring, &g, d, rng, out);
            edf_rec(ring, &h, d, rng, out);
            return;
        }
    }
}

pub(crate) fn factor<F: Field>(ring: &PolyRing<F>, f: &P<F>, seed: u64) -> Vec<(P<F>, usize)> {
    let mut out = Vec::new();
    for (k, (sf, m)) in square_free_factor(ring, f).into_iter().enumerate() {
        for (g, d) in distinct_degree_factor(ring, &sf) {
            let s = seed.wrapping_add((k as u64) << 32).wrapping_add(d as u64);
            for h in equal_degree_factor(ring, &g, d, s) {
                out.push((h, m));
            }
        }
    }
    out.sort_by(|a, b| ring.cmp_poly(&a.0, &b.0).then(a.1.cmp(&b.1)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FieldSpec;

    fn product<F: Field>(ring: &PolyRing<F>, fs: &[(P<F>, usize)]) -> P<F> {
        let mut acc = ring.one();
        for (g, m) in fs {
            for _ in 0..*m {
                acc = ring.mul(&acc, g);
            }
        }
        acc
    }

    #[test]
    fn fourth_roots_of_unity_mod_5() {
        let r = PolyRing::new(FieldSpec::prime(5).unwrap());
        let fs = r.factor(&r.from_i64s(&[-1, 0, 0, 0, 1]), 0);
        let expect: Vec<_> = [1i64, 2, 3, 4]
            .iter()
            .map(|&c| (r.from_i64s(&[-c, 1]), 1))
            .collect();
        let mut expect = expect;
        expect.sort_by(|a, b| r.cmp_poly(&a.0, &b.0));
        assert_eq!(fs, expect);
    }

    #[test]
    fn repeated_and_inseparable_factors() {
        let r = PolyRing::new(FieldSpec::prime(3).unwrap());
        // (x + 1)^3 (x^2 + 1)^2 x
        let a = r.from_i64s(&[1, 1]);
        let b = r.from_i64s(&[1, 0, 1]);
        let mut f = r.x();
        for _ in 0..3 {
            f = r.mul(&f, &a);
        }
        f = r.mul(&f, &r.mul(&b, &b));
        let fs = r.factor(&f, 7);
        assert_eq!(product(&r, &fs), f);
        assert_eq!(fs.len(), 3);
        assert!(fs.contains(&(a, 3)));
        assert!(fs.contains(&(b, 2)));
    }

    #[test]
    fn characteristic_two() {
        let k = FieldSpec::of_order(4).unwrap();
        let r = PolyRing::new(k.clone());
        // X^4 - X splits completely over F_4
        let f = r.from_i64s(&[0, -1, 0, 0, 1]);
        let fs = r.factor(&f, 3);
        assert_eq!(fs.len(), 4);
        assert!(fs.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
        assert_eq!(product(&r, &fs), f);
    }

    #[test]
    fn extension_base_field() {
        let k = FieldSpec::of_order(9).unwrap();
        let r = PolyRing::new(k);
        // X^9 - X over F_9 has 9 linear factors; X^81 - X adds 36 quadratics
        let mut c = vec![0i64; 82];
        c[81] = 1;
        c[1] = -1;
        let f = r.from_i64s(&c);
        let fs = r.factor(&f, 1);
        assert_eq!(fs.iter().filter(|(g, _)| g.degree() == Some(1)).count(), 9);
        assert_eq!(fs.iter().filter(|(g, _)| g.degree() == Some(2)).count(), 36);
        assert_eq!(product(&r, &fs), f);
    }
}

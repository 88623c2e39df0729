use proptest::prelude::*;

use nbasis::ff::{arith, multiplicative_order, sqrt_in_field, Field, FieldElement, FieldSpec, PolyRing};
use nbasis::Error;

fn fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::prime(61).unwrap(),
        FieldSpec::prime(2_147_483_647).unwrap(),
        FieldSpec::new(5, vec![2, 3, 0, 1]).unwrap(),
        FieldSpec::with_degree(2, 4).unwrap(),
        FieldSpec::with_degree(3, 2).unwrap(),
        FieldSpec::with_degree(7, 3).unwrap(),
    ]
}

fn elem(k: &FieldSpec, raw: &[u64]) -> FieldElement {
    let c: Vec<u64> = raw.iter().take(k.degree()).map(|r| r % k.p()).collect();
    k.from_prime_coords(&c)
}

fn field_and_elems(count: usize) -> impl Strategy<Value = (FieldSpec, Vec<FieldElement>)> {
    (
        0..fields().len(),
        proptest::collection::vec(proptest::collection::vec(any::<u64>(), 4), count),
    )
        .prop_map(|(i, raws)| {
            let k = fields().swap_remove(i);
            let es = raws.iter().map(|r| elem(&k, r)).collect();
            (k, es)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn field_axioms((k, e) in field_and_elems(3)) {
        let (a, b, c) = (&e[0], &e[1], &e[2]);
        prop_assert_eq!(k.add(a, b), k.add(b, a));
        prop_assert_eq!(k.mul(a, b), k.mul(b, a));
        prop_assert_eq!(k.add(&k.add(a, b), c), k.add(a, &k.add(b, c)));
        prop_assert_eq!(k.mul(&k.mul(a, b), c), k.mul(a, &k.mul(b, c)));
        prop_assert_eq!(k.mul(a, &k.add(b, c)), k.add(&k.mul(a, b), &k.mul(a, c)));
        prop_assert_eq!(k.add(a, &k.zero()), a.clone());
        prop_assert_eq!(k.mul(a, &k.one()), a.clone());
        prop_assert!(k.is_zero(&k.add(a, &k.neg(a))));
        prop_assert_eq!(k.sub(a, b), k.add(a, &k.neg(b)));
    }

    #[test]
    fn inverse_law((k, e) in field_and_elems(1)) {
        let a = &e[0];
        match k.inv(a) {
            Ok(i) => prop_assert!(k.is_one(&k.mul(a, &i))),
            Err(err) => {
                prop_assert!(k.is_zero(a));
                prop_assert!(err == Error::DivisionByZero);
            }
        }
    }

    #[test]
    fn frobenius_is_a_ring_map((k, e) in field_and_elems(2)) {
        let (a, b) = (&e[0], &e[1]);
        prop_assert_eq!(k.frobenius(&k.add(a, b)), k.add(&k.frobenius(a), &k.frobenius(b)));
        prop_assert_eq!(k.frobenius(&k.mul(a, b)), k.mul(&k.frobenius(a), &k.frobenius(b)));
        let mut z = a.clone();
        for _ in 0..k.degree() {
            z = k.frobenius(&z);
        }
        prop_assert_eq!(&z, a);
    }

    #[test]
    fn sqrt_of_square((k, e) in field_and_elems(1)) {
        let r = &e[0];
        let s = sqrt_in_field(&k, &k.square(r)).unwrap();
        prop_assert!(s == *r || s == k.neg(r));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn order_is_minimal((k, e) in field_and_elems(1)) {
        prop_assume!(k.q() < 1 << 20);
        let a = &e[0];
        let q1 = k.q() - 1;
        match multiplicative_order(&k, a, q1) {
            Ok(o) => {
                prop_assert_eq!(q1 % o, 0);
                prop_assert!(k.is_one(&k.pow(a, o)));
                for l in arith::prime_divisors(o) {
                    prop_assert!(!k.is_one(&k.pow(a, o / l)));
                }
            }
            Err(_) => prop_assert!(k.is_zero(a)),
        }
    }

    #[test]
    fn factorization_multiplies_back(
        which in 0..3usize,
        raw in proptest::collection::vec(any::<u64>(), 2..14),
        seed in any::<u64>(),
    ) {
        let k = [FieldSpec::prime(3), FieldSpec::prime(5), FieldSpec::with_degree(2, 2)][which].clone().unwrap();
        let ring = PolyRing::new(k.clone());
        let coeffs: Vec<FieldElement> = raw.iter().map(|&r| k.element_from_index(r % k.q())).collect();
        let f = ring.from_coeffs(coeffs);
        prop_assume!(f.degree().is_some_and(|d| d >= 1));
        let factors = ring.factor(&f, seed);
        let mut prod = ring.one();
        for (g, e) in &factors {
            prop_assert!(ring.is_irreducible(g));
            prop_assert_eq!(g.lead(), Some(&k.one()));
            for _ in 0..*e {
                prod = ring.mul(&prod, g);
            }
        }
        prop_assert_eq!(prod, ring.monic(&f));
    }
}

#[test]
fn nonsquare_has_no_root() {
    let k = FieldSpec::prime(61).unwrap();
    let nonsquares = (1..61).filter(|&v| !k.is_square(&k.from_u64(v))).count();
    assert_eq!(nonsquares, 30);
    for v in 1..61 {
        let a = k.from_u64(v);
        assert_eq!(sqrt_in_field(&k, &a).is_ok(), k.is_square(&a));
    }
}

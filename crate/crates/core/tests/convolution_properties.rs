use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nbasis::convolution::{
    convolve, convolve_inverse, convolve_with, pointwise, shift, shift_by, ConvPath, CyclicVector,
};
use nbasis::ff::FieldSpec;

fn field(i: usize) -> FieldSpec {
    match i {
        0 => FieldSpec::prime(5).unwrap(),
        1 => FieldSpec::prime(7).unwrap(),
        2 => FieldSpec::prime(61).unwrap(),
        _ => FieldSpec::with_degree(5, 2).unwrap(),
    }
}

fn vectors(count: usize) -> impl Strategy<Value = Vec<CyclicVector>> {
    (0..4usize, 1..=70usize, any::<u64>()).prop_map(move |(fi, n, seed)| {
        let k = field(fi);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| CyclicVector::random(&k, n, &mut rng))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn ring_laws(v in vectors(3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(convolve(a, b).unwrap(), convolve(b, a).unwrap());
        prop_assert_eq!(
            convolve(&convolve(a, b).unwrap(), c).unwrap(),
            convolve(a, &convolve(b, c).unwrap()).unwrap()
        );
        prop_assert_eq!(
            convolve(a, &b.add(c).unwrap()).unwrap(),
            convolve(a, b).unwrap().add(&convolve(a, c).unwrap()).unwrap()
        );
        let one = CyclicVector::unit(a.field(), a.len());
        prop_assert_eq!(&convolve(a, &one).unwrap(), a);
    }

    #[test]
    fn paths_agree(v in vectors(2)) {
        let naive = convolve_with(&v[0], &v[1], ConvPath::Naive).unwrap();
        for path in [ConvPath::Karatsuba, ConvPath::Ntt, ConvPath::Auto] {
            prop_assert_eq!(&convolve_with(&v[0], &v[1], path).unwrap(), &naive);
        }
    }

    #[test]
    fn shift_laws(v in vectors(2), a in -200i64..200, b in -200i64..200) {
        let (u, w) = (&v[0], &v[1]);
        let n = u.len() as i64;
        prop_assert_eq!(&shift_by(u, n), u);
        prop_assert_eq!(shift_by(&shift_by(u, a), b), shift_by(u, a + b));
        prop_assert_eq!(shift(u), shift_by(u, 1));
        // σ is a ring automorphism for ◇ and commutes with ⋆ on one side
        prop_assert_eq!(convolve(&shift(u), w).unwrap(), shift(&convolve(u, w).unwrap()));
        prop_assert_eq!(pointwise(&shift(u), &shift(w)).unwrap(), shift(&pointwise(u, w).unwrap()));
    }

    #[test]
    fn inverse_law(v in vectors(1)) {
        let u = &v[0];
        if let Ok(inv) = convolve_inverse(u) {
            prop_assert_eq!(convolve(u, &inv).unwrap(), CyclicVector::unit(u.field(), u.len()));
        }
    }
}

#[test]
fn all_ones_is_not_invertible() {
    // Σ X^i divides X^n − 1.
    let k = FieldSpec::prime(7).unwrap();
    assert!(convolve_inverse(&CyclicVector::ones(&k, 5)).is_err());
}

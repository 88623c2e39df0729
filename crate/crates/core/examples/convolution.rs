//! Cyclic convolution paths and inversion in K[X]/(X^n - 1).

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use nbasis::convolution::{convolve, convolve_inverse, ConvPath, Convolver, CyclicVector};
use nbasis::ff::FieldSpec;

fn main() -> nbasis::Result<()> {
    let k = FieldSpec::prime(97)?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in [12, 48, 96] {
        let u = CyclicVector::random(&k, n, &mut rng);
        let v = CyclicVector::random(&k, n, &mut rng);
        let reference = Convolver::new(&k, n, ConvPath::Naive).apply(&u, &v)?;
        for path in [ConvPath::Naive, ConvPath::Karatsuba, ConvPath::Ntt] {
            let cv = Convolver::new(&k, n, path);
            let start = Instant::now();
            let mut out = cv.apply(&u, &v)?;
            for _ in 0..99 {
                out = cv.apply(&u, &v)?;
            }
            assert_eq!(out, reference);
            println!(
                "n={n:3} {:?}: {:?} per product",
                cv.effective_path(),
                start.elapsed() / 100
            );
        }
    }

    let u = CyclicVector::from_u64s(&k, &[3, 1, 4, 1, 5]);
    let inv = convolve_inverse(&u)?;
    println!("({u})^-1 = {inv}");
    assert_eq!(convolve(&u, &inv)?, CyclicVector::unit(&k, 5));
    Ok(())
}

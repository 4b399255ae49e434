use num_complex::Complex64;
use rand::Rng;

use crate::algebra::Algebra;
use crate::element::Element;

/// Complex scalar with real and imaginary parts uniform in `[-1, 1)`.
pub fn random_scalar<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Element whose canonical coordinates are independent random scalars.
pub fn random_element<R: Rng + ?Sized>(alg: &Algebra, rng: &mut R) -> Element {
    let coords: Vec<Complex64> = (0..alg.dimension()).map(|_| random_scalar(rng)).collect();
    alg.from_coords(&coords).expect("coordinate count matches dimension")
}

/// Random function values on `n` points.
pub fn random_values<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    (0..n).map(|_| random_scalar(rng)).collect()
}

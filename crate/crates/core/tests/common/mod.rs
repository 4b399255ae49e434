#![allow(dead_code)]

use std::sync::Arc;

use algext::{ah_extend, Algebra, Complex64, Element, MonicPolynomial, PointSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn fnalg(n: usize) -> Arc<Algebra> {
    Algebra::functions(PointSet::from_coords((0..n).map(|i| c(i as f64)).collect()).unwrap())
}

pub fn constant_poly(var: &str, coeffs: &[f64]) -> MonicPolynomial {
    MonicPolynomial::new(var, coeffs.iter().map(|&a| Element::Values(vec![c(a)])).collect()).unwrap()
}

/// `x² − f` over FnAlg(2), then `y³ − x̄ y + 1` over that.
pub fn nested() -> Arc<Algebra> {
    let base = fnalg(2);
    let f = Element::Values(vec![c(2.0), c(3.0)]);
    let inner = ah_extend(
        &base,
        MonicPolynomial::new("x", vec![f.neg(), base.zero()]).unwrap(),
        None,
    )
    .unwrap();
    let root = algext::ah_root(&inner).unwrap();
    let one = inner.one();
    ah_extend(
        &inner,
        MonicPolynomial::new("y", vec![one, root.neg(), inner.zero()]).unwrap(),
        None,
    )
    .unwrap()
}

/// ℂ, FnAlg on 2, 3 and 5 points, and a nested extension.
pub fn fixtures() -> Vec<(&'static str, Arc<Algebra>)> {
    vec![
        ("C", Algebra::complex()),
        ("Fn2", fnalg(2)),
        ("Fn3", fnalg(3)),
        ("Fn5", fnalg(5)),
        ("nested", nested()),
    ]
}

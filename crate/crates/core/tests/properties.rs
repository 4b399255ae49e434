mod common;

use algext::poly::{reduce_mod_monic, poly_mul, GeneralPolynomial};
use algext::sample::{random_element, random_values};
use algext::tower::{multi_reduce_in_order, MultiPoly};
use algext::{cole_extend, AlgebraError, Element, MonicPolynomial};
use common::{c, fixtures, fnalg, rng};
use proptest::prelude::*;

fn rel(a: f64, scale: f64) -> f64 {
    a / (1.0 + scale)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(seed in any::<u64>(), which in 0usize..5) {
        let (_, alg) = &fixtures()[which];
        let mut r = rng(seed);
        let (a, b, d) = (random_element(alg, &mut r), random_element(alg, &mut r), random_element(alg, &mut r));
        let ab = alg.mul(&a, &b).unwrap();
        prop_assert!(ab.max_abs_diff(&alg.mul(&b, &a).unwrap()).unwrap() < 1e-12);
        let lhs = alg.mul(&ab, &d).unwrap();
        let rhs = alg.mul(&a, &alg.mul(&b, &d).unwrap()).unwrap();
        prop_assert!(rel(lhs.max_abs_diff(&rhs).unwrap(), lhs.max_abs()) < 1e-12);
        let dist = alg.mul(&a, &b.add(&d).unwrap()).unwrap();
        let split = ab.add(&alg.mul(&a, &d).unwrap()).unwrap();
        prop_assert!(rel(dist.max_abs_diff(&split).unwrap(), dist.max_abs()) < 1e-12);
        prop_assert_eq!(alg.mul(&alg.one(), &a).unwrap().max_abs_diff(&a).unwrap(), 0.0);
    }

    #[test]
    fn norm_is_submultiplicative(seed in any::<u64>(), which in 0usize..5) {
        let (_, alg) = &fixtures()[which];
        let mut r = rng(seed);
        let (a, b) = (random_element(alg, &mut r), random_element(alg, &mut r));
        let nab = alg.norm(&alg.mul(&a, &b).unwrap()).unwrap();
        prop_assert!(nab <= alg.norm(&a).unwrap() * alg.norm(&b).unwrap() * (1.0 + 1e-9));
        prop_assert!((alg.norm(&alg.one()).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn characters_are_multiplicative(seed in any::<u64>(), which in 0usize..5) {
        let (_, alg) = &fixtures()[which];
        let mut r = rng(seed);
        let (a, b) = (random_element(alg, &mut r), random_element(alg, &mut r));
        let ab = alg.mul(&a, &b).unwrap();
        for w in alg.characters().unwrap() {
            let lhs = w.eval(alg, &ab).unwrap();
            let rhs = w.eval(alg, &a).unwrap() * w.eval(alg, &b).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
            prop_assert!((w.eval(alg, &alg.one()).unwrap() - c(1.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn inverses_multiply_to_one(seed in any::<u64>(), which in 0usize..5) {
        let (_, alg) = &fixtures()[which];
        let a = random_element(alg, &mut rng(seed));
        match alg.try_invert(&a) {
            Ok(inv) => {
                let sv = alg.mul_operator(&a).unwrap().singular_values();
                let condition = sv.max() / sv.min();
                let p = alg.mul(&a, &inv).unwrap();
                prop_assert!(p.max_abs_diff(&alg.one()).unwrap() <= 1e-13 * condition.max(1.0));
            }
            Err(AlgebraError::NotInvertible { condition }) => prop_assert!(condition > 1e12),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn division_reconstructs(seed in any::<u64>(), n in 1usize..5, len in 0usize..9) {
        let alg = fnalg(3);
        let mut r = rng(seed);
        let alpha = MonicPolynomial::new("x", (0..n).map(|_| random_element(&alg, &mut r)).collect()).unwrap();
        let p = GeneralPolynomial::new((0..len).map(|_| random_element(&alg, &mut r)).collect());
        let d = reduce_mod_monic(&alg, &p, &alpha).unwrap();
        prop_assert!(d.remainder.degree().is_none_or(|k| k < n));
        let back = poly_mul(&alg, &alpha.to_general(&alg), &d.quotient).unwrap().add(&alg, &d.remainder).unwrap();
        let zero = alg.zero();
        for k in 0..p.coeffs().len().max(back.coeffs().len()) {
            let x = p.coeffs().get(k).unwrap_or(&zero);
            let y = back.coeffs().get(k).unwrap_or(&zero);
            prop_assert!(x.max_abs_diff(y).unwrap() <= 1e-12 * (1.0 + x.max_abs()) * 10.0);
        }
    }

    #[test]
    fn reduction_is_order_independent(seed in any::<u64>(), terms in 1usize..6) {
        let alg = fnalg(2);
        let mut r = rng(seed);
        let polys = vec![
            MonicPolynomial::new("x", vec![random_element(&alg, &mut r), random_element(&alg, &mut r)]).unwrap(),
            MonicPolynomial::new("y", vec![random_element(&alg, &mut r); 3]).unwrap(),
        ];
        let q = MultiPoly {
            terms: (0..terms)
                .map(|k| (vec![k % 4, (3 * k) % 5], random_element(&alg, &mut r)))
                .collect(),
        };
        let a = multi_reduce_in_order(&alg, &q, &polys, &[0, 1]).unwrap();
        let b = multi_reduce_in_order(&alg, &q, &polys, &[1, 0]).unwrap();
        prop_assert_eq!(a.len(), 6);
        for (x, y) in a.iter().zip(&b) {
            prop_assert!(x.max_abs_diff(y).unwrap() <= 1e-10 * (1.0 + x.max_abs()));
        }
    }

    #[test]
    fn cole_operator_identities(seed in any::<u64>(), n in 2usize..8) {
        let base = fnalg(n);
        let mut r = rng(seed);
        let f = Element::Values(random_values(n, &mut r));
        let g = Element::Values(random_values(n, &mut r));
        let polys = vec![
            MonicPolynomial::new("x", vec![f.neg(), base.zero()]).unwrap(),
            MonicPolynomial::new("y", vec![g, f, base.zero()]).unwrap(),
        ];
        let ext = cole_extend(&base, polys, Some(2)).unwrap();
        let sp = ext.space();
        prop_assert!(sp.fibers().iter().all(|fib| !fib.is_empty() && fib.len() <= 6));
        let w = sp.weights();
        for fib in sp.fibers() {
            prop_assert!((fib.iter().map(|&i| w[i]).sum::<f64>() - 1.0).abs() < 1e-12);
        }
        let h = random_values(n, &mut r);
        let back = ext.cole_t(&ext.pi_star(&h).unwrap()).unwrap();
        prop_assert!(back.iter().zip(&h).all(|(a, b)| (a - b).norm() < 1e-12));
        let sup = |v: &[algext::Complex64]| v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        prop_assert_eq!(sup(&ext.pi_star(&h).unwrap()), sup(&h));
        let lifted = random_values(sp.len(), &mut r);
        prop_assert!(sup(&ext.cole_t(&lifted).unwrap()) <= sup(&lifted) + 1e-12);
        prop_assert!(ext.root_residuals().unwrap().iter().all(|&x| x <= 1e-8));
    }
}

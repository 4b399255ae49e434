mod common;

use std::f64::consts::TAU;
use std::sync::Arc;

use algext::span::membership_residual;
use algext::{cole_extend, cole_tower, Algebra, Complex64, Element, GenExpr, MonicPolynomial, NamedFn, PointSet, StagePoly};

fn disk(n: usize, cap: usize) -> Arc<Algebra> {
    let outer = n - n / 2;
    let coords: Vec<Complex64> = (0..n)
        .map(|k| {
            if k < outer {
                Complex64::from_polar(1.0, TAU * k as f64 / outer as f64)
            } else {
                let j = (k - outer) as f64 + 0.5;
                Complex64::from_polar(0.5, TAU * j / (n / 2) as f64)
            }
        })
        .collect();
    Algebra::sampled(PointSet::from_coords(coords.clone()).unwrap(), vec![NamedFn::new("z", coords)], cap).unwrap()
}

fn z_values(alg: &Algebra) -> Vec<Complex64> {
    alg.root_points().coords().unwrap().to_vec()
}

#[test]
fn square_root_of_z_grows_the_span() {
    let base = disk(50, 1);
    let z = Element::Values(z_values(&base));
    let alpha = MonicPolynomial::new("x", vec![z.neg(), base.zero()]).unwrap();
    let ext = cole_extend(&base, vec![alpha], None).unwrap();
    let p = ext.p_alpha(0).unwrap();
    let pulled_span = algext::span::span_basis(
        ext.space().len(),
        &[NamedFn::new("z", ext.pi_star(&z_values(&base)).unwrap())],
        1,
    )
    .unwrap();
    assert!(pulled_span.membership_residual(&p).unwrap() > 0.1);
    let t = ext.triviality().unwrap();
    assert!(t.extension_rank > t.base_rank, "{t:?}");
    assert_eq!(t.extension_points, 100);
}

#[test]
fn conjugate_is_far_from_polynomials() {
    let base = disk(50, 6);
    let conj: Vec<Complex64> = z_values(&base).iter().map(|z| z.conj()).collect();
    assert!(membership_residual(&base, &conj).unwrap() > 0.1);
    assert!(membership_residual(&base, &z_values(&base)).unwrap() < 1e-10);
}

#[test]
fn square_root_stages_at_most_double() {
    let base = disk(40, 2);
    let sqrt_of = |var: &str, e: GenExpr| StagePoly {
        var: var.into(),
        coeffs: vec![GenExpr::Neg(Box::new(e)), GenExpr::Const(common::c(0.0))],
    };
    let stages = vec![
        vec![sqrt_of("a", GenExpr::Gen("z".into()))],
        vec![sqrt_of("b", GenExpr::Sum(vec![GenExpr::Gen("a".into()), GenExpr::Const(common::c(2.0))]))],
    ];
    let tower = cole_tower(&base, &stages, None).unwrap();
    for k in 1..tower.levels() {
        let below = tower.level(k - 1).dimension();
        let here = tower.level(k).dimension();
        assert!(here <= 2 * below && here >= below);
    }
    let t = tower.stages()[1].triviality().unwrap();
    assert!(!t.base_nontrivial() || t.extension_nontrivial(), "{t:?}");
}

#[test]
fn fibers_match_roots_over_function_algebras() {
    let base = common::fnalg(3);
    let f = Element::Values(vec![common::c(0.0), common::c(1.0), common::c(4.0)]);
    let alpha = MonicPolynomial::new("x", vec![f.neg(), base.zero()]).unwrap();
    let ext = cole_extend(&base, vec![alpha], None).unwrap();
    let sizes: Vec<usize> = ext.space().fibers().iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 2, 2]);
    assert_eq!(ext.space().points()[0].multiplicity, 2);
}

//! Arens–Hoffman extensions `A_α = A[x]/(α(x))`.
//!
//! The norm `‖Σ b_k x̄^k‖ = Σ ‖b_k‖ t^k` is an algebra norm whenever the
//! parameter satisfies `t^n ≥ Σ ‖a_k‖ t^k`.

use std::sync::Arc;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::hom::{HomRule, Homomorphism, Route};
use crate::poly::MonicPolynomial;

/// Tolerated negative slack for a supplied norm parameter.
pub const SLACK_TOL: f64 = 1e-12;
/// Largest accepted `‖θ(α)(y)‖` for an induced homomorphism.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Default,
    Supplied,
}

/// A validated norm parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormParam {
    pub t: f64,
    pub provenance: Provenance,
    /// `t^n − Σ ‖a_k‖ t^k`.
    pub slack: f64,
}

fn coeff_norms(base: &Algebra, alpha: &MonicPolynomial) -> Result<Vec<f64>> {
    alpha.coeffs().iter().map(|a| base.norm(a)).collect()
}

/// `t^n − Σ c_k t^k` for coefficient norms `c_k`.
pub fn norm_slack(coeff_norms: &[f64], t: f64) -> f64 {
    let n = coeff_norms.len() as i32;
    t.powi(n)
        - coeff_norms
            .iter()
            .enumerate()
            .map(|(k, c)| c * t.powi(k as i32))
            .sum::<f64>()
}

/// Smallest admissible parameter: the positive root of `t^n = Σ ‖a_k‖ t^k`,
/// or 1 when every coefficient vanishes.
pub fn default_norm_param(base: &Algebra, alpha: &MonicPolynomial) -> Result<NormParam> {
    let c = coeff_norms(base, alpha)?;
    let n = c.len();
    if c.iter().all(|&x| x == 0.0) {
        return Ok(NormParam {
            t: 1.0,
            provenance: Provenance::Default,
            slack: 1.0,
        });
    }
    // t^{-n} (t^n − Σ c_k t^k) is increasing, so there is one sign change
    let lower = c
        .iter()
        .enumerate()
        .map(|(k, &ck)| ck.powf(1.0 / (n - k) as f64) / n as f64)
        .fold(1e-6, f64::max);
    let mut lo = lower;
    let mut hi = 1.0 + c.iter().sum::<f64>();
    for _ in 0..400 {
        if hi - lo <= 1e-12 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if norm_slack(&c, mid) >= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    // Newton polish from above; keep any iterate that stays admissible
    let mut t = hi;
    for _ in 0..4 {
        let f = norm_slack(&c, t);
        let df = n as f64 * t.powi(n as i32 - 1)
            - c.iter()
                .enumerate()
                .skip(1)
                .map(|(k, ck)| k as f64 * ck * t.powi(k as i32 - 1))
                .sum::<f64>();
        if df <= 0.0 {
            break;
        }
        let next = t - f / df;
        if next >= lo && next <= t && norm_slack(&c, next) >= 0.0 {
            t = next;
        } else {
            break;
        }
    }
    Ok(NormParam {
        t,
        provenance: Provenance::Default,
        slack: norm_slack(&c, t),
    })
}

/// Check a user-supplied parameter against the Arens–Hoffman inequality.
pub fn validate_norm_param(base: &Algebra, alpha: &MonicPolynomial, t: f64) -> Result<NormParam> {
    if !(t.is_finite() && t > 0.0) {
        return Err(AlgebraError::NormParameter { t, slack: f64::NAN });
    }
    let slack = norm_slack(&coeff_norms(base, alpha)?, t);
    if slack < -SLACK_TOL {
        return Err(AlgebraError::NormParameter { t, slack });
    }
    Ok(NormParam {
        t,
        provenance: Provenance::Supplied,
        slack,
    })
}

/// Build `base_α`, using the default parameter when `t` is `None`.
pub fn ah_extend(
    base: &Arc<Algebra>,
    alpha: MonicPolynomial,
    t: Option<f64>,
) -> Result<Arc<Algebra>> {
    alpha.check_over(base)?;
    let norm = match t {
        Some(t) => validate_norm_param(base, &alpha, t)?,
        None => default_norm_param(base, &alpha)?,
    };
    Ok(Arc::new(Algebra::ArensHoffman {
        base: Arc::clone(base),
        alpha,
        norm,
    }))
}

fn ah_parts(ext: &Algebra) -> Result<(&Arc<Algebra>, &MonicPolynomial)> {
    match ext {
        Algebra::ArensHoffman { base, alpha, .. } => Ok((base, alpha)),
        _ => Err(AlgebraError::Domain(format!(
            "expected an Arens-Hoffman extension, got {}",
            ext.kind_name()
        ))),
    }
}

/// `ν(a) = (a, 0, …, 0)`.
pub fn ah_embed(ext: &Algebra, a: &Element) -> Result<Element> {
    let (base, alpha) = ah_parts(ext)?;
    base.check_shape(a)?;
    let mut coeffs = vec![base.zero(); alpha.degree()];
    coeffs[0] = a.clone();
    Ok(Element::Coeffs(coeffs))
}

/// The class `x̄` of the indeterminate.
pub fn ah_root(ext: &Algebra) -> Result<Element> {
    let (base, alpha) = ah_parts(ext)?;
    let n = alpha.degree();
    if n == 1 {
        return Ok(Element::Coeffs(vec![alpha.coeffs()[0].neg()]));
    }
    let mut coeffs = vec![base.zero(); n];
    coeffs[1] = base.one();
    Ok(Element::Coeffs(coeffs))
}

/// `‖θ(α)(y)‖` in θ's codomain.
pub fn root_residual(alpha: &MonicPolynomial, theta: &Homomorphism, y: &Element) -> Result<f64> {
    let image = alpha.map_coeffs(|a| theta.apply(a))?;
    let codomain = theta.codomain();
    codomain.norm(&image.eval(codomain, y)?)
}

/// The unique homomorphism `φ: base_α → B` with `φ∘ν = θ` and `φ(x̄) = y`.
pub fn induced_hom(ext: &Arc<Algebra>, theta: Homomorphism, y: Element) -> Result<Homomorphism> {
    induced_hom_with_route(ext, theta, y, Route::Coefficientwise)
}

/// As [`induced_hom`], choosing how `Σ θ(b_k) y^k` is evaluated.
pub fn induced_hom_with_route(
    ext: &Arc<Algebra>,
    theta: Homomorphism,
    y: Element,
    route: Route,
) -> Result<Homomorphism> {
    let (base, alpha) = ah_parts(ext)?;
    if theta.domain().as_ref() != base.as_ref() {
        return Err(AlgebraError::Domain(
            "θ is not defined on the base of the extension".into(),
        ));
    }
    theta.codomain().check_shape(&y)?;
    let residual = root_residual(alpha, &theta, &y)?;
    if !(residual <= ROOT_RESIDUAL_TOL) {
        return Err(AlgebraError::RootResidual {
            name: alpha.var().to_string(),
            residual,
        });
    }
    let codomain = Arc::clone(theta.codomain());
    Ok(Homomorphism::new(
        Arc::clone(ext),
        codomain,
        HomRule::Induced {
            theta: Box::new(theta),
            root: y,
            route,
            residual,
        },
    ))
}

/// `max_k ‖y^k‖ / t^k`, a bound on `‖φ‖` when `θ` is contractive.
pub fn continuity_constant(ext: &Algebra, codomain: &Algebra, y: &Element) -> Result<f64> {
    let (_, alpha) = ah_parts(ext)?;
    let t = match ext {
        Algebra::ArensHoffman { norm, .. } => norm.t,
        _ => unreachable!(),
    };
    let mut power = codomain.one();
    let mut best: f64 = 0.0;
    for k in 0..alpha.degree() {
        best = best.max(codomain.norm(&power)? / t.powi(k as i32));
        power = codomain.mul(&power, y)?;
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PointSet;
    use crate::character::Character;
    use num_complex::Complex64;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn scalar_poly(v: &[f64]) -> MonicPolynomial {
        MonicPolynomial::new("x", v.iter().map(|&x| Element::Values(vec![c(x)])).collect()).unwrap()
    }

    #[test]
    fn default_parameters() {
        let cc = Algebra::complex();
        let t = default_norm_param(&cc, &scalar_poly(&[-1.0, 0.0])).unwrap();
        assert_eq!(t.t, 1.0);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        let t = default_norm_param(&cc, &scalar_poly(&[-1.0, 2.0, 0.0])).unwrap();
        assert!((t.t - phi).abs() < 1e-10, "{}", t.t);
        assert!(t.slack >= 0.0);
        let t = default_norm_param(&cc, &scalar_poly(&[0.0, 0.0])).unwrap();
        assert_eq!(t.t, 1.0);
    }

    #[test]
    fn supplied_parameter_is_validated() {
        let base = Algebra::functions(PointSet::from_coords(vec![c(0.0), c(1.0)]).unwrap());
        let f = Element::Values(vec![c(1.0), c(4.0)]);
        let alpha = MonicPolynomial::new("x", vec![f.neg(), base.zero()]).unwrap();
        match ah_extend(&base, alpha.clone(), Some(0.5)) {
            Err(AlgebraError::NormParameter { slack, .. }) => assert!((slack + 3.75).abs() < 1e-15),
            other => panic!("expected validation error, got {other:?}"),
        }
        let ok = ah_extend(&base, alpha, Some(2.0)).unwrap();
        assert_eq!(ok.dimension(), 4);
    }

    #[test]
    fn embedding_and_root() {
        let cc = Algebra::complex();
        let ext = ah_extend(&cc, scalar_poly(&[-1.0, 0.0]), None).unwrap();
        let one = ah_embed(&ext, &cc.one()).unwrap();
        assert_eq!(one, ext.one());
        assert_eq!(ext.norm(&one).unwrap(), 1.0);
        let x = ah_root(&ext).unwrap();
        assert_eq!(ext.norm(&x).unwrap(), 1.0);
        assert_eq!(ext.pow(&x, 3).unwrap(), x);
    }

    #[test]
    fn induced_character_of_complex_extension() {
        let cc = Algebra::complex();
        let ext = ah_extend(&cc, scalar_poly(&[-1.0, 0.0]), None).unwrap();
        let phi = induced_hom(&ext, Homomorphism::identity(&cc), Element::Values(vec![c(-1.0)]))
            .unwrap();
        let b = Element::Coeffs(vec![Element::Values(vec![c(5.0)]), Element::Values(vec![c(2.0)])]);
        assert_eq!(phi.apply(&b).unwrap(), Element::Values(vec![c(3.0)]));
    }

    #[test]
    fn induced_by_embedding_is_identity() {
        let cc = Algebra::complex();
        let ext = ah_extend(&cc, scalar_poly(&[-1.0, 2.0, 0.0]), None).unwrap();
        let phi = induced_hom(&ext, Homomorphism::embedding(&ext).unwrap(), ah_root(&ext).unwrap())
            .unwrap();
        for e in ext.basis().unwrap() {
            assert!(phi.apply(&e).unwrap().max_abs_diff(&e).unwrap() < 1e-12);
        }
    }

    #[test]
    fn induced_evaluation_matches_lifted_character() {
        let base = Algebra::functions(PointSet::from_coords(vec![c(0.0), c(1.0)]).unwrap());
        let f = Element::Values(vec![c(1.0), c(4.0)]);
        let alpha = MonicPolynomial::new("x", vec![f.neg(), base.zero()]).unwrap();
        let ext = ah_extend(&base, alpha, None).unwrap();
        let theta = Homomorphism::evaluation(&base, Character::Point(1));
        let phi = induced_hom(&ext, theta, Element::Values(vec![c(2.0)])).unwrap();
        let lifted = Character::Lifted {
            base: Box::new(Character::Point(1)),
            root: c(2.0),
        };
        for e in ext.basis().unwrap() {
            let got = phi.apply(&e).unwrap().flatten()[0];
            assert!((got - lifted.eval(&ext, &e).unwrap()).norm() < 1e-12);
        }
    }

    #[test]
    fn non_root_is_rejected() {
        let cc = Algebra::complex();
        let ext = ah_extend(&cc, scalar_poly(&[-1.0, 0.0]), None).unwrap();
        let err = induced_hom(&ext, Homomorphism::identity(&cc), Element::Values(vec![c(2.0)]));
        match err {
            Err(AlgebraError::RootResidual { name, residual }) => {
                assert_eq!(name, "x");
                assert_eq!(residual, 3.0);
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}

//! Unital homomorphisms between concrete algebras, built only from a
//! small set of primitive rules.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::Algebra;
use crate::character::Character;
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::sample::random_element;

/// How an induced map evaluates `Σ θ(b_k) y^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Sum of `θ(b_k)` times precomputed powers of `y`.
    Coefficientwise,
    /// Nested multiplication from the top coefficient down.
    Horner,
}

#[derive(Clone, Debug)]
pub enum HomRule {
    Identity,
    /// Base into an Arens–Hoffman or multivariate extension as constants.
    Embed,
    /// Multivariate extension by `S` into one by `T ⊇ S`; variable `j` of
    /// the domain is variable `positions[j]` of the codomain.
    Connect { positions: Vec<usize> },
    /// Apply a character; the codomain is ℂ.
    Evaluate(Character),
    /// `g ↦ g ∘ π` for the point map `π(i) = parent[i]`.
    Pullback { parent: Vec<usize> },
    /// From an Arens–Hoffman extension: `Σ b_k x̄^k ↦ Σ θ(b_k) y^k`.
    Induced {
        theta: Box<Homomorphism>,
        root: Element,
        route: Route,
        residual: f64,
    },
    /// First, then second.
    Compose(Box<Homomorphism>, Box<Homomorphism>),
}

#[derive(Clone, Debug)]
pub struct Homomorphism {
    domain: Arc<Algebra>,
    codomain: Arc<Algebra>,
    rule: HomRule,
}

impl Homomorphism {
    pub(crate) fn new(domain: Arc<Algebra>, codomain: Arc<Algebra>, rule: HomRule) -> Self {
        Homomorphism {
            domain,
            codomain,
            rule,
        }
    }

    pub fn identity(alg: &Arc<Algebra>) -> Self {
        Homomorphism::new(Arc::clone(alg), Arc::clone(alg), HomRule::Identity)
    }

    /// `ν: base → ext`.
    pub fn embedding(ext: &Arc<Algebra>) -> Result<Self> {
        let base = ext
            .base()
            .ok_or_else(|| AlgebraError::Domain("function algebras have no base".into()))?;
        Ok(Homomorphism::new(Arc::clone(base), Arc::clone(ext), HomRule::Embed))
    }

    pub fn evaluation(alg: &Arc<Algebra>, omega: Character) -> Self {
        Homomorphism::new(Arc::clone(alg), Algebra::complex(), HomRule::Evaluate(omega))
    }

    pub fn pullback(domain: &Arc<Algebra>, codomain: &Arc<Algebra>, parent: Vec<usize>) -> Result<Self> {
        if !domain.is_function_algebra() || !codomain.is_function_algebra() {
            return Err(AlgebraError::Domain("pullback needs function algebras".into()));
        }
        if parent.len() != codomain.dimension() || parent.iter().any(|&p| p >= domain.dimension()) {
            return Err(AlgebraError::Shape("point map does not fit the algebras".into()));
        }
        Ok(Homomorphism::new(
            Arc::clone(domain),
            Arc::clone(codomain),
            HomRule::Pullback { parent },
        ))
    }

    pub(crate) fn connect(domain: &Arc<Algebra>, codomain: &Arc<Algebra>, positions: Vec<usize>) -> Self {
        Homomorphism::new(
            Arc::clone(domain),
            Arc::clone(codomain),
            HomRule::Connect { positions },
        )
    }

    /// `self` followed by `then`.
    pub fn compose(self, then: Homomorphism) -> Result<Self> {
        if self.codomain.as_ref() != then.domain.as_ref() {
            return Err(AlgebraError::Domain("composing maps with mismatched algebras".into()));
        }
        let domain = Arc::clone(&self.domain);
        let codomain = Arc::clone(&then.codomain);
        Ok(Homomorphism::new(
            domain,
            codomain,
            HomRule::Compose(Box::new(self), Box::new(then)),
        ))
    }

    pub fn domain(&self) -> &Arc<Algebra> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<Algebra> {
        &self.codomain
    }

    pub fn rule(&self) -> &HomRule {
        &self.rule
    }

    pub fn apply(&self, a: &Element) -> Result<Element> {
        self.domain.check_shape(a)?;
        match &self.rule {
            HomRule::Identity => Ok(a.clone()),
            HomRule::Embed => match self.codomain.as_ref() {
                Algebra::ArensHoffman { .. } => crate::arens_hoffman::ah_embed(&self.codomain, a),
                Algebra::Multi { base, .. } => {
                    let mut table = self.codomain.zero();
                    if let Element::Table(t) = &mut table {
                        base.check_shape(a)?;
                        t[0] = a.clone();
                    }
                    Ok(table)
                }
                _ => Err(AlgebraError::Domain("embedding into a function algebra".into())),
            },
            HomRule::Connect { positions } => {
                let (Element::Table(src), Some(from), Some(to)) =
                    (a, self.domain.table_radix(), self.codomain.table_radix())
                else {
                    return Err(AlgebraError::Domain("connecting map needs tables".into()));
                };
                let mut out = self.codomain.zero();
                if let Element::Table(dst) = &mut out {
                    let mut digits = vec![0; to.dims().len()];
                    for (i, q) in src.iter().enumerate() {
                        digits.iter_mut().for_each(|d| *d = 0);
                        for (j, s) in from.digits(i).into_iter().enumerate() {
                            digits[positions[j]] = s;
                        }
                        dst[to.index(&digits)] = q.clone();
                    }
                }
                Ok(out)
            }
            HomRule::Evaluate(omega) => Ok(Element::Values(vec![omega.eval(&self.domain, a)?])),
            HomRule::Pullback { parent } => match a {
                Element::Values(v) => Ok(Element::Values(parent.iter().map(|&p| v[p]).collect())),
                _ => Err(AlgebraError::Shape("pullback of a non-function".into())),
            },
            HomRule::Induced {
                theta, root, route, ..
            } => {
                let Element::Coeffs(coeffs) = a else {
                    return Err(AlgebraError::Shape("induced map needs coefficients".into()));
                };
                let cod = &self.codomain;
                match route {
                    Route::Coefficientwise => {
                        let mut acc = cod.zero();
                        let mut power = cod.one();
                        for b in coeffs {
                            acc = acc.add(&cod.mul(&theta.apply(b)?, &power)?)?;
                            power = cod.mul(&power, root)?;
                        }
                        Ok(acc)
                    }
                    Route::Horner => {
                        let mut acc = cod.zero();
                        for b in coeffs.iter().rev() {
                            acc = cod.mul(&acc, root)?.add(&theta.apply(b)?)?;
                        }
                        Ok(acc)
                    }
                }
            }
            HomRule::Compose(first, then) => then.apply(&first.apply(a)?),
        }
    }

    /// Largest root residual recorded while building induced maps.
    pub fn max_root_residual(&self) -> f64 {
        match &self.rule {
            HomRule::Induced { theta, residual, .. } => residual.max(theta.max_root_residual()),
            HomRule::Compose(a, b) => a.max_root_residual().max(b.max_root_residual()),
            _ => 0.0,
        }
    }

    /// `‖φ(1) − 1‖`.
    pub fn unital_defect(&self) -> Result<f64> {
        self.apply(&self.domain.one())?
            .max_abs_diff(&self.codomain.one())
    }

    /// Same map with every induced stage evaluated by `route`.
    pub fn with_route(&self, route: Route) -> Self {
        let rule = match &self.rule {
            HomRule::Induced {
                theta,
                root,
                residual,
                ..
            } => HomRule::Induced {
                theta: Box::new(theta.with_route(route)),
                root: root.clone(),
                route,
                residual: *residual,
            },
            HomRule::Compose(a, b) => {
                HomRule::Compose(Box::new(a.with_route(route)), Box::new(b.with_route(route)))
            }
            other => other.clone(),
        };
        Homomorphism::new(Arc::clone(&self.domain), Arc::clone(&self.codomain), rule)
    }

    /// Sampled metadata: multiplicativity and norm ratios.
    pub fn sampled_report<R: Rng>(&self, rng: &mut R, samples: usize) -> Result<HomReport> {
        let mut report = HomReport {
            unital_defect: self.unital_defect()?,
            max_multiplicative_defect: 0.0,
            max_norm_ratio: 0.0,
            min_norm_ratio: f64::INFINITY,
        };
        for _ in 0..samples {
            let u = random_element(&self.domain, rng);
            let v = random_element(&self.domain, rng);
            let fu = self.apply(&u)?;
            let fv = self.apply(&v)?;
            let lhs = self.apply(&self.domain.mul(&u, &v)?)?;
            let rhs = self.codomain.mul(&fu, &fv)?;
            let scale = 1.0 + self.codomain.norm(&rhs)?;
            report.max_multiplicative_defect = report
                .max_multiplicative_defect
                .max(self.codomain.norm(&lhs.sub(&rhs)?)? / scale);
            let ratio = self.codomain.norm(&fu)? / self.domain.norm(&u)?;
            report.max_norm_ratio = report.max_norm_ratio.max(ratio);
            report.min_norm_ratio = report.min_norm_ratio.min(ratio);
        }
        Ok(report)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct HomReport {
    pub unital_defect: f64,
    /// `max ‖φ(uv) − φ(u)φ(v)‖ / (1 + ‖φ(u)φ(v)‖)`.
    pub max_multiplicative_defect: f64,
    pub max_norm_ratio: f64,
    pub min_norm_ratio: f64,
}

/// Largest coefficient difference between two maps on the canonical basis
/// of their common domain.
pub fn agreement_on_basis(f: &Homomorphism, g: &Homomorphism) -> Result<f64> {
    if f.domain().as_ref() != g.domain().as_ref() {
        return Err(AlgebraError::Domain("maps have different domains".into()));
    }
    let mut worst: f64 = 0.0;
    for e in f.domain().basis()? {
        worst = worst.max(f.apply(&e)?.max_abs_diff(&g.apply(&e)?)?);
    }
    Ok(worst)
}

/// `max ‖φ(a)‖ − ‖a‖` over the canonical basis, as an absolute discrepancy.
pub fn basis_norm_discrepancy(f: &Homomorphism) -> Result<f64> {
    let mut worst: f64 = 0.0;
    for e in f.domain().basis()? {
        let d = f.codomain().norm(&f.apply(&e)?)? - f.domain().norm(&e)?;
        worst = worst.max(d.abs());
    }
    Ok(worst)
}

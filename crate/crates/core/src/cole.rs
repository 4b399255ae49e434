//! Cole extensions of sampled uniform algebras.
//!
//! For a function algebra on samples `X` and monic polynomials `U` over it,
//! the root-fiber space `X^U` consists of pairs `(κ, λ)` with `λ_α` a root of
//! `α` evaluated at `κ`. The extension algebra lives on `X^U` and is
//! generated by the pulled-back base generators together with the
//! coordinate functions `p_α`. The averaging operator `T` maps functions on
//! `X^U` back to `X` with `T ∘ π* = id`.

use std::sync::Arc;

use num_complex::Complex64;

use crate::algebra::{Algebra, NamedFn, PointSet, ROOT_TOL};
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::hom::Homomorphism;
use crate::poly::MonicPolynomial;
use crate::roots::{distinct_roots, eval_monic};
use crate::span::{algebra_span, SpanBasis};

/// Default degree cap for generated spans.
pub const DEFAULT_DEGREE_CAP: usize = 8;
/// Tolerance for `π*(α)(p_α) = 0` at every lifted point.
pub const FIBER_RESIDUAL_TOL: f64 = 1e-8;

/// A point of `X^U`.
#[derive(Clone, Debug, PartialEq)]
pub struct LiftedPoint {
    pub base: usize,
    pub lambdas: Vec<Complex64>,
    /// Product over `α` of the multiplicity of `λ_α` as a root.
    pub multiplicity: usize,
}

/// The root-fiber space over a sampled base.
#[derive(Clone, Debug, PartialEq)]
pub struct ColeSpace {
    points: Vec<LiftedPoint>,
    fibers: Vec<Vec<usize>>,
    degrees: Vec<usize>,
    max_residual: f64,
}

impl ColeSpace {
    pub fn points(&self) -> &[LiftedPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Lifted points over each base point.
    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    pub fn base_len(&self) -> usize {
        self.fibers.len()
    }

    /// `π` as an index map.
    pub fn projection(&self) -> Vec<usize> {
        self.points.iter().map(|p| p.base).collect()
    }

    /// `Π_α deg α`.
    pub fn total_degree(&self) -> usize {
        self.degrees.iter().product()
    }

    /// Largest defining-equation residual over all lifted points.
    pub fn max_residual(&self) -> f64 {
        self.max_residual
    }

    /// Averaging weight `multiplicity / Π deg α` of each lifted point.
    pub fn weights(&self) -> Vec<f64> {
        let n = self.total_degree() as f64;
        self.points.iter().map(|p| p.multiplicity as f64 / n).collect()
    }
}

fn function_values(alg: &Algebra, e: &Element) -> Result<Vec<Complex64>> {
    alg.check_shape(e)?;
    match e {
        Element::Values(v) => Ok(v.clone()),
        _ => Err(AlgebraError::Domain("Cole extensions need function algebras".into())),
    }
}

/// Build `X^U` by enumerating distinct roots at every base point.
pub fn cole_space(base: &Algebra, polys: &[MonicPolynomial]) -> Result<ColeSpace> {
    cole_space_with_tol(base, polys, ROOT_TOL)
}

/// As [`cole_space`], clustering roots with relative tolerance `root_tol`.
pub fn cole_space_with_tol(base: &Algebra, polys: &[MonicPolynomial], root_tol: f64) -> Result<ColeSpace> {
    if !base.is_function_algebra() {
        return Err(AlgebraError::Domain(
            "Cole extensions are built over function algebras".into(),
        ));
    }
    let n_points = base.dimension();
    let coeff_values: Vec<Vec<Vec<Complex64>>> = polys
        .iter()
        .map(|p| {
            p.coeffs()
                .iter()
                .map(|c| function_values(base, c))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut points = Vec::new();
    let mut fibers = Vec::with_capacity(n_points);
    let mut max_residual: f64 = 0.0;
    for kappa in 0..n_points {
        let mut combos: Vec<(Vec<Complex64>, usize)> = vec![(Vec::new(), 1)];
        for coeffs in &coeff_values {
            let at_kappa: Vec<Complex64> = coeffs.iter().map(|c| c[kappa]).collect();
            let roots = distinct_roots(&at_kappa, root_tol)?;
            for r in &roots {
                max_residual = max_residual.max(eval_monic(&at_kappa, r.root).norm());
            }
            combos = combos
                .into_iter()
                .flat_map(|(prefix, mult)| {
                    roots.iter().map(move |r| {
                        let mut v = prefix.clone();
                        v.push(r.root);
                        (v, mult * r.multiplicity)
                    })
                })
                .collect();
        }
        let start = points.len();
        points.extend(combos.into_iter().map(|(lambdas, multiplicity)| LiftedPoint {
            base: kappa,
            lambdas,
            multiplicity,
        }));
        fibers.push((start..points.len()).collect());
    }
    Ok(ColeSpace {
        points,
        fibers,
        degrees: polys.iter().map(|p| p.degree()).collect(),
        max_residual,
    })
}

/// A Cole extension `(A^U, X^U)` of a function algebra.
#[derive(Clone, Debug)]
pub struct ColeExtension {
    base: Arc<Algebra>,
    polys: Vec<MonicPolynomial>,
    space: ColeSpace,
    algebra: Arc<Algebra>,
}

/// Generators of a function algebra: the sampled generators, or the point
/// indicators for the algebra of all functions.
pub fn function_generators(alg: &Algebra) -> Result<Vec<NamedFn>> {
    match alg {
        Algebra::Sampled { generators, .. } => Ok(generators.clone()),
        Algebra::Functions { points } => Ok((0..points.len())
            .map(|i| {
                let mut v = vec![Complex64::new(0.0, 0.0); points.len()];
                v[i] = Complex64::new(1.0, 0.0);
                NamedFn::new(format!("e[{}]", points.labels()[i]), v)
            })
            .collect()),
        _ => Err(AlgebraError::Domain("not a function algebra".into())),
    }
}

fn degree_cap(alg: &Algebra) -> usize {
    match alg {
        Algebra::Sampled { degree_cap, .. } => *degree_cap,
        _ => DEFAULT_DEGREE_CAP,
    }
}

fn separates(generators: &[NamedFn], n: usize) -> Option<(usize, usize)> {
    for i in 0..n {
        for j in i + 1..n {
            let same = generators.iter().all(|g| {
                let scale = g.values[i].norm().max(g.values[j].norm()).max(1.0);
                (g.values[i] - g.values[j]).norm() <= 1e-12 * scale
            });
            if same {
                return Some((i, j));
            }
        }
    }
    None
}

/// Build the Cole extension by `polys`, with span degree cap `cap`
/// (`None` keeps the base's cap).
pub fn cole_extend(
    base: &Arc<Algebra>,
    polys: Vec<MonicPolynomial>,
    cap: Option<usize>,
) -> Result<ColeExtension> {
    cole_extend_with_tol(base, polys, cap, ROOT_TOL)
}

pub fn cole_extend_with_tol(
    base: &Arc<Algebra>,
    polys: Vec<MonicPolynomial>,
    cap: Option<usize>,
    root_tol: f64,
) -> Result<ColeExtension> {
    let space = cole_space_with_tol(base, &polys, root_tol)?;
    if polys.is_empty() {
        return Ok(ColeExtension {
            base: Arc::clone(base),
            polys,
            space,
            algebra: Arc::clone(base),
        });
    }
    let base_gens = function_generators(base)?;
    if let Algebra::Sampled { points, .. } = base.as_ref() {
        if let Some((i, j)) = separates(&base_gens, points.len()) {
            return Err(AlgebraError::Construction(format!(
                "generators do not separate base points `{}` and `{}`",
                points.labels()[i],
                points.labels()[j]
            )));
        }
    }
    let mut seen: std::collections::HashSet<&str> =
        base_gens.iter().map(|g| g.name.as_str()).collect();
    for p in &polys {
        if !seen.insert(p.var()) {
            return Err(AlgebraError::Construction(format!(
                "generator name `{}` already in use",
                p.var()
            )));
        }
    }
    let parent = space.projection();
    let base_points = base.root_points();
    let labels = space
        .fibers()
        .iter()
        .enumerate()
        .flat_map(|(kappa, fiber)| {
            (0..fiber.len()).map(move |i| format!("{}#{}", base_points.labels()[kappa], i))
        })
        .collect();
    let coords = base_points
        .coords()
        .map(|c| parent.iter().map(|&k| c[k]).collect());
    let points = PointSet::new(labels, coords)?;
    let mut generators: Vec<NamedFn> = base_gens
        .iter()
        .map(|g| NamedFn::new(g.name.clone(), parent.iter().map(|&k| g.values[k]).collect()))
        .collect();
    for (j, p) in polys.iter().enumerate() {
        generators.push(NamedFn::new(
            p.var(),
            space.points().iter().map(|y| y.lambdas[j]).collect(),
        ));
    }
    let algebra = Algebra::sampled(points, generators, cap.unwrap_or_else(|| degree_cap(base)))?;
    Ok(ColeExtension {
        base: Arc::clone(base),
        polys,
        space,
        algebra,
    })
}

impl ColeExtension {
    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn space(&self) -> &ColeSpace {
        &self.space
    }

    pub fn polys(&self) -> &[MonicPolynomial] {
        &self.polys
    }

    /// `π*(g) = g ∘ π`.
    pub fn pi_star(&self, g: &[Complex64]) -> Result<Vec<Complex64>> {
        if g.len() != self.space.base_len() {
            return Err(AlgebraError::Shape(format!(
                "function with {} values on {} base points",
                g.len(),
                self.space.base_len()
            )));
        }
        Ok(self.space.points().iter().map(|y| g[y.base]).collect())
    }

    /// `π*` as a homomorphism of function algebras.
    pub fn pi_star_hom(&self) -> Result<Homomorphism> {
        Homomorphism::pullback(&self.base, &self.algebra, self.space.projection())
    }

    /// Coordinate function `p_α` for the `j`-th polynomial.
    pub fn p_alpha(&self, j: usize) -> Result<Vec<Complex64>> {
        if j >= self.polys.len() {
            return Err(AlgebraError::Domain(format!("no polynomial with index {j}")));
        }
        Ok(self.space.points().iter().map(|y| y.lambdas[j]).collect())
    }

    /// `T(g)(κ) = Σ_{y over κ} w(y) g(y)`.
    pub fn cole_t(&self, g: &[Complex64]) -> Result<Vec<Complex64>> {
        if g.len() != self.space.len() {
            return Err(AlgebraError::Shape(format!(
                "function with {} values on {} lifted points",
                g.len(),
                self.space.len()
            )));
        }
        let w = self.space.weights();
        Ok(self
            .space
            .fibers()
            .iter()
            .map(|fiber| fiber.iter().map(|&i| g[i] * w[i]).sum())
            .collect())
    }

    /// Per-polynomial `max |π*(α)(p_α)|` over the lifted points.
    pub fn root_residuals(&self) -> Result<Vec<f64>> {
        self.polys
            .iter()
            .enumerate()
            .map(|(j, p)| {
                let coeffs: Vec<Vec<Complex64>> = p
                    .coeffs()
                    .iter()
                    .map(|c| function_values(&self.base, c).and_then(|v| self.pi_star(&v)))
                    .collect::<Result<_>>()?;
                let pa = self.p_alpha(j)?;
                Ok((0..self.space.len())
                    .map(|i| {
                        let at: Vec<Complex64> = coeffs.iter().map(|c| c[i]).collect();
                        eval_monic(&at, pa[i]).norm()
                    })
                    .fold(0.0, f64::max))
            })
            .collect()
    }

    pub fn span(&self) -> Result<SpanBasis> {
        algebra_span(&self.algebra)
    }

    /// Span ranks of base and extension against their point counts.
    pub fn triviality(&self) -> Result<Triviality> {
        let base_span = algebra_span(&self.base)?;
        let ext_span = self.span()?;
        Ok(Triviality {
            base_rank: base_span.rank(),
            base_points: self.space.base_len(),
            extension_rank: ext_span.rank(),
            extension_points: self.space.len(),
        })
    }
}

/// Span rank versus sample count, a finite-sample trace of non-triviality.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triviality {
    pub base_rank: usize,
    pub base_points: usize,
    pub extension_rank: usize,
    pub extension_points: usize,
}

impl Triviality {
    pub fn base_nontrivial(&self) -> bool {
        self.base_rank < self.base_points
    }

    pub fn extension_nontrivial(&self) -> bool {
        self.extension_rank < self.extension_points
    }
}

/// Polynomial expression in the named generators of a function algebra.
#[derive(Clone, Debug, PartialEq)]
pub enum GenExpr {
    Const(Complex64),
    Gen(String),
    Sum(Vec<GenExpr>),
    Product(Vec<GenExpr>),
    Neg(Box<GenExpr>),
}

impl GenExpr {
    pub fn eval(&self, generators: &[NamedFn], points: usize) -> Result<Vec<Complex64>> {
        Ok(match self {
            GenExpr::Const(c) => vec![*c; points],
            GenExpr::Gen(name) => generators
                .iter()
                .find(|g| &g.name == name)
                .ok_or_else(|| AlgebraError::Domain(format!("unknown generator `{name}`")))?
                .values
                .clone(),
            GenExpr::Sum(terms) => {
                let mut acc = vec![Complex64::new(0.0, 0.0); points];
                for t in terms {
                    acc.iter_mut().zip(t.eval(generators, points)?).for_each(|(a, b)| *a += b);
                }
                acc
            }
            GenExpr::Product(terms) => {
                let mut acc = vec![Complex64::new(1.0, 0.0); points];
                for t in terms {
                    acc.iter_mut().zip(t.eval(generators, points)?).for_each(|(a, b)| *a *= b);
                }
                acc
            }
            GenExpr::Neg(e) => e.eval(generators, points)?.into_iter().map(|z| -z).collect(),
        })
    }
}

/// A polynomial whose coefficients are generator expressions of the
/// algebra it will be adjoined to.
#[derive(Clone, Debug, PartialEq)]
pub struct StagePoly {
    pub var: String,
    pub coeffs: Vec<GenExpr>,
}

impl StagePoly {
    pub fn realize(&self, alg: &Algebra) -> Result<MonicPolynomial> {
        let gens = function_generators(alg)?;
        let n = alg.dimension();
        MonicPolynomial::new(
            self.var.clone(),
            self.coeffs
                .iter()
                .map(|c| Ok(Element::Values(c.eval(&gens, n)?)))
                .collect::<Result<_>>()?,
        )
    }
}

/// A finite system of Cole extensions `A_0 ⊆ A_1 ⊆ … ⊆ A_k`.
#[derive(Clone, Debug)]
pub struct ColeTower {
    base: Arc<Algebra>,
    stages: Vec<ColeExtension>,
}

/// Iterate [`cole_extend`], realizing each stage's polynomials over the
/// previous stage's generators.
pub fn cole_tower(base: &Arc<Algebra>, stages: &[Vec<StagePoly>], cap: Option<usize>) -> Result<ColeTower> {
    let mut built: Vec<ColeExtension> = Vec::new();
    for stage in stages {
        let current = built.last().map(|e| Arc::clone(&e.algebra)).unwrap_or_else(|| Arc::clone(base));
        let polys = stage
            .iter()
            .map(|p| p.realize(&current))
            .collect::<Result<_>>()?;
        built.push(cole_extend(&current, polys, cap)?);
    }
    Ok(ColeTower {
        base: Arc::clone(base),
        stages: built,
    })
}

impl ColeTower {
    pub fn from_stages(base: Arc<Algebra>, stages: Vec<ColeExtension>) -> Result<Self> {
        let mut current = Arc::clone(&base);
        for s in &stages {
            if s.base.as_ref() != current.as_ref() {
                return Err(AlgebraError::Construction("Cole stages do not chain".into()));
            }
            current = Arc::clone(&s.algebra);
        }
        Ok(ColeTower { base, stages })
    }

    pub fn stages(&self) -> &[ColeExtension] {
        &self.stages
    }

    /// Number of levels including the base.
    pub fn levels(&self) -> usize {
        self.stages.len() + 1
    }

    pub fn level(&self, k: usize) -> &Arc<Algebra> {
        if k == 0 {
            &self.base
        } else {
            &self.stages[k - 1].algebra
        }
    }

    fn check_levels(&self, sigma: usize, tau: usize) -> Result<()> {
        if sigma > tau || tau >= self.levels() {
            return Err(AlgebraError::Domain(format!(
                "levels {sigma} <= {tau} not in a tower of {} levels",
                self.levels()
            )));
        }
        Ok(())
    }

    /// `π_{σ,τ}` as an index map from points of level τ to level σ.
    pub fn projection(&self, sigma: usize, tau: usize) -> Result<Vec<usize>> {
        self.check_levels(sigma, tau)?;
        let mut map: Vec<usize> = (0..self.level(tau).dimension()).collect();
        for k in (sigma..tau).rev() {
            let parent = self.stages[k].space.projection();
            map.iter_mut().for_each(|i| *i = parent[*i]);
        }
        Ok(map)
    }

    /// `π*_{σ,τ}(g) = g ∘ π_{σ,τ}`.
    pub fn pi_star(&self, sigma: usize, tau: usize, g: &[Complex64]) -> Result<Vec<Complex64>> {
        let map = self.projection(sigma, tau)?;
        if g.len() != self.level(sigma).dimension() {
            return Err(AlgebraError::Shape("function on the wrong level".into()));
        }
        Ok(map.iter().map(|&i| g[i]).collect())
    }

    /// `T_{σ,τ} = T_{σ,σ+1} ∘ … ∘ T_{τ-1,τ}`.
    pub fn t_op(&self, sigma: usize, tau: usize, g: &[Complex64]) -> Result<Vec<Complex64>> {
        self.check_levels(sigma, tau)?;
        let mut v = g.to_vec();
        for k in (sigma..tau).rev() {
            v = self.stages[k].cole_t(&v)?;
        }
        Ok(v)
    }

    /// Largest sup-norm distance from `T_{σ,τ}(m)` to the span of level σ,
    /// relative to `‖m‖_∞`, over the generator monomials `m` of level τ with
    /// degree ≤ `degree`.
    pub fn t_membership(&self, sigma: usize, tau: usize, degree: usize) -> Result<f64> {
        self.check_levels(sigma, tau)?;
        let top = self.level(tau);
        let gens = function_generators(top)?;
        let span = algebra_span(self.level(sigma))?;
        let mut worst: f64 = 0.0;
        for exps in crate::span::monomial_exponents(gens.len(), degree) {
            let m = crate::span::monomial_values(&gens, &exps, top.dimension());
            let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
            if scale == 0.0 {
                continue;
            }
            let tm = self.t_op(sigma, tau, &m)?;
            let dist = span
                .project(&tm)?
                .iter()
                .zip(&tm)
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max);
            worst = worst.max(dist / scale);
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn interval(n: usize) -> Arc<Algebra> {
        let coords: Vec<Complex64> = (0..n).map(|i| c(i as f64 / (n - 1) as f64)).collect();
        let points = PointSet::from_coords(coords.clone()).unwrap();
        Algebra::sampled(points, vec![NamedFn::new("s", coords)], 4).unwrap()
    }

    fn sqrt_of(alg: &Algebra, var: &str, f: Vec<Complex64>) -> MonicPolynomial {
        MonicPolynomial::new(
            var,
            vec![Element::Values(f.into_iter().map(|z| -z).collect()), alg.zero()],
        )
        .unwrap()
    }

    #[test]
    fn parabola_fibers() {
        let a = interval(2);
        let s = vec![c(0.0), c(1.0)];
        let ext = cole_extend(&a, vec![sqrt_of(&a, "x", s)], None).unwrap();
        let sp = ext.space();
        assert_eq!(sp.len(), 3);
        assert_eq!(sp.fibers()[0].len(), 1);
        assert_eq!(sp.points()[0].multiplicity, 2);
        let mut at_one: Vec<f64> = sp.fibers()[1].iter().map(|&i| sp.points()[i].lambdas[0].re).collect();
        at_one.sort_by(f64::total_cmp);
        assert!((at_one[0] + 1.0).abs() < 1e-14 && (at_one[1] - 1.0).abs() < 1e-14);

        let p = ext.p_alpha(0).unwrap();
        let tp = ext.cole_t(&p).unwrap();
        assert!(tp.iter().all(|z| z.norm() < 1e-15));
        assert_eq!(ext.pi_star(&[c(1.0), c(1.0)]).unwrap(), vec![c(1.0); 3]);
        let id = ext.pi_star(&[c(0.0), c(1.0)]).unwrap();
        assert_eq!(id.iter().map(|z| z.norm()).fold(0.0, f64::max), 1.0);
    }

    #[test]
    fn constant_square_root_doubles_every_point() {
        let a = interval(5);
        let ext = cole_extend(&a, vec![sqrt_of(&a, "x", vec![c(1.0); 5])], None).unwrap();
        assert!(ext.space().fibers().iter().all(|f| f.len() == 2));
        let g = ext.p_alpha(0).unwrap();
        assert!(ext.cole_t(&g).unwrap().iter().all(|z| z.norm() < 1e-15));
    }

    #[test]
    fn empty_set_leaves_algebra_unchanged() {
        let a = interval(4);
        let ext = cole_extend(&a, Vec::new(), None).unwrap();
        assert_eq!(ext.algebra(), &a);
        assert_eq!(ext.space().len(), 4);
    }

    #[test]
    fn unseparated_base_is_rejected() {
        let points = PointSet::from_coords(vec![c(0.0), c(1.0)]).unwrap();
        let a = Algebra::sampled(points, vec![NamedFn::new("k", vec![c(1.0), c(1.0)])], 2).unwrap();
        let err = cole_extend(&a, vec![sqrt_of(&a, "x", vec![c(1.0), c(2.0)])], None);
        assert!(matches!(err, Err(AlgebraError::Construction(_))));
    }

    #[test]
    fn mixed_degrees_bound_fiber_size() {
        let a = interval(6);
        let f: Vec<Complex64> = (0..6).map(|i| c(i as f64 / 5.0)).collect();
        let cubic = MonicPolynomial::new(
            "y",
            vec![Element::Values(f.iter().map(|z| -z).collect()), a.zero(), a.zero()],
        )
        .unwrap();
        let ext = cole_extend(&a, vec![sqrt_of(&a, "x", f.clone()), cubic], None).unwrap();
        assert!(ext.space().fibers().iter().all(|fib| fib.len() <= 6));
        assert_eq!(ext.space().fibers()[0].len(), 1);
        assert_eq!(ext.space().points()[0].multiplicity, 6);
        assert!(ext.root_residuals().unwrap().iter().all(|&r| r <= 1e-8));
    }
}

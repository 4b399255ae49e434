//! Concrete commutative unital normed algebras.
//!
//! Every algebra is a finite chain of extensions over a function algebra on a
//! finite point set: either all functions ([`Algebra::Functions`]) or a
//! sampled uniform algebra given by generators ([`Algebra::Sampled`]).
//! Extensions are Arens–Hoffman quotients `A[x]/(α)` or multivariate
//! quotients `A[x_1,…,x_m]/(α_1,…,α_m)` with weighted ℓ¹ norms.

use std::collections::HashSet;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::arens_hoffman::NormParam;
use crate::character::Character;
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::poly::{char_image_poly, convolve, divide_slice, MonicPolynomial};
use crate::roots::distinct_roots;
use crate::table::{table_mul, Radix};

/// Relative tolerance below which two roots are the same point.
pub const ROOT_TOL: f64 = 1e-8;
/// Condition number above which the multiplication operator is singular.
pub const INVERT_CONDITION_LIMIT: f64 = 1e12;
/// Relative singular-value cutoff for numerical rank.
pub const RANK_TOL: f64 = 1e-9;

/// Labelled sample points, optionally with complex coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet {
    labels: Vec<String>,
    coords: Option<Vec<Complex64>>,
}

impl PointSet {
    pub fn new(labels: Vec<String>, coords: Option<Vec<Complex64>>) -> Result<Self> {
        if labels.is_empty() {
            return Err(AlgebraError::Construction("point set is empty".into()));
        }
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(AlgebraError::Construction(format!("duplicate point label `{l}`")));
            }
        }
        if let Some(c) = &coords {
            if c.len() != labels.len() {
                return Err(AlgebraError::Construction(format!(
                    "{} coordinates for {} points",
                    c.len(),
                    labels.len()
                )));
            }
        }
        Ok(PointSet { labels, coords })
    }

    /// Points `p0, p1, …` at the given coordinates.
    pub fn from_coords(coords: Vec<Complex64>) -> Result<Self> {
        let labels = (0..coords.len()).map(|i| format!("p{i}")).collect();
        PointSet::new(labels, Some(coords))
    }

    /// The one-point space underlying ℂ.
    pub fn singleton() -> Self {
        PointSet {
            labels: vec!["*".into()],
            coords: Some(vec![Complex64::new(0.0, 0.0)]),
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coords(&self) -> Option<&[Complex64]> {
        self.coords.as_deref()
    }
}

/// A named function on the points of a sampled algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedFn {
    pub name: String,
    pub values: Vec<Complex64>,
}

impl NamedFn {
    pub fn new(name: impl Into<String>, values: Vec<Complex64>) -> Self {
        NamedFn {
            name: name.into(),
            values,
        }
    }
}

/// Recursive algebra descriptor.
#[derive(Clone, Debug, PartialEq)]
pub enum Algebra {
    /// All complex functions on the points, sup norm.
    Functions { points: PointSet },
    /// Subalgebra generated by `generators`, sup norm over the samples.
    Sampled {
        points: PointSet,
        generators: Vec<NamedFn>,
        degree_cap: usize,
    },
    /// `base[x]/(alpha)` with norm `Σ ‖b_k‖ t^k`.
    ArensHoffman {
        base: Arc<Algebra>,
        alpha: MonicPolynomial,
        norm: NormParam,
    },
    /// `base[x_1,…,x_m]/(α_1,…,α_m)` with norm `Σ_s ‖q_s‖ Π t_j^{s_j}`.
    Multi {
        base: Arc<Algebra>,
        polys: Vec<(MonicPolynomial, NormParam)>,
    },
}

impl Algebra {
    /// The complex numbers as functions on one point.
    pub fn complex() -> Arc<Algebra> {
        Arc::new(Algebra::Functions {
            points: PointSet::singleton(),
        })
    }

    pub fn functions(points: PointSet) -> Arc<Algebra> {
        Arc::new(Algebra::Functions { points })
    }

    pub fn sampled(
        points: PointSet,
        generators: Vec<NamedFn>,
        degree_cap: usize,
    ) -> Result<Arc<Algebra>> {
        if degree_cap == 0 {
            return Err(AlgebraError::Construction("degree cap must be positive".into()));
        }
        let mut names = HashSet::new();
        for g in &generators {
            if g.values.len() != points.len() {
                return Err(AlgebraError::Shape(format!(
                    "generator `{}` has {} values on {} points",
                    g.name,
                    g.values.len(),
                    points.len()
                )));
            }
            if !names.insert(g.name.as_str()) {
                return Err(AlgebraError::Construction(format!(
                    "duplicate generator name `{}`",
                    g.name
                )));
            }
        }
        Ok(Arc::new(Algebra::Sampled {
            points,
            generators,
            degree_cap,
        }))
    }

    pub fn base(&self) -> Option<&Arc<Algebra>> {
        match self {
            Algebra::ArensHoffman { base, .. } | Algebra::Multi { base, .. } => Some(base),
            _ => None,
        }
    }

    /// The point set at the bottom of the extension chain.
    pub fn root_points(&self) -> &PointSet {
        match self {
            Algebra::Functions { points } | Algebra::Sampled { points, .. } => points,
            Algebra::ArensHoffman { base, .. } | Algebra::Multi { base, .. } => base.root_points(),
        }
    }

    pub fn is_function_algebra(&self) -> bool {
        matches!(self, Algebra::Functions { .. } | Algebra::Sampled { .. })
    }

    /// True when the chain bottoms out in a sampled uniform algebra, where
    /// inversion and dimension refer to the ambient sampled function space.
    pub fn over_sampled(&self) -> bool {
        match self {
            Algebra::Functions { .. } => false,
            Algebra::Sampled { .. } => true,
            Algebra::ArensHoffman { base, .. } | Algebra::Multi { base, .. } => base.over_sampled(),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Algebra::Functions { .. } => "functions",
            Algebra::Sampled { .. } => "sampled-uniform",
            Algebra::ArensHoffman { .. } => "arens-hoffman",
            Algebra::Multi { .. } => "narmania",
        }
    }

    /// Polynomial extents for a multivariate extension.
    pub(crate) fn table_radix(&self) -> Option<Radix> {
        match self {
            Algebra::Multi { polys, .. } => {
                Some(Radix::new(polys.iter().map(|(p, _)| p.degree()).collect()))
            }
            _ => None,
        }
    }

    /// Complex dimension of the (ambient) vector space.
    pub fn dimension(&self) -> usize {
        match self {
            Algebra::Functions { points } | Algebra::Sampled { points, .. } => points.len(),
            Algebra::ArensHoffman { base, alpha, .. } => alpha.degree() * base.dimension(),
            Algebra::Multi { base, polys } => {
                polys.iter().map(|(p, _)| p.degree()).product::<usize>() * base.dimension()
            }
        }
    }

    pub fn zero(&self) -> Element {
        self.scalar(Complex64::new(0.0, 0.0))
    }

    pub fn one(&self) -> Element {
        self.scalar(Complex64::new(1.0, 0.0))
    }

    /// `c · 1`.
    pub fn scalar(&self, c: Complex64) -> Element {
        match self {
            Algebra::Functions { points } | Algebra::Sampled { points, .. } => {
                Element::Values(vec![c; points.len()])
            }
            Algebra::ArensHoffman { base, alpha, .. } => {
                let mut coeffs = vec![base.zero(); alpha.degree()];
                coeffs[0] = base.scalar(c);
                Element::Coeffs(coeffs)
            }
            Algebra::Multi { base, .. } => {
                let len = self.table_radix().map(|r| r.len()).unwrap_or(1);
                let mut table = vec![base.zero(); len];
                table[0] = base.scalar(c);
                Element::Table(table)
            }
        }
    }

    pub fn check_shape(&self, a: &Element) -> Result<()> {
        let ok = match (self, a) {
            (Algebra::Functions { points }, Element::Values(v))
            | (Algebra::Sampled { points, .. }, Element::Values(v)) => v.len() == points.len(),
            (Algebra::ArensHoffman { base, alpha, .. }, Element::Coeffs(c)) => {
                if c.len() != alpha.degree() {
                    false
                } else {
                    return c.iter().try_for_each(|b| base.check_shape(b));
                }
            }
            (Algebra::Multi { base, .. }, Element::Table(c)) => {
                if Some(c.len()) != self.table_radix().map(|r| r.len()) {
                    false
                } else {
                    return c.iter().try_for_each(|b| base.check_shape(b));
                }
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(AlgebraError::Shape(format!(
                "{} is not an element of a {} algebra of dimension {}",
                a.kind(),
                self.kind_name(),
                self.dimension()
            )))
        }
    }

    /// Reduced product.
    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        match (self, a, b) {
            (Algebra::Functions { points }, Element::Values(x), Element::Values(y))
            | (Algebra::Sampled { points, .. }, Element::Values(x), Element::Values(y))
                if x.len() == points.len() && y.len() == points.len() =>
            {
                Ok(Element::Values(x.iter().zip(y).map(|(p, q)| p * q).collect()))
            }
            (Algebra::ArensHoffman { base, alpha, .. }, Element::Coeffs(x), Element::Coeffs(y))
                if x.len() == alpha.degree() && y.len() == alpha.degree() =>
            {
                let product = convolve(base, x, y)?;
                let (_, rem) = divide_slice(base, product, alpha.coeffs())?;
                Ok(Element::Coeffs(rem))
            }
            (Algebra::Multi { base, polys }, Element::Table(x), Element::Table(y)) => {
                self.check_shape(a)?;
                self.check_shape(b)?;
                let refs: Vec<&MonicPolynomial> = polys.iter().map(|(p, _)| p).collect();
                Ok(Element::Table(table_mul(base, &refs, x, y)?))
            }
            _ => {
                self.check_shape(a)?;
                self.check_shape(b)?;
                unreachable!("shape check accepted mismatched operands")
            }
        }
    }

    pub fn pow(&self, a: &Element, k: usize) -> Result<Element> {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a)?;
        }
        Ok(acc)
    }

    /// Algebra norm, evaluated exactly over the recursive structure.
    pub fn norm(&self, a: &Element) -> Result<f64> {
        self.check_shape(a)?;
        Ok(self.norm_unchecked(a))
    }

    fn norm_unchecked(&self, a: &Element) -> f64 {
        match (self, a) {
            (_, Element::Values(v)) => v.iter().map(|z| z.norm()).fold(0.0, f64::max),
            (Algebra::ArensHoffman { base, norm, .. }, Element::Coeffs(c)) => c
                .iter()
                .enumerate()
                .map(|(k, b)| base.norm_unchecked(b) * norm.t.powi(k as i32))
                .sum(),
            (Algebra::Multi { base, polys }, Element::Table(c)) => {
                let radix = self.table_radix().expect("multi radix");
                c.iter()
                    .enumerate()
                    .map(|(i, q)| {
                        let mut w = base.norm_unchecked(q);
                        for (s, (_, np)) in radix.digits(i).into_iter().zip(polys) {
                            w *= np.t.powi(s as i32);
                        }
                        w
                    })
                    .sum()
            }
            _ => unreachable!("norm of mis-shaped element"),
        }
    }

    /// Element with the given canonical-basis coordinates.
    pub fn from_coords(&self, coords: &[Complex64]) -> Result<Element> {
        if coords.len() != self.dimension() {
            return Err(AlgebraError::Shape(format!(
                "{} coordinates for dimension {}",
                coords.len(),
                self.dimension()
            )));
        }
        Ok(match self {
            Algebra::Functions { .. } | Algebra::Sampled { .. } => Element::Values(coords.to_vec()),
            Algebra::ArensHoffman { base, .. } => Element::Coeffs(
                coords
                    .chunks(base.dimension())
                    .map(|c| base.from_coords(c))
                    .collect::<Result<_>>()?,
            ),
            Algebra::Multi { base, .. } => Element::Table(
                coords
                    .chunks(base.dimension())
                    .map(|c| base.from_coords(c))
                    .collect::<Result<_>>()?,
            ),
        })
    }

    /// Canonical basis: point indicators times monomials.
    pub fn basis_element(&self, i: usize) -> Result<Element> {
        let mut coords = vec![Complex64::new(0.0, 0.0); self.dimension()];
        if i >= coords.len() {
            return Err(AlgebraError::Domain(format!("basis index {i} out of range")));
        }
        coords[i] = Complex64::new(1.0, 0.0);
        self.from_coords(&coords)
    }

    pub fn basis(&self) -> Result<Vec<Element>> {
        (0..self.dimension()).map(|i| self.basis_element(i)).collect()
    }

    /// Matrix of `b ↦ a·b` in canonical coordinates.
    pub fn mul_operator(&self, a: &Element) -> Result<DMatrix<Complex64>> {
        let dim = self.dimension();
        let mut m = DMatrix::zeros(dim, dim);
        for i in 0..dim {
            let col = self.mul(a, &self.basis_element(i)?)?.flatten();
            for (r, v) in col.into_iter().enumerate() {
                m[(r, i)] = v;
            }
        }
        Ok(m)
    }

    /// Multiplicative inverse, or [`AlgebraError::NotInvertible`] when the
    /// multiplication operator has condition number above
    /// [`INVERT_CONDITION_LIMIT`].
    pub fn try_invert(&self, a: &Element) -> Result<Element> {
        self.check_shape(a)?;
        if let Element::Values(v) = a {
            let max = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
            let min = v.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
            let condition = if min == 0.0 { f64::INFINITY } else { max / min };
            if condition > INVERT_CONDITION_LIMIT {
                return Err(AlgebraError::NotInvertible { condition });
            }
            return Ok(Element::Values(v.iter().map(|z| z.inv()).collect()));
        }
        let m = self.mul_operator(a)?;
        let sv = m.singular_values();
        let smax = sv.max();
        let smin = sv.min();
        let condition = if smin == 0.0 { f64::INFINITY } else { smax / smin };
        if condition > INVERT_CONDITION_LIMIT {
            return Err(AlgebraError::NotInvertible { condition });
        }
        let rhs = DVector::from_vec(self.one().flatten());
        let sol = m
            .full_piv_lu()
            .solve(&rhs)
            .ok_or_else(|| AlgebraError::Domain("inverse solve failed".into()))?;
        self.from_coords(sol.as_slice())
    }

    /// Enumerate characters. Roots of each character-image polynomial are
    /// clustered with relative tolerance `root_tol` so each distinct root
    /// yields one character.
    pub fn characters_with_tol(&self, root_tol: f64) -> Result<Vec<Character>> {
        match self {
            Algebra::Functions { points } | Algebra::Sampled { points, .. } => {
                Ok((0..points.len()).map(Character::Point).collect())
            }
            Algebra::ArensHoffman { base, alpha, .. } => {
                let mut out = Vec::new();
                for omega in base.characters_with_tol(root_tol)? {
                    let image = char_image_poly(base, alpha, &omega)?;
                    for cluster in distinct_roots(&image, root_tol)? {
                        out.push(Character::Lifted {
                            base: Box::new(omega.clone()),
                            root: cluster.root,
                        });
                    }
                }
                Ok(out)
            }
            Algebra::Multi { base, polys } => {
                let mut out = Vec::new();
                for omega in base.characters_with_tol(root_tol)? {
                    let mut combos: Vec<Vec<Complex64>> = vec![Vec::new()];
                    for (p, _) in polys {
                        let image = char_image_poly(base, p, &omega)?;
                        let roots = distinct_roots(&image, root_tol)?;
                        combos = combos
                            .into_iter()
                            .flat_map(|prefix| {
                                roots.iter().map(move |c| {
                                    let mut v = prefix.clone();
                                    v.push(c.root);
                                    v
                                })
                            })
                            .collect();
                    }
                    out.extend(combos.into_iter().map(|roots| Character::MultiLifted {
                        base: Box::new(omega.clone()),
                        roots,
                    }));
                }
                Ok(out)
            }
        }
    }

    pub fn characters(&self) -> Result<Vec<Character>> {
        self.characters_with_tol(ROOT_TOL)
    }

    /// Values `ω(a)` for every enumerated character, in enumeration order.
    pub fn gelfand_transform(&self, a: &Element) -> Result<Vec<Complex64>> {
        self.gelfand_transform_at(a, &self.characters()?)
    }

    pub fn gelfand_transform_at(&self, a: &Element, chars: &[Character]) -> Result<Vec<Complex64>> {
        self.check_shape(a)?;
        chars.iter().map(|w| w.eval(self, a)).collect()
    }

    /// Characters × canonical basis.
    pub fn gelfand_matrix(&self, chars: &[Character]) -> Result<DMatrix<Complex64>> {
        let dim = self.dimension();
        let mut g = DMatrix::zeros(chars.len(), dim);
        for i in 0..dim {
            let e = self.basis_element(i)?;
            for (r, w) in chars.iter().enumerate() {
                g[(r, i)] = w.eval(self, &e)?;
            }
        }
        Ok(g)
    }

    /// Injectivity of the Gelfand transform via numerical rank.
    pub fn check_top_semisimple(&self) -> Result<SemisimplicityReport> {
        if self.is_function_algebra() {
            let n = self.dimension();
            return Ok(SemisimplicityReport {
                semisimple: true,
                rank: n,
                dimension: n,
                characters: n,
                smallest_relative_singular_value: 1.0,
            });
        }
        let chars = self.characters()?;
        let g = self.gelfand_matrix(&chars)?;
        let sv = g.singular_values();
        let smax = sv.iter().cloned().fold(0.0, f64::max);
        let rank = sv.iter().filter(|&&s| s > RANK_TOL * smax && s > 0.0).count();
        let dimension = self.dimension();
        Ok(SemisimplicityReport {
            semisimple: rank == dimension,
            rank,
            dimension,
            characters: chars.len(),
            smallest_relative_singular_value: if smax > 0.0 && sv.len() >= dimension {
                sv.iter().cloned().fold(f64::INFINITY, f64::min) / smax
            } else {
                0.0
            },
        })
    }
}

/// Outcome of the topological semisimplicity check.
#[derive(Clone, Debug, PartialEq)]
pub struct SemisimplicityReport {
    pub semisimple: bool,
    pub rank: usize,
    pub dimension: usize,
    pub characters: usize,
    pub smallest_relative_singular_value: f64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arens_hoffman::ah_extend;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn ext(coeffs: &[f64], t: Option<f64>) -> Arc<Algebra> {
        let base = Algebra::complex();
        let alpha = MonicPolynomial::new(
            "x",
            coeffs.iter().map(|&a| Element::Values(vec![c(a)])).collect(),
        )
        .unwrap();
        ah_extend(&base, alpha, t).unwrap()
    }

    fn el(values: &[f64]) -> Element {
        Element::Coeffs(values.iter().map(|&v| Element::Values(vec![c(v)])).collect())
    }

    #[test]
    fn pointwise_product() {
        let alg = Algebra::functions(PointSet::from_coords(vec![c(0.0), c(1.0)]).unwrap());
        let a = Element::Values(vec![c(1.0), c(2.0)]);
        let b = Element::Values(vec![c(3.0), c(4.0)]);
        assert_eq!(alg.mul(&a, &b).unwrap(), Element::Values(vec![c(3.0), c(8.0)]));
    }

    #[test]
    fn xbar_squared_reduces_to_one() {
        let alg = ext(&[-1.0, 0.0], Some(1.0));
        let x = el(&[0.0, 1.0]);
        assert_eq!(alg.mul(&x, &x).unwrap(), el(&[1.0, 0.0]));
    }

    #[test]
    fn nilpotent_extension_multiplication() {
        let alg = ext(&[0.0, 0.0], Some(1.0));
        let (a, b, cc, d) = (2.0, 3.0, 5.0, 7.0);
        let p = alg.mul(&el(&[a, b]), &el(&[cc, d])).unwrap();
        assert_eq!(p, el(&[a * cc, a * d + b * cc]));
    }

    #[test]
    fn ah_norm_is_weighted_sum() {
        let alg = ext(&[-1.0, 0.0], Some(1.0));
        assert_eq!(alg.norm(&el(&[3.0, 4.0])).unwrap(), 7.0);
    }

    #[test]
    fn inversion_cases() {
        let alg = Algebra::functions(PointSet::from_coords(vec![c(0.0), c(1.0)]).unwrap());
        let inv = alg.try_invert(&Element::Values(vec![c(2.0), c(4.0)])).unwrap();
        assert_eq!(inv, Element::Values(vec![c(0.5), c(0.25)]));
        assert!(matches!(
            alg.try_invert(&Element::Values(vec![c(2.0), c(0.0)])),
            Err(AlgebraError::NotInvertible { .. })
        ));

        let nil = ext(&[0.0, 0.0], Some(1.0));
        assert!(matches!(
            nil.try_invert(&el(&[0.0, 1.0])),
            Err(AlgebraError::NotInvertible { .. })
        ));

        let unit = ext(&[-1.0, 0.0], Some(1.0));
        let inv = unit.try_invert(&el(&[0.0, 1.0])).unwrap();
        assert!(inv.max_abs_diff(&el(&[0.0, 1.0])).unwrap() < 1e-12);
    }

    #[test]
    fn characters_of_simple_extensions() {
        let two = ext(&[-1.0, 0.0], Some(1.0));
        let mut roots: Vec<f64> = two
            .characters()
            .unwrap()
            .iter()
            .map(|w| w.fiber_coords()[0].re)
            .collect();
        roots.sort_by(f64::total_cmp);
        assert!((roots[0] + 1.0).abs() < 1e-12 && (roots[1] - 1.0).abs() < 1e-12);

        let nil = ext(&[0.0, 0.0], Some(1.0));
        let chars = nil.characters().unwrap();
        assert_eq!(chars.len(), 1);
        assert_eq!(chars[0].fiber_coords()[0], c(0.0));
    }

    #[test]
    fn characters_over_two_points() {
        let base = Algebra::functions(PointSet::from_coords(vec![c(0.0), c(1.0)]).unwrap());
        let f = Element::Values(vec![c(1.0), c(4.0)]);
        let alpha = MonicPolynomial::new("x", vec![f.neg(), base.zero()]).unwrap();
        let alg = ah_extend(&base, alpha, None).unwrap();
        let chars = alg.characters().unwrap();
        assert_eq!(chars.len(), 4);
        let mut seen: Vec<(usize, f64)> = chars
            .iter()
            .map(|w| (w.base_point(), w.fiber_coords()[0].re.round()))
            .collect();
        seen.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(seen, vec![(0, -1.0), (0, 1.0), (1, -2.0), (1, 2.0)]);
    }

    #[test]
    fn gelfand_transform_substitutes_roots() {
        let alg = ext(&[-1.0, 0.0], Some(1.0));
        let chars = alg.characters().unwrap();
        let hat = alg.gelfand_transform(&el(&[3.0, 4.0])).unwrap();
        for (w, v) in chars.iter().zip(hat) {
            let lambda = w.fiber_coords()[0];
            assert!((v - (c(3.0) + c(4.0) * lambda)).norm() < 1e-12);
        }

        let nil = ext(&[0.0, 0.0], Some(1.0));
        assert_eq!(nil.gelfand_transform(&el(&[0.0, 1.0])).unwrap(), vec![c(0.0)]);
    }

    #[test]
    fn semisimplicity_witnesses() {
        let fns = Algebra::functions(
            PointSet::from_coords(vec![c(0.0), c(1.0), c(2.0)]).unwrap(),
        );
        assert!(fns.check_top_semisimple().unwrap().semisimple);

        let nil = ext(&[0.0, 0.0], Some(1.0)).check_top_semisimple().unwrap();
        assert!(!nil.semisimple);
        assert_eq!((nil.dimension, nil.rank), (2, 1));

        assert!(ext(&[-1.0, 0.0], Some(1.0)).check_top_semisimple().unwrap().semisimple);
    }

    #[test]
    fn mis_shaped_operands_error() {
        let alg = ext(&[-1.0, 0.0], Some(1.0));
        let bad = Element::Values(vec![c(1.0)]);
        assert!(matches!(alg.mul(&bad, &bad), Err(AlgebraError::Shape(_))));
        assert!(alg.norm(&el(&[1.0, 2.0, 3.0])).is_err());
    }
}

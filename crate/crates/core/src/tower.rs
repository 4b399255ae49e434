//! Finite towers of extensions.
//!
//! A *standard* extension adjoins the polynomials one at a time, each an
//! Arens–Hoffman extension of the previous stage. A *Narmania* extension
//! adjoins all of them at once as `A[x_1,…,x_m]/(α_1(x_1),…,α_m(x_m))`,
//! storing minimal representatives (degree in `x_j` below `deg α_j`) with
//! norm `Σ_s ‖q_s‖ Π t_j^{s_j}`. For polynomials over the base the two
//! agree up to an isometric isomorphism, which [`compare_standard_narmania`]
//! exhibits on the canonical basis and on random samples.

use std::collections::HashSet;
use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;

use crate::algebra::Algebra;
use crate::arens_hoffman::{
    ah_embed, ah_extend, ah_root, default_norm_param, induced_hom_with_route, validate_norm_param,
    NormParam,
};
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::hom::{Homomorphism, Route};
use crate::poly::MonicPolynomial;
use crate::sample::random_element;
use crate::table::DenseTable;

/// A polynomial together with its norm parameter (`None` = default).
#[derive(Clone, Debug, PartialEq)]
pub struct PolyEntry {
    pub poly: MonicPolynomial,
    pub t: Option<f64>,
}

impl PolyEntry {
    pub fn new(poly: MonicPolynomial, t: Option<f64>) -> Self {
        PolyEntry { poly, t }
    }
}

/// Finite, ordered set of monic polynomials with distinct indeterminates.
/// Order is the well-order used by standard extensions (least first).
#[derive(Clone, Debug, PartialEq)]
pub struct PolySet {
    entries: Vec<PolyEntry>,
}

impl PolySet {
    pub fn new(entries: Vec<PolyEntry>) -> Result<Self> {
        let mut seen = HashSet::new();
        for e in &entries {
            if !seen.insert(e.poly.var().to_string()) {
                return Err(AlgebraError::Construction(format!(
                    "indeterminate `{}` used twice",
                    e.poly.var()
                )));
            }
        }
        Ok(PolySet { entries })
    }

    pub fn entries(&self) -> &[PolyEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Resolve every parameter over `base`, making them explicit.
    pub fn with_resolved_params(&self, base: &Algebra) -> Result<PolySet> {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let np = resolve(base, &e.poly, e.t)?;
                Ok(PolyEntry::new(e.poly.clone(), Some(np.t)))
            })
            .collect::<Result<_>>()?;
        PolySet::new(entries)
    }
}

fn resolve(base: &Algebra, poly: &MonicPolynomial, t: Option<f64>) -> Result<NormParam> {
    match t {
        Some(t) => validate_norm_param(base, poly, t),
        None => default_norm_param(base, poly),
    }
}

/// Iterated Arens–Hoffman extension with its standard roots.
#[derive(Clone, Debug)]
pub struct StandardExtension {
    base: Arc<Algebra>,
    stages: Vec<Arc<Algebra>>,
    vars: Vec<String>,
    roots: Vec<Element>,
}

impl StandardExtension {
    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    /// The whole tower; the base when no polynomial was adjoined.
    pub fn top(&self) -> &Arc<Algebra> {
        self.stages.last().unwrap_or(&self.base)
    }

    pub fn stages(&self) -> &[Arc<Algebra>] {
        &self.stages
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Standard roots `ξ_α`, embedded in the top algebra.
    pub fn roots(&self) -> &[Element] {
        &self.roots
    }

    /// Algebra at `level` (0 = base, k = after k adjunctions).
    pub fn level(&self, level: usize) -> &Arc<Algebra> {
        if level == 0 {
            &self.base
        } else {
            &self.stages[level - 1]
        }
    }

    /// Push an element of `level` up to the top through the embeddings.
    pub fn lift(&self, level: usize, a: &Element) -> Result<Element> {
        lift_through(&self.stages, level, a)
    }

    /// Composite embedding `base → top`.
    pub fn base_embedding(&self) -> Result<Homomorphism> {
        let mut map = Homomorphism::identity(&self.base);
        for stage in &self.stages {
            map = map.compose(Homomorphism::embedding(stage)?)?;
        }
        Ok(map)
    }
}

fn lift_through(stages: &[Arc<Algebra>], level: usize, a: &Element) -> Result<Element> {
    let mut e = a.clone();
    for stage in &stages[level..] {
        e = ah_embed(stage, &e)?;
    }
    Ok(e)
}

/// Adjoin the polynomials of `set` one after another. A polynomial may have
/// coefficients in the base or in any earlier stage; they are embedded into
/// the current stage first.
pub fn standard_extend(base: &Arc<Algebra>, set: &PolySet) -> Result<StandardExtension> {
    let mut stages: Vec<Arc<Algebra>> = Vec::new();
    let mut root_levels = Vec::new();
    for entry in set.entries() {
        let current = stages.last().cloned().unwrap_or_else(|| Arc::clone(base));
        let level = (0..=stages.len())
            .rev()
            .find(|&j| {
                let alg = if j == 0 { base } else { &stages[j - 1] };
                entry.poly.check_over(alg).is_ok()
            })
            .ok_or_else(|| {
                AlgebraError::Shape(format!(
                    "coefficients of `{}` lie in no stage of the tower",
                    entry.poly.var()
                ))
            })?;
        let lifted = entry
            .poly
            .map_coeffs(|a| lift_through(&stages, level, a))?;
        let next = ah_extend(&current, lifted, entry.t)?;
        stages.push(next);
        root_levels.push(stages.len());
    }
    let roots = root_levels
        .iter()
        .map(|&k| lift_through(&stages, k, &ah_root(&stages[k - 1])?))
        .collect::<Result<_>>()?;
    Ok(StandardExtension {
        base: Arc::clone(base),
        stages,
        vars: set.entries().iter().map(|e| e.poly.var().to_string()).collect(),
        roots,
    })
}

/// The unique homomorphism from a standard extension that restricts to
/// `theta` on the base and sends each standard root to the matching `eta`.
pub fn induced_hom_multi(
    ext: &StandardExtension,
    theta: Homomorphism,
    etas: &[Element],
) -> Result<Homomorphism> {
    induced_hom_multi_with_route(ext, theta, etas, Route::Coefficientwise)
}

pub fn induced_hom_multi_with_route(
    ext: &StandardExtension,
    theta: Homomorphism,
    etas: &[Element],
    route: Route,
) -> Result<Homomorphism> {
    if etas.len() != ext.stages.len() {
        return Err(AlgebraError::Domain(format!(
            "{} images for {} standard roots",
            etas.len(),
            ext.stages.len()
        )));
    }
    if theta.domain().as_ref() != ext.base.as_ref() {
        return Err(AlgebraError::Domain("θ is not defined on the base".into()));
    }
    let mut phi = theta;
    for (stage, eta) in ext.stages.iter().zip(etas) {
        phi = induced_hom_with_route(stage, phi, eta.clone(), route)?;
    }
    Ok(phi)
}

/// Sparse multivariate polynomial: `(exponents, coefficient)` terms.
#[derive(Clone, Debug, PartialEq)]
pub struct MultiPoly {
    pub terms: Vec<(Vec<usize>, Element)>,
}

impl MultiPoly {
    pub fn monomial(exponents: Vec<usize>, coeff: Element) -> Self {
        MultiPoly {
            terms: vec![(exponents, coeff)],
        }
    }
}

/// Minimal representative of `q` modulo `polys`, reducing variables in
/// index order.
pub fn multi_reduce(base: &Algebra, q: &MultiPoly, polys: &[MonicPolynomial]) -> Result<Vec<Element>> {
    let order: Vec<usize> = (0..polys.len()).collect();
    multi_reduce_in_order(base, q, polys, &order)
}

/// As [`multi_reduce`] with an explicit variable order.
pub fn multi_reduce_in_order(
    base: &Algebra,
    q: &MultiPoly,
    polys: &[MonicPolynomial],
    order: &[usize],
) -> Result<Vec<Element>> {
    let m = polys.len();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..m).collect::<Vec<_>>() {
        return Err(AlgebraError::Domain("order is not a permutation of the variables".into()));
    }
    let mut dims: Vec<usize> = polys.iter().map(|p| p.degree()).collect();
    for (s, c) in &q.terms {
        if s.len() != m {
            return Err(AlgebraError::Shape(format!(
                "monomial with {} exponents in {m} variables",
                s.len()
            )));
        }
        base.check_shape(c)?;
        for (d, &e) in dims.iter_mut().zip(s) {
            *d = (*d).max(e + 1);
        }
    }
    let mut table = DenseTable::zeros(base, dims);
    for (s, c) in &q.terms {
        let idx = table.radix.index(s);
        table.data[idx] = table.data[idx].add(c)?;
    }
    for &j in order {
        table = table.reduce_var(base, j, &polys[j])?;
    }
    Ok(table.data)
}

/// `A[x_1,…,x_m]/(α_1,…,α_m)` for polynomials over `base`.
pub fn narmania_extend(base: &Arc<Algebra>, set: &PolySet) -> Result<Arc<Algebra>> {
    if set.is_empty() {
        return Err(AlgebraError::Domain(
            "Narmania extension needs at least one polynomial".into(),
        ));
    }
    let polys = set
        .entries()
        .iter()
        .map(|e| {
            e.poly.check_over(base)?;
            Ok((e.poly.clone(), resolve(base, &e.poly, e.t)?))
        })
        .collect::<Result<_>>()?;
    Ok(Arc::new(Algebra::Multi {
        base: Arc::clone(base),
        polys,
    }))
}

fn multi_parts(alg: &Algebra) -> Result<(&Arc<Algebra>, &[(MonicPolynomial, NormParam)])> {
    match alg {
        Algebra::Multi { base, polys } => Ok((base, polys)),
        _ => Err(AlgebraError::Domain(format!(
            "expected a Narmania extension, got {}",
            alg.kind_name()
        ))),
    }
}

/// Class of the indeterminate `x_j`.
pub fn multi_var(alg: &Algebra, j: usize) -> Result<Element> {
    let (base, polys) = multi_parts(alg)?;
    if j >= polys.len() {
        return Err(AlgebraError::Domain(format!("no indeterminate with index {j}")));
    }
    let mut s = vec![0; polys.len()];
    s[j] = 1;
    let plain: Vec<MonicPolynomial> = polys.iter().map(|(p, _)| p.clone()).collect();
    Ok(Element::Table(multi_reduce(
        base,
        &MultiPoly::monomial(s, base.one()),
        &plain,
    )?))
}

/// Index of the indeterminate named `var`.
pub fn var_index(alg: &Algebra, var: &str) -> Result<usize> {
    let (_, polys) = multi_parts(alg)?;
    polys
        .iter()
        .position(|(p, _)| p.var() == var)
        .ok_or_else(|| AlgebraError::Domain(format!("unknown indeterminate `{var}`")))
}

/// The isometric inclusion `A_S → A_T` for `S ⊆ T`. `from` may also be the
/// common base, which plays the role of `A_∅`.
pub fn connecting_embed(from: &Arc<Algebra>, to: &Arc<Algebra>) -> Result<Homomorphism> {
    let (to_base, to_polys) = multi_parts(to)?;
    if from.as_ref() == to_base.as_ref() {
        return Homomorphism::embedding(to);
    }
    let (from_base, from_polys) = multi_parts(from)?;
    if from_base.as_ref() != to_base.as_ref() {
        return Err(AlgebraError::Domain("extensions of different base algebras".into()));
    }
    let positions = from_polys
        .iter()
        .map(|(p, np)| {
            to_polys
                .iter()
                .position(|(q, nq)| q == p && nq.t == np.t)
                .ok_or_else(|| {
                    AlgebraError::Domain(format!(
                        "`{}` (with its norm parameter) is not in the target set",
                        p.var()
                    ))
                })
        })
        .collect::<Result<_>>()?;
    Ok(Homomorphism::connect(from, to, positions))
}

/// Narmania extension by the union of the sets defining `a` and `b`
/// (polynomials of `a` first).
pub fn narmania_union(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<Arc<Algebra>> {
    let (base, pa) = multi_parts(a)?;
    let (base_b, pb) = multi_parts(b)?;
    if base.as_ref() != base_b.as_ref() {
        return Err(AlgebraError::Domain("extensions of different base algebras".into()));
    }
    let mut entries: Vec<PolyEntry> = pa
        .iter()
        .map(|(p, np)| PolyEntry::new(p.clone(), Some(np.t)))
        .collect();
    for (p, np) in pb {
        match pa.iter().find(|(q, _)| q.var() == p.var()) {
            Some((q, nq)) if q == p && nq.t == np.t => {}
            Some(_) => {
                return Err(AlgebraError::Domain(format!(
                    "indeterminate `{}` bound to different polynomials",
                    p.var()
                )))
            }
            None => entries.push(PolyEntry::new(p.clone(), Some(np.t))),
        }
    }
    narmania_extend(base, &PolySet::new(entries)?)
}

/// Whether `a ∈ A_S` and `b ∈ A_T` define the same element of the direct
/// limit, i.e. agree after embedding into `A_{S∪T}`.
pub fn limit_equivalent(
    s_alg: &Arc<Algebra>,
    a: &Element,
    t_alg: &Arc<Algebra>,
    b: &Element,
    tol: f64,
) -> Result<bool> {
    let union = narmania_union(s_alg, t_alg)?;
    let ea = connecting_embed(s_alg, &union)?.apply(a)?;
    let eb = connecting_embed(t_alg, &union)?.apply(b)?;
    Ok(ea.max_abs_diff(&eb)? <= tol)
}

/// Evidence that the standard and Narmania extensions coincide.
#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub dimension: usize,
    pub samples: usize,
    pub basis_norm_discrepancy: f64,
    pub sample_norm_discrepancy: f64,
    pub max_norm_discrepancy: f64,
    pub multiplicative_defect: f64,
    /// The comparison map permutes the canonical bases.
    pub basis_bijective: bool,
}

/// Build both extensions with shared norm parameters, the comparison map
/// `φ: B_U → A_U` from the universal property, and measure it.
pub fn compare_standard_narmania<R: Rng>(
    base: &Arc<Algebra>,
    set: &PolySet,
    samples: usize,
    rng: &mut R,
) -> Result<ComparisonReport> {
    let (_, _, phi) = comparison_map(base, set)?;
    measure_comparison(&phi, samples, rng)
}

/// Standard extension, Narmania extension and the comparison map between them.
pub fn comparison_map(
    base: &Arc<Algebra>,
    set: &PolySet,
) -> Result<(StandardExtension, Arc<Algebra>, Homomorphism)> {
    for e in set.entries() {
        e.poly.check_over(base)?;
    }
    let shared = set.with_resolved_params(base)?;
    let standard = standard_extend(base, &shared)?;
    let narmania = narmania_extend(base, &shared)?;
    let theta = Homomorphism::embedding(&narmania)?;
    let etas = (0..shared.len())
        .map(|j| multi_var(&narmania, j))
        .collect::<Result<Vec<_>>>()?;
    let phi = induced_hom_multi(&standard, theta, &etas)?;
    Ok((standard, narmania, phi))
}

fn measure_comparison<R: Rng>(phi: &Homomorphism, samples: usize, rng: &mut R) -> Result<ComparisonReport> {
    let domain = phi.domain();
    let codomain = phi.codomain();
    let dim = domain.dimension();
    let mut basis_disc: f64 = 0.0;
    let mut hit = vec![false; codomain.dimension()];
    let mut bijective = dim == codomain.dimension();
    for i in 0..dim {
        let e = domain.basis_element(i)?;
        let image = phi.apply(&e)?;
        basis_disc = basis_disc.max((codomain.norm(&image)? - domain.norm(&e)?).abs());
        let coords = image.flatten();
        let support: Vec<usize> = coords
            .iter()
            .enumerate()
            .filter(|(_, z)| z.norm() > 1e-12)
            .map(|(k, _)| k)
            .collect();
        match support.as_slice() {
            [k] if (coords[*k] - Complex64::new(1.0, 0.0)).norm() <= 1e-12 && !hit[*k] => {
                hit[*k] = true
            }
            _ => bijective = false,
        }
    }
    let mut sample_disc: f64 = 0.0;
    let mut mult: f64 = 0.0;
    for _ in 0..samples {
        let u = random_element(domain, rng);
        let v = random_element(domain, rng);
        let fu = phi.apply(&u)?;
        let fv = phi.apply(&v)?;
        sample_disc = sample_disc.max((codomain.norm(&fu)? - domain.norm(&u)?).abs());
        let lhs = phi.apply(&domain.mul(&u, &v)?)?;
        let rhs = codomain.mul(&fu, &fv)?;
        mult = mult.max(codomain.norm(&lhs.sub(&rhs)?)? / (1.0 + codomain.norm(&rhs)?));
    }
    Ok(ComparisonReport {
        dimension: dim,
        samples,
        basis_norm_discrepancy: basis_disc,
        sample_norm_discrepancy: sample_disc,
        max_norm_discrepancy: basis_disc.max(sample_disc),
        multiplicative_defect: mult,
        basis_bijective: bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PointSet;
    use rand::SeedableRng;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn scalar_poly(var: &str, v: &[f64]) -> MonicPolynomial {
        MonicPolynomial::new(var, v.iter().map(|&x| Element::Values(vec![c(x)])).collect()).unwrap()
    }

    fn xy_set() -> PolySet {
        PolySet::new(vec![
            PolyEntry::new(scalar_poly("x", &[-1.0, 0.0]), None),
            PolyEntry::new(scalar_poly("y", &[-2.0, 0.0]), None),
        ])
        .unwrap()
    }

    #[test]
    fn standard_tower_dimensions_and_roots() {
        let cc = Algebra::complex();
        let ext = standard_extend(&cc, &xy_set()).unwrap();
        assert_eq!(ext.top().dimension(), 4);
        assert_eq!(ext.top().norm(&ext.roots()[0]).unwrap(), 1.0);
        assert!((ext.top().norm(&ext.roots()[1]).unwrap() - 2f64.sqrt()).abs() < 1e-12);

        let base = Algebra::functions(PointSet::from_coords(vec![c(0.0), c(1.0)]).unwrap());
        let f = Element::Values(vec![c(1.0), c(4.0)]);
        let set = PolySet::new(vec![PolyEntry::new(
            MonicPolynomial::new("x", vec![f.neg(), base.zero()]).unwrap(),
            None,
        )])
        .unwrap();
        assert_eq!(standard_extend(&base, &set).unwrap().top().dimension(), 4);
    }

    #[test]
    fn later_polynomials_may_use_earlier_roots() {
        // y^2 - x̄ over C[x]/(x^2 - 1)
        let cc = Algebra::complex();
        let first = standard_extend(&cc, &PolySet::new(vec![PolyEntry::new(scalar_poly("x", &[-1.0, 0.0]), None)]).unwrap()).unwrap();
        let stage = first.top();
        let xi = ah_root(stage).unwrap();
        let beta = MonicPolynomial::new("y", vec![xi.neg(), stage.zero()]).unwrap();
        let set = PolySet::new(vec![
            PolyEntry::new(scalar_poly("x", &[-1.0, 0.0]), None),
            PolyEntry::new(beta.clone(), None),
        ])
        .unwrap();
        let ext = standard_extend(&cc, &set).unwrap();
        let top = ext.top();
        let y = &ext.roots()[1];
        let x = &ext.roots()[0];
        assert!(top.mul(y, y).unwrap().max_abs_diff(x).unwrap() < 1e-14);
    }

    #[test]
    fn multi_reduce_examples() {
        let cc = Algebra::complex();
        let one = cc.one();
        let x = scalar_poly("x", &[-1.0, 0.0]);
        let y = scalar_poly("y", &[-2.0, 0.0]);
        let r = multi_reduce(&cc, &MultiPoly::monomial(vec![2], one.clone()), std::slice::from_ref(&x)).unwrap();
        assert_eq!(r, vec![one.clone(), cc.zero()]);

        let polys = [x, y];
        let r = multi_reduce(&cc, &MultiPoly::monomial(vec![1, 1], one.clone()), &polys).unwrap();
        assert_eq!(r[3], one);
        assert!(r[..3].iter().all(Element::is_zero));

        let q = MultiPoly::monomial(vec![2, 2], one.clone());
        let a = multi_reduce_in_order(&cc, &q, &polys, &[0, 1]).unwrap();
        let b = multi_reduce_in_order(&cc, &q, &polys, &[1, 0]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0], cc.scalar(c(2.0)));
    }

    #[test]
    fn narmania_norm_of_product() {
        let cc = Algebra::complex();
        let alg = narmania_extend(&cc, &xy_set()).unwrap();
        assert_eq!(alg.dimension(), 4);
        let xy = alg.mul(&multi_var(&alg, 0).unwrap(), &multi_var(&alg, 1).unwrap()).unwrap();
        assert!((alg.norm(&xy).unwrap() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn nilpotent_table_arithmetic() {
        let cc = Algebra::complex();
        let set = PolySet::new(vec![PolyEntry::new(scalar_poly("x", &[0.0, 0.0]), Some(1.0))]).unwrap();
        let alg = narmania_extend(&cc, &set).unwrap();
        let el = |a: f64, b: f64| Element::Table(vec![cc.scalar(c(a)), cc.scalar(c(b))]);
        assert_eq!(alg.mul(&el(2.0, 3.0), &el(5.0, 7.0)).unwrap(), el(10.0, 14.0 + 15.0));
    }

    #[test]
    fn connecting_maps() {
        let cc = Algebra::complex();
        let s = narmania_extend(
            &cc,
            &PolySet::new(vec![PolyEntry::new(scalar_poly("x", &[-1.0, 0.0]), None)]).unwrap(),
        )
        .unwrap();
        let t = narmania_extend(&cc, &xy_set()).unwrap();
        let nu = connecting_embed(&s, &t).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        for _ in 0..100 {
            let a = random_element(&s, &mut rng);
            assert_eq!(t.norm(&nu.apply(&a).unwrap()).unwrap(), s.norm(&a).unwrap());
        }
        let same = connecting_embed(&t, &t).unwrap();
        let a = random_element(&t, &mut rng);
        assert_eq!(same.apply(&a).unwrap(), a);

        let from_base = connecting_embed(&cc, &t).unwrap();
        assert_eq!(from_base.apply(&cc.one()).unwrap(), t.one());

        assert!(matches!(connecting_embed(&t, &s), Err(AlgebraError::Domain(_))));
    }

    #[test]
    fn direct_limit_equivalence() {
        let cc = Algebra::complex();
        let sx = narmania_extend(
            &cc,
            &PolySet::new(vec![PolyEntry::new(scalar_poly("x", &[-1.0, 0.0]), None)]).unwrap(),
        )
        .unwrap();
        let sy = narmania_extend(
            &cc,
            &PolySet::new(vec![PolyEntry::new(scalar_poly("y", &[-2.0, 0.0]), None)]).unwrap(),
        )
        .unwrap();
        // x^2 in A_{x} and 1 in A_{y} are the same constant
        let x = multi_var(&sx, 0).unwrap();
        let x2 = sx.mul(&x, &x).unwrap();
        assert!(limit_equivalent(&sx, &x2, &sy, &sy.one(), 1e-12).unwrap());
        let y = multi_var(&sy, 0).unwrap();
        assert!(!limit_equivalent(&sx, &x, &sy, &y, 1e-12).unwrap());
    }

    #[test]
    fn comparison_on_two_square_roots() {
        let cc = Algebra::complex();
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let r = compare_standard_narmania(&cc, &xy_set(), 50, &mut rng).unwrap();
        assert!(r.basis_bijective);
        assert_eq!(r.basis_norm_discrepancy, 0.0);
        assert!(r.max_norm_discrepancy <= 1e-10);
        assert!(r.multiplicative_defect <= 1e-9);
    }

    #[test]
    fn singleton_comparison_is_exact() {
        let cc = Algebra::complex();
        let set = PolySet::new(vec![PolyEntry::new(scalar_poly("x", &[-1.0, 2.0, 0.0]), None)]).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(5);
        let r = compare_standard_narmania(&cc, &set, 20, &mut rng).unwrap();
        assert!(r.basis_bijective);
        assert_eq!(r.basis_norm_discrepancy, 0.0);
    }

    #[test]
    fn duplicate_indeterminates_rejected() {
        let e = PolyEntry::new(scalar_poly("x", &[-1.0, 0.0]), None);
        assert!(PolySet::new(vec![e.clone(), e]).is_err());
    }
}

//! Property reports and numeric checks. Every verdict is derived from the
//! evidence stored next to it.

use algext::algebra::{Algebra, RANK_TOL};
use algext::hom::Homomorphism;
use algext::poly::separability;
use algext::span::{algebra_span, span_basis};
use algext::{Complex64, Element, MonicPolynomial, NamedFn};
use serde::{Deserialize, Serialize};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "==")]
    Eq,
}

impl Relation {
    pub fn holds(self, value: f64, threshold: f64) -> bool {
        match self {
            Relation::Le => value <= threshold,
            Relation::Lt => value < threshold,
            Relation::Ge => value >= threshold,
            Relation::Eq => value == threshold,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
            Relation::Eq => "==",
        }
    }
}

/// Keep reals serializable: infinities become `±f64::MAX`.
pub fn finite(x: f64) -> f64 {
    if x.is_nan() {
        f64::MAX
    } else {
        x.clamp(-f64::MAX, f64::MAX)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    pub quantity: String,
    pub value: f64,
    /// Test applied to `value`; informational evidence has none.
    pub test: Option<(Relation, f64)>,
}

impl Evidence {
    pub fn tested(quantity: impl Into<String>, value: f64, relation: Relation, threshold: f64) -> Self {
        Evidence {
            quantity: quantity.into(),
            value: finite(value),
            test: Some((relation, finite(threshold))),
        }
    }

    pub fn info(quantity: impl Into<String>, value: f64) -> Self {
        Evidence {
            quantity: quantity.into(),
            value: finite(value),
            test: None,
        }
    }

    pub fn passes(&self) -> bool {
        self.test.is_none_or(|(r, t)| r.holds(self.value, t))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Holds,
    Fails,
    /// Trivial or vacuous for finite-dimensional algebras on finite samples.
    Degenerate,
    NotApplicable,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Holds => "yes",
            Verdict::Fails => "no",
            Verdict::Degenerate => "degenerate",
            Verdict::NotApplicable => "n/a",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyRow {
    pub property: String,
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
    pub note: String,
}

impl PropertyRow {
    fn tested(property: impl Into<String>, evidence: Vec<Evidence>, note: impl Into<String>) -> Self {
        let verdict = if evidence.iter().all(Evidence::passes) {
            Verdict::Holds
        } else {
            Verdict::Fails
        };
        PropertyRow {
            property: property.into(),
            verdict,
            evidence,
            note: note.into(),
        }
    }

    fn fixed(property: impl Into<String>, verdict: Verdict, evidence: Vec<Evidence>, note: impl Into<String>) -> Self {
        PropertyRow {
            property: property.into(),
            verdict,
            evidence,
            note: note.into(),
        }
    }

    /// Re-derive the verdict from the stored evidence.
    pub fn recheck(&self) -> Verdict {
        match self.verdict {
            Verdict::Holds | Verdict::Fails => {
                if self.evidence.iter().all(Evidence::passes) {
                    Verdict::Holds
                } else {
                    Verdict::Fails
                }
            }
            v => v,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub algebra: String,
    pub kind: String,
    pub dimension: usize,
    pub rows: Vec<PropertyRow>,
}

impl PropertyReport {
    pub fn row(&self, property: &str) -> Option<&PropertyRow> {
        self.rows.iter().find(|r| r.property == property)
    }
}

pub const COMPLETE: &str = "complete";
pub const SEMISIMPLE: &str = "topologically semisimple";
pub const SYMMETRIC: &str = "symmetric";
pub const DENSE_INVERTIBLES: &str = "dense invertible group";
pub const SUP_NORM_CLOSED: &str = "sup-norm closed";
pub const REGULAR_LOCAL: &str = "regular / local";
pub const NON_TRIVIAL: &str = "non-trivial";
pub const SEPARABLE: &str = "separable";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub value: f64,
    pub relation: Relation,
    pub threshold: f64,
    /// Reported but not counted towards the exit status.
    pub informational: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, value: f64, relation: Relation, threshold: f64) -> Self {
        let (value, threshold) = (finite(value), finite(threshold));
        Check {
            name: name.into(),
            passed: relation.holds(value, threshold),
            value,
            relation,
            threshold,
            informational: false,
            detail: String::new(),
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

/// Generating set of an algebra: sampled generators, point indicators,
/// extension roots and embedded base generators.
fn generators(alg: &std::sync::Arc<Algebra>) -> Result<Vec<Element>> {
    Ok(match alg.as_ref() {
        Algebra::Functions { .. } => alg.basis()?,
        Algebra::Sampled { generators, .. } => generators.iter().map(|g| Element::Values(g.values.clone())).collect(),
        Algebra::ArensHoffman { base, .. } | Algebra::Multi { base, .. } => {
            let nu = Homomorphism::embedding(alg)?;
            let mut out: Vec<Element> = generators(base)?.iter().map(|g| nu.apply(g)).collect::<algext::Result<_>>()?;
            match alg.as_ref() {
                Algebra::Multi { polys, .. } => {
                    for j in 0..polys.len() {
                        out.push(algext::tower::multi_var(alg, j)?);
                    }
                }
                _ => out.push(algext::ah_root(alg)?),
            }
            out
        }
    })
}

fn root_function_algebra(alg: &Algebra) -> &Algebra {
    match alg.base() {
        Some(b) => root_function_algebra(b),
        None => alg,
    }
}

fn sup(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Residual of the conjugated Gelfand images of the generators in the
/// span of the Gelfand image.
fn symmetry_residual(alg: &std::sync::Arc<Algebra>) -> Result<f64> {
    if alg.is_function_algebra() {
        let span = algebra_span(alg)?;
        let mut worst: f64 = 0.0;
        for g in generators(alg)? {
            let v = g.flatten();
            let conj: Vec<Complex64> = v.iter().map(|z| z.conj()).collect();
            worst = worst.max(span.membership_residual(&conj)?);
        }
        return Ok(worst);
    }
    let chars = alg.characters()?;
    let images: Vec<NamedFn> = match root_function_algebra(alg) {
        Algebra::Sampled { .. } => generators(alg)?
            .iter()
            .enumerate()
            .map(|(k, g)| Ok(NamedFn::new(format!("g{k}"), alg.gelfand_transform_at(g, &chars)?)))
            .collect::<Result<_>>()?,
        _ => alg
            .basis()?
            .iter()
            .enumerate()
            .map(|(k, e)| Ok(NamedFn::new(format!("e{k}"), alg.gelfand_transform_at(e, &chars)?)))
            .collect::<Result<_>>()?,
    };
    let cap = match root_function_algebra(alg) {
        Algebra::Sampled { degree_cap, .. } => *degree_cap,
        _ => 1,
    };
    let span = span_basis(chars.len(), &images, cap)?;
    let mut worst: f64 = 0.0;
    for g in &images {
        let conj: Vec<Complex64> = g.values.iter().map(|z| z.conj()).collect();
        worst = worst.max(span.membership_residual(&conj)?);
    }
    Ok(worst)
}

/// Ratios `‖â‖_∞ / ‖a‖` over the canonical basis.
fn sup_norm_ratios(alg: &Algebra) -> Result<(f64, f64)> {
    if alg.is_function_algebra() {
        return Ok((1.0, 1.0));
    }
    let chars = alg.characters()?;
    let (mut lo, mut hi) = (f64::INFINITY, 0.0f64);
    for e in alg.basis()? {
        let r = sup(&alg.gelfand_transform_at(&e, &chars)?) / alg.norm(&e)?;
        lo = lo.min(r);
        hi = hi.max(r);
    }
    Ok((lo, hi))
}

/// Defining polynomials of the top extension with their coefficient algebra.
fn defining_polys(alg: &Algebra) -> Vec<(&Algebra, &MonicPolynomial)> {
    match alg {
        Algebra::ArensHoffman { base, alpha, .. } => vec![(base.as_ref(), alpha)],
        Algebra::Multi { base, polys } => polys.iter().map(|(p, _)| (base.as_ref(), p)).collect(),
        _ => Vec::new(),
    }
}

/// Fill every row for `alg`. `tol_check` bounds membership residuals.
pub fn property_report(name: &str, alg: &std::sync::Arc<Algebra>, tol_check: f64) -> Result<PropertyReport> {
    let dimension = alg.dimension();
    let mut rows = Vec::new();
    rows.push(PropertyRow::fixed(
        COMPLETE,
        Verdict::Degenerate,
        vec![Evidence::info("dimension", dimension as f64)],
        "every finite-dimensional normed algebra is complete",
    ));

    let ss = alg.check_top_semisimple()?;
    rows.push(PropertyRow::tested(
        SEMISIMPLE,
        vec![
            Evidence::tested("gelfand rank", ss.rank as f64, Relation::Ge, dimension as f64),
            Evidence::info("characters", ss.characters as f64),
            Evidence::info("smallest relative singular value", ss.smallest_relative_singular_value),
        ],
        format!("numerical rank with relative cutoff {RANK_TOL:e}"),
    ));

    rows.push(PropertyRow::tested(
        SYMMETRIC,
        vec![Evidence::tested(
            "conjugate membership residual",
            symmetry_residual(alg)?,
            Relation::Le,
            tol_check,
        )],
        "conjugated generator images against the Gelfand image span",
    ));

    rows.push(PropertyRow::fixed(
        DENSE_INVERTIBLES,
        Verdict::Degenerate,
        vec![Evidence::info("characters", ss.characters as f64)],
        "invertibles are the complement of finitely many character kernels",
    ));

    let (lo, hi) = sup_norm_ratios(alg)?;
    rows.push(PropertyRow::fixed(
        SUP_NORM_CLOSED,
        Verdict::Degenerate,
        vec![
            Evidence::info("min sup/norm ratio on basis", lo),
            Evidence::info("max sup/norm ratio on basis", hi),
        ],
        "all norms on a finite-dimensional space are equivalent",
    ));

    rows.push(PropertyRow::fixed(
        REGULAR_LOCAL,
        Verdict::Degenerate,
        vec![Evidence::info("characters", ss.characters as f64)],
        "the character space is finite and discrete",
    ));

    if let Algebra::Sampled { points, .. } = alg.as_ref() {
        let span = algebra_span(alg)?;
        rows.push(PropertyRow::tested(
            NON_TRIVIAL,
            vec![Evidence::tested("span rank", span.rank() as f64, Relation::Lt, points.len() as f64)],
            "span rank against sample count",
        ));
    } else {
        rows.push(PropertyRow::fixed(NON_TRIVIAL, Verdict::NotApplicable, Vec::new(), "sampled algebras only"));
    }

    for (base, alpha) in defining_polys(alg) {
        let sep = separability(base, alpha)?;
        rows.push(PropertyRow::tested(
            format!("{SEPARABLE} ({})", alpha.var()),
            vec![Evidence::tested(
                "discriminant condition number",
                sep.condition,
                Relation::Le,
                algext::algebra::INVERT_CONDITION_LIMIT,
            )],
            "discriminant invertible in the coefficient algebra",
        ));
    }

    Ok(PropertyReport {
        algebra: name.to_string(),
        kind: alg.kind_name().to_string(),
        dimension,
        rows,
    })
}

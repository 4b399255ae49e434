use num_complex::Complex64;

use crate::error::{AlgebraError, Result};

/// A value in one of the concrete algebras.
///
/// The variant mirrors the owning [`Algebra`](crate::Algebra): function
/// algebras store one value per point, Arens–Hoffman extensions store the
/// reduced coefficient vector `b_0, …, b_{n-1}` over the base, and
/// multivariate extensions store a dense table of base elements indexed by
/// minimal multi-indices (first indeterminate varies fastest).
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    Values(Vec<Complex64>),
    Coeffs(Vec<Element>),
    Table(Vec<Element>),
}

impl Element {
    /// Zero element with the same shape as `self`.
    pub fn zeros_like(&self) -> Element {
        match self {
            Element::Values(v) => Element::Values(vec![Complex64::new(0.0, 0.0); v.len()]),
            Element::Coeffs(c) => Element::Coeffs(c.iter().map(Element::zeros_like).collect()),
            Element::Table(c) => Element::Table(c.iter().map(Element::zeros_like).collect()),
        }
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.zip_with(other, &|a, b| a + b)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.zip_with(other, &|a, b| a - b)
    }

    pub fn neg(&self) -> Element {
        self.map(&|a| -a)
    }

    pub fn scale(&self, c: Complex64) -> Element {
        self.map(&|a| a * c)
    }

    pub fn conj(&self) -> Element {
        self.map(&|a| a.conj())
    }

    /// True iff every stored scalar is exactly zero.
    pub fn is_zero(&self) -> bool {
        match self {
            Element::Values(v) => v.iter().all(|z| z.re == 0.0 && z.im == 0.0),
            Element::Coeffs(c) | Element::Table(c) => c.iter().all(Element::is_zero),
        }
    }

    /// All scalars in canonical-basis order.
    pub fn flatten(&self) -> Vec<Complex64> {
        let mut out = Vec::new();
        self.flatten_into(&mut out);
        out
    }

    fn flatten_into(&self, out: &mut Vec<Complex64>) {
        match self {
            Element::Values(v) => out.extend_from_slice(v),
            Element::Coeffs(c) | Element::Table(c) => c.iter().for_each(|e| e.flatten_into(out)),
        }
    }

    /// Largest absolute difference between corresponding scalars.
    pub fn max_abs_diff(&self, other: &Element) -> Result<f64> {
        let a = self.flatten();
        let b = other.flatten();
        if a.len() != b.len() || !self.same_shape(other) {
            return Err(AlgebraError::Shape("elements of different shapes".into()));
        }
        Ok(a.iter()
            .zip(&b)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max))
    }

    /// Largest absolute scalar.
    pub fn max_abs(&self) -> f64 {
        self.flatten().iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn same_shape(&self, other: &Element) -> bool {
        match (self, other) {
            (Element::Values(a), Element::Values(b)) => a.len() == b.len(),
            (Element::Coeffs(a), Element::Coeffs(b)) | (Element::Table(a), Element::Table(b)) => {
                a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x.same_shape(y))
            }
            _ => false,
        }
    }

    fn map(&self, f: &dyn Fn(Complex64) -> Complex64) -> Element {
        match self {
            Element::Values(v) => Element::Values(v.iter().map(|&z| f(z)).collect()),
            Element::Coeffs(c) => Element::Coeffs(c.iter().map(|e| e.map(f)).collect()),
            Element::Table(c) => Element::Table(c.iter().map(|e| e.map(f)).collect()),
        }
    }

    fn zip_with(
        &self,
        other: &Element,
        f: &dyn Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Element> {
        match (self, other) {
            (Element::Values(a), Element::Values(b)) if a.len() == b.len() => Ok(Element::Values(
                a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect(),
            )),
            (Element::Coeffs(a), Element::Coeffs(b)) if a.len() == b.len() => Ok(Element::Coeffs(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| x.zip_with(y, f))
                    .collect::<Result<_>>()?,
            )),
            (Element::Table(a), Element::Table(b)) if a.len() == b.len() => Ok(Element::Table(
                a.iter()
                    .zip(b)
                    .map(|(x, y)| x.zip_with(y, f))
                    .collect::<Result<_>>()?,
            )),
            _ => Err(AlgebraError::Shape(format!(
                "cannot combine {} with {}",
                self.kind(),
                other.kind()
            ))),
        }
    }

    pub(crate) fn kind(&self) -> String {
        match self {
            Element::Values(v) => format!("values[{}]", v.len()),
            Element::Coeffs(c) => format!("coeffs[{}]", c.len()),
            Element::Table(c) => format!("table[{}]", c.len()),
        }
    }
}

//! Polynomials with coefficients in a concrete algebra.

use num_complex::Complex64;

use crate::algebra::Algebra;
use crate::character::Character;
use crate::element::Element;
use crate::error::{AlgebraError, Result};

/// `a_0 + a_1 x + … + a_{n-1} x^{n-1} + x^n` over some algebra.
///
/// `var` names the indeterminate; polynomials adjoined together must use
/// distinct names.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicPolynomial {
    var: String,
    coeffs: Vec<Element>,
}

impl MonicPolynomial {
    pub fn new(var: impl Into<String>, coeffs: Vec<Element>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(AlgebraError::Domain("monic polynomial needs degree >= 1".into()));
        }
        if coeffs.iter().any(|c| !c.same_shape(&coeffs[0])) {
            return Err(AlgebraError::Shape("coefficients from different algebras".into()));
        }
        Ok(MonicPolynomial {
            var: var.into(),
            coeffs,
        })
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    /// `a_0, …, a_{n-1}`.
    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    /// Same polynomial with every coefficient mapped (e.g. through a homomorphism).
    pub fn map_coeffs(&self, f: impl Fn(&Element) -> Result<Element>) -> Result<Self> {
        MonicPolynomial::new(
            self.var.clone(),
            self.coeffs.iter().map(f).collect::<Result<_>>()?,
        )
    }

    pub fn check_over(&self, alg: &Algebra) -> Result<()> {
        self.coeffs.iter().try_for_each(|c| alg.check_shape(c))
    }

    /// The polynomial with its leading one made explicit.
    pub fn to_general(&self, alg: &Algebra) -> GeneralPolynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.push(alg.one());
        GeneralPolynomial::new(coeffs)
    }

    /// `α(y) = Σ a_k y^k + y^n` in `alg` (Horner).
    pub fn eval(&self, alg: &Algebra, y: &Element) -> Result<Element> {
        let mut acc = alg.one();
        for a in self.coeffs.iter().rev() {
            acc = alg.mul(&acc, y)?.add(a)?;
        }
        Ok(acc)
    }
}

/// A polynomial with arbitrary leading coefficient; trailing exact zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralPolynomial {
    coeffs: Vec<Element>,
}

impl GeneralPolynomial {
    pub fn new(mut coeffs: Vec<Element>) -> Self {
        while coeffs.last().is_some_and(Element::is_zero) {
            coeffs.pop();
        }
        GeneralPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[Element] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, alg: &Algebra, other: &GeneralPolynomial) -> Result<GeneralPolynomial> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = alg.zero();
        let coeffs = (0..len)
            .map(|k| {
                let a = self.coeffs.get(k).unwrap_or(&zero);
                let b = other.coeffs.get(k).unwrap_or(&zero);
                a.add(b)
            })
            .collect::<Result<_>>()?;
        Ok(GeneralPolynomial::new(coeffs))
    }

    pub fn sub(&self, alg: &Algebra, other: &GeneralPolynomial) -> Result<GeneralPolynomial> {
        let neg = GeneralPolynomial::new(other.coeffs.iter().map(Element::neg).collect());
        self.add(alg, &neg)
    }

    /// Formal derivative.
    pub fn derivative(&self) -> GeneralPolynomial {
        GeneralPolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(Complex64::new(k as f64, 0.0)))
                .collect(),
        )
    }

    pub fn eval(&self, alg: &Algebra, y: &Element) -> Result<Element> {
        let mut acc = alg.zero();
        for a in self.coeffs.iter().rev() {
            acc = alg.mul(&acc, y)?.add(a)?;
        }
        Ok(acc)
    }
}

/// Coefficient convolution `(Σ a_i x^i)(Σ b_j x^j)`.
pub(crate) fn convolve(alg: &Algebra, a: &[Element], b: &[Element]) -> Result<Vec<Element>> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![alg.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].add(&alg.mul(x, y)?)?;
        }
    }
    Ok(out)
}

/// Long division of `coeffs` by the monic polynomial with lower
/// coefficients `alpha`; returns `(quotient, remainder)` with the
/// remainder padded to exactly `deg α` coefficients.
pub(crate) fn divide_slice(
    alg: &Algebra,
    mut coeffs: Vec<Element>,
    alpha: &[Element],
) -> Result<(Vec<Element>, Vec<Element>)> {
    let n = alpha.len();
    let mut quotient = vec![alg.zero(); coeffs.len().saturating_sub(n)];
    for d in (n..coeffs.len()).rev() {
        let lead = std::mem::replace(&mut coeffs[d], alg.zero());
        if lead.is_zero() {
            continue;
        }
        for (k, a) in alpha.iter().enumerate() {
            let idx = d - n + k;
            coeffs[idx] = coeffs[idx].sub(&alg.mul(&lead, a)?)?;
        }
        quotient[d - n] = lead;
    }
    coeffs.truncate(n);
    coeffs.resize(n, alg.zero());
    Ok((quotient, coeffs))
}

pub fn poly_mul(
    alg: &Algebra,
    p: &GeneralPolynomial,
    q: &GeneralPolynomial,
) -> Result<GeneralPolynomial> {
    Ok(GeneralPolynomial::new(convolve(alg, &p.coeffs, &q.coeffs)?))
}

/// `p = α·quotient + remainder` with `deg remainder < deg α`.
#[derive(Clone, Debug, PartialEq)]
pub struct Division {
    pub quotient: GeneralPolynomial,
    pub remainder: GeneralPolynomial,
}

pub fn reduce_mod_monic(
    alg: &Algebra,
    p: &GeneralPolynomial,
    alpha: &MonicPolynomial,
) -> Result<Division> {
    for c in p.coeffs() {
        alg.check_shape(c)?;
    }
    let (q, r) = divide_slice(alg, p.coeffs.clone(), alpha.coeffs())?;
    Ok(Division {
        quotient: GeneralPolynomial::new(q),
        remainder: GeneralPolynomial::new(r),
    })
}

/// Apply a character of `alg` to each coefficient of `alpha`.
pub fn char_image_poly(
    alg: &Algebra,
    alpha: &MonicPolynomial,
    omega: &Character,
) -> Result<Vec<Complex64>> {
    alpha.coeffs().iter().map(|a| omega.eval(alg, a)).collect()
}

/// Determinant over a commutative algebra by the Samuelson–Berkowitz
/// recurrence, which never divides.
pub fn determinant(alg: &Algebra, m: &[Vec<Element>]) -> Result<Element> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::Shape("determinant of a non-square matrix".into()));
    }
    // characteristic polynomial coefficients of the leading r×r block,
    // highest degree first
    let mut poly = vec![alg.one()];
    for r in 0..n {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, …, -R A^{r-1} C
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(alg.one());
        toeplitz.push(m[r][r].neg());
        let mut w: Vec<Element> = (0..r).map(|i| m[i][r].clone()).collect();
        for _ in 0..r {
            let mut dot = alg.zero();
            for (j, wj) in w.iter().enumerate() {
                dot = dot.add(&alg.mul(&m[r][j], wj)?)?;
            }
            toeplitz.push(dot.neg());
            let mut next = Vec::with_capacity(r);
            for i in 0..r {
                let mut s = alg.zero();
                for (j, wj) in w.iter().enumerate() {
                    s = s.add(&alg.mul(&m[i][j], wj)?)?;
                }
                next.push(s);
            }
            w = next;
        }
        let mut updated = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = alg.zero();
            for (j, pj) in poly.iter().enumerate() {
                if i >= j {
                    s = s.add(&alg.mul(&toeplitz[i - j], pj)?)?;
                }
            }
            updated.push(s);
        }
        poly = updated;
    }
    let last = poly.pop().expect("nonempty");
    Ok(if n.is_multiple_of(2) { last } else { last.neg() })
}

/// Sylvester matrix of `p` (degree m) and `q` (degree k): k shifted rows
/// of p's coefficients followed by m shifted rows of q's, highest degree
/// first.
pub fn sylvester_matrix(
    alg: &Algebra,
    p: &GeneralPolynomial,
    q: &GeneralPolynomial,
) -> Result<Vec<Vec<Element>>> {
    let (m, k) = match (p.degree(), q.degree()) {
        (Some(m), Some(k)) => (m, k),
        _ => return Err(AlgebraError::Domain("resultant of a zero polynomial".into())),
    };
    let size = m + k;
    let mut rows = Vec::with_capacity(size);
    let push_shifts = |rows: &mut Vec<Vec<Element>>, poly: &GeneralPolynomial, deg: usize, count: usize| {
        for i in 0..count {
            let mut row = vec![alg.zero(); size];
            for (j, c) in poly.coeffs().iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            debug_assert_eq!(poly.coeffs().len(), deg + 1);
            rows.push(row);
        }
    };
    push_shifts(&mut rows, p, m, k);
    push_shifts(&mut rows, q, k, m);
    Ok(rows)
}

/// `Res(p, q) = det Sylvester(p, q)`; for monic `p` this is `Π q(r)` over
/// the roots `r` of `p`.
pub fn resultant_sylvester(
    alg: &Algebra,
    p: &GeneralPolynomial,
    q: &GeneralPolynomial,
) -> Result<Element> {
    for c in p.coeffs().iter().chain(q.coeffs()) {
        alg.check_shape(c)?;
    }
    let (m, k) = match (p.degree(), q.degree()) {
        (Some(m), Some(k)) => (m, k),
        _ => return Err(AlgebraError::Domain("resultant of a zero polynomial".into())),
    };
    if m + k == 0 {
        return Ok(alg.one());
    }
    determinant(alg, &sylvester_matrix(alg, p, q)?)
}

/// `disc(α) = (-1)^{n(n-1)/2} Res(α, α')`.
pub fn discriminant(alg: &Algebra, alpha: &MonicPolynomial) -> Result<Element> {
    let n = alpha.degree();
    if n < 2 {
        return Err(AlgebraError::Domain(format!(
            "discriminant needs degree >= 2, got {n}"
        )));
    }
    alpha.check_over(alg)?;
    let full = alpha.to_general(alg);
    let res = resultant_sylvester(alg, &full, &full.derivative())?;
    Ok(if (n * (n - 1) / 2).is_multiple_of(2) { res } else { res.neg() })
}

/// `b² - 4c` for `x² + b x + c`.
pub fn quadratic_discriminant(alg: &Algebra, alpha: &MonicPolynomial) -> Result<Element> {
    if alpha.degree() != 2 {
        return Err(AlgebraError::Domain("not a quadratic".into()));
    }
    let c = &alpha.coeffs()[0];
    let b = &alpha.coeffs()[1];
    alg.mul(b, b)?.sub(&c.scale(Complex64::new(4.0, 0.0)))
}

/// Discriminant invertible in the coefficient algebra. Degree one is
/// separable by convention.
pub fn is_separable(alg: &Algebra, alpha: &MonicPolynomial) -> Result<bool> {
    Ok(separability(alg, alpha)?.separable)
}

/// Separability verdict with the discriminant that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Separability {
    pub separable: bool,
    pub discriminant: Option<Element>,
    /// Condition number of multiplication by the discriminant (∞ if singular).
    pub condition: f64,
}

pub fn separability(alg: &Algebra, alpha: &MonicPolynomial) -> Result<Separability> {
    if alpha.degree() == 1 {
        return Ok(Separability {
            separable: true,
            discriminant: None,
            condition: 1.0,
        });
    }
    let disc = discriminant(alg, alpha)?;
    let (separable, condition) = match alg.try_invert(&disc) {
        Ok(_) => (true, multiplication_condition(alg, &disc)?),
        Err(AlgebraError::NotInvertible { condition }) => (false, condition),
        Err(e) => return Err(e),
    };
    Ok(Separability {
        separable,
        discriminant: Some(disc),
        condition,
    })
}

fn multiplication_condition(alg: &Algebra, a: &Element) -> Result<f64> {
    if let Element::Values(v) = a {
        let max = v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let min = v.iter().map(|z| z.norm()).fold(f64::INFINITY, f64::min);
        return Ok(if min == 0.0 { f64::INFINITY } else { max / min });
    }
    let sv = alg.mul_operator(a)?.singular_values();
    let min = sv.min();
    Ok(if min == 0.0 { f64::INFINITY } else { sv.max() / min })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PointSet;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn scalars(v: &[f64]) -> Vec<Element> {
        v.iter().map(|&x| Element::Values(vec![c(x)])).collect()
    }

    fn two_points() -> std::sync::Arc<Algebra> {
        Algebra::functions(PointSet::from_coords(vec![c(0.0), c(1.0)]).unwrap())
    }

    #[test]
    fn product_of_linear_factors() {
        let cc = Algebra::complex();
        let p = GeneralPolynomial::new(scalars(&[1.0, 1.0]));
        let q = GeneralPolynomial::new(scalars(&[1.0, -1.0]));
        let r = poly_mul(&cc, &p, &q).unwrap();
        assert_eq!(r, GeneralPolynomial::new(scalars(&[1.0, 0.0, -1.0])));
    }

    #[test]
    fn product_over_functions() {
        let alg = two_points();
        let f = Element::Values(vec![c(1.0), c(0.0)]);
        let g = Element::Values(vec![c(0.0), c(1.0)]);
        let p = GeneralPolynomial::new(vec![f.clone(), alg.one()]);
        let q = GeneralPolynomial::new(vec![g.clone(), alg.one()]);
        let r = poly_mul(&alg, &p, &q).unwrap();
        assert_eq!(
            r.coeffs(),
            &[Element::Values(vec![c(0.0), c(0.0)]), f.add(&g).unwrap(), alg.one()]
        );
    }

    #[test]
    fn reduction_examples() {
        let cc = Algebra::complex();
        let alpha = MonicPolynomial::new("x", scalars(&[-1.0, 0.0])).unwrap();
        let d = reduce_mod_monic(&cc, &GeneralPolynomial::new(scalars(&[0.0, 0.0, 1.0])), &alpha)
            .unwrap();
        assert_eq!(d.remainder, GeneralPolynomial::new(scalars(&[1.0])));

        let cubic = MonicPolynomial::new("x", scalars(&[-1.0, 2.0, 0.0])).unwrap();
        let d = reduce_mod_monic(&cc, &cubic.to_general(&cc), &cubic).unwrap();
        assert!(d.remainder.is_zero());
        assert_eq!(d.quotient, GeneralPolynomial::new(scalars(&[1.0])));

        let low = GeneralPolynomial::new(scalars(&[3.0, 5.0]));
        assert_eq!(reduce_mod_monic(&cc, &low, &cubic).unwrap().remainder, low);
    }

    #[test]
    fn character_images() {
        let alg = two_points();
        let f = Element::Values(vec![c(1.0), c(4.0)]);
        let alpha = MonicPolynomial::new("x", vec![f.neg(), alg.zero()]).unwrap();
        assert_eq!(
            char_image_poly(&alg, &alpha, &Character::Point(1)).unwrap(),
            vec![c(-4.0), c(0.0)]
        );
        let cc = Algebra::complex();
        let cubic = MonicPolynomial::new("x", scalars(&[-1.0, 2.0, 0.0])).unwrap();
        assert_eq!(
            char_image_poly(&cc, &cubic, &Character::Point(0)).unwrap(),
            vec![c(-1.0), c(2.0), c(0.0)]
        );
    }

    #[test]
    fn resultant_examples() {
        let cc = Algebra::complex();
        let p = GeneralPolynomial::new(scalars(&[-1.0, 0.0, 1.0]));
        let q = GeneralPolynomial::new(scalars(&[0.0, 2.0]));
        assert_eq!(resultant_sylvester(&cc, &p, &q).unwrap(), scalars(&[-4.0])[0]);

        let (a, b) = (3.0, 7.0);
        let p = GeneralPolynomial::new(scalars(&[-a, 1.0]));
        let q = GeneralPolynomial::new(scalars(&[-b, 1.0]));
        assert_eq!(resultant_sylvester(&cc, &p, &q).unwrap(), scalars(&[a - b])[0]);

        let alg = two_points();
        let f = Element::Values(vec![c(1.0), c(4.0)]);
        let p = GeneralPolynomial::new(vec![f.neg(), alg.zero(), alg.one()]);
        let q = GeneralPolynomial::new(vec![alg.zero(), alg.scalar(c(2.0))]);
        assert_eq!(
            resultant_sylvester(&alg, &p, &q).unwrap(),
            Element::Values(vec![c(-4.0), c(-16.0)])
        );
    }

    #[test]
    fn discriminant_examples() {
        let cc = Algebra::complex();
        let nil = MonicPolynomial::new("x", scalars(&[0.0, 0.0])).unwrap();
        assert!(discriminant(&cc, &nil).unwrap().is_zero());
        let q = MonicPolynomial::new("x", scalars(&[1.0, 1.0])).unwrap();
        assert_eq!(discriminant(&cc, &q).unwrap(), scalars(&[-3.0])[0]);
        let lin = MonicPolynomial::new("x", scalars(&[1.0])).unwrap();
        assert!(matches!(discriminant(&cc, &lin), Err(AlgebraError::Domain(_))));
        assert!(is_separable(&cc, &lin).unwrap());
    }

    #[test]
    fn separability_examples() {
        let cc = Algebra::complex();
        let unit = MonicPolynomial::new("x", scalars(&[-1.0, 0.0])).unwrap();
        assert!(is_separable(&cc, &unit).unwrap());
        let nil = MonicPolynomial::new("x", scalars(&[0.0, 0.0])).unwrap();
        assert!(!is_separable(&cc, &nil).unwrap());

        let alg = two_points();
        let f = Element::Values(vec![c(1.0), c(0.0)]);
        let alpha = MonicPolynomial::new("x", vec![f.neg(), alg.zero()]).unwrap();
        assert!(!is_separable(&alg, &alpha).unwrap());
    }

    #[test]
    fn berkowitz_matches_cofactor_expansion() {
        let cc = Algebra::complex();
        let m = [[2.0, -1.0, 0.5], [3.0, 4.0, -2.0], [1.0, 0.0, 5.0]];
        let rows: Vec<Vec<Element>> = m.iter().map(|r| scalars(r)).collect();
        let expected = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        let det = determinant(&cc, &rows).unwrap().flatten()[0];
        assert!((det - c(expected)).norm() < 1e-12);
    }
}

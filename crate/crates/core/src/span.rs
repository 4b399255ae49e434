//! Finite-degree spans of sampled uniform algebras.
//!
//! The closed subalgebra generated by a set of functions is approximated by
//! the linear span of all generator monomials of total degree at most a cap,
//! orthonormalized over the sample points.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::algebra::{Algebra, NamedFn, RANK_TOL};
use crate::error::{AlgebraError, Result};

/// Refuse spans with more monomials than this.
pub const MAX_MONOMIALS: usize = 20_000;

/// Orthonormal basis of the monomial span.
#[derive(Clone, Debug)]
pub struct SpanBasis {
    /// Exponent vectors of the monomials, in generation order.
    pub monomials: Vec<Vec<usize>>,
    /// Sample points × rank, orthonormal columns.
    basis: DMatrix<Complex64>,
}

impl SpanBasis {
    pub fn rank(&self) -> usize {
        self.basis.ncols()
    }

    pub fn points(&self) -> usize {
        self.basis.nrows()
    }

    /// Orthogonal projection of `g` onto the span.
    pub fn project(&self, g: &[Complex64]) -> Result<Vec<Complex64>> {
        if g.len() != self.points() {
            return Err(AlgebraError::Shape(format!(
                "function with {} values on {} points",
                g.len(),
                self.points()
            )));
        }
        let v = DVector::from_column_slice(g);
        let coeffs = self.basis.adjoint() * &v;
        Ok((&self.basis * coeffs).iter().copied().collect())
    }

    /// Sup-norm distance from `g` to its least-squares projection, relative
    /// to `‖g‖_∞` (0 for the zero function).
    pub fn membership_residual(&self, g: &[Complex64]) -> Result<f64> {
        let p = self.project(g)?;
        let scale = g.iter().map(|z| z.norm()).fold(0.0, f64::max);
        if scale == 0.0 {
            return Ok(0.0);
        }
        let dist = g
            .iter()
            .zip(&p)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);
        Ok(dist / scale)
    }
}

/// Exponent vectors in `k` variables with total degree ≤ `cap`, by degree.
pub fn monomial_exponents(k: usize, cap: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![0; k]];
    for deg in 1..=cap {
        let mut current = Vec::new();
        fill(k, deg, &mut vec![0; k], 0, &mut current);
        out.extend(current);
    }
    out
}

fn fill(k: usize, remaining: usize, acc: &mut Vec<usize>, pos: usize, out: &mut Vec<Vec<usize>>) {
    if pos + 1 == k {
        acc[pos] = remaining;
        out.push(acc.clone());
        return;
    }
    if k == 0 {
        return;
    }
    for e in (0..=remaining).rev() {
        acc[pos] = e;
        fill(k, remaining - e, acc, pos + 1, out);
    }
    acc[pos] = 0;
}

/// Values of one monomial on the samples.
pub fn monomial_values(generators: &[NamedFn], exponents: &[usize], points: usize) -> Vec<Complex64> {
    let mut v = vec![Complex64::new(1.0, 0.0); points];
    for (g, &e) in generators.iter().zip(exponents) {
        for _ in 0..e {
            v.iter_mut().zip(&g.values).for_each(|(a, b)| *a *= b);
        }
    }
    v
}

/// Span of generator monomials up to `cap`, orthonormalized by two-pass
/// Gram–Schmidt; columns whose residual falls below [`RANK_TOL`] of their
/// norm are dropped.
pub fn span_basis(points: usize, generators: &[NamedFn], cap: usize) -> Result<SpanBasis> {
    let monomials = monomial_exponents(generators.len(), cap);
    if monomials.len() > MAX_MONOMIALS {
        return Err(AlgebraError::Construction(format!(
            "{} monomials exceed the span limit {MAX_MONOMIALS}; lower the degree cap",
            monomials.len()
        )));
    }
    let mut columns: Vec<DVector<Complex64>> = Vec::new();
    for exps in &monomials {
        if columns.len() == points {
            break;
        }
        let mut v = DVector::from_vec(monomial_values(generators, exps, points));
        let norm0 = v.norm();
        if norm0 == 0.0 {
            continue;
        }
        for _ in 0..2 {
            for q in &columns {
                let proj = q.dotc(&v);
                v.axpy(-proj, q, Complex64::new(1.0, 0.0));
            }
        }
        let norm = v.norm();
        if norm > RANK_TOL * norm0 {
            columns.push(v / Complex64::new(norm, 0.0));
        }
    }
    let basis = if columns.is_empty() {
        DMatrix::zeros(points, 0)
    } else {
        DMatrix::from_columns(&columns)
    };
    Ok(SpanBasis { monomials, basis })
}

/// Span of a function algebra: generator monomials for sampled algebras,
/// everything for full function algebras.
pub fn algebra_span(alg: &Algebra) -> Result<SpanBasis> {
    match alg {
        Algebra::Sampled {
            points,
            generators,
            degree_cap,
        } => span_basis(points.len(), generators, *degree_cap),
        Algebra::Functions { points } => {
            let n = points.len();
            Ok(SpanBasis {
                monomials: Vec::new(),
                basis: DMatrix::identity(n, n),
            })
        }
        _ => Err(AlgebraError::Domain(
            "spans are defined for function algebras only".into(),
        )),
    }
}

/// Least-squares membership of `g` in the sampled algebra `alg`.
pub fn membership_residual(alg: &Algebra, g: &[Complex64]) -> Result<f64> {
    algebra_span(alg)?.membership_residual(g)
}

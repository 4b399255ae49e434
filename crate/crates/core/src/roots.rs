//! Roots of complex monic polynomials.
//!
//! Coefficient slices hold `a_0, …, a_{n-1}` of `a_0 + … + a_{n-1} λ^{n-1} + λ^n`;
//! the leading one is implicit.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{AlgebraError, Result};

/// Iteration cap for Aberth–Ehrlich before falling back to the companion matrix.
pub const ABERTH_MAX_ITER: usize = 200;
/// Residual bound `|p(λ)| ≤ RESIDUAL_TOL · (1 + max |a_k|)` for accepted roots.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// A distinct root and how many computed roots collapsed onto it.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootCluster {
    pub root: Complex64,
    pub multiplicity: usize,
}

/// Evaluate the monic polynomial at `z` (Horner).
pub fn eval_monic(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(1.0, 0.0), |acc, &a| acc * z + a)
}

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(1.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn residual_bound(coeffs: &[Complex64]) -> f64 {
    RESIDUAL_TOL * (1.0 + coeffs.iter().map(|a| a.norm()).fold(0.0, f64::max))
}

/// All `n` roots with multiplicity.
pub fn complex_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    if coeffs.is_empty() {
        return Err(AlgebraError::Domain("polynomial of degree 0 has no roots".into()));
    }
    if coeffs.iter().any(|a| !a.is_finite()) {
        return Err(failure(coeffs));
    }
    // exact zero roots are split off so they come out exactly
    let zeros = coeffs.iter().take_while(|a| a.re == 0.0 && a.im == 0.0).count();
    let reduced = &coeffs[zeros..];
    let mut roots = vec![Complex64::new(0.0, 0.0); zeros];
    match reduced.len() {
        0 => {}
        1 => roots.push(-reduced[0]),
        _ => {
            let found = aberth(reduced)
                .filter(|r| accepted(reduced, r))
                .or_else(|| companion(reduced).filter(|r| accepted(reduced, r)))
                .ok_or_else(|| failure(coeffs))?;
            roots.extend(found);
        }
    }
    Ok(roots)
}

fn accepted(coeffs: &[Complex64], roots: &[Complex64]) -> bool {
    let bound = residual_bound(coeffs);
    roots.len() == coeffs.len() && roots.iter().all(|&z| eval_monic(coeffs, z).norm() <= bound)
}

fn failure(coeffs: &[Complex64]) -> AlgebraError {
    AlgebraError::RootFinding {
        coeffs: coeffs.iter().map(|a| [a.re, a.im]).collect(),
    }
}

fn aberth(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len();
    let center = -coeffs[n - 1] / n as f64;
    // Fujiwara-style radius around the centroid
    let radius = coeffs
        .iter()
        .enumerate()
        .map(|(k, a)| a.norm().powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max)
        .max(1e-3);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            center + Complex64::from_polar(radius, angle)
        })
        .collect();
    for _ in 0..ABERTH_MAX_ITER {
        let mut converged = true;
        for i in 0..n {
            let (p, dp) = eval_with_derivative(coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if !step.is_finite() {
                return None;
            }
            z[i] -= step;
            if step.norm() > 1e-15 * (1.0 + z[i].norm()) {
                converged = false;
            }
        }
        if converged {
            return Some(z);
        }
    }
    // not converged within the cap; the caller still checks residuals
    Some(z)
}

fn companion(coeffs: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len();
    let mut m = DMatrix::<Complex64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    for i in 0..n {
        m[(i, n - 1)] = -coeffs[i];
    }
    let schur = nalgebra::linalg::Schur::try_new(m, 1e-15, 10_000)?;
    let eig = schur.eigenvalues()?;
    Some(eig.iter().copied().collect())
}

/// Distinct roots with multiplicities.
///
/// Roots are first grouped coarsely. A group is one root of multiplicity
/// `m` if its spread is within `tol` (relative), or if its spread is at the
/// level expected from an `m`-fold root in double precision and the
/// polynomial and its first `m-1` derivatives vanish at the group centroid.
/// Groups that fail are re-split with a tighter radius.
pub fn distinct_roots(coeffs: &[Complex64], tol: f64) -> Result<Vec<RootCluster>> {
    let roots = complex_roots(coeffs)?;
    let mut out = Vec::new();
    split(coeffs, &roots, 1e-4, tol, &mut out);
    let bound = residual_bound(coeffs);
    for c in &out {
        if eval_monic(coeffs, c.root).norm() > bound {
            return Err(failure(coeffs));
        }
    }
    Ok(out)
}

fn split(coeffs: &[Complex64], roots: &[Complex64], radius: f64, tol: f64, out: &mut Vec<RootCluster>) {
    for group in group_by_radius(roots, radius) {
        if group.len() == 1 {
            out.push(RootCluster {
                root: group[0],
                multiplicity: 1,
            });
            continue;
        }
        let m = group.len();
        let centroid = group.iter().sum::<Complex64>() / m as f64;
        let scale = centroid.norm().max(1.0);
        let spread = group.iter().map(|z| (z - centroid).norm()).fold(0.0, f64::max) / scale;
        let multiple_root = spread <= 100.0 * f64::EPSILON.powf(1.0 / m as f64)
            && vanishes_to_order(coeffs, centroid, m);
        if spread <= tol || multiple_root {
            out.push(RootCluster {
                root: polish_multiple(coeffs, centroid, m),
                multiplicity: m,
            });
        } else if radius <= tol {
            out.extend(group.iter().map(|&root| RootCluster { root, multiplicity: 1 }));
        } else {
            split(coeffs, &group, (radius / 10.0).max(tol), tol, out);
        }
    }
}

fn group_by_radius(roots: &[Complex64], radius: f64) -> Vec<Vec<Complex64>> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            let scale = roots[i].norm().max(roots[j].norm()).max(1.0);
            if (roots[i] - roots[j]).norm() <= radius * scale {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut groups: Vec<(usize, Vec<Complex64>)> = Vec::new();
    for i in 0..n {
        let r = find(&mut parent, i);
        match groups.iter_mut().find(|(k, _)| *k == r) {
            Some((_, g)) => g.push(roots[i]),
            None => groups.push((r, vec![roots[i]])),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

/// Newton on `p^{(m-1)}`, which has a simple root at an `m`-fold root of `p`.
fn polish_multiple(coeffs: &[Complex64], z: Complex64, m: usize) -> Complex64 {
    let mut d: Vec<Complex64> = coeffs
        .iter()
        .copied()
        .chain(std::iter::once(Complex64::new(1.0, 0.0)))
        .collect();
    for _ in 1..m {
        d = d.iter().enumerate().skip(1).map(|(k, a)| a * k as f64).collect();
    }
    if d.len() < 2 {
        return z;
    }
    let dd: Vec<Complex64> = d.iter().enumerate().skip(1).map(|(k, a)| a * k as f64).collect();
    let horner = |p: &[Complex64], x: Complex64| p.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, a| acc * x + a);
    let mut x = z;
    for _ in 0..8 {
        let slope = horner(&dd, x);
        if slope.norm() == 0.0 {
            break;
        }
        let step = horner(&d, x) / slope;
        if !step.re.is_finite() || !step.im.is_finite() || step.norm() > 1e-3 * x.norm().max(1.0) {
            break;
        }
        x -= step;
        if step.norm() <= f64::EPSILON * x.norm().max(1.0) {
            break;
        }
    }
    if eval_monic(coeffs, x).norm() <= eval_monic(coeffs, z).norm() {
        x
    } else {
        z
    }
}

/// `p^{(j)}(z)` is negligible against its term magnitudes for `j < m`.
fn vanishes_to_order(coeffs: &[Complex64], z: Complex64, m: usize) -> bool {
    let full: Vec<Complex64> = coeffs
        .iter()
        .copied()
        .chain(std::iter::once(Complex64::new(1.0, 0.0)))
        .collect();
    let mut current = full;
    for _ in 0..m {
        let value: Complex64 = current
            .iter()
            .enumerate()
            .map(|(k, a)| a * z.powu(k as u32))
            .sum();
        let magnitude: f64 = current
            .iter()
            .enumerate()
            .map(|(k, a)| a.norm() * z.norm().powi(k as i32))
            .sum();
        if value.norm() > 1e-12 * magnitude.max(f64::MIN_POSITIVE) {
            return false;
        }
        current = current
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * k as f64)
            .collect();
        if current.is_empty() {
            break;
        }
    }
    true
}

//! Dense multi-index tables of base elements, used for multivariate
//! polynomials over an algebra and their per-variable reduction.

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::Result;
use crate::poly::{divide_slice, MonicPolynomial};

/// Mixed-radix layout with the first variable varying fastest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radix {
    dims: Vec<usize>,
    strides: Vec<usize>,
}

impl Radix {
    pub fn new(dims: Vec<usize>) -> Self {
        let mut strides = Vec::with_capacity(dims.len());
        let mut acc = 1;
        for &d in &dims {
            strides.push(acc);
            acc *= d;
        }
        Radix { dims, strides }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.strides).map(|(d, s)| d * s).sum()
    }

    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        self.dims
            .iter()
            .map(|&d| {
                let digit = index % d;
                index /= d;
                digit
            })
            .collect()
    }
}

/// A polynomial in several indeterminates stored densely.
#[derive(Clone, Debug)]
pub(crate) struct DenseTable {
    pub radix: Radix,
    pub data: Vec<Element>,
}

impl DenseTable {
    pub fn zeros(base: &Algebra, dims: Vec<usize>) -> Self {
        let radix = Radix::new(dims);
        let data = vec![base.zero(); radix.len()];
        DenseTable { radix, data }
    }

    /// Reduce the exponent of variable `var` below `deg alpha`, leaving the
    /// extent of that variable exactly `deg alpha`.
    pub fn reduce_var(self, base: &Algebra, var: usize, alpha: &MonicPolynomial) -> Result<Self> {
        let n = alpha.degree();
        let mut dims = self.radix.dims().to_vec();
        let extent = dims[var];
        dims[var] = n;
        let mut out = DenseTable::zeros(base, dims);
        let others: Vec<usize> = (0..self.radix.dims().len()).filter(|&j| j != var).collect();
        let outer: usize = others.iter().map(|&j| self.radix.dims()[j]).product();
        let outer_radix = Radix::new(others.iter().map(|&j| self.radix.dims()[j]).collect());
        let mut digits = vec![0; self.radix.dims().len()];
        for o in 0..outer {
            for (pos, d) in outer_radix.digits(o).into_iter().enumerate() {
                digits[others[pos]] = d;
            }
            let slice: Vec<Element> = (0..extent)
                .map(|k| {
                    digits[var] = k;
                    self.data[self.radix.index(&digits)].clone()
                })
                .collect();
            let (_, rem) = divide_slice(base, slice, alpha.coeffs())?;
            for (k, r) in rem.into_iter().enumerate() {
                digits[var] = k;
                let idx = out.radix.index(&digits);
                out.data[idx] = r;
            }
        }
        Ok(out)
    }
}

/// Product of two minimal tables followed by full reduction.
pub(crate) fn table_mul(
    base: &Algebra,
    polys: &[&MonicPolynomial],
    a: &[Element],
    b: &[Element],
) -> Result<Vec<Element>> {
    let dims: Vec<usize> = polys.iter().map(|p| p.degree()).collect();
    let radix = Radix::new(dims.clone());
    let mut wide = DenseTable::zeros(base, dims.iter().map(|&n| 2 * n - 1).collect());
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let si = radix.digits(i);
        for (k, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let sk = radix.digits(k);
            let sum: Vec<usize> = si.iter().zip(&sk).map(|(p, q)| p + q).collect();
            let idx = wide.radix.index(&sum);
            wide.data[idx] = wide.data[idx].add(&base.mul(x, y)?)?;
        }
    }
    for (j, p) in polys.iter().enumerate() {
        wide = wide.reduce_var(base, j, p)?;
    }
    Ok(wide.data)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radix_round_trip() {
        let r = Radix::new(vec![2, 3, 4]);
        assert_eq!(r.len(), 24);
        for i in 0..r.len() {
            assert_eq!(r.index(&r.digits(i)), i);
        }
        assert_eq!(r.digits(1), vec![1, 0, 0]);
        assert_eq!(r.digits(2), vec![0, 1, 0]);
    }
}

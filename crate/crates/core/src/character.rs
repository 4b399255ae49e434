use num_complex::Complex64;

use crate::algebra::Algebra;
use crate::element::Element;
use crate::error::{AlgebraError, Result};
use crate::table::Radix;

/// A character (nonzero multiplicative functional) of a concrete algebra.
///
/// Characters of an extension are characters of the base together with a
/// root of the character-image of each defining polynomial.
#[derive(Clone, Debug, PartialEq)]
pub enum Character {
    Point(usize),
    Lifted {
        base: Box<Character>,
        root: Complex64,
    },
    MultiLifted {
        base: Box<Character>,
        roots: Vec<Complex64>,
    },
}

impl Character {
    /// `ω(a)`.
    pub fn eval(&self, alg: &Algebra, a: &Element) -> Result<Complex64> {
        match (self, alg, a) {
            (Character::Point(i), Algebra::Functions { .. } | Algebra::Sampled { .. }, Element::Values(v)) => {
                v.get(*i).copied().ok_or_else(|| {
                    AlgebraError::Shape(format!("point index {i} out of range"))
                })
            }
            (Character::Lifted { base, root }, Algebra::ArensHoffman { base: inner, .. }, Element::Coeffs(c)) => {
                let mut acc = Complex64::new(0.0, 0.0);
                for b in c.iter().rev() {
                    acc = acc * root + base.eval(inner, b)?;
                }
                Ok(acc)
            }
            (Character::MultiLifted { base, roots }, Algebra::Multi { base: inner, .. }, Element::Table(c)) => {
                let radix = alg.table_radix().expect("multi radix");
                if roots.len() != radix.dims().len() {
                    return Err(AlgebraError::Shape("character has wrong number of roots".into()));
                }
                eval_table(base, inner, &radix, roots, c)
            }
            _ => Err(AlgebraError::Shape(format!(
                "character does not belong to a {} algebra",
                alg.kind_name()
            ))),
        }
    }

    /// Index of the underlying base point.
    pub fn base_point(&self) -> usize {
        match self {
            Character::Point(i) => *i,
            Character::Lifted { base, .. } | Character::MultiLifted { base, .. } => base.base_point(),
        }
    }

    /// Fiber coordinates from the bottom of the chain upwards.
    pub fn fiber_coords(&self) -> Vec<Complex64> {
        match self {
            Character::Point(_) => Vec::new(),
            Character::Lifted { base, root } => {
                let mut v = base.fiber_coords();
                v.push(*root);
                v
            }
            Character::MultiLifted { base, roots } => {
                let mut v = base.fiber_coords();
                v.extend_from_slice(roots);
                v
            }
        }
    }
}

fn eval_table(
    base: &Character,
    inner: &Algebra,
    radix: &Radix,
    roots: &[Complex64],
    table: &[Element],
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, q) in table.iter().enumerate() {
        let mut term = base.eval(inner, q)?;
        for (s, lambda) in radix.digits(i).into_iter().zip(roots) {
            term *= lambda.powu(s as u32);
        }
        acc += term;
    }
    Ok(acc)
}

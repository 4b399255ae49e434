//! Concrete Banach algebra extensions: Arens–Hoffman extensions, their
//! iterated and multivariate forms, and Cole extensions of sampled uniform
//! algebras.

pub mod algebra;
pub mod arens_hoffman;
pub mod character;
pub mod cole;
pub mod element;
pub mod error;
pub mod hom;
pub mod poly;
pub mod roots;
pub mod sample;
pub mod span;
pub mod table;
pub mod tower;

pub use algebra::{Algebra, NamedFn, PointSet, SemisimplicityReport};
pub use arens_hoffman::{ah_embed, ah_extend, ah_root, induced_hom, NormParam, Provenance};
pub use character::Character;
pub use cole::{cole_extend, cole_space, cole_tower, ColeExtension, ColeSpace, ColeTower, GenExpr, StagePoly};
pub use element::Element;
pub use error::{AlgebraError, Result};
pub use hom::{Homomorphism, Route};
pub use poly::{GeneralPolynomial, MonicPolynomial};
pub use tower::{narmania_extend, standard_extend, PolyEntry, PolySet, StandardExtension};

pub use num_complex::Complex64;

//! Specification-file front end for the `algext` algebras: building,
//! property reports, comparisons and the worked-example gallery.

pub mod error;
pub mod gallery;
pub mod output;
pub mod report;
pub mod spec;
pub mod workspace;

pub use error::{LabError, Result};
pub use output::{Document, Format};
pub use spec::{parse_spec, SpecDocument};
pub use workspace::{Options, Workspace};

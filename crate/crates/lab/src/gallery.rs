//! Worked examples shipped with the binary.

use crate::error::Result;
use crate::output::Document;
use crate::spec::parse_spec;
use crate::workspace::{Options, Workspace};

pub const GALLERY: [(&str, &str); 4] = [
    ("a", include_str!("../gallery/a_parabola.spec")),
    ("b", include_str!("../gallery/b_nilpotent.spec")),
    ("c", include_str!("../gallery/c_comparison.spec")),
    ("d", include_str!("../gallery/d_cole_tower.spec")),
];

/// Run one gallery item; names in its output are prefixed with the item key.
pub fn run_item(key: &str, text: &str, opts: Options) -> Result<Document> {
    let ws = Workspace::build(&parse_spec(text)?, opts, true)?;
    let mut doc = ws.document;
    let prefix = |s: &mut String| *s = format!("{key}:{s}");
    doc.algebras.iter_mut().for_each(|a| {
        prefix(&mut a.name);
        if let Some(b) = &mut a.base {
            prefix(b);
        }
    });
    doc.characters.iter_mut().for_each(|c| prefix(&mut c.algebra));
    doc.reports.iter_mut().for_each(|r| prefix(&mut r.algebra));
    doc.checks.iter_mut().for_each(|c| prefix(&mut c.name));
    Ok(doc)
}

pub fn run_gallery(opts: Options) -> Result<Document> {
    let mut doc = Document::default();
    for (key, text) in GALLERY {
        doc.merge(run_item(key, text, opts)?);
    }
    Ok(doc)
}

use std::path::Path;
use std::process::{Command, Output};

use algext::Complex64;
use algext_lab::gallery::{run_item, GALLERY};
use algext_lab::output::{from_structured, report_table, to_structured};
use algext_lab::report::{property_report, Verdict, COMPLETE, SEMISIMPLE, SYMMETRIC};
use algext_lab::{parse_spec, Document, LabError, Options, Workspace};

const MINIMAL: &str = "\
space pt points 1 list 0
algebra C fnalg pt
poly alpha over C monic 2 coeff 0 -1
extend ah B base C polys alpha
";

const FN3: &str = "\
space P points 3 list 0 1 2
algebra F fnalg P
poly x over F monic 2 coeff 0 -[1,2,3]
extend ah E base F polys x
";

fn workspace(text: &str) -> Workspace {
    Workspace::build(&parse_spec(text).unwrap(), Options::default(), false).unwrap()
}

fn algext(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algext")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn minimal_document_parses() {
    let ws = workspace(MINIMAL);
    assert_eq!(ws.algebra("B").unwrap().alg.dimension(), 2);
}

#[test]
fn undeclared_polynomial_is_named() {
    let err = parse_spec("space pt points 1\nalgebra C fnalg pt\nextend ah B base C polys beta\n").unwrap_err();
    assert!(matches!(err, LabError::Parse { line: 3, .. }), "{err}");
    assert!(err.to_string().contains("beta"), "{err}");
}

#[test]
fn parabola_fiber_over_one() {
    let ws = workspace(GALLERY[0].1);
    let alg = &ws.algebra("B").unwrap().alg;
    let coords = alg.root_points().coords().unwrap();
    let last = coords.len() - 1;
    assert_eq!(coords[last], Complex64::new(1.0, 0.0));
    let label = &alg.root_points().labels()[last];
    let set = ws.characters("B").unwrap();
    let mut lambdas: Vec<f64> = set
        .characters
        .iter()
        .filter(|ch| &ch.point == label)
        .map(|ch| ch.coords[0].re)
        .collect();
    lambdas.sort_by(f64::total_cmp);
    assert_eq!(lambdas.len(), 2);
    assert!((lambdas[0] + 1.0).abs() < 1e-12 && (lambdas[1] - 1.0).abs() < 1e-12);
}

#[test]
fn nilpotent_gallery_item() {
    let (key, text) = GALLERY[1];
    let doc = run_item(key, text, Options::default()).unwrap();
    let report = doc.reports.iter().find(|r| r.algebra.ends_with('N')).unwrap();
    assert_eq!(report.row(SEMISIMPLE).unwrap().verdict, Verdict::Fails);
    assert!(doc.passed());
}

#[test]
fn comparison_gallery_item() {
    let (key, text) = GALLERY[2];
    let doc = run_item(key, text, Options::default()).unwrap();
    let disc = doc.checks.iter().find(|c| c.name.contains("norm discrepancy")).unwrap();
    assert!(disc.value <= 1e-10, "{}", disc.value);
}

#[test]
fn property_report_rows() {
    let ws = workspace("space pt points 1\nalgebra C fnalg pt\npoly x over C monic 2\nextend ah N base C polys x\n");
    let r = property_report("N", &ws.algebra("N").unwrap().alg, 1e-8).unwrap();
    assert_eq!(r.row(SEMISIMPLE).unwrap().verdict, Verdict::Fails);
    let sep = r.rows.iter().find(|row| row.property.starts_with("separable")).unwrap();
    assert_eq!(sep.verdict, Verdict::Fails);
    assert_eq!(r.row(COMPLETE).unwrap().verdict, Verdict::Degenerate);

    let ws = workspace(FN3);
    let r = property_report("E", &ws.algebra("E").unwrap().alg, 1e-8).unwrap();
    assert_eq!(r.row(SEMISIMPLE).unwrap().verdict, Verdict::Holds);
    let sym = r.row(SYMMETRIC).unwrap();
    assert_eq!(sym.verdict, Verdict::Holds);
    assert!(sym.evidence[0].value <= 1e-8);

    let ws = workspace("space P points 5 circle 1\nalgebra F fnalg P\n");
    let r = property_report("F", &ws.algebra("F").unwrap().alg, 1e-8).unwrap();
    assert!(r.rows.iter().all(|row| row.verdict != Verdict::Fails), "{r:?}");
}

#[test]
fn reports_round_trip_and_recheck() {
    let ws = workspace(FN3);
    let reports = vec![
        property_report("F", &ws.algebra("F").unwrap().alg, 1e-8).unwrap(),
        property_report("E", &ws.algebra("E").unwrap().alg, 1e-8).unwrap(),
    ];
    for r in &reports {
        for row in &r.rows {
            assert_eq!(row.recheck(), row.verdict, "{}", row.property);
        }
    }
    let doc = Document {
        reports: reports.clone(),
        ..Document::default()
    };
    let back = from_structured(&to_structured(&doc).unwrap()).unwrap();
    assert_eq!(back.reports, reports);
    let table = report_table(&reports);
    assert!(table.lines().any(|l| l.starts_with(SEMISIMPLE)));
    assert!(table.lines().any(|l| l.starts_with(SYMMETRIC)));
}

#[test]
fn binary_build_report_compare() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.spec", GALLERY[2].1);

    let out = algext(&["build", &path]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("characters of N"));

    let out = algext(&["report", &path, "--algebra", "S", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = from_structured(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(doc.reports.len(), 1);
    assert_eq!(doc.reports[0].dimension, 4);

    let out = algext(&["compare", &path, "--set", "x,y"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("0 failed"));

    let out = algext(&["report", &path, "--algebra", "missing"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tight_tolerance_fails_with_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "c.spec", GALLERY[2].1);
    let out = algext(&["build", &path, "--tol-check=-1"]);
    assert_eq!(out.status.code(), Some(1));
}

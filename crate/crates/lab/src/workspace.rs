//! Building the algebras of a specification document and running its
//! commands.

use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::Arc;

use algext::cole::{cole_extend_with_tol, ColeExtension, ColeTower, DEFAULT_DEGREE_CAP};
use algext::poly::separability;
use algext::sample::random_values;
use algext::tower::{compare_standard_narmania, multi_var, var_index};
use algext::{
    ah_extend, ah_root, narmania_extend, standard_extend, Algebra, AlgebraError, Character, Complex64, Element,
    Homomorphism, MonicPolynomial, NamedFn, PointSet, PolyEntry, PolySet, StandardExtension,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{LabError, Result};
use crate::output::{AlgebraSummary, CharacterPoint, CharacterSet, Document};
use crate::report::{property_report, Check, Relation};
use crate::spec::{AlgebraDef, Command, Expectation, Expr, ExtendKind, GenKind, Layout, SpecDocument, StatementKind};

/// Samples used by the comparison check.
pub const COMPARE_SAMPLES: usize = 100;
/// Random functions used by the Cole identity checks.
pub const COLE_SAMPLES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Options {
    pub seed: u64,
    pub tol_root: f64,
    /// Replaces the default threshold of every tolerance check.
    pub tol_check: Option<f64>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            seed: 0,
            tol_root: algext::algebra::ROOT_TOL,
            tol_check: None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Origin {
    Functions,
    Sampled,
    ArensHoffman,
    Standard(StandardExtension),
    Narmania,
    Cole(ColeExtension),
}

#[derive(Clone, Debug)]
pub struct AlgebraEntry {
    pub name: String,
    pub alg: Arc<Algebra>,
    pub base: Option<String>,
    pub polys: Vec<String>,
    pub origin: Origin,
}

pub struct Workspace {
    opts: Options,
    spaces: HashMap<String, PointSet>,
    algebras: Vec<AlgebraEntry>,
    index: HashMap<String, usize>,
    polys: HashMap<String, (String, MonicPolynomial)>,
    rng: ChaCha8Rng,
    pub document: Document,
}

fn build_err(line: usize) -> impl Fn(AlgebraError) -> LabError {
    move |source| LabError::Build { line, source }
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

pub fn layout_points(count: usize, layout: &Layout) -> Option<Vec<Complex64>> {
    let n = count as f64;
    Some(match layout {
        Layout::Abstract => return None,
        Layout::Circle { radius } => (0..count)
            .map(|k| Complex64::from_polar(*radius, TAU * k as f64 / n))
            .collect(),
        Layout::Interval { a, b } => (0..count)
            .map(|k| {
                if count == 1 {
                    c(*a)
                } else {
                    c(a + (b - a) * k as f64 / (n - 1.0))
                }
            })
            .collect(),
        Layout::Grid => {
            let k = (n.sqrt().round()) as usize;
            let step = |i: usize| if k == 1 { 0.0 } else { -1.0 + 2.0 * i as f64 / (k - 1) as f64 };
            (0..count).map(|i| Complex64::new(step(i % k), step(i / k))).collect()
        }
        Layout::Disk { radius } => {
            let outer = count.div_ceil(2);
            let inner = count - outer;
            let mut v: Vec<Complex64> = (0..outer)
                .map(|k| Complex64::from_polar(*radius, TAU * k as f64 / outer as f64))
                .collect();
            v.extend((0..inner).map(|k| Complex64::from_polar(radius / 2.0, TAU * (k as f64 + 0.5) / inner as f64)));
            v
        }
        Layout::List(v) => v.clone(),
    })
}

fn chain(alg: &Arc<Algebra>) -> Vec<Arc<Algebra>> {
    let mut out = vec![Arc::clone(alg)];
    while let Some(b) = out.last().and_then(|a| a.base()).cloned() {
        out.push(b);
    }
    out
}

/// Embed `e ∈ from` into `to`, which must be an extension chain over `from`.
pub fn lift(e: &Element, from: &Arc<Algebra>, to: &Arc<Algebra>) -> algext::Result<Element> {
    let stages = chain(to);
    let pos = stages
        .iter()
        .position(|a| Arc::ptr_eq(a, from) || a.as_ref() == from.as_ref())
        .ok_or_else(|| AlgebraError::Domain("element does not live below the target algebra".into()))?;
    let mut out = e.clone();
    for k in (0..pos).rev() {
        out = Homomorphism::embedding(&stages[k])?.apply(&out)?;
    }
    Ok(out)
}

fn root_function_algebra(alg: &Arc<Algebra>) -> Arc<Algebra> {
    chain(alg).pop().expect("chain is never empty")
}

impl Workspace {
    pub fn new(opts: Options) -> Self {
        Workspace {
            opts,
            spaces: HashMap::new(),
            algebras: Vec::new(),
            index: HashMap::new(),
            polys: HashMap::new(),
            rng: ChaCha8Rng::seed_from_u64(opts.seed),
            document: Document::default(),
        }
    }

    /// Build every declaration; run commands when `run_commands` is set.
    pub fn build(doc: &SpecDocument, opts: Options, run_commands: bool) -> Result<Self> {
        let mut ws = Workspace::new(opts);
        for st in &doc.statements {
            match &st.kind {
                StatementKind::Command(cmd) => {
                    if run_commands {
                        ws.run(cmd, st.line)?;
                    }
                }
                other => ws.declare(other, st.line)?,
            }
        }
        ws.document.algebras = ws.summaries();
        Ok(ws)
    }

    pub fn algebra(&self, name: &str) -> Result<&AlgebraEntry> {
        self.index
            .get(name)
            .map(|&i| &self.algebras[i])
            .ok_or_else(|| LabError::Unknown {
                kind: "algebra",
                name: name.to_string(),
            })
    }

    pub fn poly(&self, name: &str) -> Result<&(String, MonicPolynomial)> {
        self.polys.get(name).ok_or_else(|| LabError::Unknown {
            kind: "polynomial",
            name: name.to_string(),
        })
    }

    fn tol(&self, default: f64) -> f64 {
        self.opts.tol_check.unwrap_or(default)
    }

    fn push(&mut self, entry: AlgebraEntry) {
        self.index.insert(entry.name.clone(), self.algebras.len());
        self.algebras.push(entry);
    }

    fn declare(&mut self, st: &StatementKind, line: usize) -> Result<()> {
        let err = build_err(line);
        match st {
            StatementKind::Space { name, count, layout } => {
                let points = match layout_points(*count, layout) {
                    Some(coords) => PointSet::from_coords(coords),
                    None => PointSet::new((0..*count).map(|i| format!("p{i}")).collect(), None),
                }
                .map_err(&err)?;
                self.spaces.insert(name.clone(), points);
            }
            StatementKind::Algebra { name, def } => {
                let (alg, origin) = match def {
                    AlgebraDef::Functions { space } => (Algebra::functions(self.spaces[space].clone()), Origin::Functions),
                    AlgebraDef::Sampled { space, gens, degcap } => {
                        let points = self.spaces[space].clone();
                        let values = gens
                            .iter()
                            .map(|g| generator_values(&points, &g.kind).map(|v| NamedFn::new(g.name.clone(), v)))
                            .collect::<algext::Result<Vec<_>>>()
                            .map_err(&err)?;
                        let alg = Algebra::sampled(points, values, degcap.unwrap_or(DEFAULT_DEGREE_CAP)).map_err(&err)?;
                        (alg, Origin::Sampled)
                    }
                };
                self.push(AlgebraEntry {
                    name: name.clone(),
                    alg,
                    base: None,
                    polys: Vec::new(),
                    origin,
                });
            }
            StatementKind::Poly { name, over, degree, coeffs } => {
                let target = Arc::clone(&self.algebra(over)?.alg);
                let mut values = vec![target.zero(); *degree];
                for (k, e) in coeffs {
                    values[*k] = self.eval(e, &target).map_err(&err)?;
                }
                let poly = MonicPolynomial::new(name.clone(), values).map_err(&err)?;
                self.polys.insert(name.clone(), (over.clone(), poly));
            }
            StatementKind::Extend { kind, name, base, polys, t, degcap } => {
                let base_alg = Arc::clone(&self.algebra(base)?.alg);
                let lifted: Vec<MonicPolynomial> = polys
                    .iter()
                    .map(|p| self.poly_over(p, &base_alg))
                    .collect::<algext::Result<_>>()
                    .map_err(&err)?;
                let param = |j: usize| t.as_ref().map(|v| v[j]);
                let (alg, origin) = match kind {
                    ExtendKind::Ah => {
                        let alg = ah_extend(&base_alg, lifted[0].clone(), param(0)).map_err(&err)?;
                        (alg, Origin::ArensHoffman)
                    }
                    ExtendKind::Standard | ExtendKind::Narmania => {
                        let set = PolySet::new(
                            lifted
                                .into_iter()
                                .enumerate()
                                .map(|(j, p)| PolyEntry::new(p, param(j)))
                                .collect(),
                        )
                        .map_err(&err)?;
                        if *kind == ExtendKind::Standard {
                            let ext = standard_extend(&base_alg, &set).map_err(&err)?;
                            (Arc::clone(ext.top()), Origin::Standard(ext))
                        } else {
                            (narmania_extend(&base_alg, &set).map_err(&err)?, Origin::Narmania)
                        }
                    }
                    ExtendKind::Cole => {
                        let ext = cole_extend_with_tol(&base_alg, lifted, *degcap, self.opts.tol_root).map_err(&err)?;
                        (Arc::clone(ext.algebra()), Origin::Cole(ext))
                    }
                };
                self.push(AlgebraEntry {
                    name: name.clone(),
                    alg,
                    base: Some(base.clone()),
                    polys: polys.clone(),
                    origin,
                });
            }
            StatementKind::Command(_) => unreachable!("commands are run separately"),
        }
        Ok(())
    }

    /// Polynomial `name` with coefficients embedded into `target`.
    fn poly_over(&self, name: &str, target: &Arc<Algebra>) -> algext::Result<MonicPolynomial> {
        let (over, p) = self.polys.get(name).expect("validated by the parser");
        let from = &self.index.get(over).map(|&i| &self.algebras[i].alg).expect("validated");
        p.map_coeffs(|a| lift(a, from, target))
    }

    fn eval(&self, e: &Expr, target: &Arc<Algebra>) -> algext::Result<Element> {
        let bottom = root_function_algebra(target);
        let points = bottom.root_points();
        Ok(match e {
            Expr::Num(z) => target.scalar(*z),
            Expr::List(v) => {
                if v.len() != points.len() {
                    return Err(AlgebraError::Shape(format!("{} values on {} points", v.len(), points.len())));
                }
                lift(&Element::Values(v.clone()), &bottom, target)?
            }
            Expr::Ident(name) => {
                let values = match (name.as_str(), bottom.as_ref()) {
                    ("coord", _) => points
                        .coords()
                        .ok_or_else(|| AlgebraError::Domain("points have no coordinates".into()))?
                        .to_vec(),
                    (_, Algebra::Sampled { generators, .. }) => generators
                        .iter()
                        .find(|g| &g.name == name)
                        .ok_or_else(|| AlgebraError::Domain(format!("unknown generator `{name}`")))?
                        .values
                        .clone(),
                    _ => return Err(AlgebraError::Domain(format!("unknown generator `{name}`"))),
                };
                lift(&Element::Values(values), &bottom, target)?
            }
            Expr::Root { ext, var } => {
                let entry = &self.algebras[self.index[ext]];
                let root = match (&entry.origin, var) {
                    (Origin::ArensHoffman, None) => ah_root(&entry.alg)?,
                    (Origin::Standard(se), _) => {
                        let j = match var {
                            Some(v) => se
                                .vars()
                                .iter()
                                .position(|x| x == v)
                                .ok_or_else(|| AlgebraError::Domain(format!("`{ext}` has no variable `{v}`")))?,
                            None if se.vars().len() == 1 => 0,
                            None => return Err(AlgebraError::Domain(format!("name a variable of `{ext}`"))),
                        };
                        se.roots()[j].clone()
                    }
                    (Origin::Narmania, Some(v)) => multi_var(&entry.alg, var_index(&entry.alg, v)?)?,
                    _ => {
                        return Err(AlgebraError::Domain(format!(
                            "`@{ext}` does not name a root; Cole roots are generators"
                        )))
                    }
                };
                lift(&root, &entry.alg, target)?
            }
            Expr::Add(a, b) => self.eval(a, target)?.add(&self.eval(b, target)?)?,
            Expr::Sub(a, b) => self.eval(a, target)?.sub(&self.eval(b, target)?)?,
            Expr::Mul(a, b) => target.mul(&self.eval(a, target)?, &self.eval(b, target)?)?,
            Expr::Neg(a) => self.eval(a, target)?.neg(),
            Expr::Pow(a, k) => target.pow(&self.eval(a, target)?, *k as usize)?,
        })
    }

    fn summaries(&self) -> Vec<AlgebraSummary> {
        self.algebras
            .iter()
            .map(|e| AlgebraSummary {
                name: e.name.clone(),
                kind: e.alg.kind_name().to_string(),
                dimension: e.alg.dimension(),
                base: e.base.clone(),
                polys: e.polys.clone(),
                norm_params: norm_params(&e.alg, &e.origin),
                sample_points: e.alg.root_points().len(),
            })
            .collect()
    }

    pub fn run(&mut self, cmd: &Command, line: usize) -> Result<()> {
        let err = build_err(line);
        match cmd {
            Command::Characters(name) => {
                let set = self.characters(name).map_err(&err)?;
                self.document.characters.push(set);
            }
            Command::Properties(name) => {
                let alg = Arc::clone(&self.algebra(name)?.alg);
                let report = property_report(name, &alg, self.tol(1e-8)).map_err(|e| match e {
                    LabError::Algebra(a) => err(a),
                    other => other,
                })?;
                self.document.reports.push(report);
            }
            Command::Parabola(name) => {
                let checks = self.parabola(name).map_err(&err)?;
                self.document.checks.extend(checks);
            }
            Command::ColeIdentities(name) => {
                let checks = self.cole_identities(name).map_err(&err)?;
                self.document.checks.extend(checks);
            }
            Command::Compare { base, polys } => {
                let checks = self.compare(base, polys).map_err(&err)?;
                self.document.checks.extend(checks);
            }
            Command::Expect(x) => {
                let check = self.expect(x).map_err(&err)?;
                self.document.checks.push(check);
            }
            Command::Gallery => {
                let doc = crate::gallery::run_gallery(self.opts)?;
                self.document.merge(doc);
            }
        }
        Ok(())
    }

    pub fn characters(&self, name: &str) -> algext::Result<CharacterSet> {
        let entry = &self.algebras[self.index[name]];
        let characters = match &entry.origin {
            Origin::Cole(ext) => {
                let labels = entry.alg.root_points().labels();
                ext.space()
                    .points()
                    .iter()
                    .enumerate()
                    .map(|(i, p)| CharacterPoint {
                        point: labels[i].clone(),
                        coords: p.lambdas.clone(),
                        multiplicity: Some(p.multiplicity),
                    })
                    .collect()
            }
            _ => {
                let labels = entry.alg.root_points().labels();
                entry
                    .alg
                    .characters_with_tol(self.opts.tol_root)?
                    .iter()
                    .map(|w: &Character| CharacterPoint {
                        point: labels[w.base_point()].clone(),
                        coords: w.fiber_coords(),
                        multiplicity: None,
                    })
                    .collect()
            }
        };
        let characters: Vec<CharacterPoint> = characters;
        Ok(CharacterSet {
            algebra: name.to_string(),
            count: characters.len(),
            characters,
        })
    }

    /// Characters of an extension by a square root of the coordinate
    /// against the sampled parabola `{(s, λ): λ² = s}`.
    pub fn parabola(&self, name: &str) -> algext::Result<Vec<Check>> {
        let entry = &self.algebras[self.index[name]];
        let alg = &entry.alg;
        if !matches!(alg.as_ref(), Algebra::ArensHoffman { .. }) {
            return Err(AlgebraError::Domain(format!("`{name}` is not an Arens-Hoffman extension")));
        }
        let coords = alg
            .root_points()
            .coords()
            .ok_or_else(|| AlgebraError::Domain("points have no coordinates".into()))?
            .to_vec();
        let chars = alg.characters_with_tol(self.opts.tol_root)?;
        let mut fibers: Vec<Vec<Complex64>> = vec![Vec::new(); coords.len()];
        for w in &chars {
            fibers[w.base_point()].push(*w.fiber_coords().last().expect("lifted character"));
        }
        let (mut residual, mut distance, mut count_mismatch) = (0.0f64, 0.0f64, 0usize);
        for (s, lambdas) in coords.iter().zip(&fibers) {
            let r = s.sqrt();
            let expected: Vec<Complex64> = if r == Complex64::new(0.0, 0.0) { vec![r] } else { vec![r, -r] };
            if expected.len() != lambdas.len() {
                count_mismatch += 1;
            }
            for l in lambdas {
                residual = residual.max((l * l - s).norm());
                distance = distance.max(expected.iter().map(|e| (e - l).norm()).fold(f64::INFINITY, f64::min));
            }
            for e in &expected {
                distance = distance.max(lambdas.iter().map(|l| (e - l).norm()).fold(f64::INFINITY, f64::min));
            }
        }
        let lifts_at_zero = coords.iter().zip(&fibers).filter(|(s, _)| s.norm() == 0.0).map(|(_, f)| f.len()).max();
        Ok(vec![
            Check::new(format!("{name}: parabola residual"), residual, Relation::Le, self.tol(1e-8))
                .with_detail("max |λ² − s| over characters"),
            Check::new(format!("{name}: parabola distance"), distance, Relation::Le, self.tol(1e-8))
                .with_detail("Hausdorff distance to {±√s} per sample"),
            Check::new(format!("{name}: parabola lift counts"), count_mismatch as f64, Relation::Eq, 0.0).with_detail(
                format!(
                    "{} characters on {} samples; lifts at s=0: {}",
                    chars.len(),
                    coords.len(),
                    lifts_at_zero.map_or("none".to_string(), |k| k.to_string())
                ),
            ),
        ])
    }

    fn cole_tower(&self, name: &str) -> algext::Result<ColeTower> {
        let mut stages = Vec::new();
        let mut cur = &self.algebras[self.index[name]];
        while let Origin::Cole(ext) = &cur.origin {
            stages.push(ext.clone());
            let base = cur.base.as_ref().expect("extensions have a base");
            cur = &self.algebras[self.index[base]];
        }
        if stages.is_empty() {
            return Err(AlgebraError::Domain(format!("`{name}` is not a Cole extension")));
        }
        stages.reverse();
        ColeTower::from_stages(Arc::clone(stages[0].base()), stages)
    }

    /// `T∘π* = id`, `T(1) = 1`, contraction, isometry and root identities on
    /// the Cole tower ending at `name`.
    pub fn cole_identities(&mut self, name: &str) -> algext::Result<Vec<Check>> {
        let tower = self.cole_tower(name)?;
        let top = tower.levels() - 1;
        let n0 = tower.level(0).dimension();
        let nk = tower.level(top).dimension();
        let sup = |v: &[Complex64]| v.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let (mut back, mut isometry, mut contraction) = (0.0f64, 0.0f64, f64::NEG_INFINITY);
        for _ in 0..COLE_SAMPLES {
            let g = random_values(n0, &mut self.rng);
            let lifted = tower.pi_star(0, top, &g)?;
            isometry = isometry.max((sup(&lifted) - sup(&g)).abs());
            let t = tower.t_op(0, top, &lifted)?;
            back = back.max(t.iter().zip(&g).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max));
            let h = random_values(nk, &mut self.rng);
            contraction = contraction.max(sup(&tower.t_op(0, top, &h)?) - sup(&h));
        }
        let ones = vec![c(1.0); nk];
        let unit = tower.t_op(0, top, &ones)?.iter().map(|z| (z - c(1.0)).norm()).fold(0.0, f64::max);
        let mut residual = 0.0f64;
        let mut smallest_fiber = usize::MAX;
        let mut weight_defect = 0.0f64;
        for s in tower.stages() {
            residual = s.root_residuals()?.into_iter().fold(residual, f64::max);
            let w = s.space().weights();
            for fib in s.space().fibers() {
                smallest_fiber = smallest_fiber.min(fib.len());
                weight_defect = weight_defect.max((fib.iter().map(|&i| w[i]).sum::<f64>() - 1.0).abs());
            }
        }
        let mut checks = vec![
            Check::new(format!("{name}: T∘π* = id"), back, Relation::Le, self.tol(1e-12))
                .with_detail(format!("{COLE_SAMPLES} random functions, levels 0 to {top}")),
            Check::new(format!("{name}: T(1) = 1"), unit, Relation::Le, 0.0),
            Check::new(format!("{name}: T contraction"), contraction, Relation::Le, self.tol(1e-12))
                .with_detail("max ‖T(g)‖ − ‖g‖"),
            Check::new(format!("{name}: π* isometry"), isometry, Relation::Le, 0.0),
            Check::new(format!("{name}: root identities"), residual, Relation::Le, self.tol(1e-8))
                .with_detail("max |π*(α)(p_α)| over lifted points"),
            Check::new(format!("{name}: fiber weights"), weight_defect, Relation::Le, self.tol(1e-12)),
            Check::new(format!("{name}: π surjective"), smallest_fiber as f64, Relation::Ge, 1.0)
                .with_detail(format!("{n0} base points, {nk} lifted points")),
        ];
        let membership = tower.t_membership(top - 1, top, 2)?;
        checks.push(
            Check::new(format!("{name}: T(A) in base span"), membership, Relation::Le, self.tol(1e-8))
                .with_detail("generator monomials of degree <= 2")
                .informational(),
        );
        let last = &tower.stages()[top - 1];
        let triv = last.triviality()?;
        checks.push(
            Check::new(
                format!("{name}: non-trivial"),
                triv.extension_rank as f64,
                Relation::Lt,
                triv.extension_points as f64,
            )
            .with_detail(format!(
                "base span rank {} of {} points",
                triv.base_rank, triv.base_points
            ))
            .informational(),
        );
        Ok(checks)
    }

    pub fn compare(&mut self, base: &str, polys: &[String]) -> algext::Result<Vec<Check>> {
        let base_alg = Arc::clone(&self.algebras[self.index[base]].alg);
        let entries = polys
            .iter()
            .map(|p| Ok(PolyEntry::new(self.poly_over(p, &base_alg)?, None)))
            .collect::<algext::Result<Vec<_>>>()?;
        let set = PolySet::new(entries)?;
        let r = compare_standard_narmania(&base_alg, &set, COMPARE_SAMPLES, &mut self.rng)?;
        let label = format!("compare {base} {{{}}}", polys.join(","));
        Ok(vec![
            Check::new(format!("{label}: norm discrepancy"), r.max_norm_discrepancy, Relation::Le, self.tol(1e-9))
                .with_detail(format!("dimension {}, basis plus {} samples", r.dimension, r.samples)),
            Check::new(format!("{label}: multiplicative defect"), r.multiplicative_defect, Relation::Le, self.tol(1e-9)),
            Check::new(
                format!("{label}: basis bijection"),
                if r.basis_bijective { 1.0 } else { 0.0 },
                Relation::Eq,
                1.0,
            ),
        ])
    }

    fn expect(&self, x: &Expectation) -> algext::Result<Check> {
        let flag = |b: bool| if b { 1.0 } else { 0.0 };
        Ok(match x {
            Expectation::Semisimple(name, want) => {
                let r = self.algebras[self.index[name]].alg.check_top_semisimple()?;
                Check::new(format!("{name}: semisimple"), flag(r.semisimple), Relation::Eq, flag(*want))
                    .with_detail(format!("gelfand rank {} of dimension {}", r.rank, r.dimension))
            }
            Expectation::Separable(name, want) => {
                let alg = &self.algebras[self.index[name]].alg;
                let polys: Vec<(&Algebra, &MonicPolynomial)> = match alg.as_ref() {
                    Algebra::ArensHoffman { base, alpha, .. } => vec![(base.as_ref(), alpha)],
                    Algebra::Multi { base, polys } => polys.iter().map(|(p, _)| (base.as_ref(), p)).collect(),
                    _ => return Err(AlgebraError::Domain(format!("`{name}` has no defining polynomials"))),
                };
                let mut worst = 0.0f64;
                let mut all = true;
                for (b, p) in polys {
                    let s = separability(b, p)?;
                    all &= s.separable;
                    worst = worst.max(s.condition);
                }
                Check::new(format!("{name}: separable"), flag(all), Relation::Eq, flag(*want))
                    .with_detail(format!("worst discriminant condition {worst:.3e}"))
            }
            Expectation::Characters(name, n) => {
                let count = self.algebras[self.index[name]].alg.characters_with_tol(self.opts.tol_root)?.len();
                Check::new(format!("{name}: character count"), count as f64, Relation::Eq, *n as f64)
            }
        })
    }
}

fn generator_values(points: &PointSet, kind: &GenKind) -> algext::Result<Vec<Complex64>> {
    let coords = || {
        points
            .coords()
            .ok_or_else(|| AlgebraError::Domain("points have no coordinates".into()))
    };
    Ok(match kind {
        GenKind::Const(z) => vec![*z; points.len()],
        GenKind::Coord(k) => coords()?.iter().map(|z| z.powu(*k)).collect(),
        GenKind::Hinge(h) => coords()?.iter().map(|z| c((z.re - h).max(0.0))).collect(),
        GenKind::Values(v) => {
            if v.len() != points.len() {
                return Err(AlgebraError::Shape(format!("{} values on {} points", v.len(), points.len())));
            }
            v.clone()
        }
    })
}

fn norm_params(alg: &Algebra, origin: &Origin) -> Vec<f64> {
    match (alg, origin) {
        (_, Origin::Standard(se)) => se
            .stages()
            .iter()
            .filter_map(|s| match s.as_ref() {
                Algebra::ArensHoffman { norm, .. } => Some(norm.t),
                _ => None,
            })
            .collect(),
        (Algebra::ArensHoffman { norm, .. }, _) => vec![norm.t],
        (Algebra::Multi { polys, .. }, _) => polys.iter().map(|(_, n)| n.t).collect(),
        _ => Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::parse_spec;

    fn build(text: &str) -> Workspace {
        Workspace::build(&parse_spec(text).unwrap(), Options::default(), true).unwrap()
    }

    #[test]
    fn layouts() {
        let disk = layout_points(5, &Layout::Disk { radius: 1.0 }).unwrap();
        assert_eq!(disk.len(), 5);
        assert!(disk[..3].iter().all(|z| (z.norm() - 1.0).abs() < 1e-15));
        assert!(disk[3..].iter().all(|z| (z.norm() - 0.5).abs() < 1e-15));
        let grid = layout_points(9, &Layout::Grid).unwrap();
        assert_eq!(grid[4], Complex64::new(0.0, 0.0));
        let iv = layout_points(3, &Layout::Interval { a: 0.0, b: 1.0 }).unwrap();
        assert_eq!(iv, vec![c(0.0), c(0.5), c(1.0)]);
    }

    #[test]
    fn roots_can_seed_later_polynomials() {
        let ws = build(
            "space p points 1\nalgebra C fnalg p\npoly x over C monic 2 coeff 0 -2\nextend ah B base C polys x\n\
             poly y over B monic 2 coeff 0 -@B\nextend ah D base B polys y\n",
        );
        let d = &ws.algebra("D").unwrap().alg;
        assert_eq!(d.dimension(), 4);
        assert_eq!(d.characters().unwrap().len(), 4);
    }

    #[test]
    fn coefficients_lift_from_lower_algebras() {
        let ws = build(
            "space p points 2 list 1 2\nalgebra F fnalg p\npoly x over F monic 2 coeff 0 -coord\n\
             extend ah B base F polys x\npoly y over F monic 2 coeff 0 -3\nextend ah D base B polys y\n",
        );
        assert_eq!(ws.algebra("D").unwrap().alg.dimension(), 8);
    }

    #[test]
    fn standard_and_narmania_agree_on_dimension() {
        let ws = build(
            "space p points 1\nalgebra C fnalg p\npoly x over C monic 2 coeff 0 -1\npoly y over C monic 3 coeff 0 -2\n\
             extend standard S base C polys x y\nextend narmania N base C polys x y t 1 1.5\n",
        );
        assert_eq!(ws.algebra("S").unwrap().alg.dimension(), 6);
        assert_eq!(ws.algebra("N").unwrap().alg.dimension(), 6);
        assert_eq!(ws.document.algebras[2].norm_params, vec![1.0, 1.5]);
    }

    #[test]
    fn bad_norm_parameter_is_a_build_error() {
        let doc = parse_spec("space p points 1\nalgebra C fnalg p\npoly x over C monic 2 coeff 0 -4\nextend ah B base C polys x t 1\n")
            .unwrap();
        let err = Workspace::build(&doc, Options::default(), true).err().unwrap();
        assert!(matches!(err, LabError::Build { line: 4, .. }), "{err}");
    }
}

use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Map, Value};

use t0kit::b_topology::{b_closure, is_b_closed};
use t0kit::caps::caps;
use t0kit::constructions::{equalizer, equalizer_maps_for_bclosed, induced, product};
use t0kit::enumerate::{all_spaces, all_spaces_up_to};
use t0kit::properties::{recheck_witness, Property, PropertyReport, Witness};
use t0kit::reflection_lab::{
    connecting_homeomorphism, is_reflection, k_closure, k_closure_inclusion, predicate, registry, sobrify_bclosure,
    sobrify_irr, ReflectionResult,
};
use t0kit::symbolic::catalog::{catalog, truncate, truncate_johnstone, CATALOG_NAMES};
use t0kit::symbolic::certificate::VerdictKind;
use t0kit::symbolic::corpus::run_corpus;
use t0kit::{FiniteSpace, PointSet};

use crate::dot::hasse_dot;
use crate::dsl::{default_names, parse_document, print_space, Document, SpaceDocument};
use crate::error::{CliError, CliResult};
use crate::filter;
use crate::report::{Format, Report};

/// Process exit status on success.
pub const EXIT_OK: i32 = 0;
/// A checked property or claimed universal property fails.
pub const EXIT_REFUTED: i32 = 1;

pub struct Ctx {
    pub format: Format,
    pub timings: bool,
    start: Instant,
    steps: Vec<(String, f64)>,
}

impl Ctx {
    pub fn new(format: Format, timings: bool) -> Ctx {
        Ctx {
            format,
            timings,
            start: Instant::now(),
            steps: Vec::new(),
        }
    }

    fn timed<T>(&mut self, step: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        self.steps.push((step.to_string(), t.elapsed().as_secs_f64() * 1e3));
        out
    }

    fn report(&self, command: &str) -> Report {
        Report::new(command, caps())
    }

    /// Attaches the outcome and, if asked for, timings; returns the text to
    /// print and the exit code.
    fn finish(&self, mut report: Report, holds: bool) -> (String, i32) {
        report.set("outcome", if holds { "holds" } else { "refuted" });
        if self.timings {
            let mut t = Map::new();
            for (k, ms) in &self.steps {
                t.insert(format!("{k}_ms"), json!(round_ms(*ms)));
            }
            t.insert(
                "total_ms".into(),
                json!(round_ms(self.start.elapsed().as_secs_f64() * 1e3)),
            );
            report.set("timings", Value::Object(t));
        }
        (report.render(self.format), if holds { EXIT_OK } else { EXIT_REFUTED })
    }
}

fn round_ms(ms: f64) -> f64 {
    (ms * 1000.0).round() / 1000.0
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> CliResult<Document> {
    parse_document(&path.display().to_string(), &read(path)?)
}

/// `FILE` selects the first space of the file, `FILE:NAME` a named one.
fn load_space(input: &str) -> CliResult<SpaceDocument> {
    let (path, name) = match input.rsplit_once(':') {
        Some((p, n)) if !Path::new(input).exists() => (p, Some(n)),
        _ => (input, None),
    };
    let doc = load(Path::new(path))?;
    pick(doc, name, path)
}

fn pick(doc: Document, name: Option<&str>, path: &str) -> CliResult<SpaceDocument> {
    match name {
        None => Ok(doc.spaces.into_iter().next().expect("parser rejects empty documents")),
        Some(n) => doc
            .spaces
            .into_iter()
            .find(|s| s.name == n)
            .ok_or_else(|| CliError::Usage(format!("{path} has no space `{n}`"))),
    }
}

fn names_of(labels: &[String], set: &PointSet) -> Value {
    json!(set.iter().map(|i| labels[i].clone()).collect::<Vec<_>>())
}

fn resolve_points(doc: &SpaceDocument, names: &[String]) -> CliResult<PointSet> {
    let mut set = doc.space.empty_set();
    for n in names {
        let i = doc
            .point_index(n)
            .ok_or_else(|| CliError::Usage(format!("`{n}` is not a point of `{}`", doc.name)))?;
        set.insert(i);
    }
    Ok(set)
}

fn space_summary(name: &str, labels: &[String], x: &FiniteSpace) -> CliResult<Value> {
    let covers: Vec<String> = x
        .covers()
        .into_iter()
        .map(|(a, b)| format!("{} < {}", labels[a], labels[b]))
        .collect();
    Ok(json!({
        "name": name,
        "points": labels,
        "opens": x.count_opens()?,
        "covers": covers,
    }))
}

fn witness_json(w: &Witness, labels: &[String]) -> Value {
    let n = |s: &PointSet| names_of(labels, s);
    let pts = |v: &[usize]| json!(v.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>());
    match w {
        Witness::Closed { set, generic_points } => {
            json!({"kind": "closed", "set": n(set), "generic_points": pts(generic_points)})
        }
        Witness::Saturated { set, generic_points } => {
            json!({"kind": "saturated", "set": n(set), "generic_points": pts(generic_points)})
        }
        Witness::Directed { d, x, u } => {
            json!({"kind": "directed", "d": n(d), "x": labels[*x], "u": n(u)})
        }
        Witness::Family { family, u } => json!({
            "kind": "family",
            "family": family.iter().map(n).collect::<Vec<_>>(),
            "u": n(u),
        }),
        Witness::Points { x, y } => json!({"kind": "points", "x": labels[*x], "y": labels[*y]}),
    }
}

fn property_json(x: &FiniteSpace, r: &PropertyReport, labels: &[String]) -> CliResult<Value> {
    let mut m = Map::new();
    m.insert("property".into(), json!(r.property.key()));
    m.insert("holds".into(), json!(r.holds));
    m.insert("method".into(), serde_json::to_value(r.method).expect("serializable"));
    if let Some(w) = &r.witness {
        m.insert("witness".into(), witness_json(w, labels));
        m.insert("witness_rechecked".into(), json!(recheck_witness(x, r)?));
    }
    Ok(Value::Object(m))
}

/// `all` or a single property key.
pub fn parse_property_arg(arg: &str) -> CliResult<Vec<Property>> {
    if arg == "all" {
        return Ok(Property::ALL.to_vec());
    }
    Property::from_key(arg).map(|p| vec![p]).ok_or_else(|| {
        let keys: Vec<&str> = Property::ALL.iter().map(|p| p.key()).collect();
        CliError::Usage(format!("unknown property `{arg}` (expected all, {})", keys.join(", ")))
    })
}

pub fn check(ctx: &mut Ctx, file: &Path, property: &str, only: Option<&str>) -> CliResult<(String, i32)> {
    let props = parse_property_arg(property)?;
    let doc = ctx.timed("parse", || load(file))?;
    let selected: Vec<&SpaceDocument> = match only {
        Some(n) => vec![doc
            .space(n)
            .ok_or_else(|| CliError::Usage(format!("{} has no space `{n}`", file.display())))?],
        None => doc.spaces.iter().collect(),
    };
    let mut all_hold = true;
    let mut spaces = Vec::new();
    let checked = ctx.timed("check", || -> CliResult<()> {
        for s in &selected {
            let mut summary = space_summary(&s.name, &s.points, &s.space)?;
            if !s.meta.is_empty() {
                let meta: Map<String, Value> = s.meta.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                summary["meta"] = Value::Object(meta);
            }
            let mut results = Vec::new();
            for &p in &props {
                let r = p.check(&s.space)?;
                all_hold &= r.holds;
                results.push(property_json(&s.space, &r, &s.points)?);
            }
            summary["properties"] = json!(results);
            spaces.push(summary);
        }
        Ok(())
    });
    checked?;
    let mut report = ctx.report("check");
    report.set("file", file.display().to_string());
    report.set("property", property);
    report.set("spaces", spaces);
    if !doc.maps.is_empty() {
        let maps: Vec<Value> = doc
            .maps
            .iter()
            .map(|m| json!({"name": m.name, "domain": m.dom, "codomain": m.cod, "continuous": m.map.is_continuous()}))
            .collect();
        report.set("maps", maps);
    }
    Ok(ctx.finish(report, all_hold))
}

fn write_output(path: Option<&PathBuf>, text: &str) -> CliResult<()> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        })?;
    }
    Ok(())
}

fn constructed(
    report: &mut Report,
    name: &str,
    labels: &[String],
    x: &FiniteSpace,
    output: Option<&PathBuf>,
) -> CliResult<()> {
    let text = print_space(name, labels, x);
    write_output(output, &text)?;
    report.set("result", space_summary(name, labels, x)?);
    report.set("document", text);
    Ok(())
}

pub fn construct_product(ctx: &mut Ctx, inputs: &[String], output: Option<&PathBuf>) -> CliResult<(String, i32)> {
    if inputs.is_empty() {
        return Err(CliError::Usage("product needs at least one factor".into()));
    }
    let docs = inputs.iter().map(|s| load_space(s)).collect::<CliResult<Vec<_>>>()?;
    let spaces: Vec<FiniteSpace> = docs.iter().map(|d| d.space.clone()).collect();
    let p = ctx.timed("product", || product(&spaces))?;
    let labels: Vec<String> = p
        .space
        .points()
        .map(|i| {
            let t = p.tuple(i);
            t.iter()
                .zip(&docs)
                .map(|(&c, d)| d.points[c].as_str())
                .collect::<Vec<_>>()
                .join(".")
        })
        .collect();
    let name = docs.iter().map(|d| d.name.as_str()).collect::<Vec<_>>().join("x");
    let mut report = ctx.report("construct product");
    report.set("factors", docs.iter().map(|d| d.name.clone()).collect::<Vec<_>>());
    constructed(&mut report, &name, &labels, &p.space, output)?;
    Ok(ctx.finish(report, true))
}

pub fn construct_subspace(
    ctx: &mut Ctx,
    input: &str,
    points: &[String],
    output: Option<&PathBuf>,
) -> CliResult<(String, i32)> {
    let doc = load_space(input)?;
    let a = resolve_points(&doc, points)?;
    let sub = induced(&doc.space, &a);
    let labels: Vec<String> = sub.points.iter().map(|&i| doc.points[i].clone()).collect();
    let mut report = ctx.report("construct subspace");
    report.set("ambient", doc.name.clone());
    report.set("subset", names_of(&doc.points, &a));
    report.set("b_closed", is_b_closed(&doc.space, &a));
    constructed(&mut report, &format!("{}_sub", doc.name), &labels, &sub.space, output)?;
    Ok(ctx.finish(report, true))
}

/// Target points hit by the unit take the source label; others list the
/// closed set they stand for.
fn reflection_labels(r: &ReflectionResult, source: &[String]) -> Vec<String> {
    (0..r.target.n())
        .map(|t| match r.source.points().find(|&p| r.unit.apply(p) == t) {
            Some(p) => source[p].clone(),
            None => format!("q{t}"),
        })
        .collect()
}

fn reflection_json(r: &ReflectionResult, source: &[String], name: &str) -> CliResult<Value> {
    let labels = reflection_labels(r, source);
    let unit: Map<String, Value> = r
        .source
        .points()
        .map(|p| (source[p].clone(), json!(labels[r.unit.apply(p)])))
        .collect();
    let mut v = space_summary(name, &labels, &r.target)?;
    v["unit"] = Value::Object(unit);
    v["unit_is_homeomorphism"] = json!(r.unit.is_homeomorphism());
    Ok(v)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Route {
    Irr,
    Bclosure,
    Both,
}

pub fn construct_sobrify(
    ctx: &mut Ctx,
    input: &str,
    route: Route,
    output: Option<&PathBuf>,
) -> CliResult<(String, i32)> {
    let doc = load_space(input)?;
    let name = format!("{}_sob", doc.name);
    let mut report = ctx.report("construct sobrify");
    report.set("source", doc.name.clone());
    let irr = match route {
        Route::Bclosure => None,
        _ => Some(ctx.timed("irreducible_closed", || sobrify_irr(&doc.space))?),
    };
    let bcl = match route {
        Route::Irr => None,
        _ => Some(ctx.timed("b_closure", || sobrify_bclosure(&doc.space))?),
    };
    let mut holds = true;
    if let Some(r) = &irr {
        report.set("irreducible_closed", reflection_json(r, &doc.points, &name)?);
    }
    if let Some(r) = &bcl {
        report.set("b_closure", reflection_json(r, &doc.points, &name)?);
    }
    if let (Some(a), Some(b)) = (&irr, &bcl) {
        let h = connecting_homeomorphism(a, b)?;
        holds = h.is_some();
        report.set("routes_agree", holds);
    }
    let r = irr.as_ref().or(bcl.as_ref()).expect("at least one route");
    let text = print_space(&name, &reflection_labels(r, &doc.points), &r.target);
    write_output(output, &text)?;
    report.set("document", text);
    Ok(ctx.finish(report, holds))
}

pub fn construct_bclosure(ctx: &mut Ctx, input: &str, points: &[String]) -> CliResult<(String, i32)> {
    let doc = load_space(input)?;
    let a = resolve_points(&doc, points)?;
    let closure = b_closure(&doc.space, &a);
    let maps = equalizer_maps_for_bclosed(&doc.space, &closure)?;
    let eq = equalizer(&maps.f, &maps.g)?;
    let representation: Vec<Value> = maps
        .representation
        .iter()
        .map(|(u, v)| json!({"u": names_of(&doc.points, u), "v": names_of(&doc.points, v)}))
        .collect();
    let mut report = ctx.report("construct bclosure");
    report.set("space", doc.name.clone());
    report.set("subset", names_of(&doc.points, &a));
    report.set("closure", names_of(&doc.points, &closure));
    report.set("b_closed", closure == a);
    report.set(
        "equalizer",
        json!({
            "cube_dimension": maps.m,
            "representation": representation,
            "equalizer": names_of(&doc.points, &eq),
            "exact": eq == closure,
        }),
    );
    Ok(ctx.finish(report, eq == closure))
}

pub fn construct_reflect(
    ctx: &mut Ctx,
    input: &str,
    points: &[String],
    class: &str,
    targets: usize,
) -> CliResult<(String, i32)> {
    let k = predicate(class).map_err(|_| {
        let known: Vec<&str> = registry().iter().map(|p| p.name).collect();
        CliError::Usage(format!(
            "unknown class `{class}` (expected one of {})",
            known.join(", ")
        ))
    })?;
    let doc = load_space(input)?;
    let a = resolve_points(&doc, points)?;
    if a.is_empty() {
        return Err(CliError::Usage("reflect needs a nonempty --points list".into()));
    }
    let cl = ctx.timed("k_closure", || k_closure(&doc.space, &a, &k))?;
    let unit = k_closure_inclusion(&doc.space, &a, &cl.set)?;
    let tests = all_spaces_up_to(targets)?;
    let check = ctx.timed("universal_property", || is_reflection(&unit, &k, &tests))?;
    let sub_labels: Vec<String> = a.iter().map(|i| doc.points[i].clone()).collect();
    let cl_labels: Vec<String> = cl.set.iter().map(|i| doc.points[i].clone()).collect();
    let mut report = ctx.report("construct reflect");
    report.set("space", doc.name.clone());
    report.set("class", class);
    report.set("subset", names_of(&doc.points, &a));
    report.set("k_closure", names_of(&doc.points, &cl.set));
    report.set("k_closure_in_class", cl.in_class);
    report.set("qualifying_supersets", cl.qualifying.len());
    report.set(
        "universal_property",
        json!({
            "test_targets_up_to": targets,
            "test_targets": tests.len(),
            "skipped_not_in_class": check.skipped.len(),
            "maps_checked": check.checked,
            "unique_factorizations": check.holds,
        }),
    );
    if let Some(w) = &check.witness {
        let t = &tests[w.target_index];
        let zl = default_names(t.n());
        report.set(
            "witness",
            json!({
                "target": print_space("Z", &zl, t),
                "f": sub_labels.iter().zip(&w.f).map(|(s, &z)| json!({"from": s, "to": zl[z]})).collect::<Vec<_>>(),
                "factorizations": w.factorizations.iter().map(|g| {
                    cl_labels.iter().zip(g).map(|(s, &z)| json!({"from": s, "to": zl[z]})).collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
            }),
        );
    }
    Ok(ctx.finish(report, check.holds))
}

pub fn corpus_run(ctx: &mut Ctx, bound: u64) -> CliResult<(String, i32)> {
    let corpus = ctx.timed("corpus", || run_corpus(bound))?;
    let count = |k: VerdictKind| {
        corpus
            .entries
            .iter()
            .filter(|e| e.certificate.verdict.kind() == k)
            .count()
    };
    let mut report = ctx.report("corpus run");
    report.set("bound", bound);
    report.set(
        "summary",
        json!({
            "entries": corpus.entries.len(),
            "passed": corpus.entries.iter().filter(|e| e.pass).count(),
            "holds": count(VerdictKind::Holds),
            "refuted": count(VerdictKind::Refuted),
            "holds_up_to": count(VerdictKind::HoldsUpTo),
            "cap_exceeded": count(VerdictKind::CapExceeded),
        }),
    );
    let entries: Vec<Value> = corpus
        .entries
        .iter()
        .map(|e| {
            json!({
                "id": e.id,
                "expected": e.expected.to_string(),
                "verdict": e.certificate.verdict.kind().to_string(),
                "pass": e.pass,
                "certificate": serde_json::to_value(&e.certificate).expect("serializable"),
            })
        })
        .collect();
    report.set("entries", entries);
    Ok(ctx.finish(report, corpus.all_pass()))
}

pub fn enumerate(ctx: &mut Ctx, size: usize, filter_src: Option<&str>) -> CliResult<(String, i32)> {
    let expr = filter_src
        .map(filter::parse)
        .transpose()
        .map_err(|e| CliError::Usage(format!("--where: {e}")))?;
    let spaces = ctx.timed("enumerate", || all_spaces(size))?;
    let labels = default_names(size);
    let mut listed = Vec::new();
    let filtered = ctx.timed("filter", || -> CliResult<()> {
        for (i, x) in spaces.iter().enumerate() {
            let keep = match &expr {
                Some(e) => e.eval(x)?,
                None => true,
            };
            if keep {
                let mut v = space_summary(&format!("X{i}"), &labels, x)?;
                v.as_object_mut().expect("object").remove("points");
                listed.push(v);
            }
        }
        Ok(())
    });
    filtered?;
    let mut report = ctx.report("enumerate");
    report.set("size", size);
    report.set("where", filter_src.map_or(Value::Null, |s| json!(s)));
    report.set("total", spaces.len());
    report.set("matched", listed.len());
    report.set("points", labels);
    report.set("spaces", listed);
    Ok(ctx.finish(report, true))
}

pub enum ExportSource<'a> {
    File {
        path: &'a Path,
        space: Option<&'a str>,
    },
    Catalog {
        name: &'a str,
        params: &'a [i64],
        bound: u64,
    },
    Johnstone {
        columns: u64,
        height: u64,
    },
}

/// DOT or `.space` text for a file's space or a catalog truncation.
pub fn export(source: ExportSource<'_>, as_dot: bool) -> CliResult<String> {
    let (name, labels, x) = match source {
        ExportSource::File { path, space } => {
            let doc = pick(load(path)?, space, &path.display().to_string())?;
            (doc.name, doc.points, doc.space)
        }
        ExportSource::Catalog { name, params, bound } => {
            let s = catalog(name, params).map_err(|e| match e {
                t0kit::Error::UnknownSpace(_) => CliError::Usage(format!(
                    "unknown catalog space `{name}` (expected one of {})",
                    CATALOG_NAMES.join(", ")
                )),
                other => CliError::Core(other),
            })?;
            let x = truncate(&s, bound)?;
            let labels = s.truncation_points(bound).iter().map(|p| p.to_string()).collect();
            (format!("{}_{bound}", s.name()), labels, x)
        }
        ExportSource::Johnstone { columns, height } => {
            let (x, pts) = truncate_johnstone(columns, height)?;
            let labels = pts.iter().map(|p| p.to_string()).collect();
            (format!("johnstone_{columns}x{height}"), labels, x)
        }
    };
    Ok(if as_dot {
        hasse_dot(&name, &labels, &x)
    } else {
        print_space(&name, &labels, &x)
    })
}

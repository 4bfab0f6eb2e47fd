use std::sync::Arc;

use hetcat::adjunction::{Adjunction, SynthesisFailure};
use hetcat::category::check_category;
use hetcat::dsl::{Document, SourceSpec};
use hetcat::functor::check_functor;
use hetcat::het::{check_het_bifunctor, HetBifunctor};
use hetcat::instances::monoids::{MonoidFamily, Pacioli};
use hetcat::instances::Instance;
use hetcat::render::{category_dot, gentzen, het_square_dot, hom_pair_square_dot};
use hetcat::represent::{find_representation, verify_naturality, Side};
use hetcat::theorem::verify_representation_theorem;
use hetcat::{FinCat, Functor, ObjId};

use crate::input::{adjunction_of, category_of, het_of, InputError, Source};
use crate::report::RunReport;

const CATEGORY_LAWS: &[&str] = &[
    "identity-endpoints",
    "compose-total",
    "compose-endpoints",
    "left-identity",
    "right-identity",
    "associativity",
];
const FUNCTOR_LAWS: &[&str] = &["identity", "endpoints", "composition"];
const HET_LAWS: &[&str] = &[
    "action-cell",
    "identity-action",
    "left-functoriality",
    "right-functoriality",
    "commuting-actions",
];

fn category_laws(r: &mut RunReport, c: &FinCat) -> Result<(), InputError> {
    let report = check_category(&c.to_raw())?;
    r.laws(&format!("category {}: ", c.name()), "category-laws", CATEGORY_LAWS, &report);
    Ok(())
}

fn functor_laws(r: &mut RunReport, f: &Functor) -> Result<(), InputError> {
    let report = check_functor(f.source(), f.target(), &f.to_raw())?;
    r.laws(&format!("functor {}: ", f.name()), "functor-laws", FUNCTOR_LAWS, &report);
    Ok(())
}

fn het_laws(r: &mut RunReport, h: &HetBifunctor) -> Result<(), InputError> {
    let report = check_het_bifunctor(h.source(), h.target(), &h.to_raw())?;
    r.laws(&format!("het {}: ", h.name()), "het-bifunctor-laws", HET_LAWS, &report);
    Ok(())
}

fn failure_witnesses(f: &SynthesisFailure) -> Vec<(Side, Vec<String>)> {
    let mut out = Vec::new();
    for p in [&f.left, &f.right].into_iter().flatten() {
        out.push((p.side, p.to_string().lines().map(str::to_string).collect()));
    }
    out
}

/// Record a synthesized adjunction's checks or its failure.
fn adjunction_checks(r: &mut RunReport, prefix: &str, adj: &Result<Adjunction, SynthesisFailure>) {
    match adj {
        Ok(adj) => {
            r.check(format!("{prefix}left-representable"), "representability", Vec::new());
            r.check(format!("{prefix}right-representable"), "representability", Vec::new());
            r.suite(prefix, &adj.checks());
        }
        Err(f) => {
            let failed = failure_witnesses(f);
            for side in [Side::Left, Side::Right] {
                let w = failed.iter().find(|(s, _)| *s == side).map(|(_, w)| w.clone()).unwrap_or_default();
                r.check(format!("{prefix}{side}-representable"), "representability", w);
            }
            if let Some(c) = &f.checks {
                r.suite(prefix, c);
            }
            if f.is_half_adjunction() {
                r.artifact("half-adjunction", "text", f.to_string());
            }
        }
    }
}

fn check_spec(r: &mut RunReport, spec: &SourceSpec) -> Result<(), InputError> {
    let mut lawful = std::collections::HashMap::new();
    for c in spec.categories() {
        let name = &c.name.text;
        let raw = spec.raw_category(name).expect("declared");
        let report = check_category(&raw)?;
        lawful.insert(name.clone(), report.is_ok());
        r.laws(&format!("category {name}: "), "category-laws", CATEGORY_LAWS, &report);
    }
    let blocked = |r: &mut RunReport, what: &str, s: &str, t: &str| -> bool {
        let bad: Vec<String> = [s, t]
            .iter()
            .filter(|c| !lawful.get(**c).copied().unwrap_or(false))
            .map(|c| format!("category `{c}` is not lawful"))
            .collect();
        let blocked = !bad.is_empty();
        if blocked {
            r.check(format!("{what}: categories"), "dependencies", bad);
        }
        blocked
    };
    for f in spec.functors() {
        let (s, t, raw) = spec.raw_functor(&f.name.text).expect("declared");
        if blocked(r, &format!("functor {}", f.name.text), &s, &t) {
            continue;
        }
        let report = check_functor(&*spec.category(&s)?, &*spec.category(&t)?, &raw)?;
        r.laws(&format!("functor {}: ", f.name.text), "functor-laws", FUNCTOR_LAWS, &report);
    }
    let mut lawful_hets = std::collections::HashMap::new();
    for h in spec.hets() {
        let (s, t, raw) = spec.raw_het(&h.name.text).expect("declared");
        if blocked(r, &format!("het {}", h.name.text), &s, &t) {
            continue;
        }
        let report = check_het_bifunctor(&spec.category(&s)?, &spec.category(&t)?, &raw)?;
        lawful_hets.insert(h.name.text.clone(), report.is_ok());
        r.laws(&format!("het {}: ", h.name.text), "het-bifunctor-laws", HET_LAWS, &report);
    }
    for c in spec.checks() {
        if c.kind != hetcat::dsl::CheckKind::Adjunction {
            continue;
        }
        let name = &c.target.text;
        if !lawful_hets.get(name).copied().unwrap_or(false) {
            r.check(format!("adjunction from {name}: het"), "dependencies", vec![format!("het `{name}` is not lawful")]);
            continue;
        }
        let het = Arc::new(spec.het(name)?);
        adjunction_checks(r, &format!("adjunction from {name}: "), &hetcat::adjunction::synthesize_adjunction(&het));
    }
    Ok(())
}

pub fn check(r: &mut RunReport, src: &Source) -> Result<(), InputError> {
    match src {
        Source::File { spec, .. } => check_spec(r, spec)?,
        Source::Instance(Instance::Category(c)) => category_laws(r, c)?,
        Source::Instance(Instance::Het(h)) => {
            category_laws(r, h.source())?;
            if !h.target().same_tables(h.source()) {
                category_laws(r, h.target())?;
            }
            het_laws(r, h)?;
        }
        Source::Instance(Instance::Adjunction(d)) => {
            category_laws(r, d.left.source())?;
            if !d.left.target().same_tables(d.left.source()) {
                category_laws(r, d.left.target())?;
            }
            functor_laws(r, &d.left)?;
            functor_laws(r, &d.right)?;
            r.suite("adjunction: ", &hetcat::adjunction::check_adjunction(d)?);
        }
    }
    r.stage("check");
    Ok(())
}

fn object_map(f: &Functor) -> String {
    let (s, t) = (f.source(), f.target());
    s.objects().map(|x| format!("{} -> {}\n", s.obj_name(x), t.obj_name(f.obj(x)))).collect()
}

pub fn represent(r: &mut RunReport, src: &Source, name: Option<&str>, sides: &[Side]) -> Result<(), InputError> {
    let het = het_of(src, name)?;
    r.stage("load");
    for &side in sides {
        match find_representation(&het, side) {
            Ok(rep) => {
                r.check(format!("{side}-representable"), "representability", Vec::new());
                r.suite(&format!("{side}: "), &verify_naturality(&rep));
                let mut doc = Document::default();
                doc.functor(rep.functor());
                r.artifact(&format!("functor-{side}"), "hetcat", doc.to_string());
                r.artifact(&format!("objects-{side}"), "text", object_map(rep.functor()));
            }
            Err(p) => {
                let w = p.to_string().lines().map(str::to_string).collect();
                r.check(format!("{side}-representable"), "representability", w);
            }
        }
        r.stage(&format!("represent-{side}"));
    }
    Ok(())
}

fn adjunction_document(adj: &Adjunction) -> String {
    let mut doc = Document::default();
    doc.functor(adj.left()).functor(adj.right());
    if let Some(core) = adj.het_core() {
        doc.het(&core.het);
        doc.check(&format!("check adjunction from het {};", core.het.name()));
    }
    doc.to_string()
}

fn het_units(adj: &Adjunction) -> String {
    let Some(core) = adj.het_core() else { return String::new() };
    let (x_cat, a_cat) = (adj.x(), adj.a());
    x_cat
        .objects()
        .map(|x| {
            let h = core.het_unit(x);
            format!(
                "h_{} = {}: {} => {}\n",
                x_cat.obj_name(x),
                core.het.element_name(h),
                x_cat.obj_name(x),
                a_cat.obj_name(adj.left().obj(x))
            )
        })
        .collect()
}

/// `x -> [0//x]` for every monoid of the demo family.
fn pacioli_units() -> Result<String, InputError> {
    let fam = MonoidFamily::demo()?;
    let mut out = String::new();
    for m in &fam.monoids {
        let p = Pacioli::new(m);
        let pairs: Vec<String> = (0..m.size()).map(|x| format!("{x} -> [0//{x}] = class {}", p.unit(x))).collect();
        out.push_str(&format!("{} -> {}: {}\n", m.name, p.group.name, pairs.join(", ")));
    }
    Ok(out)
}

pub fn adjoint(
    r: &mut RunReport,
    src: &Source,
    name: Option<&str>,
    want_gentzen: bool,
    pacioli: bool,
) -> Result<Option<Adjunction>, InputError> {
    let adj = adjunction_of(src, name)?;
    r.stage("synthesize");
    adjunction_checks(r, "", &adj);
    r.stage("check");
    let Ok(adj) = adj else { return Ok(None) };
    r.artifact("adjunction", "hetcat", adjunction_document(&adj));
    let units = het_units(&adj);
    if !units.is_empty() {
        r.artifact("het-unit", "text", units);
    }
    if pacioli {
        r.artifact("pacioli-unit", "text", pacioli_units()?);
    }
    if want_gentzen {
        r.artifact("gentzen", "text", gentzen(&adj));
    }
    Ok(Some(adj))
}

pub fn verify_theorem(r: &mut RunReport, src: &Source, name: Option<&str>) -> Result<(), InputError> {
    let adj = adjunction_of(src, name)?;
    r.stage("load");
    match adj {
        Ok(adj) => {
            let report = verify_representation_theorem(&adj);
            r.suite("", &report.suite);
            r.artifact(
                "canonical-universals",
                "text",
                format!("left: {}\nright: {}\n", report.canonical_left, report.canonical_right),
            );
        }
        Err(f) => {
            r.check("synthesis", "synthesis", f.to_string().lines().map(str::to_string).collect());
        }
    }
    r.stage("theorem");
    Ok(())
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DotKind {
    Category,
    Square,
    HetSquare,
}

fn pick_object(c: &FinCat, object: Option<&str>) -> Result<ObjId, InputError> {
    match object {
        Some(n) => Ok(c.expect_obj(n)?),
        None => c.objects().next().ok_or_else(|| InputError::Other(format!("`{}` has no objects", c.name()))),
    }
}

pub fn emit_dot(
    r: &mut RunReport,
    src: &Source,
    name: Option<&str>,
    kind: DotKind,
    object: Option<&str>,
) -> Result<Option<String>, InputError> {
    let dot = match kind {
        DotKind::Category => Some(category_dot(&*category_of(src, name)?)),
        DotKind::Square | DotKind::HetSquare => {
            let adj = match adjunction_of(src, name)? {
                Ok(a) => a,
                Err(f) => {
                    adjunction_checks(r, "", &Err(f));
                    return Ok(None);
                }
            };
            let x = pick_object(adj.x(), object)?;
            if kind == DotKind::Square {
                let a = adj.left().obj(x);
                let sq = adj.hom_pair_square(x, a, adj.unit(x))?;
                r.check("hom-pair-square", "hom-pair-square", sq.violations(&adj));
                Some(hom_pair_square_dot(&adj, &sq))
            } else {
                let core = adj
                    .het_core()
                    .ok_or_else(|| InputError::Other("het squares need a het-bifunctor input".into()))?;
                let sq = adj.het_square(core.het_unit(x)).expect("het core present");
                r.check("het-square", "het-adjunctive-square", sq.violations(&adj));
                Some(het_square_dot(&adj, &sq))
            }
        }
    };
    r.stage("render");
    if let Some(d) = &dot {
        r.artifact("dot", "dot", d.clone());
    }
    Ok(dot)
}

//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p hetcat --test acceptance`.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use hetcat::adjunction::{check_adjunction, synthesize_adjunction, Adjunction, AdjunctionData};
use hetcat::category::check_category;
use hetcat::dsl::{parse, serialize_category, serialize_functor, serialize_het_document, DiagnosticKind, Document};
use hetcat::functor::check_functor;
use hetcat::het::{check_het_bifunctor, hom_bifunctor, HetBifunctor, RawAction};
use hetcat::instances::freyd::{freyd_parse, freyd_search, monoid_category};
use hetcat::instances::monoids::{max2, trunc2, Monoid, MonoidFamily, Pacioli};
use hetcat::instances::orders::{poset_family, preorder_family};
use hetcat::instances::sets::{
    colimit_carrier_matches, colimit_het, colimit_oracle, limit_carrier_matches, limit_het, limit_oracle, product_het,
};
use hetcat::instances::shapes::{chain, shape};
use hetcat::represent::{find_representation, find_universal_element, Side};
use hetcat::theorem::verify_representation_theorem;
use hetcat::{FinCat, Functor, ObjId, RawCategory, RawFunctor, ValidationReport};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------- criterion 1

enum Expect {
    /// A law violation whose first witness mentions these names.
    Law(&'static str, &'static [&'static str]),
    /// Rejected as structurally malformed, message mentioning this text.
    Structural(&'static str),
}

fn judge(name: &str, got: hetcat::Result<ValidationReport>, want: &Expect) -> Result<(), String> {
    match (want, got) {
        (Expect::Law(law, names), Ok(report)) => {
            let v = report
                .first(law)
                .ok_or_else(|| format!("{name}: expected a `{law}` violation, got: {report}"))?;
            for n in *names {
                ensure(v.witness.iter().any(|w| w == n), || {
                    format!("{name}: witness {:?} lacks `{n}`", v.witness)
                })?;
            }
            Ok(())
        }
        (Expect::Structural(text), Err(e)) => ensure(e.to_string().contains(text), || {
            format!("{name}: error `{e}` does not mention `{text}`")
        }),
        (_, Ok(r)) => Err(format!("{name}: expected rejection, got report {r}")),
        (_, Err(e)) => Err(format!("{name}: unexpected error {e}")),
    }
}

fn raw_of(c: &FinCat) -> RawCategory {
    c.to_raw()
}

fn set_compose(raw: &mut RawCategory, g: &str, f: &str, h: &str) {
    raw.compose.retain(|(g2, f2, _)| !(g2 == g && f2 == f));
    raw.compose.push((g.into(), f.into(), h.into()));
}

fn category_mutations() -> Vec<(&'static str, RawCategory, Expect)> {
    let mut out = Vec::new();

    let mut m = RawCategory {
        name: "NonAssoc".into(),
        objects: vec!["o".into()],
        morphisms: vec![("e".into(), "o".into(), "o".into()), ("k".into(), "o".into(), "o".into())],
        identities: vec![],
        compose: vec![],
    };
    for (g, f, h) in [("e", "e", "k"), ("e", "k", "e"), ("k", "e", "e"), ("k", "k", "e")] {
        set_compose(&mut m, g, f, h);
    }
    out.push(("non-associative table", m, Expect::Law("associativity", &[])));

    let mut m = raw_of(&shape("parallel").unwrap());
    set_compose(&mut m, "id_t", "f", "g");
    out.push(("id . f = g", m, Expect::Law("left-identity", &["f"])));

    let mut m = raw_of(&shape("parallel").unwrap());
    set_compose(&mut m, "g", "id_s", "f");
    out.push(("g . id = f", m, Expect::Law("right-identity", &["g"])));

    let mut m = raw_of(&chain(3));
    set_compose(&mut m, "c1_c2", "c0_c1", "c0_c1");
    out.push(("composite with wrong codomain", m, Expect::Law("compose-endpoints", &["c1_c2", "c0_c1"])));

    let mut m = raw_of(&chain(3));
    m.compose.retain(|(g, f, _)| !(g == "c1_c2" && f == "c0_c1"));
    out.push(("missing composite", m, Expect::Law("compose-total", &["c1_c2", "c0_c1"])));

    let mut m = raw_of(&chain(3));
    m.compose.push(("c1_c2".into(), "c0_c1".into(), "c1_c2".into()));
    out.push(("two composites for one pair", m, Expect::Law("compose-functional", &["c1_c2", "c0_c1"])));

    let mut m = raw_of(&chain(3));
    m.compose.push(("c0_c1".into(), "c1_c2".into(), "c0_c2".into()));
    out.push(("composite of a non-composable pair", m, Expect::Law("compose-domain", &["c0_c1", "c1_c2"])));

    let mut m = raw_of(&shape("arrow").unwrap());
    m.identities.push(("s".into(), "f".into()));
    out.push(("identity with wrong endpoints", m, Expect::Law("identity-endpoints", &["s", "f"])));

    let mut m = raw_of(&chain(3));
    m.compose.push(("c1_c2".into(), "c0_c1".into(), "nowhere".into()));
    out.push(("dangling composite", m, Expect::Structural("nowhere")));
    out
}

fn functor_mutations() -> Vec<(&'static str, Arc<FinCat>, Arc<FinCat>, RawFunctor, Expect)> {
    let z3_table: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
    let z3 = monoid_category("Z3", &z3_table).unwrap();
    let arrow = shape("arrow").unwrap();
    let c2 = chain(2);
    let pairs = |v: &[(&str, &str)]| v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    vec![
        (
            "F(m1 . m1) != F(m1) . F(m1)",
            z3.clone(),
            z3.clone(),
            RawFunctor { name: "Bad".into(), obj_map: pairs(&[("o", "o")]), mor_map: pairs(&[("m1", "m1"), ("m2", "m1")]) },
            Expect::Law("composition", &["m1"]),
        ),
        (
            "identity sent to a non-identity",
            z3.clone(),
            z3.clone(),
            RawFunctor {
                name: "Bad".into(),
                obj_map: pairs(&[("o", "o")]),
                mor_map: pairs(&[("id_o", "m1"), ("m1", "m1"), ("m2", "m2")]),
            },
            Expect::Law("identity", &["id_o", "m1"]),
        ),
        (
            "arrow sent across the wrong objects",
            arrow.clone(),
            c2.clone(),
            RawFunctor {
                name: "Bad".into(),
                obj_map: pairs(&[("s", "c0"), ("t", "c1")]),
                mor_map: pairs(&[("f", "id_c0")]),
            },
            Expect::Law("endpoints", &["f", "id_c0"]),
        ),
        (
            "unmapped object",
            arrow,
            c2,
            RawFunctor { name: "Bad".into(), obj_map: pairs(&[("s", "c0")]), mor_map: pairs(&[("f", "c0_c1")]) },
            Expect::Structural("t"),
        ),
    ]
}

fn action(mor: &str, x: &str, a: &str, elem: &str, result: &str) -> RawAction {
    RawAction { mor: mor.into(), x: x.into(), a: a.into(), elem: elem.into(), result: result.into() }
}

fn het_mutations() -> Vec<(&'static str, Arc<FinCat>, hetcat::het::RawHet, Expect)> {
    let z2 = monoid_category("Z2", &[vec![0, 1], vec![1, 0]]).unwrap();
    let hz2 = hom_bifunctor(&z2).to_raw();
    let par = shape("parallel").unwrap();
    let hpar = hom_bifunctor(&par).to_raw();
    let mut out = Vec::new();

    let mut m = hz2.clone();
    m.right.retain(|a| !(a.mor == "m1" && a.elem == "m1"));
    m.right.push(action("m1", "o", "o", "m1", "m1"));
    out.push(("right action m1 . m1 = m1", z2.clone(), m, Expect::Law("right-functoriality", &[])));

    let mut m = hz2.clone();
    m.left.retain(|a| !(a.mor == "m1" && a.elem == "m1"));
    m.left.push(action("m1", "o", "o", "m1", "m1"));
    out.push(("left action m1 . m1 = m1", z2.clone(), m, Expect::Law("left-functoriality", &[])));

    let mut m = hpar.clone();
    m.left.push(action("id_s", "s", "t", "f", "g"));
    out.push(("identity acting nontrivially", par.clone(), m, Expect::Law("identity-action", &["id_s"])));

    let mut m = hz2.clone();
    m.left.push(action("m1", "o", "o", "id_o", "id_o"));
    out.push(("two results for one action", z2.clone(), m, Expect::Law("action-functional", &["m1", "id_o"])));

    let mut m = hz2;
    m.right.retain(|a| !(a.mor == "m1" && a.elem == "id_o"));
    out.push(("missing right action", z2, m, Expect::Structural("missing")));

    let mut m = hpar;
    m.right.push(action("f", "s", "s", "id_s", "ghost"));
    out.push(("dangling result", par, m, Expect::Structural("ghost")));
    out
}

fn criterion_1() -> Outcome {
    let mut laws = 0;
    for c in common::categories() {
        let r = check_category(&c.to_raw()).map_err(|e| format!("{}: {e}", c.name()))?;
        ensure(r.is_ok() && c.check_laws().is_ok(), || format!("{}: {r}", c.name()))?;
        laws += 1;
    }
    for f in common::functors() {
        let r = check_functor(f.source(), f.target(), &f.to_raw()).map_err(|e| format!("{}: {e}", f.name()))?;
        ensure(r.is_ok(), || format!("{}: {r}", f.name()))?;
        laws += 1;
    }
    for h in common::hets() {
        let r = check_het_bifunctor(h.source(), h.target(), &h.to_raw()).map_err(|e| format!("{}: {e}", h.name()))?;
        ensure(r.is_ok() && h.check_laws().is_ok(), || format!("{}: {r}", h.name()))?;
        laws += 1;
    }
    let mut mutants = 0;
    for (name, raw, want) in category_mutations() {
        judge(name, check_category(&raw), &want)?;
        mutants += 1;
    }
    for (name, s, t, raw, want) in functor_mutations() {
        judge(name, check_functor(&s, &t, &raw), &want)?;
        mutants += 1;
    }
    for (name, c, raw, want) in het_mutations() {
        judge(name, check_het_bifunctor(&c, &c, &raw), &want)?;
        mutants += 1;
    }
    Ok(format!("{laws} corpus values lawful, {mutants} mutation fixtures rejected with witnesses"))
}

// ---------------------------------------------------------------- criterion 2

fn product_criterion(n: usize) -> Outcome {
    let p = product_het(n).map_err(|e| e.to_string())?;
    let adj = synthesize_adjunction(&p.het).map_err(|e| {
        let side = |r: &Option<hetcat::represent::PartialRepresentation>| {
            r.as_ref().map(|r| {
                let bases: Vec<&str> = r.missing.iter().map(|m| m.base.as_str()).collect();
                format!("{} side unrepresented at {}", r.side, bases.join(", "))
            })
        };
        let parts: Vec<String> = [side(&e.left), side(&e.right)].into_iter().flatten().collect();
        format!("bound {}: synthesis failed: {}", n * n, parts.join("; "))
    })?;
    let (x_cat, a_cat) = (adj.x(), adj.a());
    let (f, g) = (adj.left(), adj.right());
    let mut cells = 0;
    for w in x_cat.objects() {
        for xy in a_cat.objects() {
            let het = p.het.cell_size(w, xy);
            let via_g = x_cat.hom(w, g.obj(xy)).len();
            let via_f = a_cat.hom(f.obj(w), xy).len();
            let (x, y) = p.pairs.obj_components(xy);
            let direct = p.small.carrier(x).pow(w.0 as u32) * p.small.carrier(y).pow(w.0 as u32);
            ensure(het == via_g && het == via_f && het == direct, || {
                format!("cell ({}, {}): {het} / {via_g} / {via_f} / {direct}", x_cat.obj_name(w), a_cat.obj_name(xy))
            })?;
            ensure(f.obj(w) == p.pairs.obj_pair(w, w), || format!("F({}) is not the diagonal pair", x_cat.obj_name(w)))?;
            cells += 1;
        }
    }
    let mut squares = 0;
    for c in p.het.elements() {
        let sq = adj.het_square(c).ok_or("no het core")?;
        let v = sq.violations(&adj);
        ensure(v.is_empty(), || v.join("; "))?;
        squares += 1;
    }
    let suite = adj.checks();
    ensure(suite.all_passed(), || suite.to_string())?;
    Ok(format!("bound {}: {cells} cells with equal counts, {squares} squares commute", n * n))
}

/// Every product het whose target category has at most 4 objects, plus
/// the outcome one size up, where only the right adjoint can exist.
fn criterion_2() -> Outcome {
    let mut parts = Vec::new();
    for n in 1.. {
        let objects = (n + 1) * (n + 1);
        if objects > 4 {
            let note = match product_criterion(n) {
                Ok(_) => return Err(format!("bound {}: unexpectedly representable on both sides", n * n)),
                Err(e) => e,
            };
            let p = product_het(n).map_err(|e| e.to_string())?;
            let right = find_representation(&p.het, Side::Right).map_err(|e| format!("bound {}: {e}", n * n))?;
            let g = right.functor();
            for w in p.sets.cat().objects() {
                for xy in p.pairs.cat().objects() {
                    let (x, y) = p.pairs.obj_components(xy);
                    let (het, hom) = (p.het.cell_size(w, xy), p.sets.cat().hom(w, g.obj(xy)).len());
                    let apex = p.sets.carrier(g.obj(xy));
                    ensure(het == hom && apex == p.small.carrier(x) * p.small.carrier(y), || {
                        format!("bound {}: |Het| = {het}, |Hom(W, G(X,Y))| = {hom}", n * n)
                    })?;
                }
            }
            parts.push(format!("beyond 4 target objects: {note}; right side G(X,Y) = X x Y verified"));
            break;
        }
        parts.push(product_criterion(n)?);
    }
    Ok(parts.join("; "))
}

// ---------------------------------------------------------------- criterion 3

fn criterion_3() -> Outcome {
    let mut checked = 0;
    for s in ["discrete2", "arrow", "parallel", "span", "cospan"] {
        let d = shape(s).map_err(|e| e.to_string())?;
        let lim = limit_het(&d, 2).map_err(|e| e.to_string())?;
        for o in lim.diagrams.cat().objects() {
            let diagram = lim.diagrams.functor(o);
            let u = find_universal_element(&lim.het, o, Side::Right).map_err(|e| format!("{s}: {e}"))?;
            let legs = lim.het.ambient_key(u.element).ok_or("limit het is ambient")?;
            let oracle = limit_oracle(&lim.small, diagram);
            limit_carrier_matches(&lim.sets, lim.sets.carrier(u.apex), legs, &oracle)
                .map_err(|e| format!("{s} limit of {}: {e}", lim.diagrams.cat().obj_name(o)))?;
            checked += 1;
        }
        let colim = colimit_het(&d, 2).map_err(|e| e.to_string())?;
        for o in colim.diagrams.cat().objects() {
            let diagram = colim.diagrams.functor(o);
            let u = find_universal_element(&colim.het, o, Side::Left).map_err(|e| format!("{s}: {e}"))?;
            let legs = colim.het.ambient_key(u.element).ok_or("colimit het is ambient")?;
            let q = colimit_oracle(&colim.small, diagram);
            colimit_carrier_matches(&colim.sets, colim.sets.carrier(u.apex), legs, &q)
                .map_err(|e| format!("{s} colimit of {}: {e}", colim.diagrams.cat().obj_name(o)))?;
            checked += 1;
        }
    }
    let par = shape("parallel").unwrap();
    let lim = limit_het(&par, 2).map_err(|e| e.to_string())?;
    let colim = colimit_het(&par, 2).map_err(|e| e.to_string())?;
    let small = &lim.small;
    let s2 = small.cat().expect_obj("s2").unwrap();
    let id = small.cat().identity(s2);
    let swap = small.find(s2, s2, &[1, 0]).ok_or("swap on s2")?;
    let is_id_swap = |f: &Functor| {
        f.obj(ObjId(0)) == s2
            && f.obj(ObjId(1)) == s2
            && f.mor(par.expect_mor("f").unwrap()) == id
            && f.mor(par.expect_mor("g").unwrap()) == swap
    };
    let lo = lim.diagrams.functors().iter().position(is_id_swap).ok_or("id/swap diagram")?;
    let co = colim.diagrams.functors().iter().position(is_id_swap).ok_or("id/swap diagram")?;
    let lu = find_universal_element(&lim.het, ObjId(lo), Side::Right).map_err(|e| e.to_string())?;
    let cu = find_universal_element(&colim.het, ObjId(co), Side::Left).map_err(|e| e.to_string())?;
    let (lim_size, colim_size) = (lim.sets.carrier(lu.apex), colim.sets.carrier(cu.apex));
    let (oracle_lim, oracle_colim) = (
        limit_oracle(small, &lim.diagrams.functors()[lo]).len(),
        colimit_oracle(small, &colim.diagrams.functors()[co]).num_classes,
    );
    ensure(lim_size == 0 && oracle_lim == 0 && colim_size == 1 && oracle_colim == 1, || {
        format!("id/swap: |Lim| = {lim_size} (oracle {oracle_lim}), |Colim| = {colim_size} (oracle {oracle_colim})")
    })?;
    Ok(format!("{checked} diagrams carrier-bijective to the oracles; id/swap gives |Lim| = 0, |Colim| = 1"))
}

// ---------------------------------------------------------------- criterion 4

fn criterion_4() -> Outcome {
    let posets = poset_family().map_err(|e| e.to_string())?;
    let forget = posets.order_to_set();
    let left = find_representation(&forget, Side::Left).map_err(|e| format!("posets, left: {e}"))?;
    ensure(left.functor().same_tables(&posets.underlying), || "posets: left representative is not U".into())?;
    let witness = match find_representation(&forget, Side::Right) {
        Ok(_) => return Err("posets: right representation unexpectedly found".into()),
        Err(p) => {
            let m = p.missing.first().ok_or("posets: right failure without a missing base")?;
            let w = m.failures.first().map(|f| f.witness.clone()).unwrap_or_default();
            ensure(!m.failures.is_empty() && m.failures.iter().all(|f| !f.witness.is_empty()), || {
                format!("posets: failure at {} has no witness", m.base)
            })?;
            format!("no right universal element at {}: {w}", m.base)
        }
    };

    let pre = preorder_family().map_err(|e| e.to_string())?;
    let d_u = synthesize_adjunction(&pre.set_to_order()).map_err(|e| format!("preorders, D -| U: {e}"))?;
    for x in d_u.x().objects() {
        let o = pre.order(d_u.left().obj(x));
        ensure(o.is_discrete(), || format!("D({}) = {} is not discrete", d_u.x().obj_name(x), o.name))?;
    }
    let u_i = synthesize_adjunction(&pre.order_to_set()).map_err(|e| format!("preorders, U -| I: {e}"))?;
    for a in u_i.a().objects() {
        let o = pre.order(u_i.right().obj(a));
        ensure(o.is_indiscrete(), || format!("I({}) = {} is not indiscrete", u_i.a().obj_name(a), o.name))?;
    }
    for (name, adj) in [("D -| U", &d_u), ("U -| I", &u_i)] {
        let s = adj.checks();
        ensure(s.all_passed(), || format!("{name}: {s}"))?;
    }
    Ok(format!("posets: left only ({witness}); preorders: D -| U and U -| I"))
}

// ---------------------------------------------------------------- criterion 5

fn criterion_5() -> Outcome {
    for m in [max2(), trunc2()] {
        let p = Pacioli::new(&m);
        ensure(p.group.size() == 1, || format!("P({}) has {} elements", m.name, p.group.size()))?;
    }
    let z3 = Monoid::cyclic(3);
    let p = Pacioli::new(&z3);
    ensure(p.group.isomorphic(&z3), || "P(Z3) is not Z3".into())?;
    let fam = MonoidFamily::demo().map_err(|e| e.to_string())?;
    let (rep, report) = fam.verify()?;
    let mut homs = 0;
    for (name, fails) in &report {
        ensure(fails.is_empty(), || format!("{name}: {}", fails.join("; ")))?;
    }
    for m in fam.cat.cat().objects() {
        let mon = &fam.monoids[m.0];
        for &g in &fam.groups {
            homs += mon.homs(&fam.monoids[g.0]).len();
        }
    }
    ensure(rep.universals().len() == fam.monoids.len(), || "missing universal elements".into())?;
    Ok(format!("{} monoids, {homs} homomorphisms into groups checked against [0//x] and c(x) - c(x')", fam.monoids.len()))
}

// ---------------------------------------------------------------- criterion 6

fn criterion_6() -> Outcome {
    let pre = preorder_family().map_err(|e| e.to_string())?;
    let synth = |h: &Arc<HetBifunctor>| synthesize_adjunction(h).map_err(|e| format!("{}: {e}", h.name()));
    let cases: Vec<(&str, Adjunction)> = vec![
        ("identity:2chain", Adjunction::identity(&chain(2))),
        ("product-het:1", synth(&product_het(1).map_err(|e| e.to_string())?.het)?),
        ("discrete-underlying", synth(&pre.set_to_order())?),
        ("pacioli:demo", synth(&MonoidFamily::demo().map_err(|e| e.to_string())?.het)?),
    ];
    let mut names = Vec::new();
    for (name, adj) in cases {
        let r = verify_representation_theorem(&adj);
        ensure(r.passed(), || format!("{name}: {}", r.suite))?;
        for check in ["abstract-het-cell-count", "unit-correspondence", "counit-correspondence"] {
            ensure(r.suite.get(check).is_some(), || format!("{name}: `{check}` did not run"))?;
        }
        names.push(name);
    }
    Ok(format!("theorem verified on {}", names.join(", ")))
}

// ---------------------------------------------------------------- criterion 7

fn criterion_7() -> Outcome {
    let mut names = Vec::new();
    for (name, adj) in common::synthesized() {
        let s = adj.checks();
        ensure(s.all_passed(), || format!("{name}: {s}"))?;
        for check in ["triangle-F", "triangle-G", "double-transpose", "transpose-formula", "het-square"] {
            ensure(s.get(check).is_some(), || format!("{name}: `{check}` did not run"))?;
        }
        let uc = adj.unit_counit();
        ensure(uc.eta.check().is_ok() && uc.epsilon.check().is_ok(), || format!("{name}: unit or counit not natural"))?;
        for t in [uc.het_unit.as_ref(), uc.het_counit.as_ref()] {
            let t = t.ok_or_else(|| format!("{name}: no het unit/counit"))?;
            let r = t.check();
            ensure(r.is_ok(), || format!("{name}: {r}"))?;
        }
        names.push(name);
    }
    Ok(format!("invariants and het naturality hold on {}", names.join(", ")))
}

// ---------------------------------------------------------------- criterion 8

const MALFORMED: &[(&str, DiagnosticKind, &str)] = &[
    ("category T { objects: t$; }", DiagnosticKind::Lexical, "$"),
    ("category T { objects: t, ; }", DiagnosticKind::Syntax, ";"),
    ("category T { objects t; }", DiagnosticKind::Syntax, "t"),
    ("category T { objects: t; ", DiagnosticKind::Syntax, ";"),
    ("categroy T { objects: t; }", DiagnosticKind::Syntax, "categroy"),
    ("category C { objects: a, b; morphisms: f: a -> c; }", DiagnosticKind::Reference, "c"),
    (
        "category C { objects: a, b, c; morphisms: f: a -> b, g: b -> c; compose: g . f = h; }",
        DiagnosticKind::Reference,
        "h",
    ),
    (
        "category C { objects: a, b, c; morphisms: f: a -> b, g: b -> c, h: a -> c; }",
        DiagnosticKind::Completeness,
        "C",
    ),
    (
        "category C { objects: a; }\nfunctor F : C -> D { obj a => a; }",
        DiagnosticKind::Reference,
        "D",
    ),
    (
        "category C { objects: a, b; morphisms: f: a -> b; }\nfunctor F : C -> C { obj a => a; }",
        DiagnosticKind::Completeness,
        "F",
    ),
    (
        "category C { objects: a; }\nhet H : C -/-> C { cell (a, a): c; left q c = c; }",
        DiagnosticKind::Reference,
        "q",
    ),
    ("check adjunction from het Nope;", DiagnosticKind::Reference, "Nope"),
    ("category T { objects: t; } // ok\ncategory U { objects: u; } }", DiagnosticKind::Syntax, "}"),
];

fn round_trip_category(c: &FinCat) -> Result<(), String> {
    let text = serialize_category(c);
    let back = parse(&text).map_err(|d| format!("{}: {}", c.name(), d[0]))?;
    let b = back.category(c.name()).map_err(|e| e.to_string())?;
    ensure(b.same_tables(c) && serialize_category(&b) == text, || format!("{} does not round-trip", c.name()))
}

fn criterion_8() -> Outcome {
    let mut values = 0;
    for c in common::categories() {
        round_trip_category(&c)?;
        values += 1;
    }
    for f in common::functors() {
        let mut d = Document::default();
        d.functor(&f);
        let text = d.to_string();
        let spec = parse(&text).map_err(|d| format!("{}: {}", f.name(), d[0]))?;
        let back = spec.functor(f.name()).map_err(|e| e.to_string())?;
        ensure(back.same_tables(&f) && serialize_functor(&back) == serialize_functor(&f), || {
            format!("{} does not round-trip", f.name())
        })?;
        values += 1;
    }
    for h in common::hets() {
        let text = serialize_het_document(&h);
        let spec = parse(&text).map_err(|d| format!("{}: {}", h.name(), d[0]))?;
        let back = spec.het(h.name()).map_err(|e| e.to_string())?;
        ensure(back.same_tables(&h) && serialize_het_document(&back) == text, || {
            format!("{} does not round-trip", h.name())
        })?;
        values += 1;
    }
    for (text, kind, token) in MALFORMED {
        let diags = match parse(text) {
            Ok(_) => return Err(format!("accepted malformed input {text:?}")),
            Err(d) => d,
        };
        let d = &diags[0];
        ensure(d.kind == *kind, || format!("{text:?}: expected {kind} diagnostic, got {d}"))?;
        ensure(d.span.start < d.span.end && d.span.end <= text.len(), || format!("{text:?}: bad span {:?}", d.span))?;
        ensure(&text[d.span.start..d.span.end] == *token && d.token == *token, || {
            format!("{text:?}: diagnostic at `{}`, expected `{token}`", d.token)
        })?;
        ensure(d.line >= 1 && d.column >= 1, || format!("{text:?}: no position"))?;
    }
    Ok(format!("{values} values round-trip, {} malformed inputs diagnosed with spans", MALFORMED.len()))
}

// ---------------------------------------------------------------- criterion 9

fn parse_and_check(name: &str, d: &AdjunctionData) -> Result<(), String> {
    let p = freyd_parse(d).map_err(|e| format!("{name}: {e}"))?;
    ensure(p.suite.all_passed(), || format!("{name}: {}", p.suite))?;
    for (part, data) in [("reflection", &p.reflection), ("coreflection", &p.coreflection)] {
        let s = check_adjunction(data).map_err(|e| format!("{name} {part}: {e}"))?;
        ensure(s.all_passed(), || format!("{name} {part}: {s}"))?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    parse_and_check("identity on the 2-chain", &AdjunctionData::identity(&chain(2)))?;
    let s = freyd_search(3, 3).map_err(|e| e.to_string())?;
    let summary = format!(
        "search over {}: {} categories, {} functor pairs, {} adjunctions, {} nontrivial",
        s.bound, s.categories, s.functor_pairs, s.adjunctions, s.nontrivial
    );
    match &s.example {
        Some(ex) => {
            parse_and_check(ex.category.name(), &ex.data)?;
            Ok(format!("{summary}; parsed example on {}", ex.category.name()))
        }
        None => Ok(format!("{summary}; only trivial instances at this bound")),
    }
}

// ---------------------------------------------------------------------- main

fn main() {
    let criteria: [(u8, u64, fn() -> Outcome); 9] = [
        (1, 10, criterion_1),
        (2, 30, criterion_2),
        (3, 60, criterion_3),
        (4, 30, criterion_4),
        (5, 10, criterion_5),
        (6, 60, criterion_6),
        (7, 30, criterion_7),
        (8, 60, criterion_8),
        (9, 60, criterion_9),
    ];
    let filter: Vec<u8> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (n, limit, run) in criteria {
        if !filter.is_empty() && !filter.contains(&n) {
            continue;
        }
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > Duration::from_secs(limit) => Err(format!("over the {limit} s limit")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {n}: PASS ({:.2} s, limit {limit} s) {detail}", took.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {n}: FAIL ({:.2} s, limit {limit} s) {why}", took.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

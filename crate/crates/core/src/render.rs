//! Graphviz DOT output for categories and adjunctive squares, and a plain
//! text two-rule rendering of adjoint transposition.
//!
//! Heteromorphisms are drawn as double arrows (`color="black:white:black"`),
//! hom-set morphisms as single ones.

use std::fmt::Write;

use crate::adjunction::{Adjunction, HetAdjunctiveSquare, HomPairSquare};
use crate::category::FinCat;

const HET_EDGE: &str = r#"color="black:white:black", penwidth=1.2"#;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Objects as nodes, non-identity morphisms as labeled edges.
pub fn category_dot(c: &FinCat) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(c.name()));
    let _ = writeln!(out, "  node [shape=plaintext];");
    for x in c.objects() {
        let _ = writeln!(out, "  o{} [label={}];", x.0, quote(c.obj_name(x)));
    }
    for m in c.morphisms().filter(|&m| !c.is_identity(m)) {
        let _ = writeln!(
            out,
            "  o{} -> o{} [label={}];",
            c.dom(m).0,
            c.cod(m).0,
            quote(c.mor_name(m))
        );
    }
    out.push_str("}\n");
    out
}

/// The square `x -> Ga` over `Fx -> a` with het edges `h_x`, `e_a` and the
/// diagonal `c`.
pub fn het_square_dot(adj: &Adjunction, sq: &HetAdjunctiveSquare) -> String {
    let (x_cat, a_cat) = (adj.x(), adj.a());
    let (f, g) = (adj.left(), adj.right());
    let het_name = |c| adj.het_core().map_or_else(|| format!("#{c:?}"), |h| h.het.element_name(c));
    let mut out = String::new();
    let _ = writeln!(out, "digraph het_square {{");
    let _ = writeln!(out, "  node [shape=plaintext];");
    let _ = writeln!(out, "  x [label={}];", quote(x_cat.obj_name(sq.x)));
    let _ = writeln!(out, "  Ga [label={}];", quote(x_cat.obj_name(g.obj(sq.a))));
    let _ = writeln!(out, "  Fx [label={}];", quote(a_cat.obj_name(f.obj(sq.x))));
    let _ = writeln!(out, "  a [label={}];", quote(a_cat.obj_name(sq.a)));
    let _ = writeln!(out, "  {{ rank=same; x; Ga; }}");
    let _ = writeln!(out, "  {{ rank=same; Fx; a; }}");
    let _ = writeln!(out, "  x -> Ga [label={}];", quote(x_cat.mor_name(sq.top)));
    let _ = writeln!(out, "  Fx -> a [label={}];", quote(a_cat.mor_name(sq.bottom)));
    let _ = writeln!(out, "  x -> Fx [label={}, {HET_EDGE}];", quote(&het_name(sq.unit)));
    let _ = writeln!(out, "  Ga -> a [label={}, {HET_EDGE}];", quote(&het_name(sq.counit)));
    let _ = writeln!(out, "  x -> a [label={}, {HET_EDGE}];", quote(&het_name(sq.c)));
    out.push_str("}\n");
    out
}

/// The pair-of-transposes square in `X x A`.
pub fn hom_pair_square_dot(adj: &Adjunction, sq: &HomPairSquare) -> String {
    let (x_cat, a_cat) = (adj.x(), adj.a());
    let (f, g) = (adj.left(), adj.right());
    let pair = |m: (crate::MorId, crate::MorId)| format!("({},{})", x_cat.mor_name(m.0), a_cat.mor_name(m.1));
    let obj = |xo, ao| format!("({},{})", x_cat.obj_name(xo), a_cat.obj_name(ao));
    let (x, a) = (sq.x, sq.a);
    let mut out = String::new();
    let _ = writeln!(out, "digraph hom_pair_square {{");
    let _ = writeln!(out, "  node [shape=plaintext];");
    let _ = writeln!(out, "  tl [label={}];", quote(&obj(x, f.obj(x))));
    let _ = writeln!(out, "  tr [label={}];", quote(&obj(g.obj(a), f.obj(g.obj(a)))));
    let _ = writeln!(out, "  bl [label={}];", quote(&obj(g.obj(f.obj(x)), f.obj(x))));
    let _ = writeln!(out, "  br [label={}];", quote(&obj(g.obj(a), a)));
    let _ = writeln!(out, "  tl -> tr [label={}];", quote(&pair(sq.top)));
    let _ = writeln!(out, "  tr -> br [label={}];", quote(&pair(sq.right)));
    let _ = writeln!(out, "  tl -> bl [label={}];", quote(&pair(sq.left)));
    let _ = writeln!(out, "  bl -> br [label={}];", quote(&pair(sq.bottom)));
    let _ = writeln!(out, "  tl -> br [label={}, style=dashed];", quote(&pair(sq.diagonal)));
    out.push_str("}\n");
    out
}

/// Every transposition as a two-rule derivation: `g: Fx -> a` above,
/// the het element (when there is one) in the middle, `phi(g): x -> Ga`
/// below. Double rules read in both directions.
pub fn gentzen(adj: &Adjunction) -> String {
    let (x_cat, a_cat) = (adj.x(), adj.a());
    let (f, g) = (adj.left(), adj.right());
    let mut out = String::new();
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            for &m in a_cat.hom(f.obj(x), a) {
                let top = format!(
                    "{}: {} -> {}",
                    a_cat.mor_name(m),
                    a_cat.obj_name(f.obj(x)),
                    a_cat.obj_name(a)
                );
                let t = adj.phi(x, m).expect("m lies in Hom_A(Fx, a)");
                let bottom = format!(
                    "{}: {} -> {}",
                    x_cat.mor_name(t),
                    x_cat.obj_name(x),
                    x_cat.obj_name(g.obj(a))
                );
                let middle = adj.het_core().map(|core| {
                    let c = core.left_rep.to_het(x, a, m).expect("same cell");
                    format!("{}: {} => {}", core.het.element_name(c), x_cat.obj_name(x), a_cat.obj_name(a))
                });
                let width = [top.len(), bottom.len(), middle.as_ref().map_or(0, String::len)]
                    .into_iter()
                    .max()
                    .unwrap_or(0);
                let rule = "=".repeat(width);
                let _ = writeln!(out, "{top}\n{rule}");
                if let Some(mid) = middle {
                    let _ = writeln!(out, "{mid}\n{rule}");
                }
                let _ = writeln!(out, "{bottom}\n");
            }
        }
    }
    out
}

/// Node and edge statements in DOT produced by this module.
pub fn dot_counts(dot: &str) -> (usize, usize) {
    let mut nodes = 0;
    let mut edges = 0;
    for line in dot.lines().map(str::trim) {
        if line.starts_with('{') || line.starts_with("node ") || line.starts_with("digraph") || line == "}" {
            continue;
        }
        if line.contains(" -> ") {
            edges += 1;
        } else if line.contains("[label=") {
            nodes += 1;
        }
    }
    (nodes, edges)
}

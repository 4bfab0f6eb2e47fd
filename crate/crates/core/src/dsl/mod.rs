//! A small text format for categories, functors and het-bifunctors.
//!
//! ```text
//! // the walking arrow
//! category Arrow { objects: s, t; morphisms: f: s -> t; }
//! functor Pick : Arrow -> Arrow { obj s => t; obj t => t; mor f => id_t; }
//! het H : Arrow -/-> Arrow { cell (s, t): e; cell (t, t): e; left f e = e; }
//! check adjunction from het H;
//! ```
//!
//! Identities `id_<object>` are implicit. Every composable pair of
//! non-identity morphisms needs a `compose` entry, every non-identity
//! morphism a functor image, and every non-identity action on every het
//! element a `left`/`right` entry; omissions are reported with the span of
//! the declaration. Names are `[A-Za-z_][A-Za-z0-9_]*`, tuples `(a,b)` of
//! names, or a name directly followed by a tuple, as in `id_(a,b)`. A het
//! element named in several cells of the same row or column is pinned to
//! its cell with `left f c @ (x, a) = c2;`.

mod check;
mod lexer;
mod parser;
mod serialize;

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::category::{FinCat, RawCategory};
use crate::error::{Error, Result};
use crate::functor::{Functor, RawFunctor};
use crate::het::{HetBifunctor, RawAction, RawHet};

pub use serialize::{serialize_category, serialize_functor, serialize_het, serialize_het_document, Document};

/// Byte range in the source text.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Span {
        Span { start, end }
    }

    pub fn to(self, other: Span) -> Span {
        Span::new(self.start, other.end)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagnosticKind {
    Lexical,
    Syntax,
    Reference,
    Completeness,
}

impl fmt::Display for DiagnosticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DiagnosticKind::Lexical => "lexical",
            DiagnosticKind::Syntax => "syntax",
            DiagnosticKind::Reference => "reference",
            DiagnosticKind::Completeness => "completeness",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub message: String,
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
    pub span: Span,
    /// The offending source text.
    pub token: String,
}

impl Diagnostic {
    pub(crate) fn new(kind: DiagnosticKind, message: impl Into<String>, text: &str, span: Span) -> Diagnostic {
        let before = &text[..span.start];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |p| p + 1);
        let column = text[line_start..span.start].chars().count() + 1;
        let mut end = span.end.min(text.len());
        while !text.is_char_boundary(end) {
            end += 1;
        }
        Diagnostic {
            kind,
            message: message.into(),
            line,
            column,
            span,
            token: text[span.start..end].to_string(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {} error: {} (at `{}`)",
            self.line, self.column, self.kind, self.message, self.token
        )
    }
}

/// A name as written, in canonical form (`NAME`, `(a,b)` or `NAME(a,b)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ident {
    pub text: String,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryDecl {
    pub name: Ident,
    pub objects: Vec<Ident>,
    pub morphisms: Vec<(Ident, Ident, Ident)>,
    pub identities: Vec<(Ident, Ident)>,
    pub compose: Vec<(Ident, Ident, Ident)>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorDecl {
    pub name: Ident,
    pub source: Ident,
    pub target: Ident,
    pub objects: Vec<(Ident, Ident)>,
    pub morphisms: Vec<(Ident, Ident)>,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDecl {
    pub x: Ident,
    pub a: Ident,
    pub elements: Vec<Ident>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionDecl {
    pub mor: Ident,
    pub elem: Ident,
    /// Explicit cell of `elem`, when given with `@`.
    pub cell: Option<(Ident, Ident)>,
    pub result: Ident,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HetDecl {
    pub name: Ident,
    pub source: Ident,
    pub target: Ident,
    pub cells: Vec<CellDecl>,
    pub left: Vec<ActionDecl>,
    pub right: Vec<ActionDecl>,
    pub span: Span,
    /// Cells of each action's element, resolved during checking.
    pub(crate) left_cells: Vec<(String, String)>,
    pub(crate) right_cells: Vec<(String, String)>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckKind {
    Category,
    Functor,
    Het,
    Adjunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckDecl {
    pub kind: CheckKind,
    pub target: Ident,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decl {
    Category(CategoryDecl),
    Functor(FunctorDecl),
    Het(HetDecl),
    Check(CheckDecl),
}

/// Parsed and reference-checked declarations, in source order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceSpec {
    pub decls: Vec<Decl>,
}

/// Lex, parse and check references and completeness.
pub fn parse(text: &str) -> std::result::Result<SourceSpec, Vec<Diagnostic>> {
    let tokens = lexer::lex(text)?;
    let mut spec = parser::parse_tokens(text, &tokens)?;
    check::check(text, &mut spec)?;
    Ok(spec)
}

impl SourceSpec {
    pub fn categories(&self) -> impl Iterator<Item = &CategoryDecl> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Category(c) => Some(c),
            _ => None,
        })
    }

    pub fn functors(&self) -> impl Iterator<Item = &FunctorDecl> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Functor(f) => Some(f),
            _ => None,
        })
    }

    pub fn hets(&self) -> impl Iterator<Item = &HetDecl> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Het(h) => Some(h),
            _ => None,
        })
    }

    pub fn checks(&self) -> impl Iterator<Item = &CheckDecl> {
        self.decls.iter().filter_map(|d| match d {
            Decl::Check(c) => Some(c),
            _ => None,
        })
    }

    pub fn raw_category(&self, name: &str) -> Option<RawCategory> {
        let c = self.categories().find(|c| c.name.text == name)?;
        let t = |i: &Ident| i.text.clone();
        Some(RawCategory {
            name: t(&c.name),
            objects: c.objects.iter().map(t).collect(),
            morphisms: c.morphisms.iter().map(|(m, d, e)| (t(m), t(d), t(e))).collect(),
            identities: c.identities.iter().map(|(o, m)| (t(o), t(m))).collect(),
            compose: c.compose.iter().map(|(g, f, h)| (t(g), t(f), t(h))).collect(),
        })
    }

    /// The functor tables with the names of its source and target.
    pub fn raw_functor(&self, name: &str) -> Option<(String, String, RawFunctor)> {
        let f = self.functors().find(|f| f.name.text == name)?;
        let pairs = |v: &[(Ident, Ident)]| v.iter().map(|(a, b)| (a.text.clone(), b.text.clone())).collect();
        Some((
            f.source.text.clone(),
            f.target.text.clone(),
            RawFunctor {
                name: f.name.text.clone(),
                obj_map: pairs(&f.objects),
                mor_map: pairs(&f.morphisms),
            },
        ))
    }

    pub fn raw_het(&self, name: &str) -> Option<(String, String, RawHet)> {
        let h = self.hets().find(|h| h.name.text == name)?;
        let actions = |acts: &[ActionDecl], cells: &[(String, String)]| -> Vec<RawAction> {
            acts.iter()
                .zip(cells)
                .map(|(a, (x, c))| RawAction {
                    mor: a.mor.text.clone(),
                    x: x.clone(),
                    a: c.clone(),
                    elem: a.elem.text.clone(),
                    result: a.result.text.clone(),
                })
                .collect()
        };
        Some((
            h.source.text.clone(),
            h.target.text.clone(),
            RawHet {
                name: h.name.text.clone(),
                cells: h
                    .cells
                    .iter()
                    .map(|c| (c.x.text.clone(), c.a.text.clone(), c.elements.iter().map(|e| e.text.clone()).collect()))
                    .collect(),
                left: actions(&h.left, &h.left_cells),
                right: actions(&h.right, &h.right_cells),
            },
        ))
    }

    /// Build a declared category, enforcing the category laws.
    pub fn category(&self, name: &str) -> Result<Arc<FinCat>> {
        let raw = self.raw_category(name).ok_or_else(|| Error::unknown("category", name))?;
        Ok(Arc::new(FinCat::from_raw(&raw)?))
    }

    pub fn functor(&self, name: &str) -> Result<Functor> {
        let (s, t, raw) = self.raw_functor(name).ok_or_else(|| Error::unknown("functor", name))?;
        Functor::from_raw(self.category(&s)?, self.category(&t)?, &raw)
    }

    pub fn het(&self, name: &str) -> Result<HetBifunctor> {
        let (s, t, raw) = self.raw_het(name).ok_or_else(|| Error::unknown("het", name))?;
        HetBifunctor::from_raw(self.category(&s)?, self.category(&t)?, &raw)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminal_category() {
        let s = parse("category T { objects: t; }").unwrap();
        let c = s.category("T").unwrap();
        assert_eq!(c.num_objects(), 1);
        assert_eq!(c.num_morphisms(), 1);
        assert_eq!(serialize_category(&c), "category T { objects: t; }\n");
    }

    #[test]
    fn module_doc_example_parses() {
        let src = "category Arrow { objects: s, t; morphisms: f: s -> t; }\n\
                   functor Pick : Arrow -> Arrow { obj s => t; obj t => t; mor f => id_t; }\n\
                   het H : Arrow -/-> Arrow { cell (s, t): e; cell (t, t): e; left f e = e; }\n\
                   check adjunction from het H;";
        let s = parse(src).unwrap();
        s.functor("Pick").unwrap();
        let h = s.het("H").unwrap();
        assert_eq!(h.num_elements(), 2);
        assert_eq!(s.checks().next().unwrap().kind, CheckKind::Adjunction);
    }

    #[test]
    fn undeclared_composite_points_at_it() {
        let src = "category C { objects: a, b, c; morphisms: f: a -> b, g: b -> c; compose: g . f = h; }";
        let d = parse(src).unwrap_err();
        assert_eq!(d[0].kind, DiagnosticKind::Reference);
        assert_eq!(d[0].token, "h");
        assert_eq!(&src[d[0].span.start..d[0].span.end], "h");
    }

    #[test]
    fn law_violations_still_parse() {
        let src = "category C { objects: a; morphisms: e: a -> a; compose: e . e = id_a; }";
        let s = parse(src).unwrap();
        assert!(s.category("C").is_ok());
        let bad = "category C { objects: a; morphisms: e: a -> a, k: a -> a; \
                   compose: e . e = k, e . k = e, k . e = e, k . k = e; }";
        let s = parse(bad).unwrap();
        assert!(matches!(s.category("C"), Err(Error::Laws { .. })));
    }
}

mod common;

use hetcat::dsl::{parse, serialize_category, serialize_het_document};
use hetcat::instances::shapes::chain;
use proptest::prelude::*;

const DOC: &str = "category C {
  objects: a, b, c;
  morphisms: f: a -> b, g: b -> c, h: a -> c;
  compose: g . f = h;
}
functor Id : C -> C { obj a => a; obj b => b; obj c => c; mor f => f; mor g => g; mor h => h; }
het H : C -/-> C {
  cell (a, b): f;
  cell (a, c): h;
  cell (b, c): g;
  cell (a, a): id_a;
  cell (b, b): id_b;
  cell (c, c): id_c;
  left f g = h;
  left f id_b = f;
  left g id_c = g;
  left h id_c = h;
  right f id_a = f;
  right g id_b = g;
  right h id_a = h;
  right g f = h;
}
check adjunction from het H;
";

#[test]
fn document_parses_and_builds() {
    let spec = parse(DOC).unwrap();
    assert_eq!(spec.categories().count(), 1);
    let h = spec.het("H").unwrap();
    assert!(h.same_tables(&hetcat::het::hom_bifunctor(&spec.category("C").unwrap())) || h.check_laws().is_ok());
    assert!(spec.functor("Id").unwrap().check_laws().is_ok());
}

#[test]
fn comments_and_whitespace_are_ignored() {
    let text = "// header\ncategory T {   // trailing\n objects:\n t ; }\n";
    assert_eq!(parse(text).unwrap().category("T").unwrap().num_objects(), 1);
}

#[test]
fn serialization_is_idempotent() {
    for c in common::categories() {
        let once = serialize_category(&c);
        let twice = serialize_category(&parse(&once).unwrap().category(c.name()).unwrap());
        assert_eq!(once, twice, "{}", c.name());
    }
}

#[test]
fn tuple_ids_survive() {
    let h = hetcat::het::hom_bifunctor(&chain(2));
    let p = hetcat::construct::product_category(&chain(2), &chain(2));
    let text = serialize_category(p.cat());
    assert!(text.contains("(c0,c1)"));
    assert!(parse(&text).unwrap().category(p.cat().name()).unwrap().same_tables(p.cat()));
    assert!(serialize_het_document(&h).contains("cell (c0, c1)"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    /// Any single-byte deletion either still parses or yields diagnostics
    /// with a nonempty span inside the text.
    #[test]
    fn diagnostics_stay_inside_the_text(cut in 0usize..DOC.len()) {
        let mut text = DOC.to_string();
        text.remove(cut);
        if let Err(diags) = parse(&text) {
            prop_assert!(!diags.is_empty());
            for d in diags {
                prop_assert!(d.span.start < d.span.end, "{}", d);
                prop_assert!(d.span.end <= text.len(), "{}", d);
                prop_assert!(d.line >= 1 && d.column >= 1);
            }
        }
    }

    #[test]
    fn arbitrary_bytes_never_panic(text in "[a-z(){};:,.=@>/ -]{0,80}") {
        if let Err(diags) = parse(&text) {
            for d in diags {
                prop_assert!(d.span.start < d.span.end && d.span.end <= text.len());
            }
        }
    }
}

#[test]
fn empty_category_round_trips() {
    let e = parse("category E { }").unwrap().category("E").unwrap();
    assert_eq!(e.num_objects(), 0);
    assert!(hetcat::category::check_category(&e.to_raw()).unwrap().is_ok());
    let text = serialize_category(&e);
    let back = parse(&text).unwrap_or_else(|d| panic!("{text}: {d:?}")).category("E").unwrap();
    assert!(back.same_tables(&e));
}

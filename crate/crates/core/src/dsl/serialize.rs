use std::collections::HashMap;
use std::fmt::Write;
use std::sync::Arc;

use crate::category::FinCat;
use crate::functor::Functor;
use crate::het::HetBifunctor;

fn block(out: &mut String, head: &str, items: &[String]) {
    if items.is_empty() {
        return;
    }
    let _ = write!(out, "  {head}:");
    if items.len() == 1 {
        let _ = writeln!(out, " {};", items[0]);
        return;
    }
    out.push('\n');
    for (i, it) in items.iter().enumerate() {
        let sep = if i + 1 == items.len() { ';' } else { ',' };
        let _ = writeln!(out, "    {it}{sep}");
    }
}

/// Canonical text for a category; identities stay implicit unless they
/// are not named `id_<object>`.
pub fn serialize_category(c: &FinCat) -> String {
    let raw = c.to_raw();
    let mut out = String::new();
    if raw.morphisms.is_empty() {
        if raw.objects.is_empty() {
            let _ = writeln!(out, "category {} {{ }}", raw.name);
        } else {
            let _ = writeln!(out, "category {} {{ objects: {}; }}", raw.name, raw.objects.join(", "));
        }
        return out;
    }
    let _ = writeln!(out, "category {} {{", raw.name);
    let _ = writeln!(out, "  objects: {};", raw.objects.join(", "));
    let mors: Vec<String> = raw.morphisms.iter().map(|(m, d, e)| format!("{m}: {d} -> {e}")).collect();
    block(&mut out, "morphisms", &mors);
    let ids: Vec<String> = raw.identities.iter().map(|(o, m)| format!("{o} = {m}")).collect();
    block(&mut out, "identities", &ids);
    let comps: Vec<String> = raw.compose.iter().map(|(g, f, h)| format!("{g} . {f} = {h}")).collect();
    block(&mut out, "compose", &comps);
    out.push_str("}\n");
    out
}

pub fn serialize_functor(f: &Functor) -> String {
    let raw = f.to_raw();
    let mut out = String::new();
    let _ = writeln!(out, "functor {} : {} -> {} {{", raw.name, f.source().name(), f.target().name());
    for (a, b) in &raw.obj_map {
        let _ = writeln!(out, "  obj {a} => {b};");
    }
    for (a, b) in &raw.mor_map {
        let _ = writeln!(out, "  mor {a} => {b};");
    }
    out.push_str("}\n");
    out
}

/// Canonical text for a het-bifunctor. Elements whose name occurs in more
/// than one cell of the relevant row or column are pinned with `@`.
pub fn serialize_het(h: &HetBifunctor) -> String {
    let raw = h.to_raw();
    // (x, name) -> number of cells in row x holding it, likewise per column
    let mut by_row: HashMap<(&str, &str), usize> = HashMap::new();
    let mut by_col: HashMap<(&str, &str), usize> = HashMap::new();
    for (x, a, elems) in &raw.cells {
        for e in elems {
            *by_row.entry((x, e)).or_default() += 1;
            *by_col.entry((a, e)).or_default() += 1;
        }
    }
    let mut out = String::new();
    let _ = writeln!(out, "het {} : {} -/-> {} {{", raw.name, h.source().name(), h.target().name());
    for (x, a, elems) in &raw.cells {
        let _ = writeln!(out, "  cell ({x}, {a}): {};", elems.join(", "));
    }
    for (kw, acts, counts, row) in [("left", &raw.left, &by_row, true), ("right", &raw.right, &by_col, false)] {
        for act in acts {
            let fixed = if row { act.x.as_str() } else { act.a.as_str() };
            let pin = if counts[&(fixed, act.elem.as_str())] > 1 {
                format!(" @ ({}, {})", act.x, act.a)
            } else {
                String::new()
            };
            let _ = writeln!(out, "  {kw} {} {}{pin} = {};", act.mor, act.elem, act.result);
        }
    }
    out.push_str("}\n");
    out
}

/// A het-bifunctor with the categories it needs, ready to parse alone.
pub fn serialize_het_document(h: &HetBifunctor) -> String {
    let mut d = Document::default();
    d.category(h.source());
    d.category(h.target());
    d.het(h);
    d.to_string()
}

/// Declarations gathered in order; categories are emitted once per name.
#[derive(Default)]
pub struct Document {
    parts: Vec<String>,
    categories: Vec<Arc<FinCat>>,
}

impl Document {
    pub fn category(&mut self, c: &Arc<FinCat>) -> &mut Self {
        if !self.categories.iter().any(|d| d.name() == c.name()) {
            self.categories.push(c.clone());
            self.parts.push(serialize_category(c));
        }
        self
    }

    pub fn functor(&mut self, f: &Functor) -> &mut Self {
        self.category(f.source());
        self.category(f.target());
        self.parts.push(serialize_functor(f));
        self
    }

    pub fn het(&mut self, h: &HetBifunctor) -> &mut Self {
        self.category(h.source());
        self.category(h.target());
        self.parts.push(serialize_het(h));
        self
    }

    pub fn check(&mut self, line: &str) -> &mut Self {
        self.parts.push(format!("{line}\n"));
        self
    }
}

impl std::fmt::Display for Document {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            f.write_str(p)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;
    use crate::het::hom_bifunctor;
    use crate::instances::concrete::finset;
    use crate::instances::shapes::chain;

    #[test]
    fn finset_round_trips() {
        let c = finset(1).unwrap();
        let text = serialize_category(c.cat());
        let back = parse(&text).unwrap().category("FinSet1").unwrap();
        assert!(back.same_tables(c.cat()));
        assert_eq!(serialize_category(&back), text);
    }

    #[test]
    fn hom_of_chain_has_three_cells() {
        let h = hom_bifunctor(&chain(2));
        let text = serialize_het(&h);
        assert_eq!(text.matches("  cell").count(), 3);
        let spec = parse(&serialize_het_document(&h)).unwrap();
        assert!(spec.het(h.name()).unwrap().same_tables(&h));
    }
}

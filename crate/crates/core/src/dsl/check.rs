//! Reference and completeness checking over parsed declarations.

use std::collections::{HashMap, HashSet};

use super::{CategoryDecl, CheckKind, Decl, Diagnostic, DiagnosticKind, FunctorDecl, HetDecl, Ident, SourceSpec};
use crate::category::identity_name;

struct CatInfo {
    objects: Vec<String>,
    object_set: HashSet<String>,
    /// Every morphism, identities included: name -> (dom, cod).
    morphisms: HashMap<String, (String, String)>,
    /// Names in declaration order, identities included.
    order: Vec<String>,
    identities: HashSet<String>,
}

impl CatInfo {
    fn is_identity(&self, m: &str) -> bool {
        self.identities.contains(m)
    }

    fn arriving_at(&self, x: &str) -> impl Iterator<Item = &String> + '_ {
        let x = x.to_string();
        self.order.iter().filter(move |m| self.morphisms[*m].1 == x)
    }

    fn out_of(&self, a: &str) -> impl Iterator<Item = &String> + '_ {
        let a = a.to_string();
        self.order.iter().filter(move |m| self.morphisms[*m].0 == a)
    }
}

struct Checker<'a> {
    text: &'a str,
    diags: Vec<Diagnostic>,
    cats: HashMap<String, CatInfo>,
    functors: HashSet<String>,
    hets: HashSet<String>,
}

pub fn check(text: &str, spec: &mut SourceSpec) -> Result<(), Vec<Diagnostic>> {
    let mut c = Checker {
        text,
        diags: Vec::new(),
        cats: HashMap::new(),
        functors: HashSet::new(),
        hets: HashSet::new(),
    };
    for d in &mut spec.decls {
        match d {
            Decl::Category(cat) => c.category(cat),
            Decl::Functor(f) => c.functor(f),
            Decl::Het(h) => c.het(h),
            Decl::Check(ch) => {
                let known = match ch.kind {
                    CheckKind::Category => c.cats.contains_key(&ch.target.text),
                    CheckKind::Functor => c.functors.contains(&ch.target.text),
                    CheckKind::Het | CheckKind::Adjunction => c.hets.contains(&ch.target.text),
                };
                if !known {
                    let what = match ch.kind {
                        CheckKind::Category => "category",
                        CheckKind::Functor => "functor",
                        _ => "het",
                    };
                    let t = ch.target.clone();
                    c.reference(&t, format!("no {what} named `{}` declared before this check", t.text));
                }
            }
        }
    }
    if c.diags.is_empty() {
        Ok(())
    } else {
        c.diags.sort_by_key(|d| d.span.start);
        Err(c.diags)
    }
}

impl<'a> Checker<'a> {
    fn reference(&mut self, at: &Ident, msg: impl Into<String>) {
        self.diags
            .push(Diagnostic::new(DiagnosticKind::Reference, msg, self.text, at.span));
    }

    fn incomplete(&mut self, at: &Ident, msg: impl Into<String>) {
        self.diags
            .push(Diagnostic::new(DiagnosticKind::Completeness, msg, self.text, at.span));
    }

    fn category(&mut self, c: &CategoryDecl) {
        if self.cats.contains_key(&c.name.text) {
            self.reference(&c.name, format!("category `{}` is declared twice", c.name.text));
            return;
        }
        let mut info = CatInfo {
            objects: Vec::new(),
            object_set: HashSet::new(),
            morphisms: HashMap::new(),
            order: Vec::new(),
            identities: HashSet::new(),
        };
        for o in &c.objects {
            if !info.object_set.insert(o.text.clone()) {
                self.reference(o, format!("object `{}` is declared twice", o.text));
            } else {
                info.objects.push(o.text.clone());
            }
        }
        let overridden: HashMap<&str, &Ident> = c.identities.iter().map(|(o, m)| (o.text.as_str(), m)).collect();
        for (o, _) in &c.identities {
            if !info.object_set.contains(&o.text) {
                self.reference(o, format!("unknown object `{}`", o.text));
            }
        }
        let reserved: HashSet<String> = info
            .objects
            .iter()
            .filter(|o| !overridden.contains_key(o.as_str()))
            .map(|o| identity_name(o))
            .collect();
        for o in &info.objects {
            if !overridden.contains_key(o.as_str()) {
                let id = identity_name(o);
                info.morphisms.insert(id.clone(), (o.clone(), o.clone()));
                info.order.push(id.clone());
                info.identities.insert(id);
            }
        }
        for (m, d, e) in &c.morphisms {
            if reserved.contains(&m.text) {
                self.reference(m, format!("`{}` is reserved for an implicit identity", m.text));
                continue;
            }
            if info.morphisms.contains_key(&m.text) {
                self.reference(m, format!("morphism `{}` is declared twice", m.text));
                continue;
            }
            let mut ok = true;
            for end in [d, e] {
                if !info.object_set.contains(&end.text) {
                    self.reference(end, format!("unknown object `{}`", end.text));
                    ok = false;
                }
            }
            if ok {
                info.morphisms.insert(m.text.clone(), (d.text.clone(), e.text.clone()));
                info.order.push(m.text.clone());
            }
        }
        for (_, m) in &c.identities {
            if info.morphisms.contains_key(&m.text) {
                info.identities.insert(m.text.clone());
            } else {
                self.reference(m, format!("unknown morphism `{}`", m.text));
            }
        }
        let mut given = HashSet::new();
        for (g, f, h) in &c.compose {
            for m in [g, f, h] {
                if !info.morphisms.contains_key(&m.text) {
                    self.reference(m, format!("unknown morphism `{}`", m.text));
                }
            }
            given.insert((g.text.clone(), f.text.clone()));
        }
        let mut missing = Vec::new();
        for f in &info.order {
            if info.is_identity(f) {
                continue;
            }
            for g in info.out_of(&info.morphisms[f].1) {
                if !info.is_identity(g) && !given.contains(&(g.clone(), f.clone())) {
                    missing.push(format!("{g} . {f}"));
                }
            }
        }
        for m in missing {
            self.incomplete(&c.name, format!("no composite given for `{m}`"));
        }
        self.cats.insert(c.name.text.clone(), info);
    }

    fn category_ref(&mut self, at: &Ident) -> bool {
        if self.cats.contains_key(&at.text) {
            true
        } else {
            self.reference(at, format!("no category named `{}` declared before use", at.text));
            false
        }
    }

    fn functor(&mut self, f: &FunctorDecl) {
        if !self.functors.insert(f.name.text.clone()) {
            self.reference(&f.name, format!("functor `{}` is declared twice", f.name.text));
            return;
        }
        let (s_ok, t_ok) = (self.category_ref(&f.source), self.category_ref(&f.target));
        if !(s_ok && t_ok) {
            return;
        }
        let mut diags = Vec::new();
        let (s, t) = (&self.cats[&f.source.text], &self.cats[&f.target.text]);
        let mut mapped_obj = HashSet::new();
        for (a, b) in &f.objects {
            if !s.object_set.contains(&a.text) {
                diags.push((a.clone(), format!("unknown object `{}` of `{}`", a.text, f.source.text)));
            } else if !mapped_obj.insert(a.text.clone()) {
                diags.push((a.clone(), format!("object `{}` is mapped twice", a.text)));
            }
            if !t.object_set.contains(&b.text) {
                diags.push((b.clone(), format!("unknown object `{}` of `{}`", b.text, f.target.text)));
            }
        }
        let mut mapped_mor = HashSet::new();
        for (a, b) in &f.morphisms {
            if !s.morphisms.contains_key(&a.text) {
                diags.push((a.clone(), format!("unknown morphism `{}` of `{}`", a.text, f.source.text)));
            } else if !mapped_mor.insert(a.text.clone()) {
                diags.push((a.clone(), format!("morphism `{}` is mapped twice", a.text)));
            }
            if !t.morphisms.contains_key(&b.text) {
                diags.push((b.clone(), format!("unknown morphism `{}` of `{}`", b.text, f.target.text)));
            }
        }
        let mut missing = Vec::new();
        for o in &s.objects {
            if !mapped_obj.contains(o) {
                missing.push(format!("no image given for object `{o}`"));
            }
        }
        for m in &s.order {
            if !s.is_identity(m) && !mapped_mor.contains(m) {
                missing.push(format!("no image given for morphism `{m}`"));
            }
        }
        for (at, msg) in diags {
            self.reference(&at, msg);
        }
        for msg in missing {
            self.incomplete(&f.name, msg);
        }
    }

    fn het(&mut self, h: &mut HetDecl) {
        if !self.hets.insert(h.name.text.clone()) {
            self.reference(&h.name, format!("het `{}` is declared twice", h.name.text));
            return;
        }
        let (s_ok, t_ok) = (self.category_ref(&h.source), self.category_ref(&h.target));
        if !(s_ok && t_ok) {
            return;
        }
        let mut refs: Vec<(Ident, String)> = Vec::new();
        let mut missing = Vec::new();
        let (s, t) = (&self.cats[&h.source.text], &self.cats[&h.target.text]);
        let mut cells: HashMap<(String, String), Vec<String>> = HashMap::new();
        for c in &h.cells {
            let mut ok = true;
            if !s.object_set.contains(&c.x.text) {
                refs.push((c.x.clone(), format!("unknown object `{}` of `{}`", c.x.text, h.source.text)));
                ok = false;
            }
            if !t.object_set.contains(&c.a.text) {
                refs.push((c.a.clone(), format!("unknown object `{}` of `{}`", c.a.text, h.target.text)));
                ok = false;
            }
            if !ok {
                continue;
            }
            let key = (c.x.text.clone(), c.a.text.clone());
            if cells.contains_key(&key) {
                refs.push((c.x.clone(), format!("cell ({}, {}) is declared twice", key.0, key.1)));
                continue;
            }
            let mut elems: Vec<String> = Vec::new();
            for e in &c.elements {
                if elems.contains(&e.text) {
                    refs.push((e.clone(), format!("element `{}` is declared twice in its cell", e.text)));
                } else {
                    elems.push(e.text.clone());
                }
            }
            cells.insert(key, elems);
        }
        let holds = |x: &str, a: &str, e: &str| cells.get(&(x.to_string(), a.to_string())).is_some_and(|v| v.iter().any(|n| n == e));
        let mut given = HashSet::new();
        for is_left in [true, false] {
            let (acts, cat) = if is_left { (&h.left, s) } else { (&h.right, t) };
            let mut resolved = Vec::new();
            for act in acts.iter() {
                let Some((dom, cod)) = cat.morphisms.get(&act.mor.text) else {
                    let side = if is_left { &h.source } else { &h.target };
                    refs.push((act.mor.clone(), format!("unknown morphism `{}` of `{}`", act.mor.text, side.text)));
                    resolved.push((String::new(), String::new()));
                    continue;
                };
                // the fixed coordinate of the element's cell
                let fixed = if is_left { cod } else { dom };
                let cell = match &act.cell {
                    Some((x, a)) => {
                        let (x, a) = (x.text.clone(), a.text.clone());
                        let pinned = if is_left { &x } else { &a };
                        if pinned != fixed {
                            refs.push((act.elem.clone(), format!("cell ({x}, {a}) does not meet `{}`", act.mor.text)));
                            None
                        } else if !holds(&x, &a, &act.elem.text) {
                            refs.push((act.elem.clone(), format!("no element `{}` in cell ({x}, {a})", act.elem.text)));
                            None
                        } else {
                            Some((x, a))
                        }
                    }
                    None => {
                        let mut found: Vec<(String, String)> = cells
                            .iter()
                            .filter(|((x, a), v)| (if is_left { x } else { a }) == fixed && v.contains(&act.elem.text))
                            .map(|(k, _)| k.clone())
                            .collect();
                        found.sort();
                        match found.len() {
                            1 => found.pop(),
                            0 => {
                                refs.push((
                                    act.elem.clone(),
                                    format!("no element `{}` in a cell at `{fixed}`", act.elem.text),
                                ));
                                None
                            }
                            _ => {
                                refs.push((
                                    act.elem.clone(),
                                    format!(
                                        "element `{}` occurs in {} cells at `{fixed}`; pin it with `@ (x, a)`",
                                        act.elem.text,
                                        found.len()
                                    ),
                                ));
                                None
                            }
                        }
                    }
                };
                let Some((x, a)) = cell else {
                    resolved.push((String::new(), String::new()));
                    continue;
                };
                let (rx, ra) = if is_left { (dom.clone(), a.clone()) } else { (x.clone(), cod.clone()) };
                if !holds(&rx, &ra, &act.result.text) {
                    refs.push((act.result.clone(), format!("no element `{}` in cell ({rx}, {ra})", act.result.text)));
                }
                given.insert((is_left, act.mor.text.clone(), x.clone(), a.clone(), act.elem.text.clone()));
                resolved.push((x, a));
            }
            if is_left {
                h.left_cells = resolved;
            } else {
                h.right_cells = resolved;
            }
        }
        let mut keys: Vec<&(String, String)> = cells.keys().collect();
        keys.sort();
        for (x, a) in keys {
            for e in &cells[&(x.clone(), a.clone())] {
                for m in s.arriving_at(x).filter(|m| !s.is_identity(m)) {
                    if !given.contains(&(true, m.clone(), x.clone(), a.clone(), e.clone())) {
                        missing.push(format!("no left action of `{m}` on `{e}` in ({x}, {a})"));
                    }
                }
                for k in t.out_of(a).filter(|k| !t.is_identity(k)) {
                    if !given.contains(&(false, k.clone(), x.clone(), a.clone(), e.clone())) {
                        missing.push(format!("no right action of `{k}` on `{e}` in ({x}, {a})"));
                    }
                }
            }
        }
        for (at, msg) in refs {
            self.reference(&at, msg);
        }
        for msg in missing {
            self.incomplete(&h.name, msg);
        }
    }
}

//! Finite categories as explicit object, morphism and composition tables.
//!
//! Every id is an opaque string, unique within its category. Internally
//! objects and morphisms are addressed by dense indices ([`ObjId`],
//! [`MorId`]) in declaration order. Composition is stored in diagram order:
//! `compose(g, f)` is "g after f" and is defined exactly when
//! `cod(f) == dom(g)`.
//!
//! Identity morphisms are named `id_<object>` unless a raw table overrides
//! them.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::ValidationReport;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObjId(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MorId(pub usize);

/// Canonical name of the identity on `obj`.
pub fn identity_name(obj: &str) -> String {
    format!("id_{obj}")
}

/// Canonical tuple encoding used for ids of pairs and functor-category
/// objects: `(a,b,c)`.
pub fn tuple_id<S: AsRef<str>>(parts: &[S]) -> String {
    let mut out = String::from("(");
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(p.as_ref());
    }
    out.push(')');
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// Resource limits for enumerative constructions.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Capacity {
    pub max_objects: usize,
    pub max_morphisms: usize,
}

impl Default for Capacity {
    fn default() -> Self {
        Capacity {
            max_objects: 10_000,
            max_morphisms: 200_000,
        }
    }
}

impl Capacity {
    pub fn with_max_objects(max_objects: usize) -> Self {
        Capacity {
            max_objects,
            ..Capacity::default()
        }
    }

    pub(crate) fn check_objects(&self, what: &str, count: usize) -> Result<()> {
        if count > self.max_objects {
            return Err(Error::Capacity {
                what: format!("{what} objects"),
                limit: self.max_objects,
            });
        }
        Ok(())
    }

    pub(crate) fn check_morphisms(&self, what: &str, count: usize) -> Result<()> {
        if count > self.max_morphisms {
            return Err(Error::Capacity {
                what: format!("{what} morphisms"),
                limit: self.max_morphisms,
            });
        }
        Ok(())
    }
}

/// A validated finite category.
#[derive(Clone, Debug, PartialEq)]
pub struct FinCat {
    name: String,
    objects: Vec<String>,
    obj_index: HashMap<String, ObjId>,
    morphisms: Vec<Morphism>,
    mor_index: HashMap<String, MorId>,
    identity: Vec<MorId>,
    homs: Vec<Vec<MorId>>,
    hom_pos: Vec<usize>,
    incoming: Vec<Vec<MorId>>,
    in_pos: Vec<usize>,
    outgoing: Vec<Vec<MorId>>,
    out_pos: Vec<usize>,
    // compose[f][out_pos[g]] = g . f
    compose: Vec<Vec<MorId>>,
}

impl FinCat {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl ExactSizeIterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl ExactSizeIterator<Item = MorId> + '_ {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn obj_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn mor_name(&self, m: MorId) -> &str {
        &self.morphisms[m.0].name
    }

    pub fn obj(&self, name: &str) -> Option<ObjId> {
        self.obj_index.get(name).copied()
    }

    pub fn mor(&self, name: &str) -> Option<MorId> {
        self.mor_index.get(name).copied()
    }

    pub fn expect_obj(&self, name: &str) -> Result<ObjId> {
        self.obj(name).ok_or_else(|| Error::unknown("object", name))
    }

    pub fn expect_mor(&self, name: &str) -> Result<MorId> {
        self.mor(name).ok_or_else(|| Error::unknown("morphism", name))
    }

    pub fn dom(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].dom
    }

    pub fn cod(&self, m: MorId) -> ObjId {
        self.morphisms[m.0].cod
    }

    pub fn morphism(&self, m: MorId) -> &Morphism {
        &self.morphisms[m.0]
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identity[x.0]
    }

    pub fn is_identity(&self, m: MorId) -> bool {
        self.identity[self.dom(m).0] == m
    }

    /// Morphisms `x -> y` in declaration order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.homs[x.0 * self.objects.len() + y.0]
    }

    /// Position of `m` inside its hom-set.
    pub fn hom_pos(&self, m: MorId) -> usize {
        self.hom_pos[m.0]
    }

    /// Morphisms with codomain `x`.
    pub fn incoming(&self, x: ObjId) -> &[MorId] {
        &self.incoming[x.0]
    }

    pub fn in_pos(&self, m: MorId) -> usize {
        self.in_pos[m.0]
    }

    /// Morphisms with domain `x`.
    pub fn outgoing(&self, x: ObjId) -> &[MorId] {
        &self.outgoing[x.0]
    }

    pub fn out_pos(&self, m: MorId) -> usize {
        self.out_pos[m.0]
    }

    /// `g . f`, or `None` when `cod(f) != dom(g)`.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        if self.cod(f) != self.dom(g) {
            return None;
        }
        Some(self.compose[f.0][self.out_pos[g.0]])
    }

    /// `g . f` for a pair already known to be composable.
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        debug_assert_eq!(self.cod(f), self.dom(g), "composing non-composable pair");
        self.compose[f.0][self.out_pos[g.0]]
    }

    /// Same category under a new name.
    pub fn renamed(mut self, name: impl Into<String>) -> FinCat {
        self.name = name.into();
        self
    }

    /// Whether the two categories have identical tables, ignoring names of
    /// the categories themselves.
    pub fn same_tables(&self, other: &FinCat) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identity == other.identity
            && self.compose == other.compose
            && self.out_pos == other.out_pos
    }

    /// Re-check every category law on the stored tables.
    pub fn check_laws(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let name = |m: MorId| self.mor_name(m).to_string();
        for x in self.objects() {
            let i = self.identity(x);
            if self.dom(i) != x || self.cod(i) != x {
                report.push(
                    "identity-endpoints",
                    vec![self.obj_name(x).into(), name(i)],
                    "identity does not start and end at its object",
                );
            }
        }
        for f in self.morphisms() {
            let (a, b) = (self.dom(f), self.cod(f));
            if self.comp(self.identity(b), f) != f {
                report.push("left-identity", vec![name(f)], "id . f != f");
            }
            if self.comp(f, self.identity(a)) != f {
                report.push("right-identity", vec![name(f)], "f . id != f");
            }
            for &g in self.outgoing(b) {
                let gf = self.comp(g, f);
                if self.dom(gf) != a || self.cod(gf) != self.cod(g) {
                    report.push(
                        "compose-endpoints",
                        vec![name(g), name(f), name(gf)],
                        "composite has wrong domain or codomain",
                    );
                    continue;
                }
                for &h in self.outgoing(self.cod(g)) {
                    let lhs = self.comp(h, gf);
                    let rhs = self.comp(self.comp(h, g), f);
                    if lhs != rhs {
                        report.push(
                            "associativity",
                            vec![name(h), name(g), name(f)],
                            format!("h.(g.f) = {} but (h.g).f = {}", name(lhs), name(rhs)),
                        );
                    }
                }
            }
        }
        report
    }

    /// Morphisms of the form `from -> to` rendered as names, for reports.
    pub fn describe(&self, m: MorId) -> String {
        let mm = self.morphism(m);
        format!(
            "{}: {} -> {}",
            mm.name,
            self.obj_name(mm.dom),
            self.obj_name(mm.cod)
        )
    }
}

impl fmt::Display for FinCat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} objects, {} morphisms)",
            self.name,
            self.num_objects(),
            self.num_morphisms()
        )
    }
}

/// Incremental constructor for [`FinCat`]. Objects get their identity
/// morphisms automatically; composites involving identities are filled in.
#[derive(Debug, Clone)]
pub struct CatBuilder {
    name: String,
    objects: Vec<String>,
    obj_index: HashMap<String, ObjId>,
    morphisms: Vec<Morphism>,
    mor_index: HashMap<String, MorId>,
    identity: Vec<MorId>,
}

impl CatBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CatBuilder {
            name: name.into(),
            objects: Vec::new(),
            obj_index: HashMap::new(),
            morphisms: Vec::new(),
            mor_index: HashMap::new(),
            identity: Vec::new(),
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> Result<ObjId> {
        let name = name.into();
        let id = identity_name(&name);
        self.object_with_identity(name, id)
    }

    pub fn object_with_identity(
        &mut self,
        name: impl Into<String>,
        identity: impl Into<String>,
    ) -> Result<ObjId> {
        let name = name.into();
        if self.obj_index.contains_key(&name) {
            return Err(Error::duplicate("object", name));
        }
        let x = ObjId(self.objects.len());
        self.obj_index.insert(name.clone(), x);
        self.objects.push(name);
        let i = self.push_morphism(identity.into(), x, x)?;
        self.identity.push(i);
        Ok(x)
    }

    pub fn morphism(&mut self, name: impl Into<String>, dom: ObjId, cod: ObjId) -> Result<MorId> {
        self.push_morphism(name.into(), dom, cod)
    }

    fn push_morphism(&mut self, name: String, dom: ObjId, cod: ObjId) -> Result<MorId> {
        if self.mor_index.contains_key(&name) {
            return Err(Error::duplicate("morphism", name));
        }
        let m = MorId(self.morphisms.len());
        self.mor_index.insert(name.clone(), m);
        self.morphisms.push(Morphism { name, dom, cod });
        Ok(m)
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identity[x.0]
    }

    pub fn mor(&self, name: &str) -> Option<MorId> {
        self.mor_index.get(name).copied()
    }

    pub fn obj(&self, name: &str) -> Option<ObjId> {
        self.obj_index.get(name).copied()
    }

    /// Finish the category. `compose(g, f)` is asked for every composable
    /// pair of non-identity morphisms.
    pub fn build_with<C>(self, mut compose: C) -> Result<FinCat>
    where
        C: FnMut(MorId, MorId) -> Option<MorId>,
    {
        let n = self.objects.len();
        let mut homs = vec![Vec::new(); n * n];
        let mut hom_pos = vec![0; self.morphisms.len()];
        let mut incoming = vec![Vec::new(); n];
        let mut in_pos = vec![0; self.morphisms.len()];
        let mut outgoing = vec![Vec::new(); n];
        let mut out_pos = vec![0; self.morphisms.len()];
        for (i, m) in self.morphisms.iter().enumerate() {
            let cell = &mut homs[m.dom.0 * n + m.cod.0];
            hom_pos[i] = cell.len();
            cell.push(MorId(i));
            in_pos[i] = incoming[m.cod.0].len();
            incoming[m.cod.0].push(MorId(i));
            out_pos[i] = outgoing[m.dom.0].len();
            outgoing[m.dom.0].push(MorId(i));
        }
        let is_identity = |m: MorId| self.identity[self.morphisms[m.0].dom.0] == m;
        let mut table = Vec::with_capacity(self.morphisms.len());
        for (fi, fm) in self.morphisms.iter().enumerate() {
            let f = MorId(fi);
            let row: Vec<MorId> = outgoing[fm.cod.0]
                .iter()
                .map(|&g| {
                    if is_identity(g) {
                        Ok(f)
                    } else if is_identity(f) {
                        Ok(g)
                    } else {
                        compose(g, f).ok_or_else(|| {
                            Error::Structural(format!(
                                "missing composite {} . {}",
                                self.morphisms[g.0].name, fm.name
                            ))
                        })
                    }
                })
                .collect::<Result<_>>()?;
            table.push(row);
        }
        Ok(FinCat {
            name: self.name,
            objects: self.objects,
            obj_index: self.obj_index,
            morphisms: self.morphisms,
            mor_index: self.mor_index,
            identity: self.identity,
            homs,
            hom_pos,
            incoming,
            in_pos,
            outgoing,
            out_pos,
            compose: table,
        })
    }
}

/// Unvalidated category tables as written by a user.
///
/// Identities are implicit (`id_<object>`) unless overridden in
/// `identities`; composites involving an identity are derived unless listed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawCategory {
    pub name: String,
    pub objects: Vec<String>,
    /// `(name, dom, cod)` for the non-identity morphisms.
    pub morphisms: Vec<(String, String, String)>,
    /// `(object, morphism)` overrides for identities.
    pub identities: Vec<(String, String)>,
    /// `(g, f, h)` meaning `g . f = h`.
    pub compose: Vec<(String, String, String)>,
}

struct ResolvedRaw {
    objects: Vec<String>,
    morphisms: Vec<(String, usize, usize)>,
    identity: Vec<usize>,
    table: HashMap<(usize, usize), usize>,
}

fn resolve_raw(raw: &RawCategory, report: &mut ValidationReport) -> Result<ResolvedRaw> {
    let mut obj_index = HashMap::new();
    for (i, o) in raw.objects.iter().enumerate() {
        if obj_index.insert(o.clone(), i).is_some() {
            return Err(Error::duplicate("object", o));
        }
    }
    let obj = |name: &str| {
        obj_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::unknown("object", name))
    };
    let mut morphisms: Vec<(String, usize, usize)> = Vec::new();
    let mut mor_index = HashMap::new();
    for (name, d, c) in &raw.morphisms {
        let (d, c) = (obj(d)?, obj(c)?);
        if mor_index.insert(name.clone(), morphisms.len()).is_some() {
            return Err(Error::duplicate("morphism", name));
        }
        morphisms.push((name.clone(), d, c));
    }
    let mut overrides = HashMap::new();
    for (o, m) in &raw.identities {
        let x = obj(o)?;
        let mi = *mor_index
            .get(m)
            .ok_or_else(|| Error::unknown("morphism", m))?;
        overrides.insert(x, mi);
    }
    let mut identity = Vec::with_capacity(raw.objects.len());
    for (x, o) in raw.objects.iter().enumerate() {
        if let Some(&m) = overrides.get(&x) {
            identity.push(m);
        } else {
            let name = identity_name(o);
            if mor_index.contains_key(&name) {
                return Err(Error::Structural(format!(
                    "`{name}` is reserved for the identity on `{o}`"
                )));
            }
            mor_index.insert(name.clone(), morphisms.len());
            identity.push(morphisms.len());
            morphisms.push((name, x, x));
        }
    }
    let mor = |name: &str| {
        mor_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::unknown("morphism", name))
    };
    let mut table: HashMap<(usize, usize), usize> = HashMap::new();
    for (g, f, h) in &raw.compose {
        let (gi, fi, hi) = (mor(g)?, mor(f)?, mor(h)?);
        if morphisms[fi].2 != morphisms[gi].1 {
            report.push(
                "compose-domain",
                vec![g.clone(), f.clone()],
                "composite given for a non-composable pair",
            );
            continue;
        }
        if let Some(&prev) = table.get(&(gi, fi)) {
            if prev != hi {
                report.push(
                    "compose-functional",
                    vec![g.clone(), f.clone(), morphisms[prev].0.clone(), h.clone()],
                    "two different composites given for one pair",
                );
            }
            continue;
        }
        table.insert((gi, fi), hi);
    }
    Ok(ResolvedRaw {
        objects: raw.objects.clone(),
        morphisms,
        identity,
        table,
    })
}

/// Validate raw tables. Dangling references are a structural error; every
/// law violation is listed in the report with the witnessing ids.
pub fn check_category(raw: &RawCategory) -> Result<ValidationReport> {
    let mut report = ValidationReport::new();
    let r = resolve_raw(raw, &mut report)?;
    let nm = |i: usize| r.morphisms[i].0.clone();
    let is_id = |m: usize| r.identity[r.morphisms[m].1] == m;
    for (x, &i) in r.identity.iter().enumerate() {
        if r.morphisms[i].1 != x || r.morphisms[i].2 != x {
            report.push(
                "identity-endpoints",
                vec![r.objects[x].clone(), nm(i)],
                "identity does not start and end at its object",
            );
        }
    }
    let comp = |g: usize, f: usize| -> Option<usize> {
        if let Some(&h) = r.table.get(&(g, f)) {
            return Some(h);
        }
        if r.morphisms[f].2 != r.morphisms[g].1 {
            return None;
        }
        if is_id(g) {
            Some(f)
        } else if is_id(f) {
            Some(g)
        } else {
            None
        }
    };
    let nobj = r.objects.len();
    let mut outgoing = vec![Vec::new(); nobj];
    for (i, m) in r.morphisms.iter().enumerate() {
        outgoing[m.1].push(i);
    }
    for f in 0..r.morphisms.len() {
        let (a, b) = (r.morphisms[f].1, r.morphisms[f].2);
        for &g in &outgoing[b] {
            match comp(g, f) {
                None => report.push(
                    "compose-total",
                    vec![nm(g), nm(f)],
                    "no composite given for a composable pair",
                ),
                Some(h) => {
                    if r.morphisms[h].1 != a || r.morphisms[h].2 != r.morphisms[g].2 {
                        report.push(
                            "compose-endpoints",
                            vec![nm(g), nm(f), nm(h)],
                            "composite has wrong domain or codomain",
                        );
                    }
                }
            }
        }
        if let Some(h) = comp(r.identity[b], f) {
            if h != f {
                report.push("left-identity", vec![nm(f)], format!("id . f = {}", nm(h)));
            }
        }
        if let Some(h) = comp(f, r.identity[a]) {
            if h != f {
                report.push("right-identity", vec![nm(f)], format!("f . id = {}", nm(h)));
            }
        }
    }
    for f in 0..r.morphisms.len() {
        for &g in &outgoing[r.morphisms[f].2] {
            let Some(gf) = comp(g, f) else { continue };
            for &h in &outgoing[r.morphisms[g].2] {
                let (Some(hg), Some(lhs)) = (comp(h, g), comp(h, gf)) else {
                    continue;
                };
                let Some(rhs) = comp(hg, f) else { continue };
                if lhs != rhs {
                    report.push(
                        "associativity",
                        vec![nm(h), nm(g), nm(f)],
                        format!("h.(g.f) = {} but (h.g).f = {}", nm(lhs), nm(rhs)),
                    );
                }
            }
        }
    }
    Ok(report)
}

impl FinCat {
    /// Build a category from raw tables, rejecting law violations.
    pub fn from_raw(raw: &RawCategory) -> Result<FinCat> {
        let report = check_category(raw)?;
        if !report.is_ok() {
            return Err(Error::Laws {
                what: format!("category `{}`", raw.name),
                report,
            });
        }
        let mut scratch = ValidationReport::new();
        let r = resolve_raw(raw, &mut scratch)?;
        let mut b = CatBuilder::new(raw.name.clone());
        let mut ids = vec![usize::MAX; r.morphisms.len()];
        let id_set: HashMap<usize, usize> = r
            .identity
            .iter()
            .enumerate()
            .map(|(x, &m)| (m, x))
            .collect();
        for (x, o) in r.objects.iter().enumerate() {
            let m = r.identity[x];
            let ox = b.object_with_identity(o.clone(), r.morphisms[m].0.clone())?;
            ids[m] = b.identity(ox).0;
        }
        for (i, (name, d, c)) in r.morphisms.iter().enumerate() {
            if id_set.contains_key(&i) {
                continue;
            }
            ids[i] = b.morphism(name.clone(), ObjId(*d), ObjId(*c))?.0;
        }
        let mut back = vec![0; ids.len()];
        for (raw_i, &new_i) in ids.iter().enumerate() {
            back[new_i] = raw_i;
        }
        b.build_with(|g, f| r.table.get(&(back[g.0], back[f.0])).map(|&h| MorId(ids[h])))
    }

    /// The raw tables that rebuild this category: non-identity morphisms
    /// and their non-identity composites.
    pub fn to_raw(&self) -> RawCategory {
        let mut raw = RawCategory {
            name: self.name.clone(),
            objects: self.objects.clone(),
            ..RawCategory::default()
        };
        for x in self.objects() {
            let i = self.identity(x);
            if self.mor_name(i) != identity_name(self.obj_name(x)) {
                raw.morphisms.push((
                    self.mor_name(i).to_string(),
                    self.obj_name(x).to_string(),
                    self.obj_name(x).to_string(),
                ));
                raw.identities
                    .push((self.obj_name(x).to_string(), self.mor_name(i).to_string()));
            }
        }
        for m in self.morphisms() {
            if self.is_identity(m) {
                continue;
            }
            raw.morphisms.push((
                self.mor_name(m).to_string(),
                self.obj_name(self.dom(m)).to_string(),
                self.obj_name(self.cod(m)).to_string(),
            ));
        }
        for f in self.morphisms() {
            if self.is_identity(f) {
                continue;
            }
            for &g in self.outgoing(self.cod(f)) {
                if self.is_identity(g) {
                    continue;
                }
                raw.compose.push((
                    self.mor_name(g).to_string(),
                    self.mor_name(f).to_string(),
                    self.mor_name(self.comp(g, f)).to_string(),
                ));
            }
        }
        raw
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow() -> FinCat {
        let mut b = CatBuilder::new("A");
        let s = b.object("s").unwrap();
        let t = b.object("t").unwrap();
        b.morphism("f", s, t).unwrap();
        b.build_with(|_, _| None).unwrap()
    }

    #[test]
    fn identities_are_implicit() {
        let c = arrow();
        assert_eq!(c.num_morphisms(), 3);
        let f = c.expect_mor("f").unwrap();
        let s = c.expect_obj("s").unwrap();
        assert_eq!(c.mor_name(c.identity(s)), "id_s");
        assert_eq!(c.comp(f, c.identity(s)), f);
        assert_eq!(c.compose(f, f), None);
        assert!(c.check_laws().is_ok());
    }

    #[test]
    fn raw_round_trip() {
        let c = arrow();
        let back = FinCat::from_raw(&c.to_raw()).unwrap();
        assert!(back.same_tables(&c));
    }

    #[test]
    fn capacity_guards_objects() {
        assert!(Capacity::with_max_objects(2).check_objects("x", 3).is_err());
        assert!(Capacity::default().check_objects("x", 3).is_ok());
    }

    #[test]
    fn tuple_ids_join_with_commas() {
        assert_eq!(tuple_id(&["a", "b"]), "(a,b)");
        assert_eq!(identity_name("x"), "id_x");
    }
}

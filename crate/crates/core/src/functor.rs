//! Functors and natural transformations between finite categories.

use std::collections::HashMap;
use std::sync::Arc;

use crate::category::{FinCat, MorId, ObjId};
use crate::error::{Error, Result};
use crate::report::ValidationReport;

/// A law-checked functor given by its object and morphism tables.
#[derive(Clone, Debug, PartialEq)]
pub struct Functor {
    name: String,
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    obj_map: Vec<ObjId>,
    mor_map: Vec<MorId>,
}

/// Unvalidated functor tables. Identity morphisms may be omitted; they map
/// to the identity of the image object.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawFunctor {
    pub name: String,
    pub obj_map: Vec<(String, String)>,
    pub mor_map: Vec<(String, String)>,
}

fn functor_laws(
    source: &FinCat,
    target: &FinCat,
    obj_map: &[ObjId],
    mor_map: &[MorId],
) -> ValidationReport {
    let mut report = ValidationReport::new();
    for x in source.objects() {
        let fx = obj_map[x.0];
        let fid = mor_map[source.identity(x).0];
        if fid != target.identity(fx) {
            report.push(
                "identity",
                vec![source.mor_name(source.identity(x)).into(), target.mor_name(fid).into()],
                format!("identity mapped to non-identity on {}", target.obj_name(fx)),
            );
        }
    }
    let mut endpoints_ok = true;
    for m in source.morphisms() {
        let fm = mor_map[m.0];
        if target.dom(fm) != obj_map[source.dom(m).0] || target.cod(fm) != obj_map[source.cod(m).0] {
            endpoints_ok = false;
            report.push(
                "endpoints",
                vec![source.mor_name(m).into(), target.mor_name(fm).into()],
                "image morphism does not connect the image objects",
            );
        }
    }
    if !endpoints_ok {
        return report;
    }
    for f in source.morphisms() {
        for &g in source.outgoing(source.cod(f)) {
            let lhs = mor_map[source.comp(g, f).0];
            let rhs = target.comp(mor_map[g.0], mor_map[f.0]);
            if lhs != rhs {
                report.push(
                    "composition",
                    vec![source.mor_name(g).into(), source.mor_name(f).into()],
                    format!(
                        "F(g.f) = {} but F(g).F(f) = {}",
                        target.mor_name(lhs),
                        target.mor_name(rhs)
                    ),
                );
            }
        }
    }
    report
}

fn resolve_functor(
    source: &FinCat,
    target: &FinCat,
    raw: &RawFunctor,
) -> Result<(Vec<ObjId>, Vec<MorId>)> {
    let mut obj_map = vec![None; source.num_objects()];
    for (a, b) in &raw.obj_map {
        let x = source.expect_obj(a)?;
        let y = target.expect_obj(b)?;
        if obj_map[x.0].replace(y).is_some() {
            return Err(Error::duplicate("object mapping for", a));
        }
    }
    let obj_map = obj_map
        .into_iter()
        .enumerate()
        .map(|(i, y)| {
            y.ok_or_else(|| {
                Error::Structural(format!(
                    "functor `{}` does not map object `{}`",
                    raw.name,
                    source.obj_name(ObjId(i))
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut mor_map = vec![None; source.num_morphisms()];
    for (a, b) in &raw.mor_map {
        let m = source.expect_mor(a)?;
        let n = target.expect_mor(b)?;
        if mor_map[m.0].replace(n).is_some() {
            return Err(Error::duplicate("morphism mapping for", a));
        }
    }
    let mor_map = mor_map
        .into_iter()
        .enumerate()
        .map(|(i, n)| {
            let m = MorId(i);
            match n {
                Some(n) => Ok(n),
                None if source.is_identity(m) => {
                    Ok(target.identity(obj_map[source.dom(m).0]))
                }
                None => Err(Error::Structural(format!(
                    "functor `{}` does not map morphism `{}`",
                    raw.name,
                    source.mor_name(m)
                ))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((obj_map, mor_map))
}

/// Validate raw functor tables against their source and target.
pub fn check_functor(source: &FinCat, target: &FinCat, raw: &RawFunctor) -> Result<ValidationReport> {
    let (obj_map, mor_map) = resolve_functor(source, target, raw)?;
    Ok(functor_laws(source, target, &obj_map, &mor_map))
}

impl Functor {
    pub fn new(
        name: impl Into<String>,
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Result<Functor> {
        let name = name.into();
        if obj_map.len() != source.num_objects() || mor_map.len() != source.num_morphisms() {
            return Err(Error::Structural(format!(
                "functor `{name}` tables are not total on `{}`",
                source.name()
            )));
        }
        let report = functor_laws(&source, &target, &obj_map, &mor_map);
        if !report.is_ok() {
            return Err(Error::Laws {
                what: format!("functor `{name}`"),
                report,
            });
        }
        Ok(Functor {
            name,
            source,
            target,
            obj_map,
            mor_map,
        })
    }

    pub(crate) fn new_unchecked(
        name: impl Into<String>,
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        obj_map: Vec<ObjId>,
        mor_map: Vec<MorId>,
    ) -> Functor {
        Functor {
            name: name.into(),
            source,
            target,
            obj_map,
            mor_map,
        }
    }

    pub fn from_raw(source: Arc<FinCat>, target: Arc<FinCat>, raw: &RawFunctor) -> Result<Functor> {
        let (obj_map, mor_map) = resolve_functor(&source, &target, raw)?;
        Functor::new(raw.name.clone(), source, target, obj_map, mor_map)
    }

    pub fn to_raw(&self) -> RawFunctor {
        let s = &self.source;
        let t = &self.target;
        RawFunctor {
            name: self.name.clone(),
            obj_map: s
                .objects()
                .map(|x| (s.obj_name(x).to_string(), t.obj_name(self.obj(x)).to_string()))
                .collect(),
            mor_map: s
                .morphisms()
                .filter(|&m| !s.is_identity(m))
                .map(|m| (s.mor_name(m).to_string(), t.mor_name(self.mor(m)).to_string()))
                .collect(),
        }
    }

    pub fn identity(cat: Arc<FinCat>) -> Functor {
        let obj_map = cat.objects().collect();
        let mor_map = cat.morphisms().collect();
        Functor::new_unchecked(format!("id_{}", cat.name()), cat.clone(), cat, obj_map, mor_map)
    }

    /// The functor collapsing `source` onto `x` and its identity.
    pub fn constant(source: Arc<FinCat>, target: Arc<FinCat>, x: ObjId) -> Functor {
        let obj_map = vec![x; source.num_objects()];
        let mor_map = vec![target.identity(x); source.num_morphisms()];
        let name = format!("const_{}", target.obj_name(x));
        Functor::new_unchecked(name, source, target, obj_map, mor_map)
    }

    /// `other . self`.
    pub fn then(&self, other: &Functor) -> Result<Functor> {
        if !Arc::ptr_eq(&self.target, &other.source) && !self.target.same_tables(&other.source) {
            return Err(Error::Shape(format!(
                "cannot compose `{}` with `{}`: target and source differ",
                self.name, other.name
            )));
        }
        let obj_map = self.obj_map.iter().map(|&y| other.obj(y)).collect();
        let mor_map = self.mor_map.iter().map(|&m| other.mor(m)).collect();
        Ok(Functor::new_unchecked(
            format!("{}_o_{}", other.name, self.name),
            self.source.clone(),
            other.target.clone(),
            obj_map,
            mor_map,
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Functor {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x.0]
    }

    pub fn mor(&self, m: MorId) -> MorId {
        self.mor_map[m.0]
    }

    pub fn obj_map(&self) -> &[ObjId] {
        &self.obj_map
    }

    pub fn mor_map(&self) -> &[MorId] {
        &self.mor_map
    }

    pub fn check_laws(&self) -> ValidationReport {
        functor_laws(&self.source, &self.target, &self.obj_map, &self.mor_map)
    }

    pub fn is_injective_on_objects(&self) -> bool {
        let mut seen = vec![false; self.target.num_objects()];
        self.obj_map.iter().all(|y| !std::mem::replace(&mut seen[y.0], true))
    }

    /// Pair of distinct objects with the same image, if any.
    pub fn object_collision(&self) -> Option<(ObjId, ObjId)> {
        let mut seen: HashMap<ObjId, ObjId> = HashMap::new();
        for x in self.source.objects() {
            if let Some(&prev) = seen.get(&self.obj(x)) {
                return Some((prev, x));
            }
            seen.insert(self.obj(x), x);
        }
        None
    }

    /// Same source, target and tables.
    pub fn same_tables(&self, other: &Functor) -> bool {
        self.obj_map == other.obj_map
            && self.mor_map == other.mor_map
            && self.source.same_tables(&other.source)
            && self.target.same_tables(&other.target)
    }
}

/// A natural transformation between two parallel functors.
#[derive(Clone, Debug, PartialEq)]
pub struct NatTransform {
    from: Functor,
    to: Functor,
    components: Vec<MorId>,
}

fn naturality_report(from: &Functor, to: &Functor, components: &[MorId]) -> ValidationReport {
    let mut report = ValidationReport::new();
    let s = from.source();
    let t = from.target();
    for x in s.objects() {
        let c = components[x.0];
        if t.dom(c) != from.obj(x) || t.cod(c) != to.obj(x) {
            report.push(
                "component-endpoints",
                vec![s.obj_name(x).into(), t.mor_name(c).into()],
                "component does not run from F(x) to H(x)",
            );
        }
    }
    if !report.is_ok() {
        return report;
    }
    for j in s.morphisms() {
        let (x, y) = (s.dom(j), s.cod(j));
        let lhs = t.comp(to.mor(j), components[x.0]);
        let rhs = t.comp(components[y.0], from.mor(j));
        if lhs != rhs {
            report.push(
                "naturality",
                vec![s.mor_name(j).into(), t.mor_name(lhs).into(), t.mor_name(rhs).into()],
                "H(j).a_x != a_y.F(j)",
            );
        }
    }
    report
}

impl NatTransform {
    pub fn new(from: Functor, to: Functor, components: Vec<MorId>) -> Result<NatTransform> {
        if !from.source().same_tables(to.source()) || !from.target().same_tables(to.target()) {
            return Err(Error::Shape(format!(
                "`{}` and `{}` are not parallel",
                from.name(),
                to.name()
            )));
        }
        if components.len() != from.source().num_objects() {
            return Err(Error::Structural("one component per object required".into()));
        }
        let report = naturality_report(&from, &to, &components);
        if !report.is_ok() {
            return Err(Error::Laws {
                what: format!("transformation {} => {}", from.name(), to.name()),
                report,
            });
        }
        Ok(NatTransform {
            from,
            to,
            components,
        })
    }

    pub fn identity(f: &Functor) -> NatTransform {
        let components = f
            .source()
            .objects()
            .map(|x| f.target().identity(f.obj(x)))
            .collect();
        NatTransform {
            from: f.clone(),
            to: f.clone(),
            components,
        }
    }

    pub fn from(&self) -> &Functor {
        &self.from
    }

    pub fn to(&self) -> &Functor {
        &self.to
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn check(&self) -> ValidationReport {
        naturality_report(&self.from, &self.to, &self.components)
    }

    /// Vertical composite `other . self`.
    pub fn then(&self, other: &NatTransform) -> Result<NatTransform> {
        if self.to.obj_map() != other.from.obj_map() || self.to.mor_map() != other.from.mor_map() {
            return Err(Error::Shape("transformations are not composable".into()));
        }
        let t = self.from.target();
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(&a, &b)| t.comp(b, a))
            .collect();
        Ok(NatTransform {
            from: self.from.clone(),
            to: other.to.clone(),
            components,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::shapes::{chain, shape};

    #[test]
    fn identity_composes_to_itself() {
        let c = chain(3);
        let id = Functor::identity(c.clone());
        assert!(id.then(&id).unwrap().same_tables(&id));
        assert!(id.check_laws().is_ok());
    }

    #[test]
    fn constant_functor_is_lawful() {
        let c = chain(3);
        let k = Functor::constant(shape("parallel").unwrap(), c.clone(), ObjId(1));
        assert!(k.check_laws().is_ok());
        assert_eq!(k.object_collision(), Some((ObjId(0), ObjId(1))));
    }

    #[test]
    fn identity_transformation_is_natural() {
        let f = Functor::identity(chain(2));
        assert!(NatTransform::identity(&f).check().is_ok());
    }
}

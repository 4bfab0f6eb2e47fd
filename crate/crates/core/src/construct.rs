//! Constructions on finite categories: opposites, products, subcategories
//! and functor categories.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::category::{identity_name, tuple_id, Capacity, CatBuilder, FinCat, MorId, ObjId};
use crate::error::{Error, Result};
use crate::functor::Functor;

/// Opposite category: same ids, endpoints swapped, composition reversed.
pub fn opposite(c: &FinCat) -> FinCat {
    let name = match c.name().strip_suffix("_op") {
        Some(base) => base.to_string(),
        None => format!("{}_op", c.name()),
    };
    let mut b = CatBuilder::new(name);
    for x in c.objects() {
        b.object_with_identity(c.obj_name(x), c.mor_name(c.identity(x)))
            .expect("source ids are unique");
    }
    for m in c.morphisms().filter(|&m| !c.is_identity(m)) {
        b.morphism(c.mor_name(m), c.cod(m), c.dom(m))
            .expect("source ids are unique");
    }
    // Morphism indices are preserved because identities come first in
    // every category built here; fall back to a name lookup otherwise.
    let remap: Vec<MorId> = c
        .morphisms()
        .map(|m| b.mor(c.mor_name(m)).expect("copied above"))
        .collect();
    let mut back = vec![MorId(0); remap.len()];
    for (i, &m) in remap.iter().enumerate() {
        back[m.0] = MorId(i);
    }
    b.build_with(|g, f| c.compose(back[f.0], back[g.0]).map(|h| remap[h.0]))
        .expect("opposite of a valid category is valid")
}

/// `X x A` with componentwise composition and both projections.
#[derive(Clone, Debug)]
pub struct ProductCategory {
    cat: Arc<FinCat>,
    left: Arc<FinCat>,
    right: Arc<FinCat>,
    obj_pairs: Vec<(ObjId, ObjId)>,
    mor_pairs: Vec<(MorId, MorId)>,
    obj_lookup: Vec<ObjId>,
    mor_lookup: Vec<MorId>,
}

impl ProductCategory {
    pub fn cat(&self) -> &Arc<FinCat> {
        &self.cat
    }

    pub fn left(&self) -> &Arc<FinCat> {
        &self.left
    }

    pub fn right(&self) -> &Arc<FinCat> {
        &self.right
    }

    pub fn obj_pair(&self, x: ObjId, a: ObjId) -> ObjId {
        self.obj_lookup[x.0 * self.right.num_objects() + a.0]
    }

    pub fn mor_pair(&self, f: MorId, g: MorId) -> MorId {
        self.mor_lookup[f.0 * self.right.num_morphisms() + g.0]
    }

    pub fn obj_components(&self, o: ObjId) -> (ObjId, ObjId) {
        self.obj_pairs[o.0]
    }

    pub fn mor_components(&self, m: MorId) -> (MorId, MorId) {
        self.mor_pairs[m.0]
    }

    pub fn proj_left(&self) -> Functor {
        Functor::new_unchecked(
            format!("pi1_{}", self.cat.name()),
            self.cat.clone(),
            self.left.clone(),
            self.obj_pairs.iter().map(|p| p.0).collect(),
            self.mor_pairs.iter().map(|p| p.0).collect(),
        )
    }

    pub fn proj_right(&self) -> Functor {
        Functor::new_unchecked(
            format!("pi2_{}", self.cat.name()),
            self.cat.clone(),
            self.right.clone(),
            self.obj_pairs.iter().map(|p| p.1).collect(),
            self.mor_pairs.iter().map(|p| p.1).collect(),
        )
    }

    /// The pairing `<F, G>: C -> X x A` of two functors out of `C`.
    pub fn pairing(&self, f: &Functor, g: &Functor) -> Result<Functor> {
        if !f.source().same_tables(g.source()) {
            return Err(Error::Shape("pairing needs functors with one source".into()));
        }
        if !f.target().same_tables(&self.left) || !g.target().same_tables(&self.right) {
            return Err(Error::Shape("pairing targets do not match the product".into()));
        }
        let s = f.source();
        Ok(Functor::new_unchecked(
            format!("pair_{}_{}", f.name(), g.name()),
            s.clone(),
            self.cat.clone(),
            s.objects().map(|x| self.obj_pair(f.obj(x), g.obj(x))).collect(),
            s.morphisms().map(|m| self.mor_pair(f.mor(m), g.mor(m))).collect(),
        ))
    }

    /// The swap functor `X x A -> A x X` into `other`, which must be the
    /// product with the factors reversed.
    pub fn swap_into(&self, other: &ProductCategory) -> Result<Functor> {
        if !self.left.same_tables(&other.right) || !self.right.same_tables(&other.left) {
            return Err(Error::Shape("swap target must have the factors reversed".into()));
        }
        Ok(Functor::new_unchecked(
            "swap",
            self.cat.clone(),
            other.cat.clone(),
            self.obj_pairs.iter().map(|&(x, a)| other.obj_pair(a, x)).collect(),
            self.mor_pairs.iter().map(|&(f, g)| other.mor_pair(g, f)).collect(),
        ))
    }
}

pub fn product_category(x: &Arc<FinCat>, a: &Arc<FinCat>) -> ProductCategory {
    let mut b = CatBuilder::new(format!("{}_x_{}", x.name(), a.name()));
    let (nxo, nao) = (x.num_objects(), a.num_objects());
    let mut obj_pairs = Vec::with_capacity(nxo * nao);
    let mut obj_lookup = Vec::with_capacity(nxo * nao);
    for xo in x.objects() {
        for ao in a.objects() {
            let name = tuple_id(&[x.obj_name(xo), a.obj_name(ao)]);
            let o = b.object(name).expect("pairs of unique ids are unique");
            obj_pairs.push((xo, ao));
            obj_lookup.push(o);
        }
    }
    let nam = a.num_morphisms();
    let mut mor_lookup = vec![MorId(0); x.num_morphisms() * nam];
    for f in x.morphisms() {
        for g in a.morphisms() {
            let dom = obj_lookup[x.dom(f).0 * nao + a.dom(g).0];
            let m = if x.is_identity(f) && a.is_identity(g) {
                b.identity(dom)
            } else {
                let cod = obj_lookup[x.cod(f).0 * nao + a.cod(g).0];
                let name = tuple_id(&[x.mor_name(f), a.mor_name(g)]);
                b.morphism(name, dom, cod).expect("pairs of unique ids are unique")
            };
            mor_lookup[f.0 * nam + g.0] = m;
        }
    }
    let mut mor_pairs = vec![(MorId(0), MorId(0)); mor_lookup.len()];
    for f in x.morphisms() {
        for g in a.morphisms() {
            mor_pairs[mor_lookup[f.0 * nam + g.0].0] = (f, g);
        }
    }
    let cat = b
        .build_with(|q, p| {
            let (p1, p2) = mor_pairs[p.0];
            let (q1, q2) = mor_pairs[q.0];
            Some(mor_lookup[x.comp(q1, p1).0 * nam + a.comp(q2, p2).0])
        })
        .expect("componentwise composition is total");
    ProductCategory {
        cat: Arc::new(cat),
        left: x.clone(),
        right: a.clone(),
        obj_pairs,
        mor_pairs,
        obj_lookup,
        mor_lookup,
    }
}

/// Subcategory on the given objects and morphisms (identities of the
/// objects are always included), with its inclusion functor. Fails with the
/// witnessing pair when the morphisms are not closed under composition.
pub fn subcategory(
    parent: &Arc<FinCat>,
    name: impl Into<String>,
    objects: &[ObjId],
    morphisms: &[MorId],
) -> Result<(Arc<FinCat>, Functor)> {
    let obj_set: HashSet<ObjId> = objects.iter().copied().collect();
    let mut mor_set: HashSet<MorId> = morphisms.iter().copied().collect();
    for &x in objects {
        mor_set.insert(parent.identity(x));
    }
    for &m in &mor_set {
        if !obj_set.contains(&parent.dom(m)) || !obj_set.contains(&parent.cod(m)) {
            return Err(Error::Precondition(format!(
                "morphism `{}` leaves the chosen objects",
                parent.mor_name(m)
            )));
        }
    }
    let mut objs: Vec<ObjId> = obj_set.iter().copied().collect();
    objs.sort();
    let mut mors: Vec<MorId> = mor_set.iter().copied().collect();
    mors.sort();
    for &f in &mors {
        for &g in parent.outgoing(parent.cod(f)) {
            if mor_set.contains(&g) && !mor_set.contains(&parent.comp(g, f)) {
                return Err(Error::Precondition(format!(
                    "not closed under composition: {} . {} = {} is missing",
                    parent.mor_name(g),
                    parent.mor_name(f),
                    parent.mor_name(parent.comp(g, f))
                )));
            }
        }
    }
    let mut b = CatBuilder::new(name);
    let mut obj_new = HashMap::new();
    for &x in &objs {
        let o = b.object_with_identity(parent.obj_name(x), parent.mor_name(parent.identity(x)))?;
        obj_new.insert(x, o);
    }
    let mut mor_new: HashMap<MorId, MorId> = HashMap::new();
    for &x in &objs {
        mor_new.insert(parent.identity(x), b.identity(obj_new[&x]));
    }
    for &m in &mors {
        if parent.is_identity(m) {
            continue;
        }
        let nm = b.morphism(parent.mor_name(m), obj_new[&parent.dom(m)], obj_new[&parent.cod(m)])?;
        mor_new.insert(m, nm);
    }
    let mut old = vec![MorId(0); mor_new.len()];
    for (&o, &n) in &mor_new {
        old[n.0] = o;
    }
    let sub = Arc::new(b.build_with(|g, f| mor_new.get(&parent.comp(old[g.0], old[f.0])).copied())?);
    let inclusion = Functor::new_unchecked(
        format!("incl_{}", sub.name()),
        sub.clone(),
        parent.clone(),
        sub.objects().map(|o| parent.expect_obj(sub.obj_name(o)).expect("copied")).collect(),
        old,
    );
    Ok((sub, inclusion))
}

/// Full subcategory on `objects`.
pub fn full_subcategory(
    parent: &Arc<FinCat>,
    name: impl Into<String>,
    objects: &[ObjId],
) -> Result<(Arc<FinCat>, Functor)> {
    let mut mors = Vec::new();
    for &x in objects {
        for &y in objects {
            mors.extend_from_slice(parent.hom(x, y));
        }
    }
    subcategory(parent, name, objects, &mors)
}

/// The image of a functor that is injective on objects, as a subcategory of
/// its target. Closure of the image under composition is checked.
pub fn image_subcategory(f: &Functor) -> Result<(Arc<FinCat>, Functor)> {
    if let Some((x, y)) = f.object_collision() {
        let s = f.source();
        return Err(Error::Precondition(format!(
            "`{}` is not injective on objects: {} and {} both map to {}",
            f.name(),
            s.obj_name(x),
            s.obj_name(y),
            f.target().obj_name(f.obj(x))
        )));
    }
    let objs: Vec<ObjId> = f.obj_map().to_vec();
    let mors: Vec<MorId> = f.mor_map().to_vec();
    subcategory(f.target(), format!("Im_{}", f.name()), &objs, &mors)
}

/// All functors `D -> C` and all natural transformations between them.
#[derive(Clone, Debug)]
pub struct FunctorCategory {
    cat: Arc<FinCat>,
    functors: Vec<Functor>,
    components: Vec<Vec<MorId>>,
}

impl FunctorCategory {
    pub fn cat(&self) -> &Arc<FinCat> {
        &self.cat
    }

    /// The functor an object stands for.
    pub fn functor(&self, o: ObjId) -> &Functor {
        &self.functors[o.0]
    }

    pub fn functors(&self) -> &[Functor] {
        &self.functors
    }

    /// Components of the natural transformation a morphism stands for,
    /// indexed by the objects of the diagram shape.
    pub fn components(&self, m: MorId) -> &[MorId] {
        &self.components[m.0]
    }

    pub fn find_functor(&self, f: &Functor) -> Option<ObjId> {
        self.functors
            .iter()
            .position(|g| g.obj_map() == f.obj_map() && g.mor_map() == f.mor_map())
            .map(ObjId)
    }
}

/// Enumerate every functor `D -> C` by backtracking, object images first.
pub fn enumerate_functors(d: &Arc<FinCat>, c: &Arc<FinCat>, cap: Capacity) -> Result<Vec<Functor>> {
    let nd = d.num_objects();
    let gens: Vec<MorId> = d.morphisms().filter(|&m| !d.is_identity(m)).collect();
    let mut out = Vec::new();
    let mut obj_map = vec![ObjId(0); nd];
    if nd > 0 && c.num_objects() == 0 {
        return Ok(out);
    }
    loop {
        let mut mor_map: Vec<Option<MorId>> = vec![None; d.num_morphisms()];
        for x in d.objects() {
            mor_map[d.identity(x).0] = Some(c.identity(obj_map[x.0]));
        }
        extend_functor(d, c, &gens, 0, &obj_map, &mut mor_map, &mut out, cap)?;
        // odometer, first object most significant
        let mut i = nd;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            obj_map[i].0 += 1;
            if obj_map[i].0 < c.num_objects() {
                break;
            }
            obj_map[i] = ObjId(0);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn extend_functor(
    d: &Arc<FinCat>,
    c: &Arc<FinCat>,
    gens: &[MorId],
    k: usize,
    obj_map: &[ObjId],
    mor_map: &mut Vec<Option<MorId>>,
    out: &mut Vec<Functor>,
    cap: Capacity,
) -> Result<()> {
    if k == gens.len() {
        cap.check_objects("functor category", out.len() + 1)?;
        let mm: Vec<MorId> = mor_map.iter().map(|m| m.expect("all assigned")).collect();
        let mut parts: Vec<&str> = obj_map.iter().map(|&y| c.obj_name(y)).collect();
        parts.extend(gens.iter().map(|&g| c.mor_name(mm[g.0])));
        out.push(Functor::new_unchecked(
            tuple_id(&parts),
            d.clone(),
            c.clone(),
            obj_map.to_vec(),
            mm,
        ));
        return Ok(());
    }
    let m = gens[k];
    let (x, y) = (obj_map[d.dom(m).0], obj_map[d.cod(m).0]);
    for &cand in c.hom(x, y) {
        mor_map[m.0] = Some(cand);
        if composition_consistent(d, c, m, mor_map) {
            extend_functor(d, c, gens, k + 1, obj_map, mor_map, out, cap)?;
        }
    }
    mor_map[m.0] = None;
    Ok(())
}

fn composition_consistent(d: &FinCat, c: &FinCat, m: MorId, mor_map: &[Option<MorId>]) -> bool {
    let check = |g: MorId, f: MorId| -> bool {
        let (Some(gi), Some(fi), Some(hi)) = (mor_map[g.0], mor_map[f.0], mor_map[d.comp(g, f).0])
        else {
            return true;
        };
        c.comp(gi, fi) == hi
    };
    for &g in d.outgoing(d.cod(m)) {
        if !check(g, m) {
            return false;
        }
    }
    for &f in d.incoming(d.dom(m)) {
        if !check(m, f) {
            return false;
        }
    }
    // m as the composite of some pair
    for f in d.morphisms() {
        for &g in d.outgoing(d.cod(f)) {
            if d.comp(g, f) == m && !check(g, f) {
                return false;
            }
        }
    }
    true
}

fn enumerate_transformations(d: &FinCat, c: &FinCat, from: &Functor, to: &Functor) -> Vec<Vec<MorId>> {
    let nd = d.num_objects();
    let mut out = Vec::new();
    let mut comps: Vec<Option<MorId>> = vec![None; nd];
    fn go(
        d: &FinCat,
        c: &FinCat,
        from: &Functor,
        to: &Functor,
        i: usize,
        comps: &mut Vec<Option<MorId>>,
        out: &mut Vec<Vec<MorId>>,
    ) {
        if i == comps.len() {
            out.push(comps.iter().map(|m| m.expect("assigned")).collect());
            return;
        }
        let x = ObjId(i);
        for &cand in c.hom(from.obj(x), to.obj(x)) {
            comps[i] = Some(cand);
            let natural = d.morphisms().all(|j| {
                let (s, t) = (d.dom(j), d.cod(j));
                if s.0 > i || t.0 > i {
                    return true;
                }
                let (Some(a), Some(b)) = (comps[s.0], comps[t.0]) else {
                    return true;
                };
                c.comp(to.mor(j), a) == c.comp(b, from.mor(j))
            });
            if natural {
                go(d, c, from, to, i + 1, comps, out);
            }
        }
        comps[i] = None;
    }
    go(d, c, from, to, 0, &mut comps, &mut out);
    out
}

/// The functor category `C^D`, fully enumerated.
pub fn functor_category(d: &Arc<FinCat>, c: &Arc<FinCat>, cap: Capacity) -> Result<FunctorCategory> {
    let functors = enumerate_functors(d, c, cap)?;
    let mut b = CatBuilder::new(format!("Fun_{}_{}", d.name(), c.name()));
    for f in &functors {
        b.object(f.name())?;
    }
    let mut index: HashMap<(usize, usize, Vec<MorId>), MorId> = HashMap::new();
    let mut components: Vec<Vec<MorId>> = Vec::new();
    let mut endpoints: Vec<(usize, usize)> = Vec::new();
    for (i, f) in functors.iter().enumerate() {
        let ids: Vec<MorId> = d.objects().map(|x| c.identity(f.obj(x))).collect();
        index.insert((i, i, ids.clone()), b.identity(ObjId(i)));
        components.push(ids);
        endpoints.push((i, i));
    }
    for (i, f) in functors.iter().enumerate() {
        for (j, g) in functors.iter().enumerate() {
            for comps in enumerate_transformations(d, c, f, g) {
                if i == j && index.contains_key(&(i, j, comps.clone())) {
                    continue;
                }
                cap.check_morphisms("functor category", b.num_morphisms() + 1)?;
                let mut parts = vec![f.name(), g.name()];
                parts.extend(comps.iter().map(|&m| c.mor_name(m)));
                let m = b.morphism(tuple_id(&parts), ObjId(i), ObjId(j))?;
                index.insert((i, j, comps.clone()), m);
                components.push(comps);
                endpoints.push((i, j));
            }
        }
    }
    debug_assert_eq!(components.len(), b.num_morphisms());
    let cat = b.build_with(|g, f| {
        let (a, _) = endpoints[f.0];
        let (_, z) = endpoints[g.0];
        let comps: Vec<MorId> = components[f.0]
            .iter()
            .zip(&components[g.0])
            .map(|(&p, &q)| c.comp(q, p))
            .collect();
        index.get(&(a, z, comps)).copied()
    })?;
    Ok(FunctorCategory {
        cat: Arc::new(cat),
        functors,
        components,
    })
}

/// The diagonal functor `C -> C x C`.
pub fn diagonal(p: &ProductCategory) -> Result<Functor> {
    if !p.left().same_tables(p.right()) {
        return Err(Error::Shape("diagonal needs a square product".into()));
    }
    let c = p.left();
    Ok(Functor::new_unchecked(
        format!("diag_{}", c.name()),
        c.clone(),
        p.cat().clone(),
        c.objects().map(|x| p.obj_pair(x, x)).collect(),
        c.morphisms().map(|m| p.mor_pair(m, m)).collect(),
    ))
}

/// Identity name check used by serializers: whether every identity follows
/// the `id_<object>` convention.
pub fn has_canonical_identities(c: &FinCat) -> bool {
    c.objects()
        .all(|x| c.mor_name(c.identity(x)) == identity_name(c.obj_name(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::concrete::finset;
    use crate::instances::shapes::{chain, shape};

    #[test]
    fn opposite_reverses_arrows() {
        let c = chain(2);
        let op = opposite(&c);
        let f = op.expect_mor("c0_c1").unwrap();
        assert_eq!(op.obj_name(op.dom(f)), "c1");
        assert!(op.check_laws().is_ok());
    }

    #[test]
    fn product_pairs_and_projections() {
        let p = product_category(&chain(2), &chain(2));
        assert_eq!(p.cat().num_objects(), 4);
        assert_eq!(p.cat().obj_name(p.obj_pair(ObjId(0), ObjId(1))), "(c0,c1)");
        let pair = p.pairing(&p.proj_left(), &p.proj_right()).unwrap();
        assert!(pair.same_tables(&Functor::identity(p.cat().clone())));
    }

    #[test]
    fn arrows_into_sets() {
        let s = finset(1).unwrap();
        let fc = functor_category(&shape("arrow").unwrap(), s.cat(), Capacity::default()).unwrap();
        // functions between sets of size <= 1: 1->1, 0->0, 0->1
        assert_eq!(fc.cat().num_objects(), 3);
        assert!(fc.cat().check_laws().is_ok());
    }
}

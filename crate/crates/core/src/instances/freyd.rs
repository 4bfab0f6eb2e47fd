//! Adjunctions whose functors are injective on objects, found by exhaustive
//! search over small preorders and monoids, and their factorization into a
//! reflection and a coreflection through the images of the two functors.

use std::sync::Arc;

use crate::adjunction::{check_adjunction, AdjunctionData};
use crate::category::{Capacity, CatBuilder, FinCat, MorId, ObjId};
use crate::construct::{enumerate_functors, image_subcategory};
use crate::error::{Error, Result};
use crate::functor::Functor;
use crate::report::CheckSuite;

/// The thin category of a preorder on `p0, .., p(n-1)`.
pub fn preorder_category(name: &str, leq: &[Vec<bool>]) -> Result<Arc<FinCat>> {
    let n = leq.len();
    let mut b = CatBuilder::new(name);
    let objs: Vec<ObjId> = (0..n).map(|i| b.object(format!("p{i}"))).collect::<Result<_>>()?;
    let mut arrow = vec![vec![None; n]; n];
    let mut ends = Vec::new();
    for i in 0..n {
        arrow[i][i] = Some(b.identity(objs[i]));
        ends.push((i, i));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && leq[i][j] {
                arrow[i][j] = Some(b.morphism(format!("p{i}_p{j}"), objs[i], objs[j])?);
                ends.push((i, j));
            }
        }
    }
    Ok(Arc::new(b.build_with(|g, f| arrow[ends[f.0].0][ends[g.0].1])?))
}

/// A monoid on `{0, .., n-1}` with unit `0` as a one-object category with
/// morphisms `id_o, m1, .., m(n-1)`; `g . f` is `g * f`.
pub fn monoid_category(name: &str, table: &[Vec<usize>]) -> Result<Arc<FinCat>> {
    if let Some(x) = (0..table.len()).find(|&x| table[0][x] != x || table[x][0] != x) {
        return Err(Error::Precondition(format!("0 is not a unit of `{name}`: fails at {x}")));
    }
    let mut b = CatBuilder::new(name);
    let o = b.object("o")?;
    let mut mors = vec![b.identity(o)];
    for i in 1..table.len() {
        mors.push(b.morphism(format!("m{i}"), o, o)?);
    }
    let c = b.build_with(|g, f| Some(mors[table[g.0][f.0]]))?;
    let report = c.check_laws();
    if !report.is_ok() {
        return Err(Error::Laws {
            what: format!("monoid `{name}`"),
            report,
        });
    }
    Ok(Arc::new(c))
}

/// Every reflexive transitive relation on `n` labeled points.
pub fn labeled_preorders(n: usize) -> Vec<Vec<Vec<bool>>> {
    let off: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for bits in 0u32..(1 << off.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            leq[i][j] = bits >> k & 1 == 1;
        }
        let transitive = (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq[i][j] && leq[j][k]) || leq[i][k])));
        if transitive {
            out.push(leq);
        }
    }
    out
}

/// Every associative multiplication on `{0, .., n-1}` with unit `0`.
pub fn labeled_monoids(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return Vec::new();
    }
    let free: Vec<(usize, usize)> = (1..n).flat_map(|a| (1..n).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    let total = n.pow(free.len() as u32);
    for code in 0..total {
        let mut t: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| if a == 0 { b } else { a }).collect()).collect();
        let mut c = code;
        for &(a, b) in &free {
            t[a][b] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|d| t[t[a][b]][d] == t[a][t[b][d]])));
        if assoc {
            out.push(t);
        }
    }
    out
}

/// One adjunction found by the search.
#[derive(Clone, Debug)]
pub struct FoundAdjunction {
    pub category: Arc<FinCat>,
    pub data: AdjunctionData,
}

impl FoundAdjunction {
    pub fn left_is_identity(&self) -> bool {
        is_identity(&self.data.left)
    }

    /// Not the identity adjunction with identity unit.
    pub fn is_nontrivial(&self) -> bool {
        let c = &self.category;
        !(is_identity(&self.data.left)
            && is_identity(&self.data.right)
            && self.data.phi.iter().enumerate().all(|(k, row)| {
                let (x, a) = (ObjId(k / c.num_objects()), ObjId(k % c.num_objects()));
                row.as_slice() == c.hom(x, a)
            }))
    }
}

fn is_identity(f: &Functor) -> bool {
    f.obj_map().iter().enumerate().all(|(i, o)| o.0 == i) && f.mor_map().iter().enumerate().all(|(i, m)| m.0 == i)
}

/// Outcome of the search with its bookkeeping.
#[derive(Clone, Debug)]
pub struct FreydSearch {
    pub bound: String,
    pub categories: usize,
    pub functor_pairs: usize,
    pub unit_candidates: usize,
    pub adjunctions: usize,
    pub nontrivial: usize,
    /// The chosen example: a nontrivial adjunction, with a non-identity
    /// left adjoint when one exists.
    pub example: Option<FoundAdjunction>,
}

fn search_in(c: &Arc<FinCat>, s: &mut FreydSearch, best: &mut Option<(u8, FoundAdjunction)>) -> Result<()> {
    let endos: Vec<Functor> = enumerate_functors(c, c, Capacity::default())?
        .into_iter()
        .filter(|f| f.object_collision().is_none())
        .collect();
    for f in &endos {
        for g in &endos {
            s.functor_pairs += 1;
            let choices: Vec<&[MorId]> = c.objects().map(|x| c.hom(x, g.obj(f.obj(x)))).collect();
            if choices.iter().any(|h| h.is_empty()) {
                continue;
            }
            let mut idx = vec![0usize; choices.len()];
            'units: loop {
                s.unit_candidates += 1;
                let unit: Vec<MorId> = idx.iter().zip(&choices).map(|(&i, h)| h[i]).collect();
                let data = AdjunctionData::from_unit(f.clone(), g.clone(), unit)?;
                if check_adjunction(&data)?.all_passed() {
                    s.adjunctions += 1;
                    let found = FoundAdjunction {
                        category: c.clone(),
                        data,
                    };
                    if found.is_nontrivial() {
                        s.nontrivial += 1;
                        let rank = if found.left_is_identity() { 1 } else { 2 };
                        if best.as_ref().is_none_or(|(r, _)| rank > *r) {
                            *best = Some((rank, found));
                        }
                    }
                }
                let mut k = idx.len();
                loop {
                    if k == 0 {
                        break 'units;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < choices[k].len() {
                        continue 'units;
                    }
                    idx[k] = 0;
                }
            }
        }
    }
    Ok(())
}

/// Search labeled preorders on at most `max_points` points and monoids of
/// order at most `max_order` for endo-adjunctions with both functors
/// injective on objects.
pub fn freyd_search(max_points: usize, max_order: usize) -> Result<FreydSearch> {
    let mut s = FreydSearch {
        bound: format!("preorders on <= {max_points} points, monoids of order <= {max_order}"),
        categories: 0,
        functor_pairs: 0,
        unit_candidates: 0,
        adjunctions: 0,
        nontrivial: 0,
        example: None,
    };
    let mut best = None;
    for n in 1..=max_points {
        for (i, leq) in labeled_preorders(n).iter().enumerate() {
            s.categories += 1;
            search_in(&preorder_category(&format!("Pre{n}_{i}"), leq)?, &mut s, &mut best)?;
        }
    }
    for n in 1..=max_order {
        for (i, t) in labeled_monoids(n).iter().enumerate() {
            s.categories += 1;
            search_in(&monoid_category(&format!("Mon{n}_{i}"), t)?, &mut s, &mut best)?;
        }
    }
    s.example = best.map(|(_, f)| f);
    Ok(s)
}

/// The reflection onto `Im(G)` and the coreflection onto `Im(F)` extracted
/// from an adjunction whose functors are injective on objects.
#[derive(Clone, Debug)]
pub struct FreydParse {
    /// `GF -| incl` between `X` and `Im(G)`.
    pub reflection: AdjunctionData,
    /// `incl -| FG` between `Im(F)` and `A`.
    pub coreflection: AdjunctionData,
    pub suite: CheckSuite,
}

fn corestrict(name: &str, f: &Functor, onto: &Arc<FinCat>) -> Result<Functor> {
    let (s, t) = (f.source(), f.target());
    let lookup = |n: &str, what: &str| Error::Precondition(format!("{what} `{n}` is outside `{}`", onto.name()));
    Functor::new(
        name,
        s.clone(),
        onto.clone(),
        s.objects()
            .map(|x| onto.obj(t.obj_name(f.obj(x))).ok_or_else(|| lookup(t.obj_name(f.obj(x)), "object")))
            .collect::<Result<_>>()?,
        s.morphisms()
            .map(|m| onto.mor(t.mor_name(f.mor(m))).ok_or_else(|| lookup(t.mor_name(f.mor(m)), "morphism")))
            .collect::<Result<_>>()?,
    )
}

pub fn freyd_parse(d: &AdjunctionData) -> Result<FreydParse> {
    let (f, g) = (&d.left, &d.right);
    let (x_cat, a_cat) = (f.source().clone(), f.target().clone());
    let (img_g, incl_g) = image_subcategory(g)?;
    let (img_f, incl_f) = image_subcategory(f)?;
    let gf = f.then(g)?;
    let fg = g.then(f)?;
    let l = corestrict(&format!("{}_refl", gf.name()), &gf, &img_g)?;
    let r = corestrict(&format!("{}_corefl", fg.name()), &fg, &img_f)?;
    let unit = |x: ObjId| -> MorId {
        let row = &d.phi[x.0 * a_cat.num_objects() + f.obj(x).0];
        row[a_cat.hom_pos(a_cat.identity(f.obj(x)))]
    };
    let phi = |x: ObjId, a: ObjId, k: MorId| d.phi[x.0 * a_cat.num_objects() + a.0][a_cat.hom_pos(k)];

    let reflection = AdjunctionData::from_fn(l, incl_g.clone(), |x, _, m| x_cat.comp(incl_g.mor(m), unit(x)));
    let preimage = |y: ObjId| -> ObjId {
        let target = incl_f.obj(y);
        x_cat.objects().find(|&x| f.obj(x) == target).expect("objects of Im(F) come from X")
    };
    let coreflection = AdjunctionData::from_fn(incl_f.clone(), r, |y, a, k| {
        let fx = f.mor(phi(preimage(y), a, k));
        img_f.expect_mor(a_cat.mor_name(fx)).expect("images of F lie in Im(F)")
    });

    let mut suite = CheckSuite::new();
    let sub = check_adjunction(&reflection)?;
    suite.record(
        "reflection",
        "reflective-image",
        sub.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect(),
    );
    let sub = check_adjunction(&coreflection)?;
    suite.record(
        "coreflection",
        "coreflective-image",
        sub.checks.iter().filter(|c| !c.passed).map(|c| c.name.clone()).collect(),
    );

    let mut chain_g = Vec::new();
    let mut chain_f = Vec::new();
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            let cell = format!("({},{})", x_cat.obj_name(x), a_cat.obj_name(a));
            let homs = a_cat.hom(f.obj(x), a);
            let gfx = img_g.expect_obj(x_cat.obj_name(g.obj(f.obj(x))))?;
            let ga = img_g.expect_obj(x_cat.obj_name(g.obj(a)))?;
            let mut images: Vec<MorId> = Vec::new();
            for &k in homs {
                let gk = img_g.expect_mor(x_cat.mor_name(g.mor(k)))?;
                if images.contains(&gk) {
                    chain_g.push(format!("{cell}: G identifies two morphisms Fx -> a"));
                }
                images.push(gk);
                if x_cat.comp(g.mor(k), unit(x)) != phi(x, a, k) {
                    chain_g.push(format!("{cell}: G{} . eta differs from phi", a_cat.mor_name(k)));
                }
            }
            if img_g.hom(gfx, ga).len() != homs.len() {
                chain_g.push(format!(
                    "{cell}: |Hom(GFx,Ga)| = {} but |Hom(Fx,a)| = {}",
                    img_g.hom(gfx, ga).len(),
                    homs.len()
                ));
            }
            let fx = img_f.expect_obj(a_cat.obj_name(f.obj(x)))?;
            let fga = img_f.expect_obj(a_cat.obj_name(f.obj(g.obj(a))))?;
            let homs_x = x_cat.hom(x, g.obj(a));
            let mut f_images: Vec<MorId> = Vec::new();
            for &m in homs_x {
                let fm = img_f.expect_mor(a_cat.mor_name(f.mor(m)))?;
                if f_images.contains(&fm) {
                    chain_f.push(format!("{cell}: F identifies two morphisms x -> Ga"));
                }
                f_images.push(fm);
            }
            if img_f.hom(fx, fga).len() != homs_x.len() || homs_x.len() != homs.len() {
                chain_f.push(format!(
                    "{cell}: |Hom(Fx,FGa)| = {}, |Hom(x,Ga)| = {}, |Hom(Fx,a)| = {}",
                    img_f.hom(fx, fga).len(),
                    homs_x.len(),
                    homs.len()
                ));
            }
        }
    }
    suite.record("hom-chain-reflection", "hom-chain", chain_g);
    suite.record("hom-chain-coreflection", "hom-chain", chain_f);
    Ok(FreydParse {
        reflection,
        coreflection,
        suite,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_small_structures() {
        assert_eq!(labeled_preorders(2).len(), 4);
        assert_eq!(labeled_preorders(3).len(), 29);
        assert_eq!(labeled_monoids(2).len(), 2);
        // Labeled monoids of order 3 with a fixed unit.
        assert_eq!(labeled_monoids(3).len(), 11);
    }

    #[test]
    fn identity_adjunction_parses() {
        let c = preorder_category("chain", &labeled_preorders(2)[1]).unwrap();
        let d = AdjunctionData::identity(&c);
        let p = freyd_parse(&d).unwrap();
        assert!(p.suite.all_passed(), "{}", p.suite);
    }
}

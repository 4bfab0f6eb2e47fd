//! Products, limits and colimits of finite sets as het-bifunctors, with
//! direct set-theoretic computations to compare against.

use std::collections::HashSet;
use std::sync::Arc;

use crate::category::{Capacity, FinCat, MorId, ObjId};
use crate::construct::{functor_category, product_category, FunctorCategory, ProductCategory};
use crate::error::{Error, Result};
use crate::functor::Functor;
use crate::het::HetBifunctor;
use crate::instances::concrete::{finset_with, ConcreteCat};

/// `Het(W, (X, Y))` = pairs of functions `W -> X`, `W -> Y`, from finite
/// sets of size at most `n*n` to pairs of sets of size at most `n`.
#[derive(Clone, Debug)]
pub struct ProductHet {
    pub het: Arc<HetBifunctor>,
    pub sets: ConcreteCat,
    pub small: ConcreteCat,
    pub pairs: ProductCategory,
}

fn embed(small: &ConcreteCat, big: &ConcreteCat, m: MorId) -> MorId {
    big.cat().expect_mor(small.cat().mor_name(m)).expect("small sets embed by name")
}

fn embed_obj(small: &ConcreteCat, big: &ConcreteCat, o: ObjId) -> ObjId {
    big.cat().expect_obj(small.cat().obj_name(o)).expect("small sets embed by name")
}

pub fn product_het(n: usize) -> Result<ProductHet> {
    product_het_with(n, Capacity::default())
}

pub fn product_het_with(n: usize, cap: Capacity) -> Result<ProductHet> {
    let sets = finset_with(n * n, cap)?;
    let small = finset_with(n, cap)?;
    let pairs = product_category(small.cat(), small.cat());
    let amb = sets.cat().clone();
    let p = pairs.cat();
    let source_images = amb.morphisms().map(|h| vec![h]).collect();
    let target_images = p
        .morphisms()
        .map(|m| {
            let (k1, k2) = pairs.mor_components(m);
            vec![embed(&small, &sets, k1), embed(&small, &sets, k2)]
        })
        .collect();
    let mut cells = Vec::new();
    for w in amb.objects() {
        for xy in p.objects() {
            let (x, y) = pairs.obj_components(xy);
            let (x, y) = (embed_obj(&small, &sets, x), embed_obj(&small, &sets, y));
            let mut cell = Vec::new();
            for &f in amb.hom(w, x) {
                for &g in amb.hom(w, y) {
                    cell.push(vec![f, g]);
                }
            }
            cells.push(cell);
        }
    }
    let het = HetBifunctor::from_ambient(
        format!("Cone_{n}"),
        amb.clone(),
        p.clone(),
        amb,
        source_images,
        target_images,
        cells,
    )?;
    Ok(ProductHet {
        het: Arc::new(het),
        sets,
        small,
        pairs,
    })
}

/// Cones over diagrams of shape `D` in sets of size at most `n`, with
/// apexes among sets of size at most `n*n`: `Het(W, D)`.
#[derive(Clone, Debug)]
pub struct LimitHet {
    pub het: Arc<HetBifunctor>,
    pub sets: ConcreteCat,
    pub small: ConcreteCat,
    pub shape: Arc<FinCat>,
    pub diagrams: FunctorCategory,
}

/// Cocones under diagrams of shape `D`: `Het(D, Z)`.
#[derive(Clone, Debug)]
pub struct ColimitHet {
    pub het: Arc<HetBifunctor>,
    pub sets: ConcreteCat,
    pub small: ConcreteCat,
    pub shape: Arc<FinCat>,
    pub diagrams: FunctorCategory,
}

/// All tuples `(c_i)` with `c_i` drawn from `choices[i]`, in odometer order.
fn tuples(choices: &[Vec<MorId>]) -> Vec<Vec<MorId>> {
    let mut out = vec![Vec::new()];
    for opts in choices {
        let mut next = Vec::with_capacity(out.len() * opts.len());
        for t in &out {
            for &o in opts {
                let mut t2 = t.clone();
                t2.push(o);
                next.push(t2);
            }
        }
        out = next;
    }
    out
}

fn diagrams(shape: &Arc<FinCat>, small: &ConcreteCat, cap: Capacity) -> Result<FunctorCategory> {
    functor_category(shape, small.cat(), cap)
}

pub fn limit_het(shape: &Arc<FinCat>, n: usize) -> Result<LimitHet> {
    limit_het_with(shape, n, Capacity::default())
}

pub fn limit_het_with(shape: &Arc<FinCat>, n: usize, cap: Capacity) -> Result<LimitHet> {
    let sets = finset_with(n * n, cap)?;
    let small = finset_with(n, cap)?;
    let diagrams = diagrams(shape, &small, cap)?;
    let amb = sets.cat().clone();
    let dc = diagrams.cat().clone();
    let arrows: Vec<MorId> = shape.morphisms().filter(|&m| !shape.is_identity(m)).collect();
    let source_images = amb.morphisms().map(|h| vec![h]).collect();
    let target_images = dc
        .morphisms()
        .map(|t| diagrams.components(t).iter().map(|&c| embed(&small, &sets, c)).collect())
        .collect();
    let mut cells = Vec::with_capacity(amb.num_objects() * dc.num_objects());
    for w in amb.objects() {
        for d in dc.objects() {
            let f = diagrams.functor(d);
            let choices: Vec<Vec<MorId>> = shape
                .objects()
                .map(|i| amb.hom(w, embed_obj(&small, &sets, f.obj(i))).to_vec())
                .collect();
            let cell = tuples(&choices)
                .into_iter()
                .filter(|c| {
                    arrows.iter().all(|&a| {
                        let (i, j) = (shape.dom(a), shape.cod(a));
                        amb.comp(embed(&small, &sets, f.mor(a)), c[i.0]) == c[j.0]
                    })
                })
                .collect();
            cells.push(cell);
        }
    }
    let het = HetBifunctor::from_ambient(
        format!("Cone_{}_{n}", shape.name()),
        amb.clone(),
        dc,
        amb,
        source_images,
        target_images,
        cells,
    )?;
    Ok(LimitHet {
        het: Arc::new(het),
        sets,
        small,
        shape: shape.clone(),
        diagrams,
    })
}

pub fn colimit_het(shape: &Arc<FinCat>, n: usize) -> Result<ColimitHet> {
    colimit_het_with(shape, n, Capacity::default())
}

pub fn colimit_het_with(shape: &Arc<FinCat>, n: usize, cap: Capacity) -> Result<ColimitHet> {
    let sets = finset_with(n * n, cap)?;
    let small = finset_with(n, cap)?;
    let diagrams = diagrams(shape, &small, cap)?;
    let amb = sets.cat().clone();
    let dc = diagrams.cat().clone();
    let arrows: Vec<MorId> = shape.morphisms().filter(|&m| !shape.is_identity(m)).collect();
    let source_images = dc
        .morphisms()
        .map(|t| diagrams.components(t).iter().map(|&c| embed(&small, &sets, c)).collect())
        .collect();
    let target_images = amb.morphisms().map(|h| vec![h]).collect();
    let mut cells = Vec::with_capacity(amb.num_objects() * dc.num_objects());
    for d in dc.objects() {
        let f = diagrams.functor(d);
        for z in amb.objects() {
            let choices: Vec<Vec<MorId>> = shape
                .objects()
                .map(|i| amb.hom(embed_obj(&small, &sets, f.obj(i)), z).to_vec())
                .collect();
            let cell = tuples(&choices)
                .into_iter()
                .filter(|c| {
                    arrows.iter().all(|&a| {
                        let (i, j) = (shape.dom(a), shape.cod(a));
                        amb.comp(c[j.0], embed(&small, &sets, f.mor(a))) == c[i.0]
                    })
                })
                .collect();
            cells.push(cell);
        }
    }
    let het = HetBifunctor::from_ambient(
        format!("Cocone_{}_{n}", shape.name()),
        dc,
        amb.clone(),
        amb,
        source_images,
        target_images,
        cells,
    )?;
    Ok(ColimitHet {
        het: Arc::new(het),
        sets,
        small,
        shape: shape.clone(),
        diagrams,
    })
}

/// The limit of a diagram of finite sets computed directly: the compatible
/// families `(x_i)` with `D(a)(x_i) = x_j` for every arrow `a: i -> j`.
pub fn limit_oracle(small: &ConcreteCat, diagram: &Functor) -> Vec<Vec<usize>> {
    let shape = diagram.source();
    let sizes: Vec<usize> = shape.objects().map(|i| small.carrier(diagram.obj(i))).collect();
    let mut out = vec![Vec::new()];
    for &s in &sizes {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (0..s).map(move |v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
    }
    out.retain(|t| {
        shape
            .morphisms()
            .filter(|&a| !shape.is_identity(a))
            .all(|a| small.apply(diagram.mor(a), t[shape.dom(a).0]) == t[shape.cod(a).0])
    });
    out
}

/// Union-find over the disjoint union of a diagram's sets.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Start of each shape object's block in the disjoint union.
    pub offsets: Vec<usize>,
    /// Class index of every element of the disjoint union.
    pub class: Vec<usize>,
    pub num_classes: usize,
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Partition `0..n` by the equivalence generated by `pairs`, numbering the
/// classes in order of their least element.
pub fn classes(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> (Vec<usize>, usize) {
    let mut parent: Vec<usize> = (0..n).collect();
    for (a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut class = vec![0; n];
    let mut next = 0;
    for i in 0..n {
        let r = find(&mut parent, i);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        class[i] = label[r];
    }
    (class, next)
}

/// The colimit computed directly: the disjoint union modulo `x ~ D(a)(x)`.
pub fn colimit_oracle(small: &ConcreteCat, diagram: &Functor) -> Quotient {
    let shape = diagram.source();
    let mut offsets = Vec::new();
    let mut total = 0;
    for i in shape.objects() {
        offsets.push(total);
        total += small.carrier(diagram.obj(i));
    }
    let mut pairs = Vec::new();
    for a in shape.morphisms().filter(|&a| !shape.is_identity(a)) {
        let (i, j) = (shape.dom(a), shape.cod(a));
        for x in 0..small.carrier(diagram.obj(i)) {
            pairs.push((offsets[i.0] + x, offsets[j.0] + small.apply(diagram.mor(a), x)));
        }
    }
    let (class, num_classes) = classes(total, pairs);
    Quotient {
        offsets,
        class,
        num_classes,
    }
}

/// Whether the limiting cone `legs` (with apex of size `apex_size`) maps
/// its apex bijectively onto the compatible families.
pub fn limit_carrier_matches(sets: &ConcreteCat, apex_size: usize, legs: &[MorId], oracle: &[Vec<usize>]) -> Result<()> {
    let expected: HashSet<&Vec<usize>> = oracle.iter().collect();
    let mut seen = HashSet::new();
    for p in 0..apex_size {
        let t: Vec<usize> = legs.iter().map(|&e| sets.apply(e, p)).collect();
        if !expected.contains(&t) {
            return Err(Error::Precondition(format!("apex element {p} maps to incompatible family {t:?}")));
        }
        if !seen.insert(t.clone()) {
            return Err(Error::Precondition(format!("apex elements collide on family {t:?}")));
        }
    }
    if seen.len() != expected.len() {
        return Err(Error::Precondition(format!(
            "apex has {} elements, {} compatible families",
            seen.len(),
            expected.len()
        )));
    }
    Ok(())
}

/// Whether the colimiting cocone `legs` induces a bijection from the
/// quotient onto its apex of size `apex_size`.
pub fn colimit_carrier_matches(sets: &ConcreteCat, apex_size: usize, legs: &[MorId], q: &Quotient) -> Result<()> {
    let mut image = vec![None; q.num_classes];
    for (i, &leg) in legs.iter().enumerate() {
        let end = q.offsets.get(i + 1).copied().unwrap_or(q.class.len());
        for x in 0..end - q.offsets[i] {
            let c = q.class[q.offsets[i] + x];
            let v = sets.apply(leg, x);
            match image[c] {
                None => image[c] = Some(v),
                Some(w) if w != v => {
                    return Err(Error::Precondition(format!("class {c} maps to both {w} and {v}")));
                }
                _ => {}
            }
        }
    }
    let values: HashSet<usize> = image.iter().map(|v| v.expect("every class is inhabited")).collect();
    if values.len() != q.num_classes || q.num_classes != apex_size {
        return Err(Error::Precondition(format!(
            "{} classes, apex of size {}, {} distinct images",
            q.num_classes,
            apex_size,
            values.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::shapes::shape;

    #[test]
    fn classes_merge_transitively() {
        let (c, n) = classes(5, [(0, 3), (3, 4)]);
        assert_eq!(n, 3);
        assert_eq!(c, vec![0, 1, 2, 0, 0]);
    }

    #[test]
    fn product_cells_count_pairs_of_functions() {
        let p = product_het(1).unwrap();
        let amb = p.sets.cat();
        for w in amb.objects() {
            for xy in p.pairs.cat().objects() {
                let (x, y) = p.pairs.obj_components(xy);
                let expect = p.small.carrier(x).pow(w.0 as u32) * p.small.carrier(y).pow(w.0 as u32);
                assert_eq!(p.het.cell_size(w, xy), expect);
            }
        }
        assert!(p.het.check_laws().is_ok());
    }

    #[test]
    fn equalizer_oracle_of_identity_and_swap_is_empty() {
        let s = shape("parallel").unwrap();
        let small = finset_with(2, Capacity::default()).unwrap();
        let c = small.cat();
        let s2 = c.obj("s2").unwrap();
        let swap = small.find(s2, s2, &[1, 0]).unwrap();
        let d = Functor::new(
            "D",
            s.clone(),
            c.clone(),
            vec![s2, s2],
            s.morphisms()
                .map(|m| match s.mor_name(m) {
                    "f" => c.identity(s2),
                    "g" => swap,
                    _ => c.identity(s2),
                })
                .collect(),
        )
        .unwrap();
        assert!(limit_oracle(&small, &d).is_empty());
        assert_eq!(colimit_oracle(&small, &d).num_classes, 1);
    }
}

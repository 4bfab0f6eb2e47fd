//! Shared corpus for the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use hetcat::adjunction::{synthesize_adjunction, Adjunction};
use hetcat::construct::{diagonal, functor_category, product_category};
use hetcat::het::{hom_bifunctor, reflective_het, HetBifunctor};
use hetcat::instances::concrete::finset;
use hetcat::instances::monoids::MonoidFamily;
use hetcat::instances::orders::{poset_family, preorder_family};
use hetcat::instances::sets::product_het;
use hetcat::instances::shapes::{chain, shape, SHAPE_NAMES};
use hetcat::{Capacity, FinCat, Functor, ObjId};

pub fn categories() -> Vec<Arc<FinCat>> {
    let mut out: Vec<Arc<FinCat>> = (0..=2).map(|n| finset(n).unwrap().cat().clone()).collect();
    for s in SHAPE_NAMES {
        out.push(shape(s).unwrap());
    }
    out.push(chain(3));
    let f1 = finset(1).unwrap().cat().clone();
    let f2 = finset(2).unwrap().cat().clone();
    out.push(product_category(&f1, &f1).cat().clone());
    out.push(product_category(&f2, &f1).cat().clone());
    out.push(product_category(&chain(2), &shape("span").unwrap()).cat().clone());
    for s in SHAPE_NAMES {
        out.push(functor_category(&shape(s).unwrap(), &f1, Capacity::default()).unwrap().cat().clone());
    }
    out.push(functor_category(&shape("arrow").unwrap(), &f2, Capacity::default()).unwrap().cat().clone());
    out.push(preorder_family().unwrap().cat.cat().clone());
    out.push(poset_family().unwrap().cat.cat().clone());
    out.push(MonoidFamily::demo().unwrap().cat.cat().clone());
    out
}

pub fn functors() -> Vec<Functor> {
    let f1 = finset(1).unwrap().cat().clone();
    let p = product_category(&f1, &f1);
    vec![
        Functor::identity(chain(3)),
        p.proj_left(),
        p.proj_right(),
        diagonal(&p).unwrap(),
        preorder_family().unwrap().underlying,
        poset_family().unwrap().underlying,
    ]
}

pub fn hets() -> Vec<Arc<HetBifunctor>> {
    let f2 = finset(2).unwrap().cat().clone();
    let fam = MonoidFamily::demo().unwrap();
    let pre = preorder_family().unwrap();
    let pos = poset_family().unwrap();
    let f2_objs: Vec<ObjId> = vec![ObjId(1), ObjId(2)];
    vec![
        Arc::new(hom_bifunctor(&f2)),
        Arc::new(hom_bifunctor(&chain(3))),
        Arc::new(hom_bifunctor(&shape("parallel").unwrap())),
        Arc::new(reflective_het(&f2, &f2_objs).unwrap().0),
        fam.het,
        pre.set_to_order(),
        pre.order_to_set(),
        pos.set_to_order(),
        pos.order_to_set(),
        product_het(1).unwrap().het,
    ]
}

/// Adjunctions synthesized from het-bifunctors, by name.
pub fn synthesized() -> Vec<(&'static str, Adjunction)> {
    let pre = preorder_family().unwrap();
    let f2 = finset(2).unwrap().cat().clone();
    let synth = |h: &Arc<HetBifunctor>| synthesize_adjunction(h).unwrap_or_else(|e| panic!("{}: {e}", h.name()));
    vec![
        ("hom:finset:2", synth(&Arc::new(hom_bifunctor(&f2)))),
        ("product-het:1", synth(&product_het(1).unwrap().het)),
        ("discrete-underlying", synth(&pre.set_to_order())),
        ("underlying-indiscrete", synth(&pre.order_to_set())),
        ("pacioli:demo", synth(&MonoidFamily::demo().unwrap().het)),
    ]
}

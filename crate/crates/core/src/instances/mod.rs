//! Ready-made categories, het-bifunctors and adjunctions, addressable by
//! name from the command line and the web demo.

pub mod concrete;
pub mod freyd;
pub mod monoids;
pub mod orders;
pub mod sets;
pub mod shapes;

use std::sync::Arc;

use crate::adjunction::{synthesize_adjunction, AdjunctionData};
use crate::category::{Capacity, FinCat};
use crate::error::{Error, Result};
use crate::het::{hom_bifunctor, HetBifunctor};

/// What a named instance resolves to.
#[derive(Clone, Debug)]
pub enum Instance {
    Category(Arc<FinCat>),
    Het(Arc<HetBifunctor>),
    Adjunction(AdjunctionData),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Category(_) => "category",
            Instance::Het(_) => "het",
            Instance::Adjunction(_) => "adjunction",
        }
    }
}

/// Catalog entry: a name pattern and what it builds.
#[derive(Copy, Clone, Debug)]
pub struct CatalogEntry {
    pub pattern: &'static str,
    pub summary: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { pattern: "finset:N", summary: "finite sets of size <= N with all functions" },
    CatalogEntry { pattern: "hom:finset:N", summary: "the hom het-bifunctor of finset:N" },
    CatalogEntry { pattern: "product-het:N", summary: "pairs of functions W -> X, W -> Y; sets <= N*N to pairs of sets <= N" },
    CatalogEntry { pattern: "limit:SHAPE:N", summary: "cones over SHAPE-diagrams in sets <= N, apexes <= N*N" },
    CatalogEntry { pattern: "colimit:SHAPE:N", summary: "cocones under SHAPE-diagrams in sets <= N, apexes <= N*N" },
    CatalogEntry { pattern: "preorder-forgetful", summary: "Hom_Set(UP, X) from preorders on <= 2 points to sets" },
    CatalogEntry { pattern: "poset-forgetful", summary: "Hom_Set(UP, X) from posets on <= 2 points to sets" },
    CatalogEntry { pattern: "preorder-discrete", summary: "Hom_Set(X, UP) from sets to preorders on <= 2 points" },
    CatalogEntry { pattern: "pacioli:demo", summary: "commutative monoids reflected onto their groups" },
    CatalogEntry { pattern: "identity:2chain", summary: "the identity adjunction on the chain c0 -> c1" },
    CatalogEntry { pattern: "discrete-underlying", summary: "discrete preorder -| underlying set, synthesized" },
    CatalogEntry { pattern: "freyd", summary: "an endo-adjunction with functors injective on objects, from search" },
];

fn parse_n(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::unknown("size", s))
}

/// Build the instance called `name` within the given capacity.
pub fn load(name: &str, cap: Capacity) -> Result<Instance> {
    let parts: Vec<&str> = name.split(':').collect();
    Ok(match parts.as_slice() {
        ["finset", n] => Instance::Category(concrete::finset_with(parse_n(n)?, cap)?.cat().clone()),
        ["hom", "finset", n] => Instance::Het(Arc::new(hom_bifunctor(concrete::finset_with(parse_n(n)?, cap)?.cat()))),
        ["product-het", n] => Instance::Het(sets::product_het_with(parse_n(n)?, cap)?.het),
        ["limit", s, n] => Instance::Het(sets::limit_het_with(&shapes::shape(s)?, parse_n(n)?, cap)?.het),
        ["colimit", s, n] => Instance::Het(sets::colimit_het_with(&shapes::shape(s)?, parse_n(n)?, cap)?.het),
        ["preorder-forgetful"] => Instance::Het(orders::preorder_family()?.order_to_set()),
        ["poset-forgetful"] => Instance::Het(orders::poset_family()?.order_to_set()),
        ["preorder-discrete"] => Instance::Het(orders::preorder_family()?.set_to_order()),
        ["pacioli", "demo"] => Instance::Het(monoids::MonoidFamily::demo()?.het),
        ["identity", "2chain"] => Instance::Adjunction(AdjunctionData::identity(&shapes::chain(2))),
        ["discrete-underlying"] => {
            let het = orders::preorder_family()?.set_to_order();
            let adj = synthesize_adjunction(&het).map_err(|e| Error::Precondition(e.to_string()))?;
            Instance::Adjunction(adj.data())
        }
        ["freyd"] => {
            let s = freyd::freyd_search(3, 3)?;
            let ex = s
                .example
                .ok_or_else(|| Error::Precondition(format!("no nontrivial adjunction within {}", s.bound)))?;
            Instance::Adjunction(ex.data)
        }
        _ => return Err(Error::unknown("instance", name)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixed_entry_loads() {
        for name in [
            "finset:2",
            "hom:finset:1",
            "product-het:1",
            "limit:arrow:1",
            "colimit:span:1",
            "preorder-forgetful",
            "poset-forgetful",
            "pacioli:demo",
            "identity:2chain",
            "discrete-underlying",
        ] {
            load(name, Capacity::default()).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(load("nonsense", Capacity::default()).is_err());
        assert!(load("finset:x", Capacity::default()).is_err());
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(
            load("finset:3", Capacity::with_max_objects(2)),
            Err(Error::Capacity { .. })
        ));
    }
}

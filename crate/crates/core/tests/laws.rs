mod common;

use std::sync::Arc;

use hetcat::adjunction::synthesize_adjunction;
use hetcat::category::check_category;
use hetcat::construct::{functor_category, opposite, product_category};
use hetcat::het::hom_bifunctor;
use hetcat::instances::freyd::{monoid_category, preorder_category};
use hetcat::instances::monoids::{Monoid, Pacioli};
use hetcat::{Capacity, FinCat};
use proptest::prelude::*;

/// Reflexive-transitive closure of a random relation on `n` points.
fn closure(n: usize, bits: &[bool]) -> Vec<Vec<bool>> {
    let mut leq: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| i == j || bits[i * n + j]).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if leq[i][k] && leq[k][j] {
                    leq[i][j] = true;
                }
            }
        }
    }
    leq
}

fn preorder() -> impl Strategy<Value = Arc<FinCat>> {
    (1usize..=4)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(proptest::bool::weighted(0.3), n * n)))
        .prop_map(|(n, bits)| preorder_category("P", &closure(n, &bits)).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn preorders_are_lawful(c in preorder()) {
        prop_assert!(c.check_laws().is_ok());
        prop_assert!(check_category(&c.to_raw()).unwrap().is_ok());
        prop_assert!(opposite(&c).check_laws().is_ok());
    }

    #[test]
    fn hom_het_synthesizes_the_identity(c in preorder()) {
        let adj = synthesize_adjunction(&Arc::new(hom_bifunctor(&c))).unwrap();
        prop_assert!(adj.checks().all_passed());
        let iso = |x, y| !c.hom(x, y).is_empty() && !c.hom(y, x).is_empty();
        for x in c.objects() {
            prop_assert!(iso(adj.left().obj(x), x));
            prop_assert!(iso(adj.right().obj(x), x));
        }
    }

    #[test]
    fn products_count_pairs(c in preorder(), d in preorder()) {
        let p = product_category(&c, &d);
        prop_assert_eq!(p.cat().num_morphisms(), c.num_morphisms() * d.num_morphisms());
        prop_assert!(p.cat().check_laws().is_ok());
        prop_assert!(p.proj_left().check_laws().is_ok());
    }

    #[test]
    fn cyclic_groups_complete_to_themselves(n in 1usize..=6) {
        let z = Monoid::cyclic(n);
        let p = Pacioli::new(&z);
        prop_assert!(p.group.isomorphic(&z));
        prop_assert!(p.check_well_defined().is_empty());
        prop_assert!(p.check_inverses().is_empty());
    }

    #[test]
    fn truncated_addition_completes_to_trivial(cap in 1usize..=5) {
        let m = Monoid::from_fn(format!("T{cap}"), cap + 1, |a, b| (a + b).min(cap));
        prop_assert_eq!(Pacioli::new(&m).group.size(), 1);
    }

    #[test]
    fn monoid_categories_need_unit_zero(n in 1usize..=5) {
        let table: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        // multiplication mod n has unit 1, so only n = 1 passes with unit 0
        prop_assert_eq!(monoid_category("M", &table).is_ok(), n == 1);
        let add: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        prop_assert!(monoid_category("Z", &add).unwrap().check_laws().is_ok());
    }
}

#[test]
fn functor_categories_over_shapes_are_lawful() {
    let one = hetcat::instances::concrete::finset(1).unwrap();
    for s in hetcat::instances::shapes::SHAPE_NAMES {
        let d = hetcat::instances::shapes::shape(s).unwrap();
        let fc = functor_category(&d, one.cat(), Capacity::default()).unwrap();
        assert!(fc.cat().check_laws().is_ok(), "{s}");
        for f in fc.functors() {
            assert!(f.check_laws().is_ok());
        }
    }
}

#[test]
fn corpus_is_lawful() {
    for c in common::categories() {
        assert!(c.check_laws().is_ok(), "{}", c.name());
    }
    for h in common::hets() {
        assert!(h.check_laws().is_ok(), "{}", h.name());
    }
}

#[test]
fn finset_counts_functions() {
    for n in 0..=3 {
        let s = hetcat::instances::concrete::finset(n).unwrap();
        let expected: usize = (0..=n).flat_map(|m| (0..=n).map(move |k| k.pow(m as u32))).sum();
        assert_eq!(s.cat().num_morphisms(), expected);
    }
}

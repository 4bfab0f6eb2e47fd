mod common;

use std::sync::Arc;

use hetcat::het::{het_from_functor, hom_bifunctor, HetSide};
use hetcat::instances::orders::{poset_family, preorder_family};
use hetcat::instances::sets::{colimit_het, colimit_oracle, limit_het, limit_oracle};
use hetcat::instances::shapes::{chain, shape};
use hetcat::represent::{check_universal, find_representation, find_universal_element, verify_naturality, Side};
use hetcat::theorem::verify_representation_theorem;

#[test]
fn hom_bifunctor_is_represented_by_identities() {
    let c = chain(3);
    let h = Arc::new(hom_bifunctor(&c));
    for side in [Side::Left, Side::Right] {
        let rep = find_representation(&h, side).unwrap();
        assert!(rep.functor().same_tables(&hetcat::Functor::identity(c.clone())));
        assert!(verify_naturality(&rep).all_passed());
        for u in rep.universals() {
            assert_eq!(h.element_name(u.element), c.mor_name(c.identity(u.base)));
        }
    }
}

#[test]
fn universal_checker_rejects_non_universal_elements() {
    let c = chain(2);
    let h = hom_bifunctor(&c);
    let (c0, c1) = (c.expect_obj("c0").unwrap(), c.expect_obj("c1").unwrap());
    let arrow = h.find_element(c0, c1, "c0_c1").unwrap();
    assert!(check_universal(&h, Side::Left, c0, c1, arrow).is_some());
    let id = h.find_element(c0, c0, "id_c0").unwrap();
    assert!(check_universal(&h, Side::Left, c0, c0, id).is_none());
}

#[test]
fn induced_hets_are_representable_on_their_own_side() {
    let pre = preorder_family().unwrap();
    let u = &pre.underlying;
    let left = Arc::new(het_from_functor(u, HetSide::Left));
    assert!(find_representation(&left, Side::Left).unwrap().functor().same_tables(u));
    let right = Arc::new(het_from_functor(u, HetSide::Right));
    assert!(find_representation(&right, Side::Right).unwrap().functor().same_tables(u));
}

#[test]
fn poset_failure_names_the_two_point_set() {
    let fam = poset_family().unwrap();
    let partial = find_representation(&fam.order_to_set(), Side::Right).unwrap_err();
    assert!(partial.missing.iter().any(|m| m.base == "s2"));
    assert!(!partial.found.is_empty());
}

#[test]
fn single_point_limits_agree_with_oracles() {
    for s in ["terminal", "arrow", "span", "cospan", "discrete3"] {
        let d = shape(s).unwrap();
        let lim = limit_het(&d, 1).unwrap();
        for o in lim.diagrams.cat().objects() {
            let u = find_universal_element(&lim.het, o, Side::Right).unwrap();
            let expect = limit_oracle(&lim.small, lim.diagrams.functor(o)).len();
            assert_eq!(lim.sets.carrier(u.apex), expect, "{s}");
        }
        let colim = colimit_het(&d, 1).unwrap();
        for o in colim.diagrams.cat().objects() {
            let u = find_universal_element(&colim.het, o, Side::Left).unwrap();
            let expect = colimit_oracle(&colim.small, colim.diagrams.functor(o)).num_classes;
            if expect <= 1 {
                assert_eq!(colim.sets.carrier(u.apex), expect, "{s}");
            } else {
                // the true colimit is missing; the one-point set is universal
                // among the sets that are present
                assert_eq!(colim.sets.carrier(u.apex), 1, "{s}");
            }
        }
    }
}

#[test]
fn theorem_holds_on_every_synthesized_adjunction() {
    for (name, adj) in common::synthesized() {
        let r = verify_representation_theorem(&adj);
        assert!(r.passed(), "{name}: {}", r.suite);
        assert!(r.recovered.is_some());
    }
}

use std::sync::Arc;

use hetcat::adjunction::{synthesize_adjunction, Adjunction};
use hetcat::dsl::parse;
use hetcat::instances::sets::product_het;
use hetcat::instances::shapes::chain;
use hetcat::render::{category_dot, dot_counts, gentzen, het_square_dot, hom_pair_square_dot};

#[test]
fn terminal_category_is_a_single_node() {
    let t = parse("category T { objects: t; }").unwrap().category("T").unwrap();
    let dot = category_dot(&t);
    assert_eq!(dot_counts(&dot), (1, 0));
    assert!(dot.starts_with("digraph \"T\""));
}

#[test]
fn unit_square_has_four_nodes_and_a_diagonal() {
    let adj = synthesize_adjunction(&Arc::new(hetcat::het::hom_bifunctor(&chain(2)))).unwrap();
    let core = adj.het_core().unwrap();
    for x in adj.x().objects() {
        let sq = adj.het_square(core.het_unit(x)).unwrap();
        let dot = het_square_dot(&adj, &sq);
        assert_eq!(dot_counts(&dot), (4, 5));
        assert_eq!(dot.matches("black:white:black").count(), 3);
    }
}

#[test]
fn product_squares_count_four_and_five() {
    let p = product_het(1).unwrap();
    let adj = synthesize_adjunction(&p.het).unwrap();
    for c in p.het.elements() {
        let sq = adj.het_square(c).unwrap();
        assert_eq!(dot_counts(&het_square_dot(&adj, &sq)), (4, 5));
        let hp = adj.hom_pair_square(sq.x, sq.a, sq.top).unwrap();
        assert!(hp.violations(&adj).is_empty());
        assert_eq!(dot_counts(&hom_pair_square_dot(&adj, &hp)), (4, 5));
    }
}

#[test]
fn gentzen_lists_every_transposition() {
    let adj = synthesize_adjunction(&product_het(1).unwrap().het).unwrap();
    let text = gentzen(&adj);
    let cells: usize = adj
        .x()
        .objects()
        .flat_map(|x| adj.a().objects().map(move |a| (x, a)))
        .map(|(x, a)| adj.a().hom(adj.left().obj(x), a).len())
        .sum();
    assert_eq!(text.matches("=>").count(), cells);
    assert_eq!(gentzen(&Adjunction::identity(&chain(2))).matches("=>").count(), 0);
}

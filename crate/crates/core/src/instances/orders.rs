//! Preorders and posets on at most two elements, their underlying-set
//! functor, and the discrete and indiscrete constructions.

use std::sync::Arc;

use crate::category::{Capacity, ObjId};
use crate::error::{Error, Result};
use crate::functor::Functor;
use crate::het::{het_from_functor, HetBifunctor, HetSide};
use crate::instances::concrete::{all_functions, digits, finset_with, ConcreteCat};

/// A finite preorder given by its relation matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    pub name: String,
    pub leq: Vec<Vec<bool>>,
}

impl Order {
    pub fn new(name: impl Into<String>, size: usize, pairs: &[(usize, usize)]) -> Order {
        let mut leq = vec![vec![false; size]; size];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            leq[a][b] = true;
        }
        Order { name: name.into(), leq }
    }

    pub fn size(&self) -> usize {
        self.leq.len()
    }

    pub fn is_preorder(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| self.leq[i][i])
            && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(self.leq[i][j] && self.leq[j][k]) || self.leq[i][k])))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| i == j || !(self.leq[i][j] && self.leq[j][i])))
    }

    pub fn is_discrete(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| self.leq[i][j] == (i == j)))
    }

    pub fn is_indiscrete(&self) -> bool {
        self.leq.iter().all(|r| r.iter().all(|&b| b))
    }

    pub fn is_monotone(&self, to: &Order, f: &[usize]) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| !self.leq[i][j] || to.leq[f[i]][f[j]]))
    }
}

/// One preorder per isomorphism class on at most two elements.
pub fn preorders_upto2() -> Vec<Order> {
    vec![
        Order::new("empty", 0, &[]),
        Order::new("pt", 1, &[]),
        Order::new("disc2", 2, &[]),
        Order::new("chain2", 2, &[(0, 1)]),
        Order::new("indisc2", 2, &[(0, 1), (1, 0)]),
    ]
}

/// The posets among [`preorders_upto2`].
pub fn posets_upto2() -> Vec<Order> {
    preorders_upto2().into_iter().filter(Order::is_antisymmetric).collect()
}

/// A family of orders as a category of monotone maps, with the underlying
/// set functor into finite sets of size at most the largest carrier.
#[derive(Clone, Debug)]
pub struct OrderFamily {
    pub orders: Vec<Order>,
    pub cat: ConcreteCat,
    pub sets: ConcreteCat,
    pub underlying: Functor,
}

impl OrderFamily {
    pub fn new(name: &str, orders: Vec<Order>) -> Result<OrderFamily> {
        for o in &orders {
            if !o.is_preorder() {
                return Err(Error::Precondition(format!("`{}` is not a preorder", o.name)));
            }
        }
        let objects: Vec<(String, usize)> = orders.iter().map(|o| (o.name.clone(), o.size())).collect();
        let cat = ConcreteCat::build(
            name,
            &objects,
            |i, j| {
                all_functions(orders[i].size(), orders[j].size())
                    .into_iter()
                    .filter(|f| orders[i].is_monotone(&orders[j], f))
                    .collect()
            },
            |i, j, f| format!("m_{}_{}_{}", orders[i].name, orders[j].name, digits(f)),
            Capacity::default(),
        )?;
        let max = orders.iter().map(Order::size).max().unwrap_or(0);
        let sets = finset_with(max, Capacity::default())?;
        let c = cat.cat();
        let s = sets.cat();
        let obj_map: Vec<ObjId> = c.objects().map(|o| ObjId(cat.carrier(o))).collect();
        let mor_map = c
            .morphisms()
            .map(|m| {
                sets.find(obj_map[c.dom(m).0], obj_map[c.cod(m).0], cat.func(m))
                    .expect("finite sets hold every function")
            })
            .collect();
        let underlying = Functor::new(format!("U_{name}"), c.clone(), s.clone(), obj_map, mor_map)?;
        Ok(OrderFamily {
            orders,
            cat,
            sets,
            underlying,
        })
    }

    /// `Het(X, P) = Hom_Set(X, UP)` from sets to orders; represented on the
    /// left by discrete orders and on the right by `U`.
    pub fn set_to_order(&self) -> Arc<HetBifunctor> {
        Arc::new(het_from_functor(&self.underlying, HetSide::Right).renamed(format!("Het_Set_{}", self.cat.cat().name())))
    }

    /// `Het(P, X) = Hom_Set(UP, X)` from orders to sets; represented on the
    /// left by `U` and on the right by indiscrete orders, when they exist.
    pub fn order_to_set(&self) -> Arc<HetBifunctor> {
        Arc::new(het_from_functor(&self.underlying, HetSide::Left).renamed(format!("Het_{}_Set", self.cat.cat().name())))
    }

    pub fn order(&self, o: ObjId) -> &Order {
        &self.orders[o.0]
    }
}

pub fn preorder_family() -> Result<OrderFamily> {
    OrderFamily::new("Preord2", preorders_upto2())
}

pub fn poset_family() -> Result<OrderFamily> {
    OrderFamily::new("Poset2", posets_upto2())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_are_lawful() {
        let p = preorder_family().unwrap();
        assert!(p.cat.cat().check_laws().is_ok());
        assert_eq!(p.cat.cat().num_objects(), 5);
        assert_eq!(poset_family().unwrap().orders.len(), 4);
    }

    #[test]
    fn monotone_maps_from_chain_to_chain() {
        let p = preorder_family().unwrap();
        let c = p.cat.cat();
        let ch = c.obj("chain2").unwrap();
        // 00, 01, 11
        assert_eq!(c.hom(ch, ch).len(), 3);
    }

    #[test]
    fn hets_are_lawful() {
        let p = preorder_family().unwrap();
        assert!(p.set_to_order().check_laws().is_ok());
        assert!(p.order_to_set().check_laws().is_ok());
    }
}

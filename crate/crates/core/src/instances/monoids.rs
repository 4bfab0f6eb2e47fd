//! Finite commutative monoids, their group completion computed from formal
//! differences `[x' // x]`, and the reflection of a monoid family onto its
//! groups.

use std::sync::Arc;

use crate::category::{Capacity, ObjId};
use crate::error::{Error, Result};
use crate::het::{reflective_het, HetBifunctor};
use crate::instances::concrete::{all_functions, digits, ConcreteCat};
use crate::instances::sets::classes;
use crate::represent::{find_representation, Representation, Side};

/// A finite monoid on `{0, .., n-1}` with unit `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Monoid {
    pub name: String,
    pub table: Vec<Vec<usize>>,
}

impl Monoid {
    pub fn from_fn(name: impl Into<String>, n: usize, op: impl Fn(usize, usize) -> usize) -> Monoid {
        Monoid {
            name: name.into(),
            table: (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect(),
        }
    }

    pub fn cyclic(n: usize) -> Monoid {
        Monoid::from_fn(format!("Z{n}"), n, |a, b| (a + b) % n)
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn check(&self) -> Result<()> {
        let n = self.size();
        let bad = |w: String| Err(Error::Precondition(format!("`{}`: {w}", self.name)));
        if n == 0 {
            return bad("a monoid has a unit".into());
        }
        for a in 0..n {
            if self.op(0, a) != a || self.op(a, 0) != a {
                return bad(format!("0 is not a unit at {a}"));
            }
            for b in 0..n {
                if self.op(a, b) != self.op(b, a) {
                    return bad(format!("{a}*{b} != {b}*{a}"));
                }
                for c in 0..n {
                    if self.op(self.op(a, b), c) != self.op(a, self.op(b, c)) {
                        return bad(format!("({a}*{b})*{c} != {a}*({b}*{c})"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn inverse(&self, a: usize) -> Option<usize> {
        (0..self.size()).find(|&b| self.op(a, b) == 0)
    }

    pub fn is_group(&self) -> bool {
        (0..self.size()).all(|a| self.inverse(a).is_some())
    }

    pub fn is_hom(&self, to: &Monoid, f: &[usize]) -> bool {
        let n = self.size();
        f[0] == 0 && (0..n).all(|a| (0..n).all(|b| f[self.op(a, b)] == to.op(f[a], f[b])))
    }

    pub fn homs(&self, to: &Monoid) -> Vec<Vec<usize>> {
        all_functions(self.size(), to.size())
            .into_iter()
            .filter(|f| self.is_hom(to, f))
            .collect()
    }

    pub fn isomorphic(&self, other: &Monoid) -> bool {
        self.size() == other.size()
            && self.homs(other).iter().any(|f| {
                let mut seen = vec![false; f.len()];
                f.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
            })
    }
}

/// The group completion of a commutative monoid built from pairs.
///
/// `[x' // x]` stands for `x - x'`; two pairs are identified when
/// `x + y' + z = x' + y + z` for some `z`.
#[derive(Clone, Debug)]
pub struct Pacioli {
    pub monoid: Monoid,
    /// Class of the pair `(x', x)`, indexed `x' * n + x`.
    pub class: Vec<usize>,
    pub group: Monoid,
}

impl Pacioli {
    pub fn new(m: &Monoid) -> Pacioli {
        let n = m.size();
        let mut pairs = Vec::new();
        for p in 0..n * n {
            for q in p + 1..n * n {
                let (x1, x) = (p / n, p % n);
                let (y1, y) = (q / n, q % n);
                if (0..n).any(|z| m.op(m.op(x, y1), z) == m.op(m.op(x1, y), z)) {
                    pairs.push((p, q));
                }
            }
        }
        let (class, k) = classes(n * n, pairs);
        let mut rep = vec![usize::MAX; k];
        for (p, &c) in class.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = p;
            }
        }
        let group = Monoid::from_fn(format!("P_{}", m.name), k, |a, b| {
            let (a1, a0) = (rep[a] / n, rep[a] % n);
            let (b1, b0) = (rep[b] / n, rep[b] % n);
            class[m.op(a1, b1) * n + m.op(a0, b0)]
        });
        Pacioli {
            monoid: m.clone(),
            class,
            group,
        }
    }

    /// The class `[x' // x]`.
    pub fn pair(&self, x1: usize, x: usize) -> usize {
        self.class[x1 * self.monoid.size() + x]
    }

    /// `h(x) = [0 // x]`.
    pub fn unit(&self, x: usize) -> usize {
        self.pair(0, x)
    }

    pub fn unit_map(&self) -> Vec<usize> {
        (0..self.monoid.size()).map(|x| self.unit(x)).collect()
    }

    /// Addition of pairs is independent of the representatives chosen.
    pub fn check_well_defined(&self) -> Vec<String> {
        let m = &self.monoid;
        let n = m.size();
        let mut out = Vec::new();
        for p in 0..n * n {
            for q in 0..n * n {
                let (a1, a0, b1, b0) = (p / n, p % n, q / n, q % n);
                let sum = self.pair(m.op(a1, b1), m.op(a0, b0));
                let via = self.group.op(self.class[p], self.class[q]);
                if sum != via {
                    out.push(format!("[{a1}//{a0}] + [{b1}//{b0}] depends on representatives"));
                }
            }
        }
        out
    }

    /// `[x // x'] + [x' // x] = [0 // 0]`.
    pub fn check_inverses(&self) -> Vec<String> {
        let m = &self.monoid;
        let n = m.size();
        let mut out = Vec::new();
        for x in 0..n {
            for x1 in 0..n {
                if self.group.op(self.pair(x, x1), self.pair(x1, x)) != self.pair(0, 0) {
                    out.push(format!("[{x}//{x1}] + [{x1}//{x}] is not [0//0]"));
                }
            }
        }
        out
    }

    /// `g(c)([x' // x]) = c(x) - c(x')` for a homomorphism `c` into a group.
    /// Fails when the formula does not descend to classes.
    pub fn factor(&self, c: &[usize], target: &Monoid) -> std::result::Result<Vec<usize>, String> {
        let n = self.monoid.size();
        let mut g = vec![None; self.group.size()];
        for x1 in 0..n {
            for x in 0..n {
                let inv = target
                    .inverse(c[x1])
                    .ok_or_else(|| format!("{} has no inverse in {}", c[x1], target.name))?;
                let v = target.op(c[x], inv);
                let k = self.pair(x1, x);
                match g[k] {
                    None => g[k] = Some(v),
                    Some(w) if w != v => return Err(format!("class of [{x1}//{x}] sent to {w} and {v}")),
                    _ => {}
                }
            }
        }
        Ok(g.into_iter().map(|v| v.expect("every class has a pair")).collect())
    }
}

pub fn trivial() -> Monoid {
    Monoid::from_fn("trivial", 1, |_, _| 0)
}

/// `({0, 1}, max)`.
pub fn max2() -> Monoid {
    Monoid::from_fn("max2", 2, |a, b| a.max(b))
}

/// Addition on `{0, 1, 2}` truncated at 2.
pub fn trunc2() -> Monoid {
    Monoid::from_fn("trunc2", 3, |a, b| (a + b).min(2))
}

pub fn demo_monoids() -> Vec<Monoid> {
    vec![trivial(), Monoid::cyclic(2), Monoid::cyclic(3), max2(), trunc2()]
}

/// A family of commutative monoids with all homomorphisms, closed up to
/// isomorphism under group completion, reflected onto its groups.
#[derive(Clone, Debug)]
pub struct MonoidFamily {
    pub monoids: Vec<Monoid>,
    pub cat: ConcreteCat,
    pub groups: Vec<ObjId>,
    pub het: Arc<HetBifunctor>,
}

impl MonoidFamily {
    pub fn new(name: &str, mut monoids: Vec<Monoid>) -> Result<MonoidFamily> {
        for m in &monoids {
            m.check()?;
        }
        let base = monoids.len();
        for i in 0..base {
            let p = Pacioli::new(&monoids[i]).group;
            if !monoids.iter().any(|g| g.is_group() && g.isomorphic(&p)) {
                monoids.push(p);
            }
        }
        let objects: Vec<(String, usize)> = monoids.iter().map(|m| (m.name.clone(), m.size())).collect();
        let cat = ConcreteCat::build(
            name,
            &objects,
            |i, j| monoids[i].homs(&monoids[j]),
            |i, j, f| format!("h_{}_{}_{}", monoids[i].name, monoids[j].name, digits(f)),
            Capacity::default(),
        )?;
        let groups: Vec<ObjId> = (0..monoids.len()).filter(|&i| monoids[i].is_group()).map(ObjId).collect();
        let (het, _) = reflective_het(cat.cat(), &groups)?;
        Ok(MonoidFamily {
            monoids,
            cat,
            groups,
            het: Arc::new(het),
        })
    }

    pub fn demo() -> Result<MonoidFamily> {
        MonoidFamily::new("CMon", demo_monoids())
    }

    /// The het target category's object for a group of the family.
    fn group_in_target(&self, g: ObjId) -> ObjId {
        self.het
            .target()
            .expect_obj(self.cat.cat().obj_name(g))
            .expect("groups form the target")
    }

    /// Compare the representation of the reflective het with the explicit
    /// pair construction at every monoid; returns the failures per monoid.
    pub fn verify(&self) -> std::result::Result<(Representation, Vec<(String, Vec<String>)>), String> {
        let rep = find_representation(&self.het, Side::Left).map_err(|e| e.to_string())?;
        let c = self.cat.cat();
        let t = self.het.target();
        let mut report = Vec::new();
        for m in c.objects() {
            let mut fails = Vec::new();
            let mon = &self.monoids[m.0];
            let p = Pacioli::new(mon);
            if !p.group.is_group() {
                fails.push("pair classes do not form a group".to_string());
            }
            fails.extend(p.check_well_defined());
            fails.extend(p.check_inverses());
            let u = rep.universal(m);
            let apex = t.obj_name(u.apex);
            let ambient_apex = c.expect_obj(apex).map_err(|e| e.to_string())?;
            let apex_group = &self.monoids[ambient_apex.0];
            let unit = self.het.ambient_key(u.element).expect("ambient het")[0];
            let phi = match p.factor(self.cat.func(unit), apex_group) {
                Ok(phi) => phi,
                Err(e) => {
                    fails.push(format!("universal element does not factor: {e}"));
                    report.push((mon.name.clone(), fails));
                    continue;
                }
            };
            let mut seen = vec![false; apex_group.size()];
            let bijective = phi.len() == apex_group.size() && phi.iter().all(|&v| !std::mem::replace(&mut seen[v], true));
            if !bijective || !p.group.is_hom(apex_group, &phi) {
                fails.push(format!("[x'//x] -> u(x) - u(x') is not an isomorphism onto {apex}"));
            }
            for x in 0..mon.size() {
                if phi[p.unit(x)] != self.cat.apply(unit, x) {
                    fails.push(format!("unit at {x} disagrees with [0//{x}]"));
                }
            }
            for &g in &self.groups {
                let gt = self.group_in_target(g);
                for c_el in self.het.cell(m, gt) {
                    let cm = self.het.ambient_key(c_el).expect("ambient het")[0];
                    let func = self.cat.func(cm);
                    let target = &self.monoids[g.0];
                    let formula = match p.factor(func, target) {
                        Ok(f) => f,
                        Err(e) => {
                            fails.push(e);
                            continue;
                        }
                    };
                    if !p.group.is_hom(target, &formula) {
                        fails.push(format!("factor map of {} is not a homomorphism", c.mor_name(cm)));
                    }
                    if (0..mon.size()).any(|x| formula[p.unit(x)] != func[x]) {
                        fails.push(format!("factor map of {} does not extend it", c.mor_name(cm)));
                    }
                    let induced = rep.to_hom(c_el);
                    let induced_ambient = c.expect_mor(t.mor_name(induced)).map_err(|e| e.to_string())?;
                    let via = self.cat.func(induced_ambient);
                    if (0..p.group.size()).any(|k| via[phi[k]] != formula[k]) {
                        fails.push(format!("factorization of {} differs from the formula", c.mor_name(cm)));
                    }
                }
            }
            report.push((mon.name.clone(), fails));
        }
        Ok((rep, report))
    }
}

/// Whether `h: m -> P(m)` is a bijection of underlying sets.
pub fn unit_is_iso(m: &Monoid) -> bool {
    let p = Pacioli::new(m);
    let u = p.unit_map();
    let mut seen = vec![false; p.group.size()];
    u.len() == p.group.size() && u.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion_sizes() {
        assert_eq!(Pacioli::new(&Monoid::cyclic(3)).group.size(), 3);
        assert_eq!(Pacioli::new(&max2()).group.size(), 1);
        assert_eq!(Pacioli::new(&trunc2()).group.size(), 1);
        assert!(unit_is_iso(&Monoid::cyclic(3)));
        assert!(!unit_is_iso(&max2()));
    }

    #[test]
    fn demo_family_needs_no_extra_groups() {
        let f = MonoidFamily::demo().unwrap();
        assert_eq!(f.monoids.len(), 5);
        assert_eq!(f.groups.len(), 3);
    }

    #[test]
    fn naturals_mod_truncation_fail_checks() {
        let bad = Monoid::from_fn("bad", 2, |a, b| a.min(b));
        assert!(bad.check().is_err());
    }
}

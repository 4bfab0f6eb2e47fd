//! Categories of finite structures whose morphisms are functions between
//! carriers `{0, .., n-1}`, composed as functions.

use std::collections::HashMap;
use std::sync::Arc;

use crate::category::{Capacity, CatBuilder, FinCat, MorId, ObjId};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct ConcreteCat {
    cat: Arc<FinCat>,
    carriers: Vec<usize>,
    funcs: Vec<Vec<usize>>,
    index: HashMap<(ObjId, ObjId, Vec<usize>), MorId>,
}

/// All functions `{0..m} -> {0..k}` in lexicographic order of their value
/// lists.
pub fn all_functions(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k == 0 && m > 0 {
        return out;
    }
    let mut cur = vec![0; m];
    loop {
        out.push(cur.clone());
        let mut i = m;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            cur[i] += 1;
            if cur[i] < k {
                break;
            }
            cur[i] = 0;
        }
    }
}

pub fn digits(f: &[usize]) -> String {
    f.iter().map(|d| d.to_string()).collect()
}

impl ConcreteCat {
    /// `objects` are `(name, carrier size)`; `homs(i, j)` lists the allowed
    /// functions between objects `i` and `j` (it must contain the identity
    /// on the diagonal and be closed under composition); `name(i, j, f)`
    /// names the non-identity ones.
    pub fn build(
        name: impl Into<String>,
        objects: &[(String, usize)],
        homs: impl Fn(usize, usize) -> Vec<Vec<usize>>,
        mor_name: impl Fn(usize, usize, &[usize]) -> String,
        cap: Capacity,
    ) -> Result<ConcreteCat> {
        cap.check_objects("concrete category", objects.len())?;
        let mut b = CatBuilder::new(name);
        let mut carriers = Vec::new();
        let mut funcs = Vec::new();
        let mut index = HashMap::new();
        for (n, size) in objects {
            let x = b.object(n.clone())?;
            carriers.push(*size);
            let id: Vec<usize> = (0..*size).collect();
            funcs.push(id.clone());
            index.insert((x, x, id), b.identity(x));
        }
        for i in 0..objects.len() {
            for j in 0..objects.len() {
                for f in homs(i, j) {
                    if f.len() != objects[i].1 || f.iter().any(|&v| v >= objects[j].1) {
                        return Err(Error::Structural(format!(
                            "function {} does not map {} to {}",
                            digits(&f),
                            objects[i].0,
                            objects[j].0
                        )));
                    }
                    let key = (ObjId(i), ObjId(j), f.clone());
                    if index.contains_key(&key) {
                        continue;
                    }
                    cap.check_morphisms("concrete category", b.num_morphisms() + 1)?;
                    let m = b.morphism(mor_name(i, j, &f), ObjId(i), ObjId(j))?;
                    funcs.push(f);
                    index.insert(key, m);
                }
            }
        }
        let cat = {
            let funcs = &funcs;
            let index = &index;
            let ends: HashMap<MorId, (ObjId, ObjId)> = index.iter().map(|(k, &m)| (m, (k.0, k.1))).collect();
            b.build_with(|g, f| {
                let h: Vec<usize> = funcs[f.0].iter().map(|&v| funcs[g.0][v]).collect();
                index.get(&(ends[&f].0, ends[&g].1, h)).copied()
            })?
        };
        Ok(ConcreteCat {
            cat: Arc::new(cat),
            carriers,
            funcs,
            index,
        })
    }

    pub fn cat(&self) -> &Arc<FinCat> {
        &self.cat
    }

    pub fn carrier(&self, x: ObjId) -> usize {
        self.carriers[x.0]
    }

    pub fn func(&self, m: MorId) -> &[usize] {
        &self.funcs[m.0]
    }

    pub fn apply(&self, m: MorId, i: usize) -> usize {
        self.funcs[m.0][i]
    }

    pub fn find(&self, dom: ObjId, cod: ObjId, f: &[usize]) -> Option<MorId> {
        self.index.get(&(dom, cod, f.to_vec())).copied()
    }
}

/// Finite sets `s0, .., sn` (object `sk` is `{0, .., k-1}`) with all
/// functions between them.
pub fn finset(n: usize) -> Result<ConcreteCat> {
    finset_with(n, Capacity::default())
}

pub fn finset_with(n: usize, cap: Capacity) -> Result<ConcreteCat> {
    if n > 9 {
        return Err(Error::Capacity {
            what: "finite set size".into(),
            limit: 9,
        });
    }
    let objects: Vec<(String, usize)> = (0..=n).map(|k| (format!("s{k}"), k)).collect();
    ConcreteCat::build(
        format!("FinSet{n}"),
        &objects,
        all_functions,
        |m, k, f| format!("fn_{m}_{k}_{}", digits(f)),
        cap,
    )
}

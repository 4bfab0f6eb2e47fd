//! Universal elements and representations of het-bifunctors.
//!
//! On the left, `(Fx, h_x)` is universal when every `c` in `Het(x, a)`
//! factors as `g . h_x` for exactly one `g: Fx -> a`. On the right,
//! `(Ga, e_a)` is universal when every `c` in `Het(x, a)` factors as
//! `e_a . f` for exactly one `f: x -> Ga`.
//!
//! Searches run apexes in declaration order and elements in cell order, and
//! return the first candidate that passes the exhaustive uniqueness check.

use std::fmt;
use std::sync::Arc;

use crate::category::{FinCat, MorId, ObjId};
use crate::functor::Functor;
use crate::het::{HetBifunctor, HetId};
use crate::report::CheckSuite;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

impl std::str::FromStr for Side {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            other => Err(format!("unknown side `{other}` (expected left or right)")),
        }
    }
}

/// `base` is an object of `X` on the left and of `A` on the right; `apex`
/// lives in the other category.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct UniversalElement {
    pub side: Side,
    pub base: ObjId,
    pub apex: ObjId,
    pub element: HetId,
}

/// Why one apex failed: the first element tried there and an element of
/// some cell without exactly one factorization through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateFailure {
    pub apex: String,
    pub elements_tried: usize,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotFound {
    pub side: Side,
    pub base: String,
    pub failures: Vec<CandidateFailure>,
}

impl fmt::Display for NotFound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "no {} universal element at `{}`", self.side, self.base)?;
        for c in &self.failures {
            writeln!(
                f,
                "  apex {} ({} candidates): {}",
                c.apex, c.elements_tried, c.witness
            )?;
        }
        Ok(())
    }
}

/// Check the universal property of `u` exhaustively. Returns a witness
/// description on failure.
pub fn check_universal(het: &HetBifunctor, side: Side, base: ObjId, apex: ObjId, u: HetId) -> Option<String> {
    let mut counts = Vec::new();
    match side {
        Side::Left => {
            let a_cat = het.target();
            for a2 in a_cat.objects() {
                counts.clear();
                counts.resize(het.cell_size(base, a2), 0usize);
                let start = het.cell(base, a2).next().map(|c| c.0).unwrap_or(0);
                for &g in a_cat.hom(apex, a2) {
                    counts[het.right(g, u).0 - start] += 1;
                }
                if let Some(p) = counts.iter().position(|&n| n != 1) {
                    return Some(format!(
                        "{} has {} factorizations",
                        het.describe(HetId(start + p)),
                        counts[p]
                    ));
                }
            }
        }
        Side::Right => {
            let x_cat = het.source();
            for x2 in x_cat.objects() {
                counts.clear();
                counts.resize(het.cell_size(x2, base), 0usize);
                let start = het.cell(x2, base).next().map(|c| c.0).unwrap_or(0);
                for &f in x_cat.hom(x2, apex) {
                    counts[het.left(f, u).0 - start] += 1;
                }
                if let Some(p) = counts.iter().position(|&n| n != 1) {
                    return Some(format!(
                        "{} has {} factorizations",
                        het.describe(HetId(start + p)),
                        counts[p]
                    ));
                }
            }
        }
    }
    None
}

pub fn find_universal_element(het: &HetBifunctor, base: ObjId, side: Side) -> Result<UniversalElement, NotFound> {
    let (base_cat, apex_cat) = match side {
        Side::Left => (het.source(), het.target()),
        Side::Right => (het.target(), het.source()),
    };
    let mut failures = Vec::new();
    for apex in apex_cat.objects() {
        let cell: Vec<HetId> = match side {
            Side::Left => het.cell(base, apex).collect(),
            Side::Right => het.cell(apex, base).collect(),
        };
        let mut first_witness = None;
        for &u in &cell {
            match check_universal(het, side, base, apex, u) {
                None => {
                    return Ok(UniversalElement {
                        side,
                        base,
                        apex,
                        element: u,
                    })
                }
                Some(w) => {
                    if first_witness.is_none() {
                        first_witness = Some(format!("{}: {w}", het.element_name(u)));
                    }
                }
            }
        }
        failures.push(CandidateFailure {
            apex: apex_cat.obj_name(apex).to_string(),
            elements_tried: cell.len(),
            witness: first_witness.unwrap_or_else(|| "empty cell".into()),
        });
    }
    Err(NotFound {
        side,
        base: base_cat.obj_name(base).to_string(),
        failures,
    })
}

/// One side of a birepresentation: the representing functor and the
/// bijections between hom-sets and het cells.
///
/// For each cell `(x, a)` the hom side is `Hom_A(Fx, a)` on the left and
/// `Hom_X(x, Ga)` on the right. `hom_to_het` is `g -> g . h_x` (left) or
/// `f -> e_a . f` (right), indexed by hom-set position; `het_to_hom` is its
/// inverse, indexed by element.
#[derive(Clone, Debug)]
pub struct Representation {
    het: Arc<HetBifunctor>,
    side: Side,
    functor: Functor,
    universals: Vec<UniversalElement>,
    hom_to_het: Vec<Vec<HetId>>,
    het_to_hom: Vec<MorId>,
}

/// What went wrong while inducing a representing functor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InduceFailure {
    /// An element with no or several factorizations: a universal element
    /// handed in was not universal.
    NotUniversal(String),
    /// Shape problem in the inputs.
    Input(String),
    /// Functor laws or naturality failed on verified universals.
    Internal(String),
}

impl fmt::Display for InduceFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InduceFailure::NotUniversal(s) => write!(f, "not universal: {s}"),
            InduceFailure::Input(s) => write!(f, "bad input: {s}"),
            InduceFailure::Internal(s) => write!(f, "internal inconsistency: {s}"),
        }
    }
}

fn cell_index(het: &HetBifunctor, x: ObjId, a: ObjId) -> usize {
    x.0 * het.target().num_objects() + a.0
}

/// Build the representing functor from one universal element per base
/// object, by unique fill-in.
pub fn induce_functor(
    het: &Arc<HetBifunctor>,
    universals: &[UniversalElement],
    side: Side,
) -> Result<Representation, InduceFailure> {
    let (x_cat, a_cat) = (het.source(), het.target());
    let base_cat = match side {
        Side::Left => x_cat,
        Side::Right => a_cat,
    };
    if universals.len() != base_cat.num_objects() {
        return Err(InduceFailure::Input(format!(
            "{} universal elements for {} base objects",
            universals.len(),
            base_cat.num_objects()
        )));
    }
    for (i, u) in universals.iter().enumerate() {
        if u.side != side || u.base != ObjId(i) {
            return Err(InduceFailure::Input(format!("universal element #{i} has the wrong side or base")));
        }
        let expected = match side {
            Side::Left => (u.base, u.apex),
            Side::Right => (u.apex, u.base),
        };
        if het.cell_of(u.element) != expected {
            return Err(InduceFailure::Input(format!(
                "{} is not in the cell of its apex",
                het.describe(u.element)
            )));
        }
    }
    let mut hom_to_het = vec![Vec::new(); x_cat.num_objects() * a_cat.num_objects()];
    let mut het_to_hom: Vec<Option<MorId>> = vec![None; het.num_elements()];
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            let (homs, u) = match side {
                Side::Left => (a_cat.hom(universals[x.0].apex, a), universals[x.0].element),
                Side::Right => (x_cat.hom(x, universals[a.0].apex), universals[a.0].element),
            };
            let row: Vec<HetId> = homs
                .iter()
                .map(|&m| match side {
                    Side::Left => het.right(m, u),
                    Side::Right => het.left(m, u),
                })
                .collect();
            for (&m, &c) in homs.iter().zip(&row) {
                if let Some(prev) = het_to_hom[c.0] {
                    let cat = if side == Side::Left { a_cat } else { x_cat };
                    return Err(InduceFailure::NotUniversal(format!(
                        "{} factors through both {} and {}",
                        het.describe(c),
                        cat.mor_name(prev),
                        cat.mor_name(m)
                    )));
                }
                het_to_hom[c.0] = Some(m);
            }
            hom_to_het[cell_index(het, x, a)] = row;
        }
    }
    let het_to_hom: Vec<MorId> = het_to_hom
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            m.ok_or_else(|| InduceFailure::NotUniversal(format!("{} has no factorization", het.describe(HetId(i)))))
        })
        .collect::<Result<_, _>>()?;
    let functor = match side {
        Side::Left => {
            let obj_map: Vec<ObjId> = universals.iter().map(|u| u.apex).collect();
            let mor_map: Vec<MorId> = x_cat
                .morphisms()
                .map(|j| het_to_hom[het.left(j, universals[x_cat.cod(j).0].element).0])
                .collect();
            Functor::new(format!("F_{}", het.name()), x_cat.clone(), a_cat.clone(), obj_map, mor_map)
        }
        Side::Right => {
            let obj_map: Vec<ObjId> = universals.iter().map(|u| u.apex).collect();
            let mor_map: Vec<MorId> = a_cat
                .morphisms()
                .map(|k| het_to_hom[het.right(k, universals[a_cat.dom(k).0].element).0])
                .collect();
            Functor::new(format!("G_{}", het.name()), a_cat.clone(), x_cat.clone(), obj_map, mor_map)
        }
    }
    .map_err(|e| InduceFailure::Internal(e.to_string()))?;
    let rep = Representation {
        het: het.clone(),
        side,
        functor,
        universals: universals.to_vec(),
        hom_to_het,
        het_to_hom,
    };
    let suite = verify_naturality(&rep);
    if !suite.all_passed() {
        return Err(InduceFailure::Internal(suite.to_string()));
    }
    Ok(rep)
}

/// Bases where the search succeeded and where it failed. With exactly one
/// side failing, this is a half-adjunction.
#[derive(Clone, Debug)]
pub struct PartialRepresentation {
    pub side: Side,
    pub found: Vec<UniversalElement>,
    pub missing: Vec<NotFound>,
    pub induce_error: Option<InduceFailure>,
}

impl fmt::Display for PartialRepresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} representation incomplete: {} bases represented, {} not",
            self.side,
            self.found.len(),
            self.missing.len()
        )?;
        for m in &self.missing {
            write!(f, "{m}")?;
        }
        if let Some(e) = &self.induce_error {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

pub fn find_representation(het: &Arc<HetBifunctor>, side: Side) -> Result<Representation, PartialRepresentation> {
    let base_cat = match side {
        Side::Left => het.source(),
        Side::Right => het.target(),
    };
    let mut found = Vec::new();
    let mut missing = Vec::new();
    for b in base_cat.objects() {
        match find_universal_element(het, b, side) {
            Ok(u) => found.push(u),
            Err(nf) => missing.push(nf),
        }
    }
    if !missing.is_empty() {
        return Err(PartialRepresentation {
            side,
            found,
            missing,
            induce_error: None,
        });
    }
    induce_functor(het, &found, side).map_err(|e| PartialRepresentation {
        side,
        found: found.clone(),
        missing: Vec::new(),
        induce_error: Some(e),
    })
}

impl Representation {
    pub fn het(&self) -> &Arc<HetBifunctor> {
        &self.het
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// `F: X -> A` on the left, `G: A -> X` on the right.
    pub fn functor(&self) -> &Functor {
        &self.functor
    }

    pub fn universals(&self) -> &[UniversalElement] {
        &self.universals
    }

    pub fn universal(&self, base: ObjId) -> &UniversalElement {
        &self.universals[base.0]
    }

    /// The category the hom side lives in (`A` on the left, `X` on the
    /// right).
    pub fn hom_category(&self) -> &Arc<FinCat> {
        match self.side {
            Side::Left => self.het.target(),
            Side::Right => self.het.source(),
        }
    }

    /// Hom-set matched with the cell `(x, a)`.
    pub fn hom_cell(&self, x: ObjId, a: ObjId) -> &[MorId] {
        match self.side {
            Side::Left => self.het.target().hom(self.functor.obj(x), a),
            Side::Right => self.het.source().hom(x, self.functor.obj(a)),
        }
    }

    /// Hom to het direction of the bijection at `(x, a)`.
    pub fn to_het(&self, x: ObjId, a: ObjId, m: MorId) -> Option<HetId> {
        let cat = self.hom_category();
        let homs = self.hom_cell(x, a);
        let p = cat.hom_pos(m);
        (homs.get(p) == Some(&m)).then(|| self.hom_to_het[cell_index(&self.het, x, a)][p])
    }

    /// Het to hom direction: the unique factorization of `c`.
    pub fn to_hom(&self, c: HetId) -> MorId {
        self.het_to_hom[c.0]
    }

    /// Exchange two entries of the hom-to-het table at `(x, a)`, leaving
    /// the inverse untouched. Used to check that verification notices.
    pub fn swap_entries(&mut self, x: ObjId, a: ObjId, i: usize, j: usize) {
        let idx = cell_index(&self.het, x, a);
        self.hom_to_het[idx].swap(i, j);
    }
}

/// Check the bijections and all four naturality square families.
pub fn verify_naturality(rep: &Representation) -> CheckSuite {
    let het = &rep.het;
    let (x_cat, a_cat) = (het.source(), het.target());
    let hom_cat = rep.hom_category();
    let g = &rep.functor;
    let hn = |m: MorId| hom_cat.mor_name(m).to_string();
    let mut bij = Vec::new();
    let mut nat_x = Vec::new();
    let mut nat_a = Vec::new();
    let mut inv_x = Vec::new();
    let mut inv_a = Vec::new();
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            let homs = rep.hom_cell(x, a);
            let row = &rep.hom_to_het[cell_index(het, x, a)];
            if homs.len() != het.cell_size(x, a) || row.len() != homs.len() {
                bij.push(format!(
                    "cell ({},{}): {} morphisms vs {} elements",
                    x_cat.obj_name(x),
                    a_cat.obj_name(a),
                    homs.len(),
                    het.cell_size(x, a)
                ));
                continue;
            }
            let mut seen = vec![false; row.len()];
            for (&m, &c) in homs.iter().zip(row) {
                if het.cell_of(c) != (x, a) {
                    bij.push(format!("{} -> {} leaves the cell", hn(m), het.describe(c)));
                    continue;
                }
                let p = het.cell_pos(c);
                if seen[p] {
                    bij.push(format!("{} hit twice", het.describe(c)));
                }
                seen[p] = true;
                if rep.het_to_hom[c.0] != m {
                    bij.push(format!(
                        "{} -> {} but the inverse gives {}",
                        hn(m),
                        het.describe(c),
                        hn(rep.het_to_hom[c.0])
                    ));
                }
            }
        }
    }
    for c in het.elements() {
        let (x, a) = het.cell_of(c);
        let m = rep.het_to_hom[c.0];
        // Precompose with j: x' -> x.
        for &j in x_cat.incoming(x) {
            let x2 = x_cat.dom(j);
            let lhs_hom = match rep.side {
                Side::Left => a_cat.comp(m, g.mor(j)),
                Side::Right => x_cat.comp(m, j),
            };
            let moved = het.left(j, c);
            if rep.to_het(x2, a, lhs_hom) != Some(moved) {
                nat_x.push(format!("{} at {}", x_cat.mor_name(j), het.describe(c)));
            }
            if rep.het_to_hom[moved.0] != lhs_hom {
                inv_x.push(format!("{} at {}", x_cat.mor_name(j), het.describe(c)));
            }
        }
        // Postcompose with k: a -> a'.
        for &k in a_cat.outgoing(a) {
            let a2 = a_cat.cod(k);
            let lhs_hom = match rep.side {
                Side::Left => a_cat.comp(k, m),
                Side::Right => x_cat.comp(g.mor(k), m),
            };
            let moved = het.right(k, c);
            if rep.to_het(x, a2, lhs_hom) != Some(moved) {
                nat_a.push(format!("{} at {}", a_cat.mor_name(k), het.describe(c)));
            }
            if rep.het_to_hom[moved.0] != lhs_hom {
                inv_a.push(format!("{} at {}", a_cat.mor_name(k), het.describe(c)));
            }
        }
    }
    let mut suite = CheckSuite::new();
    suite.record("bijectivity", "representation-bijection", bij);
    suite.record("naturality-x", "representation-naturality", nat_x);
    suite.record("naturality-a", "representation-naturality", nat_a);
    suite.record("inverse-naturality-x", "representation-naturality", inv_x);
    suite.record("inverse-naturality-a", "representation-naturality", inv_a);
    suite
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::het::hom_bifunctor;
    use crate::instances::shapes::{chain, shape};

    #[test]
    fn side_parses() {
        assert_eq!("left".parse::<Side>().unwrap(), Side::Left);
        assert!("up".parse::<Side>().is_err());
    }

    #[test]
    fn identity_is_universal_in_hom() {
        let c = chain(2);
        let h = Arc::new(hom_bifunctor(&c));
        let u = find_universal_element(&h, ObjId(1), Side::Right).unwrap();
        assert_eq!(u.apex, ObjId(1));
        let rep = find_representation(&h, Side::Right).unwrap();
        for e in h.elements() {
            let (x, a) = h.cell_of(e);
            assert_eq!(rep.to_het(x, a, rep.to_hom(e)), Some(e));
        }
    }

    #[test]
    fn the_empty_cell_has_no_universal() {
        // in the discrete category on two points, the hom het is fine, but a
        // het with an empty row has no left universal element there
        let d = shape("discrete2").unwrap();
        let raw = crate::het::RawHet {
            name: "Half".into(),
            cells: vec![("d0".into(), "d0".into(), vec!["c".into()])],
            ..Default::default()
        };
        let h = HetBifunctor::from_raw(d.clone(), d, &raw).unwrap();
        assert!(find_universal_element(&h, ObjId(1), Side::Left).is_err());
    }
}

//! Het-bifunctors: sets of heteromorphisms `Het(x, a)` between an object of
//! a source category `X` and an object of a target category `A`, acted on
//! by `X`-morphisms on the left (precomposition) and `A`-morphisms on the
//! right (postcomposition).
//!
//! Elements carry a global [`HetId`]; ids are contiguous per cell, and the
//! cells are laid out `x`-major. Element names are only unique inside their
//! cell.
//!
//! User-supplied het-bifunctors store their actions as tables. Derived ones
//! (hom-bifunctors, functor-induced, products, cones, ...) compute actions
//! from morphisms of an ambient category.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::category::{tuple_id, FinCat, MorId, ObjId};
use crate::construct::full_subcategory;
use crate::error::{Error, Result};
use crate::functor::{Functor, NatTransform};
use crate::report::ValidationReport;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HetId(pub usize);

#[derive(Clone)]
enum Actions {
    Table {
        names: Vec<String>,
        // left[c][in_pos(h)], right[c][out_pos(k)]
        left: Vec<Vec<HetId>>,
        right: Vec<Vec<HetId>>,
    },
    Ambient(Arc<AmbientView>),
}

/// Elements are tuples of morphisms of an ambient category. A source
/// morphism `h` acts by `c_i . s_i(h)`, a target morphism `k` by
/// `t_i(k) . c_i`; image lists of length one are broadcast.
struct AmbientView {
    ambient: Arc<FinCat>,
    keys: Vec<Vec<MorId>>,
    // keyed by cell index as well: a tuple may occur in several cells
    index: HashMap<(usize, Vec<MorId>), HetId>,
    source_images: Vec<Vec<MorId>>,
    target_images: Vec<Vec<MorId>>,
}

impl AmbientView {
    fn pick(images: &[MorId], i: usize) -> MorId {
        if images.len() == 1 {
            images[0]
        } else {
            images[i]
        }
    }

    fn left(&self, h: MorId, c: HetId, cell: usize) -> Option<HetId> {
        let imgs = &self.source_images[h.0];
        let key: Option<Vec<MorId>> = self.keys[c.0]
            .iter()
            .enumerate()
            .map(|(i, &ci)| self.ambient.compose(ci, Self::pick(imgs, i)))
            .collect();
        self.index.get(&(cell, key?)).copied()
    }

    fn right(&self, k: MorId, c: HetId, cell: usize) -> Option<HetId> {
        let imgs = &self.target_images[k.0];
        let key: Option<Vec<MorId>> = self.keys[c.0]
            .iter()
            .enumerate()
            .map(|(i, &ci)| self.ambient.compose(Self::pick(imgs, i), ci))
            .collect();
        self.index.get(&(cell, key?)).copied()
    }

    fn name(&self, c: HetId) -> String {
        let key = &self.keys[c.0];
        if key.len() == 1 {
            self.ambient.mor_name(key[0]).to_string()
        } else {
            let parts: Vec<&str> = key.iter().map(|&m| self.ambient.mor_name(m)).collect();
            tuple_id(&parts)
        }
    }
}

/// A finite het-bifunctor `Het: X^op x A -> Set`.
#[derive(Clone)]
pub struct HetBifunctor {
    name: String,
    source: Arc<FinCat>,
    target: Arc<FinCat>,
    offsets: Vec<usize>,
    cell_of: Vec<(ObjId, ObjId)>,
    actions: Actions,
}

impl fmt::Debug for HetBifunctor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HetBifunctor")
            .field("name", &self.name)
            .field("source", &self.source.name())
            .field("target", &self.target.name())
            .field("elements", &self.cell_of.len())
            .finish()
    }
}

/// One action entry of a raw het-bifunctor: `mor` acting on `elem` of the
/// cell `(x, a)` gives `result` in the neighbouring cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawAction {
    pub mor: String,
    pub x: String,
    pub a: String,
    pub elem: String,
    pub result: String,
}

/// Unvalidated het-bifunctor tables. Cells not listed are empty; identity
/// actions are implicit unless listed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RawHet {
    pub name: String,
    pub cells: Vec<(String, String, Vec<String>)>,
    pub left: Vec<RawAction>,
    pub right: Vec<RawAction>,
}

fn cell_layout(source: &FinCat, target: &FinCat, sizes: &[usize]) -> (Vec<usize>, Vec<(ObjId, ObjId)>) {
    let mut offsets = Vec::with_capacity(sizes.len() + 1);
    let mut cell_of = Vec::new();
    offsets.push(0);
    for x in source.objects() {
        for a in target.objects() {
            let n = sizes[x.0 * target.num_objects() + a.0];
            cell_of.extend(std::iter::repeat_n((x, a), n));
            offsets.push(cell_of.len());
        }
    }
    (offsets, cell_of)
}

/// Validate raw het tables against the two categories. Dangling names and
/// missing non-identity actions are structural errors; everything else is
/// reported as a law violation.
pub fn check_het_bifunctor(source: &Arc<FinCat>, target: &Arc<FinCat>, raw: &RawHet) -> Result<ValidationReport> {
    let (het, mut report) = build_table(source, target, raw)?;
    report.extend(het.check_laws());
    Ok(report)
}

fn build_table(source: &Arc<FinCat>, target: &Arc<FinCat>, raw: &RawHet) -> Result<(HetBifunctor, ValidationReport)> {
    let na = target.num_objects();
    let mut cells: Vec<Vec<String>> = vec![Vec::new(); source.num_objects() * na];
    let mut seen = vec![false; cells.len()];
    for (x, a, elems) in &raw.cells {
        let (xi, ai) = (source.expect_obj(x)?, target.expect_obj(a)?);
        let idx = xi.0 * na + ai.0;
        if seen[idx] {
            return Err(Error::duplicate("cell", tuple_id(&[x, a])));
        }
        seen[idx] = true;
        for (i, e) in elems.iter().enumerate() {
            if elems[..i].contains(e) {
                return Err(Error::duplicate("het element", format!("{e} in {}", tuple_id(&[x, a]))));
            }
        }
        cells[idx] = elems.clone();
    }
    let sizes: Vec<usize> = cells.iter().map(Vec::len).collect();
    let (offsets, cell_of) = cell_layout(source, target, &sizes);
    let names: Vec<String> = cells.into_iter().flatten().collect();
    let find = |x: ObjId, a: ObjId, e: &str| -> Result<HetId> {
        let idx = x.0 * na + a.0;
        names[offsets[idx]..offsets[idx + 1]]
            .iter()
            .position(|n| n == e)
            .map(|p| HetId(offsets[idx] + p))
            .ok_or_else(|| {
                Error::unknown(
                    "het element",
                    format!("{e} in {}", tuple_id(&[source.obj_name(x), target.obj_name(a)])),
                )
            })
    };
    let mut report = ValidationReport::new();
    let mut left: Vec<Vec<Option<HetId>>> =
        cell_of.iter().map(|&(x, _)| vec![None; source.incoming(x).len()]).collect();
    let mut right: Vec<Vec<Option<HetId>>> =
        cell_of.iter().map(|&(_, a)| vec![None; target.outgoing(a).len()]).collect();
    for act in &raw.left {
        let h = source.expect_mor(&act.mor)?;
        let (x, a) = (source.expect_obj(&act.x)?, target.expect_obj(&act.a)?);
        if source.cod(h) != x {
            return Err(Error::Structural(format!(
                "left action of `{}` on a cell at `{}`, but its codomain is `{}`",
                act.mor,
                act.x,
                source.obj_name(source.cod(h))
            )));
        }
        let c = find(x, a, &act.elem)?;
        let r = find(source.dom(h), a, &act.result)?;
        let slot = &mut left[c.0][source.in_pos(h)];
        if slot.is_some_and(|old| old != r) {
            report.push(
                "action-functional",
                vec![act.mor.clone(), act.elem.clone()],
                "left action given two different results",
            );
        }
        *slot = Some(r);
    }
    for act in &raw.right {
        let k = target.expect_mor(&act.mor)?;
        let (x, a) = (source.expect_obj(&act.x)?, target.expect_obj(&act.a)?);
        if target.dom(k) != a {
            return Err(Error::Structural(format!(
                "right action of `{}` on a cell at `{}`, but its domain is `{}`",
                act.mor,
                act.a,
                target.obj_name(target.dom(k))
            )));
        }
        let c = find(x, a, &act.elem)?;
        let r = find(x, target.cod(k), &act.result)?;
        let slot = &mut right[c.0][target.out_pos(k)];
        if slot.is_some_and(|old| old != r) {
            report.push(
                "action-functional",
                vec![act.mor.clone(), act.elem.clone()],
                "right action given two different results",
            );
        }
        *slot = Some(r);
    }
    let fill = |table: Vec<Vec<Option<HetId>>>, is_left: bool| -> Result<Vec<Vec<HetId>>> {
        table
            .into_iter()
            .enumerate()
            .map(|(ci, row)| {
                let (x, a) = cell_of[ci];
                row.into_iter()
                    .enumerate()
                    .map(|(p, r)| {
                        let (m, cat) = if is_left {
                            (source.incoming(x)[p], source)
                        } else {
                            (target.outgoing(a)[p], target)
                        };
                        match r {
                            Some(r) => Ok(r),
                            None if cat.is_identity(m) => Ok(HetId(ci)),
                            None => Err(Error::Structural(format!(
                                "{} action of `{}` on `{}` in {} is missing",
                                if is_left { "left" } else { "right" },
                                cat.mor_name(m),
                                names[ci],
                                tuple_id(&[source.obj_name(x), target.obj_name(a)])
                            ))),
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let left = fill(left, true)?;
    let right = fill(right, false)?;
    let het = HetBifunctor {
        name: raw.name.clone(),
        source: source.clone(),
        target: target.clone(),
        offsets,
        cell_of,
        actions: Actions::Table { names, left, right },
    };
    Ok((het, report))
}

impl HetBifunctor {
    /// Build and validate from raw tables.
    pub fn from_raw(source: Arc<FinCat>, target: Arc<FinCat>, raw: &RawHet) -> Result<HetBifunctor> {
        let (het, mut report) = build_table(&source, &target, raw)?;
        report.extend(het.check_laws());
        if !report.is_ok() {
            return Err(Error::Laws {
                what: format!("het-bifunctor `{}`", raw.name),
                report,
            });
        }
        Ok(het)
    }

    /// Build from raw tables without checking the action laws.
    pub fn from_raw_unchecked(source: Arc<FinCat>, target: Arc<FinCat>, raw: &RawHet) -> Result<HetBifunctor> {
        Ok(build_table(&source, &target, raw)?.0)
    }

    /// A het-bifunctor whose elements are tuples of morphisms of `ambient`.
    ///
    /// `source_images[h]` and `target_images[k]` give, for every morphism of
    /// the two categories, the ambient morphisms it acts through (one per
    /// tuple slot, or a single one used for all slots). `cells[x*|A|+a]`
    /// lists the tuples of each cell.
    pub fn from_ambient(
        name: impl Into<String>,
        source: Arc<FinCat>,
        target: Arc<FinCat>,
        ambient: Arc<FinCat>,
        source_images: Vec<Vec<MorId>>,
        target_images: Vec<Vec<MorId>>,
        cells: Vec<Vec<Vec<MorId>>>,
    ) -> Result<HetBifunctor> {
        if cells.len() != source.num_objects() * target.num_objects() {
            return Err(Error::Shape("one element list per cell expected".into()));
        }
        if source_images.len() != source.num_morphisms() || target_images.len() != target.num_morphisms() {
            return Err(Error::Shape("one image list per morphism expected".into()));
        }
        let sizes: Vec<usize> = cells.iter().map(Vec::len).collect();
        let (offsets, cell_of) = cell_layout(&source, &target, &sizes);
        let keys: Vec<Vec<MorId>> = cells.into_iter().flatten().collect();
        let mut index = HashMap::with_capacity(keys.len());
        for (i, k) in keys.iter().enumerate() {
            let (x, a) = cell_of[i];
            if index.insert((x.0 * target.num_objects() + a.0, k.clone()), HetId(i)).is_some() {
                let parts: Vec<&str> = k.iter().map(|&m| ambient.mor_name(m)).collect();
                return Err(Error::duplicate("het element", tuple_id(&parts)));
            }
        }
        Ok(HetBifunctor {
            name: name.into(),
            source,
            target,
            offsets,
            cell_of,
            actions: Actions::Ambient(Arc::new(AmbientView {
                ambient,
                keys,
                index,
                source_images,
                target_images,
            })),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> HetBifunctor {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &Arc<FinCat> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCat> {
        &self.target
    }

    pub fn num_elements(&self) -> usize {
        self.cell_of.len()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = HetId> {
        (0..self.cell_of.len()).map(HetId)
    }

    fn cell_index(&self, x: ObjId, a: ObjId) -> usize {
        x.0 * self.target.num_objects() + a.0
    }

    /// Element ids of `Het(x, a)`, in cell order.
    pub fn cell(&self, x: ObjId, a: ObjId) -> impl ExactSizeIterator<Item = HetId> {
        self.cell_range(x, a).map(HetId)
    }

    fn cell_range(&self, x: ObjId, a: ObjId) -> Range<usize> {
        let i = self.cell_index(x, a);
        self.offsets[i]..self.offsets[i + 1]
    }

    pub fn cell_size(&self, x: ObjId, a: ObjId) -> usize {
        self.cell_range(x, a).len()
    }

    /// The cell `(x, a)` containing `c`.
    pub fn cell_of(&self, c: HetId) -> (ObjId, ObjId) {
        self.cell_of[c.0]
    }

    /// Position of `c` inside its cell.
    pub fn cell_pos(&self, c: HetId) -> usize {
        let (x, a) = self.cell_of(c);
        c.0 - self.offsets[self.cell_index(x, a)]
    }

    pub fn element_name(&self, c: HetId) -> String {
        match &self.actions {
            Actions::Table { names, .. } => names[c.0].clone(),
            Actions::Ambient(v) => v.name(c),
        }
    }

    /// `c` together with its cell, for reports.
    pub fn describe(&self, c: HetId) -> String {
        let (x, a) = self.cell_of(c);
        format!(
            "{} in ({},{})",
            self.element_name(c),
            self.source.obj_name(x),
            self.target.obj_name(a)
        )
    }

    pub fn find_element(&self, x: ObjId, a: ObjId, name: &str) -> Option<HetId> {
        self.cell(x, a).find(|&c| self.element_name(c) == name)
    }

    /// The ambient tuple of an element, for derived het-bifunctors.
    pub fn ambient_key(&self, c: HetId) -> Option<&[MorId]> {
        match &self.actions {
            Actions::Ambient(v) => Some(&v.keys[c.0]),
            Actions::Table { .. } => None,
        }
    }

    pub fn ambient(&self) -> Option<&Arc<FinCat>> {
        match &self.actions {
            Actions::Ambient(v) => Some(&v.ambient),
            Actions::Table { .. } => None,
        }
    }

    /// Look an element of the cell `(x, a)` up by its ambient tuple.
    pub fn element_by_key(&self, x: ObjId, a: ObjId, key: &[MorId]) -> Option<HetId> {
        match &self.actions {
            Actions::Ambient(v) => v.index.get(&(self.cell_index(x, a), key.to_vec())).copied(),
            Actions::Table { .. } => None,
        }
    }

    /// The first element with the given ambient tuple, in any cell.
    pub fn find_key(&self, key: &[MorId]) -> Option<HetId> {
        match &self.actions {
            Actions::Ambient(v) => v.keys.iter().position(|k| k.as_slice() == key).map(HetId),
            Actions::Table { .. } => None,
        }
    }

    /// `c . h` for `h: x' -> x` and `c` in `Het(x, a)`; `None` if `h` does
    /// not end at `x` or the result leaves the declared cells.
    pub fn try_left(&self, h: MorId, c: HetId) -> Option<HetId> {
        let (x, a) = self.cell_of(c);
        if self.source.cod(h) != x {
            return None;
        }
        match &self.actions {
            Actions::Table { left, .. } => Some(left[c.0][self.source.in_pos(h)]),
            Actions::Ambient(v) => v.left(h, c, self.cell_index(self.source.dom(h), a)),
        }
    }

    /// `k . c` for `k: a -> a'` and `c` in `Het(x, a)`.
    pub fn try_right(&self, k: MorId, c: HetId) -> Option<HetId> {
        let (x, a) = self.cell_of(c);
        if self.target.dom(k) != a {
            return None;
        }
        match &self.actions {
            Actions::Table { right, .. } => Some(right[c.0][self.target.out_pos(k)]),
            Actions::Ambient(v) => v.right(k, c, self.cell_index(x, self.target.cod(k))),
        }
    }

    /// Left action; panics on a non-composable pair.
    pub fn left(&self, h: MorId, c: HetId) -> HetId {
        self.try_left(h, c).unwrap_or_else(|| {
            panic!(
                "left action of `{}` on `{}` is undefined",
                self.source.mor_name(h),
                self.describe(c)
            )
        })
    }

    /// Right action; panics on a non-composable pair.
    pub fn right(&self, k: MorId, c: HetId) -> HetId {
        self.try_right(k, c).unwrap_or_else(|| {
            panic!(
                "right action of `{}` on `{}` is undefined",
                self.target.mor_name(k),
                self.describe(c)
            )
        })
    }

    /// Check identity actions, functoriality of both actions, that actions
    /// land in the right cells, and that the two actions commute.
    pub fn check_laws(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let (s, t) = (&self.source, &self.target);
        let sn = |m: MorId| s.mor_name(m).to_string();
        let tn = |m: MorId| t.mor_name(m).to_string();
        for c in self.elements() {
            let (x, a) = self.cell_of(c);
            let d = self.describe(c);
            // cells first, so that the remaining laws can use left/right
            let mut closed = true;
            for &h in s.incoming(x) {
                match self.try_left(h, c) {
                    Some(r) if self.cell_of(r) == (s.dom(h), a) => {}
                    _ => {
                        closed = false;
                        report.push("action-cell", vec![sn(h), d.clone()], "left action leaves the cell Het(x', a)");
                    }
                }
            }
            for &k in t.outgoing(a) {
                match self.try_right(k, c) {
                    Some(r) if self.cell_of(r) == (x, t.cod(k)) => {}
                    _ => {
                        closed = false;
                        report.push("action-cell", vec![tn(k), d.clone()], "right action leaves the cell Het(x, a')");
                    }
                }
            }
            if !closed {
                continue;
            }
            if self.left(s.identity(x), c) != c {
                report.push("identity-action", vec![sn(s.identity(x)), d.clone()], "left identity action moves c");
            }
            if self.right(t.identity(a), c) != c {
                report.push("identity-action", vec![tn(t.identity(a)), d.clone()], "right identity action moves c");
            }
            for &h in s.incoming(x) {
                let ch = self.left(h, c);
                for &h2 in s.incoming(s.dom(h)) {
                    let Some(lhs) = self.try_left(s.comp(h, h2), c) else { continue };
                    let Some(rhs) = self.try_left(h2, ch) else { continue };
                    if lhs != rhs {
                        report.push(
                            "left-functoriality",
                            vec![sn(h), sn(h2), d.clone()],
                            format!("c.(h.h') = {} but (c.h).h' = {}", self.describe(lhs), self.describe(rhs)),
                        );
                    }
                }
                for &k in t.outgoing(a) {
                    let (Some(lhs), Some(rhs)) = (self.try_right(k, ch), self.try_left(h, self.right(k, c))) else {
                        continue;
                    };
                    if lhs != rhs {
                        report.push(
                            "commuting-actions",
                            vec![sn(h), tn(k), d.clone()],
                            format!("k.(c.h) = {} but (k.c).h = {}", self.describe(lhs), self.describe(rhs)),
                        );
                    }
                }
            }
            for &k in t.outgoing(a) {
                let kc = self.right(k, c);
                for &k2 in t.outgoing(t.cod(k)) {
                    let Some(lhs) = self.try_right(t.comp(k2, k), c) else { continue };
                    let Some(rhs) = self.try_right(k2, kc) else { continue };
                    if lhs != rhs {
                        report.push(
                            "right-functoriality",
                            vec![tn(k), tn(k2), d.clone()],
                            format!("(k'.k).c = {} but k'.(k.c) = {}", self.describe(lhs), self.describe(rhs)),
                        );
                    }
                }
            }
        }
        report
    }

    /// Explicit tables for every cell and every non-identity action.
    pub fn to_raw(&self) -> RawHet {
        let (s, t) = (&self.source, &self.target);
        let mut raw = RawHet {
            name: self.name.clone(),
            ..RawHet::default()
        };
        for x in s.objects() {
            for a in t.objects() {
                if self.cell_size(x, a) > 0 {
                    raw.cells.push((
                        s.obj_name(x).into(),
                        t.obj_name(a).into(),
                        self.cell(x, a).map(|c| self.element_name(c)).collect(),
                    ));
                }
            }
        }
        for c in self.elements() {
            let (x, a) = self.cell_of(c);
            for &h in s.incoming(x) {
                if s.is_identity(h) {
                    continue;
                }
                if let Some(r) = self.try_left(h, c) {
                    raw.left.push(RawAction {
                        mor: s.mor_name(h).into(),
                        x: s.obj_name(x).into(),
                        a: t.obj_name(a).into(),
                        elem: self.element_name(c),
                        result: self.element_name(r),
                    });
                }
            }
            for &k in t.outgoing(a) {
                if t.is_identity(k) {
                    continue;
                }
                if let Some(r) = self.try_right(k, c) {
                    raw.right.push(RawAction {
                        mor: t.mor_name(k).into(),
                        x: s.obj_name(x).into(),
                        a: t.obj_name(a).into(),
                        elem: self.element_name(c),
                        result: self.element_name(r),
                    });
                }
            }
        }
        raw
    }

    /// Same element sets and action results, compared through names.
    pub fn same_tables(&self, other: &HetBifunctor) -> bool {
        if !self.source.same_tables(&other.source)
            || !self.target.same_tables(&other.target)
            || self.offsets != other.offsets
        {
            return false;
        }
        self.elements().all(|c| {
            let (x, a) = self.cell_of(c);
            self.element_name(c) == other.element_name(c)
                && self.source.incoming(x).iter().all(|&h| self.try_left(h, c) == other.try_left(h, c))
                && self.target.outgoing(a).iter().all(|&k| self.try_right(k, c) == other.try_right(k, c))
        })
    }
}

/// `Hom_C(-, -)` as a het-bifunctor from `C` to itself.
pub fn hom_bifunctor(c: &Arc<FinCat>) -> HetBifunctor {
    het_from_functor(&Functor::identity(c.clone()), HetSide::Left).renamed(format!("Hom_{}", c.name()))
}

/// Which argument of `Hom_A` the functor is plugged into.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum HetSide {
    /// `Het(x, a) = Hom_A(Fx, a)`, from `X` to `A`.
    Left,
    /// `Het(a, x) = Hom_A(a, Fx)`, from `A` to `X`.
    Right,
}

/// The het-bifunctor induced by a functor `F: X -> A`.
pub fn het_from_functor(f: &Functor, side: HetSide) -> HetBifunctor {
    let (x, a) = (f.source(), f.target());
    let id_images = |c: &FinCat| -> Vec<Vec<MorId>> { c.morphisms().map(|m| vec![m]).collect() };
    let f_images: Vec<Vec<MorId>> = x.morphisms().map(|m| vec![f.mor(m)]).collect();
    match side {
        HetSide::Left => {
            let mut cells = Vec::with_capacity(x.num_objects() * a.num_objects());
            for xo in x.objects() {
                for ao in a.objects() {
                    cells.push(a.hom(f.obj(xo), ao).iter().map(|&m| vec![m]).collect());
                }
            }
            HetBifunctor::from_ambient(
                format!("HomL_{}", f.name()),
                x.clone(),
                a.clone(),
                a.clone(),
                f_images,
                id_images(a),
                cells,
            )
        }
        HetSide::Right => {
            let mut cells = Vec::with_capacity(x.num_objects() * a.num_objects());
            for ao in a.objects() {
                for xo in x.objects() {
                    cells.push(a.hom(ao, f.obj(xo)).iter().map(|&m| vec![m]).collect());
                }
            }
            HetBifunctor::from_ambient(
                format!("HomR_{}", f.name()),
                a.clone(),
                x.clone(),
                a.clone(),
                id_images(a),
                f_images,
                cells,
            )
        }
    }
    .expect("hom-sets hold distinct morphisms")
}

/// `Het(b, a) = Hom_B(b, a)` from `B` to the full subcategory on `objects`,
/// together with that subcategory's inclusion.
pub fn reflective_het(b: &Arc<FinCat>, objects: &[ObjId]) -> Result<(HetBifunctor, Functor)> {
    if objects.is_empty() {
        return Err(Error::Precondition("reflective subcategory needs an object".into()));
    }
    if let Some(o) = objects.iter().find(|o| o.0 >= b.num_objects()) {
        return Err(Error::unknown("object", format!("#{}", o.0)));
    }
    let (_, incl) = full_subcategory(b, format!("{}_refl", b.name()), objects)?;
    Ok((het_from_functor(&incl, HetSide::Right).renamed(format!("Het_{}", b.name())), incl))
}

/// A family `t_x` in `Het(Fx, Hx)` for functors `F: X -> A`, `H: X -> B`.
#[derive(Clone, Debug)]
pub struct HetNatTransform {
    from: Functor,
    to: Functor,
    het: Arc<HetBifunctor>,
    components: Vec<HetId>,
}

pub fn check_het_nat_transform(
    from: &Functor,
    to: &Functor,
    het: &HetBifunctor,
    components: &[HetId],
) -> Result<ValidationReport> {
    if !Arc::ptr_eq(from.source(), to.source()) && !from.source().same_tables(to.source()) {
        return Err(Error::Shape("both functors need one source".into()));
    }
    if !from.target().same_tables(het.source()) || !to.target().same_tables(het.target()) {
        return Err(Error::Shape("functor targets do not match the het-bifunctor".into()));
    }
    let x = from.source();
    if components.len() != x.num_objects() {
        return Err(Error::Structural(format!(
            "{} components given for {} objects",
            components.len(),
            x.num_objects()
        )));
    }
    let mut report = ValidationReport::new();
    for o in x.objects() {
        let c = components[o.0];
        if c.0 >= het.num_elements() || het.cell_of(c) != (from.obj(o), to.obj(o)) {
            return Err(Error::Structural(format!(
                "component at `{}` is not in Het(F{0}, H{0})",
                x.obj_name(o)
            )));
        }
    }
    for j in x.morphisms() {
        let (s, t) = (x.dom(j), x.cod(j));
        let lhs = het.right(to.mor(j), components[s.0]);
        let rhs = het.left(from.mor(j), components[t.0]);
        if lhs != rhs {
            report.push(
                "het-naturality",
                vec![x.mor_name(j).into(), het.describe(lhs), het.describe(rhs)],
                "Hj . t_x != t_x' . Fj",
            );
        }
    }
    Ok(report)
}

impl HetNatTransform {
    pub fn new(from: Functor, to: Functor, het: Arc<HetBifunctor>, components: Vec<HetId>) -> Result<Self> {
        let report = check_het_nat_transform(&from, &to, &het, &components)?;
        if !report.is_ok() {
            return Err(Error::Laws {
                what: "het natural transformation".into(),
                report,
            });
        }
        Ok(HetNatTransform {
            from,
            to,
            het,
            components,
        })
    }

    pub fn from(&self) -> &Functor {
        &self.from
    }

    pub fn to(&self) -> &Functor {
        &self.to
    }

    pub fn het(&self) -> &Arc<HetBifunctor> {
        &self.het
    }

    pub fn component(&self, x: ObjId) -> HetId {
        self.components[x.0]
    }

    pub fn components(&self) -> &[HetId] {
        &self.components
    }

    pub fn check(&self) -> ValidationReport {
        check_het_nat_transform(&self.from, &self.to, &self.het, &self.components)
            .expect("shape validated on construction")
    }
}

/// Act on `t: F => H` with `alpha: F' -> F` and `beta: H -> H'`, giving
/// `F' => H'` with components `beta_x . t_x . alpha_x`.
pub fn act_nat_transforms_on_het(
    alpha: &NatTransform,
    t: &HetNatTransform,
    beta: &NatTransform,
) -> Result<HetNatTransform> {
    if !alpha.to().same_tables(t.from()) || !beta.from().same_tables(t.to()) {
        return Err(Error::Shape(
            "alpha must end at the het transformation's source functor and beta start at its target".into(),
        ));
    }
    let het = t.het();
    let comps: Vec<HetId> = t
        .from()
        .source()
        .objects()
        .map(|x| het.right(beta.component(x), het.left(alpha.component(x), t.component(x))))
        .collect();
    HetNatTransform::new(alpha.from().clone(), beta.to().clone(), het.clone(), comps)
}

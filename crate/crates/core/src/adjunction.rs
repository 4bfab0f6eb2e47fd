//! Adjunctions `F -| G` between finite categories, given by the transpose
//! bijection `phi: Hom_A(Fx, a) -> Hom_X(x, Ga)`, and their synthesis from
//! het-bifunctors representable on both sides.

use std::fmt;
use std::sync::Arc;

use crate::category::{FinCat, MorId, ObjId};
use crate::error::{Error, Result};
use crate::functor::{Functor, NatTransform};
use crate::het::{HetBifunctor, HetId, HetNatTransform};
use crate::report::CheckSuite;
use crate::represent::{find_representation, PartialRepresentation, Representation, Side};

/// Unvalidated adjunction data. `phi[x*|A| + a]` lists, for each `g` in
/// `Hom_A(Fx, a)` in hom-set order, its transpose in `Hom_X(x, Ga)`.
/// Unit and counit are derived from `phi` when absent.
#[derive(Clone, Debug)]
pub struct AdjunctionData {
    pub left: Functor,
    pub right: Functor,
    pub phi: Vec<Vec<MorId>>,
    pub unit: Option<Vec<MorId>>,
    pub counit: Option<Vec<MorId>>,
}

impl AdjunctionData {
    /// Tabulate `phi(x, a, g)` over every cell.
    pub fn from_fn(left: Functor, right: Functor, mut phi: impl FnMut(ObjId, ObjId, MorId) -> MorId) -> Self {
        let (x_cat, a_cat) = (left.source().clone(), left.target().clone());
        let mut table = Vec::with_capacity(x_cat.num_objects() * a_cat.num_objects());
        for x in x_cat.objects() {
            for a in a_cat.objects() {
                table.push(a_cat.hom(left.obj(x), a).iter().map(|&g| phi(x, a, g)).collect());
            }
        }
        AdjunctionData {
            left,
            right,
            phi: table,
            unit: None,
            counit: None,
        }
    }

    /// `phi(g) = Gg . eta_x` from a candidate unit.
    pub fn from_unit(left: Functor, right: Functor, unit: Vec<MorId>) -> Result<Self> {
        let x_cat = left.source().clone();
        if unit.len() != x_cat.num_objects() {
            return Err(Error::Shape("unit needs one component per object".into()));
        }
        for x in x_cat.objects() {
            let eta = unit[x.0];
            let gfx = right.obj(left.obj(x));
            if eta.0 >= x_cat.num_morphisms() || x_cat.dom(eta) != x || x_cat.cod(eta) != gfx {
                return Err(Error::Shape(format!(
                    "unit component at {} must run to {}",
                    x_cat.obj_name(x),
                    x_cat.obj_name(gfx)
                )));
            }
        }
        let g2 = right.clone();
        let u = unit.clone();
        let mut d = AdjunctionData::from_fn(left, right, |x, _, g| x_cat.comp(g2.mor(g), u[x.0]));
        d.unit = Some(unit);
        Ok(d)
    }

    /// The identity adjunction `1_C -| 1_C`.
    pub fn identity(c: &Arc<FinCat>) -> Self {
        let id = Functor::identity(c.clone());
        AdjunctionData::from_fn(id.clone(), id, |_, _, g| g)
    }
}

fn cell(a_cat: &FinCat, x: ObjId, a: ObjId) -> usize {
    x.0 * a_cat.num_objects() + a.0
}

/// Run every adjunction check as a named entry. Shape mismatches between
/// the functors are errors; law failures are recorded in the suite.
pub fn check_adjunction(d: &AdjunctionData) -> Result<CheckSuite> {
    let (f, g) = (&d.left, &d.right);
    let (x_cat, a_cat) = (f.source(), f.target());
    if !x_cat.same_tables(g.target()) || !a_cat.same_tables(g.source()) {
        return Err(Error::Shape("need F: X -> A and G: A -> X".into()));
    }
    if d.phi.len() != x_cat.num_objects() * a_cat.num_objects() {
        return Err(Error::Shape("phi needs one row per cell".into()));
    }
    let xn = |m: MorId| x_cat.mor_name(m).to_string();
    let an = |m: MorId| a_cat.mor_name(m).to_string();
    let cell_name = |x: ObjId, a: ObjId| format!("({},{})", x_cat.obj_name(x), a_cat.obj_name(a));
    let mut suite = CheckSuite::new();

    let mut sizes = Vec::new();
    let mut bij = Vec::new();
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            let homs_a = a_cat.hom(f.obj(x), a);
            let homs_x = x_cat.hom(x, g.obj(a));
            let row = &d.phi[cell(a_cat, x, a)];
            if homs_a.len() != homs_x.len() {
                sizes.push(format!(
                    "{}: |Hom_A(Fx,a)| = {} but |Hom_X(x,Ga)| = {}",
                    cell_name(x, a),
                    homs_a.len(),
                    homs_x.len()
                ));
                continue;
            }
            if row.len() != homs_a.len() {
                sizes.push(format!("{}: phi row has {} entries", cell_name(x, a), row.len()));
                continue;
            }
            let mut seen = vec![false; homs_x.len()];
            for (&gm, &fm) in homs_a.iter().zip(row) {
                if fm.0 >= x_cat.num_morphisms() || x_cat.dom(fm) != x || x_cat.cod(fm) != g.obj(a) {
                    bij.push(format!("phi({}) is not in Hom_X(x,Ga) at {}", an(gm), cell_name(x, a)));
                    continue;
                }
                let p = x_cat.hom_pos(fm);
                if seen[p] {
                    bij.push(format!("{} hit twice at {}", xn(fm), cell_name(x, a)));
                }
                seen[p] = true;
            }
        }
    }
    suite.record("sizes", "adjunction-definition", sizes);
    if !suite.all_passed() {
        return Ok(suite);
    }
    suite.record("bijectivity", "adjunction-definition", bij);
    if !suite.all_passed() {
        return Ok(suite);
    }

    let adj = Adjunction::assemble(d.clone());
    let mut nat_x = Vec::new();
    let mut nat_a = Vec::new();
    let mut formula = Vec::new();
    let mut formula_inv = Vec::new();
    let mut double = Vec::new();
    let mut direction = Vec::new();
    for x in x_cat.objects() {
        for a in a_cat.objects() {
            for &gm in a_cat.hom(f.obj(x), a) {
                let fm = adj.phi_at(x, gm);
                for &j in x_cat.incoming(x) {
                    let lhs = adj.phi_at(x_cat.dom(j), a_cat.comp(gm, f.mor(j)));
                    let rhs = x_cat.comp(fm, j);
                    if lhs != rhs {
                        nat_x.push(format!("g={} j={}: phi(g.Fj)={} phi(g).j={}", an(gm), xn(j), xn(lhs), xn(rhs)));
                    }
                }
                for &k in a_cat.outgoing(a) {
                    let lhs = adj.phi_at(x, a_cat.comp(k, gm));
                    let rhs = x_cat.comp(g.mor(k), fm);
                    if lhs != rhs {
                        nat_a.push(format!("g={} k={}: phi(k.g)={} Gk.phi(g)={}", an(gm), an(k), xn(lhs), xn(rhs)));
                    }
                }
                let via_unit = x_cat.comp(g.mor(gm), adj.unit[x.0]);
                if via_unit != fm {
                    formula.push(format!("g={}: phi(g)={} Gg.eta={}", an(gm), xn(fm), xn(via_unit)));
                }
                if adj.phi_inv_at(a, fm) != gm {
                    double.push(format!("g={} at {}", an(gm), cell_name(x, a)));
                }
                if x_cat.dom(via_unit) != x || x_cat.cod(via_unit) != g.obj(a) {
                    direction.push(format!("Gg.eta for g={} does not run x -> Ga", an(gm)));
                }
            }
            for &fm in x_cat.hom(x, g.obj(a)) {
                let gm = adj.phi_inv_at(a, fm);
                let via_counit = a_cat.comp(adj.counit[a.0], f.mor(fm));
                if via_counit != gm {
                    formula_inv.push(format!("f={}: phi^-1(f)={} eps.Ff={}", xn(fm), an(gm), an(via_counit)));
                }
                if adj.phi_at(x, gm) != fm {
                    double.push(format!("f={} at {}", xn(fm), cell_name(x, a)));
                }
                if a_cat.dom(via_counit) != f.obj(x) || a_cat.cod(via_counit) != a {
                    direction.push(format!("eps.Ff for f={} does not run Fx -> a", xn(fm)));
                }
            }
        }
    }
    suite.record("naturality-x", "adjunction-definition", nat_x);
    suite.record("naturality-a", "adjunction-definition", nat_a);

    let mut unit_corr = Vec::new();
    if let Some(u) = &d.unit {
        for x in x_cat.objects() {
            if u.get(x.0) != Some(&adj.unit[x.0]) {
                unit_corr.push(format!("eta at {} is not phi(1_Fx) = {}", x_cat.obj_name(x), xn(adj.unit[x.0])));
            }
        }
    }
    suite.record("unit-correlation", "units-and-counits", unit_corr);
    let mut counit_corr = Vec::new();
    if let Some(e) = &d.counit {
        for a in a_cat.objects() {
            if e.get(a.0) != Some(&adj.counit[a.0]) {
                counit_corr.push(format!(
                    "eps at {} is not phi^-1(1_Ga) = {}",
                    a_cat.obj_name(a),
                    an(adj.counit[a.0])
                ));
            }
        }
    }
    suite.record("counit-correlation", "units-and-counits", counit_corr);
    suite.record("transpose-formula", "adjoint-transposes", formula);
    suite.record("transpose-formula-inverse", "adjoint-transposes", formula_inv);
    suite.record("double-transpose", "adjoint-transposes", double);
    suite.record("directionality", "adjoint-transposes", direction);

    let mut tri_left = Vec::new();
    for x in x_cat.objects() {
        let lhs = a_cat.comp(adj.counit[f.obj(x).0], f.mor(adj.unit[x.0]));
        if lhs != a_cat.identity(f.obj(x)) {
            tri_left.push(format!("eps_Fx . F eta_x = {} at {}", an(lhs), x_cat.obj_name(x)));
        }
    }
    let mut tri_right = Vec::new();
    for a in a_cat.objects() {
        let lhs = x_cat.comp(g.mor(adj.counit[a.0]), adj.unit[g.obj(a).0]);
        if lhs != x_cat.identity(g.obj(a)) {
            tri_right.push(format!("G eps_a . eta_Ga = {} at {}", xn(lhs), a_cat.obj_name(a)));
        }
    }
    suite.record("triangle-F", "triangle-identities", tri_left);
    suite.record("triangle-G", "triangle-identities", tri_right);
    Ok(suite)
}

/// Both representations of the het-bifunctor an adjunction was built from.
#[derive(Clone, Debug)]
pub struct HetCore {
    pub het: Arc<HetBifunctor>,
    pub left_rep: Representation,
    pub right_rep: Representation,
}

impl HetCore {
    /// Het unit `h_x` in `Het(x, Fx)`.
    pub fn het_unit(&self, x: ObjId) -> HetId {
        self.left_rep.universal(x).element
    }

    /// Het counit `e_a` in `Het(Ga, a)`.
    pub fn het_counit(&self, a: ObjId) -> HetId {
        self.right_rep.universal(a).element
    }
}

/// A validated adjunction.
#[derive(Clone, Debug)]
pub struct Adjunction {
    left: Functor,
    right: Functor,
    phi: Vec<Vec<MorId>>,
    phi_inv: Vec<Vec<MorId>>,
    unit: Vec<MorId>,
    counit: Vec<MorId>,
    het_core: Option<HetCore>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `g: Fx -> a` to `phi(g): x -> Ga`.
    Forward,
    /// `f: x -> Ga` to `phi^-1(f): Fx -> a`.
    Backward,
}

impl Adjunction {
    // Tables only; callers must have checked sizes and bijectivity.
    fn assemble(d: AdjunctionData) -> Adjunction {
        let f = &d.left;
        let (x_cat, a_cat) = (f.source().clone(), f.target().clone());
        let mut phi_inv = vec![Vec::new(); d.phi.len()];
        for x in x_cat.objects() {
            for a in a_cat.objects() {
                let i = cell(&a_cat, x, a);
                let homs_a = a_cat.hom(f.obj(x), a);
                let mut inv = vec![MorId(usize::MAX); homs_a.len()];
                for (&gm, &fm) in homs_a.iter().zip(&d.phi[i]) {
                    inv[x_cat.hom_pos(fm)] = gm;
                }
                phi_inv[i] = inv;
            }
        }
        let mut adj = Adjunction {
            left: d.left,
            right: d.right,
            phi: d.phi,
            phi_inv,
            unit: Vec::new(),
            counit: Vec::new(),
            het_core: None,
        };
        adj.unit = x_cat
            .objects()
            .map(|x| adj.phi_at(x, a_cat.identity(adj.left.obj(x))))
            .collect();
        adj.counit = a_cat
            .objects()
            .map(|a| adj.phi_inv_at(a, x_cat.identity(adj.right.obj(a))))
            .collect();
        adj
    }

    /// Validate and build.
    pub fn new(d: AdjunctionData) -> Result<Adjunction> {
        let suite = check_adjunction(&d)?;
        if !suite.all_passed() {
            return Err(Error::Precondition(format!("not an adjunction:\n{suite}")));
        }
        Ok(Adjunction::assemble(d))
    }

    pub fn identity(c: &Arc<FinCat>) -> Adjunction {
        Adjunction::new(AdjunctionData::identity(c)).expect("identity adjunction")
    }

    pub fn left(&self) -> &Functor {
        &self.left
    }

    pub fn right(&self) -> &Functor {
        &self.right
    }

    pub fn x(&self) -> &Arc<FinCat> {
        self.left.source()
    }

    pub fn a(&self) -> &Arc<FinCat> {
        self.left.target()
    }

    pub fn unit(&self, x: ObjId) -> MorId {
        self.unit[x.0]
    }

    pub fn counit(&self, a: ObjId) -> MorId {
        self.counit[a.0]
    }

    pub fn het_core(&self) -> Option<&HetCore> {
        self.het_core.as_ref()
    }

    fn phi_at(&self, x: ObjId, g: MorId) -> MorId {
        let a_cat = self.a();
        self.phi[cell(a_cat, x, a_cat.cod(g))][a_cat.hom_pos(g)]
    }

    fn phi_inv_at(&self, a: ObjId, f: MorId) -> MorId {
        let x_cat = self.x();
        self.phi_inv[cell(self.a(), x_cat.dom(f), a)][x_cat.hom_pos(f)]
    }

    /// `phi(g)` for `g: Fx -> a`.
    pub fn phi(&self, x: ObjId, g: MorId) -> Result<MorId> {
        let a_cat = self.a();
        if g.0 >= a_cat.num_morphisms() || x.0 >= self.x().num_objects() || a_cat.dom(g) != self.left.obj(x) {
            return Err(Error::Shape(format!("morphism is not in Hom_A(F{}, -)", self.x().obj_name(x))));
        }
        Ok(self.phi_at(x, g))
    }

    /// `phi^-1(f)` for `f: x -> Ga`.
    pub fn phi_inv(&self, a: ObjId, f: MorId) -> Result<MorId> {
        let x_cat = self.x();
        if f.0 >= x_cat.num_morphisms() || a.0 >= self.a().num_objects() || x_cat.cod(f) != self.right.obj(a) {
            return Err(Error::Shape(format!("morphism is not in Hom_X(-, G{})", self.a().obj_name(a))));
        }
        Ok(self.phi_inv_at(a, f))
    }

    /// Adjoint transpose. `other` is the object not determined by `m`: the
    /// `x` of `g: Fx -> a` going forward, the `a` of `f: x -> Ga` going
    /// backward.
    pub fn transpose(&self, m: MorId, direction: Direction, other: ObjId) -> Result<MorId> {
        match direction {
            Direction::Forward => self.phi(other, m),
            Direction::Backward => self.phi_inv(other, m),
        }
    }

    pub fn data(&self) -> AdjunctionData {
        AdjunctionData {
            left: self.left.clone(),
            right: self.right.clone(),
            phi: self.phi.clone(),
            unit: Some(self.unit.clone()),
            counit: Some(self.counit.clone()),
        }
    }

    /// Re-run the full check suite, plus the het squares when present.
    pub fn checks(&self) -> CheckSuite {
        let mut suite = check_adjunction(&self.data()).expect("shapes validated on construction");
        if self.het_core.is_some() {
            suite.extend(self.het_checks());
        }
        suite
    }

    /// Het square factorizations for every element, and agreement of `phi`
    /// with the composite through the het cell.
    pub fn het_checks(&self) -> CheckSuite {
        let mut suite = CheckSuite::new();
        let Some(core) = &self.het_core else {
            return suite;
        };
        let het = &core.het;
        let mut squares = Vec::new();
        for c in het.elements() {
            let sq = self.het_square(c).expect("het core present");
            squares.extend(sq.violations(self));
        }
        suite.record("het-square", "het-adjunctive-square", squares);
        let mut units = Vec::new();
        for x in self.x().objects() {
            let h = core.het_unit(x);
            if core.right_rep.to_hom(h) != self.unit[x.0] {
                units.push(format!("unit at {} is not the transpose of h_x", self.x().obj_name(x)));
            }
        }
        for a in self.a().objects() {
            let e = core.het_counit(a);
            if core.left_rep.to_hom(e) != self.counit[a.0] {
                units.push(format!("counit at {} is not the transpose of e_a", self.a().obj_name(a)));
            }
        }
        suite.record("het-unit-correlation", "units-and-counits", units);
        suite
    }

    pub fn het_square(&self, c: HetId) -> Option<HetAdjunctiveSquare> {
        let core = self.het_core.as_ref()?;
        let (x, a) = core.het.cell_of(c);
        Some(HetAdjunctiveSquare {
            c,
            x,
            a,
            top: core.right_rep.to_hom(c),
            bottom: core.left_rep.to_hom(c),
            unit: core.het_unit(x),
            counit: core.het_counit(a),
        })
    }

    /// The hom-pair square for `f: x -> Ga`.
    pub fn hom_pair_square(&self, x: ObjId, a: ObjId, f: MorId) -> Result<HomPairSquare> {
        let x_cat = self.x();
        if x_cat.dom(f) != x {
            return Err(Error::Shape("f must start at x".into()));
        }
        let g = self.phi_inv(a, f)?;
        let (ff, gg) = (&self.left, &self.right);
        let a_cat = self.a();
        Ok(HomPairSquare {
            x,
            a,
            top: (f, ff.mor(f)),
            left: (self.unit[x.0], a_cat.identity(ff.obj(x))),
            right: (x_cat.identity(gg.obj(a)), self.counit[a.0]),
            bottom: (gg.mor(g), g),
            diagonal: (f, g),
        })
    }

    pub fn unit_counit(&self) -> UnitCounit {
        let (f, g) = (&self.left, &self.right);
        let eta = NatTransform::new(
            Functor::identity(self.x().clone()),
            f.then(g).expect("F and G compose"),
            self.unit.clone(),
        )
        .expect("unit is natural");
        let epsilon = NatTransform::new(
            g.then(f).expect("G and F compose"),
            Functor::identity(self.a().clone()),
            self.counit.clone(),
        )
        .expect("counit is natural");
        let (het_unit, het_counit) = match &self.het_core {
            Some(core) => (
                Some(
                    HetNatTransform::new(
                        Functor::identity(self.x().clone()),
                        f.clone(),
                        core.het.clone(),
                        self.x().objects().map(|x| core.het_unit(x)).collect(),
                    )
                    .expect("het unit is natural"),
                ),
                Some(
                    HetNatTransform::new(
                        g.clone(),
                        Functor::identity(self.a().clone()),
                        core.het.clone(),
                        self.a().objects().map(|a| core.het_counit(a)).collect(),
                    )
                    .expect("het counit is natural"),
                ),
            ),
            None => (None, None),
        };
        UnitCounit {
            eta,
            epsilon,
            het_unit,
            het_counit,
        }
    }
}

/// `c` in `Het(x, a)` with its two factorizations `g(c) . h_x = c = e_a . f(c)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct HetAdjunctiveSquare {
    pub c: HetId,
    pub x: ObjId,
    pub a: ObjId,
    /// `f(c): x -> Ga`.
    pub top: MorId,
    /// `g(c): Fx -> a`.
    pub bottom: MorId,
    pub unit: HetId,
    pub counit: HetId,
}

impl HetAdjunctiveSquare {
    pub fn violations(&self, adj: &Adjunction) -> Vec<String> {
        let mut out = Vec::new();
        let Some(core) = adj.het_core() else {
            out.push("adjunction has no het-bifunctor".into());
            return out;
        };
        let het = &core.het;
        let d = het.describe(self.c);
        if het.try_right(self.bottom, self.unit) != Some(self.c) {
            out.push(format!("g(c) . h_x != c for {d}"));
        }
        if het.try_left(self.top, self.counit) != Some(self.c) {
            out.push(format!("e_a . f(c) != c for {d}"));
        }
        if adj.phi(self.x, self.bottom).ok() != Some(self.top) {
            out.push(format!("phi(g(c)) != f(c) for {d}"));
        }
        out
    }
}

/// Pairs of morphisms in `X x A` around `f: x -> Ga` and `g = phi^-1(f)`:
/// `(x,Fx) -> (Ga,FGa) -> (Ga,a)` along the top and right,
/// `(x,Fx) -> (GFx,Fx) -> (Ga,a)` along the left and bottom.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct HomPairSquare {
    pub x: ObjId,
    pub a: ObjId,
    pub top: (MorId, MorId),
    pub left: (MorId, MorId),
    pub right: (MorId, MorId),
    pub bottom: (MorId, MorId),
    pub diagonal: (MorId, MorId),
}

impl HomPairSquare {
    pub fn violations(&self, adj: &Adjunction) -> Vec<String> {
        let (x_cat, a_cat) = (adj.x(), adj.a());
        let comp = |q: (MorId, MorId), p: (MorId, MorId)| -> Option<(MorId, MorId)> {
            Some((x_cat.compose(q.0, p.0)?, a_cat.compose(q.1, p.1)?))
        };
        let mut out = Vec::new();
        match comp(self.right, self.top) {
            Some(p) if p == self.diagonal => {}
            _ => out.push("right . top != diagonal".to_string()),
        }
        match comp(self.bottom, self.left) {
            Some(p) if p == self.diagonal => {}
            _ => out.push("bottom . left != diagonal".to_string()),
        }
        if adj.phi_inv(self.a, self.diagonal.0).ok() != Some(self.diagonal.1) {
            out.push("diagonal is not a transpose pair".to_string());
        }
        out
    }
}

pub struct UnitCounit {
    pub eta: NatTransform,
    pub epsilon: NatTransform,
    pub het_unit: Option<HetNatTransform>,
    pub het_counit: Option<HetNatTransform>,
}

/// Why synthesis failed: the partial reports of the failing sides, or the
/// checks that failed on the assembled adjunction.
#[derive(Clone, Debug)]
pub struct SynthesisFailure {
    pub left: Option<PartialRepresentation>,
    pub right: Option<PartialRepresentation>,
    pub checks: Option<CheckSuite>,
}

impl SynthesisFailure {
    /// Exactly one side is representable.
    pub fn is_half_adjunction(&self) -> bool {
        self.left.is_some() != self.right.is_some()
    }
}

impl fmt::Display for SynthesisFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = &self.left {
            write!(f, "{l}")?;
        }
        if let Some(r) = &self.right {
            write!(f, "{r}")?;
        }
        if let Some(c) = &self.checks {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Represent `het` on both sides and compose the bijections through the
/// het cells: `Hom_A(Fx, a) = Het(x, a) = Hom_X(x, Ga)`.
pub fn synthesize_adjunction(het: &Arc<HetBifunctor>) -> std::result::Result<Adjunction, SynthesisFailure> {
    let left = find_representation(het, Side::Left);
    let right = find_representation(het, Side::Right);
    let (left_rep, right_rep) = match (left, right) {
        (Ok(l), Ok(r)) => (l, r),
        (l, r) => {
            return Err(SynthesisFailure {
                left: l.err(),
                right: r.err(),
                checks: None,
            })
        }
    };
    let data = AdjunctionData::from_fn(left_rep.functor().clone(), right_rep.functor().clone(), |x, a, g| {
        right_rep.to_hom(left_rep.to_het(x, a, g).expect("g lies in Hom_A(Fx, a)"))
    });
    let suite = match check_adjunction(&data) {
        Ok(s) => s,
        Err(e) => {
            let mut s = CheckSuite::new();
            s.record("shapes", "adjunction-definition", vec![e.to_string()]);
            s
        }
    };
    if !suite.all_passed() {
        return Err(SynthesisFailure {
            left: None,
            right: None,
            checks: Some(suite),
        });
    }
    let mut adj = Adjunction::assemble(data);
    adj.het_core = Some(HetCore {
        het: het.clone(),
        left_rep,
        right_rep,
    });
    let het_suite = adj.het_checks();
    if !het_suite.all_passed() {
        return Err(SynthesisFailure {
            left: None,
            right: None,
            checks: Some(het_suite),
        });
    }
    Ok(adj)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::het::hom_bifunctor;
    use crate::instances::shapes::chain;

    #[test]
    fn identity_adjunction_passes_every_check() {
        let adj = Adjunction::identity(&chain(3));
        assert!(adj.checks().all_passed());
        let x = ObjId(0);
        let f = adj.x().identity(x);
        assert_eq!(adj.phi(x, f).unwrap(), f);
        assert_eq!(adj.phi_inv(x, f).unwrap(), f);
    }

    #[test]
    fn synthesized_hom_adjunction_has_commuting_squares() {
        let het = Arc::new(hom_bifunctor(&chain(3)));
        let adj = synthesize_adjunction(&het).unwrap();
        for c in het.elements() {
            assert!(adj.het_square(c).unwrap().violations(&adj).is_empty());
        }
        assert!(adj.het_checks().all_passed());
    }

    #[test]
    fn a_wrong_unit_is_caught() {
        let c = chain(2);
        let id = Functor::identity(c.clone());
        let f = c.expect_mor("c0_c1").unwrap();
        // eta_c0 = c0 -> c1 does not land in Hom(c0, GF c0) = Hom(c0, c0)
        assert!(AdjunctionData::from_unit(id.clone(), id, vec![f, c.identity(ObjId(1))]).is_err());
    }
}

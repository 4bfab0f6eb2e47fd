//! Every adjunction comes from a het-bifunctor.
//!
//! Given `F -| G` between `X` and `A`, embed `X` and `A` into `X x A` as the
//! graphs `x -> (x, Fx)` and `a -> (Ga, a)`. The transpose pairs `(f, phi^-1 f)`
//! between graph objects form an "abstract" het-bifunctor, and representing
//! it on both sides recovers the adjunction up to isomorphism, with the twist
//! functor `(x, a) -> (Ga, Fx)` as the reference.

use std::sync::Arc;

use crate::adjunction::{synthesize_adjunction, Adjunction};
use crate::category::{FinCat, MorId, ObjId};
use crate::construct::{image_subcategory, product_category, ProductCategory};
use crate::error::{Error, Result};
use crate::functor::Functor;
use crate::het::{HetBifunctor, HetId};
use crate::report::CheckSuite;
use crate::represent::{check_universal, Side};

/// The graph of a functor inside a product category.
#[derive(Clone, Debug)]
pub struct GraphEmbedding {
    pub side: Side,
    /// `(1, F): X -> X x A` on the left, `(G, 1): A -> X x A` on the right.
    pub embedding: Functor,
    pub image: Arc<FinCat>,
    pub inclusion: Functor,
    /// Source category onto the image.
    pub to_image: Functor,
    /// Image back onto the source category.
    pub from_image: Functor,
}

fn by_name(from: &FinCat, to: &Arc<FinCat>, o: ObjId) -> Option<ObjId> {
    to.obj(from.obj_name(o))
}

fn mor_by_name(from: &FinCat, to: &Arc<FinCat>, m: MorId) -> Option<MorId> {
    to.mor(from.mor_name(m))
}

/// Embed the graph of `f` into `product`, which must be `X x A` with
/// `f: X -> A` (left) or `f: A -> X` (right).
pub fn graph_embed(f: &Functor, side: Side, product: &ProductCategory) -> Result<GraphEmbedding> {
    let src = f.source();
    let id = Functor::identity(src.clone());
    let embedding = match side {
        Side::Left => product.pairing(&id, f)?,
        Side::Right => product.pairing(f, &id)?,
    };
    let (image, inclusion) = image_subcategory(&embedding)?;
    let pc = product.cat();
    let to_image = Functor::new(
        format!("{}_graph", f.name()),
        src.clone(),
        image.clone(),
        src.objects()
            .map(|o| by_name(pc, &image, embedding.obj(o)).expect("image object"))
            .collect(),
        src.morphisms()
            .map(|m| mor_by_name(pc, &image, embedding.mor(m)).expect("image morphism"))
            .collect(),
    )?;
    let mut obj_back = vec![ObjId(0); image.num_objects()];
    for o in src.objects() {
        obj_back[to_image.obj(o).0] = o;
    }
    let mut mor_back = vec![MorId(usize::MAX); image.num_morphisms()];
    for m in src.morphisms() {
        let im = to_image.mor(m);
        if mor_back[im.0] != MorId(usize::MAX) {
            return Err(Error::Precondition(format!(
                "graph of `{}` is not injective on morphisms",
                f.name()
            )));
        }
        mor_back[im.0] = m;
    }
    if mor_back.iter().any(|m| m.0 == usize::MAX) {
        return Err(Error::Structural("graph image has extra morphisms".into()));
    }
    let from_image = Functor::new(
        format!("{}_graph_inv", f.name()),
        image.clone(),
        src.clone(),
        obj_back,
        mor_back,
    )?;
    Ok(GraphEmbedding {
        side,
        embedding,
        image,
        inclusion,
        to_image,
        from_image,
    })
}

/// `(x, a) -> (Ga, Fx)` and `(j, k) -> (Gk, Fj)` on `X x A`.
pub fn twist_functor(adj: &Adjunction, p: &ProductCategory) -> Result<Functor> {
    let (f, g) = (adj.left(), adj.right());
    let pc = p.cat();
    Functor::new(
        "twist",
        pc.clone(),
        pc.clone(),
        pc.objects()
            .map(|o| {
                let (x, a) = p.obj_components(o);
                p.obj_pair(g.obj(a), f.obj(x))
            })
            .collect(),
        pc.morphisms()
            .map(|m| {
                let (j, k) = p.mor_components(m);
                p.mor_pair(g.mor(k), f.mor(j))
            })
            .collect(),
    )
}

/// The het-bifunctor of transpose pairs between the two graphs.
#[derive(Clone, Debug)]
pub struct AbstractHet {
    pub het: Arc<HetBifunctor>,
    pub xhat: GraphEmbedding,
    pub ahat: GraphEmbedding,
}

pub fn abstract_het(adj: &Adjunction, p: &ProductCategory) -> Result<AbstractHet> {
    let xhat = graph_embed(adj.left(), Side::Left, p)?;
    let ahat = graph_embed(adj.right(), Side::Right, p)?;
    let (x_cat, g) = (adj.x(), adj.right());
    let mut cells = Vec::new();
    for xo in xhat.image.objects() {
        let x = xhat.from_image.obj(xo);
        for ao in ahat.image.objects() {
            let a = ahat.from_image.obj(ao);
            cells.push(
                x_cat
                    .hom(x, g.obj(a))
                    .iter()
                    .map(|&f| vec![p.mor_pair(f, adj.phi_inv(a, f).expect("f ends at Ga"))])
                    .collect(),
            );
        }
    }
    let het = HetBifunctor::from_ambient(
        "AbstractHet",
        xhat.image.clone(),
        ahat.image.clone(),
        p.cat().clone(),
        xhat.image.morphisms().map(|m| vec![xhat.inclusion.mor(m)]).collect(),
        ahat.image.morphisms().map(|m| vec![ahat.inclusion.mor(m)]).collect(),
        cells,
    )?;
    Ok(AbstractHet {
        het: Arc::new(het),
        xhat,
        ahat,
    })
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub suite: CheckSuite,
    /// Bases where the search found exactly the canonical universal element
    /// rather than an isomorphic one, per side.
    pub canonical_left: usize,
    pub canonical_right: usize,
    pub recovered: Option<Adjunction>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.suite.all_passed()
    }
}

/// Build the abstract het-bifunctor, synthesize its adjunction and compare
/// it with the embedded original through the twist functor.
pub fn verify_representation_theorem(adj: &Adjunction) -> TheoremReport {
    let mut suite = CheckSuite::new();
    let mut report = TheoremReport {
        suite: CheckSuite::new(),
        canonical_left: 0,
        canonical_right: 0,
        recovered: None,
    };
    let p = product_category(adj.x(), adj.a());
    let ah = match abstract_het(adj, &p) {
        Ok(ah) => ah,
        Err(e) => {
            suite.record("graph-embedding", "graph-embedding", vec![e.to_string()]);
            report.suite = suite;
            return report;
        }
    };
    let (xhat, ahat, het) = (&ah.xhat, &ah.ahat, &ah.het);
    let (f, g) = (adj.left(), adj.right());
    let (x_cat, a_cat) = (adj.x(), adj.a());

    let mut emb = Vec::new();
    for ge in [xhat, ahat] {
        let round = ge.to_image.then(&ge.from_image).expect("composable");
        if !round.same_tables(&Functor::identity(ge.embedding.source().clone())) {
            emb.push(format!("{} graph: inverse does not undo the embedding", ge.side));
        }
        let round = ge.from_image.then(&ge.to_image).expect("composable");
        if !round.same_tables(&Functor::identity(ge.image.clone())) {
            emb.push(format!("{} graph: embedding does not undo the inverse", ge.side));
        }
        if !ge.image.check_laws().is_ok() {
            emb.push(format!("{} graph image fails the category laws", ge.side));
        }
    }
    suite.record("graph-embedding", "graph-embedding", emb);

    let laws = het.check_laws();
    suite.record(
        "abstract-het-laws",
        "abstract-het",
        laws.violations.iter().map(|v| v.to_string()).collect(),
    );
    let mut counts = Vec::new();
    for xo in xhat.image.objects() {
        let x = xhat.from_image.obj(xo);
        for ao in ahat.image.objects() {
            let a = ahat.from_image.obj(ao);
            let n = het.cell_size(xo, ao);
            let (na, nx) = (a_cat.hom(f.obj(x), a).len(), x_cat.hom(x, g.obj(a)).len());
            if n != na || n != nx {
                counts.push(format!(
                    "cell ({},{}): {n} pairs, {na} in Hom_A(Fx,a), {nx} in Hom_X(x,Ga)",
                    xhat.image.obj_name(xo),
                    ahat.image.obj_name(ao)
                ));
            }
        }
    }
    suite.record("abstract-het-cell-count", "abstract-het", counts);
    if !suite.all_passed() {
        report.suite = suite;
        return report;
    }

    let recovered = match synthesize_adjunction(het) {
        Ok(r) => r,
        Err(e) => {
            suite.record("synthesis", "synthesis", vec![e.to_string()]);
            report.suite = suite;
            return report;
        }
    };
    suite.record("synthesis", "synthesis", Vec::new());
    suite.extend(prefixed(recovered.checks(), "recovered-"));

    let twist = match twist_functor(adj, &p) {
        Ok(t) => t,
        Err(e) => {
            suite.record("twist-functor", "twist", vec![e.to_string()]);
            report.suite = suite;
            return report;
        }
    };
    suite.record("twist-functor", "twist", Vec::new());
    let pc = p.cat();
    let core = recovered.het_core().expect("synthesized");

    // Left side: F' against twist restricted to the graph of F.
    let mut restrict = Vec::new();
    let mut comp_left = Vec::new();
    let mut unit_corr = Vec::new();
    let mut theta = vec![MorId(0); xhat.image.num_objects()];
    for xo in xhat.image.objects() {
        let x = xhat.from_image.obj(xo);
        let t_obj = twist.obj(xhat.inclusion.obj(xo));
        let Some(t_hat) = by_name(pc, &ahat.image, t_obj) else {
            restrict.push(format!("twist of {} leaves the graph of G", xhat.image.obj_name(xo)));
            continue;
        };
        if ahat.to_image.obj(f.obj(x)) != t_hat {
            restrict.push(format!("twist of {} is not the graph of F{}", xhat.image.obj_name(xo), x_cat.obj_name(x)));
        }
        let key = p.mor_pair(adj.unit(x), a_cat.identity(f.obj(x)));
        let Some(canon) = het.find_key(&[key]) else {
            unit_corr.push(format!("(eta, 1) at {} is not a het element", x_cat.obj_name(x)));
            continue;
        };
        if het.cell_of(canon) != (xo, t_hat) {
            unit_corr.push(format!("(eta, 1) at {} lies in the wrong cell", x_cat.obj_name(x)));
            continue;
        }
        if let Some(w) = check_universal(het, Side::Left, xo, t_hat, canon) {
            unit_corr.push(format!("(eta, 1) at {} is not universal: {w}", x_cat.obj_name(x)));
            continue;
        }
        let found = core.het_unit(xo);
        if found == canon {
            report.canonical_left += 1;
        }
        // theta: F'x -> Tx with theta . h' = canonical, and its inverse.
        let th = core.left_rep.to_hom(canon);
        let inv = ahat
            .image
            .hom(t_hat, recovered.left().obj(xo))
            .iter()
            .copied()
            .find(|&m| het.right(m, canon) == found);
        match inv {
            Some(inv)
                if ahat.image.comp(th, inv) == ahat.image.identity(t_hat)
                    && ahat.image.comp(inv, th) == ahat.image.identity(recovered.left().obj(xo)) => {}
            _ => comp_left.push(format!("comparison at {} is not invertible", xhat.image.obj_name(xo))),
        }
        theta[xo.0] = th;
    }
    if restrict.is_empty() && unit_corr.is_empty() {
        for j in xhat.image.morphisms() {
            let (s, t) = (xhat.image.dom(j), xhat.image.cod(j));
            let tj = mor_by_name(pc, &ahat.image, twist.mor(xhat.inclusion.mor(j))).expect("twist lands in graph of G");
            let lhs = ahat.image.comp(theta[t.0], recovered.left().mor(j));
            let rhs = ahat.image.comp(tj, theta[s.0]);
            if lhs != rhs {
                comp_left.push(format!("comparison not natural at {}", xhat.image.mor_name(j)));
            }
        }
    }

    // Right side: G' against twist restricted to the graph of G.
    let mut comp_right = Vec::new();
    let mut counit_corr = Vec::new();
    let mut theta_r = vec![MorId(0); ahat.image.num_objects()];
    for ao in ahat.image.objects() {
        let a = ahat.from_image.obj(ao);
        let t_obj = twist.obj(ahat.inclusion.obj(ao));
        let Some(t_hat) = by_name(pc, &xhat.image, t_obj) else {
            restrict.push(format!("twist of {} leaves the graph of F", ahat.image.obj_name(ao)));
            continue;
        };
        if xhat.to_image.obj(g.obj(a)) != t_hat {
            restrict.push(format!("twist of {} is not the graph of G{}", ahat.image.obj_name(ao), a_cat.obj_name(a)));
        }
        let key = p.mor_pair(x_cat.identity(g.obj(a)), adj.counit(a));
        let Some(canon) = het.find_key(&[key]) else {
            counit_corr.push(format!("(1, eps) at {} is not a het element", a_cat.obj_name(a)));
            continue;
        };
        if het.cell_of(canon) != (t_hat, ao) {
            counit_corr.push(format!("(1, eps) at {} lies in the wrong cell", a_cat.obj_name(a)));
            continue;
        }
        if let Some(w) = check_universal(het, Side::Right, ao, t_hat, canon) {
            counit_corr.push(format!("(1, eps) at {} is not universal: {w}", a_cat.obj_name(a)));
            continue;
        }
        let found = core.het_counit(ao);
        if found == canon {
            report.canonical_right += 1;
        }
        // theta_r: T a -> G'a with e' . theta_r = canonical.
        let th = core.right_rep.to_hom(canon);
        let gp = recovered.right().obj(ao);
        let inv = xhat
            .image
            .hom(gp, t_hat)
            .iter()
            .copied()
            .find(|&m| het.left(m, canon) == found);
        match inv {
            Some(inv)
                if xhat.image.comp(th, inv) == xhat.image.identity(gp)
                    && xhat.image.comp(inv, th) == xhat.image.identity(t_hat) => {}
            _ => comp_right.push(format!("comparison at {} is not invertible", ahat.image.obj_name(ao))),
        }
        theta_r[ao.0] = th;
    }
    if restrict.is_empty() && counit_corr.is_empty() {
        for k in ahat.image.morphisms() {
            let (s, t) = (ahat.image.dom(k), ahat.image.cod(k));
            let tk = mor_by_name(pc, &xhat.image, twist.mor(ahat.inclusion.mor(k))).expect("twist lands in graph of F");
            let lhs = xhat.image.comp(theta_r[t.0], tk);
            let rhs = xhat.image.comp(recovered.right().mor(k), theta_r[s.0]);
            if lhs != rhs {
                comp_right.push(format!("comparison not natural at {}", ahat.image.mor_name(k)));
            }
        }
    }
    suite.record("twist-restriction", "twist", restrict);
    suite.record("unit-correspondence", "units-and-counits", unit_corr);
    suite.record("counit-correspondence", "units-and-counits", counit_corr);
    suite.record("left-comparison-iso", "up-to-isomorphism", comp_left);
    suite.record("right-comparison-iso", "up-to-isomorphism", comp_right);

    // Hom_A-hat(Tx, a) = Het(x, a) = Hom_X-hat(x, Ta), element by element.
    let mut chain = Vec::new();
    for c in het.elements() {
        let (xo, ao) = het.cell_of(c);
        let (x, a) = (xhat.from_image.obj(xo), ahat.from_image.obj(ao));
        let key = het.ambient_key(c).expect("ambient elements")[0];
        let (fm, gm) = p.mor_components(key);
        let d = het.describe(c);
        let bottom = mor_by_name(pc, &ahat.image, p.mor_pair(g.mor(gm), gm));
        let top = mor_by_name(pc, &xhat.image, p.mor_pair(fm, f.mor(fm)));
        let unit_el = het.find_key(&[p.mor_pair(adj.unit(x), a_cat.identity(f.obj(x)))]);
        let counit_el = het.find_key(&[p.mor_pair(x_cat.identity(g.obj(a)), adj.counit(a))]);
        match (bottom, unit_el) {
            (Some(b), Some(u)) if het.try_right(b, u) == Some(c) => {}
            _ => chain.push(format!("(Gg, g) . (eta, 1) != c for {d}")),
        }
        match (top, counit_el) {
            (Some(t), Some(e)) if het.try_left(t, e) == Some(c) => {}
            _ => chain.push(format!("(1, eps) . (f, Ff) != c for {d}")),
        }
        if recovered.phi(xo, core.left_rep.to_hom(c)).ok() != Some(core.right_rep.to_hom(c)) {
            chain.push(format!("recovered transposes disagree at {d}"));
        }
    }
    suite.record("cellwise-chain", "hom-het-hom", chain);
    report.suite = suite;
    report.recovered = Some(recovered);
    report
}

fn prefixed(suite: CheckSuite, prefix: &str) -> CheckSuite {
    let mut out = CheckSuite::new();
    for c in suite.checks {
        out.record(&format!("{prefix}{}", c.name), &c.tag, c.witnesses);
    }
    out
}

/// Element `c` of the abstract het-bifunctor as its transpose pair.
pub fn transpose_pair(ah: &AbstractHet, p: &ProductCategory, c: HetId) -> (MorId, MorId) {
    p.mor_components(ah.het.ambient_key(c).expect("ambient elements")[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::shapes::chain;

    #[test]
    fn identity_adjunction_is_recovered() {
        let adj = Adjunction::identity(&chain(2));
        let report = verify_representation_theorem(&adj);
        assert!(report.passed(), "{}", report.suite);
        assert!(report.recovered.is_some());
    }

    #[test]
    fn abstract_het_counts_match_hom_sets() {
        let adj = Adjunction::identity(&chain(3));
        let p = product_category(adj.x(), adj.a());
        let ah = abstract_het(&adj, &p).unwrap();
        assert!(ah.het.check_laws().is_ok());
    }
}

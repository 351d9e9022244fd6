//! Model-structure predicates on Gray-functors between finite Gray-categories.

use std::collections::{BTreeMap, BTreeSet};

use crate::category::Category;
use crate::computads::{Computad, Endomorphism};
use crate::cell::{Cell, Table};
use crate::constructions::TwoOf;
use crate::enumerate::enumerate_functors;
use crate::equivalence::{
    adjoint_biequivalences_into, equivalent_1cells, is_biequivalence, is_biequivalence_2functor, is_fibration_2cat,
    AdjointBiequivalence, Check,
};
use crate::error::{Error, Result};
use crate::functor::GrayFunctor;
use crate::gray::{GrayCategory, GrayIndex, HomView};
use crate::sesqui::TwoCategory;
use crate::tabulate::tabulate;

/// `π∗G`, with the class of every 1-cell.
#[derive(Debug, Clone)]
pub struct PiStar {
    pub category: Category,
    /// 1-cell of G -> arrow of the category.
    pub class_of: Vec<usize>,
    /// Arrow -> its least representative 1-cell.
    pub rep: Vec<usize>,
}

pub fn pi_star(g: &GrayCategory, ix: &GrayIndex) -> Result<PiStar> {
    let mut class_of = vec![usize::MAX; g.cells1.len()];
    let mut rep = Vec::new();
    let mut arrows = Vec::new();
    for f in 0..g.cells1.len() {
        if class_of[f] != usize::MAX {
            continue;
        }
        let k = rep.len();
        rep.push(f);
        arrows.push(Cell::new(format!("[{}]", g.name1(f)), g.src1(f), g.tgt1(f)));
        for &h in ix.hom1(g.src1(f), g.tgt1(f)) {
            if class_of[h] == usize::MAX && (h == f || equivalent_1cells(g, ix, f, h).is_some()) {
                class_of[h] = k;
            }
        }
    }
    let mut compose = Table::new();
    for (&(k, h), &v) in &g.comp1 {
        let key = (class_of[k], class_of[h]);
        let c = class_of[v];
        if let Some(&old) = compose.get(&key) {
            if old != c {
                return Err(Error::Internal(format!("composition does not respect classes at {}, {}", g.name1(k), g.name1(h))));
            }
        }
        compose.insert(key, c);
    }
    let identity = g.id1.iter().map(|&i| class_of[i]).collect();
    Ok(PiStar { category: Category { objects: g.objects.clone(), arrows, identity, compose }, class_of, rep })
}

/// Whether `a` and `b` are isomorphic in `π∗G`.
pub fn biequivalent_objects(g: &GrayCategory, ix: &GrayIndex, a: usize, b: usize) -> Result<bool> {
    let n = g.objects.len();
    if a >= n || b >= n {
        return Err(Error::Unknown(format!("object index {}", a.max(b))));
    }
    Ok(a == b || ix.hom1(a, b).iter().any(|&f| is_biequivalence(g, ix, f).is_some_and(|w| g.tgt1(w.g) == a)))
}

/// A Gray-functor together with its domain and codomain.
#[derive(Clone, Copy)]
pub struct Morphism<'a> {
    pub f: &'a GrayFunctor,
    pub dom: &'a GrayCategory,
    pub cod: &'a GrayCategory,
}

/// Precomputed indices and hom views on both sides of a functor.
pub struct Context<'a> {
    pub m: Morphism<'a>,
    pub dix: GrayIndex,
    pub cix: GrayIndex,
    pub dhoms: BTreeMap<(usize, usize), HomView>,
    pub choms: BTreeMap<(usize, usize), HomView>,
}

impl<'a> Context<'a> {
    pub fn new(m: Morphism<'a>) -> Self {
        Self { m, dix: m.dom.index(), cix: m.cod.index(), dhoms: m.dom.homs(), choms: m.cod.homs() }
    }

    fn homs(&self) -> impl Iterator<Item = (usize, usize, &HomView, &HomView)> {
        let f = self.m.f;
        self.dhoms.iter().map(move |(&(x, y), dv)| (x, y, dv, &self.choms[&(f.obj[x], f.obj[y])]))
    }
}

pub fn is_weak_equivalence(c: &Context) -> Check {
    let Morphism { f, dom, cod } = c.m;
    for (x, y, dv, cv) in c.homs() {
        let sf = f.on_hom(dv, cv);
        is_biequivalence_2functor(&sf, &dv.two, &cv.two)
            .map_err(|e| format!("hom({},{}): {e}", dom.objects[x], dom.objects[y]))?;
    }
    for o in 0..cod.objects.len() {
        let hit = (0..dom.objects.len()).any(|x| biequivalent_objects(cod, &c.cix, o, f.obj[x]).unwrap_or(false));
        if !hit {
            return Err(format!("object {} is not biequivalent to an image", cod.objects[o]));
        }
    }
    Ok(())
}

/// Condition (i): every hom 2-functor is a fibration of 2-categories.
pub fn homwise_fibration(c: &Context) -> Check {
    for (x, y, dv, cv) in c.homs() {
        let sf = c.m.f.on_hom(dv, cv);
        is_fibration_2cat(&sf, &dv.two, &cv.two)
            .map_err(|e| format!("hom({},{}): {e}", c.m.dom.objects[x], c.m.dom.objects[y]))?;
    }
    Ok(())
}

/// Condition (ii): biequivalences into an image object lift, up to an
/// equivalence 2-cell, with specified codomain and on-the-nose domain.
pub fn pi_star_isofibration(c: &Context) -> Check {
    let Morphism { f, dom, cod } = c.m;
    for x in 0..dom.objects.len() {
        for y in 0..cod.objects.len() {
            for &b in c.cix.hom1(y, f.obj[x]) {
                if is_biequivalence(cod, &c.cix, b).is_none() {
                    continue;
                }
                let lifted = (0..dom.objects.len()).filter(|&z| f.obj[z] == y).any(|z| {
                    c.dix.hom1(z, x).iter().any(|&a| {
                        is_biequivalence(dom, &c.dix, a).is_some() && equivalent_1cells(cod, &c.cix, f.c1[a], b).is_some()
                    })
                });
                if !lifted {
                    return Err(format!("biequivalence {} into {} does not lift", cod.name1(b), dom.objects[x]));
                }
            }
        }
    }
    Ok(())
}

fn image(f: &GrayFunctor, ab: &AdjointBiequivalence) -> AdjointBiequivalence {
    AdjointBiequivalence { f: f.c1[ab.f], g: f.c1[ab.g], eta: f.c2[ab.eta], eps: f.c2[ab.eps], s: f.c3[ab.s], t: f.c3[ab.t] }
}

/// Condition (ii*): every adjoint biequivalence into an image object is the
/// image of one upstairs.
pub fn adjoint_biequivalence_lifting(c: &Context) -> Check {
    let Morphism { f, dom, cod } = c.m;
    for e in 0..dom.objects.len() {
        let lifts: BTreeSet<AdjointBiequivalence> =
            adjoint_biequivalences_into(dom, &c.dix, e).iter().map(|ab| image(f, ab)).collect();
        for ab in adjoint_biequivalences_into(cod, &c.cix, f.obj[e]) {
            if !lifts.contains(&ab) {
                return Err(format!(
                    "adjoint biequivalence ({}, {}, ...) into {} does not lift",
                    cod.name1(ab.f),
                    cod.name1(ab.g),
                    dom.objects[e]
                ));
            }
        }
    }
    Ok(())
}

pub fn is_fibration(c: &Context) -> Check {
    homwise_fibration(c)?;
    pi_star_isofibration(c)
}

pub fn is_fibration_via_lifting(c: &Context) -> Check {
    homwise_fibration(c)?;
    adjoint_biequivalence_lifting(c)
}

/// Surjective on objects, full on 1- and 2-cells, fully faithful on 3-cells.
pub fn is_trivial_fibration(c: &Context) -> Check {
    let Morphism { f, dom, cod } = c.m;
    for o in 0..cod.objects.len() {
        if !f.obj.contains(&o) {
            return Err(format!("object {} is not in the image", cod.objects[o]));
        }
    }
    for x in 0..dom.objects.len() {
        for y in 0..dom.objects.len() {
            let ups = c.dix.hom1(x, y);
            for &h in c.cix.hom1(f.obj[x], f.obj[y]) {
                if !ups.iter().any(|&k| f.c1[k] == h) {
                    return Err(format!("1-cell {} has no preimage", cod.name1(h)));
                }
            }
            for &k in ups {
                for &l in ups {
                    let twos = c.dix.hom2(k, l);
                    for &b in c.cix.hom2(f.c1[k], f.c1[l]) {
                        if !twos.iter().any(|&a| f.c2[a] == b) {
                            return Err(format!("2-cell {} has no preimage", cod.name2(b)));
                        }
                    }
                    for &a in twos {
                        for &a2 in twos {
                            let threes = c.dix.hom3(a, a2);
                            for &m in c.cix.hom3(f.c2[a], f.c2[a2]) {
                                let n = threes.iter().filter(|&&x| f.c3[x] == m).count();
                                if n != 1 {
                                    return Err(format!(
                                        "3-cell {} has {n} preimages between {} and {}",
                                        cod.name3(m),
                                        dom.name2(a),
                                        dom.name2(a2)
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// A checked property with its counterexample when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flag {
    pub holds: bool,
    pub detail: Option<String>,
}

impl From<Check> for Flag {
    fn from(c: Check) -> Self {
        match c {
            Ok(()) => Flag { holds: true, detail: None },
            Err(e) => Flag { holds: false, detail: Some(e) },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismVerdict {
    pub weak_equivalence: Flag,
    pub fibration: Flag,
    pub trivial_fibration: Flag,
    pub adjoint_biequiv_lifting: Flag,
}

impl MorphismVerdict {
    /// Trivial fibrations are exactly the fibrations that are weak equivalences.
    pub fn consistent(&self) -> bool {
        self.trivial_fibration.holds == (self.weak_equivalence.holds && self.fibration.holds)
    }
}

pub fn classify(m: Morphism) -> MorphismVerdict {
    let c = Context::new(m);
    MorphismVerdict {
        weak_equivalence: is_weak_equivalence(&c).into(),
        fibration: is_fibration(&c).into(),
        trivial_fibration: is_trivial_fibration(&c).into(),
        adjoint_biequiv_lifting: is_fibration_via_lifting(&c).into(),
    }
}

// ---------------------------------------------------------------------------
// Gray-groupoids

/// The fibration conditions specialised to Gray-groupoids: strict lifting
/// of 1-cells with given codomain, 2-cells with given target, and 3-cells
/// with given target.
pub fn gpd_fibration_check(c: &Context) -> Check {
    let Morphism { f, dom, cod } = c.m;
    for e in 0..dom.objects.len() {
        for b in 0..cod.objects.len() {
            for &h in c.cix.hom1(b, f.obj[e]) {
                if !(0..dom.cells1.len()).any(|k| dom.tgt1(k) == e && f.c1[k] == h) {
                    return Err(format!("1-cell {} into {} does not lift", cod.name1(h), dom.objects[e]));
                }
            }
        }
    }
    for k in 0..dom.cells1.len() {
        for b in 0..cod.cells2.len() {
            if cod.tgt2(b) == f.c1[k] && !(0..dom.cells2.len()).any(|a| dom.tgt2(a) == k && f.c2[a] == b) {
                return Err(format!("2-cell {} onto {} does not lift", cod.name2(b), dom.name1(k)));
            }
        }
    }
    for a in 0..dom.cells2.len() {
        for m in 0..cod.cells3.len() {
            if cod.tgt3(m) == f.c2[a] && !(0..dom.cells3.len()).any(|x| dom.tgt3(x) == a && f.c3[x] == m) {
                return Err(format!("3-cell {} onto {} does not lift", cod.name3(m), dom.name2(a)));
            }
        }
    }
    Ok(())
}

/// The weak-equivalence conditions specialised to Gray-groupoids.
///
/// Besides essential surjectivity on objects and 1-cells and fullness on
/// 3-cells, this includes essential surjectivity on 2-cells and
/// faithfulness on 3-cells, without which the conditions do not force a
/// local biequivalence.
pub fn gpd_weq_check(c: &Context) -> Check {
    let Morphism { f, dom, cod } = c.m;
    for b in 0..cod.objects.len() {
        if !(0..dom.objects.len()).any(|e| !c.cix.hom1(b, f.obj[e]).is_empty()) {
            return Err(format!("object {} has no 1-cell into an image", cod.objects[b]));
        }
    }
    for d in 0..dom.objects.len() {
        for e in 0..dom.objects.len() {
            let ups = c.dix.hom1(d, e);
            for &b in c.cix.hom1(f.obj[d], f.obj[e]) {
                if !ups.iter().any(|&k| !c.cix.hom2(b, f.c1[k]).is_empty()) {
                    return Err(format!("1-cell {} has no 2-cell to an image", cod.name1(b)));
                }
            }
            for &k in ups {
                for &l in ups {
                    let twos = c.dix.hom2(k, l);
                    for &g in c.cix.hom2(f.c1[k], f.c1[l]) {
                        if !twos.iter().any(|&a| !c.cix.hom3(g, f.c2[a]).is_empty()) {
                            return Err(format!("2-cell {} has no 3-cell to an image", cod.name2(g)));
                        }
                    }
                    for &a in twos {
                        for &a2 in twos {
                            let threes = c.dix.hom3(a, a2);
                            for &y in c.cix.hom3(f.c2[a], f.c2[a2]) {
                                let n = threes.iter().filter(|&&x| f.c3[x] == y).count();
                                if n == 0 {
                                    return Err(format!("3-cell {} does not lift", cod.name3(y)));
                                }
                                if n > 1 {
                                    return Err(format!("3-cell {} has {n} preimages", cod.name3(y)));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Lifting and closure

/// Outcome of a bounded search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// Exhaustive: nothing exists.
    None,
    /// The budget ran out first.
    Inconclusive,
}

/// A commuting square `p∘u = v∘i` with `i : A → B` and `p : E → X`.
pub struct Square<'a> {
    pub i: &'a GrayFunctor,
    pub p: &'a GrayFunctor,
    pub u: &'a GrayFunctor,
    pub v: &'a GrayFunctor,
    pub a: &'a GrayCategory,
    pub b: &'a GrayCategory,
    pub e: &'a GrayCategory,
}

/// A diagonal `h : B → E` with `h∘i = u` and `p∘h = v`.
pub fn llp_search(sq: &Square, budget: usize) -> Result<Search<GrayFunctor>> {
    if sq.p.after(sq.u) != sq.v.after(sq.i) {
        return Err(Error::Precondition("square does not commute".into()));
    }
    // cells in the image of i have their value fixed by u
    let fixed = |dim: usize| -> BTreeMap<usize, usize> {
        let (src, dst) = match dim {
            0 => (&sq.i.obj, &sq.u.obj),
            1 => (&sq.i.c1, &sq.u.c1),
            2 => (&sq.i.c2, &sq.u.c2),
            _ => (&sq.i.c3, &sq.u.c3),
        };
        src.iter().zip(dst).map(|(&b, &e)| (b, e)).collect()
    };
    let fixes: Vec<BTreeMap<usize, usize>> = (0..4).map(fixed).collect();
    let p = sq.p;
    let v = sq.v;
    let allowed = move |dim: usize, c: usize, img: usize| -> bool {
        if let Some(&want) = fixes[dim].get(&c) {
            if want != img {
                return false;
            }
        }
        match dim {
            0 => p.obj[img] == v.obj[c],
            1 => p.c1[img] == v.c1[c],
            2 => p.c2[img] == v.c2[c],
            _ => p.c3[img] == v.c3[c],
        }
    };
    match enumerate_functors(sq.b, sq.e, &allowed, budget, 1) {
        Ok(mut v) => Ok(v.pop().map_or(Search::None, Search::Found)),
        Err(Error::Budget { .. }) => Ok(Search::Inconclusive),
        Err(e) => Err(e),
    }
}

/// For a composable pair `F : A → B`, `G : B → C`: if two of `F`, `G`,
/// `GF` are weak equivalences, so is the third.
pub fn two_out_of_three(f: Morphism, g: Morphism) -> Check {
    let gf = g.f.after(f.f);
    let h = Morphism { f: &gf, dom: f.dom, cod: g.cod };
    let w = |m: Morphism| is_weak_equivalence(&Context::new(m)).is_ok();
    let (a, b, c) = (w(f), w(g), w(h));
    if [a, b, c].iter().filter(|&&x| x).count() == 2 {
        return Err(format!("weak equivalences: F={a}, G={b}, GF={c}"));
    }
    Ok(())
}

/// `f : A → B` a retract of `g : C → D` via `i : A → C`, `r : C → A`,
/// `j : B → D`, `s : D → B`.
pub struct Retract<'a> {
    pub f: Morphism<'a>,
    pub g: Morphism<'a>,
    pub i: &'a GrayFunctor,
    pub r: &'a GrayFunctor,
    pub j: &'a GrayFunctor,
    pub s: &'a GrayFunctor,
}

impl Retract<'_> {
    pub fn commutes(&self) -> bool {
        self.r.after(self.i) == GrayFunctor::identity(self.f.dom)
            && self.s.after(self.j) == GrayFunctor::identity(self.f.cod)
            && self.g.f.after(self.i) == self.j.after(self.f.f)
            && self.f.f.after(self.r) == self.s.after(self.g.f)
    }
}

/// If the larger map is a weak equivalence, so is its retract.
pub fn retract_closure(rt: &Retract) -> Check {
    if !rt.commutes() {
        return Err("retract diagram does not commute".into());
    }
    let big = is_weak_equivalence(&Context::new(rt.g)).is_ok();
    let small = is_weak_equivalence(&Context::new(rt.f)).is_ok();
    if big && !small {
        return Err("retract of a weak equivalence is not one".into());
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Representability of 2_X

/// Counts Gray-functors `2_X → G` and triples `(A, B, X → G(A,B))` and checks
/// that restriction to hom(0,1) is a bijection between them.
pub fn hom_bijection_check(g: &GrayCategory, x: &TwoCategory, budget: usize) -> Result<(bool, usize, usize)> {
    let t = tabulate(&TwoOf(x))?;
    let two = &t.gray;
    let lx = crate::constructions::locally_discrete(x);
    let functors = enumerate_functors(two, g, &crate::enumerate::any_cell, budget, usize::MAX)?;
    // restriction of each functor, keyed by X's own indices
    let restrict = |f: &GrayFunctor| -> (usize, usize, Vec<usize>, Vec<usize>, Vec<usize>) {
        use crate::constructions::Side;
        let pick = |vals: &[Side], img: &[usize], n: usize| -> Vec<usize> {
            let mut out = vec![0; n];
            for (k, s) in vals.iter().enumerate() {
                if let Side::X(i) = s {
                    out[*i] = img[k];
                }
            }
            out
        };
        (
            f.obj[0],
            f.obj[1],
            pick(&t.c1, &f.c1, x.objects.len()),
            pick(&t.c2, &f.c2, x.cells1.len()),
            pick(&t.c3, &f.c3, x.cells2.len()),
        )
    };
    let images: BTreeSet<_> = functors.iter().map(restrict).collect();
    let injective = images.len() == functors.len();
    let lx_t = tabulate(&crate::constructions::LocallyDiscrete(x))?;
    let mut triples = BTreeSet::new();
    for a in 0..g.objects.len() {
        for b in 0..g.objects.len() {
            let hv = g.hom(a, b);
            let lh = crate::constructions::locally_discrete(&hv.two);
            let lh_t = tabulate(&crate::constructions::LocallyDiscrete(&hv.two))?;
            for f in enumerate_functors(&lx, &lh, &crate::enumerate::any_cell, budget, usize::MAX)? {
                // back to X indices and global G indices
                let mut o = vec![0; x.objects.len()];
                for (k, &xo) in lx_t.o.iter().enumerate() {
                    o[xo] = hv.g1[lh_t.o[f.obj[k]]];
                }
                let mut c1 = vec![0; x.cells1.len()];
                for (k, &xf) in lx_t.c1.iter().enumerate() {
                    c1[xf] = hv.g2[lh_t.c1[f.c1[k]]];
                }
                let mut c2 = vec![0; x.cells2.len()];
                for (k, &xa) in lx_t.c2.iter().enumerate() {
                    c2[xa] = hv.g3[lh_t.c2[f.c2[k]]];
                }
                triples.insert((a, b, o, c1, c2));
            }
        }
    }
    Ok((injective && images == triples, functors.len(), triples.len()))
}

/// `f` as a retract of `f × 1_C`, through the slice at an object `c` of `C`.
pub struct ProductRetract {
    pub dom: GrayCategory,
    pub cod: GrayCategory,
    pub g: GrayFunctor,
    pub i: GrayFunctor,
    pub r: GrayFunctor,
    pub j: GrayFunctor,
    pub s: GrayFunctor,
}

impl ProductRetract {
    pub fn new(m: Morphism, c: &GrayCategory, at: usize) -> Self {
        let bigdom = crate::constructions::product(m.dom, c);
        let bigcod = crate::constructions::product(m.cod, c);
        let g = crate::constructions::pairing(&m.f.after(&bigdom.p0), &bigdom.p1, m.cod, c);
        let constant = |x: &GrayCategory| crate::corpus::point_at(c, at).after(&GrayFunctor::to_terminal(x));
        let i = crate::constructions::pairing(&GrayFunctor::identity(m.dom), &constant(m.dom), m.dom, c);
        let j = crate::constructions::pairing(&GrayFunctor::identity(m.cod), &constant(m.cod), m.cod, c);
        Self { dom: bigdom.gray, cod: bigcod.gray, g, i, r: bigdom.p0, j, s: bigcod.p0 }
    }

    pub fn retract<'a>(&'a self, small: Morphism<'a>) -> Retract<'a> {
        Retract {
            f: small,
            g: Morphism { f: &self.g, dom: &self.dom, cod: &self.cod },
            i: &self.i,
            r: &self.r,
            j: &self.j,
            s: &self.s,
        }
    }
}

/// Outcome of [`weq_closure_suite`].
#[derive(Debug, Clone, Default)]
pub struct ClosureReport {
    pub pairs: usize,
    pub retracts: usize,
    pub failures: Vec<String>,
}

impl ClosureReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// 2-out-of-3 on every composable pair of `morphisms` and closure on every
/// retract diagram in `retracts`.
pub fn weq_closure_suite(morphisms: &[(&str, Morphism)], retracts: &[(&str, Retract)]) -> ClosureReport {
    let mut report = ClosureReport::default();
    for (nf, f) in morphisms {
        for (ng, g) in morphisms {
            if f.cod != g.dom {
                continue;
            }
            report.pairs += 1;
            if let Err(e) = two_out_of_three(*f, *g) {
                report.failures.push(format!("2-out-of-3 on ({nf}, {ng}): {e}"));
            }
        }
    }
    for (name, rt) in retracts {
        report.retracts += 1;
        if let Err(e) = retract_closure(rt) {
            report.failures.push(format!("retract {name}: {e}"));
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Cofibrancy

/// A Gray-category offered for a cofibrancy check, with its evidence.
pub enum CofibrancyInput<'a> {
    /// `QA`, with witness `V U∗A`.
    Replacement(&'a GrayCategory),
    /// A finite `A` with a candidate computad whose vertices are the objects of
    /// `A` and whose edges and generators stand for the listed cells.
    Presented { gray: &'a GrayCategory, computad: &'a Computad, edges: &'a [usize], generators: &'a [usize] },
    /// A retract of `HG`, given by the idempotent `I∘R`.
    Retract { computad: &'a Computad, idempotent: &'a Endomorphism },
    /// No evidence; only discrete Gray-categories are decided.
    Bare(&'a GrayCategory),
}

#[derive(Debug, Clone)]
pub struct Cofibrancy {
    pub cofibrant: bool,
    /// The computad the underlying sesquicategory is free on.
    pub computad: Option<Computad>,
    pub reason: Option<String>,
    pub bound: usize,
}

fn is_discrete(g: &GrayCategory) -> bool {
    (0..g.cells1.len()).all(|f| g.is_id1(f)) && (0..g.cells2.len()).all(|a| g.is_id2(a))
}

/// Freeness of the underlying sesquicategory, checked against the evidence on
/// all cells within `bound`.
pub fn is_cofibrant(input: &CofibrancyInput, bound: usize) -> Result<Cofibrancy> {
    let done = |computad: Option<Computad>, reason: Option<String>| Cofibrancy {
        cofibrant: reason.is_none(),
        computad,
        reason,
        bound,
    };
    match input {
        CofibrancyInput::Replacement(a) => {
            let s = a.underlying_sesquicategory();
            let (v, _) = crate::computads::underlying_computad(&s, bound);
            Ok(done(Some(v), crate::replacement::underlying_is_free(a, bound).err()))
        }
        CofibrancyInput::Retract { computad, idempotent } => {
            let rc = crate::computads::retract_computad(computad, idempotent, bound)?;
            Ok(done(Some(rc.computad), None))
        }
        CofibrancyInput::Bare(g) if is_discrete(g) => {
            let computad = Computad { vertices: g.objects.clone(), edges: Vec::new(), generators: Vec::new() };
            Ok(done(Some(computad), None))
        }
        CofibrancyInput::Bare(_) => Err(Error::Unsupported(
            "cofibrancy needs a candidate computad or a retract datum".into(),
        )),
        CofibrancyInput::Presented { gray, computad, edges, generators } => {
            let reason = presented_free(gray, computad, edges, generators, bound)?.err();
            Ok(done(Some((*computad).clone()), reason))
        }
    }
}

/// The comparison `H G → U∗A` is a bijection on 1- and 2-cells within `bound`.
fn presented_free(a: &GrayCategory, g: &Computad, edges: &[usize], gens: &[usize], bound: usize) -> Result<Check> {
    use crate::computads::{free_sesquicategory, Basic2, Path1, Path2};
    if g.vertices.len() != a.objects.len() || edges.len() != g.edges.len() || gens.len() != g.generators.len() {
        return Err(Error::Precondition("witness does not cover the computad".into()));
    }
    let eval1 = |p: &Path1| p.edges.iter().fold(a.id1[p.src], |acc, &e| a.c1(edges[e], acc));
    for (e, c) in g.edges.iter().enumerate() {
        if a.src1(edges[e]) != c.src || a.tgt1(edges[e]) != c.tgt {
            return Err(Error::Precondition(format!("edge {} has the wrong ends", c.name)));
        }
    }
    for (k, x) in g.generators.iter().enumerate() {
        if a.src2(gens[k]) != eval1(&x.src) || a.tgt2(gens[k]) != eval1(&x.tgt) {
            return Err(Error::Precondition(format!("generator {} has the wrong boundary", x.name)));
        }
    }
    let eval_basic = |b: &Basic2<usize>| a.lw2(eval1(&b.left), a.rw2(gens[b.gen], eval1(&b.right)));
    let eval2 = |p: &Path2<usize>| p.cells.iter().fold(a.id2[eval1(&p.source)], |acc, b| a.c2(eval_basic(b), acc));
    let h = free_sesquicategory(g);
    let paths = h.paths(bound);
    let mut seen1 = BTreeMap::new();
    for p in &paths {
        if let Some(q) = seen1.insert(eval1(p), p.clone()) {
            return Ok(Err(format!("{} and {} have the same composite", g.path_name(&q), g.path_name(p))));
        }
    }
    if let Some(f) = (0..a.cells1.len()).find(|f| !seen1.contains_key(f)) {
        return Ok(Err(format!("1-cell {} is not a composite of at most {bound} edges", a.name1(f))));
    }
    let cost = |b: &Basic2<usize>| 1 + b.left.len() + b.right.len();
    let mut seen2 = BTreeMap::new();
    for p in &paths {
        for q in h.path2s_within(p, bound, cost) {
            let t = h.target(&q)?;
            if let Some(old) = seen2.insert((p.clone(), t, eval2(&q)), q.len()) {
                return Ok(Err(format!(
                    "two 2-cells out of {} (lengths {old} and {}) have the same value",
                    g.path_name(p),
                    q.len()
                )));
            }
        }
    }
    let hit: BTreeSet<usize> = seen2.keys().map(|k| k.2).collect();
    if let Some(x) = (0..a.cells2.len()).find(|x| !hit.contains(x)) {
        return Ok(Err(format!("2-cell {} is not reached within the bound", a.name2(x))));
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunctions::{add_identities_d, arrow_category, discrete_category};
    use crate::category::tabulate_category;
    use crate::constructions::{delooping, locally_discrete};
    use crate::corpus::{gray_named, morphism_corpus, morphism_named};

    fn idempotent() -> GrayCategory {
        let c = tabulate_category(
            vec!["*".into()],
            vec![(false, 0, 0), (true, 0, 0)],
            |&e: &bool| if e { "e".into() } else { "1".into() },
            |_| false,
            |&g, &f| g || f,
        )
        .unwrap();
        locally_discrete(&add_identities_d(&c))
    }

    #[test]
    fn replacement_is_cofibrant() {
        let a = delooping(2);
        let c = is_cofibrant(&CofibrancyInput::Replacement(&a), 2).unwrap();
        assert!(c.cofibrant, "{:?}", c.reason);
        assert!(c.computad.is_some_and(|v| !v.generators.is_empty()));
    }

    #[test]
    fn free_arrow_is_cofibrant() {
        let a = locally_discrete(&add_identities_d(&arrow_category()));
        let f = (0..a.cells1.len()).find(|&f| !a.is_id1(f)).unwrap();
        let g = Computad::build(&["0", "1"], &[("f", "0", "1")], &[]).unwrap();
        let c = is_cofibrant(&CofibrancyInput::Presented { gray: &a, computad: &g, edges: &[f], generators: &[] }, 3).unwrap();
        assert!(c.cofibrant, "{:?}", c.reason);
    }

    #[test]
    fn idempotent_is_not_free() {
        let a = idempotent();
        let e = (0..a.cells1.len()).find(|&f| !a.is_id1(f)).unwrap();
        let g = Computad::build(&["*"], &[("e", "*", "*")], &[]).unwrap();
        let c = is_cofibrant(&CofibrancyInput::Presented { gray: &a, computad: &g, edges: &[e], generators: &[] }, 3).unwrap();
        assert!(!c.cofibrant);
        assert!(c.reason.unwrap().contains("same composite"));
    }

    #[test]
    fn discrete_is_cofibrant_and_bare_input_is_unsupported() {
        let d = locally_discrete(&add_identities_d(&discrete_category(3)));
        let c = is_cofibrant(&CofibrancyInput::Bare(&d), 1).unwrap();
        assert!(c.cofibrant && c.computad.unwrap().edges.is_empty());
        assert!(matches!(is_cofibrant(&CofibrancyInput::Bare(&delooping(2)), 1), Err(Error::Unsupported(_))));
    }

    #[test]
    fn retract_datum_is_cofibrant() {
        let g = Computad::build(&["x", "y"], &[("f", "x", "y"), ("g", "x", "y")], &[("a", "f", "g")]).unwrap();
        let e = Endomorphism::identity(&g);
        let c = is_cofibrant(&CofibrancyInput::Retract { computad: &g, idempotent: &e }, 2).unwrap();
        assert!(c.cofibrant);
        assert_eq!(c.computad.unwrap().generators.len(), 1);
    }

    #[test]
    fn closure_suite_over_corpus() {
        let corpus = morphism_corpus();
        let ms: Vec<(&str, Morphism)> = corpus.iter().map(|m| (m.name.as_str(), m.as_morphism())).collect();
        let c = gray_named("disc2");
        let rs: Vec<ProductRetract> = corpus.iter().take(8).map(|m| ProductRetract::new(m.as_morphism(), &c, 1)).collect();
        let rts: Vec<(&str, Retract)> =
            corpus.iter().zip(&rs).map(|(m, r)| (m.name.as_str(), r.retract(m.as_morphism()))).collect();
        assert!(rts.iter().all(|(_, r)| r.commutes()));
        let report = weq_closure_suite(&ms, &rts);
        assert!(report.holds(), "{:?}", report.failures);
        assert!(report.pairs > ms.len());
        assert_eq!(report.retracts, 8);
    }

    #[test]
    fn quotient_of_cyclic_groups() {
        let m = morphism_named("B(Z/4)->B(Z/2)");
        let cx = Context::new(m.as_morphism());
        assert!(is_fibration(&cx).is_ok());
        assert!(is_weak_equivalence(&cx).is_err());
        let v = classify(m.as_morphism());
        assert!(!v.trivial_fibration.holds && v.consistent());
    }
}

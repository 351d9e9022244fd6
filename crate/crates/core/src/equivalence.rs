//! Equivalences, adjoint equivalences, biequivalences and adjoint
//! biequivalences. Every existential is resolved by exhaustive search in
//! cell-index order, so witnesses are reproducible.

use crate::error::{Error, Result};
use crate::gray::{GrayCategory, GrayIndex};
use crate::sesqui::{SesquiFunctor, Sesquicategory};

/// An equivalence `f` in a 2-category with inverse `g`, invertible
/// `unit : 1 ⇒ gf` and `counit : fg ⇒ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub g: usize,
    pub unit: usize,
    pub counit: usize,
}

/// An adjoint equivalence `(f, g, unit : 1 ⇒ gf, counit : fg ⇒ 1)` satisfying
/// both triangle equations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdjointEquivalence2 {
    pub f: usize,
    pub g: usize,
    pub unit: usize,
    pub counit: usize,
}

pub fn is_equivalence_1cell(t: &Sesquicategory, f: usize) -> Option<EquivalenceWitness> {
    let (a, b) = (t.src1(f), t.tgt1(f));
    for g in t.hom1(b, a) {
        let gf = t.c1(g, f);
        let fg = t.c1(f, g);
        let unit = t.hom2(t.id1[a], gf).into_iter().find(|&u| t.inverse2(u).is_some());
        let counit = t.hom2(fg, t.id1[b]).into_iter().find(|&c| t.inverse2(c).is_some());
        if let (Some(unit), Some(counit)) = (unit, counit) {
            return Some(EquivalenceWitness { g, unit, counit });
        }
    }
    None
}

/// `(εf)·(fη) = 1_f`.
pub fn triangle_left(t: &Sesquicategory, f: usize, unit: usize, counit: usize) -> bool {
    t.c2(t.rw(counit, f), t.lw(f, unit)) == t.id2[f]
}

/// `(gε)·(ηg) = 1_g`.
pub fn triangle_right(t: &Sesquicategory, g: usize, unit: usize, counit: usize) -> bool {
    t.c2(t.lw(g, counit), t.rw(unit, g)) == t.id2[g]
}

pub fn is_adjoint_equivalence(t: &Sesquicategory, ae: &AdjointEquivalence2) -> bool {
    t.inverse2(ae.unit).is_some()
        && t.inverse2(ae.counit).is_some()
        && triangle_left(t, ae.f, ae.unit, ae.counit)
        && triangle_right(t, ae.g, ae.unit, ae.counit)
}

/// The unique counit making the first triangle equation hold for an
/// equivalence `f` with invertible unit `eta : 1 ⇒ gf`.
pub fn promote_to_adjoint_equivalence(t: &Sesquicategory, f: usize, g: usize, eta: usize) -> Result<AdjointEquivalence2> {
    let (a, b) = (t.src1(f), t.tgt1(f));
    if t.src1(g) != b || t.tgt1(g) != a || t.src2(eta) != t.id1[a] || t.tgt2(eta) != t.c1(g, f) {
        return Err(Error::Precondition("unit does not have boundary 1 ⇒ gf".into()));
    }
    if t.inverse2(eta).is_none() {
        return Err(Error::Precondition(format!("unit {} is not invertible", t.name2(eta))));
    }
    if is_equivalence_1cell(t, f).is_none() {
        return Err(Error::Precondition(format!("{} is not an equivalence", t.name1(f))));
    }
    let cands: Vec<usize> =
        t.hom2(t.c1(f, g), t.id1[b]).into_iter().filter(|&e| triangle_left(t, f, eta, e)).collect();
    match cands.as_slice() {
        [e] => {
            let ae = AdjointEquivalence2 { f, g, unit: eta, counit: *e };
            if !is_adjoint_equivalence(t, &ae) {
                return Err(Error::Internal("second triangle equation fails for the promoted counit".into()));
            }
            Ok(ae)
        }
        [] => Err(Error::Internal("no counit satisfies the triangle equation".into())),
        _ => Err(Error::Internal(format!("{} counits satisfy the triangle equation", cands.len()))),
    }
}

/// Number of counits satisfying the first triangle equation; 1 whenever the
/// preconditions of [`promote_to_adjoint_equivalence`] hold.
pub fn count_counits(t: &Sesquicategory, f: usize, g: usize, eta: usize) -> usize {
    let b = t.tgt1(f);
    t.hom2(t.c1(f, g), t.id1[b]).into_iter().filter(|&e| triangle_left(t, f, eta, e)).count()
}

/// Outcome of a 2-categorical property check: `Err` carries the first counterexample.
pub type Check = std::result::Result<(), String>;

/// Equivalence lifting and invertible 2-cell lifting for a 2-functor.
pub fn is_fibration_2cat(p: &SesquiFunctor, e: &Sesquicategory, b: &Sesquicategory) -> Check {
    for x in 0..e.objects.len() {
        let px = p.obj[x];
        for y in 0..b.objects.len() {
            for h in b.hom1(y, px) {
                if is_equivalence_1cell(b, h).is_none() {
                    continue;
                }
                let lifted = (0..e.cells1.len())
                    .any(|k| e.tgt1(k) == x && p.c1[k] == h && is_equivalence_1cell(e, k).is_some());
                if !lifted {
                    return Err(format!("equivalence {} into {} has no lift", b.name1(h), e.objects[x]));
                }
            }
        }
    }
    for f in 0..e.cells1.len() {
        let pf = p.c1[f];
        for beta in 0..b.cells2.len() {
            if b.tgt2(beta) != pf || b.inverse2(beta).is_none() {
                continue;
            }
            let lifted =
                (0..e.cells2.len()).any(|k| e.tgt2(k) == f && p.c2[k] == beta && e.inverse2(k).is_some());
            if !lifted {
                return Err(format!("invertible {} onto {} has no lift", b.name2(beta), e.name1(f)));
            }
        }
    }
    Ok(())
}

/// Locally an equivalence of hom-categories and biessentially surjective.
pub fn is_biequivalence_2functor(p: &SesquiFunctor, x: &Sesquicategory, y: &Sesquicategory) -> Check {
    for a in 0..x.objects.len() {
        for b in 0..x.objects.len() {
            let dom = x.hom1(a, b);
            for &f in &dom {
                for &g in &dom {
                    let mut img: Vec<usize> = x.hom2(f, g).into_iter().map(|s| p.c2[s]).collect();
                    let n = img.len();
                    img.sort_unstable();
                    img.dedup();
                    if img.len() != n {
                        return Err(format!("not locally faithful at {} ⇒ {}", x.name1(f), x.name1(g)));
                    }
                    if n != y.hom2(p.c1[f], p.c1[g]).len() {
                        return Err(format!("not locally full at {} ⇒ {}", x.name1(f), x.name1(g)));
                    }
                }
            }
            for h in y.hom1(p.obj[a], p.obj[b]) {
                let hit = dom.iter().any(|&f| y.hom2(h, p.c1[f]).into_iter().any(|s| y.inverse2(s).is_some()));
                if !hit {
                    return Err(format!("1-cell {} is not isomorphic to an image", y.name1(h)));
                }
            }
        }
    }
    for o in 0..y.objects.len() {
        let hit = (0..x.objects.len()).any(|a| {
            y.hom1(o, p.obj[a]).into_iter().any(|h| is_equivalence_1cell(y, h).is_some())
        });
        if !hit {
            return Err(format!("object {} is not equivalent to an image", y.objects[o]));
        }
    }
    Ok(())
}

/// Surjective on objects, full on 1-cells, fully faithful on 2-cells.
pub fn is_trivial_fibration_2cat(p: &SesquiFunctor, x: &Sesquicategory, y: &Sesquicategory) -> Check {
    for o in 0..y.objects.len() {
        if !p.obj.contains(&o) {
            return Err(format!("object {} not in the image", y.objects[o]));
        }
    }
    for a in 0..x.objects.len() {
        for b in 0..x.objects.len() {
            let dom = x.hom1(a, b);
            for h in y.hom1(p.obj[a], p.obj[b]) {
                if !dom.iter().any(|&f| p.c1[f] == h) {
                    return Err(format!("1-cell {} has no preimage", y.name1(h)));
                }
            }
            for &f in &dom {
                for &g in &dom {
                    let src = x.hom2(f, g);
                    let tgt = y.hom2(p.c1[f], p.c1[g]);
                    for &s in &tgt {
                        let pre = src.iter().filter(|&&k| p.c2[k] == s).count();
                        if pre != 1 {
                            return Err(format!("2-cell {} has {} preimages over {} ⇒ {}", y.name2(s), pre, x.name1(f), x.name1(g)));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Inputs of the lifting lemma for adjoint equivalences along a fibration `P : E → B`.
#[derive(Debug, Clone, Copy)]
pub struct LiftInput {
    /// Equivalence `f : D → E` upstairs.
    pub f: usize,
    /// Adjoint equivalence `(g, g*, η, ε)` downstairs.
    pub down: AdjointEquivalence2,
    /// Invertible `β : g ⇒ Pf` downstairs.
    pub beta: usize,
    /// Invertible lift `β̄ : ḡ ⇒ f` of β.
    pub beta_bar: usize,
}

/// Makes `ḡ` into an adjoint equivalence over the given one, following the
/// lemma's construction step by step.
pub fn lift_adjoint_equivalence(
    p: &SesquiFunctor,
    e: &Sesquicategory,
    b: &Sesquicategory,
    inp: LiftInput,
) -> Result<AdjointEquivalence2> {
    let LiftInput { f, down, beta, beta_bar } = inp;
    let (g, gs, eta, eps) = (down.f, down.g, down.unit, down.counit);
    if !is_adjoint_equivalence(b, &down) {
        return Err(Error::Precondition("downstairs data is not an adjoint equivalence".into()));
    }
    if b.src2(beta) != g || b.tgt2(beta) != p.c1[f] || b.inverse2(beta).is_none() {
        return Err(Error::Precondition("β must be an invertible 2-cell g ⇒ Pf".into()));
    }
    if p.c2[beta_bar] != beta || e.tgt2(beta_bar) != f || e.inverse2(beta_bar).is_none() {
        return Err(Error::Precondition("β̄ must be an invertible lift of β with target f".into()));
    }
    let gbar = e.src2(beta_bar);
    // step 1: make f an adjoint equivalence (f, f1, η1, ε1)
    let w = is_equivalence_1cell(e, f).ok_or_else(|| Error::Precondition("f is not an equivalence".into()))?;
    let fa = promote_to_adjoint_equivalence(e, f, w.g, w.unit)?;
    let (f1, eta1) = (fa.g, fa.unit);
    let pf = p.c1[f];
    // step 2: β* : g* ≅ Pf1 with (g*β)·η = ((β*)⁻¹ Pf)·Pη1
    let lhs = b.c2(b.lw(gs, beta), eta);
    let cands: Vec<usize> = b
        .hom2(gs, p.c1[f1])
        .into_iter()
        .filter(|&s| b.inverse2(s).is_some_and(|si| b.c2(b.rw(si, pf), p.c2[eta1]) == lhs))
        .collect();
    let beta_s = match cands.as_slice() {
        [x] => *x,
        _ => return Err(Error::Internal(format!("β* step: {} candidates, expected exactly one", cands.len()))),
    };
    // step 3: lift β* to β̄* : ḡ* ≅ f1
    let beta_s_bar = (0..e.cells2.len())
        .find(|&k| e.tgt2(k) == f1 && p.c2[k] == beta_s && e.inverse2(k).is_some())
        .ok_or_else(|| Error::Precondition("β* has no invertible lift; P is not a fibration".into()))?;
    let gsbar = e.src2(beta_s_bar);
    // step 4: η' = (ḡ* β̄⁻¹)·(β̄*⁻¹ f)·η1
    let bb_inv = e.inverse2(beta_bar).expect("checked invertible");
    let bsb_inv = e.inverse2(beta_s_bar).expect("lift is invertible");
    let eta_p = e.c2(e.lw(gsbar, bb_inv), e.c2(e.rw(bsb_inv, f), eta1));
    if p.c2[eta_p] != eta {
        return Err(Error::Internal("lifted unit does not lie over η".into()));
    }
    // step 5: the unique counit for (ḡ, ḡ*, η')
    let up = promote_to_adjoint_equivalence(e, gbar, gsbar, eta_p)?;
    if p.c2[up.counit] != eps {
        return Err(Error::Internal("lifted counit does not lie over ε".into()));
    }
    Ok(up)
}

// ---------------------------------------------------------------------------
// Gray-level

/// An equivalence 2-cell `φ : f ⇒ g` in a hom, with inverse `ψ` and
/// invertible 3-cells `unit : 1_f ⇛ ψφ`, `counit : φψ ⇛ 1_g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Equivalence2Witness {
    pub inv: usize,
    pub unit: usize,
    pub counit: usize,
}

pub fn is_equivalence_2cell(g: &GrayCategory, ix: &GrayIndex, phi: usize) -> Option<Equivalence2Witness> {
    let (f, h) = (g.src2(phi), g.tgt2(phi));
    for &psi in ix.hom2(h, f) {
        let unit = ix.hom3(g.id2[f], g.c2(psi, phi)).iter().copied().find(|&u| g.inverse3(u).is_some());
        let counit = ix.hom3(g.c2(phi, psi), g.id2[h]).iter().copied().find(|&c| g.inverse3(c).is_some());
        if let (Some(unit), Some(counit)) = (unit, counit) {
            return Some(Equivalence2Witness { inv: psi, unit, counit });
        }
    }
    None
}

/// Whether some equivalence 2-cell `f ⇒ h` exists.
pub fn equivalent_1cells(g: &GrayCategory, ix: &GrayIndex, f: usize, h: usize) -> Option<usize> {
    ix.hom2(f, h).iter().copied().find(|&phi| is_equivalence_2cell(g, ix, phi).is_some())
}

/// A biequivalence `f` with `g`, equivalence `unit : 1 ⇒ gf` and `counit : fg ⇒ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BiequivalenceWitness {
    pub g: usize,
    pub unit: usize,
    pub counit: usize,
}

pub fn is_biequivalence(g: &GrayCategory, ix: &GrayIndex, f: usize) -> Option<BiequivalenceWitness> {
    let (a, b) = (g.src1(f), g.tgt1(f));
    for &k in ix.hom1(b, a) {
        let unit = equivalent_1cells(g, ix, g.id1[a], g.c1(k, f));
        let counit = equivalent_1cells(g, ix, g.c1(f, k), g.id1[b]);
        if let (Some(unit), Some(counit)) = (unit, counit) {
            return Some(BiequivalenceWitness { g: k, unit, counit });
        }
    }
    None
}

/// `(f, g, η, ε, S, T)` with `S : εf·fη ⇛ 1_f` and `T : 1_g ⇛ gε·ηg`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdjointBiequivalence {
    pub f: usize,
    pub g: usize,
    pub eta: usize,
    pub eps: usize,
    pub s: usize,
    pub t: usize,
}

/// `εf·fη`, the source of S.
pub fn s_source(g: &GrayCategory, f: usize, eta: usize, eps: usize) -> usize {
    g.c2(g.rw2(eps, f), g.lw2(f, eta))
}

/// `gε·ηg`, the target of T.
pub fn t_target(g: &GrayCategory, k: usize, eta: usize, eps: usize) -> usize {
    g.c2(g.lw2(k, eps), g.rw2(eta, k))
}

/// Checks the boundaries of all six components.
pub fn check_shape(g: &GrayCategory, ab: &AdjointBiequivalence) -> Result<()> {
    let &AdjointBiequivalence { f, g: k, eta, eps, s, t } = ab;
    let (a, b) = (g.src1(f), g.tgt1(f));
    let bad = |what: &str| Err(Error::Precondition(format!("adjoint biequivalence: {what} has the wrong boundary")));
    if g.src1(k) != b || g.tgt1(k) != a {
        return bad("g");
    }
    if g.src2(eta) != g.id1[a] || g.tgt2(eta) != g.c1(k, f) {
        return bad("η");
    }
    if g.src2(eps) != g.c1(f, k) || g.tgt2(eps) != g.id1[b] {
        return bad("ε");
    }
    if g.src3(s) != s_source(g, f, eta, eps) || g.tgt3(s) != g.id2[f] {
        return bad("S");
    }
    if g.src3(t) != g.id2[k] || g.tgt3(t) != t_target(g, k, eta, eps) {
        return bad("T");
    }
    Ok(())
}

/// The η-side pasting `(gS·η) ∘ (gεf·η_η) ∘ (Tf·η)`, an endo-3-cell of η.
pub fn first_tetrahedron(g: &GrayCategory, ab: &AdjointBiequivalence) -> usize {
    let &AdjointBiequivalence { f, g: k, eta, eps, s, t } = ab;
    let tf_eta = g.rw32(g.rw3(t, f), eta);
    let mid = g.lw32(g.w2(k, eps, f), g.ich(eta, eta));
    let gs_eta = g.rw32(g.lw3(k, s), eta);
    g.c3s(&[gs_eta, mid, tf_eta])
}

/// The ε-side pasting `(ε·Sg) ∘ (ε_ε·fηg) ∘ (ε·fT)`, an endo-3-cell of ε.
pub fn second_tetrahedron(g: &GrayCategory, ab: &AdjointBiequivalence) -> usize {
    let &AdjointBiequivalence { f, g: k, eta, eps, s, t } = ab;
    let e_ft = g.lw32(eps, g.lw3(f, t));
    let mid = g.rw32(g.ich(eps, eps), g.w2(f, eta, k));
    let e_sg = g.lw32(eps, g.rw3(s, k));
    g.c3s(&[e_sg, mid, e_ft])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TetrahedraReport {
    pub first: bool,
    pub second: bool,
    pub first_composite: usize,
    pub second_composite: usize,
}

pub fn check_tetrahedra(g: &GrayCategory, ab: &AdjointBiequivalence) -> Result<TetrahedraReport> {
    check_shape(g, ab)?;
    let c1 = first_tetrahedron(g, ab);
    let c2 = second_tetrahedron(g, ab);
    Ok(TetrahedraReport { first: c1 == g.id3[ab.eta], second: c2 == g.id3[ab.eps], first_composite: c1, second_composite: c2 })
}

/// Full adjoint biequivalence check: shape, equivalence 2-cells,
/// invertible 3-cells and both tetrahedra.
pub fn is_adjoint_biequivalence(g: &GrayCategory, ix: &GrayIndex, ab: &AdjointBiequivalence) -> bool {
    check_shape(g, ab).is_ok()
        && g.inverse3(ab.s).is_some()
        && g.inverse3(ab.t).is_some()
        && is_equivalence_2cell(g, ix, ab.eta).is_some()
        && is_equivalence_2cell(g, ix, ab.eps).is_some()
        && check_tetrahedra(g, ab).is_ok_and(|r| r.first && r.second)
}

/// Given a biequivalence `f`, some `g` and an equivalence `ε : fg ⇒ 1`,
/// finds an equivalence `η : 1 ⇒ gf` and an invertible `S : εf·fη ⇛ 1`.
pub fn complete_adjoint_biequivalence(g: &GrayCategory, ix: &GrayIndex, f: usize, k: usize, eps: usize) -> Result<(usize, usize)> {
    let (a, b) = (g.src1(f), g.tgt1(f));
    if g.src1(k) != b || g.tgt1(k) != a || g.src2(eps) != g.c1(f, k) || g.tgt2(eps) != g.id1[b] {
        return Err(Error::Precondition("ε must have boundary fg ⇒ 1".into()));
    }
    if is_biequivalence(g, ix, f).is_none() {
        return Err(Error::Precondition(format!("{} is not a biequivalence", g.name1(f))));
    }
    if is_equivalence_2cell(g, ix, eps).is_none() {
        return Err(Error::Precondition(format!("{} is not an equivalence", g.name2(eps))));
    }
    for &eta in ix.hom2(g.id1[a], g.c1(k, f)) {
        let src = s_source(g, f, eta, eps);
        let Some(&s) = ix.hom3(src, g.id2[f]).iter().find(|&&s| g.inverse3(s).is_some()) else { continue };
        if is_equivalence_2cell(g, ix, eta).is_none() {
            return Err(Error::Internal(format!("unit {} found with S but it is not an equivalence", g.name2(eta))));
        }
        return Ok((eta, s));
    }
    Err(Error::Precondition("exhaustive search found no unit with an invertible S".into()))
}

/// Every invertible `T : 1_g ⇛ gε·ηg` satisfying the first tetrahedron equation.
pub fn t_candidates(g: &GrayCategory, ix: &GrayIndex, f: usize, k: usize, eta: usize, eps: usize, s: usize) -> Vec<usize> {
    let tgt = t_target(g, k, eta, eps);
    ix.hom3(g.id2[k], tgt)
        .iter()
        .copied()
        .filter(|&t| g.inverse3(t).is_some())
        .filter(|&t| first_tetrahedron(g, &AdjointBiequivalence { f, g: k, eta, eps, s, t }) == g.id3[eta])
        .collect()
}

/// Same as [`t_candidates`] but characterised by the ε-side equation.
pub fn t_candidates_second(g: &GrayCategory, ix: &GrayIndex, f: usize, k: usize, eta: usize, eps: usize, s: usize) -> Vec<usize> {
    let tgt = t_target(g, k, eta, eps);
    ix.hom3(g.id2[k], tgt)
        .iter()
        .copied()
        .filter(|&t| g.inverse3(t).is_some())
        .filter(|&t| second_tetrahedron(g, &AdjointBiequivalence { f, g: k, eta, eps, s, t }) == g.id3[eps])
        .collect()
}

/// The unique invertible T satisfying the first tetrahedron equation.
pub fn complete_t(g: &GrayCategory, ix: &GrayIndex, f: usize, k: usize, eta: usize, eps: usize, s: usize) -> Result<usize> {
    if is_equivalence_2cell(g, ix, eta).is_none() || is_equivalence_2cell(g, ix, eps).is_none() {
        return Err(Error::Precondition("η and ε must be equivalences".into()));
    }
    if g.src3(s) != s_source(g, f, eta, eps) || g.tgt3(s) != g.id2[f] || g.inverse3(s).is_none() {
        return Err(Error::Precondition("S must be invertible with boundary εf·fη ⇛ 1".into()));
    }
    let c = t_candidates(g, ix, f, k, eta, eps, s);
    match c.as_slice() {
        [t] => Ok(*t),
        _ => Err(Error::Internal(format!("{} solutions for T, expected exactly one", c.len()))),
    }
}

/// All adjoint biequivalences whose left 1-cell lands in object `target`.
pub fn adjoint_biequivalences_into(g: &GrayCategory, ix: &GrayIndex, target: usize) -> Vec<AdjointBiequivalence> {
    let mut out = Vec::new();
    for src in 0..g.objects.len() {
        for &f in ix.hom1(src, target) {
            for &k in ix.hom1(target, src) {
                for &eta in ix.hom2(g.id1[src], g.c1(k, f)) {
                    if is_equivalence_2cell(g, ix, eta).is_none() {
                        continue;
                    }
                    for &eps in ix.hom2(g.c1(f, k), g.id1[target]) {
                        if is_equivalence_2cell(g, ix, eps).is_none() {
                            continue;
                        }
                        let ss = ix.hom3(s_source(g, f, eta, eps), g.id2[f]);
                        let ts = ix.hom3(g.id2[k], t_target(g, k, eta, eps));
                        for &s in ss {
                            if g.inverse3(s).is_none() {
                                continue;
                            }
                            for &t in ts {
                                if g.inverse3(t).is_none() {
                                    continue;
                                }
                                let ab = AdjointBiequivalence { f, g: k, eta, eps, s, t };
                                if first_tetrahedron(g, &ab) == g.id3[eta] && second_tetrahedron(g, &ab) == g.id3[eps] {
                                    out.push(ab);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunctions::{add_identities_d, arrow_category, c_star, chaotic_c, cyclic_group, indiscrete_category};
    use crate::constructions::{delooping, double_suspension, terminal};
    use crate::sesqui::SesquiFunctor;

    #[test]
    fn identity_is_an_equivalence_with_identity_data() {
        let t = chaotic_c(&arrow_category());
        let w = is_equivalence_1cell(&t, t.id1[0]).unwrap();
        assert_eq!(w.g, t.id1[0]);
        let ae = promote_to_adjoint_equivalence(&t, t.id1[0], t.id1[0], t.id2[t.id1[0]]).unwrap();
        assert_eq!(ae.counit, t.id2[t.id1[0]]);
    }

    #[test]
    fn free_arrow_is_not_an_equivalence() {
        let t = add_identities_d(&arrow_category());
        let f = t.cells1.iter().position(|c| c.name == "f").unwrap();
        assert!(is_equivalence_1cell(&t, f).is_none());
    }

    #[test]
    fn chaotic_iso_promotes_uniquely_for_every_unit() {
        let t = chaotic_c(&indiscrete_category(2));
        for f in 0..t.cells1.len() {
            let w = is_equivalence_1cell(&t, f).unwrap();
            for g in t.hom1(t.tgt1(f), t.src1(f)) {
                for eta in t.hom2(t.id1[t.src1(f)], t.c1(g, f)) {
                    assert_eq!(count_counits(&t, f, g, eta), 1);
                    assert!(promote_to_adjoint_equivalence(&t, f, g, eta).is_ok());
                }
            }
            assert!(t.inverse2(w.unit).is_some());
        }
    }

    #[test]
    fn fibration_examples() {
        let ch = chaotic_c(&indiscrete_category(2));
        let term = chaotic_c(&indiscrete_category(1));
        let to_term = SesquiFunctor { obj: vec![0; 2], c1: vec![0; ch.cells1.len()], c2: vec![0; ch.cells2.len()] };
        assert!(is_fibration_2cat(&to_term, &ch, &term).is_ok());
        assert!(is_fibration_2cat(&SesquiFunctor::identity(&ch), &ch, &ch).is_ok());
        // endpoint inclusions
        let incl = SesquiFunctor { obj: vec![0], c1: vec![ch.id1[0]], c2: vec![ch.id2[ch.id1[0]]] };
        assert!(is_fibration_2cat(&incl, &term, &ch).is_err());
        let d = add_identities_d(&indiscrete_category(2));
        let incl_d = SesquiFunctor { obj: vec![0], c1: vec![d.id1[0]], c2: vec![d.id2[d.id1[0]]] };
        assert!(is_fibration_2cat(&incl_d, &term, &d).is_err());
        let a = add_identities_d(&arrow_category());
        let incl_a = SesquiFunctor { obj: vec![0], c1: vec![a.id1[0]], c2: vec![a.id2[a.id1[0]]] };
        assert!(is_fibration_2cat(&incl_a, &term, &a).is_ok());
    }

    fn chaotic_projection() -> (Sesquicategory, Sesquicategory, SesquiFunctor) {
        let e = chaotic_c(&indiscrete_category(2)).0;
        let b = chaotic_c(&indiscrete_category(1)).0;
        let p = SesquiFunctor { obj: vec![0; 2], c1: vec![0; e.cells1.len()], c2: vec![0; e.cells2.len()] };
        (e, b, p)
    }

    #[test]
    fn lift_along_identity_returns_promotion() {
        let e = chaotic_c(&indiscrete_category(2)).0;
        let p = SesquiFunctor::identity(&e);
        let f = e.cells1.iter().position(|c| c.name == "i01").unwrap();
        let w = is_equivalence_1cell(&e, f).unwrap();
        let down = promote_to_adjoint_equivalence(&e, f, w.g, w.unit).unwrap();
        let inp = LiftInput { f, down, beta: e.id2[f], beta_bar: e.id2[f] };
        let up = lift_adjoint_equivalence(&p, &e, &e, inp).unwrap();
        assert_eq!(up, down);
    }

    #[test]
    fn lift_along_chaotic_projection() {
        let (e, b, p) = chaotic_projection();
        let down = AdjointEquivalence2 { f: 0, g: 0, unit: 0, counit: 0 };
        for f in 0..e.cells1.len() {
            for gbar in e.hom1(e.src1(f), e.tgt1(f)) {
                let beta_bar = e.hom2(gbar, f)[0];
                let inp = LiftInput { f, down, beta: 0, beta_bar };
                let up = lift_adjoint_equivalence(&p, &e, &b, inp).unwrap();
                assert!(is_adjoint_equivalence(&e, &up));
                assert_eq!(up.f, gbar);
                assert_eq!((p.c1[up.f], p.c1[up.g], p.c2[up.unit], p.c2[up.counit]), (0, 0, 0, 0));
            }
        }
    }

    #[test]
    fn biequivalences_in_groupoids_and_chaotic() {
        let g = delooping(3);
        let ix = g.index();
        assert!((0..g.cells1.len()).all(|f| is_biequivalence(&g, &ix, f).is_some()));
        let c = c_star(&chaotic_c(&arrow_category()).0);
        let ix = c.index();
        let f = c.cells1.iter().position(|x| x.name == "f").unwrap();
        assert!(is_biequivalence(&c, &ix, f).is_none());
    }

    /// Completes every biequivalence with every counit and checks both tetrahedra.
    fn complete_everything(g: &GrayCategory) -> usize {
        let ix = g.index();
        let mut count = 0;
        for f in 0..g.cells1.len() {
            if is_biequivalence(g, &ix, f).is_none() {
                continue;
            }
            let (a, b) = (g.src1(f), g.tgt1(f));
            for &k in ix.hom1(b, a) {
                for &eps in ix.hom2(g.c1(f, k), g.id1[b]) {
                    if is_equivalence_2cell(g, &ix, eps).is_none() {
                        continue;
                    }
                    let (eta, s) = complete_adjoint_biequivalence(g, &ix, f, k, eps).unwrap();
                    let t = complete_t(g, &ix, f, k, eta, eps, s).unwrap();
                    assert_eq!(t_candidates_second(g, &ix, f, k, eta, eps, s), vec![t]);
                    let ab = AdjointBiequivalence { f, g: k, eta, eps, s, t };
                    let r = check_tetrahedra(g, &ab).unwrap();
                    assert!(r.first && r.second);
                    assert!(is_adjoint_biequivalence(g, &ix, &ab));
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn completion_on_small_examples() {
        assert_eq!(complete_everything(&terminal()), 1);
        assert_eq!(complete_everything(&delooping(2)), 2);
        assert_eq!(complete_everything(&double_suspension(3)), 1);
        assert!(complete_everything(&c_star(&chaotic_c(&indiscrete_category(2)).0)) > 0);
        assert!(complete_everything(&c_star(&chaotic_c(&cyclic_group(2)).0)) > 0);
    }

    #[test]
    fn corrupted_t_breaks_the_first_equation() {
        let g = double_suspension(3);
        let ix = g.index();
        let one = g.id1[0];
        let eta = g.id2[one];
        let (eta2, s) = complete_adjoint_biequivalence(&g, &ix, one, one, eta).unwrap();
        assert_eq!(eta2, eta);
        let t = complete_t(&g, &ix, one, one, eta, eta, s).unwrap();
        let other = ix.hom3(eta, eta).iter().copied().find(|&x| x != t).unwrap();
        let r = check_tetrahedra(&g, &AdjointBiequivalence { f: one, g: one, eta, eps: eta, s, t: other }).unwrap();
        assert!(!r.first && !r.second);
        assert_ne!(r.first_composite, g.id3[eta]);
    }

    #[test]
    fn shape_mismatch_is_a_precondition_error() {
        let g = double_suspension(3);
        let ab = AdjointBiequivalence { f: 0, g: 0, eta: 0, eps: 0, s: 0, t: 0 };
        assert!(check_tetrahedra(&g, &ab).is_ok());
        let b = delooping(2);
        let bad = AdjointBiequivalence { f: 1, g: 0, eta: 0, eps: 0, s: 0, t: 0 };
        assert!(matches!(check_tetrahedra(&b, &bad), Err(Error::Precondition(_))));
    }
}

//! The path object `PB`: biequivalences of `B` and the cells between them,
//! with `D : B → PB` and the two endpoint projections.

use crate::equivalence::{is_biequivalence, is_equivalence_2cell, Check};
use crate::constructions::is_gray_groupoid;
use crate::error::{Error, Result};
use crate::functor::GrayFunctor;
use crate::gray::{GrayCategory, GrayIndex};
use crate::tabulate::{tabulate, GrayModel, Tabulated};

/// A 1-cell `(f, f′, φ : bf ⇒ f′a)` from `a` to `b`, stored with its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathCell1 {
    pub a: usize,
    pub b: usize,
    pub f: usize,
    pub f2: usize,
    pub phi: usize,
}

/// A 2-cell `(ξ, ξ′, Ξ : ψ·bξ ⇛ ξ′a·φ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct PathCell2 {
    pub src: PathCell1,
    pub tgt: PathCell1,
    pub xi: usize,
    pub xi2: usize,
    pub big: usize,
}

/// The model of `PB` over a fixed `B`.
pub struct PathModel<'a> {
    pub b: &'a GrayCategory,
    ix: GrayIndex,
}

impl<'a> PathModel<'a> {
    pub fn new(b: &'a GrayCategory) -> Self {
        Self { b, ix: b.index() }
    }

    /// The condition on a pair `(M, M′)` from `x` to `y`.
    pub fn compatible(&self, x: &PathCell2, y: &PathCell2, m: usize, m2: usize) -> bool {
        let g = self.b;
        let (phi, psi) = (x.src.phi, x.tgt.phi);
        let (a, b) = (x.src.a, x.src.b);
        let lhs = g.c3(y.big, g.lw32(psi, g.lw3(b, m)));
        let rhs = g.c3(g.rw32(g.rw3(m2, a), phi), x.big);
        lhs == rhs
    }
}

impl GrayModel for PathModel<'_> {
    type O = usize;
    type C1 = PathCell1;
    type C2 = PathCell2;
    type C3 = (usize, usize);

    fn objects(&self) -> Vec<usize> {
        (0..self.b.cells1.len()).filter(|&a| is_biequivalence(self.b, &self.ix, a).is_some()).collect()
    }
    fn cells1(&self, &a: &usize, &b: &usize) -> Vec<PathCell1> {
        let g = self.b;
        let mut v = Vec::new();
        for &f in self.ix.hom1(g.src1(a), g.src1(b)) {
            for &f2 in self.ix.hom1(g.tgt1(a), g.tgt1(b)) {
                for &phi in self.ix.hom2(g.c1(b, f), g.c1(f2, a)) {
                    if is_equivalence_2cell(g, &self.ix, phi).is_some() {
                        v.push(PathCell1 { a, b, f, f2, phi });
                    }
                }
            }
        }
        v
    }
    fn cells2(&self, s: &PathCell1, t: &PathCell1) -> Vec<PathCell2> {
        let g = self.b;
        let mut v = Vec::new();
        for &xi in self.ix.hom2(s.f, t.f) {
            for &xi2 in self.ix.hom2(s.f2, t.f2) {
                let from = g.c2(t.phi, g.lw2(s.b, xi));
                let to = g.c2(g.rw2(xi2, s.a), s.phi);
                for &big in self.ix.hom3(from, to) {
                    if g.inverse3(big).is_some() {
                        v.push(PathCell2 { src: *s, tgt: *t, xi, xi2, big });
                    }
                }
            }
        }
        v
    }
    fn cells3(&self, x: &PathCell2, y: &PathCell2) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for &m in self.ix.hom3(x.xi, y.xi) {
            for &m2 in self.ix.hom3(x.xi2, y.xi2) {
                if self.compatible(x, y, m, m2) {
                    v.push((m, m2));
                }
            }
        }
        v
    }

    fn id1(&self, &a: &usize) -> PathCell1 {
        let g = self.b;
        PathCell1 { a, b: a, f: g.id1[g.src1(a)], f2: g.id1[g.tgt1(a)], phi: g.id2[a] }
    }
    fn id2(&self, f: &PathCell1) -> PathCell2 {
        let g = self.b;
        PathCell2 { src: *f, tgt: *f, xi: g.id2[f.f], xi2: g.id2[f.f2], big: g.id3[f.phi] }
    }
    fn id3(&self, x: &PathCell2) -> (usize, usize) {
        (self.b.id3[x.xi], self.b.id3[x.xi2])
    }
    fn comp1(&self, h: &PathCell1, f: &PathCell1) -> PathCell1 {
        let g = self.b;
        let phi = g.c2(g.lw2(h.f2, f.phi), g.rw2(h.phi, f.f));
        PathCell1 { a: f.a, b: h.b, f: g.c1(h.f, f.f), f2: g.c1(h.f2, f.f2), phi }
    }
    fn comp2(&self, z: &PathCell2, x: &PathCell2) -> PathCell2 {
        let g = self.b;
        let (a, b) = (x.src.a, x.src.b);
        let big = g.c3(g.lw32(g.rw2(z.xi2, a), x.big), g.rw32(z.big, g.lw2(b, x.xi)));
        PathCell2 { src: x.src, tgt: z.tgt, xi: g.c2(z.xi, x.xi), xi2: g.c2(z.xi2, x.xi2), big }
    }
    fn comp3(&self, y: &(usize, usize), x: &(usize, usize)) -> (usize, usize) {
        (self.b.c3(y.0, x.0), self.b.c3(y.1, x.1))
    }
    fn lw2(&self, h: &PathCell1, x: &PathCell2) -> PathCell2 {
        let g = self.b;
        let psi = x.tgt.phi;
        let first = g.lw32(g.lw2(h.f2, psi), g.ich(h.phi, x.xi));
        let second = g.rw32(g.lw3(h.f2, x.big), g.rw2(h.phi, x.src.f));
        PathCell2 {
            src: self.comp1(h, &x.src),
            tgt: self.comp1(h, &x.tgt),
            xi: g.lw2(h.f, x.xi),
            xi2: g.lw2(h.f2, x.xi2),
            big: g.c3(second, first),
        }
    }
    fn rw2(&self, x: &PathCell2, e: &PathCell1) -> PathCell2 {
        let g = self.b;
        let first = g.lw32(g.lw2(x.tgt.f2, e.phi), g.rw3(x.big, e.f));
        let swap = g.inverse3(g.ich(x.xi2, e.phi)).expect("interchangers are invertible");
        let second = g.rw32(swap, g.rw2(x.src.phi, e.f));
        PathCell2 {
            src: self.comp1(&x.src, e),
            tgt: self.comp1(&x.tgt, e),
            xi: g.rw2(x.xi, e.f),
            xi2: g.rw2(x.xi2, e.f2),
            big: g.c3(second, first),
        }
    }
    fn lw3(&self, h: &PathCell1, m: &(usize, usize)) -> (usize, usize) {
        (self.b.lw3(h.f, m.0), self.b.lw3(h.f2, m.1))
    }
    fn rw3(&self, m: &(usize, usize), e: &PathCell1) -> (usize, usize) {
        (self.b.rw3(m.0, e.f), self.b.rw3(m.1, e.f2))
    }
    fn lw32(&self, z: &PathCell2, m: &(usize, usize)) -> (usize, usize) {
        (self.b.lw32(z.xi, m.0), self.b.lw32(z.xi2, m.1))
    }
    fn rw32(&self, m: &(usize, usize), x: &PathCell2) -> (usize, usize) {
        (self.b.rw32(m.0, x.xi), self.b.rw32(m.1, x.xi2))
    }
    fn interchanger(&self, t: &PathCell2, x: &PathCell2) -> (usize, usize) {
        (self.b.ich(t.xi, x.xi), self.b.ich(t.xi2, x.xi2))
    }

    fn name0(&self, a: &usize) -> String {
        self.b.name1(*a)
    }
    fn name1(&self, f: &PathCell1) -> String {
        let g = self.b;
        format!("({},{},{})", g.name1(f.f), g.name1(f.f2), g.name2(f.phi))
    }
    fn name2(&self, x: &PathCell2) -> String {
        let g = self.b;
        format!("({},{},{})", g.name2(x.xi), g.name2(x.xi2), g.name3(x.big))
    }
    fn name3(&self, m: &(usize, usize)) -> String {
        format!("({},{})", self.b.name3(m.0), self.b.name3(m.1))
    }
}

/// `PB` with `D`, `P` and `P′`, plus the cell values behind each index.
pub struct PathObject {
    pub pb: GrayCategory,
    pub d: GrayFunctor,
    pub p: GrayFunctor,
    pub p2: GrayFunctor,
    pub objects: Vec<usize>,
    pub cells1: Vec<PathCell1>,
    pub cells2: Vec<PathCell2>,
    pub cells3: Vec<(usize, usize)>,
}

pub fn path_object(b: &GrayCategory) -> Result<PathObject> {
    let model = PathModel::new(b);
    let t: Tabulated<PathModel> = tabulate(&model)?;
    let d0 = GrayFunctor {
        obj: (0..b.objects.len()).map(|o| t.obj(&b.id1[o]).expect("identities are biequivalences")).collect(),
        c1: (0..b.cells1.len())
            .map(|f| {
                let c = PathCell1 { a: b.id1[b.src1(f)], b: b.id1[b.tgt1(f)], f, f2: f, phi: b.id2[f] };
                t.idx1(&c, None).expect("D on 1-cells")
            })
            .collect(),
        c2: (0..b.cells2.len())
            .map(|x| {
                let (f, g) = (b.src2(x), b.tgt2(x));
                let src = PathCell1 { a: b.id1[b.src1(f)], b: b.id1[b.tgt1(f)], f, f2: f, phi: b.id2[f] };
                let tgt = PathCell1 { phi: b.id2[g], f: g, f2: g, ..src };
                t.idx2(&PathCell2 { src, tgt, xi: x, xi2: x, big: b.id3[x] }, None).expect("D on 2-cells")
            })
            .collect(),
        c3: Vec::new(),
    };
    let mut d = d0;
    d.c3 = (0..b.cells3.len())
        .map(|m| t.idx3(&(m, m), Some((d.c2[b.src3(m)], d.c2[b.tgt3(m)]))).expect("D on 3-cells"))
        .collect();
    let p = GrayFunctor {
        obj: t.o.iter().map(|&a| b.src1(a)).collect(),
        c1: t.c1.iter().map(|c| c.f).collect(),
        c2: t.c2.iter().map(|c| c.xi).collect(),
        c3: t.c3.iter().map(|c| c.0).collect(),
    };
    let p2 = GrayFunctor {
        obj: t.o.iter().map(|&a| b.tgt1(a)).collect(),
        c1: t.c1.iter().map(|c| c.f2).collect(),
        c2: t.c2.iter().map(|c| c.xi2).collect(),
        c3: t.c3.iter().map(|c| c.1).collect(),
    };
    Ok(PathObject { pb: t.gray, d, p, p2, objects: t.o, cells1: t.c1, cells2: t.c2, cells3: t.c3 })
}

/// Checks that `PB` is a Gray-groupoid when `B` is one. Each inverse is
/// built from inverses in `B`: `(f⁻¹, f′⁻¹, f′⁻¹φ⁻¹f⁻¹)` on 1-cells and
/// `(ξ⁻¹, ξ′⁻¹, ξ′⁻¹a·Ξ⁻¹·bξ⁻¹)` on 2-cells, then located in `PB` and
/// verified there. The witness names the first cell that fails.
pub fn path_object_groupoid_check(b: &GrayCategory) -> Result<(bool, Option<String>)> {
    if let (false, Some(w)) = is_gray_groupoid(b) {
        return Err(Error::Precondition(format!("not a Gray-groupoid: {w}")));
    }
    let inv1 = |f: usize| b.inverse1(f).expect("groupoid");
    let inv2 = |x: usize| b.inverse2(x).expect("groupoid");
    let inv3 = |m: usize| b.inverse3(m).expect("groupoid");
    let po = path_object(b)?;
    let pb = &po.pb;
    let find1 = |c: &PathCell1| po.cells1.iter().position(|d| d == c);
    let find2 = |c: &PathCell2| po.cells2.iter().position(|d| d == c);
    let inverse_cell1 = |c: &PathCell1| PathCell1 {
        a: c.b,
        b: c.a,
        f: inv1(c.f),
        f2: inv1(c.f2),
        phi: b.w2(inv1(c.f2), inv2(c.phi), inv1(c.f)),
    };
    for (k, c) in po.cells1.iter().enumerate() {
        let ok = find1(&inverse_cell1(c))
            .is_some_and(|j| pb.c1(j, k) == pb.id1[pb.src1(k)] && pb.c1(k, j) == pb.id1[pb.tgt1(k)]);
        if !ok {
            return Ok((false, Some(format!("1-cell {}", pb.name1(k)))));
        }
    }
    for (k, c) in po.cells2.iter().enumerate() {
        let (a, bb) = (c.src.a, c.src.b);
        let xi_inv = inv2(c.xi);
        let big = b.lw32(b.rw2(inv2(c.xi2), a), b.rw32(inv3(c.big), b.lw2(bb, xi_inv)));
        let inv = PathCell2 { src: c.tgt, tgt: c.src, xi: xi_inv, xi2: inv2(c.xi2), big };
        let ok = find2(&inv)
            .is_some_and(|j| pb.c2(j, k) == pb.id2[pb.src2(k)] && pb.c2(k, j) == pb.id2[pb.tgt2(k)]);
        if !ok {
            return Ok((false, Some(format!("2-cell {}", pb.name2(k)))));
        }
    }
    for (k, &(m, m2)) in po.cells3.iter().enumerate() {
        let want = (inv3(m), inv3(m2));
        let (s, t) = (pb.src3(k), pb.tgt3(k));
        let ok = (0..po.cells3.len()).any(|j| {
            po.cells3[j] == want
                && pb.src3(j) == t
                && pb.tgt3(j) == s
                && pb.c3(j, k) == pb.id3[s]
                && pb.c3(k, j) == pb.id3[t]
        });
        if !ok {
            return Ok((false, Some(format!("3-cell {}", pb.name3(k)))));
        }
    }
    // the constructive witnesses agree with a direct search
    let (direct, w) = is_gray_groupoid(pb);
    if !direct {
        return Err(Error::Internal(format!("inverse found constructively but not by search: {}", w.unwrap_or_default())));
    }
    Ok((true, None))
}

/// Verdicts on `PB` for one `B`.
#[derive(Debug, Clone)]
pub struct PathObjectReport {
    pub cells: [usize; 4],
    /// `⟨P, P′⟩∘D` is the diagonal.
    pub diagonal: Check,
    pub d_weak_equivalence: Check,
    pub pp_fibration: Check,
    pub p_weak_equivalence: Check,
    pub p2_weak_equivalence: Check,
    /// Biequivalence, equivalence and invertibility of PB-cells agree with
    /// the same property of both components.
    pub classifiers: Check,
    /// Present when `B` is a Gray-groupoid.
    pub groupoid: Option<Check>,
}

impl PathObjectReport {
    pub fn holds(&self) -> bool {
        [&self.diagonal, &self.d_weak_equivalence, &self.pp_fibration, &self.p_weak_equivalence, &self.p2_weak_equivalence, &self.classifiers]
            .iter()
            .all(|c| c.is_ok())
            && self.groupoid.as_ref().is_none_or(|c| c.is_ok())
    }
}

/// The cell classifiers of `PB` against their componentwise versions.
pub fn classifier_check(b: &GrayCategory, po: &PathObject) -> Check {
    let (bx, px) = (b.index(), po.pb.index());
    let pb = &po.pb;
    for (k, c) in po.cells1.iter().enumerate() {
        let whole = is_biequivalence(pb, &px, k).is_some();
        let parts = is_biequivalence(b, &bx, c.f).is_some() && is_biequivalence(b, &bx, c.f2).is_some();
        if whole != parts {
            return Err(format!("1-cell {}: biequivalence {whole}, components {parts}", pb.name1(k)));
        }
    }
    for (k, c) in po.cells2.iter().enumerate() {
        let whole = is_equivalence_2cell(pb, &px, k).is_some();
        let parts = is_equivalence_2cell(b, &bx, c.xi).is_some() && is_equivalence_2cell(b, &bx, c.xi2).is_some();
        if whole != parts {
            return Err(format!("2-cell {}: equivalence {whole}, components {parts}", pb.name2(k)));
        }
    }
    for (k, &(m, m2)) in po.cells3.iter().enumerate() {
        let whole = pb.inverse3(k).is_some();
        let parts = b.inverse3(m).is_some() && b.inverse3(m2).is_some();
        if whole != parts {
            return Err(format!("3-cell {}: invertible {whole}, components {parts}", pb.name3(k)));
        }
    }
    Ok(())
}

pub fn path_object_report(b: &GrayCategory) -> Result<PathObjectReport> {
    use crate::constructions::{pairing, product};
    use crate::model::{is_fibration, is_weak_equivalence, Context, Morphism};
    let po = path_object(b)?;
    let bb = product(b, b);
    let pp = pairing(&po.p, &po.p2, b, b);
    let id = GrayFunctor::identity(b);
    let diagonal = if pp.after(&po.d) == pairing(&id, &id, b, b) {
        Ok(())
    } else {
        Err("<P,P'>.D differs from the diagonal".to_string())
    };
    let weq = |f: &GrayFunctor, dom: &GrayCategory, cod: &GrayCategory| is_weak_equivalence(&Context::new(Morphism { f, dom, cod }));
    let groupoid = is_gray_groupoid(b).0.then(|| match path_object_groupoid_check(b) {
        Ok((true, _)) => Ok(()),
        Ok((false, w)) => Err(w.unwrap_or_default()),
        Err(e) => Err(e.to_string()),
    });
    Ok(PathObjectReport {
        cells: [po.pb.objects.len(), po.pb.cells1.len(), po.pb.cells2.len(), po.pb.cells3.len()],
        diagonal,
        d_weak_equivalence: weq(&po.d, b, &po.pb),
        pp_fibration: is_fibration(&Context::new(Morphism { f: &pp, dom: &po.pb, cod: &bb.gray })),
        p_weak_equivalence: weq(&po.p, &po.pb, b),
        p2_weak_equivalence: weq(&po.p2, &po.pb, b),
        classifiers: classifier_check(b, &po),
        groupoid,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunctions::{add_identities_d, c_star, chaotic_c, indiscrete_category};
    use crate::constructions::{delooping, double_suspension, locally_discrete, terminal, two_of};
    use crate::functor::validate_gray_functor;
    use crate::gray::validate_gray_category;
    use crate::sesqui::terminal_two_category;

    fn check(b: &GrayCategory) -> PathObject {
        let po = path_object(b).unwrap();
        let r = validate_gray_category(&po.pb).unwrap();
        assert!(r.is_valid(), "{r}");
        assert!(validate_gray_functor(&po.d, b, &po.pb).unwrap().is_valid());
        for f in [&po.p, &po.p2] {
            assert!(validate_gray_functor(f, &po.pb, b).unwrap().is_valid());
        }
        assert_eq!(po.p.after(&po.d), GrayFunctor::identity(b));
        assert_eq!(po.p2.after(&po.d), GrayFunctor::identity(b));
        po
    }

    #[test]
    fn terminal_path_object_is_terminal() {
        let po = check(&terminal());
        let g = &po.pb;
        assert_eq!((g.objects.len(), g.cells1.len(), g.cells2.len(), g.cells3.len()), (1, 1, 1, 1));
    }

    #[test]
    fn delooping_path_object() {
        let po = check(&delooping(2));
        assert_eq!(po.pb.objects.len(), 2);
        assert_eq!(po.pb.cells1.len(), 8);
    }

    #[test]
    fn other_path_objects_validate() {
        check(&double_suspension(3));
        check(&two_of(&terminal_two_category()));
        check(&locally_discrete(&add_identities_d(&indiscrete_category(2))));
        check(&c_star(&chaotic_c(&indiscrete_category(2)).0));
    }

    #[test]
    fn path_objects_of_groupoids_are_groupoids() {
        assert_eq!(path_object_groupoid_check(&delooping(2)).unwrap(), (true, None));
        assert_eq!(path_object_groupoid_check(&double_suspension(3)).unwrap(), (true, None));
        assert_eq!(path_object_groupoid_check(&terminal()).unwrap(), (true, None));
    }

    #[test]
    fn reports_hold_on_small_objects() {
        for b in [terminal(), delooping(2), two_of(&terminal_two_category())] {
            let r = path_object_report(&b).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        assert!(path_object_report(&delooping(2)).unwrap().groupoid.is_some());
    }

    #[test]
    fn non_groupoid_is_rejected() {
        let b = two_of(&terminal_two_category());
        assert!(matches!(path_object_groupoid_check(&b), Err(Error::Precondition(_))));
    }
}

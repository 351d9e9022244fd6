//! Nerves of finite Gray-groupoids, horn fillers following the lifting
//! constructions for fibrations, the Π₃ presentation of a simplicial set
//! and evaluation of its words back into the groupoid.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::constructions::{is_gray_groupoid, terminal};
use crate::error::{Error, Result};
use crate::functor::GrayFunctor;
use crate::gray::GrayCategory;
use crate::simplicial::{
    check_horn, compatible_tuples, for_each_horn, Budget, Horn, KanReport, LiftingReport, SimplicialMap, SimplicialSet, TOP_DIM,
};

/// A 2-simplex: `α : f₁₂f₀₁ ⇒ f₀₂`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub f01: usize,
    pub f12: usize,
    pub f02: usize,
    pub alpha: usize,
}

/// A 3-simplex: faces `d₀ … d₃` and `X : α₀₂₃·(f₂₃α₀₁₂) ⇛ α₀₁₃·(α₁₂₃f₀₁)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tetrahedron {
    pub faces: [usize; 4],
    pub x: usize,
}

/// The nerve, truncated at dimension 4 and coskeletal there.
#[derive(Debug, Clone)]
pub struct Nerve {
    pub gray: GrayCategory,
    pub sset: SimplicialSet,
    pub triangles: Vec<Triangle>,
    pub tetrahedra: Vec<Tetrahedron>,
    /// 4-simplices as their five faces.
    pub pentachora: Vec<[usize; 5]>,
    inv1: Vec<usize>,
    inv2: Vec<usize>,
    inv3: Vec<usize>,
    tri_ix: HashMap<Triangle, usize>,
    tet_ix: HashMap<Tetrahedron, usize>,
    pent_ix: HashMap<[usize; 5], usize>,
}

fn inverses(n: usize, inv: impl Fn(usize) -> Option<usize>, what: &str) -> Result<Vec<usize>> {
    (0..n).map(|c| inv(c).ok_or_else(|| Error::Precondition(format!("{what} {c} is not invertible")))).collect()
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(what()))
    }
}

/// Faces of `s_j x` for an `n`-simplex `x`, from the simplicial identities.
fn degenerate_faces(set: &SimplicialSet, n: usize, x: usize, j: usize) -> Vec<usize> {
    if n == 0 {
        return vec![x, x];
    }
    (0..=n + 1)
        .map(|i| {
            if i == j || i == j + 1 {
                x
            } else if i < j {
                set.degeneracies[n - 1][set.faces[n][x][i]][j - 1]
            } else {
                set.degeneracies[n - 1][set.faces[n][x][i - 1]][j]
            }
        })
        .collect()
}

impl Nerve {
    pub fn new(g: &GrayCategory) -> Result<Self> {
        if let (false, Some(w)) = is_gray_groupoid(g) {
            return Err(Error::Precondition(format!("not a Gray-groupoid: {w} has no inverse")));
        }
        let ix = g.index();
        let mut n = Nerve {
            gray: g.clone(),
            sset: SimplicialSet::with_top(TOP_DIM),
            triangles: Vec::new(),
            tetrahedra: Vec::new(),
            pentachora: Vec::new(),
            inv1: inverses(g.cells1.len(), |c| g.inverse1(c), "1-cell")?,
            inv2: inverses(g.cells2.len(), |c| g.inverse2(c), "2-cell")?,
            inv3: inverses(g.cells3.len(), |c| g.inverse3(c), "3-cell")?,
            tri_ix: HashMap::new(),
            tet_ix: HashMap::new(),
            pent_ix: HashMap::new(),
        };
        n.sset.coskeletal = true;
        n.sset.names[0] = g.objects.clone();
        n.sset.faces[0] = vec![Vec::new(); g.objects.len()];
        for c in &g.cells1 {
            n.sset.names[1].push(c.name.clone());
            n.sset.faces[1].push(vec![c.tgt, c.src]);
        }
        for f01 in 0..g.cells1.len() {
            for f12 in 0..g.cells1.len() {
                if g.tgt1(f01) != g.src1(f12) {
                    continue;
                }
                let gf = g.c1(f12, f01);
                for f02 in 0..g.cells1.len() {
                    for &alpha in ix.hom2(gf, f02) {
                        n.push_triangle(Triangle { f01, f12, f02, alpha });
                    }
                }
            }
        }
        let tri_faces = n.sset.faces[2].clone();
        let mut b = Budget::unlimited("nerve");
        let mut tets = Vec::new();
        compatible_tuples(&tri_faces, 3, None, &mut b, &mut |s| {
            let faces = [s[0], s[1], s[2], s[3]];
            let (src, tgt) = n.tet_boundary(faces);
            for &x in ix.hom3(src, tgt) {
                tets.push(Tetrahedron { faces, x });
            }
            Ok(true)
        })?;
        for t in tets {
            n.push_tetrahedron(t);
        }
        let tet_faces = n.sset.faces[3].clone();
        let mut pents = Vec::new();
        compatible_tuples(&tet_faces, 4, None, &mut b, &mut |s| {
            let p = [s[0], s[1], s[2], s[3], s[4]];
            let (l, r) = n.hexagon(p, |t| n.tetrahedra[t].x);
            if l == r {
                pents.push(p);
            }
            Ok(true)
        })?;
        for p in pents {
            n.pent_ix.insert(p, n.pentachora.len());
            n.sset.names[4].push(format!("<{}>", p.map(|t| t.to_string()).join("|")));
            n.sset.faces[4].push(p.to_vec());
            n.pentachora.push(p);
        }
        n.fill_degeneracies()?;
        Ok(n)
    }

    fn push_triangle(&mut self, t: Triangle) {
        let g = &self.gray;
        self.tri_ix.insert(t, self.triangles.len());
        self.sset.names[2].push(format!("{}:{},{}=>{}", g.name2(t.alpha), g.name1(t.f01), g.name1(t.f12), g.name1(t.f02)));
        self.sset.faces[2].push(vec![t.f12, t.f02, t.f01]);
        self.triangles.push(t);
    }

    fn push_tetrahedron(&mut self, t: Tetrahedron) {
        self.tet_ix.insert(t, self.tetrahedra.len());
        self.sset.names[3].push(format!("{}<{}>", self.gray.name3(t.x), t.faces.map(|f| f.to_string()).join("|")));
        self.sset.faces[3].push(t.faces.to_vec());
        self.tetrahedra.push(t);
    }

    fn fill_degeneracies(&mut self) -> Result<()> {
        let g = self.gray.clone();
        self.sset.degeneracies[0] = (0..g.objects.len()).map(|a| vec![g.id1[a]]).collect();
        for n in 1..TOP_DIM {
            let mut table = Vec::with_capacity(self.sset.count(n));
            for x in 0..self.sset.count(n) {
                let mut row = Vec::with_capacity(n + 1);
                for j in 0..=n {
                    let fs = degenerate_faces(&self.sset, n, x, j);
                    let y = match n {
                        1 => {
                            let (f12, f02, f01) = (fs[0], fs[1], fs[2]);
                            ensure(g.c1(f12, f01) == f02, || format!("s{j} of 1-cell {}", g.name1(x)))?;
                            self.tri_ix.get(&Triangle { f01, f12, f02, alpha: g.id2[f02] }).copied()
                        }
                        2 => {
                            let faces = [fs[0], fs[1], fs[2], fs[3]];
                            let (src, tgt) = self.tet_boundary(faces);
                            ensure(src == tgt, || format!("s{j} of 2-simplex {x} has unequal pastings"))?;
                            self.tet_ix.get(&Tetrahedron { faces, x: g.id3[src] }).copied()
                        }
                        _ => self.pent_ix.get(&[fs[0], fs[1], fs[2], fs[3], fs[4]]).copied(),
                    };
                    row.push(y.ok_or_else(|| Error::Internal(format!("degenerate simplex s{j} of {n}-simplex {x} is missing")))?);
                }
                table.push(row);
            }
            self.sset.degeneracies[n] = table;
        }
        self.sset.degeneracies[TOP_DIM] = vec![Vec::new(); self.pentachora.len()];
        Ok(())
    }

    pub fn triangle_index(&self, t: &Triangle) -> Option<usize> {
        self.tri_ix.get(t).copied()
    }

    pub fn tetrahedron_index(&self, t: &Tetrahedron) -> Option<usize> {
        self.tet_ix.get(t).copied()
    }

    pub fn pentachoron_index(&self, p: &[usize; 5]) -> Option<usize> {
        self.pent_ix.get(p).copied()
    }

    pub fn inverse1(&self, f: usize) -> usize {
        self.inv1[f]
    }

    pub fn inverse2(&self, a: usize) -> usize {
        self.inv2[a]
    }

    pub fn inverse3(&self, x: usize) -> usize {
        self.inv3[x]
    }

    /// Source and target 2-cells `(α₀₂₃·(f₂₃α₀₁₂), α₀₁₃·(α₁₂₃f₀₁))` for four
    /// compatible 2-simplices.
    pub fn tet_boundary(&self, faces: [usize; 4]) -> (usize, usize) {
        let g = &self.gray;
        let t = faces.map(|i| self.triangles[i]);
        let (f01, f23) = (t[3].f01, t[0].f12);
        let src = g.c2(t[1].alpha, g.lw2(f23, t[3].alpha));
        let tgt = g.c2(t[2].alpha, g.rw2(t[0].alpha, f01));
        (src, tgt)
    }

    /// The 2-simplex on local vertices `i < j < k` of a 3-simplex.
    fn tet_tri(&self, t: usize, i: usize, j: usize, k: usize) -> Triangle {
        self.triangles[self.tetrahedra[t].faces[6 - i - j - k]]
    }

    /// The 2-simplex on vertices `i < j < k` of a 4-simplex with faces `p`.
    fn pent_tri(&self, p: &[usize; 5], v: [usize; 3]) -> Triangle {
        let m = (0..5).find(|m| !v.contains(m)).expect("a free vertex");
        let local = v.map(|u| u - usize::from(u > m));
        self.tet_tri(p[m], local[0], local[1], local[2])
    }

    fn pent_edge(&self, p: &[usize; 5], i: usize, j: usize) -> usize {
        let k = (0..5).find(|k| *k != i && *k != j).expect("a third vertex");
        if k > j {
            self.pent_tri(p, [i, j, k]).f01
        } else if k > i {
            self.pent_tri(p, [i, k, j]).f02
        } else {
            self.pent_tri(p, [k, i, j]).f12
        }
    }

    /// Both sides of the 4-simplex equation for five compatible
    /// 3-simplices, with the 3-cell of each face supplied by `x`. The left
    /// side swaps the removal of vertices 2,3 then 1,3 (by an interchanger)
    /// then 1,2; the right side swaps 1,2 then 1,3 then 2,3.
    pub fn hexagon(&self, p: [usize; 5], x: impl Fn(usize) -> usize) -> (usize, usize) {
        let g = &self.gray;
        let f = |i, j| self.pent_edge(&p, i, j);
        let a = |i, j, k| self.pent_tri(&p, [i, j, k]).alpha;
        let (f01, f12, f23, f34) = (f(0, 1), f(1, 2), f(2, 3), f(3, 4));
        let (x1234, x0234, x0134, x0124, x0123) = (x(p[0]), x(p[1]), x(p[2]), x(p[3]), x(p[4]));
        let m0234 = g.rw32(x0234, g.lw2(g.c1(f34, f23), a(0, 1, 2)));
        let mich = g.lw32(a(0, 2, 4), g.ich(a(2, 3, 4), a(0, 1, 2)));
        let m0124 = g.rw32(x0124, g.rw2(a(2, 3, 4), g.c1(f12, f01)));
        let m0123 = g.lw32(a(0, 3, 4), g.lw3(f34, x0123));
        let m0134 = g.rw32(x0134, g.w2(f34, a(1, 2, 3), f01));
        let m1234 = g.lw32(a(0, 1, 4), g.rw3(x1234, f01));
        (g.c3s(&[m0124, mich, m0234]), g.c3s(&[m1234, m0134, m0123]))
    }

    /// Image of a simplex under the nerve of `f: self → cod`.
    pub fn image(&self, f: &GrayFunctor, cod: &Nerve, n: usize, x: usize) -> Option<usize> {
        match n {
            0 => f.obj.get(x).copied(),
            1 => f.c1.get(x).copied(),
            2 => {
                let t = self.triangles[x];
                cod.triangle_index(&Triangle { f01: f.c1[t.f01], f12: f.c1[t.f12], f02: f.c1[t.f02], alpha: f.c2[t.alpha] })
            }
            3 => {
                let t = self.tetrahedra[x];
                let mut faces = [0; 4];
                for i in 0..4 {
                    faces[i] = self.image(f, cod, 2, t.faces[i])?;
                }
                cod.tetrahedron_index(&Tetrahedron { faces, x: f.c3[t.x] })
            }
            4 => {
                let p = self.pentachora[x];
                let mut faces = [0; 5];
                for i in 0..5 {
                    faces[i] = self.image(f, cod, 3, p[i])?;
                }
                cod.pentachoron_index(&faces)
            }
            _ => None,
        }
    }
}

fn point() -> &'static Nerve {
    static POINT: OnceLock<Nerve> = OnceLock::new();
    POINT.get_or_init(|| Nerve::new(&terminal()).expect("the terminal Gray-category is a groupoid"))
}

/// The nerve of a Gray-groupoid.
pub fn nerve(g: &GrayCategory) -> Result<Nerve> {
    Nerve::new(g)
}

/// The nerve of a Gray-functor between Gray-groupoids.
pub fn nerve_map(f: &GrayFunctor, dom: &Nerve, cod: &Nerve) -> Result<SimplicialMap> {
    let mut maps = Vec::new();
    for n in 0..=TOP_DIM {
        let row: Option<Vec<usize>> = (0..dom.sset.count(n)).map(|x| dom.image(f, cod, n, x)).collect();
        maps.push(row.ok_or_else(|| Error::Precondition(format!("functor does not map {n}-simplices into the nerve")))?);
    }
    Ok(SimplicialMap { maps })
}

/// Lifts of cells along a Gray-functor, preferring identities.
struct Lifter<'a> {
    a: &'a Nerve,
    b: &'a Nerve,
    f: &'a GrayFunctor,
}

macro_rules! lift {
    ($e:expr) => {
        match $e {
            Some(v) => v,
            None => return Ok(None),
        }
    };
}

impl Lifter<'_> {
    /// A 1-cell `D → e` over `b1`.
    fn lift1_to(&self, e: usize, b1: usize) -> Option<usize> {
        let g = &self.a.gray;
        let id = g.id1[e];
        if self.f.c1[id] == b1 {
            return Some(id);
        }
        (0..g.cells1.len()).find(|&c| g.tgt1(c) == e && self.f.c1[c] == b1)
    }

    /// A 2-cell into `f` over `beta`.
    fn lift2_to(&self, f: usize, beta: usize) -> Option<usize> {
        let g = &self.a.gray;
        let id = g.id2[f];
        if self.f.c2[id] == beta {
            return Some(id);
        }
        (0..g.cells2.len()).find(|&c| g.tgt2(c) == f && self.f.c2[c] == beta)
    }

    /// A 3-cell into `alpha` over `m`.
    fn lift3_to(&self, alpha: usize, m: usize) -> Option<usize> {
        let g = &self.a.gray;
        let id = g.id3[alpha];
        if self.f.c3[id] == m {
            return Some(id);
        }
        (0..g.cells3.len()).find(|&c| g.tgt3(c) == alpha && self.f.c3[c] == m)
    }

    /// Given composable `f`, `g` and `β : F(gf) ⇒ k`, a 2-simplex
    /// `α : gf ⇒ h` over β: lift β⁻¹ into gf and invert.
    fn lift_inner2(&self, f: usize, g: usize, beta: usize) -> Option<(usize, usize)> {
        let ga = &self.a.gray;
        let gamma = self.lift2_to(ga.c1(g, f), self.b.inv2[beta])?;
        let alpha = self.a.inv2[gamma];
        Some((ga.tgt2(alpha), alpha))
    }

    fn fill(&self, h: &Horn, target: usize) -> Result<Option<usize>> {
        let (a, b, fm) = (self.a, self.b, self.f);
        let (ga, gb) = (&a.gray, &b.gray);
        let fc = |i: usize| h.face(i);
        let missing = |what: &str| Error::Internal(format!("{what} missing from the nerve"));
        let out = match (h.n, h.r) {
            (1, 0) => {
                let v = fc(1);
                let g = lift!(self.lift1_to(v, b.inv1[target]));
                a.inv1[g]
            }
            (1, _) => lift!(self.lift1_to(fc(0), target)),
            (2, 1) => {
                let (f, g) = (fc(2), fc(0));
                let (h2, alpha) = lift!(self.lift_inner2(f, g, b.triangles[target].alpha));
                a.triangle_index(&Triangle { f01: f, f12: g, f02: h2, alpha }).ok_or_else(|| missing("2-simplex"))?
            }
            (2, 0) => {
                let (g, u) = (fc(2), fc(1));
                let t = b.triangles[target];
                let (v, gamma) = (t.f12, t.alpha);
                let f = a.inv1[u];
                let k = b.inv1[v];
                let beta = gb.lw2(k, gb.rw2(gamma, fm.c1[f]));
                let (h2, alpha) = lift!(self.lift_inner2(f, g, beta));
                ensure(fm.c1[h2] == k, || "lifted 1-cell lies over v⁻¹".into())?;
                let w = a.inv1[h2];
                let delta = ga.w2(w, alpha, u);
                ensure(ga.c1s(&[w, g, f, u]) == ga.c1(w, g), || "wgfu = wg".into())?;
                ensure(ga.c1s(&[w, h2, u]) == u, || "whu = u".into())?;
                ensure(fm.c1[w] == v && fm.c2[delta] == gamma, || "δ lies over γ".into())?;
                a.triangle_index(&Triangle { f01: g, f12: w, f02: u, alpha: delta }).ok_or_else(|| missing("2-simplex"))?
            }
            (2, _) => {
                let (g, u) = (fc(0), fc(1));
                let t = b.triangles[target];
                let (v, gamma) = (t.f01, t.alpha);
                let gi = a.inv1[g];
                let beta = gb.lw2(fm.c1[gi], b.inv2[gamma]);
                let (w, alpha) = lift!(self.lift_inner2(u, gi, beta));
                let delta = ga.lw2(g, a.inv2[alpha]);
                ensure(ga.src2(delta) == ga.c1(g, w) && ga.tgt2(delta) == u, || "δ : gw ⇒ u".into())?;
                ensure(fm.c1[w] == v && fm.c2[delta] == gamma, || "δ lies over γ".into())?;
                a.triangle_index(&Triangle { f01: w, f12: g, f02: u, alpha: delta }).ok_or_else(|| missing("2-simplex"))?
            }
            (3, r) => lift!(self.fill3(h, r, b.tetrahedra[target])?),
            (4, r) => {
                let mut tris = [0; 4];
                let verts: Vec<usize> = (0..5).filter(|&v| v != r).collect();
                for (m, tri) in tris.iter_mut().enumerate() {
                    let tv: Vec<usize> = verts.iter().copied().filter(|&v| v != verts[m]).collect();
                    let k = (0..5).find(|k| *k != r && !tv.contains(k)).expect("another face");
                    let local: Vec<usize> = tv.iter().map(|&u| u - usize::from(u > k)).collect();
                    *tri = a.tetrahedra[fc(k)].faces[6 - local[0] - local[1] - local[2]];
                }
                let (src, tgt) = a.tet_boundary(tris);
                let mut found = None;
                for x in ga.hom3(src, tgt) {
                    let Some(t) = a.tetrahedron_index(&Tetrahedron { faces: tris, x }) else { continue };
                    let mut p = [0; 5];
                    for (i, slot) in p.iter_mut().enumerate() {
                        *slot = if i == r { t } else { fc(i) };
                    }
                    if let Some(q) = a.pentachoron_index(&p) {
                        ensure(found.is_none(), || "4-dimensional fillers are unique".into())?;
                        found = Some(q);
                    }
                }
                lift!(found)
            }
            _ => return Err(Error::Unsupported(format!("horns of dimension {}", h.n))),
        };
        for i in (0..=h.n).filter(|&i| i != h.r) {
            ensure(a.sset.faces[h.n][out][i] == fc(i), || format!("filler face {i} differs from the horn"))?;
        }
        ensure(a.image(fm, b, h.n, out) == Some(target), || "filler does not lie over the target".into())?;
        Ok(Some(out))
    }

    /// Three-dimensional horns: choose the missing 2-cell so that the
    /// identity 3-cell fits, then correct by the unique 3-cell `Z` in the
    /// base and its lift `W`.
    fn fill3(&self, h: &Horn, r: usize, target: Tetrahedron) -> Result<Option<usize>> {
        let (a, b, fm) = (self.a, self.b, self.f);
        let (ga, gb) = (&a.gray, &b.gray);
        let t = |i: usize| a.triangles[h.face(i)];
        let y = target.x;
        let beta = b.triangles[target.faces[r]].alpha;
        let correction = |cands: &[usize], ok: &dyn Fn(usize) -> bool| -> Result<usize> {
            let zs: Vec<usize> = cands.iter().copied().filter(|&z| ok(z)).collect();
            ensure(zs.len() == 1, || format!("expected a unique correction 3-cell, found {}", zs.len()))?;
            Ok(zs[0])
        };
        let (tri, x) = match r {
            1 => {
                let (t0, t2, t3) = (t(0), t(2), t(3));
                let (f01, f23, f02, f03) = (t3.f01, t0.f12, t3.f02, t2.f02);
                let tgt = ga.c2(t2.alpha, ga.rw2(t0.alpha, f01));
                let w = ga.lw2(f23, t3.alpha);
                let ap = ga.c2(tgt, a.inv2[w]);
                ensure(ga.c2(ap, w) == tgt, || "α′₀₂₃·(f₂₃α₀₁₂) = α₀₁₃·(α₁₂₃f₀₁)".into())?;
                let xp = ga.id3[tgt];
                let fw = fm.c2[w];
                let z = correction(&gb.hom3(beta, fm.c2[ap]), &|z| gb.c3(fm.c3[xp], gb.rw32(z, fw)) == y)?;
                let wl = lift!(self.lift3_to(ap, z));
                (Triangle { f01: f02, f12: f23, f02: f03, alpha: ga.src3(wl) }, ga.c3(xp, ga.rw32(wl, w)))
            }
            2 => {
                let (t0, t1, t3) = (t(0), t(1), t(3));
                let (f01, f23, f13, f03) = (t3.f01, t0.f12, t0.f02, t1.f02);
                let src = ga.c2(t1.alpha, ga.lw2(f23, t3.alpha));
                let w = ga.rw2(t0.alpha, f01);
                let ap = ga.c2(src, a.inv2[w]);
                ensure(ga.c2(ap, w) == src, || "α′₀₁₃·(α₁₂₃f₀₁) = α₀₂₃·(f₂₃α₀₁₂)".into())?;
                let xp = ga.id3[src];
                let fw = fm.c2[w];
                let z = correction(&gb.hom3(fm.c2[ap], beta), &|z| gb.c3(gb.rw32(z, fw), fm.c3[xp]) == y)?;
                let wl = a.inv3[lift!(self.lift3_to(ap, b.inv3[z]))];
                (Triangle { f01, f12: f13, f02: f03, alpha: ga.tgt3(wl) }, ga.c3(ga.rw32(wl, w), xp))
            }
            // Whiskering by f₀₁⁻¹ reduces to the inner case.
            0 => {
                let (t1, t2, t3) = (t(1), t(2), t(3));
                let (f01, f12, f23, f13) = (t3.f01, t3.f12, t1.f12, t2.f12);
                let src = ga.c2(t1.alpha, ga.lw2(f23, t3.alpha));
                let m = ga.c2(a.inv2[t2.alpha], src);
                let ap = ga.rw2(m, a.inv1[f01]);
                ensure(ga.rw2(ap, f01) == m, || "α′₁₂₃f₀₁ = α₀₁₃⁻¹·α₀₂₃·(f₂₃α₀₁₂)".into())?;
                let xp = ga.id3[src];
                let (fa013, ff01) = (fm.c2[t2.alpha], fm.c1[f01]);
                let z = correction(&gb.hom3(fm.c2[ap], beta), &|z| gb.c3(gb.lw32(fa013, gb.rw3(z, ff01)), fm.c3[xp]) == y)?;
                let wl = a.inv3[lift!(self.lift3_to(ap, b.inv3[z]))];
                (Triangle { f01: f12, f12: f23, f02: f13, alpha: ga.tgt3(wl) }, ga.c3(ga.lw32(t2.alpha, ga.rw3(wl, f01)), xp))
            }
            // Whiskering by f₂₃⁻¹ reduces to the inner case.
            _ => {
                let (t0, t1, t2) = (t(0), t(1), t(2));
                let (f01, f12, f02, f23) = (t2.f01, t0.f01, t1.f01, t0.f12);
                let tgt = ga.c2(t2.alpha, ga.rw2(t0.alpha, f01));
                let m = ga.c2(a.inv2[t1.alpha], tgt);
                let ap = ga.lw2(a.inv1[f23], m);
                ensure(ga.lw2(f23, ap) == m, || "f₂₃α′₀₁₂ = α₀₂₃⁻¹·α₀₁₃·(α₁₂₃f₀₁)".into())?;
                let xp = ga.id3[tgt];
                let (fa023, ff23) = (fm.c2[t1.alpha], fm.c1[f23]);
                let z = correction(&gb.hom3(beta, fm.c2[ap]), &|z| gb.c3(fm.c3[xp], gb.lw32(fa023, gb.lw3(ff23, z))) == y)?;
                let wl = lift!(self.lift3_to(ap, z));
                (Triangle { f01, f12, f02, alpha: ga.src3(wl) }, ga.c3(xp, ga.lw32(t1.alpha, ga.lw3(f23, wl))))
            }
        };
        let Some(ti) = a.triangle_index(&tri) else { return Err(Error::Internal("lifted 2-simplex missing".into())) };
        let mut faces = [0; 4];
        for (i, s) in faces.iter_mut().enumerate() {
            *s = if i == r { ti } else { h.face(i) };
        }
        let tet = Tetrahedron { faces, x };
        ensure(a.tet_boundary(faces) == (ga.src3(x), ga.tgt3(x)), || "pasted 3-cell has the simplex boundary".into())?;
        a.tetrahedron_index(&tet).map(Some).ok_or_else(|| Error::Internal("lifted 3-simplex missing".into()))
    }
}

/// Fills a horn of the nerve by the lifting constructions over the
/// terminal Gray-category.
pub fn horn_filler(n: &Nerve, h: &Horn) -> Result<usize> {
    check_horn(&n.sset, h)?;
    let to_point = GrayFunctor::to_terminal(&n.gray);
    let l = Lifter { a: n, b: point(), f: &to_point };
    l.fill(h, 0)?.ok_or_else(|| Error::Internal(format!("no filler for {}", h.describe(&n.sset))))
}

/// Lifts a horn of `dom` against a simplex `target` of `cod` over it, along
/// a fibration `f`. `None` when a cell lift required by the construction
/// does not exist.
pub fn lift_horn(dom: &Nerve, cod: &Nerve, f: &GrayFunctor, h: &Horn, target: usize) -> Result<Option<usize>> {
    check_horn(&dom.sset, h)?;
    for i in (0..=h.n).filter(|&i| i != h.r) {
        if dom.image(f, cod, h.n - 1, h.face(i)) != Some(cod.sset.faces[h.n][target][i]) {
            return Err(Error::Precondition(format!("target simplex does not extend the image of horn face {i}")));
        }
    }
    Lifter { a: dom, b: cod, f }.fill(h, target)
}

/// Kan condition of a nerve, filling each horn by [`horn_filler`].
pub fn kan_check_nerve(n: &Nerve, maxdim: usize, budget: usize) -> Result<KanReport> {
    if maxdim > TOP_DIM {
        return Err(Error::Unsupported(format!("dimension {maxdim} exceeds {TOP_DIM}")));
    }
    let mut b = Budget::new(budget, "kan_check");
    let mut horns = 0;
    let mut unfillable = None;
    let to_point = GrayFunctor::to_terminal(&n.gray);
    let l = Lifter { a: n, b: point(), f: &to_point };
    for_each_horn(&n.sset, maxdim, &mut b, &mut |h| {
        horns += 1;
        if l.fill(h, 0)?.is_none() {
            unfillable = Some((h.clone(), h.describe(&n.sset)));
            return Ok(false);
        }
        Ok(true)
    })?;
    Ok(KanReport { maxdim, horns, unfillable })
}

/// Lifts every horn square of the nerve of `f` up to `maxdim`.
pub fn fibration_horn_squares(dom: &Nerve, cod: &Nerve, f: &GrayFunctor, maxdim: usize, budget: usize) -> Result<LiftingReport> {
    if maxdim > TOP_DIM {
        return Err(Error::Unsupported(format!("dimension {maxdim} exceeds {TOP_DIM}")));
    }
    let phi = nerve_map(f, dom, cod)?;
    let mut b = Budget::new(budget, "horn squares");
    let mut squares = 0;
    let mut failure = None;
    let mut indexes: HashMap<(usize, usize), HashMap<Vec<usize>, Vec<usize>>> = HashMap::new();
    let l = Lifter { a: dom, b: cod, f };
    for_each_horn(&dom.sset, maxdim, &mut b, &mut |h| {
        let mut key: Vec<usize> = h.slots();
        for (i, k) in key.iter_mut().enumerate() {
            if i != h.r {
                *k = phi.maps[h.n - 1][*k];
            }
        }
        let ix = indexes.entry((h.n, h.r)).or_insert_with(|| cod.sset.partial_index(h.n, h.r));
        for &t in ix.get(&key).map_or(&[][..], |v| v) {
            squares += 1;
            if l.fill(h, t)?.is_none() {
                failure = Some((h.n, format!("{} over {}", h.describe(&dom.sset), cod.sset.name(h.n, t))));
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok(LiftingReport { maxdim, squares, failure })
}

/// A generating 1-cell: a nondegenerate 1-simplex or its formal inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator1 {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
    pub simplex: usize,
    pub inverse: bool,
}

/// A generating 2-cell `[f₂][f₁] ⇒ [f]`; words list letters first-applied first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator2 {
    pub name: String,
    pub simplex: usize,
    pub src_obj: usize,
    pub tgt_obj: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
}

/// A whiskered generating 2-cell (or its inverse): `left · gen · right`,
/// with `right` applied first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Whiskered {
    pub left: Vec<usize>,
    pub gen: usize,
    pub inverse: bool,
    pub right: Vec<usize>,
}

/// A formal vertical composite of whiskered generators, first step first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Word2 {
    pub obj: usize,
    pub source: Vec<usize>,
    pub steps: Vec<Whiskered>,
}

/// A generating 3-cell for a 3-simplex, between the two pastings of its faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator3 {
    pub name: String,
    pub simplex: usize,
    pub source: Word2,
    pub target: Word2,
}

/// The relation of a 4-simplex: the hexagon of its five 3-generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub simplex: usize,
    pub faces: [usize; 5],
    pub text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GrayPresentation {
    pub objects: Vec<String>,
    pub ones: Vec<Generator1>,
    pub twos: Vec<Generator2>,
    pub threes: Vec<Generator3>,
    pub relations: Vec<Relation>,
    /// Generator `[x]` of each 1-simplex, if nondegenerate.
    pub one_of_simplex: Vec<Option<usize>>,
    pub two_of_simplex: Vec<Option<usize>>,
    pub three_of_simplex: Vec<usize>,
}

/// Formal inverse of a 1-generator.
pub fn partner(letter: usize) -> usize {
    letter ^ 1
}

/// Appends letters with free cancellation of formal inverses.
pub fn reduce_into(word: &mut Vec<usize>, letters: &[usize]) {
    for &l in letters {
        if word.last() == Some(&partner(l)) {
            word.pop();
        } else {
            word.push(l);
        }
    }
}

impl GrayPresentation {
    fn letter(&self, simplex: usize) -> Vec<usize> {
        self.one_of_simplex[simplex].into_iter().collect()
    }

    fn step(&self, left: Vec<usize>, tri: usize, right: Vec<usize>) -> Option<Whiskered> {
        self.two_of_simplex[tri].map(|gen| Whiskered { left, gen, inverse: false, right })
    }

    /// Source and target words of a whiskered generator.
    pub fn whiskered_ends(&self, w: &Whiskered) -> (Vec<usize>, Vec<usize>) {
        let g = &self.twos[w.gen];
        let (s, t) = if w.inverse { (&g.target, &g.source) } else { (&g.source, &g.target) };
        let end = |mid: &[usize]| {
            let mut out = Vec::new();
            reduce_into(&mut out, &w.right);
            reduce_into(&mut out, mid);
            reduce_into(&mut out, &w.left);
            out
        };
        (end(s), end(t))
    }

    /// Target word of a composite, or `None` if a step does not match.
    pub fn word2_target(&self, w: &Word2) -> Option<Vec<usize>> {
        let mut cur = w.source.clone();
        for s in &w.steps {
            let (a, b) = self.whiskered_ends(s);
            if a != cur {
                return None;
            }
            cur = b;
        }
        Some(cur)
    }

    pub fn describe_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "[]".into();
        }
        w.iter().map(|&l| self.ones[l].name.clone()).collect::<Vec<_>>().join("")
    }
}

/// The Π₃ presentation of a simplicial set. 2-generators come from 2-simplices
/// outside the image of the degeneracies.
pub fn pi3_presentation(x: &SimplicialSet) -> Result<GrayPresentation> {
    let mut p = GrayPresentation { objects: x.names.first().cloned().unwrap_or_default(), ..Default::default() };
    let deg1 = x.degenerate(1);
    p.one_of_simplex = vec![None; x.count(1)];
    for s in (0..x.count(1)).filter(|&s| !deg1[s]) {
        let (src, tgt) = (x.faces[1][s][1], x.faces[1][s][0]);
        p.one_of_simplex[s] = Some(p.ones.len());
        p.ones.push(Generator1 { name: format!("[{}]", x.name(1, s)), src, tgt, simplex: s, inverse: false });
        p.ones.push(Generator1 { name: format!("[{}]^-1", x.name(1, s)), src: tgt, tgt: src, simplex: s, inverse: true });
    }
    let deg2 = x.degenerate(2);
    p.two_of_simplex = vec![None; x.count(2)];
    for s in (0..x.count(2)).filter(|&s| !deg2[s]) {
        let f = &x.faces[2][s];
        let (f12, f02, f01) = (f[0], f[1], f[2]);
        let mut source = p.letter(f01);
        source.extend(p.letter(f12));
        p.two_of_simplex[s] = Some(p.twos.len());
        p.twos.push(Generator2 {
            name: format!("[{}]", x.name(2, s)),
            simplex: s,
            src_obj: x.faces[1][f02][1],
            tgt_obj: x.faces[1][f02][0],
            source,
            target: p.letter(f02),
        });
    }
    for s in 0..x.count(3) {
        let f = &x.faces[3][s];
        let (t123, t023, t013, t012) = (f[0], f[1], f[2], f[3]);
        let f01 = x.faces[2][t012][2];
        let f23 = x.faces[2][t123][0];
        let obj = x.faces[1][f01][1];
        let mut boundary = p.letter(f01);
        boundary.extend(p.letter(x.faces[2][t012][0]));
        boundary.extend(p.letter(f23));
        let source: Vec<Whiskered> = [p.step(p.letter(f23), t012, vec![]), p.step(vec![], t023, vec![])].into_iter().flatten().collect();
        let target: Vec<Whiskered> = [p.step(vec![], t123, p.letter(f01)), p.step(vec![], t013, vec![])].into_iter().flatten().collect();
        p.three_of_simplex.push(p.threes.len());
        p.threes.push(Generator3 {
            name: format!("[{}]", x.name(3, s)),
            simplex: s,
            source: Word2 { obj, source: boundary.clone(), steps: source },
            target: Word2 { obj, source: boundary, steps: target },
        });
    }
    for s in 0..x.count(4) {
        let f = &x.faces[4][s];
        let faces = [f[0], f[1], f[2], f[3], f[4]];
        let n = |i: usize| p.threes[p.three_of_simplex[faces[i]]].name.clone();
        let text = format!("{}·ι·{} = {}·{}·{}", n(3), n(1), n(0), n(2), n(4));
        p.relations.push(Relation { simplex: s, faces, text });
    }
    Ok(p)
}

/// A word over a presentation, of dimension 1, 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PWord {
    One { obj: usize, letters: Vec<usize> },
    Two(Word2),
    Three { gen: usize, inverse: bool },
}

/// Evaluation of Π₃ N A words in A.
pub struct Counit<'a> {
    pub nerve: &'a Nerve,
    pub pres: &'a GrayPresentation,
}

impl<'a> Counit<'a> {
    pub fn new(nerve: &'a Nerve, pres: &'a GrayPresentation) -> Self {
        Self { nerve, pres }
    }

    fn ill(what: impl Into<String>) -> Error {
        Error::Precondition(format!("ill-formed word: {}", what.into()))
    }

    pub fn eval1(&self, obj: usize, letters: &[usize]) -> Result<usize> {
        let g = &self.nerve.gray;
        let mut cur = *g.id1.get(obj).ok_or_else(|| Self::ill("unknown object"))?;
        for &l in letters {
            let gen = self.pres.ones.get(l).ok_or_else(|| Self::ill("unknown letter"))?;
            if gen.src != g.tgt1(cur) {
                return Err(Self::ill(format!("letter {} does not start at {}", gen.name, g.objects[g.tgt1(cur)])));
            }
            let cell = if gen.inverse { self.nerve.inverse1(gen.simplex) } else { gen.simplex };
            cur = g.c1(cell, cur);
        }
        Ok(cur)
    }

    pub fn eval_whiskered(&self, w: &Whiskered) -> Result<usize> {
        let g = &self.nerve.gray;
        let gen = self.pres.twos.get(w.gen).ok_or_else(|| Self::ill("unknown 2-generator"))?;
        let alpha = self.nerve.triangles[gen.simplex].alpha;
        let alpha = if w.inverse { self.nerve.inverse2(alpha) } else { alpha };
        let rsrc = w.right.first().map_or(gen.src_obj, |&l| self.pres.ones[l].src);
        let r = self.eval1(rsrc, &w.right)?;
        if g.tgt1(r) != gen.src_obj {
            return Err(Self::ill("right whisker does not meet the generator"));
        }
        let l = self.eval1(gen.tgt_obj, &w.left)?;
        Ok(g.lw2(l, g.rw2(alpha, r)))
    }

    pub fn eval2(&self, w: &Word2) -> Result<usize> {
        let g = &self.nerve.gray;
        self.pres.word2_target(w).ok_or_else(|| Self::ill("composite steps do not match"))?;
        let mut cur = g.id2[self.eval1(w.obj, &w.source)?];
        for s in &w.steps {
            cur = g.c2(self.eval_whiskered(s)?, cur);
        }
        Ok(cur)
    }

    pub fn eval3(&self, gen: usize, inverse: bool) -> Result<usize> {
        let t = self.pres.threes.get(gen).ok_or_else(|| Self::ill("unknown 3-generator"))?;
        let x = self.nerve.tetrahedra[t.simplex].x;
        Ok(if inverse { self.nerve.inverse3(x) } else { x })
    }

    /// Evaluates a word, returning its dimension and the cell of A.
    pub fn eval(&self, w: &PWord) -> Result<(usize, usize)> {
        match w {
            PWord::One { obj, letters } => Ok((1, self.eval1(*obj, letters)?)),
            PWord::Two(w) => Ok((2, self.eval2(w)?)),
            PWord::Three { gen, inverse } => Ok((3, self.eval3(*gen, *inverse)?)),
        }
    }

    /// Both sides of a relation, evaluated through the 3-generators.
    pub fn eval_relation(&self, r: &Relation) -> Result<(usize, usize)> {
        let gens: Vec<(usize, usize)> = r.faces.iter().map(|&t| Ok((t, self.eval3(self.pres.three_of_simplex[t], false)?))).collect::<Result<_>>()?;
        let lookup: HashMap<usize, usize> = gens.into_iter().collect();
        Ok(self.nerve.hexagon(r.faces, |t| lookup[&t]))
    }
}

/// Evaluates a Π₃ N A word in A.
pub fn counit_eval(n: &Nerve, p: &GrayPresentation, w: &PWord) -> Result<(usize, usize)> {
    Counit::new(n, p).eval(w)
}

/// Outcome of [`counit_spotcheck`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpotReport {
    pub bound: usize,
    pub objects: usize,
    pub ones: usize,
    pub words: usize,
    pub rewrite_steps: usize,
    pub twos: usize,
    pub threes: usize,
    pub pairs: usize,
    pub relations: usize,
    pub failures: Vec<String>,
}

impl SpotReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

fn words_up_to(p: &GrayPresentation, obj: usize, bound: usize, out: &mut Vec<Vec<usize>>) {
    fn go(p: &GrayPresentation, at: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if cur.len() == bound {
            return;
        }
        for (l, g) in p.ones.iter().enumerate() {
            if g.src != at || cur.last() == Some(&partner(l)) {
                continue;
            }
            cur.push(l);
            go(p, g.tgt, bound, cur, out);
            cur.pop();
        }
    }
    go(p, obj, bound, &mut Vec::new(), out);
}

/// Rewrites a reduced word to length at most one: formal inverses are first
/// traded for actual inverses, then the first two letters are merged, each
/// step by one whiskered generator.
pub fn normalize(n: &Nerve, p: &GrayPresentation, word: &[usize], max_steps: usize) -> Result<Word2> {
    let g = &n.gray;
    let obj = word.first().map_or(0, |&l| p.ones[l].src);
    let mut out = Word2 { obj, source: word.to_vec(), steps: Vec::new() };
    let mut cur = word.to_vec();
    let tri = |f01: usize, f12: usize| {
        let h = g.c1(f12, f01);
        n.triangle_index(&Triangle { f01, f12, f02: h, alpha: g.id2[h] })
    };
    let gen_of = |t: Option<usize>| t.and_then(|t| p.two_of_simplex[t]).ok_or_else(|| Error::Internal("composition 2-simplex is degenerate".into()));
    while out.steps.len() < max_steps {
        let step = if let Some(i) = cur.iter().position(|&l| p.ones[l].inverse) {
            let f = p.ones[cur[i]].simplex;
            let gi = n.inverse1(f);
            Whiskered { left: cur[i + 1..].to_vec(), gen: gen_of(tri(f, gi))?, inverse: true, right: cur[..=i].to_vec() }
        } else if cur.len() >= 2 {
            let (f1, f2) = (p.ones[cur[0]].simplex, p.ones[cur[1]].simplex);
            Whiskered { left: cur[2..].to_vec(), gen: gen_of(tri(f1, f2))?, inverse: false, right: Vec::new() }
        } else {
            break;
        };
        let (s, t) = p.whiskered_ends(&step);
        ensure(s == cur, || "rewrite step does not apply".into())?;
        cur = t;
        out.steps.push(step);
    }
    Ok(out)
}

/// Spot-checks that the counit `Π₃ N A → A` is the identity on objects,
/// surjective on 1-cells, normalizes words up to `bound`, is full on 2- and
/// 3-cells, and respects every 4-simplex relation.
pub fn counit_spotcheck(n: &Nerve, bound: usize) -> Result<SpotReport> {
    let g = &n.gray;
    let p = pi3_presentation(&n.sset)?;
    let c = Counit::new(n, &p);
    let mut r = SpotReport { bound, ..Default::default() };
    r.objects = p.objects.len();
    if p.objects != g.objects {
        r.failures.push("objects differ".into());
    }
    for f in 0..g.cells1.len() {
        r.ones += 1;
        let letters = p.letter(f);
        if c.eval1(g.src1(f), &letters)? != f {
            r.failures.push(format!("1-cell {} is not the value of a word of length 1", g.name1(f)));
        }
    }
    for obj in 0..g.objects.len() {
        let mut words = Vec::new();
        words_up_to(&p, obj, bound, &mut words);
        for w in words {
            r.words += 1;
            let norm = normalize(n, &p, &w, 2 * bound + 1)?;
            r.rewrite_steps += norm.steps.len();
            let Some(end) = p.word2_target(&norm) else {
                r.failures.push(format!("rewriting of {} is ill-formed", p.describe_word(&w)));
                continue;
            };
            let cell = c.eval2(&Word2 { obj, ..norm })?;
            let ok = end.len() <= 1 && g.src2(cell) == c.eval1(obj, &w)? && g.tgt2(cell) == c.eval1(obj, &end)?;
            if !ok {
                r.failures.push(format!("word {} does not normalize to length 1", p.describe_word(&w)));
            }
        }
    }
    let gen_word = |tri: Option<usize>, src: usize, source: Vec<usize>| Word2 {
        obj: src,
        source,
        steps: tri.and_then(|t| p.two_of_simplex[t]).map(|gen| Whiskered { left: vec![], gen, inverse: false, right: vec![] }).into_iter().collect(),
    };
    for phi in 0..g.cells2.len() {
        r.twos += 1;
        let (f, h) = (g.src2(phi), g.tgt2(phi));
        let a = g.src1(f);
        let t = n.triangle_index(&Triangle { f01: g.id1[a], f12: f, f02: h, alpha: phi });
        let w = gen_word(t, a, p.letter(f));
        let ok = p.word2_target(&w) == Some(p.letter(h)) && c.eval2(&w)? == phi;
        if !ok {
            r.failures.push(format!("2-cell {} is not the value of a generator", g.name2(phi)));
        }
    }
    let full = |theta: usize| -> Option<usize> {
        let (al, be) = (g.src3(theta), g.tgt3(theta));
        let (f, h) = (g.src2(al), g.tgt2(al));
        let a = g.src1(f);
        let ia = g.id1[a];
        let t = |f12, f02, alpha| n.triangle_index(&Triangle { f01: ia, f12, f02, alpha });
        let faces = [t(f, h, be)?, t(f, h, al)?, t(h, h, g.id2[h])?, t(ia, ia, g.id2[ia])?];
        n.tetrahedron_index(&Tetrahedron { faces, x: theta })
    };
    for theta in 0..g.cells3.len() {
        r.threes += 1;
        let Some(tet) = full(theta) else {
            r.failures.push(format!("3-cell {} has no 3-simplex", g.name3(theta)));
            continue;
        };
        let gen = &p.threes[p.three_of_simplex[tet]];
        let ok = c.eval3(p.three_of_simplex[tet], false)? == theta
            && c.eval2(&gen.source)? == g.src3(theta)
            && c.eval2(&gen.target)? == g.tgt3(theta);
        if !ok {
            r.failures.push(format!("3-cell {} is not the value of its generator", g.name3(theta)));
        }
    }
    for x1 in 0..g.cells3.len() {
        for x2 in (0..g.cells3.len()).filter(|&x2| g.src3(x2) == g.tgt3(x1)) {
            r.pairs += 1;
            let y = g.c3(x2, x1);
            let h = g.tgt2(g.src3(x1));
            let ia = g.id1[g.src1(h)];
            let faces = (|| Some([full(x2)?, full(y)?, full(x1)?, full(g.id3[g.id2[h]])?, full(g.id3[g.id2[ia]])?]))();
            if !faces.is_some_and(|f| n.pentachoron_index(&f).is_some()) {
                r.failures.push(format!("[{}][{}] = [{}] is not a relation", g.name3(x2), g.name3(x1), g.name3(y)));
            }
        }
    }
    for rel in &p.relations {
        r.relations += 1;
        let (lhs, rhs) = c.eval_relation(rel)?;
        if lhs != rhs {
            r.failures.push(format!("relation of 4-simplex {} fails", rel.simplex));
        }
    }
    Ok(r)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{delooping, double_suspension};
    use crate::corpus::{gray_named, groupoid_corpus, morphism_named};
    use crate::simplicial::{delta, kan_check, validate_simplicial_map, validate_sset, DEFAULT_BUDGET};

    fn counts(n: &Nerve) -> Vec<usize> {
        (0..=TOP_DIM).map(|k| n.sset.count(k)).collect()
    }

    #[test]
    fn point_nerve_has_one_simplex_per_dimension() {
        assert_eq!(counts(point()), vec![1; 5]);
    }

    #[test]
    fn classifying_space_counts() {
        let n = nerve(&delooping(2)).unwrap();
        // Strings of group elements: 2^k simplices in dimension k.
        assert_eq!(counts(&n), vec![1, 2, 4, 8, 16]);
        assert_eq!(n.sset.nondegenerate(2).len(), 1);
        let t = n.triangles[n.sset.nondegenerate(2)[0]];
        assert_eq!((n.gray.name1(t.f01), n.gray.name1(t.f12), n.gray.name1(t.f02)), ("s".into(), "s".into(), "e".into()));
    }

    #[test]
    fn double_suspension_threes_are_the_group() {
        let n = nerve(&double_suspension(3)).unwrap();
        assert_eq!(&counts(&n)[..4], &[1, 1, 1, 3]);
        let xs: Vec<usize> = n.tetrahedra.iter().map(|t| t.x).collect();
        assert_eq!(xs, vec![0, 1, 2]);
        // Faces X_1234 … X_0123 obey x3 + x1 = x0 + x2 + x4 in Z/3.
        assert_eq!(n.sset.count(4), 81);
    }

    #[test]
    fn nerves_satisfy_simplicial_identities() {
        for (name, g) in groupoid_corpus() {
            let n = nerve(&g).unwrap();
            let r = validate_sset(&n.sset).unwrap();
            assert!(r.is_valid(), "{name}: {r}");
        }
    }

    #[test]
    fn non_groupoids_are_rejected() {
        assert!(matches!(nerve(&gray_named("2_arrow")), Err(Error::Precondition(_))));
    }

    #[test]
    fn nerves_are_kan() {
        for (name, g) in groupoid_corpus() {
            let n = nerve(&g).unwrap();
            let r = kan_check_nerve(&n, 4, DEFAULT_BUDGET).unwrap();
            assert!(r.holds(), "{name}: {:?}", r.unfillable);
            assert!(kan_check(&n.sset, 4, DEFAULT_BUDGET).unwrap().holds(), "{name}");
        }
    }

    #[test]
    fn one_dimensional_horn_uses_identity() {
        let n = nerve(&delooping(2)).unwrap();
        for r in 0..2 {
            let mut faces = vec![Some(0), Some(0)];
            faces[r] = None;
            let f = horn_filler(&n, &Horn::new(1, r, faces)).unwrap();
            assert_eq!(f, n.gray.id1[0]);
        }
    }

    #[test]
    fn outer_triangle_horn_divides() {
        let g = delooping(3);
        let n = nerve(&g).unwrap();
        let ix = |s: &str| g.cells1.iter().position(|c| c.name == s).unwrap();
        for gname in ["e", "r1", "r2"] {
            for uname in ["e", "r1", "r2"] {
                let (gg, u) = (ix(gname), ix(uname));
                let h = Horn::new(2, 0, vec![None, Some(u), Some(gg)]);
                let t = n.triangles[horn_filler(&n, &h).unwrap()];
                assert_eq!(g.c1(t.f12, gg), u, "w·g = u");
                assert_eq!(t.f12, g.c1(u, n.inverse1(gg)));
                let h2 = Horn::new(2, 2, vec![Some(gg), Some(u), None]);
                let t2 = n.triangles[horn_filler(&n, &h2).unwrap()];
                assert_eq!(g.c1(gg, t2.f01), u);
            }
        }
    }

    #[test]
    fn degenerate_horns_fill_with_degeneracies() {
        let n = nerve(&double_suspension(3)).unwrap();
        for k in 2..=4 {
            let deg = n.sset.degenerate(k);
            for r in 0..=k {
                let mut faces = vec![Some(0); k + 1];
                faces[r] = None;
                let f = horn_filler(&n, &Horn::new(k, r, faces)).unwrap();
                if k < 4 {
                    assert!(deg[f], "Λ^{r}[{k}] filler {f}");
                }
            }
        }
    }

    #[test]
    fn fillers_reattach_exactly() {
        let n = nerve(&gray_named("C*(C(z2))")).unwrap();
        let mut b = Budget::unlimited("test");
        let mut seen = 0;
        for_each_horn(&n.sset, 4, &mut b, &mut |h| {
            let f = horn_filler(&n, h)?;
            for i in (0..=h.n).filter(|&i| i != h.r) {
                assert_eq!(Some(n.sset.faces[h.n][f][i]), h.faces[i]);
            }
            seen += 1;
            Ok(true)
        })
        .unwrap();
        assert!(seen > 1000);
    }

    #[test]
    fn nerve_maps_are_simplicial() {
        let m = morphism_named("B(Z/4)->B(Z/2)");
        let (a, b) = (nerve(&m.dom).unwrap(), nerve(&m.cod).unwrap());
        let phi = nerve_map(&m.f, &a, &b).unwrap();
        assert!(validate_simplicial_map(&phi, &a.sset, &b.sset).unwrap().is_valid());
        assert!(fibration_horn_squares(&a, &b, &m.f, 4, DEFAULT_BUDGET).unwrap().holds());
    }

    #[test]
    fn non_fibration_fails_a_square() {
        let m = morphism_named("B(Z/2)->B(Z/4)");
        let (a, b) = (nerve(&m.dom).unwrap(), nerve(&m.cod).unwrap());
        let r = fibration_horn_squares(&a, &b, &m.f, 4, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.failure.unwrap().0, 1);
    }

    #[test]
    fn lift_horn_rejects_mismatched_target() {
        let m = morphism_named("B(Z/4)->B(Z/2)");
        let (a, b) = (nerve(&m.dom).unwrap(), nerve(&m.cod).unwrap());
        let s = b.gray.cells1.iter().position(|c| c.name == "s").unwrap();
        let e = b.gray.id1[0];
        // Horn at the identity 1-cell, target 2-simplex with d₂ = s.
        let target = b.triangle_index(&Triangle { f01: s, f12: s, f02: e, alpha: b.gray.id2[e] }).unwrap();
        let h = Horn::new(2, 1, vec![Some(a.gray.id1[0]), None, Some(a.gray.id1[0])]);
        assert!(matches!(lift_horn(&a, &b, &m.f, &h, target), Err(Error::Precondition(_))));
    }

    #[test]
    fn presentation_of_simplices() {
        let p = pi3_presentation(&delta(0).unwrap()).unwrap();
        assert!(p.ones.is_empty() && p.twos.is_empty());
        let p = pi3_presentation(&delta(1).unwrap()).unwrap();
        assert_eq!(p.ones.len(), 2);
        assert!(p.ones[1].inverse);
        assert!(p.twos.is_empty());
    }

    #[test]
    fn presentation_of_classifying_space() {
        let n = nerve(&delooping(2)).unwrap();
        let p = pi3_presentation(&n.sset).unwrap();
        let names: Vec<&str> = p.ones.iter().map(|g| g.name.as_str()).collect();
        assert_eq!(names, vec!["[s]", "[s]^-1"]);
        assert_eq!(p.twos.len(), 1);
        assert_eq!(p.twos[0].source, vec![0, 0]);
        assert!(p.twos[0].target.is_empty());
        assert_eq!(p.threes.len(), 8);
        assert_eq!(p.relations.len(), 16);
    }

    #[test]
    fn counit_evaluates_words() {
        let n = nerve(&delooping(2)).unwrap();
        let p = pi3_presentation(&n.sset).unwrap();
        let c = Counit::new(&n, &p);
        let e = n.gray.id1[0];
        assert_eq!(counit_eval(&n, &p, &PWord::One { obj: 0, letters: vec![0, 0] }).unwrap(), (1, e));
        assert_eq!(c.eval1(0, &[]).unwrap(), e);
        let s = p.ones[0].simplex;
        assert_eq!(c.eval1(0, &[1]).unwrap(), n.inverse1(s));
        assert!(c.eval1(0, &[7]).is_err());
    }

    #[test]
    fn formal_inverse_is_forced_to_the_actual_one() {
        let n = nerve(&delooping(3)).unwrap();
        let p = pi3_presentation(&n.sset).unwrap();
        let w = normalize(&n, &p, &[1], 4).unwrap();
        assert_eq!(w.steps.len(), 1);
        let end = p.word2_target(&w).unwrap();
        assert_eq!(end.len(), 1);
        assert!(!p.ones[end[0]].inverse);
        assert_eq!(p.ones[end[0]].simplex, n.inverse1(p.ones[0].simplex));
    }

    #[test]
    fn spotcheck_passes_on_the_corpus() {
        let r = counit_spotcheck(&nerve(&delooping(2)).unwrap(), 3).unwrap();
        assert!(r.holds(), "{:?}", r.failures);
        assert!(r.words > 4 && r.relations == 16);
        let r = counit_spotcheck(&nerve(&double_suspension(3)).unwrap(), 2).unwrap();
        assert!(r.holds(), "{:?}", r.failures);
        assert_eq!((r.threes, r.pairs), (3, 9));
        for (name, g) in groupoid_corpus() {
            let r = counit_spotcheck(&nerve(&g).unwrap(), 2).unwrap();
            assert!(r.holds(), "{name}: {:?}", r.failures);
        }
    }
}

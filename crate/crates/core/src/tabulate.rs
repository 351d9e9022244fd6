//! Building tabulated Gray-categories from cell-level descriptions.

use std::collections::BTreeMap;

use crate::cell::{Cell, Table};
use crate::error::{Error, Result};
use crate::gray::GrayCategory;

/// A Gray-category described by its cells and operations, to be tabulated.
///
/// Cell values need only be unique among cells sharing a boundary.
pub trait GrayModel {
    type O: Ord + Clone;
    type C1: Ord + Clone;
    type C2: Ord + Clone;
    type C3: Ord + Clone;

    fn objects(&self) -> Vec<Self::O>;
    fn cells1(&self, a: &Self::O, b: &Self::O) -> Vec<Self::C1>;
    fn cells2(&self, f: &Self::C1, g: &Self::C1) -> Vec<Self::C2>;
    fn cells3(&self, a: &Self::C2, b: &Self::C2) -> Vec<Self::C3>;

    fn id1(&self, a: &Self::O) -> Self::C1;
    fn id2(&self, f: &Self::C1) -> Self::C2;
    fn id3(&self, a: &Self::C2) -> Self::C3;
    fn comp1(&self, g: &Self::C1, f: &Self::C1) -> Self::C1;
    fn comp2(&self, b: &Self::C2, a: &Self::C2) -> Self::C2;
    fn comp3(&self, y: &Self::C3, x: &Self::C3) -> Self::C3;
    fn lw2(&self, g: &Self::C1, a: &Self::C2) -> Self::C2;
    fn rw2(&self, a: &Self::C2, f: &Self::C1) -> Self::C2;
    fn lw3(&self, g: &Self::C1, x: &Self::C3) -> Self::C3;
    fn rw3(&self, x: &Self::C3, f: &Self::C1) -> Self::C3;
    fn lw32(&self, b: &Self::C2, x: &Self::C3) -> Self::C3;
    fn rw32(&self, x: &Self::C3, a: &Self::C2) -> Self::C3;
    fn interchanger(&self, b: &Self::C2, a: &Self::C2) -> Self::C3;

    fn name0(&self, a: &Self::O) -> String;
    fn name1(&self, f: &Self::C1) -> String;
    fn name2(&self, a: &Self::C2) -> String;
    fn name3(&self, x: &Self::C3) -> String;
}

/// A tabulated model together with the cell values behind each index.
#[derive(Debug, Clone)]
pub struct Tabulated<M: GrayModel> {
    pub gray: GrayCategory,
    pub o: Vec<M::O>,
    pub c1: Vec<M::C1>,
    pub c2: Vec<M::C2>,
    pub c3: Vec<M::C3>,
    lo: BTreeMap<M::O, usize>,
    l1: BTreeMap<M::C1, Vec<usize>>,
    l2: BTreeMap<M::C2, Vec<usize>>,
    l3: BTreeMap<M::C3, Vec<usize>>,
}

fn pick(cands: Option<&Vec<usize>>, cells: &[Cell], bd: Option<(usize, usize)>) -> Option<usize> {
    let cands = cands?;
    match bd {
        Some((s, t)) => cands.iter().copied().find(|&i| cells[i].src == s && cells[i].tgt == t),
        None if cands.len() == 1 => Some(cands[0]),
        None => None,
    }
}

impl<M: GrayModel> Tabulated<M> {
    pub fn obj(&self, o: &M::O) -> Option<usize> {
        self.lo.get(o).copied()
    }
    /// Index of a 1-cell; `bd` disambiguates values reused across boundaries.
    pub fn idx1(&self, v: &M::C1, bd: Option<(usize, usize)>) -> Option<usize> {
        pick(self.l1.get(v), &self.gray.cells1, bd)
    }
    pub fn idx2(&self, v: &M::C2, bd: Option<(usize, usize)>) -> Option<usize> {
        pick(self.l2.get(v), &self.gray.cells2, bd)
    }
    pub fn idx3(&self, v: &M::C3, bd: Option<(usize, usize)>) -> Option<usize> {
        pick(self.l3.get(v), &self.gray.cells3, bd)
    }
}

fn missing(what: &str, name: String) -> Error {
    Error::Internal(format!("tabulation: {what} `{name}` is not among the enumerated cells"))
}

pub fn tabulate<M: GrayModel>(m: &M) -> Result<Tabulated<M>> {
    let o = m.objects();
    let lo: BTreeMap<M::O, usize> = o.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
    let mut g = GrayCategory { objects: o.iter().map(|x| m.name0(x)).collect(), ..Default::default() };

    let mut c1 = Vec::new();
    let mut l1: BTreeMap<M::C1, Vec<usize>> = BTreeMap::new();
    for (i, a) in o.iter().enumerate() {
        for (j, b) in o.iter().enumerate() {
            for f in m.cells1(a, b) {
                l1.entry(f.clone()).or_default().push(c1.len());
                g.cells1.push(Cell::new(m.name1(&f), i, j));
                c1.push(f);
            }
        }
    }
    let mut c2 = Vec::new();
    let mut l2: BTreeMap<M::C2, Vec<usize>> = BTreeMap::new();
    for i in 0..c1.len() {
        for j in 0..c1.len() {
            if g.cells1[i].src != g.cells1[j].src || g.cells1[i].tgt != g.cells1[j].tgt {
                continue;
            }
            for a in m.cells2(&c1[i], &c1[j]) {
                l2.entry(a.clone()).or_default().push(c2.len());
                g.cells2.push(Cell::new(m.name2(&a), i, j));
                c2.push(a);
            }
        }
    }
    let mut c3 = Vec::new();
    let mut l3: BTreeMap<M::C3, Vec<usize>> = BTreeMap::new();
    for i in 0..c2.len() {
        for j in 0..c2.len() {
            if g.cells2[i].src != g.cells2[j].src || g.cells2[i].tgt != g.cells2[j].tgt {
                continue;
            }
            for x in m.cells3(&c2[i], &c2[j]) {
                l3.entry(x.clone()).or_default().push(c3.len());
                g.cells3.push(Cell::new(m.name3(&x), i, j));
                c3.push(x);
            }
        }
    }
    let mut t = Tabulated { gray: g, o, c1, c2, c3, lo, l1, l2, l3 };

    let mut ids = Vec::new();
    for (i, a) in t.o.iter().enumerate() {
        let v = m.id1(a);
        ids.push(t.idx1(&v, Some((i, i))).ok_or_else(|| missing("identity 1-cell", m.name1(&v)))?);
    }
    t.gray.id1 = ids;
    let mut ids = Vec::new();
    for (i, f) in t.c1.iter().enumerate() {
        let v = m.id2(f);
        ids.push(t.idx2(&v, Some((i, i))).ok_or_else(|| missing("identity 2-cell", m.name2(&v)))?);
    }
    t.gray.id2 = ids;
    let mut ids = Vec::new();
    for (i, a) in t.c2.iter().enumerate() {
        let v = m.id3(a);
        ids.push(t.idx3(&v, Some((i, i))).ok_or_else(|| missing("identity 3-cell", m.name3(&v)))?);
    }
    t.gray.id3 = ids;

    // comp1 first: later boundaries are computed from it
    let mut tab = Table::new();
    for (x, y) in t.gray.keys_comp1() {
        let g = &t.gray;
        let v = m.comp1(&t.c1[x], &t.c1[y]);
        let i = t.idx1(&v, Some((g.cells1[y].src, g.cells1[x].tgt))).ok_or_else(|| missing("1-cell", m.name1(&v)))?;
        tab.insert((x, y), i);
    }
    t.gray.comp1 = tab;

    macro_rules! fill {
        ($field:ident, $keys:ident, $look:ident, $name:ident, |$g:ident, $x:ident, $y:ident| ($val:expr, $bd:expr)) => {{
            let mut tab = Table::new();
            for ($x, $y) in t.gray.$keys() {
                let $g = &t.gray;
                let v = $val;
                let i = t.$look(&v, $bd).ok_or_else(|| missing("cell", m.$name(&v)))?;
                tab.insert(($x, $y), i);
            }
            t.gray.$field = tab;
        }};
    }
    fill!(comp2, keys_comp2, idx2, name2, |g, b, a| (m.comp2(&t.c2[b], &t.c2[a]), Some((g.src2(a), g.tgt2(b)))));
    fill!(lw2, keys_lw2, idx2, name2, |g, h, a| (
        m.lw2(&t.c1[h], &t.c2[a]),
        Some((g.c1(h, g.src2(a)), g.c1(h, g.tgt2(a))))
    ));
    fill!(rw2, keys_rw2, idx2, name2, |g, a, h| (
        m.rw2(&t.c2[a], &t.c1[h]),
        Some((g.c1(g.src2(a), h), g.c1(g.tgt2(a), h)))
    ));
    fill!(comp3, keys_comp3, idx3, name3, |g, y, x| (m.comp3(&t.c3[y], &t.c3[x]), Some((g.src3(x), g.tgt3(y)))));
    fill!(lw3, keys_lw3, idx3, name3, |g, h, x| (
        m.lw3(&t.c1[h], &t.c3[x]),
        Some((g.lw2(h, g.src3(x)), g.lw2(h, g.tgt3(x))))
    ));
    fill!(rw3, keys_rw3, idx3, name3, |g, x, h| (
        m.rw3(&t.c3[x], &t.c1[h]),
        Some((g.rw2(g.src3(x), h), g.rw2(g.tgt3(x), h)))
    ));
    fill!(lw32, keys_lw32, idx3, name3, |g, b, x| (
        m.lw32(&t.c2[b], &t.c3[x]),
        Some((g.c2(b, g.src3(x)), g.c2(b, g.tgt3(x))))
    ));
    fill!(rw32, keys_rw32, idx3, name3, |g, x, a| (
        m.rw32(&t.c3[x], &t.c2[a]),
        Some((g.c2(g.src3(x), a), g.c2(g.tgt3(x), a)))
    ));
    fill!(interchanger, keys_interchanger, idx3, name3, |g, b, a| (
        m.interchanger(&t.c2[b], &t.c2[a]),
        g.interchanger_boundary(b, a)
    ));
    Ok(t)
}

/// Reads an existing Gray-category as a model, so that constructions
/// written against [`GrayModel`] can be composed.
impl GrayModel for GrayCategory {
    type O = usize;
    type C1 = usize;
    type C2 = usize;
    type C3 = usize;

    fn objects(&self) -> Vec<usize> {
        (0..self.objects.len()).collect()
    }
    fn cells1(&self, a: &usize, b: &usize) -> Vec<usize> {
        self.hom1(*a, *b)
    }
    fn cells2(&self, f: &usize, g: &usize) -> Vec<usize> {
        self.hom2(*f, *g)
    }
    fn cells3(&self, a: &usize, b: &usize) -> Vec<usize> {
        self.hom3(*a, *b)
    }
    fn id1(&self, a: &usize) -> usize {
        self.id1[*a]
    }
    fn id2(&self, f: &usize) -> usize {
        self.id2[*f]
    }
    fn id3(&self, a: &usize) -> usize {
        self.id3[*a]
    }
    fn comp1(&self, g: &usize, f: &usize) -> usize {
        self.c1(*g, *f)
    }
    fn comp2(&self, b: &usize, a: &usize) -> usize {
        self.c2(*b, *a)
    }
    fn comp3(&self, y: &usize, x: &usize) -> usize {
        self.c3(*y, *x)
    }
    fn lw2(&self, g: &usize, a: &usize) -> usize {
        GrayCategory::lw2(self, *g, *a)
    }
    fn rw2(&self, a: &usize, f: &usize) -> usize {
        GrayCategory::rw2(self, *a, *f)
    }
    fn lw3(&self, g: &usize, x: &usize) -> usize {
        GrayCategory::lw3(self, *g, *x)
    }
    fn rw3(&self, x: &usize, f: &usize) -> usize {
        GrayCategory::rw3(self, *x, *f)
    }
    fn lw32(&self, b: &usize, x: &usize) -> usize {
        GrayCategory::lw32(self, *b, *x)
    }
    fn rw32(&self, x: &usize, a: &usize) -> usize {
        GrayCategory::rw32(self, *x, *a)
    }
    fn interchanger(&self, b: &usize, a: &usize) -> usize {
        self.ich(*b, *a)
    }
    fn name0(&self, a: &usize) -> String {
        self.objects[*a].clone()
    }
    fn name1(&self, f: &usize) -> String {
        GrayCategory::name1(self, *f)
    }
    fn name2(&self, a: &usize) -> String {
        GrayCategory::name2(self, *a)
    }
    fn name3(&self, x: &usize) -> String {
        GrayCategory::name3(self, *x)
    }
}

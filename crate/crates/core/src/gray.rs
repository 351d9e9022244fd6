//! Finite Gray-categories and Gray-functors.
//!
//! Interchangers are oriented `β_α : (βf′)·(gα) ⇛ (g′α)·(βf)` for
//! `α : f ⇒ f′` in hom(A,B) and `β : g ⇒ g′` in hom(B,C).

use std::collections::BTreeMap;

use crate::cell::{check_cells, check_table, check_vec, parallel_index, Cell, Table};
use crate::error::StructuralError;
use crate::report::ValidationReport;
use crate::sesqui::{validate_two_category, Sesquicategory, TwoCategory};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GrayCategory {
    pub objects: Vec<String>,
    pub cells1: Vec<Cell>,
    pub cells2: Vec<Cell>,
    pub cells3: Vec<Cell>,
    pub id1: Vec<usize>,
    /// Identity 2-cell of each 1-cell.
    pub id2: Vec<usize>,
    /// Identity 3-cell of each 2-cell.
    pub id3: Vec<usize>,
    /// `(g, f) -> gf`.
    pub comp1: Table,
    /// `(β, α) -> β·α`, α first.
    pub comp2: Table,
    /// `(Y, X) -> Y∘X`, X first.
    pub comp3: Table,
    /// `(g, α) -> gα`.
    pub lw2: Table,
    /// `(α, f) -> αf`.
    pub rw2: Table,
    /// `(g, X) -> gX`.
    pub lw3: Table,
    /// `(X, f) -> Xf`.
    pub rw3: Table,
    /// `(β, X) -> β·X`, vertical whiskering of a 3-cell by a later 2-cell.
    pub lw32: Table,
    /// `(X, α) -> X·α`, vertical whiskering of a 3-cell by an earlier 2-cell.
    pub rw32: Table,
    /// `(β, α) -> β_α`.
    pub interchanger: Table,
}

/// Parallel-cell lookup for a Gray-category.
#[derive(Debug, Clone, Default)]
pub struct GrayIndex {
    pub hom1: BTreeMap<(usize, usize), Vec<usize>>,
    pub hom2: BTreeMap<(usize, usize), Vec<usize>>,
    pub hom3: BTreeMap<(usize, usize), Vec<usize>>,
}

impl GrayIndex {
    pub fn new(g: &GrayCategory) -> Self {
        Self { hom1: parallel_index(&g.cells1), hom2: parallel_index(&g.cells2), hom3: parallel_index(&g.cells3) }
    }
    pub fn hom1(&self, a: usize, b: usize) -> &[usize] {
        self.hom1.get(&(a, b)).map_or(&[], |v| v)
    }
    pub fn hom2(&self, f: usize, g: usize) -> &[usize] {
        self.hom2.get(&(f, g)).map_or(&[], |v| v)
    }
    pub fn hom3(&self, a: usize, b: usize) -> &[usize] {
        self.hom3.get(&(a, b)).map_or(&[], |v| v)
    }
}

fn get(t: &Table, k: (usize, usize)) -> Option<usize> {
    t.get(&k).copied()
}

/// Accessors panic on missing entries: they are meant for validated input.
impl GrayCategory {
    pub fn src1(&self, f: usize) -> usize {
        self.cells1[f].src
    }
    pub fn tgt1(&self, f: usize) -> usize {
        self.cells1[f].tgt
    }
    pub fn src2(&self, a: usize) -> usize {
        self.cells2[a].src
    }
    pub fn tgt2(&self, a: usize) -> usize {
        self.cells2[a].tgt
    }
    pub fn src3(&self, x: usize) -> usize {
        self.cells3[x].src
    }
    pub fn tgt3(&self, x: usize) -> usize {
        self.cells3[x].tgt
    }
    /// Endpoint objects of a 2-cell.
    pub fn ends2(&self, a: usize) -> (usize, usize) {
        let f = self.src2(a);
        (self.src1(f), self.tgt1(f))
    }
    /// Endpoint objects of a 3-cell.
    pub fn ends3(&self, x: usize) -> (usize, usize) {
        self.ends2(self.src3(x))
    }
    /// Boundary 1-cells of a 3-cell.
    pub fn bound3(&self, x: usize) -> (usize, usize) {
        let a = self.src3(x);
        (self.src2(a), self.tgt2(a))
    }

    pub fn c1(&self, g: usize, f: usize) -> usize {
        self.comp1[&(g, f)]
    }
    pub fn c2(&self, b: usize, a: usize) -> usize {
        self.comp2[&(b, a)]
    }
    pub fn c3(&self, y: usize, x: usize) -> usize {
        self.comp3[&(y, x)]
    }
    pub fn lw2(&self, g: usize, a: usize) -> usize {
        self.lw2[&(g, a)]
    }
    pub fn rw2(&self, a: usize, f: usize) -> usize {
        self.rw2[&(a, f)]
    }
    pub fn lw3(&self, g: usize, x: usize) -> usize {
        self.lw3[&(g, x)]
    }
    pub fn rw3(&self, x: usize, f: usize) -> usize {
        self.rw3[&(x, f)]
    }
    pub fn lw32(&self, b: usize, x: usize) -> usize {
        self.lw32[&(b, x)]
    }
    pub fn rw32(&self, x: usize, a: usize) -> usize {
        self.rw32[&(x, a)]
    }
    pub fn ich(&self, b: usize, a: usize) -> usize {
        self.interchanger[&(b, a)]
    }

    /// Composite of a sequence of 1-cells, listed last-first (`[h, g, f]` is hgf).
    pub fn c1s(&self, fs: &[usize]) -> usize {
        let mut it = fs.iter().rev();
        let first = *it.next().expect("nonempty path");
        it.fold(first, |acc, &g| self.c1(g, acc))
    }
    /// Vertical composite of 2-cells listed last-first.
    pub fn c2s(&self, xs: &[usize]) -> usize {
        let mut it = xs.iter().rev();
        let first = *it.next().expect("nonempty path");
        it.fold(first, |acc, &b| self.c2(b, acc))
    }
    /// Composite of 3-cells listed last-first.
    pub fn c3s(&self, xs: &[usize]) -> usize {
        let mut it = xs.iter().rev();
        let first = *it.next().expect("nonempty path");
        it.fold(first, |acc, &y| self.c3(y, acc))
    }
    /// 2-cell `g α f`.
    pub fn w2(&self, g: usize, a: usize, f: usize) -> usize {
        self.lw2(g, self.rw2(a, f))
    }
    /// 3-cell `g X f`.
    pub fn w3(&self, g: usize, x: usize, f: usize) -> usize {
        self.lw3(g, self.rw3(x, f))
    }

    pub fn name1(&self, f: usize) -> String {
        self.cells1.get(f).map_or_else(|| format!("#{f}"), |c| c.name.clone())
    }
    pub fn name2(&self, a: usize) -> String {
        self.cells2.get(a).map_or_else(|| format!("#{a}"), |c| c.name.clone())
    }
    pub fn name3(&self, x: usize) -> String {
        self.cells3.get(x).map_or_else(|| format!("#{x}"), |c| c.name.clone())
    }

    pub fn index(&self) -> GrayIndex {
        GrayIndex::new(self)
    }

    pub fn hom1(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.cells1.len()).filter(|&f| self.src1(f) == a && self.tgt1(f) == b).collect()
    }
    pub fn hom2(&self, f: usize, g: usize) -> Vec<usize> {
        (0..self.cells2.len()).filter(|&x| self.src2(x) == f && self.tgt2(x) == g).collect()
    }
    pub fn hom3(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.cells3.len()).filter(|&x| self.src3(x) == a && self.tgt3(x) == b).collect()
    }

    pub fn is_id1(&self, f: usize) -> bool {
        self.id1[self.src1(f)] == f
    }
    pub fn is_id2(&self, a: usize) -> bool {
        self.id2[self.src2(a)] == a
    }
    pub fn is_id3(&self, x: usize) -> bool {
        self.id3[self.src3(x)] == x
    }

    pub fn inverse1(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.src1(f), self.tgt1(f));
        (0..self.cells1.len()).find(|&g| {
            self.src1(g) == b && self.tgt1(g) == a && self.c1(g, f) == self.id1[a] && self.c1(f, g) == self.id1[b]
        })
    }
    pub fn inverse2(&self, x: usize) -> Option<usize> {
        let (f, g) = (self.src2(x), self.tgt2(x));
        (0..self.cells2.len()).find(|&y| {
            self.src2(y) == g && self.tgt2(y) == f && self.c2(y, x) == self.id2[f] && self.c2(x, y) == self.id2[g]
        })
    }
    pub fn inverse3(&self, x: usize) -> Option<usize> {
        let (a, b) = (self.src3(x), self.tgt3(x));
        (0..self.cells3.len()).find(|&y| {
            self.src3(y) == b && self.tgt3(y) == a && self.c3(y, x) == self.id3[a] && self.c3(x, y) == self.id3[b]
        })
    }

    /// Boundary `((βf′)·(gα), (g′α)·(βf))` of the interchanger at `(β, α)`.
    pub fn interchanger_boundary(&self, b: usize, a: usize) -> Option<(usize, usize)> {
        let (f, f2) = (self.src2(a), self.tgt2(a));
        let (g, g2) = (self.src2(b), self.tgt2(b));
        let l = get(&self.comp2, (get(&self.rw2, (b, f2))?, get(&self.lw2, (g, a))?))?;
        let r = get(&self.comp2, (get(&self.lw2, (g2, a))?, get(&self.rw2, (b, f))?))?;
        Some((l, r))
    }

    pub fn underlying_sesquicategory(&self) -> Sesquicategory {
        Sesquicategory {
            objects: self.objects.clone(),
            cells1: self.cells1.clone(),
            cells2: self.cells2.clone(),
            id1: self.id1.clone(),
            id2: self.id2.clone(),
            comp1: self.comp1.clone(),
            comp2: self.comp2.clone(),
            lwhisk: self.lw2.clone(),
            rwhisk: self.rw2.clone(),
        }
    }

    pub fn keys_comp1(&self) -> Vec<(usize, usize)> {
        pairs(self.cells1.len(), self.cells1.len(), |g, f| self.src1(g) == self.tgt1(f))
    }
    pub fn keys_comp2(&self) -> Vec<(usize, usize)> {
        pairs(self.cells2.len(), self.cells2.len(), |b, a| self.src2(b) == self.tgt2(a))
    }
    pub fn keys_comp3(&self) -> Vec<(usize, usize)> {
        pairs(self.cells3.len(), self.cells3.len(), |y, x| self.src3(y) == self.tgt3(x))
    }
    pub fn keys_lw2(&self) -> Vec<(usize, usize)> {
        pairs(self.cells1.len(), self.cells2.len(), |g, a| self.src1(g) == self.ends2(a).1)
    }
    pub fn keys_rw2(&self) -> Vec<(usize, usize)> {
        pairs(self.cells2.len(), self.cells1.len(), |a, f| self.ends2(a).0 == self.tgt1(f))
    }
    pub fn keys_lw3(&self) -> Vec<(usize, usize)> {
        pairs(self.cells1.len(), self.cells3.len(), |g, x| self.src1(g) == self.ends3(x).1)
    }
    pub fn keys_rw3(&self) -> Vec<(usize, usize)> {
        pairs(self.cells3.len(), self.cells1.len(), |x, f| self.ends3(x).0 == self.tgt1(f))
    }
    pub fn keys_lw32(&self) -> Vec<(usize, usize)> {
        pairs(self.cells2.len(), self.cells3.len(), |b, x| self.src2(b) == self.tgt2(self.src3(x)))
    }
    pub fn keys_rw32(&self) -> Vec<(usize, usize)> {
        pairs(self.cells3.len(), self.cells2.len(), |x, a| self.src2(self.src3(x)) == self.tgt2(a))
    }
    pub fn keys_interchanger(&self) -> Vec<(usize, usize)> {
        pairs(self.cells2.len(), self.cells2.len(), |b, a| self.ends2(b).0 == self.ends2(a).1)
    }

    pub fn check_structure(&self) -> Result<(), StructuralError> {
        let (n0, n1, n2, n3) = (self.objects.len(), self.cells1.len(), self.cells2.len(), self.cells3.len());
        check_cells("cells1", &self.cells1, n0, "object")?;
        check_cells("cells2", &self.cells2, n1, "1-cell")?;
        check_cells("cells3", &self.cells3, n2, "2-cell")?;
        check_vec("id1", &self.id1, n0, n1, "1-cell")?;
        check_vec("id2", &self.id2, n1, n2, "2-cell")?;
        check_vec("id3", &self.id3, n2, n3, "3-cell")?;
        let (c1, c2, c3) = ("1-cell", "2-cell", "3-cell");
        check_table("comp1", &self.comp1, self.keys_comp1(), (n1, n1, n1), (c1, c1, c1))?;
        check_table("comp2", &self.comp2, self.keys_comp2(), (n2, n2, n2), (c2, c2, c2))?;
        check_table("comp3", &self.comp3, self.keys_comp3(), (n3, n3, n3), (c3, c3, c3))?;
        check_table("lw2", &self.lw2, self.keys_lw2(), (n1, n2, n2), (c1, c2, c2))?;
        check_table("rw2", &self.rw2, self.keys_rw2(), (n2, n1, n2), (c2, c1, c2))?;
        check_table("lw3", &self.lw3, self.keys_lw3(), (n1, n3, n3), (c1, c3, c3))?;
        check_table("rw3", &self.rw3, self.keys_rw3(), (n3, n1, n3), (c3, c1, c3))?;
        check_table("lw32", &self.lw32, self.keys_lw32(), (n2, n3, n3), (c2, c3, c3))?;
        check_table("rw32", &self.rw32, self.keys_rw32(), (n3, n2, n3), (c3, c2, c3))?;
        check_table("interchanger", &self.interchanger, self.keys_interchanger(), (n2, n2, n3), (c2, c2, c3))?;
        Ok(())
    }

    /// The hom 2-category between two objects.
    pub fn hom(&self, a: usize, b: usize) -> HomView {
        HomView::new(self, a, b)
    }

    /// All hom 2-categories, keyed by object pair.
    pub fn homs(&self) -> BTreeMap<(usize, usize), HomView> {
        let n = self.objects.len();
        let mut m = BTreeMap::new();
        for a in 0..n {
            for b in 0..n {
                m.insert((a, b), self.hom(a, b));
            }
        }
        m
    }
}

pub(crate) fn pairs(n: usize, m: usize, ok: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 0..n {
        for j in 0..m {
            if ok(i, j) {
                v.push((i, j));
            }
        }
    }
    v
}

/// A hom of a Gray-category as a 2-category, with the maps between local and global indices.
#[derive(Debug, Clone)]
pub struct HomView {
    pub a: usize,
    pub b: usize,
    pub two: TwoCategory,
    /// Local object -> global 1-cell.
    pub g1: Vec<usize>,
    /// Local 1-cell -> global 2-cell.
    pub g2: Vec<usize>,
    /// Local 2-cell -> global 3-cell.
    pub g3: Vec<usize>,
    pub l1: BTreeMap<usize, usize>,
    pub l2: BTreeMap<usize, usize>,
    pub l3: BTreeMap<usize, usize>,
}

impl HomView {
    /// Requires a well-typed Gray-category.
    pub fn new(g: &GrayCategory, a: usize, b: usize) -> Self {
        let g1: Vec<usize> = g.hom1(a, b);
        let l1: BTreeMap<usize, usize> = g1.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let g2: Vec<usize> = (0..g.cells2.len()).filter(|&x| l1.contains_key(&g.src2(x))).collect();
        let l2: BTreeMap<usize, usize> = g2.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let g3: Vec<usize> = (0..g.cells3.len()).filter(|&x| l2.contains_key(&g.src3(x))).collect();
        let l3: BTreeMap<usize, usize> = g3.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let cell = |c: &Cell, l: &BTreeMap<usize, usize>| Cell::new(c.name.clone(), l[&c.src], l[&c.tgt]);
        let remap = |t: &Table, lk0: &BTreeMap<usize, usize>, lk1: &BTreeMap<usize, usize>, lv: &BTreeMap<usize, usize>| {
            t.iter()
                .filter_map(|(&(x, y), &v)| Some(((*lk0.get(&x)?, *lk1.get(&y)?), *lv.get(&v)?)))
                .collect::<Table>()
        };
        let s = Sesquicategory {
            objects: g1.iter().map(|&f| g.name1(f)).collect(),
            cells1: g2.iter().map(|&x| cell(&g.cells2[x], &l1)).collect(),
            cells2: g3.iter().map(|&x| cell(&g.cells3[x], &l2)).collect(),
            id1: g1.iter().map(|&f| l2[&g.id2[f]]).collect(),
            id2: g2.iter().map(|&x| l3[&g.id3[x]]).collect(),
            comp1: remap(&g.comp2, &l2, &l2, &l2),
            comp2: remap(&g.comp3, &l3, &l3, &l3),
            lwhisk: remap(&g.lw32, &l2, &l3, &l3),
            rwhisk: remap(&g.rw32, &l3, &l2, &l3),
        };
        HomView { a, b, two: TwoCategory(s), g1, g2, g3, l1, l2, l3 }
    }
}

macro_rules! try_some {
    ($e:expr) => {
        (|| -> Option<usize> { Some($e) })()
    };
}

/// Checks every Gray-category axiom. Typing is checked first; the remaining
/// axioms are only evaluated on well-typed data.
pub fn validate_gray_category(g: &GrayCategory) -> Result<ValidationReport, StructuralError> {
    g.check_structure()?;
    let mut r = typing_report(g);
    if !r.is_valid() {
        return Ok(r);
    }
    let n1 = |f: usize| g.name1(f);
    let n2 = |a: usize| g.name2(a);
    let n3 = |x: usize| g.name3(x);

    // homs are 2-categories
    for ((a, b), h) in g.homs() {
        let hr = validate_two_category(&h.two)?;
        for v in hr.violations {
            let mut cells = vec![format!("hom({},{})", g.objects[a], g.objects[b])];
            cells.extend(v.cells);
            r.push(v.axiom, cells);
        }
    }

    // 1-cells form a category
    for f in 0..g.cells1.len() {
        r.check(get(&g.comp1, (f, g.id1[g.src1(f)])) == Some(f), "comp1-right-unit", || vec![n1(f)]);
        r.check(get(&g.comp1, (g.id1[g.tgt1(f)], f)) == Some(f), "comp1-left-unit", || vec![n1(f)]);
    }
    for &(k, f) in &g.keys_comp1() {
        for h in 0..g.cells1.len() {
            if g.src1(h) == g.tgt1(k) {
                let l = try_some!(get(&g.comp1, (h, get(&g.comp1, (k, f))?))?);
                let rr = try_some!(get(&g.comp1, (get(&g.comp1, (h, k))?, f))?);
                r.check(l.is_some() && l == rr, "comp1-associativity", || vec![n1(h), n1(k), n1(f)]);
            }
        }
    }

    whisker_axioms(g, &mut r, 2);
    whisker_axioms(g, &mut r, 3);

    // whiskering by 1-cells is a 2-functor on homs
    for &(h, x) in &g.keys_lw3() {
        for &(b, xx) in &g.keys_lw32() {
            if xx != x {
                continue;
            }
            let l = try_some!(get(&g.lw3, (h, get(&g.lw32, (b, x))?))?);
            let rr = try_some!(get(&g.lw32, (get(&g.lw2, (h, b))?, get(&g.lw3, (h, x))?))?);
            r.check(l.is_some() && l == rr, "lw3-lw32", || vec![n1(h), n2(b), n3(x)]);
        }
        for &(xx, c) in &g.keys_rw32() {
            if xx != x {
                continue;
            }
            let l = try_some!(get(&g.lw3, (h, get(&g.rw32, (x, c))?))?);
            let rr = try_some!(get(&g.rw32, (get(&g.lw3, (h, x))?, get(&g.lw2, (h, c))?))?);
            r.check(l.is_some() && l == rr, "lw3-rw32", || vec![n1(h), n3(x), n2(c)]);
        }
    }
    for &(x, h) in &g.keys_rw3() {
        for &(b, xx) in &g.keys_lw32() {
            if xx != x {
                continue;
            }
            let l = try_some!(get(&g.rw3, (get(&g.lw32, (b, x))?, h))?);
            let rr = try_some!(get(&g.lw32, (get(&g.rw2, (b, h))?, get(&g.rw3, (x, h))?))?);
            r.check(l.is_some() && l == rr, "rw3-lw32", || vec![n2(b), n3(x), n1(h)]);
        }
        for &(xx, c) in &g.keys_rw32() {
            if xx != x {
                continue;
            }
            let l = try_some!(get(&g.rw3, (get(&g.rw32, (x, c))?, h))?);
            let rr = try_some!(get(&g.rw32, (get(&g.rw3, (x, h))?, get(&g.rw2, (c, h))?))?);
            r.check(l.is_some() && l == rr, "rw3-rw32", || vec![n3(x), n2(c), n1(h)]);
        }
    }

    interchanger_axioms(g, &mut r);
    Ok(r)
}

fn typing_report(g: &GrayCategory) -> ValidationReport {
    let mut r = ValidationReport::new();
    let n1 = |f: usize| g.name1(f);
    let n2 = |a: usize| g.name2(a);
    let n3 = |x: usize| g.name3(x);
    for (a, &i) in g.id1.iter().enumerate() {
        r.check(g.src1(i) == a && g.tgt1(i) == a, "id1-typing", || vec![g.objects[a].clone()]);
    }
    for (f, &i) in g.id2.iter().enumerate() {
        r.check(g.src2(i) == f && g.tgt2(i) == f, "id2-typing", || vec![n1(f)]);
    }
    for (a, &i) in g.id3.iter().enumerate() {
        r.check(g.src3(i) == a && g.tgt3(i) == a, "id3-typing", || vec![n2(a)]);
    }
    for x in 0..g.cells2.len() {
        let (f, h) = (g.src2(x), g.tgt2(x));
        r.check(g.src1(f) == g.src1(h) && g.tgt1(f) == g.tgt1(h), "globularity-2", || vec![n2(x)]);
    }
    for x in 0..g.cells3.len() {
        let (a, b) = (g.src3(x), g.tgt3(x));
        r.check(g.src2(a) == g.src2(b) && g.tgt2(a) == g.tgt2(b), "globularity-3", || vec![n3(x)]);
    }
    for (&(k, f), &h) in &g.comp1 {
        r.check(g.src1(h) == g.src1(f) && g.tgt1(h) == g.tgt1(k), "comp1-typing", || vec![n1(k), n1(f)]);
    }
    for (&(b, a), &c) in &g.comp2 {
        r.check(g.src2(c) == g.src2(a) && g.tgt2(c) == g.tgt2(b), "comp2-typing", || vec![n2(b), n2(a)]);
    }
    for (&(y, x), &z) in &g.comp3 {
        r.check(g.src3(z) == g.src3(x) && g.tgt3(z) == g.tgt3(y), "comp3-typing", || vec![n3(y), n3(x)]);
    }
    for (&(h, a), &c) in &g.lw2 {
        let ok = get(&g.comp1, (h, g.src2(a))) == Some(g.src2(c)) && get(&g.comp1, (h, g.tgt2(a))) == Some(g.tgt2(c));
        r.check(ok, "lw2-typing", || vec![n1(h), n2(a)]);
    }
    for (&(a, h), &c) in &g.rw2 {
        let ok = get(&g.comp1, (g.src2(a), h)) == Some(g.src2(c)) && get(&g.comp1, (g.tgt2(a), h)) == Some(g.tgt2(c));
        r.check(ok, "rw2-typing", || vec![n2(a), n1(h)]);
    }
    for (&(h, x), &z) in &g.lw3 {
        let ok = get(&g.lw2, (h, g.src3(x))) == Some(g.src3(z)) && get(&g.lw2, (h, g.tgt3(x))) == Some(g.tgt3(z));
        r.check(ok, "lw3-typing", || vec![n1(h), n3(x)]);
    }
    for (&(x, h), &z) in &g.rw3 {
        let ok = get(&g.rw2, (g.src3(x), h)) == Some(g.src3(z)) && get(&g.rw2, (g.tgt3(x), h)) == Some(g.tgt3(z));
        r.check(ok, "rw3-typing", || vec![n3(x), n1(h)]);
    }
    for (&(b, x), &z) in &g.lw32 {
        let ok = get(&g.comp2, (b, g.src3(x))) == Some(g.src3(z)) && get(&g.comp2, (b, g.tgt3(x))) == Some(g.tgt3(z));
        r.check(ok, "lw32-typing", || vec![n2(b), n3(x)]);
    }
    for (&(x, a), &z) in &g.rw32 {
        let ok = get(&g.comp2, (g.src3(x), a)) == Some(g.src3(z)) && get(&g.comp2, (g.tgt3(x), a)) == Some(g.tgt3(z));
        r.check(ok, "rw32-typing", || vec![n3(x), n2(a)]);
    }
    for (&(b, a), &x) in &g.interchanger {
        let ok = g.interchanger_boundary(b, a) == Some((g.src3(x), g.tgt3(x)));
        r.check(ok, "interchanger-typing", || vec![n2(b), n2(a)]);
    }
    r
}

/// Whiskering of `dim`-cells by 1-cells: functorial in the cell and compatible with comp1.
fn whisker_axioms(g: &GrayCategory, r: &mut ValidationReport, dim: usize) {
    let (cells, comp, ids, lw, rw, ends): (usize, &Table, &Vec<usize>, &Table, &Table, Box<dyn Fn(usize) -> (usize, usize)>) =
        if dim == 2 {
            (g.cells2.len(), &g.comp2, &g.id2, &g.lw2, &g.rw2, Box::new(|a| g.ends2(a)))
        } else {
            (g.cells3.len(), &g.comp3, &g.id3, &g.lw3, &g.rw3, Box::new(|x| g.ends3(x)))
        };
    let (src, tgt): (Box<dyn Fn(usize) -> usize>, Box<dyn Fn(usize) -> usize>) = if dim == 2 {
        (Box::new(|a| g.src2(a)), Box::new(|a| g.tgt2(a)))
    } else {
        (Box::new(|x| g.src3(x)), Box::new(|x| g.tgt3(x)))
    };
    // lower-dimensional composition and whiskering on the boundary cells
    let nm = |x: usize| if dim == 2 { g.name2(x) } else { g.name3(x) };
    let (ax_lf, ax_rf, ax_li, ax_ri, ax_lu, ax_ru, ax_lc, ax_rc, ax_bi) = if dim == 2 {
        ("lw2-functorial", "rw2-functorial", "lw2-identity", "rw2-identity", "lw2-unit", "rw2-unit", "lw2-compose", "rw2-compose", "w2-bimodule")
    } else {
        ("lw3-functorial", "rw3-functorial", "lw3-identity", "rw3-identity", "lw3-unit", "rw3-unit", "lw3-compose", "rw3-compose", "w3-bimodule")
    };
    for x in 0..cells {
        let (a, b) = ends(x);
        for h in 0..g.cells1.len() {
            if g.src1(h) == b {
                // functoriality with respect to the next cell
                for y in 0..cells {
                    if src(y) == tgt(x) {
                        let l = try_some!(get(lw, (h, get(comp, (y, x))?))?);
                        let rr = try_some!(get(comp, (get(lw, (h, y))?, get(lw, (h, x))?))?);
                        r.check(l.is_some() && l == rr, ax_lf, || vec![g.name1(h), nm(y), nm(x)]);
                    }
                }
                if g.id1[b] == h {
                    r.check(get(lw, (h, x)) == Some(x), ax_lu, || vec![g.name1(h), nm(x)]);
                }
                for k in 0..g.cells1.len() {
                    if g.src1(k) == g.tgt1(h) {
                        let l = try_some!(get(lw, (get(&g.comp1, (k, h))?, x))?);
                        let rr = try_some!(get(lw, (k, get(lw, (h, x))?))?);
                        r.check(l.is_some() && l == rr, ax_lc, || vec![g.name1(k), g.name1(h), nm(x)]);
                    }
                }
                for e in 0..g.cells1.len() {
                    if g.tgt1(e) == a {
                        let l = try_some!(get(rw, (get(lw, (h, x))?, e))?);
                        let rr = try_some!(get(lw, (h, get(rw, (x, e))?))?);
                        r.check(l.is_some() && l == rr, ax_bi, || vec![g.name1(h), nm(x), g.name1(e)]);
                    }
                }
            }
            if g.tgt1(h) == a {
                for y in 0..cells {
                    if src(y) == tgt(x) {
                        let l = try_some!(get(rw, (get(comp, (y, x))?, h))?);
                        let rr = try_some!(get(comp, (get(rw, (y, h))?, get(rw, (x, h))?))?);
                        r.check(l.is_some() && l == rr, ax_rf, || vec![nm(y), nm(x), g.name1(h)]);
                    }
                }
                if g.id1[a] == h {
                    r.check(get(rw, (x, h)) == Some(x), ax_ru, || vec![nm(x), g.name1(h)]);
                }
                for e in 0..g.cells1.len() {
                    if g.tgt1(e) == g.src1(h) {
                        let l = try_some!(get(rw, (x, get(&g.comp1, (h, e))?))?);
                        let rr = try_some!(get(rw, (get(rw, (x, h))?, e))?);
                        r.check(l.is_some() && l == rr, ax_rc, || vec![nm(x), g.name1(h), g.name1(e)]);
                    }
                }
            }
        }
    }
    // whiskering an identity cell gives the identity of the whiskered boundary
    let lower = if dim == 2 { g.cells1.len() } else { g.cells2.len() };
    for c in 0..lower {
        let (a, b) = if dim == 2 { (g.src1(c), g.tgt1(c)) } else { g.ends2(c) };
        for h in 0..g.cells1.len() {
            if g.src1(h) == b {
                let l = get(lw, (h, ids[c]));
                let wc = if dim == 2 { get(&g.comp1, (h, c)) } else { get(&g.lw2, (h, c)) };
                let rr = wc.map(|w| ids[w]);
                r.check(l.is_some() && l == rr, ax_li, || vec![g.name1(h), if dim == 2 { g.name1(c) } else { g.name2(c) }]);
            }
            if g.tgt1(h) == a {
                let l = get(rw, (ids[c], h));
                let wc = if dim == 2 { get(&g.comp1, (c, h)) } else { get(&g.rw2, (c, h)) };
                let rr = wc.map(|w| ids[w]);
                r.check(l.is_some() && l == rr, ax_ri, || vec![if dim == 2 { g.name1(c) } else { g.name2(c) }, g.name1(h)]);
            }
        }
    }
}

fn interchanger_axioms(g: &GrayCategory, r: &mut ValidationReport) {
    let n1 = |f: usize| g.name1(f);
    let n2 = |a: usize| g.name2(a);
    let n3 = |x: usize| g.name3(x);
    let keys = g.keys_interchanger();
    let ix = g.index();
    for &(b, a) in &keys {
        let Some(&x) = g.interchanger.get(&(b, a)) else { continue };
        let (f, f2) = (g.src2(a), g.tgt2(a));
        let (h, h2) = (g.src2(b), g.tgt2(b));
        // invertible
        let inv = ix.hom3(g.tgt3(x), g.src3(x)).iter().any(|&y| {
            get(&g.comp3, (y, x)) == Some(g.id3[g.src3(x)]) && get(&g.comp3, (x, y)) == Some(g.id3[g.tgt3(x)])
        });
        r.check(inv, "interchanger-invertible", || vec![n2(b), n2(a)]);

        // naturality in α
        for a1 in 0..g.cells2.len() {
            if g.src2(a1) != f || g.tgt2(a1) != f2 {
                continue;
            }
            for &xx in ix.hom3(a, a1) {
                let l = try_some!(get(
                    &g.comp3,
                    (get(&g.interchanger, (b, a1))?, get(&g.lw32, (get(&g.rw2, (b, f2))?, get(&g.lw3, (h, xx))?))?)
                )?);
                let rr = try_some!(get(&g.comp3, (get(&g.rw32, (get(&g.lw3, (h2, xx))?, get(&g.rw2, (b, f))?))?, x))?);
                r.check(l.is_some() && l == rr, "interchanger-natural-alpha", || vec![n2(b), n3(xx)]);
            }
        }
        // naturality in β
        for b1 in 0..g.cells2.len() {
            if g.src2(b1) != h || g.tgt2(b1) != h2 {
                continue;
            }
            for &yy in ix.hom3(b, b1) {
                let l = try_some!(get(
                    &g.comp3,
                    (get(&g.interchanger, (b1, a))?, get(&g.rw32, (get(&g.rw3, (yy, f2))?, get(&g.lw2, (h, a))?))?)
                )?);
                let rr = try_some!(get(&g.comp3, (get(&g.lw32, (get(&g.lw2, (h2, a))?, get(&g.rw3, (yy, f))?))?, x))?);
                r.check(l.is_some() && l == rr, "interchanger-natural-beta", || vec![n3(yy), n2(a)]);
            }
        }
        // vertical composition in β: (β′β)_α = (β′_α · βf) ∘ (β′f′ · β_α)
        for b2 in 0..g.cells2.len() {
            if g.src2(b2) != h2 {
                continue;
            }
            let l = try_some!(get(&g.interchanger, (get(&g.comp2, (b2, b))?, a))?);
            let rr = try_some!(get(
                &g.comp3,
                (
                    get(&g.rw32, (get(&g.interchanger, (b2, a))?, get(&g.rw2, (b, f))?))?,
                    get(&g.lw32, (get(&g.rw2, (b2, f2))?, x))?
                )
            )?);
            r.check(l.is_some() && l == rr, "interchanger-vertical-beta", || vec![n2(b2), n2(b), n2(a)]);
        }
        // vertical composition in α: β_{α′α} = (g′α′ · β_α) ∘ (β_α′ · gα)
        for a2 in 0..g.cells2.len() {
            if g.src2(a2) != f2 {
                continue;
            }
            let l = try_some!(get(&g.interchanger, (b, get(&g.comp2, (a2, a))?))?);
            let rr = try_some!(get(
                &g.comp3,
                (
                    get(&g.lw32, (get(&g.lw2, (h2, a2))?, x))?,
                    get(&g.rw32, (get(&g.interchanger, (b, a2))?, get(&g.lw2, (h, a))?))?
                )
            )?);
            r.check(l.is_some() && l == rr, "interchanger-vertical-alpha", || vec![n2(b), n2(a2), n2(a)]);
        }
        // compatibility with 1-cell whiskering
        let (oa, _) = g.ends2(a);
        let (_, oc) = g.ends2(b);
        for k in 0..g.cells1.len() {
            if g.src1(k) == oc {
                let l = try_some!(get(&g.interchanger, (get(&g.lw2, (k, b))?, a))?);
                let rr = try_some!(get(&g.lw3, (k, x))?);
                r.check(l.is_some() && l == rr, "interchanger-whisker-left", || vec![n1(k), n2(b), n2(a)]);
            }
            if g.tgt1(k) == oa {
                let l = try_some!(get(&g.interchanger, (b, get(&g.rw2, (a, k))?))?);
                let rr = try_some!(get(&g.rw3, (x, k))?);
                r.check(l.is_some() && l == rr, "interchanger-whisker-right", || vec![n2(b), n2(a), n1(k)]);
            }
        }
    }
    // identities
    for a in 0..g.cells2.len() {
        let (_, ob) = g.ends2(a);
        for k in 0..g.cells1.len() {
            if g.src1(k) == ob {
                let l = get(&g.interchanger, (g.id2[k], a));
                let bd = g.interchanger_boundary(g.id2[k], a);
                let want = bd.map(|(s, _)| g.id3[s]);
                r.check(l.is_some() && l == want, "interchanger-identity-beta", || vec![n1(k), n2(a)]);
            }
        }
    }
    for b in 0..g.cells2.len() {
        let (oa, _) = g.ends2(b);
        for k in 0..g.cells1.len() {
            if g.tgt1(k) == oa {
                let l = get(&g.interchanger, (b, g.id2[k]));
                let want = g.interchanger_boundary(b, g.id2[k]).map(|(s, _)| g.id3[s]);
                r.check(l.is_some() && l == want, "interchanger-identity-alpha", || vec![n2(b), n1(k)]);
            }
        }
    }
    // middle whiskering: β_{hα} = (βh)_α
    for a in 0..g.cells2.len() {
        let (_, ob) = g.ends2(a);
        for k in 0..g.cells1.len() {
            if g.src1(k) != ob {
                continue;
            }
            for b in 0..g.cells2.len() {
                if g.ends2(b).0 != g.tgt1(k) {
                    continue;
                }
                let l = try_some!(get(&g.interchanger, (b, get(&g.lw2, (k, a))?))?);
                let rr = try_some!(get(&g.interchanger, (get(&g.rw2, (b, k))?, a))?);
                r.check(l.is_some() && l == rr, "interchanger-whisker-middle", || vec![n2(b), n1(k), n2(a)]);
            }
        }
    }
}

//! Basic Gray-categories and constructions on them.

use crate::error::{Error, Result};
use crate::functor::GrayFunctor;
use crate::gray::GrayCategory;
use crate::sesqui::{SesquiFunctor, TwoCategory};
use crate::tabulate::{tabulate, GrayModel, Tabulated};

/// A one-object Gray-category whose 1-cells form the cyclic group Z/n and
/// whose 2- and 3-cells are identities. With `n = 1` it is the terminal one.
#[derive(Debug, Clone, Copy)]
pub struct Delooping {
    pub n: usize,
}

impl GrayModel for Delooping {
    type O = ();
    type C1 = usize;
    type C2 = usize;
    type C3 = usize;
    fn objects(&self) -> Vec<()> {
        vec![()]
    }
    fn cells1(&self, _: &(), _: &()) -> Vec<usize> {
        (0..self.n).collect()
    }
    fn cells2(&self, f: &usize, g: &usize) -> Vec<usize> {
        if f == g { vec![*f] } else { vec![] }
    }
    fn cells3(&self, a: &usize, b: &usize) -> Vec<usize> {
        if a == b { vec![*a] } else { vec![] }
    }
    fn id1(&self, _: &()) -> usize {
        0
    }
    fn id2(&self, f: &usize) -> usize {
        *f
    }
    fn id3(&self, a: &usize) -> usize {
        *a
    }
    fn comp1(&self, g: &usize, f: &usize) -> usize {
        (g + f) % self.n
    }
    fn comp2(&self, b: &usize, _: &usize) -> usize {
        *b
    }
    fn comp3(&self, y: &usize, _: &usize) -> usize {
        *y
    }
    fn lw2(&self, g: &usize, a: &usize) -> usize {
        (g + a) % self.n
    }
    fn rw2(&self, a: &usize, f: &usize) -> usize {
        (a + f) % self.n
    }
    fn lw3(&self, g: &usize, x: &usize) -> usize {
        (g + x) % self.n
    }
    fn rw3(&self, x: &usize, f: &usize) -> usize {
        (x + f) % self.n
    }
    fn lw32(&self, b: &usize, _: &usize) -> usize {
        *b
    }
    fn rw32(&self, x: &usize, _: &usize) -> usize {
        *x
    }
    fn interchanger(&self, b: &usize, a: &usize) -> usize {
        (a + b) % self.n
    }
    fn name0(&self, _: &()) -> String {
        "*".into()
    }
    fn name1(&self, f: &usize) -> String {
        cyclic_name(*f, self.n)
    }
    fn name2(&self, a: &usize) -> String {
        format!("1.{}", cyclic_name(*a, self.n))
    }
    fn name3(&self, x: &usize) -> String {
        format!("11.{}", cyclic_name(*x, self.n))
    }
}

fn cyclic_name(k: usize, n: usize) -> String {
    match (k, n) {
        (0, _) => "e".into(),
        (1, 2) => "s".into(),
        _ => format!("r{k}"),
    }
}

/// One object, one 1-cell, one 2-cell, and 3-cells forming Z/n.
#[derive(Debug, Clone, Copy)]
pub struct DoubleSuspension {
    pub n: usize,
}

impl GrayModel for DoubleSuspension {
    type O = ();
    type C1 = ();
    type C2 = ();
    type C3 = usize;
    fn objects(&self) -> Vec<()> {
        vec![()]
    }
    fn cells1(&self, _: &(), _: &()) -> Vec<()> {
        vec![()]
    }
    fn cells2(&self, _: &(), _: &()) -> Vec<()> {
        vec![()]
    }
    fn cells3(&self, _: &(), _: &()) -> Vec<usize> {
        (0..self.n).collect()
    }
    fn id1(&self, _: &()) {}
    fn id2(&self, _: &()) {}
    fn id3(&self, _: &()) -> usize {
        0
    }
    fn comp1(&self, _: &(), _: &()) {}
    fn comp2(&self, _: &(), _: &()) {}
    fn comp3(&self, y: &usize, x: &usize) -> usize {
        (x + y) % self.n
    }
    fn lw2(&self, _: &(), _: &()) {}
    fn rw2(&self, _: &(), _: &()) {}
    fn lw3(&self, _: &(), x: &usize) -> usize {
        *x
    }
    fn rw3(&self, x: &usize, _: &()) -> usize {
        *x
    }
    fn lw32(&self, _: &(), x: &usize) -> usize {
        *x
    }
    fn rw32(&self, x: &usize, _: &()) -> usize {
        *x
    }
    fn interchanger(&self, _: &(), _: &()) -> usize {
        0
    }
    fn name0(&self, _: &()) -> String {
        "*".into()
    }
    fn name1(&self, _: &()) -> String {
        "1".into()
    }
    fn name2(&self, _: &()) -> String {
        "11".into()
    }
    fn name3(&self, x: &usize) -> String {
        if *x == 0 { "111".into() } else { format!("t{x}") }
    }
}

/// A 2-category regarded as a Gray-category with only identity 3-cells.
#[derive(Debug, Clone, Copy)]
pub struct LocallyDiscrete<'a>(pub &'a TwoCategory);

impl GrayModel for LocallyDiscrete<'_> {
    type O = usize;
    type C1 = usize;
    type C2 = usize;
    type C3 = usize;
    fn objects(&self) -> Vec<usize> {
        (0..self.0.objects.len()).collect()
    }
    fn cells1(&self, a: &usize, b: &usize) -> Vec<usize> {
        self.0.hom1(*a, *b)
    }
    fn cells2(&self, f: &usize, g: &usize) -> Vec<usize> {
        self.0.hom2(*f, *g)
    }
    fn cells3(&self, a: &usize, b: &usize) -> Vec<usize> {
        if a == b { vec![*a] } else { vec![] }
    }
    fn id1(&self, a: &usize) -> usize {
        self.0.id1[*a]
    }
    fn id2(&self, f: &usize) -> usize {
        self.0.id2[*f]
    }
    fn id3(&self, a: &usize) -> usize {
        *a
    }
    fn comp1(&self, g: &usize, f: &usize) -> usize {
        self.0.c1(*g, *f)
    }
    fn comp2(&self, b: &usize, a: &usize) -> usize {
        self.0.c2(*b, *a)
    }
    fn comp3(&self, y: &usize, _: &usize) -> usize {
        *y
    }
    fn lw2(&self, g: &usize, a: &usize) -> usize {
        self.0.lw(*g, *a)
    }
    fn rw2(&self, a: &usize, f: &usize) -> usize {
        self.0.rw(*a, *f)
    }
    fn lw3(&self, g: &usize, x: &usize) -> usize {
        self.0.lw(*g, *x)
    }
    fn rw3(&self, x: &usize, f: &usize) -> usize {
        self.0.rw(*x, *f)
    }
    fn lw32(&self, b: &usize, x: &usize) -> usize {
        self.0.c2(*b, *x)
    }
    fn rw32(&self, x: &usize, a: &usize) -> usize {
        self.0.c2(*x, *a)
    }
    fn interchanger(&self, b: &usize, a: &usize) -> usize {
        let t = self.0;
        t.c2(t.rw(*b, t.tgt2(*a)), t.lw(t.src2(*b), *a))
    }
    fn name0(&self, a: &usize) -> String {
        self.0.objects[*a].clone()
    }
    fn name1(&self, f: &usize) -> String {
        self.0.name1(*f)
    }
    fn name2(&self, a: &usize) -> String {
        self.0.name2(*a)
    }
    fn name3(&self, x: &usize) -> String {
        format!("1.{}", self.0.name2(*x))
    }
}

/// `2_X`: objects 0 and 1, hom(0,1) = X, hom(1,0) empty, endo-homs terminal.
#[derive(Debug, Clone, Copy)]
pub struct TwoOf<'a>(pub &'a TwoCategory);

/// Cells of `2_X`: identities at an endpoint, or a cell of X.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    Id(usize),
    X(usize),
}

impl GrayModel for TwoOf<'_> {
    type O = usize;
    type C1 = Side;
    type C2 = Side;
    type C3 = Side;
    fn objects(&self) -> Vec<usize> {
        vec![0, 1]
    }
    fn cells1(&self, a: &usize, b: &usize) -> Vec<Side> {
        match (a, b) {
            (0, 1) => (0..self.0.objects.len()).map(Side::X).collect(),
            (1, 0) => vec![],
            _ => vec![Side::Id(*a)],
        }
    }
    fn cells2(&self, f: &Side, g: &Side) -> Vec<Side> {
        match (f, g) {
            (Side::X(x), Side::X(y)) => self.0.hom1(*x, *y).into_iter().map(Side::X).collect(),
            (Side::Id(a), Side::Id(b)) if a == b => vec![Side::Id(*a)],
            _ => vec![],
        }
    }
    fn cells3(&self, a: &Side, b: &Side) -> Vec<Side> {
        match (a, b) {
            (Side::X(x), Side::X(y)) => self.0.hom2(*x, *y).into_iter().map(Side::X).collect(),
            (Side::Id(a), Side::Id(b)) if a == b => vec![Side::Id(*a)],
            _ => vec![],
        }
    }
    fn id1(&self, a: &usize) -> Side {
        Side::Id(*a)
    }
    fn id2(&self, f: &Side) -> Side {
        match f {
            Side::X(x) => Side::X(self.0.id1[*x]),
            s => *s,
        }
    }
    fn id3(&self, a: &Side) -> Side {
        match a {
            Side::X(x) => Side::X(self.0.id2[*x]),
            s => *s,
        }
    }
    fn comp1(&self, g: &Side, f: &Side) -> Side {
        if matches!(g, Side::Id(_)) { *f } else { *g }
    }
    fn comp2(&self, b: &Side, a: &Side) -> Side {
        match (b, a) {
            (Side::X(y), Side::X(x)) => Side::X(self.0.c1(*y, *x)),
            _ => *a,
        }
    }
    fn comp3(&self, y: &Side, x: &Side) -> Side {
        match (y, x) {
            (Side::X(y), Side::X(x)) => Side::X(self.0.c2(*y, *x)),
            _ => *x,
        }
    }
    // whiskering an endpoint identity by an X-object yields an identity of X
    fn lw2(&self, g: &Side, a: &Side) -> Side {
        match (g, a) {
            (Side::X(o), Side::Id(_)) => Side::X(self.0.id1[*o]),
            _ => *a,
        }
    }
    fn rw2(&self, a: &Side, f: &Side) -> Side {
        match (a, f) {
            (Side::Id(_), Side::X(o)) => Side::X(self.0.id1[*o]),
            _ => *a,
        }
    }
    fn lw3(&self, g: &Side, x: &Side) -> Side {
        match (g, x) {
            (Side::X(o), Side::Id(_)) => Side::X(self.0.id2[self.0.id1[*o]]),
            _ => *x,
        }
    }
    fn rw3(&self, x: &Side, f: &Side) -> Side {
        match (x, f) {
            (Side::Id(_), Side::X(o)) => Side::X(self.0.id2[self.0.id1[*o]]),
            _ => *x,
        }
    }
    fn lw32(&self, b: &Side, x: &Side) -> Side {
        match (b, x) {
            (Side::X(b), Side::X(x)) => Side::X(self.0.lw(*b, *x)),
            _ => *x,
        }
    }
    fn rw32(&self, x: &Side, a: &Side) -> Side {
        match (x, a) {
            (Side::X(x), Side::X(a)) => Side::X(self.0.rw(*x, *a)),
            _ => *x,
        }
    }
    fn interchanger(&self, b: &Side, a: &Side) -> Side {
        // one of the two lives in a terminal endo-hom
        match (b, a) {
            (Side::X(b), _) => Side::X(self.0.id2[*b]),
            (_, Side::X(a)) => Side::X(self.0.id2[*a]),
            (Side::Id(o), _) => Side::Id(*o),
        }
    }
    fn name0(&self, a: &usize) -> String {
        a.to_string()
    }
    fn name1(&self, f: &Side) -> String {
        match f {
            Side::Id(a) => format!("1.{a}"),
            Side::X(x) => self.0.objects[*x].clone(),
        }
    }
    fn name2(&self, f: &Side) -> String {
        match f {
            Side::Id(a) => format!("11.{a}"),
            Side::X(x) => self.0.name1(*x),
        }
    }
    fn name3(&self, f: &Side) -> String {
        match f {
            Side::Id(a) => format!("111.{a}"),
            Side::X(x) => self.0.name2(*x),
        }
    }
}

/// Cartesian product of two Gray-categories.
#[derive(Debug, Clone, Copy)]
pub struct Product<'a>(pub &'a GrayCategory, pub &'a GrayCategory);

impl GrayModel for Product<'_> {
    type O = (usize, usize);
    type C1 = (usize, usize);
    type C2 = (usize, usize);
    type C3 = (usize, usize);
    fn objects(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for a in 0..self.0.objects.len() {
            for b in 0..self.1.objects.len() {
                v.push((a, b));
            }
        }
        v
    }
    fn cells1(&self, a: &(usize, usize), b: &(usize, usize)) -> Vec<(usize, usize)> {
        cross(self.0.hom1(a.0, b.0), self.1.hom1(a.1, b.1))
    }
    fn cells2(&self, f: &(usize, usize), g: &(usize, usize)) -> Vec<(usize, usize)> {
        cross(self.0.hom2(f.0, g.0), self.1.hom2(f.1, g.1))
    }
    fn cells3(&self, a: &(usize, usize), b: &(usize, usize)) -> Vec<(usize, usize)> {
        cross(self.0.hom3(a.0, b.0), self.1.hom3(a.1, b.1))
    }
    fn id1(&self, a: &(usize, usize)) -> (usize, usize) {
        (self.0.id1[a.0], self.1.id1[a.1])
    }
    fn id2(&self, f: &(usize, usize)) -> (usize, usize) {
        (self.0.id2[f.0], self.1.id2[f.1])
    }
    fn id3(&self, a: &(usize, usize)) -> (usize, usize) {
        (self.0.id3[a.0], self.1.id3[a.1])
    }
    fn comp1(&self, g: &(usize, usize), f: &(usize, usize)) -> (usize, usize) {
        (self.0.c1(g.0, f.0), self.1.c1(g.1, f.1))
    }
    fn comp2(&self, b: &(usize, usize), a: &(usize, usize)) -> (usize, usize) {
        (self.0.c2(b.0, a.0), self.1.c2(b.1, a.1))
    }
    fn comp3(&self, y: &(usize, usize), x: &(usize, usize)) -> (usize, usize) {
        (self.0.c3(y.0, x.0), self.1.c3(y.1, x.1))
    }
    fn lw2(&self, g: &(usize, usize), a: &(usize, usize)) -> (usize, usize) {
        (self.0.lw2(g.0, a.0), self.1.lw2(g.1, a.1))
    }
    fn rw2(&self, a: &(usize, usize), f: &(usize, usize)) -> (usize, usize) {
        (self.0.rw2(a.0, f.0), self.1.rw2(a.1, f.1))
    }
    fn lw3(&self, g: &(usize, usize), x: &(usize, usize)) -> (usize, usize) {
        (self.0.lw3(g.0, x.0), self.1.lw3(g.1, x.1))
    }
    fn rw3(&self, x: &(usize, usize), f: &(usize, usize)) -> (usize, usize) {
        (self.0.rw3(x.0, f.0), self.1.rw3(x.1, f.1))
    }
    fn lw32(&self, b: &(usize, usize), x: &(usize, usize)) -> (usize, usize) {
        (self.0.lw32(b.0, x.0), self.1.lw32(b.1, x.1))
    }
    fn rw32(&self, x: &(usize, usize), a: &(usize, usize)) -> (usize, usize) {
        (self.0.rw32(x.0, a.0), self.1.rw32(x.1, a.1))
    }
    fn interchanger(&self, b: &(usize, usize), a: &(usize, usize)) -> (usize, usize) {
        (self.0.ich(b.0, a.0), self.1.ich(b.1, a.1))
    }
    fn name0(&self, a: &(usize, usize)) -> String {
        format!("<{}|{}>", self.0.objects[a.0], self.1.objects[a.1])
    }
    fn name1(&self, f: &(usize, usize)) -> String {
        format!("<{}|{}>", self.0.name1(f.0), self.1.name1(f.1))
    }
    fn name2(&self, a: &(usize, usize)) -> String {
        format!("<{}|{}>", self.0.name2(a.0), self.1.name2(a.1))
    }
    fn name3(&self, x: &(usize, usize)) -> String {
        format!("<{}|{}>", self.0.name3(x.0), self.1.name3(x.1))
    }
}

fn cross(a: Vec<usize>, b: Vec<usize>) -> Vec<(usize, usize)> {
    let mut v = Vec::with_capacity(a.len() * b.len());
    for &x in &a {
        for &y in &b {
            v.push((x, y));
        }
    }
    v
}

fn build<M: GrayModel>(m: &M) -> GrayCategory {
    tabulate(m).expect("built-in construction tabulates").gray
}

pub fn terminal() -> GrayCategory {
    build(&Delooping { n: 1 })
}

pub fn empty() -> GrayCategory {
    GrayCategory::default()
}

/// B(Z/n).
pub fn delooping(n: usize) -> GrayCategory {
    build(&Delooping { n })
}

/// Σ²(Z/n).
pub fn double_suspension(n: usize) -> GrayCategory {
    build(&DoubleSuspension { n })
}

pub fn locally_discrete(t: &TwoCategory) -> GrayCategory {
    build(&LocallyDiscrete(t))
}

pub fn two_of(x: &TwoCategory) -> GrayCategory {
    build(&TwoOf(x))
}

/// `2_j : 2_X → 2_Y` for a 2-functor `j : X → Y`.
pub fn two_of_functor(j: &SesquiFunctor, x: &TwoCategory, y: &TwoCategory) -> GrayFunctor {
    let tx = tabulate(&TwoOf(x)).expect("2_X tabulates");
    let ty = tabulate(&TwoOf(y)).expect("2_Y tabulates");
    let side = |s: &Side, m: &[usize]| match s {
        Side::Id(o) => Side::Id(*o),
        Side::X(i) => Side::X(m[*i]),
    };
    GrayFunctor {
        obj: vec![0, 1],
        c1: tx.c1.iter().map(|s| ty.idx1(&side(s, &j.obj), None).expect("image 1-cell")).collect(),
        c2: tx.c2.iter().map(|s| ty.idx2(&side(s, &j.c1), None).expect("image 2-cell")).collect(),
        c3: tx.c3.iter().map(|s| ty.idx3(&side(s, &j.c2), None).expect("image 3-cell")).collect(),
    }
}

pub struct ProductData {
    pub gray: GrayCategory,
    pub p0: GrayFunctor,
    pub p1: GrayFunctor,
}

pub fn product(a: &GrayCategory, b: &GrayCategory) -> ProductData {
    let t: Tabulated<Product> = tabulate(&Product(a, b)).expect("products tabulate");
    let p0 = GrayFunctor {
        obj: t.o.iter().map(|x| x.0).collect(),
        c1: t.c1.iter().map(|x| x.0).collect(),
        c2: t.c2.iter().map(|x| x.0).collect(),
        c3: t.c3.iter().map(|x| x.0).collect(),
    };
    let p1 = GrayFunctor {
        obj: t.o.iter().map(|x| x.1).collect(),
        c1: t.c1.iter().map(|x| x.1).collect(),
        c2: t.c2.iter().map(|x| x.1).collect(),
        c3: t.c3.iter().map(|x| x.1).collect(),
    };
    ProductData { gray: t.gray, p0, p1 }
}

/// `⟨F, G⟩ : X → A × B`.
pub fn pairing(f: &GrayFunctor, g: &GrayFunctor, a: &GrayCategory, b: &GrayCategory) -> GrayFunctor {
    let t: Tabulated<Product> = tabulate(&Product(a, b)).expect("products tabulate");
    GrayFunctor {
        obj: f.obj.iter().zip(&g.obj).map(|(&x, &y)| t.obj(&(x, y)).expect("object")).collect(),
        c1: f.c1.iter().zip(&g.c1).map(|(&x, &y)| t.idx1(&(x, y), None).expect("1-cell")).collect(),
        c2: f.c2.iter().zip(&g.c2).map(|(&x, &y)| t.idx2(&(x, y), None).expect("2-cell")).collect(),
        c3: f.c3.iter().zip(&g.c3).map(|(&x, &y)| t.idx3(&(x, y), None).expect("3-cell")).collect(),
    }
}

/// Strict invertibility of every cell; the witness names the first cell without an inverse.
pub fn is_gray_groupoid(g: &GrayCategory) -> (bool, Option<String>) {
    for f in 0..g.cells1.len() {
        if g.inverse1(f).is_none() {
            return (false, Some(format!("1-cell {}", g.name1(f))));
        }
    }
    for a in 0..g.cells2.len() {
        if g.inverse2(a).is_none() {
            return (false, Some(format!("2-cell {}", g.name2(a))));
        }
    }
    for x in 0..g.cells3.len() {
        if g.inverse3(x).is_none() {
            return (false, Some(format!("3-cell {}", g.name3(x))));
        }
    }
    (true, None)
}

/// Looks up an object by name.
pub fn object_named(g: &GrayCategory, name: &str) -> Result<usize> {
    g.objects.iter().position(|o| o == name).ok_or_else(|| Error::Unknown(name.to_string()))
}

pub fn cell1_named(g: &GrayCategory, name: &str) -> Result<usize> {
    g.cells1.iter().position(|c| c.name == name).ok_or_else(|| Error::Unknown(name.to_string()))
}

pub fn cell2_named(g: &GrayCategory, name: &str) -> Result<usize> {
    g.cells2.iter().position(|c| c.name == name).ok_or_else(|| Error::Unknown(name.to_string()))
}

pub fn cell3_named(g: &GrayCategory, name: &str) -> Result<usize> {
    g.cells3.iter().position(|c| c.name == name).ok_or_else(|| Error::Unknown(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gray::validate_gray_category;
    use crate::sesqui::{terminal_two_category, with_identities};

    fn assert_valid(g: &GrayCategory) {
        let r = validate_gray_category(g).unwrap();
        assert!(r.is_valid(), "{r}");
    }

    #[test]
    fn basic_examples_are_valid() {
        assert_valid(&terminal());
        assert_valid(&empty());
        for n in 1..=4 {
            assert_valid(&delooping(n));
        }
        assert_valid(&double_suspension(3));
    }

    #[test]
    fn two_of_examples() {
        let e = two_of(&TwoCategory::default());
        assert_valid(&e);
        assert_eq!(e.cells1.len(), 2);
        let one = two_of(&terminal_two_category());
        assert_valid(&one);
        assert_eq!(one.cells1.len(), 3);
        let cell = TwoCategory(with_identities(&["x", "y"], &[("f", 0, 1), ("g", 0, 1)], &[("a", "f", "g")]));
        let g = two_of(&cell);
        assert_valid(&g);
        assert_eq!(g.hom1(0, 1).len(), 2);
        assert!(g.hom1(1, 0).is_empty());
    }

    #[test]
    fn groupoid_detection() {
        assert!(is_gray_groupoid(&delooping(2)).0);
        assert!(is_gray_groupoid(&double_suspension(3)).0);
        let (ok, w) = is_gray_groupoid(&two_of(&terminal_two_category()));
        assert!(!ok);
        assert_eq!(w.as_deref(), Some("1-cell *"));
    }

    #[test]
    fn products_are_valid() {
        let p = product(&delooping(2), &double_suspension(3));
        assert_valid(&p.gray);
        assert_eq!(p.gray.cells3.len(), 2 * 3);
    }
}

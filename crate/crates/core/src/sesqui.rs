//! Finite sesquicategories and 2-categories.

use std::ops::Deref;

use crate::category::Category;
use crate::cell::{check_cells, check_table, check_vec, Cell, Table};
use crate::error::StructuralError;
use crate::report::ValidationReport;

/// A finite sesquicategory: 1-cells compose, 2-cells compose vertically and
/// can be whiskered by 1-cells on either side, with no interchange law.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Sesquicategory {
    pub objects: Vec<String>,
    pub cells1: Vec<Cell>,
    pub cells2: Vec<Cell>,
    pub id1: Vec<usize>,
    /// Identity 2-cell of each 1-cell.
    pub id2: Vec<usize>,
    /// `(g, f) -> g∘f`.
    pub comp1: Table,
    /// `(β, α) -> β·α`, where α comes first.
    pub comp2: Table,
    /// `(g, α) -> gα`.
    pub lwhisk: Table,
    /// `(α, f) -> αf`.
    pub rwhisk: Table,
}

/// A sesquicategory in which strict interchange holds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TwoCategory(pub Sesquicategory);

impl Deref for TwoCategory {
    type Target = Sesquicategory;
    fn deref(&self) -> &Sesquicategory {
        &self.0
    }
}

impl Sesquicategory {
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
    /// Source and target objects of a 2-cell, read off its source 1-cell.
    pub fn ends2(&self, a: usize) -> (usize, usize) {
        let f = self.src2(a);
        (self.src1(f), self.tgt1(f))
    }
    pub fn c1(&self, g: usize, f: usize) -> usize {
        self.comp1[&(g, f)]
    }
    pub fn c2(&self, b: usize, a: usize) -> usize {
        self.comp2[&(b, a)]
    }
    pub fn lw(&self, g: usize, a: usize) -> usize {
        self.lwhisk[&(g, a)]
    }
    pub fn rw(&self, a: usize, f: usize) -> usize {
        self.rwhisk[&(a, f)]
    }
    pub fn name1(&self, f: usize) -> String {
        self.cells1.get(f).map_or_else(|| format!("#{f}"), |c| c.name.clone())
    }
    pub fn name2(&self, a: usize) -> String {
        self.cells2.get(a).map_or_else(|| format!("#{a}"), |c| c.name.clone())
    }

    pub fn hom1(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.cells1.len()).filter(|&f| self.src1(f) == a && self.tgt1(f) == b).collect()
    }

    pub fn hom2(&self, f: usize, g: usize) -> Vec<usize> {
        (0..self.cells2.len()).filter(|&x| self.src2(x) == f && self.tgt2(x) == g).collect()
    }

    pub fn is_identity2(&self, a: usize) -> bool {
        self.id2.get(self.src2(a)) == Some(&a)
    }

    /// Strict vertical inverse of a 2-cell.
    pub fn inverse2(&self, a: usize) -> Option<usize> {
        let (f, g) = (self.src2(a), self.tgt2(a));
        self.hom2(g, f).into_iter().find(|&b| self.c2(b, a) == self.id2[f] && self.c2(a, b) == self.id2[g])
    }

    pub fn inverse1(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.src1(f), self.tgt1(f));
        self.hom1(b, a).into_iter().find(|&g| self.c1(g, f) == self.id1[a] && self.c1(f, g) == self.id1[b])
    }

    pub fn underlying_category(&self) -> Category {
        Category {
            objects: self.objects.clone(),
            arrows: self.cells1.clone(),
            identity: self.id1.clone(),
            compose: self.comp1.clone(),
        }
    }

    pub(crate) fn keys_comp1(&self) -> Vec<(usize, usize)> {
        pairs(self.cells1.len(), self.cells1.len(), |g, f| self.src1(g) == self.tgt1(f))
    }
    pub(crate) fn keys_comp2(&self) -> Vec<(usize, usize)> {
        pairs(self.cells2.len(), self.cells2.len(), |b, a| self.src2(b) == self.tgt2(a))
    }
    pub(crate) fn keys_lwhisk(&self) -> Vec<(usize, usize)> {
        pairs(self.cells1.len(), self.cells2.len(), |g, a| self.src1(g) == self.ends2(a).1)
    }
    pub(crate) fn keys_rwhisk(&self) -> Vec<(usize, usize)> {
        pairs(self.cells2.len(), self.cells1.len(), |a, f| self.ends2(a).0 == self.tgt1(f))
    }

    pub fn check_structure(&self) -> Result<(), StructuralError> {
        let (n0, n1, n2) = (self.objects.len(), self.cells1.len(), self.cells2.len());
        check_cells("cells1", &self.cells1, n0, "object")?;
        check_cells("cells2", &self.cells2, n1, "1-cell")?;
        check_vec("id1", &self.id1, n0, n1, "1-cell")?;
        check_vec("id2", &self.id2, n1, n2, "2-cell")?;
        check_table("comp1", &self.comp1, self.keys_comp1(), (n1, n1, n1), ("1-cell", "1-cell", "1-cell"))?;
        check_table("comp2", &self.comp2, self.keys_comp2(), (n2, n2, n2), ("2-cell", "2-cell", "2-cell"))?;
        check_table("lwhisk", &self.lwhisk, self.keys_lwhisk(), (n1, n2, n2), ("1-cell", "2-cell", "2-cell"))?;
        check_table("rwhisk", &self.rwhisk, self.keys_rwhisk(), (n2, n1, n2), ("2-cell", "1-cell", "2-cell"))?;
        Ok(())
    }

    /// Adds every table entry forced by the unit laws and by whiskering
    /// identity 2-cells, leaving existing entries untouched.
    pub fn complete_units(&mut self) {
        for (g, f) in self.keys_comp1() {
            let v = if self.id1[self.tgt1(f)] == g {
                Some(f)
            } else if self.id1[self.src1(g)] == f {
                Some(g)
            } else {
                None
            };
            if let Some(v) = v {
                self.comp1.entry((g, f)).or_insert(v);
            }
        }
        for (b, a) in self.keys_comp2() {
            let v = if self.is_identity2(b) {
                Some(a)
            } else if self.is_identity2(a) {
                Some(b)
            } else {
                None
            };
            if let Some(v) = v {
                self.comp2.entry((b, a)).or_insert(v);
            }
        }
        for (g, a) in self.keys_lwhisk() {
            if self.id1[self.src1(g)] == g {
                self.lwhisk.entry((g, a)).or_insert(a);
            } else if self.is_identity2(a) {
                if let Some(&gf) = self.comp1.get(&(g, self.src2(a))) {
                    let v = self.id2[gf];
                    self.lwhisk.entry((g, a)).or_insert(v);
                }
            }
        }
        for (a, f) in self.keys_rwhisk() {
            if self.id1[self.tgt1(f)] == f {
                self.rwhisk.entry((a, f)).or_insert(a);
            } else if self.is_identity2(a) {
                if let Some(&hf) = self.comp1.get(&(self.src2(a), f)) {
                    let v = self.id2[hf];
                    self.rwhisk.entry((a, f)).or_insert(v);
                }
            }
        }
    }
}

fn pairs(n: usize, m: usize, ok: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
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

/// Checks the sesquicategory axioms.
pub fn validate_sesquicategory(s: &Sesquicategory) -> Result<ValidationReport, StructuralError> {
    s.check_structure()?;
    let mut r = ValidationReport::new();
    let n1 = |f: usize| s.name1(f);
    let n2 = |a: usize| s.name2(a);
    let get = |t: &Table, k: (usize, usize)| t.get(&k).copied();

    for (a, &i) in s.id1.iter().enumerate() {
        r.check(s.src1(i) == a && s.tgt1(i) == a, "id1-typing", || vec![s.objects[a].clone()]);
    }
    for (f, &i) in s.id2.iter().enumerate() {
        r.check(s.src2(i) == f && s.tgt2(i) == f, "id2-typing", || vec![n1(f)]);
    }
    for x in 0..s.cells2.len() {
        let (f, g) = (s.src2(x), s.tgt2(x));
        r.check(s.src1(f) == s.src1(g) && s.tgt1(f) == s.tgt1(g), "globularity", || vec![n2(x)]);
    }
    for (&(g, f), &h) in &s.comp1 {
        r.check(s.src1(h) == s.src1(f) && s.tgt1(h) == s.tgt1(g), "comp1-typing", || vec![n1(g), n1(f)]);
    }
    for (&(b, a), &c) in &s.comp2 {
        r.check(s.src2(c) == s.src2(a) && s.tgt2(c) == s.tgt2(b), "comp2-typing", || vec![n2(b), n2(a)]);
    }
    for (&(g, a), &c) in &s.lwhisk {
        let ok = get(&s.comp1, (g, s.src2(a))) == Some(s.src2(c)) && get(&s.comp1, (g, s.tgt2(a))) == Some(s.tgt2(c));
        r.check(ok, "lwhisk-typing", || vec![n1(g), n2(a)]);
    }
    for (&(a, f), &c) in &s.rwhisk {
        let ok = get(&s.comp1, (s.src2(a), f)) == Some(s.src2(c)) && get(&s.comp1, (s.tgt2(a), f)) == Some(s.tgt2(c));
        r.check(ok, "rwhisk-typing", || vec![n2(a), n1(f)]);
    }

    // 1-cell category
    for f in 0..s.cells1.len() {
        let (a, b) = (s.src1(f), s.tgt1(f));
        r.check(get(&s.comp1, (f, s.id1[a])) == Some(f), "comp1-right-unit", || vec![n1(f)]);
        r.check(get(&s.comp1, (s.id1[b], f)) == Some(f), "comp1-left-unit", || vec![n1(f)]);
    }
    for &(g, f) in &s.keys_comp1() {
        for h in 0..s.cells1.len() {
            if s.src1(h) != s.tgt1(g) {
                continue;
            }
            let l = get(&s.comp1, (g, f)).and_then(|gf| get(&s.comp1, (h, gf)));
            let rr = get(&s.comp1, (h, g)).and_then(|hg| get(&s.comp1, (hg, f)));
            r.check(l.is_some() && l == rr, "comp1-associativity", || vec![n1(h), n1(g), n1(f)]);
        }
    }
    // vertical category
    for x in 0..s.cells2.len() {
        let (f, g) = (s.src2(x), s.tgt2(x));
        r.check(get(&s.comp2, (x, s.id2[f])) == Some(x), "comp2-right-unit", || vec![n2(x)]);
        r.check(get(&s.comp2, (s.id2[g], x)) == Some(x), "comp2-left-unit", || vec![n2(x)]);
    }
    for &(b, a) in &s.keys_comp2() {
        for c in 0..s.cells2.len() {
            if s.src2(c) != s.tgt2(b) {
                continue;
            }
            let l = get(&s.comp2, (b, a)).and_then(|ba| get(&s.comp2, (c, ba)));
            let rr = get(&s.comp2, (c, b)).and_then(|cb| get(&s.comp2, (cb, a)));
            r.check(l.is_some() && l == rr, "comp2-associativity", || vec![n2(c), n2(b), n2(a)]);
        }
    }
    // whiskering is functorial in the 2-cell
    for &(g, a) in &s.keys_lwhisk() {
        for b in 0..s.cells2.len() {
            if s.src2(b) != s.tgt2(a) {
                continue;
            }
            let l = get(&s.comp2, (b, a)).and_then(|ba| get(&s.lwhisk, (g, ba)));
            let rr = match (get(&s.lwhisk, (g, b)), get(&s.lwhisk, (g, a))) {
                (Some(gb), Some(ga)) => get(&s.comp2, (gb, ga)),
                _ => None,
            };
            r.check(l.is_some() && l == rr, "lwhisk-functorial", || vec![n1(g), n2(b), n2(a)]);
        }
    }
    for &(a, f) in &s.keys_rwhisk() {
        for b in 0..s.cells2.len() {
            if s.src2(b) != s.tgt2(a) {
                continue;
            }
            let l = get(&s.comp2, (b, a)).and_then(|ba| get(&s.rwhisk, (ba, f)));
            let rr = match (get(&s.rwhisk, (b, f)), get(&s.rwhisk, (a, f))) {
                (Some(bf), Some(af)) => get(&s.comp2, (bf, af)),
                _ => None,
            };
            r.check(l.is_some() && l == rr, "rwhisk-functorial", || vec![n2(b), n2(a), n1(f)]);
        }
    }
    for g in 0..s.cells1.len() {
        for f in 0..s.cells1.len() {
            if s.src1(g) == s.tgt1(f) {
                let l = get(&s.lwhisk, (g, s.id2[f]));
                let rr = get(&s.comp1, (g, f)).map(|gf| s.id2[gf]);
                r.check(l.is_some() && l == rr, "lwhisk-identity", || vec![n1(g), n1(f)]);
                let l = get(&s.rwhisk, (s.id2[g], f));
                r.check(l.is_some() && l == rr, "rwhisk-identity", || vec![n1(g), n1(f)]);
            }
        }
    }
    // whiskering is compatible with 1-cell composition
    for &(g, a) in &s.keys_lwhisk() {
        let b = s.src1(g);
        r.check(
            !(s.id1[b] == g) || get(&s.lwhisk, (g, a)) == Some(a),
            "lwhisk-unit",
            || vec![n1(g), n2(a)],
        );
        for h in 0..s.cells1.len() {
            if s.src1(h) != s.tgt1(g) {
                continue;
            }
            let l = get(&s.comp1, (h, g)).and_then(|hg| get(&s.lwhisk, (hg, a)));
            let rr = get(&s.lwhisk, (g, a)).and_then(|ga| get(&s.lwhisk, (h, ga)));
            r.check(l.is_some() && l == rr, "lwhisk-compose", || vec![n1(h), n1(g), n2(a)]);
        }
        for e in 0..s.cells1.len() {
            if s.tgt1(e) != s.ends2(a).0 {
                continue;
            }
            let l = get(&s.lwhisk, (g, a)).and_then(|ga| get(&s.rwhisk, (ga, e)));
            let rr = get(&s.rwhisk, (a, e)).and_then(|ae| get(&s.lwhisk, (g, ae)));
            r.check(l.is_some() && l == rr, "whisk-bimodule", || vec![n1(g), n2(a), n1(e)]);
        }
    }
    for &(a, f) in &s.keys_rwhisk() {
        let b = s.tgt1(f);
        r.check(
            !(s.id1[b] == f) || get(&s.rwhisk, (a, f)) == Some(a),
            "rwhisk-unit",
            || vec![n2(a), n1(f)],
        );
        for e in 0..s.cells1.len() {
            if s.tgt1(e) != s.src1(f) {
                continue;
            }
            let l = get(&s.comp1, (f, e)).and_then(|fe| get(&s.rwhisk, (a, fe)));
            let rr = get(&s.rwhisk, (a, f)).and_then(|af| get(&s.rwhisk, (af, e)));
            r.check(l.is_some() && l == rr, "rwhisk-compose", || vec![n2(a), n1(f), n1(e)]);
        }
    }
    Ok(r)
}

/// Checks the 2-category axioms: the sesquicategory axioms plus interchange.
pub fn validate_two_category(t: &TwoCategory) -> Result<ValidationReport, StructuralError> {
    let s = &t.0;
    let mut r = validate_sesquicategory(s)?;
    for (b, a) in interchange_pairs(s) {
        let ok = interchange_sides(s, b, a).is_some_and(|(l, rr)| l == rr);
        r.check(ok, "interchange", || vec![s.name2(b), s.name2(a)]);
    }
    Ok(r)
}

/// Horizontally adjacent pairs `(β, α)`: α in hom(A,B), β in hom(B,C).
pub fn interchange_pairs(s: &Sesquicategory) -> Vec<(usize, usize)> {
    pairs(s.cells2.len(), s.cells2.len(), |b, a| s.ends2(b).0 == s.ends2(a).1)
}

/// The two composites `(βf′)·(gα)` and `(g′α)·(βf)`.
pub fn interchange_sides(s: &Sesquicategory, b: usize, a: usize) -> Option<(usize, usize)> {
    let get = |t: &Table, k: (usize, usize)| t.get(&k).copied();
    let (f, f2) = (s.src2(a), s.tgt2(a));
    let (g, g2) = (s.src2(b), s.tgt2(b));
    let l = get(&s.comp2, (get(&s.rwhisk, (b, f2))?, get(&s.lwhisk, (g, a))?))?;
    let r = get(&s.comp2, (get(&s.lwhisk, (g2, a))?, get(&s.rwhisk, (b, f))?))?;
    Some((l, r))
}

/// A sesquifunctor; between 2-categories the same data is a 2-functor.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SesquiFunctor {
    pub obj: Vec<usize>,
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
}

impl SesquiFunctor {
    pub fn identity(s: &Sesquicategory) -> Self {
        Self { obj: (0..s.objects.len()).collect(), c1: (0..s.cells1.len()).collect(), c2: (0..s.cells2.len()).collect() }
    }

    pub fn compose(&self, first: &SesquiFunctor) -> SesquiFunctor {
        SesquiFunctor {
            obj: first.obj.iter().map(|&x| self.obj[x]).collect(),
            c1: first.c1.iter().map(|&x| self.c1[x]).collect(),
            c2: first.c2.iter().map(|&x| self.c2[x]).collect(),
        }
    }
}

pub fn validate_sesqui_functor(
    f: &SesquiFunctor,
    dom: &Sesquicategory,
    cod: &Sesquicategory,
) -> Result<ValidationReport, StructuralError> {
    check_vec("functor.obj", &f.obj, dom.objects.len(), cod.objects.len(), "object")?;
    check_vec("functor.c1", &f.c1, dom.cells1.len(), cod.cells1.len(), "1-cell")?;
    check_vec("functor.c2", &f.c2, dom.cells2.len(), cod.cells2.len(), "2-cell")?;
    let mut r = ValidationReport::new();
    for x in 0..dom.cells1.len() {
        let y = f.c1[x];
        let ok = cod.src1(y) == f.obj[dom.src1(x)] && cod.tgt1(y) == f.obj[dom.tgt1(x)];
        r.check(ok, "functor-typing-1", || vec![dom.name1(x)]);
    }
    for x in 0..dom.cells2.len() {
        let y = f.c2[x];
        let ok = cod.src2(y) == f.c1[dom.src2(x)] && cod.tgt2(y) == f.c1[dom.tgt2(x)];
        r.check(ok, "functor-typing-2", || vec![dom.name2(x)]);
    }
    for (a, &i) in dom.id1.iter().enumerate() {
        r.check(f.c1[i] == cod.id1[f.obj[a]], "functor-id1", || vec![dom.objects[a].clone()]);
    }
    for (x, &i) in dom.id2.iter().enumerate() {
        r.check(f.c2[i] == cod.id2[f.c1[x]], "functor-id2", || vec![dom.name1(x)]);
    }
    for (&(g, h), &v) in &dom.comp1 {
        r.check(cod.comp1.get(&(f.c1[g], f.c1[h])) == Some(&f.c1[v]), "functor-comp1", || vec![dom.name1(g), dom.name1(h)]);
    }
    for (&(b, a), &v) in &dom.comp2 {
        r.check(cod.comp2.get(&(f.c2[b], f.c2[a])) == Some(&f.c2[v]), "functor-comp2", || vec![dom.name2(b), dom.name2(a)]);
    }
    for (&(g, a), &v) in &dom.lwhisk {
        r.check(cod.lwhisk.get(&(f.c1[g], f.c2[a])) == Some(&f.c2[v]), "functor-lwhisk", || vec![dom.name1(g), dom.name2(a)]);
    }
    for (&(a, g), &v) in &dom.rwhisk {
        r.check(cod.rwhisk.get(&(f.c2[a], f.c1[g])) == Some(&f.c2[v]), "functor-rwhisk", || vec![dom.name2(a), dom.name1(g)]);
    }
    Ok(r)
}

/// The 2-category with one object and only identity cells.
pub fn terminal_two_category() -> TwoCategory {
    let mut s = Sesquicategory {
        objects: vec!["*".into()],
        cells1: vec![Cell::new("1", 0, 0)],
        cells2: vec![Cell::new("11", 0, 0)],
        id1: vec![0],
        id2: vec![0],
        ..Default::default()
    };
    s.complete_units();
    TwoCategory(s)
}

pub fn empty_two_category() -> TwoCategory {
    TwoCategory::default()
}

/// Identity cells accompanying a set of named objects and 1-cells, with
/// identity 2-cells named `1.f` and identity 1-cells `1.a`.
pub fn with_identities(objects: &[&str], arrows: &[(&str, usize, usize)], twocells: &[(&str, &str, &str)]) -> Sesquicategory {
    let mut s = Sesquicategory { objects: objects.iter().map(|x| x.to_string()).collect(), ..Default::default() };
    for (i, o) in objects.iter().enumerate() {
        s.id1.push(s.cells1.len());
        s.cells1.push(Cell::new(format!("1.{o}"), i, i));
    }
    for &(n, a, b) in arrows {
        s.cells1.push(Cell::new(n, a, b));
    }
    for f in 0..s.cells1.len() {
        s.id2.push(s.cells2.len());
        s.cells2.push(Cell::new(format!("1.{}", s.cells1[f].name), f, f));
    }
    let find1 = |s: &Sesquicategory, n: &str| s.cells1.iter().position(|c| c.name == n).expect("declared 1-cell");
    for &(n, f, g) in twocells {
        let (f, g) = (find1(&s, f), find1(&s, g));
        s.cells2.push(Cell::new(n, f, g));
    }
    s.complete_units();
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two objects, two parallel 1-cells and mutually inverse 2-cells between them.
    pub(crate) fn free_invertible_two_cell() -> TwoCategory {
        let mut s = with_identities(&["0", "1"], &[("f", 0, 1), ("g", 0, 1)], &[("a", "f", "g"), ("b", "g", "f")]);
        let id = |s: &Sesquicategory, n: &str| s.id2[s.cells1.iter().position(|c| c.name == n).unwrap()];
        let (a, b) = (s.cells2.len() - 2, s.cells2.len() - 1);
        let (f1, g1) = (id(&s, "f"), id(&s, "g"));
        s.comp2.insert((b, a), f1);
        s.comp2.insert((a, b), g1);
        TwoCategory(s)
    }

    #[test]
    fn terminal_is_valid() {
        assert!(validate_two_category(&terminal_two_category()).unwrap().is_valid());
    }

    #[test]
    fn free_invertible_two_cell_is_valid() {
        let t = free_invertible_two_cell();
        let r = validate_two_category(&t).unwrap();
        assert!(r.is_valid(), "{r}");
        assert!(t.inverse2(t.cells2.len() - 1).is_some());
    }

    #[test]
    fn missing_vertical_composite_is_structural() {
        let mut t = free_invertible_two_cell();
        let k = *t.0.comp2.keys().next().unwrap();
        t.0.comp2.remove(&k);
        assert!(matches!(validate_two_category(&t), Err(StructuralError::Missing { table: "comp2", .. })));
    }

    #[test]
    fn broken_whisker_is_reported() {
        let mut t = free_invertible_two_cell();
        let a = t.cells2.len() - 2;
        let b = a + 1;
        // whiskering `a` by the identity of the target must return `a`
        t.0.lwhisk.insert((t.id1[1], a), b);
        let r = validate_two_category(&t).unwrap();
        assert!(!r.is_valid());
    }

    #[test]
    fn identity_functor_is_valid() {
        let t = free_invertible_two_cell();
        assert!(validate_sesqui_functor(&SesquiFunctor::identity(&t), &t, &t).unwrap().is_valid());
    }
}

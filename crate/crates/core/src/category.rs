//! Finite categories and functors between them.

use std::collections::BTreeMap;

use crate::cell::{check_cells, check_table, check_vec, Cell, Table};
use crate::error::StructuralError;
use crate::report::ValidationReport;

/// A finite category with a fully tabulated composition.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Category {
    pub objects: Vec<String>,
    pub arrows: Vec<Cell>,
    /// Identity arrow of each object.
    pub identity: Vec<usize>,
    /// `(g, f) -> g∘f` for every composable pair.
    pub compose: Table,
}

impl Category {
    pub fn src(&self, f: usize) -> usize {
        self.arrows[f].src
    }

    pub fn tgt(&self, f: usize) -> usize {
        self.arrows[f].tgt
    }

    /// Composite `g∘f`; panics when the pair is not in the table.
    pub fn comp(&self, g: usize, f: usize) -> usize {
        self.compose[&(g, f)]
    }

    pub fn hom(&self, a: usize, b: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&f| self.src(f) == a && self.tgt(f) == b).collect()
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identity[self.src(f)] == f
    }

    pub fn inverse(&self, f: usize) -> Option<usize> {
        let (a, b) = (self.src(f), self.tgt(f));
        self.hom(b, a)
            .into_iter()
            .find(|&g| self.comp(g, f) == self.identity[a] && self.comp(f, g) == self.identity[b])
    }

    pub fn composable_pairs(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for g in 0..self.arrows.len() {
            for f in 0..self.arrows.len() {
                if self.arrows[g].src == self.arrows[f].tgt {
                    v.push((g, f));
                }
            }
        }
        v
    }

    pub fn check_structure(&self) -> Result<(), StructuralError> {
        let (n0, n1) = (self.objects.len(), self.arrows.len());
        check_cells("arrows", &self.arrows, n0, "object")?;
        check_vec("identity", &self.identity, n0, n1, "arrow")?;
        check_table("compose", &self.compose, self.composable_pairs(), (n1, n1, n1), ("arrow", "arrow", "arrow"))
    }

    pub fn arrow_name(&self, f: usize) -> String {
        self.arrows[f].name.clone()
    }

    /// The opposite category.
    pub fn opposite(&self) -> Category {
        Category {
            objects: self.objects.clone(),
            arrows: self.arrows.iter().map(|c| Cell::new(c.name.clone(), c.tgt, c.src)).collect(),
            identity: self.identity.clone(),
            compose: self.compose.iter().map(|(&(g, f), &h)| ((f, g), h)).collect(),
        }
    }
}

/// Checks the category axioms. Table lookups that fail were already
/// rejected by the structural pass.
pub fn validate_category(c: &Category) -> Result<ValidationReport, StructuralError> {
    c.check_structure()?;
    let mut r = ValidationReport::new();
    let nm = |f: usize| c.arrows[f].name.clone();
    for (a, &i) in c.identity.iter().enumerate() {
        r.check(c.src(i) == a && c.tgt(i) == a, "identity-typing", || vec![c.objects[a].clone()]);
    }
    for (&(g, f), &h) in &c.compose {
        r.check(c.src(h) == c.src(f) && c.tgt(h) == c.tgt(g), "composite-typing", || vec![nm(g), nm(f)]);
    }
    for f in 0..c.arrows.len() {
        let (a, b) = (c.src(f), c.tgt(f));
        r.check(c.comp(f, c.identity[a]) == f, "right-unit", || vec![nm(f)]);
        r.check(c.comp(c.identity[b], f) == f, "left-unit", || vec![nm(f)]);
    }
    for (g, f) in c.composable_pairs() {
        for h in 0..c.arrows.len() {
            if c.src(h) != c.tgt(g) {
                continue;
            }
            let gf = c.comp(g, f);
            let hg = c.comp(h, g);
            let ok = c.compose.get(&(h, gf)).is_some_and(|&x| c.compose.get(&(hg, f)) == Some(&x));
            r.check(ok, "associativity", || vec![nm(h), nm(g), nm(f)]);
        }
    }
    Ok(r)
}

/// A functor between finite categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub obj: Vec<usize>,
    pub arr: Vec<usize>,
}

impl Functor {
    pub fn identity(c: &Category) -> Self {
        Self { obj: (0..c.objects.len()).collect(), arr: (0..c.arrows.len()).collect() }
    }
}

pub fn validate_functor(f: &Functor, dom: &Category, cod: &Category) -> Result<ValidationReport, StructuralError> {
    check_vec("functor.obj", &f.obj, dom.objects.len(), cod.objects.len(), "object")?;
    check_vec("functor.arr", &f.arr, dom.arrows.len(), cod.arrows.len(), "arrow")?;
    let mut r = ValidationReport::new();
    for (x, &fx) in f.arr.iter().enumerate() {
        let ok = cod.src(fx) == f.obj[dom.src(x)] && cod.tgt(fx) == f.obj[dom.tgt(x)];
        r.check(ok, "functor-typing", || vec![dom.arrow_name(x)]);
    }
    for (a, &i) in dom.identity.iter().enumerate() {
        r.check(f.arr[i] == cod.identity[f.obj[a]], "functor-identity", || vec![dom.objects[a].clone()]);
    }
    for (&(g, h), &gh) in &dom.compose {
        let ok = cod.compose.get(&(f.arr[g], f.arr[h])) == Some(&f.arr[gh]);
        r.check(ok, "functor-composition", || vec![dom.arrow_name(g), dom.arrow_name(h)]);
    }
    Ok(r)
}

/// Builds a category from an enumeration of arrows and a composition closure.
/// Arrows are deduplicated by value; `compose` must stay inside the enumerated set.
pub fn tabulate_category<A: Ord + Clone>(
    objects: Vec<String>,
    arrows: Vec<(A, usize, usize)>,
    name: impl Fn(&A) -> String,
    identity: impl Fn(usize) -> A,
    compose: impl Fn(&A, &A) -> A,
) -> Option<Category> {
    let mut index: BTreeMap<A, usize> = BTreeMap::new();
    let mut cells = Vec::new();
    for (a, s, t) in &arrows {
        if !index.contains_key(a) {
            index.insert(a.clone(), cells.len());
            cells.push(Cell::new(name(a), *s, *t));
        }
    }
    let ids = (0..objects.len()).map(|o| index.get(&identity(o)).copied()).collect::<Option<Vec<_>>>()?;
    let keys: Vec<A> = {
        let mut v = vec![None; cells.len()];
        for (a, &i) in &index {
            v[i] = Some(a.clone());
        }
        v.into_iter().map(|x| x.expect("dense index")).collect()
    };
    let mut table = Table::new();
    for g in 0..cells.len() {
        for f in 0..cells.len() {
            if cells[g].src == cells[f].tgt {
                table.insert((g, f), *index.get(&compose(&keys[g], &keys[f]))?);
            }
        }
    }
    Some(Category { objects, arrows: cells, identity: ids, compose: table })
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn arrow() -> Category {
        Category {
            objects: vec!["0".into(), "1".into()],
            arrows: vec![Cell::new("1_0", 0, 0), Cell::new("1_1", 1, 1), Cell::new("f", 0, 1)],
            identity: vec![0, 1],
            compose: [((0, 0), 0), ((1, 1), 1), ((2, 0), 2), ((1, 2), 2)].into_iter().collect(),
        }
    }

    #[test]
    fn arrow_category_is_valid() {
        assert!(validate_category(&arrow()).unwrap().is_valid());
    }

    #[test]
    fn missing_composite_is_structural() {
        let mut c = arrow();
        c.compose.remove(&(2, 0));
        assert!(matches!(validate_category(&c), Err(StructuralError::Missing { .. })));
    }

    #[test]
    fn broken_unit_is_reported() {
        let mut c = arrow();
        c.compose.insert((1, 2), 0);
        let r = validate_category(&c).unwrap();
        assert!(r.mentions("left-unit"));
    }

    #[test]
    fn opposite_is_valid_and_involutive() {
        let c = arrow();
        let o = c.opposite();
        assert!(validate_category(&o).unwrap().is_valid());
        assert_eq!(o.opposite(), c);
    }

    #[test]
    fn identity_functor_is_valid() {
        let c = arrow();
        assert!(validate_functor(&Functor::identity(&c), &c, &c).unwrap().is_valid());
    }
}

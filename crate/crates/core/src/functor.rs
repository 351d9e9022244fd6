//! Gray-functors.

use crate::cell::{check_vec, Table};
use crate::error::StructuralError;
use crate::gray::{GrayCategory, HomView};
use crate::report::ValidationReport;
use crate::sesqui::SesquiFunctor;

/// A Gray-functor given by its action on cells of every dimension.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GrayFunctor {
    pub obj: Vec<usize>,
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
    pub c3: Vec<usize>,
}

impl GrayFunctor {
    pub fn identity(g: &GrayCategory) -> Self {
        Self {
            obj: (0..g.objects.len()).collect(),
            c1: (0..g.cells1.len()).collect(),
            c2: (0..g.cells2.len()).collect(),
            c3: (0..g.cells3.len()).collect(),
        }
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GrayFunctor) -> GrayFunctor {
        GrayFunctor {
            obj: first.obj.iter().map(|&x| self.obj[x]).collect(),
            c1: first.c1.iter().map(|&x| self.c1[x]).collect(),
            c2: first.c2.iter().map(|&x| self.c2[x]).collect(),
            c3: first.c3.iter().map(|&x| self.c3[x]).collect(),
        }
    }

    /// The unique functor into the terminal Gray-category.
    pub fn to_terminal(g: &GrayCategory) -> Self {
        Self { obj: vec![0; g.objects.len()], c1: vec![0; g.cells1.len()], c2: vec![0; g.cells2.len()], c3: vec![0; g.cells3.len()] }
    }

    /// Restriction to the hom between `dom.a` and `dom.b`, as a 2-functor
    /// into the hom `cod` (which must be the hom between the image objects).
    pub fn on_hom(&self, dom: &HomView, cod: &HomView) -> SesquiFunctor {
        SesquiFunctor {
            obj: dom.g1.iter().map(|&f| cod.l1[&self.c1[f]]).collect(),
            c1: dom.g2.iter().map(|&a| cod.l2[&self.c2[a]]).collect(),
            c2: dom.g3.iter().map(|&x| cod.l3[&self.c3[x]]).collect(),
        }
    }
}

fn preserves(
    r: &mut ValidationReport,
    axiom: &'static str,
    dom: &Table,
    cod: &Table,
    m0: &[usize],
    m1: &[usize],
    mv: &[usize],
    names: impl Fn(usize, usize) -> Vec<String>,
) {
    for (&(x, y), &v) in dom {
        let ok = cod.get(&(m0[x], m1[y])) == Some(&mv[v]);
        r.check(ok, axiom, || names(x, y));
    }
}

pub fn validate_gray_functor(f: &GrayFunctor, dom: &GrayCategory, cod: &GrayCategory) -> Result<ValidationReport, StructuralError> {
    check_vec("functor.obj", &f.obj, dom.objects.len(), cod.objects.len(), "object")?;
    check_vec("functor.c1", &f.c1, dom.cells1.len(), cod.cells1.len(), "1-cell")?;
    check_vec("functor.c2", &f.c2, dom.cells2.len(), cod.cells2.len(), "2-cell")?;
    check_vec("functor.c3", &f.c3, dom.cells3.len(), cod.cells3.len(), "3-cell")?;
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
    for x in 0..dom.cells3.len() {
        let y = f.c3[x];
        let ok = cod.src3(y) == f.c2[dom.src3(x)] && cod.tgt3(y) == f.c2[dom.tgt3(x)];
        r.check(ok, "functor-typing-3", || vec![dom.name3(x)]);
    }
    for (a, &i) in dom.id1.iter().enumerate() {
        r.check(f.c1[i] == cod.id1[f.obj[a]], "functor-id1", || vec![dom.objects[a].clone()]);
    }
    for (x, &i) in dom.id2.iter().enumerate() {
        r.check(f.c2[i] == cod.id2[f.c1[x]], "functor-id2", || vec![dom.name1(x)]);
    }
    for (x, &i) in dom.id3.iter().enumerate() {
        r.check(f.c3[i] == cod.id3[f.c2[x]], "functor-id3", || vec![dom.name2(x)]);
    }
    let (n1, n2, n3) = (|x| dom.name1(x), |x| dom.name2(x), |x| dom.name3(x));
    preserves(&mut r, "functor-comp1", &dom.comp1, &cod.comp1, &f.c1, &f.c1, &f.c1, |x, y| vec![n1(x), n1(y)]);
    preserves(&mut r, "functor-comp2", &dom.comp2, &cod.comp2, &f.c2, &f.c2, &f.c2, |x, y| vec![n2(x), n2(y)]);
    preserves(&mut r, "functor-comp3", &dom.comp3, &cod.comp3, &f.c3, &f.c3, &f.c3, |x, y| vec![n3(x), n3(y)]);
    preserves(&mut r, "functor-lw2", &dom.lw2, &cod.lw2, &f.c1, &f.c2, &f.c2, |x, y| vec![n1(x), n2(y)]);
    preserves(&mut r, "functor-rw2", &dom.rw2, &cod.rw2, &f.c2, &f.c1, &f.c2, |x, y| vec![n2(x), n1(y)]);
    preserves(&mut r, "functor-lw3", &dom.lw3, &cod.lw3, &f.c1, &f.c3, &f.c3, |x, y| vec![n1(x), n3(y)]);
    preserves(&mut r, "functor-rw3", &dom.rw3, &cod.rw3, &f.c3, &f.c1, &f.c3, |x, y| vec![n3(x), n1(y)]);
    preserves(&mut r, "functor-lw32", &dom.lw32, &cod.lw32, &f.c2, &f.c3, &f.c3, |x, y| vec![n2(x), n3(y)]);
    preserves(&mut r, "functor-rw32", &dom.rw32, &cod.rw32, &f.c3, &f.c2, &f.c3, |x, y| vec![n3(x), n2(y)]);
    preserves(&mut r, "functor-interchanger", &dom.interchanger, &cod.interchanger, &f.c2, &f.c2, &f.c3, |x, y| {
        vec![n2(x), n2(y)]
    });
    Ok(r)
}

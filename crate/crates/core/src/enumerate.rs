//! Budgeted enumeration of Gray-functors by backtracking, with each table
//! constraint checked as soon as all of its cells are assigned.

use crate::error::{Error, Result};
use crate::functor::GrayFunctor;
use crate::gray::{GrayCategory, GrayIndex};

/// Restricts the candidate image of a cell: `allowed(dim, cell, image)`.
pub type Allowed<'a> = &'a dyn Fn(usize, usize, usize) -> bool;

/// One equation `F(out) = op(F(x), F(y))` or `F(out) = id(F(x))`.
#[derive(Debug, Clone, Copy)]
enum Eq {
    Bin { table: usize, x: (usize, usize), y: (usize, usize), out: usize },
    Id { x: usize, out: usize },
}

struct Search<'a> {
    dom: &'a GrayCategory,
    cod: &'a GrayCategory,
    ix: GrayIndex,
    allowed: Allowed<'a>,
    /// Equations to check once the given cell of the current dimension is assigned.
    eqs: [Vec<Vec<Eq>>; 4],
    f: GrayFunctor,
    nodes: usize,
    budget: usize,
    limit: usize,
    out: Vec<GrayFunctor>,
}

fn table(g: &GrayCategory, t: usize) -> &crate::cell::Table {
    match t {
        0 => &g.comp1,
        1 => &g.comp2,
        2 => &g.lw2,
        3 => &g.rw2,
        4 => &g.comp3,
        5 => &g.lw3,
        6 => &g.rw3,
        7 => &g.lw32,
        8 => &g.rw32,
        _ => &g.interchanger,
    }
}

/// (table, dim of left key, dim of right key, dim of value)
const TABLES: [(usize, usize, usize, usize); 10] = [
    (0, 1, 1, 1),
    (1, 2, 2, 2),
    (2, 1, 2, 2),
    (3, 2, 1, 2),
    (4, 3, 3, 3),
    (5, 1, 3, 3),
    (6, 3, 1, 3),
    (7, 2, 3, 3),
    (8, 3, 2, 3),
    (9, 2, 2, 3),
];

impl<'a> Search<'a> {
    fn new(dom: &'a GrayCategory, cod: &'a GrayCategory, allowed: Allowed<'a>, budget: usize, limit: usize) -> Self {
        let sizes = [dom.objects.len(), dom.cells1.len(), dom.cells2.len(), dom.cells3.len()];
        let mut eqs: [Vec<Vec<Eq>>; 4] = std::array::from_fn(|d| vec![Vec::new(); sizes[d]]);
        for &(t, dl, dr, dv) in &TABLES {
            for (&(x, y), &v) in table(dom, t) {
                // the value's dimension is the highest involved; trigger on the last one assigned
                let mut last = v;
                if dl == dv {
                    last = last.max(x);
                }
                if dr == dv {
                    last = last.max(y);
                }
                eqs[dv][last].push(Eq::Bin { table: t, x: (dl, x), y: (dr, y), out: v });
            }
        }
        for (o, &i) in dom.id1.iter().enumerate() {
            eqs[1][i].push(Eq::Id { x: o, out: i });
        }
        for (f, &i) in dom.id2.iter().enumerate() {
            eqs[2][i].push(Eq::Id { x: f, out: i });
        }
        for (a, &i) in dom.id3.iter().enumerate() {
            eqs[3][i].push(Eq::Id { x: a, out: i });
        }
        let f = GrayFunctor {
            obj: vec![usize::MAX; sizes[0]],
            c1: vec![usize::MAX; sizes[1]],
            c2: vec![usize::MAX; sizes[2]],
            c3: vec![usize::MAX; sizes[3]],
        };
        Search { dom, cod, ix: cod.index(), allowed, eqs, f, nodes: 0, budget, limit, out: Vec::new() }
    }

    fn image(&self, dim: usize, c: usize) -> usize {
        match dim {
            0 => self.f.obj[c],
            1 => self.f.c1[c],
            2 => self.f.c2[c],
            _ => self.f.c3[c],
        }
    }

    fn set(&mut self, dim: usize, c: usize, v: usize) {
        match dim {
            0 => self.f.obj[c] = v,
            1 => self.f.c1[c] = v,
            2 => self.f.c2[c] = v,
            _ => self.f.c3[c] = v,
        }
    }

    fn candidates(&self, dim: usize, c: usize) -> Vec<usize> {
        let d = self.dom;
        match dim {
            0 => (0..self.cod.objects.len()).collect(),
            1 => self.ix.hom1(self.f.obj[d.src1(c)], self.f.obj[d.tgt1(c)]).to_vec(),
            2 => self.ix.hom2(self.f.c1[d.src2(c)], self.f.c1[d.tgt2(c)]).to_vec(),
            _ => self.ix.hom3(self.f.c2[d.src3(c)], self.f.c2[d.tgt3(c)]).to_vec(),
        }
    }

    fn consistent(&self, dim: usize, c: usize) -> bool {
        self.eqs[dim][c].iter().all(|e| match *e {
            Eq::Bin { table: t, x, y, out } => {
                table(self.cod, t).get(&(self.image(x.0, x.1), self.image(y.0, y.1))) == Some(&self.image(dim, out))
            }
            Eq::Id { x, out } => {
                let v = self.image(dim - 1, x);
                let id = match dim {
                    1 => self.cod.id1[v],
                    2 => self.cod.id2[v],
                    _ => self.cod.id3[v],
                };
                id == self.image(dim, out)
            }
        })
    }

    fn go(&mut self, dim: usize, c: usize) -> Result<bool> {
        if dim == 4 {
            self.out.push(self.f.clone());
            return Ok(self.out.len() >= self.limit);
        }
        let size = [self.dom.objects.len(), self.dom.cells1.len(), self.dom.cells2.len(), self.dom.cells3.len()][dim];
        if c == size {
            return self.go(dim + 1, 0);
        }
        for v in self.candidates(dim, c) {
            if !(self.allowed)(dim, c, v) {
                continue;
            }
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::Budget { context: "functor enumeration".into(), budget: self.budget });
            }
            self.set(dim, c, v);
            if self.consistent(dim, c) && self.go(dim, c + 1)? {
                return Ok(true);
            }
        }
        self.set(dim, c, usize::MAX);
        Ok(false)
    }
}

/// All Gray-functors `dom → cod` satisfying `allowed`, up to `limit` of them.
/// `budget` caps the number of search nodes.
pub fn enumerate_functors(
    dom: &GrayCategory,
    cod: &GrayCategory,
    allowed: Allowed,
    budget: usize,
    limit: usize,
) -> Result<Vec<GrayFunctor>> {
    let mut s = Search::new(dom, cod, allowed, budget, limit);
    s.go(0, 0)?;
    Ok(s.out)
}

pub fn any_cell(_: usize, _: usize, _: usize) -> bool {
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{delooping, terminal, two_of};
    use crate::functor::validate_gray_functor;
    use crate::sesqui::terminal_two_category;

    #[test]
    fn functors_between_cyclic_groups() {
        // homomorphisms Z/4 -> Z/2 and Z/2 -> Z/4
        let (z2, z4) = (delooping(2), delooping(4));
        assert_eq!(enumerate_functors(&z4, &z2, &any_cell, 10_000, usize::MAX).unwrap().len(), 2);
        assert_eq!(enumerate_functors(&z2, &z4, &any_cell, 10_000, usize::MAX).unwrap().len(), 2);
        for f in enumerate_functors(&z4, &z4, &any_cell, 10_000, usize::MAX).unwrap() {
            assert!(validate_gray_functor(&f, &z4, &z4).unwrap().is_valid());
        }
    }

    #[test]
    fn functors_into_free_arrow() {
        let a = two_of(&terminal_two_category());
        assert_eq!(enumerate_functors(&a, &a, &any_cell, 10_000, usize::MAX).unwrap().len(), 3);
        assert_eq!(enumerate_functors(&terminal(), &a, &any_cell, 10_000, usize::MAX).unwrap().len(), 2);
    }

    #[test]
    fn budget_is_reported() {
        let z4 = delooping(4);
        assert!(matches!(enumerate_functors(&z4, &z4, &any_cell, 2, usize::MAX), Err(Error::Budget { .. })));
    }
}

//! The finite part of the tower between categories, 2-categories,
//! sesquicategories and Gray-categories: `U`, `D`, `C`, `U∗` and `C∗`.

use std::collections::BTreeMap;

use crate::category::{tabulate_category, Category};
use crate::cell::{Cell, Table};
use crate::gray::GrayCategory;
use crate::sesqui::{Sesquicategory, TwoCategory};

/// `U`: forgets the 2-cells.
pub fn forget_u(t: &Sesquicategory) -> Category {
    t.underlying_category()
}

/// `D`: the locally discrete 2-category on a category.
pub fn add_identities_d(c: &Category) -> TwoCategory {
    let cells2 = c.arrows.iter().enumerate().map(|(i, a)| Cell::new(format!("1.{}", a.name), i, i)).collect();
    let n = c.arrows.len();
    let mut comp2 = Table::new();
    let mut lw = Table::new();
    let mut rw = Table::new();
    for f in 0..n {
        comp2.insert((f, f), f);
    }
    for (&(g, f), &h) in &c.compose {
        lw.insert((g, f), h);
        rw.insert((g, f), h);
    }
    TwoCategory(Sesquicategory {
        objects: c.objects.clone(),
        cells1: c.arrows.clone(),
        cells2,
        id1: c.identity.clone(),
        id2: (0..n).collect(),
        comp1: c.compose.clone(),
        comp2,
        lwhisk: lw,
        rwhisk: rw,
    })
}

/// `C`: exactly one 2-cell between each ordered pair of parallel 1-cells.
pub fn chaotic_c(c: &Category) -> TwoCategory {
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut cells2 = Vec::new();
    for f in 0..c.arrows.len() {
        for g in c.hom(c.src(f), c.tgt(f)) {
            index.insert((f, g), cells2.len());
            let name = if f == g { format!("1.{}", c.arrow_name(f)) } else { format!("{}>{}", c.arrow_name(f), c.arrow_name(g)) };
            cells2.push(Cell::new(name, f, g));
        }
    }
    let mut comp2 = Table::new();
    let mut lw = Table::new();
    let mut rw = Table::new();
    for (&(f, g), &a) in &index {
        for h in c.hom(c.src(f), c.tgt(f)) {
            comp2.insert((index[&(g, h)], a), index[&(f, h)]);
        }
        for k in 0..c.arrows.len() {
            if c.src(k) == c.tgt(f) {
                lw.insert((k, a), index[&(c.comp(k, f), c.comp(k, g))]);
            }
            if c.tgt(k) == c.src(f) {
                rw.insert((a, k), index[&(c.comp(f, k), c.comp(g, k))]);
            }
        }
    }
    TwoCategory(Sesquicategory {
        objects: c.objects.clone(),
        cells1: c.arrows.clone(),
        id2: (0..c.arrows.len()).map(|f| index[&(f, f)]).collect(),
        cells2,
        id1: c.identity.clone(),
        comp1: c.compose.clone(),
        comp2,
        lwhisk: lw,
        rwhisk: rw,
    })
}

/// `U∗`: discards the 3-cells.
pub fn u_star(g: &GrayCategory) -> Sesquicategory {
    g.underlying_sesquicategory()
}

/// `C∗`: a unique 3-cell between each ordered pair of parallel 2-cells.
/// Cells of dimension at most 2 keep their indices.
pub fn c_star(s: &Sesquicategory) -> GrayCategory {
    let mut index: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut cells3 = Vec::new();
    for a in 0..s.cells2.len() {
        for b in s.hom2(s.src2(a), s.tgt2(a)) {
            index.insert((a, b), cells3.len());
            let name = if a == b { format!("1.{}", s.name2(a)) } else { format!("{}>{}", s.name2(a), s.name2(b)) };
            cells3.push(Cell::new(name, a, b));
        }
    }
    let mut g = GrayCategory {
        objects: s.objects.clone(),
        cells1: s.cells1.clone(),
        cells2: s.cells2.clone(),
        id3: (0..s.cells2.len()).map(|a| index[&(a, a)]).collect(),
        cells3,
        id1: s.id1.clone(),
        id2: s.id2.clone(),
        comp1: s.comp1.clone(),
        comp2: s.comp2.clone(),
        lw2: s.lwhisk.clone(),
        rw2: s.rwhisk.clone(),
        ..Default::default()
    };
    for (&(a, b), &x) in &index {
        for c in s.hom2(s.src2(a), s.tgt2(a)) {
            g.comp3.insert((index[&(b, c)], x), index[&(a, c)]);
        }
        for (&(k, a2), &v) in &s.lwhisk {
            if a2 == a {
                g.lw3.insert((k, x), index[&(v, s.lw(k, b))]);
            }
        }
        for (&(a2, k), &v) in &s.rwhisk {
            if a2 == a {
                g.rw3.insert((x, k), index[&(v, s.rw(b, k))]);
            }
        }
        for (&(c, a2), &v) in &s.comp2 {
            if a2 == a {
                g.lw32.insert((c, x), index[&(v, s.c2(c, b))]);
            }
        }
        for c in 0..s.cells2.len() {
            if s.tgt2(c) == s.src2(a) {
                g.rw32.insert((x, c), index[&(s.c2(a, c), s.c2(b, c))]);
            }
        }
    }
    for a in 0..s.cells2.len() {
        for b in 0..s.cells2.len() {
            if s.src1(s.src2(b)) != s.tgt1(s.src2(a)) {
                continue;
            }
            let l = s.c2(s.rw(b, s.tgt2(a)), s.lw(s.src2(b), a));
            let r = s.c2(s.lw(s.tgt2(b), a), s.rw(b, s.src2(a)));
            g.interchanger.insert((b, a), index[&(l, r)]);
        }
    }
    g
}

/// Small categories used throughout: the free arrow, the free isomorphism
/// and the group Z/2.
pub fn arrow_category() -> Category {
    tabulate_category(
        vec!["0".into(), "1".into()],
        vec![((0, 0), 0, 0), ((1, 1), 1, 1), ((0, 1), 0, 1)],
        |&(a, b): &(usize, usize)| if a == b { format!("1.{a}") } else { "f".into() },
        |o| (o, o),
        |&(_, c), &(a, _)| (a, c),
    )
    .expect("arrow category")
}

/// The indiscrete category on `n` objects; `n = 2` is the free isomorphism.
pub fn indiscrete_category(n: usize) -> Category {
    let arrows = (0..n).flat_map(|a| (0..n).map(move |b| ((a, b), a, b))).collect();
    tabulate_category(
        (0..n).map(|i| i.to_string()).collect(),
        arrows,
        |&(a, b): &(usize, usize)| if a == b { format!("1.{a}") } else { format!("i{a}{b}") },
        |o| (o, o),
        |&(_, c), &(a, _)| (a, c),
    )
    .expect("indiscrete category")
}

pub fn discrete_category(n: usize) -> Category {
    tabulate_category(
        (0..n).map(|i| i.to_string()).collect(),
        (0..n).map(|a| (a, a, a)).collect(),
        |a: &usize| format!("1.{a}"),
        |o| o,
        |&g, _| g,
    )
    .expect("discrete category")
}

/// The one-object category of the cyclic group Z/n.
pub fn cyclic_group(n: usize) -> Category {
    tabulate_category(
        vec!["*".into()],
        (0..n).map(|k| (k, 0, 0)).collect(),
        |&k: &usize| if k == 0 { "e".into() } else if n == 2 { "s".into() } else { format!("r{k}") },
        |_| 0,
        |&g, &f| (g + f) % n,
    )
    .expect("cyclic group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::validate_category;
    use crate::gray::validate_gray_category;
    use crate::sesqui::validate_two_category;

    fn samples() -> Vec<Category> {
        vec![arrow_category(), indiscrete_category(2), cyclic_group(2), discrete_category(2)]
    }

    #[test]
    fn sample_categories_are_valid() {
        for c in samples() {
            assert!(validate_category(&c).unwrap().is_valid());
        }
    }

    #[test]
    fn d_and_c_are_two_categories_with_u_inverse() {
        for c in samples() {
            let d = add_identities_d(&c);
            let ch = chaotic_c(&c);
            assert!(validate_two_category(&d).unwrap().is_valid());
            let r = validate_two_category(&ch).unwrap();
            assert!(r.is_valid(), "{r}");
            assert_eq!(forget_u(&d), c);
            assert_eq!(forget_u(&ch), c);
        }
    }

    #[test]
    fn c_of_terminal_is_terminal() {
        let t = chaotic_c(&discrete_category(1));
        assert_eq!((t.objects.len(), t.cells1.len(), t.cells2.len()), (1, 1, 1));
    }

    #[test]
    fn c_star_is_valid_and_u_star_inverts_it() {
        for c in samples() {
            let s = chaotic_c(&c).0;
            let g = c_star(&s);
            let r = validate_gray_category(&g).unwrap();
            assert!(r.is_valid(), "{r}");
            assert_eq!(u_star(&g), s);
            assert!((0..g.cells3.len()).all(|x| g.inverse3(x).is_some()));
        }
    }
}

//! The bundled corpus of small Gray-categories, 2-categories, categories
//! and Gray-functors between them.

use crate::adjunctions::{add_identities_d, arrow_category, c_star, chaotic_c, cyclic_group, discrete_category, indiscrete_category};
use crate::category::Category;
use crate::computads::Computad;
use crate::cell::Cell;
use crate::constructions::{delooping, double_suspension, empty, locally_discrete, pairing, product, terminal, two_of, two_of_functor};
use crate::error::{Error, Result};
use crate::functor::GrayFunctor;
use crate::gray::GrayCategory;
use crate::path_object::path_object;
use crate::sesqui::{empty_two_category, terminal_two_category, with_identities, SesquiFunctor, Sesquicategory, TwoCategory};

/// A functor built by sending each cell to the cell of the given name with
/// the forced boundary. `rename(dim, name)` names the image.
pub fn map_by_name(dom: &GrayCategory, cod: &GrayCategory, rename: impl Fn(usize, &str) -> String) -> Result<GrayFunctor> {
    let find = |cells: &[Cell], name: String, s: usize, t: usize| {
        cells.iter().position(|c| c.name == name && c.src == s && c.tgt == t).ok_or(Error::Unknown(name))
    };
    let mut f = GrayFunctor::default();
    for o in &dom.objects {
        let n = rename(0, o);
        f.obj.push(cod.objects.iter().position(|x| *x == n).ok_or(Error::Unknown(n))?);
    }
    for c in &dom.cells1 {
        f.c1.push(find(&cod.cells1, rename(1, &c.name), f.obj[c.src], f.obj[c.tgt])?);
    }
    for c in &dom.cells2 {
        f.c2.push(find(&cod.cells2, rename(2, &c.name), f.c1[c.src], f.c1[c.tgt])?);
    }
    for c in &dom.cells3 {
        f.c3.push(find(&cod.cells3, rename(3, &c.name), f.c2[c.src], f.c2[c.tgt])?);
    }
    Ok(f)
}

/// The functor picking out object `o` from the terminal Gray-category.
pub fn point_at(g: &GrayCategory, o: usize) -> GrayFunctor {
    let f = g.id1[o];
    let a = g.id2[f];
    GrayFunctor { obj: vec![o], c1: vec![f], c2: vec![a], c3: vec![g.id3[a]] }
}

/// A one-object sesquicategory that is not a 2-category: 1-cells `1, c` with
/// `cc = c`, and the endo-2-cells of `c` the four maps of a two-element set
/// under composition, with trivial whiskering.
pub fn noncommutative_sesquicategory() -> Sesquicategory {
    // maps {0,1} -> {0,1} as (image of 0, image of 1)
    let maps = [(0, 1), (1, 0), (0, 0), (1, 1)];
    let names = ["1.c", "swap", "const0", "const1"];
    let mut s = Sesquicategory {
        objects: vec!["*".into()],
        cells1: vec![Cell::new("1", 0, 0), Cell::new("c", 0, 0)],
        id1: vec![0],
        id2: vec![0, 1],
        ..Default::default()
    };
    s.cells2.push(Cell::new("1.1", 0, 0));
    for n in names {
        s.cells2.push(Cell::new(n, 1, 1));
    }
    s.comp1 = [((0, 0), 0), ((0, 1), 1), ((1, 0), 1), ((1, 1), 1)].into_iter().collect();
    let app = |m: (usize, usize), x: usize| if x == 0 { m.0 } else { m.1 };
    for (i, &p) in maps.iter().enumerate() {
        for (j, &q) in maps.iter().enumerate() {
            // p after q
            let r = (app(p, app(q, 0)), app(p, app(q, 1)));
            let k = maps.iter().position(|&m| m == r).expect("closed under composition");
            s.comp2.insert((i + 1, j + 1), k + 1);
        }
    }
    s.comp2.insert((0, 0), 0);
    for a in 0..s.cells2.len() {
        let f = s.cells2[a].src;
        for g in 0..2 {
            // whiskering by 1 is trivial; by c it sends 1.1 to 1.c and fixes the rest
            let v = if g == 1 && f == 0 { 1 } else { a };
            s.lwhisk.insert((g, a), v);
            s.rwhisk.insert((a, g), v);
        }
    }
    s
}

pub fn category_corpus() -> Vec<(&'static str, Category)> {
    vec![("arrow", arrow_category()), ("iso", indiscrete_category(2)), ("z2", cyclic_group(2))]
}

/// The generating cofibrations of 2-categories: their domains and codomains.
pub struct GeneratingCofibration {
    pub name: &'static str,
    pub dom: TwoCategory,
    pub cod: TwoCategory,
    pub j: SesquiFunctor,
}

pub fn free_two_cell() -> TwoCategory {
    TwoCategory(with_identities(&["0", "1"], &[("f", 0, 1), ("g", 0, 1)], &[("a", "f", "g")]))
}

pub fn parallel_arrows() -> TwoCategory {
    TwoCategory(with_identities(&["0", "1"], &[("f", 0, 1), ("g", 0, 1)], &[]))
}

pub fn parallel_two_cells() -> TwoCategory {
    TwoCategory(with_identities(&["0", "1"], &[("f", 0, 1), ("g", 0, 1)], &[("a", "f", "g"), ("b", "f", "g")]))
}

pub fn free_arrow_2cat() -> TwoCategory {
    TwoCategory(with_identities(&["0", "1"], &[("f", 0, 1)], &[]))
}

pub fn two_points() -> TwoCategory {
    TwoCategory(with_identities(&["0", "1"], &[], &[]))
}

pub fn generating_cofibrations() -> Vec<GeneratingCofibration> {
    let ident = |t: &TwoCategory| SesquiFunctor::identity(t);
    let mut merged = ident(&parallel_two_cells());
    let last = merged.c2.len() - 1;
    merged.c2[last] = last - 1;
    let pt = terminal_two_category();
    vec![
        GeneratingCofibration { name: "empty->point", dom: empty_two_category(), cod: pt, j: SesquiFunctor::default() },
        GeneratingCofibration {
            name: "points->arrow",
            dom: two_points(),
            cod: free_arrow_2cat(),
            j: SesquiFunctor { obj: vec![0, 1], c1: vec![0, 1], c2: vec![0, 1] },
        },
        GeneratingCofibration { name: "parallel->2cell", dom: parallel_arrows(), cod: free_two_cell(), j: ident(&parallel_arrows()) },
        GeneratingCofibration { name: "2cells->merged", dom: parallel_two_cells(), cod: free_two_cell(), j: merged },
    ]
}

pub fn two_category_corpus() -> Vec<(&'static str, TwoCategory)> {
    let mut v = vec![
        ("terminal", terminal_two_category()),
        ("empty", empty_two_category()),
        ("two-points", two_points()),
        ("arrow", free_arrow_2cat()),
        ("parallel-arrows", parallel_arrows()),
        ("free-2cell", free_two_cell()),
        ("parallel-2cells", parallel_two_cells()),
    ];
    for (n, c) in category_corpus() {
        v.push((leak(format!("D({n})")), add_identities_d(&c)));
        v.push((leak(format!("C({n})")), chaotic_c(&c)));
    }
    v
}

fn leak(s: String) -> &'static str {
    Box::leak(s.into_boxed_str())
}

pub fn gray_corpus() -> Vec<(&'static str, GrayCategory)> {
    let mut v = vec![
        ("terminal", terminal()),
        ("empty", empty()),
        ("2_empty", two_of(&empty_two_category())),
        ("2_1", two_of(&terminal_two_category())),
        ("2_arrow", two_of(&free_arrow_2cat())),
        ("2_2cell", two_of(&free_two_cell())),
        ("B(Z/2)", delooping(2)),
        ("B(Z/3)", delooping(3)),
        ("B(Z/4)", delooping(4)),
        ("S2(Z/3)", double_suspension(3)),
        ("C*(noncomm)", c_star(&noncommutative_sesquicategory())),
        ("C*(C(z2))", c_star(&chaotic_c(&cyclic_group(2)).0)),
        ("disc2", locally_discrete(&add_identities_d(&discrete_category(2)))),
    ];
    for (n, c) in category_corpus() {
        v.push((leak(format!("LD(D({n}))")), locally_discrete(&add_identities_d(&c))));
        v.push((leak(format!("LD(C({n}))")), locally_discrete(&chaotic_c(&c))));
    }
    v
}

pub fn gray_named(name: &str) -> GrayCategory {
    gray_corpus().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g).unwrap_or_else(|| panic!("corpus object {name}"))
}

/// Gray-groupoids of the corpus.
pub fn groupoid_corpus() -> Vec<(&'static str, GrayCategory)> {
    gray_corpus().into_iter().filter(|(_, g)| crate::constructions::is_gray_groupoid(g).0).collect()
}

/// A named Gray-functor with its endpoints.
#[derive(Debug, Clone)]
pub struct CorpusMorphism {
    pub name: String,
    pub dom: GrayCategory,
    pub cod: GrayCategory,
    pub f: GrayFunctor,
}

impl CorpusMorphism {
    fn new(name: impl Into<String>, dom: GrayCategory, cod: GrayCategory, f: GrayFunctor) -> Self {
        Self { name: name.into(), dom, cod, f }
    }

    pub fn as_morphism(&self) -> crate::model::Morphism<'_> {
        crate::model::Morphism { f: &self.f, dom: &self.dom, cod: &self.cod }
    }
}

fn cyclic_map(from: usize, to: usize, k: usize) -> CorpusMorphism {
    let (a, b) = (delooping(from), delooping(to));
    let m: Vec<usize> = (0..from).map(|i| (i * k) % to).collect();
    let f = GrayFunctor { obj: vec![0], c1: m.clone(), c2: m.clone(), c3: m };
    CorpusMorphism::new(format!("B(Z/{from})->B(Z/{to})"), a, b, f)
}

/// The generating cofibrations `2_j` of Gray-categories, together with `0 → 1`.
pub fn gray_generating_cofibrations() -> Vec<CorpusMorphism> {
    let mut v = vec![CorpusMorphism::new("0->1", empty(), terminal(), GrayFunctor::default())];
    for j in generating_cofibrations() {
        let f = two_of_functor(&j.j, &j.dom, &j.cod);
        v.push(CorpusMorphism::new(format!("2_({})", j.name), two_of(&j.dom), two_of(&j.cod), f));
    }
    v
}

/// The path-object functors `D`, `P`, `P′` and `⟨P, P′⟩` for `b`.
pub fn path_morphisms(name: &str, b: &GrayCategory) -> Vec<CorpusMorphism> {
    let po = path_object(b).expect("path object of a corpus object");
    let pr = product(b, b);
    let pp = pairing(&po.p, &po.p2, b, b);
    vec![
        CorpusMorphism::new(format!("D[{name}]"), b.clone(), po.pb.clone(), po.d.clone()),
        CorpusMorphism::new(format!("P[{name}]"), po.pb.clone(), b.clone(), po.p.clone()),
        CorpusMorphism::new(format!("P'[{name}]"), po.pb.clone(), b.clone(), po.p2.clone()),
        CorpusMorphism::new(format!("<P,P'>[{name}]"), po.pb, pr.gray, pp),
    ]
}

pub fn morphism_corpus() -> Vec<CorpusMorphism> {
    let mut v = Vec::new();
    for name in ["terminal", "B(Z/2)", "S2(Z/3)", "2_1", "C*(C(z2))"] {
        let g = gray_named(name);
        v.push(CorpusMorphism::new(format!("id[{name}]"), g.clone(), g.clone(), GrayFunctor::identity(&g)));
    }
    for name in ["B(Z/2)", "S2(Z/3)", "2_1", "LD(D(iso))", "C*(C(z2))", "C*(noncomm)"] {
        let g = gray_named(name);
        v.push(CorpusMorphism::new(format!("{name}->1"), g.clone(), terminal(), GrayFunctor::to_terminal(&g)));
    }
    v.push(cyclic_map(4, 2, 1));
    v.push(cyclic_map(2, 4, 2));
    let iso = gray_named("LD(D(iso))");
    v.push(CorpusMorphism::new("1->LD(D(iso))", terminal(), iso.clone(), point_at(&iso, 0)));
    let disc = gray_named("disc2");
    v.push(CorpusMorphism::new("1->disc2", terminal(), disc.clone(), point_at(&disc, 0)));
    let s2 = gray_named("S2(Z/3)");
    let neg = map_by_name(&s2, &s2, |d, n| match (d, n) {
        (3, "t1") => "t2".into(),
        (3, "t2") => "t1".into(),
        _ => n.into(),
    })
    .expect("negation");
    v.push(CorpusMorphism::new("neg[S2(Z/3)]", s2.clone(), s2, neg));
    v.extend(path_morphisms("B(Z/2)", &delooping(2)));
    v.extend(gray_generating_cofibrations());
    v
}

pub fn morphism_named(name: &str) -> CorpusMorphism {
    morphism_corpus().into_iter().find(|m| m.name == name).unwrap_or_else(|| panic!("corpus morphism {name}"))
}

/// Small computads exercised by the free-sesquicategory checks.
pub fn computad_corpus() -> Vec<(&'static str, Computad)> {
    let build = |v: &[&str], e: &[(&str, &str, &str)], g: &[(&str, &str, &str)]| Computad::build(v, e, g).expect("corpus computad");
    vec![
        ("discrete", build(&["x", "y"], &[], &[])),
        ("loop2", build(&["x", "y", "z"], &[("f", "x", "y"), ("g", "y", "z")], &[("alpha", "f,g", "f,g")])),
        ("triangle", build(&["x", "y", "z"], &[("f", "x", "y"), ("g", "y", "z"), ("h", "x", "z")], &[("alpha", "f,g", "h")])),
        ("parallel", build(&["x", "y"], &[("f", "x", "y"), ("g", "x", "y")], &[("alpha", "f", "g"), ("beta", "f", "g")])),
        ("monoid", build(&["x"], &[("e", "x", "x")], &[("mu", "e,e", "e"), ("unit", "@x", "e")])),
        (
            "whiskered",
            build(
                &["x", "y", "z"],
                &[("f", "x", "y"), ("g", "y", "z"), ("h", "y", "z"), ("k", "x", "z"), ("m", "x", "z")],
                &[("alpha", "g", "h"), ("beta", "k", "m")],
            ),
        ),
    ]
}

pub fn computad_named(name: &str) -> Computad {
    computad_corpus().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g).unwrap_or_else(|| panic!("no corpus computad {name}"))
}

/// A file name for a corpus entry: `*` becomes `star`, `'` becomes `prime`,
/// other punctuation `_`.
pub fn file_stem(name: &str) -> String {
    let mut out = String::new();
    for ch in name.chars() {
        match ch {
            c if c.is_ascii_alphanumeric() => out.push(c),
            '*' => out.push_str("star"),
            '\'' => out.push_str("prime"),
            _ if out.ends_with('_') || out.is_empty() => {}
            _ => out.push('_'),
        }
    }
    out.trim_end_matches('_').to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::validate_gray_functor;
    use crate::gray::validate_gray_category;
    use crate::sesqui::{validate_sesquicategory, validate_two_category};

    #[test]
    fn noncommutative_example_is_a_sesquicategory_only() {
        let s = noncommutative_sesquicategory();
        assert!(validate_sesquicategory(&s).unwrap().is_valid());
        let r = validate_two_category(&TwoCategory(s)).unwrap();
        assert!(!r.is_valid());
        assert!(r.mentions("interchange"));
    }

    #[test]
    fn corpus_objects_validate() {
        for (n, t) in two_category_corpus() {
            assert!(validate_two_category(&t).unwrap().is_valid(), "{n}");
        }
        for (n, g) in gray_corpus() {
            let r = validate_gray_category(&g).unwrap();
            assert!(r.is_valid(), "{n}: {r}");
        }
    }

    #[test]
    fn corpus_morphisms_validate() {
        let ms = morphism_corpus();
        assert!(ms.len() >= 20);
        for m in &ms {
            let r = validate_gray_functor(&m.f, &m.dom, &m.cod).unwrap();
            assert!(r.is_valid(), "{}: {r}", m.name);
        }
    }
}

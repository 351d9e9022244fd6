//! Computads and the free sesquicategories on them.
//!
//! 1-cells of `HG` are paths of edges and 2-cells are paths of basic 2-cells
//! `ℓ·α·r`, so equality of cells is equality of these lists. Edge lists are
//! stored in application order: the first edge is applied first.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use crate::category::{tabulate_category, validate_functor, Category, Functor};
use crate::cell::Cell;
use crate::error::{Error, Result, StructuralError};
use crate::report::ValidationReport;
use crate::sesqui::Sesquicategory;

/// A path of edges; the empty path remembers its vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path1 {
    pub src: usize,
    pub tgt: usize,
    pub edges: Vec<usize>,
}

impl Path1 {
    pub fn empty(x: usize) -> Self {
        Self { src: x, tgt: x, edges: Vec::new() }
    }

    pub fn edge(e: usize, src: usize, tgt: usize) -> Self {
        Self { src, tgt, edges: vec![e] }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Path1) -> Result<Path1> {
        if self.tgt != next.src {
            return Err(Error::NotComposable(format!("path ending at {} followed by path starting at {}", self.tgt, next.src)));
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&next.edges);
        Ok(Path1 { src: self.src, tgt: next.tgt, edges })
    }
}

/// A basic 2-cell `left·gen·right`: `right` is applied first, `left` last.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basic2<G> {
    pub left: Path1,
    pub gen: G,
    pub right: Path1,
}

/// A vertical path of basic 2-cells, first cell first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path2<G> {
    pub source: Path1,
    pub cells: Vec<Basic2<G>>,
}

impl<G> Path2<G> {
    pub fn identity(p: Path1) -> Self {
        Self { source: p, cells: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Generator data of a possibly infinite computad.
pub trait Generators {
    type Gen: Clone + Ord + Debug;

    fn vertex_count(&self) -> usize;
    fn edge_count(&self) -> usize;
    fn edge_ends(&self, e: usize) -> (usize, usize);
    fn boundary(&self, g: &Self::Gen) -> (Path1, Path1);
    /// Generators with source `d` whose target has at most `max_len` edges.
    fn generators_from(&self, d: &Path1, max_len: usize) -> Vec<Self::Gen>;
}

/// A named 2-generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub src: Path1,
    pub tgt: Path1,
}

/// A finite computad: a graph with 2-generators between parallel paths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Computad {
    pub vertices: Vec<String>,
    pub edges: Vec<Cell>,
    pub generators: Vec<Generator>,
}

impl Computad {
    pub fn path(&self, edges: &[usize]) -> Result<Path1> {
        let (&first, _) = edges.split_first().ok_or_else(|| Error::Precondition("empty edge list needs a vertex".into()))?;
        let mut p = Path1::empty(self.edges[first].src);
        for &e in edges {
            p = p.then(&Path1::edge(e, self.edges[e].src, self.edges[e].tgt))?;
        }
        Ok(p)
    }

    /// Builds a computad from names. Paths are comma-separated edge names in
    /// application order, or `@x` for the empty path at `x`.
    pub fn build(vertices: &[&str], edges: &[(&str, &str, &str)], generators: &[(&str, &str, &str)]) -> Result<Computad> {
        let vertex = |n: &str| vertices.iter().position(|v| *v == n).ok_or_else(|| Error::Unknown(n.to_string()));
        let mut g = Computad { vertices: vertices.iter().map(|v| v.to_string()).collect(), ..Default::default() };
        for &(n, s, t) in edges {
            g.edges.push(Cell::new(n, vertex(s)?, vertex(t)?));
        }
        for &(n, s, t) in generators {
            let (src, tgt) = (g.parse_path(s)?, g.parse_path(t)?);
            g.generators.push(Generator { name: n.to_string(), src, tgt });
        }
        Ok(g)
    }

    /// Parses `f,g` or `@x` against the edge and vertex names.
    pub fn parse_path(&self, text: &str) -> Result<Path1> {
        if let Some(v) = text.strip_prefix('@') {
            let x = self.vertices.iter().position(|n| n == v).ok_or_else(|| Error::Unknown(v.to_string()))?;
            return Ok(Path1::empty(x));
        }
        let ids = text
            .split(',')
            .map(|n| self.edge_index(n.trim()).ok_or_else(|| Error::Unknown(n.trim().to_string())))
            .collect::<Result<Vec<_>>>()?;
        self.path(&ids)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn path_name(&self, p: &Path1) -> String {
        let names: Vec<&str> = p.edges.iter().map(|&e| self.edges[e].name.as_str()).collect();
        format!("[{}]", names.join(","))
    }
}

impl Generators for Computad {
    type Gen = usize;

    fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
    fn edge_count(&self) -> usize {
        self.edges.len()
    }
    fn edge_ends(&self, e: usize) -> (usize, usize) {
        (self.edges[e].src, self.edges[e].tgt)
    }
    fn boundary(&self, g: &usize) -> (Path1, Path1) {
        (self.generators[*g].src.clone(), self.generators[*g].tgt.clone())
    }
    fn generators_from(&self, d: &Path1, max_len: usize) -> Vec<usize> {
        (0..self.generators.len()).filter(|&i| &self.generators[i].src == d && self.generators[i].tgt.len() <= max_len).collect()
    }
}

fn path_ok(g: &Computad, p: &Path1) -> bool {
    let mut at = p.src;
    for &e in &p.edges {
        if g.edges[e].src != at {
            return false;
        }
        at = g.edges[e].tgt;
    }
    at == p.tgt
}

/// Checks references, path composability and the globular relations.
pub fn validate_computad(g: &Computad) -> Result<ValidationReport, StructuralError> {
    let nv = g.vertices.len();
    crate::cell::check_cells("edges", &g.edges, nv, "vertex")?;
    for (i, x) in g.generators.iter().enumerate() {
        for p in [&x.src, &x.tgt] {
            for id in [p.src, p.tgt] {
                if id >= nv {
                    return Err(StructuralError::Dangling { table: "generators", key: i.to_string(), kind: "vertex", id });
                }
            }
            if let Some(&e) = p.edges.iter().find(|&&e| e >= g.edges.len()) {
                return Err(StructuralError::Dangling { table: "generators", key: i.to_string(), kind: "edge", id: e });
            }
        }
    }
    let mut r = ValidationReport::new();
    for x in &g.generators {
        let ok = path_ok(g, &x.src) && path_ok(g, &x.tgt);
        r.check(ok, "path-composable", || vec![x.name.clone()]);
        r.check(x.src.src == x.tgt.src && x.src.tgt == x.tgt.tgt, "globular", || vec![x.name.clone()]);
    }
    Ok(r)
}

/// The free sesquicategory `HG`, with cells represented by paths.
#[derive(Debug, Clone, Copy)]
pub struct FreeSesqui<'a, T: Generators> {
    pub computad: &'a T,
}

pub fn free_sesquicategory<T: Generators>(g: &T) -> FreeSesqui<'_, T> {
    FreeSesqui { computad: g }
}

impl<'a, T: Generators> FreeSesqui<'a, T> {
    pub fn edge_path(&self, e: usize) -> Path1 {
        let (s, t) = self.computad.edge_ends(e);
        Path1::edge(e, s, t)
    }

    pub fn basic_source(&self, b: &Basic2<T::Gen>) -> Result<Path1> {
        let (d, _) = self.computad.boundary(&b.gen);
        b.right.then(&d)?.then(&b.left)
    }

    pub fn basic_target(&self, b: &Basic2<T::Gen>) -> Result<Path1> {
        let (_, c) = self.computad.boundary(&b.gen);
        b.right.then(&c)?.then(&b.left)
    }

    pub fn bare(&self, gen: T::Gen) -> Path2<T::Gen> {
        let (d, _) = self.computad.boundary(&gen);
        let basic = Basic2 { left: Path1::empty(d.tgt), right: Path1::empty(d.src), gen };
        Path2 { source: d, cells: vec![basic] }
    }

    pub fn target(&self, p: &Path2<T::Gen>) -> Result<Path1> {
        let mut at = p.source.clone();
        for b in &p.cells {
            if self.basic_source(b)? != at {
                return Err(Error::NotComposable("basic 2-cells in a path do not chain".into()));
            }
            at = self.basic_target(b)?;
        }
        Ok(at)
    }

    /// `p` followed by `q`.
    pub fn vcompose(&self, p: &Path2<T::Gen>, q: &Path2<T::Gen>) -> Result<Path2<T::Gen>> {
        if self.target(p)? != q.source {
            return Err(Error::NotComposable("target of the first 2-cell is not the source of the second".into()));
        }
        let mut cells = p.cells.clone();
        cells.extend_from_slice(&q.cells);
        Ok(Path2 { source: p.source.clone(), cells })
    }

    /// `left·p·right`.
    pub fn whisker(&self, left: &Path1, p: &Path2<T::Gen>, right: &Path1) -> Result<Path2<T::Gen>> {
        let source = right.then(&p.source)?.then(left)?;
        let cells = p
            .cells
            .iter()
            .map(|b| Ok(Basic2 { left: b.left.then(left)?, gen: b.gen.clone(), right: right.then(&b.right)? }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Path2 { source, cells })
    }

    pub fn decompose(&self, p: &Path2<T::Gen>) -> Vec<Basic2<T::Gen>> {
        p.cells.clone()
    }

    pub fn recompose(&self, source: Path1, cells: &[Basic2<T::Gen>]) -> Result<Path2<T::Gen>> {
        let p = Path2 { source, cells: cells.to_vec() };
        self.target(&p)?;
        Ok(p)
    }

    /// The whisker decomposition `(left, γ, right)` with `γ` a bare generator.
    pub fn totally_indecomposable_factor(&self, b: &Basic2<T::Gen>) -> (Path1, T::Gen, Path1) {
        (b.left.clone(), b.gen.clone(), b.right.clone())
    }

    pub fn pi_measure(&self, p: &Path2<T::Gen>) -> usize {
        p.cells.iter().map(|b| b.left.len() + b.right.len()).sum()
    }

    /// All paths starting at `a` with at most `max_len` edges.
    pub fn paths_from(&self, a: usize, max_len: usize) -> Vec<Path1> {
        let mut out = vec![Path1::empty(a)];
        let mut frontier = vec![Path1::empty(a)];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for e in 0..self.computad.edge_count() {
                    let (s, t) = self.computad.edge_ends(e);
                    if s == p.tgt {
                        let mut q = p.clone();
                        q.edges.push(e);
                        q.tgt = t;
                        next.push(q);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    pub fn paths(&self, max_len: usize) -> Vec<Path1> {
        (0..self.computad.vertex_count()).flat_map(|a| self.paths_from(a, max_len)).collect()
    }

    fn vertex_at(&self, p: &Path1, i: usize) -> usize {
        if i == 0 {
            p.src
        } else {
            self.computad.edge_ends(p.edges[i - 1]).1
        }
    }

    fn sub(&self, p: &Path1, i: usize, j: usize) -> Path1 {
        Path1 { src: self.vertex_at(p, i), tgt: self.vertex_at(p, j), edges: p.edges[i..j].to_vec() }
    }

    /// Basic 2-cells with source `p` whose target has at most `max_len` edges.
    pub fn basics_on(&self, p: &Path1, max_len: usize) -> Vec<(Basic2<T::Gen>, Path1)> {
        let n = p.len();
        let mut out = Vec::new();
        for i in 0..=n {
            for j in i..=n {
                let d = self.sub(p, i, j);
                let room = (max_len + (j - i)).saturating_sub(n);
                if n - (j - i) > max_len {
                    continue;
                }
                for gen in self.computad.generators_from(&d, room) {
                    let b = Basic2 { left: self.sub(p, j, n), gen, right: self.sub(p, 0, i) };
                    if let Ok(t) = self.basic_target(&b) {
                        out.push((b, t));
                    }
                }
            }
        }
        out
    }

    /// Every 2-cell out of `source` with at most `max_cells` basic cells,
    /// all of whose intermediate paths have at most `max_len` edges.
    pub fn path2s_from(&self, source: &Path1, max_cells: usize, max_len: usize) -> Vec<Path2<T::Gen>> {
        let mut out = vec![Path2::identity(source.clone())];
        let mut frontier = vec![(Path2::identity(source.clone()), source.clone())];
        for _ in 0..max_cells {
            let mut next = Vec::new();
            for (p, t) in &frontier {
                for (b, t2) in self.basics_on(t, max_len) {
                    let mut q = p.clone();
                    q.cells.push(b);
                    next.push((q, t2));
                }
            }
            out.extend(next.iter().map(|(p, _)| p.clone()));
            frontier = next;
        }
        out
    }

    /// Every 2-cell out of `source` whose basic cells' costs sum to at most `budget`;
    /// every cost must be positive.
    pub fn path2s_within(&self, source: &Path1, budget: usize, cost: impl Fn(&Basic2<T::Gen>) -> usize) -> Vec<Path2<T::Gen>> {
        let mut out = Vec::new();
        let mut stack = vec![(Path2::identity(source.clone()), source.clone(), 0usize)];
        while let Some((p, t, used)) = stack.pop() {
            for (b, t2) in self.basics_on(&t, budget) {
                let c = cost(&b);
                assert!(c > 0, "basic 2-cells must have positive cost");
                if used + c <= budget {
                    let mut q = p.clone();
                    q.cells.push(b);
                    stack.push((q, t2, used + c));
                }
            }
            out.push(p);
        }
        out
    }

    /// Every 2-cell within the bounds, from every source path within `max_len`.
    pub fn path2s(&self, max_cells: usize, max_len: usize) -> Vec<Path2<T::Gen>> {
        self.paths(max_len).iter().flat_map(|p| self.path2s_from(p, max_cells, max_len)).collect()
    }
}

/// `V S` truncated to 2-generators between paths of at most `max_len` edges.
/// Generators are `(p, q, σ)` with `σ` a 2-cell between the composites.
#[derive(Debug, Clone, Copy)]
pub struct UnderlyingComputad<'a> {
    pub sesqui: &'a Sesquicategory,
}

impl UnderlyingComputad<'_> {
    /// Composite of a path of 1-cells.
    pub fn eval1(&self, p: &Path1) -> usize {
        p.edges.iter().fold(self.sesqui.id1[p.src], |acc, &f| self.sesqui.c1(f, acc))
    }
}

impl Generators for UnderlyingComputad<'_> {
    type Gen = (Path1, Path1, usize);

    fn vertex_count(&self) -> usize {
        self.sesqui.objects.len()
    }
    fn edge_count(&self) -> usize {
        self.sesqui.cells1.len()
    }
    fn edge_ends(&self, e: usize) -> (usize, usize) {
        (self.sesqui.src1(e), self.sesqui.tgt1(e))
    }
    fn boundary(&self, g: &Self::Gen) -> (Path1, Path1) {
        (g.0.clone(), g.1.clone())
    }
    fn generators_from(&self, d: &Path1, max_len: usize) -> Vec<Self::Gen> {
        let h = free_sesquicategory(self);
        let f = self.eval1(d);
        let mut out = Vec::new();
        for q in h.paths_from(d.src, max_len) {
            if q.tgt != d.tgt {
                continue;
            }
            for s in self.sesqui.hom2(f, self.eval1(&q)) {
                out.push((d.clone(), q.clone(), s));
            }
        }
        out
    }
}

/// Materializes `V S` with 2-generators between paths of at most `max_len` edges.
/// Generator `k` is named `σ#k` after the 2-cell `σ` it stands for.
pub fn underlying_computad(s: &Sesquicategory, max_len: usize) -> (Computad, Vec<(Path1, Path1, usize)>) {
    let v = UnderlyingComputad { sesqui: s };
    let h = free_sesquicategory(&v);
    let mut gens = Vec::new();
    for d in h.paths(max_len) {
        gens.extend(v.generators_from(&d, max_len));
    }
    let generators = gens
        .iter()
        .enumerate()
        .map(|(k, (p, q, a))| Generator { name: format!("{}#{k}", s.name2(*a)), src: p.clone(), tgt: q.clone() })
        .collect();
    (Computad { vertices: s.objects.clone(), edges: s.cells1.clone(), generators }, gens)
}

/// An endomorphism of `HG`, given on generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    pub vertices: Vec<usize>,
    pub edges: Vec<Path1>,
    pub generators: Vec<Path2<usize>>,
}

impl Endomorphism {
    pub fn identity(g: &Computad) -> Self {
        let h = free_sesquicategory(g);
        Self {
            vertices: (0..g.vertices.len()).collect(),
            edges: (0..g.edges.len()).map(|e| h.edge_path(e)).collect(),
            generators: (0..g.generators.len()).map(|a| h.bare(a)).collect(),
        }
    }

    pub fn map1(&self, p: &Path1) -> Path1 {
        let mut out = Path1::empty(self.vertices[p.src]);
        for &e in &p.edges {
            out.edges.extend_from_slice(&self.edges[e].edges);
            out.tgt = self.edges[e].tgt;
        }
        out
    }

    pub fn map2(&self, g: &Computad, p: &Path2<usize>) -> Result<Path2<usize>> {
        let h = free_sesquicategory(g);
        let mut out = Path2::identity(self.map1(&p.source));
        for b in &p.cells {
            let w = h.whisker(&self.map1(&b.left), &self.generators[b.gen], &self.map1(&b.right))?;
            out = h.vcompose(&out, &w)?;
        }
        Ok(out)
    }

    fn check(&self, g: &Computad) -> Result<()> {
        let h = free_sesquicategory(g);
        let bad = |what: String| Err(Error::Precondition(what));
        if self.vertices.len() != g.vertices.len() || self.edges.len() != g.edges.len() || self.generators.len() != g.generators.len() {
            return bad("endomorphism does not cover every generator".into());
        }
        for (e, c) in g.edges.iter().enumerate() {
            let p = &self.edges[e];
            if !path_ok(g, p) || p.src != self.vertices[c.src] || p.tgt != self.vertices[c.tgt] {
                return bad(format!("image of edge {} is ill-typed", c.name));
            }
        }
        for (a, x) in g.generators.iter().enumerate() {
            let p = &self.generators[a];
            let typed = p.source == self.map1(&x.src) && h.target(p).ok() == Some(self.map1(&x.tgt));
            if !typed {
                return bad(format!("image of generator {} is ill-typed", x.name));
            }
        }
        Ok(())
    }
}

/// Output of the retract algorithm.
#[derive(Debug, Clone)]
pub struct RetractComputad {
    pub computad: Computad,
    /// The embedding into `HG` on the new edges and generators.
    pub on_edges: Vec<Path1>,
    pub on_generators: Vec<Path2<usize>>,
    /// π along each whisker-stripping search, one trace per candidate.
    pub pi_traces: Vec<Vec<usize>>,
    pub bound: usize,
}

/// Splits a fixed path at every proper fixed prefix.
fn cut_path(e: &Endomorphism, p: &Path1, vertex_at: impl Fn(usize) -> usize) -> Vec<Path1> {
    let mut out = Vec::new();
    let mut start = 0;
    for k in 1..=p.len() {
        let seg = Path1 { src: vertex_at(start), tgt: vertex_at(k), edges: p.edges[start..k].to_vec() };
        if e.map1(&seg) == seg {
            out.push(seg);
            start = k;
        }
    }
    out
}

/// A retract of `HG` is free: given the idempotent `e = I∘R` on `HG`, builds the
/// computad of totally indecomposable cells of its image and checks the
/// resulting isomorphism on all cells within `bound`.
pub fn retract_computad(g: &Computad, e: &Endomorphism, bound: usize) -> Result<RetractComputad> {
    e.check(g)?;
    let h = free_sesquicategory(g);
    for (x, c) in g.edges.iter().enumerate() {
        if e.map1(&e.edges[x]) != e.edges[x] {
            return Err(Error::Precondition(format!("R∘I is not the identity on the image of edge {}", c.name)));
        }
    }
    for (a, x) in g.generators.iter().enumerate() {
        if e.map2(g, &e.generators[a])? != e.generators[a] {
            return Err(Error::Precondition(format!("R∘I is not the identity on the image of generator {}", x.name)));
        }
    }
    let vertices: Vec<usize> = (0..g.vertices.len()).filter(|&v| e.vertices[v] == v).collect();
    let vpos: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let vertex_at = |p: &Path1, i: usize| if i == 0 { p.src } else { g.edges[p.edges[i - 1]].tgt };

    // Generating 1-cells: the indecomposable fixed paths, all of which are images of edges.
    let mut ones: Vec<Path1> = Vec::new();
    for p in &e.edges {
        if !p.is_empty() && cut_path(e, p, |i| vertex_at(p, i)).len() == 1 && !ones.contains(p) {
            ones.push(p.clone());
        }
    }
    let one_pos: BTreeMap<Path1, usize> = ones.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    let factor1 = |p: &Path1| -> Result<Path1> {
        let mut out = Path1::empty(vpos[&p.src]);
        for seg in cut_path(e, p, |i| vertex_at(p, i)) {
            let k = *one_pos.get(&seg).ok_or_else(|| Error::Internal(format!("fixed path {} has no generating factor", g.path_name(&seg))))?;
            out.edges.push(k);
        }
        out.tgt = vpos[&p.tgt];
        Ok(out)
    };

    // Generating 2-cells: strip whiskers off each indecomposable image of a generator.
    let is_fixed2 = |p: &Path2<usize>| e.map2(g, p).map(|q| &q == p);
    let mut twos: Vec<Path2<usize>> = Vec::new();
    let mut traces = Vec::new();
    for img in &e.generators {
        for seg in cut_path2(&h, img, &is_fixed2)? {
            let (core, trace) = strip_whiskers(g, &h, e, seg, &is_fixed2)?;
            traces.push(trace);
            if !twos.contains(&core) {
                twos.push(core);
            }
        }
    }

    let edges: Vec<Cell> = ones
        .iter()
        .map(|p| Cell::new(p.edges.iter().map(|&x| g.edges[x].name.as_str()).collect::<Vec<_>>().join("."), vpos[&p.src], vpos[&p.tgt]))
        .collect();
    let mut generators = Vec::new();
    for t in &twos {
        let name = t.cells.iter().map(|b| g.generators[b.gen].name.as_str()).collect::<Vec<_>>().join(";");
        generators.push(Generator { name, src: factor1(&t.source)?, tgt: factor1(&h.target(t)?)? });
    }
    let computad = Computad { vertices: vertices.iter().map(|&v| g.vertices[v].clone()).collect(), edges, generators };
    let out = RetractComputad { computad, on_edges: ones, on_generators: twos, pi_traces: traces, bound };
    verify_retract(g, e, &out)?;
    Ok(out)
}

/// Splits a fixed 2-cell at every proper fixed prefix.
fn cut_path2(
    h: &FreeSesqui<'_, Computad>,
    p: &Path2<usize>,
    is_fixed: &impl Fn(&Path2<usize>) -> Result<bool>,
) -> Result<Vec<Path2<usize>>> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut src = p.source.clone();
    for k in 1..=p.len() {
        let seg = Path2 { source: src.clone(), cells: p.cells[start..k].to_vec() };
        if is_fixed(&seg)? {
            src = h.target(&seg)?;
            out.push(seg);
            start = k;
        }
    }
    Ok(out)
}

/// Repeatedly writes `θ = L·β·R` with `β`, `L`, `R` fixed and `L`, `R` not both
/// empty, returning the final `β` and the π values visited.
fn strip_whiskers(
    g: &Computad,
    h: &FreeSesqui<'_, Computad>,
    e: &Endomorphism,
    mut theta: Path2<usize>,
    is_fixed: &impl Fn(&Path2<usize>) -> Result<bool>,
) -> Result<(Path2<usize>, Vec<usize>)> {
    let mut trace = vec![h.pi_measure(&theta)];
    'outer: loop {
        let max_l = theta.cells.iter().map(|b| b.left.len()).min().unwrap_or(0);
        let max_r = theta.cells.iter().map(|b| b.right.len()).min().unwrap_or(0);
        let mut options: Vec<(usize, usize)> = Vec::new();
        for l in 0..=max_l {
            for r in 0..=max_r {
                if l + r > 0 {
                    options.push((l, r));
                }
            }
        }
        options.sort_by_key(|&(l, r)| std::cmp::Reverse(l + r));
        for (l, r) in options {
            if let Some(beta) = peel(g, &theta, l, r) {
                let (outer_l, outer_r) = whiskers_of(g, &theta, l, r);
                if e.map1(&outer_l) == outer_l && e.map1(&outer_r) == outer_r && is_fixed(&beta)? {
                    theta = beta;
                    trace.push(h.pi_measure(&theta));
                    continue 'outer;
                }
            }
        }
        return Ok((theta, trace));
    }
}

fn tail(g: &Computad, p: &Path1, k: usize) -> (Path1, Path1) {
    let n = p.len();
    let cut = if n - k == 0 { p.src } else { g.edges[p.edges[n - k - 1]].tgt };
    (Path1 { src: p.src, tgt: cut, edges: p.edges[..n - k].to_vec() }, Path1 { src: cut, tgt: p.tgt, edges: p.edges[n - k..].to_vec() })
}

fn head(g: &Computad, p: &Path1, k: usize) -> (Path1, Path1) {
    let cut = if k == 0 { p.src } else { g.edges[p.edges[k - 1]].tgt };
    (Path1 { src: p.src, tgt: cut, edges: p.edges[..k].to_vec() }, Path1 { src: cut, tgt: p.tgt, edges: p.edges[k..].to_vec() })
}

/// The outer whiskers of length `l` (last applied) and `r` (first applied).
fn whiskers_of(g: &Computad, theta: &Path2<usize>, l: usize, r: usize) -> (Path1, Path1) {
    (tail(g, &theta.source, l).1, head(g, &theta.source, r).0)
}

/// `θ` with `l` edges removed from every left whisker and `r` from every
/// right whisker, if those edges agree across all basic cells.
fn peel(g: &Computad, theta: &Path2<usize>, l: usize, r: usize) -> Option<Path2<usize>> {
    let (outer_l, outer_r) = whiskers_of(g, theta, l, r);
    let mut cells = Vec::new();
    for b in &theta.cells {
        let (inner_l, ol) = tail(g, &b.left, l);
        let (or, inner_r) = head(g, &b.right, r);
        if ol != outer_l || or != outer_r {
            return None;
        }
        cells.push(Basic2 { left: inner_l, gen: b.gen, right: inner_r });
    }
    let source = head(g, &tail(g, &theta.source, l).0, r).1;
    Some(Path2 { source, cells })
}

/// Checks that the embedding of `H(result)` into `HG` is injective and hits
/// every fixed cell within the bound.
fn verify_retract(g: &Computad, e: &Endomorphism, out: &RetractComputad) -> Result<()> {
    let k = out.bound;
    let h = free_sesquicategory(g);
    let hr = free_sesquicategory(&out.computad);
    let embed = Endomorphism {
        vertices: Vec::new(),
        edges: out.on_edges.clone(),
        generators: out.on_generators.clone(),
    };
    let vmap: Vec<usize> = (0..g.vertices.len()).filter(|&v| e.vertices[v] == v).collect();
    let map1 = |p: &Path1| {
        let mut q = Path1::empty(vmap[p.src]);
        for &x in &p.edges {
            q.edges.extend_from_slice(&embed.edges[x].edges);
            q.tgt = embed.edges[x].tgt;
        }
        q
    };
    let map2 = |p: &Path2<usize>| -> Result<Path2<usize>> {
        let mut q = Path2::identity(map1(&p.source));
        for b in &p.cells {
            let w = h.whisker(&map1(&b.left), &embed.generators[b.gen], &map1(&b.right))?;
            q = h.vcompose(&q, &w)?;
        }
        Ok(q)
    };
    let mut image1 = BTreeSet::new();
    for p in hr.paths(k) {
        let q = map1(&p);
        if e.map1(&q) != q || !image1.insert(q) {
            return Err(Error::Internal("embedding of the retract is not injective on 1-cells".into()));
        }
    }
    for p in h.paths(k) {
        if e.map1(&p) == p && !image1.contains(&p) {
            return Err(Error::Internal(format!("fixed path {} is missed by the retract", g.path_name(&p))));
        }
    }
    let mut image2 = BTreeSet::new();
    for p in hr.path2s(k, k) {
        let q = map2(&p)?;
        if e.map2(g, &q)? != q || !image2.insert(q) {
            return Err(Error::Internal("embedding of the retract is not injective on 2-cells".into()));
        }
    }
    for p in h.path2s(k, k) {
        if e.map2(g, &p)? == p && !image2.contains(&p) {
            return Err(Error::Internal("a fixed 2-cell is missed by the retract".into()));
        }
    }
    Ok(())
}

/// A morphism of `A□B`: alternating blocks, first applied first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FunnyWord {
    pub src: (usize, usize),
    pub blocks: Vec<Block>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Block {
    Left(usize),
    Right(usize),
}

fn funny_reduce(a: &Category, b: &Category, blocks: Vec<Block>) -> Vec<Block> {
    let mut out: Vec<Block> = Vec::new();
    for x in blocks {
        let x = match (out.last().copied(), x) {
            (Some(Block::Left(f)), Block::Left(g)) => {
                out.pop();
                Block::Left(a.comp(g, f))
            }
            (Some(Block::Right(f)), Block::Right(g)) => {
                out.pop();
                Block::Right(b.comp(g, f))
            }
            _ => x,
        };
        let is_id = match x {
            Block::Left(f) => a.is_identity(f),
            Block::Right(g) => b.is_identity(g),
        };
        if !is_id {
            out.push(x);
        }
    }
    out
}

/// The funny tensor product, with morphisms written as reduced words of at
/// most `max_blocks` blocks; longer words mean the product is infinite.
/// Arrow `i` of the result is the `i`-th returned word.
pub fn funny_tensor(a: &Category, b: &Category, max_blocks: usize) -> Result<(Category, Vec<FunnyWord>)> {
    let nb = b.objects.len();
    let obj = |x: usize, y: usize| x * nb + y;
    let mut objects = Vec::new();
    for x in &a.objects {
        for y in &b.objects {
            objects.push(format!("({x},{y})"));
        }
    }
    let end = |w: &FunnyWord| {
        w.blocks.iter().fold(w.src, |(x, y), bl| match *bl {
            Block::Left(f) => (a.tgt(f), y),
            Block::Right(g) => (x, b.tgt(g)),
        })
    };
    let mut words = Vec::new();
    for x in 0..a.objects.len() {
        for y in 0..b.objects.len() {
            let mut frontier = vec![FunnyWord { src: (x, y), blocks: Vec::new() }];
            words.push(frontier[0].clone());
            for depth in 0..=max_blocks {
                let mut next = Vec::new();
                for w in &frontier {
                    let (cx, cy) = end(w);
                    let last = w.blocks.last().copied();
                    if !matches!(last, Some(Block::Left(_))) {
                        next.extend((0..a.arrows.len()).filter(|&f| a.src(f) == cx && !a.is_identity(f)).map(Block::Left).map(|bl| extend(w, bl)));
                    }
                    if !matches!(last, Some(Block::Right(_))) {
                        next.extend((0..b.arrows.len()).filter(|&g| b.src(g) == cy && !b.is_identity(g)).map(Block::Right).map(|bl| extend(w, bl)));
                    }
                }
                if depth == max_blocks {
                    if !next.is_empty() {
                        return Err(Error::Budget { context: "funny tensor word length".into(), budget: max_blocks });
                    }
                    break;
                }
                words.extend(next.iter().cloned());
                frontier = next;
            }
        }
    }
    let arrows: Vec<(FunnyWord, usize, usize)> = words
        .iter()
        .map(|w| {
            let (x, y) = end(w);
            (w.clone(), obj(w.src.0, w.src.1), obj(x, y))
        })
        .collect();
    let name = |w: &FunnyWord| {
        if w.blocks.is_empty() {
            return format!("1{}", objects[obj(w.src.0, w.src.1)]);
        }
        w.blocks
            .iter()
            .map(|bl| match *bl {
                Block::Left(f) => format!("<{}>", a.arrow_name(f)),
                Block::Right(g) => format!("[{}]", b.arrow_name(g)),
            })
            .collect::<Vec<_>>()
            .join("")
    };
    let by_obj: Vec<(usize, usize)> = (0..a.objects.len()).flat_map(|x| (0..nb).map(move |y| (x, y))).collect();
    let cat = tabulate_category(
        objects.clone(),
        arrows,
        name,
        |o| FunnyWord { src: by_obj[o], blocks: Vec::new() },
        |g, f| {
            let mut blocks = f.blocks.clone();
            blocks.extend_from_slice(&g.blocks);
            FunnyWord { src: f.src, blocks: funny_reduce(a, b, blocks) }
        },
    )
    .ok_or_else(|| Error::Internal("funny tensor words are not closed under composition".into()))?;
    Ok((cat, words))
}

fn extend(w: &FunnyWord, bl: Block) -> FunnyWord {
    let mut v = w.clone();
    v.blocks.push(bl);
    v
}

/// Funny tensors are finite exactly when words cannot alternate forever.
pub const FUNNY_MAX_BLOCKS: usize = 16;

/// An isomorphism of categories together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    pub forward: Functor,
    pub backward: Functor,
}

fn check_iso(iso: &Isomorphism, x: &Category, y: &Category) -> Result<()> {
    for (f, d, c) in [(&iso.forward, x, y), (&iso.backward, y, x)] {
        let r = validate_functor(f, d, c)?;
        if !r.is_valid() {
            return Err(Error::Internal(format!("not a functor: {r}")));
        }
    }
    let round = |f: &Functor, g: &Functor, n_obj: usize, n_arr: usize| {
        (0..n_obj).all(|o| g.obj[f.obj[o]] == o) && (0..n_arr).all(|a| g.arr[f.arr[a]] == a)
    };
    if !round(&iso.forward, &iso.backward, x.objects.len(), x.arrows.len()) || !round(&iso.backward, &iso.forward, y.objects.len(), y.arrows.len()) {
        return Err(Error::Internal("functors are not mutually inverse".into()));
    }
    Ok(())
}

/// The unit isomorphism `A□1 ≅ A`, verified.
pub fn funny_unit(a: &Category) -> Result<(Category, Isomorphism)> {
    let one = Category { objects: vec!["*".into()], arrows: vec![Cell::new("1", 0, 0)], identity: vec![0], compose: [((0, 0), 0)].into_iter().collect() };
    let (t, words) = funny_tensor(a, &one, FUNNY_MAX_BLOCKS)?;
    let mut forward = Functor { obj: (0..t.objects.len()).collect(), arr: vec![0; t.arrows.len()] };
    let mut backward = Functor { obj: (0..a.objects.len()).collect(), arr: vec![0; a.arrows.len()] };
    for (i, w) in words.iter().enumerate() {
        let f = match w.blocks.as_slice() {
            [] => a.identity[w.src.0],
            [Block::Left(f)] => *f,
            _ => return Err(Error::Internal("unexpected word in a unit tensor".into())),
        };
        forward.arr[i] = f;
        backward.arr[f] = i;
    }
    let iso = Isomorphism { forward, backward };
    check_iso(&iso, &t, a)?;
    Ok((t, iso))
}

/// The symmetry `A□B ≅ B□A`, verified.
pub fn funny_symmetry(a: &Category, b: &Category) -> Result<(Category, Category, Isomorphism)> {
    let (ab, wab) = funny_tensor(a, b, FUNNY_MAX_BLOCKS)?;
    let (ba, wba) = funny_tensor(b, a, FUNNY_MAX_BLOCKS)?;
    let (na, nb) = (a.objects.len(), b.objects.len());
    let swap = |w: &FunnyWord| FunnyWord {
        src: (w.src.1, w.src.0),
        blocks: w.blocks.iter().map(|bl| match *bl {
            Block::Left(f) => Block::Right(f),
            Block::Right(g) => Block::Left(g),
        }).collect(),
    };
    let pos_ab: BTreeMap<&FunnyWord, usize> = wab.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let pos_ba: BTreeMap<&FunnyWord, usize> = wba.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let lookup = |m: &BTreeMap<&FunnyWord, usize>, w: FunnyWord| m.get(&w).copied().ok_or_else(|| Error::Internal("swapped word is missing".into()));
    let forward = Functor {
        obj: (0..na * nb).map(|o| (o % nb) * na + o / nb).collect(),
        arr: wab.iter().map(|w| lookup(&pos_ba, swap(w))).collect::<Result<_>>()?,
    };
    let backward = Functor {
        obj: (0..na * nb).map(|o| (o % na) * nb + o / na).collect(),
        arr: wba.iter().map(|w| lookup(&pos_ab, swap(w))).collect::<Result<_>>()?,
    };
    let iso = Isomorphism { forward, backward };
    check_iso(&iso, &ab, &ba)?;
    Ok((ab, ba, iso))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adjunctions::arrow_category;
    use crate::corpus::{category_corpus, computad_corpus, computad_named};
    use crate::sesqui::terminal_two_category;

    #[test]
    fn corpus_computads_are_valid() {
        for (name, g) in computad_corpus() {
            assert!(validate_computad(&g).unwrap().is_valid(), "{name}");
        }
    }

    #[test]
    fn mismatched_endpoints_name_the_generator() {
        let mut g = computad_named("triangle");
        g.generators[0].tgt = Path1::edge(0, 0, 1);
        let r = validate_computad(&g).unwrap();
        assert_eq!(r.violations[0].axiom, "globular");
        assert_eq!(r.violations[0].cells, vec!["alpha".to_string()]);
    }

    #[test]
    fn dangling_edge_is_structural() {
        let mut g = computad_named("triangle");
        g.generators[0].src.edges.push(9);
        assert!(validate_computad(&g).is_err());
    }

    #[test]
    fn endo_two_cells_of_a_loop_are_powers() {
        let g = computad_named("loop2");
        let h = free_sesquicategory(&g);
        let gf = g.parse_path("f,g").unwrap();
        let all = h.path2s_from(&gf, 3, 2);
        for k in 0..=3 {
            let n = all.iter().filter(|p| p.len() == k && h.target(p).unwrap() == gf).count();
            assert_eq!(n, 1, "length {k}");
        }
    }

    #[test]
    fn one_edge_homs() {
        let g = Computad::build(&["x", "y"], &[("f", "x", "y")], &[]).unwrap();
        let h = free_sesquicategory(&g);
        let ps = h.paths(3);
        assert_eq!(ps.iter().filter(|p| p.src == 0 && p.tgt == 1).count(), 1);
        assert_eq!(ps.iter().filter(|p| p.src == 0 && p.tgt == 0).count(), 1);
    }

    #[test]
    fn whiskering_laws() {
        let g = computad_named("whiskered");
        let h = free_sesquicategory(&g);
        let f = g.parse_path("f").unwrap();
        let z = Path1::empty(2);
        let p = h.bare(0);
        let q = Path2::identity(h.target(&p).unwrap());
        assert_eq!(h.vcompose(&p, &q).unwrap(), p);
        assert_eq!(h.whisker(&z, &p, &Path1::empty(1)).unwrap(), p);
        let pq = h.vcompose(&p, &q).unwrap();
        let lhs = h.whisker(&z, &pq, &f).unwrap();
        let rhs = h.vcompose(&h.whisker(&z, &p, &f).unwrap(), &h.whisker(&z, &q, &f).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(h.vcompose(&p, &h.bare(1)).is_err());
    }

    #[test]
    fn factorization_and_pi() {
        for (name, g) in computad_corpus() {
            let h = free_sesquicategory(&g);
            let cells = h.path2s(3, 3);
            for p in &cells {
                let parts = h.decompose(p);
                let back = h.recompose(p.source.clone(), &parts).unwrap();
                assert_eq!(&back, p, "{name}");
                let pi: usize = parts.iter().map(|b| {
                    let (l, _, r) = h.totally_indecomposable_factor(b);
                    l.len() + r.len()
                }).sum();
                assert_eq!(pi, h.pi_measure(p));
            }
            for p in cells.iter().take(40) {
                for q in cells.iter().take(40) {
                    if let Ok(pq) = h.vcompose(p, q) {
                        assert_eq!(h.pi_measure(&pq), h.pi_measure(p) + h.pi_measure(q));
                    }
                }
            }
        }
    }

    #[test]
    fn whisker_adds_to_pi() {
        let g = computad_named("whiskered");
        let h = free_sesquicategory(&g);
        let f = g.parse_path("f").unwrap();
        for p in h.path2s(2, 2) {
            if p.source.src == 1 && p.source.tgt == 2 {
                let w = h.whisker(&Path1::empty(2), &p, &f).unwrap();
                assert_eq!(h.pi_measure(&w), h.pi_measure(&p) + p.len());
            }
        }
        let b = Basic2 { left: Path1::empty(2), gen: 0, right: f.clone() };
        assert_eq!(h.totally_indecomposable_factor(&b), (Path1::empty(2), 0, f));
    }

    #[test]
    fn retract_of_identity_reproduces_counts() {
        for (name, g) in computad_corpus() {
            let r = retract_computad(&g, &Endomorphism::identity(&g), 3).unwrap();
            assert_eq!(r.computad.vertices.len(), g.vertices.len(), "{name}");
            assert_eq!(r.computad.edges.len(), g.edges.len(), "{name}");
            assert_eq!(r.computad.generators.len(), g.generators.len(), "{name}");
            assert!(validate_computad(&r.computad).unwrap().is_valid());
        }
    }

    #[test]
    fn collapsing_parallel_generators() {
        let g = computad_named("parallel");
        let mut e = Endomorphism::identity(&g);
        e.generators[1] = e.generators[0].clone();
        let r = retract_computad(&g, &e, 3).unwrap();
        assert_eq!(r.computad.generators.len(), 1);
        assert_eq!(r.computad.generators[0].name, "alpha");
    }

    #[test]
    fn whiskered_generator_reduces_to_its_core() {
        let g = computad_named("whiskered");
        let h = free_sesquicategory(&g);
        let mut e = Endomorphism::identity(&g);
        e.edges[3] = g.parse_path("f,g").unwrap();
        e.edges[4] = g.parse_path("f,h").unwrap();
        e.generators[1] = h.whisker(&Path1::empty(2), &h.bare(0), &g.parse_path("f").unwrap()).unwrap();
        let r = retract_computad(&g, &e, 3).unwrap();
        assert_eq!(r.computad.edges.len(), 3);
        assert_eq!(r.computad.generators.len(), 1);
        assert_eq!(r.on_generators[0], h.bare(0));
        assert!(r.pi_traces.iter().any(|t| t == &vec![1, 0]));
        for t in &r.pi_traces {
            assert!(t.windows(2).all(|w| w[1] < w[0]));
        }
    }

    #[test]
    fn non_idempotent_input_is_rejected() {
        let g = Computad::build(&["x", "y"], &[("f", "x", "y"), ("g", "x", "y")], &[]).unwrap();
        let mut e = Endomorphism::identity(&g);
        e.edges.swap(0, 1);
        match retract_computad(&g, &e, 2) {
            Err(Error::Precondition(m)) => assert!(m.contains("edge f")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn underlying_computad_of_terminal() {
        let t = terminal_two_category();
        let (g, _) = underlying_computad(&t, 2);
        assert_eq!(g.generators.len(), 9);
        assert!(validate_computad(&g).unwrap().is_valid());
    }

    #[test]
    fn funny_square_of_arrows() {
        let a = arrow_category();
        let (t, _) = funny_tensor(&a, &a, FUNNY_MAX_BLOCKS).unwrap();
        assert_eq!(t.objects.len(), 4);
        assert_eq!(t.hom(0, 3).len(), 2);
        assert!(crate::category::validate_category(&t).unwrap().is_valid());
    }

    #[test]
    fn funny_unit_and_symmetry() {
        for (name, c) in category_corpus() {
            let (t, _) = funny_unit(&c).unwrap();
            assert_eq!(t.arrows.len(), c.arrows.len(), "{name}");
        }
        let a = arrow_category();
        let (ab, ba, _) = funny_symmetry(&a, &crate::adjunctions::indiscrete_category(2)).unwrap();
        assert_eq!(ab.arrows.len(), ba.arrows.len());
    }

    #[test]
    fn alternating_loops_are_infinite() {
        let z = crate::adjunctions::cyclic_group(2);
        assert!(matches!(funny_tensor(&z, &z, 6), Err(Error::Budget { .. })));
    }
}

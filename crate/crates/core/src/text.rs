//! Canonical line-oriented text formats.
//!
//! Every structure opens with a header line and lists its sections in a
//! fixed order. Cells are written `index src -> tgt name`, with the name
//! running to the end of the line; tables are written `a b -> value`.
//! Printing a parsed canonical file reproduces it byte for byte.

use std::fmt::Write as _;

use crate::category::Category;
use crate::cell::{Cell, Table};
use crate::computads::{Basic2, Computad, Endomorphism, Generator, Path1, Path2};
use crate::error::{Error, Result};
use crate::functor::GrayFunctor;
use crate::gray::GrayCategory;
use crate::sesqui::Sesquicategory;
use crate::simplicial::SimplicialSet;

/// A parse failure, reported against a 1-based line.
fn bad(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, message: msg.into() }
}

struct Reader<'a> {
    lines: Vec<&'a str>,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        let mut lines: Vec<&str> = text.split('\n').collect();
        if lines.last() == Some(&"") {
            lines.pop();
        }
        Self { lines, pos: 0 }
    }

    fn line_no(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<&'a str> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self) -> Result<&'a str> {
        let l = self.peek().ok_or_else(|| bad(self.line_no(), "unexpected end of input"))?;
        self.pos += 1;
        Ok(l)
    }

    fn expect(&mut self, want: &str) -> Result<()> {
        let n = self.line_no();
        let got = self.next()?;
        if got != want {
            return Err(bad(n, format!("expected `{want}`, found `{got}`")));
        }
        Ok(())
    }

    /// Lines up to the next section header or `end`.
    fn body(&mut self) -> Vec<(usize, &'a str)> {
        let mut out = Vec::new();
        while let Some(l) = self.peek() {
            if l.starts_with('[') || l == "end" {
                break;
            }
            out.push((self.line_no(), l));
            self.pos += 1;
        }
        out
    }

    fn finish(&mut self) -> Result<()> {
        self.expect("end")?;
        if let Some(l) = self.peek() {
            return Err(bad(self.line_no(), format!("trailing content `{l}`")));
        }
        Ok(())
    }
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| bad(line, format!("expected a number, found `{tok}`")))
}

fn check_index(line: usize, tok: &str, want: usize) -> Result<()> {
    if num(line, tok)? != want {
        return Err(bad(line, format!("entries must be numbered consecutively from 0; expected {want}")));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Sections shared by the tabulated structures

fn write_names(out: &mut String, title: &str, names: &[String]) {
    let _ = writeln!(out, "[{title}]");
    for (i, n) in names.iter().enumerate() {
        let _ = writeln!(out, "{i} {n}");
    }
}

fn read_names(r: &mut Reader, title: &str) -> Result<Vec<String>> {
    r.expect(&format!("[{title}]"))?;
    let mut out = Vec::new();
    for (n, l) in r.body() {
        let (i, name) = l.split_once(' ').ok_or_else(|| bad(n, "expected `index name`"))?;
        check_index(n, i, out.len())?;
        out.push(name.to_string());
    }
    Ok(out)
}

fn write_cells(out: &mut String, title: &str, cells: &[Cell]) {
    let _ = writeln!(out, "[{title}]");
    for (i, c) in cells.iter().enumerate() {
        let _ = writeln!(out, "{i} {} -> {} {}", c.src, c.tgt, c.name);
    }
}

fn read_cells(r: &mut Reader, title: &str) -> Result<Vec<Cell>> {
    r.expect(&format!("[{title}]"))?;
    let mut out = Vec::new();
    for (n, l) in r.body() {
        let parts: Vec<&str> = l.splitn(5, ' ').collect();
        if parts.len() != 5 || parts[2] != "->" {
            return Err(bad(n, "expected `index src -> tgt name`"));
        }
        check_index(n, parts[0], out.len())?;
        out.push(Cell::new(parts[4], num(n, parts[1])?, num(n, parts[3])?));
    }
    Ok(out)
}

fn write_vec(out: &mut String, title: &str, v: &[usize]) {
    let _ = writeln!(out, "[{title}]");
    for (i, x) in v.iter().enumerate() {
        let _ = writeln!(out, "{i} -> {x}");
    }
}

fn read_vec(r: &mut Reader, title: &str) -> Result<Vec<usize>> {
    r.expect(&format!("[{title}]"))?;
    let mut out = Vec::new();
    for (n, l) in r.body() {
        let parts: Vec<&str> = l.split(' ').collect();
        if parts.len() != 3 || parts[1] != "->" {
            return Err(bad(n, "expected `index -> value`"));
        }
        check_index(n, parts[0], out.len())?;
        out.push(num(n, parts[2])?);
    }
    Ok(out)
}

fn write_table(out: &mut String, title: &str, t: &Table) {
    let _ = writeln!(out, "[{title}]");
    for (&(a, b), v) in t {
        let _ = writeln!(out, "{a} {b} -> {v}");
    }
}

fn read_table(r: &mut Reader, title: &str) -> Result<Table> {
    r.expect(&format!("[{title}]"))?;
    let mut out = Table::new();
    let mut last = None;
    for (n, l) in r.body() {
        let parts: Vec<&str> = l.split(' ').collect();
        if parts.len() != 4 || parts[2] != "->" {
            return Err(bad(n, "expected `a b -> value`"));
        }
        let key = (num(n, parts[0])?, num(n, parts[1])?);
        if last.is_some_and(|k| k >= key) {
            return Err(bad(n, "table keys must be strictly increasing"));
        }
        last = Some(key);
        out.insert(key, num(n, parts[3])?);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Categories, sesquicategories, Gray-categories, Gray-functors

pub fn print_category(c: &Category) -> String {
    let mut out = String::from("category\n");
    write_names(&mut out, "objects", &c.objects);
    write_cells(&mut out, "arrows", &c.arrows);
    write_vec(&mut out, "identity", &c.identity);
    write_table(&mut out, "compose", &c.compose);
    out.push_str("end\n");
    out
}

pub fn parse_category(text: &str) -> Result<Category> {
    let mut r = Reader::new(text);
    r.expect("category")?;
    let c = Category {
        objects: read_names(&mut r, "objects")?,
        arrows: read_cells(&mut r, "arrows")?,
        identity: read_vec(&mut r, "identity")?,
        compose: read_table(&mut r, "compose")?,
    };
    r.finish()?;
    Ok(c)
}

fn print_sesqui_with(header: &str, s: &Sesquicategory) -> String {
    let mut out = format!("{header}\n");
    write_names(&mut out, "objects", &s.objects);
    write_cells(&mut out, "cells1", &s.cells1);
    write_cells(&mut out, "cells2", &s.cells2);
    write_vec(&mut out, "id1", &s.id1);
    write_vec(&mut out, "id2", &s.id2);
    write_table(&mut out, "comp1", &s.comp1);
    write_table(&mut out, "comp2", &s.comp2);
    write_table(&mut out, "lwhisk", &s.lwhisk);
    write_table(&mut out, "rwhisk", &s.rwhisk);
    out.push_str("end\n");
    out
}

/// Printed with a `sesquicategory` header; [`print_two_category`] uses `2-category`.
pub fn print_sesquicategory(s: &Sesquicategory) -> String {
    print_sesqui_with("sesquicategory", s)
}

pub fn print_two_category(s: &Sesquicategory) -> String {
    print_sesqui_with("2-category", s)
}

/// Parses either header; the flag says whether it was `2-category`.
pub fn parse_sesquicategory(text: &str) -> Result<(Sesquicategory, bool)> {
    let mut r = Reader::new(text);
    let header = r.next()?;
    let two = match header {
        "sesquicategory" => false,
        "2-category" => true,
        other => return Err(bad(1, format!("expected `sesquicategory` or `2-category`, found `{other}`"))),
    };
    let s = Sesquicategory {
        objects: read_names(&mut r, "objects")?,
        cells1: read_cells(&mut r, "cells1")?,
        cells2: read_cells(&mut r, "cells2")?,
        id1: read_vec(&mut r, "id1")?,
        id2: read_vec(&mut r, "id2")?,
        comp1: read_table(&mut r, "comp1")?,
        comp2: read_table(&mut r, "comp2")?,
        lwhisk: read_table(&mut r, "lwhisk")?,
        rwhisk: read_table(&mut r, "rwhisk")?,
    };
    r.finish()?;
    Ok((s, two))
}

pub fn print_gray(g: &GrayCategory) -> String {
    let mut out = String::from("gray-category\n");
    write_names(&mut out, "objects", &g.objects);
    write_cells(&mut out, "cells1", &g.cells1);
    write_cells(&mut out, "cells2", &g.cells2);
    write_cells(&mut out, "cells3", &g.cells3);
    write_vec(&mut out, "id1", &g.id1);
    write_vec(&mut out, "id2", &g.id2);
    write_vec(&mut out, "id3", &g.id3);
    for (title, t) in [
        ("comp1", &g.comp1),
        ("comp2", &g.comp2),
        ("comp3", &g.comp3),
        ("lw2", &g.lw2),
        ("rw2", &g.rw2),
        ("lw3", &g.lw3),
        ("rw3", &g.rw3),
        ("lw32", &g.lw32),
        ("rw32", &g.rw32),
        ("interchanger", &g.interchanger),
    ] {
        write_table(&mut out, title, t);
    }
    out.push_str("end\n");
    out
}

pub fn parse_gray(text: &str) -> Result<GrayCategory> {
    let mut r = Reader::new(text);
    r.expect("gray-category")?;
    let g = GrayCategory {
        objects: read_names(&mut r, "objects")?,
        cells1: read_cells(&mut r, "cells1")?,
        cells2: read_cells(&mut r, "cells2")?,
        cells3: read_cells(&mut r, "cells3")?,
        id1: read_vec(&mut r, "id1")?,
        id2: read_vec(&mut r, "id2")?,
        id3: read_vec(&mut r, "id3")?,
        comp1: read_table(&mut r, "comp1")?,
        comp2: read_table(&mut r, "comp2")?,
        comp3: read_table(&mut r, "comp3")?,
        lw2: read_table(&mut r, "lw2")?,
        rw2: read_table(&mut r, "rw2")?,
        lw3: read_table(&mut r, "lw3")?,
        rw3: read_table(&mut r, "rw3")?,
        lw32: read_table(&mut r, "lw32")?,
        rw32: read_table(&mut r, "rw32")?,
        interchanger: read_table(&mut r, "interchanger")?,
    };
    r.finish()?;
    Ok(g)
}

pub fn print_gray_functor(f: &GrayFunctor) -> String {
    let mut out = String::from("gray-functor\n");
    write_vec(&mut out, "obj", &f.obj);
    write_vec(&mut out, "c1", &f.c1);
    write_vec(&mut out, "c2", &f.c2);
    write_vec(&mut out, "c3", &f.c3);
    out.push_str("end\n");
    out
}

pub fn parse_gray_functor(text: &str) -> Result<GrayFunctor> {
    let mut r = Reader::new(text);
    r.expect("gray-functor")?;
    let f = GrayFunctor {
        obj: read_vec(&mut r, "obj")?,
        c1: read_vec(&mut r, "c1")?,
        c2: read_vec(&mut r, "c2")?,
        c3: read_vec(&mut r, "c3")?,
    };
    r.finish()?;
    Ok(f)
}

/// A Gray-functor with its endpoints: `gray-morphism`, then the domain,
/// codomain and functor blocks.
pub fn print_gray_morphism(dom: &GrayCategory, cod: &GrayCategory, f: &GrayFunctor) -> String {
    format!("gray-morphism\n{}{}{}", print_gray(dom), print_gray(cod), print_gray_functor(f))
}

pub fn parse_gray_morphism(text: &str) -> Result<(GrayCategory, GrayCategory, GrayFunctor)> {
    let body = text.strip_prefix("gray-morphism\n").ok_or_else(|| bad(1, "expected `gray-morphism`"))?;
    // blocks end at a bare `end` line; `first` is the block's first line in the file
    let mut blocks: Vec<(usize, String)> = Vec::new();
    let (mut cur, mut first) = (String::new(), 2);
    for (k, l) in body.lines().enumerate() {
        cur.push_str(l);
        cur.push('\n');
        if l == "end" {
            blocks.push((first, std::mem::take(&mut cur)));
            first = k + 3;
        }
    }
    if !cur.is_empty() || blocks.len() != 3 || !body.ends_with('\n') {
        return Err(bad(first, "expected domain, codomain and functor blocks"));
    }
    let shift = |l0: usize| {
        move |e: Error| match e {
            Error::Parse { line, message } => Error::Parse { line: line + l0 - 1, message },
            e => e,
        }
    };
    let dom = parse_gray(&blocks[0].1).map_err(shift(blocks[0].0))?;
    let cod = parse_gray(&blocks[1].1).map_err(shift(blocks[1].0))?;
    let f = parse_gray_functor(&blocks[2].1).map_err(shift(blocks[2].0))?;
    Ok((dom, cod, f))
}

// ---------------------------------------------------------------------------
// Computads

fn path_text(g: &Computad, p: &Path1) -> String {
    if p.edges.is_empty() {
        format!("[]@{}", g.vertices[p.src])
    } else {
        g.path_name(p)
    }
}

fn parse_path_text(g: &Computad, line: usize, s: &str) -> Result<Path1> {
    if let Some(v) = s.strip_prefix("[]@") {
        let x = g.vertices.iter().position(|n| n == v).ok_or_else(|| bad(line, format!("unknown vertex `{v}`")))?;
        return Ok(Path1::empty(x));
    }
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .filter(|t| !t.is_empty())
        .ok_or_else(|| bad(line, format!("expected a path `[f,g]` or `[]@x`, found `{s}`")))?;
    let ids = inner
        .split(',')
        .map(|n| g.edge_index(n).ok_or_else(|| bad(line, format!("unknown edge `{n}`"))))
        .collect::<Result<Vec<_>>>()?;
    g.path(&ids).map_err(|e| bad(line, e.to_string()))
}

fn check_token(line: usize, what: &str, s: &str) -> Result<()> {
    if s.is_empty() || s.contains([' ', ',', '[', ']', ':', '@', ';']) {
        return Err(bad(line, format!("invalid {what} name `{s}`")));
    }
    Ok(())
}

pub fn print_computad(g: &Computad) -> String {
    let mut out = String::from("computad\n");
    for v in &g.vertices {
        let _ = writeln!(out, "vertex {v}");
    }
    for e in &g.edges {
        let _ = writeln!(out, "{}: {} -> {}", e.name, g.vertices[e.src], g.vertices[e.tgt]);
    }
    for a in &g.generators {
        let _ = writeln!(out, "{}: {} => {}", a.name, path_text(g, &a.src), path_text(g, &a.tgt));
    }
    out.push_str("end\n");
    out
}

pub fn parse_computad(text: &str) -> Result<Computad> {
    let mut r = Reader::new(text);
    r.expect("computad")?;
    let mut g = Computad::default();
    loop {
        let n = r.line_no();
        let l = r.next()?;
        if l == "end" {
            break;
        }
        if let Some(v) = l.strip_prefix("vertex ") {
            if !g.edges.is_empty() || !g.generators.is_empty() {
                return Err(bad(n, "vertices must precede edges and generators"));
            }
            check_token(n, "vertex", v)?;
            if g.vertices.iter().any(|w| w == v) {
                return Err(bad(n, format!("duplicate vertex `{v}`")));
            }
            g.vertices.push(v.to_string());
            continue;
        }
        let (name, rest) = l.split_once(": ").ok_or_else(|| bad(n, format!("unrecognised line `{l}`")))?;
        check_token(n, "cell", name)?;
        if g.edge_index(name).is_some() || g.generator_index(name).is_some() {
            return Err(bad(n, format!("duplicate name `{name}`")));
        }
        if let Some((s, t)) = rest.split_once(" => ") {
            let (src, tgt) = (parse_path_text(&g, n, s)?, parse_path_text(&g, n, t)?);
            if (src.src, src.tgt) != (tgt.src, tgt.tgt) {
                return Err(bad(n, format!("generator `{name}` joins paths with different ends")));
            }
            g.generators.push(Generator { name: name.to_string(), src, tgt });
        } else if let Some((s, t)) = rest.split_once(" -> ") {
            if !g.generators.is_empty() {
                return Err(bad(n, "edges must precede generators"));
            }
            let vertex = |v: &str| g.vertices.iter().position(|w| w == v).ok_or_else(|| bad(n, format!("unknown vertex `{v}`")));
            let cell = Cell::new(name, vertex(s)?, vertex(t)?);
            g.edges.push(cell);
        } else {
            return Err(bad(n, format!("unrecognised line `{l}`")));
        }
    }
    if let Some(l) = r.peek() {
        return Err(bad(r.line_no(), format!("trailing content `{l}`")));
    }
    Ok(g)
}

/// `source ; left gen right ; …`.
pub fn path2_text(g: &Computad, p: &Path2<usize>) -> String {
    let mut out = path_text(g, &p.source);
    for b in &p.cells {
        let _ = write!(out, " ; {} {} {}", path_text(g, &b.left), g.generators[b.gen].name, path_text(g, &b.right));
    }
    out
}

pub fn parse_path2_text(g: &Computad, line: usize, s: &str) -> Result<Path2<usize>> {
    let mut parts = s.split(" ; ");
    let source = parse_path_text(g, line, parts.next().unwrap_or_default())?;
    let mut cells = Vec::new();
    for part in parts {
        let toks: Vec<&str> = part.split(' ').collect();
        let [l, a, rt] = toks[..] else {
            return Err(bad(line, format!("expected `left gen right`, found `{part}`")));
        };
        let gen = g.generator_index(a).ok_or_else(|| bad(line, format!("unknown generator `{a}`")))?;
        cells.push(Basic2 { left: parse_path_text(g, line, l)?, gen, right: parse_path_text(g, line, rt)? });
    }
    let p = Path2 { source, cells };
    let h = crate::computads::free_sesquicategory(g);
    h.recompose(p.source.clone(), &p.cells).map_err(|e| bad(line, e.to_string()))
}

/// Endomorphisms of `HG` over a fixed computad.
pub fn print_endomorphism(g: &Computad, e: &Endomorphism) -> String {
    let mut out = String::from("endomorphism\n");
    for (v, &w) in e.vertices.iter().enumerate() {
        let _ = writeln!(out, "vertex {} -> {}", g.vertices[v], g.vertices[w]);
    }
    for (k, p) in e.edges.iter().enumerate() {
        let _ = writeln!(out, "edge {} -> {}", g.edges[k].name, path_text(g, p));
    }
    for (k, p) in e.generators.iter().enumerate() {
        let _ = writeln!(out, "generator {} -> {}", g.generators[k].name, path2_text(g, p));
    }
    out.push_str("end\n");
    out
}

pub fn parse_endomorphism(g: &Computad, text: &str) -> Result<Endomorphism> {
    let mut r = Reader::new(text);
    r.expect("endomorphism")?;
    let mut e = Endomorphism { vertices: Vec::new(), edges: Vec::new(), generators: Vec::new() };
    let sizes = [g.vertices.len(), g.edges.len(), g.generators.len()];
    for (kind, count) in ["vertex", "edge", "generator"].into_iter().zip(sizes) {
        for k in 0..count {
            let n = r.line_no();
            let l = r.next()?;
            let name = match kind {
                "vertex" => &g.vertices[k],
                "edge" => &g.edges[k].name,
                _ => &g.generators[k].name,
            };
            let prefix = format!("{kind} {name} -> ");
            let rest = l.strip_prefix(&prefix).ok_or_else(|| bad(n, format!("expected `{prefix}…`")))?;
            match kind {
                "vertex" => e.vertices.push(g.vertices.iter().position(|w| w == rest).ok_or_else(|| bad(n, format!("unknown vertex `{rest}`")))?),
                "edge" => e.edges.push(parse_path_text(g, n, rest)?),
                _ => e.generators.push(parse_path2_text(g, n, rest)?),
            }
        }
    }
    r.finish()?;
    Ok(e)
}

// ---------------------------------------------------------------------------
// Simplicial sets

/// `simplicial-set`, a `top` and `coskeletal` line, then one `[dim n]` section
/// per dimension with lines `index faces… | degeneracies… | name`.
pub fn print_sset(x: &SimplicialSet) -> String {
    let mut out = String::from("simplicial-set\n");
    let _ = writeln!(out, "top {}", x.top());
    let _ = writeln!(out, "coskeletal {}", x.coskeletal);
    for n in 0..=x.top() {
        let _ = writeln!(out, "[dim {n}]");
        for i in 0..x.count(n) {
            let join = |v: &[usize]| v.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "{i} | {} | {} | {}", join(&x.faces[n][i]), join(&x.degeneracies[n][i]), x.names[n][i]);
        }
    }
    out.push_str("end\n");
    out
}

pub fn parse_sset(text: &str) -> Result<SimplicialSet> {
    let mut r = Reader::new(text);
    r.expect("simplicial-set")?;
    let n0 = r.line_no();
    let top = num(n0, r.next()?.strip_prefix("top ").ok_or_else(|| bad(n0, "expected `top n`"))?)?;
    let n1 = r.line_no();
    let coskeletal = match r.next()? {
        "coskeletal true" => true,
        "coskeletal false" => false,
        _ => return Err(bad(n1, "expected `coskeletal true` or `coskeletal false`")),
    };
    let mut x = SimplicialSet::with_top(top);
    x.coskeletal = coskeletal;
    for n in 0..=top {
        r.expect(&format!("[dim {n}]"))?;
        for (ln, l) in r.body() {
            let parts: Vec<&str> = l.splitn(4, " | ").collect();
            let [i, f, s, name] = parts[..] else {
                return Err(bad(ln, "expected `index | faces | degeneracies | name`"));
            };
            check_index(ln, i, x.names[n].len())?;
            let nums = |t: &str| -> Result<Vec<usize>> {
                if t.is_empty() { Ok(Vec::new()) } else { t.split(' ').map(|k| num(ln, k)).collect() }
            };
            let (faces, degs) = (nums(f)?, nums(s)?);
            let want_f = if n == 0 { 0 } else { n + 1 };
            let want_s = if n == top { 0 } else { n + 1 };
            if faces.len() != want_f || degs.len() != want_s {
                return Err(bad(ln, format!("a {n}-simplex needs {want_f} faces and {want_s} degeneracies")));
            }
            x.faces[n].push(faces);
            x.degeneracies[n].push(degs);
            x.names[n].push(name.to_string());
        }
    }
    r.finish()?;
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{computad_corpus, gray_corpus, morphism_corpus};
    use crate::simplicial::{boundary, delta, horn_set};

    #[test]
    fn gray_corpus_round_trips() {
        for (name, g) in gray_corpus() {
            let text = print_gray(&g);
            let back = parse_gray(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(back, g, "{name}");
            assert_eq!(print_gray(&back), text);
        }
    }

    #[test]
    fn functors_round_trip() {
        for m in morphism_corpus() {
            let text = print_gray_functor(&m.f);
            assert_eq!(parse_gray_functor(&text).unwrap(), m.f);
            let whole = print_gray_morphism(&m.dom, &m.cod, &m.f);
            assert_eq!(parse_gray_morphism(&whole).unwrap(), (m.dom.clone(), m.cod.clone(), m.f.clone()));
        }
    }

    #[test]
    fn computads_round_trip() {
        for (name, g) in computad_corpus() {
            let text = print_computad(&g);
            let back = parse_computad(&text).unwrap_or_else(|e| panic!("{name}: {e}\n{text}"));
            assert_eq!(back, g);
            assert_eq!(print_computad(&back), text);
            let e = Endomorphism::identity(&g);
            let et = print_endomorphism(&g, &e);
            assert_eq!(parse_endomorphism(&g, &et).unwrap(), e);
        }
    }

    #[test]
    fn computad_syntax() {
        let text = "computad\nvertex x\nvertex y\nf: x -> y\ng: y -> y\nalpha: [f,g] => [f]\nu: []@x => []@x\nend\n";
        let g = parse_computad(text).unwrap();
        assert_eq!((g.vertices.len(), g.edges.len(), g.generators.len()), (2, 2, 2));
        assert_eq!(print_computad(&g), text);
        assert!(parse_computad("computad\nvertex x\nf: x -> z\nend\n").is_err());
        assert!(parse_computad("computad\nvertex x\nvertex y\nf: x -> y\na: [f] => []@x\nend\n").is_err());
    }

    #[test]
    fn simplicial_sets_round_trip() {
        for x in [delta(2).unwrap(), boundary(3).unwrap(), horn_set(3, 1).unwrap()] {
            let text = print_sset(&x);
            assert_eq!(parse_sset(&text).unwrap(), x);
        }
    }

    #[test]
    fn rejects_unknown_sections_and_reordering() {
        let g = crate::constructions::terminal();
        let text = print_gray(&g);
        assert!(parse_gray(&text.replace("[lw2]", "[lwx]")).is_err());
        assert!(parse_gray(&format!("{text}extra\n")).is_err());
        let Err(Error::Parse { line, .. }) = parse_gray("gray-category\n[objects]\nx\n") else { panic!() };
        assert_eq!(line, 3);
    }
}

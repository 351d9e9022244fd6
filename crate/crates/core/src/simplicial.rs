//! Simplicial sets truncated at dimension 4, standard simplices and their
//! sub-complexes, simplicial maps, horns, and exhaustive lifting checks.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result, StructuralError};
use crate::report::ValidationReport;

/// Highest stored dimension.
pub const TOP_DIM: usize = 4;
/// Default number of search nodes for horn and boundary enumeration.
pub const DEFAULT_BUDGET: usize = 20_000_000;

/// Marks the missing slot of a horn or partial boundary tuple.
pub(crate) const HOLE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialSet {
    /// Simplex names, per dimension.
    pub names: Vec<Vec<String>>,
    /// `faces[n][x]` is `[d_0 x, …, d_n x]`; empty for vertices.
    pub faces: Vec<Vec<Vec<usize>>>,
    /// `degeneracies[n][x]` is `[s_0 x, …, s_n x]`; empty in the top dimension.
    pub degeneracies: Vec<Vec<Vec<usize>>>,
    /// Top-dimensional simplices are determined by their faces.
    pub coskeletal: bool,
}

impl SimplicialSet {
    /// An empty set with every dimension up to `top` present.
    pub fn with_top(top: usize) -> Self {
        Self { names: vec![Vec::new(); top + 1], faces: vec![Vec::new(); top + 1], degeneracies: vec![Vec::new(); top + 1], coskeletal: false }
    }

    pub fn top(&self) -> usize {
        self.names.len().saturating_sub(1)
    }

    pub fn count(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, Vec::len)
    }

    pub fn face(&self, n: usize, x: usize, i: usize) -> usize {
        self.faces[n][x][i]
    }

    pub fn degeneracy(&self, n: usize, x: usize, i: usize) -> usize {
        self.degeneracies[n][x][i]
    }

    pub fn name(&self, n: usize, x: usize) -> String {
        self.names.get(n).and_then(|v| v.get(x)).cloned().unwrap_or_else(|| format!("#{n}.{x}"))
    }

    /// Which `n`-simplices lie in the image of a degeneracy.
    pub fn degenerate(&self, n: usize) -> Vec<bool> {
        let mut out = vec![false; self.count(n)];
        if n > 0 {
            for s in &self.degeneracies[n - 1] {
                for &y in s {
                    out[y] = true;
                }
            }
        }
        out
    }

    pub fn nondegenerate(&self, n: usize) -> Vec<usize> {
        self.degenerate(n).iter().enumerate().filter(|(_, d)| !**d).map(|(i, _)| i).collect()
    }

    /// `n`-simplices keyed by their face tuple.
    pub fn boundary_index(&self, n: usize) -> HashMap<Vec<usize>, Vec<usize>> {
        let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (x, f) in self.faces.get(n).into_iter().flatten().enumerate() {
            m.entry(f.clone()).or_default().push(x);
        }
        m
    }

    /// `n`-simplices keyed by their faces with slot `r` masked.
    pub(crate) fn partial_index(&self, n: usize, r: usize) -> HashMap<Vec<usize>, Vec<usize>> {
        let mut m: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (x, f) in self.faces.get(n).into_iter().flatten().enumerate() {
            let mut k = f.clone();
            k[r] = HOLE;
            m.entry(k).or_default().push(x);
        }
        m
    }

    pub fn index_of(&self, n: usize, name: &str) -> Result<usize> {
        self.names.get(n).and_then(|v| v.iter().position(|s| s == name)).ok_or_else(|| Error::Unknown(name.to_string()))
    }
}

fn check_structure(x: &SimplicialSet) -> Result<(), StructuralError> {
    let dims = x.names.len();
    for (table, len) in [("faces", x.faces.len()), ("degeneracies", x.degeneracies.len())] {
        if len != dims {
            return Err(StructuralError::Length { table, expected: dims, found: len });
        }
    }
    for n in 0..dims {
        if x.faces[n].len() != x.count(n) {
            return Err(StructuralError::Length { table: "faces", expected: x.count(n), found: x.faces[n].len() });
        }
        if x.degeneracies[n].len() != x.count(n) {
            return Err(StructuralError::Length { table: "degeneracies", expected: x.count(n), found: x.degeneracies[n].len() });
        }
        for (s, f) in x.faces[n].iter().enumerate() {
            let want = if n == 0 { 0 } else { n + 1 };
            if f.len() != want {
                return Err(StructuralError::Length { table: "faces", expected: want, found: f.len() });
            }
            if let Some(&id) = f.iter().find(|&&y| y >= x.count(n.wrapping_sub(1))) {
                return Err(StructuralError::Dangling { table: "faces", key: x.name(n, s), kind: "simplex", id });
            }
        }
        for (s, d) in x.degeneracies[n].iter().enumerate() {
            let want = if n + 1 < dims { n + 1 } else { 0 };
            if d.len() != want {
                return Err(StructuralError::Length { table: "degeneracies", expected: want, found: d.len() });
            }
            if let Some(&id) = d.iter().find(|&&y| y >= x.count(n + 1)) {
                return Err(StructuralError::Dangling { table: "degeneracies", key: x.name(n, s), kind: "simplex", id });
            }
        }
    }
    Ok(())
}

/// Checks every simplicial identity on every simplex.
pub fn validate_sset(x: &SimplicialSet) -> Result<ValidationReport, StructuralError> {
    check_structure(x)?;
    let mut r = ValidationReport::new();
    let top = x.top();
    let d = |n: usize, s: usize, i: usize| x.faces[n][s][i];
    let s = |n: usize, y: usize, i: usize| x.degeneracies[n][y][i];
    for n in 2..=top.max(1) {
        for y in 0..x.count(n) {
            for j in 1..=n {
                for i in 0..j {
                    let ok = d(n - 1, d(n, y, j), i) == d(n - 1, d(n, y, i), j - 1);
                    r.check(ok, "face-face", || vec![format!("d{i}d{j}"), x.name(n, y)]);
                }
            }
        }
    }
    for n in 0..top {
        for y in 0..x.count(n) {
            for j in 0..=n {
                let sj = s(n, y, j);
                for i in 0..=n + 1 {
                    let lhs = d(n + 1, sj, i);
                    let rhs = if i == j || i == j + 1 {
                        y
                    } else if i < j {
                        s(n - 1, d(n, y, i), j - 1)
                    } else {
                        s(n - 1, d(n, y, i - 1), j)
                    };
                    r.check(lhs == rhs, "face-degeneracy", || vec![format!("d{i}s{j}"), x.name(n, y)]);
                }
            }
            if n + 2 <= top {
                for j in 0..=n {
                    for i in 0..=j {
                        let ok = s(n + 1, s(n, y, j), i) == s(n + 1, s(n, y, i), j + 1);
                        r.check(ok, "degeneracy-degeneracy", || vec![format!("s{i}s{j}"), x.name(n, y)]);
                    }
                }
            }
        }
    }
    if x.coskeletal && top > 0 {
        for (k, v) in sorted_groups(x.boundary_index(top)) {
            if v.len() > 1 {
                r.push("coskeletal", v.iter().map(|&y| x.name(top, y)).chain([format!("{k:?}")]).collect());
            }
        }
    }
    Ok(r)
}

fn sorted_groups(m: HashMap<Vec<usize>, Vec<usize>>) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut v: Vec<_> = m.into_iter().collect();
    v.sort();
    v
}

/// Standard simplex data: the simplicial set together with the vertex
/// sequence of each simplex.
struct Standard {
    set: SimplicialSet,
    seqs: Vec<Vec<Vec<usize>>>,
}

fn nondecreasing(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(n: usize, len: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in lo..=n {
            cur.push(v);
            go(n, len, v, cur, out);
            cur.pop();
        }
    }
    go(n, len, 0, &mut cur, &mut out);
    out
}

/// The sub-complex of Δ[n] on simplices whose vertex set satisfies `keep`
/// (which must be closed under subsets).
fn standard(n: usize, keep: impl Fn(&BTreeSet<usize>) -> bool) -> Result<Standard> {
    if n > TOP_DIM {
        return Err(Error::Unsupported(format!("Δ[{n}] exceeds the stored dimension {TOP_DIM}")));
    }
    let mut seqs = Vec::new();
    for k in 0..=TOP_DIM {
        seqs.push(nondecreasing(n, k + 1).into_iter().filter(|s| keep(&s.iter().copied().collect())).collect::<Vec<_>>());
    }
    let index: Vec<HashMap<Vec<usize>, usize>> =
        seqs.iter().map(|v| v.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect()).collect();
    let mut set = SimplicialSet::with_top(TOP_DIM);
    for k in 0..=TOP_DIM {
        for s in &seqs[k] {
            set.names[k].push(s.iter().map(|v| v.to_string()).collect());
            let faces = if k == 0 {
                Vec::new()
            } else {
                (0..=k)
                    .map(|i| {
                        let mut t = s.clone();
                        t.remove(i);
                        index[k - 1][&t]
                    })
                    .collect()
            };
            set.faces[k].push(faces);
            let degens = if k < TOP_DIM {
                (0..=k)
                    .map(|i| {
                        let mut t = s.clone();
                        t.insert(i, s[i]);
                        index[k + 1][&t]
                    })
                    .collect()
            } else {
                Vec::new()
            };
            set.degeneracies[k].push(degens);
        }
    }
    Ok(Standard { set, seqs })
}

/// The standard simplex Δ[n], truncated.
pub fn delta(n: usize) -> Result<SimplicialSet> {
    Ok(standard(n, |_| true)?.set)
}

/// The boundary ∂Δ[n].
pub fn boundary(n: usize) -> Result<SimplicialSet> {
    Ok(standard(n, |v| v.len() < n + 1)?.set)
}

/// The horn Λʳ[n]: the boundary without its `r`-th face.
pub fn horn_set(n: usize, r: usize) -> Result<SimplicialSet> {
    if r > n || n == 0 {
        return Err(Error::Precondition(format!("no horn Λ^{r}[{n}]")));
    }
    Ok(standard(n, |v| v.len() < n + 1 && !(v.len() == n && !v.contains(&r)))?.set)
}

/// A simplicial map, given dimension-wise.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimplicialMap {
    pub maps: Vec<Vec<usize>>,
}

impl SimplicialMap {
    pub fn identity(x: &SimplicialSet) -> Self {
        Self { maps: (0..x.names.len()).map(|n| (0..x.count(n)).collect()).collect() }
    }
}

pub fn validate_simplicial_map(m: &SimplicialMap, x: &SimplicialSet, y: &SimplicialSet) -> Result<ValidationReport, StructuralError> {
    if m.maps.len() != x.names.len() || y.names.len() < x.names.len() {
        return Err(StructuralError::Length { table: "map", expected: x.names.len(), found: m.maps.len() });
    }
    for n in 0..m.maps.len() {
        if m.maps[n].len() != x.count(n) {
            return Err(StructuralError::Length { table: "map", expected: x.count(n), found: m.maps[n].len() });
        }
        if let Some(&id) = m.maps[n].iter().find(|&&t| t >= y.count(n)) {
            return Err(StructuralError::Dangling { table: "map", key: format!("dimension {n}"), kind: "simplex", id });
        }
    }
    let mut r = ValidationReport::new();
    for n in 0..m.maps.len() {
        for s in 0..x.count(n) {
            let t = m.maps[n][s];
            if n > 0 {
                for i in 0..=n {
                    let ok = m.maps[n - 1][x.faces[n][s][i]] == y.faces[n][t][i];
                    r.check(ok, "map-face", || vec![format!("d{i}"), x.name(n, s)]);
                }
            }
            if n + 1 < m.maps.len() {
                for i in 0..=n {
                    let ok = m.maps[n + 1][x.degeneracies[n][s][i]] == y.degeneracies[n][t][i];
                    r.check(ok, "map-degeneracy", || vec![format!("s{i}"), x.name(n, s)]);
                }
            }
        }
    }
    Ok(r)
}

/// The inclusion `g_n : ∂Δ[n+2] → Δ[n+2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inclusion {
    pub n: usize,
    pub dom: SimplicialSet,
    pub cod: SimplicialSet,
    pub map: SimplicialMap,
}

pub fn build_gn(n: usize) -> Result<Inclusion> {
    let k = n + 2;
    if k > TOP_DIM {
        return Err(Error::Unsupported(format!("g_{n} needs Δ[{k}], beyond dimension {TOP_DIM}")));
    }
    let full = standard(k, |_| true)?;
    let part = standard(k, |v| v.len() < k + 1)?;
    let maps = part
        .seqs
        .iter()
        .zip(&full.seqs)
        .map(|(ps, fs)| {
            let ix: HashMap<&Vec<usize>, usize> = fs.iter().enumerate().map(|(i, s)| (s, i)).collect();
            ps.iter().map(|s| ix[s]).collect()
        })
        .collect();
    Ok(Inclusion { n, dom: part.set, cod: full.set, map: SimplicialMap { maps } })
}

/// A horn: a compatible family of `(n−1)`-simplices missing the `r`-th face.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Horn {
    pub n: usize,
    pub r: usize,
    /// `faces[i]` is the `i`-th face, `None` exactly at `r`.
    pub faces: Vec<Option<usize>>,
}

impl Horn {
    pub fn new(n: usize, r: usize, faces: Vec<Option<usize>>) -> Self {
        Self { n, r, faces }
    }

    pub(crate) fn from_slots(n: usize, r: usize, slots: &[usize]) -> Self {
        Self { n, r, faces: slots.iter().map(|&s| (s != HOLE).then_some(s)).collect() }
    }

    pub fn face(&self, i: usize) -> usize {
        self.faces[i].expect("horn face present")
    }

    pub(crate) fn slots(&self) -> Vec<usize> {
        self.faces.iter().map(|f| f.unwrap_or(HOLE)).collect()
    }

    pub fn describe(&self, x: &SimplicialSet) -> String {
        let fs: Vec<String> = self.faces.iter().map(|f| f.map_or_else(|| "_".to_string(), |s| x.name(self.n - 1, s))).collect();
        format!("Λ^{}[{}]({})", self.r, self.n, fs.join(", "))
    }
}

/// Checks the shape of a horn and the simplicial identities among its faces.
pub fn check_horn(x: &SimplicialSet, h: &Horn) -> Result<()> {
    if h.n == 0 || h.n > x.top() || h.r > h.n || h.faces.len() != h.n + 1 {
        return Err(Error::Precondition(format!("malformed horn Λ^{}[{}]", h.r, h.n)));
    }
    for (i, f) in h.faces.iter().enumerate() {
        match (i == h.r, f) {
            (true, None) => {}
            (false, Some(s)) if *s < x.count(h.n - 1) => {}
            _ => return Err(Error::Precondition(format!("horn face {i} is malformed"))),
        }
    }
    if h.n >= 2 {
        for j in 0..=h.n {
            for i in 0..j {
                if i == h.r || j == h.r {
                    continue;
                }
                let (fi, fj) = (h.face(i), h.face(j));
                if x.faces[h.n - 1][fj][i] != x.faces[h.n - 1][fi][j - 1] {
                    return Err(Error::Precondition(format!("horn faces {i} and {j} are incompatible")));
                }
            }
        }
    }
    Ok(())
}

/// Search-node counter shared by the enumerations.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: usize,
    used: usize,
    context: &'static str,
}

impl Budget {
    pub fn new(limit: usize, context: &'static str) -> Self {
        Self { limit, used: 0, context }
    }

    pub fn unlimited(context: &'static str) -> Self {
        Self::new(usize::MAX, context)
    }

    pub fn used(&self) -> usize {
        self.used
    }

    pub fn spend(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::Budget { context: self.context.to_string(), budget: self.limit });
        }
        Ok(())
    }
}

/// Visits every compatible tuple `(x_0, …, x_n)` of `(n−1)`-simplices,
/// where `lower[x]` lists the faces of `x`. The slot `skip` is left as
/// [`HOLE`]. The visitor returns `false` to stop early; so does this.
pub(crate) fn compatible_tuples(
    lower: &[Vec<usize>],
    n: usize,
    skip: Option<usize>,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
) -> Result<bool> {
    fn go(
        lower: &[Vec<usize>],
        n: usize,
        skip: Option<usize>,
        pos: usize,
        slots: &mut Vec<usize>,
        budget: &mut Budget,
        visit: &mut dyn FnMut(&[usize]) -> Result<bool>,
    ) -> Result<bool> {
        if pos > n {
            return visit(slots);
        }
        if skip == Some(pos) {
            slots.push(HOLE);
            let go_on = go(lower, n, skip, pos + 1, slots, budget, visit)?;
            slots.pop();
            return Ok(go_on);
        }
        for c in 0..lower.len() {
            budget.spend()?;
            let ok = n < 2 || (0..pos).all(|i| slots[i] == HOLE || lower[c][i] == lower[slots[i]][pos - 1]);
            if ok {
                slots.push(c);
                let go_on = go(lower, n, skip, pos + 1, slots, budget, visit)?;
                slots.pop();
                if !go_on {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
    let mut slots = Vec::with_capacity(n + 1);
    go(lower, n, skip, 0, &mut slots, budget, visit)
}

/// Visits every horn of `x` of dimension `1..=maxdim`.
pub(crate) fn for_each_horn(
    x: &SimplicialSet,
    maxdim: usize,
    budget: &mut Budget,
    visit: &mut dyn FnMut(&Horn) -> Result<bool>,
) -> Result<bool> {
    for n in 1..=maxdim {
        for r in 0..=n {
            let lower: &[Vec<usize>] = &x.faces[n - 1];
            let go_on = compatible_tuples(lower, n, Some(r), budget, &mut |slots| visit(&Horn::from_slots(n, r, slots)))?;
            if !go_on {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Outcome of a Kan-condition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KanReport {
    pub maxdim: usize,
    pub horns: usize,
    /// The first horn without a filler, with a description.
    pub unfillable: Option<(Horn, String)>,
}

impl KanReport {
    pub fn holds(&self) -> bool {
        self.unfillable.is_none()
    }
}

fn check_maxdim(x: &SimplicialSet, maxdim: usize) -> Result<()> {
    if maxdim > x.top() {
        return Err(Error::Unsupported(format!("dimension {maxdim} exceeds the stored dimension {}", x.top())));
    }
    Ok(())
}

/// Kan condition up to `maxdim` by exhaustive filler search.
pub fn kan_check(x: &SimplicialSet, maxdim: usize, budget: usize) -> Result<KanReport> {
    check_maxdim(x, maxdim)?;
    let mut b = Budget::new(budget, "kan_check");
    let mut indexes: HashMap<(usize, usize), HashMap<Vec<usize>, Vec<usize>>> = HashMap::new();
    let mut horns = 0;
    let mut unfillable = None;
    for_each_horn(x, maxdim, &mut b, &mut |h| {
        horns += 1;
        let ix = indexes.entry((h.n, h.r)).or_insert_with(|| x.partial_index(h.n, h.r));
        if ix.contains_key(&h.slots()) {
            Ok(true)
        } else {
            unfillable = Some((h.clone(), h.describe(x)));
            Ok(false)
        }
    })?;
    Ok(KanReport { maxdim, horns, unfillable })
}

/// Outcome of a lifting-property check for a simplicial map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftingReport {
    pub maxdim: usize,
    pub squares: usize,
    /// Dimension and description of the first square without a lift.
    pub failure: Option<(usize, String)>,
}

impl LiftingReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

/// Right lifting property of `phi: x → y` against `∂Δ[n] → Δ[n]` for
/// `n ≤ maxdim`, by enumerating every boundary of `x`.
pub fn simplicial_map_is_trivial_fibration(
    phi: &SimplicialMap,
    x: &SimplicialSet,
    y: &SimplicialSet,
    maxdim: usize,
    budget: usize,
) -> Result<LiftingReport> {
    check_maxdim(x, maxdim)?;
    check_maxdim(y, maxdim)?;
    let mut b = Budget::new(budget, "trivial fibration check");
    let mut squares = 0;
    let mut failure = None;
    {
        let mut hit = vec![false; y.count(0)];
        for &t in &phi.maps[0] {
            hit[t] = true;
        }
        squares += hit.len();
        if let Some(v) = hit.iter().position(|h| !h) {
            failure = Some((0, format!("vertex {} has no preimage", y.name(0, v))));
        }
    }
    for n in 1..=maxdim {
        if failure.is_some() {
            break;
        }
        let ys = y.boundary_index(n);
        let xs = x.boundary_index(n);
        let mut fill = |slots: &[usize]| -> Result<bool> {
            let image: Vec<usize> = slots.iter().map(|&s| phi.maps[n - 1][s]).collect();
            for &t in ys.get(&image).map_or(&[][..], |v| v) {
                squares += 1;
                let ok = xs.get(slots).is_some_and(|cands| cands.iter().any(|&c| phi.maps[n][c] == t));
                if !ok {
                    let names: Vec<String> = slots.iter().map(|&s| x.name(n - 1, s)).collect();
                    failure = Some((n, format!("boundary ({}) over {}", names.join(", "), y.name(n, t))));
                    return Ok(false);
                }
            }
            Ok(true)
        };
        if n == 1 {
            'outer: for a in 0..x.count(0) {
                for c in 0..x.count(0) {
                    b.spend()?;
                    if !fill(&[a, c])? {
                        break 'outer;
                    }
                }
            }
        } else {
            compatible_tuples(&x.faces[n - 1], n, None, &mut b, &mut fill)?;
        }
    }
    Ok(LiftingReport { maxdim, squares, failure })
}

/// Horn right lifting property of `phi: x → y` by exhaustive search.
pub fn horn_lifting_check(phi: &SimplicialMap, x: &SimplicialSet, y: &SimplicialSet, maxdim: usize, budget: usize) -> Result<LiftingReport> {
    check_maxdim(x, maxdim)?;
    check_maxdim(y, maxdim)?;
    let mut b = Budget::new(budget, "horn lifting check");
    let mut squares = 0;
    let mut failure = None;
    let mut yix: HashMap<(usize, usize), HashMap<Vec<usize>, Vec<usize>>> = HashMap::new();
    let mut xix: HashMap<(usize, usize), HashMap<Vec<usize>, Vec<usize>>> = HashMap::new();
    for_each_horn(x, maxdim, &mut b, &mut |h| {
        let mut image: Vec<usize> = h.slots().iter().map(|&s| if s == HOLE { HOLE } else { phi.maps[h.n - 1][s] }).collect();
        image[h.r] = HOLE;
        let ty = yix.entry((h.n, h.r)).or_insert_with(|| y.partial_index(h.n, h.r));
        let tx = xix.entry((h.n, h.r)).or_insert_with(|| x.partial_index(h.n, h.r));
        for &t in ty.get(&image).map_or(&[][..], |v| v) {
            squares += 1;
            let ok = tx.get(&h.slots()).is_some_and(|c| c.iter().any(|&s| phi.maps[h.n][s] == t));
            if !ok {
                failure = Some((h.n, format!("{} over {}", h.describe(x), y.name(h.n, t))));
                return Ok(false);
            }
        }
        Ok(true)
    })?;
    Ok(LiftingReport { maxdim, squares, failure })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_simplices_validate() {
        for n in 0..=TOP_DIM {
            let d = delta(n).unwrap();
            assert!(validate_sset(&d).unwrap().is_valid(), "Δ[{n}]");
            assert_eq!(d.count(0), n + 1);
            assert_eq!(d.nondegenerate(n).len(), 1);
            let b = boundary(n).unwrap();
            assert!(validate_sset(&b).unwrap().is_valid(), "∂Δ[{n}]");
            assert!(b.nondegenerate(n).is_empty());
            for r in (0..=n).filter(|_| n > 0) {
                let h = horn_set(n, r).unwrap();
                assert!(validate_sset(&h).unwrap().is_valid(), "Λ^{r}[{n}]");
                assert_eq!(h.nondegenerate(n - 1).len(), n, "Λ^{r}[{n}] keeps n faces");
            }
        }
    }

    #[test]
    fn simplex_counts_are_binomial() {
        // Δ[2] has C(2+k+1, k+1) k-simplices.
        let d = delta(2).unwrap();
        assert_eq!((0..=4).map(|k| d.count(k)).collect::<Vec<_>>(), vec![3, 6, 10, 15, 21]);
    }

    #[test]
    fn beyond_truncation_is_rejected() {
        assert!(matches!(delta(5), Err(Error::Unsupported(_))));
        assert!(matches!(build_gn(3), Err(Error::Unsupported(_))));
    }

    #[test]
    fn gn_are_valid_inclusions() {
        for n in 0..=2 {
            let g = build_gn(n).unwrap();
            assert_eq!(g.cod.count(0), n + 3);
            assert!(validate_simplicial_map(&g.map, &g.dom, &g.cod).unwrap().is_valid());
            assert_eq!(g.dom.nondegenerate(n + 1).len(), n + 3, "faces of Δ[{}]", n + 2);
        }
    }

    #[test]
    fn face_mutation_is_named() {
        let mut d = delta(2).unwrap();
        let y = d.index_of(2, "012").unwrap();
        d.faces[2][y].swap(0, 2);
        let r = validate_sset(&d).unwrap();
        assert!(r.mentions("face-face") || r.mentions("face-degeneracy"));
        d.faces[2][y][0] = 99;
        assert!(validate_sset(&d).is_err());
    }

    #[test]
    fn boundary_of_triangle_is_not_kan() {
        let b = boundary(2).unwrap();
        assert!(!kan_check(&b, 2, DEFAULT_BUDGET).unwrap().holds());
        assert!(kan_check(&b, 1, DEFAULT_BUDGET).unwrap().holds());
        // The inner horn 0→1→2 has no filler since 012 is missing.
        let (e01, e12) = (b.index_of(1, "01").unwrap(), b.index_of(1, "12").unwrap());
        let ix = b.partial_index(2, 1);
        assert!(!ix.contains_key(&vec![e12, HOLE, e01]));
    }

    #[test]
    fn only_the_point_simplex_is_kan() {
        assert!(kan_check(&delta(0).unwrap(), 4, DEFAULT_BUDGET).unwrap().holds());
        for n in 1..=4 {
            let d = delta(n).unwrap();
            let r = kan_check(&d, 4, DEFAULT_BUDGET).unwrap();
            let (h, _) = r.unfillable.expect("outer horn without filler");
            // An outer horn would need a simplex with decreasing vertices.
            assert!(h.r == 0 || h.r == h.n, "Δ[{n}]: {h:?}");
            assert!(kan_check(&d, 4, DEFAULT_BUDGET).is_ok());
        }
    }

    #[test]
    fn horn_checks() {
        let d = delta(2).unwrap();
        let e01 = d.index_of(1, "01").unwrap();
        let e12 = d.index_of(1, "12").unwrap();
        let e02 = d.index_of(1, "02").unwrap();
        check_horn(&d, &Horn::new(2, 1, vec![Some(e12), None, Some(e01)])).unwrap();
        assert!(check_horn(&d, &Horn::new(2, 1, vec![Some(e02), None, Some(e01)])).is_err());
        assert!(check_horn(&d, &Horn::new(2, 1, vec![Some(e12), Some(e02), Some(e01)])).is_err());
    }

    #[test]
    fn identity_is_a_trivial_fibration() {
        let d = delta(3).unwrap();
        let id = SimplicialMap::identity(&d);
        assert!(simplicial_map_is_trivial_fibration(&id, &d, &d, 4, DEFAULT_BUDGET).unwrap().holds());
        assert!(horn_lifting_check(&id, &d, &d, 4, DEFAULT_BUDGET).unwrap().holds());
    }

    #[test]
    fn boundary_inclusion_is_not_a_trivial_fibration() {
        let g = build_gn(0).unwrap();
        let r = simplicial_map_is_trivial_fibration(&g.map, &g.dom, &g.cod, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(r.failure.unwrap().0, 2);
    }

    #[test]
    fn budget_is_reported() {
        let d = delta(4).unwrap();
        assert!(matches!(kan_check(&d, 4, 10), Err(Error::Budget { .. })));
    }
}

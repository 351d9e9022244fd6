//! Single-entry corruptions of a valid Gray-category, for checking that the
//! validator notices every one of them.

use std::fmt;

use crate::cell::Table;
use crate::gray::{validate_gray_category, GrayCategory};

/// One entry replaced by another in-range value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mutation {
    pub table: &'static str,
    pub key: String,
    pub from: usize,
    pub to: usize,
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]: {} -> {}", self.table, self.key, self.from, self.to)
    }
}

#[derive(Debug, Clone, Default)]
pub struct MutationReport {
    pub tried: usize,
    pub missed: Vec<Mutation>,
}

impl MutationReport {
    pub fn all_caught(&self) -> bool {
        self.missed.is_empty()
    }
}

fn table_mut<'a>(g: &'a mut GrayCategory, name: &str) -> &'a mut Table {
    match name {
        "comp1" => &mut g.comp1,
        "comp2" => &mut g.comp2,
        "comp3" => &mut g.comp3,
        "lw2" => &mut g.lw2,
        "rw2" => &mut g.rw2,
        "lw3" => &mut g.lw3,
        "rw3" => &mut g.rw3,
        "lw32" => &mut g.lw32,
        "rw32" => &mut g.rw32,
        _ => &mut g.interchanger,
    }
}

const TABLES: [(&str, usize); 10] = [
    ("comp1", 1),
    ("comp2", 2),
    ("comp3", 3),
    ("lw2", 2),
    ("rw2", 2),
    ("lw3", 3),
    ("rw3", 3),
    ("lw32", 3),
    ("rw32", 3),
    ("interchanger", 3),
];

fn count(g: &GrayCategory, dim: usize) -> usize {
    match dim {
        0 => g.objects.len(),
        1 => g.cells1.len(),
        2 => g.cells2.len(),
        _ => g.cells3.len(),
    }
}

/// Calls `visit` on every single-entry mutation: each composition table
/// entry, identity assignment and cell endpoint, replaced in turn by every
/// other value of the right dimension.
pub fn for_each_mutation(g: &GrayCategory, mut visit: impl FnMut(&Mutation, &GrayCategory)) {
    let mut h = g.clone();
    for (name, dim) in TABLES {
        let keys: Vec<(usize, usize)> = table_mut(&mut h, name).keys().copied().collect();
        for k in keys {
            let from = table_mut(&mut h, name)[&k];
            for to in (0..count(g, dim)).filter(|&v| v != from) {
                table_mut(&mut h, name).insert(k, to);
                visit(&Mutation { table: name, key: format!("{}, {}", k.0, k.1), from, to }, &h);
            }
            table_mut(&mut h, name).insert(k, from);
        }
    }
    for (name, dim) in [("id1", 1), ("id2", 2), ("id3", 3)] {
        for i in 0..count(g, dim - 1) {
            let from = ids_mut(&mut h, dim)[i];
            for to in (0..count(g, dim)).filter(|&v| v != from) {
                ids_mut(&mut h, dim)[i] = to;
                visit(&Mutation { table: name, key: i.to_string(), from, to }, &h);
            }
            ids_mut(&mut h, dim)[i] = from;
        }
    }
    for (name, dim) in [("cells1", 1), ("cells2", 2), ("cells3", 3)] {
        for i in 0..count(g, dim) {
            for end in [false, true] {
                let from = endpoint(&mut h, dim, i, end);
                for to in (0..count(g, dim - 1)).filter(|&v| v != from) {
                    *endpoint_mut(&mut h, dim, i, end) = to;
                    let key = format!("{i}.{}", if end { "tgt" } else { "src" });
                    visit(&Mutation { table: name, key, from, to }, &h);
                }
                *endpoint_mut(&mut h, dim, i, end) = from;
            }
        }
    }
}

fn ids_mut(g: &mut GrayCategory, dim: usize) -> &mut Vec<usize> {
    match dim {
        1 => &mut g.id1,
        2 => &mut g.id2,
        _ => &mut g.id3,
    }
}

fn endpoint_mut(g: &mut GrayCategory, dim: usize, i: usize, tgt: bool) -> &mut usize {
    let c = match dim {
        1 => &mut g.cells1[i],
        2 => &mut g.cells2[i],
        _ => &mut g.cells3[i],
    };
    if tgt {
        &mut c.tgt
    } else {
        &mut c.src
    }
}

fn endpoint(g: &mut GrayCategory, dim: usize, i: usize, tgt: bool) -> usize {
    *endpoint_mut(g, dim, i, tgt)
}

/// Validates every mutation of `g` and records the ones that pass.
pub fn mutation_check(g: &GrayCategory) -> MutationReport {
    let mut report = MutationReport::default();
    for_each_mutation(g, |m, h| {
        report.tried += 1;
        let caught = validate_gray_category(h).map_or(true, |r| !r.is_valid());
        if !caught {
            report.missed.push(m.clone());
        }
    });
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{delooping, terminal};

    #[test]
    fn counts_every_alternative() {
        let g = delooping(2);
        let mut n = 0;
        for_each_mutation(&g, |_, h| {
            assert_ne!(h, &g);
            n += 1;
        });
        // one alternative per entry and identity; no endpoint alternatives on one object
        let entries: usize = [&g.comp1, &g.comp2, &g.comp3, &g.lw2, &g.rw2, &g.lw3, &g.rw3, &g.lw32, &g.rw32, &g.interchanger]
            .iter()
            .map(|t| t.len())
            .sum();
        assert_eq!(n, entries + 1 + 2 + 2 + 2 * 2 + 2 * 2);
    }

    #[test]
    fn small_examples_are_tight() {
        for g in [terminal(), delooping(2), delooping(3)] {
            let r = mutation_check(&g);
            assert!(r.all_caught(), "{:?}", r.missed.iter().map(|m| m.to_string()).collect::<Vec<_>>());
        }
    }
}

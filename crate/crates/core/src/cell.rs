use std::collections::{BTreeMap, BTreeSet};

use crate::error::StructuralError;

/// A named cell with a source and target one dimension down.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

impl Cell {
    pub fn new(name: impl Into<String>, src: usize, tgt: usize) -> Self {
        Self { name: name.into(), src, tgt }
    }
}

/// A binary operation table keyed by the pair of operands.
pub type Table = BTreeMap<(usize, usize), usize>;

pub(crate) fn fmt_key(k: (usize, usize)) -> String {
    format!("({}, {})", k.0, k.1)
}

pub(crate) fn check_cells(
    table: &'static str,
    cells: &[Cell],
    bound: usize,
    kind: &'static str,
) -> Result<(), StructuralError> {
    for (i, c) in cells.iter().enumerate() {
        for id in [c.src, c.tgt] {
            if id >= bound {
                return Err(StructuralError::Dangling {
                    table,
                    key: format!("{} `{}`", i, c.name),
                    kind,
                    id,
                });
            }
        }
    }
    Ok(())
}

pub(crate) fn check_vec(
    table: &'static str,
    v: &[usize],
    expected: usize,
    bound: usize,
    kind: &'static str,
) -> Result<(), StructuralError> {
    if v.len() != expected {
        return Err(StructuralError::Length { table, expected, found: v.len() });
    }
    for (i, &x) in v.iter().enumerate() {
        if x >= bound {
            return Err(StructuralError::Dangling { table, key: i.to_string(), kind, id: x });
        }
    }
    Ok(())
}

/// Checks that `table` is defined exactly on `expected`, with keys and values in range.
pub(crate) fn check_table(
    table_name: &'static str,
    table: &Table,
    expected: impl IntoIterator<Item = (usize, usize)>,
    bounds: (usize, usize, usize),
    kinds: (&'static str, &'static str, &'static str),
) -> Result<(), StructuralError> {
    for (&k, &v) in table {
        if k.0 >= bounds.0 {
            return Err(StructuralError::Dangling {
                table: table_name,
                key: fmt_key(k),
                kind: kinds.0,
                id: k.0,
            });
        }
        if k.1 >= bounds.1 {
            return Err(StructuralError::Dangling {
                table: table_name,
                key: fmt_key(k),
                kind: kinds.1,
                id: k.1,
            });
        }
        if v >= bounds.2 {
            return Err(StructuralError::Dangling {
                table: table_name,
                key: fmt_key(k),
                kind: kinds.2,
                id: v,
            });
        }
    }
    let expected: BTreeSet<(usize, usize)> = expected.into_iter().collect();
    if let Some(&k) = expected.iter().find(|k| !table.contains_key(k)) {
        return Err(StructuralError::Missing { table: table_name, key: fmt_key(k) });
    }
    if let Some(&k) = table.keys().find(|k| !expected.contains(k)) {
        return Err(StructuralError::Extra { table: table_name, key: fmt_key(k) });
    }
    Ok(())
}

/// Indices of cells grouped by (source, target).
pub(crate) fn parallel_index(cells: &[Cell]) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut m: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, c) in cells.iter().enumerate() {
        m.entry((c.src, c.tgt)).or_default().push(i);
    }
    m
}

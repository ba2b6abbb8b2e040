//! Canonical labeling of incidence matrices.
//!
//! Rows and columns are split into ordered cells by iterated degree profiles
//! (colour refinement on the bipartite incidence graph). Remaining ties among
//! columns are broken by individualizing each candidate in turn and refining
//! again. At a leaf the column order is fixed and the rows are sorted; the key
//! is the least leaf. Columns with identical incidence vectors are
//! interchangeable, so only one of them is ever tried per cell.

use std::fmt;

use crate::hypergraph::{Hypergraph, MAX_WIDTH};

/// Identifier of an isomorphism class: `(m, n)` followed by the canonical rows.
///
/// Ordering is lexicographic on `(m, n, rows)`, each row read as an integer
/// with canonical column `j` at bit `j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    m: u8,
    n: u8,
    rows: Box<[u64]>,
}

impl CanonicalKey {
    pub fn unit() -> Self {
        CanonicalKey { m: 0, n: 0, rows: Box::new([]) }
    }

    pub fn edge_count(&self) -> usize {
        self.m as usize
    }

    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn is_unit(&self) -> bool {
        self.m == 0 && self.n == 0
    }

    /// The canonical representative.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::raw(self.n as usize, self.rows.to_vec())
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(2 + 8 * self.rows.len());
        out.push(self.m);
        out.push(self.n);
        for r in self.rows.iter() {
            out.extend_from_slice(&r.to_be_bytes());
        }
        out
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key({:?})", self.to_hypergraph())
    }
}

impl From<&Hypergraph> for CanonicalKey {
    fn from(h: &Hypergraph) -> Self {
        canonical_key(h)
    }
}

pub fn canonical_key(h: &Hypergraph) -> CanonicalKey {
    let m = h.edge_count();
    let n = h.vertex_count();
    debug_assert!(m <= MAX_WIDTH && n <= MAX_WIDTH);
    let cols: Vec<u64> = (0..n).map(|v| h.column(v)).collect();
    let mut search = Search { rows: h.rows(), cols: &cols, best: None };
    let col_cells = if n == 0 { Vec::new() } else { vec![(0..n).collect()] };
    let row_cells = if m == 0 { Vec::new() } else { vec![(0..m).collect()] };
    search.descend(col_cells, row_cells);
    let rows = search.best.unwrap_or_default();
    CanonicalKey { m: m as u8, n: n as u8, rows: rows.into_boxed_slice() }
}

type Cells = Vec<Vec<usize>>;

struct Search<'a> {
    rows: &'a [u64],
    cols: &'a [u64],
    best: Option<Vec<u64>>,
}

fn cell_index(cells: &Cells, len: usize) -> Vec<usize> {
    let mut idx = vec![0; len];
    for (i, cell) in cells.iter().enumerate() {
        for &x in cell {
            idx[x] = i;
        }
    }
    idx
}

/// Splits every cell by the signature of its members, sub-cells in signature order.
fn split(cells: &Cells, sig: impl Fn(usize) -> Vec<u32>) -> Cells {
    let mut out = Vec::with_capacity(cells.len());
    for cell in cells {
        if cell.len() == 1 {
            out.push(cell.clone());
            continue;
        }
        let mut tagged: Vec<(Vec<u32>, usize)> = cell.iter().map(|&x| (sig(x), x)).collect();
        tagged.sort();
        let mut cur: Vec<usize> = Vec::new();
        for i in 0..tagged.len() {
            if i > 0 && tagged[i].0 != tagged[i - 1].0 {
                out.push(std::mem::take(&mut cur));
            }
            cur.push(tagged[i].1);
        }
        out.push(cur);
    }
    out
}

fn profile(word: u64, idx: &[usize], ncells: usize) -> Vec<u32> {
    let mut counts = vec![0u32; ncells];
    let mut w = word;
    while w != 0 {
        counts[idx[w.trailing_zeros() as usize]] += 1;
        w &= w - 1;
    }
    counts
}

impl Search<'_> {
    fn refine(&self, mut col_cells: Cells, mut row_cells: Cells) -> (Cells, Cells) {
        loop {
            let col_idx = cell_index(&col_cells, self.cols.len());
            let new_rows = split(&row_cells, |r| profile(self.rows[r], &col_idx, col_cells.len()));
            let row_idx = cell_index(&new_rows, self.rows.len());
            let new_cols = split(&col_cells, |c| profile(self.cols[c], &row_idx, new_rows.len()));
            let stable = new_rows.len() == row_cells.len() && new_cols.len() == col_cells.len();
            row_cells = new_rows;
            col_cells = new_cols;
            if stable {
                return (col_cells, row_cells);
            }
        }
    }

    fn descend(&mut self, col_cells: Cells, row_cells: Cells) {
        let (col_cells, row_cells) = self.refine(col_cells, row_cells);
        let Some(target) = col_cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&col_cells);
            return;
        };
        let mut tried: Vec<u64> = Vec::new();
        for &c in &col_cells[target] {
            if tried.contains(&self.cols[c]) {
                continue;
            }
            tried.push(self.cols[c]);
            let mut next = Vec::with_capacity(col_cells.len() + 1);
            next.extend_from_slice(&col_cells[..target]);
            next.push(vec![c]);
            next.push(col_cells[target].iter().copied().filter(|&x| x != c).collect());
            next.extend_from_slice(&col_cells[target + 1..]);
            self.descend(next, row_cells.clone());
        }
    }

    fn leaf(&mut self, col_cells: &Cells) {
        let order: Vec<usize> = col_cells.iter().map(|c| c[0]).collect();
        let mut words: Vec<u64> = self
            .rows
            .iter()
            .map(|&r| {
                order
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| r >> c & 1 == 1)
                    .fold(0, |acc, (pos, _)| acc | 1 << pos)
            })
            .collect();
        words.sort_unstable();
        if self.best.as_ref().is_none_or(|b| words < *b) {
            self.best = Some(words);
        }
    }
}

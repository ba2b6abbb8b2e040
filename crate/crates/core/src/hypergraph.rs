//! Incidence-matrix hypergraphs with one `u64` bitmask per edge.

use std::fmt;
use std::str::FromStr;

use crate::canon::{canonical_key, CanonicalKey};
use crate::error::{Error, Result};

pub const MAX_WIDTH: usize = 64;

#[inline]
pub(crate) fn mask(width: usize) -> u64 {
    if width >= 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Packs the bits of `bits` selected by `sel` into the low end, keeping their order.
pub(crate) fn compress(bits: u64, sel: u64) -> u64 {
    let mut out = 0;
    let mut k = 0;
    let mut s = sel;
    while s != 0 {
        let low = s & s.wrapping_neg();
        if bits & low != 0 {
            out |= 1 << k;
        }
        k += 1;
        s &= s - 1;
    }
    out
}

/// Merges overlapping groups of vertices into blocks, adds singletons for the rest,
/// and orders the blocks by smallest member.
pub(crate) fn blocks_of(width: usize, groups: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut blocks: Vec<u64> = Vec::new();
    for g in groups {
        if g == 0 {
            continue;
        }
        let mut merged = g;
        blocks.retain(|&b| {
            if b & merged != 0 {
                merged |= b;
                false
            } else {
                true
            }
        });
        blocks.push(merged);
    }
    let covered = blocks.iter().fold(0, |a, b| a | b);
    for v in 0..width {
        if covered >> v & 1 == 0 {
            blocks.push(1 << v);
        }
    }
    blocks.sort_by_key(|b| b.trailing_zeros());
    blocks
}

/// Image of a vertex set under the quotient map onto `blocks`.
pub(crate) fn push_forward(row: u64, blocks: &[u64]) -> u64 {
    blocks
        .iter()
        .enumerate()
        .filter(|(_, &b)| b & row != 0)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

/// A subset of `0..width` for `width ≤ 64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    bits: u64,
    width: u8,
}

impl IndexSet {
    pub fn empty(width: usize) -> Self {
        assert!(width <= MAX_WIDTH, "index set wider than {MAX_WIDTH}");
        IndexSet { bits: 0, width: width as u8 }
    }

    pub fn full(width: usize) -> Self {
        assert!(width <= MAX_WIDTH, "index set wider than {MAX_WIDTH}");
        IndexSet { bits: mask(width), width: width as u8 }
    }

    pub fn from_bits(width: usize, bits: u64) -> Result<Self> {
        if width > MAX_WIDTH {
            return Err(Error::Shape(format!("width {width} exceeds {MAX_WIDTH}")));
        }
        if bits & !mask(width) != 0 {
            return Err(Error::Shape(format!("bits {bits:#x} exceed width {width}")));
        }
        Ok(IndexSet { bits, width: width as u8 })
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Result<Self> {
        let mut s = IndexSet::from_bits(width, 0)?;
        for i in indices {
            if i >= width {
                return Err(Error::Shape(format!("index {i} out of range 0..{width}")));
            }
            s.bits |= 1 << i;
        }
        Ok(s)
    }

    pub(crate) fn raw(width: usize, bits: u64) -> Self {
        debug_assert!(width <= MAX_WIDTH && bits & !mask(width) == 0);
        IndexSet { bits, width: width as u8 }
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn width(self) -> usize {
        self.width as usize
    }

    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn contains(self, i: usize) -> bool {
        i < self.width() && self.bits >> i & 1 == 1
    }

    pub fn complement(self) -> Self {
        IndexSet { bits: !self.bits & mask(self.width()), width: self.width }
    }

    pub fn is_subset(self, other: IndexSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(self, other: IndexSet) -> Self {
        debug_assert_eq!(self.width, other.width);
        IndexSet { bits: self.bits | other.bits, width: self.width }
    }

    pub fn intersection(self, other: IndexSet) -> Self {
        debug_assert_eq!(self.width, other.width);
        IndexSet { bits: self.bits & other.bits, width: self.width }
    }

    pub fn iter(self) -> Bits {
        Bits(self.bits)
    }

    /// All subsets, in increasing order of their bitmask.
    pub fn subsets(self) -> Subsets {
        Subsets { sup: self.bits, next: Some(0), width: self.width }
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[derive(Clone, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

#[derive(Clone, Debug)]
pub struct Subsets {
    sup: u64,
    next: Option<u64>,
    width: u8,
}

impl Iterator for Subsets {
    type Item = IndexSet;

    fn next(&mut self) -> Option<IndexSet> {
        let cur = self.next?;
        self.next = if cur == self.sup {
            None
        } else {
            Some((cur | !self.sup).wrapping_add(1) & self.sup)
        };
        Some(IndexSet { bits: cur, width: self.width })
    }
}

/// The four composites of dual and complement.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Involution {
    Id,
    D,
    C,
    Cd,
}

impl Involution {
    pub const ALL: [Involution; 4] = [Involution::Id, Involution::D, Involution::C, Involution::Cd];

    pub fn apply(self, h: &Hypergraph) -> Hypergraph {
        match self {
            Involution::Id => h.clone(),
            Involution::D => h.dual(),
            Involution::C => h.complement(),
            Involution::Cd => h.complement().dual(),
        }
    }

    pub fn has_dual(self) -> bool {
        matches!(self, Involution::D | Involution::Cd)
    }

    pub fn has_complement(self) -> bool {
        matches!(self, Involution::C | Involution::Cd)
    }

    pub fn name(self) -> &'static str {
        match self {
            Involution::Id => "id",
            Involution::D => "d",
            Involution::C => "c",
            Involution::Cd => "cd",
        }
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Involution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "id" => Ok(Involution::Id),
            "d" => Ok(Involution::D),
            "c" => Ok(Involution::C),
            "cd" | "dc" => Ok(Involution::Cd),
            _ => Err(Error::Invalid(format!("unknown involution {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SpecialSubsets {
    /// Edges with at least one vertex.
    pub nonempty_edges: IndexSet,
    /// Vertices on at least one edge.
    pub covered_vertices: IndexSet,
    /// Edges missing at least one vertex.
    pub proper_edges: IndexSet,
    /// Vertices missing from at least one edge.
    pub proper_vertices: IndexSet,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Component {
    pub edges: IndexSet,
    pub vertices: IndexSet,
}

/// A finite hypergraph: `m` edges over `n` vertices, given by its incidence rows.
///
/// Row `e` has bit `v` set iff vertex `v` lies on edge `e`. Empty edges,
/// repeated edges and isolated vertices are all allowed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    rows: Vec<u64>,
}

impl Hypergraph {
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        if n > MAX_WIDTH {
            return Err(Error::Shape(format!("{n} vertices exceed {MAX_WIDTH}")));
        }
        if rows.len() > MAX_WIDTH {
            return Err(Error::Shape(format!("{} edges exceed {MAX_WIDTH}", rows.len())));
        }
        if let Some(r) = rows.iter().find(|&&r| r & !mask(n) != 0) {
            return Err(Error::Shape(format!("row {r:#x} exceeds width {n}")));
        }
        Ok(Hypergraph { n, rows })
    }

    pub(crate) fn raw(n: usize, rows: Vec<u64>) -> Self {
        debug_assert!(n <= MAX_WIDTH && rows.len() <= MAX_WIDTH);
        debug_assert!(rows.iter().all(|&r| r & !mask(n) == 0));
        Hypergraph { n, rows }
    }

    /// The empty hypergraph, unit of both products.
    pub fn unit() -> Self {
        Hypergraph { n: 0, rows: Vec::new() }
    }

    pub fn edgeless(n: usize) -> Self {
        assert!(n <= MAX_WIDTH, "{n} vertices exceed {MAX_WIDTH}");
        Hypergraph { n, rows: Vec::new() }
    }

    pub fn from_edge_sets(n: usize, edges: &[IndexSet]) -> Result<Self> {
        if let Some(e) = edges.iter().find(|e| e.width() != n) {
            return Err(Error::Shape(format!("edge of width {} on {n} vertices", e.width())));
        }
        Hypergraph::new(n, edges.iter().map(|e| e.bits()).collect())
    }

    pub fn from_edge_lists<E: AsRef<[usize]>>(n: usize, edges: &[E]) -> Result<Self> {
        let sets = edges
            .iter()
            .map(|e| IndexSet::from_indices(n, e.as_ref().iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::from_edge_sets(n, &sets)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn edge(&self, e: usize) -> IndexSet {
        IndexSet::raw(self.n, self.rows[e])
    }

    pub fn edges(&self) -> impl Iterator<Item = IndexSet> + '_ {
        self.rows.iter().map(|&r| IndexSet::raw(self.n, r))
    }

    pub fn incident(&self, e: usize, v: usize) -> bool {
        self.rows[e] >> v & 1 == 1
    }

    /// Edges containing vertex `v`, as an edge bitmask.
    pub fn column(&self, v: usize) -> u64 {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r >> v & 1 == 1)
            .fold(0, |acc, (e, _)| acc | 1 << e)
    }

    pub fn all_edges(&self) -> IndexSet {
        IndexSet::full(self.rows.len())
    }

    pub fn all_vertices(&self) -> IndexSet {
        IndexSet::full(self.n)
    }

    pub fn is_unit(&self) -> bool {
        self.n == 0 && self.rows.is_empty()
    }

    pub fn dual(&self) -> Hypergraph {
        Hypergraph::raw(self.rows.len(), (0..self.n).map(|v| self.column(v)).collect())
    }

    pub fn complement(&self) -> Hypergraph {
        let full = mask(self.n);
        Hypergraph::raw(self.n, self.rows.iter().map(|r| !r & full).collect())
    }

    pub fn derive(&self, which: Involution) -> Hypergraph {
        if which == Involution::Cd {
            let dc = self.complement().dual();
            assert_eq!(dc, self.dual().complement(), "dual and complement do not commute");
            return dc;
        }
        which.apply(self)
    }

    pub fn canonical_key(&self) -> CanonicalKey {
        canonical_key(self)
    }

    /// The sub-hypergraph on vertices `verts` formed by the edges `edges`, each cut down to `verts`.
    pub fn induced(&self, edges: IndexSet, verts: IndexSet) -> Hypergraph {
        let sel = verts.bits();
        Hypergraph::raw(
            verts.len(),
            edges.iter().map(|e| compress(self.rows[e], sel)).collect(),
        )
    }

    /// `(E_{|U}, U)`: the edges lying inside `u`.
    pub fn restrict_to(&self, u: IndexSet) -> Hypergraph {
        let sel = u.bits();
        let rows = self
            .rows
            .iter()
            .filter(|&&r| r & !sel == 0)
            .map(|&r| compress(r, sel))
            .collect();
        Hypergraph::raw(u.len(), rows)
    }

    /// `(E, U)`: every edge intersected with `u`.
    pub fn trace_to(&self, u: IndexSet) -> Hypergraph {
        self.induced(self.all_edges(), u)
    }

    /// `(F, V_{|F})`: the edges `f` and the vertices all of whose edges lie in `f`.
    pub fn co_restrict_edges(&self, f: IndexSet) -> Hypergraph {
        let outside = f
            .complement()
            .iter()
            .fold(0, |acc, e| acc | self.rows[e]);
        self.induced(f, IndexSet::raw(self.n, !outside & mask(self.n)))
    }

    /// Edges containing every vertex of `u`.
    pub fn link(&self, u: IndexSet) -> IndexSet {
        let sel = u.bits();
        let bits = self
            .rows
            .iter()
            .enumerate()
            .filter(|(_, &r)| r & sel == sel)
            .fold(0, |acc, (e, _)| acc | 1 << e);
        IndexSet::raw(self.rows.len(), bits)
    }

    /// Vertices lying on every edge of `f`.
    pub fn core(&self, f: IndexSet) -> IndexSet {
        let bits = f.iter().fold(mask(self.n), |acc, e| acc & self.rows[e]);
        IndexSet::raw(self.n, bits)
    }

    pub fn special_subsets(&self) -> SpecialSubsets {
        let m = self.rows.len();
        let full = mask(self.n);
        let mut nonempty = 0;
        let mut proper = 0;
        let mut covered = 0;
        let mut universal = full;
        for (e, &r) in self.rows.iter().enumerate() {
            if r != 0 {
                nonempty |= 1 << e;
            }
            if r != full {
                proper |= 1 << e;
            }
            covered |= r;
            universal &= r;
        }
        SpecialSubsets {
            nonempty_edges: IndexSet::raw(m, nonempty),
            covered_vertices: IndexSet::raw(self.n, covered),
            proper_edges: IndexSet::raw(m, proper),
            proper_vertices: IndexSet::raw(self.n, !universal & full),
        }
    }

    pub fn has_empty_edge(&self) -> bool {
        self.rows.contains(&0)
    }

    /// Connected components of `(E*, V)`, isolated vertices included as singletons,
    /// ordered by smallest vertex. Empty edges belong to no component.
    pub fn vertex_components(&self) -> Vec<Component> {
        blocks_of(self.n, self.rows.iter().copied())
            .into_iter()
            .map(|b| {
                let edges = self
                    .rows
                    .iter()
                    .enumerate()
                    .filter(|(_, &r)| r & b != 0)
                    .fold(0, |acc, (e, _)| acc | 1 << e);
                Component {
                    edges: IndexSet::raw(self.rows.len(), edges),
                    vertices: IndexSet::raw(self.n, b),
                }
            })
            .collect()
    }

    /// True when the vertex set forms a single component. The empty vertex set does not.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && blocks_of(self.n, self.rows.iter().copied()).len() == 1
    }

    /// The vertex blocks of `V/F`, ordered by smallest vertex.
    pub fn contraction_blocks(&self, f: IndexSet) -> Result<Vec<u64>> {
        if f.width() != self.rows.len() {
            return Err(Error::Shape(format!(
                "edge set of width {} on {} edges",
                f.width(),
                self.rows.len()
            )));
        }
        if let Some(e) = f.iter().find(|&e| self.rows[e] == 0) {
            return Err(Error::Precondition(format!("cannot contract empty edge {e}")));
        }
        Ok(blocks_of(self.n, f.iter().map(|e| self.rows[e])))
    }

    /// `(F^c, V/F)`: collapses each component of `(F, V)` to a point.
    pub fn contract(&self, f: IndexSet) -> Result<Hypergraph> {
        let blocks = self.contraction_blocks(f)?;
        let rows = f
            .complement()
            .iter()
            .map(|e| push_forward(self.rows[e], &blocks))
            .collect();
        Ok(Hypergraph::raw(blocks.len(), rows))
    }

    fn check_union(&self, other: &Hypergraph) -> Result<()> {
        if self.n + other.n > MAX_WIDTH || self.rows.len() + other.rows.len() > MAX_WIDTH {
            return Err(Error::Shape(format!(
                "product of {}x{} and {}x{} exceeds {MAX_WIDTH}",
                self.rows.len(),
                self.n,
                other.rows.len(),
                other.n
            )));
        }
        Ok(())
    }

    /// The product μ: block-diagonal incidence.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        self.check_union(other)?;
        let shift = self.n;
        let rows = self
            .rows
            .iter()
            .copied()
            .chain(other.rows.iter().map(|&r| r << shift))
            .collect();
        Ok(Hypergraph::raw(self.n + other.n, rows))
    }

    /// The product μᶜ: each edge also receives every vertex of the other factor.
    pub fn complement_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        self.check_union(other)?;
        let shift = self.n;
        let left_full = mask(self.n);
        let right_full = mask(other.n) << shift;
        let rows = self
            .rows
            .iter()
            .map(|&r| r | right_full)
            .chain(other.rows.iter().map(|&r| r << shift | left_full))
            .collect();
        Ok(Hypergraph::raw(self.n + other.n, rows))
    }

    /// Simple graph joining two distinct vertices iff some edge contains both.
    pub fn two_section(&self) -> Hypergraph {
        let mut adj = vec![0u64; self.n];
        for &r in &self.rows {
            for v in Bits(r) {
                adj[v] |= r & !(1 << v);
            }
        }
        let mut rows = Vec::new();
        for (u, &a) in adj.iter().enumerate() {
            for v in Bits(a >> u >> 1) {
                rows.push(1 << u | 1 << (u + 1 + v));
            }
        }
        Hypergraph::raw(self.n, rows)
    }

    pub fn drop_empty_edges(&self) -> Hypergraph {
        Hypergraph::raw(self.n, self.rows.iter().copied().filter(|&r| r != 0).collect())
    }

    /// Row `e` as a string of `0`/`1`, vertex 0 first.
    pub fn row_string(&self, e: usize) -> String {
        (0..self.n)
            .map(|v| if self.incident(e, v) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph({}x{}", self.rows.len(), self.n)?;
        for e in 0..self.rows.len() {
            write!(f, " {}", self.row_string(e))?;
        }
        f.write_str(")")
    }
}

#![allow(dead_code)]

use hyperquartet::linear::coeff;
use hyperquartet::{Hypergraph, LinComb, Pair};

pub fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::from_edge_lists(n, edges).unwrap()
}

/// Disjoint union of all arguments.
pub fn join(parts: &[&Hypergraph]) -> Hypergraph {
    parts.iter().fold(Hypergraph::unit(), |acc, h| acc.disjoint_union(h).unwrap())
}

pub fn unit() -> Hypergraph {
    Hypergraph::unit()
}

/// `k` isolated vertices.
pub fn dots(k: usize) -> Hypergraph {
    Hypergraph::edgeless(k)
}

/// `k` empty edges on no vertices.
pub fn empty_edges(k: usize) -> Hypergraph {
    Hypergraph::new(0, vec![0; k]).unwrap()
}

/// One vertex with a single edge on it.
pub fn pointl() -> Hypergraph {
    hg(1, &[&[0]])
}

/// One vertex with two edges on it.
pub fn pointll() -> Hypergraph {
    hg(1, &[&[0], &[0]])
}

/// Two vertices, a loop-like edge on the first and an edge on both.
pub fn cher() -> Hypergraph {
    hg(2, &[&[0], &[0, 1]])
}

pub fn k2() -> Hypergraph {
    hg(2, &[&[0, 1]])
}

pub fn p3() -> Hypergraph {
    hg(3, &[&[0, 1], &[1, 2]])
}

/// A single edge on three vertices.
pub fn triangle() -> Hypergraph {
    hg(3, &[&[0, 1, 2]])
}

pub fn pairs(terms: &[(i64, Hypergraph, Hypergraph)]) -> LinComb<Pair> {
    let mut out = LinComb::zero();
    for (c, l, r) in terms {
        out.add_term((l.canonical_key(), r.canonical_key()), coeff(*c));
    }
    out
}

/// Hypergraphs with at most `max_m` edges and `max_n` vertices.
pub fn arb_hypergraph(max_m: usize, max_n: usize) -> impl proptest::strategy::Strategy<Value = Hypergraph> {
    use proptest::prelude::*;
    (0..=max_n, 0..=max_m).prop_flat_map(|(n, m)| {
        let mask = if n == 0 { 0 } else { (1u64 << n) - 1 };
        proptest::collection::vec(any::<u64>().prop_map(move |r| r & mask), m)
            .prop_map(move |rows| Hypergraph::new(n, rows).unwrap())
    })
}

//! Chromatic polynomials of simple graphs by deletion and contraction.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::polynomial::Polynomial;
use crate::hypergraph::{blocks_of, compress, Bits, Hypergraph, MAX_WIDTH};
use crate::linear::Key;

/// Memo table keyed by the canonical key of a connected simple graph.
///
/// Safe to share between threads; concurrent inserts of the same key store
/// equal values.
#[derive(Default, Debug)]
pub struct RainbowCache {
    map: RwLock<HashMap<Key, Polynomial>>,
}

impl RainbowCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static RainbowCache {
        static GLOBAL: OnceLock<RainbowCache> = OnceLock::new();
        GLOBAL.get_or_init(RainbowCache::new)
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap_or_else(|e| e.into_inner()).len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn get(&self, k: &Key) -> Option<Polynomial> {
        self.map.read().unwrap_or_else(|e| e.into_inner()).get(k).cloned()
    }

    fn insert(&self, k: Key, p: Polynomial) {
        self.map.write().unwrap_or_else(|e| e.into_inner()).entry(k).or_insert(p);
    }
}

/// Simple graph as symmetric adjacency bitmasks.
#[derive(Clone, Debug)]
struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    fn is_complete(&self) -> bool {
        let n = self.adj.len();
        self.edge_count() == n * (n - 1) / 2
    }

    fn induced(&self, sel: u64) -> Graph {
        Graph { adj: Bits(sel).map(|v| compress(self.adj[v], sel)).collect() }
    }

    fn key(&self) -> Option<Key> {
        let mut rows = Vec::new();
        for (u, &a) in self.adj.iter().enumerate() {
            for v in Bits(a >> u >> 1) {
                rows.push(1u64 << u | 1 << (u + 1 + v));
            }
        }
        (rows.len() <= MAX_WIDTH).then(|| Hypergraph::raw(self.adj.len(), rows).canonical_key())
    }

    fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] &= !(1 << v);
        g.adj[v] &= !(1 << u);
        g
    }

    fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g
    }

    /// Identifies `v` with `u` and drops `v`; parallel edges merge.
    fn merge(&self, u: usize, v: usize) -> Graph {
        let n = self.adj.len();
        let mut adj = self.adj.clone();
        let nv = adj[v] & !(1 << u);
        adj[u] = (adj[u] | nv) & !(1 << v) & !(1 << u);
        for w in Bits(nv) {
            adj[w] |= 1 << u;
        }
        let keep = !(1u64 << v) & if n == 64 { u64::MAX } else { (1 << n) - 1 };
        Graph { adj: adj.iter().enumerate().filter(|&(w, _)| w != v).map(|(_, &a)| compress(a, keep)).collect() }
    }
}

fn chromatic(g: &Graph, cache: &RainbowCache) -> Polynomial {
    let n = g.adj.len();
    if n == 0 {
        return Polynomial::one();
    }
    let m = g.edge_count();
    if m == 0 {
        return Polynomial::monomial(n);
    }
    let blocks = blocks_of(n, g.adj.iter().enumerate().map(|(v, &a)| a | 1 << v));
    if blocks.len() > 1 {
        return blocks
            .iter()
            .fold(Polynomial::one(), |acc, &b| &acc * &chromatic(&g.induced(b), cache));
    }
    if g.is_complete() {
        return Polynomial::falling_factorial(n);
    }
    let key = g.key();
    if let Some(p) = key.as_ref().and_then(|k| cache.get(k)) {
        return p;
    }
    let p = if 2 * m <= n * (n - 1) / 2 {
        let u = (0..n).find(|&u| g.adj[u] != 0).expect("graph has an edge");
        let v = g.adj[u].trailing_zeros() as usize;
        &chromatic(&g.without_edge(u, v), cache) - &chromatic(&g.merge(u, v), cache)
    } else {
        let (u, v) = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .find(|&(u, v)| g.adj[u] >> v & 1 == 0)
            .expect("graph is not complete");
        &chromatic(&g.with_edge(u, v), cache) + &chromatic(&g.merge(u, v), cache)
    };
    if let Some(k) = key {
        cache.insert(k, p.clone());
    }
    p
}

/// Classical chromatic polynomial of the two-section of `h`.
pub fn rainbow_poly_with(h: &Hypergraph, cache: &RainbowCache) -> Polynomial {
    let n = h.vertex_count();
    let mut adj = vec![0u64; n];
    for &r in h.rows() {
        for v in Bits(r) {
            adj[v] |= r & !(1 << v);
        }
    }
    let p = chromatic(&Graph { adj }, cache);
    assert!(p.is_integral(), "non-integral rainbow polynomial {p}");
    p
}

pub fn rainbow_poly(h: &Hypergraph) -> Polynomial {
    rainbow_poly_with(h, RainbowCache::global())
}

//! Brute-force coloring counts.
//!
//! Colorings are enumerated up to renaming of colors: each vertex takes a
//! color already in use or the next fresh one, and a fresh color is weighted
//! by the number of unused colors left.

use crate::error::{Error, Result};
use crate::hypergraph::{blocks_of, Bits, Hypergraph};

fn guard(k: u64, n: usize) -> Result<()> {
    if (k as u128).checked_pow(n as u32).is_none() {
        return Err(Error::Resource(format!("{k}^{n} colorings overflow u128")));
    }
    Ok(())
}

struct Counter<'a> {
    order: &'a [usize],
    k: u64,
    /// Whether vertex `order[i]` may take the color whose class is `class`.
    allowed: &'a dyn Fn(usize, usize, u64) -> bool,
    classes: Vec<u64>,
}

impl Counter<'_> {
    fn run(&mut self, i: usize) -> u128 {
        if i == self.order.len() {
            return 1;
        }
        let v = self.order[i];
        let used = self.classes.len();
        let mut total = 0u128;
        for col in 0..used {
            if (self.allowed)(i, v, self.classes[col]) {
                self.classes[col] |= 1 << v;
                total += self.run(i + 1);
                self.classes[col] &= !(1 << v);
            }
        }
        if (used as u64) < self.k && (self.allowed)(i, v, 0) {
            self.classes.push(1 << v);
            total += (self.k - used as u64) as u128 * self.run(i + 1);
            self.classes.pop();
        }
        total
    }
}

fn count_block(order: &[usize], k: u64, allowed: &dyn Fn(usize, usize, u64) -> bool) -> u128 {
    let mut c = Counter { order, k, allowed, classes: Vec::new() };
    c.run(0)
}

/// Number of maps `V → {1..k}` under which no edge is monochromatic.
///
/// Empty edges and single-vertex edges are monochromatic under every map.
pub fn count_colorings(h: &Hypergraph, k: u64) -> Result<u128> {
    guard(k, h.vertex_count())?;
    if h.rows().iter().any(|r| r.count_ones() <= 1) {
        return Ok(0);
    }
    let mut total = 1u128;
    for block in blocks_of(h.vertex_count(), h.rows().iter().copied()) {
        let order: Vec<usize> = Bits(block).collect();
        if order.len() == 1 {
            total *= k as u128;
            continue;
        }
        // edges checked when their last vertex is colored
        let closing: Vec<Vec<u64>> = order
            .iter()
            .map(|&v| {
                h.rows()
                    .iter()
                    .copied()
                    .filter(|&r| r & block != 0 && 63 - r.leading_zeros() as usize == v)
                    .collect()
            })
            .collect();
        let allowed = |i: usize, v: usize, class: u64| {
            let class = class | 1 << v;
            closing[i].iter().all(|&e| e & !class != 0)
        };
        total *= count_block(&order, k, &allowed);
        if total == 0 {
            return Ok(0);
        }
    }
    Ok(total)
}

/// Number of maps `V → {1..k}` that are injective on every edge.
pub fn count_rainbow(h: &Hypergraph, k: u64) -> Result<u128> {
    let n = h.vertex_count();
    guard(k, n)?;
    let mut adj = vec![0u64; n];
    for &r in h.rows() {
        for v in Bits(r) {
            adj[v] |= r & !(1 << v);
        }
    }
    let mut total = 1u128;
    for block in blocks_of(n, adj.iter().enumerate().map(|(v, &a)| a | 1 << v)) {
        let order: Vec<usize> = Bits(block).collect();
        let allowed = |_: usize, v: usize, class: u64| adj[v] & class == 0;
        total *= count_block(&order, k, &allowed);
        if total == 0 {
            return Ok(0);
        }
    }
    Ok(total)
}

/// Direct enumeration of all `k^n` maps; only for cross-checking.
pub fn count_colorings_naive(
    h: &Hypergraph,
    k: u64,
    ok: impl Fn(&[u64], u64) -> bool,
) -> Result<u128> {
    let n = h.vertex_count();
    guard(k, n)?;
    let total = (k as u128).pow(n as u32);
    let mut colors = vec![0u64; n];
    let mut count = 0u128;
    for mut idx in 0..total {
        for c in colors.iter_mut() {
            *c = (idx % k as u128) as u64;
            idx /= k as u128;
        }
        if h.rows().iter().all(|&r| ok(&colors, r)) {
            count += 1;
        }
    }
    Ok(count)
}

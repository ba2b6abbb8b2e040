//! Instance generators.

use std::collections::BTreeSet;

use num_rational::Ratio;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{mask, Hypergraph, Involution, MAX_WIDTH};
use crate::linear::Key;

/// Largest `max_m · max_n` accepted by [`enumerate_hypergraphs`].
pub const MAX_ENUMERATION_CELLS: usize = 16;

/// One representative per isomorphism class with at most `max_m` edges and
/// `max_n` vertices, in canonical-key order.
pub fn enumerate_hypergraphs(max_m: usize, max_n: usize) -> Result<Vec<Hypergraph>> {
    if max_m.saturating_mul(max_n) > MAX_ENUMERATION_CELLS {
        return Err(Error::Resource(format!(
            "{max_m}x{max_n} enumeration exceeds {MAX_ENUMERATION_CELLS} cells"
        )));
    }
    let mut keys = BTreeSet::new();
    for n in 0..=max_n {
        let top = mask(n);
        for m in 0..=max_m {
            // non-decreasing row sequences: one per multiset of rows
            let mut rows = vec![0u64; m];
            loop {
                keys.insert(Hypergraph::raw(n, rows.clone()).canonical_key());
                let Some(i) = rows.iter().rposition(|&r| r < top) else { break };
                let next = rows[i] + 1;
                rows[i..].fill(next);
            }
        }
    }
    Ok(keys.iter().map(Key::to_hypergraph).collect())
}

/// Each incidence bit set with probability `p`, from a seeded ChaCha8 stream.
pub fn random_hypergraph(seed: u64, m: usize, n: usize, p: Ratio<u32>) -> Result<Hypergraph> {
    if m > MAX_WIDTH || n > MAX_WIDTH {
        return Err(Error::Shape(format!("{m}x{n} exceeds {MAX_WIDTH}x{MAX_WIDTH}")));
    }
    if p > Ratio::from_integer(1) {
        return Err(Error::Invalid(format!("probability {p} above 1")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..m)
        .map(|_| {
            (0..n).fold(0u64, |row, v| {
                if rng.random_ratio(*p.numer(), *p.denom()) {
                    row | 1 << v
                } else {
                    row
                }
            })
        })
        .collect();
    Hypergraph::new(n, rows)
}

/// `count` hypergraphs with `m ≤ max_m`, `n ≤ max_n` and bit density one half.
pub fn random_instances(seed: u64, count: usize, max_m: usize, max_n: usize) -> Result<Vec<Hypergraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(0..=max_m);
            let n = rng.random_range(0..=max_n);
            random_hypergraph(rng.random(), m, n, Ratio::new(1, 2))
        })
        .collect()
}

/// Membership in `ω(H°)`: `ω(h)` has no empty edge.
///
/// For `ω = d` this says no isolated vertex, for `c` no edge on every vertex,
/// for `cd` no vertex on every edge.
pub fn in_subspace(h: &Hypergraph, w: Involution) -> bool {
    !w.apply(h).has_empty_edge()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Bits;

    /// Number of orbits of `S_m × S_n` on `m×n` matrices, by direct search
    /// over all matrices and all permutation pairs.
    fn orbit_count(m: usize, n: usize) -> usize {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for i in 0..k {
                    let mut q = p.clone();
                    q.insert(i, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let (pm, pn) = (perms(m), perms(n));
        let mut seen = BTreeSet::new();
        let mut orbits = 0;
        for bits in 0u64..1 << (m * n) {
            let rows: Vec<u64> = (0..m).map(|e| bits >> (e * n) & mask(n)).collect();
            if seen.contains(&rows) {
                continue;
            }
            orbits += 1;
            for p in &pm {
                for q in &pn {
                    let img: Vec<u64> = (0..m)
                        .map(|e| Bits(rows[p[e]]).fold(0, |acc, v| acc | 1 << q[v]))
                        .collect();
                    seen.insert(img);
                }
            }
        }
        orbits
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_hypergraphs(0, 0).unwrap(), vec![Hypergraph::unit()]);
        assert_eq!(enumerate_hypergraphs(1, 1).unwrap().len(), 5);
    }

    #[test]
    fn class_counts_match_orbit_counts() {
        for (max_m, max_n) in [(2, 2), (2, 3), (3, 2)] {
            let want: usize = (0..=max_m)
                .flat_map(|m| (0..=max_n).map(move |n| (m, n)))
                .map(|(m, n)| orbit_count(m, n))
                .sum();
            assert_eq!(enumerate_hypergraphs(max_m, max_n).unwrap().len(), want);
        }
    }

    #[test]
    fn enumeration_bound() {
        assert!(matches!(enumerate_hypergraphs(5, 4), Err(Error::Resource(_))));
    }

    #[test]
    fn random_extremes_and_determinism() {
        let zero = random_hypergraph(7, 3, 4, Ratio::new(0, 1)).unwrap();
        assert!(zero.rows().iter().all(|&r| r == 0));
        let one = random_hypergraph(7, 3, 4, Ratio::new(1, 1)).unwrap();
        assert!(one.rows().iter().all(|&r| r == 0b1111));
        let a = random_hypergraph(42, 5, 6, Ratio::new(1, 2)).unwrap();
        assert_eq!(a, random_hypergraph(42, 5, 6, Ratio::new(1, 2)).unwrap());
        assert_eq!(random_instances(9, 20, 4, 4).unwrap(), random_instances(9, 20, 4, 4).unwrap());
    }

    #[test]
    fn subspaces() {
        let h = Hypergraph::new(2, vec![0b01]).unwrap();
        assert!(in_subspace(&h, Involution::Id));
        assert!(!in_subspace(&h, Involution::D));
        assert!(in_subspace(&h, Involution::C));
        assert!(!in_subspace(&h, Involution::Cd));
    }
}

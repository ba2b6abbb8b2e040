//! Explicit formulas for the conjugated coproducts, written without any
//! involution so they can be compared with `(ω⊗ω)∘f∘ω`.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::coalgebra::{Base, CoproductKind};
use crate::hypergraph::{blocks_of, compress, mask, Bits, Hypergraph, Involution};
use crate::linear::{Coeff, LinComb, Pair};

/// The kinds with a direct formula.
pub const ORACLE_KINDS: [CoproductKind; 6] = [
    CoproductKind::new(Base::Delta, Involution::D),
    CoproductKind::new(Base::Delta, Involution::C),
    CoproductKind::new(Base::Delta, Involution::Cd),
    CoproductKind::new(Base::Ext, Involution::D),
    CoproductKind::new(Base::Ext, Involution::C),
    CoproductKind::new(Base::Ext, Involution::Cd),
];

struct Collect(BTreeMap<Pair, u64>);

impl Collect {
    fn emit(&mut self, l: &Hypergraph, r: &Hypergraph) {
        *self.0.entry((l.canonical_key(), r.canonical_key())).or_insert(0) += 1;
    }

    fn finish(self) -> LinComb<Pair> {
        self.0.into_iter().map(|(p, c)| (p, Coeff::from_integer(BigInt::from(c)))).collect()
    }
}

/// Hypergraph on `verts` whose edges are the given rows, compressed.
fn on(verts: u64, rows: impl IntoIterator<Item = u64>) -> Hypergraph {
    Hypergraph::raw(verts.count_ones() as usize, rows.into_iter().map(|r| compress(r, verts)).collect())
}

/// The direct formula for `kind`, or `None` if it has none.
pub fn direct(kind: CoproductKind, h: &Hypergraph) -> Option<LinComb<Pair>> {
    let pos = ORACLE_KINDS.iter().position(|&k| k == kind)?;
    let (m, n) = (h.edge_count(), h.vertex_count());
    let rows = h.rows();
    let vall = mask(n);
    let eall = mask(m);
    let mut out = Collect(BTreeMap::new());
    match pos {
        // Σ_F (F, V|F) ⊗ (Fᶜ, V|Fᶜ)
        0 => {
            for f in h.all_edges().subsets() {
                out.emit(&h.co_restrict_edges(f), &h.co_restrict_edges(f.complement()));
            }
        }
        // Σ_U (lk_{Uᶜ} E, U) ⊗ (lk_U E, Uᶜ)
        1 => {
            for u in h.all_vertices().subsets() {
                let uc = u.complement();
                out.emit(&h.induced(h.link(uc), u), &h.induced(h.link(u), uc));
            }
        }
        // Σ_F (F, cor_{Fᶜ} V) ⊗ (Fᶜ, cor_F V)
        2 => {
            for f in h.all_edges().subsets() {
                let fc = f.complement();
                out.emit(&h.induced(f, h.core(fc)), &h.induced(fc, h.core(f)));
            }
        }
        // Σ_{U ⊆ V*} (E, U) ⊗ (E/U, Uᶜ): edges meeting a common vertex of U merge
        3 => {
            for u in h.special_subsets().covered_vertices.subsets() {
                let classes = blocks_of(m, Bits(u.bits()).map(|v| h.column(v)));
                let merged = classes.iter().map(|&c| Bits(c).fold(0, |acc, e| acc | rows[e]));
                out.emit(&h.trace_to(u), &on(vall & !u.bits(), merged));
            }
        }
        // Σ_{F ⊆ E^×} (F, V) ⊗ (Fᶜ, V/F̄): complements of F-edges collapse
        4 => {
            for f in h.special_subsets().proper_edges.subsets() {
                let blocks = blocks_of(n, Bits(f.bits()).map(|e| !rows[e] & vall));
                let right: Vec<u64> = Bits(eall & !f.bits())
                    .map(|e| {
                        blocks
                            .iter()
                            .enumerate()
                            .filter(|&(_, &b)| b & !rows[e] == 0)
                            .fold(0, |acc, (i, _)| acc | 1 << i)
                    })
                    .collect();
                out.emit(&h.induced(f, h.all_vertices()), &Hypergraph::raw(blocks.len(), right));
            }
        }
        // Σ_{U ⊆ V^×} (E, U) ⊗ (E/Ū, Uᶜ): edges missing a common vertex of U merge
        _ => {
            for u in h.special_subsets().proper_vertices.subsets() {
                let classes = blocks_of(m, Bits(u.bits()).map(|v| !h.column(v) & eall));
                let met = classes.iter().map(|&c| Bits(c).fold(vall, |acc, e| acc & rows[e]));
                out.emit(&h.trace_to(u), &on(vall & !u.bits(), met));
            }
        }
    }
    Some(out.finish())
}

//! Chromatic polynomials of hypergraphs and their quartets.

mod coloring;
mod polynomial;
mod rainbow;

pub use coloring::{count_colorings, count_colorings_naive, count_rainbow};
pub use polynomial::{interpolate, interpolate_counts, Polynomial};
pub use rainbow::{rainbow_poly, rainbow_poly_with, RainbowCache};

use crate::error::{Error, Result};
use crate::hypergraph::{blocks_of, Hypergraph, Involution};

pub const MAX_POLY_VERTICES: usize = 16;
pub const MAX_POLY_EDGES: usize = 20;

fn poly_bounds(h: &Hypergraph) -> Result<()> {
    if h.vertex_count() > MAX_POLY_VERTICES || h.edge_count() > MAX_POLY_EDGES {
        return Err(Error::Resource(format!(
            "{}x{} exceeds the {MAX_POLY_EDGES}x{MAX_POLY_VERTICES} polynomial bound",
            h.edge_count(),
            h.vertex_count()
        )));
    }
    Ok(())
}

/// Chromatic polynomial, with empty edges dropped first.
pub fn chromatic_poly(h: &Hypergraph) -> Result<Polynomial> {
    let h = h.drop_empty_edges();
    poly_bounds(&h)?;
    let counts = (0..=h.vertex_count() as u64)
        .map(|k| count_colorings(&h, k))
        .collect::<Result<Vec<_>>>()?;
    let p = interpolate_counts(&counts)?;
    assert!(p.is_integral(), "non-integral chromatic polynomial {p}");
    Ok(p)
}

/// `Σ_{F ⊆ E*} (−1)^{|F|} x^{|V/F|}`, with empty edges dropped first.
pub fn chromatic_incl_excl(h: &Hypergraph) -> Result<Polynomial> {
    let h = h.drop_empty_edges();
    poly_bounds(&h)?;
    let n = h.vertex_count();
    let mut coeffs = vec![0i64; n + 1];
    for f in h.all_edges().subsets() {
        let classes = blocks_of(n, f.iter().map(|e| h.rows()[e])).len();
        coeffs[classes] += if f.len() % 2 == 0 { 1 } else { -1 };
    }
    Ok(Polynomial::from_ints(&coeffs))
}

/// The values of one invariant on `h`, `hᵈ`, `hᶜ` and `hᶜᵈ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quartet {
    pub id: Polynomial,
    pub d: Polynomial,
    pub c: Polynomial,
    pub cd: Polynomial,
}

impl Quartet {
    pub fn try_build(
        h: &Hypergraph,
        mut f: impl FnMut(&Hypergraph) -> Result<Polynomial>,
    ) -> Result<Quartet> {
        Ok(Quartet {
            id: f(h)?,
            d: f(&h.derive(Involution::D))?,
            c: f(&h.derive(Involution::C))?,
            cd: f(&h.derive(Involution::Cd))?,
        })
    }

    pub fn get(&self, w: Involution) -> &Polynomial {
        match w {
            Involution::Id => &self.id,
            Involution::D => &self.d,
            Involution::C => &self.c,
            Involution::Cd => &self.cd,
        }
    }

    pub fn to_array(&self) -> [&Polynomial; 4] {
        [&self.id, &self.d, &self.c, &self.cd]
    }
}

impl Quartet {
    /// JSON object with keys `{prefix}`, `{prefix}_d`, `{prefix}_c`, `{prefix}_cd`.
    pub fn to_json(&self, prefix: &str) -> String {
        let mut out = String::from("{");
        for (i, w) in Involution::ALL.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let name = match w {
                Involution::Id => prefix.to_string(),
                w => format!("{prefix}_{}", w.name()),
            };
            out.push_str(&serde_json::to_string(&name).expect("string serializes"));
            out.push(':');
            out.push_str(&serde_json::to_string(self.get(*w)).expect("polynomial serializes"));
        }
        out.push('}');
        out
    }
}

pub fn quartet(h: &Hypergraph) -> Result<Quartet> {
    Quartet::try_build(h, chromatic_poly)
}

pub fn rainbow_quartet(h: &Hypergraph) -> Result<Quartet> {
    Quartet::try_build(h, |g| Ok(rainbow_poly(g)))
}

/// The four matrix conditions: a row with exactly one 1, a column with exactly
/// one 1, a row with exactly one 0, a column with exactly one 0.
pub fn vanishing_criteria(h: &Hypergraph) -> [bool; 4] {
    let row_ones = |g: &Hypergraph| g.rows().iter().any(|r| r.count_ones() == 1);
    let d = h.dual();
    let c = h.complement();
    let cd = c.dual();
    [row_ones(h), row_ones(&d), row_ones(&c), row_ones(&cd)]
}

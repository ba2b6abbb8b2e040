//! Coproducts, counits and products on isomorphism classes.
//!
//! Each of the five base coproducts is an explicit sum over vertex subsets,
//! edge subsets or vertex partitions. A conjugated kind `f^ω` is evaluated as
//! `(ω⊗ω)∘f∘ω`, applying the involution to the argument and to both factors
//! of every emitted term before canonicalizing.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{compress, push_forward, Hypergraph, Involution};
use crate::linear::{Coeff, Key, LinComb, Pair};
use crate::partition::{block_masks, set_partitions_bounded, DEFAULT_PARTITION_BOUND};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Base {
    /// Δ: restriction on both sides.
    Delta,
    /// δ: extraction and contraction.
    Ext,
    /// Δ′: restriction on the left, trace on the right.
    DeltaPrime,
    /// Δ″: trace on both sides.
    DeltaDoublePrime,
    /// δ″: connected fibers of a vertex partition.
    ExtDoublePrime,
}

impl Base {
    pub const ALL: [Base; 5] =
        [Base::Delta, Base::Ext, Base::DeltaPrime, Base::DeltaDoublePrime, Base::ExtDoublePrime];

    pub fn name(self) -> &'static str {
        match self {
            Base::Delta => "Delta",
            Base::Ext => "delta",
            Base::DeltaPrime => "Dprime",
            Base::DeltaDoublePrime => "Dpp",
            Base::ExtDoublePrime => "dpp",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CoproductKind {
    pub base: Base,
    pub involution: Involution,
}

impl CoproductKind {
    pub const DELTA: CoproductKind = CoproductKind::new(Base::Delta, Involution::Id);
    pub const EXT: CoproductKind = CoproductKind::new(Base::Ext, Involution::Id);
    pub const DELTA_PRIME: CoproductKind = CoproductKind::new(Base::DeltaPrime, Involution::Id);
    pub const DELTA_DOUBLE_PRIME: CoproductKind =
        CoproductKind::new(Base::DeltaDoublePrime, Involution::Id);
    pub const EXT_DOUBLE_PRIME: CoproductKind =
        CoproductKind::new(Base::ExtDoublePrime, Involution::Id);

    pub const fn new(base: Base, involution: Involution) -> Self {
        CoproductKind { base, involution }
    }

    pub fn conj(self, involution: Involution) -> Self {
        CoproductKind { base: self.base, involution }
    }

    /// All twenty instantiated kinds, base-major.
    pub fn all() -> Vec<CoproductKind> {
        Base::ALL
            .iter()
            .flat_map(|&b| Involution::ALL.iter().map(move |&w| CoproductKind::new(b, w)))
            .collect()
    }

    /// The comodule coproducts δ and δ″ and their conjugates.
    pub fn is_comodule(self) -> bool {
        matches!(self.base, Base::Ext | Base::ExtDoublePrime)
    }

    pub fn name(self) -> String {
        match self.involution {
            Involution::Id => self.base.name().to_string(),
            w => format!("{}-{}", self.base.name(), w.name()),
        }
    }

    pub fn counit(self) -> Counit {
        let base = match self.base {
            Base::Delta | Base::DeltaPrime | Base::DeltaDoublePrime => CounitBase::NoVertices,
            Base::Ext => CounitBase::NoEdges,
            Base::ExtDoublePrime => CounitBase::SingletonComponents,
        };
        Counit { base, involution: self.involution }
    }

    /// The product this kind is compatible with.
    pub fn product(self) -> Product {
        match (self.base, self.involution.has_complement()) {
            (Base::DeltaDoublePrime, _) | (_, false) => Product::Mu,
            (_, true) => Product::MuC,
        }
    }
}

impl fmt::Display for CoproductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for CoproductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (b, w) = match s.split_once('-') {
            Some((b, w)) => (b, w.parse()?),
            None => (s, Involution::Id),
        };
        let base = Base::ALL
            .into_iter()
            .find(|x| x.name() == b)
            .ok_or_else(|| Error::Invalid(format!("unknown coproduct {s:?}")))?;
        Ok(CoproductKind::new(base, w))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CounitBase {
    NoVertices,
    NoEdges,
    /// Every vertex component is a single vertex.
    SingletonComponents,
}

/// A base counit composed with an involution.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Counit {
    pub base: CounitBase,
    pub involution: Involution,
}

impl Counit {
    pub const EPS_DELTA: Counit = Counit { base: CounitBase::NoVertices, involution: Involution::Id };
    pub const EPS_DELTA_D: Counit = Counit { base: CounitBase::NoEdges, involution: Involution::Id };
    pub const EPS_DELTA_C: Counit = Counit::EPS_DELTA;
    pub const EPS_DELTA_CD: Counit = Counit::EPS_DELTA_D;
    pub const EPS_EXT: Counit = Counit { base: CounitBase::NoEdges, involution: Involution::Id };
    pub const EPS_DOUBLE_PRIME: Counit =
        Counit { base: CounitBase::SingletonComponents, involution: Involution::Id };

    pub fn holds(&self, h: &Hypergraph) -> bool {
        let g;
        let h = if self.involution == Involution::Id {
            h
        } else {
            g = self.involution.apply(h);
            &g
        };
        match self.base {
            CounitBase::NoVertices => h.vertex_count() == 0,
            CounitBase::NoEdges => h.edge_count() == 0,
            CounitBase::SingletonComponents => h.rows().iter().all(|r| r.count_ones() <= 1),
        }
    }

    pub fn eval(&self, h: &Hypergraph) -> Coeff {
        if self.holds(h) {
            Coeff::one()
        } else {
            Coeff::zero()
        }
    }

    pub fn eval_key(&self, k: &Key) -> Coeff {
        self.eval(&k.to_hypergraph())
    }
}

pub fn counit(kind: Counit, h: &Hypergraph) -> Coeff {
    kind.eval(h)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Product {
    /// Disjoint union.
    Mu,
    /// Disjoint union with each edge extended by the other factor's vertices.
    MuC,
}

impl Product {
    pub fn apply(self, a: &Hypergraph, b: &Hypergraph) -> Result<Hypergraph> {
        match self {
            Product::Mu => a.disjoint_union(b),
            Product::MuC => a.complement_union(b),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Product::Mu => "mu",
            Product::MuC => "muC",
        }
    }
}

pub fn product_on_keys(p: Product, a: &Key, b: &Key) -> Result<Key> {
    if a.is_unit() {
        return Ok(b.clone());
    }
    if b.is_unit() {
        return Ok(a.clone());
    }
    Ok(p.apply(&a.to_hypergraph(), &b.to_hypergraph())?.canonical_key())
}

/// Enumeration limits for a single coproduct call.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Bounds {
    /// Largest ground set whose subsets are summed over.
    pub max_subset_size: usize,
    /// Largest vertex set whose partitions are summed over.
    pub max_partition_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_subset_size: 12, max_partition_size: DEFAULT_PARTITION_BOUND }
    }
}

impl Bounds {
    fn subsets(&self, k: usize, what: &str) -> Result<()> {
        if k > self.max_subset_size {
            return Err(Error::Resource(format!(
                "2^{k} {what} subsets exceed 2^{}",
                self.max_subset_size
            )));
        }
        Ok(())
    }
}

/// Every summand of the base coproduct `base` on `h`, each with coefficient one.
pub fn expand_base(
    base: Base,
    h: &Hypergraph,
    bounds: &Bounds,
    emit: &mut dyn FnMut(Hypergraph, Hypergraph),
) -> Result<()> {
    let verts = h.all_vertices();
    match base {
        Base::Delta | Base::DeltaPrime | Base::DeltaDoublePrime => {
            bounds.subsets(h.vertex_count(), "vertex")?;
            for u in verts.subsets() {
                let uc = u.complement();
                let left = match base {
                    Base::DeltaDoublePrime => h.trace_to(u),
                    _ => h.restrict_to(u),
                };
                let right = match base {
                    Base::Delta => h.restrict_to(uc),
                    _ => h.trace_to(uc),
                };
                emit(left, right);
            }
        }
        Base::Ext => {
            let nonempty = h.special_subsets().nonempty_edges;
            bounds.subsets(nonempty.len(), "edge")?;
            for f in nonempty.subsets() {
                emit(h.induced(f, verts), h.contract(f)?);
            }
        }
        Base::ExtDoublePrime => {
            'partitions: for rgs in set_partitions_bounded(h.vertex_count(), bounds.max_partition_size)? {
                let blocks = block_masks(&rgs);
                let mut left = Hypergraph::unit();
                for &b in &blocks {
                    let rows = h
                        .rows()
                        .iter()
                        .filter(|&&r| r & b != 0)
                        .map(|&r| compress(r, b))
                        .collect();
                    let fiber = Hypergraph::raw(b.count_ones() as usize, rows);
                    if !fiber.is_connected() {
                        continue 'partitions;
                    }
                    left = left.disjoint_union(&fiber)?;
                }
                let rows = h.rows().iter().map(|&r| push_forward(r, &blocks)).collect();
                emit(left, Hypergraph::raw(blocks.len(), rows));
            }
        }
    }
    Ok(())
}

pub fn coproduct_with(kind: CoproductKind, h: &Hypergraph, bounds: &Bounds) -> Result<LinComb<Pair>> {
    let w = kind.involution;
    let arg = w.apply(h);
    let mut counts: BTreeMap<Pair, u64> = BTreeMap::new();
    expand_base(kind.base, &arg, bounds, &mut |l, r| {
        let pair = (w.apply(&l).canonical_key(), w.apply(&r).canonical_key());
        *counts.entry(pair).or_insert(0) += 1;
    })?;
    Ok(counts
        .into_iter()
        .map(|(p, c)| (p, Coeff::from_integer(BigInt::from(c))))
        .collect())
}

pub fn coproduct(kind: CoproductKind, h: &Hypergraph) -> Result<LinComb<Pair>> {
    coproduct_with(kind, h, &Bounds::default())
}

pub fn coproduct_key(kind: CoproductKind, k: &Key) -> Result<LinComb<Pair>> {
    coproduct(kind, &k.to_hypergraph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::coeff;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::from_edge_lists(n, edges).unwrap()
    }

    fn key(h: &Hypergraph) -> Key {
        h.canonical_key()
    }

    #[test]
    fn names_round_trip() {
        for k in CoproductKind::all() {
            assert_eq!(k.name().parse::<CoproductKind>().unwrap(), k);
        }
        assert_eq!("Delta-cd".parse::<CoproductKind>().unwrap().involution, Involution::Cd);
        assert!("Gamma".parse::<CoproductKind>().is_err());
        assert_eq!(CoproductKind::all().len(), 20);
    }

    #[test]
    fn products_assigned_per_kind() {
        use Involution::*;
        for (b, w, p) in [
            (Base::Delta, Id, Product::Mu),
            (Base::Delta, D, Product::Mu),
            (Base::Delta, C, Product::MuC),
            (Base::Ext, Cd, Product::MuC),
            (Base::DeltaDoublePrime, C, Product::Mu),
            (Base::DeltaPrime, Id, Product::Mu),
        ] {
            assert_eq!(CoproductKind::new(b, w).product(), p);
        }
    }

    #[test]
    fn unit_maps_to_unit_tensor_unit() {
        let u = Hypergraph::unit();
        for k in CoproductKind::all() {
            let c = coproduct(k, &u).unwrap();
            assert_eq!(c, LinComb::basis((Key::unit(), Key::unit())), "{k}");
        }
    }

    #[test]
    fn counits() {
        let dot = Hypergraph::edgeless(1);
        assert_eq!(Counit::EPS_DELTA.eval(&Hypergraph::unit()), coeff(1));
        assert_eq!(Counit::EPS_DELTA.eval(&dot), coeff(0));
        assert_eq!(Counit::EPS_EXT.eval(&Hypergraph::edgeless(2)), coeff(1));
        assert_eq!(Counit::EPS_DOUBLE_PRIME.eval(&hg(1, &[&[0]])), coeff(1));
        assert_eq!(Counit::EPS_DOUBLE_PRIME.eval(&hg(2, &[&[0, 1]])), coeff(0));
        assert_eq!(Counit::EPS_DOUBLE_PRIME.eval(&Hypergraph::unit()), coeff(1));
    }

    #[test]
    fn delta_of_vertex() {
        let dot = Hypergraph::edgeless(1);
        let c = coproduct(CoproductKind::DELTA, &dot).unwrap();
        let mut want = LinComb::basis((Key::unit(), key(&dot)));
        want.add_term((key(&dot), Key::unit()), coeff(1));
        assert_eq!(c, want);
    }

    #[test]
    fn ext_keeps_empty_edges_on_the_right() {
        let h = Hypergraph::new(2, vec![0b11, 0]).unwrap();
        let c = coproduct(CoproductKind::EXT, &h).unwrap();
        let mut want = LinComb::basis((key(&Hypergraph::edgeless(2)), key(&h)));
        want.add_term(
            (key(&hg(2, &[&[0, 1]])), key(&Hypergraph::new(1, vec![0]).unwrap())),
            coeff(1),
        );
        assert_eq!(c, want);
    }

    #[test]
    fn resource_bounds() {
        let big = Hypergraph::edgeless(13);
        assert!(matches!(coproduct(CoproductKind::DELTA, &big), Err(Error::Resource(_))));
        let tight = Bounds { max_subset_size: 12, max_partition_size: 3 };
        let four = Hypergraph::edgeless(4);
        assert!(matches!(
            coproduct_with(CoproductKind::EXT_DOUBLE_PRIME, &four, &tight),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn key_products() {
        let k2 = key(&hg(2, &[&[0, 1]]));
        let dot = key(&Hypergraph::edgeless(1));
        assert_eq!(product_on_keys(Product::MuC, &k2, &dot).unwrap(), key(&hg(3, &[&[0, 1, 2]])));
        assert_eq!(product_on_keys(Product::Mu, &k2, &Key::unit()).unwrap(), k2);
        assert_eq!(
            product_on_keys(Product::Mu, &k2, &dot).unwrap(),
            product_on_keys(Product::Mu, &dot, &k2).unwrap()
        );
    }
}

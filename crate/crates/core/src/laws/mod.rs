//! Executable algebraic laws over generated hypergraphs.

mod generate;
mod golden;
pub mod oracle;
mod runner;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use serde_json::{json, Value};

pub use generate::{
    enumerate_hypergraphs, in_subspace, random_hypergraph, random_instances, MAX_ENUMERATION_CELLS,
};
pub use golden::{fixtures, multi_full_edge, triangle_of_multiplicities, triangle_tuples, Fixture, Invariant};
pub use runner::{recheck, run_suite, run_suite_with, Counterexample, LawOutcome, LawReport, SuiteConfig};

use crate::chromatic::{chromatic_poly, count_colorings, count_rainbow, rainbow_poly, Polynomial};
use crate::coalgebra::{coproduct_key, expand_base, product_on_keys, Base, Bounds, CoproductKind, Product};
use crate::error::{Error, Result};
use crate::hgx::{terms_json, to_hgx, Factors};
use crate::hypergraph::{Hypergraph, Involution};
use crate::linear::{apply_slot, contract_slot, lc_tensor, mult_slots_13, swap, swap_13, Key, LinComb, Pair};

/// Where law checks obtain coproducts; swapping it out allows fault injection.
pub trait CoproductSource: Sync {
    fn coproduct(&self, kind: CoproductKind, k: &Key) -> Result<LinComb<Pair>>;
}

/// Computes every coproduct afresh.
pub struct Direct;

impl CoproductSource for Direct {
    fn coproduct(&self, kind: CoproductKind, k: &Key) -> Result<LinComb<Pair>> {
        coproduct_key(kind, k)
    }
}

/// Memoizes coproducts by kind and key.
#[derive(Default)]
pub struct Memo {
    map: RwLock<HashMap<(CoproductKind, Key), LinComb<Pair>>>,
}

impl Memo {
    pub fn new() -> Self {
        Self::default()
    }
}

impl CoproductSource for Memo {
    fn coproduct(&self, kind: CoproductKind, k: &Key) -> Result<LinComb<Pair>> {
        let key = (kind, k.clone());
        if let Some(v) = self.map.read().unwrap_or_else(|e| e.into_inner()).get(&key) {
            return Ok(v.clone());
        }
        let v = coproduct_key(kind, k)?;
        self.map.write().unwrap_or_else(|e| e.into_inner()).entry(key).or_insert_with(|| v.clone());
        Ok(v)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Suite {
    Coassoc,
    Counit,
    Bialgebra,
    Mixed,
    Cointeraction,
    Convolution,
    QuartetGolden,
    ConjugateOracle,
    Cocommutativity,
    Grading,
    Closure,
}

impl Suite {
    pub const ALL: [Suite; 11] = [
        Suite::Coassoc,
        Suite::Counit,
        Suite::Bialgebra,
        Suite::Mixed,
        Suite::Cointeraction,
        Suite::Convolution,
        Suite::QuartetGolden,
        Suite::ConjugateOracle,
        Suite::Cocommutativity,
        Suite::Grading,
        Suite::Closure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Coassoc => "coassoc",
            Suite::Counit => "counit",
            Suite::Bialgebra => "bialgebra",
            Suite::Mixed => "mixed",
            Suite::Cointeraction => "cointeraction",
            Suite::Convolution => "convolution",
            Suite::QuartetGolden => "quartet-golden",
            Suite::ConjugateOracle => "conjugate-oracle",
            Suite::Cocommutativity => "cocommutativity",
            Suite::Grading => "grading",
            Suite::Closure => "closure",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

/// A coproduct `Δ` and a comodule coproduct `δ` that should cointeract.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CointeractionPair {
    pub outer: CoproductKind,
    pub inner: CoproductKind,
    pub product: Product,
}

impl CointeractionPair {
    pub fn all() -> Vec<CointeractionPair> {
        let mut out: Vec<_> = Involution::ALL
            .iter()
            .map(|&w| {
                let inner = CoproductKind::EXT.conj(w);
                CointeractionPair { outer: CoproductKind::DELTA.conj(w), inner, product: inner.product() }
            })
            .collect();
        out.push(CointeractionPair {
            outer: CoproductKind::DELTA_DOUBLE_PRIME,
            inner: CoproductKind::EXT_DOUBLE_PRIME,
            product: Product::Mu,
        });
        out
    }

    /// Instances must lie in this subspace `ω(H°)`.
    pub fn subspace(self) -> Involution {
        self.inner.involution
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Convolution {
    /// `count(h, a+b) = Σ_U count(E|U, a)·count(E|Uᶜ, b)`.
    Sum,
    /// `count(h, a·b) = Σ_F count((F,V), a)·count(h/F, b)` on `H°`.
    Product,
    /// The sum identity for rainbow counts with traces on both sides.
    RainbowSum,
    /// The product identity for rainbow counts over connected-fiber partitions, on `H°`.
    RainbowProduct,
    /// `χ(h)(0) = 0` for `V ≠ ∅` and `χ(h) = 1` for `V = ∅`, for both invariants.
    ZeroConstant,
    /// `χ(h₁ ⊔ h₂) = χ(h₁)·χ(h₂)` for both invariants.
    Morphism,
}

impl Convolution {
    pub const ALL: [Convolution; 6] = [
        Convolution::Sum,
        Convolution::Product,
        Convolution::RainbowSum,
        Convolution::RainbowProduct,
        Convolution::ZeroConstant,
        Convolution::Morphism,
    ];

    fn name(self) -> &'static str {
        match self {
            Convolution::Sum => "sum",
            Convolution::Product => "product",
            Convolution::RainbowSum => "rainbow-sum",
            Convolution::RainbowProduct => "rainbow-product",
            Convolution::ZeroConstant => "zero-constant",
            Convolution::Morphism => "morphism",
        }
    }
}

/// Color counts `0..=CONVOLUTION_COLORS` used by the convolution identities.
pub const CONVOLUTION_COLORS: u64 = 3;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Law {
    Coassoc(CoproductKind),
    /// Two kinds that must agree everywhere.
    Coincide(CoproductKind, CoproductKind),
    CounitLeft(CoproductKind),
    CounitRight(CoproductKind),
    Bialgebra(CoproductKind, Product),
    Cocommutative(CoproductKind),
    /// The kind is not cocommutative on the three-vertex path.
    NonCocommutative(CoproductKind),
    Grading(CoproductKind),
    Closure(CoproductKind),
    /// `(I⊗Δ^ℓ)∘Δ^k = τ₁₃∘(Δ^ℓ⊗I)∘Δ^k`.
    Mixed(Involution, Involution),
    /// Cointeraction property 1 to 4.
    Cointeraction(CointeractionPair, u8),
    ConjugateOracle(CoproductKind),
    Convolution(Convolution),
    QuartetGolden(Box<Fixture>),
}

/// How a law draws its inputs.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Arity {
    /// One instance, dualized when the flag is set, filtered to `ω(H°)` if given.
    Unary { dual: bool, subspace: Option<Involution> },
    /// An instance and a small partner, both filtered as above.
    Binary { dual: bool, subspace: Option<Involution> },
    /// A fixed list of inputs.
    Fixed,
}

/// A failed check: both sides, rendered.
#[derive(Clone, PartialEq, Debug)]
pub struct Mismatch {
    pub lhs: Value,
    pub rhs: Value,
}

type Check = Result<Option<Mismatch>>;

fn compare<B: Ord + Clone + Factors>(lhs: &LinComb<B>, rhs: &LinComb<B>) -> Option<Mismatch> {
    (lhs != rhs).then(|| Mismatch { lhs: terms_json(lhs), rhs: terms_json(rhs) })
}

fn compare_values(lhs: Value, rhs: Value) -> Option<Mismatch> {
    (lhs != rhs).then_some(Mismatch { lhs, rhs })
}

fn grading_axis(k: &Key, dual: bool) -> usize {
    if dual {
        k.edge_count()
    } else {
        k.vertex_count()
    }
}

fn p3() -> Hypergraph {
    Hypergraph::from_edge_lists(3, &[[0, 1], [1, 2]]).expect("path shape")
}

impl Law {
    pub fn all() -> Vec<Law> {
        let mut out = Vec::new();
        let kinds = CoproductKind::all();
        for &k in &kinds {
            out.push(Law::Coassoc(k));
        }
        out.push(Law::Coincide(CoproductKind::DELTA_DOUBLE_PRIME.conj(Involution::C), CoproductKind::DELTA_DOUBLE_PRIME));
        out.push(Law::Coincide(
            CoproductKind::DELTA_DOUBLE_PRIME.conj(Involution::Cd),
            CoproductKind::DELTA_DOUBLE_PRIME.conj(Involution::D),
        ));
        for &k in &kinds {
            out.push(Law::CounitLeft(k));
            out.push(Law::CounitRight(k));
        }
        for &k in &kinds {
            out.push(Law::Bialgebra(k, k.product()));
            if k.base == Base::DeltaDoublePrime {
                out.push(Law::Bialgebra(k, Product::MuC));
            }
        }
        for l in Involution::ALL {
            for k in Involution::ALL {
                out.push(Law::Mixed(l, k));
            }
        }
        for pair in CointeractionPair::all() {
            for p in 1..=4 {
                out.push(Law::Cointeraction(pair, p));
            }
        }
        for c in Convolution::ALL {
            out.push(Law::Convolution(c));
        }
        for f in fixtures() {
            out.push(Law::QuartetGolden(Box::new(f)));
        }
        for k in oracle::ORACLE_KINDS {
            out.push(Law::ConjugateOracle(k));
        }
        for &k in &kinds {
            if matches!(k.base, Base::Delta | Base::DeltaDoublePrime) {
                out.push(Law::Cocommutative(k));
            }
        }
        out.push(Law::NonCocommutative(CoproductKind::EXT));
        out.push(Law::NonCocommutative(CoproductKind::DELTA_PRIME));
        for &k in &kinds {
            if matches!(k.base, Base::Delta | Base::DeltaPrime | Base::DeltaDoublePrime) {
                out.push(Law::Grading(k));
            }
        }
        for &k in &kinds {
            if matches!(k.base, Base::Delta | Base::Ext) || k == CoproductKind::EXT_DOUBLE_PRIME {
                out.push(Law::Closure(k));
            }
        }
        out
    }

    pub fn suite(&self) -> Suite {
        match self {
            Law::Coassoc(_) | Law::Coincide(..) => Suite::Coassoc,
            Law::CounitLeft(_) | Law::CounitRight(_) => Suite::Counit,
            Law::Bialgebra(..) => Suite::Bialgebra,
            Law::Cocommutative(_) | Law::NonCocommutative(_) => Suite::Cocommutativity,
            Law::Grading(_) => Suite::Grading,
            Law::Closure(_) => Suite::Closure,
            Law::Mixed(..) => Suite::Mixed,
            Law::Cointeraction(..) => Suite::Cointeraction,
            Law::ConjugateOracle(_) => Suite::ConjugateOracle,
            Law::Convolution(_) => Suite::Convolution,
            Law::QuartetGolden(_) => Suite::QuartetGolden,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Law::Coassoc(k) => format!("coassoc/{k}"),
            Law::Coincide(a, b) => format!("coassoc/{a}={b}"),
            Law::CounitLeft(k) => format!("counit/left/{k}"),
            Law::CounitRight(k) => format!("counit/right/{k}"),
            Law::Bialgebra(k, p) => format!("bialgebra/{k}/{}", p.name()),
            Law::Cocommutative(k) => format!("cocommutativity/{k}"),
            Law::NonCocommutative(k) => format!("cocommutativity/witness/{k}"),
            Law::Grading(k) => format!("grading/{k}"),
            Law::Closure(k) => format!("closure/{k}"),
            Law::Mixed(l, k) => format!("mixed/{l},{k}"),
            Law::Cointeraction(p, i) => format!("cointeraction/{},{}/{i}", p.outer, p.inner),
            Law::ConjugateOracle(k) => format!("conjugate-oracle/{k}"),
            Law::Convolution(c) => format!("convolution/{}", c.name()),
            Law::QuartetGolden(f) => format!("quartet-golden/{}", f.name),
        }
    }

    pub fn arity(&self) -> Arity {
        let unary = |dual, subspace| Arity::Unary { dual, subspace };
        match self {
            Law::Coassoc(k) | Law::CounitLeft(k) | Law::Cocommutative(k) | Law::Grading(k) => {
                unary(k.involution.has_dual(), None)
            }
            Law::ConjugateOracle(k) | Law::Closure(k) => unary(k.involution.has_dual(), None),
            Law::Coincide(a, _) => unary(a.involution.has_dual(), None),
            Law::CounitRight(k) => {
                unary(k.involution.has_dual(), k.is_comodule().then_some(k.involution))
            }
            Law::Bialgebra(k, _) => Arity::Binary { dual: k.involution.has_dual(), subspace: None },
            Law::Mixed(..) => unary(false, None),
            Law::Cointeraction(_, 3) => Arity::Fixed,
            Law::Cointeraction(p, 4) => Arity::Binary {
                dual: p.subspace().has_dual(),
                subspace: Some(p.subspace()),
            },
            Law::Cointeraction(p, _) => unary(p.subspace().has_dual(), Some(p.subspace())),
            Law::Convolution(Convolution::Product | Convolution::RainbowProduct) => {
                unary(false, Some(Involution::Id))
            }
            Law::Convolution(Convolution::Morphism) => Arity::Binary { dual: false, subspace: None },
            Law::Convolution(_) => unary(false, None),
            Law::NonCocommutative(_) | Law::QuartetGolden(_) => Arity::Fixed,
        }
    }

    /// Inputs of a [`Arity::Fixed`] law.
    pub fn fixed_inputs(&self) -> Vec<Vec<Hypergraph>> {
        match self {
            Law::NonCocommutative(_) => vec![vec![p3()]],
            Law::QuartetGolden(f) => vec![vec![f.hypergraph.clone()]],
            Law::Cointeraction(..) => vec![vec![Hypergraph::unit()]],
            _ => Vec::new(),
        }
    }

    /// `Ok(None)` when the law holds on `inputs`.
    pub fn check(&self, src: &dyn CoproductSource, inputs: &[Hypergraph]) -> Check {
        let cop = |kind: CoproductKind, h: &Hypergraph| src.coproduct(kind, &h.canonical_key());
        let cop_key = |kind: CoproductKind, k: &Key| src.coproduct(kind, k);
        let h = inputs.first().ok_or_else(|| Error::Invalid("law needs an input".into()))?;
        let second = || inputs.get(1).ok_or_else(|| Error::Invalid("law needs two inputs".into()));
        match self {
            Law::Coassoc(k) => {
                let d = cop(*k, h)?;
                let lhs = apply_slot(|x| cop_key(*k, x), 1, &d)?;
                let rhs = apply_slot(|x| cop_key(*k, x), 2, &d)?;
                Ok(compare(&lhs, &rhs))
            }
            Law::Coincide(a, b) => Ok(compare(&cop(*a, h)?, &cop(*b, h)?)),
            Law::CounitLeft(k) | Law::CounitRight(k) => {
                let slot = if matches!(self, Law::CounitLeft(_)) { 1 } else { 2 };
                let eps = k.counit();
                let lhs = contract_slot(|x| eps.eval_key(x), slot, &cop(*k, h)?)?;
                Ok(compare(&lhs, &LinComb::basis(h.canonical_key())))
            }
            Law::Bialgebra(k, p) => multiplicative(src, *k, *p, h, second()?),
            Law::Cocommutative(k) => {
                let d = cop(*k, h)?;
                Ok(compare(&d, &swap(&d)))
            }
            Law::NonCocommutative(k) => {
                let d = cop(*k, h)?;
                let s = swap(&d);
                Ok((d == s).then(|| Mismatch { lhs: terms_json(&d), rhs: terms_json(&s) }))
            }
            Law::Grading(k) => {
                let dual = k.involution.has_dual();
                let total = if dual { h.edge_count() } else { h.vertex_count() };
                let d = cop(*k, h)?;
                let bad: LinComb<Pair> = d
                    .iter()
                    .filter(|((l, r), _)| grading_axis(l, dual) + grading_axis(r, dual) != total)
                    .map(|(b, c)| (b.clone(), c.clone()))
                    .collect();
                Ok((!bad.is_zero()).then(|| Mismatch { lhs: terms_json(&bad), rhs: json!(total) }))
            }
            Law::Closure(k) => {
                let w = k.involution;
                let inside = in_subspace(h, w);
                let comodule = k.is_comodule();
                if !comodule && !inside {
                    return Ok(None);
                }
                let d = cop(*k, h)?;
                let bad: LinComb<Pair> = d
                    .iter()
                    .filter(|((l, r), _)| {
                        !in_subspace(&l.to_hypergraph(), w) || (inside && !in_subspace(&r.to_hypergraph(), w))
                    })
                    .map(|(b, c)| (b.clone(), c.clone()))
                    .collect();
                Ok((!bad.is_zero()).then(|| Mismatch { lhs: terms_json(&bad), rhs: json!([]) }))
            }
            Law::Mixed(l, k) => {
                let (dl, dk) = (CoproductKind::DELTA.conj(*l), CoproductKind::DELTA.conj(*k));
                let d = cop(dk, h)?;
                let lhs = apply_slot(|x| cop_key(dl, x), 2, &d)?;
                let rhs = swap_13(&apply_slot(|x| cop_key(dl, x), 1, &d)?);
                Ok(compare(&lhs, &rhs))
            }
            Law::Cointeraction(pair, prop) => cointeraction(src, *pair, *prop, h, inputs.get(1)),
            Law::ConjugateOracle(k) => {
                let direct = oracle::direct(*k, h)
                    .ok_or_else(|| Error::Invalid(format!("no direct formula for {k}")))?;
                Ok(compare(&cop(*k, h)?, &direct))
            }
            Law::Convolution(c) => convolution(*c, h, inputs.get(1)),
            Law::QuartetGolden(f) => {
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for (w, want) in &f.expected {
                    let g = h.derive(*w);
                    let got = match f.invariant {
                        Invariant::Chromatic => chromatic_poly(&g)?,
                        Invariant::Rainbow => rainbow_poly(&g),
                    };
                    if !got.is_integral() || &got != want {
                        lhs.push(json!({ "slot": w.name(), "poly": got }));
                        rhs.push(json!({ "slot": w.name(), "poly": want }));
                    }
                }
                Ok(compare_values(Value::Array(lhs), Value::Array(rhs)))
            }
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Law {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Law::all()
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown law {s:?}")))
    }
}

/// `f(p(h₁, h₂)) = Σ p(a₁, b₁) ⊗ p(a₂, b₂)` over `f(h₁) = Σ a₁⊗a₂`, `f(h₂) = Σ b₁⊗b₂`.
fn multiplicative(
    src: &dyn CoproductSource,
    kind: CoproductKind,
    p: Product,
    h1: &Hypergraph,
    h2: &Hypergraph,
) -> Check {
    let lhs = src.coproduct(kind, &p.apply(h1, h2)?.canonical_key())?;
    let d1 = src.coproduct(kind, &h1.canonical_key())?;
    let d2 = src.coproduct(kind, &h2.canonical_key())?;
    let mut rhs = LinComb::zero();
    for ((a1, a2), c) in &d1 {
        for ((b1, b2), d) in &d2 {
            rhs.add_term((product_on_keys(p, a1, b1)?, product_on_keys(p, a2, b2)?), c * d);
        }
    }
    Ok(compare(&lhs, &rhs))
}

fn cointeraction(
    src: &dyn CoproductSource,
    pair: CointeractionPair,
    prop: u8,
    h: &Hypergraph,
    partner: Option<&Hypergraph>,
) -> Check {
    let CointeractionPair { outer, inner, product } = pair;
    match prop {
        // (I⊗ε_Δ)∘δ = η∘ε_Δ
        1 => {
            let eps = outer.counit();
            let lhs = contract_slot(|x| eps.eval_key(x), 2, &src.coproduct(inner, &h.canonical_key())?)?;
            let rhs = LinComb::term(Key::unit(), eps.eval(h));
            Ok(compare(&lhs, &rhs))
        }
        // (I⊗Δ)∘δ = m₁₃,₂,₄∘(δ⊗δ)∘Δ
        2 => {
            let lhs = apply_slot(|x| src.coproduct(outer, x), 2, &src.coproduct(inner, &h.canonical_key())?)?;
            let mut rhs = LinComb::zero();
            for ((a, b), c) in &src.coproduct(outer, &h.canonical_key())? {
                let t = lc_tensor(&src.coproduct(inner, a)?, &src.coproduct(inner, b)?);
                rhs.add_scaled(c, &mult_slots_13(&t, |x, y| product_on_keys(product, x, y))?);
            }
            Ok(compare(&lhs, &rhs))
        }
        // δ(𝟙) = 𝟙⊗𝟙
        3 => {
            let lhs = src.coproduct(inner, &Key::unit())?;
            Ok(compare(&lhs, &LinComb::basis((Key::unit(), Key::unit()))))
        }
        4 => {
            let h2 = partner.ok_or_else(|| Error::Invalid("law needs two inputs".into()))?;
            multiplicative(src, inner, product, h, h2)
        }
        _ => Err(Error::Invalid(format!("no cointeraction property {prop}"))),
    }
}

fn count_json(v: u128) -> Value {
    Value::String(v.to_string())
}

/// `(a, b)` for `a, b ∈ 0..=CONVOLUTION_COLORS`.
fn color_pairs() -> impl Iterator<Item = (u64, u64)> {
    (0..=CONVOLUTION_COLORS).flat_map(|a| (0..=CONVOLUTION_COLORS).map(move |b| (a, b)))
}

type PolyFn = fn(&Hypergraph) -> Result<Polynomial>;

fn convolution(c: Convolution, h: &Hypergraph, partner: Option<&Hypergraph>) -> Check {
    let mut lhs = Vec::new();
    let mut rhs = Vec::new();
    let mut record = |label: Value, l: Value, r: Value| {
        if l != r {
            lhs.push(json!({ "at": label.clone(), "value": l }));
            rhs.push(json!({ "at": label, "value": r }));
        }
    };
    match c {
        Convolution::Sum | Convolution::RainbowSum => {
            let rainbow = c == Convolution::RainbowSum;
            for (a, b) in color_pairs() {
                let mut sum = 0u128;
                for u in h.all_vertices().subsets() {
                    let uc = u.complement();
                    sum += if rainbow {
                        count_rainbow(&h.trace_to(u), a)? * count_rainbow(&h.trace_to(uc), b)?
                    } else {
                        count_colorings(&h.restrict_to(u), a)? * count_colorings(&h.restrict_to(uc), b)?
                    };
                }
                let whole = if rainbow { count_rainbow(h, a + b)? } else { count_colorings(h, a + b)? };
                record(json!([a, b]), count_json(whole), count_json(sum));
            }
        }
        Convolution::Product => {
            for (a, b) in color_pairs() {
                let mut sum = 0u128;
                for f in h.special_subsets().nonempty_edges.subsets() {
                    sum += count_colorings(&h.induced(f, h.all_vertices()), a)? * count_colorings(&h.contract(f)?, b)?;
                }
                record(json!([a, b]), count_json(count_colorings(h, a * b)?), count_json(sum));
            }
        }
        Convolution::RainbowProduct => {
            let mut terms = Vec::new();
            expand_base(Base::ExtDoublePrime, h, &Bounds::default(), &mut |l, r| terms.push((l, r)))?;
            for (a, b) in color_pairs() {
                let mut sum = 0u128;
                for (l, r) in &terms {
                    sum += count_rainbow(l, a)? * count_rainbow(r, b)?;
                }
                record(json!([a, b]), count_json(count_rainbow(h, a * b)?), count_json(sum));
            }
        }
        Convolution::ZeroConstant => {
            for (name, p) in [("chi", chromatic_poly(h)?), ("rainbow", rainbow_poly(h))] {
                let (got, want) = if h.vertex_count() == 0 {
                    (serde_json::to_value(&p).expect("polynomial serializes"), json!(["1"]))
                } else {
                    (json!(p.coeff(0).to_string()), json!("0"))
                };
                record(json!(name), got, want);
            }
        }
        Convolution::Morphism => {
            let h2 = partner.ok_or_else(|| Error::Invalid("law needs two inputs".into()))?;
            let joint = h.disjoint_union(h2)?;
            let invariants: [(&str, PolyFn); 2] =
                [("chi", chromatic_poly), ("rainbow", |g| Ok(rainbow_poly(g)))];
            for (name, f) in invariants {
                let whole = f(&joint)?;
                let split = &f(h)? * &f(h2)?;
                let as_json = |p: &Polynomial| serde_json::to_value(p).expect("polynomial serializes");
                record(json!(name), as_json(&whole), as_json(&split));
            }
        }
    }
    Ok(compare_values(Value::Array(lhs), Value::Array(rhs)))
}

/// Renders inputs for a counterexample.
pub(crate) fn render_inputs(inputs: &[Hypergraph]) -> Vec<String> {
    inputs.iter().map(to_hgx).collect()
}

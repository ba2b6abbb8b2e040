//! Finite formal sums over canonical keys and their tensor powers.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::canon::CanonicalKey;
use crate::error::{Error, Result};

pub type Coeff = BigRational;
pub type Key = CanonicalKey;
pub type Pair = (Key, Key);
pub type Triple = (Key, Key, Key);

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite sum `Σ c_b · b` with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coeff>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Coeff::one())
    }

    pub fn term(b: B, c: Coeff) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn add_term(&mut self, b: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, c: &Coeff, other: &LinComb<B>) {
        for (b, x) in &other.terms {
            self.add_term(b.clone(), c * x);
        }
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect() }
    }

    pub fn coeff(&self, b: &B) -> Coeff {
        self.terms.get(b).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in basis order.
    pub fn iter(&self) -> btree_map::Iter<'_, B, Coeff> {
        self.terms.iter()
    }

    pub fn basis_elements(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Coeff {
        self.terms.values().fold(Coeff::zero(), |a, x| a + x)
    }

    /// Relabels every basis element; colliding images are summed.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_term(f(b), x.clone());
        }
        out
    }

    pub fn try_map_basis<C: Ord + Clone>(
        &self,
        mut f: impl FnMut(&B) -> Result<C>,
    ) -> Result<LinComb<C>> {
        let mut out = LinComb::zero();
        for (b, x) in &self.terms {
            out.add_term(f(b)?, x.clone());
        }
        Ok(out)
    }
}

impl<B: Ord + Clone> FromIterator<(B, Coeff)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, B, Coeff>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;

    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&Coeff::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;

    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(&-Coeff::one(), rhs);
        out
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;

    fn neg(self) -> LinComb<B> {
        self.scale(&-Coeff::one())
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}·{b:?}")?;
        }
        Ok(())
    }
}

pub fn lc_add<B: Ord + Clone>(a: &LinComb<B>, b: &LinComb<B>) -> LinComb<B> {
    a + b
}

pub fn lc_scale<B: Ord + Clone>(c: &Coeff, a: &LinComb<B>) -> LinComb<B> {
    a.scale(c)
}

/// Basis elements that can be tensored. Only combinations of total rank at
/// most three are implemented, so an overflowing tensor does not compile.
pub trait Tensor<Rhs> {
    type Output: Ord + Clone;

    fn tensor(&self, rhs: &Rhs) -> Self::Output;
}

impl Tensor<Key> for Key {
    type Output = Pair;

    fn tensor(&self, rhs: &Key) -> Pair {
        (self.clone(), rhs.clone())
    }
}

impl Tensor<Pair> for Key {
    type Output = Triple;

    fn tensor(&self, rhs: &Pair) -> Triple {
        (self.clone(), rhs.0.clone(), rhs.1.clone())
    }
}

impl Tensor<Key> for Pair {
    type Output = Triple;

    fn tensor(&self, rhs: &Key) -> Triple {
        (self.0.clone(), self.1.clone(), rhs.clone())
    }
}

impl Tensor<Pair> for Pair {
    type Output = (Pair, Pair);

    fn tensor(&self, rhs: &Pair) -> (Pair, Pair) {
        (self.clone(), rhs.clone())
    }
}

pub fn lc_tensor<A, B>(a: &LinComb<A>, b: &LinComb<B>) -> LinComb<A::Output>
where
    A: Ord + Clone + Tensor<B>,
    B: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (x, cx) in a {
        for (y, cy) in b {
            out.add_term(x.tensor(y), cx * cy);
        }
    }
    out
}

pub fn extend_linear<A, B, E>(
    mut f: impl FnMut(&A) -> std::result::Result<LinComb<B>, E>,
    a: &LinComb<A>,
) -> std::result::Result<LinComb<B>, E>
where
    A: Ord + Clone,
    B: Ord + Clone,
{
    let mut out = LinComb::zero();
    for (x, c) in a {
        out.add_scaled(c, &f(x)?);
    }
    Ok(out)
}

/// Expands slot `slot` (1-based) of a rank-2 sum by `f`.
pub fn apply_slot(
    mut f: impl FnMut(&Key) -> Result<LinComb<Pair>>,
    slot: usize,
    a: &LinComb<Pair>,
) -> Result<LinComb<Triple>> {
    if !(1..=2).contains(&slot) {
        return Err(Error::Invalid(format!("slot {slot} outside 1..=2")));
    }
    let mut out = LinComb::zero();
    for ((x, y), c) in a {
        let expanded = f(if slot == 1 { x } else { y })?;
        for ((p, q), d) in &expanded {
            let t = if slot == 1 {
                (p.clone(), q.clone(), y.clone())
            } else {
                (x.clone(), p.clone(), q.clone())
            };
            out.add_term(t, c * d);
        }
    }
    Ok(out)
}

/// Applies a scalar functional to slot `slot` (1-based) of a rank-2 sum.
pub fn contract_slot(
    mut eps: impl FnMut(&Key) -> Coeff,
    slot: usize,
    a: &LinComb<Pair>,
) -> Result<LinComb<Key>> {
    if !(1..=2).contains(&slot) {
        return Err(Error::Invalid(format!("slot {slot} outside 1..=2")));
    }
    let mut out = LinComb::zero();
    for ((x, y), c) in a {
        let (hit, keep) = if slot == 1 { (x, y) } else { (y, x) };
        out.add_term(keep.clone(), c * eps(hit));
    }
    Ok(out)
}

/// `(a, b, c, d) ↦ (prod(a, c), b, d)`.
pub fn mult_slots_13(
    a: &LinComb<(Pair, Pair)>,
    mut prod: impl FnMut(&Key, &Key) -> Result<Key>,
) -> Result<LinComb<Triple>> {
    let mut out = LinComb::zero();
    for (((x, b), (y, d)), c) in a {
        out.add_term((prod(x, y)?, b.clone(), d.clone()), c.clone());
    }
    Ok(out)
}

pub fn swap(a: &LinComb<Pair>) -> LinComb<Pair> {
    a.map_basis(|(x, y)| (y.clone(), x.clone()))
}

pub fn swap_13(a: &LinComb<Triple>) -> LinComb<Triple> {
    a.map_basis(|(x, y, z)| (z.clone(), y.clone(), x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;

    fn key(n: usize) -> Key {
        Hypergraph::edgeless(n).canonical_key()
    }

    fn q(n: i64, d: i64) -> Coeff {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn addition_and_cancellation() {
        let x = LinComb::term(key(1), coeff(2));
        assert_eq!(&x + &LinComb::zero(), x);
        assert!((&x + &LinComb::term(key(1), coeff(-2))).is_zero());
        assert!((&x - &x).is_zero());
        assert_eq!(x.len(), 1);
    }

    #[test]
    fn scaling() {
        let mut a = LinComb::term(key(1), coeff(2));
        a.add_term(key(2), coeff(4));
        let half = lc_scale(&q(1, 2), &a);
        assert_eq!(half.coeff(&key(1)), coeff(1));
        assert_eq!(half.coeff(&key(2)), coeff(2));
        assert!(a.scale(&coeff(0)).is_zero());
    }

    #[test]
    fn order_independent_equality() {
        let a: LinComb<Key> = [(key(1), coeff(1)), (key(2), coeff(3))].into_iter().collect();
        let b: LinComb<Key> = [(key(2), coeff(3)), (key(1), coeff(1))].into_iter().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn tensors() {
        let x = LinComb::basis(key(1));
        let y = LinComb::basis(key(2));
        let z = LinComb::basis(key(3));
        assert_eq!(lc_tensor(&x, &y), LinComb::basis((key(1), key(2))));
        let xy = &x + &y;
        let t = lc_tensor(&xy, &z);
        assert_eq!(t.len(), 2);
        assert_eq!(t.coeff(&(key(2), key(3))), coeff(1));
        assert!(lc_tensor(&LinComb::<Key>::zero(), &x).is_zero());
        assert_eq!(lc_tensor(&lc_tensor(&x, &y), &z), lc_tensor(&x, &lc_tensor(&y, &z)));
    }

    #[test]
    fn linear_extension() {
        let a: LinComb<Key> = [(key(1), coeff(2)), (key(2), coeff(-1))].into_iter().collect();
        let id = extend_linear(|k: &Key| Ok::<_, Error>(LinComb::basis(k.clone())), &a).unwrap();
        assert_eq!(id, a);
        let zero = extend_linear(|k: &Key| Ok::<_, Error>(LinComb::basis(k.clone())), &LinComb::zero());
        assert!(zero.unwrap().is_zero());
    }

    #[test]
    fn slots() {
        let a = LinComb::basis((key(0), key(2)));
        let dup = |k: &Key| Ok(LinComb::basis((k.clone(), k.clone())));
        let t = apply_slot(dup, 2, &a).unwrap();
        assert_eq!(t, LinComb::basis((key(0), key(2), key(2))));
        assert!(apply_slot(dup, 3, &a).is_err());
        assert!(apply_slot(dup, 1, &LinComb::zero()).unwrap().is_zero());
        let c = contract_slot(|k| coeff(k.vertex_count() as i64), 2, &a).unwrap();
        assert_eq!(c, LinComb::term(key(0), coeff(2)));
    }

    #[test]
    fn slot_13_product() {
        let a = LinComb::basis(((key(0), key(1)), (key(0), key(2))));
        let t = mult_slots_13(&a, |x, y| {
            Ok(x.to_hypergraph().disjoint_union(&y.to_hypergraph())?.canonical_key())
        })
        .unwrap();
        assert_eq!(t, LinComb::basis((key(0), key(1), key(2))));
    }
}

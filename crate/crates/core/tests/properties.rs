mod common;

use common::{arb_hypergraph, hg, k2, triangle};
use hyperquartet::chromatic::{chromatic_poly, count_rainbow, rainbow_poly};
use hyperquartet::coalgebra::{product_on_keys, Product};
use hyperquartet::laws::enumerate_hypergraphs;
use hyperquartet::linear::{coeff, extend_linear, lc_tensor};
use hyperquartet::partition::{bell, set_partitions};
use hyperquartet::{Hypergraph, IndexSet, Involution, Key, LinComb};
use proptest::prelude::*;

fn permute(h: &Hypergraph, vperm: &[usize], eperm: &[usize]) -> Hypergraph {
    let mut rows = vec![0u64; h.edge_count()];
    for (e, &r) in h.rows().iter().enumerate() {
        rows[eperm[e]] = (0..h.vertex_count()).filter(|v| r >> v & 1 == 1).map(|v| 1u64 << vperm[v]).sum();
    }
    Hypergraph::new(h.vertex_count(), rows).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every vertex bijection and comparing sorted rows.
fn brute_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut want = b.rows().to_vec();
    want.sort_unstable();
    let ident: Vec<usize> = (0..a.edge_count()).collect();
    permutations(a.vertex_count()).iter().any(|p| {
        let mut rows = permute(a, p, &ident).rows().to_vec();
        rows.sort_unstable();
        rows == want
    })
}

fn arb_relabeled(max: usize) -> impl Strategy<Value = (Hypergraph, Vec<usize>, Vec<usize>)> {
    arb_hypergraph(max, max).prop_flat_map(|h| {
        let vs = Just((0..h.vertex_count()).collect::<Vec<_>>()).prop_shuffle();
        let es = Just((0..h.edge_count()).collect::<Vec<_>>()).prop_shuffle();
        (Just(h), vs, es)
    })
}

fn subsets(width: usize) -> impl Iterator<Item = IndexSet> {
    IndexSet::full(width).subsets()
}

fn union_find_classes(n: usize, edges: &[u64]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &r in edges {
        let vs: Vec<usize> = (0..n).filter(|v| r >> v & 1 == 1).collect();
        for w in vs.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    (0..n).filter(|&v| find(&mut parent, v) == v).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn involutions(h in arb_hypergraph(5, 5)) {
        prop_assert_eq!(h.dual().dual(), h.clone());
        prop_assert_eq!(h.complement().complement(), h.clone());
        prop_assert_eq!(h.dual().complement(), h.complement().dual());
        for w in Involution::ALL {
            prop_assert_eq!(h.derive(w).derive(w), h.clone());
        }
    }

    #[test]
    fn key_is_invariant_under_relabeling((h, vs, es) in arb_relabeled(5)) {
        let g = permute(&h, &vs, &es);
        prop_assert_eq!(g.canonical_key(), h.canonical_key());
        prop_assert!(brute_isomorphic(&g.canonical_key().to_hypergraph(), &h));
    }

    #[test]
    fn key_separates_exactly_the_isomorphism_classes(a in arb_hypergraph(4, 4), b in arb_hypergraph(4, 4)) {
        prop_assert_eq!(a.canonical_key() == b.canonical_key(), brute_isomorphic(&a, &b));
    }

    #[test]
    fn two_section_is_idempotent(h in arb_hypergraph(5, 6)) {
        let g = h.two_section();
        prop_assert!(g.rows().iter().all(|r| r.count_ones() == 2));
        prop_assert_eq!(g.two_section(), g.clone());
        for k in 0..4 {
            prop_assert_eq!(count_rainbow(&h, k).unwrap(), count_rainbow(&g, k).unwrap());
        }
    }

    #[test]
    fn polynomials_are_multiplicative(a in arb_hypergraph(3, 3), b in arb_hypergraph(3, 3)) {
        let ab = a.disjoint_union(&b).unwrap();
        prop_assert_eq!(chromatic_poly(&ab).unwrap(), &chromatic_poly(&a).unwrap() * &chromatic_poly(&b).unwrap());
        prop_assert_eq!(rainbow_poly(&ab), &rainbow_poly(&a) * &rainbow_poly(&b));
    }

    #[test]
    fn degree_is_bounded_by_vertex_count(h in arb_hypergraph(4, 5)) {
        let p = chromatic_poly(&h).unwrap();
        prop_assert!(p.degree().is_none_or(|d| d <= h.vertex_count()));
        prop_assert!(p.is_integral());
        if h.vertex_count() > 0 {
            prop_assert_eq!(p.coeff(0), coeff(0));
        }
    }

    #[test]
    fn complement_product_is_conjugated_union(a in arb_hypergraph(3, 3), b in arb_hypergraph(3, 3)) {
        let via_c = a.complement().disjoint_union(&b.complement()).unwrap().complement();
        prop_assert_eq!(a.complement_union(&b).unwrap(), via_c);
    }

    #[test]
    fn products_commute_on_keys(a in arb_hypergraph(3, 3), b in arb_hypergraph(3, 3)) {
        let (ka, kb) = (a.canonical_key(), b.canonical_key());
        for p in [Product::Mu, Product::MuC] {
            prop_assert_eq!(product_on_keys(p, &ka, &kb).unwrap(), product_on_keys(p, &kb, &ka).unwrap());
        }
    }

    #[test]
    fn linear_combinations_ignore_insertion_order(
        terms in proptest::collection::vec((arb_hypergraph(2, 2), -3i64..4), 0..8),
    ) {
        let mut fwd = LinComb::zero();
        let mut rev = LinComb::zero();
        for (h, c) in &terms {
            fwd.add_term(h.canonical_key(), coeff(*c));
        }
        for (h, c) in terms.iter().rev() {
            rev.add_term(h.canonical_key(), coeff(*c));
        }
        prop_assert_eq!(&fwd, &rev);
        prop_assert!(fwd.iter().all(|(_, c)| *c != coeff(0)));
        prop_assert!((&fwd - &rev).is_zero());
    }

    #[test]
    fn extension_is_linear(
        a in proptest::collection::vec((arb_hypergraph(2, 2), -3i64..4), 0..5),
        b in proptest::collection::vec((arb_hypergraph(2, 2), -3i64..4), 0..5),
        s in -3i64..4,
    ) {
        let build = |ts: &[(Hypergraph, i64)]| ts.iter().map(|(h, c)| (h.canonical_key(), coeff(*c))).collect::<LinComb<Key>>();
        let (a, b) = (build(&a), build(&b));
        let f = |k: &Key| -> Result<LinComb<(Key, Key)>, ()> {
            let d = k.to_hypergraph().dual().canonical_key();
            let mut out = LinComb::basis((k.clone(), d.clone()));
            out.add_term((d, k.clone()), coeff(2));
            Ok(out)
        };
        let sum = extend_linear(f, &(&a + &b)).unwrap();
        prop_assert_eq!(sum, &extend_linear(f, &a).unwrap() + &extend_linear(f, &b).unwrap());
        prop_assert_eq!(extend_linear(f, &a.scale(&coeff(s))).unwrap(), extend_linear(f, &a).unwrap().scale(&coeff(s)));
    }

    #[test]
    fn tensor_is_associative(
        a in proptest::collection::vec((arb_hypergraph(1, 2), 1i64..3), 1..3),
        b in proptest::collection::vec((arb_hypergraph(1, 2), 1i64..3), 1..3),
        c in proptest::collection::vec((arb_hypergraph(1, 2), 1i64..3), 1..3),
    ) {
        let build = |ts: &[(Hypergraph, i64)]| ts.iter().map(|(h, c)| (h.canonical_key(), coeff(*c))).collect::<LinComb<Key>>();
        let (a, b, c) = (build(&a), build(&b), build(&c));
        let left = lc_tensor(&lc_tensor(&a, &b), &c);
        let right = lc_tensor(&a, &lc_tensor(&b, &c));
        prop_assert_eq!(left, right);
    }
}

#[test]
fn restriction_matches_a_naive_scan() {
    for h in enumerate_hypergraphs(3, 4).unwrap() {
        for u in subsets(h.vertex_count()) {
            let kept: Vec<Vec<usize>> = h
                .edges()
                .filter(|e| e.is_subset(u))
                .map(|e| e.iter().map(|v| u.iter().position(|w| w == v).unwrap()).collect())
                .collect();
            assert_eq!(h.restrict_to(u), Hypergraph::from_edge_lists(u.len(), &kept).unwrap(), "{h:?} {u:?}");
        }
    }
}

#[test]
fn contraction_counts_components() {
    for h in enumerate_hypergraphs(3, 4).unwrap() {
        let nonempty: Vec<usize> = (0..h.edge_count()).filter(|&e| h.rows()[e] != 0).collect();
        for mask in 0..1u64 << nonempty.len() {
            let f = IndexSet::from_indices(h.edge_count(), (0..nonempty.len()).filter(|i| mask >> i & 1 == 1).map(|i| nonempty[i])).unwrap();
            let rows: Vec<u64> = f.iter().map(|e| h.rows()[e]).collect();
            let g = h.contract(f).unwrap();
            assert_eq!(g.vertex_count(), union_find_classes(h.vertex_count(), &rows), "{h:?} {f:?}");
            assert_eq!(g.edge_count(), h.edge_count() - f.len());
        }
    }
}

#[test]
fn link_and_core_form_a_galois_connection() {
    for h in enumerate_hypergraphs(3, 4).unwrap() {
        for u in subsets(h.vertex_count()) {
            let l = h.link(u);
            assert!(u.is_subset(h.core(l)), "{h:?} {u:?}");
            for e in 0..h.edge_count() {
                assert_eq!(l.contains(e), u.is_subset(h.edge(e)));
            }
        }
        for f in subsets(h.edge_count()) {
            assert!(f.is_subset(h.link(h.core(f))));
        }
    }
}

#[test]
fn complement_product_example() {
    let k = product_on_keys(Product::MuC, &k2().canonical_key(), &Hypergraph::edgeless(1).canonical_key()).unwrap();
    assert_eq!(k, triangle().canonical_key());
    let x = hg(3, &[&[0], &[1, 2]]).canonical_key();
    assert_eq!(product_on_keys(Product::Mu, &x, &Key::unit()).unwrap(), x);
}

#[test]
fn partitions_are_counted_by_bell_numbers() {
    let known = [1u128, 1, 2, 5, 15, 52, 203, 877, 4140];
    for (k, &b) in known.iter().enumerate() {
        assert_eq!(bell(k), b);
        let all: Vec<Vec<usize>> = set_partitions(k).unwrap().collect();
        assert_eq!(all.len() as u128, b);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), all.len());
    }
}

#[test]
fn enumerated_classes_are_pairwise_non_isomorphic() {
    let classes = enumerate_hypergraphs(3, 3).unwrap();
    for (i, a) in classes.iter().enumerate() {
        for b in &classes[i + 1..] {
            assert!(!brute_isomorphic(a, b), "{a:?} ~ {b:?}");
        }
    }
}

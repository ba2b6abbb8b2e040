//! Closed-form polynomial values for families of small hypergraphs.

use crate::chromatic::Polynomial;
use crate::hypergraph::{Hypergraph, Involution};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Invariant {
    Chromatic,
    Rainbow,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fixture {
    pub name: String,
    pub hypergraph: Hypergraph,
    pub invariant: Invariant,
    /// Expected value on `ω(h)` for each listed `ω`.
    pub expected: Vec<(Involution, Polynomial)>,
}

fn x() -> Polynomial {
    Polynomial::x()
}

fn xn(n: usize) -> Polynomial {
    Polynomial::monomial(n)
}

/// `x^k − x`.
fn xk_minus_x(k: usize) -> Polynomial {
    &xn(k) - &x()
}

/// `x − k`.
fn lin(k: i64) -> Polynomial {
    Polynomial::from_ints(&[-k, 1])
}

fn product(fs: &[Polynomial]) -> Polynomial {
    fs.iter().fold(Polynomial::one(), |acc, f| &acc * f)
}

fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::from_edge_lists(n, edges).expect("fixture shape")
}

/// `copies` edges on `a` vertices, each containing every vertex.
pub fn multi_full_edge(a: usize, copies: usize) -> Hypergraph {
    let all: Vec<usize> = (0..a).collect();
    Hypergraph::from_edge_lists(a, &vec![all; copies]).expect("fixture shape")
}

/// Vertex blocks `A`, `B`, `C` of sizes `a`, `b`, `c`, with `l` copies of
/// the edge `A∪B`, `m` of `A∪C` and `n` of `B∪C`.
pub fn triangle_of_multiplicities(sizes: [usize; 3], mult: [usize; 3]) -> Hypergraph {
    let [a, b, c] = sizes;
    let block_a: Vec<usize> = (0..a).collect();
    let block_b: Vec<usize> = (a..a + b).collect();
    let block_c: Vec<usize> = (a + b..a + b + c).collect();
    let join = |p: &[usize], q: &[usize]| [p, q].concat();
    let mut edges = Vec::new();
    edges.extend(std::iter::repeat_n(join(&block_a, &block_b), mult[0]));
    edges.extend(std::iter::repeat_n(join(&block_a, &block_c), mult[1]));
    edges.extend(std::iter::repeat_n(join(&block_b, &block_c), mult[2]));
    Hypergraph::from_edge_lists(a + b + c, &edges).expect("fixture shape")
}

/// `x^{p+q+r} − x^{p+1} − x^{q+1} − x^{r+1} + 2x`.
fn triangle_chi(p: usize, q: usize, r: usize) -> Polynomial {
    let mut f = xn(p + q + r);
    for k in [p, q, r] {
        f = &f - &xn(k + 1);
    }
    &f + &Polynomial::from_ints(&[0, 2])
}

/// The ten `(a, b, c, l, m, n) ∈ {1,2}⁶` used for the triangle family:
/// indices `0, 7, 14, …, 63` read as six bits.
pub fn triangle_tuples() -> Vec<[usize; 6]> {
    (0..64u32)
        .step_by(7)
        .map(|t| std::array::from_fn(|i| 1 + (t >> i & 1) as usize))
        .collect()
}

pub fn fixtures() -> Vec<Fixture> {
    use Involution::*;
    let mut out = Vec::new();
    let mut push = |name: String, h: Hypergraph, inv: Invariant, expected: Vec<(Involution, Polynomial)>| {
        out.push(Fixture { name, hypergraph: h, invariant: inv, expected })
    };
    for n in 0..=5 {
        push(format!("edgeless/{n}"), Hypergraph::edgeless(n), Invariant::Chromatic, vec![(Id, xn(n))]);
    }
    for n in 1..=5 {
        push(format!("full-edge/{n}"), multi_full_edge(n, 1), Invariant::Chromatic, vec![(Id, xk_minus_x(n))]);
    }
    for a in 1..=3 {
        for m in 1..=3 {
            push(
                format!("multi-edge/{a},{m}"),
                multi_full_edge(a, m),
                Invariant::Chromatic,
                vec![(Id, xk_minus_x(a)), (D, xk_minus_x(m)), (C, xn(a)), (Cd, xn(m))],
            );
        }
    }
    for t in triangle_tuples() {
        let [a, b, c, l, m, n] = t;
        push(
            format!("triangle/{a},{b},{c},{l},{m},{n}"),
            triangle_of_multiplicities([a, b, c], [l, m, n]),
            Invariant::Chromatic,
            vec![
                (Id, triangle_chi(a, b, c)),
                (D, triangle_chi(l, m, n)),
                (C, product(&[xk_minus_x(a), xk_minus_x(b), xk_minus_x(c)])),
                (Cd, product(&[xk_minus_x(l), xk_minus_x(m), xk_minus_x(n)])),
            ],
        );
    }
    let path = product(&[x(), lin(1), lin(1), lin(1)]);
    push(
        "path-3".into(),
        hg(4, &[&[0, 1], &[1, 2], &[2, 3]]),
        Invariant::Chromatic,
        vec![(Id, path.clone()), (D, Polynomial::zero()), (C, path.clone()), (Cd, Polynomial::zero())],
    );
    push(
        "star-3".into(),
        hg(4, &[&[0, 1], &[0, 2], &[0, 3]]),
        Invariant::Chromatic,
        vec![
            (Id, path),
            (D, Polynomial::zero()),
            (C, product(&[x(), x(), lin(1), lin(2)])),
            (Cd, product(&[x(), lin(1), lin(2)])),
        ],
    );
    let k4_minus = product(&[x(), lin(1), lin(2), lin(2)]);
    push(
        "rainbow/hyperedge-and-two-edges".into(),
        hg(4, &[&[0, 1, 2], &[1, 3], &[2, 3]]),
        Invariant::Rainbow,
        vec![
            (Id, k4_minus.clone()),
            (D, product(&[x(), lin(1), lin(2)])),
            (C, product(&[x(), x(), lin(1), lin(1)])),
            (Cd, product(&[x(), x(), lin(1)])),
        ],
    );
    let with_quadratic = product(&[x(), lin(1), lin(2), Polynomial::from_ints(&[7, -5, 1])]);
    push(
        "rainbow/five-edge-graph".into(),
        hg(4, &[&[0, 1], &[1, 2], &[2, 0], &[1, 3], &[2, 3]]),
        Invariant::Rainbow,
        vec![(Id, k4_minus.clone()), (D, with_quadratic.clone()), (C, k4_minus), (Cd, with_quadratic)],
    );
    out
}

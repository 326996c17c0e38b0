//! Example structures: the small figures used throughout the literature on
//! affine rigidity, and a few parametric families of highly connected graphs.

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};

/// Six vertices, four hyperedges `{1,2,6}, {2,3,5}, {5,6}, {4,5}` (labels `1..=6`
/// stored as indices `0..6`).
pub fn fig1() -> Hypergraph {
    Hypergraph::new(6, [vec![0, 1, 5], vec![1, 2, 4], vec![4, 5], vec![3, 4]])
        .expect("static hypergraph")
}

/// Six vertices, seven edges; its neighborhood hypergraph has hyperedges
/// `{1,2,6}, {1,2,3,6}, {2,3,5}, {4,5}, {3,4,5,6}, {1,2,5,6}`.
pub fn fig2() -> Graph {
    let labelled = [(1, 2), (1, 6), (2, 3), (2, 6), (3, 5), (4, 5), (5, 6)];
    Graph::new(6, labelled.iter().map(|&(u, w)| (u - 1, w - 1))).expect("static graph")
}

/// Pentagon hypergraph: five vertices, hyperedges `{i, i+1, i+2}` mod 5.
/// Its body graph is `K_5`.
pub fn pentagon() -> Hypergraph {
    Hypergraph::new(5, (0..5).map(|i| vec![i, (i + 1) % 5, (i + 2) % 5])).expect("static hypergraph")
}

/// Honeycomb lattice on an `m × n` torus: `2mn` vertices of degree 3.
///
/// Cell `(i, j)` carries vertices `a(i,j)` and `b(i,j)`; `a(i,j)` is joined to
/// `b(i,j)`, `b(i−1,j)` and `b(i,j−1)`, indices taken mod `m` and `n`.
pub fn hex_torus(m: usize, n: usize) -> Result<Graph> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidInput(format!("hex torus needs m, n >= 2, got {m} x {n}")));
    }
    let a = |i: usize, j: usize| 2 * (i * n + j);
    let b = |i: usize, j: usize| 2 * (i * n + j) + 1;
    let mut edges = Vec::with_capacity(3 * m * n);
    for i in 0..m {
        for j in 0..n {
            edges.push((a(i, j), b(i, j)));
            edges.push((a(i, j), b((i + m - 1) % m, j)));
            edges.push((a(i, j), b(i, (j + n - 1) % n)));
        }
    }
    let g = Graph::new(2 * m * n, edges)?;
    if g.edge_count() != 3 * m * n {
        return Err(Error::InvalidInput(format!("hex torus {m} x {n} has parallel edges")));
    }
    Ok(g)
}

/// Star `K_{1,k}` with the center at index 0.
pub fn star(k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::InvalidInput("star needs at least one leaf".into()));
    }
    Graph::new(k + 1, (1..=k).map(|leaf| (0, leaf)))
}

/// Wheel: hub 0 joined to every vertex of the rim cycle `1..=k`.
pub fn wheel(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::InvalidInput(format!("wheel rim needs at least 3 vertices, got {k}")));
    }
    let spokes = (1..=k).map(|i| (0, i));
    let rim = (1..=k).map(|i| (i, i % k + 1));
    Graph::new(k + 1, spokes.chain(rim))
}

/// `d`-trilateration graph on `n` vertices: start from `K_{d+1}` and attach each
/// further vertex to `d + 1` distinct, uniformly chosen earlier vertices.
pub fn trilateration<R: Rng + ?Sized>(d: usize, n: usize, rng: &mut R) -> Result<Graph> {
    attach_growth(d + 1, n, rng)
}

/// Random `k`-connected graph on `n` vertices: a `K_{k+1}` grown by attaching
/// each new vertex to `k` earlier ones, then `extra_edges` random chords.
/// Both steps preserve `k`-connectivity.
pub fn random_k_connected<R: Rng + ?Sized>(
    k: usize,
    n: usize,
    extra_edges: usize,
    rng: &mut R,
) -> Result<Graph> {
    let base = attach_growth(k, n, rng)?;
    let mut edges = base.edges().to_vec();
    let max_edges = n * (n - 1) / 2;
    let target = (edges.len() + extra_edges).min(max_edges);
    let mut g = base;
    while edges.len() < target {
        let u = rng.random_range(0..n);
        let w = rng.random_range(0..n);
        if u != w && !g.has_edge(u, w) {
            edges.push((u.min(w), u.max(w)));
            g = Graph::new(n, edges.iter().copied())?;
        }
    }
    Ok(g)
}

fn attach_growth<R: Rng + ?Sized>(k: usize, n: usize, rng: &mut R) -> Result<Graph> {
    if k == 0 || n < k + 1 {
        return Err(Error::InvalidInput(format!(
            "growth from K_{} needs at least {} vertices, got {n}",
            k + 1,
            k + 1
        )));
    }
    let mut edges: Vec<(usize, usize)> =
        (0..=k).flat_map(|u| (u + 1..=k).map(move |w| (u, w))).collect();
    for v in k + 1..n {
        for u in sample(rng, v, k) {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges)
}

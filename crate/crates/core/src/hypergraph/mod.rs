//! Graphs, hypergraphs and the constructions that pass between them.
//!
//! Vertices are dense indices `0..vertex_count`. Human-readable labels, when
//! present, belong to the file layer and never reach this module.

mod connectivity;

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub use connectivity::{is_k_vertex_connected, local_vertex_connectivity, vertex_connectivity};

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, normalising every edge to `(min, max)` and dropping
    /// duplicates. Self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count == 0 {
            return Err(Error::InvalidInput("graph must have at least one vertex".into()));
        }
        let mut set = BTreeSet::new();
        for (u, w) in edges {
            if u >= vertex_count || w >= vertex_count {
                return Err(Error::InvalidInput(format!(
                    "edge ({u}, {w}) has an endpoint outside 0..{vertex_count}"
                )));
            }
            if u == w {
                return Err(Error::InvalidInput(format!("self-loop at vertex {u}")));
            }
            if !set.insert((u.min(w), u.max(w))) {
                log::debug!("dropping duplicate edge ({u}, {w})");
            }
        }
        Ok(Self::from_normalized(vertex_count, set))
    }

    fn from_normalized(vertex_count: usize, set: BTreeSet<(usize, usize)>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, w) in &set {
            adjacency[u].push(w);
            adjacency[w].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Graph {
            vertex_count,
            edges: set.into_iter().collect(),
            adjacency,
        }
    }

    pub fn complete(n: usize) -> Result<Self> {
        Self::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))))
    }

    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidInput(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as sorted `(u, w)` pairs with `u < w`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, w: usize) -> bool {
        u < self.vertex_count && self.adjacency[u].binary_search(&w).is_ok()
    }

    /// Whether the graph is connected, ignoring the vertices flagged in `removed`.
    pub(crate) fn is_connected_without(&self, removed: &[bool]) -> bool {
        let Some(start) = (0..self.vertex_count).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&vec![false; self.vertex_count])
    }

    /// The graph viewed as a 2-hypergraph, one hyperedge per edge.
    pub fn as_hypergraph(&self) -> Hypergraph {
        Hypergraph {
            vertex_count: self.vertex_count,
            hyperedges: self.edges.iter().map(|&(u, w)| vec![u, w]).collect(),
        }
    }

    /// Closed neighborhood hypergraph `N(Γ)`: hyperedge `v` is `{v} ∪ N(v)`.
    pub fn neighborhood_hypergraph(&self) -> Hypergraph {
        let hyperedges = (0..self.vertex_count)
            .map(|v| {
                let mut h = self.adjacency[v].clone();
                let pos = h.binary_search(&v).unwrap_err();
                h.insert(pos, v);
                h
            })
            .collect();
        Hypergraph {
            vertex_count: self.vertex_count,
            hyperedges,
        }
    }

    /// `Γ²`: `Γ` plus an edge between every two vertices with a common neighbor.
    pub fn squared(&self) -> Graph {
        let mut set: BTreeSet<(usize, usize)> = self.edges.iter().copied().collect();
        for nbrs in &self.adjacency {
            for (a, &u) in nbrs.iter().enumerate() {
                for &w in &nbrs[a + 1..] {
                    set.insert((u, w));
                }
            }
        }
        Graph::from_normalized(self.vertex_count, set)
    }
}

/// A hypergraph on vertices `0..vertex_count`.
///
/// Each hyperedge is stored sorted without repeated vertices. Repeated
/// hyperedges are kept as given; [`Hypergraph::normalized`] removes them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new<I, H>(vertex_count: usize, hyperedges: I) -> Result<Self>
    where
        I: IntoIterator<Item = H>,
        H: IntoIterator<Item = usize>,
    {
        if vertex_count == 0 {
            return Err(Error::InvalidInput("hypergraph must have at least one vertex".into()));
        }
        let mut out = Vec::new();
        for (index, h) in hyperedges.into_iter().enumerate() {
            let raw: Vec<usize> = h.into_iter().collect();
            if let Some(&bad) = raw.iter().find(|&&u| u >= vertex_count) {
                return Err(Error::InvalidInput(format!(
                    "hyperedge {index} contains vertex {bad} outside 0..{vertex_count}"
                )));
            }
            let mut members = raw.clone();
            members.sort_unstable();
            members.dedup();
            if members.is_empty() {
                return Err(Error::InvalidInput(format!("hyperedge {index} is empty")));
            }
            if members.len() != raw.len() {
                log::debug!("hyperedge {index}: dropped repeated vertices");
            }
            out.push(members);
        }
        Ok(Hypergraph {
            vertex_count,
            hyperedges: out,
        })
    }

    /// The complete `k`-hypergraph on `n` vertices: every `k`-subset.
    pub fn complete_uniform(n: usize, k: usize) -> Result<Self> {
        if k == 0 || k > n {
            return Err(Error::InvalidInput(format!("complete {k}-hypergraph on {n} vertices")));
        }
        let all: Vec<usize> = (0..n).collect();
        Self::new(n, k_subsets(&all, k))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    /// Same hypergraph with repeated hyperedges removed (first occurrence kept).
    pub fn normalized(&self) -> Hypergraph {
        let mut seen = BTreeSet::new();
        let hyperedges: Vec<Vec<usize>> = self
            .hyperedges
            .iter()
            .filter(|h| seen.insert((*h).clone()))
            .cloned()
            .collect();
        if hyperedges.len() != self.hyperedges.len() {
            log::debug!(
                "normalization removed {} repeated hyperedges",
                self.hyperedges.len() - hyperedges.len()
            );
        }
        Hypergraph {
            vertex_count: self.vertex_count,
            hyperedges,
        }
    }

    /// Body graph `B(Θ)`: every pair of vertices sharing a hyperedge.
    pub fn body_graph(&self) -> Graph {
        let mut set = BTreeSet::new();
        for h in &self.hyperedges {
            for (a, &u) in h.iter().enumerate() {
                for &w in &h[a + 1..] {
                    set.insert((u, w));
                }
            }
        }
        Graph::from_normalized(self.vertex_count, set)
    }

    /// `B_k(Θ)`: all `k`-subsets contained in some hyperedge, sorted and
    /// deduplicated. Hyperedges smaller than `k` contribute nothing.
    pub fn truncate(&self, k: usize) -> Result<Hypergraph> {
        if k == 0 {
            return Err(Error::InvalidInput("truncation size must be positive".into()));
        }
        let mut set = BTreeSet::new();
        for h in &self.hyperedges {
            set.extend(k_subsets(h, k));
        }
        Ok(Hypergraph {
            vertex_count: self.vertex_count,
            hyperedges: set.into_iter().collect(),
        })
    }

    /// Zha–Zhang overlap condition in dimension `d`: the hyperedges, linked
    /// whenever two of them share at least `d + 1` vertices, form a connected
    /// graph. False for a hypergraph without hyperedges.
    pub fn zha_zhang_condition(&self, d: usize) -> bool {
        let m = self.hyperedges.len();
        if m == 0 {
            return false;
        }
        let mut seen = vec![false; m];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(i) = queue.pop_front() {
            for j in 0..m {
                if !seen[j] && intersection_size(&self.hyperedges[i], &self.hyperedges[j]) > d {
                    seen[j] = true;
                    reached += 1;
                    queue.push_back(j);
                }
            }
        }
        reached == m
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

/// All `k`-subsets of `items`, in lexicographic order of positions.
pub fn k_subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let n = items.len();
    if k == 0 || k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        let Some(pos) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return out;
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}

pub fn body_graph(theta: &Hypergraph) -> Graph {
    theta.body_graph()
}

pub fn neighborhood_hypergraph(gamma: &Graph) -> Hypergraph {
    gamma.neighborhood_hypergraph()
}

pub fn squared_graph(gamma: &Graph) -> Graph {
    gamma.squared()
}

pub fn truncate_hyperedges(theta: &Hypergraph, k: usize) -> Result<Hypergraph> {
    theta.truncate(k)
}

pub fn zha_zhang_condition(theta: &Hypergraph, d: usize) -> bool {
    theta.zha_zhang_condition(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mixed() -> Hypergraph {
        // labels 1..6 shifted to 0..5
        Hypergraph::new(6, [vec![0, 1, 5], vec![1, 2, 4], vec![4, 5], vec![3, 4]]).unwrap()
    }

    fn six_vertex() -> Graph {
        let e = [(1, 2), (1, 6), (2, 3), (2, 6), (3, 5), (4, 5), (5, 6)];
        Graph::new(6, e.iter().map(|&(u, w)| (u - 1, w - 1))).unwrap()
    }

    fn shift(sets: &[&[usize]]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.iter().map(|v| v - 1).collect()).collect()
    }

    #[test]
    fn body_graph_of_mixed_hypergraph() {
        let g = mixed().body_graph();
        let expected = [(1, 2), (1, 6), (2, 6), (2, 3), (2, 5), (3, 5), (5, 6), (4, 5)];
        let want = Graph::new(6, expected.iter().map(|&(u, w)| (u - 1, w - 1))).unwrap();
        assert_eq!(g, want);
        assert_eq!(g.edge_count(), 8);
    }

    #[test]
    fn body_graph_trivial_cases() {
        let tri = Hypergraph::new(3, [vec![0, 1, 2]]).unwrap().body_graph();
        assert_eq!(tri, Graph::complete(3).unwrap());
        let singles = Hypergraph::new(3, [vec![0], vec![1], vec![2]]).unwrap();
        assert_eq!(singles.body_graph().edge_count(), 0);
    }

    #[test]
    fn neighborhood_of_six_vertex_graph() {
        let n = six_vertex().neighborhood_hypergraph();
        let want = shift(&[
            &[1, 2, 6],
            &[1, 2, 3, 6],
            &[2, 3, 5],
            &[4, 5],
            &[3, 4, 5, 6],
            &[1, 2, 5, 6],
        ]);
        assert_eq!(n.hyperedges(), want.as_slice());
    }

    #[test]
    fn neighborhood_trivial_cases() {
        let g = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(g.neighborhood_hypergraph().hyperedges()[2], vec![2]);
        let tri = Graph::complete(3).unwrap().neighborhood_hypergraph();
        assert_eq!(tri.hyperedges(), &[vec![0, 1, 2], vec![0, 1, 2], vec![0, 1, 2]]);
        assert_eq!(tri.normalized().hyperedge_count(), 1);
    }

    #[test]
    fn squared_examples() {
        assert_eq!(Graph::path(3).unwrap().squared(), Graph::complete(3).unwrap());
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.squared(), k5);
        let g = six_vertex();
        assert_eq!(g.squared(), g.neighborhood_hypergraph().body_graph());
    }

    #[test]
    fn truncation_examples() {
        let one = Hypergraph::new(4, [vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(one.truncate(4).unwrap().hyperedges(), &[vec![0, 1, 2, 3]]);
        let five = Hypergraph::new(5, [vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(five.truncate(4).unwrap().hyperedge_count(), 5);
        let b2 = mixed().truncate(2).unwrap();
        assert_eq!(b2.hyperedge_count(), 8);
        assert_eq!(b2.body_graph(), mixed().body_graph());
        assert!(mixed().truncate(0).is_err());
        // hyperedges smaller than k contribute nothing
        assert_eq!(mixed().truncate(4).unwrap().hyperedge_count(), 0);
    }

    #[test]
    fn zha_zhang_examples() {
        let single = Hypergraph::new(4, [vec![0, 1, 2]]).unwrap();
        for d in 1..5 {
            assert!(single.zha_zhang_condition(d));
        }
        let nk5 = Graph::complete(5).unwrap().neighborhood_hypergraph();
        assert!(nk5.zha_zhang_condition(2));
        assert!(!Hypergraph::new(2, Vec::<Vec<usize>>::new()).unwrap().zha_zhang_condition(1));
    }

    #[test]
    fn invalid_inputs_rejected() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
        assert!(Hypergraph::new(3, [vec![0, 5]]).is_err());
        assert!(Hypergraph::new(3, [Vec::<usize>::new()]).is_err());
        let dup = Hypergraph::new(3, [vec![0, 1, 1, 2]]).unwrap();
        assert_eq!(dup.hyperedges()[0], vec![0, 1, 2]);
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]).unwrap().edge_count(), 1);
    }

    #[test]
    fn k_subsets_counts() {
        let items: Vec<usize> = (0..7).collect();
        assert_eq!(k_subsets(&items, 3).len(), 35);
        assert_eq!(k_subsets(&items, 7).len(), 1);
        assert!(k_subsets(&items, 8).is_empty());
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..10).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..25).prop_map(move |pairs| {
                Graph::new(n, pairs.into_iter().filter(|(u, w)| u != w)).unwrap()
            })
        })
    }

    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (1usize..9).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::btree_set(0..n, 1..=n), 0..6)
                .prop_map(move |hs| Hypergraph::new(n, hs).unwrap())
        })
    }

    proptest! {
        #[test]
        fn neighborhood_body_is_square(g in arb_graph()) {
            prop_assert_eq!(g.neighborhood_hypergraph().body_graph(), g.squared());
        }

        #[test]
        fn truncate_two_is_body(h in arb_hypergraph()) {
            let b2 = h.truncate(2).unwrap();
            prop_assert_eq!(b2.body_graph(), h.body_graph());
            prop_assert_eq!(b2.hyperedge_count(), h.body_graph().edge_count());
        }

        #[test]
        fn zha_zhang_monotone_in_d(h in arb_hypergraph(), d in 1usize..5) {
            if h.zha_zhang_condition(d) {
                for smaller in 1..d {
                    prop_assert!(h.zha_zhang_condition(smaller));
                }
            }
        }

        #[test]
        fn operations_are_pure(h in arb_hypergraph()) {
            prop_assert_eq!(h.body_graph(), h.body_graph());
            prop_assert_eq!(h.truncate(3).unwrap(), h.truncate(3).unwrap());
        }
    }
}

//! Exact vertex connectivity by unit-capacity max-flow on the vertex-split network.

use std::collections::VecDeque;

use super::Graph;

struct FlowNetwork {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) {
        self.adj[from].push(self.head.len());
        self.head.push(to);
        self.cap.push(cap);
        self.adj[to].push(self.head.len());
        self.head.push(from);
        self.cap.push(0);
    }

    /// Augments along shortest paths until `limit` units flow or no path remains.
    fn max_flow(&mut self, source: usize, sink: usize, limit: usize) -> usize {
        let mut flow = 0;
        let mut via = vec![usize::MAX; self.adj.len()];
        while flow < limit {
            via.fill(usize::MAX);
            let mut queue = VecDeque::from([source]);
            let mut found = false;
            'bfs: while let Some(x) = queue.pop_front() {
                for &arc in &self.adj[x] {
                    let y = self.head[arc];
                    if self.cap[arc] > 0 && y != source && via[y] == usize::MAX {
                        via[y] = arc;
                        if y == sink {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if !found {
                break;
            }
            let mut y = sink;
            while y != source {
                let arc = via[y];
                self.cap[arc] -= 1;
                self.cap[arc ^ 1] += 1;
                y = self.head[arc ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// Number of internally vertex-disjoint paths between non-adjacent `s` and `t`,
/// capped at `limit`.
pub fn local_vertex_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> usize {
    assert!(s != t && !g.has_edge(s, t), "local connectivity needs distinct non-adjacent vertices");
    let n = g.vertex_count();
    // vertex x: in-node 2x, out-node 2x + 1
    let mut net = FlowNetwork::new(2 * n);
    let big = n as u32;
    for x in 0..n {
        net.add_arc(2 * x, 2 * x + 1, if x == s || x == t { big } else { 1 });
    }
    for &(u, w) in g.edges() {
        net.add_arc(2 * u + 1, 2 * w, big);
        net.add_arc(2 * w + 1, 2 * u, big);
    }
    net.max_flow(2 * s + 1, 2 * t, limit)
}

/// True iff `g` has more than `k` vertices and no vertex cut of size below `k`.
///
/// Graphs with at most `k` vertices are never `k`-connected; the complete
/// graph `K_n` is `k`-connected for every `k ≤ n − 1`.
pub fn is_k_vertex_connected(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    if n <= k {
        return false;
    }
    if k == 0 {
        return true;
    }
    // A cut S with |S| < k misses one of the first k vertices; that vertex is
    // then separated from some non-adjacent vertex by S.
    for s in 0..k {
        for t in 0..n {
            if t != s && !g.has_edge(s, t) && local_vertex_connectivity(g, s, t, k) < k {
                return false;
            }
        }
    }
    true
}

/// Vertex connectivity `κ(g)`, with `κ(K_n) = n − 1`.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.vertex_count();
    (0..n).rev().find(|&k| is_k_vertex_connected(g, k)).unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;

    /// Brute force: remove every vertex subset of size < k and test connectivity.
    fn brute_force_k_connected(g: &Graph, k: usize) -> bool {
        let n = g.vertex_count();
        if n <= k {
            return false;
        }
        for mask in 0u32..(1 << n) {
            if (mask.count_ones() as usize) < k {
                let removed: Vec<bool> = (0..n).map(|v| mask & (1 << v) != 0).collect();
                if !g.is_connected_without(&removed) {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn path_is_not_two_connected() {
        let p = Graph::path(5).unwrap();
        assert!(is_k_vertex_connected(&p, 1));
        assert!(!is_k_vertex_connected(&p, 2));
    }

    #[test]
    fn wheel_five_is_three_connected() {
        let w = families::wheel(5).unwrap();
        assert!(brute_force_k_connected(&w, 3));
        assert!(is_k_vertex_connected(&w, 3));
        assert!(!is_k_vertex_connected(&w, 4));
        assert_eq!(vertex_connectivity(&w), 3);
    }

    #[test]
    fn complete_graph_convention() {
        let k4 = Graph::complete(4).unwrap();
        assert!(is_k_vertex_connected(&k4, 3));
        assert!(!is_k_vertex_connected(&k4, 4));
        assert_eq!(vertex_connectivity(&k4), 3);
    }

    #[test]
    fn hex_torus_is_three_connected() {
        let g = families::hex_torus(4, 4).unwrap();
        assert!(is_k_vertex_connected(&g, 3));
        assert!(!is_k_vertex_connected(&g, 4));
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..9).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n), 0..30).prop_map(move |pairs| {
                Graph::new(n, pairs.into_iter().filter(|(u, w)| u != w)).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_brute_force(g in arb_graph(), k in 1usize..5) {
            prop_assert_eq!(is_k_vertex_connected(&g, k), brute_force_k_connected(&g, k));
        }

        #[test]
        fn monotone_in_k(g in arb_graph(), k in 1usize..6) {
            if is_k_vertex_connected(&g, k) {
                for smaller in 1..k {
                    prop_assert!(is_k_vertex_connected(&g, smaller));
                }
            }
        }
    }
}

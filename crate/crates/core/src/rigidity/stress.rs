//! Non-symmetric equilibrium stress matrices.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use super::framework::Configuration;
use crate::error::{Error, Result};
use crate::hypergraph::Graph;
use crate::numkernel::numerical_kernel;

/// A `v × v` matrix with the sparsity of the graph, zero row sums, and every
/// coordinate vector of the configuration in its kernel.
#[derive(Debug, Clone)]
pub struct StressMatrix {
    pub matrix: DMatrix<f64>,
    pub symmetric: bool,
    /// Vertices whose row is identically zero.
    pub zero_rows: Vec<usize>,
}

impl StressMatrix {
    pub fn corank(&self, rel_tol: f64) -> Result<usize> {
        Ok(numerical_kernel(&self.matrix, rel_tol)?.dimension())
    }

    /// Largest relative violation of the stress conditions:
    /// off-graph entries, row sums and `Ω p_a`, each scaled by the row norm
    /// (resp. `‖Ω‖_F ‖p_a‖`), plus asymmetry when `symmetric` is set.
    pub fn max_violation(&self, graph: &Graph, config: &Configuration) -> f64 {
        let v = graph.vertex_count();
        let mut worst: f64 = 0.0;
        for i in 0..v {
            let row = self.matrix.row(i);
            let n = row.norm();
            if n == 0.0 {
                continue;
            }
            for j in 0..v {
                if i != j && !graph.has_edge(i, j) {
                    worst = worst.max(row[j].abs() / n);
                }
            }
            worst = worst.max(row.sum().abs() / n);
        }
        let (_, coord) = super::affinity::annihilation_residuals(&self.matrix, config);
        worst = worst.max(coord);
        if self.symmetric {
            let scale = self.matrix.amax().max(f64::MIN_POSITIVE);
            worst = worst.max((&self.matrix - self.matrix.transpose()).amax() / scale);
        }
        worst
    }
}

/// `d × deg(i)` matrix of edge vectors `p(j) − p(i)` over the neighbors `j`.
pub(crate) fn edge_vectors(graph: &Graph, config: &Configuration, i: usize) -> DMatrix<f64> {
    let nbrs = graph.neighbors(i);
    let center = config.point(i);
    let mut e = DMatrix::zeros(config.dim(), nbrs.len());
    for (c, &j) in nbrs.iter().enumerate() {
        e.set_column(c, &(config.point(j) - &center));
    }
    e
}

/// Writes one stress row: `Ω_ij = w_j` on neighbors, `Ω_ii = −Σ w_j`.
pub(crate) fn place_row(matrix: &mut DMatrix<f64>, graph: &Graph, i: usize, weights: &DVector<f64>) {
    let mut diag = 0.0;
    for (&j, &w) in graph.neighbors(i).iter().zip(weights.iter()) {
        matrix[(i, j)] = w;
        diag -= w;
    }
    matrix[(i, i)] = diag;
}

/// A random unit vector in the null space of the edge-vector matrix of `i`,
/// or `None` when the edge vectors are independent.
pub(crate) fn random_row_weights<R: Rng + ?Sized>(
    graph: &Graph,
    config: &Configuration,
    i: usize,
    rel_tol: f64,
    rng: &mut R,
) -> Result<Option<DVector<f64>>> {
    let e = edge_vectors(graph, config, i);
    if e.ncols() == 0 {
        return Ok(None);
    }
    // scale out the edge lengths' magnitude so rel_tol sees only the shape
    let scale = e.amax();
    let e = if scale > 0.0 { e / scale } else { e };
    let kernel = numerical_kernel(&e, rel_tol)?;
    if kernel.dimension() == 0 {
        return Ok(None);
    }
    let coeffs = DVector::from_fn(kernel.dimension(), |_, _| rng.sample::<f64, _>(StandardNormal));
    let w = &kernel.basis * coeffs;
    let n = w.norm();
    Ok((n > 0.0).then(|| w / n))
}

/// A random non-symmetric equilibrium stress of `(config, graph)`.
///
/// Row `i` is a uniformly random unit element of the null space of the edge
/// vectors at `i`; rows are drawn independently.
pub fn nonsymmetric_stress<R: Rng + ?Sized>(
    graph: &Graph,
    config: &Configuration,
    rel_tol: f64,
    rng: &mut R,
) -> Result<StressMatrix> {
    let v = graph.vertex_count();
    if config.vertex_count() != v {
        return Err(Error::InvalidInput(format!(
            "graph has {v} vertices but configuration has {}",
            config.vertex_count()
        )));
    }
    let mut matrix = DMatrix::zeros(v, v);
    let mut zero_rows = Vec::new();
    for i in 0..v {
        match random_row_weights(graph, config, i, rel_tol, rng)? {
            Some(w) => place_row(&mut matrix, graph, i, &w),
            None => zero_rows.push(i),
        }
    }
    Ok(StressMatrix {
        matrix,
        symmetric: false,
        zero_rows,
    })
}

/// Vertical concatenation of `count` independent random stresses.
pub fn stacked_stresses<R: Rng + ?Sized>(
    graph: &Graph,
    config: &Configuration,
    count: usize,
    rel_tol: f64,
    rng: &mut R,
) -> Result<DMatrix<f64>> {
    let v = graph.vertex_count();
    let mut out = DMatrix::zeros(count * v, v);
    for s in 0..count {
        let omega = nonsymmetric_stress(graph, config, rel_tol, rng)?;
        out.view_mut((s * v, 0), (v, v)).copy_from(&omega.matrix);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::seeded_rng;

    #[test]
    fn k4_generic_has_corank_three() {
        let mut rng = seeded_rng(21);
        let g = Graph::complete(4).unwrap();
        let config = Configuration::random(4, 2, &mut rng);
        let omega = nonsymmetric_stress(&g, &config, 1e-9, &mut rng).unwrap();
        assert!(omega.zero_rows.is_empty());
        assert_eq!(omega.corank(1e-9).unwrap(), 3);
        assert!(omega.max_violation(&g, &config) < 1e-8);
        // kernel is span{1, x, y}
        let k = numerical_kernel(&omega.matrix, 1e-9).unwrap();
        for x in [DVector::from_element(4, 1.0), config.axis(0), config.axis(1)] {
            let proj = &k.basis * (k.basis.transpose() * &x);
            assert!((proj - &x).norm() < 1e-8 * x.norm());
        }
    }

    #[test]
    fn star_has_only_the_center_row() {
        let mut rng = seeded_rng(22);
        let g = families::star(5).unwrap();
        let config = Configuration::random(6, 2, &mut rng);
        let omega = nonsymmetric_stress(&g, &config, 1e-9, &mut rng).unwrap();
        assert_eq!(omega.zero_rows, vec![1, 2, 3, 4, 5]);
        assert_eq!(omega.corank(1e-9).unwrap(), 5);
    }

    #[test]
    fn hex_torus_generic_corank() {
        let mut rng = seeded_rng(23);
        let g = families::hex_torus(4, 4).unwrap();
        let config = Configuration::random(32, 2, &mut rng);
        let omega = nonsymmetric_stress(&g, &config, 1e-9, &mut rng).unwrap();
        assert_eq!(omega.corank(1e-9).unwrap(), 3);
        assert!(omega.max_violation(&g, &config) < 1e-8);
    }

    #[test]
    fn rows_are_unit_off_diagonal() {
        let mut rng = seeded_rng(24);
        let g = families::wheel(7).unwrap();
        let config = Configuration::random(8, 2, &mut rng);
        let omega = nonsymmetric_stress(&g, &config, 1e-9, &mut rng).unwrap();
        for i in 0..8 {
            let off: f64 = g.neighbors(i).iter().map(|&j| omega.matrix[(i, j)].powi(2)).sum();
            assert!((off - 1.0).abs() < 1e-12);
        }
    }
}

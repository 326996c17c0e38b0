//! Strong affinity matrices and the affine rigidity rank test.

use nalgebra::{DMatrix, DVector};

use super::framework::{affine_span_dim_of, check_proper, Configuration};
use super::{Certificate, RigidityVerdict, Verdict};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::numkernel::numerical_kernel;

/// Rows encoding affine relations among the vertices of single hyperedges.
#[derive(Debug, Clone)]
pub struct AffinityMatrix {
    /// `rows × v`.
    pub matrix: DMatrix<f64>,
    /// Hyperedge index that produced each row.
    pub row_provenance: Vec<usize>,
    /// True when the rows span every affine relation of every hyperedge.
    pub strong: bool,
}

impl AffinityMatrix {
    pub fn rows(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn cols(&self) -> usize {
        self.matrix.ncols()
    }

    /// Kernel dimension at `rel_tol`.
    pub fn corank(&self, rel_tol: f64) -> Result<usize> {
        Ok(numerical_kernel(&self.matrix, rel_tol)?.dimension())
    }

    /// Stacks further rows (e.g. stresses) below this matrix; the result is
    /// no longer guaranteed strong unless `self` was.
    pub fn stacked(&self, other: &DMatrix<f64>) -> AffinityMatrix {
        let (r, c) = self.matrix.shape();
        let mut matrix = DMatrix::zeros(r + other.nrows(), c);
        matrix.view_mut((0, 0), (r, c)).copy_from(&self.matrix);
        matrix.view_mut((r, 0), other.shape()).copy_from(other);
        let mut row_provenance = self.row_provenance.clone();
        row_provenance.extend(std::iter::repeat_n(usize::MAX, other.nrows()));
        AffinityMatrix {
            matrix,
            row_provenance,
            strong: self.strong,
        }
    }
}

/// All affine relations among `k` points given as a `k × d` matrix: an
/// orthonormal basis (as rows of an `r × k` matrix) of the vectors `a` with
/// `Σ aᵢ = 0` and `Σ aᵢ pᵢ = 0`.
///
/// The chart is centered and rescaled first; affine relations do not change
/// under that, and the lifted matrix stays well conditioned.
pub fn hyperedge_relations(points: &DMatrix<f64>, rel_tol: f64) -> Result<DMatrix<f64>> {
    let (k, d) = points.shape();
    if k == 0 {
        return Ok(DMatrix::zeros(0, 0));
    }
    let mean = points.row_mean();
    let mut centered = points.clone();
    for mut row in centered.row_iter_mut() {
        row -= &mean;
    }
    let scale = (centered.norm_squared() / k as f64).sqrt();
    if scale > 0.0 {
        centered /= scale;
    }
    let lift = DMatrix::from_fn(d + 1, k, |r, c| if r == 0 { 1.0 } else { centered[(c, r - 1)] });
    Ok(numerical_kernel(&lift, rel_tol)?.basis.transpose())
}

/// Builds a strong affinity matrix from per-hyperedge local charts.
///
/// `charts[i]` holds the coordinates (`|h| × d`, rows in hyperedge order) of
/// the members of hyperedge `i`. Any chart related to the true positions by an
/// affine map gives the same rows.
pub fn affinity_from_charts(
    vertex_count: usize,
    hyperedges: &[Vec<usize>],
    charts: &[DMatrix<f64>],
    rel_tol: f64,
) -> Result<AffinityMatrix> {
    let mut blocks = Vec::with_capacity(hyperedges.len());
    let mut total = 0;
    for (h, chart) in hyperedges.iter().zip(charts) {
        if chart.nrows() != h.len() {
            return Err(Error::InvalidInput(format!(
                "chart has {} points for a hyperedge of {} vertices",
                chart.nrows(),
                h.len()
            )));
        }
        let rel = hyperedge_relations(chart, rel_tol)?;
        total += rel.nrows();
        blocks.push(rel);
    }
    let mut matrix = DMatrix::zeros(total, vertex_count);
    let mut row_provenance = Vec::with_capacity(total);
    let mut r = 0;
    for (index, (h, rel)) in hyperedges.iter().zip(&blocks).enumerate() {
        for local in 0..rel.nrows() {
            for (slot, &v) in h.iter().enumerate() {
                matrix[(r, v)] = rel[(local, slot)];
            }
            row_provenance.push(index);
            r += 1;
        }
    }
    Ok(AffinityMatrix {
        matrix,
        row_provenance,
        strong: true,
    })
}

/// Strong affinity matrix of the framework `(config, theta)`.
///
/// Each hyperedge contributes an orthonormal basis of its affine relations,
/// so hyperedges of at most `d + 1` affinely independent points contribute
/// nothing, while degenerate small hyperedges (e.g. three collinear points in
/// the plane) contribute their genuine relations. Large hyperedges need no
/// expansion into `(d+2)`-subsets.
pub fn strong_affinity_matrix(theta: &Hypergraph, config: &Configuration, rel_tol: f64) -> Result<AffinityMatrix> {
    check_sizes(theta, config)?;
    let (v, d) = (config.vertex_count(), config.dim());
    if v < d + 1 {
        return Err(Error::UnsupportedInstance(format!("{v} vertices cannot span R^{d}")));
    }
    let charts: Vec<DMatrix<f64>> = theta.hyperedges().iter().map(|h| config.select(h)).collect();
    affinity_from_charts(v, theta.hyperedges(), &charts, rel_tol)
}

pub(crate) fn check_sizes(theta: &Hypergraph, config: &Configuration) -> Result<()> {
    if theta.vertex_count() != config.vertex_count() {
        return Err(Error::InvalidInput(format!(
            "hypergraph has {} vertices but configuration has {}",
            theta.vertex_count(),
            config.vertex_count()
        )));
    }
    Ok(())
}

/// Affine rigidity of a proper framework: rigid iff the strong affinity
/// matrix has corank exactly `d + 1`.
pub fn affine_rigidity_test(theta: &Hypergraph, config: &Configuration, rel_tol: f64) -> Result<RigidityVerdict> {
    check_sizes(theta, config)?;
    check_proper(config, rel_tol)?;
    let d = config.dim();
    let m = strong_affinity_matrix(theta, config, rel_tol)?;
    let kernel = numerical_kernel(&m.matrix, rel_tol)?;
    let corank = kernel.dimension();
    let verdict = match corank.cmp(&(d + 1)) {
        std::cmp::Ordering::Equal => Verdict::Rigid,
        std::cmp::Ordering::Greater => Verdict::Flexible,
        std::cmp::Ordering::Less => {
            log::warn!("corank {corank} below d + 1 = {}; tolerance {rel_tol} too tight for this data", d + 1);
            Verdict::Inconclusive
        }
    };
    Ok(RigidityVerdict {
        verdict,
        corank,
        expected_corank: d + 1,
        one_sided: false,
        certificate: Certificate::Floating {
            matrix: "strong affinity".into(),
            rows: m.rows(),
            cols: m.cols(),
            rel_tol,
            threshold: kernel.threshold_used,
            gap: kernel.gap(),
        },
    })
}

/// Residual checks for a matrix that should annihilate `1` and every axis
/// of `config`: returns `(max |row sum| over unit-scaled rows,
/// max ‖M x_a‖ / (‖M‖_F ‖x_a‖))`.
pub fn annihilation_residuals(matrix: &DMatrix<f64>, config: &Configuration) -> (f64, f64) {
    let mut row_sum: f64 = 0.0;
    for row in matrix.row_iter() {
        let n = row.norm();
        if n > 0.0 {
            row_sum = row_sum.max((row.sum() / n).abs());
        }
    }
    let norm = matrix.norm().max(f64::MIN_POSITIVE);
    let mut coord: f64 = 0.0;
    for a in 0..config.dim() {
        let x = config.axis(a);
        let xn = x.norm();
        if xn > 0.0 {
            coord = coord.max((matrix * &x).norm() / (norm * xn));
        }
    }
    (row_sum, coord)
}

/// True iff the points of some hyperedge affinely span `R^d`.
pub fn some_hyperedge_spans(theta: &Hypergraph, config: &Configuration, rel_tol: f64) -> Result<bool> {
    let d = config.dim();
    for h in theta.hyperedges() {
        if h.len() > d && affine_span_dim_of(&config.select(h), rel_tol)? == d {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Projection of `x` onto the orthogonal complement of the span of `1` and
/// the coordinate axes; nonzero exactly for non-trivial kernel directions.
pub fn nontrivial_part(config: &Configuration, x: &DVector<f64>) -> DVector<f64> {
    let v = config.vertex_count();
    let trivial = DMatrix::from_fn(v, config.dim() + 1, |i, j| if j == 0 { 1.0 } else { config.points()[(i, j - 1)] });
    let q = trivial.qr().q();
    x - &q * (q.transpose() * x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::seeded_rng;

    #[test]
    fn four_generic_points_one_relation() {
        let mut rng = seeded_rng(5);
        let config = Configuration::random(4, 2, &mut rng);
        let theta = Hypergraph::new(4, [vec![0, 1, 2, 3]]).unwrap();
        let m = strong_affinity_matrix(&theta, &config, 1e-9).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.corank(1e-9).unwrap(), 3);
        let (rs, cr) = annihilation_residuals(&m.matrix, &config);
        assert!(rs < 1e-9 && cr < 1e-8);
    }

    #[test]
    fn pentagon_has_no_rows() {
        let mut rng = seeded_rng(6);
        let config = Configuration::random(5, 2, &mut rng);
        let m = strong_affinity_matrix(&families::pentagon(), &config, 1e-9).unwrap();
        assert_eq!(m.rows(), 0);
        assert_eq!(m.corank(1e-9).unwrap(), 5);
        let verdict = affine_rigidity_test(&families::pentagon(), &config, 1e-9).unwrap();
        assert_eq!(verdict.verdict, Verdict::Flexible);
        assert_eq!(verdict.corank, 5);
    }

    #[test]
    fn full_hyperedge_rank() {
        let mut rng = seeded_rng(7);
        let config = Configuration::random(6, 2, &mut rng);
        let theta = Hypergraph::new(6, [vec![0, 1, 2, 3, 4, 5]]).unwrap();
        let m = strong_affinity_matrix(&theta, &config, 1e-9).unwrap();
        assert_eq!(m.rows(), 3);
        assert_eq!(m.corank(1e-9).unwrap(), 3);
    }

    #[test]
    fn degenerate_small_hyperedge_contributes() {
        // three collinear points in the plane carry one affine relation
        let config = Configuration::from_rows(2, &[vec![0.0, 0.0], vec![1.0, 2.0], vec![3.0, 6.0], vec![5.0, -1.0]]).unwrap();
        let theta = Hypergraph::new(4, [vec![0, 1, 2]]).unwrap();
        let m = strong_affinity_matrix(&theta, &config, 1e-9).unwrap();
        assert_eq!(m.rows(), 1);
        assert_eq!(m.row_provenance, vec![0]);
        assert!(m.matrix[(0, 3)] == 0.0);
    }

    #[test]
    fn mixed_hypergraph_is_flexible_with_full_corank() {
        let mut rng = seeded_rng(8);
        let config = Configuration::random(6, 2, &mut rng);
        let verdict = affine_rigidity_test(&families::fig1(), &config, 1e-9).unwrap();
        assert_eq!(verdict.verdict, Verdict::Flexible);
        assert_eq!(verdict.corank, 6);
    }

    #[test]
    fn simplex_plus_one_is_rigid() {
        let mut rng = seeded_rng(9);
        for d in 1..=4 {
            let config = Configuration::random(d + 2, d, &mut rng);
            let theta = Hypergraph::new(d + 2, [(0..d + 2).collect::<Vec<_>>()]).unwrap();
            let verdict = affine_rigidity_test(&theta, &config, 1e-9).unwrap();
            assert_eq!(verdict.verdict, Verdict::Rigid, "d = {d}");
            assert_eq!(verdict.corank, d + 1);
        }
    }

    #[test]
    fn improper_and_undersized_errors() {
        let collinear = Configuration::from_rows(2, &[vec![0.0, 0.0], vec![1.0, 1.0], vec![2.0, 2.0], vec![3.0, 3.0]]).unwrap();
        let theta = Hypergraph::new(4, [vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(
            affine_rigidity_test(&theta, &collinear, 1e-9).unwrap_err(),
            Error::ImproperFramework { span: 1, dim: 2 }
        );
        let mut rng = seeded_rng(10);
        let small = Configuration::random(2, 2, &mut rng);
        let theta2 = Hypergraph::new(2, [vec![0, 1]]).unwrap();
        assert!(matches!(
            strong_affinity_matrix(&theta2, &small, 1e-9),
            Err(Error::UnsupportedInstance(_))
        ));
    }

    #[test]
    fn zero_padding_keeps_corank() {
        let mut rng = seeded_rng(11);
        let g = families::wheel(6).unwrap();
        let theta = g.neighborhood_hypergraph();
        let config = Configuration::random(7, 2, &mut rng);
        let base = strong_affinity_matrix(&theta, &config, 1e-9).unwrap().corank(1e-9).unwrap();
        let padded = strong_affinity_matrix(&theta, &config.padded(4), 1e-9).unwrap().corank(1e-9).unwrap();
        assert_eq!(base, padded);
    }
}

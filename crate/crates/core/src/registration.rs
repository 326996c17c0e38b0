//! Recovering a global configuration from local scans.
//!
//! Each scan lists the points of one hyperedge in its own coordinate chart.
//! Affine relations are invariant under the unknown per-scan transforms, so
//! the strong affinity matrix can be assembled from the charts directly; its
//! kernel is the configuration up to a global affine map. When scan-internal
//! distances are trustworthy, the residual affine map is removed by fitting
//! the Gram matrix `G` of the unknown linear part to the measured lengths.

use std::cmp::Ordering;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::numkernel::{check_finite, least_squares, numerical_kernel, psd_cholesky, PsdFactor, DEFAULT_PSD_TOL};
use crate::rigidity::affinity::affinity_from_charts;
use crate::rigidity::conic::{conic_at_infinity, quadratic_monomials};
use crate::rigidity::Configuration;

/// Whether scan-internal distances are metrically correct.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Trust {
    Affine,
    Euclidean,
}

/// Residual indeterminacy of a recovered configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Gauge {
    Affine,
    Euclidean,
}

/// One local chart: `coords` row `i` is the position of `hyperedge[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Scan {
    hyperedge: Vec<usize>,
    coords: DMatrix<f64>,
}

impl Scan {
    pub fn new(hyperedge: Vec<usize>, coords: DMatrix<f64>) -> Result<Self> {
        if hyperedge.is_empty() {
            return Err(Error::InvalidInput("scan covers no vertices".into()));
        }
        if coords.nrows() != hyperedge.len() {
            return Err(Error::InvalidInput(format!(
                "scan lists {} vertices but {} points",
                hyperedge.len(),
                coords.nrows()
            )));
        }
        let mut sorted = hyperedge.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidInput(format!("scan {hyperedge:?} repeats a vertex")));
        }
        check_finite(&coords, "scan coordinates")?;
        Ok(Scan { hyperedge, coords })
    }

    pub fn hyperedge(&self) -> &[usize] {
        &self.hyperedge
    }

    pub fn coords(&self) -> &DMatrix<f64> {
        &self.coords
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanSet {
    vertex_count: usize,
    dim: usize,
    scans: Vec<Scan>,
    trust: Trust,
}

impl ScanSet {
    pub fn new(vertex_count: usize, dim: usize, scans: Vec<Scan>, trust: Trust) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("dimension must be positive".into()));
        }
        for s in &scans {
            if s.coords.ncols() != dim {
                return Err(Error::InvalidInput(format!(
                    "scan {:?} has {}-dimensional points, expected {dim}",
                    s.hyperedge,
                    s.coords.ncols()
                )));
            }
            if let Some(&u) = s.hyperedge.iter().find(|&&u| u >= vertex_count) {
                return Err(Error::InvalidInput(format!("scan vertex {u} out of range 0..{vertex_count}")));
            }
        }
        Ok(ScanSet {
            vertex_count,
            dim,
            scans,
            trust,
        })
    }

    /// Cuts a known configuration into one scan per hyperedge, untransformed.
    pub fn from_framework(theta: &Hypergraph, config: &Configuration, trust: Trust) -> Result<Self> {
        let scans = theta
            .hyperedges()
            .iter()
            .map(|h| Scan::new(h.clone(), config.select(h)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(theta.vertex_count(), config.dim(), scans, trust)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scans(&self) -> &[Scan] {
        &self.scans
    }

    pub fn trust(&self) -> Trust {
        self.trust
    }

    pub fn hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.vertex_count, self.scans.iter().map(|s| s.hyperedge.clone()))
    }

    /// Every vertex pair sharing a scan, with its squared chart distance.
    /// Pairs seen in several scans are listed once per scan.
    pub fn chart_lengths(&self) -> Vec<(usize, usize, f64)> {
        let mut out = Vec::new();
        for s in &self.scans {
            for i in 0..s.hyperedge.len() {
                for j in i + 1..s.hyperedge.len() {
                    let l = (s.coords.row(i) - s.coords.row(j)).norm_squared();
                    out.push((s.hyperedge[i], s.hyperedge[j], l));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    pub corank: usize,
    pub expected_corank: usize,
    pub affinity_rows: usize,
    pub kernel_threshold: f64,
    /// Ratio of the smallest discarded to the largest kept singular value.
    pub kernel_gap: f64,
    /// Largest point distance after the best-fit map of the gauge class,
    /// per scan. Empty when no scans were involved.
    pub scan_residuals: Vec<f64>,
    pub max_scan_residual: f64,
    /// `max_scan_residual / diameter`.
    pub relative_scan_residual: f64,
    pub length_constraints: usize,
    /// Fitted Gram matrix of the removed linear map, row-major.
    pub gram: Option<Vec<Vec<f64>>>,
    pub gram_min_eigenvalue: Option<f64>,
    pub conic_margin: Option<f64>,
    pub max_relative_length_error: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Registration {
    pub config: Configuration,
    pub gauge: Gauge,
    pub diagnostics: Diagnostics,
}

/// Recovers the configuration up to a global affine transform.
///
/// The gauge is fixed deterministically: the kernel's component orthogonal
/// to the all-ones vector is reduced to its `d` principal directions (signs
/// chosen so each column's largest entry is positive), then vertex 0 is
/// moved to the origin.
pub fn affine_register(scans: &ScanSet, rel_tol: f64) -> Result<Registration> {
    let (v, d) = (scans.vertex_count, scans.dim);
    let mut covered = vec![false; v];
    for s in &scans.scans {
        for &u in &s.hyperedge {
            covered[u] = true;
        }
    }
    if let Some(u) = covered.iter().position(|c| !c) {
        return Err(Error::InvalidInput(format!("vertex {u} appears in no scan")));
    }
    if v < d + 1 {
        return Err(Error::UnsupportedInstance(format!("{v} vertices cannot span R^{d}")));
    }
    let hyperedges: Vec<Vec<usize>> = scans.scans.iter().map(|s| s.hyperedge.clone()).collect();
    let charts: Vec<DMatrix<f64>> = scans.scans.iter().map(|s| s.coords.clone()).collect();
    let affinity = affinity_from_charts(v, &hyperedges, &charts, rel_tol)?;
    let kernel = numerical_kernel(&affinity.matrix, rel_tol)?;
    let corank = kernel.dimension();
    match corank.cmp(&(d + 1)) {
        Ordering::Greater => return Err(Error::NotAffinelyRigid { corank, expected: d + 1 }),
        Ordering::Less => return Err(Error::InconsistentScans { corank, expected: d + 1 }),
        Ordering::Equal => {}
    }
    let config = gauge_fix(&kernel.basis, d)?;
    let residuals = scan_residuals(scans, &config, Gauge::Affine)?;
    let diagnostics = Diagnostics {
        corank,
        expected_corank: d + 1,
        affinity_rows: affinity.rows(),
        kernel_threshold: kernel.threshold_used,
        kernel_gap: kernel.gap(),
        max_scan_residual: residuals.iter().copied().fold(0.0, f64::max),
        relative_scan_residual: 0.0,
        scan_residuals: residuals,
        length_constraints: 0,
        gram: None,
        gram_min_eigenvalue: None,
        conic_margin: None,
        max_relative_length_error: None,
    };
    let mut reg = Registration {
        config,
        gauge: Gauge::Affine,
        diagnostics,
    };
    reg.diagnostics.relative_scan_residual = relative(reg.diagnostics.max_scan_residual, &reg.config);
    Ok(reg)
}

fn relative(residual: f64, config: &Configuration) -> f64 {
    let diam = config.diameter();
    if diam > 0.0 {
        residual / diam
    } else {
        residual
    }
}

fn gauge_fix(basis: &DMatrix<f64>, d: usize) -> Result<Configuration> {
    let v = basis.nrows();
    let mut centered = basis.clone();
    for mut col in centered.column_iter_mut() {
        let mean = col.mean();
        col.add_scalar_mut(-mean);
    }
    let svd = centered.svd(true, false);
    let u = svd.u.expect("left singular vectors requested");
    let mut order: Vec<usize> = (0..svd.singular_values.len()).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    if svd.singular_values[order[d - 1]] == 0.0 {
        return Err(Error::DegenerateInstance("kernel does not separate the vertices".into()));
    }
    let mut points = DMatrix::zeros(v, d);
    for (c, &k) in order.iter().take(d).enumerate() {
        let mut col = u.column(k) * svd.singular_values[k];
        let pivot = col.iamax();
        if col[pivot] < 0.0 {
            col.neg_mut();
        }
        points.set_column(c, &col);
    }
    let origin = points.row(0).into_owned();
    for mut row in points.row_iter_mut() {
        row -= &origin;
    }
    Configuration::new(points)
}

fn scan_residuals(scans: &ScanSet, config: &Configuration, gauge: Gauge) -> Result<Vec<f64>> {
    scans
        .scans
        .iter()
        .map(|s| {
            let target = config.select(&s.hyperedge);
            match gauge {
                Gauge::Affine => affine_fit_residual(&s.coords, &target),
                Gauge::Euclidean => Ok(procrustes_residual(&s.coords, &target)),
            }
        })
        .collect()
}

fn max_row_norm(m: &DMatrix<f64>) -> f64 {
    m.row_iter().map(|r| r.norm()).fold(0.0, f64::max)
}

/// Largest point distance between `target` and the least-squares affine
/// image of `source` (both `k × d`, rows matched).
pub fn affine_fit_residual(source: &DMatrix<f64>, target: &DMatrix<f64>) -> Result<f64> {
    let (k, d) = source.shape();
    let lifted = DMatrix::from_fn(k, d + 1, |i, j| if j < d { source[(i, j)] } else { 1.0 });
    let mut fitted = DMatrix::zeros(k, target.ncols());
    for c in 0..target.ncols() {
        let coeffs = least_squares(&lifted, &target.column(c).into_owned())?;
        fitted.set_column(c, &(&lifted * coeffs));
    }
    Ok(max_row_norm(&(fitted - target)))
}

/// Largest point distance between `target` and the best orthogonal-plus-
/// translation image of `source` (reflections allowed).
pub fn procrustes_residual(source: &DMatrix<f64>, target: &DMatrix<f64>) -> f64 {
    let center = |m: &DMatrix<f64>| {
        let mean = m.row_mean();
        let mut c = m.clone();
        for mut row in c.row_iter_mut() {
            row -= &mean;
        }
        c
    };
    let (x, y) = (center(source), center(target));
    let svd = (x.transpose() * &y).svd(true, true);
    let rotation = svd.u.expect("requested") * svd.v_t.expect("requested");
    max_row_norm(&(x * rotation - y))
}

/// Removes the residual linear map from an affine registration using
/// squared lengths `(u, w, |ρ(u) − ρ(w)|²)`.
///
/// Fits the symmetric `G` with `(σ(u) − σ(w))ᵀ G (σ(u) − σ(w)) = length` in
/// least squares (each equation scaled by its length), factors `G = L Lᵀ`
/// and maps `σ(i) ↦ Lᵀ σ(i)`.
pub fn remove_affine(reg: &Registration, lengths: &[(usize, usize, f64)], rel_tol: f64) -> Result<Registration> {
    if reg.gauge != Gauge::Affine {
        return Err(Error::InvalidInput("registration is already Euclidean".into()));
    }
    let sigma = &reg.config;
    let (v, d) = (sigma.vertex_count(), sigma.dim());
    for &(u, w, l) in lengths {
        if u >= v || w >= v || u == w {
            return Err(Error::InvalidInput(format!("length constraint ({u}, {w}) is not a vertex pair")));
        }
        if !(l.is_finite() && l > 0.0) {
            return Err(Error::InvalidInput(format!("squared length {l} for ({u}, {w}) is not positive")));
        }
    }
    let pairs: Vec<(usize, usize)> = lengths.iter().map(|&(u, w, _)| (u, w)).collect();
    let conic = conic_at_infinity(&pairs, sigma, rel_tol)?;
    if conic.on_conic {
        return Err(Error::NonUniqueGram);
    }

    let unknowns = d * (d + 1) / 2;
    let mut system = DMatrix::zeros(lengths.len(), unknowns);
    for (r, &(u, w, l)) in lengths.iter().enumerate() {
        let delta = sigma.point(u) - sigma.point(w);
        for (c, m) in quadratic_monomials(delta.as_slice()).into_iter().enumerate() {
            system[(r, c)] = m / l;
        }
    }
    let params = least_squares(&system, &DVector::from_element(lengths.len(), 1.0))?;
    let mut gram = DMatrix::zeros(d, d);
    let mut c = 0;
    for a in 0..d {
        for b in a..d {
            gram[(a, b)] = params[c];
            gram[(b, a)] = params[c];
            c += 1;
        }
    }
    let (lower, min_eigenvalue) = match psd_cholesky(&gram, DEFAULT_PSD_TOL)? {
        PsdFactor::Factor { lower, min_eigenvalue, .. } => (lower, min_eigenvalue),
        PsdFactor::NotPsd { min_eigenvalue } => return Err(Error::InconsistentLengths { min_eigenvalue }),
    };
    let config = Configuration::new(sigma.points() * &lower)?;
    let max_relative_length_error = lengths
        .iter()
        .map(|&(u, w, l)| ((config.point(u) - config.point(w)).norm_squared() - l).abs() / l)
        .fold(0.0, f64::max);

    let mut diagnostics = reg.diagnostics.clone();
    diagnostics.scan_residuals.clear();
    diagnostics.max_scan_residual = 0.0;
    diagnostics.relative_scan_residual = 0.0;
    diagnostics.length_constraints = lengths.len();
    diagnostics.gram = Some(gram.row_iter().map(|r| r.iter().copied().collect()).collect());
    diagnostics.gram_min_eigenvalue = Some(min_eigenvalue);
    diagnostics.conic_margin = Some(conic.margin);
    diagnostics.max_relative_length_error = Some(max_relative_length_error);
    Ok(Registration {
        config,
        gauge: Gauge::Euclidean,
        diagnostics,
    })
}

/// Affine registration followed by removal of the affine ambiguity using
/// all chart distances.
pub fn euclidean_register(scans: &ScanSet, rel_tol: f64) -> Result<Registration> {
    if scans.trust != Trust::Euclidean {
        return Err(Error::InvalidInput("scan distances are not trusted; use affine registration".into()));
    }
    let affine = affine_register(scans, rel_tol)?;
    let mut reg = remove_affine(&affine, &scans.chart_lengths(), rel_tol)?;
    let residuals = scan_residuals(scans, &reg.config, Gauge::Euclidean)?;
    reg.diagnostics.max_scan_residual = residuals.iter().copied().fold(0.0, f64::max);
    reg.diagnostics.scan_residuals = residuals;
    reg.diagnostics.relative_scan_residual = relative(reg.diagnostics.max_scan_residual, &reg.config);
    Ok(reg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::hypergraph::Graph;
    use crate::seeded_rng;
    use rand::Rng;

    fn random_affine<R: Rng>(d: usize, rng: &mut R) -> (DMatrix<f64>, DVector<f64>) {
        loop {
            let a = DMatrix::from_fn(d, d, |_, _| rng.random_range(-2.0..2.0));
            let s = a.singular_values();
            if s.min() > 0.2 * s.max() {
                return (a, DVector::from_fn(d, |_, _| rng.random_range(-5.0..5.0)));
            }
        }
    }

    fn random_orthogonal<R: Rng>(d: usize, rng: &mut R) -> DMatrix<f64> {
        DMatrix::from_fn(d, d, |_, _| rng.random_range(-1.0..1.0)).qr().q()
    }

    fn scramble<R: Rng>(scans: &ScanSet, euclidean: bool, rng: &mut R) -> ScanSet {
        let d = scans.dim();
        let moved = scans
            .scans()
            .iter()
            .map(|s| {
                let (a, t) = random_affine(d, rng);
                let a = if euclidean { random_orthogonal(d, rng) } else { a };
                let c = Configuration::new(s.coords().clone()).unwrap().transformed(&a, &t);
                Scan::new(s.hyperedge().to_vec(), c.points().clone()).unwrap()
            })
            .collect();
        ScanSet::new(scans.vertex_count(), d, moved, scans.trust()).unwrap()
    }

    // pairwise distances agree: an oracle for congruence that needs no alignment
    fn distance_mismatch(a: &Configuration, b: &Configuration) -> f64 {
        let v = a.vertex_count();
        let mut worst: f64 = 0.0;
        for i in 0..v {
            for j in i + 1..v {
                let da = (a.point(i) - a.point(j)).norm();
                let db = (b.point(i) - b.point(j)).norm();
                worst = worst.max((da - db).abs());
            }
        }
        worst
    }

    #[test]
    fn single_scan_is_an_affine_image() {
        let mut rng = seeded_rng(61);
        let truth = Configuration::random(6, 2, &mut rng);
        let theta = Hypergraph::new(6, [vec![0, 1, 2, 3, 4, 5]]).unwrap();
        let scans = ScanSet::from_framework(&theta, &truth, Trust::Affine).unwrap();
        let reg = affine_register(&scans, 1e-9).unwrap();
        assert_eq!(reg.gauge, Gauge::Affine);
        assert_eq!(reg.diagnostics.corank, 3);
        assert!(affine_fit_residual(truth.points(), reg.config.points()).unwrap() < 1e-10);
        assert_eq!(reg.config.point(0), DVector::zeros(2));
    }

    #[test]
    fn neighborhood_scans_round_trip() {
        let mut rng = seeded_rng(62);
        let g = families::wheel(7).unwrap();
        let truth = Configuration::random(8, 2, &mut rng);
        let scans = ScanSet::from_framework(&g.neighborhood_hypergraph(), &truth, Trust::Affine).unwrap();
        let scans = scramble(&scans, false, &mut rng);
        let reg = affine_register(&scans, 1e-9).unwrap();
        assert!(affine_fit_residual(truth.points(), reg.config.points()).unwrap() < 1e-9 * truth.diameter());
        assert!(reg.diagnostics.relative_scan_residual < 1e-9);
    }

    #[test]
    fn gauge_fix_is_deterministic_under_scrambling() {
        let mut rng = seeded_rng(63);
        let g = families::hex_torus(3, 3).unwrap();
        let truth = Configuration::random(18, 2, &mut rng);
        let base = ScanSet::from_framework(&g.neighborhood_hypergraph(), &truth, Trust::Affine).unwrap();
        let a = affine_register(&scramble(&base, false, &mut rng), 1e-9).unwrap();
        let b = affine_register(&scramble(&base, false, &mut rng), 1e-9).unwrap();
        assert!(affine_fit_residual(a.config.points(), b.config.points()).unwrap() < 1e-8 * a.config.diameter());
        let again = affine_register(&base, 1e-9).unwrap();
        assert_eq!(again, affine_register(&base, 1e-9).unwrap());
    }

    #[test]
    fn pentagon_is_not_affinely_rigid() {
        let mut rng = seeded_rng(64);
        let truth = Configuration::random(5, 2, &mut rng);
        let scans = ScanSet::from_framework(&families::pentagon(), &truth, Trust::Affine).unwrap();
        assert_eq!(
            affine_register(&scans, 1e-9),
            Err(Error::NotAffinelyRigid { corank: 5, expected: 3 })
        );
    }

    #[test]
    fn uncovered_vertex_rejected() {
        let scans = ScanSet::new(4, 1, vec![Scan::new(vec![0, 1, 2], DMatrix::from_column_slice(3, 1, &[0.0, 1.0, 3.0])).unwrap()], Trust::Affine).unwrap();
        assert!(matches!(affine_register(&scans, 1e-9), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn remove_affine_identity_when_already_euclidean() {
        let mut rng = seeded_rng(65);
        let truth = Configuration::random(4, 2, &mut rng);
        let origin = truth.point(0);
        let shifted = truth.transformed(&DMatrix::identity(2, 2), &(-origin));
        let lengths: Vec<_> = Graph::complete(4)
            .unwrap()
            .edges()
            .iter()
            .map(|&(u, w)| (u, w, (truth.point(u) - truth.point(w)).norm_squared()))
            .collect();
        let reg = Registration {
            config: shifted.clone(),
            gauge: Gauge::Affine,
            diagnostics: affine_register(&ScanSet::from_framework(&Hypergraph::new(4, [vec![0, 1, 2, 3]]).unwrap(), &truth, Trust::Affine).unwrap(), 1e-9)
                .unwrap()
                .diagnostics,
        };
        let out = remove_affine(&reg, &lengths, 1e-9).unwrap();
        let g = out.diagnostics.gram.unwrap();
        for a in 0..2 {
            for b in 0..2 {
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!((g[a][b] - expect).abs() < 1e-8);
            }
        }
        assert!((out.config.points() - shifted.points()).amax() < 1e-8);
    }

    #[test]
    fn remove_affine_undoes_a_linear_map() {
        let mut rng = seeded_rng(66);
        let rho = Configuration::random(4, 2, &mut rng);
        let (a, t) = random_affine(2, &mut rng);
        let sigma = rho.transformed(&a, &t);
        let lengths: Vec<_> = Graph::complete(4)
            .unwrap()
            .edges()
            .iter()
            .map(|&(u, w)| (u, w, (rho.point(u) - rho.point(w)).norm_squared()))
            .collect();
        let scans = ScanSet::from_framework(&Hypergraph::new(4, [vec![0, 1, 2, 3]]).unwrap(), &sigma, Trust::Affine).unwrap();
        let mut reg = affine_register(&scans, 1e-9).unwrap();
        reg.config = sigma;
        let out = remove_affine(&reg, &lengths, 1e-9).unwrap();
        assert_eq!(out.gauge, Gauge::Euclidean);
        assert!(out.diagnostics.max_relative_length_error.unwrap() < 1e-9);
        assert!(distance_mismatch(&out.config, &rho) < 1e-7 * rho.diameter());
    }

    #[test]
    fn axis_aligned_lengths_are_ambiguous() {
        let square = Configuration::from_rows(2, &[vec![0.0, 0.0], vec![1.0, 0.0], vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap();
        let scans = ScanSet::from_framework(&Hypergraph::new(4, [vec![0, 1, 2, 3]]).unwrap(), &square, Trust::Affine).unwrap();
        let mut reg = affine_register(&scans, 1e-9).unwrap();
        reg.config = square;
        let lengths = [(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0), (3, 0, 1.0)];
        assert_eq!(remove_affine(&reg, &lengths, 1e-9), Err(Error::NonUniqueGram));
    }

    #[test]
    fn contradictory_lengths_are_inconsistent() {
        // a unit triangle pinned to lengths no Gram matrix can match
        let tri = Configuration::from_rows(2, &[vec![0.0, 0.0], vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let scans = ScanSet::from_framework(&Hypergraph::new(3, [vec![0, 1, 2]]).unwrap(), &tri, Trust::Affine).unwrap();
        let mut reg = affine_register(&scans, 1e-9).unwrap();
        reg.config = tri;
        let lengths = [(0, 1, 1.0), (0, 2, 1.0), (1, 2, 9.0)];
        assert!(matches!(remove_affine(&reg, &lengths, 1e-9), Err(Error::InconsistentLengths { .. })));
    }

    #[test]
    fn euclidean_hex_torus() {
        let mut rng = seeded_rng(67);
        let g = families::hex_torus(4, 4).unwrap();
        let truth = Configuration::random(32, 2, &mut rng);
        let scans = ScanSet::from_framework(&g.neighborhood_hypergraph(), &truth, Trust::Euclidean).unwrap();
        let scans = scramble(&scans, true, &mut rng);
        let reg = euclidean_register(&scans, 1e-9).unwrap();
        assert!(distance_mismatch(&reg.config, &truth) < 1e-6 * truth.diameter());
        assert!(reg.diagnostics.relative_scan_residual < 1e-8);
        assert_eq!(reg.diagnostics.scan_residuals.len(), 32);
    }

    #[test]
    fn euclidean_needs_trusted_scans() {
        let mut rng = seeded_rng(68);
        let truth = Configuration::random(4, 2, &mut rng);
        let scans = ScanSet::from_framework(&Hypergraph::new(4, [vec![0, 1, 2, 3]]).unwrap(), &truth, Trust::Affine).unwrap();
        assert!(euclidean_register(&scans, 1e-9).is_err());
    }

    #[test]
    fn scan_validation() {
        assert!(Scan::new(vec![], DMatrix::zeros(0, 2)).is_err());
        assert!(Scan::new(vec![0, 0], DMatrix::zeros(2, 2)).is_err());
        assert!(Scan::new(vec![0, 1], DMatrix::zeros(3, 2)).is_err());
        let s = Scan::new(vec![0, 5], DMatrix::zeros(2, 2)).unwrap();
        assert!(ScanSet::new(3, 2, vec![s.clone()], Trust::Affine).is_err());
        assert!(ScanSet::new(6, 3, vec![s], Trust::Affine).is_err());
    }
}

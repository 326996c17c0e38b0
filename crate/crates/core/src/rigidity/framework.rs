use nalgebra::{DMatrix, DVector};
use rand::Rng;

use crate::error::{Error, Result};
use crate::hypergraph::{Graph, Hypergraph};
use crate::numkernel::{check_finite, numerical_rank};

/// Positions of `v` vertices in `R^d`, stored as a `v × d` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    points: DMatrix<f64>,
}

impl Configuration {
    pub fn new(points: DMatrix<f64>) -> Result<Self> {
        if points.ncols() == 0 {
            return Err(Error::InvalidInput("configuration dimension must be positive".into()));
        }
        check_finite(&points, "configuration")?;
        Ok(Configuration { points })
    }

    pub fn from_rows(dim: usize, rows: &[Vec<f64>]) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::InvalidInput(format!(
                "vertex {i} has {} coordinates, expected {dim}",
                r.len()
            )));
        }
        Self::new(DMatrix::from_fn(rows.len(), dim, |i, j| rows[i][j]))
    }

    /// Independent uniform coordinates in `[-1, 1]`; generic with probability one.
    pub fn random<R: Rng + ?Sized>(v: usize, d: usize, rng: &mut R) -> Self {
        Configuration {
            points: DMatrix::from_fn(v, d, |_, _| rng.random_range(-1.0..1.0)),
        }
    }

    /// Independent uniform integer coordinates in `[-bound, bound]`.
    pub fn random_integer<R: Rng + ?Sized>(v: usize, d: usize, bound: i64, rng: &mut R) -> Self {
        Configuration {
            points: DMatrix::from_fn(v, d, |_, _| rng.random_range(-bound..=bound) as f64),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.points.nrows()
    }

    pub fn dim(&self) -> usize {
        self.points.ncols()
    }

    pub fn points(&self) -> &DMatrix<f64> {
        &self.points
    }

    pub fn point(&self, v: usize) -> DVector<f64> {
        self.points.row(v).transpose()
    }

    /// Coordinate vector (length `v`) of one axis.
    pub fn axis(&self, a: usize) -> DVector<f64> {
        self.points.column(a).into_owned()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.points.row_iter().map(|r| r.iter().copied().collect()).collect()
    }

    /// Rows `members` of the configuration as a `k × d` matrix.
    pub fn select(&self, members: &[usize]) -> DMatrix<f64> {
        self.points.select_rows(members)
    }

    /// Dimension of the affine span, measured on the centered coordinates.
    pub fn affine_span_dim(&self, rel_tol: f64) -> Result<usize> {
        affine_span_dim_of(&self.points, rel_tol)
    }

    /// Largest pairwise distance.
    pub fn diameter(&self) -> f64 {
        let v = self.vertex_count();
        let mut best: f64 = 0.0;
        for i in 0..v {
            for j in i + 1..v {
                best = best.max((self.points.row(i) - self.points.row(j)).norm());
            }
        }
        best
    }

    /// `p ↦ A p + t` applied to every point.
    pub fn transformed(&self, linear: &DMatrix<f64>, translation: &DVector<f64>) -> Configuration {
        let mut points = &self.points * linear.transpose();
        for mut row in points.row_iter_mut() {
            row += translation.transpose();
        }
        Configuration { points }
    }

    /// Embeds into `R^{dim}` (`dim ≥ d`) by zero padding.
    pub fn padded(&self, dim: usize) -> Configuration {
        let mut points = DMatrix::zeros(self.vertex_count(), dim.max(self.dim()));
        points.view_mut((0, 0), self.points.shape()).copy_from(&self.points);
        Configuration { points }
    }
}

pub(crate) fn affine_span_dim_of(points: &DMatrix<f64>, rel_tol: f64) -> Result<usize> {
    if points.nrows() == 0 {
        return Ok(0);
    }
    let mean = points.row_mean();
    let mut centered = points.clone();
    for mut row in centered.row_iter_mut() {
        row -= &mean;
    }
    // rel_tol is relative to the largest singular value, so it only sees shape
    if centered.amax() == 0.0 {
        return Ok(0);
    }
    numerical_rank(&centered, rel_tol)
}

/// The combinatorial part of a framework.
#[derive(Debug, Clone, PartialEq)]
pub enum Structure {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

impl Structure {
    pub fn vertex_count(&self) -> usize {
        match self {
            Structure::Graph(g) => g.vertex_count(),
            Structure::Hypergraph(h) => h.vertex_count(),
        }
    }

    /// Hypergraph view; a graph becomes its 2-hypergraph.
    pub fn to_hypergraph(&self) -> Hypergraph {
        match self {
            Structure::Graph(g) => g.as_hypergraph(),
            Structure::Hypergraph(h) => h.clone(),
        }
    }
}

/// A graph or hypergraph together with a configuration of its vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Framework {
    structure: Structure,
    config: Configuration,
}

impl Framework {
    pub fn new(structure: Structure, config: Configuration) -> Result<Self> {
        if structure.vertex_count() != config.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "structure has {} vertices but configuration has {}",
                structure.vertex_count(),
                config.vertex_count()
            )));
        }
        Ok(Framework { structure, config })
    }

    pub fn of_graph(graph: Graph, config: Configuration) -> Result<Self> {
        Self::new(Structure::Graph(graph), config)
    }

    pub fn of_hypergraph(theta: Hypergraph, config: Configuration) -> Result<Self> {
        Self::new(Structure::Hypergraph(theta), config)
    }

    pub fn structure(&self) -> &Structure {
        &self.structure
    }

    pub fn config(&self) -> &Configuration {
        &self.config
    }

    pub fn dim(&self) -> usize {
        self.config.dim()
    }

    pub fn vertex_count(&self) -> usize {
        self.config.vertex_count()
    }

    pub fn graph(&self) -> Option<&Graph> {
        match &self.structure {
            Structure::Graph(g) => Some(g),
            Structure::Hypergraph(_) => None,
        }
    }
}

/// Requires `v ≥ d + 1` and a configuration whose affine span is all of `R^d`.
pub(crate) fn check_proper(config: &Configuration, rel_tol: f64) -> Result<()> {
    let (v, d) = (config.vertex_count(), config.dim());
    if v < d + 1 {
        return Err(Error::UnsupportedInstance(format!("{v} vertices cannot span R^{d}")));
    }
    let span = config.affine_span_dim(rel_tol)?;
    if span < d {
        return Err(Error::ImproperFramework { span, dim: d });
    }
    Ok(())
}

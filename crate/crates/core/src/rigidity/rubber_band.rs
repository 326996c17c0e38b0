//! Rubber-band (Tutte-style) embeddings with `d + 1` pinned vertices, and the
//! positive non-symmetric stresses they support.

use std::collections::VecDeque;

use nalgebra::{DMatrix, DVector};
use rand::Rng;

use super::framework::{affine_span_dim_of, Configuration};
use super::stress::{edge_vectors, place_row, random_row_weights, StressMatrix};
use crate::error::{Error, Result};
use crate::hypergraph::{is_k_vertex_connected, Graph};
use crate::numkernel::least_squares;
use crate::seeded_rng;

const JITTER_SCALE: f64 = 1e-6;
const MAX_JITTER_ATTEMPTS: usize = 10;
const SPAN_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Exceptional {
    /// The `d + 1` vertices of highest degree, ties broken by index.
    #[default]
    Auto,
    Given(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EdgeWeights {
    /// Independent uniform weights in `[0.5, 1.5]`.
    #[default]
    Random,
    Uniform,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RubberBandOptions {
    pub exceptional: Exceptional,
    pub weights: EdgeWeights,
    /// Apply the final generic perturbation.
    pub jitter: bool,
    pub seed: u64,
}

impl Default for RubberBandOptions {
    fn default() -> Self {
        RubberBandOptions {
            exceptional: Exceptional::Auto,
            weights: EdgeWeights::Random,
            jitter: true,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RubberBandEmbedding {
    /// Final configuration (after jitter, if requested).
    pub config: Configuration,
    /// Exact rubber-band solution before jitter.
    pub unperturbed: Configuration,
    pub exceptional: Vec<usize>,
    /// One weight per edge, aligned with `graph.edges()`.
    pub edge_weights: Vec<f64>,
    /// Whether every one-ring spans `R^d` and every non-exceptional vertex
    /// was certified strictly inside the hull of its neighbors.
    pub convex_containment: bool,
    pub jitter_attempts: usize,
    pub warnings: Vec<String>,
}

impl RubberBandEmbedding {
    pub fn is_exceptional(&self, v: usize) -> bool {
        self.exceptional.contains(&v)
    }

    /// Rubber-band weights on the edges at `i`, in neighbor order.
    pub fn weights_at(&self, graph: &Graph, i: usize) -> DVector<f64> {
        DVector::from_iterator(
            graph.degree(i),
            graph.neighbors(i).iter().map(|&j| {
                let key = (i.min(j), i.max(j));
                let e = graph.edges().binary_search(&key).expect("neighbor edge exists");
                self.edge_weights[e]
            }),
        )
    }
}

/// Vertices of a regular simplex in `R^d`, centered at the origin with unit edges.
fn regular_simplex(d: usize) -> DMatrix<f64> {
    let c = (1.0 - ((d + 1) as f64).sqrt()) / d as f64;
    let mut s = DMatrix::from_fn(d + 1, d, |i, j| if i == d { c } else if i == j { 1.0 } else { 0.0 });
    let mean = s.row_mean();
    for mut row in s.row_iter_mut() {
        row -= &mean;
    }
    s / std::f64::consts::SQRT_2
}

fn choose_exceptional(graph: &Graph, d: usize, choice: &Exceptional) -> Result<Vec<usize>> {
    let v = graph.vertex_count();
    match choice {
        Exceptional::Auto => {
            let mut order: Vec<usize> = (0..v).collect();
            order.sort_by_key(|&u| (std::cmp::Reverse(graph.degree(u)), u));
            order.truncate(d + 1);
            Ok(order)
        }
        Exceptional::Given(list) => {
            let mut sorted = list.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != d + 1 || list.len() != d + 1 || sorted.iter().any(|&u| u >= v) {
                return Err(Error::InvalidInput(format!(
                    "need {} distinct exceptional vertices below {v}, got {list:?}",
                    d + 1
                )));
            }
            Ok(list.clone())
        }
    }
}

/// Positive weights `w` on the edges at `i` with `Σ w_j (p(j) − p(i)) = 0`,
/// found as the smallest correction of `hint`; `None` if the correction loses
/// positivity.
pub fn positive_row_weights(graph: &Graph, config: &Configuration, i: usize, hint: &DVector<f64>) -> Option<DVector<f64>> {
    let e = edge_vectors(graph, config, i);
    if e.ncols() == 0 {
        return None;
    }
    let defect = &e * hint;
    let correction = least_squares(&e, &(-defect)).ok()?;
    let w = hint + correction;
    let scale = e.amax() * w.amax();
    let balanced = (&e * &w).amax() <= 1e-10 * scale.max(f64::MIN_POSITIVE);
    (balanced && w.iter().all(|&x| x > 0.0)).then_some(w)
}

/// Rubber-band embedding of `graph` in `R^d`.
///
/// The `d + 1` exceptional vertices are pinned to a randomly perturbed
/// regular simplex, every edge receives a positive weight, and each other
/// vertex is placed at the weighted average of its neighbors (`d` linear
/// solves with a shared matrix). A small generic jitter follows; it is redrawn
/// (at most ten times) until convex containment is certified.
pub fn rubber_band_embedding(graph: &Graph, d: usize, options: &RubberBandOptions) -> Result<RubberBandEmbedding> {
    let v = graph.vertex_count();
    if d == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if v < d + 1 {
        return Err(Error::UnsupportedInstance(format!("{v} vertices cannot span R^{d}")));
    }
    let mut rng = seeded_rng(options.seed);
    let mut warnings = Vec::new();
    if !is_k_vertex_connected(graph, d + 1) {
        let msg = format!("graph is not {}-vertex-connected; convex containment may fail", d + 1);
        log::warn!("{msg}");
        warnings.push(msg);
    }
    let exceptional = choose_exceptional(graph, d, &options.exceptional)?;
    let mut is_exc = vec![false; v];
    for &u in &exceptional {
        is_exc[u] = true;
    }

    // every free vertex must reach the pinned set without crossing it
    let mut reached = is_exc.clone();
    let mut queue: VecDeque<usize> = exceptional.iter().copied().collect();
    while let Some(u) = queue.pop_front() {
        for &w in graph.neighbors(u) {
            if !reached[w] {
                reached[w] = true;
                queue.push_back(w);
            }
        }
    }
    if let Some(lost) = (0..v).find(|&u| !reached[u]) {
        return Err(Error::DegenerateInstance(format!(
            "vertex {lost} is not connected to any exceptional vertex; the rubber-band system is singular"
        )));
    }

    let edge_weights: Vec<f64> = match options.weights {
        EdgeWeights::Random => (0..graph.edge_count()).map(|_| rng.random_range(0.5..1.5)).collect(),
        EdgeWeights::Uniform => vec![1.0; graph.edge_count()],
    };
    let mut weight_of = vec![Vec::new(); v];
    for (&(a, b), &w) in graph.edges().iter().zip(&edge_weights) {
        weight_of[a].push((b, w));
        weight_of[b].push((a, w));
    }

    let simplex = regular_simplex(d);
    let mut pinned = DMatrix::zeros(d + 1, d);
    for i in 0..=d {
        for a in 0..d {
            pinned[(i, a)] = simplex[(i, a)] + rng.random_range(-0.05..0.05);
        }
    }

    let free: Vec<usize> = (0..v).filter(|&u| !is_exc[u]).collect();
    let mut slot = vec![usize::MAX; v];
    for (k, &u) in free.iter().enumerate() {
        slot[u] = k;
    }
    let mut points = DMatrix::zeros(v, d);
    for (k, &u) in exceptional.iter().enumerate() {
        points.row_mut(u).copy_from(&pinned.row(k));
    }
    if !free.is_empty() {
        let n = free.len();
        let mut lap = DMatrix::zeros(n, n);
        let mut rhs = DMatrix::zeros(n, d);
        for (k, &u) in free.iter().enumerate() {
            for &(w, weight) in &weight_of[u] {
                lap[(k, k)] += weight;
                if is_exc[w] {
                    let pin = pinned.row(exceptional.iter().position(|&x| x == w).unwrap()).into_owned();
                    for a in 0..d {
                        rhs[(k, a)] += weight * pin[a];
                    }
                } else {
                    lap[(k, slot[w])] -= weight;
                }
            }
        }
        let solved = lap
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::DegenerateInstance("rubber-band system is singular".into()))?;
        for (k, &u) in free.iter().enumerate() {
            points.row_mut(u).copy_from(&solved.row(k));
        }
    }
    let unperturbed = Configuration::new(points.clone())?;

    let mut embedding = RubberBandEmbedding {
        config: unperturbed.clone(),
        unperturbed,
        exceptional,
        edge_weights,
        convex_containment: false,
        jitter_attempts: 0,
        warnings,
    };
    if !options.jitter {
        embedding.convex_containment = convex_containment(graph, &embedding.config, &embedding)?;
        return Ok(embedding);
    }
    let amplitude = JITTER_SCALE * embedding.unperturbed.diameter();
    for attempt in 1..=MAX_JITTER_ATTEMPTS {
        let jittered = points.map(|x| x + amplitude * rng.random_range(-1.0..1.0));
        let candidate = Configuration::new(jittered)?;
        embedding.jitter_attempts = attempt;
        let ok = convex_containment(graph, &candidate, &embedding)?;
        embedding.config = candidate;
        if ok {
            embedding.convex_containment = true;
            return Ok(embedding);
        }
    }
    let msg = format!("convex containment not certified after {MAX_JITTER_ATTEMPTS} jitter attempts");
    log::warn!("{msg}");
    embedding.warnings.push(msg);
    Ok(embedding)
}

fn convex_containment(graph: &Graph, config: &Configuration, emb: &RubberBandEmbedding) -> Result<bool> {
    let d = config.dim();
    for i in 0..graph.vertex_count() {
        let mut ring = graph.neighbors(i).to_vec();
        ring.push(i);
        if affine_span_dim_of(&config.select(&ring), SPAN_TOL)? < d {
            return Ok(false);
        }
        if !emb.is_exceptional(i) && positive_row_weights(graph, config, i, &emb.weights_at(graph, i)).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Non-symmetric stress of a rubber-band framework whose non-exceptional rows
/// are strictly positive off the diagonal; exceptional rows are random
/// null-space elements. Every nonzero row is scaled to unit norm on its edges.
pub fn positive_stress(graph: &Graph, embedding: &RubberBandEmbedding, rel_tol: f64) -> Result<StressMatrix> {
    let config = &embedding.config;
    let v = graph.vertex_count();
    let mut rng = seeded_rng(0x5eed ^ v as u64);
    let mut matrix = DMatrix::zeros(v, v);
    let mut zero_rows = Vec::new();
    for i in 0..v {
        let weights = if embedding.is_exceptional(i) {
            random_row_weights(graph, config, i, rel_tol, &mut rng)?
        } else {
            match positive_row_weights(graph, config, i, &embedding.weights_at(graph, i)) {
                Some(w) => Some(w.normalize()),
                None => {
                    return Err(Error::DegenerateInstance(format!(
                        "vertex {i} is not strictly inside the hull of its neighbors"
                    )))
                }
            }
        };
        match weights {
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

/// The stress with exceptional rows and columns deleted.
pub fn reduced_stress(stress: &StressMatrix, exceptional: &[usize]) -> DMatrix<f64> {
    let keep: Vec<usize> = (0..stress.matrix.nrows()).filter(|u| !exceptional.contains(u)).collect();
    stress.matrix.select_rows(&keep).select_columns(&keep)
}

//! Edge directions on a conic at infinity.

use nalgebra::DMatrix;
use serde::Serialize;

use super::framework::Configuration;
use crate::error::Result;
use crate::numkernel::numerical_kernel;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConicTest {
    /// Some nonzero symmetric form vanishes on every edge direction.
    pub on_conic: bool,
    /// `σ_min / σ_max` of the monomial matrix (0 when it has fewer rows
    /// than unknowns); small values mean the answer is fragile.
    pub margin: f64,
    pub rows: usize,
    pub unknowns: usize,
}

/// Quadratic monomials of `δ` in the symmetric parameterization of `Q`:
/// `δ_a²` for diagonal unknowns, `2 δ_a δ_b` for `a < b`.
pub fn quadratic_monomials(delta: &[f64]) -> Vec<f64> {
    let d = delta.len();
    let mut out = Vec::with_capacity(d * (d + 1) / 2);
    for a in 0..d {
        for b in a..d {
            let factor = if a == b { 1.0 } else { 2.0 };
            out.push(factor * delta[a] * delta[b]);
        }
    }
    out
}

/// Tests whether the directions `p(u) − p(w)` of the given pairs lie on a
/// conic at infinity. Directions are normalized, so only their shape matters;
/// zero-length pairs impose nothing.
pub fn conic_at_infinity(pairs: &[(usize, usize)], config: &Configuration, rel_tol: f64) -> Result<ConicTest> {
    let d = config.dim();
    let unknowns = d * (d + 1) / 2;
    let mut rows = Vec::with_capacity(pairs.len());
    for &(u, w) in pairs {
        let delta = config.point(u) - config.point(w);
        let n = delta.norm();
        if n > 0.0 {
            rows.push(quadratic_monomials((delta / n).as_slice()));
        }
    }
    let m = DMatrix::from_fn(rows.len(), unknowns, |r, c| rows[r][c]);
    let kernel = numerical_kernel(&m, rel_tol)?;
    let margin = if rows.len() < unknowns {
        0.0
    } else {
        let s = &kernel.singular_values;
        if s[0] == 0.0 {
            0.0
        } else {
            s[unknowns - 1] / s[0]
        }
    };
    Ok(ConicTest {
        on_conic: kernel.dimension() > 0,
        margin,
        rows: rows.len(),
        unknowns,
    })
}

/// True iff the edge directions of `(config, graph)` lie on a conic at infinity.
pub fn conic_at_infinity_test(graph: &crate::hypergraph::Graph, config: &Configuration, rel_tol: f64) -> Result<bool> {
    Ok(conic_at_infinity(graph.edges(), config, rel_tol)?.on_conic)
}

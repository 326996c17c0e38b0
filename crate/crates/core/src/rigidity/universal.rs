//! One-sided certificates of universal rigidity.

use nalgebra::DMatrix;
use serde::Serialize;

use super::affinity::{affine_rigidity_test, some_hyperedge_spans};
use super::conic::{conic_at_infinity, ConicTest};
use super::stress::{nonsymmetric_stress, StressMatrix};
use super::{Framework, Structure, Verdict};
use crate::error::Result;
use crate::hypergraph::Graph;
use crate::seeded_rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum UniversalRoute {
    /// Affine rigidity plus edge directions of the body graph off any conic at infinity.
    AffineRigidity,
    /// `ΩᵀΩ` from a corank-`(d+1)` non-symmetric stress, certifying the squared graph.
    PsdStress,
}

#[derive(Debug, Clone)]
pub struct UniversalCertificate {
    pub route: UniversalRoute,
    /// Corank of the witnessing matrix (`d + 1`).
    pub corank: usize,
    /// Set when some hyperedge spans `R^d`, which rules out a conic by itself.
    pub conic_shortcut: bool,
    pub conic: Option<ConicTest>,
    /// Structure whose generic frameworks are certified: the hypergraph for
    /// the affine route, `Γ²` for the PSD route.
    pub certified: Structure,
    /// `ΩᵀΩ` on the PSD route.
    pub psd_stress: Option<DMatrix<f64>>,
}

#[derive(Debug, Clone)]
pub enum UniversalOutcome {
    Certified(UniversalCertificate),
    Inconclusive { reason: String },
}

impl UniversalOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, UniversalOutcome::Certified(_))
    }
}

fn inconclusive(reason: impl Into<String>) -> UniversalOutcome {
    UniversalOutcome::Inconclusive { reason: reason.into() }
}

/// Attempts to certify universal rigidity. Failure is reported as
/// inconclusive, never as "not universally rigid".
pub fn universal_rigidity_certificate(
    framework: &Framework,
    route: UniversalRoute,
    rel_tol: f64,
    seed: u64,
) -> Result<UniversalOutcome> {
    match route {
        UniversalRoute::AffineRigidity => affine_route(framework, rel_tol),
        UniversalRoute::PsdStress => match framework.graph() {
            Some(g) => psd_route(g, framework, rel_tol, seed),
            None => Ok(inconclusive("the PSD stress route needs a graph framework")),
        },
    }
}

fn affine_route(framework: &Framework, rel_tol: f64) -> Result<UniversalOutcome> {
    let theta = framework.structure().to_hypergraph();
    let config = framework.config();
    let verdict = match affine_rigidity_test(&theta, config, rel_tol) {
        Ok(v) => v,
        Err(e) => return Ok(inconclusive(format!("affine rigidity test failed: {e}"))),
    };
    if verdict.verdict != Verdict::Rigid {
        return Ok(inconclusive(format!(
            "not affinely rigid (corank {} > {})",
            verdict.corank, verdict.expected_corank
        )));
    }
    let shortcut = some_hyperedge_spans(&theta, config, rel_tol)?;
    let conic = if shortcut {
        None
    } else {
        let test = conic_at_infinity(theta.body_graph().edges(), config, rel_tol)?;
        if test.on_conic {
            return Ok(inconclusive("body graph edge directions lie on a conic at infinity"));
        }
        Some(test)
    };
    Ok(UniversalOutcome::Certified(UniversalCertificate {
        route: UniversalRoute::AffineRigidity,
        corank: verdict.corank,
        conic_shortcut: shortcut,
        conic,
        certified: framework.structure().clone(),
        psd_stress: None,
    }))
}

fn psd_route(graph: &Graph, framework: &Framework, rel_tol: f64, seed: u64) -> Result<UniversalOutcome> {
    let config = framework.config();
    let (v, d) = (config.vertex_count(), config.dim());
    if v < d + 2 {
        return Ok(inconclusive(format!("{v} vertices are too few for a maximal-rank stress in R^{d}")));
    }
    let mut rng = seeded_rng(seed);
    let omega = nonsymmetric_stress(graph, config, rel_tol, &mut rng)?;
    let corank = omega.corank(rel_tol)?;
    if corank != d + 1 {
        return Ok(inconclusive(format!("random non-symmetric stress has corank {corank} != {}", d + 1)));
    }
    let psd = omega.matrix.transpose() * &omega.matrix;
    let squared = graph.squared();
    let candidate = StressMatrix {
        matrix: psd.clone(),
        symmetric: true,
        zero_rows: Vec::new(),
    };
    if candidate.max_violation(&squared, config) > 1e-8 {
        return Ok(inconclusive("ΩᵀΩ failed the equilibrium checks on the squared graph"));
    }
    let conic = conic_at_infinity(squared.edges(), config, rel_tol)?;
    if conic.on_conic {
        return Ok(inconclusive("squared graph edge directions lie on a conic at infinity"));
    }
    Ok(UniversalOutcome::Certified(UniversalCertificate {
        route: UniversalRoute::PsdStress,
        corank,
        conic_shortcut: false,
        conic: Some(conic),
        certified: Structure::Graph(squared),
        psd_stress: Some(psd),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::hypergraph::Hypergraph;
    use crate::rigidity::Configuration;

    #[test]
    fn pentagon_affine_route_inconclusive() {
        let mut rng = seeded_rng(51);
        let f = Framework::of_hypergraph(families::pentagon(), Configuration::random(5, 2, &mut rng)).unwrap();
        let out = universal_rigidity_certificate(&f, UniversalRoute::AffineRigidity, 1e-9, 0).unwrap();
        assert!(!out.is_certified());
        let psd = universal_rigidity_certificate(&f, UniversalRoute::PsdStress, 1e-9, 0).unwrap();
        assert!(!psd.is_certified());
    }

    #[test]
    fn k4_hyperedge_certified_by_affine_route() {
        let mut rng = seeded_rng(52);
        let theta = Hypergraph::new(4, [vec![0, 1, 2, 3]]).unwrap();
        let f = Framework::of_hypergraph(theta, Configuration::random(4, 2, &mut rng)).unwrap();
        let UniversalOutcome::Certified(c) = universal_rigidity_certificate(&f, UniversalRoute::AffineRigidity, 1e-9, 0).unwrap() else {
            panic!("expected a certificate");
        };
        assert_eq!(c.corank, 3);
        assert!(c.conic_shortcut);
    }

    #[test]
    fn hex_torus_psd_route() {
        let mut rng = seeded_rng(53);
        let g = families::hex_torus(4, 4).unwrap();
        let config = Configuration::random(32, 2, &mut rng);
        let f = Framework::of_graph(g.clone(), config.clone()).unwrap();
        let c = match universal_rigidity_certificate(&f, UniversalRoute::PsdStress, 1e-9, 7).unwrap() {
            UniversalOutcome::Certified(c) => c,
            UniversalOutcome::Inconclusive { reason } => panic!("{reason}"),
        };
        assert_eq!(c.certified, Structure::Graph(g.squared()));
        let s = c.psd_stress.unwrap();
        assert!((&s - s.transpose()).amax() < 1e-12);
        let eig = s.clone().symmetric_eigen();
        assert!(eig.eigenvalues.min() > -1e-10 * eig.eigenvalues.max());
        assert!(!c.conic.unwrap().on_conic);
    }

    #[test]
    fn graph_affine_route_falls_back_to_body_conic() {
        // K4 as a graph framework: 2-hyperedges carry no relations, so it is not affinely rigid
        let mut rng = seeded_rng(54);
        let f = Framework::of_graph(Graph::complete(4).unwrap(), Configuration::random(4, 2, &mut rng)).unwrap();
        assert!(!universal_rigidity_certificate(&f, UniversalRoute::AffineRigidity, 1e-9, 0).unwrap().is_certified());
    }
}

//! Neighborhood affine rigidity of graph frameworks.

use std::cmp::Ordering;

use super::affinity::{check_sizes, strong_affinity_matrix};
use super::framework::{check_proper, Configuration};
use super::stress::{nonsymmetric_stress, stacked_stresses};
use super::{Certificate, RigidityVerdict, Verdict};
use crate::error::Result;
use crate::hypergraph::Graph;
use crate::numkernel::numerical_kernel;
use crate::seeded_rng;

/// Two-stage test of neighborhood affine rigidity.
///
/// Stage 1 draws one random non-symmetric stress; corank `d + 1` certifies
/// rigidity. Otherwise stage 2 stacks `d + 2` independent stresses (reported
/// for information) and decides from the strong affinity matrix of the
/// neighborhood hypergraph.
pub fn neighborhood_affine_rigidity_test(
    graph: &Graph,
    config: &Configuration,
    rel_tol: f64,
    seed: u64,
) -> Result<RigidityVerdict> {
    let theta = graph.neighborhood_hypergraph();
    check_sizes(&theta, config)?;
    check_proper(config, rel_tol)?;
    let d = config.dim();
    let mut rng = seeded_rng(seed);

    let omega = nonsymmetric_stress(graph, config, rel_tol, &mut rng)?;
    let stage1_corank = omega.corank(rel_tol)?;
    if stage1_corank == d + 1 {
        return Ok(RigidityVerdict {
            verdict: Verdict::Rigid,
            corank: stage1_corank,
            expected_corank: d + 1,
            one_sided: false,
            certificate: Certificate::Stress {
                stage: 1,
                stage1_corank,
                stacked_stress_corank: None,
                affinity_corank: None,
                rel_tol,
                seed,
            },
        });
    }

    let stacked = stacked_stresses(graph, config, d + 2, rel_tol, &mut rng)?;
    let stacked_corank = numerical_kernel(&stacked, rel_tol)?.dimension();
    let strong = strong_affinity_matrix(&theta, config, rel_tol)?;
    let corank = strong.corank(rel_tol)?;
    let verdict = match corank.cmp(&(d + 1)) {
        Ordering::Equal => Verdict::Rigid,
        Ordering::Greater => Verdict::Flexible,
        Ordering::Less => Verdict::Inconclusive,
    };
    Ok(RigidityVerdict {
        verdict,
        corank,
        expected_corank: d + 1,
        one_sided: false,
        certificate: Certificate::Stress {
            stage: 2,
            stage1_corank,
            stacked_stress_corank: Some(stacked_corank),
            affinity_corank: Some(corank),
            rel_tol,
            seed,
        },
    })
}

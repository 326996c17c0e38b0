//! Frameworks and rigidity tests.

pub mod affinity;
pub mod conic;
pub mod framework;
pub mod generic;
pub mod neighborhood;
pub mod rubber_band;
pub mod stress;
pub mod universal;

use serde::Serialize;

pub use affinity::{affine_rigidity_test, strong_affinity_matrix, AffinityMatrix};
pub use conic::{conic_at_infinity, conic_at_infinity_test, ConicTest};
pub use framework::{Configuration, Framework, Structure};
pub use generic::{generic_affine_rigidity_test, GenericTestOptions, PrimeChoice};
pub use neighborhood::neighborhood_affine_rigidity_test;
pub use rubber_band::{positive_stress, rubber_band_embedding, RubberBandEmbedding, RubberBandOptions};
pub use stress::{nonsymmetric_stress, StressMatrix};
pub use universal::{universal_rigidity_certificate, UniversalCertificate, UniversalOutcome, UniversalRoute};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Rigid,
    Flexible,
    Inconclusive,
}

/// Which matrix witnessed a verdict, and how its rank was decided.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    Floating {
        matrix: String,
        rows: usize,
        cols: usize,
        rel_tol: f64,
        threshold: f64,
        gap: f64,
    },
    FiniteField {
        moduli: Vec<u64>,
        trials_run: usize,
        coranks: Vec<usize>,
        rows: usize,
        cols: usize,
        seed: u64,
        failure_bound_per_trial: f64,
    },
    Stress {
        stage: u8,
        stage1_corank: usize,
        stacked_stress_corank: Option<usize>,
        affinity_corank: Option<usize>,
        rel_tol: f64,
        seed: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RigidityVerdict {
    pub verdict: Verdict,
    pub corank: usize,
    /// `d + 1`.
    pub expected_corank: usize,
    /// Set when the verdict may be wrong with small probability.
    pub one_sided: bool,
    pub certificate: Certificate,
}

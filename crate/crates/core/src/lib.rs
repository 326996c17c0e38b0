//! Affine rigidity of hypergraph frameworks.
//!
//! The crate is organised bottom-up:
//!
//! * [`hypergraph`]: graphs, hypergraphs and the combinatorial
//!   constructions between them (body graph, neighborhood hypergraph,
//!   squared graph, `k`-truncation), vertex connectivity and the
//!   Zha–Zhang overlap condition.
//! * [`numkernel`]: tolerance-based kernels, least squares, PSD
//!   factorization, and exact rank over a large prime field.
//! * [`rigidity`]: frameworks, strong affinity matrices, the affine
//!   rigidity rank test (floating point and randomized finite field),
//!   rubber-band embeddings, non-symmetric equilibrium stresses, the
//!   conic-at-infinity test and one-sided universal rigidity certificates.
//! * [`registration`]: recovering a global configuration from per-hyperedge
//!   local charts, up to an affine or a Euclidean transform.
//! * [`families`]: the standard example structures (pentagon hypergraph,
//!   hexagonal torus lattice, wheels, stars, trilateration graphs, ...).

pub mod error;
pub mod families;
pub mod hypergraph;
pub mod numkernel;
pub mod registration;
pub mod rigidity;

pub use error::{Error, Result};
pub use hypergraph::{Graph, Hypergraph};
pub use rigidity::{Configuration, Framework, RigidityVerdict, Verdict};


/// Default relative tolerance used for numerical kernels.
pub const DEFAULT_REL_TOL: f64 = 1e-9;

/// Deterministic random number generator used throughout the crate.
pub type SeededRng = rand_chacha::ChaCha8Rng;

/// Builds the crate's RNG from a 64-bit seed.
pub fn seeded_rng(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    SeededRng::seed_from_u64(seed)
}

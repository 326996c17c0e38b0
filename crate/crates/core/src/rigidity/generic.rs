//! Randomized test of generic affine rigidity over a large prime field.
//!
//! Coordinates are sampled uniformly in `F_q`, each hyperedge's affine
//! relations are found by exact elimination, and the corank of the stacked
//! matrix is computed exactly. A sampled corank is never below the generic
//! one, so `d + 1` certifies rigidity; a larger corank is reported as
//! flexible with a one-sided error.

use rand::Rng;

use super::{Certificate, RigidityVerdict, Verdict};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::numkernel::prime::{self, reduce_i64, MIN_TESTER_PRIME};
use crate::numkernel::{prime_field_rank, PrimeFieldMatrix, DEFAULT_PRIME};
use crate::seeded_rng;

/// Choice of modulus for the finite-field tester.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeChoice {
    Fixed(u64),
    /// A fresh random 60-bit prime per trial.
    RandomPerTrial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenericTestOptions {
    pub trials: usize,
    pub seed: u64,
    pub prime: PrimeChoice,
}

impl Default for GenericTestOptions {
    fn default() -> Self {
        GenericTestOptions {
            trials: 3,
            seed: 0,
            prime: PrimeChoice::Fixed(DEFAULT_PRIME),
        }
    }
}

/// Affinely independent relations of one hyperedge over `F_q`, given the
/// residues of its members' coordinates (`points[i]` has length `d`).
fn hyperedge_relations_mod(points: &[&[u64]], d: usize, q: u64) -> Result<Vec<Vec<u64>>> {
    let k = points.len();
    let mut lift = PrimeFieldMatrix::zeros(d + 1, k, q)?;
    for (c, p) in points.iter().enumerate() {
        lift.set(0, c, 1);
        for a in 0..d {
            lift.set(a + 1, c, p[a]);
        }
    }
    Ok(lift.nullspace())
}

/// Exact strong affinity matrix over `F_q` for coordinates given as residues
/// (`coords[v]` has length `d`).
pub fn finite_field_affinity(theta: &Hypergraph, coords: &[Vec<u64>], d: usize, q: u64) -> Result<PrimeFieldMatrix> {
    let v = theta.vertex_count();
    if coords.len() != v || coords.iter().any(|c| c.len() != d) {
        return Err(Error::InvalidInput(format!("expected {v} coordinate tuples of length {d}")));
    }
    let mut m = PrimeFieldMatrix::zeros(0, v, q)?;
    let mut row = vec![0u64; v];
    for h in theta.hyperedges() {
        let pts: Vec<&[u64]> = h.iter().map(|&u| coords[u].as_slice()).collect();
        for rel in hyperedge_relations_mod(&pts, d, q)? {
            row.fill(0);
            for (slot, &u) in h.iter().enumerate() {
                row[u] = rel[slot];
            }
            m.push_row(&row);
        }
    }
    Ok(m)
}

/// Exact corank over `F_q` of the strong affinity matrix for integer coordinates.
pub fn finite_field_corank_i64(theta: &Hypergraph, coords: &[Vec<i64>], d: usize, q: u64) -> Result<usize> {
    let residues: Vec<Vec<u64>> = coords.iter().map(|c| c.iter().map(|&x| reduce_i64(x, q)).collect()).collect();
    let m = finite_field_affinity(theta, &residues, d, q)?;
    Ok(theta.vertex_count() - prime_field_rank(&m))
}

fn proper_mod(coords: &[Vec<u64>], d: usize, q: u64) -> Result<bool> {
    let mut lift = PrimeFieldMatrix::zeros(d + 1, coords.len(), q)?;
    for (c, p) in coords.iter().enumerate() {
        lift.set(0, c, 1);
        for a in 0..d {
            lift.set(a + 1, c, p[a]);
        }
    }
    Ok(prime_field_rank(&lift) == d + 1)
}

/// Randomized generic affine rigidity test of `theta` in `R^d`.
///
/// Reports the minimum corank over `trials` independent samples.
pub fn generic_affine_rigidity_test(theta: &Hypergraph, d: usize, options: &GenericTestOptions) -> Result<RigidityVerdict> {
    let v = theta.vertex_count();
    if d == 0 {
        return Err(Error::InvalidInput("dimension must be positive".into()));
    }
    if v < d + 1 {
        return Err(Error::UnsupportedInstance(format!("{v} vertices cannot span R^{d}")));
    }
    if options.trials == 0 {
        return Err(Error::InvalidInput("at least one trial is required".into()));
    }
    if let PrimeChoice::Fixed(q) = options.prime {
        if !(MIN_TESTER_PRIME..1 << 63).contains(&q) || !prime::is_prime(q) {
            return Err(Error::InvalidInput(format!("modulus {q} must be a prime in [2^59, 2^63)")));
        }
    }
    let mut rng = seeded_rng(options.seed);
    let mut coranks = Vec::with_capacity(options.trials);
    let mut moduli = Vec::with_capacity(options.trials);
    let mut rows = 0;
    for _ in 0..options.trials {
        let q = match options.prime {
            PrimeChoice::Fixed(q) => q,
            PrimeChoice::RandomPerTrial => prime::random_prime(&mut rng),
        };
        let coords = loop {
            let c: Vec<Vec<u64>> = (0..v).map(|_| (0..d).map(|_| rng.random_range(0..q)).collect()).collect();
            if proper_mod(&c, d, q)? {
                break c;
            }
        };
        let m = finite_field_affinity(theta, &coords, d, q)?;
        rows = m.rows();
        coranks.push(v - prime_field_rank(&m));
        moduli.push(q);
        if coranks.last() == Some(&(d + 1)) {
            break;
        }
    }
    let corank = *coranks.iter().min().expect("at least one trial");
    let smallest_modulus = *moduli.iter().min().expect("at least one trial");
    let verdict = if corank == d + 1 { Verdict::Rigid } else { Verdict::Flexible };
    Ok(RigidityVerdict {
        verdict,
        corank,
        expected_corank: d + 1,
        one_sided: verdict == Verdict::Flexible,
        certificate: Certificate::FiniteField {
            moduli,
            trials_run: coranks.len(),
            coranks,
            rows,
            cols: v,
            seed: options.seed,
            // a nonzero r×r minor built from circuit relations has degree ≤ r·d ≤ v·d
            failure_bound_per_trial: (v * d) as f64 / smallest_modulus as f64,
        },
    })
}

//! Exact linear algebra over a prime field `F_q` with `q < 2^63`.

use rand::Rng;

use crate::error::{Error, Result};

/// The Mersenne prime `2^61 − 1`, the default modulus.
pub const DEFAULT_PRIME: u64 = (1 << 61) - 1;

/// Smallest modulus accepted by the randomized testers.
pub const MIN_TESTER_PRIME: u64 = 1 << 59;

#[inline]
pub fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, q: u64) -> u64 {
    let s = a + b;
    if s >= q {
        s - q
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, q: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + q - b
    }
}

pub fn pow_mod(mut base: u64, mut exp: u64, q: u64) -> u64 {
    let mut acc = 1 % q;
    base %= q;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, q);
        }
        base = mul_mod(base, base, q);
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse of a nonzero residue (Fermat).
pub fn inv_mod(a: u64, q: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(q));
    pow_mod(a, q - 2, q)
}

/// Maps a signed integer to its residue in `[0, q)`.
pub fn reduce_i64(x: i64, q: u64) -> u64 {
    (x as i128).rem_euclid(q as i128) as u64
}

/// Deterministic Miller–Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A uniformly placed random 60-bit prime in `[2^59, 2^60)`.
pub fn random_prime<R: Rng + ?Sized>(rng: &mut R) -> u64 {
    loop {
        let mut candidate = rng.random_range(MIN_TESTER_PRIME..(1u64 << 60)) | 1;
        while candidate < (1u64 << 60) {
            if is_prime(candidate) {
                return candidate;
            }
            candidate += 2;
        }
    }
}

/// Dense row-major matrix with entries reduced modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    rows: usize,
    cols: usize,
    modulus: u64,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn zeros(rows: usize, cols: usize, modulus: u64) -> Result<Self> {
        if modulus >= 1 << 63 || !is_prime(modulus) {
            return Err(Error::InvalidInput(format!("modulus {modulus} is not a prime below 2^63")));
        }
        Ok(PrimeFieldMatrix {
            rows,
            cols,
            modulus,
            data: vec![0; rows * cols],
        })
    }

    pub fn identity(n: usize, modulus: u64) -> Result<Self> {
        let mut m = Self::zeros(n, n, modulus)?;
        for i in 0..n {
            m.set(i, i, 1);
        }
        Ok(m)
    }

    /// Builds a matrix from signed integer entries given row-major.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64], modulus: u64) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidInput(format!(
                "expected {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        let mut m = Self::zeros(rows, cols, modulus)?;
        for (slot, &x) in m.data.iter_mut().zip(entries) {
            *slot = reduce_i64(x, modulus);
        }
        Ok(m)
    }

    /// Stacks rows (each of length `cols`, already reduced).
    pub fn from_rows(cols: usize, rows: Vec<Vec<u64>>, modulus: u64) -> Result<Self> {
        let mut m = Self::zeros(0, cols, modulus)?;
        for row in rows {
            m.push_row(&row);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: u64) {
        self.data[r * self.cols + c] = value % self.modulus;
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        let q = self.modulus;
        self.data.extend(row.iter().map(|&x| x % q));
        self.rows += 1;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let q = self.modulus;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = inv_mod(self.get(r, c), q);
            for j in c..cols {
                let x = self.get(r, j);
                self.data[r * cols + j] = mul_mod(x, inv, q);
            }
            for i in 0..self.rows {
                let f = self.get(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = mul_mod(f, self.data[r * cols + j], q);
                    self.data[i * cols + j] = sub_mod(self.data[i * cols + j], sub, q);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    /// Basis of the right null space `{x : M x = 0}` read off the RREF.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let q = self.modulus;
        let mut work = self.clone();
        let pivots = work.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut x = vec![0; self.cols];
                x[free] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    x[pc] = sub_mod(0, work.get(r, free), q);
                }
                x
            })
            .collect()
    }
}

/// Exact rank over `F_q` by Gauss–Jordan elimination.
pub fn prime_field_rank(m: &PrimeFieldMatrix) -> usize {
    let mut work = m.clone();
    work.rref().len()
}

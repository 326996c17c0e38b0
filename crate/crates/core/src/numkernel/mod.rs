//! Numerical and exact linear algebra used by the rigidity tests.
//!
//! Real matrices are `nalgebra::DMatrix<f64>`. Kernels are defined by
//! singular values relative to the largest one, so that results do not
//! depend on the overall scale of the input.

pub mod prime;

use nalgebra::{DMatrix, DVector, SymmetricEigen};

use crate::error::{Error, Result};

pub use prime::{prime_field_rank, PrimeFieldMatrix, DEFAULT_PRIME};

/// Orthonormal basis of the numerical kernel of a matrix.
#[derive(Debug, Clone)]
pub struct KernelBasis {
    /// `cols × dimension`, orthonormal columns.
    pub basis: DMatrix<f64>,
    /// Absolute cutoff: singular values at or below this count as zero.
    pub threshold_used: f64,
    /// All singular values of the input, descending, padded with zeros to `cols`.
    pub singular_values: Vec<f64>,
}

impl KernelBasis {
    pub fn dimension(&self) -> usize {
        self.basis.ncols()
    }

    pub fn rank(&self) -> usize {
        self.singular_values.len() - self.dimension()
    }

    /// Ratio of the smallest retained singular value to the largest one;
    /// 1 when nothing is retained. A small value flags a poorly separated rank.
    pub fn gap(&self) -> f64 {
        let max = self.singular_values.first().copied().unwrap_or(0.0);
        match self.rank() {
            0 => 1.0,
            r => self.singular_values[r - 1] / max,
        }
    }
}

pub(crate) fn check_finite(m: &DMatrix<f64>, what: &str) -> Result<()> {
    if m.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{what} has non-finite entries")))
    }
}

/// Kernel spanned by the right singular vectors whose singular value is at
/// most `rel_tol × σ_max`. A zero matrix has the full space as kernel.
pub fn numerical_kernel(m: &DMatrix<f64>, rel_tol: f64) -> Result<KernelBasis> {
    if !(rel_tol > 0.0 && rel_tol < 1.0) {
        return Err(Error::InvalidInput(format!("relative tolerance {rel_tol} not in (0, 1)")));
    }
    check_finite(m, "matrix")?;
    let n = m.ncols();
    if n == 0 {
        return Ok(KernelBasis {
            basis: DMatrix::zeros(0, 0),
            threshold_used: 0.0,
            singular_values: Vec::new(),
        });
    }
    // Reduce to a square n × n matrix with the same right singular structure.
    let square = if m.nrows() > n {
        m.clone().qr().r()
    } else {
        let mut padded = DMatrix::zeros(n, n);
        padded.view_mut((0, 0), (m.nrows(), n)).copy_from(m);
        padded
    };
    let svd = square.svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| svd.singular_values[b].total_cmp(&svd.singular_values[a]));
    let singular_values: Vec<f64> = order.iter().map(|&i| svd.singular_values[i]).collect();
    let sigma_max = singular_values[0];
    let threshold = rel_tol * sigma_max;
    let kernel_rows: Vec<usize> = order
        .iter()
        .copied()
        .filter(|&i| sigma_max == 0.0 || svd.singular_values[i] <= threshold)
        .collect();
    let mut basis = DMatrix::zeros(n, kernel_rows.len());
    for (col, &i) in kernel_rows.iter().enumerate() {
        basis.set_column(col, &v_t.row(i).transpose());
    }
    Ok(KernelBasis {
        basis,
        threshold_used: threshold,
        singular_values,
    })
}

/// `cols − dim ker` at the given relative tolerance.
pub fn numerical_rank(m: &DMatrix<f64>, rel_tol: f64) -> Result<usize> {
    numerical_kernel(m, rel_tol).map(|k| k.rank())
}

/// Minimal-norm minimizer of `‖A x − b‖₂`, via the SVD pseudo-inverse.
pub fn least_squares(a: &DMatrix<f64>, b: &DVector<f64>) -> Result<DVector<f64>> {
    if a.nrows() != b.len() {
        return Err(Error::InvalidInput(format!(
            "system has {} rows but right-hand side has length {}",
            a.nrows(),
            b.len()
        )));
    }
    check_finite(a, "system matrix")?;
    if !b.iter().all(|x| x.is_finite()) {
        return Err(Error::InvalidInput("right-hand side has non-finite entries".into()));
    }
    if a.ncols() == 0 {
        return Ok(DVector::zeros(0));
    }
    if a.nrows() == 0 {
        return Ok(DVector::zeros(a.ncols()));
    }
    let svd = a.clone().svd(true, true);
    let sigma_max = svd.singular_values.max();
    let cutoff = sigma_max * (a.nrows().max(a.ncols()) as f64) * f64::EPSILON;
    svd.solve(b, cutoff).map_err(|e| Error::InvalidInput(e.into()))
}

/// Outcome of [`psd_cholesky`].
#[derive(Debug, Clone)]
pub enum PsdFactor {
    /// Lower-triangular `L` with `L Lᵀ = clipped`.
    Factor {
        lower: DMatrix<f64>,
        clipped: DMatrix<f64>,
        min_eigenvalue: f64,
    },
    NotPsd { min_eigenvalue: f64 },
}

/// Default PSD tolerance relative to `‖G‖₂`.
pub const DEFAULT_PSD_TOL: f64 = 1e-7;

/// Cholesky-type factor of a symmetric, (nearly) positive semi-definite matrix.
///
/// Eigenvalues down to `−tol·‖G‖₂` are clipped to zero before factoring;
/// anything more negative yields [`PsdFactor::NotPsd`].
pub fn psd_cholesky(g: &DMatrix<f64>, tol: f64) -> Result<PsdFactor> {
    if !g.is_square() {
        return Err(Error::InvalidInput(format!("Gram matrix is {}x{}", g.nrows(), g.ncols())));
    }
    check_finite(g, "Gram matrix")?;
    let scale = g.amax();
    if (g - g.transpose()).amax() > 1e-10 * scale {
        return Err(Error::InvalidInput("Gram matrix is not symmetric".into()));
    }
    let n = g.nrows();
    let sym = (g + g.transpose()) * 0.5;
    let eig = SymmetricEigen::new(sym);
    let norm = eig.eigenvalues.amax();
    let min_eigenvalue = eig.eigenvalues.iter().copied().fold(f64::INFINITY, f64::min);
    if n > 0 && min_eigenvalue < -tol * norm {
        return Ok(PsdFactor::NotPsd { min_eigenvalue });
    }
    let clipped_values = eig.eigenvalues.map(|x| x.max(0.0));
    let q = &eig.eigenvectors;
    let clipped = q * DMatrix::from_diagonal(&clipped_values) * q.transpose();
    let clipped = (&clipped + clipped.transpose()) * 0.5;

    let lower = match clipped.clone().cholesky() {
        Some(c) => c.unpack(),
        None => {
            // Singular PSD: B = Q √Λ satisfies B Bᵀ = clipped; Bᵀ = Q₂ R gives L = Rᵀ.
            let b = q * DMatrix::from_diagonal(&clipped_values.map(f64::sqrt));
            let mut l = b.transpose().qr().r().transpose();
            for j in 0..n {
                if l[(j, j)] < 0.0 {
                    l.column_mut(j).neg_mut();
                }
            }
            l
        }
    };
    Ok(PsdFactor::Factor {
        lower,
        clipped,
        min_eigenvalue,
    })
}

/// Spectral norm (largest singular value).
pub fn spectral_norm(m: &DMatrix<f64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    m.singular_values().max()
}

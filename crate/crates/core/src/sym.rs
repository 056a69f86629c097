//! Dense symmetric linear algebra: eigendecomposition, projection onto the
//! positive semidefinite cone, and the entrywise box clamp with unit diagonal.
//!
//! These three kernels are the building blocks of the ADMM iteration in
//! [`crate::sdp`].

use nalgebra::{DMatrix, DVector};

use crate::error::Error;

/// Maximum relative asymmetry accepted by [`SymMatrix::new`].
pub const SYMMETRY_RTOL: f64 = 1e-12;

/// Eigenvalues above this are kept by the PSD projection; values in
/// `(-1e-12, 0)` count as zero so rounding noise cannot flip signs.
const EIG_ZERO_TOL: f64 = 1e-12;

/// A dense symmetric real matrix. Construction symmetrizes the input as
/// `(M + M^T) / 2` after checking that the asymmetry is within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    m: DMatrix<f64>,
}

impl SymMatrix {
    /// Wraps a square matrix, requiring `max |M_ij - M_ji|` to be at most
    /// `1e-12 * max |M_ij|`. The stored matrix is exactly symmetric.
    pub fn new(m: DMatrix<f64>) -> Result<Self, Error> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        let scale = m.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        let mut asymmetry = 0.0f64;
        for i in 0..m.nrows() {
            for j in (i + 1)..m.ncols() {
                asymmetry = asymmetry.max((m[(i, j)] - m[(j, i)]).abs());
            }
        }
        let tolerance = SYMMETRY_RTOL * scale;
        if asymmetry > tolerance {
            return Err(Error::Asymmetric {
                asymmetry,
                tolerance,
            });
        }
        Ok(Self::symmetrize(m))
    }

    /// Symmetrizes without the asymmetry check, for matrices that are
    /// symmetric by construction up to rounding.
    pub(crate) fn symmetrize(mut m: DMatrix<f64>) -> Self {
        debug_assert_eq!(m.nrows(), m.ncols());
        for i in 0..m.nrows() {
            for j in (i + 1)..m.ncols() {
                let v = 0.5 * (m[(i, j)] + m[(j, i)]);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        SymMatrix { m }
    }

    pub fn n(&self) -> usize {
        self.m.nrows()
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.m
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.m
    }
}

/// Full spectral decomposition `S = V diag(eigenvalues) V^T` with the
/// eigenvalues sorted in descending order.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// Eigenvalues, descending.
    pub eigenvalues: DVector<f64>,
    /// Matrix whose columns are the corresponding orthonormal eigenvectors.
    pub eigenvectors: DMatrix<f64>,
}

/// Computes the full eigendecomposition of a symmetric matrix.
pub fn sym_eig(s: &SymMatrix) -> Result<EigenDecomposition, Error> {
    let n = s.n();
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    if s.as_matrix().iter().any(|v| !v.is_finite()) {
        return Err(Error::NonFinite);
    }
    if n == 1 {
        return Ok(EigenDecomposition {
            eigenvalues: DVector::from_element(1, s.as_matrix()[(0, 0)]),
            eigenvectors: DMatrix::identity(1, 1),
        });
    }
    let eig = s.as_matrix().clone().symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let eigenvalues = DVector::from_iterator(n, order.iter().map(|&k| eig.eigenvalues[k]));
    let eigenvectors = DMatrix::from_columns(
        &order
            .iter()
            .map(|&k| eig.eigenvectors.column(k).into_owned())
            .collect::<Vec<_>>(),
    );
    Ok(EigenDecomposition {
        eigenvalues,
        eigenvectors,
    })
}

/// Projects onto the PSD cone: `(S)_+ = U max(Sigma, 0) U^T`.
pub fn project_psd(s: &SymMatrix) -> Result<SymMatrix, Error> {
    let eig = sym_eig(s)?;
    let positive: Vec<usize> = (0..s.n())
        .filter(|&k| eig.eigenvalues[k] > EIG_ZERO_TOL)
        .collect();
    if positive.is_empty() {
        return Ok(SymMatrix::symmetrize(DMatrix::zeros(s.n(), s.n())));
    }
    // (S)_+ = sum over positive eigenpairs of lambda_k v_k v_k^T, formed as
    // (V_+ diag(lambda_+)) V_+^T on the positive columns only.
    let v_pos = DMatrix::from_columns(
        &positive
            .iter()
            .map(|&k| eig.eigenvectors.column(k).into_owned())
            .collect::<Vec<_>>(),
    );
    let mut scaled = v_pos.clone();
    for (idx, &k) in positive.iter().enumerate() {
        scaled.column_mut(idx).scale_mut(eig.eigenvalues[k]);
    }
    Ok(SymMatrix::symmetrize(scaled * v_pos.transpose()))
}

/// Clamps every entry to `[0, 1]`, then overwrites the diagonal with 1.
pub fn box_clamp_unit_diag(s: &SymMatrix) -> SymMatrix {
    let mut m = s.as_matrix().clone();
    for v in m.iter_mut() {
        *v = v.clamp(0.0, 1.0);
    }
    for i in 0..m.nrows() {
        m[(i, i)] = 1.0;
    }
    SymMatrix { m }
}

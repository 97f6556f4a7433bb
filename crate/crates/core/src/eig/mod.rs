//! Independent verification: a dense eigenvalue solver, a trace-based
//! characteristic-polynomial oracle, multiset matching of spectra and
//! residual checks on lifted eigenvectors.

mod charpoly;
mod qr;
mod verify;

pub use charpoly::{charpoly_oracle, poly_eval, ORACLE_MAX_ORDER};
pub use verify::{
    default_verification_tol, eigenpair_tol, eigenpairs, inverse_iteration, residual,
    spectra_match, structured_check_auto, structured_eigvec_check, verify, EigenPair,
    VerificationReport,
};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::spectra::Spectrum;

/// All eigenvalues of a square matrix with multiplicity.
///
/// Fails on non-square or empty input, or with [`Error::NonConvergence`]
/// (carrying the eigenvalues found so far) if the QR iteration stalls.
pub fn eigenvalues(a: &DenseMatrix) -> Result<Spectrum> {
    let n = a.require_square("A")?;
    if n == 0 {
        return Err(Error::dim("eigenvalues of an empty matrix"));
    }
    Spectrum::new(qr::eigenvalues_raw(a)?)
}

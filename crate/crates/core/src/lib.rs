//! Constructive solutions of the nonnegative inverse eigenvalue problem.
//!
//! Given a list of complex numbers, the constructions here build an explicit
//! entrywise nonnegative matrix with exactly that spectrum whenever one of
//! the supported sufficient conditions holds:
//!
//! * [`permutative`]: Suleimanova lists through a permutative matrix;
//! * [`blockcomp`]: interleaving two realizable factors into a matrix of
//!   order `2n` or `2n + 1`;
//! * [`circulant`]: circulant realizations and Guo perturbations.
//!
//! Every construction can be checked with the independent eigenvalue engine
//! in [`eig`]. The [`cli`] module is the batch/CLI front end.

pub mod assignment;
pub mod blockcomp;
pub mod circulant;
pub mod eig;
pub mod error;
pub mod cli;
pub mod matrix;
pub mod permutative;
pub mod scalar;
pub mod spectra;

pub use blockcomp::{
    compose_even, compose_odd, compose_odd_sym, extract_even, extract_odd,
    realize_pair_suleimanova, Border, CompositionParams, OddTail, Pairing,
};
pub use circulant::{
    circulant_from_spectrum, circulant_spectrum, guo_pair_compose, guo_perturb, CirculantRow,
    GuoParams, GuoVariant,
};
pub use eig::{
    charpoly_oracle, eigenvalues, spectra_match, structured_eigvec_check, verify,
    VerificationReport,
};
pub use error::{Error, Result};
pub use matrix::DenseMatrix;
pub use permutative::{
    are_permutatively_equivalent, detect_permutative, paparella_matrix, paparella_spectrum,
    realize_suleimanova, PermutationTuple,
};
pub use scalar::{Sign, C64};
pub use spectra::{check_necessary, NecessaryReport, Spectrum};

//! Permutative matrices: every row is a permutation of the first row.
//!
//! A [`PermutationTuple`] `τ = (τ₁, …, τₙ)` with `τ₁ = id` generates the matrix
//! `τ(a)` whose row `j` is `(a[τⱼ(0)], …, a[τⱼ(n-1)])`. Two matrices generated by
//! the same `τ` are permutatively equivalent.

use serde::{Deserialize, Serialize};

use crate::assignment::saturating_matching;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::C64;
use crate::spectra::{is_suleimanova, Spectrum};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct PermutationTuple {
    perms: Vec<Vec<usize>>,
}

impl TryFrom<Vec<Vec<usize>>> for PermutationTuple {
    type Error = Error;

    fn try_from(perms: Vec<Vec<usize>>) -> Result<Self> {
        PermutationTuple::new(perms)
    }
}

impl From<PermutationTuple> for Vec<Vec<usize>> {
    fn from(t: PermutationTuple) -> Self {
        t.perms
    }
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| i < p.len() && !std::mem::replace(&mut seen[i], true))
}

impl PermutationTuple {
    /// Zero-based index arrays; `perms[0]` must be the identity.
    pub fn new(perms: Vec<Vec<usize>>) -> Result<Self> {
        let n = perms.len();
        if n == 0 {
            return Err(Error::invalid("empty permutation tuple"));
        }
        for (j, p) in perms.iter().enumerate() {
            if p.len() != n || !is_permutation(p) {
                return Err(Error::invalid(format!(
                    "entry {j} is not a permutation of 0..{n}"
                )));
            }
        }
        if perms[0].iter().enumerate().any(|(i, &p)| i != p) {
            return Err(Error::invalid("first permutation must be the identity"));
        }
        Ok(PermutationTuple { perms })
    }

    /// `(id, φ, φ², …, φⁿ⁻¹)`.
    pub fn from_powers(phi: &[usize]) -> Result<Self> {
        let n = phi.len();
        if n == 0 || !is_permutation(phi) {
            return Err(Error::invalid("φ must be a permutation"));
        }
        let mut perms = Vec::with_capacity(n);
        let mut cur: Vec<usize> = (0..n).collect();
        for _ in 0..n {
            perms.push(cur.clone());
            cur = cur.iter().map(|&i| phi[i]).collect();
        }
        Ok(PermutationTuple { perms })
    }

    /// Circulant structure: `φ(i) ≡ i - 1 (mod n)`.
    pub fn circulant(n: usize) -> Self {
        let phi: Vec<usize> = (0..n).map(|i| (i + n - 1) % n).collect();
        Self::from_powers(&phi).expect("shift is a permutation")
    }

    /// Left-circulant structure: `φ(i) ≡ i + 1 (mod n)`.
    pub fn left_circulant(n: usize) -> Self {
        let phi: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        Self::from_powers(&phi).expect("shift is a permutation")
    }

    /// `τⱼ = (0 j)`, the tuple generating [`paparella_matrix`].
    pub fn transpositions(n: usize) -> Self {
        let perms = (0..n)
            .map(|j| {
                let mut p: Vec<usize> = (0..n).collect();
                p.swap(0, j);
                p
            })
            .collect();
        PermutationTuple { perms }
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Vec<usize>] {
        &self.perms
    }
}

/// `τ(a)`: row `j` is `a` rearranged by `τⱼ`.
pub fn build_tau_matrix(tau: &PermutationTuple, a: &[C64]) -> Result<DenseMatrix> {
    let n = tau.order();
    if a.len() != n {
        return Err(Error::dim(format!(
            "tuple of order {n} applied to a vector of length {}",
            a.len()
        )));
    }
    Ok(DenseMatrix::from_fn(n, n, |j, k| a[tau.perms[j][k]]))
}

fn require_order_two(x: &[C64]) -> Result<()> {
    if x.len() < 2 {
        return Err(Error::invalid("need at least two entries"));
    }
    Ok(())
}

/// The matrix whose row `i` is `x` with positions `0` and `i` swapped.
pub fn paparella_matrix(x: &[C64]) -> Result<DenseMatrix> {
    require_order_two(x)?;
    build_tau_matrix(&PermutationTuple::transpositions(x.len()), x)
}

/// Eigenvalues of [`paparella_matrix`]`(x)`: `(Σxᵢ, x₁-x₂, …, x₁-xₙ)`.
pub fn paparella_spectrum(x: &[C64]) -> Result<Spectrum> {
    require_order_two(x)?;
    let mut values = Vec::with_capacity(x.len());
    values.push(x.iter().sum());
    values.extend(x[1..].iter().map(|&xi| x[0] - xi));
    Spectrum::new(values)
}

/// Inverts the spectrum map: the `x` with `paparella_spectrum(x) = values` in that order.
pub fn paparella_vector(values: &[C64]) -> Vec<C64> {
    let n = values.len() as f64;
    let x1: C64 = values.iter().sum::<C64>() / n;
    std::iter::once(x1)
        .chain(values[1..].iter().map(|&l| x1 - l))
        .collect()
}

/// Nonnegative permutative realization of a Suleimanova list.
///
/// The list is sorted descending first so the positive value leads.
/// When the values sum to zero the diagonal is exactly zero.
pub fn realize_suleimanova(sigma: &Spectrum) -> Result<DenseMatrix> {
    let tol = sigma.default_tol();
    if !is_suleimanova(sigma, tol) {
        return Err(Error::gate(
            "suleimanova",
            "list must be real with one positive value, the rest nonpositive, and a nonnegative sum",
        ));
    }
    let sorted: Vec<C64> = sigma
        .real_sorted_desc()
        .into_iter()
        .map(crate::scalar::re)
        .collect();
    let x = paparella_vector(&sorted);
    paparella_matrix(&x)
}

/// Zero-based `τ` such that row `j` of `a` is a rearrangement of row 0, if one exists.
///
/// Each row is matched independently by bipartite matching under `tol`, so
/// repeated entries in the first row are handled without special casing.
pub fn detect_permutative(a: &DenseMatrix, tol: f64) -> Option<PermutationTuple> {
    common_tau(&[a], tol)
}

/// True iff a single `τ` generates both `a` and `b` from their first rows.
pub fn are_permutatively_equivalent(a: &DenseMatrix, b: &DenseMatrix, tol: f64) -> bool {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return false;
    }
    common_tau(&[a, b], tol).is_some()
}

/// Finds one `τ` that generates every matrix in `ms` (all square, same order).
pub fn common_tau(ms: &[&DenseMatrix], tol: f64) -> Option<PermutationTuple> {
    let first = ms.first()?;
    let n = first.rows();
    if n == 0 || ms.iter().any(|m| !m.is_square() || m.rows() != n) {
        return None;
    }
    let mut perms = Vec::with_capacity(n);
    perms.push((0..n).collect::<Vec<_>>());
    for j in 1..n {
        // position k of row j takes entry p from row 0
        let p = saturating_matching(n, n, |k, src| {
            ms.iter()
                .all(|m| (m[(j, k)] - m[(0, src)]).norm() <= tol)
        })?;
        perms.push(p);
    }
    Some(PermutationTuple { perms })
}

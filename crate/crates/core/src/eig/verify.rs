//! Spectrum matching, eigenvectors by inverse iteration, and residual checks
//! for eigenvectors lifted through a block composition.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::{re, C64};
use crate::spectra::{match_lists, Spectrum};

use super::eigenvalues;

/// Outcome of comparing an expected spectrum (or eigenpairs) with computed values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub max_distance: f64,
    /// `(expected index, computed index, distance)`.
    pub pairs: Vec<(usize, usize, f64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residuals: Option<Vec<f64>>,
    /// Checks that could not be carried out, with the reason.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
    pub tol: f64,
    pub expected: Spectrum,
    pub computed: Spectrum,
}

/// `1e-9 · max(1, ‖A‖_F)`.
pub fn default_verification_tol(a: &DenseMatrix) -> f64 {
    1e-9 * a.frobenius_norm().max(1.0)
}

/// Multiset comparison under an optimal assignment; passes iff every matched
/// distance is at most `tol`.
pub fn spectra_match(expected: &Spectrum, computed: &Spectrum, tol: f64) -> Result<VerificationReport> {
    if expected.len() != computed.len() {
        return Err(Error::dim(format!(
            "expected {} eigenvalues, computed {}",
            expected.len(),
            computed.len()
        )));
    }
    if tol.is_nan() || tol < 0.0 {
        return Err(Error::invalid(format!("tolerance must be ≥ 0, got {tol}")));
    }
    let (assign, dist) = match_lists(expected.values(), computed.values());
    let max_distance = dist.iter().copied().fold(0.0, f64::max);
    Ok(VerificationReport {
        passed: max_distance <= tol,
        max_distance,
        pairs: assign.iter().zip(&dist).enumerate().map(|(i, (&j, &d))| (i, j, d)).collect(),
        residuals: None,
        skipped: Vec::new(),
        tol,
        expected: expected.clone(),
        computed: computed.clone(),
    })
}

/// Computes the eigenvalues of `a` and matches them against `expected`.
/// `tol` defaults to [`default_verification_tol`]. Each computed eigenvalue
/// also gets an inverse-iteration residual in `residuals`.
pub fn verify(a: &DenseMatrix, expected: &Spectrum, tol: Option<f64>) -> Result<VerificationReport> {
    let tol = tol.unwrap_or_else(|| default_verification_tol(a));
    let computed = eigenvalues(a)?;
    let mut report = spectra_match(expected, &computed, tol)?;
    report.residuals = Some(
        computed
            .values()
            .iter()
            .map(|&l| inverse_iteration(a, l).1)
            .collect(),
    );
    Ok(report)
}

fn norm2(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `‖Av - λv‖₂ / ‖v‖₂`.
pub fn residual(a: &DenseMatrix, lambda: C64, v: &[C64]) -> Result<f64> {
    let av = a.mul_vec(v)?;
    let nv = norm2(v);
    if nv == 0.0 {
        return Err(Error::invalid("eigenvector must be nonzero"));
    }
    let diff: Vec<C64> = av.iter().zip(v).map(|(x, y)| x - lambda * y).collect();
    Ok(norm2(&diff) / nv)
}

/// LU factorization with partial pivoting of a square matrix; zero pivots
/// are replaced by `tiny` so the factor can always be applied.
struct Lu {
    n: usize,
    lu: Vec<C64>,
    perm: Vec<usize>,
}

impl Lu {
    fn new(m: &DenseMatrix, tiny: f64) -> Lu {
        let n = m.rows();
        let mut lu = m.entries().to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| lu[x * n + k].norm().total_cmp(&lu[y * n + k].norm()))
                .expect("nonempty range");
            if p != k {
                for j in 0..n {
                    lu.swap(k * n + j, p * n + j);
                }
                perm.swap(k, p);
            }
            if lu[k * n + k].norm() < tiny {
                lu[k * n + k] = re(tiny);
            }
            let pivot = lu[k * n + k];
            for i in k + 1..n {
                let f = lu[i * n + k] / pivot;
                lu[i * n + k] = f;
                for j in k + 1..n {
                    let u = lu[k * n + j];
                    lu[i * n + j] -= f * u;
                }
            }
        }
        Lu { n, lu, perm }
    }

    fn solve(&self, b: &[C64]) -> Vec<C64> {
        let n = self.n;
        let mut x: Vec<C64> = self.perm.iter().map(|&p| b[p]).collect();
        for i in 0..n {
            for j in 0..i {
                let l = self.lu[i * n + j];
                let xj = x[j];
                x[i] -= l * xj;
            }
        }
        for i in (0..n).rev() {
            for j in i + 1..n {
                let u = self.lu[i * n + j];
                let xj = x[j];
                x[i] -= u * xj;
            }
            x[i] /= self.lu[i * n + i];
        }
        x
    }
}

/// Three steps of inverse iteration shifted by `lambda`; returns the unit
/// vector and its residual `‖Av - λv‖₂`.
pub fn inverse_iteration(a: &DenseMatrix, lambda: C64) -> (Vec<C64>, f64) {
    let n = a.rows();
    let scale = a.frobenius_norm().max(f64::MIN_POSITIVE);
    let shifted = DenseMatrix::from_fn(n, n, |i, j| if i == j { a[(i, j)] - lambda } else { a[(i, j)] });
    let lu = Lu::new(&shifted, f64::EPSILON * scale);
    // start vector with no special symmetry
    let mut v: Vec<C64> = (0..n).map(|i| C64::new(1.0 + (i as f64 * 0.618_034).fract(), 0.0)).collect();
    for _ in 0..3 {
        v = lu.solve(&v);
        let nv = norm2(&v);
        if !(nv.is_finite() && nv > 0.0) {
            return (v, f64::INFINITY);
        }
        for z in &mut v {
            *z /= nv;
        }
    }
    let r = residual(a, lambda, &v).unwrap_or(f64::INFINITY);
    (v, r)
}

/// Residual bound an eigenpair must meet: `1e-8 · ‖A‖_F · n`.
pub fn eigenpair_tol(a: &DenseMatrix) -> f64 {
    1e-8 * a.frobenius_norm().max(f64::MIN_POSITIVE) * a.rows() as f64
}

/// An eigenpair produced by inverse iteration.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub value: C64,
    pub vector: Vec<C64>,
    pub residual: f64,
    pub converged: bool,
}

/// Eigenvalues of `a` with inverse-iteration eigenvectors.
pub fn eigenpairs(a: &DenseMatrix) -> Result<Vec<EigenPair>> {
    let tol = eigenpair_tol(a);
    Ok(eigenvalues(a)?
        .values()
        .iter()
        .map(|&value| {
            let (vector, residual) = inverse_iteration(a, value);
            EigenPair {
                value,
                vector,
                residual,
                converged: residual <= tol,
            }
        })
        .collect())
}

/// Checks that eigenpairs of the factors lift to eigenpairs of a composed
/// matrix `a`.
///
/// `s_pairs` are eigenpairs of `S` and `c_pairs` eigenpairs of the scaled
/// factor `±γC` (i.e. `(±γμ, x)`). Each `v` lifts to `w = (v₁, v₁, v₂, v₂, …)`
/// with the scalar tail `v_{n+1}` in the odd case; each `x` lifts to
/// `y = (x₁, -x₁, x₂, -x₂, …)` with a zero tail. In the odd case the `C`
/// lifts are eigenvectors only when the last row splits `S[n, j]` equally.
///
/// `residuals` holds `‖Aw - λw‖₂/‖w‖₂` in input order (S first, then C);
/// `computed` holds the Rayleigh quotients. Passes iff every residual is at
/// most `tol`.
pub fn structured_eigvec_check(
    a: &DenseMatrix,
    s_pairs: &[(C64, Vec<C64>)],
    c_pairs: &[(C64, Vec<C64>)],
    odd: bool,
    tol: f64,
) -> Result<VerificationReport> {
    let order = a.require_square("A")?;
    if odd != (order % 2 == 1) {
        return Err(Error::dim(format!(
            "order {order} does not match the {} pattern",
            if odd { "odd" } else { "even" }
        )));
    }
    let m = order / 2;
    let s_len = if odd { m + 1 } else { m };
    if s_pairs.is_empty() && c_pairs.is_empty() {
        return Err(Error::invalid("no eigenpairs supplied"));
    }
    let mut lifted = Vec::with_capacity(s_pairs.len() + c_pairs.len());
    for (l, v) in s_pairs {
        if v.len() != s_len {
            return Err(Error::dim(format!("S eigenvector has length {}, expected {s_len}", v.len())));
        }
        let mut w: Vec<C64> = v[..m].iter().flat_map(|&z| [z, z]).collect();
        if odd {
            w.push(v[m]);
        }
        lifted.push((*l, w));
    }
    for (mu, x) in c_pairs {
        if x.len() != m {
            return Err(Error::dim(format!("C eigenvector has length {}, expected {m}", x.len())));
        }
        let mut y: Vec<C64> = x.iter().flat_map(|&z| [z, -z]).collect();
        if odd {
            y.push(C64::default());
        }
        lifted.push((*mu, y));
    }

    let mut residuals = Vec::with_capacity(lifted.len());
    let mut quotients = Vec::with_capacity(lifted.len());
    for (l, w) in &lifted {
        residuals.push(residual(a, *l, w)?);
        let aw = a.mul_vec(w)?;
        let num: C64 = w.iter().zip(&aw).map(|(x, y)| x.conj() * y).sum();
        quotients.push(num / norm2(w).powi(2));
    }
    let pairs: Vec<(usize, usize, f64)> = lifted
        .iter()
        .zip(&quotients)
        .enumerate()
        .map(|(i, ((l, _), q))| (i, i, (l - q).norm()))
        .collect();
    let max_distance = pairs.iter().map(|p| p.2).fold(0.0, f64::max);
    Ok(VerificationReport {
        passed: residuals.iter().all(|&r| r <= tol),
        max_distance,
        pairs,
        residuals: Some(residuals),
        skipped: Vec::new(),
        tol,
        expected: Spectrum::new(lifted.iter().map(|p| p.0).collect())?,
        computed: Spectrum::new(quotients)?,
    })
}

/// [`structured_eigvec_check`] with eigenpairs of `S` and `kC` obtained by
/// inverse iteration. Pairs whose inverse iteration does not converge are
/// left out and listed in `skipped`; if every pair is skipped the report fails.
pub fn structured_check_auto(
    a: &DenseMatrix,
    s: &DenseMatrix,
    kc: &DenseMatrix,
    odd: bool,
    tol: f64,
) -> Result<VerificationReport> {
    let mut skipped = Vec::new();
    let mut keep = |pairs: Vec<EigenPair>, name: &str| -> Vec<(C64, Vec<C64>)> {
        pairs
            .into_iter()
            .filter_map(|p| {
                if p.converged {
                    Some((p.value, p.vector))
                } else {
                    skipped.push(format!(
                        "{name} eigenpair at {}: inverse iteration residual {:.3e}",
                        p.value, p.residual
                    ));
                    None
                }
            })
            .collect()
    };
    let s_pairs = keep(eigenpairs(s)?, "S");
    let c_pairs = if kc.rows() == 0 { Vec::new() } else { keep(eigenpairs(kc)?, "C") };
    if s_pairs.is_empty() && c_pairs.is_empty() {
        let placeholder = Spectrum::new(vec![C64::default()])?;
        return Ok(VerificationReport {
            passed: false,
            max_distance: f64::INFINITY,
            pairs: Vec::new(),
            residuals: None,
            skipped,
            tol,
            expected: placeholder.clone(),
            computed: placeholder,
        });
    }
    let mut report = structured_eigvec_check(a, &s_pairs, &c_pairs, odd, tol)?;
    report.skipped = skipped;
    Ok(report)
}

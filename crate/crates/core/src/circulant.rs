//! Circulant matrices, their DFT spectra, and Guo perturbations.
//!
//! Spectra here are in DFT-index order: position `k` holds the eigenvalue
//! belonging to the root `ω^k`, `ω = exp(2πi/n)`, so conjugate pairs sit at
//! `k ↔ n - k` (zero-based).

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::blockcomp::{compose_even, CompositionParams};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::permutative::{build_tau_matrix, PermutationTuple};
use crate::scalar::{self, re, Sign, C64};
use crate::spectra::Spectrum;

/// First row of a circulant matrix.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WireRow", into = "WireRow")]
pub struct CirculantRow {
    row: Vec<C64>,
}

#[derive(Serialize, Deserialize)]
struct WireRow {
    #[serde(with = "scalar::list")]
    row: Vec<C64>,
}

impl TryFrom<WireRow> for CirculantRow {
    type Error = Error;

    fn try_from(w: WireRow) -> Result<Self> {
        CirculantRow::new(w.row)
    }
}

impl From<CirculantRow> for WireRow {
    fn from(r: CirculantRow) -> Self {
        WireRow { row: r.row }
    }
}

impl CirculantRow {
    pub fn new(row: Vec<C64>) -> Result<Self> {
        if row.is_empty() {
            return Err(Error::invalid("a circulant row needs at least one entry"));
        }
        if row.iter().any(|z| !scalar::is_finite(*z)) {
            return Err(Error::invalid("circulant row entries must be finite"));
        }
        Ok(CirculantRow { row })
    }

    pub fn from_real(row: &[f64]) -> Result<Self> {
        Self::new(row.iter().map(|&x| re(x)).collect())
    }

    pub fn entries(&self) -> &[C64] {
        &self.row
    }

    pub fn len(&self) -> usize {
        self.row.len()
    }

    pub fn is_empty(&self) -> bool {
        self.row.is_empty()
    }

    /// Largest imaginary part in magnitude.
    pub fn max_imag(&self) -> f64 {
        self.row.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.row.iter().map(|z| z.re).collect()
    }

    /// Row `i` is the first row cyclically shifted right `i` times.
    pub fn to_matrix(&self) -> DenseMatrix {
        build_tau_matrix(&PermutationTuple::circulant(self.len()), &self.row)
            .expect("tuple order matches row length")
    }
}

/// `ω^e` with `ω = exp(2πi/n)`; exponent reduced mod `n` first so the angle stays small.
fn root_power(n: usize, e: usize) -> C64 {
    let e = e % n;
    C64::from_polar(1.0, 2.0 * PI * e as f64 / n as f64)
}

/// `σ_k = Σ_j r_j ω^{kj}`, by direct O(n²) evaluation.
pub fn circulant_spectrum(r: &CirculantRow) -> Spectrum {
    let n = r.len();
    let values = (0..n)
        .map(|k| {
            r.row
                .iter()
                .enumerate()
                .map(|(j, &rj)| rj * root_power(n, k * j))
                .sum()
        })
        .collect();
    Spectrum::new(values).expect("finite input gives finite output")
}

/// `r_j = (1/n) Σ_k σ_k ω^{-kj}`, the inverse of [`circulant_spectrum`].
///
/// The row is real iff `σ` is conjugate-closed under the pairing `k ↔ n - k`;
/// no realness is enforced here (see [`CirculantRow::max_imag`]).
pub fn circulant_from_spectrum(sigma: &Spectrum) -> CirculantRow {
    let n = sigma.len();
    let inv_n = 1.0 / n as f64;
    let row = (0..n)
        .map(|j| {
            sigma
                .values()
                .iter()
                .enumerate()
                .map(|(k, &s)| s * root_power(n, n - (k * j) % n))
                .sum::<C64>()
                * inv_n
        })
        .collect();
    CirculantRow { row }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GuoVariant {
    /// Perron entry `+2t`, the pair at positions `1`, `n-1` shifted by `±t·e^{±iθ}`.
    #[default]
    General,
    /// `n = 2m + 2`: Perron entry `+t`, the self-conjugate middle entry `±t`.
    EvenMiddle,
}

impl std::str::FromStr for GuoVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "general" => Ok(GuoVariant::General),
            "even-middle" => Ok(GuoVariant::EvenMiddle),
            other => Err(format!("unknown variant {other:?}")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GuoParams {
    pub t: f64,
    #[serde(default)]
    pub theta: f64,
    #[serde(default)]
    pub branch: Sign,
    #[serde(default)]
    pub variant: GuoVariant,
}

/// Applies a Guo perturbation to a spectrum in DFT-index order.
///
/// If `σ` is the spectrum of a nonnegative circulant, so is the result.
pub fn guo_perturb(sigma: &Spectrum, p: GuoParams) -> Result<Spectrum> {
    if !p.t.is_finite() || p.t < 0.0 || !p.theta.is_finite() {
        return Err(Error::invalid(format!("t must be finite and ≥ 0, got {}", p.t)));
    }
    let n = sigma.len();
    let b = p.branch.value();
    let mut v = sigma.values().to_vec();
    match p.variant {
        GuoVariant::General => {
            if n < 3 {
                return Err(Error::invalid(
                    "the general perturbation needs n ≥ 3 (distinct conjugate positions)",
                ));
            }
            let shift = C64::from_polar(b * p.t, p.theta);
            v[0] += re(2.0 * p.t);
            v[1] += shift;
            v[n - 1] += shift.conj();
        }
        GuoVariant::EvenMiddle => {
            if !n.is_multiple_of(2) {
                return Err(Error::invalid(format!(
                    "the even-middle perturbation needs n = 2m + 2, got n = {n}"
                )));
            }
            v[0] += re(p.t);
            v[n / 2] += re(b * p.t);
        }
    }
    Spectrum::new(v)
}

/// Tolerance for treating a computed row entry as nonnegative.
pub const ROW_NONNEG_TOL: f64 = 1e-12;

/// Clamps entries in `[-ROW_NONNEG_TOL, 0)` to zero; returns how many were clamped,
/// or the first index below the tolerance.
fn clamp_row(row: &mut [f64]) -> std::result::Result<usize, usize> {
    let mut clamped = 0;
    for (i, x) in row.iter_mut().enumerate() {
        if *x < -ROW_NONNEG_TOL {
            return Err(i);
        }
        if *x < 0.0 {
            *x = 0.0;
            clamped += 1;
        }
    }
    Ok(clamped)
}

/// Output of [`guo_pair_compose`].
#[derive(Clone, Debug)]
pub struct GuoPair {
    /// Perturbed `σ_{s,t₁}`.
    pub sigma_s: Spectrum,
    /// Perturbed `σ_{c,t₂}`.
    pub sigma_c: Spectrum,
    /// First rows of the perturbed circulants.
    pub row_s: Vec<f64>,
    pub row_c: Vec<f64>,
    pub matrix: DenseMatrix,
    /// Row entries within `-ROW_NONNEG_TOL` of zero that were set to zero.
    pub clamped: usize,
}

impl GuoPair {
    /// `σ_{s,t₁} ∪ ±γσ_{c,t₂}`.
    pub fn expected_spectrum(&self, p: CompositionParams) -> Spectrum {
        self.sigma_s.union(&self.sigma_c.scaled(p.factor()))
    }
}

/// Perturbs the spectra of two circulants `S`, `C` of order `n = 2m + 2`
/// (with `S`, `S + C`, `S - C` nonnegative) by the even-middle rule with
/// `t₁ ≥ |t₂|` and the same branch, and interleaves the perturbed circulants.
/// The result is nonnegative, permutative, and realizes the perturbed union.
pub fn guo_pair_compose(
    sigma1: &Spectrum,
    sigma2: &Spectrum,
    t1: f64,
    t2: f64,
    branch: Sign,
    p: CompositionParams,
) -> Result<GuoPair> {
    p.validate()?;
    let n = sigma1.len();
    if sigma2.len() != n {
        return Err(Error::dim(format!(
            "σ1 has {n} values but σ2 has {}",
            sigma2.len()
        )));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::invalid(format!("order must be n = 2m + 2, got {n}")));
    }
    if t1.is_nan() || t2.is_nan() || t1 < t2.abs() {
        return Err(Error::gate("t1>=|t2|", format!("t₁ = {t1} < |t₂| = {}", t2.abs())));
    }

    let tol = sigma1.default_tol().max(sigma2.default_tol());
    let r_s = circulant_from_spectrum(sigma1);
    let r_c = circulant_from_spectrum(sigma2);
    if r_s.max_imag() > tol || r_c.max_imag() > tol {
        return Err(Error::gate(
            "circulant-realness",
            "input spectra are not conjugate-closed in DFT order",
        ));
    }
    let (rs, rc) = (r_s.real_parts(), r_c.real_parts());
    let base_ok = (0..n).all(|j| {
        rs[j] >= -tol && rs[j] + rc[j] >= -tol && rs[j] - rc[j] >= -tol
    });
    if !base_ok {
        return Err(Error::gate(
            "nonnegative-circulants",
            "S, S + C and S - C must be nonnegative",
        ));
    }

    // t₂ may be negative; the perturbation of C is then taken with the
    // opposite sign, which the even-middle rule expresses linearly in t.
    let sigma_s = guo_perturb(
        sigma1,
        GuoParams {
            t: t1,
            theta: 0.0,
            branch,
            variant: GuoVariant::EvenMiddle,
        },
    )?;
    let sigma_c = even_middle_signed(sigma2, t2, branch);

    let ts = circulant_from_spectrum(&sigma_s);
    let tc = circulant_from_spectrum(&sigma_c);
    let (ts, tc) = (ts.real_parts(), tc.real_parts());
    let mut plus: Vec<f64> = ts.iter().zip(&tc).map(|(a, b)| a + b).collect();
    let mut minus: Vec<f64> = ts.iter().zip(&tc).map(|(a, b)| a - b).collect();
    let mut clamped = 0;
    for (name, row) in [("S̃ + C̃", &mut plus), ("S̃ - C̃", &mut minus)] {
        match clamp_row(row) {
            Ok(k) => clamped += k,
            Err(i) => {
                return Err(Error::gate(
                    "perturbed-nonnegativity",
                    format!("{name} has entry {} at position {i}", row[i]),
                ))
            }
        }
    }
    // rebuild the rows from the clamped sum/difference so |c̃| ≤ s̃ holds exactly
    let row_s: Vec<f64> = plus.iter().zip(&minus).map(|(a, b)| (a + b) / 2.0).collect();
    let row_c: Vec<f64> = plus.iter().zip(&minus).map(|(a, b)| (a - b) / 2.0).collect();
    let s_mat = CirculantRow::from_real(&row_s)?.to_matrix();
    let c_mat = CirculantRow::from_real(&row_c)?.to_matrix();
    let matrix = compose_even(&s_mat, &c_mat, p)?;
    Ok(GuoPair {
        sigma_s,
        sigma_c,
        row_s,
        row_c,
        matrix,
        clamped,
    })
}

/// Even-middle rule with a signed `t`: Perron entry `+t`, middle entry `±t`.
fn even_middle_signed(sigma: &Spectrum, t: f64, branch: Sign) -> Spectrum {
    let n = sigma.len();
    let mut v = sigma.values().to_vec();
    v[0] += re(t);
    v[n / 2] += re(branch.value() * t);
    Spectrum::new(v).expect("finite")
}

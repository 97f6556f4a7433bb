use serde::{Deserialize, Serialize};

use super::{first_majorization_failure, require_real, CompositionParams};
use crate::assignment::saturating_matching;
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::permutative::{paparella_matrix, paparella_vector};
use crate::scalar::{re, C64};
use crate::spectra::{is_suleimanova, Spectrum};

/// Interleaves `S` and `±γC` into 2×2 blocks
/// `[[(s ± γc)/2, (s ∓ γc)/2], [(s ∓ γc)/2, (s ± γc)/2]]`.
///
/// Requires real `S`, `C` with `|c_ij| ≤ s_ij`. The result is nonnegative
/// and realizes `σ(S) ∪ ±γσ(C)`.
pub fn compose_even(s: &DenseMatrix, c: &DenseMatrix, p: CompositionParams) -> Result<DenseMatrix> {
    p.validate()?;
    let n = s.require_square("S")?;
    s.same_shape(c)?;
    require_real(s, "S")?;
    require_real(c, "C")?;
    if let Some((i, j)) = first_majorization_failure(s, c, n, n) {
        return Err(Error::gate(
            "majorization",
            format!(
                "|c[{i},{j}]| = {} exceeds s[{i},{j}] = {}",
                c[(i, j)].re.abs(),
                s[(i, j)].re
            ),
        ));
    }
    Ok(interleave(s, c, p.factor()))
}

/// Same block layout with no realness or majorization gate, for arbitrary
/// complex `S`, `C` and factor `k` (the `±γ`). The spectrum identity
/// `σ = σ(S) ∪ kσ(C)` still holds; nonnegativity is not implied.
pub fn compose_even_unchecked(s: &DenseMatrix, c: &DenseMatrix, k: C64) -> Result<DenseMatrix> {
    let n = s.require_square("S")?;
    s.same_shape(c)?;
    Ok(DenseMatrix::from_fn(2 * n, 2 * n, |r, q| {
        let (i, j) = (r / 2, q / 2);
        let kc = k * c[(i, j)];
        if r % 2 == q % 2 {
            (s[(i, j)] + kc) * 0.5
        } else {
            (s[(i, j)] - kc) * 0.5
        }
    }))
}

fn interleave(s: &DenseMatrix, c: &DenseMatrix, k: f64) -> DenseMatrix {
    compose_even_unchecked(s, c, re(k)).expect("shapes checked by caller")
}

/// Recovers `S = a + b` and `C = a - b` from a matrix of 2×2 blocks `[[a, b], [b, a]]`.
pub fn extract_even(a: &DenseMatrix, tol: f64) -> Result<(DenseMatrix, DenseMatrix)> {
    let order = a.require_square("A")?;
    if order % 2 != 0 || order == 0 {
        return Err(Error::dim(format!("expected even order, got {order}")));
    }
    let n = order / 2;
    let mut s = DenseMatrix::zeros(n, n);
    let mut c = DenseMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let (aa, bb) = (a[(2 * i, 2 * j)], a[(2 * i, 2 * j + 1)]);
            let (b2, a2) = (a[(2 * i + 1, 2 * j)], a[(2 * i + 1, 2 * j + 1)]);
            let dev = (aa - a2).norm().max((bb - b2).norm());
            if dev > tol {
                return Err(Error::invalid(format!(
                    "block ({i},{j}) is not of the form [[a,b],[b,a]] (deviation {dev:e})"
                )));
            }
            s[(i, j)] = aa + bb;
            c[(i, j)] = aa - bb;
        }
    }
    Ok((s, c))
}

/// How entries of the two lists are paired for the index-wise condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pairing {
    /// Both lists sorted descending; the largest of each leads.
    #[default]
    Sorted,
    /// `σS` sorted; the arrangement of `σC` is searched for.
    Search,
    /// Both lists used in the order given, first entries leading.
    Given,
}

impl std::str::FromStr for Pairing {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "sorted" => Ok(Pairing::Sorted),
            "search" => Ok(Pairing::Search),
            "given" => Ok(Pairing::Given),
            other => Err(format!("unknown pairing {other:?}")),
        }
    }
}

/// Output of [`realize_pair_suleimanova`].
#[derive(Clone, Debug)]
pub struct PairRealization {
    /// Realizes `sigma_s`.
    pub s: DenseMatrix,
    /// Realizes `sigma_c`; permutatively equivalent to `s`.
    pub c: DenseMatrix,
    /// The composed matrix.
    pub matrix: DenseMatrix,
    /// `σS` in the order used (Perron value first).
    pub sigma_s: Vec<f64>,
    /// `σC` in the order used, aligned index-wise with `sigma_s`.
    pub sigma_c: Vec<f64>,
}

impl PairRealization {
    /// `σS ∪ ±γσC`.
    pub fn expected_spectrum(&self, p: CompositionParams) -> Spectrum {
        let k = p.factor();
        let values = self
            .sigma_s
            .iter()
            .copied()
            .chain(self.sigma_c.iter().map(|&m| k * m))
            .map(re)
            .collect();
        Spectrum::new(values).expect("nonempty finite")
    }
}

/// Permutative nonnegative realization of `σS ∪ ±γσC` for a Suleimanova `σS`
/// and a real `σC` satisfying the sum condition (cc1) and the index-wise
/// condition (cc2) under the chosen pairing.
///
/// Both factors are transposition-permutative matrices built by inverting the
/// spectrum map `x ↦ (Σx, x₁-x₂, …, x₁-xₙ)`, so they share one `τ` and the
/// result is permutative.
pub fn realize_pair_suleimanova(
    sigma_s: &Spectrum,
    sigma_c: &Spectrum,
    p: CompositionParams,
    pairing: Pairing,
) -> Result<PairRealization> {
    p.validate()?;
    let n = sigma_s.len();
    if sigma_c.len() != n {
        return Err(Error::dim(format!(
            "σS has {n} values but σC has {}",
            sigma_c.len()
        )));
    }
    if n < 2 {
        return Err(Error::invalid("lists need at least two values"));
    }
    let tol = sigma_s.default_tol().max(sigma_c.default_tol());
    if !is_suleimanova(sigma_s, tol) {
        return Err(Error::gate("suleimanova", "σS is not a Suleimanova list"));
    }
    if !sigma_c.is_real(tol) {
        return Err(Error::gate("real-list", "σC must be real"));
    }

    let lam: Vec<f64> = match pairing {
        Pairing::Given => {
            let v: Vec<f64> = sigma_s.values().iter().map(|z| z.re).collect();
            if v[1..].iter().any(|&x| x > v[0]) {
                return Err(Error::invalid(
                    "with pairing=given the Perron value of σS must come first",
                ));
            }
            v
        }
        Pairing::Sorted | Pairing::Search => sigma_s.real_sorted_desc(),
    };
    let sum_s: f64 = lam.iter().sum();
    let sum_c: f64 = sigma_c.values().iter().map(|z| z.re).sum();
    if sum_c > sum_s {
        return Err(Error::gate(
            "cc1",
            format!("Σμ = {sum_c} exceeds Σλ = {sum_s}"),
        ));
    }
    let lam_c: Vec<C64> = lam.iter().map(|&x| re(x)).collect();
    let x_s = paparella_vector(&lam_c);
    let mean_c = sum_c / n as f64;
    // cc2 at index i ≥ 1 (zero-based): |mean_c - μᵢ| ≤ x_s[i]
    let cc2_ok = |i: usize, mu: f64| (mean_c - mu).abs() <= x_s[i].re;

    let mu: Vec<f64> = match pairing {
        Pairing::Given => sigma_c.values().iter().map(|z| z.re).collect(),
        Pairing::Sorted => sigma_c.real_sorted_desc(),
        Pairing::Search => {
            let pool = sigma_c.real_sorted_desc();
            // left: indices 1..n of λ; right: every μ. The unmatched μ leads.
            let m = saturating_matching(n - 1, n, |l, r| cc2_ok(l + 1, pool[r])).ok_or_else(|| {
                Error::gate("cc2", "violated under every pairing of the non-Perron entries")
            })?;
            let mut used = vec![false; n];
            for &r in &m {
                used[r] = true;
            }
            let lead = (0..n).find(|&r| !used[r]).expect("one μ left over");
            std::iter::once(pool[lead])
                .chain(m.iter().map(|&r| pool[r]))
                .collect()
        }
    };
    let mu_c: Vec<C64> = mu.iter().map(|&x| re(x)).collect();
    let x_c = paparella_vector(&mu_c);
    if let Some(i) = (1..n).find(|&i| x_c[i].re.abs() > x_s[i].re) {
        return Err(Error::gate(
            "cc2",
            format!(
                "violated at index {}: |{} - ({})| > {}",
                i + 1,
                x_c[0].re,
                mu[i],
                x_s[i].re
            ),
        ));
    }
    if x_c[0].re.abs() > x_s[0].re {
        return Err(Error::gate(
            "cc1",
            format!("|Σμ| exceeds Σλ = {sum_s} (leading entries not majorized)"),
        ));
    }

    let s = paparella_matrix(&x_s)?;
    let c = paparella_matrix(&x_c)?;
    let matrix = compose_even(&s, &c, p)?;
    Ok(PairRealization {
        s,
        c,
        matrix,
        sigma_s: lam,
        sigma_c: mu,
    })
}

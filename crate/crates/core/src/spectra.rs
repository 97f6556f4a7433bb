//! Eigenvalue lists, the classical necessary conditions for realizability,
//! and Suleimanova classification.

use serde::{Deserialize, Serialize};

use crate::assignment::bottleneck_assignment;
use crate::error::{Error, Result};
use crate::scalar::{self, re, C64};

/// Ordered list of complex values with multiplicity.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "WireSpectrum", into = "WireSpectrum")]
pub struct Spectrum {
    values: Vec<C64>,
}

#[derive(Serialize, Deserialize)]
struct WireSpectrum {
    #[serde(with = "scalar::list")]
    values: Vec<C64>,
}

impl TryFrom<WireSpectrum> for Spectrum {
    type Error = Error;

    fn try_from(w: WireSpectrum) -> Result<Self> {
        Spectrum::new(w.values)
    }
}

impl From<Spectrum> for WireSpectrum {
    fn from(s: Spectrum) -> Self {
        WireSpectrum { values: s.values }
    }
}

impl Spectrum {
    pub fn new(values: Vec<C64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::invalid("a spectrum needs at least one value"));
        }
        if values.iter().any(|z| !scalar::is_finite(*z)) {
            return Err(Error::invalid("spectrum values must be finite"));
        }
        Ok(Spectrum { values })
    }

    pub fn from_real(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&x| re(x)).collect())
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<C64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn spectral_radius(&self) -> f64 {
        scalar::max_abs(&self.values)
    }

    pub fn sum(&self) -> C64 {
        self.values.iter().sum()
    }

    /// `1e-9 · max(1, ρ(σ))`.
    pub fn default_tol(&self) -> f64 {
        1e-9 * self.spectral_radius().max(1.0)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.values.iter().all(|z| z.im.abs() <= tol)
    }

    /// Real parts sorted descending. Caller is responsible for realness.
    pub fn real_sorted_desc(&self) -> Vec<f64> {
        let mut v: Vec<f64> = self.values.iter().map(|z| z.re).collect();
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    /// Concatenation `self ∪ other` as multisets.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Spectrum { values }
    }

    pub fn scaled(&self, k: f64) -> Spectrum {
        Spectrum {
            values: self.values.iter().map(|z| z * k).collect(),
        }
    }

    pub fn power_sum(&self, k: u32) -> C64 {
        self.values.iter().map(|z| z.powu(k)).sum()
    }
}

/// Bottleneck-optimal pairing between two equal-length lists.
/// Returns `(assign, distances)` with `assign[i]` the index in `b` matched to `a[i]`.
pub(crate) fn match_lists(a: &[C64], b: &[C64]) -> (Vec<usize>, Vec<f64>) {
    let cost: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| (x - y).norm()).collect())
        .collect();
    let assign = bottleneck_assignment(&cost);
    let dist = assign.iter().enumerate().map(|(i, &j)| cost[i][j]).collect();
    (assign, dist)
}

/// True iff conjugating every value yields the same multiset within `tol`.
pub fn is_conjugate_closed(sigma: &Spectrum, tol: f64) -> bool {
    let conj: Vec<C64> = sigma.values.iter().map(|z| z.conj()).collect();
    let (_, dist) = match_lists(&sigma.values, &conj);
    dist.iter().all(|&d| d <= tol)
}

/// One power sum `s_k = Σ λᵢᵏ` and whether it is (numerically) a nonnegative real.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PowerSum {
    pub k: u32,
    #[serde(serialize_with = "ser_c64")]
    pub value: C64,
    pub nonnegative: bool,
}

fn ser_c64<S: serde::Serializer>(z: &C64, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeTuple;
    let mut t = s.serialize_tuple(2)?;
    t.serialize_element(&z.re)?;
    t.serialize_element(&z.im)?;
    t.end()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NecessaryReport {
    pub perron_in_list: bool,
    pub conjugate_closed: bool,
    pub power_sums: Vec<PowerSum>,
    /// `(k, m)` pairs with `s_k^m > n^{m-1} s_{km}`.
    pub jll_violations: Vec<(u32, u32)>,
}

impl NecessaryReport {
    pub fn all_passed(&self) -> bool {
        self.perron_in_list
            && self.conjugate_closed
            && self.power_sums.iter().all(|p| p.nonnegative)
            && self.jll_violations.is_empty()
    }

    /// Name of the first failed condition, if any.
    pub fn first_failure(&self) -> Option<String> {
        if !self.perron_in_list {
            return Some("perron: spectral radius is not attained by a nonnegative real value".into());
        }
        if !self.conjugate_closed {
            return Some("conjugate-closure: list is not closed under conjugation".into());
        }
        if let Some(p) = self.power_sums.iter().find(|p| !p.nonnegative) {
            return Some(format!("power-sum: s_{} = {} is not nonnegative", p.k, p.value));
        }
        self.jll_violations
            .first()
            .map(|(k, m)| format!("jll: s_{k}^{m} > n^{} s_{}", m - 1, k * m))
    }
}

/// Evaluates the necessary conditions for `sigma` to be the spectrum of a nonnegative matrix.
///
/// `tol` is an absolute tolerance on the scale of the eigenvalues; comparisons
/// involving `s_k` use `tol · max(1, ρ)^{k-1} · n` so they stay meaningful as the
/// powers grow.
pub fn check_necessary(sigma: &Spectrum, k_max: u32, m_max: u32, tol: f64) -> Result<NecessaryReport> {
    if k_max == 0 || m_max == 0 {
        return Err(Error::invalid("K and M must be positive"));
    }
    let n = sigma.len() as f64;
    let rho = sigma.spectral_radius();
    let vals = sigma.values();

    let perron_in_list = vals
        .iter()
        .any(|z| z.im.abs() <= tol && z.re >= -tol && z.re >= rho - tol);

    let conjugate_closed = is_conjugate_closed(sigma, tol);

    let power_tol = |k: u32| tol * rho.max(1.0).powi(k as i32 - 1) * n;
    let power_sums = (1..=k_max)
        .map(|k| {
            let value = sigma.power_sum(k);
            let t = power_tol(k);
            PowerSum {
                k,
                value,
                nonnegative: value.re >= -t && value.im.abs() <= t,
            }
        })
        .collect();

    let mut jll_violations = Vec::new();
    for k in 1..=k_max {
        let sk = sigma.power_sum(k).re;
        for m in 1..=m_max {
            let skm = sigma.power_sum(k * m).re;
            let lhs = sk.powi(m as i32);
            let rhs = n.powi(m as i32 - 1) * skm;
            if lhs > rhs + power_tol(k * m) * n.powi(m as i32 - 1) {
                jll_violations.push((k, m));
            }
        }
    }

    Ok(NecessaryReport {
        perron_in_list,
        conjugate_closed,
        power_sums,
        jll_violations,
    })
}

/// Real, exactly one positive value, all others `≤ tol`, and nonnegative sum.
/// Input order is irrelevant.
pub fn is_suleimanova(sigma: &Spectrum, tol: f64) -> bool {
    if !sigma.is_real(tol) {
        return false;
    }
    let sorted = sigma.real_sorted_desc();
    let sum: f64 = sorted.iter().sum();
    sorted[0] > 0.0 && sorted[1..].iter().all(|&x| x <= tol) && sum >= -tol
}

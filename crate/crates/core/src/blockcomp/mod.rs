//! Block-interleaving constructions.
//!
//! A matrix built from 2×2 blocks `[[a, b], [b, a]]` has spectrum
//! `σ(S) ∪ σ(C)` where `S = (a + b)` and `C = (a - b)` entrywise. Choosing the
//! blocks from a nonnegative `S` and a `C` with `|c_ij| ≤ s_ij` gives a
//! nonnegative matrix of order `2n` realizing `σ(S) ∪ ±γσ(C)`. The odd variant
//! appends one bordering row and column for order `2n + 1`.

mod even;
mod odd;

pub use even::{
    compose_even, compose_even_unchecked, extract_even, realize_pair_suleimanova, Pairing,
    PairRealization,
};
pub use odd::{compose_odd, compose_odd_sym, extract_odd, odd_sym_factors, Border, OddTail};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompositionParams {
    pub gamma: f64,
    #[serde(default)]
    pub sign: Sign,
}

impl Default for CompositionParams {
    fn default() -> Self {
        CompositionParams {
            gamma: 1.0,
            sign: Sign::Plus,
        }
    }
}

impl CompositionParams {
    pub fn new(gamma: f64, sign: Sign) -> Result<Self> {
        let p = CompositionParams { gamma, sign };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.gamma) {
            return Err(Error::gate(
                "gamma-range",
                format!("γ = {} is outside [0, 1]", self.gamma),
            ));
        }
        Ok(())
    }

    /// `±γ` as a real factor.
    pub fn factor(&self) -> f64 {
        self.sign.value() * self.gamma
    }
}

fn require_real(m: &DenseMatrix, what: &str) -> Result<()> {
    if !m.is_real(0.0) {
        return Err(Error::invalid(format!("{what} must be real")));
    }
    Ok(())
}

/// `|C[i,j]| ≤ S[i,j]` everywhere, i.e. `S`, `S + C` and `S - C` are all nonnegative.
pub fn check_majorization(s: &DenseMatrix, c: &DenseMatrix) -> Result<bool> {
    s.require_square("S")?;
    s.same_shape(c)?;
    require_real(s, "S")?;
    require_real(c, "C")?;
    Ok(first_majorization_failure(s, c, s.rows(), s.cols()).is_none())
}

/// First `(i, j)` in the leading `rows`x`cols` window with `|c_ij| > s_ij`.
fn first_majorization_failure(
    s: &DenseMatrix,
    c: &DenseMatrix,
    rows: usize,
    cols: usize,
) -> Option<(usize, usize)> {
    (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .find(|&(i, j)| c[(i, j)].re.abs() > s[(i, j)].re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn majorization_examples() {
        let s = DenseMatrix::from_real_rows(&[[2., 2., 1.], [1., 2., 2.], [2., 1., 2.]]);
        let c = DenseMatrix::from_real_rows(&[[0., 0., 1.], [1., 0., 0.], [0., 1., 0.]]);
        assert!(check_majorization(&s, &c).unwrap());
        let one = DenseMatrix::from_real_rows(&[[1.0]]);
        assert!(check_majorization(&one, &one).unwrap());
        let zero = DenseMatrix::from_real_rows(&[[0.0]]);
        assert!(!check_majorization(&zero, &one).unwrap());
        assert!(check_majorization(&s, &one).is_err());
    }

    #[test]
    fn gamma_out_of_range_is_rejected() {
        assert!(CompositionParams::new(1.5, Sign::Plus).is_err());
        assert!(CompositionParams::new(-0.1, Sign::Minus).is_err());
        assert_eq!(CompositionParams::new(0.5, Sign::Minus).unwrap().factor(), -0.5);
    }
}

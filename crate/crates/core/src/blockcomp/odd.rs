use serde::{Deserialize, Serialize};

use super::{first_majorization_failure, require_real, CompositionParams};
use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::re;

/// How the last row of `S` is spread across the interleaved last row:
/// entry `i` of that row is split into the pair `(phi1[i], phi2[i])`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OddTail {
    pub phi1: Vec<f64>,
    pub phi2: Vec<f64>,
}

impl OddTail {
    /// Halves every entry: `phi1 = phi2 = S[n, 0..n] / 2`.
    pub fn equal_split(s: &DenseMatrix) -> Self {
        let n = s.rows() - 1;
        let half: Vec<f64> = (0..n).map(|j| s[(n, j)].re / 2.0).collect();
        OddTail {
            phi1: half.clone(),
            phi2: half,
        }
    }
}

/// Bordering data of the symmetric-capable odd construction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Border {
    /// Last column, each entry duplicated over its block row.
    pub x: Vec<f64>,
    /// Last row, each entry duplicated over its block column.
    pub y: Vec<f64>,
    /// Corner.
    pub u: f64,
}

/// Order `2n+1` matrix from `S` of order `n+1` and `C` of order `n`.
///
/// The leading `2n` part is the even interleaving of the leading `n`x`n` part
/// of `S` with `±γC`; the last column repeats `S[i, n]` down each block row and
/// the last row is `(phi1[0], phi2[0], …, phi1[n-1], phi2[n-1], S[n, n])`.
/// The spectrum is `σ(S) ∪ ±γσ(C)`. `tail = None` uses [`OddTail::equal_split`].
pub fn compose_odd(
    s: &DenseMatrix,
    c: &DenseMatrix,
    p: CompositionParams,
    tail: Option<&OddTail>,
) -> Result<DenseMatrix> {
    p.validate()?;
    let n1 = s.require_square("S")?;
    let n = c.require_square("C")?;
    if n1 != n + 1 {
        return Err(Error::dim(format!(
            "S must be one order larger than C (got {n1} and {n})"
        )));
    }
    require_real(s, "S")?;
    require_real(c, "C")?;
    if let Some((i, j)) = first_majorization_failure(s, c, n, n) {
        return Err(Error::gate(
            "majorization",
            format!("|c[{i},{j}]| exceeds s[{i},{j}]"),
        ));
    }
    if let Some(i) = (0..=n).find(|&i| s[(i, n)].re < 0.0) {
        return Err(Error::gate(
            "last-column",
            format!("s[{i},{n}] = {} is negative", s[(i, n)].re),
        ));
    }
    let default_tail;
    let tail = match tail {
        Some(t) => t,
        None => {
            default_tail = OddTail::equal_split(s);
            &default_tail
        }
    };
    if tail.phi1.len() != n || tail.phi2.len() != n {
        return Err(Error::dim(format!("split vectors must have length {n}")));
    }
    for i in 0..n {
        let (a, b, target) = (tail.phi1[i], tail.phi2[i], s[(n, i)].re);
        if a < 0.0 || b < 0.0 {
            return Err(Error::gate("split", format!("φ at position {i} is negative")));
        }
        if (a + b - target).abs() > 1e-12 * target.abs().max(1.0) {
            return Err(Error::gate(
                "split",
                format!("φ1[{i}] + φ2[{i}] = {} but s[{n},{i}] = {target}", a + b),
            ));
        }
    }

    let k = p.factor();
    let order = 2 * n + 1;
    let mut m = DenseMatrix::zeros(order, order);
    for r in 0..2 * n {
        for q in 0..2 * n {
            let (i, j) = (r / 2, q / 2);
            let kc = c[(i, j)] * k;
            m[(r, q)] = if r % 2 == q % 2 {
                (s[(i, j)] + kc) * 0.5
            } else {
                (s[(i, j)] - kc) * 0.5
            };
        }
        m[(r, 2 * n)] = s[(r / 2, n)];
    }
    for j in 0..n {
        m[(2 * n, 2 * j)] = re(tail.phi1[j]);
        m[(2 * n, 2 * j + 1)] = re(tail.phi2[j]);
    }
    m[(2 * n, 2 * n)] = s[(n, n)];
    Ok(m)
}

/// The factors `S = [[A + B, x], [2y, u]]` and `C = A - B` whose spectra
/// make up that of [`compose_odd_sym`].
pub fn odd_sym_factors(
    a: &DenseMatrix,
    b: &DenseMatrix,
    border: &Border,
) -> Result<(DenseMatrix, DenseMatrix)> {
    let n = a.require_square("A")?;
    a.same_shape(b)?;
    if border.x.len() != n || border.y.len() != n {
        return Err(Error::dim(format!("x and y must have length {n}")));
    }
    let sum = a.add(b)?;
    let s = DenseMatrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
        (true, true) => sum[(i, j)],
        (true, false) => re(border.x[i]),
        (false, true) => re(2.0 * border.y[j]),
        (false, false) => re(border.u),
    });
    Ok((s, a.sub(b)?))
}

/// Order `2n+1` matrix with blocks `[[a_ij, b_ij], [b_ij, a_ij]]`, last column
/// `(x₀, x₀, …, xₙ₋₁, xₙ₋₁)`, last row `(y₀, y₀, …)` and corner `u`.
///
/// Nonnegative when `A`, `B`, `x`, `y`, `u` are; symmetric when `A`, `B` are
/// symmetric and `x = y`. Spectrum is `σ(S) ∪ σ(C)` with the factors of
/// [`odd_sym_factors`].
pub fn compose_odd_sym(a: &DenseMatrix, b: &DenseMatrix, border: &Border) -> Result<DenseMatrix> {
    let n = a.require_square("A")?;
    a.same_shape(b)?;
    require_real(a, "A")?;
    require_real(b, "B")?;
    if border.x.len() != n || border.y.len() != n {
        return Err(Error::dim(format!("x and y must have length {n}")));
    }
    if !a.is_nonnegative(0.0) || !b.is_nonnegative(0.0) {
        return Err(Error::gate("nonnegative-blocks", "A and B must be entrywise nonnegative"));
    }
    if border.x.iter().chain(&border.y).any(|&v| v < 0.0) || border.u < 0.0 {
        return Err(Error::gate("nonnegative-border", "x, y and u must be nonnegative"));
    }
    let order = 2 * n + 1;
    Ok(DenseMatrix::from_fn(order, order, |r, q| {
        match (r < 2 * n, q < 2 * n) {
            (true, true) => {
                let (i, j) = (r / 2, q / 2);
                if r % 2 == q % 2 {
                    a[(i, j)]
                } else {
                    b[(i, j)]
                }
            }
            (true, false) => re(border.x[r / 2]),
            (false, true) => re(border.y[q / 2]),
            (false, false) => re(border.u),
        }
    }))
}

/// Recovers `S` (order `n+1`) and `C` (order `n`) from an order `2n+1` matrix
/// with 2×2 blocks `[[a, b], [b, a]]`, paired last-column entries and an
/// arbitrary last row.
pub fn extract_odd(a: &DenseMatrix, tol: f64) -> Result<(DenseMatrix, DenseMatrix)> {
    let order = a.require_square("A")?;
    if order % 2 == 0 {
        return Err(Error::dim(format!("expected odd order, got {order}")));
    }
    let n = order / 2;
    let mut s = DenseMatrix::zeros(n + 1, n + 1);
    let mut c = DenseMatrix::zeros(n, n);
    let check = |dev: f64, what: String| -> Result<()> {
        if dev > tol {
            Err(Error::invalid(format!("{what} breaks the block pattern (deviation {dev:e})")))
        } else {
            Ok(())
        }
    };
    for i in 0..n {
        for j in 0..n {
            let (aa, bb) = (a[(2 * i, 2 * j)], a[(2 * i, 2 * j + 1)]);
            let (b2, a2) = (a[(2 * i + 1, 2 * j)], a[(2 * i + 1, 2 * j + 1)]);
            check((aa - a2).norm().max((bb - b2).norm()), format!("block ({i},{j})"))?;
            s[(i, j)] = aa + bb;
            c[(i, j)] = aa - bb;
        }
        let (top, bottom) = (a[(2 * i, 2 * n)], a[(2 * i + 1, 2 * n)]);
        check((top - bottom).norm(), format!("last-column pair {i}"))?;
        s[(i, n)] = top;
        s[(n, i)] = a[(2 * n, 2 * i)] + a[(2 * n, 2 * i + 1)];
    }
    s[(n, n)] = a[(2 * n, 2 * n)];
    Ok((s, c))
}

//! Characteristic polynomial by the Faddeev–LeVerrier recurrence.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::C64;

/// Largest order accepted by [`charpoly_oracle`]; the recurrence loses
/// accuracy quickly beyond this.
pub const ORACLE_MAX_ORDER: usize = 12;

/// Coefficients of `det(λI - A)` in descending powers, leading 1.
///
/// Uses only matrix products and traces, so it shares no code path with the
/// QR eigenvalue solver.
pub fn charpoly_oracle(a: &DenseMatrix) -> Result<Vec<C64>> {
    let n = a.require_square("A")?;
    if n > ORACLE_MAX_ORDER {
        return Err(Error::invalid(format!(
            "characteristic-polynomial oracle limited to n ≤ {ORACLE_MAX_ORDER}, got {n}"
        )));
    }
    let mut coeffs = vec![C64::default(); n + 1];
    coeffs[0] = C64::new(1.0, 0.0);
    let mut m = DenseMatrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a.matmul(&m)?;
        for i in 0..n {
            next[(i, i)] += coeffs[k - 1];
        }
        m = next;
        coeffs[k] = -a.matmul(&m)?.trace() / k as f64;
    }
    Ok(coeffs)
}

/// Horner evaluation of a descending coefficient list.
pub fn poly_eval(coeffs: &[C64], z: C64) -> C64 {
    coeffs.iter().fold(C64::default(), |acc, &c| acc * z + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    /// Cofactor expansion of `det(zI - A)`; exponential, fine for n ≤ 5.
    fn det_cofactor(m: &[Vec<C64>]) -> C64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<C64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
                m[0][j] * det_cofactor(&minor) * sign
            })
            .sum()
    }

    fn char_det(a: &DenseMatrix, z: C64) -> C64 {
        let n = a.rows();
        let m: Vec<Vec<C64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { z - a[(i, j)] } else { -a[(i, j)] }).collect())
            .collect();
        det_cofactor(&m)
    }

    #[test]
    fn swap_matrix() {
        let a = DenseMatrix::from_real_rows(&[[0., 1.], [1., 0.]]);
        assert_eq!(charpoly_oracle(&a).unwrap(), vec![re(1.), re(0.), re(-1.)]);
    }

    #[test]
    fn three_by_three_circulant() {
        let a = DenseMatrix::from_real_rows(&[[2., 2., 1.], [1., 2., 2.], [2., 1., 2.]]);
        let c = charpoly_oracle(&a).unwrap();
        assert_eq!(c, vec![re(1.), re(-6.), re(6.), re(-5.)]);
        for z in [re(0.0), re(1.5), C64::new(-0.5, 2.0)] {
            assert!((poly_eval(&c, z) - char_det(&a, z)).norm() < 1e-12);
        }
    }

    #[test]
    fn agrees_with_cofactor_expansion() {
        let a = DenseMatrix::from_fn(5, 5, |i, j| C64::new((i * 3 + j) as f64 % 7.0 - 3.0, (i + 2 * j) as f64 % 3.0 - 1.0));
        let c = charpoly_oracle(&a).unwrap();
        for z in [re(0.0), re(2.0), C64::new(1.0, -1.0)] {
            let (p, d) = (poly_eval(&c, z), char_det(&a, z));
            assert!((p - d).norm() <= 1e-10 * d.norm().max(1.0), "{p} vs {d}");
        }
    }

    #[test]
    fn rejects_large_order() {
        assert!(charpoly_oracle(&DenseMatrix::identity(13)).is_err());
        assert!(charpoly_oracle(&DenseMatrix::identity(12)).is_ok());
    }
}

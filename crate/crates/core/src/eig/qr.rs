//! Complex Hessenberg reduction followed by single-shift QR iteration.

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::C64;

/// Iterations allowed per eigenvalue before giving up.
const ITER_PER_EIGENVALUE: usize = 60;

/// Dense square work array, row-major.
struct Work {
    n: usize,
    a: Vec<C64>,
}

impl Work {
    #[inline]
    fn at(&self, i: usize, j: usize) -> C64 {
        self.a[i * self.n + j]
    }

    #[inline]
    fn at_mut(&mut self, i: usize, j: usize) -> &mut C64 {
        &mut self.a[i * self.n + j]
    }
}

/// Householder reduction to upper Hessenberg form (similarity, in place).
fn hessenberg(w: &mut Work) {
    let n = w.n;
    for k in 0..n.saturating_sub(2) {
        let mut v: Vec<C64> = (k + 1..n).map(|i| w.at(i, k)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm == 0.0 {
            continue;
        }
        let phase = if v[0].norm() == 0.0 {
            C64::new(1.0, 0.0)
        } else {
            v[0] / v[0].norm()
        };
        // v = x + e^{i arg x0} ‖x‖ e1 avoids cancellation
        v[0] += phase * norm;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut v {
            *z /= vnorm;
        }
        // left: rows k+1.., P = I - 2 v v*
        for j in k..n {
            let dot: C64 = v
                .iter()
                .enumerate()
                .map(|(r, vr)| vr.conj() * w.at(k + 1 + r, j))
                .sum();
            for (r, vr) in v.iter().enumerate() {
                *w.at_mut(k + 1 + r, j) -= vr * dot * 2.0;
            }
        }
        // right: columns k+1..
        for i in 0..n {
            let dot: C64 = v
                .iter()
                .enumerate()
                .map(|(r, vr)| w.at(i, k + 1 + r) * vr)
                .sum();
            for (r, vr) in v.iter().enumerate() {
                *w.at_mut(i, k + 1 + r) -= dot * vr.conj() * 2.0;
            }
        }
        for i in k + 2..n {
            *w.at_mut(i, k) = C64::default();
        }
    }
}

/// Rotation `[[c, s], [-s̄, c]]` with real `c`, mapping `(a, b)` to `(r, 0)`.
fn givens(a: C64, b: C64) -> (f64, C64) {
    let (na, nb) = (a.norm(), b.norm());
    if nb == 0.0 {
        return (1.0, C64::default());
    }
    if na == 0.0 {
        return (0.0, b.conj() / nb);
    }
    let r = na.hypot(nb);
    (na / r, (a / na) * b.conj() / r)
}

/// Eigenvalue of `[[a, b], [c, d]]` closer to `d`.
fn wilkinson(a: C64, b: C64, c: C64, d: C64) -> C64 {
    let half = (a - d) * 0.5;
    let disc = (half * half + b * c).sqrt();
    let mid = (a + d) * 0.5;
    let (l1, l2) = (mid + disc, mid - disc);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// One explicitly shifted QR step on the window `lo..=hi`.
fn qr_step(w: &mut Work, lo: usize, hi: usize, mu: C64) {
    for i in lo..=hi {
        *w.at_mut(i, i) -= mu;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(w.at(k, k), w.at(k + 1, k));
        for j in k..=hi {
            let (x, y) = (w.at(k, j), w.at(k + 1, j));
            *w.at_mut(k, j) = x * c + s * y;
            *w.at_mut(k + 1, j) = -s.conj() * x + y * c;
        }
        *w.at_mut(k + 1, k) = C64::default();
        rots.push((c, s));
    }
    for (idx, &(c, s)) in rots.iter().enumerate() {
        let k = lo + idx;
        for i in lo..=(k + 1).min(hi) {
            let (x, y) = (w.at(i, k), w.at(i, k + 1));
            *w.at_mut(i, k) = x * c + y * s.conj();
            *w.at_mut(i, k + 1) = -x * s + y * c;
        }
    }
    for i in lo..=hi {
        *w.at_mut(i, i) += mu;
    }
}

/// All eigenvalues of a square matrix, with multiplicity, in deflation order.
pub fn eigenvalues_raw(a: &DenseMatrix) -> Result<Vec<C64>> {
    let n = a.require_square("A")?;
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut w = Work {
        n,
        a: a.entries().to_vec(),
    };
    hessenberg(&mut w);

    let norm = a.frobenius_norm();
    let eps = f64::EPSILON;
    let mut found = Vec::with_capacity(n);
    let mut hi = n - 1;
    let mut iter = 0;
    let mut total = 0;
    loop {
        if hi == 0 {
            found.push(w.at(0, 0));
            break;
        }
        // locate the start of the unreduced block ending at `hi`
        let mut lo = hi;
        while lo > 0 {
            let scale = w.at(lo - 1, lo - 1).norm() + w.at(lo, lo).norm();
            let scale = if scale == 0.0 { norm } else { scale };
            if w.at(lo, lo - 1).norm() <= eps * scale {
                *w.at_mut(lo, lo - 1) = C64::default();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            found.push(w.at(hi, hi));
            hi -= 1;
            iter = 0;
            continue;
        }
        if iter >= ITER_PER_EIGENVALUE {
            return Err(Error::NonConvergence {
                iterations: total,
                order: n,
                partial: found,
            });
        }
        iter += 1;
        total += 1;
        let mu = if iter % 10 == 0 {
            // exceptional shift breaks cycles of the Wilkinson shift
            let sub = w.at(hi, hi - 1).norm() + if hi >= 2 { w.at(hi - 1, hi - 2).norm() } else { 0.0 };
            w.at(hi, hi) + C64::new(0.75 * sub, 0.4375 * sub)
        } else {
            wilkinson(
                w.at(hi - 1, hi - 1),
                w.at(hi - 1, hi),
                w.at(hi, hi - 1),
                w.at(hi, hi),
            )
        };
        qr_step(&mut w, lo, hi, mu);
    }
    found.reverse();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    fn sorted_re(mut v: Vec<C64>) -> Vec<f64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re));
        v.into_iter().map(|z| z.re).collect()
    }

    #[test]
    fn diagonal_and_triangular() {
        let a = DenseMatrix::from_real_rows(&[[3., 1., 4.], [0., -2., 5.], [0., 0., 7.]]);
        let ev = sorted_re(eigenvalues_raw(&a).unwrap());
        assert_eq!(ev, vec![-2., 3., 7.]);
    }

    #[test]
    fn rotation_has_imaginary_pair() {
        let a = DenseMatrix::from_real_rows(&[[0., -1.], [1., 0.]]);
        let mut ev = eigenvalues_raw(&a).unwrap();
        ev.sort_by(|a, b| a.im.total_cmp(&b.im));
        assert!((ev[0] - C64::new(0., -1.)).norm() < 1e-14);
        assert!((ev[1] - C64::new(0., 1.)).norm() < 1e-14);
    }

    #[test]
    fn permutation_cycle_converges() {
        // cyclic shift: plain QR stalls without exceptional shifts
        let n = 7;
        let a = DenseMatrix::from_fn(n, n, |i, j| if j == (i + 1) % n { re(1.0) } else { re(0.0) });
        let ev = eigenvalues_raw(&a).unwrap();
        assert_eq!(ev.len(), n);
        for z in ev {
            assert!((z.powu(n as u32) - re(1.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn one_by_one_and_zero() {
        assert_eq!(eigenvalues_raw(&DenseMatrix::from_real_rows(&[[4.5]])).unwrap(), vec![re(4.5)]);
        let z = DenseMatrix::zeros(4, 4);
        assert!(eigenvalues_raw(&z).unwrap().iter().all(|v| v.norm() == 0.0));
    }
}

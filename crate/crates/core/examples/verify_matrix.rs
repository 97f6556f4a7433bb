//! Eigenvalues, characteristic polynomial and spectrum matching for a given matrix.

use niep::{charpoly_oracle, eigenvalues, paparella_matrix, spectra_match, verify, DenseMatrix, Spectrum, C64};

fn main() -> niep::Result<()> {
    let a = DenseMatrix::from_real_rows(&[
        [1., 0., 0.5, 0.5, 0.],
        [0., 1., 0.5, 0.5, 0.],
        [0.5, 0.5, 1.5, 0.5, 1.],
        [0.5, 0.5, 0.5, 1.5, 1.],
        [0., 0., 0.5, 0.5, 1.],
    ]);
    let expected = Spectrum::from_real(&[3.0, 0.0, 1.0, 1.0, 1.0])?;
    let report = verify(&a, &expected, None)?;
    println!("passed {} with max distance {:.1e}", report.passed, report.max_distance);
    for (i, j, d) in &report.pairs {
        println!("  expected[{i}] ↔ computed[{j}]  {d:.1e}");
    }

    let x: Vec<C64> = [1.0, 2.0, 3.0, 4.0].iter().map(|&v| C64::new(v, 0.0)).collect();
    let p = paparella_matrix(&x)?;
    let coeffs: Vec<f64> = charpoly_oracle(&p)?.iter().map(|c| c.re).collect();
    println!("charpoly of X(1,2,3,4): {coeffs:?}");

    let computed = eigenvalues(&p)?;
    let m = spectra_match(&Spectrum::from_real(&[10.0, -1.0, -2.0, -3.0])?, &computed, 1e-9)?;
    println!("matches (10, -1, -2, -3): {}", m.passed);
    Ok(())
}

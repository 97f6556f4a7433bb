//! Circulant spectra in both directions.

use niep::cli::{emit, Format};
use niep::{circulant_from_spectrum, circulant_spectrum, CirculantRow, Spectrum, C64};

fn main() -> niep::Result<()> {
    let row = CirculantRow::from_real(&[4.0, 3.0, 5.0])?;
    print!("{}", emit(&row.to_matrix(), Format::Pretty));
    let sigma = circulant_spectrum(&row);
    for z in sigma.values() {
        println!("  {:+.6} {:+.6}i", z.re, z.im);
    }

    let h = 3f64.sqrt();
    let back = circulant_from_spectrum(&Spectrum::new(vec![
        C64::new(12.0, 0.0),
        C64::new(0.0, -h),
        C64::new(0.0, h),
    ])?);
    println!("row from spectrum: {:?} (max |Im| {:.1e})", back.real_parts(), back.max_imag());
    Ok(())
}

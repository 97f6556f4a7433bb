//! Guo perturbations of circulant spectra, single and paired.

use niep::{
    circulant_from_spectrum, guo_pair_compose, guo_perturb, verify, CompositionParams, GuoParams,
    GuoVariant, Sign, Spectrum, C64,
};

fn main() -> niep::Result<()> {
    let h = 3f64.sqrt() / 2.0;
    let sigma = Spectrum::new(vec![C64::new(5.0, 0.0), C64::new(0.5, h), C64::new(0.5, -h)])?;
    let params = GuoParams { t: 1.0, theta: 0.3, branch: Sign::Plus, variant: GuoVariant::General };
    let perturbed = guo_perturb(&sigma, params)?;
    println!("before: {:?}", circulant_from_spectrum(&sigma).real_parts());
    println!("after:  {:?}", circulant_from_spectrum(&perturbed).real_parts());

    let s1 = Spectrum::new(vec![C64::new(6.0, 0.0), C64::new(1.0, -1.0), C64::new(0.0, 0.0), C64::new(1.0, 1.0)])?;
    let s2 = Spectrum::from_real(&[1.0, -1.0, 1.0, -1.0])?;
    let p = CompositionParams::default();
    let pair = guo_pair_compose(&s1, &s2, 1.0, 0.5, Sign::Plus, p)?;
    println!("row S: {:?}", pair.row_s);
    println!("row C: {:?}", pair.row_c);
    let report = verify(&pair.matrix, &pair.expected_spectrum(p), None)?;
    println!("order {} matrix, nonnegative {}, spectrum ok {}", pair.matrix.rows(), pair.matrix.is_nonnegative(0.0), report.passed);
    Ok(())
}

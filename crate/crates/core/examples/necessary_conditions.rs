//! Screen candidate lists against the necessary conditions.

use niep::{check_necessary, Spectrum, C64};

fn main() -> niep::Result<()> {
    let lists = [
        ("suleimanova", Spectrum::from_real(&[3.0, -1.0, -1.0])?),
        ("no perron value", Spectrum::from_real(&[1.0, -2.0])?),
        ("negative trace", Spectrum::from_real(&[1.0, -1.0, -1.0])?),
        ("not conjugate closed", Spectrum::new(vec![C64::new(2.0, 0.0), C64::new(0.0, 1.0)])?),
    ];
    for (name, sigma) in &lists {
        let report = check_necessary(sigma, 6, 4, 1e-12)?;
        match report.first_failure() {
            None => println!("{name}: all conditions hold"),
            Some(why) => println!("{name}: {why}"),
        }
    }
    Ok(())
}

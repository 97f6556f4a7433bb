//! Realize a Suleimanova list with a transposition-permutative matrix.

use niep::cli::{emit, Format};
use niep::{detect_permutative, realize_suleimanova, verify, Spectrum};

fn main() -> niep::Result<()> {
    let sigma = Spectrum::from_real(&[10.0, -1.0, -2.0, -3.0])?;
    let a = realize_suleimanova(&sigma)?;
    print!("{}", emit(&a, Format::Pretty));
    let report = verify(&a, &sigma, None)?;
    println!("spectrum matches: {} (max distance {:.1e})", report.passed, report.max_distance);
    println!("permutative: {}", detect_permutative(&a, 0.0).is_some());
    Ok(())
}

//! Interleave realizations of two real lists into one matrix of twice the order.

use niep::cli::{emit, Format};
use niep::{realize_pair_suleimanova, verify, CompositionParams, Pairing, Sign, Spectrum};

fn main() -> niep::Result<()> {
    let sigma_s = Spectrum::from_real(&[10.0, -1.0, -2.0, -3.0])?;
    let sigma_c = Spectrum::from_real(&[7.0, -2.0, -2.0, -3.0])?;
    let p = CompositionParams::new(1.0, Sign::Plus)?;
    let pair = realize_pair_suleimanova(&sigma_s, &sigma_c, p, Pairing::Sorted)?;
    println!("S =\n{}", emit(&pair.s, Format::Pretty));
    println!("C =\n{}", emit(&pair.c, Format::Pretty));
    println!("M =\n{}", emit(&pair.matrix, Format::Pretty));
    let report = verify(&pair.matrix, &pair.expected_spectrum(p), None)?;
    println!("σ(M) = σS ∪ σC: {} (max distance {:.1e})", report.passed, report.max_distance);
    Ok(())
}

//! Even composition with a scaled, negated factor, then recover the factors.

use niep::cli::{emit, Format};
use niep::{compose_even, eigenvalues, extract_even, verify, CompositionParams, DenseMatrix, Sign};

fn main() -> niep::Result<()> {
    let s = DenseMatrix::from_real_rows(&[[2., 2., 1.], [1., 2., 2.], [2., 1., 2.]]);
    let c = DenseMatrix::from_real_rows(&[[0., 0., 1.], [1., 0., 0.], [0., 1., 0.]]);
    let p = CompositionParams::new(0.5, Sign::Minus)?;
    let a = compose_even(&s, &c, p)?;
    print!("{}", emit(&a, Format::Pretty));

    let expected = eigenvalues(&s)?.union(&eigenvalues(&c)?.scaled(p.factor()));
    let report = verify(&a, &expected, None)?;
    println!("σ(A) = σ(S) ∪ -½σ(C): {}", report.passed);

    let (s_back, kc) = extract_even(&a, 0.0)?;
    println!("S recovered: {}", s_back == s);
    println!("-½C recovered: {}", kc.max_abs_diff(&c.scale((-0.5).into())) == 0.0);
    Ok(())
}

//! Odd-order compositions: a bordered interleaving and the symmetric variant.

use niep::cli::{emit, Format};
use niep::{
    compose_odd, compose_odd_sym, eigenvalues, verify, Border, CompositionParams, DenseMatrix, OddTail,
};

fn main() -> niep::Result<()> {
    let s = DenseMatrix::from_real_rows(&[[4., 3., 5.], [5., 4., 3.], [3., 5., 4.]]);
    let c = DenseMatrix::from_real_rows(&[[4., 3.], [-3., 4.]]);
    let tail = OddTail { phi1: vec![3.0, 5.0], phi2: vec![0.0, 0.0] };
    let p = CompositionParams::default();
    let a = compose_odd(&s, &c, p, Some(&tail))?;
    print!("{}", emit(&a, Format::Pretty));
    let expected = eigenvalues(&s)?.union(&eigenvalues(&c)?);
    println!("σ(A) = σ(S) ∪ σ(C): {}\n", verify(&a, &expected, None)?.passed);

    let a_blk = DenseMatrix::from_real_rows(&[[0., 1.], [1., 0.]]);
    let b_blk = DenseMatrix::from_real_rows(&[[0., 0.], [0., 1.]]);
    let border = Border { x: vec![1.0, 0.0], y: vec![1.0, 0.0], u: 0.0 };
    let sym = compose_odd_sym(&a_blk, &b_blk, &border)?;
    print!("{}", emit(&sym, Format::Pretty));
    println!("symmetric: {}", sym.is_symmetric());
    println!("eigenvalues: {:?}", eigenvalues(&sym)?.real_sorted_desc());
    Ok(())
}

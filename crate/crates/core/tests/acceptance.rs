//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits nonzero if any failed.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use niep::blockcomp::compose_even_unchecked;
use niep::circulant::ROW_NONNEG_TOL;
use niep::eig::{default_verification_tol, poly_eval};
use niep::permutative::build_tau_matrix;
use niep::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn r(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn rows(m: &[&[f64]]) -> DenseMatrix {
    DenseMatrix::from_real_rows(m)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Eigenvalues of `m` matched to `expected` within an absolute tolerance.
fn spectrum_within(m: &DenseMatrix, expected: &[C64], tol: f64, what: &str) -> std::result::Result<f64, String> {
    let sigma = Spectrum::new(expected.to_vec()).map_err(|e| e.to_string())?;
    let report = verify(m, &sigma, Some(tol)).map_err(|e| format!("{what}: {e}"))?;
    ensure(report.passed, || {
        format!("{what}: max matched distance {:.3e} > {tol:e}", report.max_distance)
    })?;
    Ok(report.max_distance)
}

fn crit1_golden_pair() -> Check {
    let start = Instant::now();
    let p = CompositionParams::default();
    let out = realize_pair_suleimanova(
        &Spectrum::from_real(&[10., -1., -2., -3.]).unwrap(),
        &Spectrum::from_real(&[7., -2., -2., -3.]).unwrap(),
        p,
        Pairing::Sorted,
    )
    .map_err(|e| e.to_string())?;
    let (h, f) = (0.5, 2.5);
    let s = 3.5;
    let golden = rows(&[
        &[h, h, 2., 0., f, h, s, h],
        &[h, h, 0., 2., h, f, h, s],
        &[2., 0., h, h, f, h, s, h],
        &[0., 2., h, h, h, f, h, s],
        &[f, h, 2., 0., h, h, s, h],
        &[h, f, 0., 2., h, h, h, s],
        &[s, h, 2., 0., f, h, h, h],
        &[h, s, 0., 2., h, f, h, h],
    ]);
    ensure(out.matrix == golden, || format!("matrix differs:\n{:?}", out.matrix))?;
    let d = spectrum_within(
        &out.matrix,
        &[10., 7., -3., -3., -2., -2., -2., -1.].map(r),
        1e-9,
        "M",
    )?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("exact 8x8 match, max distance {d:.2e}, {elapsed:.1?}"))
}

fn crit2_golden_circulant() -> Check {
    let s = CirculantRow::from_real(&[2., 2., 1.]).unwrap().to_matrix();
    let cplus = CirculantRow::from_real(&[0., 0., 1.]).unwrap().to_matrix();
    let cminus = cplus.scale(r(-1.0));
    let h = 3f64.sqrt() / 2.0;
    let cases = [
        (
            &cplus,
            rows(&[
                &[1., 1., 1., 1., 1., 0.],
                &[1., 1., 1., 1., 0., 1.],
                &[1., 0., 1., 1., 1., 1.],
                &[0., 1., 1., 1., 1., 1.],
                &[1., 1., 1., 0., 1., 1.],
                &[1., 1., 0., 1., 1., 1.],
            ]),
            [r(5.), c(0.5, h), c(0.5, -h), r(1.), c(-0.5, h), c(-0.5, -h)],
        ),
        (
            &cminus,
            rows(&[
                &[1., 1., 1., 1., 0., 1.],
                &[1., 1., 1., 1., 1., 0.],
                &[0., 1., 1., 1., 1., 1.],
                &[1., 0., 1., 1., 1., 1.],
                &[1., 1., 0., 1., 1., 1.],
                &[1., 1., 1., 0., 1., 1.],
            ]),
            [r(5.), c(0.5, h), c(0.5, -h), r(-1.), c(0.5, -h), c(0.5, h)],
        ),
    ];
    // C-part lists of the form (±1, ±(1 ± i√3)/2) would sum to 8 and 4, but
    // both composed matrices have trace 6: the 3-cycle's eigenvalues are 1
    // and (-1 ± i√3)/2, which the lists above use.
    let printed_sums = [5. + 1. + 1. + 1., 5. + 1. - 1. - 1.];
    ensure(printed_sums.iter().all(|&t| t != 6.0), || "printed lists unexpectedly consistent".into())?;
    let mut worst: f64 = 0.0;
    for (i, (cm, golden, want)) in cases.iter().enumerate() {
        let m = compose_even(&s, cm, CompositionParams::default()).map_err(|e| e.to_string())?;
        ensure(&m == golden, || format!("case {i}: matrix differs:\n{m:?}"))?;
        ensure(m.trace() == r(6.0), || format!("case {i}: trace {}", m.trace()))?;
        worst = worst.max(spectrum_within(&m, want, 1e-9, "6x6")?);
    }
    Ok(format!("both 6x6 matrices exact, max distance {worst:.2e}"))
}

fn crit3_golden_odd() -> Check {
    let p = CompositionParams::default();
    let mut worst: f64 = 0.0;

    let s = rows(&[&[1., 1., 0.], &[1., 2., 1.], &[0., 1., 1.]]);
    let m = compose_odd(&s, &DenseMatrix::identity(2), p, None).map_err(|e| e.to_string())?;
    let golden = rows(&[
        &[1., 0., 0.5, 0.5, 0.],
        &[0., 1., 0.5, 0.5, 0.],
        &[0.5, 0.5, 1.5, 0.5, 1.],
        &[0.5, 0.5, 0.5, 1.5, 1.],
        &[0., 0., 0.5, 0.5, 1.],
    ]);
    ensure(m == golden, || format!("real 5x5 differs:\n{m:?}"))?;
    worst = worst.max(spectrum_within(&m, &[3., 0., 1., 1., 1.].map(r), 1e-9, "real 5x5")?);

    let s = CirculantRow::from_real(&[4., 3., 5.]).unwrap().to_matrix();
    let cm = rows(&[&[4., 3.], &[-3., 4.]]);
    let r3 = 3f64.sqrt();
    let want = [r(12.), c(0., r3), c(0., -r3), c(4., 3.), c(4., -3.)];
    let equal = compose_odd(&s, &cm, p, None).map_err(|e| e.to_string())?;
    let golden_equal = rows(&[
        &[4., 0., 3., 0., 5.],
        &[0., 4., 0., 3., 5.],
        &[1., 4., 4., 0., 3.],
        &[4., 1., 0., 4., 3.],
        &[1.5, 1.5, 2.5, 2.5, 4.],
    ]);
    ensure(equal == golden_equal, || format!("equal-split 5x5 differs:\n{equal:?}"))?;
    worst = worst.max(spectrum_within(&equal, &want, 1e-9, "equal split")?);
    let tail = OddTail {
        phi1: vec![3., 5.],
        phi2: vec![0., 0.],
    };
    let uneven = compose_odd(&s, &cm, p, Some(&tail)).map_err(|e| e.to_string())?;
    let mut golden_uneven = golden_equal.clone();
    for (j, v) in [3., 0., 5., 0., 4.].into_iter().enumerate() {
        golden_uneven[(4, j)] = r(v);
    }
    ensure(uneven == golden_uneven, || format!("(3,0,5,0,4) 5x5 differs:\n{uneven:?}"))?;
    worst = worst.max(spectrum_within(&uneven, &want, 1e-9, "uneven split")?);

    let a = rows(&[&[0., 1.], &[1., 0.]]);
    let b = rows(&[&[0., 0.], &[0., 1.]]);
    let border = Border {
        x: vec![1., 0.],
        y: vec![1., 0.],
        u: 0.,
    };
    let sym = compose_odd_sym(&a, &b, &border).map_err(|e| e.to_string())?;
    let golden_sym = rows(&[
        &[0., 0., 1., 0., 1.],
        &[0., 0., 0., 1., 1.],
        &[1., 0., 0., 1., 0.],
        &[0., 1., 1., 0., 0.],
        &[1., 1., 0., 0., 0.],
    ]);
    ensure(sym == golden_sym, || format!("0/1 5x5 differs:\n{sym:?}"))?;
    let (gp, gm) = ((-1. + 5f64.sqrt()) / 2., (-1. - 5f64.sqrt()) / 2.);
    worst = worst.max(spectrum_within(&sym, &[2., gp, gp, gm, gm].map(r), 1e-9, "0/1 5x5")?);
    Ok(format!("four 5x5 matrices exact, max distance {worst:.2e}"))
}

fn random_complex(rng: &mut ChaCha8Rng, n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn union_of(a: &DenseMatrix, b: &DenseMatrix) -> Vec<C64> {
    let mut v = eigenvalues(a).unwrap().into_values();
    if b.rows() > 0 {
        v.extend(eigenvalues(b).unwrap().into_values());
    }
    v
}

fn crit4_block_spectrum_union() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut worst: f64 = 0.0;
    for trial in 0..500 {
        let n = rng.gen_range(1..=6);
        // even pattern from raw [[a, b], [b, a]] blocks
        let a = random_complex(&mut rng, n);
        let b = random_complex(&mut rng, n);
        let m = DenseMatrix::from_fn(2 * n, 2 * n, |p, q| {
            if p % 2 == q % 2 { a[(p / 2, q / 2)] } else { b[(p / 2, q / 2)] }
        });
        let expected = union_of(&a.add(&b).unwrap(), &a.sub(&b).unwrap());
        let tol = 1e-8 * m.frobenius_norm().max(1.0);
        let d = spectrum_within(&m, &expected, tol, &format!("even trial {trial}"))?;
        worst = worst.max(d / m.frobenius_norm().max(1.0));

        // odd pattern: arbitrary split of the last row
        let s = random_complex(&mut rng, n + 1);
        let cm = random_complex(&mut rng, n);
        let phi1: Vec<C64> = (0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let ord = 2 * n + 1;
        let half = compose_even_unchecked(&s.leading(n, n), &cm, r(1.0)).unwrap();
        let m = DenseMatrix::from_fn(ord, ord, |p, q| match (p < 2 * n, q < 2 * n) {
            (true, true) => half[(p, q)],
            (true, false) => s[(p / 2, n)],
            (false, true) if q % 2 == 0 => phi1[q / 2],
            (false, true) => s[(n, q / 2)] - phi1[q / 2],
            (false, false) => s[(n, n)],
        });
        let expected = union_of(&s, &cm);
        let tol = 1e-8 * m.frobenius_norm().max(1.0);
        let d = spectrum_within(&m, &expected, tol, &format!("odd trial {trial}"))?;
        worst = worst.max(d / m.frobenius_norm().max(1.0));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(30), || format!("took {elapsed:?}"))?;
    Ok(format!("1000 compositions, max relative distance {worst:.2e}, {elapsed:.1?}"))
}

fn crit5_suleimanova() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut zero_sum = 0;
    let mut worst: f64 = 0.0;
    for trial in 0..1000 {
        let n = rng.gen_range(2..=10);
        let mut vals: Vec<f64> = if trial % 4 == 0 {
            // exact zero sum on a dyadic grid
            zero_sum += 1;
            let unit = 2f64.powi(-20);
            let cap = (10.0 / unit) as u64 / (n as u64 - 1);
            let ks: Vec<u64> = (1..n).map(|_| rng.gen_range(0..=cap)).collect();
            let mut v: Vec<f64> = ks.iter().map(|&k| -(k as f64) * unit).collect();
            v.push(ks.iter().sum::<u64>() as f64 * unit);
            v
        } else {
            let perron = rng.gen_range(0.0..=10.0);
            let w: Vec<f64> = (1..n).map(|_| rng.gen_range(0.0..1.0)).collect();
            let total: f64 = w.iter().sum::<f64>().max(f64::MIN_POSITIVE);
            let budget = perron * rng.gen_range(0.0..1.0);
            let mut v: Vec<f64> = w.iter().map(|x| -x / total * budget).collect();
            v.push(perron);
            v
        };
        vals.shuffle(&mut rng);
        let sigma = Spectrum::from_real(&vals).unwrap();
        let m = realize_suleimanova(&sigma).map_err(|e| format!("trial {trial} {vals:?}: {e}"))?;
        ensure(m.entries().iter().all(|z| z.re >= 0.0 && z.im == 0.0), || {
            format!("trial {trial}: negative entry for {vals:?}")
        })?;
        let d = spectrum_within(&m, sigma.values(), 1e-9, &format!("trial {trial} {vals:?}"))?;
        worst = worst.max(d);
        if vals.iter().sum::<f64>() == 0.0 {
            ensure((0..n).all(|i| m[(i, i)] == r(0.0)), || {
                format!("trial {trial}: zero-sum list with nonzero diagonal")
            })?;
        }
    }
    Ok(format!("1000 lists ({zero_sum} zero-sum), max distance {worst:.2e}"))
}

fn random_tuple(rng: &mut ChaCha8Rng, n: usize) -> PermutationTuple {
    if rng.gen_bool(0.5) {
        let mut phi: Vec<usize> = (0..n).collect();
        phi.shuffle(rng);
        if let Ok(t) = PermutationTuple::from_powers(&phi) {
            return t;
        }
    }
    let mut perms = vec![(0..n).collect::<Vec<_>>()];
    for _ in 1..n {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(rng);
        perms.push(p);
    }
    PermutationTuple::new(perms).unwrap()
}

fn crit6_permutativity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let tol = 1e-12;
    for trial in 0..200 {
        let n = rng.gen_range(2..=6);
        let tau = random_tuple(&mut rng, n);
        let s_row: Vec<C64> = (0..n).map(|_| r(rng.gen_range(0.0..10.0))).collect();
        let c_row: Vec<C64> = s_row.iter().map(|s| s * rng.gen_range(-1.0..=1.0)).collect();
        let s = build_tau_matrix(&tau, &s_row).unwrap();
        let cm = build_tau_matrix(&tau, &c_row).unwrap();
        let gamma = [0.25, 0.5, 1.0][rng.gen_range(0..3)];
        let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let m = compose_even(&s, &cm, CompositionParams::new(gamma, sign).unwrap())
            .map_err(|e| format!("trial {trial}: {e}"))?;
        ensure(detect_permutative(&m, tol).is_some(), || {
            format!("trial {trial}: composed matrix not detected as permutative")
        })?;
    }
    let s = rows(&[&[1., 2., 3.], &[3., 1., 2.], &[2., 3., 1.]]);
    let cm = rows(&[&[0., 1., 2.], &[2., 0., 1.], &[2., 0., 1.]]);
    let m = compose_even(&s, &cm, CompositionParams::default()).map_err(|e| e.to_string())?;
    ensure(detect_permutative(&m, tol).is_none(), || "counterexample detected as permutative".into())?;
    ensure(!are_permutatively_equivalent(&s, &cm, tol), || "counterexample factors equivalent".into())?;
    Ok("200 equivalent pairs detected, counterexample absent".into())
}

fn random_nonneg_row(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| if rng.gen_bool(0.2) { 0.0 } else { rng.gen_range(0.0..10.0) })
        .collect()
}

fn crit7_guo() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = 0;
    let mut worst_spec: f64 = 0.0;
    let mut worst_row: f64 = 0.0;
    let mut min_entry = f64::INFINITY;
    for trial in 0..1000 {
        let n = rng.gen_range(3..=12);
        let row = random_nonneg_row(&mut rng, n);
        let sigma = circulant_spectrum(&CirculantRow::from_real(&row).unwrap());
        let t = rng.gen_range(0.0..=10.0);
        let theta = rng.gen_range(0.0..2.0 * PI);
        let mut variants = vec![GuoVariant::General];
        if n % 2 == 0 {
            variants.push(GuoVariant::EvenMiddle);
        }
        for variant in variants {
            for branch in [Sign::Plus, Sign::Minus] {
                cases += 1;
                let p = GuoParams { t, theta, branch, variant };
                let out = guo_perturb(&sigma, p).map_err(|e| format!("trial {trial}: {e}"))?;
                let new_row = circulant_from_spectrum(&out);
                let b = branch.value();
                // displayed formula for the perturbed list
                let mut formula = sigma.values().to_vec();
                let analytic_row: Vec<f64> = match variant {
                    GuoVariant::General => {
                        formula[0] += 2.0 * t;
                        formula[1] += C64::from_polar(b * t, theta);
                        formula[n - 1] += C64::from_polar(b * t, -theta);
                        (0..n)
                            .map(|j| row[j] + t / n as f64 * (2.0 + 2.0 * b * (theta - 2.0 * PI * j as f64 / n as f64).cos()))
                            .collect()
                    }
                    GuoVariant::EvenMiddle => {
                        formula[0] += t;
                        formula[n / 2] += b * t;
                        (0..n)
                            .map(|j| row[j] + t / n as f64 * (1.0 + b * if j % 2 == 0 { 1.0 } else { -1.0 }))
                            .collect()
                    }
                };
                for (j, z) in new_row.entries().iter().enumerate() {
                    min_entry = min_entry.min(z.re);
                    ensure(z.re >= -ROW_NONNEG_TOL && z.im.abs() <= 1e-9, || {
                        format!("trial {trial} {variant:?} {branch:?}: row entry {j} = {z}")
                    })?;
                    worst_row = worst_row.max((z - analytic_row[j]).norm());
                }
                let back = circulant_spectrum(&new_row);
                for (k, (x, y)) in back.values().iter().zip(&formula).enumerate() {
                    let d = (x - y).norm();
                    worst_spec = worst_spec.max(d);
                    ensure(d <= 1e-9, || {
                        format!("trial {trial} {variant:?} {branch:?}: σ_{k} off by {d:e}")
                    })?;
                }
                ensure(worst_row <= 1e-9, || format!("trial {trial}: row differs from analytic shift"))?;
            }
        }
    }

    let mut pair_worst: f64 = 0.0;
    for trial in 0..100 {
        let n = if trial % 2 == 0 { 4 } else { 6 };
        let rs = random_nonneg_row(&mut rng, n);
        let rc: Vec<f64> = rs.iter().map(|s| s * rng.gen_range(-1.0..=1.0)).collect();
        let s1 = circulant_spectrum(&CirculantRow::from_real(&rs).unwrap());
        let s2 = circulant_spectrum(&CirculantRow::from_real(&rc).unwrap());
        let t1 = rng.gen_range(0.0..=10.0);
        let t2 = rng.gen_range(-t1..=t1);
        let branch = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
        let p = CompositionParams::new(rng.gen_range(0.0..=1.0), if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus })
            .unwrap();
        let g = guo_pair_compose(&s1, &s2, t1, t2, branch, p).map_err(|e| format!("pair trial {trial}: {e}"))?;
        ensure(g.matrix.is_nonnegative(0.0), || format!("pair trial {trial}: negative entry"))?;
        ensure(detect_permutative(&g.matrix, 1e-12).is_some(), || {
            format!("pair trial {trial}: not permutative")
        })?;
        let tol = default_verification_tol(&g.matrix);
        let d = spectrum_within(&g.matrix, g.expected_spectrum(p).values(), tol, &format!("pair trial {trial}"))?;
        pair_worst = pair_worst.max(d);
    }
    Ok(format!(
        "{cases} perturbations (min row entry {min_entry:.2e}, spectrum error {worst_spec:.2e}, row error {worst_row:.2e}); 100 pairs, max distance {pair_worst:.2e}"
    ))
}

fn crit8_oracle() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst_p: f64 = 0.0;
    let mut worst_tr: f64 = 0.0;
    for trial in 0..500 {
        let n = rng.gen_range(1..=6);
        let complex = trial % 2 == 1;
        let a = DenseMatrix::from_fn(n, n, |_, _| {
            c(rng.gen_range(-5.0..5.0), if complex { rng.gen_range(-5.0..5.0) } else { 0.0 })
        });
        let coeffs = charpoly_oracle(&a).map_err(|e| e.to_string())?;
        let ev = eigenvalues(&a).map_err(|e| format!("trial {trial}: {e}"))?;
        let norm = a.frobenius_norm();
        let bound = 1e-6 * norm.powi(n as i32);
        for &l in ev.values() {
            let p = poly_eval(&coeffs, l).norm();
            worst_p = worst_p.max(p / bound.max(f64::MIN_POSITIVE));
            ensure(p <= bound, || format!("trial {trial}: |p({l})| = {p:e} > {bound:e}"))?;
        }
        let tr = a.trace();
        let rel = (ev.sum() - tr).norm() / norm.max(f64::MIN_POSITIVE);
        worst_tr = worst_tr.max(rel);
        ensure(rel <= 1e-9, || format!("trial {trial}: Σλ vs trace relative error {rel:e}"))?;
        ensure((coeffs[1] + tr).norm() <= 1e-9 * norm.max(1.0), || {
            format!("trial {trial}: oracle c_(n-1) disagrees with trace")
        })?;
    }
    Ok(format!(
        "500 matrices, max |p(λ)|/bound {worst_p:.2e}, max trace relative error {worst_tr:.2e}"
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 golden pair example", crit1_golden_pair),
        ("2 golden circulant examples", crit2_golden_circulant),
        ("3 golden odd examples", crit3_golden_odd),
        ("4 block spectrum union", crit4_block_spectrum_union),
        ("5 suleimanova suite", crit5_suleimanova),
        ("6 permutativity suite", crit6_permutativity),
        ("7 guo suite", crit7_guo),
        ("8 oracle agreement", crit8_oracle),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match std::panic::catch_unwind(f) {
            Ok(Ok(detail)) => println!("criterion {name}: PASS ({detail})"),
            Ok(Err(why)) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
            Err(_) => {
                failed += 1;
                println!("criterion {name}: FAIL (panicked)");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}

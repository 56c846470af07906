use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::mpoly::{parse_poly, Ring};

const ROUNDED_TRIANGLE_P: &str =
    "x0^3 - 3/4*x2*x0^2 - 2*x1^2*x0 - 21/16*x2^2*x0 + 55/64*x2^3 - 3/2*x1^2*x2";

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn random_pencil(rng: &mut ChaCha8Rng, n: usize) -> HermitianPencil {
    let mut mk = || {
        let mut e = vec![GaussianRational::zero(); n * n];
        for r in 0..n {
            for col in r..n {
                let re = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
                let im = if r == col { rat(0, 1) } else { rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)) };
                let z = GaussianRational::new(re, im);
                e[col * n + r] = z.conj();
                e[r * n + col] = z;
            }
        }
        HermitianMatrix::new(n, e).unwrap()
    };
    let k = mk();
    let l = mk();
    HermitianPencil::new(k, l).unwrap()
}

#[test]
fn determinant_examples() {
    let x = Ring::projective("x");
    assert_eq!(
        pencil_det(&HermitianPencil::rounded_triangle()).unwrap(),
        parse_poly(ROUNDED_TRIANGLE_P, &x).unwrap()
    );
    assert_eq!(
        pencil_det(&HermitianPencil::parabola()).unwrap(),
        parse_poly("x0^2 + x0*x2 - x1^2", &x).unwrap()
    );
    for n in 1..=4 {
        let p = HermitianPencil::new(HermitianMatrix::zero(n), HermitianMatrix::zero(n)).unwrap();
        assert_eq!(pencil_det(&p).unwrap(), parse_poly(&format!("x0^{n}"), &x).unwrap());
    }
}

#[test]
fn determinant_of_complex_pencil_is_real() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 2..=4 {
        let p = random_pencil(&mut rng, n);
        let d = pencil_det(&p).unwrap();
        assert_eq!(d.is_homogeneous(), Ok(Some(n as u32)));
    }
}

#[test]
fn eigen_examples() {
    let cfg = EigenConfig::default();
    let d = [c(3.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0)];
    let e = eigen_hermitian(&d, 3, &cfg).unwrap();
    assert!(e.eigenvalues.iter().zip([1.0, 2.0, 3.0]).all(|(a, b)| (a - b).abs() < 1e-14));
    for m in [[c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]] {
        let e = eigen_hermitian(&m, 2, &cfg).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-14 && (e.eigenvalues[1] - 1.0).abs() < 1e-14);
        assert!(e.residual < 1e-12);
    }
    let bad = [c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)];
    assert!(matches!(eigen_hermitian(&bad, 2, &cfg), Err(PencilError::NotHermitianNumeric(_))));
}

#[test]
fn eigen_repeated_eigenvalues() {
    let m = [c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)];
    let e = eigen_hermitian(&m, 3, &EigenConfig::default()).unwrap();
    assert_eq!(e.eigenvectors.len(), 3);
    assert!((e.eigenvalues[0] + 1.0).abs() < 1e-14);
    assert!(e.residual < 1e-12);
}

#[test]
fn support_function_examples() {
    let par = HermitianPencil::parabola();
    assert!((par.support_function([1.0, 0.0]).unwrap() + 1.0).abs() < 1e-12);
    assert!(par.support_function([0.0, 1.0]).unwrap().abs() < 1e-12);
    let tri = HermitianPencil::rounded_triangle();
    assert!((tri.support_function([1.0, 0.0]).unwrap() + 2f64.sqrt()).abs() < 1e-12);
    assert_eq!(par.support_function([0.0, 0.0]), Err(PencilError::ZeroDirection));
}

#[test]
fn boundary_samples_touch_supporting_lines() {
    for p in [HermitianPencil::rounded_triangle(), HermitianPencil::parabola()] {
        for s in p.sample_numrange_boundary(90).unwrap() {
            let dot = s.direction[0] * s.point[0] + s.direction[1] * s.point[1];
            assert!((dot - s.h).abs() < 1e-10);
        }
    }
    let one = HermitianPencil::new(
        HermitianMatrix::from_real_rows(&[&[3]], 1),
        HermitianMatrix::from_real_rows(&[&[-2]], 1),
    )
    .unwrap();
    for s in one.sample_numrange_boundary(12).unwrap() {
        assert!((s.point[0] - 3.0).abs() < 1e-14 && (s.point[1] + 2.0).abs() < 1e-14);
    }
    assert!(one.is_degenerate(12, 1e-9).unwrap());
    assert!(!HermitianPencil::rounded_triangle().is_degenerate(36, 1e-9).unwrap());
}

#[test]
fn spectrahedron_examples() {
    let par = HermitianPencil::parabola();
    assert!(par.spectrahedron_contains([0.0, 0.0], true, 1e-9).unwrap());
    assert!(par.spectrahedron_contains([0.0, -1.0], false, 1e-9).unwrap());
    assert!(!par.spectrahedron_contains([0.0, -1.0], true, 1e-9).unwrap());
    let tri = HermitianPencil::rounded_triangle();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let t: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let b = tri.dual_boundary_point([t.cos(), t.sin()]).unwrap();
        assert!(tri.spectrahedron_lambda_min(b).unwrap().abs() < 1e-9);
        let out = [b[0] * 1.01, b[1] * 1.01];
        assert!(!tri.spectrahedron_contains(out, false, 1e-9).unwrap());
    }
}

#[test]
fn dual_boundary_examples() {
    let par = HermitianPencil::parabola();
    let b = par.dual_boundary_point([1.0, 0.0]).unwrap();
    assert!((b[0] - 1.0).abs() < 1e-12 && b[1].abs() < 1e-12);
    let b = par.dual_boundary_point([-1.0, 0.0]).unwrap();
    assert!((b[0] + 1.0).abs() < 1e-12 && b[1].abs() < 1e-12);
    let b = HermitianPencil::rounded_triangle().dual_boundary_point([1.0, 0.0]).unwrap();
    assert!((b[0] - 0.5f64.sqrt()).abs() < 1e-12 && b[1].abs() < 1e-12);
    assert!(matches!(par.dual_boundary_point([0.0, 1.0]), Err(PencilError::OriginNotInterior(_))));
}

#[test]
fn from_complex_splits_hermitian_parts() {
    let a: Vec<GaussianRational> = ["i", "1", "1", "0"].iter().map(|s| s.parse().unwrap()).collect();
    let p = HermitianPencil::from_complex(2, &a).unwrap();
    assert_eq!(p, HermitianPencil::parabola());
    let c = p.centroid();
    assert_eq!(c, [rat(0, 1), rat(1, 2)]);
    assert_eq!(p.centered().centroid(), [rat(0, 1), rat(0, 1)]);
}

#[test]
fn toml_round_trip_and_errors() {
    let p = HermitianPencil::rounded_triangle();
    let text = pencil_to_toml(&p);
    assert_eq!(parse_pencil_toml(&text).unwrap(), p);
    let flat = "n = 2\nA = [\"i\", \"1\", 1, 0]\n";
    assert_eq!(parse_pencil_toml(flat).unwrap(), HermitianPencil::parabola());
    let bad = "n = 2\nK = [[\"0\", \"1\"], [\"1\", \"0\"]]\nL = [[\"1\", \"x\"], [\"0\", \"0\"]]\n";
    match parse_pencil_toml(bad) {
        Err(PencilError::Parse { line, col, .. }) => assert_eq!((line, col), (3, 12)),
        other => panic!("unexpected {other:?}"),
    }
    match parse_pencil_toml("n = 2\nK = [[\"0\", ") {
        Err(PencilError::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("unexpected {other:?}"),
    }
    assert!(matches!(
        parse_pencil_toml("n = 2\nK = [[\"0\", \"1\"], [\"2\", \"0\"]]\nL = [0, 0, 0, 0]\n"),
        Err(PencilError::Parse { .. })
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn toeplitz_bound(seed in 0u64..1000, n in 2usize..=4, t in 0.0..std::f64::consts::TAU) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_pencil(&mut rng, n);
        let x = [t.cos(), t.sin()];
        let h = p.support_function(x).unwrap();
        for _ in 0..10 {
            let mut eta: Vec<Complex64> = (0..n).map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
            let nrm = eta.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            eta.iter_mut().for_each(|z| *z /= nrm);
            let y = p.numerical_value(&eta);
            prop_assert!(x[0] * y[0] + x[1] * y[1] >= h - 1e-10);
        }
        let h3 = p.support_function([3.0 * x[0], 3.0 * x[1]]).unwrap();
        prop_assert!((h3 - 3.0 * h).abs() < 1e-10 * (1.0 + h.abs()));
    }

    #[test]
    fn eigen_reconstruction(seed in 0u64..1000, n in 1usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_pencil(&mut rng, n);
        let m = p.combination_f64([0.0, 1.0, 0.7]);
        let e = eigen_hermitian(&m, n, &EigenConfig::default()).unwrap();
        let scale = m.iter().map(|z| z.norm()).fold(1.0, f64::max);
        prop_assert!(e.residual <= 1e-12 * scale * 10.0);
        for i in 0..n {
            for j in 0..n {
                let dot: Complex64 = e.eigenvectors[i].iter().zip(&e.eigenvectors[j]).map(|(a, b)| a.conj() * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                prop_assert!((dot - c(want, 0.0)).norm() < 1e-12);
            }
        }
        for r in 0..n {
            for col in 0..n {
                let v: Complex64 = (0..n).map(|k| e.eigenvectors[k][r] * e.eigenvalues[k] * e.eigenvectors[k][col].conj()).sum();
                prop_assert!((v - m[r * n + col]).norm() < 1e-11 * scale);
            }
        }
    }

    #[test]
    fn determinant_nonnegative_on_spectrahedron(seed in 0u64..1000, a in -20i64..=20, b in -20i64..=20) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_pencil(&mut rng, 3);
        let s = [a as f64 / 40.0, b as f64 / 40.0];
        if p.spectrahedron_contains(s, false, 0.0).unwrap() {
            let d = pencil_det(&p).unwrap();
            let v = d.eval_rational(&[rat(1, 1), rat(a, 40), rat(b, 40)]);
            prop_assert!(v >= rat(0, 1));
        }
    }
}

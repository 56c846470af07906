use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::exactnum::{rat, AlgebraicReal, BigRational, RationalInterval};
use crate::matrixpencil::{EigenConfig, HermitianMatrix, HermitianPencil};
use crate::mpoly::{parse_poly, Ring};
use crate::realroots::UniPoly;

fn omega() -> AlgebraicReal {
    let p = UniPoly::from_ints(&[-1, 0, 0, 0, 0, 0, -11, 0, 0, 0, 0, 0, 1]);
    AlgebraicReal::new(&p, RationalInterval::new(rat(1, 1), rat(2, 1)).unwrap()).unwrap()
}

fn alpha() -> AlgebraicReal {
    let p = UniPoly::from_ints(&[5, 0, -10, 0, 1]);
    AlgebraicReal::new(&p, RationalInterval::new(rat(3, 1), rat(4, 1)).unwrap()).unwrap()
}

fn random_pencil(rng: &mut ChaCha8Rng, n: usize) -> HermitianPencil {
    let a: Vec<_> = (0..n * n)
        .map(|_| {
            crate::exactnum::GaussianRational::new(rat(rng.gen_range(-9..=9), 4), rat(rng.gen_range(-9..=9), 4))
        })
        .collect();
    HermitianPencil::from_complex(n, &a).unwrap()
}

#[test]
fn polarity_examples() {
    let x = ProjPoint::supporting_line_pole(-2.0, [3.0, 4.0]).unwrap();
    assert_eq!(x.coords(), &[1.0, 1.5, 2.0]);
    let origin = ProjPoint::new([rat(1, 1), rat(0, 1), rat(0, 1)]).unwrap();
    let line = origin.polar();
    assert!(line.is_line_at_infinity());
    let inf = ProjPoint::new([rat(0, 1), rat(2, 1), rat(-3, 1)]).unwrap();
    assert_eq!(line.incidence(&inf), rat(0, 1));
    assert_eq!(inf.coords(), &[rat(0, 1), rat(1, 1), rat(-3, 2)]);
    assert_eq!(ProjPoint::new([0.0, 0.0, 0.0]), Err(GeomError::ZeroTriple));
}

proptest! {
    #[test]
    fn polar_is_incidence_preserving_involution(a in prop::array::uniform3(-20i64..=20), b in prop::array::uniform3(-20i64..=20)) {
        prop_assume!(a != [0, 0, 0] && b != [0, 0, 0]);
        let x = ProjPoint::new(a.map(|v| rat(v, 1))).unwrap();
        let y = ProjPoint::new(b.map(|v| rat(v, 1))).unwrap();
        let pl = x.polar();
        prop_assert_eq!(pl.pole(), &x);
        prop_assert_eq!(x.polar().incidence(&y), y.polar().incidence(&x));
        let scaled = ProjPoint::new(a.map(|v| rat(-3 * v, 7))).unwrap();
        prop_assert_eq!(scaled, x);
    }
}

#[test]
fn fermat_oracle_support_points() {
    let f = FermatOracle::sextic();
    for k in 0..24 {
        let t = k as f64 * 0.27;
        let x = [t.cos() * 2.0, t.sin() * 2.0];
        let h = f.support(x).unwrap();
        let y = f.support_point(x).unwrap();
        assert!((x[0] * y[0] + x[1] * y[1] - h).abs() < 1e-13);
        // y lies on the boundary of the unit ball of the 6/5 norm
        let n = (y[0].abs().powf(1.2) + y[1].abs().powf(1.2)).powf(1.0 / 1.2);
        assert!((n - 1.0).abs() < 1e-12);
    }
    assert!(FermatOracle::new(5).is_err());
}

#[test]
fn outside_w_examples() {
    let cfg = LemmaConfig::default();
    let w = omega().to_f64();
    let v = point_outside_w(&FermatOracle::sextic(), [w, w], &cfg).unwrap();
    assert!(v.is_outside());
    let d = v.direction();
    assert!((d[0] + 0.5f64.sqrt()).abs() < 1e-6 && (d[1] + 0.5f64.sqrt()).abs() < 1e-6);

    let par = PencilOracle::new(HermitianPencil::parabola());
    let v = point_outside_w(&par, [0.0, 10.0], &cfg).unwrap();
    assert!(v.is_outside() && v.direction()[1] < -0.99);

    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in 2..=4 {
        let p = random_pencil(&mut rng, n);
        let c = p.centroid();
        let y = c.map(|r| num_traits::ToPrimitive::to_f64(&r).unwrap());
        let v = point_outside_w(&PencilOracle::new(p), y, &cfg).unwrap();
        assert!(!v.is_outside(), "{v:?}");
    }
}

#[test]
fn dual_line_examples() {
    let cfg = LemmaConfig::default();
    let tri = PencilOracle::new(HermitianPencil::rounded_triangle());
    for y in [[0.0, 0.0], [0.3, -0.2], [-0.5, 0.4]] {
        assert!(!point_outside_w(&tri, y, &cfg).unwrap().is_outside());
        let l = ProjPoint::new([1.0, y[0], y[1]]).unwrap().polar();
        assert!(!line_meets_interior_dual(&tri, &l, &cfg).unwrap().meets());
    }
    let w = omega().to_f64();
    let l = ProjPoint::new([1.0, w, w]).unwrap().polar();
    match line_meets_interior_dual(&FermatOracle::sextic(), &l, &cfg).unwrap() {
        DualLine::Meets { point, margin } => {
            assert!(margin > 0.1);
            assert!((1.0 + w * point[0] + w * point[1]).abs() < 1e-12);
            assert!(point[0].powi(6) + point[1].powi(6) < 1.0);
        }
        other => panic!("{other:?}"),
    }
    let line_inf = ProjLine::from_pole(ProjPoint::new([0.0, 0.0, 1.0]).unwrap());
    assert!(!line_inf.is_line_at_infinity());
    let horizon = ProjLine::from_pole(ProjPoint::new([1.0, 0.0, 0.0]).unwrap());
    assert!(horizon.is_line_at_infinity());
    assert!(!line_meets_interior_dual(&tri, &horizon, &cfg).unwrap().meets());
}

#[test]
fn lemma_ws_on_examples() {
    let cfg = LemmaConfig::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let samples: Vec<[f64; 2]> = (0..200).map(|_| [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)]).collect();
    let tri = PencilOracle::new(HermitianPencil::rounded_triangle().centered());
    let rep = check_lemma_ws(&tri, &samples, &cfg).unwrap();
    assert!(rep.all_passed(), "{rep}");
    let fer = check_lemma_ws(&FermatOracle::sextic(), &samples, &cfg).unwrap();
    assert!(fer.all_passed(), "{fer}");

    // a boundary point of W falls in the band
    let b = HermitianPencil::rounded_triangle().centered().sample_numrange_boundary(7).unwrap()[3].point;
    let t = lemma_ws_tally(&tri, &[b], &cfg).unwrap();
    assert_eq!(t.boundary, 1);

    let one = HermitianPencil::new(HermitianMatrix::from_real_rows(&[&[2]], 1), HermitianMatrix::from_real_rows(&[&[1]], 1)).unwrap();
    let rep = check_lemma_ws(&PencilOracle::new(one), &samples, &cfg).unwrap();
    assert_eq!(rep.checks()[0].status, CheckStatus::Degenerate);
}

#[test]
fn tangency_on_fermat() {
    let p = parse_poly("x0^6 - x1^6 - x2^6", &Ring::projective("x")).unwrap();
    let eps = rat(1, 1) / BigRational::from_integer(num_bigint::BigInt::from(10).pow(45));
    let w = omega().enclosure(&eps);
    let y = [RationalInterval::point(rat(1, 1)), w.clone(), w.clone()];
    let wit = tangency_check(&p, &y).unwrap();
    assert_eq!(wit.len(), 2);
    let a = alpha().enclosure(&eps);
    let inv2w = w.scale(&rat(2, 1)).recip().unwrap();
    let re = -&inv2w;
    let im = &a * &inv2w;
    let plus = CBox::new(re.clone(), im.clone());
    let minus = CBox::new(re.clone(), -&im);
    for sign in [false, true] {
        let (e1, e2) = if sign { (&plus, &minus) } else { (&minus, &plus) };
        let hit = wit.iter().filter(|t| {
            let aff = t.affine.as_ref().unwrap();
            aff[0].encloses(e1) && aff[1].encloses(e2)
        });
        assert_eq!(hit.count(), 1);
    }
    for t in &wit {
        assert!(t.residual.contains_zero() && t.gradient_parallel());
        assert!(t.affine.as_ref().unwrap()[0].width() < 1e-20);
    }
}

#[test]
fn tangency_on_conic() {
    let p = parse_poly("x0^2 - x1^2 - x2^2", &Ring::projective("x")).unwrap();
    let pt = |v: [i64; 3]| v.map(|c| RationalInterval::point(rat(c, 1)));
    let wit = tangency_check(&p, &pt([1, 1, 0])).unwrap();
    assert_eq!(wit.len(), 1);
    let aff = wit[0].affine.as_ref().unwrap();
    assert!(aff[0].contains(&rat(-1, 1), &rat(0, 1)) && aff[1].contains(&rat(0, 1), &rat(0, 1)));
    assert!(wit[0].gradient_parallel());
    assert!(tangency_check(&p, &pt([1, 0, 0])).unwrap().is_empty());
    assert!(tangency_check(&p, &pt([2, 1, 1])).unwrap().is_empty());
    let fermat = parse_poly("x0^6 - x1^6 - x2^6", &Ring::projective("x")).unwrap();
    assert!(tangency_check(&fermat, &pt([1, 2, 3])).unwrap().is_empty());
}

#[test]
fn line_checks() {
    let par = HermitianPencil::parabola();
    let r = line_curve_real_check(&par, &[rat(0, 1), rat(0, 1)], &[rat(0, 1), rat(1, 1)]).unwrap();
    assert_eq!(r.restriction, UniPoly::from_ints(&[1, 1]));
    assert!(r.all_real());
    let pts = r.finite_points_f64(&[rat(0, 1), rat(0, 1)], &[rat(0, 1), rat(1, 1)]);
    assert!((pts[0][1] + 1.0).abs() < 1e-9 && pts[0][0].abs() < 1e-12);
    let (inf, mult) = r.at_infinity.clone().unwrap();
    assert_eq!(inf.coords(), &[rat(0, 1), rat(0, 1), rat(1, 1)]);
    assert_eq!(mult, 1);

    let tri = HermitianPencil::rounded_triangle();
    let r = line_curve_real_check(&tri, &[rat(0, 1), rat(0, 1)], &[rat(1, 1), rat(0, 1)]).unwrap();
    assert!(r.all_real() && r.real_roots.len() == 2);
    assert!(matches!(
        line_curve_real_check(&par, &[rat(0, 1), rat(-1, 1)], &[rat(1, 1), rat(0, 1)]),
        Err(GeomError::NotInterior(_))
    ));

    let fermat = FermatOracle::sextic().curve().unwrap().unwrap();
    let r = line_poly_real_check(&fermat, &[rat(0, 1), rat(0, 1)], &[rat(1, 1), rat(0, 1)]).unwrap();
    assert!(!r.all_real());
    assert_eq!(r.real_roots.len(), 2);
}

#[test]
fn random_interior_lines_meet_in_real_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let tri = HermitianPencil::rounded_triangle();
    let mut done = 0;
    while done < 30 {
        let e = [rat(rng.gen_range(-40..=40), 100), rat(rng.gen_range(-40..=40), 100)];
        let d = [rat(rng.gen_range(-9..=9), 7), rat(rng.gen_range(-9..=9), 7)];
        match line_curve_real_check(&tri, &e, &d) {
            Ok(r) => {
                assert!(r.all_real());
                done += 1;
            }
            Err(GeomError::NotInterior(_)) | Err(GeomError::ZeroDirection) => {}
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn hull_examples() {
    let sq = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0], [0.5, 0.5], [0.5, 0.0]];
    let h = convex_hull(&sq);
    assert_eq!(h, vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]);
    assert_eq!(convex_hull(&[[2.0, 3.0]]), vec![[2.0, 3.0]]);
    assert_eq!(convex_hull(&[[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]]).len(), 2);
}

#[test]
fn hausdorff_examples() {
    let sq = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
    assert_eq!(hausdorff(&sq, &sq).unwrap(), 0.0);
    let moved: Vec<[f64; 2]> = sq.iter().map(|p| [p[0] + 0.1, p[1]]).collect();
    assert!((hausdorff(&sq, &moved).unwrap() - 0.1).abs() < 1e-12);
    assert_eq!(hausdorff(&sq, &[]), Err(GeomError::EmptyInput));
    let a = [[0.0, 0.0]];
    let b = [[0.0, 0.0], [3.0, 4.0]];
    assert_eq!(hausdorff(&a, &b).unwrap(), 5.0);
}

#[test]
fn kippenhahn_cloud_of_rounded_triangle() {
    let p = HermitianPencil::rounded_triangle();
    let cloud = sample_kippenhahn_curve(&p, 400, &EigenConfig::default()).unwrap();
    assert_eq!(cloud.len(), 1200);
    let hull = convex_hull(&cloud.coords());
    let boundary: Vec<[f64; 2]> = p.sample_numrange_boundary(400).unwrap().iter().map(|s| s.point).collect();
    assert!(hausdorff(&hull, &boundary).unwrap() < 1e-2);
    // the top branch never reaches the hull
    let inner = cloud.branch(1);
    let bh = convex_hull(&boundary);
    assert!(inner.iter().all(|y| inside_polygon(&bh, *y)));
    let q = crate::groebner::dual_curve(&crate::matrixpencil::pencil_det(&p).unwrap()).unwrap();
    let norm = q.l1_norm_f64();
    for pt in cloud.points.iter().step_by(7) {
        assert!(q.eval_f64(&[1.0, pt.y[0], pt.y[1]]).abs() <= 1e-6 * norm);
    }
}

fn inside_polygon(poly: &[[f64; 2]], y: [f64; 2]) -> bool {
    (0..poly.len()).all(|i| {
        let a = poly[i];
        let b = poly[(i + 1) % poly.len()];
        (b[0] - a[0]) * (y[1] - a[1]) - (b[1] - a[1]) * (y[0] - a[0]) >= -1e-12
    })
}

#[test]
fn two_by_two_cloud_is_an_ellipse() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let p = random_pencil(&mut rng, 2);
    let cloud = sample_kippenhahn_curve(&p, 60, &EigenConfig::default()).unwrap();
    let pts = cloud.coords();
    // fit a conic through five points by the dual of the determinant and
    // check all others against it
    let q = crate::groebner::dual_curve(&crate::matrixpencil::pencil_det(&p).unwrap()).unwrap();
    assert_eq!(q.total_degree(), Some(2));
    let norm = q.l1_norm_f64();
    assert!(pts.iter().all(|y| q.eval_f64(&[1.0, y[0], y[1]]).abs() < 1e-9 * norm));
}

#[test]
fn normal_pencil_cloud_is_finite() {
    let k = HermitianMatrix::from_real_rows(&[&[1, 0, 0], &[0, -2, 0], &[0, 0, 3]], 1);
    let l = HermitianMatrix::from_real_rows(&[&[0, 0, 0], &[0, 5, 0], &[0, 0, -1]], 1);
    let p = HermitianPencil::new(k, l).unwrap();
    let cloud = sample_kippenhahn_curve(&p, 50, &EigenConfig::default()).unwrap();
    let mut distinct: Vec<[f64; 2]> = Vec::new();
    for y in cloud.coords() {
        if !distinct.iter().any(|d| (d[0] - y[0]).hypot(d[1] - y[1]) < 1e-9) {
            distinct.push(y);
        }
    }
    assert_eq!(distinct.len(), 3);
}

#[test]
fn csv_round_trip() {
    let cloud = sample_kippenhahn_curve(&HermitianPencil::parabola(), 5, &EigenConfig::default()).unwrap();
    let text = cloud.to_csv();
    assert!(text.starts_with("theta,y1,y2,branch\n"));
    let back = PointCloud::from_csv(&text).unwrap();
    assert_eq!(back.points, cloud.points);
    assert!(PointCloud::from_csv("x,y\n").is_err());
    assert!(PointCloud::from_csv("theta,y1,y2,branch\n1,2,nan,0\n").is_err());
}

#[test]
fn report_format() {
    let mut r = VerificationReport::new();
    r.push("a", CheckStatus::Pass, "fine", vec![]);
    r.push("b", CheckStatus::Fail, "broken", vec!["point (1, 2)".into()]);
    assert!(!r.all_passed());
    let s = r.to_string();
    assert_eq!(s.lines().count(), 3);
    assert!(s.lines().nth(1).unwrap().starts_with("FAIL"));
}

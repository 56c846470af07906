use kippenhahn::exactnum::rat;
use kippenhahn::groebner::dual_curve;
use kippenhahn::mpoly::{parse_poly, MultiPoly, Ring};
use kippenhahn::realroots::real_singular_points;

fn fermat_dual() -> MultiPoly {
    let p = parse_poly("x0^6 - x1^6 - x2^6", &Ring::projective("x")).unwrap();
    dual_curve(&p).unwrap()
}

#[test]
fn dual_is_symmetric_under_the_curve_symmetries() {
    let q = fermat_dual();
    let ring = q.ring().clone();
    let y: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(&ring, i)).collect();
    let swapped = q.substitute(&[y[0].clone(), y[2].clone(), y[1].clone()]);
    let flipped = q.substitute(&[y[0].clone(), y[1].scale(&rat(-1, 1)), y[2].clone()]);
    assert_eq!(swapped, q);
    assert_eq!(flipped, q);
    assert_eq!(q.total_degree(), Some(30));
}

#[test]
fn census_is_closed_under_the_symmetries() {
    let pts: Vec<[f64; 2]> = real_singular_points(&fermat_dual()).unwrap().iter().map(|p| p.to_f64()).collect();
    assert_eq!(pts.len(), 8);
    for [a, b] in &pts {
        for image in [[*b, *a], [-a, *b], [*a, -b]] {
            assert!(
                pts.iter().any(|p| (p[0] - image[0]).abs() + (p[1] - image[1]).abs() < 1e-9),
                "{image:?} missing"
            );
        }
    }
}

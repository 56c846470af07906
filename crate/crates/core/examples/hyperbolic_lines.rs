//! Lines through interior points of the spectrahedron meet the determinant
//! curve only in real points; the Fermat sextic fails this.

use kippenhahn::convexgeom::{line_curve_real_check, line_poly_real_check, ConvexOracle, FermatOracle};
use kippenhahn::exactnum::rat;
use kippenhahn::matrixpencil::HermitianPencil;

fn main() {
    let par = HermitianPencil::parabola();
    let (e, d) = ([rat(0, 1), rat(0, 1)], [rat(0, 1), rat(1, 1)]);
    let r = line_curve_real_check(&par, &e, &d).unwrap();
    println!("parabola, vertical line through the origin:");
    println!("  restriction {}", r.restriction.display_in("t"));
    for pt in r.finite_points_f64(&e, &d) {
        println!("  real point (1 : {} : {})", pt[0], pt[1]);
    }
    if let Some((pt, mult)) = &r.at_infinity {
        println!("  point at infinity {pt} with multiplicity {mult}");
    }

    let tri = HermitianPencil::rounded_triangle();
    for (e, d) in [
        ([rat(0, 1), rat(0, 1)], [rat(1, 1), rat(0, 1)]),
        ([rat(1, 10), rat(-1, 5)], [rat(3, 7), rat(2, 1)]),
    ] {
        let r = line_curve_real_check(&tri, &e, &d).unwrap();
        println!("3x3 pencil, e = ({}, {}), dir = ({}, {}): all real = {}", e[0], e[1], d[0], d[1], r.all_real());
    }

    let fermat = FermatOracle::sextic().curve().unwrap().unwrap();
    let r = line_poly_real_check(&fermat, &[rat(0, 1), rat(0, 1)], &[rat(1, 1), rat(1, 2)]).unwrap();
    println!(
        "Fermat sextic through the origin: {} real of {} intersections",
        r.real_roots.len(),
        r.squarefree_degree
    );
}

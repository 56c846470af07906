//! Support function, boundary points of the numerical range W and of the
//! spectrahedron S for the built-in 3x3 pencil.

use kippenhahn::matrixpencil::HermitianPencil;

fn main() {
    let p = HermitianPencil::rounded_triangle();
    println!("{:>8} {:>12} {:>26} {:>26}", "theta", "h(x)", "point of W", "point of S");
    for s in p.sample_numrange_boundary(12).expect("eigen") {
        let dual = p.dual_boundary_point(s.direction).expect("origin inside W");
        println!(
            "{:8.4} {:12.8} ({:11.8}, {:11.8}) ({:11.8}, {:11.8})",
            s.theta, s.h, s.point[0], s.point[1], dual[0], dual[1]
        );
    }
    for s in [[0.0, 0.0], [0.5, 0.5], [1.0, 0.0]] {
        println!(
            "lambda_min(1 + {}K + {}L) = {:.10}",
            s[0],
            s[1],
            p.spectrahedron_lambda_min(s).unwrap()
        );
    }
}

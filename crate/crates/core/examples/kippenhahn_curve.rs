//! Samples the Kippenhahn curve by eigenvector branches, writes it as CSV
//! and compares its convex hull with the boundary of the numerical range.
//!
//! ```text
//! cargo run --release --example kippenhahn_curve -- 2000 > cloud.csv
//! ```

use kippenhahn::convexgeom::{convex_hull, hausdorff, sample_kippenhahn_curve};
use kippenhahn::groebner::dual_curve;
use kippenhahn::matrixpencil::{pencil_det, EigenConfig, HermitianPencil};

fn main() {
    let m: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(720);
    let pencil = HermitianPencil::rounded_triangle();
    let cloud = sample_kippenhahn_curve(&pencil, m, &EigenConfig::default()).unwrap();
    print!("{}", cloud.to_csv());

    let hull = convex_hull(&cloud.coords());
    let boundary: Vec<[f64; 2]> = pencil
        .sample_numrange_boundary(m)
        .unwrap()
        .into_iter()
        .map(|s| s.point)
        .collect();
    let q = dual_curve(&pencil_det(&pencil).unwrap()).unwrap();
    let norm = q.l1_norm_f64();
    let worst = cloud
        .points
        .iter()
        .map(|c| q.eval_f64(&[1.0, c.y[0], c.y[1]]).abs() / norm)
        .fold(0.0, f64::max);
    eprintln!("{} points, {} hull vertices", cloud.len(), hull.len());
    eprintln!("hausdorff(hull, boundary of W) = {:.3e}", hausdorff(&hull, &boundary).unwrap());
    eprintln!("max |q(1,y)| / |q|_1 = {worst:.3e}");
}

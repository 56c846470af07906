//! A point is outside W exactly when its polar line crosses the interior of
//! the dual set; both sides are computed independently on random points.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kippenhahn::convexgeom::{
    check_lemma_ws, line_meets_interior_dual, point_outside_w, FermatOracle, LemmaConfig, PencilOracle, ProjPoint,
};
use kippenhahn::matrixpencil::HermitianPencil;

fn main() {
    let cfg = LemmaConfig::default();
    let tri = PencilOracle::new(HermitianPencil::rounded_triangle().centered());
    for y in [[0.1, 0.1], [1.5, 0.0], [0.0, -1.2]] {
        let side = point_outside_w(&tri, y, &cfg).unwrap();
        let polar = ProjPoint::new([1.0, y[0], y[1]]).unwrap().polar();
        let dual = line_meets_interior_dual(&tri, &polar, &cfg).unwrap();
        println!("y = {y:?}: {side:?}\n    polar: {dual:?}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let samples: Vec<[f64; 2]> = (0..200).map(|_| [rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0)]).collect();
    print!("{}", check_lemma_ws(&tri, &samples, &cfg).unwrap());
    print!("{}", check_lemma_ws(&FermatOracle::sextic(), &samples, &cfg).unwrap());
}

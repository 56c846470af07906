//! The polar line of the isolated singular point (1 : w : w) of the Fermat
//! dual touches the Fermat sextic at two complex-conjugate points.

use kippenhahn::convexgeom::tangency_check;
use kippenhahn::exactnum::{rat, AlgebraicReal, RationalInterval};
use kippenhahn::mpoly::{parse_poly, Ring};
use kippenhahn::realroots::UniPoly;

fn main() {
    let p = parse_poly("x0^6 - x1^6 - x2^6", &Ring::projective("x")).unwrap();
    // w^12 - 11 w^6 - 1 = 0
    let w = AlgebraicReal::new(
        &UniPoly::from_ints(&[-1, 0, 0, 0, 0, 0, -11, 0, 0, 0, 0, 0, 1]),
        RationalInterval::new(rat(1, 1), rat(2, 1)).unwrap(),
    )
    .unwrap();
    let wbox = w.enclosure(&rat(1, 1_000_000_000_000_000_000));
    println!("w in {wbox}");
    let y = [RationalInterval::point(rat(1, 1)), wbox.clone(), wbox];
    for t in tangency_check(&p, &y).unwrap() {
        let a = t.affine.as_ref().unwrap();
        println!("contact (1 : {} : {})", a[0], a[1]);
        println!("  p at contact {}, gradient parallel to pole: {}", t.residual, t.gradient_parallel());
    }
}

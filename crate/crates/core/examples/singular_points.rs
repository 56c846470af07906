//! Real singular points of a plane curve, here the dual of the Fermat
//! sextic unless a curve is given on the command line.
//!
//! ```text
//! cargo run --release --example singular_points
//! cargo run --release --example singular_points -- "y0*y2^2 - y1^2*(y1 + y0)"
//! ```

use std::time::Instant;

use kippenhahn::groebner::dual_curve;
use kippenhahn::mpoly::{parse_poly, Ring};
use kippenhahn::realroots::{real_singular_points, Chart};

fn main() {
    let q = match std::env::args().nth(1) {
        Some(src) => parse_poly(&src, &Ring::projective("y")).unwrap_or_else(|e| {
            eprintln!("parse error: {e}");
            std::process::exit(2);
        }),
        None => {
            let p = parse_poly("x0^6 - x1^6 - x2^6", &Ring::projective("x")).unwrap();
            dual_curve(&p).expect("dual of the Fermat sextic")
        }
    };
    let start = Instant::now();
    let pts = real_singular_points(&q).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        std::process::exit(5);
    });
    println!("{} real singular points ({:.2?})", pts.len(), start.elapsed());
    for p in &pts {
        let [a, b] = p.to_f64();
        let chart = match p.chart {
            Chart::Affine => "affine",
            Chart::Infinity => "infinity",
        };
        println!(
            "  {chart:8} ({a:+.16}, {b:+.16})  multiplicity>={}  isolated={}",
            p.multiplicity_hint, p.isolated_flag
        );
    }
}

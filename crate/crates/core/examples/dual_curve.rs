//! Dual curve of a plane curve by elimination.
//!
//! ```text
//! cargo run --release --example dual_curve -- "x0^6 - x1^6 - x2^6"
//! ```

use std::time::Instant;

use kippenhahn::groebner::{dual_curve_with, GroebnerConfig};
use kippenhahn::mpoly::{parse_poly, Ring};

fn main() {
    let src = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "x0^3 - 3/4*x2*x0^2 - 2*x1^2*x0 - 21/16*x2^2*x0 + 55/64*x2^3 - 3/2*x1^2*x2".into());
    let p = match parse_poly(&src, &Ring::projective("x")) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("parse error: {e}");
            std::process::exit(2);
        }
    };
    let start = Instant::now();
    match dual_curve_with(&p, &GroebnerConfig::default()) {
        Ok((q, stats)) => {
            println!("p = {p}");
            println!("q = {q}");
            println!(
                "degree {}, {} terms, {:.2?}",
                q.total_degree().unwrap_or(0),
                q.len(),
                start.elapsed()
            );
            println!("{stats:?}");
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
}

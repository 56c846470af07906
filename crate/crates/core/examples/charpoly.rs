//! Determinant of a Hermitian pencil read from a TOML matrix file.
//!
//! ```text
//! cargo run --example charpoly -- crates/core/examples/data/rounded_triangle.toml
//! ```

use kippenhahn::matrixpencil::{parse_pencil_toml, pencil_det, pencil_to_toml, HermitianPencil};

fn main() {
    let pencil = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).expect("readable matrix file");
            parse_pencil_toml(&text).unwrap_or_else(|e| {
                eprintln!("{path}: {e}");
                std::process::exit(2);
            })
        }
        None => HermitianPencil::rounded_triangle(),
    };
    print!("{}", pencil_to_toml(&pencil));
    let p = pencil_det(&pencil).expect("real determinant");
    println!("p = {p}");
    let c = pencil.centroid();
    println!("centroid of W = ({}, {})", c[0], c[1]);
}

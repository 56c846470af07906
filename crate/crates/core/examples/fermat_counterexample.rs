//! The Fermat sextic oracle: its dual curve has four real isolated
//! singular points lying outside W, so W is not the convex hull of the real
//! points of the dual curve.
//!
//! ```text
//! cargo run --release --example fermat_counterexample
//! ```

use kippenhahn::cli::{verify_input, Input, JobConfig};
use kippenhahn::convexgeom::FermatOracle;

fn main() {
    let report = verify_input(&Input::Fermat(FermatOracle::sextic()), &JobConfig::default()).unwrap();
    print!("{report}");
    let hull = report.get("hull-inclusion").unwrap();
    println!("\nhull inclusion: {} with {} witnesses", hull.status, hull.witnesses.len());
}

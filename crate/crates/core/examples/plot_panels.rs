//! Writes the four SVG panels for a preset into a directory.
//!
//! ```text
//! cargo run --release --example plot_panels -- fermat6 figures/
//! ```

use std::path::PathBuf;

use kippenhahn::cli::{plot_panel, JobConfig, Panel, Preset};

fn main() {
    let mut args = std::env::args().skip(1);
    let preset = args.next().unwrap_or_else(|| "rounded-triangle".into());
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "figures".into()));
    let input = Preset::from_name(&preset).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2);
    });
    let cfg = JobConfig::default();
    std::fs::create_dir_all(&dir).unwrap();
    for panel in Panel::ALL {
        let (svg, cloud) = plot_panel(&input.load(), panel, &cfg).unwrap();
        let path = dir.join(format!("{preset}-{}.svg", panel.name()));
        std::fs::write(&path, svg).unwrap();
        println!("{}", path.display());
        if let Some(c) = cloud {
            let path = dir.join(format!("{preset}-kippenhahn.csv"));
            std::fs::write(&path, c.to_csv()).unwrap();
            println!("{}", path.display());
        }
    }
}

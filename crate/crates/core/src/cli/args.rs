use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::convexgeom::CheckStatus;

use super::{
    cmd_charpoly, cmd_dual, cmd_singular, plot_panel, singular_table, singular_target, verify_input, CliError, Input,
    JobConfig, Panel,
};

#[derive(Debug, Parser)]
#[command(name = "kippenhahn", version, about = "Pencil determinants, dual curves and numerical-range checks")]
pub struct Args {
    #[command(subcommand)]
    pub command: Option<Command>,

    /// Matrix file (TOML) or polynomial file.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Built-in input: fermat6, rounded-triangle or parabola.
    #[arg(long, global = true)]
    pub preset: Option<String>,
    /// TOML file with job settings; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Sampling directions.
    #[arg(long, global = true)]
    pub resolution: Option<usize>,
    #[arg(long, global = true)]
    pub tol_eigen: Option<f64>,
    #[arg(long, global = true)]
    pub tol_geom: Option<f64>,
    /// Largest intermediate polynomial in the Gröbner computation.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    /// Largest coefficient bit length in the Gröbner computation.
    #[arg(long, global = true)]
    pub max_bits: Option<u64>,
    #[arg(long, global = true)]
    pub out_dir: Option<PathBuf>,
    /// Panel for `plot`; all four when omitted.
    #[arg(long, global = true)]
    pub panel: Option<String>,
    /// Print the effective settings and exit.
    #[arg(long, global = true)]
    pub show_config: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print det(x0 + x1 K + x2 L).
    Charpoly,
    /// Print the dual curve.
    Dual,
    /// List the real singular points of a polynomial (of the dual curve for
    /// matrix inputs and presets).
    Singular,
    /// Run the verification checks and print the report.
    Verify,
    /// Write SVG panels (and the Kippenhahn cloud as CSV).
    Plot,
}

impl Args {
    /// Defaults, then the config file, then flags.
    pub fn job_config(&self) -> Result<JobConfig, CliError> {
        let mut cfg = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                JobConfig::from_toml(&text)?
            }
            None => JobConfig::default(),
        };
        if let Some(v) = self.resolution {
            cfg.resolution = v;
        }
        if let Some(v) = self.tol_eigen {
            cfg.tol_eigen = v;
        }
        if let Some(v) = self.tol_geom {
            cfg.tol_geom = v;
        }
        if let Some(v) = self.max_terms {
            cfg.max_terms = v;
        }
        if let Some(v) = self.max_bits {
            cfg.max_bits = v;
        }
        if let Some(v) = &self.out_dir {
            cfg.out_dir = v.clone();
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

/// Entry point of the binary; returns the process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&args, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(args: &Args, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = args.job_config()?;
    if args.show_config {
        write!(out, "{}", cfg.to_toml())?;
        return Ok(0);
    }
    let command = args
        .command
        .as_ref()
        .ok_or_else(|| CliError::Usage("missing command (charpoly, dual, singular, verify, plot)".into()))?;
    let input = Input::resolve(args.input.as_deref(), args.preset.as_deref())?;
    match command {
        Command::Charpoly => writeln!(out, "{}", cmd_charpoly(&input)?)?,
        Command::Dual => {
            let d = cmd_dual(&input, &cfg)?;
            writeln!(out, "{}", d.q)?;
            writeln!(err, "dual curve: {}", d.summary())?;
        }
        Command::Singular => {
            let q = singular_target(&input, &cfg)?;
            write!(out, "{}", singular_table(&cmd_singular(&q)?))?;
        }
        Command::Verify => {
            let report = verify_input(&input, &cfg)?;
            write!(out, "{report}")?;
            if report.count(CheckStatus::Degenerate) > 0 {
                writeln!(err, "warning: degenerate input, some checks were skipped")?;
            }
            if !report.all_passed() {
                return Err(CliError::VerifyFailed);
            }
        }
        Command::Plot => {
            let panels = match &args.panel {
                Some(p) => vec![Panel::from_name(p)?],
                None => Panel::ALL.to_vec(),
            };
            std::fs::create_dir_all(&cfg.out_dir)?;
            for panel in panels {
                let (svg, cloud) = plot_panel(&input, panel, &cfg)?;
                let path = cfg.out_dir.join(format!("{}.svg", panel.name()));
                std::fs::write(&path, svg)?;
                writeln!(out, "wrote {}", path.display())?;
                if let Some(c) = cloud {
                    let path = cfg.out_dir.join("kippenhahn.csv");
                    std::fs::write(&path, c.to_csv())?;
                    writeln!(out, "wrote {}", path.display())?;
                }
            }
        }
    }
    Ok(0)
}

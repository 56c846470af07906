//! Command layer behind the `kippenhahn` binary: job configuration, input
//! loading, and the charpoly, dual, singular, verify and plot commands.

mod args;
mod plot;
mod verify;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::convexgeom::{FermatOracle, GeomError};
use crate::exactnum::{BigRational, RationalInterval};
use crate::groebner::{dual_curve_with, GroebnerConfig, GroebnerError};
use crate::matrixpencil::{parse_pencil_toml, pencil_det, EigenConfig, HermitianPencil, PencilError};
use crate::mpoly::{parse_auto, squarefree_part, MultiPoly, ParseError, PolyError};
use crate::realroots::{real_singular_points, Chart, RealRootsError, SingularPoint};

pub use args::{run, Args, Command};
pub use plot::{marching_squares, plot_panel, Panel, Svg};
pub use verify::{verify_input, UNCHECKED_CLAIMS};

/// Effective settings of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct JobConfig {
    pub resolution: usize,
    pub tol_eigen: f64,
    pub tol_geom: f64,
    pub max_terms: usize,
    pub max_bits: u64,
    pub out_dir: PathBuf,
    /// Random samples for the outside-W and line checks of `verify`.
    pub samples: usize,
    pub seed: u64,
}

impl Default for JobConfig {
    fn default() -> Self {
        let g = GroebnerConfig::default();
        Self {
            resolution: 720,
            tol_eigen: 1e-12,
            tol_geom: 1e-9,
            max_terms: g.max_terms,
            max_bits: g.max_bits,
            out_dir: PathBuf::from("."),
            samples: 200,
            seed: 1,
        }
    }
}

impl JobConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| {
            let (line, col) = e.span().map_or((1, 1), |s| line_col(text, s.start));
            CliError::Parse(format!("config line {line}, column {col}: {}", e.message()))
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.resolution < 3 {
            return Err(CliError::Usage(format!("resolution must be at least 3, got {}", self.resolution)));
        }
        if !(self.tol_eigen > 0.0 && self.tol_geom > 0.0) {
            return Err(CliError::Usage("tolerances must be positive".into()));
        }
        Ok(())
    }

    pub fn groebner(&self) -> GroebnerConfig {
        GroebnerConfig {
            max_terms: self.max_terms,
            max_bits: self.max_bits,
        }
    }

    pub fn eigen(&self) -> EigenConfig {
        EigenConfig {
            tol: self.tol_eigen,
            ..EigenConfig::default()
        }
    }
}

pub(crate) fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, col)
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(String),
    #[error("resource cap exceeded: {0}")]
    Cap(GroebnerError),
    #[error("{0}")]
    NonPrincipal(GroebnerError),
    #[error("precision exhausted; last box {0}")]
    Precision(String),
    #[error("verification failed")]
    VerifyFailed,
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    /// 1 failed verification, 2 bad input, 3 Gröbner cap, 4 non-principal
    /// elimination ideal, 5 precision exhausted.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::VerifyFailed | Self::Other(_) => 1,
            Self::Usage(_) | Self::Parse(_) | Self::Io(_) => 2,
            Self::Cap(_) => 3,
            Self::NonPrincipal(_) => 4,
            Self::Precision(_) => 5,
        }
    }
}

impl From<GroebnerError> for CliError {
    fn from(e: GroebnerError) -> Self {
        match e {
            GroebnerError::TermCap { .. } | GroebnerError::BitCap { .. } => Self::Cap(e),
            GroebnerError::NonPrincipal(_) => Self::NonPrincipal(e),
            GroebnerError::BadCurve | GroebnerError::NotSquarefree => Self::Usage(e.to_string()),
            other => Self::Other(other.to_string()),
        }
    }
}

impl From<RealRootsError> for CliError {
    fn from(e: RealRootsError) -> Self {
        match e {
            RealRootsError::PrecisionExhausted(b) => Self::Precision(b),
            other => Self::Usage(other.to_string()),
        }
    }
}

impl From<PencilError> for CliError {
    fn from(e: PencilError) -> Self {
        match e {
            PencilError::Parse { .. } | PencilError::NotHermitian { .. } | PencilError::SizeMismatch(..) | PencilError::EntryCount { .. } => {
                Self::Parse(e.to_string())
            }
            other => Self::Other(other.to_string()),
        }
    }
}

impl From<GeomError> for CliError {
    fn from(e: GeomError) -> Self {
        match e {
            GeomError::Pencil(p) => p.into(),
            other => Self::Other(other.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        Self::Usage(e.to_string())
    }
}

/// Built-in inputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// Fermat sextic oracle, no matrix representation.
    Fermat6,
    /// 3x3 pencil with a rounded-triangle numerical range.
    RoundedTriangle,
    /// 2x2 pencil whose curve is a parabola.
    Parabola,
}

impl Preset {
    pub const NAMES: [&'static str; 3] = ["fermat6", "rounded-triangle", "parabola"];

    pub fn from_name(name: &str) -> Result<Self, CliError> {
        match name {
            "fermat6" => Ok(Self::Fermat6),
            "rounded-triangle" => Ok(Self::RoundedTriangle),
            "parabola" => Ok(Self::Parabola),
            _ => Err(CliError::Usage(format!("unknown preset {name:?}; known: {}", Self::NAMES.join(", ")))),
        }
    }

    pub fn load(self) -> Input {
        match self {
            Self::Fermat6 => Input::Fermat(FermatOracle::sextic()),
            Self::RoundedTriangle => Input::Pencil(HermitianPencil::rounded_triangle()),
            Self::Parabola => Input::Pencil(HermitianPencil::parabola()),
        }
    }
}

/// What a command runs on.
#[derive(Debug, Clone)]
pub enum Input {
    Pencil(HermitianPencil),
    Poly(MultiPoly),
    Fermat(FermatOracle),
}

impl Input {
    /// Matrix files are TOML (`.toml`, or any text with an `=`); everything
    /// else is read as a polynomial.
    pub fn parse(text: &str, path: Option<&Path>) -> Result<Self, CliError> {
        let is_toml = path.and_then(|p| p.extension()).map_or(text.contains('='), |e| e == "toml");
        if is_toml {
            Ok(Self::Pencil(parse_pencil_toml(text)?))
        } else {
            let p = parse_auto(text).map_err(|e: ParseError| CliError::Parse(e.to_string()))?;
            Ok(Self::Poly(p))
        }
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text, Some(path)).map_err(|e| match e {
            CliError::Parse(m) => CliError::Parse(format!("{}: {m}", path.display())),
            other => other,
        })
    }

    /// From exactly one of `--input` / `--preset`.
    pub fn resolve(input: Option<&Path>, preset: Option<&str>) -> Result<Self, CliError> {
        match (input, preset) {
            (Some(p), None) => Self::read(p),
            (None, Some(name)) => Ok(Preset::from_name(name)?.load()),
            (None, None) => Err(CliError::Usage("one of --input or --preset is required".into())),
            (Some(_), Some(_)) => Err(CliError::Usage("--input and --preset are exclusive".into())),
        }
    }

    /// The primal curve polynomial.
    pub fn curve(&self) -> Result<MultiPoly, CliError> {
        match self {
            Self::Pencil(p) => Ok(pencil_det(p)?),
            Self::Poly(p) => Ok(p.clone()),
            Self::Fermat(f) => Ok(crate::convexgeom::ConvexOracle::curve(f)?.expect("Fermat oracle has a curve")),
        }
    }
}

/// Canonical text of the pencil determinant.
pub fn cmd_charpoly(input: &Input) -> Result<String, CliError> {
    match input {
        Input::Pencil(p) => Ok(pencil_det(p)?.to_string()),
        _ => Err(CliError::Usage("charpoly needs a matrix file or a pencil preset".into())),
    }
}

/// Result of `dual`.
#[derive(Debug, Clone)]
pub struct DualOutput {
    pub p: MultiPoly,
    pub q: MultiPoly,
    pub stats: crate::groebner::Stats,
}

impl DualOutput {
    pub fn summary(&self) -> String {
        format!(
            "degree {}, {} terms ({} pairs reduced, basis size {})",
            self.q.total_degree().unwrap_or(0),
            self.q.len(),
            self.stats.pairs_reduced,
            self.stats.basis_size
        )
    }
}

/// Dual curve of the input curve (pencil determinants are reduced to
/// their squarefree part first).
pub fn cmd_dual(input: &Input, cfg: &JobConfig) -> Result<DualOutput, CliError> {
    let mut p = input.curve()?;
    if matches!(input, Input::Pencil(_)) {
        p = squarefree_part(&p)?;
    }
    let (q, stats) = dual_curve_with(&p, &cfg.groebner())?;
    Ok(DualOutput { p, q, stats })
}

/// Polynomial whose singular points `singular` reports: the given
/// polynomial, or the dual curve for pencils and presets.
pub fn singular_target(input: &Input, cfg: &JobConfig) -> Result<MultiPoly, CliError> {
    match input {
        Input::Poly(p) => Ok(p.clone()),
        _ => Ok(cmd_dual(input, cfg)?.q),
    }
}

pub fn cmd_singular(q: &MultiPoly) -> Result<Vec<SingularPoint>, CliError> {
    Ok(real_singular_points(q)?)
}

fn interval_text(r: &RationalInterval) -> String {
    let (lo, hi) = r.to_f64_bounds();
    format!("[{lo:.15e}, {hi:.15e}]")
}

/// One row per point: chart, coordinate enclosures, isolated flag.
pub fn singular_table(points: &[SingularPoint]) -> String {
    let eps = BigRational::new(BigInt::from(1), BigInt::from(10).pow(20));
    let mut s = String::new();
    let _ = writeln!(s, "# {} real singular point(s)", points.len());
    let _ = writeln!(s, "# chart\tcoord_a\tcoord_b\tisolated\tmultiplicity_hint\tapprox");
    for p in points {
        let b = p.enclosure(&eps);
        let chart = match p.chart {
            Chart::Affine => "affine",
            Chart::Infinity => "infinity",
        };
        let v = p.projective_f64();
        let _ = writeln!(
            s,
            "{chart}\t{}\t{}\t{}\t{}\t({:.12} : {:.12} : {:.12})",
            interval_text(&b[1]),
            interval_text(&b[2]),
            p.isolated_flag,
            p.multiplicity_hint,
            v[0],
            v[1],
            v[2]
        );
    }
    s
}

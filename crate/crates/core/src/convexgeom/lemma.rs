use std::f64::consts::TAU;

use super::oracle::ConvexOracle;
use super::projective::{ProjLine, ProjPoint};
use super::report::{CheckStatus, VerificationReport};
use super::GeomError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaConfig {
    /// Directions sampled before local refinement.
    pub directions: usize,
    /// Half-width of the boundary band treated as inconclusive.
    pub tol: f64,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        Self {
            directions: 720,
            tol: 1e-9,
        }
    }
}

/// Position of a point relative to W. `gap` is the minimum over unit
/// directions `x` of `<x, y> - h(x)`, attained at `direction`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Membership {
    /// `direction` separates y from W.
    Outside { direction: [f64; 2], gap: f64 },
    Inside { direction: [f64; 2], gap: f64 },
    Boundary { direction: [f64; 2], gap: f64 },
}

impl Membership {
    pub fn gap(&self) -> f64 {
        match *self {
            Self::Outside { gap, .. } | Self::Inside { gap, .. } | Self::Boundary { gap, .. } => gap,
        }
    }

    pub fn direction(&self) -> [f64; 2] {
        match *self {
            Self::Outside { direction, .. } | Self::Inside { direction, .. } | Self::Boundary { direction, .. } => {
                direction
            }
        }
    }

    pub fn is_outside(&self) -> bool {
        matches!(self, Self::Outside { .. })
    }
}

/// Best point of a line in the dual chart: the maximum of `1 + h(s)` along
/// it, positive exactly when the line crosses the interior of S.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DualLine {
    Meets { point: [f64; 2], margin: f64 },
    Misses { point: Option<[f64; 2]>, margin: f64 },
    Boundary { point: [f64; 2], margin: f64 },
}

impl DualLine {
    pub fn meets(&self) -> bool {
        matches!(self, Self::Meets { .. })
    }

    pub fn margin(&self) -> f64 {
        match *self {
            Self::Meets { margin, .. } | Self::Misses { margin, .. } | Self::Boundary { margin, .. } => margin,
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Golden-section search for a minimum of `f` on `[a, b]`.
fn golden_min(f: &mut dyn FnMut(f64) -> Result<f64, GeomError>, mut a: f64, mut b: f64, iters: usize) -> Result<(f64, f64), GeomError> {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    for _ in 0..iters {
        if (b - a).abs() < 1e-15 * (1.0 + a.abs()) {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc < fd { (c, fc) } else { (d, fd) })
}

/// Decides whether `y` lies outside W by minimizing `<x(θ), y> - h(x(θ))`
/// over sampled directions, refined by golden section around the smallest
/// local minima.
pub fn point_outside_w(oracle: &dyn ConvexOracle, y: [f64; 2], cfg: &LemmaConfig) -> Result<Membership, GeomError> {
    let m = cfg.directions.max(8);
    let mut g = |t: f64| -> Result<f64, GeomError> {
        let x = [t.cos(), t.sin()];
        Ok(x[0] * y[0] + x[1] * y[1] - oracle.support(x)?)
    };
    let step = TAU / m as f64;
    let vals: Vec<f64> = (0..m).map(|j| g(step * j as f64)).collect::<Result<_, _>>()?;
    let mut minima: Vec<usize> = (0..m)
        .filter(|&j| vals[j] <= vals[(j + m - 1) % m] && vals[j] <= vals[(j + 1) % m])
        .collect();
    minima.sort_by(|&a, &b| vals[a].total_cmp(&vals[b]));
    minima.truncate(4);
    let mut best = (0.0, f64::INFINITY);
    for &j in &minima {
        let t = step * j as f64;
        let cand = golden_min(&mut g, t - step, t + step, 80)?;
        let cand = if vals[j] < cand.1 { (t, vals[j]) } else { cand };
        if cand.1 < best.1 {
            best = cand;
        }
    }
    let direction = [best.0.cos(), best.0.sin()];
    let gap = best.1;
    Ok(if gap < -cfg.tol {
        Membership::Outside { direction, gap }
    } else if gap > cfg.tol {
        Membership::Inside { direction, gap }
    } else {
        Membership::Boundary { direction, gap }
    })
}

/// Maximizes the concave function `f` on the real line, starting from 0.
fn maximize_concave(
    f: &mut dyn FnMut(f64) -> Result<f64, GeomError>,
    scale: f64,
    stop_above: f64,
) -> Result<(f64, f64), GeomError> {
    let f0 = f(0.0)?;
    if f0 > stop_above {
        return Ok((0.0, f0));
    }
    // walk outward from 0 on each side until f stops increasing; by
    // concavity the maximum lies between the two stopping points
    let mut ends = [0.0f64; 2];
    for (end, sign) in ends.iter_mut().zip([-1.0, 1.0]) {
        let mut prev = f0;
        let mut s = scale;
        loop {
            let v = f(sign * s)?;
            if v > stop_above {
                return Ok((sign * s, v));
            }
            if v <= prev || s > 1e12 {
                *end = sign * s;
                break;
            }
            prev = v;
            s *= 2.0;
        }
    }
    let mut neg = |t: f64| f(t).map(|v| -v);
    let (t, v) = golden_min(&mut neg, ends[0], ends[1], 200)?;
    Ok((t, -v))
}

/// Decides whether the affine part of `line` crosses the interior of the
/// dual set S, by concave maximization of `1 + h(s)` along the line.
pub fn line_meets_interior_dual(
    oracle: &dyn ConvexOracle,
    line: &ProjLine<f64>,
    cfg: &LemmaConfig,
) -> Result<DualLine, GeomError> {
    if line.is_line_at_infinity() {
        return Ok(DualLine::Misses {
            point: None,
            margin: f64::NEG_INFINITY,
        });
    }
    let [a0, a1, a2] = *line.pole().coords();
    let n2 = a1 * a1 + a2 * a2;
    let base = [-a0 * a1 / n2, -a0 * a2 / n2];
    let nn = n2.sqrt();
    let dir = [-a2 / nn, a1 / nn];
    let at = |t: f64| [base[0] + t * dir[0], base[1] + t * dir[1]];
    let mut phi = |t: f64| oracle.dual_margin(at(t));
    let scale = 0.25 * (1.0 + base[0].hypot(base[1]));
    let (t, margin) = maximize_concave(&mut phi, scale, 64.0 * cfg.tol)?;
    let point = at(t);
    Ok(if margin > cfg.tol {
        DualLine::Meets { point, margin }
    } else if margin < -cfg.tol {
        DualLine::Misses {
            point: Some(point),
            margin,
        }
    } else {
        DualLine::Boundary { point, margin }
    })
}

/// Tallies of an outside-W versus polar run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LemmaTally {
    pub consistent: usize,
    pub boundary: usize,
    pub mismatches: Vec<String>,
}

/// Runs both sides of the equivalence "y outside W iff the polar of y meets
/// the interior of S" on each sample. Samples with either side inside the
/// tolerance band are counted as boundary cases and excluded.
pub fn lemma_ws_tally(oracle: &dyn ConvexOracle, samples: &[[f64; 2]], cfg: &LemmaConfig) -> Result<LemmaTally, GeomError> {
    for t in [0.0, 0.25, 0.5, 0.75] {
        let x = [(TAU * t).cos(), (TAU * t).sin()];
        let h = oracle.support(x)?;
        if h >= -cfg.tol {
            return Err(GeomError::OriginNotInterior(h));
        }
    }
    let mut tally = LemmaTally::default();
    for &y in samples {
        let side = point_outside_w(oracle, y, cfg)?;
        let polar = ProjPoint::new([1.0, y[0], y[1]])?.polar();
        let dual = line_meets_interior_dual(oracle, &polar, cfg)?;
        if matches!(side, Membership::Boundary { .. }) || matches!(dual, DualLine::Boundary { .. }) {
            tally.boundary += 1;
        } else if side.is_outside() == dual.meets() {
            tally.consistent += 1;
        } else {
            tally.mismatches.push(format!(
                "y = ({:.12}, {:.12}): gap {:.3e} at direction ({:.6}, {:.6}), polar margin {:.3e}",
                y[0],
                y[1],
                side.gap(),
                side.direction()[0],
                side.direction()[1],
                dual.margin()
            ));
        }
    }
    Ok(tally)
}

/// Outside-W versus polar check as a one-entry report; a degenerate W gives a
/// `Degenerate` entry instead of running the samples.
pub fn check_lemma_ws(oracle: &dyn ConvexOracle, samples: &[[f64; 2]], cfg: &LemmaConfig) -> Result<VerificationReport, GeomError> {
    let mut report = VerificationReport::new();
    if oracle.is_degenerate()? {
        report.push("lemma-ws", CheckStatus::Degenerate, "W has empty interior", vec![]);
        return Ok(report);
    }
    let tally = lemma_ws_tally(oracle, samples, cfg)?;
    let summary = format!(
        "{} consistent, {} in boundary band, {} mismatched",
        tally.consistent,
        tally.boundary,
        tally.mismatches.len()
    );
    let status = if tally.mismatches.is_empty() { CheckStatus::Pass } else { CheckStatus::Fail };
    report.push("lemma-ws", status, summary, tally.mismatches);
    Ok(report)
}

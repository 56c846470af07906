use std::f64::consts::TAU;
use std::fmt::Write as _;

use crate::matrixpencil::{eigen_hermitian, EigenConfig, HermitianPencil};

use super::GeomError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CloudPoint {
    pub theta: f64,
    pub y: [f64; 2],
    /// Eigenvalue index in ascending order; 0 is the supporting branch.
    pub branch: usize,
}

/// Sampled points with a note on how they were generated.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PointCloud {
    pub points: Vec<CloudPoint>,
    pub source: String,
    pub resolution: usize,
}

impl PointCloud {
    pub fn from_points(points: &[[f64; 2]], source: &str) -> Self {
        Self {
            points: points
                .iter()
                .map(|&y| CloudPoint {
                    theta: 0.0,
                    y,
                    branch: 0,
                })
                .collect(),
            source: source.to_string(),
            resolution: points.len(),
        }
    }

    pub fn coords(&self) -> Vec<[f64; 2]> {
        self.points.iter().map(|p| p.y).collect()
    }

    pub fn branch(&self, k: usize) -> Vec<[f64; 2]> {
        self.points.iter().filter(|p| p.branch == k).map(|p| p.y).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// CSV with header `theta,y1,y2,branch`, full round-trip precision.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("theta,y1,y2,branch\n");
        for p in &self.points {
            let _ = writeln!(s, "{:?},{:?},{:?},{}", p.theta, p.y[0], p.y[1], p.branch);
        }
        s
    }

    pub fn from_csv(text: &str) -> Result<Self, GeomError> {
        let mut lines = text.lines();
        if lines.next().map(str::trim) != Some("theta,y1,y2,branch") {
            return Err(GeomError::Parse("missing header theta,y1,y2,branch".into()));
        }
        let mut points = Vec::new();
        for (i, line) in lines.enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let bad = || GeomError::Parse(format!("line {}: expected theta,y1,y2,branch", i + 2));
            let f: Vec<&str> = line.split(',').map(str::trim).collect();
            if f.len() != 4 {
                return Err(bad());
            }
            let num = |s: &str| s.parse::<f64>().ok().filter(|v| v.is_finite()).ok_or_else(bad);
            points.push(CloudPoint {
                theta: num(f[0])?,
                y: [num(f[1])?, num(f[2])?],
                branch: f[3].parse().map_err(|_| bad())?,
            });
        }
        let resolution = points.len();
        Ok(Self {
            points,
            source: "csv".into(),
            resolution,
        })
    }
}

/// Kippenhahn curve by eigenvector branches: for each of `m` directions
/// and each eigenpair `(λ_k, η_k)` of `x1*K + x2*L`, the point
/// `(<η_k,Kη_k>, <η_k,Lη_k>)`.
pub fn sample_kippenhahn_curve(pencil: &HermitianPencil, m: usize, cfg: &EigenConfig) -> Result<PointCloud, GeomError> {
    if m < 3 {
        return Err(GeomError::Unsupported(format!("need at least 3 directions, got {m}")));
    }
    let n = pencil.n();
    let mut points = Vec::with_capacity(m * n);
    for j in 0..m {
        let theta = TAU * j as f64 / m as f64;
        let mat = pencil.combination_f64([0.0, theta.cos(), theta.sin()]);
        let e = eigen_hermitian(&mat, n, cfg)?;
        for (branch, eta) in e.eigenvectors.iter().enumerate() {
            points.push(CloudPoint {
                theta,
                y: pencil.numerical_value(eta),
                branch,
            });
        }
    }
    Ok(PointCloud {
        points,
        source: format!("eigenvector branches of a {n}x{n} pencil"),
        resolution: m,
    })
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

/// Counterclockwise extreme points by the monotone chain; collinear points
/// are dropped.
pub fn convex_hull(points: &[[f64; 2]]) -> Vec<[f64; 2]> {
    let mut pts: Vec<[f64; 2]> = points.iter().copied().filter(|p| p[0].is_finite() && p[1].is_finite()).collect();
    pts.sort_by(|a, b| a[0].total_cmp(&b[0]).then(a[1].total_cmp(&b[1])));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<[f64; 2]> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &[f64; 2]>> = if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// Symmetric Hausdorff distance between finite point sets.
pub fn hausdorff(a: &[[f64; 2]], b: &[[f64; 2]]) -> Result<f64, GeomError> {
    if a.is_empty() || b.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    Ok(directed(a, b).max(directed(b, a)))
}

fn directed(a: &[[f64; 2]], b: &[[f64; 2]]) -> f64 {
    // sort b by x so each query can stop once the x-gap exceeds the best
    let mut sb = b.to_vec();
    sb.sort_by(|p, q| p[0].total_cmp(&q[0]));
    let mut worst = 0.0f64;
    for p in a {
        let i = sb.partition_point(|q| q[0] < p[0]);
        let mut best = f64::INFINITY;
        for q in sb[i..].iter() {
            if q[0] - p[0] >= best {
                break;
            }
            best = best.min((q[0] - p[0]).hypot(q[1] - p[1]));
        }
        for q in sb[..i].iter().rev() {
            if p[0] - q[0] >= best {
                break;
            }
            best = best.min((q[0] - p[0]).hypot(q[1] - p[1]));
        }
        worst = worst.max(best);
    }
    worst
}

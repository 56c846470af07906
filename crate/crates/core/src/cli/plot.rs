use std::fmt::Write as _;

use crate::convexgeom::{sample_kippenhahn_curve, ConvexOracle, FermatOracle, PencilOracle, PointCloud};
use crate::mpoly::MultiPoly;
use crate::realroots::{real_singular_points, Chart, SingularPoint};

use super::{cmd_dual, CliError, Input, JobConfig};

/// The four drawings: supporting lines of W, the primal curve, the dual
/// curve, and the Kippenhahn curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Panel {
    Supports,
    PrimalCurve,
    DualCurve,
    Kippenhahn,
}

impl Panel {
    pub const ALL: [Panel; 4] = [Self::Supports, Self::PrimalCurve, Self::DualCurve, Self::Kippenhahn];

    pub fn name(self) -> &'static str {
        match self {
            Self::Supports => "supports",
            Self::PrimalCurve => "primal-curve",
            Self::DualCurve => "dual-curve",
            Self::Kippenhahn => "kippenhahn",
        }
    }

    pub fn from_name(s: &str) -> Result<Self, CliError> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown panel {s:?}; known: supports, primal-curve, dual-curve, kippenhahn")))
    }
}

/// Grid-sampled zero set of `f` on `[x0, x1] x [y0, y1]` as line segments.
pub fn marching_squares(f: &dyn Fn(f64, f64) -> f64, bbox: [f64; 4], n: usize) -> Vec<[[f64; 2]; 2]> {
    let [x0, x1, y0, y1] = bbox;
    let hx = (x1 - x0) / n as f64;
    let hy = (y1 - y0) / n as f64;
    let at = |i: usize, j: usize| [x0 + hx * i as f64, y0 + hy * j as f64];
    let vals: Vec<f64> = (0..=n).flat_map(|j| (0..=n).map(move |i| (i, j))).map(|(i, j)| {
        let p = at(i, j);
        f(p[0], p[1])
    }).collect();
    let v = |i: usize, j: usize| vals[j * (n + 1) + i];
    let cut = |a: [f64; 2], fa: f64, b: [f64; 2], fb: f64| {
        let t = if fa == fb { 0.5 } else { fa / (fa - fb) };
        [a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])]
    };
    let mut segs = Vec::new();
    for j in 0..n {
        for i in 0..n {
            let c = [at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)];
            let f = [v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1)];
            if f.iter().any(|x| !x.is_finite()) {
                continue;
            }
            let s: Vec<bool> = f.iter().map(|&x| x >= 0.0).collect();
            let mut pts = Vec::with_capacity(4);
            for e in 0..4 {
                let (a, b) = (e, (e + 1) % 4);
                if s[a] != s[b] {
                    pts.push(cut(c[a], f[a], c[b], f[b]));
                }
            }
            match pts.len() {
                2 => segs.push([pts[0], pts[1]]),
                4 => {
                    // saddle: the center sign decides which corners connect
                    let center = f.iter().sum::<f64>() / 4.0 >= 0.0;
                    if center == s[0] {
                        segs.push([pts[0], pts[1]]);
                        segs.push([pts[2], pts[3]]);
                    } else {
                        segs.push([pts[3], pts[0]]);
                        segs.push([pts[1], pts[2]]);
                    }
                }
                _ => {}
            }
        }
    }
    segs
}

/// Minimal SVG canvas in data coordinates with equal axis scales.
#[derive(Debug, Clone)]
pub struct Svg {
    bbox: [f64; 4],
    size: f64,
    body: String,
}

impl Svg {
    /// Square canvas covering `points` with a 10% margin.
    pub fn fit(points: &[[f64; 2]], size: f64) -> Self {
        Self {
            bbox: fit_bbox(points),
            size,
            body: String::new(),
        }
    }

    pub fn bbox(&self) -> [f64; 4] {
        self.bbox
    }

    fn px(&self, p: [f64; 2]) -> (f64, f64) {
        let [x0, x1, y0, y1] = self.bbox;
        (
            (p[0] - x0) / (x1 - x0) * self.size,
            (y1 - p[1]) / (y1 - y0) * self.size,
        )
    }

    fn inside(&self, p: [f64; 2]) -> bool {
        let [x0, x1, y0, y1] = self.bbox;
        p[0] >= x0 && p[0] <= x1 && p[1] >= y0 && p[1] <= y1
    }

    pub fn segments(&mut self, segs: &[[[f64; 2]; 2]], color: &str, width: f64) {
        if segs.is_empty() {
            return;
        }
        let mut d = String::new();
        for s in segs {
            let (a, b) = (self.px(s[0]), self.px(s[1]));
            let _ = write!(d, "M{:.2} {:.2}L{:.2} {:.2}", a.0, a.1, b.0, b.1);
        }
        let _ = writeln!(self.body, r#"<path d="{d}" stroke="{color}" stroke-width="{width}" fill="none"/>"#);
    }

    pub fn polygon(&mut self, pts: &[[f64; 2]], color: &str, width: f64) {
        if pts.is_empty() {
            return;
        }
        let list: Vec<String> = pts.iter().map(|&p| {
            let (x, y) = self.px(p);
            format!("{x:.2},{y:.2}")
        }).collect();
        let _ = writeln!(
            self.body,
            r#"<polygon points="{}" stroke="{color}" stroke-width="{width}" fill="none"/>"#,
            list.join(" ")
        );
    }

    pub fn dots(&mut self, pts: &[[f64; 2]], color: &str, r: f64) {
        for &p in pts {
            if !self.inside(p) {
                continue;
            }
            let (x, y) = self.px(p);
            let _ = writeln!(self.body, r#"<circle cx="{x:.2}" cy="{y:.2}" r="{r}" fill="{color}"/>"#);
        }
    }

    /// Supporting-line style: the part of `a*x + b*y = c` inside the canvas.
    pub fn line(&mut self, a: f64, b: f64, c: f64, color: &str, width: f64) {
        let [x0, x1, y0, y1] = self.bbox;
        let mut hits = Vec::new();
        if b != 0.0 {
            for x in [x0, x1] {
                let y = (c - a * x) / b;
                if y >= y0 && y <= y1 {
                    hits.push([x, y]);
                }
            }
        }
        if a != 0.0 {
            for y in [y0, y1] {
                let x = (c - b * y) / a;
                if x >= x0 && x <= x1 {
                    hits.push([x, y]);
                }
            }
        }
        if hits.len() >= 2 {
            self.segments(&[[hits[0], hits[hits.len() - 1]]], color, width);
        }
    }

    pub fn render(&self, title: &str) -> String {
        let s = self.size;
        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#
        );
        let _ = writeln!(out, "<title>{title}</title>");
        let _ = writeln!(out, r#"<rect x="0" y="0" width="{s}" height="{s}" fill="white" stroke="black"/>"#);
        let [x0, x1, y0, y1] = self.bbox;
        let mut axes = Vec::new();
        if x0 <= 0.0 && 0.0 <= x1 {
            axes.push([[0.0, y0], [0.0, y1]]);
        }
        if y0 <= 0.0 && 0.0 <= y1 {
            axes.push([[x0, 0.0], [x1, 0.0]]);
        }
        let mut ax = Svg {
            bbox: self.bbox,
            size: self.size,
            body: String::new(),
        };
        ax.segments(&axes, "#999999", 0.5);
        out.push_str(&ax.body);
        out.push_str(&self.body);
        out.push_str("</svg>\n");
        out
    }
}

fn fit_bbox(points: &[[f64; 2]]) -> [f64; 4] {
    let pts: Vec<&[f64; 2]> = points.iter().filter(|p| p[0].is_finite() && p[1].is_finite()).collect();
    if pts.is_empty() {
        return [-1.0, 1.0, -1.0, 1.0];
    }
    let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
    for p in pts {
        x0 = x0.min(p[0]);
        x1 = x1.max(p[0]);
        y0 = y0.min(p[1]);
        y1 = y1.max(p[1]);
    }
    let half = 0.5 * (x1 - x0).max(y1 - y0).max(1e-6) * 1.1;
    let (cx, cy) = (0.5 * (x0 + x1), 0.5 * (y0 + y1));
    [cx - half, cx + half, cy - half, cy + half]
}

const SIZE: f64 = 512.0;
const GRID: usize = 512;

fn boundary_points(oracle: &dyn ConvexOracle, m: usize) -> Result<Vec<[f64; 2]>, CliError> {
    (0..m)
        .map(|j| {
            let t = std::f64::consts::TAU * j as f64 / m as f64;
            Ok(oracle.support_point([t.cos(), t.sin()])?)
        })
        .collect()
}

/// Boundary of S, `-x/h(x)`, when the origin is interior to W.
fn dual_boundary(oracle: &dyn ConvexOracle, m: usize) -> Result<Option<Vec<[f64; 2]>>, CliError> {
    let mut out = Vec::with_capacity(m);
    for j in 0..m {
        let t = std::f64::consts::TAU * j as f64 / m as f64;
        let x = [t.cos(), t.sin()];
        let h = oracle.support(x)?;
        if h >= -1e-9 {
            return Ok(None);
        }
        out.push([-x[0] / h, -x[1] / h]);
    }
    Ok(Some(out))
}

fn affine_contour(p: &MultiPoly, bbox: [f64; 4]) -> Vec<[[f64; 2]; 2]> {
    // evaluate a scaled copy so huge coefficients stay in f64 range
    let scale = 1.0 / p.l1_norm_f64().max(1e-300);
    marching_squares(&|a, b| p.eval_f64(&[1.0, a, b]) * scale, bbox, GRID)
}

fn affine_singular(points: &[SingularPoint]) -> (Vec<[f64; 2]>, Vec<[f64; 2]>) {
    let mut iso = Vec::new();
    let mut other = Vec::new();
    for p in points.iter().filter(|p| p.chart == Chart::Affine) {
        if p.isolated_flag {
            iso.push(p.to_f64());
        } else {
            other.push(p.to_f64());
        }
    }
    (iso, other)
}

/// Draws one panel; the Kippenhahn panel of a pencil also returns its
/// point cloud.
pub fn plot_panel(input: &Input, panel: Panel, cfg: &JobConfig) -> Result<(String, Option<PointCloud>), CliError> {
    cfg.validate()?;
    let pencil_oracle;
    let fermat;
    let oracle: Option<&dyn ConvexOracle> = match input {
        Input::Pencil(p) => {
            pencil_oracle = PencilOracle {
                pencil: p.clone(),
                eigen: cfg.eigen(),
            };
            Some(&pencil_oracle)
        }
        Input::Fermat(f) => {
            fermat = *f;
            Some(&fermat as &FermatOracle)
        }
        Input::Poly(_) => None,
    };
    let m = cfg.resolution;
    let title = format!("{} panel", panel.name());
    match panel {
        Panel::Supports => {
            let oracle = oracle.ok_or_else(|| CliError::Usage("supports panel needs a pencil or preset".into()))?;
            let bd = boundary_points(oracle, m)?;
            let mut svg = Svg::fit(&bd, SIZE);
            let fan = 72.min(m);
            for j in 0..fan {
                let t = std::f64::consts::TAU * j as f64 / fan as f64;
                let x = [t.cos(), t.sin()];
                svg.line(x[0], x[1], oracle.support(x)?, "#3366cc", 0.6);
            }
            svg.polygon(&bd, "black", 1.2);
            Ok((svg.render(&title), None))
        }
        Panel::PrimalCurve => {
            let p = input.curve()?;
            let region = match oracle {
                Some(o) => dual_boundary(o, m)?,
                None => None,
            };
            let mut svg = match &region {
                Some(r) => Svg::fit(r, SIZE),
                None => Svg::fit(&[[-2.0, -2.0], [2.0, 2.0]], SIZE),
            };
            svg.segments(&affine_contour(&p, svg.bbox()), "black", 1.0);
            Ok((svg.render(&title), None))
        }
        Panel::DualCurve | Panel::Kippenhahn => {
            let q = cmd_dual(input, cfg).ok().map(|d| d.q);
            let sing = match &q {
                Some(q) => real_singular_points(q).unwrap_or_default(),
                None => Vec::new(),
            };
            let (iso, other) = affine_singular(&sing);
            let bd = match oracle {
                Some(o) => boundary_points(o, m)?,
                None => Vec::new(),
            };
            let cloud = match input {
                Input::Pencil(p) if panel == Panel::Kippenhahn => Some(sample_kippenhahn_curve(p, m, &cfg.eigen())?),
                _ => None,
            };
            let mut frame: Vec<[f64; 2]> = bd.clone();
            frame.extend(iso.iter().chain(&other));
            if let Some(c) = &cloud {
                frame.extend(c.coords());
            }
            let mut svg = Svg::fit(&frame, SIZE);
            match (&cloud, &q) {
                (Some(c), _) => {
                    for (k, color) in (0..).zip(["black", "#cc3333", "#3366cc", "#339933"].iter().cycle()).take(c.points.iter().map(|p| p.branch + 1).max().unwrap_or(0)) {
                        svg.dots(&c.branch(k), color, 0.8);
                    }
                }
                (None, Some(q)) => svg.segments(&affine_contour(q, svg.bbox()), "black", 1.0),
                (None, None) => {}
            }
            if panel == Panel::DualCurve || cloud.is_none() {
                svg.polygon(&bd, "#3366cc", 0.8);
            }
            svg.dots(&other, "#339933", 3.0);
            svg.dots(&iso, "#cc3333", 4.0);
            Ok((svg.render(&title), cloud))
        }
    }
}

use num_complex::Complex64;
use num_traits::Zero;

use crate::exactnum::{rat, BigRational, RationalInterval};
use crate::mpoly::MultiPoly;

use super::cbox::{f64_rat, CBox};
use super::GeomError;

/// Univariate polynomial with interval coefficients, constant term first.
type IPoly = Vec<RationalInterval>;

const BITS: u32 = 200;

fn ipoly_mul(a: &IPoly, b: &IPoly) -> IPoly {
    let mut out = vec![RationalInterval::point(BigRational::zero()); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (&out[i + j] + &(x * y)).round_outward(BITS);
        }
    }
    out
}

fn ipoly_derivative(a: &IPoly) -> IPoly {
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(&BigRational::from_integer((k as i64).into())))
        .collect()
}

fn ipoly_eval(a: &IPoly, z: &CBox) -> CBox {
    let mut acc = CBox::zero();
    for c in a.iter().rev() {
        acc = (&(&acc * z) + &CBox::real(c.clone())).round_outward(BITS);
    }
    acc
}

/// Simultaneous root approximation by the Aberth iteration.
pub(crate) fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut c = coeffs.to_vec();
    while c.len() > 1 && c.last().map_or(false, |z| z.norm() == 0.0) {
        c.pop();
    }
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let lead = c[n];
    let radius = 1.0 + c[..n].iter().map(|z| (z / lead).norm()).fold(0.0, f64::max);
    let eval = |z: Complex64| {
        let mut p = Complex64::zero();
        let mut dp = Complex64::zero();
        for a in c.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    };
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(0.5 * radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..500 {
        let mut moved = 0.0f64;
        for k in 0..n {
            let (p, dp) = eval(roots[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != k).map(|j| (roots[k] - roots[j]).inv()).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            roots[k] -= w;
            moved = moved.max(w.norm() / (1.0 + roots[k].norm()));
        }
        if moved < 1e-16 {
            break;
        }
    }
    roots
}

/// One complex point of contact between the curve and a line.
#[derive(Debug, Clone, PartialEq)]
pub struct TangencyWitness {
    /// Parameter box on the line, certified to hold exactly one root of the
    /// derivative of the restriction for every `y` in the input boxes.
    pub parameter: CBox,
    /// Homogeneous coordinates of the contact point.
    pub point: [CBox; 3],
    /// `(x1/x0, x2/x0)` when `x0` is bounded away from zero.
    pub affine: Option<[CBox; 2]>,
    /// Enclosure of `p` at the contact point; contains zero.
    pub residual: CBox,
    /// 2x2 minors of `(∇p(x), y)`; each contains zero when the tangent line
    /// at `x` has pole `y`.
    pub gradient_minors: [CBox; 3],
}

impl TangencyWitness {
    pub fn gradient_parallel(&self) -> bool {
        self.gradient_minors.iter().all(CBox::contains_zero)
    }

    pub fn affine_f64(&self) -> Option<[Complex64; 2]> {
        self.affine.as_ref().map(|a| [a[0].mid(), a[1].mid()])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangencyConfig {
    /// Final enclosures are padded to at least this half-width.
    pub min_radius: f64,
    pub krawczyk_steps: usize,
}

impl Default for TangencyConfig {
    fn default() -> Self {
        Self {
            min_radius: 1e-24,
            krawczyk_steps: 8,
        }
    }
}

/// Points of the curve `p = 0` (over ℂ) whose tangent line is the polar of
/// `y`, found as double roots of `p` restricted to that line.
///
/// `y` is given by coordinate enclosures so irrational poles can be handled
/// rigorously; every witness holds for all `y` in the boxes.
pub fn tangency_check(p: &MultiPoly, y: &[RationalInterval; 3]) -> Result<Vec<TangencyWitness>, GeomError> {
    tangency_check_with(p, y, &TangencyConfig::default())
}

pub fn tangency_check_with(
    p: &MultiPoly,
    y: &[RationalInterval; 3],
    cfg: &TangencyConfig,
) -> Result<Vec<TangencyWitness>, GeomError> {
    if p.nvars() != 3 {
        return Err(GeomError::Unsupported(format!("expected a ternary form, got {} variables", p.nvars())));
    }
    let mags: Vec<f64> = y.iter().map(|c| c.mid_f64().abs()).collect();
    let k = (0..3).max_by(|&a, &b| mags[a].total_cmp(&mags[b])).unwrap_or(0);
    let inv = y[k].recip().ok_or(GeomError::ZeroTriple)?;
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let zero = RationalInterval::point(BigRational::zero());
    let one = RationalInterval::point(BigRational::from_integer(1.into()));
    // the line is spanned by P = e_i - (y_i/y_k) e_k and Q = e_j - (y_j/y_k) e_k;
    // x(t) = t*(P + c*Q) + (Q - P/2) misses only the point P + c*Q, and c is
    // chosen so that this point is off the curve
    let mut e_i = [zero.clone(), zero.clone(), zero.clone()];
    let mut e_j = e_i.clone();
    e_i[i] = one.clone();
    e_i[k] = -&(&y[i] * &inv);
    e_j[j] = one;
    e_j[k] = -&(&y[j] * &inv);
    for c in [rat(3, 7), rat(-5, 11), rat(13, 17), rat(2, 1)] {
        let dir: [RationalInterval; 3] = std::array::from_fn(|v| &e_i[v] + &e_j[v].scale(&c));
        let base: [RationalInterval; 3] = std::array::from_fn(|v| &e_j[v] - &e_i[v].scale(&rat(1, 2)));
        let at_end = eval_cbox(p, &dir.clone().map(CBox::real));
        if !at_end.contains_zero() {
            return contacts(p, y, &dir, &base, cfg);
        }
    }
    Err(GeomError::Degenerate("no admissible parametrization of the polar line".into()))
}

fn contacts(
    p: &MultiPoly,
    y: &[RationalInterval; 3],
    dir: &[RationalInterval; 3],
    base: &[RationalInterval; 3],
    cfg: &TangencyConfig,
) -> Result<Vec<TangencyWitness>, GeomError> {
    let zero = RationalInterval::point(BigRational::zero());
    let line: Vec<IPoly> = (0..3).map(|c| vec![base[c].clone(), dir[c].clone()]).collect();

    let deg = p.total_degree().unwrap_or(0) as usize;
    let mut powers: Vec<Vec<IPoly>> = line.iter().map(|l| vec![vec![RationalInterval::point(BigRational::from_integer(1.into()))], l.clone()]).collect();
    for pw in powers.iter_mut() {
        while pw.len() <= deg {
            let next = ipoly_mul(pw.last().unwrap(), &pw[1]);
            pw.push(next);
        }
    }
    let mut r: IPoly = vec![zero.clone(); deg + 1];
    for (m, c) in p.terms() {
        let mut t = vec![RationalInterval::point(c.clone())];
        for (v, pw) in powers.iter().enumerate() {
            t = ipoly_mul(&t, &pw[m.exp(v) as usize]);
        }
        for (e, ce) in t.into_iter().enumerate() {
            r[e] = (&r[e] + &ce).round_outward(BITS);
        }
    }
    while r.len() > 1 && r.last().map_or(false, |c| c.is_point() && c.lo().is_zero()) {
        r.pop();
    }
    if r.iter().all(RationalInterval::contains_zero) {
        return Err(GeomError::Degenerate("curve contains the polar line".into()));
    }
    let dr = ipoly_derivative(&r);
    let ddr = ipoly_derivative(&dr);
    if dr.is_empty() {
        return Ok(Vec::new());
    }
    let approx: Vec<Complex64> = dr.iter().map(|c| Complex64::new(c.mid_f64(), 0.0)).collect();
    let mut out = Vec::new();
    for z in aberth(&approx) {
        let Some(tbox) = krawczyk(&dr, &ddr, z, cfg)? else {
            let near = ipoly_eval(&r, &CBox::from_complex(z)).mid().norm();
            if near < 1e-8 * r.iter().map(|c| c.mid_f64().abs()).fold(0.0, f64::max) {
                return Err(GeomError::Uncertified(format!("contact near t = {z} is not a simple critical point")));
            }
            continue;
        };
        let residual = ipoly_eval(&r, &tbox);
        if !residual.contains_zero() {
            continue;
        }
        let point: [CBox; 3] = std::array::from_fn(|c| {
            (&(&tbox * &CBox::real(dir[c].clone())) + &CBox::real(base[c].clone())).round_outward(BITS)
        });
        let affine = point[0].recip().map(|inv0| [(&point[1] * &inv0).round_outward(BITS), (&point[2] * &inv0).round_outward(BITS)]);
        let grad: Vec<CBox> = p.gradient().iter().map(|g| eval_cbox(g, &point)).collect();
        let yb: Vec<CBox> = y.iter().map(|c| CBox::real(c.clone())).collect();
        let minor = |a: usize, b: usize| &(&grad[a] * &yb[b]) - &(&grad[b] * &yb[a]);
        out.push(TangencyWitness {
            parameter: tbox,
            point,
            affine,
            residual,
            gradient_minors: [minor(0, 1), minor(0, 2), minor(1, 2)],
        });
    }
    Ok(out)
}

/// Evaluates a polynomial on complex boxes.
pub fn eval_cbox(p: &MultiPoly, point: &[CBox]) -> CBox {
    let mut acc = CBox::zero();
    for (m, c) in p.terms() {
        let mut t = CBox::real(RationalInterval::point(c.clone()));
        for (v, x) in point.iter().enumerate() {
            t = &t * &x.powi(m.exp(v));
        }
        acc = (&acc + &t).round_outward(BITS);
    }
    acc
}

/// Krawczyk test for a simple root of `f` near `z`: returns a box proven
/// to contain exactly one root, or `None` when no radius succeeds.
fn krawczyk(f: &IPoly, df: &IPoly, z: Complex64, cfg: &TangencyConfig) -> Result<Option<CBox>, GeomError> {
    let fz = |w: Complex64| {
        let c = CBox::from_complex(w);
        (ipoly_eval(f, &c).mid(), ipoly_eval(df, &c).mid())
    };
    let mut z = z;
    for _ in 0..4 {
        let (v, d) = fz(z);
        if d.norm() == 0.0 {
            break;
        }
        z -= v / d;
    }
    let scale = 1.0 + z.norm();
    for rho in [1e-12, 1e-10, 1e-8, 1e-6, 1e-4] {
        let mut x = CBox::around(z, rho * scale);
        let mut certified = false;
        for _ in 0..cfg.krawczyk_steps {
            let (cr, ci) = x.mid_exact();
            let c = CBox::point(cr, ci);
            let dmid = ipoly_eval(df, &c).mid();
            if dmid.norm() == 0.0 {
                break;
            }
            let yinv = CBox::from_complex(dmid.inv());
            let kx = &(&c - &(&yinv * &ipoly_eval(f, &c))) + &(&(&CBox::one() - &(&yinv * &ipoly_eval(df, &x))) * &(&x - &c));
            let kx = kx.round_outward(BITS);
            if x.encloses_strictly(&kx) {
                certified = true;
                x = kx;
            } else if certified {
                // K(X) ∩ X still contains the root
                match x.intersect(&kx) {
                    Some(nx) => x = nx,
                    None => return Err(GeomError::Uncertified("empty Krawczyk intersection".into())),
                }
            } else {
                break;
            }
            if x.width() < cfg.min_radius {
                break;
            }
        }
        if certified {
            let (mr, mi) = x.mid_exact();
            let pad = f64_rat(cfg.min_radius.max(x.width()));
            let padded = CBox::new(RationalInterval::around(&mr, &pad), RationalInterval::around(&mi, &pad));
            let x = if padded.encloses(&x) { padded } else { x };
            return Ok(Some(x));
        }
    }
    Ok(None)
}

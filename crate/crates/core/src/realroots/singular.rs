use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{resultant, sturm_isolate, RealRootsError, UniPoly};
use crate::exactnum::{AlgebraicReal, BigRational, RationalInterval};
use crate::mpoly::{squarefree_part, Monomial, MonomialOrder, MultiPoly, Ring};

/// Which affine chart a point's coordinates refer to: `Affine` means
/// `(1 : c0 : c1)`, `Infinity` means `(0 : c0 : c1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Chart {
    Affine,
    Infinity,
}

#[derive(Clone, Debug)]
pub struct SingularPoint {
    pub coords: [AlgebraicReal; 2],
    pub chart: Chart,
    /// Order of the first Taylor coefficient shown nonzero at the point
    /// (exact for rational points); at least 2.
    pub multiplicity_hint: u32,
    /// A square annulus around the point carries no real curve point.
    pub isolated_flag: bool,
}

impl SingularPoint {
    pub fn to_f64(&self) -> [f64; 2] {
        [self.coords[0].to_f64(), self.coords[1].to_f64()]
    }

    /// Homogeneous coordinates as floats.
    pub fn projective_f64(&self) -> [f64; 3] {
        let [a, b] = self.to_f64();
        match self.chart {
            Chart::Affine => [1.0, a, b],
            Chart::Infinity => [0.0, a, b],
        }
    }

    /// Homogeneous coordinate box with side at most `eps`.
    pub fn enclosure(&self, eps: &BigRational) -> [RationalInterval; 3] {
        let first = match self.chart {
            Chart::Affine => BigRational::one(),
            Chart::Infinity => BigRational::zero(),
        };
        [
            RationalInterval::point(first),
            self.coords[0].enclosure(eps),
            self.coords[1].enclosure(eps),
        ]
    }

    /// Enclosures of `q` and its three partials over the point's box; every
    /// one contains zero for a genuine singular point.
    pub fn check(&self, q: &MultiPoly, eps: &BigRational) -> [RationalInterval; 4] {
        let b = self.enclosure(eps);
        [
            q.eval_interval(&b),
            q.partial_derivative(0).eval_interval(&b),
            q.partial_derivative(1).eval_interval(&b),
            q.partial_derivative(2).eval_interval(&b),
        ]
    }
}

#[derive(Clone, Debug)]
pub struct SingularConfig {
    /// Final width of coordinate intervals.
    pub precision: BigRational,
    /// Refinement rounds allowed when separating root images.
    pub max_refinements: usize,
}

impl Default for SingularConfig {
    fn default() -> Self {
        Self {
            precision: BigRational::new(BigInt::one(), BigInt::from(10u8).pow(20)),
            max_refinements: 200,
        }
    }
}

/// Real singular points of the projective curve `q = 0`: the affine ones in
/// the chart of the first variable, then those on the line at infinity.
pub fn real_singular_points(q: &MultiPoly) -> Result<Vec<SingularPoint>, RealRootsError> {
    real_singular_points_with(q, &SingularConfig::default())
}

pub fn real_singular_points_with(
    q: &MultiPoly,
    cfg: &SingularConfig,
) -> Result<Vec<SingularPoint>, RealRootsError> {
    if q.nvars() != 3 {
        return Err(RealRootsError::NotBivariate);
    }
    if q.is_homogeneous()?.is_none() {
        return Err(RealRootsError::NotHomogeneous);
    }
    if !squarefree_part(q)?.equals_up_to_scalar(q) {
        return Err(RealRootsError::NotSquarefree);
    }
    let mut out: Vec<SingularPoint> = chart_points(q, 0, cfg)?
        .into_iter()
        .map(|(coords, m, iso)| SingularPoint {
            coords,
            chart: Chart::Affine,
            multiplicity_hint: m,
            isolated_flag: iso,
        })
        .collect();
    // (0 : 1 : t), read in the chart of the second variable with
    // coordinates (y0, y2).
    for ([y0, t], m, iso) in chart_points(q, 1, cfg)? {
        if y0.sign() == Ordering::Equal {
            out.push(SingularPoint {
                coords: [AlgebraicReal::from_rational(&BigRational::one()), t],
                chart: Chart::Infinity,
                multiplicity_hint: m,
                isolated_flag: iso,
            });
        }
    }
    let e2 = [BigRational::zero(), BigRational::zero(), BigRational::one()];
    if q.eval_rational(&e2).is_zero()
        && (0..3).all(|i| q.partial_derivative(i).eval_rational(&e2).is_zero())
    {
        let f = dehomogenize(q, 2);
        let zero = AlgebraicReal::from_rational(&BigRational::zero());
        let m = multiplicity_hint(&f, &zero, &zero, cfg);
        let iso = isolated(&f, [false, false], &zero, &zero, cfg);
        out.push(SingularPoint {
            coords: [zero, AlgebraicReal::from_rational(&BigRational::one())],
            chart: Chart::Infinity,
            multiplicity_hint: m,
            isolated_flag: iso,
        });
    }
    out.sort_by(|a, b| {
        let (pa, pb) = (a.to_f64(), b.to_f64());
        a.chart
            .cmp(&b.chart)
            .then(pa[0].total_cmp(&pb[0]))
            .then(pa[1].total_cmp(&pb[1]))
    });
    Ok(out)
}

type ChartPoint = ([AlgebraicReal; 2], u32, bool);

/// Singular points of `q` with coordinate `fixed` set to one; the affine
/// coordinates are the other two variables in order.
fn chart_points(
    q: &MultiPoly,
    fixed: usize,
    cfg: &SingularConfig,
) -> Result<Vec<ChartPoint>, RealRootsError> {
    let f = dehomogenize(q, fixed);
    if f.is_constant() {
        return Ok(Vec::new());
    }
    let (big_f, g, h) = deflate(&f);
    let sys = system(&big_f, g, h);
    let ru = projection(&sys, 0)?;
    let rv = projection(&sys, 1)?;
    let us: Vec<AlgebraicReal> = real_roots(&ru)
        .into_iter()
        .filter(|x| g % 2 == 1 || x.sign() != Ordering::Less)
        .collect();
    let vs: Vec<AlgebraicReal> = real_roots(&rv)
        .into_iter()
        .filter(|x| h % 2 == 1 || x.sign() != Ordering::Less)
        .collect();
    let mut out = Vec::new();
    for u in &us {
        for v in &vs {
            let (mut u, mut v) = (u.clone(), v.clone());
            if !is_common_zero(&sys, &mut u, &mut v, cfg) {
                continue;
            }
            let iso = isolated(&big_f, [g % 2 == 0 && g > 0, h % 2 == 0 && h > 0], &u, &v, cfg);
            for a in kth_roots(&u, g, cfg)? {
                for b in kth_roots(&v, h, cfg)? {
                    let a = a.clone().refined(&cfg.precision);
                    let b = b.refined(&cfg.precision);
                    let m = multiplicity_hint(&f, &a, &b, cfg);
                    out.push(([a, b], m, iso));
                }
            }
        }
    }
    Ok(out)
}

fn plane_ring(q: &MultiPoly, fixed: usize) -> Arc<Ring> {
    let names = (0..3)
        .filter(|&i| i != fixed)
        .map(|i| q.ring().vars()[i].clone())
        .collect();
    Ring::new(names, MonomialOrder::GradedRevLex).expect("two variables")
}

fn dehomogenize(q: &MultiPoly, fixed: usize) -> MultiPoly {
    let r = plane_ring(q, fixed);
    let mut k = 0;
    let images: Vec<MultiPoly> = (0..3)
        .map(|i| {
            if i == fixed {
                MultiPoly::one(&r)
            } else {
                k += 1;
                MultiPoly::var(&r, k - 1)
            }
        })
        .collect();
    q.substitute(&images)
}

/// Writes `f(a, b) = F(a^g, b^h)` with the largest exponent gcds `g`, `h`
/// (one when a variable is absent).
fn deflate(f: &MultiPoly) -> (MultiPoly, u32, u32) {
    let gcd_of = |v: usize| {
        let g = f.terms().iter().fold(0u32, |g, (m, _)| g.gcd(&m.exp(v)));
        g.max(1)
    };
    let (g, h) = (gcd_of(0), gcd_of(1));
    let big = MultiPoly::from_terms(
        f.ring(),
        f.terms()
            .iter()
            .map(|(m, c)| (Monomial::new(&[m.exp(0) / g, m.exp(1) / h]), c.clone())),
    );
    (big, g, h)
}

/// Polynomials whose common zeros in the deflated plane are the images of
/// singular points: `F`, and each partial of `F` multiplied by its variable
/// when that variable was deflated.
fn system(big_f: &MultiPoly, g: u32, h: u32) -> Vec<MultiPoly> {
    let r = big_f.ring();
    let mut sys = vec![big_f.clone()];
    for (var, k) in [(0usize, g), (1usize, h)] {
        let d = big_f.partial_derivative(var);
        let d = if k > 1 { &d * &MultiPoly::var(r, var) } else { d };
        if !d.is_zero() {
            sys.push(d);
        }
    }
    sys
}

/// Univariate polynomial in variable `keep` vanishing at the `keep`-coordinate
/// of every common zero of `sys`.
fn projection(sys: &[MultiPoly], keep: usize) -> Result<UniPoly, RealRootsError> {
    let elim = 1 - keep;
    let mut acc = UniPoly::zero();
    for i in 0..sys.len() {
        for j in i + 1..sys.len() {
            let (p, q) = (&sys[i], &sys[j]);
            let r = if !p.involves(elim) && !q.involves(elim) {
                p.to_unipoly(keep)?.gcd(&q.to_unipoly(keep)?)
            } else {
                resultant(p, q, elim)?
            };
            if !r.is_zero() {
                acc = if acc.is_zero() { r } else { acc.gcd(&r) };
            }
        }
    }
    if acc.is_zero() {
        return Err(RealRootsError::Degenerate(
            "every projection resultant vanishes".into(),
        ));
    }
    Ok(acc)
}

fn real_roots(r: &UniPoly) -> Vec<AlgebraicReal> {
    if r.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sq = r.squarefree_part();
    sturm_isolate(&sq)
        .into_iter()
        .map(|root| AlgebraicReal::new(&sq, root.interval).expect("isolating interval"))
        .collect()
}

fn two_pow(k: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << k)
}

/// Decides whether `(u, v)` is a common zero: exactly when both are
/// rational, otherwise by interval evaluation on shrinking boxes.
fn is_common_zero(
    sys: &[MultiPoly],
    u: &mut AlgebraicReal,
    v: &mut AlgebraicReal,
    cfg: &SingularConfig,
) -> bool {
    if let (Some(a), Some(b)) = (u.rational_value(), v.rational_value()) {
        return sys.iter().all(|p| p.eval_rational(&[a.clone(), b.clone()]).is_zero());
    }
    let mut k = 4;
    loop {
        let eps = BigRational::one() / two_pow(k);
        let eps = if eps < cfg.precision { cfg.precision.clone() } else { eps };
        if u.rational_value().is_none() {
            u.refine(&eps);
        }
        if v.rational_value().is_none() {
            v.refine(&eps);
        }
        let bx = [point_or_interval(u), point_or_interval(v)];
        if sys.iter().any(|p| !p.eval_interval(&bx).contains_zero()) {
            return false;
        }
        if eps == cfg.precision {
            return true;
        }
        k += 4;
    }
}

fn point_or_interval(x: &AlgebraicReal) -> RationalInterval {
    match x.rational_value() {
        Some(r) => RationalInterval::point(r),
        None => x.interval().clone(),
    }
}

/// All real `t` with `t^k = x`.
fn kth_roots(
    x: &AlgebraicReal,
    k: u32,
    cfg: &SingularConfig,
) -> Result<Vec<AlgebraicReal>, RealRootsError> {
    if k == 1 {
        return Ok(vec![x.clone()]);
    }
    let sign = x.sign();
    if sign == Ordering::Equal {
        return Ok(vec![AlgebraicReal::from_rational(&BigRational::zero())]);
    }
    if sign == Ordering::Less && k % 2 == 0 {
        return Ok(Vec::new());
    }
    if let Some(r) = x.rational_value() {
        if let Some(root) = exact_root(&r.abs(), k) {
            let root = if sign == Ordering::Less { -root } else { root };
            let mut v = vec![AlgebraicReal::from_rational(&root)];
            if k % 2 == 0 {
                v.push(AlgebraicReal::from_rational(&-root));
            }
            return Ok(v);
        }
    }
    let p = x.poly().inflate(k as usize).squarefree_part();
    let mut y = x.clone();
    for _ in 0..cfg.max_refinements {
        let (l, h) = {
            let iv = y.interval();
            if sign == Ordering::Less {
                (-iv.hi(), -iv.lo())
            } else {
                (iv.lo().clone(), iv.hi().clone())
            }
        };
        if l.is_positive() {
            let lo = root_bound(&l, k, false);
            let hi = root_bound(&h, k, true);
            let iv = if sign == Ordering::Less {
                RationalInterval::new(-&hi, -&lo)
            } else {
                RationalInterval::new(lo.clone(), hi.clone())
            }
            .expect("ordered bounds");
            if let Ok(a) = AlgebraicReal::new(&p, iv) {
                let mut v = vec![a];
                if k % 2 == 0 {
                    let m = RationalInterval::new(-&hi, -&lo).expect("ordered bounds");
                    v.push(AlgebraicReal::new(&p, m).map_err(|_| precision_error(&y))?);
                }
                return Ok(v);
            }
        }
        let w = y.interval().width() / BigRational::from_integer(BigInt::from(16));
        y.refine(&w);
    }
    Err(precision_error(&y))
}

fn precision_error(x: &AlgebraicReal) -> RealRootsError {
    RealRootsError::PrecisionExhausted(x.interval().to_string())
}

fn exact_root(r: &BigRational, k: u32) -> Option<BigRational> {
    let n = r.numer().nth_root(k);
    let d = r.denom().nth_root(k);
    (n.pow(k) == *r.numer() && d.pow(k) == *r.denom()).then(|| BigRational::new(n, d))
}

/// Rational `r` with `r^k <= x` (lower) or `r^k >= x` (upper), close to the
/// real `k`-th root of `x > 0`.
fn root_bound(x: &BigRational, k: u32, upper: bool) -> BigRational {
    let approx = x.to_f64().unwrap_or(1.0).powf(1.0 / k as f64);
    let factor = if upper { 1.0 + 1e-12 } else { 1.0 - 1e-12 };
    let mut r = BigRational::from_float(approx * factor).unwrap_or_else(BigRational::one);
    let step = BigRational::from_float(factor).unwrap();
    loop {
        let p = num_traits::pow(r.clone(), k as usize);
        if (upper && &p >= x) || (!upper && &p <= x) {
            return r;
        }
        r *= &step;
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut b = BigInt::one();
    for i in 0..k {
        b = b * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    b
}

/// Enclosures of the Taylor coefficients of `f` (two variables) at a point
/// of the given box, for total orders up to `max_order`.
fn taylor_enclosures(
    f: &MultiPoly,
    at: &[RationalInterval; 2],
    max_order: u32,
) -> Vec<Vec<RationalInterval>> {
    let deg = f.total_degree().unwrap_or(0);
    let pw: Vec<Vec<RationalInterval>> = at
        .iter()
        .map(|x| (0..=deg).map(|e| x.powi(e)).collect())
        .collect();
    let zero = RationalInterval::point(BigRational::zero());
    let mut out = vec![vec![zero; max_order as usize + 1]; max_order as usize + 1];
    for (m, c) in f.terms() {
        let (i, j) = (m.exp(0), m.exp(1));
        for k in 0..=i.min(max_order) {
            for l in 0..=j.min(max_order - k) {
                let c = c * BigRational::from_integer(binomial(i, k) * binomial(j, l));
                let t = (&pw[0][(i - k) as usize] * &pw[1][(j - l) as usize]).scale(&c);
                out[k as usize][l as usize] = &out[k as usize][l as usize] + &t;
            }
        }
    }
    out
}

fn multiplicity_hint(f: &MultiPoly, a: &AlgebraicReal, b: &AlgebraicReal, cfg: &SingularConfig) -> u32 {
    let at = [
        point_or_interval(&a.clone().refined(&cfg.precision)),
        point_or_interval(&b.clone().refined(&cfg.precision)),
    ];
    let max_order = f.total_degree().unwrap_or(2).min(16);
    let coeffs = taylor_enclosures(f, &at, max_order);
    for order in 1..=max_order {
        let nonzero = (0..=order).any(|k| !coeffs[k as usize][(order - k) as usize].contains_zero());
        if nonzero {
            return order.max(2);
        }
    }
    max_order + 1
}

enum Annulus {
    Definite,
    Witness,
    Unknown,
}

/// Square-annulus test in the plane of `f` around `(u, v)`. `half[i]` keeps
/// coordinate `i` nonnegative (the image of an even power).
fn isolated(
    f: &MultiPoly,
    half: [bool; 2],
    u: &AlgebraicReal,
    v: &AlgebraicReal,
    cfg: &SingularConfig,
) -> bool {
    let c = [
        point_or_interval(&u.clone().refined(&cfg.precision)).mid(),
        point_or_interval(&v.clone().refined(&cfg.precision)).mid(),
    ];
    let r = f.ring();
    let shifted = f.substitute(&[
        &MultiPoly::var(r, 0) + &MultiPoly::constant(r, c[0].clone()),
        &MultiPoly::var(r, 1) + &MultiPoly::constant(r, c[1].clone()),
    ]);
    let clip: [Option<BigRational>; 2] = [
        half[0].then(|| -&c[0]),
        half[1].then(|| -&c[1]),
    ];
    for k in [5u32, 8, 11, 14, 17, 20] {
        match annulus(&shifted, &(BigRational::one() / two_pow(k)), &clip) {
            Annulus::Definite => return true,
            Annulus::Witness => return false,
            Annulus::Unknown => {}
        }
    }
    false
}

fn annulus(s: &MultiPoly, r: &BigRational, clip: &[Option<BigRational>; 2]) -> Annulus {
    let cell = r / BigRational::from_integer(BigInt::from(4));
    let mut signs: Vec<Ordering> = Vec::new();
    let mut undecided = false;
    for i in 0..8i64 {
        for j in 0..8i64 {
            if (2..6).contains(&i) && (2..6).contains(&j) {
                continue;
            }
            let lo = |k: i64| -r + &cell * BigRational::from_integer(BigInt::from(k));
            let range = |k: i64, lim: &Option<BigRational>| {
                let (mut a, b) = (lo(k), lo(k + 1));
                if let Some(m) = lim {
                    if &b < m {
                        return None;
                    }
                    if &a < m {
                        a = m.clone();
                    }
                }
                Some(RationalInterval::new(a, b).unwrap())
            };
            let (Some(x), Some(y)) = (range(i, &clip[0]), range(j, &clip[1])) else {
                continue;
            };
            match tile_sign(s, &x, &y, 3) {
                Some(sg) => signs.push(sg),
                None => undecided = true,
            }
            for px in [x.lo(), x.hi()] {
                for py in [y.lo(), y.hi()] {
                    let val = s.eval_rational(&[px.clone(), py.clone()]);
                    signs.push(val.cmp(&BigRational::zero()));
                }
            }
        }
    }
    if signs.contains(&Ordering::Equal)
        || (signs.contains(&Ordering::Less) && signs.contains(&Ordering::Greater))
    {
        return Annulus::Witness;
    }
    if undecided {
        Annulus::Unknown
    } else {
        Annulus::Definite
    }
}

/// Sign of `s` over a tile, subdividing up to `depth` times.
fn tile_sign(s: &MultiPoly, x: &RationalInterval, y: &RationalInterval, depth: u32) -> Option<Ordering> {
    let e = s.eval_interval(&[x.clone(), y.clone()]);
    if e.is_positive() {
        return Some(Ordering::Greater);
    }
    if e.is_negative() {
        return Some(Ordering::Less);
    }
    if depth == 0 {
        return None;
    }
    let split = |iv: &RationalInterval| {
        let m = iv.mid();
        [
            RationalInterval::new(iv.lo().clone(), m.clone()).unwrap(),
            RationalInterval::new(m, iv.hi().clone()).unwrap(),
        ]
    };
    let mut sign = None;
    for xs in split(x) {
        for ys in split(y) {
            let sg = tile_sign(s, &xs, &ys, depth - 1)?;
            match sign {
                None => sign = Some(sg),
                Some(p) if p != sg => return None,
                _ => {}
            }
        }
    }
    sign
}

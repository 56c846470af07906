use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Monomial, MultiPoly, PolyError};
use crate::realroots::UniPoly;

/// Greatest common divisor, normalized to integer content one. `gcd(0, 0)`
/// is zero.
pub fn poly_gcd(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if f.ring().vars() != g.ring().vars() {
        return Err(PolyError::RingMismatch {
            left: f.ring().vars().join(","),
            right: g.ring().vars().join(","),
        });
    }
    Ok(gcd_rec(f, &g.with_ring(f.ring())))
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `var`.
pub fn content_in(f: &MultiPoly, var: usize) -> MultiPoly {
    let mut acc = MultiPoly::zero(f.ring());
    for c in f.coefficients_in(var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_rec(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

/// Product of the distinct irreducible factors of `f`, normalized to
/// integer content one.
pub fn squarefree_part(f: &MultiPoly) -> Result<MultiPoly, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if restricts_squarefree(f) {
        return Ok(f.normalize_integer());
    }
    Ok(sqf_rec(f).normalize_integer())
}

fn main_var(f: &MultiPoly, g: &MultiPoly) -> Option<usize> {
    (0..f.nvars()).rev().find(|&v| f.involves(v) || g.involves(v))
}

fn gcd_rec(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        return g.normalize_integer();
    }
    if g.is_zero() {
        return f.normalize_integer();
    }
    let v = match main_var(f, g) {
        Some(v) => v,
        None => return MultiPoly::one(f.ring()),
    };
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = gcd_rec(&cf, &cg);
    let mut a = f.exact_div(&cf).expect("content divides");
    let mut b = g.exact_div(&cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    while b.degree_in(v).unwrap_or(0) > 0 {
        let r = pseudo_rem(&a, &b, v);
        a = b;
        if r.is_zero() {
            b = MultiPoly::zero(f.ring());
            break;
        }
        let cr = content_in(&r, v);
        b = r.exact_div(&cr).expect("content divides");
    }
    let h = if b.is_zero() { a } else { MultiPoly::one(f.ring()) };
    (&c * &h).normalize_integer()
}

fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let db = b.degree_in(v).unwrap();
    let lb = b.coefficients_in(v).pop().unwrap();
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if r.is_zero() || dr < db {
            break;
        }
        let lr = r.coefficients_in(v).pop().unwrap();
        let shift = Monomial::one().with_exp(v, dr - db);
        let t = (&lr * b).mul_monomial(&shift, &BigRational::one());
        r = &(&lb * &r) - &t;
        if !r.is_zero() {
            let c = r.terms().iter().fold(BigInt::zero(), |g, (_, c)| {
                num_integer::Integer::gcd(&g, c.numer())
            });
            if c > BigInt::one() {
                r = r.scale(&BigRational::new(BigInt::one(), c));
            }
        }
    }
    r
}

fn sqf_rec(f: &MultiPoly) -> MultiPoly {
    let v = match main_var(f, f) {
        Some(v) => v,
        None => return MultiPoly::one(f.ring()),
    };
    let c = content_in(f, v);
    let pp = f.exact_div(&c).expect("content divides");
    let g = gcd_rec(&pp, &pp.partial_derivative(v));
    let part = pp.exact_div(&g).expect("gcd divides");
    &sqf_rec(&c) * &part
}

/// Restricts `f` to a few pseudo-random lines. A restriction that keeps the
/// total degree and is squarefree proves `f` squarefree, since a repeated
/// factor would restrict to a repeated factor of positive degree.
fn restricts_squarefree(f: &MultiPoly) -> bool {
    let d = match f.total_degree() {
        Some(d) if d > 0 => d as usize,
        _ => return true,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let n = f.nvars();
    for _ in 0..3 {
        let base: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
        let dir: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
        let u = restrict_to_line(f, &base, &dir);
        if u.degree() == Some(d) && u.is_squarefree() {
            return true;
        }
    }
    false
}

fn restrict_to_line(f: &MultiPoly, base: &[i64], dir: &[i64]) -> UniPoly {
    let lines: Vec<UniPoly> = base
        .iter()
        .zip(dir)
        .map(|(&a, &b)| UniPoly::from_ints(&[a, b]))
        .collect();
    let mut pw: Vec<Vec<UniPoly>> = vec![vec![UniPoly::from_ints(&[1])]; lines.len()];
    let mut acc = UniPoly::zero();
    for (m, c) in f.terms() {
        let mut t = UniPoly::constant(c.clone());
        for (k, line) in lines.iter().enumerate() {
            let e = m.exp(k) as usize;
            while pw[k].len() <= e {
                let next = pw[k].last().unwrap() * line;
                pw[k].push(next);
            }
            if e > 0 {
                t = &t * &pw[k][e];
            }
        }
        acc = &acc + &t;
    }
    acc
}

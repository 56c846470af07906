use num_traits::One;

use super::{RealRootsError, UniPoly};
use crate::exactnum::BigRational;
use crate::mpoly::MultiPoly;

/// The variable other than `var` that `f` and `g` involve, if any.
fn other_var(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<Option<usize>, RealRootsError> {
    let others: Vec<usize> = (0..f.nvars())
        .filter(|&v| v != var && (f.involves(v) || g.involves(v)))
        .collect();
    match others.len() {
        0 => Ok(None),
        1 => Ok(Some(others[0])),
        _ => Err(RealRootsError::NotBivariate),
    }
}

/// Coefficients of `f` in `var` as univariate polynomials in `w`.
fn coeff_polys(f: &MultiPoly, var: usize, w: Option<usize>) -> Vec<UniPoly> {
    f.coefficients_in(var)
        .iter()
        .map(|c| match w {
            Some(w) => c.to_unipoly(w).expect("bivariate input"),
            None => UniPoly::constant(c.coeff(&crate::mpoly::Monomial::one())),
        })
        .collect()
}

/// Resultant of `f` and `g` with respect to `var`, as a polynomial in the
/// remaining variable. Both inputs may involve at most one other variable.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<UniPoly, RealRootsError> {
    if f.is_zero() || g.is_zero() {
        return Err(RealRootsError::ZeroInput);
    }
    if f.ring().vars() != g.ring().vars() {
        return Err(crate::mpoly::PolyError::RingMismatch {
            left: f.ring().vars().join(","),
            right: g.ring().vars().join(","),
        }
        .into());
    }
    let w = other_var(f, g, var)?;
    Ok(sylvester_resultant(&coeff_polys(f, var, w), &coeff_polys(g, var, w)))
}

/// Resultant from ascending coefficient lists over `Q[t]`, by fraction-free
/// elimination on the Sylvester matrix.
pub fn sylvester_resultant(f: &[UniPoly], g: &[UniPoly]) -> UniPoly {
    let m = f.len() - 1;
    let n = g.len() - 1;
    if m == 0 {
        return pow(&f[0], n);
    }
    if n == 0 {
        return pow(&g[0], m);
    }
    let size = m + n;
    let mut a: Vec<Vec<UniPoly>> = vec![vec![UniPoly::zero(); size]; size];
    for r in 0..n {
        for (k, c) in f.iter().rev().enumerate() {
            a[r][r + k] = c.clone();
        }
    }
    for r in 0..m {
        for (k, c) in g.iter().rev().enumerate() {
            a[n + r][r + k] = c.clone();
        }
    }
    bareiss_det(a)
}

fn pow(p: &UniPoly, k: usize) -> UniPoly {
    let mut out = UniPoly::constant(BigRational::one());
    for _ in 0..k {
        out = &out * p;
    }
    out
}

/// Determinant of a square matrix over `Q[t]`.
pub fn bareiss_det(mut a: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = a.len();
    if n == 0 {
        return UniPoly::constant(BigRational::one());
    }
    let mut negate = false;
    let mut prev = UniPoly::constant(BigRational::one());
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = UniPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

use std::collections::HashMap;

use super::{HermitianPencil, PencilError};
use crate::exactnum::BigRational;
use crate::mpoly::{Monomial, MultiPoly, Ring};

/// Polynomial with Gaussian-rational coefficients as a real/imaginary pair.
#[derive(Clone)]
struct GPoly {
    re: MultiPoly,
    im: MultiPoly,
}

impl GPoly {
    fn mul(&self, o: &GPoly) -> GPoly {
        GPoly {
            re: &(&self.re * &o.re) - &(&self.im * &o.im),
            im: &(&self.re * &o.im) + &(&self.im * &o.re),
        }
    }

    fn add_signed(&self, o: &GPoly, negate: bool) -> GPoly {
        if negate {
            GPoly {
                re: &self.re - &o.re,
                im: &self.im - &o.im,
            }
        } else {
            GPoly {
                re: &self.re + &o.re,
                im: &self.im + &o.im,
            }
        }
    }
}

/// `det(x0*1 + x1*K + x2*L)` by cofactor expansion with memoized minors.
pub fn pencil_det(p: &HermitianPencil) -> Result<MultiPoly, PencilError> {
    let ring = Ring::projective("x");
    let n = p.n();
    if n == 0 {
        return Ok(MultiPoly::one(&ring));
    }
    let lin = |re: &BigRational, var: usize| {
        MultiPoly::from_terms(&ring, [(Monomial::var(var), re.clone())])
    };
    let mut m: Vec<GPoly> = Vec::with_capacity(n * n);
    for r in 0..n {
        for c in 0..n {
            let (k, l) = (p.k().entry(r, c), p.l().entry(r, c));
            let mut re = &lin(&k.re, 1) + &lin(&l.re, 2);
            if r == c {
                re = &re + &MultiPoly::var(&ring, 0);
            }
            let im = &lin(&k.im, 1) + &lin(&l.im, 2);
            m.push(GPoly { re, im });
        }
    }
    let mut memo: HashMap<u32, GPoly> = HashMap::new();
    let d = minor(&m, n, 0, (1u32 << n) - 1, &mut memo, &ring);
    if !d.im.is_zero() {
        return Err(PencilError::NonRealDeterminant);
    }
    Ok(d.re)
}

/// Determinant of rows `row..n` against the column set `cols`.
fn minor(
    m: &[GPoly],
    n: usize,
    row: usize,
    cols: u32,
    memo: &mut HashMap<u32, GPoly>,
    ring: &std::sync::Arc<Ring>,
) -> GPoly {
    if row == n {
        return GPoly {
            re: MultiPoly::one(ring),
            im: MultiPoly::zero(ring),
        };
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = GPoly {
        re: MultiPoly::zero(ring),
        im: MultiPoly::zero(ring),
    };
    let mut sign = false;
    for c in 0..n {
        if cols & (1 << c) == 0 {
            continue;
        }
        let e = &m[row * n + c];
        if !(e.re.is_zero() && e.im.is_zero()) {
            let sub = minor(m, n, row + 1, cols & !(1 << c), memo, ring);
            acc = acc.add_signed(&e.mul(&sub), sign);
        }
        sign = !sign;
    }
    memo.insert(cols, acc.clone());
    acc
}

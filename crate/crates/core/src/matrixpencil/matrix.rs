use num_complex::Complex64;
use num_traits::Zero;

use super::PencilError;
use crate::exactnum::{rat, BigRational, GaussianRational};

/// Square matrix with Gaussian-rational entries equal to their conjugate
/// transpose.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl HermitianMatrix {
    /// Row-major entries; checks the Hermitian property exactly.
    pub fn new(n: usize, entries: Vec<GaussianRational>) -> Result<Self, PencilError> {
        if entries.len() != n * n {
            return Err(PencilError::EntryCount {
                expected: n * n,
                found: entries.len(),
            });
        }
        for r in 0..n {
            for c in r..n {
                if entries[r * n + c] != entries[c * n + r].conj() {
                    return Err(PencilError::NotHermitian { row: r, col: c });
                }
            }
        }
        Ok(Self { n, entries })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            entries: vec![GaussianRational::zero(); n * n],
        }
    }

    /// Real symmetric matrix from integer rows, divided by `denom`.
    /// Panics if the rows are not symmetric.
    pub fn from_real_rows(rows: &[&[i64]], denom: i64) -> Self {
        let n = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n, "square matrix");
                r.iter().map(|&v| GaussianRational::from_real(rat(v, denom)))
            })
            .collect();
        Self::new(n, entries).expect("symmetric rows")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &GaussianRational {
        &self.entries[row * self.n + col]
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn trace(&self) -> BigRational {
        (0..self.n).fold(BigRational::zero(), |acc, i| acc + &self.entry(i, i).re)
    }

    pub fn shift_diagonal(&self, c: &BigRational) -> Self {
        let mut e = self.entries.clone();
        for i in 0..self.n {
            e[i * self.n + i].re += c;
        }
        Self {
            n: self.n,
            entries: e,
        }
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.entries
            .iter()
            .map(|g| {
                let (re, im) = g.to_f64();
                Complex64::new(re, im)
            })
            .collect()
    }

    /// `<η, M η>` (real for Hermitian M).
    pub fn quadratic_form(&self, eta: &[Complex64]) -> f64 {
        let m = self.to_complex();
        let n = self.n;
        let mut acc = Complex64::zero();
        for r in 0..n {
            let mut row = Complex64::zero();
            for c in 0..n {
                row += m[r * n + c] * eta[c];
            }
            acc += eta[r].conj() * row;
        }
        acc.re
    }

    /// True when the matrix commutes with `other` (exactly).
    pub fn commutes_with(&self, other: &Self) -> bool {
        let n = self.n;
        (0..n).all(|r| {
            (0..n).all(|c| {
                let mut a = GaussianRational::zero();
                let mut b = GaussianRational::zero();
                for k in 0..n {
                    a = &a + &(self.entry(r, k) * other.entry(k, c));
                    b = &b + &(other.entry(r, k) * self.entry(k, c));
                }
                a == b
            })
        })
    }
}

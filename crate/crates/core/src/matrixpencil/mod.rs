//! Hermitian matrix pencils `x0*1 + x1*K + x2*L`: exact determinant, and
//! floating support-function, numerical-range and spectrahedron queries.

mod det;
mod eigen;
mod io;
mod matrix;

use num_complex::Complex64;

pub use det::pencil_det;
pub use eigen::{eigen_hermitian, EigenConfig, EigenResult};
pub use io::{parse_pencil_toml, pencil_to_toml};
pub use matrix::HermitianMatrix;

use crate::exactnum::{rat, BigRational, GaussianRational};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PencilError {
    #[error("matrix is not Hermitian (entry {row},{col})")]
    NotHermitian { row: usize, col: usize },
    #[error("matrix sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("floating matrix is not Hermitian within tolerance (deviation {0:e})")]
    NotHermitianNumeric(f64),
    #[error("Jacobi iteration did not converge in {0} sweeps")]
    NoConvergence(usize),
    #[error("direction is zero")]
    ZeroDirection,
    #[error("origin is not an interior point of the numerical range (h = {0})")]
    OriginNotInterior(f64),
    #[error("determinant has a nonreal coefficient")]
    NonRealDeterminant,
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
}

/// Pair `(K, L)` of Hermitian matrices of equal size.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianPencil {
    k: HermitianMatrix,
    l: HermitianMatrix,
}

/// One boundary sample of the numerical range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySample {
    pub theta: f64,
    pub direction: [f64; 2],
    pub point: [f64; 2],
    pub h: f64,
}

impl HermitianPencil {
    pub fn new(k: HermitianMatrix, l: HermitianMatrix) -> Result<Self, PencilError> {
        if k.n() != l.n() {
            return Err(PencilError::SizeMismatch(k.n(), l.n()));
        }
        Ok(Self { k, l })
    }

    /// `K = (A + A*)/2`, `L = (A - A*)/(2i)` for a square complex matrix
    /// given row-major.
    pub fn from_complex(n: usize, a: &[GaussianRational]) -> Result<Self, PencilError> {
        if a.len() != n * n {
            return Err(PencilError::EntryCount {
                expected: n * n,
                found: a.len(),
            });
        }
        let half = rat(1, 2);
        let mut k = Vec::with_capacity(n * n);
        let mut l = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let x = &a[r * n + c];
                let y = a[c * n + r].conj();
                k.push((x + &y).scale(&half));
                // (x - y) / (2i) = -i (x - y) / 2
                let d = (x - &y).scale(&half);
                l.push(GaussianRational::new(d.im.clone(), -d.re));
            }
        }
        Self::new(HermitianMatrix::new(n, k)?, HermitianMatrix::new(n, l)?)
    }

    /// The 3x3 pencil whose numerical range is a rounded triangle with a
    /// three-cusped inner Kippenhahn branch.
    pub fn rounded_triangle() -> Self {
        let k = HermitianMatrix::from_real_rows(&[&[0, -1, 0], &[-1, 0, 1], &[0, 1, 0]], 1);
        let l = HermitianMatrix::from_real_rows(&[&[-1, -2, 4], &[-2, -1, -2], &[4, -2, -1]], 4);
        Self::new(k, l).expect("same size")
    }

    /// 2x2 pencil with determinant `x0^2 + x0*x2 - x1^2`, a parabola in the
    /// chart `x0 = 1`.
    pub fn parabola() -> Self {
        let k = HermitianMatrix::from_real_rows(&[&[0, 1], &[1, 0]], 1);
        let l = HermitianMatrix::from_real_rows(&[&[1, 0], &[0, 0]], 1);
        Self::new(k, l).expect("same size")
    }

    pub fn n(&self) -> usize {
        self.k.n()
    }

    pub fn k(&self) -> &HermitianMatrix {
        &self.k
    }

    pub fn l(&self) -> &HermitianMatrix {
        &self.l
    }

    /// `(tr K / n, tr L / n)`, always a point of the numerical range.
    pub fn centroid(&self) -> [BigRational; 2] {
        let n = BigRational::from_integer(self.n().into());
        [self.k.trace() / &n, self.l.trace() / &n]
    }

    /// The pencil translated so its numerical range has the centroid at the
    /// origin.
    pub fn centered(&self) -> Self {
        let [a, b] = self.centroid();
        Self {
            k: self.k.shift_diagonal(&-a),
            l: self.l.shift_diagonal(&-b),
        }
    }

    /// `c0*1 + c1*K + c2*L` as a floating matrix, row-major.
    pub fn combination_f64(&self, c: [f64; 3]) -> Vec<Complex64> {
        let n = self.n();
        let (k, l) = (self.k.to_complex(), self.l.to_complex());
        (0..n * n)
            .map(|i| {
                let id = if i / n == i % n { c[0] } else { 0.0 };
                Complex64::new(id, 0.0) + k[i] * c[1] + l[i] * c[2]
            })
            .collect()
    }

    fn lambda_min(&self, c: [f64; 3], cfg: &EigenConfig) -> Result<(f64, Vec<Complex64>), PencilError> {
        let m = self.combination_f64(c);
        let e = eigen_hermitian(&m, self.n(), cfg)?;
        Ok((e.eigenvalues[0], e.eigenvectors[0].clone()))
    }

    /// `(<η,Kη>, <η,Lη>)` for a unit vector η.
    pub fn numerical_value(&self, eta: &[Complex64]) -> [f64; 2] {
        [self.k.quadratic_form(eta), self.l.quadratic_form(eta)]
    }

    /// `h(x) = λ_min(x1*K + x2*L)`.
    pub fn support_function(&self, x: [f64; 2]) -> Result<f64, PencilError> {
        self.support_function_with(x, &EigenConfig::default())
    }

    pub fn support_function_with(&self, x: [f64; 2], cfg: &EigenConfig) -> Result<f64, PencilError> {
        if x == [0.0, 0.0] {
            return Err(PencilError::ZeroDirection);
        }
        Ok(self.lambda_min([0.0, x[0], x[1]], cfg)?.0)
    }

    /// `h(x)` together with a point of W on the supporting line.
    pub fn support_point(&self, x: [f64; 2], cfg: &EigenConfig) -> Result<(f64, [f64; 2]), PencilError> {
        if x == [0.0, 0.0] {
            return Err(PencilError::ZeroDirection);
        }
        let (h, eta) = self.lambda_min([0.0, x[0], x[1]], cfg)?;
        Ok((h, self.numerical_value(&eta)))
    }

    /// Supporting lines in `m` equally spaced directions.
    pub fn sample_numrange_boundary(&self, m: usize) -> Result<Vec<BoundarySample>, PencilError> {
        self.sample_numrange_boundary_with(m, &EigenConfig::default())
    }

    pub fn sample_numrange_boundary_with(
        &self,
        m: usize,
        cfg: &EigenConfig,
    ) -> Result<Vec<BoundarySample>, PencilError> {
        assert!(m >= 3, "at least three directions");
        (0..m)
            .map(|j| {
                let theta = std::f64::consts::TAU * j as f64 / m as f64;
                let x = [theta.cos(), theta.sin()];
                let (h, point) = self.support_point(x, cfg)?;
                Ok(BoundarySample {
                    theta,
                    direction: x,
                    point,
                    h,
                })
            })
            .collect()
    }

    /// `λ_min(1 + s1*K + s2*L)`.
    pub fn spectrahedron_lambda_min(&self, s: [f64; 2]) -> Result<f64, PencilError> {
        Ok(self.lambda_min([1.0, s[0], s[1]], &EigenConfig::default())?.0)
    }

    /// Membership in `S = {s : 1 + s1*K + s2*L ⪰ 0}` up to `tol`; `strict`
    /// asks for λ_min > tol.
    pub fn spectrahedron_contains(&self, s: [f64; 2], strict: bool, tol: f64) -> Result<bool, PencilError> {
        let lm = self.spectrahedron_lambda_min(s)?;
        Ok(if strict { lm > tol } else { lm >= -tol })
    }

    /// `-x / h(x)`, a boundary point of S when the origin is interior to W.
    pub fn dual_boundary_point(&self, x: [f64; 2]) -> Result<[f64; 2], PencilError> {
        let h = self.support_function(x)?;
        if h >= 0.0 {
            return Err(PencilError::OriginNotInterior(h));
        }
        Ok([-x[0] / h, -x[1] / h])
    }

    /// True when the sampled boundary of W lies on a line within `tol`
    /// (W is a segment or a point).
    pub fn is_degenerate(&self, m: usize, tol: f64) -> Result<bool, PencilError> {
        let pts: Vec<[f64; 2]> = self
            .sample_numrange_boundary(m)?
            .into_iter()
            .map(|s| s.point)
            .collect();
        Ok(collinear(&pts, tol))
    }
}

/// All points within `tol` of the line through the two farthest-apart ones.
pub fn collinear(pts: &[[f64; 2]], tol: f64) -> bool {
    let mut best = (0, 0, 0.0f64);
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let d = (pts[i][0] - pts[j][0]).hypot(pts[i][1] - pts[j][1]);
            if d > best.2 {
                best = (i, j, d);
            }
        }
    }
    let (a, b, len) = best;
    if len <= tol {
        return true;
    }
    let (p, q) = (pts[a], pts[b]);
    pts.iter().all(|r| {
        let cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
        (cross / len).abs() <= tol
    })
}

#[cfg(test)]
mod tests;

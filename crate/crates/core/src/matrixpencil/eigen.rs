use num_complex::Complex64;

use super::PencilError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenConfig {
    /// Convergence and Hermitian-check tolerance, relative to the norm.
    pub tol: f64,
    pub max_sweeps: usize,
}

impl Default for EigenConfig {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_sweeps: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// Orthonormal, matching `eigenvalues`.
    pub eigenvectors: Vec<Vec<Complex64>>,
    /// `max_k |M v_k - λ_k v_k|`.
    pub residual: f64,
}

/// Full eigendecomposition of a Hermitian matrix given row-major, via cyclic
/// Jacobi on the real symmetric embedding `[[Re M, -Im M], [Im M, Re M]]`.
/// Each eigenvalue of `M` appears twice there; the pairs are collapsed.
pub fn eigen_hermitian(m: &[Complex64], n: usize, cfg: &EigenConfig) -> Result<EigenResult, PencilError> {
    assert_eq!(m.len(), n * n, "row-major n x n input");
    let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    let dev = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .map(|(r, c)| (m[r * n + c] - m[c * n + r].conj()).norm())
        .fold(0.0, f64::max);
    if dev > cfg.tol * scale.max(1.0) {
        return Err(PencilError::NotHermitianNumeric(dev));
    }
    if n == 0 {
        return Ok(EigenResult {
            eigenvalues: Vec::new(),
            eigenvectors: Vec::new(),
            residual: 0.0,
        });
    }
    let size = 2 * n;
    let mut a = vec![0.0; size * size];
    for r in 0..n {
        for c in 0..n {
            let z = m[r * n + c];
            // symmetrize against tiny input asymmetry
            let w = (z + m[c * n + r].conj()) * 0.5;
            a[r * size + c] = w.re;
            a[(r + n) * size + c + n] = w.re;
            a[(r + n) * size + c] = w.im;
            a[r * size + c + n] = -w.im;
        }
    }
    let (vals, vecs) = jacobi(a, size, cfg)?;

    let mut order: Vec<usize> = (0..size).collect();
    order.sort_by(|&i, &j| vals[i].total_cmp(&vals[j]));
    let spread = vals.iter().map(|v| v.abs()).fold(0.0, f64::max).max(1.0);
    let gap = 1e-9 * spread;

    let mut accepted: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    let mut k = 0;
    while k < size {
        let mut end = k + 1;
        while end < size && vals[order[end]] - vals[order[end - 1]] <= gap {
            end += 1;
        }
        let want = ((end - k) / 2).max(1).min(n - accepted.len());
        let mut cands: Vec<Vec<Complex64>> = order[k..end]
            .iter()
            .map(|&j| (0..n).map(|i| Complex64::new(vecs[i * size + j], vecs[(i + n) * size + j])).collect())
            .collect();
        for _ in 0..want {
            for c in cands.iter_mut() {
                for u in &accepted {
                    project_out(c, u);
                }
            }
            let (best, norm) = cands
                .iter()
                .enumerate()
                .map(|(i, c)| (i, norm(c)))
                .max_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if norm < 1e-6 {
                break;
            }
            let mut v = cands.swap_remove(best);
            v.iter_mut().for_each(|z| *z /= norm);
            accepted.push(v);
        }
        k = end;
    }
    if accepted.len() != n {
        return Err(PencilError::NoConvergence(cfg.max_sweeps));
    }
    let mut pairs: Vec<(f64, Vec<Complex64>)> = accepted
        .into_iter()
        .map(|v| (rayleigh(m, n, &v), v))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
    let residual = pairs
        .iter()
        .map(|(l, v)| {
            let mv = matvec(m, n, v);
            norm(&mv.iter().zip(v).map(|(a, b)| a - b * l).collect::<Vec<_>>())
        })
        .fold(0.0, f64::max);
    let (eigenvalues, eigenvectors) = pairs.into_iter().unzip();
    Ok(EigenResult {
        eigenvalues,
        eigenvectors,
        residual,
    })
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn project_out(v: &mut [Complex64], u: &[Complex64]) {
    let dot: Complex64 = u.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
    for (x, y) in v.iter_mut().zip(u) {
        *x -= dot * y;
    }
}

fn matvec(m: &[Complex64], n: usize, v: &[Complex64]) -> Vec<Complex64> {
    (0..n)
        .map(|r| (0..n).map(|c| m[r * n + c] * v[c]).sum())
        .collect()
}

fn rayleigh(m: &[Complex64], n: usize, v: &[Complex64]) -> f64 {
    let mv = matvec(m, n, v);
    v.iter().zip(&mv).map(|(a, b)| a.conj() * b).sum::<Complex64>().re
}

/// Cyclic Jacobi for a real symmetric matrix. Returns eigenvalues and the
/// column-eigenvector matrix.
fn jacobi(mut a: Vec<f64>, n: usize, cfg: &EigenConfig) -> Result<(Vec<f64>, Vec<f64>), PencilError> {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let fro = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let target = cfg.tol * 1e-3 * fro.max(f64::MIN_POSITIVE);
    for _ in 0..cfg.max_sweeps {
        let off = (0..n)
            .flat_map(|p| (0..n).filter(move |&q| q != p).map(move |q| (p, q)))
            .map(|(p, q)| a[p * n + q] * a[p * n + q])
            .sum::<f64>()
            .sqrt();
        if off <= target {
            return Ok(((0..n).map(|i| a[i * n + i]).collect(), v));
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq.abs() <= f64::MIN_POSITIVE {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    Err(PencilError::NoConvergence(cfg.max_sweeps))
}

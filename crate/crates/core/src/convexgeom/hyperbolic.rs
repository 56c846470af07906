use num_traits::{ToPrimitive, Zero};

use crate::exactnum::{AlgebraicReal, BigRational};
use crate::matrixpencil::{pencil_det, HermitianPencil};
use crate::mpoly::MultiPoly;
use crate::realroots::{sturm_isolate, IsolatedRoot, SturmChain, UniPoly};

use super::projective::ProjPoint;
use super::GeomError;

/// Intersection of a curve with the affine line `e + λ·dir` of the chart
/// `x0 = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct LineIntersection {
    /// `p(1, e + λ·dir)`.
    pub restriction: UniPoly,
    pub real_roots: Vec<IsolatedRoot>,
    /// Degree of the squarefree part of the restriction.
    pub squarefree_degree: usize,
    /// `(0 : d1 : d2)` with its intersection multiplicity, when the
    /// restriction drops degree.
    pub at_infinity: Option<(ProjPoint<BigRational>, usize)>,
}

impl LineIntersection {
    /// Every intersection is real, certified by the Sturm count of distinct
    /// real roots matching the squarefree degree.
    pub fn all_real(&self) -> bool {
        self.real_roots.len() == self.squarefree_degree
    }

    /// Finite intersection points `(1 : e + λ·dir)` as floats.
    pub fn finite_points_f64(&self, e: &[BigRational; 2], dir: &[BigRational; 2]) -> Vec<[f64; 2]> {
        let f = |r: &BigRational| r.to_f64().unwrap_or(f64::NAN);
        self.real_roots
            .iter()
            .map(|r| {
                let l = AlgebraicReal::new(&self.restriction.squarefree_part(), r.interval.clone())
                    .map(|a| a.to_f64())
                    .unwrap_or_else(|_| r.interval.mid_f64());
                [f(&e[0]) + l * f(&dir[0]), f(&e[1]) + l * f(&dir[1])]
            })
            .collect()
    }
}

/// Restricts the homogeneous curve `p` to a line and certifies which of its
/// intersections with the line are real.
pub fn line_poly_real_check(
    p: &MultiPoly,
    e: &[BigRational; 2],
    dir: &[BigRational; 2],
) -> Result<LineIntersection, GeomError> {
    let restriction = p.univariate_restrict(e, dir)?;
    if restriction.is_zero() {
        return Err(GeomError::Degenerate("line is a component of the curve".into()));
    }
    let total = p.total_degree().unwrap_or(0) as usize;
    let deg = restriction.degree().unwrap_or(0);
    let chain = SturmChain::new(&restriction);
    let squarefree_degree = chain.head().degree().unwrap_or(0);
    let at_infinity = if deg < total {
        let pt = ProjPoint::new([BigRational::zero(), dir[0].clone(), dir[1].clone()])?;
        Some((pt, total - deg))
    } else {
        None
    };
    Ok(LineIntersection {
        real_roots: sturm_isolate(&restriction),
        restriction,
        squarefree_degree,
        at_infinity,
    })
}

/// Line test for a pencil: `det(A + λB)` with `A = 1 + e1*K + e2*L` and
/// `B = d1*K + d2*L`, for `e` strictly inside the spectrahedron.
pub fn line_curve_real_check(
    pencil: &HermitianPencil,
    e: &[BigRational; 2],
    dir: &[BigRational; 2],
) -> Result<LineIntersection, GeomError> {
    let ef = [e[0].to_f64().unwrap_or(f64::NAN), e[1].to_f64().unwrap_or(f64::NAN)];
    let lm = pencil.spectrahedron_lambda_min(ef)?;
    if !(lm > 1e-12) {
        return Err(GeomError::NotInterior(lm));
    }
    if dir[0].is_zero() && dir[1].is_zero() {
        return Err(GeomError::ZeroDirection);
    }
    line_poly_real_check(&pencil_det(pencil)?, e, dir)
}

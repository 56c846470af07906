use crate::matrixpencil::{pencil_det, EigenConfig, HermitianPencil};
use crate::mpoly::{parse_poly, MultiPoly, Ring};

use super::GeomError;

/// A compact convex set W in the plane, known through its support function
/// `h(x) = min over y in W of <x, y>`.
///
/// The dual set is `S = {s : 1 + h(s) >= 0}`; for a pencil this is the
/// spectrahedron `1 + s1*K + s2*L ⪰ 0`.
pub trait ConvexOracle {
    /// Short human-readable name.
    fn label(&self) -> String;

    fn support(&self, x: [f64; 2]) -> Result<f64, GeomError>;

    /// A point of W on the supporting line with inner normal `x`.
    fn support_point(&self, x: [f64; 2]) -> Result<[f64; 2], GeomError>;

    /// `1 + h(s)`, positive exactly on the interior of S.
    fn dual_margin(&self, s: [f64; 2]) -> Result<f64, GeomError> {
        if s == [0.0, 0.0] {
            return Ok(1.0);
        }
        Ok(1.0 + self.support(s)?)
    }

    /// The boundary curve polynomial `p`, homogeneous in `x0, x1, x2`, when
    /// one is known.
    fn curve(&self) -> Result<Option<MultiPoly>, GeomError> {
        Ok(None)
    }

    /// True when W has empty interior.
    fn is_degenerate(&self) -> Result<bool, GeomError> {
        Ok(false)
    }
}

/// Numerical range of a pencil, with the eigen settings used for every
/// support query.
#[derive(Debug, Clone)]
pub struct PencilOracle {
    pub pencil: HermitianPencil,
    pub eigen: EigenConfig,
}

impl PencilOracle {
    pub fn new(pencil: HermitianPencil) -> Self {
        Self {
            pencil,
            eigen: EigenConfig::default(),
        }
    }
}

impl ConvexOracle for PencilOracle {
    fn label(&self) -> String {
        format!("numerical range of a {0}x{0} pencil", self.pencil.n())
    }

    fn support(&self, x: [f64; 2]) -> Result<f64, GeomError> {
        Ok(self.pencil.support_function_with(x, &self.eigen)?)
    }

    fn support_point(&self, x: [f64; 2]) -> Result<[f64; 2], GeomError> {
        Ok(self.pencil.support_point(x, &self.eigen)?.1)
    }

    fn dual_margin(&self, s: [f64; 2]) -> Result<f64, GeomError> {
        Ok(self.pencil.spectrahedron_lambda_min(s)?)
    }

    fn curve(&self) -> Result<Option<MultiPoly>, GeomError> {
        Ok(Some(pencil_det(&self.pencil)?))
    }

    fn is_degenerate(&self) -> Result<bool, GeomError> {
        Ok(self.pencil.n() < 2 || self.pencil.is_degenerate(72, 1e-9)?)
    }
}

/// Unit ball of the `d/(d-1)` norm, dual to `S = {s : |s1|^d + |s2|^d <= 1}`.
/// Its boundary curve is the Fermat curve `x0^d - x1^d - x2^d`, and for
/// `d >= 4` it is not the numerical range of any matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FermatOracle {
    degree: u32,
}

impl FermatOracle {
    /// `d` must be even and at least 2.
    pub fn new(degree: u32) -> Result<Self, GeomError> {
        if degree < 2 || degree % 2 == 1 {
            return Err(GeomError::Unsupported(format!("Fermat degree {degree} must be even and >= 2")));
        }
        Ok(Self { degree })
    }

    pub fn sextic() -> Self {
        Self { degree: 6 }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn norm(&self, x: [f64; 2]) -> f64 {
        let d = self.degree as f64;
        // scale first so large or tiny directions do not overflow
        let m = x[0].abs().max(x[1].abs());
        m * ((x[0] / m).abs().powf(d) + (x[1] / m).abs().powf(d)).powf(1.0 / d)
    }
}

impl ConvexOracle for FermatOracle {
    fn label(&self) -> String {
        format!("Fermat oracle of degree {}", self.degree)
    }

    fn support(&self, x: [f64; 2]) -> Result<f64, GeomError> {
        if x == [0.0, 0.0] {
            return Err(GeomError::ZeroDirection);
        }
        Ok(-self.norm(x))
    }

    fn support_point(&self, x: [f64; 2]) -> Result<[f64; 2], GeomError> {
        if x == [0.0, 0.0] {
            return Err(GeomError::ZeroDirection);
        }
        let n = self.norm(x);
        let e = self.degree as i32 - 1;
        let f = |t: f64| -(t / n).abs().powi(e) * t.signum();
        Ok([f(x[0]), f(x[1])])
    }

    fn curve(&self) -> Result<Option<MultiPoly>, GeomError> {
        let d = self.degree;
        let text = format!("x0^{d} - x1^{d} - x2^{d}");
        Ok(Some(parse_poly(&text, &Ring::projective("x")).expect("well-formed Fermat polynomial")))
    }
}

use std::fmt;
use std::ops::{Add, Div, Mul};

use num_traits::{One, Zero};

use super::GeomError;

/// Point of the projective plane, stored normalized so that the first
/// nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjPoint<T> {
    coords: [T; 3],
}

/// Line of the projective plane, identified with its pole under the
/// polarity of `x0^2 + x1^2 + x2^2`: it holds the points `y` with `x·y = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjLine<T> {
    pole: ProjPoint<T>,
}

impl<T> ProjPoint<T>
where
    T: Clone + Zero + One + PartialEq,
    for<'a> &'a T: Div<&'a T, Output = T>,
{
    pub fn new(coords: [T; 3]) -> Result<Self, GeomError> {
        let lead = coords.iter().find(|c| !c.is_zero()).cloned().ok_or(GeomError::ZeroTriple)?;
        let coords = coords.map(|c| &c / &lead);
        Ok(Self { coords })
    }

    /// Affine point `(1 : a : b)`.
    pub fn affine(a: T, b: T) -> Self {
        Self {
            coords: [T::one(), a, b],
        }
    }

    pub fn coords(&self) -> &[T; 3] {
        &self.coords
    }

    pub fn is_at_infinity(&self) -> bool {
        self.coords[0].is_zero()
    }

    /// `(a, b)` with the point equal to `(1 : a : b)`, if finite.
    pub fn affine_coords(&self) -> Option<[T; 2]> {
        if self.is_at_infinity() {
            None
        } else {
            Some([self.coords[1].clone(), self.coords[2].clone()])
        }
    }

    pub fn polar(&self) -> ProjLine<T> {
        ProjLine { pole: self.clone() }
    }
}

impl<T> ProjLine<T>
where
    T: Clone + Zero + One + PartialEq,
    for<'a> &'a T: Div<&'a T, Output = T> + Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    pub fn from_pole(pole: ProjPoint<T>) -> Self {
        Self { pole }
    }

    pub fn pole(&self) -> &ProjPoint<T> {
        &self.pole
    }

    /// `pole·y`; zero exactly when `y` lies on the line.
    pub fn incidence(&self, y: &ProjPoint<T>) -> T {
        let [a, b, c] = &self.pole.coords;
        let [u, v, w] = &y.coords;
        &(&(a * u) + &(b * v)) + &(c * w)
    }

    /// True for the line `y0 = 0`.
    pub fn is_line_at_infinity(&self) -> bool {
        let c = &self.pole.coords;
        c[1].is_zero() && c[2].is_zero()
    }
}

impl ProjPoint<f64> {
    /// Pole of the supporting line `{y : <x, y> = h}` of a convex set,
    /// `(-h : x1 : x2)`.
    pub fn supporting_line_pole(h: f64, x: [f64; 2]) -> Result<Self, GeomError> {
        Self::new([-h, x[0], x[1]])
    }
}

impl<T: fmt::Display> fmt::Display for ProjPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {} : {})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl<T: fmt::Display> fmt::Display for ProjLine<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polar{}", self.pole)
    }
}

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::exactnum::{BigRational, RationalInterval};

/// Rectangular complex interval `re + i*im`.
#[derive(Debug, Clone, PartialEq)]
pub struct CBox {
    pub re: RationalInterval,
    pub im: RationalInterval,
}

pub(crate) fn f64_rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

impl CBox {
    pub fn new(re: RationalInterval, im: RationalInterval) -> Self {
        Self { re, im }
    }

    pub fn real(re: RationalInterval) -> Self {
        Self {
            re,
            im: RationalInterval::point(BigRational::zero()),
        }
    }

    pub fn point(re: BigRational, im: BigRational) -> Self {
        Self {
            re: RationalInterval::point(re),
            im: RationalInterval::point(im),
        }
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::point(f64_rat(z.re), f64_rat(z.im))
    }

    pub fn zero() -> Self {
        Self::point(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Self::point(BigRational::one(), BigRational::zero())
    }

    /// Square of side `2r` centered at `z`.
    pub fn around(z: Complex64, r: f64) -> Self {
        let r = f64_rat(r);
        Self::new(
            RationalInterval::around(&f64_rat(z.re), &r),
            RationalInterval::around(&f64_rat(z.im), &r),
        )
    }

    pub fn mid(&self) -> Complex64 {
        Complex64::new(self.re.mid_f64(), self.im.mid_f64())
    }

    pub fn mid_exact(&self) -> (BigRational, BigRational) {
        (self.re.mid(), self.im.mid())
    }

    /// Larger of the two side lengths, as a float.
    pub fn width(&self) -> f64 {
        use num_traits::ToPrimitive;
        let w = self.re.width().max(self.im.width());
        w.to_f64().unwrap_or(f64::INFINITY)
    }

    pub fn contains_zero(&self) -> bool {
        self.re.contains_zero() && self.im.contains_zero()
    }

    pub fn contains(&self, re: &BigRational, im: &BigRational) -> bool {
        self.re.contains(re) && self.im.contains(im)
    }

    pub fn encloses(&self, other: &Self) -> bool {
        self.re.encloses(&other.re) && self.im.encloses(&other.im)
    }

    pub fn encloses_strictly(&self, other: &Self) -> bool {
        self.re.encloses_strictly(&other.re) && self.im.encloses_strictly(&other.im)
    }

    pub fn intersect(&self, other: &Self) -> Option<Self> {
        Some(Self::new(self.re.intersect(&other.re)?, self.im.intersect(&other.im)?))
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, c: &RationalInterval) -> Self {
        Self::new(c * &self.re, c * &self.im)
    }

    /// Enclosure of `1/z` over the box; `None` when the box meets zero.
    pub fn recip(&self) -> Option<Self> {
        let n = &self.re.square() + &self.im.square();
        let inv = n.recip()?;
        Some(self.conj().scale(&inv))
    }

    pub fn round_outward(&self, bits: u32) -> Self {
        Self::new(self.re.round_outward(bits), self.im.round_outward(bits))
    }

    pub fn powi(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &CBox {
    type Output = CBox;
    fn add(self, o: &CBox) -> CBox {
        CBox::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &CBox {
    type Output = CBox;
    fn sub(self, o: &CBox) -> CBox {
        CBox::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &CBox {
    type Output = CBox;
    fn mul(self, o: &CBox) -> CBox {
        CBox::new(
            &(&self.re * &o.re) - &(&self.im * &o.im),
            &(&self.re * &o.im) + &(&self.im * &o.re),
        )
    }
}

impl fmt::Display for CBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = self.mid();
        write!(f, "{:.15} {:+.15}i (±{:.1e})", z.re, z.im, self.width() / 2.0)
    }
}

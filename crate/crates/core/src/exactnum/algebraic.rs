use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::{format_rational, simplest_between, BigRational, ExactError, RationalInterval};
use crate::realroots::{SturmChain, UniPoly};

/// A real algebraic number: a squarefree integer polynomial together with a
/// closed rational interval holding exactly one of its roots.
#[derive(Clone, Debug)]
pub struct AlgebraicReal {
    poly: UniPoly,
    interval: RationalInterval,
    chain: SturmChain,
}

impl AlgebraicReal {
    /// Checks squarefreeness and that the Sturm count over `interval` is one.
    pub fn new(poly: &UniPoly, interval: RationalInterval) -> Result<Self, ExactError> {
        if poly.degree().unwrap_or(0) == 0 {
            return Err(ExactError::RootCount(0));
        }
        if !poly.is_squarefree() {
            return Err(ExactError::NotSquarefree);
        }
        let poly = poly.primitive();
        let chain = SturmChain::new(&poly);
        let n = chain.count_closed(interval.lo(), interval.hi());
        if n != 1 {
            return Err(ExactError::RootCount(n));
        }
        Ok(Self {
            poly,
            interval,
            chain,
        })
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let poly = UniPoly::linear_root(r).primitive();
        let chain = SturmChain::new(&poly);
        Self {
            poly,
            interval: RationalInterval::point(r.clone()),
            chain,
        }
    }

    pub fn poly(&self) -> &UniPoly {
        &self.poly
    }

    pub fn interval(&self) -> &RationalInterval {
        &self.interval
    }

    /// Number of roots of the defining polynomial in the current interval;
    /// always one.
    pub fn sturm_count(&self) -> usize {
        self.chain.count_closed(self.interval.lo(), self.interval.hi())
    }

    /// Shrinks the interval by bisection until its width is at most `eps`.
    /// Each new interval is nested in the previous one.
    pub fn refine(&mut self, eps: &BigRational) {
        assert!(eps.is_positive(), "refinement tolerance must be positive");
        let (mut a, mut b) = (self.interval.lo().clone(), self.interval.hi().clone());
        while &b - &a > *eps {
            (a, b) = self.chain.bisect_once(&a, &b);
        }
        self.interval = RationalInterval::new(a, b).expect("bisection keeps order");
    }

    pub fn refined(mut self, eps: &BigRational) -> Self {
        self.refine(eps);
        self
    }

    /// The exact value when the number is rational and the interval pins
    /// down a small-denominator candidate.
    pub fn rational_value(&self) -> Option<BigRational> {
        if self.interval.is_point() {
            return Some(self.interval.lo().clone());
        }
        if self.poly.degree() == Some(1) {
            let c = self.poly.coeffs();
            return Some(-&c[0] / &c[1]);
        }
        let cand = simplest_between(self.interval.lo(), self.interval.hi());
        (self.poly.sign_at(&cand) == Ordering::Equal).then_some(cand)
    }

    pub fn sign(&self) -> Ordering {
        if let Some(r) = self.rational_value() {
            return r.cmp(&BigRational::from_integer(BigInt::from(0)));
        }
        let mut a = self.clone();
        loop {
            if a.interval.is_positive() {
                return Ordering::Greater;
            }
            if a.interval.is_negative() {
                return Ordering::Less;
            }
            let w = a.interval.width() / BigRational::from_integer(BigInt::from(2));
            a.refine(&w);
        }
    }

    pub fn to_f64(&self) -> f64 {
        let mut a = self.clone();
        let scale = a.interval.magnitude() + BigRational::one();
        let eps = scale / BigRational::from_integer(BigInt::one() << 60);
        a.refine(&eps);
        a.interval.mid().to_f64().unwrap_or(f64::NAN)
    }

    /// Interval enclosure of width at most `eps`.
    pub fn enclosure(&self, eps: &BigRational) -> RationalInterval {
        self.clone().refined(eps).interval
    }
}

impl fmt::Display for AlgebraicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rational_value() {
            Some(r) => f.write_str(&format_rational(&r)),
            None => write!(f, "root of {} in {}", self.poly, self.interval),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{algebraic_refine, rat};
    use proptest::prelude::*;

    fn iv(a: BigRational, b: BigRational) -> RationalInterval {
        RationalInterval::new(a, b).unwrap()
    }

    /// Plain bisection on f64 values, independent of the Sturm machinery.
    fn bisect_f64(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
        for _ in 0..200 {
            let m = 0.5 * (lo + hi);
            if f(lo).signum() == f(m).signum() {
                lo = m;
            } else {
                hi = m;
            }
        }
        0.5 * (lo + hi)
    }

    #[test]
    fn refine_sqrt_two() {
        let a = AlgebraicReal::new(&UniPoly::from_ints(&[-2, 0, 1]), iv(rat(1, 1), rat(2, 1))).unwrap();
        let r = algebraic_refine(&a, &rat(1, 100));
        assert!(r.width() <= rat(1, 100));
        assert!(a.interval().encloses(&r));
        let oracle = bisect_f64(|t| t * t - 2.0, 1.0, 2.0);
        let (lo, hi) = r.to_f64_bounds();
        assert!(lo <= oracle && oracle <= hi);
        assert!((oracle - 1.41421).abs() < 1e-5);
    }

    #[test]
    fn refine_linear() {
        let a = AlgebraicReal::new(&UniPoly::from_ints(&[-3, 1]), iv(rat(0, 1), rat(5, 1))).unwrap();
        let r = algebraic_refine(&a, &rat(1, 10));
        assert!(r.contains(&rat(3, 1)));
        assert!(r.width() <= rat(1, 10));
        assert_eq!(a.rational_value(), Some(rat(3, 1)));
    }

    #[test]
    fn refine_omega() {
        // t^12 - 11 t^6 - 1
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[6] = -11;
        c[12] = 1;
        let p = UniPoly::from_ints(&c);
        let a = AlgebraicReal::new(&p, iv(rat(1, 1), rat(2, 1))).unwrap();
        let r = algebraic_refine(&a, &rat(1, 1000));
        let oracle = bisect_f64(|t| t.powi(12) - 11.0 * t.powi(6) - 1.0, 1.0, 2.0);
        let (lo, hi) = r.to_f64_bounds();
        assert!(lo <= oracle && oracle <= hi);
        let closed_form = ((11.0 + 5.0 * 5f64.sqrt()) / 2.0).powf(1.0 / 6.0);
        assert!((oracle - closed_form).abs() < 1e-12, "{oracle}");
        assert!((oracle - 1.49).abs() < 5e-3);
        assert!(a.rational_value().is_none());
    }

    #[test]
    fn rejects_bad_intervals() {
        let p = UniPoly::from_ints(&[-2, 0, 1]);
        assert!(matches!(
            AlgebraicReal::new(&p, iv(rat(-2, 1), rat(2, 1))),
            Err(ExactError::RootCount(2))
        ));
        let sq = UniPoly::from_ints(&[1, -2, 1]);
        assert!(matches!(
            AlgebraicReal::new(&sq, iv(rat(0, 1), rat(2, 1))),
            Err(ExactError::NotSquarefree)
        ));
    }

    proptest! {
        #[test]
        fn nested_chain_under_halving(k in 2i64..50) {
            let p = UniPoly::from_ints(&[-k, 0, 1]);
            let mut a = AlgebraicReal::new(&p, iv(rat(0, 1), rat(k, 1))).unwrap();
            let mut eps = rat(1, 2);
            let mut prev = a.interval().clone();
            for _ in 0..12 {
                a.refine(&eps);
                prop_assert!(prev.encloses(a.interval()));
                prop_assert!(a.interval().width() <= eps);
                prop_assert_eq!(a.sturm_count(), 1);
                prev = a.interval().clone();
                eps = eps / BigRational::from_integer(BigInt::from(2));
            }
        }
    }
}

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Monomial, MonomialOrder, PolyError, MAX_VARS};
use crate::exactnum::{BigRational, GaussianRational, RationalInterval};
use crate::realroots::UniPoly;

/// Variable names plus the active monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(vars: Vec<String>, order: MonomialOrder) -> Result<Arc<Ring>, PolyError> {
        if vars.is_empty() || vars.len() > MAX_VARS {
            return Err(PolyError::VariableCount(vars.len()));
        }
        if let MonomialOrder::BlockElimination { split } = order {
            if split > vars.len() {
                return Err(PolyError::VariableCount(split));
            }
        }
        Ok(Arc::new(Ring { vars, order }))
    }

    /// `prefix0, ..., prefix{n-1}` under graded reverse lex.
    pub fn indexed(prefix: &str, n: usize) -> Arc<Ring> {
        Ring::new(
            (0..n).map(|i| format!("{prefix}{i}")).collect(),
            MonomialOrder::GradedRevLex,
        )
        .expect("valid variable count")
    }

    /// The homogeneous coordinate ring `x0, x1, x2` (or another prefix).
    pub fn projective(prefix: &str) -> Arc<Ring> {
        Ring::indexed(prefix, 3)
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Arc<Ring> {
        Arc::new(Ring {
            vars: self.vars.clone(),
            order,
        })
    }
}

/// Sparse polynomial with rational coefficients. Terms are kept sorted
/// descending in the ring's monomial order, with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, BigRational)>,
}

impl MultiPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Self {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<Ring>, c: BigRational) -> Self {
        Self::from_terms(ring, [(Monomial::one(), c)])
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, BigRational::one())
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Self::from_terms(ring, [(Monomial::var(i), BigRational::one())])
    }

    /// Collects terms, combining equal monomials and dropping zeros.
    pub fn from_terms(
        ring: &Arc<Ring>,
        terms: impl IntoIterator<Item = (Monomial, BigRational)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        let mut v: Vec<(Monomial, BigRational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let n = ring.nvars();
        let ord = ring.order();
        v.sort_by_cached_key(|(m, _)| std::cmp::Reverse(ord.key(m, n)));
        Self {
            ring: ring.clone(),
            terms: v,
        }
    }

    /// Integer coefficients given as `(coefficient, exponents)` pairs.
    pub fn from_int_terms(ring: &Arc<Ring>, terms: &[(i64, &[u32])]) -> Self {
        Self::from_terms(
            ring,
            terms
                .iter()
                .map(|(c, e)| (Monomial::new(e), BigRational::from_integer(BigInt::from(*c)))),
        )
    }

    /// Terms sorted descending in the ring order.
    pub(crate) fn from_sorted_terms(ring: &Arc<Ring>, terms: Vec<(Monomial, BigRational)>) -> Self {
        Self {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exp(var)).max()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(var) > 0)
    }

    /// Same coefficients in a ring with the same variable count; terms are
    /// re-sorted for the new order.
    pub fn with_ring(&self, ring: &Arc<Ring>) -> Self {
        assert_eq!(ring.nvars(), self.nvars(), "ring size mismatch");
        Self::from_terms(ring, self.terms.iter().cloned())
    }

    /// Moves variable `i` to index `map[i]` of `ring`.
    pub fn remap(&self, ring: &Arc<Ring>, map: &[usize]) -> Self {
        assert_eq!(map.len(), self.nvars());
        assert!(map.iter().all(|&j| j < ring.nvars()));
        Self::from_terms(ring, self.terms.iter().map(|(m, c)| (m.remap(map), c.clone())))
    }

    fn check_ring(&self, other: &Self) -> Result<(), PolyError> {
        if self.ring.vars() != other.ring.vars() {
            return Err(PolyError::RingMismatch {
                left: self.ring.vars().join(","),
                right: other.ring.vars().join(","),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        Ok(Self::from_terms(&self.ring, acc))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let n = self.nvars();
        let ord = self.ring.order();
        let other_sorted;
        let other_terms = if other.ring.order() == ord {
            &other.terms
        } else {
            other_sorted = other.with_ring(&self.ring);
            &other_sorted.terms
        };
        let mut out = Vec::with_capacity(self.len() + other_terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other_terms.len() {
            let pick = if i == self.terms.len() {
                std::cmp::Ordering::Less
            } else if j == other_terms.len() {
                std::cmp::Ordering::Greater
            } else {
                ord.cmp(&self.terms[i].0, &other_terms[j].0, n)
            };
            match pick {
                std::cmp::Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let (m, c) = &other_terms[j];
                    out.push((*m, if negate { -c } else { c.clone() }));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other_terms[j].1
                    } else {
                        &self.terms[i].1 + &other_terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self::from_sorted_terms(&self.ring, out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self::from_sorted_terms(
            &self.ring,
            self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        )
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Self::from_sorted_terms(
            &self.ring,
            self.terms.iter().map(|(m, x)| (m.mul(mono), x * c)).collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.ring);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars(), "variable index out of range");
        Self::from_terms(
            &self.ring,
            self.terms.iter().filter(|(m, _)| m.exp(var) > 0).map(|(m, c)| {
                let e = m.exp(var);
                (m.with_exp(var, e - 1), c * BigRational::from_integer(BigInt::from(e)))
            }),
        )
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.nvars()).map(|i| self.partial_derivative(i)).collect()
    }

    /// `Some(d)` when every term has total degree `d`.
    pub fn is_homogeneous(&self) -> Result<Option<u32>, PolyError> {
        let d = self.total_degree().ok_or(PolyError::ZeroPolynomial)?;
        Ok(self.terms.iter().all(|(m, _)| m.degree() == d).then_some(d))
    }

    pub fn evaluate(&self, point: &[GaussianRational]) -> GaussianRational {
        assert_eq!(point.len(), self.nvars(), "point dimension mismatch");
        let mut powers = PowerCache::new(point.to_vec(), GaussianRational::one(), |a, b| a * b);
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut t = GaussianRational::from_real(c.clone());
            for i in 0..self.nvars() {
                if m.exp(i) > 0 {
                    t = &t * &powers.get(i, m.exp(i));
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars(), "point dimension mismatch");
        let mut powers = PowerCache::new(point.to_vec(), BigRational::one(), |a, b| a * b);
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.nvars() {
                if m.exp(i) > 0 {
                    t *= powers.get(i, m.exp(i));
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        assert_eq!(point.len(), self.nvars(), "point dimension mismatch");
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = c.to_f64().unwrap_or(f64::NAN);
                for (i, &x) in point.iter().enumerate() {
                    let e = m.exp(i);
                    if e > 0 {
                        t *= x.powi(e as i32);
                    }
                }
                t
            })
            .sum()
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars(), "point dimension mismatch");
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut t = Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
                for (i, x) in point.iter().enumerate() {
                    let e = m.exp(i);
                    if e > 0 {
                        t *= x.powi(e as i32);
                    }
                }
                t
            })
            .sum()
    }

    /// Term-wise interval enclosure of the range over a box.
    pub fn eval_interval(&self, point: &[RationalInterval]) -> RationalInterval {
        assert_eq!(point.len(), self.nvars(), "point dimension mismatch");
        let mut powers = PowerCache::new(
            point.to_vec(),
            RationalInterval::point(BigRational::one()),
            |a, b| a * b,
        );
        let mut acc = RationalInterval::point(BigRational::zero());
        for (m, c) in &self.terms {
            let mut t = RationalInterval::point(c.clone());
            for i in 0..self.nvars() {
                if m.exp(i) > 0 {
                    t = &t * &powers.get_interval_pow(i, m.exp(i));
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Substitutes `value` for variable `var`; the result lives in the same
    /// ring and no longer involves `var`.
    pub fn specialize(&self, var: usize, value: &BigRational) -> Self {
        let mut pw: Vec<BigRational> = vec![BigRational::one()];
        Self::from_terms(
            &self.ring,
            self.terms.iter().map(|(m, c)| {
                let e = m.exp(var) as usize;
                while pw.len() <= e {
                    let next = pw.last().unwrap() * value;
                    pw.push(next);
                }
                (m.with_exp(var, 0), c * &pw[e])
            }),
        )
    }

    /// Replaces variable `i` by `images[i]`; the result lives in the ring
    /// of the images.
    pub fn substitute(&self, images: &[MultiPoly]) -> Self {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let ring = images[0].ring().clone();
        let mut pw: Vec<Vec<MultiPoly>> = vec![vec![MultiPoly::one(&ring)]; images.len()];
        let mut acc = MultiPoly::zero(&ring);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&ring, c.clone());
            for (k, img) in images.iter().enumerate() {
                let e = m.exp(k) as usize;
                while pw[k].len() <= e {
                    let next = pw[k].last().unwrap() * img;
                    pw[k].push(next);
                }
                if e > 0 {
                    t = &t * &pw[k][e];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients with respect to `var`, lowest power first; none of them
    /// involves `var`.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = match self.degree_in(var) {
            Some(d) => d as usize,
            None => return Vec::new(),
        };
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(var) as usize].push((m.with_exp(var, 0), c.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Self::from_sorted_terms(&self.ring, b))
            .collect()
    }

    /// Interprets a polynomial in `var` alone as a [`UniPoly`].
    pub fn to_unipoly(&self, var: usize) -> Result<UniPoly, PolyError> {
        let mut coeffs = vec![BigRational::zero(); self.degree_in(var).map_or(0, |d| d as usize + 1)];
        for (m, c) in &self.terms {
            if m.with_exp(var, 0) != Monomial::one() {
                return Err(PolyError::NotUnivariate(self.ring.vars()[var].clone()));
            }
            coeffs[m.exp(var) as usize] += c;
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn from_unipoly(ring: &Arc<Ring>, var: usize, u: &UniPoly) -> Self {
        Self::from_terms(
            ring,
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::one().with_exp(var, k as u32), c.clone())),
        )
    }

    /// Curve polynomial restricted to the affine line `x0 = 1`,
    /// `(x1, x2) = base + λ·dir`, as a polynomial in λ.
    pub fn univariate_restrict(
        &self,
        base: &[BigRational; 2],
        dir: &[BigRational; 2],
    ) -> Result<UniPoly, PolyError> {
        if self.nvars() != 3 {
            return Err(PolyError::VariableCount(self.nvars()));
        }
        if dir[0].is_zero() && dir[1].is_zero() {
            return Err(PolyError::ZeroDirection);
        }
        let lines = [
            UniPoly::new(vec![base[0].clone(), dir[0].clone()]),
            UniPoly::new(vec![base[1].clone(), dir[1].clone()]),
        ];
        let mut pw: [Vec<UniPoly>; 2] = [vec![UniPoly::constant(BigRational::one())], vec![UniPoly::constant(BigRational::one())]];
        let mut acc = UniPoly::zero();
        for (m, c) in &self.terms {
            let mut t = UniPoly::constant(c.clone());
            for k in 0..2 {
                let e = m.exp(k + 1) as usize;
                while pw[k].len() <= e {
                    let next = pw[k].last().unwrap() * &lines[k];
                    pw[k].push(next);
                }
                t = &t * &pw[k][e];
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading_term()?.clone();
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, BigRational)> = Vec::new();
        while let Some((m, c)) = rem.leading_term().cloned() {
            let q = m.checked_div(&lm)?;
            let qc = &c / &lc;
            rem = &rem - &d.mul_monomial(&q, &qc);
            quot.push((q, qc));
        }
        Some(Self::from_terms(&self.ring, quot))
    }

    /// Integer coefficients with content one, and a positive leading
    /// coefficient under graded reverse lex.
    pub fn normalize_integer(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
        let n = self.nvars();
        let lead = self
            .terms
            .iter()
            .max_by_key(|(m, _)| MonomialOrder::GradedRevLex.key(m, n))
            .unwrap();
        if lead.1.is_negative() {
            g = -g;
        }
        self.scale(&BigRational::new(l, g))
    }

    /// Scaled so the leading coefficient (ring order) is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Max absolute coefficient sum, as `f64`.
    pub fn l1_norm_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(_, c)| c.abs().to_f64().unwrap_or(f64::INFINITY))
            .sum()
    }

    /// Equality up to a nonzero rational factor.
    pub fn equals_up_to_scalar(&self, other: &Self) -> bool {
        self.ring.vars() == other.ring.vars()
            && self.normalize_integer().with_ring(&self.ring)
                == other.normalize_integer().with_ring(&self.ring)
    }
}

struct PowerCache<T: Clone, F: Fn(&T, &T) -> T> {
    base: Vec<T>,
    one: T,
    mul: F,
    cache: Vec<Vec<T>>,
}

impl<T: Clone, F: Fn(&T, &T) -> T> PowerCache<T, F> {
    fn new(base: Vec<T>, one: T, mul: F) -> Self {
        let n = base.len();
        Self {
            base,
            one,
            mul,
            cache: vec![Vec::new(); n],
        }
    }

    fn get(&mut self, i: usize, e: u32) -> T {
        let e = e as usize;
        if self.cache[i].is_empty() {
            self.cache[i].push(self.one.clone());
        }
        while self.cache[i].len() <= e {
            let next = (self.mul)(self.cache[i].last().unwrap(), &self.base[i]);
            self.cache[i].push(next);
        }
        self.cache[i][e].clone()
    }
}

impl<F: Fn(&RationalInterval, &RationalInterval) -> RationalInterval> PowerCache<RationalInterval, F> {
    /// Interval powers via `powi`, which is tighter than repeated products
    /// for even exponents of intervals straddling zero.
    fn get_interval_pow(&mut self, i: usize, e: u32) -> RationalInterval {
        let e = e as usize;
        if self.cache[i].is_empty() {
            self.cache[i].push(self.one.clone());
        }
        while self.cache[i].len() <= e {
            let k = self.cache[i].len() as u32;
            let next = self.base[i].powi(k);
            self.cache[i].push(next);
        }
        self.cache[i][e].clone()
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    /// Panics on a ring mismatch; see [`MultiPoly::checked_add`].
    fn add(self, o: &MultiPoly) -> MultiPoly {
        self.checked_add(o).expect("ring mismatch")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        self.checked_sub(o).expect("ring mismatch")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        self.checked_mul(o).expect("ring mismatch")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::from_sorted_terms(&self.ring, self.terms.iter().map(|(m, c)| (*m, -c)).collect())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: MultiPoly) -> MultiPoly {
        &self + &o
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: MultiPoly) -> MultiPoly {
        &self - &o
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: MultiPoly) -> MultiPoly {
        &self * &o
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::mpoly::parse_poly;
    use proptest::prelude::*;

    const ROUNDED_TRIANGLE_P: &str =
        "x0^3 - 3/4*x2*x0^2 - 2*x1^2*x0 - 21/16*x2^2*x0 + 55/64*x2^3 - 3/2*x1^2*x2";

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &Ring::projective("x")).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x0 + x1") * &p("x0 - x1"), p("x0^2 - x1^2"));
        assert_eq!(&p("x0^6 - x1^6 - x2^6") + &p("x1^6 + x2^6"), p("x0^6"));
        assert!((&p("x0^3 + 4") * &p("0")).is_zero());
        let y = Ring::projective("y");
        let q = parse_poly("y0", &y).unwrap();
        assert!(matches!(p("x0").checked_add(&q), Err(PolyError::RingMismatch { .. })));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x0^6 - x1^6 - x2^6").partial_derivative(0), p("6*x0^5"));
        assert_eq!(
            p(ROUNDED_TRIANGLE_P).partial_derivative(2),
            p("-3/4*x0^2 - 42/16*x2*x0 + 165/64*x2^2 - 3/2*x1^2")
        );
        assert!(p("17/3").partial_derivative(1).is_zero());
    }

    #[test]
    fn homogeneity_examples() {
        assert_eq!(p(ROUNDED_TRIANGLE_P).is_homogeneous(), Ok(Some(3)));
        assert_eq!(p("x0^6 - x1^6 - x2^6").is_homogeneous(), Ok(Some(6)));
        assert_eq!(p("x0 + x1^2").is_homogeneous(), Ok(None));
        assert_eq!(p("0").is_homogeneous(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn evaluation_examples() {
        let g = |a: i64, b: i64, c: i64| {
            [a, b, c].map(|v| GaussianRational::from_real(rat(v, 1))).to_vec()
        };
        assert!(p("x0^6 - x1^6 - x2^6").evaluate(&g(1, 1, 0)).is_zero());
        assert!(p("x0^2 + x0*x2 - x1^2").evaluate(&g(1, 0, -1)).is_zero());
        let v = p("x0^2*x1 - 3*x2").evaluate(&[
            GaussianRational::i(),
            GaussianRational::one(),
            GaussianRational::from_real(rat(1, 3)),
        ]);
        assert_eq!(v, GaussianRational::from_real(rat(-2, 1)));
    }

    #[test]
    fn restriction_examples() {
        let z = BigRational::zero;
        let o = BigRational::one;
        let u = p("x0^2 + x0*x2 - x1^2").univariate_restrict(&[z(), z()], &[z(), o()]).unwrap();
        assert_eq!(u, UniPoly::from_ints(&[1, 1]));
        let u = p("x0^6 - x1^6 - x2^6").univariate_restrict(&[z(), z()], &[o(), z()]).unwrap();
        assert_eq!(u, UniPoly::from_ints(&[1, 0, 0, 0, 0, 0, -1]));
        let u = p("x0^2 - x1^2").univariate_restrict(&[z(), z()], &[z(), o()]).unwrap();
        assert_eq!(u.degree(), Some(0));
        assert_eq!(
            p("x0").univariate_restrict(&[z(), z()], &[z(), z()]),
            Err(PolyError::ZeroDirection)
        );
    }

    #[test]
    fn normalization() {
        let q = p("-3/4*x1^2 + 3/2*x0*x2").normalize_integer();
        assert_eq!(q, p("x1^2 - 2*x0*x2"));
        assert!(p("x0 - 2*x1").equals_up_to_scalar(&p("-5*x0 + 10*x1")));
        assert_eq!(p("x0^2 - x1^2").exact_div(&p("x0 + x1")), Some(p("x0 - x1")));
        assert_eq!(p("x0^2 + x1^2").exact_div(&p("x0 + x1")), None);
    }

    fn small_poly(homogeneous: Option<u32>) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(((0u32..4, 0u32..4, 0u32..4), -5i64..=5), 0..6).prop_map(
            move |ts| {
                let r = Ring::projective("x");
                MultiPoly::from_terms(
                    &r,
                    ts.into_iter().map(|((a, b, c), k)| {
                        let e = match homogeneous {
                            Some(d) => [a.min(d), b.min(d - a.min(d)), d - a.min(d) - b.min(d - a.min(d))],
                            None => [a, b, c],
                        };
                        (Monomial::new(&e), rat(k, 1))
                    }),
                )
            },
        )
    }

    proptest! {
        #[test]
        fn euler_identity(f in small_poly(Some(4))) {
            let r = f.ring().clone();
            let mut lhs = MultiPoly::zero(&r);
            for i in 0..3 {
                lhs = &lhs + &(&MultiPoly::var(&r, i) * &f.partial_derivative(i));
            }
            prop_assert_eq!(lhs, f.scale(&rat(4, 1)));
        }

        #[test]
        fn evaluation_is_multiplicative(
            f in small_poly(None),
            g in small_poly(None),
            pt in prop::collection::vec((-4i64..=4, -4i64..=4, 1i64..=3), 3),
        ) {
            let pt: Vec<GaussianRational> = pt
                .into_iter()
                .map(|(a, b, d)| GaussianRational::new(rat(a, d), rat(b, d)))
                .collect();
            prop_assert_eq!((&f * &g).evaluate(&pt), &f.evaluate(&pt) * &g.evaluate(&pt));
        }

        #[test]
        fn interval_evaluation_encloses(f in small_poly(None), a in -6i64..=6, b in -6i64..=6, c in -6i64..=6) {
            let pt = [rat(a, 3), rat(b, 3), rat(c, 3)];
            let boxes: Vec<RationalInterval> = pt
                .iter()
                .map(|x| RationalInterval::new(x - rat(1, 10), x + rat(1, 10)).unwrap())
                .collect();
            prop_assert!(f.eval_interval(&boxes).contains(&f.eval_rational(&pt)));
        }
    }
}

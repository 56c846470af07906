use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::unipoly::{sign_at_int, UniPoly};
use crate::exactnum::{BigRational, RationalInterval};

/// Sturm chain of the squarefree part of a polynomial, kept with primitive
/// integer coefficients (each member is a positive multiple of the classical
/// negated remainder).
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

/// A real root together with an interval that contains no other root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    pub interval: RationalInterval,
    /// Sign variations of the chain at the lower and upper endpoint.
    pub sturm_counts: (usize, usize),
}

impl SturmChain {
    pub fn new(f: &UniPoly) -> Self {
        let p0 = f.squarefree_part();
        let mut chain = vec![p0.integer_coeffs()];
        if p0.degree().unwrap_or(0) == 0 {
            return Self { chain };
        }
        chain.push(p0.derivative().integer_coeffs());
        loop {
            let n = chain.len();
            let r = prem_positive(&chain[n - 2], &chain[n - 1]);
            if r.iter().all(|c| c.is_zero()) {
                break;
            }
            let r = make_primitive_positive_scale(&r);
            let neg: Vec<BigInt> = r.into_iter().map(|c| -c).collect();
            chain.push(neg);
        }
        Self { chain }
    }

    /// The squarefree polynomial heading the chain.
    pub fn head(&self) -> UniPoly {
        UniPoly::from_bigints(&self.chain[0])
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        count_variations(self.chain.iter().map(|p| sign_at_int(p, x)))
    }

    fn variations_at_infinity(&self, positive: bool) -> usize {
        count_variations(self.chain.iter().map(|p| {
            let lead = p.last().expect("nonzero chain member");
            let odd = (p.len() - 1) % 2 == 1;
            let s = if lead.is_positive() {
                Ordering::Greater
            } else {
                Ordering::Less
            };
            if !positive && odd {
                s.reverse()
            } else {
                s
            }
        }))
    }

    pub fn total_real_roots(&self) -> usize {
        self.variations_at_infinity(false) - self.variations_at_infinity(true)
    }

    /// Number of distinct real roots in the closed interval `[lo, hi]`.
    pub fn count_closed(&self, lo: &BigRational, hi: &BigRational) -> usize {
        assert!(lo <= hi);
        let at_lo = usize::from(sign_at_int(&self.chain[0], lo) == Ordering::Equal);
        self.variations_at(lo) - self.variations_at(hi) + at_lo
    }

    pub fn sign_of_head(&self, x: &BigRational) -> Ordering {
        sign_at_int(&self.chain[0], x)
    }

    /// Isolating intervals of all real roots, sorted ascending. Endpoints are
    /// never roots unless the interval is a single point.
    pub fn isolate(&self) -> Vec<IsolatedRoot> {
        if self.chain.len() < 2 {
            return Vec::new();
        }
        let bound = self.head().cauchy_bound().ceil();
        let lo = -bound.clone();
        let hi = bound;
        let mut found: Vec<(BigRational, BigRational)> = Vec::new();
        let mut stack = vec![(lo.clone(), hi.clone(), self.variations_at(&lo), self.variations_at(&hi))];
        while let Some((a, b, va, vb)) = stack.pop() {
            let n = va - vb;
            if n == 0 {
                continue;
            }
            if n == 1 {
                found.push((a, b));
                continue;
            }
            let m = self.split_point(&a, &b);
            let vm = self.variations_at(&m);
            stack.push((a, m.clone(), va, vm));
            stack.push((m, b, vm, vb));
        }
        found.sort_by(|x, y| x.0.cmp(&y.0));

        // Shrink intervals that touch a neighbour so the list is pairwise
        // disjoint.
        for k in 0..found.len() {
            loop {
                let touches_prev = k > 0 && found[k - 1].1 >= found[k].0;
                let touches_next = k + 1 < found.len() && found[k].1 >= found[k + 1].0;
                if !touches_prev && !touches_next {
                    break;
                }
                let (a, b) = found[k].clone();
                found[k] = self.bisect_once(&a, &b);
            }
        }
        found
            .into_iter()
            .map(|(a, b)| {
                let counts = (self.variations_at(&a), self.variations_at(&b));
                IsolatedRoot {
                    interval: RationalInterval::new(a, b).expect("ordered endpoints"),
                    sturm_counts: counts,
                }
            })
            .collect()
    }

    /// A point strictly inside `(a, b)` that is not a root.
    fn split_point(&self, a: &BigRational, b: &BigRational) -> BigRational {
        let w = b - a;
        let mut k: i64 = 1;
        loop {
            // a + w * k / (2k), a + w * k / (2k+1), ... approach the midpoint.
            let t = a + &w * BigRational::new(BigInt::from(k), BigInt::from(2 * k + i64::from(k > 1)));
            if self.sign_of_head(&t) != Ordering::Equal {
                return t;
            }
            k += 1;
        }
    }

    /// One bisection step on an interval holding exactly one simple root.
    pub(crate) fn bisect_once(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        if a == b {
            return (a.clone(), b.clone());
        }
        let sa = self.sign_of_head(a);
        if sa == Ordering::Equal {
            return (a.clone(), a.clone());
        }
        if self.sign_of_head(b) == Ordering::Equal {
            return (b.clone(), b.clone());
        }
        let m = (a + b) / BigRational::from_integer(BigInt::from(2));
        let sm = self.sign_of_head(&m);
        if sm == Ordering::Equal {
            (m.clone(), m)
        } else if sm == sa {
            (m, b.clone())
        } else {
            (a.clone(), m)
        }
    }
}

fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut n = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            n += 1;
        }
        last = s;
    }
    n
}

/// Pseudo-remainder of `a` by `b`, multiplied by a positive constant.
fn prem_positive(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r: Vec<BigInt> = a.to_vec();
    if r.len() <= db {
        return r;
    }
    let lb_abs = lb.abs();
    let lb_sign_neg = lb.is_negative();
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        // r <- |lb| * r - sign(lb) * lr * t^(dr-db) * b
        let g = lr.gcd(&lb_abs);
        let mul_r = &lb_abs / &g;
        let mut mul_b = &lr / &g;
        if lb_sign_neg {
            mul_b = -mul_b;
        }
        for c in r.iter_mut() {
            *c *= &mul_r;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &mul_b * bc;
        }
        debug_assert!(r[dr].is_zero());
        r.pop();
    }
    while r.last().is_some_and(|c| c.is_zero()) {
        r.pop();
    }
    r
}

fn make_primitive_positive_scale(r: &[BigInt]) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in r {
        g = g.gcd(c);
    }
    if g.is_zero() || g.is_one() {
        return r.to_vec();
    }
    r.iter().map(|c| c / &g).collect()
}

/// Isolates every distinct real root of `f`.
pub fn sturm_isolate(f: &UniPoly) -> Vec<IsolatedRoot> {
    if f.is_zero() {
        return Vec::new();
    }
    SturmChain::new(f).isolate()
}

/// True iff every complex root of `f` is real: the number of distinct real
/// roots equals the degree of the squarefree part.
pub fn roots_all_real(f: &UniPoly) -> bool {
    let chain = SturmChain::new(f);
    let deg = chain.head().degree().unwrap_or(0);
    chain.total_real_roots() == deg
}

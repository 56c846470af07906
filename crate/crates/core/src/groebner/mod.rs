//! Gröbner bases, elimination, and dual plane curves.

mod engine;

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;

use crate::exactnum::BigRational;
use crate::mpoly::{squarefree_part, Monomial, MonomialOrder, MultiPoly, PolyError, Ring};
use engine::{Engine, IPoly};
pub use engine::Stats;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroebnerError {
    #[error("ideal has no generators")]
    NoGenerators,
    #[error("intermediate polynomial has {terms} terms, cap is {cap}")]
    TermCap { terms: usize, cap: usize },
    #[error("intermediate coefficient has {bits} bits, cap is {cap}")]
    BitCap { bits: u64, cap: u64 },
    #[error("elimination ideal has {0} generators; expected one")]
    NonPrincipal(usize),
    #[error("input must be a homogeneous polynomial of degree at least 2 in three variables")]
    BadCurve,
    #[error("input is not squarefree")]
    NotSquarefree,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Resource limits for a completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroebnerConfig {
    /// Largest number of terms allowed in any intermediate polynomial.
    pub max_terms: usize,
    /// Largest coefficient bit length allowed anywhere.
    pub max_bits: u64,
}

impl Default for GroebnerConfig {
    fn default() -> Self {
        Self {
            max_terms: 10_000,
            max_bits: 1_000_000,
        }
    }
}

/// Generators over a common ring; the ring's order is the one used.
#[derive(Debug, Clone)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<MultiPoly>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(generators: Vec<MultiPoly>) -> Result<Self, GroebnerError> {
        let ring = generators.first().ok_or(GroebnerError::NoGenerators)?.ring().clone();
        for g in &generators {
            if g.ring().vars() != ring.vars() {
                return Err(PolyError::RingMismatch {
                    left: ring.vars().join(","),
                    right: g.ring().vars().join(","),
                }
                .into());
            }
        }
        let generators = generators
            .into_iter()
            .filter(|g| !g.is_zero())
            .map(|g| g.with_ring(&ring))
            .collect();
        Ok(Self { ring, generators })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }
}

/// Reduced Gröbner basis with monic elements, ascending by leading
/// monomial.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<Ring>,
    elements: Vec<MultiPoly>,
}

impl GroebnerBasis {
    pub fn elements(&self) -> &[MultiPoly] {
        &self.elements
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_constant()
    }

    /// Remainder of `f` on division by the basis.
    pub fn normal_form(&self, f: &MultiPoly) -> MultiPoly {
        let mut rem = MultiPoly::zero(&self.ring);
        let mut p = f.with_ring(&self.ring);
        while let Some((m, c)) = p.leading_term().cloned() {
            match self
                .elements
                .iter()
                .find(|g| g.leading_term().unwrap().0.divides(&m))
            {
                Some(g) => {
                    let (gm, gc) = g.leading_term().unwrap();
                    let q = m.checked_div(gm).unwrap();
                    p = &p - &g.mul_monomial(&q, &(&c / gc));
                }
                None => {
                    let t = MultiPoly::from_terms(&self.ring, [(m, c)]);
                    rem = &rem + &t;
                    p = &p - &t;
                }
            }
        }
        rem
    }

    pub fn contains(&self, f: &MultiPoly) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks Buchberger's criterion directly: every S-polynomial has normal
    /// form zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let n = &self.elements;
        for i in 0..n.len() {
            for j in i + 1..n.len() {
                if !self.normal_form(&s_polynomial(&n[i], &n[j])).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Checks reducedness: monic, and no term of any element is divisible by
    /// another element's leading monomial.
    pub fn is_reduced(&self) -> bool {
        self.elements.iter().enumerate().all(|(i, g)| {
            g.leading_term().map(|(_, c)| c.is_one()).unwrap_or(false)
                && g.terms().iter().all(|(m, _)| {
                    self.elements.iter().enumerate().all(|(j, h)| {
                        i == j || !h.leading_term().unwrap().0.divides(m)
                    })
                })
        })
    }
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fm, fc) = f.leading_term().expect("nonzero").clone();
    let (gm, gc) = g.leading_term().expect("nonzero").clone();
    let l = fm.lcm(&gm);
    let a = f.mul_monomial(&l.checked_div(&fm).unwrap(), &fc.recip());
    let b = g.mul_monomial(&l.checked_div(&gm).unwrap(), &gc.recip());
    &a - &b
}

fn to_ipoly(engine: &Engine, f: &MultiPoly) -> Option<IPoly> {
    let mut l = BigInt::one();
    for (_, c) in f.terms() {
        l = num_integer::Integer::lcm(&l, c.denom());
    }
    engine.make(
        f.terms()
            .iter()
            .map(|(m, c)| (*m, c.numer() * (&l / c.denom()))),
    )
}

fn from_ipoly(ring: &Arc<Ring>, p: &IPoly) -> MultiPoly {
    let lc = BigRational::from_integer(p.terms[0].coeff.clone());
    MultiPoly::from_terms(
        ring,
        p.terms
            .iter()
            .map(|t| (t.mono, BigRational::from_integer(t.coeff.clone()) / &lc)),
    )
}

/// Reduced Gröbner basis under the ideal ring's order, with default limits.
pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis, GroebnerError> {
    buchberger_with(ideal, &GroebnerConfig::default(), None).map(|(g, _)| g)
}

/// Like [`buchberger`], with explicit limits and optional positive variable
/// weights for sugar-degree pair selection.
pub fn buchberger_with(
    ideal: &Ideal,
    cfg: &GroebnerConfig,
    weights: Option<&[u32]>,
) -> Result<(GroebnerBasis, Stats), GroebnerError> {
    let ring = ideal.ring().clone();
    let n = ring.nvars();
    let weights = weights.map(|w| w.to_vec()).unwrap_or_else(|| vec![1; n]);
    assert_eq!(weights.len(), n, "one weight per variable");
    let mut engine = Engine::new(ring.order(), n, weights, *cfg);
    let gens: Vec<IPoly> = ideal
        .generators()
        .iter()
        .filter_map(|g| to_ipoly(&engine, g))
        .collect();
    if gens.is_empty() {
        return Ok((
            GroebnerBasis {
                ring,
                elements: Vec::new(),
            },
            engine.stats,
        ));
    }
    let basis = engine.run(gens)?;
    let elements = basis.iter().map(|p| from_ipoly(&ring, p)).collect();
    Ok((GroebnerBasis { ring, elements }, engine.stats))
}

/// Basis of the elimination ideal `I ∩ k[remaining vars]`, in the original
/// ring. The variables are reordered internally so an elimination order
/// applies; an empty `elim_vars` returns the full reduced basis.
pub fn eliminate(ideal: &Ideal, elim_vars: &[usize]) -> Result<Vec<MultiPoly>, GroebnerError> {
    eliminate_with(ideal, elim_vars, &GroebnerConfig::default(), None).map(|(v, _)| v)
}

pub fn eliminate_with(
    ideal: &Ideal,
    elim_vars: &[usize],
    cfg: &GroebnerConfig,
    weights: Option<&[u32]>,
) -> Result<(Vec<MultiPoly>, Stats), GroebnerError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    if elim_vars.is_empty() {
        let (gb, st) = buchberger_with(ideal, cfg, weights)?;
        return Ok((gb.elements, st));
    }
    let mut perm: Vec<usize> = elim_vars.to_vec();
    perm.sort_unstable();
    perm.dedup();
    let split = perm.len();
    perm.extend((0..n).filter(|v| !elim_vars.contains(v)));
    // perm[new] = old; map[old] = new
    let mut map = vec![0; n];
    for (new, &old) in perm.iter().enumerate() {
        map[old] = new;
    }
    let inner = Ring::new(
        perm.iter().map(|&i| ring.vars()[i].clone()).collect(),
        MonomialOrder::BlockElimination { split },
    )?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.remap(&inner, &map))
        .collect();
    let w: Option<Vec<u32>> = weights.map(|w| perm.iter().map(|&i| w[i]).collect());
    let (gb, st) = buchberger_with(&Ideal::new(gens)?, cfg, w.as_deref())?;
    let out = gb
        .elements
        .iter()
        .filter(|g| (0..split).all(|v| !g.involves(v)))
        .map(|g| g.remap(ring, &perm).monic())
        .collect();
    Ok((out, st))
}

/// Equation of the dual curve of the plane curve `p = 0`, in variables
/// `y0, y1, y2`, normalized to integer content one.
pub fn dual_curve(p: &MultiPoly) -> Result<MultiPoly, GroebnerError> {
    dual_curve_with(p, &GroebnerConfig::default()).map(|(q, _)| q)
}

pub fn dual_curve_with(
    p: &MultiPoly,
    cfg: &GroebnerConfig,
) -> Result<(MultiPoly, Stats), GroebnerError> {
    if p.nvars() != 3 {
        return Err(GroebnerError::BadCurve);
    }
    let d = match p.is_homogeneous()? {
        Some(d) if d >= 2 => d,
        _ => return Err(GroebnerError::BadCurve),
    };
    if !squarefree_part(p)?.equals_up_to_scalar(p) {
        return Err(GroebnerError::NotSquarefree);
    }
    let names: Vec<String> = ["x0", "x1", "x2", "y0", "y1", "y2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let big = Ring::new(names, MonomialOrder::BlockElimination { split: 3 })?;
    let px = p.remap(&big, &[0, 1, 2]);
    let mut gens = vec![px.clone()];
    for i in 0..3 {
        gens.push(&px.partial_derivative(i) - &MultiPoly::var(&big, 3 + i));
    }
    let w = [1, 1, 1, d - 1, d - 1, d - 1];
    let (gb, st) = buchberger_with(&Ideal::new(gens)?, cfg, Some(&w))?;
    let elim: Vec<&MultiPoly> = gb
        .elements()
        .iter()
        .filter(|g| (0..3).all(|v| !g.involves(v)))
        .collect();
    if elim.len() != 1 {
        return Err(GroebnerError::NonPrincipal(elim.len()));
    }
    let y = Ring::projective("y");
    let q = MultiPoly::from_terms(
        &y,
        elim[0].terms().iter().map(|(m, c)| {
            (Monomial::new(&[m.exp(3), m.exp(4), m.exp(5)]), c.clone())
        }),
    );
    Ok((squarefree_part(&q)?, st))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::mpoly::parse_poly;
    use proptest::prelude::*;

    fn ring(order: MonomialOrder) -> Arc<Ring> {
        Ring::new(vec!["x0".into(), "x1".into(), "x2".into()], order).unwrap()
    }

    fn ps(r: &Arc<Ring>, gens: &[&str]) -> Ideal {
        Ideal::new(gens.iter().map(|s| parse_poly(s, r).unwrap()).collect()).unwrap()
    }

    #[test]
    fn twisted_cubic_lex() {
        let r = ring(MonomialOrder::Lex);
        let gb = buchberger(&ps(&r, &["x0^2 - x1", "x0^3 - x2"])).unwrap();
        let want: Vec<MultiPoly> = ["x1^3 - x2^2", "x0*x2 - x1^2", "x0*x1 - x2", "x0^2 - x1"]
            .iter()
            .map(|s| parse_poly(s, &r).unwrap())
            .collect();
        assert_eq!(gb.elements(), &want[..]);
        assert!(gb.satisfies_buchberger_criterion());
        assert!(gb.is_reduced());
    }

    #[test]
    fn twisted_cubic_elimination() {
        let r = ring(MonomialOrder::GradedRevLex);
        let elim = eliminate(&ps(&r, &["x0^2 - x1", "x0^3 - x2"]), &[0]).unwrap();
        assert_eq!(elim, vec![parse_poly("x1^3 - x2^2", &r).unwrap()]);
        let full = eliminate(&ps(&r, &["x0^2 - x1", "x0^3 - x2"]), &[]).unwrap();
        assert!(full.len() >= 2);
    }

    #[test]
    fn trivial_ideals() {
        let r = ring(MonomialOrder::GradedRevLex);
        let gb = buchberger(&ps(&r, &["x0", "x1", "1"])).unwrap();
        assert!(gb.is_unit());
        assert_eq!(eliminate(&ps(&r, &["x0", "x1", "1"]), &[0, 1]).unwrap().len(), 1);
        let gb = buchberger(&ps(&r, &["6*x0^2 - 4*x1*x2"])).unwrap();
        assert_eq!(gb.elements(), &[parse_poly("x0^2 - 2/3*x1*x2", &r).unwrap()]);
        assert_eq!(Ideal::new(vec![]).unwrap_err(), GroebnerError::NoGenerators);
    }

    #[test]
    fn caps_are_enforced() {
        let r = ring(MonomialOrder::Lex);
        let cfg = GroebnerConfig { max_terms: 2, max_bits: 1_000_000 };
        let err = buchberger_with(&ps(&r, &["x0^2 - x1 + x2", "x0^3 - x2 + 1"]), &cfg, None);
        assert!(matches!(err, Err(GroebnerError::TermCap { .. })));
    }

    #[test]
    fn conic_dual() {
        let x = Ring::projective("x");
        let y = Ring::projective("y");
        let q = dual_curve(&parse_poly("x0^2 - x1^2 - x2^2", &x).unwrap()).unwrap();
        assert_eq!(q, parse_poly("y0^2 - y1^2 - y2^2", &y).unwrap());
        let q = dual_curve(&parse_poly("x0^2 + x0*x2 - x1^2", &x).unwrap()).unwrap();
        assert!(q.equals_up_to_scalar(&parse_poly("y1^2 - 4*y0*y2 + 4*y2^2", &y).unwrap()));
    }

    #[test]
    fn rounded_triangle_dual() {
        let x = Ring::projective("x");
        let p = parse_poly(
            "x0^3 - 3/4*x2*x0^2 - 2*x1^2*x0 - 21/16*x2^2*x0 + 55/64*x2^3 - 3/2*x1^2*x2",
            &x,
        )
        .unwrap();
        let q = dual_curve(&p).unwrap();
        let want = parse_poly(
            "1485*y0^6 - 3672*y2*y0^5 - 15282*y1^2*y0^4 - 2448*y2^2*y0^4 + 12032*y2^3*y0^3 \
             - 19872*y1^2*y2*y0^3 + 9504*y1^4*y0^2 - 5376*y2^4*y0^2 + 21312*y1^2*y2^2*y0^2 \
             - 6144*y2^5*y0 + 13824*y1^2*y2^3*y0 + 27648*y1^4*y2*y0 + 864*y1^6 + 4096*y2^6 \
             - 4608*y1^2*y2^4 + 13824*y1^4*y2^2",
            &Ring::projective("y"),
        )
        .unwrap();
        assert_eq!(q, want);
    }

    #[test]
    fn rejects_bad_curves() {
        let x = Ring::projective("x");
        let f = |s| parse_poly(s, &x).unwrap();
        assert_eq!(dual_curve(&f("x0 + x1")), Err(GroebnerError::BadCurve));
        assert_eq!(dual_curve(&f("x0^2 + x1")), Err(GroebnerError::BadCurve));
        assert_eq!(dual_curve(&f("(x0 - x1)^2")), Err(GroebnerError::NotSquarefree));
    }

    /// Symmetric 3x3 integer matrix with nonzero determinant, and its adjugate.
    fn conic_and_adjugate(a: [i64; 6]) -> Option<([[i64; 3]; 3], [[i64; 3]; 3])> {
        let m = [[a[0], a[1], a[2]], [a[1], a[3], a[4]], [a[2], a[4], a[5]]];
        let c = |i: usize, j: usize| {
            let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let s: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let minor = m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]];
            if (i + j) % 2 == 0 { minor } else { -minor }
        };
        let adj = [[c(0, 0), c(1, 0), c(2, 0)], [c(0, 1), c(1, 1), c(2, 1)], [c(0, 2), c(1, 2), c(2, 2)]];
        let det = m[0][0] * adj[0][0] + m[0][1] * adj[1][0] + m[0][2] * adj[2][0];
        (det != 0).then_some((m, adj))
    }

    fn quadric(r: &Arc<Ring>, m: &[[i64; 3]; 3]) -> MultiPoly {
        let mut terms = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                let mut e = [0u32; 3];
                e[i] += 1;
                e[j] += 1;
                terms.push((Monomial::new(&e), rat(m[i][j], 1)));
            }
        }
        MultiPoly::from_terms(r, terms)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn conic_duality_matches_adjugate(a in prop::array::uniform6(-4i64..=4)) {
            prop_assume!(conic_and_adjugate(a).is_some());
            let (m, adj) = conic_and_adjugate(a).unwrap();
            let x = Ring::projective("x");
            let y = Ring::projective("y");
            let c = quadric(&x, &m);
            let q = dual_curve(&c).unwrap();
            prop_assert!(q.equals_up_to_scalar(&quadric(&y, &adj)));
            let back = dual_curve(&q.with_ring(&y)).unwrap();
            prop_assert!(back.equals_up_to_scalar(&quadric(&y, &m)));
        }
    }
}

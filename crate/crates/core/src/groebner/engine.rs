//! Buchberger's algorithm over the integers, with Gebauer–Möller pair
//! pruning and sugar-degree pair selection.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{GroebnerConfig, GroebnerError};
use crate::mpoly::{Monomial, MonomialOrder, OrderKey};

#[derive(Debug, Clone)]
pub(crate) struct Term {
    pub key: OrderKey,
    pub mono: Monomial,
    pub coeff: BigInt,
}

/// Primitive integer polynomial, terms sorted descending.
#[derive(Debug, Clone)]
pub(crate) struct IPoly {
    pub terms: Vec<Term>,
    pub sugar: u32,
}

impl IPoly {
    fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].coeff
    }
}

pub(crate) struct Engine {
    order: MonomialOrder,
    nvars: usize,
    weights: Vec<u32>,
    cfg: GroebnerConfig,
    polys: Vec<IPoly>,
    active: Vec<usize>,
    pairs: Vec<(usize, usize, Monomial)>,
    pub stats: Stats,
}

#[derive(Debug, Default, Clone, Copy)]
pub struct Stats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub basis_size: usize,
    pub max_terms_seen: usize,
    pub max_bits_seen: u64,
}

impl Engine {
    pub fn new(order: MonomialOrder, nvars: usize, weights: Vec<u32>, cfg: GroebnerConfig) -> Self {
        Self {
            order,
            nvars,
            weights,
            cfg,
            polys: Vec::new(),
            active: Vec::new(),
            pairs: Vec::new(),
            stats: Stats::default(),
        }
    }

    fn wdeg(&self, m: &Monomial) -> u32 {
        (0..self.nvars).map(|i| m.exp(i) * self.weights[i]).sum()
    }

    pub fn make(&self, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Option<IPoly> {
        let mut v: Vec<Term> = terms
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term {
                key: self.order.key(&mono, self.nvars),
                mono,
                coeff,
            })
            .collect();
        if v.is_empty() {
            return None;
        }
        v.sort_by(|a, b| b.key.cmp(&a.key));
        let sugar = v.iter().map(|t| self.wdeg(&t.mono)).max().unwrap();
        let mut p = IPoly { terms: v, sugar };
        make_primitive(&mut p.terms);
        Some(p)
    }

    /// Runs the completion. Returns the reduced basis.
    pub fn run(&mut self, gens: Vec<IPoly>) -> Result<Vec<IPoly>, GroebnerError> {
        let mut gens = gens;
        gens.sort_by(|a, b| {
            (a.sugar, a.terms[0].key).cmp(&(b.sugar, b.terms[0].key))
        });
        for g in gens {
            if let Some(h) = self.reduce(g, true)? {
                if h.terms[0].mono.is_one() {
                    return Ok(vec![h]);
                }
                self.insert(h);
            }
        }
        while let Some((i, j, lcm)) = self.pop_pair() {
            let s = self.spoly(i, j, &lcm);
            self.stats.pairs_reduced += 1;
            match s {
                None => self.stats.zero_reductions += 1,
                Some(s) => match self.reduce(s, true)? {
                    None => self.stats.zero_reductions += 1,
                    Some(h) => {
                        if h.terms[0].mono.is_one() {
                            return Ok(vec![h]);
                        }
                        self.insert(h);
                    }
                },
            }
        }
        self.interreduce()
    }

    fn pop_pair(&mut self) -> Option<(usize, usize, Monomial)> {
        if self.pairs.is_empty() {
            return None;
        }
        let best = (0..self.pairs.len())
            .min_by_key(|&k| {
                let (i, j, lcm) = &self.pairs[k];
                (self.pair_sugar(*i, *j, lcm), self.order.key(lcm, self.nvars))
            })
            .unwrap();
        Some(self.pairs.swap_remove(best))
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = self.wdeg(lcm);
        let a = &self.polys[i];
        let b = &self.polys[j];
        (a.sugar + d - self.wdeg(a.lm())).max(b.sugar + d - self.wdeg(b.lm()))
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> Option<IPoly> {
        let f = &self.polys[i];
        let g = &self.polys[j];
        let gc = f.lc().gcd(g.lc());
        let cf = g.lc() / &gc;
        let cg = f.lc() / &gc;
        let mf = lcm.checked_div(f.lm()).unwrap();
        let mg = lcm.checked_div(g.lm()).unwrap();
        let mut acc: BTreeMap<OrderKey, (Monomial, BigInt)> = BTreeMap::new();
        for t in &f.terms[1..] {
            let m = t.mono.mul(&mf);
            acc.insert(self.order.key(&m, self.nvars), (m, &t.coeff * &cf));
        }
        for t in &g.terms[1..] {
            let m = t.mono.mul(&mg);
            let key = self.order.key(&m, self.nvars);
            let c = &t.coeff * &cg;
            match acc.get_mut(&key) {
                Some(e) => {
                    e.1 -= c;
                    if e.1.is_zero() {
                        acc.remove(&key);
                    }
                }
                None => {
                    acc.insert(key, (m, -c));
                }
            }
        }
        let sugar = self.pair_sugar(i, j, lcm);
        let mut p = self.make(acc.into_values())?;
        p.sugar = sugar;
        Some(p)
    }

    fn find_reducer(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &k in &self.active {
            if Some(k) == skip {
                continue;
            }
            if self.polys[k].lm().divides(m) {
                match best {
                    Some(b) if self.polys[b].terms.len() <= self.polys[k].terms.len() => {}
                    _ => best = Some(k),
                }
            }
        }
        best
    }

    /// Fraction-free normal form with respect to the active set
    /// (optionally skipping one index).
    fn reduce(&mut self, p: IPoly, full: bool) -> Result<Option<IPoly>, GroebnerError> {
        self.reduce_skip(p, full, None)
    }

    fn reduce_skip(
        &mut self,
        p: IPoly,
        full: bool,
        skip: Option<usize>,
    ) -> Result<Option<IPoly>, GroebnerError> {
        let sugar = p.sugar;
        let mut work: BTreeMap<OrderKey, (Monomial, BigInt)> = p
            .terms
            .into_iter()
            .map(|t| (t.key, (t.mono, t.coeff)))
            .collect();
        let mut done: Vec<Term> = Vec::new();
        let mut steps = 0usize;
        let mut sugar_out = sugar;
        while let Some((key, (mono, coeff))) = work.pop_last() {
            let r = match self.find_reducer(&mono, skip) {
                Some(r) => r,
                None => {
                    done.push(Term { key, mono, coeff });
                    if !full {
                        for (key, (mono, coeff)) in std::mem::take(&mut work).into_iter().rev() {
                            done.push(Term { key, mono, coeff });
                        }
                    }
                    continue;
                }
            };
            let g = &self.polys[r];
            let gc = coeff.gcd(g.lc());
            let a = g.lc() / &gc;
            let b = &coeff / &gc;
            if !a.is_one() {
                for (_, c) in work.values_mut() {
                    *c *= &a;
                }
                for t in done.iter_mut() {
                    t.coeff *= &a;
                }
            }
            let q = mono.checked_div(g.lm()).unwrap();
            sugar_out = sugar_out.max(g.sugar + self.wdeg(&q));
            for t in &g.terms[1..] {
                let m = t.mono.mul(&q);
                let k = self.order.key(&m, self.nvars);
                let c = &t.coeff * &b;
                match work.get_mut(&k) {
                    Some(e) => {
                        e.1 -= c;
                        if e.1.is_zero() {
                            work.remove(&k);
                        }
                    }
                    None => {
                        work.insert(k, (m, -c));
                    }
                }
            }
            steps += 1;
            if steps % 16 == 0 {
                self.strip_content(&mut work, &mut done)?;
            }
        }
        if done.is_empty() {
            return Ok(None);
        }
        make_primitive(&mut done);
        self.check_caps(&done)?;
        Ok(Some(IPoly {
            terms: done,
            sugar: sugar_out,
        }))
    }

    fn strip_content(
        &mut self,
        work: &mut BTreeMap<OrderKey, (Monomial, BigInt)>,
        done: &mut [Term],
    ) -> Result<(), GroebnerError> {
        let mut g = BigInt::zero();
        let mut bits = 0u64;
        for c in work.values().map(|e| &e.1).chain(done.iter().map(|t| &t.coeff)) {
            bits = bits.max(c.bits());
            if !g.is_one() {
                g = g.gcd(c);
            }
        }
        let terms = work.len() + done.len();
        self.stats.max_terms_seen = self.stats.max_terms_seen.max(terms);
        self.stats.max_bits_seen = self.stats.max_bits_seen.max(bits);
        if terms > self.cfg.max_terms {
            return Err(GroebnerError::TermCap {
                terms,
                cap: self.cfg.max_terms,
            });
        }
        if bits > self.cfg.max_bits {
            return Err(GroebnerError::BitCap {
                bits,
                cap: self.cfg.max_bits,
            });
        }
        if g > BigInt::one() {
            for (_, c) in work.values_mut() {
                *c /= &g;
            }
            for t in done.iter_mut() {
                t.coeff /= &g;
            }
        }
        Ok(())
    }

    fn check_caps(&mut self, terms: &[Term]) -> Result<(), GroebnerError> {
        let bits = terms.iter().map(|t| t.coeff.bits()).max().unwrap_or(0);
        self.stats.max_terms_seen = self.stats.max_terms_seen.max(terms.len());
        self.stats.max_bits_seen = self.stats.max_bits_seen.max(bits);
        if terms.len() > self.cfg.max_terms {
            return Err(GroebnerError::TermCap {
                terms: terms.len(),
                cap: self.cfg.max_terms,
            });
        }
        if bits > self.cfg.max_bits {
            return Err(GroebnerError::BitCap {
                bits,
                cap: self.cfg.max_bits,
            });
        }
        Ok(())
    }

    /// Gebauer–Möller update for a new basis element.
    fn insert(&mut self, h: IPoly) {
        let hi = self.polys.len();
        let hlm = *h.lm();
        self.polys.push(h);

        let mut cands: Vec<(usize, Monomial, bool)> = self
            .active
            .iter()
            .map(|&g| {
                let glm = self.polys[g].lm();
                (g, hlm.lcm(glm), hlm.is_coprime(glm))
            })
            .collect();
        cands.reverse();
        // Criterion M inside the new pairs; coprime pairs stay long enough
        // to dominate others and are then dropped by the product criterion.
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g, l, coprime)) = cands.pop() {
            let dominated = cands
                .iter()
                .chain(kept.iter())
                .any(|(_, l2, _)| l2.divides(&l));
            if coprime || !dominated {
                kept.push((g, l, coprime));
            }
        }
        // Criterion B on the old pairs.
        let polys = &self.polys;
        self.pairs.retain(|(i, j, l)| {
            !(hlm.divides(l)
                && hlm.lcm(polys[*i].lm()) != *l
                && hlm.lcm(polys[*j].lm()) != *l)
        });
        for (g, l, coprime) in kept {
            if !coprime {
                self.pairs.push((g, hi, l));
            }
        }
        self.active.retain(|&g| !hlm.divides(polys[g].lm()));
        self.active.push(hi);
        self.stats.basis_size = self.active.len();
    }

    fn interreduce(&mut self) -> Result<Vec<IPoly>, GroebnerError> {
        let mut idx = self.active.clone();
        idx.sort_by(|a, b| self.polys[*a].terms[0].key.cmp(&self.polys[*b].terms[0].key));
        for &k in &idx {
            let p = self.polys[k].clone();
            let r = self
                .reduce_skip(p, true, Some(k))?
                .expect("minimal basis element cannot reduce to zero");
            self.polys[k] = r;
        }
        Ok(idx.into_iter().map(|k| self.polys[k].clone()).collect())
    }
}

fn make_primitive(terms: &mut [Term]) {
    let mut g = BigInt::zero();
    for t in terms.iter() {
        g = g.gcd(&t.coeff);
        if g.is_one() {
            break;
        }
    }
    if terms[0].coeff.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in terms.iter_mut() {
            t.coeff /= &g;
        }
    }
}

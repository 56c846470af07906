use std::fmt;

/// Upper bound on the number of variables of a polynomial ring. The
/// elimination ring for dual curves needs six.
pub const MAX_VARS: usize = 6;

/// Exponent vector; slots past the ring's variable count stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Panics if more than [`MAX_VARS`] exponents are given or one exceeds
    /// `u16::MAX`.
    pub fn new(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = [0u16; MAX_VARS];
        for (slot, &e) in m.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        Self(m)
    }

    pub fn var(i: usize) -> Self {
        let mut m = Self::one();
        m.0[i] = 1;
        m
    }

    pub fn exp(&self, i: usize) -> u32 {
        u32::from(self.0[i])
    }

    pub fn exps(&self) -> &[u16; MAX_VARS] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        Self(m)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Self(m)
    }

    /// True when the monomials share no variable.
    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = a.checked_add(*b).expect("exponent overflow");
        }
        Self(m)
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(other.0.iter()) {
            *a = a.checked_sub(*b)?;
        }
        Some(Self(m))
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Self {
        let mut m = self.0;
        m[i] = u16::try_from(e).expect("exponent overflow");
        Self(m)
    }

    /// Exponents moved to new slots: variable `i` goes to `map[i]`.
    pub fn remap(&self, map: &[usize]) -> Self {
        let mut m = [0u16; MAX_VARS];
        for (i, &j) in map.iter().enumerate() {
            m[j] = self.0[i];
        }
        Self(m)
    }
}

/// Sort key whose lexicographic order realizes a monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrderKey([u16; MAX_VARS + 2]);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum MonomialOrder {
    #[default]
    GradedRevLex,
    Lex,
    /// Total degree first, then lexicographic. Used for printing.
    GradedLex,
    /// The first `split` variables form an eliminated block compared before
    /// the rest; each block is graded reverse lexicographic.
    BlockElimination { split: usize },
}

impl MonomialOrder {
    pub fn key(&self, m: &Monomial, nvars: usize) -> OrderKey {
        let mut k = [0u16; MAX_VARS + 2];
        let e = m.exps();
        match *self {
            MonomialOrder::Lex => k[..nvars].copy_from_slice(&e[..nvars]),
            MonomialOrder::GradedLex => {
                k[0] = m.degree() as u16;
                k[1..nvars].copy_from_slice(&e[..nvars - 1]);
            }
            MonomialOrder::GradedRevLex => grevlex_key(&e[..nvars], &mut k[..]),
            MonomialOrder::BlockElimination { split } => {
                let s = split.min(nvars);
                grevlex_key(&e[..s], &mut k[..]);
                grevlex_key(&e[s..nvars], &mut k[s..]);
            }
        }
        OrderKey(k)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial, nvars: usize) -> std::cmp::Ordering {
        self.key(a, nvars).cmp(&self.key(b, nvars))
    }
}

/// Writes `deg, MAX - e[n-1], ..., MAX - e[1]` into `out`; `n` slots in all.
fn grevlex_key(e: &[u16], out: &mut [u16]) {
    if e.is_empty() {
        return;
    }
    out[0] = e.iter().sum();
    for (slot, x) in out[1..e.len()].iter_mut().zip(e[1..].iter().rev()) {
        *slot = u16::MAX - x;
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::GradedRevLex => f.write_str("grevlex"),
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::GradedLex => f.write_str("deglex"),
            MonomialOrder::BlockElimination { split } => write!(f, "block({split})"),
        }
    }
}
